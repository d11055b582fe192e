//! Bounce setpoint after a collision and point-mass recovery under a
//! cascaded position/velocity controller.
//!
//! World frame is z-down: altitude is `−z` and the ground is `z = 0`.

use alloc::vec::Vec;

use thiserror::Error;

use crate::linalg::{norm3, Vec3};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReactionError {
    #[error("pre-collision velocity is zero; bounce normal undefined")]
    ZeroVelocity,
    #[error("bounce distance must be positive, got {0}")]
    Distance(f64),
    #[error("invalid collision event: {0}")]
    Event(&'static str),
    #[error("invalid simulation settings: {0}")]
    Settings(&'static str),
    #[error("simulation diverged at t = {0} s")]
    Divergence(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollisionEvent {
    /// Collision position (m).
    pub x_c: Vec3,
    /// Velocity just before impact (m/s).
    pub v_pre: Vec3,
    /// Collision time (s).
    pub t_c: f64,
    /// Duration of the partial thrust loss (s).
    pub outage: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReactionPlan {
    /// Unit vector opposite the flight direction.
    pub n_r: Vec3,
    pub d_r: f64,
    /// Equilibrium setpoint `x_c + d_r n_r`.
    pub x_r: Vec3,
}

/// `n_r = −v/|v|`, `x_r = x_c + d_r n_r`.
pub fn bounce_setpoint(ev: &CollisionEvent, d_r: f64) -> Result<ReactionPlan, ReactionError> {
    if !(d_r > 0.0 && d_r.is_finite()) {
        return Err(ReactionError::Distance(d_r));
    }
    let speed = norm3(ev.v_pre);
    if !(speed > 0.0) || !speed.is_finite() {
        return Err(ReactionError::ZeroVelocity);
    }
    let n_r = [-ev.v_pre[0] / speed, -ev.v_pre[1] / speed, -ev.v_pre[2] / speed];
    let x_r = [ev.x_c[0] + d_r * n_r[0], ev.x_c[1] + d_r * n_r[1], ev.x_c[2] + d_r * n_r[2]];
    Ok(ReactionPlan { n_r, d_r, x_r })
}

/// Position-P over velocity-PID gains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gains {
    /// 1/s
    pub kp_pos: f64,
    /// 1/s
    pub kp_vel: f64,
    /// 1/s²
    pub ki_vel: f64,
    pub kd_vel: f64,
}

impl Default for Gains {
    /// Found by grid search on the 2 m, 0.46 s outage scenario.
    fn default() -> Self {
        Gains { kp_pos: 2.0, kp_vel: 8.0, ki_vel: 2.0, kd_vel: 0.05 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecoverySim {
    pub gains: Gains,
    /// Position, velocity and integration loop rates (Hz). The inner rate must
    /// be a multiple of the other two.
    pub rates: [u32; 3],
    /// m/s²
    pub gravity: f64,
    /// Largest total thrust as a multiple of gravity.
    pub thrust_max_g: f64,
    /// Largest tilt of the thrust vector from vertical (rad).
    pub tilt_max: f64,
    /// Velocity command limit (m/s).
    pub v_max: f64,
    /// Fraction of commanded thrust lost during the outage (one rotor of four).
    pub outage_loss: f64,
    /// Velocity-integrator clamp (m/s).
    pub integral_limit: f64,
    /// Settle radius (m) and dwell time (s) for the recovery time.
    pub settle_radius: f64,
    pub dwell: f64,
    /// Keep every n-th integration step in the trajectory.
    pub record_every: usize,
}

impl Default for RecoverySim {
    fn default() -> Self {
        RecoverySim {
            gains: Gains::default(),
            rates: [50, 250, 1000],
            gravity: 9.81,
            thrust_max_g: 2.0,
            tilt_max: 35f64.to_radians(),
            v_max: 2.0,
            outage_loss: 0.25,
            integral_limit: 5.0,
            settle_radius: 0.1,
            dwell: 2.0,
            record_every: 10,
        }
    }
}

impl RecoverySim {
    fn validate(&self) -> Result<(), ReactionError> {
        let g = self.gains;
        if ![g.kp_pos, g.kp_vel, g.ki_vel, g.kd_vel].iter().all(|v| v.is_finite()) {
            return Err(ReactionError::Settings("gains must be finite"));
        }
        let [outer, mid, inner] = self.rates;
        if outer == 0 || mid == 0 || inner % outer != 0 || inner % mid != 0 {
            return Err(ReactionError::Settings("inner rate must be a multiple of the outer rates"));
        }
        if !(self.gravity >= 0.0 && self.thrust_max_g > 0.0 && self.tilt_max > 0.0 && self.v_max > 0.0) {
            return Err(ReactionError::Settings("limits must be positive"));
        }
        if !(0.0..=1.0).contains(&self.outage_loss) {
            return Err(ReactionError::Settings("outage loss must lie in [0, 1]"));
        }
        if !(self.settle_radius > 0.0 && self.dwell >= 0.0 && self.integral_limit >= 0.0) || self.record_every == 0 {
            return Err(ReactionError::Settings("settle radius, dwell and recording interval"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectorySample {
    pub t: f64,
    pub pos: Vec3,
    pub vel: Vec3,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecoveryMetrics {
    /// Time after the collision from which the vehicle stays within the settle
    /// radius of the setpoint; `None` if that never holds for the dwell time.
    pub dt_recovery: Option<f64>,
    /// Largest altitude loss below the collision point (m).
    pub dh_fall: f64,
    pub crashed: bool,
}

fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Integrates from the collision (velocity zeroed at `x_c`) for `duration`
/// seconds. Stops early on ground contact.
pub fn simulate_recovery(
    ev: &CollisionEvent,
    plan: &ReactionPlan,
    sim: &RecoverySim,
    duration: f64,
) -> Result<(Vec<TrajectorySample>, RecoveryMetrics), ReactionError> {
    sim.validate()?;
    if !(ev.outage >= 0.0 && ev.outage.is_finite()) {
        return Err(ReactionError::Event("outage must be non-negative"));
    }
    if ![ev.t_c, ev.x_c[0], ev.x_c[1], ev.x_c[2]].iter().all(|v| v.is_finite()) {
        return Err(ReactionError::Event("non-finite collision state"));
    }
    if !(duration > ev.outage && duration.is_finite()) {
        return Err(ReactionError::Settings("duration must exceed the outage"));
    }
    let [outer, mid, inner] = sim.rates;
    let dt = 1.0 / inner as f64;
    let outer_every = (inner / outer) as usize;
    let mid_every = (inner / mid) as usize;
    let dt_mid = 1.0 / mid as f64;
    let steps = libm::ceil(duration * inner as f64) as usize;
    let g = sim.gains;
    let grav = [0.0, 0.0, sim.gravity];
    let t_max = sim.thrust_max_g * sim.gravity.max(1.0);
    let tan_tilt = libm::tan(sim.tilt_max);

    let mut pos = ev.x_c;
    let mut vel = [0.0; 3];
    let mut v_cmd = [0.0; 3];
    let mut integ = [0.0; 3];
    let mut prev_err: Option<Vec3> = None;
    let mut thrust = [0.0, 0.0, -sim.gravity];
    let mut traj = Vec::with_capacity(steps / sim.record_every + 2);
    traj.push(TrajectorySample { t: ev.t_c, pos, vel });
    let mut dh_fall = 0.0f64;
    let mut crashed = false;
    let mut last_outside: Option<f64> = None;
    if norm3(sub(pos, plan.x_r)) > sim.settle_radius {
        last_outside = Some(0.0);
    }
    let mut elapsed = 0.0;

    for k in 0..steps {
        if k % outer_every == 0 {
            let e = sub(plan.x_r, pos);
            v_cmd = [g.kp_pos * e[0], g.kp_pos * e[1], g.kp_pos * e[2]];
            let n = norm3(v_cmd);
            if n > sim.v_max {
                let s = sim.v_max / n;
                v_cmd = [v_cmd[0] * s, v_cmd[1] * s, v_cmd[2] * s];
            }
        }
        if k % mid_every == 0 {
            let e = sub(v_cmd, vel);
            let de = prev_err.map(|p| sub(e, p)).unwrap_or([0.0; 3]);
            prev_err = Some(e);
            let mut a_cmd = [0.0; 3];
            for i in 0..3 {
                integ[i] = (integ[i] + e[i] * dt_mid).clamp(-sim.integral_limit, sim.integral_limit);
                a_cmd[i] = g.kp_vel * e[i] + g.ki_vel * integ[i] + g.kd_vel * de[i] / dt_mid;
            }
            thrust = limit_thrust(sub(a_cmd, grav), t_max, tan_tilt);
        }
        let loss = if elapsed < ev.outage { sim.outage_loss } else { 0.0 };
        let f = 1.0 - loss;
        for i in 0..3 {
            vel[i] += (f * thrust[i] + grav[i]) * dt;
            pos[i] += vel[i] * dt;
        }
        elapsed = (k + 1) as f64 * dt;
        if !pos.iter().chain(vel.iter()).all(|v| v.is_finite()) {
            return Err(ReactionError::Divergence(ev.t_c + elapsed));
        }
        dh_fall = dh_fall.max(pos[2] - ev.x_c[2]);
        if norm3(sub(pos, plan.x_r)) > sim.settle_radius {
            last_outside = Some(elapsed);
        }
        let ground = pos[2] >= 0.0;
        if (k + 1) % sim.record_every == 0 || k + 1 == steps || ground {
            traj.push(TrajectorySample { t: ev.t_c + elapsed, pos, vel });
        }
        if ground {
            crashed = true;
            break;
        }
    }

    let settle_from = last_outside.unwrap_or(0.0);
    let dt_recovery = if !crashed && elapsed - settle_from >= sim.dwell { Some(settle_from) } else { None };
    Ok((traj, RecoveryMetrics { dt_recovery, dh_fall, crashed }))
}

/// Keeps the thrust pointing up, within the tilt cone and below `t_max`,
/// giving the vertical component priority.
fn limit_thrust(t: Vec3, t_max: f64, tan_tilt: f64) -> Vec3 {
    let tz = t[2].clamp(-t_max, 0.0);
    let h = libm::hypot(t[0], t[1]);
    let h_cap = (-tz * tan_tilt).min(libm::sqrt((t_max * t_max - tz * tz).max(0.0)));
    let s = if h > h_cap && h > 0.0 { h_cap / h } else { 1.0 };
    [t[0] * s, t[1] * s, tz]
}
