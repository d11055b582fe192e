use alloc::vec;
use alloc::vec::Vec;

use super::{GeometryError, PropellerGeometry};
use crate::linalg::{lstsq, LinalgError};

/// Polynomial in the scaled variable `t = (x − center) / half_width`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    /// Coefficients of `t^0, t^1, …`.
    pub coeffs: Vec<f64>,
    pub center: f64,
    pub half_width: f64,
}

impl Polynomial {
    pub fn eval(&self, x: f64) -> f64 {
        let t = (x - self.center) / self.half_width;
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

/// Piecewise polynomial on `[breaks[0], breaks[k]]`; piece `i` covers
/// `[breaks[i], breaks[i+1])`, the last piece also owns the right end.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewisePolynomial {
    pub breaks: Vec<f64>,
    pub pieces: Vec<Polynomial>,
}

impl PiecewisePolynomial {
    pub fn segment_of(&self, x: f64) -> usize {
        let n = self.pieces.len();
        // breaks[1..n] are the interior breakpoints
        self.breaks[1..n].iter().take_while(|&&b| x >= b).count()
    }

    /// Evaluates without a domain check; points outside use the end pieces.
    pub fn eval(&self, x: f64) -> f64 {
        self.pieces[self.segment_of(x)].eval(x)
    }
}

/// Segmentation and per-segment polynomial orders.
#[derive(Debug, Clone, PartialEq)]
pub struct FitConfig {
    /// Interior breakpoints, strictly increasing inside `(0, R)`.
    pub breakpoints: Vec<f64>,
    /// One order per segment.
    pub orders: Vec<usize>,
}

impl FitConfig {
    /// Two segments split at the nodus end: quadratic inboard, quartic outboard.
    pub fn default_for(geometry: &PropellerGeometry) -> Self {
        FitConfig { breakpoints: vec![geometry.r_nodus()], orders: vec![2, 4] }
    }

    /// A single polynomial over the whole span.
    pub fn single(order: usize) -> Self {
        FitConfig { breakpoints: Vec::new(), orders: vec![order] }
    }
}

/// Fit quality of one segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentFit {
    pub order: usize,
    pub n_points: usize,
    /// Largest absolute residual of the leading edge, trailing edge (m) and pitch (rad).
    pub max_residual_le: f64,
    pub max_residual_te: f64,
    pub max_residual_theta: f64,
}

/// In-plane leading edge `L(x)`, trailing edge `T(x)` and pitch `θ(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanformFunctions {
    pub leading: PiecewisePolynomial,
    pub trailing: PiecewisePolynomial,
    pub pitch: PiecewisePolynomial,
    pub segments: Vec<SegmentFit>,
    tip_radius: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanformSample {
    pub leading: f64,
    pub trailing: f64,
    pub theta: f64,
}

impl PlanformSample {
    pub fn chord(&self) -> f64 {
        self.leading - self.trailing
    }
}

impl PlanformFunctions {
    pub fn tip_radius(&self) -> f64 {
        self.tip_radius
    }

    /// Evaluates on `[0, R]`; anything outside is a domain error.
    pub fn eval(&self, x: f64) -> Result<PlanformSample, GeometryError> {
        if !(0.0..=self.tip_radius).contains(&x) {
            return Err(GeometryError::OutOfDomain { x, tip: self.tip_radius });
        }
        Ok(self.sample(x))
    }

    pub(crate) fn sample(&self, x: f64) -> PlanformSample {
        PlanformSample { leading: self.leading.eval(x), trailing: self.trailing.eval(x), theta: self.pitch.eval(x) }
    }
}

/// Per-segment least-squares fits of `L`, `T` and `θ` against the section
/// table. Sections on a breakpoint contribute to both neighbouring segments.
pub fn fit_planform(geometry: &PropellerGeometry, config: &FitConfig) -> Result<PlanformFunctions, GeometryError> {
    let tip = geometry.tip_radius();
    if config.orders.len() != config.breakpoints.len() + 1 {
        return Err(GeometryError::FitConfig("need exactly one order per segment"));
    }
    let mut breaks = Vec::with_capacity(config.breakpoints.len() + 2);
    breaks.push(0.0);
    for &b in &config.breakpoints {
        if !(b > *breaks.last().unwrap() && b < tip) {
            return Err(GeometryError::FitConfig("breakpoints must increase strictly inside (0, R)"));
        }
        breaks.push(b);
    }
    breaks.push(tip);

    let mut le = Vec::new();
    let mut te = Vec::new();
    let mut th = Vec::new();
    let mut segments = Vec::new();
    for (seg, &order) in config.orders.iter().enumerate() {
        let (a, b) = (breaks[seg], breaks[seg + 1]);
        let pts: Vec<_> = geometry.sections().iter().filter(|s| s.x >= a && s.x <= b).collect();
        let cols = order + 1;
        if pts.len() < cols {
            return Err(GeometryError::UnderdeterminedSegment { segment: seg, points: pts.len(), order, needed: cols });
        }
        let center = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut design = Vec::with_capacity(pts.len() * cols);
        for s in &pts {
            let t = (s.x - center) / half;
            let mut p = 1.0;
            for _ in 0..cols {
                design.push(p);
                p *= t;
            }
        }
        let fit = |vals: Vec<f64>| -> Result<(Polynomial, f64), GeometryError> {
            let sol = lstsq(&design, pts.len(), cols, &vals).map_err(|e| match e {
                LinalgError::RankDeficient { .. } => GeometryError::IllConditioned { segment: seg, order },
                _ => GeometryError::UnderdeterminedSegment { segment: seg, points: pts.len(), order, needed: cols },
            })?;
            let poly = Polynomial { coeffs: sol.x, center, half_width: half };
            let worst = pts.iter().zip(&vals).map(|(s, v)| (poly.eval(s.x) - v).abs()).fold(0.0, f64::max);
            Ok((poly, worst))
        };
        let (pl, rl) = fit(pts.iter().map(|s| s.y_le).collect())?;
        let (pt, rt) = fit(pts.iter().map(|s| s.y_te).collect())?;
        let (pp, rp) = fit(pts.iter().map(|s| s.theta).collect())?;
        le.push(pl);
        te.push(pt);
        th.push(pp);
        segments.push(SegmentFit {
            order,
            n_points: pts.len(),
            max_residual_le: rl,
            max_residual_te: rt,
            max_residual_theta: rp,
        });
    }
    Ok(PlanformFunctions {
        leading: PiecewisePolynomial { breaks: breaks.clone(), pieces: le },
        trailing: PiecewisePolynomial { breaks: breaks.clone(), pieces: te },
        pitch: PiecewisePolynomial { breaks, pieces: th },
        segments,
        tip_radius: tip,
    })
}
