use alloc::vec::Vec;

use super::AeroError;

/// Force coefficients at one pitch angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficients {
    pub c_n: f64,
    pub c_t: f64,
    pub c_l: f64,
    pub c_d: f64,
}

/// Thin-airfoil style polar: `C_l = c_l0 + c_lα θ`, `C_d = c_d0 + k C_l²`.
///
/// Normal and tangential coefficients are the lift/drag pair rotated by θ:
/// `C_n = C_l cos θ + C_d sin θ`, `C_t = C_l sin θ − C_d cos θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParametricPolar {
    pub c_l0: f64,
    pub c_l_alpha: f64,
    pub c_d0: f64,
    pub k_induced: f64,
}

impl Default for ParametricPolar {
    fn default() -> Self {
        ParametricPolar { c_l0: 0.1, c_l_alpha: 4.0, c_d0: 0.02, k_induced: 0.06 }
    }
}

/// One row of a coefficient table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    /// Pitch (rad).
    pub theta: f64,
    pub coeffs: Coefficients,
}

/// Lookup table with linear interpolation in θ, held constant beyond the ends.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    rows: Vec<TableRow>,
}

impl CoefficientTable {
    pub fn new(rows: Vec<TableRow>) -> Result<Self, AeroError> {
        if rows.len() < 2 {
            return Err(AeroError::Coefficients("table needs at least two rows"));
        }
        for (i, r) in rows.iter().enumerate() {
            let c = r.coeffs;
            if ![r.theta, c.c_n, c.c_t, c.c_l, c.c_d].iter().all(|v| v.is_finite()) {
                return Err(AeroError::Coefficients("non-finite table entry"));
            }
            if c.c_d <= 0.0 {
                return Err(AeroError::Coefficients("drag coefficient must be positive"));
            }
            if i > 0 && r.theta <= rows[i - 1].theta {
                return Err(AeroError::Coefficients("table pitch must increase strictly"));
            }
        }
        Ok(CoefficientTable { rows })
    }

    pub fn rows(&self) -> &[TableRow] {
        &self.rows
    }

    pub fn eval(&self, theta: f64) -> Coefficients {
        let rows = &self.rows;
        let last = rows.len() - 1;
        if theta <= rows[0].theta {
            return rows[0].coeffs;
        }
        if theta >= rows[last].theta {
            return rows[last].coeffs;
        }
        let j = rows.partition_point(|r| r.theta <= theta) - 1;
        let (a, b) = (rows[j], rows[j + 1]);
        let f = (theta - a.theta) / (b.theta - a.theta);
        let lerp = |p: f64, q: f64| p + f * (q - p);
        Coefficients {
            c_n: lerp(a.coeffs.c_n, b.coeffs.c_n),
            c_t: lerp(a.coeffs.c_t, b.coeffs.c_t),
            c_l: lerp(a.coeffs.c_l, b.coeffs.c_l),
            c_d: lerp(a.coeffs.c_d, b.coeffs.c_d),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientModel {
    Parametric(ParametricPolar),
    Table(CoefficientTable),
}

impl Default for CoefficientModel {
    fn default() -> Self {
        CoefficientModel::Parametric(ParametricPolar::default())
    }
}

impl CoefficientModel {
    pub fn parametric(p: ParametricPolar) -> Result<Self, AeroError> {
        let vals = [p.c_l0, p.c_l_alpha, p.c_d0, p.k_induced];
        if !vals.iter().all(|v| v.is_finite()) {
            return Err(AeroError::Coefficients("non-finite polar parameter"));
        }
        if p.c_d0 <= 0.0 || p.k_induced < 0.0 {
            return Err(AeroError::Coefficients("need c_d0 > 0 and k_induced >= 0"));
        }
        Ok(CoefficientModel::Parametric(p))
    }

    pub fn eval(&self, theta: f64) -> Coefficients {
        match self {
            CoefficientModel::Parametric(p) => {
                let c_l = p.c_l0 + p.c_l_alpha * theta;
                let c_d = p.c_d0 + p.k_induced * c_l * c_l;
                let (s, c) = (libm::sin(theta), libm::cos(theta));
                Coefficients { c_n: c_l * c + c_d * s, c_t: c_l * s - c_d * c, c_l, c_d }
            }
            CoefficientModel::Table(t) => t.eval(theta),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn row(theta: f64, v: f64) -> TableRow {
        TableRow { theta, coeffs: Coefficients { c_n: v, c_t: -v, c_l: 2.0 * v, c_d: 0.1 + v } }
    }

    #[test]
    fn table_interpolates_and_clamps() {
        let t = CoefficientTable::new(vec![row(0.0, 0.0), row(0.2, 1.0), row(0.4, 3.0)]).unwrap();
        assert!((t.eval(0.1).c_n - 0.5).abs() < 1e-15);
        assert!((t.eval(0.3).c_l - 4.0).abs() < 1e-14);
        assert_eq!(t.eval(-1.0).c_n, 0.0);
        assert_eq!(t.eval(1.0).c_n, 3.0);
        assert_eq!(t.eval(0.2).c_n, 1.0);
    }

    #[test]
    fn table_validation() {
        assert!(CoefficientTable::new(vec![row(0.0, 0.0)]).is_err());
        assert!(CoefficientTable::new(vec![row(0.1, 0.0), row(0.1, 1.0)]).is_err());
        let mut bad = row(0.2, 0.0);
        bad.coeffs.c_d = 0.0;
        assert!(CoefficientTable::new(vec![row(0.0, 0.0), bad]).is_err());
    }

    #[test]
    fn parametric_rotation() {
        let m = CoefficientModel::default();
        let th = 0.3;
        let c = m.eval(th);
        // rotating (C_n, C_t) back by θ recovers (C_l, −C_d)
        let (s, co) = (libm::sin(th), libm::cos(th));
        assert!((c.c_n * co + c.c_t * s - c.c_l).abs() < 1e-15);
        assert!((c.c_n * s - c.c_t * co - c.c_d).abs() < 1e-15);
        assert!(CoefficientModel::parametric(ParametricPolar { c_d0: 0.0, ..Default::default() }).is_err());
    }
}
