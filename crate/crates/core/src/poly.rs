//! Monic quadratics and cubics with a largest-real-root solver.

use crate::error::{Error, Result};

/// Absolute accuracy targeted by the root solvers.
pub const ROOT_TOL: f64 = 1e-12;

/// `x² + b·x + c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadratic {
    pub b: f64,
    pub c: f64,
}

/// `x³ + a2·x² + a1·x + a0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cubic {
    pub a2: f64,
    pub a1: f64,
    pub a0: f64,
}

impl Quadratic {
    pub fn new(b: f64, c: f64) -> Self {
        Quadratic { b, c }
    }

    pub fn eval(&self, x: f64) -> f64 {
        (x + self.b) * x + self.c
    }

    /// `[1, b, c]`.
    pub fn coeffs(&self) -> [f64; 3] {
        [1.0, self.b, self.c]
    }

    pub fn discriminant(&self) -> f64 {
        self.b * self.b - 4.0 * self.c
    }

    /// Both real roots, larger first, computed without cancellation.
    pub fn real_roots(&self) -> Result<(f64, f64)> {
        let mut disc = self.discriminant();
        let scale = self.b * self.b + 4.0 * self.c.abs();
        if disc < 0.0 {
            if disc < -64.0 * f64::EPSILON * scale {
                return Err(Error::NoRealRoot);
            }
            disc = 0.0;
        }
        let sq = disc.sqrt();
        // q = -(b + sign(b)·√disc)/2 has no cancellation; roots are q and c/q.
        let q = -0.5 * (self.b + self.b.signum() * sq);
        if q == 0.0 {
            // b = 0 and disc = 0, so c = 0.
            return Ok((0.0, 0.0));
        }
        let (r1, r2) = (q, self.c / q);
        Ok(if r1 >= r2 { (r1, r2) } else { (r2, r1) })
    }

    pub fn largest_root(&self) -> Result<f64> {
        Ok(self.real_roots()?.0)
    }
}

impl Cubic {
    pub fn new(a2: f64, a1: f64, a0: f64) -> Self {
        Cubic { a2, a1, a0 }
    }

    /// Normalizes `c3·x³ + c2·x² + c1·x + c0`.
    pub fn from_coeffs(c: [f64; 4]) -> Result<Self> {
        if c[0] == 0.0 || !c.iter().all(|x| x.is_finite()) {
            return Err(Error::ParameterRange("cubic needs a finite nonzero leading coefficient".into()));
        }
        Ok(Cubic { a2: c[1] / c[0], a1: c[2] / c[0], a0: c[3] / c[0] })
    }

    /// `[1, a2, a1, a0]`.
    pub fn coeffs(&self) -> [f64; 4] {
        [1.0, self.a2, self.a1, self.a0]
    }

    pub fn eval(&self, x: f64) -> f64 {
        ((x + self.a2) * x + self.a1) * x + self.a0
    }

    pub fn derivative(&self, x: f64) -> f64 {
        (3.0 * x + 2.0 * self.a2) * x + self.a1
    }

    /// Critical points `(lo, hi)` if the derivative has two distinct real roots.
    fn critical_points(&self) -> Option<(f64, f64)> {
        let d = Quadratic::new(2.0 * self.a2 / 3.0, self.a1 / 3.0);
        if d.discriminant() <= 0.0 {
            return None;
        }
        let (hi, lo) = d.real_roots().ok()?;
        Some((lo, hi))
    }

    fn cauchy_bound(&self) -> f64 {
        1.0 + self.a2.abs().max(self.a1.abs()).max(self.a0.abs())
    }

    fn scale(&self) -> f64 {
        1.0 + self.a2.abs() + self.a1.abs() + self.a0.abs()
    }

    /// Largest real root to absolute accuracy [`ROOT_TOL`].
    ///
    /// `hint` is a bracket `(lo, hi)`; it is used only when it provably
    /// isolates the largest root (sign change, and `lo` at or beyond the last
    /// critical point). Otherwise the global Cauchy bracket is used.
    pub fn largest_root(&self, hint: Option<(f64, f64)>) -> Result<f64> {
        self.largest_root_tol(hint, ROOT_TOL)
    }

    pub fn largest_root_tol(&self, hint: Option<(f64, f64)>, tol: f64) -> Result<f64> {
        let crit = self.critical_points();
        if let Some((lo, hi)) = hint {
            let past_crit = crit.is_none_or(|(_, c2)| lo >= c2);
            if lo < hi && past_crit && self.eval(lo) <= 0.0 && self.eval(hi) > 0.0 {
                return Ok(self.solve_bracket(lo, hi, tol));
            }
        }
        let bound = self.cauchy_bound();
        let flat = 64.0 * f64::EPSILON * self.scale();
        match crit {
            None => {
                // Monotone. A vanishing derivative at the inflection point with
                // f ≈ 0 there is a triple root that bisection cannot resolve.
                let infl = -self.a2 / 3.0;
                if self.eval(infl).abs() <= flat && self.derivative(infl).abs() <= flat {
                    return Ok(infl);
                }
                Ok(self.solve_bracket(-bound, bound, tol))
            }
            Some((c1, c2)) => {
                let f2 = self.eval(c2);
                if f2.abs() <= flat * (1.0 + c2.abs()).powi(3) {
                    // double root at the last critical point
                    return Ok(c2);
                }
                if f2 < 0.0 {
                    Ok(self.solve_bracket(c2, bound.max(c2 + 1.0), tol))
                } else {
                    Ok(self.solve_bracket(-bound.max(1.0 - c1), c1, tol))
                }
            }
        }
    }

    /// All real roots, descending. Uses deflation after the largest root.
    pub fn real_roots(&self) -> Result<Vec<f64>> {
        let r = self.largest_root(None)?;
        // x³ + a2 x² + a1 x + a0 = (x - r)(x² + (a2 + r) x + (a1 + r(a2 + r)))
        let b = self.a2 + r;
        let q = Quadratic::new(b, self.a1 + r * b);
        let mut roots = vec![r];
        if let Ok((x, y)) = q.real_roots() {
            roots.push(x.min(r));
            roots.push(y.min(r));
        }
        roots.sort_by(|a, b| b.total_cmp(a));
        Ok(roots)
    }

    /// Safeguarded Newton inside a sign-change bracket with `f(lo) ≤ 0 < f(hi)`.
    fn solve_bracket(&self, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
        let mut x = 0.5 * (lo + hi);
        for _ in 0..400 {
            let fx = self.eval(x);
            if fx == 0.0 {
                return x;
            }
            if fx < 0.0 {
                lo = x;
            } else {
                hi = x;
            }
            if hi - lo <= tol * 0.25 {
                break;
            }
            let d = self.derivative(x);
            let newton = x - fx / d;
            x = if d != 0.0 && newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
            // Newton can stall on one side; force the bracket to shrink.
            if (x - lo).min(hi - x) < tol * 0.01 {
                let mid = 0.5 * (lo + hi);
                if self.eval(mid) <= 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
                x = 0.5 * (lo + hi);
            }
        }
        0.5 * (lo + hi)
    }
}

/// Degree-2 or degree-3 polynomial handle for [`largest_real_root`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Poly {
    Quadratic(Quadratic),
    Cubic(Cubic),
}

pub fn largest_real_root(poly: &Poly, hint: Option<(f64, f64)>) -> Result<f64> {
    match poly {
        Poly::Quadratic(q) => q.largest_root(),
        Poly::Cubic(c) => c.largest_root(hint),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Plain bisection from a wide bracket, used as an oracle.
    fn bisect(c: &Cubic, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if c.eval(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn quadratic_closed_form() {
        let q = Quadratic::new(-1.0, -8.0);
        assert!((q.largest_root().unwrap() - (1.0 + 33f64.sqrt()) / 2.0).abs() < 1e-14);
        assert_eq!(Quadratic::new(0.0, 1.0).largest_root(), Err(Error::NoRealRoot));
        assert_eq!(Quadratic::new(-2.0, 1.0).largest_root().unwrap(), 1.0);
        // large b: naive formula loses the small root entirely
        let (big, small) = Quadratic::new(1e9, 1.0).real_roots().unwrap();
        assert!((small + 1e9).abs() < 1.0 && (big + 1e-9).abs() < 1e-20);
    }

    #[test]
    fn cubic_example_against_bisection() {
        let c = Cubic::new(-16.0, -19.0, 32.0);
        let r = c.largest_root(None).unwrap();
        let oracle = bisect(&c, 17.0, 18.0);
        assert!((r - oracle).abs() < 1e-12);
        assert!((r - 17.0066).abs() < 1e-4);
        assert!((c.largest_root(Some((17.0, 19.0))).unwrap() - oracle).abs() < 1e-12);
    }

    #[test]
    fn repeated_roots() {
        // (x-1)^3
        assert_eq!(Cubic::new(-3.0, 3.0, -1.0).largest_root(None).unwrap(), 1.0);
        // (x-2)^2 (x+1) = x^3 - 3x^2 + 0x + 4
        let r = Cubic::new(-3.0, 0.0, 4.0).largest_root(None).unwrap();
        assert!((r - 2.0).abs() < 1e-12, "{r}");
        // (x-2)(x+1)^2 = x^3 - 3x - 2
        let r = Cubic::new(0.0, -3.0, -2.0).largest_root(None).unwrap();
        assert!((r - 2.0).abs() < 1e-12);
    }

    #[test]
    fn bad_hint_falls_back() {
        let c = Cubic::new(-16.0, -19.0, 32.0);
        let r = c.largest_root(Some((0.0, 1.5))).unwrap();
        assert!((r - bisect(&c, 17.0, 18.0)).abs() < 1e-12);
    }

    #[test]
    fn from_coeffs_normalizes() {
        let c = Cubic::from_coeffs([4.0, -8.0, 4.0, 0.0]).unwrap();
        assert_eq!(c, Cubic::new(-2.0, 1.0, 0.0));
        assert!(Cubic::from_coeffs([0.0, 1.0, 1.0, 1.0]).is_err());
    }

    proptest! {
        #[test]
        fn recovers_planted_roots(r1 in -50.0f64..50.0, r2 in -50.0f64..50.0, r3 in -50.0f64..50.0) {
            let c = Cubic::new(-(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -r1 * r2 * r3);
            let top = r1.max(r2).max(r3);
            let got = c.largest_root(None).unwrap();
            // a planted double root near the top limits attainable accuracy
            let sep = [r1, r2, r3].iter().filter(|&&r| r != top).map(|r| top - r).fold(f64::INFINITY, f64::min);
            let tol = if sep > 1e-3 { 1e-9 * (1.0 + top.abs()) } else { 1e-4 };
            prop_assert!((got - top).abs() <= tol, "got {got}, want {top}");
        }

        #[test]
        fn quadratic_roots_satisfy(b in -1e3f64..1e3, c in -1e3f64..1e3) {
            let q = Quadratic::new(b, c);
            if let Ok((x, y)) = q.real_roots() {
                prop_assert!(x >= y);
                let scale = 1.0 + b.abs() * x.abs() + c.abs() + x * x;
                prop_assert!(q.eval(x).abs() <= 1e-10 * scale);
            } else {
                prop_assert!(q.discriminant() < 0.0);
            }
        }
    }
}
