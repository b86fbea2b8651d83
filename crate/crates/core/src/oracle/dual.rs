//! Numerical recovery of the dual curve from sampled tangent lines.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

use crate::lattice::{LatticePoint, LatticePolygon};
use crate::plucker::dual_polygon;

use super::count::{in_torus, rng_for, sample_with, y_roots};
use super::poly::SparsePoly;
use super::{OracleConfig, OracleError};

/// Largest predicted support handled by [`implicitize_dual`].
pub const MAX_SUPPORT: usize = 40;
/// Singular values below this fraction of the largest span the kernel.
const KERNEL_TOL: f64 = 1e-10;
/// Recovered coefficients below this fraction of the largest are dropped.
const SUPPORT_TOL: f64 = 1e-6;

/// Points `(a, b)` of the dual curve: the line `a x + b y + 1 = 0` is tangent
/// to `{f = 0}` at the matching source point.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DualSample {
    pub points: Vec<(Complex64, Complex64)>,
    pub sources: Vec<(Complex64, Complex64)>,
}

impl DualSample {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Newton on `y ↦ f(x, y)`.
fn polish_y(f: &SparsePoly, fy: &SparsePoly, x: Complex64, mut y: Complex64) -> Complex64 {
    for _ in 0..8 {
        let d = fy.eval(x, y);
        if d.norm() == 0.0 {
            break;
        }
        let step = f.eval(x, y) / d;
        if !step.norm().is_finite() {
            break;
        }
        y -= step;
        if step.norm() <= 1e-16 * y.norm() {
            break;
        }
    }
    y
}

/// `n` points of the dual curve via `v = -(f_x, f_y) / (x f_x + y f_y)` at
/// torus points of `{f = 0}` above random `x` near the unit circle.
pub fn sample_dual_points(f: &SparsePoly, n: usize, cfg: &OracleConfig) -> Result<DualSample, OracleError> {
    let mut out = DualSample::default();
    if n == 0 {
        return Ok(out);
    }
    let f = f.without_monomial_content();
    let (fx, fy) = (f.dx(), f.dy());
    let mut rng = rng_for(cfg.seed);
    let max_draws = 20 * n + 20;
    for _ in 0..max_draws {
        if out.len() >= n {
            break;
        }
        let theta = rng.random::<f64>() * std::f64::consts::TAU;
        let radius = 1.0 + 0.25 * (rng.random::<f64>() - 0.5);
        let x = Complex64::from_polar(radius, theta);
        for y in y_roots(&f, x) {
            if out.len() >= n {
                break;
            }
            let y = polish_y(&f, &fy, x, y);
            if !in_torus(y, cfg.torus_tol) {
                continue;
            }
            let (gx, gy) = (fx.eval(x, y), fy.eval(x, y));
            let den = x * gx + y * gy;
            if den.norm() < cfg.torus_tol {
                continue;
            }
            out.points.push((-gx / den, -gy / den));
            out.sources.push((x, y));
        }
    }
    if out.len() < n {
        return Err(OracleError::InsufficientSamples { found: out.len(), wanted: n });
    }
    Ok(out)
}

/// A numerically recovered equation of the dual curve.
#[derive(Clone, Debug, PartialEq)]
pub struct DualEquation {
    /// Coefficients scaled so the largest has modulus one.
    pub coefficients: BTreeMap<LatticePoint, f64>,
    pub observed: LatticePolygon,
    pub predicted: LatticePolygon,
    /// Smallest singular value over the next one; small means a clean kernel.
    pub kernel_gap: f64,
}

impl DualEquation {
    pub fn coefficient(&self, e: LatticePoint) -> f64 {
        self.coefficients.get(&e).copied().unwrap_or(0.0)
    }
}

/// Recover the dual of the given curve on the monomials of `predicted`.
pub fn implicitize_dual_of(
    f: &SparsePoly,
    predicted: &LatticePolygon,
    cfg: &OracleConfig,
) -> Result<DualEquation, OracleError> {
    let support = predicted.lattice_points();
    if support.len() > MAX_SUPPORT {
        return Err(OracleError::SupportTooLarge(support.len()));
    }
    let cols = support.len();
    let rows = 2 * cols + 8;
    let sample = sample_dual_points(f, rows, cfg)?;

    let mut m = DMatrix::<Complex64>::zeros(rows, cols);
    for (r, &(a, b)) in sample.points.iter().enumerate() {
        for (c, e) in support.iter().enumerate() {
            m[(r, c)] = a.powi(e.x as i32) * b.powi(e.y as i32);
        }
        let scale = (0..cols).map(|c| m[(r, c)].norm()).fold(0.0, f64::max);
        for c in 0..cols {
            m[(r, c)] /= scale;
        }
    }
    let col_scale: Vec<f64> = (0..cols).map(|c| m.column(c).norm()).collect();
    for (c, &s) in col_scale.iter().enumerate() {
        m.column_mut(c).unscale_mut(s);
    }

    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("requested");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j]));
    let s_max = svd.singular_values[order[order.len() - 1]];
    let kernel_dim = order
        .iter()
        .filter(|&&i| svd.singular_values[i] <= KERNEL_TOL * s_max)
        .count();
    if kernel_dim != 1 {
        return Err(OracleError::KernelDimension(kernel_dim));
    }
    let kernel_gap = svd.singular_values[order[0]] / svd.singular_values[order[1]];

    let raw: Vec<Complex64> = (0..cols).map(|c| v_t[(order[0], c)].conj() / col_scale[c]).collect();
    let pivot = *raw
        .iter()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .expect("nonempty support");
    let mut coefficients = BTreeMap::new();
    for (e, c) in support.iter().zip(&raw) {
        let z = c / pivot;
        if z.norm() > SUPPORT_TOL {
            coefficients.insert(*e, z.re);
        }
    }
    let pts: Vec<LatticePoint> = coefficients.keys().copied().collect();
    let observed = LatticePolygon::from_points(&pts)?;
    if observed != *predicted {
        return Err(OracleError::SupportMismatch {
            observed: observed.to_string(),
            predicted: predicted.to_string(),
        });
    }
    Ok(DualEquation { coefficients, observed, predicted: predicted.clone(), kernel_gap })
}

/// Sample a curve on `P` and recover its dual on the lattice points of the
/// predicted dual polygon, checking that the observed support matches.
pub fn implicitize_dual(p: &LatticePolygon, cfg: &OracleConfig) -> Result<DualEquation, OracleError> {
    let predicted = dual_polygon(p)?;
    let size = predicted.lattice_point_count();
    if size > MAX_SUPPORT {
        return Err(OracleError::SupportTooLarge(size));
    }
    let mut rng = rng_for(cfg.seed);
    let attempts = cfg.retries.max(1);
    let mut last = None;
    for attempt in 0..attempts {
        let f = sample_with(p, cfg.coeff_bound, &mut rng);
        let sub = OracleConfig { seed: cfg.seed.wrapping_add(attempt as u64 + 1), ..*cfg };
        match implicitize_dual_of(&f, &predicted, &sub) {
            Ok(eq) => return Ok(eq),
            Err(e) if e.is_sample_failure() => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(OracleError::RetriesExhausted { attempts, last: Box::new(last.expect("at least one attempt")) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hyperbola() -> (SparsePoly, LatticePolygon) {
        let f = SparsePoly::from_int_terms(&[((1, 1), 1), ((0, 1), 1), ((0, 0), 1)]);
        (f, LatticePolygon::from_coords(&[(0, 0), (0, 1), (1, 1)]).unwrap())
    }

    #[test]
    fn sampled_points_are_tangent_lines() {
        let (f, _) = hyperbola();
        let sample = sample_dual_points(&f, 12, &OracleConfig::with_seed(3)).unwrap();
        assert_eq!(sample.len(), 12);
        for (&(a, b), &(x, y)) in sample.points.iter().zip(&sample.sources) {
            assert!(f.eval(x, y).norm() < 1e-12);
            assert!((a * x + b * y + 1.0).norm() < 1e-12);
            // (a, b) ∥ (f_x, f_y)
            assert!((a * f.dy().eval(x, y) - b * f.dx().eval(x, y)).norm() < 1e-12);
            // the dual equation a² + 4ab − 2a + 1
            assert!((a * a + 4.0 * a * b - 2.0 * a + 1.0).norm() < 1e-9);
        }
        assert!(sample_dual_points(&f, 0, &OracleConfig::default()).unwrap().is_empty());
    }

    #[test]
    fn hyperbola_dual_equation() {
        let (f, p) = hyperbola();
        let predicted = dual_polygon(&p).unwrap();
        let eq = implicitize_dual_of(&f, &predicted, &OracleConfig::with_seed(5)).unwrap();
        let c = |x, y| eq.coefficient(LatticePoint::new(x, y)) / eq.coefficient(LatticePoint::new(2, 0));
        for (e, want) in [((2, 0), 1.0), ((1, 1), 4.0), ((1, 0), -2.0), ((0, 0), 1.0)] {
            assert!((c(e.0, e.1) - want).abs() < 1e-6 * want.abs(), "{e:?}");
        }
        assert_eq!(eq.observed, predicted);
    }

    #[test]
    fn conic_dual_is_conic() {
        let eq = implicitize_dual(&LatticePolygon::standard_triangle(2), &OracleConfig::with_seed(11)).unwrap();
        assert!(eq.observed.is_translate_of(&LatticePolygon::standard_triangle(2)));
    }
}
