//! Counting common zeros of two bivariate polynomials in the torus.

use num_complex::Complex64;
use num_rational::{BigRational, Rational64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lattice::{mixed_volume, LatticePoint, LatticePolygon};

use super::poly::{hessian_curve, SparsePoly};
use super::resultant::{gcd, resultant_y_modular, squarefree_part};
use super::zpoly::ZPoly;
use super::roots::{aberth, integer_roots};
use super::{OracleConfig, OracleError};

/// Relative residual accepted after Newton polishing.
const RESIDUAL_TOL: f64 = 1e-9;
/// Candidates `y` with a larger relative value of `g` are not polished.
const CANDIDATE_TOL: f64 = 1e-6;
const NEWTON_STEPS: usize = 30;

pub(crate) fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn sample_with(p: &LatticePolygon, bound: u64, rng: &mut impl Rng) -> SparsePoly {
    assert!(bound > 0, "coefficient bound must be positive");
    let b = bound as i64;
    let (lo, _) = p.bounding_box();
    let shift = LatticePoint::new(2, 2) - lo;
    SparsePoly::from_terms(p.lattice_points().into_iter().map(|e| {
        let c = loop {
            let c = rng.random_range(-b..=b);
            if c != 0 {
                break c;
            }
        };
        (e + shift, BigRational::from_integer(c.into()))
    }))
}

/// A random integer polynomial with one nonzero coefficient per lattice point
/// of `P`, translated so all exponents are at least 2.
pub fn sample_poly(p: &LatticePolygon, cfg: &OracleConfig) -> SparsePoly {
    sample_with(p, cfg.coeff_bound, &mut rng_for(cfg.seed))
}

struct System<'a> {
    f: &'a SparsePoly,
    g: &'a SparsePoly,
    fx: SparsePoly,
    fy: SparsePoly,
    gx: SparsePoly,
    gy: SparsePoly,
}

impl<'a> System<'a> {
    fn new(f: &'a SparsePoly, g: &'a SparsePoly) -> Self {
        System { fx: f.dx(), fy: f.dy(), gx: g.dx(), gy: g.dy(), f, g }
    }

    fn relative_residual(&self, x: Complex64, y: Complex64) -> f64 {
        let rf = self.f.eval(x, y).norm() / self.f.eval_abs(x, y);
        let rg = self.g.eval(x, y).norm() / self.g.eval_abs(x, y);
        rf.max(rg)
    }

    /// Newton's method on `(f, g) = 0` until the relative residual is at
    /// rounding level.
    fn polish(&self, mut x: Complex64, mut y: Complex64) -> Option<(Complex64, Complex64)> {
        for _ in 0..NEWTON_STEPS {
            if self.relative_residual(x, y) <= RESIDUAL_TOL {
                return Some((x, y));
            }
            let (f, g) = (self.f.eval(x, y), self.g.eval(x, y));
            let (a, b) = (self.fx.eval(x, y), self.fy.eval(x, y));
            let (c, d) = (self.gx.eval(x, y), self.gy.eval(x, y));
            let det = a * d - b * c;
            let dx = (d * f - b * g) / det;
            let dy = (a * g - c * f) / det;
            if !(dx.norm().is_finite() && dy.norm().is_finite()) {
                return None;
            }
            x -= dx;
            y -= dy;
        }
        (self.relative_residual(x, y) <= RESIDUAL_TOL).then_some((x, y))
    }
}

fn close(a: (Complex64, Complex64), b: (Complex64, Complex64), tol: f64) -> bool {
    let scale = a.0.norm().max(a.1.norm()).max(1.0);
    (a.0 - b.0).norm().max((a.1 - b.1).norm()) <= tol * scale
}

pub(crate) fn in_torus(z: Complex64, tol: f64) -> bool {
    let r = z.norm();
    r >= tol && r <= 1.0 / tol
}

/// Roots of `f(x0, y)` as a polynomial in `y`, with exactly vanishing end
/// coefficients removed.
pub(crate) fn y_roots(f: &SparsePoly, x0: Complex64) -> Vec<Complex64> {
    let mut c = f.specialize_x(x0);
    while c.last().is_some_and(|z| z.norm() == 0.0) {
        c.pop();
    }
    let lead = c.iter().take_while(|z| z.norm() == 0.0).count();
    if c.len() <= lead + 1 {
        return Vec::new();
    }
    aberth(&c[lead..]).roots
}

/// Divide out of the squarefree `s` every root it shares with `b`.
fn remove_common_roots(s: ZPoly, b: &ZPoly) -> ZPoly {
    if b.is_zero() {
        return s;
    }
    let common = gcd(&s, b);
    s.exact_div(&common).expect("gcd divides")
}

/// Number of distinct common zeros of `f` and `g` in `(ℂ*)²`.
///
/// Eliminates `y` exactly and takes the squarefree part of the resultant
/// with the factor `x` removed. Roots shared with the `x`-polynomials whose
/// vanishing puts a common zero at `y = 0` or `y = ∞` are divided out in ℤ[x],
/// and the remaining degree is the count, provided each torus point has its
/// own `x`-coordinate. The remaining roots are then located numerically.
/// Those outside the torus window are dropped. Every other root `x0` must
/// polish, together with some root of `f(x0, ·)`, to exactly one solution of
/// the system in the window, and distinct roots to distinct solutions;
/// otherwise the sample is degenerate.
pub fn count_torus_solutions(f: &SparsePoly, g: &SparsePoly, cfg: &OracleConfig) -> Result<u64, OracleError> {
    let (f, g) = (f.without_monomial_content(), g.without_monomial_content());
    let r = resultant_y_modular(&f, &g)?;
    let (_, r) = r.strip_x_power();
    let mut s = squarefree_part(&r);
    let (rf, rg) = (f.to_zpoly_in_y(), g.to_zpoly_in_y());
    if let (Some(f0), Some(g0)) = (rf.first(), rg.first()) {
        s = remove_common_roots(s, &gcd(f0, g0));
    }
    if rf.len() > 1 && rg.len() > 1 {
        let (fl, gl) = (rf.last().expect("nonempty"), rg.last().expect("nonempty"));
        s = remove_common_roots(s, &gcd(fl, gl));
    }
    if s.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }

    let roots = integer_roots(&s);
    if !roots.converged {
        return Err(OracleError::degenerate("root iteration did not converge"));
    }
    let sys = System::new(&f, &g);
    // a double root of f(x0, ·), as at a vertical tangent, splits to about √ε
    let same = cfg.root_tol.sqrt();
    let mut found: Vec<(Complex64, Complex64)> = Vec::new();
    for &x0 in &roots.roots {
        if !in_torus(x0, cfg.torus_tol) {
            continue;
        }
        let mut here: Vec<(Complex64, Complex64)> = Vec::new();
        for y0 in y_roots(&f, x0) {
            if !in_torus(y0, cfg.torus_tol) || g.eval(x0, y0).norm() > CANDIDATE_TOL * g.eval_abs(x0, y0) {
                continue;
            }
            let Some(pt) = sys.polish(x0, y0) else { continue };
            let drift = (pt.0 - x0).norm() <= same * x0.norm().max(1.0);
            if drift && in_torus(pt.1, cfg.torus_tol) && !here.iter().any(|&q| close(q, pt, same)) {
                here.push(pt);
            }
        }
        match here[..] {
            [] => return Err(OracleError::degenerate(format!("resultant root {x0} has no matching solution"))),
            [pt] => {
                if found.iter().any(|&q| close(q, pt, cfg.root_tol)) {
                    return Err(OracleError::degenerate(format!("two resultant roots polish to {pt:?}")));
                }
                found.push(pt);
            }
            _ => return Err(OracleError::degenerate(format!("two solutions share the coordinate x = {x0}"))),
        }
    }
    let count = found.len() as u64;

    if let (Ok(pf), Ok(pg)) = (f.newton_polygon(), g.newton_polygon()) {
        let bound = mixed_volume(&pf, &pg);
        if Rational64::from_integer(count as i64) > bound {
            return Err(OracleError::degenerate(format!("{count} solutions exceed the mixed volume {bound}")));
        }
    }
    Ok(count)
}

fn with_retries(
    p: &LatticePolygon,
    cfg: &OracleConfig,
    partner: impl Fn(&SparsePoly) -> SparsePoly,
) -> Result<u64, OracleError> {
    p.require_full("oracle")?;
    let mut rng = rng_for(cfg.seed);
    let attempts = cfg.retries.max(1);
    let mut last = None;
    for _ in 0..attempts {
        let f = sample_with(p, cfg.coeff_bound, &mut rng);
        match count_torus_solutions(&f, &partner(&f), cfg) {
            Ok(n) => return Ok(n),
            Err(e) if e.is_sample_failure() => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(OracleError::RetriesExhausted { attempts, last: Box::new(last.expect("at least one attempt")) })
}

/// Torus inflection points of a random curve on `P`: `#(C ∩ H)`.
pub fn inflection_oracle(p: &LatticePolygon, cfg: &OracleConfig) -> Result<u64, OracleError> {
    with_retries(p, cfg, hessian_curve)
}

/// Torus points of a random curve on `P` with vertical tangent: `#{f = f_y = 0}`.
pub fn vertical_tangent_oracle(p: &LatticePolygon, cfg: &OracleConfig) -> Result<u64, OracleError> {
    with_retries(p, cfg, SparsePoly::dy)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(terms: &[((i64, i64), i64)]) -> SparsePoly {
        SparsePoly::from_int_terms(terms)
    }

    #[test]
    fn linear_system() {
        // x + y - 3 = 0, x - y - 1 = 0 → (2, 1)
        let f = sp(&[((1, 0), 1), ((0, 1), 1), ((0, 0), -3)]);
        let g = sp(&[((1, 0), 1), ((0, 1), -1), ((0, 0), -1)]);
        assert_eq!(count_torus_solutions(&f, &g, &OracleConfig::default()), Ok(1));
    }

    #[test]
    fn parabola_meets_line() {
        let f = sp(&[((0, 1), 1), ((2, 0), -1)]);
        let g = sp(&[((0, 1), 1), ((0, 0), -1)]);
        assert_eq!(count_torus_solutions(&f, &g, &OracleConfig::default()), Ok(2));
    }

    #[test]
    fn solutions_off_the_torus_are_dropped() {
        // y = x and y = x(x - 1): common zeros (0,0) and (2,2)
        let f = sp(&[((0, 1), 1), ((1, 0), -1)]);
        let g = sp(&[((0, 1), 1), ((2, 0), -1), ((1, 0), 1)]);
        assert_eq!(count_torus_solutions(&f, &g, &OracleConfig::default()), Ok(1));
    }

    #[test]
    fn sampling_is_deterministic() {
        let rect = LatticePolygon::rectangle(3, 4);
        let cfg = OracleConfig::with_seed(7);
        let f = sample_poly(&rect, &cfg);
        assert_eq!(f, sample_poly(&rect, &cfg));
        assert_eq!(f.term_count(), 20);
        assert_eq!(f.monomial_content(), LatticePoint::new(2, 2));
        let d = sample_poly(&LatticePolygon::standard_triangle(1), &cfg);
        assert_eq!(d.term_count(), 3);
        assert!(d.newton_polygon().unwrap().is_translate_of(&LatticePolygon::standard_triangle(1)));
        assert!(d.terms().values().all(|c| c.numer().magnitude() <= &1000u32.into()));
    }

    #[test]
    fn small_oracle_counts() {
        let cfg = OracleConfig::with_seed(1);
        assert_eq!(vertical_tangent_oracle(&LatticePolygon::standard_triangle(2), &cfg), Ok(2));
        let hyperbola = LatticePolygon::from_coords(&[(0, 0), (0, 1), (1, 1)]).unwrap();
        assert_eq!(vertical_tangent_oracle(&hyperbola, &cfg), Ok(0));
        assert_eq!(inflection_oracle(&hyperbola, &cfg), Ok(0));
    }
}
