//! Sparse bivariate Laurent polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::lattice::{Face, GeometryError, LatticePoint, LatticePolygon};

use super::zpoly::ZPoly;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparsePoly {
    terms: BTreeMap<LatticePoint, BigRational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (LatticePoint, BigRational)>) -> Self {
        let mut out = SparsePoly::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// Integer coefficients keyed by `(i, j)` exponents of `x^i y^j`.
    pub fn from_int_terms(terms: &[((i64, i64), i64)]) -> Self {
        SparsePoly::from_terms(terms.iter().map(|&(e, c)| (e.into(), BigRational::from_integer(c.into()))))
    }

    fn add_term(&mut self, e: LatticePoint, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<LatticePoint, BigRational> {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: LatticePoint) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms.keys().copied().collect()
    }

    pub fn newton_polygon(&self) -> Result<LatticePolygon, GeometryError> {
        LatticePolygon::from_points(&self.support())
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> SparsePoly {
        SparsePoly::from_terms(self.terms.iter().map(|(&e, a)| (e, a * c)))
    }

    /// Multiply by the monomial `x^t.x y^t.y`.
    pub fn shift(&self, t: LatticePoint) -> SparsePoly {
        SparsePoly { terms: self.terms.iter().map(|(&e, c)| (e + t, c.clone())).collect() }
    }

    /// Componentwise minimum exponent; the origin for the zero polynomial.
    pub fn monomial_content(&self) -> LatticePoint {
        let min_x = self.terms.keys().map(|e| e.x).min().unwrap_or(0);
        let min_y = self.terms.keys().map(|e| e.y).min().unwrap_or(0);
        LatticePoint::new(min_x, min_y)
    }

    /// Divide out the monomial content, so neither `x` nor `y` divides the result.
    pub fn without_monomial_content(&self) -> SparsePoly {
        self.shift(-self.monomial_content())
    }

    pub fn dx(&self) -> SparsePoly {
        SparsePoly::from_terms(
            self.terms
                .iter()
                .map(|(&e, c)| (e - LatticePoint::new(1, 0), c * BigRational::from_integer(e.x.into()))),
        )
    }

    pub fn dy(&self) -> SparsePoly {
        SparsePoly::from_terms(
            self.terms
                .iter()
                .map(|(&e, c)| (e - LatticePoint::new(0, 1), c * BigRational::from_integer(e.y.into()))),
        )
    }

    /// The truncation `f^γ`: terms whose exponents lie on the face.
    pub fn truncate(&self, face: &Face) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().filter(|(e, _)| face.contains(**e)).map(|(&e, c)| (e, c.clone())).collect(),
        }
    }

    pub fn max_y_degree(&self) -> i64 {
        self.terms.keys().map(|e| e.y).max().unwrap_or(0)
    }

    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| to_f64(c) * x.powi(e.x as i32) * y.powi(e.y as i32))
            .sum()
    }

    /// `Σ |c| |x|^i |y|^j`, the natural scale for a residual at `(x, y)`.
    pub fn eval_abs(&self, x: Complex64, y: Complex64) -> f64 {
        let (ax, ay) = (x.norm(), y.norm());
        self.terms
            .iter()
            .map(|(e, c)| to_f64(c).abs() * ax.powi(e.x as i32) * ay.powi(e.y as i32))
            .sum()
    }

    /// Complex coefficients of `f(x0, y)` as a polynomial in `y`, after
    /// dividing by the lowest power of `y`.
    pub fn specialize_x(&self, x0: Complex64) -> Vec<Complex64> {
        let lo = self.monomial_content().y;
        let hi = self.max_y_degree();
        let mut out = vec![Complex64::new(0.0, 0.0); (hi - lo + 1).max(0) as usize];
        for (e, c) in &self.terms {
            out[(e.y - lo) as usize] += to_f64(c) * x0.powi(e.x as i32);
        }
        out
    }

    /// Clear denominators and negative exponents, then view as a polynomial in
    /// `y` with coefficients in ℤ[x] (index = power of `y`).
    pub fn to_zpoly_in_y(&self) -> Vec<ZPoly> {
        if self.is_zero() {
            return Vec::new();
        }
        let low = self.monomial_content();
        let p = self.shift(-LatticePoint::new(low.x.min(0), low.y.min(0)));
        let denom = p.terms.values().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let dy = p.max_y_degree() as usize;
        let dx = p.terms.keys().map(|e| e.x).max().unwrap_or(0) as usize;
        let mut rows = vec![vec![BigInt::zero(); dx + 1]; dy + 1];
        for (e, c) in &p.terms {
            rows[e.y as usize][e.x as usize] = c.numer() * (&denom / c.denom());
        }
        rows.into_iter().map(ZPoly::new).collect()
    }
}

pub(crate) fn to_f64(c: &BigRational) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let unit = a.is_one() && *e != LatticePoint::ORIGIN;
            if !unit {
                write!(f, "{a}")?;
            }
            let mut factors = Vec::new();
            for (name, k) in [("x", e.x), ("y", e.y)] {
                match k {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            if !factors.is_empty() {
                if !unit {
                    f.write_str("*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `x²y²` times the bordered Hessian `det[[f_xx, f_xy, f_x], [f_xy, f_yy, f_y], [f_x, f_y, 0]]`.
///
/// Its zero set meets `{f = 0}` exactly at the inflection points. Intended for
/// `f` whose exponents are all at least 2, where `newt(h) = 3·newt(f)` generically.
pub fn hessian_curve(f: &SparsePoly) -> SparsePoly {
    let fx = f.dx();
    let fy = f.dy();
    let fxx = fx.dx();
    let fxy = fx.dy();
    let fyy = fy.dy();
    let two = BigRational::from_integer(2.into());
    let det = fxy
        .mul(&fx)
        .mul(&fy)
        .scale(&two)
        .sub(&fxx.mul(&fy).mul(&fy))
        .sub(&fyy.mul(&fx).mul(&fx));
    det.shift(LatticePoint::new(2, 2))
}
