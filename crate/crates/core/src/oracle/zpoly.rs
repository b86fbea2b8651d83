//! Dense univariate polynomials over ℤ, ascending coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modular::{self, Prime};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        ZPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn constant(c: BigInt) -> Self {
        ZPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        ZPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> ZPoly {
        let mut acc = ZPoly::constant(BigInt::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> ZPoly {
        ZPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self` in ℤ[x].
    pub fn exact_div(&self, d: &ZPoly) -> Option<ZPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let n = self.degree()?;
        if n < dd {
            return None;
        }
        let lc = d.lc();
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (quot, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &quot * c;
            }
            q[k] = quot;
        }
        rem.iter().all(Zero::is_zero).then(|| ZPoly::new(q))
    }

    /// Divide every coefficient by the integer `c`, which must divide them all.
    pub fn div_scalar_exact(&self, c: &BigInt) -> ZPoly {
        ZPoly::new(
            self.coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Factor out the largest power of `x`; returns the exponent and the rest.
    pub fn strip_x_power(&self) -> (usize, ZPoly) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (k, ZPoly::new(self.coeffs[k.min(self.coeffs.len())..].to_vec()))
    }

    /// Reduction modulo a prime, ascending residues (untrimmed).
    pub fn reduce(&self, p: Prime) -> Vec<u64> {
        self.coeffs.iter().map(|c| modular::reduce(c, p)).collect()
    }

    pub fn eval_mod(&self, a: u64, p: Prime) -> u64 {
        let mut acc = 0u64;
        for c in self.coeffs.iter().rev() {
            acc = p.add(p.mul(acc, a), modular::reduce(c, p));
        }
        acc
    }

    /// `max |c_i|` in bits.
    pub fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    /// `Σ |c_i|`.
    pub fn norm1(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = ZPoly::from_i64(&[1, 1]);
        let b = ZPoly::from_i64(&[-1, 1]);
        assert_eq!(a.mul(&b), ZPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(a.mul(&b).exact_div(&a), Some(b.clone()));
        assert_eq!(ZPoly::from_i64(&[1, 0, 1]).exact_div(&a), None);
        assert_eq!(ZPoly::from_i64(&[0, 0, 3, 6]).strip_x_power(), (2, ZPoly::from_i64(&[3, 6])));
        assert_eq!(ZPoly::from_i64(&[4, -6, -2]).primitive(), ZPoly::from_i64(&[-2, 3, 1]));
        assert_eq!(ZPoly::from_i64(&[1, 2, 3]).derivative(), ZPoly::from_i64(&[2, 6]));
        assert_eq!(ZPoly::from_i64(&[-1, 0, 2]).to_string(), "2*x^2 - 1");
    }
}
