//! Elimination of `y` from two bivariate polynomials.
//!
//! [`resultant_y`] runs the subresultant PRS over ℤ[x]. [`resultant_y_modular`]
//! computes the same polynomial by evaluation/interpolation modulo word-size
//! primes and Chinese remaindering; it is the fast path for large supports.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::modular::{self, CrtVec};
use super::poly::SparsePoly;
use super::zpoly::ZPoly;
use super::OracleError;

type YPoly = Vec<ZPoly>;

fn trim(a: &mut YPoly) {
    while a.last().is_some_and(ZPoly::is_zero) {
        a.pop();
    }
}

fn deg(a: &YPoly) -> usize {
    a.len() - 1
}

fn lc(a: &YPoly) -> &ZPoly {
    a.last().expect("nonzero")
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) · a = q·b + r`.
fn prem(a: &YPoly, b: &YPoly) -> YPoly {
    let n = deg(b);
    let lb = lc(b).clone();
    let mut r = a.clone();
    let mut e = deg(a) + 1 - n;
    while !r.is_empty() && deg(&r) >= n {
        let lr = lc(&r).clone();
        let shift = deg(&r) - n;
        let mut next: YPoly = r.iter().map(|c| c.mul(&lb)).collect();
        for (j, c) in b.iter().enumerate() {
            next[shift + j] = next[shift + j].sub(&c.mul(&lr));
        }
        trim(&mut next);
        r = next;
        e -= 1;
    }
    let factor = lb.pow(e);
    r.iter().map(|c| c.mul(&factor)).collect()
}

fn div_exact(a: &YPoly, d: &ZPoly) -> YPoly {
    a.iter()
        .map(|c| c.exact_div(d).expect("subresultant division is exact"))
        .collect()
}

fn prs_resultant(a: YPoly, b: YPoly) -> ZPoly {
    let (mut a, mut b) = (a, b);
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return ZPoly::zero();
    }
    let mut negate = false;
    if deg(&a) < deg(&b) {
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            negate = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let one = ZPoly::constant(BigInt::one());
    if deg(&b) == 0 {
        let r = lc(&b).pow(deg(&a));
        return if negate { r.neg() } else { r };
    }
    let mut g = one.clone();
    let mut h = one;
    loop {
        let delta = deg(&a) - deg(&b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            negate = !negate;
        }
        let r = prem(&a, &b);
        a = b;
        if r.is_empty() {
            return ZPoly::zero();
        }
        b = div_exact(&r, &g.mul(&h.pow(delta)));
        g = lc(&a).clone();
        if delta > 0 {
            h = g.pow(delta).exact_div(&h.pow(delta - 1)).expect("exact");
        }
        if deg(&b) == 0 {
            break;
        }
    }
    let da = deg(&a);
    let r = lc(&b).pow(da).exact_div(&h.pow(da - 1)).expect("exact");
    if negate { r.neg() } else { r }
}

fn require_y(f: &SparsePoly, g: &SparsePoly) -> Result<(YPoly, YPoly), OracleError> {
    if f.is_zero() || g.is_zero() {
        return Err(OracleError::ZeroResultant);
    }
    let (a, b) = (f.to_zpoly_in_y(), g.to_zpoly_in_y());
    if a.len() < 2 && b.len() < 2 {
        return Err(OracleError::degenerate("neither polynomial involves y"));
    }
    Ok((a, b))
}

/// `Res_y(f, g)` in ℤ[x], via the subresultant PRS.
///
/// Denominators are cleared first, so the result is determined up to a
/// nonzero rational constant.
pub fn resultant_y(f: &SparsePoly, g: &SparsePoly) -> Result<ZPoly, OracleError> {
    let (a, b) = require_y(f, g)?;
    let r = prs_resultant(a, b);
    if r.is_zero() {
        return Err(OracleError::ZeroResultant);
    }
    Ok(r)
}

/// Same polynomial as [`resultant_y`], by multi-modular evaluation and interpolation.
pub fn resultant_y_modular(f: &SparsePoly, g: &SparsePoly) -> Result<ZPoly, OracleError> {
    let (a, b) = require_y(f, g)?;
    let (n, m) = (a.len() - 1, b.len() - 1);
    let xdeg = |p: &YPoly| p.iter().filter_map(ZPoly::degree).max().unwrap_or(0);
    let d = n * xdeg(&b) + m * xdeg(&a);
    let norm_bits = |p: &YPoly| {
        let s: BigInt = p.iter().map(ZPoly::norm1).sum();
        s.bits()
    };
    // |coefficients| ≤ ‖a‖₁^m ‖b‖₁^n
    let bound_bits = m as u64 * norm_bits(&a) + n as u64 * norm_bits(&b) + 2;

    let mut crt = CrtVec::new(d + 1);
    for p in modular::primes() {
        let (la, lb) = (a[n].reduce(p), b[m].reduce(p));
        if la.iter().all(|&c| c == 0) || lb.iter().all(|&c| c == 0) {
            continue;
        }
        let mut xs = Vec::with_capacity(d + 1);
        let mut ys = Vec::with_capacity(d + 1);
        let mut x = 0u64;
        while xs.len() <= d {
            x += 1;
            if modular::eval(&la, x, p) == 0 || modular::eval(&lb, x, p) == 0 {
                continue;
            }
            let ea: Vec<u64> = a.iter().map(|c| c.eval_mod(x, p)).collect();
            let eb: Vec<u64> = b.iter().map(|c| c.eval_mod(x, p)).collect();
            xs.push(x);
            ys.push(modular::resultant(&ea, &eb, p));
        }
        crt.add_residues(&modular::interpolate(&xs, &ys, p), p);
        if crt.modulus_bits() > bound_bits + 1 {
            break;
        }
    }
    let r = ZPoly::new(crt.lift());
    if r.is_zero() {
        return Err(OracleError::ZeroResultant);
    }
    Ok(r)
}

/// Squarefree part of a nonzero polynomial: `a / gcd(a, a')`, primitive.
pub fn squarefree_part(a: &ZPoly) -> ZPoly {
    let a = a.primitive();
    match a.degree() {
        None | Some(0) => a,
        Some(_) => a.exact_div(&gcd(&a, &a.derivative())).expect("gcd divides").primitive(),
    }
}

/// Primitive gcd in ℤ[x], positive leading coefficient.
///
/// Found modulo primes, lifted by Chinese remaindering and certified by exact
/// division of both arguments.
pub fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let normalize = |g: ZPoly| {
        let g = g.primitive();
        if g.lc() < BigInt::from(0) { g.neg() } else { g }
    };
    if a.is_zero() {
        return normalize(b.clone());
    }
    if b.is_zero() {
        return normalize(a.clone());
    }
    let (a, b) = (a.primitive(), b.primitive());
    let lc_bound = a.lc().gcd(&b.lc());
    let mut best: Option<(usize, CrtVec)> = None;
    let mut last: Option<ZPoly> = None;
    for p in modular::primes() {
        let ra = a.reduce(p);
        let rb = b.reduce(p);
        if ra.last() == Some(&0) || rb.last() == Some(&0) {
            continue;
        }
        let gp = modular::gcd(&ra, &rb, p);
        let dg = gp.len() - 1;
        if dg == 0 {
            return ZPoly::from_i64(&[1]);
        }
        let scale = modular::reduce(&lc_bound, p);
        let scaled: Vec<u64> = gp.iter().map(|&c| p.mul(c, scale)).collect();
        match &mut best {
            Some((bd, _)) if dg > *bd => continue,
            Some((bd, crt)) if dg == *bd => crt.add_residues(&scaled, p),
            _ => {
                let mut crt = CrtVec::new(dg + 1);
                crt.add_residues(&scaled, p);
                best = Some((dg, crt));
                last = None;
            }
        }
        let (_, crt) = best.as_ref().expect("set above");
        let candidate = normalize(ZPoly::new(crt.lift()));
        if last.as_ref() == Some(&candidate) && a.exact_div(&candidate).is_some() && b.exact_div(&candidate).is_some()
        {
            return candidate;
        }
        last = Some(candidate);
    }
    unreachable!("prime iterator is infinite")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(terms: &[((i64, i64), i64)]) -> SparsePoly {
        SparsePoly::from_int_terms(terms)
    }

    #[test]
    fn small_resultants() {
        // y - x, y - 2x: common root iff x = 0
        let r = resultant_y(&sp(&[((0, 1), 1), ((1, 0), -1)]), &sp(&[((0, 1), 1), ((1, 0), -2)])).unwrap();
        assert_eq!(r, ZPoly::from_i64(&[0, -1]));
        // y² - x, y
        let r = resultant_y(&sp(&[((0, 2), 1), ((1, 0), -1)]), &sp(&[((0, 1), 1)])).unwrap();
        assert_eq!(r, ZPoly::from_i64(&[0, -1]));
        // common factor
        let f = sp(&[((0, 1), 1), ((1, 0), 1)]);
        assert_eq!(resultant_y(&f, &f), Err(OracleError::ZeroResultant));
        assert_eq!(resultant_y_modular(&f, &f), Err(OracleError::ZeroResultant));
    }

    #[test]
    fn prs_matches_modular_and_roots() {
        // (y - x)(y - 3) and y² + x y - 2: check against the sylvester determinant by hand-free means
        let f = sp(&[((0, 2), 1), ((1, 1), -1), ((0, 1), -3), ((1, 0), 3)]);
        let g = sp(&[((0, 2), 1), ((1, 1), 1), ((0, 0), -2)]);
        let r = resultant_y(&f, &g).unwrap();
        assert_eq!(r, resultant_y_modular(&f, &g).unwrap());
        // roots y = x and y = 3 of f: r ∝ g(x, x)·g(x, 3) = (2x² - 2)(3x + 7)
        let expect = ZPoly::from_i64(&[-2, 0, 2]).mul(&ZPoly::from_i64(&[7, 3]));
        assert_eq!(r, expect);
    }

    #[test]
    fn squarefree() {
        let a = ZPoly::from_i64(&[-1, 1]).pow(3).mul(&ZPoly::from_i64(&[2, 0, 1]));
        assert_eq!(squarefree_part(&a), ZPoly::from_i64(&[-1, 1]).mul(&ZPoly::from_i64(&[2, 0, 1])));
        let b = ZPoly::from_i64(&[3, -7, 0, 5]);
        assert_eq!(squarefree_part(&b), b);
    }

    #[test]
    fn integer_gcd() {
        let common = ZPoly::from_i64(&[-3, 2]).mul(&ZPoly::from_i64(&[1, 0, 1]));
        let a = common.mul(&ZPoly::from_i64(&[5, 7])).scale(&BigInt::from(6));
        let b = common.mul(&ZPoly::from_i64(&[-1, 0, 0, 4])).neg();
        assert_eq!(gcd(&a, &b), common);
        assert_eq!(gcd(&a, &ZPoly::from_i64(&[1, 1])), ZPoly::from_i64(&[1]));
        assert_eq!(gcd(&ZPoly::zero(), &b), common.mul(&ZPoly::from_i64(&[-1, 0, 0, 4])));
    }
}
