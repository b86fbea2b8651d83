//! Simultaneous complex root finding (Aberth–Ehrlich) for univariate polynomials.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{FromPrimitive, ToPrimitive, Zero};

use super::zpoly::ZPoly;

const MAX_ITER: usize = 600;
const EPS: f64 = 4.0 * f64::EPSILON;
/// Fractional bits of the fixed-point evaluation in [`exact_ratio`].
const PREC: u32 = 160;
const REFINE_ITER: usize = 60;

/// `m · 2^e` without intermediate overflow.
fn ldexp(m: f64, e: i64) -> f64 {
    let mut x = m;
    let mut e = e;
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e as i32)
}

/// `c ≈ m · 2^e` with `m` a float of moderate size.
fn split(c: &BigInt) -> (f64, i64) {
    let bits = c.bits() as i64;
    let shift = (bits - 60).max(0);
    let top = c >> shift as usize;
    (top.to_f64().expect("60-bit value"), shift)
}

/// Float coefficients of `a(ρ z)` scaled to a maximum modulus of one, where
/// `ρ = 2^s` balances the leading and constant terms. Returns the
/// coefficients and `ρ`.
pub fn scaled_coefficients(a: &ZPoly) -> (Vec<f64>, f64) {
    let parts: Vec<Option<(f64, i64)>> = a
        .coeffs()
        .iter()
        .map(|c| (!c.is_zero()).then(|| split(c)))
        .collect();
    let log2 = |(m, e): (f64, i64)| m.abs().log2() + e as f64;
    let n = parts.len() - 1;
    let lo = parts.iter().position(Option::is_some).expect("nonzero");
    let s = if n > lo {
        let l0 = log2(parts[lo].unwrap());
        let ln = log2(parts[n].unwrap());
        ((l0 - ln) / (n - lo) as f64).round() as i64
    } else {
        0
    };
    let logs: Vec<Option<f64>> = parts
        .iter()
        .enumerate()
        .map(|(i, p)| p.map(|q| log2(q) + (s * i as i64) as f64))
        .collect();
    let top = logs.iter().flatten().cloned().fold(f64::NEG_INFINITY, f64::max).ceil() as i64;
    let coeffs = parts
        .iter()
        .enumerate()
        .map(|(i, p)| match p {
            None => 0.0,
            Some((m, e)) => ldexp(*m, e + s * i as i64 - top),
        })
        .collect();
    (coeffs, ldexp(1.0, s))
}

/// `p(z) / p'(z)`, evaluated in reversed form outside the unit disc, and
/// whether `|p(z)|` is at rounding level.
fn newton_ratio(c: &[Complex64], z: Complex64) -> (Complex64, bool) {
    let n = c.len() - 1;
    let tol = 4.0 * (n as f64 + 1.0) * f64::EPSILON;
    if z.norm() <= 1.0 {
        let az = z.norm();
        let mut p = c[n];
        let mut dp = Complex64::zero();
        let mut abs = c[n].norm();
        for k in (0..n).rev() {
            dp = dp * z + p;
            p = p * z + c[k];
            abs = abs * az + c[k].norm();
        }
        (p / dp, p.norm() <= tol * abs)
    } else {
        let w = z.inv();
        let aw = w.norm();
        let mut q = c[0];
        let mut dq = Complex64::zero();
        let mut abs = c[0].norm();
        for &ck in &c[1..=n] {
            dq = dq * w + q;
            q = q * w + ck;
            abs = abs * aw + ck.norm();
        }
        // p(z) = z^n q(w), p'(z) = z^(n-1) (n q(w) - w q'(w))
        (z * q / (q * n as f64 - w * dq), q.norm() <= tol * abs)
    }
}

/// Initial approximations on circles whose radii come from the upper convex
/// hull of `(i, log|c_i|)`.
fn initial_guesses(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let pts: Vec<(usize, f64)> = c
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm() > 0.0)
        .map(|(i, a)| (i, a.norm().ln()))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 as f64 - a.0 as f64) * (p.1 - a.1) - (b.1 - a.1) * (p.0 as f64 - a.0 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut out = Vec::with_capacity(n);
    let sigma = 0.7;
    for w in hull.windows(2) {
        let (i, j) = (w[0].0, w[1].0);
        let k = j - i;
        let r = ((w[0].1 - w[1].1) / k as f64).exp();
        for t in 0..k {
            let ang = 2.0 * std::f64::consts::PI * (t as f64 / k as f64) + 2.0 * std::f64::consts::PI * i as f64 / n as f64 + sigma;
            out.push(Complex64::from_polar(r, ang));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// Every approximation met the stopping criterion.
    pub converged: bool,
}

/// All complex roots of `Σ c_i z^i` (nonzero leading and constant terms).
pub fn aberth(c: &[Complex64]) -> RootSet {
    let n = c.len() - 1;
    if n == 0 {
        return RootSet { roots: Vec::new(), converged: true };
    }
    assert!(c[n].norm() > 0.0 && c[0].norm() > 0.0, "leading and constant terms must be nonzero");
    if n == 1 {
        return RootSet { roots: vec![-c[0] / c[1]], converged: true };
    }
    let mut z = initial_guesses(c);
    let mut done = vec![false; n];
    for _ in 0..MAX_ITER {
        if done.iter().all(|&d| d) {
            break;
        }
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (ratio, small) = newton_ratio(c, z[i]);
            let sum: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !step.re.is_finite() || !step.im.is_finite() {
                done[i] = small;
                continue;
            }
            z[i] -= step;
            if small || step.norm() <= EPS * z[i].norm().max(f64::MIN_POSITIVE) {
                done[i] = true;
            }
        }
    }
    RootSet { roots: z, converged: done.iter().all(|&d| d) }
}

fn to_fixed(v: f64) -> BigInt {
    BigInt::from_f64(ldexp(v, PREC as i64)).expect("finite")
}

fn shift(c: &BigInt, by: i64) -> BigInt {
    if by >= 0 {
        c >> by as usize
    } else {
        c << (-by) as usize
    }
}

/// `p(z) / p'(z)` with `p` given by exact integer coefficients.
///
/// Horner runs in fixed point at an absolute scale `2^s`, `PREC` bits below
/// the largest term `|c_i| |w|^i`. With `|w| ≤ 1` rounding errors are damped
/// by later multiplications, so the value is accurate to about `2^-PREC`
/// relative to that term, far beyond what `f64` evaluation delivers near
/// clustered roots. Outside the unit disc the reversed polynomial is used.
fn exact_ratio(c: &[BigInt], z: Complex64) -> Complex64 {
    let n = c.len() - 1;
    let reversed = z.norm() > 1.0;
    let w = if reversed { z.inv() } else { z };
    let b = |i: usize| if reversed { &c[n - i] } else { &c[i] };
    let lw = w.norm().log2();
    let top = (0..=n)
        .filter(|&i| !b(i).is_zero())
        .map(|i| {
            let (m, e) = split(b(i));
            m.abs().log2() + e as f64 + if i == 0 { 0.0 } else { i as f64 * lw }
        })
        .fold(f64::NEG_INFINITY, f64::max);
    let s = top.floor() as i64 - PREC as i64;
    let (wr, wi) = (to_fixed(w.re), to_fixed(w.im));
    let (mut pr, mut pi) = (BigInt::zero(), BigInt::zero());
    let (mut dr, mut di) = (BigInt::zero(), BigInt::zero());
    for i in (0..=n).rev() {
        let ndr = ((&dr * &wr - &di * &wi) >> PREC as usize) + &pr;
        let ndi = ((&dr * &wi + &di * &wr) >> PREC as usize) + &pi;
        let npr = ((&pr * &wr - &pi * &wi) >> PREC as usize) + shift(b(i), s);
        let npi = (&pr * &wi + &pi * &wr) >> PREC as usize;
        (pr, pi, dr, di) = (npr, npi, ndr, ndi);
    }
    let bits = [&pr, &pi, &dr, &di].iter().map(|v| v.bits()).max().unwrap_or(0) as i64;
    let t = (bits - 900).max(0) as usize;
    let f = |v: &BigInt| (v >> t).to_f64().unwrap_or(0.0);
    let q = Complex64::new(f(&pr), f(&pi));
    let dq = Complex64::new(f(&dr), f(&di));
    if reversed {
        // p(z) = z^n q(w), p'(z) = z^(n-1) (n q(w) - w q'(w))
        z * q / (q * n as f64 - w * dq)
    } else {
        q / dq
    }
}

/// Aberth iterations with Newton ratios from [`exact_ratio`]; starts from
/// the `f64` roots of the scaled polynomial.
fn refine(c: &[BigInt], z: &mut [Complex64]) -> bool {
    let n = z.len();
    let mut done = vec![false; n];
    for _ in 0..REFINE_ITER {
        if done.iter().all(|&d| d) {
            return true;
        }
        for i in 0..n {
            if done[i] {
                continue;
            }
            let ratio = exact_ratio(c, z[i]);
            let sum: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !step.re.is_finite() || !step.im.is_finite() {
                done[i] = ratio.norm() == 0.0;
                continue;
            }
            z[i] -= step;
            if step.norm() <= EPS * z[i].norm() {
                done[i] = true;
            }
        }
    }
    done.iter().all(|&d| d)
}

/// Roots of an integer polynomial with nonzero constant term.
pub fn integer_roots(a: &ZPoly) -> RootSet {
    let (coeffs, rho) = scaled_coefficients(a);
    let c: Vec<Complex64> = coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let mut set = aberth(&c);
    for r in &mut set.roots {
        *r *= rho;
    }
    if set.roots.len() > 1 {
        set.converged = refine(a.coeffs(), &mut set.roots);
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_re(mut v: Vec<Complex64>) -> Vec<f64> {
        v.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        v.iter().map(|z| z.re).collect()
    }

    #[test]
    fn integer_polynomial_roots() {
        // (x - 1)(x - 2)(x + 3)(x - 1000)
        let a = ZPoly::from_i64(&[1, -1])
            .mul(&ZPoly::from_i64(&[-2, 1]))
            .mul(&ZPoly::from_i64(&[3, 1]))
            .mul(&ZPoly::from_i64(&[-1000, 1]));
        let set = integer_roots(&a);
        assert!(set.converged);
        let re = sorted_re(set.roots);
        for (r, e) in re.iter().zip([-3.0, 1.0, 2.0, 1000.0]) {
            assert!((r - e).abs() < 1e-9 * e.abs().max(1.0), "{re:?}");
        }
    }

    #[test]
    fn roots_of_unity_and_wide_range() {
        let mut c = vec![Complex64::zero(); 13];
        c[0] = Complex64::new(-1.0, 0.0);
        c[12] = Complex64::new(1.0, 0.0);
        let set = aberth(&c);
        assert!(set.converged);
        for z in set.roots {
            assert!((z.powi(12) - 1.0).norm() < 1e-12);
        }
        // roots 10^-6 and 10^6 together
        let a = ZPoly::from_i64(&[1, -1_000_000]).mul(&ZPoly::from_i64(&[-1_000_000, 1]));
        let re = sorted_re(integer_roots(&a).roots);
        assert!((re[0] - 1e-6).abs() < 1e-18 && (re[1] - 1e6).abs() < 1e-6);
    }

    #[test]
    fn huge_coefficients_do_not_overflow() {
        // coefficients far beyond the f64 range
        let big = ZPoly::from_i64(&[-7, 2]).pow(400);
        let (c, _) = scaled_coefficients(&big);
        assert!(c.iter().all(|x| x.is_finite()));
        let set = integer_roots(&ZPoly::from_i64(&[-7, 2]).mul(&ZPoly::from_i64(&[5, 1])).pow(1));
        let re = sorted_re(set.roots);
        assert!((re[0] + 5.0).abs() < 1e-12 && (re[1] - 3.5).abs() < 1e-12);
    }

    #[test]
    fn clustered_roots_are_refined() {
        // (x - 1)^2 + 10^-20 perturbation: roots 1 ± 10^-10 i, unreachable in f64 evaluation
        let e = BigInt::from(10).pow(20);
        let a = ZPoly::new(vec![&e + 1, -2 * &e, e.clone()]);
        let set = integer_roots(&a);
        assert!(set.converged);
        for r in set.roots {
            assert!((r.re - 1.0).abs() < 1e-15 && (r.im.abs() - 1e-10).abs() < 1e-18, "{r}");
        }
    }
}
