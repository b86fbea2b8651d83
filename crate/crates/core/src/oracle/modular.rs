//! Word-size prime fields and dense polynomials over them, plus Chinese
//! remaindering back to ℤ.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prime(u64);

impl Prime {
    pub fn value(self) -> u64 {
        self.0
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 { s - self.0 } else { s }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b { a - b } else { a + self.0 - b }
    }

    pub fn neg(self, a: u64) -> u64 {
        if a == 0 { 0 } else { self.0 - a }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.0 - 2)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let f = Prime(n);
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = f.pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = f.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^62` in decreasing order.
pub fn primes() -> impl Iterator<Item = Prime> {
    let mut n = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime(n) {
            n -= 2;
        }
        let p = n;
        n -= 2;
        Some(Prime(p))
    })
}

pub fn reduce(c: &BigInt, p: Prime) -> u64 {
    c.mod_floor(&BigInt::from(p.0)).to_u64().expect("residue fits")
}

pub fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn eval(a: &[u64], x: u64, p: Prime) -> u64 {
    a.iter().rev().fold(0, |acc, &c| p.add(p.mul(acc, x), c))
}

/// Remainder of `a` by `b` (`b` nonzero, trimmed).
pub fn rem(a: &[u64], b: &[u64], p: Prime) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let inv = p.inv(b[db]);
    while r.len() > db {
        let top = r.len() - 1;
        let q = p.mul(r[top], inv);
        if q != 0 {
            for (j, &c) in b.iter().enumerate() {
                let k = top - db + j;
                r[k] = p.sub(r[k], p.mul(q, c));
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Monic gcd; empty for `gcd(0, 0)`.
pub fn gcd(a: &[u64], b: &[u64], p: Prime) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        let inv = p.inv(lc);
        for c in &mut a {
            *c = p.mul(*c, inv);
        }
    }
    a
}

/// Resultant of two polynomials with nonzero leading coefficients, taken with
/// their actual degrees.
pub fn resultant(a: &[u64], b: &[u64], p: Prime) -> u64 {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let mut acc = 1u64;
    loop {
        let n = (a.len() - 1) as u64;
        let m = (b.len() - 1) as u64;
        if m == 0 {
            return p.mul(acc, p.pow(b[0], n));
        }
        if n == 0 {
            return p.mul(acc, p.pow(a[0], m));
        }
        let r = rem(&a, &b, p);
        if r.is_empty() {
            return 0;
        }
        let k = (r.len() - 1) as u64;
        if n % 2 == 1 && m % 2 == 1 {
            acc = p.neg(acc);
        }
        acc = p.mul(acc, p.pow(b[m as usize], n - k));
        a = b;
        b = r;
    }
}

/// Coefficients of the polynomial of degree `< xs.len()` through the points.
pub fn interpolate(xs: &[u64], ys: &[u64], p: Prime) -> Vec<u64> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = p.sub(dd[i], dd[i - 1]);
            let den = p.sub(xs[i], xs[i - j]);
            dd[i] = p.mul(num, p.inv(den));
        }
    }
    let mut out = vec![0u64; n];
    for i in (0..n).rev() {
        // out = out * (x - xs[i]) + dd[i]
        let mut next = vec![0u64; n];
        for k in 0..n {
            if out[k] == 0 {
                continue;
            }
            if k + 1 < n {
                next[k + 1] = p.add(next[k + 1], out[k]);
            }
            next[k] = p.sub(next[k], p.mul(out[k], xs[i]));
        }
        next[0] = p.add(next[0], dd[i]);
        out = next;
    }
    out
}

/// Running Chinese remaindering of an integer vector.
#[derive(Clone, Debug)]
pub struct CrtVec {
    modulus: BigUint,
    values: Vec<BigUint>,
}

impl CrtVec {
    pub fn new(len: usize) -> Self {
        CrtVec { modulus: BigUint::one(), values: vec![BigUint::zero(); len] }
    }

    pub fn modulus_bits(&self) -> u64 {
        self.modulus.bits()
    }

    pub fn add_residues(&mut self, residues: &[u64], p: Prime) {
        assert_eq!(residues.len(), self.values.len());
        let pb = BigUint::from(p.0);
        let m_mod_p = (&self.modulus % &pb).to_u64().expect("fits");
        let m_inv = p.inv(m_mod_p);
        for (v, &r) in self.values.iter_mut().zip(residues) {
            let v_mod_p = (&*v % &pb).to_u64().expect("fits");
            let t = p.mul(p.sub(r, v_mod_p), m_inv);
            if t != 0 {
                *v += &self.modulus * t;
            }
        }
        self.modulus *= pb;
    }

    /// Symmetric lift into `(-M/2, M/2]`.
    pub fn lift(&self) -> Vec<BigInt> {
        let half = &self.modulus >> 1;
        self.values
            .iter()
            .map(|v| {
                if *v > half {
                    BigInt::from(v.clone()) - BigInt::from(self.modulus.clone())
                } else {
                    BigInt::from(v.clone())
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_primes_are_prime() {
        let ps: Vec<u64> = primes().take(3).map(Prime::value).collect();
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(ps.iter().all(|&p| p < 1 << 62 && p > 1 << 61));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
    }

    #[test]
    fn resultant_small() {
        let p = primes().next().unwrap();
        // res(x - 2, x - 5) = -3... with our convention res(a,b) = lc(a)^m Π b(roots of a) = b(2) = -3
        let r = resultant(&[p.neg(2), 1], &[p.neg(5), 1], p);
        assert_eq!(r, p.neg(3));
        // res(x^2 - 1, x - 3) = Π_{a=±1} (a - 3) = 8
        assert_eq!(resultant(&[p.neg(1), 0, 1], &[p.neg(3), 1], p), 8);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = primes().next().unwrap();
        let poly = [5u64, 0, 7, 1];
        let xs: Vec<u64> = (1..=4).collect();
        let ys: Vec<u64> = xs.iter().map(|&x| eval(&poly, x, p)).collect();
        assert_eq!(interpolate(&xs, &ys, p), poly.to_vec());
    }

    #[test]
    fn crt_recovers_negative_values() {
        let mut crt = CrtVec::new(2);
        let target = [BigInt::from(-123456789012345678i64) * BigInt::from(1i64 << 40), BigInt::from(42)];
        for p in primes().take(3) {
            let r: Vec<u64> = target.iter().map(|c| reduce(c, p)).collect();
            crt.add_residues(&r, p);
        }
        assert_eq!(crt.lift(), target.to_vec());
    }
}
