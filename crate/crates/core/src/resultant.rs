//! Exact resultants of integer polynomials by the subresultant remainder sequence,
//! and the circulant determinant of a parameter tuple.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::words::ParamTuple;

/// Dense integer polynomial, coefficients from the constant term up; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(Vec<BigInt>);

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn div_scalar(&self, d: &BigInt) -> Poly {
        Poly::new(self.0.iter().map(|c| {
            debug_assert!((c % d).is_zero());
            c / d
        }).collect())
    }

    /// Pseudo-remainder `lc(b)^{deg a - deg b + 1} · a mod b`.
    pub fn pseudo_rem(&self, b: &Poly) -> Poly {
        let db = b.degree().expect("nonzero divisor");
        let Some(da) = self.degree() else { return self.clone() };
        if da < db {
            return self.clone();
        }
        let lb = b.leading();
        let mut remaining = da - db + 1;
        let mut r = self.0.clone();
        while r.len() > db {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (i, bc) in b.0.iter().enumerate() {
                r[dr - db + i] -= &lr * bc;
            }
            remaining -= 1;
            while r.last().map_or(false, Zero::is_zero) {
                r.pop();
            }
        }
        let scale = pow(&lb, remaining);
        Poly::new(r.into_iter().map(|c| c * &scale).collect())
    }
}

fn pow(b: &BigInt, e: usize) -> BigInt {
    num_traits::pow(b.clone(), e)
}

/// `Res(a, b)` with the convention `Res(a, b) = lc(a)^{deg b} ∏_{a(ω)=0} b(ω)`.
pub fn resultant(a: &Poly, b: &Poly) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let (ca, cb) = (a.content(), b.content());
    let (da0, db0) = (a.degree().unwrap(), b.degree().unwrap());
    let t = pow(&ca, db0) * pow(&cb, da0);
    let mut a = a.div_scalar(&ca);
    let mut b = b.div_scalar(&cb);
    let mut s = BigInt::one();
    if da0 < db0 {
        std::mem::swap(&mut a, &mut b);
        if da0 % 2 == 1 && db0 % 2 == 1 {
            s = -s;
        }
    }
    if b.degree() == Some(0) {
        return s * t * pow(&b.leading(), a.degree().unwrap());
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = &g * pow(&h, delta);
        b = r.div_scalar(&divisor);
        g = a.leading();
        h = if delta == 0 {
            h
        } else {
            pow(&g, delta) / pow(&h, delta - 1)
        };
        match b.degree() {
            None => return BigInt::zero(),
            Some(0) => {
                let da = a.degree().unwrap();
                let lb = b.leading();
                let h = if da == 0 { h } else { pow(&lb, da) / pow(&h, da - 1) };
                return s * t * h;
            }
            Some(_) => {}
        }
    }
}

/// `1 + x^j + x^k + x^l`.
pub fn word_polynomial(t: &ParamTuple) -> Poly {
    let mut c = vec![0i64; t.n as usize];
    for e in [0, t.j, t.k, t.l] {
        c[e as usize] += 1;
    }
    Poly::from_i64(&c)
}

/// Determinant of the relation matrix as `Res(x^n - 1, 1 + x^j + x^k + x^l)`.
pub fn circulant_det(t: &ParamTuple) -> BigInt {
    let mut g = vec![BigInt::zero(); t.n as usize + 1];
    g[0] = BigInt::from(-1);
    g[t.n as usize] = BigInt::one();
    resultant(&Poly::new(g), &word_polynomial(t))
}

pub fn abs_circulant_det(t: &ParamTuple) -> BigInt {
    circulant_det(t).abs()
}
