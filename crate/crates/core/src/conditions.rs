//! Congruence conditions (A), (B), (C), the primary and secondary divisors, and
//! the parameter normalizations that bring a (B)-tuple to the form `k ≡ 2j`.

use serde::{Deserialize, Serialize};

use crate::arith::{additive_order, gcd, gcd_all, modn};
use crate::error::{Error, Result};
use crate::words::{GammaElement, ParamTuple};

/// Truth values of the three conditions together with the disjunct that fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionStatus {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    /// (A): `2k ≡ 0`.
    pub a_twice_k_zero: bool,
    /// (A): `2j ≡ 2l`.
    pub a_twice_j_eq_twice_l: bool,
    /// (B): `k ≡ 2j`.
    pub b_k_twice_j: bool,
    /// (B): `k ≡ 2l`.
    pub b_k_twice_l: bool,
    /// (B): `j + l ≡ 2k`.
    pub b_j_plus_l_twice_k: bool,
    /// (B): `j + l ≡ 0`.
    pub b_j_plus_l_zero: bool,
    /// (C): `l ≡ j + k`.
    pub c_sum: bool,
    /// (C): `l ≡ j - k`.
    pub c_difference: bool,
}

pub fn eval_conditions(t: &ParamTuple) -> ConditionStatus {
    let (n, j, k, l) = t.as_i64();
    let eq = |x: i64, y: i64| (x - y).rem_euclid(n) == 0;
    let a_twice_k_zero = eq(2 * k, 0);
    let a_twice_j_eq_twice_l = eq(2 * j, 2 * l);
    let b_k_twice_j = eq(k, 2 * j);
    let b_k_twice_l = eq(k, 2 * l);
    let b_j_plus_l_twice_k = eq(j + l, 2 * k);
    let b_j_plus_l_zero = eq(j + l, 0);
    let c_sum = eq(l, j + k);
    let c_difference = eq(l, j - k);
    ConditionStatus {
        a: a_twice_k_zero || a_twice_j_eq_twice_l,
        b: b_k_twice_j || b_k_twice_l || b_j_plus_l_twice_k || b_j_plus_l_zero,
        c: c_sum || c_difference,
        a_twice_k_zero,
        a_twice_j_eq_twice_l,
        b_k_twice_j,
        b_k_twice_l,
        b_j_plus_l_twice_k,
        b_j_plus_l_zero,
        c_sum,
        c_difference,
    }
}

/// `gcd(n, j, k, l)`.
pub fn primary_divisor(t: &ParamTuple) -> u32 {
    let (n, j, k, l) = t.as_i64();
    gcd_all(&[n, j, k, l]) as u32
}

/// `gcd(n, k-2j, l-2k+j, k-2l, j+l)`.
pub fn secondary_divisor(t: &ParamTuple) -> u32 {
    let (n, j, k, l) = t.as_i64();
    gcd_all(&[n, k - 2 * j, l - 2 * k + j, k - 2 * l, j + l]) as u32
}

/// The four-term form `gcd(n, k-2j, k-2l, j+l)`; always equal to [`secondary_divisor`].
pub fn secondary_divisor_reduced(t: &ParamTuple) -> u32 {
    let (n, j, k, l) = t.as_i64();
    gcd_all(&[n, k - 2 * j, k - 2 * l, j + l]) as u32
}

/// Moves a (B)-tuple to one with `k' ≡ 2j'` inside its `Γ_n`-orbit.
///
/// The cases are tried in the order `k ≡ 2j`, `k ≡ 2l`, `j + l ≡ 0`,
/// `j + l ≡ 2k`. The returned element maps `x_0 x_j x_k x_l` to
/// `x_0 x_j' x_k' x_l'`.
pub fn normalize_k2j(t: &ParamTuple) -> Result<(ParamTuple, GammaElement)> {
    let s = eval_conditions(t);
    let n = t.n;
    let (_, j, k, l) = t.as_i64();
    if s.b_k_twice_j {
        return Ok((*t, GammaElement::identity(n)));
    }
    if s.b_k_twice_l {
        return Ok((ParamTuple::new(n, l, k, j)?, GammaElement::sigma(n)));
    }
    if s.b_j_plus_l_zero {
        let g = GammaElement::tau(n).compose(&GammaElement::new(n, false, 0, j, 1)?)?;
        return Ok((ParamTuple::new(n, j, 2 * j, j + k)?, g));
    }
    if s.b_j_plus_l_twice_k {
        // τ², then σ, then θ^{-k}: lands on (n, j-k, -k, l-k) with j'+l' ≡ 0.
        let to_zero_sum = GammaElement::new(n, false, 0, -k, 1)?
            .compose(&GammaElement::sigma(n))?
            .compose(&GammaElement::new(n, false, 2, 0, 1)?)?;
        let jp = j - k;
        let second = GammaElement::tau(n).compose(&GammaElement::new(n, false, 0, jp, 1)?)?;
        let g = second.compose(&to_zero_sum)?;
        return Ok((ParamTuple::new(n, jp, 2 * jp, jp - k)?, g));
    }
    Err(Error::ConditionFailed("(B)", t.to_string()))
}

/// Exponents of `α = a^{l-3j}` and `β = a^{-l-j}` in `u³ α u β`, for `k ≡ 2j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ABForm {
    pub n: u32,
    pub alpha_exp: u32,
    pub beta_exp: u32,
}

impl ABForm {
    pub fn alpha_order(&self) -> u32 {
        additive_order(self.alpha_exp as i64, self.n)
    }

    pub fn beta_order(&self) -> u32 {
        additive_order(self.beta_exp as i64, self.n)
    }

    /// `α = β^{-1}`.
    pub fn alpha_is_beta_inverse(&self) -> bool {
        modn(self.alpha_exp as i64 + self.beta_exp as i64, self.n) == 0
    }

    /// `α = β`.
    pub fn alpha_is_beta(&self) -> bool {
        self.alpha_exp == self.beta_exp
    }
}

pub fn ab_form(t: &ParamTuple) -> Result<ABForm> {
    if !eval_conditions(t).b_k_twice_j {
        return Err(Error::ConditionFailed("k ≡ 2j", t.to_string()));
    }
    let (_, j, _, l) = t.as_i64();
    Ok(ABForm { n: t.n, alpha_exp: modn(l - 3 * j, t.n), beta_exp: modn(-l - j, t.n) })
}

/// The exponent `p` with `ν(z) = a^p` in the (C) decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CForm {
    pub p: u32,
}

/// `p = j` when `l ≡ j + k`, otherwise `p = -l`; the first branch wins when both hold.
pub fn c_form(t: &ParamTuple) -> Result<CForm> {
    let s = eval_conditions(t);
    if s.c_sum {
        Ok(CForm { p: t.j })
    } else if s.c_difference {
        Ok(CForm { p: modn(-(t.l as i64), t.n) })
    } else {
        Err(Error::ConditionFailed("(C)", t.to_string()))
    }
}

/// `gcd(n, 2k)`, the quantity deciding fixed points when (C) holds.
pub fn gcd_n_2k(t: &ParamTuple) -> u32 {
    gcd(t.n as i64, 2 * t.k as i64) as u32
}
