//! Positive length-four words `x_i x_j x_k x_l` over `Z_n` subscripts and the
//! action of `Γ_n = D_4 × (Z_n ⋊ Z_n^*)` on them.
//!
//! The dihedral factor acts on letter positions: `σ` reverses the last three
//! letters (`x_i x_j x_k x_l ↦ x_i x_l x_k x_j`) and `τ` rotates right
//! (`↦ x_l x_i x_j x_k`). The affine factor acts on subscripts: the shift `θ`
//! adds one, a unit `u` multiplies.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, modn, units};
use crate::error::{Error, Result};

/// Parameters `(n, j, k, l)` of the cyclic presentation with relators
/// `x_i x_{i+j} x_{i+k} x_{i+l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParamTuple {
    pub n: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
}

impl ParamTuple {
    /// Builds a tuple, reducing `j, k, l` modulo `n`.
    pub fn new(n: u32, j: i64, k: i64, l: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(ParamTuple { n, j: modn(j, n), k: modn(k, n), l: modn(l, n) })
    }

    /// Every tuple with modulus `n`, in lexicographic `(j, k, l)` order.
    pub fn all_with_modulus(n: u32) -> impl Iterator<Item = ParamTuple> {
        (0..n).flat_map(move |j| {
            (0..n).flat_map(move |k| (0..n).map(move |l| ParamTuple { n, j, k, l }))
        })
    }

    /// The defining word `x_0 x_j x_k x_l`.
    pub fn word(&self) -> Word4 {
        Word4 { n: self.n, subs: [0, self.j, self.k, self.l] }
    }

    pub fn as_i64(&self) -> (i64, i64, i64, i64) {
        (self.n as i64, self.j as i64, self.k as i64, self.l as i64)
    }
}

impl fmt::Display for ParamTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.j, self.k, self.l)
    }
}

/// A positive word `x_i x_j x_k x_l` with subscripts in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word4 {
    pub n: u32,
    pub subs: [u32; 4],
}

impl Word4 {
    pub fn new(n: u32, subs: [i64; 4]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(Word4 { n, subs: subs.map(|s| modn(s, n)) })
    }

    /// Shifts the word so that its first subscript is zero and reads off `(n, j, k, l)`.
    pub fn to_params(&self) -> ParamTuple {
        let i = self.subs[0] as i64;
        let n = self.n;
        ParamTuple {
            n,
            j: modn(self.subs[1] as i64 - i, n),
            k: modn(self.subs[2] as i64 - i, n),
            l: modn(self.subs[3] as i64 - i, n),
        }
    }
}

impl fmt::Display for Word4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.subs;
        write!(f, "x{a} x{b} x{c} x{d} @ n={}", self.n)
    }
}

impl FromStr for Word4 {
    type Err = Error;

    /// Parses `"x0 x3 x1 x1 @ n=5"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        let (letters, modulus) = s.split_once('@').ok_or_else(|| bad(0, "expected `@ n=<modulus>`"))?;
        let modulus = modulus.trim();
        let n: u32 = modulus
            .strip_prefix("n")
            .map(str::trim_start)
            .and_then(|m| m.strip_prefix('='))
            .and_then(|m| m.trim().parse().ok())
            .ok_or_else(|| bad(letters.len() + 1, "expected `n=<modulus>`"))?;
        let mut subs = Vec::with_capacity(4);
        let mut offset = 0;
        for tok in letters.split_whitespace() {
            let pos = s[offset..].find(tok).map_or(offset, |p| p + offset);
            offset = pos + tok.len();
            let idx = tok
                .strip_prefix('x')
                .and_then(|d| d.parse::<i64>().ok())
                .ok_or_else(|| bad(pos, "expected a letter of the form x<subscript>"))?;
            subs.push(idx);
        }
        let subs: [i64; 4] =
            subs.try_into().map_err(|_| bad(0, "expected exactly four letters"))?;
        Word4::new(n, subs)
    }
}

/// An element `σ^s τ^t θ^m u` of `Γ_n`, acting on words as
/// "multiply by `u`, then shift by `m`, then rotate by `τ^t`, then reflect by `σ^s`".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaElement {
    pub n: u32,
    pub reflect: bool,
    pub rotate: u8,
    pub shift: u32,
    pub unit: u32,
}

impl GammaElement {
    pub fn identity(n: u32) -> Self {
        GammaElement { n, reflect: false, rotate: 0, shift: 0, unit: 1 % n.max(1) }
    }

    pub fn sigma(n: u32) -> Self {
        GammaElement { reflect: true, ..Self::identity(n) }
    }

    pub fn tau(n: u32) -> Self {
        GammaElement { rotate: 1, ..Self::identity(n) }
    }

    pub fn theta(n: u32) -> Self {
        GammaElement { shift: 1 % n, ..Self::identity(n) }
    }

    pub fn unit(n: u32, u: i64) -> Result<Self> {
        let u = modn(u, n);
        if gcd(u as i64, n as i64) != 1 {
            return Err(Error::NotAUnit(u, n));
        }
        Ok(GammaElement { unit: u, ..Self::identity(n) })
    }

    /// General element; fails if `unit` is not coprime to `n`.
    pub fn new(n: u32, reflect: bool, rotate: u8, shift: i64, unit: i64) -> Result<Self> {
        let mut g = Self::unit(n, unit)?;
        g.reflect = reflect;
        g.rotate = rotate % 4;
        g.shift = modn(shift, n);
        Ok(g)
    }

    /// The generators `σ, τ, θ` and one multiplier per unit of `Z_n`.
    pub fn generators(n: u32) -> Vec<GammaElement> {
        let mut gens = vec![Self::sigma(n), Self::tau(n), Self::theta(n)];
        gens.extend(units(n).into_iter().map(|u| GammaElement { unit: u, ..Self::identity(n) }));
        gens
    }

    /// All `8 n φ(n)` elements, in normal form.
    pub fn all(n: u32) -> Vec<GammaElement> {
        let mut out = Vec::new();
        for reflect in [false, true] {
            for rotate in 0..4 {
                for shift in 0..n {
                    for &unit in &units(n) {
                        out.push(GammaElement { n, reflect, rotate, shift, unit });
                    }
                }
            }
        }
        out
    }

    /// `self ∘ other`: the element acting as `other` first, then `self`.
    pub fn compose(&self, other: &GammaElement) -> Result<GammaElement> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch(self.n, other.n));
        }
        let n = self.n;
        // Position map of σ^s τ^t is p ↦ (-1)^s p - t.
        let twisted = if other.reflect { 4 - self.rotate as u32 } else { self.rotate as u32 };
        let rotate = ((other.rotate as u32 + twisted) % 4) as u8;
        let reflect = self.reflect ^ other.reflect;
        let nn = n as u64;
        let unit = ((self.unit as u64 * other.unit as u64) % nn) as u32;
        let shift = ((self.unit as u64 * other.shift as u64 + self.shift as u64) % nn) as u32;
        Ok(GammaElement { n, reflect, rotate, shift, unit })
    }

    /// Applies the element to a word.
    pub fn act(&self, w: &Word4) -> Result<Word4> {
        if self.n != w.n {
            return Err(Error::ModulusMismatch(self.n, w.n));
        }
        let n = self.n as u64;
        let affine = w.subs.map(|s| ((self.unit as u64 * s as u64 + self.shift as u64) % n) as u32);
        let sign: i32 = if self.reflect { -1 } else { 1 };
        let mut subs = [0u32; 4];
        for (p, slot) in subs.iter_mut().enumerate() {
            let src = (sign * p as i32 - self.rotate as i32).rem_euclid(4) as usize;
            *slot = affine[src];
        }
        Ok(Word4 { n: w.n, subs })
    }
}

fn apply(g: &GammaElement, w: &Word4) -> Word4 {
    g.act(w).expect("moduli agree by construction")
}

/// The `Γ_n`-orbit of `w`, by breadth-first closure under the generators.
pub fn orbit(w: &Word4) -> BTreeSet<Word4> {
    let gens = GammaElement::generators(w.n);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(*w);
    queue.push_back(*w);
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let image = apply(g, &v);
            if seen.insert(image) {
                queue.push_back(image);
            }
        }
    }
    seen
}

/// Lexicographically least word in the orbit; its first subscript is always 0.
pub fn canonical_rep(w: &Word4) -> Word4 {
    *orbit(w).iter().next().expect("orbit contains w")
}

pub fn same_orbit(w1: &Word4, w2: &Word4) -> Result<bool> {
    if w1.n != w2.n {
        return Err(Error::ModulusMismatch(w1.n, w2.n));
    }
    Ok(canonical_rep(w1) == canonical_rep(w2))
}
