//! Pieces of the symmetrized relator set and the C(4)-T(4) test for
//! `x_0 x_j x_k x_l`.
//!
//! Two elements of the symmetrized set are distinct when they differ as words;
//! a relator like `x_0⁴` equals its own rotations and contributes no pieces.

use std::collections::{BTreeMap, BTreeSet};

use crate::fp::{Letter, Word};
use crate::words::ParamTuple;

/// Every cyclic permutation of every relator `x_i x_{i+j} x_{i+k} x_{i+l}` and of its inverse.
pub fn symmetrized_relators(t: &ParamTuple) -> BTreeSet<Word> {
    let n = t.n;
    let base = [0, t.j, t.k, t.l];
    let mut out = BTreeSet::new();
    for i in 0..n {
        let r: Vec<Letter> = base.iter().map(|&s| Letter::pos((s + i) % n)).collect();
        let w = Word(r);
        for v in [w.clone(), w.inverse()] {
            for q in 0..4 {
                let mut letters = v.0.clone();
                letters.rotate_left(q);
                out.insert(Word(letters));
            }
        }
    }
    out
}

/// All pieces: nonempty words that are prefixes of at least two distinct symmetrized relators.
pub fn pieces(t: &ParamTuple) -> BTreeSet<Word> {
    let mut by_prefix: BTreeMap<Word, usize> = BTreeMap::new();
    for w in symmetrized_relators(t) {
        for len in 1..=w.len() {
            *by_prefix.entry(Word(w.0[..len].to_vec())).or_default() += 1;
        }
    }
    by_prefix.into_iter().filter(|&(_, count)| count >= 2).map(|(p, _)| p).collect()
}

/// The four cyclic subwords `x_{w_q} x_{w_{q+1}}` of the defining word.
pub fn cyclic_pairs(t: &ParamTuple) -> [(u32, u32); 4] {
    let s = [0, t.j, t.k, t.l];
    [(s[0], s[1]), (s[1], s[2]), (s[2], s[3]), (s[3], s[0])]
}

/// True iff no length-two cyclic subword of the defining word is a piece.
///
/// A positive prefix can only start a shifted rotation of the relator, so it
/// suffices to collect the rotations whose first two letters match, shifted into place.
pub fn is_c4t4(t: &ParamTuple) -> bool {
    let n = t.n;
    let s = [0, t.j, t.k, t.l];
    cyclic_pairs(t).iter().all(|&(a, b)| {
        let mut matches: Vec<[u32; 4]> = Vec::with_capacity(4);
        for q in 0..4 {
            let shift = (a + n - s[q]) % n;
            if (s[(q + 1) % 4] + shift) % n == b {
                let word = [0, 1, 2, 3].map(|i| (s[(q + i) % 4] + shift) % n);
                if !matches.contains(&word) {
                    matches.push(word);
                }
            }
        }
        matches.len() < 2
    })
}

/// `is_c4t4` decided directly from the brute-force piece set.
pub fn is_c4t4_brute_force(t: &ParamTuple) -> bool {
    let p = pieces(t);
    cyclic_pairs(t).iter().all(|&(a, b)| !p.contains(&Word(vec![Letter::pos(a), Letter::pos(b)])))
}
