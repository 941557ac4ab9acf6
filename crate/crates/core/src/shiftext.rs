//! Shift extensions `⟨a, x | aⁿ, W⟩`, the `u = x a^j` substitution, rewriting of
//! the kernel of a retraction onto `⟨a⟩`, and the abelianized relation matrix.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{modn, symmetric};
use crate::conditions::ab_form;
use crate::error::{Error, Result};
use crate::fp::{Presentation, Word};
use crate::snf::{smith_normal_form, IntMatrix, SnfResult};
use crate::words::{ParamTuple, Word4};

pub const A: u32 = 0;
pub const X: u32 = 1;

/// `W = x a^j x a^{k-j} x a^{l-k} x a^{-l}`, exponents taken from the residues `j, k, l ∈ [0, n)`.
pub fn shift_word(t: &ParamTuple) -> Word {
    let (_, j, k, l) = t.as_i64();
    Word::from_syllables(&[(X, 1), (A, j), (X, 1), (A, k - j), (X, 1), (A, l - k), (X, 1), (A, -l)])
}

/// `⟨a, x | aⁿ, W⟩`, the semidirect product of the cyclically presented group by its shift.
pub fn shift_extension(t: &ParamTuple) -> Presentation {
    Presentation::new(vec!["a".into(), "x".into()], vec![Word::power(A, t.n as i64), shift_word(t)])
        .expect("W always has four x letters")
}

/// `⟨a, u | aⁿ, u³ a^α u a^β⟩` for `k ≡ 2j`, with `α, β` as symmetric representatives.
pub fn substitute_u(t: &ParamTuple) -> Result<Presentation> {
    let form = ab_form(t)?;
    let alpha = symmetric(form.alpha_exp as i64, t.n);
    let beta = symmetric(form.beta_exp as i64, t.n);
    Presentation::new(
        vec!["a".into(), "u".into()],
        vec![Word::power(A, t.n as i64), Word::from_syllables(&[(X, 3), (A, alpha), (X, 1), (A, beta)])],
    )
}

/// The positive word `x_{s_1} x_{s_2} …` obtained by rewriting, subscripts in `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewrittenWord {
    pub n: u32,
    pub subscripts: Vec<u32>,
}

impl RewrittenWord {
    pub fn to_word4(&self) -> Option<Word4> {
        let s: [u32; 4] = self.subscripts.clone().try_into().ok()?;
        Word4::new(self.n, s.map(|v| v as i64)).ok()
    }
}

impl std::fmt::Display for RewrittenWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.subscripts.iter().map(|s| format!("x{s}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Rewrites the non-torsion relator of `⟨a, x | aⁿ, R⟩` as a relator of the kernel of
/// the retraction `a ↦ a`, `x ↦ a^f`. Each `x` read after cumulative exponent `s`
/// (with earlier `x` letters counting `f` each) becomes the generator with subscript `s`.
pub fn rs_rewrite(p: &Presentation, f: i64) -> Result<RewrittenWord> {
    if p.generator_count() != 2 {
        return Err(Error::BadShape("expected two generators".into()));
    }
    let torsion: Vec<&Word> = p.relators.iter().filter(|r| r.count(X) == 0).collect();
    let others: Vec<&Word> = p.relators.iter().filter(|r| r.count(X) > 0).collect();
    let (&[power], &[rel]) = (torsion.as_slice(), others.as_slice()) else {
        return Err(Error::BadShape("expected one power of a and one relator involving x".into()));
    };
    let n = power.exponent_sum(A).unsigned_abs();
    if n == 0 || n > u32::MAX as u64 || power.len() as u64 != n {
        return Err(Error::BadShape("first relator is not a power of a".into()));
    }
    let n = n as u32;
    if !rel.letters().iter().all(|x| x.gen != X || !x.inverse) {
        return Err(Error::BadShape("relator is not positive in x".into()));
    }
    let total = rel.exponent_sum(A) + f * rel.exponent_sum(X);
    if modn(total, n) != 0 {
        return Err(Error::NotARetraction(format!(
            "a-exponent {} plus {f} times x-count {} is not divisible by {n}",
            rel.exponent_sum(A),
            rel.exponent_sum(X)
        )));
    }
    let mut s = 0i64;
    let mut subscripts = Vec::new();
    for x in rel.letters() {
        if x.gen == X {
            subscripts.push(modn(s, n));
            s += f;
        } else if x.inverse {
            s -= 1;
        } else {
            s += 1;
        }
    }
    Ok(RewrittenWord { n, subscripts })
}

/// `n × n` matrix whose row `i` is `e_i + e_{i+j} + e_{i+k} + e_{i+l}`.
pub fn relation_matrix(t: &ParamTuple) -> IntMatrix {
    let n = t.n as usize;
    let mut m = IntMatrix::zeros(n, n).expect("n is positive");
    for i in 0..n {
        for e in [0, t.j, t.k, t.l] {
            m[(i, (i + e as usize) % n)] += BigInt::one();
        }
    }
    m
}

/// Abelianization of the cyclically presented group.
pub fn abelianize(t: &ParamTuple) -> SnfResult {
    smith_normal_form(&relation_matrix(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::group_order;
    use crate::snf::abelianization;
    use num_integer::Integer;

    fn t(n: u32, j: i64, k: i64, l: i64) -> ParamTuple {
        ParamTuple::new(n, j, k, l).unwrap()
    }

    fn syl(p: &Presentation, i: usize) -> Vec<(u32, i64)> {
        p.relators[i].syllables()
    }

    #[test]
    fn shift_extension_examples() {
        let p = shift_extension(&t(5, 3, 1, 1));
        assert_eq!(p.to_string(), "< a, x | a^5, x a^3 x a^-2 x^2 a^-1 >");
        let p = shift_extension(&t(1, 0, 0, 0));
        assert_eq!(p.to_string(), "< a, x | a, x^4 >");
        let p = shift_extension(&t(24, 1, 2, 19));
        assert_eq!(syl(&p, 1), vec![(X, 1), (A, 1), (X, 1), (A, 1), (X, 1), (A, 17), (X, 1), (A, -19)]);
    }

    fn exponents_mod(p: &Presentation, n: u32) -> Vec<(u32, u32)> {
        syl(p, 1).into_iter().map(|(g, e)| (g, if g == A { modn(e, n) } else { e as u32 })).collect()
    }

    #[test]
    fn substitution_examples() {
        let p = substitute_u(&t(5, 3, 1, 1)).unwrap();
        assert_eq!(exponents_mod(&p, 5), vec![(X, 3), (A, 2), (X, 1), (A, 1)]);
        let p = substitute_u(&t(6, 4, 2, 3)).unwrap();
        assert_eq!(exponents_mod(&p, 6), vec![(X, 3), (A, modn(-3, 6)), (X, 1), (A, modn(-1, 6))]);
        let p = substitute_u(&t(24, 1, 2, 15)).unwrap();
        assert_eq!(exponents_mod(&p, 24), vec![(X, 3), (A, 12), (X, 1), (A, 8)]);
        assert!(substitute_u(&t(7, 1, 3, 0)).is_err());
    }

    #[test]
    fn rewrite_examples() {
        let l = Presentation::from_syllables(&["a", "u"], &[vec![(A, 6)], vec![(X, 3), (A, 3), (X, 1), (A, 1)]]).unwrap();
        assert_eq!(rs_rewrite(&l, 2).unwrap().subscripts, vec![0, 2, 4, 3]);
        assert_eq!(rs_rewrite(&l, 5).unwrap().subscripts, vec![0, 5, 4, 0]);
        assert!(matches!(rs_rewrite(&l, 1), Err(Error::NotARetraction(_))));
    }

    #[test]
    fn rewrite_round_trip_to_sixteen() {
        for n in 1..=16 {
            for tuple in ParamTuple::all_with_modulus(n) {
                let w = rs_rewrite(&shift_extension(&tuple), 0).unwrap();
                assert_eq!(w.to_word4(), Some(tuple.word()), "{tuple}");
            }
        }
    }

    #[test]
    fn relation_matrix_examples() {
        let m = relation_matrix(&t(1, 0, 0, 0));
        assert_eq!(m[(0, 0)], BigInt::from(4));
        let m = relation_matrix(&t(2, 0, 1, 1));
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m[(i, j)], BigInt::from(2));
            }
        }
        let m = relation_matrix(&t(9, 2, 5, 7));
        for i in 0..9 {
            assert_eq!(m.row(i).iter().sum::<BigInt>(), BigInt::from(4));
        }
    }

    #[test]
    fn shift_extension_abelianizes_to_zn_plus_z4() {
        for n in 1..=16u32 {
            let (g, l) = ((n as u64).gcd(&4), (n as u64).lcm(&4));
            let expected: Vec<u64> = [g, l].into_iter().filter(|&d| d > 1).collect();
            for tuple in ParamTuple::all_with_modulus(n) {
                let s = abelianization(&shift_extension(&tuple)).unwrap();
                assert_eq!((s.factors_u64(), s.free_rank), (expected.clone(), 0), "{tuple}");
            }
        }
    }

    #[test]
    fn substitution_preserves_order() {
        for n in 1..=6 {
            for tuple in ParamTuple::all_with_modulus(n) {
                let Ok(u) = substitute_u(&tuple) else { continue };
                let a = group_order(&shift_extension(&tuple), 200_000).unwrap();
                let b = group_order(&u, 200_000).unwrap();
                if let (Some(a), Some(b)) = (a, b) {
                    if a <= 100_000 && b <= 100_000 {
                        assert_eq!(a, b, "{tuple}");
                    }
                }
            }
        }
    }

    #[test]
    fn paper_abelianizations() {
        let render = |n, j, k, l| abelianize(&t(n, j, k, l)).to_string();
        assert_eq!(render(24, 3, 6, 1), "Z^3 ⊕ Z5^2 ⊕ Z7");
        assert_eq!(render(24, 1, 2, 19), "Z^3 ⊕ Z3 ⊕ Z73");
        assert_eq!(render(6, 4, 2, 3), "Z8");
        assert_eq!(render(6, 0, 1, 2), "Z7 ⊕ Z8");
        let id = smith_normal_form(&IntMatrix::identity(5).unwrap());
        assert!(id.invariant_factors.is_empty() && id.free_rank == 0);
    }
}
