//! Centralizer witnesses: columns fixed by a generator in a coset table over
//! `⟨g⟩`, shortest positive words reaching them, and certification that a word
//! commutes with `g` by comparing group orders before and after adding `[g, v]`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::coset::{coset_enumerate, CosetTable, Enumeration, EnumerationOptions};
use crate::error::{Error, Result};
use crate::fp::{Letter, Presentation, Word};

/// Cosets `c` with `c·g = c`.
pub fn fixed_columns(table: &CosetTable, gen: u32) -> Result<Vec<u32>> {
    let perm = table.permutation(gen)?;
    Ok((1..=table.index()).filter(|&c| perm[c as usize] == c).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractedWord {
    pub word: Word,
    /// Set when no positive word reaches the target and inverse letters were needed.
    pub used_inverses: bool,
}

/// A word `w` with `1·w = target`, cheapest first by the number of letters
/// other than `cheap`, then by the number of `cheap` letters.
pub fn extract_word(table: &CosetTable, target: u32, cheap: u32) -> Result<ExtractedWord> {
    if target == 0 || target > table.index() {
        return Err(Error::CosetOutOfRange(target, table.index()));
    }
    if let Some(word) = shortest_word(table, target, cheap, false)? {
        return Ok(ExtractedWord { word, used_inverses: false });
    }
    let word = shortest_word(table, target, cheap, true)?.ok_or(Error::IncompleteTable)?;
    Ok(ExtractedWord { word, used_inverses: true })
}

fn shortest_word(table: &CosetTable, target: u32, cheap: u32, inverses: bool) -> Result<Option<Word>> {
    let gens = table.generator_count() as u32;
    let mut letters: Vec<Letter> = Vec::new();
    let order = std::iter::once(cheap).chain((0..gens).filter(|&g| g != cheap));
    for g in order {
        letters.push(Letter::pos(g));
        if inverses {
            letters.push(Letter::neg(g));
        }
    }
    let n = table.index() as usize;
    let mut best: Vec<Option<(u64, u64)>> = vec![None; n + 1];
    let mut pred: Vec<Option<(u32, Letter)>> = vec![None; n + 1];
    let mut heap = BinaryHeap::new();
    best[1] = Some((0, 0));
    heap.push(Reverse(((0u64, 0u64), 1u32)));
    while let Some(Reverse((cost, c))) = heap.pop() {
        if best[c as usize] != Some(cost) {
            continue;
        }
        if c == target {
            break;
        }
        for &x in &letters {
            let d = table.act(c, x)?;
            let step = if x.gen == cheap { (cost.0, cost.1 + 1) } else { (cost.0 + 1, cost.1) };
            if best[d as usize].map_or(true, |b| step < b) {
                best[d as usize] = Some(step);
                pred[d as usize] = Some((c, x));
                heap.push(Reverse((step, d)));
            }
        }
    }
    if best[target as usize].is_none() {
        return Ok(None);
    }
    let mut rev = Vec::new();
    let mut c = target;
    while let Some((p, x)) = pred[c as usize] {
        rev.push(x);
        c = p;
    }
    rev.reverse();
    Ok(Some(Word(rev)))
}

pub fn exponent_sum(v: &Word, gen: u32) -> i64 {
    v.exponent_sum(gen)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Centralizes,
    DoesNotCentralize,
    /// An enumeration hit its coset limit.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Certification {
    pub verdict: Verdict,
    pub base_order: Option<u64>,
    pub extended_order: Option<u64>,
}

impl Certification {
    fn from_orders(base: Option<u64>, extended: Option<u64>) -> Self {
        let verdict = match (base, extended) {
            (Some(a), Some(b)) if a == b => Verdict::Centralizes,
            (Some(_), Some(_)) => Verdict::DoesNotCentralize,
            _ => Verdict::Inconclusive,
        };
        Certification { verdict, base_order: base, extended_order: extended }
    }
}

/// Options for enumerating `p` plus the commutator: in Felsch mode the long test relator
/// is only checked by closing scans, so its length does not slow every deduction.
fn extended_options(p: &Presentation, opts: &EnumerationOptions) -> EnumerationOptions {
    let longest = p.relators.iter().map(Word::len).max().unwrap_or(0);
    EnumerationOptions { deduction_cutoff: opts.deduction_cutoff.or(Some(longest)), ..*opts }
}

fn order(p: &Presentation, opts: &EnumerationOptions) -> Result<Option<u64>> {
    Ok(coset_enumerate(p, &[], opts)?.index())
}

/// Certifies `[g, v] = 1` by checking that adding the commutator leaves the order unchanged.
pub fn verify_centralizes(p: &Presentation, v: &Word, gen: u32, opts: &EnumerationOptions) -> Result<Certification> {
    let g = Word::power(gen, 1);
    let q = p.with_relator(&Word::commutator(&g, v))?;
    let base = order(p, opts)?;
    if base.is_none() {
        return Ok(Certification::from_orders(None, None));
    }
    Ok(Certification::from_orders(base, order(&q, &extended_options(p, opts))?))
}

/// A homomorphism onto `⟨g | gⁿ⟩` fixing `g`; `images[h]` is the exponent of `g` that `h` maps to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Retraction {
    pub order: u64,
    pub images: Vec<u64>,
}

const RETRACTION_SEARCH_LIMIT: u64 = 1 << 20;

/// Finds a retraction onto `⟨g⟩`, which then has order exactly `n`. Requires a
/// relator `gⁿ`; images of the other generators are searched exhaustively.
pub fn find_retraction(p: &Presentation, gen: u32) -> Result<Retraction> {
    let n = p
        .relators
        .iter()
        .filter(|r| r.letters().iter().all(|x| x.gen == gen))
        .map(|r| r.exponent_sum(gen).unsigned_abs())
        .filter(|&e| e > 0)
        .min()
        .ok_or_else(|| Error::NotARetraction(format!("no power of generator {gen} among the relators")))?;
    let others: Vec<u32> = (0..p.generator_count() as u32).filter(|&h| h != gen).collect();
    let combos = (n as u128).checked_pow(others.len() as u32).unwrap_or(u128::MAX);
    if combos > RETRACTION_SEARCH_LIMIT as u128 {
        return Err(Error::NotARetraction("search space too large".into()));
    }
    let sums: Vec<(i64, Vec<i64>)> = p
        .relators
        .iter()
        .map(|r| (r.exponent_sum(gen), others.iter().map(|&h| r.exponent_sum(h)).collect()))
        .collect();
    for code in 0..combos as u64 {
        let mut c = code;
        let f: Vec<i64> = others
            .iter()
            .map(|_| {
                let v = (c % n) as i64;
                c /= n;
                v
            })
            .collect();
        let ok = sums.iter().all(|(g, hs)| {
            let total: i64 = g + hs.iter().zip(&f).map(|(h, fh)| h * fh).sum::<i64>();
            total.rem_euclid(n as i64) == 0
        });
        if ok {
            let mut images = vec![0u64; p.generator_count()];
            images[gen as usize] = 1;
            for (&h, &fh) in others.iter().zip(&f) {
                images[h as usize] = fh as u64;
            }
            return Ok(Retraction { order: n, images });
        }
    }
    Err(Error::NotARetraction(format!("no homomorphism onto Z{n} fixes generator {gen}")))
}

/// `|G| = n · [G : ⟨g⟩]`, valid because a retraction makes `g` of order exactly `n`.
pub fn order_over_retract(p: &Presentation, gen: u32, opts: &EnumerationOptions) -> Result<Option<u64>> {
    let n = find_retraction(p, gen)?.order;
    Ok(coset_enumerate(p, &[Word::power(gen, 1)], opts)?.index().map(|i| i * n))
}

/// As `verify_centralizes`, computing both orders over the retract `⟨g⟩`. Adding
/// `[g, v]` keeps the retraction, since its image `[g, ν(v)]` lies in an abelian group.
pub fn verify_centralizes_over_retract(
    p: &Presentation,
    v: &Word,
    gen: u32,
    opts: &EnumerationOptions,
) -> Result<Certification> {
    let g = Word::power(gen, 1);
    let q = p.with_relator(&Word::commutator(&g, v))?;
    let base = order_over_retract(p, gen, opts)?;
    if base.is_none() {
        return Ok(Certification::from_orders(None, None));
    }
    Ok(Certification::from_orders(base, order_over_retract(&q, gen, &extended_options(p, opts))?))
}

/// A word lies outside the normal closure of `a` when its `x`-sum is nonzero modulo
/// the order of `x` in the quotient by `⟨⟨a⟩⟩` (4 for every shift extension).
pub fn outside_normal_closure(v: &Word, x: u32, quotient_order: i64) -> bool {
    v.exponent_sum(x).rem_euclid(quotient_order) != 0
}

#[derive(Debug, Clone, Serialize)]
pub struct Candidate {
    pub coset: u32,
    #[serde(skip)]
    pub word: Word,
    pub text: String,
    pub used_inverses: bool,
    pub certification: Option<Certification>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub index: Option<u64>,
    pub fixed_columns: usize,
    pub candidates: Vec<Candidate>,
}

/// Enumerates over `⟨g⟩`, extracts a word for each fixed column other than the
/// subgroup itself (cheapest first) and certifies up to `max_checks` of them.
pub fn centralizer_search(
    p: &Presentation,
    gen: u32,
    opts: &EnumerationOptions,
    max_checks: usize,
) -> Result<SearchReport> {
    let table = match coset_enumerate(p, &[Word::power(gen, 1)], opts)? {
        Enumeration::Complete(t) => t,
        Enumeration::Overflow { .. } => {
            return Ok(SearchReport { index: None, fixed_columns: 0, candidates: Vec::new() })
        }
    };
    let fixed = fixed_columns(&table, gen)?;
    let mut candidates = Vec::new();
    for &c in fixed.iter().filter(|&&c| c != 1) {
        let e = extract_word(&table, c, gen)?;
        candidates.push(Candidate {
            coset: c,
            text: p.display_word(&e.word).to_string(),
            word: e.word,
            used_inverses: e.used_inverses,
            certification: None,
        });
    }
    candidates.sort_by_key(|c| (c.word.len() - c.word.count(gen), c.word.len(), c.coset));
    for cand in candidates.iter_mut().take(max_checks) {
        cand.certification = Some(verify_centralizes(p, &cand.word, gen, opts)?);
    }
    Ok(SearchReport { index: Some(table.index() as u64), fixed_columns: fixed.len(), candidates })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(names: &[&str], rels: &[Vec<(u32, i64)>]) -> Presentation {
        Presentation::from_syllables(names, rels).unwrap()
    }

    fn k_group() -> Presentation {
        pres(&["t", "u"], &[vec![(0, 5)], vec![(1, 3), (0, 2), (1, 1), (0, 1)]])
    }

    fn opts() -> EnumerationOptions {
        EnumerationOptions::with_max_cosets(1_000_000)
    }

    #[test]
    fn abelian_table_is_all_fixed() {
        let p = pres(&["a", "x"], &[vec![(0, 4)], vec![(1, 2)], vec![(0, 1), (1, 1), (0, -1), (1, -1)]]);
        let t = coset_enumerate(&p, &[Word::power(0, 1)], &opts()).unwrap().table().unwrap();
        assert_eq!(fixed_columns(&t, 0).unwrap().len(), t.index() as usize);
        let v = Word::power(1, 1);
        assert_eq!(verify_centralizes(&p, &v, 0, &opts()).unwrap().verdict, Verdict::Centralizes);
    }

    #[test]
    fn cyclic_extraction() {
        let p = pres(&["a"], &[vec![(0, 6)]]);
        let t = coset_enumerate(&p, &[], &opts()).unwrap().table().unwrap();
        assert_eq!(extract_word(&t, 1, 0).unwrap().word, Word::empty());
        assert_eq!(extract_word(&t, 3, 0).unwrap().word, Word::power(0, 2));
    }

    #[test]
    fn k_pipeline() {
        let k = k_group();
        let t = coset_enumerate(&k, &[Word::power(0, 1)], &opts()).unwrap().table().unwrap();
        assert_eq!(t.index(), 220);
        let fixed = fixed_columns(&t, 0).unwrap();
        assert!(fixed.len() >= 5 && fixed[0] == 1);
        for &c in &fixed {
            let e = extract_word(&t, c, 0).unwrap();
            assert!(!e.used_inverses && e.word.is_positive());
            assert_eq!(t.trace(1, &e.word), Ok(c));
        }
        let report = centralizer_search(&k, 0, &opts(), 8).unwrap();
        let verified: Vec<&Candidate> = report
            .candidates
            .iter()
            .filter(|c| c.certification.map(|x| x.verdict) == Some(Verdict::Centralizes))
            .collect();
        assert!(!verified.is_empty());
        for c in verified {
            assert!(fixed.contains(&c.coset));
            assert_ne!(c.coset, 1);
        }
    }

    #[test]
    fn generator_does_not_centralize_in_k() {
        let c = verify_centralizes(&k_group(), &Word::power(1, 1), 0, &opts()).unwrap();
        assert_eq!(c.verdict, Verdict::DoesNotCentralize);
        assert_eq!(c.base_order, Some(1100));
        assert!(c.extended_order.unwrap() < 1100);
    }

    #[test]
    fn retract_orders() {
        let k = k_group();
        assert_eq!(find_retraction(&k, 0).unwrap(), Retraction { order: 5, images: vec![1, 3] });
        assert_eq!(order_over_retract(&k, 0, &opts()).unwrap(), Some(1100));
        assert!(find_retraction(&k, 1).is_err());
        let cyclic = pres(&["t", "u"], &[vec![(0, 4)], vec![(1, 1), (0, 1)]]);
        assert_eq!(find_retraction(&cyclic, 0).unwrap().images, vec![1, 3]);
        let v = Word::power(1, 1);
        let c = verify_centralizes_over_retract(&k, &v, 0, &opts()).unwrap();
        assert_eq!(c, verify_centralizes(&k, &v, 0, &opts()).unwrap());
    }

    #[test]
    fn overflow_is_inconclusive() {
        let free = pres(&["a", "b"], &[vec![(0, 2)]]);
        let c = verify_centralizes(&free, &Word::power(1, 1), 0, &EnumerationOptions::with_max_cosets(50)).unwrap();
        assert_eq!(c.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(exponent_sum(&Word::empty(), 0), 0);
        let w = Word::from_syllables(&[(0, 3), (1, 3), (0, 1), (1, 1)]);
        assert_eq!((exponent_sum(&w, 1), exponent_sum(&w, 0)), (4, 4));
        assert!(!outside_normal_closure(&w, 1, 4));
        assert!(outside_normal_closure(&Word::power(1, 14), 1, 4));
    }
}
