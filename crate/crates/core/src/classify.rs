//! Decision procedures: finiteness, asphericity, fixed points of the shift,
//! freeness of the shift action, and detection of the ten exceptional orbits.

use std::fmt;

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::conditions::{
    ab_form, eval_conditions, gcd_n_2k, normalize_k2j, primary_divisor, secondary_divisor, ConditionStatus,
};
use crate::words::{canonical_rep, ParamTuple, Word4};

/// The ten exceptional orbits: eight isolated (`I`) and two unresolved (`U`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IsoTag {
    I5,
    I6a,
    I6b,
    I10,
    I12,
    I16,
    I20,
    I24,
    U24a,
    U24b,
}

impl IsoTag {
    pub const ALL: [IsoTag; 10] = [
        IsoTag::I5,
        IsoTag::I6a,
        IsoTag::I6b,
        IsoTag::I10,
        IsoTag::I12,
        IsoTag::I16,
        IsoTag::I20,
        IsoTag::I24,
        IsoTag::U24a,
        IsoTag::U24b,
    ];

    /// Representative tuple of the orbit.
    pub fn exemplar(self) -> ParamTuple {
        let (n, j, k, l) = match self {
            IsoTag::I5 => (5, 3, 1, 1),
            IsoTag::I6a => (6, 4, 2, 3),
            IsoTag::I6b => (6, 0, 1, 2),
            IsoTag::I10 => (10, 3, 6, 1),
            IsoTag::I12 => (12, 1, 2, 9),
            IsoTag::I16 => (16, 3, 6, 1),
            IsoTag::I20 => (20, 3, 6, 1),
            IsoTag::I24 => (24, 1, 2, 15),
            IsoTag::U24a => (24, 3, 6, 1),
            IsoTag::U24b => (24, 1, 2, 19),
        };
        ParamTuple { n, j, k, l }
    }

    pub fn modulus(self) -> u32 {
        self.exemplar().n
    }

    pub fn is_unresolved(self) -> bool {
        matches!(self, IsoTag::U24a | IsoTag::U24b)
    }

    pub fn name(self) -> &'static str {
        match self {
            IsoTag::I5 => "I5",
            IsoTag::I6a => "I6'",
            IsoTag::I6b => "I6''",
            IsoTag::I10 => "I10",
            IsoTag::I12 => "I12",
            IsoTag::I16 => "I16",
            IsoTag::I20 => "I20",
            IsoTag::I24 => "I24",
            IsoTag::U24a => "U24'",
            IsoTag::U24b => "U24''",
        }
    }
}

/// An exceptional orbit, possibly inflated by a star factor `c = gcd(n, j, k, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IsoType {
    pub tag: IsoTag,
    pub star: u32,
}

impl IsoType {
    pub fn is_unresolved(&self) -> bool {
        self.tag.is_unresolved()
    }

    pub fn is_isolated(&self) -> bool {
        !self.tag.is_unresolved()
    }
}

/// `I5`, `U24''`, or with a star factor `I5*2`.
impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.star == 1 {
            write!(f, "{}", self.tag.name())
        } else {
            write!(f, "{}*{}", self.tag.name(), self.star)
        }
    }
}

static EXEMPLAR_REPS: Lazy<Vec<(IsoTag, Word4)>> =
    Lazy::new(|| IsoTag::ALL.iter().map(|&t| (t, canonical_rep(&t.exemplar().word()))).collect());

const EXEMPLAR_MODULI: [u32; 7] = [5, 6, 10, 12, 16, 20, 24];

pub fn detect_type(t: &ParamTuple) -> Option<IsoType> {
    let c = primary_divisor(t);
    let m = t.n / c;
    if !EXEMPLAR_MODULI.contains(&m) {
        return None;
    }
    let reduced = ParamTuple { n: m, j: t.j / c, k: t.k / c, l: t.l / c };
    let rep = canonical_rep(&reduced.word());
    EXEMPLAR_REPS.iter().find(|(_, r)| *r == rep).map(|&(tag, _)| IsoType { tag, star: c })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Asphericity {
    Yes,
    No,
    Unresolved,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FreeAction {
    Yes,
    No,
    Unknown,
}

impl From<Asphericity> for FreeAction {
    fn from(a: Asphericity) -> Self {
        match a {
            Asphericity::Yes => FreeAction::Yes,
            Asphericity::No => FreeAction::No,
            Asphericity::Unresolved => FreeAction::Unknown,
        }
    }
}

/// Which rule certified finiteness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FiniteCase {
    TrivialModulus,
    CyclicOfOrderFour,
    /// `A ∧ B ∧ ¬C` with `γ = 1`; `alpha_inverse` records which subcase supplied the order.
    Metacyclic { alpha_inverse: bool },
    Isolated(IsoTag),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub tuple: ParamTuple,
    pub conditions: ConditionStatus,
    pub c: u32,
    pub gamma: u32,
    pub iso_type: Option<IsoType>,
    pub finite: bool,
    pub finite_case: Option<FiniteCase>,
    /// Order of `G` when finite; `None` if infinite or beyond 128 bits.
    pub predicted_order: Option<u128>,
    /// Whether the order comes from a closed formula that still awaits enumeration.
    pub order_is_prediction: bool,
    pub structure_note: String,
    pub aspherical: Asphericity,
    pub fixed_point: bool,
    pub free_action: FreeAction,
    pub fired_clause: String,
}

fn metacyclic_order(n: u32) -> Option<u128> {
    let p = 3u128.checked_pow(n)?;
    Some(if n % 2 == 0 { p - 1 } else { p + 1 })
}

/// `E = <a, u | a^n, u^3 a^m u a^m>` centrally extends the dihedral group of order `2n`
/// by `<u^2>`. With `H_2 E = 0` the exact sequence `0 -> H_2 D -> <u^2> -> H_1 E -> H_1 D -> 0`
/// gives `|u^2| = 4n |H_2 D| / |H_1 D| = 2n` for either parity, so `|E| = 4n^2` and `|G| = 4n`.
fn dihedral_extension_order(n: u32) -> u128 {
    4 * n as u128
}

pub const ISOLATED_FIVE_ORDER: u128 = 220;
pub const ISOLATED_SIX_ORDER: u128 = 4_088_448;

pub fn classify(t: &ParamTuple) -> ClassificationReport {
    let s = eval_conditions(t);
    let c = primary_divisor(t);
    let gamma = secondary_divisor(t);
    let iso = detect_type(t);
    let (n, j, _, l) = t.as_i64();
    let coprime_2k = gcd_n_2k(t) == 1;

    let cyclic_four = coprime_2k
        && ((s.c_sum && gcd(n, j) == 1) || (s.c_difference && gcd(n, l) == 1));
    let finite_case = if t.n == 1 {
        Some(FiniteCase::TrivialModulus)
    } else if cyclic_four {
        Some(FiniteCase::CyclicOfOrderFour)
    } else if s.a && s.b && !s.c && gamma == 1 {
        let (normal, _) = normalize_k2j(t).expect("(B) holds");
        let form = ab_form(&normal).expect("normalized to k = 2j");
        Some(FiniteCase::Metacyclic { alpha_inverse: form.alpha_is_beta_inverse() })
    } else {
        match iso {
            Some(IsoType { tag: tag @ (IsoTag::I5 | IsoTag::I6a | IsoTag::I6b), star: 1 }) => {
                Some(FiniteCase::Isolated(tag))
            }
            _ => None,
        }
    };
    let finite = finite_case.is_some();

    let (predicted_order, order_is_prediction, mut structure_note, finite_clause) = match finite_case {
        Some(FiniteCase::TrivialModulus) => (Some(4), false, "Z4".to_string(), "finite: n = 1"),
        Some(FiniteCase::CyclicOfOrderFour) => (
            Some(4),
            false,
            "Z4".to_string(),
            "finite: (C) with gcd(n,2k) = 1 and the matching subscript a unit",
        ),
        Some(FiniteCase::Metacyclic { alpha_inverse: true }) => (
            metacyclic_order(t.n),
            true,
            "metacyclic".to_string(),
            "finite: A, B, not C, gamma = 1 (alpha = beta^-1)",
        ),
        Some(FiniteCase::Metacyclic { alpha_inverse: false }) => (
            Some(dihedral_extension_order(t.n)),
            true,
            "solvable, central extension of a dihedral group".to_string(),
            "finite: A, B, not C, gamma = 1 (alpha = beta)",
        ),
        Some(FiniteCase::Isolated(IsoTag::I5)) => (
            Some(ISOLATED_FIVE_ORDER),
            false,
            "metacyclic of order 220".to_string(),
            "finite: isolated orbit I5",
        ),
        Some(FiniteCase::Isolated(tag)) => (
            Some(ISOLATED_SIX_ORDER),
            false,
            "nonsolvable of order 4088448".to_string(),
            if tag == IsoTag::I6a { "finite: isolated orbit I6'" } else { "finite: isolated orbit I6''" },
        ),
        None => (None, false, String::new(), ""),
    };

    let isolated = iso.map_or(false, |i| i.is_isolated());
    let aspherical = if iso.map_or(false, |i| i.is_unresolved()) {
        Asphericity::Unresolved
    } else if (s.a && s.c) || (!s.b && !s.c) || (s.b && !s.a && !s.c && !isolated) {
        Asphericity::Yes
    } else {
        Asphericity::No
    };
    let fixed_point = finite || (s.c && coprime_2k);

    if !finite {
        structure_note = if c > 1 {
            format!("infinite, free product of {c} copies")
        } else if gamma > 1 {
            format!("infinite, secondary divisor {gamma}")
        } else {
            "infinite".to_string()
        };
        if fixed_point {
            structure_note.push_str("; fixed subgroup contains Z2");
        }
    }

    let fired_clause = if finite {
        finite_clause.to_string()
    } else {
        let why = if c > 1 {
            "c > 1"
        } else if gamma > 1 {
            "gamma > 1"
        } else if s.c {
            "(C) without a unit condition"
        } else if !s.a && !s.b {
            "neither A nor B"
        } else if s.a && !s.b {
            "A without B"
        } else {
            "B without A or C outside the finite isolated orbits"
        };
        let asph = match aspherical {
            Asphericity::Yes => "aspherical",
            Asphericity::No => "not aspherical",
            Asphericity::Unresolved => "asphericity unresolved",
        };
        format!("infinite: {why}; {asph}")
    };

    ClassificationReport {
        tuple: *t,
        conditions: s,
        c,
        gamma,
        iso_type: iso,
        finite,
        finite_case,
        predicted_order,
        order_is_prediction,
        structure_note,
        aspherical,
        fixed_point,
        free_action: aspherical.into(),
        fired_clause,
    }
}

/// One JSON line of census output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
    #[serde(rename = "A")]
    pub a: bool,
    #[serde(rename = "B")]
    pub b: bool,
    #[serde(rename = "C")]
    pub c_cond: bool,
    pub c: u32,
    pub gamma: u32,
    #[serde(rename = "type")]
    pub iso_type: Option<String>,
    pub finite: bool,
    pub order: Option<u128>,
    pub aspherical: Asphericity,
    pub fixed_point: bool,
    pub free: FreeAction,
    pub clause: String,
}

impl From<&ClassificationReport> for CensusRecord {
    fn from(r: &ClassificationReport) -> Self {
        CensusRecord {
            n: r.tuple.n,
            j: r.tuple.j,
            k: r.tuple.k,
            l: r.tuple.l,
            a: r.conditions.a,
            b: r.conditions.b,
            c_cond: r.conditions.c,
            c: r.c,
            gamma: r.gamma,
            iso_type: r.iso_type.map(|t| t.to_string()),
            finite: r.finite,
            order: r.predicted_order,
            aspherical: r.aspherical,
            fixed_point: r.fixed_point,
            free: r.free_action,
            clause: r.fired_clause.clone(),
        }
    }
}

impl ClassificationReport {
    pub fn record(&self) -> CensusRecord {
        self.into()
    }

    /// Invariants every report must satisfy; returns a description of the first violation.
    pub fn check_invariants(&self) -> Option<String> {
        let t = &self.tuple;
        if self.aspherical == Asphericity::Yes && self.free_action != FreeAction::Yes {
            return Some(format!("{t}: aspherical but action not free"));
        }
        if self.finite && t.n > 1 && self.aspherical == Asphericity::Yes {
            return Some(format!("{t}: finite with n > 1 yet aspherical"));
        }
        if self.gamma > 1 && (self.finite || self.fixed_point) {
            return Some(format!("{t}: gamma > 1 with finite or fixed point"));
        }
        if (self.aspherical == Asphericity::Unresolved) != self.iso_type.map_or(false, |i| i.is_unresolved()) {
            return Some(format!("{t}: unresolved verdict does not match type"));
        }
        let expected_fix = self.finite || (self.conditions.c && gcd_n_2k(t) == 1);
        if self.fixed_point != expected_fix {
            return Some(format!("{t}: fixed point verdict inconsistent"));
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::GammaElement;

    fn t(n: u32, j: i64, k: i64, l: i64) -> ParamTuple {
        ParamTuple::new(n, j, k, l).unwrap()
    }

    #[test]
    fn type_examples() {
        assert_eq!(detect_type(&t(5, 3, 1, 1)), Some(IsoType { tag: IsoTag::I5, star: 1 }));
        assert_eq!(detect_type(&t(10, 6, 2, 2)), Some(IsoType { tag: IsoTag::I5, star: 2 }));
        assert_eq!(detect_type(&t(7, 1, 2, 3)), None);
        for tag in IsoTag::ALL {
            assert_eq!(detect_type(&tag.exemplar()).map(|i| i.tag), Some(tag));
        }
    }

    #[test]
    fn exemplars_are_ten_distinct_orbits_with_b_only() {
        let reps: std::collections::HashSet<_> = EXEMPLAR_REPS.iter().map(|(_, r)| *r).collect();
        assert_eq!(reps.len(), 10);
        for tag in IsoTag::ALL {
            let e = tag.exemplar();
            let s = eval_conditions(&e);
            assert!(s.b && !s.a && !s.c, "{e}");
            assert_eq!(primary_divisor(&e), 1);
        }
    }

    #[test]
    fn star_display() {
        assert_eq!(IsoType { tag: IsoTag::U24b, star: 1 }.to_string(), "U24''");
        assert_eq!(IsoType { tag: IsoTag::I6a, star: 3 }.to_string(), "I6'*3");
    }

    #[test]
    fn classify_examples() {
        let r = classify(&t(5, 3, 1, 1));
        assert!(r.finite && r.fixed_point);
        assert_eq!(r.predicted_order, Some(220));
        assert_eq!((r.aspherical, r.free_action), (Asphericity::No, FreeAction::No));

        let r = classify(&t(24, 3, 6, 1));
        assert!(!r.finite && !r.fixed_point);
        assert_eq!(r.gamma, 4);
        assert_eq!((r.aspherical, r.free_action), (Asphericity::Unresolved, FreeAction::Unknown));

        let r = classify(&t(5, 1, 2, 3));
        assert_eq!((r.finite, r.predicted_order), (true, Some(4)));
        assert_eq!(r.finite_case, Some(FiniteCase::CyclicOfOrderFour));

        let r = classify(&t(9, 1, 3, 4));
        assert!(!r.finite && !r.fixed_point);
        assert_eq!(r.aspherical, Asphericity::No);
        assert_eq!(r.free_action, FreeAction::No);

        let r = classify(&t(7, 1, 3, 0));
        assert!(!r.finite && !r.fixed_point);
        assert_eq!((r.aspherical, r.free_action), (Asphericity::Yes, FreeAction::Yes));

        let r = classify(&t(4, 1, 2, 0));
        assert_eq!(r.finite_case, Some(FiniteCase::Metacyclic { alpha_inverse: true }));
        assert_eq!(r.predicted_order, Some(80));
        assert!(r.order_is_prediction);

        let r = classify(&t(6, 4, 2, 1));
        assert_eq!(r.finite_case, Some(FiniteCase::Metacyclic { alpha_inverse: false }));
        assert_eq!(r.predicted_order, Some(24));

        let r = classify(&t(1, 0, 0, 0));
        assert_eq!((r.finite, r.predicted_order), (true, Some(4)));
    }

    #[test]
    fn invariants_exhaustive_to_sixteen() {
        for n in 1..=16 {
            for tuple in ParamTuple::all_with_modulus(n) {
                let r = classify(&tuple);
                assert_eq!(r.check_invariants(), None);
                if r.finite {
                    assert_eq!(r.c, 1);
                }
            }
        }
    }

    #[test]
    fn c_true_a_false_fixed_points() {
        for n in 1..=16 {
            for tuple in ParamTuple::all_with_modulus(n) {
                let s = eval_conditions(&tuple);
                if s.c && !s.a {
                    assert_eq!(classify(&tuple).fixed_point, gcd_n_2k(&tuple) == 1, "{tuple}");
                }
            }
        }
    }

    #[test]
    fn type_detection_at_five_and_six_finds_exactly_exemplar_orbits() {
        for n in [5u32, 6] {
            let mut found = std::collections::BTreeMap::new();
            for tuple in ParamTuple::all_with_modulus(n) {
                if let Some(iso) = detect_type(&tuple) {
                    assert_eq!(iso.star, 1);
                    assert_eq!(canonical_rep(&tuple.word()), canonical_rep(&iso.tag.exemplar().word()));
                    found.insert(iso.tag, ());
                }
            }
            let expected: Vec<IsoTag> = if n == 5 { vec![IsoTag::I5] } else { vec![IsoTag::I6a, IsoTag::I6b] };
            assert_eq!(found.keys().copied().collect::<Vec<_>>(), expected);
        }
    }

    #[test]
    fn verdicts_constant_on_orbits_at_small_n() {
        for n in 1..=8 {
            for tuple in ParamTuple::all_with_modulus(n) {
                let r = classify(&tuple);
                for g in GammaElement::generators(n) {
                    let moved = g.act(&tuple.word()).unwrap().to_params();
                    let q = classify(&moved);
                    assert_eq!(
                        (r.finite, r.aspherical, r.fixed_point, r.free_action, r.predicted_order),
                        (q.finite, q.aspherical, q.fixed_point, q.free_action, q.predicted_order),
                        "{tuple} vs {moved}"
                    );
                }
            }
        }
    }

    #[test]
    fn record_schema() {
        let v = serde_json::to_value(classify(&t(5, 3, 1, 1)).record()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|s| s.as_str()).collect();
        let mut expected = vec![
            "n", "j", "k", "l", "A", "B", "C", "c", "gamma", "type", "finite", "order", "aspherical",
            "fixed_point", "free", "clause",
        ];
        let mut got = keys.clone();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
        assert_eq!(v["type"], "I5");
        assert_eq!(v["aspherical"], "no");
        assert_eq!(v["free"], "no");
        assert_eq!(v["order"], 220);
    }
}
