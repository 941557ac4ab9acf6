//! Golden checks behind `cyc4 verify-paper`: known group orders, abelianizations,
//! and exhaustive consistency sweeps of the decision procedures.

use std::time::Instant;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::centralizer::{centralizer_search, order_over_retract, verify_centralizes_over_retract, Verdict};
use crate::classify::{classify, ClassificationReport};
use crate::conditions::{eval_conditions, primary_divisor, secondary_divisor, secondary_divisor_reduced};
use crate::coset::{group_order, EnumerationOptions};
use crate::fp::Presentation;
use crate::parse::{parse_presentation, parse_word};
use crate::resultant::circulant_det;
use crate::shiftext::{abelianize, rs_rewrite, shift_extension, A};
use crate::smallcanc::{is_c4t4, is_c4t4_brute_force};
use crate::words::{GammaElement, ParamTuple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Fast,
    Full,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub skipped: bool,
    pub detail: String,
    pub seconds: f64,
}

pub const J4: &str = "< t, y | t^4, y^3 t^2 y t >";
pub const K: &str = "< t, u | t^5, u^3 t^2 u t >";
pub const J6: &str = "< t, u | t^6, u^3 t^3 u t^2 >";
pub const L_U_FORM: &str = "< a, u | a^6, u^3 a^3 u a >";
/// Common shift extension of the two nonsolvable orbits at `n = 6`.
pub const E6: &str = "< a, x | a^6, x^2 a x a x a^-2 >";
/// A word centralizing `a` in `E6` whose `x`-sum is 14.
pub const E6_CENTRALIZING_WORD: &str = "a^3 x^3 a x a^3 x a^5 x a^5 x a^2 x a^4 x a x a^3 x a^2 x a^5 x a^2 x";

pub const ORDER_J4: u64 = 272;
pub const ORDER_K: u64 = 1100;
pub const ORDER_J6: u64 = 4632;
pub const INDEX_E6_OVER_A: u64 = 4_088_448;
pub const ORDER_E6: u64 = 24_530_688;

/// Coset bound for the index-4 088 448 runs; Felsch peaks between 11.5 and 28.8 million
/// rows depending on which shift extension presents the group.
pub const LARGE_RUN_COSETS: usize = 32_000_000;
/// Shift extensions predicted larger than this are only enumerated in the full tier.
pub const FAST_TIER_ORDER_LIMIT: u128 = 1_000_000;

pub fn large_run_options(max_cosets: usize) -> EnumerationOptions {
    EnumerationOptions::felsch(max_cosets.max(LARGE_RUN_COSETS))
}

fn pres(text: &str) -> Presentation {
    parse_presentation(text).expect("built-in presentation parses")
}

fn tuples_up_to(n_max: u32) -> impl Iterator<Item = ParamTuple> {
    (1..=n_max).flat_map(ParamTuple::all_with_modulus)
}

struct Outcome {
    passed: bool,
    skipped: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, skipped: false, detail: detail.into() }
}

fn verdict(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, skipped: false, detail: detail.into() }
}

fn skipped(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, skipped: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    verdict(false, detail)
}

fn known_orders(tier: Tier, max_cosets: usize) -> Outcome {
    let mut notes = Vec::new();
    for (name, text, expected) in [("J4", J4, ORDER_J4), ("K", K, ORDER_K), ("J6", J6, ORDER_J6)] {
        match group_order(&pres(text), max_cosets) {
            Ok(Some(o)) if o == expected => notes.push(format!("|{name}|={o}")),
            other => return fail(format!("|{name}|: expected {expected}, got {other:?}")),
        }
    }
    let i5 = shift_extension(&ParamTuple { n: 5, j: 3, k: 1, l: 1 });
    match group_order(&i5, max_cosets) {
        Ok(Some(1100)) => notes.push("|E(5,3,1,1)|=1100 so |G|=220".into()),
        other => return fail(format!("shift extension of (5,3,1,1): {other:?}")),
    }
    let (mut checked, mut deferred, mut mismatches) = (0, 0, Vec::new());
    for t in tuples_up_to(8) {
        let r = classify(&t);
        if !r.finite {
            continue;
        }
        let expected = r.predicted_order.expect("finite tuples at n <= 8 have an order") * t.n as u128;
        let e = shift_extension(&t);
        let got = if expected <= FAST_TIER_ORDER_LIMIT {
            group_order(&e, max_cosets).ok().flatten()
        } else if tier == Tier::Full {
            order_over_retract(&e, A, &large_run_options(max_cosets)).ok().flatten()
        } else {
            deferred += 1;
            continue;
        };
        checked += 1;
        if got.map(u128::from) != Some(expected) {
            mismatches.push(format!("{t}: |E| expected {expected}, got {got:?}"));
        }
    }
    notes.push(format!("{checked} finite tuples n<=8 enumerated"));
    if deferred > 0 {
        notes.push(format!("{deferred} large ones deferred to the full tier"));
    }
    if mismatches.is_empty() {
        pass(notes.join("; "))
    } else {
        fail(mismatches.join("; "))
    }
}

fn large_index(tier: Tier, max_cosets: usize) -> Outcome {
    if tier == Tier::Fast {
        return skipped("full tier only");
    }
    let e = pres(E6);
    match order_over_retract(&e, A, &large_run_options(max_cosets)) {
        Ok(Some(o)) => verdict(o == ORDER_E6, format!("index {} over <a>, |E| = {o}", o / 6)),
        other => fail(format!("enumeration failed: {other:?}")),
    }
}

fn abelianizations() -> Outcome {
    let cases: [((u32, u32, u32, u32), &[u64], usize); 4] = [
        ((24, 3, 6, 1), &[5, 35], 3),
        ((24, 1, 2, 19), &[219], 3),
        ((6, 4, 2, 3), &[8], 0),
        ((6, 0, 1, 2), &[56], 0),
    ];
    let mut notes = Vec::new();
    for ((n, j, k, l), factors, rank) in cases {
        let s = abelianize(&ParamTuple { n, j, k, l });
        if s.factors_u64() != factors || s.free_rank != rank {
            return fail(format!("({n},{j},{k},{l}): got {s}"));
        }
        notes.push(format!("({n},{j},{k},{l}): {s}"));
    }
    pass(notes.join("; "))
}

fn report_invariants() -> Outcome {
    let mut count = 0;
    for t in tuples_up_to(16) {
        if let Some(v) = classify(&t).check_invariants() {
            return fail(v);
        }
        count += 1;
    }
    pass(format!("{count} reports, no violations"))
}

fn verdicts(r: &ClassificationReport) -> impl PartialEq + std::fmt::Debug {
    (r.finite, r.aspherical, r.fixed_point, r.free_action)
}

fn orbit_invariance() -> Outcome {
    let mut moves = 0;
    for t in tuples_up_to(12) {
        let r = classify(&t);
        for g in GammaElement::generators(t.n) {
            let moved = g.act(&t.word()).expect("same modulus").to_params();
            if verdicts(&r) != verdicts(&classify(&moved)) {
                return fail(format!("{t} vs {moved}"));
            }
            moves += 1;
        }
    }
    pass(format!("{moves} generator moves, verdicts unchanged"))
}

fn small_cancellation() -> Outcome {
    let mut count = 0;
    for t in tuples_up_to(12) {
        let fast = is_c4t4(&t);
        let s = eval_conditions(&t);
        if fast != is_c4t4_brute_force(&t) {
            return fail(format!("{t}: targeted test disagrees with piece enumeration"));
        }
        if s.c && fast != s.a {
            return fail(format!("{t}: C holds but C(4)-T(4) differs from A"));
        }
        if !s.b && !s.c && !fast {
            return fail(format!("{t}: B and C fail yet not C(4)-T(4)"));
        }
        count += 1;
    }
    pass(format!("{count} tuples"))
}

fn divisors() -> Outcome {
    let mut count = 0;
    for t in tuples_up_to(50) {
        let (c, g) = (primary_divisor(&t), secondary_divisor(&t));
        if g != secondary_divisor_reduced(&t) {
            return fail(format!("{t}: five-term and four-term forms differ"));
        }
        if g % c != 0 {
            return fail(format!("{t}: c={c} does not divide gamma={g}"));
        }
        if c == 1 && ![1, 2, 4].contains(&g) {
            return fail(format!("{t}: c=1 but gamma={g}"));
        }
        count += 1;
    }
    pass(format!("{count} tuples"))
}

fn resultants() -> Outcome {
    let mut count = 0;
    for t in tuples_up_to(12) {
        let det = circulant_det(&t);
        let s = abelianize(&t);
        let ok = if det.is_zero() { s.free_rank > 0 } else { s.free_rank == 0 && s.torsion_order() == det.abs() };
        if !ok {
            return fail(format!("{t}: det {det} vs {s}"));
        }
        count += 1;
    }
    pass(format!("{count} tuples"))
}

fn centralizers(tier: Tier, max_cosets: usize) -> Outcome {
    let k = pres(K);
    let report = match centralizer_search(&k, 0, &EnumerationOptions::with_max_cosets(max_cosets), 4) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let Some(found) = report
        .candidates
        .iter()
        .find(|c| {
            c.certification.map(|x| x.verdict) == Some(Verdict::Centralizes) && c.word.0.iter().any(|l| l.gen != 0)
        })
    else {
        return fail("no certified centralizing word in K");
    };
    let mut note = format!("K: {} fixed columns, {} centralizes t", report.fixed_columns, found.text);
    if tier == Tier::Fast {
        note.push_str("; E6 word deferred to the full tier");
        return pass(note);
    }
    let e = pres(E6);
    let v = parse_word(E6_CENTRALIZING_WORD, &e).expect("word parses");
    match verify_centralizes_over_retract(&e, &v, A, &large_run_options(max_cosets)) {
        Ok(c) if c.verdict == Verdict::Centralizes && c.base_order == Some(ORDER_E6) => {
            note.push_str(&format!("; E6: |E| = |Q| = {ORDER_E6}, x-sum {}", v.exponent_sum(1)));
            pass(note)
        }
        other => fail(format!("E6 word: {other:?}")),
    }
}

fn rewrites() -> Outcome {
    let mut count = 0;
    for t in tuples_up_to(16) {
        match rs_rewrite(&shift_extension(&t), 0) {
            Ok(w) if w.to_word4() == Some(t.word()) => count += 1,
            other => return fail(format!("{t}: {other:?}")),
        }
    }
    let l = pres(L_U_FORM);
    for (f, expected) in [(2, vec![0, 2, 4, 3]), (5, vec![0, 5, 4, 0])] {
        match rs_rewrite(&l, f) {
            Ok(w) if w.subscripts == expected => {}
            other => return fail(format!("f={f}: {other:?}")),
        }
    }
    pass(format!("{count} round trips; L rewrites to u0u2u4u3 and u0u5u4u0"))
}

/// Runs every check in order, calling `progress` after each.
pub fn run(tier: Tier, max_cosets: usize, mut progress: impl FnMut(&CheckResult)) -> Vec<CheckResult> {
    type Check<'a> = (u8, &'static str, Box<dyn Fn() -> Outcome + 'a>);
    let checks: Vec<Check> = vec![
        (1, "group orders", Box::new(|| known_orders(tier, max_cosets))),
        (2, "index of <a> in E6", Box::new(|| large_index(tier, max_cosets))),
        (3, "abelianizations", Box::new(abelianizations)),
        (4, "report invariants n<=16", Box::new(report_invariants)),
        (5, "orbit invariance n<=12", Box::new(orbit_invariance)),
        (6, "small cancellation n<=12", Box::new(small_cancellation)),
        (7, "divisors n<=50", Box::new(divisors)),
        (8, "resultant vs SNF n<=12", Box::new(resultants)),
        (9, "centralizer pipeline", Box::new(|| centralizers(tier, max_cosets))),
        (10, "rewrite round trip", Box::new(rewrites)),
    ];
    let mut out = Vec::new();
    for (id, name, f) in checks {
        let start = Instant::now();
        let o = f();
        let r = CheckResult {
            id,
            name,
            passed: o.passed,
            skipped: o.skipped,
            detail: o.detail,
            seconds: start.elapsed().as_secs_f64(),
        };
        progress(&r);
        out.push(r);
    }
    out
}
