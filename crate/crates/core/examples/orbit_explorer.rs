//! Orbits of length-four words under reversal, rotation, shift and unit scaling,
//! and how many orbits there are for each small modulus.

use std::collections::BTreeSet;

use cyc4::words::{canonical_rep, orbit, same_orbit, ParamTuple, Word4};

fn main() -> cyc4::Result<()> {
    let w = ParamTuple::new(7, 1, 3, 0)?.word();
    let members = orbit(&w);
    println!("orbit of {w}: {} words, canonical {}", members.len(), canonical_rep(&w));
    for m in members.iter().take(6) {
        println!("  {m}");
    }

    for subs in [[0, 2, 6, 0], [0, 4, 6, 3]] {
        let other = Word4::new(7, subs)?;
        println!("{other} in the same orbit: {}", same_orbit(&w, &other)?);
    }

    for n in 1..=10 {
        let reps: BTreeSet<Word4> = ParamTuple::all_with_modulus(n).map(|t| canonical_rep(&t.word())).collect();
        println!("n = {n:>2}: {:>4} tuples, {:>3} orbits", n.pow(3), reps.len());
    }
    Ok(())
}
