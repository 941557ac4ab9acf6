//! Recover cyclic presentations from shift extensions by Reidemeister-Schreier rewriting.

use cyc4::parse::parse_presentation;
use cyc4::shiftext::{rs_rewrite, shift_extension, substitute_u};
use cyc4::words::ParamTuple;

fn main() -> cyc4::Result<()> {
    let t = ParamTuple::new(7, 1, 3, 0)?;
    let e = shift_extension(&t);
    println!("shift extension of {t}: {e}");
    println!("  rewritten kernel word: {}", rs_rewrite(&e, 0)?);

    let b = ParamTuple::new(5, 3, 1, 1)?;
    println!("after u = x a^j: {}", substitute_u(&b)?);

    // Different retractions of one group expose different cyclic presentations.
    let l = parse_presentation("< a, u | a^6, u^3 a^3 u a >")?;
    for f in [2, 5] {
        println!("u -> a^{f}: {}", rs_rewrite(&l, f)?);
    }
    Ok(())
}
