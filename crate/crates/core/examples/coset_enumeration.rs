//! Todd-Coxeter on a few presentations, with both strategies.

use cyc4::coset::{coset_enumerate, EnumerationOptions, Strategy};
use cyc4::parse::{parse_presentation, parse_words};

fn main() -> cyc4::Result<()> {
    let cases = [
        ("< t, y | t^4, y^3 t^2 y t >", ""),
        ("< t, u | t^5, u^3 t^2 u t >", ""),
        ("< t, u | t^5, u^3 t^2 u t >", "t"),
        ("< a, x | a^5, x a^3 x a^-2 x^2 a^-1 >", "a"),
        ("< a, b | a^2, b^3, a b a b a b a b a b >", ""),
    ];
    for (text, sub) in cases {
        let p = parse_presentation(text)?;
        let h = parse_words(sub, &p)?;
        for strategy in [Strategy::Hlt, Strategy::Felsch] {
            let opts = EnumerationOptions { strategy, ..EnumerationOptions::with_max_cosets(1 << 20) };
            let e = coset_enumerate(&p, &h, &opts)?;
            let s = e.stats();
            let index = e.index().map_or("overflow".into(), |i| i.to_string());
            println!("{p}  over <{sub}>  {strategy:?}: index {index}  (defined {}, peak {})", s.defined, s.max_live);
        }
    }

    // A bound that is too small reports overflow instead of a wrong answer.
    let p = parse_presentation("< t, u | t^6, u^3 t^3 u t^2 >")?;
    let e = coset_enumerate(&p, &[], &EnumerationOptions::with_max_cosets(1000))?;
    println!("J6 with 1000 cosets: {:?}", e.index());
    Ok(())
}
