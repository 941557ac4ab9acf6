//! Stream a small census as JSON lines and tally it.

use std::collections::BTreeMap;

use cyc4::census::{census, write_census, CensusOptions};

fn main() -> std::io::Result<()> {
    let mut buf = Vec::new();
    let lines = write_census(&CensusOptions::new(3), &mut buf)?;
    println!("{lines} lines for n <= 3; the first two:");
    for line in String::from_utf8_lossy(&buf).lines().take(2) {
        println!("  {line}");
    }

    let opts = CensusOptions { dedup: true, jobs: 4, ..CensusOptions::new(9) };
    let mut finite_by_n: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
    for r in census(&opts)? {
        let e = finite_by_n.entry(r.tuple.n).or_default();
        e.0 += 1;
        e.1 += r.finite as usize;
    }
    for (n, (orbits, finite)) in finite_by_n {
        println!("n = {n}: {orbits:>3} orbit representatives, {finite:>2} finite");
    }
    Ok(())
}
