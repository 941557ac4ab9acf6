//! Hunt for elements commuting with `t` by reading fixed columns of a coset table,
//! then certify each candidate with a second enumeration.

use cyc4::centralizer::{centralizer_search, find_retraction, order_over_retract};
use cyc4::coset::EnumerationOptions;
use cyc4::parse::parse_presentation;

fn main() -> cyc4::Result<()> {
    let k = parse_presentation("< t, u | t^5, u^3 t^2 u t >")?;
    let opts = EnumerationOptions::default();

    let r = find_retraction(&k, 0)?;
    println!("retraction onto Z{} with images {:?}", r.order, r.images);
    println!("|K| via the retraction kernel: {:?}", order_over_retract(&k, 0, &opts)?);

    let report = centralizer_search(&k, 0, &opts, 3)?;
    println!("index of <t>: {:?}, fixed columns: {}", report.index, report.fixed_columns);
    for c in &report.candidates {
        match c.certification {
            Some(cert) => println!("  {:<20} {:?} (orders {:?} / {:?})", c.text, cert.verdict, cert.base_order, cert.extended_order),
            None => println!("  {:<20} not checked", c.text),
        }
    }
    Ok(())
}
