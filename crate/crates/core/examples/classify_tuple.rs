//! Classify a tuple given on the command line (default: the order-220 group).
//!
//!     cargo run --example classify_tuple -- 6 4 2 1

use cyc4::classify::classify;
use cyc4::words::ParamTuple;

fn main() -> cyc4::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let [n, j, k, l] = match args.as_slice() {
        [n, j, k, l] => [*n, *j, *k, *l],
        _ => [5, 3, 1, 1],
    };
    let t = ParamTuple::new(n as u32, j, k, l)?;
    let r = classify(&t);
    println!("{t}: A={} B={} C={}  c={} gamma={}", r.conditions.a, r.conditions.b, r.conditions.c, r.c, r.gamma);
    match r.iso_type {
        Some(ty) => println!("exceptional orbit {ty}"),
        None => println!("no exceptional orbit"),
    }
    if r.finite {
        let order = r.predicted_order.map_or("too large to print".into(), |o| o.to_string());
        println!("finite, order {order} ({})", r.structure_note);
    } else {
        println!("infinite");
    }
    println!("aspherical {:?}, shift has fixed points {}, free action {:?}", r.aspherical, r.fixed_point, r.free_action);
    println!("decided by: {}", r.fired_clause);
    Ok(())
}
