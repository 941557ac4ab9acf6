//! Pieces of the symmetrized relators and the C(4)-T(4) condition.

use cyc4::conditions::eval_conditions;
use cyc4::fp::Presentation;
use cyc4::smallcanc::{is_c4t4, pieces};
use cyc4::words::ParamTuple;

fn main() -> cyc4::Result<()> {
    let names: Vec<String> = (0..8).map(|i| format!("x{i}")).collect();
    for (n, j, k, l) in [(7, 1, 3, 0), (7, 1, 2, 3), (4, 1, 2, 3), (1, 0, 0, 0)] {
        let t = ParamTuple::new(n, j, k, l)?;
        let ps = pieces(&t);
        let s = eval_conditions(&t);
        println!("{t}: C(4)-T(4) {}  A={} B={} C={}  {} pieces", is_c4t4(&t), s.a, s.b, s.c, ps.len());
        let p = Presentation::new(names[..n as usize].to_vec(), vec![])?;
        let two: Vec<String> = ps.iter().filter(|w| w.len() == 2).take(4).map(|w| p.display_word(w).to_string()).collect();
        if !two.is_empty() {
            println!("  length-two pieces include {}", two.join(", "));
        }
    }

    let count = (1..=10).flat_map(ParamTuple::all_with_modulus).filter(is_c4t4).count();
    println!("{count} tuples with n <= 10 satisfy C(4)-T(4)");
    Ok(())
}
