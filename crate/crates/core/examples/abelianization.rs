//! Abelianizations from the Smith normal form, compared with the circulant determinant.

use cyc4::resultant::circulant_det;
use cyc4::shiftext::abelianize;
use cyc4::snf::{abelianization, smith_normal_form, IntMatrix};
use cyc4::parse::parse_presentation;
use cyc4::words::ParamTuple;

fn main() -> cyc4::Result<()> {
    for (n, j, k, l) in [(24, 3, 6, 1), (24, 1, 2, 19), (6, 4, 2, 3), (6, 0, 1, 2), (7, 1, 3, 0)] {
        let t = ParamTuple::new(n, j, k, l)?;
        println!("{t}: {}   det {}", abelianize(&t), circulant_det(&t));
    }

    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])?;
    println!("SNF of a 3x3 matrix: {:?}", smith_normal_form(&m).factors_u64());

    let p = parse_presentation("< a, b | a^2 b^3, a b^-1 a^4 >")?;
    println!("{p}  abelianizes to {}", abelianization(&p)?);
    Ok(())
}
