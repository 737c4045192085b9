//! Ladder vectors of the corepresentations and exact matrices of left multiplication.

use qsphere::corep::{Ladder, Rows};
use qsphere::haar::inner;
use qsphere::podles::Podles;
use qsphere::qscalar::Exact;

fn main() -> Result<(), qsphere::AlgebraError> {
    let ladder = Ladder::build(3, Rows::All, &Exact)?;
    for v in ladder.vectors().filter(|v| v.l2 == 1) {
        println!("w(1/2, {}/2, {}/2) = {}   |w|^2 = {}", v.j2, v.k2, v.elem, v.norm2);
    }
    let w = ladder.get(3, 1, -1).expect("built");
    println!("(w, w) = {} = {}", inner(&w.elem, &w.elem)?, w.norm2);

    let m = ladder.mult_matrix(&Podles::gen_b().embed(), -1, -1)?;
    println!("left multiplication by B on the row j = -1/2:");
    print!("{}", m.to_csv());
    Ok(())
}
