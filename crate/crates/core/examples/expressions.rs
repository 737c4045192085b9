//! The expression language of the command line, used from the library.

use qsphere::cli::expr::{parse, parse_as};
use qsphere::cli::run;
use qsphere::coordalg::Coord;
use qsphere::podles::Podles;

fn main() {
    let e = parse("q^-1*b*c + (A - B)^2").expect("well formed");
    println!("{e}  in context {}", e.infer_context().expect("single algebra"));
    let x: Coord = parse_as("-q^-1*b*c").expect("coordinate expression");
    println!("-q^-1*b*c = {x} = {}", Podles::recognize(&x).expect("in the sphere"));
    match parse_as::<Coord>("E*a") {
        Ok(_) => unreachable!(),
        Err(err) => println!("E*a: {err}"),
    }
    for args in [["qsphere", "tau", "Bs", "A", "B"], ["qsphere", "haar", "A^3", "--q", "1/2"]] {
        let (code, out) = run(args);
        print!("{} -> {}{}", args[1..].join(" "), out.stdout, if code == 0 { "" } else { "(failed)\n" });
    }
}
