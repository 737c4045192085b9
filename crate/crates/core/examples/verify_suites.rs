//! Runs every exact verification suite and prints one line per check.
//!
//! `cargo run --release --example verify_suites -- [seed] [samples]`

use num::BigRational;
use qsphere::verify::{run_suite, SpectralParams, SUITES};
use std::time::Instant;

fn main() {
    let mut args = std::env::args().skip(1);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let samples: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(50);
    let q0 = BigRational::new(1.into(), 2.into());
    let params = SpectralParams::default();
    let mut failed = 0;
    for name in SUITES.iter().filter(|n| **n != "spectral") {
        let t = Instant::now();
        let reports = run_suite(name, seed, samples, &q0, &params).expect("known suite");
        for r in &reports {
            println!("{}", r.to_text());
            failed += usize::from(!r.pass);
        }
        println!("# {name}: {} checks in {:.2?}", reports.len(), t.elapsed());
    }
    println!("# {failed} failing");
}
