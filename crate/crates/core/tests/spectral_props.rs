use num::complex::Complex64;
use num::BigRational;
use qsphere::podles::Podles;
use qsphere::spectral::*;
use qsphere::uq::{r_action, UqElement};

const Q0: [(i64, i64); 3] = [(1, 2), (3, 10), (7, 10)];

fn space(q: (i64, i64), levels: u32) -> TruncatedSpace {
    TruncatedSpace::new(BigRational::new(q.0.into(), q.1.into()), levels).unwrap()
}

/// `[n]` from its defining sum `q^{1-n} + q^{3-n} + ... + q^{n-1}`.
fn qint_oracle(n: u32, q0: f64) -> f64 {
    (0..n).map(|i| q0.powi(2 * i as i32 + 1 - n as i32)).sum()
}

#[test]
fn dirac_from_right_action_of_e() {
    for q in Q0 {
        let s = space(q, 6);
        let d = s.dirac().real_part();
        let lad = s.ladder();
        for lab in s.labels().iter().filter(|l| l.plus) {
            let w = lad.get(lab.l2(), 1, lab.k2).unwrap();
            let re = r_action(&UqElement::e(), &w.elem).unwrap();
            let (coeffs, complete) = lad.expand(&re, -1).unwrap();
            assert!(complete);
            assert_eq!(coeffs.len(), 1);
            let ((l2, k2), c) = &coeffs[0];
            assert_eq!((*l2, *k2), (lab.l2(), lab.k2));
            let lower = &lad.get(*l2, -1, *k2).unwrap().norm2;
            let entry = c.to_f64() * (lower.to_f64() / w.norm2.to_f64()).sqrt();
            let minus = s.index_of(&Label { plus: false, ..*lab }).unwrap();
            let plus = s.index_of(lab).unwrap();
            let want = -qint_oracle(lab.n, s.q0());
            assert!((entry - want).abs() < 1e-12 * want.abs(), "{lab:?}: {entry} vs {want}");
            assert!((d[(minus, plus)] - want).abs() < 1e-12 * want.abs());
        }
    }
}

#[test]
fn dirac_is_hermitian_and_odd() {
    let s = space((1, 2), 8);
    let d = s.dirac();
    assert!((&d.matrix - d.matrix.adjoint()).iter().all(|z| z.norm() < 1e-15));
    assert!(s.gamma().anticommutator(&d).matrix.iter().all(|z| z.norm() < 1e-15));
}

#[test]
fn spectrum_matches_q_integers() {
    for q in Q0 {
        let s = space(q, 8);
        let got = dirac_eigenvalues(&s, 8);
        let mut want = Vec::new();
        for n in 1..=8u32 {
            let v = qint_oracle(n, s.q0());
            want.extend(std::iter::repeat_n(v, 2 * n as usize));
            want.extend(std::iter::repeat_n(-v, 2 * n as usize));
        }
        want.sort_by(|a, b| a.total_cmp(b));
        assert_eq!(got.len(), want.len());
        for (a, b) in got.iter().zip(&want) {
            assert!((a - b).abs() <= 1e-10 * b.abs(), "{a} vs {b}");
        }
        assert!(spectrum_check(&s, 8, 1e-10).pass);
    }
}

#[test]
fn commutators_are_bounded() {
    let s = space((1, 2), 16);
    let q2 = s.q0() * s.q0();
    let a = Podles::gen_a();
    let (a8, a12) = (commutator_norm(&s, &a, 8).unwrap(), commutator_norm(&s, &a, 12).unwrap());
    assert!((a8 - a12).abs() < 1e-12);
    // 1 - ||[D, B]|| decays like q^{2L}
    let gap: Vec<f64> = [8, 10, 12].iter().map(|&l| 1.0 - commutator_norm(&s, &Podles::gen_b(), l).unwrap()).collect();
    assert!(gap.iter().all(|g| *g > 0.0));
    for w in gap.windows(2) {
        let rate = w[1] / w[0];
        assert!((rate - q2 * q2).abs() < 0.05 * q2 * q2, "rate {rate}");
    }
    let s = space((3, 10), 16);
    let n10 = commutator_norm(&s, &Podles::gen_b(), 10).unwrap();
    let n14 = commutator_norm(&s, &Podles::gen_b(), 14).unwrap();
    assert!(((n14 - n10) / n14).abs() < 1e-6);
}

#[test]
fn dcom_and_star_compatibility() {
    for q in Q0 {
        let s = space(q, 10);
        for x in [Podles::gen_a(), Podles::gen_b(), Podles::gen_bs()] {
            assert!(dcom_check(&s, &x, 8, 1e-10).unwrap().pass, "{q:?} {x}");
            assert!(star_compatibility(&s, &x, 8, 1e-10).unwrap().pass, "{q:?} {x}");
        }
    }
}

#[test]
fn real_structure() {
    for q in Q0 {
        let s = space(q, 6);
        for r in reality_checks(&s, 6, 1e-10).unwrap() {
            assert!(r.pass, "{}", r.to_text());
        }
    }
}

#[test]
fn opposite_algebra_commutes() {
    let s = space((1, 2), 12);
    let gens = [Podles::gen_a(), Podles::gen_b(), Podles::gen_bs()];
    for x in &gens {
        for y in &gens {
            for r in commutant_checks(&s, x, y, 8, 1e-9).unwrap() {
                assert!(r.pass, "{}", r.to_text());
            }
        }
    }
}

#[test]
fn zeta_continuation_matches_direct_sum() {
    for q in Q0 {
        let q0 = q.0 as f64 / q.1 as f64;
        for z in [3.0, 4.0, 5.5] {
            let direct: f64 = (1..=120).map(|n| qint_oracle(n, q0).powf(-z) * qint_oracle(2 * n, q0)).sum();
            let m = zeta_merom(Complex64::new(z, 0.0), q0, 80).re;
            assert!((m - direct).abs() < 1e-9 * direct.abs(), "q0={q0} z={z}: {m} vs {direct}");
        }
    }
}

#[test]
fn residue_at_two() {
    for q in Q0 {
        let q0 = q.0 as f64 / q.1 as f64;
        let oracle = (1.0 / q0 - q0) / (-q0.ln());
        assert!((residue_value(q0) - oracle).abs() < 1e-14 * oracle);
        let r = residue_check(q0, 1e-5, 1e-3);
        assert!(r.pass, "{}", r.to_text());
    }
}

#[test]
fn haar_state_from_traces() {
    for q in Q0 {
        let s = space(q, 12);
        for x in [Podles::one(), Podles::gen_a(), Podles::gen_a().pow(2)] {
            for r in haar_trace_check(&s, &x, Complex64::new(3.0, 0.0), 10, 1e-9).unwrap() {
                if r.check != "haar_trace_full_zeta" {
                    assert!(r.pass, "{}", r.to_text());
                }
            }
        }
    }
}
