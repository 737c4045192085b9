//! Verification suites over every layer, producing [`CheckReport`] records.

use num::complex::Complex64;
use num::BigRational;

use crate::coordalg::{Coord, TensorElement};
use crate::corep::{Ladder, Rows};
use crate::fodc::{
    b_sigma, b_sigma_chain, eta, lambda_sigma, lambda_sigma_chain, localized_commutator_check, pair_chain, tau, tau_direct,
    tau_cochain, tau_omega, volume_check, Chain,
};
use crate::haar::{haar, haar_a_power, haar_podles, inner};
use crate::podles::Podles;
use crate::qscalar::{qint, Exact, RationalQ};
use crate::report::CheckReport;
use crate::sample::Sampler;
use crate::spectral::{self, TruncatedSpace};
use crate::uq::{act_left, act_right, pair, r_action, UqElement};
use crate::AlgebraError;

pub const SUITES: [&str; 8] = ["scalar", "coordalg", "uq", "podles", "haar", "corep", "fodc", "spectral"];

fn first_failure<T, F>(count: usize, mut f: F) -> (bool, Option<String>)
where
    F: FnMut(usize) -> Result<Option<T>, AlgebraError>,
    T: std::fmt::Display,
{
    for i in 0..count {
        match f(i) {
            Ok(None) => {}
            Ok(Some(bad)) => return (false, Some(format!("sample {i}: {bad}"))),
            Err(e) => return (false, Some(format!("sample {i}: {e}"))),
        }
    }
    (true, None)
}

fn randomized<T, F>(check: &str, s: &Sampler, count: usize, f: F) -> CheckReport
where
    F: FnMut(usize) -> Result<Option<T>, AlgebraError>,
    T: std::fmt::Display,
{
    let (pass, detail) = first_failure(count, f);
    CheckReport::property(check, &format!("{count} samples, seed {}", s.seed()), pass, detail)
}

pub fn scalar_suite(s: &mut Sampler, samples: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let lambda = RationalQ::lambda();
    let ok = (1..=30).all(|n| &qint(n) * &lambda == &RationalQ::q_pow(n) - &RationalQ::q_pow(-n));
    out.push(CheckReport::property("qint_lambda", "n = 1..30", ok, None));
    out.push(CheckReport::numeric("qint_3", "q0=1/2", qint(3).eval(0.5).unwrap_or(f64::NAN), 5.25, 1e-15));
    let ha = &(&RationalQ::one() - &RationalQ::q_pow(2)) / &(&RationalQ::one() - &RationalQ::q_pow(4));
    out.push(CheckReport::numeric("h(A)_formula", "q0=1/2", ha.eval(0.5).unwrap_or(f64::NAN), 0.8, 1e-15));
    let rand_q = |s: &mut Sampler| {
        let a = s.podles(2, 3).coeff(0, 0);
        let b = s.small_coeff();
        &(&a + &b) / &(&RationalQ::from_int(s.below(3) as i64 + 2) + &s.small_coeff())
    };
    let mut xs: Vec<RationalQ> = Vec::new();
    for _ in 0..3 * samples {
        xs.push(rand_q(s));
    }
    let r = randomized("field_axioms", s, samples, |i| {
        let (a, b, c) = (&xs[3 * i], &xs[3 * i + 1], &xs[3 * i + 2]);
        let assoc = &(a * b) * c == a * &(b * c);
        let dist = a * &(b + c) == &(a * b) + &(a * c);
        Ok((!(assoc && dist)).then(|| format!("{a}, {b}, {c}")))
    });
    out.push(r);
    let r = randomized("render_parse_roundtrip", s, samples, |i| {
        let x = &xs[i];
        let back = RationalQ::parse(&x.to_string())?;
        Ok((back != *x).then(|| x.to_string()))
    });
    out.push(r);
    out
}

fn bstar_b() -> (Coord, Coord) {
    let b = Podles::gen_b().embed();
    let bs = Podles::gen_bs().embed();
    (bs.times(&b), b.times(&bs))
}

pub fn coordalg_suite(s: &mut Sampler, samples: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let a = Podles::gen_a();
    let q2 = RationalQ::q_pow(2);
    let (bsb, bbs) = bstar_b();
    let want1 = (&a - &a.times(&a)).embed();
    let want2 = (&a.scale(&q2) - &a.times(&a).scale(&RationalQ::q_pow(4))).embed();
    out.push(CheckReport::exact("B*B = A - A^2", "", &bsb, &want1));
    out.push(CheckReport::exact("BB* = q^2 A - q^4 A^2", "", &bbs, &want2));
    let gens = [Coord::a(), Coord::b(), Coord::c(), Coord::d()];
    let words: Vec<Vec<usize>> = (0..samples).map(|_| (0..=s.below(5)).map(|_| s.below(4) as usize).collect()).collect();
    out.push(randomized("confluence", s, samples, |i| {
        let w = &words[i];
        let left = w.iter().fold(Coord::unit(), |acc, g| acc.times(&gens[*g]));
        let right = w.iter().rev().fold(Coord::unit(), |acc, g| gens[*g].times(&acc));
        Ok((left != right).then(|| format!("{w:?}")))
    }));
    let xs: Vec<(Coord, Coord)> = (0..samples).map(|_| (s.coord(3, 3), s.coord(3, 3))).collect();
    out.push(randomized("counit_axiom", s, samples, |i| {
        let x = &xs[i].0;
        let d = x.coproduct(2)?;
        let mut acc = Coord::zero(&Exact);
        for (k, c) in d.terms() {
            let e = Coord::from_mono(k[0]).counit()?;
            acc = &acc + &Coord::from_mono(k[1]).scale(&(c * &e));
        }
        Ok((acc != *x).then(|| x.to_string()))
    }));
    out.push(randomized("antipode_axiom", s, samples, |i| {
        let x = &xs[i].0;
        let d = x.coproduct(2)?;
        let mut acc = Coord::zero(&Exact);
        for (k, c) in d.terms() {
            acc = &acc + &Coord::from_mono(k[0]).antipode()?.times(&Coord::from_mono(k[1])).scale(c);
        }
        let want = Coord::constant(x.counit()?);
        Ok((acc != want).then(|| x.to_string()))
    }));
    out.push(randomized("coproduct_multiplicative", s, samples, |i| {
        let (x, y) = &xs[i];
        let lhs = x.times(y).coproduct(2)?;
        let rhs: TensorElement<RationalQ> = x.coproduct(2)?.mul(&y.coproduct(2)?);
        Ok((lhs != rhs).then(|| format!("{x} ; {y}")))
    }));
    out.push(randomized("star_antihomomorphism", s, samples, |i| {
        let (x, y) = &xs[i];
        let lhs = x.times(y).star()?;
        let rhs = y.star()?.times(&x.star()?);
        Ok((lhs != rhs || x.star()?.star()? != *x).then(|| format!("{x} ; {y}")))
    }));
    out.push(randomized("S(S(x*)*) = x", s, samples, |i| {
        let x = &xs[i].0;
        Ok((x.star()?.antipode()?.star()?.antipode()? != *x).then(|| x.to_string()))
    }));
    out.push(randomized("localization_embedding", s, samples, |i| {
        let (x, y) = &xs[i];
        let lhs = x.localize().times(&y.localize());
        Ok((lhs != x.times(y).localize()).then(|| format!("{x} ; {y}")))
    }));
    out
}

pub fn uq_suite(s: &mut Sampler, samples: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let (e, f, k) = (UqElement::e(), UqElement::f(), UqElement::k_pow(1));
    let lhs = &e * &f;
    let rhs = &(&f * &e) + &(&UqElement::k_pow(2) - &UqElement::k_pow(-2)).scale(&RationalQ::lambda().inv().expect("nonzero"));
    out.push(CheckReport::exact("EF = FE + (K^2 - K^-2)/lambda", "", &lhs, &rhs));
    out.push(CheckReport::exact("KE = qEK", "", &(&k * &e), &(&e * &k).scale(&RationalQ::q())));
    out.push(CheckReport::exact("S(S^-1(E))", "", &e.antipode(true).antipode(false), &e));
    out.push(CheckReport::exact("<E,c>", "", &pair(&e, &Coord::c()).unwrap_or_default(), &RationalQ::one()));
    out.push(CheckReport::exact("<K,d>", "", &pair(&k, &Coord::d()).unwrap_or_default(), &RationalQ::q_half_pow(1)));
    out.push(CheckReport::exact("E > a", "", &act_left(&e, &Coord::a()).unwrap_or_else(|_| Coord::unit()), &Coord::b()));
    out.push(CheckReport::exact("c < E", "", &act_right(&Coord::c(), &e).unwrap_or_else(|_| Coord::unit()), &Coord::a()));
    let reb = r_action(&e, &Podles::gen_b().embed()).unwrap_or_else(|_| Coord::unit());
    out.push(CheckReport::exact("R_E(B)", "", &reb, &Coord::a().times(&Coord::a()).scale(&-&RationalQ::q_half_pow(-1))));
    let pairs: Vec<(Coord, Coord)> = (0..samples).map(|_| (s.coord(2, 2), s.coord(2, 2))).collect();
    out.push(randomized("module_algebra", s, samples, |i| {
        let (x, y) = &pairs[i];
        let lhs = act_left(&e, &x.times(y))?;
        let rhs = &act_left(&e, x)?.times(&act_left(&k, y)?) + &act_left(&UqElement::k_pow(-1), x)?.times(&act_left(&e, y)?);
        Ok((lhs != rhs).then(|| format!("{x} ; {y}")))
    }));
    out.push(randomized("pairing_multiplicative", s, samples, |i| {
        let (x, y) = &pairs[i];
        for g in [&e, &f, &k] {
            let lhs = pair(g, &x.times(y))?;
            let mut rhs = RationalQ::zero();
            for (key, c) in g.coproduct(2).terms() {
                let g1 = UqElement::monomial(key[0], RationalQ::one());
                let g2 = UqElement::monomial(key[1], RationalQ::one());
                rhs = &rhs + &(c * &(&pair(&g1, x)? * &pair(&g2, y)?));
            }
            if lhs != rhs {
                return Ok(Some(format!("{g}: {x} ; {y}")));
            }
        }
        Ok(None)
    }));
    out.push(randomized("left_right_commute", s, samples, |i| {
        let x = &pairs[i].0;
        let lhs = act_left(&e, &act_right(x, &f)?)?;
        let rhs = act_right(&act_left(&e, x)?, &f)?;
        Ok((lhs != rhs).then(|| x.to_string()))
    }));
    out.push(randomized("r_star_representation", s, samples, |i| {
        let (x, y) = &pairs[i];
        let lhs = inner(x, &r_action(&e, y)?)?;
        let rhs = inner(&r_action(&f, x)?, y)?;
        Ok((lhs != rhs).then(|| format!("{x} ; {y}")))
    }));
    out
}

pub fn podles_suite(s: &mut Sampler, samples: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let (a, b, bs) = (Podles::gen_a(), Podles::gen_b(), Podles::gen_bs());
    out.push(CheckReport::exact("BA = q^2 AB", "", &b.times(&a), &a.times(&b).scale(&RationalQ::q_pow(2))));
    out.push(CheckReport::exact("B*B = A - A^2", "", &bs.times(&b), &(&a - &a.times(&a))));
    out.push(CheckReport::exact("sigma(B)", "", &b.sigma(), &b.scale(&RationalQ::q_pow(2))));
    let xs: Vec<Podles> = (0..samples).map(|_| s.podles(2, 3)).collect();
    out.push(randomized("recognize_embed", s, samples, |i| {
        let x = &xs[i];
        Ok((Podles::recognize(&x.embed())? != *x).then(|| x.to_string()))
    }));
    out.push(randomized("sigma_is_K^-2_action", s, samples, |i| {
        let x = &xs[i];
        let y = Podles::recognize(&act_left(&UqElement::k_pow(-2), &x.embed())?)?;
        Ok((y != x.sigma()).then(|| x.to_string()))
    }));
    out.push(randomized("action_stability", s, samples, |i| {
        let x = &xs[i];
        for g in [UqElement::e(), UqElement::f(), UqElement::k_pow(1)] {
            Podles::recognize(&act_left(&g, &x.embed())?)?;
        }
        Ok(None::<String>)
    }));
    let ra = Podles::recognize(&Coord::a());
    out.push(CheckReport::property("recognize(a) rejected", "", ra.is_err(), None));
    out
}

/// `h(A^j)` for `j = 1..=jmax` against the closed form.
pub fn haar_power_checks(jmax: u32) -> Vec<CheckReport> {
    (1..=jmax)
        .map(|j| {
            let x = Podles::gen_a().pow(j);
            let got = haar(&x.embed()).unwrap_or_default();
            CheckReport::exact("h(A^j)", &format!("j={j}"), &got, &haar_a_power(j))
        })
        .collect()
}

/// `h(R_F(x) R_E(y)) = q^2 h(R_E(x) R_F(y))` on random Podleś pairs.
pub fn lemma_heffe(s: &mut Sampler, samples: usize) -> CheckReport {
    let pairs: Vec<(Podles, Podles)> = (0..samples).map(|_| (s.podles(3, 2), s.podles(3, 2))).collect();
    let (e, f) = (UqElement::e(), UqElement::f());
    randomized("h(R_F x R_E y) = q^2 h(R_E x R_F y)", s, samples, |i| {
        let (x, y) = (pairs[i].0.embed(), pairs[i].1.embed());
        let lhs = haar(&r_action(&f, &x)?.times(&r_action(&e, &y)?))?;
        let rhs = &RationalQ::q_pow(2) * &haar(&r_action(&e, &x)?.times(&r_action(&f, &y)?))?;
        Ok((lhs != rhs).then(|| format!("{} ; {}", pairs[i].0, pairs[i].1)))
    })
}

pub fn haar_invariance(s: &mut Sampler, samples: usize) -> Vec<CheckReport> {
    let xs: Vec<Coord> = (0..samples).map(|_| s.coord(5, 3)).collect();
    let gens = [UqElement::e(), UqElement::f(), UqElement::k_pow(1), UqElement::k_pow(-1)];
    let left = randomized("h(f > x) = eps(f) h(x)", s, samples, |i| {
        let x = &xs[i];
        let h = haar(x)?;
        for g in &gens {
            if haar(&act_left(g, x)?)? != &g.counit() * &h || haar(&act_right(x, g)?)? != &g.counit() * &h {
                return Ok(Some(format!("{g}: {x}")));
            }
        }
        Ok(None)
    });
    let ps: Vec<(Coord, Coord)> = (0..samples).map(|_| (s.coord(3, 2), s.coord(3, 2))).collect();
    let km2 = UqElement::k_pow(-2);
    let modular = randomized("h(xy) = h((K^-2 > y < K^-2) x)", s, samples, |i| {
        let (x, y) = &ps[i];
        let twisted = act_right(&act_left(&km2, y)?, &km2)?;
        Ok((haar(&x.times(y))? != haar(&twisted.times(x))?).then(|| format!("{x} ; {y}")))
    });
    let pp: Vec<(Podles, Podles)> = (0..samples).map(|_| (s.podles(3, 2), s.podles(3, 2))).collect();
    let twisted = randomized("h(xy) = h(sigma(y) x)", s, samples, |i| {
        let (x, y) = &pp[i];
        Ok((haar_podles(&x.times(y)) != haar_podles(&y.sigma().times(x))).then(|| format!("{x} ; {y}")))
    });
    vec![left, modular, twisted]
}

pub fn haar_suite(s: &mut Sampler, samples: usize) -> Vec<CheckReport> {
    let mut out = haar_power_checks(10);
    out.push(CheckReport::exact("h(a)", "", &haar(&Coord::a()).unwrap_or_default(), &RationalQ::zero()));
    out.push(CheckReport::exact("(a,b)", "", &inner(&Coord::a(), &Coord::b()).unwrap_or_default(), &RationalQ::zero()));
    out.extend(haar_invariance(s, samples));
    out.push(lemma_heffe(s, samples));
    out
}

pub fn corep_suite(l2_max: u32) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let lad = match Ladder::<RationalQ>::build(l2_max, Rows::All, &Exact) {
        Ok(l) => l,
        Err(e) => return vec![CheckReport::property("ladder_build", "", false, Some(e.to_string()))],
    };
    let inputs = format!("l <= {l2_max}/2");
    let vs: Vec<_> = lad.vectors().collect();
    let mut bad = None;
    'outer: for (i, v) in vs.iter().enumerate() {
        for w in &vs[i + 1..] {
            if (v.j2, v.k2) == (w.j2, w.k2) && !inner(&v.elem, &w.elem).map(|x| x.is_zero()).unwrap_or(false) {
                bad = Some(format!("l={}/2 vs l={}/2 at j={}/2, k={}/2", v.l2, w.l2, v.j2, v.k2));
                break 'outer;
            }
        }
    }
    out.push(CheckReport::property("ladder_orthogonality", &inputs, bad.is_none(), bad));
    let k = UqElement::k_pow(1);
    let bad = vs.iter().find(|v| {
        let right = act_right(&v.elem, &k).ok() == Some(v.elem.scale(&RationalQ::q_half_pow(v.j2 as i64)));
        let left = act_left(&k, &v.elem).ok() == Some(v.elem.scale(&RationalQ::q_half_pow(v.k2 as i64)));
        let norm = inner(&v.elem, &v.elem).ok() == Some(v.norm2.clone());
        !(right && left && norm)
    });
    out.push(CheckReport::property(
        "ladder_weights_and_norms",
        &inputs,
        bad.is_none(),
        bad.map(|v| format!("l={}/2 j={}/2 k={}/2", v.l2, v.j2, v.k2)),
    ));
    let e = UqElement::e();
    let bad = vs.iter().filter(|v| v.j2 == 1).find(|v| {
        let n = (v.l2 as i64 + 1) / 2;
        let lower = lad.get(v.l2, -1, v.k2).expect("row -1/2");
        let sq = &qint(n) * &qint(n);
        r_action(&e, &v.elem).ok() != Some(lower.elem.scale(&-&sq))
    });
    out.push(CheckReport::property(
        "R_E(w+) = -[n]^2 w-",
        &inputs,
        bad.is_none(),
        bad.map(|v| format!("l={}/2 k={}/2", v.l2, v.k2)),
    ));
    out
}

pub fn eta_checks() -> Result<Vec<CheckReport>, AlgebraError> {
    let mut out = Vec::new();
    let t = tau_cochain();
    let e = eta();
    out.push(CheckReport::exact("tau_eta", "", &pair_chain(&t, &e)?, &RationalQ::from_int(-1)));
    let (a, b, bs) = (Podles::gen_a(), Podles::gen_b(), Podles::gen_bs());
    let qm2 = RationalQ::q_pow(-2);
    let shortcut = &(&(&RationalQ::from_int(3) * &tau(&bs, &a, &b)) - &(&(&RationalQ::from_int(3) * &qm2) * &tau(&bs, &b, &a)))
        + &(&(&RationalQ::q_pow(6) - &qm2) * &tau(&a, &a, &a));
    out.push(CheckReport::exact("tau_eta_cyclic_shortcut", "", &shortcut, &RationalQ::from_int(-1)));
    out.push(CheckReport::exact("lambda_sigma(eta) = eta", "", &lambda_sigma_chain(&e), &e));
    let stated = &RationalQ::from_int(2) * &(&RationalQ::q_pow(4) - &qm2);
    let stated = Chain::from_tensors(2, &[(stated, vec![a.clone(), a.clone()])])?;
    out.push(
        CheckReport::exact("b_sigma(eta) = 2(q^4 - q^-2) A⊗A", "", &b_sigma_chain(&e), &stated)
            .with_detail("known deviation: the computed coefficient is q^4 - q^-2"),
    );
    let computed = Chain::from_tensors(2, &[(&RationalQ::q_pow(4) - &qm2, vec![a.clone(), a.clone()])])?;
    out.push(CheckReport::exact("b_sigma(eta) = (q^4 - q^-2) A⊗A", "", &b_sigma_chain(&e), &computed));
    out.push(CheckReport::property("b_sigma(eta) != 0", "", !b_sigma_chain(&e).is_zero(), None));
    let want1 = &(&(&RationalQ::q_pow(2) - &RationalQ::q_pow(-4)) * &haar_podles(&(&a.pow(3) - &a.pow(2))))
        + &(&qm2 * &haar_podles(&(&a.pow(2) - &a)));
    out.push(CheckReport::exact("tau(B*,A,B)", "", &tau(&bs, &a, &b), &want1));
    let want2 = &(&(&qm2 - &RationalQ::q_pow(4)) * &haar_podles(&a.pow(3)))
        - &(&(&qm2 - &RationalQ::q_pow(2)) * &haar_podles(&a.pow(2)));
    out.push(CheckReport::exact("tau(A,A,A)", "", &tau(&a, &a, &a), &want2));
    let phi = crate::fodc::Cochain::new("h(x0 x1)", 2, |x| Ok(haar_podles(&x[0].times(&x[1]))));
    let flipped = lambda_sigma(&phi).eval(&[a.clone(), a.clone()])?;
    let minus = -&phi.eval(&[a.clone(), a])?;
    out.push(CheckReport::exact("(lambda_sigma phi)(A,A) = -phi(A,A)", "", &flipped, &minus));
    Ok(out)
}

pub fn cocycle_checks(s: &mut Sampler, samples: usize) -> Vec<CheckReport> {
    let t = tau_cochain();
    let bt = b_sigma(&t);
    let lt = lambda_sigma(&t);
    let quads: Vec<Vec<Podles>> = (0..samples).map(|_| (0..4).map(|_| s.podles_mono(3)).collect()).collect();
    let b = randomized("b_sigma tau = 0", s, samples, |i| {
        let v = bt.eval(&quads[i])?;
        Ok((!v.is_zero()).then(|| format!("{:?} -> {v}", quads[i])))
    });
    let c = randomized("lambda_sigma tau = tau", s, samples, |i| {
        let x = &quads[i][..3];
        Ok((lt.eval(x)? != t.eval(x)?).then(|| format!("{x:?}")))
    });
    let triples: Vec<Vec<Podles>> = (0..samples.min(20)).map(|_| (0..3).map(|_| s.podles(2, 2)).collect()).collect();
    let d = randomized("tau = tau_direct", s, triples.len(), |i| {
        let x = &triples[i];
        Ok((tau(&x[0], &x[1], &x[2]) != tau_direct(&x[0], &x[1], &x[2])).then(|| format!("{x:?}")))
    });
    vec![b, c, d]
}

pub fn volume_checks(s: &mut Sampler, samples: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    match volume_check() {
        Ok(v) => out.push(CheckReport::exact("volume_check", "", &v, &Podles::one())),
        Err(e) => out.push(CheckReport::property("volume_check", "", false, Some(e.to_string()))),
    }
    let triples: Vec<Vec<Podles>> = (0..samples).map(|_| (0..3).map(|_| s.podles(2, 2)).collect()).collect();
    out.push(randomized("tau_omega_h = tau", s, samples, |i| {
        let x = &triples[i];
        Ok((tau_omega(&x[0], &x[1], &x[2])? != tau(&x[0], &x[1], &x[2])).then(|| format!("{x:?}")))
    }));
    out
}

pub fn efcom_checks(s: &mut Sampler, samples: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (name, x) in [("A", Podles::gen_a()), ("B", Podles::gen_b()), ("B*", Podles::gen_bs())] {
        let (f, e) = localized_commutator_check(&x);
        out.push(CheckReport::property("efcom", name, f && e, (!(f && e)).then(|| format!("R_F {f}, R_E {e}"))));
    }
    let xs: Vec<Podles> = (0..samples).map(|_| s.podles(2, 3)).collect();
    out.push(randomized("efcom_random", s, samples, |i| {
        let (f, e) = localized_commutator_check(&xs[i]);
        Ok((!(f && e)).then(|| xs[i].to_string()))
    }));
    out
}

pub fn invariance_checks(s: &mut Sampler, samples: usize) -> CheckReport {
    let t = tau_cochain();
    let chains: Vec<Chain> = (0..samples)
        .map(|_| {
            let mut c = Chain::zero(3);
            for _ in 0..2 {
                let f: Vec<Podles> = (0..3).map(|_| s.podles_mono(2)).collect();
                c.add_tensor(&s.small_coeff(), &f).expect("arity");
            }
            c
        })
        .collect();
    randomized("tau(f > eta') = eps(f) tau(eta')", s, samples, |i| {
        let base = pair_chain(&t, &chains[i])?;
        for g in [UqElement::e(), UqElement::f(), UqElement::k_pow(1)] {
            if pair_chain(&t, &chains[i].act(&g)?)? != &g.counit() * &base {
                return Ok(Some(format!("{g}: {}", chains[i])));
            }
        }
        Ok(None)
    })
}

pub fn fodc_suite(s: &mut Sampler, samples: usize) -> Vec<CheckReport> {
    let mut out = match eta_checks() {
        Ok(v) => v,
        Err(e) => vec![CheckReport::property("eta", "", false, Some(e.to_string()))],
    };
    out.extend(cocycle_checks(s, samples));
    out.extend(volume_checks(s, samples));
    out.extend(efcom_checks(s, samples));
    out.push(invariance_checks(s, samples.min(20)));
    out
}

/// Parameters of the numeric suite.
#[derive(Clone, Debug)]
pub struct SpectralParams {
    pub l_spectrum: u32,
    pub l_operators: u32,
    pub l_trace: u32,
    pub z_values: Vec<f64>,
}

impl Default for SpectralParams {
    fn default() -> Self {
        Self { l_spectrum: 12, l_operators: 8, l_trace: 20, z_values: vec![3.0, 4.0] }
    }
}

pub fn spectral_operator_checks(q0: &BigRational, p: &SpectralParams) -> Result<Vec<CheckReport>, AlgebraError> {
    let gens = [Podles::gen_a(), Podles::gen_b(), Podles::gen_bs()];
    let small = TruncatedSpace::new(q0.clone(), (p.l_operators + 4).max(p.l_spectrum))?;
    let mut out = vec![spectral::spectrum_check(&small, p.l_spectrum, 1e-12)];
    out.extend(spectral::reality_checks(&small, p.l_operators, 1e-9)?);
    for x in &gens {
        out.push(spectral::dcom_check(&small, x, p.l_operators, 1e-10)?);
        out.push(spectral::star_compatibility(&small, x, p.l_operators, 1e-10)?);
        for y in &gens {
            out.extend(spectral::commutant_checks(&small, x, y, p.l_operators, 1e-9)?);
        }
    }
    Ok(out)
}

pub fn spectral_trace_checks(q0: &BigRational, p: &SpectralParams) -> Result<Vec<CheckReport>, AlgebraError> {
    let (a, b, bs) = (Podles::gen_a(), Podles::gen_b(), Podles::gen_bs());
    let big = TruncatedSpace::new(q0.clone(), p.l_trace + 3)?;
    let mut out = Vec::new();
    for z in &p.z_values {
        for x in [Podles::one(), a.clone(), a.times(&a)] {
            out.extend(spectral::haar_trace_check(&big, &x, Complex64::new(*z, 0.0), p.l_trace, 1e-4)?);
        }
    }
    for tr in [[&bs, &a, &b], [&a, &a, &a], [&b, &bs, &a]] {
        out.extend(spectral::tau_trace_check(&big, tr, Complex64::new(3.0, 0.0), p.l_trace, 1e-3)?);
    }
    let q = big.q0();
    out.push(spectral::zeta_agreement(3.0, q, 120, 60, 1e-9));
    out.push(spectral::residue_check(q, 1e-4, 1e-3));
    Ok(out)
}

pub fn spectral_suite(q0: &BigRational, p: &SpectralParams) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for part in [spectral_operator_checks(q0, p), spectral_trace_checks(q0, p)] {
        match part {
            Ok(v) => out.extend(v),
            Err(e) => out.push(CheckReport::property("spectral", "", false, Some(e.to_string()))),
        }
    }
    out
}

/// Runs one named suite.
pub fn run_suite(name: &str, seed: u64, samples: usize, q0: &BigRational, p: &SpectralParams) -> Option<Vec<CheckReport>> {
    let mut s = Sampler::new(seed);
    let reports = match name {
        "scalar" => scalar_suite(&mut s, samples),
        "coordalg" => coordalg_suite(&mut s, samples),
        "uq" => uq_suite(&mut s, samples),
        "podles" => podles_suite(&mut s, samples),
        "haar" => haar_suite(&mut s, samples),
        "corep" => corep_suite(5),
        "fodc" => fodc_suite(&mut s, samples),
        "spectral" => spectral_suite(q0, p),
        _ => return None,
    };
    Some(reports)
}
