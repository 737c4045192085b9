//! The covariant two-dimensional calculus on the Podleś sphere and twisted cyclic (co)chains.
//!
//! A one-form is stored by its two off-diagonal components: `dx` has
//! `fcomp = q^{-1/2} R_F(x)` and `ecomp = q^{1/2} R_E(x)`. Two-forms are
//! reduced to a coefficient against the volume form through
//! `x dy ∧ dz = x (R_F(y) R_E(z) - q^2 R_E(y) R_F(z)) ω`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::coordalg::Coord;
use crate::haar::haar;
use crate::podles::Podles;
use crate::qscalar::{Exact, RationalQ};
use crate::uq::{act_left, r_action, UqElement};
use crate::AlgebraError;

fn r_f(x: &Coord) -> Coord {
    r_action(&UqElement::f(), x).expect("unlocalized input")
}

fn r_e(x: &Coord) -> Coord {
    r_action(&UqElement::e(), x).expect("unlocalized input")
}

#[derive(Clone, Debug, PartialEq)]
pub struct OneForm {
    pub fcomp: Coord,
    pub ecomp: Coord,
}

impl OneForm {
    pub fn zero() -> Self {
        Self { fcomp: Coord::zero(&Exact), ecomp: Coord::zero(&Exact) }
    }

    pub fn is_zero(&self) -> bool {
        self.fcomp.is_zero() && self.ecomp.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { fcomp: &self.fcomp + &o.fcomp, ecomp: &self.ecomp + &o.ecomp }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { fcomp: &self.fcomp - &o.fcomp, ecomp: &self.ecomp - &o.ecomp }
    }

    pub fn scale(&self, c: &RationalQ) -> Self {
        Self { fcomp: self.fcomp.scale(c), ecomp: self.ecomp.scale(c) }
    }
}

pub fn differential(x: &Podles) -> OneForm {
    let e = x.embed();
    OneForm { fcomp: r_f(&e).scale_q_half(-1), ecomp: r_e(&e).scale_q_half(1) }
}

pub fn lmul(x: &Podles, w: &OneForm) -> OneForm {
    let e = x.embed();
    OneForm { fcomp: e.times(&w.fcomp), ecomp: e.times(&w.ecomp) }
}

pub fn rmul(w: &OneForm, x: &Podles) -> OneForm {
    let e = x.embed();
    OneForm { fcomp: w.fcomp.times(&e), ecomp: w.ecomp.times(&e) }
}

/// `π(x dy ∧ dz)`.
pub fn wedge_kernel(x: &Podles, y: &Podles, z: &Podles) -> Result<Podles, AlgebraError> {
    let (ey, ez) = (y.embed(), z.embed());
    let fe = r_f(&ey).times(&r_e(&ez));
    let ef = r_e(&ey).times(&r_f(&ez));
    let inner = &fe - &ef.scale(&RationalQ::q_pow(2));
    Ok(x.times(&Podles::recognize(&inner)?))
}

/// `π(η ∧ ρ)` for `η = Σ x_i dy_i` and `ρ = Σ z_j dw_j`.
///
/// `dy · z` is rewritten as `d(yz) - y dz` before the kernel is applied.
pub fn wedge_coeff(eta: &[(Podles, Podles)], rho: &[(Podles, Podles)]) -> Result<Podles, AlgebraError> {
    let mut acc = Podles::zero();
    for (x, y) in eta {
        for (z, w) in rho {
            let yz = y.times(z);
            acc = &acc + &wedge_kernel(x, &yz, w)?;
            acc = &acc - &wedge_kernel(&x.times(y), z, w)?;
        }
    }
    Ok(acc)
}

/// Rows of `p = [[A, B*], [B, 1 - q^2 A]]`.
pub fn projection() -> [[Podles; 2]; 2] {
    let a = Podles::gen_a();
    let one_minus = &Podles::one() - &a.scale(&RationalQ::q_pow(2));
    [[a.clone(), Podles::gen_bs()], [Podles::gen_b(), one_minus]]
}

/// `Σ_{i,j,k} q^{2-2i} π(dp_ij ∧ dp_jk) p_ki`, which is `1` for the normalized volume form.
pub fn volume_check() -> Result<Podles, AlgebraError> {
    let p = projection();
    let one = Podles::one();
    let mut acc = Podles::zero();
    for i in 0..2 {
        let w = RationalQ::q_pow(2 - 2 * (i as i64 + 1));
        for j in 0..2 {
            for k in 0..2 {
                let c = wedge_coeff(&[(one.clone(), p[i][j].clone())], &[(one.clone(), p[j][k].clone())])?;
                acc = &acc + &c.times(&p[k][i]).scale(&w);
            }
        }
    }
    Ok(acc)
}

/// Elements `q^{1/2} λ^{-1} d b^{-1}` and `-q^{-1/2} λ^{-1} a c^{-1}` whose commutators give `R_F` and `R_E`.
pub fn commutator_generators() -> (Coord, Coord) {
    let linv = RationalQ::lambda().inv().expect("lambda is nonzero");
    let gf = Coord::gen_d(&Exact).times(&Coord::gen_binv(&Exact)).scale(&(&RationalQ::q_half_pow(1) * &linv));
    let ge = Coord::gen_a(&Exact)
        .times(&Coord::gen_cinv(&Exact))
        .scale(&-&(&RationalQ::q_half_pow(-1) * &linv));
    (gf, ge)
}

/// Checks `R_F(x) = [g_F, x]` and `R_E(x) = [g_E, x]` in the localized algebra.
pub fn localized_commutator_check(x: &Podles) -> (bool, bool) {
    let (gf, ge) = commutator_generators();
    let ex = x.embed();
    let lx = ex.localize();
    let cf = &gf.times(&lx) - &lx.times(&gf);
    let ce = &ge.times(&lx) - &lx.times(&ge);
    (cf == r_f(&ex).localize(), ce == r_e(&ex).localize())
}

type Evaluator = dyn Fn(&[Podles]) -> Result<RationalQ, AlgebraError> + Send + Sync;

/// Multilinear form given by an evaluator.
#[derive(Clone)]
pub struct Cochain {
    arity: usize,
    name: String,
    eval: Arc<Evaluator>,
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain({}, arity {})", self.name, self.arity)
    }
}

impl Cochain {
    pub fn new<F>(name: &str, arity: usize, f: F) -> Self
    where
        F: Fn(&[Podles]) -> Result<RationalQ, AlgebraError> + Send + Sync + 'static,
    {
        Self { arity, name: name.to_string(), eval: Arc::new(f) }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, args: &[Podles]) -> Result<RationalQ, AlgebraError> {
        if args.len() != self.arity {
            return Err(AlgebraError::ArityError { expected: self.arity, got: args.len() });
        }
        (self.eval)(args)
    }
}

/// `(b_σ φ)(x_0,…,x_{n+1}) = Σ_j (-1)^j φ(…, x_j x_{j+1}, …) + (-1)^{n+1} φ(σ(x_{n+1}) x_0, x_1, …, x_n)`.
pub fn b_sigma(phi: &Cochain) -> Cochain {
    let inner = phi.clone();
    let n = phi.arity - 1;
    Cochain::new(&format!("b_sigma({})", phi.name), n + 2, move |x| {
        let mut acc = RationalQ::zero();
        for j in 0..=n {
            let mut args: Vec<Podles> = Vec::with_capacity(n + 1);
            args.extend_from_slice(&x[..j]);
            args.push(x[j].times(&x[j + 1]));
            args.extend_from_slice(&x[j + 2..]);
            let v = inner.eval(&args)?;
            acc = if j % 2 == 0 { &acc + &v } else { &acc - &v };
        }
        let mut args = vec![x[n + 1].sigma().times(&x[0])];
        args.extend_from_slice(&x[1..=n]);
        let v = inner.eval(&args)?;
        Ok(if (n + 1).is_multiple_of(2) { &acc + &v } else { &acc - &v })
    })
}

/// `(λ_σ φ)(x_0,…,x_n) = (-1)^n φ(σ(x_n), x_0, …, x_{n-1})`.
pub fn lambda_sigma(phi: &Cochain) -> Cochain {
    let inner = phi.clone();
    let n = phi.arity - 1;
    Cochain::new(&format!("lambda_sigma({})", phi.name), n + 1, move |x| {
        let mut args = vec![x[n].sigma()];
        args.extend_from_slice(&x[..n]);
        let v = inner.eval(&args)?;
        Ok(if n.is_multiple_of(2) { v } else { -&v })
    })
}

/// Element of the tensor power of the Podleś sphere, in the basis `A^i B^j` (signed `j`).
#[derive(Clone, PartialEq, Debug)]
pub struct Chain {
    arity: usize,
    terms: BTreeMap<Vec<(u32, i32)>, RationalQ>,
}

impl Chain {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<(u32, i32)>, &RationalQ)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_key(&mut self, key: Vec<(u32, i32)>, c: RationalQ) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(RationalQ::zero);
        *e = &*e + &c;
        if e.is_zero() {
            let k: Vec<_> = self.terms.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).unwrap();
            self.terms.remove(&k);
        }
    }

    /// Adds `c · x_0 ⊗ … ⊗ x_n`, expanding each factor in the basis.
    pub fn add_tensor(&mut self, c: &RationalQ, factors: &[Podles]) -> Result<(), AlgebraError> {
        if factors.len() != self.arity {
            return Err(AlgebraError::ArityError { expected: self.arity, got: factors.len() });
        }
        let mut partial: Vec<(Vec<(u32, i32)>, RationalQ)> = vec![(Vec::new(), c.clone())];
        for f in factors {
            let mut next = Vec::new();
            for (k, v) in &partial {
                for (m, mc) in f.terms() {
                    let mut k2 = k.clone();
                    k2.push(*m);
                    next.push((k2, v * mc));
                }
            }
            partial = next;
        }
        for (k, v) in partial {
            self.add_key(k, v);
        }
        Ok(())
    }

    pub fn from_tensors(arity: usize, items: &[(RationalQ, Vec<Podles>)]) -> Result<Self, AlgebraError> {
        let mut ch = Self::zero(arity);
        for (c, f) in items {
            ch.add_tensor(c, f)?;
        }
        Ok(ch)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &o.terms {
            out.add_key(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &o.terms {
            out.add_key(k.clone(), -v);
        }
        out
    }

    fn factors(key: &[(u32, i32)]) -> Vec<Podles> {
        key.iter().map(|(i, j)| Podles::basis(*i, *j)).collect()
    }

    /// Diagonal left action `f ⊳ (x_0 ⊗ … ⊗ x_n) = Σ f_(1)⊳x_0 ⊗ … ⊗ f_(n+1)⊳x_n`.
    pub fn act(&self, f: &UqElement) -> Result<Self, AlgebraError> {
        let delta = f.coproduct(self.arity);
        let mut out = Self::zero(self.arity);
        for (key, c) in &self.terms {
            let xs = Self::factors(key);
            for (fk, fc) in delta.terms() {
                let mut parts = Vec::with_capacity(self.arity);
                for (m, x) in fk.iter().zip(&xs) {
                    let g = UqElement::monomial(*m, RationalQ::one());
                    parts.push(Podles::recognize(&act_left(&g, &x.embed())?)?);
                }
                out.add_tensor(&(c * fc), &parts)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let parts: Vec<String> = Self::factors(k).iter().map(|p| p.to_string()).collect();
            write!(f, "({c})*{}", parts.join("⊗"))?;
        }
        Ok(())
    }
}

pub fn b_sigma_chain(eta: &Chain) -> Chain {
    let n = eta.arity - 1;
    let mut out = Chain::zero(n);
    for (key, c) in &eta.terms {
        let x = Chain::factors(key);
        for j in 0..n {
            let mut f: Vec<Podles> = x[..j].to_vec();
            f.push(x[j].times(&x[j + 1]));
            f.extend_from_slice(&x[j + 2..]);
            let s = if j % 2 == 0 { c.clone() } else { -c };
            out.add_tensor(&s, &f).expect("arity");
        }
        let mut f = vec![x[n].sigma().times(&x[0])];
        f.extend_from_slice(&x[1..n]);
        let s = if n.is_multiple_of(2) { c.clone() } else { -c };
        out.add_tensor(&s, &f).expect("arity");
    }
    out
}

pub fn lambda_sigma_chain(eta: &Chain) -> Chain {
    let n = eta.arity - 1;
    let mut out = Chain::zero(n + 1);
    for (key, c) in &eta.terms {
        let x = Chain::factors(key);
        let mut f = vec![x[n].sigma()];
        f.extend_from_slice(&x[..n]);
        let s = if n.is_multiple_of(2) { c.clone() } else { -c };
        out.add_tensor(&s, &f).expect("arity");
    }
    out
}

pub fn pair_chain(phi: &Cochain, eta: &Chain) -> Result<RationalQ, AlgebraError> {
    if phi.arity != eta.arity {
        return Err(AlgebraError::ArityError { expected: phi.arity, got: eta.arity });
    }
    let mut acc = RationalQ::zero();
    for (key, c) in &eta.terms {
        acc = &acc + &(c * &phi.eval(&Chain::factors(key))?);
    }
    Ok(acc)
}

/// `τ(x_0, x_1, x_2) = h(x_0 (R_F(x_1) R_E(x_2) - q^2 R_E(x_1) R_F(x_2)))`, computed in the coordinate algebra.
pub fn tau_direct(x0: &Podles, x1: &Podles, x2: &Podles) -> RationalQ {
    let y = x0.embed().times(&w_coord(&x1.embed(), &x2.embed()));
    haar(&y).expect("unlocalized")
}

fn w_coord(e1: &Coord, e2: &Coord) -> Coord {
    let fe = r_f(e1).times(&r_e(e2));
    let ef = r_e(e1).times(&r_f(e2));
    &fe - &ef.scale(&RationalQ::q_pow(2))
}

type BasisPair = ((u32, i32), (u32, i32));

fn w_basis(k1: (u32, i32), k2: (u32, i32)) -> Podles {
    static CACHE: OnceLock<Mutex<HashMap<BasisPair, Podles>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(w) = cache.lock().expect("cache").get(&(k1, k2)) {
        return w.clone();
    }
    let e1 = Podles::basis(k1.0, k1.1).embed();
    let e2 = Podles::basis(k2.0, k2.1).embed();
    let w = Podles::recognize(&w_coord(&e1, &e2)).expect("R_F x R_E y is right K-invariant");
    cache.lock().expect("cache").insert((k1, k2), w.clone());
    w
}

/// `τ(x_0, x_1, x_2)`; the bilinear part in `x_1, x_2` is memoized on basis pairs and stays in the Podleś sphere.
pub fn tau(x0: &Podles, x1: &Podles, x2: &Podles) -> RationalQ {
    let mut w = Podles::zero();
    for (k1, c1) in x1.terms() {
        for (k2, c2) in x2.terms() {
            w = &w + &w_basis(*k1, *k2).scale(&(c1 * c2));
        }
    }
    crate::haar::haar_podles(&x0.times(&w))
}

pub fn tau_cochain() -> Cochain {
    Cochain::new("tau", 3, |x| Ok(tau(&x[0], &x[1], &x[2])))
}

/// `τ_{ω,h}(x_0, x_1, x_2) = h(π(x_0 dx_1 ∧ dx_2))`.
pub fn tau_omega(x0: &Podles, x1: &Podles, x2: &Podles) -> Result<RationalQ, AlgebraError> {
    let c = wedge_coeff(&[(x0.clone(), x1.clone())], &[(Podles::one(), x2.clone())])?;
    Ok(crate::haar::haar_podles(&c))
}

/// The 2-chain `η` pairing to `-1` with `τ`.
pub fn eta() -> Chain {
    let (a, b, bs) = (Podles::gen_a(), Podles::gen_b(), Podles::gen_bs());
    let q2 = RationalQ::q_pow(2);
    let qm2 = RationalQ::q_pow(-2);
    let one = RationalQ::one();
    let items = vec![
        (one.clone(), vec![bs.clone(), a.clone(), b.clone()]),
        (q2.clone(), vec![b.clone(), bs.clone(), a.clone()]),
        (q2, vec![a.clone(), b.clone(), bs.clone()]),
        (-&qm2, vec![bs.clone(), b.clone(), a.clone()]),
        (-&qm2, vec![a.clone(), bs.clone(), b.clone()]),
        (-&one, vec![b, a.clone(), bs]),
        (&RationalQ::q_pow(6) - &qm2, vec![a.clone(), a.clone(), a]),
    ];
    Chain::from_tensors(3, &items).expect("arity 3")
}

/// The two-dimensional quantum tangent space is spanned by `E` and `F`.
pub const TANGENT_SPACE: [&str; 2] = ["E", "F"];
/// `T_0 = Lin{K^{-1}E, K^{-1}F}`.
pub const T0_BASIS: [&str; 2] = ["Kinv*E", "Kinv*F"];
/// `t_2 = q^2 F ⊗ K^{-1}E - E ⊗ K^{-1}F`.
pub const T2: &str = "q^2*F⊗Kinv*E - E⊗Kinv*F";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn differential_values() {
        assert!(differential(&Podles::one()).is_zero());
        let db = differential(&Podles::gen_b());
        assert_eq!(db.ecomp, Coord::a().pow(2).scale(&-RationalQ::one()));
        let da = differential(&Podles::gen_a());
        assert_eq!(da.fcomp, Coord::d().times(&Coord::c()));
    }

    #[test]
    fn leibniz() {
        let (a, b) = (Podles::gen_a(), Podles::gen_b());
        let lhs = differential(&a.times(&b));
        let rhs = rmul(&differential(&a), &b).add(&lmul(&a, &differential(&b)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn volume_is_one() {
        assert_eq!(volume_check().unwrap(), Podles::one());
    }

    #[test]
    fn eta_values() {
        assert_eq!(pair_chain(&tau_cochain(), &eta()).unwrap(), RationalQ::from_int(-1));
        assert_eq!(lambda_sigma_chain(&eta()), eta());
        let a = Podles::gen_a();
        let expected = Chain::from_tensors(
            2,
            &[(&RationalQ::q_pow(4) - &RationalQ::q_pow(-2), vec![a.clone(), a])],
        )
        .unwrap();
        assert_eq!(b_sigma_chain(&eta()), expected);
    }

    #[test]
    fn commutators() {
        for x in [Podles::gen_a(), Podles::gen_b(), Podles::gen_bs()] {
            assert_eq!(localized_commutator_check(&x), (true, true), "{x}");
        }
    }
}
