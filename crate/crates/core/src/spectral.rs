//! Truncated Dirac operator on `V = V+ ⊕ V-` and the trace formulas.
//!
//! The basis is `φ^±_{n,k} = v^{n-1/2}_{±1/2,k}` for `n = 1..N`, ordered by
//! level, then sign (`+` first), then `k`. Entries of multiplication
//! operators come from the exact ladder matrices and are rounded only after
//! normalization.

use std::collections::HashMap;

use nalgebra::{DMatrix, SymmetricEigen};
use num::complex::Complex64;
use num::BigRational;
use rayon::prelude::*;

use crate::coordalg::CoordElement;
use crate::corep::{ExactMatrix, Ladder, Rows, DEFAULT_CUTOFF_L2};
use crate::fodc::tau;
use crate::haar::haar_podles;
use crate::podles::Podles;
use crate::qscalar::{RationalQ, Surd, SurdCtx};
use crate::report::CheckReport;
use crate::uq::{r_action, UqElement};
use crate::AlgebraError;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// `[n]_q` at a numeric `q`.
pub fn qint_f64(n: f64, q0: f64) -> f64 {
    (q0.powf(-n) - q0.powf(n)) / (1.0 / q0 - q0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Label {
    pub n: u32,
    pub k2: i32,
    pub plus: bool,
}

impl Label {
    pub fn l2(&self) -> u32 {
        2 * self.n - 1
    }

    pub fn j2(&self) -> i32 {
        if self.plus {
            1
        } else {
            -1
        }
    }
}

/// Span of `φ^±_{n,k}` for `n ≤ N`, backed by an exact ladder at a rational `q0`.
#[derive(Clone, Debug)]
pub struct TruncatedSpace {
    ctx: SurdCtx,
    q0: f64,
    levels: u32,
    ladder: Ladder<Surd>,
    labels: Vec<Label>,
    pos: HashMap<Label, usize>,
}

/// Dimension `2N(N+1)` of the span of the first `N` levels.
pub fn dim_upto(levels: u32) -> usize {
    2 * levels as usize * (levels as usize + 1)
}

impl TruncatedSpace {
    pub fn new(q0: BigRational, levels: u32) -> Result<Self, AlgebraError> {
        if levels == 0 {
            return Err(AlgebraError::CutoffExceeded { requested: "0 levels".into(), cutoff: "at least 1".into() });
        }
        let ctx = SurdCtx::new(q0)?;
        let l2_max = 2 * levels - 1;
        if l2_max > DEFAULT_CUTOFF_L2 {
            return Err(AlgebraError::CutoffExceeded {
                requested: format!("{levels} levels"),
                cutoff: format!("{} levels", DEFAULT_CUTOFF_L2.div_ceil(2)),
            });
        }
        let ladder = Ladder::<Surd>::build(l2_max, Rows::Half, &ctx)?;
        let mut labels = Vec::with_capacity(dim_upto(levels));
        for n in 1..=levels {
            let top = 2 * n as i32 - 1;
            for plus in [true, false] {
                for k2 in (-top..=top).step_by(2) {
                    labels.push(Label { n, k2, plus });
                }
            }
        }
        let pos = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        Ok(Self { q0: ctx.q0_f64(), ctx, levels, ladder, labels, pos })
    }

    pub fn q0(&self) -> f64 {
        self.q0
    }

    pub fn ctx(&self) -> &SurdCtx {
        &self.ctx
    }

    pub fn levels(&self) -> u32 {
        self.levels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.pos.get(label).copied()
    }

    pub fn ladder(&self) -> &Ladder<Surd> {
        &self.ladder
    }

    fn require_levels(&self, needed: u32) -> Result<(), AlgebraError> {
        if needed > self.levels {
            return Err(AlgebraError::CutoffExceeded {
                requested: format!("{needed} levels"),
                cutoff: format!("{} levels built", self.levels),
            });
        }
        Ok(())
    }

    fn diagonal<F: Fn(&Label) -> Complex64>(&self, f: F) -> TruncOperator {
        TruncOperator::diagonal(self.labels.iter().map(f).collect())
    }

    /// `D φ^±_{n,k} = -[n] φ^∓_{n,k}`.
    pub fn dirac(&self) -> TruncOperator {
        let mut m = DMatrix::zeros(self.dim(), self.dim());
        for (i, l) in self.labels.iter().enumerate() {
            let partner = self.pos[&Label { plus: !l.plus, ..*l }];
            m[(partner, i)] = Complex64::new(-qint_f64(l.n as f64, self.q0), 0.0);
        }
        TruncOperator::new(m, vec![true; self.dim()])
    }

    /// `K^2 φ = q^{2k} φ`.
    pub fn k_squared(&self) -> TruncOperator {
        self.diagonal(|l| Complex64::new(self.q0.powi(l.k2), 0.0))
    }

    /// `|D|^{-z}`, defined on the eigenbasis.
    pub fn abs_dirac_power(&self, z: Complex64) -> TruncOperator {
        self.diagonal(|l| Complex64::new(qint_f64(l.n as f64, self.q0), 0.0).powc(-z))
    }

    /// `diag(1, -q^2)` on `V+ ⊕ V-`.
    pub fn gamma_q(&self) -> TruncOperator {
        self.diagonal(|l| Complex64::new(if l.plus { 1.0 } else { -self.q0 * self.q0 }, 0.0))
    }

    /// `γ φ^± = ±φ^±`.
    pub fn gamma(&self) -> TruncOperator {
        self.diagonal(|l| Complex64::new(if l.plus { 1.0 } else { -1.0 }, 0.0))
    }

    /// `R_{K^{-2}}`, acting by `q^{2j}` on the row `j`.
    pub fn r_k_inv2(&self) -> TruncOperator {
        self.diagonal(|l| Complex64::new(self.q0.powi(l.j2()), 0.0))
    }

    fn place(&self, m: &ExactMatrix<Surd>, target: &mut DMatrix<Complex64>, trusted: &mut [bool]) {
        let src_plus = m.col_j2 > 0;
        let tgt_plus = m.row_j2 > 0;
        let col_pos: Vec<usize> = m
            .cols
            .iter()
            .map(|&(l2, k2)| self.pos[&Label { n: l2.div_ceil(2), k2, plus: src_plus }])
            .collect();
        for (c, ok) in m.trusted.iter().enumerate() {
            trusted[col_pos[c]] = *ok;
        }
        let vals: Vec<_> = m
            .entries
            .par_iter()
            .map(|(&(r, c), v)| {
                let (rl, rk) = m.rows[r];
                let (cl, ck) = m.cols[c];
                let na = &self.ladder.get(rl, m.row_j2, rk).expect("row vector").norm2;
                let nb = &self.ladder.get(cl, m.col_j2, ck).expect("column vector").norm2;
                let sq = v.mul(v).mul(na).mul(&nb.inv().expect("nonzero norm"));
                let value = v.to_f64().signum() * sq.to_f64().sqrt();
                let row = self.pos[&Label { n: rl.div_ceil(2), k2: rk, plus: tgt_plus }];
                (row, col_pos[c], value)
            })
            .collect();
        for (r, c, v) in vals {
            target[(r, c)] = Complex64::new(v, 0.0);
        }
    }

    /// Left multiplication by `x ∈ O(S_q^2)`, normalized.
    pub fn mult(&self, x: &Podles) -> Result<TruncOperator, AlgebraError> {
        let ex = x.embed().convert::<Surd>(&self.ctx)?;
        let mut m = DMatrix::zeros(self.dim(), self.dim());
        let mut trusted = vec![true; self.dim()];
        for j2 in [1, -1] {
            let exact = self.ladder.mult_matrix(&ex, j2, j2)?;
            self.place(&exact, &mut m, &mut trusted);
        }
        Ok(TruncOperator::new(m, trusted))
    }

    /// Left multiplication by a coordinate element from one sign block into another.
    ///
    /// Columns of the other block are zero and trusted.
    pub fn coord_mult(&self, y: &CoordElement<Surd>, src_plus: bool, tgt_plus: bool) -> Result<TruncOperator, AlgebraError> {
        let sign = |p: bool| if p { 1 } else { -1 };
        let exact = self.ladder.mult_matrix(y, sign(src_plus), sign(tgt_plus))?;
        let mut m = DMatrix::zeros(self.dim(), self.dim());
        let mut trusted = vec![true; self.dim()];
        self.place(&exact, &mut m, &mut trusted);
        Ok(TruncOperator::new(m, trusted))
    }

    /// The operator `q^{-1/2} R_F(x)` on `V-` plus `q^{1/2} R_E(x)` on `V+`.
    pub fn dirac_commutator_blocks(&self, x: &Podles) -> Result<TruncOperator, AlgebraError> {
        let ex = x.embed().convert::<Surd>(&self.ctx)?;
        let rf = r_action(&UqElement::f(), &ex)?;
        let re = r_action(&UqElement::e(), &ex)?;
        let s = self.q0.sqrt();
        let upper = self.coord_mult(&rf, false, true)?.scale(Complex64::new(1.0 / s, 0.0));
        let lower = self.coord_mult(&re, true, false)?.scale(Complex64::new(s, 0.0));
        Ok(upper.add(&lower))
    }

    /// `J_0 v = i K ⊳ v* ⊲ K`, computed from the ladder vectors.
    pub fn j0(&self) -> Result<TruncOperator, AlgebraError> {
        let cols: Vec<_> = self
            .labels
            .par_iter()
            .map(|l| -> Result<(usize, Complex64), AlgebraError> {
                let w = self.ladder.get(l.l2(), l.j2(), l.k2).expect("ladder vector");
                // K ⊳ · ⊲ K multiplies the weights (-k, -j) of v* by q^{-k-j}
                let y = w.elem.star()?.scale(&self.ctx.t_pow(-(l.j2() + l.k2) as i64));
                let (coeffs, complete) = self.ladder.expand(&y, -l.j2())?;
                let partner = Label { n: l.n, k2: -l.k2, plus: !l.plus };
                match coeffs.as_slice() {
                    [((l2, k2), c)] if complete && *l2 == l.l2() && *k2 == -l.k2 => {
                        let nb = &self.ladder.get(*l2, -l.j2(), *k2).expect("partner vector").norm2;
                        let sq = c.mul(c).mul(nb).mul(&w.norm2.inv().expect("nonzero norm"));
                        let value = c.to_f64().signum() * sq.to_f64().sqrt();
                        Ok((self.pos[&partner], I * value))
                    }
                    _ => Err(AlgebraError::NotInSubalgebra(format!(
                        "v* is not a multiple of a single ladder vector at n={}, k={}/2",
                        l.n, l.k2
                    ))),
                }
            })
            .collect();
        let mut m = DMatrix::zeros(self.dim(), self.dim());
        for (i, r) in cols.into_iter().enumerate() {
            let (row, v) = r?;
            m[(row, i)] = v;
        }
        Ok(TruncOperator { matrix: m, antilinear: true, trusted: vec![true; self.dim()] })
    }

    /// `J = γ J_0`.
    pub fn j(&self) -> Result<TruncOperator, AlgebraError> {
        Ok(self.gamma().compose(&self.j0()?))
    }

    /// Largest entry over the trusted columns of the first `l` levels, and the trusted fraction there.
    pub fn max_abs(&self, op: &TruncOperator, l: u32) -> (f64, f64) {
        let cols = dim_upto(l.min(self.levels));
        let mut worst = 0.0f64;
        let mut good = 0usize;
        for c in 0..cols {
            if !op.trusted[c] {
                continue;
            }
            good += 1;
            for r in 0..self.dim() {
                worst = worst.max(op.matrix[(r, c)].norm());
            }
        }
        (worst, good as f64 / cols.max(1) as f64)
    }
}

/// Dense operator; antilinear operators act as `u ↦ M ū`.
#[derive(Clone, Debug)]
pub struct TruncOperator {
    pub matrix: DMatrix<Complex64>,
    pub antilinear: bool,
    /// Columns computed without truncation loss.
    pub trusted: Vec<bool>,
}

fn split(m: &DMatrix<Complex64>) -> (DMatrix<f64>, Option<DMatrix<f64>>) {
    let re = m.map(|z| z.re);
    let im = m.map(|z| z.im);
    let any_im = im.iter().any(|v| *v != 0.0);
    (re, any_im.then_some(im))
}

fn cmul(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let (ar, ai) = split(a);
    let (br, bi) = split(b);
    let mut re = &ar * &br;
    let mut im = DMatrix::zeros(re.nrows(), re.ncols());
    if let (Some(ai), Some(bi)) = (&ai, &bi) {
        re -= ai * bi;
    }
    if let Some(bi) = &bi {
        im += &ar * bi;
    }
    if let Some(ai) = &ai {
        im += ai * &br;
    }
    re.zip_map(&im, Complex64::new)
}

impl TruncOperator {
    pub fn new(matrix: DMatrix<Complex64>, trusted: Vec<bool>) -> Self {
        Self { matrix, antilinear: false, trusted }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(DMatrix::identity(dim, dim), vec![true; dim])
    }

    pub fn diagonal(values: Vec<Complex64>) -> Self {
        let n = values.len();
        Self::new(DMatrix::from_diagonal(&nalgebra::DVector::from_vec(values)), vec![true; n])
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// `self ∘ other`. A column stays trusted when it is trusted in `other`
    /// and every column of `self` it reaches is trusted.
    pub fn compose(&self, other: &Self) -> Self {
        let rhs = if self.antilinear { other.matrix.map(|z| z.conj()) } else { other.matrix.clone() };
        let matrix = cmul(&self.matrix, &rhs);
        let trusted = (0..other.dim())
            .map(|c| {
                other.trusted[c]
                    && (0..other.dim()).all(|r| other.matrix[(r, c)] == Complex64::new(0.0, 0.0) || self.trusted[r])
            })
            .collect();
        Self { matrix, antilinear: self.antilinear ^ other.antilinear, trusted }
    }

    fn combine(&self, other: &Self, sign: f64) -> Self {
        assert_eq!(self.antilinear, other.antilinear, "cannot add linear and antilinear operators");
        let matrix = &self.matrix + other.matrix.map(|z| z * sign);
        let trusted = self.trusted.iter().zip(&other.trusted).map(|(a, b)| *a && *b).collect();
        Self { matrix, antilinear: self.antilinear, trusted }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1.0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1.0)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { matrix: self.matrix.map(|z| z * c), antilinear: self.antilinear, trusted: self.trusted.clone() }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self.compose(other).add(&other.compose(self))
    }

    /// Inverse of a unitary or antiunitary operator.
    pub fn unitary_inverse(&self) -> Self {
        let matrix = if self.antilinear { self.matrix.transpose() } else { self.matrix.adjoint() };
        Self { matrix, antilinear: self.antilinear, trusted: self.trusted.clone() }
    }

    /// Hilbert adjoint of a linear operator; only columns reached from fully trusted rows stay trusted.
    pub fn adjoint(&self) -> Self {
        assert!(!self.antilinear, "adjoint of an antilinear operator");
        let all = self.trusted.iter().all(|t| *t);
        Self { matrix: self.matrix.adjoint(), antilinear: false, trusted: vec![all; self.dim()] }
    }

    pub fn real_part(&self) -> DMatrix<f64> {
        self.matrix.map(|z| z.re)
    }
}

/// Eigenvalues of `D` on the first `l` levels, ascending.
pub fn dirac_eigenvalues(space: &TruncatedSpace, l: u32) -> Vec<f64> {
    let d = dim_upto(l.min(space.levels()));
    let dm = space.dirac().real_part();
    let block = dm.view((0, 0), (d, d)).into_owned();
    let mut ev: Vec<f64> = SymmetricEigen::new(block).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

/// Expected spectrum `±[n]` with multiplicity `2n`, ascending.
pub fn expected_spectrum(q0: f64, l: u32) -> Vec<f64> {
    let mut ev = Vec::new();
    for n in 1..=l {
        let v = qint_f64(n as f64, q0);
        for _ in 0..2 * n {
            ev.push(v);
            ev.push(-v);
        }
    }
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

/// Distinct values with multiplicities.
pub fn group_spectrum(ev: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &v in ev {
        match out.last_mut() {
            Some((w, m)) if (v - *w).abs() <= tol * w.abs().max(1.0) => *m += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

pub fn spectrum_check(space: &TruncatedSpace, l: u32, tol: f64) -> CheckReport {
    let got = dirac_eigenvalues(space, l);
    let want = expected_spectrum(space.q0(), l);
    let dev = got.iter().zip(&want).map(|(a, b)| (a - b).abs() / b.abs()).fold(0.0, f64::max);
    let top = qint_f64(l as f64, space.q0());
    CheckReport::from_errors("dirac_spectrum", &format!("L={l}"), *got.last().unwrap_or(&0.0), top, dev * top, dev, tol)
        .with_truncation(l, space.q0(), 1.0)
        .with_detail(format!("{} eigenvalues", got.len()))
}

/// `Σ_{n ≤ L} [n]^{-z} [2n]` with a geometric tail estimate.
#[derive(Clone, Copy, Debug)]
pub struct ZetaSum {
    pub value: Complex64,
    pub tail_estimate: f64,
}

impl ZetaSum {
    pub fn converged(&self, tol: f64) -> bool {
        self.tail_estimate <= tol * self.value.norm()
    }
}

fn zeta_term(n: u32, z: Complex64, q0: f64) -> Complex64 {
    Complex64::new(qint_f64(n as f64, q0), 0.0).powc(-z) * qint_f64(2.0 * n as f64, q0)
}

pub fn zeta_series(z: Complex64, q0: f64, levels: u32) -> ZetaSum {
    let value = (1..=levels).map(|n| zeta_term(n, z, q0)).sum();
    let ratio = q0.powf(z.re - 2.0);
    let next = zeta_term(levels + 1, z, q0).norm();
    let tail_estimate = if ratio < 1.0 { next / (1.0 - ratio) } else { f64::INFINITY };
    ZetaSum { value, tail_estimate }
}

fn binom(a: Complex64, k: u32) -> Complex64 {
    (0..k).fold(Complex64::new(1.0, 0.0), |acc, i| acc * (a - i as f64) / (i as f64 + 1.0))
}

/// Meromorphic continuation of `ζ` from `[n]^{-z}[2n] = [n]^{1-z}(q^n + q^{-n})`
/// and the binomial series of `(1 - q^{2n})^{1-z}`.
pub fn zeta_merom(z: Complex64, q0: f64, k_max: u32) -> Complex64 {
    let lq = q0.ln();
    let qp = |w: Complex64| (w * lq).exp();
    let one = Complex64::new(1.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..k_max {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let a = qp(z + 2.0 * k as f64);
        let b = qp(z - 2.0 + 2.0 * k as f64);
        acc += binom(one - z, k) * sign * (a / (one - a) + b / (one - b));
    }
    Complex64::new(1.0 / q0 - q0, 0.0).powc(z - 1.0) * acc
}

/// `λ / log q`.
pub fn residue_value(q0: f64) -> f64 {
    (q0 - 1.0 / q0) / q0.ln()
}

/// Series against the continuation at `z`.
pub fn zeta_agreement(z: f64, q0: f64, levels: u32, k_max: u32, tol: f64) -> CheckReport {
    let s = zeta_series(Complex64::new(z, 0.0), q0, levels);
    let m = zeta_merom(Complex64::new(z, 0.0), q0, k_max);
    let mut r = CheckReport::numeric("zeta_series_vs_merom", &format!("z={z}, k_max={k_max}"), s.value.re, m.re, tol)
        .with_truncation(levels, q0, 1.0);
    r.detail = Some(format!("series tail estimate {:.2e}", s.tail_estimate));
    r
}

/// `(z-2) ζ(z)` at `z = 2 + eps` against `λ / log q`.
pub fn residue_check(q0: f64, eps: f64, tol: f64) -> CheckReport {
    let z = Complex64::new(2.0 + eps, 0.0);
    let v = zeta_merom(z, q0, 200) * eps;
    CheckReport::numeric("zeta_residue", &format!("z=2+{eps:e}"), v.re, residue_value(q0), tol).with_detail(format!(
        "(z-2)zeta(z) = {:.8}, lambda/log q = {:.8}",
        v.re,
        residue_value(q0)
    ))
}

fn weighted_levels(space: &TruncatedSpace, diag: &[f64], l: u32, z: Complex64, with_gamma_q: bool) -> Vec<Complex64> {
    let q0 = space.q0();
    let mut per = vec![Complex64::new(0.0, 0.0); l as usize];
    for (i, lab) in space.labels().iter().take(dim_upto(l)).enumerate() {
        let g = if with_gamma_q && !lab.plus { -q0 * q0 } else { 1.0 };
        let w = Complex64::new(qint_f64(lab.n as f64, q0), 0.0).powc(-z) * (g * q0.powi(lab.k2));
        per[lab.n as usize - 1] += w * diag[i];
    }
    per
}

fn levelwise_report(name: &str, inputs: &str, per: &[Complex64], z: Complex64, q0: f64, exact: f64, tol: f64) -> CheckReport {
    let mut worst_abs = 0.0f64;
    let mut worst_rel = 0.0f64;
    for (i, t) in per.iter().enumerate() {
        let n = i as u32 + 1;
        let v = *t / zeta_term(n, z, q0);
        let abs = (v - exact).norm();
        worst_abs = worst_abs.max(abs);
        worst_rel = worst_rel.max(if exact.abs() > 0.0 { abs / exact.abs() } else { abs });
    }
    let mean = per.iter().sum::<Complex64>() / zeta_series(z, q0, per.len() as u32).value;
    CheckReport::from_errors(name, inputs, mean.re, exact, worst_abs, worst_rel, tol)
}

/// `h(x) = ζ(z)^{-1} Tr_{K±} K^2 |D|^{-z} x`, checked on each sign block.
///
/// Each level contributes exactly `[n]^{-z}[2n] h(x)`, so the comparison against
/// the truncated `ζ_L` is exact up to rounding; the comparison against the
/// full `ζ` carries the truncation tail.
pub fn haar_trace_check(space: &TruncatedSpace, x: &Podles, z: Complex64, l: u32, tol: f64) -> Result<Vec<CheckReport>, AlgebraError> {
    space.require_levels(l + x.degree())?;
    let q0 = space.q0();
    let exact = space.ctx().eval(&haar_podles(x))?.to_f64();
    let m = space.mult(x)?;
    let trusted = (0..dim_upto(l)).filter(|i| m.trusted[*i]).count() as f64 / dim_upto(l) as f64;
    let diag: Vec<f64> = (0..space.dim()).map(|i| m.matrix[(i, i)].re).collect();
    let zl = zeta_series(z, q0, l);
    let zfull = zeta_merom(z, q0, 200);
    let mut out = Vec::new();
    for plus in [true, false] {
        let masked: Vec<f64> =
            space.labels().iter().zip(&diag).map(|(lab, d)| if lab.plus == plus { *d } else { 0.0 }).collect();
        let per = weighted_levels(space, &masked, l, z, false);
        let tr: Complex64 = per.iter().sum();
        let block = if plus { "K+" } else { "K-" };
        let inputs = format!("x={x}, z={z}, block={block}");
        out.push(
            levelwise_report("haar_trace_levelwise", &inputs, &per, z, q0, exact, tol)
                .with_truncation(l, q0, trusted),
        );
        let rhs = tr / zl.value;
        out.push(
            CheckReport::numeric("haar_trace", &inputs, rhs.re, exact, tol)
                .with_truncation(l, q0, trusted)
                .with_detail(format!("normalized by zeta_L; Tr = {:.12e}", tr.re)),
        );
        let rhs = tr / zfull;
        out.push(
            CheckReport::numeric("haar_trace_full_zeta", &inputs, rhs.re, exact, tol)
                .with_truncation(l, q0, trusted)
                .with_detail(format!("zeta tail beyond L = {:.2e}", zl.tail_estimate / zl.value.norm())),
        );
    }
    Ok(out)
}

/// Diagonal of `x0 [D, x1] [D, x2]` on the first `l` levels.
fn tau_diagonal(space: &TruncatedSpace, x: [&Podles; 3], l: u32) -> Result<(Vec<f64>, f64), AlgebraError> {
    let d = space.dirac().real_part();
    let ops: Vec<TruncOperator> = x.iter().map(|xi| space.mult(xi)).collect::<Result<_, _>>()?;
    let cols = dim_upto(l);
    let good = (0..cols).filter(|&a| ops.iter().all(|m| m.trusted[a])).count();
    let ms: Vec<DMatrix<f64>> = ops.iter().map(|m| m.real_part()).collect();
    let c1 = &d * &ms[1] - &ms[1] * &d;
    let c2 = &d * &ms[2] - &ms[2] * &d;
    let p = &c1 * c2.columns(0, cols);
    let mut diag = vec![0.0; space.dim()];
    for (a, v) in diag.iter_mut().enumerate().take(cols) {
        *v = ms[0].row(a).iter().zip(p.column(a).iter()).map(|(u, w)| u * w).sum();
    }
    Ok((diag, good as f64 / cols as f64))
}

/// `Tr γ_q K^2 |D|^{-z} x0 [D,x1] [D,x2] = ζ(z) τ(x0,x1,x2)`, plus the residue at `z = 2`.
pub fn tau_trace_check(
    space: &TruncatedSpace,
    x: [&Podles; 3],
    z: Complex64,
    l: u32,
    tol: f64,
) -> Result<Vec<CheckReport>, AlgebraError> {
    let budget: u32 = x.iter().map(|xi| xi.degree()).sum();
    space.require_levels(l + budget)?;
    let q0 = space.q0();
    let t = tau(x[0], x[1], x[2]);
    let exact = space.ctx().eval(&t)?.to_f64();
    let (diag, trusted) = tau_diagonal(space, x, l)?;
    let inputs = format!("x0={}, x1={}, x2={}, z={z}", x[0], x[1], x[2]);
    let per = weighted_levels(space, &diag, l, z, true);
    let tr: Complex64 = per.iter().sum();
    let zl = zeta_series(z, q0, l);
    let zfull = zeta_merom(z, q0, 200);
    let mut out = vec![levelwise_report("tau_trace_levelwise", &inputs, &per, z, q0, exact, tol).with_truncation(l, q0, trusted)];
    out.push(
        CheckReport::numeric("tau_trace", &inputs, (tr / zl.value).re, exact, tol)
            .with_truncation(l, q0, trusted)
            .with_detail(format!("normalized by zeta_L; Tr = {:.12e}; tau = {t}", tr.re)),
    );
    out.push(
        CheckReport::numeric("tau_trace_full_zeta", &inputs, (tr / zfull).re, exact, tol)
            .with_truncation(l, q0, trusted)
            .with_detail(format!("zeta tail beyond L = {:.2e}", zl.tail_estimate / zl.value.norm())),
    );
    // residue: (z-2) Tr(z) with the truncated trace continued by ζ
    let eps = 1e-4;
    let zr = Complex64::new(2.0 + eps, 0.0);
    let per_r = weighted_levels(space, &diag, l, zr, true);
    let ratio: Complex64 = per_r.iter().sum::<Complex64>() / zeta_series(zr, q0, l).value;
    let res = (zeta_merom(zr, q0, 200) * eps * ratio).re;
    let expected = residue_value(q0) * exact;
    out.push(
        CheckReport::numeric("tau_residue", &inputs, res, expected, 1e-3)
            .with_truncation(l, q0, trusted)
            .with_detail("res_{z=2} Tr = lambda (log q)^{-1} tau"),
    );
    Ok(out)
}

/// Residual of an operator identity on the first `l` levels.
pub fn operator_report(space: &TruncatedSpace, check: &str, inputs: &str, residual: &TruncOperator, l: u32, tol: f64) -> CheckReport {
    let (worst, frac) = space.max_abs(residual, l);
    let mut r = CheckReport::from_errors(check, inputs, worst, 0.0, worst, worst, tol).with_truncation(l, space.q0(), frac);
    r.pass = worst <= tol && frac == 1.0;
    r
}

/// `J^2 = -I`, `JD = DJ`, `γJ = -Jγ`, `γD = -Dγ`, antiunitarity, `γ = q^{-1} γ_q R_{K^{-2}}`
/// and the closed form of `J_0` on basis vectors.
pub fn reality_checks(space: &TruncatedSpace, l: u32, tol: f64) -> Result<Vec<CheckReport>, AlgebraError> {
    let d = space.dirac();
    let g = space.gamma();
    let j0 = space.j0()?;
    let j = g.compose(&j0);
    let id = TruncOperator::identity(space.dim());
    let mut out = Vec::new();
    out.push(operator_report(space, "J^2 = -I", "", &j.compose(&j).add(&id), l, tol));
    out.push(operator_report(space, "JD = DJ", "", &j.compose(&d).sub(&d.compose(&j)), l, tol));
    out.push(operator_report(space, "gamma J = -J gamma", "", &g.anticommutator(&j), l, tol));
    out.push(operator_report(space, "gamma D = -D gamma", "", &g.anticommutator(&d), l, tol));
    out.push(operator_report(space, "J0^2 = I", "", &j0.compose(&j0).sub(&id), l, tol));
    out.push(operator_report(space, "J0 D = -D J0", "", &j0.anticommutator(&d), l, tol));
    let unit = TruncOperator::new(cmul(&j.matrix.adjoint(), &j.matrix), vec![true; space.dim()]);
    out.push(operator_report(space, "J antiunitary", "", &unit.sub(&id), l, tol));
    let gq = space.gamma_q().compose(&space.r_k_inv2()).scale(Complex64::new(1.0 / space.q0(), 0.0));
    out.push(operator_report(space, "gamma = q^{-1} gamma_q R_{K^-2}", "", &gq.sub(&g), l, tol));
    // J0 φ^±_{n,k} = ±i^{2k} φ^∓_{n,-k}
    let mut formula = DMatrix::zeros(space.dim(), space.dim());
    for (i, lab) in space.labels().iter().enumerate() {
        let partner = space.index_of(&Label { n: lab.n, k2: -lab.k2, plus: !lab.plus }).expect("partner");
        let sign = if lab.plus { 1.0 } else { -1.0 };
        formula[(partner, i)] = I.powi(lab.k2) * sign;
    }
    let formula = TruncOperator { matrix: formula, antilinear: true, trusted: vec![true; space.dim()] };
    out.push(operator_report(space, "J0 closed form", "J0 phi = +-i^{2k} phi'", &j0.sub(&formula), l, tol));
    Ok(out)
}

/// `[x, J y* J^{-1}] = 0` and `[[D, x], J y* J^{-1}] = 0`.
pub fn commutant_checks(space: &TruncatedSpace, x: &Podles, y: &Podles, l: u32, tol: f64) -> Result<Vec<CheckReport>, AlgebraError> {
    space.require_levels(l + 2 * (x.degree() + y.degree()))?;
    let j = space.j()?;
    let d = space.dirac();
    let mx = space.mult(x)?;
    let ys = space.mult(&y.star())?;
    let opp = j.compose(&ys).compose(&j.unitary_inverse());
    let inputs = format!("x={x}, y={y}");
    Ok(vec![
        operator_report(space, "commutant", &inputs, &mx.commutator(&opp), l, tol),
        operator_report(space, "order_one", &inputs, &d.commutator(&mx).commutator(&opp), l, tol),
    ])
}

/// `[D, x]` against the `R_F`/`R_E` multiplication blocks.
pub fn dcom_check(space: &TruncatedSpace, x: &Podles, l: u32, tol: f64) -> Result<CheckReport, AlgebraError> {
    space.require_levels(l + x.degree())?;
    let d = space.dirac();
    let mx = space.mult(x)?;
    let lhs = d.commutator(&mx);
    let rhs = space.dirac_commutator_blocks(x)?;
    Ok(operator_report(space, "dcom", &format!("x={x}"), &lhs.sub(&rhs), l, tol))
}

/// `M(x)^* = M(x^*)` on the block where both sides are exact.
pub fn star_compatibility(space: &TruncatedSpace, x: &Podles, l: u32, tol: f64) -> Result<CheckReport, AlgebraError> {
    space.require_levels(l + x.degree())?;
    let m = space.mult(x)?;
    let ms = space.mult(&x.star())?;
    let k = dim_upto(l);
    let diff = m.matrix.view((0, 0), (k, k)).adjoint() - ms.matrix.view((0, 0), (k, k));
    let worst = diff.iter().map(|z| z.norm()).fold(0.0, f64::max);
    Ok(CheckReport::from_errors("mult_star", &format!("x={x}"), worst, 0.0, worst, worst, tol).with_truncation(
        l,
        space.q0(),
        1.0,
    ))
}

/// Operator norm of `[D, x]` restricted to the first `l` levels.
pub fn commutator_norm(space: &TruncatedSpace, x: &Podles, l: u32) -> Result<f64, AlgebraError> {
    space.require_levels(l + x.degree())?;
    let c = space.dirac().commutator(&space.mult(x)?).real_part();
    let k = dim_upto(l);
    let block = c.columns(0, k).into_owned();
    Ok(block.singular_values().max())
}

/// Exact `τ` as a float at the space's `q0`.
pub fn tau_value(space: &TruncatedSpace, x: [&Podles; 3]) -> Result<(RationalQ, f64), AlgebraError> {
    let t = tau(x[0], x[1], x[2]);
    let v = space.ctx().eval(&t)?.to_f64();
    Ok((t, v))
}
