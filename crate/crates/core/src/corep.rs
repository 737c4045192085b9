//! Peter–Weyl ladder vectors `w^l_{jk}` and exact matrices of left multiplication.
//!
//! Labels are stored doubled: `l2 = 2l`, `j2 = 2j`, `k2 = 2k`. Vectors are kept
//! unnormalized together with their exact squared norm; `v = w / sqrt(norm2)`.
//!
//! Inside one weight class `(j, k)` every element is a fixed monomial times a
//! polynomial in `bc`, and `w^l_{jk}` has degree exactly `2l`. Expanding an
//! element in the ladder basis is therefore a triangular solve on degrees.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::coordalg::{CoordElement, Mono};
use crate::haar::inner;
use crate::qscalar::{Scalar, RationalQ};
use crate::uq::{act_left, alpha_sq, r_action, UqElement};
use crate::AlgebraError;

/// Largest `2l` accepted by [`Ladder::build`].
pub const DEFAULT_CUTOFF_L2: u32 = 80;

#[derive(Clone, Debug)]
pub struct LadderVector<S: Scalar = RationalQ> {
    pub l2: u32,
    pub j2: i32,
    pub k2: i32,
    pub elem: CoordElement<S>,
    pub norm2: S,
}

/// Which `j`-rows to keep.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rows {
    All,
    /// Only `j = ±1/2`, i.e. the rows spanning `V+` and `V-`.
    Half,
}

/// Right and left `K`-weights of a monomial, doubled.
pub fn weights(m: &Mono) -> (i32, i32) {
    let (a, b, c, d) = (m.a as i32, m.b, m.c, m.d as i32);
    (-a - b + c + d, -a + b - c + d)
}

#[derive(Clone, Debug)]
pub struct Ladder<S: Scalar = RationalQ> {
    ctx: S::Ctx,
    l2_max: u32,
    rows: Rows,
    // keyed by (j2, k2, l2)
    vectors: BTreeMap<(i32, i32, u32), LadderVector<S>>,
}

fn check_cutoff(l2_max: u32, cutoff: u32) -> Result<(), AlgebraError> {
    if l2_max > cutoff {
        return Err(AlgebraError::CutoffExceeded {
            requested: format!("{}/2", l2_max),
            cutoff: format!("{}/2", cutoff),
        });
    }
    Ok(())
}

fn build_level<S: Scalar>(l2: u32, rows: Rows, ctx: &S::Ctx) -> Result<Vec<LadderVector<S>>, AlgebraError> {
    let l2i = l2 as i32;
    let e = UqElement::e();
    let f = UqElement::f();
    let seed = CoordElement::<S>::gen_a(ctx).pow(l2);
    let mut norm = inner(&seed, &seed)?;
    let mut w = seed;
    let mut out = Vec::new();
    let mut j2 = -l2i;
    loop {
        if rows == Rows::All || j2.abs() == 1 {
            // run along k for this row
            let mut wk = w.clone();
            let mut nk = norm.clone();
            let mut k2 = -l2i;
            loop {
                out.push(LadderVector { l2, j2, k2, elem: wk.clone(), norm2: nk.clone() });
                if k2 == l2i {
                    break;
                }
                nk = nk.times(&S::from_rq(&alpha_sq(l2 as i64, k2 as i64), ctx)?);
                wk = act_left(&e, &wk)?;
                k2 += 2;
            }
        }
        if j2 == l2i || (rows == Rows::Half && j2 >= 1) {
            break;
        }
        norm = norm.times(&S::from_rq(&alpha_sq(l2 as i64, j2 as i64), ctx)?);
        w = -&r_action(&f, &w)?;
        j2 += 2;
    }
    Ok(out)
}

impl<S: Scalar> Ladder<S> {
    /// Builds all levels `l ≤ l2_max/2`; in [`Rows::Half`] mode only half-integer levels.
    pub fn build(l2_max: u32, rows: Rows, ctx: &S::Ctx) -> Result<Self, AlgebraError> {
        Self::build_with_cutoff(l2_max, rows, ctx, DEFAULT_CUTOFF_L2)
    }

    pub fn build_with_cutoff(l2_max: u32, rows: Rows, ctx: &S::Ctx, cutoff: u32) -> Result<Self, AlgebraError> {
        check_cutoff(l2_max, cutoff)?;
        let levels: Vec<u32> = (0..=l2_max).filter(|l2| rows == Rows::All || l2 % 2 == 1).collect();
        let built: Vec<_> = levels.par_iter().map(|&l2| build_level::<S>(l2, rows, ctx)).collect();
        let mut vectors = BTreeMap::new();
        for level in built {
            for v in level? {
                vectors.insert((v.j2, v.k2, v.l2), v);
            }
        }
        Ok(Self { ctx: ctx.clone(), l2_max, rows, vectors })
    }

    pub fn ctx(&self) -> &S::Ctx {
        &self.ctx
    }

    pub fn l2_max(&self) -> u32 {
        self.l2_max
    }

    pub fn rows(&self) -> Rows {
        self.rows
    }

    pub fn get(&self, l2: u32, j2: i32, k2: i32) -> Option<&LadderVector<S>> {
        self.vectors.get(&(j2, k2, l2))
    }

    pub fn vectors(&self) -> impl Iterator<Item = &LadderVector<S>> {
        self.vectors.values()
    }

    /// Index set `(l2, k2)` of the row `j2`, ordered by level then `k`.
    pub fn row_index(&self, j2: i32) -> Vec<(u32, i32)> {
        let mut idx: Vec<(u32, i32)> =
            self.vectors.keys().filter(|(j, _, _)| *j == j2).map(|(_, k, l)| (*l, *k)).collect();
        idx.sort();
        idx
    }

    /// Expands `y` in the ladder basis of row `j2`.
    ///
    /// Returns the coefficients and whether the expansion is complete; it is
    /// incomplete when `y` has components above the built levels.
    pub fn expand(&self, y: &CoordElement<S>, j2: i32) -> Result<(Vec<((u32, i32), S)>, bool), AlgebraError> {
        let mut classes: BTreeMap<i32, CoordElement<S>> = BTreeMap::new();
        for (m, c) in y.terms() {
            let (wr, wl) = weights(m);
            if wr != j2 {
                return Err(AlgebraError::NotInSubalgebra(format!("right weight {wr}/2 outside row {j2}/2")));
            }
            classes.entry(wl).or_insert_with(|| CoordElement::zero(&self.ctx)).add_term(*m, c.clone());
        }
        let mut out = Vec::new();
        let mut complete = true;
        for (k2, mut rem) in classes {
            while !rem.is_zero() {
                let (top, tc) = rem
                    .terms()
                    .max_by_key(|(m, _)| m.degree())
                    .map(|(m, c)| (*m, c.clone()))
                    .expect("nonzero remainder");
                let l2 = top.degree();
                if l2 > self.l2_max {
                    complete = false;
                    break;
                }
                let w = self.get(l2, j2, k2).ok_or_else(|| {
                    AlgebraError::NotInSubalgebra(format!("no ladder vector at l={l2}/2, j={j2}/2, k={k2}/2"))
                })?;
                let wc = w.elem.coeff(&top);
                let c = tc.times(&wc.recip().expect("ladder vector has exact degree"));
                rem = &rem - &w.elem.scale(&c);
                out.push(((l2, k2), c));
            }
        }
        out.sort_by_key(|a| a.0);
        Ok((out, complete))
    }

    /// Matrix of left multiplication by `x` from row `src_j2` into row `tgt_j2`,
    /// with respect to the unnormalized vectors: `x w_β = Σ_α M[α,β] w_α`.
    pub fn mult_matrix(&self, x: &CoordElement<S>, src_j2: i32, tgt_j2: i32) -> Result<ExactMatrix<S>, AlgebraError> {
        let rows = self.row_index(tgt_j2);
        let cols = self.row_index(src_j2);
        let row_pos: BTreeMap<(u32, i32), usize> = rows.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let results: Vec<_> = cols
            .par_iter()
            .map(|&(l2, k2)| {
                let w = self.get(l2, src_j2, k2).expect("column vector");
                self.expand(&x.times(&w.elem), tgt_j2)
            })
            .collect();
        let mut entries = BTreeMap::new();
        let mut trusted = Vec::with_capacity(cols.len());
        for (ci, res) in results.into_iter().enumerate() {
            let (coeffs, complete) = res?;
            trusted.push(complete);
            for (key, c) in coeffs {
                entries.insert((row_pos[&key], ci), c);
            }
        }
        Ok(ExactMatrix { row_j2: tgt_j2, col_j2: src_j2, rows, cols, entries, trusted })
    }
}

/// Sparse matrix indexed by ladder labels, entries exact.
#[derive(Clone, Debug)]
pub struct ExactMatrix<S: Scalar = RationalQ> {
    pub row_j2: i32,
    pub col_j2: i32,
    pub rows: Vec<(u32, i32)>,
    pub cols: Vec<(u32, i32)>,
    pub entries: BTreeMap<(usize, usize), S>,
    /// Columns whose image lies entirely inside the built levels.
    pub trusted: Vec<bool>,
}

fn label(l2: u32, j2: i32, k2: i32) -> String {
    let half = |n: i64| if n % 2 == 0 { format!("{}", n / 2) } else { format!("{}/2", n) };
    format!("({},{},{})", half(l2 as i64), half(j2 as i64), half(k2 as i64))
}

impl<S: Scalar> ExactMatrix<S> {
    pub fn get(&self, r: usize, c: usize) -> S {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(S::zero)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("row,col,entry\n");
        for ((r, c), v) in &self.entries {
            let (rl, rk) = self.rows[*r];
            let (cl, ck) = self.cols[*c];
            let _ = writeln!(s, "{},{},\"{}\"", label(rl, self.row_j2, rk), label(cl, self.col_j2, ck), v);
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<_> = self
            .entries
            .iter()
            .map(|((r, c), v)| {
                let (rl, rk) = self.rows[*r];
                let (cl, ck) = self.cols[*c];
                serde_json::json!({
                    "row": label(rl, self.row_j2, rk),
                    "col": label(cl, self.col_j2, ck),
                    "entry": v.to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "rows": self.rows.len(),
            "cols": self.cols.len(),
            "trusted_columns": self.trusted.iter().filter(|t| **t).count(),
            "entries": entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coordalg::Coord;
    use crate::qscalar::Exact;

    #[test]
    fn seed_and_weights() {
        let lad = Ladder::<RationalQ>::build(2, Rows::All, &Exact).unwrap();
        let w = lad.get(1, -1, -1).unwrap();
        assert_eq!(w.elem, Coord::a());
        assert_eq!(w.norm2, inner(&Coord::a(), &Coord::a()).unwrap());
        for v in lad.vectors() {
            for (m, _) in v.elem.terms() {
                assert_eq!(weights(m), (v.j2, v.k2));
                assert!(m.degree() <= v.l2);
            }
            assert_eq!(inner(&v.elem, &v.elem).unwrap(), v.norm2);
        }
    }

    #[test]
    fn cutoff() {
        let r = Ladder::<RationalQ>::build_with_cutoff(5, Rows::Half, &Exact, 3);
        assert!(matches!(r, Err(AlgebraError::CutoffExceeded { .. })));
    }
}
