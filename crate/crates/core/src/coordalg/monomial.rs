use std::fmt;

use crate::qscalar::LaurentPoly;

/// Normal monomial `a^a b^b c^c d^d`; `a` and `d` never both positive.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub a: u32,
    pub b: i32,
    pub c: i32,
    pub d: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { a: 0, b: 0, c: 0, d: 0 };

    pub fn new(a: u32, b: i32, c: i32, d: u32) -> Self {
        assert!(a == 0 || d == 0, "a and d in one normal monomial");
        Self { a, b, c, d }
    }

    pub fn is_localized(&self) -> bool {
        self.b < 0 || self.c < 0
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b.unsigned_abs() + self.c.unsigned_abs() + self.d
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Mono::ONE {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (name, e) in [("a", self.a as i32), ("b", self.b), ("c", self.c), ("d", self.d as i32)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{}^{}", name, e)),
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Polynomial in `beta = bc` with Laurent coefficients; index is the power of `beta`.
type BetaPoly = Vec<LaurentPoly>;

/// `prod_{s} (1 + q^{e_s} beta)` for the listed integer exponents.
fn beta_product(exps: impl Iterator<Item = i64>) -> BetaPoly {
    let mut p: BetaPoly = vec![LaurentPoly::one()];
    for e in exps {
        let mut next = vec![LaurentPoly::zero(); p.len() + 1];
        for (n, c) in p.iter().enumerate() {
            next[n] = &next[n] + c;
            next[n + 1] = &next[n + 1] + &c.shift(2 * e);
        }
        p = next;
    }
    p
}

/// Normal form of `a^n b^x c^y d^m`, all letters in this order.
fn reduce_ad(n: u32, x: i32, y: i32, m: u32, coeff: &LaurentPoly, out: &mut Vec<(Mono, LaurentPoly)>) {
    if n == 0 || m == 0 {
        out.push((Mono::new(n, x, y, m), coeff.clone()));
        return;
    }
    let (n, m) = (n as i64, m as i64);
    let (xi, yi) = (x as i64, y as i64);
    // a^n Y = q^{n(x+y)} Y a^n
    let pre = coeff.shift(2 * n * (xi + yi));
    let k = n.min(m);
    // a^n d^m = prod_{s<k} (1 + q^{2(n-s)-1} beta) a^{n-k} d^{m-k}
    let poly = beta_product((0..k).map(|s| 2 * (n - s) - 1));
    let nr = n - k;
    for (p, c) in poly.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let p = p as i64;
        // Y beta^p a^{nr} = q^{-nr(x+y+2p)} a^{nr} Y beta^p
        let cc = (&pre * c).shift(-2 * nr * (xi + yi + 2 * p));
        out.push((
            Mono::new(nr as u32, (xi + p) as i32, (yi + p) as i32, (m - k) as u32),
            cc,
        ));
    }
}

/// Normal form of the product of two normal monomials, as `(monomial, coefficient)` pairs.
///
/// Coefficients only involve integer powers of `q`. Duplicate monomials may appear.
pub fn mono_mul(m1: &Mono, m2: &Mono) -> Vec<(Mono, LaurentPoly)> {
    let mut out = Vec::new();
    let (l, i2) = (m1.d as i64, m2.a as i64);
    let k = l.min(i2);
    // d^l a^{i2} = prod_{s<k} (1 + q^{-2(l-s)+1} beta) * (d^{l-k} or a^{i2-k})
    let poly = beta_product((0..k).map(|s| -2 * (l - s) + 1));
    let (x1, y1) = (m1.b as i64, m1.c as i64);
    let (x2, y2) = (m2.b as i64, m2.c as i64);
    for (p, c) in poly.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let p = p as i64;
        let x = x1 + x2 + p;
        let y = y1 + y2 + p;
        if l > k {
            // a^i Y1 beta^p d^r Y2 d^{l2}, with d^r Y2 = q^{-r(x2+y2)} Y2 d^r
            let r = l - k;
            let cc = c.shift(-2 * r * (x2 + y2));
            reduce_ad(m1.a, x as i32, y as i32, (r as u32) + m2.d, &cc, &mut out);
        } else {
            // a^i Y1 beta^p a^r Y2 d^{l2}, with Y1 beta^p a^r = q^{-r(x1+y1+2p)} a^r Y1 beta^p
            let r = i2 - k;
            let cc = c.shift(-2 * r * (x1 + y1 + 2 * p));
            reduce_ad(m1.a + r as u32, x as i32, y as i32, m2.d, &cc, &mut out);
        }
    }
    out
}
