//! Exact real quadratic surds `(a + b√d) / c`.

use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// `(a + b√d) / c` with `c > 0`, `d` squarefree, `gcd(a, b, c) = 1`.
///
/// Rational values are stored with `b = 0` and `d = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticSurd {
    a: i128,
    b: i128,
    d: u64,
    c: i128,
}

fn squarefree_split(d: u64) -> (u64, u64) {
    // d = outer² · inner
    let mut outer = 1;
    let mut inner = d;
    let mut p = 2;
    while p * p <= inner {
        while inner.is_multiple_of(p * p) {
            inner /= p * p;
            outer *= p;
        }
        p += 1;
    }
    (outer, inner)
}

impl QuadraticSurd {
    pub fn integer(v: i128) -> Self {
        QuadraticSurd { a: v, b: 0, d: 1, c: 1 }
    }

    pub fn rational(num: i128, den: i128) -> Self {
        Self::new(num, 0, 1, den)
    }

    /// Normalising constructor; panics on a zero denominator.
    pub fn new(a: i128, b: i128, d: u64, c: i128) -> Self {
        assert!(c != 0, "zero denominator");
        let (outer, inner) = if d == 0 { (0, 1) } else { squarefree_split(d) };
        let (mut a, mut b, mut d, mut c) = (a, b * outer as i128, inner, c);
        if d == 1 {
            a += b;
            b = 0;
        }
        if b == 0 {
            d = 1;
        }
        if c < 0 {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if g > 1 {
            a /= g;
            b /= g;
            c /= g;
        }
        QuadraticSurd { a, b, d, c }
    }

    /// `(p ± √disc) / 2`-style constructor: `(a + b·√disc) / c` for any `disc ≥ 0`.
    pub fn from_parts(a: i128, b: i128, disc: u64, c: i128) -> Self {
        Self::new(a, b, disc, c)
    }

    pub fn is_rational(&self) -> bool {
        self.b == 0
    }

    pub fn is_integer(&self) -> bool {
        self.b == 0 && self.c == 1
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<i128> {
        self.is_integer().then_some(self.a)
    }

    /// Numerator rational part, surd coefficient, radicand, denominator.
    pub fn parts(&self) -> (i128, i128, u64, i128) {
        (self.a, self.b, self.d, self.c)
    }

    fn compatible(&self, other: &Self) -> Option<u64> {
        match (self.b, other.b) {
            (0, _) => Some(other.d),
            (_, 0) => Some(self.d),
            _ if self.d == other.d => Some(self.d),
            _ => None,
        }
    }

    pub fn checked_add(&self, o: &Self) -> Option<Self> {
        let d = self.compatible(o)?;
        Some(Self::new(self.a * o.c + o.a * self.c, self.b * o.c + o.b * self.c, d, self.c * o.c))
    }

    pub fn checked_sub(&self, o: &Self) -> Option<Self> {
        self.checked_add(&o.neg())
    }

    pub fn checked_mul(&self, o: &Self) -> Option<Self> {
        let d = self.compatible(o)?;
        let a = self.a * o.a + self.b * o.b * d as i128;
        let b = self.a * o.b + self.b * o.a;
        Some(Self::new(a, b, d, self.c * o.c))
    }

    /// Multiplicative inverse via the conjugate; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        let norm = self.a * self.a - self.b * self.b * self.d as i128;
        if norm == 0 {
            return None;
        }
        Some(Self::new(self.c * self.a, -self.c * self.b, self.d, norm))
    }

    pub fn checked_div(&self, o: &Self) -> Option<Self> {
        self.checked_mul(&o.recip()?)
    }

    pub fn neg(&self) -> Self {
        QuadraticSurd { a: -self.a, b: -self.b, ..*self }
    }

    /// Sign of `a + b√d`.
    fn numerator_sign(&self) -> Ordering {
        let sa = self.a.cmp(&0);
        let sb = self.b.cmp(&0);
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // opposite signs: compare a² with b²d
        let lhs = self.a * self.a;
        let rhs = self.b * self.b * self.d as i128;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn signum(&self) -> Ordering {
        self.numerator_sign()
    }

    /// Exact floor.
    pub fn floor(&self) -> i128 {
        // f ≤ x  ⇔  (a - f c) + b√d ≥ 0
        let approx = self.to_f64().floor() as i128;
        let le = |f: i128| QuadraticSurd { a: self.a - f * self.c, ..*self }.numerator_sign() != Ordering::Less;
        let mut f = approx;
        while !le(f) {
            f -= 1;
        }
        while le(f + 1) {
            f += 1;
        }
        f
    }

    pub fn to_f64(&self) -> f64 {
        (self.a as f64 + self.b as f64 * (self.d as f64).sqrt()) / self.c as f64
    }

    /// Integer square root helper for perfect squares.
    pub fn exact_sqrt(v: u64) -> Option<u64> {
        let r = v.sqrt();
        (r * r == v).then_some(r)
    }
}

impl PartialOrd for QuadraticSurd {
    /// Only surds over the same radicand (or rationals) are comparable.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.checked_sub(other)?.signum())
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numerator = match (self.a, self.b) {
            (a, 0) => a.to_string(),
            (0, b) => format!("{}√{}", coefficient(b), self.d),
            (a, b) if b < 0 => format!("{a}-{}√{}", coefficient(-b), self.d),
            (a, b) => format!("{a}+{}√{}", coefficient(b), self.d),
        };
        match (self.c, self.b) {
            (1, _) => f.write_str(&numerator),
            (c, 0) => write!(f, "{numerator}/{c}"),
            (c, _) => write!(f, "({numerator})/{c}"),
        }
    }
}

fn coefficient(b: i128) -> String {
    match b {
        1 => String::new(),
        -1 => "-".into(),
        b => b.to_string(),
    }
}
