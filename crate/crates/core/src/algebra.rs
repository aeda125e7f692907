//! Dense multivectors of Cl*(2,0,1) and the ring-level products.
//!
//! Coefficients are stored in the fixed order `(1, e0, e1, e2, E1, E2, E0, I)`
//! with `E0 = e1e2`, `E1 = e2e0`, `E2 = e0e1` and `I = e0e1e2`. The 1-vector
//! `c e0 + a e1 + b e2` is the line `ax + by + cz = 0` and the 2-vector
//! `x E1 + y E2 + z E0` is the point `(x, y, z)`, so both tuple conventions sit
//! in contiguous slots.
//!
//! Operator overloads follow the usual PGA shorthand: `*` geometric product,
//! `^` outer product (meet), `|` inner product, `&` join.

use std::fmt;
use std::ops::{Add, AddAssign, BitAnd, BitOr, BitXor, Index, Mul, Neg, Sub};

use crate::error::{PgaError, Result};

/// Basis blades in storage order.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Blade {
    Scalar = 0,
    e0 = 1,
    e1 = 2,
    e2 = 3,
    E1 = 4,
    E2 = 5,
    E0 = 6,
    I = 7,
}

impl Blade {
    pub const ALL: [Blade; 8] = [
        Blade::Scalar,
        Blade::e0,
        Blade::e1,
        Blade::e2,
        Blade::E1,
        Blade::E2,
        Blade::E0,
        Blade::I,
    ];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn grade(self) -> usize {
        GRADE[self as usize]
    }

    pub fn name(self) -> &'static str {
        BLADE_NAMES[self as usize]
    }

    pub fn from_index(i: usize) -> Option<Blade> {
        Blade::ALL.get(i).copied()
    }
}

pub(crate) const BLADE_NAMES: [&str; 8] = ["1", "e0", "e1", "e2", "E1", "E2", "E0", "I"];

pub(crate) const GRADE: [usize; 8] = [0, 1, 1, 1, 2, 2, 2, 3];

/// One entry of the multiplication table: `sign * blade[index]`, sign 0 for a
/// vanishing product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableEntry {
    pub sign: i8,
    pub index: u8,
}

const fn t(sign: i8, index: u8) -> TableEntry {
    TableEntry { sign, index }
}

const Z: TableEntry = t(0, 0);

/// Geometric product of basis blades, `CAYLEY[i][j] = blade_i * blade_j`,
/// both axes in storage order.
#[rustfmt::skip]
pub const CAYLEY: [[TableEntry; 8]; 8] = [
    //  1         e0         e1         e2         E1         E2         E0         I
    [t(1, 0),  t(1, 1),  t(1, 2),  t(1, 3),  t(1, 4),  t(1, 5),  t(1, 6),  t(1, 7)],   // 1
    [t(1, 1),  Z,        t(1, 5),  t(-1, 4), Z,        Z,        t(1, 7),  Z],         // e0
    [t(1, 2),  t(-1, 5), t(1, 0),  t(1, 6),  t(1, 7),  t(-1, 1), t(1, 3),  t(1, 4)],   // e1
    [t(1, 3),  t(1, 4),  t(-1, 6), t(1, 0),  t(1, 1),  t(1, 7),  t(-1, 2), t(1, 5)],   // e2
    [t(1, 4),  Z,        t(1, 7),  t(-1, 1), Z,        Z,        t(1, 5),  Z],         // E1
    [t(1, 5),  Z,        t(1, 1),  t(1, 7),  Z,        Z,        t(-1, 4), Z],         // E2
    [t(1, 6),  t(1, 7),  t(-1, 3), t(1, 2),  t(-1, 5), t(1, 4),  t(-1, 0), t(-1, 1)],  // E0
    [t(1, 7),  Z,        t(1, 4),  t(1, 5),  Z,        Z,        t(-1, 1), Z],         // I
];

/// Poincaré duality `J` on basis blades, fixed by `blade ∧ J(blade) = I`.
#[rustfmt::skip]
pub const DUAL: [TableEntry; 8] = [
    t(1, 7), // 1  -> I
    t(1, 6), // e0 -> E0
    t(1, 4), // e1 -> E1
    t(1, 5), // e2 -> E2
    t(1, 2), // E1 -> e1
    t(1, 3), // E2 -> e2
    t(1, 1), // E0 -> e0
    t(1, 0), // I  -> 1
];

/// An element of Cl*(2,0,1) with eight real coefficients.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Multivector {
    c: [f64; 8],
}

impl Multivector {
    pub const ZERO: Multivector = Multivector { c: [0.0; 8] };
    pub const ONE: Multivector = Multivector::from_blade(Blade::Scalar);

    /// Checked constructor; rejects NaN and infinities.
    pub fn new(coefficients: [f64; 8]) -> Result<Self> {
        if coefficients.iter().all(|x| x.is_finite()) {
            Ok(Multivector { c: coefficients })
        } else {
            Err(PgaError::NonFinite("multivector"))
        }
    }

    pub(crate) const fn raw(c: [f64; 8]) -> Self {
        Multivector { c }
    }

    pub const fn from_blade(blade: Blade) -> Self {
        let mut c = [0.0; 8];
        c[blade as usize] = 1.0;
        Multivector { c }
    }

    pub fn scalar(s: f64) -> Self {
        Self::ONE.scale(s)
    }

    pub fn coefficients(&self) -> [f64; 8] {
        self.c
    }

    pub fn get(&self, blade: Blade) -> f64 {
        self.c[blade as usize]
    }

    fn zip(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        let mut c = [0.0; 8];
        for (i, out) in c.iter_mut().enumerate() {
            *out = f(self.c[i], other.c[i]);
        }
        Multivector { c }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut c = self.c;
        c.iter_mut().for_each(|x| *x *= s);
        Multivector { c }
    }

    /// Sum of all blade products `u_i v_j` accepted by `keep(grade_i, grade_j, grade_out)`.
    fn product_filtered(&self, other: &Self, keep: impl Fn(usize, usize, usize) -> bool) -> Self {
        let mut c = [0.0; 8];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                let e = CAYLEY[i][j];
                if e.sign == 0 || b == 0.0 {
                    continue;
                }
                let k = e.index as usize;
                if keep(GRADE[i], GRADE[j], GRADE[k]) {
                    c[k] += f64::from(e.sign) * a * b;
                }
            }
        }
        Multivector { c }
    }

    pub fn gp(&self, other: &Self) -> Self {
        self.product_filtered(other, |_, _, _| true)
    }

    /// Outer product (meet): blade pairs contribute their grade `k + m` part.
    pub fn outer(&self, other: &Self) -> Self {
        self.product_filtered(other, |k, m, out| out == k + m)
    }

    /// Inner product: blade pairs contribute their grade `|k - m|` part.
    pub fn dot(&self, other: &Self) -> Self {
        self.product_filtered(other, |k, m, out| out == k.abs_diff(m))
    }

    /// `⟨PQ⟩₂`, the grade-2 part of the geometric product.
    pub fn commutator(&self, other: &Self) -> Self {
        self.gp(other).grade(2)
    }

    pub fn dual(&self) -> Self {
        let mut c = [0.0; 8];
        for (i, &a) in self.c.iter().enumerate() {
            let e = DUAL[i];
            c[e.index as usize] += f64::from(e.sign) * a;
        }
        Multivector { c }
    }

    /// Join `A ∨ B := J(J(A) ∧ J(B))`.
    pub fn join(&self, other: &Self) -> Self {
        self.dual().outer(&other.dual()).dual()
    }

    pub fn reverse(&self) -> Self {
        let mut c = self.c;
        for (i, x) in c.iter_mut().enumerate() {
            if GRADE[i] >= 2 {
                *x = -*x;
            }
        }
        Multivector { c }
    }

    /// Grade-`k` projection.
    ///
    /// # Panics
    /// If `k > 3`.
    pub fn grade(&self, k: usize) -> Self {
        assert!(k <= 3, "grade {k} out of range 0..=3");
        let mut c = [0.0; 8];
        for (i, out) in c.iter_mut().enumerate() {
            if GRADE[i] == k {
                *out = self.c[i];
            }
        }
        Multivector { c }
    }

    /// Polar `I x`.
    pub fn polar(&self) -> Self {
        Multivector::from_blade(Blade::I).gp(self)
    }

    /// Signed magnitude `S` of the grade-3 part.
    pub fn pseudoscalar_part(&self) -> f64 {
        self.c[7]
    }

    pub fn scalar_part(&self) -> f64 {
        self.c[0]
    }

    pub fn max_abs(&self) -> f64 {
        self.c.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// `‖self − other‖_∞`.
    pub fn distance_inf(&self, other: &Self) -> f64 {
        self.sub(other).max_abs()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|x| x.is_finite())
    }

    /// Whether all nonzero coefficients lie in grade `k`.
    pub fn is_homogeneous(&self, k: usize, tol: f64) -> bool {
        self.c.iter().enumerate().all(|(i, x)| GRADE[i] == k || x.abs() <= tol)
    }
}

impl From<Blade> for Multivector {
    fn from(b: Blade) -> Self {
        Multivector::from_blade(b)
    }
}

impl Index<Blade> for Multivector {
    type Output = f64;
    fn index(&self, b: Blade) -> &f64 {
        &self.c[b as usize]
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector(")?;
        let mut first = true;
        for (i, x) in self.c.iter().enumerate() {
            if *x != 0.0 {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "{x}{}", if i == 0 { "" } else { BLADE_NAMES[i] })?;
                first = false;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Self) -> Self {
        Multivector::add(&self, &rhs)
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Self) {
        *self = Multivector::add(self, &rhs);
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Self) -> Self {
        Multivector::sub(&self, &rhs)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Self) -> Self {
        self.gp(&rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs.scale(self)
    }
}

impl BitXor for Multivector {
    type Output = Multivector;
    fn bitxor(self, rhs: Self) -> Self {
        self.outer(&rhs)
    }
}

impl BitOr for Multivector {
    type Output = Multivector;
    fn bitor(self, rhs: Self) -> Self {
        self.dot(&rhs)
    }
}

impl BitAnd for Multivector {
    type Output = Multivector;
    fn bitand(self, rhs: Self) -> Self {
        self.join(&rhs)
    }
}
