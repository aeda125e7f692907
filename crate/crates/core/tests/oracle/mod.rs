//! Independent reference implementations for the test suites.
//!
//! Nothing here reads the kernel's tables: blades are bitmasks over
//! `{e0, e1, e2}` multiplied symbolically from the signature.

#![allow(dead_code)]

use std::fmt::Write;

/// A signed product of distinct generators; bit `i` stands for `e_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisBlade {
    pub mask: u8,
    pub sign: i8,
}

/// Squares of the generators: `e0² = 0`, `e1² = e2² = 1`.
const SIGNATURE: [i8; 3] = [0, 1, 1];

impl BasisBlade {
    pub const fn new(mask: u8, sign: i8) -> Self {
        BasisBlade { mask, sign }
    }

    pub fn grade(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Concatenate the generator words, sort with a sign flip per swap,
    /// then contract repeated generators through the signature.
    pub fn mul(&self, other: &BasisBlade) -> BasisBlade {
        let mut word: Vec<u8> = (0..3).filter(|i| self.mask & (1 << i) != 0).collect();
        word.extend((0..3).filter(|i| other.mask & (1 << i) != 0));
        let mut sign = self.sign * other.sign;
        // bubble sort
        for i in 0..word.len() {
            for j in 0..word.len() - 1 - i {
                if word[j] > word[j + 1] {
                    word.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        let mut mask = 0u8;
        let mut k = 0;
        while k < word.len() {
            if k + 1 < word.len() && word[k] == word[k + 1] {
                sign *= SIGNATURE[word[k] as usize];
                k += 2;
            } else {
                mask |= 1 << word[k];
                k += 1;
            }
        }
        if sign == 0 {
            mask = 0;
        }
        BasisBlade { mask, sign }
    }
}

/// The kernel's storage order `1, e0, e1, e2, E1, E2, E0, I` written as
/// generator products: `E1 = e2 e0 = −e0 e2`, `E2 = e0 e1`, `E0 = e1 e2`.
pub const STORAGE_BLADES: [BasisBlade; 8] = [
    BasisBlade::new(0b000, 1),
    BasisBlade::new(0b001, 1),
    BasisBlade::new(0b010, 1),
    BasisBlade::new(0b100, 1),
    BasisBlade::new(0b101, -1),
    BasisBlade::new(0b011, 1),
    BasisBlade::new(0b110, 1),
    BasisBlade::new(0b111, 1),
];

pub const NAMES: [&str; 8] = ["1", "e0", "e1", "e2", "E1", "E2", "E0", "I"];

/// `(sign, index)` with sign 0 for vanishing products.
pub type Entry = (i8, usize);

/// Expresses a signed blade in the storage basis.
pub fn to_storage(b: BasisBlade) -> Entry {
    if b.sign == 0 {
        return (0, 0);
    }
    let idx = STORAGE_BLADES
        .iter()
        .position(|s| s.mask == b.mask)
        .expect("every mask is a basis blade");
    (b.sign * STORAGE_BLADES[idx].sign, idx)
}

pub fn generate_cayley() -> [[Entry; 8]; 8] {
    let mut t = [[(0i8, 0usize); 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            t[i][j] = to_storage(STORAGE_BLADES[i].mul(&STORAGE_BLADES[j]));
        }
    }
    t
}

/// The reference multiplication table in its customary row/column order `1, e0, e1, e2, E0, E1, E2, I`.
pub const PRINTED_TABLE: [[&str; 8]; 8] = [
    ["1", "e0", "e1", "e2", "E0", "E1", "E2", "I"],
    ["e0", "0", "E2", "-E1", "I", "0", "0", "0"],
    ["e1", "-E2", "1", "E0", "e2", "I", "-e0", "E1"],
    ["e2", "E1", "-E0", "1", "-e1", "e0", "I", "E2"],
    ["E0", "I", "-e2", "e1", "-1", "-E2", "E1", "-e0"],
    ["E1", "0", "I", "-e0", "E2", "0", "0", "0"],
    ["E2", "0", "e0", "I", "-E1", "0", "0", "0"],
    ["I", "0", "E1", "E2", "-e0", "0", "0", "0"],
];

const PRINTED_ORDER: [&str; 8] = ["1", "e0", "e1", "e2", "E0", "E1", "E2", "I"];

fn parse_entry(s: &str) -> Entry {
    if s == "0" {
        return (0, 0);
    }
    let (sign, name) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s),
    };
    (sign, NAMES.iter().position(|n| *n == name).expect("known blade name"))
}

/// The printed table permuted into storage order.
pub fn printed_cayley() -> [[Entry; 8]; 8] {
    let mut t = [[(0i8, 0usize); 8]; 8];
    for (pi, row) in PRINTED_TABLE.iter().enumerate() {
        let i = NAMES.iter().position(|n| *n == PRINTED_ORDER[pi]).unwrap();
        for (pj, cell) in row.iter().enumerate() {
            let j = NAMES.iter().position(|n| *n == PRINTED_ORDER[pj]).unwrap();
            t[i][j] = parse_entry(cell);
        }
    }
    t
}

/// Outer product of blades: the geometric product when the masks are
/// disjoint, else zero.
pub fn blade_wedge(a: &BasisBlade, b: &BasisBlade) -> BasisBlade {
    if a.mask & b.mask != 0 {
        BasisBlade::new(0, 0)
    } else {
        a.mul(b)
    }
}

/// For each storage blade `b`, the signed complementary blade `J(b)` with
/// `b ∧ J(b) = I`.
pub fn derive_j_signs() -> [Entry; 8] {
    let pseudo = STORAGE_BLADES[7];
    let mut out = [(0i8, 0usize); 8];
    for (i, b) in STORAGE_BLADES.iter().enumerate() {
        let complement = 0b111 ^ b.mask;
        let j = STORAGE_BLADES.iter().position(|s| s.mask == complement).unwrap();
        let w = blade_wedge(b, &STORAGE_BLADES[j]);
        // w = ±pseudo; choose the sign making the wedge exactly I
        let sign = w.sign * pseudo.sign;
        out[i] = (sign, j);
    }
    out
}

fn entry_name(e: Entry) -> String {
    match e.0 {
        0 => "0".into(),
        s if s < 0 => format!("-{}", NAMES[e.1]),
        _ => NAMES[e.1].into(),
    }
}

/// Text rendering of the derived tables, in the layout of `pga2d tables`.
pub fn render_tables() -> String {
    let t = generate_cayley();
    let mut out = String::new();
    let _ = write!(out, "{:>4}", "*");
    for n in NAMES {
        let _ = write!(out, "{n:>5}");
    }
    out.push('\n');
    for (i, row) in t.iter().enumerate() {
        let _ = write!(out, "{:>4}", NAMES[i]);
        for e in row {
            let _ = write!(out, "{:>5}", entry_name(*e));
        }
        out.push('\n');
    }
    out.push('\n');
    for (i, e) in derive_j_signs().iter().enumerate() {
        let _ = writeln!(out, "J({}) = {}", NAMES[i], entry_name(*e));
    }
    out
}

/// Dense product in storage order driven by the symbolic table.
pub fn product(a: &[f64; 8], b: &[f64; 8]) -> [f64; 8] {
    let t = generate_cayley();
    let mut out = [0.0; 8];
    for i in 0..8 {
        for j in 0..8 {
            let (s, k) = t[i][j];
            if s != 0 {
                out[k] += f64::from(s) * a[i] * b[j];
            }
        }
    }
    out
}

/// `Σ_{k<terms} B^k / k!`.
pub fn exp_series(b: &[f64; 8], terms: usize) -> [f64; 8] {
    assert!(terms >= 1);
    let mut sum = [0.0; 8];
    let mut term = [0.0; 8];
    term[0] = 1.0;
    for k in 0..terms {
        for i in 0..8 {
            sum[i] += term[i];
        }
        let next = product(&term, b);
        for i in 0..8 {
            term[i] = next[i] / (k + 1) as f64;
        }
    }
    sum
}

/// Euclidean distance of two coordinate pairs.
pub fn analytic_distance(p: (f64, f64), q: (f64, f64)) -> f64 {
    ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt()
}

/// Signed distance `(ax + by + c) / √(a² + b²)`.
pub fn analytic_point_line(p: (f64, f64), line: (f64, f64, f64)) -> f64 {
    (line.0 * p.0 + line.1 * p.1 + line.2) / (line.0 * line.0 + line.1 * line.1).sqrt()
}

/// Foot of the perpendicular from `p` onto `ax + by + c = 0`.
pub fn analytic_foot(p: (f64, f64), line: (f64, f64, f64)) -> (f64, f64) {
    let (a, b, c) = line;
    let k = (a * p.0 + b * p.1 + c) / (a * a + b * b);
    (p.0 - k * a, p.1 - k * b)
}

/// Angle between vectors, in `[0, π]`.
pub fn analytic_vector_angle(u: (f64, f64), v: (f64, f64)) -> f64 {
    let cos = (u.0 * v.0 + u.1 * v.1) / ((u.0 * u.0 + u.1 * u.1).sqrt() * (v.0 * v.0 + v.1 * v.1).sqrt());
    cos.clamp(-1.0, 1.0).acos()
}

/// Oriented angle from the normal of line 1 to the normal of line 2.
pub fn analytic_oriented_angle(l1: (f64, f64), l2: (f64, f64)) -> f64 {
    (l1.0 * l2.1 - l1.1 * l2.0).atan2(l1.0 * l2.0 + l1.1 * l2.1)
}

/// Intersection of two lines given as `(a, b, c)`.
pub fn analytic_intersection(l1: (f64, f64, f64), l2: (f64, f64, f64)) -> (f64, f64) {
    let det = l1.0 * l2.1 - l1.1 * l2.0;
    ((l1.1 * l2.2 - l1.2 * l2.1) / det, (l1.2 * l2.0 - l1.0 * l2.2) / det)
}

/// Line `(a, b, c)` through two points, normal pointing left of `p → q`.
pub fn analytic_join(p: (f64, f64), q: (f64, f64)) -> (f64, f64, f64) {
    (p.1 - q.1, q.0 - p.0, p.0 * q.1 - p.1 * q.0)
}
