//! Text dumps of the multiplication table and the duality map.

use std::fmt::Write;

use crate::algebra::{TableEntry, BLADE_NAMES, CAYLEY, DUAL};

/// `"0"`, `"e1"`, `"-E2"`, ...
pub fn entry_name(e: TableEntry) -> String {
    match e.sign {
        0 => "0".to_string(),
        s if s < 0 => format!("-{}", BLADE_NAMES[e.index as usize]),
        _ => BLADE_NAMES[e.index as usize].to_string(),
    }
}

/// The geometric product table, rows times columns, in storage order.
pub fn cayley_table() -> String {
    let mut out = String::new();
    let _ = write!(out, "{:>4}", "*");
    for name in BLADE_NAMES {
        let _ = write!(out, "{name:>5}");
    }
    out.push('\n');
    for (i, row) in CAYLEY.iter().enumerate() {
        let _ = write!(out, "{:>4}", BLADE_NAMES[i]);
        for e in row {
            let _ = write!(out, "{:>5}", entry_name(*e));
        }
        out.push('\n');
    }
    out
}

/// `J(b)` for each basis blade.
pub fn dual_table() -> String {
    let mut out = String::new();
    for (i, e) in DUAL.iter().enumerate() {
        let _ = writeln!(out, "J({}) = {}", BLADE_NAMES[i], entry_name(*e));
    }
    out
}
