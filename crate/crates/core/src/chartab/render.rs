use std::fmt::Write;

use super::table::CharacterTable;

/// Plain-text table: one header line per class, then one line per character.
pub fn render_table(table: &CharacterTable, name: &str) -> String {
    let mut out = String::new();
    let g = table.group();
    let _ = writeln!(out, "{name}: order {}, {} classes, exponent {}", g.order(), table.class_count(), table.exponent());
    for (i, c) in table.classes().classes().iter().enumerate() {
        let _ = writeln!(
            out,
            "  class {i:>3}: order {:>3}, size {:>6}, rep {}",
            c.element_order, c.size, c.representative
        );
    }
    let cells: Vec<Vec<String>> = table
        .characters()
        .iter()
        .map(|chi| chi.values().iter().map(|v| v.to_string()).collect())
        .collect();
    let widths: Vec<usize> = (0..table.class_count())
        .map(|k| cells.iter().map(|row| row[k].chars().count()).max().unwrap_or(1).max(k.to_string().len()))
        .collect();
    let _ = write!(out, "{:>6}", "");
    for (k, w) in widths.iter().enumerate() {
        let _ = write!(out, "  {:>w$}", k, w = w);
    }
    out.push('\n');
    for (i, row) in cells.iter().enumerate() {
        let _ = write!(out, "{:>6}", format!("X.{i}"));
        for (cell, w) in row.iter().zip(&widths) {
            let _ = write!(out, "  {:>w$}", cell, w = w);
        }
        out.push('\n');
    }
    // approximations for irrational entries
    let mut notes = Vec::new();
    for (i, chi) in table.characters().iter().enumerate() {
        for (k, v) in chi.values().iter().enumerate() {
            if !v.is_rational() {
                let (re, im) = v.approx();
                notes.push(format!("  X.{i}[{k}] ≈ {re:.6}{im:+.6}i"));
            }
        }
    }
    if !notes.is_empty() {
        out.push_str("approximate values (not authoritative):\n");
        for n in notes {
            out.push_str(&n);
            out.push('\n');
        }
    }
    out
}
