//! Locale-independent, length-preserving case mapping.
//!
//! All case handling in this crate goes through these helpers so that rule
//! induction, rule application and corpus normalization agree on every code
//! point. Mappings are applied per code point and never change string length:
//! a code point whose Unicode case mapping would expand to multiple code
//! points (e.g. `ß` → `SS`) is left unchanged.

/// Lowercases a single code point, or returns it unchanged when the mapping
/// is not one-to-one.
pub fn lower_char(c: char) -> char {
    let mut it = c.to_lowercase();
    match (it.next(), it.next()) {
        (Some(l), None) => l,
        _ => c,
    }
}

/// Uppercases a single code point, or returns it unchanged when the mapping
/// is not one-to-one.
pub fn upper_char(c: char) -> char {
    let mut it = c.to_uppercase();
    match (it.next(), it.next()) {
        (Some(u), None) => u,
        _ => c,
    }
}

/// Per-code-point lowercase of a string.
pub fn lower_str(s: &str) -> String {
    s.chars().map(lower_char).collect()
}

/// True when `c` carries recoverable uppercasing: it has a distinct
/// lowercase form and uppercasing that form restores `c` exactly. Code
/// points that fail the second condition (titlecase digraphs and similar)
/// are treated as caseless so that rules reproduce them verbatim.
pub fn is_recased_upper(c: char) -> bool {
    let l = lower_char(c);
    l != c && upper_char(l) == c
}
