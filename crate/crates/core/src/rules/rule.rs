//! Lemma rules: casing script plus a diff or absolute body.
//!
//! A diff rule splits the lowercased form into a prefix, an anchor that is
//! transferred verbatim, and a suffix; the prefix and suffix are rewritten by
//! edit scripts. An absolute rule replaces the form with a literal (used when
//! form and lemma share no character at all). In both cases the casing script
//! restores capitalization afterwards, so one rule covers every casing of the
//! same morphological transformation.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::casing::CasingScript;
use super::codec;
use super::edit::{min_edit_cost, min_edit_script_chars, EditScript};
use crate::text;

/// Body of a [`LemmaRule`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleBody {
    /// Rewrite the form around a verbatim anchor block.
    Diff {
        prefix: EditScript,
        suffix: EditScript,
    },
    /// Replace the form with a literal lemma.
    Absolute { literal: String },
}

/// A form → lemma transformation rule.
///
/// The textual codec is `<casing>;d<prefix>¦<suffix>` for diff rules and
/// `<casing>;a<literal>` for absolute rules; [`fmt::Display`] and [`FromStr`]
/// are mutually inverse on canonical strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LemmaRule {
    pub casing: CasingScript,
    pub body: RuleBody,
}

impl fmt::Display for LemmaRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.casing)?;
        match &self.body {
            RuleBody::Diff { prefix, suffix } => write!(f, "d{prefix}¦{suffix}"),
            RuleBody::Absolute { literal } => write!(f, "a{literal}"),
        }
    }
}

impl FromStr for LemmaRule {
    type Err = codec::CodecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        codec::parse_rule(s)
    }
}

impl Serialize for LemmaRule {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LemmaRule {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Error from [`induce_rule`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InduceError {
    #[error("cannot induce a rule from an empty form")]
    EmptyForm,
    #[error("cannot induce a rule from an empty lemma")]
    EmptyLemma,
}

/// Which of a diff rule's two scripts failed to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScriptSide {
    Prefix,
    Suffix,
}

impl fmt::Display for ScriptSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScriptSide::Prefix => "prefix",
            ScriptSide::Suffix => "suffix",
        })
    }
}

/// Error from [`apply_rule`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApplyError {
    #[error("cannot apply a rule to an empty form")]
    EmptyForm,
    #[error(
        "rule inapplicable: {side} script op {op_index} needs source character \
         {required}, but the form has only {available}"
    )]
    TooShort {
        side: ScriptSide,
        /// Index of the first operation that overruns the form.
        op_index: usize,
        /// Source characters required up to and including the failing op.
        required: usize,
        /// Characters the form provides.
        available: usize,
    },
}

/// Induces the rule that rewrites `form` into `lemma` exactly.
///
/// The casing script is read off the lemma; the body is computed on the
/// lowercased pair. Diff rules anchor on the common block minimizing
/// prefix-plus-suffix script ops (ties: longer block, then smaller form
/// offset, then smaller lemma offset); when no common character exists the
/// rule falls back to an absolute literal.
pub fn induce_rule(form: &str, lemma: &str, allow_copy: bool) -> Result<LemmaRule, InduceError> {
    if form.is_empty() {
        return Err(InduceError::EmptyForm);
    }
    if lemma.is_empty() {
        return Err(InduceError::EmptyLemma);
    }

    let casing = CasingScript::from_lemma(lemma);
    let form_lc: Vec<char> = form.chars().map(text::lower_char).collect();
    // Lowercase exactly the characters the casing script will re-upper;
    // everything else is carried verbatim so application restores the lemma
    // byte for byte.
    let lemma_lc: Vec<char> = lemma
        .chars()
        .map(|c| {
            if text::is_recased_upper(c) {
                text::lower_char(c)
            } else {
                c
            }
        })
        .collect();

    let body = match best_anchor(&form_lc, &lemma_lc, allow_copy) {
        Some(anchor) => RuleBody::Diff {
            prefix: min_edit_script_chars(
                &form_lc[..anchor.form_offset],
                &lemma_lc[..anchor.lemma_offset],
                allow_copy,
            ),
            suffix: min_edit_script_chars(
                &form_lc[anchor.form_offset + anchor.len..],
                &lemma_lc[anchor.lemma_offset + anchor.len..],
                allow_copy,
            ),
        },
        None => RuleBody::Absolute {
            literal: lemma_lc.into_iter().collect(),
        },
    };
    Ok(LemmaRule { casing, body })
}

struct Anchor {
    form_offset: usize,
    lemma_offset: usize,
    len: usize,
}

/// Scores every maximal common block and returns the cheapest anchor, or
/// `None` when the strings share no character.
fn best_anchor(form: &[char], lemma: &[char], allow_copy: bool) -> Option<Anchor> {
    let mut best: Option<(usize, Anchor)> = None;
    for f in 0..form.len() {
        for l in 0..lemma.len() {
            if form[f] != lemma[l] {
                continue;
            }
            // Only run starts: shifting into a run moves matched characters
            // into the scripts and always costs extra ops.
            if f > 0 && l > 0 && form[f - 1] == lemma[l - 1] {
                continue;
            }
            let mut len = 1;
            while f + len < form.len() && l + len < lemma.len() && form[f + len] == lemma[l + len] {
                len += 1;
            }
            let score = min_edit_cost(&form[..f], &lemma[..l], allow_copy)
                + min_edit_cost(&form[f + len..], &lemma[l + len..], allow_copy);
            let better = match &best {
                None => true,
                Some((best_score, a)) => {
                    (score, std::cmp::Reverse(len), f, l)
                        < (
                            *best_score,
                            std::cmp::Reverse(a.len),
                            a.form_offset,
                            a.lemma_offset,
                        )
                }
            };
            if better {
                best = Some((
                    score,
                    Anchor {
                        form_offset: f,
                        lemma_offset: l,
                        len,
                    },
                ));
            }
        }
    }
    best.map(|(_, anchor)| anchor)
}

/// Applies a rule to a form, producing the lemma.
pub fn apply_rule(rule: &LemmaRule, form: &str) -> Result<String, ApplyError> {
    if form.is_empty() {
        return Err(ApplyError::EmptyForm);
    }
    let produced = match &rule.body {
        RuleBody::Absolute { literal } => literal.clone(),
        RuleBody::Diff { prefix, suffix } => {
            let form_lc: Vec<char> = form.chars().map(text::lower_char).collect();
            let np = prefix.consumed();
            let ns = suffix.consumed();
            if np + ns > form_lc.len() {
                return Err(too_short(prefix, suffix, form_lc.len()));
            }
            let mut out = prefix.run(&form_lc[..np]);
            out.extend(&form_lc[np..form_lc.len() - ns]);
            out.push_str(&suffix.run(&form_lc[form_lc.len() - ns..]));
            out
        }
    };
    Ok(rule.casing.apply(&produced))
}

/// Locates the first consuming op that overruns the form.
fn too_short(prefix: &EditScript, suffix: &EditScript, available: usize) -> ApplyError {
    let mut used = 0;
    for (side, script) in [(ScriptSide::Prefix, prefix), (ScriptSide::Suffix, suffix)] {
        for (op_index, op) in script.ops().iter().enumerate() {
            if matches!(op, super::edit::EditOp::Copy | super::edit::EditOp::Delete) {
                used += 1;
                if used > available {
                    return ApplyError::TooShort {
                        side,
                        op_index,
                        required: used,
                        available,
                    };
                }
            }
        }
    }
    unreachable!("called only when prefix+suffix consumption exceeds the form")
}

/// Outcome of comparing two rules on one form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleComparison {
    /// Both rules apply and produce the same lemma.
    Equivalent(String),
    /// Both rules apply but the lemmas differ.
    Different { left: String, right: String },
    /// At least one rule does not apply to the form.
    Inapplicable {
        left: Option<ApplyError>,
        right: Option<ApplyError>,
    },
}

impl RuleComparison {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, RuleComparison::Equivalent(_))
    }
}

/// True outcome iff both rules apply successfully to `form` and produce
/// identical lemmas; application failures are reported, not raised.
pub fn rules_equivalent_on(a: &LemmaRule, b: &LemmaRule, form: &str) -> RuleComparison {
    match (apply_rule(a, form), apply_rule(b, form)) {
        (Ok(left), Ok(right)) => {
            if left == right {
                RuleComparison::Equivalent(left)
            } else {
                RuleComparison::Different { left, right }
            }
        }
        (left, right) => RuleComparison::Inapplicable {
            left: left.err(),
            right: right.err(),
        },
    }
}
