//! Corpus normalization regimes: lowercasing and special-symbol stripping.
//!
//! Estonian UD lemmas annotate derivation with `=` and compounding with `_`
//! (for example `kilo=meeter` or `suur_linn`). The "No Sym" regime removes
//! those markers; lowercasing folds the casing distinction out of the data.
//! Both are applied by [`normalize_corpus`] without touching token counts,
//! comments or attachments.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::conllu::Corpus;
use crate::text;

/// Symbols stripped by default: `=` (derivation) and `_` (compounding).
pub const DEFAULT_STRIP_SYMBOLS: [char; 2] = ['=', '_'];

/// What lowercasing applies to; symbols are only ever stripped from lemmas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTarget {
    LemmaOnly,
    #[default]
    FormAndLemma,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PreprocessConfig {
    pub lowercase: bool,
    /// Characters removed from lemmas; empty set disables stripping.
    pub strip_symbols: BTreeSet<char>,
    pub apply_to: CaseTarget,
}

impl PreprocessConfig {
    /// The identity regime: no lowercasing, no stripping.
    pub fn identity() -> Self {
        Self::default()
    }

    /// The "No Sym" regime: lowercase forms and lemmas, strip the default
    /// symbol set from lemmas.
    pub fn no_sym() -> Self {
        PreprocessConfig {
            lowercase: true,
            strip_symbols: DEFAULT_STRIP_SYMBOLS.into_iter().collect(),
            apply_to: CaseTarget::FormAndLemma,
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.lowercase && self.strip_symbols.is_empty()
    }

    /// Normalizes a lemma string for comparison purposes. Unlike corpus
    /// normalization this never fails: a lemma reduced to nothing compares
    /// as the empty string.
    pub fn normalize_lemma(&self, lemma: &str) -> String {
        let lowered = if self.lowercase {
            text::lower_str(lemma)
        } else {
            lemma.to_string()
        };
        if self.strip_symbols.is_empty() {
            lowered
        } else {
            lowered
                .chars()
                .filter(|c| !self.strip_symbols.contains(c))
                .collect()
        }
    }
}

/// A lemma that consisted entirely of stripped symbols.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("lemma `{lemma}` consists only of stripped symbols")]
pub struct DegenerateLemma {
    pub lemma: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreprocessError {
    #[error("sentence {sent_id}, token {token_id}")]
    Degenerate {
        sent_id: String,
        token_id: u32,
        source: DegenerateLemma,
    },
}

/// Removes every occurrence of the given symbols from a lemma, preserving
/// all other characters and their order.
pub fn strip_symbols(lemma: &str, symbols: &BTreeSet<char>) -> Result<String, DegenerateLemma> {
    let stripped: String = lemma.chars().filter(|c| !symbols.contains(c)).collect();
    if stripped.is_empty() && !lemma.is_empty() {
        return Err(DegenerateLemma {
            lemma: lemma.to_string(),
        });
    }
    Ok(stripped)
}

/// Returns a normalized copy of the corpus; the input is left untouched.
/// Lowercasing is Unicode simple (per code point, locale-independent).
pub fn normalize_corpus(
    corpus: &Corpus,
    cfg: &PreprocessConfig,
) -> Result<Corpus, PreprocessError> {
    let mut out = corpus.clone();
    for (index, sentence) in out.sentences.iter_mut().enumerate() {
        let sent_id = sentence.external_id(index);
        for token in &mut sentence.tokens {
            if cfg.lowercase && matches!(cfg.apply_to, CaseTarget::FormAndLemma) {
                token.form = text::lower_str(&token.form);
            }
            if let Some(lemma) = &mut token.lemma {
                if cfg.lowercase {
                    *lemma = text::lower_str(lemma);
                }
                if !cfg.strip_symbols.is_empty() {
                    *lemma = strip_symbols(lemma, &cfg.strip_symbols).map_err(|source| {
                        PreprocessError::Degenerate {
                            sent_id: sent_id.clone(),
                            token_id: token.id,
                            source,
                        }
                    })?;
                }
            }
        }
    }
    Ok(out)
}
