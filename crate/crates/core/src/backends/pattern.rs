//! Suffix-trie pattern backend: a deterministic stand-in for classifier
//! lemmatizers that assigns one transformation rule per word form.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{BackendModel, Candidate, Prediction, TrainError};
use crate::conllu::Instance;
use crate::rules::{apply_rule, induce_rule, LemmaRule};
use crate::text;

/// Longest suffix stored; 7 covers Estonian case endings.
pub const DEFAULT_MAX_SUFFIX: usize = 7;

type RuleDist = BTreeMap<LemmaRule, u64>;

/// The trie is stored flat: each suffix of length 1..=max_suffix of a
/// lowercased training form maps to the token-weighted distribution of rules
/// induced for forms ending in it. The empty suffix is the global
/// distribution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternModel {
    pub allow_copy: bool,
    pub max_suffix: usize,
    pub suffixes: BTreeMap<String, RuleDist>,
    pub global: RuleDist,
}

pub fn train_pattern(
    instances: &[Instance],
    allow_copy: bool,
    max_suffix: usize,
) -> Result<BackendModel, TrainError> {
    assert!(max_suffix >= 1, "max_suffix must be at least 1");
    if instances.is_empty() {
        return Err(TrainError::NoInstances);
    }
    let mut suffixes: BTreeMap<String, RuleDist> = BTreeMap::new();
    let mut global = RuleDist::new();
    for instance in instances {
        let rule = induce_rule(&instance.form, &instance.lemma, allow_copy).map_err(|source| {
            TrainError::Induce {
                form: instance.form.clone(),
                lemma: instance.lemma.clone(),
                source,
            }
        })?;
        let chars: Vec<char> = text::lower_str(&instance.form).chars().collect();
        *global.entry(rule.clone()).or_insert(0) += instance.count;
        for k in 1..=max_suffix.min(chars.len()) {
            let suffix: String = chars[chars.len() - k..].iter().collect();
            *suffixes
                .entry(suffix)
                .or_default()
                .entry(rule.clone())
                .or_insert(0) += instance.count;
        }
    }
    Ok(BackendModel::Pattern(PatternModel {
        allow_copy,
        max_suffix,
        suffixes,
        global,
    }))
}

/// Walks from the longest matching suffix toward the global distribution and
/// answers from the first node where any rule applies; candidates are that
/// node's applicable rules' outputs. A form no rule fits is lowercased
/// unchanged.
pub(super) fn predict_pattern(model: &PatternModel, form: &str) -> Prediction {
    let lowered = text::lower_str(form);
    let chars: Vec<char> = lowered.chars().collect();
    for k in (1..=model.max_suffix.min(chars.len())).rev() {
        let suffix: String = chars[chars.len() - k..].iter().collect();
        if let Some(dist) = model.suffixes.get(&suffix) {
            if let Some(prediction) = apply_distribution(dist, form) {
                return prediction;
            }
        }
    }
    if let Some(prediction) = apply_distribution(&model.global, form) {
        return prediction;
    }
    Prediction {
        candidates: vec![Candidate {
            lemma: lowered.clone(),
            score: 1.0,
        }],
        lemma: lowered,
        backend_name: "pattern",
    }
}

/// Tries a node's rules by descending count (ties by rule string) and
/// collects the lemmas of all applicable ones, deduplicated per lemma.
fn apply_distribution(dist: &RuleDist, form: &str) -> Option<Prediction> {
    let mut ranked: Vec<(String, &LemmaRule, u64)> = dist
        .iter()
        .map(|(rule, count)| (rule.to_string(), rule, *count))
        .collect();
    ranked.sort_by(|a, b| b.2.cmp(&a.2).then_with(|| a.0.cmp(&b.0)));

    let mut candidates: Vec<Candidate> = Vec::new();
    for (_, rule, count) in ranked {
        let Ok(lemma) = apply_rule(rule, form) else {
            continue;
        };
        if candidates.iter().any(|c| c.lemma == lemma) {
            continue;
        }
        candidates.push(Candidate {
            lemma,
            score: count as f64,
        });
    }
    let first = candidates.first()?;
    Some(Prediction {
        lemma: first.lemma.clone(),
        candidates,
        backend_name: "pattern",
    })
}
