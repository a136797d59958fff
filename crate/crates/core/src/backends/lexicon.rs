//! Dictionary backend: memorizes training forms and their lemma frequencies.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{identity_prediction, predict, BackendModel, Candidate, Prediction, TrainError};
use crate::conllu::Instance;

/// What identifies a dictionary entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LexiconKey {
    Form,
    FormUpos,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedLemma {
    pub lemma: String,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LexiconModel {
    pub key: LexiconKey,
    /// Entry key → lemmas by descending count, ties lexicographic.
    pub table: BTreeMap<String, Vec<WeightedLemma>>,
    /// Consulted for unseen keys; `None` falls back to the identity rule.
    pub fallback: Option<Box<BackendModel>>,
}

/// Forms cannot contain tabs in CoNLL-U, so a tab join is unambiguous.
fn entry_key(key: LexiconKey, form: &str, upos: &str) -> String {
    match key {
        LexiconKey::Form => form.to_string(),
        LexiconKey::FormUpos => format!("{form}\t{upos}"),
    }
}

/// Builds a dictionary from instances; candidate lists keep every observed
/// lemma for oracle scoring.
pub fn train_lexicon(instances: &[Instance], key: LexiconKey) -> Result<BackendModel, TrainError> {
    if instances.is_empty() {
        return Err(TrainError::NoInstances);
    }
    let mut counts: BTreeMap<String, BTreeMap<String, u64>> = BTreeMap::new();
    for instance in instances {
        *counts
            .entry(entry_key(key, &instance.form, &instance.upos))
            .or_default()
            .entry(instance.lemma.clone())
            .or_insert(0) += instance.count;
    }
    let table = counts
        .into_iter()
        .map(|(entry, lemmas)| {
            let mut ranked: Vec<WeightedLemma> = lemmas
                .into_iter()
                .map(|(lemma, count)| WeightedLemma { lemma, count })
                .collect();
            ranked.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.lemma.cmp(&b.lemma)));
            (entry, ranked)
        })
        .collect();
    Ok(BackendModel::Lexicon(LexiconModel {
        key,
        table,
        fallback: None,
    }))
}

pub(super) fn predict_lexicon(
    model: &LexiconModel,
    form: &str,
    upos: &str,
    feats: &str,
) -> Prediction {
    match model.table.get(&entry_key(model.key, form, upos)) {
        Some(entries) => {
            let candidates: Vec<Candidate> = entries
                .iter()
                .map(|e| Candidate {
                    lemma: e.lemma.clone(),
                    score: e.count as f64,
                })
                .collect();
            Prediction {
                lemma: candidates[0].lemma.clone(),
                candidates,
                backend_name: "lexicon",
            }
        }
        None => match &model.fallback {
            Some(fallback) => predict(fallback, form, upos, feats),
            None => identity_prediction(form),
        },
    }
}
