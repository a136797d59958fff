//! Desk-scale lemmatizer backends behind one prediction interface: a lexicon
//! with configurable backoff, a suffix-trie pattern classifier, the identity
//! baseline, and majority-vote ensembling. Every backend is total (it always
//! returns some lemma) and deterministic, including after a save/load cycle.

mod lexicon;
mod pattern;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::conllu::Corpus;
use crate::predictions::{CandidateRow, PredictionRow};
use crate::rules::InduceError;
use crate::text;

pub use lexicon::{train_lexicon, LexiconKey, LexiconModel, WeightedLemma};
pub use pattern::{train_pattern, PatternModel, DEFAULT_MAX_SUFFIX};

/// One lemma hypothesis with a backend-specific score.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub lemma: String,
    pub score: f64,
}

/// A backend's answer: the chosen lemma plus the ranked candidate list.
/// When candidates are present the first one is the chosen lemma and scores
/// never increase down the list.
#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    pub lemma: String,
    pub candidates: Vec<Candidate>,
    pub backend_name: &'static str,
}

/// A trained lemmatizer; see [`save_model`] for the on-disk form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BackendModel {
    Identity,
    Lexicon(LexiconModel),
    Pattern(PatternModel),
    Ensemble(EnsembleModel),
}

impl BackendModel {
    pub fn name(&self) -> &'static str {
        match self {
            BackendModel::Identity => "identity",
            BackendModel::Lexicon(_) => "lexicon",
            BackendModel::Pattern(_) => "pattern",
            BackendModel::Ensemble(_) => "ensemble",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleModel {
    pub members: Vec<BackendModel>,
    /// Member indices from highest to lowest priority.
    pub priority: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrainError {
    #[error("cannot train on an empty instance list")]
    NoInstances,
    #[error("instance `{form}` → `{lemma}`")]
    Induce {
        form: String,
        lemma: String,
        source: InduceError,
    },
}

pub(crate) fn identity_prediction(form: &str) -> Prediction {
    let lemma = text::lower_str(form);
    Prediction {
        candidates: vec![Candidate {
            lemma: lemma.clone(),
            score: 1.0,
        }],
        lemma,
        backend_name: "identity",
    }
}

/// Predicts a lemma for one token. The UPOS participates only when the model
/// was keyed on it; FEATS is accepted for interface uniformity.
pub fn predict(model: &BackendModel, form: &str, upos: &str, feats: &str) -> Prediction {
    match model {
        BackendModel::Identity => identity_prediction(form),
        BackendModel::Lexicon(m) => lexicon::predict_lexicon(m, form, upos, feats),
        BackendModel::Pattern(m) => pattern::predict_pattern(m, form),
        BackendModel::Ensemble(m) => ensemble_predict(&m.members, &m.priority, form, upos, feats),
    }
}

/// Like [`predict`], additionally reporting whether the gold lemma occurs in
/// the candidate list (the list is treated as an unordered set; the 1-best
/// output is never altered).
pub fn oracle_predict(
    model: &BackendModel,
    form: &str,
    upos: &str,
    feats: &str,
    gold: &str,
) -> (bool, Prediction) {
    let prediction = predict(model, form, upos, feats);
    let hit = oracle_hit(&prediction, gold);
    (hit, prediction)
}

/// Whether the gold lemma is among the candidates; with no candidates the
/// 1-best lemma stands in for the list.
pub fn oracle_hit(prediction: &Prediction, gold: &str) -> bool {
    if prediction.candidates.is_empty() {
        prediction.lemma == gold
    } else {
        prediction.candidates.iter().any(|c| c.lemma == gold)
    }
}

/// Combines member predictions: a strict-majority lemma wins, otherwise the
/// highest-priority member's lemma. The candidate list is the union of the
/// members' lists with per-member max-normalized scores summed, so scaling
/// any member's scores by a positive constant changes nothing.
///
/// `priority` must be a permutation of the model indices, highest first;
/// at least two models are required.
pub fn ensemble_predict(
    models: &[BackendModel],
    priority: &[usize],
    form: &str,
    upos: &str,
    feats: &str,
) -> Prediction {
    assert!(models.len() >= 2, "ensemble needs at least two members");
    let mut sorted = priority.to_vec();
    sorted.sort_unstable();
    assert!(
        sorted.into_iter().eq(0..models.len()),
        "priority must be a permutation of the model indices"
    );

    let predictions: Vec<Prediction> = models
        .iter()
        .map(|m| predict(m, form, upos, feats))
        .collect();

    let mut votes: BTreeMap<&str, usize> = BTreeMap::new();
    for p in &predictions {
        *votes.entry(p.lemma.as_str()).or_insert(0) += 1;
    }
    let chosen = votes
        .iter()
        .find(|(_, &v)| 2 * v > models.len())
        .map(|(lemma, _)| lemma.to_string())
        .unwrap_or_else(|| predictions[priority[0]].lemma.clone());

    let mut sums: BTreeMap<String, f64> = BTreeMap::new();
    for p in &predictions {
        if p.candidates.is_empty() {
            *sums.entry(p.lemma.clone()).or_insert(0.0) += 1.0;
            continue;
        }
        let max = p.candidates[0].score;
        for c in &p.candidates {
            let normalized = if max > 0.0 { c.score / max } else { 1.0 };
            *sums.entry(c.lemma.clone()).or_insert(0.0) += normalized;
        }
    }
    let mut candidates: Vec<Candidate> = sums
        .into_iter()
        .map(|(lemma, score)| Candidate { lemma, score })
        .collect();
    candidates.sort_by(|a, b| {
        b.score
            .total_cmp(&a.score)
            .then_with(|| a.lemma.cmp(&b.lemma))
    });
    let chosen_at = candidates
        .iter()
        .position(|c| c.lemma == chosen)
        .expect("the chosen lemma is some member's 1-best and therefore a candidate");
    let mut front = candidates.remove(chosen_at);
    if let Some(top) = candidates.first() {
        front.score = front.score.max(top.score);
    }
    candidates.insert(0, front);

    Prediction {
        lemma: chosen,
        candidates,
        backend_name: "ensemble",
    }
}

/// Predicts a lemma for every token of the corpus, gold lemma or not.
pub fn predict_corpus(model: &BackendModel, corpus: &Corpus) -> Vec<PredictionRow> {
    let mut rows = Vec::with_capacity(corpus.token_count());
    for (index, sentence) in corpus.sentences.iter().enumerate() {
        let sent_id = sentence.external_id(index);
        for token in &sentence.tokens {
            let prediction = predict(model, &token.form, &token.upos, &token.canonical_feats());
            rows.push(PredictionRow {
                sent_id: sent_id.clone(),
                token_id: token.id,
                form: token.form.clone(),
                lemma: prediction.lemma,
            });
        }
    }
    rows
}

/// Like [`predict_corpus`] but keeps each token's full candidate list.
pub fn predict_corpus_candidates(model: &BackendModel, corpus: &Corpus) -> Vec<CandidateRow> {
    let mut rows = Vec::with_capacity(corpus.token_count());
    for (index, sentence) in corpus.sentences.iter().enumerate() {
        let sent_id = sentence.external_id(index);
        for token in &sentence.tokens {
            let prediction = predict(model, &token.form, &token.upos, &token.canonical_feats());
            rows.push(CandidateRow {
                sent_id: sent_id.clone(),
                token_id: token.id,
                form: token.form.clone(),
                candidates: prediction.candidates.into_iter().map(|c| c.lemma).collect(),
            });
        }
    }
    rows
}

pub const MODEL_FORMAT: &str = "lemmik-model";
pub const MODEL_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct ModelFile {
    format: String,
    version: u32,
    model: BackendModel,
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("not a model file (format `{found}`, expected `{MODEL_FORMAT}`)")]
    Format { found: String },
    #[error("unsupported model version {found} (supported: {MODEL_VERSION})")]
    Version { found: u32 },
    #[error("malformed model file")]
    Json(#[from] serde_json::Error),
}

/// Serializes a model as self-describing, versioned JSON.
pub fn save_model(model: &BackendModel) -> String {
    let file = ModelFile {
        format: MODEL_FORMAT.to_string(),
        version: MODEL_VERSION,
        model: model.clone(),
    };
    let mut out = serde_json::to_string_pretty(&file).expect("models serialize infallibly");
    out.push('\n');
    out
}

pub fn load_model(text: &str) -> Result<BackendModel, ModelError> {
    let file: ModelFile = serde_json::from_str(text)?;
    if file.format != MODEL_FORMAT {
        return Err(ModelError::Format { found: file.format });
    }
    if file.version != MODEL_VERSION {
        return Err(ModelError::Version {
            found: file.version,
        });
    }
    Ok(file.model)
}

#[cfg(test)]
pub(crate) fn assert_prediction_invariants(p: &Prediction) {
    if let Some(first) = p.candidates.first() {
        assert_eq!(first.lemma, p.lemma, "1-best must lead the candidate list");
    }
    for pair in p.candidates.windows(2) {
        assert!(
            pair[0].score >= pair[1].score,
            "candidate scores must be non-increasing: {pair:?}"
        );
    }
}
