//! Lemmatization-pattern toolkit.
//!
//! `lemmik` induces, applies and analyzes word-form → lemma transformation
//! rules from treebank data. A rule separates casing from morphology: a
//! casing script restores capitalization while prefix/suffix edit scripts
//! (copy/delete/insert operations) rewrite the lowercased form into the
//! lowercased lemma. The crate also ships CoNLL-U parsing and writing,
//! corpus normalization regimes (lowercasing, special-symbol stripping),
//! desk-scale lemmatizer backends (lexicon, suffix-trie pattern, identity,
//! ensemble) and an evaluation harness with token/type accuracy, oracle
//! scoring and three-system error-overlap analysis.

pub mod backends;
pub mod conllu;
pub mod eval;
pub mod predictions;
pub mod preprocess;
pub mod rules;
pub mod text;

pub use backends::{
    ensemble_predict, load_model, oracle_hit, oracle_predict, predict, predict_corpus,
    predict_corpus_candidates, save_model, train_lexicon, train_pattern, BackendModel, Prediction,
};
pub use conllu::{
    extract_instances, parse_conllu, write_conllu, Corpus, Dedupe, Instance, Sentence, Token,
};
pub use eval::{
    cross_domain_report, evaluate, oracle_evaluate, overlap, EvalMode, EvalReport, OverlapReport,
    TypeKey,
};
pub use predictions::{
    one_best, parse_candidates, parse_predictions, write_candidates, write_predictions,
    CandidateRow, PredictionRow,
};
pub use preprocess::{normalize_corpus, strip_symbols, CaseTarget, PreprocessConfig};
pub use rules::{
    apply_rule, induce_rule, min_edit_script, parse_rule, ruleset_stats, CasingScript, EditOp,
    EditScript, LemmaRule, RuleStats,
};
