//! Accuracy computation (token/type, oracle, cross-domain) and three-system
//! error-overlap analysis.
//!
//! Correctness is exact string equality of the predicted and gold lemma after
//! both pass through the same normalization; there is no partial credit.
//! Tokens without a gold lemma, and gold tokens no prediction row covers, are
//! excluded from the denominator and reported as skipped.

use std::collections::{BTreeMap, HashMap, HashSet};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::backends::{predict_corpus, BackendModel};
use crate::conllu::Corpus;
use crate::predictions::{CandidateRow, PredictionRow};
use crate::preprocess::PreprocessConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalMode {
    Token,
    Type,
}

/// What identifies a word type in type mode. Including the gold lemma counts
/// ambiguous types once per reading; the alternative key scores each
/// (form, upos, feats) combination once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TypeKey {
    WithLemma,
    WithoutLemma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct UposBreakdown {
    pub total: u64,
    pub correct: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub train_source: String,
    pub eval_source: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub mode: EvalMode,
    pub total: u64,
    pub correct: u64,
    /// `correct / total`; an empty evaluation counts as vacuously perfect.
    pub accuracy: f64,
    /// Items excluded from the denominator: tokens without a gold lemma,
    /// tokens (or, in type mode, whole types) without any prediction.
    pub skipped: u64,
    pub per_upos: BTreeMap<String, UposBreakdown>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

/// Token-level error overlap of three systems: each key names the exact set
/// of systems that got the token wrong.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OverlapReport {
    pub region_counts: BTreeMap<String, u64>,
    pub union_errors: u64,
    pub all_three: u64,
    /// `all_three / union_errors`; 0 when there are no errors at all.
    pub all_three_share: f64,
}

pub const OVERLAP_REGIONS: [&str; 7] = ["A", "B", "C", "AB", "AC", "BC", "ABC"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("prediction row addresses unknown token {token_id} of sentence `{sent_id}`")]
    UnknownToken { sent_id: String, token_id: u32 },
    #[error("duplicate prediction row for token {token_id} of sentence `{sent_id}`")]
    DuplicateRow { sent_id: String, token_id: u32 },
    #[error("correctness vectors differ in length: {a}, {b}, {c}")]
    LengthMismatch { a: usize, b: usize, c: usize },
}

/// Gold tokens in corpus order with their external addresses.
fn gold_sequence(gold: &Corpus) -> Vec<(String, &crate::conllu::Token)> {
    let mut sequence = Vec::with_capacity(gold.token_count());
    for (index, sentence) in gold.sentences.iter().enumerate() {
        let sent_id = sentence.external_id(index);
        for token in &sentence.tokens {
            sequence.push((sent_id.clone(), token));
        }
    }
    sequence
}

/// Indexes rows by address, rejecting duplicates and rows that point at no
/// gold token.
fn index_rows<'a, T>(
    rows: impl IntoIterator<Item = (&'a str, u32, T)>,
    gold: &[(String, &crate::conllu::Token)],
) -> Result<HashMap<(String, u32), T>, EvalError> {
    let known: HashSet<(&str, u32)> = gold
        .iter()
        .map(|(sent_id, token)| (sent_id.as_str(), token.id))
        .collect();
    let mut index = HashMap::new();
    for (sent_id, token_id, value) in rows {
        if !known.contains(&(sent_id, token_id)) {
            return Err(EvalError::UnknownToken {
                sent_id: sent_id.to_string(),
                token_id,
            });
        }
        if index
            .insert((sent_id.to_string(), token_id), value)
            .is_some()
        {
            return Err(EvalError::DuplicateRow {
                sent_id: sent_id.to_string(),
                token_id,
            });
        }
    }
    Ok(index)
}

fn finish(
    mode: EvalMode,
    total: u64,
    correct: u64,
    skipped: u64,
    per_upos: BTreeMap<String, UposBreakdown>,
) -> EvalReport {
    EvalReport {
        mode,
        total,
        correct,
        accuracy: if total == 0 {
            1.0
        } else {
            correct as f64 / total as f64
        },
        skipped,
        per_upos,
        provenance: None,
    }
}

/// Scores a prediction file against gold lemmas.
pub fn evaluate(
    rows: &[PredictionRow],
    gold: &Corpus,
    mode: EvalMode,
    type_key: TypeKey,
    normalize: &PreprocessConfig,
) -> Result<EvalReport, EvalError> {
    let sequence = gold_sequence(gold);
    let predictions = index_rows(
        rows.iter()
            .map(|r| (r.sent_id.as_str(), r.token_id, r.lemma.as_str())),
        &sequence,
    )?;

    match mode {
        EvalMode::Token => {
            let mut total = 0;
            let mut correct = 0;
            let mut skipped = 0;
            let mut per_upos: BTreeMap<String, UposBreakdown> = BTreeMap::new();
            for (sent_id, token) in &sequence {
                let Some(lemma) = &token.lemma else {
                    skipped += 1;
                    continue;
                };
                let Some(predicted) = predictions.get(&(sent_id.clone(), token.id)) else {
                    skipped += 1;
                    continue;
                };
                total += 1;
                let bucket = per_upos.entry(token.upos.clone()).or_default();
                bucket.total += 1;
                if normalize.normalize_lemma(predicted) == normalize.normalize_lemma(lemma) {
                    correct += 1;
                    bucket.correct += 1;
                }
            }
            Ok(finish(mode, total, correct, skipped, per_upos))
        }
        EvalMode::Type => {
            struct Slot {
                upos: String,
                scored: Option<bool>,
            }
            let mut skipped = 0;
            let mut slots: IndexMap<(String, String, String, Option<String>), Slot> =
                IndexMap::new();
            for (sent_id, token) in &sequence {
                let Some(lemma) = &token.lemma else {
                    skipped += 1;
                    continue;
                };
                let gold_norm = normalize.normalize_lemma(lemma);
                let key = (
                    token.form.clone(),
                    token.upos.clone(),
                    token.canonical_feats(),
                    match type_key {
                        TypeKey::WithLemma => Some(gold_norm.clone()),
                        TypeKey::WithoutLemma => None,
                    },
                );
                let slot = slots.entry(key).or_insert(Slot {
                    upos: token.upos.clone(),
                    scored: None,
                });
                // The type is scored by its first occurrence that has a
                // prediction.
                if slot.scored.is_none() {
                    if let Some(predicted) = predictions.get(&(sent_id.clone(), token.id)) {
                        slot.scored = Some(normalize.normalize_lemma(predicted) == gold_norm);
                    }
                }
            }
            let mut total = 0;
            let mut correct = 0;
            let mut per_upos: BTreeMap<String, UposBreakdown> = BTreeMap::new();
            for slot in slots.values() {
                match slot.scored {
                    Some(ok) => {
                        total += 1;
                        let bucket = per_upos.entry(slot.upos.clone()).or_default();
                        bucket.total += 1;
                        if ok {
                            correct += 1;
                            bucket.correct += 1;
                        }
                    }
                    None => skipped += 1,
                }
            }
            Ok(finish(mode, total, correct, skipped, per_upos))
        }
    }
}

/// Scores a candidate file: a token is correct iff the normalized gold lemma
/// appears anywhere in its candidate set.
pub fn oracle_evaluate(
    rows: &[CandidateRow],
    gold: &Corpus,
    normalize: &PreprocessConfig,
) -> Result<EvalReport, EvalError> {
    let sequence = gold_sequence(gold);
    let candidates = index_rows(
        rows.iter()
            .map(|r| (r.sent_id.as_str(), r.token_id, &r.candidates)),
        &sequence,
    )?;

    let mut total = 0;
    let mut correct = 0;
    let mut skipped = 0;
    let mut per_upos: BTreeMap<String, UposBreakdown> = BTreeMap::new();
    for (sent_id, token) in &sequence {
        let Some(lemma) = &token.lemma else {
            skipped += 1;
            continue;
        };
        let Some(list) = candidates.get(&(sent_id.clone(), token.id)) else {
            skipped += 1;
            continue;
        };
        total += 1;
        let bucket = per_upos.entry(token.upos.clone()).or_default();
        bucket.total += 1;
        let gold_norm = normalize.normalize_lemma(lemma);
        if list
            .iter()
            .any(|c| normalize.normalize_lemma(c) == gold_norm)
        {
            correct += 1;
            bucket.correct += 1;
        }
    }
    Ok(finish(EvalMode::Token, total, correct, skipped, per_upos))
}

/// Partitions the tokens at least one system got wrong into the seven
/// regions of a three-set Venn diagram. `true` means correct.
pub fn overlap(a: &[bool], b: &[bool], c: &[bool]) -> Result<OverlapReport, EvalError> {
    if a.len() != b.len() || a.len() != c.len() {
        return Err(EvalError::LengthMismatch {
            a: a.len(),
            b: b.len(),
            c: c.len(),
        });
    }
    let mut region_counts: BTreeMap<String, u64> =
        OVERLAP_REGIONS.iter().map(|r| (r.to_string(), 0)).collect();
    for i in 0..a.len() {
        let mut region = String::new();
        if !a[i] {
            region.push('A');
        }
        if !b[i] {
            region.push('B');
        }
        if !c[i] {
            region.push('C');
        }
        if region.is_empty() {
            continue;
        }
        *region_counts.get_mut(&region).expect("region key") += 1;
    }
    let union_errors: u64 = region_counts.values().sum();
    let all_three = region_counts["ABC"];
    Ok(OverlapReport {
        region_counts,
        union_errors,
        all_three,
        all_three_share: if union_errors == 0 {
            0.0
        } else {
            all_three as f64 / union_errors as f64
        },
    })
}

/// Runs a model over an evaluation corpus and scores it, recording where the
/// model's training data came from.
pub fn cross_domain_report(
    model: &BackendModel,
    train_corpus_name: &str,
    eval_corpus: &Corpus,
    mode: EvalMode,
    type_key: TypeKey,
    normalize: &PreprocessConfig,
) -> Result<EvalReport, EvalError> {
    let rows = predict_corpus(model, eval_corpus);
    let mut report = evaluate(&rows, eval_corpus, mode, type_key, normalize)?;
    report.provenance = Some(Provenance {
        train_source: train_corpus_name.to_string(),
        eval_source: eval_corpus.source_name.clone(),
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::{train_lexicon, LexiconKey};
    use crate::conllu::{parse_conllu, Instance};
    use crate::predictions::one_best;

    /// Ten tokens over three sentences; "koera/koer" appears three times.
    fn gold_corpus() -> Corpus {
        let mut text = String::new();
        let sentences = [
            vec![
                ("koera", "koer", "NOUN"),
                ("ja", "ja", "CCONJ"),
                ("maja", "maja", "NOUN"),
            ],
            vec![
                ("koera", "koer", "NOUN"),
                ("on", "olema", "AUX"),
                ("suur", "suur", "ADJ"),
            ],
            vec![
                ("koera", "koer", "NOUN"),
                ("ei", "ei", "AUX"),
                ("ole", "olema", "AUX"),
                ("siin", "siin", "ADV"),
            ],
        ];
        for (i, tokens) in sentences.iter().enumerate() {
            text.push_str(&format!("# sent_id = s{}\n", i + 1));
            for (j, (form, lemma, upos)) in tokens.iter().enumerate() {
                text.push_str(&format!(
                    "{}\t{form}\t{lemma}\t{upos}\t_\t_\t0\troot\t_\t_\n",
                    j + 1
                ));
            }
            text.push('\n');
        }
        parse_conllu(&text, "gold").unwrap()
    }

    fn rows_from_gold(corpus: &Corpus) -> Vec<PredictionRow> {
        let mut rows = Vec::new();
        for (i, sentence) in corpus.sentences.iter().enumerate() {
            for token in &sentence.tokens {
                rows.push(PredictionRow {
                    sent_id: sentence.external_id(i),
                    token_id: token.id,
                    form: token.form.clone(),
                    lemma: token.lemma.clone().unwrap(),
                });
            }
        }
        rows
    }

    fn identity_cfg() -> PreprocessConfig {
        PreprocessConfig::identity()
    }

    #[test]
    fn gold_predictions_score_one() {
        let gold = gold_corpus();
        let rows = rows_from_gold(&gold);
        let report = evaluate(
            &rows,
            &gold,
            EvalMode::Token,
            TypeKey::WithLemma,
            &identity_cfg(),
        )
        .unwrap();
        assert_eq!(report.total, 10);
        assert_eq!(report.correct, 10);
        assert_eq!(report.accuracy, 1.0);
        assert_eq!(report.skipped, 0);
    }

    #[test]
    fn three_errors_on_one_repeated_type() {
        let gold = gold_corpus();
        let mut rows = rows_from_gold(&gold);
        for row in &mut rows {
            if row.form == "koera" {
                row.lemma = "koerama".into();
            }
        }
        let token = evaluate(
            &rows,
            &gold,
            EvalMode::Token,
            TypeKey::WithLemma,
            &identity_cfg(),
        )
        .unwrap();
        assert_eq!((token.total, token.correct), (10, 7));
        assert!((token.accuracy - 0.7).abs() < 1e-12);

        let types = evaluate(
            &rows,
            &gold,
            EvalMode::Type,
            TypeKey::WithLemma,
            &identity_cfg(),
        )
        .unwrap();
        assert_eq!((types.total, types.correct), (8, 7));
        assert!((types.accuracy - 7.0 / 8.0).abs() < 1e-12);
    }

    #[test]
    fn per_upos_buckets_sum_to_total() {
        let gold = gold_corpus();
        let mut rows = rows_from_gold(&gold);
        rows[1].lemma = "x".into();
        rows[4].lemma = "y".into();
        let report = evaluate(
            &rows,
            &gold,
            EvalMode::Token,
            TypeKey::WithLemma,
            &identity_cfg(),
        )
        .unwrap();
        let total: u64 = report.per_upos.values().map(|b| b.total).sum();
        let correct: u64 = report.per_upos.values().map(|b| b.correct).sum();
        assert_eq!(total, report.total);
        assert_eq!(correct, report.correct);
        assert_eq!(report.per_upos["AUX"].total, 3);
    }

    #[test]
    fn missing_predictions_and_absent_lemmas_are_skipped() {
        let mut gold = gold_corpus();
        gold.sentences[0].tokens[1].lemma = None;
        let rows: Vec<PredictionRow> = rows_from_gold(&gold_corpus())
            .into_iter()
            .filter(|r| !(r.sent_id == "s3" && r.token_id == 4))
            .collect();
        let report = evaluate(
            &rows,
            &gold,
            EvalMode::Token,
            TypeKey::WithLemma,
            &identity_cfg(),
        )
        .unwrap();
        // 10 tokens minus one absent lemma minus one uncovered token. The row
        // for the absent-lemma token is ignored, not an error.
        assert_eq!(report.total, 8);
        assert_eq!(report.skipped, 2);
    }

    #[test]
    fn alignment_errors() {
        let gold = gold_corpus();
        let mut rows = rows_from_gold(&gold);
        rows[0].sent_id = "nope".into();
        assert_eq!(
            evaluate(
                &rows,
                &gold,
                EvalMode::Token,
                TypeKey::WithLemma,
                &identity_cfg()
            ),
            Err(EvalError::UnknownToken {
                sent_id: "nope".into(),
                token_id: 1
            })
        );

        let mut rows = rows_from_gold(&gold);
        rows[1] = rows[0].clone();
        assert_eq!(
            evaluate(
                &rows,
                &gold,
                EvalMode::Token,
                TypeKey::WithLemma,
                &identity_cfg()
            ),
            Err(EvalError::DuplicateRow {
                sent_id: "s1".into(),
                token_id: 1
            })
        );

        let mut rows = rows_from_gold(&gold);
        rows[2].token_id = 9;
        assert!(matches!(
            evaluate(
                &rows,
                &gold,
                EvalMode::Token,
                TypeKey::WithLemma,
                &identity_cfg()
            ),
            Err(EvalError::UnknownToken { token_id: 9, .. })
        ));
    }

    #[test]
    fn normalization_applies_to_both_sides() {
        let text = "# sent_id = s1\n1\tSuurlinnas\tSuur_linn\tNOUN\t_\t_\t0\troot\t_\t_\n\n";
        let gold = parse_conllu(text, "gold").unwrap();
        let rows = vec![PredictionRow {
            sent_id: "s1".into(),
            token_id: 1,
            form: "Suurlinnas".into(),
            lemma: "suurlinn".into(),
        }];
        let strict = evaluate(
            &rows,
            &gold,
            EvalMode::Token,
            TypeKey::WithLemma,
            &identity_cfg(),
        )
        .unwrap();
        assert_eq!(strict.correct, 0);
        let relaxed = evaluate(
            &rows,
            &gold,
            EvalMode::Token,
            TypeKey::WithLemma,
            &PreprocessConfig::no_sym(),
        )
        .unwrap();
        assert_eq!(relaxed.correct, 1);
    }

    #[test]
    fn type_key_with_and_without_lemma() {
        // "on" is ambiguous: gold lemma differs per occurrence.
        let text = "\
# sent_id = s1
1\ton\tolema\tAUX\t_\t_\t0\troot\t_\t_
2\ton\tono\tAUX\t_\t_\t1\tdep\t_\t_

";
        let gold = parse_conllu(text, "gold").unwrap();
        let rows = vec![
            PredictionRow {
                sent_id: "s1".into(),
                token_id: 1,
                form: "on".into(),
                lemma: "olema".into(),
            },
            PredictionRow {
                sent_id: "s1".into(),
                token_id: 2,
                form: "on".into(),
                lemma: "olema".into(),
            },
        ];
        let with = evaluate(
            &rows,
            &gold,
            EvalMode::Type,
            TypeKey::WithLemma,
            &identity_cfg(),
        )
        .unwrap();
        assert_eq!((with.total, with.correct), (2, 1));
        let without = evaluate(
            &rows,
            &gold,
            EvalMode::Type,
            TypeKey::WithoutLemma,
            &identity_cfg(),
        )
        .unwrap();
        assert_eq!((without.total, without.correct), (1, 1));
    }

    #[test]
    fn token_reports_ignore_sentence_order() {
        let gold = gold_corpus();
        let mut rows = rows_from_gold(&gold);
        rows[0].lemma = "wrong".into();
        let report = evaluate(
            &rows,
            &gold,
            EvalMode::Token,
            TypeKey::WithLemma,
            &identity_cfg(),
        )
        .unwrap();

        let mut permuted = gold.clone();
        permuted.sentences.reverse();
        let shuffled_rows: Vec<PredictionRow> = rows.iter().rev().cloned().collect();
        let permuted_report = evaluate(
            &shuffled_rows,
            &permuted,
            EvalMode::Token,
            TypeKey::WithLemma,
            &identity_cfg(),
        )
        .unwrap();
        assert_eq!(report, permuted_report);
    }

    #[test]
    fn oracle_beats_one_best_by_exactly_the_planted_margin() {
        let gold = gold_corpus();
        let mut cand_rows: Vec<CandidateRow> = rows_from_gold(&gold)
            .into_iter()
            .map(|r| CandidateRow {
                sent_id: r.sent_id,
                token_id: r.token_id,
                form: r.form,
                candidates: vec![r.lemma],
            })
            .collect();
        // Two tokens get a wrong 1-best with gold demoted to second place.
        for i in [1, 5] {
            let gold_lemma = cand_rows[i].candidates[0].clone();
            cand_rows[i].candidates = vec!["zzz".into(), gold_lemma];
        }
        let oracle = oracle_evaluate(&cand_rows, &gold, &identity_cfg()).unwrap();
        let best = evaluate(
            &one_best(&cand_rows),
            &gold,
            EvalMode::Token,
            TypeKey::WithLemma,
            &identity_cfg(),
        )
        .unwrap();
        assert_eq!(oracle.total, best.total);
        assert_eq!(oracle.accuracy, 1.0);
        assert!((oracle.accuracy - best.accuracy - 0.2).abs() < 1e-12);
    }

    #[test]
    fn oracle_counts_empty_candidate_lists_as_wrong() {
        let gold = gold_corpus();
        let mut cand_rows: Vec<CandidateRow> = rows_from_gold(&gold)
            .into_iter()
            .map(|r| CandidateRow {
                sent_id: r.sent_id,
                token_id: r.token_id,
                form: r.form,
                candidates: vec![r.lemma],
            })
            .collect();
        cand_rows[0].candidates.clear();
        let report = oracle_evaluate(&cand_rows, &gold, &identity_cfg()).unwrap();
        assert_eq!((report.total, report.correct), (10, 9));
    }

    #[test]
    fn singleton_candidates_make_oracle_equal_evaluate() {
        let gold = gold_corpus();
        let cand_rows: Vec<CandidateRow> = rows_from_gold(&gold)
            .into_iter()
            .enumerate()
            .map(|(i, r)| CandidateRow {
                sent_id: r.sent_id,
                token_id: r.token_id,
                form: r.form,
                candidates: vec![if i % 3 == 0 { "wrong".into() } else { r.lemma }],
            })
            .collect();
        let oracle = oracle_evaluate(&cand_rows, &gold, &identity_cfg()).unwrap();
        let best = evaluate(
            &one_best(&cand_rows),
            &gold,
            EvalMode::Token,
            TypeKey::WithLemma,
            &identity_cfg(),
        )
        .unwrap();
        assert_eq!(oracle.accuracy, best.accuracy);
        assert_eq!(oracle.correct, best.correct);
    }

    #[test]
    fn overlap_partitions_twelve_tokens_as_enumerated() {
        // Regions by hand: A:2 B:1 C:1 AB:2 AC:1 BC:1 ABC:2, plus 2 tokens
        // every system gets right.
        let a_err = [1, 2, 4, 5, 7, 10, 11];
        let b_err = [3, 4, 5, 8, 10, 11];
        let c_err = [6, 7, 8, 10, 11];
        let vec_of =
            |errs: &[usize]| -> Vec<bool> { (1..=12).map(|i| !errs.contains(&i)).collect() };
        let (a, b, c) = (vec_of(&a_err), vec_of(&b_err), vec_of(&c_err));
        let report = overlap(&a, &b, &c).unwrap();
        let get = |r: &str| report.region_counts[r];
        assert_eq!(
            [
                get("A"),
                get("B"),
                get("C"),
                get("AB"),
                get("AC"),
                get("BC"),
                get("ABC")
            ],
            [2, 1, 1, 2, 1, 1, 2]
        );
        assert_eq!(report.union_errors, 10);
        assert_eq!(report.all_three, 2);
        assert!((report.all_three_share - 0.2).abs() < 1e-12);

        // Relabeling systems permutes regions correspondingly.
        let relabeled = overlap(&b, &c, &a).unwrap();
        assert_eq!(relabeled.region_counts["A"], get("B"));
        assert_eq!(relabeled.region_counts["B"], get("C"));
        assert_eq!(relabeled.region_counts["C"], get("A"));
        assert_eq!(relabeled.region_counts["AB"], get("BC"));
        assert_eq!(relabeled.region_counts["AC"], get("AB"));
        assert_eq!(relabeled.region_counts["BC"], get("AC"));
        assert_eq!(relabeled.region_counts["ABC"], get("ABC"));
        assert_eq!(relabeled.union_errors, report.union_errors);
    }

    #[test]
    fn identical_error_vectors_share_everything() {
        let v = vec![true, false, true, false, false];
        let report = overlap(&v, &v, &v).unwrap();
        assert_eq!(report.region_counts["ABC"], 3);
        assert_eq!(report.union_errors, 3);
        assert_eq!(report.all_three_share, 1.0);
        for region in ["A", "B", "C", "AB", "AC", "BC"] {
            assert_eq!(report.region_counts[region], 0);
        }
    }

    #[test]
    fn overlap_rejects_mismatched_lengths() {
        assert_eq!(
            overlap(&[true], &[true, false], &[true]),
            Err(EvalError::LengthMismatch { a: 1, b: 2, c: 1 })
        );
    }

    #[test]
    fn no_errors_yields_zero_share() {
        let v = vec![true, true];
        let report = overlap(&v, &v, &v).unwrap();
        assert_eq!(report.union_errors, 0);
        assert_eq!(report.all_three_share, 0.0);
    }

    fn instance(form: &str, lemma: &str, count: u64) -> Instance {
        Instance {
            form: form.into(),
            lemma: lemma.into(),
            upos: "NOUN".into(),
            feats: String::new(),
            count,
            origin: Vec::new(),
        }
    }

    #[test]
    fn cross_domain_records_provenance_and_uses_the_backoff() {
        let model = train_lexicon(&[instance("koera", "koer", 1)], LexiconKey::Form).unwrap();
        // Disjoint vocabulary whose lemmas equal the lowercased forms: the
        // identity fallback is exactly right.
        let text = "\
# sent_id = t1
1\tJa\tja\tCCONJ\t_\t_\t0\troot\t_\t_
2\tsiin\tsiin\tADV\t_\t_\t1\tdep\t_\t_

";
        let eval_corpus = parse_conllu(text, "other-domain").unwrap();
        let report = cross_domain_report(
            &model,
            "fixture-a",
            &eval_corpus,
            EvalMode::Token,
            TypeKey::WithLemma,
            &identity_cfg(),
        )
        .unwrap();
        assert_eq!(report.accuracy, 1.0);
        assert_eq!(
            report.provenance,
            Some(Provenance {
                train_source: "fixture-a".into(),
                eval_source: "other-domain".into(),
            })
        );
    }

    #[test]
    fn empty_corpus_is_vacuously_perfect() {
        let gold = parse_conllu("", "empty").unwrap();
        let report = evaluate(
            &[],
            &gold,
            EvalMode::Token,
            TypeKey::WithLemma,
            &identity_cfg(),
        )
        .unwrap();
        assert_eq!(report.total, 0);
        assert_eq!(report.accuracy, 1.0);
    }
}
