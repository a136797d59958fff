//! Shared driver for the fixture pipeline: one run of every subcommand over
//! the committed pipeline corpus, with all paths relative to a scratch
//! directory so the emitted reports are byte-stable.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

pub const PIPELINE_INPUTS: [&str; 2] = ["train.conllu", "test.conllu"];

pub const PIPELINE_STEPS: &[&[&str]] = &[
    &[
        "preprocess",
        "--input",
        "train.conllu",
        "--output",
        "train_nosym.conllu",
        "--lowercase",
        "--strip-symbols",
        "=_",
        "--report",
        "preprocess_report.json",
    ],
    &[
        "stats",
        "--input",
        "train.conllu",
        "--top",
        "5",
        "--tsv",
        "stats.tsv",
        "--report",
        "stats_report.json",
    ],
    &[
        "train",
        "--input",
        "train.conllu",
        "--output",
        "pattern.json",
        "--report",
        "train_pattern_report.json",
    ],
    &[
        "train",
        "--input",
        "train.conllu",
        "--output",
        "lexicon.json",
        "--backend",
        "lexicon",
        "--key",
        "form-upos",
        "--backoff",
        "pattern",
        "--report",
        "train_lexicon_report.json",
    ],
    &[
        "train",
        "--input",
        "train.conllu",
        "--output",
        "identity.json",
        "--backend",
        "identity",
        "--report",
        "train_identity_report.json",
    ],
    &[
        "lemmatize",
        "--model",
        "pattern.json",
        "--input",
        "test.conllu",
        "--output",
        "pred_pattern.tsv",
        "--candidates",
        "cand_pattern.tsv",
        "--report",
        "lemmatize_pattern_report.json",
    ],
    &[
        "lemmatize",
        "--model",
        "lexicon.json",
        "--input",
        "test.conllu",
        "--output",
        "pred_lexicon.tsv",
        "--report",
        "lemmatize_lexicon_report.json",
    ],
    &[
        "lemmatize",
        "--model",
        "identity.json",
        "--input",
        "test.conllu",
        "--output",
        "pred_identity.tsv",
        "--report",
        "lemmatize_identity_report.json",
    ],
    &[
        "ensemble",
        "--models",
        "pattern.json",
        "lexicon.json",
        "identity.json",
        "--priority",
        "1",
        "0",
        "2",
        "--output",
        "ensemble.json",
        "--report",
        "ensemble_report.json",
    ],
    &[
        "lemmatize",
        "--model",
        "ensemble.json",
        "--input",
        "test.conllu",
        "--output",
        "pred_ensemble.tsv",
        "--report",
        "lemmatize_ensemble_report.json",
    ],
    &[
        "eval",
        "--gold",
        "test.conllu",
        "--pred",
        "pred_pattern.tsv",
        "--report",
        "eval_pattern_report.json",
    ],
    &[
        "eval",
        "--gold",
        "test.conllu",
        "--model",
        "ensemble.json",
        "--mode",
        "type",
        "--lowercase",
        "--strip-symbols",
        "=_",
        "--train-source",
        "train.conllu",
        "--report",
        "eval_ensemble_report.json",
    ],
    &[
        "oracle-eval",
        "--gold",
        "test.conllu",
        "--candidates",
        "cand_pattern.tsv",
        "--report",
        "oracle_report.json",
    ],
    &[
        "overlap",
        "--gold",
        "test.conllu",
        "--a",
        "pred_pattern.tsv",
        "--b",
        "pred_lexicon.tsv",
        "--c",
        "pred_identity.tsv",
        "--tsv",
        "overlap.tsv",
        "--report",
        "overlap_report.json",
    ],
];

pub const PIPELINE_OUTPUTS: [&str; 26] = [
    "train_nosym.conllu",
    "preprocess_report.json",
    "stats.tsv",
    "stats_report.json",
    "pattern.json",
    "train_pattern_report.json",
    "lexicon.json",
    "train_lexicon_report.json",
    "identity.json",
    "train_identity_report.json",
    "pred_pattern.tsv",
    "cand_pattern.tsv",
    "lemmatize_pattern_report.json",
    "pred_lexicon.tsv",
    "lemmatize_lexicon_report.json",
    "pred_identity.tsv",
    "lemmatize_identity_report.json",
    "ensemble.json",
    "ensemble_report.json",
    "pred_ensemble.tsv",
    "lemmatize_ensemble_report.json",
    "eval_pattern_report.json",
    "eval_ensemble_report.json",
    "oracle_report.json",
    "overlap.tsv",
    "overlap_report.json",
];

pub fn testdata() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .ancestors()
        .nth(2)
        .expect("workspace root")
        .join("testdata")
}

/// Copies the pipeline corpus into `dir` and runs every subcommand there.
pub fn run_pipeline(dir: &Path) {
    let pipeline = testdata().join("pipeline");
    for name in PIPELINE_INPUTS {
        fs::copy(pipeline.join(name), dir.join(name))
            .unwrap_or_else(|err| panic!("copying {name}: {err}"));
    }
    for step in PIPELINE_STEPS {
        let output = Command::new(env!("CARGO_BIN_EXE_lemmik"))
            .args(*step)
            .current_dir(dir)
            .output()
            .expect("spawning lemmik");
        assert!(
            output.status.success(),
            "`lemmik {}` failed:\n{}",
            step.join(" "),
            String::from_utf8_lossy(&output.stderr)
        );
    }
}
