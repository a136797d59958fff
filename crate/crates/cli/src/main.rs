//! `lemmik`: batch CLI over the lemmatization toolkit.
//!
//! Every command reads and validates all of its inputs before writing any
//! output, and prints a JSON report to stdout carrying the resolved
//! configuration and a SHA-256 digest of each input. Reports contain no
//! timestamps or output paths, so rerunning a command on unchanged inputs
//! reproduces every artifact byte for byte.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use lemmik::backends::{
    load_model, predict_corpus, predict_corpus_candidates, save_model, train_lexicon,
    train_pattern, BackendModel, EnsembleModel, LexiconKey, DEFAULT_MAX_SUFFIX,
};
use lemmik::conllu::{extract_instances, parse_conllu, write_conllu, Corpus, Dedupe};
use lemmik::eval::{
    cross_domain_report, evaluate, oracle_evaluate, overlap, EvalMode, EvalReport, Provenance,
    TypeKey, OVERLAP_REGIONS,
};
use lemmik::predictions::{
    one_best, parse_candidates, parse_predictions, write_candidates, write_predictions,
    PredictionRow,
};
use lemmik::preprocess::{normalize_corpus, CaseTarget, PreprocessConfig};
use lemmik::rules::{ruleset_stats, Weighting};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "lemmik",
    version,
    about = "Induce, apply and analyze word-form to lemma transformation rules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize a CoNLL-U corpus (lowercasing, special-symbol stripping)
    Preprocess(PreprocessArgs),
    /// Induce rules from a corpus and tabulate their frequencies
    Stats(StatsArgs),
    /// Train a lemmatizer backend and save it as a model file
    Train(TrainArgs),
    /// Apply a trained model to a corpus, writing predictions
    Lemmatize(LemmatizeArgs),
    /// Score a prediction file or a model against gold lemmas
    Eval(EvalArgs),
    /// Score candidate lists by oracle selection and compare to their 1-best
    OracleEval(OracleEvalArgs),
    /// Partition the errors of three systems into Venn regions
    Overlap(OverlapArgs),
    /// Combine trained models into a majority-vote ensemble
    Ensemble(EnsembleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseTargetArg {
    LemmaOnly,
    FormAndLemma,
}

impl CaseTargetArg {
    fn core(self) -> CaseTarget {
        match self {
            CaseTargetArg::LemmaOnly => CaseTarget::LemmaOnly,
            CaseTargetArg::FormAndLemma => CaseTarget::FormAndLemma,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightingArg {
    Token,
    Type,
}

impl WeightingArg {
    fn core(self) -> Weighting {
        match self {
            WeightingArg::Token => Weighting::Token,
            WeightingArg::Type => Weighting::Type,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DedupeArg {
    Token,
    Type,
}

impl DedupeArg {
    fn core(self) -> Dedupe {
        match self {
            DedupeArg::Token => Dedupe::Token,
            DedupeArg::Type => Dedupe::Type,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum BackendArg {
    Pattern,
    Lexicon,
    Identity,
}

impl BackendArg {
    fn name(self) -> &'static str {
        match self {
            BackendArg::Pattern => "pattern",
            BackendArg::Lexicon => "lexicon",
            BackendArg::Identity => "identity",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KeyArg {
    Form,
    FormUpos,
}

impl KeyArg {
    fn core(self) -> LexiconKey {
        match self {
            KeyArg::Form => LexiconKey::Form,
            KeyArg::FormUpos => LexiconKey::FormUpos,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum BackoffArg {
    None,
    Pattern,
}

impl BackoffArg {
    fn name(self) -> &'static str {
        match self {
            BackoffArg::None => "none",
            BackoffArg::Pattern => "pattern",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Token,
    Type,
}

impl ModeArg {
    fn core(self) -> EvalMode {
        match self {
            ModeArg::Token => EvalMode::Token,
            ModeArg::Type => EvalMode::Type,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeKeyArg {
    WithLemma,
    WithoutLemma,
}

impl TypeKeyArg {
    fn core(self) -> TypeKey {
        match self {
            TypeKeyArg::WithLemma => TypeKey::WithLemma,
            TypeKeyArg::WithoutLemma => TypeKey::WithoutLemma,
        }
    }
}

/// Comparison-time lemma normalization shared by the scoring commands.
#[derive(Args)]
struct NormalizeArgs {
    /// Lowercase lemmas before comparison
    #[arg(long)]
    lowercase: bool,
    /// Characters stripped from lemmas before comparison, as one string
    #[arg(long, value_name = "CHARS", default_value = "")]
    strip_symbols: String,
}

impl NormalizeArgs {
    fn config(&self) -> PreprocessConfig {
        PreprocessConfig {
            lowercase: self.lowercase,
            strip_symbols: self.strip_symbols.chars().collect(),
            apply_to: CaseTarget::default(),
        }
    }
}

#[derive(Args)]
struct PreprocessArgs {
    /// Input CoNLL-U file
    #[arg(long)]
    input: PathBuf,
    /// Where to write the normalized CoNLL-U
    #[arg(long)]
    output: PathBuf,
    /// Lowercase the corpus
    #[arg(long)]
    lowercase: bool,
    /// Characters to strip from lemmas, as one string (e.g. "=_")
    #[arg(long, value_name = "CHARS", default_value = "")]
    strip_symbols: String,
    /// What lowercasing applies to
    #[arg(long, value_enum, default_value = "form-and-lemma")]
    apply_to: CaseTargetArg,
    /// Also write the JSON report here (it always goes to stdout)
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    /// Input CoNLL-U file
    #[arg(long)]
    input: PathBuf,
    /// Frequency weighting of the rule table
    #[arg(long, value_enum, default_value = "token")]
    weighting: WeightingArg,
    /// Align with copy operations instead of plain delete/insert
    #[arg(long)]
    allow_copy: bool,
    /// How many top rules to list; 0 lists all
    #[arg(long, default_value_t = 5)]
    top: usize,
    /// Write the top rules as tab-separated rule/count/share rows
    #[arg(long, value_name = "PATH")]
    tsv: Option<PathBuf>,
    /// Also write the JSON report here (it always goes to stdout)
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct TrainArgs {
    /// Training CoNLL-U file
    #[arg(long)]
    input: PathBuf,
    /// Where to write the model file
    #[arg(long)]
    output: PathBuf,
    /// Backend to train
    #[arg(long, value_enum, default_value = "pattern")]
    backend: BackendArg,
    /// How occurrences aggregate into training instances
    #[arg(long, value_enum, default_value = "token")]
    dedupe: DedupeArg,
    /// What identifies a lexicon entry
    #[arg(long, value_enum, default_value = "form")]
    key: KeyArg,
    /// What a lexicon falls back to on unknown forms
    #[arg(long, value_enum, default_value = "none")]
    backoff: BackoffArg,
    /// Align with copy operations instead of plain delete/insert
    #[arg(long)]
    allow_copy: bool,
    /// Longest form suffix the pattern trie indexes
    #[arg(long, default_value_t = DEFAULT_MAX_SUFFIX)]
    max_suffix: usize,
    /// Also write the JSON report here (it always goes to stdout)
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct LemmatizeArgs {
    /// Trained model file
    #[arg(long)]
    model: PathBuf,
    /// CoNLL-U file to lemmatize
    #[arg(long)]
    input: PathBuf,
    /// Where to write predictions (sent_id, token id, form, lemma)
    #[arg(long)]
    output: PathBuf,
    /// Also write ranked candidate lists here
    #[arg(long, value_name = "PATH")]
    candidates: Option<PathBuf>,
    /// Also write the JSON report here (it always goes to stdout)
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(
    clap::ArgGroup::new("system").required(true).args(["pred", "model"])
))]
struct EvalArgs {
    /// Gold CoNLL-U file
    #[arg(long)]
    gold: PathBuf,
    /// Prediction file to score
    #[arg(long, value_name = "PATH")]
    pred: Option<PathBuf>,
    /// Model to run over the gold corpus and score
    #[arg(long, value_name = "PATH")]
    model: Option<PathBuf>,
    /// Count every occurrence or every distinct type once
    #[arg(long, value_enum, default_value = "token")]
    mode: ModeArg,
    /// What identifies a type in type mode
    #[arg(long, value_enum, default_value = "with-lemma")]
    type_key: TypeKeyArg,
    #[command(flatten)]
    normalize: NormalizeArgs,
    /// Name of the training data, recorded as provenance
    #[arg(long, value_name = "NAME")]
    train_source: Option<String>,
    /// Also write the JSON report here (it always goes to stdout)
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct OracleEvalArgs {
    /// Gold CoNLL-U file
    #[arg(long)]
    gold: PathBuf,
    /// Candidate file to score
    #[arg(long, value_name = "PATH")]
    candidates: PathBuf,
    #[command(flatten)]
    normalize: NormalizeArgs,
    /// Also write the JSON report here (it always goes to stdout)
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct OverlapArgs {
    /// Gold CoNLL-U file
    #[arg(long)]
    gold: PathBuf,
    /// Prediction file of system A
    #[arg(long, value_name = "PATH")]
    a: PathBuf,
    /// Prediction file of system B
    #[arg(long, value_name = "PATH")]
    b: PathBuf,
    /// Prediction file of system C
    #[arg(long, value_name = "PATH")]
    c: PathBuf,
    #[command(flatten)]
    normalize: NormalizeArgs,
    /// Write the seven region counts as tab-separated rows
    #[arg(long, value_name = "PATH")]
    tsv: Option<PathBuf>,
    /// Also write the JSON report here (it always goes to stdout)
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct EnsembleArgs {
    /// Member model files, in member order
    #[arg(long, num_args = 2.., value_name = "PATH")]
    models: Vec<PathBuf>,
    /// Member indices from highest to lowest tie-breaking priority
    #[arg(long, num_args = 2.., value_name = "IDX")]
    priority: Option<Vec<usize>>,
    /// Where to write the combined model file
    #[arg(long)]
    output: PathBuf,
    /// Also write the JSON report here (it always goes to stdout)
    #[arg(long)]
    report: Option<PathBuf>,
}

struct Input {
    path: PathBuf,
    text: String,
}

#[derive(Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

impl Input {
    fn digest(&self) -> InputDigest {
        InputDigest {
            path: self.path.display().to_string(),
            sha256: hex::encode(Sha256::digest(self.text.as_bytes())),
        }
    }

    fn corpus(&self) -> Result<Corpus> {
        let name = self.path.display().to_string();
        parse_conllu(&self.text, &name).with_context(|| format!("parsing {name}"))
    }

    fn model(&self) -> Result<BackendModel> {
        load_model(&self.text).with_context(|| format!("loading model {}", self.path.display()))
    }
}

fn read_input(path: &Path) -> Result<Input> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Input {
        path: path.to_path_buf(),
        text,
    })
}

fn write_output(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

#[derive(Serialize)]
struct Envelope<C: Serialize, R: Serialize> {
    schema_version: u32,
    command: &'static str,
    config: C,
    inputs: Vec<InputDigest>,
    report: R,
}

fn emit<C: Serialize, R: Serialize>(
    command: &'static str,
    config: C,
    inputs: Vec<InputDigest>,
    report: R,
    report_path: Option<&Path>,
) -> Result<()> {
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION,
        command,
        config,
        inputs,
        report,
    };
    let mut json = serde_json::to_string_pretty(&envelope).context("serializing the report")?;
    json.push('\n');
    if let Some(path) = report_path {
        write_output(path, &json)?;
    }
    print!("{json}");
    Ok(())
}

fn cmd_preprocess(args: PreprocessArgs) -> Result<()> {
    let input = read_input(&args.input)?;
    let corpus = input.corpus()?;
    let cfg = PreprocessConfig {
        lowercase: args.lowercase,
        strip_symbols: args.strip_symbols.chars().collect(),
        apply_to: args.apply_to.core(),
    };
    let normalized = normalize_corpus(&corpus, &cfg)
        .with_context(|| format!("normalizing {}", args.input.display()))?;
    write_output(&args.output, &write_conllu(&normalized))?;

    #[derive(Serialize)]
    struct Report {
        sentences: usize,
        tokens: usize,
    }
    emit(
        "preprocess",
        &cfg,
        vec![input.digest()],
        Report {
            sentences: normalized.sentences.len(),
            tokens: normalized.token_count(),
        },
        args.report.as_deref(),
    )
}

fn cmd_stats(args: StatsArgs) -> Result<()> {
    let input = read_input(&args.input)?;
    let corpus = input.corpus()?;
    let extraction = extract_instances(&corpus, Dedupe::Token);
    let stats = ruleset_stats(
        &extraction.instances,
        args.allow_copy,
        args.weighting.core(),
    )
    .with_context(|| format!("inducing rules from {}", args.input.display()))?;

    #[derive(Serialize)]
    struct Row<'a> {
        rule: &'a str,
        count: u64,
        share: f64,
    }
    let rows: Vec<Row> = stats
        .top(args.top)
        .into_iter()
        .map(|(rule, entry)| Row {
            rule,
            count: entry.count,
            share: entry.share,
        })
        .collect();

    if let Some(tsv_path) = &args.tsv {
        let mut tsv = String::new();
        for row in &rows {
            tsv.push_str(&format!("{}\t{}\t{:.6}\n", row.rule, row.count, row.share));
        }
        write_output(tsv_path, &tsv)?;
    }

    #[derive(Serialize)]
    struct Config {
        weighting: Weighting,
        allow_copy: bool,
        top: usize,
    }
    #[derive(Serialize)]
    struct Report<'a> {
        total: u64,
        distinct_rules: usize,
        instances: usize,
        skipped_absent_lemma: u64,
        rules: Vec<Row<'a>>,
    }
    emit(
        "stats",
        Config {
            weighting: args.weighting.core(),
            allow_copy: args.allow_copy,
            top: args.top,
        },
        vec![input.digest()],
        Report {
            total: stats.total,
            distinct_rules: stats.distinct_rules(),
            instances: extraction.instances.len(),
            skipped_absent_lemma: extraction.skipped_absent_lemma,
            rules: rows,
        },
        args.report.as_deref(),
    )
}

fn cmd_train(args: TrainArgs) -> Result<()> {
    ensure!(args.max_suffix >= 1, "--max-suffix must be at least 1");
    let input = read_input(&args.input)?;
    let corpus = input.corpus()?;
    let extraction = extract_instances(&corpus, args.dedupe.core());
    let instances = &extraction.instances;
    let train_context = || format!("training on {}", args.input.display());
    let model = match args.backend {
        BackendArg::Identity => BackendModel::Identity,
        BackendArg::Pattern => train_pattern(instances, args.allow_copy, args.max_suffix)
            .with_context(train_context)?,
        BackendArg::Lexicon => {
            let mut model =
                train_lexicon(instances, args.key.core()).with_context(train_context)?;
            if args.backoff == BackoffArg::Pattern {
                let fallback = train_pattern(instances, args.allow_copy, args.max_suffix)
                    .with_context(train_context)?;
                let BackendModel::Lexicon(lexicon) = &mut model else {
                    unreachable!("train_lexicon returns a lexicon");
                };
                lexicon.fallback = Some(Box::new(fallback));
            }
            model
        }
    };
    write_output(&args.output, &save_model(&model))?;

    #[derive(Serialize)]
    struct Config {
        backend: &'static str,
        dedupe: Dedupe,
        key: LexiconKey,
        backoff: &'static str,
        allow_copy: bool,
        max_suffix: usize,
    }
    #[derive(Serialize)]
    struct Report {
        backend: &'static str,
        instances: usize,
        skipped_absent_lemma: u64,
    }
    emit(
        "train",
        Config {
            backend: args.backend.name(),
            dedupe: args.dedupe.core(),
            key: args.key.core(),
            backoff: args.backoff.name(),
            allow_copy: args.allow_copy,
            max_suffix: args.max_suffix,
        },
        vec![input.digest()],
        Report {
            backend: model.name(),
            instances: instances.len(),
            skipped_absent_lemma: extraction.skipped_absent_lemma,
        },
        args.report.as_deref(),
    )
}

fn cmd_lemmatize(args: LemmatizeArgs) -> Result<()> {
    let model_input = read_input(&args.model)?;
    let model = model_input.model()?;
    let corpus_input = read_input(&args.input)?;
    let corpus = corpus_input.corpus()?;

    let rows = predict_corpus(&model, &corpus);
    write_output(&args.output, &write_predictions(&rows))?;
    if let Some(cand_path) = &args.candidates {
        let cand_rows = predict_corpus_candidates(&model, &corpus);
        write_output(cand_path, &write_candidates(&cand_rows))?;
    }

    #[derive(Serialize)]
    struct Config {
        with_candidates: bool,
    }
    #[derive(Serialize)]
    struct Report {
        backend: &'static str,
        tokens: usize,
    }
    emit(
        "lemmatize",
        Config {
            with_candidates: args.candidates.is_some(),
        },
        vec![model_input.digest(), corpus_input.digest()],
        Report {
            backend: model.name(),
            tokens: rows.len(),
        },
        args.report.as_deref(),
    )
}

fn cmd_eval(args: EvalArgs) -> Result<()> {
    let gold_input = read_input(&args.gold)?;
    let gold = gold_input.corpus()?;
    let cfg = args.normalize.config();
    let mode = args.mode.core();
    let type_key = args.type_key.core();

    let (source, mut report, inputs) = if let Some(pred_path) = &args.pred {
        let pred_input = read_input(pred_path)?;
        let rows = parse_predictions(&pred_input.text)
            .with_context(|| format!("parsing {}", pred_path.display()))?;
        let report = evaluate(&rows, &gold, mode, type_key, &cfg)?;
        (
            "predictions",
            report,
            vec![gold_input.digest(), pred_input.digest()],
        )
    } else {
        let model_path = args
            .model
            .as_ref()
            .expect("clap enforces one system source");
        let model_input = read_input(model_path)?;
        let model = model_input.model()?;
        let report = if let Some(train_source) = &args.train_source {
            cross_domain_report(&model, train_source, &gold, mode, type_key, &cfg)?
        } else {
            evaluate(&predict_corpus(&model, &gold), &gold, mode, type_key, &cfg)?
        };
        (
            "model",
            report,
            vec![gold_input.digest(), model_input.digest()],
        )
    };
    if report.provenance.is_none() {
        if let Some(train_source) = &args.train_source {
            report.provenance = Some(Provenance {
                train_source: train_source.clone(),
                eval_source: gold.source_name.clone(),
            });
        }
    }

    #[derive(Serialize)]
    struct Config<'a> {
        source: &'static str,
        mode: EvalMode,
        type_key: TypeKey,
        normalize: &'a PreprocessConfig,
    }
    emit(
        "eval",
        Config {
            source,
            mode,
            type_key,
            normalize: &cfg,
        },
        inputs,
        report,
        args.report.as_deref(),
    )
}

fn cmd_oracle_eval(args: OracleEvalArgs) -> Result<()> {
    let gold_input = read_input(&args.gold)?;
    let gold = gold_input.corpus()?;
    let cand_input = read_input(&args.candidates)?;
    let rows = parse_candidates(&cand_input.text)
        .with_context(|| format!("parsing {}", args.candidates.display()))?;
    let cfg = args.normalize.config();

    let oracle = oracle_evaluate(&rows, &gold, &cfg)?;
    let best = evaluate(
        &one_best(&rows),
        &gold,
        EvalMode::Token,
        TypeKey::WithLemma,
        &cfg,
    )?;
    ensure!(
        oracle.correct >= best.correct,
        "oracle selection scored below its own 1-best ({} < {})",
        oracle.correct,
        best.correct
    );

    #[derive(Serialize)]
    struct Config<'a> {
        normalize: &'a PreprocessConfig,
    }
    #[derive(Serialize)]
    struct Report {
        oracle: EvalReport,
        one_best: EvalReport,
        correct_gain: u64,
    }
    let correct_gain = oracle.correct - best.correct;
    emit(
        "oracle-eval",
        Config { normalize: &cfg },
        vec![gold_input.digest(), cand_input.digest()],
        Report {
            oracle,
            one_best: best,
            correct_gain,
        },
        args.report.as_deref(),
    )
}

/// Indexes one system's predictions by token address, rejecting rows that
/// point at no gold token and duplicate rows.
fn index_predictions(
    rows: &[PredictionRow],
    known: &HashSet<(String, u32)>,
    label: &str,
) -> Result<HashMap<(String, u32), String>> {
    let mut map = HashMap::new();
    for row in rows {
        let key = (row.sent_id.clone(), row.token_id);
        ensure!(
            known.contains(&key),
            "system {label}: prediction for unknown token {} of sentence `{}`",
            row.token_id,
            row.sent_id
        );
        ensure!(
            map.insert(key, row.lemma.clone()).is_none(),
            "system {label}: duplicate row for token {} of sentence `{}`",
            row.token_id,
            row.sent_id
        );
    }
    Ok(map)
}

fn cmd_overlap(args: OverlapArgs) -> Result<()> {
    let gold_input = read_input(&args.gold)?;
    let gold = gold_input.corpus()?;
    let system_inputs = [
        read_input(&args.a)?,
        read_input(&args.b)?,
        read_input(&args.c)?,
    ];
    let cfg = args.normalize.config();

    let mut known = HashSet::new();
    for (index, sentence) in gold.sentences.iter().enumerate() {
        let sent_id = sentence.external_id(index);
        for token in &sentence.tokens {
            known.insert((sent_id.clone(), token.id));
        }
    }
    let mut maps = Vec::new();
    for (input, label) in system_inputs.iter().zip(["a", "b", "c"]) {
        let rows = parse_predictions(&input.text)
            .with_context(|| format!("parsing {}", input.path.display()))?;
        maps.push(index_predictions(&rows, &known, label)?);
    }

    let mut vectors: [Vec<bool>; 3] = Default::default();
    let mut excluded_absent_lemma = 0u64;
    let mut excluded_uncovered = 0u64;
    for (index, sentence) in gold.sentences.iter().enumerate() {
        let sent_id = sentence.external_id(index);
        for token in &sentence.tokens {
            let Some(lemma) = &token.lemma else {
                excluded_absent_lemma += 1;
                continue;
            };
            let key = (sent_id.clone(), token.id);
            if !maps.iter().all(|map| map.contains_key(&key)) {
                excluded_uncovered += 1;
                continue;
            }
            let gold_norm = cfg.normalize_lemma(lemma);
            for (vector, map) in vectors.iter_mut().zip(&maps) {
                vector.push(cfg.normalize_lemma(&map[&key]) == gold_norm);
            }
        }
    }
    let report = overlap(&vectors[0], &vectors[1], &vectors[2])?;

    if let Some(tsv_path) = &args.tsv {
        let mut tsv = String::new();
        for region in OVERLAP_REGIONS {
            tsv.push_str(&format!("{region}\t{}\n", report.region_counts[region]));
        }
        write_output(tsv_path, &tsv)?;
    }

    #[derive(Serialize)]
    struct Config<'a> {
        normalize: &'a PreprocessConfig,
    }
    #[derive(Serialize)]
    struct Report {
        compared: usize,
        excluded_absent_lemma: u64,
        excluded_uncovered: u64,
        overlap: lemmik::eval::OverlapReport,
    }
    let mut inputs = vec![gold_input.digest()];
    inputs.extend(system_inputs.iter().map(Input::digest));
    emit(
        "overlap",
        Config { normalize: &cfg },
        inputs,
        Report {
            compared: vectors[0].len(),
            excluded_absent_lemma,
            excluded_uncovered,
            overlap: report,
        },
        args.report.as_deref(),
    )
}

fn cmd_ensemble(args: EnsembleArgs) -> Result<()> {
    let inputs: Vec<Input> = args
        .models
        .iter()
        .map(|path| read_input(path))
        .collect::<Result<_>>()?;
    let members: Vec<BackendModel> = inputs.iter().map(Input::model).collect::<Result<_>>()?;
    let priority = args
        .priority
        .unwrap_or_else(|| (0..members.len()).collect());
    let mut sorted = priority.clone();
    sorted.sort_unstable();
    ensure!(
        sorted == (0..members.len()).collect::<Vec<_>>(),
        "--priority must be a permutation of 0..{}",
        members.len()
    );

    let kinds: Vec<&'static str> = members.iter().map(BackendModel::name).collect();
    let model = BackendModel::Ensemble(EnsembleModel {
        members,
        priority: priority.clone(),
    });
    write_output(&args.output, &save_model(&model))?;

    #[derive(Serialize)]
    struct Config {
        priority: Vec<usize>,
    }
    #[derive(Serialize)]
    struct Report {
        members: Vec<&'static str>,
    }
    emit(
        "ensemble",
        Config { priority },
        inputs.iter().map(Input::digest).collect(),
        Report { members: kinds },
        args.report.as_deref(),
    )
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Preprocess(args) => cmd_preprocess(args),
        Command::Stats(args) => cmd_stats(args),
        Command::Train(args) => cmd_train(args),
        Command::Lemmatize(args) => cmd_lemmatize(args),
        Command::Eval(args) => cmd_eval(args),
        Command::OracleEval(args) => cmd_oracle_eval(args),
        Command::Overlap(args) => cmd_overlap(args),
        Command::Ensemble(args) => cmd_ensemble(args),
    }
}
