//! CoNLL-U parsing, writing and lemmatization-instance extraction.
//!
//! The parser keeps every column of every line verbatim so that writing a
//! parsed corpus reproduces the input byte for byte. Multiword-token ranges
//! (ids like `4-5`) and empty nodes (ids like `5.1`) are not word tokens; they
//! are kept as opaque attachment lines anchored at their position in the
//! sentence and never produce instances.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One word-token line, all ten columns retained.
///
/// A lemma column holding the CoNLL-U placeholder `_` parses as `None`
/// ("absent"); a literal underscore lemma cannot be represented in the format
/// and is not supported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub id: u32,
    pub form: String,
    pub lemma: Option<String>,
    pub upos: String,
    pub xpos: String,
    /// Raw FEATS column; see [`Token::canonical_feats`].
    pub feats: String,
    pub head: String,
    pub deprel: String,
    pub deps: String,
    pub misc: String,
}

impl Token {
    /// FEATS canonicalization: `key=value` items sorted lexicographically by
    /// key and joined with `|`; the placeholder `_` canonicalizes to the
    /// empty string.
    pub fn canonical_feats(&self) -> String {
        if self.feats == "_" {
            return String::new();
        }
        let mut items: Vec<&str> = self.feats.split('|').collect();
        items.sort_by_key(|item| (item.split('=').next().unwrap_or(item), *item));
        items.join("|")
    }
}

/// A non-word line (multiword-token range or empty node) kept for
/// round-tripping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attachment {
    /// Word tokens seen in the sentence before this line.
    pub after_token: usize,
    /// The raw line, without the trailing newline.
    pub line: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Sentence {
    /// Comment lines verbatim, including the leading `#`.
    pub comments: Vec<String>,
    pub tokens: Vec<Token>,
    pub attachments: Vec<Attachment>,
}

impl Sentence {
    /// The value of the `# sent_id = ...` comment, if present.
    pub fn sent_id(&self) -> Option<&str> {
        self.comments.iter().find_map(|c| {
            let rest = c.strip_prefix('#')?.trim_start();
            let rest = rest.strip_prefix("sent_id")?.trim_start();
            Some(rest.strip_prefix('=')?.trim())
        })
    }

    /// Identifier used to address this sentence from prediction files: the
    /// `sent_id` comment, or the sentence's 1-based position when absent.
    pub fn external_id(&self, index: usize) -> String {
        self.sent_id()
            .map(str::to_string)
            .unwrap_or_else(|| (index + 1).to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Corpus {
    pub sentences: Vec<Sentence>,
    pub source_name: String,
}

impl Corpus {
    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(|s| s.tokens.len()).sum()
    }
}

/// One lemmatization example aggregated over identical tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub form: String,
    pub lemma: String,
    pub upos: String,
    /// Canonical feature string (see [`Token::canonical_feats`]).
    pub feats: String,
    /// Token frequency in token mode; always 1 in type mode.
    pub count: u64,
    /// Every occurrence as (sent_id, token id); sentences without a
    /// `sent_id` comment are identified by their 1-based position.
    pub origin: Vec<(String, u32)>,
}

/// How [`extract_instances`] aggregates occurrences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dedupe {
    /// Distinct (form, lemma, upos, feats) with count = occurrences.
    Token,
    /// Distinct (form, lemma, upos, feats) with count = 1.
    Type,
}

/// Instances plus the number of tokens left out for lacking a gold lemma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    pub instances: Vec<Instance>,
    pub skipped_absent_lemma: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConlluError {
    #[error("line {line}: expected 10 tab-separated columns, found {found}")]
    ColumnCount { line: usize, found: usize },
    #[error("line {line}: column {column} is empty")]
    EmptyColumn { line: usize, column: usize },
    #[error("line {line}: invalid token id `{id}`")]
    InvalidId { line: usize, id: String },
    #[error("line {line}: token id {found} does not continue the sequence (expected {expected})")]
    NonConsecutiveId {
        line: usize,
        expected: u32,
        found: u32,
    },
    #[error("line {line}: comment lines must precede the sentence's tokens")]
    MisplacedComment { line: usize },
    #[error("line {line}: unexpected blank line")]
    UnexpectedBlankLine { line: usize },
    #[error("line {line}: carriage return found; files must use LF newlines")]
    CarriageReturn { line: usize },
    #[error("unterminated sentence at end of file (missing final blank line)")]
    UnterminatedSentence,
}

/// Parses CoNLL-U text. Every sentence must be terminated by exactly one
/// blank line, including the last one; the empty string parses to an empty
/// corpus.
pub fn parse_conllu(text: &str, source_name: &str) -> Result<Corpus, ConlluError> {
    let mut sentences = Vec::new();
    let mut current: Option<Sentence> = None;

    // str::lines() would hide a `\r` before the newline; split manually so
    // CRLF input is rejected instead of silently re-written as LF.
    let mut lines = text.split('\n').enumerate().peekable();
    while let Some((idx, line)) = lines.next() {
        if lines.peek().is_none() && line.is_empty() {
            break;
        }
        let line_no = idx + 1;
        if line.contains('\r') {
            return Err(ConlluError::CarriageReturn { line: line_no });
        }
        if line.is_empty() {
            match current.take() {
                Some(sentence) => sentences.push(sentence),
                None => return Err(ConlluError::UnexpectedBlankLine { line: line_no }),
            }
            continue;
        }
        let sentence = current.get_or_insert_with(Sentence::default);
        if line.starts_with('#') {
            if !sentence.tokens.is_empty() || !sentence.attachments.is_empty() {
                return Err(ConlluError::MisplacedComment { line: line_no });
            }
            sentence.comments.push(line.to_string());
            continue;
        }

        let columns: Vec<&str> = line.split('\t').collect();
        if columns.len() != 10 {
            return Err(ConlluError::ColumnCount {
                line: line_no,
                found: columns.len(),
            });
        }
        for (i, col) in columns.iter().enumerate() {
            if col.is_empty() {
                return Err(ConlluError::EmptyColumn {
                    line: line_no,
                    column: i + 1,
                });
            }
        }

        let id_col = columns[0];
        match classify_id(id_col) {
            IdKind::Word(id) => {
                let expected = sentence.tokens.len() as u32 + 1;
                if id != expected {
                    return Err(ConlluError::NonConsecutiveId {
                        line: line_no,
                        expected,
                        found: id,
                    });
                }
                sentence.tokens.push(Token {
                    id,
                    form: columns[1].to_string(),
                    lemma: match columns[2] {
                        "_" => None,
                        lemma => Some(lemma.to_string()),
                    },
                    upos: columns[3].to_string(),
                    xpos: columns[4].to_string(),
                    feats: columns[5].to_string(),
                    head: columns[6].to_string(),
                    deprel: columns[7].to_string(),
                    deps: columns[8].to_string(),
                    misc: columns[9].to_string(),
                });
            }
            IdKind::Range | IdKind::EmptyNode => {
                sentence.attachments.push(Attachment {
                    after_token: sentence.tokens.len(),
                    line: line.to_string(),
                });
            }
            IdKind::Invalid => {
                return Err(ConlluError::InvalidId {
                    line: line_no,
                    id: id_col.to_string(),
                });
            }
        }
    }

    if current.is_some() {
        return Err(ConlluError::UnterminatedSentence);
    }
    Ok(Corpus {
        sentences,
        source_name: source_name.to_string(),
    })
}

enum IdKind {
    Word(u32),
    Range,
    EmptyNode,
    Invalid,
}

/// Word ids must be canonical decimals (no leading zeros, no sign) so that
/// write-back is byte-exact.
fn classify_id(id: &str) -> IdKind {
    fn canonical_number(s: &str) -> bool {
        !s.is_empty()
            && s.bytes().all(|b| b.is_ascii_digit())
            && (s.len() == 1 || !s.starts_with('0'))
    }
    if canonical_number(id) {
        return match id.parse() {
            Ok(n) => IdKind::Word(n),
            Err(_) => IdKind::Invalid,
        };
    }
    if let Some((a, b)) = id.split_once('-') {
        if canonical_number(a) && canonical_number(b) {
            return IdKind::Range;
        }
    }
    if let Some((a, b)) = id.split_once('.') {
        if canonical_number(a) && canonical_number(b) {
            return IdKind::EmptyNode;
        }
    }
    IdKind::Invalid
}

/// Writes a corpus back to CoNLL-U text; inverse of [`parse_conllu`] on the
/// retained fields and byte-exact for unmodified corpora.
pub fn write_conllu(corpus: &Corpus) -> String {
    let mut out = String::new();
    for sentence in &corpus.sentences {
        for comment in &sentence.comments {
            out.push_str(comment);
            out.push('\n');
        }
        let mut next_attachment = 0;
        let mut emit_attachments_before = |position: usize, out: &mut String| {
            while next_attachment < sentence.attachments.len()
                && sentence.attachments[next_attachment].after_token <= position
            {
                out.push_str(&sentence.attachments[next_attachment].line);
                out.push('\n');
                next_attachment += 1;
            }
        };
        for (i, token) in sentence.tokens.iter().enumerate() {
            emit_attachments_before(i, &mut out);
            let lemma = token.lemma.as_deref().unwrap_or("_");
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                token.id,
                token.form,
                lemma,
                token.upos,
                token.xpos,
                token.feats,
                token.head,
                token.deprel,
                token.deps,
                token.misc,
            ));
        }
        emit_attachments_before(usize::MAX, &mut out);
        out.push('\n');
    }
    out
}

/// Collects lemmatization instances in first-occurrence order. Tokens with an
/// absent lemma are skipped and counted.
pub fn extract_instances(corpus: &Corpus, dedupe: Dedupe) -> Extraction {
    let mut table: IndexMap<(String, String, String, String), Instance> = IndexMap::new();
    let mut skipped = 0;
    for (index, sentence) in corpus.sentences.iter().enumerate() {
        let sent_id = sentence.external_id(index);
        for token in &sentence.tokens {
            let Some(lemma) = &token.lemma else {
                skipped += 1;
                continue;
            };
            let feats = token.canonical_feats();
            let key = (
                token.form.clone(),
                lemma.clone(),
                token.upos.clone(),
                feats.clone(),
            );
            let instance = table.entry(key).or_insert_with(|| Instance {
                form: token.form.clone(),
                lemma: lemma.clone(),
                upos: token.upos.clone(),
                feats,
                count: 0,
                origin: Vec::new(),
            });
            if matches!(dedupe, Dedupe::Token) || instance.origin.is_empty() {
                instance.count += 1;
            }
            if matches!(dedupe, Dedupe::Type) {
                instance.count = 1;
            }
            instance.origin.push((sent_id.clone(), token.id));
        }
    }
    Extraction {
        instances: table.into_values().collect(),
        skipped_absent_lemma: skipped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIXTURE: &str = "\
# sent_id = s1
# text = Koerad jooksevad kiiresti
1\tKoerad\tkoer\tNOUN\tS\tCase=Nom|Number=Plur\t2\tnsubj\t_\t_
2\tjooksevad\tjooksma\tVERB\tV\tTense=Pres|Number=Plur\t0\troot\t_\t_
3\tkiiresti\tkiiresti\tADV\tD\t_\t2\tadvmod\t_\tSpaceAfter=No

# sent_id = s2
1-2\tpolnud\t_\t_\t_\t_\t_\t_\t_\t_
1\tei\tei\tAUX\tV\tPolarity=Neg\t3\taux\t_\t_
2\tolnud\tolema\tAUX\tV\tVerbForm=Part\t3\tcop\t_\t_
3\tkoer\tkoer\tNOUN\tS\tCase=Nom|Number=Sing\t0\troot\t_\t_
3.1\telided\t_\t_\t_\t_\t_\t_\t_\t_

";

    #[test]
    fn parses_tokens_and_attachments() {
        let corpus = parse_conllu(FIXTURE, "fixture").unwrap();
        assert_eq!(corpus.sentences.len(), 2);
        assert_eq!(corpus.token_count(), 6);
        assert_eq!(corpus.sentences[0].sent_id(), Some("s1"));
        assert_eq!(corpus.sentences[1].sent_id(), Some("s2"));

        let s2 = &corpus.sentences[1];
        assert_eq!(s2.tokens.len(), 3);
        assert_eq!(s2.attachments.len(), 2);
        assert_eq!(s2.attachments[0].after_token, 0);
        assert!(s2.attachments[0].line.starts_with("1-2\t"));
        assert_eq!(s2.attachments[1].after_token, 3);
        assert!(s2.attachments[1].line.starts_with("3.1\t"));
    }

    #[test]
    fn round_trip_is_byte_exact() {
        let corpus = parse_conllu(FIXTURE, "fixture").unwrap();
        assert_eq!(write_conllu(&corpus), FIXTURE);
    }

    #[test]
    fn empty_input_gives_empty_corpus() {
        let corpus = parse_conllu("", "empty").unwrap();
        assert!(corpus.sentences.is_empty());
        assert_eq!(write_conllu(&corpus), "");
    }

    #[test]
    fn modified_lemma_changes_only_that_column() {
        let mut corpus = parse_conllu(FIXTURE, "fixture").unwrap();
        corpus.sentences[0].tokens[0].lemma = Some("KOER".into());
        let written = write_conllu(&corpus);
        let original: Vec<&str> = FIXTURE.lines().collect();
        let changed: Vec<&str> = written.lines().collect();
        assert_eq!(original.len(), changed.len());
        for (before, after) in original.iter().zip(&changed) {
            if before == after {
                continue;
            }
            let b: Vec<&str> = before.split('\t').collect();
            let a: Vec<&str> = after.split('\t').collect();
            assert_eq!(b.len(), 10);
            for i in 0..10 {
                if i == 2 {
                    assert_eq!((b[i], a[i]), ("koer", "KOER"));
                } else {
                    assert_eq!(b[i], a[i]);
                }
            }
        }
    }

    #[test]
    fn absent_lemma_is_none_and_skipped() {
        let text = "\
# sent_id = s1
1\tfoo\t_\tX\t_\t_\t0\troot\t_\t_
2\tkoer\tkoer\tNOUN\t_\t_\t1\tdep\t_\t_

";
        let corpus = parse_conllu(text, "t").unwrap();
        assert_eq!(corpus.sentences[0].tokens[0].lemma, None);
        let extraction = extract_instances(&corpus, Dedupe::Token);
        assert_eq!(extraction.skipped_absent_lemma, 1);
        assert_eq!(extraction.instances.len(), 1);
        assert_eq!(write_conllu(&corpus), text);
    }

    fn instance_fixture() -> Corpus {
        let mut text = String::new();
        for (i, (form, lemma, feats)) in [
            ("koera", "koer", "Case=Gen|Number=Sing"),
            ("koera", "koer", "Number=Sing|Case=Gen"),
            ("koera", "koer", "Case=Gen|Number=Sing"),
            ("koera", "koer", "Case=Par|Number=Sing"),
            ("ja", "ja", "_"),
        ]
        .iter()
        .enumerate()
        {
            text.push_str(&format!("# sent_id = s{}\n", i + 1));
            text.push_str(&format!(
                "1\t{form}\t{lemma}\tNOUN\t_\t{feats}\t0\troot\t_\t_\n\n"
            ));
        }
        parse_conllu(&text, "t").unwrap()
    }

    #[test]
    fn token_mode_aggregates_and_type_mode_dedupes() {
        let corpus = instance_fixture();

        let tokens = extract_instances(&corpus, Dedupe::Token);
        assert_eq!(tokens.instances.len(), 3);
        assert_eq!(tokens.instances[0].count, 3);
        assert_eq!(tokens.instances[0].origin.len(), 3);
        assert_eq!(tokens.instances[1].count, 1);
        let total: u64 = tokens.instances.iter().map(|i| i.count).sum();
        assert_eq!(total, corpus.token_count() as u64);

        let types = extract_instances(&corpus, Dedupe::Type);
        assert_eq!(types.instances.len(), 3);
        assert!(types.instances.iter().all(|i| i.count == 1));
        assert_eq!(types.instances[0].origin.len(), 3);
    }

    #[test]
    fn feats_canonicalization_sorts_by_key() {
        let corpus = instance_fixture();
        let first = &extract_instances(&corpus, Dedupe::Token).instances[0];
        assert_eq!(first.feats, "Case=Gen|Number=Sing");
        let token = &corpus.sentences[4].tokens[0];
        assert_eq!(token.canonical_feats(), "");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let nine_columns = "1\ta\tb\tc\td\te\tf\tg\th\n\n";
        assert_eq!(
            parse_conllu(nine_columns, "t"),
            Err(ConlluError::ColumnCount { line: 1, found: 9 })
        );

        let bad_id = "x\ta\tb\tc\td\te\tf\tg\th\ti\n\n";
        assert_eq!(
            parse_conllu(bad_id, "t"),
            Err(ConlluError::InvalidId {
                line: 1,
                id: "x".into()
            })
        );

        let padded_id = "01\ta\tb\tc\td\te\tf\tg\th\ti\n\n";
        assert_eq!(
            parse_conllu(padded_id, "t"),
            Err(ConlluError::InvalidId {
                line: 1,
                id: "01".into()
            })
        );

        let gap = "1\ta\tb\tc\td\te\tf\tg\th\ti\n3\ta\tb\tc\td\te\tf\tg\th\ti\n\n";
        assert_eq!(
            parse_conllu(gap, "t"),
            Err(ConlluError::NonConsecutiveId {
                line: 2,
                expected: 2,
                found: 3
            })
        );

        let duplicate = "1\ta\tb\tc\td\te\tf\tg\th\ti\n1\ta\tb\tc\td\te\tf\tg\th\ti\n\n";
        assert_eq!(
            parse_conllu(duplicate, "t"),
            Err(ConlluError::NonConsecutiveId {
                line: 2,
                expected: 2,
                found: 1
            })
        );

        let late_comment = "1\ta\tb\tc\td\te\tf\tg\th\ti\n# late\n\n";
        assert_eq!(
            parse_conllu(late_comment, "t"),
            Err(ConlluError::MisplacedComment { line: 2 })
        );

        let empty_column = "1\ta\t\tc\td\te\tf\tg\th\ti\n\n";
        assert_eq!(
            parse_conllu(empty_column, "t"),
            Err(ConlluError::EmptyColumn { line: 1, column: 3 })
        );

        assert_eq!(
            parse_conllu("\n", "t"),
            Err(ConlluError::UnexpectedBlankLine { line: 1 })
        );

        let double_blank = "1\ta\tb\tc\td\te\tf\tg\th\ti\n\n\n";
        assert_eq!(
            parse_conllu(double_blank, "t"),
            Err(ConlluError::UnexpectedBlankLine { line: 3 })
        );

        let unterminated = "1\ta\tb\tc\td\te\tf\tg\th\ti\n";
        assert_eq!(
            parse_conllu(unterminated, "t"),
            Err(ConlluError::UnterminatedSentence)
        );

        let crlf = "1\ta\tb\tc\td\te\tf\tg\th\ti\r\n\n";
        assert_eq!(
            parse_conllu(crlf, "t"),
            Err(ConlluError::CarriageReturn { line: 1 })
        );
    }

    #[test]
    fn sentences_without_sent_id_use_their_position() {
        let text = "1\tkoer\tkoer\tNOUN\t_\t_\t0\troot\t_\t_\n\n";
        let corpus = parse_conllu(text, "t").unwrap();
        assert_eq!(corpus.sentences[0].sent_id(), None);
        let extraction = extract_instances(&corpus, Dedupe::Token);
        assert_eq!(extraction.instances[0].origin, vec![("1".to_string(), 1)]);
    }
}
