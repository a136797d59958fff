//! Prediction and candidate files: headerless TSV, one row per token.
//!
//! Prediction rows are `sent_id, token_id, form, predicted_lemma`; candidate
//! rows are `sent_id, token_id, form, candidate...` with zero or more
//! candidates. The format doubles as an import path for external systems'
//! outputs. Tokens are addressed by the gold corpus's `sent_id` comment;
//! sentences lacking one are addressed by their 1-based position.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictionRow {
    pub sent_id: String,
    pub token_id: u32,
    pub form: String,
    pub lemma: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateRow {
    pub sent_id: String,
    pub token_id: u32,
    pub form: String,
    pub candidates: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredictionFileError {
    #[error("line {line}: expected at least {expected} tab-separated columns, found {found}")]
    Columns {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: invalid token id `{id}`")]
    InvalidId { line: usize, id: String },
}

fn parse_token_id(line: usize, column: &str) -> Result<u32, PredictionFileError> {
    let canonical = !column.is_empty()
        && column.bytes().all(|b| b.is_ascii_digit())
        && (column.len() == 1 || !column.starts_with('0'));
    if !canonical {
        return Err(PredictionFileError::InvalidId {
            line,
            id: column.to_string(),
        });
    }
    column.parse().map_err(|_| PredictionFileError::InvalidId {
        line,
        id: column.to_string(),
    })
}

pub fn parse_predictions(text: &str) -> Result<Vec<PredictionRow>, PredictionFileError> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let line_no = idx + 1;
        let columns: Vec<&str> = line.split('\t').collect();
        if columns.len() != 4 {
            return Err(PredictionFileError::Columns {
                line: line_no,
                expected: 4,
                found: columns.len(),
            });
        }
        rows.push(PredictionRow {
            sent_id: columns[0].to_string(),
            token_id: parse_token_id(line_no, columns[1])?,
            form: columns[2].to_string(),
            lemma: columns[3].to_string(),
        });
    }
    Ok(rows)
}

pub fn write_predictions(rows: &[PredictionRow]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            row.sent_id, row.token_id, row.form, row.lemma
        ));
    }
    out
}

pub fn parse_candidates(text: &str) -> Result<Vec<CandidateRow>, PredictionFileError> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let line_no = idx + 1;
        let columns: Vec<&str> = line.split('\t').collect();
        if columns.len() < 3 {
            return Err(PredictionFileError::Columns {
                line: line_no,
                expected: 3,
                found: columns.len(),
            });
        }
        rows.push(CandidateRow {
            sent_id: columns[0].to_string(),
            token_id: parse_token_id(line_no, columns[1])?,
            form: columns[2].to_string(),
            candidates: columns[3..].iter().map(|c| c.to_string()).collect(),
        });
    }
    Ok(rows)
}

pub fn write_candidates(rows: &[CandidateRow]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.sent_id);
        out.push('\t');
        out.push_str(&row.token_id.to_string());
        out.push('\t');
        out.push_str(&row.form);
        for candidate in &row.candidates {
            out.push('\t');
            out.push_str(candidate);
        }
        out.push('\n');
    }
    out
}

/// Collapses candidate rows to their top candidate. Rows with no candidates
/// produce no prediction row at all; the token then counts as unpredicted.
pub fn one_best(rows: &[CandidateRow]) -> Vec<PredictionRow> {
    rows.iter()
        .filter_map(|row| {
            row.candidates.first().map(|lemma| PredictionRow {
                sent_id: row.sent_id.clone(),
                token_id: row.token_id,
                form: row.form.clone(),
                lemma: lemma.clone(),
            })
        })
        .collect()
}
