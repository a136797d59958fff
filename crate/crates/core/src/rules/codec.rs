//! Textual codec for lemma rules.
//!
//! Grammar, with `¦` as the list separator:
//!
//! ```text
//! rule   := casing ";" body
//! casing := seg ("¦" seg)*
//! seg    := ("↑" | "↓") position
//! body   := "d" ops "¦" ops
//!         | "a" literal
//! ops    := ("→" | "-" | "+" char)*
//! ```
//!
//! Edit ops are scanned greedily left to right and `+` always consumes the
//! next character, so `+¦` inserts a literal `¦`; the script separator is the
//! first `¦` found at an op boundary. An absolute body extends to the end of
//! the string. Errors carry the byte offset of the offending character.

use thiserror::Error;

use super::casing::{CasingScript, CasingSegment, SegmentCase};
use super::edit::{EditOp, EditScript};
use super::rule::{LemmaRule, RuleBody};

const SEPARATOR: char = '¦';

/// Parse failure with the byte offset where scanning stopped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("byte {offset}: {kind}")]
pub struct CodecError {
    pub offset: usize,
    pub kind: CodecErrorKind,
}

impl CodecError {
    fn new(offset: usize, kind: CodecErrorKind) -> Self {
        CodecError { offset, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecErrorKind {
    #[error("expected casing marker `↑` or `↓`")]
    ExpectedCasingMarker,
    #[error("expected a decimal casing position")]
    ExpectedPosition,
    #[error("casing position does not fit in usize")]
    PositionOverflow,
    #[error("first casing position must be 0, found {0}")]
    FirstPositionNotZero(usize),
    #[error("casing positions must increase, found {prev} then {next}")]
    PositionNotIncreasing { prev: usize, next: usize },
    #[error("expected `;` or `¦` after a casing segment")]
    ExpectedSemicolon,
    #[error("missing rule body after `;`")]
    MissingBody,
    #[error("unknown body marker `{0}`, expected `d` or `a`")]
    UnknownBodyMarker(char),
    #[error("unknown edit op `{0}`, expected `→`, `-` or `+`")]
    UnknownEditOp(char),
    #[error("`+` needs a character to insert")]
    DanglingInsert,
    #[error("diff body is missing the `¦` between prefix and suffix")]
    MissingSeparator,
    #[error("unexpected extra `¦` separator")]
    UnexpectedSeparator,
    #[error("absolute body must not be empty")]
    EmptyLiteral,
}

/// Parses the canonical rule syntax; [`LemmaRule::to_string`] inverts it.
pub fn parse_rule(s: &str) -> Result<LemmaRule, CodecError> {
    let mut scanner = Scanner { src: s, offset: 0 };
    let casing = scanner.parse_casing()?;
    let marker_at = scanner.offset;
    let body = match scanner.bump() {
        None => return Err(CodecError::new(marker_at, CodecErrorKind::MissingBody)),
        Some('d') => {
            let mut prefix = Vec::new();
            if scanner.scan_ops(&mut prefix)?.is_none() {
                return Err(CodecError::new(
                    scanner.offset,
                    CodecErrorKind::MissingSeparator,
                ));
            }
            let mut suffix = Vec::new();
            if let Some(at) = scanner.scan_ops(&mut suffix)? {
                return Err(CodecError::new(at, CodecErrorKind::UnexpectedSeparator));
            }
            RuleBody::Diff {
                prefix: EditScript::new(prefix),
                suffix: EditScript::new(suffix),
            }
        }
        Some('a') => {
            let literal = &scanner.src[scanner.offset..];
            if literal.is_empty() {
                return Err(CodecError::new(
                    scanner.offset,
                    CodecErrorKind::EmptyLiteral,
                ));
            }
            RuleBody::Absolute {
                literal: literal.to_string(),
            }
        }
        Some(c) => {
            return Err(CodecError::new(
                marker_at,
                CodecErrorKind::UnknownBodyMarker(c),
            ))
        }
    };
    Ok(LemmaRule { casing, body })
}

/// Parses a bare op sequence with no separator, for [`EditScript`]'s
/// [`std::str::FromStr`].
pub(crate) fn parse_ops_standalone(s: &str) -> Result<EditScript, CodecError> {
    let mut scanner = Scanner { src: s, offset: 0 };
    let mut ops = Vec::new();
    if let Some(at) = scanner.scan_ops(&mut ops)? {
        return Err(CodecError::new(at, CodecErrorKind::UnexpectedSeparator));
    }
    Ok(EditScript::new(ops))
}

struct Scanner<'a> {
    src: &'a str,
    offset: usize,
}

impl Scanner<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.offset..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.offset += c.len_utf8();
        Some(c)
    }

    fn parse_casing(&mut self) -> Result<CasingScript, CodecError> {
        let mut segments: Vec<CasingSegment> = Vec::new();
        loop {
            let marker_at = self.offset;
            let case = match self.bump() {
                Some('↑') => SegmentCase::Upper,
                Some('↓') => SegmentCase::Lower,
                _ => {
                    return Err(CodecError::new(
                        marker_at,
                        CodecErrorKind::ExpectedCasingMarker,
                    ))
                }
            };
            let position_at = self.offset;
            let position = self.parse_position()?;
            match segments.last() {
                None if position != 0 => {
                    return Err(CodecError::new(
                        position_at,
                        CodecErrorKind::FirstPositionNotZero(position),
                    ))
                }
                Some(prev) if prev.position >= position => {
                    return Err(CodecError::new(
                        position_at,
                        CodecErrorKind::PositionNotIncreasing {
                            prev: prev.position,
                            next: position,
                        },
                    ))
                }
                _ => {}
            }
            segments.push(CasingSegment { position, case });
            let delim_at = self.offset;
            match self.bump() {
                Some(';') => return Ok(CasingScript::from_segments(segments)),
                Some(SEPARATOR) => continue,
                _ => return Err(CodecError::new(delim_at, CodecErrorKind::ExpectedSemicolon)),
            }
        }
    }

    fn parse_position(&mut self) -> Result<usize, CodecError> {
        let start = self.offset;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        let digits = &self.src[start..self.offset];
        if digits.is_empty() {
            return Err(CodecError::new(start, CodecErrorKind::ExpectedPosition));
        }
        digits
            .parse()
            .map_err(|_| CodecError::new(start, CodecErrorKind::PositionOverflow))
    }

    /// Scans ops until the end of input (`None`) or a `¦` at an op boundary,
    /// which is consumed and reported with its offset.
    fn scan_ops(&mut self, ops: &mut Vec<EditOp>) -> Result<Option<usize>, CodecError> {
        loop {
            let at = self.offset;
            match self.bump() {
                None => return Ok(None),
                Some('→') => ops.push(EditOp::Copy),
                Some('-') => ops.push(EditOp::Delete),
                Some('+') => match self.bump() {
                    Some(c) => ops.push(EditOp::Insert(c)),
                    None => return Err(CodecError::new(at, CodecErrorKind::DanglingInsert)),
                },
                Some(SEPARATOR) => return Ok(Some(at)),
                Some(c) => return Err(CodecError::new(at, CodecErrorKind::UnknownEditOp(c))),
            }
        }
    }
}
