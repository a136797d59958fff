//! Casing scripts.
//!
//! A casing script records where a lemma switches between uppercase and
//! lowercase, so that edit scripts can work on lowercased text and
//! capitalization is restored afterwards. Segments are rendered `↑i` or
//! `↓i` joined by `¦`; each governs the character positions from its index
//! up to the next segment (or the end of the produced lemma).

use std::fmt;

use crate::text;

/// Case of one segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SegmentCase {
    Upper,
    Lower,
}

/// A run of characters sharing one case, starting at `position` (a character
/// index counted from the start of the lemma).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CasingSegment {
    pub position: usize,
    pub case: SegmentCase,
}

/// Positional re-casing directives applied to a produced lemma.
///
/// Invariants: at least one segment, the first at position 0, positions
/// strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CasingScript {
    segments: Vec<CasingSegment>,
}

impl CasingScript {
    /// All-lowercase casing, rendered `↓0`.
    pub fn all_lower() -> Self {
        CasingScript {
            segments: vec![CasingSegment {
                position: 0,
                case: SegmentCase::Lower,
            }],
        }
    }

    pub(crate) fn from_segments(segments: Vec<CasingSegment>) -> Self {
        debug_assert!(!segments.is_empty() && segments[0].position == 0);
        CasingScript { segments }
    }

    /// Reads the casing off a lemma: a character counts as uppercase when
    /// lowering and re-uppering reproduces it exactly (see
    /// [`text::is_recased_upper`]); everything else is lowercase.
    pub fn from_lemma(lemma: &str) -> Self {
        let mut segments = Vec::new();
        for (i, c) in lemma.chars().enumerate() {
            let case = if text::is_recased_upper(c) {
                SegmentCase::Upper
            } else {
                SegmentCase::Lower
            };
            if segments.last().map(|s: &CasingSegment| s.case) != Some(case) {
                segments.push(CasingSegment { position: i, case });
            }
        }
        if segments.is_empty() {
            return CasingScript::all_lower();
        }
        CasingScript { segments }
    }

    pub fn segments(&self) -> &[CasingSegment] {
        &self.segments
    }

    pub fn is_all_lower(&self) -> bool {
        self.segments.len() == 1 && self.segments[0].case == SegmentCase::Lower
    }

    /// Re-cases a produced lemma. Upper segments uppercase their characters;
    /// lower segments leave them untouched (the produced text is already
    /// lowercase except for characters deliberately carried verbatim).
    /// Segment positions past the end of `s` are ignored.
    pub fn apply(&self, s: &str) -> String {
        if self.is_all_lower() {
            return s.to_owned();
        }
        let chars: Vec<char> = s.chars().collect();
        let mut out = String::with_capacity(s.len());
        for (k, seg) in self.segments.iter().enumerate() {
            let start = seg.position.min(chars.len());
            let end = self
                .segments
                .get(k + 1)
                .map(|next| next.position)
                .unwrap_or(chars.len())
                .min(chars.len());
            for &c in &chars[start..end] {
                out.push(match seg.case {
                    SegmentCase::Upper => text::upper_char(c),
                    SegmentCase::Lower => c,
                });
            }
        }
        out
    }
}

impl fmt::Display for CasingScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, seg) in self.segments.iter().enumerate() {
            if k > 0 {
                f.write_str("¦")?;
            }
            let arrow = match seg.case {
                SegmentCase::Upper => "↑",
                SegmentCase::Lower => "↓",
            };
            write!(f, "{arrow}{}", seg.position)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowercase_lemma_is_a_single_segment() {
        let c = CasingScript::from_lemma("vabandama");
        assert_eq!(c.to_string(), "↓0");
        assert!(c.is_all_lower());
    }

    #[test]
    fn capitalized_lemma_has_two_segments() {
        let c = CasingScript::from_lemma("Tallinn");
        assert_eq!(c.to_string(), "↑0¦↓1");
        assert_eq!(c.apply("tallinn"), "Tallinn");
    }

    #[test]
    fn all_caps_and_mixed_case() {
        assert_eq!(CasingScript::from_lemma("NATO").to_string(), "↑0");
        assert_eq!(CasingScript::from_lemma("NATO").apply("nato"), "NATO");

        let mc = CasingScript::from_lemma("McDonald");
        assert_eq!(mc.to_string(), "↑0¦↓1¦↑2¦↓3");
        assert_eq!(mc.apply("mcdonald"), "McDonald");
    }

    #[test]
    fn single_uppercase_character() {
        let c = CasingScript::from_lemma("X");
        assert_eq!(c.to_string(), "↑0");
        assert_eq!(c.apply("x"), "X");
    }

    #[test]
    fn positions_past_the_produced_lemma_are_ignored() {
        let c = CasingScript::from_lemma("abcDef");
        assert_eq!(c.to_string(), "↓0¦↑3¦↓4");
        assert_eq!(c.apply("ab"), "ab");
    }

    #[test]
    fn lower_segments_leave_characters_untouched() {
        // A character classified caseless must survive re-casing verbatim.
        let c = CasingScript::from_lemma("ẞx");
        assert!(c.is_all_lower());
        assert_eq!(c.apply("ẞx"), "ẞx");
    }
}
