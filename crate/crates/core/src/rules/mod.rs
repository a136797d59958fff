//! The pattern formalism: minimal edit scripts, lemma-rule induction and
//! application, the textual rule codec, rule equivalence, and ruleset
//! statistics.

mod casing;
mod codec;
mod edit;
mod rule;
mod stats;

pub use casing::{CasingScript, CasingSegment, SegmentCase};
pub use codec::{parse_rule, CodecError, CodecErrorKind};
pub use edit::{min_edit_script, EditOp, EditScript};
pub use rule::{
    apply_rule, induce_rule, rules_equivalent_on, ApplyError, InduceError, LemmaRule, RuleBody,
    RuleComparison, ScriptSide,
};
pub use stats::{ruleset_stats, RuleCount, RuleStats, StatsError, Weighting};
