//! Frequency statistics over the rules induced from an instance list.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::rule::{induce_rule, InduceError};
use crate::conllu::Instance;

/// How much one instance contributes to the frequency table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Weighting {
    /// Weight by [`Instance::count`] (token frequency).
    Token,
    /// Every instance counts once.
    Type,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RuleCount {
    pub count: u64,
    /// Fraction of [`RuleStats::total`].
    pub share: f64,
}

/// Rule-string frequency table; counts sum to `total` and shares sum to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleStats {
    pub total: u64,
    pub table: BTreeMap<String, RuleCount>,
}

impl RuleStats {
    pub fn distinct_rules(&self) -> usize {
        self.table.len()
    }

    /// The `k` most frequent rules (all of them when `k` is 0), ordered by
    /// descending count, ties broken by rule string.
    pub fn top(&self, k: usize) -> Vec<(&str, RuleCount)> {
        let mut rows: Vec<(&str, RuleCount)> =
            self.table.iter().map(|(r, c)| (r.as_str(), *c)).collect();
        rows.sort_by(|(ra, ca), (rb, cb)| cb.count.cmp(&ca.count).then_with(|| ra.cmp(rb)));
        if k > 0 {
            rows.truncate(k);
        }
        rows
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("cannot compute rule statistics for an empty instance list")]
    NoInstances,
    #[error("instance `{form}` → `{lemma}`{located}")]
    Induce {
        form: String,
        lemma: String,
        /// Pre-rendered location of the first occurrence, or empty.
        located: String,
        source: InduceError,
    },
}

/// Induces a rule per instance and tabulates rule-string frequencies.
pub fn ruleset_stats(
    instances: &[Instance],
    allow_copy: bool,
    weighting: Weighting,
) -> Result<RuleStats, StatsError> {
    if instances.is_empty() {
        return Err(StatsError::NoInstances);
    }
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut total: u64 = 0;
    for instance in instances {
        let rule = induce_rule(&instance.form, &instance.lemma, allow_copy).map_err(|source| {
            StatsError::Induce {
                form: instance.form.clone(),
                lemma: instance.lemma.clone(),
                located: match instance.origin.first() {
                    Some((sent, token)) => format!(" (sentence {sent}, token {token})"),
                    None => String::new(),
                },
                source,
            }
        })?;
        let weight = match weighting {
            Weighting::Token => instance.count,
            Weighting::Type => 1,
        };
        *counts.entry(rule.to_string()).or_insert(0) += weight;
        total += weight;
    }
    let table = counts
        .into_iter()
        .map(|(rule, count)| {
            (
                rule,
                RuleCount {
                    count,
                    share: count as f64 / total as f64,
                },
            )
        })
        .collect();
    Ok(RuleStats { total, table })
}
