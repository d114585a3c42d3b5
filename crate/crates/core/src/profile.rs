//! Preference profiles and their JSON form.
//!
//! ```json
//! {"alternatives": ["a", "b"], "agents": [{"name": "1", "ranking": [["a"], ["b"]]}]}
//! ```
//!
//! `ranking` lists indifference classes from best to worst and must partition
//! the alternative set.

use crate::error::{Error, Result};
use crate::preference::{Alternative, PreferenceRelation};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileDoc {
    pub alternatives: Vec<String>,
    pub agents: Vec<AgentDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AgentDoc {
    pub name: String,
    pub ranking: Vec<Vec<String>>,
}

/// A validated profile: every relation partitions the same alternatives and
/// no two alternatives are tied by every agent, so serial dictatorship always
/// ends in a single alternative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    alternatives: Vec<Alternative>,
    names: Vec<String>,
    relations: Vec<PreferenceRelation>,
}

impl Profile {
    pub fn new(
        alternatives: Vec<Alternative>,
        names: Vec<String>,
        relations: Vec<PreferenceRelation>,
    ) -> Result<Self> {
        if names.len() != relations.len() {
            return Err(Error::DimensionMismatch {
                expected: relations.len(),
                got: names.len(),
            });
        }
        check_unique(alternatives.iter().map(Alternative::as_str))?;
        validate_profile(&alternatives, &relations)?;
        Ok(Profile {
            alternatives,
            names,
            relations,
        })
    }

    /// Profile with agents named `1..=n`.
    pub fn from_relations(labels: &[&str], relations: Vec<PreferenceRelation>) -> Result<Self> {
        let alternatives = labels
            .iter()
            .map(|l| Alternative::new(*l))
            .collect::<Result<Vec<_>>>()?;
        let names = (1..=relations.len()).map(|i| i.to_string()).collect();
        Self::new(alternatives, names, relations)
    }

    pub fn from_doc(doc: &ProfileDoc) -> Result<Self> {
        let alternatives = doc
            .alternatives
            .iter()
            .map(|l| Alternative::new(l.clone()))
            .collect::<Result<Vec<_>>>()?;
        check_unique(doc.alternatives.iter().map(String::as_str))?;
        let index: HashMap<&str, usize> = doc
            .alternatives
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let m = alternatives.len();
        let mut names = Vec::with_capacity(doc.agents.len());
        let mut relations = Vec::with_capacity(doc.agents.len());
        for agent in &doc.agents {
            let classes = agent
                .ranking
                .iter()
                .map(|class| {
                    class
                        .iter()
                        .map(|l| {
                            index
                                .get(l.as_str())
                                .copied()
                                .ok_or_else(|| Error::UnknownAlternative(l.clone()))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let relation = PreferenceRelation::new(classes, m).map_err(|e| match e {
                Error::NotAPartition { reason, .. } => Error::NotAPartition {
                    agent: agent.name.clone(),
                    reason,
                },
                other => other,
            })?;
            names.push(agent.name.clone());
            relations.push(relation);
        }
        Self::new(alternatives, names, relations)
    }

    pub fn to_doc(&self) -> ProfileDoc {
        ProfileDoc {
            alternatives: self.alternatives.iter().map(|a| a.to_string()).collect(),
            agents: self
                .names
                .iter()
                .zip(&self.relations)
                .map(|(name, r)| AgentDoc {
                    name: name.clone(),
                    ranking: r
                        .classes()
                        .iter()
                        .map(|c| c.iter().map(|&a| self.alternatives[a].to_string()).collect())
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("profile serializes")
    }

    pub fn num_agents(&self) -> usize {
        self.relations.len()
    }

    pub fn num_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn alternatives(&self) -> &[Alternative] {
        &self.alternatives
    }

    pub fn alternative(&self, a: usize) -> &Alternative {
        &self.alternatives[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[PreferenceRelation] {
        &self.relations
    }

    pub fn relation(&self, agent: usize) -> &PreferenceRelation {
        &self.relations[agent]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.alternatives
            .iter()
            .position(|a| a.as_str() == label)
            .ok_or_else(|| Error::UnknownAlternative(label.to_string()))
    }

    /// Resolves an agent by name, falling back to a 1-based position.
    pub fn agent_index(&self, key: &str) -> Result<usize> {
        resolve_agent(&self.names, key)
    }

    pub(crate) fn check_alternative(&self, a: usize) -> Result<()> {
        if a < self.alternatives.len() {
            Ok(())
        } else {
            Err(Error::UnknownAlternative(format!("#{a}")))
        }
    }
}

pub(crate) fn resolve_agent(names: &[String], key: &str) -> Result<usize> {
    if let Some(i) = names.iter().position(|n| n == key) {
        return Ok(i);
    }
    match key.parse::<usize>() {
        Ok(i) if (1..=names.len()).contains(&i) => Ok(i - 1),
        _ => Err(Error::UnknownAgent(key.to_string())),
    }
}

pub(crate) fn check_unique<'a>(labels: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(Error::DuplicateLabel(l.to_string()));
        }
    }
    Ok(())
}

pub fn parse_profile(text: &str) -> Result<Profile> {
    let doc: ProfileDoc =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    Profile::from_doc(&doc)
}

/// Checks that every relation ranges over the alternative set and that no two
/// distinct alternatives share an indifference class for every agent.
pub fn validate_profile(alternatives: &[Alternative], relations: &[PreferenceRelation]) -> Result<()> {
    let m = alternatives.len();
    if m == 0 {
        return Err(Error::Malformed("profile has no alternatives".into()));
    }
    for (i, r) in relations.iter().enumerate() {
        if r.num_alternatives() != m {
            return Err(Error::NotAPartition {
                agent: (i + 1).to_string(),
                reason: format!("ranks {} alternatives, expected {m}", r.num_alternatives()),
            });
        }
    }
    for a in 0..m {
        for b in a + 1..m {
            if relations.iter().all(|r| r.indifferent(a, b)) {
                return Err(Error::UniversalIndifference(
                    alternatives[a].to_string(),
                    alternatives[b].to_string(),
                ));
            }
        }
    }
    Ok(())
}

/// Whether some alternative is weakly preferred to `a` by everyone and
/// strictly by someone.
pub fn pareto_dominated(profile: &Profile, a: usize) -> Result<bool> {
    profile.check_alternative(a)?;
    let rels = profile.relations();
    Ok((0..profile.num_alternatives()).any(|b| {
        b != a
            && rels.iter().all(|r| r.weakly_prefers(b, a))
            && rels.iter().any(|r| r.strictly_prefers(b, a))
    }))
}
