use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::profile::{check_unique, resolve_agent};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// `{"houses": [..], "agents": [{"name": .., "ranking": [house, ..]}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssignmentDoc {
    pub houses: Vec<String>,
    pub agents: Vec<AgentRankingDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AgentRankingDoc {
    pub name: String,
    pub ranking: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssignmentProblem {
    houses: Vec<String>,
    names: Vec<String>,
    /// House indices, best first.
    rankings: Vec<Vec<usize>>,
    /// `position[i][h]` is where house `h` sits in agent `i`'s ranking.
    position: Vec<Vec<usize>>,
}

impl AssignmentProblem {
    /// Requires as many houses as agents and a full linear ranking per agent.
    pub fn new(houses: Vec<String>, names: Vec<String>, rankings: Vec<Vec<usize>>) -> Result<Self> {
        let n = houses.len();
        if names.len() != rankings.len() {
            return Err(Error::DimensionMismatch {
                expected: rankings.len(),
                got: names.len(),
            });
        }
        if rankings.len() != n {
            return Err(Error::InvalidProblem(format!(
                "{} agents but {n} houses",
                rankings.len()
            )));
        }
        check_unique(houses.iter().map(String::as_str))?;
        if houses.iter().any(String::is_empty) {
            return Err(Error::Malformed("empty house label".into()));
        }
        let mut position = Vec::with_capacity(n);
        for (i, ranking) in rankings.iter().enumerate() {
            let mut pos = vec![usize::MAX; n];
            for (p, &h) in ranking.iter().enumerate() {
                if h >= n || pos[h] != usize::MAX {
                    return Err(Error::InvalidProblem(format!(
                        "ranking of agent {} is not a linear order of the houses",
                        names[i]
                    )));
                }
                pos[h] = p;
            }
            if ranking.len() != n {
                return Err(Error::InvalidProblem(format!(
                    "ranking of agent {} omits houses",
                    names[i]
                )));
            }
            position.push(pos);
        }
        Ok(AssignmentProblem {
            houses,
            names,
            rankings,
            position,
        })
    }

    /// Houses `h1..hn` and agents `1..n`.
    pub fn from_rankings(rankings: Vec<Vec<usize>>) -> Result<Self> {
        let n = rankings.len();
        Self::new(
            (1..=n).map(|h| format!("h{h}")).collect(),
            (1..=n).map(|i| i.to_string()).collect(),
            rankings,
        )
    }

    pub fn from_doc(doc: &AssignmentDoc) -> Result<Self> {
        check_unique(doc.houses.iter().map(String::as_str))?;
        let index: HashMap<&str, usize> = doc
            .houses
            .iter()
            .enumerate()
            .map(|(i, h)| (h.as_str(), i))
            .collect();
        let rankings = doc
            .agents
            .iter()
            .map(|a| {
                a.ranking
                    .iter()
                    .map(|h| {
                        index
                            .get(h.as_str())
                            .copied()
                            .ok_or_else(|| Error::InvalidProblem(format!("unknown house `{h}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(
            doc.houses.clone(),
            doc.agents.iter().map(|a| a.name.clone()).collect(),
            rankings,
        )
    }

    pub fn to_doc(&self) -> AssignmentDoc {
        AssignmentDoc {
            houses: self.houses.clone(),
            agents: self
                .names
                .iter()
                .zip(&self.rankings)
                .map(|(name, r)| AgentRankingDoc {
                    name: name.clone(),
                    ranking: r.iter().map(|&h| self.houses[h].clone()).collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("problem serializes")
    }

    pub fn len(&self) -> usize {
        self.houses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.houses.is_empty()
    }

    pub fn houses(&self) -> &[String] {
        &self.houses
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ranking(&self, agent: usize) -> &[usize] {
        &self.rankings[agent]
    }

    pub fn rankings(&self) -> &[Vec<usize>] {
        &self.rankings
    }

    pub fn top(&self, agent: usize) -> usize {
        self.rankings[agent][0]
    }

    pub fn prefers(&self, agent: usize, h: usize, other: usize) -> bool {
        self.position[agent][h] < self.position[agent][other]
    }

    pub fn house_index(&self, label: &str) -> Result<usize> {
        self.houses
            .iter()
            .position(|h| h == label)
            .ok_or_else(|| Error::InvalidProblem(format!("unknown house `{label}`")))
    }

    /// Resolves an agent by name, falling back to a 1-based position.
    pub fn agent_index(&self, key: &str) -> Result<usize> {
        resolve_agent(&self.names, key)
    }

    /// Best house of `agent` among those with `available[h]` set.
    pub(crate) fn best_available(&self, agent: usize, available: impl Fn(usize) -> bool) -> usize {
        *self.rankings[agent]
            .iter()
            .find(|&&h| available(h))
            .expect("a house remains for every unserved agent")
    }
}

pub fn parse_assignment_problem(text: &str) -> Result<AssignmentProblem> {
    let doc: AssignmentDoc =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    AssignmentProblem::from_doc(&doc)
}

/// Agent-to-house bijection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeterministicAssignment(Vec<usize>);

impl DeterministicAssignment {
    /// `house_of[i]` is agent `i`'s house; must be a bijection on `0..n`.
    pub fn new(house_of: Vec<usize>) -> Result<Self> {
        let n = house_of.len();
        let mut taken = vec![false; n];
        for (i, &h) in house_of.iter().enumerate() {
            if h >= n {
                return Err(Error::NotABijection(format!("agent {} has house #{h}", i + 1)));
            }
            if std::mem::replace(&mut taken[h], true) {
                return Err(Error::NotABijection(format!("house #{} assigned twice", h + 1)));
            }
        }
        Ok(DeterministicAssignment(house_of))
    }

    /// From house labels listed in agent order.
    pub fn from_labels(problem: &AssignmentProblem, labels: &[String]) -> Result<Self> {
        if labels.len() != problem.len() {
            return Err(Error::NotABijection(format!(
                "{} houses listed for {} agents",
                labels.len(),
                problem.len()
            )));
        }
        let house_of = labels
            .iter()
            .map(|l| problem.house_index(l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(house_of)
    }

    pub fn house_of(&self, agent: usize) -> usize {
        self.0[agent]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Serial dictatorship over houses.
pub fn sd_assign(problem: &AssignmentProblem, perm: &Permutation) -> Result<DeterministicAssignment> {
    if perm.len() != problem.len() {
        return Err(Error::InvalidPermutation(format!(
            "permutation of {} agents for {} agents",
            perm.len(),
            problem.len()
        )));
    }
    let mut house_of = vec![0; problem.len()];
    sd_assign_into(problem, perm.as_slice(), &mut house_of);
    Ok(DeterministicAssignment(house_of))
}

pub(crate) fn sd_assign_into(problem: &AssignmentProblem, order: &[usize], house_of: &mut [usize]) {
    let mut taken = vec![false; problem.len()];
    for &i in order {
        let h = problem.best_available(i, |h| !taken[h]);
        taken[h] = true;
        house_of[i] = h;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(xs: &[usize]) -> Permutation {
        Permutation::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn sd_assign_examples() {
        let same = AssignmentProblem::from_rankings(vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(sd_assign(&same, &perm(&[0, 1])).unwrap().as_slice(), &[0, 1]);

        let apart = AssignmentProblem::from_rankings(vec![vec![0, 1], vec![1, 0]]).unwrap();
        for order in [[0, 1], [1, 0]] {
            assert_eq!(sd_assign(&apart, &perm(&order)).unwrap().as_slice(), &[0, 1]);
        }

        let three =
            AssignmentProblem::from_rankings(vec![vec![0, 1, 2], vec![0, 2, 1], vec![2, 1, 0]])
                .unwrap();
        let got = sd_assign(&three, &perm(&[1, 0, 2])).unwrap();
        assert_eq!(got.house_of(1), 0);
        assert_eq!(got.house_of(0), 1);
    }

    #[test]
    fn problem_validation() {
        assert!(AssignmentProblem::from_rankings(vec![vec![0, 0], vec![0, 1]]).is_err());
        assert!(AssignmentProblem::from_rankings(vec![vec![0], vec![0, 1]]).is_err());
        let err = parse_assignment_problem(
            r#"{"houses":["x","y","z"],"agents":[{"name":"1","ranking":["x","y","z"]}]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidProblem(_)), "{err}");
    }

    #[test]
    fn parse_round_trip() {
        let text = r#"{"houses":["x","y"],"agents":[{"name":"ann","ranking":["y","x"]},{"name":"bo","ranking":["x","y"]}]}"#;
        let p = parse_assignment_problem(text).unwrap();
        assert_eq!(p.top(0), 1);
        assert_eq!(p.to_json(), text);
    }

    #[test]
    fn bijection_required() {
        assert!(matches!(
            DeterministicAssignment::new(vec![1, 1]),
            Err(Error::NotABijection(_))
        ));
        assert!(DeterministicAssignment::new(vec![1, 0]).is_ok());
    }
}
