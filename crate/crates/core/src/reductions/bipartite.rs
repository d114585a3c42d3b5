use crate::assignment::{AgentRankingDoc, AssignmentDoc};
use crate::error::{Error, Result};
use crate::profile::check_unique;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// `{"left": [..], "right": [..], "edges": [[l, r], ..]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BipartiteDoc {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteInstance {
    pub left: Vec<String>,
    pub right: Vec<String>,
    /// `(left index, right index)`, deduplicated and sorted.
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteInstance {
    pub fn new(left: Vec<String>, right: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self> {
        check_unique(left.iter().map(String::as_str))?;
        check_unique(right.iter().map(String::as_str))?;
        if let Some(&(l, r)) = edges.iter().find(|&&(l, r)| l >= left.len() || r >= right.len()) {
            return Err(Error::InvalidInstance(format!("edge ({l}, {r}) has no endpoint")));
        }
        let mut edges = edges;
        edges.sort_unstable();
        edges.dedup();
        Ok(BipartiteInstance { left, right, edges })
    }

    pub fn from_doc(doc: &BipartiteDoc) -> Result<Self> {
        let find = |side: &[String], label: &str| {
            side.iter()
                .position(|x| x == label)
                .ok_or_else(|| Error::InvalidInstance(format!("unknown vertex `{label}`")))
        };
        let edges = doc
            .edges
            .iter()
            .map(|(l, r)| Ok((find(&doc.left, l)?, find(&doc.right, r)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(doc.left.clone(), doc.right.clone(), edges)
    }

    pub fn neighbours(&self, l: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.0 == l).map(|e| e.1).collect()
    }
}

pub fn parse_bipartite(text: &str) -> Result<BipartiteInstance> {
    let doc: BipartiteDoc =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    BipartiteInstance::from_doc(&doc)
}

/// Whether every left vertex can be matched, by augmenting paths.
/// `adj[l]` lists the right vertices adjacent to `l`.
pub fn has_saturating_matching(adj: &[Vec<usize>], right: usize) -> bool {
    fn augment(l: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &r in &adj[l] {
            if std::mem::replace(&mut seen[r], true) {
                continue;
            }
            if owner[r].is_none_or(|other| augment(other, adj, seen, owner)) {
                owner[r] = Some(l);
                return true;
            }
        }
        false
    }
    if adj.len() > right {
        return false;
    }
    let mut owner = vec![None; right];
    (0..adj.len()).all(|l| {
        let mut seen = vec![false; right];
        augment(l, adj, &mut seen, &mut owner)
    })
}

/// Agents ranking a house set that need not match the agent count, as
/// produced from a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HouseFragment {
    pub agents: Vec<String>,
    pub houses: Vec<String>,
    /// House indices, best first; each a permutation of all houses.
    pub rankings: Vec<Vec<usize>>,
}

impl HouseFragment {
    /// Houses `agent` strictly prefers to `h`.
    pub fn better_than(&self, agent: usize, h: usize) -> &[usize] {
        better_than(&self.rankings[agent], h)
    }

    /// Number of `j`-subsets of agents (never including `exclude`) that can
    /// all be given distinct houses they prefer to `h`.
    pub fn count_better_subsets(
        &self,
        h: usize,
        exclude: Option<usize>,
        j: usize,
        guard: usize,
    ) -> Result<u64> {
        count_better_subsets(&self.rankings, self.houses.len(), h, exclude, j, guard)
    }

    pub fn to_json_value(&self, distinguished: usize) -> Value {
        let doc = AssignmentDoc {
            houses: self.houses.clone(),
            agents: self
                .agents
                .iter()
                .zip(&self.rankings)
                .map(|(name, r)| AgentRankingDoc {
                    name: name.clone(),
                    ranking: r.iter().map(|&h| self.houses[h].clone()).collect(),
                })
                .collect(),
        };
        json!({
            "houses": doc.houses,
            "agents": doc.agents,
            "distinguished": self.houses[distinguished],
        })
    }
}

pub(crate) fn better_than(ranking: &[usize], h: usize) -> &[usize] {
    let cut = ranking.iter().position(|&x| x == h).unwrap_or(ranking.len());
    &ranking[..cut]
}

pub(crate) fn count_better_subsets(
    rankings: &[Vec<usize>],
    houses: usize,
    h: usize,
    exclude: Option<usize>,
    j: usize,
    guard: usize,
) -> Result<u64> {
    let eligible: Vec<usize> = (0..rankings.len()).filter(|&i| Some(i) != exclude).collect();
    let e = eligible.len();
    if e > guard || e >= 64 {
        return Err(Error::GuardExceeded {
            n: e,
            limit: guard.min(63),
        });
    }
    if j > e {
        return Ok(0);
    }
    Ok((0u64..1 << e)
        .filter(|mask| mask.count_ones() as usize == j)
        .filter(|mask| {
            let adj: Vec<Vec<usize>> = (0..e)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| better_than(&rankings[eligible[b]], h).to_vec())
                .collect();
            has_saturating_matching(&adj, houses)
        })
        .count() as u64)
}

/// Agents are the left vertices, houses the right vertices plus a new house
/// `h`. Each agent ranks its neighbours (label order) above `h` and the other
/// houses (label order) below it. Returns the fragment and `h`'s index.
pub fn bipartite_to_assignment(g: &BipartiteInstance) -> (HouseFragment, usize) {
    let mut h_label = "h".to_string();
    while g.right.contains(&h_label) {
        h_label.push('*');
    }
    let h = g.right.len();
    let mut houses = g.right.clone();
    houses.push(h_label);
    let rankings = (0..g.left.len())
        .map(|l| {
            let near = g.neighbours(l);
            let mut ranking = near.clone();
            ranking.push(h);
            ranking.extend((0..g.right.len()).filter(|r| !near.contains(r)));
            ranking
        })
        .collect();
    (
        HouseFragment {
            agents: g.left.clone(),
            houses,
            rankings,
        },
        h,
    )
}

/// Number of non-empty left subsets `B` such that every vertex of `B` can be
/// matched into the right side.
pub fn matchable_subsets_bruteforce(g: &BipartiteInstance, guard: usize) -> Result<u64> {
    let s = g.left.len();
    if s > guard || s >= 64 {
        return Err(Error::GuardExceeded { n: s, limit: guard.min(63) });
    }
    let adj: Vec<Vec<usize>> = (0..s).map(|l| g.neighbours(l)).collect();
    Ok((1u64..1 << s)
        .filter(|mask| {
            let sub: Vec<Vec<usize>> = (0..s)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| adj[b].clone())
                .collect();
            has_saturating_matching(&sub, g.right.len())
        })
        .count() as u64)
}
