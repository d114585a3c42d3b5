use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::math::factorials;
use crate::preference::{Alternative, PreferenceRelation};
use crate::profile::{check_unique, Profile};
use crate::rational::{self, Rational};
use crate::voting::rsd_exact_memo;
use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::factorial::det_nonzero;
use super::linear::FactorialSystem;

/// `{"universe": [..], "subsets": [[..], ..]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetCoverDoc {
    pub universe: Vec<String>,
    pub subsets: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    universe: Vec<String>,
    subsets: Vec<BitSet>,
}

impl SetCoverInstance {
    pub fn new(universe: Vec<String>, subsets: Vec<Vec<usize>>) -> Result<Self> {
        check_unique(universe.iter().map(String::as_str))?;
        if universe.iter().any(String::is_empty) {
            return Err(Error::Malformed("empty universe label".into()));
        }
        if subsets.is_empty() {
            return Err(Error::InvalidInstance("at least one subset is required".into()));
        }
        let u = universe.len();
        let subsets = subsets
            .into_iter()
            .map(|s| {
                if let Some(&bad) = s.iter().find(|&&e| e >= u) {
                    return Err(Error::InvalidInstance(format!("element #{bad} outside universe")));
                }
                Ok(BitSet::from_indices(u, s))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SetCoverInstance { universe, subsets })
    }

    pub fn from_doc(doc: &SetCoverDoc) -> Result<Self> {
        let subsets = doc
            .subsets
            .iter()
            .map(|s| {
                s.iter()
                    .map(|e| {
                        doc.universe.iter().position(|u| u == e).ok_or_else(|| {
                            Error::InvalidInstance(format!("`{e}` is not in the universe"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(doc.universe.clone(), subsets)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn subsets(&self) -> &[BitSet] {
        &self.subsets
    }

    /// Number of subsets.
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    /// A label for the extra alternative that does not clash with `U`.
    fn fresh_label(&self) -> String {
        let mut label = "a".to_string();
        while self.universe.contains(&label) {
            label.push('*');
        }
        label
    }
}

pub fn parse_set_cover(text: &str) -> Result<SetCoverInstance> {
    let doc: SetCoverDoc =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    SetCoverInstance::from_doc(&doc)
}

/// Number of `j`-element subfamilies whose union is the universe.
pub fn count_set_covers_bruteforce(sc: &SetCoverInstance, j: usize, guard: usize) -> Result<u64> {
    let n = sc.len();
    if n > guard || n >= 64 {
        return Err(Error::GuardExceeded { n, limit: guard.min(63) });
    }
    let full = BitSet::full(sc.universe.len());
    Ok((0u64..1 << n)
        .filter(|mask| mask.count_ones() as usize == j)
        .filter(|mask| {
            let mut union = BitSet::empty(sc.universe.len());
            for (i, s) in sc.subsets.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    for e in s.iter() {
                        union.insert(e);
                    }
                }
            }
            union == full
        })
        .count() as u64)
}

/// Profile `R^k` over `U ∪ {a}` with `n + k` agents. Agent `i <= n` puts
/// `(U \ S_i) ∪ {a}` above `S_i`; each of the `k` padding agents puts all of
/// `U` above `a`. Serial dictatorship then picks `a` exactly when the agents
/// ahead of the first padding agent cover `U`.
pub fn build_voting_reduction(sc: &SetCoverInstance, k: usize) -> Result<Profile> {
    let n = sc.len();
    if !(1..=n).contains(&k) {
        return Err(Error::IndexOutOfRange(format!("k = {k} outside 1..={n}")));
    }
    let u = sc.universe.len();
    if u == 0 {
        return Err(Error::InvalidInstance("universe is empty".into()));
    }
    let m = u + 1;
    let a = u;
    let mut relations = Vec::with_capacity(n + k);
    for s in &sc.subsets {
        let mut top: Vec<usize> = (0..u).filter(|&e| !s.contains(e)).collect();
        top.push(a);
        let bottom: Vec<usize> = s.iter().collect();
        let classes = if bottom.is_empty() { vec![top] } else { vec![top, bottom] };
        relations.push(PreferenceRelation::new(classes, m)?);
    }
    let padding = PreferenceRelation::new(vec![(0..u).collect(), vec![a]], m)?;
    relations.extend(std::iter::repeat_n(padding, k));

    let mut alternatives = sc
        .universe
        .iter()
        .map(|l| Alternative::new(l.clone()))
        .collect::<Result<Vec<_>>>()?;
    alternatives.push(Alternative::new(sc.fresh_label())?);
    let names = (1..=n + k).map(|i| i.to_string()).collect();
    Profile::new(alternatives, names, relations)
}

/// The `n x n` system for `x_n..x_1` (in that order). Row `k` has entries
/// `j! (n - j + k - 1)!` and right-hand side `rsd(R^k)(a) (n + k)! / k`.
/// `probs[k - 1]` is `rsd(R^k)(a)`.
pub fn voting_system_rhs(sc: &SetCoverInstance, probs: &[Rational]) -> Result<FactorialSystem> {
    let n = sc.len();
    if probs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: probs.len(),
        });
    }
    let fact = factorials(2 * n);
    let mut matrix = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);
    for k in 1..=n {
        matrix.push(
            (1..=n)
                .rev()
                .map(|j| BigInt::from(&fact[j] * &fact[n - j + k - 1]))
                .collect(),
        );
        let scale = Rational::new(BigInt::from(fact[n + k].clone()), BigInt::from(k));
        rhs.push(&probs[k - 1] * scale);
    }
    let (nonsingular, _) = det_nonzero(&matrix)?;
    if !nonsingular {
        return Err(Error::Singular);
    }
    let unknowns = (1..=n).rev().map(|j| format!("x_{j}")).collect();
    FactorialSystem::new(matrix, rhs, unknowns)
}

/// Solves a system from [`voting_system_rhs`]; returns `x_1..x_n`.
pub fn recover_cover_counts(system: &FactorialSystem) -> Result<Vec<BigUint>> {
    let mut counts = system.solve_counts()?;
    counts.reverse();
    Ok(counts)
}

/// Every artifact of one run of the voting reduction.
#[derive(Debug, Clone)]
pub struct VotingRecovery {
    /// `rsd(R^k)(a)` for `k = 1..n`.
    pub probabilities: Vec<Rational>,
    pub system: FactorialSystem,
    /// Exact solution in the system's unknown order (`x_n..x_1`).
    pub solution: Vec<Rational>,
    /// `x_1..x_n`, or the integrity error when the solution is not integral.
    pub recovered: Result<Vec<BigUint>>,
    /// Brute-force `x_1..x_n`.
    pub brute_force: Vec<u64>,
}

impl VotingRecovery {
    pub fn matches(&self) -> bool {
        match &self.recovered {
            Ok(xs) => xs.iter().zip(&self.brute_force).all(|(x, &b)| *x == BigUint::from(b)),
            Err(_) => false,
        }
    }

    pub fn to_json_value(&self) -> Value {
        let n = self.brute_force.len();
        let rows: Vec<Value> = (0..n)
            .map(|t| {
                let recovered = match &self.recovered {
                    Ok(xs) => Value::String(xs[t].to_string()),
                    Err(_) => Value::Null,
                };
                json!({
                    "unknown": format!("x_{}", t + 1),
                    "exact": rational::format(&self.solution[n - 1 - t]),
                    "recovered": recovered,
                    "brute_force": self.brute_force[t].to_string(),
                })
            })
            .collect();
        json!({
            "probabilities": self.probabilities.iter().map(rational::format).collect::<Vec<_>>(),
            "system": self.system.to_json_value(),
            "solution": self.solution.iter().map(rational::format).collect::<Vec<_>>(),
            "counts": rows,
            "error": self.recovered.as_ref().err().map(|e| e.to_string()),
            "match": self.matches(),
        })
    }
}

/// Builds `R^1..R^n`, computes `rsd(R^k)(a)` exactly, solves for the cover
/// counts and brute-forces them for comparison.
pub fn set_cover_recovery(sc: &SetCoverInstance, guard: usize) -> Result<VotingRecovery> {
    let n = sc.len();
    let brute_force = (1..=n)
        .map(|j| count_set_covers_bruteforce(sc, j, guard))
        .collect::<Result<Vec<_>>>()?;
    let probabilities = (1..=n)
        .into_par_iter()
        .map(|k| {
            let profile = build_voting_reduction(sc, k)?;
            let a = profile.num_alternatives() - 1;
            Ok(rsd_exact_memo(&profile).probability(a).clone())
        })
        .collect::<Result<Vec<_>>>()?;
    let system = voting_system_rhs(sc, &probabilities)?;
    let solution = system.solve()?;
    let recovered = recover_cover_counts(&system);
    Ok(VotingRecovery {
        probabilities,
        system,
        solution,
        recovered,
        brute_force,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_u64;

    fn sc(u: &[&str], subsets: &[&[usize]]) -> SetCoverInstance {
        SetCoverInstance::new(
            u.iter().map(|s| s.to_string()).collect(),
            subsets.iter().map(|s| s.to_vec()).collect(),
        )
        .unwrap()
    }

    fn classes(p: &Profile, agent: usize) -> Vec<Vec<String>> {
        p.to_doc().agents[agent].ranking.clone()
    }

    #[test]
    fn single_element_instance() {
        let inst = sc(&["u1"], &[&[0]]);
        let p = build_voting_reduction(&inst, 1).unwrap();
        assert_eq!(classes(&p, 0), vec![vec!["a"], vec!["u1"]]);
        assert_eq!(classes(&p, 1), vec![vec!["u1"], vec!["a"]]);
        assert_eq!(p.num_agents(), 2);
    }

    #[test]
    fn two_element_instance() {
        let inst = sc(&["u1", "u2"], &[&[0], &[0, 1]]);
        let p = build_voting_reduction(&inst, 1).unwrap();
        assert_eq!(classes(&p, 0), vec![vec!["u2", "a"], vec!["u1"]]);
        assert_eq!(classes(&p, 1), vec![vec!["a"], vec!["u1", "u2"]]);
        assert_eq!(classes(&p, 2), vec![vec!["u1", "u2"], vec!["a"]]);
    }

    #[test]
    fn inseparable_elements_rejected() {
        let inst = sc(&["u1", "u2"], &[&[0, 1]]);
        assert_eq!(
            build_voting_reduction(&inst, 1).unwrap_err(),
            Error::UniversalIndifference("u1".into(), "u2".into())
        );
        assert!(build_voting_reduction(&sc(&["u1"], &[&[0]]), 2).is_err());
    }

    #[test]
    fn fresh_label_avoids_clash() {
        let inst = sc(&["a", "b"], &[&[0], &[1]]);
        let p = build_voting_reduction(&inst, 1).unwrap();
        assert_eq!(p.alternative(2).as_str(), "a*");
    }

    #[test]
    fn brute_force_counts() {
        let one = sc(&["u1"], &[&[0]]);
        assert_eq!(count_set_covers_bruteforce(&one, 1, 20).unwrap(), 1);
        assert_eq!(count_set_covers_bruteforce(&one, 0, 20).unwrap(), 0);
        let two = sc(&["u1", "u2"], &[&[0], &[1]]);
        assert_eq!(count_set_covers_bruteforce(&two, 2, 20).unwrap(), 1);
        assert_eq!(count_set_covers_bruteforce(&two, 1, 20).unwrap(), 0);
        assert!(count_set_covers_bruteforce(&two, 1, 1).unwrap_err().is_guard());
    }

    #[test]
    fn one_by_one_system() {
        let inst = sc(&["u1"], &[&[0]]);
        let sys = voting_system_rhs(&inst, &[from_u64(1, 2)]).unwrap();
        assert_eq!(sys.matrix, vec![vec![BigInt::from(1)]]);
        assert_eq!(sys.rhs, vec![from_u64(1, 1)]);
        assert_eq!(recover_cover_counts(&sys).unwrap(), vec![BigUint::from(1u32)]);
    }

    #[test]
    fn two_by_two_matrix_entries() {
        let inst = sc(&["u1", "u2"], &[&[0], &[1]]);
        let sys = voting_system_rhs(&inst, &[from_u64(0, 1), from_u64(0, 1)]).unwrap();
        let expect: Vec<Vec<BigInt>> = vec![
            vec![2.into(), 1.into()], // 2!0!, 1!1!
            vec![2.into(), 2.into()], // 2!1!, 1!2!
        ];
        assert_eq!(sys.matrix, expect);
        assert_eq!(sys.unknowns, vec!["x_2", "x_1"]);
        assert!(recover_cover_counts(&sys).unwrap().iter().all(|x| *x == BigUint::from(0u32)));
        assert!(voting_system_rhs(&inst, &[from_u64(0, 1)]).is_err());
    }

    #[test]
    fn disjoint_singletons_recovered() {
        let inst = sc(&["u1", "u2"], &[&[0], &[1]]);
        let rec = set_cover_recovery(&inst, 20).unwrap();
        assert_eq!(rec.brute_force, vec![0, 1]);
        assert_eq!(
            rec.recovered.as_ref().unwrap(),
            &vec![BigUint::from(0u32), BigUint::from(1u32)]
        );
        assert!(rec.matches());
    }

    #[test]
    fn parses_document() {
        let inst =
            parse_set_cover(r#"{"universe":["u1","u2"],"subsets":[["u1"],["u2","u1"]]}"#).unwrap();
        assert_eq!(inst.len(), 2);
        assert_eq!(inst.subsets()[1].len(), 2);
        assert!(parse_set_cover(r#"{"universe":["u1"],"subsets":[["zz"]]}"#).is_err());
        assert!(parse_set_cover(r#"{"universe":["u1"],"subsets":[]}"#).is_err());
    }
}
