//! `rsdkit` command line: every command reads one JSON document (a path or
//! `-` for stdin) and writes its result once, at the end.

mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rsdkit::assignment::{
    assignment_support_member, parse_assignment_problem, rsd_assign_enum, rsd_assign_memo,
    rsd_assign_sample, AssignmentProblem, DeterministicAssignment,
};
use rsdkit::reductions::{
    assignment_recovery, bipartite_to_assignment, build_assignment_reduction,
    build_voting_reduction, parse_bipartite, parse_set_cover, set_cover_recovery,
    BRUTE_FORCE_GUARD,
};
use rsdkit::voting::{rsd_exact_enum, rsd_exact_memo, rsd_sample, support, support_member};
use rsdkit::{parse_profile, Error, DEFAULT_ENUM_GUARD, DEFAULT_MEMO_GUARD, GUARD_ENV_VAR};
use serde::Deserialize;
use serde_json::json;
use std::collections::BTreeMap;
use std::io::Read;

#[derive(Debug, Parser)]
#[command(name = "rsdkit", version, about = "Random serial dictatorship lotteries, assignments and reductions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// RSD lottery of a voting profile.
    Lottery {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        method: MethodArgs,
    },
    /// Support of the RSD lottery, or membership of one alternative.
    Support {
        #[command(flatten)]
        common: Common,
        /// Check only this alternative.
        #[arg(long)]
        alternative: Option<String>,
        /// Print the witness permutation and trace for a member.
        #[arg(long)]
        witness: bool,
    },
    /// RSD fractional assignment of a house allocation problem.
    Assign {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        method: MethodArgs,
        /// Instead, check whether this deterministic assignment is in the support.
        #[arg(long, value_name = "FILE")]
        check_assignment: Option<String>,
    },
    /// Build reduction instances.
    Reduce {
        #[command(subcommand)]
        target: ReduceTarget,
    },
    /// Run a reduction end to end and compare with brute force.
    Recover {
        #[command(subcommand)]
        target: RecoverTarget,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReduceTarget {
    /// Voting profile R^k from a set-cover instance.
    SetCover {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: usize,
    },
    /// Problem G_k from an assignment problem and a distinguished agent.
    Assignment {
        #[command(flatten)]
        common: Common,
        /// Agent name or 1-based position.
        #[arg(long)]
        agent: String,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// House-allocation fragment from a bipartite graph.
    Bipartite {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Subcommand)]
pub enum RecoverTarget {
    /// Recover set-cover counts x_1..x_n.
    SetCover {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        guard: GuardArg,
    },
    /// Recover s_0..s_{n-1} for an agent.
    Assignment {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        guard: GuardArg,
        /// Agent name or 1-based position.
        #[arg(long)]
        agent: String,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Input JSON file, or `-` for stdin.
    #[arg(short, long, default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Add decimal approximations to table output.
    #[arg(long)]
    pub float: bool,
}

#[derive(Debug, Args)]
pub struct GuardArg {
    /// Largest agent count for exact computation.
    #[arg(long, env = GUARD_ENV_VAR)]
    pub guard: Option<usize>,
}

#[derive(Debug, Args)]
pub struct MethodArgs {
    #[arg(long, value_enum, default_value_t = Method::Memo)]
    pub method: Method,
    #[arg(long, default_value_t = 10_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub guard: GuardArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Enum,
    Memo,
    Sample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

pub struct Failure {
    pub code: u8,
    pub message: String,
    /// Partial report to print before failing.
    pub output: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_guard() {
            3
        } else if e.is_integrity_failure() {
            4
        } else {
            2
        };
        Failure {
            code,
            message: e.to_string(),
            output: None,
        }
    }
}

fn input_failure(message: String) -> Failure {
    Failure {
        code: 2,
        message,
        output: None,
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| input_failure(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| input_failure(format!("reading {path}: {e}")))
    }
}

fn json_line(v: &serde_json::Value) -> String {
    format!("{v}\n")
}

pub fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Lottery { common, method } => lottery(common, method),
        Command::Support {
            common,
            alternative,
            witness,
        } => support_cmd(common, alternative.as_deref(), *witness),
        Command::Assign {
            common,
            method,
            check_assignment,
        } => assign(common, method, check_assignment.as_deref()),
        Command::Reduce { target } => reduce(target),
        Command::Recover { target } => recover(target),
    }
}

fn lottery(common: &Common, method: &MethodArgs) -> Result<String, Failure> {
    let profile = parse_profile(&read_input(&common.input)?)?;
    match method.method {
        Method::Sample => {
            let report = rsd_sample(&profile, method.samples, method.seed)?;
            Ok(match common.format {
                Format::Json => json_line(&report.to_json_value()),
                Format::Table => render::sample_table(&report, common.float),
            })
        }
        Method::Enum | Method::Memo => {
            let lottery = if method.method == Method::Enum {
                rsd_exact_enum(&profile, method.guard.guard.unwrap_or(DEFAULT_ENUM_GUARD))?
            } else {
                rsd_exact_memo(&profile)
            };
            Ok(match common.format {
                Format::Json => json_line(&lottery.to_json_value()),
                Format::Table => render::lottery_table(&lottery, common.float),
            })
        }
    }
}

fn support_cmd(common: &Common, alternative: Option<&str>, witness: bool) -> Result<String, Failure> {
    let profile = parse_profile(&read_input(&common.input)?)?;
    let labels = |set: &rsdkit::BitSet| -> Vec<String> {
        set.iter().map(|a| profile.alternative(a).to_string()).collect()
    };
    let Some(label) = alternative else {
        let members: Vec<String> = support(&profile)
            .into_iter()
            .map(|a| profile.alternative(a).to_string())
            .collect();
        return Ok(match common.format {
            Format::Json => json_line(&json!({ "support": members })),
            Format::Table => members.iter().map(|m| format!("{m}\n")).collect(),
        });
    };
    let a = profile.index_of(label)?;
    let found = support_member(&profile, a)?;
    let value = match (&found, witness) {
        (None, _) => json!({ "member": false }),
        (Some(_), false) => json!({ "member": true }),
        (Some(w), true) => {
            let names = profile.names();
            json!({
                "member": true,
                "witness": {
                    "permutation": w.permutation.as_slice().iter().map(|&i| &names[i]).collect::<Vec<_>>(),
                    "trace": w.trace.iter().map(|(i, set)| json!({
                        "agent": names[*i],
                        "surviving": labels(set),
                    })).collect::<Vec<_>>(),
                }
            })
        }
    };
    Ok(match common.format {
        Format::Json => json_line(&value),
        Format::Table => render::membership_table(&value),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SigmaDoc {
    assignment: SigmaBody,
}

/// Houses in agent order, or a map from agent name to house.
#[derive(Deserialize)]
#[serde(untagged)]
enum SigmaBody {
    List(Vec<String>),
    Map(BTreeMap<String, String>),
}

fn parse_sigma(problem: &AssignmentProblem, text: &str) -> Result<DeterministicAssignment, Failure> {
    let doc: SigmaDoc =
        serde_json::from_str(text).map_err(|e| Failure::from(Error::Malformed(e.to_string())))?;
    let labels = match doc.assignment {
        SigmaBody::List(list) => list,
        SigmaBody::Map(map) => {
            let mut labels = vec![None; problem.len()];
            for (agent, house) in map {
                labels[problem.agent_index(&agent)?] = Some(house);
            }
            labels
                .into_iter()
                .enumerate()
                .map(|(i, h)| {
                    h.ok_or_else(|| {
                        Error::NotABijection(format!("agent {} has no house", problem.names()[i]))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?
        }
    };
    Ok(DeterministicAssignment::from_labels(problem, &labels)?)
}

fn assign(common: &Common, method: &MethodArgs, check: Option<&str>) -> Result<String, Failure> {
    let problem = parse_assignment_problem(&read_input(&common.input)?)?;
    if let Some(path) = check {
        let sigma = parse_sigma(&problem, &read_input(path)?)?;
        let value = match assignment_support_member(&problem, &sigma)? {
            None => json!({ "member": false }),
            Some(perm) => json!({
                "member": true,
                "permutation": perm.as_slice().iter().map(|&i| &problem.names()[i]).collect::<Vec<_>>(),
            }),
        };
        return Ok(match common.format {
            Format::Json => json_line(&value),
            Format::Table => render::membership_table(&value),
        });
    }
    match method.method {
        Method::Sample => {
            let sample = rsd_assign_sample(&problem, method.samples, method.seed)?;
            Ok(match common.format {
                Format::Json => json_line(&sample.to_json_value()),
                Format::Table => render::matrix_table(
                    &sample.agents,
                    &sample.houses,
                    &sample.estimate(),
                    common.float,
                ),
            })
        }
        Method::Enum | Method::Memo => {
            let fa = if method.method == Method::Enum {
                rsd_assign_enum(&problem, method.guard.guard.unwrap_or(DEFAULT_ENUM_GUARD))?
            } else {
                rsd_assign_memo(&problem, method.guard.guard.unwrap_or(DEFAULT_MEMO_GUARD))?
            };
            Ok(match common.format {
                Format::Json => json_line(&fa.to_json_value()),
                Format::Table => render::matrix_table(&fa.agents, &fa.houses, &fa.cells, common.float),
            })
        }
    }
}

fn reduce(target: &ReduceTarget) -> Result<String, Failure> {
    match target {
        ReduceTarget::SetCover { common, k } => {
            let sc = parse_set_cover(&read_input(&common.input)?)?;
            let profile = build_voting_reduction(&sc, *k)?;
            Ok(format!("{}\n", profile.to_json()))
        }
        ReduceTarget::Assignment { common, agent, k } => {
            let problem = parse_assignment_problem(&read_input(&common.input)?)?;
            let i = problem.agent_index(agent)?;
            let g = build_assignment_reduction(&problem, i, *k)?;
            Ok(format!("{}\n", g.to_json()))
        }
        ReduceTarget::Bipartite { common } => {
            let g = parse_bipartite(&read_input(&common.input)?)?;
            let (fragment, h) = bipartite_to_assignment(&g);
            Ok(json_line(&fragment.to_json_value(h)))
        }
    }
}

fn recover(target: &RecoverTarget) -> Result<String, Failure> {
    let (value, ok, common) = match target {
        RecoverTarget::SetCover { common, guard } => {
            let sc = parse_set_cover(&read_input(&common.input)?)?;
            let report = set_cover_recovery(&sc, guard.guard.unwrap_or(BRUTE_FORCE_GUARD))?;
            (report.to_json_value(), report.matches(), common)
        }
        RecoverTarget::Assignment {
            common,
            guard,
            agent,
        } => {
            let problem = parse_assignment_problem(&read_input(&common.input)?)?;
            let i = problem.agent_index(agent)?;
            let report = assignment_recovery(&problem, i, guard.guard.unwrap_or(DEFAULT_MEMO_GUARD))?;
            (report.to_json_value(), report.matches(), common)
        }
    };
    let out = match common.format {
        Format::Json => json_line(&value),
        Format::Table => render::recovery_table(&value),
    };
    if ok {
        Ok(out)
    } else {
        Err(Failure {
            code: 4,
            message: value["error"]
                .as_str()
                .unwrap_or("recovered counts differ from brute force")
                .to_string(),
            output: Some(out),
        })
    }
}
