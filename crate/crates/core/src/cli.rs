//! Command-line front end. Every subcommand reads one matroid file and writes
//! canonically ordered text.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::classify::{self, TrainingSet};
use crate::committees::{self, Committee};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::format::{self, ExtensionSpec, MatroidData, MatroidFile};
use crate::graphs::{self, structure_report};
use crate::linalg;
use crate::matroid::{validate_circuit_axioms, validate_covector_axioms, OrientedMatroid};
use crate::signvec::{ElementSet, SignVector};
use crate::topes::{self, MaximalChain};

#[derive(Debug, Parser)]
#[command(name = "tope-committee", version, about = "Tope committees of oriented matroids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphKind {
    /// Covering graph on all topes.
    Gamma,
    /// Covering graph on topes with maximal positive parts.
    GammaMax,
    /// Minimal covering hyperedges among topes with maximal positive parts.
    Xi,
    /// One-flip adjacency of topes.
    TopeGraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Text,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check covector and circuit axioms, reporting witnesses.
    Validate { input: PathBuf },
    /// Print the tope set.
    Topes { input: PathBuf },
    /// Reorient on a set of elements.
    Reorient {
        input: PathBuf,
        #[arg(short = 'A', value_name = "LIST")]
        elements: String,
    },
    /// Delete a set of elements.
    Delete {
        input: PathBuf,
        #[arg(short = 'A', value_name = "LIST")]
        elements: String,
    },
    /// Export a graph as an edge list or DOT.
    Graph {
        #[arg(value_enum)]
        kind: GraphKind,
        input: PathBuf,
        /// Shorthand for `--format dot`.
        #[arg(long)]
        dot: bool,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
    },
    /// Print a maximal chain from `--base` (default: the positive tope if present,
    /// otherwise the smallest tope), or validate a given chain file.
    Chain {
        input: PathBuf,
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        chain_file: Option<PathBuf>,
    },
    /// Committee of topes with maximal positive parts on the symmetric cycle of a chain.
    CycleCommittee {
        input: PathBuf,
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        chain_file: Option<PathBuf>,
    },
    /// Rank-2 step-by-step committee for a reorientation sequence.
    Alg1 {
        input: PathBuf,
        #[arg(long, value_name = "LIST")]
        seq: String,
    },
    /// Chain-based committee for the reorientation on `[1, s]` or on `--seq`.
    Alg3 {
        input: PathBuf,
        #[arg(long, conflicts_with = "seq")]
        s: Option<usize>,
        #[arg(long, value_name = "LIST")]
        seq: Option<String>,
        #[arg(long)]
        chain_file: Option<PathBuf>,
        /// Remove opposite pairs once at the end instead of after every step.
        #[arg(long)]
        strip_at_end: bool,
    },
    /// Classify a set of topes against the committee definition.
    CheckCommittee {
        input: PathBuf,
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value = "1/2")]
        p: String,
    },
    /// A committee of smallest cardinality.
    MinCommittee { input: PathBuf },
    /// All committees with `k` members, one per line.
    Enumerate {
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Topes whose positive parts complete the base to the ground set.
    #[command(name = "filter-O")]
    FilterO {
        input: PathBuf,
        #[arg(long)]
        base: String,
        /// Print only the minimal members of the filter.
        #[arg(long)]
        antichain: bool,
    },
    /// Decide the patterns of a training file.
    Classify {
        input: PathBuf,
        /// Overrides the `labels` line, e.g. `-=4 +=1,2,3`.
        #[arg(long)]
        labels: Option<String>,
        /// Overrides the `extend` line, e.g. `rational 3 1` or `sigma file`.
        #[arg(long)]
        extend: Option<String>,
        /// Committee file; defaults to a minimum committee of the reoriented matroid.
        #[arg(long)]
        committee: Option<PathBuf>,
    },
    /// Structural predicates and the analysis of the maximal-positive-part graph.
    Report { input: PathBuf },
}

/// Text produced by a command together with its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn read_file(path: &Path) -> Result<MatroidFile> {
    format::read_matroid_file(path)
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::file(path, e))
}

fn parse_set(text: &str, m: usize) -> Result<ElementSet> {
    let set: ElementSet = text.parse()?;
    set.check_within(m)?;
    Ok(set)
}

fn parse_sequence(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|w| {
            w.trim()
                .parse::<usize>()
                .map_err(|_| Error::domain(format!("'{w}' is not an element index")))
        })
        .collect()
}

fn parse_tope(om: &OrientedMatroid, text: &str) -> Result<SignVector> {
    let t: SignVector = text.parse()?;
    om.require_tope(&t)?;
    Ok(t)
}

fn default_base(om: &OrientedMatroid) -> SignVector {
    if om.is_acyclic() {
        om.positive_tope()
    } else {
        *om.topes().iter().next().expect("tope sets are nonempty")
    }
}

fn load_chain(
    om: &OrientedMatroid,
    base: Option<&str>,
    chain_file: Option<&Path>,
) -> Result<MaximalChain> {
    match chain_file {
        Some(path) => {
            let chain = format::parse_chain(&read_text(path)?)?;
            let chain = MaximalChain::validate(om, chain.topes().to_vec())?;
            if let Some(b) = base {
                if chain.base() != parse_tope(om, b)? {
                    return Err(Error::domain("the chain file does not start at --base"));
                }
            }
            Ok(chain)
        }
        None => {
            let b = match base {
                Some(b) => parse_tope(om, b)?,
                None => default_base(om),
            };
            topes::maximal_chain(om, &b)
        }
    }
}

/// Writes `om` in the same representation as the file it came from.
fn write_like(data: &MatroidData, om: &OrientedMatroid) -> Result<String> {
    Ok(match data {
        MatroidData::Topes(_) => format::write_topes(om.m(), om.topes()),
        MatroidData::Covectors(_) => format::write_covectors(om.m(), om.require_covectors()?),
        MatroidData::Realization(_) => format::write_realization(om.require_realization()?),
    })
}

fn sets_per_line(sets: &[crate::matroid::SignSet]) -> String {
    let mut out = String::new();
    for s in sets {
        let words: Vec<String> = s.iter().map(|t| t.to_string()).collect();
        let _ = writeln!(out, "{}", words.join(" "));
    }
    out
}

/// Runs one parsed invocation.
pub fn run(cli: &Cli, limits: &Limits) -> Result<Outcome> {
    match &cli.command {
        Command::Validate { input } => validate(&read_file(input)?, limits),
        Command::Topes { input } => {
            let om = read_file(input)?.to_matroid(limits)?;
            Ok(Outcome::ok(format::write_topes(om.m(), om.topes())))
        }
        Command::Reorient { input, elements } => {
            let file = read_file(input)?;
            let om = file.to_matroid(limits)?;
            let a = parse_set(elements, om.m())?;
            Ok(Outcome::ok(write_like(&file.data, &om.reorient(a)?)?))
        }
        Command::Delete { input, elements } => {
            let file = read_file(input)?;
            let om = file.to_matroid(limits)?;
            let a = parse_set(elements, om.m())?;
            Ok(Outcome::ok(write_like(&file.data, &om.delete(a)?)?))
        }
        Command::Graph {
            kind,
            input,
            dot,
            format,
        } => {
            let om = read_file(input)?.to_matroid(limits)?;
            let as_dot = *dot || *format == Some(GraphFormat::Dot);
            let (name, graph) = match kind {
                GraphKind::Gamma => ("gamma", graphs::gamma(&om)?.graph),
                GraphKind::GammaMax => ("gamma_max", graphs::gamma_maxplus(&om)?.graph),
                GraphKind::TopeGraph => ("tope_graph", topes::tope_graph(&om)?),
                GraphKind::Xi => {
                    if as_dot {
                        return Err(Error::domain("hypergraphs have no DOT export"));
                    }
                    return Ok(Outcome::ok(sets_per_line(&graphs::xi_maxplus(&om, limits)?)));
                }
            };
            Ok(Outcome::ok(if as_dot { graph.to_dot(name) } else { graph.to_edge_list() }))
        }
        Command::Chain {
            input,
            base,
            chain_file,
        } => {
            let om = read_file(input)?.to_matroid(limits)?;
            let chain = load_chain(&om, base.as_deref(), chain_file.as_deref())?;
            Ok(Outcome::ok(chain.to_text()))
        }
        Command::CycleCommittee {
            input,
            base,
            chain_file,
        } => {
            let om = read_file(input)?.to_matroid(limits)?;
            let chain = load_chain(&om, base.as_deref(), chain_file.as_deref())?;
            let cycle = topes::symmetric_cycle_from_chain(&chain)?;
            Ok(Outcome::ok(committees::cycle_committee(&om, &cycle)?.to_text()))
        }
        Command::Alg1 { input, seq } => {
            let om = read_file(input)?.to_matroid(limits)?;
            let seq = parse_sequence(seq)?;
            Ok(Outcome::ok(committees::alg1_rank2(&om, &seq)?.to_text()))
        }
        Command::Alg3 {
            input,
            s,
            seq,
            chain_file,
            strip_at_end,
        } => {
            let om = read_file(input)?.to_matroid(limits)?;
            let top = om.positive_tope();
            let chain = match chain_file {
                Some(_) => load_chain(&om, None, chain_file.as_deref())?,
                None => {
                    om.require_tope(&top)?;
                    topes::maximal_chain(&om, &top)?
                }
            };
            let committee = match (s, seq) {
                (Some(s), None) if *strip_at_end => committees::alg4(&om, &chain, *s)?,
                (Some(s), None) => committees::alg3(&om, &chain, *s)?,
                (None, Some(seq)) => {
                    if *strip_at_end {
                        return Err(Error::domain("--strip-at-end applies to --s only"));
                    }
                    let r = committees::alg3_sequence(&om, &chain, &parse_sequence(seq)?)?;
                    let relabel: Vec<String> = r
                        .relabel
                        .iter()
                        .enumerate()
                        .map(|(e, p)| format!("{}:{p}", e + 1))
                        .collect();
                    let text = format!("# relabel {}\n{}", relabel.join(","), r.committee.to_text());
                    return Ok(Outcome::ok(text));
                }
                _ => return Err(Error::domain("give exactly one of --s and --seq")),
            };
            Ok(Outcome::ok(committee.to_text()))
        }
        Command::CheckCommittee { input, file, p } => {
            let om = read_file(input)?.to_matroid(limits)?;
            let k = format::parse_committee(&read_text(file)?)?;
            let p = linalg::parse_rational(p)?;
            let c = if p == committees::one_half() {
                committees::classify_committee_with(&om, &k, limits)?
            } else {
                committees::is_p_committee(&om, &k, &p)?
            };
            Ok(Outcome::ok(c.to_string()))
        }
        Command::MinCommittee { input } => {
            let om = read_file(input)?.to_matroid(limits)?;
            Ok(Outcome::ok(committees::minimum_committee(&om, limits)?.committee.to_text()))
        }
        Command::Enumerate { input, k } => {
            let om = read_file(input)?.to_matroid(limits)?;
            Ok(Outcome::ok(sets_per_line(&committees::enumerate_committees(&om, *k, limits)?)))
        }
        Command::FilterO {
            input,
            base,
            antichain,
        } => {
            let om = read_file(input)?.to_matroid(limits)?;
            let b = parse_tope(&om, base)?;
            let set = if *antichain {
                topes::antichain_g(&om, &b)?
            } else {
                topes::filter_o(&om, &b)?
            };
            Ok(Outcome::ok(format::write_committee(&set)))
        }
        Command::Classify {
            input,
            labels,
            extend,
            committee,
        } => classify_cmd(input, labels.as_deref(), extend.as_deref(), committee.as_deref(), limits),
        Command::Report { input } => {
            let om = read_file(input)?.to_matroid(limits)?;
            let mut out = String::new();
            let _ = writeln!(out, "m={}", om.m());
            match om.rank() {
                Some(r) => {
                    let _ = writeln!(out, "rank={r}");
                }
                None if om.is_simple() && committees::is_rank_two(&om) => {
                    let _ = writeln!(out, "rank=2\nrank_source=tope_graph");
                }
                None => {
                    let _ = writeln!(out, "rank=unknown");
                }
            }
            let _ = writeln!(out, "topes={}", om.topes().len());
            let predicates = om.structural_predicates();
            out.push_str(&predicates.to_string());
            if predicates.simple {
                let _ = writeln!(out, "maxplus_topes={}", committees::maxplus(om.topes()).len());
                out.push_str(&structure_report(&graphs::gamma_maxplus(&om)?).to_string());
            }
            Ok(Outcome::ok(out))
        }
    }
}

fn validate(file: &MatroidFile, limits: &Limits) -> Result<Outcome> {
    let mut out = String::new();
    let mut ok = true;
    match &file.data {
        MatroidData::Topes(_) => {
            file.to_matroid(limits)?;
            let _ = writeln!(out, "family=topes");
            let _ = writeln!(out, "ok=true");
            let _ = writeln!(out, "note=tope lists are checked for length, negation and support only");
        }
        MatroidData::Covectors(l) => {
            let report = validate_covector_axioms(l);
            ok &= report.ok();
            let _ = write!(out, "family=covectors\n{report}");
        }
        MatroidData::Realization(_) => {
            let om = file.to_matroid(limits)?;
            let covectors = validate_covector_axioms(om.require_covectors()?);
            let circuits = validate_circuit_axioms(om.require_circuits()?);
            let cocircuits = validate_circuit_axioms(om.require_cocircuits()?);
            ok &= covectors.ok() && circuits.ok() && cocircuits.ok();
            let _ = write!(out, "family=covectors\n{covectors}");
            let _ = write!(out, "family=circuits\n{circuits}");
            let _ = write!(out, "family=cocircuits\n{cocircuits}");
        }
    }
    Ok(Outcome {
        text: out,
        code: if ok { 0 } else { 2 },
    })
}

fn classify_cmd(
    input: &Path,
    labels: Option<&str>,
    extend: Option<&str>,
    committee: Option<&Path>,
    limits: &Limits,
) -> Result<Outcome> {
    let file = read_file(input)?;
    let om = file.to_matroid(limits)?;
    let labels = match labels {
        Some(text) => format::parse_labels(text, om.m())?,
        None => file
            .labels
            .clone()
            .ok_or_else(|| Error::domain("no labels given in the file or with --labels"))?,
    };
    let spec = match extend {
        Some(text) => format::parse_extension_spec(text)?,
        None => file
            .extension
            .clone()
            .ok_or_else(|| Error::domain("no extension given in the file or with --extend"))?,
    };
    let training = TrainingSet::new(om, labels)?;
    let reoriented = classify::reorient_training(&training)?;
    let ext = match spec {
        ExtensionSpec::Rational(g) => classify::extend_by_row(&reoriented, &g)?,
        ExtensionSpec::SigmaFile(path) => {
            let path = if path.is_relative() {
                input.parent().unwrap_or(Path::new(".")).join(path)
            } else {
                path
            };
            classify::extend(&reoriented, &format::parse_sigma(&read_text(&path)?)?)?
        }
    };
    let kstar = match committee {
        Some(path) => Committee::new(training.m(), format::parse_committee(&read_text(path)?)?)?,
        None => committees::minimum_committee(&reoriented, limits)?.committee,
    };
    let verdicts = classify::verdicts(&training, &kstar, &ext)?;
    Ok(Outcome::ok(classify::format_verdicts(&verdicts)))
}
