//! Command-line front end. `run_command` is the whole program minus process I/O, so
//! tests can drive it directly.

pub mod payload;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::coxeter::{ArtinGroup, CoxeterGroup};
use crate::error::Error;
use crate::garside::ArtinElement;
use crate::genset::GenSet;
use crate::marking::Marking;
use payload::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "artin-markings",
    version,
    about = "Garside normal forms, parabolic subgroups and marking graphs of finite-type Artin groups"
)]
pub struct CliConfig {
    /// Artin type, e.g. A3, B4, D5, E8, F4, H3, I2(5).
    #[arg(long = "type", global = true)]
    pub ty: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Length bound for stabilizer probes.
    #[arg(long = "bound-k", global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub bound_k: Option<u64>,
    /// BFS radius for `bfs`.
    #[arg(long, global = true)]
    pub radius: Option<usize>,
    /// File holding the seed marking for `bfs`.
    #[arg(long = "seed-file", global = true)]
    pub seed_file: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Left normal form of a word.
    Nf {
        word: Option<String>,
    },
    /// Whether two parabolic subgroups are equal.
    ParabolicEq {
        p: String,
        q: String,
    },
    /// Minimal positive standardizer of a parabolic subgroup.
    MinStd {
        p: Option<String>,
    },
    /// Conjugacy of standard parabolic subgroups.
    ConjGraph {
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        query: Option<Vec<String>>,
    },
    /// All maximal simplices of standard irreducible parabolic subgroups.
    EnumMaxSimplices,
    /// Canonical positive standardizer of a simplex.
    CanonStd {
        simplex: Option<String>,
    },
    /// The standard-transversal marking on a maximal standard family.
    StdTransversals {
        base: Option<String>,
    },
    /// Check the marking conditions and print the twist exponents.
    ValidateMarking {
        marking: Option<String>,
    },
    /// Projection of the transversal at --index.
    Projection {
        #[arg(long)]
        index: usize,
        marking: Option<String>,
    },
    /// Twist the pair at --index by its base's central element.
    Twist {
        #[arg(long)]
        index: usize,
        #[arg(long)]
        inverse: bool,
        marking: Option<String>,
    },
    /// Every flip across one index.
    Flip {
        #[arg(long)]
        index: usize,
        marking: Option<String>,
    },
    /// M = c·S·c⁻¹ with S all-standard.
    StandardizeMarking {
        marking: Option<String>,
    },
    /// Elements Δ^e·x with |e| and the atom length of x at most --bound-k fixing a marking.
    StabilizerProbe {
        marking: Option<String>,
    },
    /// Breadth-first exploration of the marking graph (text prints DOT).
    Bfs,
    /// Connectivity of the all-standard markings under flips.
    StdConnectivity,
}

/// Exit code and the bytes written to stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

enum Failure {
    Malformed(Error),
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::UnsupportedType(_) | Error::UnknownFormat(_) => Failure::Malformed(e),
            e => Failure::Domain(e),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

pub fn run_command<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string().into_bytes();
            return if e.use_stderr() {
                Output { code: 2, stdout: Vec::new(), stderr: text }
            } else {
                Output { code: 0, stdout: text, stderr: Vec::new() }
            };
        }
    };
    match execute(&config, stdin) {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            Output { code: 0, stdout: out.into_bytes(), stderr: Vec::new() }
        }
        Err(f) => {
            let (code, body) = match f {
                Failure::Domain(e) => (1, json!({"error": e.kind(), "message": e.to_string()})),
                Failure::Malformed(e) => (2, json!({"error": e.kind(), "message": e.to_string()})),
                Failure::Usage(m) => (2, json!({"error": "Usage", "message": m})),
            };
            Output { code, stdout: Vec::new(), stderr: format!("{body}\n").into_bytes() }
        }
    }
}

fn payload(arg: &Option<String>, stdin: &mut dyn Read) -> CliResult<String> {
    match arg.as_deref() {
        Some("-") | None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
            if s.trim().is_empty() {
                return Err(Failure::Usage("missing payload".into()));
            }
            Ok(s)
        }
        Some(s) => Ok(s.to_string()),
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data")
}

fn marking_out(g: &CoxeterGroup, m: &Marking, format: Format) -> String {
    match format {
        Format::Text => format_marking(g, m),
        Format::Json => pretty(&g.marking_to_json(m)),
    }
}

fn subsets_text(xs: &[GenSet]) -> String {
    xs.iter().map(|x| x.key()).collect::<Vec<_>>().join("; ")
}

fn execute(c: &CliConfig, stdin: &mut dyn Read) -> CliResult<String> {
    let ty = c.ty.as_deref().ok_or_else(|| Failure::Usage("--type is required".into()))?;
    let group = ArtinGroup::from_type_str(ty)?;
    let g: &CoxeterGroup = &group;
    let f = c.format;
    let el = |x: &ArtinElement| g.format_element(x);
    Ok(match &c.command {
        Command::Nf { word } => {
            let x = g.parse_element(&payload(word, stdin)?)?;
            match f {
                Format::Text => el(&x),
                Format::Json => {
                    pretty(&json!({"nf": el(&x), "inf": x.inf(), "canonical_length": x.canonical_length()}))
                }
            }
        }
        Command::ParabolicEq { p, q } => {
            let eq = g.parabolic_eq(&parse_parabolic(g, p)?, &parse_parabolic(g, q)?);
            match f {
                Format::Text => eq.to_string(),
                Format::Json => pretty(&json!({ "equal": eq })),
            }
        }
        Command::MinStd { p } => {
            let p = parse_parabolic(g, &payload(p, stdin)?)?;
            let (s, y) = g.minimal_standardizer(&p)?;
            match f {
                Format::Text => format!("{}\n{}", el(&s), y.key()),
                Format::Json => pretty(&json!({"standardizer": el(&s), "gens": y.names()})),
            }
        }
        Command::ConjGraph { query } => {
            let cg = g.build_conjugacy_graph();
            match query {
                Some(q) => {
                    let x = parse_genset(g, &q[0])?;
                    let y = parse_genset(g, &q[1])?;
                    let path = cg.path(x, y);
                    match f {
                        Format::Text => path.is_some().to_string(),
                        Format::Json => {
                            let steps: Option<Vec<_>> = path.map(|p| {
                                p.iter()
                                    .map(|e| {
                                        let (a, b) = e.ends();
                                        json!({"y": e.y.names(), "t": format!("s{}", e.t + 1), "t_prime": format!("s{}", e.t_prime + 1), "from": a.names(), "to": b.names()})
                                    })
                                    .collect()
                            });
                            pretty(&json!({"conjugate": steps.is_some(), "path": steps}))
                        }
                    }
                }
                None => {
                    let mut classes = std::collections::BTreeMap::<u32, Vec<String>>::new();
                    for bits in 1..(1u64 << g.rank()) {
                        let x = GenSet(bits);
                        classes.entry(cg.component_id(x)).or_default().push(x.key());
                    }
                    let classes: Vec<Vec<String>> = classes.into_values().collect();
                    match f {
                        Format::Text => classes.iter().map(|c| c.join(" ~ ")).collect::<Vec<_>>().join("\n"),
                        Format::Json => pretty(&json!({"edges": cg.edges.len(), "classes": classes})),
                    }
                }
            }
        }
        Command::EnumMaxSimplices => {
            let all = g.enumerate_maximal_standard();
            match f {
                Format::Text => all.iter().map(|xs| subsets_text(xs)).collect::<Vec<_>>().join("\n"),
                Format::Json => {
                    let v: Vec<Vec<Vec<String>>> =
                        all.iter().map(|xs| xs.iter().map(|x| x.names()).collect()).collect();
                    pretty(&v)
                }
            }
        }
        Command::CanonStd { simplex } => {
            let s = parse_simplex(g, &payload(simplex, stdin)?)?;
            let std = g.canonical_positive_standardizer(&s)?;
            let maximal = std.witness.as_ref().map(|w| w.t_i.iter().map(|t| format!("s{}", t + 1)).collect::<Vec<_>>());
            match f {
                Format::Text => format!(
                    "{}\n{}\nlevels {:?}\nmaximal {}",
                    el(&std.g),
                    subsets_text(&std.subsets),
                    std.levels.level_of,
                    maximal.is_some()
                ),
                Format::Json => pretty(&json!({
                    "standardizer": el(&std.g),
                    "subsets": std.subsets.iter().map(|x| x.names()).collect::<Vec<_>>(),
                    "levels": std.levels.level_of,
                    "maximal_witness": maximal,
                })),
            }
        }
        Command::StdTransversals { base } => {
            let text = payload(base, stdin)?;
            let xs = text
                .split(';')
                .filter(|p| !p.trim().is_empty())
                .map(|p| parse_genset(g, p))
                .collect::<Result<Vec<_>, _>>()?;
            marking_out(g, &g.standard_transversals(&xs)?, f)
        }
        Command::ValidateMarking { marking } => {
            let m = parse_marking(g, &payload(marking, stdin)?)?;
            let cert = g.validate_marking(&m)?;
            let ks: Vec<i64> = cert.transversals.iter().map(|t| t.k).collect();
            let ys: Vec<GenSet> = cert.transversals.iter().map(|t| t.subset).collect();
            match f {
                Format::Text => format!(
                    "valid\nbase {}\ntransversals {}\nlevels {:?}\nexponents {:?}",
                    subsets_text(&cert.base_subsets),
                    subsets_text(&ys),
                    cert.levels.level_of,
                    ks
                ),
                Format::Json => pretty(&json!({
                    "valid": true,
                    "marking": g.marking_to_json(&m),
                    "base": cert.base_subsets.iter().map(|x| x.names()).collect::<Vec<_>>(),
                    "transversals": ys.iter().map(|x| x.names()).collect::<Vec<_>>(),
                    "levels": cert.levels.level_of,
                    "exponents": ks,
                })),
            }
        }
        Command::Projection { index, marking } => {
            let m = parse_marking(g, &payload(marking, stdin)?)?;
            check_index(&m, *index)?;
            let k = g.projection(&m, *index)?;
            match f {
                Format::Text => k.to_string(),
                Format::Json => pretty(&json!({"index": index, "projection": k})),
            }
        }
        Command::Twist { index, inverse, marking } => {
            let m = parse_marking(g, &payload(marking, stdin)?)?;
            check_index(&m, *index)?;
            g.validate_marking(&m)?;
            marking_out(g, &g.twist_move(&m, *index, *inverse)?, f)
        }
        Command::Flip { index, marking } => {
            let m = parse_marking(g, &payload(marking, stdin)?)?;
            check_index(&m, *index)?;
            g.validate_marking(&m)?;
            let flips = g.enumerate_flip_moves(&m, *index)?;
            match f {
                Format::Text => flips.iter().map(|x| format_marking(g, x)).collect::<Vec<_>>().join("\n"),
                Format::Json => pretty(&flips.iter().map(|x| g.marking_to_json(x)).collect::<Vec<_>>()),
            }
        }
        Command::StandardizeMarking { marking } => {
            let m = parse_marking(g, &payload(marking, stdin)?)?;
            let (cj, s) = g.standardize_marking(&m)?;
            match f {
                Format::Text => format!("{}\n{}", el(&cj), format_marking(g, &s)),
                Format::Json => pretty(&json!({"conjugator": el(&cj), "standard": g.marking_to_json(&s)})),
            }
        }
        Command::StabilizerProbe { marking } => {
            let m = parse_marking(g, &payload(marking, stdin)?)?;
            g.validate_marking(&m)?;
            let bound = c.bound_k.unwrap_or(2) as usize;
            let hits = g.marking_stabilizer_probe(&m, bound);
            let central = hits.iter().all(|h| h.body().is_empty());
            match f {
                Format::Text => {
                    let mut lines: Vec<String> = hits.iter().map(el).collect();
                    lines.push(format!("only Delta powers: {central}"));
                    lines.join("\n")
                }
                Format::Json => pretty(&json!({
                    "bound": bound,
                    "stabilizers": hits.iter().map(el).collect::<Vec<_>>(),
                    "only_delta_powers": central,
                })),
            }
        }
        Command::Bfs => {
            let seed = match &c.seed_file {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    parse_marking(g, &text)?
                }
                None => {
                    let xs = g.enumerate_maximal_standard().into_iter().next().ok_or(Error::NotMaximal)?;
                    g.standard_transversals(&xs)?
                }
            };
            g.validate_marking(&seed)?;
            let graph = g.bfs(&seed, c.radius.unwrap_or(1))?;
            match f {
                Format::Text => graph.to_dot(),
                Format::Json => graph.to_json(),
            }
        }
        Command::StdConnectivity => {
            let r = g.standard_marking_connectivity()?;
            match f {
                Format::Text => format!(
                    "markings {}\nedges {}\nconnected {}\ndiameter {}\nbound {}",
                    r.markings,
                    r.edges,
                    r.connected,
                    r.diameter.map_or("-".to_string(), |d| d.to_string()),
                    r.bound
                ),
                Format::Json => pretty(&r),
            }
        }
    })
}

fn check_index(m: &Marking, j: usize) -> CliResult<()> {
    if j >= m.len() {
        return Err(Failure::Usage(format!("index {j} out of range for {} pairs", m.len())));
    }
    Ok(())
}
