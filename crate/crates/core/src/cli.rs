//! Command-line front end.
//!
//! Graph files are plain text: `#` starts a comment line, the first other line
//! is `n <count> <directed|undirected>`, and every following line is an edge
//! `u v` with `0 ≤ u, v < count`. Exit codes: 0 success, 1 usage error,
//! 2 parse error, 3 semantic error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::analysis::{self, Distance};
use crate::error::Error;
use crate::filters::{self, SetFamily};
use crate::iterate::{power_image, power_image_set};
use crate::multifunction::MultiFunction;
use crate::primes::{self, PrimeWindow, SetDescription};
use crate::structure::{from_graph, EdgeList, GraphKind};
use crate::vertex_set::{VertexSet, VertexUniverse};
use crate::walks::{enumerate_walks, walk_exists, WalkQuery};

#[derive(Debug, Parser)]
#[command(name = "multifn", version, about = "Multifunction analysis of graphs")]
struct Cli {
    /// Emit a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Properties, connectivity and bipartiteness
    Analyze { file: PathBuf },
    /// Integer powers F^n
    Iterate {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        power: i64,
        #[arg(long, conflicts_with = "set")]
        seed: Option<usize>,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        set: Option<Vec<usize>>,
    },
    /// Walk existence and enumeration
    Walks {
        file: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        length: u64,
        #[arg(long)]
        enumerate: bool,
    },
    /// Distance matrix
    Metric { file: PathBuf },
    /// Neighbor and wall families
    Filters {
        file: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyKind,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Option<Vec<usize>>,
    },
    /// The prime-divisor multifunction on {2, ..., bound}
    Primes {
        #[arg(long)]
        bound: u64,
        #[arg(long, group = "query")]
        leaf: Option<u64>,
        #[arg(long, group = "query", allow_negative_numbers = true)]
        factor: Option<i64>,
        #[arg(long, group = "query")]
        plus: Option<String>,
        #[arg(long, group = "query")]
        minus: Option<String>,
        #[arg(long, group = "query")]
        wall: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Neigh,
    Wall,
    Isol,
    Build,
}

impl FamilyKind {
    fn name(self) -> &'static str {
        match self {
            FamilyKind::Neigh => "neigh",
            FamilyKind::Wall => "wall",
            FamilyKind::Isol => "isol",
            FamilyKind::Build => "build",
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse(String),
    Semantic(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Semantic(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) | Failure::Semantic(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::VertexOutOfRange { .. } | Error::EmptyUniverse | Error::UndecidableDescription(_) => {
                Failure::Parse(e.to_string())
            }
            _ => Failure::Semantic(e.to_string()),
        }
    }
}

/// A parsed graph file.
#[derive(Debug, Clone)]
pub struct GraphFile {
    pub directed: bool,
    pub function: MultiFunction,
}

/// Parses the edge-list format described in the module docs.
pub fn parse_graph(text: &str) -> Result<GraphFile, String> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines.next().ok_or("missing header line `n <count> <directed|undirected>`")?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (count, directed) = match fields.as_slice() {
        ["n", count, kind] => {
            let count: usize = count
                .parse()
                .map_err(|_| format!("line {line_no}: bad vertex count `{count}`"))?;
            let directed = match *kind {
                "directed" => true,
                "undirected" => false,
                other => return Err(format!("line {line_no}: unknown graph kind `{other}`")),
            };
            (count, directed)
        }
        _ => return Err(format!("line {line_no}: expected `n <count> <directed|undirected>`")),
    };
    let universe = VertexUniverse::new(count).map_err(|e| format!("line {line_no}: {e}"))?;

    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for (line_no, line) in lines {
        let ends: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = ends.as_slice() else {
            return Err(format!("line {line_no}: expected `u v`"));
        };
        let parse = |s: &str| -> Result<usize, String> {
            let x: usize = s.parse().map_err(|_| format!("line {line_no}: bad vertex `{s}`"))?;
            if x >= count {
                return Err(format!("line {line_no}: vertex {x} out of range 0..{count}"));
            }
            Ok(x)
        };
        let (u, v) = (parse(u)?, parse(v)?);
        let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
        if !seen.insert(key) {
            return Err(format!("line {line_no}: duplicate edge {u} {v}"));
        }
        edges.push((u, v));
    }

    let list = EdgeList::new(universe, directed, edges).map_err(|e| e.to_string())?;
    let kind = if directed { GraphKind::Digraph } else { GraphKind::Undirected };
    let function = from_graph(&list, kind).map_err(|e| e.to_string())?;
    Ok(GraphFile { directed, function })
}

fn load(path: &Path) -> Result<GraphFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn set_json(s: &VertexSet) -> Value {
    json!(s.to_vec())
}

fn set_text(members: impl IntoIterator<Item = impl ToString>) -> String {
    members.into_iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ")
}

fn distance_json(d: Distance) -> Value {
    match d {
        Distance::Finite(n) => json!(n),
        Distance::Infinite => json!("inf"),
    }
}

fn vertex_set(size: usize, members: &[usize]) -> Result<VertexSet, Failure> {
    Ok(VertexSet::from_members(size, members.iter().copied())?)
}

/// A finished report: text lines plus the JSON `result` value.
struct Report {
    text: Vec<String>,
    result: Value,
}

fn analyze(g: &GraphFile) -> Result<Report, Failure> {
    let f = &g.function;
    let props = f.classify();
    let mut flags = Map::new();
    for (name, value) in props.flags() {
        flags.insert(name.to_string(), json!(value));
    }
    let connected = analysis::is_connected(f);
    let components = analysis::components(f).ok();
    let partition = if props.simple_graph && props.strict {
        Some(analysis::bipartition(f)?)
    } else {
        None
    };

    let mut text = vec![
        format!("vertices: {}", f.size()),
        format!("directed: {}", g.directed),
        format!(
            "properties: {}",
            set_text(props.flags().iter().filter(|(_, v)| *v).map(|(n, _)| n))
        ),
        format!("connected: {connected}"),
    ];
    match &components {
        Some(cs) => text.push(format!("components: {}", set_text(cs.iter()))),
        None => text.push("components: n/a".to_string()),
    }
    match &partition {
        Some(Some(b)) => {
            text.push("bipartite: true".to_string());
            text.push(format!("partition: {} {}", b.u, b.w));
        }
        Some(None) => text.push("bipartite: false".to_string()),
        None => text.push("bipartite: n/a".to_string()),
    }

    let result = json!({
        "vertices": f.size(),
        "directed": g.directed,
        "properties": flags,
        "connected": connected,
        "components": components.map(|cs| cs.iter().map(set_json).collect::<Vec<_>>()),
        "bipartite": partition.as_ref().map(Option::is_some),
        "partition": partition.flatten().map(|b| vec![set_json(&b.u), set_json(&b.w)]),
    });
    Ok(Report { text, result })
}

fn iterate(g: &GraphFile, power: i64, seed: Option<usize>, set: Option<&[usize]>) -> Result<Report, Failure> {
    let f = &g.function;
    let start = match (seed, set) {
        (Some(v), _) => Some(vertex_set(f.size(), &[v])?),
        (None, Some(members)) => Some(vertex_set(f.size(), members)?),
        (None, None) => None,
    };
    if let Some(a) = start {
        let image = power_image_set(f, power, &a)?;
        return Ok(Report {
            text: vec![set_text(image.iter())],
            result: json!({ "power": power, "start": set_json(&a), "image": set_json(&image) }),
        });
    }
    let p = power_image(f, power);
    let text = (0..f.size())
        .map(|v| format!("{v}: {}", set_text(p.image(v).iter())).trim_end().to_string())
        .collect();
    let rows: Vec<Value> = p.rows().iter().map(set_json).collect();
    Ok(Report {
        text,
        result: json!({ "power": power, "rows": rows }),
    })
}

fn walks(g: &GraphFile, query: WalkQuery, enumerate: bool) -> Result<Report, Failure> {
    let f = &g.function;
    let mut result = json!({
        "from": query.from,
        "to": query.to,
        "length": query.length,
    });
    if enumerate {
        let found = enumerate_walks(f, query)?;
        let text = found.iter().map(ToString::to_string).collect();
        result["exists"] = json!(!found.is_empty());
        result["count"] = json!(found.len());
        result["walks"] = json!(found.iter().map(|w| w.letters().to_vec()).collect::<Vec<_>>());
        return Ok(Report { text, result });
    }
    let exists = walk_exists(f, query)?;
    result["exists"] = json!(exists);
    Ok(Report {
        text: vec![format!("exists: {exists}")],
        result,
    })
}

fn metric(g: &GraphFile) -> Result<Report, Failure> {
    let f = &g.function;
    let d = analysis::metric(f)?;
    let diameter = analysis::diameter(f, &VertexSet::full(f.size()))?;
    let mut text: Vec<String> = (0..d.size()).map(|u| set_text(d.row(u).iter())).collect();
    text.push(format!("diameter: {diameter}"));
    let rows: Vec<Value> = (0..d.size())
        .map(|u| Value::Array(d.row(u).iter().map(|&x| distance_json(x)).collect()))
        .collect();
    Ok(Report {
        text,
        result: json!({ "distances": rows, "diameter": distance_json(diameter) }),
    })
}

fn family_report(g: &GraphFile, kind: FamilyKind, set: Option<&[usize]>) -> Result<Report, Failure> {
    let f = &g.function;
    let needs_set = matches!(kind, FamilyKind::Neigh | FamilyKind::Wall);
    let a = match (needs_set, set) {
        (true, Some(members)) => Some(vertex_set(f.size(), members)?),
        (true, None) => return Err(Failure::Usage(format!("--family {} needs --set", kind.name()))),
        (false, Some(_)) => return Err(Failure::Usage(format!("--family {} takes no --set", kind.name()))),
        (false, None) => None,
    };
    let fam: SetFamily = match (kind, &a) {
        (FamilyKind::Neigh, Some(a)) => filters::neigh_family(f, a)?,
        (FamilyKind::Wall, Some(a)) => filters::wall_family(f, a)?,
        (FamilyKind::Isol, _) => filters::isol(f)?,
        (FamilyKind::Build, _) => filters::build(f)?,
        _ => unreachable!("set presence checked above"),
    };
    let ideal = filters::is_ideal(&fam)?;
    let filter = filters::is_filter(&fam)?;
    let mut text: Vec<String> = fam.iter().map(ToString::to_string).collect();
    text.push(format!("members: {}", fam.len()));
    text.push(format!("ideal: {ideal}"));
    text.push(format!("filter: {filter}"));
    let mut result = json!({
        "family": kind.name(),
        "members": fam.iter().map(set_json).collect::<Vec<_>>(),
        "ideal": ideal,
        "filter": filter,
    });
    if let Some(a) = a {
        result["set"] = set_json(&a);
    }
    Ok(Report { text, result })
}

struct PrimeQuery<'a> {
    leaf: Option<u64>,
    factor: Option<i64>,
    plus: Option<&'a str>,
    minus: Option<&'a str>,
    wall: Option<&'a str>,
}

fn primes_report(bound: u64, q: PrimeQuery<'_>) -> Result<Report, Failure> {
    let window = PrimeWindow::new(bound)?;
    let mut result = json!({ "bound": bound });
    let text;
    if let Some(p) = q.leaf {
        let powers = primes::prime_leaf(p, &window)?;
        text = set_text(&powers);
        result["leaf"] = json!(p);
        result["numbers"] = json!(powers);
    } else if let Some(n) = q.factor {
        let e = primes::factor_exponents(n)?;
        text = format!("{n} = {e}");
        let exponents: Map<String, Value> = e.0.iter().map(|(p, k)| (p.to_string(), json!(k))).collect();
        result["factor"] = json!(n);
        result["exponents"] = Value::Object(exponents);
        result["divisors"] = json!(e.support().collect::<Vec<_>>());
    } else if let Some((name, desc, minus)) = q
        .plus
        .map(|d| ("plus", d, false))
        .or(q.minus.map(|d| ("minus", d, true)))
    {
        let u: SetDescription = desc.parse()?;
        let numbers = if minus {
            primes::prime_minus(&u, &window)
        } else {
            primes::prime_plus(&u, &window)
        };
        text = set_text(&numbers);
        result[name] = json!(desc);
        result["numbers"] = json!(numbers);
    } else if let Some(desc) = q.wall {
        let u: SetDescription = desc.parse()?;
        let member = primes::wall_aleph0_contains(&u);
        text = member.to_string();
        result["wall"] = json!(desc);
        result["member"] = json!(member);
    } else {
        text = set_text(window.primes());
        result["primes"] = json!(window.primes());
    }
    Ok(Report {
        text: vec![text],
        result,
    })
}

fn dispatch(cli: &Cli) -> Result<(String, Value, Report), Failure> {
    let (command, input, report) = match &cli.command {
        Command::Analyze { file } => ("analyze", json!(file), analyze(&load(file)?)?),
        Command::Iterate {
            file,
            power,
            seed,
            set,
        } => (
            "iterate",
            json!(file),
            iterate(&load(file)?, *power, *seed, set.as_deref())?,
        ),
        Command::Walks {
            file,
            from,
            to,
            length,
            enumerate,
        } => (
            "walks",
            json!(file),
            walks(&load(file)?, WalkQuery::new(*from, *to, *length), *enumerate)?,
        ),
        Command::Metric { file } => ("metric", json!(file), metric(&load(file)?)?),
        Command::Filters { file, family, set } => (
            "filters",
            json!(file),
            family_report(&load(file)?, *family, set.as_deref())?,
        ),
        Command::Primes {
            bound,
            leaf,
            factor,
            plus,
            minus,
            wall,
        } => {
            let q = PrimeQuery {
                leaf: *leaf,
                factor: *factor,
                plus: plus.as_deref(),
                minus: minus.as_deref(),
                wall: wall.as_deref(),
            };
            ("primes", Value::Null, primes_report(*bound, q)?)
        }
    };
    Ok((command.to_string(), input, report))
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    1
                }
            };
        }
    };

    match dispatch(&cli) {
        Ok((command, input, report)) => {
            let written = if cli.json {
                let doc = json!({ "input": input, "command": command, "result": report.result });
                let pretty = serde_json::to_string_pretty(&doc).expect("reports serialize");
                writeln!(out, "{pretty}")
            } else {
                report.text.iter().try_for_each(|line| writeln!(out, "{line}"))
            };
            if written.is_err() {
                return 1;
            }
            0
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message());
            failure.code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(args.iter().copied(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn parses_graph_files() {
        let g = parse_graph("# path\nn 3 undirected\n0 1\n\n1 2\n").unwrap();
        assert!(!g.directed);
        assert_eq!(g.function.image(1).to_vec(), vec![0, 2]);
        let d = parse_graph("n 2 directed\n0 1\n").unwrap();
        assert_eq!(d.function.image(0).to_vec(), vec![1]);
        assert!(d.function.image(1).is_empty());
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("n 3 sideways\n").is_err());
        assert!(parse_graph("n 0 undirected\n").is_err());
        assert!(parse_graph("n 3 undirected\n0 3\n").is_err());
        assert!(parse_graph("n 3 undirected\n0 1\n1 0\n").is_err());
        assert!(parse_graph("n 3 undirected\n0 1 2\n").is_err());
        assert!(parse_graph("n 3 directed\n0 1\n0 1\n").is_err());
        assert!(parse_graph("n 3 directed\n0 1\n1 0\n").is_ok());
    }

    #[test]
    fn primes_leaf_line() {
        let (code, out, _) = run_args(&["multifn", "primes", "--bound", "100", "--leaf", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "2 4 8 16 32 64\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["multifn"]).0, 1);
        assert_eq!(run_args(&["multifn", "frobnicate"]).0, 1);
        assert_eq!(run_args(&["multifn", "analyze", "/nonexistent/graph.txt"]).0, 2);
        assert_eq!(run_args(&["multifn", "primes", "--bound", "100", "--leaf", "4"]).0, 3);
        assert_eq!(run_args(&["multifn", "primes", "--bound", "100", "--plus", "squares"]).0, 2);
        assert_eq!(run_args(&["multifn", "primes", "--bound", "100", "--leaf", "2", "--factor", "6"]).0, 1);
        assert_eq!(run_args(&["multifn", "--help"]).0, 0);
    }

    #[test]
    fn factor_and_wall_queries() {
        let (_, out, _) = run_args(&["multifn", "primes", "--bound", "10", "--factor", "360"]);
        assert_eq!(out, "360 = 2^3 * 3^2 * 5\n");
        let (_, out, _) = run_args(&["multifn", "primes", "--bound", "10", "--wall", "primes"]);
        assert_eq!(out, "true\n");
        let (_, out, _) = run_args(&["multifn", "primes", "--bound", "10"]);
        assert_eq!(out, "2 3 5 7\n");
    }
}
