//! The command surface: argument definitions, dispatch, and exit-code
//! policy (0 ok, 1 parse/shape error, 2 axiom failure, 3 precondition
//! failure, 4 law counterexample).

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use pfs_core::axioms::{
    check_disjointness, check_globularity, check_pencil_linearity, check_strictness, AxiomReport,
    Violation,
};
use pfs_core::decompose::decompose_fully;
use pfs_core::enumerate::{canonical_form, enumerate_pfs_with_budget, Bounds};
use pfs_core::laws::{run_suite, suite_names};
use pfs_core::omega::cells;
use pfs_core::structure_ops::{
    alpha, classify, codomain_k, domain_k, globularize, simple_extension, special_pushout,
};
use pfs_core::{validate, FaceStructure, PositiveHypergraph};

use crate::dot::export_dot;
use crate::format::{parse_pfs, write_pfs, FormatError};

#[derive(Parser)]
#[command(name = "pfs", version, about = "Positive face structure toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Check the face-structure axioms and print the full report.
    Validate { file: PathBuf },
    /// Print dimension, size vector, and principal/normal flags.
    Info { file: PathBuf },
    /// The k-th domain d⁽ᵏ⁾ of the structure.
    Dom {
        #[arg(short)]
        k: usize,
        file: PathBuf,
    },
    /// The k-th codomain c⁽ᵏ⁾ of the structure.
    Cod {
        #[arg(short)]
        k: usize,
        file: PathBuf,
    },
    /// The special pushout A +ₖ B (gluing along c⁽ᵏ⁾A ≅ d⁽ᵏ⁾B).
    Compose {
        #[arg(short)]
        k: usize,
        a: PathBuf,
        b: PathBuf,
    },
    /// Recursively decompose into principal pieces (indented tree).
    Decompose { file: PathBuf },
    /// Count and list the n-cells of the structure's free ω-category.
    Cells {
        #[arg(short)]
        n: usize,
        file: PathBuf,
    },
    /// Print the n-globe.
    Alpha { n: usize },
    /// The simple extension N• of a normal structure.
    Bullet { file: PathBuf },
    /// The k-globularization of a principal structure.
    Globularize {
        #[arg(short)]
        k: usize,
        file: PathBuf,
    },
    /// Enumerate all structures within bounds, optionally into a directory.
    Enumerate {
        #[arg(long)]
        max_dim: usize,
        #[arg(long)]
        max_faces: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run law suites over the bounded catalog.
    Laws {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(long, default_value_t = 3)]
        max_faces: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Export to DOT.
    Dot { file: PathBuf },
}

pub enum CmdError {
    /// Parse/shape/IO problems → exit 1.
    Input(String),
    /// Axiom failures → exit 2, with the full report.
    Axiom(AxiomReport),
    /// Axiom failure whose report the command already printed → exit 2.
    AxiomReported,
    /// Operator preconditions → exit 3.
    Precondition(String),
    /// Law counterexamples → exit 4 (details already printed).
    Counterexample,
}

impl From<FormatError> for CmdError {
    fn from(e: FormatError) -> Self {
        CmdError::Input(e.to_string())
    }
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Input(_) => 1,
            CmdError::Axiom(_) | CmdError::AxiomReported => 2,
            CmdError::Precondition(_) => 3,
            CmdError::Counterexample => 4,
        }
    }

    pub fn report(&self) {
        match self {
            CmdError::Input(msg) => eprintln!("error: {msg}"),
            CmdError::Axiom(report) => eprint!("{report}"),
            CmdError::AxiomReported => {}
            CmdError::Precondition(msg) => eprintln!("error: {msg}"),
            CmdError::Counterexample => {}
        }
    }
}

fn read(path: &Path) -> Result<String, CmdError> {
    std::fs::read_to_string(path)
        .map_err(|e| CmdError::Input(format!("{}: {e}", path.display())))
}

fn load_hypergraph(path: &Path) -> Result<PositiveHypergraph, CmdError> {
    Ok(parse_pfs(&read(path)?)?)
}

fn load_structure(path: &Path) -> Result<FaceStructure, CmdError> {
    validate(&load_hypergraph(path)?).map_err(CmdError::Axiom)
}

fn precondition<E: std::fmt::Display>(e: E) -> CmdError {
    CmdError::Precondition(e.to_string())
}

/// The axiom report for a hypergraph, including the nonemptiness check
/// (assembled here because validation short-circuits on success).
fn full_report(h: &PositiveHypergraph) -> AxiomReport {
    let mut report = AxiomReport::default();
    if h.dim().is_none() {
        report.nonempty.push(Violation {
            faces: vec![],
            reason: "a face structure must have at least one face".into(),
        });
        return report;
    }
    report.globularity = check_globularity(h).globularity;
    report.strictness = check_strictness(h).strictness;
    report.disjointness = check_disjointness(h).disjointness;
    report.pencil_linearity = check_pencil_linearity(h).pencil_linearity;
    report
}

fn enum_budget() -> Option<u128> {
    std::env::var("PFS_ENUM_BUDGET").ok().and_then(|v| v.parse().ok())
}

fn catalog(max_dim: usize, max_faces: usize) -> Result<Vec<FaceStructure>, CmdError> {
    let bounds = Bounds::new(max_dim, max_faces);
    let budget = enum_budget().unwrap_or(10_000_000);
    enumerate_pfs_with_budget(&bounds, budget)
        .map(|c| c.entries)
        .map_err(precondition)
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run(cli: Cli) -> Result<(), CmdError> {
    match cli.cmd {
        Cmd::Validate { file } => {
            let h = load_hypergraph(&file)?;
            let report = full_report(&h);
            print!("{report}");
            if report.passes() {
                Ok(())
            } else {
                Err(CmdError::AxiomReported)
            }
        }
        Cmd::Info { file } => {
            let s = load_structure(&file)?;
            let c = classify(&s);
            println!(
                "dim={} size={} principal={} normal={}",
                s.dim(),
                c.size,
                yesno(c.principal),
                yesno(c.normal),
            );
            Ok(())
        }
        Cmd::Dom { k, file } => {
            let s = load_structure(&file)?;
            let d = domain_k(&s, k).map_err(precondition)?;
            print!("{}", write_pfs(d.hypergraph()));
            Ok(())
        }
        Cmd::Cod { k, file } => {
            let s = load_structure(&file)?;
            let c = codomain_k(&s, k).map_err(precondition)?;
            print!("{}", write_pfs(c.hypergraph()));
            Ok(())
        }
        Cmd::Compose { k, a, b } => {
            let sa = load_structure(&a)?;
            let sb = load_structure(&b)?;
            let glued = special_pushout(&sa, &sb, k).map_err(precondition)?;
            print!("{}", write_pfs(canonical_form(&glued).hypergraph()));
            Ok(())
        }
        Cmd::Decompose { file } => {
            let s = load_structure(&file)?;
            print!("{}", decompose_fully(&s).render(0));
            Ok(())
        }
        Cmd::Cells { n, file } => {
            let s = load_structure(&file)?;
            let mut lists: Vec<Vec<String>> = cells(&s, n)
                .into_iter()
                .map(|c| c.faces.into_iter().collect())
                .collect();
            lists.sort();
            println!("count={}", lists.len());
            for faces in lists {
                println!("cell: {}", faces.join(" "));
            }
            Ok(())
        }
        Cmd::Alpha { n } => {
            print!("{}", write_pfs(alpha(n).hypergraph()));
            Ok(())
        }
        Cmd::Bullet { file } => {
            let s = load_structure(&file)?;
            let nb = simple_extension(&s).map_err(precondition)?;
            print!("{}", write_pfs(canonical_form(&nb).hypergraph()));
            Ok(())
        }
        Cmd::Globularize { k, file } => {
            let s = load_structure(&file)?;
            let g = globularize(&s, k).map_err(precondition)?;
            print!("{}", write_pfs(canonical_form(&g).hypergraph()));
            Ok(())
        }
        Cmd::Enumerate { max_dim, max_faces, out } => {
            let entries = catalog(max_dim, max_faces)?;
            let mut counts = vec![0usize; max_dim + 1];
            for e in &entries {
                counts[e.dim()] += 1;
            }
            let counts_str: Vec<String> = counts.iter().map(usize::to_string).collect();
            println!("counts={}", counts_str.join(","));
            println!("total={}", entries.len());
            if let Some(dir) = out {
                write_catalog(&dir, max_dim, max_faces, &counts_str, &entries)?;
            }
            Ok(())
        }
        Cmd::Laws { suite, max_dim, max_faces, jobs } => {
            laws_cmd(&suite, max_dim, max_faces, jobs)
        }
        Cmd::Dot { file } => {
            let s = load_structure(&file)?;
            print!("{}", export_dot(&s));
            Ok(())
        }
    }
}

fn write_catalog(
    dir: &Path,
    max_dim: usize,
    max_faces: usize,
    counts: &[String],
    entries: &[FaceStructure],
) -> Result<(), CmdError> {
    let io = |e: std::io::Error| CmdError::Input(format!("{}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    let mut index = format!(
        "pfs-catalog 1\nmax_dim={max_dim} max_faces_per_dim={max_faces}\ncounts={}\n",
        counts.join(",")
    );
    for (i, e) in entries.iter().enumerate() {
        let name = format!("entry_{i:04}.pfs");
        std::fs::write(dir.join(&name), write_pfs(e.hypergraph())).map_err(io)?;
        index.push_str(&name);
        index.push('\n');
    }
    std::fs::write(dir.join("index.txt"), index).map_err(io)?;
    Ok(())
}

fn laws_cmd(suite: &str, max_dim: usize, max_faces: usize, jobs: usize) -> Result<(), CmdError> {
    let selected: Vec<&str> = if suite == "all" {
        suite_names().to_vec()
    } else {
        let names: Vec<&str> = suite.split(',').map(str::trim).collect();
        for n in &names {
            if !suite_names().contains(n) {
                return Err(CmdError::Input(format!(
                    "unknown suite `{n}` (choose from {} or `all`)",
                    suite_names().join(", ")
                )));
            }
        }
        names
    };
    let entries = catalog(max_dim, max_faces)?;
    let results: Vec<(&str, Vec<String>)> = if jobs <= 1 || selected.len() <= 1 {
        selected
            .iter()
            .map(|name| (*name, run_suite(name, &entries).unwrap()))
            .collect()
    } else {
        run_parallel(&selected, &entries, jobs)
    };
    let mut any_bad = false;
    let mut mentioned: BTreeSet<usize> = BTreeSet::new();
    for (name, bad) in &results {
        if bad.is_empty() {
            println!("suite {name}: ok ({} catalog entries)", entries.len());
        } else {
            any_bad = true;
            println!("suite {name}: {} counterexamples", bad.len());
            for msg in bad {
                println!("counterexample[{name}]: {msg}");
                if let Some(i) = entry_index(msg) {
                    mentioned.insert(i);
                }
            }
        }
    }
    if any_bad {
        for i in mentioned {
            println!("# entry {i}");
            print!("{}", write_pfs(entries[i].hypergraph()));
        }
        return Err(CmdError::Counterexample);
    }
    Ok(())
}

/// Counterexample messages open with `entry {i} ...` when they concern a
/// single catalog entry; recover the index for serialization.
fn entry_index(msg: &str) -> Option<usize> {
    msg.strip_prefix("entry ")?
        .split_whitespace()
        .next()?
        .parse()
        .ok()
}

fn run_parallel<'a>(
    selected: &[&'a str],
    entries: &[FaceStructure],
    jobs: usize,
) -> Vec<(&'a str, Vec<String>)> {
    let queue = std::sync::Mutex::new(selected.iter().enumerate().collect::<Vec<_>>());
    let results = std::sync::Mutex::new(vec![None; selected.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(selected.len()) {
            scope.spawn(|| loop {
                let Some((i, name)) = queue.lock().unwrap().pop() else {
                    return;
                };
                let bad = run_suite(name, entries).unwrap();
                results.lock().unwrap()[i] = Some((*name, bad));
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every suite ran"))
        .collect()
}
