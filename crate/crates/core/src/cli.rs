//! Command-line surface: file formats, subcommands and exit codes.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::delaunay::{delaunay_star, DelaunayError, QuadForm};
use crate::enumerate::{traverse, EnumError, TraverseOptions};
use crate::exact::{IntMatrix, RatMatrix, Rational};
use crate::hyp::{classify, enumerate_principal, HypError, Hypermetric, Membership};
use crate::ltype::{arithmetically_equivalent, LtypeError};
use crate::unimod::{
    cographic_system, dicing_domain, dual_system, graphic_system, is_01_representable, Graph, UnimodError,
    VectorSystem,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}: {msg}")]
    Parse { path: String, line: usize, msg: String },
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("{0}")]
    Input(String),
    /// Partial output, printed before exiting.
    #[error("resource limit reached")]
    Limit(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Io(..) | CliError::Input(_) => 1,
            CliError::Limit(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<DelaunayError> for CliError {
    fn from(e: DelaunayError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<HypError> for CliError {
    fn from(e: HypError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<UnimodError> for CliError {
    fn from(e: UnimodError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<LtypeError> for CliError {
    fn from(e: LtypeError) -> Self {
        match e {
            LtypeError::Delaunay(d) => d.into(),
            other => CliError::Internal(other.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "ldomain", version, about = "L-domains of lattices and the hypermetric cone")]
pub struct Cli {
    /// Worker threads for enumeration.
    #[arg(short, long, global = true, env = "LDOMAIN_JOBS", default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Delaunay star of 0 for a form file.
    Star { form: PathBuf },
    /// Enumerate the primitive L-domains in the hypermetric cone.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        max_domains: Option<usize>,
        /// Seconds.
        #[arg(long)]
        timeout: Option<u64>,
        #[arg(long)]
        allow_long: bool,
        #[arg(long)]
        journal: Option<PathBuf>,
        #[arg(long, requires = "journal")]
        resume: bool,
    },
    /// Classify a distance file against the hypermetric inequalities.
    Hypcheck { file: PathBuf },
    /// Search for P with b = Pᵀ a P.
    Equiv { a: PathBuf, b: PathBuf },
    /// List the principal domains for n.
    Principal {
        #[arg(short)]
        n: usize,
    },
    /// Dicing domain of the graphic (or cographic) system of a graph.
    Dicing {
        graph: PathBuf,
        #[arg(long)]
        cographic: bool,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn parse_rational(tok: &str) -> Option<Rational> {
    tok.parse::<Rational>().ok()
}

/// Non-empty lines with `#` comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn perr(path: &str, line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { path: path.to_string(), line, msg: msg.into() }
}

fn parse_count(path: &str, lines: &mut dyn Iterator<Item = (usize, &str)>) -> Result<(usize, usize), CliError> {
    let (ln, l) = lines.next().ok_or_else(|| perr(path, 1, "empty file"))?;
    let n = l.parse::<usize>().map_err(|_| perr(path, ln, "expected a count"))?;
    Ok((ln, n))
}

/// Line 1: `n`; then `n` rows of `n` rationals (`p/q` or integers).
pub fn parse_form(text: &str, path: &str) -> Result<QuadForm, CliError> {
    let mut lines = content_lines(text);
    let (ln0, n) = parse_count(path, &mut lines)?;
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (ln, l) = lines.next().ok_or_else(|| perr(path, ln0 + r + 1, "missing row"))?;
        let row: Vec<Rational> = l
            .split_whitespace()
            .map(|t| parse_rational(t).ok_or_else(|| perr(path, ln, format!("bad number `{t}`"))))
            .collect::<Result<_, _>>()?;
        if row.len() != n {
            return Err(perr(path, ln, format!("expected {n} entries, got {}", row.len())));
        }
        rows.push(row);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(perr(path, ln, "trailing content"));
    }
    Ok(QuadForm::new(RatMatrix::from_rows(rows))?)
}

pub fn format_form(a: &QuadForm) -> String {
    let n = a.n();
    let mut s = format!("{n}\n");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| a.get(i, j).to_string()).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}

/// Line 1: number of points; line 2: distances in lex pair order.
pub fn parse_hypermetric(text: &str, path: &str) -> Result<Hypermetric, CliError> {
    let mut lines = content_lines(text);
    let (ln0, m) = parse_count(path, &mut lines)?;
    let mut dist = Vec::new();
    let mut last = ln0;
    for (ln, l) in lines {
        last = ln;
        for t in l.split_whitespace() {
            dist.push(parse_rational(t).ok_or_else(|| perr(path, ln, format!("bad number `{t}`")))?);
        }
    }
    Hypermetric::new(m, dist).map_err(|e| perr(path, last, e.to_string()))
}

pub fn format_hypermetric(d: &Hypermetric) -> String {
    let vals: Vec<String> = d.distances().iter().map(|x| x.to_string()).collect();
    format!("{}\n{}\n", d.n_points(), vals.join(" "))
}

/// Line 1: number of vertices; then one edge `u v` per line.
pub fn parse_graph(text: &str, path: &str) -> Result<Graph, CliError> {
    let mut lines = content_lines(text);
    let (_, nv) = parse_count(path, &mut lines)?;
    let mut edges = Vec::new();
    for (ln, l) in lines {
        let e: Vec<usize> = l
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| perr(path, ln, format!("bad vertex `{t}`"))))
            .collect::<Result<_, _>>()?;
        match e[..] {
            [u, v] if u < nv && v < nv && u != v => edges.push((u, v)),
            _ => return Err(perr(path, ln, "expected two distinct vertices")),
        }
    }
    Ok(Graph::new(nv, edges))
}

fn fmt_matrix(m: &IntMatrix) -> String {
    format!("{m:?}").replace(' ', "")
}

fn fmt_point(p: &[i64]) -> String {
    format!("{p:?}").replace(' ', "")
}

pub fn cmd_star(a: &QuadForm, format: Format) -> String {
    let star = delaunay_star(a);
    let cells: Vec<Vec<Vec<i64>>> = star.cells.iter().map(|c| c.vertices().to_vec()).collect();
    if format == Format::Json {
        let v = serde_json::json!({ "cells": cells.len(), "simplicial": star.simplicial, "star": cells });
        return format!("{}\n", serde_json::to_string_pretty(&v).unwrap());
    }
    let mut s = format!("cells={} simplicial={}\n", cells.len(), star.simplicial);
    for c in &cells {
        let vs: Vec<String> = c.iter().map(|p| fmt_point(p)).collect();
        let _ = writeln!(s, "{}", vs.join(" "));
    }
    s
}

pub fn cmd_enumerate(n: usize, opts: &TraverseOptions, format: Format) -> Result<String, CliError> {
    let render = |r: &crate::enumerate::EnumerationReport| match format {
        Format::Text => r.to_text(),
        Format::Json => format!("{}\n", r.to_json()),
    };
    match traverse(n, opts) {
        Ok((_, r)) => Ok(render(&r)),
        Err(EnumError::ResourceLimit(r)) => Err(CliError::Limit(render(&r))),
        Err(e @ (EnumError::Unsupported(_) | EnumError::NeedsAllowLong | EnumError::Journal(_))) => {
            Err(CliError::Input(e.to_string()))
        }
        Err(EnumError::Ltype(e)) => Err(e.into()),
        Err(e) => Err(CliError::Internal(e.to_string())),
    }
}

pub fn cmd_hypcheck(d: &Hypermetric) -> Result<String, CliError> {
    let m = match classify(d)? {
        Membership::Interior => "interior",
        Membership::Boundary => "boundary",
        Membership::Outside => "outside",
    };
    Ok(format!("membership={m}\n"))
}

pub fn cmd_equiv(a: &QuadForm, b: &QuadForm) -> String {
    match arithmetically_equivalent(a, b) {
        Some(p) => format!("equivalent=true\nP = {}\n", fmt_matrix(&p)),
        None => "equivalent=false\n".to_string(),
    }
}

pub fn cmd_principal(n: usize) -> Result<String, CliError> {
    if !(2..=5).contains(&n) {
        return Err(CliError::Input(format!("n = {n} is outside 2..=5")));
    }
    let doms = enumerate_principal(n)?;
    let mut s = format!("domains={}\n", doms.len());
    for (i, d) in doms.iter().enumerate() {
        let rays: Vec<String> = d.key().iter().map(|r| fmt_point(r)).collect();
        let _ = writeln!(s, "{i}: {}", rays.join(" "));
    }
    Ok(s)
}

pub fn cmd_dicing(g: &Graph, cographic: bool) -> Result<String, CliError> {
    let u: VectorSystem = if cographic { cographic_system(g)? } else { graphic_system(g) };
    let cone = dicing_domain(&u)?;
    let mut s = format!(
        "vectors={} rank={} rays={} facets={} span_dim={}\n",
        u.len(),
        u.rank(),
        cone.rays().len(),
        cone.facets().len(),
        cone.span_dim()
    );
    let witness = |v: &VectorSystem| match is_01_representable(v) {
        Some(w) => format!("true W = {}", fmt_matrix(&w)),
        None => "false".to_string(),
    };
    let _ = writeln!(s, "01_representable={}", witness(&u));
    if u.rank() == u.dim() {
        let _ = writeln!(s, "dual_01_representable={}", witness(&dual_system(&u)?));
    }
    Ok(s)
}

/// Runs a parsed command line and returns the text to emit.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Star { form } => Ok(cmd_star(&parse_form(&read(form)?, &form.display().to_string())?, cli.format)),
        Command::Enumerate { n, max_domains, timeout, allow_long, journal, resume } => {
            if cli.jobs == 0 {
                return Err(CliError::Input("jobs must be at least 1".into()));
            }
            let opts = TraverseOptions {
                max_domains: *max_domains,
                timeout: timeout.map(Duration::from_secs),
                jobs: cli.jobs,
                allow_long: *allow_long,
                journal: journal.clone(),
                resume: *resume,
            };
            cmd_enumerate(*n, &opts, cli.format)
        }
        Command::Hypcheck { file } => cmd_hypcheck(&parse_hypermetric(&read(file)?, &file.display().to_string())?),
        Command::Equiv { a, b } => {
            let fa = parse_form(&read(a)?, &a.display().to_string())?;
            let fb = parse_form(&read(b)?, &b.display().to_string())?;
            Ok(cmd_equiv(&fa, &fb))
        }
        Command::Principal { n } => cmd_principal(*n),
        Command::Dicing { graph, cographic } => {
            cmd_dicing(&parse_graph(&read(graph)?, &graph.display().to_string())?, *cographic)
        }
    }
}

/// Writes output to the chosen sink and maps errors to exit codes.
pub fn main_with(cli: Cli) -> i32 {
    let emit = |text: &str| -> Result<(), CliError> {
        match &cli.output {
            Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(p.display().to_string(), e)),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    };
    let res = run(&cli);
    let res = match res {
        Ok(text) => emit(&text),
        Err(CliError::Limit(partial)) => emit(&partial).and(Err(CliError::Limit(String::new()))),
        Err(e) => Err(e),
    };
    match res {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("ldomain: {e}");
            e.exit_code()
        }
    }
}
