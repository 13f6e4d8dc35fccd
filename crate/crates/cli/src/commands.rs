use crate::error::{CliError, Result};
use crate::{Cli, Command, FilterArgs, Format, Global, Target, Theorem, VerifyTarget};
use dqspec_core::enumerate::{count, enumerate, EnumerationFilter, SpectralPredicate};
use dqspec_core::format::{from_adjacency_list, to_adjacency_list};
use dqspec_core::linalg::round_sig;
use dqspec_core::{
    charpoly, parse_graph, spectrum, to_graph6, to_sparse6, Graph, Limits, MatrixKind,
};
use dqspec_verify::closed_forms::{grid, verify_closed_form, FAMILIES};
use dqspec_verify::registry::{Suite, SuiteOptions};
use dqspec_verify::{
    theorems, verify_lemma, ClosedFormId, LemmaCatalog, SearchSpace, VerificationReport,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde_json::{json, Value};
use std::io::{self, BufWriter, Read, Write};
use std::time::Instant;

pub fn run(cli: Cli) -> Result<()> {
    let limits = limits(&cli.global)?;
    if let Some(jobs) = cli.global.jobs {
        if jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--jobs: {e}")))?;
    }
    let format = cli.global.format;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Spectrum { graphs, kind } => spectra(
            &mut out,
            &inputs(&graphs, &limits)?,
            kind.parse()?,
            format.unwrap_or(Format::Json),
        ),
        Command::Charpoly { graph, kind } => {
            let g = parse_graph(&graph, &limits)?;
            charpolys(&mut out, &g, kind.parse()?, format.unwrap_or(Format::Json))
        }
        Command::Mates { graphs, kind } => {
            let space = SearchSpace::new(limits);
            mates(
                &mut out,
                &space,
                &inputs(&graphs, &limits)?,
                kind.parse()?,
                format.unwrap_or(Format::Json),
            )
        }
        Command::Enumerate(f) => {
            enumerate_cmd(&mut out, &f, &limits, format.unwrap_or(Format::Graph6))
        }
        Command::Count(f) => count_cmd(&mut out, &f, &limits, format.unwrap_or(Format::Json)),
        Command::Verify { target } => {
            let space = SearchSpace::new(limits);
            let reports = verify(&space, target)?;
            let failed = reports.iter().filter(|r| r.failed()).count();
            print_reports(&mut out, &reports, format.unwrap_or(Format::Json))?;
            out.flush()?;
            if failed > 0 {
                return Err(CliError::Failed(failed));
            }
            Ok(())
        }
        Command::Convert { input, to, seed } => convert(&mut out, input, to, seed, &limits),
    };
    result?;
    out.flush()?;
    Ok(())
}

/// Caps from the environment, overridden by flags.
fn limits(g: &Global) -> Result<Limits> {
    let mut limits = Limits::from_env()?;
    if let Some(c) = g.cap {
        limits.enumeration = c;
    }
    if let Some(c) = g.build_cap {
        limits.construction = c;
    }
    if let Some(c) = g.spectral_cap {
        limits.spectral = c;
    }
    limits.validate()?;
    Ok(limits)
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

/// Graphs from the arguments, or one per stdin line when there are none.
fn inputs(args: &[String], limits: &Limits) -> Result<Vec<Graph>> {
    if !args.is_empty() {
        return args.iter().map(|a| Ok(parse_graph(a, limits)?)).collect();
    }
    read_stdin()?
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph(l, limits)
                .map_err(|e| CliError::Usage(format!("stdin line {}: {e}", i + 1)))
        })
        .collect()
}

fn json_line(out: &mut impl Write, v: &impl serde::Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, v).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn json_pretty(out: &mut impl Write, v: &impl serde::Serialize) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn with_graph(g: &Graph, v: impl serde::Serialize) -> Value {
    let mut v = serde_json::to_value(v).expect("serializable");
    if let Value::Object(map) = &mut v {
        map.insert("graph6".into(), Value::String(to_graph6(g)));
    }
    v
}

fn spectra(out: &mut impl Write, graphs: &[Graph], kind: MatrixKind, format: Format) -> Result<()> {
    for g in graphs {
        let report = spectrum(g, kind);
        match format {
            Format::Json => json_line(out, &with_graph(g, &report))?,
            Format::Graph6 => writeln!(out, "{}\t{}", to_graph6(g), report.charpoly)?,
            Format::Table => {
                writeln!(
                    out,
                    "{}  {}  n={} m={}",
                    to_graph6(g),
                    kind.letter(),
                    report.n,
                    report.m
                )?;
                for r in report.roots.roots() {
                    let value = match r.root.exact() {
                        Some(q) => q.to_string(),
                        None => format!("{}", round_sig(r.root.approx(), 10)),
                    };
                    writeln!(out, "  {value:>16}  x{}", r.multiplicity)?;
                }
            }
        }
    }
    Ok(())
}

fn charpolys(out: &mut impl Write, g: &Graph, kind: MatrixKind, format: Format) -> Result<()> {
    let p = charpoly(g, kind);
    match format {
        Format::Json => json_pretty(
            out,
            &json!({ "graph6": to_graph6(g), "kind": kind, "charpoly": p, "text": p.to_string() }),
        ),
        Format::Graph6 => Ok(writeln!(out, "{}\t{p}", to_graph6(g))?),
        Format::Table => Ok(writeln!(out, "{p}")?),
    }
}

fn mates(
    out: &mut impl Write,
    space: &SearchSpace,
    graphs: &[Graph],
    kind: MatrixKind,
    format: Format,
) -> Result<()> {
    for g in graphs {
        let found = space.mates(g, kind)?;
        match format {
            Format::Json => json_line(out, &found)?,
            Format::Graph6 => {
                for m in &found.mates {
                    writeln!(out, "{m}")?;
                }
            }
            Format::Table => {
                writeln!(
                    out,
                    "{}  {}  {} mate(s)",
                    found.target,
                    kind.letter(),
                    found.mates.len()
                )?;
                for m in &found.mates {
                    writeln!(out, "  {m}")?;
                }
            }
        }
    }
    Ok(())
}

fn filter(f: &FilterArgs) -> Result<EnumerationFilter> {
    let mut filter = EnumerationFilter::new(f.order);
    if let Some(m) = f.size {
        filter = filter.size(m);
    } else if f.min_size.is_some() || f.max_size.is_some() {
        let all = f.order * f.order.saturating_sub(1) / 2;
        filter = filter.size_range(f.min_size.unwrap_or(0), f.max_size.unwrap_or(all));
    }
    if f.connected {
        filter = filter.connected();
    }
    if f.bipartite {
        filter = filter.bipartite();
    }
    if f.tree {
        filter = filter.tree();
    }
    if f.unicyclic {
        filter = filter.unicyclic();
    }
    if let Some(d) = f.max_degree {
        filter = filter.max_degree(d);
    }
    if let Some(seq) = &f.degrees {
        if seq.len() != f.order {
            return Err(CliError::Usage(format!(
                "--degrees has {} entries but -n is {}",
                seq.len(),
                f.order
            )));
        }
        filter = filter.degree_sequence(seq.clone());
    }
    for s in &f.spectral {
        for p in SpectralPredicate::parse_all(s)? {
            filter = filter.spectral(p);
        }
    }
    Ok(filter)
}

fn enumerate_cmd(
    out: &mut impl Write,
    f: &FilterArgs,
    limits: &Limits,
    format: Format,
) -> Result<()> {
    let filter = filter(f)?;
    let started = Instant::now();
    let graphs = enumerate(&filter, limits)?;
    match format {
        Format::Graph6 => {
            for g in &graphs {
                writeln!(out, "{}", to_graph6(g))?;
            }
        }
        Format::Table => {
            for g in &graphs {
                let seq: Vec<String> = g
                    .degree_sequence()
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                writeln!(
                    out,
                    "{:<12} m={:<3} [{}]",
                    to_graph6(g),
                    g.size(),
                    seq.join(",")
                )?;
            }
        }
        Format::Json => json_pretty(
            out,
            &json!({
                "filter": filter,
                "count": graphs.len(),
                "elapsed_ms": started.elapsed().as_millis() as u64,
                "graphs": graphs.iter().map(to_graph6).collect::<Vec<_>>(),
            }),
        )?,
    }
    Ok(())
}

fn count_cmd(out: &mut impl Write, f: &FilterArgs, limits: &Limits, format: Format) -> Result<()> {
    let filter = filter(f)?;
    let started = Instant::now();
    let n = count(&filter, limits)?;
    match format {
        Format::Json => json_line(
            out,
            &json!({ "filter": filter, "count": n, "elapsed_ms": started.elapsed().as_millis() as u64 }),
        ),
        _ => Ok(writeln!(out, "{n}")?),
    }
}

fn verify(space: &SearchSpace, target: VerifyTarget) -> Result<Vec<VerificationReport>> {
    let limits = space.limits();
    Ok(match target {
        VerifyTarget::ClosedForm { id } => {
            if id.eq_ignore_ascii_case("all") {
                Suite::standard()
                    .get("closed-forms")?
                    .run(space, &SuiteOptions::default())?
            } else if FAMILIES.iter().any(|f| f.eq_ignore_ascii_case(&id)) {
                grid(&id)?
                    .iter()
                    .map(|id| verify_closed_form(id, limits))
                    .collect::<std::result::Result<_, _>>()?
            } else {
                vec![verify_closed_form(&id.parse::<ClosedFormId>()?, limits)?]
            }
        }
        VerifyTarget::Lemma { id, max_order } => {
            if id.eq_ignore_ascii_case("all") {
                Suite::standard()
                    .get("lemmas")?
                    .run(space, &SuiteOptions { max_order })?
            } else {
                let catalog = LemmaCatalog::standard();
                let lemma = catalog.get(&id)?;
                vec![verify_lemma(
                    lemma,
                    max_order.unwrap_or(lemma.default_max_order()),
                    limits,
                )?]
            }
        }
        VerifyTarget::Theorem { which } => match which {
            Theorem::Join { n } => vec![theorems::verify_join_theorem(space, n)?],
            Theorem::Structure { n, r } => vec![theorems::verify_structure_theorem(space, n, r)?],
            Theorem::KnK2 { n, r } => vec![theorems::verify_kn_k2(space, n, r)?],
            Theorem::Unions { max_order } => theorems::union_theorem_reports(space, max_order)?,
            Theorem::Counterexample => vec![theorems::verify_counterexample(space)?],
        },
        VerifyTarget::Counterexample => vec![theorems::verify_counterexample(space)?],
        VerifyTarget::All { max_order, only } => {
            let suite = Suite::standard();
            let opts = SuiteOptions { max_order };
            if only.is_empty() {
                suite.run_all(space, &opts)?
            } else {
                let mut reports = Vec::new();
                for name in &only {
                    reports.extend(suite.get(name)?.run(space, &opts)?);
                }
                reports
            }
        }
    })
}

fn print_reports(
    out: &mut impl Write,
    reports: &[VerificationReport],
    format: Format,
) -> Result<()> {
    match format {
        Format::Json => json_pretty(out, &reports),
        Format::Graph6 => {
            for w in reports.iter().flat_map(|r| &r.witnesses) {
                writeln!(out, "{}", w.graph6)?;
            }
            Ok(())
        }
        Format::Table => {
            for r in reports {
                let tag = if r.failed() {
                    "FAIL"
                } else if r.passed() {
                    "PASS"
                } else {
                    "PARTIAL"
                };
                let ndv = if r.not_desk_verifiable {
                    "  not desk verifiable"
                } else {
                    ""
                };
                writeln!(
                    out,
                    "[{tag}] {}  checked {}  {} ms{ndv}",
                    r.claim, r.checked, r.elapsed_ms
                )?;
                for w in &r.witnesses {
                    writeln!(out, "    {}  {}", w.graph6, w.note)?;
                }
            }
            Ok(())
        }
    }
}

fn is_adjacency_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .and_then(|l| l.split_once(':'))
        .is_some_and(|(head, _)| {
            !head.is_empty() && head.trim().chars().all(|c| c.is_ascii_digit())
        })
}

fn convert(
    out: &mut impl Write,
    input: Option<String>,
    to: Target,
    seed: Option<u64>,
    limits: &Limits,
) -> Result<()> {
    let text = match input {
        Some(s) => s,
        None => read_stdin()?,
    };
    let graphs: Vec<Graph> = if is_adjacency_list(&text) {
        text.split("\n\n")
            .filter(|block| !block.trim().is_empty())
            .map(|block| Ok(from_adjacency_list(block)?))
            .collect::<Result<_>>()?
    } else {
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| Ok(parse_graph(l, limits)?))
            .collect::<Result<_>>()?
    };
    let mut rng = seed.map(rand::rngs::StdRng::seed_from_u64);
    for (i, g) in graphs.iter().enumerate() {
        let g = match rng.as_mut() {
            Some(rng) => {
                let mut perm: Vec<usize> = (0..g.order()).collect();
                perm.shuffle(rng);
                g.relabel(&perm)?
            }
            None => *g,
        };
        match to {
            Target::Graph6 => writeln!(out, "{}", to_graph6(&g))?,
            Target::Sparse6 => writeln!(out, "{}", to_sparse6(&g))?,
            Target::Adjacency => {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", to_adjacency_list(&g))?;
            }
        }
    }
    Ok(())
}
