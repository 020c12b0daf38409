use std::fs;
use std::io::{self, Read};
use std::path::Path;

use cliquesat::edgelist::{from_edge_list, to_edge_list};
use cliquesat::graph6::{read_graph6, to_graph6};
use cliquesat::saturation::{certify_saturated_with, Witness};
use cliquesat::search::{enumerate_graphs_with, SearchStatus, DEFAULT_EDGE_GUARD};
use cliquesat::structure::audit;
use cliquesat::{
    build_extremal, compute_sat, sat_formula, verify_theorem, CliquePattern, Embedding, Graph,
    SaturatedGraph, SearchOptions, SearchReport, VertexSet, Workers,
};
use serde_json::{json, Value};

use crate::args::{Command, Format, InputArgs, OutputArgs, SearchArgs};
use crate::{CliError, EXIT_LIMIT, EXIT_PROPERTY};

pub fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Construct { n, pattern, output } => construct(n, pattern.pattern_for(n)?, &output),
        Command::Check {
            input,
            pattern,
            witness,
            workers,
            json,
        } => {
            let g = read_graph(&input)?;
            let pat = pattern.pattern_for(g.n())?;
            check(&g, &pat, witness, &Workers::new(workers)?, json)
        }
        Command::Satnum {
            n,
            pattern,
            search,
            json,
        } => {
            let pat = pattern.pattern_for(n)?;
            satnum(n, &pat, &search, json)
        }
        Command::Enumerate {
            n,
            m,
            pattern,
            workers,
            allow_large,
            output,
        } => {
            let pat = pattern.pattern_for(n)?;
            if m > DEFAULT_EDGE_GUARD && !allow_large {
                return Err(CliError::limit(format!(
                    "m={m} exceeds the edge guard {DEFAULT_EDGE_GUARD}; pass --allow-large"
                )));
            }
            enumerate(n, m, pat.as_ref(), &Workers::new(workers)?, &output)
        }
        Command::Analyze {
            input,
            pattern,
            packing,
            cap,
            json,
        } => {
            let g = read_graph(&input)?;
            let pat = pattern.pattern_for(g.n())?;
            let f = packing.as_deref().map(parse_packing).transpose()?;
            analyze(g, &pat, f, cap, json)
        }
        Command::VerifyTheorem {
            n,
            pattern,
            search,
            allow_below_bound,
            json,
        } => {
            let pat = pattern.pattern_for(n)?;
            theorem(n, &pat, &search, allow_below_bound, json)
        }
    }
}

fn construct(n: usize, pat: CliquePattern, output: &OutputArgs) -> Result<u8, CliError> {
    let g = build_extremal(n, &pat)?;
    let formula = sat_formula(n, &pat)?;
    let rendered = render(&g, output.format)?;
    let summary = format!("n={n} edges={} sat_formula={formula}", g.edge_count());
    if output.json {
        let doc = document(
            "construct",
            json!({
                "n": n,
                "pattern": pat,
                "edges": g.edge_count(),
                "sat_formula": formula,
                "graph": rendered,
            }),
        );
        emit(&doc, output.output.as_deref())?;
        return Ok(0);
    }
    emit(&rendered, output.output.as_deref())?;
    if output.output.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(0)
}

fn check(
    g: &Graph,
    pat: &CliquePattern,
    witness: bool,
    workers: &Workers,
    json: bool,
) -> Result<u8, CliError> {
    let verdict = certify_saturated_with(g, pat, workers);
    let code = if verdict.saturated { 0 } else { EXIT_PROPERTY };
    if json {
        let mut body = json!({
            "n": g.n(),
            "pattern": pat,
            "free": verdict.free,
            "saturated": verdict.saturated,
        });
        if witness {
            body["witness"] = serde_json::to_value(&verdict.failing_witness).expect("serializable");
        }
        print!("{}", document("check", body));
        return Ok(code);
    }
    let mut out = format!(
        "n: {}\npattern: {pat}\nfree: {}\nsaturated: {}\n",
        g.n(),
        verdict.free,
        verdict.saturated
    );
    if witness {
        let line = match &verdict.failing_witness {
            None => "none".to_string(),
            Some(Witness::Embedding { embedding }) => format!("embedding {embedding}"),
            Some(Witness::NonEdge { u, v }) => format!("non_edge {u} {v}"),
        };
        out.push_str(&format!("witness: {line}\n"));
    }
    print!("{out}");
    Ok(code)
}

fn search_options(search: &SearchArgs) -> Result<SearchOptions, CliError> {
    Ok(SearchOptions {
        budget: search.budget,
        allow_large: search.allow_large,
        workers: Workers::new(search.workers)?,
        ..SearchOptions::default()
    })
}

/// Exit code for a search that found nothing, with the reason on stderr.
fn unfinished(report: &SearchReport) -> u8 {
    let frontier = report
        .frontier
        .map_or("none".to_string(), |m| m.to_string());
    if report.status == SearchStatus::Truncated {
        eprintln!(
            "search stopped at frontier m={frontier} below the budget {}; pass --allow-large to go further",
            report.edge_budget
        );
        EXIT_LIMIT
    } else if report.edge_budget < report.formula_value {
        eprintln!(
            "no saturated graph with at most {} edges; the formula gives {}",
            report.edge_budget, report.formula_value
        );
        EXIT_LIMIT
    } else {
        EXIT_PROPERTY
    }
}

fn satnum(n: usize, pat: &CliquePattern, search: &SearchArgs, json: bool) -> Result<u8, CliError> {
    let report = compute_sat(n, pat, &search_options(search)?)?;
    if json {
        print!("{}", document("satnum", json!({ "report": report })));
    } else {
        print!("{}", report.to_text());
    }
    Ok(match report.status {
        SearchStatus::Found => 0,
        _ => unfinished(&report),
    })
}

fn enumerate(
    n: usize,
    m: usize,
    pat: Option<&CliquePattern>,
    workers: &Workers,
    output: &OutputArgs,
) -> Result<u8, CliError> {
    if n == 0 || n > cliquesat::MAX_VERTICES {
        return Err(cliquesat::Error::InvalidOrder(n).into());
    }
    let classes = enumerate_graphs_with(n.min(2 * m), m, workers);
    let padded: Vec<Graph> = classes
        .iter()
        .map(|g| g.pad_to(n))
        .collect::<Result<_, _>>()?;
    let kept: Vec<Graph> = match pat {
        None => padded,
        Some(pat) => padded
            .into_iter()
            .filter(|g| certify_saturated_with(g, pat, workers).saturated)
            .collect(),
    };
    let rendered: Vec<String> = kept
        .iter()
        .map(|g| render(g, output.format))
        .collect::<Result<_, _>>()?;
    let summary = match pat {
        None => format!("classes={}", classes.len()),
        Some(_) => format!("classes={} saturated={}", classes.len(), kept.len()),
    };
    if output.json {
        let mut body = json!({
            "n": n,
            "m": m,
            "classes": classes.len(),
            "graphs": rendered,
        });
        if let Some(pat) = pat {
            body["pattern"] = json!(pat);
            body["saturated"] = json!(kept.len());
        }
        emit(&document("enumerate", body), output.output.as_deref())?;
        return Ok(0);
    }
    let separator = if output.format == Format::Edgelist {
        "\n"
    } else {
        ""
    };
    emit(&rendered.join(separator), output.output.as_deref())?;
    if output.output.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(0)
}

fn analyze(
    g: Graph,
    pat: &CliquePattern,
    f: Option<Embedding>,
    cap: usize,
    json: bool,
) -> Result<u8, CliError> {
    let sat = SaturatedGraph::certify(g, pat)
        .map_err(|_| CliError::property(format!("the graph is not {pat}-saturated")))?;
    let report = audit(&sat, f, cap)?;
    if json {
        print!("{}", document("analyze", json!({ "report": report })));
    } else {
        print!("{}", report.to_text());
    }
    Ok(if !report.all_passed() {
        EXIT_PROPERTY
    } else if report.verdicts.iter().any(|c| c.partial) {
        eprintln!("packing enumeration hit the cap {cap}; some checks are partial");
        EXIT_LIMIT
    } else {
        0
    })
}

fn theorem(
    n: usize,
    pat: &CliquePattern,
    search: &SearchArgs,
    allow_below_bound: bool,
    json: bool,
) -> Result<u8, CliError> {
    let (confirmed, report) = verify_theorem(n, pat, &search_options(search)?, allow_below_bound)?;
    let verdict = if confirmed {
        "THEOREM CONFIRMED"
    } else {
        "THEOREM NOT CONFIRMED"
    };
    if json {
        let body = json!({ "verdict": verdict, "confirmed": confirmed, "report": report });
        print!("{}", document("verify-theorem", body));
    } else {
        print!("{verdict}\n{}", report.to_text());
    }
    Ok(match report.status {
        _ if confirmed => 0,
        SearchStatus::Found => EXIT_PROPERTY,
        _ => unfinished(&report),
    })
}

/// One JSON document carrying `"format": 1` and the command name.
fn document(command: &str, body: Value) -> String {
    let mut doc = json!({ "format": 1, "command": command });
    if let (Some(doc), Value::Object(fields)) = (doc.as_object_mut(), body) {
        doc.extend(fields);
    }
    let mut text = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
    text.push('\n');
    text
}

fn render(g: &Graph, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Graph6 => to_graph6(g)? + "\n",
        Format::Edgelist => to_edge_list(g),
    })
}

fn emit(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_graph(input: &InputArgs) -> Result<Graph, CliError> {
    let text = match &input.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let g = parse_graph(&text, input.format)?;
    if let Some(n) = input.n {
        if n != g.n() {
            return Err(CliError::usage(format!(
                "the input has {} vertices but --n {n} was given",
                g.n()
            )));
        }
    }
    Ok(g)
}

fn parse_graph(text: &str, format: Format) -> Result<Graph, CliError> {
    match format {
        Format::Edgelist => Ok(from_edge_list(text)?),
        Format::Graph6 => {
            let mut graphs = read_graph6(text)?;
            match graphs.len() {
                1 => Ok(graphs.pop().unwrap()),
                k => Err(CliError::usage(format!(
                    "expected one graph6 line, found {k}"
                ))),
            }
        }
    }
}

/// Parses `"1,2,3;4,5,6"` into one part per `;`-separated group.
fn parse_packing(text: &str) -> Result<Embedding, CliError> {
    let parts = text
        .split(';')
        .filter(|group| !group.trim().is_empty())
        .map(|group| {
            group
                .split(',')
                .map(|v| {
                    v.trim()
                        .parse::<usize>()
                        .ok()
                        .filter(|&v| v < cliquesat::MAX_VERTICES)
                        .ok_or_else(|| CliError::usage(format!("bad vertex {v:?} in --packing")))
                })
                .collect::<Result<VertexSet, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Embedding::new(parts))
}
