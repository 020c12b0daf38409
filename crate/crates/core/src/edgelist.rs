//! Edge-list text: a header line `n m`, then `m` lines `i j`.

use crate::error::{Error, Result};
use crate::graph::Graph;

const FORMAT: &str = "edgelist";

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let [n, m] = numbers(hline, header)?;
    let mut g = Graph::empty(n).map_err(|e| parse_err(hline, &e.to_string()))?;
    let mut seen = 0;
    for (lineno, line) in lines {
        let [i, j] = numbers(lineno, line)?;
        if g.has_edge(i, j) {
            return Err(parse_err(lineno, &format!("duplicate edge {i} {j}")));
        }
        g = g
            .add_edge(i, j)
            .map_err(|e| parse_err(lineno, &e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(
            hline,
            &format!("header declares {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

fn numbers(lineno: usize, line: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(lineno, "expected two integers"));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| parse_err(lineno, &format!("not a non-negative integer: {s:?}")))
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse {
        format: FORMAT,
        line,
        message: message.to_string(),
    }
}
