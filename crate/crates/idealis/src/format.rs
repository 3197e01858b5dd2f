//! Text and JSON input formats: monomials, ideals, graph specs.

use std::fmt;
use std::path::Path;

use idealis_core::{
    Adjacency, Monomial, MonomialIdeal, PartitionedGraph, PartitionedVariableSet, Vertex,
};
use serde::Deserialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Invalid(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Resolves `@path` to the file contents; anything else is returned as is.
pub fn read_argument(arg: &str) -> Result<String, FormatError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(Path::new(path)).map_err(|e| FormatError::Io {
            path: path.to_string(),
            message: e.to_string(),
        }),
        None => Ok(arg.to_string()),
    }
}

/// One factor `x<block>_<position>^<exp>`, 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub block: usize,
    pub position: usize,
    pub exp: u32,
}

/// Parses a monomial without reference to a variable set. `line` is only
/// used in error locations.
pub fn parse_factors(text: &str, line: usize) -> Result<Vec<Factor>, FormatError> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    if body.is_empty() {
        return Err(syntax(line, lead + 1, "empty monomial"));
    }
    if body == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut col = lead;
    for part in body.split('*') {
        let start = col + (part.len() - part.trim_start().len()) + 1;
        out.push(parse_factor(part.trim(), line, start)?);
        col += part.len() + 1;
    }
    Ok(out)
}

fn parse_factor(s: &str, line: usize, column: usize) -> Result<Factor, FormatError> {
    let rest = s
        .strip_prefix('x')
        .ok_or_else(|| syntax(line, column, format!("expected `x<i>_<h>`, found `{s}`")))?;
    let (var, exp) = match rest.split_once('^') {
        Some((v, e)) => (v, Some(e)),
        None => (rest, None),
    };
    let (b, p) = var
        .split_once('_')
        .ok_or_else(|| syntax(line, column, format!("missing `_` in `{s}`")))?;
    let index = |t: &str, what: &str| -> Result<usize, FormatError> {
        match t.parse::<usize>() {
            Ok(0) | Err(_) => Err(syntax(
                line,
                column,
                format!("bad {what} index `{t}` in `{s}`"),
            )),
            Ok(n) => Ok(n),
        }
    };
    let exp = match exp {
        None => 1,
        Some(e) => e
            .parse::<u32>()
            .map_err(|_| syntax(line, column, format!("bad exponent `{e}` in `{s}`")))?,
    };
    Ok(Factor {
        block: index(b, "block")?,
        position: index(p, "position")?,
        exp,
    })
}

/// Parses `x<i>_<h>` as a vertex.
pub fn parse_vertex(s: &str) -> Result<Vertex, FormatError> {
    let f = parse_factor(s.trim(), 1, 1)?;
    if f.exp != 1 {
        return Err(FormatError::Invalid(format!(
            "`{s}` is not a single variable"
        )));
    }
    Ok(Vertex::new(f.block, f.position))
}

/// Parses a comma-separated block list like `3,2`.
pub fn parse_blocks(s: &str) -> Result<Vec<usize>, FormatError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| FormatError::Invalid(format!("bad block size `{t}`")))
        })
        .collect()
}

/// Block sizes just large enough for every factor.
pub fn infer_blocks<'a>(monomials: impl IntoIterator<Item = &'a [Factor]>) -> Vec<usize> {
    let mut blocks: Vec<usize> = Vec::new();
    for f in monomials.into_iter().flatten() {
        if blocks.len() < f.block {
            blocks.resize(f.block, 1);
        }
        blocks[f.block - 1] = blocks[f.block - 1].max(f.position);
    }
    if blocks.is_empty() {
        blocks.push(1);
    }
    blocks
}

fn monomial_in(
    vars: &PartitionedVariableSet,
    factors: &[Factor],
    line: usize,
) -> Result<Monomial, FormatError> {
    let mut exps = vec![0u32; vars.num_vars()];
    for f in factors {
        let i = vars
            .index(f.block, f.position)
            .map_err(|e| syntax(line, 1, format!("x{}_{}: {e}", f.block, f.position)))?;
        exps[i] = exps[i]
            .checked_add(f.exp)
            .ok_or_else(|| syntax(line, 1, "exponent overflow"))?;
    }
    Ok(Monomial::new(exps))
}

/// Parses a monomial against a known variable set.
pub fn parse_monomial(vars: &PartitionedVariableSet, text: &str) -> Result<Monomial, FormatError> {
    monomial_in(vars, &parse_factors(text, 1)?, 1)
}

/// Splits ideal text into `(line, monomial text)` pairs: a JSON array of
/// strings, or one monomial per nonblank line.
fn ideal_items(text: &str) -> Result<Vec<(usize, String)>, FormatError> {
    if text.trim_start().starts_with('[') {
        let items: Vec<String> =
            serde_json::from_str(text).map_err(|e| syntax(e.line(), e.column(), e.to_string()))?;
        return Ok(items.into_iter().map(|s| (1, s)).collect());
    }
    Ok(text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l.to_string()))
        .collect())
}

/// Parses an ideal; block sizes are inferred from the variables used
/// unless given.
pub fn parse_ideal(text: &str, blocks: Option<&[usize]>) -> Result<MonomialIdeal, FormatError> {
    let items = ideal_items(text)?;
    let parsed = items
        .iter()
        .map(|(line, s)| parse_factors(s, *line).map(|f| (*line, f)))
        .collect::<Result<Vec<_>, _>>()?;
    let blocks = match blocks {
        Some(b) => b.to_vec(),
        None => infer_blocks(parsed.iter().map(|(_, f)| f.as_slice())),
    };
    let vars =
        PartitionedVariableSet::new(&blocks).map_err(|e| FormatError::Invalid(e.to_string()))?;
    let gens = parsed
        .iter()
        .map(|(line, f)| monomial_in(&vars, f, *line))
        .collect::<Result<Vec<_>, _>>()?;
    MonomialIdeal::minimalize(&vars, gens).map_err(|e| FormatError::Invalid(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
enum EdgeSpec {
    Keyword(String),
    List(Vec<(String, String)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
enum LoopSpec {
    Keyword(String),
    List(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphSpec {
    blocks: Vec<usize>,
    edges: EdgeSpec,
    loops: LoopSpec,
}

/// Parses graph JSON `{"blocks":[..],"edges":"complete"|[[u,v],..],"loops":"all"|"none"|[v,..]}`.
/// `adjacency` only affects `"complete"`.
pub fn parse_graph(text: &str, adjacency: Adjacency) -> Result<PartitionedGraph, FormatError> {
    let spec: GraphSpec =
        serde_json::from_str(text).map_err(|e| syntax(e.line(), e.column(), e.to_string()))?;
    let invalid = |e: idealis_core::Error| FormatError::Invalid(e.to_string());
    let vars = PartitionedVariableSet::new(&spec.blocks).map_err(invalid)?;
    let all_vertices = || {
        (0..vars.num_vars()).map(|i| {
            let (b, p) = vars.locate(i).expect("in range");
            Vertex::new(b, p)
        })
    };
    let loops: Vec<Vertex> = match &spec.loops {
        LoopSpec::Keyword(k) if k == "all" => all_vertices().collect(),
        LoopSpec::Keyword(k) if k == "none" => Vec::new(),
        LoopSpec::Keyword(k) => {
            return Err(FormatError::Invalid(format!("unknown loops keyword `{k}`")))
        }
        LoopSpec::List(l) => l
            .iter()
            .map(|s| parse_vertex(s))
            .collect::<Result<_, _>>()?,
    };
    let edges: Vec<(Vertex, Vertex)> = match &spec.edges {
        EdgeSpec::Keyword(k) if k == "complete" => {
            PartitionedGraph::complete_n_partite(&spec.blocks, adjacency)
                .map_err(invalid)?
                .edges()
                .collect()
        }
        EdgeSpec::Keyword(k) => {
            return Err(FormatError::Invalid(format!("unknown edges keyword `{k}`")))
        }
        EdgeSpec::List(l) => l
            .iter()
            .map(|(u, v)| Ok((parse_vertex(u)?, parse_vertex(v)?)))
            .collect::<Result<_, FormatError>>()?,
    };
    PartitionedGraph::quasi_n_partite(&spec.blocks, &edges, &loops).map_err(invalid)
}

/// Canonical graph JSON, suitable for replay.
pub fn graph_spec(g: &PartitionedGraph) -> String {
    let edges: Vec<[String; 2]> = g
        .edges()
        .map(|(u, v)| [u.to_string(), v.to_string()])
        .collect();
    let loops: Vec<String> = g.loops().map(|v| v.to_string()).collect();
    serde_json::json!({ "blocks": g.vars().block_sizes(), "edges": edges, "loops": loops })
        .to_string()
}

/// Generators in canonical order, each in monomial text format.
pub fn generator_strings(ideal: &MonomialIdeal) -> Vec<String> {
    ideal
        .generators()
        .iter()
        .map(|g| g.display(ideal.vars()).to_string())
        .collect()
}

/// `(g1, g2, ...)`; the zero ideal prints as `(0)`.
pub struct IdealText<'a>(pub &'a MonomialIdeal);

impl fmt::Display for IdealText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return f.write_str("(0)");
        }
        write!(f, "({})", generator_strings(self.0).join(", "))
    }
}
