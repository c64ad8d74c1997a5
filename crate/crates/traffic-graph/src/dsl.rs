//! Line-oriented text format for test graphs and rooted monomials.
//!
//! ```text
//! # opposing double edge, rooted at both ends
//! e 1 2 x
//! e 2 1 x
//! in 1
//! out 2
//! ```
//!
//! Lines are `e <src> <dst> <label>` (append `*` to the label for the
//! adjoint mark), `v <id>` for a vertex without edges, `in <v>` and
//! `out <v>` for a bi-rooted monomial, or `roots <v1> <v2> ...` for an
//! n-rooted monomial. Vertex ids are decimal integers and labels match
//! `[A-Za-z][A-Za-z0-9_]*`. Everything after `#` is a comment.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::GraphError;
use crate::graph::{Edge, TestGraph, VertexId};
use crate::monomial::{GraphMonomial, NGraphMonomial};

/// What a document describes, decided by its root lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedGraph {
    Graph(TestGraph),
    Monomial(GraphMonomial),
    NGraph(NGraphMonomial),
}

impl ParsedGraph {
    /// The underlying test graph, roots dropped.
    pub fn graph(&self) -> &TestGraph {
        match self {
            ParsedGraph::Graph(g) => g,
            ParsedGraph::Monomial(m) => m.graph(),
            ParsedGraph::NGraph(n) => n.graph(),
        }
    }

    pub fn as_monomial(&self) -> Option<&GraphMonomial> {
        match self {
            ParsedGraph::Monomial(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_ngraph(&self) -> Option<&NGraphMonomial> {
        match self {
            ParsedGraph::NGraph(n) => Some(n),
            _ => None,
        }
    }
}

impl From<TestGraph> for ParsedGraph {
    fn from(g: TestGraph) -> Self {
        ParsedGraph::Graph(g)
    }
}

impl From<GraphMonomial> for ParsedGraph {
    fn from(m: GraphMonomial) -> Self {
        ParsedGraph::Monomial(m)
    }
}

impl From<NGraphMonomial> for ParsedGraph {
    fn from(n: NGraphMonomial) -> Self {
        ParsedGraph::NGraph(n)
    }
}

/// Parse failure. `line` and `column` are 1-based; both are 0 for errors
/// about the document as a whole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DslError {
    pub line: usize,
    pub column: usize,
    pub kind: DslErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DslErrorKind {
    Syntax(String),
    DanglingVertex(VertexId),
    DuplicateRoot(&'static str),
    MissingRoot(&'static str),
    Empty,
    Disconnected,
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "{}:{}: ", self.line, self.column)?;
        }
        match &self.kind {
            DslErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            DslErrorKind::DanglingVertex(v) => write!(f, "vertex {v} does not occur in the graph"),
            DslErrorKind::DuplicateRoot(what) => write!(f, "`{what}` given more than once"),
            DslErrorKind::MissingRoot(what) => write!(f, "missing `{what}` line"),
            DslErrorKind::Empty => write!(f, "document declares no vertices"),
            DslErrorKind::Disconnected => write!(f, "graph is not connected"),
        }
    }
}

impl std::error::Error for DslError {}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let content = match line.find('#') {
        Some(p) => &line[..p],
        None => line,
    };
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in content.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &content[s..i],
                    column: content[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &content[s..],
            column: content[..s].chars().count() + 1,
        });
    }
    out
}

fn syntax(line: usize, column: usize, msg: impl Into<String>) -> DslError {
    DslError {
        line,
        column,
        kind: DslErrorKind::Syntax(msg.into()),
    }
}

fn parse_vertex(tok: &Token<'_>, line: usize) -> Result<VertexId, DslError> {
    if !tok.text.chars().all(|c| c.is_ascii_digit()) {
        return Err(syntax(
            line,
            tok.column,
            format!("expected a vertex id, found `{}`", tok.text),
        ));
    }
    tok.text.parse::<VertexId>().map_err(|_| {
        syntax(
            line,
            tok.column,
            format!("vertex id `{}` out of range", tok.text),
        )
    })
}

fn valid_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses a document. Root lines decide the result type: none gives a test
/// graph, `in`/`out` a bi-rooted monomial, `roots` an n-rooted monomial.
pub fn parse_dsl(text: &str) -> Result<ParsedGraph, DslError> {
    let mut vertices: BTreeSet<VertexId> = BTreeSet::new();
    let mut edges: Vec<Edge> = Vec::new();
    let mut input: Option<(VertexId, usize, usize)> = None;
    let mut output: Option<(VertexId, usize, usize)> = None;
    let mut roots: Option<(Vec<(VertexId, usize)>, usize)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks = tokenize(raw);
        let Some(head) = toks.first() else { continue };
        match head.text {
            "e" => {
                if toks.len() != 4 {
                    return Err(syntax(
                        line,
                        head.column,
                        "edge lines are `e <src> <dst> <label>`",
                    ));
                }
                let src = parse_vertex(&toks[1], line)?;
                let tar = parse_vertex(&toks[2], line)?;
                let (label, star) = match toks[3].text.strip_suffix('*') {
                    Some(l) => (l, true),
                    None => (toks[3].text, false),
                };
                if !valid_label(label) {
                    return Err(syntax(
                        line,
                        toks[3].column,
                        format!("invalid label `{}`", toks[3].text),
                    ));
                }
                vertices.insert(src);
                vertices.insert(tar);
                edges.push(Edge {
                    src,
                    tar,
                    label: label.to_string(),
                    star,
                });
            }
            "v" => {
                if toks.len() != 2 {
                    return Err(syntax(line, head.column, "vertex lines are `v <id>`"));
                }
                vertices.insert(parse_vertex(&toks[1], line)?);
            }
            "in" | "out" => {
                if toks.len() != 2 {
                    return Err(syntax(
                        line,
                        head.column,
                        format!("expected `{} <vertex>`", head.text),
                    ));
                }
                let v = parse_vertex(&toks[1], line)?;
                let (slot, name) = if head.text == "in" {
                    (&mut input, "in")
                } else {
                    (&mut output, "out")
                };
                if slot.is_some() {
                    return Err(DslError {
                        line,
                        column: head.column,
                        kind: DslErrorKind::DuplicateRoot(name),
                    });
                }
                *slot = Some((v, line, toks[1].column));
            }
            "roots" => {
                if roots.is_some() {
                    return Err(DslError {
                        line,
                        column: head.column,
                        kind: DslErrorKind::DuplicateRoot("roots"),
                    });
                }
                let mut rs = Vec::new();
                for t in &toks[1..] {
                    rs.push((parse_vertex(t, line)?, t.column));
                }
                roots = Some((rs, line));
            }
            other => {
                return Err(syntax(
                    line,
                    head.column,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }

    if let Some((_, line)) = &roots {
        if let Some((_, l, c)) = input.or(output) {
            let _ = line;
            return Err(syntax(l, c, "`roots` cannot be combined with `in`/`out`"));
        }
    }
    let check = |v: VertexId, line: usize, column: usize| {
        if vertices.contains(&v) {
            Ok(())
        } else {
            Err(DslError {
                line,
                column,
                kind: DslErrorKind::DanglingVertex(v),
            })
        }
    };
    for (v, l, c) in input.iter().chain(output.iter()) {
        check(*v, *l, *c)?;
    }
    if let Some((rs, line)) = &roots {
        for (v, c) in rs {
            check(*v, *line, *c)?;
        }
    }
    let whole = |kind| DslError {
        line: 0,
        column: 0,
        kind,
    };
    let graph = TestGraph::new(vertices.iter().copied(), edges).map_err(|e| match e {
        GraphError::EmptyVertexSet => whole(DslErrorKind::Empty),
        _ => whole(DslErrorKind::Disconnected),
    })?;
    match (input, output, roots) {
        (None, None, None) => Ok(ParsedGraph::Graph(graph)),
        (Some((i, ..)), Some((o, ..)), None) => Ok(ParsedGraph::Monomial(
            GraphMonomial::new(graph, i, o).expect("roots checked"),
        )),
        (Some(_), None, None) => Err(whole(DslErrorKind::MissingRoot("out"))),
        (None, Some(_), None) => Err(whole(DslErrorKind::MissingRoot("in"))),
        (_, _, Some((rs, _))) => Ok(ParsedGraph::NGraph(
            NGraphMonomial::new(graph, rs.into_iter().map(|(v, _)| v).collect())
                .expect("roots checked"),
        )),
    }
}

/// Writes a document that [`parse_dsl`] reads back to an isomorphic object.
pub fn serialize(g: &ParsedGraph) -> String {
    let graph = g.graph();
    let mut out = String::new();
    let mut touched: BTreeSet<VertexId> = BTreeSet::new();
    for e in graph.edges() {
        touched.insert(e.src);
        touched.insert(e.tar);
    }
    for &v in graph.vertices() {
        if !touched.contains(&v) {
            out.push_str(&format!("v {v}\n"));
        }
    }
    for e in graph.edges() {
        let star = if e.star { "*" } else { "" };
        out.push_str(&format!("e {} {} {}{}\n", e.src, e.tar, e.label, star));
    }
    match g {
        ParsedGraph::Graph(_) => {}
        ParsedGraph::Monomial(m) => {
            out.push_str(&format!("in {}\nout {}\n", m.input(), m.output()));
        }
        ParsedGraph::NGraph(n) => {
            out.push_str("roots");
            for r in n.roots() {
                out.push_str(&format!(" {r}"));
            }
            out.push('\n');
        }
    }
    out
}
