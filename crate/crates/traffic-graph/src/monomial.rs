//! Bi-rooted graph monomials and n-rooted graph monomials.

use crate::error::GraphError;
use crate::glue::Glue;
use crate::graph::{Edge, TestGraph, VertexId};

/// A test graph with an ordered pair of roots `(input, output)`. Evaluated on
/// matrices it yields a matrix whose rows are indexed by the output vertex
/// and whose columns are indexed by the input vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphMonomial {
    graph: TestGraph,
    input: VertexId,
    output: VertexId,
}

impl GraphMonomial {
    pub fn new(graph: TestGraph, input: VertexId, output: VertexId) -> Result<Self, GraphError> {
        for v in [input, output] {
            if !graph.contains_vertex(v) {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        Ok(GraphMonomial {
            graph,
            input,
            output,
        })
    }

    /// One vertex, no edges, both roots on it. Two-sided unit of
    /// [`GraphMonomial::concat`].
    pub fn unit() -> Self {
        GraphMonomial {
            graph: TestGraph::single_vertex(),
            input: 0,
            output: 0,
        }
    }

    /// A single edge from input to output, optionally carrying the adjoint
    /// mark.
    pub fn single_edge(label: &str, star: bool) -> Self {
        let e = Edge {
            src: 0,
            tar: 1,
            label: label.to_string(),
            star,
        };
        GraphMonomial {
            graph: TestGraph::from_parts_unchecked(vec![0, 1], vec![e]),
            input: 0,
            output: 1,
        }
    }

    /// The monomial `t_x`: a single edge from input to output.
    pub fn edge(label: &str) -> Self {
        Self::single_edge(label, false)
    }

    /// The monomial `t_{x*}`.
    pub fn edge_star(label: &str) -> Self {
        Self::single_edge(label, true)
    }

    /// Directed path for a word, read right to left: the last letter is the
    /// edge leaving the input.
    pub fn eta(word: &[&str]) -> Self {
        let m = word.len() as VertexId;
        let edges = word
            .iter()
            .rev()
            .enumerate()
            .map(|(k, l)| Edge::new(k as VertexId, k as VertexId + 1, *l))
            .collect();
        GraphMonomial {
            graph: TestGraph::from_parts_unchecked((0..=m).collect(), edges),
            input: 0,
            output: m,
        }
    }

    /// Row-sum monomial: evaluates to the diagonal matrix of row sums.
    pub fn row_op(label: &str) -> Self {
        let e = Edge::new(1, 0, label);
        GraphMonomial {
            graph: TestGraph::from_parts_unchecked(vec![0, 1], vec![e]),
            input: 0,
            output: 0,
        }
    }

    /// Column-sum monomial: evaluates to the diagonal matrix of column sums.
    pub fn col_op(label: &str) -> Self {
        let e = Edge::new(0, 1, label);
        GraphMonomial {
            graph: TestGraph::from_parts_unchecked(vec![0, 1], vec![e]),
            input: 0,
            output: 0,
        }
    }

    pub fn graph(&self) -> &TestGraph {
        &self.graph
    }

    pub fn input(&self) -> VertexId {
        self.input
    }

    pub fn output(&self) -> VertexId {
        self.output
    }

    /// Product `self · other`: the output of `other` is glued to the input of
    /// `self`. The result enters at `other` and leaves at `self`.
    pub fn concat(&self, other: &GraphMonomial) -> GraphMonomial {
        let mut glue = Glue::new();
        let m2 = glue.add_graph(&other.graph, false);
        let m1 = glue.add_graph(&self.graph, false);
        let out2 = m2[other.graph.index_of(other.output).unwrap()];
        let in1 = m1[self.graph.index_of(self.input).unwrap()];
        glue.merge(out2, in1);
        let in2 = m2[other.graph.index_of(other.input).unwrap()];
        let out1 = m1[self.graph.index_of(self.output).unwrap()];
        let (vs, edges, ids) = glue.finish();
        GraphMonomial {
            graph: TestGraph::from_parts_unchecked(vs, edges),
            input: ids[in2],
            output: ids[out1],
        }
    }

    /// Reverses every edge, toggles every adjoint mark, swaps the roots.
    pub fn adjoint(&self) -> GraphMonomial {
        GraphMonomial {
            graph: self.graph.adjoint(),
            input: self.output,
            output: self.input,
        }
    }

    /// Swaps the roots only.
    pub fn transpose(&self) -> GraphMonomial {
        GraphMonomial {
            graph: self.graph.clone(),
            input: self.output,
            output: self.input,
        }
    }

    /// Superimposes two monomials, gluing inputs together and outputs
    /// together.
    pub fn hadamard(&self, other: &GraphMonomial) -> GraphMonomial {
        let mut glue = Glue::new();
        let m1 = glue.add_graph(&self.graph, false);
        let m2 = glue.add_graph(&other.graph, false);
        let i1 = m1[self.graph.index_of(self.input).unwrap()];
        let o1 = m1[self.graph.index_of(self.output).unwrap()];
        glue.merge(i1, m2[other.graph.index_of(other.input).unwrap()]);
        glue.merge(o1, m2[other.graph.index_of(other.output).unwrap()]);
        let (vs, edges, ids) = glue.finish();
        GraphMonomial {
            graph: TestGraph::from_parts_unchecked(vs, edges),
            input: ids[i1],
            output: ids[o1],
        }
    }

    /// Identifies input with output and forgets the roots.
    pub fn delta(&self) -> TestGraph {
        let mut glue = Glue::new();
        let m = glue.add_graph(&self.graph, false);
        glue.merge(
            m[self.graph.index_of(self.input).unwrap()],
            m[self.graph.index_of(self.output).unwrap()],
        );
        let (vs, edges, _) = glue.finish();
        TestGraph::from_parts_unchecked(vs, edges)
    }

    /// Views the monomial as a 2-rooted n-graph monomial `[input, output]`.
    pub fn to_ngraph(&self) -> NGraphMonomial {
        NGraphMonomial {
            graph: self.graph.clone(),
            roots: vec![self.input, self.output],
        }
    }
}

/// A test graph with an ordered list of (not necessarily distinct) roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NGraphMonomial {
    graph: TestGraph,
    roots: Vec<VertexId>,
}

impl NGraphMonomial {
    pub fn new(graph: TestGraph, roots: Vec<VertexId>) -> Result<Self, GraphError> {
        for &v in &roots {
            if !graph.contains_vertex(v) {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        Ok(NGraphMonomial { graph, roots })
    }

    pub fn graph(&self) -> &TestGraph {
        &self.graph
    }

    pub fn roots(&self) -> &[VertexId] {
        &self.roots
    }

    /// Reverses edges and toggles adjoint marks; the roots keep their order.
    pub fn adjoint(&self) -> NGraphMonomial {
        NGraphMonomial {
            graph: self.graph.adjoint(),
            roots: self.roots.clone(),
        }
    }

    /// Interprets a 2-rooted n-graph monomial as `(input, output)`.
    pub fn to_monomial(&self) -> Option<GraphMonomial> {
        match self.roots[..] {
            [i, o] => Some(GraphMonomial {
                graph: self.graph.clone(),
                input: i,
                output: o,
            }),
            _ => None,
        }
    }
}

/// `Δ_n(t1, t2)`: disjoint copies of `t1` and `t2` with the roots identified
/// coordinatewise. Positivity concerns `Δ_n(t*, t)`, with the adjoint taken
/// by the caller.
pub fn delta_n(t1: &NGraphMonomial, t2: &NGraphMonomial) -> Result<TestGraph, GraphError> {
    if t1.roots.len() != t2.roots.len() {
        return Err(GraphError::RootCountMismatch {
            left: t1.roots.len(),
            right: t2.roots.len(),
        });
    }
    let mut glue = Glue::new();
    let m1 = glue.add_graph(&t1.graph, false);
    let m2 = glue.add_graph(&t2.graph, false);
    for (&r1, &r2) in t1.roots.iter().zip(&t2.roots) {
        glue.merge(
            m1[t1.graph.index_of(r1).unwrap()],
            m2[t2.graph.index_of(r2).unwrap()],
        );
    }
    glue.finish_graph().map(|(g, _)| g)
}
