//! Induction graphs over equivalence or similarity classes.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write;

use crate::error::{Error, Result, Side};
use crate::iet::{CanonicalIet, CanonicalMode, Iet, SemiInterval};
use crate::induction::{rauzy_step, ChiSequence};
use crate::morphism::Morphism;

/// Default vertex budget for [`build_graph`].
pub const DEFAULT_VERTEX_BUDGET: usize = 10_000;

#[derive(Clone, Debug)]
pub struct GraphVertex {
    pub class: CanonicalIet,
    /// The transformation of this class first reached from the root, on a subinterval
    /// of the root's domain.
    pub representative: Iet,
    /// Steps leading from the root's transformation to `representative`.
    pub chi: ChiSequence,
    /// Composed automorphism along `chi`.
    pub theta: Morphism,
}

/// One induction step from a vertex representative.
#[derive(Clone, Debug)]
pub struct Transition {
    pub from: usize,
    pub side: Side,
    pub to: usize,
    /// Domain of the child transformation actually computed.
    pub domain: SemiInterval,
    pub automorphism: Morphism,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphEdge {
    pub from: usize,
    /// `None` in similarity mode, where edges carry no label.
    pub kind: Option<Side>,
    pub to: usize,
}

#[derive(Clone, Debug)]
pub struct InductionGraph {
    pub mode: CanonicalMode,
    pub vertices: Vec<GraphVertex>,
    pub edges: Vec<GraphEdge>,
    pub transitions: Vec<Transition>,
    pub root: usize,
}

/// Breadth-first closure of `[T]` under `ψ` and `φ`.
///
/// A connection met while expanding a vertex means `T` is not regular; it is
/// returned as `NotRegular` with the path to the offending vertex.
pub fn build_graph(t: &Iet, mode: CanonicalMode, max_vertices: usize) -> Result<InductionGraph> {
    let root = GraphVertex {
        class: t.canonical_form(mode),
        representative: t.clone(),
        chi: ChiSequence::default(),
        theta: Morphism::identity(t.alphabet()),
    };
    let mut index: HashMap<CanonicalIet, usize> = HashMap::from([(root.class.clone(), 0)]);
    let mut vertices = vec![root];
    let mut transitions = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        if t.size() < 2 {
            break;
        }
        for side in [Side::Right, Side::Left] {
            let rep = &vertices[v].representative;
            let step = rauzy_step(rep, side).map_err(|e| match e {
                Error::ConnectionDetected { connection, .. } => Error::NotRegular(format!(
                    "{} induction after `{}` hits a connection at {}",
                    connection.side, vertices[v].chi, connection.point
                )),
                other => other,
            })?;
            let class = step.result.canonical_form(mode);
            let to = match index.get(&class) {
                Some(&i) => i,
                None => {
                    if vertices.len() >= max_vertices {
                        return Err(Error::VertexBudgetExceeded { budget: max_vertices });
                    }
                    let mut chi = vertices[v].chi.clone();
                    chi.0.push(side);
                    let theta = vertices[v].theta.compose(&step.automorphism);
                    let i = vertices.len();
                    vertices.push(GraphVertex {
                        class: class.clone(),
                        representative: step.result.clone(),
                        chi,
                        theta,
                    });
                    index.insert(class, i);
                    queue.push_back(i);
                    i
                }
            };
            transitions.push(Transition {
                from: v,
                side,
                to,
                domain: step.result.domain(),
                automorphism: step.automorphism,
            });
        }
    }
    let mut edges: Vec<GraphEdge> = transitions
        .iter()
        .map(|tr| GraphEdge {
            from: tr.from,
            kind: (mode == CanonicalMode::Equivalence).then_some(tr.side),
            to: tr.to,
        })
        .collect();
    if mode == CanonicalMode::Similarity {
        edges.sort();
        edges.dedup();
    }
    Ok(InductionGraph { mode, vertices, edges, transitions, root: 0 })
}

impl InductionGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn find(&self, class: &CanonicalIet) -> Option<usize> {
        self.vertices.iter().position(|v| &v.class == class)
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.iter().any(|e| e.from == from && e.to == to)
    }

    pub fn successors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.edges.iter().filter(|e| e.from == v).map(|e| e.to).collect();
        out.dedup();
        out
    }

    /// Shortest cycle through `v` as a list of transition indices, if any.
    pub fn shortest_cycle_through(&self, v: usize) -> Option<Vec<usize>> {
        let mut pred: HashMap<usize, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        for (i, tr) in self.transitions.iter().enumerate().filter(|(_, tr)| tr.from == v) {
            if tr.to == v {
                return Some(vec![i]);
            }
            if let std::collections::hash_map::Entry::Vacant(e) = pred.entry(tr.to) {
                e.insert(i);
                queue.push_back(tr.to);
            }
        }
        while let Some(x) = queue.pop_front() {
            for (i, tr) in self.transitions.iter().enumerate().filter(|(_, tr)| tr.from == x) {
                if tr.to == v {
                    let mut path = vec![i];
                    let mut cur = x;
                    while cur != v {
                        let j = pred[&cur];
                        path.push(j);
                        cur = self.transitions[j].from;
                    }
                    path.reverse();
                    return Some(path);
                }
                if let std::collections::hash_map::Entry::Vacant(e) = pred.entry(tr.to) {
                    e.insert(i);
                    queue.push_back(tr.to);
                }
            }
        }
        None
    }

    /// DOT rendering; vertices labelled by canonical form, edges by `ψ`/`φ` in
    /// equivalence mode.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let name = match self.mode {
            CanonicalMode::Equivalence => "induction_graph",
            CanonicalMode::Similarity => "modified_induction_graph",
        };
        writeln!(out, "digraph {name} {{").unwrap();
        for (i, v) in self.vertices.iter().enumerate() {
            let shape = if i == self.root { ", shape=doublecircle" } else { "" };
            writeln!(out, "  n{i} [label=\"{}\"{shape}];", v.class).unwrap();
        }
        for e in &self.edges {
            match e.kind {
                Some(Side::Right) => writeln!(out, "  n{} -> n{} [label=\"ψ\"];", e.from, e.to),
                Some(Side::Left) => writeln!(out, "  n{} -> n{} [label=\"φ\"];", e.from, e.to),
                None => writeln!(out, "  n{} -> n{};", e.from, e.to),
            }
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::QuadNum;

    fn q(s: &str) -> QuadNum {
        s.parse().unwrap()
    }

    fn rotation() -> Iet {
        let a = q("3/2 - 1/2*sqrt(5)");
        Iet::from_names("ab", "ba", vec![QuadNum::one() - &a, a], QuadNum::zero()).unwrap()
    }

    #[test]
    fn rotation_graphs() {
        let g = build_graph(&rotation(), CanonicalMode::Equivalence, 100).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(
            g.edges,
            vec![
                GraphEdge { from: 0, kind: Some(Side::Right), to: 1 },
                GraphEdge { from: 0, kind: Some(Side::Left), to: 1 },
                GraphEdge { from: 1, kind: Some(Side::Right), to: 0 },
                GraphEdge { from: 1, kind: Some(Side::Left), to: 0 },
            ]
        );
        let h = build_graph(&rotation(), CanonicalMode::Similarity, 100).unwrap();
        assert_eq!(h.vertex_count(), 1);
        assert_eq!(h.edges, vec![GraphEdge { from: 0, kind: None, to: 0 }]);
        assert_eq!(h.to_dot().matches("->").count(), 1);
        assert_eq!(g.shortest_cycle_through(0).unwrap().len(), 2);
    }

    #[test]
    fn single_letter_graph_has_no_edges() {
        let id = Iet::from_names("a", "a", vec![q("1")], QuadNum::zero()).unwrap();
        let g = build_graph(&id, CanonicalMode::Equivalence, 10).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.edges.is_empty());
        assert_eq!(g.to_dot().matches("->").count(), 0);
    }

    #[test]
    fn rational_rotation_is_not_regular() {
        let half = QuadNum::from_ratio(1, 2);
        let t = Iet::from_names("ab", "ba", vec![half.clone(), half], QuadNum::zero()).unwrap();
        assert!(matches!(build_graph(&t, CanonicalMode::Equivalence, 10), Err(Error::NotRegular(_))));
    }

    #[test]
    fn budget_is_enforced() {
        let a = q("3/2 - 1/2*sqrt(5)");
        let t = Iet::from_names("abc", "bca", vec![QuadNum::one() - &a - &a, a.clone(), a], QuadNum::zero())
            .unwrap();
        assert_eq!(
            build_graph(&t, CanonicalMode::Equivalence, 2).unwrap_err(),
            Error::VertexBudgetExceeded { budget: 2 }
        );
    }
}
