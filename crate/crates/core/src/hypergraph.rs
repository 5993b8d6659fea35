//! Hypergraphs on `{1..n}`, their cover ideals, and balancedness.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::varset::{minimal_transversals, VarSet, MAX_VARS};

/// Edges are distinct, non-empty and kept in canonical order, so equality is
/// equality up to edge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VarSet>,
}

/// An odd cycle `(i_1, E_1, .., i_k, E_k)` in which every `E_t` meets the
/// cycle vertices in exactly `{i_t, i_{t+1}}`; its incidence submatrix is
/// `B_k`. Indices are 0-based (vertices) and positions in `edges()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadCycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = VarSet>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { got: n, max: MAX_VARS });
        }
        let mut edges: Vec<VarSet> = edges.into_iter().collect();
        for e in &edges {
            if e.is_empty() {
                return Err(Error::InvalidHypergraph("empty edge".into()));
            }
            if !e.is_subset(VarSet::full(n)) {
                return Err(Error::InvalidHypergraph(format!("edge {e} outside 1..{n}")));
            }
        }
        edges.sort();
        let before = edges.len();
        edges.dedup();
        if edges.len() != before {
            return Err(Error::InvalidHypergraph("repeated edge".into()));
        }
        Ok(Hypergraph { n, edges })
    }

    /// Builds from 1-based vertex lists, as in the JSON file format.
    pub fn from_one_based(n: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let sets = edges
            .iter()
            .map(|e| {
                let mut s = VarSet::EMPTY;
                for &v in e {
                    if v == 0 || v > n {
                        return Err(Error::InvalidHypergraph(format!("vertex {v} outside 1..{n}")));
                    }
                    s.insert(v - 1);
                }
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, sets)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VarSet] {
        &self.edges
    }

    pub fn isolated_vertices(&self) -> VarSet {
        let covered = self.edges.iter().fold(VarSet::EMPTY, |a, &e| a.union(e));
        VarSet::full(self.n).difference(covered)
    }

    pub fn minimal_vertex_covers(&self) -> Vec<VarSet> {
        minimal_transversals(&self.edges)
    }

    /// `J(H)`, generated by `x_τ` for the minimal vertex covers `τ`.
    /// Isolated vertices are rejected.
    pub fn cover_ideal(&self) -> Result<MonomialIdeal> {
        if let Some(v) = self.isolated_vertices().first() {
            return Err(Error::IsolatedVertex(v + 1));
        }
        Ok(self.transversal_ideal())
    }

    /// Same generators as [`cover_ideal`](Self::cover_ideal) without the
    /// isolated-vertex check; the edgeless hypergraph yields the unit ideal.
    pub fn transversal_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_supports(self.n, self.minimal_vertex_covers())
    }

    /// `H_i`: the edges avoiding vertex `i` (0-based). The vertex set is kept.
    pub fn delete_vertex(&self, i: usize) -> Result<Hypergraph> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                ambient: self.n,
            });
        }
        Ok(Hypergraph {
            n: self.n,
            edges: self.edges.iter().copied().filter(|e| !e.contains(i)).collect(),
        })
    }

    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    pub fn is_balanced(&self) -> bool {
        self.find_bad_cycle().is_none()
    }

    /// Depth-first search for an odd cycle whose edges each contain exactly
    /// two cycle vertices. The smallest cycle vertex is used as the start.
    pub fn find_bad_cycle(&self) -> Option<BadCycle> {
        for start in 0..self.n {
            let mut search = CycleSearch {
                edges: &self.edges,
                start,
                vertices: vec![start],
                chosen: Vec::new(),
                on_cycle: VarSet::singleton(start),
            };
            if search.extend() {
                return Some(BadCycle {
                    vertices: search.vertices,
                    edges: search.chosen,
                });
            }
        }
        None
    }
}

struct CycleSearch<'a> {
    edges: &'a [VarSet],
    start: usize,
    vertices: Vec<usize>,
    chosen: Vec<usize>,
    on_cycle: VarSet,
}

impl CycleSearch<'_> {
    fn used(&self, e: usize) -> bool {
        self.chosen.contains(&e)
    }

    fn extend(&mut self) -> bool {
        let last = *self.vertices.last().unwrap();
        let k = self.vertices.len();
        for (ei, &edge) in self.edges.iter().enumerate() {
            if self.used(ei) || !edge.contains(last) {
                continue;
            }
            let on = edge.intersection(self.on_cycle);
            // closing edge: meets the cycle exactly in {last, start}
            if k >= 3 && k % 2 == 1 && on == VarSet::singleton(last).with(self.start) {
                self.chosen.push(ei);
                return true;
            }
            // an open edge may only touch `last` among the cycle vertices
            if on != VarSet::singleton(last) {
                continue;
            }
            for next in edge.without(last) {
                if next <= self.start {
                    continue;
                }
                // no earlier edge may contain the new vertex
                if self.chosen.iter().any(|&c| self.edges[c].contains(next)) {
                    continue;
                }
                self.chosen.push(ei);
                self.vertices.push(next);
                self.on_cycle.insert(next);
                if self.extend() {
                    return true;
                }
                self.on_cycle.remove(next);
                self.vertices.pop();
                self.chosen.pop();
            }
        }
        false
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(n={}; ", self.n)?;
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_ideal;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_one_based(n, &edges.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn vs(ix: &[usize]) -> VarSet {
        ix.iter().map(|i| i - 1).collect()
    }

    fn brute_covers(g: &Hypergraph) -> Vec<VarSet> {
        let covers = |t: VarSet| g.edges().iter().all(|e| e.intersects(t));
        let mut out: Vec<VarSet> = VarSet::full(g.vertex_count())
            .subsets()
            .filter(|&t| covers(t) && t.iter().all(|v| !covers(t.without(v))))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn cover_ideal_examples() {
        let path = h(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(path.cover_ideal().unwrap(), parse_ideal("(x2, x1*x3)", Some(3)).unwrap());
        let edge = h(2, &[&[1, 2]]);
        assert_eq!(edge.cover_ideal().unwrap(), parse_ideal("(x1, x2)", Some(2)).unwrap());
        let tri = h(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(
            tri.cover_ideal().unwrap(),
            parse_ideal("(x1*x2, x2*x3, x1*x3)", Some(3)).unwrap()
        );
        assert_eq!(h(3, &[&[1, 2]]).cover_ideal(), Err(Error::IsolatedVertex(3)));
    }

    #[test]
    fn minimal_cover_examples() {
        let path = h(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(path.minimal_vertex_covers(), vec![vs(&[1, 3]), vs(&[2])]);
        assert_eq!(h(1, &[&[1]]).minimal_vertex_covers(), vec![vs(&[1])]);
        let c4 = h(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        assert_eq!(c4.minimal_vertex_covers(), vec![vs(&[1, 3]), vs(&[2, 4])]);
        for g in [path, c4] {
            assert_eq!(g.minimal_vertex_covers(), brute_covers(&g));
        }
    }

    #[test]
    fn triangle_yields_b3() {
        let tri = h(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        let cyc = tri.find_bad_cycle().unwrap();
        assert_eq!(cyc.vertices.len(), 3);
        assert_eq!(cyc.edges.len(), 3);
        // each edge meets the cycle in exactly its two consecutive vertices
        let on: VarSet = cyc.vertices.iter().copied().collect();
        for t in 0..3 {
            let e = tri.edges()[cyc.edges[t]];
            let pair = VarSet::singleton(cyc.vertices[t]).with(cyc.vertices[(t + 1) % 3]);
            assert_eq!(e.intersection(on), pair);
        }
    }

    #[test]
    fn balanced_examples() {
        assert!(h(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]).is_balanced());
        assert!(h(2, &[&[1, 2]]).is_balanced());
        assert!(!h(3, &[&[1, 2, 3], &[1, 2], &[2, 3], &[1, 3]]).is_balanced());
        // odd cycle rescued by an edge holding three cycle vertices
        assert!(h(3, &[&[1, 2, 3], &[1, 2], &[2, 3]]).is_balanced());
        // the 5-cycle
        assert!(!h(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]).is_balanced());
    }

    #[test]
    fn chorded_odd_cycle_still_found() {
        // 5-cycle plus chord {1,3}: triangle 1-2-3 is a bad cycle
        let g = h(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5], &[1, 3]]);
        assert!(!g.is_balanced());
    }

    #[test]
    fn delete_vertex_examples() {
        let path = h(3, &[&[1, 2], &[2, 3]]);
        assert!(path.delete_vertex(1).unwrap().edges().is_empty());
        let c4 = h(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        assert_eq!(c4.delete_vertex(0).unwrap().edges(), &[vs(&[2, 3]), vs(&[3, 4])]);
        let j = c4.cover_ideal().unwrap();
        for i in 0..4 {
            assert_eq!(c4.delete_vertex(i).unwrap().transversal_ideal(), j.delete_var(i).unwrap());
        }
    }

    #[test]
    fn invalid_hypergraphs() {
        assert!(Hypergraph::from_one_based(2, &[vec![1, 3]]).is_err());
        assert!(Hypergraph::from_one_based(2, &[vec![]]).is_err());
        assert!(Hypergraph::from_one_based(2, &[vec![1, 2], vec![2, 1]]).is_err());
    }
}
