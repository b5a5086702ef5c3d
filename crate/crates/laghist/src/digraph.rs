//! Incremental two-row bipartite digraph: top vertices 1..cols and bottom
//! vertices 1′..cols′, with an edge j→k′ meaning σ(j) = k. Built one column
//! at a time; a vertex is *vacant* while its edge is not yet present.
//!
//! This is the shared substrate for decoding histories into permutations and
//! for the chain-following steps of the label rewriting maps.

use std::fmt;

use crate::perm::Permutation;

/// A partially built two-row digraph. `top_out[j-1]` is the bottom endpoint
/// of the edge out of top j; `bottom_in[k-1]` is the top endpoint of the
/// edge into bottom k′. The two views always mirror each other.
#[derive(Clone, Default)]
pub struct PartialBipartiteGraph {
    top_out: Vec<Option<usize>>,
    bottom_in: Vec<Option<usize>>,
}

/// Where a chain walk ended: at the starting column (closed) or at a vacant
/// vertex (open, `terminal` names that vacant vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainResult {
    pub terminal: usize,
    pub closed: bool,
}

/// Error mutating or completing a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Edge endpoint out of 1..=cols.
    VertexOutOfRange { vertex: usize, cols: usize },
    /// Top vertex already has an outgoing edge.
    TopOccupied { top: usize },
    /// Bottom vertex already has an incoming edge.
    BottomOccupied { bottom: usize },
    /// `to_permutation` called while some vertex is still vacant.
    Incomplete { vacant_top: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, cols } => {
                write!(f, "vertex {vertex} out of range 1..={cols}")
            }
            GraphError::TopOccupied { top } => {
                write!(f, "top vertex {top} already has an outgoing edge")
            }
            GraphError::BottomOccupied { bottom } => {
                write!(f, "bottom vertex {bottom}' already has an incoming edge")
            }
            GraphError::Incomplete { vacant_top } => {
                write!(f, "graph incomplete: top vertex {vacant_top} has no edge")
            }
        }
    }
}

impl std::error::Error for GraphError {}

impl PartialBipartiteGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cols(&self) -> usize {
        self.top_out.len()
    }

    /// Appends one column; its top and bottom vertices start vacant.
    pub fn add_column(&mut self) {
        self.top_out.push(None);
        self.bottom_in.push(None);
    }

    pub fn is_vacant_top(&self, j: usize) -> bool {
        self.top_out[j - 1].is_none()
    }

    pub fn is_vacant_bottom(&self, k: usize) -> bool {
        self.bottom_in[k - 1].is_none()
    }

    /// Ascending columns whose top vertex is vacant.
    pub fn vacant_tops(&self) -> Vec<usize> {
        (1..=self.cols()).filter(|&j| self.is_vacant_top(j)).collect()
    }

    /// Ascending columns whose bottom vertex is vacant.
    pub fn vacant_bottoms(&self) -> Vec<usize> {
        (1..=self.cols()).filter(|&k| self.is_vacant_bottom(k)).collect()
    }

    /// The k-th vacant top vertex in left-to-right order (1-based k), or
    /// None if fewer than k tops are vacant.
    pub fn kth_vacant_top(&self, k: usize) -> Option<usize> {
        if k == 0 {
            return None;
        }
        (1..=self.cols()).filter(|&j| self.is_vacant_top(j)).nth(k - 1)
    }

    /// The k-th vacant bottom vertex in left-to-right order.
    pub fn kth_vacant_bottom(&self, k: usize) -> Option<usize> {
        if k == 0 {
            return None;
        }
        (1..=self.cols()).filter(|&j| self.is_vacant_bottom(j)).nth(k - 1)
    }

    /// 1-based rank of a vacant top vertex among all vacant tops, or None
    /// if the vertex is not vacant.
    pub fn vacancy_index_top(&self, j: usize) -> Option<usize> {
        if !self.is_vacant_top(j) {
            return None;
        }
        Some((1..=j).filter(|&t| self.is_vacant_top(t)).count())
    }

    /// 1-based rank of a vacant bottom vertex among all vacant bottoms.
    pub fn vacancy_index_bottom(&self, k: usize) -> Option<usize> {
        if !self.is_vacant_bottom(k) {
            return None;
        }
        Some((1..=k).filter(|&b| self.is_vacant_bottom(b)).count())
    }

    /// Records the edge top→bottom′ in both views.
    pub fn add_edge(&mut self, top: usize, bottom: usize) -> Result<(), GraphError> {
        let cols = self.cols();
        if top == 0 || top > cols {
            return Err(GraphError::VertexOutOfRange { vertex: top, cols });
        }
        if bottom == 0 || bottom > cols {
            return Err(GraphError::VertexOutOfRange { vertex: bottom, cols });
        }
        if self.top_out[top - 1].is_some() {
            return Err(GraphError::TopOccupied { top });
        }
        if self.bottom_in[bottom - 1].is_some() {
            return Err(GraphError::BottomOccupied { bottom });
        }
        self.top_out[top - 1] = Some(bottom);
        self.bottom_in[bottom - 1] = Some(top);
        Ok(())
    }

    /// Walks the chain out of bottom `start`′: repeatedly move to the top
    /// vertex whose edge enters the current bottom vertex, then continue from
    /// that column's bottom vertex. Ends closed when an edge from top `start`
    /// is reached (the chain returned to its column), or open at the first
    /// bottom vertex with no incoming edge.
    pub fn follow_chain_from_bottom(&self, start: usize) -> ChainResult {
        let mut b = start;
        loop {
            match self.bottom_in[b - 1] {
                None => return ChainResult { terminal: b, closed: false },
                Some(t) if t == start => return ChainResult { terminal: t, closed: true },
                Some(t) => b = t,
            }
        }
    }

    /// Mirror walk out of top `start`: follow its outgoing edge to a bottom
    /// vertex, continue from that column's top vertex. Ends closed when an
    /// edge lands on bottom `start`′, or open at the first top vertex with
    /// no outgoing edge.
    pub fn follow_chain_from_top(&self, start: usize) -> ChainResult {
        let mut t = start;
        loop {
            match self.top_out[t - 1] {
                None => return ChainResult { terminal: t, closed: false },
                Some(b) if b == start => return ChainResult { terminal: b, closed: true },
                Some(b) => t = b,
            }
        }
    }

    /// Reads off σ from a complete graph: σ(j) = k iff edge j→k′.
    pub fn to_permutation(&self) -> Result<Permutation, GraphError> {
        let mut images = Vec::with_capacity(self.cols());
        for (idx, out) in self.top_out.iter().enumerate() {
            match out {
                Some(b) => images.push(*b),
                None => return Err(GraphError::Incomplete { vacant_top: idx + 1 }),
            }
        }
        Ok(Permutation::from_images(images).expect("mirrored injective views form a permutation"))
    }
}

impl fmt::Debug for PartialBipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialBipartiteGraph(cols={}){{", self.cols())?;
        let mut first = true;
        for (idx, out) in self.top_out.iter().enumerate() {
            if let Some(b) = out {
                if !first {
                    write!(f, ", ")?;
                }
                write!(f, "{}→{}'", idx + 1, b)?;
                first = false;
            }
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_start_vacant() {
        let mut g = PartialBipartiteGraph::new();
        assert_eq!(g.cols(), 0);
        g.add_column();
        assert_eq!(g.vacant_tops(), vec![1]);
        assert_eq!(g.vacant_bottoms(), vec![1]);
        g.add_column();
        assert_eq!(g.vacant_tops(), vec![1, 2]);
        assert_eq!(g.vacant_bottoms(), vec![1, 2]);
    }

    #[test]
    fn vacancy_ranks_and_selection() {
        let mut g = PartialBipartiteGraph::new();
        for _ in 0..5 {
            g.add_column();
        }
        g.add_edge(2, 1).unwrap();
        g.add_edge(4, 3).unwrap();
        // vacant tops {1,3,5}, vacant bottoms {2,4,5}
        assert_eq!(g.kth_vacant_top(2), Some(3));
        assert_eq!(g.kth_vacant_bottom(1), Some(2));
        assert_eq!(g.kth_vacant_top(4), None);
        assert_eq!(g.kth_vacant_top(0), None);
        assert_eq!(g.vacancy_index_top(5), Some(3));
        assert_eq!(g.vacancy_index_top(2), None);
        assert_eq!(g.vacancy_index_bottom(4), Some(2));
    }

    #[test]
    fn add_edge_rejects_conflicts() {
        let mut g = PartialBipartiteGraph::new();
        g.add_column();
        g.add_column();
        g.add_edge(1, 2).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(GraphError::TopOccupied { top: 1 }));
        assert_eq!(g.add_edge(2, 2), Err(GraphError::BottomOccupied { bottom: 2 }));
        assert_eq!(g.add_edge(3, 1), Err(GraphError::VertexOutOfRange { vertex: 3, cols: 2 }));
    }

    #[test]
    fn chains_close_or_end_at_vacancies() {
        let mut g = PartialBipartiteGraph::new();
        g.add_column();
        assert_eq!(
            g.follow_chain_from_bottom(1),
            ChainResult { terminal: 1, closed: false }
        );
        g.add_edge(1, 1).unwrap();
        assert_eq!(
            g.follow_chain_from_bottom(1),
            ChainResult { terminal: 1, closed: true }
        );
        assert_eq!(
            g.follow_chain_from_top(1),
            ChainResult { terminal: 1, closed: true }
        );
    }

    #[test]
    fn longer_chain_walks_across_columns() {
        // edges 3→2′, 2→1′: from bottom 3′ the chain is open, walking
        // 3′ ← nothing; from bottom 2′: incoming 3, then bottom 3′ vacant.
        let mut g = PartialBipartiteGraph::new();
        for _ in 0..3 {
            g.add_column();
        }
        g.add_edge(3, 2).unwrap();
        g.add_edge(2, 1).unwrap();
        let r = g.follow_chain_from_bottom(1);
        assert_eq!(r, ChainResult { terminal: 3, closed: false });
        // close the cycle 1→3′
        g.add_edge(1, 3).unwrap();
        assert_eq!(g.follow_chain_from_bottom(1), ChainResult { terminal: 1, closed: true });
        assert_eq!(g.follow_chain_from_top(1), ChainResult { terminal: 1, closed: true });
    }

    #[test]
    fn complete_graph_reads_back_a_permutation() {
        let mut g = PartialBipartiteGraph::new();
        for _ in 0..3 {
            g.add_column();
        }
        g.add_edge(1, 2).unwrap();
        assert_eq!(g.to_permutation(), Err(GraphError::Incomplete { vacant_top: 2 }));
        g.add_edge(2, 3).unwrap();
        g.add_edge(3, 1).unwrap();
        let p = g.to_permutation().unwrap();
        assert_eq!(p.images(), &[2, 3, 1]);
    }

    #[test]
    fn insertion_order_does_not_matter() {
        let mut g1 = PartialBipartiteGraph::new();
        let mut g2 = PartialBipartiteGraph::new();
        for _ in 0..4 {
            g1.add_column();
            g2.add_column();
        }
        let edges = [(1, 3), (2, 1), (3, 4), (4, 2)];
        for &(t, b) in &edges {
            g1.add_edge(t, b).unwrap();
        }
        for &(t, b) in edges.iter().rev() {
            g2.add_edge(t, b).unwrap();
        }
        assert_eq!(g1.to_permutation().unwrap(), g2.to_permutation().unwrap());
    }
}
