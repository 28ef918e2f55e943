//! Simple undirected graphs with a canonical edge list.
//!
//! Vertices are the dense labels `0..n`. Every stored edge `(u, v)` has
//! `u < v` and the edge list is sorted lexicographically, so two graphs are
//! equal exactly when their orders and edge lists are equal. The position of
//! an edge in that list is its index everywhere else in the crate (incidence
//! matrix columns, edge-corona copies, subdivision vertices).

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Degree of every vertex, indexed by vertex label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Degrees sorted ascending.
    pub fn multiset(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.sort_unstable();
        d
    }
}

impl Graph {
    /// Builds a canonical graph from arbitrary vertex pairs. Pairs are
    /// reoriented so `u < v`, sorted and deduplicated.
    pub fn from_edge_list(n: usize, raw_edges: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(raw_edges.len());
        for &(u, v) in raw_edges {
            if u >= n {
                return Err(Error::EndpointOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::EndpointOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Graph { n, edges })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        DegreeSequence(d)
    }

    /// Returns `Some(k)` when every vertex has degree `k`.
    pub fn is_regular(&self) -> Result<Option<usize>> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let d = self.degree_sequence().0;
        let k = d[0];
        Ok(d.iter().all(|&x| x == k).then_some(k))
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Dense 0/1 adjacency as row-major booleans.
    pub fn adjacency_bits(&self) -> Vec<Vec<bool>> {
        let mut a = vec![vec![false; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = true;
            a[v][u] = true;
        }
        a
    }

    /// Vertex-edge incidence matrix, columns in canonical edge order.
    pub fn incidence_matrix(&self) -> Matrix {
        let mut b = Matrix::zeros(self.n, self.m());
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            b[(u, e)] = 1.0;
            b[(v, e)] = 1.0;
        }
        b
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        edges.sort_unstable();
        Graph {
            n: self.n + other.n,
            edges,
        }
    }
}

/// Names accepted by [`named_graph`].
pub const NAMED_GRAPHS: &[(&str, &str)] = &[
    ("path", "path:N  path on N >= 1 vertices"),
    ("cycle", "cycle:N  cycle on N >= 3 vertices"),
    ("complete", "complete:N  complete graph on N >= 1 vertices"),
    (
        "complete_bipartite",
        "complete_bipartite:A,B  complete bipartite graph, parts A, B >= 1",
    ),
    ("shrikhande", "shrikhande  Cayley graph on Z4 x Z4, 16 vertices, 6-regular"),
    ("rook44", "rook44  4x4 rook's graph, 16 vertices, 6-regular"),
    ("petersen", "petersen  Petersen graph, 10 vertices, 3-regular"),
];

pub fn named_graph(name: &str, params: &[usize]) -> Result<Graph> {
    let want = |k: usize| -> Result<()> {
        if params.len() != k {
            return Err(Error::BadParams(format!(
                "{name} takes {k} parameter(s), got {}",
                params.len()
            )));
        }
        Ok(())
    };
    match name {
        "path" => {
            want(1)?;
            let n = params[0];
            if n == 0 {
                return Err(Error::BadParams("path needs at least one vertex".into()));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edge_list(n, &edges)
        }
        "cycle" => {
            want(1)?;
            let n = params[0];
            if n < 3 {
                return Err(Error::BadParams("cycle needs at least three vertices".into()));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edge_list(n, &edges)
        }
        "complete" => {
            want(1)?;
            let n = params[0];
            if n == 0 {
                return Err(Error::BadParams("complete graph needs at least one vertex".into()));
            }
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Graph::from_edge_list(n, &edges)
        }
        "complete_bipartite" => {
            want(2)?;
            let (a, b) = (params[0], params[1]);
            if a == 0 || b == 0 {
                return Err(Error::BadParams("both parts must be nonempty".into()));
            }
            let edges: Vec<_> = (0..a)
                .flat_map(|u| (0..b).map(move |v| (u, a + v)))
                .collect();
            Graph::from_edge_list(a + b, &edges)
        }
        "shrikhande" => {
            want(0)?;
            let label = |i: usize, j: usize| 4 * (i % 4) + (j % 4);
            let steps = [(1, 0), (0, 1), (1, 1), (3, 0), (0, 3), (3, 3)];
            let mut edges = Vec::new();
            for i in 0..4 {
                for j in 0..4 {
                    for &(di, dj) in &steps {
                        edges.push((label(i, j), label(i + di, j + dj)));
                    }
                }
            }
            Graph::from_edge_list(16, &edges)
        }
        "rook44" => {
            want(0)?;
            let mut edges = Vec::new();
            for u in 0..16 {
                for v in u + 1..16 {
                    if (u / 4 == v / 4) != (u % 4 == v % 4) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(16, &edges)
        }
        "petersen" => {
            want(0)?;
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
                edges.push((i, i + 5));
            }
            Graph::from_edge_list(10, &edges)
        }
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// Parses `name` or `name:p1,p2,...` into a named graph.
pub fn parse_named(spec: &str) -> Result<Graph> {
    let (name, params) = match spec.split_once(':') {
        Some((name, rest)) => {
            let params = rest
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::BadParams(format!("`{p}` is not a nonnegative integer")))
                })
                .collect::<Result<Vec<_>>>()?;
            (name, params)
        }
        None => (spec, Vec::new()),
    };
    named_graph(name.trim(), &params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalizes_pairs() {
        let g = Graph::from_edge_list(2, &[(1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.m(), 4);
        assert_eq!(c4.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::EndpointOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
    }

    #[test]
    fn degrees_and_regularity() {
        let k2 = named_graph("complete", &[2]).unwrap();
        assert_eq!(k2.degree_sequence().0, vec![1, 1]);
        let c4 = named_graph("cycle", &[4]).unwrap();
        assert_eq!(c4.degree_sequence().0, vec![2, 2, 2, 2]);
        assert_eq!(c4.is_regular().unwrap(), Some(2));
        let k12 = named_graph("complete_bipartite", &[1, 2]).unwrap();
        assert_eq!(k12.degree_sequence().0, vec![2, 1, 1]);
        assert_eq!(k12.is_regular().unwrap(), None);
        assert_eq!(k12, named_graph("path", &[3]).unwrap().relabel_center_first());
        assert_eq!(Graph::empty(0).is_regular(), Err(Error::EmptyGraph));
    }

    impl Graph {
        // P_3 labelled 0-1-2 has its center at 1; K_{1,2} puts it at 0.
        fn relabel_center_first(&self) -> Graph {
            let map = [1, 0, 2];
            let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (map[u], map[v])).collect();
            Graph::from_edge_list(self.n, &edges).unwrap()
        }
    }

    #[test]
    fn strongly_regular_pair() {
        for name in ["shrikhande", "rook44"] {
            let g = named_graph(name, &[]).unwrap();
            assert_eq!((g.n(), g.m()), (16, 48));
            assert_eq!(g.is_regular().unwrap(), Some(6));
            assert!(g.is_connected());
        }
        let p = named_graph("petersen", &[]).unwrap();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert_eq!(p.is_regular().unwrap(), Some(3));
    }

    #[test]
    fn incidence_matrix_columns() {
        let k2 = named_graph("complete", &[2]).unwrap();
        let b = k2.incidence_matrix();
        assert_eq!((b.rows(), b.cols()), (2, 1));
        assert_eq!((b[(0, 0)], b[(1, 0)]), (1.0, 1.0));
        let p3 = named_graph("path", &[3]).unwrap();
        let b = p3.incidence_matrix();
        let want = [[1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
        for i in 0..3 {
            for j in 0..2 {
                assert_eq!(b[(i, j)], want[i][j]);
            }
        }
    }

    #[test]
    fn named_parsing() {
        assert_eq!(parse_named("cycle:5").unwrap().m(), 5);
        assert_eq!(parse_named("complete_bipartite:2,3").unwrap().m(), 6);
        assert!(matches!(parse_named("cycle:2"), Err(Error::BadParams(_))));
        assert!(matches!(parse_named("wheel:5"), Err(Error::UnknownName(_))));
        assert!(matches!(parse_named("shrikhande:1"), Err(Error::BadParams(_))));
    }

    #[test]
    fn union_and_connectivity() {
        let g = named_graph("cycle", &[4]).unwrap().disjoint_union(&Graph::empty(1));
        assert_eq!((g.n(), g.m()), (5, 4));
        assert!(!g.is_connected());
        assert!(named_graph("path", &[5]).unwrap().is_connected());
    }
}
