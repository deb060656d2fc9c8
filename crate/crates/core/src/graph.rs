//! Finite simplicial graphs, vertex sets, links, stars and connectivity.
//!
//! Vertices are addressed by [`Vertex`], an index into the graph's canonical
//! vertex order. Graphs ingested from user labels are ordered shortlex on the
//! label tokens; graphs derived from other structures (the arrow diagram,
//! the graph of pairs) keep the order in which their vertices were supplied.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub usize);

impl Vertex {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Sorted, duplicate-free set of vertices.
///
/// Ordering is lexicographic on the sorted member list, so sets compare by
/// least vertex first.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn insert(&mut self, v: Vertex) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn with(&self, v: Vertex) -> VertexSet {
        let mut s = self.clone();
        s.insert(v);
        s
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Shortlex comparison of label tokens: shorter labels first, then bytewise.
pub fn shortlex(a: &str, b: &str) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

const RESERVED: &[char] = &['[', ']', '{', '}', '|', ',', '^', '*', '(', ')', '"', ';', '=', '@', '#'];

fn validate_label(label: &str) -> Result<()> {
    if label.is_empty()
        || label.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c))
        || label.contains("--")
    {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adjacency: Vec<Vec<bool>>,
    neighbors: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from user labels, ordering vertices shortlex.
    ///
    /// Loops, repeated edges (in either orientation), duplicate vertices and
    /// edges with unknown endpoints are rejected.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Graph> {
        let mut labels: Vec<String> = Vec::with_capacity(vertices.len());
        for v in vertices {
            validate_label(v.as_ref())?;
            labels.push(v.as_ref().to_string());
        }
        labels.sort_by(|a, b| shortlex(a, b));
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].clone()));
        }
        let index: HashMap<String, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index.get(a).ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let ib = *index.get(b).ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            idx_edges.push((ia, ib));
        }
        Graph::build(labels, index, idx_edges)
    }

    /// Builds a graph whose vertex order is exactly `labels`.
    ///
    /// Used for derived graphs; labels are not restricted to the token
    /// alphabet accepted by [`Graph::new`], only required to be unique.
    pub fn from_parts(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        Graph::build(labels, index, edges.into_iter().collect())
    }

    fn build(labels: Vec<String>, index: HashMap<String, usize>, edges: Vec<(usize, usize)>) -> Result<Graph> {
        let n = labels.len();
        let mut adjacency = vec![vec![false; n]; n];
        for (a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange(a));
            }
            if b >= n {
                return Err(Error::VertexOutOfRange(b));
            }
            if a == b {
                return Err(Error::Loop(labels[a].clone()));
            }
            if adjacency[a][b] {
                return Err(Error::DuplicateEdge(labels[a].clone(), labels[b].clone()));
            }
            adjacency[a][b] = true;
            adjacency[b][a] = true;
        }
        let neighbors = adjacency
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, &e)| e).map(|(j, _)| Vertex(j)).collect())
            .collect();
        Ok(Graph { labels, index, adjacency, neighbors })
    }

    fn numbered(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        Graph::from_parts(labels, edges).expect("numbered graph is simplicial")
    }

    /// Edgeless graph on vertices `1..=n`.
    pub fn edgeless(n: usize) -> Graph {
        Graph::numbered(n, std::iter::empty())
    }

    /// Complete graph on vertices `1..=n`.
    pub fn complete(n: usize) -> Graph {
        Graph::numbered(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// Path `1 – 2 – … – n`.
    pub fn path(n: usize) -> Graph {
        Graph::numbered(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Cycle on `1..=n`, `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least three vertices");
        Graph::numbered(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.len()).map(Vertex)
    }

    pub fn all_vertices(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v.0]
    }

    pub fn vertex(&self, label: &str) -> Result<Vertex> {
        self.index.get(label).map(|&i| Vertex(i)).ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn check(&self, v: Vertex) -> Result<Vertex> {
        if v.0 < self.len() {
            Ok(v)
        } else {
            Err(Error::VertexOutOfRange(v.0))
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        s.iter().try_for_each(|v| self.check(v).map(|_| ()))
    }

    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.adjacency[a.0][b.0]
    }

    /// True when `a == b` or `a` and `b` span an edge.
    pub fn commute(&self, a: Vertex, b: Vertex) -> bool {
        a == b || self.adjacency[a.0][b.0]
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v.0]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v.0].len()
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.vertices()
            .flat_map(|a| self.neighbors(a).iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn link(&self, v: Vertex) -> Result<VertexSet> {
        self.check(v)?;
        Ok(VertexSet(self.neighbors[v.0].clone()))
    }

    pub fn star(&self, v: Vertex) -> Result<VertexSet> {
        Ok(self.link(v)?.with(v))
    }

    pub(crate) fn star_unchecked(&self, v: Vertex) -> VertexSet {
        VertexSet(self.neighbors[v.0].clone()).with(v)
    }

    /// Connected components of the subgraph induced on the complement of
    /// `removed`, sorted by least vertex.
    pub fn components_after_removal(&self, removed: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_set(removed)?;
        Ok(self.components_masked(&self.mask(removed)))
    }

    pub(crate) fn mask(&self, removed: &VertexSet) -> Vec<bool> {
        let mut alive = vec![true; self.len()];
        for v in removed {
            alive[v.0] = false;
        }
        alive
    }

    pub(crate) fn components_masked(&self, alive: &[bool]) -> Vec<VertexSet> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if !alive[start] || seen[start] {
                continue;
            }
            out.push(self.bfs(Vertex(start), alive, &mut seen));
        }
        out
    }

    fn bfs(&self, start: Vertex, alive: &[bool], seen: &mut [bool]) -> VertexSet {
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        seen[start.0] = true;
        while let Some(x) = queue.pop_front() {
            for &y in self.neighbors(x) {
                if alive[y.0] && !seen[y.0] {
                    seen[y.0] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.into_iter().collect()
    }

    /// Component of `Γ − removed` containing `v`; `None` when `v` was removed.
    pub fn component_containing(&self, v: Vertex, removed: &VertexSet) -> Option<VertexSet> {
        let alive = self.mask(removed);
        if !alive[v.0] {
            return None;
        }
        let mut seen = vec![false; self.len()];
        Some(self.bfs(v, &alive, &mut seen))
    }

    /// Whether `x` and `y` lie in the same component of `Γ − removed`.
    /// False whenever either endpoint was removed.
    pub fn connected_avoiding(&self, x: Vertex, y: Vertex, removed: &VertexSet) -> bool {
        match self.component_containing(x, removed) {
            Some(c) => c.contains(y),
            None => false,
        }
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let labels = s.iter().map(|v| self.labels[v.0].clone()).collect();
        let pos: HashMap<Vertex, usize> = s.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let edges = self
            .edges()
            .into_iter()
            .filter_map(|(a, b)| Some((*pos.get(&a)?, *pos.get(&b)?)))
            .collect::<Vec<_>>();
        Graph::from_parts(labels, edges)
    }

    pub fn is_connected(&self) -> bool {
        self.components_masked(&vec![true; self.len()]).len() <= 1
    }

    pub fn display_set(&self, s: &VertexSet) -> String {
        let inner: Vec<&str> = s.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V={{{}}} E={{", self.labels.join(","))?;
        let edges: Vec<String> =
            self.edges().into_iter().map(|(a, b)| format!("{}-{}", self.label(a), self.label(b))).collect();
        write!(f, "{}}}", edges.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        labels.iter().map(|l| g.vertex(l).unwrap()).collect()
    }

    fn v(g: &Graph, l: &str) -> Vertex {
        g.vertex(l).unwrap()
    }

    #[test]
    fn link_and_star() {
        let p = Graph::path(3);
        assert_eq!(p.link(v(&p, "2")).unwrap(), set(&p, &["1", "3"]));
        assert_eq!(p.star(v(&p, "2")).unwrap(), set(&p, &["1", "2", "3"]));
        let e = Graph::edgeless(3);
        assert!(e.link(v(&e, "1")).unwrap().is_empty());
        assert_eq!(e.star(v(&e, "1")).unwrap(), set(&e, &["1"]));
        let t = Graph::complete(3);
        assert_eq!(t.link(v(&t, "1")).unwrap(), set(&t, &["2", "3"]));
        assert_eq!(t.star(v(&t, "1")).unwrap(), set(&t, &["1", "2", "3"]));
        assert!(matches!(t.link(Vertex(7)), Err(Error::VertexOutOfRange(7))));
        assert!(matches!(t.vertex("x"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn components() {
        let e = Graph::edgeless(3);
        let st = e.star(v(&e, "1")).unwrap();
        assert_eq!(e.components_after_removal(&st).unwrap(), vec![set(&e, &["2"]), set(&e, &["3"])]);
        let t = Graph::complete(3);
        assert!(t.components_after_removal(&t.star(Vertex(0)).unwrap()).unwrap().is_empty());
        let p = Graph::path(3);
        assert_eq!(p.components_after_removal(&set(&p, &["1", "2"])).unwrap(), vec![set(&p, &["3"])]);
    }

    #[test]
    fn induced() {
        let t = Graph::complete(3);
        let s = t.induced_subgraph(&set(&t, &["1", "2"])).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.edge_count(), 1);
        assert!(t.induced_subgraph(&VertexSet::new()).unwrap().is_empty());
        let p = Graph::path(3);
        let s = p.induced_subgraph(&set(&p, &["1", "3"])).unwrap();
        assert_eq!(s.edge_count(), 0);
        assert_eq!(s.labels(), &["1".to_string(), "3".to_string()]);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(3).is_connected());
        assert!(!Graph::edgeless(2).is_connected());
        assert!(Graph::edgeless(0).is_connected());
    }

    #[test]
    fn ingestion_rules() {
        let g = Graph::new(&["10", "9", "a"], &[("9", "10")]).unwrap();
        assert_eq!(g.labels(), &["9".to_string(), "a".to_string(), "10".to_string()]);
        assert!(matches!(Graph::new(&["a"], &[("a", "a")]), Err(Error::Loop(_))));
        assert!(matches!(
            Graph::new(&["a", "b"], &[("a", "b"), ("b", "a")]),
            Err(Error::DuplicateEdge(..))
        ));
        assert!(matches!(Graph::new(&["a", "a"], &[]), Err(Error::DuplicateVertex(_))));
        assert!(matches!(Graph::new(&["a"], &[("a", "z")]), Err(Error::UnknownVertex(_))));
        assert!(matches!(Graph::new(&["a b"], &[]), Err(Error::InvalidLabel(_))));
    }
}
