//! The graph Γ̂ on pairs `(L, v)` with `L` a component of `Γ − sst(v)`,
//! the map `φ(L, v) = c_{L,v}` into `PAut(A_Γ)`, the section
//! `ι(v) = ∏_L (L, v)`, and checks of the resulting normal subgroup.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::auto::Automorphism;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::matrix::Matrix;
use crate::presentation::{kp_presentation, paut_generators};
use crate::sil;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HatVertex {
    pub component: VertexSet,
    pub vertex: Vertex,
}

impl HatVertex {
    pub fn name(&self, g: &Graph) -> String {
        format!("({},{})", g.display_set(&self.component), g.label(self.vertex))
    }
}

#[derive(Debug, Clone)]
pub struct HatGraph {
    pub base: Arc<Graph>,
    /// `sst[v]` for every vertex of the base graph.
    pub sst: Vec<VertexSet>,
    /// Ordered by vertex, then component.
    pub vertices: Vec<HatVertex>,
    /// Vertex `i` is `vertices[i]`.
    pub graph: Graph,
    /// `phis[i] = φ(vertices[i])`.
    pub phis: Vec<Automorphism>,
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// `(L, v)` and `(T, u)` are non-adjacent iff `u, v` are unlinked, `u ∈ L`
/// and `v ∈ T`.
pub fn hat_adjacent(g: &Graph, a: &HatVertex, b: &HatVertex) -> bool {
    let (v, u) = (a.vertex, b.vertex);
    a != b && !(v != u && !g.adjacent(u, v) && a.component.contains(u) && b.component.contains(v))
}

/// Γ̂ of a connected graph.
pub fn hat_graph(g: &Arc<Graph>) -> Result<HatGraph> {
    require_connected(g)?;
    hat_graph_unchecked(g)
}

/// Γ̂ without the connectivity requirement, for exploring disconnected
/// graphs such as the edgeless ones.
pub fn hat_graph_unchecked(g: &Arc<Graph>) -> Result<HatGraph> {
    let sst: Vec<VertexSet> = g.vertices().map(|v| sil::sst(g, v)).collect::<Result<_>>()?;
    let mut vertices = Vec::new();
    for v in g.vertices() {
        for component in g.components_after_removal(&sst[v.0])? {
            vertices.push(HatVertex { component, vertex: v });
        }
    }
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if hat_adjacent(g, &vertices[i], &vertices[j]) {
                edges.push((i, j));
            }
        }
    }
    let labels = vertices.iter().map(|h| h.name(g)).collect();
    let graph = Graph::from_parts(labels, edges)?;
    let phis = vertices.iter().map(|hv| phi(g, hv)).collect::<Result<_>>()?;
    Ok(HatGraph { base: g.clone(), sst, vertices, graph, phis })
}

impl HatGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, hv: &HatVertex) -> Option<usize> {
        self.vertices.iter().position(|x| x == hv)
    }

    /// Indices of the pairs `(L, v)` for fixed `v`.
    pub fn at(&self, v: Vertex) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.vertices[i].vertex == v).collect()
    }

    /// The component of `Γ − sst(u)` containing `c`, if any.
    pub fn containing(&self, u: Vertex, c: &VertexSet) -> Option<usize> {
        self.at(u).into_iter().find(|&i| c.is_subset(&self.vertices[i].component))
    }
}

/// Components of `Γ − st(v)` whose union is `L − st(v)`.
pub fn phi_components(g: &Graph, hv: &HatVertex) -> Result<Vec<VertexSet>> {
    let star = g.star(hv.vertex)?;
    let parts: Vec<VertexSet> =
        g.components_after_removal(&star)?.into_iter().filter(|d| d.is_subset(&hv.component)).collect();
    let covered = parts.iter().fold(VertexSet::new(), |acc, d| acc.union(d));
    if covered != hv.component.difference(&star) {
        return Err(Error::Internal(format!(
            "{} does not split into components of Γ − st(v)",
            hv.name(g)
        )));
    }
    Ok(parts)
}

/// `φ(L, v) = c_{L,v}`, recorded as the product of the `c_{D,v}` with
/// `D ⊆ L`.
pub fn phi(g: &Arc<Graph>, hv: &HatVertex) -> Result<Automorphism> {
    if hv.component.contains(hv.vertex) {
        return Err(Error::InvalidArgument(format!("{} contains its vertex", hv.name(g))));
    }
    Automorphism::partial_product(g, hv.vertex, &phi_components(g, hv)?)
}

/// Vertices adjacent to every other vertex.
pub fn center_vertices(g: &Graph) -> VertexSet {
    g.vertices().filter(|&v| g.degree(v) + 1 == g.len()).collect()
}

pub fn gamma_zero(g: &Graph) -> Graph {
    g.induced_subgraph(&g.all_vertices().difference(&center_vertices(g))).expect("subset")
}

/// Indices of the factors of `ι(v)` in canonical order.
pub fn iota(h: &HatGraph, v: Vertex) -> Result<Vec<usize>> {
    h.base.check(v)?;
    if center_vertices(&h.base).contains(v) {
        return Err(Error::CentralVertex(h.base.label(v).to_string()));
    }
    Ok(h.at(v))
}

impl HatGraph {
    fn label(&self, i: usize) -> &str {
        self.graph.label(Vertex(i))
    }

    /// Γ̂-edges whose φ-images do not commute.
    pub fn phi_verify(&self) -> Result<Vec<String>> {
        let mut failures = Vec::new();
        for (a, b) in self.graph.edges() {
            if !self.phis[a.0].commutator(&self.phis[b.0])?.is_identity() {
                failures.push(format!("[φ{}, φ{}] ≠ 1", self.label(a.0), self.label(b.0)));
            }
        }
        Ok(failures)
    }

    /// Pairs `(L, v)` with `L ⊆ st(v)` or `φ(L, v)` trivial.
    pub fn nontrivial_check(&self) -> Vec<String> {
        let g = &self.base;
        self.vertices
            .iter()
            .zip(&self.phis)
            .filter(|(hv, p)| hv.component.is_subset(&g.star_unchecked(hv.vertex)) || p.is_identity())
            .map(|(hv, _)| format!("{} is trivial", hv.name(g)))
            .collect()
    }

    /// Non-central vertices with `φ(ι(v)) ≠ inner(v)`.
    pub fn iota_check(&self) -> Result<Vec<String>> {
        let g = &self.base;
        let center = center_vertices(g);
        let mut failures = Vec::new();
        for v in g.vertices().filter(|&v| !center.contains(v)) {
            let mut acc = Automorphism::identity(g.clone());
            for i in iota(self, v)? {
                acc = acc.compose(&self.phis[i])?;
            }
            if acc != Automorphism::inner_by_vertex(g, v)? {
                failures.push(format!("φ(ι({})) is not inner", g.label(v)));
            }
        }
        Ok(failures)
    }

    /// For every `(L, v)` and every generator `c_{C,u}`: `c_{L,v}^{c_{C,u}}`
    /// equals `c_{L,v}` when `v ∉ C`, and `c_{L,v}^{φ(T,u)}` when `v ∈ C`,
    /// with `T ⊇ C` a component of `Γ − sst(u)`.
    pub fn normality_check(&self) -> Result<Vec<String>> {
        let g = &self.base;
        let mut failures = Vec::new();
        for pc in paut_generators(g) {
            let c = Automorphism::partial(g, &pc)?;
            let t = self
                .containing(pc.acting, &pc.component)
                .ok_or_else(|| Error::Internal(format!("{} lies in no component of Γ − sst", pc.name(g))))?;
            for (i, hv) in self.vertices.iter().enumerate() {
                let lhs = self.phis[i].conjugate_by(&c)?;
                let rhs = if pc.component.contains(hv.vertex) {
                    self.phis[i].conjugate_by(&self.phis[t])?
                } else {
                    self.phis[i].clone()
                };
                if lhs != rhs {
                    failures.push(format!("conjugating φ{} by {}", self.label(i), pc.name(g)));
                }
            }
        }
        Ok(failures)
    }

    /// For every non-adjacent ordered pair `(L,v), (T,u)`, where `v ∈ T`:
    /// `[φ(L,v), φ(T,u)] = [φ(L,v), inner(u)]`.
    pub fn inner_commutator_check(&self) -> Result<Vec<String>> {
        let mut failures = Vec::new();
        for i in 0..self.len() {
            for j in (0..self.len()).filter(|&j| j != i && !self.graph.adjacent(Vertex(i), Vertex(j))) {
                let u = self.vertices[j].vertex;
                debug_assert!(self.vertices[j].component.contains(self.vertices[i].vertex));
                let lhs = self.phis[i].commutator(&self.phis[j])?;
                let rhs = self.phis[i].commutator(&Automorphism::inner_by_vertex(&self.base, u)?)?;
                if lhs != rhs {
                    failures.push(format!("[φ{}, φ{}]", self.label(i), self.label(j)));
                }
            }
        }
        Ok(failures)
    }

    /// `Σ (k_v − 1)` over non-central `v`, with `k_v` the number of
    /// components of `Γ − sst(v)`.
    pub fn quotient_rank(&self) -> usize {
        let center = center_vertices(&self.base);
        self.base.vertices().filter(|v| !center.contains(*v)).map(|v| self.at(v).len().saturating_sub(1)).sum()
    }

    /// Rank of the abelianization of `A_Γ̂ / ⟨⟨ι(Γ₀)⟩⟩`, from the Smith
    /// normal form of the exponent vectors of the `ι(v)`.
    pub fn quotient_rank_oracle(&self) -> Result<usize> {
        let center = center_vertices(&self.base);
        let rows: Vec<Vec<BigInt>> = self
            .base
            .vertices()
            .filter(|v| !center.contains(*v))
            .map(|v| {
                let factors = self.at(v);
                (0..self.len()).map(|i| BigInt::from(factors.contains(&i) as i64)).collect()
            })
            .collect();
        if rows.is_empty() {
            return Ok(self.len());
        }
        Ok(self.len() - Matrix::from_rows(rows)?.rank())
    }

    /// Same vertices as the Koban–Piggott generators and edges exactly
    /// the commute relators, with no other relators. Holds iff there is
    /// no SIL pair.
    pub fn collapses_to_kp(&self) -> bool {
        let p = kp_presentation(&self.base);
        let gens = p.partials();
        if gens.len() != self.len() {
            return false;
        }
        let mut map = Vec::with_capacity(gens.len());
        for pc in &gens {
            match self.index_of(&HatVertex { component: pc.component.clone(), vertex: pc.acting }) {
                Some(i) => map.push(i),
                None => return false,
            }
        }
        let mut kp_edges: Vec<(usize, usize)> = p
            .relators
            .iter()
            .filter(|r| r.kind.is_commute())
            .map(|r| {
                let (a, b) = (map[r.left[0].gen], map[r.right[0].gen]);
                (a.min(b), a.max(b))
            })
            .collect();
        kp_edges.sort();
        let hat_edges: Vec<(usize, usize)> = self.graph.edges().into_iter().map(|(a, b)| (a.0, b.0)).collect();
        p.relators.iter().all(|r| r.kind.is_commute()) && kp_edges == hat_edges
    }
}

pub fn phi_verify(g: &Arc<Graph>) -> Result<Vec<String>> {
    hat_graph(g)?.phi_verify()
}

pub fn iota_check(g: &Arc<Graph>) -> Result<Vec<String>> {
    hat_graph(g)?.iota_check()
}

pub fn normality_check(g: &Arc<Graph>) -> Result<Vec<String>> {
    hat_graph(g)?.normality_check()
}

pub fn inner_commutator_check(g: &Arc<Graph>) -> Result<Vec<String>> {
    hat_graph(g)?.inner_commutator_check()
}

pub fn quotient_rank(g: &Arc<Graph>) -> Result<usize> {
    Ok(hat_graph(g)?.quotient_rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    fn arc(g: Graph) -> Arc<Graph> {
        Arc::new(g)
    }

    #[test]
    fn path_of_three() {
        let g = arc(Graph::path(3));
        let h = hat_graph(&g).unwrap();
        let names: Vec<&str> = h.graph.labels().iter().map(String::as_str).collect();
        assert_eq!(names, ["({3},1)", "({1},3)"]);
        assert_eq!(h.graph.edge_count(), 0);
        assert_eq!(iota(&h, Vertex(0)).unwrap(), [0]);
        assert!(matches!(iota(&h, Vertex(1)), Err(Error::CentralVertex(_))));
        assert_eq!(quotient_rank(&g).unwrap(), 0);
        assert_eq!(h.quotient_rank_oracle().unwrap(), 0);
        assert!(inner_commutator_check(&g).unwrap().is_empty());
        assert!(normality_check(&g).unwrap().is_empty());
    }

    #[test]
    fn centers() {
        assert_eq!(center_vertices(&Graph::path(3)).as_slice(), &[Vertex(1)]);
        assert_eq!(gamma_zero(&Graph::path(3)).edge_count(), 0);
        assert_eq!(center_vertices(&Graph::complete(4)).len(), 4);
        assert!(center_vertices(&Graph::edgeless(3)).is_empty());
    }

    #[test]
    fn disconnected_rejected() {
        assert!(matches!(hat_graph(&arc(Graph::edgeless(3))), Err(Error::Disconnected)));
    }

    #[test]
    fn complete_graph() {
        let g = arc(Graph::complete(4));
        let h = hat_graph(&g).unwrap();
        assert!(h.is_empty());
        assert_eq!(h.quotient_rank(), 0);
        assert_eq!(h.quotient_rank_oracle().unwrap(), 0);
    }

    #[test]
    fn example_graphs() {
        for g in [examples::slink_left().0, examples::slink_right().0] {
            let h = hat_graph(&arc(g)).unwrap();
            assert!(h.phi_verify().unwrap().is_empty());
            assert!(h.iota_check().unwrap().is_empty());
            assert!(h.normality_check().unwrap().is_empty());
            assert!(h.inner_commutator_check().unwrap().is_empty());
            assert!(h.nontrivial_check().is_empty());
            assert_eq!(h.quotient_rank(), h.quotient_rank_oracle().unwrap());
        }
    }

    #[test]
    fn collapse_without_sil() {
        let g = arc(Graph::path(4));
        assert!(!sil::has_sil(&g));
        assert!(hat_graph(&g).unwrap().collapses_to_kp());
        let c = arc(Graph::cycle(5));
        assert_eq!(sil::has_sil(&c), !hat_graph(&c).unwrap().collapses_to_kp());
    }

    #[test]
    fn edgeless_three() {
        let h = hat_graph_unchecked(&arc(Graph::edgeless(3))).unwrap();
        assert_eq!(h.len(), 6);
        assert_eq!(h.quotient_rank(), 3);
        assert_eq!(h.quotient_rank_oracle().unwrap(), 3);
        assert!(h.iota_check().unwrap().is_empty());
        // Without connectivity φ is not a homomorphism: ({2},1) and ({3},2)
        // are adjacent in Γ̂ but c_{{2},1} and c_{{3},2} do not commute.
        assert!(!h.phi_verify().unwrap().is_empty());
        assert!(!h.normality_check().unwrap().is_empty());
        assert!(!h.inner_commutator_check().unwrap().is_empty());
    }
}
