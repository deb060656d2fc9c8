//! The homomorphism `ρ: PAut(A_Γ) → A_Δ × ∏ (F₂ × F₂)` built from the
//! dual pairs of the arrow diagram.
//!
//! For a dual pair `(α, ᾱ)` with `α = (u, {v, w})` and `ᾱ = (w, {u, z})`
//! the factor entries are `u ↦ (a,1)`, `w ↦ (b,1)`, `v ↦ (b⁻¹,b)` and
//! `z ↦ (a⁻¹,a)`. Vertices of Λ not involved in any arrow map into `A_Δ`.

use std::fmt;
use std::sync::Arc;

use crate::auto::Automorphism;
use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::graph::{Graph, VertexSet};
use crate::presentation::{arrow_diagram, kp_presentation, ArrowDiagram};
use crate::word::{commutator_letters, normal_form, Letter};

pub const A: usize = 0;
pub const B: usize = 1;

/// One entry of a free factor `F₂ × F₂`.
pub type FactorPair = (FreeWord, FreeWord);

fn pair_identity() -> FactorPair {
    (FreeWord::identity(), FreeWord::identity())
}

/// The four entries produced by the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// `(a, 1)`
    InitialFirst,
    /// `(b, 1)`
    InitialSecond,
    /// `(a⁻¹, a)`
    EdgeFirst,
    /// `(b⁻¹, b)`
    EdgeSecond,
}

impl Role {
    pub fn entry(self) -> FactorPair {
        let g = |x| FreeWord::generator(x);
        match self {
            Role::InitialFirst => (g(A), FreeWord::identity()),
            Role::InitialSecond => (g(B), FreeWord::identity()),
            Role::EdgeFirst => (g(A).invert(), g(A)),
            Role::EdgeSecond => (g(B).invert(), g(B)),
        }
    }

    pub const ALL: [Role; 4] = [Role::InitialFirst, Role::InitialSecond, Role::EdgeFirst, Role::EdgeSecond];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoImage {
    /// Normal form over the vertices of Δ.
    pub delta_word: Vec<Letter>,
    pub factors: Vec<FactorPair>,
}

impl RhoImage {
    pub fn identity(n: usize) -> RhoImage {
        RhoImage { delta_word: Vec::new(), factors: vec![pair_identity(); n] }
    }

    pub fn is_identity(&self) -> bool {
        self.delta_word.is_empty() && self.factors.iter().all(|(x, y)| x.is_identity() && y.is_identity())
    }

    pub fn multiply(&self, other: &RhoImage, delta: &Graph) -> RhoImage {
        let mut d = self.delta_word.clone();
        d.extend_from_slice(&other.delta_word);
        RhoImage {
            delta_word: normal_form(delta, &d),
            factors: self
                .factors
                .iter()
                .zip(&other.factors)
                .map(|((x, y), (p, q))| (x.multiply(p), y.multiply(q)))
                .collect(),
        }
    }

    pub fn invert(&self, delta: &Graph) -> RhoImage {
        let inv: Vec<Letter> = self.delta_word.iter().rev().map(|l| l.inverse()).collect();
        RhoImage {
            delta_word: normal_form(delta, &inv),
            factors: self.factors.iter().map(|(x, y)| (x.invert(), y.invert())).collect(),
        }
    }

    pub fn render(&self, delta: &Graph) -> String {
        let d = crate::word::format_letters(&self.delta_word, |i| delta.labels()[i].clone());
        let fs: Vec<String> = self.factors.iter().map(|(x, y)| format!("({x}, {y})")).collect();
        if fs.is_empty() {
            format!("[{d}]")
        } else {
            format!("[{d}] {}", fs.join(" "))
        }
    }
}

#[derive(Debug, Clone)]
pub struct RhoMap {
    pub diagram: ArrowDiagram,
    pub delta: Graph,
    /// Λ-vertex index to Δ-vertex index.
    pub delta_index: Vec<Option<usize>>,
    /// Dual pairs `(α_{2i−1}, α_{2i})` as arrow indices.
    pub pairs: Vec<(usize, usize)>,
    pub images: Vec<RhoImage>,
}

impl RhoMap {
    pub fn factor_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn generator_count(&self) -> usize {
        self.images.len()
    }

    /// Evaluates a word in Λ-vertices.
    pub fn eval(&self, word: &[Letter]) -> Result<RhoImage> {
        let mut acc = RhoImage::identity(self.factor_count());
        let mut delta_letters = Vec::new();
        for l in word {
            let img = self.images.get(l.gen).ok_or_else(|| Error::UnknownGenerator(l.gen.to_string()))?;
            for (slot, (x, y)) in acc.factors.iter_mut().zip(&img.factors) {
                let (x, y) = if l.inv { (x.invert(), y.invert()) } else { (x.clone(), y.clone()) };
                slot.0 = slot.0.multiply(&x);
                slot.1 = slot.1.multiply(&y);
            }
            if l.inv {
                delta_letters.extend(img.delta_word.iter().rev().map(|d| d.inverse()));
            } else {
                delta_letters.extend_from_slice(&img.delta_word);
            }
        }
        acc.delta_word = normal_form(&self.delta, &delta_letters);
        Ok(acc)
    }

    pub fn render(&self, i: usize) -> String {
        format!("{} -> {}", self.diagram.name(i), self.images[i].render(&self.delta))
    }
}

/// Full subgraph of Λ on the vertices not involved in any arrow.
pub fn delta_subgraph(ad: &ArrowDiagram) -> Graph {
    let keep: VertexSet = ad.uninvolved().into_iter().map(crate::graph::Vertex).collect();
    ad.lambda.induced_subgraph(&keep).expect("subset of Λ")
}

pub fn build_rho(g: &Graph) -> Result<RhoMap> {
    rho_from_diagram(arrow_diagram(g)?)
}

pub fn rho_from_diagram(diagram: ArrowDiagram) -> Result<RhoMap> {
    let delta = delta_subgraph(&diagram);
    let n = diagram.lambda.len();
    let delta_index: Vec<Option<usize>> =
        (0..n).map(|i| delta.vertex(diagram.name(i)).ok().map(|v| v.0)).collect();
    let pairs = diagram.pairs();
    let mut roles: Vec<Vec<Option<Role>>> = vec![vec![None; pairs.len()]; n];
    for (k, &(p, q)) in pairs.iter().enumerate() {
        let (first, second) = (diagram.arrows[p], diagram.arrows[q]);
        let other = |edge: (usize, usize), not: usize| -> Result<usize> {
            match edge {
                (x, y) if x == not => Ok(y),
                (x, y) if y == not => Ok(x),
                _ => Err(Error::Internal(format!("pair {k}: initial vertex missing from dual edge"))),
            }
        };
        let assignments = [
            (first.initial, Role::InitialFirst),
            (second.initial, Role::InitialSecond),
            (other(second.edge, first.initial)?, Role::EdgeFirst),
            (other(first.edge, second.initial)?, Role::EdgeSecond),
        ];
        for (vertex, role) in assignments {
            if let Some(prev) = roles[vertex][k] {
                return Err(Error::Internal(format!(
                    "{} gets roles {prev:?} and {role:?} in pair {k}",
                    diagram.name(vertex)
                )));
            }
            roles[vertex][k] = Some(role);
        }
    }
    let images = (0..n)
        .map(|i| match delta_index[i] {
            Some(d) => RhoImage { delta_word: vec![Letter::pos(d)], factors: vec![pair_identity(); pairs.len()] },
            None => RhoImage {
                delta_word: Vec::new(),
                factors: roles[i].iter().map(|r| r.map_or_else(pair_identity, Role::entry)).collect(),
            },
        })
        .collect();
    Ok(RhoMap { diagram, delta, delta_index, pairs, images })
}

/// Relators of the Koban–Piggott presentation whose ρ-image is nontrivial.
pub fn rho_verify_relations(g: &Graph) -> Result<Vec<String>> {
    let m = build_rho(g)?;
    let p = kp_presentation(g);
    let mut failures = Vec::new();
    for (i, r) in p.relators.iter().enumerate() {
        let img = m.eval(&r.word())?;
        if !img.is_identity() {
            failures.push(format!("relator {i} ({}) maps to {}", r.kind.tag(), img.render(&m.delta)));
        }
    }
    Ok(failures)
}

/// Every Δ-generator is hit, and each free factor receives all four
/// construction entries, which generate `F₂ × F₂`.
pub fn rho_subdirect_check(g: &Graph) -> Result<bool> {
    let m = build_rho(g)?;
    Ok(subdirect(&m))
}

pub fn subdirect(m: &RhoMap) -> bool {
    let delta_hit = (0..m.delta.len()).all(|d| m.images.iter().any(|img| img.delta_word == [Letter::pos(d)]));
    let factors_hit = (0..m.factor_count())
        .all(|k| Role::ALL.iter().all(|role| m.images.iter().any(|img| img.factors[k] == role.entry())));
    delta_hit && factors_hit
}

/// The target is torsion-free, so infinite order means non-identity.
pub fn rho_infinite_order_check(g: &Graph) -> Result<bool> {
    Ok(build_rho(g)?.images.iter().all(|img| !img.is_identity()))
}

#[derive(Debug, Clone)]
pub struct NoninjectivityWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `[[c_ij, c_ik], c_ji]` over the generators of the edgeless graph.
    pub word: Vec<Letter>,
    pub rho_trivial: bool,
    /// `[c_ij, c_ik] ≠ 1` and `[[c_ij, c_ik], c_ji] ≠ 1` in the engine.
    pub engine_nontrivial: bool,
}

/// Index of `c_ij` (conjugate vertex `i` by vertex `j`, 1-based) among the
/// generators of the edgeless graph on `n` vertices.
pub fn free_generator_index(n: usize, i: usize, j: usize) -> usize {
    (j - 1) * (n - 1) + if i < j { i - 1 } else { i - 2 }
}

pub fn noninjectivity_witnesses(n: usize) -> Result<Vec<NoninjectivityWitness>> {
    if n < 3 {
        return Err(Error::InvalidArgument("non-injectivity witnesses need n >= 3".into()));
    }
    let g = Arc::new(Graph::edgeless(n));
    let m = build_rho(&g)?;
    let gens: Vec<Automorphism> =
        m.diagram.generators.iter().map(|pc| Automorphism::partial(&g, pc)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            for k in (1..=n).filter(|&k| k != i && k != j) {
                let (ij, ik, ji) =
                    (free_generator_index(n, i, j), free_generator_index(n, i, k), free_generator_index(n, j, i));
                let inner = commutator_letters(&[Letter::pos(ij)], &[Letter::pos(ik)]);
                let word = commutator_letters(&inner, &[Letter::pos(ji)]);
                let c = gens[ij].commutator(&gens[ik])?;
                let cc = c.commutator(&gens[ji])?;
                out.push(NoninjectivityWitness {
                    i,
                    j,
                    k,
                    rho_trivial: m.eval(&word)?.is_identity(),
                    engine_nontrivial: !c.is_identity() && !cc.is_identity(),
                    word,
                });
            }
        }
    }
    Ok(out)
}

/// A relabelling of the dual pairs: `perm[k]` is the pair of `m` playing
/// the role of reference pair `k`, and `swap[k]` exchanges `a` and `b`
/// there (equivalently, exchanges the two arrows of the pair).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Indexing {
    pub perm: Vec<usize>,
    pub swap: Vec<bool>,
}

fn swap_ab(w: &FreeWord) -> FreeWord {
    let letters: Vec<Letter> = w.letters().iter().map(|l| Letter { gen: 1 - l.gen, inv: l.inv }).collect();
    FreeWord::from_letters(&letters)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Searches all `N! · 2^N` relabellings of the dual pairs for one under
/// which `m` has the factor entries `reference[i]` at Λ-vertex `i`.
pub fn match_up_to_indexing(m: &RhoMap, reference: &[Vec<FactorPair>]) -> Option<Indexing> {
    let n = m.factor_count();
    if reference.len() != m.generator_count() || reference.iter().any(|r| r.len() != n) {
        return None;
    }
    for perm in permutations(n) {
        'swaps: for mask in 0u64..(1 << n) {
            let swap: Vec<bool> = (0..n).map(|k| mask >> k & 1 == 1).collect();
            for (img, refs) in m.images.iter().zip(reference) {
                for k in 0..n {
                    let (x, y) = &refs[k];
                    let want = if swap[k] { (swap_ab(x), swap_ab(y)) } else { (x.clone(), y.clone()) };
                    if img.factors[perm[k]] != want {
                        continue 'swaps;
                    }
                }
            }
            return Some(Indexing { perm, swap });
        }
    }
    None
}

impl fmt::Display for RhoMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.images.len() {
            writeln!(f, "{}", self.render(i))?;
        }
        Ok(())
    }
}
