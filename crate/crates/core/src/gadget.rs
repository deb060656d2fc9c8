//! The group `G = (F₂ × F₂) ∗_t`
//!
//! `⟨x, a, y, b, t | [x,y], [x,b], [a,y], [a,b], [xy,t], [ab,t]⟩`,
//!
//! its embedding into `PAut(A_Γ)` along a SIL pair, and block/Kronecker
//! matrix assignments.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::auto::{evaluate, Automorphism};
use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::presentation::{Generator, GroupPresentation, Relator, RelatorKind};
use crate::sil::{self, ComponentClass};
use crate::word::Letter;
use crate::{IntMatrix, RatMatrix};

pub const X: usize = 0;
pub const A: usize = 1;
pub const Y: usize = 2;
pub const B: usize = 3;
pub const T: usize = 4;
pub const NAMES: [&str; 5] = ["x", "a", "y", "b", "t"];

fn p(g: usize) -> Letter {
    Letter::pos(g)
}

fn n(g: usize) -> Letter {
    Letter::neg(g)
}

pub fn gadget_presentation() -> GroupPresentation {
    let pairs: [(&[Letter], &[Letter]); 6] = [
        (&[p(X)], &[p(Y)]),
        (&[p(X)], &[p(B)]),
        (&[p(A)], &[p(Y)]),
        (&[p(A)], &[p(B)]),
        (&[p(X), p(Y)], &[p(T)]),
        (&[p(A), p(B)], &[p(T)]),
    ];
    GroupPresentation {
        generators: NAMES.iter().map(|s| Generator::Symbol(s.to_string())).collect(),
        names: NAMES.iter().map(|s| s.to_string()).collect(),
        relators: pairs
            .iter()
            .map(|(l, r)| Relator { kind: RelatorKind::Plain, left: l.to_vec(), right: r.to_vec(), witness: None })
            .collect(),
    }
}

pub fn relator_words() -> Vec<Vec<Letter>> {
    gadget_presentation().relators.iter().map(Relator::word).collect()
}

/// `a^y a⁻¹, a^b a⁻¹, x^y x⁻¹, x^b x⁻¹, t^y (t^{x⁻¹})⁻¹, t^b (t^{a⁻¹})⁻¹`
/// with `g^h = h⁻¹ g h`.
pub fn alternative_relators() -> Vec<Vec<Letter>> {
    vec![
        vec![n(Y), p(A), p(Y), n(A)],
        vec![n(B), p(A), p(B), n(A)],
        vec![n(Y), p(X), p(Y), n(X)],
        vec![n(B), p(X), p(B), n(X)],
        vec![n(Y), p(T), p(Y), p(X), n(T), n(X)],
        vec![n(B), p(T), p(B), p(A), n(T), n(A)],
    ]
}

/// One factor `(r_index^{±1})^{conjugator}` of a consequence of relators.
#[derive(Debug, Clone)]
pub struct Step {
    pub relator: usize,
    pub inverse: bool,
    pub conjugator: Vec<Letter>,
}

fn step(relator: usize, inverse: bool, conjugator: &[Letter]) -> Step {
    Step { relator, inverse, conjugator: conjugator.to_vec() }
}

/// Product of the steps, freely reduced.
pub fn expand(basis: &[Vec<Letter>], steps: &[Step]) -> FreeWord {
    steps.iter().fold(FreeWord::identity(), |acc, s| {
        let r = FreeWord::from_letters(&basis[s.relator]);
        let r = if s.inverse { r.invert() } else { r };
        acc.multiply(&r.conjugate(&FreeWord::from_letters(&s.conjugator)))
    })
}

/// Each commutator relator as a product of conjugates of the alternative
/// relators.
pub fn relators_from_alternative() -> Vec<Vec<Step>> {
    // [xy,t] = (s3⁻¹)^x · s3^{y⁻¹tyx} · (s5⁻¹)^{xt}, and symmetrically.
    vec![
        vec![step(2, false, &[p(X)])],
        vec![step(3, false, &[p(X)])],
        vec![step(0, false, &[p(A)])],
        vec![step(1, false, &[p(A)])],
        vec![
            step(2, true, &[p(X)]),
            step(2, false, &[n(Y), p(T), p(Y), p(X)]),
            step(4, true, &[p(X), p(T)]),
        ],
        vec![
            step(1, true, &[p(A)]),
            step(1, false, &[n(B), p(T), p(B), p(A)]),
            step(5, true, &[p(A), p(T)]),
        ],
    ]
}

/// Each alternative relator as a product of conjugates of the commutator
/// relators.
pub fn alternative_from_relators() -> Vec<Vec<Step>> {
    let xi = n(X);
    let ai = n(A);
    vec![
        vec![step(2, false, &[ai])],
        vec![step(3, false, &[ai])],
        vec![step(0, false, &[xi])],
        vec![step(1, false, &[xi])],
        vec![
            step(4, true, &[n(T), xi]),
            step(0, true, &[n(T), xi]),
            step(0, false, &[xi, n(Y), p(T), p(Y), p(X), n(T), xi]),
        ],
        vec![
            step(5, true, &[n(T), ai]),
            step(3, true, &[n(T), ai]),
            step(3, false, &[ai, n(B), p(T), p(B), p(A), n(T), ai]),
        ],
    ]
}

/// Both relator sets are consequences of each other, witnessed by the
/// explicit derivations above.
pub fn alternative_presents_same_group() -> bool {
    let r = relator_words();
    let s = alternative_relators();
    let forward = relators_from_alternative()
        .iter()
        .zip(&r)
        .all(|(d, target)| expand(&s, d) == FreeWord::from_letters(target));
    let backward = alternative_from_relators()
        .iter()
        .zip(&s)
        .all(|(d, target)| expand(&r, d) == FreeWord::from_letters(target));
    forward && backward
}

/// Exponent-sum matrix of the relators; the abelianization has rank
/// `5 − rank` of it.
pub fn abelianization_rank() -> usize {
    let rows: Vec<Vec<BigInt>> = relator_words()
        .iter()
        .map(|w| {
            let mut e = vec![BigInt::from(0); 5];
            for l in w {
                e[l.gen] += l.exponent();
            }
            e
        })
        .collect();
    5 - IntMatrix::from_rows(rows).expect("rectangular").rank()
}

/// Per-relator verdicts, in presentation order.
pub type RelationReport = Vec<(String, bool)>;

fn report(verdicts: impl IntoIterator<Item = bool>) -> RelationReport {
    let p = gadget_presentation();
    p.relators
        .iter()
        .zip(verdicts)
        .map(|(r, ok)| {
            let side = |w: &[Letter]| w.iter().map(|l| NAMES[l.gen]).collect::<String>();
            (format!("[{},{}]", side(&r.left), side(&r.right)), ok)
        })
        .collect()
}

pub fn all_pass(r: &RelationReport) -> bool {
    r.iter().all(|(_, ok)| *ok)
}

#[derive(Debug, Clone)]
pub struct GadgetEmbedding {
    /// Images of `x, a, y, b, t`.
    pub images: Vec<Automorphism>,
    pub report: RelationReport,
}

/// `x ↦ inner(u)`, `a ↦ inner(v)`, `t ↦ inner(w)`, `y ↦ c_{C,u}⁻¹`,
/// `b ↦ c_{C,v}⁻¹`.
pub fn gadget_embedding(g: &Arc<Graph>, u: Vertex, v: Vertex, c: &VertexSet, w: Vertex) -> Result<GadgetEmbedding> {
    g.check(u)?;
    g.check(v)?;
    g.check(w)?;
    g.check_set(c)?;
    if u == v {
        return Err(Error::SameVertex(g.label(u).into()));
    }
    if !sil::is_sil_pair(g, u, v)? {
        return Err(Error::NotSilPair(g.label(u).into(), g.label(v).into()));
    }
    let shared = |x: Vertex, y: Vertex| matches!(sil::classify_component(g, x, y, c), Ok(ComponentClass::Shared));
    if !shared(u, v) || !shared(v, u) {
        return Err(Error::NotShared(g.display_set(c), g.label(u).into()));
    }
    if !c.contains(w) {
        return Err(Error::InvalidArgument(format!("{} is not in {}", g.label(w), g.display_set(c))));
    }
    let cu = Automorphism::partial_product(g, u, std::slice::from_ref(c))?;
    let cv = Automorphism::partial_product(g, v, std::slice::from_ref(c))?;
    let images = vec![
        Automorphism::inner_by_vertex(g, u)?,
        Automorphism::inner_by_vertex(g, v)?,
        cu.invert()?,
        cv.invert()?,
        Automorphism::inner_by_vertex(g, w)?,
    ];
    let inverses = images.iter().map(Automorphism::invert).collect::<Result<Vec<_>>>()?;
    let verdicts = relator_words()
        .iter()
        .map(|r| evaluate(g, &images, &inverses, r).map(|a| a.is_identity()))
        .collect::<Result<Vec<_>>>()?;
    Ok(GadgetEmbedding { images, report: report(verdicts) })
}

#[derive(Debug, Clone)]
pub struct MatrixAssignment {
    /// Images of `x, a, y, b, t`.
    pub images: Vec<IntMatrix>,
    pub report: RelationReport,
}

fn rational(m: &IntMatrix) -> RatMatrix {
    m.map(|x| BigRational::from_integer(x.clone()))
}

fn commutes(p: &RatMatrix, q: &RatMatrix) -> Result<bool> {
    Ok(p.mul(q)? == q.mul(p)?)
}

/// `x ↦ diag(A, I)`, `y ↦ diag(I, A)`, `a ↦ diag(B, I)`, `b ↦ diag(I, B)`,
/// `t ↦ M ⊗ D`, with `A, B, D` of size `n` and `M` of size 2.
pub fn kronecker_rep(a: &IntMatrix, b: &IntMatrix, d: &IntMatrix, m: &IntMatrix) -> Result<MatrixAssignment> {
    let k = a.rows();
    for (name, x) in [("A", a), ("B", b), ("D", d)] {
        if !x.is_square() || x.rows() != k {
            return Err(Error::Dimension(format!("{name} must be {k}x{k}")));
        }
    }
    if !m.is_square() || m.rows() != 2 {
        return Err(Error::Dimension("M must be 2x2; only the two-block shape is supported".into()));
    }
    let (ra, rb, rd, rm) = (rational(a), rational(b), rational(d), rational(m));
    for (name, x) in [("A", &ra), ("B", &rb), ("D", &rd), ("M", &rm)] {
        if x.inverse().is_none() {
            return Err(Error::InvalidArgument(format!("{name} is not invertible")));
        }
    }
    if !commutes(&ra, &rd)? {
        return Err(Error::InvalidArgument("[A,D] is not the identity".into()));
    }
    if !commutes(&rb, &rd)? {
        return Err(Error::InvalidArgument("[B,D] is not the identity".into()));
    }
    let id = IntMatrix::identity(k);
    let images = vec![
        IntMatrix::block_diag(&[a, &id]),
        IntMatrix::block_diag(&[b, &id]),
        IntMatrix::block_diag(&[&id, a]),
        IntMatrix::block_diag(&[&id, b]),
        m.kron(d),
    ];
    let gens: Vec<RatMatrix> = images.iter().map(rational).collect();
    let invs: Vec<RatMatrix> = gens.iter().map(|x| x.inverse().expect("invertible blocks")).collect();
    let size = 2 * k;
    let verdicts = relator_words()
        .iter()
        .map(|r| {
            r.iter().try_fold(RatMatrix::identity(size), |acc, l| {
                acc.mul(if l.inv { &invs[l.gen] } else { &gens[l.gen] })
            })
            .map(|x| x.is_identity())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MatrixAssignment { images, report: report(verdicts) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::commutator_letters;

    fn int(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn presentation_shape() {
        let pres = gadget_presentation();
        assert_eq!(pres.generators.len(), 5);
        assert_eq!(pres.relators.len(), 6);
        assert_eq!(abelianization_rank(), 5);
        assert_eq!(relator_words()[4], commutator_letters(&[p(X), p(Y)], &[p(T)]));
    }

    #[test]
    fn alternative_relators_are_equivalent() {
        assert!(alternative_presents_same_group());
    }

    #[test]
    fn embedding_free_group() {
        let g = Arc::new(Graph::edgeless(3));
        let [one, two, three] = ["1", "2", "3"].map(|l| g.vertex(l).unwrap());
        let e = gadget_embedding(&g, one, two, &VertexSet::singleton(three), three).unwrap();
        assert!(all_pass(&e.report));
        assert!(gadget_embedding(&g, one, two, &VertexSet::singleton(two), three).is_err());
        assert!(gadget_embedding(&g, one, two, &VertexSet::singleton(three), two).is_err());
    }

    #[test]
    fn matrices() {
        let a = int(&[&[1, 2], &[0, 1]]);
        let b = int(&[&[1, 0], &[2, 1]]);
        let d = IntMatrix::identity(2);
        let m = int(&[&[0, 1], &[1, 0]]);
        let r = kronecker_rep(&a, &b, &d, &m).unwrap();
        assert!(all_pass(&r.report));
        let i = IntMatrix::identity(2);
        assert!(all_pass(&kronecker_rep(&i, &i, &i, &i).unwrap().report));
        assert!(kronecker_rep(&a, &b, &int(&[&[1, 1], &[0, 1]]), &m).is_err());
        assert!(kronecker_rep(&a, &b, &d, &IntMatrix::identity(3)).is_err());
    }
}
