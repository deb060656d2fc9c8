//! Automorphisms of a RAAG generated by partial conjugations and inner
//! automorphisms.
//!
//! An [`Automorphism`] stores the normalized image of every standard
//! generator together with the expression it was built from, so inverses
//! are obtained by reversing the expression instead of solving for
//! preimages.
//!
//! Composition convention: `a.compose(&b)` applies `a` first and then `b`,
//! i.e. its image of `w` is `b` applied letterwise to `a(w)`. Words in
//! automorphisms are evaluated left to right with this composition, which
//! makes `h ↦ inner(h)` a homomorphism and `c^d = d⁻¹ c d`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::word::{self, check_limit, invert_letters, normal_form, same_ambient, Letter, RaagWord};

/// The partial conjugation `c_{A,v}`: every generator of the component `A`
/// of `Γ − st(v)` is conjugated by `v`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialConjugation {
    pub acting: Vertex,
    pub component: VertexSet,
}

impl PartialConjugation {
    /// Validates that `component` is a component of `Γ − st(acting)`.
    pub fn new(g: &Graph, acting: Vertex, component: VertexSet) -> Result<PartialConjugation> {
        let star = g.star(acting)?;
        g.check_set(&component)?;
        let comps = g.components_after_removal(&star)?;
        if component.is_empty() || !comps.contains(&component) {
            return Err(Error::NotAComponent(g.label(acting).to_string()));
        }
        Ok(PartialConjugation { acting, component })
    }

    /// `c[v|{a,b}]`.
    pub fn name(&self, g: &Graph) -> String {
        format!("c[{}|{}]", g.label(self.acting), g.display_set(&self.component))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Partial(PartialConjugation),
    /// Conjugation of every generator by the given word.
    Inner(Vec<Letter>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub factor: Factor,
    pub inverse: bool,
}

#[derive(Debug, Clone)]
pub struct Automorphism {
    ambient: Arc<Graph>,
    images: Vec<Vec<Letter>>,
    expression: Vec<Term>,
    limit: usize,
}

fn conjugated(x: Letter, by: &[Letter]) -> Vec<Letter> {
    let mut out = invert_letters(by);
    out.push(x);
    out.extend_from_slice(by);
    out
}

/// Images of the automorphism that conjugates each generator in `set` by
/// `by` and fixes the others, computed straight from the definition.
pub fn conjugation_images(g: &Graph, set: &VertexSet, by: &[Letter]) -> Vec<Vec<Letter>> {
    g.vertices()
        .map(|w| {
            let x = Letter::pos(w.0);
            if set.contains(w) {
                normal_form(g, &conjugated(x, by))
            } else {
                vec![x]
            }
        })
        .collect()
}

impl Automorphism {
    pub fn identity(ambient: Arc<Graph>) -> Automorphism {
        let images = ambient.vertices().map(|w| vec![Letter::pos(w.0)]).collect();
        Automorphism { ambient, images, expression: Vec::new(), limit: word::DEFAULT_WORD_LIMIT }
    }

    fn base(ambient: &Arc<Graph>, term: Term) -> Automorphism {
        let images = match &term.factor {
            Factor::Partial(pc) => {
                let by = [Letter { gen: pc.acting.0, inv: term.inverse }];
                conjugation_images(ambient, &pc.component, &by)
            }
            Factor::Inner(h) => {
                let by = if term.inverse { invert_letters(h) } else { h.clone() };
                conjugation_images(ambient, &ambient.all_vertices(), &by)
            }
        };
        Automorphism { ambient: ambient.clone(), images, expression: vec![term], limit: word::DEFAULT_WORD_LIMIT }
    }

    /// The partial conjugation `c_{A,v}` as an automorphism.
    pub fn partial(ambient: &Arc<Graph>, pc: &PartialConjugation) -> Result<Automorphism> {
        let checked = PartialConjugation::new(ambient, pc.acting, pc.component.clone())?;
        Ok(Automorphism::base(ambient, Term { factor: Factor::Partial(checked), inverse: false }))
    }

    /// Inner automorphism `w ↦ h⁻¹ w h`.
    pub fn inner(ambient: &Arc<Graph>, h: &RaagWord) -> Result<Automorphism> {
        if !same_ambient(ambient, h.ambient()) {
            return Err(Error::AmbientMismatch);
        }
        let h = h.normalize()?;
        Ok(Automorphism::base(ambient, Term { factor: Factor::Inner(h.letters().to_vec()), inverse: false }))
    }

    pub fn inner_by_vertex(ambient: &Arc<Graph>, v: Vertex) -> Result<Automorphism> {
        Automorphism::inner(ambient, &RaagWord::generator(ambient.clone(), v)?)
    }

    /// Builds the automorphism given by an expression, left to right.
    pub fn from_expression(ambient: &Arc<Graph>, terms: &[Term]) -> Result<Automorphism> {
        let mut acc = Automorphism::identity(ambient.clone());
        for t in terms {
            if let Factor::Partial(pc) = &t.factor {
                PartialConjugation::new(ambient, pc.acting, pc.component.clone())?;
            }
            acc = acc.compose(&Automorphism::base(ambient, t.clone()))?;
        }
        Ok(acc)
    }

    /// Product of partial conjugations by `v` over the given components.
    pub fn partial_product(ambient: &Arc<Graph>, v: Vertex, components: &[VertexSet]) -> Result<Automorphism> {
        let terms: Vec<Term> = components
            .iter()
            .map(|c| Term {
                factor: Factor::Partial(PartialConjugation { acting: v, component: c.clone() }),
                inverse: false,
            })
            .collect();
        Automorphism::from_expression(ambient, &terms)
    }

    pub fn with_word_limit(mut self, limit: usize) -> Automorphism {
        self.limit = limit;
        self
    }

    pub fn ambient(&self) -> &Arc<Graph> {
        &self.ambient
    }

    pub fn images(&self) -> &[Vec<Letter>] {
        &self.images
    }

    pub fn image(&self, v: Vertex) -> RaagWord {
        RaagWord::from_letters(self.ambient.clone(), self.images[v.0].clone()).expect("images live over ambient")
    }

    pub fn expression(&self) -> &[Term] {
        &self.expression
    }

    fn same(&self, other: &Automorphism) -> Result<()> {
        if same_ambient(&self.ambient, &other.ambient) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// Substitutes images letterwise and normalizes.
    pub fn apply_letters(&self, letters: &[Letter]) -> Result<Vec<Letter>> {
        let total: usize = letters.iter().map(|l| self.images[l.gen].len()).sum();
        check_limit(total, self.limit)?;
        let mut out = Vec::with_capacity(total);
        for l in letters {
            let img = &self.images[l.gen];
            if l.inv {
                out.extend(invert_letters(img));
            } else {
                out.extend_from_slice(img);
            }
        }
        Ok(normal_form(&self.ambient, &out))
    }

    pub fn apply(&self, w: &RaagWord) -> Result<RaagWord> {
        if !same_ambient(&self.ambient, w.ambient()) {
            return Err(Error::AmbientMismatch);
        }
        RaagWord::from_letters(self.ambient.clone(), self.apply_letters(w.letters())?)
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &Automorphism) -> Result<Automorphism> {
        self.same(next)?;
        let images = self.images.iter().map(|img| next.apply_letters(img)).collect::<Result<Vec<_>>>()?;
        let mut expression = self.expression.clone();
        expression.extend(next.expression.iter().cloned());
        Ok(Automorphism { ambient: self.ambient.clone(), images, expression, limit: self.limit.min(next.limit) })
    }

    pub fn invert(&self) -> Result<Automorphism> {
        let terms: Vec<Term> = self
            .expression
            .iter()
            .rev()
            .map(|t| Term { factor: t.factor.clone(), inverse: !t.inverse })
            .collect();
        Ok(Automorphism::from_expression(&self.ambient, &terms)?.with_word_limit(self.limit))
    }

    /// Pointwise equality of normalized generator images.
    pub fn equals(&self, other: &Automorphism) -> Result<bool> {
        self.same(other)?;
        Ok(self.images == other.images)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, img)| img.len() == 1 && img[0] == Letter::pos(i))
    }

    pub fn has_images(&self, images: &[Vec<Letter>]) -> bool {
        self.images == images
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, other: &Automorphism) -> Result<Automorphism> {
        self.invert()?.compose(&other.invert()?)?.compose(self)?.compose(other)
    }

    /// `d⁻¹ self d`.
    pub fn conjugate_by(&self, d: &Automorphism) -> Result<Automorphism> {
        d.invert()?.compose(self)?.compose(d)
    }

    /// Every generator is sent to a conjugate of itself.
    pub fn is_pure_symmetric(&self) -> bool {
        self.ambient.vertices().all(|v| self.image(v).is_conjugate_of_generator(v))
    }

    /// Rebuilds the automorphism from its expression.
    pub fn replay(&self) -> Result<Automorphism> {
        Automorphism::from_expression(&self.ambient, &self.expression)
    }
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        same_ambient(&self.ambient, &other.ambient) && self.images == other.images
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.ambient.vertices() {
            writeln!(f, "{} -> {}", self.ambient.label(v), self.image(v))?;
        }
        Ok(())
    }
}

/// Evaluates a word in generator automorphisms, left to right.
///
/// `inverses[i]` must be the inverse of `generators[i]`.
pub fn evaluate(
    ambient: &Arc<Graph>,
    generators: &[Automorphism],
    inverses: &[Automorphism],
    word: &[Letter],
) -> Result<Automorphism> {
    let mut acc = Automorphism::identity(ambient.clone());
    for l in word {
        let g = if l.inv { inverses.get(l.gen) } else { generators.get(l.gen) };
        let g = g.ok_or_else(|| Error::UnknownGenerator(l.gen.to_string()))?;
        acc = acc.compose(g)?;
    }
    Ok(acc)
}
