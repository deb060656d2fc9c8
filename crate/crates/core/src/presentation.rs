//! Presentations of `PAut(A_Γ)` and `PAut(F_n)`, the arrow diagram and
//! its dual-arrow matching, and text export/import.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::auto::PartialConjugation;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::sil;
use crate::word::{commutator_letters, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    Partial(PartialConjugation),
    Symbol(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelatorKind {
    /// Commutation with equal or adjacent acting vertices.
    CommuteI,
    /// Commutation from disjoint or nested supports.
    CommuteII,
    /// `[c_{A,v} c_{B,v}, c_{A,w}]` with `A` shared and `B` dominant.
    SilIII,
    Plain,
}

impl RelatorKind {
    pub fn tag(self) -> &'static str {
        match self {
            RelatorKind::CommuteI => "commute-i",
            RelatorKind::CommuteII => "commute-ii",
            RelatorKind::SilIII => "sil-iii",
            RelatorKind::Plain => "relator",
        }
    }

    fn from_tag(tag: &str) -> Option<RelatorKind> {
        Some(match tag {
            "commute-i" => RelatorKind::CommuteI,
            "commute-ii" => RelatorKind::CommuteII,
            "sil-iii" => RelatorKind::SilIII,
            "relator" => RelatorKind::Plain,
            _ => return None,
        })
    }

    pub fn is_commute(self) -> bool {
        matches!(self, RelatorKind::CommuteI | RelatorKind::CommuteII)
    }
}

/// Data of a SIL-type relator `[c_{A,v} c_{B,v}, c_{A,w}]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SilWitness {
    pub v: Vertex,
    pub w: Vertex,
    pub shared: VertexSet,
    pub dominant: VertexSet,
}

/// The relator `[left, right] = left⁻¹ right⁻¹ left right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relator {
    pub kind: RelatorKind,
    pub left: Vec<Letter>,
    pub right: Vec<Letter>,
    pub witness: Option<SilWitness>,
}

impl Relator {
    pub fn word(&self) -> Vec<Letter> {
        commutator_letters(&self.left, &self.right)
    }

    fn commute(kind: RelatorKind, a: usize, b: usize) -> Relator {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Relator { kind, left: vec![Letter::pos(a)], right: vec![Letter::pos(b)], witness: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<Generator>,
    pub names: Vec<String>,
    pub relators: Vec<Relator>,
}

impl GroupPresentation {
    pub fn count(&self, kind: RelatorKind) -> usize {
        self.relators.iter().filter(|r| r.kind == kind).count()
    }

    pub fn commute_count(&self) -> usize {
        self.relators.iter().filter(|r| r.kind.is_commute()).count()
    }

    pub fn partials(&self) -> Vec<PartialConjugation> {
        self.generators
            .iter()
            .filter_map(|g| match g {
                Generator::Partial(pc) => Some(pc.clone()),
                Generator::Symbol(_) => None,
            })
            .collect()
    }

    /// Relator keys after renaming generators by `rename`, with commutator
    /// brackets of single letters put in canonical order.
    fn keys(&self, rename: impl Fn(usize) -> usize) -> BTreeSet<(bool, Vec<Letter>, Vec<Letter>)> {
        self.relators
            .iter()
            .map(|r| {
                let map = |w: &[Letter]| -> Vec<Letter> {
                    w.iter().map(|l| Letter { gen: rename(l.gen), inv: l.inv }).collect()
                };
                let (mut l, mut rr) = (map(&r.left), map(&r.right));
                if r.kind.is_commute() && rr < l {
                    std::mem::swap(&mut l, &mut rr);
                }
                (r.kind.is_commute(), l, rr)
            })
            .collect()
    }

    /// Same relators (commute vs. non-commute, word for word) once the
    /// generators of `self` are renamed into those of `other` by name.
    pub fn coincides_with(&self, other: &GroupPresentation, rename: impl Fn(&str) -> String) -> bool {
        if self.generators.len() != other.generators.len() || self.relators.len() != other.relators.len() {
            return false;
        }
        let idx: HashMap<&str, usize> = other.names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let mapping: Option<Vec<usize>> = self.names.iter().map(|n| idx.get(rename(n).as_str()).copied()).collect();
        match mapping {
            Some(m) => self.keys(|i| m[i]) == other.keys(|i| i),
            None => false,
        }
    }
}

/// All partial conjugations `c_{A,v}`, ordered by `v` and then by
/// component.
pub fn paut_generators(g: &Graph) -> Vec<PartialConjugation> {
    let mut out = Vec::new();
    for v in g.vertices() {
        let comps = g.components_after_removal(&g.star_unchecked(v)).expect("star is a vertex set");
        out.extend(comps.into_iter().map(|component| PartialConjugation { acting: v, component }));
    }
    out
}

/// Which commutation relation, if any, makes `c_{A,v}` and `c_{B,w}`
/// commute.
pub fn commute_kind(g: &Graph, a: &PartialConjugation, b: &PartialConjugation) -> Option<RelatorKind> {
    let (v, w) = (a.acting, b.acting);
    if v == w || g.adjacent(v, w) {
        return Some(RelatorKind::CommuteI);
    }
    let av = a.component.with(v);
    let bw = b.component.with(w);
    if av.is_disjoint(&bw) || av.is_subset(&b.component) || bw.is_subset(&a.component) {
        return Some(RelatorKind::CommuteII);
    }
    None
}

/// SIL-type witnesses from the shared/dominant formulation, ordered by
/// `(v, w, A)`.
pub fn sil_witnesses(g: &Graph) -> Vec<SilWitness> {
    let mut out = Vec::new();
    for v in g.vertices() {
        for w in g.vertices() {
            if v == w || g.adjacent(v, w) {
                continue;
            }
            let dominant = sil::dominant_component(g, v, w).expect("valid").expect("w lies off st(v)");
            for shared in sil::shared_components(g, v, w).expect("valid") {
                out.push(SilWitness { v, w, shared, dominant: dominant.clone() });
            }
        }
    }
    out
}

/// SIL-type witnesses read literally: `A` a component of
/// `Γ − (lk(v) ∩ lk(w))` avoiding `v, w`, and `B ∋ w` a component of
/// `Γ − st(v)`.
pub fn sil_witnesses_literal(g: &Graph) -> Vec<SilWitness> {
    let mut out = Vec::new();
    for v in g.vertices() {
        for w in g.vertices().filter(|&w| w != v) {
            let common = g.link(v).unwrap().intersection(&g.link(w).unwrap());
            let Some(dominant) = g.component_containing(w, &g.star_unchecked(v)) else {
                continue;
            };
            for a in g.components_after_removal(&common).unwrap() {
                if !a.contains(v) && !a.contains(w) {
                    out.push(SilWitness { v, w, shared: a, dominant: dominant.clone() });
                }
            }
        }
    }
    out.sort();
    out
}

/// Witnesses produced by exactly one of the two readings of the SIL-type
/// relation schema. Empty on every graph we have checked.
pub fn sil_reading_discrepancies(g: &Graph) -> Vec<SilWitness> {
    let mut a = sil_witnesses(g);
    a.sort();
    let b = sil_witnesses_literal(g);
    let sa: BTreeSet<_> = a.into_iter().collect();
    let sb: BTreeSet<_> = b.into_iter().collect();
    sa.symmetric_difference(&sb).cloned().collect()
}

fn names_of(g: &Graph, gens: &[PartialConjugation]) -> Vec<String> {
    gens.iter().map(|pc| pc.name(g)).collect()
}

/// The Koban–Piggott presentation of `PAut(A_Γ)`.
pub fn kp_presentation(g: &Graph) -> GroupPresentation {
    let gens = paut_generators(g);
    let index: HashMap<&PartialConjugation, usize> = gens.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut relators = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if let Some(kind) = commute_kind(g, &gens[i], &gens[j]) {
                relators.push(Relator::commute(kind, i, j));
            }
        }
    }
    for wit in sil_witnesses(g) {
        let at = |acting: Vertex, component: &VertexSet| {
            index[&PartialConjugation { acting, component: component.clone() }]
        };
        let av = at(wit.v, &wit.shared);
        let bv = at(wit.v, &wit.dominant);
        let aw = at(wit.w, &wit.shared);
        relators.push(Relator {
            kind: RelatorKind::SilIII,
            left: vec![Letter::pos(av), Letter::pos(bv)],
            right: vec![Letter::pos(aw)],
            witness: Some(wit),
        });
    }
    GroupPresentation {
        names: names_of(g, &gens),
        generators: gens.into_iter().map(Generator::Partial).collect(),
        relators,
    }
}

pub fn mccool_name(i: usize, j: usize) -> String {
    format!("c{i}_{j}")
}

/// McCool's presentation of `PAut(F_n)` on `c_ij` (conjugate `x_i` by
/// `x_j`), generators ordered by `j` and then `i`.
pub fn mccool_presentation(n: usize) -> Result<GroupPresentation> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut pairs = Vec::new();
    for j in 1..=n {
        for i in (1..=n).filter(|&i| i != j) {
            pairs.push((i, j));
        }
    }
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut relators = Vec::new();
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            let ((i, j), (k, l)) = (pairs[a], pairs[b]);
            if j == l {
                relators.push(Relator::commute(RelatorKind::CommuteI, a, b));
            } else if i != k && i != l && j != k {
                relators.push(Relator::commute(RelatorKind::CommuteII, a, b));
            }
        }
    }
    for &(i, j) in &pairs {
        for k in (1..=n).filter(|&k| k != i && k != j) {
            relators.push(Relator {
                kind: RelatorKind::SilIII,
                left: vec![Letter::pos(index[&(i, j)]), Letter::pos(index[&(k, j)])],
                right: vec![Letter::pos(index[&(i, k)])],
                witness: None,
            });
        }
    }
    Ok(GroupPresentation {
        names: pairs.iter().map(|&(i, j)| mccool_name(i, j)).collect(),
        generators: pairs.iter().map(|&(i, j)| Generator::Symbol(mccool_name(i, j))).collect(),
        relators,
    })
}

/// An arrow `(initial, edge)`; `edge.0 < edge.1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub initial: usize,
    pub edge: (usize, usize),
}

#[derive(Debug, Clone)]
pub struct ArrowDiagram {
    pub generators: Vec<PartialConjugation>,
    /// Graph on the generators; vertex `i` is `generators[i]`.
    pub lambda: Graph,
    /// Sorted by `(initial, edge.0, edge.1)`.
    pub arrows: Vec<Arrow>,
    pub witnesses: Vec<SilWitness>,
    /// `dual[i]` is the index of the arrow dual to `arrows[i]`.
    pub dual: Vec<usize>,
}

impl ArrowDiagram {
    /// Dual pairs `(α_{2i−1}, α_{2i})` as arrow indices, ordered by the
    /// smaller member.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.arrows.len()).filter(|&i| i < self.dual[i]).map(|i| (i, self.dual[i])).collect()
    }

    pub fn pair_count(&self) -> usize {
        self.arrows.len() / 2
    }

    /// Indices of Λ-vertices that are neither initial vertices of arrows
    /// nor endpoints of arrow edges.
    pub fn uninvolved(&self) -> Vec<usize> {
        let mut involved = vec![false; self.lambda.len()];
        for a in &self.arrows {
            involved[a.initial] = true;
            involved[a.edge.0] = true;
            involved[a.edge.1] = true;
        }
        (0..self.lambda.len()).filter(|&i| !involved[i]).collect()
    }

    pub fn name(&self, i: usize) -> &str {
        self.lambda.label(Vertex(i))
    }
}

/// Candidates for the dual of arrow `i` found by exhaustive search over all
/// arrows, straight from the definition of property (D).
pub fn dual_candidates(lambda: &Graph, arrows: &[Arrow], i: usize) -> Vec<usize> {
    let a = arrows[i];
    let (e0, e1) = a.edge;
    (0..arrows.len())
        .filter(|&j| {
            let b = arrows[j];
            let (f0, f1) = b.edge;
            if j == i || (b.initial != e0 && b.initial != e1) || (a.initial != f0 && a.initial != f1) {
                return false;
            }
            let span: VertexSet = [e0, e1, f0, f1].into_iter().map(Vertex).collect();
            if span.len() != 4 {
                return false;
            }
            let sub = lambda.induced_subgraph(&span).expect("span lies in Λ");
            sub.edge_count() == 2
        })
        .collect()
}

pub fn arrow_diagram(g: &Graph) -> Result<ArrowDiagram> {
    let p = kp_presentation(g);
    let generators = p.partials();
    let names = p.names.clone();
    let edges: Vec<(usize, usize)> =
        p.relators.iter().filter(|r| r.kind.is_commute()).map(|r| (r.left[0].gen, r.right[0].gen)).collect();
    let lambda = Graph::from_parts(names, edges)?;

    let mut tagged: Vec<(Arrow, SilWitness)> = p
        .relators
        .iter()
        .filter(|r| r.kind == RelatorKind::SilIII)
        .map(|r| {
            let (x, y) = (r.left[0].gen, r.left[1].gen);
            let arrow = Arrow { initial: r.right[0].gen, edge: (x.min(y), x.max(y)) };
            (arrow, r.witness.clone().expect("SIL relators carry witnesses"))
        })
        .collect();
    tagged.sort();
    let (arrows, witnesses): (Vec<Arrow>, Vec<SilWitness>) = tagged.into_iter().unzip();

    let by_key: HashMap<(Vertex, Vertex, &VertexSet), usize> =
        witnesses.iter().enumerate().map(|(i, w)| ((w.v, w.w, &w.shared), i)).collect();
    let mut dual = Vec::with_capacity(arrows.len());
    for (i, w) in witnesses.iter().enumerate() {
        let j = *by_key.get(&(w.w, w.v, &w.shared)).ok_or_else(|| {
            Error::Internal(format!("arrow {i} has no dual with swapped SIL pair"))
        })?;
        dual.push(j);
    }

    for (i, a) in arrows.iter().enumerate() {
        if !lambda.adjacent(Vertex(a.edge.0), Vertex(a.edge.1)) {
            return Err(Error::Internal(format!("arrow {i} sits on a non-edge of Λ")));
        }
        if a.initial == a.edge.0 || a.initial == a.edge.1 {
            return Err(Error::Internal(format!("arrow {i} starts on its own edge")));
        }
        if dual[i] == i || dual[dual[i]] != i {
            return Err(Error::Internal(format!("dual pairing is not a fixed-point-free involution at {i}")));
        }
        let found = dual_candidates(&lambda, &arrows, i);
        if found != [dual[i]] {
            return Err(Error::Internal(format!(
                "property (D) fails at arrow {i}: candidates {found:?}, constructed dual {}",
                dual[i]
            )));
        }
    }
    Ok(ArrowDiagram { generators, lambda, arrows, witnesses, dual })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Plain,
    Cas,
}

fn render_side(p: &GroupPresentation, w: &[Letter], sep: &str, cas: bool) -> String {
    w.iter()
        .map(|l| {
            let name = if cas { format!("g{}", l.gen + 1) } else { p.names[l.gen].clone() };
            if l.inv {
                format!("{name}^-1")
            } else {
                name
            }
        })
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn export_presentation(p: &GroupPresentation, format: ExportFormat) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# presentation: {} generators, {} relators", p.generators.len(), p.relators.len());
    if p.generators.is_empty() && p.relators.is_empty() {
        return out;
    }
    match format {
        ExportFormat::Plain => {
            let _ = writeln!(out, "generators: {}", p.names.join(" "));
            for r in &p.relators {
                let _ = writeln!(
                    out,
                    "{}: [{}, {}]",
                    r.kind.tag(),
                    render_side(p, &r.left, " ", false),
                    render_side(p, &r.right, " ", false)
                );
            }
        }
        ExportFormat::Cas => {
            for (i, n) in p.names.iter().enumerate() {
                let _ = writeln!(out, "# g{} = {}", i + 1, n);
            }
            let quoted: Vec<String> = (1..=p.names.len()).map(|i| format!("\"g{i}\"")).collect();
            let _ = writeln!(out, "F := FreeGroup({});;", quoted.join(", "));
            for i in 1..=p.names.len() {
                let _ = writeln!(out, "g{i} := F.{i};;");
            }
            let rels: Vec<String> = p
                .relators
                .iter()
                .map(|r| {
                    format!("  Comm({}, {})", render_side(p, &r.left, "*", true), render_side(p, &r.right, "*", true))
                })
                .collect();
            let _ = writeln!(out, "rels := [\n{}\n];;", rels.join(",\n"));
            let _ = writeln!(out, "G := F / rels;;");
        }
    }
    out
}

/// Splits on top-level commas, ignoring commas nested inside `[]` or `{}`.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '[' | '{' => depth += 1,
            ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// Parses `c[v|{a,b}]` into a partial conjugation of `g`.
pub fn parse_partial(g: &Graph, token: &str) -> Option<PartialConjugation> {
    let body = token.strip_prefix("c[")?.strip_suffix(']')?;
    let (v, comp) = body.split_once('|')?;
    let comp = comp.strip_prefix('{')?.strip_suffix('}')?;
    let acting = g.vertex(v.trim()).ok()?;
    let mut component = VertexSet::new();
    for l in comp.split(',').map(str::trim).filter(|l| !l.is_empty()) {
        component.insert(g.vertex(l).ok()?);
    }
    PartialConjugation::new(g, acting, component).ok()
}

/// Inverse of [`export_presentation`] in plain format. With `graph`
/// given, `c[v|A]` generators are resolved to partial conjugations and
/// SIL witnesses are reconstructed.
pub fn parse_presentation(text: &str, graph: Option<&Graph>) -> Result<GroupPresentation> {
    let mut names: Vec<String> = Vec::new();
    let mut generators = Vec::new();
    let mut relators = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    for (ln, line) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (tag, rest) = line.split_once(':').ok_or_else(|| Error::parse(line_no, 1, "expected `tag: ...`"))?;
        let rest = rest.trim();
        if tag == "generators" {
            for tok in rest.split_whitespace() {
                index.insert(tok.to_string(), names.len());
                names.push(tok.to_string());
                generators.push(match graph.and_then(|g| parse_partial(g, tok)) {
                    Some(pc) => Generator::Partial(pc),
                    None => Generator::Symbol(tok.to_string()),
                });
            }
            continue;
        }
        let kind = RelatorKind::from_tag(tag)
            .ok_or_else(|| Error::parse(line_no, 1, format!("unknown relator kind `{tag}`")))?;
        let col = tag.len() + 3;
        let inner = rest
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::parse(line_no, col, "expected `[left, right]`"))?;
        let parts = split_top_level(inner);
        if parts.len() != 2 {
            return Err(Error::parse(line_no, col, "commutator needs exactly two arguments"));
        }
        let side = |s: &str| -> Result<Vec<Letter>> {
            s.split_whitespace()
                .map(|tok| {
                    let (name, inv) = match tok.strip_suffix("^-1") {
                        Some(n) => (n, true),
                        None => (tok, false),
                    };
                    let gen = *index.get(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
                    Ok(Letter { gen, inv })
                })
                .collect()
        };
        let left = side(parts[0])?;
        let right = side(parts[1])?;
        let witness = match (kind, left.as_slice(), right.as_slice()) {
            (RelatorKind::SilIII, [x, y], [z]) => match (&generators[x.gen], &generators[y.gen], &generators[z.gen]) {
                (Generator::Partial(a), Generator::Partial(b), Generator::Partial(c)) => Some(SilWitness {
                    v: a.acting,
                    w: c.acting,
                    shared: a.component.clone(),
                    dominant: b.component.clone(),
                }),
                _ => None,
            },
            _ => None,
        };
        relators.push(Relator { kind, left, right, witness });
    }
    Ok(GroupPresentation { generators, names, relators })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        assert_eq!(paut_generators(&Graph::edgeless(3)).len(), 6);
        assert!(paut_generators(&Graph::complete(4)).is_empty());
        let p = Graph::path(3);
        let names: Vec<String> = paut_generators(&p).iter().map(|pc| pc.name(&p)).collect();
        assert_eq!(names, ["c[1|{3}]", "c[3|{1}]"]);
    }

    #[test]
    fn free_group_of_rank_three() {
        let p = kp_presentation(&Graph::edgeless(3));
        assert_eq!(p.generators.len(), 6);
        assert_eq!(p.commute_count(), 3);
        assert_eq!(p.count(RelatorKind::SilIII), 6);
        let m = mccool_presentation(3).unwrap();
        let rename = |n: &str| {
            let (i, j) = n[1..].split_once('_').unwrap();
            format!("c[{j}|{{{i}}}]")
        };
        assert!(m.coincides_with(&p, rename));
    }

    #[test]
    fn mccool_small() {
        assert!(mccool_presentation(1).unwrap().generators.is_empty());
        let m2 = mccool_presentation(2).unwrap();
        assert_eq!(m2.generators.len(), 2);
        assert!(m2.relators.is_empty());
        assert!(mccool_presentation(0).is_err());
    }

    #[test]
    fn complete_graph_is_empty() {
        let p = kp_presentation(&Graph::complete(4));
        assert!(p.generators.is_empty() && p.relators.is_empty());
        assert_eq!(export_presentation(&p, ExportFormat::Plain), "# presentation: 0 generators, 0 relators\n");
    }

    #[test]
    fn arrow_diagram_of_free_group() {
        let d = arrow_diagram(&Graph::edgeless(3)).unwrap();
        assert_eq!(d.lambda.len(), 6);
        assert_eq!(d.lambda.edge_count(), 3);
        assert_eq!(d.arrows.len(), 6);
        assert_eq!(d.pairs().len(), 3);
        assert!(d.uninvolved().is_empty());
    }

    #[test]
    fn no_sil_graph_diagram() {
        let g = Graph::path(4);
        let d = arrow_diagram(&g).unwrap();
        assert!(d.arrows.is_empty());
        assert_eq!(d.uninvolved().len(), d.lambda.len());
    }

    #[test]
    fn plain_round_trip() {
        let g = Graph::edgeless(3);
        let p = kp_presentation(&g);
        let text = export_presentation(&p, ExportFormat::Plain);
        assert_eq!(text.lines().filter(|l| l.contains(": [")).count(), p.relators.len());
        assert_eq!(parse_presentation(&text, Some(&g)).unwrap(), p);
    }

    #[test]
    fn cas_export() {
        let p = kp_presentation(&Graph::edgeless(3));
        let text = export_presentation(&p, ExportFormat::Cas);
        assert!(text.contains("F := FreeGroup(\"g1\", \"g2\", \"g3\", \"g4\", \"g5\", \"g6\");;"));
        assert_eq!(text.matches("Comm(").count(), 9);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_presentation("commute-i: [x, y]", None), Err(Error::UnknownGenerator(_))));
        assert!(matches!(parse_presentation("bogus: [x, y]", None), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_presentation("generators: x\nrelator: x", None), Err(Error::Parse { line: 2, .. })));
    }
}
