//! Words in a right-angled Artin group and the word problem.
//!
//! A word is first reduced: a letter is cancelled against an earlier inverse
//! whenever every letter between them commutes with it. The reduced word is
//! then rewritten in Cartier–Foata form (letters stacked into levels of
//! pairwise commuting letters, each level sorted). Two words represent the
//! same element iff their normal forms coincide letter for letter.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_WORD_LIMIT: usize = 1_000_000;

/// A generator index together with a sign. Also used for words over
/// abstract alphabets (presentation generators, free bases).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Letter {
        Letter { gen, inv: false }
    }

    pub fn neg(gen: usize) -> Letter {
        Letter { gen, inv: true }
    }

    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn exponent(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

pub fn invert_letters(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.inverse()).collect()
}

/// `[x, y] = x⁻¹ y⁻¹ x y` as a letter sequence.
pub fn commutator_letters(x: &[Letter], y: &[Letter]) -> Vec<Letter> {
    let mut out = invert_letters(x);
    out.extend(invert_letters(y));
    out.extend_from_slice(x);
    out.extend_from_slice(y);
    out
}

/// Appends `x` to an already reduced word, cancelling if possible.
fn push_reduced(g: &Graph, out: &mut Vec<Letter>, x: Letter) {
    let xv = Vertex(x.gen);
    for i in (0..out.len()).rev() {
        let y = out[i];
        if y.gen == x.gen {
            if y.inv != x.inv {
                out.remove(i);
                return;
            }
            break;
        }
        if !g.adjacent(xv, Vertex(y.gen)) {
            break;
        }
    }
    out.push(x);
}

fn foata(g: &Graph, reduced: &[Letter]) -> Vec<Letter> {
    let n = g.len();
    let mut last_level = vec![0usize; n];
    let mut levels: Vec<Vec<Letter>> = Vec::new();
    for &x in reduced {
        let xv = Vertex(x.gen);
        let mut level = last_level[x.gen];
        for (y, &l) in last_level.iter().enumerate() {
            if y != x.gen && !g.adjacent(xv, Vertex(y)) && l > level {
                level = l;
            }
        }
        level += 1;
        last_level[x.gen] = level;
        if levels.len() < level {
            levels.resize_with(level, Vec::new);
        }
        levels[level - 1].push(x);
    }
    levels
        .into_iter()
        .flat_map(|mut block| {
            block.sort_unstable();
            block
        })
        .collect()
}

/// Normal form of a letter sequence over `g`. The caller guarantees that
/// every generator index is a vertex of `g`.
pub fn normal_form(g: &Graph, letters: &[Letter]) -> Vec<Letter> {
    let mut reduced = Vec::with_capacity(letters.len());
    for &x in letters {
        push_reduced(g, &mut reduced, x);
    }
    foata(g, &reduced)
}

pub(crate) fn check_letters(g: &Graph, letters: &[Letter]) -> Result<()> {
    match letters.iter().find(|l| l.gen >= g.len()) {
        Some(l) => Err(Error::VertexOutOfRange(l.gen)),
        None => Ok(()),
    }
}

pub(crate) fn check_limit(len: usize, limit: usize) -> Result<()> {
    if len > limit {
        Err(Error::WordTooLong { len, limit })
    } else {
        Ok(())
    }
}

/// Letters of a normalized word that can be moved to the front.
fn initial_positions(g: &Graph, w: &[Letter]) -> Vec<usize> {
    (0..w.len())
        .filter(|&i| w[..i].iter().all(|y| y.gen != w[i].gen && g.adjacent(Vertex(y.gen), Vertex(w[i].gen))))
        .collect()
}

fn terminal_positions(g: &Graph, w: &[Letter]) -> Vec<usize> {
    (0..w.len())
        .filter(|&i| {
            w[i + 1..].iter().all(|y| y.gen != w[i].gen && g.adjacent(Vertex(y.gen), Vertex(w[i].gen)))
        })
        .collect()
}

/// Cyclic reduction: repeatedly strips a letter that can be moved to the
/// front together with its inverse when that can be moved to the back.
pub fn cyclically_reduce(g: &Graph, letters: &[Letter]) -> Vec<Letter> {
    let mut w = normal_form(g, letters);
    loop {
        let firsts = initial_positions(g, &w);
        let lasts = terminal_positions(g, &w);
        let hit = firsts.iter().find_map(|&i| {
            lasts.iter().find(|&&j| j != i && w[j] == w[i].inverse()).map(|&j| (i, j))
        });
        match hit {
            Some((i, j)) => {
                let (hi, lo) = if i > j { (i, j) } else { (j, i) };
                w.remove(hi);
                w.remove(lo);
                w = normal_form(g, &w);
            }
            None => return w,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RaagWord {
    ambient: Arc<Graph>,
    letters: Vec<Letter>,
}

impl PartialEq for RaagWord {
    fn eq(&self, other: &Self) -> bool {
        same_ambient(&self.ambient, &other.ambient) && self.letters == other.letters
    }
}

impl Eq for RaagWord {}

pub(crate) fn same_ambient(a: &Arc<Graph>, b: &Arc<Graph>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl RaagWord {
    pub fn identity(ambient: Arc<Graph>) -> RaagWord {
        RaagWord { ambient, letters: Vec::new() }
    }

    pub fn generator(ambient: Arc<Graph>, v: Vertex) -> Result<RaagWord> {
        ambient.check(v)?;
        Ok(RaagWord { ambient, letters: vec![Letter::pos(v.0)] })
    }

    /// Wraps raw letters without normalizing.
    pub fn from_letters(ambient: Arc<Graph>, letters: Vec<Letter>) -> Result<RaagWord> {
        check_letters(&ambient, &letters)?;
        Ok(RaagWord { ambient, letters })
    }

    /// Parses the text form `a b^-1 a` (also `a^3`, `a^-2`).
    pub fn parse(ambient: Arc<Graph>, text: &str) -> Result<RaagWord> {
        let letters = parse_letters(text, |tok| ambient.vertex(tok).map(|v| v.0))?;
        Ok(RaagWord { ambient, letters })
    }

    pub fn ambient(&self) -> &Arc<Graph> {
        &self.ambient
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn normalize(&self) -> Result<RaagWord> {
        self.normalize_bounded(DEFAULT_WORD_LIMIT)
    }

    pub fn normalize_bounded(&self, limit: usize) -> Result<RaagWord> {
        check_limit(self.letters.len(), limit)?;
        check_letters(&self.ambient, &self.letters)?;
        Ok(RaagWord { ambient: self.ambient.clone(), letters: normal_form(&self.ambient, &self.letters) })
    }

    fn same(&self, other: &RaagWord) -> Result<()> {
        if same_ambient(&self.ambient, &other.ambient) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn multiply(&self, other: &RaagWord) -> Result<RaagWord> {
        self.same(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        RaagWord { ambient: self.ambient.clone(), letters }.normalize()
    }

    pub fn invert(&self) -> Result<RaagWord> {
        RaagWord { ambient: self.ambient.clone(), letters: invert_letters(&self.letters) }.normalize()
    }

    /// `by⁻¹ · self · by`.
    pub fn conjugate(&self, by: &RaagWord) -> Result<RaagWord> {
        self.same(by)?;
        let mut letters = invert_letters(&by.letters);
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&by.letters);
        RaagWord { ambient: self.ambient.clone(), letters }.normalize()
    }

    pub fn words_equal(&self, other: &RaagWord) -> Result<bool> {
        self.same(other)?;
        Ok(self.normalize()?.letters == other.normalize()?.letters)
    }

    pub fn is_trivial(&self) -> Result<bool> {
        Ok(self.normalize()?.letters.is_empty())
    }

    /// Image in the abelianization: exponent sum per generator.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.ambient.len()];
        for l in &self.letters {
            sums[l.gen] += l.exponent();
        }
        sums
    }

    /// Whether this element is a conjugate of the generator `v`.
    pub fn is_conjugate_of_generator(&self, v: Vertex) -> bool {
        cyclically_reduce(&self.ambient, &self.letters) == [Letter::pos(v.0)]
    }
}

impl fmt::Display for RaagWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters, |i| self.ambient.label(Vertex(i)).to_string()))
    }
}

/// Renders letters as `a b^-1 a`; the empty word renders as `1`.
pub fn format_letters(letters: &[Letter], name: impl Fn(usize) -> String) -> String {
    if letters.is_empty() {
        return "1".to_string();
    }
    letters
        .iter()
        .map(|l| if l.inv { format!("{}^-1", name(l.gen)) } else { name(l.gen) })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses whitespace-separated `tok`, `tok^-1` or `tok^k` tokens.
pub fn parse_letters(text: &str, mut lookup: impl FnMut(&str) -> Result<usize>) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    let mut col = 1;
    for raw in text.split(char::is_whitespace) {
        if raw.is_empty() {
            col += 1;
            continue;
        }
        let (name, power) = match raw.split_once('^') {
            Some((name, p)) => {
                let k: i64 = p.parse().map_err(|_| Error::parse(1, col, format!("bad exponent `{p}`")))?;
                (name, k)
            }
            None => (raw, 1),
        };
        let gen = lookup(name)?;
        let l = if power < 0 { Letter::neg(gen) } else { Letter::pos(gen) };
        for _ in 0..power.unsigned_abs() {
            out.push(l);
        }
        col += raw.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(vs: &[&str], es: &[(&str, &str)]) -> Arc<Graph> {
        Arc::new(Graph::new(vs, es).unwrap())
    }

    fn w(g: &Arc<Graph>, s: &str) -> RaagWord {
        RaagWord::parse(g.clone(), s).unwrap()
    }

    #[test]
    fn free_reduction() {
        let g = graph(&["x", "y"], &[]);
        assert_eq!(w(&g, "x y y^-1").normalize().unwrap(), w(&g, "x"));
        let c = w(&g, "x y x^-1 y^-1");
        assert_eq!(c.normalize().unwrap(), c);
        assert!(!c.is_trivial().unwrap());
    }

    #[test]
    fn commuting_pair() {
        let g = graph(&["x", "y"], &[("x", "y")]);
        assert!(w(&g, "x y x^-1 y^-1").is_trivial().unwrap());
        assert!(w(&g, "x y").words_equal(&w(&g, "y x")).unwrap());
        let f = graph(&["x", "y"], &[]);
        assert!(!w(&f, "x y").words_equal(&w(&f, "y x")).unwrap());
    }

    #[test]
    fn cancellation_through_commuting_letters() {
        // a commutes with b, so a b a^-1 = b
        let g = graph(&["a", "b", "c"], &[("a", "b")]);
        assert_eq!(w(&g, "a b a^-1").normalize().unwrap(), w(&g, "b"));
        assert_eq!(w(&g, "a c a^-1").normalize().unwrap().len(), 3);
    }

    #[test]
    fn products() {
        let g = graph(&["x", "y"], &[]);
        assert!(w(&g, "x").multiply(&w(&g, "x^-1")).unwrap().is_empty());
        assert_eq!(w(&g, "x y").invert().unwrap(), w(&g, "y^-1 x^-1"));
        let h = graph(&["c", "x", "y"], &[("c", "x"), ("c", "y")]);
        let word = w(&h, "x y x");
        assert_eq!(word.conjugate(&w(&h, "c")).unwrap(), word.normalize().unwrap());
        assert!(RaagWord::identity(h.clone()).is_trivial().unwrap());
        assert_eq!(w(&g, "x").multiply(&w(&h, "x")), Err(Error::AmbientMismatch));
    }

    #[test]
    fn foreign_generator_rejected() {
        let g = graph(&["x"], &[]);
        assert!(RaagWord::parse(g.clone(), "z").is_err());
        assert!(RaagWord::from_letters(g, vec![Letter::pos(3)]).is_err());
    }

    #[test]
    fn word_limit() {
        let g = graph(&["x"], &[]);
        let long = w(&g, "x^20");
        assert_eq!(long.normalize_bounded(10), Err(Error::WordTooLong { len: 20, limit: 10 }));
    }

    #[test]
    fn conjugates_of_generators() {
        let g = graph(&["a", "b", "c"], &[("a", "b")]);
        let a = g.vertex("a").unwrap();
        assert!(w(&g, "c^-1 a c").is_conjugate_of_generator(a));
        assert!(w(&g, "c^-1 b^-1 a b c").is_conjugate_of_generator(a));
        assert!(!w(&g, "c^-1 a c a").is_conjugate_of_generator(a));
        assert!(!w(&g, "b").is_conjugate_of_generator(a));
    }

    #[test]
    fn text_form() {
        let g = graph(&["a", "b"], &[]);
        assert_eq!(w(&g, "a b^-1 a").to_string(), "a b^-1 a");
        assert_eq!(w(&g, "a^2 b^-2").len(), 4);
        assert_eq!(RaagWord::identity(g).to_string(), "1");
    }
}
