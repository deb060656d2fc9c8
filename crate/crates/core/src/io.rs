//! Text formats: JSON and DOT graphs, DOT renderings of derived graphs,
//! and the expression grammar for group elements.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::auto::{Factor, Term};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::presentation::{parse_partial, ArrowDiagram};
use crate::word::{parse_letters, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    Dot,
}

impl GraphFormat {
    /// Guesses from a file name; JSON unless it ends in `.dot` or `.gv`.
    pub fn from_path(path: &str) -> GraphFormat {
        if path.ends_with(".dot") || path.ends_with(".gv") {
            GraphFormat::Dot
        } else {
            GraphFormat::Json
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum Token {
    Text(String),
    Number(i64),
}

impl Token {
    fn into_string(self) -> String {
        match self {
            Token::Text(s) => s,
            Token::Number(n) => n.to_string(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    vertices: Vec<Token>,
    #[serde(default)]
    edges: Vec<(Token, Token)>,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Json => parse_graph_json(text),
        GraphFormat::Dot => parse_graph_dot(text),
    }
}

/// `{"vertices": [...], "edges": [[a, b], ...]}`; labels may be strings or
/// integers.
pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let raw: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    let vertices: Vec<String> = raw.vertices.into_iter().map(Token::into_string).collect();
    let edges: Vec<(String, String)> =
        raw.edges.into_iter().map(|(a, b)| (a.into_string(), b.into_string())).collect();
    Graph::new(&vertices, &edges)
}

pub fn graph_to_json_value(g: &Graph) -> serde_json::Value {
    let edges: Vec<[&str; 2]> = g.edges().iter().map(|&(a, b)| [g.label(a), g.label(b)]).collect();
    serde_json::json!({ "vertices": g.labels(), "edges": edges })
}

pub fn graph_to_json(g: &Graph) -> String {
    graph_to_json_value(g).to_string()
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT; vertices listed first so isolated ones survive.
pub fn graph_to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for l in g.labels() {
        let _ = writeln!(out, "  {};", quote(l));
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", quote(g.label(a)), quote(g.label(b)));
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq)]
enum DotTok {
    Id(String),
    Sym(char),
    EdgeOp,
}

fn dot_tokens(text: &str) -> Result<Vec<(DotTok, usize, usize)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let advance = |c: char, line: &mut usize, col: &mut usize| {
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c.is_whitespace() {
            advance(c, &mut line, &mut col);
            i += 1;
        } else if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
                col += 1;
            }
        } else if c == '/' && chars.get(i + 1) == Some(&'*') {
            i += 2;
            col += 2;
            while i < chars.len() && !(chars[i] == '*' && chars.get(i + 1) == Some(&'/')) {
                advance(chars[i], &mut line, &mut col);
                i += 1;
            }
            if i >= chars.len() {
                return Err(Error::parse(l0, c0, "unterminated comment"));
            }
            i += 2;
            col += 2;
        } else if c == '"' {
            let mut s = String::new();
            i += 1;
            col += 1;
            loop {
                match chars.get(i) {
                    None => return Err(Error::parse(l0, c0, "unterminated string")),
                    Some('"') => break,
                    Some('\\') if matches!(chars.get(i + 1), Some('"') | Some('\\')) => {
                        s.push(chars[i + 1]);
                        i += 2;
                        col += 2;
                    }
                    Some(&ch) => {
                        s.push(ch);
                        advance(ch, &mut line, &mut col);
                        i += 1;
                    }
                }
            }
            i += 1;
            col += 1;
            out.push((DotTok::Id(s), l0, c0));
        } else if c == '-' && chars.get(i + 1) == Some(&'-') {
            out.push((DotTok::EdgeOp, l0, c0));
            i += 2;
            col += 2;
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            return Err(Error::parse(l0, c0, "directed edges are not allowed"));
        } else if "{}[];,=:".contains(c) {
            out.push((DotTok::Sym(c), l0, c0));
            i += 1;
            col += 1;
        } else if c.is_alphanumeric() || c == '_' || c == '.' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '.') {
                s.push(chars[i]);
                i += 1;
                col += 1;
            }
            out.push((DotTok::Id(s), l0, c0));
        } else {
            return Err(Error::parse(l0, c0, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

/// Reads an undirected DOT graph: node statements, edge chains `a -- b --
/// c`, attribute lists (ignored) and `key = value` statements (ignored).
pub fn parse_graph_dot(text: &str) -> Result<Graph> {
    let toks = dot_tokens(text)?;
    let mut pos = 0;
    let at = |pos: usize| toks.get(pos).map_or((0, 0), |t| (t.1, t.2));
    let expect_sym = |pos: &mut usize, c: char| -> Result<()> {
        match toks.get(*pos) {
            Some((DotTok::Sym(s), _, _)) if *s == c => {
                *pos += 1;
                Ok(())
            }
            _ => {
                let (l, k) = at(*pos);
                Err(Error::parse(l, k, format!("expected `{c}`")))
            }
        }
    };
    if matches!(toks.get(pos), Some((DotTok::Id(s), _, _)) if s == "strict") {
        pos += 1;
    }
    match toks.get(pos) {
        Some((DotTok::Id(s), _, _)) if s == "graph" => pos += 1,
        Some((DotTok::Id(s), l, c)) if s == "digraph" => return Err(Error::parse(*l, *c, "digraphs are not allowed")),
        _ => {
            let (l, c) = at(pos);
            return Err(Error::parse(l, c, "expected `graph`"));
        }
    }
    if matches!(toks.get(pos), Some((DotTok::Id(_), _, _))) {
        pos += 1;
    }
    expect_sym(&mut pos, '{')?;
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let add_vertex = |v: &str, vertices: &mut Vec<String>| {
        if !vertices.iter().any(|x| x == v) {
            vertices.push(v.to_string());
        }
    };
    loop {
        match toks.get(pos) {
            None => {
                let (l, c) = toks.last().map_or((1, 1), |t| (t.1, t.2));
                return Err(Error::parse(l, c, "missing `}`"));
            }
            Some((DotTok::Sym('}'), _, _)) => {
                pos += 1;
                break;
            }
            Some((DotTok::Sym(';'), _, _)) | Some((DotTok::Sym(','), _, _)) => pos += 1,
            Some((DotTok::Id(id), _, _)) => {
                let id = id.clone();
                pos += 1;
                if matches!(id.as_str(), "node" | "edge" | "graph") && matches!(toks.get(pos), Some((DotTok::Sym('['), _, _))) {
                    pos = skip_attrs(&toks, pos)?;
                    continue;
                }
                if matches!(toks.get(pos), Some((DotTok::Sym('='), _, _))) {
                    pos += 2;
                    continue;
                }
                let mut chain = vec![id];
                while matches!(toks.get(pos), Some((DotTok::EdgeOp, _, _))) {
                    pos += 1;
                    match toks.get(pos) {
                        Some((DotTok::Id(next), _, _)) => {
                            chain.push(next.clone());
                            pos += 1;
                        }
                        _ => {
                            let (l, c) = at(pos);
                            return Err(Error::parse(l, c, "expected vertex after `--`"));
                        }
                    }
                }
                if matches!(toks.get(pos), Some((DotTok::Sym('['), _, _))) {
                    pos = skip_attrs(&toks, pos)?;
                }
                for v in &chain {
                    add_vertex(v, &mut vertices);
                }
                for w in chain.windows(2) {
                    edges.push((w[0].clone(), w[1].clone()));
                }
            }
            Some((_, l, c)) => return Err(Error::parse(*l, *c, "unexpected token")),
        }
    }
    if let Some((_, l, c)) = toks.get(pos) {
        return Err(Error::parse(*l, *c, "trailing input after graph"));
    }
    Graph::new(&vertices, &edges)
}

fn skip_attrs(toks: &[(DotTok, usize, usize)], mut pos: usize) -> Result<usize> {
    let (l, c) = (toks[pos].1, toks[pos].2);
    while pos < toks.len() {
        if toks[pos].0 == DotTok::Sym(']') {
            return Ok(pos + 1);
        }
        pos += 1;
    }
    Err(Error::parse(l, c, "unterminated attribute list"))
}

const PALETTE: [&str; 8] = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4"];

/// Λ with one point node per arrow edge; each arrow is a directed edge from
/// its initial vertex to that midpoint, and dual arrows share a color.
pub fn arrow_diagram_dot(d: &ArrowDiagram) -> String {
    let mut out = String::from("digraph arrows {\n  node [shape=box];\n");
    for i in 0..d.lambda.len() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(d.name(i)));
    }
    let mut mids: Vec<(usize, usize)> = d.arrows.iter().map(|a| a.edge).collect();
    mids.sort();
    mids.dedup();
    for (a, b) in d.lambda.edges() {
        let (a, b) = (a.0, b.0);
        if mids.binary_search(&(a, b)).is_ok() {
            let _ = writeln!(out, "  m{a}_{b} [shape=point];");
            let _ = writeln!(out, "  n{a} -> m{a}_{b} [dir=none];");
            let _ = writeln!(out, "  m{a}_{b} -> n{b} [dir=none];");
        } else {
            let _ = writeln!(out, "  n{a} -> n{b} [dir=none];");
        }
    }
    for (k, (p, q)) in d.pairs().into_iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        for idx in [p, q] {
            let a = d.arrows[idx];
            let _ = writeln!(out, "  n{} -> m{}_{} [color={color}];", a.initial, a.edge.0, a.edge.1);
        }
    }
    out.push_str("}\n");
    out
}

/// Parsed group expression over named atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Atom(String),
    Product(Vec<Expr>),
    Power(Box<Expr>, i64),
    Commutator(Box<Expr>, Box<Expr>),
}

struct ExprParser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

const ATOM_STOP: &str = "*()[],^";

impl ExprParser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(1, self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn product(&mut self) -> Result<Expr> {
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                None | Some(')') | Some(']') | Some(',') => break,
                Some('*') => {
                    if factors.is_empty() {
                        return Err(self.err("`*` without left operand"));
                    }
                    self.pos += 1;
                    if matches!(self.peek(), None | Some(')') | Some(']') | Some(',')) {
                        return Err(self.err("`*` without right operand"));
                    }
                }
                Some(_) => factors.push(self.factor()?),
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr> {
        let mut e = self.primary()?;
        while self.chars.get(self.pos) == Some(&'^') {
            self.pos += 1;
            let start = self.pos;
            if self.chars.get(self.pos) == Some(&'-') {
                self.pos += 1;
            }
            while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
                self.pos += 1;
            }
            let s: String = self.chars[start..self.pos].iter().collect();
            let k: i64 = s.parse().map_err(|_| Error::parse(1, start + 1, format!("bad exponent `{s}`")))?;
            e = Expr::Power(Box::new(e), k);
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.product()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some('[') => {
                self.pos += 1;
                let x = self.product()?;
                if self.peek() != Some(',') {
                    return Err(self.err("expected `,` in commutator"));
                }
                self.pos += 1;
                let y = self.product()?;
                if self.peek() != Some(']') {
                    return Err(self.err("expected `]`"));
                }
                self.pos += 1;
                Ok(Expr::Commutator(Box::new(x), Box::new(y)))
            }
            Some(c) if !ATOM_STOP.contains(c) => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && !self.chars[self.pos].is_whitespace()
                    && !ATOM_STOP.contains(self.chars[self.pos])
                {
                    self.pos += 1;
                }
                // `name[...]` is a single bracketed atom.
                if self.chars.get(self.pos) == Some(&'[') {
                    let mut depth = 0;
                    loop {
                        match self.chars.get(self.pos) {
                            None => return Err(Error::parse(1, start + 1, "unterminated `[`")),
                            Some('[') => depth += 1,
                            Some(']') => {
                                depth -= 1;
                                if depth == 0 {
                                    self.pos += 1;
                                    break;
                                }
                            }
                            _ => {}
                        }
                        self.pos += 1;
                    }
                }
                Ok(Expr::Atom(self.chars[start..self.pos].iter().collect()))
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err(format!("unexpected end of `{}`", self.text))),
        }
    }
}

/// `*` or whitespace for products, `^k` powers, `[x, y]` commutators,
/// parentheses; `1` or an empty string is the identity.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = ExprParser { chars: text.chars().collect(), pos: 0, text };
    let e = p.product()?;
    if let Some(c) = p.peek() {
        return Err(p.err(format!("unexpected `{c}`")));
    }
    Ok(e)
}

impl Expr {
    /// Flattens to a sequence of items, with `atom` resolving names and
    /// `invert` inverting a single item. `[x,y] = x⁻¹y⁻¹xy`.
    pub fn expand<T: Clone>(
        &self,
        atom: &mut impl FnMut(&str) -> Result<Vec<T>>,
        invert: &impl Fn(&T) -> T,
    ) -> Result<Vec<T>> {
        let inv = |w: &[T]| -> Vec<T> { w.iter().rev().map(invert).collect() };
        Ok(match self {
            Expr::Atom(name) if name == "1" || name == "id" => Vec::new(),
            Expr::Atom(name) => atom(name)?,
            Expr::Product(fs) => {
                let mut out = Vec::new();
                for f in fs {
                    out.extend(f.expand(atom, invert)?);
                }
                out
            }
            Expr::Power(e, k) => {
                let base = e.expand(atom, invert)?;
                let base = if *k < 0 { inv(&base) } else { base };
                (0..k.unsigned_abs()).flat_map(|_| base.iter().cloned()).collect()
            }
            Expr::Commutator(x, y) => {
                let (x, y) = (x.expand(atom, invert)?, y.expand(atom, invert)?);
                [inv(&x), inv(&y), x, y].concat()
            }
        })
    }
}

/// Parses a word whose atoms are named by `lookup`.
pub fn parse_word_expr(text: &str, mut lookup: impl FnMut(&str) -> Result<usize>) -> Result<Vec<Letter>> {
    parse_expr(text)?.expand(&mut |name| Ok(vec![Letter::pos(lookup(name)?)]), &|l: &Letter| l.inverse())
}

/// Parses an automorphism expression: atoms `c[v|{a,b}]` and `inn[word]`.
pub fn parse_automorphism_expr(g: &Arc<Graph>, text: &str) -> Result<Vec<Term>> {
    let mut atom = |name: &str| -> Result<Vec<Term>> {
        if let Some(body) = name.strip_prefix("inn[").and_then(|s| s.strip_suffix(']')) {
            let letters = parse_letters(body, |tok| g.vertex(tok).map(|v| v.0))?;
            return Ok(vec![Term { factor: Factor::Inner(letters), inverse: false }]);
        }
        if name.starts_with("c[") {
            let pc = parse_partial(g, name)
                .ok_or_else(|| Error::InvalidArgument(format!("`{name}` is not a partial conjugation of the graph")))?;
            return Ok(vec![Term { factor: Factor::Partial(pc), inverse: false }]);
        }
        Err(Error::UnknownGenerator(name.to_string()))
    };
    let invert = |t: &Term| Term { factor: t.factor.clone(), inverse: !t.inverse };
    parse_expr(text)?.expand(&mut atom, &invert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::auto::Automorphism;
    use crate::presentation::arrow_diagram;

    #[test]
    fn json_graphs() {
        let g = parse_graph_json(r#"{"vertices":["1","2"],"edges":[["1","2"]]}"#).unwrap();
        assert_eq!(g.edge_count(), 1);
        let n = parse_graph_json(r#"{"vertices":[1,2,3],"edges":[[1,3]]}"#).unwrap();
        assert!(n.adjacent(n.vertex("1").unwrap(), n.vertex("3").unwrap()));
        assert!(matches!(
            parse_graph_json(r#"{"vertices":["1"],"edges":[["1","1"]]}"#),
            Err(Error::Loop(_))
        ));
        assert!(matches!(
            parse_graph_json(r#"{"vertices":["1","2"],"edges":[["1","2"],["2","1"]]}"#),
            Err(Error::DuplicateEdge(..))
        ));
        assert!(matches!(parse_graph_json("{\"vertices\": [\n  1,"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_graph_json(&graph_to_json(&Graph::cycle(5))).unwrap(), Graph::cycle(5));
    }

    #[test]
    fn dot_graphs() {
        let g = Graph::new(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(parse_graph_dot(&graph_to_dot(&g, "G")).unwrap(), g);
        let chain = parse_graph_dot("graph { node [shape=box]; x -- y -- z [color=red]; w;\n // c\n}").unwrap();
        assert_eq!(chain.len(), 4);
        assert_eq!(chain.edge_count(), 2);
        assert!(matches!(parse_graph_dot("digraph { a -> b }"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph_dot("graph {\n a -- a }"), Err(Error::Loop(_))));
        assert!(matches!(parse_graph_dot("graph {\n a -- }"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn arrow_dot() {
        let d = arrow_diagram(&Graph::edgeless(3)).unwrap();
        let dot = arrow_diagram_dot(&d);
        assert_eq!(dot.matches("[shape=point]").count(), 3);
        assert_eq!(dot.matches("[color=").count(), 6);
    }

    #[test]
    fn expressions() {
        let names = ["a", "b"];
        let look = |s: &str| names.iter().position(|n| *n == s).ok_or(Error::UnknownGenerator(s.into()));
        let w = parse_word_expr("[a, b]", look).unwrap();
        assert_eq!(w, [Letter::neg(0), Letter::neg(1), Letter::pos(0), Letter::pos(1)]);
        assert_eq!(parse_word_expr("a b^-1 a", look).unwrap().len(), 3);
        assert_eq!(parse_word_expr("(a*b)^-2", look).unwrap()[0], Letter::neg(1));
        assert!(parse_word_expr("1", look).unwrap().is_empty());
        assert!(parse_word_expr("a *", look).is_err());
        assert!(parse_word_expr("[a b]", look).is_err());
        assert!(matches!(parse_word_expr("c", look), Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn automorphism_expressions() {
        let g = Arc::new(Graph::edgeless(3));
        let terms = parse_automorphism_expr(&g, "c[1|{3}] * c[2|{3}]^-1").unwrap();
        assert_eq!(terms.len(), 2);
        assert!(terms[1].inverse);
        let inner = Automorphism::from_expression(&g, &parse_automorphism_expr(&g, "inn[1 2^-1]").unwrap()).unwrap();
        assert_eq!(inner.image(g.vertex("3").unwrap()).to_string(), "2 1^-1 3 1 2^-1");
        let nested = parse_automorphism_expr(&g, "[[c[2|{1}], c[3|{1}]], c[1|{2}]]").unwrap();
        assert_eq!(nested.len(), 10);
        assert!(parse_automorphism_expr(&g, "c[1|{2,3}]").is_err());
    }
}
