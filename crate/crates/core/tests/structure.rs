//! Corpus-wide structural checks against brute-force oracles written
//! directly on adjacency bitmasks.

use std::sync::Arc;

use rayon::prelude::*;

use raag_paut::corpus::{generate_corpus, labeled_graphs, CorpusSpec};
use raag_paut::examples::{slink_left, slink_right};
use raag_paut::graph::{Graph, Vertex, VertexSet};
use raag_paut::io::{graph_to_dot, graph_to_json, parse_graph_dot, parse_graph_json};
use raag_paut::presentation::{
    arrow_diagram, export_presentation, kp_presentation, mccool_presentation, parse_presentation,
    sil_reading_discrepancies, ExportFormat, RelatorKind,
};
use raag_paut::verify::{kp_soundness, run_verify, CheckId, Status, DEFAULT_TIMEOUT};
use raag_paut::{gadget, hat, sil, Error};

fn adjacency(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.len()];
    for (a, b) in g.edges() {
        adj[a.0] |= 1 << b.0;
        adj[b.0] |= 1 << a.0;
    }
    adj
}

/// Components of the vertices in `alive`, as bitmasks.
fn components(adj: &[u32], alive: u32) -> Vec<u32> {
    let mut left = alive;
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        loop {
            let grown = comp | bits(comp).fold(0, |acc, i| acc | adj[i]) & alive;
            if grown == comp {
                break;
            }
            comp = grown;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

fn bits(x: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| x >> i & 1 == 1)
}

fn oracle_sil(adj: &[u32]) -> bool {
    let n = adj.len();
    let all = (1u32 << n) - 1;
    (0..n).any(|v| {
        (0..n).any(|w| {
            v != w
                && adj[v] >> w & 1 == 0
                && components(adj, all & !(adj[v] & adj[w]))
                    .iter()
                    .any(|c| c >> v & 1 == 0 && c >> w & 1 == 0)
        })
    })
}

fn oracle_generator_count(adj: &[u32]) -> usize {
    let all = (1u32 << adj.len()) - 1;
    (0..adj.len()).map(|v| components(adj, all & !(adj[v] | 1 << v)).len()).sum()
}

fn exhaustive(max: usize) -> Vec<Arc<Graph>> {
    (1..=max).flat_map(labeled_graphs).map(Arc::new).collect()
}

#[test]
fn sil_detection_matches_oracle() {
    for g in exhaustive(5) {
        let adj = adjacency(&g);
        assert_eq!(sil::has_sil(&g), oracle_sil(&adj), "{}", graph_to_json(&g));
        assert_eq!(kp_presentation(&g).generators.len(), oracle_generator_count(&adj));
    }
}

#[test]
fn relators_hold_in_the_engine() {
    let failures: Vec<String> = exhaustive(5)
        .par_iter()
        .filter_map(|g| {
            let f = kp_soundness(g).unwrap();
            (!f.is_empty()).then(|| format!("{}: {}", graph_to_json(g), f.join("; ")))
        })
        .collect();
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn random_corpus_relators_and_readings() {
    let gs = generate_corpus(&CorpusSpec::random(6, 7, 40, 11, true)).unwrap();
    gs.par_iter().for_each(|g| {
        let g = Arc::new(g.clone());
        assert!(kp_soundness(&g).unwrap().is_empty(), "{}", graph_to_json(&g));
        assert!(sil_reading_discrepancies(&g).is_empty());
    });
}

#[test]
fn arrows_exist_iff_sil() {
    for g in exhaustive(5) {
        let d = arrow_diagram(&g).unwrap();
        assert_eq!(d.arrows.is_empty(), !sil::has_sil(&g));
        assert_eq!(d.arrows.len(), kp_presentation(&g).count(RelatorKind::SilIII));
        for (k, &j) in d.dual.iter().enumerate() {
            assert_eq!(d.dual[j], k);
            assert_ne!(j, k);
        }
    }
}

#[test]
fn edgeless_pair_counts() {
    for n in 3..=6 {
        let d = arrow_diagram(&Graph::edgeless(n)).unwrap();
        assert_eq!(d.pair_count(), n * (n - 1) * (n - 2) / 2);
        assert_eq!(d.lambda.len(), n * (n - 1));
    }
}

#[test]
fn mccool_agrees_with_edgeless() {
    let rename = |name: &str| {
        let (i, j) = name[1..].split_once('_').unwrap();
        format!("c[{j}|{{{i}}}]")
    };
    for n in 2..=4 {
        let m = mccool_presentation(n).unwrap();
        assert!(m.coincides_with(&kp_presentation(&Graph::edgeless(n)), rename), "n={n}");
    }
}

#[test]
fn serialization_round_trips() {
    for g in exhaustive(4) {
        assert_eq!(parse_graph_json(&graph_to_json(&g)).unwrap(), *g);
        assert_eq!(parse_graph_dot(&graph_to_dot(&g, "G")).unwrap(), *g);
        let p = kp_presentation(&g);
        let text = export_presentation(&p, ExportFormat::Plain);
        assert_eq!(parse_presentation(&text, Some(&g)).unwrap(), p);
    }
}

#[test]
fn parse_errors() {
    assert!(matches!(parse_graph_json(r#"{"vertices":["1"],"edges":[["1","1"]]}"#), Err(Error::Loop(_))));
    assert!(matches!(parse_graph_json("{\n  \"vertices\": [\"1\" \"2\"]}"), Err(Error::Parse { line: 2, .. })));
    let g = parse_graph_json(r#"{"vertices":["1","2"],"edges":[["1","2"]]}"#).unwrap();
    assert_eq!(g.edge_count(), 1);
}

fn set(g: &Graph, labels: &[&str]) -> VertexSet {
    labels.iter().map(|l| g.vertex(l).unwrap()).collect()
}

#[test]
fn slink_example_graphs() {
    let (g, [v, w1, w2]) = slink_left();
    assert_eq!(sil::sst(&g, v).unwrap(), VertexSet::from_iter([v, w2]));
    assert!(!sil::slink(&g, v).unwrap().contains(w1));
    let (g, [v, w3, w4, w5]) = slink_right();
    assert_eq!(sil::sst(&g, v).unwrap(), VertexSet::from_iter([v, w4, w5]));
    assert!(!sil::slink(&g, v).unwrap().contains(w3));
}

#[test]
fn example_graphs_verify() {
    for g in [slink_left().0, slink_right().0] {
        let g = Arc::new(g);
        let r = run_verify(&g, "example", &CheckId::ALL, DEFAULT_TIMEOUT);
        assert!(r.passed(), "{}", r.render());
        assert!(r.checks.iter().all(|c| c.status == Status::Pass), "{}", r.render());
    }
}

#[test]
fn hat_graph_sizes() {
    // Path 1–2–3: sst(1) = {1}, Γ − st(1) = {3}; the middle vertex is central.
    let g = Arc::new(Graph::path(3));
    let h = hat::hat_graph(&g).unwrap();
    assert_eq!(h.len(), 2);
    assert_eq!(h.quotient_rank(), 0);
    assert!(h.collapses_to_kp());
    assert!(matches!(hat::iota(&h, Vertex(1)), Err(Error::CentralVertex(_))));
    assert!(matches!(hat::hat_graph(&Arc::new(Graph::edgeless(2))), Err(Error::Disconnected)));
}

#[test]
fn gadget_rejections() {
    let g = Arc::new(Graph::edgeless(3));
    let v = |l: &str| g.vertex(l).unwrap();
    assert!(gadget::gadget_embedding(&g, v("1"), v("2"), &set(&g, &["2"]), v("2")).is_err());
    assert!(gadget::gadget_embedding(&g, v("1"), v("2"), &set(&g, &["3"]), v("1")).is_err());
    assert!(gadget::gadget_embedding(&g, v("1"), v("1"), &set(&g, &["3"]), v("3")).is_err());
    let (left, _) = slink_left();
    let left = Arc::new(left);
    let pairs = sil::sil_pairs(&left).unwrap();
    assert!(!pairs.is_empty());
    for (u, x, shared) in pairs {
        for c in &shared {
            let e = gadget::gadget_embedding(&left, u, x, c, c.first().unwrap()).unwrap();
            assert!(gadget::all_pass(&e.report));
        }
    }
}

#[test]
fn verify_random_seven_vertex_graphs() {
    let graphs: Vec<(String, Arc<Graph>)> = generate_corpus(&CorpusSpec::random(7, 7, 50, 42, true))
        .unwrap()
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("g{i}"), Arc::new(g)))
        .collect();
    let reports = raag_paut::verify::run_verify_all(&graphs, &CheckId::ALL, DEFAULT_TIMEOUT, 4).unwrap();
    let ids: Vec<&str> = reports.iter().map(|r| r.graph.as_str()).collect();
    assert_eq!(ids, graphs.iter().map(|(id, _)| id.as_str()).collect::<Vec<_>>());
    for r in &reports {
        assert!(r.passed(), "{}", r.render());
        assert!(!r.checks.iter().any(|c| matches!(&c.status, Status::Skipped(s) if s == "timeout")));
    }
    let again = raag_paut::verify::run_verify_all(&graphs, &CheckId::ALL, DEFAULT_TIMEOUT, 2).unwrap();
    let render = |rs: &[raag_paut::verify::VerificationReport]| rs.iter().map(|r| r.render()).collect::<String>();
    assert_eq!(render(&reports), render(&again));
}
