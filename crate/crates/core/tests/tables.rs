//! Generation engine against exhaustive oracles, and table rows beyond the
//! acceptance set.

use std::path::Path;

use folkman::bounds::{verify_lower_bound_certificate, KnownConstants, Verdict};
use folkman::clique::{has_clique, independence_number, is_plus_kt};
use folkman::enumerate::{all_classes, hereditary_classes, maximal_family_exhaustive};
use folkman::pipeline::{run_pipeline, PipelineConfig, RunOptions, StepReport};
use folkman::search::{
    cone_vertex_count, extend_hosts, in_maximal_family, plus_clique_descent, run_algorithm_1,
    run_algorithm_2, valid_multisets, FamilySpec,
};
use folkman::{arrows, ArrowVector, Graph, GraphSet};

fn av(e: &[usize]) -> ArrowVector {
    ArrowVector::new(e.to_vec()).unwrap()
}

fn set(gs: &[Graph]) -> GraphSet {
    gs.iter().collect()
}

fn plus_family_by_filter(a: &ArrowVector, q: usize, n: usize, t: usize) -> GraphSet {
    all_classes(n)
        .unwrap()
        .sorted_graphs()
        .iter()
        .filter(|g| !has_clique(g, q) && is_plus_kt(g, q - 1) && independence_number(g) <= t && arrows(g, a))
        .collect()
}

#[test]
fn alpha_two_base_rows_have_two_plus_graphs() {
    // every (+K7)-graph in H^2(3; 8; 7), by filtering all 1044 classes
    let found = plus_family_by_filter(&av(&[3]), 8, 7, 2);
    let k7 = Graph::complete(7).unwrap();
    assert_eq!(found, set(&[k7.clone(), k7.remove_edge(0, 1).unwrap()]));
    let descended = plus_clique_descent(&set(&[k7]), &av(&[3]), 8, 2, false);
    assert_eq!(descended, found);

    let found = plus_family_by_filter(&av(&[4]), 9, 8, 2);
    assert_eq!(found.len(), 2);
}

#[test]
fn next_alpha_two_row_needs_the_missing_edge_host() {
    let spec = FamilySpec::new(av(&[4]), 8, 9, 2, 2).unwrap();
    let k7 = Graph::complete(7).unwrap();
    assert!(extend_hosts(&set(std::slice::from_ref(&k7)), &spec).unwrap().is_empty());
    let out = extend_hosts(&set(&[k7.clone(), k7.remove_edge(0, 1).unwrap()]), &spec).unwrap();
    let k9_minus_matching = Graph::complete(9).unwrap().remove_edge(0, 1).unwrap().remove_edge(2, 3).unwrap();
    assert_eq!(out, set(&[k9_minus_matching]));
}

#[test]
fn descent_matches_filtering() {
    for (a, q, n, t) in [(&[2, 2][..], 4, 6, 3), (&[2, 2], 4, 7, 3), (&[3], 4, 7, 2), (&[2, 2], 5, 7, 2)] {
        let a = av(a);
        let maximal = maximal_family_exhaustive(&a, q, n, 1, t).unwrap();
        let got = plus_clique_descent(&maximal, &a, q, t, false);
        assert_eq!(got, plus_family_by_filter(&a, q, n, t), "{a} q={q} n={n} t={t}");
        let cone_free = plus_clique_descent(&maximal, &a, q, t, true);
        assert!(cone_free.forms().all(|f| cone_vertex_count(f.graph()) == 0));
        assert_eq!(cone_free.len(), got.forms().filter(|f| cone_vertex_count(f.graph()) == 0).count());
    }
}

#[test]
fn extension_matches_exhaustive_with_larger_r() {
    // r = 3 slices of q = 4 families on 9 vertices, compared with the hereditary filter
    let a = av(&[2, 2]);
    let (q, n, t) = (4, 9, 3);
    let input = maximal_family_exhaustive(&a.decrement_first().unwrap(), q, n - 3, 1, t).unwrap();
    let spec = FamilySpec::new(a.clone(), q, n, 3, t).unwrap();
    let got = run_algorithm_1(&spec, &input).unwrap();
    let want = maximal_family_exhaustive(&a, q, n, 3, t).unwrap();
    assert_eq!(got, want);
    assert!(!want.is_empty());
}

#[test]
fn every_output_is_a_member() {
    let k6 = set(&[Graph::complete(6).unwrap()]);
    let h4 = run_algorithm_1(&FamilySpec::new(av(&[4]), 8, 8, 2, 3).unwrap(), &k6).unwrap();
    let spec = FamilySpec::new(av(&[5]), 8, 10, 2, 3).unwrap();
    let h5 = run_algorithm_1(&spec, &h4).unwrap();
    assert_eq!(h5.len(), 3);
    assert!(h5.forms().all(|f| in_maximal_family(f.graph(), &spec)));
}

#[test]
fn cone_variant_equals_plain_extension_on_q4() {
    // H(2, 2; 4; n) from A1 = H^3(2; 4; n - 2) and A2 = H^3(2; 3; n - 1)
    for n in 6..=8 {
        let spec = FamilySpec::new(av(&[2, 2]), 4, n, 2, 3).unwrap();
        let a1 = maximal_family_exhaustive(&av(&[2]), 4, n - 2, 1, 3).unwrap();
        let a2 = maximal_family_exhaustive(&av(&[2]), 3, n - 1, 1, 3).unwrap();
        assert_eq!(run_algorithm_2(&spec, &a1, &a2).unwrap(), run_algorithm_1(&spec, &a1).unwrap(), "n = {n}");
    }
}

#[test]
fn multisets_respect_both_conditions() {
    let h = Graph::cycle(7).unwrap().complement();
    let (q, r, t) = (5, 2, 3);
    let (family, ms) = valid_multisets(&h, q, r, t);
    assert!(!ms.is_empty());
    let alpha_out = |u: u64| independence_number(&h.delete_vertices(&folkman::VertexSet::from_bits(u, 7)));
    for m in &ms {
        let [x, y] = [m.sets[0], m.sets[1]];
        assert!(has_clique(&h.induced(&x.intersection(&y)), q - 2));
        assert!(alpha_out(x.bits()) < t && alpha_out(y.bits()) < t);
        assert!(alpha_out(x.union(&y).bits()) + 2 <= t);
    }
    // completeness: every pair passing both conditions is listed
    let mut count = 0;
    for i in 0..family.len() {
        for j in i..family.len() {
            let (x, y) = (family[i], family[j]);
            if has_clique(&h.induced(&x.intersection(&y)), q - 2)
                && alpha_out(x.bits()) < t
                && alpha_out(y.bits()) < t
                && alpha_out(x.union(&y).bits()) + 2 <= t
            {
                count += 1;
            }
        }
    }
    assert_eq!(count, ms.len());
}

fn run_config(name: &str) -> Vec<StepReport> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs").join(name);
    run_pipeline(&PipelineConfig::load(path).unwrap(), &RunOptions::default(), |_| {}).unwrap()
}

fn row(reports: &[StepReport], id: &str) -> (usize, usize, Option<usize>, Option<usize>) {
    let r = reports.iter().find(|r| r.id == id).unwrap();
    (r.maximal, r.maximal_cone_free, r.plus, r.plus_cone_free)
}

#[test]
fn second_table_rows_on_fourteen_vertices() {
    let reports = run_config("table2.toml");
    assert_eq!(row(&reports, "h7_9_13_t3"), (12, 0, Some(3113), Some(9)));
    assert_eq!(row(&reports, "h7_9_14_t2"), (10, 0, Some(5474), Some(80)));
    // the q = 8 rows feeding the second inputs
    assert_eq!(row(&reports, "h6_8_12_t3"), (12, 0, Some(3104), Some(33)));
}

#[test]
fn triangle_free_certificate() {
    // F_v(2, 2; 3) > 4: every slice of H(2, 2; 3; 4) is empty
    let cfg = PipelineConfig::from_toml_str(
        "[[base]]\nid = \"h22_3_4\"\nkind = \"exhaustive\"\na = [2, 2]\nq = 3\nn = 4\nt = 4\n",
    )
    .unwrap();
    let reports = run_pipeline(&cfg, &RunOptions::default(), |_| {}).unwrap();
    let known = KnownConstants::builtin();
    assert_eq!(
        verify_lower_bound_certificate(&known, &av(&[2, 2]), 3, 4, &reports),
        Verdict::Proven { bound: 5 }
    );
    // the same reports say nothing about n = 5
    assert!(matches!(
        verify_lower_bound_certificate(&known, &av(&[2, 2]), 3, 5, &reports),
        Verdict::Withheld { .. }
    ));
}

#[test]
fn certificate_needs_every_slice() {
    // H(2, 3; 4; 6) is empty; the certificate is withheld until the whole
    // range 2..=6 is covered
    let a = av(&[2, 3]);
    let known = KnownConstants::builtin();
    let slice = |r: usize, t: usize| {
        let cfg = PipelineConfig::from_toml_str(&format!(
            "[[base]]\nid = \"s\"\nkind = \"exhaustive\"\na = [2, 3]\nq = 4\nn = 6\nr = {r}\nt = {t}\n"
        ))
        .unwrap();
        run_pipeline(&cfg, &RunOptions::default(), |_| {}).unwrap().remove(0)
    };
    let partial = vec![slice(2, 4)];
    assert!(matches!(verify_lower_bound_certificate(&known, &a, 4, 6, &partial), Verdict::Withheld { .. }));
    let full = vec![slice(2, 4), slice(5, 6)];
    assert_eq!(verify_lower_bound_certificate(&known, &a, 4, 6, &full), Verdict::Proven { bound: 7 });
    // a nonempty slice blocks the certificate
    let cfg = PipelineConfig::from_toml_str(
        "[[base]]\nid = \"s\"\nkind = \"exhaustive\"\na = [2, 3]\nq = 4\nn = 7\nt = 7\n",
    )
    .unwrap();
    let seven = run_pipeline(&cfg, &RunOptions::default(), |_| {}).unwrap();
    assert_eq!(seven[0].maximal, 1);
    assert!(matches!(verify_lower_bound_certificate(&known, &a, 4, 7, &seven), Verdict::Withheld { .. }));
}

#[test]
fn hereditary_generation_matches_filtering() {
    for n in 1..=7 {
        let keep = |g: &Graph| !has_clique(g, 4) && independence_number(g) <= 3;
        let filtered: GraphSet = all_classes(n).unwrap().sorted_graphs().iter().filter(|g| keep(g)).collect();
        assert_eq!(hereditary_classes(n, keep).unwrap(), filtered, "n = {n}");
    }
}
