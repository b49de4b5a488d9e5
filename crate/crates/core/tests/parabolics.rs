use btcompact::fans::fan_fj;
use btcompact::num::{q, Q};
use btcompact::parabolics::{
    cone_cp, enumerate_strata, enumerate_strata_conjugates, facade_root_system, is_j_relevant,
    is_j_relevant_via_perp, is_non_degenerate, non_degeneracy_report, ParabolicType,
};
use btcompact::rootdata::{DiagramSubset, RootDatum};

fn cat(n: &str) -> RootDatum {
    RootDatum::catalogue(n).unwrap()
}

fn v(xs: &[i64]) -> Vec<Q> {
    xs.iter().map(|&x| q(x)).collect()
}

#[test]
fn non_degenerate_examples() {
    let a2 = cat("A2");
    assert!(is_non_degenerate(&a2, DiagramSubset::singleton(0)).unwrap());
    assert!(!is_non_degenerate(&a2, a2.full_subset()).unwrap());
    let a1a1 = cat("A1xA1");
    assert!(!is_non_degenerate(&a1a1, DiagramSubset::singleton(0)).unwrap());
    assert!(!non_degeneracy_report(&a1a1, DiagramSubset::singleton(0)).psi_spans);
    let psi = ParabolicType::new(&a1a1, DiagramSubset::singleton(0)).psi;
    assert_eq!(psi.iter().map(|&a| a1a1.root_label(a)).collect::<Vec<_>>(), vec!["-a2"]);
}

#[test]
fn cone_of_parabolic_type() {
    let d = cat("A2");
    let o = v(&[0, 0]);
    let dominant = cone_cp(&d, DiagramSubset::EMPTY, &o);
    assert!(dominant.interior_contains(&v(&[1, 1])) && !dominant.contains(&v(&[-1, 2])));
    // the closed 120 degree cone: closure of C and s1 C
    let c = cone_cp(&d, DiagramSubset::singleton(0), &o);
    assert!(c.contains(&v(&[1, 1])) && c.contains(&v(&[-1, 2])) && c.contains(&v(&[0, 1])));
    assert!(!c.contains(&v(&[1, -1])));
    let all = cone_cp(&d, d.full_subset(), &o);
    assert!(all.contains(&v(&[-5, -7])));
}

#[test]
fn relevance_examples() {
    for n in ["A2", "A3", "B3"] {
        let d = cat(n);
        assert!(DiagramSubset::all(d.rank()).all(|t| is_j_relevant(&d, DiagramSubset::EMPTY, t).unwrap()));
    }
    let d = cat("A2");
    let j = DiagramSubset::singleton(0);
    let relevant: Vec<DiagramSubset> =
        DiagramSubset::all(2).filter(|&t| is_j_relevant(&d, j, t).unwrap()).collect();
    assert_eq!(relevant, vec![DiagramSubset::singleton(0), DiagramSubset::singleton(1), d.full_subset()]);
    assert!(!is_j_relevant_via_perp(&d, j, DiagramSubset::EMPTY).unwrap());
    assert!(is_j_relevant_via_perp(&d, j, DiagramSubset::singleton(0)).unwrap());
}

#[test]
fn strata_counts() {
    let a2 = cat("A2");
    assert_eq!(enumerate_strata(&a2, DiagramSubset::EMPTY).unwrap().len(), 4);
    assert_eq!(enumerate_strata(&a2, DiagramSubset::singleton(0)).unwrap().len(), 3);
    assert_eq!(enumerate_strata(&cat("A1"), DiagramSubset::EMPTY).unwrap().len(), 2);
    // one parabolic containing the torus per cone
    assert_eq!(enumerate_strata_conjugates(&a2, DiagramSubset::EMPTY).unwrap().len(), 13);
    assert_eq!(enumerate_strata_conjugates(&a2, DiagramSubset::singleton(0)).unwrap().len(), 7);
}

#[test]
fn facade_roots() {
    let d = cat("A2");
    let (fan, cores) = fan_fj(&d, DiagramSubset::EMPTY).unwrap();
    assert_eq!(facade_root_system(&d, &fan, fan.origin(), &cores).len(), d.num_roots());
    let chamber = fan.cone_containing(&v(&[1, 1]));
    assert!(facade_root_system(&d, &fan, chamber, &cores).is_empty());
    let (fan, cores) = fan_fj(&d, DiagramSubset::singleton(0)).unwrap();
    let c = fan.cone_of_parabolic(DiagramSubset::singleton(0), 0).unwrap();
    let mut labels: Vec<String> =
        facade_root_system(&d, &fan, c, &cores).into_iter().map(|a| d.root_label(a)).collect();
    labels.sort();
    assert_eq!(labels, vec!["-a1", "a1"]);
}
