use btcompact::apartment::{
    embed_extension, essential_projection, fundamental_alcove_vertices, is_special_vertex, is_virtually_special,
    project_between, rational_dense_sample, special_witness, transitivity_solve, AffineRootPattern, Apartment,
    Coordinate, ExtensionSpec, ValueGroup,
};
use btcompact::num::{frac, q, Q};
use btcompact::rootdata::{DiagramSubset, RootDatum};
use num_bigint::BigInt;

fn apt(n: &str) -> Apartment {
    let d = RootDatum::catalogue(n).unwrap();
    let p = AffineRootPattern::uniform(&d, 1).unwrap();
    Apartment::new(&d, p)
}

fn zero(r: usize) -> Vec<Q> {
    vec![q(0); r]
}

#[test]
fn special_vertices() {
    let a1 = apt("A1");
    assert!(is_special_vertex(&a1, &zero(1)));
    assert!(!is_special_vertex(&a1, &[frac(1, 2)]));
    let e2 = embed_extension(&a1, &ExtensionSpec::ramified(2)).unwrap();
    assert!(is_special_vertex(&e2, &[frac(1, 2)]));
    assert!(!is_special_vertex(&apt("A2"), &[frac(1, 3), q(0)]));
}

#[test]
fn virtually_special() {
    let a2 = apt("A2");
    assert!(is_virtually_special(&a2, &[Coordinate::Rational(q(0)), Coordinate::Rational(q(0))]));
    assert!(is_virtually_special(&a2, &[Coordinate::Rational(frac(2, 7)), Coordinate::Rational(frac(-1, 3))]));
    assert!(!is_virtually_special(&a2, &[Coordinate::Irrational("sqrt2".into()), Coordinate::Rational(q(0))]));
}

#[test]
fn witnesses() {
    assert_eq!(special_witness(&apt("A2"), &zero(2)), BigInt::from(1));
    assert_eq!(special_witness(&apt("A1"), &[frac(1, 3)]), BigInt::from(3));
    assert_eq!(special_witness(&apt("A2"), &[frac(1, 2), frac(1, 3)]), BigInt::from(6));
}

#[test]
fn rescaling_composes() {
    let a2 = apt("A2");
    let same = embed_extension(&a2, &ExtensionSpec::ramified(1)).unwrap();
    assert_eq!(same.pattern(), a2.pattern());
    let twice = embed_extension(&embed_extension(&a2, &ExtensionSpec::ramified(2)).unwrap(), &ExtensionSpec::ramified(3)).unwrap();
    assert!(twice.pattern().groups().iter().all(|g| *g == ValueGroup::Lattice { d: 6 }));
    assert!(embed_extension(&a2, &ExtensionSpec::ramified(0)).is_err());
}

#[test]
fn bc_value_groups() {
    let bc1 = apt("BC1");
    let d = bc1.datum();
    let a = d.parse_root_label("a1").unwrap();
    let two_a = d.parse_root_label("2a1").unwrap();
    assert_eq!(bc1.pattern().group(a), ValueGroup::BcCoset { d: 1 });
    assert_eq!(bc1.pattern().group(two_a), ValueGroup::Lattice { d: 1 });
    assert!(bc1.pattern().group(a).contains(&frac(1, 4)) && !bc1.pattern().group(a).contains(&frac(1, 2)));
}

#[test]
fn transitivity_examples() {
    let a1 = RootDatum::catalogue("A1").unwrap();
    let same = transitivity_solve(&a1, &[frac(1, 5)], &[frac(1, 5)]).unwrap();
    assert_eq!(same.n_denominator, BigInt::from(1));
    assert_eq!(same.coefficients, vec![BigInt::from(0)]);
    let s = transitivity_solve(&a1, &[q(0)], &[frac(1, 3)]).unwrap();
    assert_eq!((s.n_denominator, s.cartan_det, s.coefficients), (BigInt::from(3), 2, vec![BigInt::from(1)]));
    let a2 = RootDatum::catalogue("A2").unwrap();
    let s = transitivity_solve(&a2, &zero(2), &[frac(1, 3), frac(1, 2)]).unwrap();
    assert_eq!((s.n_denominator.clone(), s.cartan_det), (BigInt::from(6), 3));
    assert_eq!(s.translation, vec![frac(1, 3), frac(1, 2)]);
    assert!(transitivity_solve(&RootDatum::catalogue("BC1").unwrap(), &[q(0)], &[q(1)]).is_err());
}

#[test]
fn dense_samples() {
    let a1 = apt("A1");
    assert_eq!(rational_dense_sample(&a1, &[vec![q(1)]], 5).unwrap(), vec![vec![q(1)]]);
    let pts = rational_dense_sample(&a1, &[vec![q(0)], vec![q(1)]], 3).unwrap();
    assert_eq!(pts, vec![vec![frac(1, 2)], vec![frac(1, 4)], vec![frac(3, 4)]]);
    let g2 = apt("G2");
    let verts = fundamental_alcove_vertices(g2.datum());
    let pts = rational_dense_sample(&g2, &verts, 10).unwrap();
    assert_eq!(pts[0].iter().zip(&verts[1..]).count(), 2);
    assert!(rational_dense_sample(&g2, &[], 3).is_err());
}

#[test]
fn levi_projections() {
    let d = RootDatum::catalogue("A2").unwrap();
    let x = vec![frac(1, 2), q(3)];
    let o = zero(2);
    assert_eq!(essential_projection(&d, d.full_subset(), &x, &o), x);
    assert!(essential_projection(&d, DiagramSubset::EMPTY, &x, &o).is_empty());
    // moving along ker a1 leaves the {a1} image fixed
    let y = vec![frac(1, 2), q(-4)];
    let t = DiagramSubset::singleton(0);
    assert_eq!(essential_projection(&d, t, &x, &o), essential_projection(&d, t, &y, &o));
    let full = essential_projection(&d, d.full_subset(), &x, &o);
    assert_eq!(project_between(d.full_subset(), t, &full), essential_projection(&d, t, &x, &o));
}
