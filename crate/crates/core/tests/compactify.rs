use btcompact::compactify::{
    facade_closure_order, facade_coordinates, limit_of_profile, limit_of_ray, project_to_facade, Limit,
    LimitProfile,
};
use btcompact::fans::{weyl_fan, Fan};
use btcompact::num::{frac, pair, q, ExtQ, Q};
use btcompact::rootdata::{DiagramSubset, RootDatum};

fn a2() -> RootDatum {
    RootDatum::catalogue("A2").unwrap()
}

fn v(xs: &[i64]) -> Vec<Q> {
    xs.iter().map(|&x| q(x)).collect()
}

fn profile(d: &RootDatum, pairs: &[(&str, ExtQ)]) -> LimitProfile {
    let mut vals = vec![None; d.num_roots()];
    for (l, x) in pairs {
        let a = d.parse_root_label(l).unwrap();
        vals[d.negative(a)] = Some(-x.clone());
        vals[a] = Some(x.clone());
    }
    LimitProfile::new(d, vals.into_iter().map(Option::unwrap).collect()).unwrap()
}

#[test]
fn interior_projection_is_identity() {
    let fan = weyl_fan(&a2()).unwrap();
    let x = vec![frac(2, 3), frac(-1, 5)];
    assert_eq!(project_to_facade(&fan, fan.origin(), &x).base, x);
}

#[test]
fn rays_toward_chamber_and_wall() {
    let d = a2();
    let fan = weyl_fan(&d).unwrap();
    let a = v(&[2, 5]);
    let p = limit_of_ray(&fan, &a, &v(&[1, 1])).unwrap();
    assert_eq!(p.cone, fan.cone_containing(&v(&[1, 1])));
    assert!(facade_coordinates(&fan, &p).is_empty());
    let p = limit_of_ray(&fan, &a, &v(&[0, 1])).unwrap();
    assert_eq!(facade_coordinates(&fan, &p), vec![(d.parse_root_label("a1").unwrap(), q(2))]);
    let shifted = limit_of_ray(&fan, &v(&[2, -9]), &v(&[0, 3])).unwrap();
    assert_eq!(shifted, p);
    assert!(limit_of_ray(&fan, &a, &v(&[0, 0])).is_err());
}

#[test]
fn profile_in_merged_fan() {
    let d = a2();
    let fan = Fan::build(&d, DiagramSubset::singleton(0)).unwrap();
    let p = profile(&d, &[("a1", ExtQ::Finite(q(5))), ("a2", ExtQ::PosInf), ("a1+a2", ExtQ::PosInf)]);
    let Limit::Point(pt) = limit_of_profile(&fan, &p) else { panic!("expected a limit") };
    assert_eq!(pt.cone, fan.cone_of_parabolic(DiagramSubset::singleton(0), 0).unwrap());
    // the merged cone spans the plane, so its facade is a single point
    assert!(facade_coordinates(&fan, &pt).is_empty());
}

#[test]
fn profile_with_mixed_signs() {
    let d = a2();
    let fan = weyl_fan(&d).unwrap();
    let p = profile(&d, &[("a1", ExtQ::PosInf), ("a2", ExtQ::NegInf), ("a1+a2", ExtQ::Finite(q(1)))]);
    let Limit::Point(pt) = limit_of_profile(&fan, &p) else { panic!("expected a limit") };
    assert_eq!(pt.cone, fan.cone_containing(&v(&[1, -1])));
    assert_eq!(facade_coordinates(&fan, &pt)[0].1, q(1));
}

#[test]
fn finite_profile_gives_interior_point() {
    let d = a2();
    let fan = weyl_fan(&d).unwrap();
    let x = vec![frac(1, 3), q(4)];
    let vals = (0..d.num_roots()).map(|a| ExtQ::Finite(pair(d.root(a), &x))).collect();
    let p = LimitProfile::new(&d, vals).unwrap();
    assert_eq!(limit_of_profile(&fan, &p), Limit::Point(project_to_facade(&fan, fan.origin(), &x)));
}

#[test]
fn closure_order_matches_faces() {
    for j in [DiagramSubset::EMPTY, DiagramSubset::singleton(0)] {
        let fan = Fan::build(&a2(), j).unwrap();
        let order = facade_closure_order(&fan);
        for f in 0..fan.len() {
            assert!(order[fan.origin()][f]);
            for g in 0..fan.len() {
                assert_eq!(order[f][g], fan.is_face(f, g));
            }
        }
        for c in (0..fan.len()).filter(|&c| fan.cone(c).span_dim() == 2) {
            assert!((0..fan.len()).all(|g| g == c || !order[c][g]));
        }
    }
}
