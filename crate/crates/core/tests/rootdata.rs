use btcompact::rootdata::{components, orthogonal_complement, DiagramSubset, RootDatum};

fn cat(n: &str) -> RootDatum {
    RootDatum::catalogue(n).unwrap()
}

#[test]
fn catalogue_examples() {
    let a2 = cat("A2");
    assert_eq!((a2.num_roots(), a2.weyl_group().order(), a2.rank()), (6, 6, 2));
    let g2 = cat("G2");
    assert_eq!((g2.num_roots(), g2.weyl_group().order()), (12, 12));
    let bc1 = cat("BC1");
    let labels: Vec<String> = (0..bc1.num_roots()).map(|a| bc1.root_label(a)).collect();
    for l in ["a1", "-a1", "2a1", "-2a1"] {
        assert!(labels.contains(&l.to_string()), "{labels:?}");
    }
    let nd: Vec<String> = bc1.non_divisible().into_iter().map(|a| bc1.root_label(a)).collect();
    assert_eq!(nd.len(), 2);
    assert!(nd.iter().all(|l| !l.contains('2')));
}

#[test]
fn weyl_group_orders() {
    for (n, o) in [("A2", 6), ("B2", 8), ("BC2", 8), ("C3", 48), ("D4", 192), ("F4", 1152)] {
        assert_eq!(cat(n).weyl_group().order(), o, "{n}");
    }
}

#[test]
fn weyl_group_permutes_roots() {
    for n in ["A3", "B3", "G2", "BC2"] {
        let d = cat(n);
        let w = d.weyl_group();
        for el in w.elements() {
            let mut image: Vec<usize> = el.perm.clone();
            image.sort_unstable();
            assert_eq!(image, (0..d.num_roots()).collect::<Vec<_>>());
            for a in 0..d.num_roots() {
                assert_eq!(el.act_form(d.root(a)), d.root(el.perm[a]).to_vec());
            }
        }
    }
}

#[test]
fn components_of_subsets() {
    let a3 = cat("A3");
    assert_eq!(components(&a3, a3.parse_subset("a1,a3").unwrap()).len(), 2);
    let a2 = cat("A2");
    assert_eq!(components(&a2, a2.full_subset()).len(), 1);
    let a1a1 = cat("A1xA1");
    assert_eq!(components(&a1a1, a1a1.full_subset()).len(), 2);
}

#[test]
fn orthogonal_complements() {
    let a2 = cat("A2");
    assert_eq!(orthogonal_complement(&a2, DiagramSubset::singleton(0)), DiagramSubset::EMPTY);
    let a3 = cat("A3");
    assert_eq!(orthogonal_complement(&a3, DiagramSubset::singleton(0)), DiagramSubset::singleton(2));
    for n in ["A1", "B3", "G2", "A1xA1"] {
        let d = cat(n);
        assert_eq!(orthogonal_complement(&d, DiagramSubset::EMPTY), d.full_subset());
    }
}

#[test]
fn labels_round_trip() {
    for n in ["A3", "B3", "G2", "BC2", "A1xA2"] {
        let d = cat(n);
        for a in 0..d.num_roots() {
            assert_eq!(d.parse_root_label(&d.root_label(a)).unwrap(), a);
        }
    }
    assert!(cat("A2").parse_subset("a3").is_err());
    assert!(RootDatum::catalogue("E9").is_err());
}
