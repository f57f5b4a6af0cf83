mod common;

use common::{reference_order, system};
use rsq::lyndon::{self, is_lyndon};
use rsq::rootdata::Family;

fn ranks(f: Family, hi: usize) -> std::ops::RangeInclusive<usize> {
    f.min_rank().max(2)..=hi
}

#[test]
fn orders_match_reference_lists() {
    for f in Family::ALL {
        for n in ranks(f, 4) {
            let rs = system(f, n);
            let co = lyndon::lalonde_ram(&rs);
            assert_eq!(lyndon::order_alpha(&rs, &co), reference_order(f, n), "{}{}", f, n);
        }
    }
}

#[test]
fn orders_are_convex() {
    for f in Family::ALL {
        for n in ranks(f, 5) {
            let rs = system(f, n);
            let co = lyndon::lalonde_ram(&rs);
            assert!(lyndon::is_convex(&rs, &co.order), "{}{}", f, n);
        }
    }
}

#[test]
fn words_are_lyndon_and_degree_preserving() {
    for f in Family::ALL {
        for n in ranks(f, 5) {
            let rs = system(f, n);
            let co = lyndon::lalonde_ram(&rs);
            for (k, root) in rs.positive_roots().iter().enumerate() {
                let w = &co.words[k];
                assert!(is_lyndon(w).unwrap());
                let mut count = vec![0; n];
                for &l in w {
                    count[l as usize - 1] += 1;
                }
                assert_eq!(count, root.alpha);
            }
        }
    }
}

#[test]
fn orders_telescope() {
    for f in Family::ALL {
        let lo = match f {
            Family::C => 3,
            _ => f.min_rank() + 1,
        };
        for n in lo..=5 {
            let rs = system(f, n);
            let co = lyndon::lalonde_ram(&rs);
            let small = system(f, n - 1);
            let sco = lyndon::lalonde_ram(&small);
            assert_eq!(lyndon::telescope(&rs, &co), lyndon::order_alpha(&small, &sco), "{}{}", f, n);
        }
    }
}

#[test]
fn minimal_pairs_are_minimal() {
    for f in Family::ALL {
        for n in ranks(f, 5) {
            let rs = system(f, n);
            let co = lyndon::lalonde_ram(&rs);
            for g in 0..rs.positive_roots().len() {
                if rs.positive_roots()[g].is_simple() {
                    assert!(lyndon::minimal_pair(&rs, &co, g).is_err());
                    continue;
                }
                let (a, b) = lyndon::minimal_pair(&rs, &co, g).unwrap();
                assert!(lyndon::is_minimal_pair(&rs, &co, g, a, b));
            }
        }
    }
}

#[test]
fn reference_minimal_pairs() {
    let name = |rs: &rsq::RootSystem, s: &str| rs.root_by_name(s).unwrap();
    let rs = system(Family::B, 4);
    let co = lyndon::lalonde_ram(&rs);
    for i in 1..4 {
        let want = (name(&rs, &format!("gamma_{}_4", i)), rs.simple_index(4));
        assert_eq!(lyndon::minimal_pair(&rs, &co, name(&rs, &format!("beta_{}_4", i))).unwrap(), want);
    }
    let rs = system(Family::C, 4);
    let co = lyndon::lalonde_ram(&rs);
    for i in 1..4 {
        let want = (name(&rs, &format!("gamma_{}_3", i)), name(&rs, &format!("gamma_{}_4", i)));
        assert_eq!(lyndon::minimal_pair(&rs, &co, name(&rs, &format!("beta_{}_{}", i, i))).unwrap(), want);
    }
    let rs = system(Family::A, 4);
    let co = lyndon::lalonde_ram(&rs);
    assert_eq!(
        lyndon::minimal_pair(&rs, &co, name(&rs, "gamma_1_3")).unwrap(),
        (name(&rs, "gamma_1_2"), rs.simple_index(3))
    );
}
