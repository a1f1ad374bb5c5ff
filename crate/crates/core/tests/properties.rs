use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use basictop::doc::Source;
use basictop::galois::{aa, from_family_red, from_family_sat, galois_check, jj, random_reduction, random_saturation};
use basictop::gen::{generate_red, generate_sat, red_iterates, sat_iterates};
use basictop::optable::{classify, compat_degree, greatest_left_compatible, incl_degree, operators_equal};
use basictop::rep::{adjunction_check, representable, symmetry_check};
use basictop::{parse_document, AxiomSet, HRelation, HSubset, HeytingAlgebra, Operator, Space};

fn chain_space(n: usize) -> Arc<Space> {
    let points: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    Space::over(HeytingAlgebra::chain(3).unwrap(), &points).unwrap()
}

fn nth_subset(s: &Space, i: usize) -> HSubset {
    let all = s.universe().unwrap();
    all[i % all.len()].clone()
}

fn table_op(s: &Arc<Space>, rows: &[usize]) -> Operator {
    let rows = (0..s.universe().unwrap().len()).map(|i| nth_subset(s, rows[i])).collect();
    Operator::table(s, "o", rows).unwrap()
}

/// Random strict order on `n` points, given as `i < j` pairs with `i < j`.
fn poset() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..=4).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let k = pairs.len();
        (Just(n), proptest::collection::vec(any::<bool>(), k)).prop_map(move |(n, keep)| {
            let order = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| *p).collect();
            (n, order)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn downset_algebras_are_heyting((n, order) in poset()) {
        let names: Vec<String> = (0..n).map(|i| format!("q{i}")).collect();
        let pairs: Vec<(String, String)> = order.iter().map(|&(i, j)| (names[i].clone(), names[j].clone())).collect();
        let h = HeytingAlgebra::downsets(&names, &pairs).unwrap();
        for a in h.elements() {
            prop_assert!(h.leq(a, h.neg(h.neg(a))));
            for b in h.elements() {
                for c in h.elements() {
                    prop_assert_eq!(h.leq(c, h.imp(a, b)), h.leq(h.meet(c, a), b));
                    prop_assert_eq!(h.meet(a, h.join(b, c)), h.join(h.meet(a, b), h.meet(a, c)));
                }
            }
        }
    }

    #[test]
    fn ll_is_greatest_left_compatible(
        rows in proptest::collection::vec(0usize..27, 27),
        other in proptest::collection::vec(0usize..27, 27),
    ) {
        let s = chain_space(1);
        let o = table_op(&s, &rows);
        let o2 = table_op(&s, &other);
        let top = s.algebra().top();
        let ll = greatest_left_compatible(&o).unwrap();
        prop_assert_eq!(compat_degree(&ll, &o).unwrap().degree, top);
        let c = compat_degree(&o2, &o).unwrap().degree == top;
        prop_assert_eq!(c, incl_degree(&o2, &ll).unwrap().degree == top);
    }

    #[test]
    fn families_give_certified_operators(picks in proptest::collection::vec(0usize..81, 0..6)) {
        let s = chain_space(2);
        let family: Vec<HSubset> = picks.iter().map(|&i| nth_subset(&s, i)).collect();
        let a = from_family_sat(&s, &family).unwrap();
        let j = from_family_red(&s, &family).unwrap();
        prop_assert!(classify(a.op()).unwrap().is_saturation());
        prop_assert!(classify(j.op()).unwrap().is_reduction());
        for p in &family {
            prop_assert_eq!(&a.op().eval(p), p);
            prop_assert_eq!(&j.op().eval(p), p);
        }
    }

    #[test]
    fn galois_holds_for_sampled_pairs(seed in any::<u64>()) {
        let s = chain_space(2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_saturation(&s, &mut rng).unwrap();
        let j = random_reduction(&s, &mut rng).unwrap();
        prop_assert!(galois_check(&a, &j).unwrap().holds());
        let top = s.algebra().top();
        prop_assert_eq!(compat_degree(aa(&j).unwrap().op(), j.op()).unwrap().degree, top);
        prop_assert_eq!(compat_degree(a.op(), jj(&a).unwrap().op()).unwrap().degree, top);
    }

    #[test]
    fn iterates_reach_the_generated_operators(
        covers in proptest::collection::vec((0usize..3, 0usize..27, 1usize..3), 0..8),
        start in 0usize..27,
    ) {
        let s = chain_space(3);
        let h = s.algebra();
        let weights: Vec<_> = h.elements().collect();
        let mut ax = AxiomSet::new(&s, "ax");
        for &(a, c, w) in &covers {
            let cover = HSubset::from_degrees((0..3).map(|i| weights[c / 3usize.pow(i) % 3]).collect());
            ax.add_weighted(a, cover, weights[w]).unwrap();
        }
        let u = nth_subset(&s, start);
        let sat = generate_sat(&ax).unwrap();
        let red = generate_red(&ax).unwrap();
        prop_assert_eq!(sat_iterates(&ax, &u).unwrap().pop(), Some(sat.op().eval(&u)));
        prop_assert_eq!(red_iterates(&ax, &u).unwrap().pop(), Some(red.op().eval(&u)));
        prop_assert!(operators_equal(jj(&sat).unwrap().op(), red.op()).unwrap());
    }

    #[test]
    fn representable_topologies_are_reduced(
        entries in proptest::collection::vec(0usize..3, 1..=9),
        nx in 1usize..=3,
    ) {
        let s = chain_space(3);
        let dx = chain_space(nx);
        let mut r = HRelation::new("r", &dx, &s).unwrap();
        let degrees: Vec<_> = s.algebra().elements().collect();
        for (k, &d) in entries.iter().enumerate() {
            r.set(k % nx, k / nx % 3, degrees[d]);
        }
        prop_assert!(adjunction_check(&r).unwrap().holds());
        prop_assert!(symmetry_check(&r).unwrap().holds());
        let t = representable(&r).unwrap();
        prop_assert!(t.is_reduced().unwrap().holds);
    }

    #[test]
    fn documents_round_trip(rows in proptest::collection::vec(0usize..9, 9), deg in 0usize..3) {
        let s = chain_space(2);
        let names = ["0", "u", "1"];
        let mut doc = format!(
            "[algebra]\nchain 3\n[carrier]\np0 p1\n[relations]\nr = domain x\n  x p1 {}\n[operators]\nt = table\n",
            names[deg]
        );
        for (i, u) in s.universe().unwrap().iter().enumerate() {
            doc.push_str(&format!("  {} -> {}\n", s.format_subset(u), s.format_subset(&nth_subset(&s, rows[i]))));
        }
        let ws = parse_document(&doc).unwrap();
        let again = parse_document(&ws.serialize()).unwrap();
        prop_assert_eq!(ws.source(), again.source());
        prop_assert_eq!(Source::parse(&ws.serialize()).unwrap().render(), ws.serialize());
        prop_assert!(operators_equal(&ws.operator("t").unwrap(), &again.operator("t").unwrap()).unwrap());
    }
}
