use orbitcoh::catalog::MAX_ENTRY;
use orbitcoh::cohomology::{classify, h2_for};
use orbitcoh::rootsys::{
    identify_cartan_type, reflection_closure, CartanMatrix, CartanType, Family, RootSystem,
};
use orbitcoh::{ComponentGroup, OrbitLabel, OrbitType};
use proptest::prelude::*;

fn valid_type() -> impl Strategy<Value = CartanType> {
    prop_oneof![
        (1usize..=8).prop_map(|r| CartanType::new(Family::A, r).unwrap()),
        (2usize..=8).prop_map(|r| CartanType::new(Family::B, r).unwrap()),
        (3usize..=8).prop_map(|r| CartanType::new(Family::C, r).unwrap()),
        (4usize..=8).prop_map(|r| CartanType::new(Family::D, r).unwrap()),
        (6usize..=8).prop_map(|r| CartanType::new(Family::E, r).unwrap()),
        Just(CartanType::F4),
        Just(CartanType::G2),
    ]
}

fn permuted(m: &CartanMatrix, perm: &[usize]) -> CartanMatrix {
    let rows = perm
        .iter()
        .map(|&i| perm.iter().map(|&j| m.get(i, j)).collect())
        .collect();
    CartanMatrix::from_rows(rows).unwrap()
}

fn exceptional() -> impl Strategy<Value = CartanType> {
    proptest::sample::select(CartanType::EXCEPTIONAL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn identify_round_trips(t in valid_type(), seed in any::<u64>()) {
        let n = t.rank();
        let mut perm: Vec<usize> = (0..n).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let m = permuted(&t.cartan_matrix(), &perm);
        prop_assert_eq!(identify_cartan_type(&m).unwrap(), t);
    }

    #[test]
    fn closure_is_idempotent(t in exceptional()) {
        let rs = RootSystem::new(t).unwrap();
        let again = reflection_closure(rs.cartan_matrix(), rs.roots(), 10 * rs.roots().len()).unwrap();
        prop_assert_eq!(again.as_slice(), rs.roots());
    }

    #[test]
    fn pairings_are_bounded(t in exceptional(), k in any::<prop::sample::Index>()) {
        let rs = RootSystem::new(t).unwrap();
        let beta = &rs.roots()[k.index(rs.roots().len())];
        for p in rs.simple_pairings(beta) {
            prop_assert!((-3..=3).contains(&p), "{beta}: {p}");
        }
    }

    #[test]
    fn alpha_0_pairs_nonpositively(t in exceptional()) {
        let rs = RootSystem::new(t).unwrap();
        let eb = rs.extended_basis();
        for alpha in rs.simple_roots() {
            prop_assert!(rs.pairing(eb.alpha_0(), &alpha) <= 0);
        }
        prop_assert!(eb.alpha_0().coeffs().iter().all(|&c| c < 0));
    }

    #[test]
    fn classification_partitions(dim in 0u32..6, nontrivial in any::<bool>(), ms in any::<bool>()) {
        let cg = if nontrivial { ComponentGroup::NonTrivial } else { ComponentGroup::Trivial };
        let t = classify(dim, cg, ms);
        prop_assert_eq!(t == OrbitType::III, dim == 0);
        prop_assert_eq!(t == OrbitType::I, dim > 0 && !nontrivial && ms);
        let v = h2_for(t, dim);
        prop_assert!(v.n() <= dim);
        prop_assert_eq!(v.is_exact(), t != OrbitType::II);
    }

    #[test]
    fn labels_round_trip(entries in prop::collection::vec(-MAX_ENTRY..=MAX_ENTRY, 1..9), split in any::<bool>()) {
        let label = OrbitLabel::new(entries);
        let text = label.render(split);
        prop_assert_eq!(OrbitLabel::parse(&text, label.len()).unwrap(), label);
    }
}
