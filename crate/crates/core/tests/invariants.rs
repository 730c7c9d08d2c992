use proptest::prelude::*;
use starconf::decomp::symbolic_in_power;
use starconf::star::{skeleton_ideal, symbolic_member, symbolic_power, wk_ideal};
use starconf::{minimalize, ExponentTuple, Limits, MonomialIdeal, StarConfig};

fn tuple(arity: usize, max: u32) -> impl Strategy<Value = ExponentTuple> {
    prop::collection::vec(0..=max, arity).prop_map(ExponentTuple::new)
}

fn ideal(arity: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(tuple(arity, 3), 1..6).prop_map(move |ts| minimalize(arity, ts).unwrap())
}

fn star() -> impl Strategy<Value = StarConfig> {
    (2usize..=5)
        .prop_flat_map(|s| (Just(s), 1..s))
        .prop_map(|(s, c)| StarConfig::new(s, c).unwrap())
}

proptest! {
    #[test]
    fn intersection_is_membership_and(a in ideal(3), b in ideal(3), mu in tuple(3, 5)) {
        let both = a.intersect(&b).unwrap();
        prop_assert_eq!(
            both.member(&mu).unwrap(),
            a.member(&mu).unwrap() && b.member(&mu).unwrap()
        );
    }

    #[test]
    fn minimalize_is_idempotent(a in ideal(4)) {
        let again = minimalize(4, a.gens().to_vec()).unwrap();
        prop_assert_eq!(&again, &a);
        for (i, g) in a.gens().iter().enumerate() {
            for (j, h) in a.gens().iter().enumerate() {
                prop_assert!(i == j || !g.divides(h).unwrap());
            }
        }
    }

    #[test]
    fn powers_multiply(a in ideal(3), p in 0u32..3, q in 0u32..3) {
        prop_assert_eq!(a.power(p + q), a.power(p).multiply(&a.power(q)).unwrap());
        if p > 0 {
            prop_assert_eq!(a.power(p).alpha().unwrap(), p * a.alpha().unwrap());
        }
    }

    #[test]
    fn symbolic_generators_are_minimal_members(cfg in star(), l in 1u32..5) {
        let sym = symbolic_power(&cfg, l).unwrap();
        for g in sym.gens() {
            prop_assert!(symbolic_member(g, &cfg, l).unwrap());
            for i in 0..cfg.s() {
                if g.exps()[i] > 0 {
                    let mut e = g.exps().to_vec();
                    e[i] -= 1;
                    prop_assert!(!symbolic_member(&ExponentTuple::new(e), &cfg, l).unwrap());
                }
            }
        }
    }

    #[test]
    fn symbolic_contains_ordinary(cfg in star(), l in 1u32..4) {
        let sym = symbolic_power(&cfg, l).unwrap();
        prop_assert!(sym.contains(&skeleton_ideal(&cfg).power(l)).unwrap());
        let alpha = sym.alpha().unwrap();
        let omega = sym.omega().unwrap();
        prop_assert!(alpha <= omega);
        prop_assert!(omega <= l * cfg.initial_degree());
    }

    #[test]
    fn containment_is_monotone_in_m(m in 1u32..8, r in 1u32..4) {
        let cfg = StarConfig::new(4, 2).unwrap();
        let lim = Limits::default();
        if symbolic_in_power(&cfg, m, r, &lim).unwrap() {
            prop_assert!(symbolic_in_power(&cfg, m + 1, r, &lim).unwrap());
        }
    }

    #[test]
    fn chain_descends(s in 3usize..=5, l in 1u32..3, k in 0usize..5) {
        prop_assume!(k < s);
        let here = wk_ideal(s, l, k).unwrap();
        let next = wk_ideal(s, l, k + 1).unwrap();
        prop_assert!(here.contains(&next).unwrap());
    }
}
