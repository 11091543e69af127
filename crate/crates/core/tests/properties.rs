use proptest::prelude::*;

use skewgroth::grothendieck::{g_schur, G_schur};
use skewgroth::noncomm::expand_sg;
use skewgroth::oracle::eval_symfunc;
use skewgroth::serialize::{expansion_from_json, expansion_to_json, symfunc_from_json, symfunc_to_json};
use skewgroth::{BetaPoly, Partition, SkewShape, SymFunc};

const D: usize = 6;

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::sample::select(Partition::all_up_to(max))
}

fn coefficient() -> impl Strategy<Value = BetaPoly> {
    (-4i64..=4, 0usize..3).prop_map(|(c, e)| BetaPoly::int_monomial(c, e))
}

fn symfunc(max: usize) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((partition(max), coefficient()), 0..4).prop_map(|t| SymFunc::from_terms(t, D))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_commutative(a in symfunc(4), b in symfunc(4)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_is_associative(a in symfunc(3), b in symfunc(3), c in symfunc(3)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes(a in symfunc(3), b in symfunc(3), c in symfunc(3)) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn perp_is_adjoint_to_multiplication(mu in partition(3), nu in partition(3), f in partition(D)) {
        prop_assume!(mu.size() + nu.size() <= D);
        let basis = SymFunc::schur(&f, D);
        let lhs = basis.perp_schur(&mu).hall_inner(&SymFunc::schur(&nu, D)).unwrap();
        let product = SymFunc::schur(&mu, D).mul(&SymFunc::schur(&nu, D));
        let rhs = basis.hall_inner(&product).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn perps_compose_as_products(a in partition(2), b in partition(2), f in symfunc(D)) {
        let twice = f.perp_schur(&a).perp_schur(&b);
        let once = f.perp(&SymFunc::schur(&a, D).mul(&SymFunc::schur(&b, D)));
        prop_assert!(twice.agrees_to_degree(&once, D - a.size() - b.size()));
    }

    #[test]
    fn evaluation_is_multiplicative(a in symfunc(3), b in symfunc(3), m in 1usize..=3) {
        let lhs = eval_symfunc(&a.mul(&b), m);
        let rhs = eval_symfunc(&a, m).mul(&eval_symfunc(&b, m)).truncate_degree(D as u32);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn grothendieck_at_beta_zero_is_schur(lam in partition(5)) {
        let zero = num_rational::BigRational::from_integer(0.into());
        prop_assert_eq!(G_schur(&lam, D).eval_beta(&zero), SymFunc::schur(&lam, D));
        let dual = g_schur(&lam).eval_beta(&zero);
        let schur = SymFunc::schur(&lam, lam.size());
        prop_assert_eq!(dual.terms(), schur.terms());
    }

    #[test]
    fn symfunc_json_round_trips(f in symfunc(5)) {
        prop_assert_eq!(symfunc_from_json(&symfunc_to_json(&f), D).unwrap(), f);
    }

    #[test]
    fn expansion_json_round_trips(nu in partition(2), lam in partition(3)) {
        for mu in lam.subpartitions() {
            let e = expand_sg(&nu, &lam, &mu, lam.len() + nu.len()).unwrap();
            prop_assert_eq!(expansion_from_json(&expansion_to_json(&e)).unwrap(), e);
        }
    }

    #[test]
    fn shape_strings_round_trip(lam in partition(6)) {
        for mu in lam.subpartitions() {
            let s = SkewShape::new(lam.clone(), mu).unwrap();
            prop_assert_eq!(s.to_string().parse::<SkewShape>().unwrap(), s);
        }
        prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam);
    }
}
