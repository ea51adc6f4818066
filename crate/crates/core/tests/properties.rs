use std::sync::Arc;

use galjac_core::center::{central_induce, CentralElement};
use galjac_core::chartab::{adams, restrict, CharacterTable};
use galjac_core::corpus::{family_groups, local_data, HigherGroups};
use galjac_core::grp::{all_subgroups, FiniteGroup};
use galjac_core::Cyclotomic;
use num_integer::Integer;
use proptest::prelude::*;

/// Σ c_k·ζ_n^k over a few roots, with small integer numerators and a small
/// common denominator.
fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (1u64..=24, prop::collection::vec((0i64..24, -3i64..=3), 0..5), 1i64..=4).prop_map(|(n, terms, den)| {
        let s: Cyclotomic = terms
            .into_iter()
            .map(|(k, c)| Cyclotomic::root_of_unity(n, k) * Cyclotomic::from_integer(c))
            .sum();
        s.checked_div(&Cyclotomic::from_integer(den)).unwrap()
    })
}

fn small_groups() -> &'static [Arc<FiniteGroup>] {
    use std::sync::OnceLock;
    static GROUPS: OnceLock<Vec<Arc<FiniteGroup>>> = OnceLock::new();
    GROUPS.get_or_init(|| family_groups(16).unwrap())
}

fn group() -> impl Strategy<Value = Arc<FiniteGroup>> {
    (0..small_groups().len()).prop_map(|i| small_groups()[i].clone())
}

fn element(t: &Arc<CharacterTable>, seed: &[(i64, i64)]) -> CentralElement {
    // a + b·i with a ≠ 0 is never zero, so the element is a unit
    let coeffs = (0..t.len())
        .map(|i| {
            let (a, b) = seed[i % seed.len()];
            let a = if a == 0 { 1 } else { a };
            Cyclotomic::from_integer(a) + Cyclotomic::zeta(4) * Cyclotomic::from_integer(b)
        })
        .collect();
    CentralElement::new(t, coeffs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a - &a, Cyclotomic::zero());
    }

    #[test]
    fn nonzero_values_invert(a in cyclotomic()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn galois_action_is_a_ring_automorphism(a in cyclotomic(), b in cyclotomic(), k in 1i64..200) {
        let n = a.order().lcm(&b.order());
        prop_assume!((k as u64).gcd(&n) == 1);
        let s = |x: &Cyclotomic| x.galois_act(k).unwrap();
        prop_assert_eq!(s(&(&a + &b)), s(&a) + s(&b));
        prop_assert_eq!(s(&(&a * &b)), s(&a) * s(&b));
        prop_assert_eq!(a.galois_act(-1).unwrap(), a.conj());
    }

    #[test]
    fn text_form_round_trips(a in cyclotomic()) {
        let back: Cyclotomic = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn power_classes_are_periodic(g in group(), k in -40i64..40) {
        let cd = g.conjugacy();
        let e = g.exponent() as i64;
        for c in 0..cd.len() {
            prop_assert_eq!(cd.power_class(c, k), cd.power_class(c, k + e));
            prop_assert_eq!(cd.power_class(c, k), cd.class_of(g.pow(cd.rep(c), k)));
        }
    }

    #[test]
    fn adams_operations_compose(g in group(), k in 1i64..8, l in 1i64..8) {
        let t = CharacterTable::new(&g).unwrap();
        for chi in t.irreducibles() {
            prop_assert_eq!(adams(&adams(chi, k), l), adams(chi, k * l));
        }
    }

    #[test]
    fn central_evaluation_is_multiplicative(
        g in group(),
        s1 in prop::collection::vec((-3i64..=3, 0i64..4), 1..6),
        s2 in prop::collection::vec((-3i64..=3, 0i64..4), 1..6),
        i in 0usize..64,
        j in 0usize..64,
    ) {
        let t = Arc::new(CharacterTable::new(&g).unwrap());
        let (x, y) = (element(&t, &s1), element(&t, &s2));
        let xy = x.mul(&y).unwrap();
        let (a, b) = (t.get(i % t.len()), t.get(j % t.len()));
        let f = a + b;
        prop_assert_eq!(xy.eval(&f).unwrap(), x.eval(&f).unwrap() * y.eval(&f).unwrap());
        prop_assert_eq!(x.eval(&f).unwrap(), x.eval(a).unwrap() * x.eval(b).unwrap());
    }

    #[test]
    fn central_induction_is_multiplicative(
        g in group(),
        pick in 0usize..1000,
        s1 in prop::collection::vec((-3i64..=3, 0i64..4), 1..6),
        s2 in prop::collection::vec((-3i64..=3, 0i64..4), 1..6),
    ) {
        let t = Arc::new(CharacterTable::new(&g).unwrap());
        let subs = all_subgroups(&g);
        let h = &subs[pick % subs.len()];
        let ht = Arc::new(CharacterTable::new(h.group()).unwrap());
        let (x, y) = (element(&ht, &s1), element(&ht, &s2));
        let lhs = central_induce(&x.mul(&y).unwrap(), h, &t).unwrap();
        let rhs = central_induce(&x, h, &t).unwrap().mul(&central_induce(&y, h, &t).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // transitivity through the whole group is the identity
        let whole = galjac_core::grp::Subgroup::whole(&g);
        let z = element(&t, &s1);
        let back = central_induce(&z, &whole, &t).unwrap();
        for c in 0..t.len() {
            prop_assert_eq!(back.coeff(c), z.coeff(c));
        }
        // restriction of the trivial character picks up x at the trivial character of H
        let res = restrict(t.get(0), h).unwrap();
        prop_assert_eq!(x.eval(&res).unwrap(), central_induce(&x, h, &t).unwrap().coeff(0).clone());
    }

    #[test]
    fn different_valuation_is_even_exactly_when_a_square_root_exists(g in group(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let t = Arc::new(CharacterTable::new(&g).unwrap());
        for d in local_data(&t, p, HigherGroups::Minimal, 1).unwrap() {
            let ord = d.different_valuation() as i64;
            prop_assert_eq!(d.sqrt_inv_different(), (ord % 2 == 0).then_some(-ord / 2));
            let mult: Cyclotomic = d.twisted_y().unwrap().coeffs().iter().cloned().product();
            prop_assert!(!mult.is_zero());
        }
    }
}
