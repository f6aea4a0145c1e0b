use polarforms::forms::{index_tuples, PolyForm, PolyVectorField};
use polarforms::groups::ReflectionGroup;
use polarforms::invariants::{is_form_invariant, reynolds, reynolds_form};
use polarforms::parse::{parse_form, parse_poly};
use polarforms::{MatrixQ, Monomial, MultiPoly, Rational};
use polarforms::cartan::{cartan_d, EquivariantPool};
use polarforms::invariants::fundamental_invariants;
use polarforms::polar::{is_basic, lift_form, LiftData, LinearAction};
use polarforms::random;
use polarforms::solomon::decompose;
use proptest::prelude::*;
use std::sync::OnceLock;

const N: usize = 3;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(p, q))
}

fn poly(nvars: usize, max_deg: u32) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, nvars), rational()), 0..5).prop_map(
        move |terms| {
            let mut p = MultiPoly::zero(nvars);
            for (e, c) in terms {
                // keep total degree bounded
                let e: Vec<u32> = e.into_iter().map(|x| x.min(max_deg / 2 + 1)).collect();
                p.add_term(Monomial(e), &c);
            }
            p
        },
    )
}

fn form(nvars: usize, p: usize) -> impl Strategy<Value = PolyForm> {
    let tuples = index_tuples(nvars, p);
    let k = tuples.len();
    prop::collection::vec((0..k, poly(nvars, 3)), 0..3).prop_map(move |terms| {
        PolyForm::from_terms(nvars, p, terms.into_iter().map(|(i, c)| (tuples[i].clone(), c))).unwrap()
    })
}

fn any_form(nvars: usize) -> impl Strategy<Value = PolyForm> {
    (0..=nvars).prop_flat_map(move |p| form(nvars, p))
}

fn field(nvars: usize) -> impl Strategy<Value = PolyVectorField> {
    prop::collection::vec(poly(nvars, 2), nvars).prop_map(|c| PolyVectorField::new(c).unwrap())
}

fn matrix(n: usize) -> impl Strategy<Value = MatrixQ> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| MatrixQ::from_i64(n, n, &v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(N, 4), b in poly(N, 4), c in poly(N, 4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_round_trip(a in poly(N, 4), b in poly(N, 3)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(2, 3), b in poly(2, 3), s in prop::collection::vec(poly(2, 2), 2)) {
        prop_assert_eq!((&a * &b).substitute(&s).unwrap(), &a.substitute(&s).unwrap() * &b.substitute(&s).unwrap());
        prop_assert_eq!((&a + &b).substitute(&s).unwrap(), &a.substitute(&s).unwrap() + &b.substitute(&s).unwrap());
    }

    #[test]
    fn display_parse_round_trip(a in poly(N, 4)) {
        prop_assert_eq!(parse_poly(&a.to_string(), N).unwrap(), a);
    }

    #[test]
    fn form_display_parse_round_trip(w in any_form(N)) {
        // "0" carries no degree
        prop_assume!(!w.is_zero());
        prop_assert_eq!(parse_form(&w.to_string(), N).unwrap(), w);
    }

    #[test]
    fn d_squared_is_zero(w in any_form(N)) {
        prop_assert!(w.exterior_d().exterior_d().is_zero());
    }

    #[test]
    fn wedge_graded_commutative(a in any_form(N), b in any_form(N)) {
        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap();
        let sign = if (a.degree() * b.degree()) % 2 == 1 { -Rational::one() } else { Rational::one() };
        prop_assert_eq!(ab, ba.scale(&sign));
    }

    #[test]
    fn d_is_an_antiderivation(a in any_form(N), b in any_form(N)) {
        let lhs = a.wedge(&b).unwrap().exterior_d();
        let sign = if a.degree() % 2 == 1 { -Rational::one() } else { Rational::one() };
        let rhs = a.exterior_d().wedge(&b).unwrap()
            .checked_add(&a.wedge(&b.exterior_d()).unwrap().scale(&sign)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_derivative_commutes_with_d(w in any_form(N), v in field(N)) {
        prop_assert_eq!(
            w.exterior_d().lie_derivative(&v).unwrap(),
            w.lie_derivative(&v).unwrap().exterior_d()
        );
    }

    #[test]
    fn interior_squared_is_zero(w in (1..=N).prop_flat_map(|p| form(N, p)), v in field(N)) {
        prop_assume!(w.degree() >= 2);
        prop_assert!(w.interior(&v).unwrap().interior(&v).unwrap().is_zero());
    }

    #[test]
    fn pullback_commutes_with_d(w in any_form(2), phi in prop::collection::vec(poly(2, 2), 2)) {
        prop_assert_eq!(
            w.exterior_d().pullback(&phi).unwrap(),
            w.pullback(&phi).unwrap().exterior_d()
        );
    }

    #[test]
    fn linear_pullback_matches_general(w in any_form(N), m in matrix(N)) {
        let phi: Vec<MultiPoly> = (0..N).map(|i| MultiPoly::linear(m.row(i))).collect();
        prop_assert_eq!(w.pullback_linear(&m).unwrap(), w.pullback(&phi).unwrap());
    }

    #[test]
    fn reynolds_is_an_invariant_projection(a in poly(N, 4), w in any_form(N)) {
        let g = ReflectionGroup::builtin("S3".parse().unwrap()).unwrap();
        let r = reynolds(&g, &a).unwrap();
        prop_assert!(g.is_invariant(&r).unwrap());
        prop_assert_eq!(reynolds(&g, &r).unwrap(), r);
        let rw = reynolds_form(&g, &w).unwrap();
        prop_assert!(is_form_invariant(&g, &rw).unwrap());
        prop_assert_eq!(reynolds_form(&g, &rw).unwrap(), rw);
    }

    #[test]
    fn solomon_round_trip_b2(seed in any::<u64>(), p in 0usize..=2, deg in 0u32..=5) {
        let w = ReflectionGroup::builtin("B2".parse().unwrap()).unwrap();
        let f = fundamental_invariants(&w, 8).unwrap();
        let omega = random::invariant_form(&mut random::rng(seed), &w, p, deg).unwrap();
        prop_assert_eq!(decompose(&f, &omega).unwrap().reconstruct(), omega);
    }

    #[test]
    fn so2_lift_round_trip(seed in any::<u64>(), p in 0usize..=1, deg in 0u32..=6) {
        let (act, data) = so2();
        let omega = random::invariant_form(&mut random::rng(seed), act.weyl(), p, deg).unwrap();
        let lifted = lift_form(act, data, &omega).unwrap();
        prop_assert!(is_basic(act, &lifted).unwrap().basic);
        prop_assert_eq!(act.restrict(&lifted).unwrap(), omega);
    }

    #[test]
    fn cartan_d_squared(seed in any::<u64>(), q in 0usize..=4) {
        let (act, _) = so2();
        let pool = EquivariantPool::new(act, 2).unwrap();
        let a = random::equivariant_element(&mut random::rng(seed), act, &pool, q).unwrap();
        prop_assert!(cartan_d(act, &cartan_d(act, &a).unwrap()).unwrap().is_zero());
    }
}

fn so2() -> &'static (LinearAction, LiftData) {
    static CELL: OnceLock<(LinearAction, LiftData)> = OnceLock::new();
    CELL.get_or_init(|| {
        let act = LinearAction::so2();
        let data = LiftData::build(&act, 4).unwrap();
        (act, data)
    })
}
