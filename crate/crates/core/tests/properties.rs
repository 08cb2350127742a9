//! Randomized algebraic invariants over the parameter grid.

use proptest::prelude::*;
use qgal::casimir::{casimir_element, CasimirForm, CasimirParams};
use qgal::coaction::gamma;
use qgal::freealg::{random_element, NcPoly, Presentation};
use qgal::homspace::{make_b, BAction};
use qgal::linalg::{rank, rank_exact};
use qgal::pairing::PairingTable;
use qgal::pol::{antipode_pol, counit_pol, delta_pol, make_pol, star_tensor, PolVariant};
use qgal::scalar::{Rational, Scalar};
use qgal::text::{parse_expression, parse_scalar, Context};
use qgal::uq::{antipode_inv_uq, antipode_uq, counit_uq, delta_uq, make_uq};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

fn r(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

fn elem(pres: &Arc<Presentation>, degree: usize, seed: u64) -> NcPoly {
    random_element(pres, degree, 3, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

fn label() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![-1i64, 0, 1])
}

fn params() -> impl Strategy<Value = CasimirParams> {
    (label(), label(), -2i64..=2).prop_map(|(m, n, t)| CasimirParams::ints(m, n, t))
}

fn real_variant() -> impl Strategy<Value = PolVariant> {
    prop::sample::select(PolVariant::REAL.to_vec())
}

fn any_variant() -> impl Strategy<Value = PolVariant> {
    prop::sample::select(PolVariant::ALL.to_vec())
}

fn context() -> impl Strategy<Value = Context> {
    prop_oneof![
        (label(), label()).prop_map(|(m, n)| Context::Uq(r(m), r(n))),
        params().prop_map(Context::A),
        params().prop_map(Context::B),
        params().prop_map(Context::D),
        any_variant().prop_map(Context::Pol),
    ]
}

/// `sum c_i s^k_i` with small integer data.
fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i64..=3, -3i32..=3), 1..4).prop_map(|ts| {
        ts.into_iter().fold(Scalar::zero(), |acc, (c, k)| acc.add(&Scalar::from_int(c).mul(&Scalar::s_pow(k))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn render_then_parse_is_identity(ctx in context(), seed in any::<u64>()) {
        let pres = ctx.presentation();
        let x = elem(&pres, 4, seed);
        prop_assert_eq!(parse_expression(&pres, &x.render()).unwrap(), x);
    }

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if !b.is_zero() {
            prop_assert_eq!(a.div(&b).unwrap().mul(&b), a.clone());
        }
        prop_assert_eq!(parse_scalar(&a.render()).unwrap(), a);
    }

    #[test]
    fn star_is_an_antimultiplicative_involution(ctx in context(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let pres = ctx.presentation();
        prop_assume!(pres.star_table().is_some());
        let (x, y) = (elem(&pres, 3, s1), elem(&pres, 3, s2));
        prop_assert_eq!(x.star().unwrap().star().unwrap(), x.clone());
        prop_assert_eq!(x.mul(&y).star().unwrap(), y.star().unwrap().mul(&x.star().unwrap()));
    }

    #[test]
    fn uq_coproduct_is_multiplicative(m in label(), n in label(), u in label(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let (mu, nu, ups) = (r(m), r(n), r(u));
        let pres = make_uq(&mu, &nu);
        let (x, y) = (elem(&pres, 3, s1), elem(&pres, 3, s2));
        let lhs = delta_uq(&mu, &nu, &ups, &x.mul(&y)).unwrap();
        let rhs = delta_uq(&mu, &nu, &ups, &x).unwrap().mul(&delta_uq(&mu, &nu, &ups, &y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn uq_antipode_reverses_products_and_inverts(m in label(), n in label(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let (mu, nu) = (r(m), r(n));
        let pres = make_uq(&mu, &nu);
        let (x, y) = (elem(&pres, 3, s1), elem(&pres, 3, s2));
        let s = |p: &NcPoly| antipode_uq(&mu, &nu, p).unwrap();
        prop_assert_eq!(s(&x.mul(&y)), s(&y).mul(&s(&x)));
        prop_assert_eq!(antipode_inv_uq(&mu, &nu, &s(&x)).unwrap(), x);
    }

    #[test]
    fn uq_counit_is_a_two_sided_unit(m in label(), seed in any::<u64>()) {
        let mu = r(m);
        let pres = make_uq(&mu, &mu);
        let x = elem(&pres, 4, seed);
        let d = delta_uq(&mu, &mu, &mu, &x).unwrap();
        let eps = |w: &Vec<u8>| Ok(counit_uq(&mu, &NcPoly::word(&pres, w.clone()).unwrap()).unwrap());
        prop_assert_eq!(d.contract_leg(0, eps).unwrap().into_single(), x.clone());
        prop_assert_eq!(d.contract_leg(1, eps).unwrap().into_single(), x.clone());
        let e = counit_uq(&mu, &x).unwrap();
        prop_assert_eq!(counit_uq(&mu, &x.mul(&x)).unwrap(), e.mul(&e));
    }

    #[test]
    fn casimir_is_central(m in label(), n in label(), seed in any::<u64>()) {
        let (mu, nu) = (r(m), r(n));
        let c = casimir_element(&mu, &nu, CasimirForm::EF);
        let x = elem(&make_uq(&mu, &nu), 3, seed);
        prop_assert_eq!(c.mul(&x), x.mul(&c));
    }

    #[test]
    fn pol_hopf_laws(v in any_variant(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let pres = make_pol(v);
        let (x, y) = (elem(&pres, 3, s1), elem(&pres, 3, s2));
        let xy = x.mul(&y);
        prop_assert_eq!(delta_pol(v, &xy).unwrap(), delta_pol(v, &x).unwrap().mul(&delta_pol(v, &y).unwrap()));
        prop_assert_eq!(counit_pol(v, &xy).unwrap(), counit_pol(v, &x).unwrap().mul(&counit_pol(v, &y).unwrap()));
        prop_assert_eq!(antipode_pol(v, &xy).unwrap(), antipode_pol(v, &y).unwrap().mul(&antipode_pol(v, &x).unwrap()));
        if v != PolVariant::Sl2c {
            let d = delta_pol(v, &x).unwrap();
            prop_assert_eq!(delta_pol(v, &x.star().unwrap()).unwrap(), star_tensor(v, &d).unwrap());
        }
    }

    #[test]
    fn pairing_is_dual(v in real_variant(), s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let t = PairingTable::standard(v).unwrap();
        let mu = t.mu();
        let (up, pol) = (make_uq(&mu, &mu), make_pol(v));
        let (x, y) = (elem(&up, 2, s1), elem(&up, 2, s2));
        let (p, p2) = (elem(&pol, 2, s3), elem(&pol, 2, s1 ^ s2));
        prop_assert_eq!(t.pair(&x.mul(&y), &p).unwrap(), t.pair_tensor(&x, &y, &delta_pol(v, &p).unwrap()).unwrap());
        let dx = delta_uq(&mu, &mu, &mu, &x).unwrap();
        prop_assert_eq!(t.pair(&x, &p.mul(&p2)).unwrap(), t.pair_u_tensor(&dx, &p, &p2).unwrap());
    }

    #[test]
    fn action_is_a_left_module(p in params(), s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let up = make_uq(&p.mu, &p.mu);
        let (x, y) = (elem(&up, 2, s1), elem(&up, 2, s2));
        let b = elem(&make_b(&p), 2, s3);
        let mut act = BAction::new(&p);
        let inner = act.act(&y, &b).unwrap();
        prop_assert_eq!(act.act(&x.mul(&y), &b).unwrap(), act.act(&x, &inner).unwrap());
    }

    #[test]
    fn coaction_is_multiplicative_and_counital(p in params(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let pres = make_b(&p);
        let (x, y) = (elem(&pres, 2, s1), elem(&pres, 2, s2));
        let g = |e: &NcPoly| gamma(&p, e).unwrap();
        prop_assert_eq!(g(&x.mul(&y)), g(&x).mul(&g(&y)));
        let v = PolVariant::from_mu(&p.mu).unwrap();
        let pol = make_pol(v);
        let eps = |w: &Vec<u8>| Ok(counit_pol(v, &NcPoly::word(&pol, w.clone()).unwrap()).unwrap());
        prop_assert_eq!(g(&x).contract_leg(1, eps).unwrap().into_single(), x);
    }

    #[test]
    fn modular_rank_agrees_with_exact(rows in prop::collection::vec(prop::collection::vec(scalar(), 4), 1..5), seed in any::<u64>()) {
        let (k, _) = rank(&rows, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(k, rank_exact(&rows));
    }
}
