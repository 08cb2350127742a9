//! The two-parameter family `U_q(mu, nu)`: presentations, generalized
//! coproducts, counit and antipodes.

mod checks;
mod colinking;
mod mu;

pub(crate) use checks::to_alg;
pub use checks::{
    check_antipode_identities, check_antipode_relations, check_coassociativity, check_counit_laws, check_delta_relations,
    check_flip_law, commutator_trace,
};
pub use colinking::{build_colinking, check_weak_hopf_axioms, CoLinkingSystem, HElem, HTensor};
pub use mu::{check_module_star, mu_action_left, mu_action_right};

use crate::error::{QgalError, Result};
use crate::freealg::{apply_hom, cached_presentation, HomMode, NcPoly, Presentation, TensorPoly};
use crate::scalar::{Rational, Scalar};
use std::sync::Arc;

/// A parameter pair `(mu, nu)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub mu: Rational,
    pub nu: Rational,
}

impl Label {
    pub fn new(mu: Rational, nu: Rational) -> Self {
        Label { mu, nu }
    }

    pub fn ints(mu: i64, nu: i64) -> Self {
        Label { mu: Rational::from_integer(mu.into()), nu: Rational::from_integer(nu.into()) }
    }
}

/// The standard parameter values `-1, 0, 1`.
pub fn standard_params() -> Vec<Rational> {
    (-1..=1).map(|k: i64| Rational::from_integer(k.into())).collect()
}

/// Text form of a parameter: `1`, `-1`, `1/2`.
pub fn param_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn uq_id(mu: &Rational, nu: &Rational) -> String {
    format!("Uq({},{})", param_text(mu), param_text(nu))
}

/// `U_q(mu, nu)` with generators `F < Ki < K < E` (`Ki` is `K^-1`), so the
/// normal monomials are `F^a K^b E^c` with `b` an integer.
pub fn make_uq(mu: &Rational, nu: &Rational) -> Arc<Presentation> {
    let id = uq_id(mu, nu);
    cached_presentation(&id, || {
        let q = Scalar::q();
        let qi = Scalar::q_pow(-1);
        let lam = Scalar::lambda();
        let lm = lam.mul(&Scalar::from_rational(mu));
        let ln = lam.mul(&Scalar::from_rational(nu)).neg();
        Presentation::builder(id.clone())
            .gen("F", 1)
            .gen("Ki", 1)
            .gen("K", 1)
            .gen("E", 1)
            .inverse_pair("K", "Ki")
            .rule(&["E", "F"], vec![(Scalar::one(), vec!["F", "E"]), (lm, vec!["K", "K"]), (ln, vec!["Ki", "Ki"])])
            .rule(&["E", "K"], vec![(qi.clone(), vec!["K", "E"])])
            .rule(&["E", "Ki"], vec![(q.clone(), vec!["Ki", "E"])])
            .rule(&["K", "F"], vec![(qi, vec!["F", "K"])])
            .rule(&["Ki", "F"], vec![(q, vec!["F", "Ki"])])
            .star("F", vec![(Scalar::one(), vec!["E"])])
            .star("Ki", vec![(Scalar::one(), vec!["Ki"])])
            .star("K", vec![(Scalar::one(), vec!["K"])])
            .star("E", vec![(Scalar::one(), vec!["F"])])
            .build()
    })
    .expect("U_q presentation")
}

pub(crate) fn expect_algebra(p: &Arc<Presentation>, expected: &str) -> Result<()> {
    if p.id().0 != expected {
        return Err(QgalError::WrongAlgebra { expected: expected.to_string(), found: p.id().to_string() });
    }
    Ok(())
}

/// The generators `E, F, K, Ki` of a `U_q` presentation, in that order.
pub fn uq_generators(pres: &Arc<Presentation>) -> [NcPoly; 4] {
    let g = |n| NcPoly::gen(pres, n).expect("U_q generator");
    [g("E"), g("F"), g("K"), g("Ki")]
}

/// `Delta^ups_{mu nu}: U(mu,nu) -> U(mu,ups) ⊗ U(ups,nu)`.
///
/// `Delta(F) = F⊗K + K^-1⊗F` is not part of the defining data; it is
/// forced by `Delta(F) = Delta(E*)*`.
pub fn delta_uq(mu: &Rational, nu: &Rational, ups: &Rational, p: &NcPoly) -> Result<TensorPoly> {
    expect_algebra(p.presentation(), &uq_id(mu, nu))?;
    let (images, unit) = delta_images(mu, nu, ups);
    Ok(apply_hom(p, &images, &unit, HomMode::Hom)?)
}

/// Generator images of `Delta^ups_{mu nu}` in presentation order, and the unit.
pub(crate) fn delta_images(mu: &Rational, nu: &Rational, ups: &Rational) -> (Vec<TensorPoly>, TensorPoly) {
    let left = make_uq(mu, ups);
    let right = make_uq(ups, nu);
    let l = |n| NcPoly::gen(&left, n).expect("generator");
    let r = |n| NcPoly::gen(&right, n).expect("generator");
    let t = |a: &NcPoly, b: &NcPoly| TensorPoly::outer(&[a, b]);
    let (e, f, k, ki) = (l("E"), l("F"), l("K"), l("Ki"));
    let (e2, f2, k2, ki2) = (r("E"), r("F"), r("K"), r("Ki"));
    // generator order F, Ki, K, E
    let images = vec![
        t(&f, &k2).add(&t(&ki, &f2)),
        t(&ki, &ki2),
        t(&k, &k2),
        t(&e, &k2).add(&t(&ki, &e2)),
    ];
    (images, TensorPoly::one(&[left, right]))
}

/// Counit on a single `U_q` word: grouplike letters give 1, `E` and `F` give 0.
pub(crate) fn counit_word(pres: &Presentation, w: &[u8]) -> Scalar {
    let e = pres.gen_index("E");
    let f = pres.gen_index("F");
    if w.iter().any(|&g| Some(g) == e || Some(g) == f) {
        Scalar::zero()
    } else {
        Scalar::one()
    }
}

/// `epsilon: U(mu,mu) -> Q(s)`.
pub fn counit_uq(mu: &Rational, p: &NcPoly) -> Result<Scalar> {
    let id = uq_id(mu, mu);
    if p.presentation().id().0 != id {
        return Err(QgalError::OffDiagonal(p.presentation().id().to_string()));
    }
    let pres = p.presentation();
    Ok(p.terms().iter().fold(Scalar::zero(), |acc, (w, c)| acc.add(&counit_word(pres, w).mul(c))))
}

/// `S_{mu nu}: U(mu,nu) -> U(nu,mu)`, anti-multiplicative.
pub fn antipode_uq(mu: &Rational, nu: &Rational, p: &NcPoly) -> Result<NcPoly> {
    expect_algebra(p.presentation(), &uq_id(mu, nu))?;
    let (images, unit) = antipode_images(mu, nu);
    Ok(apply_hom(p, &images, &unit, HomMode::AntiHom)?)
}

pub(crate) fn antipode_images(mu: &Rational, nu: &Rational) -> (Vec<NcPoly>, NcPoly) {
    let target = make_uq(nu, mu);
    let [e, f, k, ki] = uq_generators(&target);
    let images = vec![f.scale(&Scalar::q_pow(-1).neg()), k, ki, e.scale(&Scalar::q().neg())];
    (images, NcPoly::one(&target))
}

/// The inverse of `S_{mu nu}`, mapping `U(nu,mu)` back to `U(mu,nu)`.
pub fn antipode_inv_uq(mu: &Rational, nu: &Rational, p: &NcPoly) -> Result<NcPoly> {
    expect_algebra(p.presentation(), &uq_id(nu, mu))?;
    let target = make_uq(mu, nu);
    let [e, f, k, ki] = uq_generators(&target);
    let images = [f.scale(&Scalar::q().neg()), k, ki, e.scale(&Scalar::q_pow(-1).neg())];
    Ok(apply_hom(p, &images, &NcPoly::one(&target), HomMode::AntiHom)?)
}

/// `lambda (mu K^2 - nu K^-2)`, the value of `[E, F]`.
pub fn commutator_value(pres: &Arc<Presentation>, mu: &Rational, nu: &Rational) -> NcPoly {
    let [_, _, k, ki] = uq_generators(pres);
    let lam = Scalar::lambda();
    k.mul(&k)
        .scale(&lam.mul(&Scalar::from_rational(mu)))
        .sub(&ki.mul(&ki).scale(&lam.mul(&Scalar::from_rational(nu))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(k: i64) -> Rational {
        Rational::from_integer(k.into())
    }

    #[test]
    fn commutator_normal_form() {
        for mu in standard_params() {
            for nu in standard_params() {
                let p = make_uq(&mu, &nu);
                let [e, f, _, _] = uq_generators(&p);
                assert_eq!(e.commutator(&f).unwrap(), commutator_value(&p, &mu, &nu));
            }
        }
    }

    #[test]
    fn degenerate_pair_commutes() {
        let p = make_uq(&r(0), &r(0));
        let [e, f, _, _] = uq_generators(&p);
        assert!(e.commutator(&f).unwrap().is_zero());
    }

    #[test]
    fn coproduct_of_e() {
        let p = make_uq(&r(1), &r(-1));
        let [e, ..] = uq_generators(&p);
        let d = delta_uq(&r(1), &r(-1), &r(0), &e).unwrap();
        assert_eq!(d.render(), "(K^-1 ⊗ E) + (E ⊗ K)");
    }

    #[test]
    fn antipode_and_inverse_roundtrip() {
        let (mu, nu) = (r(1), r(0));
        let p = make_uq(&mu, &nu);
        let [e, f, k, _] = uq_generators(&p);
        let x = e.mul(&f).mul(&k).add(&f.scale(&Scalar::q()));
        let sx = antipode_uq(&mu, &nu, &x).unwrap();
        assert_eq!(sx.presentation().id().0, "Uq(0,1)");
        assert_eq!(antipode_inv_uq(&mu, &nu, &sx).unwrap(), x);
        assert_eq!(antipode_uq(&mu, &nu, &e).unwrap().render(), "-q*E");
    }

    #[test]
    fn counit_rejects_off_diagonal() {
        let p = make_uq(&r(1), &r(0));
        let [_, _, k, _] = uq_generators(&p);
        assert!(matches!(counit_uq(&r(1), &k), Err(QgalError::OffDiagonal(_))));
        let d = make_uq(&r(1), &r(1));
        let [e, _, k, _] = uq_generators(&d);
        assert!(counit_uq(&r(1), &k).unwrap().is_one());
        assert!(counit_uq(&r(1), &e).unwrap().is_zero());
    }

    #[test]
    fn wrong_source_algebra() {
        let p = make_uq(&r(1), &r(0));
        let [e, ..] = uq_generators(&p);
        assert!(matches!(delta_uq(&r(0), &r(1), &r(0), &e), Err(QgalError::WrongAlgebra { .. })));
    }
}
