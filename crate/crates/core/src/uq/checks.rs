use super::{
    antipode_images, antipode_uq, commutator_value, counit_word, delta_images, delta_uq, make_uq, param_text,
    uq_generators,
};
use crate::error::Result;
use crate::freealg::{relation_mismatch, HomMode, NcPoly, TensorPoly, Word};
use crate::report::{CheckEntry, Report, Witness};
use crate::scalar::{Rational, Scalar};

fn labels(vals: &[&Rational]) -> String {
    vals.iter().map(|v| param_text(v)).collect::<Vec<_>>().join(",")
}

fn relations_entry<T: PartialEq>(
    id: String,
    res: Result<Option<(String, T, T)>>,
    render: impl Fn(&T) -> String,
) -> CheckEntry {
    match res {
        Ok(None) => CheckEntry::pass(id),
        Ok(Some((rule, l, r))) => CheckEntry::fail(id, Witness { element: rule, lhs: render(&l), rhs: render(&r) }),
        Err(e) => CheckEntry::fail(id, Witness { element: "relations".into(), lhs: format!("error: {e}"), rhs: String::new() }),
    }
}

/// `Delta^ups_{mu nu}` respects every defining relation of `U(mu,nu)`.
pub fn check_delta_relations(mu: &Rational, nu: &Rational, ups: &Rational) -> Report {
    let pres = make_uq(mu, nu);
    let (images, unit) = delta_images(mu, nu, ups);
    let res = relation_mismatch(&pres, &images, &unit, HomMode::Hom).map_err(Into::into);
    let id = format!("hopf.delta_relations[{}]", labels(&[mu, nu, ups]));
    let mut r = Report::new();
    r.push(relations_entry(id, res, TensorPoly::render).with_note(format!("{} rules", pres.rules().len())));
    r
}

/// `S_{mu nu}` is a well-defined anti-homomorphism into `U(nu,mu)`.
pub fn check_antipode_relations(mu: &Rational, nu: &Rational) -> Report {
    let pres = make_uq(mu, nu);
    let (images, unit) = antipode_images(mu, nu);
    let res = relation_mismatch(&pres, &images, &unit, HomMode::AntiHom).map_err(Into::into);
    let mut r = Report::new();
    r.push(relations_entry(format!("hopf.antipode_relations[{}]", labels(&[mu, nu])), res, NcPoly::render));
    r
}

fn letters(k: &[Word]) -> Vec<Vec<u8>> {
    k.iter()
        .map(|w| {
            let mut w = w.clone();
            w.sort_unstable();
            w
        })
        .collect()
}

/// Expand `[Delta(E), Delta(F)]` without reducing, pair the eight raw terms
/// by the letters on each leg, and reduce pair by pair: the two mixed pairs
/// cancel, the two diagonal pairs give
/// `lambda(mu K^2 - ups K^-2) ⊗ K^2` and `K^-2 ⊗ lambda(ups K^2 - nu K^-2)`,
/// and their sum is `Delta(lambda(mu K^2 - nu K^-2))`.
pub fn commutator_trace(mu: &Rational, nu: &Rational, ups: &Rational) -> Report {
    let tag = labels(&[mu, nu, ups]);
    let mut report = Report::new();
    let (images, _) = delta_images(mu, nu, ups);
    let (d_f, d_e) = (&images[0], &images[3]);
    let comps = d_e.components().to_vec();
    let left = make_uq(mu, ups);
    let right = make_uq(ups, nu);
    let e_l = left.gen_index("E").unwrap();
    let f_l = left.gen_index("F").unwrap();

    let ef = d_e.mul_unreduced(d_f);
    let mut fe = d_f.mul_unreduced(d_e);
    let mut pairs = Vec::new();
    for (k, c) in ef {
        let sig = letters(&k);
        match fe.iter().position(|(k2, _)| letters(k2) == sig) {
            Some(i) => {
                let (k2, c2) = fe.swap_remove(i);
                pairs.push((k, c, k2, c2));
            }
            None => break,
        }
    }
    let paired = pairs.len() == 4 && fe.is_empty();
    let id = format!("hopf.commutator_trace.pairing[{tag}]");
    if !paired {
        report.push(CheckEntry::fail(
            id,
            Witness { element: "[Delta(E), Delta(F)]".into(), lhs: format!("{} pairs", pairs.len()), rhs: "4 pairs".into() },
        ));
        return report;
    }
    report.push(CheckEntry::pass(id).with_note("4 + 4 raw terms matched leg by leg"));

    let mut mixed = TensorPoly::zero(&comps);
    let mut diag_left = TensorPoly::zero(&comps);
    let mut diag_right = TensorPoly::zero(&comps);
    for (k, c, k2, c2) in &pairs {
        let diff = TensorPoly::from_terms(&comps, [(k.clone(), c.clone()), (k2.clone(), c2.neg())]).expect("reduce");
        let has_ef = |w: &Word| w.contains(&e_l) && w.contains(&f_l);
        if has_ef(&k[0]) {
            diag_left = diag_left.add(&diff);
        } else if has_ef(&k[1]) {
            diag_right = diag_right.add(&diff);
        } else {
            mixed = mixed.add(&diff);
        }
    }
    let zero = TensorPoly::zero(&comps);
    report.push(CheckEntry::compare(
        format!("hopf.commutator_trace.mixed[{tag}]"),
        "E K^-1 ⊗ K F - K^-1 E ⊗ F K + K^-1 F ⊗ E K - F K^-1 ⊗ K E",
        &mixed,
        &zero,
        TensorPoly::render,
    ));
    let [_, _, k_r, _] = uq_generators(&right);
    let [_, _, _, ki_l] = uq_generators(&left);
    let expect_left = TensorPoly::outer(&[&commutator_value(&left, mu, ups), &k_r.mul(&k_r)]);
    let expect_right = TensorPoly::outer(&[&ki_l.mul(&ki_l), &commutator_value(&right, ups, nu)]);
    report.push(CheckEntry::compare(
        format!("hopf.commutator_trace.left[{tag}]"),
        "(EF - FE) ⊗ KK",
        &diag_left,
        &expect_left,
        TensorPoly::render,
    ));
    report.push(CheckEntry::compare(
        format!("hopf.commutator_trace.right[{tag}]"),
        "K^-1 K^-1 ⊗ (EF - FE)",
        &diag_right,
        &expect_right,
        TensorPoly::render,
    ));
    let total = mixed.add(&diag_left).add(&diag_right);
    let target = delta_uq(mu, nu, ups, &commutator_value(&make_uq(mu, nu), mu, nu));
    report.push(CheckEntry::compare_result(
        format!("hopf.commutator_trace.total[{tag}]"),
        "Delta(EF - FE)",
        target.map(|t| (total, t)),
        TensorPoly::render,
    ));
    report
}

/// `(Delta^om_{mu ups} ⊗ id) Delta^ups_{mu nu} = (id ⊗ Delta^ups_{om nu}) Delta^om_{mu nu}`
/// on the generators of `U(mu,nu)`.
pub fn check_coassociativity(mu: &Rational, nu: &Rational, ups: &Rational, om: &Rational) -> Report {
    let pres = make_uq(mu, nu);
    let mut report = Report::new();
    let tag = labels(&[mu, nu, ups, om]);
    for g in uq_generators(&pres) {
        let sides = (|| -> Result<(TensorPoly, TensorPoly)> {
            let lhs = delta_uq(mu, nu, ups, &g)?
                .expand_leg(0, |w| delta_uq(mu, ups, om, &NcPoly::word(&make_uq(mu, ups), w.clone())?).map_err(to_alg))?;
            let rhs = delta_uq(mu, nu, om, &g)?
                .expand_leg(1, |w| delta_uq(om, nu, ups, &NcPoly::word(&make_uq(om, nu), w.clone())?).map_err(to_alg))?;
            Ok((lhs, rhs))
        })();
        report.push(CheckEntry::compare_result(
            format!("hopf.coassociativity[{tag}].{}", g.render()),
            g.render(),
            sides,
            TensorPoly::render,
        ));
    }
    report
}

pub(crate) fn to_alg(e: crate::error::QgalError) -> crate::freealg::FreeAlgError {
    match e {
        crate::error::QgalError::Algebra(a) => a,
        other => crate::freealg::FreeAlgError::Other(other.to_string()),
    }
}

/// The two antipode identities for `p` in `U(mu,mu)` through the corner
/// `U(mu,nu)`:
/// `S_{mu nu}(p_(1)) p_(2) = eps(p) 1` and `p_(1) S_{nu mu}(p_(2)) = eps(p) 1`.
pub fn check_antipode_identities(mu: &Rational, nu: &Rational, p: &NcPoly, id: &str) -> Report {
    let mut report = Report::new();
    let pres = p.presentation().clone();
    let eps = p.terms().iter().fold(Scalar::zero(), |a, (w, c)| a.add(&counit_word(&pres, w).mul(c)));
    let left = (|| -> Result<(NcPoly, NcPoly)> {
        let d = delta_uq(mu, mu, nu, p)?;
        let target = make_uq(nu, mu);
        let s = d.map_leg(0, &target, |w| antipode_uq(mu, nu, &NcPoly::word(&make_uq(mu, nu), w.clone())?).map_err(to_alg))?;
        Ok((s.multiply_out()?, NcPoly::constant(&target, eps.clone())))
    })();
    let right = (|| -> Result<(NcPoly, NcPoly)> {
        let d = delta_uq(mu, mu, nu, p)?;
        let target = make_uq(mu, nu);
        let s = d.map_leg(1, &target, |w| antipode_uq(nu, mu, &NcPoly::word(&make_uq(nu, mu), w.clone())?).map_err(to_alg))?;
        Ok((s.multiply_out()?, NcPoly::constant(&target, eps.clone())))
    })();
    let tag = labels(&[mu, nu]);
    report.push(CheckEntry::compare_result(format!("hopf.antipode_left[{tag}].{id}"), p.render(), left, NcPoly::render));
    report.push(CheckEntry::compare_result(format!("hopf.antipode_right[{tag}].{id}"), p.render(), right, NcPoly::render));
    report
}

/// `(eps ⊗ id) Delta(p) = p = (id ⊗ eps) Delta(p)` for `p` in `U(mu,mu)`.
pub fn check_counit_laws(mu: &Rational, p: &NcPoly, id: &str) -> Report {
    let mut report = Report::new();
    let sides = |leg: usize| -> Result<(NcPoly, NcPoly)> {
        let d = delta_uq(mu, mu, mu, p)?;
        let pres = make_uq(mu, mu);
        let c = d.contract_leg(leg, |w| Ok(counit_word(&pres, w)))?;
        Ok((c.into_single(), p.clone()))
    };
    let tag = param_text(mu);
    report.push(CheckEntry::compare_result(format!("hopf.counit_left[{tag}].{id}"), p.render(), sides(0), NcPoly::render));
    report.push(CheckEntry::compare_result(format!("hopf.counit_right[{tag}].{id}"), p.render(), sides(1), NcPoly::render));
    report
}

/// `(S_{mu ups} ⊗ S_{ups nu}) Delta^ups_{mu nu} = flip(Delta^ups_{nu mu} S_{mu nu})`
/// on generators.
pub fn check_flip_law(mu: &Rational, nu: &Rational, ups: &Rational) -> Report {
    let pres = make_uq(mu, nu);
    let mut report = Report::new();
    let tag = labels(&[mu, nu, ups]);
    for g in uq_generators(&pres) {
        let sides = (|| -> Result<(TensorPoly, TensorPoly)> {
            let d = delta_uq(mu, nu, ups, &g)?;
            let l = d
                .map_leg(0, &make_uq(ups, mu), |w| {
                    antipode_uq(mu, ups, &NcPoly::word(&make_uq(mu, ups), w.clone())?).map_err(to_alg)
                })?
                .map_leg(1, &make_uq(nu, ups), |w| {
                    antipode_uq(ups, nu, &NcPoly::word(&make_uq(ups, nu), w.clone())?).map_err(to_alg)
                })?;
            let r = delta_uq(nu, mu, ups, &antipode_uq(mu, nu, &g)?)?.flip();
            Ok((l, r))
        })();
        report.push(CheckEntry::compare_result(
            format!("hopf.flip_law[{tag}].{}", g.render()),
            g.render(),
            sides,
            TensorPoly::render,
        ));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(k: i64) -> Rational {
        Rational::from_integer(k.into())
    }

    #[test]
    fn trace_for_mixed_labels() {
        let rep = commutator_trace(&r(1), &r(-1), &r(0));
        assert_eq!(rep.len(), 5);
        assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    }

    #[test]
    fn antipode_on_e_vanishes() {
        let p = make_uq(&r(1), &r(1));
        let [e, ..] = uq_generators(&p);
        let rep = check_antipode_identities(&r(1), &r(-1), &e, "E");
        assert!(rep.all_passed(), "{:?}", rep);
    }

    #[test]
    fn flip_law_on_generators() {
        assert!(check_flip_law(&r(0), &r(1), &r(-1)).all_passed());
    }
}
