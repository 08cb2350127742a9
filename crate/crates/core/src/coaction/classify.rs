use super::make_gamma;
use crate::casimir::CasimirParams;
use crate::error::Result;
use crate::freealg::{apply_hom, relation_mismatch, HomMode, NcPoly, Word};
use crate::homspace::{b_generators, make_b};
use crate::report::{CheckEntry, Report, Witness};
use crate::scalar::{Rational, Scalar};
use num_traits::{One, Zero};

/// `theta` with `x -> theta x'`, `xs -> theta xs'`, `z -> theta z'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub theta: Rational,
}

/// `B(mu,nu;tau) ≅ B(mu,nu';tau')` iff `nu = nu'` and `tau = theta tau'`
/// for some `theta` in `{1,-1}` (`nu != 0`) or in the nonzero reals
/// (`nu = 0`).
pub fn classify_iso(nu: &Rational, tau: &Rational, nu2: &Rational, tau2: &Rational) -> Option<IsoWitness> {
    if nu != nu2 {
        return None;
    }
    let one = Rational::one();
    if nu.is_zero() {
        return match (tau.is_zero(), tau2.is_zero()) {
            (true, true) => Some(IsoWitness { theta: one }),
            (false, false) => Some(IsoWitness { theta: tau / tau2 }),
            _ => None,
        };
    }
    [one.clone(), -one].into_iter().find(|th| *tau == th * tau2).map(|theta| IsoWitness { theta })
}

fn scaled_generators(p: &CasimirParams, theta: &Rational) -> Vec<NcPoly> {
    let th = Scalar::from_rational(theta);
    b_generators(&make_b(p)).iter().map(|g| g.scale(&th)).collect()
}

/// Relations, both round trips and equivariance of the map `phi` given by
/// `theta` from `B(src)` to `B(dst)`. Returns the first failure.
pub(crate) fn iso_failure(src: &CasimirParams, dst: &CasimirParams, theta: &Rational) -> Result<Option<String>> {
    let (bs, bd) = (make_b(src), make_b(dst));
    let fwd = scaled_generators(dst, theta);
    let back = scaled_generators(src, &theta.recip());
    if let Some((rule, l, r)) = relation_mismatch(&bs, &fwd, &NcPoly::one(&bd), HomMode::Hom)? {
        return Ok(Some(format!("relation {rule}: {} != {}", l.render(), r.render())));
    }
    if let Some((rule, l, r)) = relation_mismatch(&bd, &back, &NcPoly::one(&bs), HomMode::Hom)? {
        return Ok(Some(format!("inverse relation {rule}: {} != {}", l.render(), r.render())));
    }
    for (g, img) in b_generators(&bs).iter().zip(&fwd) {
        let round = apply_hom(img, &back, &NcPoly::one(&bs), HomMode::Hom)?;
        if &round != g {
            return Ok(Some(format!("inverse on {}: {}", g.render(), round.render())));
        }
    }
    let (gs, gd) = (make_gamma(src)?, make_gamma(dst)?);
    for (i, img) in fwd.iter().enumerate() {
        let lhs = gd.apply(img)?;
        let rhs = gs.images[i].map_leg(0, &bd, |w: &Word| {
            apply_hom(&NcPoly::word(&bs, w.clone())?, &fwd, &NcPoly::one(&bd), HomMode::Hom)
        })?;
        if lhs != rhs {
            return Ok(Some(format!("equivariance on {}: {} != {}", bs.gen_name(i as u8), lhs.render(), rhs.render())));
        }
    }
    Ok(None)
}

/// Decision per the classification and, for positive cases, a verified
/// witness.
pub fn check_classification(src: &CasimirParams, dst: &CasimirParams) -> Report {
    let id = format!("classify.iso[{}~{}]", src.tag(), dst.tag());
    let mut r = Report::new();
    match classify_iso(&src.nu, &src.tau, &dst.nu, &dst.tau) {
        None => {
            let reason = if src.nu != dst.nu {
                "nu != nu'".to_string()
            } else if src.nu.is_zero() {
                "exactly one of tau, tau' vanishes".to_string()
            } else {
                "tau / tau' is not in {1, -1}".to_string()
            };
            r.push(CheckEntry::pass(id).with_note(format!("not isomorphic ({reason}); decision per classification")));
        }
        Some(w) => {
            let th = crate::uq::param_text(&w.theta);
            r.push(match iso_failure(src, dst, &w.theta) {
                Ok(None) => CheckEntry::pass(id).with_note(format!("theta = {th}")),
                Ok(Some(msg)) => CheckEntry::fail(id, Witness { element: format!("theta = {th}"), lhs: msg, rhs: String::new() }),
                Err(e) => CheckEntry::fail(id, Witness { element: format!("theta = {th}"), lhs: e.to_string(), rhs: String::new() }),
            });
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn r(n: i64) -> Rational {
        rat(n, 1)
    }

    #[test]
    fn examples() {
        assert_eq!(classify_iso(&r(-1), &r(1), &r(-1), &r(-1)), Some(IsoWitness { theta: r(-1) }));
        assert_eq!(classify_iso(&r(0), &r(2), &r(0), &r(3)), Some(IsoWitness { theta: rat(2, 3) }));
        assert_eq!(classify_iso(&r(1), &r(1), &r(-1), &r(1)), None);
        assert_eq!(classify_iso(&r(0), &r(0), &r(0), &r(0)), Some(IsoWitness { theta: r(1) }));
        assert_eq!(classify_iso(&r(1), &r(2), &r(1), &r(1)), None);
    }

    #[test]
    fn decision_matches_constructive_search() {
        // Try every theta in {1, -1, tau/tau'} and keep whichever maps verify.
        for mu in -1..=1 {
            for nu in -1..=1 {
                for nu2 in -1..=1 {
                    for tau in -2..=2 {
                        for tau2 in -2..=2 {
                            let src = CasimirParams::ints(mu, nu, tau);
                            let dst = CasimirParams::ints(mu, nu2, tau2);
                            let mut cands = vec![r(1), r(-1)];
                            if tau2 != 0 && tau != 0 {
                                cands.push(rat(tau, tau2));
                            }
                            let found = cands.iter().any(|th| iso_failure(&src, &dst, th).unwrap().is_none());
                            let decided = classify_iso(&r(nu), &r(tau), &r(nu2), &r(tau2)).is_some();
                            assert_eq!(found, decided, "{mu} {nu} {tau} -> {nu2} {tau2}");
                            assert!(check_classification(&src, &dst).all_passed());
                        }
                    }
                }
            }
        }
    }
}
