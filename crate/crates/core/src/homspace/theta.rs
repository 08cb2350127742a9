//! The mirror algebra `D(mu,nu;tau)` and the anti-isomorphism
//! `Theta = pi o S_{nu mu}` from `B(nu,mu;tau)` into `A(mu,nu;tau)`.

use super::{b_generators, embed_b_in_a, make_b, x_scale, BAction, UGen};
use crate::casimir::{casimir_element, lift, make_quotient, project, quotient_action_right, CasimirForm, CasimirParams};
use crate::error::Result;
use crate::freealg::{apply_hom, cached_presentation, random_element, relation_mismatch, seeded_rng, HomMode, NcPoly, Presentation};
use crate::report::{CheckEntry, Report, Tally, Witness};
use crate::scalar::Scalar;
use crate::uq::{antipode_inv_uq, antipode_uq, make_uq, uq_generators};
use std::sync::Arc;

pub fn d_id(p: &CasimirParams) -> String {
    format!("D({})", p.tag())
}

/// `D(mu,nu;tau)` on `z < x < xs`: the opposite algebra of `B(nu,mu;tau)`,
/// presented abstractly.
pub fn make_d(p: &CasimirParams) -> Arc<Presentation> {
    let id = d_id(p);
    cached_presentation(&id, || {
        let q2 = Scalar::q_pow(2);
        let mu = Scalar::from_rational(&p.mu);
        let nu = Scalar::from_rational(&p.nu);
        let tau = Scalar::from_rational(&p.tau);
        Presentation::builder(id.clone())
            .gen("z", 1)
            .gen("x", 2)
            .gen("xs", 2)
            .rule(&["x", "z"], vec![(Scalar::q_pow(-2), vec!["z", "x"])])
            .rule(&["xs", "z"], vec![(q2.clone(), vec!["z", "xs"])])
            .rule(
                &["x", "xs"],
                vec![(q2.mul(&mu).neg(), vec![]), (tau.clone(), vec!["z"]), (nu.neg(), vec!["z", "z"])],
            )
            .rule(
                &["xs", "x"],
                vec![
                    (q2.mul(&mu).neg(), vec![]),
                    (q2.mul(&tau), vec!["z"]),
                    (Scalar::q_pow(4).mul(&nu).neg(), vec!["z", "z"]),
                ],
            )
            .build()
    })
    .expect("D presentation")
}

fn swapped(p: &CasimirParams) -> CasimirParams {
    CasimirParams::new(p.nu.clone(), p.mu.clone(), p.tau.clone())
}

/// `Theta(x), Theta(xs), Theta(z)` in `A(mu,nu;tau)`.
pub fn theta_images(p: &CasimirParams) -> Vec<NcPoly> {
    let a = make_quotient(p);
    let [e, f, _, ki] = uq_generators(&a);
    let c = x_scale();
    vec![
        ki.mul(&f).scale(&c.mul(&Scalar::q_pow(-1)).neg()),
        e.mul(&ki).scale(&c.mul(&Scalar::q()).neg()),
        ki.mul(&ki),
    ]
}

/// `Theta(b)` for `b` in `B(nu,mu;tau)`.
pub fn theta(p: &CasimirParams, b: &NcPoly) -> Result<NcPoly> {
    crate::uq::expect_algebra(b.presentation(), &super::b_id(&swapped(p)))?;
    let a = make_quotient(p);
    Ok(apply_hom(b, &theta_images(p), &NcPoly::one(&a), HomMode::AntiHom)?)
}

/// `pi_{mu nu}(S_{nu mu}(lift(b)))`, the definition of `Theta` on a lift.
fn theta_via_lift(p: &CasimirParams, b: &NcPoly) -> Result<NcPoly> {
    let pr = swapped(p);
    let up = lift(&pr, &embed_b_in_a(&pr, b)?)?;
    project(p, &antipode_uq(&p.nu, &p.mu, &up)?)
}

fn mismatch_entry(id: String, res: std::result::Result<Option<(String, NcPoly, NcPoly)>, crate::freealg::FreeAlgError>, note: &str) -> CheckEntry {
    match res {
        Ok(None) => CheckEntry::pass(id).with_note(note),
        Ok(Some((rule, l, r))) => CheckEntry::fail(id, Witness { element: rule, lhs: l.render(), rhs: r.render() }),
        Err(e) => CheckEntry::fail(id, Witness { element: note.into(), lhs: format!("error: {e}"), rhs: String::new() }),
    }
}

/// Antipode on the Casimir, well-definedness, agreement with the lift
/// formula, the `D` relations, the star identity and covariance.
pub fn check_theta(p: &CasimirParams, samples: usize, degree: usize, seed: u64) -> Report {
    let tag = format!("[{}]", p.tag());
    let pr = swapped(p);
    let bnm = make_b(&pr);
    let a = make_quotient(p);
    let images = theta_images(p);
    let mut r = Report::new();

    let c_nm = casimir_element(&p.nu, &p.mu, CasimirForm::EF);
    r.push(CheckEntry::compare_result(
        format!("theta.antipode_casimir{tag}"),
        "S(C)",
        antipode_uq(&p.nu, &p.mu, &c_nm).map(|s| (s, casimir_element(&p.mu, &p.nu, CasimirForm::EF))),
        NcPoly::render,
    ));
    r.push(mismatch_entry(
        format!("theta.well_defined{tag}"),
        relation_mismatch(&bnm, &images, &NcPoly::one(&a), HomMode::AntiHom),
        "4 relations",
    ));
    let d = make_d(p);
    let d_images = vec![images[2].clone(), images[0].clone(), images[1].clone()];
    debug_assert_eq!(d.gen_name(0), "z");
    r.push(mismatch_entry(
        format!("theta.d_relations{tag}"),
        relation_mismatch(&d, &d_images, &NcPoly::one(&a), HomMode::Hom),
        "4 relations",
    ));

    let mut rng = seeded_rng(seed, &format!("theta{tag}"));
    let mut elems: Vec<NcPoly> = b_generators(&bnm).into_iter().collect();
    for _ in 0..samples {
        if let Ok(y) = random_element(&bnm, degree, 2, &mut rng) {
            elems.push(y);
        }
    }

    let mut agree = Tally::new(format!("theta.lift_agreement{tag}"));
    for y in &elems {
        let sides = (|| -> Result<(NcPoly, NcPoly)> { Ok((theta(p, y)?, theta_via_lift(p, y)?)) })();
        agree.record(|| y.render(), sides, NcPoly::render);
    }
    r.push(agree.finish());

    let mut star = Tally::new(format!("theta.star{tag}"));
    for y in &elems {
        let sides = (|| -> Result<(NcPoly, NcPoly)> {
            let up = lift(&pr, &embed_b_in_a(&pr, y)?)?;
            let lhs = project(p, &antipode_uq(&p.nu, &p.mu, &up.star()?)?)?;
            let rhs = project(p, &antipode_inv_uq(&p.mu, &p.nu, &up)?.star()?)?;
            let direct = theta(p, &y.star()?)?;
            if direct != lhs {
                return Ok((direct, lhs));
            }
            Ok((lhs, rhs))
        })();
        star.record(|| y.render(), sides, NcPoly::render);
    }
    r.push(star.finish());

    let diag = make_uq(&p.nu, &p.nu);
    let mut act = BAction::new(&pr);
    let mut cov = Tally::new(format!("theta.covariance{tag}"));
    for (g, ug) in uq_generators(&diag).iter().zip([UGen::E, UGen::F, UGen::K, UGen::Ki]) {
        for y in &elems {
            let sides = (|| -> Result<(NcPoly, NcPoly)> {
                let lhs = theta(p, &act.act_gen(ug, y)?)?;
                let sg = antipode_uq(&p.nu, &p.nu, g)?;
                Ok((lhs, quotient_action_right(p, &theta(p, y)?, &sg)?))
            })();
            cov.record(|| format!("{} ⊳ {}", g.render(), y.render()), sides, NcPoly::render);
        }
    }
    r.push(cov.finish());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn images_in_normal_form() {
        let p = CasimirParams::ints(1, -1, 1);
        let [x, _, z] = theta_images(&p).try_into().unwrap();
        assert_eq!(z.render(), "K^-2");
        assert_eq!(x.len(), 1);
        let b = make_b(&swapped(&p));
        let [bx, _, _] = b_generators(&b);
        assert_eq!(theta(&p, &bx).unwrap(), theta_via_lift(&p, &bx).unwrap());
    }

    #[test]
    fn all_theta_checks() {
        for (mu, nu, tau) in [(1, -1, 2), (0, 1, -1), (-1, 0, 0)] {
            let rep = check_theta(&CasimirParams::ints(mu, nu, tau), 3, 2, 4);
            assert!(rep.all_passed(), "{:#?}", rep.failures().collect::<Vec<_>>());
        }
    }
}
