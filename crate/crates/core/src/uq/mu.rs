//! Miyashita-Ulbrich actions of the diagonal corners on `U(mu,nu)`.

use super::checks::to_alg;
use super::{antipode_uq, delta_uq, expect_algebra, make_uq, param_text, uq_generators, uq_id};
use crate::error::Result;
use crate::freealg::{random_element, seeded_rng, NcPoly};
use crate::report::{Report, Tally};
use crate::scalar::Rational;

/// `x ⊳ y = x_(1) y S_{nu mu}(x_(2))` for `x` in `U(mu,mu)`, `y` in `U(mu,nu)`,
/// using `Delta^nu_{mu mu}`.
pub fn mu_action_left(mu: &Rational, nu: &Rational, x: &NcPoly, y: &NcPoly) -> Result<NcPoly> {
    expect_algebra(x.presentation(), &uq_id(mu, mu))?;
    expect_algebra(y.presentation(), &uq_id(mu, nu))?;
    let d = delta_uq(mu, mu, nu, x)?;
    let target = make_uq(mu, nu);
    let source = make_uq(nu, mu);
    let d = d.map_leg(1, &target, |w| antipode_uq(nu, mu, &NcPoly::word(&source, w.clone())?).map_err(to_alg))?;
    let mut acc = NcPoly::zero(&target);
    for (k, c) in d.terms() {
        let a = NcPoly::word(&target, k[0].clone())?;
        let b = NcPoly::word(&target, k[1].clone())?;
        acc = acc.add(&a.try_mul(y)?.try_mul(&b)?.scale(c));
    }
    Ok(acc)
}

/// `y ⊲ x = S_{nu mu}(x_(1)) y x_(2)` for `y` in `U(mu,nu)`, `x` in `U(nu,nu)`,
/// using `Delta^mu_{nu nu}`.
pub fn mu_action_right(mu: &Rational, nu: &Rational, y: &NcPoly, x: &NcPoly) -> Result<NcPoly> {
    expect_algebra(x.presentation(), &uq_id(nu, nu))?;
    expect_algebra(y.presentation(), &uq_id(mu, nu))?;
    let d = delta_uq(nu, nu, mu, x)?;
    let target = make_uq(mu, nu);
    let source = make_uq(nu, mu);
    let d = d.map_leg(0, &target, |w| antipode_uq(nu, mu, &NcPoly::word(&source, w.clone())?).map_err(to_alg))?;
    let mut acc = NcPoly::zero(&target);
    for (k, c) in d.terms() {
        let a = NcPoly::word(&target, k[0].clone())?;
        let b = NcPoly::word(&target, k[1].clone())?;
        acc = acc.add(&a.try_mul(y)?.try_mul(&b)?.scale(c));
    }
    Ok(acc)
}

/// Module-algebra and star laws of the left action:
/// `x ⊳ (yz) = (x_(1) ⊳ y)(x_(2) ⊳ z)` and `x ⊳ y* = ((S(x)*) ⊳ y)*`.
pub fn check_module_star(mu: &Rational, nu: &Rational, samples: usize, degree: usize, seed: u64) -> Report {
    let tag = format!("[{},{}]", param_text(mu), param_text(nu));
    let diag = make_uq(mu, mu);
    let corner = make_uq(mu, nu);
    let mut rng = seeded_rng(seed, &format!("module_star{tag}"));
    let mut cases = Vec::new();
    let gens_x: Vec<NcPoly> = std::iter::once(NcPoly::one(&diag)).chain(uq_generators(&diag)).collect();
    let gens_y: Vec<NcPoly> = std::iter::once(NcPoly::one(&corner)).chain(uq_generators(&corner)).collect();
    for x in &gens_x {
        for y in &gens_y {
            for z in &gens_y {
                cases.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    for _ in 0..samples {
        let x = random_element(&diag, degree, 2, &mut rng);
        let y = random_element(&corner, degree, 2, &mut rng);
        let z = random_element(&corner, degree, 2, &mut rng);
        if let (Ok(x), Ok(y), Ok(z)) = (x, y, z) {
            cases.push((x, y, z));
        }
    }
    let mut mult = Tally::new(format!("mu.module_algebra{tag}"));
    let mut star = Tally::new(format!("mu.module_star{tag}"));
    for (x, y, z) in &cases {
        let sides = (|| -> Result<(NcPoly, NcPoly)> {
            let lhs = mu_action_left(mu, nu, x, &y.try_mul(z)?)?;
            let d = delta_uq(mu, mu, mu, x)?;
            let mut rhs = NcPoly::zero(&corner);
            for (k, c) in d.terms() {
                let a = mu_action_left(mu, nu, &NcPoly::word(&diag, k[0].clone())?, y)?;
                let b = mu_action_left(mu, nu, &NcPoly::word(&diag, k[1].clone())?, z)?;
                rhs = rhs.add(&a.try_mul(&b)?.scale(c));
            }
            Ok((lhs, rhs))
        })();
        mult.record(|| format!("x = {}, y = {}, z = {}", x.render(), y.render(), z.render()), sides, NcPoly::render);
        let sides = (|| -> Result<(NcPoly, NcPoly)> {
            let lhs = mu_action_left(mu, nu, x, &y.star()?)?;
            let sx = antipode_uq(mu, mu, x)?.star()?;
            Ok((lhs, mu_action_left(mu, nu, &sx, y)?.star()?))
        })();
        star.record(|| format!("x = {}, y = {}", x.render(), y.render()), sides, NcPoly::render);
    }
    let mut report = Report::new();
    report.push(mult.finish());
    report.push(star.finish());
    report
}
