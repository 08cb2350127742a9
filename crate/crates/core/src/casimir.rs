//! Casimir elements and the quotients `A(mu,nu;tau)` obtained by fixing
//! their value.

use crate::error::Result;
use crate::freealg::{apply_hom, cached_presentation, random_element, seeded_rng, HomMode, NcPoly, Presentation};
use crate::report::{CheckEntry, Report, Tally};
use crate::scalar::{Rational, Scalar};
use crate::uq::{
    antipode_uq, delta_uq, make_uq, mu_action_left, mu_action_right, param_text, uq_generators, uq_id,
};
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CasimirParams {
    pub mu: Rational,
    pub nu: Rational,
    pub tau: Rational,
}

impl CasimirParams {
    pub fn new(mu: Rational, nu: Rational, tau: Rational) -> Self {
        CasimirParams { mu, nu, tau }
    }

    pub fn ints(mu: i64, nu: i64, tau: i64) -> Self {
        let r = |k: i64| Rational::from_integer(k.into());
        CasimirParams { mu: r(mu), nu: r(nu), tau: r(tau) }
    }

    pub fn tag(&self) -> String {
        format!("{},{};{}", param_text(&self.mu), param_text(&self.nu), param_text(&self.tau))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CasimirForm {
    EF,
    FE,
}

/// `EF + lambda^2 (q^-1 mu K^2 + q nu K^-2)` or
/// `FE + lambda^2 (q mu K^2 + q^-1 nu K^-2)` in `U(mu,nu)`.
pub fn casimir_element(mu: &Rational, nu: &Rational, form: CasimirForm) -> NcPoly {
    let pres = make_uq(mu, nu);
    let [e, f, k, ki] = uq_generators(&pres);
    let l2 = Scalar::lambda().pow(2).expect("lambda");
    let (lead, ck, cki) = match form {
        CasimirForm::EF => (e.mul(&f), Scalar::q_pow(-1), Scalar::q()),
        CasimirForm::FE => (f.mul(&e), Scalar::q(), Scalar::q_pow(-1)),
    };
    let ck = l2.mul(&ck).mul(&Scalar::from_rational(mu));
    let cki = l2.mul(&cki).mul(&Scalar::from_rational(nu));
    lead.add(&k.mul(&k).scale(&ck)).add(&ki.mul(&ki).scale(&cki))
}

/// Both forms agree, the element is self-adjoint and commutes with every
/// generator.
pub fn check_central(mu: &Rational, nu: &Rational) -> Report {
    let tag = format!("[{},{}]", param_text(mu), param_text(nu));
    let c = casimir_element(mu, nu, CasimirForm::EF);
    let c2 = casimir_element(mu, nu, CasimirForm::FE);
    let mut r = Report::new();
    r.push(CheckEntry::compare(format!("casimir.forms_equal{tag}"), "C", &c, &c2, NcPoly::render));
    r.push(CheckEntry::compare_result(
        format!("casimir.self_adjoint{tag}"),
        "C",
        c.star().map(|s| (s, c.clone())),
        NcPoly::render,
    ));
    let zero = NcPoly::zero(c.presentation());
    for g in uq_generators(c.presentation()) {
        r.push(CheckEntry::compare_result(
            format!("casimir.central{tag}.{}", g.render()),
            format!("C*{0} - {0}*C", g.render()),
            c.commutator(&g).map(|d| (d, zero.clone())),
            NcPoly::render,
        ));
    }
    r
}

pub fn a_id(p: &CasimirParams) -> String {
    format!("A({})", p.tag())
}

/// `A(mu,nu;tau)`: `U(mu,nu)` modulo `C = tau q^-1 lambda^2`. Generators are
/// ordered `Ki < K < F < E`, so normal monomials are `K^b F^a` and `K^b E^c`.
pub fn make_quotient(p: &CasimirParams) -> Arc<Presentation> {
    let id = a_id(p);
    cached_presentation(&id, || {
        let q = Scalar::q();
        let qi = Scalar::q_pow(-1);
        let l2 = Scalar::lambda().pow(2).expect("lambda");
        let mu = Scalar::from_rational(&p.mu);
        let nu = Scalar::from_rational(&p.nu);
        let c0 = Scalar::from_rational(&p.tau).mul(&qi).mul(&l2);
        let m = |a: &Scalar, b: &Scalar| l2.mul(a).mul(b).neg();
        Presentation::builder(id.clone())
            .gen("Ki", 1)
            .gen("K", 1)
            .gen("F", 1)
            .gen("E", 1)
            .inverse_pair("K", "Ki")
            .rule(&["F", "K"], vec![(q.clone(), vec!["K", "F"])])
            .rule(&["F", "Ki"], vec![(qi.clone(), vec!["Ki", "F"])])
            .rule(&["E", "K"], vec![(qi.clone(), vec!["K", "E"])])
            .rule(&["E", "Ki"], vec![(q.clone(), vec!["Ki", "E"])])
            .rule(
                &["E", "F"],
                vec![(c0.clone(), vec![]), (m(&qi, &mu), vec!["K", "K"]), (m(&q, &nu), vec!["Ki", "Ki"])],
            )
            .rule(&["F", "E"], vec![(c0, vec![]), (m(&q, &mu), vec!["K", "K"]), (m(&qi, &nu), vec!["Ki", "Ki"])])
            .star("Ki", vec![(Scalar::one(), vec!["Ki"])])
            .star("K", vec![(Scalar::one(), vec!["K"])])
            .star("F", vec![(Scalar::one(), vec!["E"])])
            .star("E", vec![(Scalar::one(), vec!["F"])])
            .build()
    })
    .expect("quotient presentation")
}

fn by_name(from: &Presentation, to: &Arc<Presentation>) -> Vec<NcPoly> {
    from.generators().iter().map(|g| NcPoly::gen(to, &g.name).expect("shared generator names")).collect()
}

/// The quotient map `pi_tau: U(mu,nu) -> A(mu,nu;tau)`.
pub fn project(p: &CasimirParams, x: &NcPoly) -> Result<NcPoly> {
    crate::uq::expect_algebra(x.presentation(), &uq_id(&p.mu, &p.nu))?;
    let a = make_quotient(p);
    let images = by_name(x.presentation(), &a);
    Ok(apply_hom(x, &images, &NcPoly::one(&a), HomMode::Hom)?)
}

/// The lift of an element of `A` that keeps each normal word.
pub fn lift(p: &CasimirParams, y: &NcPoly) -> Result<NcPoly> {
    crate::uq::expect_algebra(y.presentation(), &a_id(p))?;
    let u = make_uq(&p.mu, &p.nu);
    let images = by_name(y.presentation(), &u);
    let mut acc = NcPoly::zero(&u);
    for (w, c) in y.terms() {
        let mut m = NcPoly::one(&u);
        for &g in w {
            m = m.try_mul(&images[g as usize])?;
        }
        acc = acc.add(&m.scale(c));
    }
    Ok(acc)
}

/// The left action of `U(mu,mu)` on `A`, computed on a lift.
pub fn quotient_action(p: &CasimirParams, x: &NcPoly, y: &NcPoly) -> Result<NcPoly> {
    project(p, &mu_action_left(&p.mu, &p.nu, x, &lift(p, y)?)?)
}

/// The right action of `U(nu,nu)` on `A`, computed on a lift.
pub fn quotient_action_right(p: &CasimirParams, y: &NcPoly, x: &NcPoly) -> Result<NcPoly> {
    project(p, &mu_action_right(&p.mu, &p.nu, &lift(p, y)?, x)?)
}

/// `C - tau q^-1 lambda^2` in `U(mu,nu)`.
pub fn casimir_shift(p: &CasimirParams) -> NcPoly {
    let c = casimir_element(&p.mu, &p.nu, CasimirForm::EF);
    let l2 = Scalar::lambda().pow(2).expect("lambda");
    let c0 = Scalar::from_rational(&p.tau).mul(&Scalar::q_pow(-1)).mul(&l2);
    c.sub(&NcPoly::constant(c.presentation(), c0))
}

/// Quotient identities, lift independence of the action and the
/// module-algebra laws in `A`.
pub fn check_quotient(p: &CasimirParams, samples: usize, degree: usize, seed: u64) -> Report {
    let tag = format!("[{}]", p.tag());
    let mut r = Report::new();
    let a = make_quotient(p);
    let u = make_uq(&p.mu, &p.nu);
    let [e, f, k, _] = uq_generators(&u);
    let l2 = Scalar::lambda().pow(2).expect("lambda");
    let c0 = Scalar::from_rational(&p.tau).mul(&Scalar::q_pow(-1)).mul(&l2);
    let [_, _, ka, kia] = uq_generators(&a);
    let expected_ef = NcPoly::constant(&a, c0)
        .sub(&ka.mul(&ka).scale(&l2.mul(&Scalar::q_pow(-1)).mul(&Scalar::from_rational(&p.mu))))
        .sub(&kia.mul(&kia).scale(&l2.mul(&Scalar::q()).mul(&Scalar::from_rational(&p.nu))));
    r.push(CheckEntry::compare_result(
        format!("casimir.quotient_ef{tag}"),
        "pi(EF)",
        project(p, &e.mul(&f)).map(|x| (x, expected_ef)),
        NcPoly::render,
    ));
    r.push(CheckEntry::compare_result(
        format!("casimir.quotient_kills_shift{tag}"),
        "pi(C - tau q^-1 lambda^2)",
        project(p, &casimir_shift(p)).map(|x| (x, NcPoly::zero(&a))),
        NcPoly::render,
    ));
    // two lifts of pi(FK) differing by (C - c0) K
    let diag = make_uq(&p.mu, &p.mu);
    let [ed, fd, kd, kid] = uq_generators(&diag);
    let lift1 = f.mul(&k);
    let lift2 = lift1.add(&casimir_shift(p).mul(&k));
    let mut indep = Tally::new(format!("casimir.lift_independence{tag}"));
    for x in [&ed, &fd, &kd, &kid] {
        let sides = (|| -> Result<(NcPoly, NcPoly)> {
            let a1 = project(p, &mu_action_left(&p.mu, &p.nu, x, &lift1)?)?;
            let a2 = project(p, &mu_action_left(&p.mu, &p.nu, x, &lift2)?)?;
            Ok((a1, a2))
        })();
        indep.record(|| format!("{} acting on FK", x.render()), sides, NcPoly::render);
    }
    r.push(indep.finish());

    let mut rng = seeded_rng(seed, &format!("quotient{tag}"));
    let mut cases = Vec::new();
    let basics: Vec<NcPoly> = std::iter::once(NcPoly::one(&a)).chain(uq_generators(&a)).collect();
    for y in &basics {
        for z in &basics {
            cases.push((y.clone(), z.clone()));
        }
    }
    for _ in 0..samples {
        if let (Ok(y), Ok(z)) = (random_element(&a, degree, 2, &mut rng), random_element(&a, degree, 2, &mut rng)) {
            cases.push((y, z));
        }
    }
    let mut mult = Tally::new(format!("casimir.quotient_module_algebra{tag}"));
    let mut star = Tally::new(format!("casimir.quotient_module_star{tag}"));
    for x in [&ed, &fd, &kd, &kid] {
        for (y, z) in &cases {
            let sides = (|| -> Result<(NcPoly, NcPoly)> {
                let lhs = quotient_action(p, x, &y.try_mul(z)?)?;
                let d = delta_uq(&p.mu, &p.mu, &p.mu, x)?;
                let mut rhs = NcPoly::zero(&a);
                for (kk, c) in d.terms() {
                    let l = quotient_action(p, &NcPoly::word(&diag, kk[0].clone())?, y)?;
                    let m = quotient_action(p, &NcPoly::word(&diag, kk[1].clone())?, z)?;
                    rhs = rhs.add(&l.try_mul(&m)?.scale(c));
                }
                Ok((lhs, rhs))
            })();
            mult.record(|| format!("x = {}, y = {}, z = {}", x.render(), y.render(), z.render()), sides, NcPoly::render);
            let sides = (|| -> Result<(NcPoly, NcPoly)> {
                let lhs = quotient_action(p, x, &y.star()?)?;
                let sx = antipode_uq(&p.mu, &p.mu, x)?.star()?;
                Ok((lhs, quotient_action(p, &sx, y)?.star()?))
            })();
            star.record(|| format!("x = {}, y = {}", x.render(), y.render()), sides, NcPoly::render);
        }
    }
    r.push(mult.finish());
    r.push(star.finish());
    r
}
