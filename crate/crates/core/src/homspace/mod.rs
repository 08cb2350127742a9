//! The quantum homogeneous spaces `B(mu,nu;tau)`: presentation, embedding
//! into the Casimir quotient, the action of `U(mu,mu)`, a faithful-enough
//! truncated representation and the mirror algebra `D`.

mod theta;
mod vrep;

pub use theta::{check_theta, d_id, make_d, theta, theta_images};
pub use vrep::{build_v_rep, check_v_rep, TruncatedVRep, VVector};

use crate::casimir::{make_quotient, quotient_action, CasimirParams};
use crate::error::{QgalError, Result};
use crate::freealg::{
    apply_hom, cached_presentation, random_element, relation_mismatch, seeded_rng, HomMode, NcPoly, Presentation,
};
use crate::report::{CheckEntry, Report, Tally, Witness};
use crate::scalar::Scalar;
use crate::uq::{antipode_uq, delta_uq, make_uq, uq_generators};
use std::collections::HashMap;
use std::sync::Arc;

pub fn b_id(p: &CasimirParams) -> String {
    format!("B({})", p.tag())
}

/// `B(mu,nu;tau)` on `x < xs < z` (weights 2, 2, 1); normal monomials are
/// `x^k z^m` and `xs^k z^m`.
pub fn make_b(p: &CasimirParams) -> Arc<Presentation> {
    let id = b_id(p);
    cached_presentation(&id, || {
        let q2 = Scalar::q_pow(2);
        let q4 = Scalar::q_pow(4);
        let mu = Scalar::from_rational(&p.mu);
        let nu = Scalar::from_rational(&p.nu);
        let tau = Scalar::from_rational(&p.tau);
        Presentation::builder(id.clone())
            .gen("x", 2)
            .gen("xs", 2)
            .gen("z", 1)
            .rule(&["z", "x"], vec![(Scalar::q_pow(-2), vec!["x", "z"])])
            .rule(&["z", "xs"], vec![(q2.clone(), vec!["xs", "z"])])
            .rule(
                &["xs", "x"],
                vec![(q2.mul(&nu).neg(), vec![]), (tau.clone(), vec!["z"]), (mu.neg(), vec!["z", "z"])],
            )
            .rule(
                &["x", "xs"],
                vec![(q2.mul(&nu).neg(), vec![]), (q2.mul(&tau), vec!["z"]), (q4.mul(&mu).neg(), vec!["z", "z"])],
            )
            .star("x", vec![(Scalar::one(), vec!["xs"])])
            .star("xs", vec![(Scalar::one(), vec!["x"])])
            .star("z", vec![(Scalar::one(), vec!["z"])])
            .build()
    })
    .expect("B presentation")
}

/// `[x, xs, z]` of a `B` or `D` presentation.
pub fn b_generators(pres: &Arc<Presentation>) -> [NcPoly; 3] {
    let g = |n| NcPoly::gen(pres, n).expect("B generator");
    [g("x"), g("xs"), g("z")]
}

/// `s (q^-1 - q)`, the normalisation of the embedded `x`.
pub(crate) fn x_scale() -> Scalar {
    Scalar::s().mul(&Scalar::q_pow(-1).sub(&Scalar::q()))
}

/// Images of `x, xs, z` in `A`: `s(q^-1 - q) FK`, `s(q^-1 - q) KE`, `K^2`.
pub fn embedding_images(p: &CasimirParams) -> Vec<NcPoly> {
    let a = make_quotient(p);
    let [e, f, k, _] = uq_generators(&a);
    let c = x_scale();
    vec![f.mul(&k).scale(&c), k.mul(&e).scale(&c), k.mul(&k)]
}

pub fn embed_b_in_a(p: &CasimirParams, b: &NcPoly) -> Result<NcPoly> {
    crate::uq::expect_algebra(b.presentation(), &b_id(p))?;
    let a = make_quotient(p);
    Ok(apply_hom(b, &embedding_images(p), &NcPoly::one(&a), HomMode::Hom)?)
}

/// The generator of `U(mu,mu)` acting, by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UGen {
    E,
    F,
    K,
    Ki,
}

impl UGen {
    pub const ALL: [UGen; 4] = [UGen::E, UGen::F, UGen::K, UGen::Ki];

    pub fn name(self) -> &'static str {
        match self {
            UGen::E => "E",
            UGen::F => "F",
            UGen::K => "K",
            UGen::Ki => "Ki",
        }
    }

    pub fn from_name(name: &str) -> Option<UGen> {
        UGen::ALL.into_iter().find(|g| g.name() == name)
    }
}

/// The closed-form action of `U(mu,mu)` on `B`, extended from the generator
/// table by `E ⊳ uv = (E ⊳ u)(K ⊳ v) + (K^-1 ⊳ u)(E ⊳ v)` and likewise for `F`.
pub struct BAction {
    pres: Arc<Presentation>,
    table: HashMap<(UGen, u8), NcPoly>,
    memo: HashMap<(UGen, Vec<u8>), NcPoly>,
}

impl BAction {
    pub fn new(p: &CasimirParams) -> Self {
        let pres = make_b(p);
        let [x, xs, z] = b_generators(&pres);
        let one = NcPoly::one(&pres);
        let s = Scalar::s();
        let si = Scalar::s_pow(-1);
        let mu = Scalar::from_rational(&p.mu);
        let tau = Scalar::from_rational(&p.tau);
        // tau - (1 + q^2) mu z
        let shift = one.scale(&tau).sub(&z.scale(&Scalar::one().add(&Scalar::q_pow(2)).mul(&mu)));
        let zero = NcPoly::zero(&pres);
        let ix = pres.gen_index("x").unwrap();
        let ixs = pres.gen_index("xs").unwrap();
        let iz = pres.gen_index("z").unwrap();
        let mut table = HashMap::new();
        table.insert((UGen::E, ix), shift.scale(&s));
        table.insert((UGen::E, iz), xs.scale(&si));
        table.insert((UGen::E, ixs), zero.clone());
        table.insert((UGen::F, ix), zero);
        table.insert((UGen::F, iz), x.scale(&Scalar::s_pow(-3).neg()));
        table.insert((UGen::F, ixs), shift.scale(&si.neg()));
        table.insert((UGen::K, ix), x.scale(&Scalar::q_pow(-1)));
        table.insert((UGen::K, iz), z.clone());
        table.insert((UGen::K, ixs), xs.scale(&Scalar::q()));
        table.insert((UGen::Ki, ix), x.scale(&Scalar::q()));
        table.insert((UGen::Ki, iz), z);
        table.insert((UGen::Ki, ixs), xs.scale(&Scalar::q_pow(-1)));
        BAction { pres, table, memo: HashMap::new() }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    /// `g ⊳ w` for a word `w`.
    pub fn act_word(&mut self, g: UGen, w: &[u8]) -> Result<NcPoly> {
        if w.is_empty() {
            return Ok(match g {
                UGen::E | UGen::F => NcPoly::zero(&self.pres),
                UGen::K | UGen::Ki => NcPoly::one(&self.pres),
            });
        }
        if w.len() == 1 {
            return Ok(self.table[&(g, w[0])].clone());
        }
        if let Some(r) = self.memo.get(&(g, w.to_vec())) {
            return Ok(r.clone());
        }
        let head = &w[..1];
        let rest = &w[1..];
        let out = match g {
            UGen::K | UGen::Ki => self.act_word(g, head)?.try_mul(&self.act_word(g, rest)?)?,
            UGen::E | UGen::F => {
                let a = self.act_word(g, head)?.try_mul(&self.act_word(UGen::K, rest)?)?;
                let b = self.act_word(UGen::Ki, head)?.try_mul(&self.act_word(g, rest)?)?;
                a.add(&b)
            }
        };
        self.memo.insert((g, w.to_vec()), out.clone());
        Ok(out)
    }

    pub fn act_gen(&mut self, g: UGen, b: &NcPoly) -> Result<NcPoly> {
        let mut acc = NcPoly::zero(&self.pres);
        for (w, c) in b.terms() {
            acc = acc.add(&self.act_word(g, w)?.scale(c));
        }
        Ok(acc)
    }

    /// `x ⊳ b` for any `x` in `U(mu,mu)`.
    pub fn act(&mut self, x: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
        let xp = x.presentation().clone();
        let mut acc = NcPoly::zero(&self.pres);
        for (w, c) in x.terms() {
            let mut v = b.clone();
            for &g in w.iter().rev() {
                let ug = UGen::from_name(xp.gen_name(g))
                    .ok_or_else(|| QgalError::InvalidParams(format!("unexpected generator {}", xp.gen_name(g))))?;
                v = self.act_gen(ug, &v)?;
            }
            acc = acc.add(&v.scale(c));
        }
        Ok(acc)
    }
}

pub fn action_on_b(p: &CasimirParams, x: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
    crate::uq::expect_algebra(x.presentation(), &crate::uq::uq_id(&p.mu, &p.mu))?;
    crate::uq::expect_algebra(b.presentation(), &b_id(p))?;
    BAction::new(p).act(x, b)
}

/// The embedding respects all five relations (four rewriting rules and
/// `z* = z`) and intertwines the stars on generators.
pub fn check_embedding(p: &CasimirParams) -> Report {
    let tag = format!("[{}]", p.tag());
    let b = make_b(p);
    let a = make_quotient(p);
    let images = embedding_images(p);
    let mut r = Report::new();
    let id = format!("homspace.embedding_relations{tag}");
    match relation_mismatch(&b, &images, &NcPoly::one(&a), HomMode::Hom) {
        Ok(None) => {
            let z = &images[2];
            r.push(CheckEntry::compare_result(id, "z* = z", z.star().map(|s| (s, z.clone())), NcPoly::render).with_note("5 relations"))
        }
        Ok(Some((rule, l, rr))) => r.push(CheckEntry::fail(id, Witness { element: rule, lhs: l.render(), rhs: rr.render() })),
        Err(e) => r.push(CheckEntry::fail(id, Witness { element: "relations".into(), lhs: e.to_string(), rhs: String::new() })),
    }
    let mut star = Tally::new(format!("homspace.embedding_star{tag}"));
    for g in b_generators(&b) {
        let sides = (|| -> Result<(NcPoly, NcPoly)> {
            Ok((embed_b_in_a(p, &g.star()?)?, embed_b_in_a(p, &g)?.star()?))
        })();
        star.record(|| g.render(), sides, NcPoly::render);
    }
    r.push(star.finish());
    r
}

/// The closed-form table agrees with the descended action on every
/// generator pair; module-algebra, star and quotient-route agreement on
/// random elements; the K-grading of the basis.
pub fn check_action_consistency(p: &CasimirParams, samples: usize, degree: usize, seed: u64) -> Report {
    let tag = format!("[{}]", p.tag());
    let mut r = Report::new();
    let bp = make_b(p);
    let diag = make_uq(&p.mu, &p.mu);
    let mut act = BAction::new(p);
    let ugens = uq_generators(&diag);
    let ug_of = |i: usize| [UGen::E, UGen::F, UGen::K, UGen::Ki][i];
    for (gi, g) in ugens.iter().enumerate() {
        for b in b_generators(&bp) {
            let sides = (|| -> Result<(NcPoly, NcPoly)> {
                let table = embed_b_in_a(p, &act.act_gen(ug_of(gi), &b)?)?;
                let route = quotient_action(p, g, &embed_b_in_a(p, &b)?)?;
                Ok((table, route))
            })();
            r.push(CheckEntry::compare_result(
                format!("homspace.action_table{tag}.{}>{}", g.render(), b.render()),
                format!("{} ⊳ {}", g.render(), b.render()),
                sides,
                NcPoly::render,
            ));
        }
    }

    let mut rng = seeded_rng(seed, &format!("homspace{tag}"));
    let mut elems = Vec::new();
    for _ in 0..samples {
        if let (Ok(y), Ok(z)) = (random_element(&bp, degree, 2, &mut rng), random_element(&bp, degree, 2, &mut rng)) {
            elems.push((y, z));
        }
    }
    let mut mult = Tally::new(format!("homspace.module_algebra{tag}"));
    let mut star = Tally::new(format!("homspace.module_star{tag}"));
    let mut route = Tally::new(format!("homspace.action_quotient_route{tag}"));
    for (y, z) in &elems {
        for (gi, g) in ugens.iter().enumerate() {
            let ug = ug_of(gi);
            let sides = (|| -> Result<(NcPoly, NcPoly)> {
                let lhs = act.act_gen(ug, &y.try_mul(z)?)?;
                let d = delta_uq(&p.mu, &p.mu, &p.mu, g)?;
                let mut rhs = NcPoly::zero(&bp);
                for (k, c) in d.terms() {
                    let l = act.act(&NcPoly::word(&diag, k[0].clone())?, y)?;
                    let m = act.act(&NcPoly::word(&diag, k[1].clone())?, z)?;
                    rhs = rhs.add(&l.try_mul(&m)?.scale(c));
                }
                Ok((lhs, rhs))
            })();
            mult.record(|| format!("x = {}, y = {}, z = {}", g.render(), y.render(), z.render()), sides, NcPoly::render);
            let sides = (|| -> Result<(NcPoly, NcPoly)> {
                let lhs = act.act_gen(ug, &y.star()?)?;
                let sx = antipode_uq(&p.mu, &p.mu, g)?.star()?;
                Ok((lhs, act.act(&sx, y)?.star()?))
            })();
            star.record(|| format!("x = {}, y = {}", g.render(), y.render()), sides, NcPoly::render);
            let sides = (|| -> Result<(NcPoly, NcPoly)> {
                Ok((embed_b_in_a(p, &act.act_gen(ug, y)?)?, quotient_action(p, g, &embed_b_in_a(p, y)?)?))
            })();
            route.record(|| format!("{} ⊳ {}", g.render(), y.render()), sides, NcPoly::render);
        }
    }
    r.push(mult.finish());
    r.push(star.finish());
    r.push(route.finish());

    let mut grading = Tally::new(format!("homspace.k_grading{tag}"));
    let [x, xs, z] = b_generators(&bp);
    for k in 0..=6u32 {
        for m in 0..=6u32 {
            let zm = z.pow(m).expect("pow");
            for (base, exp) in [(&x, -(k as i32)), (&xs, k as i32)] {
                let mono = base.pow(k).expect("pow").mul(&zm);
                let sides = act.act_gen(UGen::K, &mono).map(|l| (l, mono.scale(&Scalar::q_pow(exp))));
                grading.record(|| mono.render(), sides, NcPoly::render);
            }
        }
    }
    r.push(grading.finish());
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::check_rule_confluence;

    #[test]
    fn relations_normal_forms() {
        let p = CasimirParams::ints(1, -1, 2);
        let b = make_b(&p);
        let [x, xs, z] = b_generators(&b);
        let nu = Scalar::from_int(-1);
        let expected = NcPoly::constant(&b, Scalar::q_pow(2).mul(&nu).neg())
            .add(&z.scale(&Scalar::from_int(2)))
            .sub(&z.mul(&z));
        assert_eq!(xs.mul(&x), expected);
        let diff = x.mul(&xs).sub(&xs.mul(&x));
        let expect = z
            .scale(&Scalar::q_pow(2).sub(&Scalar::one()).scale_int(2))
            .sub(&z.mul(&z).scale(&Scalar::q_pow(4).sub(&Scalar::one())));
        assert_eq!(diff, expect);
        assert!(check_rule_confluence(&b, 4).all_passed());
    }

    #[test]
    fn embedding_and_table() {
        let p = CasimirParams::ints(-1, 0, 1);
        assert!(check_embedding(&p).all_passed());
        let rep = check_action_consistency(&p, 3, 2, 9);
        assert!(rep.all_passed(), "{:#?}", rep.failures().collect::<Vec<_>>());
    }

    #[test]
    fn e_on_x_closed_form() {
        let p = CasimirParams::ints(1, 1, 1);
        let b = make_b(&p);
        let [x, _, z] = b_generators(&b);
        let e = NcPoly::gen(&make_uq(&p.mu, &p.mu), "E").unwrap();
        let s = Scalar::s();
        let expected = NcPoly::constant(&b, s.clone()).sub(&z.scale(&s.mul(&Scalar::one().add(&Scalar::q_pow(2)))));
        assert_eq!(action_on_b(&p, &e, &x).unwrap(), expected);
    }
}
