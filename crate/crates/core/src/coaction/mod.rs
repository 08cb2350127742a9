//! The right coaction of `Pol_q(mu)` on `B(mu,nu;tau)` and everything built
//! on it: comodule laws, compatibility with the `U_q(mu)` action,
//! ergodicity, the spin-1 corepresentation, coideal embeddings and the
//! equivariant isomorphism classification.

mod classify;
mod coideal;
mod spin1;

pub use classify::{check_classification, classify_iso, IsoWitness};
pub use coideal::{check_coideal, coideal_embed, CoidealOutcome};
pub use spin1::{spin1_check, spin1_matrix};

use crate::casimir::CasimirParams;
use crate::error::{QgalError, Result};
use crate::freealg::{random_element, relation_mismatch, seeded_rng, FreeAlgError, HomMode, NcPoly, TensorPoly, Word};
use crate::homspace::{b_generators, b_id, make_b, BAction, UGen};
use crate::linalg::{rank, RankMethod};
use crate::pairing::PairingTable;
use crate::pol::{counit_pol, delta_pol, make_pol, pol_gen, PolVariant};
use crate::report::{CheckEntry, Report, Tally, Witness};
use crate::scalar::Scalar;
use crate::uq::{make_uq, to_alg, uq_generators};
use std::collections::BTreeMap;

pub fn pol_variant_for(p: &CasimirParams) -> Result<PolVariant> {
    PolVariant::from_mu(&p.mu)
        .ok_or_else(|| QgalError::InvalidParams(format!("mu = {} has no Pol_q(mu)", crate::uq::param_text(&p.mu))))
}

/// `a, b, a*, b*` of `Pol_q(mu)` (`a0, b0, a0*, b0*` when `mu = 0`).
pub(crate) struct PolLetters {
    pub a: NcPoly,
    pub b: NcPoly,
    pub ast: NcPoly,
    pub bst: NcPoly,
}

pub(crate) fn pol_letters(v: PolVariant) -> PolLetters {
    let (a, b) = if v == PolVariant::Zero { ("a0", "b0") } else { ("a", "b") };
    let a = pol_gen(v, a);
    let b = pol_gen(v, b);
    let ast = a.star().expect("Pol star");
    let bst = b.star().expect("Pol star");
    PolLetters { a, b, ast, bst }
}

/// Generator images of `gamma` in `B ⊗ Pol_q(mu)`, in presentation order
/// `x, xs, z`.
#[derive(Clone, Debug)]
pub struct CoactionSpec {
    pub params: CasimirParams,
    pub variant: PolVariant,
    pub images: Vec<TensorPoly>,
}

/// `(star ⊗ star)` on `B ⊗ Pol`.
pub(crate) fn star_bp(t: &TensorPoly) -> std::result::Result<TensorPoly, FreeAlgError> {
    let comps = t.components().to_vec();
    let (b, p) = (comps[0].clone(), comps[1].clone());
    t.map_leg(0, &b, |w| NcPoly::word(&b, w.clone())?.star())?
        .map_leg(1, &p, |w| NcPoly::word(&p, w.clone())?.star())
}

/// `gamma(x) = -q mu xs⊗b^2 - q(1+q^2) mu z⊗ba + x⊗a^2 + q tau 1⊗ba`,
/// `gamma(z) = xs⊗a*b + z⊗(1 - (1+q^2) mu b*b) + x⊗b*a + tau 1⊗b*b`,
/// `gamma(xs) = (star ⊗ star) gamma(x)`. Fails if the images violate a
/// relation of `B`.
pub fn make_gamma(p: &CasimirParams) -> Result<CoactionSpec> {
    let v = pol_variant_for(p)?;
    let bp = make_b(p);
    let pp = make_pol(v);
    let [x, xs, z] = b_generators(&bp);
    let one_b = NcPoly::one(&bp);
    let one_p = NcPoly::one(&pp);
    let PolLetters { a, b, ast, bst } = pol_letters(v);
    let t = |l: &NcPoly, r: &NcPoly| TensorPoly::outer(&[l, r]);
    let q = Scalar::q();
    let mu = Scalar::from_rational(&p.mu);
    let tau = Scalar::from_rational(&p.tau);
    let one_q2 = Scalar::one().add(&Scalar::q_pow(2));
    let gx = t(&xs, &b.mul(&b))
        .scale(&q.mul(&mu).neg())
        .add(&t(&z, &b.mul(&a)).scale(&q.mul(&one_q2).mul(&mu).neg()))
        .add(&t(&x, &a.mul(&a)))
        .add(&t(&one_b, &b.mul(&a)).scale(&q.mul(&tau)));
    let gz = t(&xs, &ast.mul(&b))
        .add(&t(&z, &one_p.sub(&bst.mul(&b).scale(&one_q2.mul(&mu)))))
        .add(&t(&x, &bst.mul(&a)))
        .add(&t(&one_b, &bst.mul(&b)).scale(&tau));
    let gxs = star_bp(&gx)?;
    let spec = CoactionSpec { params: p.clone(), variant: v, images: vec![gx, gxs, gz] };
    if let Some((rule, l, r)) = spec.relation_failure()? {
        return Err(QgalError::InvalidParams(format!(
            "gamma violates {rule}: {} != {}",
            l.render(),
            r.render()
        )));
    }
    Ok(spec)
}

impl CoactionSpec {
    fn unit(&self) -> TensorPoly {
        TensorPoly::one(&[make_b(&self.params), make_pol(self.variant)])
    }

    /// The first relation of `B` (including `z* = z` through the star
    /// compatibility of generator images) not preserved by `gamma`.
    pub fn relation_failure(&self) -> Result<Option<(String, TensorPoly, TensorPoly)>> {
        let bp = make_b(&self.params);
        if let Some(f) = relation_mismatch(&bp, &self.images, &self.unit(), HomMode::Hom)? {
            return Ok(Some(f));
        }
        let gz = &self.images[2];
        let sz = star_bp(gz)?;
        if &sz != gz {
            return Ok(Some(("z* = z".into(), sz, gz.clone())));
        }
        Ok(None)
    }

    pub fn apply(&self, y: &NcPoly) -> Result<TensorPoly> {
        crate::uq::expect_algebra(y.presentation(), &b_id(&self.params))?;
        Ok(crate::freealg::apply_hom(y, &self.images, &self.unit(), HomMode::Hom)?)
    }

    fn apply_word(&self, w: &Word) -> std::result::Result<TensorPoly, FreeAlgError> {
        self.apply(&NcPoly::word(&make_b(&self.params), w.clone())?).map_err(to_alg)
    }
}

pub fn gamma(p: &CasimirParams, y: &NcPoly) -> Result<TensorPoly> {
    make_gamma(p)?.apply(y)
}

fn elements(p: &CasimirParams, samples: usize, degree: usize, tag: &str, seed: u64) -> Vec<NcPoly> {
    let bp = make_b(p);
    let mut rng = seeded_rng(seed, tag);
    let mut out: Vec<NcPoly> = std::iter::once(NcPoly::one(&bp)).chain(b_generators(&bp)).collect();
    for _ in 0..samples {
        if let Ok(y) = random_element(&bp, degree, 2, &mut rng) {
            out.push(y);
        }
    }
    out
}

/// Relation preservation, star compatibility, `(gamma ⊗ id) gamma =
/// (id ⊗ Delta) gamma` and `(id ⊗ eps) gamma = id`.
pub fn check_comodule(p: &CasimirParams, samples: usize, degree: usize, seed: u64) -> Report {
    let tag = format!("[{}]", p.tag());
    let mut r = Report::new();
    let spec = match make_gamma(p) {
        Ok(s) => s,
        Err(e) => {
            r.push(CheckEntry::fail(
                format!("coaction.relations{tag}"),
                Witness { element: "gamma".into(), lhs: e.to_string(), rhs: String::new() },
            ));
            return r;
        }
    };
    r.push(CheckEntry::pass(format!("coaction.relations{tag}")).with_note("4 rules and z* = z"));
    let v = spec.variant;
    let ys = elements(p, samples, degree, &format!("comodule{tag}"), seed);
    let mut star = Tally::new(format!("coaction.star{tag}"));
    let mut coass = Tally::new(format!("coaction.comodule_coassociativity{tag}"));
    let mut counit = Tally::new(format!("coaction.comodule_counit{tag}"));
    for y in ys.iter().filter(|y| !y.is_zero()) {
        let g = match spec.apply(y) {
            Ok(g) => g,
            Err(e) => {
                coass.record(|| y.render(), Err::<(TensorPoly, TensorPoly), _>(e), TensorPoly::render);
                continue;
            }
        };
        let sides = (|| -> Result<(TensorPoly, TensorPoly)> { Ok((spec.apply(&y.star()?)?, star_bp(&g)?)) })();
        star.record(|| y.render(), sides, TensorPoly::render);
        let sides = (|| -> Result<(TensorPoly, TensorPoly)> {
            let lhs = g.expand_leg(0, |w| spec.apply_word(w))?;
            let rhs = g.expand_leg(1, |w| delta_pol(v, &NcPoly::word(&make_pol(v), w.clone())?).map_err(to_alg))?;
            Ok((lhs, rhs))
        })();
        coass.record(|| y.render(), sides, TensorPoly::render);
        let sides = g
            .contract_leg(1, |w| counit_pol(v, &NcPoly::word(&make_pol(v), w.clone())?).map_err(to_alg))
            .map(|c| (c.into_single(), y.clone()));
        counit.record(|| y.render(), sides, NcPoly::render);
    }
    for t in [star, coass, counit] {
        r.push(t.finish());
    }
    r
}

/// `(id ⊗ <., g>) gamma(y)`.
pub fn contract_with(spec: &CoactionSpec, table: &PairingTable, g: &NcPoly, y: &NcPoly) -> Result<NcPoly> {
    let pp = make_pol(spec.variant);
    let t = spec.apply(y)?;
    let c = t.contract_leg(1, |w| table.pair(g, &NcPoly::word(&pp, w.clone())?).map_err(to_alg))?;
    Ok(c.into_single())
}

/// `g ⊳ b = (id ⊗ <., g>) gamma(b)` for the nine generator pairs, plus
/// random elements with all four generators.
pub fn check_infinitesimal_compat(p: &CasimirParams, samples: usize, degree: usize, seed: u64) -> Report {
    let tag = format!("[{}]", p.tag());
    let mut r = Report::new();
    let prepared = make_gamma(p).and_then(|s| Ok((PairingTable::standard(s.variant)?, s)));
    let (table, spec) = match prepared {
        Ok(x) => x,
        Err(e) => {
            r.push(CheckEntry::fail(
                format!("coaction.infinitesimal{tag}"),
                Witness { element: "setup".into(), lhs: e.to_string(), rhs: String::new() },
            ));
            return r;
        }
    };
    let up = make_uq(&p.mu, &p.mu);
    let [e, f, k, ki] = uq_generators(&up);
    let mut act = BAction::new(p);
    let bp = make_b(p);
    for (g, ug) in [(&e, UGen::E), (&f, UGen::F), (&k, UGen::K)] {
        for y in b_generators(&bp) {
            let sides = (|| -> Result<(NcPoly, NcPoly)> {
                Ok((act.act_gen(ug, &y)?, contract_with(&spec, &table, g, &y)?))
            })();
            r.push(CheckEntry::compare_result(
                format!("coaction.infinitesimal{tag}.{}>{}", g.render(), y.render()),
                format!("{} ⊳ {}", g.render(), y.render()),
                sides,
                NcPoly::render,
            ));
        }
    }
    let mut rand_t = Tally::new(format!("coaction.infinitesimal_random{tag}"));
    for y in elements(p, samples, degree, &format!("infinitesimal{tag}"), seed) {
        for (g, ug) in [(&e, UGen::E), (&f, UGen::F), (&k, UGen::K), (&ki, UGen::Ki)] {
            let sides = (|| -> Result<(NcPoly, NcPoly)> {
                Ok((act.act_gen(ug, &y)?, contract_with(&spec, &table, g, &y)?))
            })();
            rand_t.record(|| format!("{} ⊳ {}", g.render(), y.render()), sides, NcPoly::render);
        }
    }
    r.push(rand_t.finish());
    r
}

/// `x^k z^m` (`k + m <= d`) followed by `xs^k z^m` (`k >= 1`).
pub fn b_basis(p: &CasimirParams, d: u32) -> Vec<NcPoly> {
    let bp = make_b(p);
    let [x, xs, z] = b_generators(&bp);
    let mut out = Vec::new();
    for (g, kmin) in [(&x, 0), (&xs, 1)] {
        for k in kmin..=d {
            for m in 0..=(d - k) {
                out.push(g.pow(k).expect("pow").mul(&z.pow(m).expect("pow")));
            }
        }
    }
    out
}

/// Result of the bounded-degree fixed-point computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErgodicResult {
    pub basis_size: usize,
    pub fixed_dimension: usize,
    pub method: RankMethod,
}

/// Dimension of `{p : gamma(p) = p ⊗ 1}` on the span of `b_basis(d)`.
pub fn fixed_point_dimension(p: &CasimirParams, d: u32, seed: u64) -> Result<ErgodicResult> {
    if d < 2 {
        return Err(QgalError::InvalidParams(format!("ergodicity degree {d} below 2")));
    }
    let spec = make_gamma(p)?;
    let bp = make_b(p);
    let pp = make_pol(spec.variant);
    let [x, xs, z] = b_generators(&bp);
    let (gx, gxs, gz) = (spec.apply(&x)?, spec.apply(&xs)?, spec.apply(&z)?);
    let unit = spec.unit();
    let pow = |g: &TensorPoly, n: u32| -> Result<Vec<TensorPoly>> {
        let mut v = vec![unit.clone()];
        for i in 0..n as usize {
            v.push(v[i].try_mul(g)?);
        }
        Ok(v)
    };
    let (px, pxs, pz) = (pow(&gx, d)?, pow(&gxs, d)?, pow(&gz, d)?);
    let one_p = NcPoly::one(&pp);
    let mut columns: Vec<TensorPoly> = Vec::new();
    for (powers, g, kmin) in [(&px, &x, 0u32), (&pxs, &xs, 1)] {
        for k in kmin..=d {
            for m in 0..=(d - k) {
                if k + m == 0 {
                    continue;
                }
                let y = g.pow(k)?.mul(&z.pow(m)?);
                columns.push(powers[k as usize].try_mul(&pz[m as usize])?.sub(&TensorPoly::outer(&[&y, &one_p])));
            }
        }
    }
    let basis_size = columns.len() + 1;
    let mut keys: BTreeMap<Vec<Word>, usize> = BTreeMap::new();
    for c in &columns {
        for k in c.terms().keys() {
            let n = keys.len();
            keys.entry(k.clone()).or_insert(n);
        }
    }
    let rows: Vec<Vec<Scalar>> = columns
        .iter()
        .map(|c| {
            let mut row = vec![Scalar::zero(); keys.len()];
            for (k, v) in c.terms() {
                row[keys[k]] = v.clone();
            }
            row
        })
        .collect();
    let mut rng = seeded_rng(seed, &format!("ergodic[{}]", p.tag()));
    let (rk, method) = rank(&rows, &mut rng);
    // gamma(1) = 1 ⊗ 1, so the constant is always fixed.
    let fixed = basis_size - rk;
    Ok(ErgodicResult { basis_size, fixed_dimension: fixed, method })
}

/// Passes iff the fixed points of `gamma` in degree `<= d` are the scalars.
pub fn check_ergodic(p: &CasimirParams, d: u32, seed: u64) -> Report {
    let id = format!("coaction.ergodic[{}]", p.tag());
    let mut r = Report::new();
    let entry = match fixed_point_dimension(p, d, seed) {
        Ok(res) => CheckEntry::compare(id, format!("degree {d}"), &res.fixed_dimension, &1, |x| x.to_string()).with_note(
            format!(
                "basis {}, fixed-point dimension {} ({})",
                res.basis_size,
                res.fixed_dimension,
                if res.method == RankMethod::Exact { "exact" } else { "modular certificate" }
            ),
        ),
        Err(e) => CheckEntry::compare_result::<usize, _>(id, format!("degree {d}"), Err(e), |x| x.to_string()),
    };
    r.push(entry);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_coefficient_of_gamma_z() {
        let p = CasimirParams::ints(1, -1, 2);
        let spec = make_gamma(&p).unwrap();
        let bp = make_b(&p);
        let [x, _, z] = b_generators(&bp);
        let gz = spec.apply(&z).unwrap();
        let l = pol_letters(PolVariant::Plus);
        let xw = x.terms().keys().next().unwrap().clone();
        let part: BTreeMap<Word, Scalar> =
            gz.terms().iter().filter(|(k, _)| k[0] == xw).map(|(k, c)| (k[1].clone(), c.clone())).collect();
        let expected = l.bst.mul(&l.a);
        assert_eq!(&part, expected.terms());
    }

    #[test]
    fn mu_zero_gamma_x_has_two_terms() {
        let p = CasimirParams::ints(0, 1, 3);
        let spec = make_gamma(&p).unwrap();
        let [x, ..] = b_generators(&make_b(&p));
        assert_eq!(spec.apply(&x).unwrap().len(), 2);
        assert_eq!(spec.apply(&NcPoly::one(&make_b(&p))).unwrap(), spec.unit());
    }

    #[test]
    fn comodule_and_compat() {
        for (mu, nu, tau) in [(1, -1, 2), (-1, 1, 1), (0, 0, -1), (1, 0, 0)] {
            let p = CasimirParams::ints(mu, nu, tau);
            let rep = check_comodule(&p, 3, 2, 8);
            assert!(rep.all_passed(), "{:#?}", rep.failures().collect::<Vec<_>>());
            let rep = check_infinitesimal_compat(&p, 3, 2, 8);
            assert!(rep.all_passed(), "{:#?}", rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn z_is_not_fixed() {
        let p = CasimirParams::ints(0, 1, 0);
        let spec = make_gamma(&p).unwrap();
        let [_, _, z] = b_generators(&make_b(&p));
        let one_p = NcPoly::one(&make_pol(PolVariant::Zero));
        assert!(!spec.apply(&z).unwrap().sub(&TensorPoly::outer(&[&z, &one_p])).is_zero());
    }

    #[test]
    fn ergodic_low_degree() {
        for (mu, nu, tau) in [(1, 1, 1), (0, -1, 0), (-1, 0, 2)] {
            let res = fixed_point_dimension(&CasimirParams::ints(mu, nu, tau), 3, 1).unwrap();
            assert_eq!(res.basis_size, 16);
            assert_eq!(res.fixed_dimension, 1);
        }
    }
}
