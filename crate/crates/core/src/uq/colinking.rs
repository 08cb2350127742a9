//! The co-linking weak Hopf algebra `H = ⊕ U(mu,nu)` over a set of labels.

use super::checks::to_alg;
use super::{antipode_uq, counit_word, delta_uq, make_uq, param_text, uq_generators};
use crate::error::{QgalError, Result};
use crate::freealg::{random_element, seeded_rng, NcPoly, Presentation, TensorPoly};
use crate::report::{CheckEntry, Report, Tally, Witness};
use crate::scalar::{Rational, Scalar};
use rand::Rng;
use std::collections::BTreeMap;
use std::sync::Arc;

/// A pair of indices into the label set.
pub type Key = (usize, usize);

#[derive(Clone, Debug)]
pub struct CoLinkingSystem {
    labels: Vec<Rational>,
}

/// An element of `H`: one polynomial per component, zero components omitted.
#[derive(Clone, Debug, PartialEq)]
pub struct HElem {
    comps: BTreeMap<Key, NcPoly>,
}

/// An element of `H ⊗ ... ⊗ H`, one tensor per tuple of component keys.
#[derive(Clone, Debug, PartialEq)]
pub struct HTensor {
    legs: usize,
    comps: BTreeMap<Vec<Key>, TensorPoly>,
}

pub fn build_colinking(labels: &[Rational]) -> Result<CoLinkingSystem> {
    if labels.len() < 2 {
        return Err(QgalError::InvalidParams("a co-linking system needs at least two labels".into()));
    }
    let mut seen = labels.to_vec();
    seen.sort();
    seen.dedup();
    if seen.len() != labels.len() {
        return Err(QgalError::InvalidParams("co-linking labels must be distinct".into()));
    }
    Ok(CoLinkingSystem { labels: labels.to_vec() })
}

impl HElem {
    pub fn zero() -> Self {
        HElem { comps: BTreeMap::new() }
    }

    pub fn single(key: Key, p: NcPoly) -> Self {
        let mut comps = BTreeMap::new();
        if !p.is_zero() {
            comps.insert(key, p);
        }
        HElem { comps }
    }

    pub fn components(&self) -> &BTreeMap<Key, NcPoly> {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn add(&self, other: &HElem) -> HElem {
        let mut comps = self.comps.clone();
        for (k, p) in &other.comps {
            let sum = match comps.get(k) {
                Some(q) => q.add(p),
                None => p.clone(),
            };
            if sum.is_zero() {
                comps.remove(k);
            } else {
                comps.insert(*k, sum);
            }
        }
        HElem { comps }
    }

    /// Componentwise product; distinct components annihilate each other.
    pub fn mul(&self, other: &HElem) -> Result<HElem> {
        let mut comps = BTreeMap::new();
        for (k, p) in &self.comps {
            if let Some(q) = other.comps.get(k) {
                let r = p.try_mul(q)?;
                if !r.is_zero() {
                    comps.insert(*k, r);
                }
            }
        }
        Ok(HElem { comps })
    }

    pub fn render(&self) -> String {
        if self.comps.is_empty() {
            return "0".into();
        }
        self.comps.values().map(|p| format!("[{}] {}", p.presentation().id(), p.render())).collect::<Vec<_>>().join(" + ")
    }
}

impl HTensor {
    pub fn zero(legs: usize) -> Self {
        HTensor { legs, comps: BTreeMap::new() }
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn components(&self) -> &BTreeMap<Vec<Key>, TensorPoly> {
        &self.comps
    }

    fn insert_add(&mut self, key: Vec<Key>, t: TensorPoly) {
        if t.is_zero() {
            return;
        }
        let sum = match self.comps.remove(&key) {
            Some(old) => old.add(&t),
            None => t,
        };
        if !sum.is_zero() {
            self.comps.insert(key, sum);
        }
    }

    pub fn outer(factors: &[&HElem]) -> Self {
        let mut acc: Vec<(Vec<Key>, Vec<&NcPoly>)> = vec![(Vec::new(), Vec::new())];
        for f in factors {
            let mut next = Vec::new();
            for (keys, polys) in &acc {
                for (k, p) in &f.comps {
                    let mut nk = keys.clone();
                    nk.push(*k);
                    let mut np = polys.clone();
                    np.push(p);
                    next.push((nk, np));
                }
            }
            acc = next;
        }
        let mut out = HTensor::zero(factors.len());
        for (keys, polys) in acc {
            out.insert_add(keys, TensorPoly::outer(&polys));
        }
        out
    }

    pub fn add(&self, other: &HTensor) -> HTensor {
        let mut out = self.clone();
        for (k, t) in &other.comps {
            out.insert_add(k.clone(), t.clone());
        }
        out
    }

    /// Legwise product in `H^{⊗n}`.
    pub fn mul(&self, other: &HTensor) -> Result<HTensor> {
        let mut out = HTensor::zero(self.legs);
        for (k, t) in &self.comps {
            if let Some(u) = other.comps.get(k) {
                out.insert_add(k.clone(), t.try_mul(u)?);
            }
        }
        Ok(out)
    }

    pub fn flip(&self) -> HTensor {
        let mut out = HTensor::zero(2);
        for (k, t) in &self.comps {
            out.insert_add(vec![k[1], k[0]], t.flip());
        }
        out
    }

    /// A one-leg tensor as an element of `H`.
    pub fn into_elem(self) -> HElem {
        assert_eq!(self.legs, 1);
        let mut out = HElem::zero();
        for (k, t) in self.comps {
            out = out.add(&HElem::single(k[0], t.into_single()));
        }
        out
    }

    /// The value of a zero-leg tensor.
    pub fn into_scalar(self) -> Scalar {
        assert_eq!(self.legs, 0);
        self.comps.values().fold(Scalar::zero(), |acc, t| acc.add(&t.coeff(&[])))
    }

    pub fn render(&self) -> String {
        if self.comps.is_empty() {
            return "0".into();
        }
        self.comps.values().map(TensorPoly::render).collect::<Vec<_>>().join(" + ")
    }
}

impl CoLinkingSystem {
    pub fn labels(&self) -> &[Rational] {
        &self.labels
    }

    pub fn name(&self) -> String {
        format!("{{{}}}", self.labels.iter().map(param_text).collect::<Vec<_>>().join(","))
    }

    pub fn keys(&self) -> Vec<Key> {
        let n = self.labels.len();
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
    }

    pub fn algebra(&self, (i, j): Key) -> Arc<Presentation> {
        make_uq(&self.labels[i], &self.labels[j])
    }

    pub fn unit(&self) -> HElem {
        self.keys().into_iter().fold(HElem::zero(), |acc, k| acc.add(&HElem::single(k, NcPoly::one(&self.algebra(k)))))
    }

    pub fn generator(&self, key: Key, name: &str) -> HElem {
        HElem::single(key, NcPoly::gen(&self.algebra(key), name).expect("generator"))
    }

    fn delta_poly(&self, (i, j): Key, p: &NcPoly) -> Result<Vec<(Vec<Key>, TensorPoly)>> {
        let mut out = Vec::new();
        for u in 0..self.labels.len() {
            let t = delta_uq(&self.labels[i], &self.labels[j], &self.labels[u], p)?;
            out.push((vec![(i, u), (u, j)], t));
        }
        Ok(out)
    }

    /// `Delta_H(x) = sum_ups Delta^ups(x)`.
    pub fn delta(&self, x: &HElem) -> Result<HTensor> {
        let mut out = HTensor::zero(2);
        for (k, p) in &x.comps {
            for (key, t) in self.delta_poly(*k, p)? {
                out.insert_add(key, t);
            }
        }
        Ok(out)
    }

    /// Apply `Delta_H` to one leg.
    pub fn delta_leg(&self, t: &HTensor, leg: usize) -> Result<HTensor> {
        let mut out = HTensor::zero(t.legs + 1);
        for (keys, tp) in &t.comps {
            let (i, j) = keys[leg];
            let pres = self.algebra((i, j));
            for u in 0..self.labels.len() {
                let img = tp.expand_leg(leg, |w| {
                    delta_uq(&self.labels[i], &self.labels[j], &self.labels[u], &NcPoly::word(&pres, w.clone())?)
                        .map_err(to_alg)
                })?;
                let mut nk = keys[..leg].to_vec();
                nk.push((i, u));
                nk.push((u, j));
                nk.extend_from_slice(&keys[leg + 1..]);
                out.insert_add(nk, img);
            }
        }
        Ok(out)
    }

    /// `eps_H`: the counit on diagonal components, zero elsewhere.
    pub fn counit(&self, x: &HElem) -> Scalar {
        let mut acc = Scalar::zero();
        for ((i, j), p) in &x.comps {
            if i == j {
                for (w, c) in p.terms() {
                    acc = acc.add(&counit_word(p.presentation(), w).mul(c));
                }
            }
        }
        acc
    }

    pub fn counit_leg(&self, t: &HTensor, leg: usize) -> Result<HTensor> {
        let mut out = HTensor::zero(t.legs - 1);
        for (keys, tp) in &t.comps {
            let (i, j) = keys[leg];
            if i != j {
                continue;
            }
            let pres = self.algebra((i, j));
            let c = tp.contract_leg(leg, |w| Ok(counit_word(&pres, w)))?;
            let mut nk = keys.clone();
            nk.remove(leg);
            out.insert_add(nk, c);
        }
        Ok(out)
    }

    /// `S_H`, componentwise `S_{mu nu}: U(mu,nu) -> U(nu,mu)`.
    pub fn antipode(&self, x: &HElem) -> Result<HElem> {
        let mut out = HElem::zero();
        for ((i, j), p) in &x.comps {
            let s = antipode_uq(&self.labels[*i], &self.labels[*j], p)?;
            out = out.add(&HElem::single((*j, *i), s));
        }
        Ok(out)
    }

    pub fn antipode_leg(&self, t: &HTensor, leg: usize) -> Result<HTensor> {
        let mut out = HTensor::zero(t.legs);
        for (keys, tp) in &t.comps {
            let (i, j) = keys[leg];
            let pres = self.algebra((i, j));
            let img = tp.map_leg(leg, &self.algebra((j, i)), |w| {
                antipode_uq(&self.labels[i], &self.labels[j], &NcPoly::word(&pres, w.clone())?).map_err(to_alg)
            })?;
            let mut nk = keys.clone();
            nk[leg] = (j, i);
            out.insert_add(nk, img);
        }
        Ok(out)
    }

    /// Multiply all legs together in `H`.
    pub fn multiply(&self, t: &HTensor) -> Result<HElem> {
        let mut out = HElem::zero();
        for (keys, tp) in &t.comps {
            if keys.iter().all(|k| *k == keys[0]) {
                out = out.add(&HElem::single(keys[0], tp.multiply_out()?));
            }
        }
        Ok(out)
    }

    pub fn random_elem<R: Rng>(&self, degree: usize, rng: &mut R) -> Result<HElem> {
        let keys = self.keys();
        let key = keys[rng.gen_range(0..keys.len())];
        Ok(HElem::single(key, random_element(&self.algebra(key), degree, 3, rng)?))
    }

    fn random_diagonal<R: Rng>(&self, key: Key, degree: usize, rng: &mut R) -> Result<HElem> {
        Ok(HElem::single(key, random_element(&self.algebra(key), degree, 3, rng)?))
    }

    /// Generators and units of every component.
    pub fn basic_elements(&self) -> Vec<HElem> {
        let mut out = Vec::new();
        for k in self.keys() {
            out.push(HElem::single(k, NcPoly::one(&self.algebra(k))));
            for g in uq_generators(&self.algebra(k)) {
                out.push(HElem::single(k, g));
            }
        }
        out
    }
}

/// All weak Hopf axioms on generators and `samples` seeded random elements
/// of word length at most `degree`.
pub fn check_weak_hopf_axioms(sys: &CoLinkingSystem, samples: usize, degree: usize, seed: u64) -> Report {
    let name = sys.name();
    let mut rng = seeded_rng(seed, &format!("weakhopf{name}"));
    let mut elems = sys.basic_elements();
    for _ in 0..samples {
        match sys.random_elem(degree, &mut rng) {
            Ok(x) => elems.push(x),
            Err(e) => {
                let mut r = Report::new();
                r.push(CheckEntry::fail(
                    format!("weakhopf.sampling{name}"),
                    Witness { element: "random element".into(), lhs: e.to_string(), rhs: String::new() },
                ));
                return r;
            }
        }
    }
    let one = sys.unit();
    let mut coassoc = Tally::new(format!("weakhopf.coassociativity{name}"));
    let mut counit_l = Tally::new(format!("weakhopf.counit_left{name}"));
    let mut counit_r = Tally::new(format!("weakhopf.counit_right{name}"));
    let mut target = Tally::new(format!("weakhopf.antipode_target{name}"));
    let mut source = Tally::new(format!("weakhopf.antipode_source{name}"));
    let mut conv = Tally::new(format!("weakhopf.antipode_convolution{name}"));
    let d1 = sys.delta(&one);
    for x in &elems {
        let el = || x.render();
        let dx = sys.delta(x);
        coassoc.record(
            el,
            dx.clone().and_then(|d| Ok((sys.delta_leg(&d, 0)?, sys.delta_leg(&d, 1)?))),
            HTensor::render,
        );
        counit_l.record(el, dx.clone().and_then(|d| Ok((sys.counit_leg(&d, 0)?.into_elem(), x.clone()))), HElem::render);
        counit_r.record(el, dx.clone().and_then(|d| Ok((sys.counit_leg(&d, 1)?.into_elem(), x.clone()))), HElem::render);
        let sides = (|| -> Result<(HElem, HElem)> {
            let d = dx.clone()?;
            let l = sys.multiply(&sys.antipode_leg(&d, 1)?)?;
            let d1x = d1.clone()?.mul(&HTensor::outer(&[x, &one]))?;
            Ok((l, sys.counit_leg(&d1x, 0)?.into_elem()))
        })();
        target.record(el, sides, HElem::render);
        let sides = (|| -> Result<(HElem, HElem)> {
            let d = dx.clone()?;
            let l = sys.multiply(&sys.antipode_leg(&d, 0)?)?;
            let xd1 = HTensor::outer(&[&one, x]).mul(&d1.clone()?)?;
            Ok((l, sys.counit_leg(&xd1, 1)?.into_elem()))
        })();
        source.record(el, sides, HElem::render);
        let sides = (|| -> Result<(HElem, HElem)> {
            let d2 = sys.delta_leg(&dx.clone()?, 1)?;
            let s = sys.antipode_leg(&sys.antipode_leg(&d2, 0)?, 2)?;
            Ok((sys.multiply(&s)?, sys.antipode(x)?))
        })();
        conv.record(el, sides, HElem::render);
    }

    // counit multiplicativity on triples
    let mut mult_a = Tally::new(format!("weakhopf.counit_multiplicativity_first{name}"));
    let mut mult_b = Tally::new(format!("weakhopf.counit_multiplicativity_second{name}"));
    let mut triples = Vec::new();
    let n = sys.labels.len();
    for a in 0..n {
        let basics: Vec<HElem> = {
            let k = (a, a);
            let mut v = vec![HElem::single(k, NcPoly::one(&sys.algebra(k)))];
            v.extend(uq_generators(&sys.algebra(k)).into_iter().map(|g| HElem::single(k, g)));
            v
        };
        for x in &basics {
            for y in &basics {
                for z in &basics {
                    triples.push((x.clone(), y.clone(), z.clone()));
                }
            }
        }
    }
    for _ in 0..samples {
        let t = if rng.gen_bool(0.5) {
            let a = rng.gen_range(0..n);
            let k = (a, a);
            (|| -> Result<_> {
                Ok((
                    sys.random_diagonal(k, degree, &mut rng)?,
                    sys.random_diagonal(k, degree, &mut rng)?,
                    sys.random_diagonal(k, degree, &mut rng)?,
                ))
            })()
        } else {
            (|| -> Result<_> {
                Ok((
                    sys.random_elem(degree, &mut rng)?,
                    sys.random_elem(degree, &mut rng)?,
                    sys.random_elem(degree, &mut rng)?,
                ))
            })()
        };
        if let Ok(t) = t {
            triples.push(t);
        }
    }
    for (x, y, z) in &triples {
        let el = || format!("x = {}, y = {}, z = {}", x.render(), y.render(), z.render());
        let xyz = x.mul(y).and_then(|xy| xy.mul(z)).map(|p| sys.counit(&p));
        let eval = |dy: HTensor| -> Result<Scalar> {
            let t = HTensor::outer(&[x, &one]).mul(&dy)?.mul(&HTensor::outer(&[&one, z]))?;
            let t = sys.counit_leg(&t, 1)?;
            Ok(sys.counit_leg(&t, 0)?.into_scalar())
        };
        let dy = sys.delta(y);
        mult_a.record(
            el,
            dy.clone().and_then(|d| Ok((eval(d)?, xyz.clone()?))),
            Scalar::render,
        );
        mult_b.record(el, dy.and_then(|d| Ok((eval(d.flip())?, xyz.clone()?))), Scalar::render);
    }

    // comultiplicativity of the unit
    let unit_sides = (|| -> Result<(HTensor, HTensor, HTensor)> {
        let d1 = sys.delta(&one)?;
        let d2 = sys.delta_leg(&d1, 1)?;
        let left = sys_tensor_extend(&d1, &one, true).mul(&sys_tensor_extend(&d1, &one, false))?;
        let right = sys_tensor_extend(&d1, &one, false).mul(&sys_tensor_extend(&d1, &one, true))?;
        Ok((left, right, d2))
    })();
    let mut report = Report::new();
    match unit_sides {
        Ok((l, r, d2)) => {
            report.push(CheckEntry::compare(format!("weakhopf.unit_comultiplicativity_first{name}"), "1", &l, &d2, HTensor::render));
            report.push(CheckEntry::compare(format!("weakhopf.unit_comultiplicativity_second{name}"), "1", &r, &d2, HTensor::render));
        }
        Err(e) => report.push(CheckEntry::fail(
            format!("weakhopf.unit_comultiplicativity{name}"),
            Witness { element: "1".into(), lhs: e.to_string(), rhs: String::new() },
        )),
    }
    for t in [coassoc, counit_l, counit_r, target, source, conv, mult_a, mult_b] {
        report.push(t.finish());
    }
    // a genuinely weak structure: Delta(1) != 1 ⊗ 1
    let trivial = HTensor::outer(&[&one, &one]);
    let id = format!("weakhopf.genuinely_weak{name}");
    match sys.delta(&one) {
        Ok(d) if d != trivial => {
            report.push(CheckEntry::pass(id).with_note(format!("Delta(1) has {} terms, 1 ⊗ 1 has {}", d.comps.len(), trivial.comps.len())))
        }
        Ok(d) => report.push(CheckEntry::fail(id, Witness { element: "Delta(1)".into(), lhs: d.render(), rhs: trivial.render() })),
        Err(e) => report.push(CheckEntry::fail(id, Witness { element: "Delta(1)".into(), lhs: e.to_string(), rhs: String::new() })),
    }
    report
}

/// `Delta(1) ⊗ 1` (`left = true`) or `1 ⊗ Delta(1)`.
fn sys_tensor_extend(d1: &HTensor, one: &HElem, left: bool) -> HTensor {
    let mut out = HTensor::zero(3);
    for (keys, t) in &d1.comps {
        for (k, p) in &one.comps {
            let (nk, nt) = if left {
                let mut nk = keys.clone();
                nk.push(*k);
                (nk, tensor_append(t, p))
            } else {
                let mut nk = vec![*k];
                nk.extend_from_slice(keys);
                (nk, tensor_prepend(p, t))
            };
            out.insert_add(nk, nt);
        }
    }
    out
}

fn tensor_append(t: &TensorPoly, p: &NcPoly) -> TensorPoly {
    let mut comps = t.components().to_vec();
    comps.push(p.presentation().clone());
    let terms = t.terms().iter().flat_map(|(k, c)| {
        p.terms().iter().map(move |(w, d)| {
            let mut nk = k.clone();
            nk.push(w.clone());
            (nk, c.mul(d))
        })
    });
    TensorPoly::from_terms(&comps, terms.collect::<Vec<_>>()).expect("normal words stay normal")
}

fn tensor_prepend(p: &NcPoly, t: &TensorPoly) -> TensorPoly {
    let mut comps = vec![p.presentation().clone()];
    comps.extend_from_slice(t.components());
    let terms = p.terms().iter().flat_map(|(w, d)| {
        t.terms().iter().map(move |(k, c)| {
            let mut nk = vec![w.clone()];
            nk.extend(k.iter().cloned());
            (nk, d.mul(c))
        })
    });
    TensorPoly::from_terms(&comps, terms.collect::<Vec<_>>()).expect("normal words stay normal")
}
