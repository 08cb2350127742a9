use super::presentation::{Presentation, Word};
use super::FreeAlgError;
use crate::scalar::{Coeff, Scalar};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A finite linear combination of normal words of a presentation.
///
/// Every constructor reduces to normal form, so structural equality is
/// equality in the algebra.
#[derive(Clone)]
pub struct NcPoly<C: Coeff = Scalar> {
    pres: Arc<Presentation>,
    terms: BTreeMap<Word, C>,
}

impl<C: Coeff> PartialEq for NcPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.pres.id() == other.pres.id() && self.terms == other.terms
    }
}

impl<C: Coeff> fmt::Debug for NcPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly[{}]({})", self.pres.id(), self.render())
    }
}

impl<C: Coeff> fmt::Display for NcPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Reduce a combination of (not necessarily normal) words.
///
/// The worklist is keyed by the word order and always processes its largest
/// word, so each word is rewritten once with its fully combined coefficient.
pub(crate) fn reduce<C: Coeff>(
    pres: &Presentation,
    terms: impl IntoIterator<Item = (Word, C)>,
) -> Result<BTreeMap<Word, C>, FreeAlgError> {
    let mut work: BTreeMap<(u32, Word), C> = BTreeMap::new();
    for (w, c) in terms {
        push(&mut work, pres.order_key(&w), c);
    }
    let mut out = BTreeMap::new();
    let mut steps = 0usize;
    while let Some(((_, w), c)) = work.pop_last() {
        if c.is_zero() {
            continue;
        }
        match pres.find_redex(&w) {
            None => {
                out.insert(w, c);
            }
            Some((pos, r)) => {
                steps += 1;
                if steps > pres.step_budget() {
                    return Err(FreeAlgError::StepBudgetExceeded {
                        word: pres.render_word(&w),
                        budget: pres.step_budget(),
                    });
                }
                let rule = &pres.rules()[r];
                let tail = &w[pos + rule.lhs.len()..];
                for (rw, rc) in &rule.rhs {
                    let mut nw = Vec::with_capacity(w.len() - rule.lhs.len() + rw.len());
                    nw.extend_from_slice(&w[..pos]);
                    nw.extend_from_slice(rw);
                    nw.extend_from_slice(tail);
                    let nc = if rc.is_one() { c.clone() } else { C::from_scalar(rc).mul(&c) };
                    push(&mut work, pres.order_key(&nw), nc);
                }
            }
        }
    }
    Ok(out)
}

fn push<C: Coeff>(work: &mut BTreeMap<(u32, Word), C>, key: (u32, Word), c: C) {
    if c.is_zero() {
        return;
    }
    match work.get_mut(&key) {
        Some(e) => {
            let s = e.add(&c);
            if s.is_zero() {
                work.remove(&key);
            } else {
                *e = s;
            }
        }
        None => {
            work.insert(key, c);
        }
    }
}

fn mismatch(a: &Presentation, b: &Presentation) -> FreeAlgError {
    FreeAlgError::MismatchedPresentations { left: a.id().to_string(), right: b.id().to_string() }
}

impl<C: Coeff> NcPoly<C> {
    pub fn zero(pres: &Arc<Presentation>) -> Self {
        NcPoly { pres: pres.clone(), terms: BTreeMap::new() }
    }

    pub fn one(pres: &Arc<Presentation>) -> Self {
        NcPoly::constant(pres, C::one())
    }

    pub fn constant(pres: &Arc<Presentation>, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        NcPoly { pres: pres.clone(), terms }
    }

    /// A generator by name.
    pub fn gen(pres: &Arc<Presentation>, name: &str) -> Result<Self, FreeAlgError> {
        let i = pres.gen_index(name).ok_or_else(|| FreeAlgError::UnknownGenerator(name.to_string()))?;
        NcPoly::word(pres, vec![i])
    }

    /// The normal form of a single word.
    pub fn word(pres: &Arc<Presentation>, w: Word) -> Result<Self, FreeAlgError> {
        NcPoly::from_terms(pres, [(w, C::one())])
    }

    pub fn from_terms(
        pres: &Arc<Presentation>,
        terms: impl IntoIterator<Item = (Word, C)>,
    ) -> Result<Self, FreeAlgError> {
        Ok(NcPoly { pres: pres.clone(), terms: reduce(pres, terms)? })
    }

    /// Wrap terms already known to be normal.
    pub(crate) fn from_normal(pres: &Arc<Presentation>, terms: BTreeMap<Word, C>) -> Self {
        NcPoly { pres: pres.clone(), terms }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn terms(&self) -> &BTreeMap<Word, C> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, C> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[u8]) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// The coefficient if the element is a multiple of the unit.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// Longest word length.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    fn same(&self, other: &Self) -> Result<(), FreeAlgError> {
        if self.pres.id() == other.pres.id() {
            Ok(())
        } else {
            Err(mismatch(&self.pres, &other.pres))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.same(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_into(&mut terms, w, c);
        }
        Ok(NcPoly { pres: self.pres.clone(), terms })
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("poly_add")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        NcPoly { pres: self.pres.clone(), terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return NcPoly::zero(&self.pres);
        }
        NcPoly { pres: self.pres.clone(), terms: self.terms.iter().map(|(w, c)| (w.clone(), c.mul(k))).collect() }
    }

    pub fn scale_scalar(&self, k: &Scalar) -> Self {
        self.scale(&C::from_scalar(k))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(NcPoly::zero(&self.pres));
        }
        let mut prod = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let mut w = Vec::with_capacity(u.len() + v.len());
                w.extend_from_slice(u);
                w.extend_from_slice(v);
                prod.push((w, cu.mul(cv)));
            }
        }
        NcPoly::from_terms(&self.pres, prod)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("poly_mul")
    }

    pub fn pow(&self, n: u32) -> Result<Self, FreeAlgError> {
        let mut acc = NcPoly::one(&self.pres);
        for _ in 0..n {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// The commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Result<Self, FreeAlgError> {
        Ok(self.try_mul(other)?.sub(&other.try_mul(self)?))
    }

    /// Antilinear anti-automorphism from the star table. Coefficients are
    /// real, so conjugation is trivial.
    pub fn star(&self) -> Result<Self, FreeAlgError> {
        let table = self.pres.star_table().ok_or_else(|| FreeAlgError::NoStar(self.pres.id().to_string()))?;
        let images: Vec<NcPoly<C>> = table
            .iter()
            .map(|img| NcPoly::from_terms(&self.pres, img.iter().map(|(w, c)| (w.clone(), C::from_scalar(c)))))
            .collect::<Result<_, _>>()?;
        super::apply_hom(self, &images, &NcPoly::one(&self.pres), super::HomMode::AntiHom)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> NcPoly<D> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(w, c)| {
                let d = f(c);
                (!d.is_zero()).then(|| (w.clone(), d))
            })
            .collect();
        NcPoly { pres: self.pres.clone(), terms }
    }

    /// Canonical text in the element grammar, lowest words first.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keyed: Vec<_> = self.terms.iter().collect();
        keyed.sort_by_key(|(w, _)| self.pres.order_key(w));
        let mut out = String::new();
        for (i, (w, c)) in keyed.into_iter().enumerate() {
            let (neg, body) = render_term(&self.pres.render_word(w), w.is_empty(), c);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

/// Split a term into a sign and an unsigned body.
pub(crate) fn render_term<C: Coeff>(word: &str, unit: bool, c: &C) -> (bool, String) {
    let cs = c.render();
    let simple_neg = cs.starts_with('-') && !is_compound(&cs[1..]);
    let (neg, mag) = if simple_neg { (true, cs[1..].to_string()) } else { (false, cs) };
    let mag = if is_compound(&mag) { format!("({mag})") } else { mag };
    let body = match (unit, mag.as_str()) {
        (true, _) => mag,
        (false, "1") => word.to_string(),
        _ => format!("{mag}*{word}"),
    };
    (neg, body)
}

fn is_compound(s: &str) -> bool {
    s.contains('+') || s.contains('-') || s.contains('/') || s.contains(' ')
}

pub(crate) fn add_into<C: Coeff>(terms: &mut BTreeMap<Word, C>, w: &Word, c: &C) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(w) {
        Some(e) => {
            let s = e.add(c);
            if s.is_zero() {
                terms.remove(w);
            } else {
                *e = s;
            }
        }
        None => {
            terms.insert(w.clone(), c.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn commuting() -> Arc<Presentation> {
        Presentation::builder("test")
            .gen("u", 1)
            .gen("v", 1)
            .rule(&["v", "u"], vec![(Scalar::one(), vec!["u", "v"])])
            .star("u", vec![(Scalar::one(), vec!["v"])])
            .star("v", vec![(Scalar::one(), vec!["u"])])
            .build()
            .unwrap()
    }

    #[test]
    fn commuting_words_sort() {
        let p = commuting();
        let w = NcPoly::<Scalar>::word(&p, vec![1, 0, 1, 0]).unwrap();
        assert_eq!(w.terms().keys().next().unwrap(), &vec![0, 0, 1, 1]);
        assert_eq!(w.render(), "u^2*v^2");
    }

    #[test]
    fn cancellation_prunes_zero() {
        let p = commuting();
        let a = NcPoly::<Scalar>::word(&p, vec![1, 0]).unwrap();
        let b = NcPoly::<Scalar>::word(&p, vec![0, 1]).unwrap();
        assert!(a.sub(&b).is_zero());
    }

    #[test]
    fn star_reverses() {
        let p = commuting();
        let u = NcPoly::<Scalar>::gen(&p, "u").unwrap();
        let v = NcPoly::<Scalar>::gen(&p, "v").unwrap();
        let x = u.mul(&u).add(&v.scale(&Scalar::q()));
        assert_eq!(x.star().unwrap(), v.mul(&v).add(&u.scale(&Scalar::q())));
    }

    #[test]
    fn budget_exceeded_names_word() {
        // u -> v, v -> ... cannot loop under a decreasing order, so use a
        // tiny budget instead.
        let p = Presentation::builder("tiny")
            .gen("u", 1)
            .gen("v", 1)
            .rule(&["v", "u"], vec![(Scalar::one(), vec!["u", "v"])])
            .step_budget(2)
            .build()
            .unwrap();
        let err = NcPoly::<Scalar>::word(&p, vec![1, 1, 1, 0, 0]).unwrap_err();
        assert!(matches!(err, FreeAlgError::StepBudgetExceeded { .. }));
    }

    #[test]
    fn increasing_rule_rejected() {
        let r = Presentation::builder("bad")
            .gen("u", 1)
            .gen("v", 1)
            .rule(&["u", "v"], vec![(Scalar::one(), vec!["v", "u"])])
            .build();
        assert!(matches!(r, Err(FreeAlgError::NonDecreasingRule { .. })));
    }

    #[test]
    fn mismatched_presentations_error() {
        let a = NcPoly::<Scalar>::one(&commuting());
        let other = Presentation::builder("other").gen("u", 1).build().unwrap();
        let b = NcPoly::<Scalar>::one(&other);
        assert!(matches!(a.try_mul(&b), Err(FreeAlgError::MismatchedPresentations { .. })));
    }
}
