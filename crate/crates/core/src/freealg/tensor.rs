use super::ncpoly::{reduce, render_term, NcPoly};
use super::presentation::{Presentation, Word};
use super::FreeAlgError;
use crate::scalar::{Coeff, Scalar};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

/// An element of a tensor product of presented algebras, stored as a
/// combination of tuples of normal words.
#[derive(Clone)]
pub struct TensorPoly<C: Coeff = Scalar> {
    comps: Vec<Arc<Presentation>>,
    terms: BTreeMap<Vec<Word>, C>,
}

impl<C: Coeff> PartialEq for TensorPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.comps.len() == other.comps.len()
            && self.comps.iter().zip(&other.comps).all(|(a, b)| a.id() == b.id())
            && self.terms == other.terms
    }
}

impl<C: Coeff> fmt::Debug for TensorPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorPoly({})", self.render())
    }
}

impl<C: Coeff> fmt::Display for TensorPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<C: Coeff> TensorPoly<C> {
    pub fn zero(comps: &[Arc<Presentation>]) -> Self {
        TensorPoly { comps: comps.to_vec(), terms: BTreeMap::new() }
    }

    pub fn one(comps: &[Arc<Presentation>]) -> Self {
        TensorPoly::zero(comps).with_term(vec![Vec::new(); comps.len()], C::one())
    }

    fn with_term(mut self, k: Vec<Word>, c: C) -> Self {
        if !c.is_zero() {
            self.terms.insert(k, c);
        }
        self
    }

    /// `p_1 ⊗ p_2 ⊗ ...`
    pub fn outer(legs: &[&NcPoly<C>]) -> Self {
        let comps: Vec<_> = legs.iter().map(|p| p.presentation().clone()).collect();
        let mut acc: Vec<(Vec<Word>, C)> = vec![(Vec::new(), C::one())];
        for leg in legs {
            let mut next = Vec::with_capacity(acc.len() * leg.len());
            for (k, c) in &acc {
                for (w, d) in leg.terms() {
                    let mut nk = k.clone();
                    nk.push(w.clone());
                    next.push((nk, c.mul(d)));
                }
            }
            acc = next;
        }
        let mut out = TensorPoly::zero(&comps);
        for (k, c) in acc {
            out.add_term(k, &c);
        }
        out
    }

    /// Build from word tuples, reducing each leg.
    pub fn from_terms(
        comps: &[Arc<Presentation>],
        terms: impl IntoIterator<Item = (Vec<Word>, C)>,
    ) -> Result<Self, FreeAlgError> {
        let mut out = TensorPoly::zero(comps);
        for (k, c) in terms {
            let legs: Vec<NcPoly<C>> = k
                .into_iter()
                .zip(comps)
                .map(|(w, p)| NcPoly::from_terms(p, [(w, C::one())]))
                .collect::<Result<_, _>>()?;
            let refs: Vec<&NcPoly<C>> = legs.iter().collect();
            let t = TensorPoly::outer(&refs);
            out = out.add(&t.scale(&c));
        }
        Ok(out)
    }

    pub fn components(&self) -> &[Arc<Presentation>] {
        &self.comps
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Word>, C> {
        &self.terms
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

    pub fn coeff(&self, k: &[Word]) -> C {
        self.terms.get(k).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, k: Vec<Word>, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(e) => {
                let s = e.add(c);
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *e = s;
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    fn same(&self, other: &Self) -> Result<(), FreeAlgError> {
        let ok = self.comps.len() == other.comps.len()
            && self.comps.iter().zip(&other.comps).all(|(a, b)| a.id() == b.id());
        if ok {
            Ok(())
        } else {
            Err(FreeAlgError::MismatchedPresentations { left: self.signature(), right: other.signature() })
        }
    }

    /// Component ids joined by `⊗`.
    pub fn signature(&self) -> String {
        self.comps.iter().map(|p| p.id().to_string()).collect::<Vec<_>>().join(" ⊗ ")
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.same(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("tensor_add")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&C::one().neg())
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return TensorPoly::zero(&self.comps);
        }
        TensorPoly { comps: self.comps.clone(), terms: self.terms.iter().map(|(w, c)| (w.clone(), c.mul(k))).collect() }
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`, each leg reduced.
    pub fn try_mul(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.same(other)?;
        let n = self.comps.len();
        let mut memo: Vec<HashMap<(&Word, &Word), Vec<(Word, C)>>> = vec![HashMap::new(); n];
        let mut out = TensorPoly::zero(&self.comps);
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let mut acc: Vec<(Vec<Word>, C)> = vec![(Vec::with_capacity(n), cu.mul(cv))];
                for i in 0..n {
                    let leg = match memo[i].get(&(&u[i], &v[i])) {
                        Some(l) => l.clone(),
                        None => {
                            let mut w = u[i].clone();
                            w.extend_from_slice(&v[i]);
                            let l: Vec<(Word, C)> = reduce(&self.comps[i], [(w, C::one())])?.into_iter().collect();
                            memo[i].insert((&u[i], &v[i]), l.clone());
                            l
                        }
                    };
                    let mut next = Vec::with_capacity(acc.len() * leg.len());
                    for (k, c) in &acc {
                        for (w, d) in &leg {
                            let mut nk = k.clone();
                            nk.push(w.clone());
                            next.push((nk, c.mul(d)));
                        }
                    }
                    acc = next;
                }
                for (k, c) in acc {
                    out.add_term(k, &c);
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("tensor_mul")
    }

    /// The product with legs concatenated but not reduced, as a raw list of
    /// word tuples. Used to display intermediate expansions.
    pub fn mul_unreduced(&self, other: &Self) -> Vec<(Vec<Word>, C)> {
        let mut out = Vec::new();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let k = u.iter().zip(v).map(|(a, b)| [a.as_slice(), b.as_slice()].concat()).collect();
                out.push((k, cu.mul(cv)));
            }
        }
        out
    }

    /// Apply a linear map to one leg.
    pub fn map_leg<F>(&self, leg: usize, target: &Arc<Presentation>, f: F) -> Result<Self, FreeAlgError>
    where
        F: Fn(&Word) -> Result<NcPoly<C>, FreeAlgError>,
    {
        let mut comps = self.comps.clone();
        comps[leg] = target.clone();
        let mut out = TensorPoly::zero(&comps);
        let mut memo: HashMap<&Word, NcPoly<C>> = HashMap::new();
        for (k, c) in &self.terms {
            let img = match memo.get(&k[leg]) {
                Some(p) => p.clone(),
                None => {
                    let p = f(&k[leg])?;
                    memo.insert(&k[leg], p.clone());
                    p
                }
            };
            for (w, d) in img.terms() {
                let mut nk = k.clone();
                nk[leg] = w.clone();
                out.add_term(nk, &c.mul(d));
            }
        }
        Ok(out)
    }

    /// Replace one leg by a tensor factor with several legs (e.g. apply a
    /// coproduct to the last leg).
    pub fn expand_leg<F>(&self, leg: usize, f: F) -> Result<Self, FreeAlgError>
    where
        F: Fn(&Word) -> Result<TensorPoly<C>, FreeAlgError>,
    {
        let mut memo: HashMap<&Word, TensorPoly<C>> = HashMap::new();
        let mut out: Option<TensorPoly<C>> = None;
        for (k, c) in &self.terms {
            let img = match memo.get(&k[leg]) {
                Some(t) => t.clone(),
                None => {
                    let t = f(&k[leg])?;
                    memo.insert(&k[leg], t.clone());
                    t
                }
            };
            let acc = out.get_or_insert_with(|| {
                let mut comps = self.comps[..leg].to_vec();
                comps.extend_from_slice(img.components());
                comps.extend_from_slice(&self.comps[leg + 1..]);
                TensorPoly::zero(&comps)
            });
            for (ik, d) in &img.terms {
                let mut nk = k[..leg].to_vec();
                nk.extend(ik.iter().cloned());
                nk.extend(k[leg + 1..].iter().cloned());
                acc.add_term(nk, &c.mul(d));
            }
        }
        out.ok_or_else(|| FreeAlgError::Other("expand_leg on zero tensor needs explicit components".into()))
    }

    /// Contract one leg with a scalar-valued linear functional.
    pub fn contract_leg<F>(&self, leg: usize, f: F) -> Result<Self, FreeAlgError>
    where
        F: Fn(&Word) -> Result<C, FreeAlgError>,
    {
        let mut comps = self.comps.clone();
        comps.remove(leg);
        let mut out = TensorPoly::zero(&comps);
        let mut memo: HashMap<&Word, C> = HashMap::new();
        for (k, c) in &self.terms {
            let v = match memo.get(&k[leg]) {
                Some(v) => v.clone(),
                None => {
                    let v = f(&k[leg])?;
                    memo.insert(&k[leg], v.clone());
                    v
                }
            };
            if v.is_zero() {
                continue;
            }
            let mut nk = k.clone();
            nk.remove(leg);
            out.add_term(nk, &c.mul(&v));
        }
        Ok(out)
    }

    /// Multiply all legs together (legs must share one presentation).
    pub fn multiply_out(&self) -> Result<NcPoly<C>, FreeAlgError> {
        let p = &self.comps[0];
        if let Some(q) = self.comps.iter().find(|q| q.id() != p.id()) {
            return Err(FreeAlgError::MismatchedPresentations { left: p.id().to_string(), right: q.id().to_string() });
        }
        NcPoly::from_terms(p, self.terms.iter().map(|(k, c)| (k.concat(), c.clone())))
    }

    /// View a one-leg tensor as a polynomial.
    pub fn into_single(self) -> NcPoly<C> {
        assert_eq!(self.comps.len(), 1, "into_single on a multi-leg tensor");
        let p = self.comps[0].clone();
        NcPoly::from_normal(&p, self.terms.into_iter().map(|(mut k, c)| (k.pop().unwrap(), c)).collect())
    }

    /// Swap the two legs of a 2-leg tensor.
    pub fn flip(&self) -> Self {
        assert_eq!(self.comps.len(), 2);
        TensorPoly {
            comps: vec![self.comps[1].clone(), self.comps[0].clone()],
            terms: self.terms.iter().map(|(k, c)| (vec![k[1].clone(), k[0].clone()], c.clone())).collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TensorPoly<D> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(k, c)| {
                let d = f(c);
                (!d.is_zero()).then(|| (k.clone(), d))
            })
            .collect();
        TensorPoly { comps: self.comps.clone(), terms }
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let legs: Vec<String> = k.iter().zip(&self.comps).map(|(w, p)| p.render_word(w)).collect();
            let word = format!("({})", legs.join(" ⊗ "));
            let (neg, body) = render_term(&word, false, c);
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

#[cfg(test)]
mod tests {
    use super::*;

    fn pres() -> Arc<Presentation> {
        Presentation::builder("t")
            .gen("Ki", 1)
            .gen("K", 1)
            .inverse_pair("K", "Ki")
            .build()
            .unwrap()
    }

    #[test]
    fn unit_is_neutral() {
        let p = pres();
        let k = NcPoly::<Scalar>::gen(&p, "K").unwrap();
        let u = TensorPoly::outer(&[&k, &k]);
        let one = TensorPoly::one(&[p.clone(), p.clone()]);
        assert_eq!(one.mul(&u), u);
        assert_eq!(u.mul(&one), u);
    }

    #[test]
    fn legs_reduce_independently() {
        let p = pres();
        let k = NcPoly::<Scalar>::gen(&p, "K").unwrap();
        let ki = NcPoly::<Scalar>::gen(&p, "Ki").unwrap();
        let a = TensorPoly::outer(&[&k, &ki]);
        let b = TensorPoly::outer(&[&ki, &ki]);
        let one = NcPoly::one(&p);
        let expected = TensorPoly::outer(&[&one, &ki.mul(&ki)]);
        assert_eq!(a.mul(&b), expected);
        assert_eq!(a.mul(&b).render(), "(1 ⊗ K^-2)");
    }
}
