use super::ncpoly::{render_term, NcPoly};
use super::presentation::{Presentation, Word};
use super::tensor::TensorPoly;
use super::FreeAlgError;
use crate::scalar::{Coeff, Scalar};
use std::collections::HashMap;

/// Whether an extension reverses products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomMode {
    Hom,
    AntiHom,
}

/// Targets a homomorphism can be extended into.
pub trait Element<C: Coeff>: Clone {
    fn mul_elem(&self, other: &Self) -> Result<Self, FreeAlgError>;
    fn add_elem(&self, other: &Self) -> Self;
    fn scale_elem(&self, c: &C) -> Self;
}

impl<C: Coeff> Element<C> for NcPoly<C> {
    fn mul_elem(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.try_mul(other)
    }
    fn add_elem(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn scale_elem(&self, c: &C) -> Self {
        self.scale(c)
    }
}

impl<C: Coeff> Element<C> for TensorPoly<C> {
    fn mul_elem(&self, other: &Self) -> Result<Self, FreeAlgError> {
        self.try_mul(other)
    }
    fn add_elem(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn scale_elem(&self, c: &C) -> Self {
        self.scale(c)
    }
}

impl Element<Scalar> for Scalar {
    fn mul_elem(&self, other: &Self) -> Result<Self, FreeAlgError> {
        Ok(self.mul(other))
    }
    fn add_elem(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn scale_elem(&self, c: &Scalar) -> Self {
        self.mul(c)
    }
}

/// Unital (anti-)multiplicative linear extension of generator images.
///
/// `images[i]` is the image of generator `i` of `p`'s presentation; `zero`
/// and `unit` fix the target. Products of shared prefixes are reused.
pub fn apply_hom<C: Coeff, T: Element<C>>(
    p: &NcPoly<C>,
    images: &[T],
    unit: &T,
    mode: HomMode,
) -> Result<T, FreeAlgError> {
    let pres = p.presentation();
    if images.len() < pres.num_generators() {
        return Err(FreeAlgError::MissingImage(pres.gen_name(images.len() as u8).to_string()));
    }
    let zero = unit.scale_elem(&C::zero());
    let mut cache: HashMap<Word, T> = HashMap::new();
    let mut acc = zero;
    for (w, c) in p.terms() {
        let img = cached_word_image(w, images, unit, mode, &mut cache)?;
        acc = acc.add_elem(&img.scale_elem(c));
    }
    Ok(acc)
}

fn cached_word_image<C: Coeff, T: Element<C>>(
    w: &[u8],
    images: &[T],
    unit: &T,
    mode: HomMode,
    cache: &mut HashMap<Word, T>,
) -> Result<T, FreeAlgError> {
    if w.is_empty() {
        return Ok(unit.clone());
    }
    if let Some(t) = cache.get(w) {
        return Ok(t.clone());
    }
    let (head, last) = w.split_at(w.len() - 1);
    let prefix = cached_word_image(head, images, unit, mode, cache)?;
    let g = &images[last[0] as usize];
    let t = match mode {
        HomMode::Hom => prefix.mul_elem(g)?,
        HomMode::AntiHom => g.mul_elem(&prefix)?,
    };
    cache.insert(w.to_vec(), t.clone());
    Ok(t)
}

/// Product of generator images along a raw (not necessarily normal) word.
pub fn word_image<C: Coeff, T: Element<C>>(
    w: &[u8],
    images: &[T],
    unit: &T,
    mode: HomMode,
) -> Result<T, FreeAlgError> {
    let mut acc = unit.clone();
    for &g in w {
        let img = images.get(g as usize).ok_or_else(|| FreeAlgError::MissingImage(format!("#{g}")))?;
        acc = match mode {
            HomMode::Hom => acc.mul_elem(img)?,
            HomMode::AntiHom => img.mul_elem(&acc)?,
        };
    }
    Ok(acc)
}

/// Evaluate both sides of every rule of `pres` under the given generator
/// images. Returns the first rule whose sides differ, as
/// `(rule text, image of lhs, image of rhs)`.
pub fn relation_mismatch<C: Coeff, T: Element<C> + PartialEq>(
    pres: &Presentation,
    images: &[T],
    unit: &T,
    mode: HomMode,
) -> Result<Option<(String, T, T)>, FreeAlgError> {
    let zero = unit.scale_elem(&C::zero());
    for rule in pres.rules() {
        let lhs = word_image(&rule.lhs, images, unit, mode)?;
        let mut rhs = zero.clone();
        for (w, c) in &rule.rhs {
            rhs = rhs.add_elem(&word_image(w, images, unit, mode)?.scale_elem(&C::from_scalar(c)));
        }
        if lhs != rhs {
            let text = format!("{} = {}", pres.render_word(&rule.lhs), rule_rhs_text(pres, &rule.rhs));
            return Ok(Some((text, lhs, rhs)));
        }
    }
    Ok(None)
}

fn rule_rhs_text(pres: &Presentation, rhs: &[(Word, Scalar)]) -> String {
    if rhs.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (w, c)) in rhs.iter().enumerate() {
        let (neg, body) = render_term(&pres.render_word(w), w.is_empty(), c);
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

/// Linear extension of a map defined on normal words.
pub fn apply_linear<C: Coeff, T: Element<C>>(
    p: &NcPoly<C>,
    zero: &T,
    f: impl Fn(&Word) -> Result<T, FreeAlgError>,
) -> Result<T, FreeAlgError> {
    let mut acc = zero.clone();
    for (w, c) in p.terms() {
        acc = acc.add_elem(&f(w)?.scale_elem(c));
    }
    Ok(acc)
}
