use super::FreeAlgError;
use crate::scalar::Scalar;
use std::fmt;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// A generator word. Entries index into the presentation's generator list,
/// which is stored in precedence order.
pub type Word = Vec<u8>;

/// Default bound on rewrite steps per normal-form computation.
pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

/// Build a presentation once per process and share it afterwards.
pub fn cached_presentation(
    id: &str,
    build: impl FnOnce() -> Result<Arc<Presentation>, FreeAlgError>,
) -> Result<Arc<Presentation>, FreeAlgError> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<Presentation>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("presentation cache").get(id) {
        return Ok(p.clone());
    }
    let p = build()?;
    Ok(cache.lock().expect("presentation cache").entry(id.to_string()).or_insert(p).clone())
}

/// Canonical algebra name, e.g. `Uq(1,-1)`, `A(0,1;2)`, `Pol(+)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraId(pub String);

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    /// Index of the formal inverse, if the generator is invertible.
    pub inverse: Option<u8>,
    /// Set on the second member of an inverse pair: runs of this generator
    /// are written as negative powers of the first.
    pub renders_as_inverse: bool,
    pub weight: u32,
}

/// `lhs -> sum of coeff * word`.
#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Vec<(Word, Scalar)>,
}

/// A finitely presented *-algebra with an oriented, terminating rule set.
#[derive(Debug)]
pub struct Presentation {
    id: AlgebraId,
    gens: Vec<Generator>,
    rules: Vec<Rule>,
    star: Option<Vec<Vec<(Word, Scalar)>>>,
    by_first: Vec<Vec<usize>>,
    step_budget: usize,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Presentation {
    pub fn builder(id: impl Into<String>) -> PresentationBuilder {
        PresentationBuilder {
            id: AlgebraId(id.into()),
            gens: Vec::new(),
            rules: Vec::new(),
            star: None,
            step_budget: DEFAULT_STEP_BUDGET,
        }
    }

    pub fn id(&self) -> &AlgebraId {
        &self.id
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn step_budget(&self) -> usize {
        self.step_budget
    }

    pub fn star_table(&self) -> Option<&[Vec<(Word, Scalar)>]> {
        self.star.as_deref()
    }

    pub fn gen_index(&self, name: &str) -> Option<u8> {
        self.gens.iter().position(|g| g.name == name).map(|i| i as u8)
    }

    pub fn gen_name(&self, i: u8) -> &str {
        &self.gens[i as usize].name
    }

    pub fn longest_lhs(&self) -> usize {
        self.rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0)
    }

    pub fn weight(&self, w: &[u8]) -> u32 {
        w.iter().map(|&g| self.gens[g as usize].weight).sum()
    }

    /// Key realizing the admissible order: weighted degree, then
    /// lexicographic on generator precedence.
    pub fn order_key(&self, w: &[u8]) -> (u32, Word) {
        (self.weight(w), w.to_vec())
    }

    /// Leftmost occurrence of a rule's left side: `(position, rule index)`.
    pub fn find_redex(&self, w: &[u8]) -> Option<(usize, usize)> {
        for i in 0..w.len() {
            for &r in &self.by_first[w[i] as usize] {
                let lhs = &self.rules[r].lhs;
                if w[i..].starts_with(lhs) {
                    return Some((i, r));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.find_redex(w).is_none()
    }

    /// `K*K*E` renders as `K^2*E`, a run of a formal inverse as `K^-2`.
    pub fn render_word(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let g = w[i];
            let mut k = 1;
            while i + k < w.len() && w[i + k] == g {
                k += 1;
            }
            let gen = &self.gens[g as usize];
            parts.push(match (gen.renders_as_inverse, gen.inverse) {
                (true, Some(base)) => format!("{}^-{k}", self.gens[base as usize].name),
                _ if k == 1 => gen.name.clone(),
                _ => format!("{}^{k}", gen.name),
            });
            i += k;
        }
        parts.join("*")
    }
}

pub struct PresentationBuilder {
    id: AlgebraId,
    gens: Vec<Generator>,
    rules: Vec<(Vec<String>, Vec<(Scalar, Vec<String>)>)>,
    star: Option<Vec<(String, Vec<(Scalar, Vec<String>)>)>>,
    step_budget: usize,
}

impl PresentationBuilder {
    /// Add a generator. Generators must be added in increasing precedence.
    pub fn gen(mut self, name: &str, weight: u32) -> Self {
        self.gens.push(Generator { name: name.to_string(), inverse: None, renders_as_inverse: false, weight });
        self
    }

    /// Declare `b` to be the inverse of `a`; adds `ab -> 1`, `ba -> 1`.
    pub fn inverse_pair(mut self, a: &str, b: &str) -> Self {
        let ia = self.gens.iter().position(|g| g.name == a).expect("unknown generator");
        let ib = self.gens.iter().position(|g| g.name == b).expect("unknown generator");
        self.gens[ia].inverse = Some(ib as u8);
        self.gens[ib].inverse = Some(ia as u8);
        self.gens[ib].renders_as_inverse = true;
        self.rules.push((vec![a.into(), b.into()], vec![(Scalar::one(), vec![])]));
        self.rules.push((vec![b.into(), a.into()], vec![(Scalar::one(), vec![])]));
        self
    }

    /// Add the rule `lhs -> sum coeff * word` (words given by generator name).
    pub fn rule(mut self, lhs: &[&str], rhs: Vec<(Scalar, Vec<&str>)>) -> Self {
        let lhs = lhs.iter().map(|s| s.to_string()).collect();
        let rhs = rhs
            .into_iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, w)| (c, w.into_iter().map(String::from).collect()))
            .collect();
        self.rules.push((lhs, rhs));
        self
    }

    /// Star image of a generator as a combination of words.
    pub fn star(mut self, gen: &str, image: Vec<(Scalar, Vec<&str>)>) -> Self {
        let img = image.into_iter().map(|(c, w)| (c, w.into_iter().map(String::from).collect())).collect();
        self.star.get_or_insert_with(Vec::new).push((gen.to_string(), img));
        self
    }

    pub fn step_budget(mut self, budget: usize) -> Self {
        self.step_budget = budget;
        self
    }

    pub fn build(self) -> Result<Arc<Presentation>, FreeAlgError> {
        let index = |name: &str| -> Result<u8, FreeAlgError> {
            self.gens
                .iter()
                .position(|g| g.name == name)
                .map(|i| i as u8)
                .ok_or_else(|| FreeAlgError::UnknownGenerator(name.to_string()))
        };
        let word = |names: &[String]| -> Result<Word, FreeAlgError> { names.iter().map(|n| index(n)).collect() };
        let weight = |w: &[u8]| -> u32 { w.iter().map(|&g| self.gens[g as usize].weight).sum() };

        let mut rules = Vec::new();
        for (lhs, rhs) in &self.rules {
            let l = word(lhs)?;
            let mut r = Vec::new();
            for (c, w) in rhs {
                let w = word(w)?;
                if (weight(&w), &w) >= (weight(&l), &l) {
                    return Err(FreeAlgError::NonDecreasingRule {
                        presentation: self.id.0.clone(),
                        rule: lhs.join("*"),
                    });
                }
                r.push((w, c.clone()));
            }
            rules.push(Rule { lhs: l, rhs: r });
        }

        let star = match &self.star {
            None => None,
            Some(entries) => {
                let mut table = vec![None; self.gens.len()];
                for (g, img) in entries {
                    let gi = index(g)? as usize;
                    let mut terms = Vec::new();
                    for (c, w) in img {
                        terms.push((word(w)?, c.clone()));
                    }
                    table[gi] = Some(terms);
                }
                let mut out = Vec::new();
                for (i, t) in table.into_iter().enumerate() {
                    out.push(t.ok_or_else(|| FreeAlgError::MissingImage(self.gens[i].name.clone()))?);
                }
                Some(out)
            }
        };

        let mut by_first = vec![Vec::new(); self.gens.len()];
        for (i, r) in rules.iter().enumerate() {
            if let Some(&g) = r.lhs.first() {
                by_first[g as usize].push(i);
            }
        }
        Ok(Arc::new(Presentation {
            id: self.id,
            gens: self.gens,
            rules,
            star,
            by_first,
            step_budget: self.step_budget,
        }))
    }
}
