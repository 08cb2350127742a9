//! Diamond-lemma check: every ambiguity among rule left sides must resolve.

use super::ncpoly::reduce;
use super::presentation::{Presentation, Word};
use super::NcPoly;
use crate::report::{CheckEntry, Report, Witness};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::sync::Arc;

/// An ambiguous word with the two rules that apply to it and where.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub word: Word,
    pub first: (usize, usize),
    pub second: (usize, usize),
}

/// All overlap and inclusion ambiguities of length at most `max_len`.
/// Each pair is `(rule index, position)`.
pub fn critical_pairs(pres: &Presentation, max_len: usize) -> Vec<CriticalPair> {
    let rules = pres.rules();
    let mut out = Vec::new();
    for (i, r1) in rules.iter().enumerate() {
        let l1 = &r1.lhs;
        for (j, r2) in rules.iter().enumerate() {
            let l2 = &r2.lhs;
            // overlap: a proper suffix of l1 is a proper prefix of l2
            for k in 1..l1.len().min(l2.len()) {
                if l1[l1.len() - k..] == l2[..k] {
                    let mut w = l1.clone();
                    w.extend_from_slice(&l2[k..]);
                    if w.len() <= max_len {
                        out.push(CriticalPair { word: w, first: (i, 0), second: (j, l1.len() - k) });
                    }
                }
            }
            // inclusion: l2 sits inside l1
            if i != j && l2.len() <= l1.len() && l1.len() <= max_len {
                for pos in 0..=l1.len() - l2.len() {
                    if l1[pos..pos + l2.len()] == l2[..] {
                        out.push(CriticalPair { word: l1.clone(), first: (i, 0), second: (j, pos) });
                    }
                }
            }
        }
    }
    out
}

fn apply_at(pres: &Presentation, w: &[u8], (rule, pos): (usize, usize)) -> Vec<(Word, Scalar)> {
    let r = &pres.rules()[rule];
    r.rhs
        .iter()
        .map(|(rw, c)| {
            let mut nw = w[..pos].to_vec();
            nw.extend_from_slice(rw);
            nw.extend_from_slice(&w[pos + r.lhs.len()..]);
            (nw, c.clone())
        })
        .collect()
}

fn render(pres: &Arc<Presentation>, t: &BTreeMap<Word, Scalar>) -> String {
    NcPoly::from_normal(pres, t.clone()).render()
}

/// Reduce both resolutions of every ambiguity up to `max_len` and compare.
pub fn check_rule_confluence(pres: &Arc<Presentation>, max_len: usize) -> Report {
    let id = format!("confluence.{}", pres.id());
    let mut report = Report::new();
    if max_len < pres.longest_lhs() {
        report.push(CheckEntry::skipped(id, format!("max_len {max_len} below longest rule")));
        return report;
    }
    let pairs = critical_pairs(pres, max_len);
    let mut failure = None;
    for cp in &pairs {
        let a = reduce(pres, apply_at(pres, &cp.word, cp.first));
        let b = reduce(pres, apply_at(pres, &cp.word, cp.second));
        match (a, b) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(a), Ok(b)) => {
                failure = Some(Witness {
                    element: pres.render_word(&cp.word),
                    lhs: render(pres, &a),
                    rhs: render(pres, &b),
                });
                break;
            }
            (Err(e), _) | (_, Err(e)) => {
                failure = Some(Witness { element: pres.render_word(&cp.word), lhs: e.to_string(), rhs: String::new() });
                break;
            }
        }
    }
    let entry = match failure {
        None => CheckEntry::pass(id),
        Some(w) => CheckEntry::fail(id, w),
    };
    report.push(entry.with_note(format!("{} ambiguities up to length {max_len}", pairs.len())));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commuting_generators_are_confluent() {
        let p = Presentation::builder("comm")
            .gen("u", 1)
            .gen("v", 1)
            .gen("w", 1)
            .rule(&["v", "u"], vec![(Scalar::one(), vec!["u", "v"])])
            .rule(&["w", "u"], vec![(Scalar::one(), vec!["u", "w"])])
            .rule(&["w", "v"], vec![(Scalar::one(), vec!["v", "w"])])
            .build()
            .unwrap();
        let r = check_rule_confluence(&p, 3);
        assert!(r.all_passed());
        assert_eq!(critical_pairs(&p, 3).len(), 1);
    }

    #[test]
    fn broken_rules_are_caught() {
        let q = Scalar::q();
        let p = Presentation::builder("skew")
            .gen("u", 1)
            .gen("v", 1)
            .gen("w", 1)
            .rule(&["v", "u"], vec![(q.clone(), vec!["u", "v"])])
            .rule(&["w", "u"], vec![(q.clone(), vec!["u", "w"])])
            .rule(&["w", "v"], vec![(q.mul(&q), vec!["v", "w"])])
            .build()
            .unwrap();
        let r = check_rule_confluence(&p, 3);
        assert!(r.all_passed(), "pure q-commutation is always confluent");
        // vvu gives u^2 one way and u^2 + 2uv + u the other
        let bad = Presentation::builder("bad")
            .gen("u", 1)
            .gen("v", 1)
            .rule(&["v", "u"], vec![(Scalar::one(), vec!["u", "v"]), (Scalar::one(), vec!["u"])])
            .rule(&["v", "v"], vec![(Scalar::one(), vec!["u"])])
            .build()
            .unwrap();
        let r = check_rule_confluence(&bad, 3);
        assert!(!r.all_passed());
        assert!(r.entries[0].witness.is_some());
    }
}
