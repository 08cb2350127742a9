//! A representation of `B` on the span of `e_{n,m}`, truncated to a window.

use crate::casimir::CasimirParams;
use crate::report::{CheckEntry, Report, Witness};
use crate::scalar::Scalar;
use std::collections::{BTreeMap, BTreeSet};

pub type VVector = BTreeMap<(i64, i64), Scalar>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VOp {
    X,
    Y,
    W,
}

/// Operators `x~`, `y~` (for `xs`) and `w~` (with `z = w~^2`) restricted to
/// `|n| <= n_max`, `|m| <= 2 n_max`. Any image leaving the window is `None`.
#[derive(Clone, Debug)]
pub struct TruncatedVRep {
    pub params: CasimirParams,
    pub n_max: i64,
}

pub fn build_v_rep(params: &CasimirParams, n_max: i64) -> TruncatedVRep {
    TruncatedVRep { params: params.clone(), n_max }
}

fn push(out: &mut VVector, key: (i64, i64), c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = out.entry(key).or_insert_with(Scalar::zero);
    *e = e.add(&c);
    if e.is_zero() {
        out.remove(&key);
    }
}

impl TruncatedVRep {
    pub fn in_window(&self, (n, m): (i64, i64)) -> bool {
        n.abs() <= self.n_max && m.abs() <= 2 * self.n_max
    }

    pub fn basis(&self) -> Vec<(i64, i64)> {
        let n = self.n_max;
        (-n..=n).flat_map(|a| (-2 * n..=2 * n).map(move |b| (a, b))).collect()
    }

    /// `-q^2 nu e_{n',m} + tau q^{-2j} e_{n',m+2} - mu q^{-4j} e_{n',m+4}`.
    fn quadratic(&self, out: &mut VVector, c: &Scalar, n2: i64, m: i64, j: i64) {
        let nu = Scalar::from_rational(&self.params.nu);
        let mu = Scalar::from_rational(&self.params.mu);
        let tau = Scalar::from_rational(&self.params.tau);
        let j = j as i32;
        push(out, (n2, m), c.mul(&Scalar::q_pow(2)).mul(&nu).neg());
        push(out, (n2, m + 2), c.mul(&tau).mul(&Scalar::q_pow(-2 * j)));
        push(out, (n2, m + 4), c.mul(&mu).mul(&Scalar::q_pow(-4 * j)).neg());
    }

    pub fn apply(&self, op: VOp, v: &VVector) -> Option<VVector> {
        let mut out = VVector::new();
        for (&(n, m), c) in v {
            match op {
                VOp::X if n >= 0 => push(&mut out, (n + 1, m), c.clone()),
                VOp::X => self.quadratic(&mut out, c, n + 1, m, n),
                VOp::Y if n > 0 => self.quadratic(&mut out, c, n - 1, m, n - 1),
                VOp::Y => push(&mut out, (n - 1, m), c.clone()),
                VOp::W => push(&mut out, (n, m + 1), c.mul(&Scalar::q_pow(-(n as i32)))),
            }
        }
        if out.keys().all(|&k| self.in_window(k)) {
            Some(out)
        } else {
            None
        }
    }

    /// Applies an operator product, rightmost factor first.
    pub fn apply_word(&self, ops: &[VOp], v: &VVector) -> Option<VVector> {
        let mut cur = v.clone();
        for &op in ops.iter().rev() {
            cur = self.apply(op, &cur)?;
        }
        Some(cur)
    }

    pub fn apply_combination(&self, combo: &[(Scalar, Vec<VOp>)], v: &VVector) -> Option<VVector> {
        let mut out = VVector::new();
        for (c, ops) in combo {
            for (k, x) in self.apply_word(ops, v)? {
                push(&mut out, k, x.mul(c));
            }
        }
        Some(out)
    }

    /// The four rewriting relations of `B` as operator combinations that
    /// must vanish.
    pub fn relations(&self) -> Vec<(&'static str, Vec<(Scalar, Vec<VOp>)>)> {
        use VOp::*;
        let nu = Scalar::from_rational(&self.params.nu);
        let mu = Scalar::from_rational(&self.params.mu);
        let tau = Scalar::from_rational(&self.params.tau);
        let one = Scalar::one();
        let q2 = Scalar::q_pow(2);
        let q4 = Scalar::q_pow(4);
        vec![
            ("x z = q^2 z x", vec![(one.clone(), vec![X, W, W]), (q2.neg(), vec![W, W, X])]),
            ("xs z = q^-2 z xs", vec![(one.clone(), vec![Y, W, W]), (Scalar::q_pow(-2).neg(), vec![W, W, Y])]),
            (
                "xs x = -q^2 nu + tau z - mu z^2",
                vec![
                    (one.clone(), vec![Y, X]),
                    (q2.mul(&nu), vec![]),
                    (tau.neg(), vec![W, W]),
                    (mu.clone(), vec![W, W, W, W]),
                ],
            ),
            (
                "x xs = -q^2 nu + q^2 tau z - q^4 mu z^2",
                vec![(one, vec![X, Y]), (q2.mul(&nu), vec![]), (q2.mul(&tau).neg(), vec![W, W]), (q4.mul(&mu), vec![W, W, W, W])],
            ),
        ]
    }
}

fn unit(k: (i64, i64)) -> VVector {
    BTreeMap::from([(k, Scalar::one())])
}

fn single_support(v: &VVector) -> Option<(i64, i64)> {
    if v.len() == 1 {
        v.keys().next().copied()
    } else {
        None
    }
}

/// Relations on every in-window basis vector (instances whose images leave
/// the window are dropped, never truncated), plus independence of the
/// vectors `x~^k w~^m e_00` and `y~^k w~^m e_00` and of the images of the
/// monomials `x^k z^m`, `xs^k z^m` with `k + m <= n_max`.
pub fn check_v_rep(rep: &TruncatedVRep) -> Report {
    use VOp::*;
    let tag = format!("[{}]", rep.params.tag());
    let mut r = Report::new();
    for (name, combo) in rep.relations() {
        let id = format!("vrep.relations{tag}.{name}");
        let (mut tested, mut aborted) = (0usize, 0usize);
        let mut failure = None;
        for b in rep.basis() {
            match rep.apply_combination(&combo, &unit(b)) {
                None => aborted += 1,
                Some(v) => {
                    tested += 1;
                    if !v.is_empty() && failure.is_none() {
                        failure = Some((b, v));
                    }
                }
            }
        }
        let note = format!("{tested} basis vectors, {aborted} out of window");
        let entry = match failure {
            Some(((n, m), v)) => CheckEntry::fail(
                id,
                Witness {
                    element: format!("e_({n},{m})"),
                    lhs: v.iter().map(|((a, b), c)| format!("({})*e_({a},{b})", c.render())).collect::<Vec<_>>().join(" + "),
                    rhs: "0".into(),
                },
            ),
            None if tested == 0 => CheckEntry::fail(
                id,
                Witness { element: name.into(), lhs: "no in-window instance".into(), rhs: String::new() },
            ),
            None => CheckEntry::pass(id),
        };
        r.push(entry.with_note(note));
    }

    let e00 = unit((0, 0));
    let n = rep.n_max;
    let mut seen = BTreeSet::new();
    let mut bad = None;
    let mut words = Vec::new();
    for k in 0..=n {
        for m in 0..=2 * n {
            words.push((X, k, m));
        }
    }
    for k in 1..=n {
        for m in 0..=2 * n {
            words.push((Y, k, m));
        }
    }
    for &(op, k, m) in &words {
        let mut ops = vec![op; k as usize];
        ops.extend(std::iter::repeat_n(W, m as usize));
        let img = rep.apply_word(&ops, &e00);
        let sign = if op == X { k } else { -k };
        match img.as_ref().and_then(single_support) {
            Some(key) if key == (sign, m) && seen.insert(key) => {}
            _ => {
                if bad.is_none() {
                    bad = Some(format!("{:?}^{k} W^{m} e_(0,0)", op));
                }
            }
        }
    }
    let id = format!("vrep.independence{tag}");
    r.push(
        match bad {
            None => CheckEntry::pass(id),
            Some(w) => CheckEntry::fail(id, Witness { element: w, lhs: "not a new basis vector".into(), rhs: String::new() }),
        }
        .with_note(format!("{} vectors", seen.len())),
    );

    let mut seen = BTreeSet::new();
    let mut bad = None;
    let mut count = 0;
    for k in 0..=n {
        for m in 0..=(n - k) {
            for op in [X, Y] {
                if op == Y && k == 0 {
                    continue;
                }
                count += 1;
                let mut ops = vec![op; k as usize];
                ops.extend(std::iter::repeat_n(W, 2 * m as usize));
                match rep.apply_word(&ops, &e00).as_ref().and_then(single_support) {
                    Some(key) if seen.insert(key) => {}
                    _ => {
                        if bad.is_none() {
                            let g = if op == X { "x" } else { "xs" };
                            bad = Some(format!("{g}^{k} z^{m}"));
                        }
                    }
                }
            }
        }
    }
    let id = format!("vrep.monomial_independence{tag}");
    r.push(
        match bad {
            None => CheckEntry::pass(id),
            Some(w) => CheckEntry::fail(id, Witness { element: w, lhs: "image collides".into(), rhs: String::new() }),
        }
        .with_note(format!("{count} monomials")),
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn yx_on_origin() {
        let p = CasimirParams::ints(1, -1, 2);
        let rep = build_v_rep(&p, 4);
        let v = rep.apply_word(&[VOp::Y, VOp::X], &unit((0, 0))).unwrap();
        let expected = VVector::from([
            ((0, 0), Scalar::q_pow(2)),
            ((0, 2), Scalar::from_int(2)),
            ((0, 4), Scalar::from_int(-1)),
        ]);
        assert_eq!(v, expected);
    }

    #[test]
    fn window_aborts() {
        let rep = build_v_rep(&CasimirParams::ints(0, 0, 1), 1);
        assert!(rep.apply(VOp::X, &unit((1, 0))).is_none());
    }

    #[test]
    fn counts_and_relations() {
        for (mu, nu, tau) in [(1, -1, 2), (-1, 1, 0), (0, 0, -2), (1, 0, 1)] {
            let rep = check_v_rep(&build_v_rep(&CasimirParams::ints(mu, nu, tau), 4));
            assert!(rep.all_passed(), "{:#?}", rep.failures().collect::<Vec<_>>());
        }
        let rep = check_v_rep(&build_v_rep(&CasimirParams::ints(1, 1, 1), 4));
        let ind = rep.entries.iter().find(|e| e.id.starts_with("vrep.independence")).unwrap();
        assert_eq!(ind.note.as_deref(), Some("81 vectors"));
    }
}
