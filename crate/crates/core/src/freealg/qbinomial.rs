//! Binomial expansion for q^2-commuting variables.

use super::{NcPoly, Presentation};
use crate::report::{CheckEntry, Report, Witness};
use crate::scalar::Scalar;
use std::sync::Arc;

/// Two generators `w < v` with `v*w -> q^2 w*v`, so that
/// `(v + w)^r = sum_k [r, k] w^k v^(r-k)` with Gaussian binomials in `q^2`.
pub fn qbinomial_presentation() -> Arc<Presentation> {
    Presentation::builder("QPlane(q^2)")
        .gen("w", 1)
        .gen("v", 1)
        .rule(&["v", "w"], vec![(Scalar::q_pow(2), vec!["w", "v"])])
        .build()
        .expect("q-plane presentation")
}

/// Gaussian binomial `[r, k]` in the variable `q^2`, by the recursion
/// `[r, k] = [r-1, k] + Q^(r-k) [r-1, k-1]`.
pub fn qbinomial(r: u32, k: u32) -> Scalar {
    if k > r {
        return Scalar::zero();
    }
    let mut row = vec![Scalar::one()];
    for n in 1..=r {
        let mut next = vec![Scalar::zero(); n as usize + 1];
        for j in 0..=n as usize {
            let mut c = if j < n as usize { row[j].clone() } else { Scalar::zero() };
            if j > 0 {
                c = c.add(&Scalar::q_pow(2 * (n as i32 - j as i32)).mul(&row[j - 1]));
            }
            next[j] = c;
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Expand `(v + w)^r` by repeated multiplication and compare with the
/// closed form for every `r <= rmax`.
pub fn qbinomial_identity_check(rmax: u32) -> Report {
    let p = qbinomial_presentation();
    let v = NcPoly::<Scalar>::gen(&p, "v").expect("v");
    let w = NcPoly::<Scalar>::gen(&p, "w").expect("w");
    let sum = v.add(&w);
    let mut report = Report::new();
    let mut power = NcPoly::one(&p);
    for r in 1..=rmax {
        power = power.mul(&sum);
        let mut expected = NcPoly::zero(&p);
        for k in 0..=r {
            let mono = w.pow(k).expect("pow").mul(&v.pow(r - k).expect("pow"));
            expected = expected.add(&mono.scale(&qbinomial(r, k)));
        }
        let id = format!("qbinomial.r={r}");
        let entry = if power == expected {
            CheckEntry::pass(id)
        } else {
            CheckEntry::fail(
                id,
                Witness { element: format!("(v + w)^{r}"), lhs: power.render(), rhs: expected.render() },
            )
        };
        report.push(entry.with_note("orientation v*w = q^2 w*v"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert!(qbinomial(3, 0).is_one());
        assert_eq!(qbinomial(2, 1), Scalar::one().add(&Scalar::q_pow(2)));
        assert!(qbinomial(2, 3).is_zero());
    }

    #[test]
    fn square_expands_as_displayed() {
        let p = qbinomial_presentation();
        let v = NcPoly::<Scalar>::gen(&p, "v").unwrap();
        let w = NcPoly::<Scalar>::gen(&p, "w").unwrap();
        let sq = v.add(&w).pow(2).unwrap();
        let expected = w.mul(&w).add(&w.mul(&v).scale(&qbinomial(2, 1))).add(&v.mul(&v));
        assert_eq!(sq, expected);
    }
}
