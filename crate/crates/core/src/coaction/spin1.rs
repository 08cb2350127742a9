use super::pol_letters;
use crate::freealg::{NcPoly, TensorPoly};
use crate::pol::{counit_pol, delta_pol, make_pol, PolVariant};
use crate::report::{CheckEntry, Report};
use crate::scalar::{ExtScalar, Scalar};

pub type ExtPoly = NcPoly<ExtScalar>;

fn ext(p: &NcPoly) -> ExtPoly {
    p.map_coeffs(ExtScalar::embed)
}

/// The spin-1 matrix with rows and columns ordered `(-1, 0, 1)`, where
/// `t = (1+q^2)^(1/2)`, `c = -q mu b*` and `d = a*` (the generators
/// themselves for `Pol(SL_q(2,C))`).
pub fn spin1_matrix(v: PolVariant) -> [[ExtPoly; 3]; 3] {
    let (a, b, c, d) = match v.mu() {
        Some(mu) => {
            let l = pol_letters(v);
            let c = l.bst.scale(&Scalar::q().mul(&Scalar::from_rational(&mu)).neg());
            (l.a, l.b, c, l.ast)
        }
        None => {
            let g = |n| crate::pol::pol_gen(v, n);
            (g("a"), g("b"), g("c"), g("d"))
        }
    };
    let one = NcPoly::one(a.presentation());
    let t = ExtScalar::t();
    let qq = Scalar::q().add(&Scalar::q_pow(-1));
    let plain = |p: NcPoly| ext(&p);
    let rooted = |p: NcPoly| ext(&p).scale(&t);
    [
        [plain(d.mul(&d)), rooted(d.mul(&b)), plain(b.mul(&b))],
        [rooted(d.mul(&c)), plain(one.add(&b.mul(&c).scale(&qq))), rooted(b.mul(&a))],
        [plain(c.mul(&c)), rooted(c.mul(&a)), plain(a.mul(&a))],
    ]
}

/// Split `p = base + t ext` into its two `Q(s)` parts.
pub(crate) fn split(p: &ExtPoly) -> (NcPoly, NcPoly) {
    let pres = p.presentation();
    let base = NcPoly::from_terms(pres, p.terms().iter().map(|(w, c)| (w.clone(), c.base.clone()))).expect("normal");
    let tp = NcPoly::from_terms(pres, p.terms().iter().map(|(w, c)| (w.clone(), c.ext.clone()))).expect("normal");
    (base, tp)
}

pub(crate) fn delta_ext(v: PolVariant, p: &ExtPoly) -> crate::Result<TensorPoly<ExtScalar>> {
    let (base, tp) = split(p);
    let db = delta_pol(v, &base)?.map_coeffs(ExtScalar::embed);
    let dt = delta_pol(v, &tp)?.map_coeffs(ExtScalar::embed).scale(&ExtScalar::t());
    Ok(db.add(&dt))
}

fn counit_ext(v: PolVariant, p: &ExtPoly) -> crate::Result<ExtScalar> {
    let (base, tp) = split(p);
    Ok(ExtScalar::new(counit_pol(v, &base)?, counit_pol(v, &tp)?))
}

const LABELS: [&str; 3] = ["-1", "0", "1"];

/// `Delta(M_ij) = sum_k M_ik ⊗ M_kj` and `eps(M_ij) = delta_ij`.
pub fn spin1_check(v: PolVariant) -> Report {
    let mut r = Report::new();
    let m = spin1_matrix(v);
    let pp = make_pol(v);
    for i in 0..3 {
        for j in 0..3 {
            let id = format!("coaction.spin1[{}].{},{}", v.id(), LABELS[i], LABELS[j]);
            let sides = delta_ext(v, &m[i][j]).map(|lhs| {
                let rhs = (0..3).fold(TensorPoly::zero(&[pp.clone(), pp.clone()]), |acc, k| {
                    acc.add(&TensorPoly::outer(&[&m[i][k], &m[k][j]]))
                });
                (lhs, rhs)
            });
            r.push(CheckEntry::compare_result(format!("{id}.delta"), m[i][j].render(), sides, TensorPoly::render));
            let expected = if i == j { ExtScalar::one() } else { ExtScalar::zero() };
            let sides = counit_ext(v, &m[i][j]).map(|e| (e, expected));
            r.push(CheckEntry::compare_result(format!("{id}.counit"), m[i][j].render(), sides, ExtScalar::render));
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corner_entry_coproduct() {
        let v = PolVariant::Plus;
        let l = pol_letters(v);
        let c = l.bst.scale(&Scalar::q().neg());
        let (a, b) = (l.a, l.b);
        let one_q2 = Scalar::one().add(&Scalar::q_pow(2));
        let expected = TensorPoly::outer(&[&a.mul(&a), &a.mul(&a)])
            .add(&TensorPoly::outer(&[&c.mul(&a), &b.mul(&a)]).scale(&one_q2))
            .add(&TensorPoly::outer(&[&c.mul(&c), &b.mul(&b)]));
        assert_eq!(delta_pol(v, &a.mul(&a)).unwrap(), expected);
    }

    #[test]
    fn all_variants_pass() {
        for v in PolVariant::ALL {
            let rep = spin1_check(v);
            assert_eq!(rep.len(), 18);
            assert!(rep.all_passed(), "{:#?}", rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn zero_variant_is_upper_triangular() {
        let m = spin1_matrix(PolVariant::Zero);
        assert!(m[1][0].is_zero() && m[2][0].is_zero() && m[2][1].is_zero());
        assert_eq!(m[1][1], NcPoly::one(&make_pol(PolVariant::Zero)));
    }
}
