//! Ranks of matrices over `Q(s)`.
//!
//! A rank computed after substituting `s -> s0` in `Z/p` never exceeds the
//! true rank, so a full modular rank is a certificate. Anything short of
//! full falls back to exact elimination.

use crate::scalar::{modinv, mulmod, Scalar};
use rand::Rng;

pub const MODULUS: u64 = (1 << 61) - 1;

/// How a rank was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    Modular,
    Exact,
}

/// Rank of the matrix after `s -> s0` mod `p`, or `None` if some entry has a
/// vanishing denominator there.
pub fn rank_mod(rows: &[Vec<Scalar>], s0: u64, p: u64) -> Option<usize> {
    let mut m: Vec<Vec<u64>> = Vec::with_capacity(rows.len());
    for row in rows {
        m.push(row.iter().map(|x| x.eval_mod(s0, p)).collect::<Option<Vec<_>>>()?);
    }
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = modinv(m[rank][c], p)?;
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = mulmod(m[r][c], inv, p);
                for k in c..cols {
                    let sub = mulmod(f, m[rank][k], p);
                    m[r][k] = (m[r][k] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Exact rank by Gaussian elimination over `Q(s)`.
pub fn rank_exact(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, piv);
        let inv = m[rank][c].inv().expect("nonzero pivot");
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].mul(&inv);
                for k in c..cols {
                    if !pivot_row[k].is_zero() {
                        row[k] = row[k].sub(&f.mul(&pivot_row[k]));
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over `Q(s)`: modular at a few random points, exact when no point
/// certifies full rank.
pub fn rank<R: Rng>(rows: &[Vec<Scalar>], rng: &mut R) -> (usize, RankMethod) {
    let full = rows.len().min(rows.first().map_or(0, Vec::len));
    if full == 0 {
        return (0, RankMethod::Modular);
    }
    for _ in 0..3 {
        let s0 = rng.gen_range(2..MODULUS - 1);
        if rank_mod(rows, s0, MODULUS) == Some(full) {
            return (full, RankMethod::Modular);
        }
    }
    (rank_exact(rows), RankMethod::Exact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn s(k: i32) -> Scalar {
        Scalar::s_pow(k)
    }

    #[test]
    fn dependent_rows_detected() {
        let r1 = vec![s(1), Scalar::one(), s(-2)];
        let r2: Vec<Scalar> = r1.iter().map(|x| x.mul(&Scalar::lambda())).collect();
        let r3 = vec![Scalar::one(), Scalar::zero(), Scalar::q()];
        let m = vec![r1, r2, r3];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        assert_eq!(rank(&m, &mut rng), (2, RankMethod::Exact));
        assert_eq!(rank_exact(&m), 2);
    }

    #[test]
    fn full_rank_certified_modularly() {
        let m = vec![vec![Scalar::one(), s(1)], vec![s(1), Scalar::q_pow(2)]];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        assert_eq!(rank(&m, &mut rng), (2, RankMethod::Modular));
    }

    #[test]
    fn modular_and_exact_agree_on_vandermonde() {
        let m: Vec<Vec<Scalar>> = (0..4).map(|i| (0..4).map(|j| Scalar::q_pow(i * j)).collect()).collect();
        assert_eq!(rank_exact(&m), 4);
        assert_eq!(rank_mod(&m, 12345, MODULUS), Some(4));
    }
}
