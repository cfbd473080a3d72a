use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dense matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        IntMatrix {
            rows,
            cols,
            data: entries.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.get(r, c).clone());
            }
        }
        m
    }

    /// Exact rank over Q by Bareiss fraction-free elimination.
    pub fn rank_bareiss(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let (n, m) = (self.rows, self.cols);
        let mut prev = BigInt::from(1);
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..m {
            // pivot search: smallest nonzero magnitude keeps entries small
            let mut piv: Option<usize> = None;
            for (r, arow) in a.iter().enumerate().skip(row) {
                if !arow[col].is_zero() {
                    match piv {
                        None => piv = Some(r),
                        Some(pr) => {
                            if arow[col].abs() < a[pr][col].abs() {
                                piv = Some(r);
                            }
                        }
                    }
                }
            }
            let Some(piv) = piv else { continue };
            a.swap(row, piv);
            let pval = a[row][col].clone();
            for r in row + 1..n {
                for c in col + 1..m {
                    let v = &a[r][c] * &pval - &a[r][col] * &a[row][c];
                    a[r][c] = &v / &prev; // exact by Bareiss
                }
                a[r][col] = BigInt::zero();
            }
            prev = pval;
            row += 1;
            rank += 1;
            if row == n {
                break;
            }
        }
        rank
    }

    /// Rank over F_p (p must fit comfortably in u64, p < 2^31).
    pub fn rank_mod(&self, p: u64) -> usize {
        let pi = BigInt::from(p);
        let mut a: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| {
                        let m = self.get(r, c) % &pi;
                        let m = if m.is_negative() { m + &pi } else { m };
                        u64::try_from(m).unwrap()
                    })
                    .collect()
            })
            .collect();
        rank_mod_u64(&mut a, p)
    }
}

pub(crate) fn rank_mod_u64(a: &mut [Vec<u64>], p: u64) -> usize {
    let n = a.len();
    if n == 0 {
        return 0;
    }
    let m = a[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..m {
        let Some(piv) = (row..n).find(|&r| a[r][col] % p != 0) else {
            continue;
        };
        a.swap(row, piv);
        let inv = mod_inv(a[row][col] % p, p);
        for c in col..m {
            a[row][c] = a[row][c] % p * inv % p;
        }
        for r in 0..n {
            if r != row && a[r][col] % p != 0 {
                let f = a[r][col] % p;
                for c in col..m {
                    a[r][c] = (a[r][c] + (p - f) * a[row][c]) % p;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == n {
            break;
        }
    }
    rank
}

pub(crate) fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

pub(crate) fn mod_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * a as u128 % p as u128) as u64;
        }
        a = (a as u128 * a as u128 % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Rank report of the two-phase verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub rank: usize,
    pub modular: Vec<(u64, usize)>,
}

// elimination bugs on a 352x352 matrix are silent; the modular ranks are an
// independent route (rank mod p <= rank over Q, equal for almost all p)
const CHECK_PRIMES: [u64; 3] = [1_073_741_789, 1_073_741_783, 1_073_741_741];

/// Exact rank over Q with modular cross-check at three 30-bit primes.
/// Panics if any modular rank exceeds the fraction-free rank (impossible for
/// a correct elimination).
pub fn int_rank(m: &IntMatrix) -> RankReport {
    let rank = m.rank_bareiss();
    let modular: Vec<(u64, usize)> = CHECK_PRIMES.iter().map(|&p| (p, m.rank_mod(p))).collect();
    for &(p, rp) in &modular {
        assert!(
            rp <= rank,
            "rank mod {p} = {rp} exceeds rational rank {rank}"
        );
    }
    RankReport { rank, modular }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rank() {
        let m = IntMatrix::identity(4);
        let r = int_rank(&m);
        assert_eq!(r.rank, 4);
        assert!(r.modular.iter().all(|&(_, rp)| rp == 4));
    }

    #[test]
    fn zero_rank() {
        let m = IntMatrix::zeros(3, 5);
        assert_eq!(int_rank(&m).rank, 0);
    }

    #[test]
    fn rank_deficient() {
        // rows 2 and 3 are multiples of row 1
        let m = IntMatrix::from_i64(3, 3, &[1, 2, 3, 2, 4, 6, -3, -6, -9]);
        let r = int_rank(&m);
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let m = IntMatrix::from_i64(3, 4, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]);
        assert_eq!(m.rank_bareiss(), m.transpose().rank_bareiss());
        assert_eq!(m.rank_bareiss(), 2);
    }

    #[test]
    fn big_entries_exact() {
        // matrix whose elimination produces large intermediates
        let mut m = IntMatrix::zeros(6, 6);
        for i in 0..6 {
            for j in 0..6 {
                m.set(i, j, BigInt::from((i as i64 + 1).pow(j as u32)));
            }
        }
        // Vandermonde with distinct nodes: full rank
        assert_eq!(int_rank(&m).rank, 6);
    }
}
