//! Fraction-free (Bareiss) elimination over the integers.

use num_bigint::BigInt;
use num_traits::Zero;

/// Rank over `Q` of a row-major integer matrix.
pub(crate) fn rank_rational(entries: &[i64], rows: usize, cols: usize) -> usize {
    let mut a: Vec<BigInt> = entries.iter().map(|&x| BigInt::from(x)).collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            for c in 0..cols {
                a.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let piv = a[rank * cols + col].clone();
        for r in rank + 1..rows {
            let f = a[r * cols + col].clone();
            for c in col..cols {
                let v = (&piv * &a[r * cols + c] - &f * &a[rank * cols + c]) / &prev;
                a[r * cols + c] = v;
            }
        }
        prev = piv;
        rank += 1;
    }
    rank
}
