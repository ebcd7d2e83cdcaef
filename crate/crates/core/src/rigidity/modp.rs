//! Dense row reduction over `GF(p)` for 62-bit primes.

#[inline]
fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

#[inline]
fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

#[inline]
pub(crate) fn reduce(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// Rank of a row-major `rows x cols` integer matrix reduced mod `p`.
pub(crate) fn rank_mod_p(entries: &[i64], rows: usize, cols: usize, p: u64) -> usize {
    let mut a: Vec<u64> = entries.iter().map(|&x| reduce(x, p)).collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for c in 0..cols {
                a.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let scale = inv(a[rank * cols + col], p);
        for c in col..cols {
            a[rank * cols + c] = mul(a[rank * cols + c], scale, p);
        }
        for r in rank + 1..rows {
            let f = a[r * cols + col];
            if f == 0 {
                continue;
            }
            for c in col..cols {
                let sub = mul(f, a[rank * cols + c], p);
                let x = a[r * cols + c];
                a[r * cols + c] = if x >= sub { x - sub } else { x + p - sub };
            }
        }
        rank += 1;
    }
    rank
}
