//! Fraction-free integer elimination used by the hull and lattice code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Row echelon form over the integers; returns the reduced rows (zero rows
/// dropped) and their pivot columns.
pub(crate) fn echelon(mut rows: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let a = pivot_row[c].clone();
            let b = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot_row) {
                *x = &a * &*x - &b * y;
            }
            make_primitive(row);
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub(crate) fn rank(rows: Vec<Vec<BigInt>>) -> usize {
    echelon(rows).1.len()
}

/// Primitive integer generator of the kernel when it is one-dimensional.
pub(crate) fn kernel_line(rows: Vec<Vec<BigInt>>, ncols: usize) -> Option<Vec<BigInt>> {
    let (rows, pivots) = echelon(rows);
    if pivots.len() + 1 != ncols {
        return None;
    }
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut x = vec![BigRational::zero(); ncols];
    x[free] = BigRational::one();
    for (row, &c) in rows.iter().zip(&pivots).rev() {
        let mut s = BigRational::zero();
        for j in c + 1..ncols {
            if !row[j].is_zero() {
                s += BigRational::from_integer(row[j].clone()) * &x[j];
            }
        }
        x[c] = -s / BigRational::from_integer(row[c].clone());
    }
    let l = x.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
    let mut out: Vec<BigInt> = x.iter().map(|v| v.numer() * (&l / v.denom())).collect();
    make_primitive(&mut out);
    Some(out)
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
