//! Integer lattices in Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row-style Hermite normal form of the lattice spanned by `rows`: an
/// echelon basis with positive pivots and entries above each pivot reduced
/// into `0..pivot`. Zero rows are dropped.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let Some(width) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut m: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for col in 0..width {
        // Euclid on the column until at most one row is nonzero there.
        loop {
            let mut live: Vec<usize> = (0..m.len()).filter(|&i| !m[i][col].is_zero()).collect();
            if live.len() <= 1 {
                break;
            }
            live.sort_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
            let p = live[0];
            let pivot = m[p].clone();
            for &i in &live[1..] {
                let q = m[i][col].div_floor(&pivot[col]);
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
            }
        }
        if let Some(i) = (0..m.len()).find(|&i| !m[i][col].is_zero()) {
            let mut row = m.remove(i);
            if row[col].is_negative() {
                row.iter_mut().for_each(|x| *x = -&*x);
            }
            for prev in out.iter_mut() {
                let q = prev[col].div_floor(&row[col]);
                if !q.is_zero() {
                    for (x, y) in prev.iter_mut().zip(&row) {
                        *x -= &q * y;
                    }
                }
            }
            out.push(row);
        }
        m.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    out
}

/// Whether `v` lies in the lattice with Hermite basis `hnf`.
pub fn lattice_contains(hnf: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut v = v.to_vec();
    for row in hnf {
        let col = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
        if v[..col].iter().any(|x| !x.is_zero()) {
            return false;
        }
        let (q, r) = v[col].div_rem(&row[col]);
        if !r.is_zero() {
            return false;
        }
        for (x, y) in v.iter_mut().zip(row) {
            *x -= &q * y;
        }
    }
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(r: &[&[i64]]) -> Vec<Vec<BigInt>> {
        r.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_hnf() {
        let h = hermite_normal_form(&rows(&[&[2, 4], &[3, 5]]));
        assert_eq!(h, rows(&[&[1, 1], &[0, 2]]));
        let h = hermite_normal_form(&rows(&[&[6], &[10], &[0]]));
        assert_eq!(h, rows(&[&[2]]));
        assert!(lattice_contains(&h, &rows(&[&[8]])[0]));
        assert!(!lattice_contains(&h, &rows(&[&[3]])[0]));
    }
}
