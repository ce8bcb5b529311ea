//! Gaussian elimination over an exact field.

use super::field::Field;

/// Brings `rows` to reduced row echelon form in place, drops zero rows and
/// returns the pivot columns.
pub fn rref<K: Field>(field: &K, rows: &mut Vec<Vec<K::Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][col])) else { continue };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][col]).expect("pivot is nonzero");
        for v in rows[r].iter_mut() {
            *v = field.mul(v, &inv);
        }
        for i in 0..rows.len() {
            if i == r || field.is_zero(&rows[i][col]) {
                continue;
            }
            let s = rows[i][col].clone();
            for j in 0..ncols {
                let t = field.mul(&s, &rows[r][j]);
                rows[i][j] = field.sub(&rows[i][j], &t);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank<K: Field>(field: &K, rows: &[Vec<K::Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}
