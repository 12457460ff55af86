//! Exact determinants of polynomial matrices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest supported matrix size for [`det_poly`].
pub const COLUMN_LIMIT: usize = 32;

/// Determinant by cofactor expansion along the first remaining row, with
/// minors cached by (row offset, bitmask of surviving columns) so shared
/// minors are computed once. Zero entries are skipped before recursing.
///
/// The 0x0 determinant is 1. Non-square input is rejected, as are matrices
/// wider than the 32-column cache limit.
pub fn det_poly(rows: &[Vec<Poly>]) -> Result<Poly> {
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NonSquareMatrix {
                row: i,
                got: row.len(),
                expected: n,
            });
        }
    }
    if n > COLUMN_LIMIT {
        return Err(Error::MatrixTooLarge {
            n,
            limit: COLUMN_LIMIT,
        });
    }
    if n == 0 {
        return Ok(Poly::one());
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut memo: HashMap<(usize, u32), Poly> = HashMap::new();
    Ok(minor(rows, 0, full, &mut memo))
}

fn minor(
    rows: &[Vec<Poly>],
    row: usize,
    cols: u32,
    memo: &mut HashMap<(usize, u32), Poly>,
) -> Poly {
    if cols == 0 {
        return Poly::one();
    }
    if let Some(hit) = memo.get(&(row, cols)) {
        return hit.clone();
    }
    let mut acc = Poly::zero();
    let mut negate = false;
    let mut rest = cols;
    while rest != 0 {
        let j = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let entry = &rows[row][j];
        if !entry.is_zero() {
            let sub = minor(rows, row + 1, cols & !(1u32 << j), memo);
            let prod = entry * &sub;
            if negate {
                acc -= &prod;
            } else {
                acc += &prod;
            }
        }
        negate = !negate;
    }
    memo.insert((row, cols), acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{GeneratorId, Tag};

    fn h(k: u32) -> Poly {
        Poly::generator(GeneratorId::new(Tag::H, k))
    }

    fn n(v: i64) -> Poly {
        Poly::from_int(v)
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(det_poly(&[]).unwrap(), Poly::one());
    }

    #[test]
    fn non_square_rejected() {
        let err = det_poly(&[vec![n(1), n(2)]]).unwrap_err();
        assert!(matches!(err, Error::NonSquareMatrix { .. }));
    }

    #[test]
    fn two_by_two_symbolic() {
        // det [[h1, h2], [1, h1]] = h1^2 - h2
        let m = vec![vec![h(1), h(2)], vec![n(1), h(1)]];
        assert_eq!(format!("{}", det_poly(&m).unwrap()), "h1^2 - h2");
    }

    #[test]
    fn numeric_four_by_four() {
        // Vandermonde on 1, 2, 3, 4: product of differences = 12.
        let xs = [1i64, 2, 3, 4];
        let m: Vec<Vec<Poly>> = xs
            .iter()
            .map(|&x| (0..4).map(|e| n(x.pow(e as u32))).collect())
            .collect();
        assert_eq!(det_poly(&m).unwrap(), n(12));
    }

    #[test]
    fn alternating_rows_vanish() {
        let m = vec![
            vec![h(1), h(2), h(3)],
            vec![h(1), h(2), h(3)],
            vec![n(1), h(1), h(2)],
        ];
        assert!(det_poly(&m).unwrap().is_zero());
    }

    #[test]
    fn triangular_with_unit_diagonal() {
        let mut m = vec![vec![Poly::zero(); 6]; 6];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = n(1);
            for (j, cell) in row.iter_mut().enumerate().skip(i + 1) {
                *cell = h((j - i) as u32);
            }
        }
        assert!(det_poly(&m).unwrap().is_one());
    }
}
