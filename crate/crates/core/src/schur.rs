//! Determinant constructions over a generator family: Schur-type functions,
//! generalized elementary functions, the orthogonality pairing between the
//! two, hook-indexed functions and their Frobenius-coordinate determinants,
//! and the dual (conjugate-shape) determinant.

use crate::coeff::{sign_pow, Coeff};
use crate::det::det_poly;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::partition::{straighten, Partition};
use crate::poly::Poly;

fn jt_rows(f: &Family, shape: &Partition, size: usize) -> Vec<Vec<Poly>> {
    (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| f.h(j as i64 - 1, shape.part(i) - i as i64 + 1))
                .collect()
        })
        .collect()
}

/// Schur-type function of a partition, as the row determinant
/// `det[h(j-1, shape_i - i + 1)]` of size `len(shape)`.
///
/// When self-checks are enabled the determinant is recomputed one size
/// larger; the boundary requirements on `h` force the two to agree, so a
/// mismatch flags a defective family.
pub fn schur_partition(f: &Family, shape: &Partition) -> Poly {
    let l = shape.len();
    let value = det_poly(&jt_rows(f, shape, l)).expect("row determinant is square");
    if f.self_checks() {
        let extended = det_poly(&jt_rows(f, shape, l + 1)).expect("row determinant is square");
        assert_eq!(
            value,
            extended,
            "row determinant failed to stabilize at size {} for shape ({shape})",
            l + 1
        );
    }
    value
}

/// Schur-type function of an arbitrary integer index vector, straightened
/// to `0` or `(sign) * schur_partition(shape)`.
pub fn schur(f: &Family, index: &[i64]) -> Poly {
    let sp = straighten(index);
    if sp.is_zero() {
        return Poly::zero();
    }
    let value = schur_partition(f, &sp.shape);
    if sp.sign < 0 {
        -&value
    } else {
        value
    }
}

/// Generalized elementary function `e(p, a)`: zero for `p < a`, one for
/// `p = a`, and otherwise the determinant `det[h(-p + j, p + 1 - i)]` of
/// size `p - a`.
///
/// Panics if `p - a` exceeds the determinant column limit.
pub fn elementary(f: &Family, p: i64, a: i64) -> Poly {
    if p < a {
        return Poly::zero();
    }
    if p == a {
        return Poly::one();
    }
    let n = (p - a) as usize;
    let rows: Vec<Vec<Poly>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| f.h(-p + j as i64, p + 1 - i as i64))
                .collect()
        })
        .collect();
    det_poly(&rows).expect("elementary determinant within the column limit")
}

/// Orthogonality pairing `sum_{p=-b}^{-a} (-1)^{a-p} h(p, b) e(-p, a)`.
///
/// For every family this collapses to a scalar: `1` when `a = b`, else `0`.
/// Returns the scalar, or an identity-violation error if the sum fails to
/// collapse.
pub fn newton_sum(f: &Family, a: i64, b: i64) -> Result<Coeff> {
    let mut acc = Poly::zero();
    for p in (-b)..=(-a) {
        let term = &f.h(p, b) * &elementary(f, -p, a);
        acc += &term.scale(&sign_pow(a - p));
    }
    match acc.constant_value() {
        Some(c) => Ok(c),
        None => Err(Error::IdentityViolation(format!(
            "orthogonality sum for (a = {a}, b = {b}) is not a scalar: {acc}"
        ))),
    }
}

/// A square matrix of polynomials, stored by rows.
pub type PolyMatrix = Vec<Vec<Poly>>;

/// The transition matrices of the orthogonality pairing on the index
/// window `lo..=hi`: `H[b][p] = h(p, -b)` and
/// `E[p][a] = (-1)^{a-p} e(-p, -a)`, both indexed by the window order.
/// Their product is the identity up to window truncation.
pub fn he_matrices(f: &Family, lo: i64, hi: i64) -> Result<(PolyMatrix, PolyMatrix)> {
    if lo >= hi {
        return Err(Error::Range(format!(
            "matrix window needs lo < hi, got ({lo}, {hi})"
        )));
    }
    let idx: Vec<i64> = (lo..=hi).collect();
    let hmat = idx
        .iter()
        .map(|&b| idx.iter().map(|&p| f.h(p, -b)).collect())
        .collect();
    let emat = idx
        .iter()
        .map(|&p| {
            idx.iter()
                .map(|&a| elementary(f, -p, -a).scale(&sign_pow(a - p)))
                .collect()
        })
        .collect();
    Ok((hmat, emat))
}

/// Whether the product `A * B` of two square polynomial matrices is the
/// identity matrix.
pub fn product_is_identity(a: &[Vec<Poly>], b: &[Vec<Poly>]) -> bool {
    let n = a.len();
    a.iter().enumerate().all(|(i, row)| {
        (0..n).all(|j| {
            let mut acc = Poly::zero();
            for (k, aik) in row.iter().enumerate() {
                acc += &(aik * &b[k][j]);
            }
            if i == j {
                acc.is_one()
            } else {
                acc.is_zero()
            }
        })
    })
}

/// Hook-indexed function
/// `s(m|n) = sum_{p=0}^{n} (-1)^p h(p, m + 1) e(-p, -n)`.
///
/// For `m, n >= 0` this is the Schur-type function of the hook shape
/// `(m+1, 1^n)`; outside that quadrant the sum itself produces the right
/// degenerate values (`(-1)^n` when `m + n = -1`, zero otherwise).
pub fn hook_schur(f: &Family, m: i64, n: i64) -> Poly {
    let mut acc = Poly::zero();
    let mut p = 0;
    while p <= n {
        let term = &f.h(p, m + 1) * &elementary(f, -p, -n);
        acc += &term.scale(&sign_pow(p));
        p += 1;
    }
    acc
}

/// Hook determinant for a partition: `det[s(shape_i - i | n - j)]` of size
/// `n >= len(shape)`, which collapses to the Frobenius-coordinate
/// determinant `det[s(arm_i | leg_j)]` of size `diagonal_len(shape)`.
///
/// Both forms are evaluated, together with [`schur_partition`], and must
/// agree; the common value is returned. Errors if `n < len(shape)` or `n`
/// exceeds the determinant column limit.
pub fn giambelli(f: &Family, shape: &Partition, n: i64) -> Result<Poly> {
    let l = shape.len() as i64;
    if n < l {
        return Err(Error::Range(format!(
            "hook determinant size {n} is smaller than the {l} rows of ({shape})"
        )));
    }
    let size = n as usize;
    let wide_rows: Vec<Vec<Poly>> = (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| hook_schur(f, shape.part(i) - i as i64, n - j as i64))
                .collect()
        })
        .collect();
    let wide = det_poly(&wide_rows)?;

    let fr = shape.frobenius();
    let r = fr.arms.len();
    let compact_rows: Vec<Vec<Poly>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| hook_schur(f, fr.arms[i], fr.legs[j]))
                .collect()
        })
        .collect();
    let compact = det_poly(&compact_rows).expect("diagonal-length determinant is small");

    let direct = schur_partition(f, shape);
    assert_eq!(
        wide, compact,
        "hook determinant of size {n} disagrees with the Frobenius form for ({shape})"
    );
    assert_eq!(
        compact, direct,
        "hook determinant disagrees with the row determinant for ({shape})"
    );
    Ok(compact)
}

/// Dual determinant on the conjugate shape:
/// `det[e(i, j - conj_j)]` of size `len(conjugate(shape))`. Equals the
/// Schur-type function of `shape` for every family.
pub fn dual_jacobi_trudi(f: &Family, shape: &Partition) -> Poly {
    let mu = shape.conjugate();
    let k = mu.len();
    let rows: Vec<Vec<Poly>> = (1..=k)
        .map(|i| {
            (1..=k)
                .map(|j| elementary(f, i as i64, j as i64 - mu.part(j)))
                .collect()
        })
        .collect();
    det_poly(&rows).expect("dual determinant within the column limit")
}
