//! Semi-infinite wedge model used to cross-check the Clifford action.
//!
//! A basis vector `(charge, shape)` stands for the ordered wedge with
//! index sequence `i_t = shape_t + charge - t + 1`, which agrees with
//! `charge - t + 1` for all large `t`. The operators here act on the
//! indices directly: [`f_psi`] wedges a new index in front and counts the
//! transpositions needed to reorder, [`f_psi_star`] contracts an index
//! away. Only a finite prefix of the sequence is ever materialized; the
//! prefix depth is chosen so the affected index always lands inside it.
//!
//! [`boson_to_fermion`] and [`fermion_to_boson`] relabel basis vectors
//! between this model and [`BosonState`](crate::boson::BosonState); the
//! operator actions commute with the relabeling, which is what the
//! `correspondence` suite checks case by case.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::boson::BosonState;
use crate::coeff::{coeff, sign_pow, Coeff};
use crate::partition::Partition;

/// Finite linear combination of `(charge, shape)` wedge basis vectors.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct FermionState {
    terms: BTreeMap<(i64, Partition), Coeff>,
}

impl FermionState {
    pub fn zero() -> Self {
        FermionState::default()
    }

    pub fn basis(charge: i64, shape: Partition) -> Self {
        let mut s = FermionState::zero();
        s.add_term(charge, shape, coeff(1));
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, charge: i64, shape: Partition, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((charge, shape)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Partition, &Coeff)> {
        self.terms.iter().map(|((m, shape), c)| (*m, shape, c))
    }

    pub fn scale(&self, c: &Coeff) -> FermionState {
        let mut out = FermionState::zero();
        if c.is_zero() {
            return out;
        }
        for ((m, shape), v) in &self.terms {
            out.terms.insert((*m, shape.clone()), v * c);
        }
        out
    }
}

impl std::ops::AddAssign<&FermionState> for FermionState {
    fn add_assign(&mut self, rhs: &FermionState) {
        for ((m, shape), c) in &rhs.terms {
            self.add_term(*m, shape.clone(), c.clone());
        }
    }
}

impl fmt::Display for FermionState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((m, shape), c) in &self.terms {
            let neg = c < &Coeff::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "[{shape}@{m}]")?;
        }
        Ok(())
    }
}

/// First `depth` wedge indices of the basis vector `(charge, shape)`:
/// `i_t = shape_t + charge - t + 1`, strictly decreasing.
pub fn index_prefix(charge: i64, shape: &Partition, depth: usize) -> Vec<i64> {
    (1..=depth)
        .map(|t| shape.part(t) + charge - t as i64 + 1)
        .collect()
}

/// Rebuild `(charge, shape)` from a strictly decreasing index prefix that
/// has already merged into the pure tail `charge - t + 1`.
fn basis_from_indices(charge: i64, indices: &[i64]) -> (i64, Partition) {
    let parts: Vec<i64> = indices
        .iter()
        .enumerate()
        .map(|(i, &x)| x - charge + i as i64)
        .collect();
    debug_assert!(parts.iter().all(|&p| p >= 0), "prefix left the tail zone");
    debug_assert!(parts.last().is_none_or(|&p| p == 0), "prefix too shallow");
    (charge, Partition::from_decreasing(parts))
}

/// Prefix depth that is guaranteed to contain every index `>= k` of the
/// basis vector, with two tail entries of slack.
fn working_depth(charge: i64, shape: &Partition, k: i64) -> usize {
    let l = shape.len() as i64;
    (l.max(charge - k + 1).max(0) + 2) as usize
}

/// Wedge `v_k` in front and reorder: zero when `v_k` is already a factor,
/// otherwise the sign counts the indices larger than `k`.
pub fn f_psi(k: i64, state: &FermionState) -> FermionState {
    let mut out = FermionState::zero();
    for (m, shape, c) in state.terms() {
        let mut idx = index_prefix(m, shape, working_depth(m, shape, k));
        if idx.contains(&k) {
            continue;
        }
        let p = idx.iter().filter(|&&x| x > k).count();
        idx.insert(p, k);
        let (charge, new_shape) = basis_from_indices(m + 1, &idx);
        out.add_term(charge, new_shape, &sign_pow(p as i64) * c);
    }
    out
}

/// Contract the factor `v_k` away: zero when `v_k` is not a factor,
/// otherwise the sign counts the factors in front of it.
pub fn f_psi_star(k: i64, state: &FermionState) -> FermionState {
    let mut out = FermionState::zero();
    for (m, shape, c) in state.terms() {
        let mut idx = index_prefix(m, shape, working_depth(m, shape, k));
        let Some(pos) = idx.iter().position(|&x| x == k) else {
            continue;
        };
        idx.remove(pos);
        let (charge, new_shape) = basis_from_indices(m - 1, &idx);
        out.add_term(charge, new_shape, &sign_pow(pos as i64) * c);
    }
    out
}

/// Relabel `(shape, charge)` basis vectors as wedge basis vectors.
pub fn boson_to_fermion(state: &BosonState) -> FermionState {
    let mut out = FermionState::zero();
    for (shape, m, c) in state.terms() {
        out.add_term(m, shape.clone(), c.clone());
    }
    out
}

/// Inverse relabeling of [`boson_to_fermion`].
pub fn fermion_to_boson(state: &FermionState) -> BosonState {
    let mut out = BosonState::zero();
    for (m, shape, c) in state.terms() {
        out.add_term(shape.clone(), m, c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boson::{apply_psi, apply_psi_star};
    use crate::partition::partitions_up_to_weight;

    fn part(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn index_prefix_roundtrip() {
        for shape in partitions_up_to_weight(5) {
            for m in -2..=2i64 {
                let depth = shape.len() + 3;
                let idx = index_prefix(m, &shape, depth);
                assert!(idx.windows(2).all(|w| w[0] > w[1]), "({shape}, {m})");
                let (m2, shape2) = basis_from_indices(m, &idx);
                assert_eq!((m2, &shape2), (m, &shape));
            }
        }
    }

    #[test]
    fn wedge_spot_check() {
        // v_0 into (2,2) at charge 0: indices (2, 1, -2, -3, ...), two
        // factors pass, sign +, giving (1,1,1) at charge 1.
        let out = f_psi(0, &FermionState::basis(0, part(&[2, 2])));
        assert_eq!(out, FermionState::basis(1, part(&[1, 1, 1])));
        // Wedging an existing factor kills the term.
        assert!(f_psi(2, &FermionState::basis(0, part(&[2, 2]))).is_zero());
        // Wedging above everything costs no sign.
        let out = f_psi(5, &FermionState::basis(0, part(&[])));
        assert_eq!(out, FermionState::basis(1, part(&[4])));
    }

    #[test]
    fn contraction_spot_check() {
        // Removing the top index of the vacuum.
        let out = f_psi_star(0, &FermionState::basis(0, part(&[])));
        assert_eq!(out, FermionState::basis(-1, part(&[])));
        // Removing the second index costs one sign.
        let out = f_psi_star(-1, &FermionState::basis(0, part(&[])));
        assert_eq!(out, FermionState::basis(-1, part(&[1])).scale(&coeff(-1)));
        // Absent index kills the term.
        assert!(f_psi_star(1, &FermionState::basis(0, part(&[]))).is_zero());
    }

    #[test]
    fn wedge_anticommutation() {
        let states = [
            FermionState::basis(0, part(&[])),
            FermionState::basis(0, part(&[2, 1])),
            FermionState::basis(-1, part(&[3, 1, 1])),
        ];
        for s in &states {
            for k in -3..=3i64 {
                for kp in -3..=3i64 {
                    let mut anti = f_psi(k, &f_psi(kp, s));
                    anti += &f_psi(kp, &f_psi(k, s));
                    assert!(anti.is_zero(), "psi psi at ({k}, {kp})");
                    let mut anti = f_psi_star(k, &f_psi_star(kp, s));
                    anti += &f_psi_star(kp, &f_psi_star(k, s));
                    assert!(anti.is_zero(), "psi* psi* at ({k}, {kp})");
                    let mut anti = f_psi(k, &f_psi_star(kp, s));
                    anti += &f_psi_star(kp, &f_psi(k, s));
                    let expected = if k == kp {
                        s.clone()
                    } else {
                        FermionState::zero()
                    };
                    assert_eq!(anti, expected, "mixed at ({k}, {kp})");
                }
            }
        }
    }

    #[test]
    fn operators_commute_with_relabeling() {
        for shape in partitions_up_to_weight(4) {
            for m in -2..=2i64 {
                let b = BosonState::basis(shape.clone(), m);
                let f = boson_to_fermion(&b);
                for k in -4..=4i64 {
                    assert_eq!(
                        boson_to_fermion(&apply_psi(k, &b)),
                        f_psi(k, &f),
                        "psi_{k} on ({shape}, {m})"
                    );
                    assert_eq!(
                        boson_to_fermion(&apply_psi_star(k, &b)),
                        f_psi_star(k, &f),
                        "psi*_{k} on ({shape}, {m})"
                    );
                }
            }
        }
    }

    #[test]
    fn row_generating_words() {
        // Applying psi_{shape_r + r} for r = len..1 (innermost first) to the
        // charge-zero vacuum rebuilds the shape at charge len; the dual
        // word of contractions rebuilds the conjugate with sign |shape|.
        for shape in partitions_up_to_weight(5) {
            let l = shape.len();
            let mut s = FermionState::basis(0, part(&[]));
            for r in 1..=l {
                s = f_psi(shape.part(l + 1 - r) + r as i64, &s);
            }
            assert_eq!(s, FermionState::basis(l as i64, shape.clone()), "({shape})");

            let mut s = FermionState::basis(0, part(&[]));
            for r in 1..=l {
                s = f_psi_star(-shape.part(l + 1 - r) - (r as i64 - 1), &s);
            }
            let expected = FermionState::basis(-(l as i64), shape.conjugate())
                .scale(&sign_pow(shape.weight()));
            assert_eq!(s, expected, "({shape})");
        }
    }
}
