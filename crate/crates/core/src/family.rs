//! Generator families: the two-parameter complete functions `h(r, k)`.
//!
//! A family fixes a base alphabet and a rule extending the degree-zero row
//! `h(0, k)` to all integer superscripts `r`. All four built-ins satisfy the
//! boundary requirements the determinant engine relies on: `h(k, -k) = 1`,
//! `h(r, k) = 0` whenever `k + r < 0`, and `h(r, k)` has filtration degree
//! at most `k + r`.
//!
//! Values are memoized per family instance behind an `RwLock`; concurrent
//! lookups may recompute, but inserts are idempotent because evaluation is
//! deterministic.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::Zero;

use crate::coeff::{coeff, Coeff};
use crate::det::det_poly;
use crate::error::{Error, Result};
use crate::poly::{GeneratorId, Poly, Tag};

/// Recurrence coefficients `a_0..a_l` (the shift coefficient `a_{-1} = 1` is
/// implicit). The per-index form makes the coefficients functions of the
/// subscript, which covers tridiagonal-style transition data.
#[derive(Clone)]
pub enum RecurrenceCoeffs {
    Constant(Vec<Coeff>),
    PerIndex {
        order: usize,
        coeff_at: Arc<dyn Fn(usize, i64) -> Coeff + Send + Sync>,
    },
}

impl RecurrenceCoeffs {
    pub fn order(&self) -> usize {
        match self {
            RecurrenceCoeffs::Constant(v) => v.len() - 1,
            RecurrenceCoeffs::PerIndex { order, .. } => *order,
        }
    }

    /// `a_i(k)` for `0 <= i <= order`.
    pub fn at(&self, i: usize, k: i64) -> Coeff {
        match self {
            RecurrenceCoeffs::Constant(v) => v[i].clone(),
            RecurrenceCoeffs::PerIndex { coeff_at, .. } => coeff_at(i, k),
        }
    }

    /// The constant coefficient list, when index-independent.
    pub fn constant_values(&self) -> Option<&[Coeff]> {
        match self {
            RecurrenceCoeffs::Constant(v) => Some(v),
            RecurrenceCoeffs::PerIndex { .. } => None,
        }
    }
}

impl fmt::Debug for RecurrenceCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecurrenceCoeffs::Constant(v) => write!(f, "Constant({v:?})"),
            RecurrenceCoeffs::PerIndex { order, .. } => write!(f, "PerIndex(order={order})"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum FamilyKind {
    /// `h(r, k) = h_{k+r}`: the superscript only shifts the subscript.
    Classical,
    /// `h(r, k) = J_{k+r} + J_{k-r}` for `r > 0`, else `J_{k+r}`.
    LieCharacter,
    /// `h(r, k)` is the r-th power of the shift automorphism applied to
    /// `hstar_{k+r}`.
    Shifted,
    /// Rows related by a banded linear recurrence with unit shift term.
    LinearRecurrence(RecurrenceCoeffs),
}

/// A generator family with its memo table and self-check switch.
pub struct Family {
    kind: FamilyKind,
    self_checks: bool,
    cache: RwLock<HashMap<(i64, i64), Poly>>,
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Family")
            .field("kind", &self.kind)
            .field("self_checks", &self.self_checks)
            .finish_non_exhaustive()
    }
}

impl Family {
    fn new(kind: FamilyKind) -> Self {
        Family {
            kind,
            self_checks: true,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn classical() -> Self {
        Family::new(FamilyKind::Classical)
    }

    pub fn lie_character() -> Self {
        Family::new(FamilyKind::LieCharacter)
    }

    pub fn shifted() -> Self {
        Family::new(FamilyKind::Shifted)
    }

    /// Constant-coefficient recurrence; `coeffs` is `a_0..a_l` and must be
    /// nonempty.
    pub fn linear_recurrence(coeffs: Vec<Coeff>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::UnsupportedFamily(
                "linear recurrence needs at least the a_0 coefficient".into(),
            ));
        }
        Ok(Family::new(FamilyKind::LinearRecurrence(
            RecurrenceCoeffs::Constant(coeffs),
        )))
    }

    /// Recurrence whose coefficients depend on the subscript:
    /// `coeff_at(i, k)` yields `a_i(k)` for `0 <= i <= order`.
    pub fn linear_recurrence_fn(
        order: usize,
        coeff_at: impl Fn(usize, i64) -> Coeff + Send + Sync + 'static,
    ) -> Self {
        Family::new(FamilyKind::LinearRecurrence(RecurrenceCoeffs::PerIndex {
            order,
            coeff_at: Arc::new(coeff_at),
        }))
    }

    /// Disable the redundant stabilization/truncation assertions that guard
    /// against family bugs (useful for long sweeps once a family is trusted).
    pub fn without_self_checks(mut self) -> Self {
        self.self_checks = false;
        self
    }

    pub fn self_checks(&self) -> bool {
        self.self_checks
    }

    pub fn kind(&self) -> &FamilyKind {
        &self.kind
    }

    /// Base alphabet of the family's polynomial ring.
    pub fn tag(&self) -> Tag {
        match self.kind {
            FamilyKind::Classical | FamilyKind::LinearRecurrence(_) => Tag::H,
            FamilyKind::LieCharacter => Tag::J,
            FamilyKind::Shifted => Tag::HStar,
        }
    }

    /// The complete function `h(r, k)`, memoized.
    pub fn h(&self, r: i64, k: i64) -> Poly {
        if let Some(hit) = self.cache.read().unwrap().get(&(r, k)) {
            return hit.clone();
        }
        let value = self.compute_h(r, k);
        self.cache
            .write()
            .unwrap()
            .entry((r, k))
            .or_insert_with(|| value.clone());
        value
    }

    fn compute_h(&self, r: i64, k: i64) -> Poly {
        match &self.kind {
            FamilyKind::Classical => base_poly(Tag::H, k + r),
            FamilyKind::LieCharacter => {
                if r > 0 {
                    &lie_j(k + r) + &lie_j(k - r)
                } else {
                    lie_j(k + r)
                }
            }
            FamilyKind::Shifted => {
                let n = k + r;
                if n < 0 {
                    Poly::zero()
                } else {
                    phi_pow(&base_poly(Tag::HStar, n), r)
                        .expect("shift automorphism stays inside its alphabet")
                }
            }
            FamilyKind::LinearRecurrence(co) => self.compute_h_recurrence(co, r, k),
        }
    }

    fn compute_h_recurrence(&self, co: &RecurrenceCoeffs, r: i64, k: i64) -> Poly {
        if r == 0 {
            return base_poly(Tag::H, k);
        }
        let order = co.order() as i64;
        if r > 0 {
            // h(r, k) = h(r-1, k+1) + sum_i a_i(k) h(r-1, k-i)
            let mut acc = self.h(r - 1, k + 1);
            for i in 0..=order {
                let a = co.at(i as usize, k);
                if !a.is_zero() {
                    acc += &self.h(r - 1, k - i).scale(&a);
                }
            }
            acc
        } else {
            // Solve the same relation for the lower row, walking the
            // subscript up from the vanishing floor h(r, k) = 0, k < -r.
            if k < -r {
                return Poly::zero();
            }
            let mut acc = self.h(r + 1, k - 1);
            for i in 0..=order {
                let a = co.at(i as usize, k - 1);
                if !a.is_zero() {
                    acc -= &self.h(r, k - 1 - i).scale(&a);
                }
            }
            acc
        }
    }
}

/// 0 for negative index, 1 at index zero, otherwise the generator itself.
pub fn base_poly(tag: Tag, n: i64) -> Poly {
    match n {
        n if n < 0 => Poly::zero(),
        0 => Poly::one(),
        n => Poly::generator(GeneratorId::new(tag, n as u32)),
    }
}

/// Character generator `J_n` as a polynomial (`J_0 = 1`, zero below).
pub fn lie_j(n: i64) -> Poly {
    base_poly(Tag::J, n)
}

fn check_alphabet(p: &Poly, tag: Tag) -> Result<()> {
    for g in p.generators() {
        if g.tag != tag {
            return Err(Error::Domain(format!(
                "expected only {} generators, found {g}",
                tag.as_str()
            )));
        }
    }
    Ok(())
}

/// Shift automorphism of the `hstar` ring: `hstar_k` maps to
/// `hstar_k + (k-1) hstar_{k-1}`.
pub fn phi(p: &Poly) -> Result<Poly> {
    check_alphabet(p, Tag::HStar)?;
    Ok(p.map_generators(|g| {
        let k = i64::from(g.index);
        let mut out = Poly::generator(g);
        if k >= 2 {
            out += &base_poly(Tag::HStar, k - 1).scale(&coeff(k - 1));
        }
        out
    }))
}

/// Inverse of [`phi`]: `hstar_k` maps to
/// `hstar_k - (k-1) phi_inverse(hstar_{k-1})`.
pub fn phi_inverse(p: &Poly) -> Result<Poly> {
    check_alphabet(p, Tag::HStar)?;
    Ok(p.map_generators(|g| phi_inverse_generator(i64::from(g.index))))
}

fn phi_inverse_generator(k: i64) -> Poly {
    let mut out = base_poly(Tag::HStar, k);
    if k >= 2 {
        out -= &phi_inverse_generator(k - 1).scale(&coeff(k - 1));
    }
    out
}

/// `phi` iterated `r` times (negative `r` iterates the inverse).
pub fn phi_pow(p: &Poly, r: i64) -> Result<Poly> {
    let mut out = p.clone();
    if r >= 0 {
        for _ in 0..r {
            out = phi(&out)?;
        }
    } else {
        for _ in 0..(-r) {
            out = phi_inverse(&out)?;
        }
    }
    Ok(out)
}

/// Inverse-series coefficients of the character alphabet: `K_0 = 1`, zero
/// below, and `K_p = det[J_{1-i+j}]` of size `p` otherwise.
///
/// Panics if `p` exceeds the determinant column limit.
pub fn k_coeff(p: i64) -> Poly {
    if p < 0 {
        return Poly::zero();
    }
    if p == 0 {
        return Poly::one();
    }
    let n = p as usize;
    let rows: Vec<Vec<Poly>> = (1..=n)
        .map(|i| (1..=n).map(|j| lie_j(1 - i as i64 + j as i64)).collect())
        .collect();
    det_poly(&rows).expect("character Toeplitz determinant within the column limit")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::ratio;

    fn gen(tag: Tag, k: u32) -> Poly {
        Poly::generator(GeneratorId::new(tag, k))
    }

    fn all_families() -> Vec<(&'static str, Family)> {
        vec![
            ("classical", Family::classical()),
            ("lie", Family::lie_character()),
            ("shifted", Family::shifted()),
            (
                "linrec(1,1)",
                Family::linear_recurrence(vec![coeff(1), coeff(1)]).unwrap(),
            ),
            (
                "linrec per-index",
                Family::linear_recurrence_fn(1, |i, k| if i == 0 { coeff(k) } else { ratio(1, 2) }),
            ),
        ]
    }

    #[test]
    fn boundary_requirements() {
        for (name, f) in all_families() {
            for k in -5..=5i64 {
                assert!(f.h(k, -k).is_one(), "{name}: h({k}, {}) != 1", -k);
            }
            for r in -5..=5i64 {
                for k in -8..=8i64 {
                    let v = f.h(r, k);
                    if k + r < 0 {
                        assert!(v.is_zero(), "{name}: h({r}, {k}) should vanish");
                    } else {
                        assert!(
                            v.degree().unwrap_or(0) <= k + r,
                            "{name}: h({r}, {k}) = {v} exceeds filtration degree {}",
                            k + r
                        );
                    }
                }
            }
            assert!(f.h(0, 0).is_one(), "{name}");
            assert!(f.h(0, -3).is_zero(), "{name}");
        }
    }

    #[test]
    fn classical_values() {
        let f = Family::classical();
        assert_eq!(f.h(2, 3), gen(Tag::H, 5));
        assert_eq!(f.h(-2, 3), gen(Tag::H, 1));
        assert_eq!(f.h(0, 4), gen(Tag::H, 4));
    }

    #[test]
    fn lie_character_values() {
        let f = Family::lie_character();
        // r > 0 folds in the reflected index; J_0 = 1.
        assert_eq!(f.h(1, 1), &gen(Tag::J, 2) + &Poly::one());
        assert_eq!(f.h(1, 2), &gen(Tag::J, 3) + &gen(Tag::J, 1));
        assert_eq!(f.h(2, 0), gen(Tag::J, 2));
        assert_eq!(f.h(0, 2), gen(Tag::J, 2));
        assert_eq!(f.h(-1, 3), gen(Tag::J, 2));
    }

    #[test]
    fn shifted_values() {
        let f = Family::shifted();
        assert_eq!(f.h(0, 3), gen(Tag::HStar, 3));
        // phi(hstar_2) = hstar_2 + hstar_1
        assert_eq!(f.h(1, 1), &gen(Tag::HStar, 2) + &gen(Tag::HStar, 1));
        // phi^{-1}(hstar_1) = hstar_1
        assert_eq!(f.h(-1, 2), gen(Tag::HStar, 1));
        // phi^{-1}(hstar_2) = hstar_2 - hstar_1
        assert_eq!(f.h(-1, 3), &gen(Tag::HStar, 2) - &gen(Tag::HStar, 1));
    }

    #[test]
    fn shift_automorphism_roundtrip() {
        let p =
            &(&gen(Tag::HStar, 3) * &gen(Tag::HStar, 2)) - &gen(Tag::HStar, 5).scale(&ratio(2, 3));
        let there = phi(&p).unwrap();
        assert_eq!(phi_inverse(&there).unwrap(), p);
        assert_eq!(phi(&phi_inverse(&p).unwrap()).unwrap(), p);
        assert_eq!(phi_pow(&p, 4).and_then(|q| phi_pow(&q, -4)).unwrap(), p);
    }

    #[test]
    fn shift_automorphism_rejects_foreign_alphabets() {
        let p = gen(Tag::H, 2);
        assert!(matches!(phi(&p), Err(Error::Domain(_))));
        assert!(matches!(phi_inverse(&p), Err(Error::Domain(_))));
    }

    #[test]
    fn recurrence_values() {
        let f = Family::linear_recurrence(vec![coeff(1)]).unwrap();
        // h(1, 1) = h_2 + a_0 h_1
        assert_eq!(f.h(1, 1), &gen(Tag::H, 2) + &gen(Tag::H, 1));
        // descending row: h(-1, 2) = h_1 - 1
        assert_eq!(f.h(-1, 2), &gen(Tag::H, 1) - &Poly::one());
        assert!(f.h(-1, 0).is_zero());
        assert!(f.h(-1, 1).is_one());
    }

    #[test]
    fn recurrence_with_zero_coefficients_degenerates_to_classical() {
        let f = Family::linear_recurrence(vec![coeff(0), coeff(0)]).unwrap();
        let c = Family::classical();
        for r in -4..=4i64 {
            for k in -6..=8i64 {
                assert_eq!(f.h(r, k), c.h(r, k), "at ({r}, {k})");
            }
        }
    }

    #[test]
    fn recurrence_rejects_empty_coefficients() {
        assert!(Family::linear_recurrence(vec![]).is_err());
    }

    #[test]
    fn k_coeff_values() {
        assert!(k_coeff(-2).is_zero());
        assert!(k_coeff(0).is_one());
        assert_eq!(k_coeff(1), gen(Tag::J, 1));
        // K_2 = J_1^2 - J_2
        assert_eq!(
            k_coeff(2),
            &(&gen(Tag::J, 1) * &gen(Tag::J, 1)) - &gen(Tag::J, 2)
        );
    }

    #[test]
    fn j_against_k_inverse_series() {
        // J(u) K(-u) = 1: sum_{s=0}^{n} (-1)^s K_s J_{n-s} = [n = 0].
        for n in 0..=8i64 {
            let mut acc = Poly::zero();
            for s in 0..=n {
                acc += &(&k_coeff(s) * &lie_j(n - s)).scale(&crate::coeff::sign_pow(s));
            }
            if n == 0 {
                assert!(acc.is_one());
            } else {
                assert!(acc.is_zero(), "n = {n}: got {acc}");
            }
        }
    }

    #[test]
    fn memo_is_consistent_across_threads() {
        let f = std::sync::Arc::new(Family::shifted());
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let f = f.clone();
                std::thread::spawn(move || {
                    (-3..=3i64)
                        .flat_map(|r| (-3..=6i64).map(move |k| (r, k)))
                        .map(|(r, k)| f.h(r, k))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let results: Vec<Vec<Poly>> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for w in results.windows(2) {
            assert_eq!(w[0], w[1]);
        }
    }
}
