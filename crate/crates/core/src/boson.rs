//! Charge-graded polynomial states and the Clifford-operator action on
//! them.
//!
//! A [`BosonState`] is a finite linear combination of basis vectors
//! `(shape, charge)`, read as the Schur-type function of `shape` sitting
//! in the charge-`charge` component. The operators [`apply_psi`] and
//! [`apply_psi_star`] act by prepending a row index (then straightening)
//! and by removing a row, shifting the charge by `+1` and `-1`. Their
//! interaction with multiplication by `h`-rows is captured by the
//! column-deleted determinants [`d_skew`] and the row-removal sums
//! [`d_upper`]; the `verify_*` functions check the resulting operator
//! identities term by term, entirely in exact arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::coeff::{coeff, sign_pow, Coeff};
use crate::det::det_poly;
use crate::error::{Error, Result};
use crate::family::{k_coeff, lie_j, Family, FamilyKind};
use crate::partition::{straighten, Partition};
use crate::poly::Poly;
use crate::schur::{elementary, schur_partition};

/// Finite linear combination of `(shape, charge)` basis vectors.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct BosonState {
    terms: BTreeMap<(Partition, i64), Coeff>,
}

impl BosonState {
    pub fn zero() -> Self {
        BosonState::default()
    }

    pub fn basis(shape: Partition, charge: i64) -> Self {
        let mut s = BosonState::zero();
        s.add_term(shape, charge, coeff(1));
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, shape: Partition, charge: i64, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((shape, charge)) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64, &Coeff)> {
        self.terms.iter().map(|((shape, m), c)| (shape, *m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Coeff) -> BosonState {
        let mut out = BosonState::zero();
        if c.is_zero() {
            return out;
        }
        for ((shape, m), v) in &self.terms {
            out.terms.insert((shape.clone(), *m), v * c);
        }
        out
    }

    /// The single charge occurring in the state, if the state is
    /// homogeneous and nonzero.
    pub fn charge(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|(_, m)| *m);
        let first = it.next()?;
        it.all(|m| m == first).then_some(first)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((shape, m), c)| {
                serde_json::json!({
                    "shape": shape.parts(),
                    "charge": m,
                    "coeff": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }
}

impl std::ops::AddAssign<&BosonState> for BosonState {
    fn add_assign(&mut self, rhs: &BosonState) {
        for ((shape, m), c) in &rhs.terms {
            self.add_term(shape.clone(), *m, c.clone());
        }
    }
}

impl std::ops::SubAssign<&BosonState> for BosonState {
    fn sub_assign(&mut self, rhs: &BosonState) {
        for ((shape, m), c) in &rhs.terms {
            self.add_term(shape.clone(), *m, -c.clone());
        }
    }
}

impl std::ops::Neg for &BosonState {
    type Output = BosonState;
    fn neg(self) -> BosonState {
        self.scale(&coeff(-1))
    }
}

impl fmt::Display for BosonState {
    /// Terms as `[shape@charge]` with signed coefficient prefixes, e.g.
    /// `[2,1@0] - 3/2*[1@1]`. Zero renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((shape, m), c) in &self.terms {
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

impl FromStr for BosonState {
    type Err = Error;

    /// Parses a single basis literal `shape@charge`, e.g. `2,1@0` or `@-1`
    /// for the empty shape.
    fn from_str(s: &str) -> Result<Self> {
        let (shape_str, charge_str) = s
            .split_once('@')
            .ok_or_else(|| Error::Parse(format!("expected shape@charge, got {s:?}")))?;
        let shape: Partition = shape_str.parse()?;
        let charge: i64 = charge_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad charge {charge_str:?} in {s:?}")))?;
        Ok(BosonState::basis(shape, charge))
    }
}

/// The shape left after removing a (possibly virtual) row `t` from
/// `shape`: rows above `t` gain one box, rows below keep theirs, and a
/// virtual row `t > len` turns the gap into a column of ones.
pub(crate) fn removed_row_shape(shape: &Partition, t: usize) -> Partition {
    let l = shape.len();
    let mut parts = Vec::new();
    if t <= l {
        for s in 1..t {
            parts.push(shape.part(s) + 1);
        }
        for s in t + 1..=l {
            parts.push(shape.part(s));
        }
    } else {
        for s in 1..=l {
            parts.push(shape.part(s) + 1);
        }
        parts.extend(std::iter::repeat_n(1, t - 1 - l));
    }
    Partition::from_decreasing(parts)
}

/// Creation operator: on a basis vector `(shape, m)` the result is the
/// straightening of the index vector `(k - m - 1, shape)` at charge
/// `m + 1`.
pub fn apply_psi(k: i64, state: &BosonState) -> BosonState {
    let mut out = BosonState::zero();
    for (shape, m, c) in state.terms() {
        let mut index = Vec::with_capacity(shape.len() + 1);
        index.push(k - m - 1);
        index.extend_from_slice(shape.parts());
        let sp = straighten(&index);
        if sp.is_zero() {
            continue;
        }
        let signed = if sp.sign < 0 { -c.clone() } else { c.clone() };
        out.add_term(sp.shape, m + 1, signed);
    }
    out
}

/// Annihilation operator: on `(shape, m)` it removes the unique row `t`
/// with `shape_t - t = k - m - 1` (a virtual tail row when
/// `t > len(shape)`), with sign `(-1)^{t+1}`, at charge `m - 1`.
pub fn apply_psi_star(k: i64, state: &BosonState) -> BosonState {
    let mut out = BosonState::zero();
    for (shape, m, c) in state.terms() {
        let target = k - m - 1;
        let l = shape.len();
        let mut hit = None;
        for t in 1..=l {
            if shape.part(t) - t as i64 == target {
                hit = Some(t);
                break;
            }
        }
        if hit.is_none() && target <= -(l as i64 + 1) {
            hit = Some((-target) as usize);
        }
        let Some(t) = hit else { continue };
        let signed = &sign_pow(t as i64 + 1) * c;
        out.add_term(removed_row_shape(shape, t), m - 1, signed);
    }
    out
}

/// One factor of an operator word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    Psi(i64),
    PsiStar(i64),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Psi(k) => write!(f, "psi:{k}"),
            Letter::PsiStar(k) => write!(f, "psistar:{k}"),
        }
    }
}

/// A product of operators, written left to right; application composes
/// right to left, as in `psi:3,psistar:0` acting by `psistar` first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OperatorWord {
    letters: Vec<Letter>,
}

impl OperatorWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        OperatorWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for letter in &self.letters {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for OperatorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(OperatorWord::default());
        }
        let letters = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let (name, idx) = tok
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("expected name:index, got {tok:?}")))?;
                let k: i64 = idx
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad operator index {idx:?}")))?;
                match name.trim() {
                    "psi" => Ok(Letter::Psi(k)),
                    "psistar" => Ok(Letter::PsiStar(k)),
                    other => Err(Error::Parse(format!(
                        "unknown operator {other:?} (expected psi or psistar)"
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(OperatorWord { letters })
    }
}

/// Apply an operator word (rightmost letter first).
pub fn apply_word(word: &OperatorWord, state: &BosonState) -> BosonState {
    let mut out = state.clone();
    for letter in word.letters.iter().rev() {
        out = match letter {
            Letter::Psi(k) => apply_psi(*k, &out),
            Letter::PsiStar(k) => apply_psi_star(*k, &out),
        };
    }
    out
}

/// Expand a state into the family's polynomial ring, dropping the charge
/// grading: each basis vector contributes its Schur-type function.
pub fn expand_state(f: &Family, state: &BosonState) -> Poly {
    let mut acc = Poly::zero();
    for (shape, _m, c) in state.terms() {
        acc += &schur_partition(f, shape).scale(c);
    }
    acc
}

/// Column-deleted determinant `D_p`: rows `i = 1..len+1` with entries
/// `h(j, shape_i - i)` where `j` runs over the first `len + 1` nonnegative
/// superscripts with `p` skipped. Zero unless `0 <= p <= len(shape)`.
pub fn d_skew(f: &Family, p: i64, shape: &Partition) -> Poly {
    let l = shape.len() as i64;
    if p < 0 || p > l {
        return Poly::zero();
    }
    let build = |size: usize| -> Vec<Vec<Poly>> {
        let cols: Vec<i64> = (0..).filter(|&j| j != p).take(size).collect();
        (1..=size)
            .map(|i| {
                cols.iter()
                    .map(|&j| f.h(j, shape.part(i) - i as i64))
                    .collect()
            })
            .collect()
    };
    let size = (l + 1) as usize;
    let value = det_poly(&build(size)).expect("column-deleted determinant is square");
    if f.self_checks() {
        let extended = det_poly(&build(size + 1)).expect("column-deleted determinant is square");
        assert_eq!(
            value, extended,
            "column-deleted determinant failed to stabilize for ({shape}), p = {p}"
        );
    }
    value
}

/// Row-removal sum `D^(p)` for `p < 0`:
/// `sum_t (-1)^{t+1} h(p, shape_t - t + 2) * schur(removed_row_shape(t))`,
/// truncated where the `h` factor is identically zero. Vanishes for
/// `p >= 0`.
pub fn d_upper(f: &Family, p: i64, shape: &Partition) -> Poly {
    if p >= 0 {
        return Poly::zero();
    }
    let l = shape.len() as i64;
    let t_max = l + 0.max(p + 2) + 1;
    let mut acc = Poly::zero();
    for t in 1..=t_max {
        let factor = f.h(p, shape.part(t as usize) - t + 2);
        if factor.is_zero() {
            continue;
        }
        let term = &factor * &schur_partition(f, &removed_row_shape(shape, t as usize));
        acc += &term.scale(&sign_pow(t + 1));
    }
    if f.self_checks() {
        let t = t_max + 1;
        assert!(
            f.h(p, shape.part(t as usize) - t + 2).is_zero(),
            "row-removal sum truncated too early for ({shape}), p = {p}"
        );
    }
    acc
}

/// Check both halves of the expansion of the Clifford operators through
/// the determinants: for the basis vector `(shape, m)`,
///
/// * `psi_k` component: the straightened function of `(k-m-1, shape)`
///   equals `sum_{p=0}^{len} (-1)^p h(p, k-m-1) D_p`;
/// * `psi*_k` component: expanding `psi*_k (shape, m)` equals
///   `(-1)^{k-m+1} sum_{p >= max(1, k-m+1)}^{shape_1 + 1} (-1)^p
///   e(p, k-m+1) D^(-p)`.
///
/// Returns the two comparison flags.
pub fn verify_prop42(f: &Family, k: i64, m: i64, shape: &Partition) -> (bool, bool) {
    let s = k - m - 1;
    let l = shape.len() as i64;

    let lhs1 = {
        let mut index = Vec::with_capacity(shape.len() + 1);
        index.push(s);
        index.extend_from_slice(shape.parts());
        crate::schur::schur(f, &index)
    };
    let mut rhs1 = Poly::zero();
    for p in 0..=l {
        let term = &f.h(p, s) * &d_skew(f, p, shape);
        rhs1 += &term.scale(&sign_pow(p));
    }
    let flag1 = lhs1 == rhs1;

    let a = k - m + 1;
    let lhs2 = expand_state(f, &apply_psi_star(k, &BosonState::basis(shape.clone(), m)));
    let p_hi = shape.part(1) + 1;
    let mut rhs2 = Poly::zero();
    for p in 1.max(a)..=p_hi {
        let term = &elementary(f, p, a) * &d_upper(f, -p, shape);
        rhs2 += &term.scale(&sign_pow(p));
    }
    let rhs2 = rhs2.scale(&sign_pow(a));
    if f.self_checks() {
        let p = p_hi + 1;
        let slack = &elementary(f, p, a) * &d_upper(f, -p, shape);
        assert!(
            slack.is_zero(),
            "annihilation expansion truncated too early for ({shape}), k = {k}, m = {m}"
        );
    }
    (flag1, lhs2 == rhs2)
}

/// Heisenberg mode `alpha_k`: the normally ordered quadratic
/// `sum_{j >= 1} psi_j psi*_{j+k} - sum_{j <= 0} psi*_{j+k} psi_j`,
/// applied term by term. Both sums have only finitely many nonvanishing
/// terms on any basis vector.
pub fn heisenberg_alpha(k: i64, state: &BosonState) -> BosonState {
    let mut out = BosonState::zero();
    for (shape, m, c) in state.terms() {
        let single = BosonState::basis(shape.clone(), m);
        let mut acc = BosonState::zero();

        // j >= 1: psi*_{j+k} hits nothing once j + k - m - 1 > shape_1 - 1.
        let j_hi = shape.part(1) + m - k;
        for j in 1..=j_hi {
            let mid = apply_psi_star(j + k, &single);
            if mid.is_zero() {
                continue;
            }
            acc += &apply_psi(j, &mid);
        }
        debug_assert!({
            let j = j_hi + 1;
            j < 1 || apply_psi_star(j + k, &single).is_zero()
        });

        // j <= 0: psi_j annihilates once the prepended index collides with
        // the tail, i.e. for j <= m - len(shape).
        let j_lo = m + 1 - shape.len() as i64;
        for j in j_lo..=0 {
            let mid = apply_psi(j, &single);
            if mid.is_zero() {
                continue;
            }
            acc -= &apply_psi_star(j + k, &mid);
        }
        debug_assert!({
            let j = j_lo - 1;
            j > 0 || apply_psi(j, &single).is_zero()
        });

        out += &acc.scale(c);
    }
    out
}

/// Sparse Laurent polynomial in one symbol with rational coefficients,
/// used for the series kernels of the vertex-form verifiers.
#[derive(Clone, Default, Debug, PartialEq, Eq)]
struct Laurent {
    terms: BTreeMap<i64, Coeff>,
}

impl Laurent {
    fn one() -> Self {
        let mut t = Laurent::default();
        t.add(0, coeff(1));
        t
    }

    fn add(&mut self, d: i64, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
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

    fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::default();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                out.add(d1 + d2, c1 * c2);
            }
        }
        out
    }

    fn pow(&self, e: u32) -> Laurent {
        let mut out = Laurent::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    fn iter(&self) -> impl Iterator<Item = (i64, &Coeff)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }
}

/// Check the character-family vertex expansion on the basis vector
/// `(shape, m)`:
///
/// * creation side: the straightened function of `(k-m-1, shape)` equals
///   `sum_{p=0}^{len} (-1)^p (J_{s+p} + J_{s-p}) D_p - J_s D_0` with
///   `s = k-m-1`;
/// * annihilation side: expanding `psi*_k (shape, m)` equals
///   `(-1)^{k-m+1} sum_{p=1}^{shape_1+1} (-1)^p (K_{p-a} - K_{-p-a})
///   D^(-p)` with `a = k-m+1`.
///
/// Errors unless the family is the character family.
pub fn verify_char_vertex(f: &Family, k: i64, m: i64, shape: &Partition) -> Result<(bool, bool)> {
    if !matches!(f.kind(), FamilyKind::LieCharacter) {
        return Err(Error::UnsupportedFamily(
            "the character vertex form needs the character family".into(),
        ));
    }
    let s = k - m - 1;
    let l = shape.len() as i64;

    let lhs1 = {
        let mut index = Vec::with_capacity(shape.len() + 1);
        index.push(s);
        index.extend_from_slice(shape.parts());
        crate::schur::schur(f, &index)
    };
    let mut rhs1 = Poly::zero();
    for p in 0..=l {
        let dp = d_skew(f, p, shape);
        if dp.is_zero() {
            continue;
        }
        let jj = &lie_j(s + p) + &lie_j(s - p);
        rhs1 += &(&jj * &dp).scale(&sign_pow(p));
    }
    rhs1 -= &(&lie_j(s) * &d_skew(f, 0, shape));
    let flag1 = lhs1 == rhs1;

    let a = k - m + 1;
    let lhs2 = expand_state(f, &apply_psi_star(k, &BosonState::basis(shape.clone(), m)));
    let mut rhs2 = Poly::zero();
    for p in 1..=(shape.part(1) + 1) {
        let du = d_upper(f, -p, shape);
        if du.is_zero() {
            continue;
        }
        let e_from_k = &k_coeff(p - a) - &k_coeff(-p - a);
        rhs2 += &(&e_from_k * &du).scale(&sign_pow(p));
    }
    let rhs2 = rhs2.scale(&sign_pow(a));
    Ok((flag1, lhs2 == rhs2))
}

/// Check the recurrence-family vertex expansion on the basis vector
/// `(shape, m)`, for a constant-coefficient recurrence with symbol
/// `f(u) = u^{-1} + sum_i a_i u^i`:
///
/// * creation side: the straightened function of `(k-m-1, shape)` equals
///   `sum_p [(-f(u))^p]_d h(0, s - d) D_p`;
/// * annihilation side: expanding `psi*_k` equals
///   `(-1)^a sum_{p=1}^{shape_1+1} (-1)^p [w(v)^p]_d e(0, a - d) D^(-p)`
///   where `w_1 = 1` and `w_{-i} = (-1)^{i-1} a_i`.
///
/// Errors unless the family is a constant-coefficient recurrence.
pub fn verify_linrec_vertex(f: &Family, k: i64, m: i64, shape: &Partition) -> Result<(bool, bool)> {
    let coeffs: Vec<Coeff> = match f.kind() {
        FamilyKind::LinearRecurrence(co) => co
            .constant_values()
            .ok_or_else(|| {
                Error::UnsupportedFamily(
                    "the recurrence vertex form needs constant coefficients".into(),
                )
            })?
            .to_vec(),
        _ => {
            return Err(Error::UnsupportedFamily(
                "the recurrence vertex form needs a linear-recurrence family".into(),
            ))
        }
    };

    let mut minus_f = Laurent::default();
    minus_f.add(-1, coeff(-1));
    for (i, a) in coeffs.iter().enumerate() {
        minus_f.add(i as i64, -a.clone());
    }
    let mut w = Laurent::default();
    w.add(1, coeff(1));
    for (i, a) in coeffs.iter().enumerate() {
        w.add(-(i as i64), &sign_pow(i as i64 + 1) * a);
    }

    let s = k - m - 1;
    let l = shape.len() as i64;

    let lhs1 = {
        let mut index = Vec::with_capacity(shape.len() + 1);
        index.push(s);
        index.extend_from_slice(shape.parts());
        crate::schur::schur(f, &index)
    };
    let mut rhs1 = Poly::zero();
    for p in 0..=l {
        let dp = d_skew(f, p, shape);
        if dp.is_zero() {
            continue;
        }
        let kernel = minus_f.pow(p as u32);
        let mut hsum = Poly::zero();
        for (d, c) in kernel.iter() {
            let factor = f.h(0, s - d);
            if !factor.is_zero() {
                hsum += &factor.scale(c);
            }
        }
        rhs1 += &(&hsum * &dp);
    }
    let flag1 = lhs1 == rhs1;

    let a = k - m + 1;
    let lhs2 = expand_state(f, &apply_psi_star(k, &BosonState::basis(shape.clone(), m)));
    let mut rhs2 = Poly::zero();
    for p in 1..=(shape.part(1) + 1) {
        let du = d_upper(f, -p, shape);
        if du.is_zero() {
            continue;
        }
        let kernel = w.pow(p as u32);
        let mut esum = Poly::zero();
        for (d, c) in kernel.iter() {
            let factor = elementary(f, 0, a - d);
            if !factor.is_zero() {
                esum += &factor.scale(c);
            }
        }
        rhs2 += &(&esum * &du).scale(&sign_pow(p));
    }
    let rhs2 = rhs2.scale(&sign_pow(a));
    Ok((flag1, lhs2 == rhs2))
}
