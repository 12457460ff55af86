//! Sparse exact polynomials over countable graded generator alphabets.
//!
//! A generator is a tagged indexed symbol such as `h3` or `J2`; its degree is
//! its index. A monomial is a finite multiset of generators, a polynomial a
//! finite map from monomials to nonzero rational coefficients.
//!
//! Design notes:
//! - Terms live in a `BTreeMap` so equality is structural and iteration is
//!   canonical; helpers strip cancellations eagerly, so the zero polynomial
//!   is always the empty map.
//! - Rendering sorts terms by (total degree, monomial order); the map's own
//!   order is pure monomial order, which only matters internally.
//! - Multiplication is plain term-by-term accumulation; operand sizes in
//!   this crate never justify anything cleverer.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::coeff::{self, Coeff};

/// Alphabet label for a generator symbol.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Tag {
    /// Complete-function alphabet `h1, h2, ...`.
    H,
    /// Character alphabet `J1, J2, ...`.
    J,
    /// Shifted alphabet `hstar1, hstar2, ...`.
    HStar,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::H => "h",
            Tag::J => "J",
            Tag::HStar => "hstar",
        }
    }
}

impl Ord for Tag {
    fn cmp(&self, other: &Self) -> Ordering {
        self.as_str().cmp(other.as_str())
    }
}

impl PartialOrd for Tag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One symbol of an alphabet, e.g. `h3`. Indices start at 1 and the grading
/// assigns `deg(tag_k) = k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GeneratorId {
    pub tag: Tag,
    pub index: u32,
}

impl GeneratorId {
    pub fn new(tag: Tag, index: u32) -> Self {
        assert!(index >= 1, "generator index must be >= 1, got {index}");
        GeneratorId { tag, index }
    }

    pub fn degree(self) -> i64 {
        i64::from(self.index)
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.tag, self.index)
    }
}

/// Product of generators with positive multiplicities, kept sorted by
/// generator so equal monomials are structurally equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    factors: Vec<(GeneratorId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn generator(g: GeneratorId) -> Self {
        Monomial {
            factors: vec![(g, 1)],
        }
    }

    /// Monomial from arbitrary (generator, multiplicity) pairs; merges
    /// duplicates and drops zero multiplicities.
    pub fn from_factors(factors: impl IntoIterator<Item = (GeneratorId, u32)>) -> Self {
        let mut merged: BTreeMap<GeneratorId, u32> = BTreeMap::new();
        for (g, m) in factors {
            if m > 0 {
                *merged.entry(g).or_insert(0) += m;
            }
        }
        Monomial {
            factors: merged.into_iter().collect(),
        }
    }

    pub fn factors(&self) -> &[(GeneratorId, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Graded degree: sum of `index * multiplicity`.
    pub fn degree(&self) -> i64 {
        self.factors
            .iter()
            .map(|(g, m)| g.degree() * i64::from(*m))
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (
            self.factors.iter().peekable(),
            other.factors.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some((ga, ma)), Some((gb, mb))) => match ga.cmp(gb) {
                    Ordering::Less => {
                        out.push((*ga, *ma));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((*gb, *mb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((*ga, ma + mb));
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => {
                    out.extend(a.cloned());
                    break;
                }
                (None, Some(_)) => {
                    out.extend(b.cloned());
                    break;
                }
                (None, None) => break,
            }
        }
        Monomial { factors: out }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (g, m) in &self.factors {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if *m == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{m}")?;
            }
        }
        Ok(())
    }
}

/// Exact sparse polynomial: monomials with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(coeff::coeff(1))
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(coeff::coeff(n))
    }

    pub fn constant(c: Coeff) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn generator(g: GeneratorId) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::generator(g), coeff::coeff(1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value()
            .map(|c| c == coeff::coeff(1))
            .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    /// The value as a constant, if the polynomial has no generator term.
    /// Zero yields `Some(0)`.
    pub fn constant_value(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.is_one() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Maximum graded degree over the terms; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Every distinct generator appearing in some term.
    pub fn generators(&self) -> impl Iterator<Item = GeneratorId> + '_ {
        let mut seen = std::collections::BTreeSet::new();
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(g, _)| *g))
            .filter(move |g| seen.insert(*g))
    }

    /// Add `c * m`, removing the term if the sum cancels.
    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Substitution homomorphism: replace every generator by `f(generator)`
    /// and extend multiplicatively over monomials, linearly over terms.
    pub fn map_generators(&self, f: impl Fn(GeneratorId) -> Poly) -> Poly {
        let mut out = Poly::zero();
        for (mono, c) in &self.terms {
            let mut image = Poly::constant(c.clone());
            for (g, mult) in mono.factors() {
                image = &image * &f(*g).pow(*mult);
            }
            out += &image;
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Terms in rendering order: by (total degree, monomial order).
    pub fn ordered_terms(&self) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(ma, _), (mb, _)| ma.degree().cmp(&mb.degree()).then_with(|| ma.cmp(mb)));
        v
    }

    /// JSON form: a list of terms in rendering order, each with the monomial
    /// as `[tag, index, multiplicity]` triples and the coefficient split into
    /// decimal `num`/`den` strings.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .ordered_terms()
            .into_iter()
            .map(|(m, c)| {
                let mono: Vec<serde_json::Value> = m
                    .factors()
                    .iter()
                    .map(|(g, mult)| serde_json::json!([g.tag.as_str(), g.index, mult]))
                    .collect();
                serde_json::json!({
                    "monomial": mono,
                    "coeff": c.to_string(),
                })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.ordered_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if coeff::is_one(&mag) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl std::ops::AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl std::ops::SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl std::ops::Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl std::ops::Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl std::ops::Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl std::ops::Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{coeff, ratio};

    fn h(k: u32) -> Poly {
        Poly::generator(GeneratorId::new(Tag::H, k))
    }

    #[test]
    fn zero_and_cancellation() {
        let p = &h(1) - &h(1);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(format!("{p}"), "0");
    }

    #[test]
    fn display_ordering_by_degree_then_monomial() {
        // h1^2 and h2 both have degree 2; the h1-monomial sorts first.
        let p = &(&h(1) * &h(1)) - &h(2);
        assert_eq!(format!("{p}"), "h1^2 - h2");
        let q = &(&h(2) + &h(1)) + &Poly::from_int(3);
        assert_eq!(format!("{q}"), "3 + h1 + h2");
    }

    #[test]
    fn display_coefficients() {
        let p = &h(1).scale(&ratio(3, 2)) - &Poly::from_int(1);
        assert_eq!(format!("{p}"), "-1 + 3/2*h1");
        let q = -&h(2);
        assert_eq!(format!("{q}"), "-h2");
    }

    #[test]
    fn mixed_alphabet_ordering() {
        // Tags order by their string form: "J" < "h" < "hstar".
        let j = Poly::generator(GeneratorId::new(Tag::J, 1));
        let hs = Poly::generator(GeneratorId::new(Tag::HStar, 1));
        let p = &(&h(1) + &j) + &hs;
        assert_eq!(format!("{p}"), "J1 + h1 + hstar1");
    }

    #[test]
    fn mul_merges_factors() {
        let p = &h(2) * &(&h(2) * &h(1));
        let terms: Vec<String> = p.terms().map(|(m, c)| format!("{c}*{m}")).collect();
        assert_eq!(terms, vec!["1*h1*h2^2".to_string()]);
        assert_eq!(p.degree(), Some(5));
    }

    #[test]
    fn constant_detection() {
        assert_eq!(Poly::zero().constant_value(), Some(coeff(0)));
        assert_eq!(Poly::from_int(-7).constant_value(), Some(coeff(-7)));
        assert_eq!(h(1).constant_value(), None);
        assert_eq!((&h(1) + &Poly::one()).constant_value(), None);
    }

    #[test]
    fn pow_binary() {
        let p = &h(1) + &Poly::one();
        let p3 = p.pow(3);
        // (1 + h1)^3 = 1 + 3 h1 + 3 h1^2 + h1^3
        assert_eq!(format!("{p3}"), "1 + 3*h1 + 3*h1^2 + h1^3");
        assert_eq!(h(2).pow(0), Poly::one());
    }

    #[test]
    fn map_generators_is_a_homomorphism() {
        let p = &(&h(1) * &h(1)) - &h(2);
        // substitute h_k -> h_k + 1
        let image = p.map_generators(|g| &Poly::generator(g) + &Poly::one());
        let expect = &(&(&h(1) + &Poly::one()) * &(&h(1) + &Poly::one())) - &(&h(2) + &Poly::one());
        assert_eq!(image, expect);
    }

    #[test]
    fn json_shape() {
        let p = &(&h(1) * &h(1)) - &h(2);
        let v = p.to_json();
        assert_eq!(
            v,
            serde_json::json!([
                {"monomial": [["h", 1, 2]], "coeff": "1"},
                {"monomial": [["h", 2, 1]], "coeff": "-1"},
            ])
        );
    }
}
