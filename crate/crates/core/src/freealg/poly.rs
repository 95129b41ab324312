use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{FieldSpec, Scalar};

use super::word::Word;

/// A free-algebra element: a finite map from words to nonzero scalars.
///
/// Terms iterate in increasing deglex order, so the leading term is the
/// last one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NcPoly {
    field: FieldSpec,
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero(field: FieldSpec) -> Self {
        NcPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: FieldSpec, c: Scalar) -> Self {
        Self::term(field, Word::empty(), c)
    }

    pub fn from_i64(field: FieldSpec, n: i64) -> Self {
        Self::constant(field, field.from_i64(n))
    }

    pub fn term(field: FieldSpec, word: Word, c: Scalar) -> Self {
        let mut p = Self::zero(field);
        p.add_term(word, c);
        p
    }

    pub fn monomial(field: FieldSpec, word: Word) -> Self {
        Self::term(field, word, field.one())
    }

    pub fn generator(field: FieldSpec, index: usize) -> Self {
        Self::monomial(field, Word::letter(index))
    }

    pub fn from_terms(field: FieldSpec, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = Self::zero(field);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub(crate) fn from_map(field: FieldSpec, terms: BTreeMap<Word, Scalar>) -> Self {
        debug_assert!(terms.values().all(|c| !field.is_zero(c)));
        NcPoly { field, terms }
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Largest term in deglex order.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<usize> {
        self.leading().map(|(w, _)| w.len())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Word::is_empty)
    }

    /// Adds `c·word` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, word: Word, c: Scalar) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = self.field.add(o.get(), &c);
                if self.field.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> NcPoly {
        if self.field.is_zero(c) {
            return NcPoly::zero(self.field);
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, a)| (w.clone(), self.field.mul(a, c)))
            .collect();
        NcPoly::from_map(self.field, terms)
    }

    pub fn scale_i64(&self, n: i64) -> NcPoly {
        self.scale(&self.field.from_i64(n))
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> NcPoly {
        match self.leading() {
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn add_scaled(&mut self, other: &NcPoly, c: &Scalar) {
        self.check_field(other);
        for (w, a) in &other.terms {
            self.add_term(w.clone(), self.field.mul(a, c));
        }
    }

    pub fn add_poly(&mut self, other: &NcPoly) {
        self.check_field(other);
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a.clone());
        }
    }

    pub fn pow(&self, n: u32) -> NcPoly {
        let mut acc = NcPoly::one(self.field);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `left · self · right` for words.
    pub fn sandwich(&self, left: &[u8], right: &[u8]) -> NcPoly {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (Word::sandwich(left, w.letters(), right), c.clone()))
            .collect();
        NcPoly::from_map(self.field, terms)
    }

    /// Commutator `self·other − other·self`.
    pub fn commutator(&self, other: &NcPoly) -> NcPoly {
        &(self * other) - &(other * self)
    }

    pub fn max_letter(&self) -> Option<u8> {
        self.terms.keys().filter_map(Word::max_letter).max()
    }

    fn check_field(&self, other: &NcPoly) {
        assert_eq!(
            self.field, other.field,
            "polynomials over different fields cannot be combined"
        );
    }

    /// Renders with generator names; words print as juxtaposed names,
    /// separated by spaces when some name is longer than one character.
    pub fn display(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let sep = if names.iter().all(|n| n.chars().count() == 1) { "" } else { " " };
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let coeff = self.field.format(c);
            let (negative, mag) = match coeff.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, coeff),
            };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let word: Vec<&str> = w.letters().iter().map(|&l| names[l as usize].as_str()).collect();
            let word = word.join(sep);
            if w.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&word);
            } else {
                out.push_str(&mag);
                out.push('*');
                out.push_str(&word);
            }
        }
        out
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;

    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.add_poly(rhs);
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;

    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &self.field.from_i64(-1));
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;

    fn neg(self) -> NcPoly {
        self.scale(&self.field.from_i64(-1))
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;

    fn mul(self, rhs: &NcPoly) -> NcPoly {
        self.check_field(rhs);
        let f = self.field;
        let mut out = NcPoly::zero(f);
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), f.mul(a, b));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for NcPoly {
            type Output = NcPoly;
            fn $m(self, rhs: NcPoly) -> NcPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&NcPoly> for NcPoly {
            type Output = NcPoly;
            fn $m(self, rhs: &NcPoly) -> NcPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<NcPoly> for &NcPoly {
            type Output = NcPoly;
            fn $m(self, rhs: NcPoly) -> NcPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for NcPoly {
    type Output = NcPoly;

    fn neg(self) -> NcPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const F: FieldSpec = FieldSpec::Prime(10009);

    fn g(i: usize) -> NcPoly {
        NcPoly::generator(F, i)
    }

    fn names() -> Vec<String> {
        ["a", "b", "c"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn products() {
        let ab = &g(0) * &g(1);
        assert_eq!(ab.display(&names()), "ab");
        let lhs = &(&g(0) + &g(1)) * &(&g(0) - &g(1));
        assert_eq!(lhs.display(&names()), "-bb + ba - ab + aa");
        let expected = &(&(&(&g(0) * &g(0)) - &(&g(0) * &g(1))) + &(&g(1) * &g(0))) - &(&g(1) * &g(1));
        assert_eq!(lhs, expected);
        let one = NcPoly::one(F);
        assert_eq!(&one * &lhs, lhs);
    }

    #[test]
    fn leading_term_and_monic() {
        let p = &(&g(2) * &g(0)).scale_i64(3) + &g(1);
        let (w, _) = p.leading().unwrap();
        assert_eq!(w, &Word::from_letters(vec![2, 0]));
        assert!(F.is_one(p.monic().leading().unwrap().1));
    }

    pub(crate) fn arb_poly() -> impl Strategy<Value = NcPoly> {
        prop::collection::vec((prop::collection::vec(0u8..3, 0..4), -5i64..5), 0..5).prop_map(|ts| {
            NcPoly::from_terms(F, ts.into_iter().map(|(w, c)| (Word::from_letters(w), F.from_i64(c))))
        })
    }

    proptest! {
        #[test]
        fn ring_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &NcPoly::one(F), p.clone());
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert!((&p - &p).is_zero());
        }
    }
}
