use std::cmp::Ordering;
use std::fmt;

/// A monomial of the free algebra: a sequence of generator indices.
///
/// Words are ordered degree-lexicographically: shorter words first, words
/// of equal length compared letter by letter in generator order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(index: usize) -> Self {
        Word(vec![u8::try_from(index).expect("alphabet larger than 256 letters")])
    }

    pub fn from_letters(letters: impl Into<Vec<u8>>) -> Self {
        Word(letters.into())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left · self · right`.
    pub fn sandwich(left: &[u8], middle: &[u8], right: &[u8]) -> Word {
        let mut v = Vec::with_capacity(left.len() + middle.len() + right.len());
        v.extend_from_slice(left);
        v.extend_from_slice(middle);
        v.extend_from_slice(right);
        Word(v)
    }

    pub fn push(&mut self, letter: u8) {
        self.0.push(letter);
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Position of the first occurrence of `factor` as a contiguous factor.
    pub fn find_factor(&self, factor: &[u8]) -> Option<usize> {
        if factor.is_empty() {
            return Some(0);
        }
        self.0.windows(factor.len()).position(|w| w == factor)
    }

    pub fn contains_factor(&self, factor: &[u8]) -> bool {
        self.find_factor(factor).is_some()
    }

    pub fn max_letter(&self) -> Option<u8> {
        self.0.iter().copied().max()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Deglex comparison of two words.
pub fn compare_deglex(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "x{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::from_letters(s.bytes().map(|b| b - b'a').collect::<Vec<_>>())
    }

    #[test]
    fn deglex_examples() {
        assert_eq!(compare_deglex(&w("ab"), &w("c")), Ordering::Greater);
        assert_eq!(compare_deglex(&w("ca"), &w("bc")), Ordering::Greater);
        assert_eq!(compare_deglex(&w("bab"), &w("bab")), Ordering::Equal);
        assert!(Word::empty() < w("a"));
    }

    #[test]
    fn factors() {
        assert_eq!(w("abac").find_factor(&[0, 2]), Some(2));
        assert!(!w("abc").contains_factor(&[2, 1]));
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec(0u8..4, 0..6).prop_map(Word::from_letters)
    }

    proptest! {
        #[test]
        fn deglex_is_monomial_order(u in arb_word(), v in arb_word(), x in arb_word()) {
            if u < v {
                prop_assert!(x.concat(&u) < x.concat(&v));
                prop_assert!(u.concat(&x) < v.concat(&x));
            }
            // totality and antisymmetry
            prop_assert_eq!(u.cmp(&v), v.cmp(&u).reverse());
        }
    }
}
