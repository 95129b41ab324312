//! Words and noncommutative polynomials over a fixed generator alphabet.

mod morphism;
mod poly;
mod word;

pub use morphism::{MorphismSpec, SkewDerivationSpec};
pub use poly::NcPoly;
pub use word::{compare_deglex, Word};

use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Ordered generator names. The order is the deglex letter order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > 256 {
            return Err(Error::InvalidPresentation("more than 256 generators".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::InvalidPresentation("empty generator name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidPresentation(format!("duplicate generator {n:?}")));
            }
        }
        Ok(Alphabet { names })
    }

    /// Alphabet from single-character names, e.g. `"abc"`.
    pub fn from_chars(s: &str) -> Self {
        Alphabet::new(s.chars().map(String::from)).expect("distinct characters")
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Word from single-character generator names, e.g. `"bab"`.
    pub fn word(&self, s: &str) -> Word {
        let letters: Vec<u8> = s
            .chars()
            .map(|c| {
                let i = self
                    .index_of(&c.to_string())
                    .unwrap_or_else(|| panic!("unknown generator {c:?}"));
                i as u8
            })
            .collect();
        Word::from_letters(letters)
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let sep = if self.names.iter().all(|n| n.chars().count() == 1) { "" } else { " " };
        w.letters()
            .iter()
            .map(|&l| self.names[l as usize].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Errors when some word of `p` uses a letter outside the alphabet.
    pub fn check(&self, p: &NcPoly) -> Result<()> {
        match p.max_letter() {
            Some(l) if l as usize >= self.names.len() => Err(Error::AlphabetMismatch {
                letter: l as usize,
                size: self.names.len(),
            }),
            _ => Ok(()),
        }
    }
}

/// The free algebra `𝕂⟨alphabet⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAlgebra {
    pub alphabet: Alphabet,
    pub field: FieldSpec,
}

impl FreeAlgebra {
    pub fn new(alphabet: Alphabet, field: FieldSpec) -> Self {
        FreeAlgebra { alphabet, field }
    }

    pub fn gen(&self, name: &str) -> NcPoly {
        let i = self
            .alphabet
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown generator {name:?}"));
        NcPoly::generator(self.field, i)
    }

    pub fn gens(&self) -> Vec<NcPoly> {
        (0..self.alphabet.len()).map(|i| NcPoly::generator(self.field, i)).collect()
    }

    pub fn constant(&self, c: crate::field::Scalar) -> NcPoly {
        NcPoly::constant(self.field, c)
    }

    /// Checked product: both factors must live over this field and alphabet.
    pub fn multiply(&self, p: &NcPoly, q: &NcPoly) -> Result<NcPoly> {
        for x in [p, q] {
            if x.field() != self.field {
                return Err(Error::FieldMismatch(x.field().name(), self.field.name()));
            }
            self.alphabet.check(x)?;
        }
        Ok(p * q)
    }

    pub fn display(&self, p: &NcPoly) -> String {
        p.display(self.alphabet.names())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checked_multiply() {
        let fa = FreeAlgebra::new(Alphabet::from_chars("ab"), FieldSpec::default());
        let ab = fa.multiply(&fa.gen("a"), &fa.gen("b")).unwrap();
        assert_eq!(fa.display(&ab), "ab");
        let foreign = NcPoly::generator(FieldSpec::default(), 5);
        assert!(matches!(
            fa.multiply(&foreign, &ab),
            Err(Error::AlphabetMismatch { letter: 5, size: 2 })
        ));
        let q = NcPoly::one(FieldSpec::Rationals);
        assert!(matches!(fa.multiply(&q, &ab), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new(["a", "a"]).is_err());
        let a = Alphabet::new(["v1", "v2"]).unwrap();
        assert_eq!(a.format_word(&Word::from_letters(vec![0, 1])), "v1 v2");
    }
}
