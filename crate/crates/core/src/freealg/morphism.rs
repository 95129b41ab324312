use crate::field::FieldSpec;

use super::poly::NcPoly;
use super::word::Word;

/// An algebra endomorphism of the free algebra, given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismSpec {
    pub images: Vec<NcPoly>,
}

impl MorphismSpec {
    pub fn new(images: Vec<NcPoly>) -> Self {
        MorphismSpec { images }
    }

    pub fn identity(field: FieldSpec, generators: usize) -> Self {
        MorphismSpec::new((0..generators).map(|i| NcPoly::generator(field, i)).collect())
    }

    /// Signed permutation `x_i ↦ sign_i · x_{perm[i]}`.
    pub fn signed_permutation(field: FieldSpec, targets: &[(i64, usize)]) -> Self {
        MorphismSpec::new(
            targets
                .iter()
                .map(|&(sign, j)| NcPoly::generator(field, j).scale_i64(sign))
                .collect(),
        )
    }

    pub fn apply_word(&self, w: &Word, field: FieldSpec) -> NcPoly {
        let mut acc = NcPoly::one(field);
        for &l in w.letters() {
            acc = &acc * &self.images[l as usize];
        }
        acc
    }

    /// Multiplicative-linear extension to all of `p`.
    pub fn apply(&self, p: &NcPoly) -> NcPoly {
        let f = p.field();
        let mut out = NcPoly::zero(f);
        for (w, c) in p.terms() {
            out.add_scaled(&self.apply_word(w, f), c);
        }
        out
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &MorphismSpec) -> MorphismSpec {
        MorphismSpec::new(inner.images.iter().map(|p| self.apply(p)).collect())
    }

    pub fn power(&self, n: u32, field: FieldSpec) -> MorphismSpec {
        let mut acc = MorphismSpec::identity(field, self.images.len());
        for _ in 0..n {
            acc = self.compose(&acc);
        }
        acc
    }
}

/// A `(σ, id)`-skew derivation: `∂(xy) = ∂(x)·y + σ(x)·∂(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewDerivationSpec {
    pub sigma: MorphismSpec,
    pub images: Vec<NcPoly>,
}

impl SkewDerivationSpec {
    pub fn new(sigma: MorphismSpec, images: Vec<NcPoly>) -> Self {
        SkewDerivationSpec { sigma, images }
    }

    /// On a word `x_1 ⋯ x_n` this is `Σ_k σ(x_1 ⋯ x_{k-1}) ∂(x_k) x_{k+1} ⋯ x_n`.
    pub fn apply_word(&self, w: &Word, field: FieldSpec) -> NcPoly {
        let letters = w.letters();
        let mut out = NcPoly::zero(field);
        let mut sigma_prefix = NcPoly::one(field);
        for (k, &l) in letters.iter().enumerate() {
            let rest = NcPoly::monomial(field, Word::from_letters(letters[k + 1..].to_vec()));
            let piece = &(&sigma_prefix * &self.images[l as usize]) * &rest;
            out.add_poly(&piece);
            sigma_prefix = &sigma_prefix * &self.sigma.images[l as usize];
        }
        out
    }

    pub fn apply(&self, p: &NcPoly) -> NcPoly {
        let f = p.field();
        let mut out = NcPoly::zero(f);
        for (w, c) in p.terms() {
            out.add_scaled(&self.apply_word(w, f), c);
        }
        out
    }
}
