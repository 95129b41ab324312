//! Two-sided ideals of the free algebra: completion to a reduced Gröbner
//! basis (rewrite system), normal forms, normal-word bases and Hilbert
//! series.

mod completion;
mod words;

pub use completion::{complete, DEFAULT_DEGREE_BOUND, DEFAULT_MAX_RULES};

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::freealg::{Alphabet, NcPoly, Word};

/// Generators and relations of a finitely presented algebra.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub field: FieldSpec,
    pub relations: Vec<NcPoly>,
    pub label: String,
}

impl Presentation {
    pub fn new(
        label: impl Into<String>,
        alphabet: Alphabet,
        field: FieldSpec,
        relations: Vec<NcPoly>,
    ) -> Result<Self> {
        for r in &relations {
            alphabet.check(r)?;
            if r.field() != field {
                return Err(Error::FieldMismatch(r.field().name(), field.name()));
            }
            if r.is_zero() {
                return Err(Error::InvalidPresentation("zero relation".into()));
            }
            if r.is_constant() {
                return Err(Error::InvalidPresentation("relation is a unit".into()));
            }
        }
        Ok(Presentation {
            alphabet,
            field,
            relations,
            label: label.into(),
        })
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations.iter().filter_map(NcPoly::degree).max().unwrap_or(0)
    }

    /// The same generators with extra relations appended.
    pub fn with_relations(&self, label: impl Into<String>, extra: Vec<NcPoly>) -> Result<Self> {
        let mut relations = self.relations.clone();
        relations.extend(extra);
        Presentation::new(label, self.alphabet.clone(), self.field, relations)
    }
}

/// A monic rewrite rule `lead → tail`; `lead` is deglex-larger than every
/// word of `tail`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lead: Word,
    pub tail: NcPoly,
    pub(crate) id: u64,
}

impl Rule {
    /// The ideal element `lead − tail`.
    pub fn polynomial(&self) -> NcPoly {
        let f = self.tail.field();
        &NcPoly::monomial(f, self.lead.clone()) - &self.tail
    }
}

/// Reduced rewrite system for a two-sided ideal.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    field: FieldSpec,
    rules: Vec<Rule>,
    degree_bound: usize,
    certified: bool,
    index: HashMap<Vec<u8>, usize>,
    lead_lengths: Vec<usize>,
}

impl RewriteSystem {
    pub(crate) fn empty(alphabet: Alphabet, field: FieldSpec, degree_bound: usize) -> Self {
        RewriteSystem {
            alphabet,
            field,
            rules: Vec::new(),
            degree_bound,
            certified: false,
            index: HashMap::new(),
            lead_lengths: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    /// True when the ideal is the whole free algebra.
    pub fn is_trivial(&self) -> bool {
        self.rules.iter().any(|r| r.lead.is_empty())
    }

    pub fn lead_words(&self) -> Vec<Word> {
        self.rules.iter().map(|r| r.lead.clone()).collect()
    }

    pub fn max_lead_len(&self) -> usize {
        self.lead_lengths.iter().copied().max().unwrap_or(0)
    }

    pub(crate) fn set_rules(&mut self, mut rules: Vec<Rule>) {
        rules.sort_by(|a, b| a.lead.cmp(&b.lead));
        self.index = rules
            .iter()
            .enumerate()
            .map(|(i, r)| (r.lead.letters().to_vec(), i))
            .collect();
        let mut lens: Vec<usize> = rules.iter().map(|r| r.lead.len()).collect();
        lens.sort_unstable();
        lens.dedup();
        self.lead_lengths = lens;
        self.rules = rules;
    }

    pub(crate) fn set_certified(&mut self, c: bool) {
        self.certified = c;
    }

    /// First occurrence (leftmost start, shortest lead) of a lead word in
    /// `letters`, as `(start, rule index)`.
    pub(crate) fn find_lead(&self, letters: &[u8]) -> Option<(usize, usize)> {
        for start in 0..=letters.len() {
            for &len in &self.lead_lengths {
                if start + len > letters.len() {
                    break;
                }
                if let Some(&i) = self.index.get(&letters[start..start + len]) {
                    return Some((start, i));
                }
            }
        }
        None
    }

    /// Whether some lead word ends exactly at the end of `letters`.
    pub(crate) fn has_lead_suffix(&self, letters: &[u8]) -> bool {
        self.lead_lengths
            .iter()
            .take_while(|&&l| l <= letters.len())
            .any(|&l| self.index.contains_key(&letters[letters.len() - l..]))
    }

    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.find_lead(w.letters()).is_none()
    }

    /// Normal form of `p`: repeatedly rewrite the largest reducible term.
    pub fn normal_form(&self, p: &NcPoly) -> NcPoly {
        let f = self.field;
        let mut work: BTreeMap<Word, Scalar> = p.clone().into_terms();
        let mut out: BTreeMap<Word, Scalar> = BTreeMap::new();
        while let Some((w, c)) = work.pop_last() {
            match self.find_lead(w.letters()) {
                None => {
                    out.insert(w, c);
                }
                Some((start, ri)) => {
                    let rule = &self.rules[ri];
                    let letters = w.letters();
                    let left = &letters[..start];
                    let right = &letters[start + rule.lead.len()..];
                    for (tw, tc) in rule.tail.terms() {
                        let nw = Word::sandwich(left, tw.letters(), right);
                        add_into(&mut work, nw, f.mul(&c, tc), f);
                    }
                }
            }
        }
        NcPoly::from_map(f, out)
    }

    /// Ideal membership.
    pub fn contains(&self, p: &NcPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Errors unless the system is certified.
    pub fn require_certified(&self) -> Result<()> {
        if self.certified {
            Ok(())
        } else {
            Err(Error::Uncertified)
        }
    }

    pub fn display_rules(&self) -> Vec<String> {
        self.rules
            .iter()
            .map(|r| {
                format!(
                    "{} -> {}",
                    self.alphabet.format_word(&r.lead),
                    r.tail.display(self.alphabet.names())
                )
            })
            .collect()
    }
}

pub(crate) fn add_into(map: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar, f: FieldSpec) {
    use std::collections::btree_map::Entry;
    if f.is_zero(&c) {
        return;
    }
    match map.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = f.add(o.get(), &c);
            if f.is_zero(&s) {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::FreeAlgebra;
    use proptest::prelude::*;

    fn f() -> FieldSpec {
        FieldSpec::default()
    }

    /// E₃ = D₃(0,0), written out directly from its defining relations.
    fn e3() -> (FreeAlgebra, RewriteSystem) {
        let fa = FreeAlgebra::new(Alphabet::from_chars("abc"), f());
        let (a, b, c) = (fa.gen("a"), fa.gen("b"), fa.gen("c"));
        let rels = vec![
            &a * &a,
            &b * &b,
            &c * &c,
            &(&(&c * &a) + &(&b * &c)) + &(&a * &b),
            &(&(&c * &b) + &(&b * &a)) + &(&a * &c),
        ];
        let p = Presentation::new("E3", fa.alphabet.clone(), f(), rels).unwrap();
        let rs = complete(&p, DEFAULT_DEGREE_BOUND, DEFAULT_MAX_RULES).unwrap();
        (fa, rs)
    }

    #[test]
    fn e3_normal_forms() {
        let (fa, rs) = e3();
        let (a, b, c) = (fa.gen("a"), fa.gen("b"), fa.gen("c"));
        let ca = &c * &a;
        assert_eq!(rs.normal_form(&ca), -(&(&b * &c) + &(&a * &b)));
        assert!(rs.normal_form(&NcPoly::zero(f())).is_zero());
        let cb = &c * &b;
        assert!(rs.contains(&(&cb * &cb)));
        assert!(!rs.contains(&NcPoly::one(f())));
        let words: Vec<String> = rs
            .normal_words(None)
            .unwrap()
            .iter()
            .map(|w| fa.alphabet.format_word(w))
            .collect();
        assert_eq!(
            words,
            ["1", "a", "b", "c", "ab", "ac", "ba", "bc", "aba", "abc", "bac", "abac"]
        );
        assert_eq!(rs.hilbert_series(6).unwrap(), vec![1, 3, 4, 3, 1, 0, 0]);
        assert!(rs.is_finite_dimensional().unwrap());
    }

    #[test]
    fn free_algebra_is_infinite() {
        let fa = Alphabet::from_chars("ab");
        let p = Presentation::new("free", fa, f(), vec![]).unwrap();
        let rs = complete(&p, 12, 200).unwrap();
        assert!(!rs.is_finite_dimensional().unwrap());
        assert_eq!(rs.hilbert_series(2).unwrap(), vec![1, 2, 4]);
        assert_eq!(rs.normal_words(Some(1)).unwrap().len(), 3);
        assert!(matches!(rs.normal_words(None), Err(Error::InfiniteDimensional)));
    }

    #[test]
    fn single_square_relation() {
        let fa = FreeAlgebra::new(Alphabet::from_chars("a"), f());
        let a = fa.gen("a");
        let p = Presentation::new("a2", fa.alphabet.clone(), f(), vec![&a * &a]).unwrap();
        let rs = complete(&p, 12, 200).unwrap();
        assert_eq!(rs.rules().len(), 1);
        assert!(rs.is_certified());
        assert_eq!(rs.normal_words(None).unwrap().len(), 2);
    }

    #[test]
    fn uncertified_queries_error() {
        let (_, mut rs) = e3();
        rs.set_certified(false);
        assert!(matches!(rs.is_finite_dimensional(), Err(Error::Uncertified)));
        assert!(matches!(rs.hilbert_series(3), Err(Error::Uncertified)));
    }

    #[test]
    fn unit_relation_rejected() {
        let one = NcPoly::one(f());
        assert!(Presentation::new("bad", Alphabet::from_chars("a"), f(), vec![one]).is_err());
    }

    fn arb_e3_poly() -> impl Strategy<Value = NcPoly> {
        prop::collection::vec((prop::collection::vec(0u8..3, 0..5), -4i64..4), 0..6).prop_map(|ts| {
            NcPoly::from_terms(f(), ts.into_iter().map(|(w, c)| (Word::from_letters(w), f().from_i64(c))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn normal_form_properties(p in arb_e3_poly(), q in arb_e3_poly()) {
            let (_, rs) = e3();
            let np = rs.normal_form(&p);
            prop_assert_eq!(rs.normal_form(&np), np.clone());
            let nq = rs.normal_form(&q);
            prop_assert_eq!(rs.normal_form(&(&p * &q)), rs.normal_form(&(&np * &nq)));
            for (w, _) in np.terms() {
                prop_assert!(rs.is_normal_word(w));
            }
            prop_assert_eq!(rs.normal_form(&(&p + &q)), &np + &nq);
        }
    }
}
