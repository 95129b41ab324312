//! Degree-bounded noncommutative Buchberger completion.
//!
//! Overlap ambiguities are processed in increasing degree of their
//! overlap word; every new rule triggers inter-reduction of the whole
//! system. A final pass re-checks every overlap of the finished system,
//! which is what the `certified` flag records.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::freealg::{NcPoly, Word};

use super::{Presentation, RewriteSystem, Rule};

pub const DEFAULT_DEGREE_BOUND: usize = 12;
pub const DEFAULT_MAX_RULES: usize = 200;

/// An overlap ambiguity: the last `shared` letters of `left`'s lead are the
/// first `shared` letters of `right`'s lead.
#[derive(Clone, Debug)]
struct Overlap {
    word: Word,
    left: usize,
    right: usize,
    shared: usize,
}

struct Completer {
    rs: RewriteSystem,
    max_rules: usize,
    next_id: u64,
}

/// Completes the ideal generated by the presentation's relations.
///
/// Fails with [`Error::CompletionOverflow`] when a rule's lead word would
/// exceed `degree_bound` or the rule count would exceed `max_rules`.
pub fn complete(p: &Presentation, degree_bound: usize, max_rules: usize) -> Result<RewriteSystem> {
    if degree_bound < p.max_relation_degree() {
        return Err(Error::InvalidPresentation(format!(
            "degree bound {degree_bound} below relation degree {}",
            p.max_relation_degree()
        )));
    }
    let mut c = Completer {
        rs: RewriteSystem::empty(p.alphabet.clone(), p.field, degree_bound),
        max_rules,
        next_id: 0,
    };
    for r in &p.relations {
        c.insert(r.clone())?;
    }
    let mut resolved: HashSet<(u64, u64, usize)> = HashSet::new();
    loop {
        if c.rs.is_trivial() {
            break;
        }
        let mut progressed = false;
        for ov in c.overlaps() {
            let key = (c.rs.rules[ov.left].id, c.rs.rules[ov.right].id, ov.shared);
            if !resolved.insert(key) {
                continue;
            }
            let s = c.rs.normal_form(&c.s_polynomial(&ov));
            if !s.is_zero() {
                c.insert(s)?;
                progressed = true;
                break;
            }
        }
        if progressed {
            continue;
        }
        // Certification: every overlap of the final system, no shortcuts.
        match c.overlaps().into_iter().find_map(|ov| {
            let s = c.rs.normal_form(&c.s_polynomial(&ov));
            (!s.is_zero()).then_some(s)
        }) {
            Some(s) => c.insert(s)?,
            None => break,
        }
    }
    c.rs.set_certified(true);
    Ok(c.rs)
}

impl Completer {
    fn overlaps(&self) -> Vec<Overlap> {
        let rules = &self.rs.rules;
        let mut out = Vec::new();
        for (i, ri) in rules.iter().enumerate() {
            let u = ri.lead.letters();
            for (j, rj) in rules.iter().enumerate() {
                let v = rj.lead.letters();
                for shared in 1..u.len().min(v.len()) {
                    if u[u.len() - shared..] == v[..shared] {
                        out.push(Overlap {
                            word: Word::sandwich(u, &v[shared..], &[]),
                            left: i,
                            right: j,
                            shared,
                        });
                    }
                }
            }
        }
        out.sort_by(|a, b| {
            a.word
                .cmp(&b.word)
                .then(a.left.cmp(&b.left))
                .then(a.right.cmp(&b.right))
                .then(a.shared.cmp(&b.shared))
        });
        out
    }

    /// For `u = u'·s`, `v = s·v'`: `(u − t_u)·v' − u'·(v − t_v) = u'·t_v − t_u·v'`.
    fn s_polynomial(&self, ov: &Overlap) -> NcPoly {
        let left = &self.rs.rules[ov.left];
        let right = &self.rs.rules[ov.right];
        let u = left.lead.letters();
        let v = right.lead.letters();
        let u_prefix = &u[..u.len() - ov.shared];
        let v_suffix = &v[ov.shared..];
        &right.tail.sandwich(u_prefix, &[]) - &left.tail.sandwich(&[], v_suffix)
    }

    fn fresh_id(&mut self) -> u64 {
        self.next_id += 1;
        self.next_id
    }

    fn overflow(&self, reason: String) -> Error {
        Error::CompletionOverflow {
            reason,
            partial: Box::new(self.rs.clone()),
        }
    }

    /// Adds `p` to the ideal, keeping the system inter-reduced.
    fn insert(&mut self, p: NcPoly) -> Result<()> {
        let f = self.rs.field;
        let mut queue = vec![p];
        while let Some(q) = queue.pop() {
            let r = self.rs.normal_form(&q);
            if r.is_zero() {
                continue;
            }
            let r = r.monic();
            let lead = r.leading().map(|(w, _)| w.clone()).expect("nonzero");
            if lead.is_empty() {
                // 1 lies in the ideal.
                let id = self.fresh_id();
                self.rs.set_rules(vec![Rule {
                    lead,
                    tail: NcPoly::zero(f),
                    id,
                }]);
                return Ok(());
            }
            if lead.len() > self.rs.degree_bound {
                return Err(self.overflow(format!(
                    "rule of degree {} exceeds degree bound {}",
                    lead.len(),
                    self.rs.degree_bound
                )));
            }
            let tail = &NcPoly::monomial(f, lead.clone()) - &r;
            let (absorbed, mut kept): (Vec<Rule>, Vec<Rule>) = std::mem::take(&mut self.rs.rules)
                .into_iter()
                .partition(|rule| rule.lead.contains_factor(lead.letters()));
            queue.extend(absorbed.iter().map(Rule::polynomial));
            let id = self.fresh_id();
            kept.push(Rule { lead, tail, id });
            if kept.len() > self.max_rules {
                self.rs.set_rules(kept);
                return Err(self.overflow(format!("more than {} rules", self.max_rules)));
            }
            self.rs.set_rules(kept);
        }
        self.reduce_tails();
        Ok(())
    }

    fn reduce_tails(&mut self) {
        let reduced: Vec<NcPoly> = self
            .rs
            .rules
            .iter()
            .map(|r| self.rs.normal_form(&r.tail))
            .collect();
        let mut rules = std::mem::take(&mut self.rs.rules);
        for (rule, tail) in rules.iter_mut().zip(reduced) {
            if rule.tail != tail {
                rule.tail = tail;
                rule.id = self.fresh_id();
            }
        }
        self.rs.set_rules(rules);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::freealg::{Alphabet, FreeAlgebra};

    #[test]
    fn overflow_reports_partial_state() {
        // aba − bab has no finite Gröbner basis under deglex (a < b).
        let f = FieldSpec::default();
        let fa = FreeAlgebra::new(Alphabet::from_chars("ab"), f);
        let (a, b) = (fa.gen("a"), fa.gen("b"));
        let rel = &(&(&a * &b) * &a) - &(&(&b * &a) * &b);
        let p = Presentation::new("braid", fa.alphabet.clone(), f, vec![rel]).unwrap();
        match complete(&p, 6, 200) {
            Err(Error::CompletionOverflow { partial, .. }) => {
                assert!(!partial.is_certified());
                assert!(!partial.rules().is_empty());
            }
            other => panic!("expected overflow, got {other:?}"),
        }
    }

    #[test]
    fn inconsistent_relations_collapse() {
        let f = FieldSpec::default();
        let fa = FreeAlgebra::new(Alphabet::from_chars("ab"), f);
        let (a, b) = (fa.gen("a"), fa.gen("b"));
        let one = NcPoly::one(f);
        // ab − ba − 1 with a² = b² = 0 forces 1 = 0 (Weyl-type relation in a nilpotent setting)
        let rels = vec![&a * &a, &b * &b, &(&(&a * &b) - &(&b * &a)) - &one];
        let p = Presentation::new("collapse", fa.alphabet.clone(), f, rels).unwrap();
        let rs = complete(&p, 12, 200).unwrap();
        assert!(rs.is_trivial());
        assert!(rs.contains(&one));
        assert_eq!(rs.normal_words(None).unwrap().len(), 0);
    }

    #[test]
    fn bound_below_relation_degree_rejected() {
        let f = FieldSpec::default();
        let fa = FreeAlgebra::new(Alphabet::from_chars("a"), f);
        let a = fa.gen("a");
        let p = Presentation::new("cube", fa.alphabet.clone(), f, vec![a.pow(3)]).unwrap();
        assert!(complete(&p, 2, 200).is_err());
    }
}
