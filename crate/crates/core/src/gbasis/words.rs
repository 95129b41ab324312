//! Normal words, the Ufnarovski graph and Hilbert series.

use crate::error::{Error, Result};
use crate::freealg::Word;

use super::RewriteSystem;

/// Directed graph on the normal words of length `ℓ − 1` (`ℓ` = longest lead
/// word). `u → v` when `u = x·s`, `v = s·y` and `u·y` is normal.
#[derive(Clone, Debug)]
pub struct UfnarovskiGraph {
    pub vertices: Vec<Word>,
    pub edges: Vec<Vec<usize>>,
}

impl UfnarovskiGraph {
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        for targets in &self.edges {
            for &t in targets {
                indegree[t] += 1;
            }
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &t in &self.edges[v] {
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    stack.push(t);
                }
            }
        }
        seen == n
    }

    /// Number of walks with `k` edges, for `k = 0..=max_steps`.
    pub fn walk_counts(&self, max_steps: usize) -> Vec<u64> {
        let mut counts = vec![1u64; self.vertices.len()];
        let mut out = Vec::with_capacity(max_steps + 1);
        for step in 0..=max_steps {
            out.push(counts.iter().fold(0u64, |a, &c| a.saturating_add(c)));
            if step == max_steps {
                break;
            }
            let mut next = vec![0u64; counts.len()];
            for (v, targets) in self.edges.iter().enumerate() {
                for &t in targets {
                    next[t] = next[t].saturating_add(counts[v]);
                }
            }
            counts = next;
        }
        out
    }
}

impl RewriteSystem {
    /// All normal words of length exactly `len`, deglex-sorted.
    fn normal_words_of_length(&self, len: usize) -> Vec<Word> {
        let mut layer = vec![Word::empty()];
        if self.is_trivial() {
            return Vec::new();
        }
        for _ in 0..len {
            layer = self.extend_layer(&layer);
        }
        layer
    }

    fn extend_layer(&self, layer: &[Word]) -> Vec<Word> {
        let n = self.alphabet.len();
        let mut next = Vec::new();
        for w in layer {
            for letter in 0..n {
                let mut x = w.clone();
                x.push(letter as u8);
                if !self.has_lead_suffix(x.letters()) {
                    next.push(x);
                }
            }
        }
        next
    }

    pub fn ufnarovski_graph(&self) -> UfnarovskiGraph {
        let m = self.max_lead_len().saturating_sub(1);
        let vertices = self.normal_words_of_length(m);
        let position: std::collections::HashMap<&[u8], usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, w)| (w.letters(), i))
            .collect();
        let edges = vertices
            .iter()
            .map(|u| {
                (0..self.alphabet.len())
                    .filter_map(|y| {
                        let mut x = u.clone();
                        x.push(y as u8);
                        if self.has_lead_suffix(x.letters()) {
                            return None;
                        }
                        position.get(&x.letters()[1..]).copied()
                    })
                    .collect()
            })
            .collect();
        UfnarovskiGraph { vertices, edges }
    }

    /// True iff the quotient has finitely many normal words.
    pub fn is_finite_dimensional(&self) -> Result<bool> {
        self.require_certified()?;
        if self.is_trivial() {
            return Ok(true);
        }
        if self.rules.is_empty() {
            return Ok(self.alphabet.is_empty());
        }
        Ok(self.ufnarovski_graph().is_acyclic())
    }

    /// Normal words up to `max_degree`, or all of them when `None` (which
    /// requires a finite-dimensional quotient).
    pub fn normal_words(&self, max_degree: Option<usize>) -> Result<Vec<Word>> {
        if max_degree.is_none() && !self.is_finite_dimensional()? {
            return Err(Error::InfiniteDimensional);
        }
        if self.is_trivial() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut layer = vec![Word::empty()];
        let mut degree = 0;
        while !layer.is_empty() && max_degree.map_or(true, |d| degree <= d) {
            out.extend(layer.iter().cloned());
            layer = self.extend_layer(&layer);
            degree += 1;
        }
        Ok(out)
    }

    /// Number of normal words of each degree `0..=max_degree`, via walk
    /// counts in the Ufnarovski graph above degree `ℓ − 1`.
    pub fn hilbert_series(&self, max_degree: usize) -> Result<Vec<u64>> {
        self.require_certified()?;
        if self.is_trivial() {
            return Ok(vec![0; max_degree + 1]);
        }
        let n = self.alphabet.len() as u64;
        if self.rules.is_empty() {
            return Ok((0..=max_degree as u32).map(|k| n.saturating_pow(k)).collect());
        }
        let m = self.max_lead_len() - 1;
        let mut out = Vec::with_capacity(max_degree + 1);
        let mut layer = vec![Word::empty()];
        for _ in 0..m.min(max_degree + 1) {
            out.push(layer.len() as u64);
            layer = self.extend_layer(&layer);
        }
        if max_degree >= m {
            out.extend(self.ufnarovski_graph().walk_counts(max_degree - m));
        }
        Ok(out)
    }

    /// Dimension of the quotient (number of normal words).
    pub fn dimension(&self) -> Result<usize> {
        Ok(self.normal_words(None)?.len())
    }
}

#[cfg(test)]
mod tests {
    use crate::field::FieldSpec;
    use crate::freealg::{Alphabet, FreeAlgebra};
    use crate::gbasis::{complete, Presentation};

    #[test]
    fn hilbert_matches_enumeration_for_infinite_quotient() {
        // a² = 0 in 𝕂⟨a, b⟩: normal words avoid "aa"; counts are Fibonacci.
        let f = FieldSpec::default();
        let fa = FreeAlgebra::new(Alphabet::from_chars("ab"), f);
        let a = fa.gen("a");
        let p = Presentation::new("aa", fa.alphabet.clone(), f, vec![&a * &a]).unwrap();
        let rs = complete(&p, 12, 200).unwrap();
        let h = rs.hilbert_series(8).unwrap();
        let words = rs.normal_words(Some(8)).unwrap();
        let mut direct = vec![0u64; 9];
        for w in words {
            direct[w.len()] += 1;
        }
        assert_eq!(h, direct);
        assert_eq!(h[..6], [1, 2, 3, 5, 8, 13]);
        assert!(!rs.is_finite_dimensional().unwrap());
    }

    #[test]
    fn normal_words_are_factor_closed() {
        let f = FieldSpec::default();
        let fa = FreeAlgebra::new(Alphabet::from_chars("abc"), f);
        let (a, b, c) = (fa.gen("a"), fa.gen("b"), fa.gen("c"));
        let rels = vec![
            &a * &a,
            &(&b * &c) - &(&c * &b),
            &(&c * &a) - &(&a * &c),
            c.pow(3),
            &(&b * &a) - &(&a * &b),
            b.pow(2),
        ];
        let p = Presentation::new("mixed", fa.alphabet.clone(), f, rels).unwrap();
        let rs = complete(&p, 12, 200).unwrap();
        let words = rs.normal_words(None).unwrap();
        for w in &words {
            for i in 0..=w.len() {
                for j in i..=w.len() {
                    assert!(rs.is_normal_word(&w.slice(i, j)));
                }
            }
        }
        // 𝕂[a,b,c]/(a², b², c³): 2·2·3 monomials
        assert_eq!(words.len(), 12);
    }
}
