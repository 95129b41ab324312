//! Finite-dimensional algebras given by structure constants.
//!
//! An [`AlgebraTable`] is built from a certified, finite-dimensional
//! [`RewriteSystem`] (basis = normal words) or directly from structure
//! constants. Radicals use the trace form `T(x, y) = tr(L_{xy})`, whose
//! kernel is the Jacobson radical in characteristic 0 or `p > dim`.

mod linalg;

pub use linalg::{Basis, Matrix, Subspace};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::freealg::{NcPoly, Word};
use crate::gbasis::RewriteSystem;

/// Sparse coordinate vector of a product of two basis elements.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Dense coordinates with respect to a table's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub coords: Vec<Scalar>,
}

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct AlgebraTable {
    field: FieldSpec,
    labels: Vec<String>,
    words: Vec<Word>,
    word_index: HashMap<Word, usize>,
    product: Vec<Vec<SparseVec>>,
    unit: Element,
    generators: Vec<usize>,
}

impl AlgebraTable {
    /// Table from explicit structure constants. `product[i][j]` is the
    /// sparse expansion of `bᵢ·bⱼ`. Associativity and the unit law are
    /// verified on all basis triples.
    pub fn from_structure(
        field: FieldSpec,
        labels: Vec<String>,
        product: Vec<Vec<SparseVec>>,
        unit: Element,
    ) -> Result<Self> {
        let n = labels.len();
        if product.len() != n || product.iter().any(|row| row.len() != n) || unit.len() != n {
            return Err(Error::Inconsistent("structure constants have the wrong shape".into()));
        }
        let t = AlgebraTable {
            field,
            labels,
            words: Vec::new(),
            word_index: HashMap::new(),
            product,
            unit,
            generators: (0..n).collect(),
        };
        t.check_unit()?;
        t.check_associativity(&t.generators)?;
        Ok(t)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Normal-word basis, empty for abstract tables.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn index_of_word(&self, w: &Word) -> Option<usize> {
        self.word_index.get(w).copied()
    }

    /// Indices of basis elements that generate the algebra.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.product[i][j]
    }

    pub fn unit(&self) -> Element {
        self.unit.clone()
    }

    pub fn zero(&self) -> Element {
        Element::new(vec![self.field.zero(); self.dim()])
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut x = self.zero();
        x.coords[i] = self.field.one();
        x
    }

    pub fn scalar(&self, c: &Scalar) -> Element {
        self.scale(&self.unit, c)
    }

    pub fn is_zero(&self, x: &Element) -> bool {
        x.coords.iter().all(|c| self.field.is_zero(c))
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        let f = self.field;
        Element::new(x.coords.iter().zip(&y.coords).map(|(a, b)| f.add(a, b)).collect())
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        let f = self.field;
        Element::new(x.coords.iter().zip(&y.coords).map(|(a, b)| f.sub(a, b)).collect())
    }

    pub fn neg(&self, x: &Element) -> Element {
        let f = self.field;
        Element::new(x.coords.iter().map(|a| f.neg(a)).collect())
    }

    pub fn scale(&self, x: &Element, c: &Scalar) -> Element {
        let f = self.field;
        Element::new(x.coords.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let f = self.field;
        let mut out = vec![f.zero(); self.dim()];
        let ys: Vec<(usize, &Scalar)> = nonzero(f, &y.coords).collect();
        for (i, a) in nonzero(f, &x.coords) {
            for &(j, b) in &ys {
                let ab = f.mul(a, b);
                for (k, c) in &self.product[i][j] {
                    out[*k] = f.add(&out[*k], &f.mul(&ab, c));
                }
            }
        }
        Element::new(out)
    }

    /// `x · bⱼ`.
    fn mul_basis_right(&self, x: &[Scalar], j: usize) -> Vec<Scalar> {
        let f = self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, a) in nonzero(f, x) {
            for (k, c) in &self.product[i][j] {
                out[*k] = f.add(&out[*k], &f.mul(a, c));
            }
        }
        out
    }

    /// `bᵢ · x`.
    fn mul_basis_left(&self, i: usize, x: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (j, a) in nonzero(f, x) {
            for (k, c) in &self.product[i][j] {
                out[*k] = f.add(&out[*k], &f.mul(a, c));
            }
        }
        out
    }

    pub fn pow(&self, x: &Element, n: u32) -> Element {
        (0..n).fold(self.unit(), |acc, _| self.mul(&acc, x))
    }

    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        self.sub(&self.mul(x, y), &self.mul(y, x))
    }

    pub fn format(&self, x: &Element) -> String {
        let f = self.field;
        let parts: Vec<String> = nonzero(f, &x.coords)
            .map(|(i, c)| {
                if f.is_one(c) {
                    self.labels[i].clone()
                } else {
                    format!("{}*{}", f.format(c), self.labels[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim() {
            let b = self.basis_element(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::Inconsistent(format!("unit law fails at basis element {i}")));
            }
        }
        Ok(())
    }

    /// `(bᵢ bⱼ) bₖ = bᵢ (bⱼ bₖ)` for `i ∈ lefts` and all `j, k`. When
    /// `lefts` generates the algebra this implies associativity on every
    /// triple.
    pub fn check_associativity(&self, lefts: &[usize]) -> Result<()> {
        for &i in lefts {
            for j in 0..self.dim() {
                let ij = sparse_to_dense(self.field, self.dim(), &self.product[i][j]);
                for k in 0..self.dim() {
                    let lhs = self.mul_basis_right(&ij, k);
                    let jk = sparse_to_dense(self.field, self.dim(), &self.product[j][k]);
                    let rhs = self.mul_basis_left(i, &jk);
                    if lhs != rhs {
                        return Err(Error::Inconsistent(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_associativity_exhaustive(&self) -> Result<()> {
        let all: Vec<usize> = (0..self.dim()).collect();
        self.check_associativity(&all)
    }

    /// Matrix of `z ↦ x·z`.
    pub fn left_regular(&self, x: &Element) -> Matrix {
        let f = self.field;
        let n = self.dim();
        let mut m = Matrix::zeros(f, n, n);
        for (i, a) in nonzero(f, &x.coords) {
            for j in 0..n {
                for (k, c) in &self.product[i][j] {
                    let v = f.add(m.get(*k, j), &f.mul(a, c));
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    /// Matrix of `z ↦ z·x`.
    pub fn right_regular(&self, x: &Element) -> Matrix {
        let f = self.field;
        let n = self.dim();
        let mut m = Matrix::zeros(f, n, n);
        for (j, a) in nonzero(f, &x.coords) {
            for i in 0..n {
                for (k, c) in &self.product[i][j] {
                    let v = f.add(m.get(*k, i), &f.mul(a, c));
                    m.set(*k, i, v);
                }
            }
        }
        m
    }

    fn require_trace_criterion(&self) -> Result<()> {
        let p = self.field.characteristic();
        if p != 0 && p as usize <= self.dim() {
            return Err(Error::CriterionInvalid {
                characteristic: p,
                dim: self.dim(),
            });
        }
        Ok(())
    }

    /// `T[i][j] = tr(L_{bᵢ bⱼ})`.
    pub fn trace_form(&self) -> Result<Matrix> {
        self.require_trace_criterion()?;
        let f = self.field;
        let n = self.dim();
        let tau: Vec<Scalar> = (0..n)
            .map(|k| {
                (0..n).fold(f.zero(), |acc, j| {
                    self.product[k][j]
                        .iter()
                        .filter(|(m, _)| *m == j)
                        .fold(acc, |acc, (_, c)| f.add(&acc, c))
                })
            })
            .collect();
        let mut t = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                let v = self.product[i][j]
                    .iter()
                    .fold(f.zero(), |acc, (k, c)| f.add(&acc, &f.mul(c, &tau[*k])));
                t.set(i, j, v);
            }
        }
        Ok(t)
    }

    /// The radical, checked to be a nilpotent two-sided ideal.
    pub fn radical(&self) -> Result<Subspace> {
        let t = self.trace_form()?;
        let rad = Subspace::span(self.field, self.dim(), t.kernel());
        if !self.is_two_sided_ideal(&rad) {
            return Err(Error::Inconsistent("trace-form kernel is not an ideal".into()));
        }
        if self.nilpotency_index(&rad).is_none() {
            return Err(Error::Inconsistent("trace-form kernel is not nilpotent".into()));
        }
        Ok(rad)
    }

    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(self.trace_form()?.is_nonsingular())
    }

    pub fn center(&self) -> Subspace {
        let f = self.field;
        let n = self.dim();
        let mut eqs = Subspace::zero(f, n);
        for i in 0..n {
            // row m of (x bᵢ − bᵢ x) as a linear form in x
            let mut rows = vec![vec![f.zero(); n]; n];
            for k in 0..n {
                for (m, c) in &self.product[k][i] {
                    rows[*m][k] = f.add(&rows[*m][k], c);
                }
                for (m, c) in &self.product[i][k] {
                    rows[*m][k] = f.sub(&rows[*m][k], c);
                }
            }
            for r in rows {
                eqs.insert(r);
                if eqs.dim() == n {
                    return Subspace::zero(f, n);
                }
            }
        }
        let m = Matrix::from_rows(f, eqs.basis().to_vec());
        let kernel = if eqs.is_zero() {
            Subspace::full(f, n).basis().to_vec()
        } else {
            m.kernel()
        };
        Subspace::span(f, n, kernel)
    }

    pub fn is_central(&self, x: &Element) -> bool {
        (0..self.dim()).all(|i| {
            let b = self.basis_element(i);
            self.mul(x, &b) == self.mul(&b, x)
        })
    }

    pub fn two_sided_ideal(&self, gens: &[Element]) -> Subspace {
        let mut s = Subspace::zero(self.field, self.dim());
        let mut queue: Vec<Vec<Scalar>> = Vec::new();
        for g in gens {
            if s.insert(g.coords.clone()) {
                queue.push(g.coords.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for &g in &self.generators {
                for w in [self.mul_basis_right(&v, g), self.mul_basis_left(g, &v)] {
                    if s.insert(w.clone()) {
                        queue.push(w);
                    }
                }
            }
        }
        s
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|v| {
            self.generators.iter().all(|&g| {
                s.contains(&self.mul_basis_right(v, g)) && s.contains(&self.mul_basis_left(g, v))
            })
        })
    }

    /// `span{ x·y : x ∈ s, y ∈ t }`.
    pub fn product_space(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.field, self.dim());
        for y in t.basis() {
            let r = self.right_regular(&Element::new(y.clone()));
            for x in s.basis() {
                out.insert(r.mul_vec(x));
                if out.dim() == self.dim() {
                    return out;
                }
            }
        }
        out
    }

    /// Smallest `k` with `sᵏ = 0`, or `None` if the powers stabilize
    /// before reaching zero.
    pub fn nilpotency_index(&self, s: &Subspace) -> Option<usize> {
        if s.is_zero() {
            return Some(0);
        }
        let mut power = s.clone();
        let mut k = 1;
        loop {
            let next = self.product_space(&power, s);
            k += 1;
            if next.is_zero() {
                return Some(k);
            }
            if next.dim() == power.dim() {
                return None;
            }
            power = next;
        }
    }

    pub fn is_idempotent(&self, e: &Element) -> bool {
        self.mul(e, e) == *e
    }

    /// The corner algebra `eAe`, unit `e` at basis index 0.
    pub fn corner(&self, e: &Element) -> Result<AlgebraTable> {
        Ok(self.corner_embedded(e)?.table)
    }

    pub fn corner_embedded(&self, e: &Element) -> Result<Corner> {
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        let f = self.field;
        let n = self.dim();
        let mut span = Subspace::zero(f, n);
        let mut vectors = Vec::new();
        if !self.is_zero(e) {
            span.insert(e.coords.clone());
            vectors.push(e.coords.clone());
        }
        let left = self.left_regular(e);
        let right = self.right_regular(e);
        for i in 0..n {
            let v = right.mul_vec(&left.mul_vec(&self.basis_element(i).coords));
            if span.insert(v.clone()) {
                vectors.push(v);
            }
        }
        let basis = Basis::new(f, n, vectors).expect("independent by construction");
        let d = basis.len();
        let mut product = vec![vec![Vec::new(); d]; d];
        for (i, row) in product.iter_mut().enumerate() {
            let l = self.left_regular(&Element::new(basis.vectors()[i].clone()));
            for (j, cell) in row.iter_mut().enumerate() {
                let v = l.mul_vec(&basis.vectors()[j]);
                let c = basis.coords(&v).ok_or_else(|| {
                    Error::Inconsistent("corner is not closed under multiplication".into())
                })?;
                *cell = nonzero(f, &c).map(|(k, x)| (k, x.clone())).collect();
            }
        }
        let labels = (0..d).map(|i| if i == 0 { "e".into() } else { format!("e{i}") }).collect();
        let mut unit = vec![f.zero(); d];
        if d > 0 {
            unit[0] = f.one();
        }
        let table = AlgebraTable::from_structure(f, labels, product, Element::new(unit))?;
        Ok(Corner { table, basis })
    }

    pub fn is_invertible(&self, x: &Element) -> bool {
        self.left_regular(x).is_nonsingular()
    }

    pub fn inverse(&self, x: &Element) -> Option<Element> {
        let l = self.left_regular(x).inverse()?;
        Some(Element::new(l.mul_vec(&self.unit.coords)))
    }

    /// Smallest unital subalgebra containing `gens`.
    pub fn subalgebra_with_unit(&self, gens: &[Element]) -> Subspace {
        let mut s = Subspace::zero(self.field, self.dim());
        let regs: Vec<Matrix> = gens.iter().map(|g| self.right_regular(g)).collect();
        let mut queue = Vec::new();
        if s.insert(self.unit.coords.clone()) {
            queue.push(self.unit.coords.clone());
        }
        while let Some(v) = queue.pop() {
            for r in &regs {
                let w = r.mul_vec(&v);
                if s.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        s
    }

    /// `Matₙ(A)` with basis `E_ij ⊗ b_k` at index `(i·n + j)·dim + k`.
    pub fn matrix_algebra(&self, n: usize) -> Result<AlgebraTable> {
        let d = self.dim();
        let f = self.field;
        let idx = |i: usize, j: usize, k: usize| (i * n + j) * d + k;
        let size = n * n * d;
        let mut product = vec![vec![Vec::new(); size]; size];
        let mut labels = vec![String::new(); size];
        for i in 0..n {
            for j in 0..n {
                for k in 0..d {
                    labels[idx(i, j, k)] = format!("E{}{}[{}]", i + 1, j + 1, self.labels[k]);
                    for l in 0..n {
                        for m in 0..d {
                            product[idx(i, j, k)][idx(j, l, m)] = self.product[k][m]
                                .iter()
                                .map(|(r, c)| (idx(i, l, *r), c.clone()))
                                .collect();
                        }
                    }
                }
            }
        }
        let mut unit = vec![f.zero(); size];
        for i in 0..n {
            for (k, c) in nonzero(f, &self.unit.coords) {
                unit[idx(i, i, k)] = c.clone();
            }
        }
        let mut t = AlgebraTable::from_structure_unchecked(f, labels, product, Element::new(unit));
        t.generators = (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| self.generators.iter().map(move |&k| idx(i, j, k))))
            .collect();
        t.check_unit()?;
        Ok(t)
    }

    fn from_structure_unchecked(
        field: FieldSpec,
        labels: Vec<String>,
        product: Vec<Vec<SparseVec>>,
        unit: Element,
    ) -> Self {
        let n = labels.len();
        AlgebraTable {
            field,
            labels,
            words: Vec::new(),
            word_index: HashMap::new(),
            product,
            unit,
            generators: (0..n).collect(),
        }
    }
}

/// Structure constants of the quotient on its normal-word basis:
/// `bᵢ·bⱼ = NF(wᵢwⱼ)`. Associativity is verified on every triple whose
/// first factor is a generator, which covers all triples because every
/// normal word is a product of normal letters.
pub fn build_table(rs: &RewriteSystem) -> Result<AlgebraTable> {
    let f = rs.field();
    let words = rs.normal_words(None)?;
    if words.is_empty() {
        return Err(Error::Inconsistent("the quotient is the zero algebra".into()));
    }
    let word_index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let n = words.len();
    let to_sparse = |p: &NcPoly| -> SparseVec {
        let mut cell: SparseVec = p.terms().map(|(w, c)| (word_index[w], c.clone())).collect();
        cell.sort_by_key(|(k, _)| *k);
        cell
    };
    // left[x][m] = NF(x·w_m); every normal word is x·w' with w' normal
    let left: Vec<Vec<SparseVec>> = (0..rs.alphabet().len())
        .map(|x| {
            words
                .iter()
                .map(|w| to_sparse(&rs.normal_form(&NcPoly::monomial(f, Word::letter(x).concat(w)))))
                .collect()
        })
        .collect();
    let mut product: Vec<Vec<SparseVec>> = Vec::with_capacity(n);
    for wi in &words {
        let row = if wi.is_empty() {
            (0..n).map(|j| vec![(j, f.one())]).collect()
        } else {
            let x = wi.letters()[0] as usize;
            let rest = word_index[&wi.slice(1, wi.len())];
            product[rest]
                .iter()
                .map(|cell: &SparseVec| {
                    let mut acc = vec![f.zero(); n];
                    for (m, c) in cell {
                        for (k, d) in &left[x][*m] {
                            acc[*k] = f.add(&acc[*k], &f.mul(c, d));
                        }
                    }
                    nonzero(f, &acc).map(|(k, c)| (k, c.clone())).collect()
                })
                .collect()
        };
        product.push(row);
    }
    let labels = words.iter().map(|w| rs.alphabet().format_word(w)).collect();
    let generators = words
        .iter()
        .enumerate()
        .filter(|(_, w)| w.len() == 1)
        .map(|(i, _)| i)
        .collect();
    let mut unit = vec![f.zero(); n];
    unit[0] = f.one();
    let t = AlgebraTable {
        field: f,
        labels,
        words,
        word_index,
        product,
        unit: Element::new(unit),
        generators,
    };
    t.check_associativity(&t.generators)?;
    Ok(t)
}

/// A corner `eAe` together with its basis inside the ambient algebra.
#[derive(Clone, Debug)]
pub struct Corner {
    pub table: AlgebraTable,
    pub basis: Basis,
}

impl Corner {
    /// Coordinates in the corner of an ambient element lying in `eAe`.
    pub fn restrict(&self, x: &Element) -> Option<Element> {
        self.basis.coords(&x.coords).map(Element::new)
    }

    pub fn lift(&self, x: &Element) -> Element {
        Element::new(self.basis.combine(&x.coords))
    }
}

/// A finite-dimensional quotient: its rewrite system and table.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub rs: RewriteSystem,
    pub table: AlgebraTable,
}

impl Quotient {
    pub fn new(rs: RewriteSystem) -> Result<Self> {
        let table = build_table(&rs)?;
        Ok(Quotient { rs, table })
    }

    /// The image of a free-algebra element.
    pub fn element(&self, p: &NcPoly) -> Element {
        let nf = self.rs.normal_form(p);
        let mut x = self.table.zero();
        for (w, c) in nf.terms() {
            x.coords[self.table.word_index[w]] = c.clone();
        }
        x
    }

    pub fn to_poly(&self, x: &Element) -> NcPoly {
        let f = self.table.field;
        NcPoly::from_terms(
            f,
            nonzero(f, &x.coords).map(|(i, c)| (self.table.words[i].clone(), c.clone())),
        )
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }
}

fn nonzero(f: FieldSpec, v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
    v.iter().enumerate().filter(move |(_, c)| !f.is_zero(c))
}

fn sparse_to_dense(f: FieldSpec, n: usize, s: &SparseVec) -> Vec<Scalar> {
    let mut v = vec![f.zero(); n];
    for (k, c) in s {
        v[*k] = c.clone();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{Alphabet, FreeAlgebra};
    use crate::gbasis::{complete, Presentation};

    const F: FieldSpec = FieldSpec::Prime(10009);

    fn quotient(gens: &str, rels: impl FnOnce(&FreeAlgebra) -> Vec<NcPoly>) -> Quotient {
        let fa = FreeAlgebra::new(Alphabet::from_chars(gens), F);
        let p = Presentation::new("test", fa.alphabet.clone(), F, rels(&fa)).unwrap();
        Quotient::new(complete(&p, 12, 200).unwrap()).unwrap()
    }

    fn dual_numbers() -> Quotient {
        quotient("a", |fa| vec![&fa.gen("a") * &fa.gen("a")])
    }

    fn split_pair() -> Quotient {
        quotient("a", |fa| vec![&(&fa.gen("a") * &fa.gen("a")) - &NcPoly::one(F)])
    }

    #[test]
    fn dual_numbers_trace_form() {
        let q = dual_numbers();
        let t = q.table.trace_form().unwrap();
        let expected = Matrix::from_rows(F, vec![vec![F.from_i64(2), F.zero()], vec![F.zero(), F.zero()]]);
        assert_eq!(t, expected);
        assert_eq!(t.rank(), 1);
        assert_eq!(q.table.radical().unwrap().dim(), 1);
        assert!(!q.table.is_semisimple().unwrap());
    }

    #[test]
    fn split_pair_is_commutative_semisimple() {
        let q = split_pair();
        let t = &q.table;
        assert_eq!(t.dim(), 2);
        let a = t.basis_element(1);
        assert_eq!(t.mul(&a, &a), t.unit());
        assert_eq!(t.center().dim(), 2);
        assert!(t.is_semisimple().unwrap());
        assert!(t.is_invertible(&a));
        assert_eq!(t.inverse(&a).unwrap(), a);
    }

    #[test]
    fn regular_representation_is_multiplicative() {
        let q = quotient("ab", |fa| {
            let (a, b) = (fa.gen("a"), fa.gen("b"));
            vec![&a * &a, &b * &b, &(&a * &b) + &(&b * &a)]
        });
        let t = &q.table;
        assert_eq!(t.dim(), 4);
        assert_eq!(t.left_regular(&t.unit()), Matrix::identity(F, 4));
        let x = q.element(&(&NcPoly::from_i64(F, 3) + &NcPoly::generator(F, 0)));
        let y = t.add(&t.basis_element(2), &t.basis_element(3));
        assert_eq!(t.left_regular(&x).mul(&t.left_regular(&y)), t.left_regular(&t.mul(&x, &y)));
        assert_eq!(t.right_regular(&y).mul_vec(&x.coords), t.mul(&x, &y).coords);
        t.check_associativity_exhaustive().unwrap();
        // exterior algebra on two generators: radical spanned by a, b, ab
        assert_eq!(t.radical().unwrap().dim(), 3);
        assert_eq!(t.nilpotency_index(&t.radical().unwrap()), Some(3));
        assert_eq!(t.center().dim(), 2);
    }

    #[test]
    fn ideals_and_subalgebras() {
        let q = dual_numbers();
        let t = &q.table;
        assert_eq!(t.two_sided_ideal(&[t.unit()]).dim(), 2);
        let a = t.basis_element(1);
        let ideal = t.two_sided_ideal(&[a.clone()]);
        assert_eq!(ideal.dim(), 1);
        assert!(t.is_two_sided_ideal(&ideal));
        assert_eq!(t.nilpotency_index(&ideal), Some(2));
        assert_eq!(t.subalgebra_with_unit(&[]).dim(), 1);
        assert_eq!(t.subalgebra_with_unit(&[a.clone()]).dim(), 2);
        assert!(!t.is_invertible(&a));
    }

    #[test]
    fn corners() {
        let q = split_pair();
        let t = &q.table;
        let two_inv = F.inv(&F.from_i64(2)).unwrap();
        let e = t.scale(&t.add(&t.unit(), &t.basis_element(1)), &two_inv);
        let c = t.corner_embedded(&e).unwrap();
        assert_eq!(c.table.dim(), 1);
        assert_eq!(c.lift(&c.table.unit()), e);
        assert_eq!(t.corner(&t.unit()).unwrap().dim(), 2);
        assert!(matches!(t.corner(&t.basis_element(1)), Err(Error::NotIdempotent)));
    }

    #[test]
    fn matrix_algebra_over_base() {
        let q = split_pair();
        let m = q.table.matrix_algebra(2).unwrap();
        assert_eq!(m.dim(), 8);
        m.check_associativity_exhaustive().unwrap();
        assert!(m.is_semisimple().unwrap());
        assert_eq!(m.center().dim(), 2);
    }

    #[test]
    fn small_characteristic_rejected() {
        let f = FieldSpec::Prime(5);
        let fa = FreeAlgebra::new(Alphabet::from_chars("ab"), f);
        let (a, b) = (fa.gen("a"), fa.gen("b"));
        let p = Presentation::new("ext", fa.alphabet.clone(), f, vec![&a * &a, &b * &b, &(&a * &b) + &(&b * &a)]).unwrap();
        let q = Quotient::new(complete(&p, 12, 200).unwrap()).unwrap();
        assert!(q.table.trace_form().is_ok());
        let m = q.table.matrix_algebra(2).unwrap();
        assert!(matches!(m.radical(), Err(Error::CriterionInvalid { characteristic: 5, dim: 16 })));
    }
}
