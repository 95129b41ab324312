//! The deformation families and their auxiliary data: presentations,
//! parameters, named elements, group actions, quadratic forms, the Ore
//! datum, the 3×3 representation and the relation suites.

mod rho;
mod suites;

pub use rho::{rho_matrices, MatrixOverAlgebra, RhoMatrices};
pub use suites::{relation_suite, SuiteId, SUITES};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::freealg::{Alphabet, MorphismSpec, NcPoly, SkewDerivationSpec};
use crate::gbasis::Presentation;
use crate::structure::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    E3,
    D3,
    K,
    K3,
    T,
    B,
    Clifford,
}

impl ModelKind {
    pub const ALL: [ModelKind; 7] = [
        ModelKind::E3,
        ModelKind::D3,
        ModelKind::K,
        ModelKind::K3,
        ModelKind::T,
        ModelKind::B,
        ModelKind::Clifford,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ModelKind::E3 => "E3",
            ModelKind::D3 => "D3",
            ModelKind::K => "K",
            ModelKind::K3 => "K3",
            ModelKind::T => "T",
            ModelKind::B => "B",
            ModelKind::Clifford => "CLIFFORD",
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        match self {
            ModelKind::E3 | ModelKind::D3 => Alphabet::from_chars("abc"),
            ModelKind::K | ModelKind::K3 => Alphabet::from_chars("abcy"),
            ModelKind::T | ModelKind::B => Alphabet::from_chars("abcd"),
            ModelKind::Clifford => Alphabet::new(Vec::<String>::new()).expect("empty alphabet"),
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ModelKind::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown {
                kind: "model",
                name: s.into(),
            })
    }
}

/// Deformation parameters with `β = 3α₁ − α₂` and, when available, a cube
/// root `γ` of `α₃` and a primitive cube root of unity `ζ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelParams {
    pub field: FieldSpec,
    pub alpha1: Scalar,
    pub alpha2: Scalar,
    pub alpha3: Option<Scalar>,
    pub beta: Scalar,
    pub gamma: Option<Scalar>,
    pub zeta: Option<Scalar>,
}

impl ModelParams {
    /// `γ` is the smallest cube root of `α₃` in the field, if any.
    pub fn new(field: FieldSpec, alpha1: Scalar, alpha2: Scalar, alpha3: Option<Scalar>) -> Self {
        let beta = field.sub(&field.mul(&field.from_i64(3), &alpha1), &alpha2);
        let gamma = alpha3.as_ref().and_then(|a| field.cube_root(a));
        ModelParams {
            field,
            alpha1,
            alpha2,
            alpha3,
            beta,
            gamma,
            zeta: field.primitive_cube_root().ok(),
        }
    }

    pub fn from_i64(field: FieldSpec, alpha1: i64, alpha2: i64, alpha3: Option<i64>) -> Self {
        ModelParams::new(
            field,
            field.from_i64(alpha1),
            field.from_i64(alpha2),
            alpha3.map(|a| field.from_i64(a)),
        )
    }

    /// Parameters with `α₃ = γ³` for the given `γ`.
    pub fn with_gamma(field: FieldSpec, alpha1: Scalar, alpha2: Scalar, gamma: Scalar) -> Self {
        let alpha3 = field.pow(&gamma, 3);
        let mut p = ModelParams::new(field, alpha1, alpha2, Some(alpha3));
        p.gamma = Some(gamma);
        p
    }

    pub fn zero(field: FieldSpec) -> Self {
        ModelParams::from_i64(field, 0, 0, Some(0))
    }

    pub fn alpha3(&self) -> Result<&Scalar> {
        self.alpha3
            .as_ref()
            .ok_or_else(|| Error::ParameterDomain("alpha3 is required".into()))
    }

    pub fn gamma(&self) -> Result<&Scalar> {
        self.gamma.as_ref().ok_or_else(|| {
            Error::ParameterDomain(match &self.alpha3 {
                Some(a) => format!("alpha3 = {} has no cube root in {}", self.field.format(a), self.field),
                None => "gamma requires alpha3".into(),
            })
        })
    }

    pub fn zeta(&self) -> Result<&Scalar> {
        self.zeta.as_ref().ok_or_else(|| Error::NoCubeRoot(self.field.name()))
    }

    /// `√α₁`, required nonzero.
    pub fn sqrt_alpha1(&self) -> Result<Scalar> {
        let f = self.field;
        if f.is_zero(&self.alpha1) {
            return Err(Error::ParameterDomain("alpha1 must be nonzero".into()));
        }
        f.square_root(&self.alpha1).ok_or_else(|| {
            Error::ParameterDomain(format!("alpha1 = {} is not a square", f.format(&self.alpha1)))
        })
    }

    pub fn describe(&self) -> String {
        let f = self.field;
        let mut s = format!("alpha1={}, alpha2={}", f.format(&self.alpha1), f.format(&self.alpha2));
        if let Some(a3) = &self.alpha3 {
            s.push_str(&format!(", alpha3={}", f.format(a3)));
        }
        s
    }

    pub(crate) fn c(&self, x: &Scalar) -> NcPoly {
        NcPoly::constant(self.field, x.clone())
    }
}

fn g(f: FieldSpec, i: usize) -> NcPoly {
    NcPoly::generator(f, i)
}

fn sum(terms: &[NcPoly]) -> NcPoly {
    terms.iter().skip(1).fold(terms[0].clone(), |acc, t| &acc + t)
}

/// The quadratic relations `x² − α₁` for each listed generator.
fn squares(p: &ModelParams, letters: &[usize]) -> Vec<NcPoly> {
    let f = p.field;
    letters
        .iter()
        .map(|&i| &(&g(f, i) * &g(f, i)) - &p.c(&p.alpha1))
        .collect()
}

/// `xy + yz + zx − α₂` written as in the definitions, e.g. `ca + bc + ab`.
fn cyclic(p: &ModelParams, pairs: [(usize, usize); 3]) -> NcPoly {
    let f = p.field;
    let terms: Vec<NcPoly> = pairs.iter().map(|&(i, j)| &g(f, i) * &g(f, j)).collect();
    &sum(&terms) - &p.c(&p.alpha2)
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const Y: usize = 3;

/// `ac + cb + ba − α₂` in any alphabet starting with `a, b, c`.
pub fn y_expression(p: &ModelParams) -> NcPoly {
    cyclic(p, [(A, C), (C, B), (B, A)])
}

fn d3_relations(p: &ModelParams) -> Vec<NcPoly> {
    let mut rels = squares(p, &[A, B, C]);
    rels.push(cyclic(p, [(C, A), (B, C), (A, B)]));
    rels.push(cyclic(p, [(C, B), (B, A), (A, C)]));
    rels
}

fn t_quadratic(p: &ModelParams) -> Vec<NcPoly> {
    let mut rels = squares(p, &[A, B, C, D]);
    rels.push(cyclic(p, [(C, A), (B, C), (A, B)]));
    rels.push(cyclic(p, [(D, A), (C, D), (A, C)]));
    rels.push(cyclic(p, [(D, B), (B, A), (A, D)]));
    rels.push(cyclic(p, [(D, C), (C, B), (B, D)]));
    rels
}

/// The defining presentation of a model. `q` is required for `CLIFFORD`.
pub fn presentation(model: ModelKind, params: &ModelParams, q: Option<&QuadraticForm>) -> Result<Presentation> {
    let f = params.field;
    let zero;
    let p = if model == ModelKind::E3 || model == ModelKind::B {
        zero = ModelParams::zero(f);
        &zero
    } else {
        params
    };
    let rels = match model {
        ModelKind::E3 | ModelKind::D3 => d3_relations(p),
        ModelKind::K | ModelKind::K3 => {
            let mut rels = squares(p, &[A, B, C]);
            rels.push(cyclic(p, [(A, B), (B, C), (C, A)]));
            rels.push(&cyclic(p, [(A, C), (C, B), (B, A)]) - &g(f, Y));
            if model == ModelKind::K3 {
                rels.push(&g(f, Y).pow(3) - &p.c(p.alpha3()?));
            }
            rels
        }
        ModelKind::T => {
            let mut rels = t_quadratic(p);
            rels.push(&y_expression(p).pow(3) - &p.c(p.alpha3()?));
            rels
        }
        ModelKind::B => {
            let mut rels = t_quadratic(p);
            rels.push(sum(&[g(f, A), g(f, B), g(f, C)]).pow(6));
            rels
        }
        ModelKind::Clifford => {
            let q = q.ok_or_else(|| Error::ParameterDomain("CLIFFORD requires a quadratic form".into()))?;
            return q.clifford_presentation();
        }
    };
    let label = match model {
        ModelKind::E3 | ModelKind::B => model.name().to_string(),
        _ => format!("{}({})", model.name(), p.describe()),
    };
    Presentation::new(label, model.alphabet(), f, rels)
}

/// Group generators acting by signed permutations: the transpositions
/// (12), (23) of S₃ on `D3`, or `g_a, g_b, g_c, g_d` on `T`.
pub fn group_action(model: ModelKind, field: FieldSpec) -> Result<Vec<(&'static str, MorphismSpec)>> {
    let sp = |t: &[(i64, usize)]| MorphismSpec::signed_permutation(field, t);
    match model {
        ModelKind::E3 | ModelKind::D3 => Ok(vec![
            ("(12)", sp(&[(-1, B), (-1, A), (-1, C)])),
            ("(23)", sp(&[(-1, A), (-1, C), (-1, B)])),
        ]),
        ModelKind::T | ModelKind::B => Ok(vec![
            ("g_a", sp(&[(-1, A), (-1, C), (-1, D), (-1, B)])),
            ("g_b", sp(&[(-1, D), (-1, B), (-1, A), (-1, C)])),
            ("g_c", sp(&[(-1, B), (-1, D), (-1, C), (-1, A)])),
            ("g_d", sp(&[(-1, C), (-1, A), (-1, B), (-1, D)])),
        ]),
        other => Err(Error::Unknown {
            kind: "group action for model",
            name: other.name().into(),
        }),
    }
}

/// Named elements of the free algebra on `a, b, c, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Derived {
    U,
    V,
    W,
    T,
    VPlus,
    VMinus,
    Y,
    /// `eᵢ` via `((x+y)² − (α₁+α₂))/β`.
    E(u8),
    /// `eᵢ` via its factored form, e.g. `e₁ = (c−a)(b−a)/β`.
    EFactored(u8),
    /// `f₁ = (√α₁ + b)/(2√α₁)`, `f₂ = (√α₁ − b)/(2√α₁)`.
    F(u8),
    /// `v₊ + λ·v₋²`.
    Witness(i64),
}

impl FromStr for Derived {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Unknown {
            kind: "derived element",
            name: s.into(),
        };
        Ok(match s {
            "u" => Derived::U,
            "v" => Derived::V,
            "w" => Derived::W,
            "t" => Derived::T,
            "vplus" => Derived::VPlus,
            "vminus" => Derived::VMinus,
            "y" => Derived::Y,
            "e1" | "e2" | "e3" => Derived::E(s.as_bytes()[1] - b'0'),
            "e1'" | "e2'" | "e3'" => Derived::EFactored(s.as_bytes()[1] - b'0'),
            "f1" | "f2" => Derived::F(s.as_bytes()[1] - b'0'),
            _ => {
                let lambda = s
                    .strip_prefix("witness(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(unknown)?;
                Derived::Witness(lambda.trim().parse().map_err(|_| unknown())?)
            }
        })
    }
}

pub fn derived_element(name: &Derived, p: &ModelParams) -> Result<NcPoly> {
    let f = p.field;
    let (a, b, c) = (g(f, A), g(f, B), g(f, C));
    let beta_inv = || {
        f.inv(&p.beta)
            .map_err(|_| Error::ParameterDomain("3*alpha1 - alpha2 must be nonzero".into()))
    };
    Ok(match name {
        Derived::U => &a - &b,
        Derived::V => &b - &c,
        Derived::W => &c - &a,
        Derived::T => sum(&[a, b, c]),
        Derived::VPlus | Derived::VMinus => {
            let z = p.zeta()?.clone();
            let z2 = f.mul(&z, &z);
            let (zb, zc) = if *name == Derived::VPlus { (z, z2) } else { (z2, z) };
            sum(&[a, b.scale(&zb), c.scale(&zc)])
        }
        Derived::Y => y_expression(p),
        Derived::E(i) => {
            let (x, y) = match i {
                1 => (b, c),
                2 => (a, c),
                3 => (a, b),
                _ => return Err(unknown_index("e", *i)),
            };
            let s = &x + &y;
            (&(&s * &s) - &p.c(&f.add(&p.alpha1, &p.alpha2))).scale(&beta_inv()?)
        }
        Derived::EFactored(i) => {
            let (l, r) = match i {
                1 => (&c - &a, &b - &a),
                2 => (&c - &b, &a - &b),
                3 => (&a - &c, &b - &c),
                _ => return Err(unknown_index("e", *i)),
            };
            (&l * &r).scale(&beta_inv()?)
        }
        Derived::F(i) => {
            let s = p.sqrt_alpha1()?;
            let half_inv = f.inv(&f.mul(&f.from_i64(2), &s))?;
            let sign = match i {
                1 => 1,
                2 => -1,
                _ => return Err(unknown_index("f", *i)),
            };
            (&p.c(&s) + &b.scale_i64(sign)).scale(&half_inv)
        }
        Derived::Witness(lambda) => {
            let lambda = f.from_i64(*lambda);
            let vp = derived_element(&Derived::VPlus, p)?;
            let vm = derived_element(&Derived::VMinus, p)?;
            &vp + &(&vm * &vm).scale(&lambda)
        }
    })
}

fn unknown_index(prefix: &str, i: u8) -> Error {
    Error::Unknown {
        kind: "derived element",
        name: format!("{prefix}{i}"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadraticFormKind {
    Fk3Corner,
    QGamma,
    QPrimeGamma,
}

impl FromStr for QuadraticFormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "FK3_CORNER" => Ok(QuadraticFormKind::Fk3Corner),
            "Q_GAMMA" => Ok(QuadraticFormKind::QGamma),
            "QPRIME_GAMMA" => Ok(QuadraticFormKind::QPrimeGamma),
            _ => Err(Error::Unknown {
                kind: "quadratic form",
                name: s.into(),
            }),
        }
    }
}

/// A quadratic form on `𝕂ⁿ` with bilinear form `B_q(v, w) = ½(q(v+w) − q(v) − q(w))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    pub field: FieldSpec,
    pub dim: usize,
    pub gram: Vec<Vec<Scalar>>,
    pub diagonal: Vec<Scalar>,
    /// `c₁₂² − 4·q(x₁)·q(x₂)` for binary forms, with `c₁₂` the coefficient of `λ₁λ₂`.
    pub discriminant: Option<Scalar>,
}

impl QuadraticForm {
    /// From the coefficients of `λᵢ²` and of `λᵢλⱼ` (`i < j`).
    pub fn from_coefficients(field: FieldSpec, diagonal: Vec<Scalar>, cross: &[((usize, usize), Scalar)]) -> Result<Self> {
        let n = diagonal.len();
        let half = field.inv(&field.from_i64(2))?;
        let mut gram = vec![vec![field.zero(); n]; n];
        for (i, d) in diagonal.iter().enumerate() {
            gram[i][i] = d.clone();
        }
        for ((i, j), c) in cross {
            let b = field.mul(c, &half);
            gram[*i][*j] = field.add(&gram[*i][*j], &b);
            gram[*j][*i] = gram[*i][*j].clone();
        }
        let discriminant = (n == 2).then(|| {
            let c12 = field.mul(&gram[0][1], &field.from_i64(2));
            field.sub(
                &field.mul(&c12, &c12),
                &field.mul(&field.from_i64(4), &field.mul(&diagonal[0], &diagonal[1])),
            )
        });
        Ok(QuadraticForm {
            field,
            dim: n,
            gram,
            diagonal,
            discriminant,
        })
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        QuadraticForm::from_coefficients(field, vec![field.zero(); dim], &[]).expect("char != 2")
    }

    pub fn gram_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.gram.clone())
    }

    pub fn gram_determinant(&self) -> Scalar {
        self.gram_matrix().determinant()
    }

    pub fn is_degenerate(&self) -> bool {
        self.field.is_zero(&self.gram_determinant())
    }

    pub fn eval(&self, lambda: &[Scalar]) -> Scalar {
        let f = self.field;
        let mut acc = f.zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc = f.add(&acc, &f.mul(&self.gram[i][j], &f.mul(&lambda[i], &lambda[j])));
            }
        }
        acc
    }

    /// `C(V, q)`: generators `x1 … xn`, relations `xⱼ² − q(xⱼ)` and
    /// `xₖxⱼ + xⱼxₖ − 2B(xⱼ, xₖ)`.
    pub fn clifford_presentation(&self) -> Result<Presentation> {
        let f = self.field;
        let names: Vec<String> = (1..=self.dim).map(|i| format!("x{i}")).collect();
        let mut rels = Vec::new();
        for j in 0..self.dim {
            rels.push(&(&g(f, j) * &g(f, j)) - &NcPoly::constant(f, self.diagonal[j].clone()));
            for k in j + 1..self.dim {
                let two_b = f.mul(&f.from_i64(2), &self.gram[j][k]);
                rels.push(&(&(&g(f, k) * &g(f, j)) + &(&g(f, j) * &g(f, k))) - &NcPoly::constant(f, two_b));
            }
        }
        Presentation::new(format!("C(V,q), dim V = {}", self.dim), Alphabet::new(names)?, f, rels)
    }
}

pub fn quadratic_form(kind: QuadraticFormKind, p: &ModelParams) -> Result<QuadraticForm> {
    let f = p.field;
    let i = |n: i64| f.from_i64(n);
    let (a1, a2, beta) = (&p.alpha1, &p.alpha2, &p.beta);
    match kind {
        QuadraticFormKind::Fk3Corner => {
            QuadraticForm::from_coefficients(f, vec![a1.clone(), a1.clone()], &[((0, 1), f.sub(a2, a1))])
        }
        QuadraticFormKind::QGamma | QuadraticFormKind::QPrimeGamma => {
            let gamma = p.gamma()?;
            let g2 = f.mul(gamma, gamma);
            let g3 = f.mul(&g2, gamma);
            let b2 = f.mul(beta, beta);
            let b3 = f.mul(&b2, beta);
            let q1 = f.add(gamma, &f.add(&f.mul(&i(3), a1), &f.mul(&i(2), a2)));
            let q2 = f.add(&g3, &b3);
            // 2γ² − 2βγ − β²
            let c12 = f.sub(&f.sub(&f.mul(&i(2), &g2), &f.mul(&i(2), &f.mul(beta, gamma))), &b2);
            if kind == QuadraticFormKind::QGamma {
                return QuadraticForm::from_coefficients(f, vec![q1, q2], &[((0, 1), c12)]);
            }
            let c13 = f.sub(&f.mul(&i(2), a2), gamma);
            let c23 = f.add(&f.mul(&i(2), &g2), &b2);
            QuadraticForm::from_coefficients(
                f,
                vec![q1, q2, a1.clone()],
                &[((0, 1), c12), ((0, 2), c13), ((1, 2), c23)],
            )
        }
    }
}

/// `−9(4α₁γ³ + β³(α₁+α₂))`.
pub fn q_gamma_discriminant_formula(p: &ModelParams) -> Result<Scalar> {
    let f = p.field;
    let gamma = p.gamma()?;
    let g3 = f.pow(gamma, 3);
    let b3 = f.pow(&p.beta, 3);
    let inner = f.add(
        &f.mul(&f.from_i64(4), &f.mul(&p.alpha1, &g3)),
        &f.mul(&b3, &f.add(&p.alpha1, &p.alpha2)),
    );
    Ok(f.mul(&f.from_i64(-9), &inner))
}

/// `σ` and the `(σ, id)`-skew derivation `∂` on `a, b, c, y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreData {
    pub sigma: MorphismSpec,
    pub partial: SkewDerivationSpec,
}

/// `σ(a) = −c, σ(b) = −a, σ(c) = −b, σ(y) = y`;
/// `∂(a) = α₂ − ac, ∂(b) = α₂ − ba, ∂(c) = α₂ − cb`, and `∂(y)` is the
/// expansion of `∂(ac + cb + ba)` by the skew Leibniz rule.
pub fn ore_data(p: &ModelParams) -> OreData {
    let f = p.field;
    let sigma = MorphismSpec::new(vec![-&g(f, C), -&g(f, A), -&g(f, B), g(f, Y)]);
    let alpha2 = p.c(&p.alpha2);
    let mut images = vec![
        &alpha2 - &(&g(f, A) * &g(f, C)),
        &alpha2 - &(&g(f, B) * &g(f, A)),
        &alpha2 - &(&g(f, C) * &g(f, B)),
        NcPoly::zero(f),
    ];
    let partial_abc = SkewDerivationSpec::new(sigma.clone(), images.clone());
    images[Y] = partial_abc.apply(&y_expression(p));
    OreData {
        sigma: sigma.clone(),
        partial: SkewDerivationSpec::new(sigma, images),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gbasis::complete;

    const F: FieldSpec = FieldSpec::Prime(10009);

    #[test]
    fn d3_at_zero_is_e3() {
        let e3 = presentation(ModelKind::E3, &ModelParams::from_i64(F, 5, 7, None), None).unwrap();
        let d3 = presentation(ModelKind::D3, &ModelParams::zero(F), None).unwrap();
        assert_eq!(e3.relations, d3.relations);
        assert_eq!(e3.relations.len(), 5);
    }

    #[test]
    fn missing_parameters_rejected() {
        let p = ModelParams::from_i64(F, 1, 1, None);
        assert!(matches!(presentation(ModelKind::T, &p, None), Err(Error::ParameterDomain(_))));
        assert!(matches!(presentation(ModelKind::Clifford, &p, None), Err(Error::ParameterDomain(_))));
        let t = presentation(ModelKind::T, &ModelParams::from_i64(F, 1, 1, Some(1)), None).unwrap();
        assert_eq!(t.relations.len(), 9);
    }

    #[test]
    fn exterior_algebra() {
        let q = QuadraticForm::zero(F, 2);
        let p = presentation(ModelKind::Clifford, &ModelParams::zero(F), Some(&q)).unwrap();
        let rs = complete(&p, 12, 200).unwrap();
        assert_eq!(rs.dimension().unwrap(), 4);
    }

    #[test]
    fn actions() {
        let d3 = group_action(ModelKind::D3, F).unwrap();
        assert_eq!(d3[1].1.apply(&g(F, B)), -g(F, C));
        let t = group_action(ModelKind::T, F).unwrap();
        let gd = &t[3].1;
        assert_eq!(gd.apply(&g(F, A)), -g(F, C));
        assert_eq!(gd.power(2, F).apply(&g(F, B)), g(F, C));
        let cyc = sum(&[&g(F, C) * &g(F, B), &g(F, B) * &g(F, A), &g(F, A) * &g(F, C)]);
        let expected = sum(&[&g(F, B) * &g(F, A), &g(F, A) * &g(F, C), &g(F, C) * &g(F, B)]);
        assert_eq!(gd.apply(&cyc), expected);
        // g_a g_b = g_b g_c = g_c g_a on generators
        let (ga, gb, gc) = (&t[0].1, &t[1].1, &t[2].1);
        assert_eq!(ga.compose(gb), gb.compose(gc));
        assert_eq!(gb.compose(gc), gc.compose(ga));
    }

    #[test]
    fn derived_elements() {
        let p = ModelParams::from_i64(F, 1, 3, None);
        let u = derived_element(&Derived::U, &p).unwrap();
        let v = derived_element(&Derived::V, &p).unwrap();
        let w = derived_element(&Derived::W, &p).unwrap();
        assert!((&(&u + &v) + &w).is_zero());
        let f1 = derived_element(&"f1".parse().unwrap(), &p).unwrap();
        let f2 = derived_element(&Derived::F(2), &p).unwrap();
        assert_eq!(&f1 + &f2, NcPoly::one(F));
        assert!(derived_element(&Derived::E(1), &p).is_err());
        let bad = ModelParams::from_i64(FieldSpec::Prime(7), 3, 0, None);
        assert!(derived_element(&Derived::F(1), &bad).is_err());
        assert!(matches!("witness(2)".parse::<Derived>(), Ok(Derived::Witness(_))));
    }

    #[test]
    fn corner_form_degeneracy() {
        for (a1, a2, degenerate) in [(1, 1, false), (1, -1, true), (1, 3, true), (2, 5, false)] {
            let p = ModelParams::from_i64(F, a1, a2, None);
            let q = quadratic_form(QuadraticFormKind::Fk3Corner, &p).unwrap();
            assert_eq!(q.gram[0][0], p.alpha1);
            assert_eq!(q.is_degenerate(), degenerate, "({a1}, {a2})");
        }
    }

    #[test]
    fn q_gamma_discriminant() {
        let p = ModelParams::with_gamma(F, F.one(), F.zero(), F.one());
        let q = quadratic_form(QuadraticFormKind::QGamma, &p).unwrap();
        assert_eq!(q.diagonal, vec![F.from_i64(4), F.from_i64(28)]);
        assert_eq!(q.discriminant, Some(F.from_i64(-279)));
        assert_eq!(q_gamma_discriminant_formula(&p).unwrap(), F.from_i64(-279));
        // discriminant = −4·det(Gram)
        assert_eq!(F.mul(&F.from_i64(-4), &q.gram_determinant()), F.from_i64(-279));
        let q3 = quadratic_form(QuadraticFormKind::QPrimeGamma, &p).unwrap();
        assert_eq!(q3.dim, 3);
        assert!(q3.gram_matrix().is_symmetric());
    }

    #[test]
    fn ore_partial_of_square() {
        let p = ModelParams::from_i64(F, 2, 7, None);
        let ore = ore_data(&p);
        let a = g(F, A);
        let c = g(F, C);
        let da = &p.c(&p.alpha2) - &(&a * &c);
        let expected = &(&da * &a) - &(&c * &da);
        assert_eq!(ore.partial.apply(&(&a * &a)), expected);
        // σ⁶ = id
        assert_eq!(ore.sigma.power(6, F), MorphismSpec::identity(F, 4));
    }
}
