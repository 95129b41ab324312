use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::freealg::NcPoly;
use crate::gbasis::complete;
use crate::structure::{AlgebraTable, Element, Quotient};

use super::{quadratic_form, ModelParams, QuadraticFormKind};

/// An `n × n` matrix with entries in a finite-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixOverAlgebra {
    pub n: usize,
    pub entries: Vec<Vec<Element>>,
}

impl MatrixOverAlgebra {
    /// Coordinates in `Matₙ(A)` as built by [`AlgebraTable::matrix_algebra`].
    pub fn to_element(&self, base_dim: usize) -> Element {
        let mut coords = Vec::with_capacity(self.n * self.n * base_dim);
        for row in &self.entries {
            for e in row {
                coords.extend(e.coords.iter().cloned());
            }
        }
        debug_assert_eq!(coords.len(), self.n * self.n * base_dim);
        Element::new(coords)
    }
}

/// The 3×3 matrices `A, B, C, Y` over the Clifford algebra `C(V, q_γ)`.
#[derive(Clone, Debug)]
pub struct RhoMatrices {
    pub clifford: Quotient,
    pub mat3: AlgebraTable,
    pub a: MatrixOverAlgebra,
    pub b: MatrixOverAlgebra,
    pub c: MatrixOverAlgebra,
    pub y: MatrixOverAlgebra,
}

impl RhoMatrices {
    /// `A, B, C, Y` as elements of `Mat₃(C(V, q_γ))`.
    pub fn elements(&self) -> [Element; 4] {
        let d = self.clifford.dim();
        [&self.a, &self.b, &self.c, &self.y].map(|m| m.to_element(d))
    }
}

/// Requires `γ³ + β³ ≠ 0` (so that `x₂` is invertible) and a primitive
/// cube root of unity `ζ`.
pub fn rho_matrices(p: &ModelParams) -> Result<RhoMatrices> {
    let f = p.field;
    let zeta = p.zeta()?.clone();
    let gamma = p.gamma()?.clone();
    let q = quadratic_form(QuadraticFormKind::QGamma, p)?;
    let x2_square = q.diagonal[1].clone();
    if f.is_zero(&x2_square) {
        return Err(Error::NotInvertible);
    }
    let rs = complete(&q.clifford_presentation()?, 4, 50)?;
    let clifford = Quotient::new(rs)?;
    let mat3 = clifford.table.matrix_algebra(3)?;

    let el = |poly: &NcPoly| clifford.element(poly);
    let k = |s: &Scalar| el(&NcPoly::constant(f, s.clone()));
    let x1p = NcPoly::generator(f, 0);
    let x2p = NcPoly::generator(f, 1);
    let z2 = f.mul(&zeta, &zeta);
    let beta = &p.beta;
    // (β + ζ²γ), (β + γ), (β + ζγ)
    let bz2 = f.add(beta, &f.mul(&z2, &gamma));
    let b1 = f.add(beta, &gamma);
    let bz1 = f.add(beta, &f.mul(&zeta, &gamma));
    let x2_inv = x2p.scale(&f.inv(&x2_square)?);
    let x_prime = &(-&x1p) - &x2p.scale(&f.inv(&bz2)?);
    let x_second = &(&x1p + &x2p.scale(&f.inv(&bz2)?)) - &x2p.scale(&f.inv(&b1)?);
    let third = f.inv(&f.from_i64(3))?;

    let build = |w: &Scalar| -> MatrixOverAlgebra {
        let w2 = f.mul(w, w);
        let one = NcPoly::one(f);
        let rows = [
            [x1p.clone(), NcPoly::constant(f, f.mul(w, &bz2)), x2p.scale(&w2)],
            [NcPoly::constant(f, w2.clone()), x_prime.clone(), NcPoly::constant(f, f.mul(w, &b1))],
            [x2_inv.scale(&f.mul(w, &bz1)), one.scale(&w2), x_second.clone()],
        ];
        MatrixOverAlgebra {
            n: 3,
            entries: rows
                .iter()
                .map(|r| r.iter().map(|e| el(&e.scale(&third))).collect())
                .collect(),
        }
    };
    let a = build(&f.one());
    let b = build(&zeta);
    let c = build(&z2);
    let diag = [gamma.clone(), f.mul(&zeta, &gamma), f.mul(&z2, &gamma)];
    let y = MatrixOverAlgebra {
        n: 3,
        entries: (0..3)
            .map(|i| (0..3).map(|j| if i == j { k(&diag[i]) } else { clifford.table.zero() }).collect())
            .collect(),
    };
    Ok(RhoMatrices {
        clifford,
        mat3,
        a,
        b,
        c,
        y,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    const F: FieldSpec = FieldSpec::Prime(10009);

    #[test]
    fn defining_relations_hold() {
        let p = ModelParams::with_gamma(F, F.one(), F.zero(), F.one());
        let rho = rho_matrices(&p).unwrap();
        let t = &rho.mat3;
        let [a, b, c, y] = rho.elements();
        let scalar = |s: &Scalar| t.scale(&t.unit(), s);
        for x in [&a, &b, &c] {
            assert_eq!(t.mul(x, x), scalar(&p.alpha1));
        }
        let cyc = |x: &Element, y: &Element, z: &Element| t.add(&t.add(&t.mul(x, y), &t.mul(y, z)), &t.mul(z, x));
        assert_eq!(cyc(&a, &b, &c), scalar(&p.alpha2));
        assert_eq!(cyc(&a, &c, &b), t.add(&scalar(&p.alpha2), &y));
        assert_eq!(t.pow(&y, 3), scalar(p.alpha3.as_ref().unwrap()));
        assert_eq!(t.dim(), 36);
    }

    #[test]
    fn singular_x2_rejected() {
        // γ = −β makes γ³ + β³ = 0
        let p0 = ModelParams::from_i64(F, 1, 0, None);
        let p = ModelParams::with_gamma(F, F.one(), F.zero(), F.neg(&p0.beta));
        assert!(matches!(rho_matrices(&p), Err(Error::NotInvertible)));
    }
}
