use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::freealg::NcPoly;

use super::{derived_element, group_action, y_expression, Derived, ModelKind, ModelParams};

/// Named families of identities expected to vanish in a model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteId {
    D3Uvw,
    D3Idempotents,
    D3CornerClifford,
    D3Preprojective,
    D3Coinvariant,
    KYCommutation,
    KVplusVminus,
    KCubes,
    TYTwist,
    TDAnticommutators,
    BDegreeSix,
}

pub const SUITES: [SuiteId; 11] = [
    SuiteId::D3Uvw,
    SuiteId::D3Idempotents,
    SuiteId::D3CornerClifford,
    SuiteId::D3Preprojective,
    SuiteId::D3Coinvariant,
    SuiteId::KYCommutation,
    SuiteId::KVplusVminus,
    SuiteId::KCubes,
    SuiteId::TYTwist,
    SuiteId::TDAnticommutators,
    SuiteId::BDegreeSix,
];

impl SuiteId {
    pub fn name(&self) -> &'static str {
        match self {
            SuiteId::D3Uvw => "d3-uvw",
            SuiteId::D3Idempotents => "d3-idempotents",
            SuiteId::D3CornerClifford => "d3-corner-clifford",
            SuiteId::D3Preprojective => "d3-preprojective",
            SuiteId::D3Coinvariant => "d3-coinvariant",
            SuiteId::KYCommutation => "k-y-commutation",
            SuiteId::KVplusVminus => "k-vplus-vminus",
            SuiteId::KCubes => "k-cubes",
            SuiteId::TYTwist => "t-y-twist",
            SuiteId::TDAnticommutators => "t-d-anticommutators",
            SuiteId::BDegreeSix => "b-degree-six",
        }
    }

    /// The model in whose quotient the suite vanishes.
    pub fn model(&self) -> ModelKind {
        match self {
            SuiteId::D3Uvw
            | SuiteId::D3Idempotents
            | SuiteId::D3CornerClifford
            | SuiteId::D3Preprojective
            | SuiteId::D3Coinvariant => ModelKind::D3,
            SuiteId::KYCommutation | SuiteId::KVplusVminus | SuiteId::KCubes => ModelKind::K,
            SuiteId::TYTwist | SuiteId::TDAnticommutators => ModelKind::T,
            SuiteId::BDegreeSix => ModelKind::B,
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SUITES
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "relation suite",
                name: s.into(),
            })
    }
}

fn sum3(xs: &[NcPoly; 3]) -> NcPoly {
    &(&xs[0] + &xs[1]) + &xs[2]
}

type Labeled = Vec<(String, NcPoly)>;

fn push(out: &mut Labeled, label: impl Into<String>, p: NcPoly) {
    out.push((label.into(), p));
}

/// The identities of a suite as free-algebra elements, each expected to lie
/// in the defining ideal of [`SuiteId::model`] at `p`.
pub fn relation_suite(id: SuiteId, p: &ModelParams) -> Result<Labeled> {
    let f = p.field;
    let gen = |i: usize| NcPoly::generator(f, i);
    let (a, b, c) = (gen(0), gen(1), gen(2));
    let d = |name: Derived| derived_element(&name, p);
    let k = |s: &Scalar| p.c(s);
    let mut out = Vec::new();
    match id {
        SuiteId::D3Uvw => {
            let (u, v, w) = (d(Derived::U)?, d(Derived::V)?, d(Derived::W)?);
            let cab = &(&c - &a) - &b;
            let beta = k(&p.beta);
            push(&mut out, "ua + bu", &(&u * &a) + &(&b * &u));
            push(&mut out, "ub + au", &(&u * &b) + &(&a * &u));
            push(&mut out, "uc - (c-a-b)u", &(&u * &c) - &(&cab * &u));
            push(&mut out, "[u,v]", u.commutator(&v));
            push(&mut out, "[u,w]", u.commutator(&w));
            push(&mut out, "[v,w]", v.commutator(&w));
            let s = &(&(&u * &v) + &(&v * &w)) + &(&u * &w);
            push(&mut out, "uv + vw + uw - (a2 - 3a1)", &s + &beta);
            push(&mut out, "u^3 - beta u", &u.pow(3) - &(&beta * &u));
            push(&mut out, "u^2 v + u v^2", &(&(&u * &u) * &v) + &(&u * &(&v * &v)));
            push(&mut out, "uvw", &(&u * &v) * &w);
        }
        SuiteId::D3Idempotents => {
            let es = [d(Derived::E(1))?, d(Derived::E(2))?, d(Derived::E(3))?];
            for (i, e) in es.iter().enumerate() {
                let n = i + 1;
                push(&mut out, format!("e{n}^2 - e{n}"), &(e * e) - e);
                push(&mut out, format!("e{n} - factored e{n}"), e - &d(Derived::EFactored(n as u8))?);
                for (name, x) in [("a", &a), ("b", &b), ("c", &c)] {
                    push(&mut out, format!("[e{n},{name}]"), e.commutator(x));
                }
                for (j, other) in es.iter().enumerate().filter(|(j, _)| *j != i) {
                    push(&mut out, format!("e{n} e{}", j + 1), e * other);
                }
            }
            push(&mut out, "e1 + e2 + e3 - 1", &sum3(&es) - &NcPoly::one(f));
            let action = group_action(ModelKind::D3, f)?;
            push(&mut out, "e1 - (12)e2", &es[0] - &action[0].1.apply(&es[1]));
            push(&mut out, "e3 - (23)e2", &es[2] - &action[1].1.apply(&es[1]));
        }
        SuiteId::D3CornerClifford => {
            let e3 = d(Derived::E(3))?;
            let ea = &e3 * &a;
            let ec = &e3 * &c;
            let a1e = &k(&p.alpha1) * &e3;
            push(&mut out, "(e3a)^2 - a1 e3", &(&ea * &ea) - &a1e);
            push(&mut out, "(e3c)^2 - a1 e3", &(&ec * &ec) - &a1e);
            let anti = &(&ec * &ea) + &(&ea * &ec);
            push(&mut out, "e3c e3a + e3a e3c - (a2-a1) e3", &anti - &(&k(&f.sub(&p.alpha2, &p.alpha1)) * &e3));
            let diff = &ea - &ec;
            push(&mut out, "(e3a - e3c)^2 - beta e3", &(&diff * &diff) - &(&k(&p.beta) * &e3));
            push(&mut out, "e3(a-b)", &e3 * &(&a - &b));
        }
        SuiteId::D3Preprojective => {
            let s = p.sqrt_alpha1()?;
            let half = f.inv(&f.from_i64(2))?;
            let e3 = d(Derived::E(3))?;
            let fi = (&e3 + &(&e3 * &a).scale(&f.inv(&s)?)).scale(&half);
            let fj = &e3 - &fi;
            let r = &e3 * &(&a + &c);
            let alpha = &(&fi * &r) * &fj;
            let alpha_star = &(&fj * &r) * &fi;
            let base = [
                ("r^2", &r * &r),
                ("alpha alpha*", &alpha * &alpha_star),
                ("alpha* alpha", &alpha_star * &alpha),
            ];
            let action = group_action(ModelKind::D3, f)?;
            let (t12, t23) = (&action[0].1, &action[1].1);
            for (label, poly) in &base {
                push(&mut out, format!("e3: {label}"), poly.clone());
            }
            for (label, poly) in &base {
                push(&mut out, format!("e2: {label}"), t23.apply(poly));
            }
            for (label, poly) in &base {
                push(&mut out, format!("e1: {label}"), t12.apply(&t23.apply(poly)));
            }
        }
        SuiteId::D3Coinvariant => {
            let fs = [d(Derived::F(1))?, d(Derived::F(2))?];
            let (u, v) = (d(Derived::U)?, d(Derived::V)?);
            let w = -&(&u + &v);
            let piece = |x: &NcPoly, i: usize, j: usize| &(&fs[i] * x) * &fs[j];
            for (i, j) in [(0, 1), (1, 0)] {
                let (uij, vij, wij) = (piece(&u, i, j), piece(&v, i, j), piece(&w, i, j));
                let (uji, vji, wji) = (piece(&u, j, i), piece(&v, j, i), piece(&w, j, i));
                let tag = format!("{}{}", i + 1, j + 1);
                push(&mut out, format!("u{tag} v{tag}' - v{tag} u{tag}'"), &(&uij * &vji) - &(&vij * &uji));
                let s = &(&(&uij * &vji) + &(&vij * &wji)) + &(&uij * &wji);
                push(&mut out, format!("u{tag} v{tag}' + v{tag} w{tag}' + u{tag} w{tag}'"), s);
                push(&mut out, format!("u{tag} v{tag}' w{tag}"), &(&uij * &vji) * &wij);
            }
        }
        SuiteId::KYCommutation => {
            let y = gen(3);
            push(&mut out, "ya - cy", &(&y * &a) - &(&c * &y));
            push(&mut out, "yb - ay", &(&y * &b) - &(&a * &y));
            push(&mut out, "yc - by", &(&y * &c) - &(&b * &y));
        }
        SuiteId::KVplusVminus => {
            let y = gen(3);
            let zeta = p.zeta()?.clone();
            let z2 = f.mul(&zeta, &zeta);
            let (t, vp, vm) = (d(Derived::T)?, d(Derived::VPlus)?, d(Derived::VMinus)?);
            let beta = k(&p.beta);
            push(&mut out, "y v+ - z v+ y", &(&y * &vp) - &(&vp * &y).scale(&zeta));
            push(&mut out, "y v- - z^2 v- y", &(&y * &vm) - &(&vm * &y).scale(&z2));
            push(&mut out, "v+ v- - (beta + z y)", &(&(&vp * &vm) - &beta) - &y.scale(&zeta));
            push(&mut out, "v- v+ - (beta + z^2 y)", &(&(&vm * &vp) - &beta) - &y.scale(&z2));
            push(&mut out, "t v+ + v+ t + v-^2", &(&(&t * &vp) + &(&vp * &t)) + &(&vm * &vm));
            push(&mut out, "t v- + v- t + v+^2", &(&(&t * &vm) + &(&vm * &t)) + &(&vp * &vp));
            let shift = f.add(&f.mul(&f.from_i64(3), &p.alpha1), &f.mul(&f.from_i64(2), &p.alpha2));
            push(&mut out, "t^2 - (y + 3a1 + 2a2)", &(&(&t * &t) - &y) - &k(&shift));
        }
        SuiteId::KCubes => {
            let y = gen(3);
            let (t, vp, vm) = (d(Derived::T)?, d(Derived::VPlus)?, d(Derived::VMinus)?);
            let beta = k(&p.beta);
            let bab = &(&b * &a) * &b;
            let aba = &(&a * &b) * &a;
            push(&mut out, "bab - aba - a2(b-a)", &(&bab - &aba) - &(&k(&p.alpha2) * &(&b - &a)));
            let ba = &b - &a;
            push(&mut out, "(b-a)^3 - beta(b-a)", &ba.pow(3) - &(&beta * &ba));
            let y3 = y.pow(3);
            for (name, x) in [("a", &a), ("b", &b), ("c", &c)] {
                push(&mut out, format!("[y^3,{name}]"), y3.commutator(x));
            }
            let vp3 = vp.pow(3);
            let b2 = f.mul(&p.beta, &p.beta);
            let rhs = &(&(&y * &y).scale_i64(2) - &(&beta * &y).scale_i64(2)) - &k(&b2);
            push(&mut out, "t v+^3 + v+^3 t - (2y^2 - 2 beta y - beta^2)", &(&(&t * &vp3) + &(&vp3 * &t)) - &rhs);
            push(&mut out, "v+^6 - (y^3 + beta^3)", &(&vp.pow(6) - &y3) - &k(&f.pow(&p.beta, 3)));
            push(&mut out, "v+^3 - v-^3", &vp3 - &vm.pow(3));
        }
        SuiteId::TYTwist => {
            let y = y_expression(p);
            let action = group_action(ModelKind::T, f)?;
            let gd = &action[3].1;
            for (i, name) in ["a", "b", "c", "d"].iter().enumerate() {
                let x = gen(i);
                push(&mut out, format!("y{name} + (g_d {name}) y"), &(&y * &x) + &(&gd.apply(&x) * &y));
            }
        }
        SuiteId::TDAnticommutators => {
            let y = y_expression(p);
            let dd = gen(3);
            let (t, vp) = (d(Derived::T)?, d(Derived::VPlus)?);
            let vp3 = vp.pow(3);
            let b2 = f.mul(&p.beta, &p.beta);
            push(&mut out, "d^2 - a1", &(&dd * &dd) - &k(&p.alpha1));
            let two_a2 = f.mul(&f.from_i64(2), &p.alpha2);
            push(&mut out, "dt + td - 2a2 + y", &(&(&(&dd * &t) + &(&t * &dd)) - &k(&two_a2)) + &y);
            let rhs = &(&y * &y).scale_i64(2) + &k(&b2);
            push(&mut out, "d v+^3 + v+^3 d - (2y^2 + beta^2)", &(&(&dd * &vp3) + &(&vp3 * &dd)) - &rhs);
        }
        SuiteId::BDegreeSix => {
            let cb = &c * &b;
            let ba = &b * &a;
            let ac = &a * &c;
            let cba = &cb * &a;
            let bac = &ba * &c;
            let acb = &ac * &b;
            let lhs = (&(&cb + &ba) + &ac).pow(3);
            let rhs = &(&(&cba * &cba) + &(&bac * &bac)) + &(&acb * &acb);
            push(&mut out, "(cba)^2 + (bac)^2 + (acb)^2", rhs.clone());
            push(&mut out, "(cb+ba+ac)^3", lhs.clone());
            push(&mut out, "(cb+ba+ac)^3 - ((cba)^2 + (bac)^2 + (acb)^2)", &lhs - &rhs);
            push(&mut out, "(cb)^2", &cb * &cb);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::gbasis::{complete, DEFAULT_DEGREE_BOUND, DEFAULT_MAX_RULES};
    use crate::models::presentation;

    const F: FieldSpec = FieldSpec::Prime(10009);

    fn failures(id: SuiteId, p: &ModelParams) -> Vec<String> {
        let pres = presentation(id.model(), p, None).unwrap();
        let rs = complete(&pres, DEFAULT_DEGREE_BOUND, DEFAULT_MAX_RULES).unwrap();
        relation_suite(id, p)
            .unwrap()
            .into_iter()
            .filter(|(_, r)| !rs.contains(r))
            .map(|(l, _)| l)
            .collect()
    }

    #[test]
    fn names_round_trip() {
        for id in SUITES {
            assert_eq!(id.name().parse::<SuiteId>().unwrap(), id);
        }
        assert!("lem".parse::<SuiteId>().is_err());
    }

    #[test]
    fn d3_suites_hold() {
        let generic = ModelParams::from_i64(F, 2, 5, None);
        for id in [SuiteId::D3Uvw, SuiteId::D3Idempotents, SuiteId::D3CornerClifford] {
            assert!(failures(id, &generic).is_empty(), "{id}: {:?}", failures(id, &generic));
        }
        let pre = ModelParams::from_i64(F, 1, -1, None);
        assert!(failures(SuiteId::D3Preprojective, &pre).is_empty());
        let co = ModelParams::from_i64(F, 1, 3, None);
        assert!(failures(SuiteId::D3Coinvariant, &co).is_empty());
    }

    #[test]
    fn k_suites_hold() {
        let p = ModelParams::from_i64(F, 2, 5, None);
        for id in [SuiteId::KYCommutation, SuiteId::KVplusVminus, SuiteId::KCubes] {
            assert!(failures(id, &p).is_empty(), "{id}: {:?}", failures(id, &p));
        }
    }
}
