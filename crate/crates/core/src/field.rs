//! Exact scalar arithmetic over prime fields and the rationals.
//!
//! A [`FieldSpec`] is a small `Copy` context; [`Scalar`] values only make
//! sense relative to the field that produced them. Prime-field scalars are
//! canonical residues in `[0, p)`, rationals are reduced fractions with a
//! positive denominator (guaranteed by `num-rational`).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Default prime: `10009 ≡ 1 (mod 3)` and larger than every algebra
/// dimension handled by the trace-form radical criterion.
pub const DEFAULT_PRIME: u64 = 10009;

/// Half-width of the integer box rational samples are drawn from.
const RATIONAL_SAMPLE_RADIUS: i64 = 1 << 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Mod(u64),
    Rat(BigRational),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
    Inv,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
            FieldSpec::Rationals => write!(f, "qq"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("qq") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix("fp:")
            .ok_or_else(|| Error::InvalidField(format!("expected fp:<prime> or qq, got {s:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad prime {digits:?}")))?;
        FieldSpec::prime(p)
    }
}

impl FieldSpec {
    /// Prime field `F_p`; requires `p` prime and `p >= 5`.
    pub fn prime(p: u64) -> Result<Self> {
        if p < 5 {
            return Err(Error::InvalidField(format!(
                "characteristic {p} not allowed (need 0 or a prime >= 5)"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Prime(_) => Scalar::Mod(0),
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Prime(_) => Scalar::Mod(1),
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Mod((n as i128).rem_euclid(*p as i128) as u64),
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Prime(p) => {
                let m = BigInt::from(*p);
                let r = ((n % &m) + &m) % &m;
                Scalar::Mod(r.to_u64().expect("residue fits in u64"))
            }
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
        }
    }

    /// `num / den` in this field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        self.div(&self.from_i64(num), &d)
    }

    pub fn from_big_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        self.div(&self.from_bigint(num), &d)
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Mod(v) => *v == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Mod(v) => *v == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (self, x, y) {
            (FieldSpec::Prime(p), Scalar::Mod(a), Scalar::Mod(b)) => {
                let s = a + b;
                Scalar::Mod(if s >= *p { s - p } else { s })
            }
            (FieldSpec::Rationals, Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => mixed(self, x, y),
        }
    }

    pub fn sub(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &Scalar) -> Scalar {
        match (self, x) {
            (FieldSpec::Prime(p), Scalar::Mod(a)) => Scalar::Mod(if *a == 0 { 0 } else { p - a }),
            (FieldSpec::Rationals, Scalar::Rat(a)) => Scalar::Rat(-a),
            _ => mixed(self, x, x),
        }
    }

    pub fn mul(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (self, x, y) {
            (FieldSpec::Prime(p), Scalar::Mod(a), Scalar::Mod(b)) => Scalar::Mod(mulmod(*a, *b, *p)),
            (FieldSpec::Rationals, Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => mixed(self, x, y),
        }
    }

    pub fn inv(&self, x: &Scalar) -> Result<Scalar> {
        if self.is_zero(x) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, x) {
            (FieldSpec::Prime(p), Scalar::Mod(a)) => Scalar::Mod(powmod(*a, p - 2, *p)),
            (FieldSpec::Rationals, Scalar::Rat(a)) => Scalar::Rat(a.recip()),
            _ => mixed(self, x, x),
        })
    }

    pub fn div(&self, x: &Scalar, y: &Scalar) -> Result<Scalar> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    pub fn pow(&self, x: &Scalar, mut e: u64) -> Scalar {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Integer power allowing negative exponents.
    pub fn powi(&self, x: &Scalar, e: i64) -> Result<Scalar> {
        if e >= 0 {
            Ok(self.pow(x, e as u64))
        } else {
            Ok(self.pow(&self.inv(x)?, e.unsigned_abs()))
        }
    }

    /// Dispatch form of the four basic operations; `y` is only read by the
    /// binary ones.
    pub fn scalar_arithmetic(&self, op: ArithOp, x: &Scalar, y: Option<&Scalar>) -> Result<Scalar> {
        let rhs = || {
            y.ok_or_else(|| Error::ParameterDomain("binary operation needs two operands".into()))
        };
        match op {
            ArithOp::Add => Ok(self.add(x, rhs()?)),
            ArithOp::Mul => Ok(self.mul(x, rhs()?)),
            ArithOp::Neg => Ok(self.neg(x)),
            ArithOp::Inv => self.inv(x),
        }
    }

    /// Smallest residue `ζ` with `ζ² + ζ + 1 = 0`.
    pub fn primitive_cube_root(&self) -> Result<Scalar> {
        let p = match self {
            FieldSpec::Prime(p) if p % 3 == 1 => *p,
            _ => return Err(Error::NoCubeRoot(self.name())),
        };
        let e = (p - 1) / 3;
        let mut g = 2;
        loop {
            let z = powmod(g, e, p);
            if z != 1 {
                let z2 = mulmod(z, z, p);
                return Ok(Scalar::Mod(z.min(z2)));
            }
            g += 1;
        }
    }

    /// Square root with the smaller canonical representative, or `None` for
    /// non-squares.
    pub fn square_root(&self, s: &Scalar) -> Option<Scalar> {
        match (self, s) {
            (FieldSpec::Prime(p), Scalar::Mod(a)) => {
                let r = sqrt_mod(*a, *p)?;
                Some(Scalar::Mod(r.min((p - r) % p)))
            }
            (FieldSpec::Rationals, Scalar::Rat(q)) => {
                if q.is_negative() {
                    return None;
                }
                let n = exact_root(q.numer(), 2)?;
                let d = exact_root(q.denom(), 2)?;
                Some(Scalar::Rat(BigRational::new(n, d)))
            }
            _ => None,
        }
    }

    /// Cube root with the smallest canonical representative, or `None`.
    pub fn cube_root(&self, s: &Scalar) -> Option<Scalar> {
        match (self, s) {
            (FieldSpec::Prime(p), Scalar::Mod(a)) => cbrt_mod(*a, *p).map(Scalar::Mod),
            (FieldSpec::Rationals, Scalar::Rat(q)) => {
                let n = exact_root(&q.numer().abs(), 3)?;
                let d = exact_root(q.denom(), 3)?;
                let r = BigRational::new(n, d);
                Some(Scalar::Rat(if q.is_negative() { -r } else { r }))
            }
            _ => None,
        }
    }

    /// Uniform sample from the field (`F_p`) or from a fixed integer box (`ℚ`).
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Mod(rng.gen_range(0..*p)),
            FieldSpec::Rationals => {
                self.from_i64(rng.gen_range(-RATIONAL_SAMPLE_RADIUS..RATIONAL_SAMPLE_RADIUS))
            }
        }
    }

    /// Size of the set [`FieldSpec::random`] samples from.
    pub fn sample_set_size(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 2 * RATIONAL_SAMPLE_RADIUS as u64,
        }
    }

    /// Field elements in canonical order: `0, 1, 2, …` for `F_p`,
    /// `0, 1, -1, 2, -2, …` for `ℚ`. `None` past the end of a finite field.
    pub fn nth_element(&self, n: u64) -> Option<Scalar> {
        match self {
            FieldSpec::Prime(p) => (n < *p).then_some(Scalar::Mod(n)),
            FieldSpec::Rationals => {
                let k = n.div_ceil(2) as i64;
                Some(self.from_i64(if n % 2 == 1 { k } else { -k }))
            }
        }
    }

    /// Human-readable form; prime-field residues above `p/2` print as
    /// negatives.
    pub fn format(&self, x: &Scalar) -> String {
        match (self, x) {
            (FieldSpec::Prime(p), Scalar::Mod(a)) => {
                if *a > p / 2 {
                    format!("-{}", p - a)
                } else {
                    a.to_string()
                }
            }
            (_, Scalar::Rat(r)) => r.to_string(),
            (_, Scalar::Mod(a)) => a.to_string(),
        }
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        match (self, x) {
            (FieldSpec::Prime(p), Scalar::Mod(a)) => a < p,
            (FieldSpec::Rationals, Scalar::Rat(_)) => true,
            _ => false,
        }
    }
}

#[cold]
fn mixed(field: &FieldSpec, x: &Scalar, y: &Scalar) -> Scalar {
    panic!("scalar {x:?} / {y:?} does not belong to field {field}")
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % small == 0 {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Tonelli–Shanks.
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if powmod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(powmod(a, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while powmod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = powmod(z, q, p);
    let mut t = powmod(a, q, p);
    let mut r = powmod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mulmod(t2, t2, p);
            i += 1;
        }
        let b = powmod(c, 1 << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    Some(r)
}

/// Cube root modulo `p`, smallest of the (one or three) roots.
fn cbrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p % 3 == 2 {
        // cubing is a bijection; inverse exponent is (2p - 1) / 3
        return Some(powmod(a, (2 * p - 1) / 3, p));
    }
    if powmod(a, (p - 1) / 3, p) != 1 {
        return None;
    }
    // p - 1 = 3^s * t with 3 ∤ t
    let mut t = p - 1;
    let mut s = 0u32;
    while t % 3 == 0 {
        t /= 3;
        s += 1;
    }
    // x0 = a^k with 3k ≡ 1 (mod t); x0³ = a · a^(jt) and a^(jt) lies in the
    // Sylow 3-subgroup, where the remaining correction is a discrete log.
    let k = if t == 1 { 0 } else { inv_mod_small(3, t) };
    let x0 = powmod(a, k, p);
    let x0_cubed = mulmod(mulmod(x0, x0, p), x0, p);
    let err = mulmod(x0_cubed, powmod(a, p - 2, p), p);
    let mut c = 2;
    while powmod(c, (p - 1) / 3, p) == 1 {
        c += 1;
    }
    let g = powmod(c, t, p);
    let order = 3u64.pow(s);
    let log = dlog_3group(err, g, s, p)?;
    debug_assert!(log % 3 == 0);
    let correction = powmod(g, (order - log / 3) % order, p);
    let x = mulmod(x0, correction, p);
    debug_assert_eq!(mulmod(mulmod(x, x, p), x, p), a);
    let zeta = powmod(g, order / 3, p);
    let x1 = mulmod(x, zeta, p);
    let x2 = mulmod(x1, zeta, p);
    Some(x.min(x1).min(x2))
}

fn inv_mod_small(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

/// Discrete log of `h` to base `g`, where `g` has order `3^s`
/// (Pohlig–Hellman digit by digit).
fn dlog_3group(h: u64, g: u64, s: u32, p: u64) -> Option<u64> {
    let order = 3u64.pow(s);
    let gamma = powmod(g, order / 3, p);
    let g_inv = powmod(g, p - 2, p);
    let mut x = 0u64;
    for k in 0..s {
        let hk = mulmod(powmod(g_inv, x, p), h, p);
        let probe = powmod(hk, 3u64.pow(s - 1 - k), p);
        let digit = (0..3).find(|d| powmod(gamma, *d, p) == probe)?;
        x += digit * 3u64.pow(k);
    }
    Some(x)
}

fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f() -> FieldSpec {
        FieldSpec::default()
    }

    #[test]
    fn additive_and_multiplicative_inverses() {
        let f = f();
        assert!(f.is_zero(&f.add(&f.from_i64(3), &f.from_i64(-3))));
        let seven = f.from_i64(7);
        assert!(f.is_one(&f.mul(&f.inv(&seven).unwrap(), &seven)));
        assert!(matches!(f.inv(&f.zero()), Err(Error::DivisionByZero)));
        assert!(matches!(
            f.scalar_arithmetic(ArithOp::Inv, &f.zero(), None),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn cube_root_of_unity_small_prime() {
        // residues z with z² + z + 1 ≡ 0 (mod 7), by enumeration
        let roots: Vec<u64> = (0..7).filter(|z| (z * z + z + 1) % 7 == 0).collect();
        assert_eq!(roots, vec![2, 4]);
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.primitive_cube_root().unwrap(), Scalar::Mod(roots[0]));
    }

    #[test]
    fn cube_root_of_unity_default_prime() {
        let f = f();
        let z = f.primitive_cube_root().unwrap();
        let val = f.add(&f.add(&f.mul(&z, &z), &z), &f.one());
        assert!(f.is_zero(&val));
        assert!(!f.is_one(&z));
    }

    #[test]
    fn cube_root_of_unity_rejected() {
        assert!(FieldSpec::prime(5).unwrap().primitive_cube_root().is_err());
        assert!(FieldSpec::Rationals.primitive_cube_root().is_err());
    }

    #[test]
    fn square_roots() {
        let f = f();
        assert_eq!(f.square_root(&f.from_i64(4)), Some(f.from_i64(2)));
        assert_eq!(f.square_root(&f.zero()), Some(f.zero()));
        // quadratic residues mod 7 by enumeration: {0, 1, 2, 4}
        let residues: Vec<u64> = (0..7u64).map(|x| x * x % 7).collect();
        assert!(!residues.contains(&3));
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.square_root(&f7.from_i64(3)), None);
        let q = FieldSpec::Rationals;
        assert_eq!(q.square_root(&q.from_ratio(9, 4).unwrap()), Some(q.from_ratio(3, 2).unwrap()));
        assert_eq!(q.square_root(&q.from_i64(2)), None);
    }

    #[test]
    fn cube_roots_match_enumeration() {
        for p in [7u64, 13, 19, 37, 10009] {
            let f = FieldSpec::prime(p).unwrap();
            for a in 0..p.min(400) {
                let brute = (0..p).find(|x| x * x % p * x % p == a);
                assert_eq!(f.cube_root(&Scalar::Mod(a)), brute.map(Scalar::Mod), "p={p} a={a}");
            }
        }
        let f11 = FieldSpec::prime(11).unwrap();
        for a in 0..11 {
            let r = f11.cube_root(&Scalar::Mod(a)).unwrap();
            assert_eq!(f11.pow(&r, 3), Scalar::Mod(a));
        }
        let q = FieldSpec::Rationals;
        assert_eq!(q.cube_root(&q.from_ratio(-27, 8).unwrap()), Some(q.from_ratio(-3, 2).unwrap()));
    }

    #[test]
    fn field_parsing() {
        assert_eq!("fp:10009".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(10009));
        assert_eq!("qq".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert!("fp:9".parse::<FieldSpec>().is_err());
        assert!("fp:3".parse::<FieldSpec>().is_err());
        assert!("gf".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn canonical_enumeration() {
        let q = FieldSpec::Rationals;
        let first: Vec<String> = (0..5).map(|n| q.format(&q.nth_element(n).unwrap())).collect();
        assert_eq!(first, ["0", "1", "-1", "2", "-2"]);
        assert_eq!(FieldSpec::prime(7).unwrap().nth_element(7), None);
    }

    fn arb_fp() -> impl Strategy<Value = Scalar> {
        (0..DEFAULT_PRIME).prop_map(Scalar::Mod)
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_fp(), y in arb_fp(), z in arb_fp()) {
            let f = f();
            prop_assert_eq!(f.add(&f.add(&x, &y), &z), f.add(&x, &f.add(&y, &z)));
            prop_assert_eq!(
                f.mul(&x, &f.add(&y, &z)),
                f.add(&f.mul(&x, &y), &f.mul(&x, &z))
            );
            if !f.is_zero(&x) {
                prop_assert!(f.is_one(&f.mul(&x, &f.inv(&x).unwrap())));
            }
        }

        #[test]
        fn square_root_squares_back(x in arb_fp()) {
            let f = f();
            if let Some(r) = f.square_root(&x) {
                prop_assert_eq!(f.mul(&r, &r), x);
            }
        }

        #[test]
        fn rational_axioms(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let q = FieldSpec::Rationals;
            let x = q.from_ratio(a, b).unwrap();
            let y = q.from_ratio(c, d).unwrap();
            prop_assert_eq!(q.sub(&q.add(&x, &y), &y), x.clone());
            if !q.is_zero(&y) {
                prop_assert_eq!(q.div(&q.mul(&x, &y), &y).unwrap(), x);
            }
        }
    }
}
