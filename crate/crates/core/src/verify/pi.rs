use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use serde_json::json;

use crate::field::FieldSpec;
use crate::structure::{AlgebraTable, Element};

use super::{CheckConfig, Details, Report, Status, SCHEMA_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `[[x, y]², z]`
    Hall,
}

impl Identity {
    pub fn name(&self) -> &'static str {
        match self {
            Identity::Hall => "hall",
        }
    }

    /// Total degree in the coordinates of a trial.
    pub fn degree(&self) -> u64 {
        match self {
            Identity::Hall => 5,
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            Identity::Hall => 3,
        }
    }

    pub fn eval(&self, t: &AlgebraTable, args: &[Element]) -> Element {
        match self {
            Identity::Hall => hall(t, &args[0], &args[1], &args[2]),
        }
    }
}

pub fn hall(t: &AlgebraTable, x: &Element, y: &Element, z: &Element) -> Element {
    let c = t.commutator(x, y);
    t.commutator(&t.mul(&c, &c), z)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiOutcome {
    pub trials: usize,
    pub failures: usize,
    pub first_failure: Option<usize>,
}

impl PiOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn random_element<R: Rng + ?Sized>(t: &AlgebraTable, rng: &mut R) -> Element {
    let f = t.field();
    Element::new((0..t.dim()).map(|_| f.random(rng)).collect())
}

/// Evaluates the identity at `trials` random tuples.
pub fn pi_trials<R: Rng + ?Sized>(t: &AlgebraTable, identity: Identity, trials: usize, rng: &mut R) -> PiOutcome {
    let mut failures = 0;
    let mut first_failure = None;
    for k in 0..trials {
        let args: Vec<Element> = (0..identity.arity()).map(|_| random_element(t, rng)).collect();
        if !t.is_zero(&identity.eval(t, &args)) {
            failures += 1;
            first_failure.get_or_insert(k);
        }
    }
    PiOutcome {
        trials,
        failures,
        first_failure,
    }
}

/// `(d/N)^trials` with `N` the size of the sampling set, as an exact
/// fraction.
pub fn error_bound(field: FieldSpec, identity: Identity, trials: usize) -> BigRational {
    let base = BigRational::new(BigInt::from(identity.degree()), BigInt::from(field.sample_set_size()));
    num_traits::pow(base, trials)
}

pub fn pi_test(table: &AlgebraTable, identity: Identity, cfg: &CheckConfig) -> Report {
    let mut rng = cfg.rng(identity.name(), 0);
    let outcome = pi_trials(table, identity, cfg.trials, &mut rng);
    let mut details = Details::new();
    details.insert("identity".into(), json!(identity.name()));
    details.insert("trials".into(), json!(outcome.trials));
    details.insert("failures".into(), json!(outcome.failures));
    details.insert("dimension".into(), json!(table.dim()));
    if let Some(k) = outcome.first_failure {
        details.insert("first_failure".into(), json!(k));
    }
    Report {
        schema_version: SCHEMA_VERSION,
        check_id: format!("pi-{}", identity.name()),
        status: if outcome.passed() { Status::Pass } else { Status::Fail },
        field: cfg.field.to_string(),
        seed: cfg.seed,
        reason: None,
        details,
        error_bound: Some(error_bound(cfg.field, identity, cfg.trials).to_string()),
        points: Vec::new(),
        skipped: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{Alphabet, NcPoly, Word};
    use crate::gbasis::{complete, Presentation};
    use crate::structure::Quotient;

    const F: FieldSpec = FieldSpec::Prime(10009);

    fn truncated_free(letters: &str, degree: usize) -> Quotient {
        let alphabet = Alphabet::from_chars(letters);
        let n = alphabet.len() as u8;
        let mut words = vec![Word::empty()];
        for _ in 0..=degree {
            words = words
                .iter()
                .flat_map(|w| (0..n).map(move |l| {
                    let mut x = w.clone();
                    x.push(l);
                    x
                }))
                .collect();
        }
        let rels = words.into_iter().map(|w| NcPoly::monomial(F, w)).collect();
        let p = Presentation::new("truncated", alphabet, F, rels).unwrap();
        Quotient::new(complete(&p, degree + 2, 10_000).unwrap()).unwrap()
    }

    #[test]
    fn hall_fails_in_truncated_free_algebra() {
        let q = truncated_free("abc", 5);
        assert_eq!(q.dim(), 1 + 3 + 9 + 27 + 81 + 243);
        let g = |i| q.element(&NcPoly::generator(F, i));
        let (a, b, c) = (g(0), g(1), g(2));
        assert!(!q.table.is_zero(&hall(&q.table, &a, &b, &c)));
        assert!(q.table.is_zero(&hall(&q.table, &a, &a, &c)));
        let cfg = CheckConfig { trials: 3, ..CheckConfig::default() };
        let r = pi_test(&q.table, Identity::Hall, &cfg);
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn hall_holds_in_commutative_algebra() {
        let x = NcPoly::generator(F, 0);
        let p = Presentation::new("k[x]/x^3", Alphabet::from_chars("x"), F, vec![x.pow(3)]).unwrap();
        let q = Quotient::new(complete(&p, 6, 10).unwrap()).unwrap();
        let cfg = CheckConfig { trials: 10, ..CheckConfig::default() };
        let r = pi_test(&q.table, Identity::Hall, &cfg);
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.error_bound.as_deref(), Some(error_bound(F, Identity::Hall, 10).to_string().as_str()));
        assert_eq!(r, pi_test(&q.table, Identity::Hall, &cfg));
        assert!(r.error_bound.unwrap().starts_with("9765625/"));
    }

    #[test]
    fn bound_is_exact() {
        let b = error_bound(F, Identity::Hall, 2);
        assert_eq!(b, BigRational::new(25.into(), (10009u64 * 10009).into()));
    }
}
