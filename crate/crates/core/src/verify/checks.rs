use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::freealg::{NcPoly, Word};
use crate::gbasis::{complete, Presentation, RewriteSystem};
use crate::models::{
    derived_element, group_action, ore_data, presentation, quadratic_form, relation_suite, rho_matrices,
    y_expression, Derived, ModelKind, ModelParams, QuadraticFormKind, SuiteId,
};
use crate::structure::{AlgebraTable, Element, Quotient, Subspace};

use super::pi::{error_bound, pi_trials, Identity};
use super::{expand_alpha3, CheckConfig, Details, GridPoint, PointReport, Report, Status, SCHEMA_VERSION};

const CAVEAT: &str = "pointwise verification over F_p; results over an algebraically closed field are not implied";

const E3_WORDS: [&str; 12] = ["1", "a", "b", "c", "ab", "ac", "ba", "bc", "aba", "abc", "bac", "abac"];
const B_HILBERT: [u64; 10] = [1, 4, 8, 11, 12, 12, 11, 8, 4, 1];
const WITNESS_SEARCH_LIMIT: u64 = 64;

type OnceFn = fn(&Ctx) -> Result<Outcome>;
type PointFn = fn(&Ctx, &GridPoint, usize) -> Result<Outcome>;
type DefaultsFn = fn(&Ctx) -> Vec<GridPoint>;

#[derive(Clone, Copy)]
enum Kind {
    Once(OnceFn),
    PerPoint {
        defaults: DefaultsFn,
        needs_alpha3: bool,
        run: PointFn,
    },
}

/// A registered check.
#[derive(Clone, Copy)]
pub struct CheckSpec {
    pub id: &'static str,
    pub summary: &'static str,
    kind: Kind,
}

impl CheckSpec {
    /// Whether `scan` iterates the configured grid.
    pub fn is_scannable(&self) -> bool {
        matches!(self.kind, Kind::PerPoint { .. })
    }
}

macro_rules! per_point {
    ($id:literal, $summary:literal, $defaults:expr, $alpha3:literal, $run:expr) => {
        CheckSpec {
            id: $id,
            summary: $summary,
            kind: Kind::PerPoint {
                defaults: $defaults,
                needs_alpha3: $alpha3,
                run: $run,
            },
        }
    };
}

pub const CHECKS: &[CheckSpec] = &[
    CheckSpec {
        id: "e3-basis",
        summary: "normal words and Hilbert series of E3",
        kind: Kind::Once(e3_basis),
    },
    per_point!("d3-groebner", "exact Groebner basis of D3", sample_five, false, d3_groebner),
    per_point!("d3-flatness", "dim D3 = 12 with the E3 normal words", whole_grid, false, d3_flatness),
    per_point!("d3-semisimple", "semisimplicity locus and center of D3", whole_grid, false, d3_semisimple),
    CheckSpec {
        id: "d3-degenerate",
        summary: "radicals of D3 at (1,3) and (1,-1)",
        kind: Kind::Once(d3_degenerate),
    },
    per_point!("d3-idempotents", "central orthogonal idempotents of D3", sample_five_beta, false, d3_idempotents),
    per_point!("d3-corner", "Clifford corner e3 D3 e3", sample_five_beta, false, d3_corner),
    per_point!("d3-hall", "Hall identity in D3", hall_points, false, d3_hall),
    CheckSpec {
        id: "d3-preprojective",
        summary: "preprojective relations in the corners at (1,-1)",
        kind: Kind::Once(d3_preprojective),
    },
    CheckSpec {
        id: "d3-coinvariant",
        summary: "coinvariant quiver relations at (1,3)",
        kind: Kind::Once(d3_coinvariant),
    },
    per_point!("k-relations", "relation suites of K", sample_five, false, k_relations),
    per_point!("k-basis", "dim K3 = 36 with its PBW basis", whole_grid, true, k_basis),
    per_point!("k-rho", "the 3x3 representation over C(V, q_gamma)", rho_points, true, k_rho),
    per_point!("k-peirce", "Peirce decomposition of K3", peirce_points, true, k_peirce),
    CheckSpec {
        id: "t-hilbert",
        summary: "dim B = 72, Hilbert series, degree-six forms",
        kind: Kind::Once(t_hilbert),
    },
    per_point!("t-flatness", "dim T = 72 with its PBW basis", whole_grid, true, t_flatness),
    per_point!("t-semisimple", "semisimplicity locus and center of T", whole_grid, true, t_semisimple),
    per_point!("ore-equivariance", "Ore datum and group actions", sample_five, false, ore_equivariance),
];

pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

pub fn find_check(id: &str) -> Result<&'static CheckSpec> {
    CHECKS.iter().find(|c| c.id == id).ok_or_else(|| Error::Unknown {
        kind: "check",
        name: id.into(),
    })
}

/// Runs a check on its own points (fixed parameters, a sample of the grid,
/// or the whole grid, depending on the check).
pub fn run_check(check_id: &str, cfg: &CheckConfig) -> Result<Report> {
    let spec = find_check(check_id)?;
    cfg.validate()?;
    let ctx = Ctx { cfg, id: spec.id };
    Ok(match spec.kind {
        Kind::Once(run) => once_report(&ctx, run),
        Kind::PerPoint { defaults, run, .. } => points_report(&ctx, &defaults(&ctx), run),
    })
}

/// Runs a check at every point of `cfg.grid`; checks that need `α₃`
/// expand each pair without one.
pub fn scan(check_id: &str, cfg: &CheckConfig) -> Result<Report> {
    let spec = find_check(check_id)?;
    cfg.validate()?;
    if cfg.grid.is_empty() {
        return Err(Error::ParameterDomain("scan requires a nonempty grid".into()));
    }
    let ctx = Ctx { cfg, id: spec.id };
    Ok(match spec.kind {
        Kind::Once(run) => once_report(&ctx, run),
        Kind::PerPoint { needs_alpha3, run, .. } => {
            let points = if needs_alpha3 {
                expand_alpha3(&cfg.grid, cfg.field, cfg.seed)
            } else {
                cfg.grid.clone()
            };
            points_report(&ctx, &points, run)
        }
    })
}

pub fn run_all(cfg: &CheckConfig) -> Result<Vec<Report>> {
    CHECKS.iter().map(|c| run_check(c.id, cfg)).collect()
}

struct Ctx<'a> {
    cfg: &'a CheckConfig,
    id: &'static str,
}

impl Ctx<'_> {
    fn field(&self) -> FieldSpec {
        self.cfg.field
    }

    fn complete(&self, p: &Presentation) -> Result<RewriteSystem> {
        complete(p, self.cfg.degree_bound, self.cfg.max_rules)
    }

    fn model(&self, kind: ModelKind, params: &ModelParams) -> Result<RewriteSystem> {
        self.complete(&presentation(kind, params, None)?)
    }

    fn quotient(&self, kind: ModelKind, params: &ModelParams) -> Result<Quotient> {
        Quotient::new(self.model(kind, params)?)
    }

    fn params(&self, a1: i64, a2: i64, a3: Option<i64>) -> ModelParams {
        ModelParams::from_i64(self.field(), a1, a2, a3)
    }

    fn base_report(&self) -> Report {
        let mut details = Details::new();
        if matches!(self.field(), FieldSpec::Prime(_)) {
            details.insert("caveat".into(), json!(CAVEAT));
        }
        Report {
            schema_version: SCHEMA_VERSION,
            check_id: self.id.into(),
            status: Status::Skipped,
            field: self.field().to_string(),
            seed: self.cfg.seed,
            reason: None,
            details,
            error_bound: None,
            points: Vec::new(),
            skipped: Vec::new(),
        }
    }
}

/// Evidence and assertion results for one evaluation of a check.
#[derive(Default)]
struct Outcome {
    details: Details,
    assertions: BTreeMap<String, bool>,
    skip: Option<String>,
    error_bound: Option<String>,
}

impl Outcome {
    fn skipped(reason: impl Into<String>) -> Self {
        Outcome {
            skip: Some(reason.into()),
            ..Outcome::default()
        }
    }

    fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details.insert(key.into(), json!(value));
    }

    fn assert(&mut self, label: impl Into<String>, ok: bool) -> bool {
        let label = label.into();
        let prev = self.assertions.get(&label).copied().unwrap_or(true);
        self.assertions.insert(label, prev && ok);
        ok
    }

    fn status(&self) -> Status {
        if self.skip.is_some() {
            Status::Skipped
        } else if self.assertions.values().all(|&ok| ok) {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn into_parts(mut self) -> (Status, Option<String>, Details) {
        let status = self.status();
        if !self.assertions.is_empty() {
            self.details.insert("assertions".into(), json!(self.assertions));
        }
        let reason = match status {
            Status::Fail => Some(format!(
                "failed: {}",
                self.assertions
                    .iter()
                    .filter(|(_, &ok)| !ok)
                    .map(|(l, _)| l.as_str())
                    .collect::<Vec<_>>()
                    .join(", ")
            )),
            _ => self.skip,
        };
        (status, reason, self.details)
    }
}

/// Parameter-domain failures (missing roots, vanishing denominators) skip
/// a point; everything else is an error.
fn settle(result: Result<Outcome>) -> (Status, Option<String>, Details, Option<String>) {
    match result {
        Ok(o) => {
            let bound = o.error_bound.clone();
            let (s, r, d) = o.into_parts();
            (s, r, d, bound)
        }
        Err(e @ (Error::ParameterDomain(_) | Error::NoCubeRoot(_) | Error::NotInvertible)) => {
            (Status::Skipped, Some(e.to_string()), Details::new(), None)
        }
        Err(e) => (Status::Error, Some(e.to_string()), Details::new(), None),
    }
}

fn once_report(ctx: &Ctx, run: OnceFn) -> Report {
    let mut report = ctx.base_report();
    let (status, reason, details, bound) = settle(run(ctx));
    report.status = status;
    report.reason = reason;
    report.details.extend(details);
    report.error_bound = bound;
    report
}

fn points_report(ctx: &Ctx, points: &[GridPoint], run: PointFn) -> Report {
    let f = ctx.field();
    let results: Vec<(PointReport, Option<String>)> = points
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let (status, reason, details, bound) = settle(run(ctx, p, i));
            (
                PointReport {
                    params: p.label(f),
                    status,
                    reason,
                    details,
                },
                bound,
            )
        })
        .collect();
    let mut report = ctx.base_report();
    report.error_bound = results.iter().find_map(|(_, b)| b.clone());
    report.points = results.into_iter().map(|(p, _)| p).collect();
    report.status = Status::combine(report.points.iter().map(|p| p.status));
    report.skipped = report
        .points
        .iter()
        .filter(|p| p.status == Status::Skipped)
        .map(|p| format!("{}: {}", p.params, p.reason.as_deref().unwrap_or("skipped")))
        .collect();
    report
        .details
        .insert("points".into(), json!(report.points.len()));
    report
}

// ---- point selection -------------------------------------------------------

fn whole_grid(ctx: &Ctx) -> Vec<GridPoint> {
    let (needs_alpha3, f) = (find_check(ctx.id).map(|c| c.kind), ctx.field());
    match needs_alpha3 {
        Ok(Kind::PerPoint { needs_alpha3: true, .. }) => expand_alpha3(&ctx.cfg.grid, f, ctx.cfg.seed),
        _ => ctx.cfg.grid.clone(),
    }
}

/// `n` grid points chosen by the seed, kept in grid order.
fn sample(ctx: &Ctx, pool: &[GridPoint], n: usize) -> Vec<GridPoint> {
    let mut rng = ctx.cfg.rng(ctx.id, u64::MAX);
    let mut idx: Vec<usize> = (0..pool.len()).collect::<Vec<_>>().choose_multiple(&mut rng, n).copied().collect();
    idx.sort_unstable();
    idx.into_iter().map(|i| pool[i].clone()).collect()
}

fn sample_five(ctx: &Ctx) -> Vec<GridPoint> {
    sample(ctx, &ctx.cfg.grid, 5)
}

fn sample_five_beta(ctx: &Ctx) -> Vec<GridPoint> {
    let f = ctx.field();
    let pool: Vec<GridPoint> = ctx
        .cfg
        .grid
        .iter()
        .filter(|p| !f.is_zero(&p.params(f).beta))
        .cloned()
        .collect();
    sample(ctx, &pool, 5)
}

/// Nine fixed points covering both degenerate lines and the origin, plus
/// one seeded random point.
fn hall_points(ctx: &Ctx) -> Vec<GridPoint> {
    let f = ctx.field();
    let mut pts: Vec<GridPoint> = [(0, 0), (1, 1), (1, 3), (1, -1), (2, 6), (2, -2), (-1, 2), (3, 1), (2, 5)]
        .iter()
        .map(|&(a1, a2)| GridPoint::from_i64(f, a1, a2, None))
        .collect();
    let mut rng = ctx.cfg.rng(ctx.id, 0);
    pts.push(GridPoint::new(f.random(&mut rng), f.random(&mut rng), None));
    pts
}

fn rho_points(ctx: &Ctx) -> Vec<GridPoint> {
    let f = ctx.field();
    let pool: Vec<GridPoint> = expand_alpha3(&ctx.cfg.grid, f, ctx.cfg.seed)
        .into_iter()
        .filter(|p| {
            let params = p.params(f);
            params.gamma.as_ref().is_some_and(|g| {
                !f.is_zero(&f.add(&f.pow(g, 3), &f.pow(&params.beta, 3)))
            })
        })
        .collect();
    sample(ctx, &pool, 10)
}

/// Generic, `α₃ + β³ = 0` (where `λ = 0` fails) and one more.
fn peirce_points(ctx: &Ctx) -> Vec<GridPoint> {
    let f = ctx.field();
    vec![
        GridPoint::from_i64(f, 1, 0, Some(1)),
        GridPoint::from_i64(f, 1, 1, Some(-8)),
        GridPoint::from_i64(f, 2, -1, Some(8)),
    ]
}

// ---- helpers ---------------------------------------------------------------

fn word_labels(rs: &RewriteSystem, words: &[Word]) -> Vec<String> {
    words.iter().map(|w| rs.alphabet().format_word(w)).collect()
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

/// Dimension of the span of `polys` in the quotient with normal-word basis
/// `words`.
fn rank_in(rs: &RewriteSystem, words: &[Word], polys: &[NcPoly]) -> usize {
    let f = rs.field();
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let vectors = polys.iter().map(|p| {
        let nf = rs.normal_form(p);
        let mut v = vec![f.zero(); words.len()];
        for (w, c) in nf.terms() {
            v[index[w]] = c.clone();
        }
        v
    });
    Subspace::span(f, words.len(), vectors).dim()
}

/// `(a−b)^n₁ a^n₂ c^n₃ y^n₄ d^n₅` (with `b−a` in place of `a−b` when
/// `flip`), `n₁, n₄ < 3`, `n₂, n₃ < 2` and `n₅ < d_max`.
fn pbw_monomials(p: &ModelParams, y: Option<&NcPoly>, d_max: u32, flip: bool) -> Vec<NcPoly> {
    let f = p.field;
    let g = |i| NcPoly::generator(f, i);
    let diff = if flip { &g(1) - &g(0) } else { &g(0) - &g(1) };
    let mut out = Vec::new();
    let y_range = if y.is_some() { 3 } else { 1 };
    for n1 in 0..3 {
        for n2 in 0..2 {
            for n3 in 0..2 {
                for n4 in 0..y_range {
                    for n5 in 0..d_max {
                        let mut m = &(&diff.pow(n1) * &g(0).pow(n2)) * &g(2).pow(n3);
                        if let Some(y) = y {
                            m = &m * &y.pow(n4);
                        }
                        m = &m * &g(3).pow(n5);
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

fn suite_failures(rs: &RewriteSystem, id: SuiteId, p: &ModelParams) -> Result<Vec<String>> {
    Ok(relation_suite(id, p)?
        .into_iter()
        .filter(|(_, r)| !rs.contains(r))
        .map(|(l, _)| l)
        .collect())
}

fn check_suite(o: &mut Outcome, rs: &RewriteSystem, id: SuiteId, p: &ModelParams) -> Result<()> {
    let failures = suite_failures(rs, id, p)?;
    o.assert(format!("suite {id} reduces to 0"), failures.is_empty());
    if !failures.is_empty() {
        o.detail(&format!("{id} failures"), failures);
    }
    Ok(())
}

fn scalar_json(f: FieldSpec, x: &Scalar) -> Value {
    json!(f.format(x))
}

// ---- D3 --------------------------------------------------------------------

fn e3_basis(ctx: &Ctx) -> Result<Outcome> {
    let mut o = Outcome::default();
    let rs = ctx.model(ModelKind::E3, &ModelParams::zero(ctx.field()))?;
    let words = word_labels(&rs, &rs.normal_words(None)?);
    let expected: Vec<String> = E3_WORDS.iter().map(|s| s.to_string()).collect();
    o.assert("normal words match the E3 list", sorted(words.clone()) == sorted(expected));
    let hilbert = rs.hilbert_series(6)?;
    // (1+t)²(1+t+t²)
    let product = poly_mul(&poly_mul(&[1, 1], &[1, 1]), &[1, 1, 1]);
    let mut expanded = product.clone();
    expanded.resize(7, 0);
    o.assert("Hilbert series equals (1+t)^2(1+t+t^2)", hilbert == expanded);
    o.assert("Hilbert coefficients [1,3,4,3,1]", hilbert[..5] == [1, 3, 4, 3, 1]);
    o.detail("normal_words", words);
    o.detail("hilbert", hilbert);
    o.detail("dimension", rs.dimension()?);
    Ok(o)
}

fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn d3_groebner(ctx: &Ctx, pt: &GridPoint, _: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let f = ctx.field();
    let p = pt.params(f);
    let rs = ctx.model(ModelKind::D3, &p)?;
    let al = ModelKind::D3.alphabet();
    let g = |s: &str| NcPoly::monomial(f, al.word(s));
    let (a1, a2) = (p.c(&p.alpha1), p.c(&p.alpha2));
    let expected: BTreeMap<Word, NcPoly> = [
        ("aa", a1.clone()),
        ("bb", a1.clone()),
        ("cc", a1),
        ("ca", &(&a2 - &g("bc")) - &g("ab")),
        ("cb", &(&a2 - &g("ba")) - &g("ac")),
        ("bab", &(&g("aba") + &(&a2 * &g("b"))) - &(&a2 * &g("a"))),
    ]
    .into_iter()
    .map(|(w, t)| (al.word(w), t))
    .collect();
    let actual: BTreeMap<Word, NcPoly> = rs.rules().iter().map(|r| (r.lead.clone(), r.tail.clone())).collect();
    o.assert("six rules", actual.len() == 6);
    o.assert(
        "lead words {a^2, b^2, c^2, ca, cb, bab}",
        actual.keys().collect::<Vec<_>>() == expected.keys().collect::<Vec<_>>(),
    );
    o.assert("tails match", actual == expected);
    o.detail("rules", rs.display_rules());
    Ok(o)
}

fn d3_flatness(ctx: &Ctx, pt: &GridPoint, _: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let p = pt.params(ctx.field());
    let rs = ctx.model(ModelKind::D3, &p)?;
    let words = rs.normal_words(None)?;
    let labels = word_labels(&rs, &words);
    let expected: Vec<String> = E3_WORDS.iter().map(|s| s.to_string()).collect();
    o.assert("dimension 12", words.len() == 12);
    o.assert("normal words match the E3 list", sorted(labels) == sorted(expected));
    let basis = pbw_monomials(&p, None, 1, false);
    let rank = rank_in(&rs, &words, &basis);
    o.assert("(a-b)^n1 a^n2 c^n3 form a basis", basis.len() == 12 && rank == 12);
    o.detail("dimension", words.len());
    o.detail("pbw_rank", rank);
    Ok(o)
}

fn d3_semisimple(ctx: &Ctx, pt: &GridPoint, _: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let f = ctx.field();
    let p = pt.params(f);
    let q = ctx.quotient(ModelKind::D3, &p)?;
    let predicted = !f.is_zero(&f.mul(&p.beta, &f.add(&p.alpha1, &p.alpha2)));
    let radical = q.table.radical()?;
    let semisimple = radical.is_zero();
    let center = q.table.center().dim();
    o.assert("semisimple iff (3a1-a2)(a1+a2) != 0", semisimple == predicted);
    if semisimple {
        o.assert("center dimension 3", center == 3);
    }
    o.detail("predicted_semisimple", predicted);
    o.detail("semisimple", semisimple);
    o.detail("radical_dim", radical.dim());
    o.detail("center_dim", center);
    Ok(o)
}

fn d3_degenerate(ctx: &Ctx) -> Result<Outcome> {
    let mut o = Outcome::default();
    let f = ctx.field();

    let p = ctx.params(1, 3, None);
    let q = ctx.quotient(ModelKind::D3, &p)?;
    let t = &q.table;
    let gens = [
        q.element(&derived_element(&Derived::U, &p)?),
        q.element(&derived_element(&Derived::V, &p)?),
    ];
    let ideal = t.two_sided_ideal(&gens);
    let nilpotency = t.nilpotency_index(&ideal);
    let radical = t.radical()?;
    o.assert("(1,3): ideal (a-b, b-c) has dimension 10", ideal.dim() == 10);
    o.assert("(1,3): ideal is nilpotent", nilpotency.is_some());
    o.assert("(1,3): quotient has dimension 2", t.dim() - ideal.dim() == 2);
    o.assert(
        "(1,3): radical equals the ideal",
        radical.contains_subspace(&ideal) && ideal.contains_subspace(&radical),
    );
    o.detail("(1,3) ideal_dim", ideal.dim());
    o.detail("(1,3) nilpotency_index", nilpotency);
    o.detail("(1,3) radical_dim", radical.dim());

    let p = ctx.params(1, -1, None);
    let q = ctx.quotient(ModelKind::D3, &p)?;
    let t = &q.table;
    let radical = t.radical()?;
    o.assert("(1,-1): radical nonzero", !radical.is_zero());
    let e3 = q.element(&derived_element(&Derived::E(3), &p)?);
    let corner = t.corner_embedded(&e3)?;
    let form = quadratic_form(QuadraticFormKind::Fk3Corner, &p)?;
    let form_radical = form.gram_matrix().kernel().len();
    let corner_radical = corner.table.radical()?;
    let r = q.element(&derived_element(&Derived::E(3), &p)?.clone());
    let a_plus_c = q.element(&(&NcPoly::generator(f, 0) + &NcPoly::generator(f, 2)));
    let r = corner
        .restrict(&t.mul(&r, &a_plus_c))
        .ok_or_else(|| Error::Inconsistent("e3(a+c) outside the corner".into()))?;
    let generated = corner.table.two_sided_ideal(&[r]);
    o.assert("(1,-1): corner e3 D3 e3 has dimension 4", corner.table.dim() == 4);
    o.assert("(1,-1): bilinear form of the corner has a 1-dimensional radical", form_radical == 1);
    o.assert(
        "(1,-1): corner radical is generated by the radical vector e3(a+c)",
        corner_radical.contains_subspace(&generated) && generated.contains_subspace(&corner_radical),
    );
    o.detail("(1,-1) radical_dim", radical.dim());
    o.detail("(1,-1) corner_dim", corner.table.dim());
    o.detail("(1,-1) form_radical_dim", form_radical);
    o.detail("(1,-1) corner_radical_dim", corner_radical.dim());
    Ok(o)
}

fn d3_idempotents(ctx: &Ctx, pt: &GridPoint, _: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let p = pt.params(ctx.field());
    let rs = ctx.model(ModelKind::D3, &p)?;
    check_suite(&mut o, &rs, SuiteId::D3Idempotents, &p)?;
    Ok(o)
}

fn d3_corner(ctx: &Ctx, pt: &GridPoint, _: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let p = pt.params(ctx.field());
    let q = ctx.quotient(ModelKind::D3, &p)?;
    check_suite(&mut o, &q.rs, SuiteId::D3CornerClifford, &p)?;
    let e3 = q.element(&derived_element(&Derived::E(3), &p)?);
    let corner = q.table.corner(&e3)?;
    o.assert("corner dimension 4", corner.dim() == 4);
    let form = quadratic_form(QuadraticFormKind::Fk3Corner, &p)?;
    let semisimple = corner.is_semisimple()?;
    o.assert("corner semisimple iff its form is nondegenerate", semisimple == !form.is_degenerate());
    o.detail("corner_dim", corner.dim());
    o.detail("corner_semisimple", semisimple);
    Ok(o)
}

fn d3_hall(ctx: &Ctx, pt: &GridPoint, i: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let p = pt.params(ctx.field());
    let q = ctx.quotient(ModelKind::D3, &p)?;
    let mut rng = ctx.cfg.rng(ctx.id, i as u64);
    let res = pi_trials(&q.table, Identity::Hall, ctx.cfg.trials, &mut rng);
    o.assert("[[x,y]^2,z] = 0 at every trial", res.passed());
    o.detail("trials", res.trials);
    o.detail("failures", res.failures);
    o.error_bound = Some(error_bound(ctx.field(), Identity::Hall, ctx.cfg.trials).to_string());
    Ok(o)
}

fn idempotent_pair(t: &AlgebraTable, e: &Element, f1: &Element, f2: &Element) -> bool {
    t.is_idempotent(f1)
        && t.is_idempotent(f2)
        && t.is_zero(&t.mul(f1, f2))
        && t.is_zero(&t.mul(f2, f1))
        && t.add(f1, f2) == *e
}

fn d3_preprojective(ctx: &Ctx) -> Result<Outcome> {
    let mut o = Outcome::default();
    let f = ctx.field();
    let p = ctx.params(1, -1, None);
    let q = ctx.quotient(ModelKind::D3, &p)?;
    check_suite(&mut o, &q.rs, SuiteId::D3Preprojective, &p)?;
    let s = p.sqrt_alpha1()?;
    let half = f.inv(&f.from_i64(2))?;
    let e3 = derived_element(&Derived::E(3), &p)?;
    let fi = (&e3 + &(&e3 * &NcPoly::generator(f, 0)).scale(&f.inv(&s)?)).scale(&half);
    let fj = &e3 - &fi;
    let action = group_action(ModelKind::D3, f)?;
    let (t12, t23) = (&action[0].1, &action[1].1);
    let corners = [
        ("e3", e3.clone(), fi.clone(), fj.clone()),
        ("e2", t23.apply(&e3), t23.apply(&fi), t23.apply(&fj)),
        ("e1", t12.apply(&t23.apply(&e3)), t12.apply(&t23.apply(&fi)), t12.apply(&t23.apply(&fj))),
    ];
    for (name, e, a, b) in &corners {
        let (e, a, b) = (q.element(e), q.element(a), q.element(b));
        o.assert(
            format!("{name}: vertex idempotents are orthogonal and sum to {name}"),
            idempotent_pair(&q.table, &e, &a, &b),
        );
        o.detail(&format!("{name} corner_dim"), q.table.corner(&e)?.dim());
    }
    Ok(o)
}

fn d3_coinvariant(ctx: &Ctx) -> Result<Outcome> {
    let mut o = Outcome::default();
    let p = ctx.params(1, 3, None);
    let q = ctx.quotient(ModelKind::D3, &p)?;
    let t = &q.table;
    check_suite(&mut o, &q.rs, SuiteId::D3Coinvariant, &p)?;
    let fs = [derived_element(&Derived::F(1), &p)?, derived_element(&Derived::F(2), &p)?];
    let (f1, f2) = (q.element(&fs[0]), q.element(&fs[1]));
    o.assert("f1, f2 orthogonal idempotents with f1 + f2 = 1", idempotent_pair(t, &t.unit(), &f1, &f2));
    let (u, v) = (derived_element(&Derived::U, &p)?, derived_element(&Derived::V, &p)?);
    let mut gens = vec![f1, f2];
    for (i, j) in [(0, 1), (1, 0)] {
        for x in [&u, &v] {
            gens.push(q.element(&(&(&fs[i] * x) * &fs[j])));
        }
    }
    let sub = t.subalgebra_with_unit(&gens);
    o.assert("{f_i, u_ij, v_ij} generate a 12-dimensional subalgebra", sub.dim() == 12);
    o.detail("subalgebra_dim", sub.dim());
    Ok(o)
}

// ---- K ---------------------------------------------------------------------

fn k_relations(ctx: &Ctx, pt: &GridPoint, _: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let p = pt.params(ctx.field());
    let rs = ctx.model(ModelKind::K, &p)?;
    for id in [SuiteId::KYCommutation, SuiteId::KVplusVminus, SuiteId::KCubes] {
        check_suite(&mut o, &rs, id, &p)?;
    }
    o.detail("rules", rs.rules().len());
    Ok(o)
}

fn k_basis(ctx: &Ctx, pt: &GridPoint, _: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let p = pt.params(ctx.field());
    let rs = ctx.model(ModelKind::K3, &p)?;
    let words = rs.normal_words(None)?;
    let y = NcPoly::generator(p.field, 3);
    let basis = pbw_monomials(&p, Some(&y), 1, false);
    let rank = rank_in(&rs, &words, &basis);
    o.assert("dimension 36", words.len() == 36);
    o.assert("(a-b)^n1 a^n2 c^n3 y^n4 form a basis", basis.len() == 36 && rank == 36);
    o.detail("dimension", words.len());
    o.detail("pbw_rank", rank);
    Ok(o)
}

fn k_rho(ctx: &Ctx, pt: &GridPoint, _: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let f = ctx.field();
    let p = pt.params(f);
    let gamma = p.gamma()?.clone();
    let rho = rho_matrices(&p)?;
    let t = &rho.mat3;
    let [a, b, c, y] = rho.elements();
    let scalar = |s: &Scalar| t.scale(&t.unit(), s);
    let cyc = |x: &Element, y: &Element, z: &Element| t.add(&t.add(&t.mul(x, y), &t.mul(y, z)), &t.mul(z, x));
    o.assert(
        "A^2 = B^2 = C^2 = a1",
        [&a, &b, &c].iter().all(|x| t.mul(x, x) == scalar(&p.alpha1)),
    );
    o.assert("AB + BC + CA = a2", cyc(&a, &b, &c) == scalar(&p.alpha2));
    o.assert("AC + CB + BA = a2 + Y", cyc(&a, &c, &b) == t.add(&scalar(&p.alpha2), &y));
    o.assert("Y^3 = gamma^3", t.pow(&y, 3) == scalar(&f.pow(&gamma, 3)));
    let g3 = f.pow(&gamma, 3);
    let b3 = f.pow(&p.beta, 3);
    let cond = f.mul(
        &f.mul(&gamma, &f.add(&g3, &b3)),
        &f.add(&f.mul(&f.from_i64(4), &f.mul(&p.alpha1, &g3)), &f.mul(&b3, &f.add(&p.alpha1, &p.alpha2))),
    );
    let sub = t.subalgebra_with_unit(&[a, b, c, y]).dim();
    if !f.is_zero(&cond) {
        o.assert("generated subalgebra has dimension 36", sub == 36);
    }
    o.detail("gamma", scalar_json(f, &gamma));
    o.detail("simplicity_condition", scalar_json(f, &cond));
    o.detail("subalgebra_dim", sub);
    Ok(o)
}

fn k_peirce(ctx: &Ctx, pt: &GridPoint, _: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let f = ctx.field();
    let p = pt.params(f);
    let gamma = p.gamma()?.clone();
    if f.is_zero(&gamma) {
        return Ok(Outcome::skipped("gamma = 0"));
    }
    let q = ctx.quotient(ModelKind::K3, &p)?;
    let t = &q.table;
    let el = |d: Derived| derived_element(&d, &p).map(|x| q.element(&x));
    let y = q.element(&NcPoly::generator(f, 3));
    // e = (y² + γy + γ²)/(3γ²)
    let g2 = f.mul(&gamma, &gamma);
    let inv = f.inv(&f.mul(&f.from_i64(3), &g2))?;
    let e = t.scale(&t.add(&t.add(&t.mul(&y, &y), &t.scale(&y, &gamma)), &t.scale(&t.unit(), &g2)), &inv);
    o.assert("e idempotent and nonzero", t.is_idempotent(&e) && !t.is_zero(&e));
    o.assert("ye = gamma e", t.mul(&y, &e) == t.scale(&e, &gamma));
    let corner = t.corner_embedded(&e)?;
    o.assert("dim eAe = 4", corner.table.dim() == 4);

    let form = quadratic_form(QuadraticFormKind::QGamma, &p)?;
    let x1 = t.mul(&e, &el(Derived::T)?);
    let vp = el(Derived::VPlus)?;
    let x2 = t.mul(&e, &t.pow(&vp, 3));
    let anti = t.add(&t.mul(&x1, &x2), &t.mul(&x2, &x1));
    let two_b = f.mul(&f.from_i64(2), &form.gram[0][1]);
    o.assert("(et)^2 = q(x1) e", t.mul(&x1, &x1) == t.scale(&e, &form.diagonal[0]));
    o.assert("(ev+^3)^2 = q(x2) e", t.mul(&x2, &x2) == t.scale(&e, &form.diagonal[1]));
    o.assert("et ev+^3 + ev+^3 et = 2B(x1,x2) e", anti == t.scale(&e, &two_b));
    let generated = corner.table.subalgebra_with_unit(&[
        corner.restrict(&x1).ok_or_else(|| Error::Inconsistent("et outside eAe".into()))?,
        corner.restrict(&x2).ok_or_else(|| Error::Inconsistent("ev+^3 outside eAe".into()))?,
    ]);
    o.assert("eAe is generated by et and ev+^3", generated.dim() == corner.table.dim());

    let vm = el(Derived::VMinus)?;
    let vm2 = t.mul(&vm, &vm);
    let witness = (0..WITNESS_SEARCH_LIMIT)
        .filter_map(|n| f.nth_element(n))
        .map(|lambda| (t.add(&vp, &t.scale(&vm2, &lambda)), lambda))
        .find(|(x, _)| t.is_invertible(x));
    let Some((x, lambda)) = witness else {
        o.assert("invertible witness found", false);
        return Ok(o);
    };
    let zeta = p.zeta()?;
    o.assert("yx = zeta xy", t.mul(&y, &x) == t.scale(&t.mul(&x, &y), zeta));
    let powers = [t.unit(), x.clone(), t.mul(&x, &x)];
    let mut total = Subspace::zero(f, t.dim());
    let mut piece_dims = Vec::new();
    for xi in &powers {
        for xj in &powers {
            let piece = Subspace::span(
                f,
                t.dim(),
                corner
                    .basis
                    .vectors()
                    .iter()
                    .map(|b| t.mul(&t.mul(xi, &Element::new(b.clone())), xj).coords),
            );
            piece_dims.push(piece.dim());
            total = total.sum(&piece);
        }
    }
    let sum: usize = piece_dims.iter().sum();
    o.assert("the nine pieces x^i eAe x^j have dimensions summing to 36", sum == 36);
    o.assert("the nine pieces span A", total.dim() == 36);
    o.detail("gamma", scalar_json(f, &gamma));
    o.detail("witness_lambda", scalar_json(f, &lambda));
    o.detail("piece_dims", piece_dims);
    o.detail("corner_semisimple", corner.table.is_semisimple()?);
    o.detail("q_gamma_degenerate", form.is_degenerate());
    Ok(o)
}

// ---- B and T ---------------------------------------------------------------

fn t_hilbert(ctx: &Ctx) -> Result<Outcome> {
    let mut o = Outcome::default();
    let f = ctx.field();
    let zero = ModelParams::zero(f);
    let pb = presentation(ModelKind::B, &zero, None)?;
    let rs_b = ctx.complete(&pb)?;
    let hilbert = rs_b.hilbert_series(B_HILBERT.len())?;
    o.assert("dim B = 72", rs_b.dimension()? == 72);
    o.assert(
        "Hilbert coefficients [1,4,8,11,12,12,11,8,4,1]",
        hilbert[..B_HILBERT.len()] == B_HILBERT && hilbert[B_HILBERT.len()] == 0,
    );
    let suite = relation_suite(SuiteId::BDegreeSix, &zero)?;
    let failures: Vec<&str> = suite.iter().filter(|(_, r)| !rs_b.contains(r)).map(|(l, _)| l.as_str()).collect();
    o.assert("degree-six suite lies in the ideal of B", failures.is_empty());
    let mut quadratic = pb.relations.clone();
    let sextic = quadratic.pop().expect("B has a degree-six relation");
    quadratic.push(suite[0].1.clone());
    let alt = ctx.complete(&Presentation::new("B'", pb.alphabet.clone(), f, quadratic)?)?;
    o.assert("(a+b+c)^6 lies in the ideal with (cba)^2+(bac)^2+(acb)^2 in its place", alt.contains(&sextic));
    o.assert("both presentations have the same Hilbert series", alt.hilbert_series(B_HILBERT.len())? == hilbert);
    o.detail("hilbert", hilbert);
    o.detail("rules", rs_b.rules().len());
    Ok(o)
}

fn t_flatness(ctx: &Ctx, pt: &GridPoint, _: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let p = pt.params(ctx.field());
    let rs = ctx.model(ModelKind::T, &p)?;
    let words = rs.normal_words(None)?;
    let hilbert = rs.hilbert_series(B_HILBERT.len() - 1)?;
    let y = y_expression(&p);
    let basis = pbw_monomials(&p, Some(&y), 2, true);
    let rank = rank_in(&rs, &words, &basis);
    o.assert("dimension 72", words.len() == 72);
    o.assert("Hilbert series of normal words equals that of B", hilbert == B_HILBERT);
    o.assert("(b-a)^n1 a^n2 c^n3 y^n4 d^n5 form a basis", basis.len() == 72 && rank == 72);
    o.detail("dimension", words.len());
    o.detail("pbw_rank", rank);
    Ok(o)
}

fn t_semisimple(ctx: &Ctx, pt: &GridPoint, _: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let f = ctx.field();
    let p = pt.params(f);
    let a3 = p.alpha3()?.clone();
    if p.gamma.is_none() {
        return Ok(Outcome::skipped(format!("alpha3 = {} has no cube root in {f}", f.format(&a3))));
    }
    let q = ctx.quotient(ModelKind::T, &p)?;
    let b2 = f.mul(&p.beta, &p.beta);
    let predicted = !f.is_zero(&f.mul(&a3, &f.add(&a3, &f.mul(&f.add(&p.alpha1, &p.alpha2), &b2))));
    let radical = q.table.radical()?;
    let semisimple = radical.is_zero();
    let center = q.table.center().dim();
    o.assert("semisimple iff a3(a3 + (a1+a2)(3a1-a2)^2) != 0", semisimple == predicted);
    if semisimple {
        o.assert("center dimension 2", center == 2);
    }
    o.detail("predicted_semisimple", predicted);
    o.detail("semisimple", semisimple);
    o.detail("radical_dim", radical.dim());
    o.detail("center_dim", center);
    Ok(o)
}

// ---- Ore datum and group actions ---------------------------------------------

fn ore_equivariance(ctx: &Ctx, pt: &GridPoint, _: usize) -> Result<Outcome> {
    let mut o = Outcome::default();
    let f = ctx.field();
    let pt = match pt.alpha3 {
        Some(_) => pt.clone(),
        None => pt.with_alpha3(f.one()),
    };
    let p = pt.params(f);

    let pk = presentation(ModelKind::K, &p, None)?;
    let rs_k = ctx.complete(&pk)?;
    let ore = ore_data(&p);
    o.assert(
        "sigma maps K relations into the ideal",
        pk.relations.iter().all(|r| rs_k.contains(&ore.sigma.apply(r))),
    );
    o.assert(
        "the skew derivation maps K relations into the ideal",
        pk.relations.iter().all(|r| rs_k.contains(&ore.partial.apply(r))),
    );
    o.assert("sigma^6 = id", ore.sigma.power(6, f) == crate::freealg::MorphismSpec::identity(f, 4));

    for (kind, label) in [(ModelKind::D3, "S3"), (ModelKind::T, "G")] {
        let pres = presentation(kind, &p, None)?;
        let rs = ctx.complete(&pres)?;
        for (name, g) in group_action(kind, f)? {
            o.assert(
                format!("{label} generator {name} preserves the {kind} ideal"),
                pres.relations.iter().all(|r| rs.contains(&g.apply(r))),
            );
        }
        if kind == ModelKind::T {
            check_suite(&mut o, &rs, SuiteId::TYTwist, &p)?;
            check_suite(&mut o, &rs, SuiteId::TDAnticommutators, &p)?;
        }
    }
    let g: Vec<_> = group_action(ModelKind::T, f)?.into_iter().map(|(_, m)| m).collect();
    let (ga, gb, gc, gd) = (&g[0], &g[1], &g[2], &g[3]);
    let triples = [[(ga, gb), (gb, gc), (gc, ga)], [(ga, gc), (gc, gd), (gd, ga)], [(ga, gd), (gd, gb), (gb, ga)], [
        (gb, gd),
        (gd, gc),
        (gc, gb),
    ]];
    o.assert(
        "group relations of G hold on generators",
        triples.iter().all(|t| {
            let [x, y, z] = t.map(|(l, r)| l.compose(r));
            x == y && y == z
        }),
    );
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> CheckConfig {
        CheckConfig::default()
    }

    #[test]
    fn registry_ids_are_unique() {
        let mut ids = check_ids();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), CHECKS.len());
        assert!(matches!(run_check("nonexistent", &cfg()), Err(Error::Unknown { .. })));
    }

    #[test]
    fn e3_basis_passes() {
        let r = run_check("e3-basis", &cfg()).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.to_json().unwrap());
        assert_eq!(r.details["hilbert"], json!([1, 3, 4, 3, 1, 0, 0]));
    }

    #[test]
    fn reports_are_deterministic() {
        let c = cfg();
        let a = run_check("d3-groebner", &c).unwrap().to_json().unwrap();
        let b = run_check("d3-groebner", &c).unwrap().to_json().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn scans_compose() {
        let mut c = cfg();
        c.grid = super::super::parse_grid("box:-1..1", c.field, c.seed).unwrap();
        let full = scan("d3-semisimple", &c).unwrap();
        let (left, right) = c.grid.split_at(4);
        let parts: Vec<PointReport> = [left, right]
            .iter()
            .flat_map(|g| {
                let sub = CheckConfig { grid: g.to_vec(), ..c.clone() };
                scan("d3-semisimple", &sub).unwrap().points
            })
            .collect();
        assert_eq!(full.points, parts);
        assert_eq!(full.status, Status::Pass);
    }

    #[test]
    fn empty_grid_rejected() {
        let c = CheckConfig { grid: Vec::new(), ..cfg() };
        assert!(scan("d3-flatness", &c).is_err());
    }

    #[test]
    fn completion_overflow_is_an_error() {
        let c = CheckConfig { max_rules: 2, ..cfg() };
        let r = run_check("e3-basis", &c).unwrap();
        assert_eq!(r.status, Status::Error);
    }

    #[test]
    fn missing_roots_skip() {
        let f = FieldSpec::default();
        let nonresidue = (2..100).find(|&n| f.square_root(&f.from_i64(n)).is_none()).unwrap();
        let no_cube = (2..100).find(|&n| f.cube_root(&f.from_i64(n)).is_none()).unwrap();
        let c = CheckConfig {
            grid: vec![GridPoint::from_i64(f, 1, 1, Some(no_cube))],
            ..cfg()
        };
        let r = scan("t-semisimple", &c).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert_eq!(r.skipped.len(), 1);
        let p = ModelParams::from_i64(f, nonresidue, 0, None);
        assert!(matches!(p.sqrt_alpha1(), Err(Error::ParameterDomain(_))));
    }
}
