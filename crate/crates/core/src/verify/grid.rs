use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::models::ModelParams;

/// A parameter tuple `(α₁, α₂)` or `(α₁, α₂, α₃)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridPoint {
    pub alpha1: Scalar,
    pub alpha2: Scalar,
    pub alpha3: Option<Scalar>,
}

impl GridPoint {
    pub fn new(alpha1: Scalar, alpha2: Scalar, alpha3: Option<Scalar>) -> Self {
        GridPoint { alpha1, alpha2, alpha3 }
    }

    pub fn from_i64(field: FieldSpec, alpha1: i64, alpha2: i64, alpha3: Option<i64>) -> Self {
        GridPoint::new(field.from_i64(alpha1), field.from_i64(alpha2), alpha3.map(|a| field.from_i64(a)))
    }

    pub fn params(&self, field: FieldSpec) -> ModelParams {
        ModelParams::new(field, self.alpha1.clone(), self.alpha2.clone(), self.alpha3.clone())
    }

    pub fn with_alpha3(&self, alpha3: Scalar) -> Self {
        GridPoint::new(self.alpha1.clone(), self.alpha2.clone(), Some(alpha3))
    }

    pub fn label(&self, field: FieldSpec) -> String {
        let mut s = format!("({}, {}", field.format(&self.alpha1), field.format(&self.alpha2));
        if let Some(a3) = &self.alpha3 {
            s.push_str(&format!(", {}", field.format(a3)));
        }
        s.push(')');
        s
    }

    pub(crate) fn belongs_to(&self, field: FieldSpec) -> bool {
        field.contains(&self.alpha1)
            && field.contains(&self.alpha2)
            && self.alpha3.as_ref().map_or(true, |a| field.contains(a))
    }
}

const BASE_VALUES: [i64; 5] = [0, 1, -1, 2, 3];
const RANDOM_POINTS: usize = 20;

/// All pairs in `{0, 1, −1, 2, 3}²` followed by 20 seeded random pairs.
pub fn default_grid(field: FieldSpec, seed: u64) -> Vec<GridPoint> {
    let mut grid: Vec<GridPoint> = BASE_VALUES
        .iter()
        .flat_map(|&a1| BASE_VALUES.iter().map(move |&a2| GridPoint::from_i64(field, a1, a2, None)))
        .collect();
    grid.extend(random_grid(field, seed, RANDOM_POINTS));
    grid
}

fn random_grid(field: FieldSpec, seed: u64, n: usize) -> Vec<GridPoint> {
    let mut rng = super::CheckConfig { seed, ..super::CheckConfig::new_bare(field) }.rng("grid", 0);
    (0..n)
        .map(|_| GridPoint::new(field.random(&mut rng), field.random(&mut rng), None))
        .collect()
}

/// Every point without `α₃` becomes the points with `α₃` in
/// `{0, 1, −1, −β³, random}` (duplicates removed); points that already carry
/// `α₃` are kept.
pub fn expand_alpha3(points: &[GridPoint], field: FieldSpec, seed: u64) -> Vec<GridPoint> {
    let cfg = super::CheckConfig { seed, ..super::CheckConfig::new_bare(field) };
    let mut out = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if p.alpha3.is_some() {
            out.push(p.clone());
            continue;
        }
        let beta = p.params(field).beta;
        let mut rng = cfg.rng("alpha3", i as u64);
        let candidates = [
            field.zero(),
            field.one(),
            field.from_i64(-1),
            field.neg(&field.pow(&beta, 3)),
            field.random(&mut rng),
        ];
        let mut seen: Vec<Scalar> = Vec::new();
        for a3 in candidates {
            if !seen.contains(&a3) {
                out.push(p.with_alpha3(a3.clone()));
                seen.push(a3);
            }
        }
    }
    out
}

/// Grid syntax: `default`, `random:N`, `box:LO..HI` (all pairs with entries
/// in `LO..=HI`), or explicit tuples such as `1,3;1,-1;2,5,1/2`.
pub fn parse_grid(spec: &str, field: FieldSpec, seed: u64) -> Result<Vec<GridPoint>> {
    let spec = spec.trim();
    let bad = |msg: String| Error::ParameterDomain(format!("grid {spec:?}: {msg}"));
    let grid = if spec == "default" {
        default_grid(field, seed)
    } else if let Some(n) = spec.strip_prefix("random:") {
        let n: usize = n.parse().map_err(|_| bad("bad count".into()))?;
        random_grid(field, seed, n)
    } else if let Some(range) = spec.strip_prefix("box:") {
        let (lo, hi) = range.split_once("..").ok_or_else(|| bad("expected LO..HI".into()))?;
        let lo: i64 = lo.trim().parse().map_err(|_| bad("bad lower bound".into()))?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad("bad upper bound".into()))?;
        (lo..=hi)
            .flat_map(|a1| (lo..=hi).map(move |a2| GridPoint::from_i64(field, a1, a2, None)))
            .collect()
    } else {
        spec.split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|tuple| {
                let values = tuple
                    .split(',')
                    .map(|v| parse_scalar(v.trim(), field))
                    .collect::<Result<Vec<_>>>()?;
                match values.as_slice() {
                    [a1, a2] => Ok(GridPoint::new(a1.clone(), a2.clone(), None)),
                    [a1, a2, a3] => Ok(GridPoint::new(a1.clone(), a2.clone(), Some(a3.clone()))),
                    _ => Err(bad(format!("tuple {tuple:?} must have 2 or 3 entries"))),
                }
            })
            .collect::<Result<Vec<_>>>()?
    };
    if grid.is_empty() {
        return Err(bad("empty grid".into()));
    }
    Ok(grid)
}

fn parse_scalar(s: &str, field: FieldSpec) -> Result<Scalar> {
    let bad = || Error::ParameterDomain(format!("bad scalar {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            field.from_ratio(n, d)
        }
        None => Ok(field.from_i64(s.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: FieldSpec = FieldSpec::Prime(10009);

    #[test]
    fn default_grid_shape() {
        let g = default_grid(F, 42);
        assert_eq!(g.len(), 45);
        assert_eq!(g[0], GridPoint::from_i64(F, 0, 0, None));
        assert_eq!(g[7], GridPoint::from_i64(F, 1, -1, None));
        assert_eq!(g, default_grid(F, 42));
        assert_ne!(g[25..], default_grid(F, 7)[25..]);
    }

    #[test]
    fn alpha3_expansion() {
        // (1, 0): β = 3, so −β³ = −27
        let pts = expand_alpha3(&[GridPoint::from_i64(F, 1, 0, None)], F, 42);
        let a3: Vec<Scalar> = pts.iter().map(|p| p.alpha3.clone().unwrap()).collect();
        assert_eq!(a3[..4], [F.zero(), F.one(), F.from_i64(-1), F.from_i64(-27)]);
        // (0, 0): −β³ = 0 is a duplicate
        assert_eq!(expand_alpha3(&[GridPoint::from_i64(F, 0, 0, None)], F, 42).len(), 4);
    }

    #[test]
    fn grid_syntax() {
        assert_eq!(parse_grid("box:-2..3", F, 1).unwrap().len(), 36);
        assert_eq!(parse_grid("random:25", F, 1).unwrap().len(), 25);
        let g = parse_grid("1,3; 1,-1 ;2,5,1/2", F, 1).unwrap();
        assert_eq!(g[2].alpha3, Some(F.from_ratio(1, 2).unwrap()));
        assert_eq!(g[1].label(F), "(1, -1)");
        assert!(parse_grid("1", F, 1).is_err());
        assert!(parse_grid("", F, 1).is_err());
        assert!(parse_grid("x,y", F, 1).is_err());
    }
}
