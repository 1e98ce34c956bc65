//! Nondegeneracy of the spherical Gram matrix for semisimple quadruples at
//! random points of the sphericality variety, plus a scan of specialisations
//! where Chebyshev factors are expected to vanish. Nothing here is asserted;
//! the report records what was observed.

use crate::diagram::Content;
use crate::error::Error;
use crate::eval::EvalContext;
use crate::fixtures::semisimple_symbolic;
use crate::gram::{block_items, gram_from_closures, labelings, pair_closures, spanning_set, SpanMode};
use crate::io::ParamQuadruple;
use crate::linalg::rank;
use crate::scalar::{q, Q};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const EXPERIMENT_MAX_K: usize = 3;
pub const EXPERIMENT_MAX_N: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelRank {
    pub n: usize,
    pub size: usize,
    pub rank: usize,
}

impl LevelRank {
    pub fn full(&self) -> bool {
        self.rank == self.size
    }
}

#[derive(Clone, Debug)]
pub struct PointResult {
    pub point: Vec<Q>,
    pub levels: Vec<LevelRank>,
}

/// One specialisation `c = value` of a diagonal entry `a_ii` or of
/// `c_ij² = a_ij a_ji`.
#[derive(Clone, Debug)]
pub struct ScanResult {
    pub target: String,
    pub value: String,
    /// Smallest `m` with `U_m(c) = 0`, if any.
    pub first_root: Option<usize>,
    pub point: Vec<Q>,
    pub levels: Vec<LevelRank>,
}

impl ScanResult {
    /// Singular exactly at the levels `n ≥ first_root`.
    pub fn consistent(&self) -> bool {
        self.levels.iter().all(|l| l.full() == self.first_root.is_none_or(|m| l.n < m))
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentReport {
    pub k_dim: usize,
    pub n_max: usize,
    pub seed: u64,
    pub vars: Vec<String>,
    pub full_matrix: bool,
    pub points: Vec<PointResult>,
    pub scan: Vec<ScanResult>,
}

impl ExperimentReport {
    pub fn all_full_rank(&self) -> bool {
        self.points.iter().all(|p| p.levels.iter().all(LevelRank::full))
    }

    pub fn scan_consistent(&self) -> bool {
        self.scan.iter().all(ScanResult::consistent)
    }
}

/// Pairing closures at one level, either for the whole spanning set or
/// block by block.
struct Level {
    n: usize,
    size: usize,
    parts: Vec<Vec<Vec<Vec<Content>>>>,
}

impl Level {
    fn new(k_dim: usize, n: usize, full_matrix: bool) -> Result<Level, Error> {
        let parts = if full_matrix {
            vec![pair_closures(&spanning_set(n, k_dim, SpanMode::Disk, n)?.disks)?]
        } else {
            let mut parts = Vec::new();
            for seq in labelings(2 * n, k_dim) {
                let items = block_items(&seq, n)?;
                if !items.is_empty() {
                    parts.push(pair_closures(&items)?);
                }
            }
            parts
        };
        let size = parts.iter().map(Vec::len).sum();
        Ok(Level { n, size, parts })
    }

    fn rank_at(&self, fixture: &ParamQuadruple, point: &[Q]) -> Result<LevelRank, Error> {
        let qd = fixture.specialize(point);
        let ctx = EvalContext::spherical(&qd, true);
        let mut r = 0;
        for c in &self.parts {
            r += rank(&gram_from_closures(&ctx, c)?);
        }
        Ok(LevelRank { n: self.n, size: self.size, rank: r })
    }
}

fn diagonal_root(t: i64) -> Option<usize> {
    match t {
        0 => Some(1),
        1 | -1 => Some(2),
        _ => None,
    }
}

fn square_root_level(s: i64) -> Option<usize> {
    match s {
        0 => Some(1),
        1 => Some(2),
        2 => Some(3),
        3 => Some(5),
        _ => None,
    }
}

/// Sets chosen coordinates of a point, looking variables up by name.
type PointSetter<'a> = &'a dyn Fn(&mut Vec<Q>, &dyn Fn(&str) -> usize);

fn sample_with(fixture: &ParamQuadruple, rng: &mut ChaCha8Rng, set: PointSetter) -> Vec<Q> {
    let v = &fixture.variety;
    let idx = |name: &str| v.index(name).expect("declared variable");
    loop {
        let mut p = v.sample(rng);
        set(&mut p, &idx);
        if v.complete(&mut p) {
            return p;
        }
    }
}

/// Runs the experiment for `k_dim`-dimensional semisimple quadruples at
/// `points` seeded random points and levels `1..=n_max`. With `full_matrix`
/// the whole Gram matrix is used; otherwise its diagonal blocks.
pub fn generic_nondegeneracy_experiment(k_dim: usize, n_max: usize, seed: u64, points: usize, full_matrix: bool) -> Result<ExperimentReport, Error> {
    if k_dim == 0 || k_dim > EXPERIMENT_MAX_K || n_max > EXPERIMENT_MAX_N {
        return Err(crate::error::BoundError { what: "experiment size", value: k_dim.max(n_max), bound: EXPERIMENT_MAX_K.min(EXPERIMENT_MAX_N) }.into());
    }
    let fixture = semisimple_symbolic(k_dim);
    let levels: Vec<Level> = (1..=n_max).map(|n| Level::new(k_dim, n, full_matrix)).collect::<Result<_, _>>()?;
    let ranks = |p: &[Q]| levels.iter().map(|l| l.rank_at(&fixture, p)).collect::<Result<Vec<_>, Error>>();

    let mut point_results = Vec::new();
    for point in fixture.variety.sample_points(points, seed) {
        point_results.push(PointResult { levels: ranks(&point)?, point });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut scan = Vec::new();
    for i in 1..=k_dim {
        for t in -2..=2i64 {
            let name = format!("a{i}{i}");
            let p = sample_with(&fixture, &mut rng, &|p, idx| p[idx(&name)] = q(t));
            scan.push(ScanResult { target: name, value: t.to_string(), first_root: diagonal_root(t), levels: ranks(&p)?, point: p });
        }
    }
    for i in 1..=k_dim {
        for j in i + 1..=k_dim {
            for s in 0..=4i64 {
                let (aij, bi, bj) = (format!("a{i}{j}"), format!("b{i}"), format!("b{j}"));
                let p = sample_with(&fixture, &mut rng, &|p, idx| {
                    if s == 0 {
                        p[idx(&aij)] = q(0);
                    } else {
                        // b_j = b_i a_ij² / s makes a_ij a_ji = s on the variety
                        let a = p[idx(&aij)].clone();
                        p[idx(&bj)] = p[idx(&bi)].clone() * a.clone() * a / q(s);
                    }
                });
                scan.push(ScanResult {
                    target: format!("a{i}{j}*a{j}{i}"),
                    value: s.to_string(),
                    first_root: square_root_level(s),
                    levels: ranks(&p)?,
                    point: p,
                });
            }
        }
    }
    Ok(ExperimentReport { k_dim, n_max, seed, vars: fixture.variety.vars.clone(), full_matrix, points: point_results, scan })
}
