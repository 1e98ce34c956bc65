//! Meander matrices `𝒢_{2n}(d)` with entries `d^{κ(b̄a)}`, their
//! determinants and their rank at the roots of Chebyshev polynomials.

use crate::diagram::{compose, Diagram};
use crate::error::BoundError;
use crate::linalg::{bareiss_det_int, rank, Matrix};
use num_bigint::BigInt;
use crate::matching::{binomial, enumerate_matchings};
use crate::scalar::{pow, q, q_frac, Field, MPoly, QuadElem, Ring, Q};
use num_traits::{One, Zero};
use rayon::prelude::*;

pub const MEANDER_BOUND: usize = 6;

/// Largest `n` whose determinant is interpolated symbolically.
pub const SYMBOLIC_LIMIT: usize = 5;

/// Loop counts `κ(b̄a)` over the crossingless matchings of `2n` points.
pub fn meander_loops(n: usize) -> Result<Vec<Vec<usize>>, BoundError> {
    let ds: Vec<Diagram> = enumerate_matchings(n, MEANDER_BOUND)?.into_iter().map(Diagram::bare).collect();
    Ok(ds
        .par_iter()
        .map(|a| ds.iter().map(|b| compose(&b.reflect(), a).expect("matching boundaries").circle_count()).collect())
        .collect())
}

pub fn meander_at<R: Ring>(loops: &[Vec<usize>], d: &R) -> Matrix<R> {
    let max = loops.iter().flatten().copied().max().unwrap_or(0);
    let mut powers = vec![R::one()];
    for i in 1..=max {
        powers.push(powers[i - 1].clone() * d.clone());
    }
    Matrix::from_rows_sized(loops.iter().map(|r| r.iter().map(|&k| powers[k].clone()).collect()).collect(), loops.len())
}

/// `𝒢_{2n}(d)` over `ℚ[d]`.
pub fn meander_matrix(n: usize) -> Result<Matrix<MPoly>, BoundError> {
    Ok(meander_at(&meander_loops(n)?, &MPoly::var(0)))
}

/// Polynomial through `(i, values[i])`, `i = 0, 1, …`, by Newton's
/// divided differences.
pub fn interpolate(values: &[Q]) -> MPoly {
    let n = values.len();
    let mut c = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            c[i] = (c[i].clone() - c[i - 1].clone()) / q(j as i64);
        }
    }
    let x = MPoly::var(0);
    let mut p = MPoly::zero();
    for i in (0..n).rev() {
        p = p * (x.clone() - MPoly::constant(q(i as i64))) + MPoly::constant(c[i].clone());
    }
    p
}

/// `det 𝒢_{2n}(d)` by evaluation at `d = 0, …, n·C_n` and interpolation.
pub fn meander_det(n: usize) -> Result<MPoly, BoundError> {
    let loops = meander_loops(n)?;
    let degree_bound: usize = loops.iter().map(|r| r.iter().copied().max().unwrap_or(0)).sum();
    let values: Vec<Q> = (0..=degree_bound)
        .into_par_iter()
        .map(|x| {
            let d = BigInt::from(x);
            let rows: Vec<Vec<BigInt>> = loops.iter().map(|r| r.iter().map(|&k| num_traits::pow(d.clone(), k)).collect()).collect();
            Q::from_integer(bareiss_det_int(&rows))
        })
        .collect();
    Ok(interpolate(&values))
}

/// Chebyshev polynomial of the second kind in `d`: `U_0 = 1`, `U_1 = d`,
/// `U_{m+1} = d U_m - U_{m-1}`.
pub fn chebyshev_u(m: usize) -> MPoly {
    let d = MPoly::var(0);
    let (mut a, mut b) = (MPoly::one(), d.clone());
    if m == 0 {
        return a;
    }
    for _ in 1..m {
        let c = d.clone() * b.clone() - a;
        a = b;
        b = c;
    }
    b
}

/// Exponent of `U_m` in `det 𝒢_{2n}`.
pub fn meander_exponent(n: usize, m: usize) -> u32 {
    let c = |j: isize| if j < 0 { 0i128 } else { binomial(2 * n, j as usize) as i128 };
    let (n, m) = (n as isize, m as isize);
    (c(n - m) - 2 * c(n - m - 1) + c(n - m - 2)) as u32
}

/// `∏_{m=1}^{n} U_m(d)^{a_{n,m}}`.
pub fn product_formula(n: usize) -> MPoly {
    (1..=n).fold(MPoly::one(), |acc, m| acc * pow(&chebyshev_u(m), meander_exponent(n, m)))
}

/// Exact `2cos(jπ/N)` for reduced fractions with `N ≤ 6`.
pub fn two_cos_pi(k: usize, m1: usize) -> Option<QuadElem> {
    let g = num_integer::gcd(k, m1);
    let (j, n) = (k / g, m1 / g);
    let r = |x: Q| QuadElem::rational(x);
    let half = q_frac(1, 2);
    Some(match (j % (2 * n), n) {
        (0, 1) => r(q(2)),
        (1, 2) => r(q(0)),
        (1, 3) => r(q(1)),
        (2, 3) => r(q(-1)),
        (1, 4) => QuadElem::sqrt(2),
        (3, 4) => -QuadElem::sqrt(2),
        (1, 5) => QuadElem::new(half.clone(), half, 5),
        (2, 5) => QuadElem::new(-half.clone(), half, 5),
        (3, 5) => QuadElem::new(half.clone(), -half, 5),
        (4, 5) => QuadElem::new(-half.clone(), -half, 5),
        (1, 6) => QuadElem::sqrt(3),
        (5, 6) => -QuadElem::sqrt(3),
        _ => return None,
    })
}

#[derive(Clone, Debug)]
pub struct RootCheck {
    pub m: usize,
    pub k: usize,
    pub d: QuadElem,
    /// `U_m(d) = 0`, confirming the closed form for the root.
    pub is_root: bool,
    pub rank: usize,
}

#[derive(Clone, Debug)]
pub struct MeanderRow {
    pub n: usize,
    pub size: usize,
    pub det: Option<MPoly>,
    /// Interpolated determinant equals the Chebyshev product.
    pub det_matches_product: Option<bool>,
    pub rank_at_3: usize,
    pub roots: Vec<RootCheck>,
    /// Roots `(m, k)` not representable in a quadratic field.
    pub skipped: Vec<(usize, usize)>,
    /// Ranks at `d = 2` and `d = -2`.
    pub rank_at_pm2: (usize, usize),
}

impl MeanderRow {
    pub fn full_rank_generic(&self) -> bool {
        self.rank_at_3 == self.size
    }

    pub fn deficient_at_roots(&self) -> bool {
        self.roots.iter().all(|r| r.is_root && r.rank < self.size)
    }
}

fn rank_in<F: Field>(loops: &[Vec<usize>], d: F) -> usize {
    rank(&meander_at(loops, &d))
}

pub fn meander_row(n: usize) -> Result<MeanderRow, BoundError> {
    let loops = meander_loops(n)?;
    let size = loops.len();
    let det = if n <= SYMBOLIC_LIMIT { Some(meander_det(n)?) } else { None };
    let det_matches_product = det.as_ref().map(|d| *d == product_formula(n));
    let mut roots = Vec::new();
    let mut skipped = Vec::new();
    for m in 1..=n {
        for k in 1..=m {
            match two_cos_pi(k, m + 1) {
                Some(d) => {
                    let is_root = chebyshev_u(m).eval_in(std::slice::from_ref(&d)).is_zero();
                    let rank = rank_in(&loops, d.clone());
                    roots.push(RootCheck { m, k, d, is_root, rank });
                }
                None => skipped.push((m, k)),
            }
        }
    }
    Ok(MeanderRow {
        n,
        size,
        det,
        det_matches_product,
        rank_at_3: rank_in(&loops, q(3)),
        roots,
        skipped,
        rank_at_pm2: (rank_in(&loops, q(2)), rank_in(&loops, q(-2))),
    })
}

pub fn meander_check(n_max: usize) -> Result<Vec<MeanderRow>, BoundError> {
    if n_max > MEANDER_BOUND {
        return Err(BoundError { what: "meander n", value: n_max, bound: MEANDER_BOUND });
    }
    (1..=n_max).map(meander_row).collect()
}
