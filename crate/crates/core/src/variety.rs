//! Random evaluation on constraint varieties, used to test polynomial
//! identities modulo relations such as `b_i a_ij = b_j a_ji` without
//! rational-function arithmetic.

use crate::scalar::{Expr, MPoly, Q};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Default number of sample points for identity tests.
pub const DEFAULT_TRIALS: usize = 25;
/// Coordinates are drawn uniformly from `1..=COORD_RANGE`.
pub const COORD_RANGE: u64 = 1 << 32;

/// A parameter space: named variables, some of which are solved for in
/// terms of the others.
#[derive(Clone, Debug, PartialEq)]
pub struct Variety {
    pub vars: Vec<String>,
    /// `(variable index, expression in earlier or free variables)`, applied in order.
    pub solved: Vec<(usize, Expr)>,
}

impl Variety {
    pub fn free(vars: Vec<String>) -> Self {
        Variety { vars, solved: Vec::new() }
    }

    /// Variables `a{i}{j}` then `b{i}` for a `k`-dimensional semisimple
    /// quadruple, with `a_ji := b_i a_ij / b_j` for `i < j`.
    pub fn spherical(k: usize) -> Self {
        let vars = spherical_vars(k);
        let mut solved = Vec::new();
        for i in 1..=k {
            for j in i + 1..=k {
                let target = vars.iter().position(|v| *v == format!("a{j}{i}")).unwrap();
                let e = Expr::parse(&format!("b{i}*a{i}{j}/b{j}")).unwrap();
                solved.push((target, e));
            }
        }
        Variety { vars, solved }
    }

    pub fn is_free(&self) -> bool {
        self.solved.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// A random point; free coordinates are uniform in `1..=COORD_RANGE`.
    pub fn sample(&self, rng: &mut impl Rng) -> Vec<Q> {
        loop {
            let mut point: Vec<Q> = (0..self.vars.len())
                .map(|_| Q::from_integer(BigInt::from(rng.random_range(1..=COORD_RANGE))))
                .collect();
            if self.complete(&mut point) {
                return point;
            }
        }
    }

    /// Recomputes the solved coordinates of `point` from the free ones;
    /// `false` when a relation cannot be evaluated (division by zero).
    pub fn complete(&self, point: &mut [Q]) -> bool {
        for (idx, e) in &self.solved {
            match e.eval_at(&self.vars, point) {
                Ok(v) => point[*idx] = v,
                Err(_) => return false,
            }
        }
        true
    }

    pub fn sample_points(&self, count: usize, seed: u64) -> Vec<Vec<Q>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| self.sample(&mut rng)).collect()
    }

    /// Whether `p` vanishes on the variety: exactly when nothing is solved
    /// for, otherwise at `trials` seeded random points.
    pub fn vanishes(&self, p: &MPoly, trials: usize, seed: u64) -> bool {
        use num_traits::Zero;
        if self.is_free() {
            return p.is_zero();
        }
        self.sample_points(trials, seed).iter().all(|pt| p.eval(pt).is_zero())
    }
}

pub fn spherical_vars(k: usize) -> Vec<String> {
    let mut vars = Vec::new();
    for i in 1..=k {
        for j in 1..=k {
            vars.push(format!("a{i}{j}"));
        }
    }
    for i in 1..=k {
        vars.push(format!("b{i}"));
    }
    vars
}

/// Probabilistic identity test `lhs = rhs` on the variety.
pub fn identity_check_on_variety(lhs: &Expr, rhs: &Expr, variety: &Variety, trials: usize, seed: u64) -> bool {
    variety.sample_points(trials, seed).iter().all(|pt| {
        match (lhs.eval_at(&variety.vars, pt), rhs.eval_at(&variety.vars, pt)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    })
}
