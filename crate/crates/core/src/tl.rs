//! Endomorphism algebras `End(n)` of the gligible quotient, computed from a
//! numeric quadruple.

use crate::algebra::Quadruple;
use crate::diagram::{compose, Diagram};
use crate::error::Error;
use crate::eval::EvalContext;
use crate::gram::{describe, TestSpace};
use crate::linalg::{express, independent_rows};
use crate::scalar::{Q, Ring};
use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct TlAlgebra {
    pub n: usize,
    pub basis: Vec<String>,
    pub diagrams: Vec<Diagram>,
    /// `mult[i][j]` holds the coordinates of `b_i ∘ b_j`.
    pub mult: Vec<Vec<Vec<Q>>>,
    pub unit: Vec<Q>,
    pub associative: bool,
    pub unital: bool,
}

impl TlAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let d = self.dim();
        let mut out = vec![Q::zero(); d];
        for (i, xi) in x.iter().enumerate().take(d) {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate().take(d) {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.clone() * yj.clone();
                for (o, m) in out.iter_mut().zip(&self.mult[i][j]) {
                    *o = o.clone() + c.clone() * m.clone();
                }
            }
        }
        out
    }

    fn basis_vector(&self, i: usize) -> Vec<Q> {
        (0..self.dim()).map(|j| if i == j { Q::from_i64(1) } else { Q::zero() }).collect()
    }

    fn check_associative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d).all(|k| {
                    let (a, b, c) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    self.mul(&self.mul(&a, &b), &c) == self.mul(&a, &self.mul(&b, &c))
                })
            })
        })
    }

    fn check_unital(&self) -> bool {
        (0..self.dim()).all(|i| {
            let b = self.basis_vector(i);
            self.mul(&self.unit, &b) == b && self.mul(&b, &self.unit) == b
        })
    }
}

/// Picks pivot diagrams spanning `End(n)` modulo negligible morphisms and
/// computes structure constants by composing and re-expressing through the
/// pairing vectors.
pub fn tl_algebra(q: &Quadruple<Q>, n: usize, bound: usize) -> Result<TlAlgebra, Error> {
    let ts = TestSpace::new(q);
    let ctx = EvalContext::new(q);
    let rows = ts.rows((n, n), bound)?;
    let outers = ts.outers(n, bound)?;
    let m = ts.matrix(&ctx, &rows, &outers)?;
    let pivots = independent_rows(&m);
    let diagrams: Vec<Diagram> = pivots.iter().map(|&i| rows[i].clone()).collect();
    let vectors: Vec<Vec<Q>> = pivots.iter().map(|&i| m.row(i).to_vec()).collect();
    let coords = |d: &Diagram| -> Result<Vec<Q>, Error> {
        let v = ts.vector(&ctx, d, &outers)?;
        express(&vectors, &v).ok_or_else(|| Error::Input("product left the span of the pivot diagrams".into()))
    };
    let mut mult = Vec::with_capacity(diagrams.len());
    for a in &diagrams {
        let mut row = Vec::with_capacity(diagrams.len());
        for b in &diagrams {
            row.push(coords(&compose(a, b)?)?);
        }
        mult.push(row);
    }
    let unit = if diagrams.is_empty() { Vec::new() } else { coords(&Diagram::identity(n))? };
    let mut alg = TlAlgebra {
        n,
        basis: diagrams.iter().map(describe).collect(),
        diagrams,
        mult,
        unit,
        associative: false,
        unital: false,
    };
    alg.associative = alg.check_associative();
    alg.unital = alg.check_unital();
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::tl_numeric;
    use crate::matching::catalan;
    use crate::scalar::q;

    #[test]
    fn generic_dims_are_catalan() {
        let t = tl_numeric(q(3));
        for n in 1..=4 {
            let a = tl_algebra(&t, n, 6).unwrap();
            assert_eq!(a.dim() as u128, catalan(n));
            assert!(a.associative && a.unital);
        }
    }

    #[test]
    fn cup_cap_squares_to_d() {
        let t = tl_numeric(q(3));
        let a = tl_algebra(&t, 2, 6).unwrap();
        let e = (0..2).find(|&i| a.unit[i].is_zero()).expect("the non-identity basis element");
        let mut expect = vec![Q::zero(); 2];
        expect[e] = q(3);
        assert_eq!(a.mult[e][e], expect);
    }

    #[test]
    fn collapses() {
        assert_eq!(tl_algebra(&tl_numeric(q(1)), 2, 6).unwrap().dim(), 1);
        assert!(tl_algebra(&tl_numeric(q(0)), 3, 6).unwrap().dim() < 5);
    }
}
