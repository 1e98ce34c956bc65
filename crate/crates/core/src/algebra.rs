//! Finite-dimensional commutative algebras given by structure constants,
//! with a wrapping map ω and a trace ε.

use crate::error::AlgebraError;
use crate::linalg::{express, EchelonSpan};
use crate::scalar::{Field, Ring};

/// Coordinates of an element in the algebra basis.
pub type Elem<S> = Vec<S>;

#[derive(Clone, Debug, PartialEq)]
pub struct CommAlgebra<S> {
    pub basis: Vec<String>,
    pub unit: Elem<S>,
    /// `mult[i][j]` = coordinates of `e_i e_j`.
    pub mult: Vec<Vec<Elem<S>>>,
    pub idempotent_basis: bool,
}

impl<S: Ring> CommAlgebra<S> {
    pub fn new(
        basis: Vec<String>,
        unit: Elem<S>,
        mult: Vec<Vec<Elem<S>>>,
        idempotent_basis: bool,
    ) -> Result<Self, AlgebraError> {
        let d = basis.len();
        if d == 0 {
            return Err(AlgebraError::Shape("dimension must be positive".into()));
        }
        if unit.len() != d {
            return Err(AlgebraError::Shape(format!("unit has length {} for dimension {d}", unit.len())));
        }
        if mult.len() != d || mult.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            return Err(AlgebraError::Shape("mult must be a dim x dim x dim array".into()));
        }
        Ok(CommAlgebra { basis, unit, mult, idempotent_basis })
    }

    /// The algebra `S^d` with orthogonal idempotents `e_i e_j = δ_ij e_i`.
    pub fn semisimple(d: usize) -> Self {
        let basis = (1..=d).map(|i| format!("e{i}")).collect();
        let unit = vec![S::one(); d];
        let mult = (0..d)
            .map(|i| (0..d).map(|j| (0..d).map(|l| if i == j && j == l { S::one() } else { S::zero() }).collect()).collect())
            .collect();
        CommAlgebra { basis, unit, mult, idempotent_basis: true }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn zero(&self) -> Elem<S> {
        vec![S::zero(); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Elem<S> {
        let mut v = self.zero();
        v[i] = S::one();
        v
    }

    pub fn mul(&self, x: &[S], y: &[S]) -> Elem<S> {
        let d = self.dim();
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate().take(d) {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate().take(d) {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.clone() * yj.clone();
                for (l, v) in self.mult[i][j].iter().enumerate() {
                    if !v.is_zero() {
                        out[l] = out[l].clone() + c.clone() * v.clone();
                    }
                }
            }
        }
        out
    }

    pub fn map<T: Ring>(&self, f: &impl Fn(&S) -> T) -> CommAlgebra<T> {
        CommAlgebra {
            basis: self.basis.clone(),
            unit: self.unit.iter().map(f).collect(),
            mult: self.mult.iter().map(|r| r.iter().map(|v| v.iter().map(f).collect()).collect()).collect(),
            idempotent_basis: self.idempotent_basis,
        }
    }
}

pub fn add<S: Ring>(x: &[S], y: &[S]) -> Elem<S> {
    x.iter().zip(y).map(|(a, b)| a.clone() + b.clone()).collect()
}

pub fn sub<S: Ring>(x: &[S], y: &[S]) -> Elem<S> {
    x.iter().zip(y).map(|(a, b)| a.clone() - b.clone()).collect()
}

pub fn scale<S: Ring>(c: &S, x: &[S]) -> Elem<S> {
    x.iter().map(|a| c.clone() * a.clone()).collect()
}

/// Commutative algebra `Z` with wrapping map `ω` and trace `ε`.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadruple<S> {
    pub algebra: CommAlgebra<S>,
    /// `omega[i][j] = a_ij`, so that `ω(e_j) = Σ_i a_ij e_i`.
    pub omega: Vec<Vec<S>>,
    pub trace: Vec<S>,
}

impl<S: Ring> Quadruple<S> {
    pub fn new(algebra: CommAlgebra<S>, omega: Vec<Vec<S>>, trace: Vec<S>) -> Result<Self, AlgebraError> {
        let d = algebra.dim();
        if omega.len() != d || omega.iter().any(|r| r.len() != d) {
            return Err(AlgebraError::Shape("omega must be dim x dim".into()));
        }
        if trace.len() != d {
            return Err(AlgebraError::Shape("trace must have length dim".into()));
        }
        Ok(Quadruple { algebra, omega, trace })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn omega_apply(&self, x: &[S]) -> Elem<S> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                (0..d).fold(S::zero(), |acc, j| {
                    if x[j].is_zero() {
                        acc
                    } else {
                        acc + self.omega[i][j].clone() * x[j].clone()
                    }
                })
            })
            .collect()
    }

    pub fn trace_apply(&self, x: &[S]) -> S {
        crate::linalg::dot(&self.trace, x)
    }

    /// `S_ij = ε(e_i ω(e_j))`.
    pub fn sphericality_matrix(&self) -> Vec<Vec<S>> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let w = self.omega_apply(&self.algebra.basis_vector(j));
                        self.trace_apply(&self.algebra.mul(&self.algebra.basis_vector(i), &w))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Quadruple<T> {
        Quadruple {
            algebra: self.algebra.map(&f),
            omega: self.omega.iter().map(|r| r.iter().map(&f).collect()).collect(),
            trace: self.trace.iter().map(&f).collect(),
        }
    }
}

/// Outcome of each axiom and property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub commutative: bool,
    pub associative: bool,
    pub unital: bool,
    pub idempotent_basis: Option<bool>,
    pub trace_nonzero: bool,
    pub z_spherical: bool,
    pub r_spherical: bool,
}

impl ValidationReport {
    /// Structural axioms only; sphericality is a property, not an axiom.
    pub fn axioms_hold(&self) -> bool {
        self.commutative && self.associative && self.unital && self.trace_nonzero && self.idempotent_basis != Some(false)
    }

    /// `(name, holds)` for every check, axioms first.
    pub fn entries(&self) -> Vec<(&'static str, bool)> {
        let mut v = vec![
            ("commutative", self.commutative),
            ("associative", self.associative),
            ("unital", self.unital),
            ("trace_nonzero", self.trace_nonzero),
        ];
        if let Some(b) = self.idempotent_basis {
            v.push(("idempotent_basis", b));
        }
        v.push(("z_spherical", self.z_spherical));
        v.push(("r_spherical", self.r_spherical));
        v
    }

    /// Names of the failed structural axioms.
    pub fn failed_axioms(&self) -> Vec<&'static str> {
        self.entries()
            .into_iter()
            .filter(|(n, ok)| !ok && !n.ends_with("spherical"))
            .map(|(n, _)| n)
            .collect()
    }
}

/// Checks every axiom; `vanishes` decides whether a scalar is zero (exactly,
/// or on a constraint variety for symbolic coefficients).
pub fn validate_with<S: Ring>(q: &Quadruple<S>, vanishes: &dyn Fn(&S) -> bool) -> ValidationReport {
    let a = &q.algebra;
    let d = a.dim();
    let zero_vec = |v: &[S]| v.iter().all(vanishes);
    let e = |i: usize| a.basis_vector(i);

    let commutative = (0..d).all(|i| (0..i).all(|j| zero_vec(&sub(&a.mult[i][j], &a.mult[j][i]))));
    let associative = (0..d).all(|i| {
        (0..d).all(|j| {
            (0..d).all(|l| {
                let lhs = a.mul(&a.mul(&e(i), &e(j)), &e(l));
                let rhs = a.mul(&e(i), &a.mul(&e(j), &e(l)));
                zero_vec(&sub(&lhs, &rhs))
            })
        })
    });
    let unital = (0..d).all(|i| {
        zero_vec(&sub(&a.mul(&a.unit, &e(i)), &e(i))) && zero_vec(&sub(&a.mul(&e(i), &a.unit), &e(i)))
    });
    let idempotent_basis = a.idempotent_basis.then(|| {
        (0..d).all(|i| {
            (0..d).all(|j| {
                let expect = if i == j { e(i) } else { a.zero() };
                zero_vec(&sub(&a.mult[i][j], &expect))
            })
        })
    });
    let trace_nonzero = !q.trace.iter().all(vanishes);
    let z_spherical = (0..d).all(|i| {
        (0..d).all(|j| {
            let lhs = a.mul(&q.omega_apply(&e(i)), &e(j));
            let rhs = a.mul(&e(i), &q.omega_apply(&e(j)));
            zero_vec(&sub(&lhs, &rhs))
        })
    });
    let s = q.sphericality_matrix();
    let r_spherical = (0..d).all(|i| (0..i).all(|j| vanishes(&(s[i][j].clone() - s[j][i].clone()))));
    ValidationReport { commutative, associative, unital, idempotent_basis, trace_nonzero, z_spherical, r_spherical }
}

pub fn validate_exact<S: Ring>(q: &Quadruple<S>) -> ValidationReport {
    validate_with(q, &|x: &S| x.is_zero())
}

/// The ω-generated subalgebra `Z'`: smallest subalgebra containing 1 and
/// closed under ω.
#[derive(Clone, Debug)]
pub struct Subalgebra<F> {
    /// Basis vectors in coordinates of the ambient algebra; the first is 1.
    pub basis: Vec<Elem<F>>,
    pub surjective: bool,
}

impl<F: Field> Subalgebra<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `x` (assumed in the subalgebra) in the subalgebra basis.
    pub fn coords(&self, x: &[F]) -> Option<Vec<F>> {
        express(&self.basis, x)
    }
}

pub fn omega_generated_subalgebra<F: Field>(q: &Quadruple<F>) -> Subalgebra<F> {
    let a = &q.algebra;
    let d = a.dim();
    let mut span = EchelonSpan::new(d);
    let mut basis: Vec<Elem<F>> = Vec::new();
    if span.insert(a.unit.clone()) {
        basis.push(a.unit.clone());
    }
    let mut i = 0;
    while i < basis.len() {
        let mut candidates = vec![q.omega_apply(&basis[i])];
        for j in 0..=i {
            candidates.push(a.mul(&basis[i], &basis[j]));
        }
        for c in candidates {
            if span.insert(c.clone()) {
                basis.push(c);
            }
        }
        i += 1;
    }
    let surjective = basis.len() == d;
    Subalgebra { basis, surjective }
}

/// The kernel `K ⊂ Z'` of all functionals `x ↦ ε(z₀ ω(z₁ ω(⋯ ω(z_r x))))`.
#[derive(Clone, Debug)]
pub struct Radical<F> {
    pub subalgebra: Subalgebra<F>,
    /// Spanning functionals as covectors on the ambient algebra.
    pub functionals: Vec<Vec<F>>,
    /// Basis of `K` in ambient coordinates.
    pub kernel: Vec<Elem<F>>,
    /// Number of closure rounds until the functional span stabilised.
    pub rounds: usize,
}

impl<F: Field> Radical<F> {
    pub fn dim_k(&self) -> usize {
        self.kernel.len()
    }

    pub fn dim_a0(&self) -> usize {
        self.subalgebra.dim() - self.kernel.len()
    }
}

pub fn pairing_radical<F: Field>(q: &Quadruple<F>) -> Radical<F> {
    let sub = omega_generated_subalgebra(q);
    let a = &q.algebra;
    let d = a.dim();
    let covector = |f: &dyn Fn(&Elem<F>) -> F| -> Vec<F> { (0..d).map(|l| f(&a.basis_vector(l))).collect() };

    let mut span = EchelonSpan::new(d);
    let mut funcs: Vec<Vec<F>> = Vec::new();
    for z in &sub.basis {
        let f = covector(&|x| q.trace_apply(&a.mul(z, x)));
        if span.insert(f.clone()) {
            funcs.push(f);
        }
    }
    let mut frontier = 0;
    let mut rounds = 0;
    while frontier < funcs.len() {
        rounds += 1;
        let end = funcs.len();
        for idx in frontier..end {
            let f = funcs[idx].clone();
            let mut new = vec![covector(&|x| crate::linalg::dot(&f, &q.omega_apply(x)))];
            for z in &sub.basis {
                new.push(covector(&|x| crate::linalg::dot(&f, &a.mul(z, x))));
            }
            for g in new {
                if span.insert(g.clone()) {
                    funcs.push(g);
                }
            }
        }
        frontier = end;
    }

    // restrict to Z' and take the common kernel
    let m = crate::linalg::Matrix::from_fn(funcs.len(), sub.dim(), |i, j| crate::linalg::dot(&funcs[i], &sub.basis[j]));
    let (_, ker) = crate::linalg::rank_kernel(&m);
    let kernel = ker
        .iter()
        .map(|c| {
            let mut v = a.zero();
            for (cj, bj) in c.iter().zip(&sub.basis) {
                v = add(&v, &scale(cj, bj));
            }
            v
        })
        .collect();
    Radical { subalgebra: sub, functionals: funcs, kernel, rounds }
}

/// The quotient `A(0) = Z'/K` with the induced product, ω and ε; `None`
/// when the quotient is zero.
pub fn state_algebra_zero<F: Field>(q: &Quadruple<F>) -> Option<Quadruple<F>> {
    let rad = pairing_radical(q);
    let a = &q.algebra;
    // representatives: subalgebra basis vectors independent modulo K
    let mut span = EchelonSpan::new(a.dim());
    for k in &rad.kernel {
        span.insert(k.clone());
    }
    let mut reps: Vec<Elem<F>> = Vec::new();
    for b in &rad.subalgebra.basis {
        if span.insert(b.clone()) {
            reps.push(b.clone());
        }
    }
    let r = reps.len();
    if r == 0 {
        return None;
    }
    let mut all = reps.clone();
    all.extend(rad.kernel.iter().cloned());
    let reduce = |x: &Elem<F>| -> Vec<F> {
        let c = express(&all, x).expect("element of Z'");
        c[..r].to_vec()
    };
    let basis_names = (0..r).map(|i| format!("u{}", i + 1)).collect();
    let unit = reduce(&a.unit);
    let mult = (0..r).map(|i| (0..r).map(|j| reduce(&a.mul(&reps[i], &reps[j]))).collect()).collect();
    let omega_cols: Vec<Vec<F>> = (0..r).map(|j| reduce(&q.omega_apply(&reps[j]))).collect();
    let omega = (0..r).map(|i| (0..r).map(|j| omega_cols[j][i].clone()).collect()).collect();
    let trace = reps.iter().map(|x| q.trace_apply(x)).collect();
    let alg = CommAlgebra::new(basis_names, unit, mult, false).expect("well-shaped quotient");
    Some(Quadruple::new(alg, omega, trace).expect("well-shaped quotient"))
}
