//! The ω-evaluation of circular forms and decorated closed diagrams, the
//! evaluation `α = ε ∘ 𝓕`, and the pairings built from it.

use crate::algebra::{Elem, Quadruple};
use crate::closure::{glue_disk_outer, NestedClosure};
use crate::diagram::{compose, Content, Diagram, Label, OuterDiagram};
use crate::error::{AlgebraError, Error};
use crate::form::{CircularForm, Tree};
use crate::scalar::Ring;
use std::collections::HashMap;
use std::sync::RwLock;

/// Evaluation context for one quadruple with a memo of form values.
pub struct EvalContext<'q, S: Ring> {
    q: &'q Quadruple<S>,
    spherical: bool,
    memo: RwLock<HashMap<String, Elem<S>>>,
}

impl<'q, S: Ring> EvalContext<'q, S> {
    pub fn new(q: &'q Quadruple<S>) -> Self {
        EvalContext { q, spherical: false, memo: RwLock::new(HashMap::new()) }
    }

    /// Context that permits the spherical pairing; the caller vouches that
    /// the quadruple was validated as R-spherical.
    pub fn spherical(q: &'q Quadruple<S>, r_spherical: bool) -> Self {
        EvalContext { q, spherical: r_spherical, memo: RwLock::new(HashMap::new()) }
    }

    pub fn quadruple(&self) -> &'q Quadruple<S> {
        self.q
    }

    pub fn is_spherical(&self) -> bool {
        self.spherical
    }

    fn eval_tree(&self, t: &Tree) -> Elem<S> {
        if let Some(v) = self.memo.read().unwrap().get(t.encoding()) {
            return v.clone();
        }
        let v = self.q.omega_apply(&self.eval_form(t.inner()));
        self.memo.write().unwrap().insert(t.encoding().to_string(), v.clone());
        v
    }

    /// `𝓕(∅) = 1`, disjoint union to product, wrapping to ω.
    pub fn eval_form(&self, u: &CircularForm) -> Elem<S> {
        let a = &self.q.algebra;
        let mut acc = a.unit.clone();
        for t in u.trees() {
            acc = a.mul(&acc, &self.eval_tree(t));
        }
        acc
    }

    pub fn label(&self, l: &Label) -> Result<Elem<S>, AlgebraError> {
        let d = self.q.dim();
        match l {
            Label::Basis(i) if *i < d => Ok(self.q.algebra.basis_vector(*i)),
            Label::Basis(i) => Err(AlgebraError::BasisIndex(*i, d)),
            Label::Coords(v) if v.len() == d => Ok(v.iter().map(S::from_rational).collect()),
            Label::Coords(v) => Err(AlgebraError::CoordLength(v.len(), d)),
        }
    }

    /// Product of the contents of one face, loops evaluated innermost first.
    pub fn eval_contents(&self, list: &[Content]) -> Result<Elem<S>, AlgebraError> {
        let a = &self.q.algebra;
        let mut acc = a.unit.clone();
        for c in list {
            let v = match c {
                Content::Form(f) => self.eval_form(f),
                Content::Elem(l) => self.label(l)?,
                Content::Loop(inner) => self.q.omega_apply(&self.eval_contents(inner)?),
            };
            acc = a.mul(&acc, &v);
        }
        Ok(acc)
    }

    pub fn eval_closure(&self, c: &NestedClosure) -> Result<Elem<S>, AlgebraError> {
        self.eval_contents(&c.to_contents())
    }

    /// Value of a closed decorated diagram.
    pub fn eval_closed(&self, d: &Diagram) -> Result<Elem<S>, Error> {
        if !d.is_closed() {
            return Err(Error::Input("diagram has boundary points".into()));
        }
        Ok(self.eval_contents(d.closed_contents())?)
    }

    pub fn alpha_form(&self, u: &CircularForm) -> S {
        self.q.trace_apply(&self.eval_form(u))
    }

    pub fn alpha_contents(&self, list: &[Content]) -> Result<S, AlgebraError> {
        Ok(self.q.trace_apply(&self.eval_contents(list)?))
    }

    /// `α(yx)` for a disk diagram `x` closed by an outer diagram `y`.
    pub fn pair_general(&self, x: &Diagram, y: &OuterDiagram) -> Result<S, Error> {
        let c = glue_disk_outer(x, y)?;
        Ok(self.q.trace_apply(&self.eval_closure(&c)?))
    }

    /// Value in `Z` of the closure `yx` before the trace is applied.
    pub fn closure_value(&self, x: &Diagram, y: &OuterDiagram) -> Result<Elem<S>, Error> {
        let c = glue_disk_outer(x, y)?;
        Ok(self.eval_closure(&c)?)
    }

    /// `α(b̄ a)` for two diagrams with the same boundary.
    pub fn pair_spherical(&self, a: &Diagram, b: &Diagram) -> Result<S, Error> {
        if !self.spherical {
            return Err(AlgebraError::NotSpherical("the spherical pairing needs an R-spherical quadruple".into()).into());
        }
        let closed = compose(&b.reflect(), a)?;
        Ok(self.q.trace_apply(&self.eval_closed(&closed)?))
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }
}
