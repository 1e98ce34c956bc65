use super::{fmt_rational, Q, Ring};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

type Monomial = Vec<u32>;

/// Sparse multivariate polynomial with rational coefficients.
///
/// Variables are positional; names live with whoever owns the variable list.
/// Exponent vectors are stored with trailing zeros trimmed so that equal
/// polynomials have identical term maps.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Q>,
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect();
    trim(out)
}

fn mono_div(a: &[u32], b: &[u32]) -> Option<Monomial> {
    if b.len() > a.len() && b[a.len()..].iter().any(|&e| e > 0) {
        return None;
    }
    let mut out = Vec::with_capacity(a.len());
    for (i, &ea) in a.iter().enumerate() {
        let eb = b.get(i).copied().unwrap_or(0);
        out.push(ea.checked_sub(eb)?);
    }
    Some(trim(out))
}

fn degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

/// Graded lexicographic comparison, x0 > x1 > ...
fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    degree(a).cmp(&degree(b)).then_with(|| {
        let n = a.len().max(b.len());
        for i in 0..n {
            let ea = a.get(i).copied().unwrap_or(0);
            let eb = b.get(i).copied().unwrap_or(0);
            match ea.cmp(&eb) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

impl MPoly {
    pub fn constant(c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { terms }
    }

    /// The variable with position `i`.
    pub fn var(i: usize) -> Self {
        let mut m = vec![0; i + 1];
        m[i] = 1;
        MPoly::monomial(m, Q::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(exps), c);
        }
        MPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Q)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| degree(m)).max().unwrap_or(0)
    }

    /// Degree in the variables selected by `mask(i)`.
    pub fn partial_degree(&self, mask: impl Fn(usize) -> bool) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().enumerate().filter(|(i, _)| mask(*i)).map(|(_, e)| *e).sum())
            .max()
            .unwrap_or(0)
    }

    /// Minimum degree over terms in the selected variables.
    pub fn partial_low_degree(&self, mask: impl Fn(usize) -> bool) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().enumerate().filter(|(i, _)| mask(*i)).map(|(_, e)| *e).sum())
            .min()
            .unwrap_or(0)
    }

    pub fn num_vars_used(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    let x = point.get(i).cloned().unwrap_or_else(Q::zero);
                    t *= super::pow(&x, e);
                }
            }
            acc += t;
        }
        acc
    }

    /// Evaluation into any ring that embeds the rationals.
    pub fn eval_in<R: Ring>(&self, point: &[R]) -> R {
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = R::from_rational(c);
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t * super::pow(&point[i], e);
                }
            }
            acc = acc + t;
        }
        acc
    }

    fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let vanished = {
            let e = self.terms.entry(m.clone()).or_insert_with(Q::zero);
            *e += c;
            e.is_zero()
        };
        if vanished {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact_poly(&self, d: &MPoly) -> Option<MPoly> {
        let (lm, lc) = d.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = mono_div(rm, &lm)?;
            let c = rc / &lc;
            let t = MPoly::monomial(m, c);
            rem = rem - t.clone() * d.clone();
            quot = quot + t;
        }
        Some(quot)
    }

    /// Formats with the given variable names (falls back to `x{i}`).
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut ts: Vec<(&Monomial, &Q)> = self.terms.iter().collect();
        ts.sort_by(|a, b| grlex(b.0, a.0));
        let mut out = String::new();
        for (idx, (m, c)) in ts.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = names.get(i).cloned().unwrap_or_else(|| format!("x{i}"));
                factors.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            if factors.is_empty() {
                out.push_str(&fmt_rational(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&fmt_rational(&abs));
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(Q::one())
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        self + (-rhs)
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        let mut terms: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = mono_mul(ma, mb);
                *terms.entry(m).or_insert_with(Q::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MPoly { terms }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl Ring for MPoly {
    fn from_rational(q: &Q) -> Self {
        MPoly::constant(q.clone())
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div_exact_poly(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn x() -> MPoly {
        MPoly::var(0)
    }
    fn y() -> MPoly {
        MPoly::var(1)
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let p = (x() + y()) * (x() - y());
        let expect = x() * x() - y() * y();
        assert_eq!(p, expect);
        assert!((p.clone() - expect).is_zero());
        assert_eq!(p.total_degree(), 2);
    }

    #[test]
    fn exact_division() {
        let a = x() * x() - MPoly::one();
        let b = x() - MPoly::one();
        assert_eq!(a.div_exact_poly(&b), Some(x() + MPoly::one()));
        assert_eq!(x().div_exact_poly(&y()), None);
        let c = (x() * y() + MPoly::constant(q(3))) * (y() - x());
        assert_eq!(c.div_exact_poly(&(y() - x())), Some(x() * y() + MPoly::constant(q(3))));
    }

    #[test]
    fn display_graded() {
        let names = vec!["d".to_string()];
        let p = x() * x() * x() * x() - x() * x();
        assert_eq!(p.display_with(&names), "d^4 - d^2");
        assert_eq!(MPoly::constant(q(-3)).display_with(&names), "-3");
    }

    #[test]
    fn evaluation() {
        let p = x() * y() + MPoly::constant(q(2));
        assert_eq!(p.eval(&[q(3), q(4)]), q(14));
    }
}
