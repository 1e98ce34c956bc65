//! Built-in quadruples, addressable by name.

use crate::algebra::{CommAlgebra, Quadruple};
use crate::error::Error;
use crate::io::{parse_quadruple, ParamQuadruple};
use crate::scalar::{q, MPoly, Ring};
use crate::variety::Variety;

const FILES: &[(&str, &str)] = &[
    ("tl", include_str!("../fixtures/tl.json")),
    ("tl_numeric", include_str!("../fixtures/tl_numeric.json")),
    ("semisimple2", include_str!("../fixtures/semisimple2.json")),
    ("semisimple2_numeric", include_str!("../fixtures/semisimple2_numeric.json")),
    ("trunc_poly3_ddx", include_str!("../fixtures/trunc_poly3_ddx.json")),
    ("nilpotent_c2", include_str!("../fixtures/nilpotent_c2.json")),
];

/// Names of the shipped fixture files.
pub fn names() -> Vec<&'static str> {
    FILES.iter().map(|(n, _)| *n).collect()
}

pub fn source(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Resolves a fixture name (a `.json` suffix is ignored). Besides the
/// shipped files this accepts `trunc_poly{N}_ddx` and `semisimple{k}`.
pub fn builtin(name: &str) -> Option<ParamQuadruple> {
    let name = name.strip_suffix(".json").unwrap_or(name);
    if let Some(src) = source(name) {
        return Some(parse_quadruple(src, name).expect("shipped fixture parses"));
    }
    if let Some(n) = name.strip_prefix("trunc_poly").and_then(|r| r.strip_suffix("_ddx")) {
        return n.parse().ok().filter(|&n| (1..=32).contains(&n)).map(trunc_poly_ddx);
    }
    if let Some(k) = name.strip_prefix("semisimple") {
        return k.parse().ok().filter(|&k| (1..=4).contains(&k)).map(semisimple_symbolic);
    }
    None
}

pub fn builtin_or_err(name: &str) -> Result<ParamQuadruple, Error> {
    builtin(name).ok_or_else(|| Error::Input(format!("unknown fixture `{name}`")))
}

/// `ℚ[x]/(x^n)` with `ω = d/dx` and `ε` the coefficient of `x^{n-1}`.
pub fn trunc_poly_ddx(n: usize) -> ParamQuadruple {
    let c = |v: i64| MPoly::constant(q(v));
    let basis = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mut unit = vec![c(0); n];
    unit[0] = c(1);
    let mult = (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|l| c((i + j == l) as i64)).collect()).collect())
        .collect();
    let omega = (0..n).map(|i| (0..n).map(|j| c(if j == i + 1 { j as i64 } else { 0 })).collect()).collect();
    let trace = (0..n).map(|i| c((i == n - 1) as i64)).collect();
    let alg = CommAlgebra::new(basis, unit, mult, false).expect("well-formed");
    ParamQuadruple {
        name: format!("trunc_poly{n}_ddx"),
        quad: Quadruple::new(alg, omega, trace).expect("well-formed"),
        variety: Variety::free(Vec::new()),
    }
}

/// `k`-dimensional semisimple quadruple with symbolic `a_ij`, `b_i`
/// restricted to the spherical variety `b_i a_ij = b_j a_ji`.
pub fn semisimple_symbolic(k: usize) -> ParamQuadruple {
    let variety = Variety::spherical(k);
    let var = |name: String| MPoly::var(variety.index(&name).expect("declared"));
    let alg = CommAlgebra::<MPoly>::semisimple(k);
    let omega = (1..=k).map(|i| (1..=k).map(|j| var(format!("a{i}{j}"))).collect()).collect();
    let trace = (1..=k).map(|i| var(format!("b{i}"))).collect();
    ParamQuadruple {
        name: format!("semisimple{k}"),
        quad: Quadruple::new(alg, omega, trace).expect("well-formed"),
        variety,
    }
}

/// The one-dimensional quadruple with loop value `d`.
pub fn tl_numeric<S: Ring>(d: S) -> Quadruple<S> {
    let alg = CommAlgebra::new(vec!["1".into()], vec![S::one()], vec![vec![vec![S::one()]]], true).expect("well-formed");
    Quadruple::new(alg, vec![vec![d]], vec![S::one()]).expect("well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::DEFAULT_TRIALS;

    #[test]
    fn shipped_fixtures_are_valid() {
        for n in names() {
            let f = builtin(n).unwrap();
            let r = f.validate(DEFAULT_TRIALS, 0);
            assert!(r.axioms_hold(), "{n}: {:?}", r.failed_axioms());
        }
    }

    #[test]
    fn generated_trunc3_matches_file() {
        let a = builtin("trunc_poly3_ddx").unwrap();
        assert_eq!(a.quad, trunc_poly_ddx(3).quad);
    }

    #[test]
    fn semisimple2_generated_matches_file() {
        let a = builtin("semisimple2").unwrap();
        let b = semisimple_symbolic(2);
        assert_eq!(a.quad, b.quad);
        assert_eq!(a.variety, b.variety);
    }

    #[test]
    fn sphericality_flags() {
        let r = builtin("semisimple2").unwrap().validate(DEFAULT_TRIALS, 0);
        assert!(r.r_spherical && !r.z_spherical);
        let r = builtin("nilpotent_c2").unwrap().validate(DEFAULT_TRIALS, 0);
        assert!(!r.z_spherical && !r.r_spherical);
        let r = builtin("tl").unwrap().validate(DEFAULT_TRIALS, 0);
        assert!(r.z_spherical && r.r_spherical);
    }
}
