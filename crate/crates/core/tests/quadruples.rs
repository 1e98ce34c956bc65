use skein_core::algebra::{omega_generated_subalgebra, pairing_radical, validate_exact};
use skein_core::fixtures::{builtin, names, semisimple_symbolic, tl_numeric};
use skein_core::io::{parse_quadruple, quadruple_to_json};
use skein_core::scalar::{q, Q};
use skein_core::Quadruple;

fn broken(name: &str) -> Quadruple<Q> {
    let path = format!("{}/tests/fixtures/broken/{name}.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(path).unwrap();
    parse_quadruple(&text, name).unwrap().numeric().unwrap()
}

#[test]
fn broken_fixtures_fail_only_their_axiom() {
    for (file, axiom) in [
        ("noncommutative", "commutative"),
        ("nonassociative", "associative"),
        ("broken_unit", "unital"),
        ("zero_trace", "trace_nonzero"),
    ] {
        let report = validate_exact(&broken(file));
        assert_eq!(report.failed_axioms(), vec![axiom], "{file}");
        assert!(!report.axioms_hold());
    }
}

#[test]
fn shipped_fixtures_round_trip_and_validate() {
    for name in names() {
        let p = builtin(name).unwrap();
        assert!(p.validate(25, 0).axioms_hold(), "{name}");
        let text = quadruple_to_json(&p).to_string();
        let back = parse_quadruple(&text, name).unwrap();
        assert_eq!(back.quad.algebra.mult, p.quad.algebra.mult, "{name}");
        assert_eq!(back.quad.omega, p.quad.omega, "{name}");
        assert_eq!(back.quad.trace, p.quad.trace, "{name}");
    }
}

#[test]
fn radical_dimensions() {
    for d in [-3, -1, 1, 2, 7] {
        let r = pairing_radical(&tl_numeric(q(d)));
        assert_eq!((r.subalgebra.dim(), r.dim_k(), r.dim_a0()), (1, 0, 1), "d={d}");
    }
    let r = pairing_radical(&tl_numeric(q(0)));
    assert_eq!(r.dim_a0(), 1);

    let trunc = builtin("trunc_poly3_ddx").unwrap().numeric().unwrap();
    let r = pairing_radical(&trunc);
    assert_eq!((r.subalgebra.dim(), r.dim_a0()), (1, 0));

    let ss = builtin("semisimple2_numeric").unwrap().numeric().unwrap();
    let r = pairing_radical(&ss);
    assert_eq!((r.subalgebra.dim(), r.dim_a0()), (2, 2));

    for k in 2..=3 {
        let p = semisimple_symbolic(k);
        for point in p.variety.sample_points(5, 11) {
            let quad = p.specialize(&point);
            assert_eq!(omega_generated_subalgebra(&quad).dim(), k);
            assert_eq!(pairing_radical(&quad).dim_a0(), k);
        }
    }

    // nilpotent: ω(1) = c, so Z' = Z; ε(c) = 1 separates everything
    let nil = builtin("nilpotent_c2").unwrap().numeric().unwrap();
    let r = pairing_radical(&nil);
    assert_eq!((r.subalgebra.dim(), r.dim_a0()), (2, 2));
}

#[test]
fn trunc_poly_family_is_valid_and_degenerate() {
    for n in 1..=6 {
        let p = builtin(&format!("trunc_poly{n}_ddx")).unwrap();
        let quad = p.numeric().unwrap();
        assert!(validate_exact(&quad).axioms_hold(), "n={n}");
        assert_eq!(pairing_radical(&quad).dim_a0(), if n == 1 { 1 } else { 0 }, "n={n}");
    }
}
