use crate::{Format, Global, Kind, Mode, QuadArgs, Report};
use serde_json::{json, Value};
use skein_core::algebra::{pairing_radical, validate_exact, ValidationReport};
use skein_core::error::{AlgebraError, BoundError, Error};
use skein_core::experiment::generic_nondegeneracy_experiment;
use skein_core::fixtures::builtin;
use skein_core::form::{enumerate_circular_forms, forest_of_form, DEFAULT_FORM_BOUND};
use skein_core::gram::{gram_blocks, gram_report, seq_string, state_dim, state_dim_spherical, PairingMode, DEFAULT_GRAM_BOUND};
use skein_core::io::{parse_diagram, parse_outer, parse_quadruple};
use skein_core::matching::{enumerate_matchings, enumerate_outer_matchings, DEFAULT_MATCHING_BOUND};
use skein_core::meander::meander_check;
use skein_core::scalar::{fmt_rational, parse_rational, Q};
use skein_core::tables::table_verify;
use skein_core::tl::tl_algebra;
use skein_core::{CircularForm, Diagram, EvalContext, ParamQuadruple, Quadruple};
use std::fmt::Write;

type Result<T> = std::result::Result<T, Error>;

fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

fn ok(json: Value, table: String) -> Result<Report> {
    Ok(Report { json, table, failed: false })
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| input(format!("cannot read {path}: {e}")))
}

fn vec_str(v: &[Q]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

fn elem_str(v: &[Q]) -> String {
    format!("({})", vec_str(v).join(", "))
}

/// Loads a quadruple from a file, falling back to the builtin fixtures.
fn load(args: &QuadArgs) -> Result<ParamQuadruple> {
    let p = if std::path::Path::new(&args.quadruple).is_file() {
        let stem = std::path::Path::new(&args.quadruple).file_stem().and_then(|s| s.to_str()).unwrap_or("quadruple");
        parse_quadruple(&read(&args.quadruple)?, stem)?
    } else {
        builtin(&args.quadruple).ok_or_else(|| input(format!("no file or builtin fixture named `{}`", args.quadruple)))?
    };
    let mut values = Vec::new();
    if let Some(d) = &args.d {
        values.push(("d".to_string(), parse_rational(d).ok_or_else(|| input(format!("bad value `{d}` for d")))?));
    }
    for kv in &args.params {
        let (k, v) = kv.split_once('=').ok_or_else(|| input(format!("expected NAME=VALUE, got `{kv}`")))?;
        values.push((k.trim().to_string(), parse_rational(v.trim()).ok_or_else(|| input(format!("bad value `{v}` for {k}")))?));
    }
    if values.is_empty() {
        return Ok(p);
    }
    // solved coordinates follow from the free ones
    let vars = p.vars().to_vec();
    let given = |name: &str| values.iter().any(|(n, _)| n == name);
    let free_given = (0..vars.len()).filter(|i| !p.variety.solved.iter().any(|(j, _)| j == i)).all(|i| given(&vars[i]));
    if free_given && vars.iter().any(|v| !given(v)) {
        let mut point: Vec<Q> = vars.iter().map(|v| values.iter().find(|(n, _)| n == v).map_or_else(|| Q::from_integer(0.into()), |(_, x)| x.clone())).collect();
        if !p.variety.complete(&mut point) {
            return Err(input("parameter values make a solved coordinate undefined"));
        }
        values = vars.iter().cloned().zip(point).collect();
    }
    p.substitute(&values)
}

fn check_axioms(report: &ValidationReport) -> Result<()> {
    let failed = report.failed_axioms();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(input(format!("quadruple violates {}", failed.join(", "))))
    }
}

/// Numeric quadruple that satisfies the axioms.
fn numeric(args: &QuadArgs) -> Result<(Quadruple<Q>, ValidationReport)> {
    let p = load(args)?;
    let quad = p.numeric().ok_or_else(|| {
        input(format!("quadruple has free parameters {:?}; give values with --d or --param", p.used_vars()))
    })?;
    let report = validate_exact(&quad);
    check_axioms(&report)?;
    Ok((quad, report))
}

fn bound(g: &Global, default: usize) -> usize {
    g.bound.unwrap_or(default)
}

pub fn enumerate(g: &Global, kind: Kind, n: usize) -> Result<Report> {
    let items: Vec<Value> = match kind {
        Kind::Forms => enumerate_circular_forms(n, bound(g, DEFAULT_FORM_BOUND))?.iter().map(|u| json!(u.encoding())).collect(),
        Kind::Matchings => enumerate_matchings(n, bound(g, DEFAULT_MATCHING_BOUND))?
            .iter()
            .map(|m| json!(m.arcs().iter().map(|(a, b)| [a + 1, b + 1]).collect::<Vec<_>>()))
            .collect(),
        Kind::Outer => enumerate_outer_matchings(n, bound(g, DEFAULT_MATCHING_BOUND))?
            .iter()
            .map(|o| {
                json!({
                    "arcs": o.matching().arcs().iter().map(|(a, b)| [a + 1, b + 1]).collect::<Vec<_>>(),
                    "infinity_face": o.infinity_face() + 1,
                })
            })
            .collect(),
    };
    let mut table = format!("{} items\n", items.len());
    for v in &items {
        let _ = writeln!(table, "{}", v.as_str().map_or_else(|| v.to_string(), str::to_string));
    }
    ok(json!({ "n": n, "count": items.len(), "items": items }), table)
}

pub fn canon(form: &str) -> Result<Report> {
    let u = CircularForm::parse(form)?;
    let sph = u.spherical_canonical();
    let parents: Vec<Value> = forest_of_form(&u).parent.iter().map(|p| p.map_or(json!(0), |v| json!(v + 1))).collect();
    let table = format!(
        "canonical: {}\nspherical: {}\ncircles:   {}\nparents:   {}\n",
        u.encoding(),
        sph.encoding(),
        u.circle_count(),
        parents.iter().map(Value::to_string).collect::<Vec<_>>().join(" ")
    );
    ok(
        json!({ "canonical": u.encoding(), "spherical": sph.encoding(), "circles": u.circle_count(), "parents": parents }),
        table,
    )
}

pub fn eval(_g: &Global, args: &QuadArgs, form: Option<&str>, diagram: Option<&str>) -> Result<Report> {
    let (quad, _) = numeric(args)?;
    let ctx = EvalContext::new(&quad);
    let value = match (form, diagram) {
        (Some(f), None) => ctx.eval_form(&CircularForm::parse(f)?),
        (None, Some(path)) => ctx.eval_closed(&parse_diagram(&read(path)?)?)?,
        _ => return Err(input("give exactly one of --form and --diagram")),
    };
    let alpha = quad.trace_apply(&value);
    let table = if quad.dim() == 1 {
        format!("{}\n", fmt_rational(&alpha))
    } else {
        format!("element: {}\nalpha:   {}\n", elem_str(&value), fmt_rational(&alpha))
    };
    ok(json!({ "element": vec_str(&value), "alpha": fmt_rational(&alpha) }), table)
}

pub fn pair(_g: &Global, args: &QuadArgs, diagrams: &[String], outer: Option<&str>) -> Result<Report> {
    let (quad, report) = numeric(args)?;
    let disks: Vec<Diagram> = diagrams.iter().map(|p| read(p).and_then(|t| parse_diagram(&t))).collect::<Result<_>>()?;
    let (mode, value) = match (disks.as_slice(), outer) {
        ([x], Some(path)) => {
            let y = parse_outer(&read(path)?)?;
            ("general", EvalContext::new(&quad).pair_general(x, &y)?)
        }
        ([a, b], None) => {
            if !report.r_spherical {
                return Err(AlgebraError::NotSpherical("the disk-disk pairing needs an R-spherical quadruple".into()).into());
            }
            ("spherical", EvalContext::spherical(&quad, true).pair_spherical(a, b)?)
        }
        _ => return Err(input("give two --diagram files, or one --diagram and one --outer")),
    };
    ok(json!({ "mode": mode, "value": fmt_rational(&value) }), format!("{}\n", fmt_rational(&value)))
}

pub fn gram(g: &Global, args: &QuadArgs, n: usize, mode: Mode, blocks: bool) -> Result<Report> {
    let (quad, report) = numeric(args)?;
    let b = bound(g, DEFAULT_GRAM_BOUND);
    if blocks {
        if !report.r_spherical {
            return Err(AlgebraError::NotSpherical("Gram blocks need an R-spherical quadruple".into()).into());
        }
        let ctx = EvalContext::spherical(&quad, true);
        let list = gram_blocks(&ctx, n, b)?;
        let mut table = format!("{:<14} {:>5}  det\n", "seq", "size");
        let mut out = Vec::new();
        for blk in list.iter().filter(|blk| !blk.items.is_empty()) {
            let det = fmt_rational(&blk.det());
            let _ = writeln!(table, "{:<14} {:>5}  {}", seq_string(&blk.seq), blk.items.len(), det);
            out.push(json!({ "seq": seq_string(&blk.seq), "size": blk.items.len(), "det": det }));
        }
        return ok(json!({ "n": n, "blocks": out }), table);
    }
    let pm = match mode {
        Mode::Spherical => PairingMode::Spherical,
        Mode::General => PairingMode::General,
    };
    let r = gram_report(&quad, n, pm, report.r_spherical, b)?;
    let rows: Vec<Vec<String>> = r.matrix.to_rows().iter().map(|row| vec_str(row)).collect();
    let det = r.det.as_ref().map(fmt_rational);
    let mut table = format!("{} x {}  rank {}", r.matrix.rows(), r.matrix.cols(), r.rank);
    if let Some(d) = &det {
        let _ = write!(table, "  det {d}");
    }
    table.push('\n');
    if g.format == Format::Table {
        for (label, row) in r.rows.iter().zip(&rows) {
            let _ = writeln!(table, "{label:<40} {}", row.join(" "));
        }
    }
    ok(
        json!({
            "n": n,
            "mode": if mode == Mode::Spherical { "spherical" } else { "general" },
            "rows": r.rows,
            "cols": r.cols,
            "matrix": rows,
            "rank": r.rank,
            "det": det,
            "symmetric": r.symmetric,
            "kernel": r.kernel.iter().map(|v| vec_str(v)).collect::<Vec<_>>(),
        }),
        table,
    )
}

pub fn statespace(g: &Global, args: &QuadArgs, n: usize, mode: Mode) -> Result<Report> {
    let (quad, report) = numeric(args)?;
    let b = bound(g, DEFAULT_GRAM_BOUND);
    if n > b {
        return Err(BoundError { what: "state space level", value: n, bound: b }.into());
    }
    let mut dims = Vec::new();
    for k in 0..=n {
        dims.push(match mode {
            Mode::General => state_dim(&quad, k, b)?,
            Mode::Spherical => state_dim_spherical(&quad, k, report.r_spherical, b)?,
        });
    }
    let table = dims.iter().enumerate().map(|(k, d)| format!("A({k}) = {d}\n")).collect();
    ok(json!({ "dims": dims }), table)
}

pub fn tl(g: &Global, args: &QuadArgs, n: usize) -> Result<Report> {
    let (quad, _) = numeric(args)?;
    let t = tl_algebra(&quad, n, bound(g, DEFAULT_GRAM_BOUND))?;
    let mut table = format!("dim {}  associative {}  unital {}\n", t.dim(), t.associative, t.unital);
    for (i, b) in t.basis.iter().enumerate() {
        let _ = writeln!(table, "b{} = {b}", i + 1);
    }
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            let _ = writeln!(table, "b{} b{} = {}", i + 1, j + 1, elem_str(&t.mult[i][j]));
        }
    }
    let mult: Vec<Vec<Vec<String>>> = t.mult.iter().map(|row| row.iter().map(|v| vec_str(v)).collect()).collect();
    ok(
        json!({
            "n": n,
            "dim": t.dim(),
            "basis": t.basis,
            "mult": mult,
            "unit": vec_str(&t.unit),
            "associative": t.associative,
            "unital": t.unital,
        }),
        table,
    )
}

pub fn meander(n: usize) -> Result<Report> {
    let rows = meander_check(n)?;
    let mut table = String::new();
    let mut out = Vec::new();
    let mut failed = false;
    for r in &rows {
        let det = r.det.as_ref().map(|p| p.display_with(&["d".to_string()]));
        let ok = r.full_rank_generic() && r.deficient_at_roots() && r.det_matches_product != Some(false);
        failed |= !ok;
        let _ = writeln!(
            table,
            "n={} size={} rank(d=3)={} det_matches_product={} deficient_at_roots={} rank(d=±2)={:?}",
            r.n,
            r.size,
            r.rank_at_3,
            r.det_matches_product.map_or("-".to_string(), |b| b.to_string()),
            r.deficient_at_roots(),
            r.rank_at_pm2
        );
        if let Some(d) = &det {
            let _ = writeln!(table, "  det = {d}");
        }
        for c in &r.roots {
            let _ = writeln!(table, "  m={} k={} d={} rank={}", c.m, c.k, c.d, c.rank);
        }
        if !r.skipped.is_empty() {
            let _ = writeln!(table, "  skipped (not quadratic): {:?}", r.skipped);
        }
        out.push(json!({
            "n": r.n,
            "size": r.size,
            "det": det,
            "det_matches_product": r.det_matches_product,
            "rank_at_3": r.rank_at_3,
            "roots": r.roots.iter().map(|c| json!({ "m": c.m, "k": c.k, "d": c.d.to_string(), "is_root": c.is_root, "rank": c.rank })).collect::<Vec<_>>(),
            "skipped": r.skipped,
            "rank_at_pm2": [r.rank_at_pm2.0, r.rank_at_pm2.1],
        }));
    }
    Ok(Report { json: json!({ "rows": out }), table, failed })
}

pub fn tables(g: &Global, n: usize, trials: usize) -> Result<Report> {
    let checks = table_verify(n, Some(trials), g.seed)?;
    let mut table = format!("n={n} seed={} trials={trials}\n{:<12} {:>5} {:>6}  det\n", g.seed, "seq", "size", "match");
    let mut blocks = Vec::new();
    let mut failed = false;
    for c in &checks {
        failed |= !c.matches_printed();
        let det = c.det_poly.clone().unwrap_or_else(|| c.row.det.to_string());
        let _ = writeln!(table, "{:<12} {:>5} {:>6}  {}", c.row.seq, c.size, c.matches_printed(), det);
        if !c.det_ok {
            let _ = writeln!(table, "{:<12} printed {}", "", c.row.det);
        }
        blocks.push(json!({
            "seq": c.row.seq,
            "size": c.size,
            "det": det,
            "printed_det": c.row.det,
            "match_paper": c.matches_printed(),
            "counterexample": c.mismatch.as_ref().map(|m| json!({
                "point": vec_str(&m.point),
                "computed": fmt_rational(&m.computed),
                "printed": fmt_rational(&m.printed),
            })),
        }));
    }
    Ok(Report { json: json!({ "n": n, "seed": g.seed, "trials": trials, "blocks": blocks }), table, failed })
}

pub fn validate(g: &Global, args: &QuadArgs, trials: usize) -> Result<Report> {
    let p = load(args)?;
    let report = p.validate(trials, g.seed);
    let entries = report.entries();
    let mut table = format!("{} (seed {})\n", p.name, g.seed);
    let mut obj = serde_json::Map::new();
    for (name, holds) in &entries {
        let _ = writeln!(table, "{name:<18} {holds}");
        obj.insert(name.to_string(), json!(holds));
    }
    obj.insert("name".into(), json!(p.name));
    obj.insert("seed".into(), json!(g.seed));
    obj.insert("axioms_hold".into(), json!(report.axioms_hold()));
    Ok(Report { json: Value::Object(obj), table, failed: !report.axioms_hold() })
}

pub fn recognize(_g: &Global, args: &QuadArgs) -> Result<Report> {
    let (quad, _) = numeric(args)?;
    let r = pairing_radical(&quad);
    let z = r.subalgebra.basis.iter().map(|v| vec_str(v)).collect::<Vec<_>>();
    let k = r.kernel.iter().map(|v| vec_str(v)).collect::<Vec<_>>();
    let mut table = format!("dim Z' = {}\ndim K = {}\ndim A(0) = {}\n", r.subalgebra.dim(), r.dim_k(), r.dim_a0());
    for v in &r.subalgebra.basis {
        let _ = writeln!(table, "Z' basis {}", elem_str(v));
    }
    for v in &r.kernel {
        let _ = writeln!(table, "K basis  {}", elem_str(v));
    }
    ok(
        json!({
            "dim_z_prime": r.subalgebra.dim(),
            "z_prime_basis": z,
            "z_prime_is_z": r.subalgebra.surjective,
            "dim_k": r.dim_k(),
            "k_basis": k,
            "dim_a0": r.dim_a0(),
            "rounds": r.rounds,
        }),
        table,
    )
}

pub fn experiment(g: &Global, k: usize, n: usize, points: usize, full: bool) -> Result<Report> {
    let r = generic_nondegeneracy_experiment(k, n, g.seed, points, full)?;
    let levels = |ls: &[skein_core::experiment::LevelRank]| ls.iter().map(|l| format!("{}/{}", l.rank, l.size)).collect::<Vec<_>>().join(" ");
    let mut table = format!("k={k} n<={n} seed={} full_matrix={full}\nvars {}\n", g.seed, r.vars.join(" "));
    for p in &r.points {
        let _ = writeln!(table, "point [{}] ranks {}", vec_str(&p.point).join(", "), levels(&p.levels));
    }
    for s in &r.scan {
        let _ = writeln!(
            table,
            "scan {}={} first_root={} ranks {} consistent={}",
            s.target,
            s.value,
            s.first_root.map_or("-".into(), |m| m.to_string()),
            levels(&s.levels),
            s.consistent()
        );
    }
    let _ = writeln!(table, "all generic points full rank: {}", r.all_full_rank());
    let _ = writeln!(table, "scan consistent with the Chebyshev prediction: {}", r.scan_consistent());
    let json = json!({
        "k": k,
        "n": n,
        "seed": g.seed,
        "full_matrix": full,
        "vars": r.vars,
        "points": r.points.iter().map(|p| json!({
            "point": vec_str(&p.point),
            "ranks": p.levels.iter().map(|l| json!({ "n": l.n, "size": l.size, "rank": l.rank })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "scan": r.scan.iter().map(|s| json!({
            "target": s.target,
            "value": s.value,
            "first_root": s.first_root,
            "ranks": s.levels.iter().map(|l| json!({ "n": l.n, "size": l.size, "rank": l.rank })).collect::<Vec<_>>(),
            "consistent": s.consistent(),
        })).collect::<Vec<_>>(),
        "all_full_rank": r.all_full_rank(),
        "scan_consistent": r.scan_consistent(),
    });
    Ok(Report { json, table, failed: !r.all_full_rank() })
}
