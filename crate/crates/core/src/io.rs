//! JSON encodings of quadruples, diagrams and outer diagrams. Indices in
//! JSON are 1-based.

use crate::algebra::{validate_with, CommAlgebra, Quadruple, ValidationReport};
use crate::diagram::{Content, Diagram, Label, OuterDiagram};
use crate::error::Error;
use crate::form::CircularForm;
use crate::matching::{Matching, OuterMatching};
use crate::scalar::{fmt_rational, parse_rational, Expr, MPoly, Q, Ring};
use crate::variety::Variety;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

/// A quadruple whose structure constants may involve named parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamQuadruple {
    pub name: String,
    pub quad: Quadruple<MPoly>,
    /// Parameter names with any relations they satisfy.
    pub variety: Variety,
}

impl ParamQuadruple {
    pub fn vars(&self) -> &[String] {
        &self.variety.vars
    }

    fn entries(&self) -> Vec<&MPoly> {
        let a = &self.quad.algebra;
        let mut v: Vec<&MPoly> = a.unit.iter().collect();
        v.extend(a.mult.iter().flatten().flatten());
        v.extend(self.quad.omega.iter().flatten());
        v.extend(self.quad.trace.iter());
        v
    }

    /// Whether every structure constant is a plain rational.
    pub fn is_numeric(&self) -> bool {
        self.entries().iter().all(|p| p.as_constant().is_some())
    }

    /// Parameters that actually occur in the structure constants.
    pub fn used_vars(&self) -> Vec<String> {
        let entries = self.entries();
        (0..self.variety.vars.len())
            .filter(|&i| entries.iter().any(|p| p.partial_degree(|j| j == i) > 0))
            .map(|i| self.variety.vars[i].clone())
            .collect()
    }

    pub fn numeric(&self) -> Option<Quadruple<Q>> {
        self.is_numeric().then(|| self.quad.map(|p| p.as_constant().unwrap()))
    }

    /// Evaluates every parameter at `point` (ordered as `vars()`).
    pub fn specialize(&self, point: &[Q]) -> Quadruple<Q> {
        self.quad.map(|p| p.eval(point))
    }

    /// Substitutes some parameters by rationals, keeping the others symbolic.
    pub fn substitute(&self, values: &[(String, Q)]) -> Result<ParamQuadruple, Error> {
        let vars = self.vars();
        for (name, _) in values {
            if !vars.contains(name) {
                return Err(input(format!("quadruple has no parameter `{name}`")));
            }
        }
        let point: Vec<MPoly> = vars
            .iter()
            .enumerate()
            .map(|(i, v)| match values.iter().find(|(n, _)| n == v) {
                Some((_, x)) => MPoly::constant(x.clone()),
                None => MPoly::var(i),
            })
            .collect();
        let quad = self.quad.map(|p| p.eval_in(&point));
        let solved = self
            .variety
            .solved
            .iter()
            .filter(|(i, _)| !values.iter().any(|(n, _)| *n == vars[*i]))
            .cloned()
            .collect();
        Ok(ParamQuadruple {
            name: self.name.clone(),
            quad,
            variety: Variety { vars: vars.to_vec(), solved },
        })
    }

    /// Axiom checks; symbolic identities are tested on the parameter variety.
    pub fn validate(&self, trials: usize, seed: u64) -> ValidationReport {
        validate_with(&self.quad, &|p: &MPoly| self.variety.vanishes(p, trials, seed))
    }
}

fn scalar(v: &Value, names: &[String]) -> Result<MPoly, Error> {
    match v {
        Value::Number(n) => {
            let q = parse_rational(&n.to_string()).ok_or_else(|| input(format!("non-integer number {n}; use \"p/q\"")))?;
            Ok(MPoly::constant(q))
        }
        Value::String(s) => crate::scalar::parse_scalar_literal(s, names).map_err(|e| input(format!("scalar `{s}`: {e}"))),
        other => Err(input(format!("expected a scalar, found {other}"))),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, Error> {
    v.as_array().ok_or_else(|| input(format!("`{what}` must be an array")))
}

fn vector(v: &Value, what: &str, names: &[String]) -> Result<Vec<MPoly>, Error> {
    array(v, what)?.iter().map(|x| scalar(x, names)).collect()
}

/// Parses the algebra JSON format.
pub fn parse_quadruple(text: &str, name: &str) -> Result<ParamQuadruple, Error> {
    let v: Value = serde_json::from_str(text).map_err(|e| input(format!("invalid JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| input("quadruple must be a JSON object"))?;
    let get = |k: &str| obj.get(k).ok_or_else(|| input(format!("missing field `{k}`")));

    let mut vars: Vec<String> = Vec::new();
    let mut solved_src: Vec<(String, String)> = Vec::new();
    if let Some(cr) = obj.get("coeff_ring") {
        if let Some(p) = cr.get("poly") {
            for x in array(p, "coeff_ring.poly")? {
                vars.push(x.as_str().ok_or_else(|| input("variable names must be strings"))?.to_string());
            }
        }
        if let Some(s) = cr.get("solve") {
            let s = s.as_object().ok_or_else(|| input("`coeff_ring.solve` must be an object"))?;
            for (k, e) in s {
                solved_src.push((k.clone(), e.as_str().ok_or_else(|| input("solve entries must be strings"))?.to_string()));
            }
        }
    }
    let mut solved = Vec::new();
    for (k, e) in solved_src {
        let idx = vars.iter().position(|v| *v == k).ok_or_else(|| input(format!("solved variable `{k}` not declared")))?;
        let expr = Expr::parse(&e).map_err(|err| input(format!("solve `{k}`: {err}")))?;
        let mut used = Vec::new();
        expr.vars(&mut used);
        if let Some(u) = used.iter().find(|u| !vars.contains(u)) {
            return Err(input(format!("solve `{k}` uses undeclared `{u}`")));
        }
        solved.push((idx, expr));
    }

    let basis: Vec<String> = match obj.get("basis") {
        Some(b) => array(b, "basis")?.iter().map(|x| x.as_str().unwrap_or("?").to_string()).collect(),
        None => {
            let d = get("dim")?.as_u64().ok_or_else(|| input("`dim` must be a positive integer"))? as usize;
            (1..=d).map(|i| format!("e{i}")).collect()
        }
    };
    let d = basis.len();
    if let Some(dim) = obj.get("dim") {
        if dim.as_u64() != Some(d as u64) {
            return Err(input("`dim` disagrees with `basis`"));
        }
    }
    let idempotent = obj.get("idempotent_basis").and_then(Value::as_bool).unwrap_or(false);
    let unit = vector(get("unit")?, "unit", &vars)?;
    let mult = match obj.get("mult") {
        Some(m) => array(m, "mult")?
            .iter()
            .map(|row| array(row, "mult")?.iter().map(|cell| vector(cell, "mult", &vars)).collect())
            .collect::<Result<Vec<Vec<Vec<MPoly>>>, Error>>()?,
        None if idempotent => CommAlgebra::<MPoly>::semisimple(d).mult,
        None => return Err(input("missing field `mult`")),
    };
    let omega = array(get("omega")?, "omega")?
        .iter()
        .map(|row| vector(row, "omega", &vars))
        .collect::<Result<Vec<_>, _>>()?;
    let trace = vector(get("trace")?, "trace", &vars)?;
    let alg = CommAlgebra::new(basis, unit, mult, idempotent)?;
    let quad = Quadruple::new(alg, omega, trace)?;
    let name = obj.get("name").and_then(Value::as_str).unwrap_or(name).to_string();
    Ok(ParamQuadruple { name, quad, variety: Variety { vars, solved } })
}

fn poly_json(p: &MPoly, names: &[String]) -> Value {
    match p.as_constant() {
        Some(c) if c.is_integer() => match i64::try_from(c.numer().clone()) {
            Ok(i) => json!(i),
            Err(_) => json!(fmt_rational(&c)),
        },
        Some(c) => json!(fmt_rational(&c)),
        None => json!(p.display_with(names).replace(' ', "")),
    }
}

/// Serialises a quadruple in the same format [`parse_quadruple`] reads.
pub fn quadruple_to_json(q: &ParamQuadruple) -> Value {
    let names = q.vars();
    let a = &q.quad.algebra;
    let vecj = |v: &[MPoly]| Value::Array(v.iter().map(|p| poly_json(p, names)).collect());
    let mut obj = Map::new();
    obj.insert("name".into(), json!(q.name));
    obj.insert("dim".into(), json!(a.dim()));
    obj.insert("basis".into(), json!(a.basis));
    obj.insert("idempotent_basis".into(), json!(a.idempotent_basis));
    obj.insert("unit".into(), vecj(&a.unit));
    obj.insert(
        "mult".into(),
        Value::Array(a.mult.iter().map(|r| Value::Array(r.iter().map(|c| vecj(c)).collect())).collect()),
    );
    obj.insert("omega".into(), Value::Array(q.quad.omega.iter().map(|r| vecj(r)).collect()));
    obj.insert("trace".into(), vecj(&q.quad.trace));
    let mut cr = Map::new();
    cr.insert("poly".into(), json!(names));
    if !q.variety.solved.is_empty() {
        let s: Map<String, Value> =
            q.variety.solved.iter().map(|(i, e)| (names[*i].clone(), json!(e.to_string()))).collect();
        cr.insert("solve".into(), Value::Object(s));
    }
    obj.insert("coeff_ring".into(), Value::Object(cr));
    Value::Object(obj)
}

fn parse_content(v: &Value) -> Result<Content, Error> {
    let obj = v.as_object().ok_or_else(|| input("content must be an object"))?;
    if let Some(f) = obj.get("form") {
        let s = f.as_str().ok_or_else(|| input("`form` must be a string"))?;
        return Ok(Content::Form(CircularForm::parse(s)?));
    }
    if let Some(b) = obj.get("basis") {
        let i = b.as_u64().filter(|&i| i >= 1).ok_or_else(|| input("`basis` must be a 1-based index"))?;
        return Ok(Content::Elem(Label::Basis(i as usize - 1)));
    }
    if let Some(e) = obj.get("elem") {
        let coords = array(e, "elem")?
            .iter()
            .map(|x| match x {
                Value::Number(n) => parse_rational(&n.to_string()),
                Value::String(s) => parse_rational(s),
                _ => None,
            }
            .ok_or_else(|| input(format!("bad coordinate {x}"))))
            .collect::<Result<Vec<Q>, Error>>()?;
        return Ok(Content::Elem(Label::Coords(coords)));
    }
    if let Some(l) = obj.get("loop") {
        return Ok(Content::Loop(array(l, "loop")?.iter().map(parse_content).collect::<Result<_, _>>()?));
    }
    Err(input("content must have one of `form`, `basis`, `elem`, `loop`"))
}

fn content_json(c: &Content) -> Value {
    match c {
        Content::Form(f) => json!({ "form": f.encoding() }),
        Content::Elem(Label::Basis(i)) => json!({ "basis": i + 1 }),
        Content::Elem(Label::Coords(v)) => json!({ "elem": v.iter().map(fmt_rational).collect::<Vec<_>>() }),
        Content::Loop(inner) => json!({ "loop": inner.iter().map(content_json).collect::<Vec<_>>() }),
    }
}

fn parse_matching(obj: &Map<String, Value>) -> Result<Matching, Error> {
    let k = obj.get("k").and_then(Value::as_u64).ok_or_else(|| input("missing integer field `k`"))? as usize;
    let split = match obj.get("split") {
        Some(s) => {
            let a = array(s, "split")?;
            if a.len() != 2 {
                return Err(input("`split` must have two entries"));
            }
            let f = |x: &Value| x.as_u64().map(|v| v as usize).ok_or_else(|| input("split entries must be integers"));
            (f(&a[0])?, f(&a[1])?)
        }
        None => (0, 2 * k),
    };
    let mut arcs = Vec::new();
    for a in array(obj.get("arcs").ok_or_else(|| input("missing field `arcs`"))?, "arcs")? {
        let p = array(a, "arc")?;
        let g = |x: &Value| x.as_u64().filter(|&v| v >= 1).map(|v| v as usize - 1).ok_or_else(|| input("arc endpoints are 1-based integers"));
        if p.len() != 2 {
            return Err(input("each arc has two endpoints"));
        }
        arcs.push((g(&p[0])?, g(&p[1])?));
    }
    if arcs.len() != k {
        return Err(input(format!("expected {k} arcs, found {}", arcs.len())));
    }
    Ok(Matching::from_arcs(k, &arcs, split)?)
}

fn parse_regions(obj: &Map<String, Value>) -> Result<BTreeMap<usize, Vec<Content>>, Error> {
    let mut out = BTreeMap::new();
    if let Some(r) = obj.get("regions") {
        let r = r.as_object().ok_or_else(|| input("`regions` must be an object"))?;
        for (key, list) in r {
            let idx: usize = key.parse().ok().filter(|&i| i >= 1).ok_or_else(|| input(format!("bad region index `{key}`")))?;
            let items = array(list, "region contents")?.iter().map(parse_content).collect::<Result<Vec<_>, _>>()?;
            out.insert(idx - 1, items);
        }
    }
    Ok(out)
}

pub fn parse_diagram(text: &str) -> Result<Diagram, Error> {
    let v: Value = serde_json::from_str(text).map_err(|e| input(format!("invalid JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| input("diagram must be a JSON object"))?;
    Ok(Diagram::new(parse_matching(obj)?, parse_regions(obj)?)?)
}

pub fn parse_outer(text: &str) -> Result<OuterDiagram, Error> {
    let v: Value = serde_json::from_str(text).map_err(|e| input(format!("invalid JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| input("outer diagram must be a JSON object"))?;
    let m = parse_matching(obj)?;
    let inf = obj
        .get("infinity_face")
        .and_then(Value::as_u64)
        .filter(|&i| i >= 1)
        .ok_or_else(|| input("missing 1-based `infinity_face`"))? as usize
        - 1;
    Ok(OuterDiagram::new(OuterMatching::new(m, inf)?, parse_regions(obj)?)?)
}

fn matching_fields(m: &Matching, obj: &mut Map<String, Value>) {
    obj.insert("k".into(), json!(m.k()));
    obj.insert("split".into(), json!([m.split().0, m.split().1]));
    obj.insert("arcs".into(), json!(m.arcs().iter().map(|(a, b)| [a + 1, b + 1]).collect::<Vec<_>>()));
}

fn regions_json(c: &BTreeMap<usize, Vec<Content>>) -> Value {
    Value::Object(
        c.iter()
            .map(|(r, list)| ((r + 1).to_string(), Value::Array(list.iter().map(content_json).collect())))
            .collect(),
    )
}

pub fn diagram_to_json(d: &Diagram) -> Value {
    let mut obj = Map::new();
    matching_fields(d.matching(), &mut obj);
    obj.insert("regions".into(), regions_json(d.contents()));
    Value::Object(obj)
}

pub fn outer_to_json(d: &OuterDiagram) -> Value {
    let mut obj = Map::new();
    matching_fields(d.outer().matching(), &mut obj);
    obj.insert("infinity_face".into(), json!(d.outer().infinity_face() + 1));
    obj.insert("regions".into(), regions_json(d.contents()));
    Value::Object(obj)
}

/// Scalar formatted for reports.
pub fn fmt_scalar<S: Ring>(x: &S) -> String {
    x.to_string()
}
