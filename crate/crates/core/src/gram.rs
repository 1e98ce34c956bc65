//! Spanning sets, Gram matrices, block decompositions and state spaces.

use crate::algebra::{pairing_radical, Elem, Quadruple, Radical};
use crate::diagram::{compose, Content, Diagram, Label, OuterDiagram};
use crate::error::{AlgebraError, BoundError, Error};
use crate::eval::EvalContext;
use crate::linalg::{bareiss_det, dot, rank, rank_kernel, Matrix};
use crate::matching::{enumerate_matchings, enumerate_matchings_split, enumerate_outer_matchings, Matching};
use crate::scalar::{fmt_rational, Ring, Q};
use rayon::prelude::*;
use std::collections::BTreeMap;

pub const DEFAULT_GRAM_BOUND: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpanMode {
    Disk,
    Outer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingMode {
    Spherical,
    General,
}

/// Matchings with one basis label per region.
#[derive(Clone, Debug)]
pub struct SpanningSet {
    pub k: usize,
    pub mode: SpanMode,
    pub disks: Vec<Diagram>,
    pub outers: Vec<OuterDiagram>,
}

impl SpanningSet {
    pub fn len(&self) -> usize {
        self.disks.len() + self.outers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// All words of length `len` over `0..alphabet`, lexicographically.
pub fn labelings(len: usize, alphabet: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..alphabet).map(move |c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

fn labelled<T>(regions: &[usize], labels: &[Option<Label>], mut build: impl FnMut(BTreeMap<usize, Vec<Content>>) -> T) -> Vec<T> {
    labelings(regions.len(), labels.len())
        .into_iter()
        .map(|w| {
            let contents = regions
                .iter()
                .zip(&w)
                .filter_map(|(r, &l)| labels[l].clone().map(|lab| (*r, vec![Content::Elem(lab)])))
                .collect();
            build(contents)
        })
        .collect()
}

/// Disk diagrams with split `split`, every region labelled from `labels`
/// (`None` leaves a region blank, i.e. labelled by the unit).
pub fn labelled_disks(k: usize, split: (usize, usize), labels: &[Option<Label>], bound: usize) -> Result<Vec<Diagram>, BoundError> {
    let mut out = Vec::new();
    for m in enumerate_matchings_split(k, split, bound)? {
        let regions = m.regions();
        out.extend(labelled(&regions, labels, |c| Diagram::new(m.clone(), c).expect("valid regions")));
    }
    Ok(out)
}

/// Outer diagrams with every face except `∞` labelled from `labels`.
pub fn labelled_outers(k: usize, labels: &[Option<Label>], bound: usize, label_infinity: bool) -> Result<Vec<OuterDiagram>, BoundError> {
    let mut out = Vec::new();
    for om in enumerate_outer_matchings(k, bound)? {
        let regions: Vec<usize> = om
            .matching()
            .regions()
            .into_iter()
            .filter(|&r| label_infinity || r != om.infinity_face())
            .collect();
        out.extend(labelled(&regions, labels, |c| OuterDiagram::new(om.clone(), c).expect("valid regions")));
    }
    Ok(out)
}

fn basis_labels(dim: usize) -> Vec<Option<Label>> {
    (0..dim).map(|i| Some(Label::Basis(i))).collect()
}

pub fn spanning_set(k: usize, dim: usize, mode: SpanMode, bound: usize) -> Result<SpanningSet, BoundError> {
    let labels = basis_labels(dim);
    Ok(match mode {
        SpanMode::Disk => SpanningSet { k, mode, disks: labelled_disks(k, (0, 2 * k), &labels, bound)?, outers: Vec::new() },
        SpanMode::Outer => SpanningSet { k, mode, disks: Vec::new(), outers: labelled_outers(k, &labels, bound, true)? },
    })
}

/// Human-readable descriptor: 1-based arcs and region labels.
pub fn describe(d: &Diagram) -> String {
    let arcs: Vec<String> = d.matching().arcs().iter().map(|(a, b)| format!("({},{})", a + 1, b + 1)).collect();
    let mut s = format!("[{}]", arcs.join(","));
    let labels: Vec<String> = d
        .contents()
        .iter()
        .map(|(r, list)| {
            let items: Vec<String> = list.iter().map(describe_content).collect();
            format!("{}:{}", r + 1, items.join("·"))
        })
        .collect();
    if !labels.is_empty() {
        s.push_str(&format!(" {{{}}}", labels.join(" ")));
    }
    s
}

fn describe_content(c: &Content) -> String {
    match c {
        Content::Form(f) => f.encoding().to_string(),
        Content::Elem(Label::Basis(i)) => format!("e{}", i + 1),
        Content::Elem(Label::Coords(v)) => format!("[{}]", v.iter().map(fmt_rational).collect::<Vec<_>>().join(",")),
        Content::Loop(inner) => format!("loop({})", inner.iter().map(describe_content).collect::<Vec<_>>().join("·")),
    }
}

pub fn describe_outer(d: &OuterDiagram) -> String {
    let inner = Diagram::new(d.outer().matching().clone(), d.contents().clone()).map(|x| describe(&x)).unwrap_or_default();
    format!("{} ∞={}", inner, d.outer().infinity_face() + 1)
}

/// Square matrix `α(b̄_j a_i)`.
pub fn spherical_gram<S: Ring>(ctx: &EvalContext<S>, items: &[Diagram]) -> Result<Matrix<S>, Error> {
    let rows: Vec<Vec<S>> = items
        .par_iter()
        .map(|a| items.iter().map(|b| ctx.pair_spherical(a, b)).collect::<Result<Vec<S>, Error>>())
        .collect::<Result<_, _>>()?;
    Ok(Matrix::from_rows_sized(rows, items.len()))
}

/// Closed contents of `b̄_j a_i` for every pair. These depend only on the
/// diagrams, so they can be computed once and evaluated for many quadruples.
pub fn pair_closures(items: &[Diagram]) -> Result<Vec<Vec<Vec<Content>>>, Error> {
    items
        .par_iter()
        .map(|a| {
            items
                .iter()
                .map(|b| Ok(compose(&b.reflect(), a)?.closed_contents().to_vec()))
                .collect::<Result<Vec<_>, Error>>()
        })
        .collect()
}

/// Spherical Gram matrix from [`pair_closures`] output.
pub fn gram_from_closures<S: Ring>(ctx: &EvalContext<S>, closures: &[Vec<Vec<Content>>]) -> Result<Matrix<S>, Error> {
    if !ctx.is_spherical() {
        return Err(AlgebraError::NotSpherical("the spherical pairing needs an R-spherical quadruple".into()).into());
    }
    let rows = closures
        .par_iter()
        .map(|r| r.iter().map(|c| ctx.alpha_contents(c)).collect::<Result<Vec<S>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows_sized(rows, closures.len()))
}

/// Rectangular matrix `α(y_j x_i)`.
pub fn general_gram<S: Ring>(ctx: &EvalContext<S>, disks: &[Diagram], outers: &[OuterDiagram]) -> Result<Matrix<S>, Error> {
    let rows: Vec<Vec<S>> = disks
        .par_iter()
        .map(|x| outers.iter().map(|y| ctx.pair_general(x, y)).collect::<Result<Vec<S>, Error>>())
        .collect::<Result<_, _>>()?;
    Ok(Matrix::from_rows_sized(rows, outers.len()))
}

#[derive(Clone, Debug)]
pub struct GramReport {
    pub k: usize,
    pub mode: PairingMode,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub matrix: Matrix<Q>,
    pub rank: usize,
    /// Linear relations among the rows (negligible combinations).
    pub kernel: Vec<Vec<Q>>,
    pub det: Option<Q>,
    pub symmetric: bool,
}

/// Gram matrix over the basis-labelled spanning set of a numeric quadruple.
pub fn gram_report(q: &Quadruple<Q>, k: usize, mode: PairingMode, r_spherical: bool, bound: usize) -> Result<GramReport, Error> {
    let disks = spanning_set(k, q.dim(), SpanMode::Disk, bound)?.disks;
    let rows: Vec<String> = disks.iter().map(describe).collect();
    let (matrix, cols) = match mode {
        PairingMode::Spherical => {
            if !r_spherical {
                return Err(AlgebraError::NotSpherical("spherical Gram matrix needs an R-spherical quadruple".into()).into());
            }
            let ctx = EvalContext::spherical(q, true);
            (spherical_gram(&ctx, &disks)?, rows.clone())
        }
        PairingMode::General => {
            let outers = spanning_set(k, q.dim(), SpanMode::Outer, bound)?.outers;
            let ctx = EvalContext::new(q);
            (general_gram(&ctx, &disks, &outers)?, outers.iter().map(describe_outer).collect())
        }
    };
    let (rank, kernel) = rank_kernel(&matrix.transpose());
    let det = matrix.is_square().then(|| bareiss_det(&matrix));
    let symmetric = matrix.is_symmetric();
    Ok(GramReport { k, mode, rows, cols, matrix, rank, kernel, det, symmetric })
}

/// Diagrams whose region labels agree with the segment labels `seq`.
pub fn block_items(seq: &[usize], bound: usize) -> Result<Vec<Diagram>, Error> {
    if seq.len() % 2 == 1 {
        return Err(Error::Input("sequence length must be even".into()));
    }
    let k = seq.len() / 2;
    let mut out = Vec::new();
    for m in enumerate_matchings(k, bound)? {
        if let Some(d) = block_diagram(&m, seq) {
            out.push(d);
        }
    }
    Ok(out)
}

fn block_diagram(m: &Matching, seq: &[usize]) -> Option<Diagram> {
    let seg = m.segment_regions();
    let mut label: BTreeMap<usize, usize> = BTreeMap::new();
    for (s, &r) in seg.iter().enumerate() {
        if *label.entry(r).or_insert(seq[s]) != seq[s] {
            return None;
        }
    }
    let contents = label.into_iter().map(|(r, l)| (r, vec![Content::basis(l)])).collect();
    Some(Diagram::new(m.clone(), contents).expect("valid regions"))
}

/// One diagonal block of the spherical Gram matrix.
#[derive(Clone)]
pub struct Block<S> {
    pub seq: Vec<usize>,
    pub items: Vec<Diagram>,
    pub matrix: Matrix<S>,
}

impl<S: Ring> Block<S> {
    pub fn det(&self) -> S {
        if self.items.is_empty() {
            S::one()
        } else {
            bareiss_det(&self.matrix)
        }
    }
}

pub fn seq_string(seq: &[usize]) -> String {
    seq.iter().map(|l| (l + 1).to_string()).collect()
}

/// Parses a 1-based digit string such as `"1212"` into labels.
pub fn parse_seq(s: &str) -> Result<Vec<usize>, Error> {
    s.chars()
        .map(|c| c.to_digit(10).filter(|&d| d >= 1).map(|d| d as usize - 1))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Input(format!("bad label sequence `{s}`")))
}

pub fn gram_block<S: Ring>(ctx: &EvalContext<S>, seq: &[usize], bound: usize) -> Result<Block<S>, Error> {
    let items = block_items(seq, bound)?;
    let matrix = spherical_gram(ctx, &items)?;
    Ok(Block { seq: seq.to_vec(), items, matrix })
}

/// All `dim^{2k}` blocks of an idempotent-basis spherical quadruple, in
/// lexicographic sequence order.
pub fn gram_blocks<S: Ring>(ctx: &EvalContext<S>, k: usize, bound: usize) -> Result<Vec<Block<S>>, Error> {
    let q = ctx.quadruple();
    if !q.algebra.idempotent_basis {
        return Err(AlgebraError::NotIdempotent().into());
    }
    labelings(2 * k, q.dim()).iter().map(|seq| gram_block(ctx, seq, bound)).collect()
}

/// Whether every pairing between diagrams of different blocks vanishes.
pub fn cross_blocks_vanish<S: Ring>(ctx: &EvalContext<S>, k: usize, bound: usize) -> Result<bool, Error> {
    let items = spanning_set(k, ctx.quadruple().dim(), SpanMode::Disk, bound)?.disks;
    let seqs: Vec<Vec<usize>> = items.iter().map(|d| d.boundary_sequence()).collect::<Result<_, _>>()?;
    for (i, a) in items.iter().enumerate() {
        for (j, b) in items.iter().enumerate() {
            if seqs[i] != seqs[j] && !ctx.pair_spherical(a, b)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Data describing the test side of the general pairing of a numeric
/// quadruple: the algebra `Z'` labelling regions and the covectors
/// reachable from the trace through the `∞` face.
pub struct TestSpace<'q> {
    pub q: &'q Quadruple<Q>,
    pub radical: Radical<Q>,
}

impl<'q> TestSpace<'q> {
    pub fn new(q: &'q Quadruple<Q>) -> Self {
        TestSpace { q, radical: pairing_radical(q) }
    }

    /// Region labels: blank for the unit, then the other basis vectors of `Z'`.
    pub fn labels(&self) -> Vec<Option<Label>> {
        let sub = &self.radical.subalgebra;
        std::iter::once(None).chain(sub.basis.iter().skip(1).map(|v| Some(Label::Coords(v.clone())))).collect()
    }

    pub fn rows(&self, split: (usize, usize), bound: usize) -> Result<Vec<Diagram>, Error> {
        let k = (split.0 + split.1) / 2;
        Ok(labelled_disks(k, split, &self.labels(), bound)?)
    }

    pub fn outers(&self, k: usize, bound: usize) -> Result<Vec<OuterDiagram>, Error> {
        Ok(labelled_outers(k, &self.labels(), bound, false)?)
    }

    /// Pairing vector of `x`: every functional applied to every closure.
    pub fn vector(&self, ctx: &EvalContext<Q>, x: &Diagram, outers: &[OuterDiagram]) -> Result<Vec<Q>, Error> {
        let mut v = Vec::with_capacity(outers.len() * self.radical.functionals.len());
        for y in outers {
            let z: Elem<Q> = ctx.closure_value(x, y)?;
            v.extend(self.radical.functionals.iter().map(|f| dot(f, &z)));
        }
        Ok(v)
    }

    pub fn matrix(&self, ctx: &EvalContext<Q>, rows: &[Diagram], outers: &[OuterDiagram]) -> Result<Matrix<Q>, Error> {
        let vs: Vec<Vec<Q>> = rows.par_iter().map(|x| self.vector(ctx, x, outers)).collect::<Result<_, _>>()?;
        let width = outers.len() * self.radical.functionals.len();
        Ok(Matrix::from_rows_sized(vs, width))
    }
}

/// `dim A(k)` through the general pairing of `Z'`-labelled disks against
/// `Z'`-labelled outer diagrams and the trace-closure functionals.
pub fn state_dim(q: &Quadruple<Q>, k: usize, bound: usize) -> Result<usize, Error> {
    hom_dim(q, 0, 2 * k, bound)
}

/// `dim Hom(n, m)`: the same pairing on diagrams with `n` bottom and `m`
/// top points.
pub fn hom_dim(q: &Quadruple<Q>, n: usize, m: usize, bound: usize) -> Result<usize, Error> {
    if (n + m) % 2 == 1 {
        return Ok(0);
    }
    let ts = TestSpace::new(q);
    let ctx = EvalContext::new(q);
    let rows = ts.rows((n, m), bound)?;
    let outers = ts.outers((n + m) / 2, bound)?;
    Ok(rank(&ts.matrix(&ctx, &rows, &outers)?))
}

/// `dim A(k)` as the rank of the spherical Gram matrix on `Z'`-labelled
/// disks; only meaningful for R-spherical quadruples.
pub fn state_dim_spherical(q: &Quadruple<Q>, k: usize, r_spherical: bool, bound: usize) -> Result<usize, Error> {
    if !r_spherical {
        return Err(AlgebraError::NotSpherical("spherical state dimension needs an R-spherical quadruple".into()).into());
    }
    let ts = TestSpace::new(q);
    let ctx = EvalContext::spherical(q, true);
    let rows = ts.rows((0, 2 * k), bound)?;
    Ok(rank(&spherical_gram(&ctx, &rows)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{builtin, tl_numeric};
    use crate::scalar::{q, MPoly};
    use num_traits::Zero;

    fn ss2() -> Quadruple<Q> {
        builtin("semisimple2_numeric").unwrap().numeric().unwrap()
    }

    #[test]
    fn spanning_sizes() {
        assert_eq!(spanning_set(1, 2, SpanMode::Disk, 6).unwrap().len(), 4);
        assert_eq!(spanning_set(2, 2, SpanMode::Disk, 6).unwrap().len(), 16);
        assert_eq!(spanning_set(1, 1, SpanMode::Outer, 6).unwrap().len(), 2);
        assert_eq!(spanning_set(2, 2, SpanMode::Outer, 6).unwrap().len(), 2 * 3 * 8);
    }

    #[test]
    fn tl_gram_k2() {
        let p = builtin("tl").unwrap();
        let ctx = EvalContext::spherical(&p.quad, true);
        let items = spanning_set(2, 1, SpanMode::Disk, 6).unwrap().disks;
        let g = spherical_gram(&ctx, &items).unwrap();
        let d = MPoly::var(0);
        let d2 = d.clone() * d.clone();
        assert_eq!(g.to_rows(), vec![vec![d2.clone(), d.clone()], vec![d, d2]]);
    }

    #[test]
    fn k1_semisimple_gram_is_diagonal() {
        let p = builtin("semisimple2").unwrap();
        let ctx = EvalContext::spherical(&p.quad, true);
        let items = spanning_set(1, 2, SpanMode::Disk, 6).unwrap().disks;
        let g = spherical_gram(&ctx, &items).unwrap();
        let v = |n: &str| MPoly::var(p.variety.index(n).unwrap());
        // outside region first, so the mixed labellings come out as b2 a21, b1 a12
        let diag = [v("b1") * v("a11"), v("b2") * v("a21"), v("b1") * v("a12"), v("b2") * v("a22")];
        let got: Vec<MPoly> = (0..4).map(|i| g.get(i, i).clone()).collect();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert!(g.get(i, j).is_zero());
                }
            }
        }
        assert_eq!(got, diag);
    }

    #[test]
    fn block_1122_is_empty_and_121212_has_five() {
        assert!(block_items(&parse_seq("1122").unwrap(), 6).unwrap().is_empty());
        assert_eq!(block_items(&parse_seq("1111").unwrap(), 6).unwrap().len(), 2);
        assert_eq!(block_items(&parse_seq("121212").unwrap(), 6).unwrap().len(), 5);
    }

    #[test]
    fn blocks_cover_spanning_set() {
        let qd = ss2();
        let ctx = EvalContext::spherical(&qd, true);
        for k in 1..=3 {
            let blocks = gram_blocks(&ctx, k, 6).unwrap();
            let total: usize = blocks.iter().map(|b| b.items.len()).sum();
            assert_eq!(total, spanning_set(k, 2, SpanMode::Disk, 6).unwrap().len());
            assert!(cross_blocks_vanish(&ctx, k, 6).unwrap());
        }
    }

    #[test]
    fn tl_state_dims() {
        let t3 = tl_numeric(q(3));
        for (k, c) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14)] {
            assert_eq!(state_dim(&t3, k, 6).unwrap(), c, "k={k}");
        }
        assert_eq!(state_dim(&tl_numeric(q(1)), 2, 6).unwrap(), 1);
        assert_eq!(state_dim(&tl_numeric(q(0)), 0, 6).unwrap(), 1);
    }

    #[test]
    fn hom_dims() {
        let t3 = tl_numeric(q(3));
        assert_eq!(hom_dim(&t3, 1, 1, 6).unwrap(), state_dim(&t3, 1, 6).unwrap());
        assert_eq!(hom_dim(&t3, 1, 2, 6).unwrap(), 0);
        assert_eq!(hom_dim(&t3, 2, 2, 6).unwrap(), 2);
    }

    #[test]
    fn general_and_spherical_state_dims_agree() {
        let qd = ss2();
        for k in 0..=3 {
            assert_eq!(state_dim(&qd, k, 6).unwrap(), state_dim_spherical(&qd, k, true, 6).unwrap(), "k={k}");
        }
    }

    #[test]
    fn gram_report_tl_d1_rank_drop() {
        let r = gram_report(&tl_numeric(q(1)), 2, PairingMode::Spherical, true, 6).unwrap();
        assert_eq!(r.rank, 1);
        assert_eq!(r.kernel.len(), 1);
        assert_eq!(r.det, Some(q(0)));
        assert!(r.symmetric);
    }
}
