//! Block determinants of the spherical Gram matrix for the two-dimensional
//! semisimple quadruple, checked against the published tables.

use crate::diagram::Content;
use crate::error::Error;
use crate::eval::EvalContext;
use crate::fixtures::semisimple_symbolic;
use crate::gram::{block_items, gram_block, gram_from_closures, pair_closures, parse_seq, spherical_gram};
use crate::io::ParamQuadruple;
use crate::linalg::{bareiss_det, gauss_det, Matrix};
use crate::scalar::{Expr, Q};
use crate::variety::{DEFAULT_TRIALS, Variety};

/// One printed row: label sequence, block size, determinant.
#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    pub n: usize,
    pub seq: &'static str,
    pub size: usize,
    pub det: &'static str,
}

const fn row(n: usize, seq: &'static str, size: usize, det: &'static str) -> TableRow {
    TableRow { n, seq, size, det }
}

pub const TABLE: &[TableRow] = &[
    row(2, "1111", 2, "b1^2*a11^2*(a11-1)*(a11+1)"),
    row(2, "1112", 1, "b1*a11*a12"),
    row(2, "1122", 0, "1"),
    row(2, "1212", 2, "b1*a12^2*(a12*a21-1)"),
    row(3, "111111", 5, "b1^5*a11^5*(a11-1)^4*(a11+1)^4*(a11^2-2)"),
    row(3, "111112", 2, "b1^2*a11^2*a12^2*(a11-1)*(a11+1)"),
    row(3, "111122", 0, "1"),
    row(3, "111212", 2, "b1^2*a11^2*a12^2*(a11-1)*(a11+1)"),
    row(3, "112112", 1, "b1*a11*a12^2"),
    row(3, "111222", 1, "b1*a11*a12*a22"),
    row(3, "112122", 0, "1"),
    row(3, "121212", 5, "b1^5*a12^5*(a12*a21-1)^4*(a12*a21-2)"),
    row(4, "11111111", 14, "b1^14*a11^14*(a11^2+a11-1)*(a11^2-a11-1)*(a11-1)^13*(a11+1)^13*(a11^2-2)^6"),
    row(4, "11111112", 5, "b1^5*a11^5*a12^5*(a11-1)^4*(a11+1)^4*(a11^2-2)"),
    row(4, "11111122", 0, "1"),
    row(4, "11111212", 4, "b1^4*a11^4*a12^4*(a11-1)^2*(a11+1)^2*(a12*a21-1)^2"),
    row(4, "11112112", 2, "b1^2*a11^2*a12^4*(a11^2-1)"),
    row(4, "11121112", 3, "b1^3*a11^4*a12^4*(a11-1)*(a11+1)*(a12*a21-1)"),
    row(4, "11111222", 2, "b1^2*a11^2*a12^2*a22^2*(a11-1)*(a11+1)"),
    row(4, "11112212", 0, "1"),
    row(4, "11121122", 0, "1"),
    row(4, "11121212", 5, "b1^5*a11^5*a12^5*(a12*a21-1)^4*(a12*a21-2)"),
    row(4, "11211212", 2, "b1^2*a11^2*a12^4*(a12*a21-1)"),
    row(4, "11112222", 0, "1"),
    row(4, "11121222", 2, "b1^2*a11^2*a12^2*a22^2*(a12*a21-1)"),
    row(4, "11211222", 1, "b1*a11*a12^2*a22"),
    row(4, "11122122", 1, "b1*a11*a12*a22*a21"),
    row(4, "11221122", 0, "1"),
    row(4, "11221212", 0, "1"),
    row(4, "11212212", 0, "1"),
    row(4, "12121212", 14, "b1^14*a12^14*(a12*a21-1)^13*(a12*a21-2)^6*(a12^2*a21^2-3*a12*a21+1)"),
    row(5, "1111111111", 42, "b1^42*a11^42*(a11-1)^41*(a11+1)^41*(a11^2-2)^26*(a11^2-3)*(a11^2+a11-1)^8*(a11^2-a11-1)^8"),
    row(5, "1111111112", 14, "b1^14*a11^14*a12^14*(a11^2+a11-1)*(a11^2-a11-1)*(a11^2-2)^6*(a11-1)^13*(a11+1)^13"),
    row(5, "1111121212", 10, "b1^10*a11^10*a12^10*(a11-1)^5*(a11+1)^5*(a12*a21-2)^2*(a12*a21-1)^8"),
    row(5, "1112111212", 7, "b1^7*a11^10*a12^9*(a12*a21-2)*(a12*a21-1)^5*(a11-1)^2*(a11+1)^2"),
    row(5, "1112121212", 14, "b1^14*a11^14*a12^14*(a12^2*a21^2-3*a12*a21+1)*(a12*a21-2)^6*(a12*a21-1)^13"),
    row(5, "1212121212", 42, "b1^42*a12^42*(a12*a21-3)*(a12^2*a21^2-3*a12*a21+1)^8*(a12*a21-2)^26*(a12*a21-1)^41"),
];

pub fn table_rows(n: usize) -> Vec<TableRow> {
    TABLE.iter().filter(|r| r.n == n).copied().collect()
}

/// A variety point where computed and printed determinants differ.
#[derive(Clone, Debug)]
pub struct Mismatch {
    pub point: Vec<Q>,
    pub computed: Q,
    pub printed: Q,
}

#[derive(Clone, Debug)]
pub struct RowCheck {
    pub row: TableRow,
    pub size: usize,
    /// Expanded determinant over `ℚ[a_ij, b_i]`, for blocks small enough
    /// to expand.
    pub det_poly: Option<String>,
    pub det_ok: bool,
    pub mismatch: Option<Mismatch>,
}

impl RowCheck {
    pub fn size_ok(&self) -> bool {
        self.size == self.row.size
    }

    pub fn matches_printed(&self) -> bool {
        self.size_ok() && self.det_ok
    }
}

/// Largest block expanded symbolically in reports.
pub const SYMBOLIC_DET_LIMIT: usize = 5;

/// Block Gram matrix at a numeric point from precomputed closures.
pub fn block_matrix_at(fixture: &ParamQuadruple, closures: &[Vec<Vec<Content>>], point: &[Q]) -> Result<Matrix<Q>, Error> {
    let qd = fixture.specialize(point);
    let ctx = EvalContext::spherical(&qd, true);
    gram_from_closures(&ctx, closures)
}

/// Block determinant at a numeric point of the parameter space.
pub fn block_det_at(fixture: &ParamQuadruple, seq: &[usize], point: &[Q]) -> Result<Q, Error> {
    let qd = fixture.specialize(point);
    let ctx = EvalContext::spherical(&qd, true);
    Ok(gauss_det(&gram_block(&ctx, seq, seq.len() / 2)?.matrix))
}

/// Checks one printed row at `trials` random points of the sphericality
/// variety.
pub fn check_row(row: &TableRow, trials: usize, seed: u64) -> Result<RowCheck, Error> {
    let fixture = semisimple_symbolic(2);
    let variety: &Variety = &fixture.variety;
    let seq = parse_seq(row.seq)?;
    let bound = seq.len() / 2;
    let items = block_items(&seq, bound)?;
    let closures = pair_closures(&items)?;
    let printed = Expr::parse(row.det).map_err(|e| Error::Input(e.to_string()))?;

    let mut mismatch = None;
    for point in variety.sample_points(trials, seed) {
        let computed = gauss_det(&block_matrix_at(&fixture, &closures, &point)?);
        let expected = printed.eval_at(&variety.vars, &point).map_err(|e| Error::Input(e.to_string()))?;
        if computed != expected {
            mismatch = Some(Mismatch { point, computed, printed: expected });
            break;
        }
    }
    let det_poly = (items.len() <= SYMBOLIC_DET_LIMIT).then(|| -> Result<String, Error> {
        let ctx = EvalContext::spherical(&fixture.quad, true);
        let g = spherical_gram(&ctx, &items)?;
        Ok(bareiss_det(&g).display_with(&variety.vars))
    });
    let det_poly = det_poly.transpose()?;
    Ok(RowCheck { row: *row, size: items.len(), det_poly, det_ok: mismatch.is_none(), mismatch })
}

/// Every printed row for `n`, checked with [`DEFAULT_TRIALS`] points unless
/// `trials` says otherwise.
pub fn table_verify(n: usize, trials: Option<usize>, seed: u64) -> Result<Vec<RowCheck>, Error> {
    let rows = table_rows(n);
    if rows.is_empty() {
        return Err(Error::Input(format!("no printed table for n = {n} (available: 2..=5)")));
    }
    rows.iter().map(|r| check_row(r, trials.unwrap_or(DEFAULT_TRIALS), seed)).collect()
}
