//! Crossingless matchings of 2k points on a disk boundary and their
//! annular (outer) counterparts.
//!
//! Points are numbered `0..2k` internally: bottom points `0..n` left to right,
//! then top points `n..2k` right to left. Segment `s` runs from point `s` to
//! point `s+1` (mod 2k); segment `2k-1` carries the marker. A region is named
//! by the smallest segment it touches. External interfaces add 1 to every
//! point, segment and region index.

use crate::error::{BoundError, DiagramError};

pub const DEFAULT_MATCHING_BOUND: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    partner: Vec<usize>,
    split: (usize, usize),
}

impl Matching {
    pub fn new(partner: Vec<usize>, split: (usize, usize)) -> Result<Self, DiagramError> {
        let n = partner.len();
        if !n.is_multiple_of(2) {
            return Err(DiagramError::Split(split.0, split.1, n));
        }
        if split.0 + split.1 != n {
            return Err(DiagramError::Split(split.0, split.1, n));
        }
        for (i, &p) in partner.iter().enumerate() {
            if p >= n {
                return Err(DiagramError::PointRange(p));
            }
            if p == i || partner[p] != i {
                return Err(DiagramError::NotInvolution(i));
            }
        }
        let arcs = arcs_of(&partner);
        for (x, &(a, b)) in arcs.iter().enumerate() {
            for &(c, d) in &arcs[x + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return Err(DiagramError::Crossing(a, b, c, d));
                }
            }
        }
        Ok(Matching { partner, split })
    }

    /// Builds from 0-based arcs.
    pub fn from_arcs(k: usize, arcs: &[(usize, usize)], split: (usize, usize)) -> Result<Self, DiagramError> {
        let n = 2 * k;
        let mut partner = vec![usize::MAX; n];
        for &(a, b) in arcs {
            for p in [a, b] {
                if p >= n {
                    return Err(DiagramError::PointRange(p));
                }
                if partner[p] != usize::MAX {
                    return Err(DiagramError::NotInvolution(p));
                }
            }
            partner[a] = b;
            partner[b] = a;
        }
        if let Some(p) = partner.iter().position(|&x| x == usize::MAX) {
            return Err(DiagramError::NotInvolution(p));
        }
        Matching::new(partner, split)
    }

    pub fn empty() -> Self {
        Matching { partner: Vec::new(), split: (0, 0) }
    }

    /// Identity strands `n -> n`.
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|p| 2 * n - 1 - p).collect();
        Matching { partner, split: (n, n) }
    }

    pub fn k(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn points(&self) -> usize {
        self.partner.len()
    }

    pub fn split(&self) -> (usize, usize) {
        self.split
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    /// Same arcs, different strip presentation.
    pub fn with_split(&self, split: (usize, usize)) -> Result<Self, DiagramError> {
        if split.0 + split.1 != self.points() {
            return Err(DiagramError::Split(split.0, split.1, self.points()));
        }
        Ok(Matching { partner: self.partner.clone(), split })
    }

    /// Arcs `(a, b)` with `a < b`, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        arcs_of(&self.partner)
    }

    /// Region index of every segment.
    pub fn segment_regions(&self) -> Vec<usize> {
        let n = self.points();
        let mut region = vec![usize::MAX; n];
        for s in 0..n {
            if region[s] != usize::MAX {
                continue;
            }
            // s is the smallest unvisited segment, hence the minimum of its cycle
            let mut t = s;
            loop {
                region[t] = s;
                t = self.partner[(t + 1) % n];
                if t == s {
                    break;
                }
            }
        }
        region
    }

    /// Region containing segment `s` (region 0 when there are no points).
    pub fn region_of_segment(&self, s: usize) -> usize {
        if self.partner.is_empty() {
            0
        } else {
            self.segment_regions()[s % self.points()]
        }
    }

    /// Sorted region indices; always `k + 1` of them.
    pub fn regions(&self) -> Vec<usize> {
        if self.partner.is_empty() {
            return vec![0];
        }
        let mut r = self.segment_regions();
        r.sort_unstable();
        r.dedup();
        r
    }

    pub fn is_region(&self, r: usize) -> bool {
        self.regions().contains(&r)
    }

    /// Point relabelling `p -> p + s` (mod 2k), split kept.
    pub fn rotate(&self, s: i64) -> Matching {
        let n = self.points();
        if n == 0 {
            return self.clone();
        }
        let sh = s.rem_euclid(n as i64) as usize;
        let mut partner = vec![0; n];
        for p in 0..n {
            partner[(p + sh) % n] = (self.partner[p] + sh) % n;
        }
        Matching { partner, split: self.split }
    }

    /// Horizontal reflection: bottom and top exchange roles.
    pub fn reflect(&self) -> Matching {
        let n = self.points();
        let mut partner = vec![0; n];
        for p in 0..n {
            partner[n - 1 - p] = n - 1 - self.partner[p];
        }
        Matching { partner, split: (self.split.1, self.split.0) }
    }
}

fn arcs_of(partner: &[usize]) -> Vec<(usize, usize)> {
    partner
        .iter()
        .enumerate()
        .filter(|(i, &p)| *i < p)
        .map(|(i, &p)| (i, p))
        .collect()
}

/// Partner vectors of every noncrossing perfect matching on `2k` points,
/// in lexicographic order.
fn noncrossing_partners(k: usize) -> Vec<Vec<usize>> {
    fn arcs_in(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for j in (lo + 1..hi).step_by(2) {
            let outside = arcs_in(j + 1, hi);
            for inner in arcs_in(lo + 1, j) {
                for rest in &outside {
                    let mut v = vec![(lo, j)];
                    v.extend(inner.iter().copied());
                    v.extend(rest.iter().copied());
                    out.push(v);
                }
            }
        }
        out
    }
    let mut out: Vec<Vec<usize>> = arcs_in(0, 2 * k)
        .into_iter()
        .map(|arcs| {
            let mut partner = vec![0; 2 * k];
            for (a, b) in arcs {
                partner[a] = b;
                partner[b] = a;
            }
            partner
        })
        .collect();
    out.sort();
    out
}

/// All crossingless matchings on `2k` points with the given strip split.
pub fn enumerate_matchings_split(k: usize, split: (usize, usize), bound: usize) -> Result<Vec<Matching>, BoundError> {
    if k > bound {
        return Err(BoundError { what: "k", value: k, bound });
    }
    assert_eq!(split.0 + split.1, 2 * k, "split must cover all points");
    Ok(noncrossing_partners(k).into_iter().map(|partner| Matching { partner, split }).collect())
}

/// All crossingless matchings on `2k` points, presented as disks `0 -> 2k`.
pub fn enumerate_matchings(k: usize, bound: usize) -> Result<Vec<Matching>, BoundError> {
    enumerate_matchings_split(k, (0, 2 * k), bound)
}

/// Matching drawn in the outer disk, plus the face containing infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OuterMatching {
    matching: Matching,
    infinity_face: usize,
}

impl OuterMatching {
    pub fn new(matching: Matching, infinity_face: usize) -> Result<Self, DiagramError> {
        if !matching.is_region(infinity_face) {
            return Err(DiagramError::Region(infinity_face));
        }
        Ok(OuterMatching { matching, infinity_face })
    }

    pub fn matching(&self) -> &Matching {
        &self.matching
    }

    pub fn infinity_face(&self) -> usize {
        self.infinity_face
    }

    pub fn k(&self) -> usize {
        self.matching.k()
    }

    pub fn rotate(&self, s: i64) -> OuterMatching {
        let n = self.matching.points();
        let m = self.matching.rotate(s);
        if n == 0 {
            return OuterMatching { matching: m, infinity_face: 0 };
        }
        let seg = (self.infinity_face as i64 + s).rem_euclid(n as i64) as usize;
        let inf = m.region_of_segment(seg);
        OuterMatching { matching: m, infinity_face: inf }
    }
}

/// All outer matchings on `2k` points: every matching with each of its
/// `k + 1` faces chosen as the infinity face.
pub fn enumerate_outer_matchings(k: usize, bound: usize) -> Result<Vec<OuterMatching>, BoundError> {
    let ms = enumerate_matchings(k, bound)?;
    let mut out = Vec::new();
    for m in ms {
        for r in m.regions() {
            out.push(OuterMatching { matching: m.clone(), infinity_face: r });
        }
    }
    Ok(out)
}

pub fn catalan(n: usize) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i as u128 + 1);
    }
    acc
}
