//! Decorated diagrams: a crossingless matching with algebra elements and
//! circular forms floating in its regions, together with the planar
//! assembly operations (composition, tensor product, reflection, rotation).

use crate::error::DiagramError;
use crate::form::CircularForm;
use crate::matching::{Matching, OuterMatching};
use crate::scalar::Q;
use crate::unionfind::UnionFind;
use std::collections::BTreeMap;

/// Reference to an element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// A basis vector, 0-based.
    Basis(usize),
    /// Explicit coordinates in the algebra basis.
    Coords(Vec<Q>),
}

/// One item floating in a region.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Content {
    Form(CircularForm),
    Elem(Label),
    /// A circle together with the contents of its inner face.
    Loop(Vec<Content>),
}

impl Content {
    pub fn basis(i: usize) -> Content {
        Content::Elem(Label::Basis(i))
    }

    /// Number of circles, counting every loop and every circle of every form.
    pub fn circle_count(&self) -> usize {
        match self {
            Content::Form(f) => f.circle_count(),
            Content::Elem(_) => 0,
            Content::Loop(inner) => 1 + inner.iter().map(Content::circle_count).sum::<usize>(),
        }
    }
}

/// Canonical content list: loops whose interiors hold only circles become
/// forms, all forms are merged into one, and items are sorted.
pub fn normalize(list: Vec<Content>) -> Vec<Content> {
    let mut forms = Vec::new();
    let mut rest = Vec::new();
    for c in list {
        match c {
            Content::Form(f) => forms.push(f),
            Content::Elem(l) => rest.push(Content::Elem(l)),
            Content::Loop(inner) => {
                let inner = normalize(inner);
                match inner.as_slice() {
                    [] => forms.push(CircularForm::circle()),
                    [Content::Form(f)] => forms.push(f.wrap()),
                    _ => rest.push(Content::Loop(inner)),
                }
            }
        }
    }
    let merged = CircularForm::union_all(forms.iter());
    if !merged.is_empty() {
        rest.push(Content::Form(merged));
    }
    rest.sort();
    rest
}

/// A matching with contents attached to its regions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    matching: Matching,
    contents: BTreeMap<usize, Vec<Content>>,
}

impl Diagram {
    pub fn new(matching: Matching, contents: BTreeMap<usize, Vec<Content>>) -> Result<Self, DiagramError> {
        let regions = matching.regions();
        let mut clean = BTreeMap::new();
        for (r, list) in contents {
            if !regions.contains(&r) {
                return Err(DiagramError::Region(r));
            }
            let list = normalize(list);
            if !list.is_empty() {
                clean.insert(r, list);
            }
        }
        Ok(Diagram { matching, contents: clean })
    }

    pub fn bare(matching: Matching) -> Self {
        Diagram { matching, contents: BTreeMap::new() }
    }

    /// The empty diagram `0 -> 0`.
    pub fn empty() -> Self {
        Diagram::bare(Matching::empty())
    }

    /// A closed diagram holding the given contents.
    pub fn closed(contents: Vec<Content>) -> Self {
        Diagram::new(Matching::empty(), BTreeMap::from([(0, contents)])).expect("region 0 exists")
    }

    pub fn identity(n: usize) -> Self {
        Diagram::bare(Matching::identity(n))
    }

    /// Arc `0 -> 2`.
    pub fn cup() -> Self {
        Diagram::bare(Matching::from_arcs(1, &[(0, 1)], (0, 2)).unwrap())
    }

    /// Arc `2 -> 0`.
    pub fn cap() -> Self {
        Diagram::bare(Matching::from_arcs(1, &[(0, 1)], (2, 0)).unwrap())
    }

    pub fn matching(&self) -> &Matching {
        &self.matching
    }

    pub fn split(&self) -> (usize, usize) {
        self.matching.split()
    }

    pub fn contents(&self) -> &BTreeMap<usize, Vec<Content>> {
        &self.contents
    }

    pub fn region_contents(&self, r: usize) -> &[Content] {
        self.contents.get(&r).map_or(&[], Vec::as_slice)
    }

    /// Adds `c` to region `r`.
    pub fn with(mut self, r: usize, c: Content) -> Result<Self, DiagramError> {
        if !self.matching.is_region(r) {
            return Err(DiagramError::Region(r));
        }
        let mut list = self.contents.remove(&r).unwrap_or_default();
        list.push(c);
        let list = normalize(list);
        if !list.is_empty() {
            self.contents.insert(r, list);
        }
        Ok(self)
    }

    /// Same diagram in a different strip presentation (bending).
    pub fn with_split(&self, split: (usize, usize)) -> Result<Self, DiagramError> {
        Ok(Diagram { matching: self.matching.with_split(split)?, contents: self.contents.clone() })
    }

    pub fn is_closed(&self) -> bool {
        self.matching.points() == 0
    }

    /// Contents of a closed diagram.
    pub fn closed_contents(&self) -> &[Content] {
        self.region_contents(0)
    }

    pub fn circle_count(&self) -> usize {
        self.contents.values().flatten().map(Content::circle_count).sum()
    }

    /// Moves contents along a segment relabelling `seg -> f(seg)` onto `target`.
    fn transport(&self, target: Matching, f: impl Fn(usize) -> usize) -> Diagram {
        let n = self.matching.points();
        let mut contents = BTreeMap::new();
        for (r, list) in &self.contents {
            let r2 = if n == 0 { 0 } else { target.region_of_segment(f(*r)) };
            contents.insert(r2, list.clone());
        }
        Diagram { matching: target, contents }
    }

    /// Horizontal reflection (the bar involution).
    pub fn reflect(&self) -> Diagram {
        let n = self.matching.points();
        self.transport(self.matching.reflect(), |s| (2 * n - 2 - s) % n)
    }

    /// Cyclic relabelling of points by `s`.
    pub fn rotate(&self, s: i64) -> Diagram {
        let n = self.matching.points();
        let target = self.matching.rotate(s);
        if n == 0 {
            return self.clone();
        }
        self.transport(target, |r| (r as i64 + s).rem_euclid(n as i64) as usize)
    }

    /// Underlying matching, total number of circles, and the non-circle
    /// contents (labels inside loops are hoisted to their region).
    pub fn arc_decompose(&self) -> (Matching, usize, BTreeMap<usize, Vec<Label>>) {
        fn labels(list: &[Content], out: &mut Vec<Label>) {
            for c in list {
                match c {
                    Content::Elem(l) => out.push(l.clone()),
                    Content::Loop(inner) => labels(inner, out),
                    Content::Form(_) => {}
                }
            }
        }
        let mut stripped = BTreeMap::new();
        for (r, list) in &self.contents {
            let mut ls = Vec::new();
            labels(list, &mut ls);
            if !ls.is_empty() {
                stripped.insert(*r, ls);
            }
        }
        (self.matching.clone(), self.circle_count(), stripped)
    }

    /// Label index of the region containing each segment. Every region must
    /// carry exactly one basis label and nothing else.
    pub fn boundary_sequence(&self) -> Result<Vec<usize>, DiagramError> {
        let mut label = BTreeMap::new();
        for r in self.matching.regions() {
            match self.region_contents(r) {
                [Content::Elem(Label::Basis(i))] => {
                    label.insert(r, *i);
                }
                _ => return Err(DiagramError::Label(format!("region {} lacks a unique basis label", r + 1))),
            }
        }
        Ok(self.matching.segment_regions().iter().map(|r| label[r]).collect())
    }
}

/// Vertical composition `top ∘ bottom` of `bottom: n -> m` and `top: m -> k`.
pub fn compose(top: &Diagram, bottom: &Diagram) -> Result<Diagram, DiagramError> {
    let (n, m) = bottom.split();
    let (m2, k) = top.split();
    if m != m2 {
        return Err(DiagramError::Arity(format!("top has {m2} inputs but bottom has {m} outputs")));
    }
    let a = &bottom.matching;
    let b = &top.matching;
    let na = n + m;
    let nb = m + k;
    let a_mid = |j: usize| n + m - 1 - j;

    // Through-strands: trace from every outer point.
    let mut res_partner = vec![usize::MAX; n + k];
    let mut mid_seen = vec![false; m];
    for r in 0..n + k {
        if res_partner[r] != usize::MAX {
            continue;
        }
        let mut on_a = r < n;
        let mut p = if on_a { r } else { m + r - n };
        let end = loop {
            if on_a {
                let q = a.partner(p);
                if q < n {
                    break q;
                }
                let j = n + m - 1 - q;
                mid_seen[j] = true;
                on_a = false;
                p = j;
            } else {
                let q = b.partner(p);
                if q >= m {
                    break n + q - m;
                }
                mid_seen[q] = true;
                on_a = true;
                p = a_mid(q);
            }
        };
        res_partner[r] = end;
        res_partner[end] = r;
    }

    // Closed loops among the remaining middle positions.
    let mut loops: Vec<Vec<usize>> = Vec::new();
    for j0 in 0..m {
        if mid_seen[j0] {
            continue;
        }
        let mut positions = Vec::new();
        let mut cur = j0;
        loop {
            mid_seen[cur] = true;
            positions.push(cur);
            let j1 = n + m - 1 - a.partner(a_mid(cur));
            mid_seen[j1] = true;
            positions.push(j1);
            cur = b.partner(j1);
            if cur == j0 {
                break;
            }
        }
        positions.sort_unstable();
        loops.push(positions);
    }

    // Faces: union of bottom regions and top regions along middle intervals.
    let a_regions = if na == 0 { vec![0] } else { a.segment_regions() };
    let b_regions = if nb == 0 { vec![0] } else { b.segment_regions() };
    let a_nodes = na.max(1);
    let a_node = |s: usize| a_regions[s % a_regions.len()];
    let b_node = |s: usize| a_nodes + b_regions[s % b_regions.len()];
    let mut uf = UnionFind::new(a_nodes + nb.max(1));
    let interval = |j: usize| -> (usize, usize) {
        let sa = if na == 0 { 0 } else { (n + m + na - 1 - j) % na };
        let sb = if nb == 0 { 0 } else { (j + nb - 1) % nb };
        (a_node(sa), b_node(sb))
    };
    for j in 0..=m {
        let (x, y) = interval(j);
        uf.union(x, y);
    }

    let res_n = n + k;
    let result = if res_n == 0 {
        Matching::empty()
    } else {
        Matching::new(res_partner, (n, k)).expect("composition of planar matchings is planar")
    };
    let res_seg_node = |s: usize| if s < n { a_node(s) } else { b_node((s - n + m) % nb) };

    // Contents per face class.
    let mut face_contents: BTreeMap<usize, Vec<Content>> = BTreeMap::new();
    for (r, list) in &bottom.contents {
        face_contents.entry(uf.find(*r)).or_default().extend(list.iter().cloned());
    }
    for (r, list) in &top.contents {
        face_contents.entry(uf.find(a_nodes + *r)).or_default().extend(list.iter().cloned());
    }

    // Each loop separates the faces on its two sides.
    let loop_faces: Vec<(usize, usize)> = loops
        .iter()
        .map(|ps| {
            let j = ps[0];
            (uf.find(interval(j).0), uf.find(interval(j + 1).0))
        })
        .collect();

    let mut roots: BTreeMap<usize, usize> = BTreeMap::new();
    if res_n == 0 {
        roots.insert(uf.find(interval(0).0), 0);
    } else {
        for r in result.regions() {
            roots.insert(uf.find(res_seg_node(r)), r);
        }
    }

    let mut used = vec![false; loops.len()];
    let mut contents = BTreeMap::new();
    for (&face, &region) in &roots {
        let list = nest(face, usize::MAX, &loop_faces, &mut used, &mut face_contents);
        contents.insert(region, list);
    }
    debug_assert!(used.iter().all(|&u| u), "every loop is reachable from a boundary face");
    Diagram::new(result, contents)
}

/// Contents of `face` followed by a `Loop` package for every loop bordering
/// it other than `via`, each holding the face on the loop's far side.
pub(crate) fn nest(
    face: usize,
    via: usize,
    loop_faces: &[(usize, usize)],
    used: &mut [bool],
    face_contents: &mut BTreeMap<usize, Vec<Content>>,
) -> Vec<Content> {
    let mut out = face_contents.remove(&face).unwrap_or_default();
    for l in 0..loop_faces.len() {
        if l == via || used[l] {
            continue;
        }
        let (f1, f2) = loop_faces[l];
        let other = if f1 == face {
            f2
        } else if f2 == face {
            f1
        } else {
            continue;
        };
        used[l] = true;
        out.push(Content::Loop(nest(other, l, loop_faces, used, face_contents)));
    }
    out
}

/// Side-by-side placement of `d1` (left) and `d2` (right).
pub fn tensor(d1: &Diagram, d2: &Diagram) -> Diagram {
    let (n1, m1) = d1.split();
    let (n2, m2) = d2.split();
    let (p1, p2) = (n1 + m1, n2 + m2);
    let n = n1 + n2;
    let total = p1 + p2;
    let map1 = |p: usize| if p < n1 { p } else { n + m2 + (p - n1) };
    let map2 = |p: usize| if p < n2 { n1 + p } else { n + (p - n2) };

    let mut partner = vec![0; total];
    for p in 0..p1 {
        partner[map1(p)] = map1(d1.matching.partner(p));
    }
    for p in 0..p2 {
        partner[map2(p)] = map2(d2.matching.partner(p));
    }
    let result = if total == 0 {
        Matching::empty()
    } else {
        Matching::new(partner, (n, m1 + m2)).expect("tensor of planar matchings is planar")
    };

    let r1 = if p1 == 0 { vec![0] } else { d1.matching.segment_regions() };
    let r2 = if p2 == 0 { vec![0] } else { d2.matching.segment_regions() };
    let off = p1.max(1);
    let mut uf = UnionFind::new(off + p2.max(1));
    let right1 = if p1 == 0 { 0 } else { r1[(n1 + p1 - 1) % p1] };
    let left2 = off + if p2 == 0 { 0 } else { r2[p2 - 1] };
    uf.union(right1, left2);

    // node of the source segment following each result point
    let mut seg_node = vec![0; total];
    for p in 0..p1 {
        seg_node[map1(p)] = r1[p];
    }
    for p in 0..p2 {
        seg_node[map2(p)] = off + r2[p];
    }

    let mut class_region: BTreeMap<usize, usize> = BTreeMap::new();
    if total == 0 {
        class_region.insert(uf.find(0), 0);
    } else {
        let regs = result.segment_regions();
        for s in 0..total {
            class_region.insert(uf.find(seg_node[s]), regs[s]);
        }
    }
    let mut contents: BTreeMap<usize, Vec<Content>> = BTreeMap::new();
    for (r, list) in &d1.contents {
        contents.entry(class_region[&uf.find(*r)]).or_default().extend(list.iter().cloned());
    }
    for (r, list) in &d2.contents {
        contents.entry(class_region[&uf.find(off + *r)]).or_default().extend(list.iter().cloned());
    }
    Diagram::new(result, contents).expect("regions come from the result matching")
}

/// An outer matching with contents in its faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OuterDiagram {
    outer: OuterMatching,
    contents: BTreeMap<usize, Vec<Content>>,
}

impl OuterDiagram {
    pub fn new(outer: OuterMatching, contents: BTreeMap<usize, Vec<Content>>) -> Result<Self, DiagramError> {
        let regions = outer.matching().regions();
        let mut clean = BTreeMap::new();
        for (r, list) in contents {
            if !regions.contains(&r) {
                return Err(DiagramError::Region(r));
            }
            let list = normalize(list);
            if !list.is_empty() {
                clean.insert(r, list);
            }
        }
        Ok(OuterDiagram { outer, contents: clean })
    }

    pub fn bare(outer: OuterMatching) -> Self {
        OuterDiagram { outer, contents: BTreeMap::new() }
    }

    pub fn outer(&self) -> &OuterMatching {
        &self.outer
    }

    pub fn contents(&self) -> &BTreeMap<usize, Vec<Content>> {
        &self.contents
    }

    pub fn rotate(&self, s: i64) -> OuterDiagram {
        let n = self.outer.matching().points();
        let target = self.outer.rotate(s);
        if n == 0 {
            return self.clone();
        }
        let mut contents = BTreeMap::new();
        for (r, list) in &self.contents {
            let seg = (*r as i64 + s).rem_euclid(n as i64) as usize;
            contents.insert(target.matching().region_of_segment(seg), list.clone());
        }
        OuterDiagram { outer: target, contents }
    }
}
