//! Closing a disk diagram by an outer diagram on the same boundary points.

use crate::diagram::{nest, Content, Diagram, OuterDiagram};
use crate::error::DiagramError;
use crate::unionfind::UnionFind;
use std::collections::BTreeMap;

/// A loop of a closed picture with the contents of its inner face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopNode {
    pub contents: Vec<Content>,
    pub children: Vec<LoopNode>,
}

/// Rooted nesting structure of a closed picture; the root is the face
/// containing infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedClosure {
    pub root_contents: Vec<Content>,
    pub loops: Vec<LoopNode>,
}

impl NestedClosure {
    fn from_list(list: Vec<Content>) -> NestedClosure {
        fn node(list: Vec<Content>) -> (Vec<Content>, Vec<LoopNode>) {
            let mut contents = Vec::new();
            let mut loops = Vec::new();
            for c in list {
                match c {
                    Content::Loop(inner) => {
                        let (c2, l2) = node(inner);
                        loops.push(LoopNode { contents: c2, children: l2 });
                    }
                    other => contents.push(other),
                }
            }
            (contents, loops)
        }
        let (root_contents, loops) = node(list);
        NestedClosure { root_contents, loops }
    }

    /// The closure as one content list (loops become `Content::Loop`).
    pub fn to_contents(&self) -> Vec<Content> {
        fn pack(l: &LoopNode) -> Content {
            let mut v = l.contents.clone();
            v.extend(l.children.iter().map(pack));
            Content::Loop(v)
        }
        let mut v = self.root_contents.clone();
        v.extend(self.loops.iter().map(pack));
        v
    }

    pub fn loop_count(&self) -> usize {
        fn count(l: &LoopNode) -> usize {
            1 + l.children.iter().map(count).sum::<usize>()
        }
        self.loops.iter().map(count).sum()
    }

    /// Equality up to reordering of contents and sibling loops.
    pub fn isomorphic(&self, other: &NestedClosure) -> bool {
        crate::diagram::normalize(self.to_contents()) == crate::diagram::normalize(other.to_contents())
    }
}

/// Glues the disk diagram `x` and the outer diagram `y` along their common
/// boundary and returns the nesting structure rooted at the infinity face.
pub fn glue_disk_outer(x: &Diagram, y: &OuterDiagram) -> Result<NestedClosure, DiagramError> {
    let xm = x.matching();
    let ym = y.outer().matching();
    if xm.points() != ym.points() {
        return Err(DiagramError::Arity(format!(
            "disk diagram has {} points but outer diagram has {}",
            xm.points(),
            ym.points()
        )));
    }
    let n = xm.points();
    if !ym.is_region(y.outer().infinity_face()) {
        return Err(DiagramError::Region(y.outer().infinity_face()));
    }

    // loops: cycles alternating inner and outer partners
    let mut seen = vec![false; n];
    let mut loop_points: Vec<usize> = Vec::new();
    for p0 in 0..n {
        if seen[p0] {
            continue;
        }
        let mut p = p0;
        loop {
            seen[p] = true;
            let q = xm.partner(p);
            seen[q] = true;
            p = ym.partner(q);
            if p == p0 {
                break;
            }
        }
        loop_points.push(p0);
    }

    let xr = if n == 0 { vec![0] } else { xm.segment_regions() };
    let yr = if n == 0 { vec![0] } else { ym.segment_regions() };
    let off = n.max(1);
    let mut uf = UnionFind::new(2 * off);
    for s in 0..n.max(1) {
        uf.union(xr[s], off + yr[s]);
    }
    let seg_class = |uf: &mut UnionFind, s: usize| uf.find(xr[s % xr.len()]);

    let loop_faces: Vec<(usize, usize)> = loop_points
        .iter()
        .map(|&p| {
            let before = (p + n - 1) % n;
            (seg_class(&mut uf, before), seg_class(&mut uf, p))
        })
        .collect();

    let mut face_contents: BTreeMap<usize, Vec<Content>> = BTreeMap::new();
    for (r, list) in x.contents() {
        face_contents.entry(uf.find(*r)).or_default().extend(list.iter().cloned());
    }
    for (r, list) in y.contents() {
        face_contents.entry(uf.find(off + *r)).or_default().extend(list.iter().cloned());
    }
    let infinity = uf.find(off + y.outer().infinity_face());
    let mut used = vec![false; loop_faces.len()];
    let list = nest(infinity, usize::MAX, &loop_faces, &mut used, &mut face_contents);
    debug_assert!(used.iter().all(|&u| u));
    Ok(NestedClosure::from_list(list))
}
