//! Circular forms: finite families of disjoint nested circles in the plane,
//! stored as canonically ordered rooted forests.

use crate::error::{BoundError, FormParseError};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

/// Default enumeration bound on the number of circles.
pub const DEFAULT_FORM_BOUND: usize = 12;

/// A circle together with everything it encloses.
#[derive(Clone, Debug)]
pub struct Tree {
    inner: CircularForm,
    enc: String,
}

impl Tree {
    pub fn new(inner: CircularForm) -> Self {
        let enc = format!("({})", inner.enc);
        Tree { inner, enc }
    }

    pub fn inner(&self) -> &CircularForm {
        &self.inner
    }

    pub fn encoding(&self) -> &str {
        &self.enc
    }

    pub fn size(&self) -> usize {
        self.inner.count + 1
    }
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        self.enc == other.enc
    }
}
impl Eq for Tree {}

/// Rooted unordered forest, one node per circle.
///
/// Trees are kept sorted by their encodings (ascending byte order, so `"(())"`
/// sorts before `"()"`), which makes the concatenated encoding canonical.
#[derive(Clone, Debug, Default)]
pub struct CircularForm {
    trees: Vec<Tree>,
    enc: String,
    count: usize,
}

impl PartialEq for CircularForm {
    fn eq(&self, other: &Self) -> bool {
        self.enc == other.enc
    }
}
impl Eq for CircularForm {}

impl Hash for CircularForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.enc.hash(state);
    }
}

impl PartialOrd for CircularForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CircularForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.enc.cmp(&other.enc)
    }
}

impl CircularForm {
    pub fn empty() -> Self {
        CircularForm::default()
    }

    pub fn from_trees(mut trees: Vec<Tree>) -> Self {
        trees.sort_by(|a, b| a.enc.cmp(&b.enc));
        let enc = trees.iter().map(|t| t.enc.as_str()).collect();
        let count = trees.iter().map(Tree::size).sum();
        CircularForm { trees, enc, count }
    }

    /// A single circle: `wrap(∅)`.
    pub fn circle() -> Self {
        CircularForm::empty().wrap()
    }

    /// `n` unnested circles.
    pub fn circles(n: usize) -> Self {
        CircularForm::from_trees(vec![Tree::new(CircularForm::empty()); n])
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn circle_count(&self) -> usize {
        self.count
    }

    /// Canonical encoding; the empty form encodes as `""`.
    pub fn encoding(&self) -> &str {
        &self.enc
    }

    /// Surrounds the whole form with one new circle.
    pub fn wrap(&self) -> CircularForm {
        CircularForm::from_trees(vec![Tree::new(self.clone())])
    }

    /// Disjoint union (the product of circular forms).
    pub fn union(&self, other: &CircularForm) -> CircularForm {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        CircularForm::from_trees(trees)
    }

    pub fn union_all<'a>(forms: impl IntoIterator<Item = &'a CircularForm>) -> CircularForm {
        CircularForm::from_trees(forms.into_iter().flat_map(|f| f.trees.iter().cloned()).collect())
    }

    /// Parses a balanced-parenthesis string; `""` and `"∅"` are the empty form.
    pub fn parse(s: &str) -> Result<CircularForm, FormParseError> {
        Ok(circles_of(&forest_of(s)?))
    }

    /// Maximum nesting depth (0 for the empty form).
    pub fn depth(&self) -> usize {
        self.trees.iter().map(|t| 1 + t.inner.depth()).max().unwrap_or(0)
    }

    /// Canonical representative of the class of forms isotopic on the sphere.
    pub fn spherical_canonical(&self) -> CircularForm {
        let forest = forest_of_form(self);
        let n = forest.parent.len() + 1;
        // vertex 0 is the face containing infinity; node i is vertex i + 1
        let mut adj = vec![Vec::new(); n];
        for (i, p) in forest.parent.iter().enumerate() {
            let pv = p.map_or(0, |x| x + 1);
            adj[pv].push(i + 1);
            adj[i + 1].push(pv);
        }
        (0..n)
            .map(|root| rooted_form(&adj, root, usize::MAX))
            .min()
            .expect("at least one vertex")
    }
}

fn rooted_form(adj: &[Vec<usize>], v: usize, parent: usize) -> CircularForm {
    CircularForm::from_trees(
        adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| Tree::new(rooted_form(adj, w, v)))
            .collect(),
    )
}

impl fmt::Display for CircularForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.enc.is_empty() {
            f.write_str("∅")
        } else {
            f.write_str(&self.enc)
        }
    }
}

/// A rooted forest as a parent array, nodes listed in preorder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forest {
    pub parent: Vec<Option<usize>>,
}

impl Forest {
    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn children(&self, v: Option<usize>) -> Vec<usize> {
        (0..self.parent.len()).filter(|&i| self.parent[i] == v).collect()
    }
}

/// Reads a raw nesting expression into a forest (one node per circle,
/// parent = immediately enclosing circle), keeping the planar order given.
pub fn forest_of(s: &str) -> Result<Forest, FormParseError> {
    let s = s.trim();
    if s.is_empty() || s == "∅" {
        return Ok(Forest { parent: Vec::new() });
    }
    let mut parent = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for (offset, ch) in s.char_indices() {
        match ch {
            '(' => {
                parent.push(stack.last().copied());
                stack.push(parent.len() - 1);
            }
            ')' => {
                if stack.pop().is_none() {
                    return Err(FormParseError { offset, msg: "unmatched `)`".into() });
                }
            }
            c if c.is_whitespace() => {}
            c => return Err(FormParseError { offset, msg: format!("unexpected character `{c}`") }),
        }
    }
    if !stack.is_empty() {
        return Err(FormParseError { offset: s.len(), msg: "unclosed `(`".into() });
    }
    Ok(Forest { parent })
}

/// Inverse of [`forest_of`]: the circle diagram with one circle per node.
pub fn circles_of(f: &Forest) -> CircularForm {
    fn build(kids: &[Vec<usize>], v: usize) -> Tree {
        Tree::new(CircularForm::from_trees(kids[v].iter().map(|&c| build(kids, c)).collect()))
    }
    let n = f.parent.len();
    let mut kids = vec![Vec::new(); n];
    let mut roots = Vec::new();
    for (i, p) in f.parent.iter().enumerate() {
        match p {
            Some(p) => kids[*p].push(i),
            None => roots.push(i),
        }
    }
    CircularForm::from_trees(roots.iter().map(|&r| build(&kids, r)).collect())
}

/// Canonical preorder forest of a form.
pub fn forest_of_form(u: &CircularForm) -> Forest {
    fn walk(t: &Tree, parent: Option<usize>, out: &mut Vec<Option<usize>>) {
        out.push(parent);
        let me = out.len() - 1;
        for c in t.inner.trees() {
            walk(c, Some(me), out);
        }
    }
    let mut out = Vec::new();
    for t in u.trees() {
        walk(t, None, &mut out);
    }
    Forest { parent: out }
}

/// All forms with exactly `c` circles, sorted by encoding.
pub fn enumerate_circular_forms(c: usize, bound: usize) -> Result<Vec<CircularForm>, BoundError> {
    if c > bound {
        return Err(BoundError { what: "circle count", value: c, bound });
    }
    Ok(forms_by_size(c).swap_remove(c))
}

/// Forms grouped by circle count, for counts `0..=c`.
pub fn forms_by_size(c: usize) -> Vec<Vec<CircularForm>> {
    let mut forests: Vec<Vec<CircularForm>> = vec![vec![CircularForm::empty()]];
    // every tree of size <= current, ordered by (size, index)
    let mut trees: Vec<Tree> = Vec::new();
    for size in 1..=c {
        trees.extend(forests[size - 1].iter().map(|f| Tree::new(f.clone())));
        let mut out = Vec::new();
        let mut acc = Vec::new();
        multisets(&trees, size, trees.len(), &mut acc, &mut out);
        out.sort();
        forests.push(out);
    }
    forests
}

fn multisets(trees: &[Tree], rem: usize, max: usize, acc: &mut Vec<Tree>, out: &mut Vec<CircularForm>) {
    if rem == 0 {
        out.push(CircularForm::from_trees(acc.clone()));
        return;
    }
    for i in 0..max {
        let s = trees[i].size();
        if s <= rem {
            acc.push(trees[i].clone());
            multisets(trees, rem - s, i + 1, acc, out);
            acc.pop();
        }
    }
}

/// Distinct sphere classes among forms with `c` circles.
pub fn spherical_classes(c: usize) -> BTreeSet<CircularForm> {
    forms_by_size(c)[c].iter().map(CircularForm::spherical_canonical).collect()
}
