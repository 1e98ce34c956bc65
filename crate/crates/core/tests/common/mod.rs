//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's own canonicalisation, enumeration or evaluation.
#![allow(dead_code)]

use skein_core::scalar::Q;
use skein_core::Quadruple;
use std::collections::BTreeSet;

/// All parent arrays on `c` labelled nodes with `parent[i] < i`.
pub fn parent_arrays(c: usize) -> Vec<Vec<Option<usize>>> {
    let mut out = vec![Vec::new()];
    for i in 0..c {
        let mut next = Vec::new();
        for p in &out {
            let mut a = p.clone();
            a.push(None);
            next.push(a);
            for j in 0..i {
                let mut a = p.clone();
                a.push(Some(j));
                next.push(a);
            }
        }
        out = next;
    }
    out
}

/// Canonical nested-list string of a rooted forest: `[` children `]` per
/// node, children sorted as strings.
pub fn forest_canon(parent: &[Option<usize>]) -> String {
    fn node(v: usize, parent: &[Option<usize>]) -> String {
        let mut kids: Vec<String> = (0..parent.len()).filter(|&w| parent[w] == Some(v)).map(|w| node(w, parent)).collect();
        kids.sort();
        format!("[{}]", kids.concat())
    }
    let mut roots: Vec<String> = (0..parent.len()).filter(|&v| parent[v].is_none()).map(|v| node(v, parent)).collect();
    roots.sort();
    roots.concat()
}

/// Number of unlabelled rooted forests on `c` nodes by brute force.
pub fn forest_count(c: usize) -> usize {
    parent_arrays(c).iter().map(|p| forest_canon(p)).collect::<BTreeSet<_>>().len()
}

/// Converts the library's parenthesis encoding into a parent array by a
/// plain stack scan.
pub fn parents_of_parens(s: &str) -> Vec<Option<usize>> {
    let mut parent = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                parent.push(stack.last().copied());
                stack.push(parent.len() - 1);
            }
            ')' => {
                stack.pop();
            }
            _ => {}
        }
    }
    parent
}

/// Free trees on `n` vertices counted through Prüfer sequences, each
/// canonicalised at its centre(s).
pub fn free_tree_count(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let mut seen = BTreeSet::new();
    let total = n.pow((n - 2) as u32);
    for code in 0..total {
        let mut seq = Vec::new();
        let mut c = code;
        for _ in 0..n - 2 {
            seq.push(c % n);
            c /= n;
        }
        seen.insert(free_canon(&prufer_edges(&seq, n), n));
    }
    seen.len()
}

fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn free_canon(edges: &[(usize, usize)], n: usize) -> String {
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| edges.iter().filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None }).collect())
        .collect();
    // centres by repeated leaf stripping
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive: Vec<bool> = vec![true; n];
    let mut remaining = n;
    while remaining > 2 {
        let leaves: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] <= 1).collect();
        for &l in &leaves {
            alive[l] = false;
            remaining -= 1;
            for &w in &adj[l] {
                if alive[w] {
                    deg[w] -= 1;
                }
            }
        }
    }
    fn rooted(v: usize, from: Option<usize>, adj: &[Vec<usize>]) -> String {
        let mut kids: Vec<String> = adj[v].iter().filter(|&&w| Some(w) != from).map(|&w| rooted(w, Some(v), adj)).collect();
        kids.sort();
        format!("[{}]", kids.concat())
    }
    (0..n).filter(|&v| alive[v]).map(|c| rooted(c, None, &adj)).min().unwrap()
}

/// All perfect matchings of `2k` points with no crossing pair, by brute
/// force over all pairings.
pub fn noncrossing_brute(k: usize) -> Vec<Vec<usize>> {
    fn all(points: Vec<usize>, partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if points.is_empty() {
            out.push(partner.clone());
            return;
        }
        let a = points[0];
        for i in 1..points.len() {
            let b = points[i];
            partner[a] = b;
            partner[b] = a;
            let rest: Vec<usize> = points.iter().copied().filter(|&p| p != a && p != b).collect();
            all(rest, partner, out);
        }
    }
    let mut out = Vec::new();
    all((0..2 * k).collect(), &mut vec![0; 2 * k], &mut out);
    out.retain(|p| {
        (0..2 * k).all(|a| {
            (0..2 * k).all(|c| {
                let (b, d) = (p[a], p[c]);
                !(a < c && c < b && b < d)
            })
        })
    });
    out
}

/// Number of closed loops formed by two perfect matchings on the same points.
pub fn loops_of(a: &[usize], b: &[usize]) -> usize {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut loops = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        loops += 1;
        let mut p = s;
        loop {
            seen[p] = true;
            let q = a[p];
            seen[q] = true;
            p = b[q];
            if p == s {
                break;
            }
        }
    }
    loops
}

/// Value of a forest in `Z`: each node is `ω` of the product of its children.
pub fn eval_forest(q: &Quadruple<Q>, parent: &[Option<usize>]) -> Vec<Q> {
    let mut children = vec![Vec::new(); parent.len() + 1];
    for (v, p) in parent.iter().enumerate() {
        children[p.unwrap_or(parent.len())].push(v);
    }
    fn product(q: &Quadruple<Q>, kids: &[usize], children: &[Vec<usize>]) -> Vec<Q> {
        let mut acc = q.algebra.unit.clone();
        for &w in kids {
            acc = q.algebra.mul(&acc, &q.omega_apply(&product(q, &children[w], children)));
        }
        acc
    }
    product(q, &children[parent.len()], &children)
}

/// `α = ε ∘ 𝓕` on a forest.
pub fn alpha_forest(q: &Quadruple<Q>, parent: &[Option<usize>]) -> Q {
    q.trace_apply(&eval_forest(q, parent))
}

/// Inserts forest `u` into face `face` of forest `v` (`None`: outermost).
pub fn insert_forest(v: &[Option<usize>], face: Option<usize>, u: &[Option<usize>]) -> Vec<Option<usize>> {
    let off = v.len();
    let mut out = v.to_vec();
    out.extend(u.iter().map(|p| match p {
        None => face,
        Some(w) => Some(w + off),
    }));
    out
}

/// One representative parent array per unlabelled forest with `c` nodes.
pub fn forest_reps(c: usize) -> Vec<Vec<Option<usize>>> {
    let mut seen = BTreeSet::new();
    parent_arrays(c).into_iter().filter(|p| seen.insert(forest_canon(p))).collect()
}

/// Parenthesis string of a forest, children in index order.
pub fn parens_of_parent(parent: &[Option<usize>]) -> String {
    fn node(v: usize, parent: &[Option<usize>], out: &mut String) {
        out.push('(');
        for w in (0..parent.len()).filter(|&w| parent[w] == Some(v)) {
            node(w, parent, out);
        }
        out.push(')');
    }
    let mut out = String::new();
    for r in (0..parent.len()).filter(|&v| parent[v].is_none()) {
        node(r, parent, &mut out);
    }
    out
}

/// Class of a forest on the sphere: the free tree obtained by adding a
/// vertex for the outer face.
pub fn sphere_class(parent: &[Option<usize>]) -> String {
    let n = parent.len();
    let edges: Vec<(usize, usize)> = parent.iter().enumerate().map(|(v, p)| (v, p.unwrap_or(n))).collect();
    free_canon(&edges, n + 1)
}

/// Rank over ℚ by plain Gaussian elimination on a copy of the rows.
pub fn rank_q(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != Q::from_integer(0.into())) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && m[i][c] != Q::from_integer(0.into()) {
                let f = m[i][c].clone() / pivot.clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row).skip(c) {
                    *x -= y.clone() * f.clone();
                }
            }
        }
        r += 1;
    }
    r
}
