use std::collections::BTreeSet;

use super::{ColoredTree, Vertex};

/// A nontrivial smoothing of `T`: contract the edges in `contracted`.
/// The target is stored in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smoothing {
    pub contracted: Vec<usize>,
    /// `phi[v]` is the target vertex receiving `v`
    pub phi: Vec<usize>,
    /// `edge_map[e']` is the edge of `T` joining the fibers of target edge `e'`
    pub edge_map: Vec<usize>,
    pub target: ColoredTree,
    pub target_encoding: String,
}

impl Smoothing {
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.target.num_vertices()];
        for (v, &f) in self.phi.iter().enumerate() {
            out[f].push(v);
        }
        out
    }
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let n = p[y];
        p[y] = r;
        y = n;
    }
    r
}

/// Contract `f`; `None` when a fiber mixes colors or the result is not extremal.
pub fn contract(t: &ColoredTree, f: &[usize]) -> Option<Smoothing> {
    let n = t.num_vertices();
    let mut p: Vec<usize> = (0..n).collect();
    for &e in f {
        let (a, b) = t.edges[e];
        let (ra, rb) = (find(&mut p, a), find(&mut p, b));
        p[ra] = rb;
    }
    let mut fiber_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..n {
        let r = find(&mut p, v);
        if fiber_of[r] == usize::MAX {
            fiber_of[r] = reps.len();
            reps.push(r);
        }
        fiber_of[v] = fiber_of[r];
    }
    let m = reps.len();
    let mut verts = vec![Vertex::ZERO; m];
    for v in 0..n {
        let x = t.vertices[v];
        if x.genus == 0 {
            continue;
        }
        let y = &mut verts[fiber_of[v]];
        if y.color.is_some() && y.color != x.color {
            return None;
        }
        y.color = x.color;
        y.genus += x.genus;
    }
    let fs: BTreeSet<usize> = f.iter().copied().collect();
    let kept: Vec<usize> = (0..t.num_edges()).filter(|e| !fs.contains(e)).collect();
    let edges: Vec<(usize, usize)> = kept
        .iter()
        .map(|&e| (fiber_of[t.edges[e].0], fiber_of[t.edges[e].1]))
        .collect();
    let raw = ColoredTree {
        vertices: verts,
        edges,
    };
    if !raw.is_extremal_shape() {
        return None;
    }
    let c = raw.canonical();
    let mut pos = vec![0; m];
    for (i, &old) in c.vertex_order.iter().enumerate() {
        pos[old] = i;
    }
    Some(Smoothing {
        contracted: fs.into_iter().collect(),
        phi: (0..n).map(|v| pos[fiber_of[v]]).collect(),
        edge_map: c.edge_order.iter().map(|&i| kept[i]).collect(),
        target: c.tree,
        target_encoding: c.encoding,
    })
}

fn subsets_containing(m: usize, e: usize, size: usize) -> Vec<Vec<usize>> {
    let others: Vec<usize> = (0..m).filter(|&x| x != e).collect();
    let mut out = Vec::new();
    let mut cur = vec![e];
    fn go(others: &[usize], start: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            let mut s = cur.clone();
            s.sort_unstable();
            out.push(s);
            return;
        }
        for i in start..others.len() {
            cur.push(others[i]);
            go(others, i + 1, left - 1, cur, out);
            cur.pop();
        }
    }
    go(&others, 0, size - 1, &mut cur, &mut out);
    out
}

/// For each edge with a genus-0 endpoint, the smallest contracted sets
/// containing it that give a valid smoothing.
pub fn minimal_smoothings(t: &ColoredTree) -> Vec<Vec<usize>> {
    let m = t.num_edges();
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    for e in 0..m {
        let (a, b) = t.edges[e];
        if t.vertices[a].genus > 0 && t.vertices[b].genus > 0 {
            continue;
        }
        for size in 1..=m {
            let hits: Vec<Vec<usize>> = subsets_containing(m, e, size)
                .into_iter()
                .filter(|f| contract(t, f).is_some())
                .collect();
            if !hits.is_empty() {
                out.extend(hits);
                break;
            }
        }
    }
    out.into_iter().collect()
}

/// All nontrivial smoothings, as the closure of minimal smoothings under
/// iteration. Sorted by contracted edge set.
pub fn smoothings(t: &ColoredTree) -> Vec<Smoothing> {
    let mut done: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: Vec<Smoothing> = Vec::new();
    for f in minimal_smoothings(t) {
        if done.insert(f.clone()) {
            queue.push(contract(t, &f).expect("minimal smoothing is valid"));
        }
    }
    let mut out = Vec::new();
    while let Some(s) = queue.pop() {
        for f2 in minimal_smoothings(&s.target) {
            let mut f: Vec<usize> = s.contracted.clone();
            f.extend(f2.iter().map(|&e| s.edge_map[e]));
            f.sort_unstable();
            if done.insert(f.clone()) {
                if let Some(next) = contract(t, &f) {
                    queue.push(next);
                }
            }
        }
        out.push(s);
    }
    out.sort_by(|a, b| a.contracted.cmp(&b.contracted));
    out
}

/// Every nonempty edge subset checked directly.
pub fn smoothings_brute_force(t: &ColoredTree) -> Vec<Smoothing> {
    let m = t.num_edges();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << m) {
        let f: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        if let Some(s) = contract(t, &f) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.contracted.cmp(&b.contracted));
    out
}
