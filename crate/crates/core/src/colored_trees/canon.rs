use std::collections::HashMap;

use super::{ColoredTree, Vertex};

/// A tree relabelled into canonical order together with the relabelling.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub tree: ColoredTree,
    /// `vertex_order[i]` is the original index of canonical vertex `i`
    pub vertex_order: Vec<usize>,
    /// `edge_order[i]` is the original index of canonical edge `i`
    pub edge_order: Vec<usize>,
    pub encoding: String,
}

struct Rooted {
    enc: String,
    order: Vec<usize>,
    edges: Vec<usize>,
}

fn rooted(t: &ColoredTree, adj: &[Vec<(usize, usize)>], v: usize, parent: usize) -> Rooted {
    let mut kids: Vec<(Vertex, Rooted, usize)> = adj[v]
        .iter()
        .filter(|(w, _)| *w != parent)
        .map(|&(w, e)| (t.vertices[w], rooted(t, adj, w, v), e))
        .collect();
    kids.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.enc.cmp(&b.1.enc)));
    let mut enc = t.vertices[v].token();
    let mut order = vec![v];
    let mut edges = Vec::new();
    if !kids.is_empty() {
        let parts: Vec<&str> = kids.iter().map(|k| k.1.enc.as_str()).collect();
        enc.push('[');
        enc.push_str(&parts.join(","));
        enc.push(']');
        for (_, r, e) in kids {
            edges.push(e);
            edges.extend(r.edges);
            order.extend(r.order);
        }
    }
    Rooted { enc, order, edges }
}

pub(super) fn centroids(t: &ColoredTree, adj: &[Vec<(usize, usize)>]) -> Vec<usize> {
    let n = t.vertices.len();
    // iterative post-order for subtree sizes from root 0
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &(w, _) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let mut best = usize::MAX;
    let mut out = Vec::new();
    for v in 0..n {
        let mut worst = n - size[v];
        for &(w, _) in &adj[v] {
            if parent[w] == v {
                worst = worst.max(size[w]);
            }
        }
        if worst < best {
            best = worst;
            out.clear();
        }
        if worst == best {
            out.push(v);
        }
    }
    out
}

pub(super) fn canonicalize(t: &ColoredTree) -> Canonical {
    let adj = t.adjacency();
    let best = centroids(t, &adj)
        .into_iter()
        .map(|c| rooted(t, &adj, c, usize::MAX))
        .min_by(|a, b| a.enc.cmp(&b.enc))
        .expect("nonempty tree");
    let pos: HashMap<usize, usize> = best.order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let vertices = best.order.iter().map(|&v| t.vertices[v]).collect();
    let edges = best
        .edges
        .iter()
        .map(|&e| {
            let (a, b) = t.edges[e];
            let (a, b) = (pos[&a], pos[&b]);
            (a.min(b), a.max(b))
        })
        .collect();
    Canonical {
        tree: ColoredTree { vertices, edges },
        vertex_order: best.order,
        edge_order: best.edges,
        encoding: best.enc,
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn rooted_aut(t: &ColoredTree, adj: &[Vec<(usize, usize)>], v: usize, parent: usize) -> (String, u64) {
    let mut kids: Vec<(Vertex, String, u64)> = adj[v]
        .iter()
        .filter(|(w, _)| *w != parent)
        .map(|&(w, _)| {
            let (e, a) = rooted_aut(t, adj, w, v);
            (t.vertices[w], e, a)
        })
        .collect();
    kids.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    let mut aut: u64 = kids.iter().map(|k| k.2).product();
    let mut i = 0;
    while i < kids.len() {
        let mut j = i;
        while j < kids.len() && kids[j].1 == kids[i].1 {
            j += 1;
        }
        aut *= factorial(j - i);
        i = j;
    }
    let mut enc = t.vertices[v].token();
    if !kids.is_empty() {
        let parts: Vec<&str> = kids.iter().map(|k| k.1.as_str()).collect();
        enc.push('[');
        enc.push_str(&parts.join(","));
        enc.push(']');
    }
    (enc, aut)
}

pub(super) fn automorphism_order(t: &ColoredTree) -> u64 {
    let adj = t.adjacency();
    let cs = centroids(t, &adj);
    if cs.len() == 1 {
        return rooted_aut(t, &adj, cs[0], usize::MAX).1;
    }
    let (a, b) = (cs[0], cs[1]);
    let (ea, aa) = rooted_aut(t, &adj, a, b);
    let (eb, ab) = rooted_aut(t, &adj, b, a);
    if ea == eb {
        2 * aa * ab
    } else {
        aa * ab
    }
}
