use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::{ColoredTree, Partition, Vertex};

/// Unlabelled trees on `n` vertices, one per isomorphism class.
pub fn free_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 0 {
        return vec![];
    }
    let mut level: Vec<Vec<(usize, usize)>> = vec![vec![]];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for edges in &level {
            for v in 0..m - 1 {
                let mut e = edges.clone();
                e.push((v, m - 1));
                let t = ColoredTree {
                    vertices: vec![Vertex::ZERO; m],
                    edges: e,
                };
                let c = t.canonical();
                if seen.insert(c.encoding) {
                    next.push(c.tree.edges);
                }
            }
        }
        level = next;
    }
    level
}

/// All μ-colored extremal trees with at most `d = codim(μ)` edges.
pub fn enumerate(mu: &Partition) -> Vec<ColoredTree> {
    enumerate_with(mu, None)
}

pub fn enumerate_with(mu: &Partition, max_edges: Option<usize>) -> Vec<ColoredTree> {
    let max_edges = max_edges.unwrap_or(mu.codim() as usize);
    let total = mu.genus() as usize;
    // genus-0 vertices have valence >= 3, so |V| <= 2 * #positive - 2
    let vmax = (max_edges + 1).min((2 * total).saturating_sub(2).max(1));
    let mut found: HashMap<String, ColoredTree> = HashMap::new();
    for n in 1..=vmax {
        let shapes = free_trees(n);
        let per_shape: Vec<Vec<(String, ColoredTree)>> =
            shapes.par_iter().map(|edges| label_shape(mu, n, edges)).collect();
        for batch in per_shape {
            for (enc, t) in batch {
                found.entry(enc).or_insert(t);
            }
        }
    }
    let mut out: Vec<(usize, String, ColoredTree)> =
        found.into_iter().map(|(e, t)| (t.num_vertices(), e, t)).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    out.into_iter().map(|x| x.2).collect()
}

struct Labeler<'a> {
    parts: &'a [u32],
    adj: Vec<Vec<usize>>,
    deg: Vec<usize>,
    order: Vec<usize>,
    labels: Vec<Vertex>,
    left: Vec<u32>,
    edges: &'a [(usize, usize)],
    out: HashMap<String, ColoredTree>,
}

impl Labeler<'_> {
    fn must_be_positive(&self, v: usize) -> bool {
        self.deg[v] < 3
    }

    fn go(&mut self, i: usize) {
        if i == self.order.len() {
            if self.left.iter().any(|&x| x > 0) {
                return;
            }
            let t = ColoredTree {
                vertices: self.labels.clone(),
                edges: self.edges.to_vec(),
            };
            if !t.satisfies_path_condition() {
                return;
            }
            let c = t.canonical();
            self.out.entry(c.encoding).or_insert(c.tree);
            return;
        }
        let v = self.order[i];
        // remaining vertices that need positive genus
        let need: u32 = self.order[i + 1..]
            .iter()
            .filter(|&&w| self.must_be_positive(w))
            .count() as u32;
        let budget: u32 = self.left.iter().sum();
        if !self.must_be_positive(v) && budget >= need {
            self.labels[v] = Vertex::ZERO;
            self.go(i + 1);
        }
        for c in 0..self.parts.len() {
            let color = c as u32 + 1;
            if self
                .adj[v]
                .iter()
                .any(|&w| self.labels[w].color == Some(color))
            {
                continue;
            }
            for g in 1..=self.left[c] {
                if budget - g < need {
                    break;
                }
                self.left[c] -= g;
                self.labels[v] = Vertex::new(g, color);
                self.go(i + 1);
                self.left[c] += g;
            }
        }
        self.labels[v] = Vertex {
            genus: u32::MAX,
            color: None,
        };
    }
}

fn label_shape(mu: &Partition, n: usize, edges: &[(usize, usize)]) -> Vec<(String, ColoredTree)> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    // breadth-first so each vertex after the first has an assigned neighbor
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in &adj[order[i]] {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut l = Labeler {
        parts: mu.parts(),
        adj,
        deg,
        order,
        labels: vec![
            Vertex {
                genus: u32::MAX,
                color: None,
            };
            n
        ],
        left: mu.parts().to_vec(),
        edges,
        out: HashMap::new(),
    };
    l.go(0);
    l.out.into_iter().collect()
}
