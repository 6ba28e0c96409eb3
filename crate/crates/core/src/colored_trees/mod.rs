//! μ-colored extremal trees: genus- and color-labeled stable trees in which
//! every edge lies on a path between positive-genus vertices of different
//! colors whose interior has genus 0.

mod canon;
mod enumerate;
mod smoothing;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::Canonical;
pub use enumerate::{enumerate, enumerate_with, free_trees};
pub use smoothing::{minimal_smoothings, smoothings, smoothings_brute_force, Smoothing};

/// Parts `g_1, ..., g_k`; color `i` is attached to part `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Invalid(format!("bad partition {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let parts: std::result::Result<Vec<u32>, _> = s
            .trim_matches(|c| c == '(' || c == ')')
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect();
        Partition::new(parts.map_err(|e| Error::Parse(format!("partition {s:?}: {e}")))?)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn genus(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Codimension `Σ_{i<j} g_i g_j` of the product locus.
    pub fn codim(&self) -> u32 {
        let mut d = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                d += self.0[i] * self.0[j];
            }
        }
        d
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub genus: u32,
    pub color: Option<u32>,
}

impl Vertex {
    pub const ZERO: Vertex = Vertex { genus: 0, color: None };

    pub fn new(genus: u32, color: u32) -> Self {
        Vertex {
            genus,
            color: Some(color),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.genus > 0
    }

    pub fn token(&self) -> String {
        match self.color {
            None => "0".to_string(),
            Some(c) => format!("{}c{}", self.genus, c),
        }
    }
}

/// A path between two positive vertices of different colors through genus 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPath {
    pub endpoints: (usize, usize),
    /// edge indices, increasing
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredTree {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct TreeJson {
    vertices: Vec<Vertex>,
    edges: Vec<[usize; 2]>,
    encoding: String,
}

impl ColoredTree {
    /// Checks the tree shape and the genus/color labelling.
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = vertices.len();
        if n == 0 {
            return Err(Error::Invalid("empty tree".into()));
        }
        if edges.len() + 1 != n {
            return Err(Error::Invalid("edge count is not |V| - 1".into()));
        }
        for v in &vertices {
            if (v.genus > 0) != v.color.is_some() {
                return Err(Error::Invalid("color must be set exactly on positive vertices".into()));
            }
        }
        let t = ColoredTree { vertices, edges };
        for &(a, b) in &t.edges {
            if a >= n || b >= n || a == b {
                return Err(Error::Invalid(format!("bad edge ({a},{b})")));
            }
        }
        let mut seen = vec![false; n];
        let adj = t.adjacency();
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Invalid("not connected".into()));
        }
        Ok(t)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// neighbor and edge index per vertex
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        adj
    }

    pub fn valence(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn genus(&self) -> u32 {
        self.vertices.iter().map(|v| v.genus).sum()
    }

    pub fn color_genera(&self, k: usize) -> Vec<u32> {
        let mut out = vec![0; k];
        for v in &self.vertices {
            if let Some(c) = v.color {
                if (c as usize) <= k && c > 0 {
                    out[c as usize - 1] += v.genus;
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self) -> bool {
        self.vertices.iter().all(|v| v.genus > 0)
    }

    pub fn is_stable(&self) -> bool {
        (0..self.vertices.len()).all(|v| {
            let g = self.vertices[v].genus as i64;
            2 * g - 2 + self.valence(v) as i64 > 0
        })
    }

    pub fn critical_paths(&self) -> Vec<CriticalPath> {
        let adj = self.adjacency();
        let mut out = Vec::new();
        for a in 0..self.vertices.len() {
            if !self.vertices[a].is_positive() {
                continue;
            }
            // walk genus-0 vertices only
            let mut stack: Vec<(usize, usize, Vec<usize>)> = vec![(a, usize::MAX, vec![])];
            while let Some((v, from, path)) = stack.pop() {
                for &(w, e) in &adj[v] {
                    if w == from {
                        continue;
                    }
                    let mut p = path.clone();
                    p.push(e);
                    let vw = self.vertices[w];
                    if vw.is_positive() {
                        if w > a && vw.color != self.vertices[a].color {
                            p.sort_unstable();
                            out.push(CriticalPath {
                                endpoints: (a, w),
                                edges: p,
                            });
                        }
                    } else {
                        stack.push((w, v, p));
                    }
                }
            }
        }
        out.sort_by(|x, y| x.edges.cmp(&y.edges));
        out
    }

    /// One squarefree monomial (as an edge set) per critical path.
    pub fn local_equations(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.critical_paths().into_iter().map(|p| p.edges).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Every edge on some critical path.
    pub fn satisfies_path_condition(&self) -> bool {
        let mut covered = vec![false; self.edges.len()];
        for p in self.critical_paths() {
            for e in p.edges {
                covered[e] = true;
            }
        }
        covered.iter().all(|&c| c)
    }

    /// Extremal-tree conditions except the per-color genus totals.
    pub fn is_extremal_shape(&self) -> bool {
        self.is_stable() && self.satisfies_path_condition()
    }

    pub fn validate(&self, mu: &Partition) -> Result<()> {
        if self.color_genera(mu.k()) != mu.parts()
            || self.vertices.iter().any(|v| v.color.is_some_and(|c| c == 0 || c as usize > mu.k()))
        {
            return Err(Error::Invalid(format!("genus by color does not match {mu}")));
        }
        if !self.is_stable() {
            return Err(Error::Invalid("unstable vertex".into()));
        }
        if !self.satisfies_path_condition() {
            return Err(Error::Invalid("edge not on a critical path".into()));
        }
        Ok(())
    }

    pub fn canonical(&self) -> Canonical {
        canon::canonicalize(self)
    }

    pub fn encoding(&self) -> String {
        self.canonical().encoding
    }

    pub fn automorphism_order(&self) -> u64 {
        canon::automorphism_order(self)
    }

    pub fn is_isomorphic(&self, other: &ColoredTree) -> bool {
        self.encoding() == other.encoding()
    }

    /// Vertices grouped by color.
    pub fn color_classes(&self) -> BTreeMap<u32, Vec<usize>> {
        let mut out: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if let Some(c) = v.color {
                out.entry(c).or_default().push(i);
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = TreeJson {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
            encoding: self.encoding(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Loose {
            vertices: Vec<Vertex>,
            edges: Vec<[usize; 2]>,
        }
        let l: Loose = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        ColoredTree::new(l.vertices, l.edges.into_iter().map(|[a, b]| (a, b)).collect())
    }
}

impl fmt::Display for ColoredTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encoding())
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn blue(g: u32) -> Vertex {
        Vertex::new(g, 1)
    }

    pub fn green(g: u32) -> Vertex {
        Vertex::new(g, 2)
    }

    /// genus-0 center with two blue-1 leaves and a green-4 leaf
    pub fn star24() -> ColoredTree {
        ColoredTree::new(
            vec![green(4), Vertex::ZERO, blue(1), blue(1)],
            vec![(1, 0), (2, 1), (1, 3)],
        )
        .unwrap()
    }

    pub fn chain(vs: Vec<Vertex>) -> ColoredTree {
        let n = vs.len();
        ColoredTree::new(vs, (0..n - 1).map(|i| (i, i + 1)).collect()).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn partition_codim() {
        assert_eq!(Partition::parse("2,4").unwrap().codim(), 8);
        assert_eq!(Partition::parse("(1,1,2)").unwrap().codim(), 5);
        assert!(Partition::parse("2,0").is_err());
    }

    #[test]
    fn star_paths() {
        let t = star24().canonical().tree;
        let eqs = t.local_equations();
        assert_eq!(eqs, vec![vec![0, 2], vec![1, 2]]);
        t.validate(&Partition(vec![2, 4])).unwrap();
    }

    #[test]
    fn chain_paths() {
        let t = chain(vec![blue(1), green(4), blue(1)]);
        assert_eq!(t.critical_paths().len(), 2);
        let t = chain(vec![blue(1), green(1), blue(1), green(1)]);
        assert_eq!(t.local_equations(), vec![vec![0], vec![1], vec![2]]);
        let t = chain(vec![blue(2), green(2)]);
        assert_eq!(t.critical_paths().len(), 1);
    }

    #[test]
    fn json_roundtrip() {
        let t = star24();
        let j = t.to_json();
        assert_eq!(j["vertices"][1]["color"], serde_json::Value::Null);
        let back = ColoredTree::from_json(&j).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn rejects_bad_trees() {
        assert!(ColoredTree::new(vec![blue(1), green(1)], vec![]).is_err());
        assert!(ColoredTree::new(vec![Vertex { genus: 1, color: None }], vec![]).is_err());
        let unstable = chain(vec![blue(1), Vertex::ZERO, green(1)]);
        assert!(unstable.validate(&Partition(vec![1, 1])).is_err());
    }
}
