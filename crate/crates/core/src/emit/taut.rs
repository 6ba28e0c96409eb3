use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde_json::json;

use crate::algebra::rational::fmt_rational;
use crate::algebra::{MPoly, Rational};
use crate::error::{Error, Result};

/// Stable tree with markings. Edge `e` joins `edges[e].0` (side 0) and
/// `edges[e].1` (side 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StableGraph {
    pub genera: Vec<u32>,
    pub markings: Vec<Vec<u32>>,
    pub edges: Vec<(usize, usize)>,
}

impl StableGraph {
    pub fn trivial(g: u32, n: u32) -> Self {
        StableGraph {
            genera: vec![g],
            markings: vec![(1..=n).collect()],
            edges: vec![],
        }
    }

    /// Two vertices joined by one edge; sides ordered by (genus, markings).
    pub fn divisor(g: u32, h: u32, s: &[u32], n: u32) -> Self {
        let mut a: Vec<u32> = s.to_vec();
        a.sort_unstable();
        let b: Vec<u32> = (1..=n).filter(|i| !a.contains(i)).collect();
        let (x, y) = ((h, a), (g - h, b));
        let (x, y) = if x <= y { (x, y) } else { (y, x) };
        StableGraph {
            genera: vec![x.0, y.0],
            markings: vec![x.1, y.1],
            edges: vec![(0, 1)],
        }
    }

    pub fn num_markings(&self) -> u32 {
        self.markings.iter().map(|m| m.len() as u32).sum()
    }

    pub fn genus(&self) -> u32 {
        self.genera.iter().sum()
    }

    pub fn valence(&self, v: usize) -> usize {
        self.markings[v].len() + self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn is_stable(&self) -> bool {
        (0..self.genera.len()).all(|v| 2 * self.genera[v] as i64 - 2 + self.valence(v) as i64 > 0)
    }

    pub fn vertex_dim(&self, v: usize) -> u32 {
        (3 * self.genera[v] as i64 - 3 + self.valence(v) as i64).max(0) as u32
    }

    pub fn dim(&self) -> u32 {
        (0..self.genera.len()).map(|v| self.vertex_dim(v)).sum()
    }

    /// Global half-edge label of side `side` of edge `e`: markings come first.
    pub fn half_edge(&self, e: usize, side: u8) -> u32 {
        self.num_markings() + 2 * e as u32 + 1 + side as u32
    }

    /// Legs at each vertex in the external calculator's convention.
    pub fn legs(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = self.markings.clone();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            out[a].push(self.half_edge(e, 0));
            out[b].push(self.half_edge(e, 1));
        }
        for l in &mut out {
            l.sort_unstable();
        }
        out
    }

    pub fn vertex_of_marking(&self, m: u32) -> Option<usize> {
        self.markings.iter().position(|ms| ms.contains(&m))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Psi(u32),
    PsiHalf(usize, u8),
    Lambda(usize, u32),
    Kappa(usize, u32),
}

impl Atom {
    pub fn var_name(&self) -> String {
        match *self {
            Atom::Psi(m) => format!("psi{m}"),
            Atom::PsiHalf(e, s) => format!("psih{e}_{s}"),
            Atom::Lambda(v, i) => format!("lam{i}_v{v}"),
            Atom::Kappa(v, i) => format!("kap{i}_v{v}"),
        }
    }

    pub fn from_var_name(s: &str) -> Option<Atom> {
        let two = |rest: &str, sep: &str| -> Option<(usize, usize)> {
            let (a, b) = rest.split_once(sep)?;
            Some((a.parse().ok()?, b.parse().ok()?))
        };
        if let Some(r) = s.strip_prefix("psih") {
            let (e, side) = two(r, "_")?;
            return Some(Atom::PsiHalf(e, side as u8));
        }
        if let Some(r) = s.strip_prefix("psi") {
            return Some(Atom::Psi(r.parse().ok()?));
        }
        if let Some(r) = s.strip_prefix("lam") {
            let (i, v) = two(r, "_v")?;
            return Some(Atom::Lambda(v, i as u32));
        }
        if let Some(r) = s.strip_prefix("kap") {
            let (i, v) = two(r, "_v")?;
            return Some(Atom::Kappa(v, i as u32));
        }
        None
    }

    pub fn degree(&self) -> u32 {
        match *self {
            Atom::Psi(_) | Atom::PsiHalf(..) => 1,
            Atom::Lambda(_, i) | Atom::Kappa(_, i) => i,
        }
    }

    pub fn vertex(&self, graph: &StableGraph) -> usize {
        match *self {
            Atom::Psi(m) => graph.vertex_of_marking(m).expect("marking on graph"),
            Atom::PsiHalf(e, 0) => graph.edges[e].0,
            Atom::PsiHalf(e, _) => graph.edges[e].1,
            Atom::Lambda(v, _) | Atom::Kappa(v, _) => v,
        }
    }
}

/// Monomial in atoms, sorted, with positive exponents.
pub type Decoration = Vec<(Atom, u32)>;

pub fn decoration_degree(d: &Decoration) -> u32 {
    d.iter().map(|(a, k)| a.degree() * k).sum()
}

/// Formal rational combination of decorated graphs on `M_{g,n}^ct`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TautExpr {
    pub g: u32,
    pub n: u32,
    terms: BTreeMap<(StableGraph, Decoration), Rational>,
}

impl TautExpr {
    pub fn zero(g: u32, n: u32) -> Self {
        TautExpr {
            g,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&StableGraph, &Decoration, &Rational)> {
        self.terms.iter().map(|((g, d), c)| (g, d, c))
    }

    pub fn graphs(&self) -> Vec<&StableGraph> {
        let mut out: Vec<&StableGraph> = self.terms.keys().map(|(g, _)| g).collect();
        out.dedup();
        out
    }

    pub fn coeff(&self, graph: &StableGraph, deco: &Decoration) -> Rational {
        self.terms
            .get(&(graph.clone(), deco.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, graph: StableGraph, mut deco: Decoration, c: Rational) {
        if c.is_zero() {
            return;
        }
        deco.retain(|(_, k)| *k > 0);
        deco.sort();
        let key = (graph, deco);
        let e = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &TautExpr) -> TautExpr {
        let mut out = self.clone();
        for ((g, d), c) in &other.terms {
            out.add_term(g.clone(), d.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> TautExpr {
        let mut out = TautExpr::zero(self.g, self.n);
        for ((g, d), x) in &self.terms {
            out.add_term(g.clone(), d.clone(), x * c);
        }
        out
    }

    pub fn sub(&self, other: &TautExpr) -> TautExpr {
        self.add(&other.scale(&Rational::from_integer((-1).into())))
    }

    /// Add `coeff * poly` on `graph`, reading the atoms from variable names.
    /// Decorations exceeding a vertex dimension are dropped.
    pub fn add_poly(&mut self, graph: &StableGraph, poly: &MPoly, coeff: &Rational) -> Result<()> {
        let atoms: Vec<Atom> = poly
            .vars()
            .iter()
            .map(|v| Atom::from_var_name(v).ok_or_else(|| Error::Invalid(format!("not an atom: {v}"))))
            .collect::<Result<_>>()?;
        for (m, c) in poly.terms() {
            let deco: Decoration = atoms
                .iter()
                .zip(&m.0)
                .filter(|(_, &k)| k > 0)
                .map(|(a, &k)| (*a, k))
                .collect();
            let mut per_vertex = vec![0u32; graph.genera.len()];
            for (a, k) in &deco {
                per_vertex[a.vertex(graph)] += a.degree() * k;
            }
            let fits = per_vertex.iter().enumerate().all(|(v, &d)| d <= graph.vertex_dim(v))
                && deco.iter().all(|(a, _)| match *a {
                    Atom::Lambda(v, i) => i <= graph.genera[v],
                    _ => true,
                });
            if fits {
                self.add_term(graph.clone(), deco, c * coeff);
            }
        }
        Ok(())
    }

    /// Codimension of each term: edges plus decoration degree.
    pub fn degrees(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .terms
            .keys()
            .map(|(g, d)| g.edges.len() as u32 + decoration_degree(d))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Product with `λ_k`, restricted to each graph as `Σ ∏_v λ_{i_v}`.
    pub fn times_lambda(&self, k: u32) -> TautExpr {
        let mut out = TautExpr::zero(self.g, self.n);
        for ((graph, deco), c) in &self.terms {
            let nv = graph.genera.len();
            let mut split = vec![0u32; nv];
            fn go(v: usize, left: u32, graph: &StableGraph, split: &mut Vec<u32>, acc: &mut Vec<Vec<u32>>) {
                if v + 1 == split.len() {
                    if left <= graph.genera[v] {
                        split[v] = left;
                        acc.push(split.clone());
                    }
                    return;
                }
                for i in 0..=left.min(graph.genera[v]) {
                    split[v] = i;
                    go(v + 1, left - i, graph, split, acc);
                }
            }
            let mut splits = Vec::new();
            go(0, k, graph, &mut split, &mut splits);
            for sp in splits {
                let mut d = deco.clone();
                for (v, &i) in sp.iter().enumerate() {
                    if i == 0 {
                        continue;
                    }
                    match d.iter_mut().find(|(a, _)| *a == Atom::Lambda(v, i)) {
                        Some(x) => x.1 += 1,
                        None => d.push((Atom::Lambda(v, i), 1)),
                    }
                }
                let mut per_vertex = vec![0u32; nv];
                for (a, e) in &d {
                    per_vertex[a.vertex(graph)] += a.degree() * e;
                }
                if per_vertex.iter().enumerate().all(|(v, &x)| x <= graph.vertex_dim(v)) {
                    out.add_term(graph.clone(), d, c.clone());
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((g, d), c)| {
                json!({
                    "coeff": fmt_rational(c),
                    "genera": g.genera,
                    "markings": g.markings,
                    "edges": g.edges.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
                    "decoration": d.iter().map(|(a, k)| json!([a.var_name(), k])).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({"g": self.g, "n": self.n, "terms": terms})
    }
}

impl fmt::Display for TautExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((g, d), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let deco: Vec<String> = d
                .iter()
                .map(|(a, k)| if *k == 1 { a.var_name() } else { format!("{}^{}", a.var_name(), k) })
                .collect();
            let deco = if deco.is_empty() { "1".to_string() } else { deco.join("*") };
            write!(
                f,
                "{} * [{:?} {:?} {:?}] {}",
                fmt_rational(c),
                g.genera,
                g.markings,
                g.edges,
                deco
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, parse_poly, rat};

    #[test]
    fn divisor_sides_are_ordered() {
        let a = StableGraph::divisor(3, 1, &[1], 2);
        let b = StableGraph::divisor(3, 2, &[2], 2);
        assert_eq!(a, b);
        assert_eq!(a.legs(), vec![vec![1, 3], vec![2, 4]]);
    }

    #[test]
    fn merging_and_truncation() {
        let gr = StableGraph::divisor(2, 1, &[], 0);
        let mut e = TautExpr::zero(2, 0);
        let p = parse_poly("psih0_0 + psih0_0 + psih0_1^2").unwrap();
        e.add_poly(&gr, &p, &rat(1, 2)).unwrap();
        // M_{1,1} has dimension 1, so the square drops
        assert_eq!(e.len(), 1);
        assert_eq!(e.coeff(&gr, &vec![(Atom::PsiHalf(0, 0), 1)]), int(1));
        let z = e.sub(&e);
        assert!(z.is_empty());
    }

    #[test]
    fn lambda_splits_over_vertices() {
        let gr = StableGraph::divisor(3, 1, &[1], 2);
        let mut e = TautExpr::zero(3, 2);
        e.add_term(gr.clone(), vec![], int(1));
        let l2 = e.times_lambda(2);
        // λ2 = λ1' λ1'' + λ2'' on genus 1 | genus 2
        assert_eq!(l2.len(), 2);
        assert_eq!(l2.coeff(&gr, &vec![(Atom::Lambda(1, 2), 1)]), int(1));
        assert_eq!(l2.degrees(), vec![3]);
    }

    #[test]
    fn atom_names_roundtrip() {
        for a in [Atom::Psi(3), Atom::PsiHalf(2, 1), Atom::Lambda(4, 2), Atom::Kappa(0, 1)] {
            assert_eq!(Atom::from_var_name(&a.var_name()), Some(a));
        }
    }
}
