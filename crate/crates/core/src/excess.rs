//! Excess contributions `Cont_T` of colored extremal trees and the assembled
//! Torelli pullback of a product locus.
//!
//! During the recursion a contribution lives in edge variables `z_e` and the
//! elementary symmetric functions `e_j` of the line-bundle roots `ℓ`; it is
//! presented in the Chern symbols `c_i = c_i(N)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::rational::binomial;
use crate::algebra::series::{elementary_from_power_sums, power_sums_from_elementary};
use crate::algebra::{series_inverse, MPoly, Monomial, Rational};
use crate::colored_trees::{enumerate, smoothings, ColoredTree, Partition};
use crate::emit::{Atom, StableGraph, TautExpr};
use crate::error::{Error, Result};

pub const RANK_CAP: u32 = 49;

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Weight of an internal variable: `z` and `ℓ` have weight 1, `e_j`, `c_j` weight `j`.
fn weight(v: &str) -> u32 {
    match v.as_bytes()[0] {
        b'e' | b'c' => v[1..].parse().unwrap_or(1),
        _ => 1,
    }
}

fn weights(vars: &[String]) -> Vec<u32> {
    vars.iter().map(|v| weight(v)).collect()
}

/// Codimension `Σ_{a<b} g_a g_b` read off the color classes of a tree.
pub fn tree_codim(t: &ColoredTree) -> u32 {
    let k = t.vertices.iter().filter_map(|v| v.color).max().unwrap_or(0) as usize;
    let gs = t.color_genera(k);
    let mut d = 0;
    for a in 0..gs.len() {
        for b in a + 1..gs.len() {
            d += gs[a] * gs[b];
        }
    }
    d
}

/// The split local model of `T`: `N = O^c ⊕ L_1 ⊕ … ⊕ L_{d−c}` with one
/// trivial summand per critical path.
#[derive(Clone, Debug)]
pub struct LocalModel {
    pub tree: ColoredTree,
    pub d: u32,
    /// edge sets of the critical paths
    pub paths: Vec<Vec<usize>>,
}

impl LocalModel {
    pub fn new(tree: &ColoredTree) -> Self {
        LocalModel {
            tree: tree.clone(),
            d: tree_codim(tree),
            paths: tree.critical_paths().into_iter().map(|p| p.edges).collect(),
        }
    }

    pub fn c(&self) -> u32 {
        self.paths.len() as u32
    }

    /// Number of line-bundle roots.
    pub fn rank(&self) -> u32 {
        self.d - self.c()
    }

    pub fn z_vars(&self) -> Vec<String> {
        names("z", self.tree.num_edges())
    }

    fn path_sum(&self, p: &[usize], vars: &[String]) -> MPoly {
        let mut s = MPoly::zero(vars.to_vec());
        for &e in p {
            s = s.add(&MPoly::var(vars.to_vec(), &format!("z{}", e + 1)));
        }
        s
    }

    /// `∏_P s_P` and `∏_P (1 + s_P)`.
    pub fn path_products(&self, vars: &[String]) -> (MPoly, MPoly) {
        let mut prod = MPoly::one(vars.to_vec());
        let mut total = MPoly::one(vars.to_vec());
        for p in &self.paths {
            let s = self.path_sum(p, vars);
            prod = prod.mul(&s);
            total = total.mul(&MPoly::one(vars.to_vec()).add(&s));
        }
        (prod, total)
    }

    /// `c(N) = ∏(1+ℓ_i) · ∏_P(1+s_P)` in explicit roots `l1, l2, …`.
    pub fn chern_total(&self) -> MPoly {
        let mut vars = self.z_vars();
        vars.extend(names("l", self.rank() as usize));
        let (_, paths) = self.path_products(&vars);
        let mut out = paths;
        for i in 1..=self.rank() {
            let l = MPoly::var(vars.clone(), &format!("l{i}"));
            out = out.mul(&MPoly::one(vars.clone()).add(&l));
        }
        out
    }

    /// `c_d(N) = ℓ_1⋯ℓ_{d−c} · ∏_P s_P` in explicit roots.
    pub fn top_chern(&self) -> MPoly {
        let mut vars = self.z_vars();
        vars.extend(names("l", self.rank() as usize));
        let (mut out, _) = self.path_products(&vars);
        for i in 1..=self.rank() {
            out = out.mul(&MPoly::var(vars.clone(), &format!("l{i}")));
        }
        out
    }
}

/// `Cont_T` in the edge variables `z1..zm` of `tree` and Chern symbols
/// `c1..c_{d−m}`, homogeneous of degree `d − m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContPoly {
    pub tree: ColoredTree,
    pub d: u32,
    pub poly: MPoly,
}

impl ContPoly {
    pub fn degree(&self) -> u32 {
        self.d - self.tree.num_edges() as u32
    }

    pub fn vars_for(m: usize, deg: u32) -> Vec<String> {
        let mut v = names("z", m);
        v.extend(names("c", deg as usize));
        v
    }

    /// Grouped by Chern monomial, highest Chern degree first:
    /// `-3*c5(N) + (4*z1 + 4*z2 + 6*z3)*c4(N) - …`.
    pub fn render_chern(&self) -> String {
        let m = self.tree.num_edges();
        let vars = self.poly.vars().to_vec();
        let zvars: Vec<String> = vars[..m].to_vec();
        let mut groups: HashMap<Vec<u32>, MPoly> = HashMap::new();
        for (mono, c) in self.poly.terms() {
            let (z, ch) = mono.0.split_at(m);
            groups
                .entry(ch.to_vec())
                .or_insert_with(|| MPoly::zero(zvars.clone()))
                .add_term(Monomial(z.to_vec()), c.clone());
        }
        let cw: Vec<u32> = weights(&vars[m..]);
        let mut keys: Vec<Vec<u32>> = groups.keys().cloned().collect();
        keys.sort_by(|a, b| {
            let wa = Monomial(a.clone()).weighted_degree(&cw);
            let wb = Monomial(b.clone()).weighted_degree(&cw);
            wb.cmp(&wa).then_with(|| b.cmp(a))
        });
        if keys.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, k) in keys.iter().enumerate() {
            let zpoly = &groups[k];
            let negative = zpoly.terms().all(|(_, c)| c < &Rational::zero());
            let shown = if negative { zpoly.neg() } else { zpoly.clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let chern: Vec<String> = k
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| {
                    let base = format!("{}(N)", vars[m + j]);
                    if e == 1 {
                        base
                    } else {
                        format!("{base}^{e}")
                    }
                })
                .collect();
            let chern = chern.join("*");
            let body = shown.render();
            let body = if shown.len() > 1 { format!("({body})") } else { body };
            if chern.is_empty() {
                out.push_str(&body);
            } else if shown.is_constant() && shown.constant_term().is_one() {
                out.push_str(&chern);
            } else {
                out.push_str(&format!("{body}*{chern}"));
            }
        }
        out
    }

    /// Relabel edges: canonical edge `i` becomes edge `edge_order[i]` of `tree`.
    fn relabel(&self, tree: &ColoredTree, edge_order: &[usize]) -> ContPoly {
        let map: HashMap<String, String> = edge_order
            .iter()
            .enumerate()
            .map(|(i, &e)| (format!("z{}", i + 1), format!("z{}", e + 1)))
            .collect();
        let renamed = self.poly.rename(|v| map.get(v).cloned().unwrap_or_else(|| v.to_string()));
        ContPoly {
            tree: tree.clone(),
            d: self.d,
            poly: renamed.with_vars(&ContPoly::vars_for(tree.num_edges(), self.degree())),
        }
    }
}

/// `Cont_I = [c(N) / ∏_e (1+z_e)]_{d−c}` for a tree without genus-0 vertices.
pub fn cont_irreducible(tree: &ColoredTree) -> Result<ContPoly> {
    if !tree.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let m = tree.num_edges();
    let d = tree_codim(tree);
    let deg = d - m as u32;
    let vars = ContPoly::vars_for(m, deg);
    let mut denom = MPoly::one(vars.clone());
    for e in 0..m {
        let z = MPoly::var(vars.clone(), &format!("z{}", e + 1));
        denom = denom.mul(&MPoly::one(vars.clone()).add(&z));
    }
    let inv = series_inverse(&denom, deg)?;
    let mut poly = inv.graded_piece(deg);
    for i in 1..=deg {
        let c = MPoly::var(vars.clone(), &format!("c{i}"));
        poly = poly.add(&c.mul(&inv.graded_piece(deg - i)));
    }
    Ok(ContPoly {
        tree: tree.clone(),
        d,
        poly,
    })
}

fn cache() -> &'static Mutex<HashMap<String, Arc<ContPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<ContPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `ι_{T′*}Cont_{T′}`: relabel `z′ ↦ z_ε`, multiply by `∏ z_ε`, and replace
/// each `c_i` by `chern[i]`.
fn pushforward(sub: &ContPoly, edge_map: &[usize], chern: &[MPoly], vars: &[String]) -> MPoly {
    let mut subs: HashMap<String, MPoly> = HashMap::new();
    let mut zprod = MPoly::one(vars.to_vec());
    for (k, &e) in edge_map.iter().enumerate() {
        let z = MPoly::var(vars.to_vec(), &format!("z{}", e + 1));
        zprod = zprod.mul(&z);
        subs.insert(format!("z{}", k + 1), z);
    }
    for i in 1..=sub.degree() {
        subs.insert(format!("c{i}"), chern[i as usize].clone());
    }
    sub.poly.substitute(&subs).with_vars(vars).mul(&zprod)
}

fn compute(t: &ColoredTree) -> Result<ContPoly> {
    if t.is_irreducible() {
        return cont_irreducible(t);
    }
    let model = LocalModel::new(t);
    let m = t.num_edges();
    let d = model.d;
    let r = model.rank();
    let mut vars = model.z_vars();
    vars.extend(names("e", r as usize));
    let w = weights(&vars);
    let (sprod, ptotal) = model.path_products(&vars);
    let mut etotal = MPoly::one(vars.clone());
    for j in 1..=r {
        etotal = etotal.add(&MPoly::var(vars.clone(), &format!("e{j}")));
    }
    let ctotal = etotal.mul(&ptotal);
    let chern: Vec<MPoly> = (0..=d).map(|i| ctotal.weighted_piece(&w, i)).collect();
    let top = if r == 0 {
        MPoly::one(vars.clone())
    } else {
        MPoly::var(vars.clone(), &format!("e{r}"))
    };
    let mut rhs = top.mul(&sprod);
    for s in smoothings(t) {
        let sub = cont_recursive(&s.target)?;
        rhs = rhs.sub(&pushforward(&sub, &s.edge_map, &chern, &vars));
    }
    let mut zall = vec![0u32; vars.len()];
    for x in zall.iter_mut().take(m) {
        *x = 1;
    }
    let q = rhs.div_monomial(&Monomial(zall)).ok_or(Error::NotDivisible)?;
    // e_j = Σ_i c_i [P^{-1}]_{j−i}
    let deg = d - m as u32;
    let out_vars = ContPoly::vars_for(m, deg);
    let p_out = ptotal.with_vars(&vars).compact();
    let pinv = series_inverse(&p_out.with_vars(&out_vars), deg)?;
    let pieces: Vec<MPoly> = (0..=deg).map(|k| pinv.graded_piece(k)).collect();
    let mut subs: HashMap<String, MPoly> = HashMap::new();
    for j in 1..=r {
        let mut ej = MPoly::zero(out_vars.clone());
        if j <= deg {
            ej = pieces[j as usize].clone();
            for i in 1..=j {
                let c = MPoly::var(out_vars.clone(), &format!("c{i}"));
                ej = ej.add(&c.mul(&pieces[(j - i) as usize]));
            }
        }
        subs.insert(format!("e{j}"), ej);
    }
    let poly = q.substitute(&subs).with_vars(&out_vars);
    Ok(ContPoly {
        tree: t.clone(),
        d,
        poly,
    })
}

/// `Cont_T` from `Cont_T·∏z_e = c_d(N) − Σ_{T′} ι_{T′*}Cont_{T′}`, memoized by
/// canonical encoding. Edge variables follow the edge order of `tree`.
pub fn cont_recursive(tree: &ColoredTree) -> Result<ContPoly> {
    let canon = tree.canonical();
    let hit = cache().lock().expect("cache lock").get(&canon.encoding).cloned();
    let cont = match hit {
        Some(c) => c,
        None => {
            let c = Arc::new(compute(&canon.tree)?);
            cache()
                .lock()
                .expect("cache lock")
                .entry(canon.encoding.clone())
                .or_insert(c)
                .clone()
        }
    };
    if canon.tree == *tree {
        return Ok((*cont).clone());
    }
    Ok(cont.relabel(tree, &canon.edge_order))
}

/// Root-level check: with `c(N)` expanded in explicit roots,
/// `Cont_T·∏z_e + Σ ι_{T′*}Cont_{T′} = c_d(N)`.
pub fn check_root_consistency(tree: &ColoredTree) -> Result<bool> {
    let t = tree.canonical().tree;
    let model = LocalModel::new(&t);
    let total = model.chern_total();
    let vars = total.vars().to_vec();
    let chern: Vec<MPoly> = (0..=model.d).map(|i| total.graded_piece(i)).collect();
    let all: Vec<usize> = (0..t.num_edges()).collect();
    let mut lhs = pushforward(&cont_recursive(&t)?, &all, &chern, &vars);
    for s in smoothings(&t) {
        lhs = lhs.add(&pushforward(&cont_recursive(&s.target)?, &s.edge_map, &chern, &vars));
    }
    Ok(lhs.sub(&model.top_chern()).is_zero())
}

/// Chern classes `c_1..c_{up_to}` of `E_1^∨ ⊠ E_2^∨` for ranks `r1, r2`, in
/// `x_i = λ_i(E_1)` and `y_j = λ_j(E_2)`.
pub fn box_tensor_chern(r1: u32, r2: u32, up_to: u32) -> Result<Vec<MPoly>> {
    if r1 * r2 > RANK_CAP {
        return Err(Error::RankOverflow(r1, r2));
    }
    let mut vars = names("x", r1 as usize);
    vars.extend(names("y", r2 as usize));
    let n = up_to.min(r1 * r2) as usize;
    let xs: Vec<MPoly> = (1..=r1).map(|i| MPoly::var(vars.clone(), &format!("x{i}"))).collect();
    let ys: Vec<MPoly> = (1..=r2).map(|i| MPoly::var(vars.clone(), &format!("y{i}"))).collect();
    let mut pa = vec![MPoly::from_int(vars.clone(), r1 as i64)];
    pa.extend(power_sums_from_elementary(&xs, n, &vars));
    let mut pb = vec![MPoly::from_int(vars.clone(), r2 as i64)];
    pb.extend(power_sums_from_elementary(&ys, n, &vars));
    // roots −a_i − b_j
    let mut p = Vec::with_capacity(n);
    for k in 1..=n {
        let mut acc = MPoly::zero(vars.clone());
        for t in 0..=k {
            let c = Rational::from_integer(binomial(k as u32, t as u32));
            acc = acc.add(&pa[t].mul(&pb[k - t]).scale(&c));
        }
        p.push(if k % 2 == 1 { acc.neg() } else { acc });
    }
    let mut out = elementary_from_power_sums(&p, n, &vars, None);
    out.resize(up_to as usize, MPoly::zero(vars.clone()));
    Ok(out)
}

/// The graph `ξ_T` of a colored tree, without markings.
pub fn gluing_graph(t: &ColoredTree) -> StableGraph {
    StableGraph {
        genera: t.vertices.iter().map(|v| v.genus).collect(),
        markings: vec![vec![]; t.num_vertices()],
        edges: t.edges.clone(),
    }
}

fn atom_weight(v: &str) -> u32 {
    Atom::from_var_name(v).map(|a| a.degree()).unwrap_or(1)
}

/// `(1/|Aut T|)·ξ_{T*}Cont_T` with `z_e ↦ −(ψ′_e + ψ″_e)` and
/// `c(N) ↦ ∏ c(E_v^∨ ⊠ E_w^∨)` over pairs of differently colored vertices.
pub fn substitute(t: &ColoredTree, cont: &ContPoly) -> Result<TautExpr> {
    let graph = gluing_graph(t);
    let deg = cont.degree();
    let mut subs: HashMap<String, MPoly> = HashMap::new();
    for e in 0..t.num_edges() {
        let a = Atom::PsiHalf(e, 0).var_name();
        let b = Atom::PsiHalf(e, 1).var_name();
        let vars = vec![a.clone(), b.clone()];
        let s = MPoly::var(vars.clone(), &a).add(&MPoly::var(vars, &b)).neg();
        subs.insert(format!("z{}", e + 1), s);
    }
    let mut total = MPoly::one(vec![]);
    let verts = &t.vertices;
    for v in 0..verts.len() {
        for w in v + 1..verts.len() {
            let (gv, gw) = (verts[v].genus, verts[w].genus);
            if gv == 0 || gw == 0 || verts[v].color == verts[w].color {
                continue;
            }
            let cs = box_tensor_chern(gv, gw, deg)?;
            let mut factor = MPoly::one(cs.first().map(|c| c.vars().to_vec()).unwrap_or_default());
            for c in &cs {
                factor = factor.add(c);
            }
            let factor = factor.rename(|x| {
                let (side, i) = x.split_at(1);
                let i: u32 = i.parse().expect("index");
                let at = if side == "x" { v } else { w };
                Atom::Lambda(at, i).var_name()
            });
            total = total.mul_weighted_trunc(&factor, atom_weight, deg);
        }
    }
    let aw: Vec<u32> = total.vars().iter().map(|v| atom_weight(v)).collect();
    for i in 1..=deg {
        subs.insert(format!("c{i}"), total.weighted_piece(&aw, i));
    }
    let poly = cont.poly.substitute(&subs);
    let mut out = TautExpr::zero(t.genus(), 0);
    let coeff = Rational::one() / Rational::from_integer(t.automorphism_order().into());
    out.add_poly(&graph, &poly, &coeff)?;
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct PullbackTerm {
    pub tree: ColoredTree,
    pub cont: ContPoly,
    pub class: TautExpr,
}

#[derive(Clone, Debug)]
pub struct Pullback {
    pub mu: Partition,
    pub terms: Vec<PullbackTerm>,
    pub total: TautExpr,
}

/// `Tor^*([A_{g_1} × ⋯ × A_{g_k}]) = Σ_T (1/|Aut T|) ξ_{T*} Cont_T`.
pub fn torelli_pullback(mu: &Partition) -> Result<Pullback> {
    let trees = enumerate(mu);
    let max_edges = trees.iter().map(|t| t.num_edges()).max().unwrap_or(0);
    // fill the memo in dependency order
    for m in 0..=max_edges {
        trees
            .par_iter()
            .filter(|t| t.num_edges() == m)
            .map(cont_recursive)
            .collect::<Result<Vec<_>>>()?;
    }
    let terms: Vec<PullbackTerm> = trees
        .par_iter()
        .map(|t| {
            let cont = cont_recursive(t)?;
            let class = substitute(t, &cont)?;
            Ok(PullbackTerm {
                tree: t.clone(),
                cont,
                class,
            })
        })
        .collect::<Result<_>>()?;
    let mut total = TautExpr::zero(mu.genus(), 0);
    for t in &terms {
        total = total.add(&t.class);
    }
    Ok(Pullback {
        mu: mu.clone(),
        terms,
        total,
    })
}

/// `cod_μ > 2g − 3`, forcing `Tor^*` of the product class to vanish.
pub fn vanishing_predicate(mu: &Partition) -> bool {
    mu.codim() as i64 > 2 * mu.genus() as i64 - 3
}

/// Vanishing that lands in a possibly nonzero group `CH^{cod_J + cod_μ}(A_g)`,
/// i.e. `cod_μ <= 3g − 3` as well.
pub fn nontrivial_vanishing(mu: &Partition) -> bool {
    vanishing_predicate(mu) && mu.codim() as i64 <= 3 * mu.genus() as i64 - 3
}

pub fn vanishing_message(mu: &Partition) -> String {
    let (c, b) = (mu.codim() as i64, 2 * mu.genus() as i64 - 3);
    if vanishing_predicate(mu) {
        format!("vanishes (cod {c} > 2g\u{2212}3 = {b})")
    } else {
        format!("nontrivial (cod {c} \u{2264} 2g\u{2212}3 = {b})")
    }
}


#[cfg(test)]
mod star_tests {
    use super::*;
    use crate::colored_trees::Vertex;

    #[test]
    fn star24_matches_golden() {
        let t = ColoredTree::new(
            vec![Vertex::ZERO, Vertex::new(1, 1), Vertex::new(1, 1), Vertex::new(4, 2)],
            vec![(0, 1), (0, 2), (0, 3)],
        )
        .unwrap();
        let c = cont_recursive(&t).unwrap();
        let golden = include_str!("../tests/golden/cont_star24.txt");
        let want: Vec<&str> = golden.lines().collect();
        assert_eq!(c.render_chern(), want.join(" "));
        assert!(check_root_consistency(&t).unwrap());
    }

    #[test]
    fn root_consistency_small_partitions() {
        for mu in ["2,2", "2,3", "1,1,2"] {
            let mu = Partition::parse(mu).unwrap();
            for t in enumerate(&mu) {
                assert!(check_root_consistency(&t).unwrap(), "{}", t.encoding());
                let c = cont_recursive(&t).unwrap();
                assert_eq!(c.poly.weighted_degree(&weights(c.poly.vars())).unwrap_or(0), c.degree());
                assert!(c.poly.is_zero() || c.poly.terms().all(|(m, _)| m.weighted_degree(&weights(c.poly.vars())) == c.degree()));
            }
        }
    }

    #[test]
    fn relabelled_tree_gets_relabelled_cont() {
        let t = ColoredTree::new(
            vec![Vertex::new(4, 2), Vertex::ZERO, Vertex::new(1, 1), Vertex::new(1, 1)],
            vec![(1, 0), (2, 1), (1, 3)],
        )
        .unwrap();
        let c = cont_recursive(&t).unwrap();
        // edge 0 now carries the genus-4 leaf
        assert_eq!(c.poly.coeff_of(&[("z1", 5)]), Rational::from_integer(28.into()));
    }

    #[test]
    fn pullback_22() {
        let p = torelli_pullback(&Partition::parse("2,2").unwrap()).unwrap();
        assert_eq!(p.terms.len(), 9);
        assert!(!p.total.is_empty());
        let single = torelli_pullback(&Partition::parse("1,1").unwrap()).unwrap();
        assert_eq!(single.terms.len(), 1);
        assert_eq!(single.total.len(), 1);
        assert_eq!(single.terms[0].cont.poly.render(), "1");
    }
}
