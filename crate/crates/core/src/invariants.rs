//! The invariant ring `I_{g,s} = Sym(Sym² Q^s) / ⟨relations of degree g+1⟩`
//! modelling the tautological ring of the `s`-fold fiber product of the
//! universal abelian variety, with `θ_i` on the diagonal and `η_ij` off it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::algebra::rational::factorial;
use crate::algebra::{parse_poly_with, solve_linear, MPoly, Monomial, QMatrix, Rational, RowReducer, Solution};
use crate::error::{Error, Result};
use crate::lambda_ring::{abs_bernoulli_even, lambda_vars};

pub const MAX_S: u32 = 4;
pub const MAX_G: u32 = 6;

/// Unordered pairs `{i, j}`, `1 <= i <= j <= s`, in lexicographic order.
pub fn sym2_indices(s: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 1..=s {
        for j in i..=s {
            out.push((i, j));
        }
    }
    out
}

fn pair_name(i: u32, j: u32) -> String {
    if i == j {
        format!("t{i}")
    } else {
        format!("e{i}{j}")
    }
}

/// `t1, e12, …, t2, …`; `θ_i` is stored as `t<i>`.
pub fn inv_vars(s: u32) -> Vec<String> {
    sym2_indices(s).into_iter().map(|(i, j)| pair_name(i, j)).collect()
}

fn m_vars(s: u32) -> Vec<String> {
    sym2_indices(s).into_iter().map(|(i, j)| format!("m{i}{j}")).collect()
}

/// Accepts `t1`, `θ1`, `theta1`, `e12`, `e21`, `η12`, `eta12`; `e11` means `t1`.
pub fn inv_alias(name: &str) -> String {
    for p in ["theta", "θ"] {
        if let Some(r) = name.strip_prefix(p) {
            return format!("t{r}");
        }
    }
    let rest = ["eta", "η", "e"].iter().find_map(|p| name.strip_prefix(p));
    if let Some(r) = rest {
        let r = r.trim_start_matches('_');
        let ds: Vec<u32> = r.chars().filter_map(|c| c.to_digit(10)).collect();
        if ds.len() == 2 && r.len() == 2 {
            let (i, j) = (ds[0].min(ds[1]), ds[0].max(ds[1]));
            return pair_name(i, j);
        }
    }
    name.to_string()
}

pub fn parse_inv(s: u32, src: &str) -> Result<MPoly> {
    let vars = inv_vars(s);
    let p = parse_poly_with(src, &vars, &inv_alias)?;
    if let Some(v) = p.compact().vars().iter().find(|v| !vars.contains(v)) {
        return Err(Error::Parse(format!("unknown generator {v} for s = {s}")));
    }
    Ok(p.with_vars(&vars))
}

/// A class in `I_{g,s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvClass {
    pub g: u32,
    pub s: u32,
    pub expr: MPoly,
}

impl fmt::Display for InvClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.expr.render())
    }
}

fn monomials(n: usize, k: u32) -> Vec<Monomial> {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            go(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    go(0, k, &mut vec![0; n], &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Determinant by cofactor expansion along the first row.
fn det_poly(s: usize, entry: &dyn Fn(usize, usize) -> MPoly, vars: &[String]) -> MPoly {
    fn go(rows: &[usize], cols: &[usize], entry: &dyn Fn(usize, usize) -> MPoly, vars: &[String]) -> MPoly {
        if rows.is_empty() {
            return MPoly::one(vars.to_vec());
        }
        let mut out = MPoly::zero(vars.to_vec());
        for (k, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let t = entry(rows[0], c).mul(&go(&rows[1..], &rest, entry, vars));
            out = if k % 2 == 0 { out.add(&t) } else { out.sub(&t) };
        }
        out
    }
    let idx: Vec<usize> = (0..s).collect();
    go(&idx, &idx, entry, vars)
}

/// `det(M)` for the symmetric formal matrix `M = (m_ij)`.
pub fn det_m(s: u32) -> MPoly {
    let vars = m_vars(s);
    det_poly(
        s as usize,
        &|i, j| {
            let (a, b) = (i.min(j) + 1, i.max(j) + 1);
            MPoly::var(vars.clone(), &format!("m{a}{b}"))
        },
        &vars,
    )
}

/// `det` of the matrix with `θ_i` on the diagonal and `η_ij / 2` off it.
pub fn theta_det(s: u32) -> MPoly {
    let vars = inv_vars(s);
    let half = Rational::new(1.into(), 2.into());
    det_poly(
        s as usize,
        &|i, j| {
            let (a, b) = (i.min(j) as u32 + 1, i.max(j) as u32 + 1);
            let v = MPoly::var(vars.clone(), &pair_name(a, b));
            if a == b {
                v
            } else {
                v.scale(&half)
            }
        },
        &vars,
    )
}

/// `κ_{g,s} = ∏_{k=0}^{s−1} (g + k/2)`.
pub fn kappa(g: u32, s: u32) -> Rational {
    (0..s)
        .map(|k| Rational::new((2 * g + k).into(), 2.into()))
        .fold(Rational::one(), |a, b| a * b)
}

struct Graded {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    relations: RowReducer,
    basis: Vec<usize>,
}

/// Coefficients of `(Σ a_i² θ_i + Σ_{i<j} a_i a_j η_ij)^{g+1}` in the `a_i`.
fn relation_generators(g: u32, s: u32) -> Vec<MPoly> {
    let pv = inv_vars(s);
    let mut vars = pv.clone();
    vars.extend((1..=s).map(|i| format!("a{i}")));
    let mut base = MPoly::zero(vars.clone());
    for (i, j) in sym2_indices(s) {
        let t = MPoly::var(vars.clone(), &pair_name(i, j))
            .mul(&MPoly::var(vars.clone(), &format!("a{i}")))
            .mul(&MPoly::var(vars.clone(), &format!("a{j}")));
        base = base.add(&t);
    }
    let full = base.pow(g + 1);
    let np = pv.len();
    let mut groups: BTreeMap<Vec<u32>, MPoly> = BTreeMap::new();
    for (m, c) in full.terms() {
        let (p, a) = m.0.split_at(np);
        groups
            .entry(a.to_vec())
            .or_insert_with(|| MPoly::zero(pv.clone()))
            .add_term(Monomial(p.to_vec()), c.clone());
    }
    groups.into_values().rev().collect()
}

fn build_degree(g: u32, s: u32, gens: &[MPoly], k: u32) -> Graded {
    let n = sym2_indices(s).len();
    let mons = monomials(n, k);
    let index: HashMap<Monomial, usize> = mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut relations = RowReducer::new();
    if k > g {
        for m in monomials(n, k - g - 1) {
            for gen in gens {
                let row: BTreeMap<usize, Rational> =
                    gen.terms().map(|(t, c)| (index[&t.mul(&m)], c.clone())).collect();
                relations.insert(&row);
            }
        }
    }
    let basis = (0..mons.len()).filter(|c| !relations.is_pivot(*c)).collect();
    Graded {
        monomials: mons,
        index,
        relations,
        basis,
    }
}

/// `I_{g,s}` with per-degree standard monomials and the cached `det(M)^g`,
/// `det(M)^{g−1}`.
pub struct InvRing {
    pub g: u32,
    pub s: u32,
    vars: Vec<String>,
    gens: Vec<MPoly>,
    graded: Mutex<HashMap<u32, Arc<Graded>>>,
    det_g: MPoly,
    det_g1: MPoly,
}

fn rings() -> &'static Mutex<HashMap<(u32, u32), Arc<InvRing>>> {
    static RINGS: OnceLock<Mutex<HashMap<(u32, u32), Arc<InvRing>>>> = OnceLock::new();
    RINGS.get_or_init(|| Mutex::new(HashMap::new()))
}

fn check_range(g: u32, s: u32) -> Result<()> {
    if g == 0 || s == 0 {
        return Err(Error::OutOfRange("need g >= 1 and s >= 1".into()));
    }
    if g > MAX_G || s > MAX_S {
        return Err(Error::OutOfRange(format!(
            "(g, s) = ({g}, {s}) exceeds the cap g <= {MAX_G}, s <= {MAX_S}"
        )));
    }
    Ok(())
}

impl InvRing {
    pub fn get(g: u32, s: u32) -> Result<Arc<InvRing>> {
        check_range(g, s)?;
        if let Some(r) = rings().lock().expect("ring cache").get(&(g, s)) {
            return Ok(r.clone());
        }
        let det = det_m(s);
        let ring = Arc::new(InvRing {
            g,
            s,
            vars: inv_vars(s),
            gens: relation_generators(g, s),
            graded: Mutex::new(HashMap::new()),
            det_g: det.pow(g),
            det_g1: det.pow(g - 1),
        });
        Ok(rings().lock().expect("ring cache").entry((g, s)).or_insert(ring).clone())
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn socle_degree(&self) -> u32 {
        self.g * self.s
    }

    fn graded(&self, k: u32) -> Arc<Graded> {
        if let Some(d) = self.graded.lock().expect("graded cache").get(&k) {
            return d.clone();
        }
        let d = Arc::new(build_degree(self.g, self.s, &self.gens, k));
        self.graded.lock().expect("graded cache").entry(k).or_insert(d).clone()
    }

    pub fn dim(&self, k: u32) -> usize {
        self.graded(k).basis.len()
    }

    /// Standard monomials of degree `k`.
    pub fn basis(&self, k: u32) -> Vec<MPoly> {
        let d = self.graded(k);
        d.basis
            .iter()
            .map(|&i| MPoly::monomial(self.vars.clone(), d.monomials[i].0.clone(), Rational::one()))
            .collect()
    }

    fn align(&self, x: &MPoly) -> Result<MPoly> {
        let c = x.compact();
        if let Some(v) = c.vars().iter().find(|v| !self.vars.contains(v)) {
            return Err(Error::Invalid(format!("unknown generator {v}")));
        }
        Ok(c.with_vars(&self.vars))
    }

    /// Reduced representative modulo the relation ideal.
    pub fn normal_form(&self, x: &MPoly) -> Result<MPoly> {
        let x = self.align(x)?;
        let mut out = MPoly::zero(self.vars.clone());
        let top = x.degree().unwrap_or(0);
        for k in 0..=top {
            let piece = x.graded_piece(k);
            if piece.is_zero() {
                continue;
            }
            let d = self.graded(k);
            let row: BTreeMap<usize, Rational> = piece.terms().map(|(m, c)| (d.index[m], c.clone())).collect();
            for (i, c) in d.relations.reduce(&row) {
                out.add_term(d.monomials[i].clone(), c);
            }
        }
        Ok(out)
    }

    /// Spanning set of the relation ideal in degree `k`.
    pub fn relation_basis(&self, k: u32) -> Vec<MPoly> {
        if k <= self.g {
            return vec![];
        }
        let n = self.vars.len();
        let mut out = Vec::new();
        for m in monomials(n, k - self.g - 1) {
            let mm = MPoly::monomial(self.vars.clone(), m.0, Rational::one());
            for gen in &self.gens {
                out.push(gen.mul(&mm));
            }
        }
        out
    }

    /// `∫ x = Σ coeff · a! · [m^a] det(M)^g` on the degree-`gs` part.
    pub fn integrate(&self, x: &MPoly) -> Result<Rational> {
        let x = self.align(x)?;
        let top = self.socle_degree();
        if let Some(k) = x.terms().map(|(m, _)| m.degree()).find(|&k| k != top) {
            return Err(Error::WrongDegree { expected: top, got: k });
        }
        Ok(self.pair_with(&x, &self.det_g))
    }

    fn pair_with(&self, x: &MPoly, det: &MPoly) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in x.terms() {
            let af: num_bigint::BigInt = m.0.iter().map(|&e| factorial(e)).product();
            total += c * Rational::from_integer(af) * det.coeff(m);
        }
        total
    }

    /// Pairing of the degree-`k` basis against the degree-`(gs−k)` basis.
    pub fn gram_matrix(&self, k: u32) -> Result<QMatrix> {
        let top = self.socle_degree();
        if k > top {
            return Err(Error::DegreeOutOfRange { degree: k, socle: top });
        }
        let left = self.basis(k);
        let right = self.basis(top - k);
        let mut rows = Vec::with_capacity(left.len());
        for a in &left {
            rows.push(right.iter().map(|b| self.integrate(&a.mul(b))).collect::<Result<Vec<_>>>()?);
        }
        if rows.is_empty() {
            return Ok(QMatrix::zeros(0, right.len()));
        }
        QMatrix::from_rows(rows)
    }

    pub fn class(&self, expr: MPoly) -> Result<InvClass> {
        Ok(InvClass {
            g: self.g,
            s: self.s,
            expr: self.align(&expr)?,
        })
    }
}

pub fn integrate(g: u32, s: u32, x: &MPoly) -> Result<Rational> {
    InvRing::get(g, s)?.integrate(x)
}

pub fn relation_basis(g: u32, s: u32, degree: u32) -> Result<Vec<MPoly>> {
    Ok(InvRing::get(g, s)?.relation_basis(degree))
}

pub fn gram_matrix(g: u32, s: u32, k: u32) -> Result<QMatrix> {
    InvRing::get(g, s)?.gram_matrix(k)
}

/// `det(∂) det(M)^g = κ_{g,s} det(M)^{g−1}` with `∂_ij = 2^{δ_ij − 1} ∂/∂m_ij`.
pub fn capelli_check(g: u32, s: u32) -> Result<bool> {
    if g == 0 || s == 0 {
        return Err(Error::OutOfRange("need g >= 1 and s >= 1".into()));
    }
    let det = det_m(s);
    let vars = det.vars().to_vec();
    let pairs = sym2_indices(s);
    let col = |i: usize, j: usize| -> usize {
        let (a, b) = (i.min(j) as u32 + 1, i.max(j) as u32 + 1);
        pairs.iter().position(|&p| p == (a, b)).expect("pair")
    };
    let half = Rational::new(1.into(), 2.into());
    let start = det.pow(g);
    // Σ_σ sign(σ) ∏_i ∂_{i σ(i)} applied to det^g
    let mut perm: Vec<usize> = (0..s as usize).collect();
    let mut out = MPoly::zero(vars.clone());
    loop {
        let mut t = start.clone();
        for (i, &j) in perm.iter().enumerate() {
            t = t.derivative(col(i, j));
            if i != j {
                t = t.scale(&half);
            }
        }
        out = if sign(&perm) > 0 { out.add(&t) } else { out.sub(&t) };
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let want = det.pow(g - 1).scale(&kappa(g, s));
    Ok(out.sub(&want).is_zero())
}

fn sign(p: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Degree-`s` class `ρ` with `∫ ρ·η^a/a! = [m^a] det(M)^{g−1}` for every
/// exponent vector `a` of degree `gs − s`, by exact linear solve.
pub fn project_pr_solve(g: u32, s: u32) -> Result<InvClass> {
    let ring = InvRing::get(g, s)?;
    let basis = ring.basis(s);
    let n = ring.vars.len();
    let tests = monomials(n, g * s - s);
    let mut rows = Vec::with_capacity(tests.len());
    let mut rhs = Vec::with_capacity(tests.len());
    for a in &tests {
        let af: num_bigint::BigInt = a.0.iter().map(|&e| factorial(e)).product();
        let ma = MPoly::monomial(ring.vars.clone(), a.0.clone(), Rational::one() / Rational::from_integer(af));
        rows.push(basis.iter().map(|b| ring.integrate(&b.mul(&ma))).collect::<Result<Vec<_>>>()?);
        rhs.push(ring.det_g1.coeff(a));
    }
    let sol = match solve_linear(&QMatrix::from_rows(rows)?, &rhs)? {
        Solution::Unique(x) => x,
        Solution::Affine { .. } => return Err(Error::SingularSystem),
    };
    let mut expr = MPoly::zero(ring.vars.clone());
    for (b, c) in basis.iter().zip(sol) {
        expr = expr.add(&b.scale(&c));
    }
    ring.class(expr)
}

/// `det(θ_i ; η_ij/2) / κ_{g,s}`.
pub fn project_pr_formula(g: u32, s: u32) -> Result<InvClass> {
    check_range(g, s)?;
    Ok(InvClass {
        g,
        s,
        expr: theta_det(s).scale(&(Rational::one() / kappa(g, s))),
    })
}

/// Equality in `I_{g,s}`.
pub fn inv_eq(a: &InvClass, b: &InvClass) -> Result<bool> {
    let ring = InvRing::get(a.g, a.s)?;
    Ok(ring.normal_form(&a.expr.sub(&b.expr))?.is_zero())
}

/// `taut^s([PR_{g,s}]) = prefactor · det(θ_i ; η_ij/2) · λ_{g−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductProjection {
    pub g: u32,
    pub s: u32,
    pub prefactor: Rational,
    pub det_class: MPoly,
    pub lambda: MPoly,
}

impl fmt::Display for ProductProjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} * ({}) * {}",
            crate::algebra::fmt_rational(&self.prefactor),
            self.det_class,
            self.lambda
        )
    }
}

/// `g / (6 κ_{g,s} |B_{2g}|)`.
pub fn product_prefactor(g: u32, s: u32) -> Result<Rational> {
    if g < 2 {
        return Err(Error::OutOfRange(format!("product_projection needs g >= 2, got {g}")));
    }
    Ok(Rational::from_integer(g.into()) / (Rational::from_integer(6.into()) * kappa(g, s) * abs_bernoulli_even(g)))
}

pub fn product_projection(g: u32, s: u32) -> Result<ProductProjection> {
    let prefactor = product_prefactor(g, s)?;
    let lv = lambda_vars(g);
    Ok(ProductProjection {
        g,
        s,
        prefactor,
        det_class: theta_det(s),
        lambda: MPoly::var(lv.clone(), &lv[g as usize - 2]),
    })
}

/// `det(θ_i ; η_ij/2)^r / (κ_{g,s} κ_{g−1,s} ⋯ κ_{g−r+1,s})`.
pub fn pr_general_r(g: u32, s: u32, r: u32) -> Result<InvClass> {
    if r == 0 || r >= g {
        return Err(Error::OutOfRange(format!("need 1 <= r <= g-1, got r = {r}")));
    }
    let denom = (0..r).map(|j| kappa(g - j, s)).fold(Rational::one(), |a, b| a * b);
    Ok(InvClass {
        g,
        s,
        expr: theta_det(s).pow(r).scale(&(Rational::one() / denom)),
    })
}

/// `ι_k(e_I)`: sum over the perfect matchings of the positions of `I`,
/// written through `e_ii ↦ θ_i`, `e_ij ↦ η_ij / 2`.
pub fn iota(s: u32, word: &[u32]) -> MPoly {
    let vars = inv_vars(s);
    let half = Rational::new(1.into(), 2.into());
    fn go(rest: &[u32], vars: &[String], half: &Rational) -> MPoly {
        if rest.is_empty() {
            return MPoly::one(vars.to_vec());
        }
        let mut out = MPoly::zero(vars.to_vec());
        for k in 1..rest.len() {
            let (a, b) = (rest[0].min(rest[k]), rest[0].max(rest[k]));
            let mut v = MPoly::var(vars.to_vec(), &pair_name(a, b));
            if a != b {
                v = v.scale(half);
            }
            let others: Vec<u32> = rest[1..].iter().enumerate().filter(|(i, _)| i + 1 != k).map(|(_, &x)| x).collect();
            out = out.add(&v.mul(&go(&others, vars, half)));
        }
        out
    }
    go(word, &vars, &half)
}


#[cfg(test)]
mod sweep_tests {
    use super::*;

    #[test]
    fn gorenstein_up_to_three() {
        for g in 1..=3 {
            for s in 1..=3 {
                let ring = InvRing::get(g, s).unwrap();
                let top = g * s;
                assert_eq!(ring.dim(top), 1, "socle ({g},{s})");
                assert_eq!(ring.dim(top + 1), 0, "beyond socle ({g},{s})");
                for k in 0..=top {
                    let m = ring.gram_matrix(k).unwrap();
                    assert!(m.is_square(), "({g},{s},{k})");
                    assert!(!m.det().unwrap().is_zero(), "({g},{s},{k})");
                }
                let mut soc = MPoly::one(ring.vars().to_vec());
                for i in 1..=s {
                    let t = MPoly::var(ring.vars().to_vec(), &format!("t{i}"));
                    soc = soc.mul(&t.pow(g).scale(&(Rational::one() / Rational::from_integer(factorial(g)))));
                }
                assert_eq!(ring.integrate(&soc).unwrap(), Rational::one());
            }
        }
    }

    #[test]
    fn capelli_up_to_four() {
        for g in 1..=4 {
            for s in 1..=3 {
                assert!(capelli_check(g, s).unwrap(), "({g},{s})");
            }
        }
    }

    #[test]
    fn solve_matches_formula() {
        for (g, s) in [(1, 1), (2, 1), (3, 1), (2, 2), (2, 3)] {
            let a = project_pr_solve(g, s).unwrap();
            let b = project_pr_formula(g, s).unwrap();
            assert!(inv_eq(&a, &b).unwrap(), "({g},{s})");
        }
    }
}
