//! Star-shaped graphs, I-functions and exceptional pushforward tables for
//! the wall-crossing formula with targets of dimension `r <= 2`.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::rational::int;
use crate::algebra::{MPoly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Leg {
    pub g: u32,
    pub mu: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StarGraph {
    pub r: u32,
    pub g0: u32,
    pub legs: Vec<Leg>,
}

fn leg_key(l: &Leg) -> (Reverse<usize>, Reverse<u32>) {
    (Reverse(l.mu.len()), Reverse(l.g))
}

impl StarGraph {
    pub fn new(r: u32, g0: u32, mut legs: Vec<Leg>) -> Self {
        legs.sort_by_key(leg_key);
        StarGraph { r, g0, legs }
    }

    pub fn m(&self) -> usize {
        self.legs.len()
    }

    /// `Σ(g_i + ℓ(μ^i)) + g0 − m`.
    pub fn genus(&self) -> u32 {
        let s: u32 = self.legs.iter().map(|l| l.g + l.mu.len() as u32).sum();
        s + self.g0 - self.m() as u32
    }

    /// Markings on the root besides the distinguished pair of a `(1,1)` leg.
    pub fn k(&self) -> u32 {
        self.legs.iter().filter(|l| l.mu == [1]).count() as u32
    }

    fn sort_key(&self) -> (Reverse<u32>, usize, Vec<(Reverse<usize>, Reverse<u32>)>) {
        (Reverse(self.g0), self.m(), self.legs.iter().map(leg_key).collect())
    }

    /// Shape constraints on the root and edge labels.
    pub fn is_valid(&self) -> bool {
        let ones = |l: &Leg| l.mu == [1];
        let pairs = self.legs.iter().filter(|l| l.mu == [1, 1]).count();
        let shape = match (self.r, self.g0) {
            (1, 1) => self.legs.iter().all(ones),
            (2, 2) => self.legs.iter().all(ones),
            (2, 1) => pairs == 1 && self.legs.iter().all(|l| ones(l) || l.mu == [1, 1]),
            _ => false,
        };
        // contracted legs must be stable: g_i = 0 would need ℓ(μ) >= 3
        shape && !self.legs.is_empty() && self.legs.iter().all(|l| l.g >= 1)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("star graph serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let s: StarGraph = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(StarGraph::new(s.r, s.g0, s.legs))
    }
}

impl fmt::Display for StarGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let legs: Vec<String> = self
            .legs
            .iter()
            .map(|l| {
                let mu: Vec<String> = l.mu.iter().map(|x| x.to_string()).collect();
                format!("({},({}))", l.g, mu.join(","))
            })
            .collect();
        write!(f, "[g0={}; {}]", self.g0, legs.join(", "))
    }
}

/// Partitions of `n` into positive parts, parts nonincreasing.
fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - p, p) {
            rest.insert(0, p);
            out.push(rest);
        }
    }
    out
}

pub fn enumerate_stars(g: u32, r: u32) -> Result<Vec<StarGraph>> {
    if r >= 3 || r == 0 {
        return Err(Error::UnsupportedR(r));
    }
    if g < r + 1 {
        return Err(Error::OutOfRange(format!("star graphs need g >= r + 1, got g = {g}, r = {r}")));
    }
    let single = |gs: &[u32]| -> Vec<Leg> { gs.iter().map(|&h| Leg { g: h, mu: vec![1] }).collect() };
    let mut out = Vec::new();
    if r == 1 {
        for p in partitions(g - 1, g) {
            out.push(StarGraph::new(1, 1, single(&p)));
        }
    } else {
        // g0 = 2: Σ g_i = g − 2
        for p in partitions(g - 2, g) {
            out.push(StarGraph::new(2, 2, single(&p)));
        }
        // g0 = 1 with one (1,1) leg of genus a: a + Σ g_i = g − 2
        for a in 1..=g - 2 {
            for p in partitions(g - 2 - a, g) {
                let mut legs = single(&p);
                legs.push(Leg { g: a, mu: vec![1, 1] });
                out.push(StarGraph::new(2, 1, legs));
            }
        }
    }
    out.retain(|s| s.genus() == g && s.is_valid());
    out.sort_by_key(|s| s.sort_key());
    Ok(out)
}

fn aut_mu(mu: &[u32]) -> u64 {
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for &x in mu {
        *counts.entry(x).or_default() += 1;
    }
    counts.values().map(|&c| (1..=c).product::<u64>()).product()
}

pub fn aut_order_star(s: &StarGraph) -> u64 {
    let mut counts: BTreeMap<&Leg, u64> = BTreeMap::new();
    for l in &s.legs {
        *counts.entry(l).or_default() += 1;
    }
    counts.values().map(|&c| (1..=c).product::<u64>()).product()
}

pub fn z_degree(h: u32, mu: &[u32], r: u32) -> i64 {
    (r * h) as i64 - mu.len() as i64
}

#[derive(Clone, Debug, PartialEq)]
pub struct IFunctionSeries {
    pub h: u32,
    pub mu: Vec<u32>,
    pub r: u32,
    /// `coefficients[p]` multiplies `z^p`.
    pub coefficients: Vec<MPoly>,
}

impl IFunctionSeries {
    pub fn z_degree(&self) -> i64 {
        self.coefficients.len() as i64 - 1
    }
}

/// Variables `l1..lh, psi1..psiℓ, H1..Hℓ, a1..ar`.
pub fn ifun_vars(h: u32, l: usize, r: u32) -> Vec<String> {
    let mut v: Vec<String> = (1..=h).map(|i| format!("l{i}")).collect();
    v.extend((1..=l).map(|k| format!("psi{k}")));
    v.extend((1..=l).map(|k| format!("H{k}")));
    v.extend((1..=r).map(|j| format!("a{j}")));
    v
}

/// Complete homogeneous symmetric polynomials `h_0..=h_top` in `xs`.
fn complete_homogeneous(xs: &[MPoly], vars: &[String], top: usize) -> Vec<MPoly> {
    let mut h = vec![MPoly::one(vars.to_vec())];
    h.extend((0..top).map(|_| MPoly::zero(vars.to_vec())));
    for x in xs {
        // multiply by 1/(1 − x t)
        for d in 1..=top {
            let next = h[d].add(&h[d - 1].mul(x));
            h[d] = next;
        }
    }
    h
}

/// `[∏_j Λ∨(z−α_j) / ∏_k (z−ψ_k−H_k)]_{z≥0} / |Aut(μ)|` with
/// `Λ∨(t) = Σ_i (−1)^i λ_i t^{h−i}`.
pub fn i_function(h: u32, mu: &[u32], r: u32) -> Result<IFunctionSeries> {
    if mu.is_empty() || mu.contains(&0) {
        return Err(Error::Invalid("μ must be a nonempty partition".into()));
    }
    if r == 0 || r >= 3 {
        return Err(Error::UnsupportedR(r));
    }
    let l = mu.len();
    let vars = ifun_vars(h, l, r);
    let var = |n: &str| MPoly::var(vars.clone(), n);
    let lam = |i: u32| if i == 0 { MPoly::one(vars.clone()) } else { var(&format!("l{i}")) };
    // numerator as polynomial in z: coefficient list
    let mut num: Vec<MPoly> = vec![MPoly::one(vars.clone())];
    for j in 1..=r {
        let alpha = var(&format!("a{j}"));
        // Λ∨(z − α) = Σ_i (−1)^i λ_i Σ_b C(h−i, b) z^b (−α)^{h−i−b}
        let mut factor = vec![MPoly::zero(vars.clone()); h as usize + 1];
        for i in 0..=h {
            let sign = if i % 2 == 0 { int(1) } else { int(-1) };
            let e = h - i;
            for b in 0..=e {
                let c = crate::algebra::binomial(e, b);
                let c = Rational::from_integer(c) * &sign;
                let t = lam(i).mul(&alpha.neg().pow(e - b)).scale(&c);
                factor[b as usize] = factor[b as usize].add(&t);
            }
        }
        let mut prod = vec![MPoly::zero(vars.clone()); num.len() + factor.len() - 1];
        for (a, x) in num.iter().enumerate() {
            for (b, y) in factor.iter().enumerate() {
                prod[a + b] = prod[a + b].add(&x.mul(y));
            }
        }
        num = prod;
    }
    let top = (r * h) as i64;
    let zdeg = z_degree(h, mu, r);
    let xs: Vec<MPoly> = (1..=l)
        .map(|k| var(&format!("psi{k}")).add(&var(&format!("H{k}"))))
        .collect();
    let hs = complete_homogeneous(&xs, &vars, (top - l as i64).max(0) as usize);
    // 1/∏(z − x_k) = Σ_{n≥0} h_n(x) z^{−n−ℓ}
    let aut = Rational::new(1.into(), aut_mu(mu).into());
    let mut coefficients = Vec::new();
    for p in 0..=zdeg {
        let mut c = MPoly::zero(vars.clone());
        for a in (p + l as i64)..=top {
            let n = (a - p - l as i64) as usize;
            c = c.add(&num[a as usize].mul(&hs[n]));
        }
        coefficients.push(c.scale(&aut));
    }
    Ok(IFunctionSeries { h, mu: mu.to_vec(), r, coefficients })
}

pub fn blowup_component_count(k: u32) -> Result<u64> {
    if k == 0 {
        return Err(Error::OutOfRange("blowup_component_count needs k >= 1".into()));
    }
    Ok((3u64.pow(k) - 2u64.pow(k) - 1) / 2 + 1)
}

/// Components `Z_I` of `Z_1 ∪ … ∪ Z_k`: a nonempty set `I` of markings on the
/// rational bridge, the rest split between the two unordered genus-1 sides.
pub fn blowup_component_brute(k: u32) -> u64 {
    let mut seen = std::collections::BTreeSet::new();
    for code in 0..3u64.pow(k) {
        let mut place = Vec::with_capacity(k as usize);
        let mut c = code;
        for _ in 0..k {
            place.push((c % 3) as u8);
            c /= 3;
        }
        if !place.contains(&0) {
            continue;
        }
        let side = |s: u8| -> Vec<usize> { (0..k as usize).filter(|&i| place[i] == s).collect() };
        let (bridge, mut a, mut b) = (side(0), side(1), side(2));
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        seen.insert((bridge, a, b));
    }
    seen.len() as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExceptionalCase {
    /// one marking on `M_{2,1}`
    M21,
    M22,
    M23,
}

impl ExceptionalCase {
    pub fn markings(self) -> usize {
        match self {
            ExceptionalCase::M21 => 1,
            ExceptionalCase::M22 => 2,
            ExceptionalCase::M23 => 3,
        }
    }

    pub fn for_k(k: u32) -> Result<Self> {
        match k {
            1 => Ok(ExceptionalCase::M21),
            2 => Ok(ExceptionalCase::M22),
            3 => Ok(ExceptionalCase::M23),
            _ => Err(Error::MissingTable(format!("no exceptional table for k = {k} markings"))),
        }
    }

    /// Largest exponent of each `E_i` covered by the table.
    pub fn bounds(self) -> Vec<u32> {
        match self {
            ExceptionalCase::M21 => vec![u32::MAX],
            ExceptionalCase::M22 => vec![3, 1],
            ExceptionalCase::M23 => vec![1, 1, 1],
        }
    }
}

impl std::str::FromStr for ExceptionalCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M21" => Ok(ExceptionalCase::M21),
            "M22" => Ok(ExceptionalCase::M22),
            "M23" => Ok(ExceptionalCase::M23),
            _ => Err(Error::MissingTable(s.to_string())),
        }
    }
}

/// `coeff · (Σ_{q∈psi} ψ_q)|_{Z_locus}`, or `coeff · Z_locus` when `psi` is
/// empty. The empty locus stands for the whole space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcTerm {
    pub coeff: i64,
    pub locus: Vec<u32>,
    pub psi: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExcClass(pub Vec<ExcTerm>);

impl ExcClass {
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

fn z_name(locus: &[u32]) -> String {
    let s: Vec<String> = locus.iter().map(|x| x.to_string()).collect();
    format!("Z_{{{}}}", s.join(","))
}

impl fmt::Display for ExcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.0.iter().enumerate() {
            let sign = if t.coeff < 0 { "-" } else if i > 0 { "+" } else { "" };
            let sep = if i > 0 { " " } else { "" };
            let a = t.coeff.abs();
            let c = if a == 1 { String::new() } else { format!("{a}*") };
            let body = if t.locus.is_empty() {
                "1".to_string()
            } else if t.psi.is_empty() {
                z_name(&t.locus)
            } else {
                let ps: Vec<String> = t.psi.iter().map(|q| format!("psi_q{q}")).collect();
                let p = if ps.len() == 1 { ps[0].clone() } else { format!("({})", ps.join("+")) };
                format!("{p}|{}", z_name(&t.locus))
            };
            write!(f, "{sep}{sign}{}{c}{body}", if i > 0 { " " } else { "" })?;
        }
        Ok(())
    }
}

fn z(coeff: i64, locus: &[u32]) -> ExcTerm {
    ExcTerm { coeff, locus: locus.to_vec(), psi: vec![] }
}

fn zpsi(coeff: i64, locus: &[u32], psi: &[u32]) -> ExcTerm {
    ExcTerm { coeff, locus: locus.to_vec(), psi: psi.to_vec() }
}

/// `τ_*` of the monomial `∏ E_i^{exps[i]}` from the tabulated cases.
pub fn exceptional_pushforward(case: ExceptionalCase, exps: &[u32]) -> Result<ExcClass> {
    let k = case.markings();
    if exps.len() != k {
        return Err(Error::Dimension(format!("{case:?} takes {k} exponents, got {}", exps.len())));
    }
    let out_of_table = || Error::OutOfTable(format!("{case:?} E^{exps:?}"));
    if exps.iter().zip(case.bounds()).any(|(&e, b)| e > b) {
        return Err(out_of_table());
    }
    if exps.iter().all(|&e| e == 0) {
        return Ok(ExcClass(vec![z(1, &[])]));
    }
    let terms = match case {
        ExceptionalCase::M21 => match exps[0] {
            2 => vec![z(-1, &[1])],
            _ => vec![],
        },
        ExceptionalCase::M22 => match (exps[0], exps[1]) {
            (1, 0) | (0, 1) | (3, 1) => vec![],
            (1, 1) => vec![z(-1, &[1, 2])],
            (2, 0) => vec![z(-1, &[1]), z(-1, &[1, 2])],
            (2, 1) | (3, 0) => vec![zpsi(-1, &[1], &[1]), zpsi(1, &[1, 2], &[1, 2])],
            _ => return Err(out_of_table()),
        },
        ExceptionalCase::M23 => {
            let on: Vec<u32> = (1..=3).filter(|&i| exps[i as usize - 1] == 1).collect();
            match on.len() {
                1 => vec![],
                2 => vec![z(-1, &on), z(-1, &[1, 2, 3])],
                _ => vec![
                    zpsi(-1, &[1, 2], &[1]),
                    zpsi(-1, &[1, 3], &[1]),
                    zpsi(-1, &[2, 3], &[1]),
                    zpsi(1, &[1, 2, 3], &[1, 2]),
                ],
            }
        }
    };
    Ok(ExcClass(terms))
}

#[derive(Clone, Debug)]
pub struct WallcrossTerm {
    pub graph: StarGraph,
    pub aut_inv: Rational,
    /// the unramified-map space, via its blowup model
    pub space: String,
    pub legs: Vec<IFunctionSeries>,
    pub exceptional: bool,
    pub table: Option<ExceptionalCase>,
    pub substitutions: Vec<String>,
}

fn space_symbol(s: &StarGraph) -> String {
    match (s.r, s.g0) {
        (1, _) => format!("M^un_1(pi_1, (1)^{})", s.m()),
        (_, 2) => format!("Bl M^ct_{{2,{}}}", s.k()),
        _ => format!("Bl M^bullet_{{1,2+{}}}", s.k()),
    }
}

fn substitutions(s: &StarGraph) -> Vec<String> {
    match (s.r, s.g0) {
        (2, 2) => vec![
            "Psi_i = psi_i - eps_i^* psi_1 + E_i".into(),
            "ev_i^* H = eps_i^* psi_1 - E_i".into(),
            "ev_i^* alpha_j = alpha_j".into(),
        ],
        (2, 1) => vec![
            "Psi_1 = psi_p1 + psi_p2 - E".into(),
            "Psi_(1+i) = psi_i".into(),
            "ev_i^* H = 0".into(),
            "ev_i^* alpha_j = 0".into(),
        ],
        _ => vec![],
    }
}

/// Whether exceptional classes enter the term: some leg whose `Ψ` involves
/// exceptional divisors has an I-function of positive `z`-degree.
fn carries_exceptional(s: &StarGraph) -> bool {
    match (s.r, s.g0) {
        (2, 2) => s.k() >= 1 && s.legs.iter().any(|l| z_degree(l.g, &l.mu, 2) > 0),
        // V_ℓ needs at least four markings on the root
        (2, 1) => {
            s.k() + 2 >= 4
                && s.legs
                    .iter()
                    .any(|l| l.mu == [1, 1] && z_degree(l.g, &l.mu, 2) > 0)
        }
        _ => false,
    }
}

/// Per star graph: `1/|Aut(S)|`, the root space, the leg I-functions and the
/// `Ψ`/`H`/`α` substitution rules.
pub fn wallcross_assemble(g: u32, r: u32) -> Result<Vec<WallcrossTerm>> {
    let stars = enumerate_stars(g, r)?;
    let mut out = Vec::with_capacity(stars.len());
    for s in stars {
        let exceptional = carries_exceptional(&s);
        let table = if exceptional {
            if s.g0 != 2 {
                return Err(Error::MissingTable(format!("exceptional pushforwards on {}", space_symbol(&s))));
            }
            let case = ExceptionalCase::for_k(s.k())?;
            let mut need: Vec<u32> = s.legs.iter().map(|l| z_degree(l.g, &l.mu, 2).max(0) as u32).collect();
            need.sort_unstable_by(|a, b| b.cmp(a));
            if need.iter().zip(case.bounds()).any(|(&n, b)| n > b) {
                return Err(Error::MissingTable(format!("{case:?} with E-degrees {need:?}")));
            }
            Some(case)
        } else {
            None
        };
        let legs = s
            .legs
            .iter()
            .map(|l| i_function(l.g, &l.mu, r))
            .collect::<Result<Vec<_>>>()?;
        out.push(WallcrossTerm {
            aut_inv: Rational::new(1.into(), aut_order_star(&s).into()),
            space: space_symbol(&s),
            substitutions: substitutions(&s),
            graph: s,
            legs,
            exceptional,
            table,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn leg(g: u32, mu: &[u32]) -> Leg {
        Leg { g, mu: mu.to_vec() }
    }

    #[test]
    fn genus_four_catalog() {
        let s = enumerate_stars(4, 2).unwrap();
        let want = vec![
            StarGraph::new(2, 2, vec![leg(2, &[1])]),
            StarGraph::new(2, 2, vec![leg(1, &[1]), leg(1, &[1])]),
            StarGraph::new(2, 1, vec![leg(2, &[1, 1])]),
            StarGraph::new(2, 1, vec![leg(1, &[1, 1]), leg(1, &[1])]),
        ];
        assert_eq!(s, want);
    }

    #[test]
    fn genus_five_has_seven() {
        let s = enumerate_stars(5, 2).unwrap();
        assert_eq!(s.len(), 7);
        assert!(s.contains(&StarGraph::new(2, 1, vec![leg(1, &[1, 1]), leg(2, &[1])])));
        for x in &s {
            assert_eq!(x.genus(), 5);
        }
    }

    #[test]
    fn r_one_and_errors() {
        let s = enumerate_stars(2, 1).unwrap();
        assert_eq!(s, vec![StarGraph::new(1, 1, vec![leg(1, &[1])])]);
        assert_eq!(enumerate_stars(6, 1).unwrap().len(), 7);
        assert!(matches!(enumerate_stars(5, 3), Err(Error::UnsupportedR(3))));
        assert!(enumerate_stars(2, 2).is_err());
    }

    #[test]
    fn automorphisms() {
        assert_eq!(aut_order_star(&StarGraph::new(2, 2, vec![leg(1, &[1]), leg(1, &[1])])), 2);
        assert_eq!(aut_order_star(&StarGraph::new(2, 2, vec![leg(2, &[1]), leg(1, &[1])])), 1);
        assert_eq!(aut_order_star(&StarGraph::new(1, 1, vec![leg(1, &[1]); 3])), 6);
    }

    #[test]
    fn degrees() {
        assert_eq!(z_degree(1, &[1], 2), 1);
        assert_eq!(z_degree(2, &[1], 2), 3);
        assert_eq!(z_degree(1, &[1, 1], 2), 0);
        for (h, mu, r) in [(1, vec![1], 2), (2, vec![1], 2), (1, vec![1, 1], 2), (2, vec![1, 1], 1)] {
            assert_eq!(i_function(h, &mu, r).unwrap().z_degree(), z_degree(h, &mu, r));
        }
    }

    #[test]
    fn ifunction_h1() {
        // (z − a1 − l1)(z − a2 − l1)/(z − x) with x = psi1 + H1
        let f = i_function(1, &[1], 2).unwrap();
        let v = f.coefficients[0].vars().to_vec();
        let p = |s: &str| crate::algebra::parse_poly_with(s, &v, &|x: &str| x.to_string()).unwrap();
        assert_eq!(f.coefficients[1], p("1"));
        assert_eq!(f.coefficients[0], p("psi1 + H1 - a1 - a2 - 2*l1"));
        let g = i_function(1, &[1, 1], 2).unwrap();
        assert_eq!(g.coefficients, vec![MPoly::constant(g.coefficients[0].vars().to_vec(), rat(1, 2))]);
        assert!(i_function(0, &[1], 1).unwrap().coefficients.is_empty());
    }

    #[test]
    fn components() {
        assert_eq!(blowup_component_count(3).unwrap(), 10);
        assert_eq!(blowup_component_count(1).unwrap(), 1);
        assert_eq!(blowup_component_count(2).unwrap(), 3);
        for k in 1..=6 {
            assert_eq!(blowup_component_count(k).unwrap(), blowup_component_brute(k));
        }
    }

    #[test]
    fn tables() {
        use ExceptionalCase::*;
        assert_eq!(exceptional_pushforward(M21, &[2]).unwrap().to_string(), "-Z_{1}");
        assert!(exceptional_pushforward(M21, &[3]).unwrap().is_zero());
        assert_eq!(exceptional_pushforward(M22, &[1, 1]).unwrap().to_string(), "-Z_{1,2}");
        assert_eq!(
            exceptional_pushforward(M22, &[3, 0]).unwrap().to_string(),
            "-psi_q1|Z_{1} + (psi_q1+psi_q2)|Z_{1,2}"
        );
        assert!(exceptional_pushforward(M23, &[1, 0, 0]).unwrap().is_zero());
        assert_eq!(exceptional_pushforward(M23, &[0, 1, 1]).unwrap().to_string(), "-Z_{2,3} - Z_{1,2,3}");
        assert!(matches!(exceptional_pushforward(M23, &[2, 0, 0]), Err(Error::OutOfTable(_))));
        assert!(matches!(exceptional_pushforward(M22, &[0, 2]), Err(Error::OutOfTable(_))));
    }

    #[test]
    fn assemble_flags() {
        let t4 = wallcross_assemble(4, 2).unwrap();
        assert_eq!(t4.iter().map(|t| t.exceptional).collect::<Vec<_>>(), [true, true, false, false]);
        let t5 = wallcross_assemble(5, 2).unwrap();
        let flagged: Vec<bool> = t5.iter().map(|t| t.exceptional).collect();
        assert_eq!(flagged, [true, true, true, false, false, false, false]);
        assert!(matches!(wallcross_assemble(6, 2), Err(Error::MissingTable(_))));
        let t3 = wallcross_assemble(3, 1).unwrap();
        assert!(t3.iter().all(|t| t.graph.g0 == 1 && t.graph.legs.iter().all(|l| l.mu == [1])));
    }

    #[test]
    fn json_roundtrip() {
        let s = StarGraph::new(2, 1, vec![leg(1, &[1]), leg(1, &[1, 1])]);
        let j = s.to_json();
        assert_eq!(j, serde_json::json!({"r": 2, "g0": 1, "legs": [{"g": 1, "mu": [1, 1]}, {"g": 1, "mu": [1]}]}));
        assert_eq!(StarGraph::from_json(&j).unwrap(), s);
    }
}
