//! The tautological ring of `A_g`: `Q[λ_1..λ_g]` modulo `λ_g` and the
//! homogeneous parts of `c(E)c(E^∨) = 1`, built degree by degree.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};

use crate::algebra::rational::{bernoulli, int};
use crate::algebra::{MPoly, Monomial, QMatrix, Rational, RowReducer};
use crate::error::{Error, Result};

pub const DEFAULT_G_CAP: u32 = 12;

pub fn lambda_vars(g: u32) -> Vec<String> {
    (1..=g).map(|i| format!("l{i}")).collect()
}

/// Accepts `l3`, `λ3`, `lambda3` and `lambda_3`.
pub fn lambda_alias(name: &str) -> String {
    for prefix in ["lambda_", "lambda", "λ_", "λ", "l"] {
        if let Some(rest) = name.strip_prefix(prefix) {
            if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
                return format!("l{rest}");
            }
        }
    }
    name.to_string()
}

pub fn parse_lambda(g: u32, src: &str) -> Result<MPoly> {
    let p = crate::algebra::parse_poly_with(src, &lambda_vars(g), &lambda_alias)?;
    if p.nvars() != g as usize {
        let extra: Vec<&String> = p.vars()[g as usize..].iter().collect();
        return Err(Error::Parse(format!("unknown symbols {extra:?} for g = {g}")));
    }
    Ok(p)
}

#[derive(Clone, Debug)]
struct Graded {
    /// monomials of this weight, largest first
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    relations: RowReducer,
    basis: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct LambdaBasis {
    pub g: u32,
    vars: Vec<String>,
    weights: Vec<u32>,
    graded: Vec<Graded>,
}

/// Exponent vectors of weight `k` with weights `1..=g`.
fn weighted_monomials(g: u32, k: u32) -> Vec<Monomial> {
    fn go(i: u32, g: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i > g {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        for e in 0..=left / i {
            cur[(i - 1) as usize] = e;
            go(i + 1, g, left - e * i, cur, out);
        }
        cur[(i - 1) as usize] = 0;
    }
    let mut out = Vec::new();
    go(1, g, k, &mut vec![0; g as usize], &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn generators(g: u32, vars: &[String]) -> Vec<(u32, MPoly)> {
    let lam = |i: u32| -> MPoly {
        if i == 0 {
            MPoly::one(vars.to_vec())
        } else {
            MPoly::var(vars.to_vec(), &vars[(i - 1) as usize])
        }
    };
    let mut out = vec![(g, lam(g))];
    for m in 1..=g {
        let mut r = MPoly::zero(vars.to_vec());
        for i in 0..=(2 * m) {
            let j = 2 * m - i;
            if i > g || j > g {
                continue;
            }
            let t = lam(i).mul(&lam(j));
            r = if j % 2 == 0 { r.add(&t) } else { r.sub(&t) };
        }
        if !r.is_zero() {
            out.push((2 * m, r));
        }
    }
    out
}

fn build_degree(g: u32, vars: &[String], k: u32) -> Graded {
    let monomials = weighted_monomials(g, k);
    let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut relations = RowReducer::new();
    for (w, gen) in generators(g, vars) {
        if w > k {
            continue;
        }
        for m in weighted_monomials(g, k - w) {
            let mut row = BTreeMap::new();
            for (t, c) in gen.terms() {
                let col = index[&t.mul(&m)];
                let e = row.entry(col).or_insert_with(Rational::zero);
                *e += c;
            }
            row.retain(|_, c: &mut Rational| !c.is_zero());
            relations.insert(&row);
        }
    }
    let basis = (0..monomials.len()).filter(|c| !relations.is_pivot(*c)).collect();
    Graded {
        monomials,
        index,
        relations,
        basis,
    }
}

impl LambdaBasis {
    pub fn build(g: u32) -> Result<Self> {
        Self::build_capped(g, DEFAULT_G_CAP)
    }

    pub fn build_capped(g: u32, cap: u32) -> Result<Self> {
        if g == 0 {
            return Err(Error::Invalid("g must be at least 1".into()));
        }
        if g > cap {
            return Err(Error::OutOfRange(format!("g = {g} exceeds cap {cap}")));
        }
        let vars = lambda_vars(g);
        let graded = (0..=socle_degree(g)).map(|k| build_degree(g, &vars, k)).collect();
        Ok(LambdaBasis {
            g,
            weights: (1..=g).collect(),
            vars,
            graded,
        })
    }

    pub fn socle_degree(&self) -> u32 {
        socle_degree(self.g)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn dims(&self) -> Vec<usize> {
        self.graded.iter().map(|d| d.basis.len()).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims().iter().sum()
    }

    /// Basis monomials of degree `k` as polynomials.
    pub fn basis(&self, k: u32) -> Vec<MPoly> {
        match self.graded.get(k as usize) {
            None => vec![],
            Some(d) => d
                .basis
                .iter()
                .map(|&i| MPoly::monomial(self.vars.clone(), d.monomials[i].0.clone(), Rational::one()))
                .collect(),
        }
    }

    fn align(&self, x: &MPoly) -> Result<MPoly> {
        if x.vars().iter().any(|v| !self.vars.contains(v)) {
            let c = x.compact();
            if c.vars().iter().any(|v| !self.vars.contains(v)) {
                return Err(Error::Invalid(format!("not a polynomial in λ_1..λ_{}", self.g)));
            }
            return Ok(c.with_vars(&self.vars));
        }
        Ok(x.with_vars(&self.vars))
    }

    /// Coordinates of the degree-`k` part of `x` in the degree-`k` basis.
    pub fn coordinates(&self, x: &MPoly, k: u32) -> Result<Vec<Rational>> {
        let x = self.align(x)?.weighted_piece(&self.weights, k);
        if k > self.socle_degree() {
            let d = build_degree(self.g, &self.vars, k);
            let nf = d.relations.reduce(&to_row(&d, &x));
            if !nf.is_empty() {
                return Err(Error::DegreeOutOfRange {
                    degree: k,
                    socle: self.socle_degree(),
                });
            }
            return Ok(vec![]);
        }
        let d = &self.graded[k as usize];
        let nf = d.relations.reduce(&to_row(d, &x));
        Ok(d.basis.iter().map(|i| nf.get(i).cloned().unwrap_or_else(Rational::zero)).collect())
    }

    /// Reduced representative of `x`, as a combination of basis monomials.
    pub fn normal_form(&self, x: &MPoly) -> Result<MPoly> {
        let x = self.align(x)?;
        let mut out = MPoly::zero(self.vars.clone());
        let top = x.weighted_degree(&self.weights).unwrap_or(0);
        for k in 0..=top {
            let coords = self.coordinates(&x, k)?;
            for (b, c) in self.basis(k).iter().zip(coords) {
                out = out.add(&b.scale(&c));
            }
        }
        Ok(out)
    }

    pub fn socle_class(&self) -> MPoly {
        let mut e = vec![1; self.g as usize];
        e[self.g as usize - 1] = 0;
        MPoly::monomial(self.vars.clone(), e, Rational::one())
    }

    /// Coefficient of `x` against `λ_1⋯λ_{g-1}`.
    pub fn socle_eval(&self, x: &MPoly) -> Result<Rational> {
        let x = self.align(x)?;
        let s = self.socle_degree();
        if let Some(k) = x.terms().map(|(m, _)| m.weighted_degree(&self.weights)).find(|&k| k != s) {
            return Err(Error::WrongDegree { expected: s, got: k });
        }
        let a = self.coordinates(&x, s)?;
        let b = self.coordinates(&self.socle_class(), s)?;
        let (i, bi) = b
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .expect("socle is one-dimensional and nonzero");
        Ok(&a[i] / bi)
    }

    pub fn ab_evaluate(&self, x: &MPoly) -> Result<Rational> {
        Ok(self.socle_eval(x)? * gamma(self.g))
    }

    /// `<a, b>` between the degree-`k` basis and the complementary basis.
    pub fn pairing_matrix(&self, k: u32) -> Result<QMatrix> {
        let s = self.socle_degree();
        if k > s {
            return Err(Error::DegreeOutOfRange { degree: k, socle: s });
        }
        let left = self.basis(k);
        let right = self.basis(s - k);
        let mut rows = Vec::with_capacity(left.len());
        for a in &left {
            let mut row = Vec::with_capacity(right.len());
            for b in &right {
                row.push(self.ab_evaluate(&a.mul(b))?);
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Ok(QMatrix::zeros(0, right.len()));
        }
        QMatrix::from_rows(rows)
    }
}

fn to_row(d: &Graded, x: &MPoly) -> BTreeMap<usize, Rational> {
    x.terms().map(|(m, c)| (d.index[m], c.clone())).collect()
}

pub fn socle_degree(g: u32) -> u32 {
    g * (g - 1) / 2
}

/// `∏_{i=1}^g |B_{2i}| / (4i)`.
pub fn gamma(g: u32) -> Rational {
    let mut out = Rational::one();
    for i in 1..=g {
        out *= bernoulli(2 * i as usize).abs() / int(4 * i as i64);
    }
    out
}

/// `|B_{2g}|`.
pub fn abs_bernoulli_even(g: u32) -> Rational {
    bernoulli(2 * g as usize).abs()
}
