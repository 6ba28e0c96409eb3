use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, Rational};

/// Dense exponent vector; ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if every exponent allows it.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial with exact rational coefficients over a
/// per-polynomial ordered variable dictionary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

fn to_names(vars: &[&str]) -> Vec<String> {
    vars.iter().map(|s| s.to_string()).collect()
}

impl MPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        MPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: Rational) -> Self {
        let mut p = MPoly::zero(vars);
        if !c.is_zero() {
            let n = p.vars.len();
            p.terms.insert(Monomial::one(n), c);
        }
        p
    }

    pub fn one(vars: Vec<String>) -> Self {
        MPoly::constant(vars, Rational::one())
    }

    pub fn from_int(vars: Vec<String>, c: i64) -> Self {
        MPoly::constant(vars, Rational::from_integer(c.into()))
    }

    /// The polynomial `name` in the given dictionary; `name` is appended if absent.
    pub fn var(vars: Vec<String>, name: &str) -> Self {
        let mut vars = vars;
        let idx = match vars.iter().position(|v| v == name) {
            Some(i) => i,
            None => {
                vars.push(name.to_string());
                vars.len() - 1
            }
        };
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = MPoly::zero(vars);
        p.terms.insert(Monomial(e), Rational::one());
        p
    }

    /// Single variable polynomial with a one-element dictionary.
    pub fn symbol(name: &str) -> Self {
        MPoly::var(vec![name.to_string()], name)
    }

    pub fn from_terms<I>(vars: Vec<String>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = MPoly::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), p.vars.len(), "exponent length mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn monomial(vars: Vec<String>, exps: Vec<u32>, c: Rational) -> Self {
        MPoly::from_terms(vars, [(Monomial(exps), c)])
    }

    pub fn with_names(vars: &[&str]) -> Self {
        MPoly::zero(to_names(vars))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the monomial given by `(name, exponent)` pairs; names
    /// absent from the dictionary must have exponent zero.
    pub fn coeff_of(&self, powers: &[(&str, u32)]) -> Rational {
        let mut e = vec![0; self.vars.len()];
        for (name, k) in powers {
            match self.index_of(name) {
                Some(i) => e[i] += k,
                None if *k == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.coeff(&Monomial(e))
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.vars.len()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        self.terms.keys().map(|m| m.weighted_degree(weights)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Reindex into a dictionary containing every variable that occurs.
    pub fn with_vars(&self, vars: &[String]) -> MPoly {
        if vars == self.vars.as_slice() {
            return self.clone();
        }
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect();
        let mut out = MPoly::zero(vars.to_vec());
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].unwrap_or_else(|| {
                    panic!("variable {} missing from target dictionary", self.vars[i])
                });
                e[j] += k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Drop variables that do not occur.
    pub fn compact(&self) -> MPoly {
        let used: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect();
        let vars: Vec<String> = used.iter().map(|&i| self.vars[i].clone()).collect();
        self.with_vars(&vars)
    }

    fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
        let mut out = a.to_vec();
        for v in b {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        out
    }

    fn aligned(&self, other: &MPoly) -> (MPoly, MPoly) {
        let vars = MPoly::union_vars(&self.vars, &other.vars);
        (self.with_vars(&vars), other.with_vars(&vars))
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        if self.vars == other.vars {
            let mut out = self.clone();
            for (m, c) in &other.terms {
                out.add_term(m.clone(), c.clone());
            }
            return out;
        }
        let (a, b) = self.aligned(other);
        a.add(&b)
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.vars.clone());
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        self.mul_trunc(other, None)
    }

    /// Product keeping only terms of total degree `<= cap`.
    pub fn mul_trunc(&self, other: &MPoly, cap: Option<u32>) -> MPoly {
        if self.vars != other.vars {
            let (a, b) = self.aligned(other);
            return a.mul_trunc(&b, cap);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            for (m2, c2) in &other.terms {
                if let Some(cap) = cap {
                    if d1 + m2.degree() > cap {
                        continue;
                    }
                }
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(x) => *x += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        MPoly {
            vars: self.vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Product keeping only terms of weighted degree `<= cap`.
    pub fn mul_weighted_trunc<F: Fn(&str) -> u32>(&self, other: &MPoly, weight: F, cap: u32) -> MPoly {
        if self.vars != other.vars {
            let (a, b) = self.aligned(other);
            return a.mul_weighted_trunc(&b, weight, cap);
        }
        let w: Vec<u32> = self.vars.iter().map(|v| weight(v)).collect();
        let wd = |m: &Monomial| m.weighted_degree(&w);
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m1, c1) in &self.terms {
            let d1 = wd(m1);
            if d1 > cap {
                continue;
            }
            for (m2, c2) in &other.terms {
                if d1 + wd(m2) > cap {
                    continue;
                }
                *acc.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        MPoly {
            vars: self.vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut out = MPoly::one(self.vars.clone());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn pow_trunc(&self, k: u32, cap: u32) -> MPoly {
        let mut out = MPoly::one(self.vars.clone());
        for _ in 0..k {
            out = out.mul_trunc(self, Some(cap));
        }
        out
    }

    /// Homogeneous component of total degree exactly `d`.
    pub fn graded_piece(&self, d: u32) -> MPoly {
        self.filter(|m| m.degree() == d)
    }

    /// Terms of total degree `<= d`.
    pub fn truncate(&self, d: u32) -> MPoly {
        self.filter(|m| m.degree() <= d)
    }

    pub fn weighted_piece(&self, weights: &[u32], d: u32) -> MPoly {
        self.filter(|m| m.weighted_degree(weights) == d)
    }

    pub fn filter<F: Fn(&Monomial) -> bool>(&self, keep: F) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<F: Fn(&Rational) -> Rational>(&self, f: F) -> MPoly {
        let mut out = MPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Partial derivative in the variable at index `i`.
    pub fn derivative(&self, i: usize) -> MPoly {
        let mut out = MPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let k = m.0[i];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[i] -= 1;
            out.add_term(Monomial(e), c * Rational::from_integer(k.into()));
        }
        out
    }

    /// Exact division by a monomial; `None` when some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<MPoly> {
        let mut out = MPoly::zero(self.vars.clone());
        for (t, c) in &self.terms {
            out.terms.insert(t.div(m)?, c.clone());
        }
        Some(out)
    }

    /// Rename variables through `f`; distinct names must stay distinct.
    pub fn rename<F: Fn(&str) -> String>(&self, f: F) -> MPoly {
        let vars: Vec<String> = self.vars.iter().map(|v| f(v)).collect();
        MPoly {
            vars,
            terms: self.terms.clone(),
        }
    }

    /// Substitute polynomials for variables. Variables not in `subs` stay.
    pub fn substitute(&self, subs: &HashMap<String, MPoly>) -> MPoly {
        self.substitute_trunc(subs, None)
    }

    /// Substitution discarding terms of total degree above `cap` along the way.
    pub fn substitute_trunc(&self, subs: &HashMap<String, MPoly>, cap: Option<u32>) -> MPoly {
        let mut vars: Vec<String> = self
            .vars
            .iter()
            .filter(|v| !subs.contains_key(*v))
            .cloned()
            .collect();
        for p in subs.values() {
            vars = MPoly::union_vars(&vars, &p.vars);
        }
        vars.sort_by_key(|v| {
            // keep a stable order: original order first, then the rest
            self.index_of(v).unwrap_or(usize::MAX)
        });
        let images: Vec<MPoly> = self
            .vars
            .iter()
            .map(|v| match subs.get(v) {
                Some(p) => p.with_vars(&vars),
                None => MPoly::var(vars.clone(), v),
            })
            .collect();
        let mut powers: Vec<Vec<MPoly>> = images
            .iter()
            .map(|p| vec![MPoly::one(vars.clone()), p.clone()])
            .collect();
        let mut out = MPoly::zero(vars.clone());
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(vars.clone(), c.clone());
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul_trunc(&images[i], cap);
                    powers[i].push(next);
                }
                t = t.mul_trunc(&powers[i][k as usize], cap);
            }
            out = out.add(&t);
        }
        out
    }

    /// Evaluate at rational points for every variable.
    pub fn eval(&self, values: &HashMap<String, Rational>) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    let x = values.get(&self.vars[i]).cloned().unwrap_or_else(Rational::zero);
                    t *= num_traits::pow(x, k as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Canonical text form: terms in decreasing monomial order, rational
    /// coefficients as `p/q`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.render_monomial(m);
            if mono.is_empty() {
                out.push_str(&fmt_rational(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&fmt_rational(&a));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &k) in m.0.iter().enumerate() {
            match k {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                _ => parts.push(format!("{}^{}", self.vars[i], k)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        MPoly::add(self, rhs)
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        MPoly::sub(self, rhs)
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        MPoly::mul(self, rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly::neg(self)
    }
}

/// Equality as polynomials, independent of the variable dictionaries.
pub fn poly_eq(a: &MPoly, b: &MPoly) -> bool {
    a.sub(b).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn z() -> MPoly {
        MPoly::symbol("z")
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial(vec![2, 0]);
        let b = Monomial(vec![0, 3]);
        let c = Monomial(vec![1, 1]);
        assert!(b > a);
        assert!(a > c);
    }

    #[test]
    fn binomial_graded_piece() {
        let p = MPoly::one(vec!["z".into()]).add(&z()).pow(3);
        let piece = p.graded_piece(2);
        assert_eq!(piece.render(), "3*z^2");
        assert!(MPoly::one(vec![]).graded_piece(1).is_zero());
    }

    #[test]
    fn render_with_fractions() {
        let p = z().scale(&rat(-3, 2)).add(&MPoly::constant(vec![], rat(1, 3)));
        assert_eq!(p.render(), "-3/2*z + 1/3");
    }

    #[test]
    fn substitution() {
        let x = MPoly::symbol("x");
        let p = x.pow(2).add(&x);
        let mut subs = HashMap::new();
        subs.insert("x".to_string(), z().add(&MPoly::one(vec![])));
        let q = p.substitute(&subs);
        // (z+1)^2 + z + 1 = z^2 + 3z + 2
        assert_eq!(q.render(), "z^2 + 3*z + 2");
    }

    #[test]
    fn derivative_and_division() {
        let x = MPoly::symbol("x");
        let p = x.pow(3).scale(&rat(2, 1));
        assert_eq!(p.derivative(0).render(), "6*x^2");
        let q = p.div_monomial(&Monomial(vec![2])).unwrap();
        assert_eq!(q.render(), "2*x");
        assert!(x.add(&MPoly::one(vec!["x".into()])).div_monomial(&Monomial(vec![1])).is_none());
    }

    #[test]
    fn mixed_dictionaries() {
        let x = MPoly::symbol("x");
        let y = MPoly::symbol("y");
        let p = x.add(&y).mul(&x.sub(&y));
        let q = x.pow(2).sub(&y.pow(2));
        assert!(poly_eq(&p, &q));
    }
}
