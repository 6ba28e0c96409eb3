use std::collections::HashMap;

use num_traits::{One, Zero};

use super::mpoly::{MPoly, Monomial};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Inverse of `p` modulo terms of total degree above `d`.
pub fn series_inverse(p: &MPoly, d: u32) -> Result<MPoly> {
    if !p.constant_term().is_one() {
        return Err(Error::NonUnit);
    }
    let vars = p.vars().to_vec();
    let q = MPoly::one(vars.clone()).sub(p).truncate(d);
    let mut out = MPoly::one(vars.clone());
    let mut power = MPoly::one(vars);
    for _ in 0..d {
        power = power.mul_trunc(&q, Some(d));
        if power.is_zero() {
            break;
        }
        out = out.add(&power);
    }
    Ok(out)
}

/// Elementary symmetric polynomial `e_k` of the given polynomials.
pub fn elementary(xs: &[MPoly], k: usize, vars: &[String]) -> MPoly {
    // dp[j] = e_j of the prefix
    let mut dp = vec![MPoly::zero(vars.to_vec()); k + 1];
    dp[0] = MPoly::one(vars.to_vec());
    for x in xs {
        for j in (1..=k).rev() {
            let t = dp[j - 1].mul(x);
            dp[j] = dp[j].add(&t);
        }
    }
    dp.swap_remove(k)
}

/// Rewrite a polynomial symmetric in `roots` in terms of their elementary
/// symmetric functions, named by `names` (`names[i]` is `e_{i+1}`).
pub fn elementary_symmetric_rewrite(p: &MPoly, roots: &[&str], names: &[String]) -> Result<MPoly> {
    let r = roots.len();
    if names.len() < r {
        return Err(Error::Dimension("fewer names than roots".into()));
    }
    let mut others: Vec<String> = p
        .vars()
        .iter()
        .filter(|v| !roots.contains(&v.as_str()))
        .cloned()
        .collect();
    let nother = others.len();
    let mut vars = others.clone();
    vars.extend(roots.iter().map(|s| s.to_string()));
    let work = p.with_vars(&vars);

    for i in 0..r.saturating_sub(1) {
        let swapped = work.rename(|v| {
            if v == roots[i] {
                roots[i + 1].to_string()
            } else if v == roots[i + 1] {
                roots[i].to_string()
            } else {
                v.to_string()
            }
        });
        if !swapped.with_vars(&vars).sub(&work).is_zero() {
            return Err(Error::NotSymmetric);
        }
    }

    let root_polys: Vec<MPoly> = roots.iter().map(|x| MPoly::var(vars.clone(), x)).collect();
    let es: Vec<MPoly> = (1..=r).map(|k| elementary(&root_polys, k, &vars)).collect();

    others.extend(names[..r].iter().cloned());
    let out_vars = others;
    let mut out = MPoly::zero(out_vars.clone());
    let mut rest = work;
    while !rest.is_zero() {
        // lex-leading root exponent vector
        let alpha: Vec<u32> = rest
            .terms()
            .map(|(m, _)| m.0[nother..].to_vec())
            .max()
            .unwrap();
        if alpha.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        let mut other = MPoly::zero(vars.clone());
        let mut image = MPoly::zero(out_vars.clone());
        for (m, c) in rest.terms() {
            if m.0[nother..] != alpha[..] {
                continue;
            }
            let mut e = m.0[..nother].to_vec();
            e.extend(std::iter::repeat(0).take(r));
            other.add_term(Monomial(e.clone()), c.clone());
            let mut f = m.0[..nother].to_vec();
            f.extend((0..r).map(|i| alpha[i] - alpha.get(i + 1).copied().unwrap_or(0)));
            image.add_term(Monomial(f), c.clone());
        }
        let mut prod = other;
        for i in 0..r {
            let k = alpha[i] - alpha.get(i + 1).copied().unwrap_or(0);
            if k > 0 {
                prod = prod.mul(&es[i].pow(k));
            }
        }
        rest = rest.sub(&prod);
        out = out.add(&image);
    }
    Ok(out)
}

/// Substitute `e_i <- e_i(roots)`, inverting `elementary_symmetric_rewrite`.
pub fn expand_elementary(p: &MPoly, roots: &[&str], names: &[String]) -> MPoly {
    let rv: Vec<String> = roots.iter().map(|s| s.to_string()).collect();
    let root_polys: Vec<MPoly> = roots.iter().map(|x| MPoly::var(rv.clone(), x)).collect();
    let mut subs = HashMap::new();
    for (i, n) in names.iter().enumerate().take(roots.len()) {
        subs.insert(n.clone(), elementary(&root_polys, i + 1, &rv));
    }
    p.substitute(&subs)
}

/// Newton: power sums `p_1..p_n` from elementary `e_1..e_n` (e_0 = 1).
pub fn power_sums_from_elementary(e: &[MPoly], n: usize, vars: &[String]) -> Vec<MPoly> {
    let get = |i: usize| -> MPoly {
        if i == 0 {
            MPoly::one(vars.to_vec())
        } else if i <= e.len() {
            e[i - 1].with_vars(vars)
        } else {
            MPoly::zero(vars.to_vec())
        }
    };
    let mut p: Vec<MPoly> = Vec::with_capacity(n);
    for k in 1..=n {
        // p_k = (-1)^{k-1} k e_k + sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i}
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let mut acc = get(k).scale(&Rational::from_integer((sign * k as i64).into()));
        for i in 1..k {
            let s = if i % 2 == 1 { 1 } else { -1 };
            let t = get(i).mul(&p[k - i - 1]).scale(&Rational::from_integer(s.into()));
            acc = acc.add(&t);
        }
        p.push(acc);
    }
    p
}

/// Newton: elementary `e_1..e_n` from power sums `p_1..p_n`.
pub fn elementary_from_power_sums(p: &[MPoly], n: usize, vars: &[String], cap: Option<u32>) -> Vec<MPoly> {
    let mut e: Vec<MPoly> = vec![MPoly::one(vars.to_vec())];
    for k in 1..=n {
        // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
        let mut acc = MPoly::zero(vars.to_vec());
        for i in 1..=k {
            if i > p.len() {
                break;
            }
            let s = if i % 2 == 1 { 1 } else { -1 };
            let t = e[k - i]
                .mul_trunc(&p[i - 1].with_vars(vars), cap)
                .scale(&Rational::from_integer(s.into()));
            acc = acc.add(&t);
        }
        let inv = Rational::new(1.into(), (k as i64).into());
        e.push(acc.scale(&inv));
    }
    e.remove(0);
    e
}

pub fn is_zero_series(p: &MPoly) -> bool {
    p.terms().all(|(_, c)| c.is_zero())
}
