use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::rational::{bernoulli, big, int, parse_rational};
use crate::algebra::{MPoly, Rational};
use crate::error::{Error, Result};
use crate::lambda_ring::{abs_bernoulli_even, gamma, lambda_vars};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstValue {
    Scalar(Rational),
    /// coefficient and λ-expression
    Class(Rational, MPoly),
}

/// Dispatch by name: `bernoulli n`, `gamma g`, `taut_product g parts..`, `jg g`.
pub fn constants(name: &str, params: &[i64]) -> Result<ConstValue> {
    let need = |k: usize| -> Result<()> {
        if params.len() < k {
            Err(Error::Invalid(format!("{name} needs {k} parameter(s)")))
        } else {
            Ok(())
        }
    };
    let nonneg = |x: i64| -> Result<u32> {
        u32::try_from(x).map_err(|_| Error::OutOfRange(format!("{x} must be nonnegative")))
    };
    match name {
        "bernoulli" => {
            need(1)?;
            Ok(ConstValue::Scalar(bernoulli(nonneg(params[0])? as usize)))
        }
        "gamma" => {
            need(1)?;
            let g = nonneg(params[0])?;
            if g == 0 {
                return Err(Error::OutOfRange("gamma needs g >= 1".into()));
            }
            Ok(ConstValue::Scalar(gamma(g)))
        }
        "taut_product" | "taut-product" => {
            need(2)?;
            let g = nonneg(params[0])?;
            let parts: Vec<u32> = params[1..].iter().map(|&x| nonneg(x)).collect::<Result<_>>()?;
            let (c, p) = taut_product(g, &parts)?;
            Ok(ConstValue::Class(c, p))
        }
        "jg" | "jg_table" => {
            need(1)?;
            let g = nonneg(params[0])?;
            Ok(ConstValue::Class(Rational::one(), jg_table(g)?))
        }
        _ => Err(Error::UnknownConstant(name.to_string())),
    }
}

fn lam(g: u32, i: i64) -> MPoly {
    let vars = lambda_vars(g);
    if i == 0 {
        MPoly::one(vars)
    } else if i < 0 || i > g as i64 {
        MPoly::zero(vars)
    } else {
        MPoly::var(vars.clone(), &vars[i as usize - 1])
    }
}

fn b(g: u32, shift: u32) -> Result<Rational> {
    if g <= shift {
        return Err(Error::OutOfRange(format!("g = {g} too small")));
    }
    Ok(abs_bernoulli_even(g - shift))
}

/// Tautological projection of the product loci `(1,g−1)`, `(2,g−2)`,
/// `(3,g−3)` and `(1,1,g−2)`, as (scalar, λ-polynomial).
pub fn taut_product(g: u32, parts: &[u32]) -> Result<(Rational, MPoly)> {
    let mut p = parts.to_vec();
    p.sort_unstable();
    if p.iter().sum::<u32>() != g || p.contains(&0) {
        return Err(Error::Invalid(format!("{parts:?} is not a partition of {g}")));
    }
    let gi = g as i64;
    let gq = |x: i64| int(x);
    match p.as_slice() {
        [1, _] => Ok((gq(gi) / (int(6) * b(g, 0)?), lam(g, gi - 1))),
        [2, _] => Ok((
            gq(gi * (gi - 1)) / (int(360) * b(g, 0)? * b(g, 1)?),
            lam(g, gi - 1).mul(&lam(g, gi - 3)),
        )),
        [3, _] => {
            let tail = lam(g, gi - 4).pow(2).sub(&lam(g, gi - 3).mul(&lam(g, gi - 5)));
            Ok((
                gq(gi * (gi - 1) * (gi - 2)) / (int(45360) * b(g, 0)? * b(g, 1)? * b(g, 2)?),
                lam(g, gi - 1).mul(&tail),
            ))
        }
        [1, 1, _] => Ok((
            gq(gi * (gi - 1)) / (int(36) * b(g, 0)? * b(g, 1)?),
            lam(g, gi - 1).mul(&lam(g, gi - 2)),
        )),
        _ => Err(Error::UnknownConstant(format!("taut_product{parts:?}"))),
    }
}

const JG: &[(u32, &[(&[u32], &str)])] = &[
    (2, &[(&[], "1")]),
    (3, &[(&[], "2")]),
    (4, &[(&[1], "16")]),
    (5, &[(&[1, 2], "144"), (&[3], "-96")]),
    (6, &[(&[1, 2, 3], "768"), (&[2, 4], "-2304"), (&[1, 5], "948096/691")]),
    (
        7,
        &[
            (&[1, 2, 3, 4], "1536"),
            (&[2, 3, 5], "-13824"),
            (&[1, 4, 5], "4418304/691"),
            (&[1, 3, 6], "15044352/691"),
            (&[4, 6], "-17685504/691"),
        ],
    ),
    (
        8,
        &[
            (&[2, 6, 7], "500106387456/2499347"),
            (&[3, 5, 7], "-311646117888/2499347"),
            (&[1, 2, 5, 7], "-203316609024/2499347"),
            (&[1, 3, 4, 7], "139564449792/2499347"),
            (&[4, 5, 6], "-14966784/691"),
            (&[1, 3, 5, 6], "25731072/691"),
            (&[2, 3, 4, 6], "-12533760/691"),
            (&[1, 2, 3, 4, 5], "552960/691"),
        ],
    ),
];

/// Stored `taut([J_g])` for `2 <= g <= 8`.
pub fn jg_table(g: u32) -> Result<MPoly> {
    let rows = JG
        .iter()
        .find(|(h, _)| *h == g)
        .ok_or_else(|| Error::OutOfRange(format!("taut([J_g]) stored only for 2 <= g <= 8, got {g}")))?
        .1;
    let mut out = MPoly::zero(lambda_vars(g));
    for (mono, c) in rows {
        let mut t = MPoly::constant(lambda_vars(g), parse_rational(c).expect("stored rational"));
        for &i in mono.iter() {
            t = t.mul(&lam(g, i as i64));
        }
        out = out.add(&t);
    }
    Ok(out)
}

fn primes_dividing(mut d: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d % p == 0 {
            out.push(p);
            while d % p == 0 {
                d /= p;
            }
        }
        p += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

fn pow_big(x: u64, k: u32) -> BigInt {
    num_traits::pow(BigInt::from(x), k as usize)
}

/// `e^{2g−1} ∏_{p|e} (1 − p^{2−2g})`.
fn twisted(g: u32, e: u64) -> Rational {
    let mut out = big(pow_big(e, 2 * g - 1));
    for p in primes_dividing(e) {
        out *= Rational::one() - Rational::new(BigInt::one(), pow_big(p, 2 * g - 2));
    }
    out
}

/// Coefficient of `λ_{g−1}` in the projection of the degree-`d` NL locus.
pub fn nl_projection_coeff(g: u32, d: u64) -> Result<Rational> {
    if g < 2 || d == 0 {
        return Err(Error::OutOfRange("need g >= 2 and d >= 1".into()));
    }
    Ok(twisted(g, d) * int(g as i64) / (int(6) * abs_bernoulli_even(g)))
}

pub fn sigma(r: u32, n: u64) -> BigInt {
    (1..=n).filter(|k| n % k == 0).map(|k| pow_big(k, r)).sum()
}

/// `Σ_{e|d} σ_1(d/e) e^{2g−1} ∏_{p|e}(1 − p^{2−2g}) = σ_{2g−1}(d)` for all `d <= d_max`.
pub fn eisenstein_identity_check(g: u32, d_max: u64) -> bool {
    (1..=d_max).all(|d| {
        let lhs: Rational = (1..=d)
            .filter(|e| d % e == 0)
            .map(|e| big(sigma(1, d / e)) * twisted(g, e))
            .sum();
        lhs == big(sigma(2 * g - 1, d))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::lambda_ring::parse_lambda;
    use num_traits::Zero;

    #[test]
    fn bernoulli_signs() {
        assert_eq!(constants("bernoulli", &[2]).unwrap(), ConstValue::Scalar(rat(1, 6)));
        assert_eq!(constants("bernoulli", &[4]).unwrap(), ConstValue::Scalar(rat(-1, 30)));
        assert_eq!(constants("bernoulli", &[12]).unwrap(), ConstValue::Scalar(rat(-691, 2730)));
        assert!(matches!(constants("nope", &[]), Err(Error::UnknownConstant(_))));
    }

    #[test]
    fn gamma_values() {
        assert_eq!(constants("gamma", &[1]).unwrap(), ConstValue::Scalar(rat(1, 24)));
        assert_eq!(constants("gamma", &[2]).unwrap(), ConstValue::Scalar(rat(1, 5760)));
    }

    #[test]
    fn product_projection() {
        let (c, p) = taut_product(6, &[1, 5]).unwrap();
        assert_eq!(c, rat(2730, 691));
        assert_eq!(p, parse_lambda(6, "l5").unwrap());
        let (_, p3) = taut_product(6, &[3, 3]).unwrap();
        assert_eq!(p3, parse_lambda(6, "l5*l2^2 - l5*l3*l1").unwrap());
    }

    #[test]
    fn jg_rows() {
        let j6 = jg_table(6).unwrap();
        assert_eq!(j6.coeff_of(&[("l1", 1), ("l5", 1)]), rat(948096, 691));
        assert_eq!(j6.coeff_of(&[("l2", 1), ("l4", 1)]), int(-2304));
        assert_eq!(j6.coeff_of(&[("l1", 1), ("l2", 1), ("l3", 1)]), int(768));
        assert_eq!(j6.len(), 3);
        assert!(matches!(jg_table(9), Err(Error::OutOfRange(_))));
        let bound = BigInt::from(691u64 * 2499347);
        for g in 2..=8 {
            for (_, c) in jg_table(g).unwrap().terms() {
                assert!((&bound % c.denom()).is_zero());
            }
        }
    }

    #[test]
    fn nl_values() {
        assert_eq!(nl_projection_coeff(2, 1).unwrap(), int(10));
        // 2^3 * 10 * (1 - 1/4)
        assert_eq!(nl_projection_coeff(2, 2).unwrap(), int(60));
        assert_eq!(nl_projection_coeff(6, 1).unwrap(), taut_product(6, &[1, 5]).unwrap().0);
    }

    #[test]
    fn eisenstein_small() {
        assert!(eisenstein_identity_check(2, 2));
        assert!(eisenstein_identity_check(3, 30));
    }
}
