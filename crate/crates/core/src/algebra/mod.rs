//! Exact arithmetic: big rationals, multivariate polynomials over named
//! variables, truncated series, symmetric functions and rational linear algebra.

pub mod linalg;
pub mod mpoly;
pub mod parse;
pub mod rational;
pub mod series;

pub use linalg::{solve_linear, QMatrix, RowReducer, Solution};
pub use mpoly::{poly_eq, MPoly, Monomial};
pub use parse::{parse_poly, parse_poly_with};
pub use rational::{bernoulli, binomial, factorial, fmt_rational, int, parse_rational, rat, Rational};
pub use series::{elementary, elementary_symmetric_rewrite, expand_elementary, series_inverse};

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = MPoly> {
        let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..6, 1i64..4), 0..5).prop_map(
            move |ts| {
                MPoly::from_terms(
                    vars.clone(),
                    ts.into_iter()
                        .map(|((a, b, c), n, d)| (Monomial(vec![a, b, c]), rat(n, d))),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn distributive(p in small_poly(), q in small_poly(), r in small_poly()) {
            let lhs = p.add(&q).mul(&r);
            let rhs = p.mul(&r).add(&q.mul(&r));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_multiplies_back(p in small_poly(), d in 0u32..5) {
            let vars = p.vars().to_vec();
            let unit = MPoly::one(vars.clone()).add(&p.filter(|m| m.degree() > 0));
            let q = series_inverse(&unit, d).unwrap();
            prop_assert_eq!(unit.mul(&q).truncate(d), MPoly::one(vars));
        }

        #[test]
        fn symmetric_roundtrip(c in proptest::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..4)) {
            // symmetrize a random polynomial in a, b over a spectator t
            let mut p = MPoly::zero(vec!["t".into(), "a".into(), "b".into()]);
            for (i, j, k) in c {
                p.add_term(Monomial(vec![1, i, j]), int(k));
                p.add_term(Monomial(vec![1, j, i]), int(k));
            }
            let names = vec!["E1".to_string(), "E2".to_string()];
            let q = elementary_symmetric_rewrite(&p, &["a", "b"], &names).unwrap();
            let back = expand_elementary(&q, &["a", "b"], &names);
            prop_assert!(poly_eq(&back, &p));
        }
    }
}
