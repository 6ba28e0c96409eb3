use crate::algebra::rational::{int, rat};
use crate::error::{Error, Result};

use super::taut::{Atom, StableGraph, TautExpr};

/// `θ(v) = ½ Σ v_i² ψ_i − ¼ Σ_h Σ_S v_S² δ_{h,S}` on `M_{g,n}^ct`, summing
/// literally over both descriptions `(h,S)` and `(g−h,S^c)` of each divisor.
pub fn theta_pullback(v: &[i64], g: u32) -> TautExpr {
    let n = v.len() as u32;
    let mut out = TautExpr::zero(g, n);
    let triv = StableGraph::trivial(g, n);
    for (i, &x) in v.iter().enumerate() {
        out.add_term(triv.clone(), vec![(Atom::Psi(i as u32 + 1), 1)], rat(x * x, 2));
    }
    for mask in 0u64..(1u64 << n) {
        let s: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        let vs: i64 = s.iter().map(|&i| v[i as usize - 1]).sum();
        if vs == 0 {
            continue;
        }
        for h in 0..=g {
            let here = 2 * h as i64 - 2 + s.len() as i64 + 1;
            let there = 2 * (g - h) as i64 - 2 + (n as usize - s.len()) as i64 + 1;
            if here <= 0 || there <= 0 {
                continue;
            }
            out.add_term(StableGraph::divisor(g, h, &s, n), vec![], rat(-vs * vs, 4));
        }
    }
    out
}

/// `θ(a_i + a_j) − θ(a_i) − θ(a_j)` for rows of an integer matrix with zero row sums.
pub fn eta_pullback(a: &[Vec<i64>], i: usize, j: usize, g: u32) -> Result<TautExpr> {
    for (r, row) in a.iter().enumerate() {
        if row.iter().sum::<i64>() != 0 {
            return Err(Error::BadMatrix(r + 1));
        }
    }
    if i == j {
        return Err(Error::Invalid("eta pullback needs i != j".into()));
    }
    if i == 0 || j == 0 || i > a.len() || j > a.len() {
        return Err(Error::OutOfRange(format!("row index ({i},{j})")));
    }
    let (ri, rj) = (&a[i - 1], &a[j - 1]);
    let sum: Vec<i64> = ri.iter().zip(rj).map(|(x, y)| x + y).collect();
    let out = theta_pullback(&sum, g)
        .sub(&theta_pullback(ri, g))
        .sub(&theta_pullback(rj, g));
    Ok(out)
}

pub fn theta_scaled_check(v: &[i64], g: u32) -> bool {
    let doubled: Vec<i64> = v.iter().map(|x| 2 * x).collect();
    theta_pullback(&doubled, g) == theta_pullback(v, g).scale(&int(4))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_theta() {
        let t = theta_pullback(&[1, -1], 3);
        let triv = StableGraph::trivial(3, 2);
        assert_eq!(t.coeff(&triv, &vec![(Atom::Psi(1), 1)]), rat(1, 2));
        // each geometric divisor delta_{h,{1}} is met twice at weight -1/4
        let d = StableGraph::divisor(3, 1, &[1], 2);
        assert_eq!(t.coeff(&d, &vec![]), rat(-1, 2));
        // h = 0 with one marking is unstable
        let d0 = StableGraph::divisor(3, 0, &[1], 2);
        assert_eq!(t.coeff(&d0, &vec![]), int(0));
        // (1,{1}) ~ (2,{2}) and (2,{1}) ~ (1,{2}), plus two psi terms
        assert_eq!(t.len(), 4);
    }

    #[test]
    fn scaling_and_zero() {
        assert!(theta_pullback(&[0, 0], 2).is_empty());
        assert!(theta_scaled_check(&[1, -1], 2));
        assert!(theta_scaled_check(&[2, -1, -1], 3));
    }

    #[test]
    fn eta_rules() {
        let b = vec![vec![1, -1, 0, 0], vec![0, 0, 1, -1]];
        let e = eta_pullback(&b, 1, 2, 2).unwrap();
        assert_eq!(e, eta_pullback(&b, 2, 1, 2).unwrap());
        assert!(matches!(eta_pullback(&[vec![1, 0]], 1, 1, 2), Err(Error::BadMatrix(1))));
        assert!(eta_pullback(&b, 1, 1, 2).is_err());
        let z = vec![vec![0, 0], vec![0, 0]];
        assert!(eta_pullback(&z, 1, 2, 2).unwrap().is_empty());
    }
}
