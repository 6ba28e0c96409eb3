use std::fmt::Write as _;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::algebra::rational::fmt_rational;
use crate::error::{Error, Result};

use super::taut::{Atom, Decoration, StableGraph, TautExpr};
use super::theta::theta_pullback;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dialect {
    /// admcycles
    V1,
}

impl FromStr for Dialect {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "v1" => Ok(Dialect::V1),
            _ => Err(Error::UnsupportedDialect(s.to_string())),
        }
    }
}

pub fn input_hash(input: &serde_json::Value) -> String {
    let bytes = serde_json::to_vec(input).expect("json serializes");
    let digest = Sha256::digest(&bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn header(out: &mut String, input: &serde_json::Value) {
    let _ = writeln!(
        out,
        "# generated-by: torelli {} input-sha256:{}",
        crate::VERSION,
        input_hash(input)
    );
    out.push_str("from admcycles import *\n");
    out.push_str("from sage.all import QQ\n\n");
}

fn vertex_class(graph: &StableGraph, legs: &[Vec<u32>], v: usize, deco: &Decoration) -> String {
    let gv = graph.genera[v];
    let nv = legs[v].len();
    let local = |h: u32| legs[v].iter().position(|&x| x == h).expect("leg at vertex") + 1;
    let mut factors = Vec::new();
    for (a, k) in deco {
        if a.vertex(graph) != v {
            continue;
        }
        let base = match *a {
            Atom::Psi(m) => format!("psiclass({}, {gv}, {nv})", local(m)),
            Atom::PsiHalf(e, s) => format!("psiclass({}, {gv}, {nv})", local(graph.half_edge(e, s))),
            Atom::Lambda(_, i) => format!("lambdaclass({i}, {gv}, {nv})"),
            Atom::Kappa(_, i) => format!("kappaclass({i}, {gv}, {nv})"),
        };
        factors.push(if *k == 1 { base } else { format!("{base}**{k}") });
    }
    if factors.is_empty() {
        format!("fundclass({gv}, {nv})")
    } else {
        factors.join("*")
    }
}

fn graph_literal(graph: &StableGraph, legs: &[Vec<u32>]) -> String {
    let fmt_list = |xs: &[u32]| {
        let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
        format!("[{}]", items.join(", "))
    };
    let genera: Vec<u32> = graph.genera.clone();
    let legs_s: Vec<String> = legs.iter().map(|l| fmt_list(l)).collect();
    let edges: Vec<String> = (0..graph.edges.len())
        .map(|e| format!("({}, {})", graph.half_edge(e, 0), graph.half_edge(e, 1)))
        .collect();
    format!(
        "StableGraph({}, [{}], [{}])",
        fmt_list(&genera),
        legs_s.join(", "),
        edges.join(", ")
    )
}

/// Lines building `name` as a sum of boundary pushforwards.
fn body(out: &mut String, name: &str, x: &TautExpr) {
    let _ = writeln!(out, "{name} = TautologicalRing({}, {}).zero()", x.g, x.n);
    for (graph, deco, c) in x.terms() {
        let legs = graph.legs();
        let classes: Vec<String> = (0..graph.genera.len())
            .map(|v| vertex_class(graph, &legs, v, deco))
            .collect();
        let _ = writeln!(
            out,
            "{name} += QQ('{}') * {}.boundary_pushforward([{}])",
            fmt_rational(c),
            graph_literal(graph, &legs),
            classes.join(", ")
        );
    }
}

/// Script constructing `x` as `expr`.
pub fn emit_script(x: &TautExpr, dialect: &str) -> Result<String> {
    let Dialect::V1 = dialect.parse::<Dialect>()?;
    let mut out = String::new();
    header(&mut out, &x.to_json());
    let _ = writeln!(out, "g, n = {}, {}", x.g, x.n);
    body(&mut out, "expr", x);
    Ok(out)
}

fn single_degree(x: &TautExpr, what: &str) -> Result<Option<u32>> {
    match x.degrees().as_slice() {
        [] => Ok(None),
        [d] => Ok(Some(*d)),
        ds => Err(Error::Invalid(format!("{what} is not homogeneous: degrees {ds:?}"))),
    }
}

/// Script building `lhs` and `rhs` and checking that their difference pairs
/// to zero with every `λ`-monomial of complementary degree under the
/// `λ_g`-pairing.
pub fn emit_comparison(lhs: &TautExpr, rhs: &TautExpr, dialect: &str) -> Result<String> {
    let Dialect::V1 = dialect.parse::<Dialect>()?;
    if (lhs.g, lhs.n) != (rhs.g, rhs.n) {
        return Err(Error::Invalid("ambient spaces differ".into()));
    }
    let (g, n) = (lhs.g, lhs.n);
    let d = match (single_degree(lhs, "lhs")?, single_degree(rhs, "rhs")?) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::WrongDegree { expected: a, got: b });
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => 0,
    };
    let top = (2 * g + n) as i64 - 3;
    let comp = top - d as i64;
    if comp < 0 {
        return Err(Error::DegreeOutOfRange {
            degree: d,
            socle: top.max(0) as u32,
        });
    }
    let input = serde_json::json!({"lhs": lhs.to_json(), "rhs": rhs.to_json()});
    let mut out = String::new();
    header(&mut out, &input);
    let _ = writeln!(out, "g, n = {g}, {n}");
    body(&mut out, "lhs", lhs);
    out.push('\n');
    body(&mut out, "rhs", rhs);
    out.push('\n');
    out.push_str("diff = lhs - rhs\n");
    out.push_str("lg = lambdaclass(g, g, n)\n\n");
    out.push_str("def lambda_monomials(d, top):\n");
    out.push_str("    if d == 0:\n");
    out.push_str("        return [fundclass(g, n)]\n");
    out.push_str("    res = []\n");
    out.push_str("    for i in range(min(d, top), 0, -1):\n");
    out.push_str("        res += [lambdaclass(i, g, n) * m for m in lambda_monomials(d - i, i)]\n");
    out.push_str("    return res\n\n");
    let _ = writeln!(out, "checks = [(diff * P * lg).evaluate() == 0 for P in lambda_monomials({comp}, g)]");
    out.push_str("print('ok' if all(checks) else 'FAILED')\n");
    Ok(out)
}

/// Script for `Δ_{g,1} = aj^*([PR_{g,1}] − taut([PR_{g,1}]))` on `M_{g,2}^ct`
/// with `aj(C, p1, p2) = O(p1 − p2)`. The tautological part is written out;
/// `aj^*[PR_{g,1}]` is an input of the emitted `delta` function.
pub fn delta_emit(g: u32, s: u32) -> Result<String> {
    if s != 1 {
        return Err(Error::Invalid(format!("delta_emit supports s = 1 only, got s = {s}")));
    }
    if g < 2 {
        return Err(Error::OutOfRange(format!("delta_emit needs g >= 2, got {g}")));
    }
    let n = 2;
    let coeff = crate::invariants::product_prefactor(g, 1)?;
    let theta = theta_pullback(&[1, -1], g);
    let taut = theta.times_lambda(g - 1).scale(&coeff);
    let input = serde_json::json!({"delta": {"g": g, "s": s}, "taut": taut.to_json()});
    let mut out = String::new();
    header(&mut out, &input);
    let _ = writeln!(out, "g, n = {g}, {n}");
    out.push_str("# aj^* theta for the row (1, -1)\n");
    body(&mut out, "aj_theta", &theta);
    out.push('\n');
    let _ = writeln!(out, "# QQ('{}') * lambda_(g-1) * aj^* theta", fmt_rational(&coeff));
    body(&mut out, "taut_part", &taut);
    out.push('\n');
    out.push_str("def delta(pr_pullback):\n");
    out.push_str("    return pr_pullback - taut_part\n\n");
    out.push_str("def in_gorenstein_kernel(cls):\n");
    out.push_str("    R = TautologicalRing(g, n, moduli='ct')\n");
    out.push_str("    lg = lambdaclass(g, g, n)\n");
    out.push_str("    return all((cls * b * lg).evaluate() == 0 for b in R.generators(g - 1))\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn empty_script_is_zero() {
        let s = emit_script(&TautExpr::zero(2, 0), "v1").unwrap();
        assert!(s.starts_with("# generated-by: torelli "));
        assert!(s.ends_with("expr = TautologicalRing(2, 0).zero()\n"));
        assert!(matches!(emit_script(&TautExpr::zero(2, 0), "v9"), Err(Error::UnsupportedDialect(_))));
    }

    #[test]
    fn vertex_classes_use_local_indices() {
        let gr = StableGraph::divisor(3, 1, &[2], 2);
        let mut e = TautExpr::zero(3, 2);
        e.add_term(gr.clone(), vec![(Atom::PsiHalf(0, 1), 2), (Atom::Lambda(0, 1), 1)], int(3));
        let s = emit_script(&e, "v1").unwrap();
        assert!(s.contains(
            "expr += QQ('3') * StableGraph([1, 2], [[2, 3], [1, 4]], [(3, 4)])\
             .boundary_pushforward([lambdaclass(1, 1, 2), psiclass(2, 2, 2)**2])"
        ));
    }

    #[test]
    fn deterministic_and_hashed() {
        let t = theta_pullback(&[2, -1, -1], 3);
        let a = emit_script(&t, "v1").unwrap();
        assert_eq!(a, emit_script(&t.clone(), "v1").unwrap());
        let b = emit_script(&theta_pullback(&[1, -1, 0], 3), "v1").unwrap();
        assert_ne!(a.lines().next(), b.lines().next());
        assert!(!a.contains('\r'));
    }

    #[test]
    fn delta_scope() {
        assert!(delta_emit(5, 2).is_err());
        assert!(delta_emit(1, 1).is_err());
        let s = delta_emit(2, 1).unwrap();
        assert!(s.contains("# QQ('5') * lambda_(g-1) * aj^* theta"));
        assert_eq!(s, delta_emit(2, 1).unwrap());
    }

    #[test]
    fn comparison_degree_guard() {
        let a = theta_pullback(&[1, -1], 2);
        let b = a.times_lambda(1);
        assert!(matches!(emit_comparison(&a, &b, "v1"), Err(Error::WrongDegree { .. })));
        let s = emit_comparison(&a, &a, "v1").unwrap();
        assert!(s.contains("lambda_monomials(2, g)"));
    }
}
