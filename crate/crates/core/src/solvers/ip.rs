//! Emitter for the cubic 0/1 program whose minimum is the residual ALCC
//! after removing exactly `k` vertices.
//!
//! The program is written over survivor indicators `z_u` (`z_u = 1` iff
//! `u` stays): a literal removal-indicator formulation would zero every
//! monomial of an optimal solution and carry no information. Degrees and
//! the `N - k` normalizer are those of the input graph, i.e. they are not
//! re-evaluated on the residual graph.
//!
//! Text format, one line each:
//!
//! ```text
//! # vars <N>
//! # budget <k>
//! <p>/<q> <u> <i> <j>          (monomial (p/q) * z_u * z_i * z_j, i < j)
//! sum z = <N-k> at most
//! ```
//!
//! A monomial line appears once per ordered center `u` and unordered
//! neighbor pair `{i, j}` forming a triangle, with coefficient
//! `2 / (d_u (d_u - 1) (N - k))` in lowest terms.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::graph::{Graph, VertexId};
use crate::solvers::validate_k;
use crate::Result;

pub fn emit_cubic_ip(g: &Graph, k: usize) -> Result<String> {
    validate_k(g, k)?;
    let n = g.alive_count();
    let mut out = String::new();
    let _ = writeln!(out, "# vars {}", n);
    let _ = writeln!(out, "# budget {}", k);
    for u in g.alive_iter() {
        let d = g.degree(u) as u64;
        if d < 2 {
            continue;
        }
        let den = d * (d - 1) * (n - k) as u64;
        let (p, q) = reduce(2, den);
        let nbrs: Vec<VertexId> = g.alive_neighbors(u).collect();
        for (a, &i) in nbrs.iter().enumerate() {
            for &j in &nbrs[a + 1..] {
                if g.has_edge(i, j) {
                    let _ = writeln!(out, "{}/{} {} {} {}", p, q, u, i, j);
                }
            }
        }
    }
    let _ = writeln!(out, "sum z = {} at most", n - k);
    Ok(out)
}

fn reduce(p: u64, q: u64) -> (u64, u64) {
    let g = gcd(p, q);
    (p / g, q / g)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_program() {
        let k3 = Graph::from_pairs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let text = emit_cubic_ip(&k3, 1).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# vars 3");
        assert_eq!(lines[1], "# budget 1");
        assert_eq!(
            &lines[2..5],
            &["1/2 0 1 2", "1/2 1 0 2", "1/2 2 0 1"]
        );
        assert_eq!(lines[5], "sum z = 2 at most");
    }

    #[test]
    fn triangle_free_has_constant_objective() {
        let c4 = Graph::from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let text = emit_cubic_ip(&c4, 2).unwrap();
        assert_eq!(text.lines().count(), 3); // two headers + constraint
    }

    #[test]
    fn paw_coefficients_per_center() {
        let paw = Graph::from_pairs(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let text = emit_cubic_ip(&paw, 1).unwrap();
        let monomials: Vec<&str> = text
            .lines()
            .filter(|l| !l.starts_with('#') && !l.starts_with("sum"))
            .collect();
        // only the triangle contributes; center 0 has degree 3, centers
        // 1 and 2 have degree 2, and N - k = 3
        assert_eq!(monomials, ["1/9 0 1 2", "1/3 1 0 2", "1/3 2 0 1"]);
    }
}
