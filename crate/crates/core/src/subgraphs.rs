//! Elementary subgraphs of the complete graph on \[n\] with the first
//! n-ell vertices distinguished: spanning subgraphs whose components are
//! isolated vertices, single edges, or cycles of length >= 3. Summing
//! 2^{c(E)} (s+t)^{d(E)} t^{n-d(E)} over them recovers the permanent of
//! the weighted adjacency matrix M_{n,ell}.

use num_bigint::BigInt;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};

pub const ENUMERATION_BOUND: usize = 9;

/// One elementary subgraph. Cycles are stored once, smallest vertex
/// first with fixed orientation; the factor 2^{c(E)} for the two
/// traversal directions is applied by the weight sum instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementarySubgraph {
    pub n: usize,
    pub ell: usize,
    /// d(E): isolated vertices among the distinguished set {1..n-ell}.
    pub isolated_distinguished: usize,
    /// isolated vertices outside the distinguished set.
    pub isolated_plain: usize,
    /// single-edge components as (smaller, larger) 1-based pairs.
    pub matching_edges: Vec<(usize, usize)>,
    /// cycle components, length >= 3, canonical orientation.
    pub cycles: Vec<Vec<usize>>,
}

impl ElementarySubgraph {
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// All isolated vertices, 1-based ascending.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        let mut covered = vec![false; self.n + 1];
        for &(a, b) in &self.matching_edges {
            covered[a] = true;
            covered[b] = true;
        }
        for cycle in &self.cycles {
            for &v in cycle {
                covered[v] = true;
            }
        }
        (1..=self.n).filter(|&v| !covered[v]).collect()
    }

    /// (s+t)^{d(E)} t^{n-d(E)}, homogeneous of degree n.
    pub fn weight(&self) -> BiPoly {
        let s_plus_t = &BiPoly::var_s() + &BiPoly::var_t();
        let d = self.isolated_distinguished as u32;
        &s_plus_t.pow(d) * &BiPoly::monomial(BigInt::from(1), 0, self.n as u32 - d)
    }

    /// 2^{c(E)} wt(E), this subgraph's contribution to the permanent.
    pub fn contribution(&self) -> BiPoly {
        self.weight().scale(&(BigInt::from(1) << self.cycle_count()))
    }
}

/// Every elementary subgraph of the marked complete graph, each exactly
/// once. Components are assigned recursively at the smallest uncovered
/// vertex: isolated, matched to a larger partner, or opening a cycle
/// (second neighbor smaller than last to fix orientation).
pub fn enumerate_elementary(n: usize, ell: usize) -> Result<Vec<ElementarySubgraph>> {
    if ell > n {
        return Err(Error::LevelOutOfRange { ell, n });
    }
    if n > ENUMERATION_BOUND {
        return Err(Error::EnumerationBound {
            n,
            bound: ENUMERATION_BOUND,
        });
    }
    let mut out = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut used = vec![false; n + 1];
    assign(n, ell, &mut used, &mut edges, &mut cycles, &mut out);
    Ok(out)
}

fn assign(
    n: usize,
    ell: usize,
    used: &mut Vec<bool>,
    edges: &mut Vec<(usize, usize)>,
    cycles: &mut Vec<Vec<usize>>,
    out: &mut Vec<ElementarySubgraph>,
) {
    let Some(v) = (1..=n).find(|&v| !used[v]) else {
        let isolated: Vec<usize> = {
            let mut covered = vec![false; n + 1];
            for &(a, b) in edges.iter() {
                covered[a] = true;
                covered[b] = true;
            }
            for cycle in cycles.iter() {
                for &x in cycle {
                    covered[x] = true;
                }
            }
            (1..=n).filter(|&x| !covered[x]).collect()
        };
        let distinguished = n - ell;
        let d = isolated.iter().filter(|&&x| x <= distinguished).count();
        out.push(ElementarySubgraph {
            n,
            ell,
            isolated_distinguished: d,
            isolated_plain: isolated.len() - d,
            matching_edges: edges.clone(),
            cycles: cycles.clone(),
        });
        return;
    };

    // v stays isolated
    used[v] = true;
    assign(n, ell, used, edges, cycles, out);

    // v matched to a larger unused partner
    for u in v + 1..=n {
        if used[u] {
            continue;
        }
        used[u] = true;
        edges.push((v, u));
        assign(n, ell, used, edges, cycles, out);
        edges.pop();
        used[u] = false;
    }

    // v opens a cycle; extend a path and close it at length >= 3
    let mut path = vec![v];
    extend_cycle(n, ell, v, &mut path, used, edges, cycles, out);
    used[v] = false;
}

#[allow(clippy::too_many_arguments)]
fn extend_cycle(
    n: usize,
    ell: usize,
    anchor: usize,
    path: &mut Vec<usize>,
    used: &mut Vec<bool>,
    edges: &mut Vec<(usize, usize)>,
    cycles: &mut Vec<Vec<usize>>,
    out: &mut Vec<ElementarySubgraph>,
) {
    for next in anchor + 1..=n {
        if used[next] {
            continue;
        }
        used[next] = true;
        path.push(next);
        if path.len() >= 3 && path[1] < *path.last().expect("path nonempty") {
            cycles.push(path.clone());
            assign(n, ell, used, edges, cycles, out);
            cycles.pop();
        }
        extend_cycle(n, ell, anchor, path, used, edges, cycles, out);
        path.pop();
        used[next] = false;
    }
}

/// P_{n,ell} via the elementary-subgraph expansion
/// sum_E 2^{c(E)} wt(E).
pub fn perm_via_subgraphs(n: usize, ell: usize) -> Result<BiPoly> {
    let mut acc = BiPoly::zero();
    for subgraph in enumerate_elementary(n, ell)? {
        acc += &subgraph.contribution();
    }
    Ok(acc)
}
