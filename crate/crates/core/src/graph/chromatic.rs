use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::Graph;
use crate::error::check_cap;
use crate::setmap::{Mask, SetMap};
use crate::{arith, BinomialFamily, Caps, Poly, Rational, Result};

type Memo = BTreeMap<Vec<Mask>, Poly>;

/// The chromatic polynomial by deletion–contraction,
/// `χ_G = χ_{G∖e} − χ_{G/e}`.
///
/// Isolated vertices are split off as factors of `x` and complete graphs
/// return `(x)_n` directly. Subproblems are memoized on their adjacency after
/// a degree-sorted relabeling; the key is the full relabeled adjacency, so
/// distinct graphs never share an entry.
pub fn chromatic_poly(g: &Graph) -> Poly {
    chromatic_memo(g.adj.clone(), &mut Memo::new())
}

/// `S ↦ χ_{G|_S}(x)` over every vertex subset, one memo shared across all.
pub fn chromatic_setmap(g: &Graph) -> SetMap<Poly> {
    let mut memo = Memo::new();
    SetMap::from_fn(g.ground(), |s| chromatic_memo(g.restrict(s).adj, &mut memo))
}

fn falling_factorial(n: usize) -> Poly {
    BinomialFamily::FallingFactorial(Rational::from_integer(1.into())).poly(n)
}

fn chromatic_memo(adj: Vec<Mask>, memo: &mut Memo) -> Poly {
    let isolated = adj.iter().filter(|&&m| m == 0).count();
    let core = if isolated == 0 { adj } else { drop_isolated(&adj) };
    let factor = Poly::monomial(isolated);
    let k = core.len();
    if k == 0 {
        return factor;
    }
    if core.iter().all(|m| m.count_ones() as usize == k - 1) {
        return &factor * &falling_factorial(k);
    }

    let key = canonical_key(&core);
    if let Some(p) = memo.get(&key) {
        return &factor * p;
    }

    // first edge in sorted order: vertex 0 has a neighbor once isolated
    // vertices are gone
    let u = 0;
    let v = core[u].trailing_zeros() as usize;

    let mut deleted = core.clone();
    deleted[u] &= !(1 << v);
    deleted[v] &= !(1 << u);

    let contracted = contract(&core, u, v);

    let p = &chromatic_memo(deleted, memo) - &chromatic_memo(contracted, memo);
    let result = &factor * &p;
    memo.insert(key, p);
    result
}

fn drop_isolated(adj: &[Mask]) -> Vec<Mask> {
    let keep: Vec<usize> = (0..adj.len()).filter(|&v| adj[v] != 0).collect();
    relabel(adj, &keep)
}

/// Adjacency of the subgraph on `order`, vertex `order[i]` becoming `i`.
fn relabel(adj: &[Mask], order: &[usize]) -> Vec<Mask> {
    let mut pos = [usize::MAX; 32];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            let mut out = 0;
            let mut rest = adj[v];
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                if pos[w] != usize::MAX {
                    out |= 1 << pos[w];
                }
                rest &= rest - 1;
            }
            out
        })
        .collect()
}

/// Merges `v` into `u`; parallel edges collapse.
fn contract(adj: &[Mask], u: usize, v: usize) -> Vec<Mask> {
    let mut merged = adj.to_vec();
    let nv = merged[v] & !(1 << u);
    merged[u] = (merged[u] | nv) & !(1 << u) & !(1 << v);
    let mut rest = nv;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        merged[w] |= 1 << u;
        rest &= rest - 1;
    }
    let keep: Vec<usize> = (0..adj.len()).filter(|&w| w != v).collect();
    relabel(&merged, &keep)
}

fn canonical_key(adj: &[Mask]) -> Vec<Mask> {
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&v| (adj[v].count_ones(), v));
    relabel(adj, &order)
}

/// `χ_G(x) = Σ_{F ⊆ E} (-1)^{|F|} x^{c(F)}`, `c(F)` the number of connected
/// components of the spanning subgraph `(V, F)`.
pub fn subgraph_expansion_chromatic(g: &Graph, caps: &Caps) -> Result<Poly> {
    let edges = g.edges();
    let m = edges.len();
    check_cap("edge count", caps.edges, m)?;
    let n = g.vertex_count();
    // signed count per component number
    let mut counts = alloc::vec![0i64; n + 1];
    let mut parent = alloc::vec![0usize; n];
    for subset in 0u64..(1 << m) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut components = n;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if subset & (1 << i) == 0 {
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                components -= 1;
            }
        }
        counts[components] += if subset.count_ones() % 2 == 0 { 1 } else { -1 };
    }
    Ok(Poly::from_coeffs(counts.into_iter().map(arith::int).collect()))
}

fn find(parent: &mut [usize], mut a: usize) -> usize {
    while parent[a] != a {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    a
}
