//! Brute-force oracles shared by the integration tests. Each works from the
//! adjacency matrix alone and shares no code with the library routine it
//! checks.
#![allow(dead_code)]

use std::collections::BTreeMap;

use hatfree::{Graph, VertexSet};
use num_rational::BigRational;
use proptest::prelude::*;

pub fn r(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if k < 64 && mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let bits = n * n.saturating_sub(1) / 2;
    (0..1u64 << bits).map(move |m| graph_from_mask(n, m))
}

pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        (Just(n), any::<u64>().prop_map(move |m| if bits >= 64 { m } else { m & ((1u64 << bits) - 1) }))
            .prop_map(|(n, m)| graph_from_mask(n, m))
    })
}

fn members(s: u64) -> Vec<usize> {
    (0..64).filter(|&i| s >> i & 1 == 1).collect()
}

fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.has_edge(u, v)
}

pub fn clique_oracle(g: &Graph, s: u64) -> usize {
    let vs = members(s);
    let mut best = 0;
    for sub in 0u64..1 << vs.len() {
        let pick: Vec<usize> = (0..vs.len()).filter(|&i| sub >> i & 1 == 1).map(|i| vs[i]).collect();
        let ok = pick.iter().enumerate().all(|(i, &a)| pick[i + 1..].iter().all(|&b| adjacent(g, a, b)));
        if ok {
            best = best.max(pick.len());
        }
    }
    best
}

fn colourable(g: &Graph, vs: &[usize], k: usize, colour: &mut Vec<usize>) -> bool {
    let i = colour.len();
    if i == vs.len() {
        return true;
    }
    for c in 0..k {
        if (0..i).all(|j| colour[j] != c || !adjacent(g, vs[i], vs[j])) {
            colour.push(c);
            if colourable(g, vs, k, colour) {
                return true;
            }
            colour.pop();
        }
    }
    false
}

pub fn chromatic_oracle(g: &Graph, s: u64) -> usize {
    let vs = members(s);
    (0..=vs.len()).find(|&k| colourable(g, &vs, k, &mut Vec::new())).unwrap()
}

/// chi = omega on every induced subgraph inside `s`.
pub fn perfect_oracle_on(g: &Graph, s: u64) -> bool {
    let vs = members(s);
    (0u64..1 << vs.len()).all(|sub| {
        let t: u64 = (0..vs.len()).filter(|&i| sub >> i & 1 == 1).map(|i| 1u64 << vs[i]).sum();
        chromatic_oracle(g, t) == clique_oracle(g, t)
    })
}

pub fn perfect_oracle(g: &Graph) -> bool {
    perfect_oracle_on(g, (1u64 << g.n()) - 1)
}

/// Inclusion-maximal perfect vertex sets, as bitmasks.
pub fn maximal_perfect_sets(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let perfect: Vec<u64> = (0u64..1 << n).filter(|&s| perfect_oracle_on(g, s)).collect();
    perfect.iter().copied().filter(|&s| !perfect.iter().any(|&t| t != s && t & s == s)).collect()
}

fn perm_code(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | adjacent(g, perm[i], perm[j]) as u64;
        }
    }
    code
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of isomorphism classes on `n` vertices passing `keep`, by
/// deduplicating every labelled graph under all `n!` relabellings.
pub fn class_count_oracle(n: usize, keep: impl Fn(&Graph) -> bool) -> usize {
    let perms = permutations(n);
    let mut classes = BTreeMap::new();
    for g in labelled_graphs(n) {
        let code = perms.iter().map(|p| perm_code(&g, p)).min().unwrap();
        classes.entry(code).or_insert_with(|| keep(&g));
    }
    classes.values().filter(|&&k| k).count()
}

/// Whether `g[set]` is isomorphic to the house (a 4-cycle plus a vertex
/// adjacent to exactly two adjacent cycle vertices).
pub fn induces_house(g: &Graph, set: VertexSet) -> bool {
    let vs = set.to_vec();
    if vs.len() != 5 {
        return false;
    }
    // 4-cycle 0-1-3-2 with roof 4 on the edge 2-3
    let house = [(0, 1), (1, 3), (3, 2), (2, 0), (2, 4), (3, 4)];
    permutations(5).iter().any(|p| {
        let want = |a: usize, b: usize| house.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b));
        (0..5).all(|a| (a + 1..5).all(|b| adjacent(g, vs[p[a]], vs[p[b]]) == want(a, b)))
    })
}

/// Every (induced cycle of length >= 4, hat) pair, by subset enumeration.
pub fn hole_with_hat_oracle(g: &Graph) -> bool {
    let n = g.n();
    for s in 0u64..1 << n {
        let vs = members(s);
        if vs.len() < 4 {
            continue;
        }
        let deg2 = vs.iter().all(|&v| vs.iter().filter(|&&u| adjacent(g, u, v)).count() == 2);
        if !deg2 || !connected_within(g, &vs) {
            continue;
        }
        for h in (0..n).filter(|h| s >> h & 1 == 0) {
            let nb: Vec<usize> = vs.iter().copied().filter(|&u| adjacent(g, u, h)).collect();
            if nb.len() == 2 && adjacent(g, nb[0], nb[1]) {
                return true;
            }
        }
    }
    false
}

fn connected_within(g: &Graph, vs: &[usize]) -> bool {
    let mut seen = vec![vs[0]];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        for &v in vs {
            if adjacent(g, u, v) && !seen.contains(&v) {
                seen.push(v);
            }
        }
        i += 1;
    }
    seen.len() == vs.len()
}

/// Largest `sum f(v)^alpha` over `f` with values in `{0, 1/k, ..., 1}`
/// and `f(S) <= 1` on every maximal perfect set, for integer `alpha`.
pub fn grid_max(g: &Graph, k: i64, alpha: u32) -> BigRational {
    let sets = maximal_perfect_sets(g);
    let n = g.n();
    let mut best = 0i64;
    let mut vals = vec![0i64; n];
    fn go(i: usize, n: usize, k: i64, alpha: u32, sets: &[u64], vals: &mut Vec<i64>, best: &mut i64) {
        if i == n {
            *best = (*best).max(vals.iter().map(|v| v.pow(alpha)).sum());
            return;
        }
        for a in 0..=k {
            vals[i] = a;
            let ok = sets.iter().all(|&s| (0..=i).filter(|&j| s >> j & 1 == 1).map(|j| vals[j]).sum::<i64>() <= k);
            if !ok {
                break;
            }
            go(i + 1, n, k, alpha, sets, vals, best);
        }
        vals[i] = 0;
    }
    go(0, n, k, alpha, &sets, &mut vals, &mut best);
    BigRational::new(best.into(), k.pow(alpha).into())
}
