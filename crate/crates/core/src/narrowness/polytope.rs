//! Vertices of the good-function polytope `{f >= 0, f(S) <= 1 for every
//! maximal perfect S}`, found exactly.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::detectors::max_perfect_subsets;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph whose polytope is enumerated.
pub const MAX_POLYTOPE_N: usize = 10;

pub type Point = Vec<BigRational>;

fn maximal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut out: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !s.is_empty() && !out.iter().any(|t| s.is_subset(*t)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Solves `Σ_{u ∈ row ∩ cols} x_u = 1` for the given rows, or `None` when
/// singular.
fn solve(rows: &[VertexSet], cols: &[usize]) -> Option<Vec<BigRational>> {
    let k = cols.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            let mut row: Vec<BigRational> =
                cols.iter().map(|&c| if r.contains(c) { BigRational::one() } else { BigRational::zero() }).collect();
            row.push(BigRational::one());
            row
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=k {
                    let delta = &m[col][c] * &factor;
                    m[r][c] -= delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[k].clone()).collect())
}

/// Rows chosen so far, kept in echelon form to reject dependent choices.
struct Echelon {
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl Echelon {
    fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone() / &row[*p];
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        v
    }

    fn push(&mut self, v: Vec<BigRational>) -> bool {
        let v = self.reduce(v);
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }
}

fn indicator(row: VertexSet, cols: &[usize]) -> Vec<BigRational> {
    cols.iter().map(|&c| if row.contains(c) { BigRational::one() } else { BigRational::zero() }).collect()
}

struct RowSearch<'a> {
    rows: Vec<VertexSet>,
    cols: Vec<usize>,
    n: usize,
    constraints: &'a [VertexSet],
    out: Vec<Point>,
}

impl RowSearch<'_> {
    fn run(&mut self, start: usize, chosen: &mut Vec<VertexSet>, ech: &Echelon) {
        if chosen.len() == self.cols.len() {
            if let Some(x) = solve(chosen, &self.cols) {
                if x.iter().all(|v| v.is_positive()) {
                    let mut f = vec![BigRational::zero(); self.n];
                    for (&c, v) in self.cols.iter().zip(x) {
                        f[c] = v;
                    }
                    if feasible(&f, self.constraints) {
                        self.out.push(f);
                    }
                }
            }
            return;
        }
        let need = self.cols.len() - chosen.len();
        for i in start..self.rows.len() {
            if self.rows.len() - i < need {
                break;
            }
            let mut next = Echelon { rows: ech.rows.clone() };
            if !next.push(indicator(self.rows[i], &self.cols)) {
                continue;
            }
            chosen.push(self.rows[i]);
            self.run(i + 1, chosen, &next);
            chosen.pop();
        }
    }
}

fn feasible(f: &[BigRational], constraints: &[VertexSet]) -> bool {
    constraints.iter().all(|s| s.iter().map(|v| &f[v]).sum::<BigRational>() <= BigRational::one())
}

/// All vertices of the polytope, sorted and without repeats. The zero
/// function is included.
pub fn polytope_vertices_uncached(g: &Graph) -> Result<Vec<Point>> {
    let n = g.n();
    if n > MAX_POLYTOPE_N {
        return Err(Error::TooLarge {
            what: format!("polytope of a {n}-vertex graph"),
            limit: format!("n <= {MAX_POLYTOPE_N}"),
        });
    }
    let constraints = max_perfect_subsets(g, g.vertices());
    let supports: Vec<VertexSet> = g.vertices().subsets().filter(|s| !s.is_empty()).collect();
    let per_support: Vec<Vec<Point>> = supports
        .par_iter()
        .map(|&support| {
            // at a vertex with this support every tight row is maximal here
            let mut search = RowSearch {
                rows: maximal(constraints.iter().map(|&s| s & support).collect()),
                cols: support.to_vec(),
                n,
                constraints: &constraints,
                out: Vec::new(),
            };
            search.run(0, &mut Vec::new(), &Echelon { rows: Vec::new() });
            search.out
        })
        .collect();
    let mut found: BTreeSet<Point> = per_support.into_iter().flatten().collect();
    found.insert(vec![BigRational::zero(); n]);
    Ok(found.into_iter().collect())
}

fn cache() -> &'static Mutex<HashMap<Graph, Arc<Vec<Point>>>> {
    static CACHE: OnceLock<Mutex<HashMap<Graph, Arc<Vec<Point>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// [`polytope_vertices_uncached`], memoised per labelled graph.
pub fn polytope_vertices(g: &Graph) -> Result<Arc<Vec<Point>>> {
    if let Some(v) = cache().lock().expect("cache lock").get(g) {
        return Ok(v.clone());
    }
    let v = Arc::new(polytope_vertices_uncached(g)?);
    cache().lock().expect("cache lock").insert(g.clone(), v.clone());
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn c5_vertices() {
        let v = polytope_vertices_uncached(&cycle(5)).unwrap();
        assert!(v.contains(&vec![r(1, 4); 5]));
        assert!(v.contains(&vec![r(0, 1); 5]));
        for i in 0..5 {
            let mut e = vec![r(0, 1); 5];
            e[i] = r(1, 1);
            assert!(v.contains(&e));
        }
        let constraints = max_perfect_subsets(&cycle(5), VertexSet::full(5));
        assert!(v.iter().all(|f| feasible(f, &constraints)));
    }

    #[test]
    fn perfect_graph_vertices_are_units() {
        let v = polytope_vertices_uncached(&path(4)).unwrap();
        assert_eq!(v.len(), 5);
    }
}
