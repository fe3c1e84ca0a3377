//! Weighted graphs, the three-condition coherence test and big components.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Side, VertexSet};

/// Exact nonnegative per-vertex weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMap {
    weights: Vec<BigRational>,
}

impl WeightMap {
    pub fn new(weights: Vec<BigRational>) -> Result<Self> {
        if let Some(v) = weights.iter().position(|w| w < &BigRational::zero()) {
            return Err(Error::precondition(format!("weight of vertex {v} is negative")));
        }
        Ok(WeightMap { weights })
    }

    /// Builds a map from `(numerator, denominator)` pairs.
    pub fn from_ratios(ratios: &[(i64, i64)]) -> Result<Self> {
        let mut ws = Vec::with_capacity(ratios.len());
        for &(p, q) in ratios {
            if q == 0 {
                return Err(Error::precondition("zero denominator"));
            }
            ws.push(BigRational::new(p.into(), q.into()));
        }
        Self::new(ws)
    }

    pub fn uniform(n: usize) -> Self {
        let w = BigRational::new(BigInt::one(), BigInt::from(n.max(1)));
        WeightMap { weights: vec![w; n] }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, v: usize) -> &BigRational {
        &self.weights[v]
    }

    pub fn as_slice(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn weight(&self, s: VertexSet) -> BigRational {
        s.iter().fold(BigRational::zero(), |acc, v| acc + &self.weights[v])
    }

    pub fn total(&self) -> BigRational {
        self.weights.iter().fold(BigRational::zero(), |acc, w| acc + w)
    }

    pub fn is_normalized(&self) -> bool {
        self.total().is_one()
    }
}

impl fmt::Display for WeightMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.weights.len())?;
        for (i, w) in self.weights.iter().enumerate() {
            writeln!(f, "{i} {}/{}", w.numer(), w.denom())?;
        }
        Ok(())
    }
}

/// Weights scaled to integers so that `w(S) >= eps` becomes `sum * q >= bound`.
struct Scaled {
    num: Vec<u128>,
    q: u128,
    bound: u128,
}

impl Scaled {
    fn new(w: &WeightMap, eps: &BigRational) -> Result<Self> {
        let lcm = w
            .weights
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let too_large = || Error::TooLarge {
            what: "scaled weight denominators".into(),
            limit: "exact coherence arithmetic needs products below 2^128".into(),
        };
        let num: Vec<u128> = w
            .weights
            .iter()
            .map(|x| (x.numer() * (&lcm / x.denom())).to_u128())
            .collect::<Option<_>>()
            .ok_or_else(too_large)?;
        let total: u128 = num.iter().try_fold(0u128, |a, &b| a.checked_add(b)).ok_or_else(too_large)?;
        let q = eps.denom().to_u128().ok_or_else(too_large)?;
        let bound = (eps.numer() * &lcm).to_u128().ok_or_else(too_large)?;
        total.checked_mul(q).ok_or_else(too_large)?;
        Ok(Scaled { num, q, bound })
    }

    #[inline]
    fn sum(&self, s: VertexSet) -> u128 {
        s.iter().map(|v| self.num[v]).sum()
    }

    #[inline]
    fn at_least_eps(&self, sum: u128) -> bool {
        sum * self.q >= self.bound
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoherenceCondition {
    VertexWeight,
    NeighbourhoodWeight,
    AnticompletePair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceViolation {
    pub condition: CoherenceCondition,
    /// `{v}`, `N(v)`, or the pair `(A, B)`.
    pub witness: Vec<VertexSet>,
}

impl CoherenceViolation {
    /// Re-evaluates the violated inequality exactly.
    pub fn replays(&self, g: &Graph, w: &WeightMap, eps: &BigRational) -> bool {
        match (self.condition, self.witness.as_slice()) {
            (CoherenceCondition::VertexWeight, [s]) => s.len() == 1 && &w.weight(*s) >= eps,
            (CoherenceCondition::NeighbourhoodWeight, [s, n]) => {
                s.len() == 1 && g.neighbours(s.first().unwrap()) == *n && &w.weight(*n) >= eps
            }
            (CoherenceCondition::AnticompletePair, [a, b]) => {
                a.is_disjoint(*b) && g.is_anticomplete(*a, *b) && &w.weight(*a) >= eps && &w.weight(*b) >= eps
            }
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    pub ok: bool,
    pub eps: BigRational,
    pub violations: Vec<CoherenceViolation>,
}

fn check_inputs(g: &Graph, w: &WeightMap, eps: &BigRational) -> Result<()> {
    if w.len() != g.n() {
        return Err(Error::precondition(format!("{} weights for {} vertices", w.len(), g.n())));
    }
    if !w.is_normalized() {
        return Err(Error::precondition(format!("weights sum to {}, not 1", w.total())));
    }
    if eps <= &BigRational::zero() {
        return Err(Error::precondition("eps must be positive"));
    }
    Ok(())
}

/// Exact coherence test. Conditions 1 and 2 report every failing vertex;
/// condition 3 reports one anticomplete pair: `B = V ∖ (A ∪ N(A))` for the
/// least-bitmask heavy `A`, then `A` enlarged to `V ∖ (B ∪ N(B))`.
pub fn check_coherence(g: &Graph, w: &WeightMap, eps: &BigRational) -> Result<CoherenceReport> {
    check_inputs(g, w, eps)?;
    let sc = Scaled::new(w, eps)?;
    let mut violations = Vec::new();
    for v in g.vertices() {
        if sc.at_least_eps(sc.num[v]) {
            violations.push(CoherenceViolation {
                condition: CoherenceCondition::VertexWeight,
                witness: vec![VertexSet::singleton(v)],
            });
        }
    }
    for v in g.vertices() {
        let nb = g.neighbours(v);
        if sc.at_least_eps(sc.sum(nb)) {
            violations.push(CoherenceViolation {
                condition: CoherenceCondition::NeighbourhoodWeight,
                witness: vec![VertexSet::singleton(v), nb],
            });
        }
    }
    if let Some((_, b)) = anticomplete_violation(g, &sc) {
        // grow A to everything anticomplete to B; both sides stay heavy
        let a = g.vertices() - b - g.neighbourhood(b);
        violations.push(CoherenceViolation { condition: CoherenceCondition::AnticompletePair, witness: vec![a, b] });
    }
    Ok(CoherenceReport { ok: violations.is_empty(), eps: eps.clone(), violations })
}

/// Least-bitmask `A` with `w(A) >= eps` and `w(V ∖ (A ∪ N(A))) >= eps`.
///
/// Vertices are decided from the top bit down, excluding first, so leaves are
/// visited in increasing bitmask order. A branch dies once the vertices still
/// available for `B` weigh less than `eps`.
fn anticomplete_violation(g: &Graph, sc: &Scaled) -> Option<(VertexSet, VertexSet)> {
    fn go(
        g: &Graph,
        sc: &Scaled,
        next: Option<usize>,
        a: VertexSet,
        a_sum: u128,
        free_b: VertexSet,
    ) -> Option<(VertexSet, VertexSet)> {
        if !sc.at_least_eps(sc.sum(free_b)) {
            return None;
        }
        if sc.at_least_eps(a_sum) {
            // the remaining bits stay clear: this is the least A below here
            return Some((a, free_b));
        }
        let v = next?;
        let below = v.checked_sub(1);
        if let Some(hit) = go(g, sc, below, a, a_sum, free_b) {
            return Some(hit);
        }
        let nb = g.neighbours(v).with(v);
        go(g, sc, below, a.with(v), a_sum + sc.num[v], free_b - nb)
    }
    let all = g.vertices();
    go(g, sc, g.n().checked_sub(1), VertexSet::EMPTY, 0, all)
}

/// Whether `(g, w)` is `eps`-coherent.
pub fn is_coherent(g: &Graph, w: &WeightMap, eps: &BigRational) -> Result<bool> {
    Ok(check_coherence(g, w, eps)?.ok)
}

/// The unique component `Y` of `g[X]` with `w(Y) > w(X) - eps`.
///
/// Condition 3 is checked on demand, restricted to the anticomplete pairs
/// that matter here: unions of components of `g[X]`. A failure is reported
/// as [`Error::NotCoherent`] with the pair.
pub fn big_component(g: &Graph, w: &WeightMap, eps: &BigRational, x: VertexSet) -> Result<VertexSet> {
    if w.len() != g.n() {
        return Err(Error::precondition(format!("{} weights for {} vertices", w.len(), g.n())));
    }
    if eps <= &BigRational::zero() {
        return Err(Error::precondition("eps must be positive"));
    }
    let wx = w.weight(x);
    if wx < eps * BigRational::from_integer(3.into()) {
        return Err(Error::precondition(format!("w(X) = {wx} is below 3*eps")));
    }
    let mut comps: Vec<(BigRational, VertexSet)> =
        g.components(x, Side::Direct).into_iter().map(|c| (w.weight(c), c)).collect();
    comps.sort_by(|p, q| q.0.cmp(&p.0).then(p.1.cmp(&q.1)));
    let (wy, y) = comps[0].clone();
    let rest = &wx - &wy;
    if &rest < eps {
        // every other component weighs at most `rest < eps < w(Y)`
        debug_assert!(wy > &wx - eps);
        return Ok(y);
    }
    let not_coherent = |a: VertexSet, b: VertexSet| Error::NotCoherent {
        eps: eps.to_string(),
        detail: format!("anticomplete sets {a} and {b} both weigh at least eps"),
    };
    if &wy >= eps {
        return Err(not_coherent(y, x - y));
    }
    // all components are light: gather them until the total reaches eps
    let mut acc = VertexSet::EMPTY;
    let mut acc_w = BigRational::zero();
    for (cw, c) in &comps {
        acc |= *c;
        acc_w += cw;
        if &acc_w >= eps {
            break;
        }
    }
    if &w.weight(x - acc) >= eps {
        return Err(not_coherent(acc, x - acc));
    }
    Err(Error::internal("no big component although condition 3 holds on component unions"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn single_vertex_fails_condition_one() {
        let g = Graph::empty(1).unwrap();
        let rep = check_coherence(&g, &WeightMap::uniform(1), &r(1, 6)).unwrap();
        assert!(!rep.ok);
        assert_eq!(rep.violations[0].condition, CoherenceCondition::VertexWeight);
    }

    #[test]
    fn complete_graph_fails_condition_two() {
        let g = complete(7);
        let rep = check_coherence(&g, &WeightMap::uniform(7), &r(1, 6)).unwrap();
        assert!(rep.violations.iter().any(|v| v.condition == CoherenceCondition::NeighbourhoodWeight));
        assert!(rep.violations.iter().all(|v| v.condition != CoherenceCondition::VertexWeight));
    }

    #[test]
    fn two_cliques_fail_condition_three() {
        let g = disjoint_union(&complete(5), &complete(5));
        let w = WeightMap::uniform(10);
        let eps = r(1, 6);
        let rep = check_coherence(&g, &w, &eps).unwrap();
        let v = rep
            .violations
            .iter()
            .find(|v| v.condition == CoherenceCondition::AnticompletePair)
            .unwrap();
        assert!(v.replays(&g, &w, &eps));
        assert!(rep.violations.iter().all(|v| v.replays(&g, &w, &eps)));
        assert_eq!(v.witness[0].len() + v.witness[1].len(), 10);
        assert!(big_component(&g, &w, &eps, g.vertices()).is_err());
    }

    #[test]
    fn unnormalized_weights_are_rejected() {
        let g = path(3);
        let w = WeightMap::from_ratios(&[(1, 3), (1, 3), (1, 2)]).unwrap();
        assert!(check_coherence(&g, &w, &r(1, 6)).is_err());
        assert!(WeightMap::from_ratios(&[(-1, 3)]).is_err());
    }

    #[test]
    fn big_component_examples() {
        let g = path(4);
        let w = WeightMap::uniform(4);
        assert_eq!(big_component(&g, &w, &r(1, 6), g.vertices()).unwrap(), g.vertices());
        // a heavy path of weight 9/10 plus two isolated vertices of 1/20
        let mut edges = path(9).edges();
        edges.retain(|&(u, v)| u < 9 && v < 9);
        let g = Graph::new(11, &edges).unwrap();
        let mut ratios = vec![(1, 10); 9];
        ratios.extend([(1, 20), (1, 20)]);
        let w = WeightMap::from_ratios(&ratios).unwrap();
        let y = big_component(&g, &w, &r(1, 6), g.vertices()).unwrap();
        assert_eq!(y, VertexSet::full(9));
    }

    #[test]
    fn least_witness_matches_brute_force() {
        let g = disjoint_union(&path(3), &cycle(4));
        let w = WeightMap::uniform(7);
        let eps = r(2, 7);
        let sc = Scaled::new(&w, &eps).unwrap();
        let brute = g.vertices().subsets().find(|&a| {
            let b = g.vertices() - a - g.neighbourhood(a);
            w.weight(a) >= eps && w.weight(b) >= eps
        });
        assert_eq!(anticomplete_violation(&g, &sc).map(|p| p.0), brute);
    }
}
