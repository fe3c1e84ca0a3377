//! Exhaustive verification of the structural lemmas on small graphs.

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::coherence::{big_component, is_coherent, WeightMap};
use crate::decomposition::{
    all_y_fractures, check_fracture_properties, crossing_check, homogeneous_partition, is_guarded, small_side_components,
    Fracture,
};
use crate::error::Result;
use crate::graph::{Graph, Side, VertexSet};
use crate::narrowness::{
    certify_narrow, critical_consequences, homog_bound_inequality, polytope_vertices, power_mass, Value,
};
use crate::report::{LemmaId, LemmaReport, Violation};

use super::enumerate::{enumerate_graphs, enumerate_levels, EnumSpec, Filter};

/// Coherence levels tried by the big-component check, all with uniform
/// weights.
pub const BIGCOMP_EPS: [(i64, i64); 5] = [(1, 2), (2, 5), (1, 3), (2, 7), (1, 4)];
/// Powers at which critical pairs are collected.
pub const CRITICAL_ALPHAS: [i64; 2] = [1, 2];
/// `(alpha, alpha')` for the homogeneous-set bound.
pub const HOMOG_ALPHAS: (i64, i64) = (2, 1);

fn single(v: usize) -> VertexSet {
    VertexSet::singleton(v)
}

/// Nonadjacent `x ∈ s` adjacent to `v` and `y ∈ s` not adjacent to `v`.
fn split_pair(g: &Graph, v: usize, s: VertexSet) -> Option<(usize, usize)> {
    let inn = g.neighbours(v) & s;
    let out = s - g.neighbours(v);
    inn.iter().find_map(|x| (out - g.neighbours(x)).first().map(|y| (x, y)))
}

/// Connected subsets of `pool` with a vertex adjacent to `c`.
fn touching_connected(g: &Graph, pool: VertexSet, c: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
    pool.subsets().filter(move |&p| !p.is_empty() && g.neighbourhood(p).intersects(c) && g.is_connected(p))
}

fn anticonnected_nonempty(g: &Graph, x: VertexSet) -> bool {
    !x.is_empty() && g.is_anticonnected(x)
}

fn wiggly1_on(g: &Graph) -> LemmaReport {
    let mut rep = LemmaReport::new(LemmaId::Wiggly1);
    for c in g.vertices().subsets() {
        if !anticonnected_nonempty(g, c) {
            continue;
        }
        for d in g.complete_to(c).subsets() {
            if !anticonnected_nonempty(g, d) {
                continue;
            }
            for v in g.vertices() - c - d {
                rep.configs_checked += 1;
                if g.is_mixed_on(v, c) && g.is_mixed_on(v, d) {
                    let (c1, c2) = split_pair(g, v, c).expect("anticonnected C gives a pair");
                    let (d1, d2) = split_pair(g, v, d).expect("anticonnected D gives a pair");
                    rep.violations.push(Violation::new(
                        g,
                        &[
                            ("C", c),
                            ("D", d),
                            ("v", single(v)),
                            ("c1", single(c1)),
                            ("c2", single(c2)),
                            ("d1", single(d1)),
                            ("d2", single(d2)),
                        ],
                    ));
                }
            }
        }
    }
    rep
}

/// Some `v ∈ P` such that no `u ∈ P` mixed on `C` sees all of `N(v) ∩ D`.
fn wiggly2_failure(g: &Graph, c: VertexSet, d: VertexSet, p: VertexSet) -> Option<usize> {
    let mixed: Vec<usize> = p.iter().filter(|&u| g.is_mixed_on(u, c)).collect();
    p.iter().find(|&v| {
        let need = g.neighbours(v) & d;
        !mixed.iter().any(|&u| need.is_subset(g.neighbours(u)))
    })
}

fn wiggly3_failure(g: &Graph, c: VertexSet, d: VertexSet, p: VertexSet) -> bool {
    g.neighbourhood(p).intersects(d) && !p.iter().any(|u| g.is_mixed_on(u, c) && d.is_subset(g.neighbours(u)))
}

fn wiggly4_failure(g: &Graph, d: VertexSet, p: VertexSet) -> Option<usize> {
    p.iter().find(|&u| g.is_mixed_on(u, d))
}

/// The `C`, `D`, `P` side conditions shared by the second to fourth lemma.
fn p_admissible(g: &Graph, c: VertexSet, d: VertexSet, p: VertexSet) -> bool {
    !p.is_empty()
        && c.is_disjoint(d)
        && p.is_disjoint(c | d)
        && g.is_complete(c, d)
        && g.is_connected(c)
        && !c.is_empty()
        && g.is_connected(p)
        && g.neighbourhood(p).intersects(c)
        && !p.intersects(g.complete_to(c))
}

fn wiggly234_on(g: &Graph, lemma: LemmaId) -> LemmaReport {
    let mut rep = LemmaReport::new(lemma);
    for c in g.vertices().subsets() {
        if c.is_empty() || !g.is_connected(c) {
            continue;
        }
        // the third lemma needs C anticonnected as well; see `wiggly3_literal_on`
        if lemma != LemmaId::Wiggly2 && !g.is_anticonnected(c) {
            continue;
        }
        let comp = g.complete_to(c);
        // P avoids every vertex complete to C, so its range does not depend on D
        let pool = g.vertices() - c - comp;
        let ds: Vec<VertexSet> = comp
            .subsets()
            .filter(|&d| match lemma {
                LemmaId::Wiggly2 => true,
                _ => anticonnected_nonempty(g, d),
            })
            .collect();
        for p in touching_connected(g, pool, c) {
            for &d in &ds {
                rep.configs_checked += 1;
                let cfg = [("C", c), ("D", d), ("P", p)];
                match lemma {
                    LemmaId::Wiggly2 => {
                        if let Some(v) = wiggly2_failure(g, c, d, p) {
                            rep.violations.push(Violation::new(g, &[cfg[0], cfg[1], cfg[2], ("v", single(v))]));
                        }
                    }
                    LemmaId::Wiggly3 => {
                        if wiggly3_failure(g, c, d, p) {
                            rep.violations.push(Violation::new(g, &cfg));
                        }
                    }
                    _ => {
                        if let Some(u) = wiggly4_failure(g, d, p) {
                            rep.violations.push(Violation::new(g, &[cfg[0], cfg[1], cfg[2], ("u", single(u))]));
                        }
                    }
                }
            }
        }
    }
    rep
}

/// The third lemma with `C` only connected, as literally stated. This
/// fails: in the gem (a P4 plus a dominating vertex) a vertex can be mixed
/// on a connected but not anticonnected `C` and mixed on `D`.
pub fn wiggly3_literal_on(g: &Graph) -> LemmaReport {
    let mut rep = LemmaReport::new(LemmaId::Wiggly3);
    rep.graphs_checked = 1;
    for c in g.vertices().subsets() {
        if c.is_empty() || !g.is_connected(c) {
            continue;
        }
        let comp = g.complete_to(c);
        let pool = g.vertices() - c - comp;
        let ds: Vec<VertexSet> = comp.subsets().filter(|&d| anticonnected_nonempty(g, d)).collect();
        for p in touching_connected(g, pool, c) {
            for &d in &ds {
                rep.configs_checked += 1;
                if wiggly3_failure(g, c, d, p) {
                    rep.violations.push(Violation::new(g, &[("C", c), ("D", d), ("P", p)]));
                }
            }
        }
    }
    rep
}

/// Any connected `P` that avoids the vertices complete to `C` and touches
/// `C` can be grown to its whole component in `G[R ∖ complete_to(C)]`, and
/// likewise for `Q`; so a violating pair exists exactly when some `w` has
/// both grown components touching their sides.
fn wiggly5_on(g: &Graph) -> LemmaReport {
    let mut rep = LemmaReport::new(LemmaId::Wiggly5);
    let cd_ok = |x: VertexSet| !x.is_empty() && g.is_connected(x) && g.is_anticonnected(x);
    for c in g.vertices().subsets() {
        if !cd_ok(c) {
            continue;
        }
        for d in g.complete_to(c).subsets() {
            if !cd_ok(d) {
                continue;
            }
            let rest = g.vertices() - c - d;
            let pool_c = rest - g.complete_to(c);
            let pool_d = rest - g.complete_to(d);
            for w in rest {
                rep.configs_checked += 1;
                if !pool_c.contains(w) || !pool_d.contains(w) {
                    continue;
                }
                let p = g.component_of(pool_c, w, Side::Direct);
                let q = g.component_of(pool_d, w, Side::Direct);
                if g.neighbourhood(p).intersects(c) && g.neighbourhood(q).intersects(d) {
                    rep.violations.push(Violation::new(g, &[("C", c), ("D", d), ("P", p), ("Q", q)]));
                }
            }
        }
    }
    rep
}

fn fracture_props_on(g: &Graph) -> LemmaReport {
    let mut rep = LemmaReport::new(LemmaId::FractureProps);
    for fr in all_y_fractures(g).iter().filter(|f| f.is_anchored(g)) {
        let r = check_fracture_properties(g, fr);
        rep.configs_checked += r.configs_checked;
        rep.violations.extend(r.violations);
    }
    rep
}

fn crossing_on(g: &Graph) -> Result<LemmaReport> {
    let mut rep = LemmaReport::new(LemmaId::Crossing);
    let frs = all_y_fractures(g);
    for f1 in &frs {
        for f2 in &frs {
            if f1.y.intersects(f2.y) {
                let r = crossing_check(g, f1, f2)?;
                rep.configs_checked += r.configs_checked;
                rep.violations.extend(r.violations);
            }
        }
    }
    Ok(rep)
}

/// Maximal families of fractures whose designated components pairwise meet.
pub fn intersecting_families(frs: &[Fracture]) -> Vec<Vec<usize>> {
    fn extend(frs: &[Fracture], r: Vec<usize>, mut p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            if !r.is_empty() {
                out.push(r);
            }
            return;
        }
        while let Some(v) = p.first().copied() {
            let meets = |u: &usize| frs[*u].y.intersects(frs[v].y);
            let mut r2 = r.clone();
            r2.push(v);
            extend(frs, r2, p.iter().copied().filter(|u| *u != v && meets(u)).collect(), x.iter().copied().filter(meets).collect(), out);
            p.remove(0);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    extend(frs, Vec::new(), (0..frs.len()).collect(), Vec::new(), &mut out);
    out.sort();
    out
}

fn small_side_on(g: &Graph) -> Result<LemmaReport> {
    let mut rep = LemmaReport::new(LemmaId::SmallSide);
    let frs = all_y_fractures(g);
    for family in intersecting_families(&frs) {
        let chosen: Vec<Fracture> = family.iter().map(|&i| frs[i]).collect();
        let r = small_side_components(g, &chosen)?;
        rep.configs_checked += r.configs_checked;
        rep.violations.extend(r.violations);
    }
    Ok(rep)
}

/// Brute force: no proper homogeneous set of `G[Z]` strictly contains `p`.
fn is_maximal_part(g: &Graph, z: VertexSet, p: VertexSet) -> Option<VertexSet> {
    (z - p).subsets().map(|extra| p | extra).find(|&m| m != p && m != z && g.splitters(m, z).is_empty())
}

fn homog_partition_on(g: &Graph) -> LemmaReport {
    let mut rep = LemmaReport::new(LemmaId::HomogPartition);
    for z in g.vertices().subsets() {
        if z.len() < 2 || !g.is_connected(z) || !g.is_anticonnected(z) {
            continue;
        }
        rep.configs_checked += 1;
        match homogeneous_partition(g, z) {
            Err(_) => rep.violations.push(Violation::new(g, &[("Z", z)])),
            Ok(part) => {
                if !part.is_valid_for(g, z) {
                    rep.violations.push(Violation::new(g, &[("Z", z)]));
                    continue;
                }
                for &p in &part.parts {
                    if let Some(m) = is_maximal_part(g, z, p) {
                        rep.violations.push(Violation::new(g, &[("Z", z), ("P", p), ("M", m)]));
                    }
                }
            }
        }
    }
    rep
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// The heavy components of `X`: those weighing more than `w(X) - eps`.
fn heavy_components(g: &Graph, w: &WeightMap, eps: &BigRational, x: VertexSet) -> Vec<VertexSet> {
    let bound = w.weight(x) - eps;
    g.components(x, Side::Direct).into_iter().filter(|c| w.weight(*c) > bound).collect()
}

fn bigcomp_on(g: &Graph) -> Result<LemmaReport> {
    let mut rep = LemmaReport::new(LemmaId::Bigcomp);
    if g.n() == 0 {
        return Ok(rep);
    }
    let w = WeightMap::uniform(g.n());
    for (p, q) in BIGCOMP_EPS {
        let eps = ratio(p, q);
        if !is_coherent(g, &w, &eps)? {
            continue;
        }
        let three = &eps * ratio(3, 1);
        for x in g.vertices().subsets() {
            if w.weight(x) < three {
                continue;
            }
            rep.configs_checked += 1;
            let heavy = heavy_components(g, &w, &eps, x);
            let found = big_component(g, &w, &eps, x).ok();
            if heavy.len() != 1 || found != Some(heavy[0]) {
                rep.violations.push(Violation::new(g, &[("X", x)]));
            }
        }
    }
    Ok(rep)
}

/// Whether every `G - v` is certified `alpha`-narrow.
fn deletions_narrow(g: &Graph, alpha: &BigRational) -> Result<bool> {
    for v in g.vertices() {
        if !certify_narrow(&g.delete_vertex(v), alpha)?.is_narrow() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Critical pairs `(g, f)` with `f` a polytope vertex.
fn critical_vertices(g: &Graph, alpha: &BigRational) -> Result<Vec<WeightMap>> {
    if g.n() == 0 || !deletions_narrow(g, alpha)? {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for f in polytope_vertices(g)?.iter() {
        if power_mass(f, g.vertices(), alpha)?.exceeds(&Value::Exact(BigRational::one())) {
            out.push(WeightMap::new(f.clone())?);
        }
    }
    Ok(out)
}

fn critical_on(g: &Graph, lemma: LemmaId) -> Result<LemmaReport> {
    let mut rep = LemmaReport::new(lemma);
    for a in CRITICAL_ALPHAS {
        let alpha = ratio(a, 1);
        if lemma == LemmaId::Smalldeg && a < 2 {
            continue;
        }
        for f in critical_vertices(g, &alpha)? {
            let cons = critical_consequences(g, &f, &alpha)?;
            let r = match lemma {
                LemmaId::Smalldeg => cons.smalldeg.expect("alpha >= 2"),
                _ => cons.strong_eh,
            };
            rep.configs_checked += r.configs_checked;
            rep.violations.extend(r.violations);
        }
    }
    Ok(rep)
}

/// Every connected guarded `Z` with `|Z| > 1` and every nonzero polytope
/// vertex as the good function. Configurations whose hypotheses fail at
/// this size are skipped.
fn homog_bound_on(g: &Graph) -> Result<LemmaReport> {
    let mut rep = LemmaReport::new(LemmaId::HomogBound);
    let alpha = ratio(HOMOG_ALPHAS.0, 1);
    let alpha_prime = ratio(HOMOG_ALPHAS.1, 1);
    if g.n() < 2 || !deletions_narrow(g, &alpha)? {
        return Ok(rep);
    }
    let fs: Vec<_> = polytope_vertices(g)?.iter().filter(|f| f.iter().any(|x| *x > ratio(0, 1))).cloned().collect();
    for z in g.vertices().subsets() {
        if z.len() < 2 || !g.is_connected(z) || !is_guarded(&g.induced(z).0).0 {
            continue;
        }
        if g.is_anticonnected(z) {
            let reps: VertexSet = homogeneous_partition(g, z)?.parts.iter().filter_map(|p| p.first()).collect();
            if !certify_narrow(&g.induced(reps).0, &alpha_prime)?.is_narrow() {
                continue;
            }
        }
        for f in &fs {
            if f.iter().enumerate().all(|(v, x)| !z.contains(v) || *x == ratio(0, 1)) {
                continue;
            }
            rep.configs_checked += 1;
            if !homog_bound_inequality(g, z, f, &alpha, &alpha_prime)?.holds {
                let support: VertexSet = (0..g.n()).filter(|&v| f[v] > ratio(0, 1)).collect();
                rep.violations.push(Violation::new(g, &[("Z", z), ("support", support)]));
            }
        }
    }
    Ok(rep)
}

/// Runs one lemma's check on a single graph.
pub fn check_graph(lemma: LemmaId, g: &Graph) -> Result<LemmaReport> {
    let mut rep = match lemma {
        LemmaId::Wiggly1 => wiggly1_on(g),
        LemmaId::Wiggly2 | LemmaId::Wiggly3 | LemmaId::Wiggly4 => wiggly234_on(g, lemma),
        LemmaId::Wiggly5 => wiggly5_on(g),
        LemmaId::FractureProps => fracture_props_on(g),
        LemmaId::Crossing => crossing_on(g)?,
        LemmaId::SmallSide => small_side_on(g)?,
        LemmaId::HomogPartition => homog_partition_on(g),
        LemmaId::Bigcomp => bigcomp_on(g)?,
        LemmaId::Smalldeg | LemmaId::StrongEH => critical_on(g, lemma)?,
        LemmaId::HomogBound => homog_bound_on(g)?,
    };
    rep.graphs_checked = 1;
    Ok(rep)
}

/// Checks every graph in order; results merge in input order.
pub fn verify_graphs(lemma: LemmaId, graphs: &[Graph]) -> Result<LemmaReport> {
    let parts: Vec<LemmaReport> = graphs.par_iter().map(|g| check_graph(lemma, g)).collect::<Result<_>>()?;
    let mut rep = LemmaReport::new(lemma);
    for p in parts {
        rep.merge(p);
    }
    Ok(rep)
}

/// Every graph of `spec` and every admissible configuration.
pub fn verify_lemma(lemma: LemmaId, spec: &EnumSpec) -> Result<LemmaReport> {
    verify_graphs(lemma, &enumerate_graphs(spec)?)
}

/// [`verify_lemma`] over all sizes from 0 to `max_n`.
pub fn verify_lemma_upto(lemma: LemmaId, max_n: usize, filters: &[Filter]) -> Result<LemmaReport> {
    let graphs: Vec<Graph> = enumerate_levels(max_n, filters)?.into_iter().flatten().collect();
    verify_graphs(lemma, &graphs)
}

/// Whether the violation's predicate fails again when evaluated from its
/// configuration alone.
pub fn replays(lemma: LemmaId, v: &Violation) -> Result<bool> {
    let g = &v.graph;
    let get = |k: &str| v.get(k).unwrap_or_default();
    let (c, d) = (get("C"), get("D"));
    let complete_pair = c.is_disjoint(d) && g.is_complete(c, d);
    Ok(match lemma {
        LemmaId::Wiggly1 => {
            let x = get("v").first();
            complete_pair
                && anticonnected_nonempty(g, c)
                && anticonnected_nonempty(g, d)
                && x.is_some_and(|x| !(c | d).contains(x) && g.is_mixed_on(x, c) && g.is_mixed_on(x, d))
        }
        LemmaId::Wiggly2 => p_admissible(g, c, d, get("P")) && wiggly2_failure(g, c, d, get("P")).is_some(),
        LemmaId::Wiggly3 => {
            p_admissible(g, c, d, get("P"))
                && g.is_anticonnected(c)
                && anticonnected_nonempty(g, d)
                && wiggly3_failure(g, c, d, get("P"))
        }
        LemmaId::Wiggly4 => {
            p_admissible(g, c, d, get("P"))
                && g.is_anticonnected(c)
                && anticonnected_nonempty(g, d)
                && wiggly4_failure(g, d, get("P")).is_some()
        }
        LemmaId::Wiggly5 => {
            let (p, q) = (get("P"), get("Q"));
            let side_ok = |x: VertexSet| !x.is_empty() && g.is_connected(x) && g.is_anticonnected(x);
            let touches = |s: VertexSet, x: VertexSet| {
                !s.is_empty()
                    && g.is_connected(s)
                    && s.is_disjoint(c | d)
                    && g.neighbourhood(s).intersects(x)
                    && !s.intersects(g.complete_to(x))
            };
            complete_pair && side_ok(c) && side_ok(d) && p.intersects(q) && touches(p, c) && touches(q, d)
        }
        _ => check_graph(lemma, g)?.violations.contains(v),
    })
}
