use num_rational::BigRational;

use crate::coherence::{big_component, check_coherence, WeightMap};
use crate::detectors::find_hole_with_hat;
use crate::error::{Error, Result};
use crate::graph::{Graph, Side, VertexSet};

use super::fracture::{assemble_fracture, Fracture};
use super::homogeneous::is_guarded;
use super::split::Split;

/// Largest graph for which all splits are enumerated.
pub const MAX_WEIGHTED_ENUM: usize = 24;

fn check_instance(g: &Graph, w: &WeightMap, eps: &BigRational, k: i64) -> Result<()> {
    if g.n() > MAX_WEIGHTED_ENUM {
        return Err(Error::TooLarge {
            what: format!("{} vertices", g.n()),
            limit: format!("split enumeration handles at most {MAX_WEIGHTED_ENUM}"),
        });
    }
    if eps * BigRational::from_integer(k.into()) > BigRational::from_integer(1.into()) {
        return Err(Error::precondition(format!("{k}*eps exceeds 1")));
    }
    let rep = check_coherence(g, w, eps)?;
    if let Some(v) = rep.violations.first() {
        return Err(Error::NotCoherent {
            eps: eps.to_string(),
            detail: format!("{:?} witnessed by {:?}", v.condition, v.witness),
        });
    }
    if let Some(h) = find_hole_with_hat(g) {
        return Err(Error::HoleWithHat { hole: h.hole.cycle, hat: h.hat });
    }
    Ok(())
}

/// All splits of `(G, w)` at `eps`, with the big component of each rest.
fn weighted_splits(g: &Graph, w: &WeightMap, eps: &BigRational) -> Result<Vec<(Split, VertexSet)>> {
    let mut out = Vec::new();
    for c in g.vertices().subsets() {
        if c.len() < 2 || !g.is_connected(c) || !g.is_anticonnected(c) {
            continue;
        }
        let s = Split::from_c(g, c);
        if s.d.is_empty() {
            continue;
        }
        let y = big_component(g, w, eps, s.rest(g))?;
        if !g.attachments(y).intersects(c) {
            out.push((s, y));
        }
    }
    Ok(out)
}

/// Every fracture of `(G, w)` at `eps`: the optimal splits, each with `Y`
/// the big component of its rest. Requires coherence, hole-with-hat-freeness
/// and `5*eps <= 1`.
pub fn weighted_fractures(g: &Graph, w: &WeightMap, eps: &BigRational) -> Result<Vec<Fracture>> {
    check_instance(g, w, eps, 5)?;
    let splits = weighted_splits(g, w, eps)?;
    let mut out: Vec<Fracture> = splits
        .iter()
        .filter(|(s, _)| !splits.iter().any(|(s2, _)| s2.c != s.c && s.c.is_subset(s2.c)))
        .map(|(s, y)| assemble_fracture(g, s, *y))
        .collect();
    out.sort_by_key(|f| f.c);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatPiece {
    /// Union of the `A` sides of all fractures.
    pub small_side: VertexSet,
    /// The big component of `G ∖ small_side`.
    pub z: VertexSet,
    pub guarded: bool,
    pub fractures: Vec<Fracture>,
}

/// Removes the small sides of all fractures and returns the big component
/// of what is left, with its guardedness. Requires `6*eps <= 1`.
pub fn flat_piece(g: &Graph, w: &WeightMap, eps: &BigRational) -> Result<FlatPiece> {
    check_instance(g, w, eps, 6)?;
    let fractures = weighted_fractures(g, w, eps)?;
    let small_side = fractures.iter().fold(VertexSet::EMPTY, |u, f| u | f.a);
    let three = BigRational::from_integer(3.into());
    if w.weight(small_side) >= eps * &three {
        return Err(Error::internal(format!("small sides weigh {}, not below 3*eps", w.weight(small_side))));
    }
    let z = big_component(g, w, eps, g.vertices() - small_side)?;
    let four = BigRational::from_integer(4.into());
    if w.weight(z) <= BigRational::from_integer(1.into()) - eps * four || z.len() < 2 {
        return Err(Error::internal("flat piece is too light"));
    }
    let (sub, _) = g.induced(z);
    let guarded = g.is_connected(z) && is_guarded(&sub).0;
    Ok(FlatPiece { small_side, z, guarded, fractures })
}

/// Components of `G[∪A]` grouped with the fractures whose `A` meets them.
pub fn small_side_pieces(g: &Graph, fractures: &[Fracture]) -> Vec<(VertexSet, Vec<usize>)> {
    let union = fractures.iter().fold(VertexSet::EMPTY, |u, f| u | f.a);
    g.components(union, Side::Direct)
        .into_iter()
        .map(|z| (z, (0..fractures.len()).filter(|&i| fractures[i].a.intersects(z)).collect()))
        .collect()
}
