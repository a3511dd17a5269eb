//! Renner monoid combinatorics: standard forms `a e b^{-1}`, the
//! Bruhat–Chevalley–Renner comparison, and the rank-one orbits `WeW`.
//!
//! For an idempotent `e`, `W(e) = W_{λ(e)}` is its centralizer in `W` and
//! `W_*(e) = W_{λ_*(e)}` the subgroup fixing it. `D(e)` and `D_*(e)` are the
//! corresponding minimal left coset representatives.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::dynkin::{DynkinDiagram, NodeSet};
use crate::envlattice::{leq, type_map, CrossSectionLattice, Idempotent};
use crate::error::{Error, Result};
use crate::weyl::{parabolic_index, ElemId, WeylGroup};

/// `a e b^{-1}` with `a ∈ D_*(e)` and `b ∈ D(e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RennerElement {
    pub a: ElemId,
    pub e: Idempotent,
    pub b: ElemId,
}

fn lambdas(group: &WeylGroup, e: &Idempotent) -> (NodeSet, NodeSet) {
    let t = type_map(group.diagram(), e);
    (t.lambda, t.lambda_star_lower)
}

/// Standard form of `w1 e w2`.
///
/// `w2^{-1} = b u` with `b ∈ D(e)`, `u ∈ W(e)`; `u` commutes with `e`, so
/// `w1 e w2 = (w1 u^{-1}) e b^{-1}`, and `w1 u^{-1} = a v` with `v` fixing `e`.
pub fn standard_form(group: &WeylGroup, w1: ElemId, e: &Idempotent, w2: ElemId) -> RennerElement {
    let (lambda, lambda_lower) = lambdas(group, e);
    let w2_inv = group.inverse(w2);
    let b = group.min_coset_rep(w2_inv, lambda);
    let u = group.mul(group.inverse(b), w2_inv);
    let a = group.min_coset_rep(group.mul(w1, group.inverse(u)), lambda_lower);
    RennerElement { a, e: *e, b }
}

/// Whether `x` is already in standard form.
pub fn is_standard(group: &WeylGroup, x: &RennerElement) -> bool {
    let (lambda, lambda_lower) = lambdas(group, &x.e);
    group.is_min_coset_rep(x.a, lambda_lower) && group.is_min_coset_rep(x.b, lambda)
}

/// Elements of `W(f) W(e)`, each once.
fn product_set(group: &WeylGroup, f: NodeSet, e: NodeSet) -> Vec<ElemId> {
    let left = group.parabolic_subgroup(f);
    let right = group.parabolic_subgroup(e);
    let mut seen = vec![false; group.order()];
    let mut out = Vec::new();
    for &p in &left {
        for &q in &right {
            let w = group.mul(p, q);
            if !seen[w.0] {
                seen[w.0] = true;
                out.push(w);
            }
        }
    }
    out
}

/// Bruhat–Chevalley–Renner order. With `x = a e b^{-1}` and `y = c f d^{-1}`:
/// `x <= y` iff `e <= f` and some `w ∈ W(f) W(e)` has `a <= c w` and
/// `w^{-1} d^{-1} <= b^{-1}`.
pub fn bcr_leq(group: &WeylGroup, x: &RennerElement, y: &RennerElement) -> Result<bool> {
    for z in [x, y] {
        if !is_standard(group, z) {
            return Err(Error::precondition(format!(
                "({}, {}, {}) is not in standard form",
                group.word_label(z.a),
                z.e,
                group.word_label(z.b)
            )));
        }
    }
    if !leq(&x.e, &y.e) {
        return Ok(false);
    }
    let (lambda_e, _) = lambdas(group, &x.e);
    let (lambda_f, _) = lambdas(group, &y.e);
    let b_inv = group.inverse(x.b);
    let d_inv = group.inverse(y.b);
    let below_b_inv = group.bruhat_lower_set(b_inv);
    for w in product_set(group, lambda_f, lambda_e) {
        let right = group.mul(group.inverse(w), d_inv);
        if !below_b_inv[right.0] {
            continue;
        }
        if group.bruhat_leq(x.a, group.mul(y.a, w)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The orbit `WeW` of a rank-one idempotent as pairs `(a, b)` standing for
/// `a e b^{-1}`, ordered by `a <= a'` and `b >= b'`.
#[derive(Debug, Clone)]
pub struct Rank1OrbitPoset {
    pub e: Idempotent,
    pub elements: Vec<(ElemId, ElemId)>,
    reps: HashMap<ElemId, usize>,
    lengths: Vec<usize>,
    // below[k][w]: w <= k-th representative in Bruhat order
    below: Vec<Vec<bool>>,
}

impl Rank1OrbitPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn bruhat(&self, u: ElemId, w: ElemId) -> bool {
        self.below[self.reps[&w]][u.0]
    }

    /// Order between positions `p` and `q` of [`elements`](Self::elements).
    pub fn leq(&self, p: usize, q: usize) -> bool {
        let (a1, b1) = self.elements[p];
        let (a2, b2) = self.elements[q];
        self.bruhat(a1, a2) && self.bruhat(b2, b1)
    }

    /// Cover pairs `(p, q)`, `p` below `q`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for p in 0..n {
            for q in 0..n {
                if p == q || !self.leq(p, q) {
                    continue;
                }
                let between = (0..n).any(|m| m != p && m != q && self.leq(p, m) && self.leq(m, q));
                if !between {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Number of elements in a longest chain.
    pub fn chain_length(&self) -> usize {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        // a strictly larger element has strictly larger ℓ(a) - ℓ(b)
        order.sort_by_key(|&p| self.grade(p));
        let mut best = vec![1usize; n];
        for (k, &q) in order.iter().enumerate() {
            for &p in &order[..k] {
                if self.leq(p, q) {
                    best[q] = best[q].max(best[p] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    fn grade(&self, p: usize) -> i64 {
        let (a, b) = self.elements[p];
        self.lengths[a.0] as i64 - self.lengths[b.0] as i64
    }
}

/// Enumerates `WeW` for a rank-one `e`: a single point when `J = S`, and
/// `D_J x D_J` when `J = S \ {s}`.
pub fn rank1_orbit_poset(group: &WeylGroup, e: &Idempotent) -> Result<Rank1OrbitPoset> {
    if e.rank() != 1 {
        return Err(Error::precondition(format!("{e} does not have rank one")));
    }
    let reps = if e.j().len() == e.ambient_rank() {
        vec![group.identity()]
    } else {
        group.min_coset_reps(e.j()).reps
    };
    let elements = reps
        .iter()
        .flat_map(|&a| reps.iter().map(move |&b| (a, b)))
        .collect();
    Ok(Rank1OrbitPoset {
        e: *e,
        elements,
        reps: reps.iter().enumerate().map(|(k, &w)| (w, k)).collect(),
        lengths: group.ids().map(|w| group.length(w)).collect(),
        below: reps.iter().map(|&w| group.bruhat_lower_set(w)).collect(),
    })
}

/// Dimension of `G e G` for rank-one `e`: `1` if `J = S`, else
/// `2 |W| / |W_J| + 1`.
pub fn dim_geg_rank1(diagram: &DynkinDiagram, e: &Idempotent) -> Result<BigUint> {
    if e.rank() != 1 {
        return Err(Error::precondition(format!("{e} does not have rank one")));
    }
    if e.j().len() == diagram.rank() {
        return Ok(BigUint::from(1u32));
    }
    Ok(parabolic_index(diagram, e.j()) * 2u32 + 1u32)
}

fn require_rank_two(diagram: &DynkinDiagram) -> Result<()> {
    if diagram.rank() < 2 {
        return Err(Error::Unsupported(format!(
            "the rank-one orbit count needs rank at least 2; {diagram} has rank {}",
            diagram.rank()
        )));
    }
    Ok(())
}

/// `|R_1| = |S| + sum_s (|W| / |W_{S \ {s}}|)^2`.
pub fn count_r1(diagram: &DynkinDiagram) -> Result<BigUint> {
    require_rank_two(diagram)?;
    let full = diagram.nodes();
    let squares: BigUint = full
        .iter()
        .map(|s| {
            let idx = parabolic_index(diagram, full.without(s));
            &idx * &idx
        })
        .sum();
    Ok(BigUint::from(diagram.rank()) + squares)
}

/// One rank-one idempotent and the size of its orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtomOrbit {
    #[serde(rename = "I")]
    pub i: NodeSet,
    #[serde(rename = "J")]
    pub j: NodeSet,
    pub size: usize,
}

/// Orbit sizes for every rank-one element, enumerated directly.
pub fn r1_breakdown(lattice: &CrossSectionLattice, group: &WeylGroup) -> Result<Vec<AtomOrbit>> {
    require_rank_two(lattice.diagram())?;
    lattice
        .atoms()
        .iter()
        .map(|e| {
            Ok(AtomOrbit {
                i: e.i(),
                j: e.j(),
                size: rank1_orbit_poset(group, e)?.len(),
            })
        })
        .collect()
}

/// Sum of the directly enumerated rank-one orbit sizes.
pub fn count_r1_direct(lattice: &CrossSectionLattice, group: &WeylGroup) -> Result<BigUint> {
    Ok(r1_breakdown(lattice, group)?
        .iter()
        .map(|a| BigUint::from(a.size))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(spec: &str) -> DynkinDiagram {
        DynkinDiagram::parse(spec).unwrap()
    }

    fn group(spec: &str) -> WeylGroup {
        WeylGroup::enumerate(&d(spec), 1_000_000).unwrap()
    }

    fn e(rank: usize, i: &[usize], j: &[usize]) -> Idempotent {
        Idempotent::new(
            NodeSet::from_nodes(rank, i.iter().copied()).unwrap(),
            NodeSet::from_nodes(rank, j.iter().copied()).unwrap(),
        )
    }

    #[test]
    fn standard_form_examples() {
        let w = group("A2");
        let id = w.identity();
        let s1 = w.generator(1);
        let s2 = w.generator(2);
        let x = e(2, &[1, 2], &[1]);
        assert_eq!(
            standard_form(&w, id, &x, id),
            RennerElement { a: id, e: x, b: id }
        );
        assert_eq!(
            standard_form(&w, id, &x, s1),
            RennerElement { a: id, e: x, b: id }
        );
        let y = e(2, &[1, 2], &[2]);
        assert_eq!(
            standard_form(&w, s2, &y, id),
            RennerElement { a: id, e: y, b: id }
        );
        let z = standard_form(&w, s1, &y, id);
        assert_eq!(z.a, s1);
        assert!(is_standard(&w, &z));
    }

    #[test]
    fn bcr_examples() {
        let w = group("A2");
        let id = w.identity();
        let x = e(2, &[1, 2], &[2]);
        let plain = RennerElement { a: id, e: x, b: id };
        assert!(bcr_leq(&w, &plain, &plain).unwrap());
        let f = e(2, &[2], &[2]);
        assert!(bcr_leq(&w, &plain, &RennerElement { a: id, e: f, b: id }).unwrap());
        let moved = standard_form(&w, w.generator(1), &x, id);
        assert!(!bcr_leq(&w, &moved, &plain).unwrap());
        assert!(bcr_leq(&w, &plain, &moved).unwrap());
        let bad = RennerElement {
            a: w.generator(2),
            e: x,
            b: id,
        };
        assert!(bcr_leq(&w, &bad, &plain).is_err());
    }

    #[test]
    fn rank1_orbit_examples() {
        let w = group("A2");
        assert_eq!(
            rank1_orbit_poset(&w, &e(2, &[2], &[1, 2])).unwrap().len(),
            1
        );
        let p = rank1_orbit_poset(&w, &e(2, &[1, 2], &[2])).unwrap();
        assert_eq!(p.len(), 9);
        assert_eq!(p.chain_length(), 5);
        let a1 = group("A1");
        assert_eq!(rank1_orbit_poset(&a1, &e(1, &[1], &[])).unwrap().len(), 4);
        assert!(rank1_orbit_poset(&w, &e(2, &[1], &[1])).is_err());
    }

    #[test]
    fn dims_and_counts() {
        let a2 = d("A2");
        assert_eq!(
            dim_geg_rank1(&a2, &e(2, &[1], &[1, 2])).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            dim_geg_rank1(&a2, &e(2, &[1, 2], &[2])).unwrap(),
            BigUint::from(7u32)
        );
        assert_eq!(
            dim_geg_rank1(&d("A3"), &e(3, &[1, 2, 3], &[2, 3])).unwrap(),
            BigUint::from(9u32)
        );
        assert_eq!(count_r1(&a2).unwrap(), BigUint::from(20u32));
        assert_eq!(count_r1(&d("A3")).unwrap(), BigUint::from(71u32));
        assert_eq!(count_r1(&d("B2")).unwrap(), BigUint::from(34u32));
        assert!(matches!(count_r1(&d("A1")), Err(Error::Unsupported(_))));
    }

    #[test]
    fn direct_count_matches_formula() {
        for spec in ["A2", "A3", "B2", "G2", "C3"] {
            let dg = d(spec);
            let l = CrossSectionLattice::enumerate(&dg, 12).unwrap();
            let w = group(spec);
            assert_eq!(
                count_r1_direct(&l, &w).unwrap(),
                count_r1(&dg).unwrap(),
                "{spec}"
            );
        }
    }
}
