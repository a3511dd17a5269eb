//! Brute-force scans over an enumerated lattice.
//!
//! Nothing here uses the closed-form meet, join, cover or classification
//! rules; these are the reference implementations those rules are checked
//! against.

use crate::envlattice::{leq, CrossSectionLattice, Idempotent};

/// Greatest lower bound by scanning all common lower bounds.
pub fn glb(lattice: &CrossSectionLattice, a: &Idempotent, b: &Idempotent) -> Option<Idempotent> {
    let lower: Vec<&Idempotent> = lattice
        .elements()
        .iter()
        .filter(|x| leq(x, a) && leq(x, b))
        .collect();
    lower
        .iter()
        .find(|x| lower.iter().all(|y| leq(y, x)))
        .map(|x| **x)
}

/// Least upper bound by scanning all common upper bounds.
pub fn lub(lattice: &CrossSectionLattice, a: &Idempotent, b: &Idempotent) -> Option<Idempotent> {
    let upper: Vec<&Idempotent> = lattice
        .elements()
        .iter()
        .filter(|x| leq(a, x) && leq(b, x))
        .collect();
    upper
        .iter()
        .find(|x| upper.iter().all(|y| leq(x, y)))
        .map(|x| **x)
}

/// Upper covers of element `k`: strictly greater elements with nothing
/// strictly in between. Returned as sorted indices.
pub fn covers_by_scan(lattice: &CrossSectionLattice, k: usize) -> Vec<usize> {
    let els = lattice.elements();
    let e = &els[k];
    let above: Vec<usize> = (0..els.len())
        .filter(|&t| t != k && leq(e, &els[t]))
        .collect();
    above
        .iter()
        .copied()
        .filter(|&t| !above.iter().any(|&m| m != t && leq(&els[m], &els[t])))
        .collect()
}

/// Maximal elements of a set of indices.
pub fn maximal(lattice: &CrossSectionLattice, set: &[usize]) -> Vec<usize> {
    let els = lattice.elements();
    set.iter()
        .copied()
        .filter(|&a| !set.iter().any(|&b| b != a && leq(&els[a], &els[b])))
        .collect()
}

/// Minimal elements of a set of indices.
pub fn minimal(lattice: &CrossSectionLattice, set: &[usize]) -> Vec<usize> {
    let els = lattice.elements();
    set.iter()
        .copied()
        .filter(|&a| !set.iter().any(|&b| b != a && leq(&els[b], &els[a])))
        .collect()
}

/// Open interval `(lo, hi)` as indices.
pub fn open_interval(
    lattice: &CrossSectionLattice,
    lo: &Idempotent,
    hi: &Idempotent,
) -> Vec<usize> {
    lattice
        .interval(lo, hi)
        .into_iter()
        .filter(|&k| lattice.element(k) != lo && lattice.element(k) != hi)
        .collect()
}

/// The lattice `[e, top]` of the connected stabilizer has exactly one
/// element of corank one: equivalently `[e, top)` has a unique maximal
/// element.
pub fn upper_interval_unique_coatom(lattice: &CrossSectionLattice, e: &Idempotent) -> bool {
    let top = lattice.top();
    let half_open: Vec<usize> = lattice
        .upper_interval(e)
        .into_iter()
        .filter(|&k| *lattice.element(k) != top)
        .collect();
    maximal(lattice, &half_open).len() == 1
}

/// The literal open-interval reading: `(e, top)` has a unique maximal
/// element. Differs from [`upper_interval_unique_coatom`] only when `e` is
/// itself a coatom, where the open interval is empty.
pub fn open_interval_unique_max(lattice: &CrossSectionLattice, e: &Idempotent) -> bool {
    let open = open_interval(lattice, e, &lattice.top());
    maximal(lattice, &open).len() == 1
}

/// `[e, top]` has a unique atom and a unique coatom. When the open interval
/// `(e, top)` is non-empty this is the same as it having a unique minimal
/// and a unique maximal element.
pub fn upper_interval_linear_ends(lattice: &CrossSectionLattice, e: &Idempotent) -> bool {
    let top = lattice.top();
    if *e == top {
        return false;
    }
    let up = lattice.upper_interval(e);
    let without_e: Vec<usize> = up
        .iter()
        .copied()
        .filter(|&k| lattice.element(k) != e)
        .collect();
    let without_top: Vec<usize> = up
        .iter()
        .copied()
        .filter(|&k| *lattice.element(k) != top)
        .collect();
    minimal(lattice, &without_e).len() == 1 && maximal(lattice, &without_top).len() == 1
}

/// Strict open-interval reading of the same condition: `(e, top)` is
/// non-empty with a unique minimal and a unique maximal element.
pub fn open_interval_unique_min_max(lattice: &CrossSectionLattice, e: &Idempotent) -> bool {
    let open = open_interval(lattice, e, &lattice.top());
    !open.is_empty() && minimal(lattice, &open).len() == 1 && maximal(lattice, &open).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{DynkinDiagram, NodeSet};

    fn lat(spec: &str) -> CrossSectionLattice {
        CrossSectionLattice::enumerate(&DynkinDiagram::parse(spec).unwrap(), 12).unwrap()
    }

    fn e(rank: usize, i: &[usize], j: &[usize]) -> Idempotent {
        Idempotent::new(
            NodeSet::from_nodes(rank, i.iter().copied()).unwrap(),
            NodeSet::from_nodes(rank, j.iter().copied()).unwrap(),
        )
    }

    #[test]
    fn scan_covers_match_enumeration() {
        for spec in ["A1", "A2", "B3", "G2", "D4"] {
            let l = lat(spec);
            for k in 0..l.len() {
                assert_eq!(covers_by_scan(&l, k), l.upper_cover_indices(k), "{spec}");
            }
        }
    }

    #[test]
    fn a2_interval_examples() {
        let l = lat("A2");
        assert!(upper_interval_unique_coatom(&l, &e(2, &[1], &[1, 2])));
        assert!(!upper_interval_unique_coatom(&l, &e(2, &[1, 2], &[1, 2])));
        assert!(upper_interval_linear_ends(&l, &e(2, &[1], &[1, 2])));
        assert!(open_interval_unique_min_max(&l, &e(2, &[1], &[1, 2])));
        // coatoms: the open interval is empty
        assert!(upper_interval_unique_coatom(&l, &e(2, &[1], &[])));
        assert!(!open_interval_unique_max(&l, &e(2, &[1], &[])));
    }

    #[test]
    fn a3_interval_examples() {
        let l = lat("A3");
        assert!(!upper_interval_linear_ends(&l, &e(3, &[2], &[1, 2, 3])));
        assert!(upper_interval_unique_coatom(&l, &e(3, &[2], &[1, 2, 3])));
    }

    #[test]
    fn glb_lub_examples() {
        let l = lat("A2");
        assert_eq!(
            glb(&l, &e(2, &[1], &[1]), &e(2, &[1, 2], &[])),
            Some(e(2, &[1, 2], &[1]))
        );
        assert_eq!(
            lub(&l, &e(2, &[1], &[1, 2]), &e(2, &[2], &[1, 2])),
            Some(e(2, &[], &[]))
        );
    }
}
