//! The cross-section lattice of an enveloping monoid.
//!
//! Its elements are the essential pairs `e(I,J)` of node subsets: every
//! connected component of `J` meets `I`. The order is reverse inclusion in
//! both coordinates, so `e(S,S)` is the bottom and `e({},{})` the top, and the
//! rank of `e(I,J)` is `2|S| - |I| - |J|`.
//!
//! Face coordinates complement both sides: `e(I,J) <-> F(S\I, S\J)`, under
//! which the order becomes plain inclusion.

use std::collections::HashMap;
use std::fmt;

use crate::dynkin::{DynkinDiagram, NodeSet};
use crate::error::{Error, Result};

/// An idempotent `e(I,J)` in lattice coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Idempotent {
    i: NodeSet,
    j: NodeSet,
}

impl Idempotent {
    /// Pairs `(I, J)` without checking essentiality.
    pub fn new(i: NodeSet, j: NodeSet) -> Self {
        assert_eq!(i.rank(), j.rank(), "coordinates of different ambient rank");
        Idempotent { i, j }
    }

    /// Pairs `(I, J)`, rejecting inessential pairs.
    pub fn essential(diagram: &DynkinDiagram, i: NodeSet, j: NodeSet) -> Result<Self> {
        if i.rank() != diagram.rank() || j.rank() != diagram.rank() {
            return Err(Error::invalid(format!(
                "coordinates must be subsets of the nodes of {diagram}"
            )));
        }
        if !is_essential_lambda(diagram, i, j) {
            return Err(Error::invalid(format!(
                "e{{{}|{}}} is not essential in {diagram}: a component of J misses I",
                i.label(),
                j.label()
            )));
        }
        Ok(Idempotent { i, j })
    }

    /// Parses `"I=1,2;J=1"` (either part may be empty, e.g. `"I=;J="`).
    pub fn parse(diagram: &DynkinDiagram, spec: &str) -> Result<Self> {
        let mut i = None;
        let mut j = None;
        for part in spec.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("element part {part:?} lacks '='")))?;
            let set = NodeSet::parse(diagram.rank(), value)?;
            match key.trim().to_ascii_uppercase().as_str() {
                "I" => i = Some(set),
                "J" => j = Some(set),
                other => return Err(Error::invalid(format!("unknown element key {other:?}"))),
            }
        }
        let (Some(i), Some(j)) = (i, j) else {
            return Err(Error::invalid(format!(
                "element spec {spec:?} must give both I and J"
            )));
        };
        Self::essential(diagram, i, j)
    }

    pub fn i(&self) -> NodeSet {
        self.i
    }

    pub fn j(&self) -> NodeSet {
        self.j
    }

    pub fn ambient_rank(&self) -> usize {
        self.i.rank()
    }

    /// Grading `2|S| - |I| - |J|`.
    pub fn rank(&self) -> usize {
        2 * self.ambient_rank() - self.i.len() - self.j.len()
    }

    pub fn bottom(rank: usize) -> Self {
        Idempotent::new(NodeSet::full(rank), NodeSet::full(rank))
    }

    pub fn top(rank: usize) -> Self {
        Idempotent::new(NodeSet::empty(rank), NodeSet::empty(rank))
    }

    pub fn is_bottom(&self) -> bool {
        self.i.len() == self.ambient_rank() && self.j.len() == self.ambient_rank()
    }

    pub fn is_top(&self) -> bool {
        self.i.is_empty() && self.j.is_empty()
    }

    /// `e(I|J)` label used in DOT output.
    pub fn label(&self) -> String {
        format!("e{{{}|{}}}", self.i.label(), self.j.label())
    }

    pub fn to_face(self) -> Face {
        Face {
            i: self.i.complement(),
            j: self.j.complement(),
        }
    }

    pub fn from_face(face: Face) -> Self {
        face.to_idempotent()
    }

    fn sort_key(&self) -> (usize, NodeSet, NodeSet) {
        (self.rank(), self.i, self.j)
    }
}

impl fmt::Display for Idempotent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({},{})", self.i, self.j)
    }
}

impl fmt::Debug for Idempotent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for Idempotent {
    /// The lattice order.
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering::*;
        match (leq(self, other), leq(other, self)) {
            (true, true) => Some(Equal),
            (true, false) => Some(Less),
            (false, true) => Some(Greater),
            (false, false) => None,
        }
    }
}

/// A face `F(I,J)` in face coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face {
    pub i: NodeSet,
    pub j: NodeSet,
}

impl Face {
    pub fn to_idempotent(self) -> Idempotent {
        Idempotent::new(self.i.complement(), self.j.complement())
    }

    /// Inclusion of faces, componentwise.
    pub fn is_subface_of(&self, other: &Face) -> bool {
        self.i.is_subset(other.i) && self.j.is_subset(other.j)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({},{})", self.i, self.j)
    }
}

/// Every connected component of `J` meets `I`.
pub fn is_essential_lambda(diagram: &DynkinDiagram, i: NodeSet, j: NodeSet) -> bool {
    diagram.closure_within(i.intersection(j), j) == j
}

/// No connected component of the complement of `J` lies inside `I`.
pub fn is_essential_face(diagram: &DynkinDiagram, i: NodeSet, j: NodeSet) -> bool {
    diagram
        .connected_components(j.complement())
        .into_iter()
        .all(|comp| !comp.is_subset(i))
}

/// `I1 ⊇ I2` and `J1 ⊇ J2`.
pub fn leq(a: &Idempotent, b: &Idempotent) -> bool {
    a.i.is_superset(b.i) && a.j.is_superset(b.j)
}

/// Greatest lower bound: `e(I1 ∪ I2, J1 ∪ J2)`.
pub fn meet(a: &Idempotent, b: &Idempotent) -> Idempotent {
    Idempotent::new(a.i.union(b.i), a.j.union(b.j))
}

/// Least upper bound: `e(I1 ∩ I2, (J1 ∩ J2) \ N)` where `N` collects the
/// components of `J1 ∩ J2` that miss `I1 ∩ I2`.
pub fn join(diagram: &DynkinDiagram, a: &Idempotent, b: &Idempotent) -> Idempotent {
    let i = a.i.intersection(b.i);
    let j = a.j.intersection(b.j);
    let kept = diagram.closure_within(i.intersection(j), j);
    Idempotent::new(i, kept)
}

/// The type map: `λ_*(e) = J`, `λ^*(e)` = nodes outside `I` commuting with all
/// of `J`, and `λ(e)` their disjoint union.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeMapData {
    pub lambda_star_lower: NodeSet,
    pub lambda_star_upper: NodeSet,
    pub lambda: NodeSet,
}

pub fn type_map(diagram: &DynkinDiagram, e: &Idempotent) -> TypeMapData {
    let lower = e.j;
    let outside = e.i.complement();
    let touching_j = diagram.neighborhood(e.j).union(e.j);
    let upper = outside.difference(touching_j);
    TypeMapData {
        lambda_star_lower: lower,
        lambda_star_upper: upper,
        lambda: lower.union(upper),
    }
}

/// Folds [`join`] over a non-empty list.
pub fn join_all<'a, I>(diagram: &DynkinDiagram, items: I) -> Option<Idempotent>
where
    I: IntoIterator<Item = &'a Idempotent>,
{
    let mut it = items.into_iter();
    let first = *it.next()?;
    Some(it.fold(first, |acc, x| join(diagram, &acc, x)))
}

/// Writes a non-bottom element as a join of atoms, in face coordinates
/// `F(I,J) = ⋁_{i∈I} F({i},{}) ∨ ⋁_{j∈J} F({},{j})`, returned in lattice
/// coordinates.
///
/// Fails for the bottom, and on rank-one diagrams where `F({1},{})` is
/// inessential and the top is not a join of atoms.
pub fn atomic_decomposition(diagram: &DynkinDiagram, e: &Idempotent) -> Result<Vec<Idempotent>> {
    if e.is_bottom() {
        return Err(Error::precondition(
            "the bottom element is not a join of atoms",
        ));
    }
    let l = diagram.rank();
    let face = e.to_face();
    let mut atoms = Vec::with_capacity(face.i.len() + face.j.len());
    for i in face.i.iter() {
        let atom = Face {
            i: NodeSet::singleton(l, i),
            j: NodeSet::empty(l),
        };
        if !is_essential_face(diagram, atom.i, atom.j) {
            return Err(Error::Unsupported(format!(
                "{atom} is not an element of the lattice of {diagram}; {e} has no atomic decomposition"
            )));
        }
        atoms.push(atom.to_idempotent());
    }
    for j in face.j.iter() {
        let atom = Face {
            i: NodeSet::empty(l),
            j: NodeSet::singleton(l, j),
        };
        atoms.push(atom.to_idempotent());
    }
    Ok(atoms)
}

/// Number of essential pairs, scanning all `4^l` candidates.
pub fn count_essential_pairs(diagram: &DynkinDiagram, rank_cap: usize) -> Result<u64> {
    check_rank_cap(diagram, rank_cap)?;
    let l = diagram.rank();
    let full = diagram.nodes();
    let mut count = 0u64;
    for j in full.subsets() {
        for i in full.subsets() {
            if is_essential_lambda(diagram, i, j) {
                count += 1;
            }
        }
    }
    debug_assert!(count <= 1u64 << (2 * l));
    Ok(count)
}

fn check_rank_cap(diagram: &DynkinDiagram, rank_cap: usize) -> Result<()> {
    if diagram.rank() > rank_cap {
        return Err(Error::CapExceeded {
            what: "lattice enumeration rank",
            size: diagram.rank().to_string(),
            cap: rank_cap.to_string(),
        });
    }
    Ok(())
}

/// All essential pairs of a diagram with their cover relation.
#[derive(Debug, Clone)]
pub struct CrossSectionLattice {
    diagram: DynkinDiagram,
    elements: Vec<Idempotent>,
    index: HashMap<Idempotent, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl CrossSectionLattice {
    /// Enumerates the lattice. Elements are ordered by rank, then by `I`,
    /// then by `J` (lexicographic on member lists).
    ///
    /// Covers are taken to be the essential pairs obtained by deleting a
    /// single node from `I` or `J`; [`crate::oracle::covers_by_scan`] checks
    /// this against the order itself.
    pub fn enumerate(diagram: &DynkinDiagram, rank_cap: usize) -> Result<Self> {
        check_rank_cap(diagram, rank_cap)?;
        let full = diagram.nodes();
        let mut elements = Vec::new();
        for j in full.subsets() {
            for i in full.subsets() {
                if is_essential_lambda(diagram, i, j) {
                    elements.push(Idempotent::new(i, j));
                }
            }
        }
        elements.sort_by_key(Idempotent::sort_key);
        let index: HashMap<Idempotent, usize> =
            elements.iter().enumerate().map(|(k, e)| (*e, k)).collect();

        let mut up = vec![Vec::new(); elements.len()];
        let mut down = vec![Vec::new(); elements.len()];
        for (k, e) in elements.iter().enumerate() {
            let candidates =
                e.i.iter()
                    .map(|n| Idempotent::new(e.i.without(n), e.j))
                    .chain(e.j.iter().map(|n| Idempotent::new(e.i, e.j.without(n))));
            for c in candidates {
                if let Some(&t) = index.get(&c) {
                    up[k].push(t);
                    down[t].push(k);
                }
            }
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
        }

        Ok(CrossSectionLattice {
            diagram: diagram.clone(),
            elements,
            index,
            up,
            down,
        })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Idempotent] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &Idempotent {
        &self.elements[k]
    }

    pub fn index_of(&self, e: &Idempotent) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains(&self, e: &Idempotent) -> bool {
        self.index.contains_key(e)
    }

    fn require(&self, e: &Idempotent) -> Result<usize> {
        self.index_of(e).ok_or_else(|| {
            Error::invalid(format!(
                "{e} is not an element of the lattice of {}",
                self.diagram
            ))
        })
    }

    pub fn bottom(&self) -> Idempotent {
        Idempotent::bottom(self.diagram.rank())
    }

    pub fn top(&self) -> Idempotent {
        Idempotent::top(self.diagram.rank())
    }

    /// `2|S|`.
    pub fn height(&self) -> usize {
        self.elements
            .iter()
            .map(Idempotent::rank)
            .max()
            .unwrap_or(0)
    }

    /// Indices of the elements covering element `k`.
    pub fn upper_cover_indices(&self, k: usize) -> &[usize] {
        &self.up[k]
    }

    /// Indices of the elements covered by element `k`.
    pub fn lower_cover_indices(&self, k: usize) -> &[usize] {
        &self.down[k]
    }

    /// Elements covering `e`.
    pub fn covers(&self, e: &Idempotent) -> Result<Vec<Idempotent>> {
        let k = self.require(e)?;
        Ok(self.up[k].iter().map(|&t| self.elements[t]).collect())
    }

    /// Elements covered by `e`.
    pub fn covered_by(&self, e: &Idempotent) -> Result<Vec<Idempotent>> {
        let k = self.require(e)?;
        Ok(self.down[k].iter().map(|&t| self.elements[t]).collect())
    }

    /// Cover edges `(lower, upper)` as element indices.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(k, ups)| ups.iter().map(move |&t| (k, t)))
            .collect()
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<Idempotent> {
        let b = self.index[&self.bottom()];
        self.up[b].iter().map(|&t| self.elements[t]).collect()
    }

    /// Elements covered by the top.
    pub fn coatoms(&self) -> Vec<Idempotent> {
        let t = self.index[&self.top()];
        self.down[t].iter().map(|&k| self.elements[k]).collect()
    }

    pub fn meet(&self, a: &Idempotent, b: &Idempotent) -> Idempotent {
        meet(a, b)
    }

    pub fn join(&self, a: &Idempotent, b: &Idempotent) -> Idempotent {
        join(&self.diagram, a, b)
    }

    pub fn type_map(&self, e: &Idempotent) -> TypeMapData {
        type_map(&self.diagram, e)
    }

    pub fn atomic_decomposition(&self, e: &Idempotent) -> Result<Vec<Idempotent>> {
        atomic_decomposition(&self.diagram, e)
    }

    /// Indices of the closed interval `[lo, hi]`, in canonical order.
    pub fn interval(&self, lo: &Idempotent, hi: &Idempotent) -> Vec<usize> {
        (0..self.len())
            .filter(|&k| leq(lo, &self.elements[k]) && leq(&self.elements[k], hi))
            .collect()
    }

    /// `[e, top]`: the lattice of the connected stabilizer of `e`.
    pub fn upper_interval(&self, e: &Idempotent) -> Vec<usize> {
        self.interval(e, &self.top())
    }

    /// `[bottom, e]`: the lattice of the local monoid at `e`.
    pub fn lower_interval(&self, e: &Idempotent) -> Vec<usize> {
        self.interval(&self.bottom(), e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(spec: &str) -> DynkinDiagram {
        DynkinDiagram::parse(spec).unwrap()
    }

    fn set(rank: usize, nodes: &[usize]) -> NodeSet {
        NodeSet::from_nodes(rank, nodes.iter().copied()).unwrap()
    }

    fn e(rank: usize, i: &[usize], j: &[usize]) -> Idempotent {
        Idempotent::new(set(rank, i), set(rank, j))
    }

    fn lattice(spec: &str) -> CrossSectionLattice {
        CrossSectionLattice::enumerate(&d(spec), 12).unwrap()
    }

    #[test]
    fn essentiality_examples() {
        let a2 = d("A2");
        assert!(is_essential_lambda(&a2, set(2, &[1, 2]), set(2, &[1, 2])));
        assert!(!is_essential_lambda(&a2, set(2, &[]), set(2, &[1])));
        assert!(is_essential_lambda(&a2, set(2, &[1]), set(2, &[1, 2])));
        assert!(is_essential_lambda(&a2, set(2, &[]), set(2, &[])));
        let a3 = d("A3");
        assert!(!is_essential_lambda(&a3, set(3, &[1]), set(3, &[1, 3])));
        assert!(is_essential_lambda(&a3, set(3, &[1, 3]), set(3, &[1, 3])));
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(lattice("A2").len(), 11);
        assert_eq!(lattice("A1").len(), 3);
        assert_eq!(lattice("A3").len(), 41);
        assert_eq!(count_essential_pairs(&d("A3"), 12).unwrap(), 41);
        assert!(matches!(
            CrossSectionLattice::enumerate(&d("A13"), 12),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn canonical_order_matches_a2_labels() {
        let l = lattice("A2");
        let expected = [
            e(2, &[1, 2], &[1, 2]),
            e(2, &[1], &[1, 2]),
            e(2, &[1, 2], &[1]),
            e(2, &[1, 2], &[2]),
            e(2, &[2], &[1, 2]),
            e(2, &[1], &[1]),
            e(2, &[1, 2], &[]),
            e(2, &[2], &[2]),
            e(2, &[1], &[]),
            e(2, &[2], &[]),
            e(2, &[], &[]),
        ];
        assert_eq!(l.elements(), &expected);
    }

    #[test]
    fn order_examples() {
        let bottom = Idempotent::bottom(2);
        assert!(lattice("A2").elements().iter().all(|x| leq(&bottom, x)));
        assert!(leq(&e(2, &[1], &[1, 2]), &e(2, &[1], &[1])));
        assert!(!leq(&e(2, &[1], &[1]), &e(2, &[2], &[2])));
        assert_eq!(e(2, &[1], &[1]).partial_cmp(&e(2, &[2], &[2])), None);
    }

    #[test]
    fn type_map_examples() {
        let a2 = d("A2");
        let t = type_map(&a2, &e(2, &[1, 2], &[]));
        assert!(t.lambda.is_empty());
        let t = type_map(&a2, &Idempotent::bottom(2));
        assert_eq!(t.lambda_star_lower, set(2, &[1, 2]));
        assert!(t.lambda_star_upper.is_empty());
        let a3 = d("A3");
        let t = type_map(&a3, &e(3, &[1, 2, 3], &[1]));
        assert_eq!(
            (t.lambda_star_lower, t.lambda_star_upper),
            (set(3, &[1]), set(3, &[]))
        );
        let t = type_map(&a3, &e(3, &[1], &[1]));
        assert_eq!(
            (t.lambda_star_lower, t.lambda_star_upper),
            (set(3, &[1]), set(3, &[3]))
        );
        assert_eq!(t.lambda, set(3, &[1, 3]));
    }

    #[test]
    fn type_map_upper_matches_commutation_scan() {
        for dg in crate::dynkin::diagrams_in_range(&crate::dynkin::DiagramKind::ALL, 1..=4) {
            let l = CrossSectionLattice::enumerate(&dg, 12).unwrap();
            for x in l.elements() {
                let scan: Vec<usize> = (1..=dg.rank())
                    .filter(|&s| !x.i().contains(s))
                    .filter(|&s| x.j().iter().all(|t| t != s && !dg.adjacent(s, t)))
                    .collect();
                assert_eq!(
                    type_map(&dg, x).lambda_star_upper.to_vec(),
                    scan,
                    "{dg} {x}"
                );
            }
        }
    }

    #[test]
    fn meet_join_examples() {
        let a2 = d("A2");
        assert_eq!(
            meet(&e(2, &[1], &[1]), &e(2, &[1, 2], &[])),
            e(2, &[1, 2], &[1])
        );
        let x = e(2, &[1], &[1]);
        assert_eq!(meet(&x, &x), x);
        assert_eq!(meet(&Idempotent::top(2), &x), x);
        assert_eq!(
            join(&a2, &e(2, &[1], &[1, 2]), &e(2, &[2], &[1, 2])),
            Idempotent::top(2)
        );
        assert_eq!(join(&a2, &x, &Idempotent::bottom(2)), x);
        assert_eq!(
            join(&a2, &e(2, &[1], &[1, 2]), &e(2, &[1, 2], &[1])),
            e(2, &[1], &[1])
        );
    }

    #[test]
    fn face_coordinates() {
        assert_eq!(
            Idempotent::bottom(2).to_face(),
            Face {
                i: set(2, &[]),
                j: set(2, &[])
            }
        );
        assert_eq!(
            Idempotent::top(2).to_face(),
            Face {
                i: set(2, &[1, 2]),
                j: set(2, &[1, 2])
            }
        );
        let x = e(2, &[1], &[1, 2]);
        assert_eq!(
            x.to_face(),
            Face {
                i: set(2, &[2]),
                j: set(2, &[])
            }
        );
        assert_eq!(Idempotent::from_face(x.to_face()), x);
    }

    #[test]
    fn atoms_and_coatoms() {
        let a2 = lattice("A2");
        assert_eq!(
            a2.atoms(),
            vec![
                e(2, &[1], &[1, 2]),
                e(2, &[1, 2], &[1]),
                e(2, &[1, 2], &[2]),
                e(2, &[2], &[1, 2])
            ]
        );
        assert_eq!(a2.coatoms(), vec![e(2, &[1], &[]), e(2, &[2], &[])]);
        let a1 = lattice("A1");
        assert_eq!(a1.atoms(), vec![e(1, &[1], &[])]);
        assert_eq!(a1.coatoms(), vec![e(1, &[1], &[])]);
        let a3 = lattice("A3");
        assert_eq!(a3.atoms().len(), 6);
        assert_eq!(a3.coatoms().len(), 3);
    }

    #[test]
    fn atomic_decomposition_examples() {
        let a2 = d("A2");
        let x = e(2, &[1], &[1, 2]);
        assert_eq!(atomic_decomposition(&a2, &x).unwrap(), vec![x]);

        let top = Idempotent::top(2);
        let atoms = atomic_decomposition(&a2, &top).unwrap();
        assert_eq!(atoms.len(), 4);
        assert_eq!(join_all(&a2, &atoms), Some(top));

        let y = e(2, &[1], &[1]);
        let parts = atomic_decomposition(&a2, &y).unwrap();
        let faces: Vec<Face> = parts.iter().map(|p| p.to_face()).collect();
        assert_eq!(
            faces,
            vec![
                Face {
                    i: set(2, &[2]),
                    j: set(2, &[])
                },
                Face {
                    i: set(2, &[]),
                    j: set(2, &[2])
                }
            ]
        );
        assert_eq!(join_all(&a2, &parts), Some(y));

        assert!(atomic_decomposition(&a2, &Idempotent::bottom(2)).is_err());
        assert!(atomic_decomposition(&d("A1"), &Idempotent::top(1)).is_err());
    }

    #[test]
    fn hasse_counts() {
        assert_eq!(lattice("A2").hasse().len(), 16);
        assert_eq!(lattice("A1").hasse().len(), 2);
        let a3 = lattice("A3");
        let covers = a3.covers(&a3.bottom()).unwrap();
        assert_eq!(covers.len(), 6);
        assert!(covers.iter().all(|c| c.i().len() + c.j().len() == 5));
    }

    #[test]
    fn parse_element_spec() {
        let a2 = d("A2");
        assert_eq!(
            Idempotent::parse(&a2, "I=1,2;J=1").unwrap(),
            e(2, &[1, 2], &[1])
        );
        assert_eq!(Idempotent::parse(&a2, "I=;J=").unwrap(), Idempotent::top(2));
        assert!(Idempotent::parse(&a2, "I=;J=1").is_err());
        assert!(Idempotent::parse(&a2, "I=3;J=").is_err());
        assert!(Idempotent::parse(&a2, "I=1").is_err());
    }
}
