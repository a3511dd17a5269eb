//! Classification of the local monoids attached to an idempotent `e`: the
//! connected stabilizer `M_e`, whose lattice is `[e, top]`, and `eMe`, whose
//! lattice is `[bottom, e]`.

use serde::Serialize;

use crate::dynkin::{DiagramKind, DynkinDiagram, NodeSet};
use crate::envlattice::{leq, type_map, CrossSectionLattice, Idempotent};
use crate::error::{Error, Result};
use crate::oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StabilizerClass {
    JCoirreducible { s: usize },
    MaximalJCoirreducible { s: usize },
    TopElement,
    General,
}

impl StabilizerClass {
    pub fn name(&self) -> &'static str {
        match self {
            StabilizerClass::JCoirreducible { .. } => "j_coirreducible",
            StabilizerClass::MaximalJCoirreducible { .. } => "maximal_j_coirreducible",
            StabilizerClass::TopElement => "top",
            StabilizerClass::General => "general",
        }
    }
}

/// Class of `M_e` read off from the coordinates of `e`.
pub fn stabilizer_class(e: &Idempotent) -> StabilizerClass {
    if e.is_top() {
        return StabilizerClass::TopElement;
    }
    match single_node(e.i()) {
        Some(s) if e.j().len() == e.ambient_rank() => StabilizerClass::MaximalJCoirreducible { s },
        Some(s) => StabilizerClass::JCoirreducible { s },
        None => StabilizerClass::General,
    }
}

fn single_node(set: NodeSet) -> Option<usize> {
    if set.len() == 1 {
        set.min()
    } else {
        None
    }
}

/// `M_e` is J-coirreducible exactly when `I` is a single node.
pub fn is_stabilizer_jcoirreducible(lattice: &CrossSectionLattice, e: &Idempotent) -> Result<bool> {
    if !lattice.contains(e) {
        return Err(Error::invalid(format!(
            "{e} is not an element of the lattice of {}",
            lattice.diagram()
        )));
    }
    if e.is_top() {
        return Err(Error::precondition(
            "the top element has no J-coirreducibility class",
        ));
    }
    Ok(e.i().len() == 1)
}

/// `e = e({s}, S)`.
pub fn is_maximal_jcoirr(e: &Idempotent) -> bool {
    e.i().len() == 1 && e.j().len() == e.ambient_rank()
}

/// Type of `M_e` for a maximal J-coirreducible `e({s}, S)`: `S \ {s}`.
pub fn stabilizer_jcoirr_type(diagram: &DynkinDiagram, e: &Idempotent) -> Result<NodeSet> {
    if !is_maximal_jcoirr(e) || e.ambient_rank() != diagram.rank() {
        return Err(Error::precondition(format!(
            "{e} is not of the form e({{s}}, S) in {diagram}"
        )));
    }
    Ok(e.i().complement())
}

/// Leaf criterion for J-linearity of `M_e`: `I = {s}` with `s` of degree at
/// most one in the whole diagram.
///
/// Only offered for diagrams whose connected subdiagrams are all paths.
pub fn is_stabilizer_jlinear(diagram: &DynkinDiagram, e: &Idempotent) -> Result<bool> {
    let Some(s) = single_node(e.i()) else {
        return Ok(false);
    };
    match diagram.kind() {
        DiagramKind::D | DiagramKind::E => Err(Error::Unsupported(format!(
            "the leaf criterion is not offered for {diagram}; use the interval scan"
        ))),
        _ => Ok(diagram.leaf_nodes().contains(s)),
    }
}

/// Criterion relative to `J`: `I = {s}` and either `J` is empty or `J` is a
/// path with `s` at one end. Agrees with the interval scan on every diagram.
pub fn is_stabilizer_jlinear_within_j(diagram: &DynkinDiagram, e: &Idempotent) -> bool {
    let Some(s) = single_node(e.i()) else {
        return false;
    };
    if e.j().is_empty() {
        return true;
    }
    let leaves = diagram.leaves_within(e.j());
    leaves.contains(s) && leaves.len() <= 2
}

/// Interval scan for J-linearity: `[e, top]` has one atom and one coatom.
pub fn jlinear_oracle(lattice: &CrossSectionLattice, e: &Idempotent) -> bool {
    oracle::upper_interval_linear_ends(lattice, e)
}

/// All elements with empty type.
pub fn navels(lattice: &CrossSectionLattice) -> Vec<Idempotent> {
    lattice
        .elements()
        .iter()
        .copied()
        .filter(|e| type_map(lattice.diagram(), e).lambda.is_empty())
        .collect()
}

/// The navel, when there is exactly one.
pub fn navel(lattice: &CrossSectionLattice) -> Option<Idempotent> {
    match navels(lattice).as_slice() {
        [only] => Some(*only),
        _ => None,
    }
}

/// Weyl groups of `eMe` and `M_e` as parabolic subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalWeylData {
    pub weyl_of_eme: NodeSet,
    pub weyl_of_me: NodeSet,
}

pub fn local_weyl(diagram: &DynkinDiagram, e: &Idempotent) -> LocalWeylData {
    let t = type_map(diagram, e);
    LocalWeylData {
        weyl_of_eme: t.lambda_star_upper,
        weyl_of_me: t.lambda_star_lower,
    }
}

/// Non-toral part of a group descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Derived {
    Trivial,
    G0,
    /// The Levi subgroup of `G0` of the given type.
    Levi(NodeSet),
}

/// A group written as `derived x (k^*)^torus`. `torus` is `None` when the
/// extra torus factor is not determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroupShape {
    pub derived: Derived,
    pub torus: Option<usize>,
}

impl GroupShape {
    fn torus(rank: usize) -> Self {
        GroupShape {
            derived: Derived::Trivial,
            torus: Some(rank),
        }
    }

    fn g0(torus: usize) -> Self {
        GroupShape {
            derived: Derived::G0,
            torus: Some(torus),
        }
    }

    /// `Levi(K) x torus`, folding `Levi(S) = G0` and `Levi({}) = T0`.
    fn levi(diagram: &DynkinDiagram, k: NodeSet, torus: Option<usize>) -> Self {
        if k.len() == diagram.rank() {
            GroupShape {
                derived: Derived::G0,
                torus,
            }
        } else if k.is_empty() {
            GroupShape {
                derived: Derived::Trivial,
                torus: torus.map(|t| t + diagram.rank()),
            }
        } else {
            GroupShape {
                derived: Derived::Levi(k),
                torus,
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DescriptorShape {
    Navel,
    MaximalJCoirreducible,
    RankOneFullJ,
    RankOneFullI,
    General,
}

/// Symbolic structure of the centralizer `C_G(e)`, the identity component
/// `G_e^0` of the stabilizer and the unit group of `eMe`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureDescriptor {
    pub shape: DescriptorShape,
    pub centralizer: GroupShape,
    pub stabilizer_identity: GroupShape,
    pub unit_of_eme: GroupShape,
    /// `(dim eMe, dim M_e)` when both are affine torus embeddings.
    pub torus_embedding_dims: Option<(usize, usize)>,
    /// `dim eMe`, when known.
    pub local_monoid_dim: Option<usize>,
}

impl StructureDescriptor {
    /// Torus ranks satisfy `centralizer = stabilizer + unit group` whenever
    /// all three are known.
    pub fn is_consistent(&self) -> bool {
        match (
            self.centralizer.torus,
            self.stabilizer_identity.torus,
            self.unit_of_eme.torus,
        ) {
            (Some(c), Some(s), Some(u)) => c == s + u,
            _ => true,
        }
    }
}

/// Descriptor for `e`. The navel is checked first, then `e({s}, S)`, then
/// the two families of rank one; everything else is reported from the
/// type map alone.
pub fn structure_descriptor(diagram: &DynkinDiagram, e: &Idempotent) -> StructureDescriptor {
    let l = diagram.rank();
    let full = diagram.nodes();
    let t = type_map(diagram, e);

    if e.i() == full && e.j().is_empty() {
        return StructureDescriptor {
            shape: DescriptorShape::Navel,
            centralizer: GroupShape::torus(2 * l),
            stabilizer_identity: GroupShape::torus(l),
            unit_of_eme: GroupShape::torus(l),
            torus_embedding_dims: Some((l, l)),
            local_monoid_dim: Some(l),
        };
    }
    if is_maximal_jcoirr(e) {
        return StructureDescriptor {
            shape: DescriptorShape::MaximalJCoirreducible,
            centralizer: GroupShape::g0(l - 1),
            stabilizer_identity: GroupShape::g0(0),
            unit_of_eme: GroupShape::torus(l - 1),
            torus_embedding_dims: None,
            local_monoid_dim: Some(l - 1),
        };
    }
    if e.rank() == 1 && e.j() == full {
        return StructureDescriptor {
            shape: DescriptorShape::RankOneFullJ,
            centralizer: GroupShape::g0(l - 1),
            stabilizer_identity: GroupShape::g0(l - 2),
            unit_of_eme: GroupShape::torus(1),
            torus_embedding_dims: None,
            local_monoid_dim: Some(1),
        };
    }
    if e.rank() == 1 && e.i() == full {
        return StructureDescriptor {
            shape: DescriptorShape::RankOneFullI,
            centralizer: GroupShape::levi(diagram, t.lambda_star_lower, Some(l)),
            stabilizer_identity: GroupShape::levi(diagram, t.lambda_star_lower, Some(l - 1)),
            unit_of_eme: GroupShape::torus(1),
            torus_embedding_dims: None,
            local_monoid_dim: Some(1),
        };
    }
    StructureDescriptor {
        shape: DescriptorShape::General,
        centralizer: GroupShape::levi(diagram, t.lambda, None),
        stabilizer_identity: GroupShape::levi(diagram, t.lambda_star_lower, None),
        unit_of_eme: GroupShape::levi(diagram, t.lambda_star_upper, None),
        torus_embedding_dims: None,
        local_monoid_dim: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `[bottom, e]`
    Lower,
    /// `[e, top]`
    Upper,
}

/// Whether the closed interval on the given side of `e` is a Boolean
/// lattice, and if so its height.
///
/// The test: with `A` the atoms of the interval, it has `2^|A|` elements and
/// sending each element to the set of atoms below it is an order
/// isomorphism onto the subsets of `A`.
pub fn boolean_interval_check(
    lattice: &CrossSectionLattice,
    e: &Idempotent,
    side: Side,
) -> (bool, Option<usize>) {
    let (lo, members) = match side {
        Side::Lower => (lattice.bottom(), lattice.lower_interval(e)),
        Side::Upper => (*e, lattice.upper_interval(e)),
    };
    let Some(lo_idx) = lattice.index_of(&lo) else {
        return (false, None);
    };
    let atoms: Vec<usize> = lattice
        .upper_cover_indices(lo_idx)
        .iter()
        .copied()
        .filter(|k| members.contains(k))
        .collect();
    let h = atoms.len();
    if h >= 64 || members.len() != 1usize << h {
        return (false, None);
    }
    let els = lattice.elements();
    let masks: Vec<u64> = members
        .iter()
        .map(|&x| {
            atoms
                .iter()
                .enumerate()
                .filter(|(_, &a)| leq(&els[a], &els[x]))
                .fold(0u64, |m, (bit, _)| m | (1 << bit))
        })
        .collect();
    let mut seen = masks.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != masks.len() {
        return (false, None);
    }
    for (p, &x) in members.iter().enumerate() {
        for (q, &y) in members.iter().enumerate() {
            let by_order = leq(&els[x], &els[y]);
            let by_mask = masks[p] & !masks[q] == 0;
            if by_order != by_mask {
                return (false, None);
            }
        }
    }
    (true, Some(h))
}

/// Everything the `classify` command reports for one element.
#[derive(Debug, Clone, Serialize)]
pub struct ElementClassification {
    #[serde(rename = "I")]
    pub i: NodeSet,
    #[serde(rename = "J")]
    pub j: NodeSet,
    pub class: &'static str,
    pub s: Option<usize>,
    /// Interval scan.
    pub jlinear: bool,
    /// Leaf criterion; `None` where it is not offered or `I` is not a singleton.
    pub jlinear_leaf: Option<bool>,
    pub navel: bool,
    pub local_weyl: LocalWeylData,
    pub descriptor: StructureDescriptor,
}

pub fn classify_element(lattice: &CrossSectionLattice, e: &Idempotent) -> ElementClassification {
    let d = lattice.diagram();
    let class = stabilizer_class(e);
    let s = match class {
        StabilizerClass::JCoirreducible { s } | StabilizerClass::MaximalJCoirreducible { s } => {
            Some(s)
        }
        _ => None,
    };
    ElementClassification {
        i: e.i(),
        j: e.j(),
        class: class.name(),
        s,
        jlinear: jlinear_oracle(lattice, e),
        jlinear_leaf: s.and_then(|_| is_stabilizer_jlinear(d, e).ok()),
        navel: type_map(d, e).lambda.is_empty(),
        local_weyl: local_weyl(d, e),
        descriptor: structure_descriptor(d, e),
    }
}
