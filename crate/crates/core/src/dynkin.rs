//! Dynkin diagrams of the simple types and subset combinatorics on their nodes.
//!
//! Nodes carry Bourbaki labels `1..=l`:
//!
//! ```text
//! A_n  1 - 2 - ... - n
//! B_n  1 - 2 - ... - (n-1) => n        n short
//! C_n  1 - 2 - ... - (n-1) <= n        n long
//! D_n  1 - 2 - ... - (n-2) - (n-1)
//!                      \
//!                       n
//! E_n  1 - 3 - 4 - 5 - ... - n,  2 attached to 4
//! F_4  1 - 2 => 3 - 4                  1, 2 long
//! G_2  1 <≡ 2                          2 long
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest rank a [`NodeSet`] can hold.
pub const MAX_NODES: usize = 64;

/// Letter of a simple (crystallographic) Dynkin type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramKind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl DiagramKind {
    pub const ALL: [DiagramKind; 7] = [
        DiagramKind::A,
        DiagramKind::B,
        DiagramKind::C,
        DiagramKind::D,
        DiagramKind::E,
        DiagramKind::F,
        DiagramKind::G,
    ];

    pub fn letter(self) -> char {
        match self {
            DiagramKind::A => 'A',
            DiagramKind::B => 'B',
            DiagramKind::C => 'C',
            DiagramKind::D => 'D',
            DiagramKind::E => 'E',
            DiagramKind::F => 'F',
            DiagramKind::G => 'G',
        }
    }

    /// Human-readable range of admissible ranks.
    pub fn allowed_ranks(self) -> &'static str {
        match self {
            DiagramKind::A => "n >= 1",
            DiagramKind::B => "n >= 2",
            DiagramKind::C => "n >= 3",
            DiagramKind::D => "n >= 4",
            DiagramKind::E => "n in {6, 7, 8}",
            DiagramKind::F => "n = 4",
            DiagramKind::G => "n = 2",
        }
    }

    pub fn accepts_rank(self, rank: usize) -> bool {
        if rank == 0 || rank > MAX_NODES {
            return false;
        }
        match self {
            DiagramKind::A => true,
            DiagramKind::B => rank >= 2,
            DiagramKind::C => rank >= 3,
            DiagramKind::D => rank >= 4,
            DiagramKind::E => (6..=8).contains(&rank),
            DiagramKind::F => rank == 4,
            DiagramKind::G => rank == 2,
        }
    }

    pub fn check_rank(self, rank: usize) -> Result<()> {
        if self.accepts_rank(rank) {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "{}{} is not a valid diagram: {} requires {}",
                self.letter(),
                rank,
                self.letter(),
                self.allowed_ranks()
            )))
        }
    }
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for DiagramKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(DiagramKind::A),
            "B" => Ok(DiagramKind::B),
            "C" => Ok(DiagramKind::C),
            "D" => Ok(DiagramKind::D),
            "E" => Ok(DiagramKind::E),
            "F" => Ok(DiagramKind::F),
            "G" => Ok(DiagramKind::G),
            _ => Err(Error::invalid(format!("unknown diagram letter {s:?}"))),
        }
    }
}

/// A subset of the nodes `{1..=rank}` of a diagram.
///
/// Ordering is lexicographic on the increasing list of members, so
/// `{1} < {1,2} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeSet {
    bits: u64,
    rank: u8,
}

impl NodeSet {
    fn mask(rank: usize) -> u64 {
        if rank >= 64 {
            u64::MAX
        } else {
            (1u64 << rank) - 1
        }
    }

    pub fn empty(rank: usize) -> Self {
        assert!(rank <= MAX_NODES, "rank {rank} exceeds {MAX_NODES}");
        NodeSet {
            bits: 0,
            rank: rank as u8,
        }
    }

    pub fn full(rank: usize) -> Self {
        assert!(rank <= MAX_NODES, "rank {rank} exceeds {MAX_NODES}");
        NodeSet {
            bits: Self::mask(rank),
            rank: rank as u8,
        }
    }

    pub fn singleton(rank: usize, node: usize) -> Self {
        let mut s = Self::empty(rank);
        s.insert(node);
        s
    }

    /// Builds a set from raw bits; bit `k` stands for node `k + 1`.
    pub fn from_bits(rank: usize, bits: u64) -> Self {
        assert!(rank <= MAX_NODES, "rank {rank} exceeds {MAX_NODES}");
        assert_eq!(bits & !Self::mask(rank), 0, "bits outside rank {rank}");
        NodeSet {
            bits,
            rank: rank as u8,
        }
    }

    pub fn from_nodes<I: IntoIterator<Item = usize>>(rank: usize, nodes: I) -> Result<Self> {
        let mut s = Self::empty(rank);
        for n in nodes {
            if n == 0 || n > rank {
                return Err(Error::invalid(format!("node {n} outside 1..={rank}")));
            }
            s.insert(n);
        }
        Ok(s)
    }

    /// Parses a comma separated list such as `"1,3"`; the empty string is `{}`.
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut nodes = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let n: usize = part
                .parse()
                .map_err(|_| Error::invalid(format!("{part:?} is not a node label")))?;
            nodes.push(n);
        }
        Self::from_nodes(rank, nodes)
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn rank(self) -> usize {
        self.rank as usize
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, node: usize) -> bool {
        node >= 1 && node <= self.rank() && self.bits & (1 << (node - 1)) != 0
    }

    pub fn insert(&mut self, node: usize) {
        assert!(
            node >= 1 && node <= self.rank(),
            "node {node} outside 1..={}",
            self.rank
        );
        self.bits |= 1 << (node - 1);
    }

    pub fn remove(&mut self, node: usize) {
        if node >= 1 && node <= self.rank() {
            self.bits &= !(1 << (node - 1));
        }
    }

    pub fn with(mut self, node: usize) -> Self {
        self.insert(node);
        self
    }

    pub fn without(mut self, node: usize) -> Self {
        self.remove(node);
        self
    }

    fn same_ambient(self, other: Self) {
        debug_assert_eq!(self.rank, other.rank, "node sets of different ambient rank");
    }

    pub fn union(self, other: Self) -> Self {
        self.same_ambient(other);
        NodeSet {
            bits: self.bits | other.bits,
            rank: self.rank,
        }
    }

    pub fn intersection(self, other: Self) -> Self {
        self.same_ambient(other);
        NodeSet {
            bits: self.bits & other.bits,
            rank: self.rank,
        }
    }

    pub fn difference(self, other: Self) -> Self {
        self.same_ambient(other);
        NodeSet {
            bits: self.bits & !other.bits,
            rank: self.rank,
        }
    }

    pub fn complement(self) -> Self {
        NodeSet {
            bits: !self.bits & Self::mask(self.rank()),
            rank: self.rank,
        }
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.same_ambient(other);
        self.bits & !other.bits == 0
    }

    pub fn is_superset(self, other: Self) -> bool {
        other.is_subset(self)
    }

    pub fn intersects(self, other: Self) -> bool {
        self.bits & other.bits != 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let k = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(k + 1)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min(self) -> Option<usize> {
        self.iter().next()
    }

    /// Comma separated members without braces, e.g. `1,2`.
    pub fn label(self) -> String {
        self.iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// All subsets of `self`, in increasing order of their bit patterns.
    pub fn subsets(self) -> impl Iterator<Item = NodeSet> {
        let full = self.bits;
        let rank = self.rank;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(NodeSet { bits: cur, rank })
        })
    }
}

impl Ord for NodeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.rank.cmp(&other.rank))
    }
}

impl PartialOrd for NodeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.label())
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for NodeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// An edge of a Dynkin diagram. For multiplicity > 1, `long_end` is the node
/// carrying the longer root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u8,
    pub long_end: Option<usize>,
}

impl Edge {
    fn simple(a: usize, b: usize) -> Self {
        Edge {
            a,
            b,
            multiplicity: 1,
            long_end: None,
        }
    }

    fn multiple(long: usize, short: usize, multiplicity: u8) -> Self {
        Edge {
            a: long.min(short),
            b: long.max(short),
            multiplicity,
            long_end: Some(long),
        }
    }
}

/// A standard Dynkin diagram of a simple type.
#[derive(Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    kind: DiagramKind,
    rank: usize,
    edges: Vec<Edge>,
    // adjacency[k] is the neighbour mask of node k + 1
    adjacency: Vec<u64>,
    cartan: Vec<Vec<i32>>,
}

impl DynkinDiagram {
    /// The standard diagram of type `kind` and the given rank.
    pub fn build(kind: DiagramKind, rank: usize) -> Result<Self> {
        kind.check_rank(rank)?;
        let n = rank;
        let mut edges = Vec::new();
        match kind {
            DiagramKind::A => {
                edges.extend((1..n).map(|i| Edge::simple(i, i + 1)));
            }
            DiagramKind::B => {
                edges.extend((1..n - 1).map(|i| Edge::simple(i, i + 1)));
                edges.push(Edge::multiple(n - 1, n, 2));
            }
            DiagramKind::C => {
                edges.extend((1..n - 1).map(|i| Edge::simple(i, i + 1)));
                edges.push(Edge::multiple(n, n - 1, 2));
            }
            DiagramKind::D => {
                edges.extend((1..n - 1).map(|i| Edge::simple(i, i + 1)));
                edges.push(Edge::simple(n - 2, n));
            }
            DiagramKind::E => {
                edges.push(Edge::simple(1, 3));
                edges.push(Edge::simple(2, 4));
                edges.extend((3..n).map(|i| Edge::simple(i, i + 1)));
            }
            DiagramKind::F => {
                edges.push(Edge::simple(1, 2));
                edges.push(Edge::multiple(2, 3, 2));
                edges.push(Edge::simple(3, 4));
            }
            DiagramKind::G => {
                edges.push(Edge::multiple(2, 1, 3));
            }
        }

        let mut adjacency = vec![0u64; n];
        let mut cartan = vec![vec![0i32; n]; n];
        for (k, row) in cartan.iter_mut().enumerate() {
            row[k] = 2;
        }
        for e in &edges {
            adjacency[e.a - 1] |= 1 << (e.b - 1);
            adjacency[e.b - 1] |= 1 << (e.a - 1);
            // cartan[i][j] = 2(a_i, a_j) / (a_i, a_i)
            let (ab, ba) = match e.long_end {
                None => (-1, -1),
                Some(long) if long == e.a => (-1, -(e.multiplicity as i32)),
                Some(_) => (-(e.multiplicity as i32), -1),
            };
            cartan[e.a - 1][e.b - 1] = ab;
            cartan[e.b - 1][e.a - 1] = ba;
        }

        Ok(DynkinDiagram {
            kind,
            rank,
            edges,
            adjacency,
            cartan,
        })
    }

    /// Parses a case-insensitive spec such as `"A4"`, `"f4"` or `"D5"`.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let mut chars = spec.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::invalid("empty diagram spec"))?;
        let kind: DiagramKind = letter.to_string().parse()?;
        let digits = chars.as_str();
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::invalid(format!("diagram spec {spec:?} lacks a numeric rank")))?;
        Self::build(kind, rank)
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Short name such as `B3`.
    pub fn name(&self) -> String {
        format!("{}{}", self.kind.letter(), self.rank)
    }

    /// The full node set `S`.
    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.rank)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Cartan integer `2(a_i, a_j)/(a_i, a_i)` for 1-based labels.
    pub fn cartan(&self, i: usize, j: usize) -> i32 {
        self.cartan[i - 1][j - 1]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i - 1] & (1 << (j - 1)) != 0
    }

    pub fn neighbors(&self, node: usize) -> NodeSet {
        NodeSet::from_bits(self.rank, self.adjacency[node - 1])
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node - 1].count_ones() as usize
    }

    /// Union of the neighbourhoods of the members of `set`.
    pub fn neighborhood(&self, set: NodeSet) -> NodeSet {
        let bits = set.iter().fold(0u64, |acc, n| acc | self.adjacency[n - 1]);
        NodeSet::from_bits(self.rank, bits)
    }

    /// Nodes of `within` reachable from `seeds` through nodes of `within`.
    pub fn closure_within(&self, seeds: NodeSet, within: NodeSet) -> NodeSet {
        let mut reached = seeds.intersection(within);
        loop {
            let next = reached.union(self.neighborhood(reached).intersection(within));
            if next == reached {
                return reached;
            }
            reached = next;
        }
    }

    /// Connected components of the subdiagram induced on `set`, sorted by
    /// their smallest label.
    pub fn connected_components(&self, set: NodeSet) -> Vec<NodeSet> {
        let mut rest = set;
        let mut out = Vec::new();
        while let Some(start) = rest.min() {
            let comp = self.closure_within(NodeSet::singleton(self.rank, start), set);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Members of `set` joined by an edge to some node outside `set`.
    pub fn end_nodes(&self, set: NodeSet) -> NodeSet {
        let outside = set.complement();
        let bits = set
            .iter()
            .filter(|&u| self.neighbors(u).intersects(outside))
            .fold(0u64, |acc, u| acc | (1 << (u - 1)));
        NodeSet::from_bits(self.rank, bits)
    }

    /// Nodes of degree at most one in the whole diagram.
    pub fn leaf_nodes(&self) -> NodeSet {
        self.leaves_within(self.nodes())
    }

    /// Nodes of `set` with at most one neighbour inside `set`.
    pub fn leaves_within(&self, set: NodeSet) -> NodeSet {
        let bits = set
            .iter()
            .filter(|&u| self.neighbors(u).intersection(set).len() <= 1)
            .fold(0u64, |acc, u| acc | (1 << (u - 1)));
        NodeSet::from_bits(self.rank, bits)
    }

    /// Isomorphism type of each connected component of `set`, in the order
    /// of [`connected_components`](Self::connected_components).
    ///
    /// A two-node double bond is reported as `B2`.
    pub fn classify_subdiagram(&self, set: NodeSet) -> Vec<(DiagramKind, usize)> {
        self.connected_components(set)
            .into_iter()
            .map(|comp| self.classify_component(comp))
            .collect()
    }

    fn classify_component(&self, comp: NodeSet) -> (DiagramKind, usize) {
        let n = comp.len();
        if n == 1 {
            return (DiagramKind::A, 1);
        }
        let inner: Vec<Edge> = self
            .edges
            .iter()
            .copied()
            .filter(|e| comp.contains(e.a) && comp.contains(e.b))
            .collect();
        let degree = |u: usize| self.neighbors(u).intersection(comp).len();

        if inner.iter().any(|e| e.multiplicity == 3) {
            return (DiagramKind::G, 2);
        }
        if let Some(double) = inner.iter().find(|e| e.multiplicity == 2) {
            if n == 2 {
                return (DiagramKind::B, 2);
            }
            if degree(double.a) == 2 && degree(double.b) == 2 {
                return (DiagramKind::F, 4);
            }
            let leaf = if degree(double.a) == 1 {
                double.a
            } else {
                double.b
            };
            return if double.long_end == Some(leaf) {
                (DiagramKind::C, n)
            } else {
                (DiagramKind::B, n)
            };
        }

        let Some(branch) = comp.iter().find(|&u| degree(u) == 3) else {
            return (DiagramKind::A, n);
        };
        let mut arms: Vec<usize> = self
            .neighbors(branch)
            .intersection(comp)
            .iter()
            .map(|start| {
                let mut prev = branch;
                let mut cur = start;
                let mut len = 1;
                loop {
                    let next = self.neighbors(cur).intersection(comp).without(prev).min();
                    match next {
                        Some(nx) => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        None => return len,
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        match arms.as_slice() {
            [1, 1, _] => (DiagramKind::D, n),
            [1, 2, 2] => (DiagramKind::E, 6),
            [1, 2, 3] => (DiagramKind::E, 7),
            [1, 2, 4] => (DiagramKind::E, 8),
            other => unreachable!("branch arms {other:?} do not occur in a simple diagram"),
        }
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.rank)
    }
}

impl fmt::Debug for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DynkinDiagram({})", self)
    }
}

impl FromStr for DynkinDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Every diagram of the given kinds whose rank lies in `ranks`.
pub fn diagrams_in_range(
    kinds: &[DiagramKind],
    ranks: std::ops::RangeInclusive<usize>,
) -> Vec<DynkinDiagram> {
    kinds
        .iter()
        .flat_map(|&k| {
            ranks
                .clone()
                .filter_map(move |r| DynkinDiagram::build(k, r).ok())
        })
        .collect()
}
