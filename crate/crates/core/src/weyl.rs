//! Exact Weyl-group computations.
//!
//! An element is stored as the integer matrix of its action on the simple
//! roots: column `j` holds the coordinates of `w(a_j)`. Products compose as
//! maps, so the matrix of `u * v` is `M(u) * M(v)` and `(u * v)(x) = u(v(x))`.
//! With this convention `w * s_i` is one step longer than `w` exactly when
//! `w(a_i)` is a positive root.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::One;

use crate::dynkin::{DiagramKind, DynkinDiagram, NodeSet};
use crate::error::{Error, Result};

/// Order of the parabolic subgroup `W_K`, from the standard order formulas
/// applied to each connected component of `K`.
pub fn weyl_order(diagram: &DynkinDiagram, subset: NodeSet) -> BigUint {
    diagram
        .classify_subdiagram(subset)
        .into_iter()
        .map(|(kind, n)| component_order(kind, n))
        .product()
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn component_order(kind: DiagramKind, n: usize) -> BigUint {
    match kind {
        DiagramKind::A => factorial(n + 1),
        DiagramKind::B | DiagramKind::C => (BigUint::one() << n) * factorial(n),
        DiagramKind::D => (BigUint::one() << (n - 1)) * factorial(n),
        DiagramKind::E => match n {
            6 => BigUint::from(51_840u32),
            7 => BigUint::from(2_903_040u32),
            8 => BigUint::from(696_729_600u32),
            _ => unreachable!("E{n}"),
        },
        DiagramKind::F => BigUint::from(1152u32),
        DiagramKind::G => BigUint::from(12u32),
    }
}

/// Index `|W| / |W_K|`.
pub fn parabolic_index(diagram: &DynkinDiagram, subset: NodeSet) -> BigUint {
    let whole = weyl_order(diagram, diagram.nodes());
    let part = weyl_order(diagram, subset);
    debug_assert!((&whole % &part) == BigUint::default());
    whole / part
}

/// Handle to an element of an enumerated [`WeylGroup`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemId(pub usize);

/// A Weyl group element as an exact integer matrix with its length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: usize,
    matrix: Vec<i32>,
    length: usize,
}

impl WeylElement {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry in row `r`, column `c` (0-based).
    pub fn entry(&self, r: usize, c: usize) -> i32 {
        self.matrix[r * self.rank + c]
    }

    pub fn matrix(&self) -> &[i32] {
        &self.matrix
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Whether `w(a_i)` is a negative root, i.e. `i` is a right descent.
    fn sends_negative(&self, i: usize) -> bool {
        (0..self.rank).all(|r| self.entry(r, i - 1) <= 0)
    }
}

/// A fully enumerated Weyl group with multiplication tables by generators.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    diagram: DynkinDiagram,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i32>, usize>,
    // right[w][i - 1] = w * s_i, left[w][i - 1] = s_i * w
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    words: Vec<Vec<usize>>,
}

impl WeylGroup {
    /// Breadth-first closure under right multiplication by simple reflections.
    /// Refuses groups larger than `cap`.
    pub fn enumerate(diagram: &DynkinDiagram, cap: u64) -> Result<Self> {
        let order = weyl_order(diagram, diagram.nodes());
        if order > BigUint::from(cap) {
            return Err(Error::CapExceeded {
                what: "Weyl group order",
                size: order.to_string(),
                cap: cap.to_string(),
            });
        }
        let l = diagram.rank();
        let mut identity = vec![0i32; l * l];
        for k in 0..l {
            identity[k * l + k] = 1;
        }

        let mut elements = vec![WeylElement {
            rank: l,
            matrix: identity.clone(),
            length: 0,
        }];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut right: Vec<Vec<usize>> = vec![vec![usize::MAX; l]];
        let mut words = vec![Vec::new()];
        let mut queue = VecDeque::from([0usize]);

        while let Some(w) = queue.pop_front() {
            for i in 1..=l {
                if right[w][i - 1] != usize::MAX {
                    continue;
                }
                // M(w s_i) differs from M(w) only in column i:
                // column i becomes -col_i; s_i(a_j) = a_j - c(i,j) a_i for j != i,
                // so w s_i (a_j) = w(a_j) - c(i,j) w(a_i).
                let cur = &elements[w].matrix;
                let mut next = cur.clone();
                for j in 1..=l {
                    let c = diagram.cartan(i, j);
                    if c == 0 || j == i {
                        continue;
                    }
                    for r in 0..l {
                        next[r * l + (j - 1)] -= c * cur[r * l + (i - 1)];
                    }
                }
                for r in 0..l {
                    next[r * l + (i - 1)] = -cur[r * l + (i - 1)];
                }
                let target = match index.get(&next) {
                    Some(&t) => t,
                    None => {
                        let t = elements.len();
                        let length = elements[w].length + 1;
                        let mut word = words[w].clone();
                        word.push(i);
                        index.insert(next.clone(), t);
                        elements.push(WeylElement {
                            rank: l,
                            matrix: next,
                            length,
                        });
                        right.push(vec![usize::MAX; l]);
                        words.push(word);
                        queue.push_back(t);
                        t
                    }
                };
                right[w][i - 1] = target;
                right[target][i - 1] = w;
            }
        }

        let n = elements.len();
        let mut inverse = vec![usize::MAX; n];
        for w in 0..n {
            let inv = words[w]
                .iter()
                .rev()
                .fold(0usize, |acc, &i| right[acc][i - 1]);
            inverse[w] = inv;
        }
        let left = (0..n)
            .map(|w| (1..=l).map(|i| inverse[right[inverse[w]][i - 1]]).collect())
            .collect();

        Ok(WeylGroup {
            diagram: diagram.clone(),
            elements,
            index,
            right,
            left,
            inverse,
            words,
        })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn ids(&self) -> impl Iterator<Item = ElemId> + '_ {
        (0..self.elements.len()).map(ElemId)
    }

    pub fn element(&self, w: ElemId) -> &WeylElement {
        &self.elements[w.0]
    }

    pub fn lookup(&self, element: &WeylElement) -> Option<ElemId> {
        self.index.get(&element.matrix).map(|&k| ElemId(k))
    }

    pub fn identity(&self) -> ElemId {
        ElemId(0)
    }

    /// The simple reflection `s_i` (1-based label).
    pub fn generator(&self, i: usize) -> ElemId {
        ElemId(self.right[0][i - 1])
    }

    pub fn length(&self, w: ElemId) -> usize {
        self.elements[w.0].length
    }

    /// The cached canonical reduced word (BFS discovery order).
    pub fn word(&self, w: ElemId) -> &[usize] {
        &self.words[w.0]
    }

    /// Reduced word as dotted labels, e.g. `1.2.1`; the identity is `id`.
    pub fn word_label(&self, w: ElemId) -> String {
        let word = self.word(w);
        if word.is_empty() {
            "id".to_string()
        } else {
            word.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    pub fn from_word(&self, word: &[usize]) -> ElemId {
        ElemId(word.iter().fold(0usize, |acc, &i| self.right[acc][i - 1]))
    }

    pub fn mul_gen(&self, w: ElemId, i: usize) -> ElemId {
        ElemId(self.right[w.0][i - 1])
    }

    pub fn gen_mul(&self, i: usize, w: ElemId) -> ElemId {
        ElemId(self.left[w.0][i - 1])
    }

    pub fn mul(&self, u: ElemId, v: ElemId) -> ElemId {
        ElemId(
            self.words[v.0]
                .iter()
                .fold(u.0, |acc, &i| self.right[acc][i - 1]),
        )
    }

    pub fn inverse(&self, w: ElemId) -> ElemId {
        ElemId(self.inverse[w.0])
    }

    /// `l(w s_i) < l(w)`.
    pub fn is_right_descent(&self, w: ElemId, i: usize) -> bool {
        self.length(self.mul_gen(w, i)) < self.length(w)
    }

    pub fn is_left_descent(&self, w: ElemId, i: usize) -> bool {
        self.length(self.gen_mul(i, w)) < self.length(w)
    }

    /// Right descents read off the matrix (`w(a_i) < 0`); agrees with
    /// [`is_right_descent`](Self::is_right_descent).
    pub fn right_descents_from_matrix(&self, w: ElemId) -> NodeSet {
        let el = self.element(w);
        let mut s = NodeSet::empty(self.rank());
        for i in 1..=self.rank() {
            if el.sends_negative(i) {
                s.insert(i);
            }
        }
        s
    }

    /// The unique element of maximal length.
    pub fn longest(&self) -> ElemId {
        // BFS order lists elements by non-decreasing length
        ElemId(self.elements.len() - 1)
    }

    /// Elements of the parabolic subgroup `W_K`.
    pub fn parabolic_subgroup(&self, subset: NodeSet) -> Vec<ElemId> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![self.identity()];
        let mut k = 0;
        while k < out.len() {
            let w = out[k];
            for i in subset.iter() {
                let v = self.mul_gen(w, i);
                if !seen[v.0] {
                    seen[v.0] = true;
                    out.push(v);
                }
            }
            k += 1;
        }
        out
    }

    /// The minimal-length element of the left coset `w W_K`, found by
    /// stripping right descents in `K`.
    pub fn min_coset_rep(&self, w: ElemId, subset: NodeSet) -> ElemId {
        let mut cur = w;
        'outer: loop {
            for i in subset.iter() {
                if self.is_right_descent(cur, i) {
                    cur = self.mul_gen(cur, i);
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Whether `w` has no right descent in `K`, i.e. `w` lies in `D_K`.
    pub fn is_min_coset_rep(&self, w: ElemId, subset: NodeSet) -> bool {
        subset.iter().all(|i| !self.is_right_descent(w, i))
    }

    /// All of `D_K`, listed in enumeration order.
    pub fn min_coset_reps(&self, subset: NodeSet) -> CosetReps {
        let reps = self
            .ids()
            .filter(|&w| self.is_min_coset_rep(w, subset))
            .collect();
        CosetReps { subset, reps }
    }

    /// The Bruhat interval `[e, w]` as a membership mask: every product of a
    /// subword of the cached reduced word of `w`.
    pub fn bruhat_lower_set(&self, w: ElemId) -> Vec<bool> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut reached = vec![self.identity()];
        for &i in self.word(w) {
            let snapshot = reached.len();
            for k in 0..snapshot {
                let v = self.mul_gen(reached[k], i);
                if !member[v.0] {
                    member[v.0] = true;
                    reached.push(v);
                }
            }
        }
        member
    }

    /// Bruhat order via the subword property.
    pub fn bruhat_leq(&self, u: ElemId, w: ElemId) -> bool {
        if u == w {
            return true;
        }
        if self.length(u) >= self.length(w) {
            return false;
        }
        self.bruhat_lower_set(w)[u.0]
    }
}

/// The minimal left coset representatives `D_K` of a parabolic subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetReps {
    pub subset: NodeSet,
    pub reps: Vec<ElemId>,
}

impl CosetReps {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}
