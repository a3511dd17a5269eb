//! Invariant checks for one diagram, gathered into a report.
//!
//! Checks marked as diagnostics are reported but do not make the report fail.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::caps::Caps;
use crate::classify::{
    boolean_interval_check, is_stabilizer_jcoirreducible, is_stabilizer_jlinear,
    is_stabilizer_jlinear_within_j, jlinear_oracle, navels, structure_descriptor, Side,
};
use crate::counting::d_seq;
use crate::dynkin::{DiagramKind, DynkinDiagram, NodeSet};
use crate::envlattice::{
    atomic_decomposition, is_essential_face, is_essential_lambda, join, join_all, leq, meet,
    CrossSectionLattice, Idempotent,
};
use crate::error::Result;
use crate::oracle;
use crate::renner::{
    bcr_leq, count_r1, count_r1_direct, is_standard, rank1_orbit_poset, standard_form,
    RennerElement,
};
use crate::weyl::{parabolic_index, weyl_order, WeylGroup};

const SEED: u64 = 0x5eed_1a77;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub diagnostic: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub diagram: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
}

impl Report {
    /// All non-diagnostic checks passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.diagnostic)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, failures: Vec<String>) {
        self.checks.push(Check {
            name,
            passed: failures.is_empty(),
            diagnostic: false,
            failures,
        });
    }

    fn push_diagnostic(&mut self, name: &'static str, failures: Vec<String>) {
        self.checks.push(Check {
            name,
            passed: failures.is_empty(),
            diagnostic: true,
            failures,
        });
    }
}

// keeps reports readable when a check fails everywhere
const MAX_FAILURES: usize = 20;

fn collect<I: IntoIterator<Item = String>>(it: I) -> Vec<String> {
    it.into_iter().take(MAX_FAILURES).collect()
}

/// Runs every check that fits within `caps` on one diagram.
pub fn verify_diagram(diagram: &DynkinDiagram, caps: &Caps) -> Result<Report> {
    let lattice = CrossSectionLattice::enumerate(diagram, caps.rank)?;
    let mut report = Report {
        diagram: diagram.name(),
        checks: Vec::new(),
        skipped: Vec::new(),
    };
    lattice_checks(&lattice, &mut report);
    classify_checks(&lattice, &mut report);
    counting_checks(&lattice, &mut report);

    let order = weyl_order(diagram, diagram.nodes());
    if order > caps.weyl.into() {
        report.skipped.push(format!(
            "Weyl group of order {order} exceeds cap {}",
            caps.weyl
        ));
        return Ok(report);
    }
    let group = WeylGroup::enumerate(diagram, caps.weyl)?;
    weyl_checks(&group, &mut report);
    if group.order() <= 2_000 {
        renner_checks(&lattice, &group, &mut report)?;
    } else {
        report.skipped.push(format!(
            "Renner checks skipped for Weyl group of order {}",
            group.order()
        ));
    }
    Ok(report)
}

/// `verify_diagram` over every diagram of rank `1..=max_rank`.
pub fn verify_all(max_rank: usize, caps: &Caps) -> Result<Vec<Report>> {
    crate::dynkin::diagrams_in_range(&DiagramKind::ALL, 1..=max_rank)
        .iter()
        .map(|d| verify_diagram(d, caps))
        .collect()
}

/// Pairs of indices: all of them when there are at most `limit`, otherwise
/// `limit` seeded random ones.
fn index_pairs(n: usize, limit: usize, seed: u64) -> Vec<(usize, usize)> {
    if n * n <= limit {
        return (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..limit)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect()
}

fn lattice_checks(l: &CrossSectionLattice, report: &mut Report) {
    let d = l.diagram();
    let r = d.rank();
    let els = l.elements();
    let full = d.nodes();

    let mut f = Vec::new();
    if els.first() != Some(&l.bottom()) || els.last() != Some(&l.top()) {
        f.push("bottom/top are not first/last in canonical order".into());
    }
    if l.height() != 2 * r {
        f.push(format!("height {} != {}", l.height(), 2 * r));
    }
    report.push("bounds_and_height", f);

    let f = collect((0..l.len()).flat_map(|k| {
        l.upper_cover_indices(k)
            .iter()
            .filter(|&&t| els[t].rank() != els[k].rank() + 1)
            .map(move |&t| format!("cover {} -> {} skips a rank", els[k], els[t]))
            .collect::<Vec<_>>()
    }));
    report.push("graded", f);

    if l.len() <= 1_500 {
        let f = collect((0..l.len()).filter_map(|k| {
            let scan = oracle::covers_by_scan(l, k);
            (scan != l.upper_cover_indices(k))
                .then(|| format!("covers of {} differ from scan", els[k]))
        }));
        report.push("covers_match_scan", f);
    } else {
        report
            .skipped
            .push("cover scan skipped (lattice too large)".into());
    }

    let mut expected_atoms: Vec<Idempotent> = full
        .iter()
        .flat_map(|s| {
            [
                Idempotent::new(full, full.without(s)),
                Idempotent::new(full.without(s), full),
            ]
        })
        .filter(|e| is_essential_lambda(d, e.i(), e.j()))
        .collect();
    expected_atoms.sort_by_key(|e| l.index_of(e));
    let atoms = l.atoms();
    let mut f = Vec::new();
    if atoms != expected_atoms {
        f.push(format!("atoms {atoms:?} != {expected_atoms:?}"));
    }
    let want = if r >= 2 { 2 * r } else { 1 };
    if atoms.len() != want {
        f.push(format!("{} atoms, expected {want}", atoms.len()));
    }
    let bottom_covers: Vec<Idempotent> = els
        .iter()
        .copied()
        .filter(|e| e.i().len() + e.j().len() == 2 * r - 1)
        .collect();
    if atoms != bottom_covers {
        f.push("covers of the bottom are not the pairs with |I|+|J| = 2|S|-1".into());
    }
    report.push("atoms", f);

    let coatoms = l.coatoms();
    let expected: Vec<Idempotent> = full
        .iter()
        .map(|s| Idempotent::new(NodeSet::singleton(r, s), NodeSet::empty(r)))
        .collect();
    let f = if coatoms == expected {
        vec![]
    } else {
        vec![format!("coatoms {coatoms:?} != {expected:?}")]
    };
    report.push("coatoms", f);

    let pairs = index_pairs(l.len(), 40_000, SEED);
    let f = collect(pairs.iter().filter_map(|&(a, b)| {
        let (x, y) = (&els[a], &els[b]);
        let m = meet(x, y);
        let j = join(d, x, y);
        let (gm, gj) = (oracle::glb(l, x, y), oracle::lub(l, x, y));
        (Some(m) != gm || Some(j) != gj || !l.contains(&m) || !l.contains(&j))
            .then(|| format!("{x} {y}: meet {m} vs {gm:?}, join {j} vs {gj:?}"))
    }));
    report.push("meet_join_oracle", f);

    let f = collect(pairs.iter().filter_map(|&(a, b)| {
        let (x, y) = (&els[a], &els[b]);
        let (fx, fy) = (x.to_face(), y.to_face());
        let ok = leq(x, y) == fx.is_subface_of(&fy)
            && Idempotent::from_face(fx) == *x
            && is_essential_face(d, fx.i, fx.j);
        (!ok).then(|| format!("face map fails on {x} {y}"))
    }));
    let mut f = f;
    if r <= 6 {
        for j in full.subsets() {
            for i in full.subsets() {
                if is_essential_lambda(d, i, j)
                    != is_essential_face(d, i.complement(), j.complement())
                {
                    f.push(format!("essentiality differs at ({i},{j})"));
                }
            }
        }
    }
    report.push("face_isomorphism", collect(f));

    let f = collect(els.iter().filter(|e| !e.is_bottom()).filter_map(|e| {
        match atomic_decomposition(d, e) {
            Ok(parts) => {
                let folded = join_all(d, &parts);
                let atoms_ok = parts.iter().all(|p| atoms.contains(p));
                (folded != Some(*e) || !atoms_ok)
                    .then(|| format!("{e}: atoms {parts:?} join to {folded:?}"))
            }
            // rank one: F({1},{}) is not in the lattice, so the top is not atomic
            Err(_) if r == 1 && e.is_top() => None,
            Err(err) => Some(format!("{e}: {err}")),
        }
    }));
    report.push("atomicity", f);
}

fn classify_checks(l: &CrossSectionLattice, report: &mut Report) {
    let d = l.diagram();
    let r = d.rank();
    let els = l.elements();
    let non_top = || els.iter().filter(|e| !e.is_top());

    let f = collect(non_top().filter_map(|e| {
        let closed = is_stabilizer_jcoirreducible(l, e).unwrap_or(false);
        let scan = oracle::upper_interval_unique_coatom(l, e);
        (closed != scan).then(|| format!("{e}: |I|=1 is {closed}, interval scan {scan}"))
    }));
    report.push("jcoirreducible_criterion", f);

    let f = collect(non_top().filter(|e| e.i().len() == 1).filter_map(|e| {
        let closed = is_stabilizer_jlinear_within_j(d, e);
        let scan = jlinear_oracle(l, e);
        (closed != scan).then(|| format!("{e}: relative criterion {closed}, scan {scan}"))
    }));
    report.push("jlinear_relative_criterion", f);

    if !matches!(d.kind(), DiagramKind::D | DiagramKind::E) {
        let f = collect(non_top().filter(|e| e.i().len() == 1).filter_map(|e| {
            let leaf = is_stabilizer_jlinear(d, e).unwrap_or(false);
            let scan = jlinear_oracle(l, e);
            (leaf != scan).then(|| format!("{e}: s={} leaf is {leaf}, interval scan {scan}", e.i()))
        }));
        report.push_diagnostic("jlinear_leaf_criterion", f);
    }

    let mut f = Vec::new();
    let ns = navels(l);
    let expected = Idempotent::new(d.nodes(), NodeSet::empty(r));
    if ns != [expected] {
        f.push(format!("navels {ns:?}, expected [{expected}]"));
    }
    for side in [Side::Lower, Side::Upper] {
        let got = boolean_interval_check(l, &expected, side);
        if got != (true, Some(r)) {
            f.push(format!("{side:?} interval of the navel: {got:?}"));
        }
    }
    report.push("navel", f);

    let f = collect(els.iter().filter_map(|e| {
        let s = structure_descriptor(d, e);
        (!s.is_consistent()).then(|| format!("{e}: {s:?}"))
    }));
    report.push("descriptor_consistency", f);

    if l.len() <= 600 {
        let scans: Vec<bool> = els
            .iter()
            .map(|e| !e.is_top() && oracle::upper_interval_unique_coatom(l, e))
            .collect();
        let f = collect((0..l.len()).flat_map(|a| {
            let scans = &scans;
            (0..l.len()).filter_map(move |b| {
                let bad = scans[a] && leq(&els[a], &els[b]) && !els[b].is_top() && !scans[b];
                bad.then(|| format!("{} <= {} loses J-coirreducibility", els[a], els[b]))
            })
        }));
        report.push("jcoirreducible_monotone", f);
    }
}

fn counting_checks(l: &CrossSectionLattice, report: &mut Report) {
    let d = l.diagram();
    let r = d.rank();
    let d_r = d_seq(r);
    let f = if num_bigint::BigInt::from(l.len()) == d_r {
        vec![]
    } else {
        vec![format!("{} elements, d_{r} = {d_r}", l.len())]
    };
    // the count only depends on the graph, and every path diagram gives d_r
    if matches!(
        d.kind(),
        DiagramKind::A | DiagramKind::B | DiagramKind::C | DiagramKind::F | DiagramKind::G
    ) {
        report.push("size_matches_d", f);
    }
}

fn weyl_checks(w: &WeylGroup, report: &mut Report) {
    let d = w.diagram();
    let full = d.nodes();
    let mut f = Vec::new();
    let order = weyl_order(d, full);
    if num_bigint::BigUint::from(w.order()) != order {
        f.push(format!(
            "enumerated {} elements, formula {order}",
            w.order()
        ));
    }
    let max_len = w.length(w.longest());
    let longest: Vec<_> = w.ids().filter(|&x| w.length(x) == max_len).collect();
    if longest.len() != 1 {
        f.push(format!("{} elements of maximal length", longest.len()));
    }
    f.extend(collect(
        w.ids()
            .filter(|&x| w.length(x) != w.length(w.inverse(x)))
            .map(|x| format!("length of {} not inverse-symmetric", w.word_label(x))),
    ));
    report.push("weyl_order", f);

    if w.order() << d.rank() <= 5_000_000 {
        let f = collect(full.subsets().filter_map(|i| {
            let reps = w.min_coset_reps(i).len();
            let idx = parabolic_index(d, i);
            (num_bigint::BigUint::from(reps) != idx)
                .then(|| format!("|D_{i}| = {reps}, index {idx}"))
        }));
        report.push("coset_counts", f);
    }

    let mut f = Vec::new();
    for i in [NodeSet::empty(d.rank()), full.without(1), full] {
        let sub = w.parabolic_subgroup(i);
        let reps = w.min_coset_reps(i).reps;
        let mut hit = vec![false; w.order()];
        for &rep in &reps {
            for &u in &sub {
                let x = w.mul(rep, u);
                if hit[x.0] {
                    f.push(format!("{} hit twice for K = {i}", w.word_label(x)));
                }
                hit[x.0] = true;
                if w.length(x) != w.length(rep) + w.length(u) {
                    f.push(format!("length not additive for K = {i}"));
                }
            }
        }
        if hit.iter().any(|h| !h) {
            f.push(format!("cosets for K = {i} do not cover W"));
        }
    }
    report.push("coset_factorization", collect(f));

    if w.order() <= 400 {
        let lower: Vec<Vec<bool>> = w.ids().map(|x| w.bruhat_lower_set(x)).collect();
        let mut f = Vec::new();
        let top = w.longest();
        for x in w.ids() {
            if !lower[x.0][0] || !lower[top.0][x.0] {
                f.push(format!(
                    "{} not between identity and longest",
                    w.word_label(x)
                ));
            }
            for y in w.ids() {
                if x != y && lower[y.0][x.0] && lower[x.0][y.0] {
                    f.push("Bruhat order not antisymmetric".into());
                }
                if lower[y.0][x.0] && x != y && w.length(x) >= w.length(y) {
                    f.push("Bruhat order does not raise length".into());
                }
            }
        }
        report.push("bruhat_order", collect(f));
    }
}

fn renner_checks(l: &CrossSectionLattice, w: &WeylGroup, report: &mut Report) -> Result<()> {
    let d = l.diagram();
    if d.rank() < 2 {
        report
            .skipped
            .push("rank-one orbit count needs rank >= 2".into());
    } else {
        let formula = count_r1(d)?;
        let direct = count_r1_direct(l, w)?;
        let f = if formula == direct {
            vec![]
        } else {
            vec![format!("formula {formula}, direct {direct}")]
        };
        report.push("r1_count", f);
    }

    let mut f = Vec::new();
    for e in l.atoms() {
        let poset = rank1_orbit_poset(w, &e)?;
        let expected = if e.j() == d.nodes() {
            1
        } else {
            let idx = w.order() / w.parabolic_subgroup(e.j()).len();
            idx * idx
        };
        if poset.len() != expected {
            f.push(format!("|W{e}W| = {}, expected {expected}", poset.len()));
        }
        if poset.len() <= 64 {
            for (p, &(a, b)) in poset.elements.iter().enumerate() {
                let x = RennerElement { a, e, b };
                for (q, &(c, dd)) in poset.elements.iter().enumerate() {
                    let y = RennerElement { a: c, e, b: dd };
                    if bcr_leq(w, &x, &y)? != poset.leq(p, q) {
                        f.push(format!("BCR order differs from product order in W{e}W"));
                    }
                }
            }
        }
    }
    report.push("rank1_orbits", collect(f));

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ d.rank() as u64);
    let mut f = Vec::new();
    for _ in 0..200 {
        let e = l.elements()[rng.gen_range(0..l.len())];
        let pick = |rng: &mut ChaCha8Rng| crate::weyl::ElemId(rng.gen_range(0..w.order()));
        let (w1, w2) = (pick(&mut rng), pick(&mut rng));
        f.extend(standard_form_failures(w, &e, w1, w2, &mut rng));
    }
    report.push("standard_form", collect(f));
    Ok(())
}

/// Membership, idempotence and absorption for one triple `(w1, e, w2)`.
pub fn standard_form_failures(
    w: &WeylGroup,
    e: &Idempotent,
    w1: crate::weyl::ElemId,
    w2: crate::weyl::ElemId,
    rng: &mut impl Rng,
) -> Vec<String> {
    let t = crate::envlattice::type_map(w.diagram(), e);
    let x = standard_form(w, w1, e, w2);
    let mut f = Vec::new();
    let tag = || format!("({}, {e}, {})", w.word_label(w1), w.word_label(w2));
    if !is_standard(w, &x) {
        f.push(format!("{} not in standard form", tag()));
    }
    if standard_form(w, x.a, e, w.inverse(x.b)) != x {
        f.push(format!("{} not idempotent", tag()));
    }
    let fixing = w.parabolic_subgroup(t.lambda_star_lower);
    let v = fixing[rng.gen_range(0..fixing.len())];
    if standard_form(w, w.mul(w1, v), e, w2) != x {
        f.push(format!("{} not absorbing W_*(e)", tag()));
    }
    let centralizing = w.parabolic_subgroup(t.lambda);
    let u = centralizing[rng.gen_range(0..centralizing.len())];
    if standard_form(w, w.mul(w1, u), e, w2) != standard_form(w, w1, e, w.mul(u, w2)) {
        f.push(format!("{} does not commute W(e) across e", tag()));
    }
    f
}
