//! Cospectral-mate search, spectral-determination verdicts, reconstruction
//! of the lettered admissible graphs, and replication of the finite
//! computer-search claims.

use crate::canon::{canonical_code, cycle_class_fingerprint, iso_switch_equivalent};
use crate::charpoly::char_poly_exact;
use crate::enumerate::{connected_underlying, orientation_classes, SearchConstraints};
use crate::error::SearchError;
use crate::graph::{self, MixedGraph};
use crate::poly::{cycle_type0_poly, cycle_type1_poly, path_poly, IntPolynomial};
use crate::registry::{letter_poly, Registry, LETTERS};

use rayon::prelude::*;

/// Why a mate is certainly not a switching of the target, under any
/// relabeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonEquivalence {
    DifferentUnderlying,
    DifferentCycleClasses,
    ExhaustedIsomorphisms,
}

/// One cospectral mate class.
#[derive(Debug, Clone)]
pub struct MateClass {
    pub graph: MixedGraph,
    pub char_poly: IntPolynomial,
    pub underlying_code: String,
    pub certificate: NonEquivalence,
    /// Union of catalog names when every component is recognized.
    pub name: Option<String>,
}

#[derive(Debug, Clone)]
pub struct MateReport {
    pub target: MixedGraph,
    pub char_poly: IntPolynomial,
    pub mates: Vec<MateClass>,
    /// Whether the whole order/size space was scanned.
    pub exhaustive: bool,
    pub classes_scanned: usize,
}

#[derive(Debug, Clone)]
pub enum DhsVerdict {
    Dhs,
    NotDhs(MateReport),
    Inconclusive(String),
}

impl DhsVerdict {
    pub fn is_dhs(&self) -> bool {
        matches!(self, DhsVerdict::Dhs)
    }
}

fn certificate_against(target: &MixedGraph, candidate: &MixedGraph) -> Option<NonEquivalence> {
    if canonical_code(target) != canonical_code(candidate) {
        return Some(NonEquivalence::DifferentUnderlying);
    }
    if cycle_class_fingerprint(target) != cycle_class_fingerprint(candidate) {
        return Some(NonEquivalence::DifferentCycleClasses);
    }
    if iso_switch_equivalent(target, candidate) {
        None
    } else {
        Some(NonEquivalence::ExhaustedIsomorphisms)
    }
}

/// Connected switching classes with exact polynomials, cached per
/// (order, size, degree cap): the same components recur across every
/// composition and search.
fn connected_classes(
    n: usize,
    m: usize,
    max_degree: Option<usize>,
) -> std::sync::Arc<Vec<(MixedGraph, IntPolynomial)>> {
    use std::collections::HashMap;
    use std::sync::{Arc, Mutex, OnceLock};
    type Key = (usize, usize, Option<usize>);
    type Classes = Arc<Vec<(MixedGraph, IntPolynomial)>>;
    static CACHE: OnceLock<Mutex<HashMap<Key, Classes>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(n, m, max_degree)) {
        return hit.clone();
    }
    let classes: Vec<(MixedGraph, IntPolynomial)> = connected_underlying(n, m, max_degree)
        .par_iter()
        .map(|u| {
            orientation_classes(u, true)
                .into_iter()
                .map(|g| {
                    let poly = char_poly_exact(&g);
                    (g, poly)
                })
                .collect::<Vec<_>>()
        })
        .flatten()
        .collect();
    let arc = Arc::new(classes);
    cache
        .lock()
        .unwrap()
        .insert((n, m, max_degree), arc.clone());
    arc
}

/// Exhaustive free search for cospectral mates.
///
/// Switching classes of a disjoint union are multisets of connected
/// switching classes, and characteristic polynomials multiply over
/// components, so the scan composes cached connected classes instead of
/// eliminating on whole graphs. Kept are the exactly-cospectral classes
/// that no relabeling plus switching maps back to the target.
pub fn find_mates(target: &MixedGraph, c: &SearchConstraints) -> Result<MateReport, SearchError> {
    let target_poly = char_poly_exact(target);
    let (order, size) = (target.order(), target.size());
    if order > c.max_free_order.max(12) {
        return Err(SearchError::Guard(format!(
            "free mate search capped at order {}, target has {}",
            c.max_free_order.max(12),
            order
        )));
    }
    // Connected pieces that could appear as components.
    let mut pieces: Vec<(usize, usize)> = Vec::new();
    for ni in 1..=order {
        let max_mi = (ni * ni.saturating_sub(1) / 2).min(size);
        for mi in ni.saturating_sub(1)..=max_mi {
            if mi + 1 > ni + c.corank_cap {
                continue;
            }
            pieces.push((ni, mi));
        }
    }
    let class_lists: Vec<std::sync::Arc<Vec<(MixedGraph, IntPolynomial)>>> = pieces
        .iter()
        .map(|&(ni, mi)| connected_classes(ni, mi, c.max_degree))
        .collect();

    struct Ctx<'a> {
        pieces: &'a [(usize, usize)],
        class_lists: &'a [std::sync::Arc<Vec<(MixedGraph, IntPolynomial)>>],
        target: &'a IntPolynomial,
        scanned: usize,
        matches: Vec<Vec<(usize, usize)>>,
    }

    fn compose(
        ctx: &mut Ctx,
        order_left: usize,
        size_left: usize,
        min_piece: usize,
        min_class: usize,
        product: &IntPolynomial,
        picks: &mut Vec<(usize, usize)>,
    ) {
        if order_left == 0 {
            if size_left == 0 {
                ctx.scanned += 1;
                if product == ctx.target {
                    ctx.matches.push(picks.clone());
                }
            }
            return;
        }
        for pi in min_piece..ctx.pieces.len() {
            let (ni, mi) = ctx.pieces[pi];
            if ni > order_left || mi > size_left {
                continue;
            }
            let start = if pi == min_piece { min_class } else { 0 };
            for ci in start..ctx.class_lists[pi].len() {
                let (_, poly) = &ctx.class_lists[pi][ci];
                picks.push((pi, ci));
                compose(
                    ctx,
                    order_left - ni,
                    size_left - mi,
                    pi,
                    ci,
                    &product.mul(poly),
                    picks,
                );
                picks.pop();
            }
        }
    }

    let mut ctx = Ctx {
        pieces: &pieces,
        class_lists: &class_lists,
        target: &target_poly,
        scanned: 0,
        matches: Vec::new(),
    };
    let mut picks = Vec::new();
    compose(
        &mut ctx,
        order,
        size,
        0,
        0,
        &IntPolynomial::one(),
        &mut picks,
    );
    let classes_scanned = ctx.scanned;
    let matches = std::mem::take(&mut ctx.matches);
    drop(ctx);

    let mut mates = Vec::new();
    for picks in matches {
        let mut g = MixedGraph::empty(0);
        for &(pi, ci) in &picks {
            g = g.disjoint_union(&class_lists[pi][ci].0);
        }
        let Some(certificate) = certificate_against(target, &g) else {
            continue; // the target's own class
        };
        // Distinct multisets of per-component classes are already
        // inequivalent; this merge is a cheap safety net.
        if mates
            .iter()
            .any(|m: &MateClass| iso_switch_equivalent(&m.graph, &g))
        {
            continue;
        }
        mates.push(MateClass {
            underlying_code: canonical_code(&g),
            char_poly: target_poly.clone(),
            certificate,
            name: None,
            graph: g,
        });
    }
    Ok(MateReport {
        target: target.clone(),
        char_poly: target_poly,
        mates,
        exhaustive: true,
        classes_scanned,
    })
}

/// Free-search spectral-determination verdict.
pub fn is_dhs(target: &MixedGraph, c: &SearchConstraints) -> DhsVerdict {
    match find_mates(target, c) {
        Ok(report) => {
            if report.mates.is_empty() {
                DhsVerdict::Dhs
            } else {
                DhsVerdict::NotDhs(report)
            }
        }
        Err(e) => DhsVerdict::Inconclusive(e.to_string()),
    }
}

/// A named graph with a known exact polynomial, usable as a component in
/// guided searches.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub order: usize,
    pub size: usize,
    pub poly: IntPolynomial,
    pub graph: MixedGraph,
}

/// The admissible-component catalog: paths, the three cycle kinds, the
/// pendant families, the near-path trees, reconstructed letters and the
/// theta-graph family, up to the given order.
pub fn admissible_catalog(registry: &Registry, max_order: usize) -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = Vec::new();
    let mut push = |name: String, g: MixedGraph| {
        out.push(CatalogEntry {
            name,
            order: g.order(),
            size: g.size(),
            poly: char_poly_exact(&g),
            graph: g,
        });
    };
    for n in 1..=max_order {
        push(format!("P:{n}"), graph::path(n));
    }
    for n in 3..=max_order {
        push(format!("C:{n}"), graph::cycle(n, 0).unwrap());
        push(format!("C1:{n}"), graph::cycle(n, 1).unwrap());
        push(format!("C2:{n}"), graph::cycle(n, 2).unwrap());
    }
    for n in 4..=max_order {
        push(format!("D:{n}"), graph::d_tree(n).unwrap());
    }
    for t in 1..=max_order.saturating_sub(4) {
        push(format!("Gt:{t}"), graph::g_t(t).unwrap());
        for m in 0..=max_order.saturating_sub(2 * t + 4) {
            push(format!("Gttm:{t},{m}"), graph::g_t_tm(t, m).unwrap());
        }
    }
    for spec in LETTERS {
        if spec.order <= max_order {
            if let Ok(g) = registry.get(spec.name) {
                push(spec.name.to_string(), g.clone());
            }
        }
    }
    for r in 2..=max_order.saturating_sub(2) {
        let key = format!("E:{r}");
        if let Ok(g) = registry.get(&key) {
            push(key, g.clone());
        }
    }
    out.sort_by(|a, b| (a.order, a.size, &a.name).cmp(&(b.order, b.size, &b.name)));
    out
}

/// Guided mate search: decomposes the target polynomial into a multiset of
/// catalog components with matching total order and size. Exact division
/// prunes the recursion hard.
pub fn find_mates_guided(
    target: &MixedGraph,
    registry: &Registry,
    max_order: usize,
) -> MateReport {
    let target_poly = char_poly_exact(target);
    let catalog = admissible_catalog(registry, max_order);
    let mut solutions: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    decompose(
        &catalog,
        &target_poly,
        target.order(),
        target.size(),
        0,
        &mut current,
        &mut solutions,
    );
    let mut mates = Vec::new();
    for sol in solutions {
        let mut g = MixedGraph::empty(0);
        let mut names: Vec<String> = Vec::new();
        for &idx in &sol {
            g = g.disjoint_union(&catalog[idx].graph);
            names.push(catalog[idx].name.clone());
        }
        let Some(certificate) = certificate_against(target, &g) else {
            continue;
        };
        if mates
            .iter()
            .any(|m: &MateClass| iso_switch_equivalent(&m.graph, &g) && m.name.is_some())
        {
            continue;
        }
        mates.push(MateClass {
            underlying_code: canonical_code(&g),
            char_poly: target_poly.clone(),
            certificate,
            name: Some(names.join(" + ")),
            graph: g,
        });
    }
    MateReport {
        target: target.clone(),
        char_poly: target_poly,
        mates,
        exhaustive: false,
        classes_scanned: 0,
    }
}

fn decompose(
    catalog: &[CatalogEntry],
    poly: &IntPolynomial,
    order: usize,
    size: usize,
    start: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if order == 0 {
        if size == 0 && poly.degree() == 0 {
            out.push(current.clone());
        }
        return;
    }
    for idx in start..catalog.len() {
        let e = &catalog[idx];
        if e.order > order || e.size > size {
            continue;
        }
        if let Some(q) = poly.div_exact(&e.poly) {
            current.push(idx);
            decompose(catalog, &q, order - e.order, size - e.size, idx, current, out);
            current.pop();
        }
    }
}

/// Annotates free-search mates with catalog names where each component is
/// recognized.
pub fn name_mates(report: &mut MateReport, registry: &Registry) {
    let max_order = report.target.order();
    let catalog = admissible_catalog(registry, max_order);
    for mate in &mut report.mates {
        if mate.name.is_some() {
            continue;
        }
        let comps = mate.graph.components();
        let mut names: Vec<(usize, usize, String)> = Vec::new();
        let mut all_known = true;
        for comp in &comps {
            let sub = mate.graph.induced(comp);
            let hit = catalog.iter().find(|e| {
                e.order == sub.order()
                    && e.size == sub.size()
                    && e.poly == char_poly_exact(&sub)
                    && iso_switch_equivalent(&e.graph, &sub)
            });
            match hit {
                Some(e) => names.push((e.order, e.size, e.name.clone())),
                None => {
                    all_known = false;
                    break;
                }
            }
        }
        if all_known {
            names.sort();
            mate.name = Some(
                names
                    .into_iter()
                    .map(|(_, _, n)| n)
                    .collect::<Vec<_>>()
                    .join(" + "),
            );
        }
    }
}

/// All connected switching classes with the given order and size whose exact
/// characteristic polynomial matches the fingerprint.
pub fn reconstruct_admissible(
    name: &str,
    fingerprint: &IntPolynomial,
    order: usize,
    size: usize,
) -> Result<Vec<MixedGraph>, SearchError> {
    let underlyings = connected_underlying(order, size, None);
    let hits: Vec<MixedGraph> = underlyings
        .par_iter()
        .map(|u| {
            orientation_classes(u, true)
                .into_iter()
                .filter(|g| char_poly_exact(g) == *fingerprint)
                .collect::<Vec<_>>()
        })
        .flatten()
        .collect();
    if hits.is_empty() {
        return Err(SearchError::NothingFound(name.to_string()));
    }
    Ok(hits)
}

/// Recursion polynomials of the two exceptional theta-graph orientations:
/// both satisfy phi = x phi(D_{r+1}) - 2 phi(P_r) - phi(D_r) + tail, with
/// tail 2x for the first and 2 phi(P_{r-2}) for the second.
pub fn exceptional_theta_polys(r: usize) -> (IntPolynomial, IntPolynomial) {
    assert!(r >= 3);
    let d = |k: usize| IntPolynomial::x().mul(&cycle_type1_poly(k - 1));
    let base = IntPolynomial::x()
        .mul(&d(r + 1))
        .sub(&path_poly(r).scale_i64(2))
        .sub(&d(r));
    let y1 = base.add(&IntPolynomial::x().scale_i64(2));
    let y2 = base.add(&path_poly(r - 2).scale_i64(2));
    (y1, y2)
}

/// Polynomial of the theta-graph mate component: phi(C_{2r+2}) / phi(P_r).
pub fn theta_mate_poly(r: usize) -> IntPolynomial {
    cycle_type0_poly(2 * r + 2)
        .div_exact(&path_poly(r))
        .expect("path spectrum embeds in the even cycle")
}

/// Rebuilds the whole registry from scratch: all lettered graphs, the
/// exceptional theta orientations Y1/Y2 for r = 3..=10 and the theta mates
/// E_r for r = 2..=7. Every entry is pinned by exact polynomial match plus
/// the recorded structural facts and must resolve uniquely.
pub fn build_registry() -> Result<Registry, SearchError> {
    let mut reg = Registry::new();
    for spec in LETTERS {
        let poly = letter_poly(spec.name).expect("letter spectrum");
        let classes = reconstruct_admissible(spec.name, &poly, spec.order, spec.size)?;
        let filtered: Vec<MixedGraph> = classes
            .into_iter()
            .filter(|g| {
                let mut lens: Vec<usize> = crate::cycles::simple_cycles(g)
                    .iter()
                    .map(|c| c.len())
                    .collect();
                lens.sort_unstable();
                lens == spec.cycles
            })
            .collect();
        if filtered.len() != 1 {
            return Err(SearchError::Guard(format!(
                "letter {} resolved to {} classes, expected exactly one",
                spec.name,
                filtered.len()
            )));
        }
        reg.insert(spec.name, filtered.into_iter().next().unwrap());
    }
    for r in 3..=10 {
        let (y1, y2) = exceptional_theta_polys(r);
        let underlying = graph::theta(3, 3, r, &[]).expect("theta underlying");
        let classes = orientation_classes(&underlying, true);
        let hits1: Vec<&MixedGraph> = classes
            .iter()
            .filter(|g| char_poly_exact(g) == y1)
            .collect();
        let hits2: Vec<&MixedGraph> = classes
            .iter()
            .filter(|g| char_poly_exact(g) == y2)
            .collect();
        let first = hits1
            .first()
            .ok_or_else(|| SearchError::NothingFound(format!("Y1:{r}")))?;
        reg.insert(&format!("Y1:{r}"), (*first).clone());
        // When the two polynomials coincide (r = 3) take distinct classes if
        // available.
        let second = hits2
            .iter()
            .find(|g| !iso_switch_equivalent(g, first))
            .or_else(|| hits2.first())
            .ok_or_else(|| SearchError::NothingFound(format!("Y2:{r}")))?;
        reg.insert(&format!("Y2:{r}"), (**second).clone());
    }
    for r in 2..=7 {
        let poly = theta_mate_poly(r);
        let underlying = graph::theta(3, 3, r, &[]).expect("theta underlying");
        let classes = orientation_classes(&underlying, true);
        // The published mate also exists as a signed graph on the same
        // underlying graph, so its mixed form has only real cycle values.
        let hits: Vec<MixedGraph> = classes
            .into_iter()
            .filter(|g| {
                char_poly_exact(g) == poly
                    && crate::cycles::simple_cycles(g).iter().all(|c| c.is_real())
            })
            .collect();
        if hits.len() != 1 {
            return Err(SearchError::Guard(format!(
                "E:{r} resolved to {} all-real classes, expected exactly one",
                hits.len()
            )));
        }
        reg.insert(&format!("E:{r}"), hits.into_iter().next().unwrap());
    }
    Ok(reg)
}

/// Families covered by the finite computer-search replication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutFamily {
    /// Connected order-5 graphs with a degree-4 vertex.
    Deg4Order5,
    /// All orientations of one theta graph.
    Theta(usize, usize, usize),
    /// All orientations of the complete graph on four vertices.
    K4Underlying,
    /// Theta(3,3,r) orientations other than the two exceptional classes.
    Theta33Except(usize),
}

#[derive(Debug, Clone)]
pub struct OutReport {
    pub family: String,
    pub classes_checked: usize,
    pub excluded: usize,
    pub counterexamples: Vec<MixedGraph>,
    pub note: Option<String>,
}

impl OutReport {
    pub fn all_out(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks that every switching class in the family has an eigenvalue at or
/// beyond +-2, by exact root counting.
pub fn replicate_out_campaign(family: OutFamily) -> Result<OutReport, SearchError> {
    let (name, underlyings, excluded_polys, note): (
        String,
        Vec<MixedGraph>,
        Vec<IntPolynomial>,
        Option<String>,
    ) = match family {
        OutFamily::Deg4Order5 => {
            let mut us = Vec::new();
            for m in 4..=10 {
                us.extend(
                    connected_underlying(5, m, None)
                        .into_iter()
                        .filter(|g| g.structure().max_degree == 4),
                );
            }
            (
                "order-5 with a degree-4 vertex".into(),
                us,
                vec![],
                Some("connected underlying graphs only".into()),
            )
        }
        OutFamily::Theta(p, q, r) => (
            format!("theta({p},{q},{r})"),
            vec![graph::theta(p, q, r, &[])?],
            vec![],
            None,
        ),
        OutFamily::K4Underlying => (
            "complete K4".into(),
            vec![graph::complete(4)],
            vec![],
            None,
        ),
        OutFamily::Theta33Except(r) => {
            let (y1, y2) = exceptional_theta_polys(r);
            (
                format!("theta(3,3,{r}) minus exceptional classes"),
                vec![graph::theta(3, 3, r, &[])?],
                vec![y1, y2],
                None,
            )
        }
    };
    let mut checked = 0usize;
    let mut excluded = 0usize;
    let mut counterexamples = Vec::new();
    for u in &underlyings {
        let classes = orientation_classes(u, true);
        let results: Vec<(MixedGraph, bool, bool)> = classes
            .into_par_iter()
            .map(|g| {
                let poly = char_poly_exact(&g);
                let skip = excluded_polys.contains(&poly);
                let out = crate::spectra::is_out_poly(&poly);
                (g, skip, out)
            })
            .collect();
        for (g, skip, out) in results {
            if skip {
                excluded += 1;
                continue;
            }
            checked += 1;
            if !out {
                counterexamples.push(g);
            }
        }
    }
    Ok(OutReport {
        family: name,
        classes_checked: checked,
        excluded,
        counterexamples,
        note,
    })
}

/// One exact polynomial identity between named spectra.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

/// Verifies every concrete cospectrality identity at its stated parameter
/// range, as exact polynomial equalities.
pub fn verify_family_identities(registry: &Registry) -> Vec<IdentityCheck> {
    let mut checks: Vec<IdentityCheck> = Vec::new();
    let mut push = |name: String, holds: bool| checks.push(IdentityCheck { name, holds });
    let letter = |n: &str| letter_poly(n).expect("letter poly");
    let c1 = cycle_type1_poly;
    let c0 = cycle_type0_poly;
    let c2 = crate::poly::cycle_type2_poly;
    let p = path_poly;
    let gttm = |t: usize, m: usize| c1(t + 2).mul(&c1(t + m + 2));
    let gt = |t: usize| c1(t + 2).mul(&IntPolynomial::from_i64(&[-2, 0, 1]));

    // Odd paths, first family: P_{4k+1} vs C1_{2k+1} u P_{2k}.
    for k in 1..=8 {
        push(
            format!("P_{} = C1_{} + P_{}", 4 * k + 1, 2 * k + 1, 2 * k),
            p(4 * k + 1) == c1(2 * k + 1).mul(&p(2 * k)),
        );
    }
    // Odd paths, second family: P_{4k+3} both decompositions.
    push("P_7 = Gt_2 + P_1".into(), p(7) == gt(2).mul(&p(1)));
    for k in 2..=8 {
        push(
            format!("P_{} = Gttm_{},{} + P_{}", 4 * k + 3, k - 1, k + 1, k),
            p(4 * k + 3) == gttm(k - 1, k + 1).mul(&p(k)),
        );
    }
    for k in 1..=8 {
        push(
            format!("P_{} = C1_{} + P_{}", 4 * k + 3, 2 * k + 2, 2 * k + 1),
            p(4 * k + 3) == c1(2 * k + 2).mul(&p(2 * k + 1)),
        );
    }
    // Even cycles decompose.
    for n in 3..=10 {
        push(
            format!("C_{} = C_{} + C2_{}", 2 * n, n, n),
            c0(2 * n) == c0(n).mul(&c2(n)),
        );
        push(
            format!("C2_{} = C1_{} + C1_{}", 2 * n, n, n),
            c2(2 * n) == c1(n).mul(&c1(n)),
        );
    }
    // Theta-mate decompositions.
    for r in 3..=8 {
        let e_poly = registry
            .get(&format!("E:{}", r - 1))
            .map(char_poly_exact)
            .unwrap_or_else(|_| theta_mate_poly(r - 1));
        push(
            format!("C_{} = P_{} + E_{}", 2 * r, r - 1, r - 1),
            c0(2 * r) == p(r - 1).mul(&e_poly),
        );
        push(
            format!("C2_{} = Gttm_{},0", 2 * r, r - 2),
            c2(2 * r) == gttm(r - 2, 0),
        );
    }
    // The even-path exceptions.
    push("P_8 = P_2 + o".into(), p(8) == p(2).mul(&letter("o")));
    push(
        "P_14 = P_2 + P_4 + u".into(),
        p(14) == p(2).mul(&p(4)).mul(&letter("u")),
    );
    push(
        "P_14 = P_2 + P_4 + h".into(),
        p(14) == p(2).mul(&p(4)).mul(&letter("h")),
    );
    // Lettered cospectral pairs.
    push("u = h".into(), letter("u") == letter("h"));
    push("g = r".into(), letter("g") == letter("r"));
    // One-arc cycle exceptions.
    push("C1_7 = p".into(), c1(7) == letter("p"));
    push(
        "C1_9 = v + P_1".into(),
        c1(9) == letter("v").mul(&IntPolynomial::x()),
    );
    push(
        "C1_12 = C1_4 + q".into(),
        c1(12) == c1(4).mul(&letter("q")),
    );
    push(
        "C1_15 = z + t".into(),
        c1(15) == letter("z").mul(&letter("t")),
    );
    // The one-arc path-mate lists at their published parameters.
    push(
        "P_13 = p + P_6".into(),
        p(13) == letter("p").mul(&p(6)),
    );
    push(
        "P_17 = C1_9 + P_2 + o".into(),
        p(17) == c1(9).mul(&p(2)).mul(&letter("o")),
    );
    push(
        "P_17 = v + P_8 + P_1".into(),
        p(17) == letter("v").mul(&p(8)).mul(&IntPolynomial::x()),
    );
    push(
        "P_17 = v + o + P_2 + P_1".into(),
        p(17) == letter("v")
            .mul(&letter("o"))
            .mul(&p(2))
            .mul(&IntPolynomial::x()),
    );
    for (name, lhs, rhs) in [
        (
            "P_29 = C1_15 + P_2 + P_4 + u",
            p(29),
            c1(15).mul(&p(2)).mul(&p(4)).mul(&letter("u")),
        ),
        (
            "P_29 = z + P_14 + t",
            p(29),
            letter("z").mul(&p(14)).mul(&letter("t")),
        ),
        (
            "P_29 = z + P_2 + P_4 + u + t",
            p(29),
            letter("z")
                .mul(&p(2))
                .mul(&p(4))
                .mul(&letter("u"))
                .mul(&letter("t")),
        ),
        (
            "P_29 = z + P_2 + P_4 + h + t",
            p(29),
            letter("z")
                .mul(&p(2))
                .mul(&p(4))
                .mul(&letter("h"))
                .mul(&letter("t")),
        ),
    ] {
        push(name.into(), lhs == rhs);
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn identities_hold_without_registry() {
        let reg = Registry::new();
        let checks = verify_family_identities(&reg);
        let failures: Vec<&IdentityCheck> = checks.iter().filter(|c| !c.holds).collect();
        assert!(
            failures.is_empty(),
            "failed identities: {:?}",
            failures.iter().map(|c| &c.name).collect::<Vec<_>>()
        );
        assert!(checks.len() >= 40);
    }

    #[test]
    fn exceptional_theta_polys_at_two() {
        use num_bigint::BigInt;
        for r in 3..=10 {
            let (y1, y2) = exceptional_theta_polys(r);
            assert_eq!(y1.eval_i64(2), BigInt::from(6 - 2 * (r as i64)), "r={r}");
            assert_eq!(y2.eval_i64(2), BigInt::from(0), "r={r}");
        }
    }

    #[test]
    fn small_cycle_verdicts() {
        let c = SearchConstraints::exact(0, 0); // order/size pinned inside
        for (g, expect_dhs) in [
            (cycle(3, 0).unwrap(), true),
            (cycle(3, 2).unwrap(), true),
            (cycle(4, 0).unwrap(), true),
            (cycle(4, 2).unwrap(), true),
            (cycle(3, 1).unwrap(), true),
            (cycle(4, 1).unwrap(), true),
        ] {
            let verdict = is_dhs(&g, &c);
            assert_eq!(verdict.is_dhs(), expect_dhs, "graph {:?}", g);
        }
    }

    #[test]
    fn six_cycle_mates() {
        let c = SearchConstraints::exact(0, 0);
        let report = find_mates(&cycle(6, 0).unwrap(), &c).unwrap();
        // C_6 is cospectral with C_3 u C2_3 and with P_2 joined to either of
        // the two theta-mate orientation classes on the diamond.
        assert_eq!(report.mates.len(), 3);
        let tri_mate = report
            .mates
            .iter()
            .filter(|m| {
                let comps = m.graph.components();
                comps.len() == 2 && comps.iter().all(|c| c.len() == 3)
            })
            .count();
        assert_eq!(tri_mate, 1);
        for m in &report.mates {
            assert_eq!(m.certificate, NonEquivalence::DifferentUnderlying);
        }

        let report = find_mates(&cycle(6, 2).unwrap(), &c).unwrap();
        // C2_6 is cospectral with C1_3 u C1_3, with the opposite-pendant
        // 4-cycle, and with the non-out complete-graph class plus two
        // isolated vertices.
        assert_eq!(report.mates.len(), 3);
    }

    #[test]
    fn path_five_mate() {
        let c = SearchConstraints::exact(0, 0);
        let mut report = find_mates(&path(5), &c).unwrap();
        assert_eq!(report.mates.len(), 1);
        name_mates(&mut report, &Registry::new());
        assert_eq!(report.mates[0].name.as_deref(), Some("P:2 + C1:3"));
    }

    #[test]
    fn guided_decomposition_on_small_paths() {
        let reg = Registry::new();
        let report = find_mates_guided(&path(5), &reg, 10);
        let names: Vec<&str> = report.mates.iter().filter_map(|m| m.name.as_deref()).collect();
        assert_eq!(names, ["P:2 + C1:3"]);
        // P_4 has no decomposition at all.
        let report = find_mates_guided(&path(4), &reg, 10);
        assert!(report.mates.is_empty());
    }

    #[test]
    fn one_arc_cycle_guided_mates() {
        let reg = Registry::frozen();
        // The one-arc 9-cycle decomposes through the order-8 letter v.
        let report = find_mates_guided(&cycle(9, 1).unwrap(), &reg, 9);
        let names: Vec<&str> = report.mates.iter().filter_map(|m| m.name.as_deref()).collect();
        assert_eq!(names, ["P:1 + v"]);
        // The one-arc 7-cycle's mate is the letter p alone.
        let report = find_mates_guided(&cycle(7, 1).unwrap(), &reg, 7);
        let names: Vec<&str> = report.mates.iter().filter_map(|m| m.name.as_deref()).collect();
        assert_eq!(names, ["p"]);
    }

    #[test]
    fn mates_reverify_exactly() {
        let c = SearchConstraints::exact(0, 0);
        for target in [path(8), cycle(6, 0).unwrap()] {
            let report = find_mates(&target, &c).unwrap();
            let target_poly = char_poly_exact(&target);
            for mate in &report.mates {
                assert_eq!(char_poly_exact(&mate.graph), target_poly);
                assert_eq!(mate.char_poly, target_poly);
                assert!(!crate::canon::iso_switch_equivalent(&mate.graph, &target));
                assert_eq!(
                    (mate.graph.order(), mate.graph.size()),
                    (target.order(), target.size())
                );
            }
        }
    }
}
