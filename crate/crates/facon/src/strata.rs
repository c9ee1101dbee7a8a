//! From the façon catalog to geometry.
//!
//! Each equivalence class of curves parametrizes a piece of the asymptotic
//! set. This module measures those pieces (exact Jacobian rank at random
//! rational points), describes them (implicit equations by exact
//! interpolation), arranges the classes of each façon into levels of strictly
//! decreasing dimension, assembles the global stratification, and checks the
//! frontier property on the result.
//!
//! Closure containment and membership are certified only up to the equation
//! degree bound and the sample budget; both are recorded in the report.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{nullspace, rank_exact, Monomial, MultiPoly, Rational, VarSpace};
use crate::curves::{DegreeTuple, Facon, LimitMapping};
use crate::facons::{collect_facons, is_dominant, FaconCatalog};
use crate::parser::PolynomialMapping;
use crate::rng::SplitMix64;

/// Tunable bounds of one analysis run. Everything downstream is
/// deterministic in these values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisConfig {
    /// Exponent box half-width `E`: curves are searched in `[-E, E]^n`.
    pub max_exponent: i64,
    /// Total-degree bound `D` for implicit equations.
    pub degree: u32,
    /// Seed for all random rational sampling.
    pub seed: u64,
    /// Rank-probe trials per image dimension measurement.
    pub trials: u32,
    /// Sample budget per parametrized piece.
    pub samples: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig { max_exponent: 4, degree: 4, seed: 0, trials: 8, samples: 200 }
    }
}

/// How many stored sample points a stratum keeps for reports and
/// containment tests.
const KEPT_SAMPLES: usize = 12;
/// Boundary probes per degeneration direction in the frontier check.
const BOUNDARY_SAMPLES: usize = 3;

/// One parametrization of (part of) a stratum: a curve class together with
/// the measured geometry of its image.
#[derive(Debug, Clone)]
pub struct Parametrization {
    pub facon: Facon,
    pub tuple: DegreeTuple,
    pub limit: LimitMapping,
    /// Dimension of this parametrization's own image.
    pub dimension: usize,
    /// Implicit equations of this parametrization's own image closure.
    pub eqs: Vec<MultiPoly>,
}

/// A stratum of the asymptotic set.
#[derive(Debug, Clone)]
pub struct Stratum {
    pub id: String,
    pub dimension: usize,
    /// Every `(façon, level)` realizing this stratum; level 0 is the generic
    /// level of the façon, higher levels are its star refinements.
    pub facon_levels: Vec<(Facon, usize)>,
    pub parametrizations: Vec<Parametrization>,
    pub implicit_eqs: Vec<MultiPoly>,
    /// Total degree at which the implicit equations were found (0 when none
    /// exist within the bound).
    pub equation_degree: u32,
    pub sample_points: Vec<Vec<Rational>>,
    /// Jacobian rank was constant across all probes of every parametrization
    /// at this stratum's generic level.
    pub rank_constant: bool,
}

impl Stratum {
    /// All façon labels realizing the stratum.
    pub fn facon_labels(&self) -> Vec<String> {
        self.facon_levels.iter().map(|(f, _)| f.label()).collect()
    }

    /// Star labels in the `κ^{i*}` notation.
    pub fn etoile_labels(&self) -> Vec<String> {
        self.facon_levels.iter().map(|(f, l)| format!("{}^{{{}*}}", f.label(), l)).collect()
    }

    /// Smallest star level among the realizations.
    pub fn etoile_level(&self) -> usize {
        self.facon_levels.iter().map(|(_, l)| *l).min().unwrap_or(0)
    }
}

/// A filtration level: all strata of one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationLevel {
    pub dimension: usize,
    /// Indices into [`Stratification::strata`].
    pub strata: Vec<usize>,
}

/// The stratification: strata, containment order and dimension filtration.
#[derive(Debug, Clone, Default)]
pub struct Stratification {
    pub strata: Vec<Stratum>,
    /// Edges `(a, b)`: stratum `b` lies in the closure of stratum `a`.
    /// Transitively closed; dimensions strictly decrease along edges.
    pub containment: Vec<(usize, usize)>,
    /// Levels by dimension, descending.
    pub filtration: Vec<FiltrationLevel>,
}

impl Stratification {
    pub fn top_dimension(&self) -> Option<usize> {
        self.strata.iter().map(|s| s.dimension).max()
    }

    pub fn stratum_by_id(&self, id: &str) -> Option<&Stratum> {
        self.strata.iter().find(|s| s.id == id)
    }
}

/// Full analysis result for one mapping.
#[derive(Debug, Clone)]
pub struct AsymptoticSetReport {
    pub mapping: PolynomialMapping,
    pub dominant: bool,
    pub catalog: FaconCatalog,
    pub stratification: Stratification,
    pub frontier: bool,
    pub frontier_violations: Vec<String>,
    pub top_dimension: Option<usize>,
    /// The asymptotic set of a dominant mapping is empty or a hypersurface;
    /// true when the computed top dimension is `n - 1` or no strata exist.
    pub hypersurface: bool,
    pub warnings: Vec<String>,
    pub config: AnalysisConfig,
}

/// Diagnostic errors from the geometric measurements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrataError {
    GenericityUnsatisfiable,
}

impl fmt::Display for StrataError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrataError::GenericityUnsatisfiable => {
                write!(f, "could not satisfy genericity constraints within the retry budget")
            }
        }
    }
}

impl std::error::Error for StrataError {}

/// All coefficients are drawn nonzero: the constrained ones must be, and
/// nonzero values keep the remaining draws generic.
fn draw_coeffs(n: usize, rng: &mut SplitMix64) -> Vec<Rational> {
    (0..n).map(|_| rng.rational(true)).collect()
}

/// Maximum Jacobian rank of the limit mapping over `trials` random rational
/// coefficient vectors satisfying the genericity constraints. Deterministic
/// for a fixed seed.
pub fn image_dimension(lm: &LimitMapping, trials: u32, seed: u64) -> usize {
    *image_dimension_profile(lm, trials, seed).iter().max().unwrap_or(&0)
}

/// Rank at each probe point, in draw order. The maximum is the dimension;
/// a non-constant profile flags a rank drop at some probe.
pub fn image_dimension_profile(lm: &LimitMapping, trials: u32, seed: u64) -> Vec<usize> {
    let n = lm.components().len();
    let params = lm.free_params();
    if params.is_empty() {
        return vec![0; trials.max(1) as usize];
    }
    let mut rng = SplitMix64::for_task(seed, "image-dimension");
    let mut ranks = Vec::with_capacity(trials as usize);
    for _ in 0..trials.max(1) {
        let point = draw_coeffs(n, &mut rng);
        let jacobian: Vec<Vec<Rational>> = lm
            .components()
            .iter()
            .map(|p| {
                params
                    .iter()
                    .map(|&j| p.partial(j).eval(&point).expect("point covers all symbols"))
                    .collect()
            })
            .collect();
        ranks.push(rank_exact(&jacobian));
    }
    ranks
}

/// All monomials in `n` variables of total degree at most `degree`,
/// ascending graded-lex.
fn monomials_up_to(n: usize, degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    let mut frontier = vec![Monomial::one()];
    for _ in 0..degree {
        let mut next = Vec::new();
        for m in &frontier {
            // Extend only by variables >= the largest used one to avoid
            // duplicates.
            let lo = m.iter().last().map(|(v, _)| v).unwrap_or(0);
            for v in lo..n {
                next.push(m.mul(&Monomial::var(v, 1)));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort();
    out.dedup();
    out
}

/// Basis of the space of polynomials of total degree `<= degree` in the
/// target coordinates vanishing on `samples` random points of the image of
/// `lm`. Exact linear algebra; the result is the canonical reduced basis
/// (integer-primitive, positive leading coefficient). Empty when no relation
/// of the requested degree exists.
pub fn implicitize(lm: &LimitMapping, degree: u32, samples: usize, seed: u64) -> Vec<MultiPoly> {
    let mut rng = SplitMix64::for_task(seed, "implicitize");
    let n = lm.components().len();
    let points: Vec<Vec<Rational>> =
        (0..samples.max(1)).map(|_| lm.eval(&draw_coeffs(n, &mut rng))).collect();
    vanishing_basis(&points, n, degree)
}

/// Vanishing basis on explicitly given points.
fn vanishing_basis(points: &[Vec<Rational>], n: usize, degree: u32) -> Vec<MultiPoly> {
    let mons = monomials_up_to(n, degree);
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|pt| {
            mons.iter()
                .map(|m| {
                    let mut v = Rational::from_integer(1.into());
                    for (var, e) in m.iter() {
                        for _ in 0..e {
                            v *= &pt[var];
                        }
                    }
                    v
                })
                .collect()
        })
        .collect();
    let kernel = nullspace(&rows, mons.len());
    let mut basis: Vec<MultiPoly> = kernel
        .into_iter()
        .map(|coeffs| {
            let mut p = MultiPoly::zero(VarSpace::Target);
            for (m, c) in mons.iter().zip(coeffs) {
                p = p.add(&MultiPoly::monomial(VarSpace::Target, m.clone(), c));
            }
            p.normalized()
        })
        .filter(|p| !p.is_zero())
        .collect();
    basis.sort_by(|a, b| {
        let la = a.leading().map(|(m, _)| m.clone());
        let lb = b.leading().map(|(m, _)| m.clone());
        lb.cmp(&la).then_with(|| a.to_string().cmp(&b.to_string()))
    });
    basis
}

/// Smallest-degree nonempty vanishing basis within the bound, with the
/// degree it was found at. `(empty, 0)` when nothing vanishes up to the
/// bound.
fn minimal_vanishing_basis(
    points: &[Vec<Rational>],
    n: usize,
    max_degree: u32,
) -> (Vec<MultiPoly>, u32) {
    for d in 1..=max_degree {
        let basis = vanishing_basis(points, n, d);
        if !basis.is_empty() {
            return (basis, d);
        }
    }
    (Vec::new(), 0)
}

fn satisfies_all(eqs: &[MultiPoly], points: &[Vec<Rational>]) -> bool {
    use num_traits::Zero;
    eqs.iter().all(|eq| {
        points.iter().all(|pt| eq.eval(pt).map(|v| v.is_zero()).unwrap_or(false))
    })
}

/// `true` when every stored sample of `b` satisfies every implicit equation
/// of `a` exactly and `dim b <= dim a`: the sampled evidence that `b` lies
/// in the closure of `a`, certified up to the equation degree bound.
pub fn closure_contains(a: &Stratum, b: &Stratum) -> bool {
    b.dimension <= a.dimension && satisfies_all(&a.implicit_eqs, &b.sample_points)
}

/// The measured geometry of one curve class.
#[derive(Debug, Clone)]
struct ClassGeometry {
    facon: Facon,
    tuple: DegreeTuple,
    limit: LimitMapping,
    dimension: usize,
    ranks: Vec<usize>,
    eqs: Vec<MultiPoly>,
    eq_degree: u32,
    samples: Vec<Vec<Rational>>,
}

impl ClassGeometry {
    fn measure(
        facon: &Facon,
        tuple: &DegreeTuple,
        limit: &LimitMapping,
        n: usize,
        cfg: &AnalysisConfig,
    ) -> ClassGeometry {
        let tag = format!("class|{}|{}", facon.label(), tuple);
        let mut rng = SplitMix64::for_task(cfg.seed, &tag);
        let samples: Vec<Vec<Rational>> =
            (0..cfg.samples).map(|_| limit.eval(&draw_coeffs(n, &mut rng))).collect();
        let (eqs, eq_degree) = minimal_vanishing_basis(&samples, n, cfg.degree);
        let ranks = image_dimension_profile(limit, cfg.trials, class_seed(cfg.seed, &tag));
        let dimension = *ranks.iter().max().unwrap_or(&0);
        ClassGeometry {
            facon: facon.clone(),
            tuple: tuple.clone(),
            limit: limit.clone(),
            dimension,
            ranks,
            eqs,
            eq_degree,
            samples,
        }
    }

    fn parametrization(&self) -> Parametrization {
        Parametrization {
            facon: self.facon.clone(),
            tuple: self.tuple.clone(),
            limit: self.limit.clone(),
            dimension: self.dimension,
            eqs: self.eqs.clone(),
        }
    }
}

fn class_seed(seed: u64, tag: &str) -> u64 {
    SplitMix64::for_task(seed, tag).next_u64()
}

/// A group of classes of one façon sharing the same image variety.
#[derive(Debug, Clone)]
pub struct FaconPiece {
    facon: Facon,
    classes: Vec<ClassGeometry>,
    /// Classes folded into this piece rather than forming a deeper level:
    /// their images sweep only the free coordinate directions.
    absorbed: Vec<ClassGeometry>,
}

impl FaconPiece {
    pub fn facon(&self) -> &Facon {
        &self.facon
    }

    pub fn dimension(&self) -> usize {
        self.classes[0].dimension
    }

    pub fn equations(&self) -> &[MultiPoly] {
        &self.classes[0].eqs
    }

    fn equation_degree(&self) -> u32 {
        self.classes[0].eq_degree
    }

    fn samples(&self) -> impl Iterator<Item = &Vec<Rational>> {
        self.classes.iter().flat_map(|c| c.samples.iter())
    }

    fn kept_samples(&self) -> Vec<Vec<Rational>> {
        self.samples().take(KEPT_SAMPLES).cloned().collect()
    }

    fn contains(&self, other: &FaconPiece) -> bool {
        other.dimension() <= self.dimension()
            && other
                .classes
                .iter()
                .all(|c| satisfies_all(self.equations(), &c.samples))
    }

    fn same_variety(&self, other: &FaconPiece) -> bool {
        self.dimension() == other.dimension() && self.contains(other) && other.contains(self)
    }
}

/// Arrange the classes of one façon into levels of strictly decreasing
/// dimension.
///
/// Classes are first grouped by image variety. The groups of maximal
/// dimension form level 0 (the generic points of the façon). A deeper group
/// whose limit depends only on the free coefficient symbols of the façon
/// does not open a new level: it sweeps a slice of a higher piece in the
/// free coordinate directions, so its points already sit inside that piece,
/// and it is recorded as an extra parametrization there. Every remaining
/// group opens the deepest level whose closure contains it, largest
/// dimensions first.
pub fn facon_filtration(
    f: &PolynomialMapping,
    facon: &Facon,
    catalog: &FaconCatalog,
    cfg: &AnalysisConfig,
) -> Vec<Vec<FaconPiece>> {
    let n = f.n();
    let classes: Vec<ClassGeometry> = catalog
        .classes(facon)
        .iter()
        .map(|c| ClassGeometry::measure(facon, &c.tuple, &c.limit, n, cfg))
        .collect();
    if classes.is_empty() {
        return Vec::new();
    }

    // Group classes with identical image varieties.
    let mut pieces: Vec<FaconPiece> = Vec::new();
    for c in classes {
        let candidate =
            FaconPiece { facon: facon.clone(), classes: vec![c], absorbed: Vec::new() };
        if let Some(host) = pieces.iter_mut().find(|p| p.same_variety(&candidate)) {
            host.classes.extend(candidate.classes);
        } else {
            pieces.push(candidate);
        }
    }

    let max_dim = pieces.iter().map(FaconPiece::dimension).max().unwrap_or(0);
    let (level0, mut pending): (Vec<FaconPiece>, Vec<FaconPiece>) =
        pieces.into_iter().partition(|p| p.dimension() == max_dim);
    let mut levels: Vec<Vec<FaconPiece>> = vec![level0];

    // Free-coordinate absorption.
    let free_params: Vec<usize> = facon.free_indices().iter().map(|i| i - 1).collect();
    pending.sort_by_key(|p| std::cmp::Reverse(p.dimension()));
    let mut still_pending = Vec::new();
    'next: for piece in pending {
        let free_only = piece.dimension() >= 1
            && piece
                .classes
                .iter()
                .all(|c| c.limit.free_params().iter().all(|v| free_params.contains(v)));
        if free_only {
            // Absorb into the tightest assigned piece containing it.
            let mut best: Option<(usize, usize, usize)> = None;
            for (li, level) in levels.iter().enumerate() {
                for (qi, host) in level.iter().enumerate() {
                    if host.dimension() > piece.dimension() && host.contains(&piece) {
                        let d = host.dimension();
                        if best.map(|(_, _, bd)| d < bd).unwrap_or(true) {
                            best = Some((li, qi, d));
                        }
                    }
                }
            }
            if let Some((li, qi, _)) = best {
                levels[li][qi].absorbed.extend(piece.classes);
                levels[li][qi].absorbed.extend(piece.absorbed);
                continue 'next;
            }
        }
        still_pending.push(piece);
    }
    let mut pending = still_pending;

    // Peel the remaining pieces into levels.
    while !pending.is_empty() {
        let contained: Vec<bool> = pending
            .iter()
            .map(|p| {
                levels.iter().flatten().any(|q| q.dimension() > p.dimension() && q.contains(p))
            })
            .collect();
        let pool: Vec<usize> = if contained.iter().any(|&c| c) {
            (0..pending.len()).filter(|&i| contained[i]).collect()
        } else {
            (0..pending.len()).collect()
        };
        let dim = pool.iter().map(|&i| pending[i].dimension()).max().unwrap();
        let (taken, rest): (Vec<_>, Vec<_>) = pending
            .into_iter()
            .enumerate()
            .partition(|(i, p)| pool.contains(i) && p.dimension() == dim);
        pending = rest.into_iter().map(|(_, p)| p).collect();
        let taken: Vec<FaconPiece> = taken.into_iter().map(|(_, p)| p).collect();
        let last_dim = levels.last().and_then(|l| l.first()).map(FaconPiece::dimension);
        if last_dim == Some(dim) {
            levels.last_mut().unwrap().extend(taken);
        } else {
            levels.push(taken);
        }
    }
    levels
}

/// Assemble the global stratification from the per-façon filtrations.
/// Pieces from different façons with the same image variety merge into one
/// stratum that records every `(façon, level)` realizing it.
pub fn etoile_stratification(
    f: &PolynomialMapping,
    catalog: &FaconCatalog,
    cfg: &AnalysisConfig,
) -> Stratification {
    let mut tagged: Vec<(usize, FaconPiece)> = Vec::new();
    for facon in catalog.facons() {
        for (level, pieces) in facon_filtration(f, facon, catalog, cfg).into_iter().enumerate() {
            for p in pieces {
                tagged.push((level, p));
            }
        }
    }
    if tagged.is_empty() {
        return Stratification::default();
    }

    // Merge same-variety pieces across façons.
    let mut groups: Vec<Vec<(usize, FaconPiece)>> = Vec::new();
    'outer: for item in tagged {
        for group in groups.iter_mut() {
            if group[0].1.same_variety(&item.1) {
                group.push(item);
                continue 'outer;
            }
        }
        groups.push(vec![item]);
    }

    let mut strata: Vec<Stratum> = groups
        .into_iter()
        .map(|group| {
            let mut facon_levels: Vec<(Facon, usize)> =
                group.iter().map(|(level, p)| (p.facon.clone(), *level)).collect();
            facon_levels.sort();
            facon_levels.dedup();
            let dimension = group[0].1.dimension();
            let representative = group
                .iter()
                .min_by(|a, b| {
                    (a.1.equation_degree(), &a.1.facon, a.0)
                        .cmp(&(b.1.equation_degree(), &b.1.facon, b.0))
                })
                .expect("nonempty group");
            let implicit_eqs = representative.1.equations().to_vec();
            let equation_degree = representative.1.equation_degree();
            let mut sample_points = Vec::new();
            for (_, p) in &group {
                sample_points.extend(p.kept_samples());
            }
            sample_points.truncate(KEPT_SAMPLES);
            let rank_constant = group.iter().all(|(_, p)| {
                p.classes.iter().all(|c| c.ranks.iter().all(|&r| r == c.dimension))
            });
            let mut parametrizations = Vec::new();
            for (_, p) in &group {
                parametrizations.extend(p.classes.iter().map(ClassGeometry::parametrization));
                parametrizations.extend(p.absorbed.iter().map(ClassGeometry::parametrization));
            }
            Stratum {
                id: String::new(),
                dimension,
                facon_levels,
                parametrizations,
                implicit_eqs,
                equation_degree,
                sample_points,
                rank_constant,
            }
        })
        .collect();

    strata.sort_by(|a, b| {
        let ka = stratum_sort_key(a);
        let kb = stratum_sort_key(b);
        ka.cmp(&kb)
    });
    for (i, s) in strata.iter_mut().enumerate() {
        s.id = format!("S{}", i);
    }

    let mut containment = Vec::new();
    for a in 0..strata.len() {
        for b in 0..strata.len() {
            if a != b
                && strata[b].dimension < strata[a].dimension
                && satisfies_all(&strata[a].implicit_eqs, &strata[b].sample_points)
            {
                containment.push((a, b));
            }
        }
    }

    let mut filtration: Vec<FiltrationLevel> = Vec::new();
    for (i, s) in strata.iter().enumerate() {
        match filtration.iter_mut().find(|l| l.dimension == s.dimension) {
            Some(level) => level.strata.push(i),
            None => filtration.push(FiltrationLevel { dimension: s.dimension, strata: vec![i] }),
        }
    }
    filtration.sort_by_key(|l| std::cmp::Reverse(l.dimension));

    Stratification { strata, containment, filtration }
}

fn stratum_sort_key(s: &Stratum) -> (std::cmp::Reverse<usize>, Vec<String>, Vec<String>) {
    (
        std::cmp::Reverse(s.dimension),
        s.implicit_eqs.iter().map(|p| p.to_string()).collect(),
        s.facon_labels(),
    )
}

/// Frontier check on a stratification.
///
/// Two conditions are probed: no two distinct strata of equal dimension may
/// contain one another, and every sampled boundary point of a stratum
/// (obtained by sending a constrained coefficient of one of its
/// parametrizations to zero) must belong to some stratum. Membership of a
/// point in a stratum is decided against the stratum's parametrizations:
/// the point must satisfy the parametrization's implicit equations while
/// avoiding the proper subvarieties reached by its own coefficient
/// degenerations.
pub fn check_frontier(s: &Stratification, cfg: &AnalysisConfig) -> (bool, Vec<String>) {
    let mut violations = Vec::new();

    for a in 0..s.strata.len() {
        for b in 0..s.strata.len() {
            if a != b
                && s.strata[a].dimension == s.strata[b].dimension
                && closure_contains(&s.strata[a], &s.strata[b])
            {
                violations.push(format!(
                    "strata {} and {} have equal dimension but {} lies in the closure of {}",
                    s.strata[a].id, s.strata[b].id, s.strata[b].id, s.strata[a].id
                ));
            }
        }
    }

    let mut degeneration_cache: BTreeMap<String, (usize, Vec<MultiPoly>)> = BTreeMap::new();

    for stratum in &s.strata {
        for (pi, param) in stratum.parametrizations.iter().enumerate() {
            let occurring = param.limit.free_params().to_vec();
            for &i in param.limit.constraints() {
                if !occurring.contains(&i) {
                    continue;
                }
                let degenerate = param.limit.degenerate(i);
                let tag = format!("frontier|{}|{}|{}", stratum.id, pi, i);
                let mut rng = SplitMix64::for_task(cfg.seed, &tag);
                let n = degenerate.components().len();
                for _ in 0..BOUNDARY_SAMPLES {
                    let b = degenerate.eval(&draw_coeffs(n, &mut rng));
                    if !point_in_some_stratum(s, &b, cfg, &mut degeneration_cache) {
                        violations.push(format!(
                            "boundary point ({}) of {} (façon {}, c{} -> 0) lies in no stratum",
                            b.iter().map(rational_str).collect::<Vec<_>>().join(", "),
                            stratum.id,
                            param.facon.label(),
                            i + 1
                        ));
                    }
                }
            }
        }
    }

    violations.sort();
    violations.dedup();
    (violations.is_empty(), violations)
}

fn rational_str(r: &Rational) -> String {
    use num_traits::One;
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn point_in_some_stratum(
    s: &Stratification,
    point: &[Rational],
    cfg: &AnalysisConfig,
    cache: &mut BTreeMap<String, (usize, Vec<MultiPoly>)>,
) -> bool {
    s.strata.iter().any(|st| point_in_stratum(st, point, cfg, cache))
}

fn point_in_stratum(
    stratum: &Stratum,
    point: &[Rational],
    cfg: &AnalysisConfig,
    cache: &mut BTreeMap<String, (usize, Vec<MultiPoly>)>,
) -> bool {
    let pt = vec![point.to_vec()];
    'params: for param in &stratum.parametrizations {
        if !satisfies_all(&param.eqs, &pt) {
            continue;
        }
        // The point must avoid every proper degeneration subvariety of this
        // parametrization; those loci are where the sweep collapses.
        for &j in param.limit.constraints() {
            if !param.limit.free_params().contains(&j) {
                continue;
            }
            let degenerate = param.limit.degenerate(j);
            let key = format!(
                "{}|{}",
                degenerate.component_strings().join(";"),
                degenerate.constraints().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
            );
            let (dim, eqs) = cache
                .entry(key)
                .or_insert_with(|| {
                    let dim = image_dimension(&degenerate, cfg.trials, cfg.seed);
                    let mut rng = SplitMix64::for_task(cfg.seed, "member-degeneration");
                    let n = degenerate.components().len();
                    let samples: Vec<Vec<Rational>> = (0..cfg.samples.min(64))
                        .map(|_| degenerate.eval(&draw_coeffs(n, &mut rng)))
                        .collect();
                    let (eqs, _) = minimal_vanishing_basis(&samples, n, cfg.degree);
                    (dim, eqs)
                })
                .clone();
            if dim < param.dimension && !eqs.is_empty() && satisfies_all(&eqs, &pt) {
                continue 'params;
            }
        }
        return true;
    }
    false
}

/// Run the whole pipeline: dominance check, catalog, stratification,
/// implicit equations, frontier verdict and the hypersurface flag.
pub fn asymptotic_set(f: &PolynomialMapping, cfg: &AnalysisConfig) -> AsymptoticSetReport {
    let mut warnings = Vec::new();
    let dominant = is_dominant(f);
    if !dominant {
        warnings.push(
            "mapping is not dominant (Jacobian determinant is identically zero); \
             the analysis proceeds but the hypersurface dichotomy does not apply"
                .to_string(),
        );
    }
    let catalog = collect_facons(f, cfg.max_exponent);
    let stratification = etoile_stratification(f, &catalog, cfg);
    let (frontier, frontier_violations) = check_frontier(&stratification, cfg);
    let top_dimension = stratification.top_dimension();
    let hypersurface = match top_dimension {
        None => true,
        Some(d) => d == f.n() - 1,
    };
    AsymptoticSetReport {
        mapping: f.clone(),
        dominant,
        catalog,
        stratification,
        frontier,
        frontier_violations,
        top_dimension,
        hypersurface,
        warnings,
        config: cfg.clone(),
    }
}
