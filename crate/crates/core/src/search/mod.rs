//! Exact search oracles for the optimization problems behind the bounds.
//!
//! Pair problems search over `F` only: the partner is always the largest
//! family cross-intersecting `F`, i.e. `C([n], k) \ D_k(F)`. Two engines
//! exist. The exhaustive one is a branch and bound over all admissible `F`
//! (`brute` uses the plain size bound, `clique` a coloring bound). The
//! `shifted` engine walks shifted families only; for sum objectives this
//! loses nothing because shifting both families keeps them cross-intersecting
//! and keeps `F` intersecting, but it reports shifted maximizers only.

mod bits;
mod bnb;
pub mod classify;
pub mod expected;
pub mod layer;
pub mod shifted;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use bits::Bits;
use bnb::{Bound, Graph, Limits, Node, Objective};
use shifted::{compat_rows, walk_downsets, Dominance};

pub use classify::{classify_maximizers, IsoClass};
pub use expected::{compare_classes, expected_classes, ClassComparison, ExpectedClass};
pub use layer::{check_layer_inequality, LayerCheck};
pub use shifted::{enumerate_shifted, enumerate_shifted_pairwise};

use crate::bounds::{BoundId, BoundValue, Params};
use crate::error::{Error, Result};
use crate::family::{k_subsets, Family};
use crate::iso::ISO_LIMIT;
use crate::shifting::max_partner;

/// Candidate sets above this count are refused by the exhaustive engines.
pub const EXHAUSTIVE_VERTEX_LIMIT: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `F ⊆ C([n], k+t)` `(t+1)`-intersecting with `|F| >= r`, `G ⊆ C([n], k)`.
    Hemibundled,
    /// `F, G ⊆ C([n], k)` with `min(|F|, |G|) >= r`.
    CrossPair,
    /// As `CrossPair` with `|F ∩ G| <= r - 1`.
    Capped,
    /// Intersecting `F ⊆ C([n], k)` with diversity at least `r`.
    Diversity,
    /// `s`-union `F ⊆ 2^[n]`.
    SUnion,
    /// `s`-union with `|F_{d+1}| >= r` (`s = 2d`) or `γ(F_{d+1}) >= r` (`s = 2d+1`).
    Conditioned,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Hemibundled => "hemibundled",
            Kind::CrossPair => "cross_pair",
            Kind::Capped => "capped",
            Kind::Diversity => "diversity",
            Kind::SUnion => "s_union",
            Kind::Conditioned => "conditioned",
        }
    }

    pub fn is_pair(self) -> bool {
        matches!(self, Kind::Hemibundled | Kind::CrossPair | Kind::Capped)
    }

    /// The bound this kind is compared against.
    pub fn bound_id(self, p: &Params) -> Option<BoundId> {
        let odd = p.s.map(|s| s % 2 == 1);
        Some(match self {
            Kind::Hemibundled => BoundId::Main1,
            Kind::CrossPair => BoundId::F24,
            Kind::Capped => BoundId::Main3,
            Kind::Diversity => BoundId::Diversity,
            Kind::SUnion => {
                if odd? {
                    BoundId::KatonaOdd
                } else {
                    BoundId::KatonaEven
                }
            }
            Kind::Conditioned => {
                if odd? {
                    BoundId::Main5Odd
                } else {
                    BoundId::Main5Even
                }
            }
        })
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "hemibundled" | "hemibundled_max" => Kind::Hemibundled,
            "cross_pair" | "cross_pair_max" => Kind::CrossPair,
            "capped" | "cross_pair_capped" => Kind::Capped,
            "diversity" | "diverse_intersecting_max" => Kind::Diversity,
            "s_union" | "s_union_max" => Kind::SUnion,
            "conditioned" | "s_union_conditioned_max" => Kind::Conditioned,
            _ => return Err(Error::Range(format!("unknown problem kind `{s}`"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Auto,
    Brute,
    Shifted,
    Clique,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Auto => "auto",
            Engine::Brute => "brute",
            Engine::Shifted => "shifted",
            Engine::Clique => "clique",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Engine::Auto,
            "brute" => Engine::Brute,
            "shifted" => Engine::Shifted,
            "clique" => Engine::Clique,
            _ => return Err(Error::Range(format!("unknown engine `{s}`"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Problem {
    pub kind: Kind,
    pub params: Params,
    pub engine: Engine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub threads: usize,
    pub max_duration: Option<Duration>,
    /// Group maximizers into isomorphism classes.
    pub classify: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { threads: 1, max_duration: None, classify: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportClass {
    pub representative: Family,
    /// The largest cross-intersecting partner, for pair kinds.
    pub partner: Option<Family>,
    pub size: usize,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub kind: Kind,
    pub params: Params,
    pub engine: Engine,
    /// `None` when no admissible family exists.
    pub optimum: Option<u64>,
    /// `None` when the parameters are outside the theorem's range.
    pub bound: Option<BoundValue>,
    pub matches_bound: bool,
    pub maximizers: Vec<Family>,
    pub classes: Vec<ReportClass>,
    /// Whether every admissible family was considered.
    pub exhaustive: bool,
    pub note: Option<String>,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn maximizer_count(&self) -> usize {
        self.maximizers.len()
    }

    pub fn class_families(&self) -> Vec<Family> {
        self.classes.iter().map(|c| c.representative.clone()).collect()
    }
}

struct Setup {
    n: usize,
    k: usize,
    t: usize,
    r: usize,
    s: usize,
}

fn get(p: &Params, v: Option<i64>, name: &'static str) -> Result<usize> {
    let _ = p;
    let v = v.ok_or(Error::MissingParam(name))?;
    usize::try_from(v).map_err(|_| Error::Range(format!("{name} must be non-negative")))
}

fn setup(kind: Kind, p: &Params) -> Result<Setup> {
    let n = get(p, p.n, "n")?;
    if !(2..=ISO_LIMIT).contains(&n) {
        return Err(Error::Infeasible(format!("search supports 2 <= n <= {ISO_LIMIT}, got n = {n}")));
    }
    let mut s = Setup { n, k: 0, t: 0, r: 0, s: 0 };
    match kind {
        Kind::Hemibundled | Kind::CrossPair | Kind::Capped | Kind::Diversity => {
            s.k = get(p, p.k, "k")?;
            s.r = get(p, p.r.or(Some(1)), "r")?;
            if kind == Kind::Hemibundled {
                s.t = get(p, p.t.or(Some(0)), "t")?;
            }
            if s.k == 0 || s.k + s.t > n {
                return Err(Error::Range(format!("need 1 <= k and k + t <= n, got k = {}, t = {}", s.k, s.t)));
            }
            if kind == Kind::Diversity && s.k < 2 {
                return Err(Error::Range("diversity search needs k >= 2".into()));
            }
        }
        Kind::SUnion | Kind::Conditioned => {
            s.s = get(p, p.s, "s")?;
            if s.s > n {
                return Err(Error::Range(format!("need s <= n, got s = {}", s.s)));
            }
            if kind == Kind::Conditioned {
                s.r = get(p, p.r, "r")?;
                if s.s < 2 {
                    return Err(Error::Range("conditioned search needs s >= 2".into()));
                }
            }
        }
    }
    Ok(s)
}

fn resolve_engine(kind: Kind, engine: Engine, s: &Setup) -> Result<Engine> {
    let resolved = match engine {
        Engine::Auto => match kind {
            Kind::Hemibundled | Kind::CrossPair if s.k >= 3 => Engine::Shifted,
            Kind::Hemibundled | Kind::CrossPair => Engine::Brute,
            _ => Engine::Clique,
        },
        e => e,
    };
    if resolved == Engine::Shifted && matches!(kind, Kind::Capped | Kind::SUnion | Kind::Conditioned) {
        let why = match kind {
            Kind::Capped => "the overlap cap is not preserved by shifting",
            _ => "only uniform families are enumerated as down-sets",
        };
        return Err(Error::Engine { engine: "shifted", kind: kind.name(), why });
    }
    Ok(resolved)
}

/// Maximum of the kind's objective over all admissible families, with every
/// maximizer in the engine's scope and its isomorphism classes.
pub fn solve(problem: &Problem, options: &SearchOptions) -> Result<SearchReport> {
    let started = Instant::now();
    let s = setup(problem.kind, &problem.params)?;
    let engine = resolve_engine(problem.kind, problem.engine, &s)?;
    let limits = Limits {
        threads: options.threads.max(1),
        deadline: options.max_duration.map(|d| started + d),
        started,
    };
    let raw = match engine {
        Engine::Shifted => solve_shifted(problem.kind, &s, &limits)?,
        _ => solve_exhaustive(problem.kind, &s, engine, &limits)?,
    };
    let bound = expected::strict_bound(problem.kind, &problem.params);
    let optimum = raw.best.map(|v| v as u64);
    let matches_bound = match (&bound, optimum) {
        (Some(b), Some(v)) => b.as_u64() == Some(v),
        _ => false,
    };
    let mut classes = Vec::new();
    if options.classify {
        for c in classify_maximizers(&raw.maximizers)? {
            let partner = if problem.kind.is_pair() { Some(max_partner(&c.representative, s.k)?) } else { None };
            classes.push(ReportClass { representative: c.representative, partner, size: c.size });
        }
    }
    Ok(SearchReport {
        kind: problem.kind,
        params: problem.params,
        engine,
        optimum,
        bound,
        matches_bound,
        maximizers: raw.maximizers,
        classes,
        exhaustive: raw.exhaustive,
        note: raw.note,
        nodes: raw.nodes,
        elapsed: started.elapsed(),
    })
}

struct Raw {
    best: Option<usize>,
    maximizers: Vec<Family>,
    exhaustive: bool,
    note: Option<String>,
    nodes: u64,
}

fn popcount(m: u64) -> usize {
    m.count_ones() as usize
}

/// `|F| - Δ(F)` for a list of masks over `[n]`.
fn gamma(masks: impl Iterator<Item = u64> + Clone, n: usize) -> usize {
    let total = masks.clone().count();
    let max_deg = (0..n).map(|i| masks.clone().filter(|m| m >> i & 1 == 1).count()).max().unwrap_or(0);
    total - max_deg
}

struct Hemi {
    r: usize,
}

impl Objective for Hemi {
    fn value(&self, node: &Node) -> Option<usize> {
        (node.f.len() >= self.r).then(|| node.f.len() + node.partner.count())
    }

    fn dead(&self, node: &Node) -> bool {
        node.f.len() + node.cands.count() < self.r
    }
}

struct Cross {
    r: usize,
}

impl Objective for Cross {
    fn value(&self, node: &Node) -> Option<usize> {
        let p = node.partner.count();
        (node.f.len().min(p) >= self.r).then(|| node.f.len() + p)
    }

    fn dead(&self, node: &Node) -> bool {
        node.f.len() + node.cands.count() < self.r || node.partner.count() < self.r
    }
}

/// `G` is the largest partner minus just enough common members.
struct Capped {
    r: usize,
    a_in_b: Vec<usize>,
}

impl Objective for Capped {
    fn value(&self, node: &Node) -> Option<usize> {
        let p = node.partner.count();
        let overlap = node.f.iter().filter(|&&i| node.partner.contains(self.a_in_b[i])).count();
        let g = p - overlap.saturating_sub(self.r.saturating_sub(1));
        (node.f.len() >= self.r && g >= self.r).then(|| node.f.len() + g)
    }

    fn dead(&self, node: &Node) -> bool {
        node.f.len() + node.cands.count() < self.r || node.partner.count() < self.r
    }
}

/// The family is `A ∪ {B ∪ {1}}` with `A = F(1̄)` and the partner as
/// `F(1)`; element 1 is kept a maximum-degree element, so the diversity is
/// `|A|`.
struct Diverse {
    r: usize,
    n: usize,
    /// For each element, the B-vertices avoiding it.
    b_without: Vec<Bits>,
}

impl Objective for Diverse {
    fn value(&self, node: &Node) -> Option<usize> {
        (node.f.len() >= self.r).then(|| node.f.len() + node.partner.count())
    }

    fn dead(&self, node: &Node) -> bool {
        if node.f.len() + node.cands.count() < self.r {
            return true;
        }
        // deg(i) > deg(1) only grows along a branch
        (1..self.n).any(|i| {
            let a_deg = node.masks().filter(|m| m >> i & 1 == 1).count();
            a_deg > node.partner.and_count(&self.b_without[i])
        })
    }
}

struct Union;

impl Objective for Union {
    fn value(&self, node: &Node) -> Option<usize> {
        Some(node.graph.forced.len() + node.f.len())
    }
}

struct CondEven {
    r: usize,
    top: Bits,
    forced_top: usize,
}

impl Objective for CondEven {
    fn value(&self, node: &Node) -> Option<usize> {
        let top = self.forced_top + node.f.iter().filter(|&&i| self.top.contains(i)).count();
        (top >= self.r).then(|| node.graph.forced.len() + node.f.len())
    }

    fn dead(&self, node: &Node) -> bool {
        let top = self.forced_top + node.f.iter().filter(|&&i| self.top.contains(i)).count();
        top + node.cands.and_count(&self.top) < self.r
    }
}

/// Diversity of a family never drops when sets are added, so the layer
/// `d+1` reachable from a node bounds every descendant.
struct CondOdd {
    r: usize,
    n: usize,
    top: Bits,
    forced_top: Vec<u64>,
}

impl CondOdd {
    fn layer(&self, node: &Node, with_cands: bool) -> Vec<u64> {
        let mut out = self.forced_top.clone();
        out.extend(node.f.iter().copied().filter(|&i| self.top.contains(i)).map(|i| node.graph.a[i]));
        if with_cands {
            out.extend(node.cands.and(&self.top).iter().map(|i| node.graph.a[i]));
        }
        out
    }
}

impl Objective for CondOdd {
    fn value(&self, node: &Node) -> Option<usize> {
        (gamma(self.layer(node, false).into_iter(), self.n) >= self.r).then(|| node.graph.forced.len() + node.f.len())
    }

    fn dead(&self, node: &Node) -> bool {
        gamma(self.layer(node, true).into_iter(), self.n) < self.r
    }
}

fn check_size(count: usize) -> Result<()> {
    if count > EXHAUSTIVE_VERTEX_LIMIT {
        return Err(Error::Infeasible(format!(
            "{count} candidate sets exceed the exhaustive limit of {EXHAUSTIVE_VERTEX_LIMIT}"
        )));
    }
    Ok(())
}

fn meet(a: u64, b: u64) -> bool {
    a & b != 0
}

fn solve_exhaustive(kind: Kind, s: &Setup, engine: Engine, limits: &Limits) -> Result<Raw> {
    let bound = if engine == Engine::Brute { Bound::Trivial } else { Bound::Coloring };
    let n = s.n;
    let to_family = |masks: Vec<u64>| Family::from_masks(n, masks).expect("masks inside [n]");
    match kind {
        Kind::Hemibundled | Kind::CrossPair | Kind::Capped => {
            let a: Vec<u64> = k_subsets(n, s.k + s.t).collect();
            let b: Vec<u64> = k_subsets(n, s.k).collect();
            check_size(a.len())?;
            let t = s.t;
            let graph = if kind == Kind::Hemibundled {
                Graph::new(a, b, |x, y| popcount(x & y) > t, meet)
            } else {
                Graph::new(a, b, |_, _| true, meet)
            };
            let out = match kind {
                Kind::Hemibundled => bnb::run(&graph, &Hemi { r: s.r }, bound, limits)?,
                Kind::CrossPair => bnb::run(&graph, &Cross { r: s.r }, bound, limits)?,
                _ => {
                    // A and B are the same list of k-sets
                    let a_in_b = (0..graph.a.len()).collect();
                    bnb::run(&graph, &Capped { r: s.r, a_in_b }, bound, limits)?
                }
            };
            let maximizers =
                out.maximizers.iter().map(|f| to_family(f.iter().map(|&i| graph.a[i]).collect())).collect();
            Ok(Raw { best: out.best, maximizers, exhaustive: true, note: None, nodes: out.nodes })
        }
        Kind::Diversity => {
            // sets avoiding element 1, as masks over [n]
            let a: Vec<u64> = k_subsets(n - 1, s.k).map(|m| m << 1).collect();
            let b: Vec<u64> = k_subsets(n - 1, s.k - 1).map(|m| m << 1).collect();
            check_size(a.len())?;
            let graph = Graph::new(a, b, meet, meet);
            let b_without = (0..n)
                .map(|i| {
                    let mut bits = Bits::new(graph.b.len());
                    for (j, &m) in graph.b.iter().enumerate() {
                        if m >> i & 1 == 0 {
                            bits.insert(j);
                        }
                    }
                    bits
                })
                .collect();
            let out = bnb::run(&graph, &Diverse { r: s.r, n, b_without }, bound, limits)?;
            let maximizers = out
                .maximizers
                .iter()
                .map(|f| {
                    let mut p = Bits::full(graph.b.len());
                    for &i in f {
                        p.and_assign(&graph.a_meets[i]);
                    }
                    let masks = f.iter().map(|&i| graph.a[i]).chain(p.iter().map(|j| graph.b[j] | 1)).collect();
                    to_family(masks)
                })
                .collect();
            let note = Some("maximizers are listed with element 1 of maximum degree".to_string());
            Ok(Raw { best: out.best, maximizers, exhaustive: true, note, nodes: out.nodes })
        }
        Kind::SUnion | Kind::Conditioned => {
            let limit = s.s;
            let all: Vec<u64> = (0..=limit).flat_map(|i| k_subsets(n, i)).collect();
            let fits = |x: u64, y: u64| popcount(x | y) <= limit;
            let (forced, a): (Vec<u64>, Vec<u64>) =
                all.iter().partition(|&&x| all.iter().all(|&y| fits(x, y)));
            check_size(a.len())?;
            let mut graph = Graph::new(a, Vec::new(), fits, |_, _| true);
            graph.forced = forced;
            let d = s.s / 2;
            let mut top = Bits::new(graph.a.len());
            for (i, &m) in graph.a.iter().enumerate() {
                if popcount(m) == d + 1 {
                    top.insert(i);
                }
            }
            let forced_top: Vec<u64> = graph.forced.iter().copied().filter(|&m| popcount(m) == d + 1).collect();
            let out = match kind {
                Kind::SUnion => bnb::run(&graph, &Union, bound, limits)?,
                _ if s.s.is_multiple_of(2) => {
                    bnb::run(&graph, &CondEven { r: s.r, top, forced_top: forced_top.len() }, bound, limits)?
                }
                _ => bnb::run(&graph, &CondOdd { r: s.r, n, top, forced_top }, bound, limits)?,
            };
            let maximizers = out
                .maximizers
                .iter()
                .map(|f| to_family(graph.forced.iter().copied().chain(f.iter().map(|&i| graph.a[i])).collect()))
                .collect();
            Ok(Raw { best: out.best, maximizers, exhaustive: true, note: None, nodes: out.nodes })
        }
    }
}

/// Families kept for the exchange repair of the diversity engine.
const REPAIR_POOL: usize = 256;

fn solve_shifted(kind: Kind, s: &Setup, limits: &Limits) -> Result<Raw> {
    let n = s.n;
    let uniform = if kind == Kind::Hemibundled { s.k + s.t } else { s.k };
    let poset = Dominance::new(n, uniform)?;
    let t = s.t;
    let rows = match kind {
        Kind::Hemibundled => compat_rows(&poset, |x, y| popcount(x & y) > t),
        Kind::Diversity => compat_rows(&poset, meet),
        _ => compat_rows(&poset, |_, _| true),
    };
    let b: Vec<u64> = k_subsets(n, s.k).collect();
    let meets: Vec<Bits> = poset
        .sets
        .iter()
        .map(|&a| {
            let mut row = Bits::new(b.len());
            for (j, &m) in b.iter().enumerate() {
                if meet(a, m) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();

    let mut best: Option<usize> = None;
    let mut found: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut near_misses: Vec<Vec<u64>> = Vec::new();
    let r = s.r;
    let pair = kind != Kind::Diversity;
    let nodes = walk_downsets(&poset, &rows, limits.deadline, &mut |members, cands, from| {
        let f = members.len();
        let remaining = cands.count_from(from);
        if f + remaining < r {
            return false;
        }
        let (value, ub) = if pair {
            let mut partner = Bits::full(b.len());
            for &i in members {
                partner.and_assign(&meets[i]);
            }
            let p = partner.count();
            let ok = f >= r && (kind == Kind::Hemibundled || p >= r);
            if kind == Kind::CrossPair && p < r {
                return false;
            }
            (ok.then_some(f + p), f + remaining + p)
        } else {
            let masks = members.iter().map(|&i| poset.sets[i]);
            let ok = gamma(masks.clone(), n) >= r;
            if !ok && f > best.unwrap_or(0) {
                near_misses.push(masks.collect());
                if near_misses.len() > 4 * REPAIR_POOL {
                    near_misses.sort_by_key(|m| std::cmp::Reverse(m.len()));
                    near_misses.truncate(REPAIR_POOL);
                }
            }
            (ok.then_some(f), f + remaining)
        };
        if let Some(v) = value {
            if best.is_none_or(|b| v >= b) {
                best = Some(best.map_or(v, |b| b.max(v)));
                found.push((v, members.iter().map(|&i| poset.sets[i]).collect()));
            }
        }
        best.is_none_or(|b| ub >= b)
    })?;

    let mut note = Some("shifted maximizers only".to_string());
    if kind == Kind::Diversity {
        // shifting may lower the diversity, so try one exchange on large
        // shifted families that fall short of it
        near_misses.retain(|m| m.len() >= best.unwrap_or(0));
        near_misses.sort_by_key(|m| std::cmp::Reverse(m.len()));
        near_misses.truncate(REPAIR_POOL);
        for fam in &near_misses {
            if let Some(repaired) = repair_diversity(fam, n, s.k, r) {
                let v = repaired.len();
                if best.is_none_or(|b| v >= b) {
                    best = Some(best.map_or(v, |b| b.max(v)));
                    found.push((v, repaired));
                }
            }
        }
        note = Some("lower bound: shifted families plus one-exchange repair".to_string());
    }
    let mut maximizers: Vec<Family> = found
        .into_iter()
        .filter(|(v, _)| Some(*v) == best)
        .map(|(_, m)| Family::from_masks(n, m).expect("masks inside [n]"))
        .collect();
    maximizers.sort_by(|x, y| x.cmp_members(y));
    maximizers.dedup();
    Ok(Raw { best, maximizers, exhaustive: false, note, nodes })
}

/// One member swapped for a new `k`-set, keeping the family intersecting and
/// reaching diversity `r`; the lexicographically first such swap.
fn repair_diversity(fam: &[u64], n: usize, k: usize, r: usize) -> Option<Vec<u64>> {
    for drop in 0..fam.len() {
        let rest: Vec<u64> = fam.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &m)| m).collect();
        for add in k_subsets(n, k) {
            if fam.contains(&add) || !rest.iter().all(|&m| meet(m, add)) {
                continue;
            }
            let mut cand = rest.clone();
            cand.push(add);
            if gamma(cand.iter().copied(), n) >= r {
                cand.sort_unstable();
                return Some(cand);
            }
        }
    }
    None
}
