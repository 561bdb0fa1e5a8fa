//! Branch and bound over families of candidate sets.
//!
//! A node is a family `F` of candidates (the "A side") together with the
//! B-side vertices compatible with every member of `F`, its partner. The
//! candidates of a node are the A-vertices compatible with all of `F` that
//! come earlier in the parent's ordering, so every family is visited once.
//!
//! Every objective handled here is at most `|F| + |partner|`, which is the
//! size of a clique in the compatibility graph on A ∪ B. The coloring bound
//! colors the partner first (the B-side is a clique) and lets candidates join
//! a partner's class when they are incompatible with it. Subtrees are cut
//! only when the bound is strictly below the best value, so every maximizer
//! survives.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use super::bits::Bits;
use crate::error::{Error, Result};

pub(crate) struct Graph {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    /// Members of every admissible family that are not branched on.
    pub forced: Vec<u64>,
    /// A-A compatibility, without self loops.
    pub a_adj: Vec<Bits>,
    /// For each A-vertex, the compatible B-vertices.
    pub a_meets: Vec<Bits>,
    /// Transpose of `a_meets`.
    pub b_meets: Vec<Bits>,
}

impl Graph {
    pub fn new(a: Vec<u64>, b: Vec<u64>, a_compat: impl Fn(u64, u64) -> bool, ab_compat: impl Fn(u64, u64) -> bool) -> Self {
        let (na, nb) = (a.len(), b.len());
        let mut a_adj = vec![Bits::new(na); na];
        for i in 0..na {
            for j in i + 1..na {
                if a_compat(a[i], a[j]) {
                    a_adj[i].insert(j);
                    a_adj[j].insert(i);
                }
            }
        }
        let mut a_meets = vec![Bits::new(nb); na];
        let mut b_meets = vec![Bits::new(na); nb];
        for i in 0..na {
            for j in 0..nb {
                if ab_compat(a[i], b[j]) {
                    a_meets[i].insert(j);
                    b_meets[j].insert(i);
                }
            }
        }
        Graph { a, b, forced: Vec::new(), a_adj, a_meets, b_meets }
    }
}

pub(crate) struct Node<'a> {
    pub graph: &'a Graph,
    pub f: &'a [usize],
    pub partner: &'a Bits,
    pub cands: &'a Bits,
}

impl Node<'_> {
    pub fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.f.iter().map(|&i| self.graph.a[i])
    }
}

pub(crate) trait Objective: Sync {
    /// Value of the node's own family, or `None` if it breaks a side condition.
    fn value(&self, node: &Node) -> Option<usize>;

    /// True when neither the node nor any descendant can be admissible.
    fn dead(&self, _node: &Node) -> bool {
        false
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Bound {
    /// `|F| + |candidates| + |partner|`.
    Trivial,
    Coloring,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Outcome {
    pub best: Option<usize>,
    /// Maximizing families as sorted A-indices, in increasing order.
    pub maximizers: Vec<Vec<usize>>,
    pub nodes: u64,
}

pub(crate) struct Limits {
    pub threads: usize,
    pub deadline: Option<Instant>,
    pub started: Instant,
}

struct Shared {
    /// Best value plus one; zero while nothing admissible has been seen.
    best: AtomicUsize,
    cancel: AtomicBool,
    nodes: AtomicU64,
}

struct Worker<'s, O: Objective> {
    graph: &'s Graph,
    obj: &'s O,
    bound: Bound,
    shared: &'s Shared,
    deadline: Option<Instant>,
    found: Vec<(usize, Vec<usize>)>,
    nodes: u64,
}

impl<O: Objective> Worker<'_, O> {
    fn best(&self) -> usize {
        self.shared.best.load(Ordering::Relaxed)
    }

    fn record(&mut self, value: usize, f: &[usize]) {
        let cur = self.shared.best.fetch_max(value + 1, Ordering::Relaxed);
        if value + 1 >= cur {
            let mut fam = f.to_vec();
            fam.sort_unstable();
            self.found.push((value, fam));
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if self.shared.cancel.load(Ordering::Relaxed) {
                return false;
            }
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                self.shared.cancel.store(true, Ordering::Relaxed);
                return false;
            }
        }
        true
    }

    /// Candidates in branching order with the bound for each prefix.
    fn order(&self, partner: &Bits, cands: &Bits) -> (Vec<usize>, Vec<usize>) {
        let p = partner.count();
        let mut order = Vec::with_capacity(cands.count());
        let mut ub = Vec::with_capacity(order.capacity());
        match self.bound {
            Bound::Trivial => {
                for (i, v) in cands.iter().enumerate() {
                    order.push(v);
                    ub.push(i + 1 + p);
                }
            }
            Bound::Coloring => {
                let mut uncolored = cands.clone();
                for (color, b) in partner.iter().enumerate() {
                    if uncolored.is_empty() {
                        break;
                    }
                    let mut q = uncolored.and_not(&self.graph.b_meets[b]);
                    while let Some(v) = q.first() {
                        q.remove(v);
                        uncolored.remove(v);
                        q.and_not_assign(&self.graph.a_adj[v]);
                        order.push(v);
                        ub.push(color + 1);
                    }
                }
                let mut color = p;
                while !uncolored.is_empty() {
                    color += 1;
                    let mut q = uncolored.clone();
                    while let Some(v) = q.first() {
                        q.remove(v);
                        uncolored.remove(v);
                        q.and_not_assign(&self.graph.a_adj[v]);
                        order.push(v);
                        ub.push(color);
                    }
                }
                for u in ub.iter_mut() {
                    *u = (*u).max(p);
                }
            }
        }
        (order, ub)
    }

    /// Visits the node; false when the search was cancelled.
    fn expand(&mut self, f: &mut Vec<usize>, partner: &Bits, cands: &Bits) -> bool {
        if !self.tick() {
            return false;
        }
        let node = Node { graph: self.graph, f, partner, cands };
        if self.obj.dead(&node) {
            return true;
        }
        if let Some(v) = self.obj.value(&node) {
            self.record(v, f);
        }
        if cands.is_empty() {
            return true;
        }
        let (order, ub) = self.order(partner, cands);
        let mut remaining = cands.clone();
        for idx in (0..order.len()).rev() {
            if self.graph.forced.len() + f.len() + ub[idx] + 1 < self.best() {
                break;
            }
            let v = order[idx];
            remaining.remove(v);
            let child_cands = remaining.and(&self.graph.a_adj[v]);
            let child_partner = partner.and(&self.graph.a_meets[v]);
            f.push(v);
            let ok = self.expand(f, &child_partner, &child_cands);
            f.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

pub(crate) fn run<O: Objective>(graph: &Graph, obj: &O, bound: Bound, limits: &Limits) -> Result<Outcome> {
    let shared = Shared { best: AtomicUsize::new(0), cancel: AtomicBool::new(false), nodes: AtomicU64::new(0) };
    let full_a = Bits::full(graph.a.len());
    let full_b = Bits::full(graph.b.len());
    let worker = |shared| Worker {
        graph,
        obj,
        bound,
        shared,
        deadline: limits.deadline,
        found: Vec::new(),
        nodes: 0,
    };

    // the root is handled here; its children are shared out among threads
    let mut root = worker(&shared);
    root.tick();
    let root_node = Node { graph, f: &[], partner: &full_b, cands: &full_a };
    let mut found = Vec::new();
    let mut children = (Vec::new(), Vec::new());
    if !obj.dead(&root_node) {
        if let Some(v) = obj.value(&root_node) {
            root.record(v, &[]);
        }
        children = root.order(&full_b, &full_a);
    }
    found.append(&mut root.found);
    shared.nodes.fetch_add(root.nodes, Ordering::Relaxed);

    let (order, ub) = &children;
    let next = AtomicUsize::new(0);
    let threads = limits.threads.max(1).min(order.len().max(1));
    let results: Vec<Vec<(usize, Vec<usize>)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|_| {
                scope.spawn(|| {
                    let mut w = worker(&shared);
                    loop {
                        let t = next.fetch_add(1, Ordering::Relaxed);
                        if t >= order.len() || shared.cancel.load(Ordering::Relaxed) {
                            break;
                        }
                        let idx = order.len() - 1 - t;
                        if graph.forced.len() + ub[idx] + 1 < w.best() {
                            continue;
                        }
                        let v = order[idx];
                        let mut earlier = Bits::new(graph.a.len());
                        for &u in &order[..idx] {
                            earlier.insert(u);
                        }
                        let cands = earlier.and(&graph.a_adj[v]);
                        let partner = full_b.and(&graph.a_meets[v]);
                        if !w.expand(&mut vec![v], &partner, &cands) {
                            break;
                        }
                    }
                    shared.nodes.fetch_add(w.nodes, Ordering::Relaxed);
                    w.found
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });
    if shared.cancel.load(Ordering::Relaxed) {
        return Err(Error::Timeout { elapsed_ms: limits.started.elapsed().as_millis() });
    }
    for mut r in results {
        found.append(&mut r);
    }
    let best = shared.best.load(Ordering::Relaxed).checked_sub(1);
    let mut maximizers: Vec<Vec<usize>> =
        found.into_iter().filter(|(v, _)| Some(*v) == best).map(|(_, f)| f).collect();
    maximizers.sort();
    maximizers.dedup();
    Ok(Outcome { best, maximizers, nodes: shared.nodes.load(Ordering::Relaxed) })
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Size;

    impl Objective for Size {
        fn value(&self, node: &Node) -> Option<usize> {
            Some(node.f.len() + node.partner.count())
        }
    }

    fn limits(threads: usize) -> Limits {
        Limits { threads, deadline: None, started: Instant::now() }
    }

    /// All maximum cliques of a small graph by subset enumeration.
    fn brute_cliques(n: usize, adj: impl Fn(usize, usize) -> bool) -> (usize, Vec<Vec<usize>>) {
        let mut best = 0;
        let mut all = Vec::new();
        for s in 0u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
            let clique = vs.iter().all(|&a| vs.iter().all(|&b| a == b || adj(a, b)));
            if !clique {
                continue;
            }
            if vs.len() > best {
                best = vs.len();
                all.clear();
            }
            if vs.len() == best {
                all.push(vs);
            }
        }
        (best, all)
    }

    #[test]
    fn max_cliques_match_subset_enumeration() {
        // vertices are the 2-subsets of [6]; adjacent when they meet
        let a: Vec<u64> = crate::family::k_subsets(6, 2).collect();
        let g = Graph::new(a.clone(), Vec::new(), |x, y| x & y != 0, |_, _| true);
        let (best, mut expect) = brute_cliques(a.len(), |i, j| a[i] & a[j] != 0);
        expect.sort();
        for bound in [Bound::Trivial, Bound::Coloring] {
            for threads in [1, 3] {
                let out = run(&g, &Size, bound, &limits(threads)).unwrap();
                assert_eq!(out.best, Some(best));
                assert_eq!(out.maximizers, expect, "{bound:?} with {threads} threads");
            }
        }
    }

    #[test]
    fn deadline_in_the_past_times_out() {
        let a: Vec<u64> = crate::family::k_subsets(10, 3).collect();
        let g = Graph::new(a, Vec::new(), |x, y| x & y != 0, |_, _| true);
        let l = Limits { threads: 1, deadline: Some(Instant::now()), started: Instant::now() };
        assert!(matches!(run(&g, &Size, Bound::Trivial, &l), Err(Error::Timeout { .. })));
    }
}
