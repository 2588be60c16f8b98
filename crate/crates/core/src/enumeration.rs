//! Exchange-graph breadth-first search, the brute-force c-vector oracle, and
//! the cross-validation harness.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exceptional::is_cvector_collection;
use crate::exchange::{is_sign_coherent, ExchangeMatrix, ExtendedSeed};
use crate::framework::{
    b_from_c, check_euler, framework_mutate, framework_mutate_unchecked, CTuple,
};
use crate::linalg::{self, IntMatrix, Vector};
use crate::roots::{sign_of, Membership, RootLatticeForms, RootSystem, SignClass};

/// Depth of simple-reflection orbit enumeration used for root checks.
pub const DEFAULT_ROOT_DEPTH: usize = 10;

/// Sorted c-vectors; the identity of an exchange-graph vertex.
pub type CSetKey = Vec<Vector>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub seed: ExtendedSeed,
    pub tuple: CTuple,
    /// Tree distance from the initial seed at discovery.
    pub depth: usize,
}

/// Top half with rows and columns ordered by sorted c-vectors, so that seeds
/// reached along different tree paths compare equal exactly when they agree
/// up to relabeling.
pub fn canonical_top(seed: &ExtendedSeed) -> IntMatrix {
    let c = seed.c_vectors();
    let mut perm: Vec<usize> = (0..c.len()).collect();
    perm.sort_by(|&a, &b| c[a].cmp(&c[b]));
    seed.top().reindexed(&perm)
}

/// Exchange graph with vertices keyed by c-set. Each vertex keeps the seed
/// and tuple of the first tree vertex that reached it, and labels at that
/// vertex refer to this representative. A half-edge `(u, k) -> (v, k')`
/// means mutating `u` at `k` reaches `v`, where the mutated root sits at
/// label `k'`.
#[derive(Clone, Debug, Default)]
pub struct ExchangeGraph {
    vertices: BTreeMap<CSetKey, Vertex>,
    half_edges: BTreeMap<(CSetKey, usize), (CSetKey, usize)>,
    complete: bool,
}

impl ExchangeGraph {
    pub fn vertices(&self) -> &BTreeMap<CSetKey, Vertex> {
        &self.vertices
    }

    pub fn half_edges(&self) -> &BTreeMap<(CSetKey, usize), (CSetKey, usize)> {
        &self.half_edges
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn c_sets(&self) -> BTreeSet<CSetKey> {
        self.vertices.keys().cloned().collect()
    }

    /// Each undirected edge once, as `(u, k, v, k')` with `(u, k) < (v, k')`.
    pub fn edges(&self) -> Vec<(&CSetKey, usize, &CSetKey, usize)> {
        self.half_edges
            .iter()
            .filter(|((u, k), (v, kk))| (u, *k) < (v, *kk))
            .map(|((u, k), (v, kk))| (u, *k, v, *kk))
            .collect()
    }

    /// Every half-edge has its reverse.
    pub fn is_involutive(&self) -> bool {
        self.half_edges
            .iter()
            .all(|(from, to)| self.half_edges.get(to) == Some(from))
    }

    /// Exactly one half-edge per vertex and label.
    pub fn is_regular(&self, n: usize) -> bool {
        self.vertices
            .keys()
            .all(|key| (0..n).all(|k| self.half_edges.contains_key(&(key.clone(), k))))
    }

    pub fn is_connected(&self) -> bool {
        let Some(start) = self.vertices.keys().next() else {
            return true;
        };
        let mut adjacency: BTreeMap<&CSetKey, Vec<&CSetKey>> = BTreeMap::new();
        for ((u, _), (v, _)) in &self.half_edges {
            adjacency.entry(u).or_default().push(v);
        }
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in adjacency.get(u).into_iter().flatten() {
                if seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        seen.len() == self.vertices.len()
    }
}

fn position_of(tuple: &CTuple, v: &[num_bigint::BigInt]) -> Option<usize> {
    tuple.entries().iter().position(|e| e.as_slice() == v)
}

/// Breadth-first search of the exchange graph from the initial seed.
///
/// Every step mutates both the seed and the framework tuple and fails if
/// their c-vectors disagree, or if a c-set is reached again with an exchange
/// matrix that differs beyond relabeling. Vertices further than `max_depth`
/// tree edges from the start are not added; the graph is complete when
/// nothing had to be left out.
pub fn bfs_exchange(b: &ExchangeMatrix, max_depth: usize) -> Result<ExchangeGraph> {
    let n = b.rank();
    let forms = RootLatticeForms::from_exchange(b);
    let mut graph = ExchangeGraph {
        complete: true,
        ..ExchangeGraph::default()
    };
    let start = Vertex {
        seed: b.initial_seed(),
        tuple: CTuple::base(n),
        depth: 0,
    };
    let start_key = start.tuple.key();
    graph.vertices.insert(start_key.clone(), start);
    let mut queue = VecDeque::from([start_key]);
    while let Some(key) = queue.pop_front() {
        let vertex = graph.vertices[&key].clone();
        for k in 0..n {
            let seed = vertex.seed.mutate(k)?;
            let tuple = framework_mutate(&forms, &vertex.tuple, k)?;
            if seed.c_vectors() != tuple.entries() {
                return Err(Error::FrameworkMismatch {
                    seed: seed.c_vectors(),
                    framework: tuple.into_entries(),
                });
            }
            let next = tuple.key();
            match graph.vertices.get(&next) {
                Some(existing) => {
                    if canonical_top(&existing.seed) != canonical_top(&seed) {
                        return Err(Error::CollisionMismatch { key: next });
                    }
                }
                None if vertex.depth < max_depth => {
                    graph.vertices.insert(
                        next.clone(),
                        Vertex {
                            seed,
                            tuple,
                            depth: vertex.depth + 1,
                        },
                    );
                    queue.push_back(next.clone());
                }
                None => {
                    graph.complete = false;
                    continue;
                }
            }
            let back = linalg::negated(vertex.tuple.get(k));
            let kk = position_of(&graph.vertices[&next].tuple, &back).ok_or(Error::Invariant(
                "mutated root missing from the neighbouring c-set",
            ))?;
            for (from, to) in [
                ((key.clone(), k), (next.clone(), kk)),
                ((next.clone(), kk), (key.clone(), k)),
            ] {
                if let Some(prev) = graph.half_edges.insert(from, to.clone()) {
                    if prev != to {
                        return Err(Error::Invariant("label leads to two different neighbours"));
                    }
                }
            }
        }
    }
    Ok(graph)
}

/// Every n-subset of the (finite) root system passing the c-vector
/// collection test, as sorted keys.
pub fn oracle_cvector_collections(
    forms: &RootLatticeForms,
    roots: &RootSystem,
) -> Result<BTreeSet<CSetKey>> {
    if !roots.is_complete() {
        return Err(Error::InfiniteType);
    }
    let all: Vec<Vector> = roots.roots().iter().cloned().collect();
    let mut out = BTreeSet::new();
    let mut chosen = Vec::new();
    subsets(forms, roots, &all, 0, &mut chosen, &mut out)?;
    Ok(out)
}

fn subsets(
    forms: &RootLatticeForms,
    roots: &RootSystem,
    all: &[Vector],
    from: usize,
    chosen: &mut Vec<usize>,
    out: &mut BTreeSet<CSetKey>,
) -> Result<()> {
    let n = forms.rank();
    if chosen.len() == n {
        let vs: Vec<Vector> = chosen.iter().map(|&i| all[i].clone()).collect();
        if is_cvector_collection(forms, roots, &vs)?.is_accepted() {
            out.insert(vs);
        }
        return Ok(());
    }
    for i in from..all.len() {
        // a same-sign pair with positive pairing can never be completed
        let clash = chosen.iter().any(|&j| {
            sign_of(&all[i]) == sign_of(&all[j]) && forms.pair_sym(&all[i], &all[j]) > Zero::zero()
        });
        if clash {
            continue;
        }
        chosen.push(i);
        subsets(forms, roots, all, i + 1, chosen, out)?;
        chosen.pop();
    }
    Ok(())
}

/// Matrix mutation as seen by the harness; tests substitute faulty
/// implementations.
pub trait SeedMutator {
    fn mutate(&self, seed: &ExtendedSeed, k: usize) -> Result<ExtendedSeed>;
}

/// The real thing: [`ExtendedSeed::mutate`].
#[derive(Clone, Copy, Debug, Default)]
pub struct MatrixMutation;

impl SeedMutator for MatrixMutation {
    fn mutate(&self, seed: &ExtendedSeed, k: usize) -> Result<ExtendedSeed> {
        seed.mutate(k)
    }
}

/// Pass/fail counts for one check, with the first counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckTally {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl CheckTally {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            passed: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub vertices: usize,
    pub complete: bool,
    pub checks: Vec<CheckTally>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn check(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_NAMES: [&str; 11] = [
    "sign-coherence",
    "root-membership",
    "distinct-entries",
    "euler",
    "framework-agreement",
    "b-from-c",
    "skew-symmetrizable",
    "mutation-involution",
    "framework-involution",
    "omega-zero-fixed",
    "c-set-collision",
];

/// Runs every check over the exchange graph explored to `max_depth`.
pub fn verify_all(b: &ExchangeMatrix, max_depth: usize) -> VerifyReport {
    verify_with(b, max_depth, &MatrixMutation)
}

/// [`verify_all`] with an arbitrary mutation implementation. Failures are
/// tallied rather than returned, so exploration continues past them.
pub fn verify_with(
    b: &ExchangeMatrix,
    max_depth: usize,
    mutator: &dyn SeedMutator,
) -> VerifyReport {
    let n = b.rank();
    let forms = RootLatticeForms::from_exchange(b);
    let roots = forms.real_roots(DEFAULT_ROOT_DEPTH);
    let mut tallies: Vec<CheckTally> = CHECK_NAMES
        .iter()
        .map(|&name| CheckTally::new(name))
        .collect();
    let mut vertices: BTreeMap<CSetKey, Vertex> = BTreeMap::new();
    let mut complete = true;

    let start = Vertex {
        seed: b.initial_seed(),
        tuple: CTuple::base(n),
        depth: 0,
    };
    let start_key = start.tuple.key();
    vertices.insert(start_key.clone(), start);
    let mut queue = VecDeque::from([start_key]);
    while let Some(key) = queue.pop_front() {
        let vertex = vertices[&key].clone();
        check_vertex(&forms, &roots, &vertex, mutator, &mut tallies);
        for k in 0..n {
            let Ok(seed) = mutator.mutate(&vertex.seed, k) else {
                tallies[7].record(false, || format!("mutation failed at {key:?}, label {k}"));
                continue;
            };
            let tuple = framework_mutate_unchecked(&forms, &vertex.tuple, k)
                .unwrap_or_else(|_| CTuple::new(seed.c_vectors()));
            let next = CTuple::new(seed.c_vectors()).key();
            match vertices.get(&next) {
                Some(existing) => {
                    let same = canonical_top(&existing.seed) == canonical_top(&seed);
                    tallies[10].record(same, || {
                        format!("c-set {next:?} with two exchange matrices")
                    });
                }
                None if vertex.depth < max_depth => {
                    vertices.insert(
                        next.clone(),
                        Vertex {
                            seed,
                            tuple,
                            depth: vertex.depth + 1,
                        },
                    );
                    queue.push_back(next);
                }
                None => complete = false,
            }
        }
    }
    VerifyReport {
        vertices: vertices.len(),
        complete,
        checks: tallies,
    }
}

fn is_root(forms: &RootLatticeForms, roots: &RootSystem, v: &[num_bigint::BigInt]) -> bool {
    match roots.contains(v) {
        Membership::Yes => true,
        Membership::No => false,
        Membership::Unknown => forms.real_root_certificate(v).is_some(),
    }
}

fn check_vertex(
    forms: &RootLatticeForms,
    roots: &RootSystem,
    vertex: &Vertex,
    mutator: &dyn SeedMutator,
    t: &mut [CheckTally],
) {
    let seed = &vertex.seed;
    let tuple = &vertex.tuple;
    let c = seed.c_vectors();
    for v in &c {
        t[0].record(is_sign_coherent(v) && !linalg::is_zero(v), || {
            format!("c-vector {v:?}")
        });
        t[1].record(is_root(forms, roots, v), || {
            format!("c-vector {v:?} is not a real root")
        });
    }
    t[2].record(CTuple::new(c.clone()).is_distinct(), || {
        format!("repeated c-vector in {c:?}")
    });
    let euler = check_euler(forms, tuple);
    t[3].record(euler.passed(), || {
        format!("{:?} at {:?}", euler.first_failure(), tuple.entries())
    });
    t[4].record(c == tuple.entries(), || {
        format!("seed {c:?} vs framework {:?}", tuple.entries())
    });
    let recovered = b_from_c(forms, &CTuple::new(c.clone()));
    t[5].record(recovered.as_ref() == Ok(&seed.top()), || {
        format!("top {:?} vs recovered {recovered:?}", seed.top())
    });
    t[6].record(seed.top_is_skew_symmetrizable(), || {
        format!("top {:?}", seed.top())
    });
    let n = seed.rank();
    for k in 0..n {
        let twice = mutator.mutate(seed, k).and_then(|s| mutator.mutate(&s, k));
        t[7].record(twice.as_ref() == Ok(seed), || {
            format!("label {k} at c-set {c:?}")
        });
        let back = framework_mutate_unchecked(forms, tuple, k)
            .and_then(|u| framework_mutate_unchecked(forms, &u, k));
        t[8].record(back.as_ref() == Ok(tuple), || {
            format!("label {k} at tuple {:?}", tuple.entries())
        });
    }
    for beta in tuple.entries() {
        if sign_of(beta) == SignClass::Neither {
            continue;
        }
        for gamma in tuple.entries() {
            if beta == gamma || !forms.pair_omega(beta, gamma).is_zero() {
                continue;
            }
            let fixed = forms.reflect(beta, gamma).as_ref() == Ok(gamma);
            t[9].record(fixed, || format!("t_{beta:?} moves {gamma:?} with ω = 0"));
        }
    }
}
