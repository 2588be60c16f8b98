//! The reflection framework: root tuples attached to exchange-graph
//! vertices, their mutation, the Euler conditions, and recovery of the
//! exchange matrix from a tuple.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix, Vector};
use crate::roots::{sign_of, Membership, RootLatticeForms, RootSystem, SignClass};

/// `C(v)`: entry `k` is the root labelling the edge with label `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CTuple(Vec<Vector>);

impl CTuple {
    pub fn new(entries: Vec<Vector>) -> Self {
        Self(entries)
    }

    /// The simple roots, label `i` mapped to `α_i`.
    pub fn base(n: usize) -> Self {
        Self((0..n).map(|i| linalg::unit(n, i)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Vector] {
        &self.0
    }

    pub fn get(&self, k: usize) -> &[BigInt] {
        &self.0[k]
    }

    pub fn into_entries(self) -> Vec<Vector> {
        self.0
    }

    /// Entries sorted lexicographically; identifies the vertex.
    pub fn key(&self) -> Vec<Vector> {
        let mut key = self.0.clone();
        key.sort();
        key
    }

    pub fn is_distinct(&self) -> bool {
        self.0.iter().collect::<BTreeSet<_>>().len() == self.0.len()
    }

    /// Checks every entry against an enumerated root system. Entries whose
    /// status is unknown are returned when `allow_unknown` is set, and are an
    /// error otherwise.
    pub fn check_roots(&self, roots: &RootSystem, allow_unknown: bool) -> Result<Vec<usize>> {
        let mut unknown = Vec::new();
        for (k, v) in self.0.iter().enumerate() {
            match roots.contains(v) {
                Membership::Yes => {}
                Membership::No => return Err(Error::NotARoot { vector: v.clone() }),
                Membership::Unknown if allow_unknown => unknown.push(k),
                Membership::Unknown => {
                    return Err(Error::Unknown {
                        vector: v.clone(),
                        depth: roots.depth(),
                    })
                }
            }
        }
        Ok(unknown)
    }
}

/// Mutation of a root tuple at label `k`. The tuple must satisfy the Euler
/// conditions.
///
/// With `β = C(k)`: label `k` becomes `-β`, and every other entry `γ`
/// becomes `t_β(γ)` when `sign(β)·ω(β, γ) ≥ 0` and stays `γ` otherwise.
/// Weighting by the sign of `β` makes the operation an involution and keeps
/// it in step with matrix mutation of the c-vectors; for positive `β` it is
/// the bare `ω(β, γ) ≥ 0` test.
pub fn framework_mutate(forms: &RootLatticeForms, c: &CTuple, k: usize) -> Result<CTuple> {
    let report = check_euler(forms, c);
    if let Some((condition, labels)) = report.first_failure() {
        return Err(Error::EulerViolation { condition, labels });
    }
    framework_mutate_unchecked(forms, c, k)
}

/// [`framework_mutate`] without the Euler precondition.
pub fn framework_mutate_unchecked(
    forms: &RootLatticeForms,
    c: &CTuple,
    k: usize,
) -> Result<CTuple> {
    let n = c.rank();
    if k >= n {
        return Err(Error::LabelOutOfRange { label: k, rank: n });
    }
    let beta = c.get(k);
    let flip = match sign_of(beta) {
        SignClass::Positive => false,
        SignClass::Negative => true,
        SignClass::Neither => {
            return Err(Error::NotARoot {
                vector: beta.to_vec(),
            })
        }
    };
    let mut out = Vec::with_capacity(n);
    for (j, gamma) in c.entries().iter().enumerate() {
        if j == k {
            out.push(linalg::negated(beta));
            continue;
        }
        let mut w = forms.pair_omega(beta, gamma);
        if flip {
            w = -w;
        }
        if w.is_negative() {
            out.push(gamma.clone());
        } else {
            out.push(forms.reflect(beta, gamma)?);
        }
    }
    Ok(CTuple(out))
}

/// Outcome of the three Euler conditions on a tuple, with witnesses as
/// label pairs (E1, E2) or a directed cycle of labels (E3).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EulerReport {
    pub e1_failures: Vec<(usize, usize)>,
    pub e2_failures: Vec<(usize, usize)>,
    pub e3_cycle: Option<Vec<usize>>,
}

impl EulerReport {
    pub fn e1(&self) -> bool {
        self.e1_failures.is_empty()
    }

    pub fn e2(&self) -> bool {
        self.e2_failures.is_empty()
    }

    pub fn e3(&self) -> bool {
        self.e3_cycle.is_none()
    }

    pub fn passed(&self) -> bool {
        self.e1() && self.e2() && self.e3()
    }

    pub fn first_failure(&self) -> Option<(&'static str, Vec<usize>)> {
        if let Some(&(i, j)) = self.e1_failures.first() {
            Some(("E1", vec![i, j]))
        } else if let Some(&(i, j)) = self.e2_failures.first() {
            Some(("E2", vec![i, j]))
        } else {
            self.e3_cycle.clone().map(|c| ("E3", c))
        }
    }
}

/// E1: `E(β, γ) = 0` for positive `β`, negative `γ`.
/// E2: `E(β, γ) ≤ 0` for distinct entries of equal sign.
/// E3: the graph from [`gamma_graph`] is acyclic.
pub fn check_euler(forms: &RootLatticeForms, c: &CTuple) -> EulerReport {
    let n = c.rank();
    let signs: Vec<SignClass> = c.entries().iter().map(|v| sign_of(v)).collect();
    let mut report = EulerReport::default();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let e = forms.pair_euler(c.get(i), c.get(j));
            match (signs[i], signs[j]) {
                (SignClass::Positive, SignClass::Negative) if !e.is_zero() => {
                    report.e1_failures.push((i, j))
                }
                (a, b) if a == b && a != SignClass::Neither && e.is_positive() => {
                    report.e2_failures.push((i, j))
                }
                _ => {}
            }
        }
    }
    report.e3_cycle = gamma_graph(forms, c).find_cycle();
    report
}

/// Directed graph on the labels of a tuple with an arc `i -> j` (for `i ≠ j`)
/// whenever `E(C(i), C(j)) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaGraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl GammaGraph {
    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        // repeatedly strip sinks; whatever survives lies on or leads into a cycle
        let mut outdeg = vec![0usize; self.n];
        for &(i, _) in &self.arcs {
            outdeg[i] += 1;
        }
        let mut alive = vec![true; self.n];
        let mut stack: Vec<usize> = (0..self.n).filter(|&i| outdeg[i] == 0).collect();
        while let Some(j) = stack.pop() {
            alive[j] = false;
            for &(i, jj) in &self.arcs {
                if jj == j && alive[i] {
                    outdeg[i] -= 1;
                    if outdeg[i] == 0 {
                        stack.push(i);
                    }
                }
            }
        }
        let start = (0..self.n).find(|&i| alive[i])?;
        // walk forward through surviving vertices until one repeats
        let mut seen = vec![usize::MAX; self.n];
        let mut path = Vec::new();
        let mut cur = start;
        while seen[cur] == usize::MAX {
            seen[cur] = path.len();
            path.push(cur);
            cur = self
                .arcs
                .iter()
                .find(|&&(i, j)| i == cur && alive[j])
                .map(|&(_, j)| j)
                .expect("surviving vertex has a surviving successor");
        }
        Some(path[seen[cur]..].to_vec())
    }
}

pub fn gamma_graph(forms: &RootLatticeForms, c: &CTuple) -> GammaGraph {
    let n = c.rank();
    let mut arcs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && !forms.pair_euler(c.get(i), c.get(j)).is_zero() {
                arcs.insert((i, j));
            }
        }
    }
    GammaGraph { n, arcs }
}

/// Exchange matrix read off a tuple: `b_ij = ω(β_i^∨, β_j)` with
/// `β^∨ = 2β/(β, β)`.
pub fn b_from_c(forms: &RootLatticeForms, c: &CTuple) -> Result<IntMatrix> {
    let n = c.rank();
    let mut b = IntMatrix::zeros(n, n);
    for i in 0..n {
        let beta = c.get(i);
        let norm = forms.pair_sym(beta, beta);
        if !norm.is_positive() {
            return Err(Error::NotARoot {
                vector: beta.to_vec(),
            });
        }
        for j in 0..n {
            let (q, r) = (BigInt::from(2) * forms.pair_omega(beta, c.get(j))).div_rem(&norm);
            if !r.is_zero() {
                return Err(Error::NonIntegral { i, j });
            }
            b[(i, j)] = q;
        }
    }
    Ok(b)
}
