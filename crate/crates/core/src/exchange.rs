//! Exchange matrices, extended seeds and Fomin–Zelevinsky matrix mutation.
//!
//! Labels are 0-based throughout the library; the command-line surface
//! converts from the 1-based labels used in print.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, Vector};

/// A square, skew-symmetrizable, acyclic integer matrix together with its
/// symmetrizer `d` (so that `d_i b_ij = -d_j b_ji`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    b: IntMatrix,
    d: Vec<BigInt>,
}

impl ExchangeMatrix {
    /// Validates `b` and computes its componentwise-minimal positive
    /// symmetrizer.
    pub fn validate(b: IntMatrix) -> Result<Self> {
        check_shape(&b)?;
        check_sign_pattern(&b)?;
        let d = minimal_symmetrizer(&b)?;
        check_acyclic(&b)?;
        Ok(Self { b, d })
    }

    /// Validates `b` against a caller-supplied symmetrizer.
    pub fn with_symmetrizer(b: IntMatrix, d: Vec<BigInt>) -> Result<Self> {
        check_shape(&b)?;
        check_sign_pattern(&b)?;
        let n = b.rows();
        if d.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: d.len(),
            });
        }
        if d.iter().any(|x| !x.is_positive()) || !satisfies_symmetrizer(&b, &d) {
            return Err(Error::BadSymmetrizer { d });
        }
        check_acyclic(&b)?;
        Ok(Self { b, d })
    }

    pub fn rank(&self) -> usize {
        self.b.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.b
    }

    pub fn symmetrizer(&self) -> &[BigInt] {
        &self.d
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.b[(i, j)]
    }

    /// Topological order of the arc graph (`i -> j` when `b_ij > 0`), smallest
    /// available label first. Entry `k` is the original label placed at
    /// position `k`.
    #[allow(clippy::needless_range_loop)]
    pub fn source_order(&self) -> Vec<usize> {
        let n = self.rank();
        let mut indegree = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                if self.b[(i, j)].is_positive() {
                    indegree[j] += 1;
                }
            }
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(i) = ready.pop_first() {
            order.push(i);
            for j in 0..n {
                if self.b[(i, j)].is_positive() {
                    indegree[j] -= 1;
                    if indegree[j] == 0 {
                        ready.insert(j);
                    }
                }
            }
        }
        order
    }

    pub fn is_source_ordered(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (i + 1..n).all(|j| !self.b[(i, j)].is_negative()))
    }

    /// Relabels so that new label `k` is old label `perm[k]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        Self {
            b: self.b.reindexed(perm),
            d: perm.iter().map(|&i| self.d[i].clone()).collect(),
        }
    }

    pub fn initial_seed(&self) -> ExtendedSeed {
        let n = self.rank();
        ExtendedSeed {
            matrix: self.b.vstack(&IntMatrix::identity(n)),
            d: self.d.clone(),
        }
    }
}

fn check_shape(b: &IntMatrix) -> Result<()> {
    if !b.is_square() || b.rows() == 0 {
        return Err(Error::NotSquare {
            rows: b.rows(),
            cols: b.cols(),
        });
    }
    Ok(())
}

fn check_sign_pattern(b: &IntMatrix) -> Result<()> {
    let n = b.rows();
    for i in 0..n {
        if !b[(i, i)].is_zero() {
            return Err(Error::NotSkewSymmetrizable { i, j: i });
        }
        for j in i + 1..n {
            let (x, y) = (&b[(i, j)], &b[(j, i)]);
            let ok = (x.is_zero() && y.is_zero()) || (x.signum() == -y.signum() && !x.is_zero());
            if !ok {
                return Err(Error::NotSkewSymmetrizable { i, j });
            }
        }
    }
    Ok(())
}

fn satisfies_symmetrizer(b: &IntMatrix, d: &[BigInt]) -> bool {
    let n = b.rows();
    (0..n).all(|i| (0..n).all(|j| &d[i] * &b[(i, j)] == -(&d[j] * &b[(j, i)])))
}

/// Propagates `d_j / d_i = b_ij / -b_ji` along nonzero entries, then clears
/// denominators per connected component.
fn minimal_symmetrizer(b: &IntMatrix) -> Result<Vec<BigInt>> {
    let n = b.rows();
    let mut ratio: Vec<Option<BigRational>> = vec![None; n];
    let mut d = vec![BigInt::zero(); n];
    for root in 0..n {
        if ratio[root].is_some() {
            continue;
        }
        ratio[root] = Some(BigRational::one());
        let mut component = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let di = ratio[i].clone().expect("visited");
            for j in 0..n {
                if b[(i, j)].is_zero() {
                    continue;
                }
                let dj = di.clone() * BigRational::new(b[(i, j)].clone(), -b[(j, i)].clone());
                match &ratio[j] {
                    Some(existing) if *existing != dj => {
                        return Err(Error::NotSkewSymmetrizable { i, j });
                    }
                    Some(_) => {}
                    None => {
                        ratio[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                }
            }
        }
        let lcm = component.iter().fold(BigInt::one(), |acc, &i| {
            acc.lcm(ratio[i].as_ref().expect("visited").denom())
        });
        let scaled: Vec<BigInt> = component
            .iter()
            .map(|&i| {
                let r = ratio[i].as_ref().expect("visited");
                r.numer() * (&lcm / r.denom())
            })
            .collect();
        let gcd = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (&i, x) in component.iter().zip(scaled) {
            d[i] = x / &gcd;
        }
    }
    Ok(d)
}

fn check_acyclic(b: &IntMatrix) -> Result<()> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let n = b.rows();
    let mut mark = vec![Mark::New; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if mark[start] != Mark::New {
            continue;
        }
        // iterative DFS: (vertex, next successor to try)
        let mut stack = vec![(start, 0usize)];
        mark[start] = Mark::Active;
        while let Some(&mut (i, ref mut next)) = stack.last_mut() {
            if *next == n {
                mark[i] = Mark::Done;
                stack.pop();
                continue;
            }
            let j = *next;
            *next += 1;
            if !b[(i, j)].is_positive() {
                continue;
            }
            match mark[j] {
                Mark::New => {
                    mark[j] = Mark::Active;
                    parent[j] = i;
                    stack.push((j, 0));
                }
                Mark::Active => {
                    let mut cycle = vec![j];
                    let mut k = i;
                    while k != j {
                        cycle.push(k);
                        k = parent[k];
                    }
                    cycle.reverse();
                    return Err(Error::NotAcyclic { cycle });
                }
                Mark::Done => {}
            }
        }
    }
    Ok(())
}

/// A path in the regular tree, as a sequence of 0-based mutation labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MutationWord(Vec<usize>);

impl MutationWord {
    pub fn new(labels: Vec<usize>) -> Self {
        Self(labels)
    }

    /// Converts 1-based labels.
    pub fn from_one_based(labels: &[usize], rank: usize) -> Result<Self> {
        labels
            .iter()
            .map(|&l| {
                if l == 0 || l > rank {
                    Err(Error::LabelOutOfRange { label: l, rank })
                } else {
                    Ok(l - 1)
                }
            })
            .collect::<Result<_>>()
            .map(Self)
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<usize>> for MutationWord {
    fn from(labels: Vec<usize>) -> Self {
        Self(labels)
    }
}

/// The 2n×n extended exchange matrix attached to a vertex of the tree. The
/// bottom half is the c-matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedSeed {
    matrix: IntMatrix,
    d: Vec<BigInt>,
}

impl ExtendedSeed {
    /// Builds a seed from its two halves. Only shapes are checked; use
    /// [`ExtendedSeed::top_is_skew_symmetrizable`] and [`is_sign_coherent`]
    /// to test the mathematical invariants.
    pub fn from_parts(top: IntMatrix, bottom: IntMatrix, d: Vec<BigInt>) -> Result<Self> {
        let n = top.rows();
        if !top.is_square() || bottom.rows() != n || bottom.cols() != n || d.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bottom.rows(),
            });
        }
        Ok(Self {
            matrix: top.vstack(&bottom),
            d,
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.cols()
    }

    /// The full 2n×n matrix.
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn top(&self) -> IntMatrix {
        self.matrix.row_block(0, self.rank())
    }

    pub fn bottom(&self) -> IntMatrix {
        self.matrix.row_block(self.rank(), 2 * self.rank())
    }

    pub fn symmetrizer(&self) -> &[BigInt] {
        &self.d
    }

    /// Matrix mutation in direction `k`, applied to all 2n rows.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let n = self.rank();
        if k >= n {
            return Err(Error::LabelOutOfRange { label: k, rank: n });
        }
        let m = &self.matrix;
        let mut out = m.clone();
        for j in 0..2 * n {
            for l in 0..n {
                if j == k || l == k {
                    out[(j, l)] = -&m[(j, l)];
                    continue;
                }
                let (a, b) = (&m[(j, k)], &m[(k, l)]);
                if a.is_positive() && b.is_positive() {
                    out[(j, l)] += a * b;
                } else if a.is_negative() && b.is_negative() {
                    out[(j, l)] -= a * b;
                }
            }
        }
        Ok(Self {
            matrix: out,
            d: self.d.clone(),
        })
    }

    /// Left-to-right application of [`ExtendedSeed::mutate`].
    pub fn apply_word(&self, word: &MutationWord) -> Result<Self> {
        let mut seed = self.clone();
        for &k in word.labels() {
            seed = seed.mutate(k)?;
        }
        Ok(seed)
    }

    /// Columns of the bottom half, in label order.
    pub fn c_vectors(&self) -> Vec<Vector> {
        let n = self.rank();
        (0..n)
            .map(|j| (n..2 * n).map(|i| self.matrix[(i, j)].clone()).collect())
            .collect()
    }

    pub fn top_is_skew_symmetrizable(&self) -> bool {
        satisfies_symmetrizer(&self.top(), &self.d)
    }
}

/// All entries `>= 0` or all entries `<= 0`. The zero vector qualifies.
pub fn is_sign_coherent(v: &[BigInt]) -> bool {
    v.iter().all(|x| !x.is_negative()) || v.iter().all(|x| !x.is_positive())
}
