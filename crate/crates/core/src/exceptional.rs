//! Exceptional sequences seen through their classes in the Grothendieck
//! group: braid-group mutation, the reversing operator, commutation moves,
//! the c-vector collection test, and Coxeter factorizations.
//!
//! A term in the shifted copy of the category carries the negated class, so
//! each class is a real root or the negation of one and its sign records
//! which copy the term lives in.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::roots::{
    sign_of, GroupElement, Membership, Root, RootLatticeForms, RootSystem, SignClass,
};

/// Ordered sequence of K₀-classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassSeq(Vec<Vector>);

impl ClassSeq {
    pub fn new(classes: Vec<Vector>) -> Self {
        Self(classes)
    }

    /// `(α_1, …, α_n)`
    pub fn simples(n: usize) -> Self {
        Self((0..n).map(|i| linalg::unit(n, i)).collect())
    }

    pub fn classes(&self) -> &[Vector] {
        &self.0
    }

    pub fn into_classes(self) -> Vec<Vector> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn check_pair(&self, i: usize) -> Result<()> {
        if i + 1 >= self.0.len() {
            return Err(Error::LabelOutOfRange {
                label: i,
                rank: self.0.len().saturating_sub(1),
            });
        }
        Ok(())
    }
}

/// `(β_i, β_{i+1}) ↦ (β_{i+1}, t_{β_{i+1}} β_i)`
pub fn mu(forms: &RootLatticeForms, s: &ClassSeq, i: usize) -> Result<ClassSeq> {
    s.check_pair(i)?;
    let mut out = s.0.clone();
    let moved = forms.reflect(&s.0[i + 1], &s.0[i])?;
    out[i] = s.0[i + 1].clone();
    out[i + 1] = moved;
    Ok(ClassSeq(out))
}

/// `(β_i, β_{i+1}) ↦ (t_{β_i} β_{i+1}, β_i)`
pub fn mu_inv(forms: &RootLatticeForms, s: &ClassSeq, i: usize) -> Result<ClassSeq> {
    s.check_pair(i)?;
    let mut out = s.0.clone();
    let moved = forms.reflect(&s.0[i], &s.0[i + 1])?;
    out[i] = moved;
    out[i + 1] = s.0[i].clone();
    Ok(ClassSeq(out))
}

/// The reversing operator: for `g = 1, …, m-1` apply `μ_{m-1}, μ_{m-2}, …, μ_g`
/// (1-based positions), then shift every term, i.e. negate every class.
pub fn mu_rev(forms: &RootLatticeForms, s: &ClassSeq) -> Result<ClassSeq> {
    let m = s.len();
    let mut cur = s.clone();
    for g in 0..m.saturating_sub(1) {
        for i in (g..m - 1).rev() {
            cur = mu(forms, &cur, i)?;
        }
    }
    Ok(ClassSeq(cur.0.iter().map(|v| linalg::negated(v)).collect()))
}

/// Adjacent terms may be transposed when their classes are orthogonal for
/// the symmetric form.
pub fn can_commute(forms: &RootLatticeForms, s: &ClassSeq, i: usize) -> bool {
    i + 1 < s.len() && forms.pair_sym(&s.0[i], &s.0[i + 1]).is_zero()
}

pub fn commutation_move(forms: &RootLatticeForms, s: &ClassSeq, i: usize) -> Option<ClassSeq> {
    can_commute(forms, s, i).then(|| {
        let mut out = s.0.clone();
        out.swap(i, i + 1);
        ClassSeq(out)
    })
}

/// Lexicographically least sequence reachable by commutation moves.
///
/// Reachable sequences are exactly the linear extensions of the order in
/// which a term must stay after every earlier term it does not commute
/// with, so the least one is built greedily.
#[allow(clippy::needless_range_loop)]
pub fn commutation_canonical(forms: &RootLatticeForms, s: &ClassSeq) -> ClassSeq {
    let m = s.len();
    let mut blockers = vec![0usize; m];
    let mut after: Vec<Vec<usize>> = vec![Vec::new(); m];
    for p in 0..m {
        for q in p + 1..m {
            if !forms.pair_sym(&s.0[p], &s.0[q]).is_zero() {
                blockers[q] += 1;
                after[p].push(q);
            }
        }
    }
    let mut ready: BTreeSet<(Vector, usize)> = (0..m)
        .filter(|&p| blockers[p] == 0)
        .map(|p| (s.0[p].clone(), p))
        .collect();
    let mut out = Vec::with_capacity(m);
    while let Some((v, p)) = ready.pop_first() {
        out.push(v);
        for &q in &after[p] {
            blockers[q] -= 1;
            if blockers[q] == 0 {
                ready.insert((s.0[q].clone(), q));
            }
        }
    }
    ClassSeq(out)
}

/// Ordered product `t_{β_1} t_{β_2} ⋯ t_{β_m}`.
pub fn reflections_product(forms: &RootLatticeForms, s: &ClassSeq) -> Result<GroupElement> {
    s.0.iter()
        .try_fold(GroupElement::identity(forms.rank()), |acc, beta| {
            Ok(acc.compose(&forms.reflection(beta)?))
        })
}

/// The three conditions characterizing c-vector collections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// every vector is a real root
    Roots,
    /// vectors of equal sign pair nonpositively under the symmetric form
    SameSignPairing,
    /// some positives-first ordering multiplies to the Coxeter element
    CoxeterProduct,
}

impl Condition {
    pub fn number(self) -> usize {
        match self {
            Condition::Roots => 1,
            Condition::SameSignPairing => 2,
            Condition::CoxeterProduct => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CollectionVerdict {
    /// Ordering whose reflections multiply to the Coxeter element.
    Accepted { order: Vec<Vector> },
    Rejected {
        condition: Condition,
        witness: Vec<Vector>,
    },
}

impl CollectionVerdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, CollectionVerdict::Accepted { .. })
    }
}

/// Decides whether `vs` is the set of c-vectors of some seed.
///
/// Root membership is read from `roots`; a vector whose status the
/// enumeration could not settle is an `Unknown` error.
pub fn is_cvector_collection(
    forms: &RootLatticeForms,
    roots: &RootSystem,
    vs: &[Vector],
) -> Result<CollectionVerdict> {
    let n = forms.rank();
    if vs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: vs.len(),
        });
    }
    for v in vs {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
    }
    for v in vs {
        match roots.contains(v) {
            Membership::Yes => {}
            Membership::No => {
                return Ok(CollectionVerdict::Rejected {
                    condition: Condition::Roots,
                    witness: vec![v.clone()],
                })
            }
            Membership::Unknown => {
                return Err(Error::Unknown {
                    vector: v.clone(),
                    depth: roots.depth(),
                })
            }
        }
    }
    for (a, x) in vs.iter().enumerate() {
        for y in &vs[a + 1..] {
            if sign_of(x) == sign_of(y) && forms.pair_sym(x, y).is_positive() {
                return Ok(CollectionVerdict::Rejected {
                    condition: Condition::SameSignPairing,
                    witness: vec![x.clone(), y.clone()],
                });
            }
        }
    }
    if n > 63 {
        return Err(Error::Invariant("ordering search supports rank at most 63"));
    }
    let (pos, neg): (Vec<&Vector>, Vec<&Vector>) =
        vs.iter().partition(|v| sign_of(v) == SignClass::Positive);
    let reflections: Vec<GroupElement> = pos
        .iter()
        .chain(&neg)
        .map(|v| forms.reflection(v))
        .collect::<Result<_>>()?;
    let mut search = OrderSearch {
        reflections: &reflections,
        positives: pos.len(),
        target: forms.coxeter_element(),
        seen: BTreeSet::new(),
        order: Vec::new(),
    };
    if search.run(0, &GroupElement::identity(n)) {
        let all: Vec<&Vector> = pos.iter().chain(&neg).copied().collect();
        Ok(CollectionVerdict::Accepted {
            order: search.order.iter().map(|&k| all[k].clone()).collect(),
        })
    } else {
        Ok(CollectionVerdict::Rejected {
            condition: Condition::CoxeterProduct,
            witness: vs.to_vec(),
        })
    }
}

/// Depth-first search over positives-first orderings, pruning repeated
/// (used set, prefix product) states.
struct OrderSearch<'a> {
    reflections: &'a [GroupElement],
    positives: usize,
    target: GroupElement,
    seen: BTreeSet<(u64, GroupElement)>,
    order: Vec<usize>,
}

impl OrderSearch<'_> {
    fn run(&mut self, used: u64, prefix: &GroupElement) -> bool {
        let m = self.reflections.len();
        if self.order.len() == m {
            return *prefix == self.target;
        }
        if !self.seen.insert((used, prefix.clone())) {
            return false;
        }
        let range = if self.order.len() < self.positives {
            0..self.positives
        } else {
            self.positives..m
        };
        for k in range {
            if used & (1 << k) != 0 {
                continue;
            }
            self.order.push(k);
            if self.run(used | (1 << k), &prefix.compose(&self.reflections[k])) {
                return true;
            }
            self.order.pop();
        }
        false
    }
}

/// A Coxeter factorization `t_1 t_2 ⋯ t_n = c`, stored by the positive roots
/// of its reflections.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    roots: Vec<Root>,
    reflections: Vec<GroupElement>,
}

impl Factorization {
    /// Fails unless the reflections in the given roots multiply to the
    /// Coxeter element.
    pub fn new(forms: &RootLatticeForms, roots: Vec<Vector>) -> Result<Self> {
        let roots: Vec<Root> = roots
            .into_iter()
            .map(|v| Root::new(v).map(|r| r.positive()))
            .collect::<Result<_>>()?;
        let reflections: Vec<GroupElement> = roots
            .iter()
            .map(|r| forms.reflection(r.coords()))
            .collect::<Result<_>>()?;
        let product = reflections
            .iter()
            .fold(GroupElement::identity(forms.rank()), |acc, t| {
                acc.compose(t)
            });
        if product != forms.coxeter_element() {
            return Err(Error::Invariant(
                "reflections do not multiply to the Coxeter element",
            ));
        }
        Ok(Self { roots, reflections })
    }

    /// `(s_{π(1)}, …, s_{π(n)})` in source order.
    pub fn simple(forms: &RootLatticeForms) -> Self {
        let n = forms.rank();
        Self::new(
            forms,
            forms
                .source_order()
                .iter()
                .map(|&i| linalg::unit(n, i))
                .collect(),
        )
        .expect("simple reflections in source order multiply to c")
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn reflections(&self) -> &[GroupElement] {
        &self.reflections
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `(t_i, t_{i+1}) ↦ (t_{i+1}, t_{i+1} t_i t_{i+1})`
    Forward,
    /// `(t_i, t_{i+1}) ↦ (t_i t_{i+1} t_i, t_i)`
    Backward,
}

/// Braid-group move on a factorization; the product is re-verified.
pub fn hurwitz_move(
    forms: &RootLatticeForms,
    fac: &Factorization,
    i: usize,
    direction: Direction,
) -> Result<Factorization> {
    if i + 1 >= fac.len() {
        return Err(Error::LabelOutOfRange {
            label: i,
            rank: fac.len().saturating_sub(1),
        });
    }
    let mut roots: Vec<Vector> = fac.roots.iter().map(|r| r.coords().to_vec()).collect();
    let (a, b) = (roots[i].clone(), roots[i + 1].clone());
    match direction {
        Direction::Forward => {
            roots[i + 1] = forms.reflect(&b, &a)?;
            roots[i] = b;
        }
        Direction::Backward => {
            roots[i] = forms.reflect(&a, &b)?;
            roots[i + 1] = a;
        }
    }
    Factorization::new(forms, roots)
}

/// Every Coxeter factorization, by depth-first search over reflections (one
/// per positive root) with the last factor solved for.
pub fn all_factorizations(
    forms: &RootLatticeForms,
    roots: &RootSystem,
) -> Result<BTreeSet<Factorization>> {
    if !roots.is_complete() {
        return Err(Error::InfiniteType);
    }
    let n = forms.rank();
    let positive = roots.positive_roots();
    let reflections: Vec<GroupElement> = positive
        .iter()
        .map(|v| forms.reflection(v))
        .collect::<Result<_>>()?;
    let by_matrix: BTreeMap<&GroupElement, usize> = reflections
        .iter()
        .enumerate()
        .map(|(k, t)| (t, k))
        .collect();
    let c = forms.coxeter_element();
    let mut out = BTreeSet::new();
    let mut stack: Vec<(Vec<usize>, GroupElement)> = vec![(Vec::new(), GroupElement::identity(n))];
    while let Some((prefix, product)) = stack.pop() {
        if prefix.len() + 1 == n {
            // t_n = (t_1 ⋯ t_{n-1})^{-1} c, and the inverse of a product of
            // reflections is the reversed product
            let inverse = prefix
                .iter()
                .rev()
                .fold(GroupElement::identity(n), |acc, &k| {
                    acc.compose(&reflections[k])
                });
            if let Some(&last) = by_matrix.get(&inverse.compose(&c)) {
                let mut chosen: Vec<Vector> = prefix.iter().map(|&k| positive[k].clone()).collect();
                chosen.push(positive[last].clone());
                out.insert(Factorization::new(forms, chosen)?);
            }
            continue;
        }
        for (k, t) in reflections.iter().enumerate() {
            let mut next = prefix.clone();
            next.push(k);
            stack.push((next, product.compose(t)));
        }
    }
    Ok(out)
}

/// Closure of `fac` under forward and backward Hurwitz moves.
pub fn hurwitz_orbit(
    forms: &RootLatticeForms,
    roots: &RootSystem,
    fac: &Factorization,
) -> Result<BTreeSet<Factorization>> {
    if !roots.is_complete() {
        return Err(Error::InfiniteType);
    }
    let mut seen = BTreeSet::from([fac.clone()]);
    let mut queue = VecDeque::from([fac.clone()]);
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            for dir in [Direction::Forward, Direction::Backward] {
                let next = hurwitz_move(forms, &cur, i, dir)?;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen)
}

/// Classes of the indecomposable projectives, by label:
/// `[P_i] = α_i + Σ (-b_ji) [P_j]` over labels `j` after `i` in source order.
pub fn projective_classes(forms: &RootLatticeForms) -> Vec<Vector> {
    let n = forms.rank();
    let b = forms.exchange_matrix();
    let order = forms.source_order();
    let mut classes: Vec<Vector> = vec![Vec::new(); n];
    for p in (0..n).rev() {
        let i = order[p];
        let mut class = linalg::unit(n, i);
        for &j in &order[p + 1..] {
            let mult: BigInt = -&b[(j, i)];
            if !mult.is_zero() {
                for (x, y) in class.iter_mut().zip(&classes[j]) {
                    *x += &mult * y;
                }
            }
        }
        classes[i] = class;
    }
    classes
}

/// Every class is a positive real root or the class of a shifted
/// projective, `-[P_i]`.
pub fn is_cluster_classes(
    forms: &RootLatticeForms,
    roots: &RootSystem,
    s: &ClassSeq,
) -> Result<bool> {
    let shifted: BTreeSet<Vector> = projective_classes(forms)
        .iter()
        .map(|p| linalg::negated(p))
        .collect();
    for v in s.classes() {
        if shifted.contains(v) {
            continue;
        }
        if sign_of(v) != SignClass::Positive {
            return Ok(false);
        }
        match roots.contains(v) {
            Membership::Yes => {}
            Membership::No => return Ok(false),
            Membership::Unknown => {
                return Err(Error::Unknown {
                    vector: v.clone(),
                    depth: roots.depth(),
                })
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exchange::ExchangeMatrix;
    use crate::linalg::{vector, IntMatrix};

    fn forms(rows: &[&[i64]]) -> RootLatticeForms {
        RootLatticeForms::from_exchange(
            &ExchangeMatrix::validate(IntMatrix::from_i64(rows)).unwrap(),
        )
    }

    fn seq(entries: &[&[i64]]) -> ClassSeq {
        ClassSeq::new(entries.iter().map(|e| vector(e)).collect())
    }

    fn a5() -> RootLatticeForms {
        forms(&[
            &[0, 1, 0, 0, 0],
            &[-1, 0, 1, 0, 0],
            &[0, -1, 0, 1, 0],
            &[0, 0, -1, 0, 1],
            &[0, 0, 0, -1, 0],
        ])
    }

    const A2: &[&[i64]] = &[&[0, 1], &[-1, 0]];

    #[test]
    fn mutation_pairs() {
        let f = forms(A2);
        let s = seq(&[&[1, 0], &[0, 1]]);
        let m = mu(&f, &s, 0).unwrap();
        assert_eq!(m, seq(&[&[0, 1], &[1, 1]]));
        assert_eq!(mu_inv(&f, &m, 0).unwrap(), s);
        assert_eq!(mu(&f, &mu_inv(&f, &s, 0).unwrap(), 0).unwrap(), s);
        let z = forms(&[&[0, 0], &[0, 0]]);
        assert_eq!(mu(&z, &s, 0).unwrap(), seq(&[&[0, 1], &[1, 0]]));
        assert_eq!(mu_inv(&z, &s, 0).unwrap(), seq(&[&[0, 1], &[1, 0]]));
        assert!(mu(&f, &s, 1).is_err());
        assert!(matches!(
            mu(&f, &seq(&[&[1, 0], &[0, 0]]), 0),
            Err(Error::NotARoot { .. })
        ));
    }

    #[test]
    fn reversal_fixtures() {
        let f = forms(A2);
        assert_eq!(
            mu_rev(&f, &seq(&[&[1, 0], &[0, 1]])).unwrap(),
            seq(&[&[0, -1], &[-1, -1]])
        );
        assert_eq!(
            mu_rev(&f, &seq(&[&[1, 0], &[0, -1]])).unwrap(),
            seq(&[&[0, 1], &[-1, -1]])
        );
        let g = a5();
        let running = seq(&[
            &[1, 0, 0, 0, 0],
            &[0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1],
            &[0, -1, 0, 0, 0],
            &[0, 0, 0, -1, 0],
        ]);
        assert_eq!(
            mu_rev(&g, &running).unwrap(),
            seq(&[
                &[0, 0, 0, 1, 0],
                &[0, 1, 0, 0, 0],
                &[0, 0, 0, 0, -1],
                &[0, 0, -1, -1, -1],
                &[-1, -1, -1, -1, -1],
            ])
        );
    }

    #[test]
    fn commutation() {
        let g = a5();
        let running = seq(&[
            &[1, 0, 0, 0, 0],
            &[0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1],
            &[0, -1, 0, 0, 0],
            &[0, 0, 0, -1, 0],
        ]);
        assert!(can_commute(&g, &running, 2));
        assert!(!can_commute(&g, &running, 4));
        let f = forms(A2);
        assert!(!can_commute(&f, &seq(&[&[1, 0], &[0, 1]]), 0));
        let single = seq(&[&[1]]);
        assert_eq!(commutation_canonical(&forms(&[&[0]]), &single), single);
        let canon = commutation_canonical(&g, &running);
        assert_eq!(
            commutation_canonical(&g, &commutation_move(&g, &running, 2).unwrap()),
            canon
        );
        assert!(canon <= running);
    }

    #[test]
    fn collection_test() {
        let g = a5();
        let roots = g.real_roots(10);
        let running: Vec<Vector> = [
            &[1, 0, 0, 0, 0],
            &[0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1],
            &[0, -1, 0, 0, 0],
            &[0, 0, 0, -1, 0],
        ]
        .iter()
        .map(|e| vector(*e))
        .collect();
        assert!(is_cvector_collection(&g, &roots, &running)
            .unwrap()
            .is_accepted());

        let f = forms(A2);
        let r2 = f.real_roots(10);
        let verdict = is_cvector_collection(&f, &r2, &[vector(&[-1, 0]), vector(&[0, 1])]).unwrap();
        assert!(matches!(
            verdict,
            CollectionVerdict::Rejected {
                condition: Condition::CoxeterProduct,
                ..
            }
        ));
        let base = vec![vector(&[1, 0]), vector(&[0, 1])];
        assert_eq!(
            is_cvector_collection(&f, &r2, &base).unwrap(),
            CollectionVerdict::Accepted {
                order: base.clone()
            }
        );
        let not_root = is_cvector_collection(&f, &r2, &[vector(&[1, 2]), vector(&[0, 1])]).unwrap();
        assert!(matches!(
            not_root,
            CollectionVerdict::Rejected {
                condition: Condition::Roots,
                ..
            }
        ));
        let pairing = is_cvector_collection(&f, &r2, &[vector(&[1, 1]), vector(&[1, 0])]).unwrap();
        assert!(matches!(
            pairing,
            CollectionVerdict::Rejected {
                condition: Condition::SameSignPairing,
                ..
            }
        ));
        assert!(is_cvector_collection(&f, &r2, &[vector(&[1, 0])]).is_err());
        let shallow = f.real_roots(0);
        assert!(matches!(
            is_cvector_collection(&f, &shallow, &[vector(&[1, 1]), vector(&[0, -1])]),
            Err(Error::Unknown { .. })
        ));
    }

    #[test]
    fn products() {
        let f = forms(A2);
        let s = ClassSeq::simples(2);
        assert_eq!(reflections_product(&f, &s).unwrap(), f.coxeter_element());
        let m = mu(&f, &s, 0).unwrap();
        assert_eq!(reflections_product(&f, &m).unwrap(), f.coxeter_element());
    }

    #[test]
    fn hurwitz() {
        let f = forms(A2);
        let simple = Factorization::simple(&f);
        let fwd = hurwitz_move(&f, &simple, 0, Direction::Forward).unwrap();
        // s2 s1 s2 is the reflection in s2(α1) = α1 + α2
        assert_eq!(fwd.roots()[0].coords(), &vector(&[0, 1])[..]);
        assert_eq!(fwd.roots()[1].coords(), &vector(&[1, 1])[..]);
        let s2 = f.simple_reflection(1).unwrap();
        assert_eq!(
            fwd.reflections()[1],
            s2.compose(&f.simple_reflection(0).unwrap()).compose(&s2)
        );
        assert_eq!(
            hurwitz_move(&f, &fwd, 0, Direction::Backward).unwrap(),
            simple
        );
        assert!(hurwitz_move(&f, &simple, 1, Direction::Forward).is_err());
        assert!(Factorization::new(&f, vec![vector(&[0, 1]), vector(&[1, 0])]).is_err());
    }

    #[test]
    fn factorization_sets() {
        let f = forms(A2);
        let roots = f.real_roots(10);
        let all = all_factorizations(&f, &roots).unwrap();
        assert_eq!(all.len(), 3);
        assert_eq!(
            hurwitz_orbit(&f, &roots, &Factorization::simple(&f)).unwrap(),
            all
        );
        let a1 = forms(&[&[0]]);
        assert_eq!(all_factorizations(&a1, &a1.real_roots(4)).unwrap().len(), 1);
        let k = forms(&[&[0, 3], &[-3, 0]]);
        assert!(matches!(
            all_factorizations(&k, &k.real_roots(4)),
            Err(Error::InfiniteType)
        ));
    }

    #[test]
    fn projectives() {
        let g = a5();
        let p = projective_classes(&g);
        assert_eq!(p[0], vector(&[1, 1, 1, 1, 1]));
        assert_eq!(p[2], vector(&[0, 0, 1, 1, 1]));
        assert_eq!(p[4], vector(&[0, 0, 0, 0, 1]));
        let f = forms(A2);
        assert_eq!(
            projective_classes(&f),
            vec![vector(&[1, 1]), vector(&[0, 1])]
        );
        let z = forms(&[&[0, 0], &[0, 0]]);
        assert_eq!(
            projective_classes(&z),
            vec![vector(&[1, 0]), vector(&[0, 1])]
        );
        let roots = f.real_roots(10);
        assert!(is_cluster_classes(&f, &roots, &seq(&[&[0, -1], &[-1, -1]])).unwrap());
        assert!(!is_cluster_classes(&f, &roots, &seq(&[&[-1, 0], &[0, 1]])).unwrap());
    }
}
