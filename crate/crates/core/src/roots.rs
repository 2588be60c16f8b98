//! Root-lattice forms, reflections, real roots and the Coxeter element.
//!
//! Vectors are coordinates in the basis of simple roots `α_1, …, α_n`.
//! Group elements act on column vectors, and words compose like functions:
//! the product `s_1 s_2` applies `s_2` first.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exchange::ExchangeMatrix;
use crate::linalg::{self, IntMatrix, Vector};

/// Sign classification of an integer vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignClass {
    Positive,
    Negative,
    Neither,
}

/// Positive: nonzero with nonnegative entries. Negative: the negation of a
/// positive vector. Everything else (including zero) is `Neither`.
pub fn sign_of(v: &[BigInt]) -> SignClass {
    if linalg::is_zero(v) {
        SignClass::Neither
    } else if v.iter().all(|x| !x.is_negative()) {
        SignClass::Positive
    } else if v.iter().all(|x| !x.is_positive()) {
        SignClass::Negative
    } else {
        SignClass::Neither
    }
}

/// A nonzero sign-coherent lattice vector. Whether it is actually a real
/// root is established separately, see [`RootSystem`] and
/// [`RootLatticeForms::real_root_certificate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vector);

impl Root {
    pub fn new(coords: Vector) -> Result<Self> {
        match sign_of(&coords) {
            SignClass::Neither => Err(Error::NotARoot { vector: coords }),
            _ => Ok(Self(coords)),
        }
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vector {
        self.0
    }

    pub fn is_positive(&self) -> bool {
        sign_of(&self.0) == SignClass::Positive
    }

    pub fn negated(&self) -> Self {
        Self(linalg::negated(&self.0))
    }

    /// The representative of `{β, -β}` with positive sign.
    pub fn positive(&self) -> Self {
        if self.is_positive() {
            self.clone()
        } else {
            self.negated()
        }
    }
}

/// An element of the Coxeter group, as an integer matrix acting on
/// coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(IntMatrix);

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        Self(IntMatrix::identity(n))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        Self(self.0.mul(&other.0))
    }

    pub fn apply(&self, v: &[BigInt]) -> Vector {
        self.0.mul_vec(v)
    }

    /// Whether `(Mx, My) = (x, y)` for the symmetric form.
    pub fn preserves_sym(&self, forms: &RootLatticeForms) -> bool {
        self.0.transpose().mul(&forms.sym).mul(&self.0) == forms.sym
    }
}

/// The Euler form `E`, its symmetrization and its skew part, in the basis of
/// simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootLatticeForms {
    b: IntMatrix,
    d: Vec<BigInt>,
    euler: IntMatrix,
    sym: IntMatrix,
    omega: IntMatrix,
    order: Vec<usize>,
}

impl RootLatticeForms {
    pub fn from_exchange(b: &ExchangeMatrix) -> Self {
        let n = b.rank();
        let d = b.symmetrizer().to_vec();
        let mut euler = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                euler[(i, j)] = if i == j {
                    d[i].clone()
                } else if b.entry(i, j).is_negative() {
                    &d[i] * b.entry(i, j)
                } else {
                    BigInt::zero()
                };
            }
        }
        let et = euler.transpose();
        let mut sym = IntMatrix::zeros(n, n);
        let mut omega = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                sym[(i, j)] = &euler[(i, j)] + &et[(i, j)];
                omega[(i, j)] = &euler[(i, j)] - &et[(i, j)];
            }
        }
        Self {
            b: b.matrix().clone(),
            d,
            euler,
            sym,
            omega,
            order: b.source_order(),
        }
    }

    pub fn rank(&self) -> usize {
        self.d.len()
    }

    pub fn symmetrizer(&self) -> &[BigInt] {
        &self.d
    }

    /// The exchange matrix the forms were built from.
    pub fn exchange_matrix(&self) -> &IntMatrix {
        &self.b
    }

    pub fn euler_matrix(&self) -> &IntMatrix {
        &self.euler
    }

    pub fn sym_matrix(&self) -> &IntMatrix {
        &self.sym
    }

    pub fn omega_matrix(&self) -> &IntMatrix {
        &self.omega
    }

    /// Labels in source order; the Coxeter element multiplies simple
    /// reflections in this order.
    pub fn source_order(&self) -> &[usize] {
        &self.order
    }

    pub fn pair_euler(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        self.euler.bilinear(x, y)
    }

    pub fn pair_sym(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        self.sym.bilinear(x, y)
    }

    pub fn pair_omega(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        self.omega.bilinear(x, y)
    }

    fn check_len(&self, v: &[BigInt]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// `2β / (β, β)`
    pub fn coroot(&self, beta: &[BigInt]) -> Result<Vec<BigRational>> {
        self.check_len(beta)?;
        let norm = self.pair_sym(beta, beta);
        if !norm.is_positive() {
            return Err(Error::NotARoot {
                vector: beta.to_vec(),
            });
        }
        Ok(beta
            .iter()
            .map(|x| BigRational::new(BigInt::from(2) * x, norm.clone()))
            .collect())
    }

    /// The integer `2 (β, v) / (β, β)`, or `NotARoot` when `β` has
    /// nonpositive norm or the quotient is fractional.
    pub fn cartan_pairing(&self, beta: &[BigInt], v: &[BigInt]) -> Result<BigInt> {
        self.check_len(beta)?;
        self.check_len(v)?;
        let norm = self.pair_sym(beta, beta);
        if !norm.is_positive() {
            return Err(Error::NotARoot {
                vector: beta.to_vec(),
            });
        }
        let (q, r) = (BigInt::from(2) * self.pair_sym(beta, v)).div_rem(&norm);
        if !r.is_zero() {
            return Err(Error::NotARoot {
                vector: beta.to_vec(),
            });
        }
        Ok(q)
    }

    /// `t_β(v) = v - 2 (β, v)/(β, β) β`
    pub fn reflect(&self, beta: &[BigInt], v: &[BigInt]) -> Result<Vector> {
        let k = self.cartan_pairing(beta, v)?;
        Ok(linalg::sub_scaled(v, &k, beta))
    }

    pub fn simple_reflection(&self, i: usize) -> Result<GroupElement> {
        if i >= self.rank() {
            return Err(Error::LabelOutOfRange {
                label: i,
                rank: self.rank(),
            });
        }
        self.reflection(&linalg::unit(self.rank(), i))
    }

    /// Matrix of `t_β`; columns are the images of the simple roots.
    pub fn reflection(&self, beta: &[BigInt]) -> Result<GroupElement> {
        let n = self.rank();
        let columns = (0..n)
            .map(|j| self.reflect(beta, &linalg::unit(n, j)))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupElement(IntMatrix::from_columns(&columns)?))
    }

    /// `s_{π(1)} s_{π(2)} ⋯ s_{π(n)}` for the source order `π`.
    pub fn coxeter_element(&self) -> GroupElement {
        self.order
            .iter()
            .fold(GroupElement::identity(self.rank()), |acc, &i| {
                acc.compose(&self.simple_reflection(i).expect("simple roots are roots"))
            })
    }

    /// Orbit of the signed simple roots under up to `depth` simple
    /// reflections.
    pub fn real_roots(&self, depth: usize) -> RootSystem {
        let n = self.rank();
        let simples: Vec<GroupElement> = (0..n)
            .map(|i| self.simple_reflection(i).expect("simple roots are roots"))
            .collect();
        let mut roots = BTreeSet::new();
        let mut frontier = Vec::new();
        for i in 0..n {
            let a = linalg::unit(n, i);
            frontier.push(linalg::negated(&a));
            frontier.push(a);
        }
        roots.extend(frontier.iter().cloned());
        let mut complete = false;
        for step in 0..=depth {
            let mut next = Vec::new();
            for v in &frontier {
                for s in &simples {
                    let w = s.apply(v);
                    if !roots.contains(&w) {
                        if step == depth {
                            // one past the bound: only probing for closure
                            return RootSystem {
                                roots,
                                complete: false,
                                depth,
                            };
                        }
                        roots.insert(w.clone());
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                complete = true;
                break;
            }
            frontier = next;
        }
        RootSystem {
            roots,
            complete,
            depth,
        }
    }

    /// Exact real-root test by height descent. For a positive `v`, repeatedly
    /// apply a simple reflection `s_i` with `⟨v, α_i^∨⟩ > 0`; a real root
    /// always descends to a simple root through positive roots. Returns the
    /// simple label reached and the reflection labels used (so that
    /// `±v = s_{w_1} ⋯ s_{w_k} α_i`), or `None` if `v` is not a real root.
    pub fn real_root_certificate(&self, v: &[BigInt]) -> Option<(usize, Vec<usize>)> {
        if v.len() != self.rank() {
            return None;
        }
        let mut cur = match sign_of(v) {
            SignClass::Positive => v.to_vec(),
            SignClass::Negative => linalg::negated(v),
            SignClass::Neither => return None,
        };
        let n = self.rank();
        let mut word = Vec::new();
        loop {
            let support: Vec<usize> = (0..n).filter(|&i| !cur[i].is_zero()).collect();
            if support.len() == 1 {
                let i = support[0];
                if cur[i].is_one() {
                    return Some((i, word));
                }
                return None;
            }
            let mut stepped = false;
            for i in 0..n {
                let a = linalg::unit(n, i);
                let p = self.pair_sym(&cur, &a);
                if !p.is_positive() {
                    continue;
                }
                let (k, r) = p.div_rem(&self.d[i]);
                if !r.is_zero() {
                    return None;
                }
                cur[i] -= k;
                if cur[i].is_negative() {
                    return None;
                }
                word.push(i);
                stepped = true;
                break;
            }
            if !stepped {
                return None;
            }
        }
    }
}

/// Three-valued membership answer for depth-bounded root enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

/// Real roots found by orbit enumeration. `complete` is set when the orbit
/// closed within the depth bound, i.e. the root system is finite and fully
/// listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    roots: BTreeSet<Vector>,
    complete: bool,
    depth: usize,
}

impl RootSystem {
    pub fn roots(&self) -> &BTreeSet<Vector> {
        &self.roots
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, v: &[BigInt]) -> Membership {
        if self.roots.contains(v) {
            Membership::Yes
        } else if self.complete {
            Membership::No
        } else {
            Membership::Unknown
        }
    }

    pub fn positive_roots(&self) -> Vec<Vector> {
        self.roots
            .iter()
            .filter(|v| sign_of(v) == SignClass::Positive)
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector;
    use alloc::vec;

    fn forms(rows: &[&[i64]]) -> RootLatticeForms {
        RootLatticeForms::from_exchange(
            &ExchangeMatrix::validate(IntMatrix::from_i64(rows)).unwrap(),
        )
    }

    #[test]
    fn a2_forms() {
        let f = forms(&[&[0, 1], &[-1, 0]]);
        assert_eq!(f.euler_matrix(), &IntMatrix::from_i64(&[&[1, 0], &[-1, 1]]));
        assert_eq!(f.sym_matrix(), &IntMatrix::from_i64(&[&[2, -1], &[-1, 2]]));
        let (a1, a2) = (vector(&[1, 0]), vector(&[0, 1]));
        assert_eq!(f.pair_omega(&a1, &a2), BigInt::from(1));
        assert_eq!(f.pair_sym(&a1, &a1), BigInt::from(2));
        assert_eq!(f.pair_omega(&a1, &a1), BigInt::zero());
    }

    #[test]
    fn b2_and_zero_forms() {
        let f = forms(&[&[0, 1], &[-2, 0]]);
        assert_eq!(f.sym_matrix(), &IntMatrix::from_i64(&[&[4, -2], &[-2, 2]]));
        let z = forms(&[&[0, 0], &[0, 0]]);
        assert_eq!(z.euler_matrix(), &IntMatrix::identity(2));
        assert_eq!(z.sym_matrix(), &IntMatrix::from_i64(&[&[2, 0], &[0, 2]]));
        assert_eq!(z.omega_matrix(), &IntMatrix::zeros(2, 2));
    }

    #[test]
    fn coroots() {
        let f = forms(&[&[0, 1], &[-1, 0]]);
        let one = BigRational::one();
        assert_eq!(
            f.coroot(&vector(&[1, 0])).unwrap(),
            vec![one.clone(), BigRational::zero()]
        );
        assert_eq!(
            f.coroot(&vector(&[1, 1])).unwrap(),
            vec![one.clone(), one.clone()]
        );
        let b2 = forms(&[&[0, 1], &[-2, 0]]);
        assert_eq!(
            b2.coroot(&vector(&[1, 0])).unwrap(),
            vec![BigRational::new(1.into(), 2.into()), BigRational::zero()]
        );
        assert!(matches!(
            f.coroot(&vector(&[0, 0])),
            Err(Error::NotARoot { .. })
        ));
    }

    #[test]
    fn reflections() {
        let f = forms(&[&[0, 1], &[-1, 0]]);
        let (a1, a2) = (vector(&[1, 0]), vector(&[0, 1]));
        assert_eq!(f.reflect(&a1, &a2).unwrap(), vector(&[1, 1]));
        assert_eq!(f.reflect(&a1, &a1).unwrap(), vector(&[-1, 0]));
        let z = forms(&[&[0, 0], &[0, 0]]);
        assert_eq!(z.reflect(&a1, &a2).unwrap(), a2);
        assert_eq!(
            f.simple_reflection(0).unwrap().matrix(),
            &IntMatrix::from_i64(&[&[-1, 1], &[0, 1]])
        );
        let s1 = f.simple_reflection(0).unwrap();
        assert_eq!(s1.compose(&s1), GroupElement::identity(2));
        let b = vector(&[1, 1]);
        assert_eq!(
            f.reflection(&b).unwrap(),
            f.reflection(&linalg::negated(&b)).unwrap()
        );
        let b2 = forms(&[&[0, 1], &[-2, 0]]);
        assert!(matches!(
            b2.reflect(&vector(&[0, 1]), &vector(&[1, 0])),
            Ok(ref v) if *v == vector(&[1, 2])
        ));
        assert_eq!(
            b2.reflect(&vector(&[1, 1]), &vector(&[1, 0])).unwrap(),
            vector(&[-1, -2])
        );
        // (2,1) has norm 10 and 2((2,1), α1)/10 = 6/5
        assert!(matches!(
            b2.reflect(&vector(&[2, 1]), &vector(&[1, 0])),
            Err(Error::NotARoot { .. })
        ));
    }

    #[test]
    fn coxeter_elements() {
        let f = forms(&[&[0, 1], &[-1, 0]]);
        // s1 s2 multiplied by hand: columns c(α1) = α2, c(α2) = -α1 - α2
        assert_eq!(
            f.coxeter_element().matrix(),
            &IntMatrix::from_i64(&[&[0, -1], &[1, -1]])
        );
        assert!(f.coxeter_element().preserves_sym(&f));
        let a1 = forms(&[&[0]]);
        assert_eq!(
            a1.coxeter_element().matrix(),
            &IntMatrix::from_i64(&[&[-1]])
        );
        // reversed orientation still multiplies in source order
        let rev = forms(&[&[0, -1], &[1, 0]]);
        let expect = rev
            .simple_reflection(1)
            .unwrap()
            .compose(&rev.simple_reflection(0).unwrap());
        assert_eq!(rev.coxeter_element(), expect);
    }

    #[test]
    fn root_enumeration() {
        let f = forms(&[&[0, 1], &[-1, 0]]);
        let roots = f.real_roots(2);
        assert!(roots.is_complete());
        assert_eq!(roots.len(), 6);
        assert!(roots.roots().contains(&vector(&[-1, -1])));
        let shallow = f.real_roots(0);
        assert_eq!(shallow.len(), 4);
        assert!(!shallow.is_complete());
        assert_eq!(shallow.contains(&vector(&[1, 1])), Membership::Unknown);
        assert_eq!(roots.contains(&vector(&[1, 2])), Membership::No);
        assert_eq!(roots.contains(&vector(&[0, 1])), Membership::Yes);

        let b2 = forms(&[&[0, 1], &[-2, 0]]).real_roots(10);
        assert!(b2.is_complete());
        assert_eq!(b2.len(), 8);

        let kronecker = forms(&[&[0, 3], &[-3, 0]]).real_roots(6);
        assert!(!kronecker.is_complete());
    }

    #[test]
    fn signs() {
        assert_eq!(sign_of(&vector(&[1, -1])), SignClass::Neither);
        assert_eq!(sign_of(&vector(&[0, 2])), SignClass::Positive);
        assert_eq!(sign_of(&vector(&[0, -2])), SignClass::Negative);
        assert_eq!(sign_of(&vector(&[0, 0])), SignClass::Neither);
        assert!(Root::new(vector(&[0, 0])).is_err());
        assert_eq!(
            Root::new(vector(&[-1, 0])).unwrap().positive().coords(),
            &vector(&[1, 0])[..]
        );
    }

    #[test]
    fn descent_certificates() {
        let f = forms(&[&[0, 1], &[-1, 0]]);
        assert!(f.real_root_certificate(&vector(&[1, 1])).is_some());
        assert!(f.real_root_certificate(&vector(&[-1, -1])).is_some());
        assert!(f.real_root_certificate(&vector(&[1, 2])).is_none());
        assert!(f.real_root_certificate(&vector(&[2, 0])).is_none());
        assert!(f.real_root_certificate(&vector(&[1, -1])).is_none());
        // replaying the certificate recovers the vector
        let k3 = forms(&[&[0, 3], &[-3, 0]]);
        let v = vector(&[3, 8]);
        let (i, word) = k3.real_root_certificate(&v).unwrap();
        let mut w = linalg::unit(2, i);
        for &j in word.iter().rev() {
            w = k3.simple_reflection(j).unwrap().apply(&w);
        }
        assert_eq!(w, v);
    }
}
