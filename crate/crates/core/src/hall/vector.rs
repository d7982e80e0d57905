use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use crate::classify::ClassRef;

/// Identifies the Hall algebra instance a vector was built in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InstanceId(pub(crate) u64);

fn merge(a: Option<InstanceId>, b: Option<InstanceId>) -> Option<InstanceId> {
    match (a, b) {
        (Some(x), Some(y)) => {
            assert_eq!(
                x, y,
                "combining vectors from different Hall algebra instances"
            );
            Some(x)
        }
        (x, None) | (None, x) => x,
    }
}

/// A finite linear combination of isomorphism classes with exact rational coefficients.
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedVector {
    pub(crate) instance: Option<InstanceId>,
    terms: BTreeMap<ClassRef, BigRational>,
}

impl GradedVector {
    /// The zero vector, compatible with every instance.
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn tagged(instance: InstanceId) -> Self {
        GradedVector {
            instance: Some(instance),
            terms: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (ClassRef, &BigRational)> {
        self.terms.iter().map(|(&c, x)| (c, x))
    }

    pub fn coefficient(&self, c: ClassRef) -> BigRational {
        self.terms
            .get(&c)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, c: ClassRef, x: BigRational) {
        if x.is_zero() {
            return;
        }
        let slot = self.terms.entry(c).or_insert_with(BigRational::zero);
        *slot += x;
        if slot.is_zero() {
            self.terms.remove(&c);
        }
    }

    pub fn add_scaled(&mut self, other: &GradedVector, x: &BigRational) {
        self.instance = merge(self.instance, other.instance);
        if x.is_zero() {
            return;
        }
        for (&c, y) in &other.terms {
            self.add_term(c, y * x);
        }
    }

    pub fn scaled(&self, x: &BigRational) -> GradedVector {
        let mut out = GradedVector {
            instance: self.instance,
            terms: BTreeMap::new(),
        };
        out.add_scaled(self, x);
        out
    }
}

impl Add for &GradedVector {
    type Output = GradedVector;
    fn add(self, rhs: &GradedVector) -> GradedVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigRational::from_integer(1.into()));
        out
    }
}

impl Sub for &GradedVector {
    type Output = GradedVector;
    fn sub(self, rhs: &GradedVector) -> GradedVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigRational::from_integer((-1).into()));
        out
    }
}

impl Neg for &GradedVector {
    type Output = GradedVector;
    fn neg(self) -> GradedVector {
        self.scaled(&BigRational::from_integer((-1).into()))
    }
}

/// An element of `H ⊗ H`: rational coefficients on pairs of classes `(left, right)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor {
    pub(crate) instance: Option<InstanceId>,
    terms: BTreeMap<(ClassRef, ClassRef), BigRational>,
}

impl Tensor {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn tagged(instance: InstanceId) -> Self {
        Tensor {
            instance: Some(instance),
            terms: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((ClassRef, ClassRef), &BigRational)> {
        self.terms.iter().map(|(&k, x)| (k, x))
    }

    pub fn coefficient(&self, left: ClassRef, right: ClassRef) -> BigRational {
        self.terms
            .get(&(left, right))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, left: ClassRef, right: ClassRef, x: BigRational) {
        if x.is_zero() {
            return;
        }
        let key = (left, right);
        let slot = self.terms.entry(key).or_insert_with(BigRational::zero);
        *slot += x;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Adds `x · (a ⊗ b)`.
    pub fn add_outer(&mut self, a: &GradedVector, b: &GradedVector, x: &BigRational) {
        self.instance = merge(self.instance, merge(a.instance, b.instance));
        for (l, y) in a.terms() {
            for (r, z) in b.terms() {
                self.add_term(l, r, x * y * z);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Tensor, x: &BigRational) {
        self.instance = merge(self.instance, other.instance);
        for (&(l, r), y) in &other.terms {
            self.add_term(l, r, y * x);
        }
    }
}

impl Sub for &Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigRational::from_integer((-1).into()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut v = GradedVector::new();
        v.add_term(ClassRef(1), r(2));
        v.add_term(ClassRef(1), r(-2));
        assert!(v.is_zero());
        v.add_term(ClassRef(3), r(0));
        assert_eq!(v.len(), 0);
    }

    #[test]
    fn linear_combinations() {
        let mut a = GradedVector::new();
        a.add_term(ClassRef(0), r(2));
        a.add_term(ClassRef(1), r(3));
        let mut b = GradedVector::new();
        b.add_term(ClassRef(1), r(3));
        let d = &a - &b;
        assert_eq!(d.coefficient(ClassRef(0)), r(2));
        assert_eq!(d.coefficient(ClassRef(1)), r(0));
        assert_eq!((&d + &(-&d)).len(), 0);

        let mut t = Tensor::new();
        t.add_outer(&a, &b, &r(1));
        assert_eq!(t.coefficient(ClassRef(1), ClassRef(1)), r(9));
        assert!((&t - &t).is_zero());
    }

    #[test]
    #[should_panic(expected = "different Hall algebra instances")]
    fn mixing_instances_panics() {
        let a = GradedVector::tagged(InstanceId(1));
        let b = GradedVector::tagged(InstanceId(2));
        let _ = &a + &b;
    }
}
