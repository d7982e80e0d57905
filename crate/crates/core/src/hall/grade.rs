use std::fmt;
use std::ops::{Add, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::quiver::{DimVector, Quiver};

/// An element of the Grothendieck group `K = Z^{Q_0}`, the grade of a homogeneous element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grade(pub Vec<i64>);

impl Grade {
    pub fn zero(n: usize) -> Self {
        Grade(vec![0; n])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl From<&DimVector> for Grade {
    fn from(d: &DimVector) -> Self {
        Grade(d.0.iter().map(|&x| x as i64).collect())
    }
}

impl Add for &Grade {
    type Output = Grade;
    fn add(self, rhs: &Grade) -> Grade {
        assert_eq!(self.0.len(), rhs.0.len());
        Grade(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Grade {
    type Output = Grade;
    fn sub(self, rhs: &Grade) -> Grade {
        assert_eq!(self.0.len(), rhs.0.len());
        Grade(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The Euler form `<m, n> = sum_v m_v n_v - sum_{u -> v} m_u n_v` of a quiver.
///
/// On dimension vectors of representations it agrees with `dim Hom - dim Ext¹`.
#[derive(Debug, Clone)]
pub struct EulerForm {
    quiver: Arc<Quiver>,
}

impl EulerForm {
    pub fn new(quiver: Arc<Quiver>) -> Self {
        EulerForm { quiver }
    }

    pub fn eval(&self, m: &Grade, n: &Grade) -> i64 {
        let diag: i64 = m.0.iter().zip(&n.0).map(|(a, b)| a * b).sum();
        let arrows: i64 = self
            .quiver
            .edges()
            .iter()
            .map(|&(u, v)| m.0[u] * n.0[v])
            .sum();
        diag - arrows
    }
}

/// `q^k` as an exact rational; `k` may be negative.
pub fn q_power(q: u32, k: i64) -> BigRational {
    let base = BigInt::from(q).pow(k.unsigned_abs() as u32);
    let r = BigRational::from_integer(base);
    if k >= 0 {
        r
    } else {
        BigRational::one() / r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_form_examples() {
        let e = EulerForm::new(Arc::new(Quiver::builtin("a2").unwrap()));
        let (s1, s2) = (Grade(vec![1, 0]), Grade(vec![0, 1]));
        assert_eq!(e.eval(&s1, &Grade::zero(2)), 0);
        assert_eq!(e.eval(&Grade::zero(2), &s2), 0);
        assert_eq!(e.eval(&s1, &s2), -1);
        assert_eq!(e.eval(&s2, &s1), 0);
        assert_eq!(e.eval(&s1, &s1), 1);
    }

    #[test]
    fn q_powers() {
        assert_eq!(q_power(2, 3), BigRational::from_integer(8.into()));
        assert_eq!(q_power(3, -2), BigRational::new(1.into(), 9.into()));
        assert_eq!(q_power(5, 0), BigRational::one());
    }
}
