//! Monomials as dense exponent vectors.
//!
//! All rings in this crate are small (at most sixteen variables), so a
//! dense vector is compact and keeps divisibility and lcm computations
//! branch-free. Monomials never outlive their ring conceptually, but they
//! do not carry a ring reference; comparing monomials from different rings
//! is meaningless and guarded by arity assertions in debug builds.

use smallvec::SmallVec;

/// Exponent vector of a monomial. The product of coefficient-free variable
/// powers; `Monomial::one` is the empty product.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[u32; 16]>,
}

impl Monomial {
    /// The monomial `1` in an `arity`-variable ring.
    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, arity),
        }
    }

    /// The single variable with index `var`.
    pub fn var(arity: usize, var: usize) -> Self {
        let mut m = Self::one(arity);
        m.exps[var] = 1;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Whether `self` divides `other` variable-wise.
    pub fn divides(&self, other: &Self) -> bool {
        assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Exact quotient `self / other`, or `None` when not divisible.
    pub fn div(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.arity(), other.arity());
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Whether the two monomials share no variable.
    pub fn coprime(&self, other: &Self) -> bool {
        assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_is_the_empty_product() {
        let one = Monomial::one(3);
        assert!(one.is_one());
        assert_eq!(one.total_degree(), 0);
        let m = Monomial::from_exps(&[2, 0, 1]);
        assert_eq!(one.mul(&m), m);
        assert!(one.divides(&m));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = Monomial::from_exps(&[2, 1, 0]);
        let b = Monomial::from_exps(&[1, 1, 3]);
        let ab = a.mul(&b);
        assert_eq!(ab.div(&a), Some(b.clone()));
        assert_eq!(ab.div(&b), Some(a.clone()));
        assert_eq!(a.div(&b), None);
    }

    #[test]
    fn lcm_and_coprimality() {
        let a = Monomial::from_exps(&[2, 0, 1]);
        let b = Monomial::from_exps(&[1, 3, 0]);
        assert_eq!(a.lcm(&b), Monomial::from_exps(&[2, 3, 1]));
        assert!(!a.coprime(&b));
        let c = Monomial::from_exps(&[0, 3, 0]);
        assert!(a.coprime(&c));
    }
}
