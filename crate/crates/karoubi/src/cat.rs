//! Abstract category interfaces with executable composition, equality and
//! biproducts. Every concrete category in the crate (matrix categories,
//! idempotent completions, extension categories, rectangular matrices)
//! implements these traits, so the law checkers and the hom-space solver
//! work uniformly across all of them.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::ring::{Ring, Scalar};

/// A category given by executable data: objects and morphisms are plain
/// values, composition and equality are decidable functions. There is no
/// global object enumeration; everything is checked pointwise on samples.
/// Instances are immutable data and freely shareable across threads.
pub trait Category: Debug + Send + Sync + 'static {
    type Obj: Clone + PartialEq + Debug + Send + Sync + 'static;
    type Mor: Clone + PartialEq + Debug + Send + Sync + 'static;

    fn name(&self) -> String;
    fn domain(&self, f: &Self::Mor) -> Self::Obj;
    fn codomain(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `g` after `f`; defined iff `codomain(f) = domain(g)`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;

    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        f == g
    }

    fn is_endo(&self, f: &Self::Mor) -> bool {
        self.domain(f) == self.codomain(f)
    }
}

/// Biproduct data: the object together with its structural morphisms.
#[derive(Debug, Clone)]
pub struct Biproduct<O, M> {
    pub object: O,
    pub inj1: M,
    pub inj2: M,
    pub proj1: M,
    pub proj2: M,
}

/// An additive category: hom-sets are abelian groups, composition is
/// bilinear, and finite biproducts exist.
pub trait AdditiveCategory: Category {
    fn zero_object(&self) -> Self::Obj;
    fn zero_mor(&self, src: &Self::Obj, dst: &Self::Obj) -> Self::Mor;
    fn add_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn neg_mor(&self, f: &Self::Mor) -> Self::Mor;
    fn biproduct(&self, x: &Self::Obj, y: &Self::Obj) -> Biproduct<Self::Obj, Self::Mor>;

    fn sub_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.add_mor(f, &self.neg_mor(g))
    }

    fn is_zero_mor(&self, f: &Self::Mor) -> bool {
        self.mor_eq(f, &self.zero_mor(&self.domain(f), &self.codomain(f)))
    }
}

/// Witness that an idempotent `e` on `X` splits: `r: X -> Y`, `s: Y -> X`
/// with `s*r = e` and `r*s = id_Y`.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitWitness<M> {
    pub r: M,
    pub s: M,
}

/// Categories in which every idempotent splits constructively.
pub trait SplitsIdempotents: AdditiveCategory {
    fn split_idempotent(&self, e: &Self::Mor) -> Result<SplitWitness<Self::Mor>>;
}

/// Categories that can compute a cokernel of any section.
pub trait CokernelsOfSections: AdditiveCategory {
    /// For a section `a` with retraction `r` (`r*a = id`), returns
    /// `(b, s)` where `b` is a cokernel of `a` and `s` is a section of `b`
    /// satisfying the split-exactness certificate `a*r + s*b = id`.
    fn coker_of_section(&self, a: &Self::Mor, r: &Self::Mor) -> Result<(Self::Mor, Self::Mor)>;
}

/// Categories whose hom-sets are finite dimensional vector spaces over a
/// field with a computable basis. This is what powers retraction search,
/// split-exactness decisions and hom-space dimension counts.
pub trait MatrixBacked: AdditiveCategory {
    fn ring(&self) -> Ring;
    /// Basis of the hom-space from `x` to `y`.
    fn hom_basis(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Vec<Self::Mor>>;
    /// Coordinates of `f` in the basis returned by `hom_basis`.
    fn hom_coords(&self, f: &Self::Mor) -> Result<Vec<Scalar>>;
    fn scale_mor(&self, s: &Scalar, f: &Self::Mor) -> Result<Self::Mor>;

    fn mor_from_coords(
        &self,
        x: &Self::Obj,
        y: &Self::Obj,
        coords: &[Scalar],
    ) -> Result<Self::Mor> {
        let basis = self.hom_basis(x, y)?;
        if basis.len() != coords.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for a basis of size {}",
                coords.len(),
                basis.len()
            )));
        }
        let mut acc = self.zero_mor(x, y);
        for (b, c) in basis.iter().zip(coords) {
            acc = self.add_mor(&acc, &self.scale_mor(c, b)?)?;
        }
        Ok(acc)
    }

    fn hom_dim(&self, x: &Self::Obj, y: &Self::Obj) -> Result<usize> {
        Ok(self.hom_basis(x, y)?.len())
    }
}

/// Three-valued answer for membership questions that are only decidable
/// when witnesses are available or the instance supports solving.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriState {
    True,
    False,
    Unknown,
}

impl TriState {
    pub fn from_bool(b: bool) -> TriState {
        if b {
            TriState::True
        } else {
            TriState::False
        }
    }
}

/// Checks `e*e = e` for an endomorphism; a non-endomorphism is a
/// domain-mismatch error.
pub fn is_idempotent<C: Category>(cat: &C, e: &C::Mor) -> Result<bool> {
    if !cat.is_endo(e) {
        return Err(Error::DomainMismatch(format!(
            "idempotency asked of a non-endomorphism in {}",
            cat.name()
        )));
    }
    Ok(cat.mor_eq(&cat.compose(e, e)?, e))
}

/// Checks `s*r = e` and `r*s = id` for a claimed splitting of `e`.
pub fn verify_split_witness<C: Category>(
    cat: &C,
    e: &C::Mor,
    w: &SplitWitness<C::Mor>,
) -> Result<bool> {
    if cat.domain(&w.r) != cat.domain(e)
        || cat.codomain(&w.s) != cat.codomain(e)
        || cat.codomain(&w.r) != cat.domain(&w.s)
    {
        return Err(Error::DomainMismatch(
            "split witness shapes do not match the idempotent".into(),
        ));
    }
    let sr = cat.compose(&w.s, &w.r)?;
    let rs = cat.compose(&w.r, &w.s)?;
    let mid = cat.codomain(&w.r);
    Ok(cat.mor_eq(&sr, e) && cat.mor_eq(&rs, &cat.identity(&mid)))
}

/// Biproduct of two objects with its structural morphisms.
pub fn direct_sum<C: AdditiveCategory>(
    cat: &C,
    x: &C::Obj,
    y: &C::Obj,
) -> Biproduct<C::Obj, C::Mor> {
    cat.biproduct(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcat::MatCat;
    use crate::matrix::Matrix;

    fn f2() -> MatCat {
        MatCat::new(Ring::prime_field(2).unwrap())
    }

    #[test]
    fn idempotency_spec_cases() {
        let cat = f2();
        let zero = Matrix::zero(cat.ring(), 2, 2);
        assert!(is_idempotent(&cat, &zero).unwrap());
        let e = Matrix::from_i64s(cat.ring(), &[&[1, 1], &[0, 0]]);
        assert!(is_idempotent(&cat, &e).unwrap());
        let n = Matrix::from_i64s(cat.ring(), &[&[0, 1], &[0, 0]]);
        assert!(!is_idempotent(&cat, &n).unwrap());
        let rect = Matrix::zero(cat.ring(), 2, 3);
        assert!(is_idempotent(&cat, &rect).is_err());
    }

    #[test]
    fn split_witness_spec_cases() {
        let cat = f2();
        let id = Matrix::identity(cat.ring(), 2);
        let w = SplitWitness { r: id.clone(), s: id.clone() };
        assert!(verify_split_witness(&cat, &id, &w).unwrap());

        let e = Matrix::from_i64s(cat.ring(), &[&[1, 1], &[0, 0]]);
        let good = SplitWitness {
            r: Matrix::from_i64s(cat.ring(), &[&[1, 1]]),
            s: Matrix::from_i64s(cat.ring(), &[&[1], &[0]]),
        };
        assert!(verify_split_witness(&cat, &e, &good).unwrap());

        let bad = SplitWitness {
            r: Matrix::from_i64s(cat.ring(), &[&[1, 0]]),
            s: Matrix::from_i64s(cat.ring(), &[&[1], &[0]]),
        };
        assert!(!verify_split_witness(&cat, &e, &bad).unwrap());

        let mis_shaped = SplitWitness {
            r: Matrix::from_i64s(cat.ring(), &[&[1, 0, 0]]),
            s: Matrix::from_i64s(cat.ring(), &[&[1], &[0]]),
        };
        assert!(verify_split_witness(&cat, &e, &mis_shaped).is_err());
    }

    #[test]
    fn direct_sum_spec_cases() {
        let cat = f2();
        let b = direct_sum(&cat, &1, &2);
        assert_eq!(b.object, 3);
        assert_eq!(b.inj1, Matrix::from_i64s(cat.ring(), &[&[1], &[0], &[0]]));
        assert_eq!(b.proj1, Matrix::from_i64s(cat.ring(), &[&[1, 0, 0]]));

        let q = MatCat::new(Ring::Rationals);
        let b = direct_sum(&q, &0, &3);
        assert_eq!(b.object, 3);
        assert_eq!(b.inj2, Matrix::identity(Ring::Rationals, 3));
        assert_eq!(b.proj2, Matrix::identity(Ring::Rationals, 3));
    }
}
