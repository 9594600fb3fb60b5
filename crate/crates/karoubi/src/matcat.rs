//! The matrix category Mat(R): objects are natural numbers (free module
//! ranks), morphisms from n to m are m-by-n matrices over R.

use crate::cat::{
    AdditiveCategory, Biproduct, Category, CokernelsOfSections, MatrixBacked, SplitWitness,
    SplitsIdempotents,
};
use crate::error::{Error, Result};
use crate::matrix::{cokernel_of_section, rank_factorize_idempotent, Matrix};
use crate::ring::{Ring, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatCat {
    ring: Ring,
}

impl MatCat {
    pub fn new(ring: Ring) -> MatCat {
        MatCat { ring }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }
}

impl Category for MatCat {
    type Obj = usize;
    type Mor = Matrix;

    fn name(&self) -> String {
        format!("Mat({})", self.ring.name())
    }

    fn domain(&self, f: &Matrix) -> usize {
        f.cols()
    }

    fn codomain(&self, f: &Matrix) -> usize {
        f.rows()
    }

    fn identity(&self, x: &usize) -> Matrix {
        Matrix::identity(self.ring, *x)
    }

    fn compose(&self, g: &Matrix, f: &Matrix) -> Result<Matrix> {
        if g.cols() != f.rows() {
            return Err(Error::DomainMismatch(format!(
                "compose {}x{} after {}x{}",
                g.rows(),
                g.cols(),
                f.rows(),
                f.cols()
            )));
        }
        g.mul(f)
    }
}

impl AdditiveCategory for MatCat {
    fn zero_object(&self) -> usize {
        0
    }

    fn zero_mor(&self, src: &usize, dst: &usize) -> Matrix {
        Matrix::zero(self.ring, *dst, *src)
    }

    fn add_mor(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        f.add(g)
    }

    fn neg_mor(&self, f: &Matrix) -> Matrix {
        f.neg()
    }

    fn biproduct(&self, x: &usize, y: &usize) -> Biproduct<usize, Matrix> {
        let (x, y) = (*x, *y);
        let id_x = Matrix::identity(self.ring, x);
        let id_y = Matrix::identity(self.ring, y);
        let zx = Matrix::zero(self.ring, y, x);
        let zy = Matrix::zero(self.ring, x, y);
        Biproduct {
            object: x + y,
            inj1: id_x.vstack(&zx).unwrap(),
            inj2: zy.vstack(&id_y).unwrap(),
            proj1: id_x.hstack(&zy).unwrap(),
            proj2: zx.hstack(&id_y).unwrap(),
        }
    }
}

impl MatrixBacked for MatCat {
    fn ring(&self) -> Ring {
        self.ring
    }

    fn hom_basis(&self, x: &usize, y: &usize) -> Result<Vec<Matrix>> {
        let mut basis = Vec::with_capacity(x * y);
        for i in 0..*y {
            for j in 0..*x {
                let mut m = Matrix::zero(self.ring, *y, *x);
                m.set(i, j, self.ring.one());
                basis.push(m);
            }
        }
        Ok(basis)
    }

    fn hom_coords(&self, f: &Matrix) -> Result<Vec<Scalar>> {
        let mut coords = Vec::with_capacity(f.rows() * f.cols());
        for i in 0..f.rows() {
            for j in 0..f.cols() {
                coords.push(f.get(i, j).clone());
            }
        }
        Ok(coords)
    }

    fn scale_mor(&self, s: &Scalar, f: &Matrix) -> Result<Matrix> {
        f.scale(s)
    }
}

impl SplitsIdempotents for MatCat {
    fn split_idempotent(&self, e: &Matrix) -> Result<SplitWitness<Matrix>> {
        rank_factorize_idempotent(e)
    }
}

impl CokernelsOfSections for MatCat {
    fn coker_of_section(&self, a: &Matrix, r: &Matrix) -> Result<(Matrix, Matrix)> {
        let b = cokernel_of_section(a, r)?;
        let stacked = r.vstack(&b)?;
        let inv = stacked
            .inverse()?
            .ok_or_else(|| Error::Internal("stacked retraction/cokernel not invertible".into()))?;
        let s = inv.col_range(a.cols(), inv.cols());
        Ok((b, s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::verify_split_witness;

    #[test]
    fn biproduct_identities() {
        let cat = MatCat::new(Ring::prime_field(5).unwrap());
        let b = cat.biproduct(&2, &3);
        let id2 = cat.identity(&2);
        let id3 = cat.identity(&3);
        assert_eq!(cat.compose(&b.proj1, &b.inj1).unwrap(), id2);
        assert_eq!(cat.compose(&b.proj2, &b.inj2).unwrap(), id3);
        assert!(cat.compose(&b.proj1, &b.inj2).unwrap().is_zero());
        let sum = cat
            .add_mor(
                &cat.compose(&b.inj1, &b.proj1).unwrap(),
                &cat.compose(&b.inj2, &b.proj2).unwrap(),
            )
            .unwrap();
        assert_eq!(sum, cat.identity(&b.object));
    }

    #[test]
    fn splitting_verifies() {
        let cat = MatCat::new(Ring::prime_field(2).unwrap());
        let e = Matrix::from_i64s(cat.ring(), &[&[1, 1], &[0, 0]]);
        let w = cat.split_idempotent(&e).unwrap();
        assert!(verify_split_witness(&cat, &e, &w).unwrap());
    }
}
