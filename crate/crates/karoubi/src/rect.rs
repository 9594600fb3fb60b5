//! The category of rectangular matrices over R: objects are matrices of
//! any shape, a morphism from `X` (m by n) to `Y` (p by q) is a pair
//! `(A, B)` with `B X = Y A`, composed by componentwise multiplication.
//! This category is equivalent to the extension category of the
//! Hom-bifunctor on Mat(R), which is also the arrow category of Mat(R);
//! after idempotent completion its objects correspond to arrows between
//! images of idempotents.

use crate::bifunctor::HomBifunctor;
use crate::cat::{AdditiveCategory, Biproduct, Category, MatrixBacked};
use crate::completion::Completion;
use crate::error::{Error, Result};
use crate::extensions::{ExtCat, ExtMor, ExtObject};
use crate::functor::FunctorValue;
use crate::matrix::{rank_factorize_idempotent, Matrix};
use crate::ring::{Ring, Scalar};

/// A morphism of rectangular matrices with its endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct RectMor {
    pub src: Matrix,
    pub dst: Matrix,
    /// Acts on column indices: `a` has shape `cols(dst) x cols(src)`.
    pub a: Matrix,
    /// Acts on row indices: `b` has shape `rows(dst) x rows(src)`.
    pub b: Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RectCat {
    ring: Ring,
}

impl RectCat {
    pub fn new(ring: Ring) -> RectCat {
        RectCat { ring }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Checked morphism constructor: shapes must match and `B X = Y A`.
    pub fn morphism(&self, src: Matrix, dst: Matrix, a: Matrix, b: Matrix) -> Result<RectMor> {
        if a.rows() != dst.cols() || a.cols() != src.cols() || b.rows() != dst.rows() || b.cols() != src.rows()
        {
            return Err(Error::ShapeMismatch("rectangular morphism shapes".into()));
        }
        let lhs = b.mul(&src)?;
        let rhs = dst.mul(&a)?;
        if lhs != rhs {
            return Err(Error::Precondition("pair does not intertwine the objects".into()));
        }
        Ok(RectMor { src, dst, a, b })
    }
}

impl Category for RectCat {
    type Obj = Matrix;
    type Mor = RectMor;

    fn name(&self) -> String {
        format!("RectMat({})", self.ring.name())
    }

    fn domain(&self, f: &RectMor) -> Matrix {
        f.src.clone()
    }

    fn codomain(&self, f: &RectMor) -> Matrix {
        f.dst.clone()
    }

    fn identity(&self, x: &Matrix) -> RectMor {
        RectMor {
            src: x.clone(),
            dst: x.clone(),
            a: Matrix::identity(self.ring, x.cols()),
            b: Matrix::identity(self.ring, x.rows()),
        }
    }

    fn compose(&self, g: &RectMor, f: &RectMor) -> Result<RectMor> {
        if f.dst != g.src {
            return Err(Error::DomainMismatch("rectangular composition mismatch".into()));
        }
        Ok(RectMor {
            src: f.src.clone(),
            dst: g.dst.clone(),
            a: g.a.mul(&f.a)?,
            b: g.b.mul(&f.b)?,
        })
    }
}

impl AdditiveCategory for RectCat {
    fn zero_object(&self) -> Matrix {
        Matrix::zero(self.ring, 0, 0)
    }

    fn zero_mor(&self, src: &Matrix, dst: &Matrix) -> RectMor {
        RectMor {
            src: src.clone(),
            dst: dst.clone(),
            a: Matrix::zero(self.ring, dst.cols(), src.cols()),
            b: Matrix::zero(self.ring, dst.rows(), src.rows()),
        }
    }

    fn add_mor(&self, f: &RectMor, g: &RectMor) -> Result<RectMor> {
        if f.src != g.src || f.dst != g.dst {
            return Err(Error::DomainMismatch("adding non-parallel rectangular morphisms".into()));
        }
        Ok(RectMor {
            src: f.src.clone(),
            dst: f.dst.clone(),
            a: f.a.add(&g.a)?,
            b: f.b.add(&g.b)?,
        })
    }

    fn neg_mor(&self, f: &RectMor) -> RectMor {
        RectMor { src: f.src.clone(), dst: f.dst.clone(), a: f.a.neg(), b: f.b.neg() }
    }

    /// Block-diagonal direct sum; empty shapes insert zero rows or columns
    /// on the appropriate side.
    fn biproduct(&self, x: &Matrix, y: &Matrix) -> Biproduct<Matrix, RectMor> {
        let object = x.block_diag(y).unwrap();
        let idxc = Matrix::identity(self.ring, x.cols());
        let idxr = Matrix::identity(self.ring, x.rows());
        let idyc = Matrix::identity(self.ring, y.cols());
        let idyr = Matrix::identity(self.ring, y.rows());
        let zc = Matrix::zero(self.ring, y.cols(), x.cols());
        let zr = Matrix::zero(self.ring, y.rows(), x.rows());
        let zc2 = Matrix::zero(self.ring, x.cols(), y.cols());
        let zr2 = Matrix::zero(self.ring, x.rows(), y.rows());
        Biproduct {
            inj1: RectMor {
                src: x.clone(),
                dst: object.clone(),
                a: idxc.vstack(&zc).unwrap(),
                b: idxr.vstack(&zr).unwrap(),
            },
            inj2: RectMor {
                src: y.clone(),
                dst: object.clone(),
                a: zc2.vstack(&idyc).unwrap(),
                b: zr2.vstack(&idyr).unwrap(),
            },
            proj1: RectMor {
                src: object.clone(),
                dst: x.clone(),
                a: idxc.hstack(&zc2).unwrap(),
                b: idxr.hstack(&zr2).unwrap(),
            },
            proj2: RectMor {
                src: object.clone(),
                dst: y.clone(),
                a: zc.hstack(&idyc).unwrap(),
                b: zr.hstack(&idyr).unwrap(),
            },
            object,
        }
    }
}

impl MatrixBacked for RectCat {
    fn ring(&self) -> Ring {
        self.ring
    }

    /// Morphisms `X -> Y` form the nullspace of `(A, B) -> B X - Y A`.
    fn hom_basis(&self, x: &Matrix, y: &Matrix) -> Result<Vec<RectMor>> {
        let dim_a = y.cols() * x.cols();
        let dim_b = y.rows() * x.rows();
        let rows = y.rows() * x.cols();
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(dim_a + dim_b);
        for i in 0..y.cols() {
            for j in 0..x.cols() {
                let mut u = Matrix::zero(self.ring, y.cols(), x.cols());
                u.set(i, j, self.ring.one());
                let m = y.mul(&u)?.neg();
                cols.push(flatten(&m));
            }
        }
        for i in 0..y.rows() {
            for j in 0..x.rows() {
                let mut v = Matrix::zero(self.ring, y.rows(), x.rows());
                v.set(i, j, self.ring.one());
                let m = v.mul(x)?;
                cols.push(flatten(&m));
            }
        }
        let coeff = Matrix::from_fn(self.ring, rows, cols.len(), |i, j| cols[j][i].clone());
        let null = coeff.nullspace_basis()?;
        let mut out = Vec::with_capacity(null.len());
        for v in null {
            let mut a = Matrix::zero(self.ring, y.cols(), x.cols());
            for i in 0..y.cols() {
                for j in 0..x.cols() {
                    a.set(i, j, v.get(i * x.cols() + j, 0).clone());
                }
            }
            let mut b = Matrix::zero(self.ring, y.rows(), x.rows());
            for i in 0..y.rows() {
                for j in 0..x.rows() {
                    b.set(i, j, v.get(dim_a + i * x.rows() + j, 0).clone());
                }
            }
            out.push(RectMor { src: x.clone(), dst: y.clone(), a, b });
        }
        Ok(out)
    }

    fn hom_coords(&self, f: &RectMor) -> Result<Vec<Scalar>> {
        let mut coords = flatten(&f.a);
        coords.extend(flatten(&f.b));
        Ok(coords)
    }

    fn scale_mor(&self, s: &Scalar, f: &RectMor) -> Result<RectMor> {
        Ok(RectMor {
            src: f.src.clone(),
            dst: f.dst.clone(),
            a: f.a.scale(s)?,
            b: f.b.scale(s)?,
        })
    }
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.push(m.get(i, j).clone());
        }
    }
    out
}

/// Componentwise composition of rectangular morphisms.
pub fn rect_compose(cat: &RectCat, g: &RectMor, f: &RectMor) -> Result<RectMor> {
    cat.compose(g, f)
}

/// Block-diagonal direct sum of rectangular objects.
pub fn rect_direct_sum(cat: &RectCat, x: &Matrix, y: &Matrix) -> Matrix {
    cat.biproduct(x, y).object
}

/// The equivalence from rectangular matrices to the extension category of
/// the Hom-bifunctor: a matrix `X` of shape m by n is the extension
/// `X ∈ Hom(R^n, R^m)`, and `(A, B)` becomes the pair `(B, A)`.
pub fn rect_to_ext_equivalence(ring: Ring) -> Result<FunctorValue<RectCat, ExtCat<HomBifunctor>>> {
    if !ring.is_field() {
        return Err(Error::UnsupportedRing(ring.name()));
    }
    let on_obj = |x: &Matrix| ExtObject { a: x.rows(), c: x.cols(), alpha: x.clone() };
    Ok(FunctorValue::new(
        "rect-to-ext",
        on_obj,
        move |m: &RectMor| ExtMor {
            src: on_obj(&m.src),
            dst: on_obj(&m.dst),
            a: m.b.clone(),
            c: m.a.clone(),
        },
    ))
}

/// The arrow associated to an object of the completed extension category
/// over a field: both endpoint idempotents are split by rank factorization
/// and the stored extension is conjugated onto the images, producing a
/// plain rectangular matrix.
pub fn completed_ext_to_arrow(
    x: &crate::equivalence::CExtObj<HomBifunctor>,
) -> Result<Matrix> {
    let w_a = rank_factorize_idempotent(&x.e.a)?;
    let w_c = rank_factorize_idempotent(&x.e.c)?;
    let carried = x.e.a.mul(&x.base.alpha)?;
    w_a.r.mul(&carried)?.mul(&w_c.s)
}

/// The arrow image of a morphism of the completed extension category,
/// conjugated by the same splittings.
pub fn completed_ext_mor_to_arrow(
    cat: &RectCat,
    m: &crate::equivalence::CExtMor<HomBifunctor>,
) -> Result<RectMor> {
    let src_obj = crate::completion::CompletedObject {
        base: m.e_source.src.clone(),
        e: m.e_source.clone(),
    };
    let dst_obj = crate::completion::CompletedObject {
        base: m.e_target.src.clone(),
        e: m.e_target.clone(),
    };
    let src = completed_ext_to_arrow(&src_obj)?;
    let dst = completed_ext_to_arrow(&dst_obj)?;
    let wa_src = rank_factorize_idempotent(&src_obj.e.a)?;
    let wc_src = rank_factorize_idempotent(&src_obj.e.c)?;
    let wa_dst = rank_factorize_idempotent(&dst_obj.e.a)?;
    let wc_dst = rank_factorize_idempotent(&dst_obj.e.c)?;
    let b = wa_dst.r.mul(&m.f.a)?.mul(&wa_src.s)?;
    let a = wc_dst.r.mul(&m.f.c)?.mul(&wc_src.s)?;
    cat.morphism(src, dst, a, b)
}

/// Spot check of the arrow correspondence on one pair of objects and one
/// morphism: hom-space dimensions agree across the correspondence, the
/// morphism image satisfies the intertwining equation, and composition is
/// preserved.
pub fn arrow_correspondence_check(
    rect: &RectCat,
    cext: &Completion<ExtCat<HomBifunctor>>,
    x: &crate::equivalence::CExtObj<HomBifunctor>,
    y: &crate::equivalence::CExtObj<HomBifunctor>,
    m: &crate::equivalence::CExtMor<HomBifunctor>,
    n: &crate::equivalence::CExtMor<HomBifunctor>,
) -> Result<bool> {
    let ax = completed_ext_to_arrow(x)?;
    let ay = completed_ext_to_arrow(y)?;
    if cext.hom_dim(x, y)? != rect.hom_dim(&ax, &ay)? {
        return Ok(false);
    }
    // m: x -> y, n: y -> z; images must compose functorially
    let im = completed_ext_mor_to_arrow(rect, m)?;
    let in_ = completed_ext_mor_to_arrow(rect, n)?;
    let lhs = completed_ext_mor_to_arrow(rect, &cext.compose(n, m)?)?;
    let rhs = rect.compose(&in_, &im)?;
    Ok(rect.mor_eq(&lhs, &rhs))
}

pub type RectSampler = crate::laws::Sampler<RectCat>;

/// Sampler for the rectangular matrix category.
pub fn rect_sampler(ring: Ring, max_dim: usize) -> RectSampler {
    let cat = RectCat::new(ring);
    crate::laws::Sampler::new(
        move |rng| {
            use rand::Rng;
            let m = rng.random_range(0..=max_dim);
            let n = rng.random_range(0..=max_dim);
            crate::generate::rand_matrix(ring, m, n, rng)
        },
        move |rng, x, y| crate::generate::rand_hom(&cat, x, y, rng).expect("rect hom sampling"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::direct_sum;

    fn f2() -> RectCat {
        RectCat::new(Ring::prime_field(2).unwrap())
    }

    #[test]
    fn identities_and_composition() {
        let cat = f2();
        let ring = cat.ring();
        let x = Matrix::from_i64s(ring, &[&[1], &[0]]);
        let id = cat.identity(&x);
        assert_eq!(id.a, Matrix::identity(ring, 1));
        assert_eq!(id.b, Matrix::identity(ring, 2));
        // the idempotent endomorphism from the worked example composes to itself
        let f = cat
            .morphism(
                x.clone(),
                x.clone(),
                Matrix::identity(ring, 1),
                Matrix::from_i64s(ring, &[&[1, 0], &[0, 0]]),
            )
            .unwrap();
        let ff = cat.compose(&f, &f).unwrap();
        assert_eq!(ff, f);
        let f_id = cat.compose(&f, &id).unwrap();
        assert_eq!(f_id, f);
    }

    #[test]
    fn invalid_pairs_are_rejected() {
        let cat = f2();
        let ring = cat.ring();
        let x = Matrix::from_i64s(ring, &[&[1], &[0]]);
        // B X != X A for this pair
        let bad = cat.morphism(
            x.clone(),
            x.clone(),
            Matrix::identity(ring, 1),
            Matrix::from_i64s(ring, &[&[0, 0], &[0, 1]]),
        );
        assert!(bad.is_err());
    }

    #[test]
    fn direct_sum_handles_empty_shapes() {
        let cat = RectCat::new(Ring::Rationals);
        let ring = cat.ring();
        // empty row vector of length n: zero columns are inserted to the left
        let x = Matrix::zero(ring, 0, 2);
        let y = Matrix::from_i64s(ring, &[&[3]]);
        let s = rect_direct_sum(&cat, &x, &y);
        assert_eq!(s.rows(), 1);
        assert_eq!(s.cols(), 3);
        assert_eq!(*s.get(0, 2), ring.from_i64(3));
        assert!(ring.is_zero(s.get(0, 0)));

        // the zero object is the unique element of the 0 by 0 matrices
        let zero = cat.zero_object();
        let back = rect_direct_sum(&cat, &y, &zero);
        assert_eq!(back, y);

        // plain block diagonal
        let one = Matrix::identity(ring, 1);
        let d = rect_direct_sum(&cat, &one, &one);
        assert_eq!(d, Matrix::identity(ring, 2));
    }

    #[test]
    fn biproduct_identities_hold() {
        let cat = f2();
        let ring = cat.ring();
        let x = Matrix::from_i64s(ring, &[&[1, 0]]);
        let y = Matrix::from_i64s(ring, &[&[1], &[1]]);
        let b = direct_sum(&cat, &x, &y);
        assert_eq!(cat.compose(&b.proj1, &b.inj1).unwrap(), cat.identity(&x));
        assert_eq!(cat.compose(&b.proj2, &b.inj2).unwrap(), cat.identity(&y));
        let sum = cat
            .add_mor(
                &cat.compose(&b.inj1, &b.proj1).unwrap(),
                &cat.compose(&b.inj2, &b.proj2).unwrap(),
            )
            .unwrap();
        assert_eq!(sum, cat.identity(&b.object));
    }

    #[test]
    fn rect_category_satisfies_additive_laws() {
        let ring = Ring::prime_field(5).unwrap();
        let cat = RectCat::new(ring);
        let sampler = rect_sampler(ring, 3);
        let report = crate::laws::check_additive_laws(&cat, &sampler, 29, 80).unwrap();
        assert!(report.pass, "{:?}", report.counterexample);
    }

    #[test]
    fn composition_preserves_the_intertwining_invariant() {
        let ring = Ring::prime_field(5).unwrap();
        let cat = RectCat::new(ring);
        let sampler = rect_sampler(ring, 3);
        let mut rng = crate::laws::rng_from(51);
        for _ in 0..100 {
            let x = sampler.obj(&mut rng);
            let y = sampler.obj(&mut rng);
            let z = sampler.obj(&mut rng);
            let f = sampler.hom(&mut rng, &x, &y);
            let g = sampler.hom(&mut rng, &y, &z);
            let gf = cat.compose(&g, &f).unwrap();
            assert_eq!(gf.b.mul(&gf.src).unwrap(), gf.dst.mul(&gf.a).unwrap());
        }
    }

    #[test]
    fn equivalence_spec_cases() {
        let ring = Ring::prime_field(2).unwrap();
        let cat = RectCat::new(ring);
        let functor = rect_to_ext_equivalence(ring).unwrap();
        // zero object maps to the zero extension
        let z = functor.apply_obj(&cat.zero_object());
        assert_eq!(z.a, 0);
        assert_eq!(z.c, 0);
        // X = [1; 0] maps to the column extension
        let x = Matrix::from_i64s(ring, &[&[1], &[0]]);
        let img = functor.apply_obj(&x);
        assert_eq!(img.a, 2);
        assert_eq!(img.c, 1);
        assert_eq!(img.alpha, x);
        assert!(rect_to_ext_equivalence(Ring::Integers).is_err());
    }

    #[test]
    fn hom_dimensions_agree_across_the_functor() {
        let ring = Ring::prime_field(5).unwrap();
        let cat = RectCat::new(ring);
        let ext = ExtCat::new(HomBifunctor::new(crate::matcat::MatCat::new(ring)));
        let functor = rect_to_ext_equivalence(ring).unwrap();
        let mut rng = crate::laws::rng_from(41);
        let sampler = rect_sampler(ring, 3);
        for _ in 0..25 {
            let x = sampler.obj(&mut rng);
            let y = sampler.obj(&mut rng);
            let lhs = cat.hom_dim(&x, &y).unwrap();
            let rhs = ext.hom_dim(&functor.apply_obj(&x), &functor.apply_obj(&y)).unwrap();
            assert_eq!(lhs, rhs);
            let m = sampler.hom(&mut rng, &x, &y);
            let im = functor.apply_mor(&m);
            assert!(ext.is_ext_morphism(&im.src, &im.dst, &im.a, &im.c).unwrap());
        }
    }
}
