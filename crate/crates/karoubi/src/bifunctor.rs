//! Biadditive functors to abelian groups, given executably: each `E(C, A)`
//! is a value type with group operations, equality and the two morphism
//! actions `a_E α = E(C, a)(α)` and `d^E α = E(d, A)(α)`. The Hom-bifunctor
//! over a matrix category is the concrete workhorse instance; the lifted
//! bifunctor on the idempotent completion and its restriction to the weak
//! completion are built generically on top of any instance.

use std::fmt::Debug;

use crate::cat::{AdditiveCategory, Category, MatrixBacked, SplitsIdempotents};
use crate::completion::{wic_membership, CompletedMorphism, CompletedObject, Completion, WicObject};
use crate::error::{Error, Result};
use crate::matcat::MatCat;
use crate::matrix::Matrix;
use crate::ring::Scalar;

pub type ObjOf<B> = <<B as Bifunctor>::Cat as Category>::Obj;
pub type MorOf<B> = <<B as Bifunctor>::Cat as Category>::Mor;

/// An executable biadditive functor `E(-, -)` on a carrier category. The
/// first argument slot is contravariant (written `d^E α`) and the second
/// covariant (`a_E α`). Elements must come with decidable equality.
pub trait Bifunctor: Debug + Send + Sync + 'static {
    type Cat: AdditiveCategory;
    type Elem: Clone + PartialEq + Debug + Send + Sync + 'static;

    fn cat(&self) -> &Self::Cat;
    fn zero_elem(&self, c: &ObjOf<Self>, a: &ObjOf<Self>) -> Self::Elem;
    fn add_elem(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;
    fn neg_elem(&self, x: &Self::Elem) -> Self::Elem;
    /// Is `x` a valid element of `E(c, a)`?
    fn is_element(&self, c: &ObjOf<Self>, a: &ObjOf<Self>, x: &Self::Elem) -> bool;
    /// Covariant action `a_E α` for `a: A -> B`.
    fn act_left(&self, a: &MorOf<Self>, x: &Self::Elem) -> Result<Self::Elem>;
    /// Contravariant action `d^E α` for `d: D -> C`.
    fn act_right(&self, d: &MorOf<Self>, x: &Self::Elem) -> Result<Self::Elem>;

    fn elem_eq(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        x == y
    }
}

/// Bifunctors whose groups `E(C, A)` are finite dimensional vector spaces
/// with computable bases, enabling hom solving in the extension category.
pub trait SolvableBifunctor: Bifunctor
where
    Self::Cat: MatrixBacked,
{
    fn elem_basis(&self, c: &ObjOf<Self>, a: &ObjOf<Self>) -> Result<Vec<Self::Elem>>;
    /// Injective linear coordinates, consistent for fixed `(c, a)`.
    fn elem_coords(&self, c: &ObjOf<Self>, a: &ObjOf<Self>, x: &Self::Elem) -> Result<Vec<Scalar>>;
    fn scale_elem(&self, s: &Scalar, x: &Self::Elem) -> Result<Self::Elem>;
}

/// The Hom-bifunctor on Mat(R): `E(C, A) = Hom(C, A)` is the set of
/// matrices with `dim A` rows and `dim C` columns, `a_E α = a·α` and
/// `d^E α = α·d`.
#[derive(Debug, Clone, Copy)]
pub struct HomBifunctor {
    cat: MatCat,
}

impl HomBifunctor {
    pub fn new(cat: MatCat) -> HomBifunctor {
        HomBifunctor { cat }
    }
}

impl Bifunctor for HomBifunctor {
    type Cat = MatCat;
    type Elem = Matrix;

    fn cat(&self) -> &MatCat {
        &self.cat
    }

    fn zero_elem(&self, c: &usize, a: &usize) -> Matrix {
        Matrix::zero(self.cat.ring(), *a, *c)
    }

    fn add_elem(&self, x: &Matrix, y: &Matrix) -> Result<Matrix> {
        x.add(y)
    }

    fn neg_elem(&self, x: &Matrix) -> Matrix {
        x.neg()
    }

    fn is_element(&self, c: &usize, a: &usize, x: &Matrix) -> bool {
        x.ring() == self.cat.ring() && x.rows() == *a && x.cols() == *c
    }

    fn act_left(&self, a: &Matrix, x: &Matrix) -> Result<Matrix> {
        a.mul(x)
    }

    fn act_right(&self, d: &Matrix, x: &Matrix) -> Result<Matrix> {
        x.mul(d)
    }
}

impl SolvableBifunctor for HomBifunctor {
    fn elem_basis(&self, c: &usize, a: &usize) -> Result<Vec<Matrix>> {
        self.cat.hom_basis(c, a)
    }

    fn elem_coords(&self, _c: &usize, _a: &usize, x: &Matrix) -> Result<Vec<Scalar>> {
        self.cat.hom_coords(x)
    }

    fn scale_elem(&self, s: &Scalar, x: &Matrix) -> Result<Matrix> {
        x.scale(s)
    }
}

/// An element `(e_A, α, e_C)` of the lifted bifunctor on the completion:
/// `α` must satisfy `(e_A)_E α = α = (e_C)^E α`.
#[derive(Debug, Clone, PartialEq)]
pub struct TildeExtension<M, E> {
    pub e_a: M,
    pub alpha: E,
    pub e_c: M,
}

/// The lift of a bifunctor to the idempotent completion of its carrier.
#[derive(Debug, Clone)]
pub struct TildeBifunctor<B: Bifunctor>
where
    B::Cat: Clone,
{
    pub base: B,
    completed: Completion<B::Cat>,
}

impl<B: Bifunctor> TildeBifunctor<B>
where
    B::Cat: Clone,
{
    pub fn new(base: B) -> TildeBifunctor<B> {
        let completed = Completion::new(base.cat().clone());
        TildeBifunctor { base, completed }
    }

    pub fn completed_cat(&self) -> &Completion<B::Cat> {
        &self.completed
    }

    /// Checked element constructor enforcing the compatibility equations.
    pub fn element(
        &self,
        e_a: MorOf<B>,
        alpha: B::Elem,
        e_c: MorOf<B>,
    ) -> Result<TildeExtension<MorOf<B>, B::Elem>> {
        let x = TildeExtension { e_a, alpha, e_c };
        if !self.compatible(&x)? {
            return Err(Error::InvalidExtension(
                "element does not satisfy (e_A)_E α = α = (e_C)^E α".into(),
            ));
        }
        Ok(x)
    }

    fn compatible(&self, x: &TildeExtension<MorOf<B>, B::Elem>) -> Result<bool> {
        let left = self.base.act_left(&x.e_a, &x.alpha)?;
        let right = self.base.act_right(&x.e_c, &x.alpha)?;
        Ok(self.base.elem_eq(&left, &x.alpha) && self.base.elem_eq(&right, &x.alpha))
    }
}

impl<B: Bifunctor> Bifunctor for TildeBifunctor<B>
where
    B::Cat: Clone,
{
    type Cat = Completion<B::Cat>;
    type Elem = TildeExtension<MorOf<B>, B::Elem>;

    fn cat(&self) -> &Completion<B::Cat> {
        &self.completed
    }

    fn zero_elem(
        &self,
        c: &CompletedObject<ObjOf<B>, MorOf<B>>,
        a: &CompletedObject<ObjOf<B>, MorOf<B>>,
    ) -> Self::Elem {
        TildeExtension {
            e_a: a.e.clone(),
            alpha: self.base.zero_elem(&c.base, &a.base),
            e_c: c.e.clone(),
        }
    }

    fn add_elem(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        if x.e_a != y.e_a || x.e_c != y.e_c {
            return Err(Error::InvalidExtension(
                "adding elements over different idempotents".into(),
            ));
        }
        Ok(TildeExtension {
            e_a: x.e_a.clone(),
            alpha: self.base.add_elem(&x.alpha, &y.alpha)?,
            e_c: x.e_c.clone(),
        })
    }

    fn neg_elem(&self, x: &Self::Elem) -> Self::Elem {
        TildeExtension {
            e_a: x.e_a.clone(),
            alpha: self.base.neg_elem(&x.alpha),
            e_c: x.e_c.clone(),
        }
    }

    fn is_element(
        &self,
        c: &CompletedObject<ObjOf<B>, MorOf<B>>,
        a: &CompletedObject<ObjOf<B>, MorOf<B>>,
        x: &Self::Elem,
    ) -> bool {
        let base_cat = self.base.cat();
        base_cat.mor_eq(&x.e_a, &a.e)
            && base_cat.mor_eq(&x.e_c, &c.e)
            && self.base.is_element(&c.base, &a.base, &x.alpha)
            && self.compatible(x).unwrap_or(false)
    }

    /// `a_E` for a completed morphism `(e_B, a, e_A)` sends `(e_A, α, e_C)`
    /// to `(e_B, a_E α, e_C)`.
    fn act_left(&self, a: &CompletedMorphism<MorOf<B>>, x: &Self::Elem) -> Result<Self::Elem> {
        let base_cat = self.base.cat();
        if !base_cat.mor_eq(&a.e_source, &x.e_a) {
            return Err(Error::DomainMismatch("covariant action endpoint".into()));
        }
        Ok(TildeExtension {
            e_a: a.e_target.clone(),
            alpha: self.base.act_left(&a.f, &x.alpha)?,
            e_c: x.e_c.clone(),
        })
    }

    /// `d^E` for a completed morphism `(e_C, d, e_D)` sends `(e_A, α, e_C)`
    /// to `(e_A, d^E α, e_D)`.
    fn act_right(&self, d: &CompletedMorphism<MorOf<B>>, x: &Self::Elem) -> Result<Self::Elem> {
        let base_cat = self.base.cat();
        if !base_cat.mor_eq(&d.e_target, &x.e_c) {
            return Err(Error::DomainMismatch("contravariant action endpoint".into()));
        }
        Ok(TildeExtension {
            e_a: x.e_a.clone(),
            alpha: self.base.act_right(&d.f, &x.alpha)?,
            e_c: d.e_source.clone(),
        })
    }
}

impl<B> SolvableBifunctor for TildeBifunctor<B>
where
    B: SolvableBifunctor,
    B::Cat: MatrixBacked + Clone,
{
    fn elem_basis(
        &self,
        c: &CompletedObject<ObjOf<B>, MorOf<B>>,
        a: &CompletedObject<ObjOf<B>, MorOf<B>>,
    ) -> Result<Vec<Self::Elem>> {
        let base_basis = self.base.elem_basis(&c.base, &a.base)?;
        let mut projected = Vec::with_capacity(base_basis.len());
        for b in &base_basis {
            let p = self.base.act_left(&a.e, &self.base.act_right(&c.e, b)?)?;
            projected.push(p);
        }
        let coords: Vec<Vec<Scalar>> = projected
            .iter()
            .map(|p| self.base.elem_coords(&c.base, &a.base, p))
            .collect::<Result<_>>()?;
        let dim = coords.first().map_or(0, |v| v.len());
        let ring = self.base.cat().ring();
        let m = Matrix::from_fn(ring, dim, projected.len(), |i, j| coords[j][i].clone());
        let (_, pivots) = m.rref()?;
        Ok(pivots
            .into_iter()
            .map(|j| TildeExtension {
                e_a: a.e.clone(),
                alpha: projected[j].clone(),
                e_c: c.e.clone(),
            })
            .collect())
    }

    fn elem_coords(
        &self,
        c: &CompletedObject<ObjOf<B>, MorOf<B>>,
        a: &CompletedObject<ObjOf<B>, MorOf<B>>,
        x: &Self::Elem,
    ) -> Result<Vec<Scalar>> {
        self.base.elem_coords(&c.base, &a.base, &x.alpha)
    }

    fn scale_elem(&self, s: &Scalar, x: &Self::Elem) -> Result<Self::Elem> {
        Ok(TildeExtension {
            e_a: x.e_a.clone(),
            alpha: self.base.scale_elem(s, &x.alpha)?,
            e_c: x.e_c.clone(),
        })
    }
}

/// The restriction of the lifted bifunctor to the weak idempotent
/// completion: same data as the lift, but object endpoints must admit a
/// splitting of the complementary idempotent.
#[derive(Debug, Clone)]
pub struct HatBifunctor<B: Bifunctor>
where
    B::Cat: Clone,
{
    pub tilde: TildeBifunctor<B>,
}

impl<B> HatBifunctor<B>
where
    B: Bifunctor,
    B::Cat: Clone + SplitsIdempotents,
{
    pub fn new(base: B) -> HatBifunctor<B> {
        HatBifunctor { tilde: TildeBifunctor::new(base) }
    }

    /// Verifies that an endpoint lies in the weak completion, returning the
    /// witness. Over bases with computable splittings this always succeeds;
    /// failures surface as membership errors.
    pub fn endpoint_membership(
        &self,
        obj: &CompletedObject<ObjOf<B>, MorOf<B>>,
    ) -> Result<WicObject<ObjOf<B>, MorOf<B>>> {
        wic_membership(self.tilde.completed_cat(), obj)
            .map_err(|e| Error::Membership(format!("endpoint not in the weak completion: {e}")))
    }
}

impl<B> Bifunctor for HatBifunctor<B>
where
    B: Bifunctor,
    B::Cat: Clone + SplitsIdempotents,
{
    type Cat = Completion<B::Cat>;
    type Elem = TildeExtension<MorOf<B>, B::Elem>;

    fn cat(&self) -> &Completion<B::Cat> {
        self.tilde.cat()
    }

    fn zero_elem(
        &self,
        c: &CompletedObject<ObjOf<B>, MorOf<B>>,
        a: &CompletedObject<ObjOf<B>, MorOf<B>>,
    ) -> Self::Elem {
        self.tilde.zero_elem(c, a)
    }

    fn add_elem(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        self.tilde.add_elem(x, y)
    }

    fn neg_elem(&self, x: &Self::Elem) -> Self::Elem {
        self.tilde.neg_elem(x)
    }

    fn is_element(
        &self,
        c: &CompletedObject<ObjOf<B>, MorOf<B>>,
        a: &CompletedObject<ObjOf<B>, MorOf<B>>,
        x: &Self::Elem,
    ) -> bool {
        self.tilde.is_element(c, a, x)
            && self.endpoint_membership(c).is_ok()
            && self.endpoint_membership(a).is_ok()
    }

    fn act_left(&self, a: &CompletedMorphism<MorOf<B>>, x: &Self::Elem) -> Result<Self::Elem> {
        self.tilde.act_left(a, x)
    }

    fn act_right(&self, d: &CompletedMorphism<MorOf<B>>, x: &Self::Elem) -> Result<Self::Elem> {
        self.tilde.act_right(d, x)
    }
}

impl<B> SolvableBifunctor for HatBifunctor<B>
where
    B: SolvableBifunctor,
    B::Cat: MatrixBacked + Clone + SplitsIdempotents,
{
    fn elem_basis(
        &self,
        c: &CompletedObject<ObjOf<B>, MorOf<B>>,
        a: &CompletedObject<ObjOf<B>, MorOf<B>>,
    ) -> Result<Vec<Self::Elem>> {
        self.tilde.elem_basis(c, a)
    }

    fn elem_coords(
        &self,
        c: &CompletedObject<ObjOf<B>, MorOf<B>>,
        a: &CompletedObject<ObjOf<B>, MorOf<B>>,
        x: &Self::Elem,
    ) -> Result<Vec<Scalar>> {
        self.tilde.elem_coords(c, a, x)
    }

    fn scale_elem(&self, s: &Scalar, x: &Self::Elem) -> Result<Self::Elem> {
        self.tilde.scale_elem(s, x)
    }
}
