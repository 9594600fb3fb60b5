//! The category of extensions of a pair (carrier category, biadditive
//! functor): objects are extensions `α ∈ E(C, A)`, morphisms are pairs
//! `(a, c)` with `a_E α = c^E β`, composed and added componentwise. Its
//! exact structure consists of the pairs of sections with componentwise
//! cokernels, and idempotents split constructively whenever they split in
//! the carrier.

use crate::bifunctor::{Bifunctor, MorOf, ObjOf, SolvableBifunctor};
use crate::cat::{
    AdditiveCategory, Biproduct, Category, CokernelsOfSections, MatrixBacked, SplitWitness,
    SplitsIdempotents,
};
use crate::error::{Error, Result};
use crate::exactness::decide_split_exact;
use crate::matrix::Matrix;
use crate::ring::{Ring, Scalar};

/// An extension `α ∈ E(c, a)` together with its endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtObject<O, E> {
    pub a: O,
    pub c: O,
    pub alpha: E,
}

/// A morphism of extensions: the pair `(a, c)` with its stored endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtMor<O, E, M> {
    pub src: ExtObject<O, E>,
    pub dst: ExtObject<O, E>,
    pub a: M,
    pub c: M,
}

pub type ExtObjOf<B> = ExtObject<ObjOf<B>, <B as Bifunctor>::Elem>;
pub type ExtMorOf<B> = ExtMor<ObjOf<B>, <B as Bifunctor>::Elem, MorOf<B>>;

#[derive(Debug, Clone)]
pub struct ExtCat<B> {
    pub bif: B,
}

impl<B: Bifunctor> ExtCat<B> {
    pub fn new(bif: B) -> ExtCat<B> {
        ExtCat { bif }
    }

    /// Checked object constructor.
    pub fn object(&self, a: ObjOf<B>, c: ObjOf<B>, alpha: B::Elem) -> Result<ExtObjOf<B>> {
        if !self.bif.is_element(&c, &a, &alpha) {
            return Err(Error::InvalidExtension(format!("{alpha:?} is not in E({c:?}, {a:?})")));
        }
        Ok(ExtObject { a, c, alpha })
    }

    /// Checked morphism constructor: shapes must line up and the defining
    /// equation `a_E α = c^E β` must hold.
    pub fn morphism(
        &self,
        src: ExtObjOf<B>,
        dst: ExtObjOf<B>,
        a: MorOf<B>,
        c: MorOf<B>,
    ) -> Result<ExtMorOf<B>> {
        if !self.is_ext_morphism(&src, &dst, &a, &c)? {
            return Err(Error::Precondition("pair is not a morphism of extensions".into()));
        }
        Ok(ExtMor { src, dst, a, c })
    }

    /// The defining condition for `(a, c): α -> β`. Shape inconsistencies
    /// are reported as errors, a failed equation as `false`.
    pub fn is_ext_morphism(
        &self,
        src: &ExtObjOf<B>,
        dst: &ExtObjOf<B>,
        a: &MorOf<B>,
        c: &MorOf<B>,
    ) -> Result<bool> {
        let base = self.bif.cat();
        if base.domain(a) != src.a
            || base.codomain(a) != dst.a
            || base.domain(c) != src.c
            || base.codomain(c) != dst.c
        {
            return Err(Error::ShapeMismatch("extension morphism endpoints".into()));
        }
        let lhs = self.bif.act_left(a, &src.alpha)?;
        let rhs = self.bif.act_right(c, &dst.alpha)?;
        Ok(self.bif.elem_eq(&lhs, &rhs))
    }

    fn verify_mor(&self, m: &ExtMorOf<B>) -> Result<()> {
        if self.is_ext_morphism(&m.src, &m.dst, &m.a, &m.c)? {
            Ok(())
        } else {
            Err(Error::Internal(
                "composition or addition broke the extension-morphism equation".into(),
            ))
        }
    }
}

impl<B: Bifunctor> Category for ExtCat<B> {
    type Obj = ExtObjOf<B>;
    type Mor = ExtMorOf<B>;

    fn name(&self) -> String {
        format!("Ext[{}]", self.bif.cat().name())
    }

    fn domain(&self, f: &Self::Mor) -> Self::Obj {
        f.src.clone()
    }

    fn codomain(&self, f: &Self::Mor) -> Self::Obj {
        f.dst.clone()
    }

    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        let base = self.bif.cat();
        ExtMor {
            src: x.clone(),
            dst: x.clone(),
            a: base.identity(&x.a),
            c: base.identity(&x.c),
        }
    }

    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        if f.dst != g.src {
            return Err(Error::DomainMismatch(format!("composition mismatch in {}", self.name())));
        }
        let base = self.bif.cat();
        Ok(ExtMor {
            src: f.src.clone(),
            dst: g.dst.clone(),
            a: base.compose(&g.a, &f.a)?,
            c: base.compose(&g.c, &f.c)?,
        })
    }
}

impl<B: Bifunctor> AdditiveCategory for ExtCat<B> {
    fn zero_object(&self) -> Self::Obj {
        let base = self.bif.cat();
        let z = base.zero_object();
        ExtObject { alpha: self.bif.zero_elem(&z, &z), a: z.clone(), c: z }
    }

    fn zero_mor(&self, src: &Self::Obj, dst: &Self::Obj) -> Self::Mor {
        let base = self.bif.cat();
        ExtMor {
            src: src.clone(),
            dst: dst.clone(),
            a: base.zero_mor(&src.a, &dst.a),
            c: base.zero_mor(&src.c, &dst.c),
        }
    }

    fn add_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        if f.src != g.src || f.dst != g.dst {
            return Err(Error::DomainMismatch("adding non-parallel extension morphisms".into()));
        }
        let base = self.bif.cat();
        Ok(ExtMor {
            src: f.src.clone(),
            dst: f.dst.clone(),
            a: base.add_mor(&f.a, &g.a)?,
            c: base.add_mor(&f.c, &g.c)?,
        })
    }

    fn neg_mor(&self, f: &Self::Mor) -> Self::Mor {
        let base = self.bif.cat();
        ExtMor {
            src: f.src.clone(),
            dst: f.dst.clone(),
            a: base.neg_mor(&f.a),
            c: base.neg_mor(&f.c),
        }
    }

    /// The direct sum of `α ∈ E(C, A)` and `γ ∈ E(G, E)` is the extension
    /// `(ι_A)_E (p_C)^E α + (ι_E)_E (p_G)^E γ` of the biproduct endpoints.
    fn biproduct(&self, x: &Self::Obj, y: &Self::Obj) -> Biproduct<Self::Obj, Self::Mor> {
        let base = self.bif.cat();
        let ba = base.biproduct(&x.a, &y.a);
        let bc = base.biproduct(&x.c, &y.c);
        let part1 = self
            .bif
            .act_left(&ba.inj1, &self.bif.act_right(&bc.proj1, &x.alpha).unwrap())
            .unwrap();
        let part2 = self
            .bif
            .act_left(&ba.inj2, &self.bif.act_right(&bc.proj2, &y.alpha).unwrap())
            .unwrap();
        let alpha = self.bif.add_elem(&part1, &part2).unwrap();
        let object = ExtObject { a: ba.object, c: bc.object, alpha };
        let mk = |src: &Self::Obj, dst: &Self::Obj, a: MorOf<B>, c: MorOf<B>| ExtMor {
            src: src.clone(),
            dst: dst.clone(),
            a,
            c,
        };
        Biproduct {
            inj1: mk(x, &object, ba.inj1, bc.inj1),
            inj2: mk(y, &object, ba.inj2, bc.inj2),
            proj1: mk(&object, x, ba.proj1, bc.proj1),
            proj2: mk(&object, y, ba.proj2, bc.proj2),
            object,
        }
    }
}

impl<B> MatrixBacked for ExtCat<B>
where
    B: SolvableBifunctor,
    B::Cat: MatrixBacked,
{
    fn ring(&self) -> Ring {
        self.bif.cat().ring()
    }

    /// Morphisms `α -> β` form the nullspace of the linear map
    /// `(a, c) -> a_E α - c^E β` inside `Hom(A, B) ⊕ Hom(C, D)`.
    fn hom_basis(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Vec<Self::Mor>> {
        let base = self.bif.cat();
        let ring = base.ring();
        let basis_a = base.hom_basis(&x.a, &y.a)?;
        let basis_c = base.hom_basis(&x.c, &y.c)?;
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(basis_a.len() + basis_c.len());
        for u in &basis_a {
            let moved = self.bif.act_left(u, &x.alpha)?;
            cols.push(self.bif.elem_coords(&x.c, &y.a, &moved)?);
        }
        for v in &basis_c {
            let moved = self.bif.act_right(v, &y.alpha)?;
            let coords = self.bif.elem_coords(&x.c, &y.a, &moved)?;
            cols.push(coords.iter().map(|s| ring.neg(s)).collect());
        }
        let rows = cols.first().map_or(0, |c| c.len());
        let m = Matrix::from_fn(ring, rows, cols.len(), |i, j| cols[j][i].clone());
        let null = m.nullspace_basis()?;
        let na = basis_a.len();
        let mut out = Vec::with_capacity(null.len());
        for v in null {
            let coords_a: Vec<Scalar> = (0..na).map(|i| v.get(i, 0).clone()).collect();
            let coords_c: Vec<Scalar> =
                (na..na + basis_c.len()).map(|i| v.get(i, 0).clone()).collect();
            let a = base.mor_from_coords(&x.a, &y.a, &coords_a)?;
            let c = base.mor_from_coords(&x.c, &y.c, &coords_c)?;
            out.push(ExtMor { src: x.clone(), dst: y.clone(), a, c });
        }
        Ok(out)
    }

    fn hom_coords(&self, f: &Self::Mor) -> Result<Vec<Scalar>> {
        let base = self.bif.cat();
        let mut coords = base.hom_coords(&f.a)?;
        coords.extend(base.hom_coords(&f.c)?);
        Ok(coords)
    }

    fn scale_mor(&self, s: &Scalar, f: &Self::Mor) -> Result<Self::Mor> {
        let base = self.bif.cat();
        Ok(ExtMor {
            src: f.src.clone(),
            dst: f.dst.clone(),
            a: base.scale_mor(s, &f.a)?,
            c: base.scale_mor(s, &f.c)?,
        })
    }
}

/// Componentwise composition with the extension-morphism equation
/// re-verified on the result. Validity is closed under composition, so a
/// failure here signals a broken bifunctor instance.
pub fn ext_compose<B: Bifunctor>(
    ext: &ExtCat<B>,
    g: &ExtMorOf<B>,
    f: &ExtMorOf<B>,
) -> Result<ExtMorOf<B>> {
    let out = ext.compose(g, f)?;
    ext.verify_mor(&out)?;
    Ok(out)
}

/// Componentwise addition of parallel morphisms, re-verified.
pub fn ext_add<B: Bifunctor>(
    ext: &ExtCat<B>,
    f: &ExtMorOf<B>,
    g: &ExtMorOf<B>,
) -> Result<ExtMorOf<B>> {
    let out = ext.add_mor(f, g)?;
    ext.verify_mor(&out)?;
    Ok(out)
}

/// Constructive splitting of an idempotent `(e_A, e_C)` on `α` from
/// splittings of the components: with `e_A = s r`, `r s = id` and
/// `e_C = v u`, `u v = id`, the extension `β = r_E v^E α` receives
/// `(r, u): α -> β` and `(s, v): β -> α` with `(s, v)(r, u) = (e_A, e_C)`
/// and `(r, u)(s, v) = id`.
pub fn split_ext_idempotent<B: Bifunctor>(
    ext: &ExtCat<B>,
    alpha: &ExtObjOf<B>,
    e_a: &MorOf<B>,
    e_c: &MorOf<B>,
    w_a: &SplitWitness<MorOf<B>>,
    w_c: &SplitWitness<MorOf<B>>,
) -> Result<(ExtObjOf<B>, ExtMorOf<B>, ExtMorOf<B>)> {
    let base = ext.bif.cat();
    if !crate::cat::verify_split_witness(base, e_a, w_a)?
        || !crate::cat::verify_split_witness(base, e_c, w_c)?
    {
        return Err(Error::Precondition("split witnesses fail verification".into()));
    }
    let pair = ExtMor {
        src: alpha.clone(),
        dst: alpha.clone(),
        a: e_a.clone(),
        c: e_c.clone(),
    };
    if !ext.is_ext_morphism(&pair.src, &pair.dst, &pair.a, &pair.c)? {
        return Err(Error::Precondition("(e_A, e_C) is not an endomorphism of α".into()));
    }
    if !crate::cat::is_idempotent(ext, &pair)? {
        return Err(Error::Precondition("(e_A, e_C) is not idempotent".into()));
    }

    let beta_elem = ext.bif.act_left(&w_a.r, &ext.bif.act_right(&w_c.s, &alpha.alpha)?)?;
    let beta = ExtObject {
        a: base.codomain(&w_a.r),
        c: base.codomain(&w_c.r),
        alpha: beta_elem,
    };
    let ru = ext.morphism(alpha.clone(), beta.clone(), w_a.r.clone(), w_c.r.clone())?;
    let sv = ext.morphism(beta.clone(), alpha.clone(), w_a.s.clone(), w_c.s.clone())?;

    let back = ext.compose(&sv, &ru)?;
    if !ext.mor_eq(&back, &pair) {
        return Err(Error::Internal("splitting does not recompose to the idempotent".into()));
    }
    let forth = ext.compose(&ru, &sv)?;
    if !ext.mor_eq(&forth, &ext.identity(&beta)) {
        return Err(Error::Internal("splitting is not a retract of the image".into()));
    }
    Ok((beta, ru, sv))
}

impl<B> SplitsIdempotents for ExtCat<B>
where
    B: Bifunctor,
    B::Cat: SplitsIdempotents,
{
    fn split_idempotent(&self, m: &Self::Mor) -> Result<SplitWitness<Self::Mor>> {
        if m.src != m.dst {
            return Err(Error::DomainMismatch("idempotent must be an endomorphism".into()));
        }
        let base = self.bif.cat();
        let w_a = base.split_idempotent(&m.a)?;
        let w_c = base.split_idempotent(&m.c)?;
        let (_, ru, sv) = split_ext_idempotent(self, &m.src, &m.a, &m.c, &w_a, &w_c)?;
        Ok(SplitWitness { r: ru, s: sv })
    }
}

/// Componentwise cokernel of a section `(a, c)` with supplied retractions,
/// over carriers with computable cokernels of sections. The target
/// extension is `b_E (s_d)^E β` for the certified section `s_d` of the
/// cokernel `d`.
pub fn ext_cokernel_of_section<B>(
    ext: &ExtCat<B>,
    m: &ExtMorOf<B>,
    r_a: &MorOf<B>,
    r_c: &MorOf<B>,
) -> Result<ExtMorOf<B>>
where
    B: Bifunctor,
    B::Cat: CokernelsOfSections,
{
    let base = ext.bif.cat();
    let ra_ok = base.mor_eq(&base.compose(r_a, &m.a)?, &base.identity(&m.src.a));
    let rc_ok = base.mor_eq(&base.compose(r_c, &m.c)?, &base.identity(&m.src.c));
    if !ra_ok || !rc_ok {
        return Err(Error::Precondition("supplied retractions fail verification".into()));
    }
    let (b, _s_b) = base.coker_of_section(&m.a, r_a)?;
    let (d, s_d) = base.coker_of_section(&m.c, r_c)?;
    let gamma_elem = ext.bif.act_left(&b, &ext.bif.act_right(&s_d, &m.dst.alpha)?)?;
    let gamma = ExtObject {
        a: base.codomain(&b),
        c: base.codomain(&d),
        alpha: gamma_elem,
    };
    ext.morphism(m.dst.clone(), gamma, b, d)
}

/// Membership of a composable pair in the exact structure of the extension
/// category: both components of the first morphism must be sections with
/// the second morphism their componentwise cokernel, i.e. both underlying
/// pairs split exact in the carrier. Invalid morphism data yields `false`.
pub fn conflation_in_xe<B>(ext: &ExtCat<B>, m1: &ExtMorOf<B>, m2: &ExtMorOf<B>) -> Result<bool>
where
    B: Bifunctor,
    B::Cat: MatrixBacked,
{
    if m1.dst != m2.src {
        return Err(Error::DomainMismatch("pair does not compose".into()));
    }
    let base = ext.bif.cat();
    if !ext.is_ext_morphism(&m1.src, &m1.dst, &m1.a, &m1.c)?
        || !ext.is_ext_morphism(&m2.src, &m2.dst, &m2.a, &m2.c)?
    {
        return Ok(false);
    }
    Ok(decide_split_exact(base, &m1.a, &m2.a)? && decide_split_exact(base, &m1.c, &m2.c)?)
}

/// Witness-verified variant for carriers without hom solving.
pub struct XeWitnesses<M> {
    pub retraction_a: M,
    pub section_a: M,
    pub retraction_c: M,
    pub section_c: M,
}

pub fn conflation_in_xe_witnessed<B: Bifunctor>(
    ext: &ExtCat<B>,
    m1: &ExtMorOf<B>,
    m2: &ExtMorOf<B>,
    w: &XeWitnesses<MorOf<B>>,
) -> Result<bool> {
    if m1.dst != m2.src {
        return Err(Error::DomainMismatch("pair does not compose".into()));
    }
    let base = ext.bif.cat();
    if !ext.is_ext_morphism(&m1.src, &m1.dst, &m1.a, &m1.c)?
        || !ext.is_ext_morphism(&m2.src, &m2.dst, &m2.a, &m2.c)?
    {
        return Ok(false);
    }
    Ok(
        crate::exactness::verify_split_exact(base, &m1.a, &m2.a, &w.retraction_a, &w.section_a)?
            && crate::exactness::verify_split_exact(
                base,
                &m1.c,
                &m2.c,
                &w.retraction_c,
                &w.section_c,
            )?,
    )
}

/// Dimension of the space of extension morphisms `α -> β`.
pub fn hom_ext_dimension<B>(ext: &ExtCat<B>, x: &ExtObjOf<B>, y: &ExtObjOf<B>) -> Result<usize>
where
    B: SolvableBifunctor,
    B::Cat: MatrixBacked,
{
    ext.hom_dim(x, y)
}
