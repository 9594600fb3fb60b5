//! Functor pairs `(F, Γ)` between carriers equipped with biadditive
//! functors: `F` is an additive functor and `Γ` a natural family of group
//! homomorphisms `E(C, A) -> F(F C, F A)`. Such pairs compose, lift to the
//! idempotent completions, and induce exact functors between the extension
//! categories; natural transformations compatible with the `Γ`s induce
//! natural transformations between the induced functors.

use std::sync::Arc;

use crate::bifunctor::{Bifunctor, MorOf, ObjOf, SolvableBifunctor, TildeBifunctor, TildeExtension};
use crate::cat::MatrixBacked;
use crate::completion::{complete_functor, complete_nattrans, CompletedObject};
use crate::error::Result;
use crate::extensions::{ExtCat, ExtMor, ExtMorOf, ExtObjOf, ExtObject};
use crate::functor::{compose_functors, FunctorValue, NatTransValue};
use crate::laws::{rng_from, LawReport, Sampler, SquareReport};

pub struct ExFunctor<BE: Bifunctor, BF: Bifunctor> {
    pub name: String,
    pub f: FunctorValue<BE::Cat, BF::Cat>,
    #[allow(clippy::type_complexity)]
    gamma: Arc<dyn Fn(&ObjOf<BE>, &ObjOf<BE>, &BE::Elem) -> BF::Elem + Send + Sync>,
}

impl<BE: Bifunctor, BF: Bifunctor> Clone for ExFunctor<BE, BF> {
    fn clone(&self) -> Self {
        ExFunctor { name: self.name.clone(), f: self.f.clone(), gamma: self.gamma.clone() }
    }
}

impl<BE: Bifunctor, BF: Bifunctor> ExFunctor<BE, BF> {
    pub fn new(
        name: impl Into<String>,
        f: FunctorValue<BE::Cat, BF::Cat>,
        gamma: impl Fn(&ObjOf<BE>, &ObjOf<BE>, &BE::Elem) -> BF::Elem + Send + Sync + 'static,
    ) -> ExFunctor<BE, BF> {
        ExFunctor { name: name.into(), f, gamma: Arc::new(gamma) }
    }

    /// `Γ` at the component `(c, a)` applied to an element of `E(c, a)`.
    pub fn gamma_at(&self, c: &ObjOf<BE>, a: &ObjOf<BE>, x: &BE::Elem) -> BF::Elem {
        (self.gamma)(c, a, x)
    }
}

pub fn identity_exfunctor<B: Bifunctor>() -> ExFunctor<B, B> {
    ExFunctor::new(
        "Id",
        crate::functor::identity_functor::<B::Cat>(),
        |_c, _a, x: &B::Elem| x.clone(),
    )
}

/// Composite `(L, Φ) ∘ (F, Γ) = (L F, Φ at F × F after Γ)`.
pub fn compose_exfunctors<BE, BF, BG>(
    l_phi: &ExFunctor<BF, BG>,
    f_gamma: &ExFunctor<BE, BF>,
) -> ExFunctor<BE, BG>
where
    BE: Bifunctor,
    BF: Bifunctor,
    BG: Bifunctor,
{
    let (outer, inner) = (l_phi.clone(), f_gamma.clone());
    ExFunctor::new(
        format!("{}∘{}", l_phi.name, f_gamma.name),
        compose_functors(&l_phi.f, &f_gamma.f),
        move |c, a, x| {
            let fc = inner.f.apply_obj(c);
            let fa = inner.f.apply_obj(a);
            outer.gamma_at(&fc, &fa, &inner.gamma_at(c, a, x))
        },
    )
}

/// A natural transformation between the underlying functors of two pairs,
/// subject to the compatibility equation checked by [`check_exnattrans`].
pub struct ExNatTrans<BE: Bifunctor, BF: Bifunctor> {
    pub src: ExFunctor<BE, BF>,
    pub dst: ExFunctor<BE, BF>,
    pub nt: NatTransValue<BE::Cat, BF::Cat>,
}

impl<BE: Bifunctor, BF: Bifunctor> Clone for ExNatTrans<BE, BF> {
    fn clone(&self) -> Self {
        ExNatTrans { src: self.src.clone(), dst: self.dst.clone(), nt: self.nt.clone() }
    }
}

/// Verifies `(b_A)_F Γ(α) = (b_C)^F Λ(α)` on seeded samples.
pub fn check_exnattrans<BE, BF>(
    bif_e: &BE,
    bif_f: &BF,
    ent: &ExNatTrans<BE, BF>,
    sampler: &Sampler<BE::Cat>,
    gen_elem: impl Fn(&ObjOf<BE>, &ObjOf<BE>, &mut rand_chacha::ChaCha8Rng) -> BE::Elem,
    seed: u64,
    cases: usize,
) -> Result<SquareReport>
where
    BE: Bifunctor,
    BF: Bifunctor,
{
    let name = format!("compat[{} : {} => {}]", ent.nt.name, ent.src.name, ent.dst.name);
    let _ = bif_e;
    let mut rng = rng_from(seed);
    for case in 0..cases {
        let a = sampler.obj(&mut rng);
        let c = sampler.obj(&mut rng);
        let alpha = gen_elem(&c, &a, &mut rng);
        let lhs = bif_f.act_left(&ent.nt.component_at(&a), &ent.src.gamma_at(&c, &a, &alpha))?;
        let rhs = bif_f.act_right(&ent.nt.component_at(&c), &ent.dst.gamma_at(&c, &a, &alpha))?;
        if !bif_f.elem_eq(&lhs, &rhs) {
            return Ok(SquareReport::failed_on_morphisms(
                &name,
                cases,
                seed,
                format!("case {case}: α={alpha:?} at (C={c:?}, A={a:?})"),
            ));
        }
    }
    Ok(SquareReport::passed(&name, cases, seed))
}

/// Checks that the `Γ` components are additive and natural in both
/// variables, on seeded samples.
pub fn check_exfunctor_laws<BE, BF>(
    bif_e: &BE,
    bif_f: &BF,
    exf: &ExFunctor<BE, BF>,
    sampler: &Sampler<BE::Cat>,
    gen_elem: impl Fn(&ObjOf<BE>, &ObjOf<BE>, &mut rand_chacha::ChaCha8Rng) -> BE::Elem,
    seed: u64,
    cases: usize,
) -> Result<LawReport>
where
    BE: Bifunctor,
    BF: Bifunctor,
{
    let name = format!("exfunctor-laws[{}]", exf.name);
    let mut rng = rng_from(seed);
    for case in 0..cases {
        let a = sampler.obj(&mut rng);
        let c = sampler.obj(&mut rng);
        let alpha = gen_elem(&c, &a, &mut rng);
        let alpha2 = gen_elem(&c, &a, &mut rng);

        let fail = |law: &str, detail: String| {
            Ok(LawReport::failed(&name, cases, seed, format!("case {case}: {law}: {detail}")))
        };

        // group homomorphism
        let lhs = exf.gamma_at(&c, &a, &bif_e.add_elem(&alpha, &alpha2)?);
        let rhs = bif_f.add_elem(&exf.gamma_at(&c, &a, &alpha), &exf.gamma_at(&c, &a, &alpha2))?;
        if !bif_f.elem_eq(&lhs, &rhs) {
            return fail("gamma-additive", format!("α={alpha:?} α'={alpha2:?}"));
        }

        // naturality in the covariant variable
        let b = sampler.obj(&mut rng);
        let m = sampler.hom(&mut rng, &a, &b);
        let lhs = exf.gamma_at(&c, &b, &bif_e.act_left(&m, &alpha)?);
        let rhs = bif_f.act_left(&exf.f.apply_mor(&m), &exf.gamma_at(&c, &a, &alpha))?;
        if !bif_f.elem_eq(&lhs, &rhs) {
            return fail("gamma-natural-covariant", format!("m={m:?} α={alpha:?}"));
        }

        // naturality in the contravariant variable
        let d = sampler.obj(&mut rng);
        let n = sampler.hom(&mut rng, &d, &c);
        let lhs = exf.gamma_at(&d, &a, &bif_e.act_right(&n, &alpha)?);
        let rhs = bif_f.act_right(&exf.f.apply_mor(&n), &exf.gamma_at(&c, &a, &alpha))?;
        if !bif_f.elem_eq(&lhs, &rhs) {
            return fail("gamma-natural-contravariant", format!("n={n:?} α={alpha:?}"));
        }
    }
    Ok(LawReport::passed(&name, cases, seed))
}

/// Lift of a pair to the completions: the underlying functor is the
/// completed functor, and the lifted `Γ` sends `(e_A, α, e_C)` to
/// `(F e_A, Γ(α), F e_C)`.
pub fn complete_exfunctor<BE, BF>(
    exf: &ExFunctor<BE, BF>,
) -> ExFunctor<TildeBifunctor<BE>, TildeBifunctor<BF>>
where
    BE: Bifunctor,
    BF: Bifunctor,
    BE::Cat: Clone,
    BF::Cat: Clone,
{
    let inner = exf.clone();
    ExFunctor::new(
        format!("IC({})", exf.name),
        complete_functor(&exf.f),
        move |c: &CompletedObject<ObjOf<BE>, MorOf<BE>>,
              a: &CompletedObject<ObjOf<BE>, MorOf<BE>>,
              x: &TildeExtension<MorOf<BE>, BE::Elem>| {
            TildeExtension {
                e_a: inner.f.apply_mor(&x.e_a),
                alpha: inner.gamma_at(&c.base, &a.base, &x.alpha),
                e_c: inner.f.apply_mor(&x.e_c),
            }
        },
    )
}

/// Lift of a compatible natural transformation to the completions.
pub fn complete_exnattrans<BE, BF>(
    bf_cat: &BF::Cat,
    ent: &ExNatTrans<BE, BF>,
) -> ExNatTrans<TildeBifunctor<BE>, TildeBifunctor<BF>>
where
    BE: Bifunctor,
    BF: Bifunctor,
    BE::Cat: Clone,
    BF::Cat: Clone,
{
    ExNatTrans {
        src: complete_exfunctor(&ent.src),
        dst: complete_exfunctor(&ent.dst),
        nt: complete_nattrans(bf_cat, &ent.nt),
    }
}

/// The induced functor between extension categories: `α -> Γ(α)` on
/// objects and `(a, c) -> (F a, F c)` on morphisms.
pub fn induced_ext_functor<BE, BF>(
    exf: &ExFunctor<BE, BF>,
) -> FunctorValue<ExtCat<BE>, ExtCat<BF>>
where
    BE: Bifunctor,
    BF: Bifunctor,
{
    let on_obj = {
        let exf = exf.clone();
        move |x: &ExtObjOf<BE>| ExtObject {
            a: exf.f.apply_obj(&x.a),
            c: exf.f.apply_obj(&x.c),
            alpha: exf.gamma_at(&x.c, &x.a, &x.alpha),
        }
    };
    let obj_for_mor = on_obj.clone();
    let exf_mor = exf.clone();
    FunctorValue::new(
        format!("Ext({})", exf.name),
        on_obj,
        move |m: &ExtMorOf<BE>| ExtMor {
            src: obj_for_mor(&m.src),
            dst: obj_for_mor(&m.dst),
            a: exf_mor.f.apply_mor(&m.a),
            c: exf_mor.f.apply_mor(&m.c),
        },
    )
}

/// The induced natural transformation between induced functors: the
/// component at `α ∈ E(C, A)` is the pair `(b_A, b_C)`.
pub fn induced_ext_nattrans<BE, BF>(
    ent: &ExNatTrans<BE, BF>,
) -> NatTransValue<ExtCat<BE>, ExtCat<BF>>
where
    BE: Bifunctor,
    BF: Bifunctor,
{
    let src_f = induced_ext_functor(&ent.src);
    let dst_f = induced_ext_functor(&ent.dst);
    let src_for_component = src_f.clone();
    let dst_for_component = dst_f.clone();
    let nt = ent.nt.clone();
    NatTransValue::new(
        format!("Ext({})", ent.nt.name),
        src_f,
        dst_f,
        move |x: &ExtObjOf<BE>| ExtMor {
            src: src_for_component.apply_obj(x),
            dst: dst_for_component.apply_obj(x),
            a: nt.component_at(&x.a),
            c: nt.component_at(&x.c),
        },
    )
}

/// Checks that the induced functor sends sampled conflations to
/// conflations, i.e. preserves split exactness of both components.
pub fn check_induced_functor_exactness<BE, BF>(
    ext_e: &ExtCat<BE>,
    ext_f: &ExtCat<BF>,
    exf: &ExFunctor<BE, BF>,
    gen_conflation: impl Fn(&mut rand_chacha::ChaCha8Rng) -> Result<(ExtMorOf<BE>, ExtMorOf<BE>)>,
    seed: u64,
    cases: usize,
) -> Result<LawReport>
where
    BE: Bifunctor,
    BF: Bifunctor,
    BE::Cat: MatrixBacked,
    BF::Cat: MatrixBacked,
{
    let name = format!("ext-functor-exact[{}]", exf.name);
    let mut rng = rng_from(seed);
    let functor = induced_ext_functor(exf);
    for case in 0..cases {
        let (m1, m2) = gen_conflation(&mut rng)?;
        if !crate::extensions::conflation_in_xe(ext_e, &m1, &m2)? {
            return Ok(LawReport::failed(
                &name,
                cases,
                seed,
                format!("case {case}: generator produced a non-conflation"),
            ));
        }
        let im1 = functor.apply_mor(&m1);
        let im2 = functor.apply_mor(&m2);
        if !crate::extensions::conflation_in_xe(ext_f, &im1, &im2)? {
            return Ok(LawReport::failed(
                &name,
                cases,
                seed,
                format!("case {case}: image of conflation left the exact structure: {m1:?}"),
            ));
        }
    }
    Ok(LawReport::passed(&name, cases, seed))
}

/// Random element generator for solvable bifunctors: a random linear
/// combination of the element basis.
pub fn rand_elem<B>(
    bif: &B,
    c: &ObjOf<B>,
    a: &ObjOf<B>,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> B::Elem
where
    B: SolvableBifunctor,
    B::Cat: MatrixBacked,
{
    let basis = bif.elem_basis(c, a).expect("element basis");
    let ring = bif.cat().ring();
    let mut acc = bif.zero_elem(c, a);
    for b in &basis {
        let s = crate::generate::rand_scalar(ring, rng);
        acc = bif
            .add_elem(&acc, &bif.scale_elem(&s, b).expect("scale"))
            .expect("element addition");
    }
    acc
}
