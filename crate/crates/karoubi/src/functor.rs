//! Executable functor and natural-transformation values. Functors are
//! closures on object and morphism descriptors; equality of functors is
//! always pointwise on seeded finite samples.

use std::sync::Arc;

use crate::cat::Category;
use crate::error::Result;
use crate::laws::{rng_from, LawReport, Sampler, SquareReport};

pub struct FunctorValue<C: Category, D: Category> {
    pub name: String,
    #[allow(clippy::type_complexity)]
    obj_map: Arc<dyn Fn(&C::Obj) -> D::Obj + Send + Sync>,
    #[allow(clippy::type_complexity)]
    mor_map: Arc<dyn Fn(&C::Mor) -> D::Mor + Send + Sync>,
}

impl<C: Category, D: Category> Clone for FunctorValue<C, D> {
    fn clone(&self) -> Self {
        FunctorValue {
            name: self.name.clone(),
            obj_map: self.obj_map.clone(),
            mor_map: self.mor_map.clone(),
        }
    }
}

impl<C: Category, D: Category> FunctorValue<C, D> {
    pub fn new(
        name: impl Into<String>,
        obj_map: impl Fn(&C::Obj) -> D::Obj + Send + Sync + 'static,
        mor_map: impl Fn(&C::Mor) -> D::Mor + Send + Sync + 'static,
    ) -> FunctorValue<C, D> {
        FunctorValue { name: name.into(), obj_map: Arc::new(obj_map), mor_map: Arc::new(mor_map) }
    }

    pub fn apply_obj(&self, x: &C::Obj) -> D::Obj {
        (self.obj_map)(x)
    }

    pub fn apply_mor(&self, f: &C::Mor) -> D::Mor {
        (self.mor_map)(f)
    }
}

pub fn identity_functor<C: Category>() -> FunctorValue<C, C> {
    FunctorValue::new("Id", |x: &C::Obj| x.clone(), |f: &C::Mor| f.clone())
}

pub fn compose_functors<C: Category, D: Category, E: Category>(
    g: &FunctorValue<D, E>,
    f: &FunctorValue<C, D>,
) -> FunctorValue<C, E> {
    let (gc, fc) = (g.clone(), f.clone());
    let (gm, fm) = (g.clone(), f.clone());
    FunctorValue::new(
        format!("{}∘{}", g.name, f.name),
        move |x| gc.apply_obj(&fc.apply_obj(x)),
        move |m| gm.apply_mor(&fm.apply_mor(m)),
    )
}

pub struct NatTransValue<C: Category, D: Category> {
    pub name: String,
    pub src: FunctorValue<C, D>,
    pub dst: FunctorValue<C, D>,
    #[allow(clippy::type_complexity)]
    component: Arc<dyn Fn(&C::Obj) -> D::Mor + Send + Sync>,
}

impl<C: Category, D: Category> Clone for NatTransValue<C, D> {
    fn clone(&self) -> Self {
        NatTransValue {
            name: self.name.clone(),
            src: self.src.clone(),
            dst: self.dst.clone(),
            component: self.component.clone(),
        }
    }
}

impl<C: Category, D: Category> NatTransValue<C, D> {
    pub fn new(
        name: impl Into<String>,
        src: FunctorValue<C, D>,
        dst: FunctorValue<C, D>,
        component: impl Fn(&C::Obj) -> D::Mor + Send + Sync + 'static,
    ) -> NatTransValue<C, D> {
        NatTransValue { name: name.into(), src, dst, component: Arc::new(component) }
    }

    pub fn component_at(&self, x: &C::Obj) -> D::Mor {
        (self.component)(x)
    }
}

pub fn identity_nattrans<C: Category, D: Category + Clone + 'static>(
    dcat: &D,
    f: &FunctorValue<C, D>,
) -> NatTransValue<C, D> {
    let (d, fc) = (dcat.clone(), f.clone());
    NatTransValue::new(format!("id_{}", f.name), f.clone(), f.clone(), move |x| {
        d.identity(&fc.apply_obj(x))
    })
}

/// Vertical composition: `(b2 ∘v b1)_X = (b2)_X ∘ (b1)_X`.
pub fn vertical_compose<C: Category, D: Category + Clone + 'static>(
    dcat: &D,
    b2: &NatTransValue<C, D>,
    b1: &NatTransValue<C, D>,
) -> NatTransValue<C, D> {
    let d = dcat.clone();
    let (b2c, b1c) = (b2.clone(), b1.clone());
    NatTransValue::new(
        format!("{}∘v{}", b2.name, b1.name),
        b1.src.clone(),
        b2.dst.clone(),
        move |x| {
            d.compose(&b2c.component_at(x), &b1c.component_at(x))
                .expect("vertical composition of parallel components")
        },
    )
}

/// Horizontal composition: `(d ∘h b)_X = d_{G X} ∘ L(b_X)` for
/// `b: F => G` between functors `C -> D` and `d: L => M` between functors
/// `D -> E`.
pub fn horizontal_compose<C: Category, D: Category, E: Category + Clone + 'static>(
    ecat: &E,
    daleth: &NatTransValue<D, E>,
    beth: &NatTransValue<C, D>,
) -> NatTransValue<C, E> {
    let e = ecat.clone();
    let (dc, bc) = (daleth.clone(), beth.clone());
    NatTransValue::new(
        format!("{}∘h{}", daleth.name, beth.name),
        compose_functors(&daleth.src, &beth.src),
        compose_functors(&daleth.dst, &beth.dst),
        move |x| {
            let gx = bc.dst.apply_obj(x);
            let lbx = dc.src.apply_mor(&bc.component_at(x));
            e.compose(&dc.component_at(&gx), &lbx)
                .expect("horizontal composition shapes")
        },
    )
}

/// Pointwise equality of two parallel functors on a seeded sample of
/// objects and morphisms.
pub fn functors_agree<C: Category, D: Category>(
    dcat: &D,
    name: &str,
    f1: &FunctorValue<C, D>,
    f2: &FunctorValue<C, D>,
    sampler: &Sampler<C>,
    seed: u64,
    cases: usize,
) -> SquareReport {
    let mut rng = rng_from(seed);
    for case in 0..cases {
        let x = sampler.obj(&mut rng);
        if f1.apply_obj(&x) != f2.apply_obj(&x) {
            return SquareReport::failed_on_objects(
                name,
                cases,
                seed,
                format!("case {case}: object {x:?}: {} vs {}", f1.name, f2.name),
            );
        }
        let m = sampler.mor(&mut rng);
        if !dcat.mor_eq(&f1.apply_mor(&m), &f2.apply_mor(&m)) {
            return SquareReport::failed_on_morphisms(
                name,
                cases,
                seed,
                format!("case {case}: morphism {m:?}: {} vs {}", f1.name, f2.name),
            );
        }
    }
    SquareReport::passed(name, cases, seed)
}

/// Pointwise equality of two natural transformations (components compared
/// on sampled objects).
pub fn nattrans_agree<C: Category, D: Category>(
    dcat: &D,
    name: &str,
    n1: &NatTransValue<C, D>,
    n2: &NatTransValue<C, D>,
    sampler: &Sampler<C>,
    seed: u64,
    cases: usize,
) -> SquareReport {
    let mut rng = rng_from(seed);
    for case in 0..cases {
        let x = sampler.obj(&mut rng);
        if !dcat.mor_eq(&n1.component_at(&x), &n2.component_at(&x)) {
            return SquareReport::failed_on_morphisms(
                name,
                cases,
                seed,
                format!("case {case}: components differ at {x:?}: {} vs {}", n1.name, n2.name),
            );
        }
    }
    SquareReport::passed(name, cases, seed)
}

/// Checks that a functor preserves identities and composition on samples.
pub fn check_functoriality<C: Category, D: Category>(
    ccat: &C,
    dcat: &D,
    f: &FunctorValue<C, D>,
    sampler: &Sampler<C>,
    seed: u64,
    cases: usize,
) -> Result<LawReport> {
    let name = format!("functorial[{}]", f.name);
    let mut rng = rng_from(seed);
    for case in 0..cases {
        let x = sampler.obj(&mut rng);
        let y = sampler.obj(&mut rng);
        let z = sampler.obj(&mut rng);
        let m = sampler.hom(&mut rng, &x, &y);
        let n = sampler.hom(&mut rng, &y, &z);
        let id_img = f.apply_mor(&ccat.identity(&x));
        if !dcat.mor_eq(&id_img, &dcat.identity(&f.apply_obj(&x))) {
            return Ok(LawReport::failed(
                &name,
                cases,
                seed,
                format!("case {case}: identity at {x:?} not preserved"),
            ));
        }
        let lhs = f.apply_mor(&ccat.compose(&n, &m)?);
        let rhs = dcat.compose(&f.apply_mor(&n), &f.apply_mor(&m))?;
        if !dcat.mor_eq(&lhs, &rhs) {
            return Ok(LawReport::failed(
                &name,
                cases,
                seed,
                format!("case {case}: composition not preserved on m={m:?} n={n:?}"),
            ));
        }
    }
    Ok(LawReport::passed(&name, cases, seed))
}

/// Checks additivity of a functor between additive categories on samples.
pub fn check_additivity<C, D>(
    ccat: &C,
    dcat: &D,
    f: &FunctorValue<C, D>,
    sampler: &Sampler<C>,
    seed: u64,
    cases: usize,
) -> Result<LawReport>
where
    C: crate::cat::AdditiveCategory,
    D: crate::cat::AdditiveCategory,
{
    let name = format!("additive[{}]", f.name);
    let mut rng = rng_from(seed);
    for case in 0..cases {
        let x = sampler.obj(&mut rng);
        let y = sampler.obj(&mut rng);
        let m = sampler.hom(&mut rng, &x, &y);
        let n = sampler.hom(&mut rng, &x, &y);
        let lhs = f.apply_mor(&ccat.add_mor(&m, &n)?);
        let rhs = dcat.add_mor(&f.apply_mor(&m), &f.apply_mor(&n))?;
        if !dcat.mor_eq(&lhs, &rhs) {
            return Ok(LawReport::failed(
                &name,
                cases,
                seed,
                format!("case {case}: sum not preserved on m={m:?} n={n:?}"),
            ));
        }
    }
    Ok(LawReport::passed(&name, cases, seed))
}

/// Checks the naturality squares `G(f) ∘ b_X = b_Y ∘ F(f)` on samples.
pub fn check_naturality<C: Category, D: Category>(
    dcat: &D,
    nt: &NatTransValue<C, D>,
    sampler: &Sampler<C>,
    seed: u64,
    cases: usize,
) -> Result<LawReport> {
    let name = format!("natural[{}]", nt.name);
    let mut rng = rng_from(seed);
    for case in 0..cases {
        let x = sampler.obj(&mut rng);
        let y = sampler.obj(&mut rng);
        let m = sampler.hom(&mut rng, &x, &y);
        let lhs = dcat.compose(&nt.dst.apply_mor(&m), &nt.component_at(&x))?;
        let rhs = dcat.compose(&nt.component_at(&y), &nt.src.apply_mor(&m))?;
        if !dcat.mor_eq(&lhs, &rhs) {
            return Ok(LawReport::failed(
                &name,
                cases,
                seed,
                format!("case {case}: naturality fails at {m:?}"),
            ));
        }
    }
    Ok(LawReport::passed(&name, cases, seed))
}
