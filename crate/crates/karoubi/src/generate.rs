//! Seeded, deterministic random instance data: matrices, idempotents,
//! completed objects, extensions, lifted extensions and conflations.
//! Idempotents are generated as `P * diag(1,..,1,0,..,0) * P^{-1}` for a
//! random invertible `P`, so idempotency holds exactly by construction;
//! lifted extensions are produced by projecting an arbitrary element with
//! the endpoint idempotents, so the compatibility equations hold by
//! construction as well.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bifunctor::{Bifunctor, HomBifunctor, TildeBifunctor, TildeExtension};
use crate::cat::{Category, MatrixBacked};
use crate::completion::{CompletedMorphism, CompletedObject, Completion};
use crate::error::Result;
use crate::extensions::{ExtCat, ExtMorOf, ExtObjOf, ExtObject};
use crate::laws::Sampler;
use crate::matcat::MatCat;
use crate::matrix::Matrix;
use crate::ring::Ring;

/// Iterator over values drawn from a seeded generator closure.
pub fn stream<T, F: FnMut(&mut ChaCha8Rng) -> T>(seed: u64, mut f: F) -> impl Iterator<Item = T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    std::iter::from_fn(move || Some(f(&mut rng)))
}

pub fn rand_scalar(ring: Ring, rng: &mut ChaCha8Rng) -> crate::ring::Scalar {
    match ring {
        Ring::PrimeField(p) => ring.from_i64(rng.random_range(0..p) as i64),
        _ => ring.from_i64(rng.random_range(-3..=3)),
    }
}

pub fn rand_matrix(ring: Ring, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut m = Matrix::zero(ring, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, rand_scalar(ring, rng));
        }
    }
    m
}

/// Random invertible matrix, by rejection sampling.
pub fn rand_invertible(ring: Ring, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let m = rand_matrix(ring, n, n, rng);
        if m.inverse().expect("field ring").is_some() {
            return m;
        }
    }
}

/// Random idempotent as a conjugated coordinate projection.
pub fn rand_idempotent(ring: Ring, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let k = rng.random_range(0..=n);
    let p = rand_invertible(ring, n, rng);
    let p_inv = p.inverse().unwrap().unwrap();
    let mut d = Matrix::zero(ring, n, n);
    for i in 0..k {
        d.set(i, i, ring.one());
    }
    p.mul(&d).unwrap().mul(&p_inv).unwrap()
}

/// Sampler for Mat(R) with dimensions up to `max_dim`.
pub fn mat_sampler(ring: Ring, max_dim: usize) -> Sampler<MatCat> {
    Sampler::new(
        move |rng| rng.random_range(0..=max_dim),
        move |rng, x, y| rand_matrix(ring, *y, *x, rng),
    )
}

pub fn rand_completed_object(
    ring: Ring,
    max_dim: usize,
    rng: &mut ChaCha8Rng,
) -> CompletedObject<usize, Matrix> {
    let n = rng.random_range(0..=max_dim);
    CompletedObject { base: n, e: rand_idempotent(ring, n, rng) }
}

/// Sampler for the idempotent completion of Mat(R): morphisms are two-sided
/// projections of random base matrices, so the triple condition holds by
/// construction.
pub fn completed_mat_sampler(ring: Ring, max_dim: usize) -> Sampler<Completion<MatCat>> {
    Sampler::new(
        move |rng| rand_completed_object(ring, max_dim, rng),
        move |rng: &mut ChaCha8Rng,
              x: &CompletedObject<usize, Matrix>,
              y: &CompletedObject<usize, Matrix>| {
            let raw = rand_matrix(ring, y.base, x.base, rng);
            let f = y.e.mul(&raw).unwrap().mul(&x.e).unwrap();
            CompletedMorphism { e_target: y.e.clone(), f, e_source: x.e.clone() }
        },
    )
}

/// Random idempotent endomorphism of a completed object `(X, e)`, of the
/// form `(e, a, e)` with `a` an idempotent below `e`.
pub fn rand_completed_idempotent(
    ring: Ring,
    obj: &CompletedObject<usize, Matrix>,
    rng: &mut ChaCha8Rng,
) -> CompletedMorphism<Matrix> {
    // conjugate a sub-projection inside the image of e
    let w = crate::matrix::rank_factorize_idempotent(&obj.e).expect("valid idempotent");
    let k = w.r.rows();
    let j = rng.random_range(0..=k);
    let mut d = Matrix::zero(ring, k, k);
    for i in 0..j {
        d.set(i, i, ring.one());
    }
    let t = rand_invertible(ring, k, rng);
    let t_inv = t.inverse().unwrap().unwrap();
    let inner = t.mul(&d).unwrap().mul(&t_inv).unwrap();
    let a = w.s.mul(&inner).unwrap().mul(&w.r).unwrap();
    CompletedMorphism { e_target: obj.e.clone(), f: a, e_source: obj.e.clone() }
}

/// Random morphism via the hom-space basis: a random linear combination.
pub fn rand_hom<C: MatrixBacked>(
    cat: &C,
    x: &C::Obj,
    y: &C::Obj,
    rng: &mut ChaCha8Rng,
) -> Result<C::Mor> {
    let basis = cat.hom_basis(x, y)?;
    let mut acc = cat.zero_mor(x, y);
    for b in &basis {
        let s = rand_scalar(cat.ring(), rng);
        acc = cat.add_mor(&acc, &cat.scale_mor(&s, b)?)?;
    }
    Ok(acc)
}

/// Random automorphism of an object, by rejection sampling over the
/// endomorphism space; falls back to the identity if none is found. The
/// endomorphism basis is computed once and shared with the inverse search.
pub fn rand_aut<C: MatrixBacked>(cat: &C, x: &C::Obj, rng: &mut ChaCha8Rng) -> Result<C::Mor> {
    Ok(rand_aut_with_inverse(cat, x, rng)?.0)
}

/// As [`rand_aut`], returning the automorphism together with its inverse.
pub fn rand_aut_with_inverse<C: MatrixBacked>(
    cat: &C,
    x: &C::Obj,
    rng: &mut ChaCha8Rng,
) -> Result<(C::Mor, C::Mor)> {
    let ring = cat.ring();
    let basis = cat.hom_basis(x, x)?;
    for _ in 0..60 {
        let mut m = cat.zero_mor(x, x);
        for b in &basis {
            let s = rand_scalar(ring, rng);
            m = cat.add_mor(&m, &cat.scale_mor(&s, b)?)?;
        }
        if let Some(inv) = crate::exactness::find_inverse_with_basis(cat, &m, &basis)? {
            return Ok((m, inv));
        }
    }
    let id = cat.identity(x);
    Ok((id.clone(), id))
}

/// Sampler for the extension category of the Hom-bifunctor on Mat(R).
pub fn ext_hom_sampler(ring: Ring, max_dim: usize) -> Sampler<ExtCat<HomBifunctor>> {
    let cat = ExtCat::new(HomBifunctor::new(MatCat::new(ring)));
    Sampler::new(
        move |rng| rand_ext_object(ring, max_dim, rng),
        move |rng, x, y| rand_hom(&cat, x, y, rng).expect("ext hom sampling"),
    )
}

pub fn rand_ext_object(ring: Ring, max_dim: usize, rng: &mut ChaCha8Rng) -> ExtObjOf<HomBifunctor> {
    let a = rng.random_range(0..=max_dim);
    let c = rng.random_range(0..=max_dim);
    ExtObject { a, c, alpha: rand_matrix(ring, a, c, rng) }
}

/// Random element of the lifted bifunctor over given completed endpoints:
/// any element projected two-sidedly with the endpoint idempotents.
pub fn rand_tilde_extension(
    tilde: &TildeBifunctor<HomBifunctor>,
    c_obj: &CompletedObject<usize, Matrix>,
    a_obj: &CompletedObject<usize, Matrix>,
    rng: &mut ChaCha8Rng,
) -> TildeExtension<Matrix, Matrix> {
    let ring = tilde.base.cat().ring();
    let raw = rand_matrix(ring, a_obj.base, c_obj.base, rng);
    let projected = tilde
        .base
        .act_left(&a_obj.e, &tilde.base.act_right(&c_obj.e, &raw).unwrap())
        .unwrap();
    TildeExtension { e_a: a_obj.e.clone(), alpha: projected, e_c: c_obj.e.clone() }
}

/// Sampler for the extension category of the lifted bifunctor.
pub fn tilde_ext_sampler(
    ring: Ring,
    max_dim: usize,
) -> Sampler<ExtCat<TildeBifunctor<HomBifunctor>>> {
    let tilde = TildeBifunctor::new(HomBifunctor::new(MatCat::new(ring)));
    let tilde_for_obj = tilde.clone();
    let cat = ExtCat::new(tilde);
    Sampler::new(
        move |rng| {
            let a_obj = rand_completed_object(ring, max_dim, rng);
            let c_obj = rand_completed_object(ring, max_dim, rng);
            let alpha = rand_tilde_extension(&tilde_for_obj, &c_obj, &a_obj, rng);
            ExtObject { a: a_obj, c: c_obj, alpha }
        },
        move |rng, x, y| rand_hom(&cat, x, y, rng).expect("tilde ext hom sampling"),
    )
}

/// Sampler for the extension category of the restriction of the lifted
/// bifunctor to the weak completion. Over a field every completed object is
/// a member, so the data coincides with the lifted sampler.
pub fn hat_ext_sampler(
    ring: Ring,
    max_dim: usize,
) -> Sampler<ExtCat<crate::bifunctor::HatBifunctor<HomBifunctor>>> {
    let hat = crate::bifunctor::HatBifunctor::new(HomBifunctor::new(MatCat::new(ring)));
    let tilde_for_obj = hat.tilde.clone();
    let cat = ExtCat::new(hat);
    Sampler::new(
        move |rng| {
            let a_obj = rand_completed_object(ring, max_dim, rng);
            let c_obj = rand_completed_object(ring, max_dim, rng);
            let alpha = rand_tilde_extension(&tilde_for_obj, &c_obj, &a_obj, rng);
            ExtObject { a: a_obj, c: c_obj, alpha }
        },
        move |rng, x, y| rand_hom(&cat, x, y, rng).expect("hat ext hom sampling"),
    )
}

/// Random object of the idempotent completion of the extension category:
/// an extension equipped with an idempotent pair `(e_A, e_C)` acting on it.
/// The extension is assembled as `(e_A)_E (e_C)^E α0 + (1-e_A)_E (1-e_C)^E α0`,
/// which makes the pair an endomorphism by construction.
pub fn rand_completed_ext_object(
    ring: Ring,
    max_dim: usize,
    rng: &mut ChaCha8Rng,
) -> CompletedObject<ExtObjOf<HomBifunctor>, ExtMorOf<HomBifunctor>> {
    let a = rng.random_range(0..=max_dim);
    let c = rng.random_range(0..=max_dim);
    let e_a = rand_idempotent(ring, a, rng);
    let e_c = rand_idempotent(ring, c, rng);
    let raw = rand_matrix(ring, a, c, rng);
    let id_a = Matrix::identity(ring, a);
    let id_c = Matrix::identity(ring, c);
    let co_a = id_a.sub(&e_a).unwrap();
    let co_c = id_c.sub(&e_c).unwrap();
    let alpha = e_a
        .mul(&raw)
        .unwrap()
        .mul(&e_c)
        .unwrap()
        .add(&co_a.mul(&raw).unwrap().mul(&co_c).unwrap())
        .unwrap();
    let base = ExtObject { a, c, alpha };
    let pair = crate::extensions::ExtMor {
        src: base.clone(),
        dst: base.clone(),
        a: e_a,
        c: e_c,
    };
    CompletedObject { base, e: pair }
}

/// Sampler for the idempotent completion of the extension category.
pub fn completed_ext_sampler(
    ring: Ring,
    max_dim: usize,
) -> Sampler<Completion<ExtCat<HomBifunctor>>> {
    let cat = Completion::new(ExtCat::new(HomBifunctor::new(MatCat::new(ring))));
    type CExtObj = CompletedObject<ExtObjOf<HomBifunctor>, ExtMorOf<HomBifunctor>>;
    Sampler::new(
        move |rng| rand_completed_ext_object(ring, max_dim, rng),
        move |rng: &mut ChaCha8Rng, x: &CExtObj, y: &CExtObj| {
            let raw = rand_hom(&cat.base, &x.base, &y.base, rng).expect("ext hom sampling");
            let f = cat
                .base
                .compose(&y.e, &cat.base.compose(&raw, &x.e).expect("projection"))
                .expect("projection");
            CompletedMorphism { e_target: y.e.clone(), f, e_source: x.e.clone() }
        },
    )
}

/// A conflation with randomized maps: the canonical biproduct pair
/// `x -> x ⊕ z -> z` conjugated by random automorphisms of all three
/// objects. Works in any matrix-backed additive category, so it produces
/// members of the split exact structure at every level (base extension
/// categories, lifted extension categories, and their completions).
pub fn rand_twisted_conflation<C: MatrixBacked>(
    cat: &C,
    x: &C::Obj,
    z: &C::Obj,
    rng: &mut ChaCha8Rng,
) -> Result<(C::Mor, C::Mor)> {
    let bp = cat.biproduct(x, z);
    let ax = rand_aut(cat, x, rng)?;
    let az = rand_aut(cat, z, rng)?;
    let (am, am_inv) = rand_aut_with_inverse(cat, &bp.object, rng)?;
    let m1 = cat.compose(&am, &cat.compose(&bp.inj1, &ax)?)?;
    let m2 = cat.compose(&az, &cat.compose(&bp.proj2, &am_inv)?)?;
    Ok((m1, m2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactness::decide_split_exact;
    use crate::laws::rng_from;

    #[test]
    fn idempotents_by_construction() {
        let ring = Ring::prime_field(5).unwrap();
        let mut rng = rng_from(0);
        for _ in 0..50 {
            let n = rng.random_range(0..=4);
            let e = rand_idempotent(ring, n, &mut rng);
            assert!(e.is_idempotent().unwrap());
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let ring = Ring::prime_field(2).unwrap();
        let a: Vec<Matrix> = stream(0, |rng| rand_idempotent(ring, 2, rng)).take(5).collect();
        let b: Vec<Matrix> = stream(0, |rng| rand_idempotent(ring, 2, rng)).take(5).collect();
        assert_eq!(a, b);
        let empty: Vec<Matrix> = stream(0, |rng| rand_idempotent(ring, 2, rng)).take(0).collect();
        assert!(empty.is_empty());
    }

    #[test]
    fn tilde_elements_satisfy_compatibility() {
        let ring = Ring::prime_field(2).unwrap();
        let tilde = TildeBifunctor::new(HomBifunctor::new(MatCat::new(ring)));
        let mut rng = rng_from(3);
        for _ in 0..40 {
            let a_obj = rand_completed_object(ring, 3, &mut rng);
            let c_obj = rand_completed_object(ring, 3, &mut rng);
            let x = rand_tilde_extension(&tilde, &c_obj, &a_obj, &mut rng);
            assert!(tilde.is_element(&c_obj, &a_obj, &x));
        }
    }

    #[test]
    fn completed_ext_objects_are_valid() {
        let ring = Ring::prime_field(5).unwrap();
        let ext = ExtCat::new(HomBifunctor::new(MatCat::new(ring)));
        let mut rng = rng_from(9);
        for _ in 0..40 {
            let obj = rand_completed_ext_object(ring, 3, &mut rng);
            assert!(ext
                .is_ext_morphism(&obj.base, &obj.base, &obj.e.a, &obj.e.c)
                .unwrap());
            assert!(crate::cat::is_idempotent(&ext, &obj.e).unwrap());
        }
    }

    #[test]
    fn twisted_conflations_are_split_exact() {
        let ring = Ring::prime_field(2).unwrap();
        let cat = MatCat::new(ring);
        let mut rng = rng_from(5);
        for _ in 0..20 {
            let x = rng.random_range(0..=3);
            let z = rng.random_range(0..=3);
            let (m1, m2) = rand_twisted_conflation(&cat, &x, &z, &mut rng).unwrap();
            assert!(decide_split_exact(&cat, &m1, &m2).unwrap());
        }
    }
}
