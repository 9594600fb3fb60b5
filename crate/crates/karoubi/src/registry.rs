//! A fixed registry of executable functor pairs and compatible natural
//! transformations over the Hom-bifunctor on Mat(R). Additive functors
//! between matrix categories are exactly the block-embedding family
//! `n -> k n`, `M -> M ⊕ ... ⊕ M`, so the registry covers that family for
//! small `k` plus adversarial variants (zero functor, zero gamma, scaled
//! gamma).

use crate::bifunctor::HomBifunctor;
use crate::exfunctor::{ExFunctor, ExNatTrans};
use crate::functor::{FunctorValue, NatTransValue};
use crate::matcat::MatCat;
use crate::matrix::Matrix;
use crate::ring::Ring;

pub type HomExFunctor = ExFunctor<HomBifunctor, HomBifunctor>;
pub type HomExNatTrans = ExNatTrans<HomBifunctor, HomBifunctor>;

/// `k`-fold block-diagonal repetition of a matrix; `k = 0` gives the empty
/// matrix of shape 0x0.
fn block_power(ring: Ring, m: &Matrix, k: usize) -> Matrix {
    let mut acc = Matrix::zero(ring, 0, 0);
    for _ in 0..k {
        acc = acc.block_diag(m).unwrap();
    }
    acc
}

/// The additive functor `n -> k n`, `M -> M ⊕ ... ⊕ M` on Mat(R).
pub fn scaling_functor(ring: Ring, k: usize) -> FunctorValue<MatCat, MatCat> {
    FunctorValue::new(
        match k {
            0 => "zero-functor".to_string(),
            1 => "Id".to_string(),
            2 => "doubling".to_string(),
            3 => "tripling".to_string(),
            _ => format!("{k}-fold"),
        },
        move |n: &usize| k * n,
        move |m: &Matrix| block_power(ring, m, k),
    )
}

/// The pair with `F` the `k`-fold functor and `Γ(α) = α ⊕ ... ⊕ α`.
pub fn scaling_exfunctor(ring: Ring, k: usize) -> HomExFunctor {
    let f = scaling_functor(ring, k);
    let name = f.name.clone();
    ExFunctor::new(name, f, move |_c, _a, alpha: &Matrix| block_power(ring, alpha, k))
}

pub fn identity_exfunctor_hom(ring: Ring) -> HomExFunctor {
    scaling_exfunctor(ring, 1)
}

pub fn doubling_exfunctor(ring: Ring) -> HomExFunctor {
    scaling_exfunctor(ring, 2)
}

/// Doubling on objects with the zero family as `Γ`; a valid pair that
/// loses all extension data.
pub fn zero_gamma_doubling(ring: Ring) -> HomExFunctor {
    let f = scaling_functor(ring, 2);
    ExFunctor::new("doubling-zero-gamma", f, move |c: &usize, a: &usize, _alpha: &Matrix| {
        Matrix::zero(ring, 2 * a, 2 * c)
    })
}

/// Identity on objects with `Γ(α) = λ α` for `λ = 2` in the ring.
pub fn scaled_gamma_identity(ring: Ring) -> HomExFunctor {
    let f = scaling_functor(ring, 1);
    let two = ring.from_i64(2);
    ExFunctor::new("scaled-gamma", f, move |_c, _a, alpha: &Matrix| alpha.scale(&two).unwrap())
}

/// Sign flip of the `Γ` part, used as a mutant in naturality-square tests.
pub fn negate_gamma(exf: &HomExFunctor, ring: Ring) -> HomExFunctor {
    let inner = exf.clone();
    let _ = ring;
    ExFunctor::new(format!("{}-negated", exf.name), exf.f.clone(), move |c, a, alpha| {
        let v = inner.gamma_at(c, a, alpha);
        v.neg()
    })
}

/// All registry pairs for one ring.
pub fn registry_exfunctors(ring: Ring) -> Vec<HomExFunctor> {
    vec![
        identity_exfunctor_hom(ring),
        doubling_exfunctor(ring),
        scaling_exfunctor(ring, 3),
        scaling_exfunctor(ring, 0),
        zero_gamma_doubling(ring),
        scaled_gamma_identity(ring),
    ]
}

fn nat(
    name: &str,
    src: HomExFunctor,
    dst: HomExFunctor,
    component: impl Fn(&usize) -> Matrix + Send + Sync + 'static,
) -> HomExNatTrans {
    let nt = NatTransValue::new(name, src.f.clone(), dst.f.clone(), component);
    ExNatTrans { src, dst, nt }
}

/// All registry natural transformations for one ring: identities, the zero
/// transformation, the two canonical comparisons from the identity to the
/// doubling (first inclusion and diagonal), and the swap on the doubling.
pub fn registry_exnattrans(ring: Ring) -> Vec<HomExNatTrans> {
    let idf = identity_exfunctor_hom(ring);
    let dbl = doubling_exfunctor(ring);
    let mut out = Vec::new();

    let idc = idf.clone();
    out.push(nat("id", idc.clone(), idc, move |n: &usize| Matrix::identity(ring, *n)));

    let dblc = dbl.clone();
    out.push(nat("id-doubling", dblc.clone(), dblc, move |n: &usize| {
        Matrix::identity(ring, 2 * n)
    }));

    out.push(nat("zero", idf.clone(), dbl.clone(), move |n: &usize| {
        Matrix::zero(ring, 2 * n, *n)
    }));

    out.push(nat("first-inclusion", idf.clone(), dbl.clone(), move |n: &usize| {
        let id = Matrix::identity(ring, *n);
        id.vstack(&Matrix::zero(ring, *n, *n)).unwrap()
    }));

    out.push(nat("diagonal", idf.clone(), dbl.clone(), move |n: &usize| {
        let id = Matrix::identity(ring, *n);
        id.vstack(&id).unwrap()
    }));

    out.push(nat("swap", dbl.clone(), dbl.clone(), move |n: &usize| {
        let id = Matrix::identity(ring, *n);
        let z = Matrix::zero(ring, *n, *n);
        let top = z.hstack(&id).unwrap();
        let bottom = id.hstack(&z).unwrap();
        top.vstack(&bottom).unwrap()
    }));

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bifunctor::Bifunctor;
    use crate::exfunctor::{check_exfunctor_laws, check_exnattrans};
    use crate::generate::{mat_sampler, rand_matrix};
    use crate::matcat::MatCat;

    #[test]
    fn registry_pairs_satisfy_the_laws() {
        for ring in [Ring::prime_field(2).unwrap(), Ring::prime_field(5).unwrap(), Ring::Rationals]
        {
            let bif = HomBifunctor::new(MatCat::new(ring));
            let sampler = mat_sampler(ring, 3);
            for exf in registry_exfunctors(ring) {
                let report = check_exfunctor_laws(
                    &bif,
                    &bif,
                    &exf,
                    &sampler,
                    |c, a, rng| rand_matrix(ring, *a, *c, rng),
                    17,
                    60,
                )
                .unwrap();
                assert!(report.pass, "{}: {:?}", exf.name, report.counterexample);
            }
        }
    }

    #[test]
    fn registry_transformations_are_compatible() {
        let ring = Ring::prime_field(5).unwrap();
        let bif = HomBifunctor::new(MatCat::new(ring));
        let sampler = mat_sampler(ring, 3);
        for ent in registry_exnattrans(ring) {
            let report = check_exnattrans(
                &bif,
                &bif,
                &ent,
                &sampler,
                |c, a, rng| rand_matrix(ring, *a, *c, rng),
                23,
                60,
            )
            .unwrap();
            assert!(report.pass, "{}: {:?}", ent.nt.name, report.counterexample);
        }
    }

    #[test]
    fn negated_gamma_is_still_a_valid_pair_but_differs() {
        let ring = Ring::prime_field(5).unwrap();
        let bif = HomBifunctor::new(MatCat::new(ring));
        let d = doubling_exfunctor(ring);
        let neg = negate_gamma(&d, ring);
        let alpha = Matrix::identity(ring, 1);
        let x = d.gamma_at(&1, &1, &alpha);
        let y = neg.gamma_at(&1, &1, &alpha);
        assert_ne!(x, y);
        assert_eq!(y, x.neg());
        let _ = bif.cat();
    }
}
