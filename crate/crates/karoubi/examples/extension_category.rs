//! The category of extensions of the Hom-bifunctor on Mat(R): objects are
//! matrices `α ∈ Hom(C, A)`, morphisms are pairs `(a, c)` with
//! `a α = β c`, and idempotent pairs split constructively from splittings
//! of their components.
//! `cargo run --example extension_category`

use karoubi::bifunctor::HomBifunctor;
use karoubi::cat::{Category, SplitWitness};
use karoubi::extensions::{hom_ext_dimension, split_ext_idempotent, ExtCat};
use karoubi::matcat::MatCat;
use karoubi::matrix::Matrix;
use karoubi::ring::Ring;

fn main() -> karoubi::Result<()> {
    let ring = Ring::prime_field(2)?;
    let ext = ExtCat::new(HomBifunctor::new(MatCat::new(ring)));

    // the identity extension on F2^2 and a morphism to the rank-one one
    let alpha = ext.object(2, 2, Matrix::identity(ring, 2))?;
    let beta = ext.object(1, 1, Matrix::identity(ring, 1))?;
    let a = Matrix::from_i64s(ring, &[&[1, 0]]);
    let m = ext.morphism(alpha.clone(), beta.clone(), a.clone(), a.clone())?;
    println!("({}, {}) is a morphism α -> β", m.a, m.c);

    // the idempotent pair (diag(1,0), diag(1,0)) on α splits through β
    let e = Matrix::from_i64s(ring, &[&[1, 0], &[0, 0]]);
    let w = SplitWitness {
        r: Matrix::from_i64s(ring, &[&[1, 0]]),
        s: Matrix::from_i64s(ring, &[&[1], &[0]]),
    };
    let (image, ru, sv) = split_ext_idempotent(&ext, &alpha, &e, &e, &w, &w)?;
    println!("image extension = {}", image.alpha);
    let back = ext.compose(&sv, &ru)?;
    println!("(s,v)(r,u) = ({}, {}) — the idempotent pair", back.a, back.c);
    let forth = ext.compose(&ru, &sv)?;
    println!(
        "(r,u)(s,v) = identity of the image: {}",
        ext.mor_eq(&forth, &ext.identity(&image))
    );

    // hom-space dimensions are computed by linear solving
    println!("dim Hom(α, α) = {}", hom_ext_dimension(&ext, &alpha, &alpha)?);
    let zero = ext.object(1, 1, Matrix::zero(ring, 1, 1))?;
    println!("dim Hom(0-ext, 0-ext) = {}", hom_ext_dimension(&ext, &zero, &zero)?);
    Ok(())
}
