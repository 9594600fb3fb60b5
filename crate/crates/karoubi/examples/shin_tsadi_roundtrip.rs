//! The equivalence between the extension category of the completion and
//! the completion of the extension category: shin and tsadi compose to the
//! identity on the nose in one direction, and mem realizes the natural
//! isomorphism in the other.
//! `cargo run --example shin_tsadi_roundtrip`

use karoubi::bifunctor::{HomBifunctor, TildeBifunctor};
use karoubi::cat::{AdditiveCategory, Category};
use karoubi::completion::Completion;
use karoubi::equivalence::{mem_component, mem_inverse, roundtrip_check, shin, tsadi};
use karoubi::extensions::{ExtCat, ExtObject};
use karoubi::generate::tilde_ext_sampler;
use karoubi::matcat::MatCat;
use karoubi::matrix::Matrix;
use karoubi::ring::Ring;

type Tilde = TildeBifunctor<HomBifunctor>;

fn main() -> karoubi::Result<()> {
    let ring = Ring::prime_field(2)?;
    let bif = HomBifunctor::new(MatCat::new(ring));
    let tilde = TildeBifunctor::new(bif);

    // a lifted extension over the idempotent diag(1,0)
    let e = Matrix::from_i64s(ring, &[&[1, 0], &[0, 0]]);
    let completed = tilde.completed_cat().clone();
    let obj = completed.object(2, e.clone())?;
    let x = ExtObject {
        a: obj.clone(),
        c: obj,
        alpha: tilde.element(e.clone(), e.clone(), e)?,
    };

    let shin_f = shin::<Tilde, HomBifunctor>(&tilde);
    let tsadi_f = tsadi::<Tilde, HomBifunctor>(&tilde, &bif);
    let image = shin_f.apply_obj(&x);
    println!("shin image: extension {} with idempotent pair ({}, {})", image.base.alpha, image.e.a, image.e.c);
    let back = tsadi_f.apply_obj(&image);
    println!("tsadi(shin(x)) == x : {}", back == x);

    // the other composite is only naturally isomorphic: mem witnesses it
    let ext = ExtCat::new(bif);
    let cext = Completion::new(ext.clone());
    let alpha = ext.object(1, 1, Matrix::identity(ring, 1))?;
    let zero_pair = ext.zero_mor(&alpha, &alpha);
    let twisted = karoubi::completion::CompletedObject { base: alpha, e: zero_pair };
    let m = mem_component(&bif, &twisted);
    let m_inv = mem_inverse(&bif, &twisted);
    println!(
        "mem at (α, (0,0)) is an isomorphism: {}",
        cext.mor_eq(&cext.compose(&m_inv, &m)?, &cext.identity(&twisted))
    );

    // and pointwise on a seeded sample the strict direction is exact
    let report = roundtrip_check(&tilde, &bif, &tilde_ext_sampler(ring, 4), 1, 500, "roundtrip");
    println!("{}: pass = {} over {} cases", report.square, report.pass, report.cases);
    Ok(())
}
