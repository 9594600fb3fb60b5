//! The weak idempotent completion: membership witnesses for complements,
//! the restricted equivalences, componentwise cokernels of sections, and
//! the final commuting diagram.
//! `cargo run --example weak_completion`

use karoubi::bifunctor::{HatBifunctor, HomBifunctor, TildeBifunctor};
use karoubi::completion::{wic_membership, Completion};
use karoubi::equivalence::{final_diagram_check, shin_weak_membership};
use karoubi::extensions::ExtCat;
use karoubi::generate::{ext_hom_sampler, hat_ext_sampler, tilde_ext_sampler};
use karoubi::laws::Sampler;
use karoubi::matcat::MatCat;
use karoubi::matrix::Matrix;
use karoubi::ring::Ring;

fn main() -> karoubi::Result<()> {
    let ring = Ring::prime_field(2)?;
    let bif = HomBifunctor::new(MatCat::new(ring));
    let completed = Completion::new(MatCat::new(ring));

    // membership: the complement of the idempotent splits
    let e = Matrix::from_i64s(ring, &[&[1, 0], &[0, 0]]);
    let obj = completed.object(2, e)?;
    let w = wic_membership(&completed, &obj)?;
    println!(
        "(2, diag(1,0)) lies in the weak completion; complement splits with rank {}",
        w.complement.r.rows()
    );

    // shin restricted to the weak completion produces membership witnesses
    let tilde = TildeBifunctor::new(bif);
    let hat = HatBifunctor::new(bif);
    let ext = ExtCat::new(bif);
    let tsampler = tilde_ext_sampler(ring, 3);
    let mut rng = karoubi::laws::rng_from(1);
    let x = tsampler.obj(&mut rng);
    let (sx, witness) = shin_weak_membership(&ext, &x)?;
    println!(
        "shin image ({} endpoints) has a split complement through ({}, {})",
        sx.base.alpha,
        witness.r.dst.a,
        witness.r.dst.c
    );

    // the final diagram commutes pointwise
    let esampler: Sampler<ExtCat<HomBifunctor>> = ext_hom_sampler(ring, 3);
    let hsampler = hat_ext_sampler(ring, 3);
    let report = final_diagram_check(&tilde, &hat, &esampler, &hsampler, 1, 100, "final-diagram")?;
    println!("final diagram: pass = {} over {} cases", report.pass, report.cases);
    Ok(())
}
