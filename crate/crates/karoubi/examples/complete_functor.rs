//! Lifting functors and natural transformations to idempotent completions:
//! `F` becomes `(X, e) -> (F X, F e)` and a transformation `b` gets the
//! component `(G e, (G e) b_X (F e), F e)`.
//! `cargo run --example complete_functor`

use karoubi::completion::{complete_functor, complete_nattrans, Completion};
use karoubi::functor::check_naturality;
use karoubi::generate::completed_mat_sampler;
use karoubi::matcat::MatCat;
use karoubi::matrix::Matrix;
use karoubi::registry::{registry_exnattrans, scaling_functor};
use karoubi::ring::Ring;

fn main() -> karoubi::Result<()> {
    let ring = Ring::prime_field(2)?;
    let base = MatCat::new(ring);
    let completed = Completion::new(base);

    let doubling = scaling_functor(ring, 2);
    let lifted = complete_functor(&doubling);
    let e = Matrix::from_i64s(ring, &[&[1, 0], &[0, 0]]);
    let x = completed.object(2, e.clone())?;
    let img = lifted.apply_obj(&x);
    println!("doubling of (2, {e}) = ({}, {})", img.base, img.e);

    // the first-inclusion transformation Id => doubling, lifted
    let nts = registry_exnattrans(ring);
    let first_inclusion = &nts[3].nt;
    let lifted_nt = complete_nattrans(&base, first_inclusion);
    let comp = lifted_nt.component_at(&x);
    println!(
        "lifted component at (2, e): ({}, {}, {})",
        comp.e_target, comp.f, comp.e_source
    );

    // naturality of the lifted transformation, checked pointwise
    let report = check_naturality(
        &completed,
        &lifted_nt,
        &completed_mat_sampler(ring, 4),
        7,
        200,
    )?;
    println!("{}: pass = {} over {} cases", report.law, report.pass, report.cases);
    Ok(())
}
