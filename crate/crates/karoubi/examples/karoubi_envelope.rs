//! The idempotent completion of a matrix category: objects are pairs
//! `(X, e)`, morphisms are triples `(e_Y, f, e_X)`, every idempotent
//! splits, and the additive laws hold on seeded samples.
//! `cargo run --example karoubi_envelope`

use karoubi::cat::{direct_sum, verify_split_witness, Category, SplitsIdempotents};
use karoubi::completion::Completion;
use karoubi::generate::completed_mat_sampler;
use karoubi::laws::check_additive_laws;
use karoubi::matcat::MatCat;
use karoubi::matrix::Matrix;
use karoubi::ring::Ring;

fn main() -> karoubi::Result<()> {
    let ring = Ring::prime_field(2)?;
    let cat = Completion::new(MatCat::new(ring));

    // an object (F2^2, diag(1,0)) and its identity morphism (e, e, e)
    let e = Matrix::from_i64s(ring, &[&[1, 0], &[0, 0]]);
    let x = cat.object(2, e.clone())?;
    let id = cat.identity(&x);
    println!("identity of (2, {e}) is the triple ({}, {}, {})", id.e_target, id.f, id.e_source);

    // biproduct: (X, e) ⊕ (Y, e') = (X ⊕ Y, e ⊕ e')
    let y = cat.include_obj(&1);
    let b = direct_sum(&cat, &x, &y);
    println!("(2, e) ⊕ (1, id) = ({}, {})", b.object.base, b.object.e);

    // idempotents in the completion split through the middle component
    let m = cat.morphism(e.clone(), e.clone(), e)?;
    let w = cat.split_idempotent(&m)?;
    println!("splitting verifies: {}", verify_split_witness(&cat, &m, &w)?);

    // the additive laws hold exactly on a seeded sample
    let report = check_additive_laws(&cat, &completed_mat_sampler(ring, 4), 1, 200)?;
    println!("{}: pass = {} over {} cases", report.law, report.pass, report.cases);
    Ok(())
}
