//! Splitting idempotent matrices by rank factorization:
//! `cargo run --example split_idempotent`

use karoubi::cat::{verify_split_witness, SplitWitness};
use karoubi::matcat::MatCat;
use karoubi::matrix::{rank_factorize_idempotent, Matrix};
use karoubi::ring::Ring;

fn main() -> karoubi::Result<()> {
    let f2 = Ring::prime_field(2)?;
    let e = Matrix::from_i64s(f2, &[&[1, 1], &[0, 0]]);
    println!("e = {e} over {}", f2.name());
    println!("e idempotent: {}", e.is_idempotent()?);

    let SplitWitness { r, s } = rank_factorize_idempotent(&e)?;
    println!("r = {r}   (projection onto the image)");
    println!("s = {s}   (pivot-column basis of the image)");
    println!("s*r = {}", s.mul(&r)?);
    println!("r*s = {}", r.mul(&s)?);
    let cat = MatCat::new(f2);
    println!(
        "witness verifies: {}",
        verify_split_witness(&cat, &e, &SplitWitness { r, s })?
    );

    // the zero matrix splits through the zero object: empty matrices are
    // first-class values
    let q = Ring::rationals();
    let z = Matrix::zero(q, 3, 3);
    let w = rank_factorize_idempotent(&z)?;
    println!(
        "zero 3x3 over Q splits through rank {} with r of shape {}x{}",
        w.r.rows(),
        w.r.rows(),
        w.r.cols()
    );
    Ok(())
}
