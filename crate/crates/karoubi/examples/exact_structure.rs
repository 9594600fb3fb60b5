//! Split exactness, decided by solving: sections, retractions, cokernels
//! of sections, and membership of composable pairs in the exact structure
//! of the extension category.
//! `cargo run --example exact_structure`

use karoubi::bifunctor::HomBifunctor;
use karoubi::cat::TriState;
use karoubi::exactness::{
    decide_split_exact, find_retraction, split_conflation_membership, ConflationTriple,
};
use karoubi::extensions::{conflation_in_xe, ext_cokernel_of_section, ExtCat};
use karoubi::matcat::MatCat;
use karoubi::matrix::{cokernel_of_section, Matrix};
use karoubi::ring::Ring;

fn main() -> karoubi::Result<()> {
    let ring = Ring::prime_field(3)?;
    let cat = MatCat::new(ring);

    // a section and its computed cokernel
    let a = Matrix::from_i64s(ring, &[&[1], &[1]]);
    let r = find_retraction(&cat, &a)?.expect("a is a section");
    println!("retraction of {a} is {r}");
    let b = cokernel_of_section(&a, &r)?;
    println!("cokernel of the section: {b} with b*a = {}", b.mul(&a)?);
    println!("(a, b) split exact: {}", decide_split_exact(&cat, &a, &b)?);

    // without witnesses the abstract membership test stays undecided
    let t = ConflationTriple { f: a.clone(), g: b.clone(), retraction: None, section: None };
    println!(
        "witness-only membership without witnesses: {:?}",
        split_conflation_membership(&cat, &t)? == TriState::Unknown
    );

    // conflations in the extension category are componentwise split exact
    let f2 = Ring::prime_field(2)?;
    let ext = ExtCat::new(HomBifunctor::new(MatCat::new(f2)));
    let alpha = ext.object(1, 1, Matrix::identity(f2, 1))?;
    let beta = ext.object(2, 2, Matrix::identity(f2, 2))?;
    let col = Matrix::from_i64s(f2, &[&[1], &[0]]);
    let m1 = ext.morphism(alpha.clone(), beta.clone(), col.clone(), col)?;
    let row = Matrix::from_i64s(f2, &[&[0, 1]]);
    let m2 = ext.morphism(beta, alpha.clone(), row.clone(), row)?;
    println!("canonical pair lies in the exact structure: {}", conflation_in_xe(&ext, &m1, &m2)?);

    // componentwise cokernel of a section of extensions
    let ra = Matrix::from_i64s(f2, &[&[1, 0]]);
    let q = ext_cokernel_of_section(&ext, &m1, &ra, &ra)?;
    println!("cokernel of (a, c) is ({}, {})", q.a, q.c);
    Ok(())
}
