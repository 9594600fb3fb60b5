//! The lifted biadditive functor on a completion: elements are triples
//! `(e_A, α, e_C)` with `(e_A)_E α = α = (e_C)^E α`, actions come from
//! completed morphisms, and element spaces stay solvable.
//! `cargo run --example lifted_extensions`

use karoubi::bifunctor::{Bifunctor, HomBifunctor, SolvableBifunctor, TildeBifunctor};
use karoubi::matcat::MatCat;
use karoubi::matrix::Matrix;
use karoubi::ring::Ring;

fn main() -> karoubi::Result<()> {
    let ring = Ring::prime_field(2)?;
    let tilde = TildeBifunctor::new(HomBifunctor::new(MatCat::new(ring)));
    let completed = tilde.completed_cat().clone();

    let e = Matrix::from_i64s(ring, &[&[1, 0], &[0, 0]]);
    let id2 = Matrix::identity(ring, 2);

    // the raw identity is not compatible with rank-one idempotents...
    match tilde.element(e.clone(), id2.clone(), e.clone()) {
        Err(err) => println!("raw identity rejected: {err}"),
        Ok(_) => unreachable!(),
    }
    // ...but the idempotent itself is
    let x = tilde.element(e.clone(), e.clone(), e.clone())?;
    println!("valid element: ({}, {}, {})", x.e_a, x.alpha, x.e_c);

    // actions through completed morphisms keep the compatibility equations
    let m = completed.morphism(e.clone(), e.clone(), e.clone())?;
    let moved = tilde.act_left(&m, &x)?;
    let a_obj = completed.object(2, e.clone())?;
    println!("action image still valid: {}", tilde.is_element(&a_obj, &a_obj, &moved));

    // the element space over rank-one endpoints is one dimensional
    let basis = tilde.elem_basis(&a_obj, &a_obj)?;
    println!("dim E((2,e), (2,e)) = {}", basis.len());
    let full = completed.include_obj(&2);
    println!("dim E((2,id), (2,id)) = {}", tilde.elem_basis(&full, &full)?.len());

    // addition is taken on the middle component over fixed idempotents
    let sum = tilde.add_elem(&x, &x)?;
    println!("x + x = ({}, {}, {}) over F2", sum.e_a, sum.alpha, sum.e_c);
    Ok(())
}
