//! The category of rectangular matrices, its equivalence with the
//! extension category of the Hom-bifunctor, and the arrow correspondence
//! after idempotent completion.
//! `cargo run --example rectangular_matrices`

use karoubi::bifunctor::HomBifunctor;
use karoubi::cat::MatrixBacked;
use karoubi::completion::Completion;
use karoubi::extensions::ExtCat;
use karoubi::generate::completed_ext_sampler;
use karoubi::matcat::MatCat;
use karoubi::matrix::Matrix;
use karoubi::rect::{
    arrow_correspondence_check, completed_ext_to_arrow, rect_direct_sum, rect_to_ext_equivalence,
    RectCat,
};
use karoubi::ring::Ring;

fn main() -> karoubi::Result<()> {
    let ring = Ring::prime_field(2)?;
    let rect = RectCat::new(ring);

    // direct sums insert zero blocks, with empty shapes handled exactly
    let x = Matrix::zero(ring, 0, 2); // the empty row vector of length 2
    let y = Matrix::from_i64s(ring, &[&[1]]);
    println!("(0x2) ⊕ (1x1) = {:?}", rect_direct_sum(&rect, &x, &y));
    let zero = Matrix::zero(ring, 0, 0); // the unique 0x0 matrix
    println!("X ⊕ 0 == X: {}", rect_direct_sum(&rect, &y, &zero) == y);

    // the equivalence with the extension category
    let functor = rect_to_ext_equivalence(ring)?;
    let col = Matrix::from_i64s(ring, &[&[1], &[0]]);
    let img = functor.apply_obj(&col);
    println!("[1;0] corresponds to the extension {} in Hom(F2, F2^2)", img.alpha);

    // hom-space dimensions agree across the functor
    let ext = ExtCat::new(HomBifunctor::new(MatCat::new(ring)));
    let d1 = rect.hom_dim(&col, &col)?;
    let d2 = ext.hom_dim(&img, &img)?;
    println!("hom dimensions agree: {d1} == {d2}");

    // after completion, objects correspond to plain arrows again
    let cext = Completion::new(ext);
    let sampler = completed_ext_sampler(ring, 3);
    let mut rng = karoubi::laws::rng_from(2);
    let a = sampler.obj(&mut rng);
    let b = sampler.obj(&mut rng);
    let c = sampler.obj(&mut rng);
    println!("sampled completed extension corresponds to the arrow {:?}", completed_ext_to_arrow(&a)?);
    let m = sampler.hom(&mut rng, &a, &b);
    let n = sampler.hom(&mut rng, &b, &c);
    println!(
        "correspondence preserves hom dimensions and composition: {}",
        arrow_correspondence_check(&rect, &cext, &a, &b, &m, &n)?
    );
    Ok(())
}
