//! Compatibility of the equivalence with induced extension functors: the
//! naturality square commutes for every registry pair, the 2-naturality
//! component computation matches the explicit triple, and a corrupted
//! gamma is caught with a replayable counterexample.
//! `cargo run --example naturality_squares`

use karoubi::bifunctor::{HomBifunctor, TildeBifunctor};
use karoubi::equivalence::{shin_naturality_square, two_naturality_check};
use karoubi::generate::tilde_ext_sampler;
use karoubi::matcat::MatCat;
use karoubi::registry::{doubling_exfunctor, negate_gamma, registry_exnattrans};
use karoubi::ring::Ring;

fn main() -> karoubi::Result<()> {
    let ring = Ring::prime_field(5)?;
    let tilde = TildeBifunctor::new(HomBifunctor::new(MatCat::new(ring)));
    let sampler = tilde_ext_sampler(ring, 4);

    let exf = doubling_exfunctor(ring);
    let report = shin_naturality_square(&tilde, &tilde, &exf, &exf, &sampler, 1, 200, "square");
    println!("naturality square for doubling: pass = {} over {} cases", report.pass, report.cases);

    for ent in registry_exnattrans(ring) {
        let report =
            two_naturality_check(&tilde, &tilde, &ent, &sampler, 1, 100, &ent.nt.name)?;
        println!("2-naturality for {:20} pass = {}", ent.nt.name, report.pass);
    }

    // the mutant: one leg of the square uses a sign-flipped gamma; any
    // extension with 2 Γ(α) ≠ 0 witnesses the mismatch
    let mutant = negate_gamma(&exf, ring);
    let report = shin_naturality_square(&tilde, &tilde, &exf, &mutant, &sampler, 1, 200, "mutant");
    println!(
        "corrupted gamma detected: {} (counterexample: {})",
        !report.pass,
        report.counterexample.as_deref().unwrap_or("-")
    );
    Ok(())
}
