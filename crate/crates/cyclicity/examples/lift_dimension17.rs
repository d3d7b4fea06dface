//! Lifting the empty rank-5 simplex in dimension 8 to an empty rank-13
//! simplex in dimension 17, beating every 2-power simplex there.
//!
//! Run with: cargo run --release --example lift_dimension17

use cyclicity::{cr2_value, lift3, Config, NamedSimplex};

fn main() {
    let config = Config::default();
    let delta8 = NamedSimplex::Delta8.construct().unwrap();
    let base = delta8.p_power().unwrap();

    let lifted = lift3(base).unwrap();
    println!("lift: dim {} -> {}, rank {} -> {}", delta8.dim(), lifted.dim(), base.r(), lifted.r());

    let cert = lifted.to_simplex().is_empty(config.order_cap).unwrap();
    println!(
        "emptiness verified over {} cosets: {}",
        cert.cosets_checked,
        if cert.is_empty() { "empty" } else { "NON-EMPTY" }
    );

    let cr2 = cr2_value(lifted.dim());
    println!(
        "rank {} vs maximal 2-power rank cr_2({}) = {}",
        lifted.r(),
        lifted.dim(),
        cr2
    );

    // One more lift is construction-only: 3^30 cosets are out of reach of
    // the oracle, so the result ships unverified.
    let again = lift3(&lifted).unwrap();
    println!(
        "next lift: dim {}, rank {} (order 3^{} exceeds the oracle cap; construction only)",
        again.dim(),
        again.r(),
        again.r()
    );
    assert!(again.to_simplex().is_empty(config.order_cap).is_err());
}
