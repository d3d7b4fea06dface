//! Normalizing p-power simplices into the block shape (E_k, B; 0, p*E_r)
//! and walking their facets.
//!
//! Run with: cargo run --release --example p_power_forms

use cyclicity::{Config, IntMatrix, LatticeSimplex, NamedSimplex};

fn main() {
    let cfg = Config::default();

    // Normalize a scrambled image of delta8 back into block shape.
    let delta8 = NamedSimplex::Delta8.construct().unwrap();
    let scramble = IntMatrix::from_i64_rows(&[
        &[1, 0, 0, 0, 0, 0, 0, 0],
        &[2, 1, 0, 0, 0, 0, 0, 0],
        &[0, -1, 1, 0, 0, 0, 1, 0],
        &[0, 0, 0, 1, 0, 0, 0, 0],
        &[1, 0, 0, -3, 1, 0, 0, 0],
        &[0, 0, 0, 0, 0, 1, 0, 0],
        &[0, 1, 0, 0, 0, 2, 1, 0],
        &[0, 0, 0, 0, 1, 0, 0, 1],
    ]);
    let image =
        LatticeSimplex::new(scramble.matmul(delta8.vertex_matrix()).unwrap()).unwrap();
    let form = image.to_p_power_form().unwrap();
    println!("recovered block form: p = {}, r = {}, k = {}", form.p(), form.r(), form.k());
    println!("B =\n{}", form.b());
    println!(
        "equivalent to delta8: {}",
        form.to_simplex().is_equivalent_to(&delta8, cfg.perm_cap).unwrap()
    );

    // Facets at the last r vertices are again p-power simplices, one rank
    // lower, and facets of empty simplices stay empty.
    let base = delta8.p_power().unwrap();
    for j in 4..=8 {
        let facet = base.facet_simplex(j).unwrap();
        let group = facet.quotient_group();
        let empty = facet.is_empty(cfg.order_cap).unwrap().is_empty();
        println!("facet {j}: dim {}, group {group}, empty = {empty}", facet.dim());
    }

    // Reducing to an intermediate lattice: divisors (12) become (3).
    let s = LatticeSimplex::new(IntMatrix::from_i64_rows(&[&[4, 0], &[0, 3]])).unwrap();
    let reduced = s.reduce_to_p_power(3).unwrap();
    println!(
        "reduce divisors {} -> {}",
        s.quotient_group(),
        reduced.quotient_group()
    );
}
