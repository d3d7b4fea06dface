//! Canonicalization up to unimodular equivalence.
//!
//! Run with: cargo run --release --example canonical_forms

use cyclicity::{Config, IntMatrix, LatticeSimplex, NamedSimplex};

fn main() {
    let cap = Config::default().perm_cap;

    // {e1, e2, 2e3} and {e1, e2, (1,1,2)} span the same column lattice
    // Z^2 x 2Z, yet the simplices are inequivalent: one has a non-primitive
    // edge, the other is empty.
    let a = LatticeSimplex::new(IntMatrix::from_i64_rows(&[
        &[1, 0, 0],
        &[0, 1, 0],
        &[0, 0, 2],
    ]))
    .unwrap();
    let b = LatticeSimplex::new(IntMatrix::from_i64_rows(&[
        &[1, 0, 1],
        &[0, 1, 1],
        &[0, 0, 2],
    ]))
    .unwrap();
    println!("same column lattice: {}", a.column_lattice_basis() == b.column_lattice_basis());
    println!("equivalent: {}", a.is_equivalent_to(&b, cap).unwrap());
    println!("canonical form of the first:\n{}", a.canonical_form(cap).unwrap().matrix);
    println!("canonical form of the second:\n{}", b.canonical_form(cap).unwrap().matrix);

    // The canonical form does not move under re-rooting at any vertex or
    // under coordinate permutations.
    let t = NamedSimplex::White { p: 2, q: 7 }.construct().unwrap();
    let reference = t.canonical_form(cap).unwrap();
    let mut all_equal = true;
    for k in 0..=t.dim() {
        let rooted = t.rooted_at(k).unwrap();
        all_equal &= rooted.canonical_form(cap).unwrap() == reference;
    }
    let permuted =
        LatticeSimplex::new(t.vertex_matrix().permute_rows(&[2, 0, 1])).unwrap();
    all_equal &= permuted.canonical_form(cap).unwrap() == reference;
    println!("T(2,7) canonical form invariant under all moves: {all_equal}");
}
