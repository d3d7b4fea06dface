//! Per-dimension brackets for the maximal cyclicity rank of an empty
//! lattice simplex, combining exhaustive searches over p in {2, 3} with the
//! upper bounds.
//!
//! Run with: cargo run --release --example bounds_table

use cyclicity::{compute_table, crp_upper, Config};

fn main() {
    let config = Config::default();
    let rows = compute_table(&[2, 3], 9, &config).unwrap();

    println!("{:>3} {:>6} {:>6} {:>7}  witness prime", "d", "lower", "upper", "cr_e");
    for row in &rows {
        println!(
            "{:>3} {:>6} {:>6} {:>7}  p = {}",
            row.d,
            row.lower,
            row.upper,
            row.bracket(),
            row.lower_prime
        );
    }

    // The individual bound components for p = 3 in dimension 8.
    let sheet = crp_upper(3, 8);
    println!(
        "\ncr_3(8) bounds: log {}, pool {}, linear {:?} -> combined {}",
        sheet.log_bound, sheet.pool_bound, sheet.linear_bound, sheet.combined
    );
}
