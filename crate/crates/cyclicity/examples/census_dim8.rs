//! The flagship census: all 3-power blocks of rank 5 in dimension 8.
//!
//! The admissible pool over 3 rows has 17 columns, so there are
//! C(17, 5) = 6188 candidates. Exactly 18 of them are empty, and they all
//! collapse into a single unimodular equivalence class: delta8.
//!
//! Run with: cargo run --release --example census_dim8

use cyclicity::{census, CensusParams, Config, NamedSimplex};

fn main() {
    let config = Config::default();
    let params = CensusParams { p: 3, dim: 8, rank: 5, prune: false, dedupe: true };
    let report = census(&params, &config).unwrap();

    println!("pool size: {}", report.pool.size);
    println!("candidates: {}", report.counts.candidates_enumerated);
    println!("empty survivors: {}", report.counts.empty_found);
    for (i, survivor) in report.survivors.iter().enumerate() {
        let cols: Vec<String> = (0..survivor.b[0].len())
            .map(|j| {
                let col: Vec<String> =
                    survivor.b.iter().map(|row| row[j].to_string()).collect();
                col.join("")
            })
            .collect();
        println!("  #{i:2}: columns {}", cols.join(" "));
    }

    let classes = report.classes.as_ref().unwrap();
    println!("equivalence classes: {}", classes.len());

    let delta8 = NamedSimplex::Delta8.construct().unwrap();
    let canonical = delta8.canonical_form(config.perm_cap).unwrap();
    println!(
        "class canonical form equals canonical(delta8): {}",
        classes[0].canonical == canonical.matrix.to_string_rows()
    );
    println!(
        "timings: enumeration {} ms, dedupe {} ms",
        report.timings_ms.enumeration, report.timings_ms.dedupe
    );
}
