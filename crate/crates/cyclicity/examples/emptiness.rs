//! Emptiness and hollowness oracles, with witnesses.
//!
//! Run with: cargo run --release --example emptiness

use cyclicity::{Config, IntMatrix, LatticeSimplex, NamedSimplex};

fn main() {
    let cap = Config::default().order_cap;

    // Reeve simplices: empty tetrahedra of arbitrarily large volume.
    for p in [2u64, 5, 11, 101] {
        let s = NamedSimplex::Reeve { p }.construct().unwrap();
        let cert = s.is_empty(cap).unwrap();
        println!(
            "reeve({p}): volume {}, {} ({} cosets checked)",
            cert.group_order,
            if cert.is_empty() { "empty" } else { "non-empty" },
            cert.cosets_checked
        );
    }

    // Changing a single diagonal entry flips the verdict: with 3 the
    // 4-simplex is empty, with 5 it picks up the point (1,1,1,2).
    for last in [3i64, 5] {
        let m = IntMatrix::from_i64_rows(&[
            &[1, 0, 0, 2],
            &[0, 1, 0, 2],
            &[0, 0, 1, 2],
            &[0, 0, 0, last],
        ]);
        let s = LatticeSimplex::new(m).unwrap();
        let cert = s.is_empty(cap).unwrap();
        match &cert.witness {
            None => println!("conv{{0,e1,e2,e3,(2,2,2,{last})}}: empty"),
            Some(w) => {
                let coords: Vec<String> = w.iter().map(|v| v.to_string()).collect();
                println!(
                    "conv{{0,e1,e2,e3,(2,2,2,{last})}}: non-empty, witness ({})",
                    coords.join(",")
                );
            }
        }
    }

    // Hollow but not empty: the dilates 2*S_d for d >= 2.
    for d in 1..=4 {
        let s = NamedSimplex::Dilate { factor: 2, dim: d }.construct().unwrap();
        println!(
            "2*S_{d}: hollow = {}, empty = {}",
            s.is_hollow(cap).unwrap(),
            s.is_empty(cap).unwrap().is_empty()
        );
    }
}
