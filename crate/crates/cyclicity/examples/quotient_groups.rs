//! Quotient groups and cyclicity ranks of small lattice simplices.
//!
//! Run with: cargo run --release --example quotient_groups

use cyclicity::{IntMatrix, LatticeSimplex, NamedSimplex};

fn main() {
    // Two lattice triangles of the same normalized volume class: the first
    // has a cyclic quotient group, the second does not.
    let cyclic = LatticeSimplex::new(IntMatrix::from_i64_rows(&[&[4, 0], &[0, 3]])).unwrap();
    let g = cyclic.quotient_group();
    println!("conv{{0,(4,0),(0,3)}}: group {g}, rank {}", g.cyclicity_rank);

    let non_cyclic = LatticeSimplex::new(IntMatrix::from_i64_rows(&[&[3, 0], &[0, 3]])).unwrap();
    let g = non_cyclic.quotient_group();
    println!("conv{{0,(3,0),(0,3)}}: group {g}, rank {}", g.cyclicity_rank);

    // White simplices T(p, q) are cyclic of order q.
    for (p, q) in [(1u64, 2u64), (2, 5), (3, 7), (5, 12)] {
        let t = NamedSimplex::White { p, q }.construct().unwrap();
        let g = t.quotient_group();
        println!("T({p},{q}): group {g}, order {}", g.order);
    }

    // The dilated standard simplex 2*S_d attains the maximal rank d.
    for d in 1..=5 {
        let s = NamedSimplex::Dilate { factor: 2, dim: d }.construct().unwrap();
        let g = s.quotient_group();
        println!("2*S_{d}: group {g}, rank {}", g.cyclicity_rank);
    }

    // An upper-triangular block whose lower-right corner is (p 1; 0 p):
    // the quotient collapses to a single cyclic factor of order p^2.
    for p in [2i64, 3, 5] {
        let h = IntMatrix::from_i64_rows(&[
            &[1, 0, 1, 0],
            &[0, 1, 1, 0],
            &[0, 0, p, 1],
            &[0, 0, 0, p],
        ]);
        let s = LatticeSimplex::new(h).unwrap();
        println!("corner (p,1;0,p) with p={p}: group {}", s.quotient_group());
    }
}
