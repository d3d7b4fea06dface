//! Acceptance suite: one test per criterion, each printing a pass line with
//! its runtime. Run with `cargo test --test acceptance -- --nocapture`.

mod common;

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use common::*;
use cyclicity::{
    admissible_columns, binary_construction, census, column_admissible, compute_table, cr2_value,
    crp_upper, lattice_basis, lift3, row_hnf, snf, solve_exact, subset_admissible, CensusParams,
    Config, IntMatrix, LatticeSimplex, NamedSimplex, PPowerForm, Verdict,
};

fn pass(criterion: usize, name: &str, start: Instant) {
    println!(
        "ACCEPTANCE {criterion} ({name}): PASS in {:.2}s",
        start.elapsed().as_secs_f64()
    );
}

#[test]
fn acceptance_1_dim8_census_reproduction() {
    let start = Instant::now();
    let config = Config::default();
    let params = CensusParams { p: 3, dim: 8, rank: 5, prune: false, dedupe: true };
    let report = census(&params, &config).unwrap();

    assert_eq!(report.counts.candidates_enumerated, 6188, "candidate count");
    assert_eq!(report.counts.empty_found, 18, "empty survivor count");
    let classes = report.classes.as_ref().expect("dedupe requested");
    assert_eq!(classes.len(), 1, "single equivalence class");

    let delta8 = NamedSimplex::Delta8.construct().unwrap();
    let canon_start = Instant::now();
    let delta8_canonical = delta8.canonical_form(config.perm_cap).unwrap();
    let canon_elapsed = canon_start.elapsed();
    assert_eq!(
        classes[0].canonical,
        delta8_canonical.matrix.to_string_rows(),
        "class canonical form equals canonical(delta8)"
    );

    // runtime targets: emptiness < 60 s; canonicalization of the 18
    // survivors plus delta8 < 15 min
    assert!(report.timings_ms.enumeration < 60_000, "emptiness phase too slow");
    let canonicalization_ms = report.timings_ms.dedupe + canon_elapsed.as_millis() as u64;
    assert!(canonicalization_ms < 900_000, "canonicalization too slow");

    // every survivor satisfies the necessary conditions and re-verifies
    // under the general (non-fast-path) oracle
    for survivor in &report.survivors {
        let cols: Vec<Vec<u64>> = (0..survivor.b[0].len())
            .map(|j| survivor.b.iter().map(|row| row[j]).collect())
            .collect();
        assert!(cols.iter().all(|c| column_admissible(c)));
        let refs: Vec<&[u64]> = cols.iter().map(|c| c.as_slice()).collect();
        assert!(subset_admissible(&refs, 3));
        let form = PPowerForm::from_b_rows_u64(3, 5, &survivor.b).unwrap();
        let plain = LatticeSimplex::new(form.assemble()).unwrap();
        assert!(plain.is_empty(config.order_cap).unwrap().is_empty());
    }
    pass(1, "dim-8 census reproduction", start);
}

#[test]
fn acceptance_2_dim9_rank6_census() {
    let start = Instant::now();
    let params = CensusParams { p: 3, dim: 9, rank: 6, prune: false, dedupe: false };
    let report = census(&params, &Config::default()).unwrap();
    assert_eq!(report.counts.candidates_enumerated, 12376);
    assert_eq!(report.counts.empty_found, 0);
    assert!(start.elapsed().as_secs() < 300, "dim-9 census too slow");
    pass(2, "dim-9 rank-6 census", start);
}

#[test]
fn acceptance_3_cr2_formula() {
    let start = Instant::now();
    let config = Config::default();

    // exhaustive confirmation for 3 <= d <= 7
    let expected: Vec<usize> = vec![1, 1, 2, 3, 4];
    for (d, &ell) in (3..=7).zip(&expected) {
        assert_eq!(cr2_value(d), ell, "formula value at d = {d}");
        let at_ell =
            census(&CensusParams { p: 2, dim: d, rank: ell, prune: false, dedupe: false }, &config)
                .unwrap();
        assert!(at_ell.counts.empty_found >= 1, "no empty block at (2, {d}, {ell})");
        for rank in (ell + 1)..=d {
            let above = census(
                &CensusParams { p: 2, dim: d, rank, prune: false, dedupe: false },
                &config,
            )
            .unwrap();
            assert_eq!(above.counts.empty_found, 0, "unexpected empty block at (2, {d}, {rank})");
        }
    }

    // 8 <= d <= 12: the construction attains the formula value and the pool
    // bound forbids anything larger
    for d in 8..=12 {
        let ell = cr2_value(d);
        let k = d - ell;
        let form = binary_construction(2, k, ell).unwrap();
        let cert = form.to_simplex().is_empty(config.order_cap).unwrap();
        assert!(cert.is_empty(), "binary construction not empty at d = {d}");
        let sheet = crp_upper(2, d);
        assert_eq!(sheet.pool_bound, ell, "pool bound open at d = {d}");
        assert_eq!(sheet.combined, ell);
    }
    assert!(start.elapsed().as_secs() < 600, "cr_2 suite too slow");
    pass(3, "cr_2 formula for d <= 12", start);
}

#[test]
fn acceptance_4_intro_table_bracket() {
    let start = Instant::now();
    let rows = compute_table(&[2, 3], 9, &Config::default()).unwrap();
    let lower: Vec<usize> = rows.iter().map(|r| r.lower).collect();
    let upper: Vec<usize> = rows.iter().map(|r| r.upper).collect();
    assert_eq!(lower, vec![0, 0, 1, 1, 2, 3, 4, 5, 5]);
    assert_eq!(upper, vec![0, 0, 1, 1, 2, 3, 4, 5, 6]);
    assert!(rows.iter().all(|r| r.lower_exhaustive));
    for d in 0..8 {
        assert_eq!(rows[d].bracket(), format!("{}", lower[d]));
    }
    assert_eq!(rows[8].bracket(), "5..6");

    // jump consistency: the lower table is monotone and never climbs by
    // more than one per dimension
    for w in rows.windows(2) {
        assert!(w[1].lower >= w[0].lower);
        assert!(w[1].lower <= w[0].lower + 1);
    }
    pass(4, "intro table bracket", start);
}

#[test]
fn acceptance_5_lifting_to_dimension_17() {
    let start = Instant::now();
    let config = Config::default();
    let delta8 = NamedSimplex::Delta8.construct().unwrap();
    let lifted = lift3(delta8.p_power().unwrap()).unwrap();
    assert_eq!(lifted.dim(), 17);
    assert_eq!(lifted.r(), 13);

    let cert = lifted.to_simplex().is_empty(config.order_cap).unwrap();
    assert!(cert.is_empty(), "lifted simplex must be empty");
    assert_eq!(cert.cosets_checked, 1_594_322, "full enumeration of 3^13 - 1 cosets");
    assert!(start.elapsed().as_secs() < 60, "lift verification too slow");

    assert_eq!(cr2_value(17), 12);
    assert!(lifted.r() > cr2_value(17), "rank 13 must beat every 2-power simplex");
    pass(5, "lifting to dimension 17", start);
}

#[test]
fn acceptance_6_pointwise_regressions() {
    let start = Instant::now();
    let config = Config::default();

    // delta9 is empty with rank 5
    let delta9 = NamedSimplex::Delta9.construct().unwrap();
    assert!(delta9.is_empty(config.order_cap).unwrap().is_empty());
    let g = delta9.quotient_group();
    assert_eq!(g.cyclicity_rank, 5);
    assert!(g.is_elementary_abelian(3));

    // the (2,2,2,3) simplex is empty; the (2,2,2,5) twin contains (1,1,1,2)
    let with_last = |last: i64| {
        LatticeSimplex::new(IntMatrix::from_i64_rows(&[
            &[1, 0, 0, 2],
            &[0, 1, 0, 2],
            &[0, 0, 1, 2],
            &[0, 0, 0, last],
        ]))
        .unwrap()
    };
    assert!(with_last(3).is_empty(config.order_cap).unwrap().is_empty());
    let cert = with_last(5).is_empty(config.order_cap).unwrap();
    assert_eq!(cert.verdict, Verdict::NonEmpty);
    let expected: Vec<BigInt> = [1, 1, 1, 2].iter().map(|&v| BigInt::from(v)).collect();
    assert_eq!(cert.witness, Some(expected));

    // the corner block (p 1; 0 p) gives a cyclic group of order p^2
    for p in [2i64, 3, 5] {
        let s = LatticeSimplex::new(IntMatrix::from_i64_rows(&[
            &[1, 0, 1, 0],
            &[0, 1, 1, 0],
            &[0, 0, p, 1],
            &[0, 0, 0, p],
        ]))
        .unwrap();
        let g = s.quotient_group();
        assert_eq!(g.nontrivial_divisors, vec![BigInt::from(p * p)]);
    }

    // 2*S_d: quotient (Z_2)^d, hollow for 2 <= d <= 4, non-empty for d >= 2
    for d in 1..=5 {
        let s = NamedSimplex::Dilate { factor: 2, dim: d }.construct().unwrap();
        let g = s.quotient_group();
        assert_eq!(g.cyclicity_rank, d);
        assert!(g.is_elementary_abelian(2));
        if (2..=4).contains(&d) {
            assert!(s.is_hollow(config.order_cap).unwrap());
        }
        if d >= 2 {
            assert_eq!(s.is_empty(config.order_cap).unwrap().verdict, Verdict::NonEmpty);
        }
    }

    // pool(3, 3) equals the known 17-column matrix, as a set
    let pool = admissible_columns(3, 3);
    let reference: Vec<Vec<u64>> = vec![
        vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1], vec![1, 2, 0], vec![2, 1, 0],
        vec![1, 0, 2], vec![2, 0, 1], vec![0, 1, 2], vec![0, 2, 1], vec![1, 1, 1],
        vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1], vec![1, 2, 2], vec![2, 1, 2],
        vec![2, 2, 1], vec![2, 2, 2],
    ];
    let mut pool_sorted = pool.columns.clone();
    pool_sorted.sort();
    let mut reference_sorted = reference;
    reference_sorted.sort();
    assert_eq!(pool_sorted, reference_sorted);
    pass(6, "pointwise regressions", start);
}

#[test]
fn acceptance_7_property_suites() {
    let start = Instant::now();
    let config = Config::default();

    property_hnf_snf_invariants(1000);
    property_oracle_equivalence(200, &config);
    property_fast_path_agreement(&config);
    property_equivalence_moves(100, &config);
    property_facets_and_reduction(&config);
    property_white_family(&config);

    assert!(start.elapsed().as_secs() < 300, "property suites too slow");
    pass(7, "property suites", start);
}

/// HNF and SNF invariants on random invertible matrices, plus the
/// determinantal-divisor oracle and lattice-basis invariance.
fn property_hnf_snf_invariants(cases: usize) {
    let mut rng = rng(0xA11CE);
    for case in 0..cases {
        let d = rng.gen_range(1..=6);
        let a = random_invertible(&mut rng, d, 9);
        let det = a.determinant().unwrap();

        let dec = row_hnf(&a).unwrap();
        assert!(dec.h.is_upper_triangular());
        for j in 0..d {
            assert!(dec.h.get(j, j).is_positive(), "case {case}: diagonal");
            for i in 0..j {
                let e = dec.h.get(i, j);
                assert!(!e.is_negative() && e < dec.h.get(j, j), "case {case}: reduction");
            }
        }
        assert_eq!(dec.u.matmul(&a).unwrap(), dec.h, "case {case}: U*A = H");
        assert!(dec.u.determinant().unwrap().abs().is_one());
        let diag_product: BigInt = dec.h.diagonal().iter().product();
        assert_eq!(diag_product, det.abs(), "case {case}: diagonal product");

        // left multiplication by a unimodular matrix leaves the form fixed
        let w = random_unimodular(&mut rng, d);
        let wa = w.matmul(&a).unwrap();
        assert_eq!(row_hnf(&wa).unwrap().h, dec.h, "case {case}: left invariance");

        let smith = snf(&a).unwrap();
        for pair in smith.divisors.windows(2) {
            assert!(pair[0].mod_floor(&pair[1]).is_zero(), "case {case}: chain");
        }
        let product: BigInt = smith.divisors.iter().product();
        assert_eq!(product, det.abs(), "case {case}: divisor product");
        assert_eq!(
            smith.divisors,
            snf(&a.transpose()).unwrap().divisors,
            "case {case}: transpose divisors"
        );
        let recomposed =
            smith.u.matmul(&smith.diagonal_matrix()).unwrap().matmul(&smith.v).unwrap();
        assert_eq!(recomposed, a, "case {case}: A = U S V");
        assert!(smith.u.determinant().unwrap().abs().is_one());
        assert!(smith.v.determinant().unwrap().abs().is_one());
        if d <= 5 {
            assert_eq!(smith.divisors, divisors_by_minors(&a), "case {case}: minor oracle");
        }

        // lattice basis: right-unimodular invariance and idempotence
        let basis = lattice_basis(&a).unwrap();
        let aw = a.matmul(&random_unimodular(&mut rng, d)).unwrap();
        assert_eq!(lattice_basis(&aw).unwrap(), basis, "case {case}: basis invariance");
        assert_eq!(lattice_basis(&basis).unwrap(), basis, "case {case}: idempotence");

        // exact solve round-trips and its denominator divides |det|
        let z: Vec<BigInt> = (0..d).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
        let x = solve_exact(&a, &z).unwrap();
        let ax = a.matvec(x.numerators()).unwrap();
        for (lhs, rhs) in ax.iter().zip(&z) {
            assert_eq!(lhs, &(rhs * x.denominator()), "case {case}: solve round trip");
        }
        assert!(det.abs().mod_floor(x.denominator()).is_zero(), "case {case}: denominator");
    }
    // the independent gcd-elimination check on a fixed sample
    let mut check_rng = common::rng(0xBEEF);
    for _ in 0..50 {
        let d = check_rng.gen_range(1..=5);
        let a = random_invertible(&mut check_rng, d, 9);
        assert_eq!(row_hnf(&a).unwrap().h, gcd_elimination_hnf(&a));
    }
}

/// Coset oracle versus bounding-box brute force on random small simplices.
fn property_oracle_equivalence(cases: usize, config: &Config) {
    let mut rng = rng(0x0DDBA11);
    for case in 0..cases {
        let d = rng.gen_range(1..=4);
        let s = random_simplex(&mut rng, d, 60);
        let cert = s.is_empty(config.order_cap).unwrap();
        let (non_vertex, interior) = box_oracle(&s);
        assert_eq!(
            cert.is_empty(),
            non_vertex.is_empty(),
            "case {case}: emptiness disagrees on {:?}",
            s.vertex_matrix()
        );
        assert_eq!(
            s.is_hollow(config.order_cap).unwrap(),
            interior.is_empty(),
            "case {case}: hollowness disagrees"
        );
        if let Some(w) = &cert.witness {
            let lambda = solve_exact(s.vertex_matrix(), w).unwrap();
            assert!(lambda.in_standard_simplex() && lambda.unit_index().is_none());
            assert!(non_vertex.contains(w), "case {case}: witness not in oracle list");
        }
    }
}

/// The block-shape fast path agrees with the general coset path.
fn property_fast_path_agreement(config: &Config) {
    let mut rng = rng(0xFA57);
    let mut instances = 0usize;
    for (p, k) in [(2u64, 2usize), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)] {
        let pool = admissible_columns(p, k);
        if pool.size() == 0 {
            continue;
        }
        for _ in 0..12 {
            let r = rng.gen_range(1..=pool.size().min(4));
            if cyclicity::arith::checked_pow(p, r).unwrap() > 1_000_000 {
                continue;
            }
            let mut picks: Vec<usize> = (0..pool.size()).collect();
            for i in (1..picks.len()).rev() {
                let j = rng.gen_range(0..=i);
                picks.swap(i, j);
            }
            picks.truncate(r);
            picks.sort();
            let rows: Vec<Vec<u64>> =
                (0..k).map(|i| picks.iter().map(|&c| pool.columns[c][i]).collect()).collect();
            let form = PPowerForm::from_b_rows_u64(p, r, &rows).unwrap();
            let fast = form.to_simplex().is_empty(config.order_cap).unwrap();
            let general = LatticeSimplex::new(form.assemble())
                .unwrap()
                .is_empty(config.order_cap)
                .unwrap();
            assert_eq!(fast.verdict, general.verdict, "fast/general split at p={p} B={rows:?}");
            assert_eq!(fast.group_order, general.group_order);
            instances += 1;
        }
    }
    assert!(instances >= 50, "not enough fast-path instances exercised");
}

/// Rank, emptiness, hollowness and canonical form are invariant under
/// unimodular maps, coordinate permutations, vertex relabelling, and
/// re-rooting.
fn property_equivalence_moves(cases: usize, config: &Config) {
    let mut rng = rng(0x5EED);
    for case in 0..cases {
        let d = rng.gen_range(1..=5);
        let s = random_simplex(&mut rng, d, 40);
        let group = s.quotient_group();
        let empty = s.is_empty(config.order_cap).unwrap().is_empty();
        let hollow = s.is_hollow(config.order_cap).unwrap();
        let canonical = s.canonical_form(config.perm_cap).unwrap();

        let moved = match case % 4 {
            0 => {
                let w = random_unimodular(&mut rng, d);
                LatticeSimplex::new(w.matmul(s.vertex_matrix()).unwrap()).unwrap()
            }
            1 => {
                let perm = random_permutation(&mut rng, d);
                LatticeSimplex::new(s.vertex_matrix().permute_rows(&perm)).unwrap()
            }
            2 => s.rooted_at(rng.gen_range(0..=d)).unwrap(),
            _ => {
                // relabel vertices: permute columns
                let perm = random_permutation(&mut rng, d);
                let mut m = IntMatrix::zero(d, d);
                for (j, &src) in perm.iter().enumerate() {
                    for i in 0..d {
                        m.set(i, j, s.vertex_matrix().get(i, src).clone());
                    }
                }
                LatticeSimplex::new(m).unwrap()
            }
        };
        assert_eq!(
            moved.quotient_group().nontrivial_divisors,
            group.nontrivial_divisors,
            "case {case}: divisors moved"
        );
        assert_eq!(moved.is_empty(config.order_cap).unwrap().is_empty(), empty, "case {case}");
        assert_eq!(moved.is_hollow(config.order_cap).unwrap(), hollow, "case {case}");
        assert_eq!(
            moved.canonical_form(config.perm_cap).unwrap(),
            canonical,
            "case {case}: canonical form moved"
        );
        assert!(moved.is_equivalent_to(&s, config.perm_cap).unwrap(), "case {case}");
    }
}

/// Facets of empty block forms drop the rank by exactly one and stay empty;
/// reduction to an intermediate lattice preserves emptiness; every empty
/// block satisfies the necessary conditions.
fn property_facets_and_reduction(config: &Config) {
    // empty forms: delta8, delta9, the binary families, and every survivor
    // of a small census
    let mut forms: Vec<PPowerForm> = vec![
        NamedSimplex::Delta8.construct().unwrap().p_power().unwrap().clone(),
        NamedSimplex::Delta9.construct().unwrap().p_power().unwrap().clone(),
    ];
    for (p, k, ell) in [(2u64, 3usize, 4usize), (3, 3, 4), (5, 2, 1), (2, 4, 6)] {
        forms.push(binary_construction(p, k, ell).unwrap());
    }
    let small = census(
        &CensusParams { p: 3, dim: 7, rank: 4, prune: false, dedupe: false },
        config,
    )
    .unwrap();
    for survivor in &small.survivors {
        forms.push(PPowerForm::from_b_rows_u64(3, 4, &survivor.b).unwrap());
    }

    for form in &forms {
        let simplex = form.to_simplex();
        assert!(simplex.is_empty(config.order_cap).unwrap().is_empty());

        // necessary conditions hold on B
        let cols = form.b_columns_u64();
        assert!(cols.iter().all(|c| column_admissible(c)));
        let refs: Vec<&[u64]> = cols.iter().map(|c| c.as_slice()).collect();
        assert!(subset_admissible(&refs, form.p()));

        // facet lemma at every admissible index
        for j in (form.k() + 1)..=form.dim() {
            let facet = form.facet_simplex(j).unwrap();
            let g = facet.quotient_group();
            assert_eq!(g.cyclicity_rank, form.r() - 1);
            assert!(g.is_elementary_abelian(form.p()));
            assert!(facet.is_empty(config.order_cap).unwrap().is_empty());
        }

        // reduction: for the elementary abelian case this is idempotent on
        // the divisor level, and emptiness survives
        let reduced = simplex.reduce_to_p_power(form.p()).unwrap();
        let g = reduced.quotient_group();
        assert_eq!(g.cyclicity_rank, form.r());
        assert!(g.is_elementary_abelian(form.p()));
        assert!(reduced.is_empty(config.order_cap).unwrap().is_empty());
    }

    // reduction from genuinely mixed divisor structures, on empty simplices
    let mut rng = rng(0x12ED);
    let mut reduced_cases = 0usize;
    while reduced_cases < 25 {
        let d = rng.gen_range(2..=4);
        let s = random_simplex(&mut rng, d, 60);
        if !s.is_empty(config.order_cap).unwrap().is_empty() {
            continue;
        }
        let group = s.quotient_group();
        if group.is_trivial() {
            continue;
        }
        let smallest = group.nontrivial_divisors.last().unwrap().clone();
        let p = smallest_prime_factor(&smallest);
        let reduced = s.reduce_to_p_power(p).unwrap();
        assert!(
            reduced.is_empty(config.order_cap).unwrap().is_empty(),
            "reduction broke emptiness for {:?}",
            s.vertex_matrix()
        );
        let g = reduced.quotient_group();
        assert!(g.is_elementary_abelian(p));
        assert_eq!(g.cyclicity_rank, group.cyclicity_rank);
        reduced_cases += 1;
    }
}

fn smallest_prime_factor(n: &BigInt) -> u64 {
    let mut p = 2u64;
    loop {
        if n.mod_floor(&BigInt::from(p)).is_zero() {
            return p;
        }
        p += 1;
    }
}

/// White simplices T(p, q) with gcd(p, q) = 1 are empty; cross-validated by
/// the bounding-box oracle.
fn property_white_family(config: &Config) {
    for q in 2..=12u64 {
        for p in 1..q {
            if cyclicity::arith::gcd_u64(p, q) != 1 {
                continue;
            }
            let t = NamedSimplex::White { p, q }.construct().unwrap();
            assert!(t.is_empty(config.order_cap).unwrap().is_empty(), "T({p},{q})");
            assert!(box_oracle_empty(&t), "box oracle disagrees on T({p},{q})");
        }
    }
}
