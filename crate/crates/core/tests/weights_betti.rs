use logflc_core::betti::{betti_fld, betti_ld, betti_mbar, betti_open, betti_open_recursion, count_open, primes_from_five};
use logflc_core::weights::{acyclicity_certificate, build_e1, purity_check, AcyclicSpace};

#[test]
fn counted_betti_numbers_match_the_recursion() {
    for n in 3..=7 {
        assert_eq!(betti_open(n).unwrap(), betti_open_recursion(n).unwrap(), "n = {n}");
    }
}

#[test]
fn mbar_tables() {
    assert_eq!(betti_mbar(5).unwrap().coeffs(), &[1, 0, 5, 0, 1]);
    assert_eq!(betti_mbar(6).unwrap().coeffs(), &[1, 0, 16, 0, 16, 0, 1]);
}

#[test]
fn fld_is_a_torus_times_ld() {
    for n in 1..=5 {
        let ld = betti_ld(n).unwrap();
        let mut expected = ld.coeffs().to_vec();
        for _ in 0..n {
            expected.push(0);
            for k in (1..expected.len()).rev() {
                expected[k] += expected[k - 1];
            }
        }
        assert_eq!(betti_fld(n).unwrap().coeffs(), expected.as_slice(), "n = {n}");
    }
}

#[test]
fn small_fields() {
    assert!(count_open(5, 4).is_err());
    assert!(count_open(5, 9).is_err());
    // M_{0,4} is P^1 minus three points
    for q in primes_from_five(4) {
        assert_eq!(count_open(4, q).unwrap(), q - 2);
    }
}

#[test]
fn e1_columns_and_rows() {
    let table = build_e1(6).unwrap();
    let report = purity_check(&table).unwrap();
    assert!(report.passed());
    assert!(report.rows.iter().all(|r| r.alternating_sum == r.betti as i128));
    assert_eq!(report.rows[0].identity, "1 = 1");
}

#[test]
fn certificates() {
    let c = acyclicity_certificate(AcyclicSpace::P1WithPoints(4)).unwrap();
    assert!(c.pass);
    assert_eq!(c.hodge_dims, vec![1, 3]);
    assert!(c.higher_cohomology.iter().all(|&h| h == 0));
    let c = acyclicity_certificate(AcyclicSpace::Flc(3)).unwrap();
    assert!(c.pass);
    assert_eq!(c.log_dim, 5);
}
