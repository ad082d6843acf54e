//! Cross-checks for the supersingular engine over wide prime ranges: the
//! closed-form degree, complete splitting over the quadratic extension, the
//! Hasse invariant oracle, and the level 7 degree formula.

use fricke_core::engine::{
    expected_star_degree, hasse_poly, ss_degree, ss_poly, star7_degree_closed_form,
    supersingular_j_set,
};
use fricke_core::arith::primes_in;

#[test]
fn degree_formula_holds_to_2000() {
    for p in primes_in(5, 2000) {
        let f = ss_poly(p).unwrap();
        assert!(f.is_monic());
        assert_eq!(f.deg0(), ss_degree(p).unwrap(), "degree mismatch at {p}");
    }
}

#[test]
fn splits_completely_over_quadratic_extension_to_2000() {
    // The supersingular polynomial is squarefree with every root in the
    // field of p^2 elements, so the distinct-root count equals the degree.
    for p in primes_in(5, 2000) {
        let roots = supersingular_j_set(p, 1).unwrap();
        assert_eq!(roots.len(), ss_degree(p).unwrap(), "missing roots at {p}");
    }
}

#[test]
fn hasse_oracle_agrees_to_200() {
    for p in primes_in(5, 200) {
        assert_eq!(
            hasse_poly(p).unwrap(),
            ss_poly(p).unwrap(),
            "Hasse oracle disagrees at {p}"
        );
    }
}

#[test]
fn level7_degree_closed_form_to_2000() {
    for p in primes_in(5, 2000) {
        if p == 7 {
            continue;
        }
        assert_eq!(
            star7_degree_closed_form(p).unwrap(),
            expected_star_degree(7, p).unwrap(),
            "level 7 degree formula disagrees at {p}"
        );
    }
}
