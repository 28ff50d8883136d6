mod common;

use instanton_chains::covers::SeifertData;
use instanton_chains::seifert::{brieskorn_data, casson, enumerate_irreducibles};
use instanton_chains::signatures::torus_signature;
use num_integer::Integer;

#[test]
fn torus_signature_matches_seifert_matrix() {
    for p in 2..=7usize {
        for q in p + 1..=11 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let oracle = common::seifert_signature(&common::torus_seifert_matrix(p, q));
            assert_eq!(torus_signature(p as i64, q as i64).unwrap(), oracle, "T({p},{q})");
        }
    }
}

#[test]
fn numeric_solver_brieskorn_spheres() {
    for (p, q, r) in [(2, 3, 5), (2, 3, 7), (2, 3, 11), (2, 5, 7), (3, 4, 5)] {
        let s = brieskorn_data(p, q, r).unwrap();
        let pairs: Vec<(i64, i64)> = s.pairs().iter().map(|x| (x.a, x.b)).collect();
        let numeric = common::numeric_seifert_count([pairs[0], pairs[1], pairs[2]], [1, 1, 1]);
        assert_eq!(enumerate_irreducibles(&s).unwrap().len(), numeric, "Σ({p},{q},{r})");
        assert_eq!(casson(p, q, r).unwrap(), -(numeric as i64) / 2);
    }
}

#[test]
fn numeric_solver_finds_no_irreducibles_on_lens_like_data() {
    // (2,2,n) data with every relator equal to +1 at h = 1: x² = 1 forces x = ±1
    assert_eq!(common::numeric_classes([2, 2, 5], [1, 1, 1]).len(), 0);
    // binary dihedral relations x² = y² = z^n = −1 have irreducible solutions
    assert!(!common::numeric_classes([2, 2, 5], [-1, -1, -1]).is_empty());
}

#[test]
fn casson_matches_torus_signature() {
    // λ(Σ(2,p,q)) = σ(T(p,q)) / 8
    for p in (3..=11i64).step_by(2) {
        for q in (p + 2..=15).step_by(2) {
            if p.gcd(&q) == 1 {
                assert_eq!(8 * casson(2, p, q).unwrap(), torus_signature(p, q).unwrap(), "T({p},{q})");
            }
        }
    }
}

#[test]
fn pretzel_link_data_numeric() {
    // P(2,−3,−6) cover with the relator on the 6-fiber negated
    let s = SeifertData::new(&[(2, 1), (3, -1), (6, -1)]).unwrap();
    assert_eq!(s.pairs().len(), 3);
    assert_eq!(common::numeric_seifert_count([(2, 1), (3, -1), (6, -1)], [1, 1, -1]), 2);
}
