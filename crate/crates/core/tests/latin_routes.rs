//! Three-way agreement between the Latin-square counting routes, and the
//! collection-count table they feed.

use num_bigint::BigUint;
use rainbow_core::latin::{
    count_latin_squares, count_latin_squares_direct, count_latin_via_permanent, count_omega,
    count_omega_via_permanent, count_reduced_latin_squares, rainbow_matrix_of, LatinSquare,
    SlotOrder,
};
use rainbow_core::{construct_same_center, fixtures, StarConfiguration};

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

#[test]
fn three_routes_agree_at_small_sides() {
    for m in 1..=4 {
        let reduced = count_latin_squares(m).unwrap();
        let direct = big(count_latin_squares_direct(m).unwrap());
        let permanent = count_latin_via_permanent(m, false).unwrap();
        assert_eq!(reduced, direct, "side {m}");
        assert_eq!(reduced, permanent, "side {m}");
    }
    // The reduced identity is validated against direct enumeration above
    // before being trusted at sides 5 and 6.
    assert_eq!(
        count_latin_squares(5).unwrap(),
        big(count_latin_squares_direct(5).unwrap())
    );
    assert_eq!(count_latin_squares(6).unwrap(), big(812_851_200));
}

// The side-5 permanent formula sums over 33.5 million matrices; run it with
// `cargo test -- --ignored` when the long route needs re-verification.
#[test]
#[ignore]
fn permanent_route_long_side_five() {
    assert_eq!(
        count_latin_via_permanent(5, true).unwrap(),
        count_latin_squares(5).unwrap()
    );
    assert_eq!(
        count_omega_via_permanent(6, true).unwrap(),
        count_omega(6).unwrap()
    );
}

#[test]
fn omega_table_through_seven() {
    let table = [1u64, 1, 1, 2, 24, 1344, 1_128_960];
    for (i, &want) in table.iter().enumerate() {
        assert_eq!(count_omega(i + 1).unwrap(), big(want), "omega({})", i + 1);
    }
}

#[test]
fn omega_equals_reduced_square_count_directly() {
    // omega(n) = L(n-1) / (n-1)! = (n-2)! * R(n-1); spot-check the identity.
    for n in 2..=7 {
        let m = n - 1;
        let mut fact = big(1);
        for i in 2..n.saturating_sub(1) {
            fact *= big(i as u64);
        }
        assert_eq!(
            count_omega(n).unwrap(),
            fact * big(count_reduced_latin_squares(m).unwrap()),
            "n = {n}"
        );
    }
}

#[test]
fn eq2_route_matches_division_route() {
    for n in 1..=5 {
        assert_eq!(
            count_omega_via_permanent(n, false).unwrap(),
            count_omega(n).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn same_center_matrix_is_the_rotation_square() {
    for n in [4usize, 5] {
        let g = fixtures::star_graph(n, &vec![0; n - 1]).graph;
        let cfg = StarConfiguration::from_graph(&g).unwrap();
        let coll = construct_same_center(&cfg).unwrap();
        let matrix = rainbow_matrix_of(&g, &coll, &SlotOrder::CenterLeaves).unwrap();
        let m = n - 1;
        // Row i is the identity row rotated right by i.
        let expected: Vec<Vec<usize>> = (0..m)
            .map(|i| (0..m).map(|j| (j + m - i) % m).collect())
            .collect();
        assert_eq!(matrix, LatinSquare::from_rows(expected).unwrap(), "n = {n}");
    }
}

#[test]
fn single_edge_matrix_is_trivial() {
    let g = fixtures::star_graph(2, &[0]).graph;
    let cfg = StarConfiguration::from_graph(&g).unwrap();
    let coll = construct_same_center(&cfg).unwrap();
    let matrix = rainbow_matrix_of(&g, &coll, &SlotOrder::CenterLeaves).unwrap();
    assert_eq!(matrix, LatinSquare::from_rows(vec![vec![0]]).unwrap());
}
