mod common;

use common::{multinomial_oracle, p, pascal, syt_count, Poly};
use num_bigint::BigInt;
use springer::agroup::{hadamard_multiplicities, shape_of, AElement, Subgroup};
use springer::betti::{betti, betti_type_a, type_a_poincare};
use springer::euler::{euler_char, multiplicities, twisted_euler, type_a_recursive};
use springer::exctables::irrep_dim;
use springer::partition::{partitions_of, GroupType, OrbitLabel};
use springer::restrict::{evaluate_at_identity, expand};
use springer::symfunc::{h_to_m, inner_h, mul_h1, mul_hk, SymFunc};
use springer::tworow::{b_two_row, c_two_row, d_two_row, gl_two_row};

fn big(v: i128) -> BigInt {
    BigInt::from(v)
}

fn label(g: GroupType, s: &str) -> OrbitLabel {
    OrbitLabel::unsigned(g, p(s)).unwrap()
}

#[test]
fn type_a_euler_matches_multinomial() {
    for n in 0..=10 {
        for lambda in partitions_of(n) {
            let expected = BigInt::from(multinomial_oracle(&lambda));
            assert_eq!(type_a_recursive(&lambda), expected, "{lambda}");
            assert_eq!(euler_char(&OrbitLabel::unsigned(GroupType::A, lambda.clone()).unwrap()).unwrap(), expected);
            assert_eq!(betti_type_a(&lambda).mass(), expected, "{lambda}");
        }
    }
    assert_eq!(multinomial_oracle(&p("3,3")), 20);
    assert_eq!(multinomial_oracle(&p("2,1")), 3);
}

#[test]
fn type_a_two_row_poincare_is_ballot_difference() {
    for n in 1..=12u32 {
        for j in 0..=n / 2 {
            let i = n - j;
            let lambda = if j == 0 { p(&i.to_string()) } else { p(&format!("{i},{j}")) };
            let got = type_a_poincare(&lambda);
            for k in 0..=j {
                let expected = pascal(n as i64, k as i64) - pascal(n as i64, k as i64 - 1);
                assert_eq!(got[k as usize], big(expected), "({i},{j}) k={k}");
                assert_eq!(gl_two_row(i, j, k), big(expected));
            }
            assert_eq!(got.len() as u32, j + 1, "({i},{j})");
        }
    }
    assert_eq!(type_a_poincare(&p("2,2")), vec![big(1), big(3), big(2)]);
}

#[test]
fn two_row_closed_form_values() {
    // (i, j, k) -> (++, +-, -+, --)
    assert_eq!(b_two_row(1, 1, 0).unwrap(), [big(1), big(0), big(0), big(0)]);
    assert_eq!(b_two_row(1, 1, 1).unwrap(), [big(1), big(0), big(0), big(0)]);
    assert_eq!(b_two_row(3, 1, 1).unwrap(), [big(pascal(2, 1)), big(0), big(1), big(0)]);
    let tenth = big(2 * pascal(5, 2) / 10);
    assert_eq!(b_two_row(5, 3, 2).unwrap(), [big(pascal(4, 2)), big(pascal(4, 0)), tenth, big(0)]);
    assert_eq!(c_two_row(2, 2, 1).unwrap(), (big(pascal(2, 1)), big(pascal(2, 0))));
    assert_eq!(c_two_row(2, 0, 0).unwrap(), (big(1), big(0)));
    assert_eq!(c_two_row(3, 3, 2).unwrap(), (big(pascal(4, 2) / 2), big(0)));
    assert_eq!(d_two_row(3, 3, 1).unwrap(), big(pascal(3, 1)));
    assert!(d_two_row(4, 0, 0).is_err());
}

#[test]
fn hook_lengths_match_tableau_counts() {
    for n in 1..=7 {
        for lambda in partitions_of(n) {
            assert_eq!(irrep_dim(n, &lambda).unwrap(), syt_count(lambda.parts()), "{lambda}");
        }
    }
}

#[test]
fn h_basis_matches_polynomial_expansion() {
    for d in 1..=6 {
        for lambda in partitions_of(d) {
            let mut poly = Poly::one(d as usize);
            for &part in lambda.parts() {
                poly = poly.mul(&Poly::complete(d as usize, part));
            }
            let f = h_to_m(&lambda);
            for mu in partitions_of(d) {
                assert_eq!(f.coeff(&mu), big(poly.m_coeff(&mu)), "h{lambda} at m{mu}");
            }
        }
    }
}

#[test]
fn single_box_rule_matches_polynomial_product() {
    for d in 0..=6u32 {
        let nvars = (d + 1) as usize;
        let h1 = Poly::complete(nvars, 1);
        for mu in partitions_of(d) {
            let product = Poly::monomial(nvars, &mu).mul(&h1);
            let f = mul_h1(&SymFunc::monomial(&mu));
            assert_eq!(f.degree, d + 1);
            for lambda in partitions_of(d + 1) {
                assert_eq!(f.coeff(&lambda), big(product.m_coeff(&lambda)), "m{mu} h_1 at m{lambda}");
            }
        }
    }
}

#[test]
fn general_product_matches_polynomial_product() {
    for d in 0..=4u32 {
        for k in 1..=3u32 {
            let nvars = (d + k) as usize;
            let hk = Poly::complete(nvars, k);
            for mu in partitions_of(d) {
                let product = Poly::monomial(nvars, &mu).mul(&hk);
                let f = mul_hk(&SymFunc::monomial(&mu), k);
                for lambda in partitions_of(d + k) {
                    assert_eq!(f.coeff(&lambda), big(product.m_coeff(&lambda)), "m{mu} h_{k} at m{lambda}");
                }
            }
        }
    }
}

#[test]
fn pairing_examples() {
    assert_eq!(inner_h(&p("2,1"), &h_to_m(&p("2,1"))).unwrap(), big(2));
    for lambda in partitions_of(5) {
        for mu in partitions_of(5) {
            let expected = if lambda == mu { 1 } else { 0 };
            assert_eq!(inner_h(&lambda, &SymFunc::monomial(&mu)).unwrap(), big(expected));
        }
    }
}

#[test]
fn twisted_euler_values() {
    let z13 = AElement::from_generators(&[1, 3]);
    assert_eq!(twisted_euler(GroupType::B, &p("3,1,1"), &z13).unwrap(), big(2));
    assert_eq!(twisted_euler(GroupType::B, &p("3,1,1"), &AElement::identity()).unwrap(), big(4));
    assert_eq!(twisted_euler(GroupType::B, &p("1"), &AElement::identity()).unwrap(), big(1));
    assert_eq!(euler_char(&label(GroupType::D, "3,3")).unwrap(), big(4));
    assert_eq!(euler_char(&label(GroupType::D, "2,2")).unwrap(), big(2));
    let b531 = euler_char(&label(GroupType::B, "5,3,1")).unwrap();
    let parts = euler_char(&label(GroupType::B, "3,3,1")).unwrap() + euler_char(&label(GroupType::B, "5,1,1")).unwrap();
    assert_eq!(b531, big(14));
    assert_eq!(b531, parts);
    assert_eq!(euler_char(&label(GroupType::A, "1,1,1,1")).unwrap(), big(24));
}

#[test]
fn restriction_evaluates_to_twisted_values() {
    let sum = expand(&label(GroupType::B, "3,1,1")).unwrap();
    assert_eq!(evaluate_at_identity(&sum, &AElement::from_generators(&[1, 3])).unwrap(), big(2));
    let sum = expand(&label(GroupType::A, "2,1")).unwrap();
    assert_eq!(sum.terms.len(), 2);
    assert!(sum.terms.iter().all(|t| t.coeff_const == 1 && t.coeff_sgn.is_empty()));
    let sum = expand(&label(GroupType::D, "2,2")).unwrap();
    assert_eq!(sum.terms.len(), 1);
    assert_eq!(sum.terms[0].coeff_const, 2);
    assert_eq!(sum.terms[0].target.partition, p("1,1"));
}

#[test]
fn multiplicity_examples() {
    let m = multiplicities(&label(GroupType::B, "3,1,1"), Subgroup::A).unwrap();
    assert_eq!(m.get("++"), big(3));
    assert_eq!(m.get("+\u{2212}"), big(1));
    let m = multiplicities(&label(GroupType::C, "2,2"), Subgroup::A).unwrap();
    assert_eq!((m.get("+"), m.get("\u{2212}")), (big(3), big(1)));
    let m = multiplicities(&label(GroupType::A, "3,2,1"), Subgroup::A).unwrap();
    assert_eq!(m.total(), big(60));
    assert_eq!(m.iter().count(), 1);
}

#[test]
fn hadamard_examples() {
    let shape = shape_of(GroupType::B, &p("3,1,1")).unwrap();
    let values = [(AElement::identity(), big(4)), (AElement::from_generators(&[1, 3]), big(2))].into_iter().collect();
    let m = hadamard_multiplicities(&shape, &values, Subgroup::A).unwrap();
    assert_eq!((m.get("++"), m.get("+\u{2212}")), (big(3), big(1)));
    let zeros = [(AElement::identity(), big(0)), (AElement::from_generators(&[1, 3]), big(0))].into_iter().collect();
    assert_eq!(hadamard_multiplicities(&shape, &zeros, Subgroup::A).unwrap().total(), big(0));
    let shape = shape_of(GroupType::D, &p("4,4")).unwrap();
    let m = hadamard_multiplicities(&shape, &[(AElement::identity(), big(142))].into_iter().collect(), Subgroup::A).unwrap();
    assert_eq!(m.get("+"), big(142));
}

#[test]
fn graded_examples() {
    let t = betti(&label(GroupType::B, "3,1,1")).unwrap();
    assert_eq!(t.degrees[&0].get("++"), big(1));
    assert_eq!((t.degrees[&2].get("++"), t.degrees[&2].get("+\u{2212}")), (big(2), big(1)));
    let t = betti(&label(GroupType::C, "2,2")).unwrap();
    assert_eq!(t.degrees[&0].get("+"), big(1));
    assert_eq!((t.degrees[&2].get("+"), t.degrees[&2].get("\u{2212}")), (big(2), big(1)));
    let t = betti(&label(GroupType::A, "2,1")).unwrap();
    assert_eq!(t.poincare(), vec![big(1), big(2)]);
    let t = betti(&label(GroupType::A, "1,1")).unwrap();
    assert_eq!(t.poincare(), vec![big(1), big(1)]);
    assert_eq!(betti(&label(GroupType::A, "5")).unwrap().poincare(), vec![big(1)]);
}
