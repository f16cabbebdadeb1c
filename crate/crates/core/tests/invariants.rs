//! Exhaustive invariant checks over all labels up to a size bound.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::p;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use springer::agroup::{push_h, push_v, shape_of, AElement, Subgroup};
use springer::euler::{euler_char, multiplicities, twisted_euler};
use springer::partition::{enumerate, is_very_even, partitions_of, validate, GroupType, OrbitLabel, Partition, Sign};
use springer::restrict::{expand, Removal};
use springer::symfunc::h_to_m;

type Push = Box<dyn Fn(&AElement) -> AElement>;

const BCD: [GroupType; 3] = [GroupType::B, GroupType::C, GroupType::D];

fn labels_up_to(max: u32) -> Vec<(GroupType, Partition)> {
    let mut out = Vec::new();
    for n in 1..=max {
        for lambda in partitions_of(n) {
            for g in BCD {
                if validate(g, &lambda) {
                    out.push((g, lambda.clone()));
                }
            }
        }
    }
    out
}

/// Partitions of `n` with parts at most `max`, generated independently of the crate.
fn brute_partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in brute_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn enumerate_matches_brute_force() {
    for g in GroupType::ALL {
        for rank in 0..=7 {
            let got = enumerate(g, rank);
            let unique: BTreeSet<&Partition> = got.iter().collect();
            assert_eq!(unique.len(), got.len(), "{g} rank {rank} has duplicates");
            let expected: BTreeSet<Partition> = brute_partitions(g.label_size(rank), u32::MAX)
                .into_iter()
                .map(|v| Partition::new(v).unwrap())
                .filter(|l| validate(g, l))
                .collect();
            assert_eq!(unique.into_iter().cloned().collect::<BTreeSet<_>>(), expected, "{g} rank {rank}");
        }
    }
    assert_eq!(enumerate(GroupType::C, 1), vec![p("2"), p("1,1")]);
    assert_eq!(enumerate(GroupType::B, 0), vec![p("1")]);
    assert_eq!(enumerate(GroupType::A, 3), vec![p("3"), p("2,1"), p("1,1,1")]);
}

#[test]
fn recursion_removals_preserve_type() {
    for (g, lambda) in labels_up_to(14) {
        for (&i, &r) in lambda.mults().iter() {
            if g.is_special_part(i) && i >= 2 {
                let child = lambda.remove_h(i).unwrap();
                assert!(validate(g, &child), "{g} {lambda} h{i} -> {child}");
                assert_eq!(child.size() + 2, lambda.size());
                if g == GroupType::D {
                    assert!(!is_very_even(g, &child).unwrap(), "D {lambda} h{i} -> very even {child}");
                }
            }
            if r >= 2 {
                let child = lambda.remove_v(i).unwrap();
                assert!(validate(g, &child), "{g} {lambda} v{i} -> {child}");
            }
        }
    }
}

#[test]
fn expansion_targets_are_valid_children() {
    for (g, lambda) in labels_up_to(12) {
        let Ok(sum) = expand(&OrbitLabel::unsigned(g, lambda.clone()).unwrap()) else { continue };
        for t in &sum.terms {
            assert_eq!(t.target.group, g);
            assert!(validate(g, &t.target.partition), "{g} {lambda} -> {}", t.target.partition);
            assert_eq!(t.target.partition.size() + 2, lambda.size());
            if matches!(t.removal, Removal::H { .. }) && g == GroupType::D {
                assert!(t.target.sign.is_none());
            }
        }
    }
}

#[test]
fn type_a_expansion_coefficients_count_rows() {
    for n in 1..=9 {
        for lambda in partitions_of(n) {
            let sum = expand(&OrbitLabel::unsigned(GroupType::A, lambda.clone()).unwrap()).unwrap();
            let total: i64 = sum.terms.iter().map(|t| t.coeff_const).sum();
            assert_eq!(total, lambda.len() as i64, "{lambda}");
            assert!(sum.terms.iter().all(|t| matches!(t.removal, Removal::Box { .. })));
        }
    }
}

#[test]
fn push_maps_are_homomorphisms() {
    for (g, lambda) in labels_up_to(12) {
        let parent = shape_of(g, &lambda).unwrap();
        let elements = parent.elements(Subgroup::Atilde);
        for (&i, &r) in lambda.mults().iter() {
            let mut pushes: Vec<(_, Push)> = Vec::new();
            if g.is_special_part(i) && i >= 2 {
                let child = shape_of(g, &lambda.remove_h(i).unwrap()).unwrap();
                let par = parent.clone();
                pushes.push(("h", Box::new(move |z| push_h(&par, &child, z, i))));
            }
            if r >= 2 {
                let child = shape_of(g, &lambda.remove_v(i).unwrap()).unwrap();
                let par = parent.clone();
                pushes.push(("v", Box::new(move |z| push_v(&par, &child, z, i))));
            }
            for (kind, push) in &pushes {
                assert!(push(&AElement::identity()).is_identity());
                for x in &elements {
                    for y in &elements {
                        assert_eq!(push(&x.mul(y)), push(x).mul(&push(y)), "{g} {lambda} {kind}{i} {x} {y}");
                    }
                }
            }
        }
    }
}

#[test]
fn normalize_is_idempotent() {
    for (g, lambda) in labels_up_to(12) {
        let shape = shape_of(g, &lambda).unwrap();
        let raw: Vec<u32> = lambda.parts().iter().chain(lambda.parts()).chain(&[1, 2, 3]).copied().collect();
        for take in 0..raw.len() {
            let once = shape.normalize(&raw[..take]);
            assert_eq!(shape.normalize(once.support()), once);
            assert!(shape.contains(&once));
        }
    }
}

#[test]
fn euler_is_positive_and_bounds_traces() {
    for (g, lambda) in labels_up_to(16) {
        let ec = euler_char(&OrbitLabel::unsigned(g, lambda.clone()).unwrap()).unwrap();
        assert!(ec > BigInt::zero(), "{g} {lambda}");
        if lambda.size() <= 14 {
            for z in shape_of(g, &lambda).unwrap().elements(Subgroup::Atilde) {
                let t = twisted_euler(g, &lambda, &z).unwrap();
                assert!(t.abs() <= ec, "{g} {lambda} {z}: {t} vs {ec}");
            }
        }
    }
}

#[test]
fn multiplicities_resum_to_traces() {
    for (g, lambda) in labels_up_to(12) {
        let label = OrbitLabel::unsigned(g, lambda.clone()).unwrap();
        let shape = shape_of(g, &lambda).unwrap();
        for over in [Subgroup::A, Subgroup::Atilde] {
            let m = multiplicities(&label, over).unwrap();
            let by_name: BTreeMap<String, _> = shape.characters(over).into_iter().map(|c| (c.name(&shape), c)).collect();
            for z in shape.elements(over) {
                let resum: BigInt = m.iter().map(|(name, v)| v * by_name[name].value(&z)).sum();
                assert_eq!(resum, twisted_euler(g, &lambda, &z).unwrap(), "{g} {lambda} over {over} at {z}");
            }
        }
    }
}

#[test]
fn a_multiplicities_are_sums_over_negation_classes() {
    for (g, lambda) in labels_up_to(12) {
        let label = OrbitLabel::unsigned(g, lambda.clone()).unwrap();
        let shape = shape_of(g, &lambda).unwrap();
        let over_a = multiplicities(&label, Subgroup::A).unwrap();
        let over_t = multiplicities(&label, Subgroup::Atilde).unwrap();
        let mut summed: BTreeMap<String, BigInt> = BTreeMap::new();
        for chi in shape.characters(Subgroup::Atilde) {
            let a_name = shape.restrict_to_a(&chi).name(&shape);
            *summed.entry(a_name).or_default() += over_t.get(&chi.name(&shape));
        }
        for (name, v) in over_a.iter() {
            assert_eq!(summed.get(name).cloned().unwrap_or_default(), *v, "{g} {lambda} {name}");
        }
        assert_eq!(over_a.total(), summed.values().sum::<BigInt>());
    }
}

#[test]
fn very_even_signs_agree() {
    for n in (4..=16).step_by(4) {
        for lambda in partitions_of(n) {
            if !validate(GroupType::D, &lambda) || !is_very_even(GroupType::D, &lambda).unwrap() {
                continue;
            }
            let plus = OrbitLabel::new(GroupType::D, lambda.clone(), Some(Sign::Plus)).unwrap();
            let minus = OrbitLabel::new(GroupType::D, lambda.clone(), Some(Sign::Minus)).unwrap();
            assert_eq!(euler_char(&plus).unwrap(), euler_char(&minus).unwrap());
            assert_eq!(multiplicities(&plus, Subgroup::A).unwrap(), multiplicities(&minus, Subgroup::A).unwrap());
            assert_eq!(springer::betti::betti(&plus).ok(), springer::betti::betti(&minus).ok());
            let (ep, em) = (expand(&plus).unwrap(), expand(&minus).unwrap());
            assert_eq!(ep.terms, em.terms);
        }
    }
}

#[test]
fn h_basis_coefficients_are_positive() {
    // every pair of margins admits a nonnegative integer matrix, so no coefficient vanishes
    for n in 1..=8 {
        for lambda in partitions_of(n) {
            let f = h_to_m(&lambda);
            assert_eq!(f.coeffs.len(), partitions_of(n).len(), "h{lambda}");
            assert!(f.coeffs.values().all(|c| c > &BigInt::zero()), "h{lambda}");
        }
    }
}
