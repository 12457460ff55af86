//! Cross-check of index straightening against an independent rewriter.
//!
//! The library computes the signed partition for an index vector in one
//! pass (sort the shifted indices, track the permutation sign, detect
//! collisions). The oracle here instead applies the local exchange rule
//!
//!   (..., a, b, ...)  ->  -(..., b-1, a+1, ...)
//!
//! to adjacent out-of-order entries until it reaches a fixed point, then
//! reads off the partition. Both must agree on every input, including the
//! sign and all the ways a vector can collapse to zero.

use jtvo_core::{straighten, Partition, SignedPartition};
use proptest::prelude::*;

/// Exchange-rule rewriter. Works directly on the index vector; each step
/// applies the two-entry exchange to the first adjacent pair whose shifted
/// values `mu_i = v_i - i` are out of order, flipping the sign. A pair with
/// equal shifted values kills the whole vector.
fn rewrite_oracle(v: &[i64]) -> SignedPartition {
    let mut v = v.to_vec();
    let mut sign = 1i8;
    'outer: loop {
        for i in 0..v.len().saturating_sub(1) {
            // Shifted comparison: mu_i < mu_{i+1} iff v_i < v_{i+1} - 1.
            if v[i] == v[i + 1] - 1 {
                return SignedPartition::zero();
            }
            if v[i] < v[i + 1] - 1 {
                let (a, b) = (v[i], v[i + 1]);
                v[i] = b - 1;
                v[i + 1] = a + 1;
                sign = -sign;
                continue 'outer;
            }
        }
        break;
    }
    // Fixed point: entries weakly decrease as a partition candidate. A
    // negative entry means a collision with the implicit zero tail.
    if v.iter().any(|&x| x < 0) {
        return SignedPartition::zero();
    }
    let shape = Partition::new(v).expect("fixed point is weakly decreasing");
    SignedPartition { sign, shape }
}

#[test]
fn oracle_agrees_on_edge_cases() {
    let cases: &[&[i64]] = &[
        &[],
        &[0],
        &[-1],
        &[3],
        &[1, 2],
        &[0, 2],
        &[2, 2],
        &[0, 0],
        &[-1, 1],
        &[-2, 1],
        &[3, 1, 4, 1, 5],
        &[0, 0, 0],
        &[-3, 0, 0],
        &[1, -1, 2],
        &[-1, -1, 4],
        &[6, -2, 3, 0],
    ];
    for v in cases {
        assert_eq!(straighten(v), rewrite_oracle(v), "input {v:?}");
    }
}

#[test]
fn identity_on_already_straight_vectors() {
    for parts in [vec![], vec![4], vec![3, 1], vec![2, 2, 1], vec![5, 3, 3, 1]] {
        let got = straighten(&parts);
        assert_eq!(got.sign, 1);
        assert_eq!(got.shape.parts(), parts.as_slice());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn oracle_agrees_on_random_vectors(v in prop::collection::vec(-4i64..=7, 0..6)) {
        prop_assert_eq!(straighten(&v), rewrite_oracle(&v));
    }

    #[test]
    fn single_exchange_flips_sign(
        v in prop::collection::vec(-4i64..=7, 2..6),
        k in 0usize..4,
    ) {
        // Applying the exchange rule at any position negates the result.
        let i = k % (v.len() - 1);
        let mut w = v.clone();
        w[i] = v[i + 1] - 1;
        w[i + 1] = v[i] + 1;
        let sv = straighten(&v);
        let sw = straighten(&w);
        prop_assert_eq!(sv.shape, sw.shape);
        prop_assert_eq!(sv.sign, -sw.sign);
    }

    #[test]
    fn appending_trailing_zero_preserves_value(v in prop::collection::vec(0i64..=7, 0..5)) {
        // A vector extended by a zero row names the same partition whenever
        // both straighten to something nonzero.
        let mut w = v.clone();
        w.push(0);
        let sv = straighten(&v);
        let sw = straighten(&w);
        if !sv.is_zero() && !sw.is_zero() {
            prop_assert_eq!(sv, sw);
        }
    }
}
