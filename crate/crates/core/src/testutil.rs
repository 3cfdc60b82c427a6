use std::f64::consts::PI;

use proptest::prelude::*;

use crate::lhv::SimpleFunctionSpec;
use crate::outcome::Outcome;

/// Specs with up to `max_k` pieces, breakpoints on a fine grid.
pub fn arb_spec(max_k: usize) -> impl Strategy<Value = SimpleFunctionSpec> {
    (
        prop::collection::btree_set(1u32..1_000_000, 0..max_k),
        any::<bool>(),
    )
        .prop_map(|(set, plus)| {
            let b = set.into_iter().map(|v| f64::from(v) * PI / 1e6).collect();
            let s = if plus { Outcome::Plus } else { Outcome::Minus };
            SimpleFunctionSpec::new(b, s).unwrap()
        })
}
