//! Shared fixtures for the benchmark suite.

use curvestab::auslander::{enumerate_submodule_types, submodule_witness, QuiverModule};

/// The nine submodule witnesses of `P2^2`: a deterministic mix of module
/// shapes (zero maps, partial kernels, full projectives) for batched Ext
/// benchmarks.
pub fn witness_batch() -> Vec<QuiverModule> {
    enumerate_submodule_types(2)
        .into_iter()
        .map(|(l1, l2)| submodule_witness(2, l1, l2).expect("feasible pair").0)
        .collect()
}
