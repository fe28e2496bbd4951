//! Exact numerical layer of stability conditions on resolutions of singular
//! curves: central charges, wall-and-chamber decompositions, Euler pairings,
//! Ext computations for the point Auslander algebra, and moduli dimension
//! bookkeeping — all over exact rationals with the genus kept symbolic.

pub mod auslander;
pub mod curve;
pub mod error;
pub mod genus;
pub mod matrix;
pub mod numclass;
pub mod rat;
pub mod moduli;
pub mod stability;
pub mod walls;

pub use auslander::{ModuleMap, QuiverModule, Resolution};
pub use curve::{CurveConfig, CurveKind, Preset, SingKind, SingularityDescriptor};
pub use moduli::{Endpoint, EndpointMap, FiberKind, FlipData, WallCrossingReport};
pub use stability::{ChargeValue, Slope, StabilityParams, SupportConstants};
pub use walls::{
    Chamber, ChamberDecomposition, Decomposition, Hyperplane, ParamRegion, Wall,
};
pub use error::Error;
pub use genus::GenusPoly;
pub use numclass::NumClass;
pub use rat::Rat;
