//! Numerical geometry of the moduli spaces: dimension formulas, flip data
//! at simple wall decompositions, fiber descriptions of the two endpoint
//! maps, and the assembled wall-crossing report.
//!
//! Everything is computed on the lattice; dimensions and flip exponents are
//! degree-one polynomials in the genus `g` of the normalization and assume
//! `g >= 1` (genus 0 can degenerate and is only flagged, not special-cased).

use serde::Serialize;

use crate::curve::{CurveConfig, CurveKind};
use crate::error::Error;
use crate::genus::GenusPoly;
use crate::numclass::{
    admissible_class, is_primitive, pushforward_class, EulerForm, NumClass,
};
use crate::rat::{Rat, ratz};
use crate::stability::StabilityParams;
use crate::walls::{
    chambers_2d, chamber_side, delta_names, enumerate_walls, orient, wall_hyperplane,
    ParamRegion, Wall,
};

/// `dim M(v) = 1 - chi(v, v)` for the supported curve kinds.
pub fn moduli_dim(v: &NumClass, curve: &CurveConfig) -> Result<GenusPoly, Error> {
    v.check_shape(curve)?;
    let rank: i64 = (0..v.n()).map(|k| v.rk(k)).sum();
    if rank <= 0 {
        return Err(Error::BadClass {
            text: v.to_string(),
            reason: "moduli dimension requires positive rank".into(),
        });
    }
    if !admissible_class(v, curve)? {
        return Err(Error::BadClass {
            text: v.to_string(),
            reason: "class is not admissible for this curve".into(),
        });
    }
    let chi = EulerForm::for_curve(curve)?.pairing(v, v)?;
    Ok(GenusPoly::constant(1) - chi)
}

/// Flip data of a simple two-summand wall decomposition `v = u + w`,
/// oriented so that `u` has the smaller slope near `delta = 0`. Crossing
/// the wall away from zero replaces a projective bundle with fibers
/// `P^(c-1)` by one with fibers `P^(b-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlipData {
    pub u: NumClass,
    pub w: NumClass,
    /// `-chi(u, w)`: the extension dimension on the far side of the wall.
    pub b: GenusPoly,
    /// `-chi(w, u)`: the extension dimension on the near side.
    pub c: GenusPoly,
    /// `dim M(u) + dim M(w)`.
    pub base_dim: GenusPoly,
    /// Projective fiber dimensions `(c - 1, b - 1)` of the two contracted
    /// loci, near side first.
    pub locus_dims: (GenusPoly, GenusPoly),
}

/// Compute the flip data of `v = u + w`. The pair may be given in either
/// order; the ordering convention is applied. Errors with `NotSimpleWall`
/// when the pair is not a simple wall decomposition: a summand is
/// non-primitive or inadmissible, the two classes are proportional, or the
/// wall misses the open parameter region.
pub fn flip_data(u: &NumClass, w: &NumClass, curve: &CurveConfig) -> Result<FlipData, Error> {
    let form = EulerForm::for_curve(curve)?;
    u.check_shape(curve)?;
    w.check_shape(curve)?;
    for side in [u, w] {
        if side.rk(0) <= 0 {
            return Err(Error::NotSimpleWall {
                detail: format!("summand {side} does not have positive rank"),
            });
        }
        if !admissible_class(side, curve)? {
            return Err(Error::NotSimpleWall {
                detail: format!("summand {side} is not admissible"),
            });
        }
        if !is_primitive(side)? {
            return Err(Error::NotSimpleWall {
                detail: format!("summand {side} is not primitive"),
            });
        }
    }
    let v = u + w;
    let h = match wall_hyperplane(&v, u) {
        Ok(h) => h,
        Err(Error::DegenerateWall) => {
            return Err(Error::NotSimpleWall {
                detail: format!("{u} and {w} are numerically proportional: no wall"),
            })
        }
        Err(e) => return Err(e),
    };
    let region = ParamRegion::for_curve(curve);
    if !region.crossed_by(&h, curve)? {
        return Err(Error::NotSimpleWall {
            detail: format!(
                "the locus {} does not cross the parameter region",
                h.equation(&delta_names(curve.m, curve.e))
            ),
        });
    }
    let d = orient(u, 1, w, 1);
    let b = -form.pairing(&d.u, &d.w)?;
    let c = -form.pairing(&d.w, &d.u)?;
    let base_dim = moduli_dim(&d.u, curve)? + moduli_dim(&d.w, curve)?;
    let one = GenusPoly::constant(1);
    let locus_dims = (c.clone() - one.clone(), b.clone() - one);
    Ok(FlipData { u: d.u, w: d.w, b, c, base_dim, locus_dims })
}

/// The two ends of the parameter region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Endpoint {
    /// `delta -> 0`: the pushforward from the normalization dominates.
    NearZero,
    /// `delta ->` the far boundary: the pushforward to the base curve.
    NearOne,
}

/// Fiber of an endpoint map over the locus where it is a bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FiberKind {
    /// `Gr(ambient, sub)`.
    Grassmannian { ambient: i64, sub: i64 },
    /// Two-step flag `{V1 c V2 c C^ambient, dim V_i = l_i}`.
    Flag { l1: i64, l2: i64, ambient: i64 },
    /// The map is proper with no uniform fiber description.
    Unknown,
}

impl FiberKind {
    pub fn dim(&self) -> Option<i64> {
        match self {
            FiberKind::Grassmannian { ambient, sub } => Some(sub * (ambient - sub)),
            FiberKind::Flag { l1, l2, ambient } => {
                Some(l1 * (ambient - l1) + (l2 - l1) * (ambient - l2 + l1))
            }
            FiberKind::Unknown => None,
        }
    }
}

impl std::fmt::Display for FiberKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FiberKind::Grassmannian { ambient, sub } => write!(f, "Gr({ambient}, {sub})"),
            FiberKind::Flag { l1: 1, l2: 2, ambient: 2 } => {
                write!(f, "F(1, 2; C^2) (the Hirzebruch surface F_2)")
            }
            FiberKind::Flag { l1, l2, ambient } => write!(f, "F({l1}, {l2}; C^{ambient})"),
            FiberKind::Unknown => write!(f, "unknown"),
        }
    }
}

/// Numerical description of one endpoint map of the moduli space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndpointMap {
    pub endpoint: Endpoint,
    /// `"M_C~"` (normalization) or `"M_C"` (base curve).
    pub target_space: String,
    pub target_rank: i64,
    pub target_degree: i64,
    pub fiber: FiberKind,
    pub fiber_dim: Option<i64>,
    /// The fiber is a point: the endpoint map is an isomorphism onto its
    /// target.
    pub isomorphism: bool,
    /// The class matches a pullback from the base curve, so the map is
    /// birational onto its image (an isomorphism over the locus of vector
    /// bundles).
    pub birational: bool,
    /// The birational claim is only established for `g >= 1`.
    pub genus_caveat: bool,
}

impl std::fmt::Display for EndpointMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let arrow = match self.endpoint {
            Endpoint::NearZero => "near 0",
            Endpoint::NearOne => "near the far boundary",
        };
        write!(
            f,
            "{arrow}: -> {}({}, {})",
            self.target_space, self.target_rank, self.target_degree
        )?;
        match &self.fiber {
            FiberKind::Unknown => write!(f, ", proper")?,
            fiber => write!(f, ", {fiber}-bundle (fiber dim {})", self.fiber_dim.unwrap())?,
        }
        if self.isomorphism {
            write!(f, ", an isomorphism")?;
        }
        if self.birational {
            write!(f, ", birational onto the image")?;
            if self.genus_caveat {
                write!(f, " (g >= 1)")?;
            }
        }
        Ok(())
    }
}

/// Whether `v` is the class of a pullback from the base curve; only the
/// node-like and tacnode shapes are pinned down, everything else refuses.
fn pullback_pattern(v: &NumClass, curve: &CurveConfig) -> bool {
    let r = v.rk(0);
    match curve.kind() {
        CurveKind::NodeOrCusp => {
            curve.sing_points[0].preimages.len() == 2 && v.ell(0, 1) == r
        }
        CurveKind::Tacnode => v.ell(0, 1) == r && v.ell(0, 2) == 2 * r,
        CurveKind::Generic => false,
    }
}

/// Describe an endpoint map of `M(v)`: its target moduli space and, near
/// zero, the Grassmannian/flag bundle structure of the fibers.
pub fn fiber_description(
    v: &NumClass,
    endpoint: Endpoint,
    curve: &CurveConfig,
) -> Result<EndpointMap, Error> {
    v.check_shape(curve)?;
    let kind = curve.kind();
    if kind == CurveKind::Generic {
        return Err(Error::UnsupportedKind {
            kind: "generic".into(),
            what: "endpoint fiber description".into(),
        });
    }
    let r = v.rk(0);
    if r <= 0 {
        return Err(Error::BadClass {
            text: v.to_string(),
            reason: "endpoint maps require positive rank".into(),
        });
    }
    if !admissible_class(v, curve)? {
        return Err(Error::BadClass {
            text: v.to_string(),
            reason: "class is not admissible for this curve".into(),
        });
    }
    match endpoint {
        Endpoint::NearZero => {
            let fiber = match kind {
                CurveKind::NodeOrCusp => {
                    FiberKind::Grassmannian { ambient: 2 * r, sub: v.ell(0, 1) }
                }
                CurveKind::Tacnode => {
                    FiberKind::Flag { l1: v.ell(0, 1), l2: v.ell(0, 2), ambient: 2 * r }
                }
                CurveKind::Generic => unreachable!(),
            };
            let fiber_dim = fiber.dim();
            Ok(EndpointMap {
                endpoint,
                target_space: "M_C~".into(),
                target_rank: r,
                target_degree: v.deg(0),
                isomorphism: fiber_dim == Some(0),
                fiber,
                fiber_dim,
                birational: false,
                genus_caveat: false,
            })
        }
        Endpoint::NearOne => {
            let (rb, db) = pushforward_class(v, curve)?;
            let birational = pullback_pattern(v, curve);
            Ok(EndpointMap {
                endpoint,
                target_space: "M_C".into(),
                target_rank: rb,
                target_degree: db,
                fiber: FiberKind::Unknown,
                fiber_dim: None,
                isomorphism: false,
                birational,
                genus_caveat: birational && kind == CurveKind::Tacnode,
            })
        }
    }
}

/// One chamber row of a report: a labeled open cell with a rational sample
/// point; node-path chambers also carry their `t` interval.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportChamber {
    pub label: String,
    #[serde(with = "crate::rat::rat_vec")]
    pub sample: Vec<Rat>,
    /// `[lo, hi]` on the node path; empty otherwise.
    #[serde(with = "crate::rat::rat_vec")]
    pub interval: Vec<Rat>,
    pub bounding_walls: Vec<usize>,
}

/// Flip data attached to one simple decomposition of one wall.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlipRecord {
    pub wall: usize,
    pub decomp: usize,
    pub data: FlipData,
}

/// The assembled wall-crossing picture of a class: walls, chambers, flips
/// at the simple decompositions, endpoint maps, and the side table of every
/// chamber against every wall.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WallCrossingReport {
    pub class: NumClass,
    pub kind: String,
    pub dim: Option<GenusPoly>,
    pub walls: Vec<Wall>,
    pub chambers: Vec<ReportChamber>,
    pub flips: Vec<FlipRecord>,
    pub endpoints: Vec<EndpointMap>,
    /// `sides[chamber][wall][decomp]`: `-1` when the `u` side has the
    /// smaller slope at the chamber sample, `1` otherwise.
    pub sides: Vec<Vec<Vec<i8>>>,
    pub notes: Vec<String>,
}

fn params_at(curve: &CurveConfig, sample: &[Rat]) -> StabilityParams {
    let delta: Vec<Vec<Rat>> =
        sample.chunks(curve.e).map(|row| row.to_vec()).collect();
    StabilityParams::unit_scalars(curve.n, delta)
}

/// Build the full report over the given region. Validation (primitivity,
/// rank, admissibility) is inherited from the wall enumeration.
pub fn wall_crossing_report(
    v: &NumClass,
    curve: &CurveConfig,
    region: ParamRegion,
) -> Result<WallCrossingReport, Error> {
    let kind = curve.kind();
    let supported = kind != CurveKind::Generic;

    let (walls, chambers) = if region == ParamRegion::TacnodeTriangle {
        let dec = chambers_2d(v, curve)?;
        let chambers = dec
            .chambers
            .into_iter()
            .map(|c| ReportChamber {
                label: c.label,
                sample: c.sample,
                interval: Vec::new(),
                bounding_walls: c.bounding_walls,
            })
            .collect();
        (dec.walls, chambers)
    } else if let Some((lo, hi)) = region.interval(curve)? {
        let walls = enumerate_walls(v, region, curve)?;
        let mut cuts = vec![lo];
        cuts.extend(walls.iter().map(|w| w.locus_t.clone().expect("1d wall locus")));
        cuts.push(hi);
        let chambers = cuts
            .windows(2)
            .enumerate()
            .map(|(i, pair)| {
                let mut bounding = Vec::new();
                if i > 0 {
                    bounding.push(i - 1);
                }
                if i < walls.len() {
                    bounding.push(i);
                }
                ReportChamber {
                    label: format!("C{}", i + 1),
                    sample: vec![(&pair[0] + &pair[1]) / ratz(2)],
                    interval: pair.to_vec(),
                    bounding_walls: bounding,
                }
            })
            .collect();
        (walls, chambers)
    } else {
        (enumerate_walls(v, region, curve)?, Vec::new())
    };

    let mut flips = Vec::new();
    if supported {
        for (wi, wall) in walls.iter().enumerate() {
            for (di, d) in wall.decomps.iter().enumerate() {
                if d.is_simple() {
                    flips.push(FlipRecord {
                        wall: wi,
                        decomp: di,
                        data: flip_data(&d.u, &d.w, curve)?,
                    });
                }
            }
        }
    }

    let endpoints = if supported {
        vec![
            fiber_description(v, Endpoint::NearZero, curve)?,
            fiber_description(v, Endpoint::NearOne, curve)?,
        ]
    } else {
        Vec::new()
    };

    let mut sides = Vec::with_capacity(chambers.len());
    for chamber in &chambers {
        let params = params_at(curve, &chamber.sample);
        let mut per_wall = Vec::with_capacity(walls.len());
        for wall in &walls {
            let orders = chamber_side(&params, wall)?;
            per_wall.push(
                orders
                    .into_iter()
                    .map(|o| match o {
                        std::cmp::Ordering::Less => -1,
                        std::cmp::Ordering::Equal => 0,
                        std::cmp::Ordering::Greater => 1,
                    })
                    .collect(),
            );
        }
        sides.push(per_wall);
    }

    let mut notes = vec![
        "walls are numerical: only the rank, admissibility and region conditions \
         are checked, so a wall may bound empty semistable loci"
            .to_string(),
    ];
    if supported {
        notes.push(
            "dimensions and flip exponents are polynomials in the genus g of the \
             normalization and assume g >= 1"
                .to_string(),
        );
    } else {
        notes.push(
            "chamber geometry, flips and endpoint maps are reported only for the \
             node/cusp and tacnode kinds"
                .to_string(),
        );
    }

    Ok(WallCrossingReport {
        class: v.clone(),
        kind: kind.to_string(),
        dim: if supported { Some(moduli_dim(v, curve)?) } else { None },
        walls,
        chambers,
        flips,
        endpoints,
        sides,
        notes,
    })
}
