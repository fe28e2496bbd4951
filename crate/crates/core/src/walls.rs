//! Numerical walls for a primitive positive-rank class: hyperplanes in the
//! delta-parameters where a decomposition has equal slopes, their canonical
//! two-ray decompositions, wall loci on the node path, and the chamber
//! decomposition of the tacnode triangle.
//!
//! Everything here is necessary-condition bookkeeping on the lattice: a
//! "wall" is reported when a decomposition satisfies the rank bound and the
//! surjectivity bounds on the module invariants and its hyperplane meets the
//! open parameter region. Nonemptiness of the semistable loci is a geometric
//! question and is not checked; every `Wall` therefore carries
//! `numerical: true`.
//!
//! Scalars `alpha = gamma = 1`, `beta = 0` are fixed throughout, so walls
//! live in the delta-coordinates alone.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::curve::{CurveConfig, CurveKind};
use crate::error::Error;
use crate::numclass::{admissible_class, is_primitive, NumClass};
use crate::rat::{rat, ratz, Rat};
use crate::stability::{slope_order, StabilityParams};

/// The slice of parameter space a wall computation ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamRegion {
    /// `t` in `(0, 1)` on a one-node (or cusp) curve.
    NodePath,
    /// `delta1, delta2 > 0`, `delta1 + delta2 < 1`.
    TacnodeTriangle,
    /// `delta_ij > 0`, `sum_j l(I^(e-j)|_p) delta_ij < 1` at every preimage
    /// point `p`.
    GenericBox,
}

impl ParamRegion {
    /// The natural region for a curve. The unit path `(0, 1)` is only
    /// correct when every preimage point has length one there (the node);
    /// a cusp has a single length-2 preimage and gets the generic box
    /// `2 delta < 1` instead.
    pub fn for_curve(curve: &CurveConfig) -> ParamRegion {
        match curve.kind() {
            CurveKind::NodeOrCusp
                if curve.sing_points[0].preimages.iter().all(|p| p.lengths == [1]) =>
            {
                ParamRegion::NodePath
            }
            CurveKind::Tacnode => ParamRegion::TacnodeTriangle,
            _ => ParamRegion::GenericBox,
        }
    }

    /// For a one-dimensional delta space: the interval `(0, hi)` the region
    /// occupies. `None` for higher-dimensional regions.
    pub fn interval(&self, curve: &CurveConfig) -> Result<Option<(Rat, Rat)>, Error> {
        if curve.m * curve.e != 1 {
            return Ok(None);
        }
        let (vertices, _) = self.closure_data(curve)?;
        let hi = vertices
            .iter()
            .map(|v| v[0].clone())
            .max()
            .unwrap_or_else(Rat::zero);
        Ok(Some((Rat::zero(), hi)))
    }

    fn check_shape(&self, curve: &CurveConfig) -> Result<(), Error> {
        let ok = match self {
            ParamRegion::NodePath => curve.m == 1 && curve.e == 1,
            ParamRegion::TacnodeTriangle => curve.m == 1 && curve.e == 2,
            ParamRegion::GenericBox => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                what: "parameter region vs curve".into(),
                expected: format!("{self:?}-compatible (m, e)"),
                got: format!("m={}, e={}", curve.m, curve.e),
            })
        }
    }

    /// An interior point, in flattened `m*e` delta-coordinates.
    pub fn sample(&self, curve: &CurveConfig) -> Vec<Rat> {
        match self {
            ParamRegion::NodePath => vec![rat(1, 2)],
            ParamRegion::TacnodeTriangle => vec![rat(1, 3), rat(1, 3)],
            ParamRegion::GenericBox => {
                let worst = curve
                    .sing_points
                    .iter()
                    .flat_map(|q| q.preimages.iter())
                    .map(|p| p.lengths.iter().sum::<u64>())
                    .max()
                    .unwrap_or(0);
                vec![rat(1, worst as i64 + 1); curve.m * curve.e]
            }
        }
    }

    /// Whether the hyperplane separates the open region: true iff it takes
    /// both strict signs there.
    pub fn crossed_by(&self, h: &Hyperplane, curve: &CurveConfig) -> Result<bool, Error> {
        if h.coeffs.len() != curve.m * curve.e {
            return Err(Error::ShapeMismatch {
                what: "hyperplane vs curve".into(),
                expected: format!("{} coefficients", curve.m * curve.e),
                got: format!("{}", h.coeffs.len()),
            });
        }
        let (vertices, unbounded) = self.closure_data(curve)?;
        h.meets_open(&vertices, &unbounded, curve.e)
    }

    /// Open-region membership of a flattened delta vector.
    pub fn contains(&self, curve: &CurveConfig, delta: &[Rat]) -> Result<bool, Error> {
        self.check_shape(curve)?;
        if delta.len() != curve.m * curve.e {
            return Err(Error::ShapeMismatch {
                what: "delta coordinates".into(),
                expected: format!("{}", curve.m * curve.e),
                got: format!("{}", delta.len()),
            });
        }
        if !delta.iter().all(|d| d.is_positive()) {
            return Ok(false);
        }
        match self {
            ParamRegion::NodePath => Ok(delta[0] < Rat::one()),
            ParamRegion::TacnodeTriangle => Ok(&delta[0] + &delta[1] < Rat::one()),
            ParamRegion::GenericBox => {
                for (i, q) in curve.sing_points.iter().enumerate() {
                    for p in &q.preimages {
                        let mut weighted = Rat::zero();
                        for j in 0..curve.e {
                            weighted += ratz(p.lengths[j] as i64) * &delta[i * curve.e + j];
                        }
                        if weighted >= Rat::one() {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
        }
    }

    /// Vertices of the region closure (flattened coordinates) plus a flag
    /// per coordinate marking directions in which the closure is unbounded
    /// (those coordinates are pinned to 0 in the vertex list).
    fn closure_data(&self, curve: &CurveConfig) -> Result<(Vec<Vec<Rat>>, Vec<bool>), Error> {
        self.check_shape(curve)?;
        match self {
            ParamRegion::NodePath => Ok((vec![vec![ratz(0)], vec![ratz(1)]], vec![false])),
            ParamRegion::TacnodeTriangle => Ok((
                vec![
                    vec![ratz(0), ratz(0)],
                    vec![ratz(1), ratz(0)],
                    vec![ratz(0), ratz(1)],
                ],
                vec![false, false],
            )),
            ParamRegion::GenericBox => {
                let mut unbounded = Vec::new();
                let mut per_point: Vec<Vec<Vec<Rat>>> = Vec::new();
                for q in &curve.sing_points {
                    let (verts, unb) = point_polytope_vertices(curve.e, q)?;
                    per_point.push(verts);
                    unbounded.extend(unb);
                }
                // vertices of a product are products of vertices
                let mut acc: Vec<Vec<Rat>> = vec![Vec::new()];
                for verts in per_point {
                    acc = acc
                        .into_iter()
                        .flat_map(|prefix| {
                            verts.iter().map(move |v| {
                                let mut next = prefix.clone();
                                next.extend(v.iter().cloned());
                                next
                            })
                        })
                        .collect();
                }
                Ok((acc, unbounded))
            }
        }
    }
}

/// Vertices of `{x >= 0, sum_j lengths_j(p) x_j <= 1 for each preimage p}`
/// in the coordinates where some length is positive; coordinates with no
/// positive length anywhere are unbounded and pinned to zero.
fn point_polytope_vertices(
    e: usize,
    q: &crate::curve::SingPoint,
) -> Result<(Vec<Vec<Rat>>, Vec<bool>), Error> {
    let unbounded: Vec<bool> =
        (0..e).map(|j| q.preimages.iter().all(|p| p.lengths[j] == 0)).collect();
    let bounded: Vec<usize> = (0..e).filter(|&j| !unbounded[j]).collect();
    let dim = bounded.len();

    // constraint rows over the bounded coordinates: a . x <= b
    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (pos, _) in bounded.iter().enumerate() {
        let mut a = vec![Rat::zero(); dim];
        a[pos] = ratz(-1);
        rows.push((a, Rat::zero())); // -x_j <= 0
    }
    for p in &q.preimages {
        let a: Vec<Rat> = bounded.iter().map(|&j| ratz(p.lengths[j] as i64)).collect();
        rows.push((a, Rat::one()));
    }

    let mut vertices: BTreeSet<Vec<Rat>> = BTreeSet::new();
    if dim == 0 {
        vertices.insert(Vec::new());
    } else {
        for mask in 0u32..(1 << rows.len()) {
            if mask.count_ones() as usize != dim {
                continue;
            }
            let chosen: Vec<usize> =
                (0..rows.len()).filter(|k| mask & (1 << k) != 0).collect();
            let mat = crate::matrix::Mat::from_fn(dim, dim, |r, c| rows[chosen[r]].0[c].clone());
            if mat.rank() < dim {
                continue;
            }
            let rhs: Vec<Rat> = chosen.iter().map(|&k| rows[k].1.clone()).collect();
            let Some(x) = mat.solve(&rhs)? else { continue };
            let feasible = rows.iter().all(|(a, b)| {
                let lhs: Rat = a.iter().zip(&x).map(|(ai, xi)| ai * xi).sum();
                lhs <= *b
            });
            if feasible {
                vertices.insert(x);
            }
        }
    }

    // re-embed into all e coordinates with unbounded ones at zero
    let embedded = vertices
        .into_iter()
        .map(|v| {
            let mut full = vec![Rat::zero(); e];
            for (pos, &j) in bounded.iter().enumerate() {
                full[j] = v[pos].clone();
            }
            full
        })
        .collect();
    Ok((embedded, unbounded))
}

/// An integer-cleared affine functional `sum c_ij delta_ij = c0`, normalized
/// so that `gcd(c, c0) = 1` and the first nonzero coefficient is positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Hyperplane {
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Hyperplane {
    fn normalized(coeffs: Vec<i64>, constant: i64) -> Result<Hyperplane, Error> {
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::DegenerateWall);
        }
        let mut g = constant.unsigned_abs();
        for &c in &coeffs {
            g = gcd_u64(g, c.unsigned_abs());
        }
        let g = g as i64; // >= 1: some coefficient is nonzero
        let mut coeffs: Vec<i64> = coeffs.iter().map(|c| c / g).collect();
        let mut constant = constant / g;
        let first = coeffs.iter().copied().find(|&c| c != 0).expect("nonzero functional");
        if first < 0 {
            for c in &mut coeffs {
                *c = -*c;
            }
            constant = -constant;
        }
        Ok(Hyperplane { coeffs, constant })
    }

    /// `sum c_ij delta_ij - c0` at a flattened delta vector.
    pub fn eval(&self, delta: &[Rat]) -> Rat {
        let mut acc = -ratz(self.constant);
        for (c, d) in self.coeffs.iter().zip(delta) {
            acc += ratz(*c) * d;
        }
        acc
    }

    /// For a one-dimensional path: the locus `t = c0 / c`.
    pub fn node_t(&self) -> Option<Rat> {
        if self.coeffs.len() == 1 && self.coeffs[0] != 0 {
            Some(rat(self.constant, self.coeffs[0]))
        } else {
            None
        }
    }

    /// `"2d1 + 4d2 = 1"` with the given variable names.
    pub fn equation(&self, names: &[String]) -> String {
        let mut lhs = String::new();
        for (c, name) in self.coeffs.iter().zip(names) {
            if *c == 0 {
                continue;
            }
            if lhs.is_empty() {
                if *c < 0 {
                    lhs.push('-');
                }
            } else {
                lhs.push_str(if *c < 0 { " - " } else { " + " });
            }
            let a = c.unsigned_abs();
            if a != 1 {
                lhs.push_str(&a.to_string());
            }
            lhs.push_str(name);
        }
        format!("{} = {}", lhs, self.constant)
    }

    /// Whether the hyperplane meets the open region with the given closure
    /// vertices: a linear functional changes sign on the open region iff it
    /// takes both strict signs over the closure vertices.
    fn meets_open(
        &self,
        vertices: &[Vec<Rat>],
        unbounded: &[bool],
        e: usize,
    ) -> Result<bool, Error> {
        for (idx, &unb) in unbounded.iter().enumerate() {
            if unb && self.coeffs[idx] != 0 {
                return Err(Error::UnboundedRegion { i: idx / e, j: idx % e + 1 });
            }
        }
        let mut saw_neg = false;
        let mut saw_pos = false;
        for v in vertices {
            let val = self.eval(v);
            saw_neg |= val.is_negative();
            saw_pos |= val.is_positive();
        }
        Ok(saw_neg && saw_pos)
    }
}

/// Variable names for the delta-coordinates: `t` on a path, `d1..de` for a
/// single singular point, `di_j` in general.
pub fn delta_names(m: usize, e: usize) -> Vec<String> {
    if m == 1 && e == 1 {
        vec!["t".into()]
    } else if m == 1 {
        (1..=e).map(|j| format!("d{j}")).collect()
    } else {
        (1..=m).flat_map(|i| (1..=e).map(move |j| format!("d{i}_{j}"))).collect()
    }
}

/// The equal-slope hyperplane of the decomposition `v = u + (v - u)`:
/// `sum_ij (l_ij(v) r_u - l_ij(u) r_v) delta_ij = d_v r_u - d_u r_v`,
/// normalized.
pub fn wall_hyperplane(v: &NumClass, u: &NumClass) -> Result<Hyperplane, Error> {
    assert_eq!((v.n(), v.m(), v.e()), (u.n(), u.m(), u.e()), "class shape mismatch");
    let r_v: i64 = (0..v.n()).map(|k| v.rk(k)).sum();
    let r_u: i64 = (0..u.n()).map(|k| u.rk(k)).sum();
    if !(r_v > r_u && r_u > 0) {
        return Err(Error::RankBound { rank_v: r_v, rank_u: r_u });
    }
    let d_v: i64 = (0..v.n()).map(|k| v.deg(k)).sum();
    let d_u: i64 = (0..u.n()).map(|k| u.deg(k)).sum();
    let mut coeffs = Vec::with_capacity(v.m() * v.e());
    for i in 0..v.m() {
        for j in 1..=v.e() {
            coeffs.push(v.ell(i, j) * r_u - u.ell(i, j) * r_v);
        }
    }
    Hyperplane::normalized(coeffs, d_v * r_u - d_u * r_v)
}

/// Wall locus on the node path: `t = (d_u r - d r_u) / (l_u r - l r_u)`,
/// or `None` when the denominator vanishes, the ranks are out of bounds, or
/// the solution leaves the open interval `(0, 1)`.
pub fn wall_t(v: &NumClass, u: &NumClass) -> Option<Rat> {
    let (r, d, l) = v.node_parts()?;
    let (rp, dp, lp) = u.node_parts()?;
    if !(0 < rp && rp < r) {
        return None;
    }
    let den = lp * r - l * rp;
    if den == 0 {
        return None;
    }
    let t = rat(dp * r - d * rp, den);
    if t.is_positive() && t < Rat::one() {
        Some(t)
    } else {
        None
    }
}

/// One canonical decomposition `v = mult_u * u + mult_w * w` on a wall. The
/// `u` side is the summand whose slope is smaller near `delta = 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Decomposition {
    pub u: NumClass,
    pub mult_u: u64,
    pub w: NumClass,
    pub mult_w: u64,
}

impl Decomposition {
    pub fn is_simple(&self) -> bool {
        self.mult_u == 1
            && self.mult_w == 1
            && is_primitive(&self.u).unwrap_or(false)
            && is_primitive(&self.w).unwrap_or(false)
    }

    /// `mult_u * u + mult_w * w`.
    pub fn total(&self) -> NumClass {
        &self.u.scale(self.mult_u as i64) + &self.w.scale(self.mult_w as i64)
    }
}

impl std::fmt::Display for Decomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let side = |mult: u64, class: &NumClass| {
            if mult == 1 {
                format!("{class}")
            } else {
                format!("{mult}{class}")
            }
        };
        write!(f, "{} + {}", side(self.mult_u, &self.u), side(self.mult_w, &self.w))
    }
}

/// A numerical wall: one hyperplane with every canonical decomposition of
/// `v` supported on it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Wall {
    pub hyperplane: Hyperplane,
    pub decomps: Vec<Decomposition>,
    /// The locus `t` when the region is the node path.
    #[serde(with = "crate::rat::rat_opt", skip_serializing_if = "Option::is_none")]
    pub locus_t: Option<Rat>,
    /// Single decomposition with both sides primitive and multiplicity one.
    pub simple: bool,
    /// Always true: only necessary numerical conditions are checked, so a
    /// wall may be a pseudo-wall with empty semistable loci.
    pub numerical: bool,
}

/// True iff the wall carries exactly one decomposition, with both
/// multiplicities one and both classes primitive.
pub fn is_simple_wall(wall: &Wall) -> bool {
    wall.decomps.len() == 1 && wall.decomps[0].is_simple()
}

/// All integer vectors `0 <= x_k <= bounds[k]`.
fn integer_boxes(bounds: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b.max(0)).map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    out
}

/// Upper bounds `rank * sum_p l(I^(e-j)|_p)` for the module coordinates of
/// an admissible class of the given rank (the admissible set is a subset of
/// this box).
fn ell_bounds(curve: &CurveConfig, rank: i64) -> Vec<i64> {
    let mut bounds = Vec::with_capacity(curve.m * curve.e);
    for q in &curve.sing_points {
        for j in 0..curve.e {
            let total: u64 = q.preimages.iter().map(|p| p.lengths[j]).sum();
            bounds.push(rank * total as i64);
        }
    }
    bounds
}

fn class_from_parts(
    curve: &CurveConfig,
    rank: i64,
    deg: i64,
    ell: &[i64],
) -> Result<NumClass, Error> {
    let mut flat = Vec::with_capacity(curve.lattice_rank());
    flat.push(rank);
    flat.push(deg);
    flat.extend_from_slice(ell);
    NumClass::from_flat(curve, &flat)
}

/// All admissible classes of rank `1..rank_v` lying on the hyperplane (the
/// linear functional of their decomposition with `v` is proportional to it),
/// filtered down to the stable rays: classes admitting no admissible
/// equal-slope splitting into positive ranks.
fn stable_rays(
    v: &NumClass,
    h: &Hyperplane,
    curve: &CurveConfig,
) -> Result<Vec<NumClass>, Error> {
    let r_v = v.rk(0);
    let d_v = v.deg(0);
    let ell_v = v.to_flat()[2..].to_vec();
    let dim = ell_v.len();
    let k0 = h.coeffs.iter().position(|&c| c != 0).expect("normalized hyperplane");

    let mut on_wall: Vec<NumClass> = Vec::new();
    for r_y in 1..r_v {
        for ell in integer_boxes(&ell_bounds(curve, r_y)) {
            let a: Vec<i64> = (0..dim).map(|k| r_v * ell[k] - r_y * ell_v[k]).collect();
            if a.iter().all(|&x| x == 0) {
                continue; // proportional to v; impossible for a primitive v
            }
            let lam = rat(a[k0], h.coeffs[k0]);
            if (0..dim).any(|k| ratz(a[k]) != &lam * ratz(h.coeffs[k])) {
                continue;
            }
            // r_v d_y - r_y d_v = lam c0
            let d_y = (&lam * ratz(h.constant) + ratz(r_y * d_v)) / ratz(r_v);
            if !d_y.is_integer() {
                continue;
            }
            let d_y = d_y.to_integer().to_i64().ok_or(Error::Internal {
                detail: "wall ray degree out of i64 range".into(),
            })?;
            let y = class_from_parts(curve, r_y, d_y, &ell)?;
            if admissible_class(&y, curve)? {
                on_wall.push(y);
            }
        }
    }
    on_wall.sort();
    let set: BTreeSet<&NumClass> = on_wall.iter().collect();
    // x is stable iff no on-wall y of smaller rank leaves an admissible
    // complement; the complement is automatically on-wall (linearity), so
    // membership in the enumerated set is the full test.
    let stable = on_wall
        .iter()
        .filter(|x| {
            !on_wall
                .iter()
                .any(|y| y.rk(0) < x.rk(0) && set.contains(&(*x - y)))
        })
        .cloned()
        .collect();
    Ok(stable)
}

/// Orient a ray pair: `u` is the side with smaller slope as `delta -> 0+`
/// (smaller `d/r`; ties broken toward larger `l/r`, which lowers the slope
/// at positive delta).
pub(crate) fn orient(x: &NumClass, a: u64, y: &NumClass, b: u64) -> Decomposition {
    let (rx, ry) = (x.rk(0), y.rk(0));
    let key_x = x.deg(0) * ry;
    let key_y = y.deg(0) * rx;
    let x_first = match key_x.cmp(&key_y) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => {
            let lx: Vec<i64> = x.to_flat()[2..].iter().map(|l| l * ry).collect();
            let ly: Vec<i64> = y.to_flat()[2..].iter().map(|l| l * rx).collect();
            lx > ly
        }
    };
    if x_first {
        Decomposition { u: x.clone(), mult_u: a, w: y.clone(), mult_w: b }
    } else {
        Decomposition { u: y.clone(), mult_u: b, w: x.clone(), mult_w: a }
    }
}

/// Unordered pairs of distinct stable rays combining to `v` with positive
/// integer multiplicities.
fn pair_groups(v: &NumClass, rays: &[NumClass]) -> Vec<Decomposition> {
    let r_v = v.rk(0);
    let mut out = Vec::new();
    for (idx, x) in rays.iter().enumerate() {
        for y in &rays[idx + 1..] {
            let (rx, ry) = (x.rk(0), y.rk(0));
            for a in 1..=((r_v - ry) / rx) {
                let rem = r_v - a * rx;
                if rem < ry || rem % ry != 0 {
                    continue;
                }
                let b = rem / ry;
                if &x.scale(a) + &y.scale(b) == *v {
                    out.push(orient(x, a as u64, y, b as u64));
                }
            }
        }
    }
    out
}

/// Fallback display when no two-ray grouping exists (only possible when `v`
/// needs three or more distinct rays on the wall): list the raw splits with
/// proportionality extracted on each side.
fn fallback_groups(
    v: &NumClass,
    raw_us: &BTreeSet<NumClass>,
) -> Result<Vec<Decomposition>, Error> {
    let mut out = BTreeSet::new();
    for u in raw_us {
        let w = v - u;
        let (gu, pu) = u.primitive_part()?;
        let (gw, pw) = w.primitive_part()?;
        out.insert(orient(&pu, gu, &pw, gw));
    }
    Ok(out.into_iter().collect())
}

/// Enumerate the numerical walls of a primitive admissible class of
/// positive rank over the region. Decompositions are grouped into stable-ray
/// pairs with multiplicities; coincident hyperplanes merge into one `Wall`;
/// node-path walls are sorted by `t`, other regions by descending
/// coefficient vector.
pub fn enumerate_walls(
    v: &NumClass,
    region: ParamRegion,
    curve: &CurveConfig,
) -> Result<Vec<Wall>, Error> {
    v.check_shape(curve)?;
    region.check_shape(curve)?;
    if curve.n != 1 {
        // with gamma_k all equal, only the total degree enters the slope, so
        // a reducible curve admits infinitely many numerical splittings of
        // each wall datum: refuse rather than truncate
        return Err(Error::UnsupportedKind {
            kind: format!("reducible curve (n = {})", curve.n),
            what: "wall enumeration".into(),
        });
    }
    let r_v = v.rk(0);
    if r_v <= 0 {
        return Err(Error::BadClass {
            text: v.to_string(),
            reason: "wall enumeration requires positive rank".into(),
        });
    }
    if !admissible_class(v, curve)? {
        return Err(Error::BadClass {
            text: v.to_string(),
            reason: "class is not admissible for this curve".into(),
        });
    }
    let (gcd, _) = v.primitive_part()?;
    if gcd != 1 {
        return Err(Error::NonPrimitive { gcd });
    }

    let (vertices, unbounded) = region.closure_data(curve)?;
    let d_v = v.deg(0);
    let ell_v = v.to_flat()[2..].to_vec();
    let dim = ell_v.len();

    let mut raw: BTreeMap<Hyperplane, BTreeSet<NumClass>> = BTreeMap::new();
    for r_u in 1..r_v {
        for ell in integer_boxes(&ell_bounds(curve, r_u)) {
            // slope-matching bound: |d_v/r_v - d_u/r_u| <= max over the
            // closure of |sum (l_ij(v)/r_v - l_ij(u)/r_u) delta_ij|
            let coeff: Vec<Rat> =
                (0..dim).map(|k| rat(ell_v[k], r_v) - rat(ell[k], r_u)).collect();
            for (k, c) in coeff.iter().enumerate() {
                if unbounded[k] && !c.is_zero() {
                    return Err(Error::UnboundedRegion {
                        i: k / curve.e,
                        j: k % curve.e + 1,
                    });
                }
            }
            let m_bound = vertices
                .iter()
                .map(|vert| {
                    coeff.iter().zip(vert).map(|(c, d)| c * d).sum::<Rat>().abs()
                })
                .max()
                .unwrap_or_else(Rat::zero);
            let center = rat(d_v * r_u, r_v);
            let lo = (&center - ratz(r_u) * &m_bound).ceil().to_integer();
            let hi = (&center + ratz(r_u) * &m_bound).floor().to_integer();
            let (Some(lo), Some(hi)) = (lo.to_i64(), hi.to_i64()) else {
                return Err(Error::Internal { detail: "degree window overflow".into() });
            };
            for d_u in lo..=hi {
                let u = class_from_parts(curve, r_u, d_u, &ell)?;
                let w = v - &u;
                if !admissible_class(&u, curve)? || !admissible_class(&w, curve)? {
                    continue;
                }
                let h = match wall_hyperplane(v, &u) {
                    Ok(h) => h,
                    Err(Error::DegenerateWall) => continue,
                    Err(e) => return Err(e),
                };
                if !h.meets_open(&vertices, &unbounded, curve.e)? {
                    continue;
                }
                raw.entry(h).or_default().insert(u);
            }
        }
    }

    let one_dim = curve.m * curve.e == 1;
    let mut walls = Vec::new();
    for (h, raw_us) in raw {
        let rays = stable_rays(v, &h, curve)?;
        let mut decomps = pair_groups(v, &rays);
        if decomps.is_empty() {
            decomps = fallback_groups(v, &raw_us)?;
        }
        decomps.sort();
        decomps.dedup();
        let simple = decomps.len() == 1 && decomps[0].is_simple();
        let locus_t = if one_dim { h.node_t() } else { None };
        walls.push(Wall { hyperplane: h, decomps, locus_t, simple, numerical: true });
    }
    if one_dim {
        walls.sort_by(|a, b| a.locus_t.cmp(&b.locus_t));
    } else {
        walls.sort_by(|a, b| {
            (&b.hyperplane.coeffs, b.hyperplane.constant)
                .cmp(&(&a.hyperplane.coeffs, a.hyperplane.constant))
        });
    }
    Ok(walls)
}

/// One open cell of the wall arrangement inside the tacnode triangle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Chamber {
    pub label: String,
    /// A rational interior point `(delta1, delta2)`.
    #[serde(with = "crate::rat::rat_vec")]
    pub sample: Vec<Rat>,
    /// Indices into the wall list of the walls bounding this chamber along
    /// an edge.
    pub bounding_walls: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChamberDecomposition {
    pub walls: Vec<Wall>,
    pub chambers: Vec<Chamber>,
}

const TRIANGLE_EDGES: [(&[i64; 2], i64); 3] = [(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 1)];

fn triangle_boundary() -> Vec<Hyperplane> {
    TRIANGLE_EDGES
        .iter()
        .map(|(c, c0)| Hyperplane { coeffs: c.to_vec(), constant: *c0 })
        .collect()
}

fn intersect_lines(a: &Hyperplane, b: &Hyperplane) -> Option<(Rat, Rat)> {
    let det = a.coeffs[0] * b.coeffs[1] - a.coeffs[1] * b.coeffs[0];
    if det == 0 {
        return None;
    }
    let x = rat(a.constant * b.coeffs[1] - a.coeffs[1] * b.constant, det);
    let y = rat(a.coeffs[0] * b.constant - a.constant * b.coeffs[0], det);
    Some((x, y))
}

/// Decompose the open triangle `delta1, delta2 > 0`, `delta1 + delta2 < 1`
/// into the chambers cut out by the walls of `v`. Chambers are labeled
/// `R1, R2, ...` in lexicographic order of their sample points.
pub fn chambers_2d(v: &NumClass, curve: &CurveConfig) -> Result<ChamberDecomposition, Error> {
    if curve.kind() != CurveKind::Tacnode {
        return Err(Error::UnsupportedKind {
            kind: format!("{:?}", curve.kind()),
            what: "triangle chamber decomposition".into(),
        });
    }
    let walls = enumerate_walls(v, ParamRegion::TacnodeTriangle, curve)?;
    let lines: Vec<Hyperplane> = walls.iter().map(|w| w.hyperplane.clone()).collect();
    let boundary = triangle_boundary();

    // critical heights: intersections of every pair of lines (walls and
    // boundary), clipped to [0, 1]
    let mut all_lines = lines.clone();
    all_lines.extend(boundary.iter().cloned());
    let mut heights: Vec<Rat> = Vec::new();
    for (i, a) in all_lines.iter().enumerate() {
        for b in &all_lines[i + 1..] {
            if let Some((_, y)) = intersect_lines(a, b) {
                if !y.is_negative() && y <= Rat::one() {
                    heights.push(y);
                }
            }
        }
    }
    heights.sort();
    heights.dedup();

    // sample midpoints of every horizontal slab, between consecutive
    // x-breakpoints; every convex cell meets at least one midline
    let two = ratz(2);
    let mut samples: BTreeMap<Vec<i8>, Vec<Rat>> = BTreeMap::new();
    for pair in heights.windows(2) {
        let y_star = (&pair[0] + &pair[1]) / &two;
        let x_max = Rat::one() - &y_star;
        let mut xs = vec![Rat::zero(), x_max.clone()];
        for line in &lines {
            if line.coeffs[0] != 0 {
                let x = (ratz(line.constant) - ratz(line.coeffs[1]) * &y_star)
                    / ratz(line.coeffs[0]);
                if x.is_positive() && x < x_max {
                    xs.push(x);
                }
            }
        }
        xs.sort();
        xs.dedup();
        for span in xs.windows(2) {
            let x_star = (&span[0] + &span[1]) / &two;
            let point = vec![x_star, y_star.clone()];
            let sign: Vec<i8> = lines
                .iter()
                .map(|line| {
                    let val = line.eval(&point);
                    debug_assert!(!val.is_zero(), "midpoint sample on a wall");
                    if val.is_positive() {
                        1
                    } else {
                        -1
                    }
                })
                .collect();
            let entry = samples.entry(sign).or_insert_with(|| point.clone());
            if point < *entry {
                *entry = point;
            }
        }
    }

    let mut cells: Vec<(Vec<i8>, Vec<Rat>)> = samples.into_iter().collect();
    cells.sort_by(|a, b| a.1.cmp(&b.1));
    let chambers = cells
        .into_iter()
        .enumerate()
        .map(|(idx, (sign, sample))| {
            let bounding = (0..lines.len())
                .filter(|&w| wall_bounds_cell(&lines[w], &sign, &lines))
                .collect();
            Chamber { label: format!("R{}", idx + 1), sample, bounding_walls: bounding }
        })
        .collect();
    Ok(ChamberDecomposition { walls, chambers })
}

/// Whether the cell with the given sign vector has a one-dimensional face on
/// `line`: restrict all other constraints to the line and check that the
/// resulting parameter interval has nonempty interior.
fn wall_bounds_cell(line: &Hyperplane, sign: &[i8], lines: &[Hyperplane]) -> bool {
    // parametrize the line: (x, y) = base + s * dir
    let (c1, c2, c0) = (line.coeffs[0], line.coeffs[1], line.constant);
    let (base, dir) = if c2 != 0 {
        ((Rat::zero(), rat(c0, c2)), (Rat::one(), rat(-c1, c2)))
    } else {
        ((rat(c0, c1), Rat::zero()), (Rat::zero(), Rat::one()))
    };
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    let mut empty = false;
    // constraint a x + b y >= d along the line: alpha s + beta >= 0
    let mut add = |a: i64, b: i64, d: i64| {
        let alpha = ratz(a) * &dir.0 + ratz(b) * &dir.1;
        let beta = ratz(a) * &base.0 + ratz(b) * &base.1 - ratz(d);
        if alpha.is_zero() {
            empty |= beta.is_negative();
            return;
        }
        let bound = -beta / &alpha;
        if alpha.is_positive() {
            lo = Some(lo.take().map_or(bound.clone(), |cur| cur.max(bound)));
        } else {
            hi = Some(hi.take().map_or(bound.clone(), |cur| cur.min(bound)));
        }
    };
    for (other, s) in lines.iter().zip(sign) {
        let s = *s as i64;
        add(s * other.coeffs[0], s * other.coeffs[1], s * other.constant);
    }
    add(1, 0, 0); // x >= 0
    add(0, 1, 0); // y >= 0
    add(-1, -1, -1); // x + y <= 1
    match (empty, lo, hi) {
        (false, Some(l), Some(h)) => l < h,
        _ => false,
    }
}

/// Which side of the wall the parameters sit on, reported per decomposition
/// as the exact slope comparison of the two sides.
pub fn chamber_side(params: &StabilityParams, wall: &Wall) -> Result<Vec<Ordering>, Error> {
    let delta: Vec<Rat> = params.delta.iter().flatten().cloned().collect();
    if delta.len() != wall.hyperplane.coeffs.len() {
        return Err(Error::ShapeMismatch {
            what: "parameters vs wall".into(),
            expected: format!("{} delta coordinates", wall.hyperplane.coeffs.len()),
            got: format!("{}", delta.len()),
        });
    }
    if wall.hyperplane.eval(&delta).is_zero() {
        let names = delta_names(params.m(), params.e());
        return Err(Error::OnWall { wall: wall.hyperplane.equation(&names) });
    }
    wall.decomps.iter().map(|d| slope_order(params, &d.u, &d.w)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Preset;
    use proptest::prelude::*;

    fn node_curve() -> CurveConfig {
        Preset::Node.config()
    }

    fn tacnode_curve() -> CurveConfig {
        Preset::Tacnode.config()
    }

    #[test]
    fn hyperplane_examples() {
        let v = NumClass::tacnode(2, 1, 2, 4);
        let h = wall_hyperplane(&v, &NumClass::tacnode(1, 0, 0, 0)).unwrap();
        assert_eq!((h.coeffs.as_slice(), h.constant), ([2, 4].as_slice(), 1));
        assert_eq!(h.equation(&delta_names(1, 2)), "2d1 + 4d2 = 1");

        let h = wall_hyperplane(&v, &NumClass::tacnode(1, 0, 0, 2)).unwrap();
        assert_eq!((h.coeffs.as_slice(), h.constant), ([2, 0].as_slice(), 1));
        assert_eq!(h.equation(&delta_names(1, 2)), "2d1 = 1");

        // proportional class: zero functional
        assert!(matches!(
            wall_hyperplane(&v, &NumClass::tacnode(1, 0, 1, 2)),
            Err(Error::DegenerateWall)
        ));
        assert!(matches!(
            wall_hyperplane(&v, &NumClass::tacnode(2, 0, 1, 2)),
            Err(Error::RankBound { rank_v: 2, rank_u: 2 })
        ));
        assert!(matches!(
            wall_hyperplane(&v, &NumClass::tacnode(0, 1, 0, 0)),
            Err(Error::RankBound { .. })
        ));
    }

    #[test]
    fn wall_t_examples() {
        let v = NumClass::node(6, 1, 6);
        assert_eq!(wall_t(&v, &NumClass::node(3, 1, 5)), Some(rat(1, 4)));
        for k in 0..4 {
            let v = NumClass::node(2, 2 * k + 1, 2);
            assert_eq!(wall_t(&v, &NumClass::node(1, k, 0)), Some(rat(1, 2)));
        }
        // rank 1: no subobject ranks available
        assert_eq!(wall_t(&NumClass::node(1, 3, 1), &NumClass::node(1, 0, 0)), None);
        // vanishing l-coefficient
        assert_eq!(wall_t(&NumClass::node(2, 1, 2), &NumClass::node(1, 0, 1)), None);
        // solution outside (0, 1)
        assert_eq!(wall_t(&NumClass::node(2, 1, 2), &NumClass::node(1, 3, 0)), None);
    }

    fn wall_rows(walls: &[Wall]) -> Vec<(Rat, Decomposition, bool)> {
        walls
            .iter()
            .flat_map(|w| {
                let t = w.locus_t.clone().unwrap();
                w.decomps.iter().map(move |d| (t.clone(), d.clone(), d.is_simple()))
            })
            .collect()
    }

    #[test]
    fn node_6_1_6_wall_table() {
        let curve = node_curve();
        let v = NumClass::node(6, 1, 6);
        let walls = enumerate_walls(&v, ParamRegion::NodePath, &curve).unwrap();
        assert_eq!(walls.len(), 7);

        let rows = wall_rows(&walls);
        let expected: Vec<(Rat, (i64, i64, i64), u64, (i64, i64, i64), u64, bool)> = vec![
            (rat(1, 6), (1, 0, 0), 3, (3, 1, 6), 1, false),
            (rat(1, 4), (3, 0, 1), 1, (3, 1, 5), 1, true),
            (rat(1, 3), (2, 0, 1), 2, (2, 1, 4), 1, false),
            (rat(1, 2), (3, -1, 0), 1, (3, 2, 6), 1, true),
            (rat(1, 2), (3, 0, 2), 1, (3, 1, 4), 1, true),
            (rat(2, 3), (2, -1, 0), 1, (2, 1, 3), 2, false),
            (rat(3, 4), (3, -1, 1), 1, (3, 2, 5), 1, true),
            (rat(5, 6), (3, -2, 0), 1, (1, 1, 2), 3, false),
        ];
        assert_eq!(rows.len(), expected.len());
        for (row, exp) in rows.iter().zip(&expected) {
            let (t, d, simple) = row;
            let (et, eu, emu, ew, emw, esimple) = exp;
            assert_eq!(t, et);
            assert_eq!(d.u, NumClass::node(eu.0, eu.1, eu.2), "t = {t}");
            assert_eq!(d.mult_u, *emu, "t = {t}");
            assert_eq!(d.w, NumClass::node(ew.0, ew.1, ew.2), "t = {t}");
            assert_eq!(d.mult_w, *emw, "t = {t}");
            assert_eq!(*simple, *esimple, "t = {t}");
        }

        // the double wall at t = 1/2 shares one hyperplane
        let half: Vec<&Wall> =
            walls.iter().filter(|w| w.locus_t == Some(rat(1, 2))).collect();
        assert_eq!(half.len(), 1);
        assert_eq!(half[0].decomps.len(), 2);
        assert!(!half[0].simple);
        assert!(!is_simple_wall(half[0]));

        // every decomposition reassembles v and lies on its wall
        for w in &walls {
            for d in &w.decomps {
                assert_eq!(d.total(), v);
                let h = wall_hyperplane(&v, &d.u.scale(d.mult_u as i64)).unwrap();
                assert_eq!(h, w.hyperplane);
                assert_eq!(wall_t(&v, &d.u.scale(d.mult_u as i64)), w.locus_t);
            }
        }
    }

    #[test]
    fn node_4_1_4_contains_quarter_wall() {
        let curve = node_curve();
        let v = NumClass::node(4, 1, 4);
        let walls = enumerate_walls(&v, ParamRegion::NodePath, &curve).unwrap();
        let quarter = walls.iter().find(|w| w.locus_t == Some(rat(1, 4))).unwrap();
        assert_eq!(quarter.decomps.len(), 1);
        let d = &quarter.decomps[0];
        assert_eq!((d.u.clone(), d.mult_u), (NumClass::node(1, 0, 0), 2));
        assert_eq!((d.w.clone(), d.mult_w), (NumClass::node(2, 1, 4), 1));
    }

    #[test]
    fn rank_one_classes_have_no_walls() {
        let node = node_curve();
        for (d, l) in [(0, 0), (3, 1), (-2, 2)] {
            let walls =
                enumerate_walls(&NumClass::node(1, d, l), ParamRegion::NodePath, &node).unwrap();
            assert!(walls.is_empty());
        }
        let tac = tacnode_curve();
        let v = NumClass::tacnode(1, 0, 1, 2);
        assert!(enumerate_walls(&v, ParamRegion::TacnodeTriangle, &tac).unwrap().is_empty());
        let dec = chambers_2d(&v, &tac).unwrap();
        assert_eq!(dec.chambers.len(), 1);
        assert_eq!(dec.chambers[0].label, "R1");
        assert!(dec.chambers[0].bounding_walls.is_empty());
    }

    #[test]
    fn input_validation() {
        let node = node_curve();
        let err = enumerate_walls(&NumClass::node(2, 0, 2), ParamRegion::NodePath, &node);
        assert!(matches!(err, Err(Error::NonPrimitive { gcd: 2 })));
        let err = enumerate_walls(&NumClass::node(0, 1, 0), ParamRegion::NodePath, &node);
        assert!(matches!(err, Err(Error::BadClass { .. })));
        let err = enumerate_walls(&NumClass::node(2, 1, 5), ParamRegion::NodePath, &node);
        assert!(matches!(err, Err(Error::BadClass { .. })));
        let err = enumerate_walls(
            &NumClass::node(2, 1, 2),
            ParamRegion::TacnodeTriangle,
            &node,
        );
        assert!(matches!(err, Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn tacnode_2_1_2_4_walls() {
        let curve = tacnode_curve();
        let v = NumClass::tacnode(2, 1, 2, 4);
        let walls = enumerate_walls(&v, ParamRegion::TacnodeTriangle, &curve).unwrap();
        // the four hyperplanes of the reference table plus 2d2 = 1, whose
        // decomposition (1,0,1,1) + (1,1,1,3) passes the same admissibility
        // and open-region tests as the others
        let expected: Vec<(Vec<i64>, i64, (i64, i64, i64, i64), (i64, i64, i64, i64))> = vec![
            (vec![2, 4], 3, (1, -1, 0, 0), (1, 2, 2, 4)),
            (vec![2, 4], 1, (1, 0, 0, 0), (1, 1, 2, 4)),
            (vec![2, 2], 1, (1, 0, 0, 1), (1, 1, 2, 3)),
            (vec![2, 0], 1, (1, 0, 0, 2), (1, 1, 2, 2)),
            (vec![0, 2], 1, (1, 0, 1, 1), (1, 1, 1, 3)),
        ];
        assert_eq!(walls.len(), expected.len());
        for (wall, (coeffs, c0, u, w)) in walls.iter().zip(&expected) {
            assert_eq!(&wall.hyperplane.coeffs, coeffs);
            assert_eq!(wall.hyperplane.constant, *c0);
            assert_eq!(wall.decomps.len(), 1);
            let d = &wall.decomps[0];
            assert_eq!(d.u, NumClass::tacnode(u.0, u.1, u.2, u.3));
            assert_eq!(d.w, NumClass::tacnode(w.0, w.1, w.2, w.3));
            assert_eq!((d.mult_u, d.mult_w), (1, 1));
            assert!(wall.simple);
            assert!(wall.locus_t.is_none());
        }
    }

    /// Anchor points pinned to the reference picture of the five-chamber
    /// figure, in its labeling.
    fn figure_anchors() -> Vec<Vec<Rat>> {
        vec![
            vec![rat(1, 10), rat(3, 40)],
            vec![rat(1, 10), rat(3, 10)],
            vec![rat(13, 40), rat(9, 20)],
            vec![rat(1, 10), rat(4, 5)],
            vec![rat(69, 100), rat(1, 8)],
        ]
    }

    fn sign_vector(lines: &[Hyperplane], point: &[Rat]) -> Vec<i8> {
        lines
            .iter()
            .map(|l| if l.eval(point).is_positive() { 1 } else { -1 })
            .collect()
    }

    #[test]
    fn tacnode_2_1_2_4_chambers() {
        let curve = tacnode_curve();
        let v = NumClass::tacnode(2, 1, 2, 4);
        let dec = chambers_2d(&v, &curve).unwrap();
        assert_eq!(dec.chambers.len(), 6);
        let lines: Vec<Hyperplane> =
            dec.walls.iter().map(|w| w.hyperplane.clone()).collect();

        // the five anchors land in five distinct chambers, and every anchor
        // sign vector matches its chamber's sample
        let mut hit = BTreeSet::new();
        for anchor in figure_anchors() {
            let sig = sign_vector(&lines, &anchor);
            let chamber = dec
                .chambers
                .iter()
                .find(|c| sign_vector(&lines, &c.sample) == sig)
                .expect("anchor lies in a chamber");
            hit.insert(chamber.label.clone());
        }
        assert_eq!(hit.len(), 5);

        // labels are R1..R6 ordered by sample point
        let labels: Vec<&str> = dec.chambers.iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels, ["R1", "R2", "R3", "R4", "R5", "R6"]);
        let mut samples: Vec<&Vec<Rat>> = dec.chambers.iter().map(|c| &c.sample).collect();
        let sorted = {
            let mut s = samples.clone();
            s.sort();
            s
        };
        assert_eq!(samples, sorted);
        samples.dedup();
        assert_eq!(samples.len(), 6);

        // samples are interior and off every wall
        for c in &dec.chambers {
            assert!(ParamRegion::TacnodeTriangle.contains(&curve, &c.sample).unwrap());
            assert!(lines.iter().all(|l| !l.eval(&c.sample).is_zero()));
            assert!(!c.bounding_walls.is_empty());
            for &w in &c.bounding_walls {
                assert!(w < dec.walls.len());
            }
        }
    }

    #[test]
    fn chamber_side_reference_rows() {
        let curve = tacnode_curve();
        let v = NumClass::tacnode(2, 1, 2, 4);
        let walls = enumerate_walls(&v, ParamRegion::TacnodeTriangle, &curve).unwrap();
        let by_eq = |coeffs: &[i64], constant: i64| {
            walls
                .iter()
                .find(|w| w.hyperplane.coeffs == coeffs && w.hyperplane.constant == constant)
                .unwrap()
        };
        let params_at = |p: &[Rat]| StabilityParams::tacnode_triangle(p[0].clone(), p[1].clone());
        let anchors = figure_anchors();

        // 2d1 + 4d2 = 1: u below w exactly in the first chamber
        let w2 = by_eq(&[2, 4], 1);
        let sides: Vec<Ordering> = anchors
            .iter()
            .map(|a| chamber_side(&params_at(a), w2).unwrap()[0])
            .collect();
        assert_eq!(
            sides,
            [Ordering::Less, Ordering::Greater, Ordering::Greater, Ordering::Greater, Ordering::Greater]
        );

        // 2d1 = 1: u below w on the first four
        let w4 = by_eq(&[2, 0], 1);
        let sides: Vec<Ordering> = anchors
            .iter()
            .map(|a| chamber_side(&params_at(a), w4).unwrap()[0])
            .collect();
        assert_eq!(
            sides,
            [Ordering::Less, Ordering::Less, Ordering::Less, Ordering::Less, Ordering::Greater]
        );

        // sitting exactly on a wall errors
        let on = StabilityParams::tacnode_triangle(rat(1, 10), rat(1, 5));
        assert!(matches!(chamber_side(&on, w2), Err(Error::OnWall { .. })));
    }

    #[test]
    fn slopes_flip_across_node_walls() {
        let curve = node_curve();
        let v = NumClass::node(6, 1, 6);
        let walls = enumerate_walls(&v, ParamRegion::NodePath, &curve).unwrap();
        let mut ts: Vec<Rat> = vec![ratz(0)];
        ts.extend(walls.iter().map(|w| w.locus_t.clone().unwrap()));
        ts.push(ratz(1));
        for (idx, w) in walls.iter().enumerate() {
            let left = (&ts[idx] + &ts[idx + 1]) / ratz(2);
            let right = (&ts[idx + 1] + &ts[idx + 2]) / ratz(2);
            for d in &w.decomps {
                let lo = slope_order(&StabilityParams::node_path(left.clone()), &d.u, &d.w)
                    .unwrap();
                let ro = slope_order(&StabilityParams::node_path(right.clone()), &d.u, &d.w)
                    .unwrap();
                assert_ne!(lo, Ordering::Equal);
                assert_eq!(ro, lo.reverse(), "wall t = {:?}", w.locus_t);
            }
            let on = slope_order(
                &StabilityParams::node_path(w.locus_t.clone().unwrap()),
                &w.decomps[0].u,
                &w.decomps[0].w,
            )
            .unwrap();
            assert_eq!(on, Ordering::Equal);
        }
    }

    #[test]
    fn cusp_box_excludes_boundary_walls() {
        let curve = Preset::Cusp.config();
        // the only candidate hyperplanes for (2,1,2) touch the closure of
        // delta in (0, 1/2) without crossing it
        let v = NumClass::node(2, 1, 2);
        let walls = enumerate_walls(&v, ParamRegion::GenericBox, &curve).unwrap();
        assert!(walls.is_empty(), "{walls:?}");
        // while the same class on the node curve has interior walls
        let node_walls =
            enumerate_walls(&v, ParamRegion::NodePath, &node_curve()).unwrap();
        assert!(!node_walls.is_empty());
    }

    #[test]
    fn generic_box_enumeration_is_deterministic_and_consistent() {
        let curve = Preset::Ordinary(3).config();
        let v = NumClass::from_flat(&curve, &[2, 1, 2, 4]).unwrap();
        let walls = enumerate_walls(&v, ParamRegion::GenericBox, &curve).unwrap();
        let again = enumerate_walls(&v, ParamRegion::GenericBox, &curve).unwrap();
        assert_eq!(walls, again);
        assert!(!walls.is_empty());
        for w in &walls {
            for d in &w.decomps {
                assert_eq!(d.total(), v);
                assert!(admissible_class(&d.u, &curve).unwrap());
                assert!(admissible_class(&d.w, &curve).unwrap());
            }
        }
    }

    #[test]
    fn region_samples_satisfy_their_inequalities() {
        for curve in [node_curve(), tacnode_curve(), Preset::Ordinary(4).config(), Preset::A(5).config()] {
            let region = ParamRegion::for_curve(&curve);
            let sample = region.sample(&curve);
            assert!(region.contains(&curve, &sample).unwrap(), "{region:?}");
        }
        let node = node_curve();
        assert!(!ParamRegion::NodePath.contains(&node, &[ratz(1)]).unwrap());
        assert!(!ParamRegion::NodePath.contains(&node, &[ratz(0)]).unwrap());
    }

    #[test]
    fn cusp_region_is_the_half_interval() {
        // the cusp's single preimage has length 2, so its delta range is
        // (0, 1/2), not the node's (0, 1)
        let cusp = Preset::Cusp.config();
        let region = ParamRegion::for_curve(&cusp);
        assert_eq!(region, ParamRegion::GenericBox);
        assert_eq!(region.interval(&cusp).unwrap(), Some((ratz(0), rat(1, 2))));
        assert!(region.contains(&cusp, &[rat(1, 3)]).unwrap());
        assert!(!region.contains(&cusp, &[rat(1, 2)]).unwrap());

        let node = node_curve();
        let region = ParamRegion::for_curve(&node);
        assert_eq!(region, ParamRegion::NodePath);
        assert_eq!(region.interval(&node).unwrap(), Some((ratz(0), ratz(1))));
        assert_eq!(
            ParamRegion::TacnodeTriangle.interval(&tacnode_curve()).unwrap(),
            None
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn swapping_summands_normalizes_to_the_same_wall(
            r_u in 1i64..4,
            extra in 1i64..4,
            d_u in -3i64..4,
            d_w in -3i64..4,
            l_u in 0i64..9,
            l_w in 0i64..9,
        ) {
            let r_w = extra;
            prop_assume!(l_u <= 2 * r_u && l_w <= 2 * r_w);
            let u = NumClass::node(r_u, d_u, l_u);
            let w = NumClass::node(r_w, d_w, l_w);
            let v = &u + &w;
            let hu = wall_hyperplane(&v, &u);
            let hw = wall_hyperplane(&v, &w);
            match (hu, hw) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
                (Err(Error::DegenerateWall), Err(Error::DegenerateWall)) => {}
                other => prop_assert!(false, "asymmetric outcome: {:?}", other),
            }
        }

        #[test]
        fn node_walls_match_plain_oracle(
            r in 2i64..4,
            d in -4i64..5,
            l in 0i64..7,
        ) {
            prop_assume!(l <= 2 * r);
            let curve = node_curve();
            let v = NumClass::node(r, d, l);
            prop_assume!(is_primitive(&v).unwrap());
            let walls = enumerate_walls(&v, ParamRegion::NodePath, &curve).unwrap();
            // oracle: raw t-locus sweep with a generous degree window
            let mut expected: BTreeSet<Rat> = BTreeSet::new();
            for rp in 1..r {
                for lp in 0..=(2 * rp) {
                    for dp in -40..=40 {
                        let u = NumClass::node(rp, dp, lp);
                        let w = &v - &u;
                        let w_l_ok = w.ell(0, 1) >= 0 && w.ell(0, 1) <= 2 * w.rk(0);
                        if !w_l_ok {
                            continue;
                        }
                        if let Some(t) = wall_t(&v, &u) {
                            expected.insert(t);
                        }
                    }
                }
            }
            let got: BTreeSet<Rat> =
                walls.iter().map(|w| w.locus_t.clone().unwrap()).collect();
            prop_assert_eq!(got, expected);
        }
    }
}
