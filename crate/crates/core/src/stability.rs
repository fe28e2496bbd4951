//! Stability parameters on the heart of pairs: central charges, slopes,
//! the open parameter region, the support-property constants, and the
//! classification of phase-1 stable classes.
//!
//! All arithmetic is exact rational. Phases are never represented as
//! angles: an object of the heart has charge in the closed upper half
//! plane, so slopes `nu = -Re Z / Im Z` (with an explicit marker for the
//! vertical ray) order charges by phase without leaving the rationals.

use std::cmp::Ordering;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::curve::CurveConfig;
use crate::error::Error;
use crate::numclass::{norm_sq, NumClass};
use crate::rat::{ratz, Rat};

/// The tuple `(alpha_k, beta_k, gamma_k, delta_ij)` weighting ranks,
/// degrees and module invariants in the central charge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityParams {
    #[serde(with = "crate::rat::rat_vec")]
    pub alpha: Vec<Rat>,
    #[serde(with = "crate::rat::rat_vec")]
    pub beta: Vec<Rat>,
    #[serde(with = "crate::rat::rat_vec")]
    pub gamma: Vec<Rat>,
    #[serde(with = "crate::rat::rat_mat")]
    pub delta: Vec<Vec<Rat>>,
}

impl StabilityParams {
    pub fn new(
        alpha: Vec<Rat>,
        beta: Vec<Rat>,
        gamma: Vec<Rat>,
        delta: Vec<Vec<Rat>>,
    ) -> Result<StabilityParams, Error> {
        let params = StabilityParams { alpha, beta, gamma, delta };
        params.validate_shape()?;
        Ok(params)
    }

    fn validate_shape(&self) -> Result<(), Error> {
        let n = self.alpha.len();
        if n == 0 {
            return Err(Error::ShapeMismatch {
                what: "stability parameters".into(),
                expected: "at least one component".into(),
                got: "alpha is empty".into(),
            });
        }
        if self.beta.len() != n || self.gamma.len() != n {
            return Err(Error::ShapeMismatch {
                what: "stability parameters".into(),
                expected: format!("beta and gamma of length {n}"),
                got: format!("{} and {}", self.beta.len(), self.gamma.len()),
            });
        }
        let e = self.delta.first().map_or(0, |row| row.len());
        if e == 0 || self.delta.iter().any(|row| row.len() != e) {
            return Err(Error::ShapeMismatch {
                what: "stability parameters".into(),
                expected: "rectangular nonempty delta".into(),
                got: format!("{:?}", self.delta.iter().map(|r| r.len()).collect::<Vec<_>>()),
            });
        }
        Ok(())
    }

    /// The one-parameter family on a one-nodal curve: `alpha = gamma = 1`,
    /// `beta = 0`, `delta = t`.
    pub fn node_path(t: Rat) -> StabilityParams {
        StabilityParams::unit_scalars(1, vec![vec![t]])
    }

    /// The two-parameter family on a one-tacnode curve: `alpha = gamma = 1`,
    /// `beta = 0`, `delta = (delta1, delta2)`.
    pub fn tacnode_triangle(delta1: Rat, delta2: Rat) -> StabilityParams {
        StabilityParams::unit_scalars(1, vec![vec![delta1, delta2]])
    }

    /// `alpha_k = gamma_k = 1`, `beta_k = 0` with the given `delta` matrix.
    pub fn unit_scalars(n: usize, delta: Vec<Vec<Rat>>) -> StabilityParams {
        StabilityParams {
            alpha: vec![Rat::one(); n],
            beta: vec![Rat::zero(); n],
            gamma: vec![Rat::one(); n],
            delta,
        }
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn m(&self) -> usize {
        self.delta.len()
    }

    pub fn e(&self) -> usize {
        self.delta[0].len()
    }

    pub fn check_shape(&self, curve: &CurveConfig) -> Result<(), Error> {
        self.validate_shape()?;
        if self.n() != curve.n || self.m() != curve.m || self.e() != curve.e {
            return Err(Error::ShapeMismatch {
                what: "stability parameters vs curve".into(),
                expected: format!("n={}, m={}, e={}", curve.n, curve.m, curve.e),
                got: format!("n={}, m={}, e={}", self.n(), self.m(), self.e()),
            });
        }
        Ok(())
    }

    /// Accepts the full `{alpha, beta, gamma, delta}` form as well as the
    /// shorthands `{"t": "p/q"}` (node path) and
    /// `{"delta1": "p/q", "delta2": "p/q"}` (tacnode triangle).
    pub fn from_json(text: &str) -> Result<StabilityParams, Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct NodeShort {
            #[serde(with = "crate::rat::rat_string")]
            t: Rat,
        }
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct TacnodeShort {
            #[serde(with = "crate::rat::rat_string")]
            delta1: Rat,
            #[serde(with = "crate::rat::rat_string")]
            delta2: Rat,
        }
        if let Ok(short) = serde_json::from_str::<NodeShort>(text) {
            return Ok(StabilityParams::node_path(short.t));
        }
        if let Ok(short) = serde_json::from_str::<TacnodeShort>(text) {
            return Ok(StabilityParams::tacnode_triangle(short.delta1, short.delta2));
        }
        let params: StabilityParams = serde_json::from_str(text)?;
        params.validate_shape()?;
        Ok(params)
    }
}

/// An exact point of the charge plane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeValue {
    #[serde(with = "crate::rat::rat_string")]
    pub re: Rat,
    #[serde(with = "crate::rat::rat_string")]
    pub im: Rat,
}

impl ChargeValue {
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl std::fmt::Display for ChargeValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

/// `Z(v) = sum delta_ij l_ij(v) - sum gamma_k deg_k(v)
///        + sum beta_k rk_k(v) + i sum alpha_k rk_k(v)`.
///
/// Panics if the parameter and class shapes disagree; no region check is
/// performed (the charge is a linear form on the whole lattice).
pub fn central_charge(params: &StabilityParams, v: &NumClass) -> ChargeValue {
    assert_eq!(
        (params.n(), params.m(), params.e()),
        (v.n(), v.m(), v.e()),
        "parameter/class shape mismatch"
    );
    let mut re = Rat::zero();
    let mut im = Rat::zero();
    for i in 0..params.m() {
        for j in 1..=params.e() {
            re += &params.delta[i][j - 1] * ratz(v.ell(i, j));
        }
    }
    for k in 0..params.n() {
        re -= &params.gamma[k] * ratz(v.deg(k));
        re += &params.beta[k] * ratz(v.rk(k));
        im += &params.alpha[k] * ratz(v.rk(k));
    }
    ChargeValue { re, im }
}

/// True iff the parameters satisfy the defining inequalities of the open
/// region: `alpha_k > 0`, `gamma_k > 0`, `delta_ij > 0`, and
/// `sum_j l(I^(e-j)|_p) delta_ij < gamma_k` at every preimage point `p` on
/// component `k` over `q_i`.
pub fn check_condition(params: &StabilityParams, curve: &CurveConfig) -> Result<bool, Error> {
    params.check_shape(curve)?;
    let positive = |x: &Rat| x.is_positive();
    if !params.alpha.iter().all(positive) || !params.gamma.iter().all(positive) {
        return Ok(false);
    }
    if !params.delta.iter().flatten().all(positive) {
        return Ok(false);
    }
    for (i, q) in curve.sing_points.iter().enumerate() {
        for p in &q.preimages {
            let mut weighted = Rat::zero();
            for j in 1..=curve.e {
                weighted += &params.delta[i][j - 1] * ratz(p.lengths[j - 1] as i64);
            }
            if weighted >= params.gamma[p.component] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Slope `nu = -Re Z / Im Z`, with the vertical ray (phase 1) as an explicit
/// maximum. Derived `Ord` puts every finite slope below `PlusInfinity`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Slope {
    Finite(Rat),
    PlusInfinity,
}

impl std::fmt::Display for Slope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Slope::Finite(nu) => write!(f, "{nu}"),
            Slope::PlusInfinity => write!(f, "+inf"),
        }
    }
}

/// Slope of a class whose charge lies in the image of the heart
/// (upper half plane plus the negative real ray).
pub fn slope(params: &StabilityParams, v: &NumClass) -> Result<Slope, Error> {
    let z = central_charge(params, v);
    slope_of_charge(&z)
}

pub fn slope_of_charge(z: &ChargeValue) -> Result<Slope, Error> {
    if z.is_zero() {
        return Err(Error::ZeroCharge);
    }
    if z.im.is_negative() || (z.im.is_zero() && z.re.is_positive()) {
        return Err(Error::ChargeOutsideHeart { re: z.re.to_string(), im: z.im.to_string() });
    }
    if z.im.is_zero() {
        Ok(Slope::PlusInfinity)
    } else {
        Ok(Slope::Finite(-&z.re / &z.im))
    }
}

/// Exact phase comparison of two classes via their slopes.
pub fn slope_order(
    params: &StabilityParams,
    u: &NumClass,
    w: &NumClass,
) -> Result<Ordering, Error> {
    Ok(slope(params, u)?.cmp(&slope(params, w)?))
}

/// The three support constants: `P0` bounds torsion classes against `Re Z`,
/// `Q1`/`P1` bound positive-rank classes against `(Im Z, Re Z)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SupportConstants {
    #[serde(with = "crate::rat::rat_string")]
    pub p0: Rat,
    #[serde(with = "crate::rat::rat_string")]
    pub q1: Rat,
    #[serde(with = "crate::rat::rat_string")]
    pub p1: Rat,
}

/// Exact evaluation of the three closed-form constants. Errors with a
/// region violation when any defining inequality of the region fails (in
/// particular when a denominator `gamma_k - sum_j l_j(p) delta_ij` is not
/// positive).
pub fn support_constants(
    params: &StabilityParams,
    curve: &CurveConfig,
) -> Result<SupportConstants, Error> {
    if !check_condition(params, curve)? {
        return Err(Error::RegionViolation {
            detail: "support constants are only defined on the open parameter region".into(),
        });
    }
    let sq = |x: &Rat| x * x;

    // P0 = max{ 1/gamma_k^2 ; (1 + sum_j l_j(p)^2) / (gamma_k - sum_j l_j(p) delta_ij)^2 ;
    //           1/delta_ij^2 }
    let mut p0_terms: Vec<Rat> = Vec::new();
    for k in 0..curve.n {
        p0_terms.push(Rat::one() / sq(&params.gamma[k]));
    }
    for (i, q) in curve.sing_points.iter().enumerate() {
        for p in &q.preimages {
            let mut len_sq_sum = Rat::one();
            let mut weighted = Rat::zero();
            for j in 1..=curve.e {
                let len = ratz(p.lengths[j - 1] as i64);
                len_sq_sum += sq(&len);
                weighted += &params.delta[i][j - 1] * len;
            }
            let denom = &params.gamma[p.component] - weighted;
            p0_terms.push(len_sq_sum / sq(&denom));
        }
    }
    for row in &params.delta {
        for d in row {
            p0_terms.push(Rat::one() / sq(d));
        }
    }
    let p0 = p0_terms.into_iter().max().expect("nonempty term list");

    // L1(k, j) = total length at power j of the preimage points on component k;
    // L2(j) sums L1 over components.
    let l1 = |k: usize, j: usize| -> Rat {
        ratz((0..curve.m).map(|i| curve.component_length(k, i, j)).sum::<u64>() as i64)
    };
    // Q1 = m sum_{k,j} (L1(k,j)/alpha_k)^2 + sum_k 1/alpha_k^2
    //      + sum_k 2 (sum_{i,j} delta_ij L2(j) + |beta_k|)^2 / (alpha_k gamma_k)^2
    let mut q1 = Rat::zero();
    for k in 0..curve.n {
        for j in 1..=curve.e {
            q1 += ratz(curve.m as i64) * sq(&(l1(k, j) / &params.alpha[k]));
        }
    }
    let mut delta_weighted_total = Rat::zero();
    for i in 0..curve.m {
        for j in 1..=curve.e {
            delta_weighted_total += &params.delta[i][j - 1] * ratz(curve.total_length(j) as i64);
        }
    }
    for k in 0..curve.n {
        q1 += Rat::one() / sq(&params.alpha[k]);
        let numerator = sq(&(&delta_weighted_total + params.beta[k].abs()));
        q1 += ratz(2) * numerator / sq(&(&params.alpha[k] * &params.gamma[k]));
    }

    // P1 = 2 sum_k 1/alpha_k^2
    let mut p1 = Rat::zero();
    for k in 0..curve.n {
        p1 += ratz(2) / sq(&params.alpha[k]);
    }

    Ok(SupportConstants { p0, q1, p1 })
}

/// The support inequality
/// `|v|^2 <= max{P0, P1} (Re Z(v))^2 + Q1 (Im Z(v))^2`.
pub fn support_check(
    params: &StabilityParams,
    curve: &CurveConfig,
    v: &NumClass,
) -> Result<bool, Error> {
    let consts = support_constants(params, curve)?;
    let z = central_charge(params, v);
    let p = std::cmp::max(consts.p0, consts.p1);
    let bound = p * (&z.re * &z.re) + consts.q1 * (&z.im * &z.im);
    let norm: Rat = Rat::from_integer(norm_sq(v));
    Ok(norm <= bound)
}

/// A family of numerical classes of phase-1 stable objects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Phase1Family {
    /// Skyscraper at a point of component `k` away from the preimages of
    /// the singular locus: `deg_k = 1`, everything else `0`.
    SmoothPoint { component: usize },
    /// Torsion at the `preimage`-th point over `q_i` (on `component`):
    /// `deg = 1` there, and `0 <= ell_ij <= l(I^(e-j)|_p)` in row `i`.
    SingularPoint { point: usize, preimage: usize, component: usize, ell_bounds: Vec<u64> },
    /// Shift of a torsion module on the singular locus: `rk = deg = 0` and
    /// every `ell_ij <= 0` (the class is the negative of a module class).
    ShiftedModule,
}

impl Phase1Family {
    pub fn describe(&self) -> String {
        match self {
            Phase1Family::SmoothPoint { component } => format!(
                "point on component {} off the singular preimages: deg_{} = 1",
                component + 1,
                component + 1
            ),
            Phase1Family::SingularPoint { point, preimage, component, ell_bounds } => {
                let bounds: Vec<String> = ell_bounds
                    .iter()
                    .enumerate()
                    .map(|(idx, b)| format!("ell_{},{} <= {}", point + 1, idx + 1, b))
                    .collect();
                format!(
                    "point at preimage {} of q_{} (component {}): deg_{} = 1, {}",
                    preimage + 1,
                    point + 1,
                    component + 1,
                    component + 1,
                    bounds.join(", ")
                )
            }
            Phase1Family::ShiftedModule => {
                "shifted torsion module: rk = deg = 0, ell_ij <= 0, not all zero".into()
            }
        }
    }

    /// Every class of the family with module invariants within bounds; the
    /// unbounded shifted family is truncated at `ell_ij >= -cap`.
    pub fn classes(&self, curve: &CurveConfig, cap: u64) -> Vec<NumClass> {
        let zero_flat = vec![0i64; curve.lattice_rank()];
        match self {
            Phase1Family::SmoothPoint { component } => {
                let mut flat = zero_flat;
                flat[curve.n + component] = 1;
                vec![NumClass::from_flat(curve, &flat).expect("valid flat class")]
            }
            Phase1Family::SingularPoint { point, component, ell_bounds, .. } => {
                let mut out = Vec::new();
                for ells in bounded_tuples(ell_bounds) {
                    let mut flat = zero_flat.clone();
                    flat[curve.n + component] = 1;
                    for (j, l) in ells.iter().enumerate() {
                        flat[2 * curve.n + point * curve.e + j] = *l as i64;
                    }
                    out.push(NumClass::from_flat(curve, &flat).expect("valid flat class"));
                }
                out
            }
            Phase1Family::ShiftedModule => {
                let bounds = vec![cap; curve.m * curve.e];
                let mut out = Vec::new();
                for ells in bounded_tuples(&bounds) {
                    if ells.iter().all(|&l| l == 0) {
                        continue;
                    }
                    let mut flat = zero_flat.clone();
                    for (idx, l) in ells.iter().enumerate() {
                        flat[2 * curve.n + idx] = -(*l as i64);
                    }
                    out.push(NumClass::from_flat(curve, &flat).expect("valid flat class"));
                }
                out
            }
        }
    }
}

/// All tuples `(x_1, ..., x_len)` with `0 <= x_idx <= bounds[idx]`.
fn bounded_tuples(bounds: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    out
}

/// The classification of numerical classes of phase-1 stable objects:
/// skyscrapers off the singular locus, decorated points over each `q_i`,
/// and shifted torsion modules.
pub fn phase1_stable_types(curve: &CurveConfig) -> Vec<Phase1Family> {
    let mut out = Vec::new();
    for k in 0..curve.n {
        out.push(Phase1Family::SmoothPoint { component: k });
    }
    for (i, q) in curve.sing_points.iter().enumerate() {
        for (pi, p) in q.preimages.iter().enumerate() {
            out.push(Phase1Family::SingularPoint {
                point: i,
                preimage: pi,
                component: p.component,
                ell_bounds: p.lengths.clone(),
            });
        }
    }
    out.push(Phase1Family::ShiftedModule);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Preset;
    use crate::rat::rat;
    use proptest::prelude::*;

    fn node_curve() -> CurveConfig {
        Preset::Node.config()
    }

    fn tacnode_curve() -> CurveConfig {
        Preset::Tacnode.config()
    }

    #[test]
    fn node_path_charge_closed_form() {
        // (r, d, l) -> (t l - d, r)
        let params = StabilityParams::node_path(rat(1, 3));
        let v = NumClass::node(2, -1, 3);
        let z = central_charge(&params, &v);
        assert_eq!(z.re, rat(1, 3) * ratz(3) + ratz(1));
        assert_eq!(z.im, ratz(2));

        let zero = central_charge(&params, &NumClass::zero(1, 1, 1));
        assert!(zero.is_zero());
    }

    #[test]
    fn smooth_point_charge_is_minus_gamma() {
        let curve = Preset::Ordinary(3).config();
        let params = StabilityParams {
            alpha: vec![ratz(2)],
            beta: vec![rat(1, 5)],
            gamma: vec![rat(7, 3)],
            delta: vec![vec![rat(1, 10); 2]],
        };
        for family in phase1_stable_types(&curve) {
            if let Phase1Family::SmoothPoint { .. } = family {
                let v = &family.classes(&curve, 0)[0];
                let z = central_charge(&params, v);
                assert_eq!(z.re, -rat(7, 3));
                assert!(z.im.is_zero());
            }
        }
    }

    #[test]
    fn condition_examples() {
        let curve = tacnode_curve();
        let eps = StabilityParams::unit_scalars(1, vec![vec![rat(1, 100), rat(1, 100)]]);
        assert!(check_condition(&eps, &curve).unwrap());

        let node = node_curve();
        for (t, ok) in [(rat(1, 2), true), (rat(99, 100), true), (ratz(1), false), (ratz(0), false), (rat(-1, 2), false), (rat(3, 2), false)] {
            let params = StabilityParams::node_path(t.clone());
            assert_eq!(check_condition(&params, &node).unwrap(), ok, "t = {t}");
        }

        // tacnode region: delta1 + 2 delta2 < 1 at each preimage point
        let inside = StabilityParams::tacnode_triangle(rat(1, 10), rat(3, 10));
        assert!(check_condition(&inside, &curve).unwrap());
        let outside = StabilityParams::tacnode_triangle(rat(1, 10), rat(1, 2));
        assert!(!check_condition(&outside, &curve).unwrap());

        let shape_err = check_condition(&StabilityParams::node_path(rat(1, 2)), &curve);
        assert!(matches!(shape_err, Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn slope_examples_and_errors() {
        let params = StabilityParams::tacnode_triangle(rat(1, 10), rat(3, 40));
        let u = NumClass::tacnode(1, 0, 0, 0);
        let w = NumClass::tacnode(1, 1, 2, 4);
        // inside R1: 2 delta1 + 4 delta2 = 1/2 < 1
        assert_eq!(slope_order(&params, &u, &w).unwrap(), Ordering::Less);
        assert_eq!(slope_order(&params, &u, &u).unwrap(), Ordering::Equal);

        // on the wall 2 delta1 + 4 delta2 = 1
        let on_wall = StabilityParams::tacnode_triangle(rat(1, 10), rat(1, 5));
        assert_eq!(slope_order(&on_wall, &u, &w).unwrap(), Ordering::Equal);

        let node = StabilityParams::node_path(rat(1, 2));
        for k in -2..=2 {
            let u = NumClass::node(1, k, 0);
            let w = NumClass::node(1, k + 1, 2);
            assert_eq!(slope_order(&node, &u, &w).unwrap(), Ordering::Equal, "k = {k}");
        }

        assert!(matches!(slope(&node, &NumClass::zero(1, 1, 1)), Err(Error::ZeroCharge)));
        // torsion with negative charge: phase 1
        assert_eq!(slope(&node, &NumClass::node(0, 1, 0)).unwrap(), Slope::PlusInfinity);
        // negative rank is outside the heart image
        assert!(matches!(
            slope(&node, &NumClass::node(-1, 0, 0)),
            Err(Error::ChargeOutsideHeart { .. })
        ));
        // rank zero, positive degree: charge on the positive real ray
        assert!(matches!(
            slope(&node, &NumClass::node(0, -1, 0)),
            Err(Error::ChargeOutsideHeart { .. })
        ));
    }

    #[test]
    fn node_support_constants_closed_form() {
        let node = node_curve();
        for t in [rat(1, 2), rat(1, 3), rat(9, 10)] {
            let params = StabilityParams::node_path(t.clone());
            let c = support_constants(&params, &node).unwrap();
            let one = Rat::one();
            let expected_p0 = [
                one.clone(),
                ratz(2) / ((&one - &t) * (&one - &t)),
                one.clone() / (&t * &t),
            ]
            .into_iter()
            .max()
            .unwrap();
            assert_eq!(c.p0, expected_p0, "t = {t}");
            assert_eq!(c.q1, ratz(5) + ratz(8) * (&t * &t), "t = {t}");
            assert_eq!(c.p1, ratz(2));
            assert!(c.p0.is_positive() && c.q1.is_positive() && c.p1.is_positive());
        }

        let outside = StabilityParams::node_path(ratz(2));
        assert!(matches!(
            support_constants(&outside, &node),
            Err(Error::RegionViolation { .. })
        ));
    }

    #[test]
    fn support_check_examples() {
        let node = node_curve();
        let half = StabilityParams::node_path(rat(1, 2));
        assert!(support_check(&half, &node, &NumClass::node(0, 1, 0)).unwrap());
        assert!(support_check(&half, &node, &NumClass::zero(1, 1, 1)).unwrap());
        assert!(support_check(&half, &node, &NumClass::node(1, 0, 0)).unwrap());
    }

    #[test]
    fn phase1_families_node() {
        let node = node_curve();
        let families = phase1_stable_types(&node);
        assert_eq!(families.len(), 4); // 1 smooth + 2 preimages + shifted
        let all: Vec<NumClass> =
            families.iter().flat_map(|f| f.classes(&node, 2)).collect();
        assert!(all.contains(&NumClass::node(0, 1, 0)));
        assert!(all.contains(&NumClass::node(0, 1, 1)));
        assert!(all.contains(&NumClass::node(0, 0, -2)));
        assert!(!all.contains(&NumClass::node(0, 1, 2))); // bound is l(I^0) = 1
        assert!(!all.contains(&NumClass::zero(1, 1, 1)));
        for f in &families {
            assert!(!f.describe().is_empty());
        }
    }

    #[test]
    fn phase1_tacnode_bounds() {
        let curve = tacnode_curve();
        for family in phase1_stable_types(&curve) {
            if let Phase1Family::SingularPoint { ell_bounds, .. } = &family {
                assert_eq!(ell_bounds, &vec![1, 2]);
                let classes = family.classes(&curve, 0);
                assert_eq!(classes.len(), 2 * 3);
                for v in &classes {
                    assert_eq!(v.rk(0), 0);
                    assert_eq!(v.deg(0), 1);
                }
            }
        }
    }

    #[test]
    fn shifted_family_has_torsion_classes() {
        let curve = tacnode_curve();
        let shifted = Phase1Family::ShiftedModule;
        for v in shifted.classes(&curve, 2) {
            assert_eq!(v.rk(0), 0);
            assert_eq!(v.deg(0), 0);
            assert!((1..=2).all(|j| v.ell(0, j) <= 0));
            assert!(!v.is_zero());
        }
    }

    #[test]
    fn params_json_forms() {
        let node = StabilityParams::from_json(r#"{"t": "1/2"}"#).unwrap();
        assert_eq!(node, StabilityParams::node_path(rat(1, 2)));
        let tac = StabilityParams::from_json(r#"{"delta1": "1/10", "delta2": "3/40"}"#).unwrap();
        assert_eq!(tac, StabilityParams::tacnode_triangle(rat(1, 10), rat(3, 40)));
        let full = StabilityParams::from_json(
            r#"{"alpha": ["1"], "beta": ["0"], "gamma": ["1"], "delta": [["1/2"]]}"#,
        )
        .unwrap();
        assert_eq!(full, StabilityParams::node_path(rat(1, 2)));
        assert!(StabilityParams::from_json(r#"{"alpha": ["1"]}"#).is_err());
        assert!(StabilityParams::from_json(r#"{"t": "1/0"}"#).is_err());
    }

    fn arb_rat(lo: i64, hi: i64) -> impl Strategy<Value = Rat> {
        (lo..hi, 1i64..6).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_node_class() -> impl Strategy<Value = NumClass> {
        (0i64..5, -5i64..6, -4i64..9).prop_map(|(r, d, l)| NumClass::node(r, d, l))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn heart_image_in_upper_half_plane(
            alpha in arb_rat(1, 8),
            beta in arb_rat(-4, 4),
            gamma in arb_rat(1, 8),
            v in arb_node_class(),
        ) {
            let params = StabilityParams {
                alpha: vec![alpha],
                beta: vec![beta],
                gamma: vec![gamma],
                delta: vec![vec![rat(1, 3)]],
            };
            let z = central_charge(&params, &v);
            prop_assert_eq!(z.im.is_zero(), v.rk(0) == 0);
            if v.rk(0) >= 0 {
                prop_assert!(!z.im.is_negative());
            }
        }

        #[test]
        fn slope_order_is_transitive(
            t in arb_rat(1, 5).prop_filter("0<t<1", |t| t.is_positive() && t < &Rat::one()),
            classes in proptest::collection::vec(
                (1i64..5, -5i64..6, -4i64..9).prop_map(|(r, d, l)| NumClass::node(r, d, l)),
                3,
            ),
        ) {
            let params = StabilityParams::node_path(t);
            let (a, b, c) = (&classes[0], &classes[1], &classes[2]);
            let ab = slope_order(&params, a, b).unwrap();
            let bc = slope_order(&params, b, c).unwrap();
            let ac = slope_order(&params, a, c).unwrap();
            if ab != Ordering::Greater && bc != Ordering::Greater {
                prop_assert_ne!(ac, Ordering::Greater);
            }
            if ab == Ordering::Equal && bc == Ordering::Equal {
                prop_assert_eq!(ac, Ordering::Equal);
            }
        }

        #[test]
        fn positive_scaling_preserves_slope_order(
            t in arb_rat(1, 5).prop_filter("0<t<1", |t| t.is_positive() && t < &Rat::one()),
            scale in arb_rat(1, 9).prop_filter("positive", |s| s.is_positive()),
            u in arb_node_class(),
            w in arb_node_class(),
        ) {
            let params = StabilityParams::node_path(t);
            let scaled = StabilityParams {
                alpha: params.alpha.iter().map(|x| x * &scale).collect(),
                beta: params.beta.iter().map(|x| x * &scale).collect(),
                gamma: params.gamma.iter().map(|x| x * &scale).collect(),
                delta: params
                    .delta
                    .iter()
                    .map(|row| row.iter().map(|x| x * &scale).collect())
                    .collect(),
            };
            let before = slope_order(&params, &u, &w);
            let after = slope_order(&scaled, &u, &w);
            match (before, after) {
                (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
                (Err(_), Err(_)) => {}
                other => prop_assert!(false, "scaling changed error behaviour: {:?}", other),
            }
        }

        #[test]
        fn support_check_accepts_phase1_classes_node(
            t in (1i64..20).prop_map(|n| rat(n, 20)).prop_filter("0<t<1", |t| t < &Rat::one()),
        ) {
            let node = node_curve();
            let params = StabilityParams::node_path(t);
            for family in phase1_stable_types(&node) {
                for v in family.classes(&node, 3) {
                    prop_assert!(
                        support_check(&params, &node, &v).unwrap(),
                        "failed for {} in {:?}", v, family
                    );
                }
            }
        }

        #[test]
        fn support_check_accepts_phase1_classes_tacnode(
            d1 in (1i64..12).prop_map(|n| rat(n, 25)),
            d2 in (1i64..12).prop_map(|n| rat(n, 25)),
        ) {
            let curve = tacnode_curve();
            // keep delta1 + 2 delta2 < 1
            prop_assume!(&d1 + ratz(2) * &d2 < Rat::one());
            let params = StabilityParams::tacnode_triangle(d1, d2);
            for family in phase1_stable_types(&curve) {
                for v in family.classes(&curve, 2) {
                    prop_assert!(
                        support_check(&params, &curve, &v).unwrap(),
                        "failed for {} in {:?}", v, family
                    );
                }
            }
        }
    }
}
