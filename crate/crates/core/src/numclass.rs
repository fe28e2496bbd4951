//! The numerical lattice `Z^(2n+me)` of classes `(rk_k, deg_k, l_ij)`:
//! norm, primitivity, Euler pairings for the two closed-form curve kinds,
//! admissibility bounds, and pushforward degree bookkeeping.
//!
//! Euler pairings carry the genus symbolically (see [`GenusPoly`]); every
//! other quantity is an exact integer.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::curve::{CurveConfig, CurveKind};
use crate::error::Error;
use crate::genus::GenusPoly;

/// A class in the numerical lattice: component ranks, component degrees,
/// and the m×e block of lengths `l_ij`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumClass {
    rk: Vec<i64>,
    deg: Vec<i64>,
    ell: Vec<Vec<i64>>,
}

impl NumClass {
    pub fn new(rk: Vec<i64>, deg: Vec<i64>, ell: Vec<Vec<i64>>) -> Result<NumClass, Error> {
        if rk.len() != deg.len() {
            return Err(Error::ShapeMismatch {
                what: "NumClass".into(),
                expected: format!("{} degrees (one per component)", rk.len()),
                got: format!("{}", deg.len()),
            });
        }
        if rk.is_empty() {
            return Err(Error::ShapeMismatch {
                what: "NumClass".into(),
                expected: "at least one component".into(),
                got: "none".into(),
            });
        }
        if let Some(row) = ell.iter().find(|row| row.len() != ell[0].len()) {
            return Err(Error::ShapeMismatch {
                what: "NumClass".into(),
                expected: format!("rectangular ell block with {} columns", ell[0].len()),
                got: format!("a row of length {}", row.len()),
            });
        }
        Ok(NumClass { rk, deg, ell })
    }

    /// Node/cusp-shaped class `(r, d, l)`.
    pub fn node(r: i64, d: i64, l: i64) -> NumClass {
        NumClass { rk: vec![r], deg: vec![d], ell: vec![vec![l]] }
    }

    /// Tacnode-shaped class `(r, d, l1, l2)`.
    pub fn tacnode(r: i64, d: i64, l1: i64, l2: i64) -> NumClass {
        NumClass { rk: vec![r], deg: vec![d], ell: vec![vec![l1, l2]] }
    }

    pub fn zero(n: usize, m: usize, e: usize) -> NumClass {
        NumClass { rk: vec![0; n], deg: vec![0; n], ell: vec![vec![0; e]; m] }
    }

    pub fn n(&self) -> usize {
        self.rk.len()
    }

    pub fn m(&self) -> usize {
        self.ell.len()
    }

    pub fn e(&self) -> usize {
        self.ell.first().map_or(0, |row| row.len())
    }

    pub fn rk(&self, k: usize) -> i64 {
        self.rk[k]
    }

    pub fn deg(&self, k: usize) -> i64 {
        self.deg[k]
    }

    /// `l_ij` with 1-based `j` (matching the power `I^(e-j)`).
    pub fn ell(&self, i: usize, j: usize) -> i64 {
        self.ell[i][j - 1]
    }

    pub fn ranks(&self) -> &[i64] {
        &self.rk
    }

    pub fn degs(&self) -> &[i64] {
        &self.deg
    }

    pub fn ells(&self) -> &[Vec<i64>] {
        &self.ell
    }

    pub fn is_zero(&self) -> bool {
        self.to_flat().iter().all(|&c| c == 0)
    }

    pub fn check_shape(&self, curve: &CurveConfig) -> Result<(), Error> {
        let ok = self.n() == curve.n
            && self.m() == curve.m
            && (self.m() == 0 || self.e() == curve.e);
        if ok {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                what: "NumClass".into(),
                expected: format!("(n, m, e) = ({}, {}, {})", curve.n, curve.m, curve.e),
                got: format!("({}, {}, {})", self.n(), self.m(), self.e()),
            })
        }
    }

    /// Flat coordinate layout: `rk_1..rk_n, deg_1..deg_n, l_11..l_1e, ..., l_m1..l_me`.
    pub fn to_flat(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(2 * self.n() + self.m() * self.e());
        out.extend_from_slice(&self.rk);
        out.extend_from_slice(&self.deg);
        for row in &self.ell {
            out.extend_from_slice(row);
        }
        out
    }

    pub fn from_flat(curve: &CurveConfig, coords: &[i64]) -> Result<NumClass, Error> {
        let expected = curve.lattice_rank();
        if coords.len() != expected {
            return Err(Error::BadClass {
                text: format!("{coords:?}"),
                reason: format!(
                    "expected {expected} coordinates (rk x{n}, deg x{n}, ell {m}x{e})",
                    n = curve.n,
                    m = curve.m,
                    e = curve.e
                ),
            });
        }
        let rk = coords[..curve.n].to_vec();
        let deg = coords[curve.n..2 * curve.n].to_vec();
        let ell = (0..curve.m)
            .map(|i| {
                let start = 2 * curve.n + i * curve.e;
                coords[start..start + curve.e].to_vec()
            })
            .collect();
        Ok(NumClass { rk, deg, ell })
    }

    /// Parse a comma-separated coordinate list like `6,1,6` in flat layout.
    pub fn parse_list(curve: &CurveConfig, text: &str) -> Result<NumClass, Error> {
        let coords: Result<Vec<i64>, _> = text
            .split(',')
            .map(|s| s.trim().parse::<i64>())
            .collect();
        let coords = coords.map_err(|e| Error::BadClass {
            text: text.to_owned(),
            reason: e.to_string(),
        })?;
        NumClass::from_flat(curve, &coords)
    }

    /// `(r, d, l)` when node/cusp-shaped.
    pub fn node_parts(&self) -> Option<(i64, i64, i64)> {
        if self.n() == 1 && self.m() == 1 && self.e() == 1 {
            Some((self.rk[0], self.deg[0], self.ell[0][0]))
        } else {
            None
        }
    }

    /// `(r, d, l1, l2)` when tacnode-shaped.
    pub fn tacnode_parts(&self) -> Option<(i64, i64, i64, i64)> {
        if self.n() == 1 && self.m() == 1 && self.e() == 2 {
            Some((self.rk[0], self.deg[0], self.ell[0][0], self.ell[0][1]))
        } else {
            None
        }
    }

    pub fn scale(&self, k: i64) -> NumClass {
        NumClass {
            rk: self.rk.iter().map(|c| c * k).collect(),
            deg: self.deg.iter().map(|c| c * k).collect(),
            ell: self.ell.iter().map(|row| row.iter().map(|c| c * k).collect()).collect(),
        }
    }

    fn coord_gcd(&self) -> u64 {
        self.to_flat()
            .iter()
            .fold(0u64, |acc, &c| num::integer::gcd(acc, c.unsigned_abs()))
    }

    /// Extract the content: `v = gcd * primitive`. Errors on the zero class.
    pub fn primitive_part(&self) -> Result<(u64, NumClass), Error> {
        let g = self.coord_gcd();
        if g == 0 {
            return Err(Error::ZeroVector);
        }
        Ok((g, self.scale_down(g as i64)))
    }

    fn scale_down(&self, k: i64) -> NumClass {
        NumClass {
            rk: self.rk.iter().map(|c| c / k).collect(),
            deg: self.deg.iter().map(|c| c / k).collect(),
            ell: self.ell.iter().map(|row| row.iter().map(|c| c / k).collect()).collect(),
        }
    }
}

/// `sum deg_k^2 + sum rk_k^2 + sum l_ij^2`.
pub fn norm_sq(v: &NumClass) -> BigInt {
    v.to_flat()
        .iter()
        .map(|&c| BigInt::from(i128::from(c) * i128::from(c)))
        .sum()
}

/// True iff the gcd of all `2n + me` coordinates is 1. Errors on zero.
pub fn is_primitive(v: &NumClass) -> Result<bool, Error> {
    let g = v.coord_gcd();
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    Ok(g == 1)
}

fn assert_same_shape(a: &NumClass, b: &NumClass) {
    assert!(
        a.n() == b.n() && a.m() == b.m() && a.e() == b.e(),
        "numerical classes from different lattices: ({}, {}, {}) vs ({}, {}, {})",
        a.n(),
        a.m(),
        a.e(),
        b.n(),
        b.m(),
        b.e()
    );
}

impl Add for &NumClass {
    type Output = NumClass;
    fn add(self, other: &NumClass) -> NumClass {
        assert_same_shape(self, other);
        NumClass {
            rk: self.rk.iter().zip(&other.rk).map(|(a, b)| a + b).collect(),
            deg: self.deg.iter().zip(&other.deg).map(|(a, b)| a + b).collect(),
            ell: self
                .ell
                .iter()
                .zip(&other.ell)
                .map(|(ra, rb)| ra.iter().zip(rb).map(|(a, b)| a + b).collect())
                .collect(),
        }
    }
}

impl Sub for &NumClass {
    type Output = NumClass;
    fn sub(self, other: &NumClass) -> NumClass {
        self + &(-other)
    }
}

impl Neg for &NumClass {
    type Output = NumClass;
    fn neg(self) -> NumClass {
        self.scale(-1)
    }
}

impl fmt::Display for NumClass {
    /// Flat tuple `(r, d, l, ...)` — for node classes `(6, 1, 6)`, tacnode `(2, 1, 2, 4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flat: Vec<String> = self.to_flat().iter().map(|c| c.to_string()).collect();
        write!(f, "({})", flat.join(", "))
    }
}

impl Serialize for NumClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (&self.rk, &self.deg, &self.ell).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Full(Vec<i64>, Vec<i64>, Vec<Vec<i64>>),
            Flat(Vec<i64>),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Full(rk, deg, ell) => NumClass::new(rk, deg, ell).map_err(D::Error::custom),
            Repr::Flat(coords) => match coords.as_slice() {
                [r, d, l] => Ok(NumClass::node(*r, *d, *l)),
                [r, d, l1, l2] => Ok(NumClass::tacnode(*r, *d, *l1, *l2)),
                other => Err(D::Error::custom(format!(
                    "flat class shorthand takes 3 (node) or 4 (tacnode) entries, got {}",
                    other.len()
                ))),
            },
        }
    }
}

fn shape_error(what: &str, expected: &str, v: &NumClass) -> Error {
    Error::ShapeMismatch {
        what: what.into(),
        expected: expected.into(),
        got: format!("(n, m, e) = ({}, {}, {})", v.n(), v.m(), v.e()),
    }
}

/// Euler pairing for node/cusp-shaped classes:
/// `chi(v, v') = d'r - dr' + rr' - rr'g - 2rl' + ll'`.
pub fn euler_node(v: &NumClass, w: &NumClass) -> Result<GenusPoly, Error> {
    let (r, d, l) = v.node_parts().ok_or_else(|| shape_error("euler_node", "(n, m, e) = (1, 1, 1)", v))?;
    let (rp, dp, lp) =
        w.node_parts().ok_or_else(|| shape_error("euler_node", "(n, m, e) = (1, 1, 1)", w))?;
    let (r, d, l) = (i128::from(r), i128::from(d), i128::from(l));
    let (rp, dp, lp) = (i128::from(rp), i128::from(dp), i128::from(lp));
    let constant = dp * r - d * rp + r * rp - 2 * r * lp + l * lp;
    Ok(GenusPoly { g_coeff: BigInt::from(-r * rp), constant: BigInt::from(constant) })
}

/// Euler pairing for tacnode-shaped classes:
/// `chi(v, v') = d'r - dr' + rr'(1-g) - 2r l2' + 2 l1 l1' - l1 l2' - l2 l1' + l2 l2'`.
pub fn euler_tacnode(v: &NumClass, w: &NumClass) -> Result<GenusPoly, Error> {
    let (r, d, l1, l2) =
        v.tacnode_parts().ok_or_else(|| shape_error("euler_tacnode", "(n, m, e) = (1, 1, 2)", v))?;
    let (rp, dp, l1p, l2p) =
        w.tacnode_parts().ok_or_else(|| shape_error("euler_tacnode", "(n, m, e) = (1, 1, 2)", w))?;
    let (r, d, l1, l2) = (i128::from(r), i128::from(d), i128::from(l1), i128::from(l2));
    let (rp, dp, l1p, l2p) = (i128::from(rp), i128::from(dp), i128::from(l1p), i128::from(l2p));
    let constant = dp * r - d * rp + r * rp - 2 * r * l2p + 2 * l1 * l1p - l1 * l2p - l2 * l1p + l2 * l2p;
    Ok(GenusPoly { g_coeff: BigInt::from(-r * rp), constant: BigInt::from(constant) })
}

/// Euler pairing of the point Auslander algebra (e = 2) on dimension pairs:
/// `2 l1 l1' - l1 l2' - l2 l1' + l2 l2'`.
pub fn euler_auslander(l1: i64, l2: i64, l1p: i64, l2p: i64) -> i64 {
    let (a, b, c, d) = (i128::from(l1), i128::from(l2), i128::from(l1p), i128::from(l2p));
    i64::try_from(2 * a * c - a * d - b * c + b * d).expect("length products exceed i64")
}

/// The Euler pairing attached to a curve kind; only the two closed-form
/// kinds are supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerForm {
    pub kind: CurveKind,
}

impl EulerForm {
    pub fn for_curve(curve: &CurveConfig) -> Result<EulerForm, Error> {
        match curve.kind() {
            kind @ (CurveKind::NodeOrCusp | CurveKind::Tacnode) => Ok(EulerForm { kind }),
            CurveKind::Generic => Err(Error::UnsupportedKind {
                kind: "generic".into(),
                what: "the Euler pairing".into(),
            }),
        }
    }

    pub fn pairing(&self, v: &NumClass, w: &NumClass) -> Result<GenusPoly, Error> {
        match self.kind {
            CurveKind::NodeOrCusp => euler_node(v, w),
            CurveKind::Tacnode => euler_tacnode(v, w),
            CurveKind::Generic => Err(Error::UnsupportedKind {
                kind: "generic".into(),
                what: "the Euler pairing".into(),
            }),
        }
    }
}

/// Pushforward to the base curve: `(r, d + r*(p_a - g) - sum_i l_ie)`.
/// Requires an irreducible curve.
pub fn pushforward_class(v: &NumClass, curve: &CurveConfig) -> Result<(i64, i64), Error> {
    if curve.n != 1 {
        return Err(Error::ReducibleCurve { n: curve.n });
    }
    v.check_shape(curve)?;
    let r = v.rk(0);
    let tail: i64 = (0..curve.m).map(|i| v.ell(i, curve.e)).sum();
    Ok((r, v.deg(0) + r * curve.pa_minus_g - tail))
}

/// Admissibility of a class (the necessary length bounds for a quotient of
/// a sheaf pulled back from the normalization):
/// node/cusp `0 <= l <= 2r`; tacnode `0 <= l1 <= 2r` and `0 <= l2 - l1 <= 2r`;
/// generic curves get only the necessary per-point surjectivity bound
/// `0 <= l_ij <= sum_(p over q_i) rk_(k(p)) * l(I^(e-j)|_p)`.
pub fn admissible_class(v: &NumClass, curve: &CurveConfig) -> Result<bool, Error> {
    v.check_shape(curve)?;
    for (k, &r) in v.ranks().iter().enumerate() {
        if r < 0 {
            return Err(Error::NegativeRank { component: k, rank: r });
        }
    }
    match curve.kind() {
        CurveKind::NodeOrCusp => {
            let (r, _, l) = v.node_parts().expect("kind implies shape");
            Ok(0 <= l && l <= 2 * r)
        }
        CurveKind::Tacnode => {
            let (r, _, l1, l2) = v.tacnode_parts().expect("kind implies shape");
            Ok(0 <= l1 && l1 <= 2 * r && 0 <= l2 - l1 && l2 - l1 <= 2 * r)
        }
        CurveKind::Generic => {
            for i in 0..curve.m {
                for j in 1..=curve.e {
                    let l = i128::from(v.ell(i, j));
                    let bound: i128 = curve.sing_points[i]
                        .preimages
                        .iter()
                        .map(|p| i128::from(v.rk(p.component)) * i128::from(p.lengths[j - 1]))
                        .sum();
                    if l < 0 || l > bound {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
    }
}
