//! Curve/singularity configurations and the reference data of classical
//! planar singularities.
//!
//! A [`CurveConfig`] is the discrete input to every other module: the number
//! of components of the normalization, the singular points with their
//! preimage points, and per preimage point `p` the lengths `l(I^(e-j)|_p)`
//! for `j = 1..e`, where `I` is the ideal of the reduced singular points
//! inside the non-rational locus and `e` is an exponent with `I^e = 0`.
//! Presets expand the five standard families (node, cusp, tacnode, ordinary
//! n-uple, A_k) to explicit length data.
//!
//! The reference data — conductor ideals and ring presentations of
//! singularities resolved by a reduced point — is tabulated, not computed:
//! no polynomial arithmetic happens here.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A point of the normalization lying over a singular point, together with
/// the lengths `l(I^(e-j)|_p)` for `j = 1..e` (stored with `j = idx + 1`,
/// i.e. `lengths[0] = l(I^(e-1)|_p)` up to `lengths[e-1] = l(I^0|_p)`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreimagePoint {
    pub component: usize,
    pub lengths: Vec<u64>,
}

/// A singular point `q_i` of the base curve, given by its preimage points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingPoint {
    pub preimages: Vec<PreimagePoint>,
}

/// The five standard singularity presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Preset {
    Node,
    Cusp,
    Tacnode,
    /// Ordinary n-uple point, n >= 2 (n = 2 is the node).
    Ordinary(u32),
    /// A_k singularity, k >= 1 (k = 1 is the node, k = 2 the cusp, k = 3 the tacnode).
    A(u32),
}

impl Preset {
    /// Accepts `node`, `cusp`, `tacnode`, `ordinary(4)`/`ordinary:4`, `A(3)`/`a:3`.
    pub fn parse(s: &str) -> Result<Preset, Error> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        match lower.as_str() {
            "node" => return Ok(Preset::Node),
            "cusp" => return Ok(Preset::Cusp),
            "tacnode" => return Ok(Preset::Tacnode),
            _ => {}
        }
        let unknown = || Error::UnknownKind { kind: s.to_owned() };
        let param = |prefix: &str| -> Option<Result<u32, Error>> {
            let rest = lower.strip_prefix(prefix)?;
            let digits = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .or_else(|| rest.strip_prefix(':'))
                .unwrap_or(rest);
            Some(digits.trim().parse::<u32>().map_err(|_| unknown()))
        };
        if let Some(n) = param("ordinary") {
            let n = n?;
            if n < 2 {
                return Err(Error::InvalidCurve {
                    invariant: "ordinary n-uple needs n >= 2".into(),
                    detail: format!("got n = {n}"),
                });
            }
            return Ok(Preset::Ordinary(n));
        }
        if let Some(k) = param("a") {
            let k = k?;
            if k < 1 {
                return Err(Error::InvalidCurve {
                    invariant: "A_k needs k >= 1".into(),
                    detail: "got k = 0".into(),
                });
            }
            return Ok(Preset::A(k));
        }
        Err(unknown())
    }

    /// Expand to the explicit configuration (irreducible curve, one singular point).
    pub fn config(self) -> CurveConfig {
        let point = |lengths: Vec<u64>| PreimagePoint { component: 0, lengths };
        let (e, preimages, pa_minus_g): (usize, Vec<PreimagePoint>, i64) = match self {
            Preset::Node => (1, vec![point(vec![1]), point(vec![1])], 1),
            Preset::Cusp => (1, vec![point(vec![2])], 1),
            Preset::Tacnode => (2, vec![point(vec![1, 2]), point(vec![1, 2])], 2),
            Preset::Ordinary(n) => {
                let e = (n - 1) as usize;
                let lengths: Vec<u64> = (1..=e as u64).collect();
                let pts = (0..n).map(|_| point(lengths.clone())).collect();
                (e, pts, i64::from(n) * (i64::from(n) - 1) / 2)
            }
            Preset::A(k) if k % 2 == 1 => {
                // two branches; I pulls back to the maximal ideal on each
                let h = ((k + 1) / 2) as usize;
                let lengths: Vec<u64> = (1..=h as u64).collect();
                (h, vec![point(lengths.clone()), point(lengths)], ((k + 1) / 2).into())
            }
            Preset::A(k) => {
                // one branch; I pulls back to the square of the maximal ideal
                let e = (k / 2) as usize;
                let lengths: Vec<u64> = (1..=e as u64).map(|j| 2 * j).collect();
                (e, vec![point(lengths)], ((k + 1) / 2).into())
            }
        };
        CurveConfig {
            n: 1,
            genera: vec![0],
            m: 1,
            e,
            sing_points: vec![SingPoint { preimages }],
            pa_minus_g,
            preset: Some(self),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Node => write!(f, "node"),
            Preset::Cusp => write!(f, "cusp"),
            Preset::Tacnode => write!(f, "tacnode"),
            Preset::Ordinary(n) => write!(f, "ordinary({n})"),
            Preset::A(k) => write!(f, "A({k})"),
        }
    }
}

/// The curve kinds with closed-form Euler pairings and wall formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    /// Irreducible, one singular point, `e = 1`, preimage scheme of total length 2.
    NodeOrCusp,
    /// Irreducible, one singular point, `e = 2`, two preimage points of lengths (1, 2).
    Tacnode,
    Generic,
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveKind::NodeOrCusp => write!(f, "node/cusp"),
            CurveKind::Tacnode => write!(f, "tacnode"),
            CurveKind::Generic => write!(f, "generic"),
        }
    }
}

/// Validated curve/singularity configuration.
///
/// `genera` is recorded for reference only: every symbolic computation keeps
/// the genus as an indeterminate and the arithmetic genus of the base enters
/// only through `pa_minus_g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveConfig {
    /// Number of irreducible components of the normalization.
    pub n: usize,
    /// Genus of each component (reference data; defaults to zeros).
    #[serde(default)]
    pub genera: Vec<i64>,
    /// Number of singular points.
    pub m: usize,
    /// Exponent with `I^e = 0`.
    pub e: usize,
    pub sing_points: Vec<SingPoint>,
    /// `p_a(C) - g`, the only way the two genera enter any formula.
    pub pa_minus_g: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<Preset>,
}

impl CurveConfig {
    /// Parse a curve spec: either `{"preset": "..."}` or the full object.
    pub fn from_json(text: &str) -> Result<CurveConfig, Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct PresetOnly {
            preset: String,
        }
        if let Ok(p) = serde_json::from_str::<PresetOnly>(text) {
            let config = Preset::parse(&p.preset)?.config();
            config.validate()?;
            return Ok(config);
        }
        let config: CurveConfig = serde_json::from_str(text)?;
        let config = config.normalized();
        config.validate()?;
        Ok(config)
    }

    /// Fill defaulted fields (zero genera) without touching explicit data.
    fn normalized(mut self) -> CurveConfig {
        if self.genera.is_empty() {
            self.genera = vec![0; self.n];
        }
        self
    }

    /// Check every structural invariant; errors name the violated one.
    pub fn validate(&self) -> Result<(), Error> {
        let fail = |invariant: &str, detail: String| {
            Err(Error::InvalidCurve { invariant: invariant.into(), detail })
        };
        if self.n == 0 {
            return fail("n >= 1", "curve has no components".into());
        }
        if self.e == 0 {
            return fail("e >= 1", "exponent e must be positive".into());
        }
        if self.genera.len() != self.n {
            return fail(
                "genera has one entry per component",
                format!("n = {}, got {} genera", self.n, self.genera.len()),
            );
        }
        if let Some(g) = self.genera.iter().find(|&&g| g < 0) {
            return fail("genera are nonnegative", format!("got {g}"));
        }
        if self.sing_points.len() != self.m {
            return fail(
                "m matches sing_points",
                format!("m = {}, got {} singular points", self.m, self.sing_points.len()),
            );
        }
        for (i, q) in self.sing_points.iter().enumerate() {
            if q.preimages.is_empty() {
                return fail("every singular point has a preimage", format!("q_{} has none", i + 1));
            }
            for (pidx, p) in q.preimages.iter().enumerate() {
                if p.component >= self.n {
                    return fail(
                        "preimage component index < n",
                        format!("q_{} preimage {} references component {}", i + 1, pidx + 1, p.component),
                    );
                }
                if p.lengths.len() != self.e {
                    return fail(
                        "each preimage point carries e lengths",
                        format!(
                            "q_{} preimage {} has {} lengths, e = {}",
                            i + 1,
                            pidx + 1,
                            p.lengths.len(),
                            self.e
                        ),
                    );
                }
                // l(I^(e-j)|_p) is nonincreasing in the power e-j, i.e.
                // nondecreasing as stored (j increasing).
                if p.lengths.windows(2).any(|w| w[0] > w[1]) {
                    return fail(
                        "lengths of ideal powers shrink",
                        format!("q_{} preimage {} has lengths {:?}", i + 1, pidx + 1, p.lengths),
                    );
                }
                if *p.lengths.last().expect("e >= 1") == 0 {
                    return fail(
                        "l(I^0|_p) >= 1",
                        format!("q_{} preimage {} has zero structure-sheaf length", i + 1, pidx + 1),
                    );
                }
            }
        }
        if let Some(preset) = self.preset {
            let expected = preset.config();
            let same = self.n == expected.n
                && self.m == expected.m
                && self.e == expected.e
                && self.sing_points == expected.sing_points
                && self.pa_minus_g == expected.pa_minus_g;
            if !same {
                return fail(
                    "preset data matches its expansion",
                    format!("config tagged `{preset}` disagrees with the preset's length data"),
                );
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> CurveKind {
        if self.n == 1 && self.m == 1 {
            let q = &self.sing_points[0];
            if self.e == 1 {
                let total: u64 = q.preimages.iter().map(|p| p.lengths[0]).sum();
                if total == 2 {
                    return CurveKind::NodeOrCusp;
                }
            }
            if self.e == 2
                && q.preimages.len() == 2
                && q.preimages.iter().all(|p| p.lengths == [1, 2])
            {
                return CurveKind::Tacnode;
            }
        }
        CurveKind::Generic
    }

    /// `l(I^(e-j)|_p)` for singular point `i`, preimage index `p` (0-based), `j` in `1..=e`.
    pub fn length(&self, i: usize, p: usize, j: usize) -> u64 {
        self.sing_points[i].preimages[p].lengths[j - 1]
    }

    /// Sum of `l(I^(e-j)|_p)` over the preimages of `q_i` lying on component `k`.
    pub fn component_length(&self, k: usize, i: usize, j: usize) -> u64 {
        self.sing_points[i]
            .preimages
            .iter()
            .filter(|p| p.component == k)
            .map(|p| p.lengths[j - 1])
            .sum()
    }

    /// Sum of `l(I^(e-j)|_p)` over all preimage points of all singular points.
    pub fn total_length(&self, j: usize) -> u64 {
        (0..self.m).map(|i| (0..self.n).map(|k| self.component_length(k, i, j)).sum::<u64>()).sum()
    }

    /// Dimension `2n + me` of the numerical lattice.
    pub fn lattice_rank(&self) -> usize {
        2 * self.n + self.m * self.e
    }
}

/// Tabulated singularity families for conductor lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingKind {
    Node,
    Cusp,
    Ordinary(u32),
    A(u32),
    /// A singularity resolved by a reduced point, keyed by branch multiplicities.
    Multiplicities(Vec<u32>),
}

/// Symbolic ideal `(generators)^power`, e.g. `(x, y)^2` or `(x^2, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConductorIdeal {
    pub generators: Vec<String>,
    pub power: u32,
}

impl fmt::Display for ConductorIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generators.join(", "))?;
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        Ok(())
    }
}

/// A ring presentation by generators and relations (canonical strings,
/// sorted generators, explicit exponents; no polynomial arithmetic).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
}

/// Reference data for one singularity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityDescriptor {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local_equation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conductor: Option<ConductorIdeal>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<Presentation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// The derivation in the text computes the ordinary n-uple conductor as
/// `(x, y)^(n-1)`, which specializes to the node at n = 2; the summary table
/// prints `(x, y)^n`. We keep the derived exponent.
pub const ORDINARY_CONDUCTOR_NOTE: &str = "ordinary n-uple conductor: the worked derivation gives (x, y)^(n-1), matching the node at n = 2; the summary table's (x, y)^n does not, so the derived exponent n-1 is used here.";

/// Conductor ideal of one of the four tabulated singularity families.
pub fn conductor_lookup(kind: &SingKind) -> Result<SingularityDescriptor, Error> {
    let ideal = |gens: &[&str], power: u32| {
        Some(ConductorIdeal { generators: gens.iter().map(|s| s.to_string()).collect(), power })
    };
    match kind {
        SingKind::Node => Ok(SingularityDescriptor {
            kind: "node".into(),
            local_equation: Some("xy".into()),
            conductor: ideal(&["x", "y"], 1),
            presentation: None,
            note: None,
        }),
        SingKind::Cusp => Ok(SingularityDescriptor {
            kind: "cusp".into(),
            local_equation: Some("y^2 - x^3".into()),
            conductor: ideal(&["x", "y"], 1),
            presentation: None,
            note: None,
        }),
        SingKind::Ordinary(n) => {
            if *n < 2 {
                return Err(Error::UnknownKind { kind: format!("ordinary({n})") });
            }
            Ok(SingularityDescriptor {
                kind: format!("ordinary({n})"),
                local_equation: Some(format!(
                    "prod_(i=1..{n}) (y - lambda_i x), lambda_i pairwise distinct"
                )),
                conductor: ideal(&["x", "y"], n - 1),
                presentation: None,
                note: Some(ORDINARY_CONDUCTOR_NOTE.into()),
            })
        }
        SingKind::A(k) => {
            if *k < 1 {
                return Err(Error::UnknownKind { kind: "A(0)".into() });
            }
            let h = (k + 1) / 2;
            let xgen = if h == 1 { "x".to_string() } else { format!("x^{h}") };
            Ok(SingularityDescriptor {
                kind: format!("A({k})"),
                local_equation: Some(format!("x^{} + y^2", k + 1)),
                conductor: Some(ConductorIdeal { generators: vec![xgen, "y".into()], power: 1 }),
                presentation: None,
                note: None,
            })
        }
        SingKind::Multiplicities(_) => Err(Error::UnknownKind {
            kind: "multiplicity tuple (use small_nr_presentation for presentations)".into(),
        }),
    }
}

/// The four rows of the planar-singularity conductor table, symbolically:
/// (singularity, local equation, conductor).
pub fn conductor_table_rows() -> Vec<[String; 3]> {
    vec![
        ["Node".into(), "xy".into(), "(x, y)".into()],
        ["Cusp".into(), "y^2 - x^3".into(), "(x, y)".into()],
        [
            "Ordinary n-uple point".into(),
            "prod_(i=1..n) (y - lambda_i x)".into(),
            "(x, y)^(n-1)".into(),
        ],
        ["A_k".into(), "x^(k+1) + y^2".into(), "(x^floor((k+1)/2), y)".into()],
    ]
}

fn mult_generators(mults: &[u32]) -> Vec<(usize, u32)> {
    // generators x_{i,j} for 1 <= i <= s, e_i <= j <= 2e_i - 1
    let mut gens = Vec::new();
    for (idx, &ei) in mults.iter().enumerate() {
        for j in ei..=(2 * ei - 1) {
            gens.push((idx + 1, j));
        }
    }
    gens
}

fn render_presentation(mults: &[u32], name: &dyn Fn(usize, u32) -> String) -> Presentation {
    let gens = mult_generators(mults);
    let generators: Vec<String> = gens.iter().map(|&(i, j)| name(i, j as u32)).collect();
    let mut relations = Vec::new();
    // same branch: x_{i,j}^(j') - x_{i,j'}^j for j < j'
    for (idx, &ei) in mults.iter().enumerate() {
        let i = idx + 1;
        let range: Vec<u32> = (ei..=(2 * ei - 1)).collect();
        for a in 0..range.len() {
            for b in (a + 1)..range.len() {
                let (j, jp) = (range[a], range[b]);
                relations.push(format!("{}^{} - {}^{}", name(i, j), jp, name(i, jp), j));
            }
        }
    }
    // distinct branches: x_{i,j} * x_{i',j'}
    for (ia, &ea) in mults.iter().enumerate() {
        for (ib, &eb) in mults.iter().enumerate().skip(ia + 1) {
            for j in ea..=(2 * ea - 1) {
                for jp in eb..=(2 * eb - 1) {
                    relations.push(format!("{}*{}", name(ia + 1, j), name(ib + 1, jp)));
                }
            }
        }
    }
    Presentation { generators, relations }
}

/// Ring presentation of the singularity with branch multiplicities
/// `(e_1, ..., e_s)` whose reduced point is a non-rational locus:
/// generators `x_{i,j}` (`e_i <= j <= 2e_i - 1`) with the two relation
/// families `x_{i,j}^(j') - x_{i,j'}^j` and `x_{i,j} x_{i',j'}` (`i != i'`).
/// The generator count equals the embedding dimension `sum e_i`.
pub fn small_nr_presentation(mults: &[u32]) -> Result<SingularityDescriptor, Error> {
    if mults.is_empty() || mults.iter().any(|&e| e == 0) {
        return Err(Error::EmptyMultiplicities);
    }
    let presentation =
        render_presentation(mults, &|i, j| format!("x_{{{i},{j}}}"));
    debug_assert_eq!(
        presentation.generators.len(),
        mults.iter().map(|&e| e as usize).sum::<usize>(),
        "generator count must equal the embedding dimension"
    );
    let mut sorted = mults.to_vec();
    sorted.sort_unstable();
    let note = match sorted.as_slice() {
        [1, 1] => Some("this is the node".to_string()),
        [2] => Some("this is the cusp".to_string()),
        s if s.iter().all(|&e| e == 1) => {
            Some(format!("coordinate axes in C^{}", s.len()))
        }
        _ => None,
    };
    Ok(SingularityDescriptor {
        kind: format!(
            "multiplicity-tuple ({})",
            mults.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
        ),
        local_equation: None,
        conductor: None,
        presentation: Some(presentation),
        note,
    })
}

/// The same presentation with generators renamed `x, y, z, w, v5, v6, ...`
/// in order — a normal form for comparing presentations across naming schemes.
pub fn small_nr_presentation_canonical(mults: &[u32]) -> Result<Presentation, Error> {
    if mults.is_empty() || mults.iter().any(|&e| e == 0) {
        return Err(Error::EmptyMultiplicities);
    }
    let gens = mult_generators(mults);
    let canonical_name = |pos: usize| -> String {
        match pos {
            0 => "x".into(),
            1 => "y".into(),
            2 => "z".into(),
            3 => "w".into(),
            p => format!("v{}", p + 1),
        }
    };
    let name = move |i: usize, j: u32| -> String {
        let pos = gens.iter().position(|&(gi, gj)| gi == i && gj == j as u32).expect("generator exists");
        canonical_name(pos)
    };
    Ok(render_presentation(mults, &name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_parse_accepts_all_spellings() {
        assert_eq!(Preset::parse("node").unwrap(), Preset::Node);
        assert_eq!(Preset::parse("Tacnode").unwrap(), Preset::Tacnode);
        assert_eq!(Preset::parse("ordinary(4)").unwrap(), Preset::Ordinary(4));
        assert_eq!(Preset::parse("ordinary:3").unwrap(), Preset::Ordinary(3));
        assert_eq!(Preset::parse("A(3)").unwrap(), Preset::A(3));
        assert_eq!(Preset::parse("a:2").unwrap(), Preset::A(2));
        assert!(Preset::parse("lemniscate").is_err());
        assert!(Preset::parse("ordinary(1)").is_err());
    }

    #[test]
    fn node_preset_expands_to_two_unit_lengths() {
        let c = Preset::Node.config();
        assert_eq!((c.n, c.m, c.e, c.pa_minus_g), (1, 1, 1, 1));
        let q = &c.sing_points[0];
        assert_eq!(q.preimages.len(), 2);
        assert!(q.preimages.iter().all(|p| p.lengths == [1]));
        c.validate().unwrap();
        assert_eq!(c.kind(), CurveKind::NodeOrCusp);
    }

    #[test]
    fn tacnode_preset_lengths_are_one_and_two() {
        let c = Preset::Tacnode.config();
        assert_eq!(c.e, 2);
        for p in &c.sing_points[0].preimages {
            assert_eq!(p.lengths, vec![1, 2]); // l(I^1|_p) = 1, l(I^0|_p) = 2
        }
        assert_eq!(c.kind(), CurveKind::Tacnode);
        assert_eq!(c.pa_minus_g, 2);
    }

    #[test]
    fn low_parameter_presets_coincide() {
        // ordinary(2) and A(1) are the node; A(2) is the cusp; A(3) the tacnode
        let strip = |mut c: CurveConfig| {
            c.preset = None;
            c
        };
        assert_eq!(strip(Preset::Ordinary(2).config()), strip(Preset::Node.config()));
        assert_eq!(strip(Preset::A(1).config()), strip(Preset::Node.config()));
        assert_eq!(strip(Preset::A(2).config()), strip(Preset::Cusp.config()));
        assert_eq!(strip(Preset::A(3).config()), strip(Preset::Tacnode.config()));
    }

    #[test]
    fn higher_presets_validate_and_classify_generic() {
        for preset in [Preset::Ordinary(3), Preset::Ordinary(5), Preset::A(4), Preset::A(7)] {
            let c = preset.config();
            c.validate().unwrap();
            assert_eq!(c.kind(), CurveKind::Generic, "{preset}");
        }
        // delta invariants
        assert_eq!(Preset::Ordinary(3).config().pa_minus_g, 3);
        assert_eq!(Preset::A(4).config().pa_minus_g, 2);
        assert_eq!(Preset::A(7).config().pa_minus_g, 4);
    }

    #[test]
    fn cusp_is_node_or_cusp_kind() {
        assert_eq!(Preset::Cusp.config().kind(), CurveKind::NodeOrCusp);
    }

    #[test]
    fn validation_rejects_structural_violations() {
        let mut c = Preset::Node.config();
        c.e = 0;
        assert!(c.validate().is_err());

        let mut c = Preset::Node.config();
        c.sing_points[0].preimages[0].component = 5;
        assert!(c.validate().is_err());

        let mut c = Preset::Tacnode.config();
        c.sing_points[0].preimages[0].lengths = vec![2, 1]; // powers of an ideal shrink
        assert!(c.validate().is_err());

        let mut c = Preset::Node.config();
        c.sing_points[0].preimages[0].lengths = vec![0]; // l(I^0) >= 1
        assert!(c.validate().is_err());

        let mut c = Preset::Node.config();
        c.pa_minus_g = 7; // contradicts the preset tag
        assert!(c.validate().is_err());
    }

    #[test]
    fn json_preset_and_full_forms_agree() {
        let from_preset = CurveConfig::from_json(r#"{"preset": "node"}"#).unwrap();
        let full = r#"{
            "n": 1, "genera": [0], "m": 1, "e": 1,
            "sing_points": [{"preimages": [
                {"component": 0, "lengths": [1]},
                {"component": 0, "lengths": [1]}
            ]}],
            "pa_minus_g": 1
        }"#;
        let mut from_full = CurveConfig::from_json(full).unwrap();
        from_full.preset = Some(Preset::Node);
        assert_eq!(from_preset, from_full);
        assert!(CurveConfig::from_json(r#"{"preset": "heptagon"}"#).is_err());
        assert!(CurveConfig::from_json(r#"{"n": 1}"#).is_err());
    }

    #[test]
    fn validate_is_idempotent() {
        let c = Preset::Tacnode.config();
        c.validate().unwrap();
        let again = c.clone();
        again.validate().unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn conductor_rows_match_reference() {
        let node = conductor_lookup(&SingKind::Node).unwrap();
        assert_eq!(node.conductor.unwrap().to_string(), "(x, y)");
        let cusp = conductor_lookup(&SingKind::Cusp).unwrap();
        assert_eq!(cusp.conductor.unwrap().to_string(), "(x, y)");
        let a3 = conductor_lookup(&SingKind::A(3)).unwrap();
        assert_eq!(a3.conductor.unwrap().to_string(), "(x^2, y)");
        let a1 = conductor_lookup(&SingKind::A(1)).unwrap();
        assert_eq!(a1.conductor.unwrap().to_string(), "(x, y)");
        let ord4 = conductor_lookup(&SingKind::Ordinary(4)).unwrap();
        assert_eq!(ord4.conductor.unwrap().to_string(), "(x, y)^3");
        assert!(ord4.note.is_some());
    }

    #[test]
    fn node_a1_and_ordinary2_conductors_coincide() {
        let node = conductor_lookup(&SingKind::Node).unwrap().conductor.unwrap();
        let a1 = conductor_lookup(&SingKind::A(1)).unwrap().conductor.unwrap();
        let ord2 = conductor_lookup(&SingKind::Ordinary(2)).unwrap().conductor.unwrap();
        assert_eq!(node, a1);
        assert_eq!(node.to_string(), ord2.to_string());
    }

    #[test]
    fn presentations_of_small_tuples() {
        let node = small_nr_presentation(&[1, 1]).unwrap();
        let p = node.presentation.unwrap();
        assert_eq!(p.generators, vec!["x_{1,1}", "x_{2,1}"]);
        assert_eq!(p.relations, vec!["x_{1,1}*x_{2,1}"]);

        let cusp = small_nr_presentation(&[2]).unwrap();
        let p = cusp.presentation.unwrap();
        assert_eq!(p.generators, vec!["x_{1,2}", "x_{1,3}"]);
        assert_eq!(p.relations, vec!["x_{1,2}^3 - x_{1,3}^2"]);

        let axes = small_nr_presentation(&[1, 1, 1]).unwrap();
        let p = axes.presentation.unwrap();
        assert_eq!(p.generators.len(), 3);
        assert_eq!(p.relations.len(), 3); // pairwise products

        assert!(small_nr_presentation(&[]).is_err());
        assert!(small_nr_presentation(&[1, 0]).is_err());
    }

    #[test]
    fn canonical_node_presentation_matches_node_equation() {
        let canon = small_nr_presentation_canonical(&[1, 1]).unwrap();
        assert_eq!(
            canon,
            Presentation {
                generators: vec!["x".into(), "y".into()],
                relations: vec!["x*y".into()],
            }
        );
    }

    #[test]
    fn embedding_dimension_is_sum_of_multiplicities() {
        for mults in [vec![1u32, 1], vec![2], vec![2, 3], vec![1, 2, 1]] {
            let d = small_nr_presentation(&mults).unwrap();
            let expected: usize = mults.iter().map(|&e| e as usize).sum();
            assert_eq!(d.presentation.unwrap().generators.len(), expected);
        }
    }

    #[test]
    fn length_accessors() {
        let c = Preset::Tacnode.config();
        assert_eq!(c.length(0, 0, 1), 1);
        assert_eq!(c.length(0, 0, 2), 2);
        assert_eq!(c.component_length(0, 0, 2), 4);
        assert_eq!(c.total_length(1), 2);
        assert_eq!(c.lattice_rank(), 4);
    }
}
