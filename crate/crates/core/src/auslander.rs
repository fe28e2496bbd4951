//! Finite-dimensional modules over the point Auslander algebra with e = 2:
//! Hom spaces, minimal projective resolutions, Ext dimensions, and the
//! classification of submodules of powers of the big projective.
//!
//! A module is a pair of vector spaces with maps `alpha: N1 -> N2` and
//! `beta: N2 -> N1` subject to `beta alpha = 0`. Everything here is exact
//! rational linear algebra; this module is the brute-force oracle against
//! which the closed-form Euler pairing is checked.
//!
//! For e = 1 the algebra degenerates to the ground field and modules are
//! plain vector spaces (`hom = l * l'`, higher Ext zero); no quiver
//! machinery is needed there. Exponents e >= 3 (more ideal powers, longer
//! quivers) are not implemented.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matrix::Mat;
use crate::rat::Rat;

/// A representation `(N1, N2; alpha, beta)` with `beta alpha = 0`.
/// `alpha` is `l2 x l1` (the map `N1 -> N2`), `beta` is `l1 x l2`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuiverModule {
    pub l1: usize,
    pub l2: usize,
    pub alpha: Mat,
    pub beta: Mat,
}

impl QuiverModule {
    pub fn new(alpha: Mat, beta: Mat) -> Result<QuiverModule, Error> {
        let (l2, l1) = (alpha.rows(), alpha.cols());
        if beta.rows() != l1 || beta.cols() != l2 {
            return Err(Error::InvalidModule {
                reason: format!(
                    "alpha is {}x{} but beta is {}x{} (expected {}x{})",
                    l2,
                    l1,
                    beta.rows(),
                    beta.cols(),
                    l1,
                    l2
                ),
            });
        }
        if !beta.mul(&alpha)?.is_zero() {
            return Err(Error::InvalidModule { reason: "beta * alpha != 0".into() });
        }
        Ok(QuiverModule { l1, l2, alpha, beta })
    }

    /// The module with zero maps (a pair of plain vector spaces).
    pub fn with_zero_maps(l1: usize, l2: usize) -> QuiverModule {
        QuiverModule { l1, l2, alpha: Mat::zeros(l2, l1), beta: Mat::zeros(l1, l2) }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.l1, self.l2)
    }

    /// Dimension vector as a lattice class `(l1, l2)`.
    pub fn class(&self) -> (i64, i64) {
        (self.l1 as i64, self.l2 as i64)
    }

    pub fn is_zero_module(&self) -> bool {
        self.l1 == 0 && self.l2 == 0
    }

    /// Direct sum, with `other`'s basis vectors appended after `self`'s.
    pub fn direct_sum(&self, other: &QuiverModule) -> QuiverModule {
        QuiverModule {
            l1: self.l1 + other.l1,
            l2: self.l2 + other.l2,
            alpha: self.alpha.block_diag(&other.alpha),
            beta: self.beta.block_diag(&other.beta),
        }
    }

    /// Base change by invertible `g1` (`l1 x l1`) and `g2` (`l2 x l2`):
    /// `alpha' = g2 alpha g1^-1`, `beta' = g1 beta g2^-1`.
    pub fn conjugate(&self, g1: &Mat, g2: &Mat) -> Result<QuiverModule, Error> {
        let inv1 = g1.inverse()?.ok_or(Error::InvalidModule { reason: "g1 is singular".into() })?;
        let inv2 = g2.inverse()?.ok_or(Error::InvalidModule { reason: "g2 is singular".into() })?;
        QuiverModule::new(g2.mul(&self.alpha)?.mul(&inv1)?, g1.mul(&self.beta)?.mul(&inv2)?)
    }

    pub fn from_json(text: &str) -> Result<QuiverModule, Error> {
        let raw: RawModule = serde_json::from_str(text)?;
        let alpha = Mat::from_rows(raw.alpha)?;
        let beta = Mat::from_rows(raw.beta)?;
        let (l2, l1) = (alpha.rows(), alpha.cols());
        if l1 != raw.l1 || l2 != raw.l2 {
            return Err(Error::InvalidModule {
                reason: format!(
                    "declared dims ({}, {}) but alpha is {}x{}",
                    raw.l1, raw.l2, l2, l1
                ),
            });
        }
        QuiverModule::new(alpha, beta)
    }

    pub fn to_json(&self) -> String {
        let raw = RawModule {
            l1: self.l1,
            l2: self.l2,
            alpha: (0..self.l2).map(|i| self.alpha.row(i).to_vec()).collect(),
            beta: (0..self.l1).map(|i| self.beta.row(i).to_vec()).collect(),
        };
        serde_json::to_string(&raw).expect("module serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct RawModule {
    l1: usize,
    l2: usize,
    #[serde(with = "crate::rat::rat_mat")]
    alpha: Vec<Vec<Rat>>,
    #[serde(with = "crate::rat::rat_mat")]
    beta: Vec<Vec<Rat>>,
}

/// A morphism of modules `src -> dst`: `f1: src.N1 -> dst.N1`,
/// `f2: src.N2 -> dst.N2`, commuting with both structure maps.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleMap {
    pub f1: Mat,
    pub f2: Mat,
}

impl ModuleMap {
    pub fn identity(m: &QuiverModule) -> ModuleMap {
        ModuleMap { f1: Mat::identity(m.l1), f2: Mat::identity(m.l2) }
    }

    pub fn zero(src: &QuiverModule, dst: &QuiverModule) -> ModuleMap {
        ModuleMap { f1: Mat::zeros(dst.l1, src.l1), f2: Mat::zeros(dst.l2, src.l2) }
    }

    /// Verify shapes and the two commutation squares
    /// `f2 alpha_src = alpha_dst f1` and `f1 beta_src = beta_dst f2`.
    pub fn check(&self, src: &QuiverModule, dst: &QuiverModule) -> Result<(), Error> {
        let shapes_ok = self.f1.rows() == dst.l1
            && self.f1.cols() == src.l1
            && self.f2.rows() == dst.l2
            && self.f2.cols() == src.l2;
        if !shapes_ok {
            return Err(Error::ShapeMismatch {
                what: "module map".into(),
                expected: format!("f1: {}x{}, f2: {}x{}", dst.l1, src.l1, dst.l2, src.l2),
                got: format!(
                    "f1: {}x{}, f2: {}x{}",
                    self.f1.rows(),
                    self.f1.cols(),
                    self.f2.rows(),
                    self.f2.cols()
                ),
            });
        }
        let sq1 = self.f2.mul(&src.alpha)? == dst.alpha.mul(&self.f1)?;
        let sq2 = self.f1.mul(&src.beta)? == dst.beta.mul(&self.f2)?;
        if sq1 && sq2 {
            Ok(())
        } else {
            Err(Error::InvalidModule { reason: "map does not commute with alpha/beta".into() })
        }
    }

    /// `self` after `inner` (i.e. `self . inner`).
    pub fn compose(&self, inner: &ModuleMap) -> Result<ModuleMap, Error> {
        Ok(ModuleMap { f1: self.f1.mul(&inner.f1)?, f2: self.f2.mul(&inner.f2)? })
    }

    pub fn is_injective(&self) -> bool {
        self.f1.rank() == self.f1.cols() && self.f2.rank() == self.f2.cols()
    }

    pub fn is_surjective(&self) -> bool {
        self.f1.rank() == self.f1.rows() && self.f2.rank() == self.f2.rows()
    }

    fn rank_total(&self) -> usize {
        self.f1.rank() + self.f2.rank()
    }

    fn kernel_dim_total(&self) -> usize {
        (self.f1.cols() - self.f1.rank()) + (self.f2.cols() - self.f2.rank())
    }
}

/// The projective `P1 = (C, C; id, 0)`.
pub fn p1() -> QuiverModule {
    QuiverModule {
        l1: 1,
        l2: 1,
        alpha: Mat::from_int_rows(&[&[1]]),
        beta: Mat::from_int_rows(&[&[0]]),
    }
}

/// The projective(-injective) `P2 = (C, C^2; (1, 0)^T, (0, 1))`.
pub fn p2() -> QuiverModule {
    QuiverModule {
        l1: 1,
        l2: 2,
        alpha: Mat::from_int_rows(&[&[1], &[0]]),
        beta: Mat::from_int_rows(&[&[0, 1]]),
    }
}

/// The simple `S1 = (C, 0; 0, 0)`.
pub fn s1() -> QuiverModule {
    QuiverModule::with_zero_maps(1, 0)
}

/// The simple `S2 = (0, C; 0, 0)`.
pub fn s2() -> QuiverModule {
    QuiverModule::with_zero_maps(0, 1)
}

pub struct StandardModules {
    pub p1: QuiverModule,
    pub p2: QuiverModule,
    pub s1: QuiverModule,
    pub s2: QuiverModule,
}

pub fn standard_modules() -> StandardModules {
    StandardModules { p1: p1(), p2: p2(), s1: s1(), s2: s2() }
}

/// Solve the morphism equations `f2 alpha_m = alpha_n f1`,
/// `f1 beta_m = beta_n f2` as one linear system; returns the dimension and a
/// rational basis of the Hom space.
pub fn hom_space(m: &QuiverModule, n: &QuiverModule) -> Result<(usize, Vec<ModuleMap>), Error> {
    let nf1 = n.l1 * m.l1; // unknowns of f1, row-major
    let nf2 = n.l2 * m.l2;
    let unknowns = nf1 + nf2;
    let idx_f1 = |r: usize, c: usize| r * m.l1 + c;
    let idx_f2 = |r: usize, c: usize| nf1 + r * m.l2 + c;

    let mut rows: Vec<Vec<Rat>> = Vec::new();
    // f2 alpha_m - alpha_n f1 = 0: one equation per (a, b) in l2(n) x l1(m)
    for a in 0..n.l2 {
        for b in 0..m.l1 {
            let mut row = vec![Rat::from_integer(0.into()); unknowns];
            for c in 0..m.l2 {
                row[idx_f2(a, c)] += &m.alpha[(c, b)];
            }
            for c in 0..n.l1 {
                row[idx_f1(c, b)] -= &n.alpha[(a, c)];
            }
            rows.push(row);
        }
    }
    // f1 beta_m - beta_n f2 = 0: one equation per (a, b) in l1(n) x l2(m)
    for a in 0..n.l1 {
        for b in 0..m.l2 {
            let mut row = vec![Rat::from_integer(0.into()); unknowns];
            for c in 0..m.l1 {
                row[idx_f1(a, c)] += &m.beta[(c, b)];
            }
            for c in 0..n.l2 {
                row[idx_f2(c, b)] -= &n.beta[(a, c)];
            }
            rows.push(row);
        }
    }

    let system = if rows.is_empty() {
        Mat::zeros(0, unknowns)
    } else {
        Mat::from_rows(rows)?
    };
    let kernel = system.kernel_basis();
    let basis: Vec<ModuleMap> = kernel
        .iter()
        .map(|v| ModuleMap {
            f1: Mat::from_fn(n.l1, m.l1, |r, c| v[idx_f1(r, c)].clone()),
            f2: Mat::from_fn(n.l2, m.l2, |r, c| v[idx_f2(r, c)].clone()),
        })
        .collect();
    Ok((basis.len(), basis))
}

/// A direct sum `P1^a + P2^b` in the standard basis: the `a` copies of `P1`
/// first, then the `b` copies of `P2` (each contributing the N2 pair
/// `(w1, w2) = (alpha(u), the free generator)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectiveTerm {
    pub p1_copies: usize,
    pub p2_copies: usize,
}

impl ProjectiveTerm {
    pub fn dims(&self) -> (usize, usize) {
        (self.p1_copies + self.p2_copies, self.p1_copies + 2 * self.p2_copies)
    }

    pub fn class(&self) -> (i64, i64) {
        let (a, b) = self.dims();
        (a as i64, b as i64)
    }

    pub fn module(&self) -> QuiverModule {
        let mut q = QuiverModule::with_zero_maps(0, 0);
        for _ in 0..self.p1_copies {
            q = q.direct_sum(&p1());
        }
        for _ in 0..self.p2_copies {
            q = q.direct_sum(&p2());
        }
        q
    }
}

impl std::fmt::Display for ProjectiveTerm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.p1_copies, self.p2_copies) {
            (0, 0) => write!(f, "0"),
            (a, 0) => write!(f, "P1^{a}"),
            (0, b) => write!(f, "P2^{b}"),
            (a, b) => write!(f, "P1^{a} + P2^{b}"),
        }
    }
}

/// Minimal projective cover: `top M = (N1/im beta, N2/im alpha)`, one copy of
/// `P1` per top generator at vertex 1 and one `P2` per top generator at
/// vertex 2, mapping generators to standard-basis lifts.
fn projective_cover(m: &QuiverModule) -> Result<(ProjectiveTerm, ModuleMap), Error> {
    let lifts1 = complement_lifts(&m.beta, m.l1);
    let lifts2 = complement_lifts(&m.alpha, m.l2);
    let (a, b) = (lifts1.len(), lifts2.len());
    let term = ProjectiveTerm { p1_copies: a, p2_copies: b };

    // f1 columns: P1 generators -> lift x_i; P2 u-vectors -> beta_m(y_j)
    let mut f1 = Mat::zeros(m.l1, a + b);
    for (i, &x) in lifts1.iter().enumerate() {
        f1[(x, i)] = Rat::from_integer(1.into());
    }
    for (j, &y) in lifts2.iter().enumerate() {
        for r in 0..m.l1 {
            f1[(r, a + j)] = m.beta[(r, y)].clone();
        }
    }
    // f2 columns: P1 f-vectors -> alpha_m(x_i); P2 (w1, w2) -> (alpha_m beta_m y_j, y_j)
    let alpha_beta = m.alpha.mul(&m.beta)?;
    let mut f2 = Mat::zeros(m.l2, a + 2 * b);
    for (i, &x) in lifts1.iter().enumerate() {
        for r in 0..m.l2 {
            f2[(r, i)] = m.alpha[(r, x)].clone();
        }
    }
    for (j, &y) in lifts2.iter().enumerate() {
        for r in 0..m.l2 {
            f2[(r, a + 2 * j)] = alpha_beta[(r, y)].clone();
        }
        f2[(y, a + 2 * j + 1)] = Rat::from_integer(1.into());
    }
    Ok((term, ModuleMap { f1, f2 }))
}

/// Indices of standard basis vectors of `R^dim` completing the column span
/// of `span_cols` to the whole space.
fn complement_lifts(span_cols: &Mat, dim: usize) -> Vec<usize> {
    let k = span_cols.cols();
    let mut aug = Mat::zeros(dim, k + dim);
    for i in 0..dim {
        for j in 0..k {
            aug[(i, j)] = span_cols[(i, j)].clone();
        }
        aug[(i, k + i)] = Rat::from_integer(1.into());
    }
    let (_, pivots) = aug.rref();
    pivots.iter().filter(|&&p| p >= k).map(|&p| p - k).collect()
}

/// The kernel of `map: q -> m` as a module with its inclusion into `q`.
fn kernel_submodule(q: &QuiverModule, map: &ModuleMap) -> Result<(QuiverModule, ModuleMap), Error> {
    let b1 = basis_mat(q.l1, &map.f1.kernel_basis());
    let b2 = basis_mat(q.l2, &map.f2.kernel_basis());
    let solve_in = |basis: &Mat, target: Mat, what: &str| -> Result<Mat, Error> {
        basis.solve_mat(&target)?.ok_or_else(|| Error::Internal {
            detail: format!("kernel is not closed under {what}"),
        })
    };
    let alpha_k = solve_in(&b2, q.alpha.mul(&b1)?, "alpha")?;
    let beta_k = solve_in(&b1, q.beta.mul(&b2)?, "beta")?;
    let kernel = QuiverModule::new(alpha_k, beta_k)?;
    Ok((kernel, ModuleMap { f1: b1, f2: b2 }))
}

fn basis_mat(space_dim: usize, basis: &[Vec<Rat>]) -> Mat {
    Mat::from_fn(space_dim, basis.len(), |i, j| basis[j][i].clone())
}

/// A finite projective resolution `0 -> Q_L -> ... -> Q_0 -> M -> 0`.
#[derive(Debug, Clone)]
pub struct Resolution {
    /// `Q_0, Q_1, ...` (at most three terms: global dimension <= 2).
    pub terms: Vec<ProjectiveTerm>,
    /// `Q_0 -> M`.
    pub augmentation: ModuleMap,
    /// `d_i: Q_i -> Q_(i-1)` for `i = 1..`.
    pub differentials: Vec<ModuleMap>,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// Alternating sum of term classes; equals the dimension vector of the
    /// resolved module by exactness.
    pub fn euler_class(&self) -> (i64, i64) {
        let mut acc = (0i64, 0i64);
        for (i, t) in self.terms.iter().enumerate() {
            let (c1, c2) = t.class();
            let sign = if i % 2 == 0 { 1 } else { -1 };
            acc.0 += sign * c1;
            acc.1 += sign * c2;
        }
        acc
    }

    /// Rank-based exactness audit of the augmented complex
    /// `0 -> Q_L -> ... -> Q_0 -> M -> 0`.
    pub fn verify_exact(&self, m: &QuiverModule) -> Result<(), Error> {
        let internal =
            |detail: String| -> Result<(), Error> { Err(Error::Internal { detail }) };
        if !self.augmentation.is_surjective() {
            return internal("resolution augmentation is not surjective".into());
        }
        let maps: Vec<&ModuleMap> = std::iter::once(&self.augmentation)
            .chain(self.differentials.iter())
            .collect();
        // compositions vanish
        for i in 0..maps.len() - 1 {
            let comp = maps[i].compose(maps[i + 1])?;
            if !comp.f1.is_zero() || !comp.f2.is_zero() {
                return internal(format!("d_{i} . d_{} is nonzero", i + 1));
            }
        }
        // dim ker(d_i) = rank(d_(i+1)) at every interior node, 0 at the end
        for i in 0..maps.len() {
            let ker = maps[i].kernel_dim_total();
            let expected = if i + 1 < maps.len() { maps[i + 1].rank_total() } else { 0 };
            if ker != expected {
                return internal(format!(
                    "exactness fails at term {i}: dim ker = {ker}, rank of next = {expected}"
                ));
            }
        }
        // augmentation really targets m
        if self.augmentation.f1.rows() != m.l1 || self.augmentation.f2.rows() != m.l2 {
            return internal("augmentation target has wrong dimensions".into());
        }
        Ok(())
    }
}

/// Minimal projective resolution by iterated covers; the algebra has global
/// dimension <= 2, so the kernel vanishes after at most three terms.
pub fn projective_resolution(m: &QuiverModule) -> Result<Resolution, Error> {
    let (q0, augmentation) = projective_cover(m)?;
    let mut res = Resolution { terms: vec![q0], augmentation, differentials: Vec::new() };
    let (mut ker, mut incl) = kernel_submodule(&q0.module(), &res.augmentation)?;
    while !ker.is_zero_module() {
        if res.length() >= 2 {
            return Err(Error::Internal {
                detail: "resolution exceeds global dimension 2".into(),
            });
        }
        let (q, cover) = projective_cover(&ker)?;
        res.terms.push(q);
        res.differentials.push(incl.compose(&cover)?);
        // ker(d_i) = ker(cover) as a submodule of Q_i, since incl is injective
        let (next_ker, next_incl) = kernel_submodule(&q.module(), &cover)?;
        ker = next_ker;
        incl = next_incl;
    }
    res.verify_exact(m)?;
    Ok(res)
}

/// Dimension of `Hom(Q, N)` in the canonical coordinates
/// `Hom(P1^a + P2^b, N) = N1^a + N2^b`.
fn hom_coord_dim(term: ProjectiveTerm, n: &QuiverModule) -> usize {
    term.p1_copies * n.l1 + term.p2_copies * n.l2
}

/// Reconstruct the full matrices of `phi: Q -> N` from its values at the
/// generators: `phi1(e_i) = x_i`, `phi2(w2_j) = y_j` determine
/// `phi1(u_j) = beta y_j`, `phi2(f_i) = alpha x_i`, `phi2(w1_j) = alpha beta y_j`.
fn map_from_coords(
    term: ProjectiveTerm,
    n: &QuiverModule,
    coords: &[Rat],
) -> Result<ModuleMap, Error> {
    let (a, b) = (term.p1_copies, term.p2_copies);
    let x = |i: usize| &coords[i * n.l1..(i + 1) * n.l1];
    let y = |j: usize| &coords[a * n.l1 + j * n.l2..a * n.l1 + (j + 1) * n.l2];
    let mut f1 = Mat::zeros(n.l1, a + b);
    let mut f2 = Mat::zeros(n.l2, a + 2 * b);
    for i in 0..a {
        for (r, v) in x(i).iter().enumerate() {
            f1[(r, i)] = v.clone();
        }
        let ax = n.alpha.apply(x(i))?;
        for (r, v) in ax.iter().enumerate() {
            f2[(r, i)] = v.clone();
        }
    }
    for j in 0..b {
        let by = n.beta.apply(y(j))?;
        for (r, v) in by.iter().enumerate() {
            f1[(r, a + j)] = v.clone();
        }
        let aby = n.alpha.apply(&by)?;
        for (r, v) in aby.iter().enumerate() {
            f2[(r, a + 2 * j)] = v.clone();
        }
        for (r, v) in y(j).iter().enumerate() {
            f2[(r, a + 2 * j + 1)] = v.clone();
        }
    }
    Ok(ModuleMap { f1, f2 })
}

/// Read off the generator values of `phi: Q -> N`.
fn coords_from_map(term: ProjectiveTerm, n: &QuiverModule, map: &ModuleMap) -> Vec<Rat> {
    let (a, b) = (term.p1_copies, term.p2_copies);
    let mut coords = Vec::with_capacity(hom_coord_dim(term, n));
    for i in 0..a {
        for r in 0..n.l1 {
            coords.push(map.f1[(r, i)].clone());
        }
    }
    for j in 0..b {
        for r in 0..n.l2 {
            coords.push(map.f2[(r, a + 2 * j + 1)].clone());
        }
    }
    coords
}

/// Matrix of precomposition `Hom(Q_(i-1), N) -> Hom(Q_i, N)` in canonical
/// coordinates.
fn precomposition_matrix(
    src_term: ProjectiveTerm,
    dst_term: ProjectiveTerm,
    d: &ModuleMap,
    n: &QuiverModule,
) -> Result<Mat, Error> {
    let src_dim = hom_coord_dim(src_term, n);
    let dst_dim = hom_coord_dim(dst_term, n);
    let mut out = Mat::zeros(dst_dim, src_dim);
    for col in 0..src_dim {
        let mut unit = vec![Rat::from_integer(0.into()); src_dim];
        unit[col] = Rat::from_integer(1.into());
        let phi = map_from_coords(src_term, n, &unit)?;
        let psi = phi.compose(d)?;
        for (row, v) in coords_from_map(dst_term, n, &psi).into_iter().enumerate() {
            out[(row, col)] = v;
        }
    }
    Ok(out)
}

/// `(dim Hom, dim Ext^1, dim Ext^2)`; `Ext^i = 0` for `i >= 3` since the
/// resolution has length <= 2.
pub fn ext_dims(m: &QuiverModule, n: &QuiverModule) -> Result<(usize, usize, usize), Error> {
    ext_dims_with(&projective_resolution(m)?, n)
}

/// Ext dimensions against a precomputed resolution (reusable across many
/// second arguments).
pub fn ext_dims_with(
    res: &Resolution,
    n: &QuiverModule,
) -> Result<(usize, usize, usize), Error> {
    let h: Vec<usize> = res.terms.iter().map(|&t| hom_coord_dim(t, n)).collect();
    let h_at = |i: usize| h.get(i).copied().unwrap_or(0);
    let mut ranks = [0usize; 2]; // ranks of D1, D2
    for (i, d) in res.differentials.iter().enumerate() {
        ranks[i] = precomposition_matrix(res.terms[i], res.terms[i + 1], d, n)?.rank();
    }
    let hom = h_at(0) - ranks[0];
    let ext1 = h_at(1) - ranks[1] - ranks[0];
    let ext2 = h_at(2) - ranks[1];
    Ok((hom, ext1, ext2))
}

/// Feasible `(l1, l2)` for submodules of `P2^n`:
/// `0 <= l1 <= n` and `0 <= l2 - l1 <= n`.
pub fn enumerate_submodule_types(n: usize) -> BTreeSet<(i64, i64)> {
    let n = n as i64;
    let mut out = BTreeSet::new();
    for l1 in 0..=n {
        for diff in 0..=n {
            out.insert((l1, l1 + diff));
        }
    }
    out
}

/// Explicit submodule of `P2^n` with invariants `(l1, l2)` and its verified
/// inclusion: `K1 = span(u_1..u_l1)`, `K2` spanned by `m = max(l1, l2-l1)`
/// vectors `w1_i` and `m' = min(l1, l2-l1)` vectors `w2_i`.
pub fn submodule_witness(
    n: usize,
    l1: i64,
    l2: i64,
) -> Result<(QuiverModule, ModuleMap), Error> {
    let nn = n as i64;
    if l1 < 0 || l1 > nn || l2 - l1 < 0 || l2 - l1 > nn {
        return Err(Error::InfeasibleDims { n: nn, l1, l2 });
    }
    let (l1, l2) = (l1 as usize, l2 as usize);
    let big = std::cmp::max(l1, l2 - l1);
    let small = std::cmp::min(l1, l2 - l1);

    let mut alpha = Mat::zeros(l2, l1);
    for i in 0..l1 {
        alpha[(i, i)] = Rat::from_integer(1.into()); // alpha(u_i) = w1_i, position i < big
    }
    let mut beta = Mat::zeros(l1, l2);
    for i in 0..small {
        beta[(i, big + i)] = Rat::from_integer(1.into()); // beta(w2_i) = u_i
    }
    let witness = QuiverModule::new(alpha, beta)?;

    // ambient P2^n: N1 basis u_0..u_(n-1); N2 basis pairs (w1_i, w2_i) at (2i, 2i+1)
    let mut f1 = Mat::zeros(n, l1);
    for i in 0..l1 {
        f1[(i, i)] = Rat::from_integer(1.into());
    }
    let mut f2 = Mat::zeros(2 * n, l2);
    for i in 0..big {
        f2[(2 * i, i)] = Rat::from_integer(1.into());
    }
    for i in 0..small {
        f2[(2 * i + 1, big + i)] = Rat::from_integer(1.into());
    }
    let inclusion = ModuleMap { f1, f2 };
    let ambient = ProjectiveTerm { p1_copies: 0, p2_copies: n }.module();
    inclusion.check(&witness, &ambient)?;
    if !inclusion.is_injective() {
        return Err(Error::Internal { detail: "witness inclusion is not injective".into() });
    }
    Ok((witness, inclusion))
}

/// Brute-force oracle over the 2-element field: enumerate every submodule of
/// `P2^n` (every pair of GF(2)-subspaces closed under alpha and beta) and
/// return the set of dimension pairs. Practical for n <= 2.
pub fn gf2_submodule_types(n: usize) -> BTreeSet<(i64, i64)> {
    let dim1 = n;
    let dim2 = 2 * n;
    assert!(dim2 <= 5, "GF(2) exhaustion is only intended for n <= 2");
    // alpha(u_i) = w1_i at bit 2i; beta(w1_i) = 0, beta(w2_i) = u_i
    let alpha = |x: u32| -> u32 {
        let mut y = 0;
        for i in 0..dim1 {
            if x & (1 << i) != 0 {
                y |= 1 << (2 * i);
            }
        }
        y
    };
    let beta = |y: u32| -> u32 {
        let mut x = 0;
        for i in 0..dim1 {
            if y & (1 << (2 * i + 1)) != 0 {
                x |= 1 << i;
            }
        }
        x
    };
    let subspaces_1 = gf2_subspaces(dim1);
    let subspaces_2 = gf2_subspaces(dim2);
    let mut out = BTreeSet::new();
    for v1 in &subspaces_1 {
        for v2 in &subspaces_2 {
            let alpha_ok = v1.iter().all(|&x| v2.contains(&alpha(x)));
            let beta_ok = v2.iter().all(|&y| v1.contains(&beta(y)));
            if alpha_ok && beta_ok {
                out.insert((
                    v1.len().trailing_zeros() as i64,
                    v2.len().trailing_zeros() as i64,
                ));
            }
        }
    }
    out
}

/// All subspaces of GF(2)^dim, each as the sorted list of its vectors.
fn gf2_subspaces(dim: usize) -> Vec<Vec<u32>> {
    let vectors: Vec<u32> = (0..(1u32 << dim)).collect();
    let mut spaces: BTreeSet<Vec<u32>> = BTreeSet::new();
    // span of every subset of a fixed spanning set is wasteful; instead grow
    // spans vector by vector from {0}
    let mut frontier: BTreeSet<Vec<u32>> = BTreeSet::new();
    frontier.insert(vec![0]);
    while let Some(space) = frontier.iter().next().cloned() {
        frontier.remove(&space);
        if !spaces.insert(space.clone()) {
            continue;
        }
        for &v in &vectors {
            if v != 0 && !space.contains(&v) {
                let mut bigger: Vec<u32> =
                    space.iter().flat_map(|&s| [s, s ^ v]).collect();
                bigger.sort_unstable();
                bigger.dedup();
                if !spaces.contains(&bigger) {
                    frontier.insert(bigger);
                }
            }
        }
    }
    spaces.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numclass::euler_auslander;
    use proptest::prelude::*;

    fn ext_euler(m: &QuiverModule, n: &QuiverModule) -> i64 {
        let (h, e1, e2) = ext_dims(m, n).unwrap();
        h as i64 - e1 as i64 + e2 as i64
    }

    #[test]
    fn standard_modules_have_reference_dims() {
        let std = standard_modules();
        assert_eq!(std.p1.dims(), (1, 1));
        assert_eq!(std.p2.dims(), (1, 2));
        assert_eq!(std.s1.dims(), (1, 0));
        assert_eq!(std.s2.dims(), (0, 1));
        for m in [&std.p1, &std.p2, &std.s1, &std.s2] {
            assert!(QuiverModule::new(m.alpha.clone(), m.beta.clone()).is_ok());
        }
    }

    #[test]
    fn constructor_rejects_violated_relation() {
        // alpha = id, beta = id on C: beta*alpha = id != 0
        let bad = QuiverModule::new(Mat::identity(1), Mat::identity(1));
        assert!(matches!(bad, Err(Error::InvalidModule { .. })));
        let bad_shape = QuiverModule::new(Mat::zeros(2, 1), Mat::zeros(3, 2));
        assert!(matches!(bad_shape, Err(Error::InvalidModule { .. })));
    }

    #[test]
    fn hom_from_projectives_picks_out_dimensions() {
        // Hom(P1, N) = N1, Hom(P2, N) = N2, Hom(N, P2) = N2*
        let n = p2().direct_sum(&s1()).direct_sum(&p1());
        assert_eq!(hom_space(&p1(), &n).unwrap().0, n.l1);
        assert_eq!(hom_space(&p2(), &n).unwrap().0, n.l2);
        assert_eq!(hom_space(&n, &p2()).unwrap().0, n.l2);
    }

    #[test]
    fn hom_basis_elements_are_morphisms() {
        let m = p2().direct_sum(&s2());
        let n = p1().direct_sum(&p2());
        let (dim, basis) = hom_space(&m, &n).unwrap();
        assert_eq!(dim, basis.len());
        for f in &basis {
            f.check(&m, &n).unwrap();
        }
    }

    #[test]
    fn resolutions_of_the_simples() {
        // S1: 0 -> P1 -> P2 -> P1 -> S1 -> 0
        let res = projective_resolution(&s1()).unwrap();
        assert_eq!(res.length(), 2);
        assert_eq!(res.terms[0], ProjectiveTerm { p1_copies: 1, p2_copies: 0 });
        assert_eq!(res.terms[1], ProjectiveTerm { p1_copies: 0, p2_copies: 1 });
        assert_eq!(res.terms[2], ProjectiveTerm { p1_copies: 1, p2_copies: 0 });
        assert_eq!(res.euler_class(), s1().class());

        // S2: 0 -> P1 -> P2 -> S2 -> 0
        let res = projective_resolution(&s2()).unwrap();
        assert_eq!(res.length(), 1);
        assert_eq!(res.terms[0], ProjectiveTerm { p1_copies: 0, p2_copies: 1 });
        assert_eq!(res.terms[1], ProjectiveTerm { p1_copies: 1, p2_copies: 0 });
        assert_eq!(res.euler_class(), s2().class());

        // projectives resolve themselves
        assert_eq!(projective_resolution(&p1()).unwrap().length(), 0);
        assert_eq!(projective_resolution(&p2()).unwrap().length(), 0);
        let sum = p1().direct_sum(&p2()).direct_sum(&p2());
        assert_eq!(projective_resolution(&sum).unwrap().length(), 0);
    }

    #[test]
    fn ext_of_simples_matches_quiver_combinatorics() {
        // arrows 1 -> 2 (alpha), 2 -> 1 (beta); relation beta alpha: path 1 -> 1
        assert_eq!(ext_dims(&s1(), &s1()).unwrap(), (1, 0, 1));
        assert_eq!(ext_dims(&s1(), &s2()).unwrap(), (0, 1, 0));
        assert_eq!(ext_dims(&s2(), &s1()).unwrap(), (0, 1, 0));
        assert_eq!(ext_dims(&s2(), &s2()).unwrap(), (1, 0, 0));
    }

    #[test]
    fn projective_source_or_injective_target_kill_ext() {
        let tests = [p1(), p2(), s1(), s2(), p2().direct_sum(&s1())];
        for n in &tests {
            let (_, e1, e2) = ext_dims(&p2(), n).unwrap();
            assert_eq!((e1, e2), (0, 0), "projective source");
            let (_, e1, _) = ext_dims(n, &p2()).unwrap();
            assert_eq!(e1, 0, "P2 is injective");
        }
    }

    #[test]
    fn ext_alternating_sum_is_the_euler_form() {
        let mods = [p1(), p2(), s1(), s2(), p2().direct_sum(&s1()), s2().direct_sum(&s2())];
        for m in &mods {
            for n in &mods {
                let (a, b) = m.class();
                let (c, d) = n.class();
                assert_eq!(ext_euler(m, n), euler_auslander(a, b, c, d), "{m:?} vs {n:?}");
            }
        }
    }

    #[test]
    fn hom_dim_agrees_between_solver_and_resolution() {
        let mods = [p1(), p2(), s1(), s2(), p1().direct_sum(&s2()), p2().direct_sum(&p2())];
        for m in &mods {
            for n in &mods {
                let via_solver = hom_space(m, n).unwrap().0;
                let via_res = ext_dims(m, n).unwrap().0;
                assert_eq!(via_solver, via_res);
            }
        }
    }

    #[test]
    fn submodule_type_enumeration() {
        assert_eq!(
            enumerate_submodule_types(1).into_iter().collect::<Vec<_>>(),
            vec![(0, 0), (0, 1), (1, 1), (1, 2)]
        );
        assert_eq!(enumerate_submodule_types(2).len(), 9);
        assert_eq!(
            enumerate_submodule_types(0).into_iter().collect::<Vec<_>>(),
            vec![(0, 0)]
        );
    }

    #[test]
    fn witnesses_exist_exactly_on_the_feasible_set() {
        for n in [1usize, 2] {
            let feasible = enumerate_submodule_types(n);
            for l1 in -1..=(n as i64 + 1) {
                for l2 in -1..=(2 * n as i64 + 2) {
                    let w = submodule_witness(n, l1, l2);
                    assert_eq!(w.is_ok(), feasible.contains(&(l1, l2)), "n={n} ({l1}, {l2})");
                }
            }
        }
        // reference cases
        let (w, inc) = submodule_witness(1, 1, 2).unwrap();
        assert_eq!(w.dims(), (1, 2));
        assert!(inc.is_injective() && inc.is_surjective()); // P2 itself
        let (w, _) = submodule_witness(1, 0, 1).unwrap();
        assert_eq!(w.dims(), (0, 1));
        assert!(matches!(
            submodule_witness(1, 0, 2),
            Err(Error::InfeasibleDims { n: 1, l1: 0, l2: 2 })
        ));
    }

    #[test]
    fn gf2_exhaustion_matches_the_inequality_set() {
        for n in [1usize, 2] {
            assert_eq!(gf2_submodule_types(n), enumerate_submodule_types(n), "n = {n}");
        }
    }

    #[test]
    fn json_round_trip() {
        let m = p2();
        let json = m.to_json();
        assert_eq!(QuiverModule::from_json(&json).unwrap(), m);
        let err = QuiverModule::from_json(r#"{"l1":1,"l2":1,"alpha":[["1"]],"beta":[["1"]]}"#);
        assert!(err.is_err()); // beta*alpha != 0
    }

    fn small_module() -> impl Strategy<Value = QuiverModule> {
        (1usize..4, 1usize..4)
            .prop_flat_map(|(l1, l2)| {
                let beta = proptest::collection::vec(-2i64..3, l1 * l2);
                (Just(l1), Just(l2), beta, proptest::collection::vec(-2i64..3, l2 * l2))
            })
            .prop_map(|(l1, l2, beta_entries, coeffs)| {
                let beta = Mat::from_fn(l1, l2, |i, j| crate::rat::ratz(beta_entries[i * l2 + j]));
                // alpha must land in ker(beta): alpha = K * C
                let kernel = basis_mat(l2, &beta.kernel_basis());
                let c = Mat::from_fn(kernel.cols(), l1, |i, j| {
                    crate::rat::ratz(coeffs[(i * l1 + j) % coeffs.len()])
                });
                let alpha = kernel.mul(&c).unwrap();
                QuiverModule::new(alpha, beta).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn resolutions_are_exact_and_short(m in small_module()) {
            let res = projective_resolution(&m).unwrap();
            prop_assert!(res.length() <= 2);
            res.verify_exact(&m).unwrap();
            prop_assert_eq!(res.euler_class(), m.class());
        }

        #[test]
        fn euler_form_matches_resolutions(m in small_module(), n in small_module()) {
            let (a, b) = m.class();
            let (c, d) = n.class();
            prop_assert_eq!(ext_euler(&m, &n), euler_auslander(a, b, c, d));
        }

        #[test]
        fn ext_dims_survive_base_change(m in small_module(), n in small_module()) {
            // conjugate m by unit upper/lower triangular matrices (always invertible)
            let g1 = Mat::from_fn(m.l1, m.l1, |i, j| {
                use num::One;
                if i == j { Rat::one() } else if i < j { crate::rat::rat(1, 2) } else { Rat::from_integer(0.into()) }
            });
            let g2 = Mat::from_fn(m.l2, m.l2, |i, j| {
                use num::One;
                if i == j { Rat::one() } else if i > j { crate::rat::ratz(-1) } else { Rat::from_integer(0.into()) }
            });
            let conj = m.conjugate(&g1, &g2).unwrap();
            prop_assert_eq!(ext_dims(&conj, &n).unwrap(), ext_dims(&m, &n).unwrap());
            prop_assert_eq!(ext_dims(&n, &conj).unwrap(), ext_dims(&n, &m).unwrap());
            prop_assert_eq!(hom_space(&conj, &n).unwrap().0, hom_space(&m, &n).unwrap().0);
        }
    }
}
