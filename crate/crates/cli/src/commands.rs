//! One function per subcommand; each returns the complete document that
//! `main` prints to standard output.

use std::path::Path;
use std::process::ExitCode;

use num::Zero;
use serde_json::json;

use curvestab::auslander::{self, ext_dims, projective_resolution, QuiverModule};
use curvestab::curve::{conductor_lookup, conductor_table_rows, SingKind};
use curvestab::moduli::{flip_data, moduli_dim, wall_crossing_report, FlipData, WallCrossingReport};
use curvestab::numclass::{euler_auslander, norm_sq, EulerForm};
use curvestab::rat::parse_rat;
use curvestab::stability::{central_charge, support_constants, ChargeValue};
use curvestab::walls::{chambers_2d, delta_names, enumerate_walls, wall_hyperplane, Wall};
use curvestab::{
    CurveConfig, Error, NumClass, ParamRegion, Preset, Rat, StabilityParams,
};

use crate::render::{rat_tuple, triangle_diagram, Format, GenusMode, Table};
use crate::{
    AuslanderCmd, ChambersArgs, Command, ConductorArgs, CurveArgs, DimArgs, EulerArgs, ExtArgs,
    FlipArgs, ReportArgs, ResolveArgs, SubmodulesArgs, SupportArgs, WallsArgs,
};

/// A failed run: bad input maps to exit 1, a broken internal invariant
/// to exit 2.
pub(crate) enum Failure {
    Input(String),
    Internal(String),
}

impl Failure {
    pub(crate) fn report(&self) -> ExitCode {
        match self {
            Failure::Input(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
            Failure::Internal(msg) => {
                eprintln!("internal error: {msg}");
                ExitCode::from(2)
            }
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

pub(crate) fn run(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Walls(args) => walls(args),
        Command::Chambers(args) => chambers(args),
        Command::Flip(args) => flip(args),
        Command::Euler(args) => euler(args),
        Command::Dim(args) => dim(args),
        Command::Support(args) => support(args),
        Command::Auslander(AuslanderCmd::Submodules(args)) => submodules(args),
        Command::Auslander(AuslanderCmd::Ext(args)) => ext(args),
        Command::Auslander(AuslanderCmd::Resolve(args)) => resolve(args),
        Command::Conductor(args) => conductor(args),
        Command::Report(args) => report(args),
    }
}

fn load_curve(args: &CurveArgs) -> Result<CurveConfig, Failure> {
    match (&args.preset, &args.spec) {
        (Some(name), None) => Ok(Preset::parse(name)?.config()),
        (None, Some(path)) => Ok(CurveConfig::from_json(&read_text(path)?)?),
        _ => unreachable!("clap enforces exactly one curve source"),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut doc = serde_json::to_string_pretty(value).expect("serializable document");
    doc.push('\n');
    doc
}

fn yes_no(b: bool) -> String {
    if b { "yes".into() } else { "no".into() }
}

/// 1-based wall numbers, `1, 3` style.
fn wall_numbers(indices: &[usize]) -> String {
    let parts: Vec<String> = indices.iter().map(|i| (i + 1).to_string()).collect();
    if parts.is_empty() { "-".into() } else { parts.join(", ") }
}

fn region_line(region: ParamRegion, curve: &CurveConfig) -> Result<String, Error> {
    if let Some((lo, hi)) = region.interval(curve)? {
        return Ok(format!("{lo} < t < {hi}"));
    }
    Ok(match region {
        ParamRegion::TacnodeTriangle => "d1 > 0, d2 > 0, d1 + d2 < 1".to_string(),
        _ => "bounded coordinate box".to_string(),
    })
}

/// The wall's display locus: its `t` on a one-parameter path, otherwise
/// its hyperplane equation.
fn wall_locus(wall: &Wall, names: &[String], one_dim: bool) -> String {
    match (&wall.locus_t, one_dim) {
        (Some(t), true) => t.to_string(),
        _ => wall.hyperplane.equation(names),
    }
}

fn add_classes(curve: &CurveConfig, a: &NumClass, b: &NumClass) -> Result<NumClass, Error> {
    let sum: Vec<i64> =
        a.to_flat().iter().zip(b.to_flat().iter()).map(|(x, y)| x + y).collect();
    NumClass::from_flat(curve, &sum)
}

fn walls(args: WallsArgs) -> Result<String, Failure> {
    let curve = load_curve(&args.curve)?;
    let v = NumClass::parse_list(&curve, &args.class)?;
    let mode = args.genus.mode();
    let region = ParamRegion::for_curve(&curve);
    let walls = enumerate_walls(&v, region, &curve)?;
    let one_dim = curve.m * curve.e == 1;
    let names = delta_names(curve.m, curve.e);

    // flip data for every simple decomposition, when the curve has a
    // closed-form Euler pairing
    let mut flips: Vec<(usize, usize, FlipData)> = Vec::new();
    if EulerForm::for_curve(&curve).is_ok() {
        for (wi, wall) in walls.iter().enumerate() {
            for (di, dec) in wall.decomps.iter().enumerate() {
                if dec.is_simple() {
                    flips.push((wi, di, flip_data(&dec.u, &dec.w, &curve)?));
                }
            }
        }
    }

    match args.format {
        Format::Md => {
            let n_dec: usize = walls.iter().map(|w| w.decomps.len()).sum();
            let mut out = format!(
                "class: {v}\ncurve: {}\nregion: {}\nwalls: {} ({} decompositions)\n\n",
                curve.kind(),
                region_line(region, &curve)?,
                walls.len(),
                n_dec
            );
            let mut table = Table::new(&[
                "#",
                if one_dim { "t" } else { "wall" },
                "decomposition",
                "simple",
                "flipped loci",
            ]);
            let mut row = 0usize;
            for (wi, wall) in walls.iter().enumerate() {
                let locus = wall_locus(wall, &names, one_dim);
                for (di, dec) in wall.decomps.iter().enumerate() {
                    row += 1;
                    let loci = flips
                        .iter()
                        .find(|(a, b, _)| (*a, *b) == (wi, di))
                        .map(|(_, _, data)| {
                            format!(
                                "{} / {}",
                                mode.projective(&data.locus_dims.0),
                                mode.projective(&data.locus_dims.1)
                            )
                        })
                        .unwrap_or_else(|| "-".into());
                    table.push(vec![
                        row.to_string(),
                        locus.clone(),
                        dec.to_string(),
                        yes_no(dec.is_simple()),
                        loci,
                    ]);
                }
            }
            out.push_str(&table.markdown());
            Ok(out)
        }
        Format::Csv => {
            let mut table = Table::new(&[
                "index",
                if one_dim { "t" } else { "wall" },
                "decomposition",
                "simple",
                "near_locus",
                "far_locus",
            ]);
            let mut row = 0usize;
            for (wi, wall) in walls.iter().enumerate() {
                let locus = wall_locus(wall, &names, one_dim);
                for (di, dec) in wall.decomps.iter().enumerate() {
                    row += 1;
                    let flip = flips.iter().find(|(a, b, _)| (*a, *b) == (wi, di));
                    let (near, far) = match flip {
                        Some((_, _, data)) => {
                            (mode.poly(&data.locus_dims.0), mode.poly(&data.locus_dims.1))
                        }
                        None => (String::new(), String::new()),
                    };
                    table.push(vec![
                        row.to_string(),
                        locus.clone(),
                        dec.to_string(),
                        yes_no(dec.is_simple()),
                        near,
                        far,
                    ]);
                }
            }
            Ok(table.csv())
        }
        Format::Json => {
            let flips_json: Vec<serde_json::Value> = flips
                .iter()
                .map(|(wi, di, data)| json!({"wall": wi, "decomp": di, "data": data}))
                .collect();
            Ok(pretty(&json!({
                "class": v,
                "kind": curve.kind().to_string(),
                "region": region,
                "walls": walls,
                "flips": flips_json,
            })))
        }
    }
}

fn chambers(args: ChambersArgs) -> Result<String, Failure> {
    let curve = load_curve(&args.curve)?;
    let v = NumClass::parse_list(&curve, &args.class)?;
    let dec = chambers_2d(&v, &curve)?;
    let names = delta_names(curve.m, curve.e);

    match args.format {
        Format::Md => {
            let mut out = format!(
                "class: {v}\ncurve: {}\nregion: d1 > 0, d2 > 0, d1 + d2 < 1\nwalls: {}, chambers: {}\n\n",
                curve.kind(),
                dec.walls.len(),
                dec.chambers.len()
            );
            let mut wall_table = Table::new(&["#", "wall", "decompositions", "simple"]);
            for (i, wall) in dec.walls.iter().enumerate() {
                let parts: Vec<String> = wall.decomps.iter().map(|d| d.to_string()).collect();
                wall_table.push(vec![
                    (i + 1).to_string(),
                    wall.hyperplane.equation(&names),
                    parts.join("; "),
                    yes_no(wall.simple),
                ]);
            }
            out.push_str(&wall_table.markdown());
            out.push('\n');
            let mut chamber_table = Table::new(&["chamber", "sample", "bounding walls"]);
            for chamber in &dec.chambers {
                chamber_table.push(vec![
                    chamber.label.clone(),
                    rat_tuple(&chamber.sample),
                    wall_numbers(&chamber.bounding_walls),
                ]);
            }
            out.push_str(&chamber_table.markdown());
            out.push_str("\ndiagram (d1 ->, d2 ^):\n\n");
            out.push_str(&triangle_diagram(&dec));
            out.push_str("\nlegend:\n");
            for (i, wall) in dec.walls.iter().enumerate() {
                out.push_str(&format!("  {}: {}\n", i + 1, wall.hyperplane.equation(&names)));
            }
            Ok(out)
        }
        Format::Csv => {
            let mut table = Table::new(&["chamber", "delta1", "delta2", "bounding_walls"]);
            for chamber in &dec.chambers {
                let bounds: Vec<String> =
                    chamber.bounding_walls.iter().map(|i| (i + 1).to_string()).collect();
                table.push(vec![
                    chamber.label.clone(),
                    chamber.sample[0].to_string(),
                    chamber.sample[1].to_string(),
                    bounds.join(";"),
                ]);
            }
            Ok(table.csv())
        }
        Format::Json => Ok(pretty(&dec)),
    }
}

fn flip(args: FlipArgs) -> Result<String, Failure> {
    if args.classes.len() != 2 {
        return Err(Failure::Input(format!(
            "flip takes exactly two --class arguments (u and w), got {}",
            args.classes.len()
        )));
    }
    let curve = load_curve(&args.curve)?;
    let u = NumClass::parse_list(&curve, &args.classes[0])?;
    let w = NumClass::parse_list(&curve, &args.classes[1])?;
    let mode = args.genus.mode();
    let data = flip_data(&u, &w, &curve)?;
    let v = add_classes(&curve, &data.u, &data.w)?;
    let hyperplane = wall_hyperplane(&v, &data.u)?;
    let names = delta_names(curve.m, curve.e);
    let one_dim = curve.m * curve.e == 1;
    let wall_str = match (hyperplane.node_t(), one_dim) {
        (Some(t), true) => format!("t = {t}"),
        _ => hyperplane.equation(&names),
    };
    let total_dim = moduli_dim(&v, &curve)?;

    match args.format {
        Format::Md => Ok(format!(
            "wall: {wall_str}\nu: {}\nw: {}\nb = -chi(u, w) = {}\nc = -chi(w, u) = {}\ndim M(u) + dim M(w) = {}\nnear-side locus: {}\nfar-side locus: {}\ndim M(u + w) = {}\n",
            data.u,
            data.w,
            mode.poly(&data.b),
            mode.poly(&data.c),
            mode.poly(&data.base_dim),
            mode.projective(&data.locus_dims.0),
            mode.projective(&data.locus_dims.1),
            mode.poly(&total_dim),
        )),
        Format::Csv => {
            let mut table = Table::new(&[
                "u", "w", "wall", "b", "c", "base_dim", "near_locus", "far_locus", "total_dim",
            ]);
            table.push(vec![
                data.u.to_string(),
                data.w.to_string(),
                wall_str,
                mode.poly(&data.b),
                mode.poly(&data.c),
                mode.poly(&data.base_dim),
                mode.poly(&data.locus_dims.0),
                mode.poly(&data.locus_dims.1),
                mode.poly(&total_dim),
            ]);
            Ok(table.csv())
        }
        Format::Json => {
            let mut doc = serde_json::to_value(&data).expect("flip data serializes");
            let map = doc.as_object_mut().expect("flip data is an object");
            map.insert("wall".into(), serde_json::to_value(&hyperplane).expect("hyperplane"));
            map.insert("total_dim".into(), serde_json::to_value(&total_dim).expect("dim"));
            Ok(pretty(&doc))
        }
    }
}

fn euler(args: EulerArgs) -> Result<String, Failure> {
    let curve = load_curve(&args.curve)?;
    let mode = args.genus.mode();
    let form = EulerForm::for_curve(&curve)?;
    match args.classes.as_slice() {
        [single] => {
            let v = NumClass::parse_list(&curve, single)?;
            let chi = form.pairing(&v, &v)?;
            let dim = moduli_dim(&v, &curve).ok();
            match args.format {
                Format::Md => {
                    let mut out = format!("v: {v}\nchi(v, v) = {}\n", mode.poly(&chi));
                    if let Some(d) = &dim {
                        out.push_str(&format!("dim M(v) = {}\n", mode.poly(d)));
                    }
                    Ok(out)
                }
                Format::Csv => {
                    let mut table = Table::new(&["v", "chi", "dim"]);
                    table.push(vec![
                        v.to_string(),
                        mode.poly(&chi),
                        dim.as_ref().map(|d| mode.poly(d)).unwrap_or_default(),
                    ]);
                    Ok(table.csv())
                }
                Format::Json => Ok(pretty(&json!({"v": v, "chi": chi, "dim": dim}))),
            }
        }
        [first, second] => {
            let a = NumClass::parse_list(&curve, first)?;
            let b = NumClass::parse_list(&curve, second)?;
            let chi_ab = form.pairing(&a, &b)?;
            let chi_ba = form.pairing(&b, &a)?;
            match args.format {
                Format::Md => Ok(format!(
                    "a: {a}\nb: {b}\nchi(a, b) = {}\nchi(b, a) = {}\n",
                    mode.poly(&chi_ab),
                    mode.poly(&chi_ba),
                )),
                Format::Csv => {
                    let mut table = Table::new(&["a", "b", "chi_ab", "chi_ba"]);
                    table.push(vec![
                        a.to_string(),
                        b.to_string(),
                        mode.poly(&chi_ab),
                        mode.poly(&chi_ba),
                    ]);
                    Ok(table.csv())
                }
                Format::Json => {
                    Ok(pretty(&json!({"a": a, "b": b, "chi_ab": chi_ab, "chi_ba": chi_ba})))
                }
            }
        }
        many => Err(Failure::Input(format!(
            "euler takes one or two --class arguments, got {}",
            many.len()
        ))),
    }
}

fn dim(args: DimArgs) -> Result<String, Failure> {
    let curve = load_curve(&args.curve)?;
    let v = NumClass::parse_list(&curve, &args.class)?;
    let mode = args.genus.mode();
    let d = moduli_dim(&v, &curve)?;
    match args.format {
        Format::Md => Ok(format!("dim M({v}) = {}\n", mode.poly(&d))),
        Format::Csv => {
            let mut table = Table::new(&["class", "dim"]);
            table.push(vec![v.to_string(), mode.poly(&d)]);
            Ok(table.csv())
        }
        Format::Json => Ok(pretty(&json!({"class": v, "dim": d}))),
    }
}

fn build_params(args: &SupportArgs) -> Result<StabilityParams, Failure> {
    if let Some(t) = &args.t {
        return Ok(StabilityParams::node_path(parse_rat(t)?));
    }
    if let (Some(d1), Some(d2)) = (&args.delta1, &args.delta2) {
        return Ok(StabilityParams::tacnode_triangle(parse_rat(d1)?, parse_rat(d2)?));
    }
    if let Some(text) = &args.params {
        return Ok(StabilityParams::from_json(text)?);
    }
    Err(Failure::Input(
        "no parameter point: pass --t, --delta1/--delta2, or --params".into(),
    ))
}

fn params_desc(params: &StabilityParams) -> String {
    use num::One;
    let unit = params.alpha.iter().all(|x| x.is_one())
        && params.gamma.iter().all(|x| x.is_one())
        && params.beta.iter().all(|x| x.is_zero());
    let flat: Vec<Rat> = params.delta.iter().flatten().cloned().collect();
    if unit {
        if flat.len() == 1 {
            format!("t = {}", flat[0])
        } else {
            format!("delta = {}", rat_tuple(&flat))
        }
    } else {
        let rows: Vec<String> = params.delta.iter().map(|row| rat_tuple(row)).collect();
        format!(
            "alpha = {}, beta = {}, gamma = {}, delta = ({})",
            rat_tuple(&params.alpha),
            rat_tuple(&params.beta),
            rat_tuple(&params.gamma),
            rows.join(", ")
        )
    }
}

fn charge_str(z: &ChargeValue) -> String {
    if z.im < Rat::zero() {
        format!("{} - {}i", z.re, -z.im.clone())
    } else {
        format!("{} + {}i", z.re, z.im)
    }
}

fn support(args: SupportArgs) -> Result<String, Failure> {
    let curve = load_curve(&args.curve)?;
    let params = build_params(&args)?;
    params.check_shape(&curve)?;
    let constants = support_constants(&params, &curve)?;

    struct Check {
        v: NumClass,
        z: ChargeValue,
        norm: Rat,
        bound: Rat,
        satisfied: bool,
    }
    let check = match &args.class {
        Some(text) => {
            let v = NumClass::parse_list(&curve, text)?;
            let z = central_charge(&params, &v);
            let p = std::cmp::max(constants.p0.clone(), constants.p1.clone());
            let bound = p * (&z.re * &z.re) + constants.q1.clone() * (&z.im * &z.im);
            let norm = Rat::from_integer(norm_sq(&v));
            let satisfied = norm <= bound;
            Some(Check { v, z, norm, bound, satisfied })
        }
        None => None,
    };

    match args.format {
        Format::Md => {
            let mut out = format!(
                "curve: {}\nparameters: {}\nP0 = {}\nQ1 = {}\nP1 = {}\n",
                curve.kind(),
                params_desc(&params),
                constants.p0,
                constants.q1,
                constants.p1
            );
            if let Some(c) = &check {
                out.push_str(&format!(
                    "\nclass: {}\nZ(v) = {}\n|v|^2 = {}\nbound = {}\nsupport inequality: {}\n",
                    c.v,
                    charge_str(&c.z),
                    c.norm,
                    c.bound,
                    if c.satisfied { "satisfied" } else { "violated" }
                ));
            }
            Ok(out)
        }
        Format::Csv => match &check {
            Some(c) => {
                let mut table =
                    Table::new(&["p0", "q1", "p1", "class", "norm_sq", "bound", "satisfied"]);
                table.push(vec![
                    constants.p0.to_string(),
                    constants.q1.to_string(),
                    constants.p1.to_string(),
                    c.v.to_string(),
                    c.norm.to_string(),
                    c.bound.to_string(),
                    yes_no(c.satisfied),
                ]);
                Ok(table.csv())
            }
            None => {
                let mut table = Table::new(&["p0", "q1", "p1"]);
                table.push(vec![
                    constants.p0.to_string(),
                    constants.q1.to_string(),
                    constants.p1.to_string(),
                ]);
                Ok(table.csv())
            }
        },
        Format::Json => {
            let check_json = check.map(|c| {
                json!({
                    "class": c.v,
                    "charge": c.z,
                    "norm_sq": c.norm.to_string(),
                    "bound": c.bound.to_string(),
                    "satisfied": c.satisfied,
                })
            });
            Ok(pretty(&json!({
                "parameters": params,
                "constants": constants,
                "check": check_json,
            })))
        }
    }
}

fn submodules(args: SubmodulesArgs) -> Result<String, Failure> {
    if args.rank == 0 {
        return Err(Failure::Input("rank must be at least 1".into()));
    }
    let curve = Preset::Tacnode.config();
    let mode = args.genus.mode();
    let copies = 2 * args.rank as usize;
    let types = auslander::enumerate_submodule_types(copies);
    let mut rows = Vec::new();
    for &(l1, l2) in &types {
        let v = NumClass::tacnode(args.rank as i64, 0, l1, l2);
        rows.push((l1, l2, moduli_dim(&v, &curve)?));
    }

    match args.format {
        Format::Md => {
            let mut out = format!(
                "feasible (l1, l2) for rank {} classes on the tacnode (submodules of P2^{})\n\n",
                args.rank, copies
            );
            let mut table = Table::new(&["l1", "l2", "dim M(v)"]);
            for (l1, l2, d) in &rows {
                table.push(vec![l1.to_string(), l2.to_string(), mode.poly(d)]);
            }
            out.push_str(&table.markdown());
            Ok(out)
        }
        Format::Csv => {
            let mut table = Table::new(&["l1", "l2", "dim"]);
            for (l1, l2, d) in &rows {
                table.push(vec![l1.to_string(), l2.to_string(), mode.poly(d)]);
            }
            Ok(table.csv())
        }
        Format::Json => {
            let types_json: Vec<serde_json::Value> = rows
                .iter()
                .map(|(l1, l2, d)| json!({"l1": l1, "l2": l2, "dim": d}))
                .collect();
            Ok(pretty(&json!({
                "rank": args.rank,
                "ambient_copies": copies,
                "types": types_json,
            })))
        }
    }
}

fn load_module(spec: &str) -> Result<QuiverModule, Failure> {
    match spec.to_ascii_lowercase().as_str() {
        "p1" => Ok(auslander::p1()),
        "p2" => Ok(auslander::p2()),
        "s1" => Ok(auslander::s1()),
        "s2" => Ok(auslander::s2()),
        _ => Ok(QuiverModule::from_json(&read_text(Path::new(spec))?)?),
    }
}

fn ext(args: ExtArgs) -> Result<String, Failure> {
    let a = load_module(&args.a)?;
    let b = load_module(&args.b)?;
    let (hom, ext1, ext2) = ext_dims(&a, &b)?;
    let euler = hom as i64 - ext1 as i64 + ext2 as i64;
    let (l1, l2) = a.class();
    let (l1p, l2p) = b.class();
    let chi = euler_auslander(l1, l2, l1p, l2p);

    match args.format {
        Format::Md => Ok(format!(
            "A: dims ({l1}, {l2})\nB: dims ({l1p}, {l2p})\ndim Hom(A, B) = {hom}\ndim Ext^1(A, B) = {ext1}\ndim Ext^2(A, B) = {ext2}\nEuler characteristic = {euler}\nnumerical pairing chi(A, B) = {chi}\n"
        )),
        Format::Csv => {
            let mut table = Table::new(&["a", "b", "hom", "ext1", "ext2", "euler", "chi"]);
            table.push(vec![
                args.a.clone(),
                args.b.clone(),
                hom.to_string(),
                ext1.to_string(),
                ext2.to_string(),
                euler.to_string(),
                chi.to_string(),
            ]);
            Ok(table.csv())
        }
        Format::Json => Ok(pretty(&json!({
            "a": {"l1": l1, "l2": l2},
            "b": {"l1": l1p, "l2": l2p},
            "hom": hom,
            "ext1": ext1,
            "ext2": ext2,
            "euler": euler,
            "chi": chi,
        }))),
    }
}

fn resolve(args: ResolveArgs) -> Result<String, Failure> {
    let m = load_module(&args.module)?;
    let res = projective_resolution(&m)?;
    res.verify_exact(&m)?;
    let (l1, l2) = m.class();
    let mut complex = String::from("0");
    for term in res.terms.iter().rev() {
        complex.push_str(&format!(" -> {term}"));
    }
    complex.push_str(" -> M -> 0");
    let (e1, e2) = res.euler_class();

    match args.format {
        Format::Md => Ok(format!(
            "module dims: ({l1}, {l2})\nresolution: {complex}\nlength: {}\nalternating class sum: ({e1}, {e2})\nexactness: verified\n",
            res.length()
        )),
        Format::Csv => {
            let mut table = Table::new(&["term", "p1_copies", "p2_copies"]);
            for (i, term) in res.terms.iter().enumerate() {
                table.push(vec![
                    format!("Q{i}"),
                    term.p1_copies.to_string(),
                    term.p2_copies.to_string(),
                ]);
            }
            Ok(table.csv())
        }
        Format::Json => {
            let terms: Vec<serde_json::Value> = res
                .terms
                .iter()
                .map(|t| json!({"p1_copies": t.p1_copies, "p2_copies": t.p2_copies}))
                .collect();
            Ok(pretty(&json!({
                "module": {"l1": l1, "l2": l2},
                "terms": terms,
                "length": res.length(),
                "euler_class": [e1, e2],
            })))
        }
    }
}

fn parse_sing_kind(kind: &str, param: Option<&str>) -> Result<SingKind, Failure> {
    let lower = kind.to_ascii_lowercase();
    // accept `ordinary(4)` / `a:3` spellings as well as a separate parameter
    let (name, embedded) = match lower.find(['(', ':']) {
        Some(pos) => {
            let (head, tail) = lower.split_at(pos);
            (head.to_string(), Some(tail.trim_matches(['(', ')', ':']).to_string()))
        }
        None => (lower.clone(), None),
    };
    let param = embedded.or_else(|| param.map(|p| p.to_string()));
    let number = |what: &str| -> Result<u32, Failure> {
        let text = param
            .as_deref()
            .ok_or_else(|| Failure::Input(format!("{what} needs a numeric parameter")))?;
        text.parse::<u32>()
            .map_err(|_| Failure::Input(format!("cannot parse `{text}` as a parameter")))
    };
    match name.as_str() {
        "node" => Ok(SingKind::Node),
        "cusp" => Ok(SingKind::Cusp),
        "ordinary" => Ok(SingKind::Ordinary(number("ordinary n-uple point")?)),
        "a" => Ok(SingKind::A(number("A_k")?)),
        "multiplicities" | "mults" => {
            let text = param.as_deref().ok_or_else(|| {
                Failure::Input("multiplicities needs a comma-separated list, e.g. 2,3".into())
            })?;
            let mults: Result<Vec<u32>, _> =
                text.split(',').map(|p| p.trim().parse::<u32>()).collect();
            match mults {
                Ok(m) => Ok(SingKind::Multiplicities(m)),
                Err(_) => {
                    Err(Failure::Input(format!("cannot parse `{text}` as multiplicities")))
                }
            }
        }
        other => Err(Error::UnknownKind { kind: other.to_string() }.into()),
    }
}

fn conductor(args: ConductorArgs) -> Result<String, Failure> {
    let Some(kind) = &args.kind else {
        return conductor_table(args.format);
    };
    let sing = parse_sing_kind(kind, args.param.as_deref())?;
    let descriptor = conductor_lookup(&sing)?;
    match args.format {
        Format::Md => {
            let mut out = String::new();
            if let Some(ideal) = &descriptor.conductor {
                out.push_str(&format!("{ideal}\n"));
            }
            if let Some(pres) = &descriptor.presentation {
                out.push_str(&format!("generators: {}\n", pres.generators.join(", ")));
                out.push_str(&format!("relations: {}\n", pres.relations.join(", ")));
            }
            if let Some(note) = &descriptor.note {
                out.push_str(&format!("note: {note}\n"));
            }
            Ok(out)
        }
        Format::Csv => {
            let mut table = Table::new(&["singularity", "local_equation", "conductor"]);
            table.push(vec![
                descriptor.kind.clone(),
                descriptor.local_equation.clone().unwrap_or_default(),
                descriptor.conductor.as_ref().map(|c| c.to_string()).unwrap_or_default(),
            ]);
            Ok(table.csv())
        }
        Format::Json => Ok(pretty(&descriptor)),
    }
}

fn conductor_table(format: Format) -> Result<String, Failure> {
    let rows = conductor_table_rows();
    match format {
        Format::Md => {
            let mut table = Table::new(&["singularity", "local equation", "conductor"]);
            for row in &rows {
                table.push(row.to_vec());
            }
            let mut out = table.markdown();
            out.push_str(&format!("\nnote: {}\n", curvestab::curve::ORDINARY_CONDUCTOR_NOTE));
            Ok(out)
        }
        Format::Csv => {
            let mut table = Table::new(&["singularity", "local_equation", "conductor"]);
            for row in &rows {
                table.push(row.to_vec());
            }
            Ok(table.csv())
        }
        Format::Json => {
            let rows_json: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    json!({"singularity": r[0], "local_equation": r[1], "conductor": r[2]})
                })
                .collect();
            Ok(pretty(&json!({
                "rows": rows_json,
                "note": curvestab::curve::ORDINARY_CONDUCTOR_NOTE,
            })))
        }
    }
}

fn report(args: ReportArgs) -> Result<String, Failure> {
    let curve = load_curve(&args.curve)?;
    let v = NumClass::parse_list(&curve, &args.class)?;
    let mode = args.genus.mode();
    let region = ParamRegion::for_curve(&curve);
    let rep = wall_crossing_report(&v, &curve, region)?;
    match args.format {
        Format::Json => Ok(pretty(&rep)),
        Format::Csv => {
            let mut table = Table::new(&[
                "wall", "decomp", "u", "w", "b", "c", "base_dim", "near_locus", "far_locus",
            ]);
            for record in &rep.flips {
                table.push(vec![
                    (record.wall + 1).to_string(),
                    record.decomp.to_string(),
                    record.data.u.to_string(),
                    record.data.w.to_string(),
                    mode.poly(&record.data.b),
                    mode.poly(&record.data.c),
                    mode.poly(&record.data.base_dim),
                    mode.poly(&record.data.locus_dims.0),
                    mode.poly(&record.data.locus_dims.1),
                ]);
            }
            Ok(table.csv())
        }
        Format::Md => report_md(&rep, &curve, region, mode),
    }
}

fn report_md(
    rep: &WallCrossingReport,
    curve: &CurveConfig,
    region: ParamRegion,
    mode: GenusMode,
) -> Result<String, Failure> {
    let names = delta_names(curve.m, curve.e);
    let one_dim = curve.m * curve.e == 1;
    let mut out = format!("# wall-crossing report: {} on the {} curve\n\n", rep.class, rep.kind);
    if let Some(d) = &rep.dim {
        out.push_str(&format!("dim M(v) = {}\n\n", mode.poly(d)));
    }
    out.push_str(&format!("region: {}\n\n", region_line(region, curve)?));

    out.push_str("## walls\n\n");
    if rep.walls.is_empty() {
        out.push_str("none\n");
    } else {
        let mut table = Table::new(&[
            "#",
            if one_dim { "t" } else { "wall" },
            "decomposition",
            "simple",
        ]);
        let mut row = 0usize;
        for wall in &rep.walls {
            let locus = wall_locus(wall, &names, one_dim);
            for dec in &wall.decomps {
                row += 1;
                table.push(vec![
                    row.to_string(),
                    locus.clone(),
                    dec.to_string(),
                    yes_no(dec.is_simple()),
                ]);
            }
        }
        out.push_str(&table.markdown());
    }

    if !rep.chambers.is_empty() {
        out.push_str("\n## chambers\n\n");
        let mut table = Table::new(&["chamber", "interval", "sample", "bounding walls"]);
        for chamber in &rep.chambers {
            let interval = match chamber.interval.as_slice() {
                [lo, hi] => format!("({lo}, {hi})"),
                _ => "-".into(),
            };
            table.push(vec![
                chamber.label.clone(),
                interval,
                rat_tuple(&chamber.sample),
                wall_numbers(&chamber.bounding_walls),
            ]);
        }
        out.push_str(&table.markdown());
    }

    if !rep.flips.is_empty() {
        out.push_str("\n## flips\n\n");
        let mut table =
            Table::new(&["wall", "u", "w", "b", "c", "near locus", "far locus"]);
        for record in &rep.flips {
            let locus = wall_locus(&rep.walls[record.wall], &names, one_dim);
            table.push(vec![
                locus,
                record.data.u.to_string(),
                record.data.w.to_string(),
                mode.poly(&record.data.b),
                mode.poly(&record.data.c),
                mode.projective(&record.data.locus_dims.0),
                mode.projective(&record.data.locus_dims.1),
            ]);
        }
        out.push_str(&table.markdown());
    }

    if !rep.chambers.is_empty() && !rep.walls.is_empty() {
        out.push_str("\n## slopes at chamber samples\n\n");
        let mut headers: Vec<String> = vec!["chamber".into()];
        for i in 0..rep.walls.len() {
            headers.push(format!("wall {}", i + 1));
        }
        let header_refs: Vec<&str> = headers.iter().map(|h| h.as_str()).collect();
        let mut table = Table::new(&header_refs);
        for (ci, chamber) in rep.chambers.iter().enumerate() {
            let mut row = vec![chamber.label.clone()];
            for signs in &rep.sides[ci] {
                let cells: Vec<String> = signs
                    .iter()
                    .map(|s| if *s < 0 { "u < w".to_string() } else { "u > w".to_string() })
                    .collect();
                row.push(cells.join("; "));
            }
            table.push(row);
        }
        out.push_str(&table.markdown());
    }

    if !rep.endpoints.is_empty() {
        out.push_str("\n## endpoints\n\n");
        for endpoint in &rep.endpoints {
            out.push_str(&format!("- {endpoint}\n"));
        }
    }

    if !rep.notes.is_empty() {
        out.push_str("\n## notes\n\n");
        for note in &rep.notes {
            out.push_str(&format!("- {note}\n"));
        }
    }
    Ok(out)
}
