use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cremona_core::algebra::groebner::DEFAULT_BUDGET;
use cremona_core::algebra::parse::parse_scalar;
use cremona_core::cremona::{
    conjugate, dejonquieres, parse_plane_poly, pgl3_from_frames, CremonaMap,
};
use cremona_core::lattice::{
    bertini, count_order5_isometries, geiser, isometry_from_cycle, minimal_pair_check,
    minus_one_classes, pentagon_splittings, PicIsometry, PicLattice,
};
use cremona_core::suite::{emit_schema, pencil_json, run_suite, suite_names, SuiteConfig};
use cremona_core::surfaces::{
    fermat_equation, fermat_sigma_action, grassmannian_check, line_intersections, lines_on_fermat,
    parse_model, weierstrass_normalize, CubicPencil,
};
use cremona_core::weighted::{
    invariant_generators, jacobian_smooth, quotient_presentation, DiagonalAction,
    HypersurfaceModel, ModelSpec, WeightedRing,
};
use cremona_core::{Error, Field, QZeta3, QZeta5, QZeta7, Result, Q};

#[derive(Parser)]
#[command(
    name = "cremona-kit",
    version,
    about = "Exact checks for plane Cremona maps and Del Pezzo automorphisms"
)]
struct Cli {
    /// Coefficient field for commands that parse polynomials.
    #[arg(long, global = true, value_enum, default_value_t = FieldArg::Q)]
    field: FieldArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Q,
    Zeta3,
    Zeta5,
    Zeta7,
}

#[derive(Subcommand)]
enum Command {
    /// Plane Cremona maps given as "f0;f1;f2".
    Map {
        #[command(subcommand)]
        op: MapOp,
    },
    /// de Jonquières maps preserving the lines through (0:0:1).
    Dejonquieres {
        #[command(subcommand)]
        op: DejonquieresOp,
    },
    /// Picard lattices of blowups of the plane.
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
    /// Weighted projective hypersurfaces with diagonal actions.
    Wps {
        #[command(subcommand)]
        op: WpsOp,
    },
    /// Lines and the order-3 automorphism of the Fermat cubic surface.
    Fermat {
        #[command(subcommand)]
        op: FermatOp,
    },
    /// Singular members of a pencil of plane cubics.
    Pencil {
        #[command(subcommand)]
        op: PencilOp,
    },
    /// Weierstrass form and j-invariant of a model in w, z.
    Elliptic {
        #[command(subcommand)]
        op: EllipticOp,
    },
    /// The invariant linear section of Gr(2, 5).
    Grass {
        #[command(subcommand)]
        op: GrassOp,
    },
    /// Runs a verification suite and writes its JSON report.
    Run {
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record wall times in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Prints the JSON schema of verification reports.
    Schema,
    /// Lists the suite names.
    Suites,
}

#[derive(Subcommand)]
enum MapOp {
    /// Order of the map, up to --bound.
    Order {
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 12)]
        bound: u32,
    },
    /// `map ∘ with`.
    Compose {
        #[arg(long)]
        map: String,
        #[arg(long)]
        with: String,
    },
    /// The curve of fixed points.
    FixedCurve {
        #[arg(long)]
        map: String,
    },
    /// Conjugates by the projectivity taking one frame to another; frames
    /// are four points "a,b,c;...".
    Conjugate {
        #[arg(long)]
        map: String,
        #[arg(long)]
        frame_src: String,
        #[arg(long)]
        frame_dst: String,
    },
}

#[derive(Subcommand)]
enum DejonquieresOp {
    /// The map preserving the curve, raised to --degree.
    Build {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        degree: u64,
    },
}

#[derive(Subcommand)]
enum LatticeOp {
    /// All (-1)-classes on the blowup at r points.
    Classes {
        #[arg(short)]
        r: usize,
    },
    /// The Geiser involution on 7 points.
    Geiser,
    /// The Bertini involution on 8 points.
    Bertini,
    /// The isometry cyclically shifting a list of classes.
    Pentagon {
        #[arg(long)]
        cycle: String,
        #[arg(short, default_value_t = 4)]
        r: usize,
    },
    /// Counts order-5 isometries of the degree 5 lattice.
    CountOrder5,
    /// Checks that an isometry has rank-one invariants and a minimal pair.
    MinimalPair {
        /// JSON file with a row-major integer matrix (bare or under "matrix").
        #[arg(long)]
        isometry: PathBuf,
    },
}

#[derive(Subcommand)]
enum WpsOp {
    /// Generators of the invariant monomials.
    Invariants {
        #[arg(long, value_delimiter = ',')]
        weights: Vec<u32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        action: Vec<i64>,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Quotient of a model file by its action.
    Quotient {
        #[arg(long)]
        model: PathBuf,
    },
    /// Jacobian smoothness of a model file.
    Smooth {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Subcommand)]
enum FermatOp {
    /// The 27 lines.
    Lines,
    /// Trace of the automorphism on the Picard lattice.
    SigmaTrace,
}

#[derive(Subcommand)]
enum PencilOp {
    /// Singular members with their types.
    Singular {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
}

#[derive(Subcommand)]
enum EllipticOp {
    /// The j-invariant.
    J {
        #[arg(long)]
        model: String,
    },
}

#[derive(Subcommand)]
enum GrassOp {
    /// Degree, dimension and smoothness of the section.
    Check {
        #[arg(long)]
        budget: Option<usize>,
        /// Budget for the smoothness stage; 0 skips it.
        #[arg(long)]
        smooth_budget: Option<usize>,
    },
}

/// Runs `$body` with `$F` bound to the scalar type chosen by `--field`.
macro_rules! with_field {
    ($field:expr, $F:ident => $body:expr) => {
        match $field {
            FieldArg::Q => {
                type $F = Q;
                $body
            }
            FieldArg::Zeta3 => {
                type $F = QZeta3;
                $body
            }
            FieldArg::Zeta5 => {
                type $F = QZeta5;
                $body
            }
            FieldArg::Zeta7 => {
                type $F = QZeta7;
                $body
            }
        }
    };
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

fn default_budget() -> Result<usize> {
    Ok(SuiteConfig::for_suite("all")
        .resolved()?
        .groebner_budget
        .unwrap_or(DEFAULT_BUDGET))
}

fn map_record<F: Field>(
    input: Value,
    f: &CremonaMap<F>,
    order: Option<u32>,
    fixed: Option<String>,
    start: Instant,
) -> Value {
    json!({
        "input": input,
        "field": F::field_id().to_string(),
        "map": f.to_string(),
        "degree": f.degree(),
        "order": order,
        "fixed_curve": fixed,
        "timings": { "total_ms": start.elapsed().as_millis() as u64 },
    })
}

fn parse_frame<F: Field>(text: &str) -> Result<[[F; 3]; 4]> {
    let pts: Vec<[F; 3]> = text
        .split(';')
        .map(|p| {
            let c: Vec<F> = p
                .split(',')
                .map(|s| parse_scalar::<F>(s.trim()))
                .collect::<Result<_>>()?;
            c.try_into()
                .map_err(|_| Error::Config(format!("point `{p}` needs three coordinates")))
        })
        .collect::<Result<_>>()?;
    pts.try_into()
        .map_err(|_| Error::Config("a frame has four points".into()))
}

fn map_cmd<F: Field>(op: &MapOp) -> Result<Value> {
    let start = Instant::now();
    match op {
        MapOp::Order { map, bound } => {
            let f = CremonaMap::<F>::parse(map)?;
            Ok(map_record(
                json!(map),
                &f,
                f.order_up_to(*bound),
                None,
                start,
            ))
        }
        MapOp::Compose { map, with } => {
            let h = CremonaMap::<F>::parse(map)?.compose(&CremonaMap::parse(with)?);
            Ok(map_record(json!([map, with]), &h, None, None, start))
        }
        MapOp::FixedCurve { map } => {
            let f = CremonaMap::<F>::parse(map)?;
            let fixed = f.fixed_curve()?.to_string();
            Ok(map_record(json!(map), &f, None, Some(fixed), start))
        }
        MapOp::Conjugate {
            map,
            frame_src,
            frame_dst,
        } => {
            let f = CremonaMap::<F>::parse(map)?;
            let g = pgl3_from_frames(&parse_frame(frame_src)?, &parse_frame(frame_dst)?)?;
            let c = conjugate(&f, &g);
            let mut rec = map_record(
                json!({ "map": map, "frame_src": frame_src, "frame_dst": frame_dst }),
                &c,
                None,
                None,
                start,
            );
            rec["projectivity"] = json!(g.to_string());
            Ok(rec)
        }
    }
}

fn dejonquieres_cmd<F: Field>(curve: &str, degree: u64) -> Result<Value> {
    let start = Instant::now();
    let c = parse_plane_poly::<F>(curve)?;
    if c.degree() != Some(degree) {
        return Err(Error::Precondition(format!(
            "curve has degree {:?}, not {degree}",
            c.degree()
        )));
    }
    let j = dejonquieres(&c)?;
    let fixed = j.fixed_curve()?;
    let mut rec = map_record(
        json!(curve),
        &j,
        j.order_up_to(2),
        Some(fixed.to_string()),
        start,
    );
    rec["fixed_curve_divisible_by_curve"] = json!(fixed.div_exact(&c).is_some());
    Ok(rec)
}

fn isometry_json(l: &PicLattice, m: &PicIsometry) -> Value {
    json!({
        "r": l.points(),
        "matrix": m.matrix(),
        "order": m.order_up_to(12),
        "trace": m.trace(),
        "invariant_rank": m.invariant_rank(),
    })
}

fn lattice_cmd(op: &LatticeOp) -> Result<Value> {
    match op {
        LatticeOp::Classes { r } => {
            let l = PicLattice::new(*r)?;
            let cs = minus_one_classes(&l);
            Ok(
                json!({ "r": r, "count": cs.len(), "classes": cs.iter().map(|c| c.to_string()).collect::<Vec<_>>() }),
            )
        }
        LatticeOp::Geiser => {
            let l = PicLattice::new(7)?;
            Ok(isometry_json(&l, &geiser(&l)?))
        }
        LatticeOp::Bertini => {
            let l = PicLattice::new(8)?;
            Ok(isometry_json(&l, &bertini(&l)?))
        }
        LatticeOp::Pentagon { cycle, r } => {
            let l = PicLattice::new(*r)?;
            let cs = cycle
                .split([',', ';'])
                .map(|s| l.parse_class(s.trim()))
                .collect::<Result<Vec<_>>>()?;
            Ok(isometry_json(&l, &isometry_from_cycle(&l, &cs)?))
        }
        LatticeOp::CountOrder5 => {
            let l = PicLattice::new(4)?;
            Ok(
                json!({ "r": 4, "order_five_isometries": count_order5_isometries(&l)?, "pentagon_splittings": pentagon_splittings(&l)?.len() }),
            )
        }
        LatticeOp::MinimalPair { isometry } => {
            let v: Value =
                serde_json::from_str(&read(isometry)?).map_err(|e| Error::Config(e.to_string()))?;
            let m = v.get("matrix").unwrap_or(&v);
            let rows: Vec<Vec<i64>> =
                serde_json::from_value(m.clone()).map_err(|e| Error::Config(e.to_string()))?;
            let l = PicLattice::new(rows.len().saturating_sub(1))?;
            let m = PicIsometry::new(&l, rows)?;
            let rep = minimal_pair_check(&m, &l);
            let witnesses: Vec<Value> = rep
                .witnesses
                .iter()
                .map(|(e, k)| json!({ "class": e.to_string(), "power": k }))
                .collect();
            Ok(json!({ "r": l.points(), "holds": rep.holds, "witnesses": witnesses }))
        }
    }
}

fn model_from<F: Field>(path: &Path) -> Result<HypersurfaceModel<F>> {
    let spec: ModelSpec =
        serde_json::from_str(&read(path)?).map_err(|e| Error::Config(e.to_string()))?;
    HypersurfaceModel::from_spec(&spec)
}

fn wps_cmd<F: Field>(op: &WpsOp) -> Result<Value> {
    match op {
        WpsOp::Invariants {
            weights,
            action,
            order,
            bound,
        } => {
            let ring = WeightedRing::with_weights(weights)?;
            let act = DiagonalAction::new(*order, action)?;
            let g = invariant_generators(&ring, &act, *bound)?;
            Ok(json!({
                "weights": weights,
                "action": { "order": order, "exponents": act.exponents() },
                "generators": g.display,
                "checked_up_to_degree": g.bound,
                "checked_monomials": g.checked_monomials,
            }))
        }
        WpsOp::Quotient { model } => {
            let m = model_from::<F>(model)?;
            let p = quotient_presentation(&m)?;
            Ok(json!({
                "equation": m.equation().to_string(),
                "moving_variable": m.ring().names()[p.moving],
                "new_generator": p.new_generator,
                "variables": p.ring.names(),
                "weights": p.ring.weights(),
                "relation": p.relation.as_ref().map(|r| r.to_string()),
            }))
        }
        WpsOp::Smooth { model, budget } => {
            let m = model_from::<F>(model)?;
            let r = jacobian_smooth(&m, budget.map_or_else(default_budget, Ok)?)?;
            Ok(json!({
                "equation": m.equation().to_string(),
                "weights": m.ring().weights(),
                "quasi_smooth": r.smooth,
                "singular_locus_dimension": r.singular_locus_dimension,
                "groebner_basis_size": r.basis_size,
                "steps": r.steps,
            }))
        }
    }
}

fn fermat_cmd(op: &FermatOp) -> Result<Value> {
    match op {
        FermatOp::Lines => {
            let lines = lines_on_fermat();
            let f = fermat_equation();
            let rows: Vec<Value> = lines
                .iter()
                .map(|l| {
                    let pt = |p: &[QZeta3; 4]| p.iter().map(|c| c.to_string()).collect::<Vec<_>>();
                    json!({
                        "points": [pt(&l.points()[0]), pt(&l.points()[1])],
                        "pluecker": l.pluecker().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "on_surface": l.lies_on(&f),
                    })
                })
                .collect();
            Ok(
                json!({ "surface": f.to_string(), "count": lines.len(), "lines": rows, "intersections": line_intersections(&lines) }),
            )
        }
        FermatOp::SigmaTrace => {
            let s = fermat_sigma_action()?;
            Ok(json!({
                "trace": s.trace,
                "invariant_rank": s.invariant_rank,
                "order": s.order,
                "sixer": s.sixer,
                "permutation": s.permutation,
                "matrix": s.isometry.matrix(),
            }))
        }
    }
}

fn pencil_cmd<F: Field>(a: &str, b: &str) -> Result<Value> {
    let p = CubicPencil::new(parse_plane_poly::<F>(a)?, parse_plane_poly(b)?)?;
    let mut out = pencil_json(&p.singular_members()?);
    out["pencil"] = json!({ "a": a, "b": b, "field": F::field_id().to_string() });
    Ok(out)
}

fn elliptic_cmd<F: Field>(model: &str) -> Result<Value> {
    let e = weierstrass_normalize(&parse_model::<F>(model)?)?;
    let j = e.j_invariant()?;
    Ok(json!({
        "model": model,
        "parameters": e.params().names(),
        "a": e.a.to_string(),
        "b": e.b.to_string(),
        "discriminant": e.discriminant().to_string(),
        "j_numerator": j.numerator.to_string(),
        "j_denominator": j.denominator.to_string(),
        "j": j.value().map(|v| v.to_string()),
        "j_is_zero": j.is_zero(),
        "a_is_constant": e.a.is_constant(),
    }))
}

fn run_cmd(
    suite: Option<&str>,
    config: Option<&Path>,
    out: Option<&Path>,
    timings: bool,
) -> Result<bool> {
    let mut cfg = match config {
        Some(p) => SuiteConfig::from_json(&read(p)?)?,
        None => SuiteConfig::default(),
    };
    if let Some(s) = suite {
        cfg.suite = s.into();
    } else if config.is_none() {
        return Err(Error::Config(format!(
            "--suite is required; one of {}",
            suite_names().join(", ")
        )));
    }
    if let Some(o) = out {
        cfg.out = Some(o.to_path_buf());
    }
    cfg.timings |= timings;
    let report = run_suite(&cfg)?;
    let text = report.to_json();
    match &report.config.out {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?,
        None => emit(&text),
    }
    for c in &report.checks {
        eprintln!(
            "{:<8} {}",
            format!("{:?}", c.status).to_lowercase(),
            c.claim_id
        );
    }
    Ok(report.passed)
}

fn dispatch(cli: &Cli) -> Result<Option<Value>> {
    let field = cli.field;
    let v = match &cli.command {
        Command::Map { op } => with_field!(field, F => map_cmd::<F>(op))?,
        Command::Dejonquieres {
            op: DejonquieresOp::Build { curve, degree },
        } => with_field!(field, F => dejonquieres_cmd::<F>(curve, *degree))?,
        Command::Lattice { op } => lattice_cmd(op)?,
        Command::Wps { op } => with_field!(field, F => wps_cmd::<F>(op))?,
        Command::Fermat { op } => fermat_cmd(op)?,
        Command::Pencil {
            op: PencilOp::Singular { a, b },
        } => with_field!(field, F => pencil_cmd::<F>(a, b))?,
        Command::Elliptic {
            op: EllipticOp::J { model },
        } => with_field!(field, F => elliptic_cmd::<F>(model))?,
        Command::Grass {
            op:
                GrassOp::Check {
                    budget,
                    smooth_budget,
                },
        } => {
            let budget = budget.map_or_else(default_budget, Ok)?;
            let smooth = smooth_budget.unwrap_or(budget);
            let r = grassmannian_check(budget, (smooth > 0).then_some(smooth))?;
            let mut v = serde_json::to_value(&r).expect("report serializes");
            v["passes"] = json!(r.passes());
            v
        }
        Command::Run { .. } | Command::Schema | Command::Suites => return Ok(None),
    };
    Ok(Some(v))
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Run {
            suite,
            config,
            out,
            timings,
        } => run_cmd(
            suite.as_deref(),
            config.as_deref(),
            out.as_deref(),
            *timings,
        ),
        Command::Schema => {
            emit(&emit_schema());
            Ok(true)
        }
        Command::Suites => {
            let names = suite_names();
            emit(&format!("{}\n", names.join("\n")));
            Ok(true)
        }
        _ => dispatch(&cli).map(|v| {
            if let Some(v) = v {
                emit(&format!(
                    "{}\n",
                    serde_json::to_string_pretty(&v).expect("json")
                ));
            }
            true
        }),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
