//! Named verification suites: each check runs one exact computation and
//! records a pass/fail/skipped status with its witness data.
//!
//! Reports are deterministic for a fixed configuration as long as timings
//! stay off; checks are ordered by claim id whatever order they finish in.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::groebner::DEFAULT_BUDGET;
use crate::algebra::{parse_equation, Field, Rational};
use crate::cremona::{
    dejonquieres, generated_group, labelled_frame_permutation, nfc_genus, order_five_map,
    order_five_map_on_frame, parse_plane_poly, power_conjugators, PlaneCurve, SingularPoint,
};
use crate::error::{Error, Result};
use crate::lattice::{
    bertini, check_ro1_divisibility, count_order5_isometries, geiser, isometry_from_cycle,
    minimal_pair_check, minus_one_classes, orbit_decomposition, pentagon_splittings,
    standard_pentagons, PicClass, PicIsometry, PicLattice,
};
use crate::surfaces::{
    fermat_equation, fermat_sigma_action, grassmannian_check, line_intersections, lines_on_fermat,
    match_pentagon_power, parse_model, pentagon_powers_over_labellings, rational_frame,
    weierstrass_normalize, CubicPencil, MemberType, Parameter, PencilReport, Stage,
};
use crate::weighted::{
    coordinate_automorphisms_a1, dual_actions_check, invariant_generators, jacobian_smooth,
    quotient_presentation, DiagonalAction, HypersurfaceModel,
};

pub const SCHEMA_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Overrides the default Gröbner budget when the config leaves it unset.
pub const BUDGET_ENV: &str = "CREMONA_KIT_GROEBNER_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub suite: String,
    /// Reduction steps allowed in each Gröbner computation.
    pub groebner_budget: Option<usize>,
    /// Budget for the Grassmannian smoothness stage; `0` skips it.
    pub smoothness_budget: Option<usize>,
    /// Largest order tried when computing orders of maps and isometries.
    pub order_bound: u32,
    /// Largest group closed up when searching for conjugators.
    pub group_limit: usize,
    /// Record wall times (makes reports differ between runs).
    pub timings: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: "all".into(),
            groebner_budget: None,
            smoothness_budget: None,
            order_bound: 12,
            group_limit: 200,
            timings: false,
            out: None,
        }
    }
}

fn budget_from_env() -> Result<Option<usize>> {
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Error::Config(format!("{BUDGET_ENV}={s:?} is not a step count"))),
        Err(_) => Ok(None),
    }
}

impl SuiteConfig {
    pub fn for_suite(name: &str) -> Self {
        SuiteConfig {
            suite: name.into(),
            ..Default::default()
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Fills unset budgets (environment first, then built-in defaults) and
    /// validates the result.
    pub fn resolved(&self) -> Result<Self> {
        if !suite_names().contains(&self.suite.as_str()) {
            return Err(Error::UnknownSuite(self.suite.clone()));
        }
        let mut c = self.clone();
        if c.groebner_budget.is_none() {
            c.groebner_budget = Some(budget_from_env()?.unwrap_or(DEFAULT_BUDGET));
        }
        if c.smoothness_budget.is_none() {
            c.smoothness_budget = c.groebner_budget;
        }
        if c.groebner_budget == Some(0) {
            return Err(Error::Config("groebner_budget must be positive".into()));
        }
        if c.order_bound == 0 || c.group_limit == 0 {
            return Err(Error::Config(
                "order_bound and group_limit must be positive".into(),
            ));
        }
        Ok(c)
    }

    fn budget(&self) -> usize {
        self.groebner_budget.unwrap_or(DEFAULT_BUDGET)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub claim_id: String,
    pub anchor: String,
    pub status: Status,
    pub witness: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: String,
    pub toolkit_version: String,
    pub suite: String,
    pub config: SuiteConfig,
    pub checks: Vec<CheckRecord>,
    /// No check failed (skipped checks do not count against this).
    pub passed: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn check(&self, claim_id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.claim_id == claim_id)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

struct Outcome {
    status: Status,
    witness: Value,
}

fn verdict(ok: bool, witness: Value) -> Result<Outcome> {
    Ok(Outcome {
        status: if ok { Status::Pass } else { Status::Fail },
        witness,
    })
}

struct Check {
    suite: &'static str,
    claim_id: &'static str,
    anchor: &'static str,
    run: fn(&SuiteConfig) -> Result<Outcome>,
}

const CHECKS: &[Check] = &[
    Check {
        suite: "e4-order",
        claim_id: "cremona.order-five",
        anchor: "(x(z-y), z(x-y), xz) and (xz, x(z-y), z(x-y)) have order exactly 5",
        run: order_five,
    },
    Check {
        suite: "dejonquieres",
        claim_id: "cremona.dejonquieres",
        anchor: "a curve of degree d with an ordinary (d-2)-fold point gives an involution of degree d fixing it, of genus d-2",
        run: dejonquieres_involutions,
    },
    Check {
        suite: "minus-one",
        claim_id: "lattice.minus-one-counts",
        anchor: "(-1)-classes on the blowup of r = 1..8 points number 1, 3, 6, 10, 16, 27, 56, 240",
        run: minus_one_counts,
    },
    Check {
        suite: "geiser-bertini",
        claim_id: "lattice.geiser-bertini",
        anchor: "Geiser and Bertini involutions: order 2, fix K, invariant rank 1, orbit sums multiples of -K, minimal pairs",
        run: geiser_bertini,
    },
    Check {
        suite: "fermat",
        claim_id: "surface.fermat-lines",
        anchor: "27 lines on the Fermat cubic; (x,y,z,w) -> (zeta x,y,z,w) acts with trace -2 and invariant rank 1",
        run: fermat_lines,
    },
    Check {
        suite: "prop-d",
        claim_id: "automorphisms.counts",
        anchor: "8 and 2 order-3 coordinate actions on two cubics; 6 pentagon splittings and 24 order-5 isometries for r = 4",
        run: automorphism_counts,
    },
    Check {
        suite: "quotients",
        claim_id: "weighted.quotients",
        anchor: "invariants {x, y^5, z, w}; quotients xu = F(x,z,w) in P(1,2,3,5), P(1,1,3) and P^2",
        run: quotients,
    },
    Check {
        suite: "x0",
        claim_id: "weighted.x0-smooth-dual",
        anchor: "x^6 + xy^5 + z^3 + w^2 is quasi-smooth and carries both an order-3 and an order-5 action",
        run: x0_smooth_dual,
    },
    Check {
        suite: "j-invariant",
        claim_id: "elliptic.j-invariant",
        anchor: "anticanonical curves of x^6 + xy^5 + z^3 + w^2 have j = 0; for xy^5 = F(x,z,w) the coefficient A is free of t",
        run: j_invariant,
    },
    Check {
        suite: "pencil",
        claim_id: "pencil.z5511",
        anchor: "y(x-y)(x-z) + lambda xz(y-z): two triangles and two irreducible nodal members",
        run: z5511_pencil,
    },
    Check {
        suite: "grassmannian",
        claim_id: "grassmannian.quintic",
        anchor: "an invariant P^5 meets Gr(2,5) in a surface of degree 5 with an order-5 action",
        run: grassmannian,
    },
    Check {
        suite: "conjugacy",
        claim_id: "cremona.power-conjugacy",
        anchor: "each power tau^k, k = 2, 3, 4, is conjugate to tau by a permutation of the four base points",
        run: power_conjugacy,
    },
    Check {
        suite: "divisibility",
        claim_id: "lattice.rank-one-divisibility",
        anchor: "for prime order n and invariant rank 1, every (-1)-orbit sum is a(-K) with n = a(9-r)",
        run: divisibility,
    },
    Check {
        suite: "pentagon-power",
        claim_id: "surface.pentagon-power",
        anchor: "plumbing: which power of the pentagon rotation the order-5 map induces on Pic",
        run: pentagon_power,
    },
];

/// Every suite name, `all` last.
pub fn suite_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = CHECKS.iter().map(|c| c.suite).collect();
    names.push("all");
    names
}

fn run_one(check: &Check, config: &SuiteConfig) -> CheckRecord {
    let start = Instant::now();
    let outcome = match (check.run)(config) {
        Ok(o) => o,
        Err(Error::BudgetExceeded(n)) => Outcome {
            status: Status::Skipped,
            witness: json!({ "reason": format!("budget of {n} steps exhausted") }),
        },
        Err(e) => Outcome {
            status: Status::Fail,
            witness: json!({ "error": e.to_string() }),
        },
    };
    CheckRecord {
        claim_id: check.claim_id.into(),
        anchor: check.anchor.into(),
        status: outcome.status,
        witness: outcome.witness,
        wall_time_ms: config.timings.then(|| start.elapsed().as_millis() as u64),
    }
}

/// Runs the checks of the configured suite, each on its own thread.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let config = config.resolved()?;
    let selected: Vec<&Check> = CHECKS
        .iter()
        .filter(|c| config.suite == "all" || c.suite == config.suite)
        .collect();
    let mut checks: Vec<CheckRecord> = std::thread::scope(|s| {
        let handles: Vec<_> = selected
            .iter()
            .map(|&c| {
                let cfg = &config;
                std::thread::Builder::new()
                    .stack_size(64 << 20)
                    .spawn_scoped(s, move || run_one(c, cfg))
                    .expect("spawn check thread")
            })
            .collect();
        handles
            .into_iter()
            .zip(&selected)
            .map(|(h, c)| {
                h.join().unwrap_or_else(|_| CheckRecord {
                    claim_id: c.claim_id.into(),
                    anchor: c.anchor.into(),
                    status: Status::Fail,
                    witness: json!({ "error": "check panicked" }),
                    wall_time_ms: None,
                })
            })
            .collect()
    });
    checks.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    let passed = checks.iter().all(|c| c.status != Status::Fail);
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION.into(),
        toolkit_version: TOOLKIT_VERSION.into(),
        suite: config.suite.clone(),
        config,
        checks,
        passed,
    })
}

/// JSON Schema (draft 2020-12) of [`VerificationReport`].
pub fn emit_schema() -> String {
    let schema = json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$id": format!("urn:cremona-kit:report:{SCHEMA_VERSION}"),
        "title": "VerificationReport",
        "type": "object",
        "required": ["schema_version", "toolkit_version", "suite", "config", "checks", "passed"],
        "additionalProperties": false,
        "properties": {
            "schema_version": { "const": SCHEMA_VERSION },
            "toolkit_version": { "type": "string" },
            "suite": { "enum": suite_names() },
            "config": {
                "type": "object",
                "required": ["suite", "groebner_budget", "smoothness_budget", "order_bound", "group_limit", "timings"],
                "additionalProperties": false,
                "properties": {
                    "suite": { "type": "string" },
                    "groebner_budget": { "type": "integer", "minimum": 1 },
                    "smoothness_budget": { "type": "integer", "minimum": 0 },
                    "order_bound": { "type": "integer", "minimum": 1 },
                    "group_limit": { "type": "integer", "minimum": 1 },
                    "timings": { "type": "boolean" },
                    "out": { "type": "string" }
                }
            },
            "checks": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["claim_id", "anchor", "status", "witness"],
                    "additionalProperties": false,
                    "properties": {
                        "claim_id": { "type": "string", "minLength": 1 },
                        "anchor": { "type": "string", "minLength": 1 },
                        "status": { "enum": ["pass", "fail", "skipped"] },
                        "witness": {},
                        "wall_time_ms": { "type": "integer", "minimum": 0 }
                    }
                }
            },
            "passed": { "type": "boolean" }
        }
    });
    let mut s = serde_json::to_string_pretty(&schema).expect("schema serializes");
    s.push('\n');
    s
}

// ---- checks ----

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn order_five(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut ok = true;
    let mut rows = Vec::new();
    for (form, t) in [
        ("classification", order_five_map::<Rational>()),
        ("frame", order_five_map_on_frame()),
    ] {
        let order = t.order_up_to(cfg.order_bound);
        let degrees: Vec<u64> = (1..5).map(|k| t.powu(k).degree()).collect();
        let identity_below_five = (1..5).any(|k| t.powu(k).is_identity());
        ok &= order == Some(5) && !identity_below_five;
        rows.push(json!({ "form": form, "map": t.to_string(), "order": order, "degrees_of_powers_1_to_4": degrees }));
    }
    verdict(ok, json!({ "maps": rows }))
}

/// Curves with an ordinary `(d-2)`-fold point at `(0:0:1)`.
pub const DEJONQUIERES_CURVES: [(u64, &str); 3] = [
    (3, "z^2*x+z*y^2+x^3"),
    (4, "x*y*z^2+(x^3-y^3)*z+x^4+2*y^4"),
    (5, "(x^3-y^3)*z^2+(x^4+y^4)*z+x^5+3*y^5+x^2*y^3"),
];

fn dejonquieres_involutions(_: &SuiteConfig) -> Result<Outcome> {
    let mut ok = true;
    let mut rows = Vec::new();
    for (d, text) in DEJONQUIERES_CURVES {
        let c = parse_plane_poly::<Rational>(text)?;
        let j = dejonquieres(&c)?;
        let involutive = j.compose(&j).is_identity();
        let fixed = j.fixed_curve()?;
        let divisible = fixed.div_exact(&c).is_some();
        let pts = if d > 3 {
            vec![SingularPoint {
                point: [q(0), q(0), q(1)],
                multiplicity: d as u32 - 2,
            }]
        } else {
            vec![]
        };
        let genus = nfc_genus(&PlaneCurve::new(c, pts)?)?;
        ok &= j.degree() == d && involutive && divisible && genus == d - 2;
        rows.push(json!({
            "curve": text,
            "map": j.to_string(),
            "degree": j.degree(),
            "involutive": involutive,
            "fixed_curve": fixed.to_string(),
            "fixed_curve_divisible": divisible,
            "genus": genus,
        }));
    }
    verdict(ok, json!({ "curves": rows }))
}

pub const MINUS_ONE_COUNTS: [usize; 8] = [1, 3, 6, 10, 16, 27, 56, 240];

fn minus_one_counts(_: &SuiteConfig) -> Result<Outcome> {
    let counts: Vec<usize> = (1..=8)
        .map(|r| PicLattice::new(r).map(|l| minus_one_classes(&l).len()))
        .collect::<Result<_>>()?;
    verdict(
        counts == MINUS_ONE_COUNTS,
        json!({ "r": (1..=8).collect::<Vec<_>>(), "counts": counts, "expected": MINUS_ONE_COUNTS }),
    )
}

fn preserves_gram(l: &PicLattice, m: &PicIsometry) -> bool {
    let basis: Vec<PicClass> = (0..l.rank())
        .map(|i| PicClass((0..l.rank()).map(|j| (i == j) as i64).collect()))
        .collect();
    basis.iter().all(|a| {
        basis
            .iter()
            .all(|b| l.dot(&m.apply(a), &m.apply(b)) == l.dot(a, b))
    })
}

fn classes_text(cs: &[PicClass]) -> Vec<String> {
    cs.iter().map(|c| c.to_string()).collect()
}

fn geiser_bertini(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut ok = true;
    let mut rows = Vec::new();
    for (name, r) in [("geiser", 7), ("bertini", 8)] {
        let l = PicLattice::new(r)?;
        let m = if r == 7 { geiser(&l)? } else { bertini(&l)? };
        let order = m.order_up_to(cfg.order_bound);
        let gram = preserves_gram(&l, &m);
        let fixes_k = m.apply(&l.canonical()) == l.canonical();
        let rho = m.invariant_rank();
        let anti = l.canonical().neg();
        let orbits = orbit_decomposition(&m, &minus_one_classes(&l))?;
        let sums: BTreeSet<PicClass> = orbits.iter().map(|o| o.sum.clone()).collect();
        let sums: Vec<PicClass> = sums.into_iter().collect();
        // n = a (9 - r) fixes the multiple
        let expected_multiple = order.map(|n| n as i64 / l.degree());
        let sums_ok = expected_multiple.is_some_and(|a| sums.iter().all(|s| *s == anti.scale(a)));
        let literal = sums.iter().all(|s| *s == anti);
        let pairs = minimal_pair_check(&m, &l);
        ok &= order == Some(2) && gram && fixes_k && rho == 1 && sums_ok && pairs.holds;
        rows.push(json!({
            "involution": name,
            "r": r,
            "order": order,
            "preserves_intersection_form": gram,
            "fixes_canonical_class": fixes_k,
            "invariant_rank": rho,
            "orbits": orbits.len(),
            "distinct_orbit_sums": classes_text(&sums),
            "sum_multiple_of_minus_k": expected_multiple,
            "every_sum_equals_minus_k": literal,
            "minimal_pairs": pairs.holds,
        }));
    }
    verdict(ok, json!({ "involutions": rows }))
}

fn fermat_lines(cfg: &SuiteConfig) -> Result<Outcome> {
    let lines = lines_on_fermat();
    let f = fermat_equation();
    let on_surface = lines.iter().filter(|l| l.lies_on(&f)).count();
    let meet = line_intersections(&lines);
    let ten_each = meet
        .iter()
        .all(|row| row.iter().filter(|&&v| v == 1).count() == 10);
    let s = fermat_sigma_action()?;
    let order = s.isometry.order_up_to(cfg.order_bound);
    let ok = lines.len() == 27
        && on_surface == 27
        && ten_each
        && s.trace == -2
        && s.invariant_rank == 1
        && order == Some(3);
    verdict(
        ok,
        json!({
            "lines": lines.len(),
            "lines_on_surface": on_surface,
            "each_meets_ten": ten_each,
            "sixer": s.sixer,
            "permutation": s.permutation,
            "trace": s.trace,
            "invariant_rank": s.invariant_rank,
            "order": order,
            "isometry": s.isometry.matrix(),
        }),
    )
}

pub const FERMAT_CUBIC: &str = "x^3+y^3+z^3+w^3";
pub const DIAGONAL_CUBIC: &str = "x^3 = y*z*w+y^3+z^3+w^3";

fn automorphism_counts(_: &SuiteConfig) -> Result<Outcome> {
    let fermat = HypersurfaceModel::<Rational>::parse(&[1, 1, 1, 1], FERMAT_CUBIC, None)?;
    let other = HypersurfaceModel::<Rational>::parse(&[1, 1, 1, 1], DIAGONAL_CUBIC, None)?;
    let fa = coordinate_automorphisms_a1(&fermat)?;
    let oa = coordinate_automorphisms_a1(&other)?;
    let l = PicLattice::new(4)?;
    let splittings = pentagon_splittings(&l)?.len();
    let order5 = count_order5_isometries(&l)?;
    let exps = |v: &[DiagonalAction]| v.iter().map(|a| a.exponents().to_vec()).collect::<Vec<_>>();
    let ok = fa.len() == 8 && oa.len() == 2 && splittings == 6 && order5 == 24;
    verdict(
        ok,
        json!({
            "fermat_actions": exps(&fa),
            "diagonal_cubic": DIAGONAL_CUBIC,
            "diagonal_cubic_actions": exps(&oa),
            "pentagon_splittings": splittings,
            "order_five_isometries": order5,
        }),
    )
}

pub const X0: &str = "x^6+x*y^5+z^3+w^2";

fn quotients(_: &SuiteConfig) -> Result<Outcome> {
    let m5 = HypersurfaceModel::<Rational>::parse(&[1, 1, 2, 3], X0, Some((5, &[0, 1, 0, 0])))?;
    let gens = invariant_generators(m5.ring(), m5.action().expect("action given"), None)?;
    let mut shown = gens.display.clone();
    shown.sort();
    let gens_ok = shown == ["w", "x", "y^5", "z"];

    let p5 = quotient_presentation(&m5)?;
    let expected = parse_equation::<Rational>("x*u = -(x^6+z^3+w^2)", p5.ring.vars())?;
    let xu_ok = p5.ring.weights() == [1, 2, 3, 5]
        && p5.relation.as_ref() == Some(&expected)
        && p5.pull_back(m5.ring(), 5).as_ref() == Some(m5.equation());

    let m3 = HypersurfaceModel::<Rational>::parse(&[1, 1, 2, 3], X0, Some((3, &[0, 0, 1, 0])))?;
    let p3 = quotient_presentation(&m3)?;
    let p113 = p3.ring.weights() == [1, 1, 3] && p3.relation.is_none();

    let cubic = HypersurfaceModel::<Rational>::parse(
        &[1, 1, 1, 1],
        DIAGONAL_CUBIC,
        Some((3, &[1, 0, 0, 0])),
    )?;
    let pc = quotient_presentation(&cubic)?;
    let plane = pc.ring.weights() == [1, 1, 1] && pc.relation.is_none();

    let show = |p: &crate::weighted::QuotientPresentation<Rational>| {
        json!({
            "variables": p.ring.names(),
            "weights": p.ring.weights(),
            "relation": p.relation.as_ref().map(|r| r.to_string()),
        })
    };
    verdict(
        gens_ok && xu_ok && p113 && plane,
        json!({
            "order_five_invariants": shown,
            "invariants_checked_up_to_degree": gens.bound,
            "order_five_quotient": show(&p5),
            "order_three_quotient": show(&p3),
            "cubic_quotient": show(&pc),
        }),
    )
}

fn x0_smooth_dual(cfg: &SuiteConfig) -> Result<Outcome> {
    let m = HypersurfaceModel::<Rational>::parse(&[1, 1, 2, 3], X0, None)?;
    let smooth = jacobian_smooth(&m, cfg.budget())?;
    let dual = dual_actions_check(&m)?;
    verdict(
        smooth.smooth && dual.both,
        json!({
            "equation": X0,
            "quasi_smooth": smooth.smooth,
            "singular_locus_dimension": smooth.singular_locus_dimension,
            "order_three": dual.order_three.as_ref().map(|a| a.exponents().to_vec()),
            "order_five": dual.order_five.as_ref().map(|a| a.exponents().to_vec()),
        }),
    )
}

pub const X0_FAMILY: &str = "w^2 + z^3 + 1 + t^5";
pub const GENERIC_A3_FAMILY: &str = "3*w^2 + (2 + 5*z)*w + 7*z^3 - 2*z^2 + 11*z + 13 - t^5";

fn j_invariant(_: &SuiteConfig) -> Result<Outcome> {
    let e0 = weierstrass_normalize(&parse_model::<Rational>(X0_FAMILY)?)?;
    let j0 = e0.j_invariant()?;
    let eg = weierstrass_normalize(&parse_model::<Rational>(GENERIC_A3_FAMILY)?)?;
    let ok = e0.a.is_zero() && j0.is_zero() && eg.a.is_constant();
    verdict(
        ok,
        json!({
            "x0_family": { "model": X0_FAMILY, "a": e0.a.to_string(), "b": e0.b.to_string(), "j_is_zero": j0.is_zero() },
            "generic_family": {
                "model": GENERIC_A3_FAMILY,
                "a": eg.a.to_string(),
                "b": eg.b.to_string(),
                "a_free_of_parameter": eg.a.is_constant(),
            },
        }),
    )
}

pub const Z5511: (&str, &str) = ("y*(x-y)*(x-z)", "x*z*(y-z)");

fn z5511_pencil(_: &SuiteConfig) -> Result<Outcome> {
    let p = CubicPencil::new(
        parse_plane_poly::<Rational>(Z5511.0)?,
        parse_plane_poly(Z5511.1)?,
    )?;
    let r = p.singular_members()?;
    let triangles_at_ends = r
        .members
        .iter()
        .filter(|m| m.kind == MemberType::Triangle)
        .all(|m| {
            matches!(&m.parameter, Parameter::Infinity)
                || matches!(&m.parameter, Parameter::Value(v) if v == &q(0))
        });
    let triangles = r.count(MemberType::Triangle);
    let nodal = r.count(MemberType::Nodal);
    let others = r
        .members
        .iter()
        .filter(|m| !matches!(m.kind, MemberType::Triangle | MemberType::Nodal))
        .count();
    let ok = triangles == 2
        && triangles_at_ends
        && nodal == 2
        && others == 0
        && r.total_multiplicity() == 12;
    let mut witness = pencil_json(&r);
    witness["pencil"] = json!(format!("{} + lambda*{}", Z5511.0, Z5511.1));
    verdict(ok, witness)
}

/// `(a:b:c)` with exact coordinates.
pub fn point_text<F: Field>(p: &[F; 3]) -> String {
    format!("({}:{}:{})", p[0], p[1], p[2])
}

/// A pencil report with every field element written as a string.
pub fn pencil_json<F: Field>(r: &PencilReport<F>) -> Value {
    let members: Vec<Value> = r
        .members
        .iter()
        .map(|m| {
            json!({
                "parameter": match &m.parameter {
                    Parameter::Value(v) => v.to_string(),
                    Parameter::Infinity => "infinity".into(),
                    Parameter::Roots(g) => format!("roots of {g}"),
                },
                "multiplicity": m.multiplicity,
                "kind": m.kind,
                "member": m.member.as_ref().map(|f| f.to_string()),
                "tjurina": m.tjurina,
            })
        })
        .collect();
    json!({
        "discriminant": r.discriminant.to_string(),
        "members": members,
        "total_multiplicity": r.total_multiplicity(),
        "base_points": r.base_points.iter().map(point_text).collect::<Vec<_>>(),
    })
}

fn grassmannian(cfg: &SuiteConfig) -> Result<Outcome> {
    let smooth = cfg.smoothness_budget.filter(|&b| b > 0);
    let r = grassmannian_check(cfg.budget(), smooth)?;
    let status = if matches!(r.hilbert, Stage::Skipped(_)) {
        Status::Skipped
    } else if r.passes() {
        Status::Pass
    } else {
        Status::Fail
    };
    let witness = serde_json::to_value(&r).expect("report serializes");
    Ok(Outcome { status, witness })
}

/// The three point permutations, in cycles on labels `p1..p4 = 0..3`.
pub fn frame_permutation_cycles() -> [Vec<Vec<usize>>; 3] {
    [
        vec![vec![0, 3, 1, 2]],
        vec![vec![0, 2, 1, 3]],
        vec![vec![0, 1], vec![2, 3]],
    ]
}

/// Frame points carrying the labels `p1..p4` for the frame form of the map:
/// `e1, (1:1:1), e3, e2`.
pub const CONJUGACY_LABELS: [usize; 4] = [0, 3, 2, 1];

fn power_conjugacy(cfg: &SuiteConfig) -> Result<Outcome> {
    let t = order_five_map_on_frame::<Rational>();
    let gens_for = |labels: [usize; 4]| -> Result<Vec<_>> {
        frame_permutation_cycles()
            .iter()
            .map(|cs| labelled_frame_permutation::<Rational>(cs, labels))
            .collect()
    };
    let group = generated_group(&gens_for(CONJUGACY_LABELS)?, cfg.group_limit);
    let found = power_conjugators(&t, &group, 5);
    let ok = found.iter().all(|(_, g)| g.is_some());
    let literal = generated_group(&gens_for([0, 1, 2, 3])?, cfg.group_limit);
    let literal_found = power_conjugators(&t, &literal, 5)
        .iter()
        .filter(|(_, g)| g.is_some())
        .count();
    let witnesses: Vec<Value> = found
        .iter()
        .map(|(k, g)| json!({ "k": k, "conjugator": g.as_ref().map(|g| g.to_string()) }))
        .collect();
    verdict(
        ok,
        json!({
            "map": t.to_string(),
            "labels_at_frame_points": CONJUGACY_LABELS,
            "group_order": group.len(),
            "witnesses": witnesses,
            "standard_labels_group_order": literal.len(),
            "standard_labels_powers_found": literal_found,
        }),
    )
}

fn divisibility(_: &SuiteConfig) -> Result<Outcome> {
    let l7 = PicLattice::new(7)?;
    let l8 = PicLattice::new(8)?;
    let l4 = PicLattice::new(4)?;
    let [d1, _] = standard_pentagons(&l4)?;
    let sigma = fermat_sigma_action()?;
    let l6 = PicLattice::new(6)?;
    let corpus: Vec<(&str, PicLattice, PicIsometry)> = vec![
        ("geiser", l7, geiser(&l7)?),
        ("bertini", l8, bertini(&l8)?),
        ("pentagon", l4, isometry_from_cycle(&l4, &d1)?),
        ("fermat-sigma", l6, sigma.isometry),
    ];
    let mut ok = true;
    let mut rows = Vec::new();
    for (name, l, m) in corpus {
        let rep = check_ro1_divisibility(&l, &m)?;
        ok &= rep.pass;
        let multiples: BTreeSet<Option<i64>> = rep.entries.iter().map(|e| e.multiple).collect();
        rows.push(json!({
            "isometry": name,
            "r": l.points(),
            "order": rep.order,
            "degree": rep.degree,
            "orbits": rep.entries.len(),
            "multiples": multiples,
            "pass": rep.pass,
        }));
    }
    verdict(ok, json!({ "corpus": rows }))
}

fn pentagon_power(_: &SuiteConfig) -> Result<Outcome> {
    let classification = match_pentagon_power(&order_five_map::<Rational>(), &rational_frame())?;
    let frame = order_five_map_on_frame::<Rational>();
    let standard = match_pentagon_power(&frame, &rational_frame())?;
    let labellings = pentagon_powers_over_labellings(&frame)?;
    let rows: Vec<Value> = labellings
        .iter()
        .map(|(labels, m)| json!({ "labels": labels, "power": m }))
        .collect();
    verdict(
        classification.exponent.is_some() && !labellings.is_empty(),
        json!({
            "classification_form_power": classification.exponent,
            "frame_form_power_standard_labels": standard.exponent,
            "frame_form_labellings": rows,
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_are_unique_and_sorted_ids_are_unique() {
        let names = suite_names();
        let set: BTreeSet<_> = names.iter().collect();
        assert_eq!(set.len(), names.len());
        let ids: BTreeSet<_> = CHECKS.iter().map(|c| c.claim_id).collect();
        assert_eq!(ids.len(), CHECKS.len());
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(
            run_suite(&SuiteConfig::for_suite("nope")),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn config_validation() {
        let c = SuiteConfig {
            groebner_budget: Some(0),
            ..SuiteConfig::for_suite("x0")
        };
        assert!(matches!(c.resolved(), Err(Error::Config(_))));
        assert!(SuiteConfig::from_json(r#"{"suite": "x0", "bogus": 1}"#).is_err());
        let c = SuiteConfig::from_json(r#"{"suite": "x0", "groebner_budget": 77}"#)
            .unwrap()
            .resolved()
            .unwrap();
        assert_eq!(c.groebner_budget, Some(77));
        assert_eq!(c.smoothness_budget, Some(77));
    }

    #[test]
    fn order_suite_passes_and_is_deterministic() {
        let c = SuiteConfig::for_suite("e4-order");
        let a = run_suite(&c).unwrap();
        assert!(a.passed);
        assert_eq!(a.checks.len(), 1);
        assert_eq!(a.checks[0].status, Status::Pass);
        assert_eq!(a.to_json(), run_suite(&c).unwrap().to_json());
    }

    #[test]
    fn tiny_budget_skips_instead_of_failing() {
        let c = SuiteConfig {
            groebner_budget: Some(1),
            ..SuiteConfig::for_suite("x0")
        };
        let r = run_suite(&c).unwrap();
        assert_eq!(r.checks[0].status, Status::Skipped);
        assert!(r.passed);
    }
}
