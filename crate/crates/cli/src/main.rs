//! `calogero`: command-line front end to the verification suites and computations.

use std::path::PathBuf;
use std::io::Write;
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use calogero_core::cherednik::{self, Cherednik, VermaModule, WRep};
use calogero_core::cmflow::{self, PhasePoint, Word};
use calogero_core::coxeter::{parse_group, AnyGroup, ClassParams, ReflectionGroup, VarLayout};
use calogero_core::dunkl::{self, Dunkl};
use calogero_core::exact::{parse_q, Field, Poly, Q};
use calogero_core::report::CheckReport;
use calogero_core::typea;
use calogero_core::verify::{self, canonical_json, Profile, RunManifest, Settings};
use calogero_core::{with_group, Error};

const VERSION: &str = env!("CARGO_PKG_VERSION");

static START: OnceLock<Instant> = OnceLock::new();

fn stamp(manifest: &mut RunManifest) {
    manifest.wall_seconds = START.get().map_or(0.0, |s| s.elapsed().as_secs_f64());
}

#[derive(Parser, Debug)]
#[command(name = "calogero", version, about = "Dunkl operators, Cherednik algebras and Calogero–Moser systems")]
struct Cli {
    /// TOML file presetting options; flags override it.
    #[arg(long, global = true, env = "CM_CONFIG")]
    config: Option<PathBuf>,
    /// Seed for all sampled checks (ChaCha8).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print the statements this verb exercises and exit.
    #[arg(long, global = true)]
    paper_ref: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run every acceptance check.
    Verify {
        #[arg(long, env = "CM_PROFILE")]
        profile: Option<String>,
    },
    /// Integrate the Calogero–Moser system by eigenvalues and by RK4.
    Flow {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, default_value_t = 1.0)]
        t_max: f64,
        #[arg(long, default_value_t = 1e-3)]
        dt: f64,
        /// Flow generated by `Tr(Y^order)/order`; only order 2 has an ODE comparison.
        #[arg(long, default_value_t = 2)]
        order: u32,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Commutativity, the commutator with coordinates, and equivariance of Dunkl operators.
    DunklCheck {
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        degree: Option<u32>,
        /// Add 1 to the first reflection weight (sensitivity check).
        #[arg(long)]
        perturb: bool,
    },
    /// Conjugation of L̄ by δ_c and harmonicity of δ.
    OpGauge {
        #[arg(long)]
        group: Option<String>,
        /// Integer multiplicity per reflection class, comma separated.
        #[arg(long, default_value = "1")]
        c: String,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// First integrals `Tr(Y^i)` of the classical system, or the quantum integrals.
    Integrals {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 3)]
        i: usize,
        /// Check the quantum integrals of S_n instead.
        #[arg(long)]
        quantum: bool,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Relations, associativity and sl2 symmetry of H_{t,c}.
    Pbw {
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_enum, default_value_t = PbwCheck::Relations)]
        check: PbwCheck,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
    /// Graded character of a standard module.
    Character {
        #[arg(long)]
        group: Option<String>,
        #[arg(long, default_value = "triv")]
        tau: String,
        #[arg(long)]
        deg: Option<u32>,
        /// Parameter values per reflection class (symbolic if omitted).
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
    },
    /// Degree-r singular vectors in the type-A polynomial representation.
    Singular {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: usize,
    },
    /// The finite-dimensional quotient M_k/I_k.
    FiniteDim {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Whether every singular vector vanishes at a point.
    Support {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: usize,
        /// Coordinates: rationals, or letters standing for distinct seeded values.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// The regular representation of H_{0,c} attached to a generic orbit.
    Rep0 {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value = "1")]
        c: String,
    },
    /// Canonical Poisson brackets of trace words against the splice formula.
    Necklace {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 3)]
        maxlen: usize,
        /// Single bracket {Tr a, Tr b} at one seeded pair.
        #[arg(long, requires = "b")]
        a: Option<String>,
        #[arg(long, requires = "a")]
        b: Option<String>,
    },
    /// The trigonometric system: coordinate and sinh forms, involutivity.
    Trig {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        points: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq)]
enum Method {
    Eigen,
    Ode,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq)]
enum PbwCheck {
    Relations,
    Assoc,
    Sl2,
}

/// Keys accepted in the config file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Config {
    profile: Option<String>,
    seed: Option<u64>,
    group: Option<String>,
    n: Option<usize>,
    degree: Option<u32>,
    cap: Option<u32>,
    trials: Option<usize>,
    points: Option<usize>,
    samples: Option<usize>,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameters(_)
            | Error::Parse(_)
            | Error::UnknownGroup(_)
            | Error::CollidingCoordinates(..)
            | Error::NonPositiveCoordinate(_)
            | Error::DegenerateSpectrum
            | Error::NotUnimodular(_)
            | Error::UnsupportedField(_)
            | Error::DegreeCapExceeded { .. }
            | Error::CapTooSmall { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// What a verb produced: a payload and whether its checks passed.
struct Outcome {
    body: String,
    passed: bool,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn paper_refs(cmd: &Cmd) -> &'static [&'static str] {
    match cmd {
        Cmd::Verify { .. } => &["every statement below, as the acceptance suite"],
        Cmd::Flow { .. } => &[
            "Calogero–Moser Hamiltonian H = Σp² − Σ 1/(x_i − x_j)²",
            "positions are the eigenvalues of X_0 + 2tY_0",
            "higher flows (X, Y) ↦ (X + iY^{i−1}t, Y)",
        ],
        Cmd::DunklCheck { .. } => &["Dunkl operators commute", "commutator of a Dunkl operator with a coordinate", "W-equivariance of Dunkl operators"],
        Cmd::OpGauge { .. } => &["gauge identity L̄ δ_c = δ_c L with δ_c = Π α_s^{c_s}", "Δδ = 0 for the discriminant δ"],
        Cmd::Integrals { .. } => &["first integrals H_i = Tr(Y(x,p)^i)", "quantum integrals from symmetric polynomials in Dunkl operators"],
        Cmd::Pbw { .. } => &["defining relations of H_{t,c}", "PBW theorem", "grading element and sl2 action"],
        Cmd::Character { .. } => &["character formula χ_τ(g) t^{h(τ)} / det(1 − gt) for standard modules"],
        Cmd::Singular { .. } => &["singular vectors f_i as residues at infinity, at k = r/n"],
        Cmd::FiniteDim { .. } => &["dim M_k/I_k = r^(n−1)", "Frobenius property and irreducibility of the quotient"],
        Cmd::Support { .. } => &["support of M_k/I_k: multiplicities divisible by n/gcd(r, n)"],
        Cmd::Rep0 { .. } => &["representations of H_{0,c} on the regular representation", "Calogero–Moser point from the restriction to S_{n−1}-invariants"],
        Cmd::Necklace { .. } => &["necklace bracket formula", "{b_m, a_k} = k a_{m+k−1}"],
        Cmd::Trig { .. } => &["trigonometric Calogero–Moser system and its additive coordinates", "the functions Tr((XY)^i) are in involution"],
    }
}

fn load_config(path: Option<&PathBuf>) -> Res<Config> {
    let Some(path) = path else { return Ok(Config::default()) };
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| usage(format!("config {}: {e}", path.display())))
}

fn q_list(s: &str) -> Res<Vec<Q>> {
    s.split(',').map(|t| parse_q(t).ok_or_else(|| usage(format!("`{t}` is not a rational number")))).collect()
}

fn f64_list(s: &str) -> Res<Vec<f64>> {
    s.split(',').map(|t| t.trim().parse::<f64>().map_err(|_| usage(format!("`{t}` is not a number")))).collect()
}

fn check_len<T>(v: &[T], n: usize, what: &str) -> Res<()> {
    if v.len() == n {
        Ok(())
    } else {
        Err(usage(format!("{what} has {} entries, expected {n}", v.len())))
    }
}

fn reports_json(reports: &[CheckReport]) -> Value {
    serde_json::to_value(reports).expect("reports serialize")
}

fn rational_group(label: &str) -> Res<ReflectionGroup<Q>> {
    match parse_group(label)? {
        AnyGroup::Rational(w) => Ok(w),
        AnyGroup::Sqrt5(_) => Err(usage(format!("`{label}` needs √5 coefficients; this verb supports rational groups only"))),
    }
}

fn dunkl_reports<F: Field>(w: &ReflectionGroup<F>, degree: u32, perturb: bool) -> Res<Vec<CheckReport>> {
    let lay = VarLayout::quantum(w.dim(), w.num_reflection_classes());
    let mut weights = ClassParams::symbolic(w, &lay).weights(w);
    if perturb {
        weights[0] = &weights[0] + &Poly::one(lay.nvars());
    }
    let d = Dunkl::with_weights(w, weights, lay.nvars());
    Ok(vec![dunkl::commutativity_report(&d, degree), dunkl::x_commutator_report(&d, degree), dunkl::equivariance_report(&d, degree)?])
}

fn pbw_reports<F: Field>(w: &ReflectionGroup<F>, check: PbwCheck, seed: u64, samples: usize, max_len: usize, max_n: u32) -> Vec<CheckReport> {
    let h = Cherednik::new(w);
    match check {
        PbwCheck::Relations => vec![cherednik::relations_report(&h)],
        PbwCheck::Assoc => vec![cherednik::associativity_report(&h, seed, samples, max_len), cherednik::flatness_report(&h, max_n)],
        PbwCheck::Sl2 => vec![cherednik::grading_report(&h), cherednik::sl2_report(&h, seed, samples, max_len)],
    }
}

fn passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}

fn with_manifest(manifest: &mut RunManifest, reports: &[CheckReport], result: Value) -> Res<Outcome> {
    reports.iter().for_each(|r| manifest.record(r));
    stamp(manifest);
    let body = canonical_json(&json!({ "manifest": manifest, "result": result, "checks": reports_json(reports) }))?;
    Ok(Outcome { body, passed: passed(reports) })
}

fn run(cli: &Cli, manifest: &mut RunManifest) -> Res<Outcome> {
    let cfg = load_config(cli.config.as_ref())?;
    let seed = cli.seed.or(cfg.seed).unwrap_or(1);
    manifest.seed = seed;
    let group = |flag: &Option<String>| flag.clone().or_else(|| cfg.group.clone()).unwrap_or_else(|| "S3".into());
    let size = |flag: Option<usize>, default: usize| flag.or(cfg.n).unwrap_or(default);
    match &cli.cmd {
        Cmd::Verify { profile } => {
            let profile: Profile = profile.clone().or_else(|| cfg.profile.clone()).unwrap_or_else(|| "quick".into()).parse()?;
            let report = verify::verify_all(&Settings { profile, seed });
            for c in &report.checks {
                manifest.checks.insert(c.check.clone(), c.passed);
            }
            stamp(manifest);
            let body = canonical_json(&json!({ "manifest": manifest, "report": report }))?;
            Ok(Outcome { body, passed: report.passed })
        }
        Cmd::Flow { n, x, p, t_max, dt, order, method, format } => {
            let pt = match (x, p) {
                (Some(x), Some(p)) => {
                    let (x, p) = (f64_list(x)?, f64_list(p)?);
                    if let Some(n) = n {
                        check_len(&x, *n, "x")?;
                    }
                    PhasePoint::new(x, p)?
                }
                (None, None) => {
                    use rand::SeedableRng;
                    cmflow::sample_initial(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), size(*n, 3))
                }
                _ => return Err(usage("give both --x and --p, or neither")),
            };
            if *order != 2 && *method != Method::Eigen {
                return Err(usage("the ODE comparison exists for order 2 only; use --method eigen"));
            }
            let mut samples = Vec::new();
            if *method != Method::Ode {
                samples.push(("eigen", if *order == 2 { cmflow::eigen_sample(&pt, *t_max, *dt)? } else { eigen_sample_order(&pt, *t_max, *dt, *order)? }));
            }
            if *method != Method::Eigen {
                samples.push(("ode", cmflow::ode_integrate(&pt, *t_max, *dt)?));
            }
            let mut rep = CheckReport::new("flow");
            if let [(_, a), (_, b)] = samples.as_slice() {
                let gap = cmflow::max_position_gap(a, b);
                rep.record(gap <= 1e-6, || format!("eigen/ode position gap {gap:e}"));
                rep.record(b.energy_drift <= 1e-8, || format!("energy drift {:e}", b.energy_drift));
            }
            manifest.record(&rep);
            stamp(manifest);
            let ok = rep.instances == 0 || rep.passed();
            let body = match format {
                Format::Csv => {
                    let refs: Vec<(&str, &cmflow::TrajectorySample)> = samples.iter().map(|(m, s)| (*m, s)).collect();
                    cmflow::trajectory_csv(&refs)?
                }
                Format::Json => {
                    let traj: serde_json::Map<String, Value> = samples.iter().map(|(m, s)| (m.to_string(), serde_json::to_value(s).expect("serialize"))).collect();
                    canonical_json(&json!({ "manifest": manifest, "trajectories": traj, "checks": [rep] }))?
                }
            };
            Ok(Outcome { body, passed: ok })
        }
        Cmd::DunklCheck { group: g, degree, perturb } => {
            let label = group(g);
            let degree = degree.or(cfg.degree).unwrap_or(3);
            let reports = with_group!(&parse_group(&label)?, w => dunkl_reports(w, degree, *perturb))?;
            with_manifest(manifest, &reports, json!({ "group": label, "degree": degree, "perturbed": perturb }))
        }
        Cmd::OpGauge { group: g, c, degree } => {
            let w = rational_group(&group(g))?;
            let cs: Vec<u32> = c.split(',').map(|t| t.trim().parse().map_err(|_| usage(format!("`{t}` is not a nonnegative integer")))).collect::<Res<_>>()?;
            check_len(&cs, w.num_reflection_classes(), "--c")?;
            let degree = degree.or(cfg.degree).unwrap_or(4);
            let mut harmonic = CheckReport::new(format!("Δδ = 0 {}", w.name()));
            harmonic.record(w.laplacian_kills_discriminant(), || "Δδ ≠ 0".into());
            let reports = vec![dunkl::gauge_report(&w, &cs, degree), dunkl::gauge_symbolic_report(&w), harmonic];
            with_manifest(manifest, &reports, json!({ "group": w.name(), "c": cs, "degree": degree }))
        }
        Cmd::Integrals { n, i, quantum, points } => {
            let n = size(*n, 3);
            if *quantum {
                let w = ReflectionGroup::<Q>::symmetric(n)?;
                let reports = vec![dunkl::integrals_report(&w, cfg.degree.unwrap_or(3))];
                return with_manifest(manifest, &reports, json!({ "n": n, "quantum": true }));
            }
            let names: Vec<String> = (1..=n).map(|k| format!("x{k}")).chain((1..=n).map(|k| format!("p{k}"))).collect();
            let exprs: Vec<String> = (1..=*i).map(|k| cmflow::symbolic_integral(k, n).map(|h| h.display(&names).to_string())).collect::<calogero_core::Result<_>>()?;
            let reports = vec![cmflow::integrals_report(seed, points.or(cfg.points).unwrap_or(100), n)?];
            with_manifest(manifest, &reports, json!({ "n": n, "integrals": exprs }))
        }
        Cmd::Pbw { group: g, check, samples, max_len, max_n } => {
            let label = group(g);
            let samples = samples.or(cfg.samples).unwrap_or(200);
            let reports = with_group!(&parse_group(&label)?, w => pbw_reports(w, *check, seed, samples, *max_len, *max_n));
            with_manifest(manifest, &reports, json!({ "group": label, "check": format!("{check:?}").to_lowercase() }))
        }
        Cmd::Character { group: g, tau, deg, k } => {
            let w = rational_group(&group(g))?;
            let deg = deg.or(cfg.degree).unwrap_or(10);
            let rep = match tau.as_str() {
                "triv" | "trivial" => WRep::trivial(&w),
                "sign" => WRep::sign(&w),
                "refl" | "reflection" => WRep::reflection(&w)?,
                "defining" => WRep::defining(&w),
                _ => return Err(usage(format!("unknown representation `{tau}` (triv|sign|refl|defining)"))),
            };
            let m = match k {
                None => VermaModule::new(&w, rep, deg),
                Some(k) => {
                    let ks = q_list(k)?;
                    check_len(&ks, w.num_reflection_classes(), "--k")?;
                    let lay = VarLayout::quantum(w.dim(), 0);
                    let c = ClassParams::constants(&ks, lay.nvars());
                    VermaModule::with_params(&w, rep, lay, &c, deg)
                }
            };
            let ch = m.character()?;
            let reports = vec![cherednik::character_report(&m)];
            with_manifest(manifest, &reports, json!({ "group": w.name(), "tau": tau, "character": ch.to_json(&m.layout().names()) }))
        }
        Cmd::Singular { n, r } => {
            let n = size(*n, 3);
            let fam = typea::singular_vectors(n, *r)?;
            let names: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
            let f: Vec<String> = fam.f.iter().map(|p| p.display(&names).to_string()).collect();
            let reports = vec![typea::singular_report(&fam)?];
            with_manifest(manifest, &reports, json!({ "n": n, "r": r, "k": fam.k().to_string(), "f": f }))
        }
        Cmd::FiniteDim { n, r, cap } => {
            let n = size(*n, 3);
            let cap = cap.or(cfg.cap).unwrap_or(4 * *r as u32);
            let qs = typea::QuotientSlices::compute(n, *r, cap)?;
            let ch = qs.character()?;
            let reports = vec![typea::quotient_report(&qs)?, typea::frobenius_check(&qs)];
            with_manifest(manifest, &reports, json!({ "n": n, "r": r, "dims": qs.dims(), "total": qs.total_dim(), "character": ch }))
        }
        Cmd::Support { n, r, point } => {
            let tokens: Vec<&str> = point.split(',').map(str::trim).collect();
            let n = size(*n, tokens.len());
            check_len(&tokens, n, "--point")?;
            let coords = letters_to_rationals(&tokens, seed)?;
            let got = typea::support_test(n, *r, &coords)?;
            let predicted = typea::support_predicted(n, *r, &coords);
            let mut rep = CheckReport::new("support rule");
            rep.record(got == predicted, || format!("vanishing {got}, multiplicity rule {predicted}"));
            let point: Vec<String> = coords.iter().map(ToString::to_string).collect();
            with_manifest(manifest, &[rep], json!({ "n": n, "r": r, "point": point, "in_support": got, "predicted": predicted }))
        }
        Cmd::Rep0 { n, lambda, mu, c } => {
            let (lambda, mu) = (q_list(lambda)?, q_list(mu)?);
            let n = size(*n, lambda.len());
            check_len(&lambda, n, "--lambda")?;
            check_len(&mu, n, "--mu")?;
            let c = parse_q(c).ok_or_else(|| usage("--c is not a rational number"))?;
            let rep = typea::orbit_representation(n, &lambda, &mu, &c)?;
            let mut reports = vec![typea::orbit_report(&rep, seed, 20)?];
            let mut result = json!({ "n": n, "dimension": rep.dim(), "c": c.to_string() });
            if c == Q::from_i64(1) {
                let cm = typea::cm_point_from_rep(&rep)?;
                let mut pr = CheckReport::new("Calogero–Moser point");
                pr.record(cm.matches_closed_form, || "closed-form matrices".into());
                pr.record(cm.restriction_consistent, || "restriction".into());
                pr.record(cm.rank_defect == 1, || format!("rank {}", cm.rank_defect));
                reports.push(pr);
                result["cm_point"] = serde_json::to_value(&cm).expect("serialize");
            }
            with_manifest(manifest, &reports, result)
        }
        Cmd::Necklace { n, trials, maxlen, a, b } => {
            let n = size(*n, 3);
            if let (Some(a), Some(b)) = (a, b) {
                use rand::SeedableRng;
                let (wa, wb) = (Word::parse(a)?, Word::parse(b)?);
                if wa.len() > 6 || wb.len() > 6 {
                    return Err(usage("words longer than 6 letters"));
                }
                let m = cmflow::random_pair(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), n);
                let (l, r) = cmflow::necklace_bracket(&wa, &wb, &m);
                let mut rep = CheckReport::new(format!("necklace {{{wa}, {wb}}}"));
                rep.record((l - r).abs() <= 1e-9 * (1.0 + l.abs()), || format!("lhs {l}, rhs {r}"));
                return with_manifest(manifest, &[rep], json!({ "a": a, "b": b, "lhs": l, "rhs": r }));
            }
            let trials = trials.or(cfg.trials).unwrap_or(100);
            let reports = vec![cmflow::necklace_report(seed, trials, n, *maxlen), cmflow::symplectomorphism_report(seed, trials.min(50), n)];
            with_manifest(manifest, &reports, json!({ "n": n, "trials": trials, "maxlen": maxlen }))
        }
        Cmd::Trig { n, points, x, p } => {
            let n = size(*n, 3);
            if let (Some(x), Some(p)) = (x, p) {
                let pt = PhasePoint::new(f64_list(x)?, f64_list(p)?)?;
                let v = cmflow::trig_system(&pt)?;
                let mut rep = CheckReport::new("trig forms");
                rep.record((v.h_star - v.additive_form).abs() <= 1e-10 * (1.0 + v.h_star.abs()), || format!("{v:?}"));
                return with_manifest(manifest, &[rep], serde_json::to_value(&v).expect("serialize"));
            }
            let points = points.or(cfg.points).unwrap_or(50);
            let reports = vec![cmflow::trig_report(seed, points, n), cmflow::involution_report(seed, 20, n, 3)];
            with_manifest(manifest, &reports, json!({ "n": n, "points": points }))
        }
    }
}

fn eigen_sample_order(pt: &PhasePoint, t_max: f64, dt: f64, order: u32) -> calogero_core::Result<cmflow::TrajectorySample> {
    let steps = (t_max / dt).round().max(1.0) as usize;
    let times: Vec<f64> = (1..=steps).map(|k| t_max * k as f64 / steps as f64).collect();
    let mut states = vec![pt.clone()];
    states.extend(cmflow::eigen_trajectory(pt, &times, order)?);
    let integrals = states.iter().map(|s| cmflow::kks_pair(s).map(|m| m.integrals(s.n()))).collect::<calogero_core::Result<_>>()?;
    let h0 = states[0].hamiltonian();
    let energy_drift = states.iter().map(|s| (s.hamiltonian() - h0).abs()).fold(0.0, f64::max);
    let mut all_times = vec![0.0];
    all_times.extend(times);
    Ok(cmflow::TrajectorySample { times: all_times, states, integrals, energy_drift })
}

/// Rationals pass through; each distinct letter gets a distinct seeded value.
fn letters_to_rationals(tokens: &[&str], seed: u64) -> Res<Vec<Q>> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut assigned: Vec<(String, Q)> = Vec::new();
    let literal: Vec<Q> = tokens.iter().filter_map(|t| parse_q(t)).collect();
    let mut out = Vec::new();
    for t in tokens {
        if let Some(v) = parse_q(t) {
            out.push(v);
            continue;
        }
        if !t.chars().all(char::is_alphabetic) || t.is_empty() {
            return Err(usage(format!("`{t}` is neither a rational nor a letter")));
        }
        if let Some((_, v)) = assigned.iter().find(|(k, _)| k == t) {
            out.push(v.clone());
            continue;
        }
        let v = loop {
            let v = Q::new(rng.gen_range(-60i64..=60).into(), rng.gen_range(1i64..=7).into());
            if !literal.contains(&v) && !assigned.iter().any(|(_, u)| *u == v) {
                break v;
            }
        };
        assigned.push((t.to_string(), v.clone()));
        out.push(v);
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.paper_ref {
        for r in paper_refs(&cli.cmd) {
            println!("{r}");
        }
        return ExitCode::SUCCESS;
    }
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = args.iter().find(|a| !a.starts_with('-')).cloned().unwrap_or_default();
    START.get_or_init(Instant::now);
    let mut manifest = RunManifest::new(name, args, 0, VERSION);
    let outcome = run(&cli, &mut manifest);
    match outcome {
        Ok(o) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &o.body).map_err(|e| e.to_string()),
                None => match writeln!(std::io::stdout().lock(), "{}", o.body.trim_end()) {
                    Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.to_string()),
                    _ => Ok(()),
                },
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if o.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("one or more checks failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
