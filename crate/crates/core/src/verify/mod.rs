//! The verification suite: every acceptance criterion as a named check,
//! run at a `quick` or `full` profile with a single seed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cherednik::{associativity_report, character_report, flatness_report, grading_report, h_eigen_report, Cherednik, VermaModule, WRep};
use crate::cmflow;
use crate::coxeter::{parse_group, ClassParams, ReflectionGroup, VarLayout};
use crate::dunkl::{self, commutativity_report, x_commutator_report, Dunkl};
use crate::error::{Error, Result};
use crate::exact::{q, Field, Poly, RationalFunction, Q};
use crate::report::CheckReport;
use crate::typea;
use crate::with_group;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "quick" => Ok(Self::Quick),
            "full" => Ok(Self::Full),
            _ => Err(Error::InvalidParameters(format!("unknown profile `{s}` (quick|full)"))),
        }
    }
}

impl Profile {
    fn pick<T>(self, quick: T, full: T) -> T {
        match self {
            Self::Quick => quick,
            Self::Full => full,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub profile: Profile,
    pub seed: u64,
}

pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    /// The statement the check exercises.
    pub anchor: &'static str,
    run: fn(&Settings) -> Result<Vec<CheckReport>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub criterion: u8,
    pub anchor: String,
    pub passed: bool,
    pub instances: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub profile: Profile,
    pub seed: u64,
    pub passed: bool,
    /// Sorted by check name.
    pub checks: Vec<CheckOutcome>,
}

const DUNKL_GROUPS: [&str; 6] = ["Z2", "S3", "S4", "B2", "I2:3", "I2:5"];
const ALL_GROUPS: [&str; 9] = ["Z2", "S2", "S3", "S4", "B2", "B3", "I2:3", "I2:5", "I2:6"];

fn symbolic_dunkl_group<F: Field>(w: &ReflectionGroup<F>, deg: impl Fn(&ReflectionGroup<F>) -> u32, comm: bool) -> CheckReport {
    let lay = VarLayout::quantum(w.dim(), w.num_reflection_classes());
    let d = Dunkl::new(w, &ClassParams::symbolic(w, &lay), lay.nvars());
    if comm {
        commutativity_report(&d, deg(w))
    } else {
        x_commutator_report(&d, deg(w))
    }
}

fn c1_dunkl_commutativity(s: &Settings) -> Result<Vec<CheckReport>> {
    let start = Instant::now();
    let mut out = Vec::new();
    for g in DUNKL_GROUPS {
        let any = parse_group(g)?;
        let top = s.profile.pick(3, 5);
        out.push(with_group!(&any, w => symbolic_dunkl_group(w, |w| if w.dim() >= 3 && w.order() == 24 { top - 1 } else { top }, true)));
    }
    let mut timing = CheckReport::new("runtime under 120 s");
    let secs = start.elapsed().as_secs_f64();
    timing.record(secs < 120.0, || format!("{secs:.1} s"));
    out.push(timing);
    Ok(out)
}

fn c2_commutation_relation(s: &Settings) -> Result<Vec<CheckReport>> {
    DUNKL_GROUPS
        .iter()
        .map(|g| {
            let any = parse_group(g)?;
            Ok(with_group!(&any, w => symbolic_dunkl_group(w, |_| s.profile.pick(2, 4), false)))
        })
        .collect()
}

fn c3_heckman(s: &Settings) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for w in [ReflectionGroup::<Q>::symmetric(3)?, ReflectionGroup::hyperoctahedral(2)?] {
        let lay = VarLayout::quantum(w.dim(), w.num_reflection_classes());
        out.push(dunkl::heckman_report(&w, &ClassParams::symbolic(&w, &lay), lay.nvars(), s.profile.pick(4, 6)));
    }
    Ok(out)
}

fn c4_gauge(s: &Settings) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for w in [ReflectionGroup::<Q>::z2(), ReflectionGroup::symmetric(3)?] {
        for c in [1, 2] {
            out.push(dunkl::gauge_report(&w, &[c], s.profile.pick(3, 4)));
        }
        out.push(dunkl::gauge_symbolic_report(&w));
    }
    let mut harmonic = CheckReport::new("Δδ = 0");
    for g in ALL_GROUPS {
        let any = parse_group(g)?;
        harmonic.record(with_group!(&any, w => w.laplacian_kills_discriminant()), || g.to_string());
    }
    out.push(harmonic);
    Ok(out)
}

fn c5_quantum_cm(_: &Settings) -> Result<Vec<CheckReport>> {
    let mut rep = CheckReport::new("OP operator of S_n is the CM Hamiltonian");
    for n in 2..=3 {
        let w = ReflectionGroup::<Q>::symmetric(n)?;
        let lay = VarLayout::quantum(n, 1);
        let nv = lay.nvars();
        let c = ClassParams::symbolic(&w, &lay);
        let from_dunkl = dunkl::op_from_dunkl(&w, &c, nv)?;
        let k = Poly::var(nv, lay.param(0));
        let cm = dunkl::calogero_moser_hamiltonian(&w, nv, &k);
        rep.record(from_dunkl == cm, || format!("n = {n}: restricted Dunkl Laplacian"));
        rep.record(dunkl::op_operator(&w, &c, nv) == cm, || format!("n = {n}: OP operator"));
    }
    Ok(vec![rep])
}

/// `p² − Σ_s c_s² (α_s, α_s) / α_s²`, assembled from the root data.
fn classical_closed_form(w: &ReflectionGroup<Q>, c: &ClassParams<Q>, lay: &VarLayout) -> RationalFunction<Q> {
    let n = lay.nvars();
    let roots = w.root_forms(n);
    let l = w.dim();
    let mut kinetic = Poly::zero(n);
    for i in 0..l {
        for j in 0..l {
            kinetic.add_scaled(&(&Poly::var(n, lay.p(i)) * &Poly::var(n, lay.p(j))), &w.gram_inv()[i][j]);
        }
    }
    let mut out = RationalFunction::from_poly(kinetic, roots.clone());
    for s in 0..w.reflections().len() {
        let num = c.weight(w, s).pow(2).scale(&w.root_norm(s));
        out = out.sub(&RationalFunction::from_poly(num, roots.clone()).div_root_pow(s, 2));
    }
    out
}

fn c6_classical(_: &Settings) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    let mut closed = CheckReport::new("θ_c(L̄⁰) closed form");
    for w in [ReflectionGroup::<Q>::z2(), ReflectionGroup::symmetric(3)?] {
        let lay = VarLayout::classical(w.dim(), w.num_reflection_classes());
        let c = ClassParams::symbolic(&w, &lay);
        out.push(dunkl::classical_report(&w, &c, &lay));
        let th = dunkl::theta(&w, &c, &lay, &dunkl::classical_lbar(&w, &c, &lay));
        closed.record(th == classical_closed_form(&w, &c, &lay), || w.name());
    }
    out.push(closed);
    Ok(out)
}

fn c7_pbw(s: &Settings) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for w in [ReflectionGroup::<Q>::z2(), ReflectionGroup::symmetric(3)?] {
        let h = Cherednik::new(&w);
        out.push(flatness_report(&h, 6));
        out.push(associativity_report(&h, s.seed, s.profile.pick(40, 200), 6));
    }
    Ok(out)
}

fn c8_grading(s: &Settings) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for g in ["Z2", "S3", "B2"] {
        let any = parse_group(g)?;
        out.push(with_group!(&any, w => grading_report(&Cherednik::new(w))));
    }
    let w = ReflectionGroup::<Q>::symmetric(3)?;
    let d = s.profile.pick(2, 4);
    for t in [WRep::trivial(&w), WRep::sign(&w)] {
        out.push(h_eigen_report(&VermaModule::new(&w, t, d), d)?);
    }
    Ok(out)
}

fn c9_verma_characters(s: &Settings) -> Result<Vec<CheckReport>> {
    let w = ReflectionGroup::<Q>::symmetric(3)?;
    let m = VermaModule::new(&w, WRep::trivial(&w), s.profile.pick(6, 10));
    Ok(vec![character_report(&m)])
}

fn c10_singular(_: &Settings) -> Result<Vec<CheckReport>> {
    [(2, 1), (2, 3), (3, 1), (3, 2), (4, 3)]
        .iter()
        .map(|&(n, r)| typea::singular_report(&typea::singular_vectors(n, r)?))
        .collect()
}

fn c11_finite_dimension(s: &Settings) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    let cases: &[(usize, usize)] = s.profile.pick(&[(2, 3), (3, 2)], &[(2, 3), (3, 2), (3, 4)]);
    for &(n, r) in cases {
        let qs = typea::QuotientSlices::compute(n, r, 4 * r as u32)?;
        let mut dim = CheckReport::new(format!("dim = r^(n−1) n={n} r={r}"));
        dim.record(qs.total_dim() == r.pow(n as u32 - 1), || format!("{}", qs.total_dim()));
        out.push(dim);
        out.push(typea::quotient_report(&qs)?);
        out.push(typea::frobenius_check(&qs));
    }
    Ok(out)
}

fn c12_support(s: &Settings) -> Result<Vec<CheckReport>> {
    let (n, r) = (4, 2);
    let fam = typea::singular_vectors(n, r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let draw_distinct = |k: usize, rng: &mut ChaCha8Rng| -> Vec<Q> {
        let mut vals: Vec<Q> = Vec::new();
        while vals.len() < k {
            let v = q(rng.gen_range(-40..=40), rng.gen_range(1..=6));
            if !vals.contains(&v) {
                vals.push(v);
            }
        }
        vals
    };
    let count = s.profile.pick(8, 20);
    let mut on = CheckReport::new("vanishing on (a,a,b,b)");
    let mut generic = CheckReport::new("non-vanishing at generic points");
    let mut triple = CheckReport::new("non-vanishing on (a,a,a,b)");
    for _ in 0..count {
        let ab = draw_distinct(2, &mut rng);
        let mut p = vec![ab[0].clone(), ab[0].clone(), ab[1].clone(), ab[1].clone()];
        p.shuffle(&mut rng);
        on.record(fam.vanishes_at(&p), || format!("{p:?}"));
        let p = draw_distinct(4, &mut rng);
        generic.record(!fam.vanishes_at(&p), || format!("{p:?}"));
        let ab = draw_distinct(2, &mut rng);
        let mut p = vec![ab[0].clone(), ab[0].clone(), ab[0].clone(), ab[1].clone()];
        p.shuffle(&mut rng);
        triple.record(!fam.vanishes_at(&p), || format!("{p:?}"));
    }
    Ok(vec![on, generic, triple])
}

fn c13_representations(s: &Settings) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let mut out = Vec::new();
    let trials = s.profile.pick(1, 3);
    for n in 2..=3 {
        for _ in 0..trials {
            let mut lambda: Vec<Q> = Vec::new();
            while lambda.len() < n {
                let v = q(rng.gen_range(-20..=20), rng.gen_range(1..=4));
                if !lambda.contains(&v) {
                    lambda.push(v);
                }
            }
            let mu: Vec<Q> = (0..n).map(|_| q(rng.gen_range(-20..=20), rng.gen_range(1..=4))).collect();
            let rep = typea::orbit_representation(n, &lambda, &mu, &q(1, 1))?;
            out.push(typea::orbit_report(&rep, s.seed, 10)?);
            let cm = typea::cm_point_from_rep(&rep)?;
            let mut point = CheckReport::new(format!("CM point n={n}"));
            point.record(cm.matches_closed_form, || "closed-form matrices".into());
            point.record(cm.restriction_consistent, || "restriction".into());
            point.record(cm.rank_defect == 1, || format!("rank(XY − YX + 1) = {}", cm.rank_defect));
            out.push(point);
        }
    }
    Ok(out)
}

fn c14_flow(s: &Settings) -> Result<Vec<CheckReport>> {
    let start = Instant::now();
    let rep = cmflow::flow_report(s.seed, s.profile.pick(3, 10), 3, 1.0, 1e-3);
    let mut timing = CheckReport::new("runtime under 30 s");
    let secs = start.elapsed().as_secs_f64();
    timing.record(secs < 30.0, || format!("{secs:.1} s"));
    Ok(vec![rep, timing])
}

fn c15_necklace(s: &Settings) -> Result<Vec<CheckReport>> {
    Ok(vec![cmflow::necklace_report(s.seed, s.profile.pick(20, 100), 3, 3)])
}

fn c16_symplectomorphism(s: &Settings) -> Result<Vec<CheckReport>> {
    Ok(vec![cmflow::symplectomorphism_report(s.seed, s.profile.pick(10, 50), 3)])
}

fn c17_trigonometric(s: &Settings) -> Result<Vec<CheckReport>> {
    Ok(vec![cmflow::trig_report(s.seed, s.profile.pick(10, 50), 3), cmflow::involution_report(s.seed, s.profile.pick(5, 20), 3, 3)])
}

pub fn criteria() -> Vec<Criterion> {
    macro_rules! c {
        ($id:expr, $name:expr, $anchor:expr, $run:expr) => {
            Criterion { id: $id, name: $name, anchor: $anchor, run: $run }
        };
    }
    vec![
        c!(1, "dunkl-commutativity", "Dunkl operators commute", c1_dunkl_commutativity),
        c!(2, "dunkl-x-commutator", "commutation of Dunkl operators with coordinates", c2_commutation_relation),
        c!(3, "heckman-factorization", "m(Σ D²) = L̄ on invariants", c3_heckman),
        c!(4, "gauge-identity", "conjugation by δ_c = Π α_s^{c_s}; harmonicity of δ", c4_gauge),
        c!(5, "quantum-cm-hamiltonian", "quantum Calogero–Moser Hamiltonian from Dunkl operators", c5_quantum_cm),
        c!(6, "classical-op-identity", "classical Olshanetsky–Perelomov Hamiltonian", c6_classical),
        c!(7, "pbw", "PBW theorem for H_{t,c}", c7_pbw),
        c!(8, "grading-element", "grading element and sl2 triple", c8_grading),
        c!(9, "verma-characters", "characters of standard modules", c9_verma_characters),
        c!(10, "singular-vectors", "Dunkl's singular vectors at k = r/n", c10_singular),
        c!(11, "finite-dimension", "finite-dimensional quotient M_k/I_k of dimension r^(n−1)", c11_finite_dimension),
        c!(12, "support", "support of M_k/I_k", c12_support),
        c!(13, "h0c-representations", "representations of H_{0,c} and Calogero–Moser points", c13_representations),
        c!(14, "flow-equivalence", "eigenvalues of X_0 + 2tY_0 solve the CM system", c14_flow),
        c!(15, "necklace-bracket", "necklace bracket formula", c15_necklace),
        c!(16, "symplectomorphism", "KKS map is symplectic", c16_symplectomorphism),
        c!(17, "trigonometric-system", "trigonometric CM system and involutivity", c17_trigonometric),
    ]
}

/// Run one criterion; errors and panics become failures.
pub fn run_criterion(c: &Criterion, s: &Settings) -> CheckOutcome {
    let res = catch_unwind(AssertUnwindSafe(|| (c.run)(s)));
    let mut total = CheckReport::new(c.name);
    match res {
        Ok(Ok(reports)) => reports.into_iter().for_each(|r| total.merge(r)),
        Ok(Err(e)) => total.fail(format!("error: {e}")),
        Err(p) => {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default();
            total.fail(format!("panic: {msg}"));
        }
    }
    CheckOutcome {
        check: c.name.to_string(),
        criterion: c.id,
        anchor: c.anchor.to_string(),
        passed: total.passed(),
        instances: total.instances,
        failures: total.failures,
        details: total.details,
    }
}

/// Every criterion, in parallel, with the report sorted by check name.
pub fn verify_all(s: &Settings) -> VerifyReport {
    let all = criteria();
    let mut checks: Vec<CheckOutcome> = all.par_iter().map(|c| run_criterion(c, s)).collect();
    checks.sort_by(|a, b| a.check.cmp(&b.check));
    VerifyReport { profile: s.profile, seed: s.seed, passed: checks.iter().all(|c| c.passed), checks }
}

/// Provenance of one run: what was invoked, with which seed, and the outcome per check.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub arguments: Vec<String>,
    pub seed: u64,
    pub version: String,
    pub wall_seconds: f64,
    pub checks: std::collections::BTreeMap<String, bool>,
}

impl RunManifest {
    pub fn new(command: impl Into<String>, arguments: Vec<String>, seed: u64, version: impl Into<String>) -> Self {
        Self { command: command.into(), arguments, seed, version: version.into(), wall_seconds: 0.0, checks: Default::default() }
    }

    pub fn record(&mut self, report: &CheckReport) {
        self.checks.insert(report.check.clone(), report.passed());
    }

    pub fn passed(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }
}

/// Pretty JSON with object keys in sorted order.
pub fn canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Serialization(e.to_string()))?;
    serde_json::to_string_pretty(&v).map_err(|e| Error::Serialization(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_unique_and_enough() {
        let cs = criteria();
        assert!(cs.len() >= 15);
        let mut names: Vec<_> = cs.iter().map(|c| c.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), cs.len());
        assert_eq!("Quick".parse::<Profile>().unwrap(), Profile::Quick);
        assert!("slow".parse::<Profile>().is_err());
    }

    #[test]
    fn quick_exact_subset() {
        let s = Settings { profile: Profile::Quick, seed: 1 };
        for c in criteria().iter().filter(|c| [5, 10, 12, 16].contains(&c.id)) {
            let o = run_criterion(c, &s);
            assert!(o.passed, "{o:?}");
        }
    }

    #[test]
    fn stable_key_order() {
        let r = CheckReport::new("z");
        let text = canonical_json(&r).unwrap();
        let keys: Vec<_> = ["check", "failures", "instances"].iter().map(|k| text.find(k).unwrap()).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        let mut m = RunManifest::new("verify", vec![], 3, "0");
        m.record(&r);
        assert!(!m.passed());
    }

    #[test]
    fn failures_are_captured() {
        fn boom(_: &Settings) -> Result<Vec<CheckReport>> {
            panic!("deliberate")
        }
        fn err(_: &Settings) -> Result<Vec<CheckReport>> {
            Err(Error::DegenerateSpectrum)
        }
        let s = Settings { profile: Profile::Quick, seed: 0 };
        for run in [boom as fn(&Settings) -> Result<Vec<CheckReport>>, err] {
            let o = run_criterion(&Criterion { id: 0, name: "x", anchor: "", run }, &s);
            assert!(!o.passed && o.failures == 1);
        }
    }
}
