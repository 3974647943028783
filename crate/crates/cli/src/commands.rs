//! Subcommand execution and report rendering.

use serde::{Deserialize, Serialize};

use curvlab::catalog::{representatives, special_metric_loci, FamilyId, FamilySpec, LocusKind, SL2C_NOTE};
use curvlab::connection::{evaluate, CurvatureRecord};
use curvlab::flow::{integrate_flow, pure_type_ricci, FlowState, FlowTrace};
use curvlab::symmetry::{flatness_check, kahler_like_check, label, FlatnessReport, KahlerLikeReport};
use curvlab::verify::{theorem_suite, verify_appendix, Appendix, AppendixReport, SamplePlan, Scoreboard};
use curvlab::{build_metric, classify_metric, ConnectionSpec, MetricClass, MetricParams};

use crate::config::{CatalogAction, Command, Flags, FlowAction, Format, VerifySuite};
use crate::{Failure, UsageError};

/// Rendered output plus whether a verification failed.
pub struct Outcome {
    pub body: String,
    pub failed: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Self { body, failed: false }
    }
}

pub fn run(cmd: &Command, f: &Flags) -> Result<Outcome, Failure> {
    match cmd {
        Command::Catalog { action: CatalogAction::List } => Ok(Outcome::ok(catalog_list(f.format()))),
        Command::Curvature => curvature(f),
        Command::CheckKl => check_kl(f),
        Command::CheckFlat => check_flat(f),
        Command::Classify => classify(f),
        Command::Verify { suite: VerifySuite::Appendix { which } } => appendix(f, which.as_deref()),
        Command::Verify { suite: VerifySuite::Theorems } => theorems(f),
        Command::Flow { action: FlowAction::Run } => flow(f),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn metric_text(m: &MetricParams) -> String {
    curvlab::verify::metric_label(m)
}

// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct CatalogEntry {
    pub family: FamilyId,
    pub nilpotent: bool,
    pub params: Vec<String>,
    pub lie_algebras: Vec<String>,
    pub representatives: Vec<RepresentativeEntry>,
}

#[derive(Serialize, Deserialize)]
pub struct RepresentativeEntry {
    pub spec: FamilySpec,
    pub loci: Vec<curvlab::MetricLocus>,
}

fn catalog_list(format: Format) -> String {
    let reps = representatives();
    let entries: Vec<CatalogEntry> = FamilyId::ALL
        .into_iter()
        .map(|id| CatalogEntry {
            family: id,
            nilpotent: id.is_nilpotent(),
            params: id.params().iter().map(|p| format!("{} ({})", p.name, p.domain)).collect(),
            lie_algebras: id.lie_algebras().iter().map(|s| s.to_string()).collect(),
            representatives: reps
                .iter()
                .filter(|r| r.id == id)
                .map(|r| RepresentativeEntry { spec: r.clone(), loci: special_metric_loci(r) })
                .collect(),
        })
        .collect();
    match format {
        Format::Json => json(&entries),
        Format::Csv => csv_table(
            &["family", "nilpotent", "params", "lie_algebras"],
            entries.iter().map(|e| {
                vec![e.family.to_string(), e.nilpotent.to_string(), e.params.join("; "), e.lie_algebras.join(" ")]
            }),
        ),
        Format::Text => {
            let mut out = String::new();
            for e in &entries {
                let kind = if e.nilpotent { "nilpotent" } else { "solvable" };
                out += &format!("{} [{kind}] algebras: {}\n", e.family, e.lie_algebras.join(", "));
                if !e.params.is_empty() {
                    out += &format!("  params: {}\n", e.params.join(", "));
                }
                for r in &e.representatives {
                    out += &format!("  {}\n", r.spec.label());
                    for l in &r.loci {
                        let kind = match l.kind {
                            LocusKind::Kahler => "kahler",
                            LocusKind::Balanced => "balanced",
                            LocusKind::Pluriclosed => "pluriclosed",
                        };
                        let within = l.within.as_ref().map(|w| format!(" (within {w})")).unwrap_or_default();
                        out += &format!("    {kind:<12} {}{within}\n", l.constraint);
                    }
                }
                if e.family == FamilyId::Sl2c {
                    out += &format!("  note: {SL2C_NOTE}\n");
                }
            }
            out
        }
    }
}

// ---------------------------------------------------------------------------

struct Point {
    family: FamilySpec,
    metric: MetricParams,
    spec: ConnectionSpec,
    curvature: curvlab::CurvatureTensor,
}

fn point(f: &Flags) -> Result<Point, UsageError> {
    let family = f.family()?;
    let metric = f.metric()?;
    let spec = f.spec()?;
    let h = build_metric(&metric).map_err(|e| UsageError(e.to_string()))?;
    let curvature = evaluate(&spec, &h, &family.instantiate());
    Ok(Point { family, metric, spec, curvature })
}

fn header(p: &Point) -> String {
    format!("family: {}\nmetric: {}\nspec: {}\n", p.family.label(), metric_text(&p.metric), p.spec)
}

#[derive(Serialize, Deserialize)]
pub struct CurvatureReport {
    pub family: FamilySpec,
    pub metric: MetricParams,
    pub spec: ConnectionSpec,
    pub components: Vec<CurvatureRecord>,
}

fn record_rows(records: &[CurvatureRecord], prefix: &str) -> Vec<Vec<String>> {
    records.iter().map(|r| vec![label(prefix, r), r.value.to_string()]).collect()
}

fn curvature(f: &Flags) -> Result<Outcome, Failure> {
    let p = point(f)?;
    let report = CurvatureReport {
        components: p.curvature.records(),
        family: p.family.clone(),
        metric: p.metric.clone(),
        spec: p.spec.clone(),
    };
    let body = match f.format() {
        Format::Json => json(&report),
        Format::Csv => csv_table(&["component", "value"], record_rows(&report.components, "R")),
        Format::Text => {
            let mut out = header(&p);
            out += &format!("nonzero components: {}\n", report.components.len());
            for r in &report.components {
                out += &format!("{} = {}\n", label("R", r), r.value);
            }
            out
        }
    };
    Ok(Outcome::ok(body))
}

#[derive(Serialize, Deserialize)]
pub struct KahlerLikeOutput {
    pub family: FamilySpec,
    pub metric: MetricParams,
    pub spec: ConnectionSpec,
    pub report: KahlerLikeReport,
}

fn check_kl(f: &Flags) -> Result<Outcome, Failure> {
    let p = point(f)?;
    let report = kahler_like_check(&p.curvature);
    let rows = || {
        let mut rows = record_rows(&report.bianchi_residues, "B");
        rows.extend(record_rows(&report.type_residues, "R"));
        rows
    };
    let body = match f.format() {
        Format::Json => json(&KahlerLikeOutput {
            family: p.family.clone(),
            metric: p.metric.clone(),
            spec: p.spec.clone(),
            report: report.clone(),
        }),
        Format::Csv => csv_table(&["component", "value"], rows()),
        Format::Text => {
            let mut out = header(&p);
            out += &format!("kahler-like: {}\n", report.verdict);
            out += &format!("type residues: {}\nB residues: {}\n", report.type_count, report.bianchi_count);
            let all = rows();
            if let Some(w) = all.first() {
                out += &format!("witness: {} = {}\n", w[0], w[1]);
            }
            for r in all.iter().skip(1) {
                out += &format!("  {} = {}\n", r[0], r[1]);
            }
            out
        }
    };
    Ok(Outcome::ok(body))
}

#[derive(Serialize, Deserialize)]
pub struct FlatnessOutput {
    pub family: FamilySpec,
    pub metric: MetricParams,
    pub spec: ConnectionSpec,
    pub report: FlatnessReport,
}

fn check_flat(f: &Flags) -> Result<Outcome, Failure> {
    let p = point(f)?;
    let report = flatness_check(&p.curvature);
    let body = match f.format() {
        Format::Json => json(&FlatnessOutput {
            family: p.family.clone(),
            metric: p.metric.clone(),
            spec: p.spec.clone(),
            report: report.clone(),
        }),
        Format::Csv => csv_table(
            &["flat", "witness", "value"],
            [match &report.witness {
                Some(w) => vec!["false".into(), label("R", w), w.value.to_string()],
                None => vec!["true".into(), String::new(), String::new()],
            }],
        ),
        Format::Text => {
            let mut out = header(&p);
            out += &format!("flat: {}\n", report.flat);
            if let Some(w) = &report.witness {
                out += &format!("witness: {} = {}\n", label("R", w), w.value);
            }
            out
        }
    };
    Ok(Outcome::ok(body))
}

#[derive(Serialize, Deserialize)]
pub struct ClassifyOutput {
    pub family: FamilySpec,
    pub metric: MetricParams,
    pub class: MetricClass,
    pub loci: Vec<LocusMembership>,
}

#[derive(Serialize, Deserialize)]
pub struct LocusMembership {
    pub locus: curvlab::MetricLocus,
    pub contains: bool,
    pub applies: bool,
}

fn classify(f: &Flags) -> Result<Outcome, Failure> {
    let family = f.family()?;
    let metric = f.metric()?;
    let h = build_metric(&metric).map_err(|e| UsageError(e.to_string()))?;
    let class = classify_metric(&h, &family.instantiate());
    let loci = special_metric_loci(&family)
        .into_iter()
        .map(|l| LocusMembership {
            contains: l.contains(&family, &metric),
            applies: l.applies_to(&family, &metric),
            locus: l,
        })
        .collect();
    let out = ClassifyOutput { family, metric, class, loci };
    let body = match f.format() {
        Format::Json => json(&out),
        Format::Csv => csv_table(
            &["kahler", "balanced", "pluriclosed"],
            [vec![class.kahler.to_string(), class.balanced.to_string(), class.pluriclosed.to_string()]],
        ),
        Format::Text => format!(
            "family: {}\nmetric: {}\nkahler: {}\nbalanced: {}\npluriclosed: {}\n",
            out.family.label(),
            metric_text(&out.metric),
            class.kahler,
            class.balanced,
            class.pluriclosed
        ),
    };
    Ok(Outcome::ok(body))
}

// ---------------------------------------------------------------------------

fn plan(f: &Flags) -> SamplePlan {
    let mut p = SamplePlan::new(f.seed.unwrap_or(0));
    if let Some(n) = f.points {
        p.points_per_case = n;
    }
    p
}

fn appendix(f: &Flags, which: Option<&str>) -> Result<Outcome, Failure> {
    let which: Vec<Appendix> = match which {
        None | Some("all") => vec![Appendix::A, Appendix::B, Appendix::C],
        Some(w) => vec![Flags::appendix(w)?],
    };
    let mut plan = plan(f);
    if f.points.is_none() {
        plan.points_per_case = 5;
    }
    if plan.points_per_case == 0 {
        return Err(UsageError("--points must be at least 1".into()).into());
    }
    let reports: Vec<AppendixReport> =
        which.iter().map(|w| verify_appendix(*w, &plan)).collect::<Result<_, _>>().map_err(Failure::Runtime)?;
    let failed = reports.iter().any(|r| !r.pass());
    let body = match f.format() {
        Format::Json => json(&reports),
        Format::Csv => csv_table(
            &["appendix", "family", "metric", "spec", "component", "expected", "observed", "pass"],
            reports.iter().flat_map(|r| {
                r.points.iter().flat_map(move |p| {
                    p.checks.iter().map(move |c| {
                        vec![
                            format!("{:?}", r.appendix),
                            p.family.clone(),
                            metric_text(&p.metric),
                            p.spec.to_string(),
                            c.label.clone(),
                            c.expected.to_string(),
                            c.observed.to_string(),
                            c.ok.to_string(),
                        ]
                    })
                })
            }),
        ),
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                let verdict = if r.pass() { "PASS" } else { "FAIL" };
                out += &format!(
                    "{verdict} appendix {:?}: {} points x {} components\n",
                    r.appendix,
                    r.points.len(),
                    r.entries_per_point
                );
                if let Some((p, c)) = r.first_mismatch() {
                    out += &format!(
                        "  {} at {} {} {}: expected {}, observed {}\n",
                        c.label,
                        p.family,
                        metric_text(&p.metric),
                        p.spec,
                        c.expected,
                        c.observed
                    );
                }
            }
            out
        }
    };
    Ok(Outcome { body, failed })
}

fn theorems(f: &Flags) -> Result<Outcome, Failure> {
    let plan = plan(f);
    if plan.points_per_case == 0 {
        return Err(UsageError("--points must be at least 1".into()).into());
    }
    let sb: Scoreboard = theorem_suite(&plan).map_err(Failure::Runtime)?;
    let body = match f.format() {
        Format::Json => json(&sb),
        Format::Csv => sb.to_csv(),
        Format::Text => {
            let mut out = String::new();
            for c in &sb.cases {
                let v = if c.pass { "PASS" } else { "FAIL" };
                out += &format!("{v} {:<34} {} [{}] {}: {}", c.id, c.family, c.metric, c.spec, c.observed);
                if !c.witness.is_empty() {
                    out += &format!("; {}", c.witness);
                }
                out.push('\n');
            }
            for c in &sb.conjectures {
                let v = if c.violations == 0 { "PASS" } else { "FAIL" };
                out += &format!("{v} {} ({} configurations", c.name, c.hypotheses);
                match &c.first_violation {
                    Some(w) => out += &format!(", {} violations, first: {w})\n", c.violations),
                    None => out += ")\n",
                }
            }
            let passed = sb.cases.iter().filter(|c| c.pass).count();
            out += &format!("cases: {passed}/{} passed, seed {}\n", sb.cases.len(), sb.plan.seed);
            out
        }
    };
    Ok(Outcome { body, failed: !sb.pass() })
}

// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct FlowOutput {
    pub family: FamilySpec,
    pub metric: MetricParams,
    pub horizon: f64,
    pub step: f64,
    /// Exact nonzero pure-type LC Ricci entries at t = 0.
    pub initial_pure_type_ricci: Vec<(String, curvlab::GaussianRational)>,
    pub lc_kahler_like: bool,
    pub trace: FlowTrace,
}

fn flow(f: &Flags) -> Result<Outcome, Failure> {
    let family = f.family()?;
    let metric = f.metric()?;
    let horizon = f.horizon.unwrap_or(1.0);
    let step = f.step.unwrap_or(0.01);
    if !(horizon > 0.0 && step > 0.0) {
        return Err(UsageError(format!("flow needs horizon > 0 and step > 0 (got {horizon}, {step})")).into());
    }
    let lie = family.instantiate();
    let h = build_metric(&metric).map_err(|e| UsageError(e.to_string()))?;
    let lc = evaluate(&ConnectionSpec::lc(), &h, &lie);
    let state = FlowState::new(&h, &lie);
    let trace = integrate_flow(&state, horizon, step).map_err(|e| UsageError(e.to_string()))?;
    let out = FlowOutput {
        initial_pure_type_ricci: pure_type_ricci(&h, &lie),
        lc_kahler_like: kahler_like_check(&lc).verdict,
        family,
        metric,
        horizon,
        step,
        trace,
    };
    let body = match f.format() {
        Format::Json => json(&out),
        Format::Csv => out.trace.to_csv(),
        Format::Text => {
            let last = out.trace.samples.last().expect("trace has the initial sample");
            let mut s = format!(
                "family: {}\nmetric: {}\nlc kahler-like: {}\n",
                out.family.label(),
                metric_text(&out.metric),
                out.lc_kahler_like
            );
            if out.initial_pure_type_ricci.is_empty() {
                s += "pure-type ricci at t=0: 0\n";
            } else {
                for (l, v) in &out.initial_pure_type_ricci {
                    s += &format!("pure-type ricci at t=0: {l} = {v}\n");
                }
            }
            s += &format!(
                "steps: {}\nfinal t: {}\nmax deviation: {:e}\nmax drift: {:e}\nfinal ricci norm: {:e}\n",
                out.trace.samples.len() - 1,
                last.t,
                out.trace.max_deviation(),
                out.trace.drift(),
                last.ricci_norm
            );
            if let Some(h) = &out.trace.halt {
                s += &format!("halted: {h}\n");
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}
