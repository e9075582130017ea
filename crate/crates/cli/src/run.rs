use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use classleak::{
    auroc_from_leakage, auroc_rank_oracle, binormal_family, bounded_risk_region_check, brier_score,
    capped_admission_point, compare_dominance, default_dominance_epsilon, key_value_text,
    kl_divergence_from_leakage, leakage_table, min_risk_point, pr_curve, reliability_bins,
    roc_curve, structured_text, AdmissionCap, AdmissionPoint, BinormalModel, BoundaryLine,
    BoundedRisk, ClassPriors, CurveKind, CurveTable, DominanceSummary, LabeledScores, LeakageCurve,
    MetricsReport, PairCount, ReliabilityBin, RiskPoint,
};
use serde::Serialize;

use crate::args::{
    CalibrationArgs, Command, CurveArgs, DominanceArgs, FamilyArgs, Format, MetricsArgs,
    OperateArgs, Output, PrArgs, Source, SourceArgs,
};
use crate::plot;

#[derive(Debug)]
pub enum CliError {
    /// A library error, with the input file it came from when relevant.
    Core(classleak::Error, Option<PathBuf>),
    Io(PathBuf, io::Error),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(classleak::Error::Parse { line, message }, Some(path)) => {
                write!(f, "error[Parse]: {}:{line}: {message}", path.display())
            }
            CliError::Core(e, Some(path)) => {
                write!(f, "error[{}]: {}: {e}", e.name(), path.display())
            }
            CliError::Core(e, None) => write!(f, "error[{}]: {e}", e.name()),
            CliError::Io(path, e) => write!(f, "error[Io]: {}: {e}", path.display()),
            CliError::Usage(msg) => write!(f, "error[Usage]: {msg}"),
        }
    }
}

impl From<classleak::Error> for CliError {
    fn from(e: classleak::Error) -> Self {
        CliError::Core(e, None)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Metrics(a) => metrics(a),
        Command::Roc(a) => curve_table(a, CurveKind::Roc),
        Command::Leakage(a) => curve_table(a, CurveKind::Leakage),
        Command::Pr(a) => pr(a),
        Command::Auroc(a) => auroc(a),
        Command::Kl(a) => kl(a),
        Command::Dominance(a) => dominance(a),
        Command::Operate(a) => operate(a),
        Command::BinormalFamily(a) => family(a),
        Command::Calibration(a) => calibration(a),
    }
}

fn read_scores(path: &Path) -> Result<LabeledScores> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    LabeledScores::parse_csv(&text).map_err(|e| CliError::Core(e, Some(path.to_path_buf())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => write_file(p, text),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(PathBuf::from("<stdout>"), e)),
    }
}

fn render<T: Serialize>(report: &T, format: Format) -> Result<String> {
    Ok(match format {
        Format::Table => key_value_text(report)?,
        Format::Structured => structured_text(report)?,
    })
}

fn emit_report<T: Serialize>(report: &T, out: &Output) -> Result<()> {
    emit(out.output.as_deref(), &render(report, out.format)?)
}

enum Loaded {
    Empirical(LabeledScores),
    Binormal(BinormalModel),
}

impl Loaded {
    fn curve(&self) -> Result<LeakageCurve> {
        Ok(match self {
            Loaded::Empirical(d) => LeakageCurve::from_data(d)?,
            Loaded::Binormal(m) => LeakageCurve::binormal(*m),
        })
    }

    fn data(&self) -> Option<&LabeledScores> {
        match self {
            Loaded::Empirical(d) => Some(d),
            Loaded::Binormal(_) => None,
        }
    }

    fn model(&self) -> Option<&BinormalModel> {
        match self {
            Loaded::Binormal(m) => Some(m),
            Loaded::Empirical(_) => None,
        }
    }

    fn label(&self) -> String {
        match self {
            Loaded::Empirical(_) => "empirical".into(),
            Loaded::Binormal(m) => format!("alpha={} b={}", m.alpha(), m.b()),
        }
    }

    /// Priors from an override, else from the data; binormal sources need
    /// the override.
    fn priors(&self, pi_p: Option<f64>) -> Result<ClassPriors> {
        match (pi_p, self) {
            (Some(p), _) => Ok(ClassPriors::new(p)?),
            (None, Loaded::Empirical(d)) => Ok(ClassPriors::estimate(d)),
            (None, Loaded::Binormal(_)) => Err(usage("--pi-p is required for binormal sources")),
        }
    }
}

fn load(source: &Source) -> Result<Loaded> {
    match (&source.input, source.alphas.as_slice(), source.bs.as_slice()) {
        (Some(path), [], []) => Ok(Loaded::Empirical(read_scores(path)?)),
        (None, [alpha], [b]) => Ok(Loaded::Binormal(BinormalModel::from_alpha_b(*alpha, *b)?)),
        (None, [], []) => Err(usage("give either --input or a single --alphas/--bs pair")),
        _ => Err(usage(
            "this command takes one model: --input, or exactly one value each for --alphas and --bs \
             (use binormal-family for sweeps)",
        )),
    }
}

fn metrics(a: MetricsArgs) -> Result<()> {
    let data = read_scores(&a.input)?;
    let priors = a.pi_p.map(ClassPriors::new).transpose()?;
    let report = MetricsReport::compute(&data, a.tau, priors, a.beta)?;
    emit_report(&report, &a.out)
}

fn curve_table(a: CurveArgs, kind: CurveKind) -> Result<()> {
    let loaded = load(&a.source)?;
    let curve = loaded.curve()?;
    let table = match kind {
        CurveKind::Leakage => leakage_table(&curve, a.source.grid)?,
        _ => roc_curve(&curve, a.source.grid)?,
    };
    emit(a.output.as_deref(), &table.to_csv())?;
    if let Some(svg) = &a.svg {
        let title = match kind {
            CurveKind::Leakage => "Leakage function",
            _ => "ROC curve",
        };
        plot::emit(svg, &[(loaded.label(), &table)], title);
    }
    Ok(())
}

#[derive(Serialize)]
struct ManifestEntry {
    file: String,
    kind: CurveKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pi_p: Option<f64>,
}

#[derive(Serialize)]
struct Manifest {
    grid: usize,
    tables: Vec<ManifestEntry>,
}

fn write_manifest(dir: &Path, manifest: &Manifest) -> Result<()> {
    write_file(&dir.join("manifest.json"), &structured_text(manifest)?)
}

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.to_path_buf(), e))
}

fn check_unique(values: &[f64], flag: &str) -> Result<()> {
    for (i, v) in values.iter().enumerate() {
        if values[..i].contains(v) {
            return Err(usage(format!("duplicate value {v} in {flag}")));
        }
    }
    Ok(())
}

fn pr(a: PrArgs) -> Result<()> {
    let loaded = load(&a.source)?;
    let curve = loaded.curve()?;
    if a.pi_ps.is_empty() {
        let priors = loaded.priors(a.pi_p)?;
        let table = pr_curve(&curve, priors, a.source.grid)?;
        emit(a.output.as_deref(), &table.to_csv())?;
        if let Some(svg) = &a.svg {
            plot::emit(
                svg,
                &[(format!("pi_p={}", priors.pi_p()), &table)],
                "Precision-recall",
            );
        }
        return Ok(());
    }

    let dir = a
        .output
        .as_deref()
        .ok_or_else(|| usage("--output must name a directory when --pi-ps is given"))?;
    check_unique(&a.pi_ps, "--pi-ps")?;
    let tables = a
        .pi_ps
        .iter()
        .map(|&p| Ok((p, pr_curve(&curve, ClassPriors::new(p)?, a.source.grid)?)))
        .collect::<Result<Vec<(f64, CurveTable)>>>()?;
    ensure_dir(dir)?;
    let mut manifest = Manifest {
        grid: a.source.grid,
        tables: Vec::new(),
    };
    for (p, table) in &tables {
        let file = format!("pr_pi{p}.csv");
        write_file(&dir.join(&file), &table.to_csv())?;
        manifest.tables.push(ManifestEntry {
            file,
            kind: CurveKind::Pr,
            alpha: loaded.model().map(|m| m.alpha()),
            b: loaded.model().map(|m| m.b()),
            pi_p: Some(*p),
        });
    }
    write_manifest(dir, &manifest)?;
    if let Some(svg) = &a.svg {
        let series: Vec<(String, &CurveTable)> = tables
            .iter()
            .map(|(p, t)| (format!("pi_p={p}"), t))
            .collect();
        plot::emit(svg, &series, "Precision-recall by prior");
    }
    Ok(())
}

#[derive(Serialize)]
struct AurocReport {
    source: String,
    grid: usize,
    /// `1 - int G`.
    geometric: f64,
    /// Trapezoid area under the emitted ROC table.
    roc_table_area: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pairs: Option<PairCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    geometric_equals_rank: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<f64>,
}

fn auroc(a: SourceArgs) -> Result<()> {
    let loaded = load(&a.source)?;
    let curve = loaded.curve()?;
    let geometric = auroc_from_leakage(&curve, a.source.grid)?;
    let roc_table_area = roc_curve(&curve, a.source.grid)?.area();
    let pairs = loaded.data().map(auroc_rank_oracle).transpose()?;
    let rank = pairs.map(|p| p.auroc());
    if let Some(r) = rank {
        if r != geometric {
            return Err(classleak::Error::NumericalFailure(format!(
                "geometric AUROC {geometric} differs from rank AUROC {r}"
            ))
            .into());
        }
    }
    let report = AurocReport {
        source: curve.kind().to_string(),
        grid: a.source.grid,
        geometric,
        roc_table_area,
        rank,
        pairs,
        geometric_equals_rank: rank.map(|r| r == geometric),
        closed_form: loaded.model().map(|m| m.auroc()),
    };
    emit_report(&report, &a.out)
}

#[derive(Serialize)]
struct KlReport {
    source: String,
    nats: f64,
    epsilon: f64,
    grid: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<f64>,
}

fn kl(a: SourceArgs) -> Result<()> {
    let loaded = load(&a.source)?;
    let est = kl_divergence_from_leakage(&loaded.curve()?, a.source.grid)?;
    let report = KlReport {
        source: loaded.curve()?.kind().to_string(),
        nats: est.nats,
        epsilon: est.epsilon,
        grid: est.grid_size,
        closed_form: loaded.model().map(|m| m.kl_pn()),
    };
    emit_report(&report, &a.out)
}

#[derive(Serialize)]
struct DominanceOutput {
    first: String,
    second: String,
    #[serde(flatten)]
    summary: DominanceSummary,
}

fn dominance(a: DominanceArgs) -> Result<()> {
    let (labels, curves) = match (a.input.as_slice(), a.alphas.as_slice(), a.bs.as_slice()) {
        ([p1, p2], [], []) => {
            let c1 = LeakageCurve::from_data(&read_scores(p1)?)?;
            let c2 = LeakageCurve::from_data(&read_scores(p2)?)?;
            (
                [p1.display().to_string(), p2.display().to_string()],
                [c1, c2],
            )
        }
        ([], [a1, a2], [b1, b2]) => (
            [format!("alpha={a1} b={b1}"), format!("alpha={a2} b={b2}")],
            [
                LeakageCurve::binormal(BinormalModel::from_alpha_b(*a1, *b1)?),
                LeakageCurve::binormal(BinormalModel::from_alpha_b(*a2, *b2)?),
            ],
        ),
        _ => {
            return Err(usage(
                "dominance needs two --input files or two values each for --alphas and --bs",
            ))
        }
    };
    let epsilon = a
        .epsilon
        .unwrap_or_else(|| default_dominance_epsilon(&curves[0], &curves[1]));
    let report = compare_dominance(&curves[0], &curves[1], a.grid, epsilon)?;
    let [first, second] = labels;
    emit_report(
        &DominanceOutput {
            first,
            second,
            summary: report.summary(),
        },
        &a.out,
    )
}

#[derive(Serialize)]
struct CappedSection {
    #[serde(flatten)]
    point: AdmissionPoint,
    boundary: Option<BoundaryLine>,
    boundary_fpr_intercept: Option<f64>,
}

#[derive(Serialize)]
struct RiskSection {
    cost_fp: f64,
    cost_fn: f64,
    max_cost: f64,
    #[serde(flatten)]
    point: RiskPoint,
    boundary: Option<BoundaryLine>,
}

#[derive(Serialize)]
struct OperateReport {
    source: String,
    pi_p: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    capped_admission: Option<CappedSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounded_risk: Option<RiskSection>,
}

fn operate(a: OperateArgs) -> Result<()> {
    if a.cap_m.is_none() && a.cost_fp.is_none() {
        return Err(usage(
            "operate needs --cap-m and/or --cost-fp, --cost-fn and --cost-max",
        ));
    }
    let loaded = load(&a.source)?;
    let curve = loaded.curve()?;
    let priors = loaded.priors(a.pi_p)?;

    let capped_admission = a
        .cap_m
        .map(|m| -> Result<CappedSection> {
            let point = capped_admission_point(&curve, priors, m)?;
            let boundary = AdmissionCap::new(m, priors)?.boundary();
            Ok(CappedSection {
                point,
                boundary,
                boundary_fpr_intercept: boundary.and_then(|l| l.fpr_intercept()),
            })
        })
        .transpose()?;

    let bounded_risk = match (a.cost_fp, a.cost_fn, a.cost_max) {
        (Some(cost_fp), Some(cost_fn), Some(max_cost)) => {
            let constraint = BoundedRisk::new(cost_fp, cost_fn, max_cost, priors)?;
            let point = min_risk_point(&curve, &constraint, a.source.grid)?;
            debug_assert_eq!(
                point.feasible,
                bounded_risk_region_check((point.fpr, point.tpr), &constraint)
            );
            Some(RiskSection {
                cost_fp,
                cost_fn,
                max_cost,
                point,
                boundary: constraint.boundary(),
            })
        }
        _ => None,
    };

    emit_report(
        &OperateReport {
            source: curve.kind().to_string(),
            pi_p: priors.pi_p(),
            capped_admission,
            bounded_risk,
        },
        &a.out,
    )
}

fn family(a: FamilyArgs) -> Result<()> {
    check_unique(&a.alphas, "--alphas")?;
    check_unique(&a.bs, "--bs")?;
    check_unique(&a.pi_ps, "--pi-ps")?;
    let members = binormal_family(&a.alphas, &a.bs, &a.pi_ps, a.grid)?;
    ensure_dir(&a.output)?;
    let mut manifest = Manifest {
        grid: a.grid,
        tables: Vec::with_capacity(members.len()),
    };
    for m in &members {
        let file = match m.pi_p {
            None => format!("roc_alpha{}_b{}.csv", m.alpha, m.b),
            Some(p) => format!("pr_alpha{}_b{}_pi{p}.csv", m.alpha, m.b),
        };
        write_file(&a.output.join(&file), &m.table.to_csv())?;
        manifest.tables.push(ManifestEntry {
            file,
            kind: m.table.kind,
            alpha: Some(m.alpha),
            b: Some(m.b),
            pi_p: m.pi_p,
        });
    }
    write_manifest(&a.output, &manifest)?;

    if let Some(svg) = &a.svg {
        let roc: Vec<(String, &CurveTable)> = members
            .iter()
            .filter(|m| m.pi_p.is_none())
            .map(|m| (format!("alpha={} b={}", m.alpha, m.b), &m.table))
            .collect();
        plot::emit(svg, &roc, "Binormal ROC family");
        let pr: Vec<(String, &CurveTable)> = members
            .iter()
            .filter_map(|m| {
                m.pi_p
                    .map(|p| (format!("alpha={} b={} pi_p={p}", m.alpha, m.b), &m.table))
            })
            .collect();
        if !pr.is_empty() {
            let stem = svg.file_stem().and_then(|s| s.to_str()).unwrap_or("family");
            plot::emit(
                &svg.with_file_name(format!("{stem}_pr.svg")),
                &pr,
                "Binormal PR family",
            );
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CalibrationReport {
    brier: f64,
    samples: usize,
    bins: Vec<ReliabilityBin>,
}

fn calibration(a: CalibrationArgs) -> Result<()> {
    let data = read_scores(&a.input)?;
    let report = CalibrationReport {
        brier: brier_score(&data).map_err(|e| CliError::Core(e, Some(a.input.clone())))?,
        samples: data.total(),
        bins: reliability_bins(&data, a.bins)?,
    };
    emit_report(&report, &a.out)
}
