use bcframe::frame::{FrameInequality, FRAME_TOL, INEQUALITY_SLACK, RIESZ_TOL, TIGHT_TOL};
use bcframe::gabor::PAINLESS_TOL;
use bcframe::linalg::{JACOBI_MAX_SWEEPS, JACOBI_TOL};
use bcframe::operator::{analysis, canonical_dual, frame_operator, reconstruction_residual, synthesis, HERMITIAN_TOL};
use bcframe::psi::{psi_system_analysis, PsiSpec, IDENTITY_TOL, QUADRATURE_LIMIT, REFINEMENT_TOL, WITNESS_TOL};
use bcframe::{bicomplex, fixtures, selftest, BcVector64, CoefficientSequence, Component, FrameFamily64, FrameReport64};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::{self, FixtureSpec, FrameSpec, GaborSpec, Source};
use crate::{CliError, Options, Outcome};

pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-9;
/// Random signals drawn when a request supplies none.
pub const DEFAULT_SIGNALS: usize = 100;

pub fn tolerances(opts: &Options) -> Value {
    json!({
        "frame": FRAME_TOL,
        "tight": TIGHT_TOL,
        "riesz": RIESZ_TOL,
        "inequality": INEQUALITY_SLACK,
        "jacobi": JACOBI_TOL,
        "jacobi_max_sweeps": JACOBI_MAX_SWEEPS,
        "hermitian": HERMITIAN_TOL,
        "zero_divisor": bicomplex::ZERO_DIVISOR_TOL,
        "positivity": bicomplex::POSITIVITY_TOL,
        "painless": PAINLESS_TOL,
        "psi_quadrature": QUADRATURE_LIMIT,
        "psi_witness": WITNESS_TOL,
        "psi_identity": IDENTITY_TOL,
        "psi_refinement": REFINEMENT_TOL,
        "reconstruction": opts.tolerance,
    })
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn rng(opts: &Options) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(opts.seed)
}

fn load_frame(input: Option<&str>, opts: &Options) -> Result<(FrameSpec, FrameFamily64, Source, Value), CliError> {
    let path = input.ok_or_else(|| CliError::Invalid("this command needs --input".into()))?;
    let src = input::read_source(path)?;
    let (spec, echo): (FrameSpec, _) = input::parse(&src)?;
    let fam = spec.family(&mut rng(opts))?;
    Ok((spec, fam, src, echo))
}

#[derive(Serialize)]
struct FrameEvidence {
    report: FrameReport64,
    /// Bounds from the polarized bicomplex quadratic form, independent of the component route.
    direct_bounds: [f64; 2],
    inequality_samples: usize,
    worst_inequality: Option<FrameInequality<f64>>,
    boundedness: bcframe::frame::BoundednessStats<f64>,
    tightness: Option<bcframe::frame::TightnessDecomposition>,
}

fn frame_evidence(fam: &FrameFamily64, opts: &Options) -> FrameEvidence {
    let report = fam.report();
    let direct = fam.direct_bounds();
    let mut rng = rng(opts);
    // the sample whose frame sum sits closest to one of the bounds
    let mut worst: Option<(f64, FrameInequality<f64>)> = None;
    for _ in 0..DEFAULT_SIGNALS {
        let f = BcVector64::random(&mut rng, fam.dim());
        let s = fam.frame_inequality_sample(&f).expect("same dimension");
        let margin = (s.sum - s.lower).min(s.upper - s.sum);
        if worst.as_ref().is_none_or(|(m, _)| margin < *m) {
            worst = Some((margin, s));
        }
    }
    FrameEvidence {
        direct_bounds: [direct.lower, direct.upper],
        inequality_samples: DEFAULT_SIGNALS,
        worst_inequality: worst.map(|(_, s)| s),
        boundedness: fam.boundedness_stats(),
        tightness: fam.tightness_decomposition().ok(),
        report,
    }
}

fn frame_summary(r: &FrameReport64) -> String {
    format!(
        "d={} n={} frame={} A={:.6} B={:.6} (a+={:.6} b+={:.6} a-={:.6} b-={:.6}) tight={} exact={} riesz={}",
        r.dim, r.len, r.is_frame, r.lower, r.upper, r.a_plus, r.b_plus, r.a_minus, r.b_minus, r.is_tight, r.is_exact, r.is_riesz
    )
}

pub fn analyze(input: Option<&str>, opts: &Options) -> Result<Outcome, CliError> {
    let (_, fam, src, echo) = load_frame(input, opts)?;
    let ev = frame_evidence(&fam, opts);
    let mut summary = frame_summary(&ev.report);
    let mut status = 0;
    if opts.require_frame && !ev.report.is_frame {
        let e = bcframe::Error::NotAFrame {
            a_plus: ev.report.a_plus,
            a_minus: ev.report.a_minus,
        };
        summary = format!("{summary}\nerror: {e}");
        status = 2;
    }
    Ok(Outcome {
        echo: Some(echo),
        source: Some(src.name),
        payload: to_value(&ev),
        summary,
        status,
    })
}

fn signals(spec: &FrameSpec, fam: &FrameFamily64, opts: &Options) -> Result<Vec<BcVector64>, CliError> {
    match &spec.signals {
        Some(s) => {
            if let Some(bad) = s.iter().find(|f| f.dim() != fam.dim()) {
                return Err(bcframe::Error::DimensionMismatch {
                    expected: fam.dim(),
                    found: bad.dim(),
                }
                .into());
            }
            Ok(s.clone())
        }
        None => {
            // offset so the signals differ from the inequality samples
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(1));
            Ok((0..DEFAULT_SIGNALS).map(|_| BcVector64::random(&mut rng, fam.dim())).collect())
        }
    }
}

#[derive(Serialize)]
struct DualPayload {
    eigenvalues_plus: Vec<f64>,
    eigenvalues_minus: Vec<f64>,
    inverse_eigenvalues_plus: Vec<f64>,
    inverse_eigenvalues_minus: Vec<f64>,
    dual: Vec<BcVector64>,
    signals_checked: usize,
    signals_supplied: bool,
    worst_residual: f64,
    threshold: f64,
    within_threshold: bool,
}

pub fn dual(input: Option<&str>, opts: &Options) -> Result<Outcome, CliError> {
    let (spec, fam, src, echo) = load_frame(input, opts)?;
    let s = frame_operator(&fam);
    let inv = s.invert()?;
    let dual = canonical_dual(&fam)?;
    let fs = signals(&spec, &fam, opts)?;
    let mut worst = 0.0f64;
    for f in &fs {
        worst = worst.max(reconstruction_residual(&fam, &dual, f)?.worst());
    }
    let payload = DualPayload {
        eigenvalues_plus: s.eigen(Component::Plus).values.clone(),
        eigenvalues_minus: s.eigen(Component::Minus).values.clone(),
        inverse_eigenvalues_plus: inv.eigen(Component::Plus).values.clone(),
        inverse_eigenvalues_minus: inv.eigen(Component::Minus).values.clone(),
        dual: dual.vectors().to_vec(),
        signals_checked: fs.len(),
        signals_supplied: spec.signals.is_some(),
        worst_residual: worst,
        threshold: opts.tolerance,
        within_threshold: worst < opts.tolerance,
    };
    let summary = format!(
        "dual of {} vectors in d={}: worst residual {:.3e} over {} signals (threshold {:.1e}, {})",
        fam.len(),
        fam.dim(),
        worst,
        fs.len(),
        opts.tolerance,
        if payload.within_threshold { "ok" } else { "exceeded" }
    );
    Ok(Outcome {
        echo: Some(echo),
        source: Some(src.name),
        payload: to_value(&payload),
        summary,
        status: 0,
    })
}

#[derive(Serialize)]
struct Reconstructed {
    signal: BcVector64,
    /// `⟨f, S⁻¹f_n⟩`.
    coefficients: CoefficientSequence<f64>,
    reconstruction: BcVector64,
    residual: f64,
}

#[derive(Serialize)]
struct ReconstructPayload {
    signals: Vec<Reconstructed>,
    worst_residual: f64,
    threshold: f64,
    within_threshold: bool,
}

pub fn reconstruct(input: Option<&str>, opts: &Options) -> Result<Outcome, CliError> {
    let (spec, fam, src, echo) = load_frame(input, opts)?;
    let dual = canonical_dual(&fam)?;
    let mut out = Vec::new();
    let mut worst = 0.0f64;
    for f in signals(&spec, &fam, opts)? {
        let c = analysis(&dual, &f)?;
        let g = synthesis(&fam, &c)?;
        let residual = f.distance(&g)? / f.norm().max(f64::MIN_POSITIVE);
        worst = worst.max(residual);
        out.push(Reconstructed {
            signal: f,
            coefficients: c,
            reconstruction: g,
            residual,
        });
    }
    let summary = format!("reconstructed {} signals: worst relative residual {:.3e}", out.len(), worst);
    Ok(Outcome {
        echo: Some(echo),
        source: Some(src.name),
        payload: to_value(&ReconstructPayload {
            signals: out,
            worst_residual: worst,
            threshold: opts.tolerance,
            within_threshold: worst < opts.tolerance,
        }),
        summary,
        status: 0,
    })
}

pub fn gabor(input: Option<&str>, opts: &Options) -> Result<Outcome, CliError> {
    let path = input.ok_or_else(|| {
        CliError::Invalid(format!(
            "gabor needs --input: a spec document or one of the presets {}",
            input::GABOR_PRESETS.join(", ")
        ))
    })?;
    let (spec, echo, source) = if input::GABOR_PRESETS.contains(&path) {
        let spec = GaborSpec::preset(path)?;
        let echo = to_value(&spec);
        (spec, echo, format!("preset:{path}"))
    } else {
        let src = input::read_source(path)?;
        let (spec, echo) = input::parse::<GaborSpec>(&src)?;
        (spec, echo, src.name)
    };
    let sys = spec.system()?;
    let a = sys.analysis();
    let mut summary = format!(
        "bc Gabor N={} grid={:?}: frame={} A={:.6} B={:.6} painless+={} painless-={} exact={}",
        spec.n,
        a.grid,
        a.report.is_frame,
        a.report.lower,
        a.report.upper,
        a.plus.heil_walnut.applicable,
        a.minus.heil_walnut.applicable,
        a.report.is_exact
    );
    let mut status = 0;
    if opts.require_frame && !a.report.is_frame {
        summary.push_str("\nerror: not a frame");
        status = 2;
    }
    Ok(Outcome {
        echo: Some(echo),
        source: Some(source),
        payload: to_value(&a),
        summary,
        status,
    })
}

pub fn psi(input: Option<&str>, _opts: &Options) -> Result<Outcome, CliError> {
    let (spec, echo, source) = match input {
        Some(path) => {
            let src = input::read_source(path)?;
            let (spec, echo) = input::parse::<PsiSpec>(&src)?;
            (spec, Some(echo), Some(src.name))
        }
        None => (PsiSpec::default(), None, None),
    };
    let a = psi_system_analysis::<f64>(&spec)?;
    let max_inner = a.witnesses.iter().map(|w| w.max_inner).fold(0.0, f64::max);
    let summary = format!(
        "psi system: {} atoms, Bessel constant {:.6} (refined {:.6}), witness max |<Phi, psi>| = {:.3e}, lower bound fails = {}",
        a.atoms, a.bessel.constant, a.bessel.refined_constant, max_inner, a.lower_bound_fails
    );
    Ok(Outcome {
        echo,
        source,
        payload: to_value(&a),
        summary,
        status: 0,
    })
}

pub fn selftest(opts: &Options) -> Result<Outcome, CliError> {
    let results = selftest::run_all(opts.seed, opts.quick);
    let failed = results.iter().filter(|r| !r.passed).count();
    let mut lines: Vec<String> = results.iter().map(|r| r.line()).collect();
    lines.push(format!("{} of {} criteria passed", results.len() - failed, results.len()));
    Ok(Outcome {
        echo: None,
        source: None,
        payload: json!({ "results": to_value(&results), "failed": failed }),
        summary: lines.join("\n"),
        status: if failed == 0 { 0 } else { 2 },
    })
}

#[derive(Serialize)]
struct DemoEntry {
    name: &'static str,
    /// A request document that reproduces this entry with `analyze` or `gabor`.
    input: Value,
    payload: Value,
}

pub fn demo(opts: &Options) -> Result<Outcome, CliError> {
    let mut entries = Vec::new();
    let frames: [(&'static str, &str, usize, Option<usize>); 6] = [
        ("embedded_onb", "embedded_onb", 3, None),
        ("cexp", "cexp", 3, None),
        ("weighted_onb", "weighted_onb", 4, None),
        ("harmonic_tight", "harmonic_tight", 3, Some(5)),
        ("hyperbolic_scalar_not_tight", "onb_and_doubled_onb", 3, None),
        ("riesz", "riesz", 4, None),
    ];
    for (label, name, dim, len) in frames {
        let spec = FixtureSpec {
            name: name.into(),
            dim: Some(dim),
            len,
        };
        let req = json!({ "fixture": to_value(&spec) });
        let fam = FrameSpec {
            vectors: None,
            fixture: Some(spec),
            signals: None,
        }
        .family(&mut rng(opts))?;
        entries.push(DemoEntry {
            name: label,
            input: req,
            payload: to_value(&frame_evidence(&fam, opts)),
        });
    }
    for preset in input::GABOR_PRESETS {
        let spec = GaborSpec::preset(preset)?;
        entries.push(DemoEntry {
            name: preset,
            input: to_value(&spec),
            payload: to_value(&spec.system()?.analysis()),
        });
    }
    let cexp: FrameFamily64 = fixtures::counterexample_cexp(3);
    let summary = format!(
        "{} demo entries; cexp(3): exact={} removable+={:?} removable-={:?}",
        entries.len(),
        cexp.is_exact().unwrap_or(false),
        cexp.component_removable(Component::Plus),
        cexp.component_removable(Component::Minus)
    );
    Ok(Outcome {
        echo: None,
        source: None,
        payload: to_value(&entries),
        summary,
        status: 0,
    })
}
