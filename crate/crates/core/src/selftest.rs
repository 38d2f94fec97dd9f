//! Seeded checks of every headline property, one runner per criterion.
//!
//! Each runner returns the measured quantities next to the limits they are compared with.
//! Runners draw from their own `ChaCha8Rng` seeded by `seed ^ id`, so results do not depend
//! on which subset is run.

use std::time::Instant;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bicomplex::{Bicomplex, Hyperbolic};
use crate::fixtures;
use crate::frame::{counterexample_cexp, random_bicomplex, weighted_onb_family, FrameFamily};
use crate::function_space::{GridSpec, WeightedGrid};
use crate::gabor::{converse_failure_search, critical_density_exactness, window_preset, BcGaborSystem, GaborSystem};
use crate::hilbert::{schwarz_check, BcVector, Component};
use crate::operator::{canonical_dual, frame_operator, reconstruction_residual};
use crate::psi::{psi_system_analysis, PsiSpec};
use crate::scalar::cnorm2;

pub const DEFAULT_SEED: u64 = 20_240_611;

type C = Complex<f64>;

/// A named quantity and, when it is compared against one, its limit.
#[derive(Clone, Debug, Serialize)]
pub struct Metric {
    pub name: String,
    pub value: f64,
    pub limit: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub metrics: Vec<Metric>,
    pub notes: Vec<String>,
    /// The only run-dependent fields: wall time and, where one applies, its limit.
    pub wall_time_ms: f64,
    pub wall_time_limit_ms: Option<f64>,
}

impl CriterionResult {
    /// `PASS [id] title` followed by the metrics, for terminal output.
    pub fn line(&self) -> String {
        let m: Vec<String> = self
            .metrics
            .iter()
            .map(|m| match m.limit {
                Some(l) => format!("{}={:.3e} (limit {:.1e})", m.name, m.value, l),
                None if m.value != 0.0 && m.value.abs() < 1e-3 => format!("{}={:.3e}", m.name, m.value),
                None => format!("{}={:.6}", m.name, m.value),
            })
            .collect();
        let time = match self.wall_time_limit_ms {
            Some(l) => format!(" [{:.0} ms, limit {:.0} ms]", self.wall_time_ms, l),
            None => format!(" [{:.0} ms]", self.wall_time_ms),
        };
        format!(
            "{} [{}] {}: {}{}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            m.join(", "),
            time
        )
    }
}

struct Recorder {
    metrics: Vec<Metric>,
    notes: Vec<String>,
    passed: bool,
    time_limit_s: Option<f64>,
}

impl Recorder {
    fn new() -> Self {
        Self {
            metrics: Vec::new(),
            notes: Vec::new(),
            passed: true,
            time_limit_s: None,
        }
    }

    fn time_limit(&mut self, seconds: f64) {
        self.time_limit_s = Some(seconds);
    }

    /// Records `value ≤ limit`.
    fn at_most(&mut self, name: &str, value: f64, limit: f64) {
        self.passed &= value <= limit;
        self.metrics.push(Metric {
            name: name.into(),
            value,
            limit: Some(limit),
        });
    }

    fn value(&mut self, name: &str, value: f64) {
        self.metrics.push(Metric {
            name: name.into(),
            value,
            limit: None,
        });
    }

    fn check(&mut self, what: &str, ok: bool) {
        if !ok {
            self.passed = false;
            self.notes.push(format!("failed: {what}"));
        }
    }

    fn finish(mut self, id: &'static str, title: &'static str, start: Instant) -> CriterionResult {
        let elapsed = start.elapsed().as_secs_f64();
        if let Some(limit) = self.time_limit_s {
            if elapsed > limit {
                self.passed = false;
                self.notes.push(format!("took {elapsed:.2} s, limit {limit} s"));
            }
        }
        CriterionResult {
            id,
            title,
            passed: self.passed,
            metrics: self.metrics,
            notes: self.notes,
            wall_time_ms: elapsed * 1e3,
            wall_time_limit_ms: self.time_limit_s.map(|l| l * 1e3),
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

fn rng_for(seed: u64, id: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ id.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Orthonormal basis of `ℂ^d` by Gram–Schmidt on random vectors.
pub fn random_onb<R: Rng + ?Sized>(rng: &mut R, d: usize) -> Vec<Vec<C>> {
    let mut basis: Vec<Vec<C>> = Vec::with_capacity(d);
    while basis.len() < d {
        let mut v: Vec<C> = (0..d).map(|_| C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        for _ in 0..2 {
            for e in &basis {
                let p = crate::scalar::cdot(&v, e);
                for (x, y) in v.iter_mut().zip(e) {
                    *x -= p * y;
                }
            }
        }
        let n = cnorm2(&v).sqrt();
        if n > 1e-3 {
            basis.push(v.into_iter().map(|x| x / n).collect());
        }
    }
    basis
}

/// Bicomplex frame-bound composition against the polarization route.
pub fn criterion_1(seed: u64) -> CriterionResult {
    let start = Instant::now();
    let mut rng = rng_for(seed, 1);
    let mut r = Recorder::new();
    let mut worst_bounds: f64 = 0.0;
    let mut violations = 0usize;
    let mut frame_mismatch = 0usize;
    for _ in 0..200 {
        let d = rng.gen_range(2..=8);
        let n = rng.gen_range(d..=2 * d + 3);
        let fam = fixtures::random_family::<f64, _>(&mut rng, d, n);
        let rep = fam.report();
        let direct = fam.direct_bounds();
        let (bp, bm) = (fam.bounds(Component::Plus), fam.bounds(Component::Minus));
        worst_bounds = worst_bounds
            .max(rel(direct.lower, bp.lower.min(bm.lower)))
            .max(rel(direct.upper, bp.upper.max(bm.upper)))
            .max(rel(rep.lower, direct.lower))
            .max(rel(rep.upper, direct.upper));
        if direct.is_frame() != (bp.is_frame() && bm.is_frame()) {
            frame_mismatch += 1;
        }
        for _ in 0..100 {
            let f = BcVector::random(&mut rng, d);
            if !fam.frame_inequality_sample(&f).expect("same dimension").holds {
                violations += 1;
            }
        }
    }
    r.time_limit(5.0);
    r.at_most("bound_rel_err", worst_bounds, 1e-10);
    r.at_most("inequality_violations", violations as f64, 0.0);
    r.at_most("frame_flag_mismatches", frame_mismatch as f64, 0.0);
    r.finish("1", "frame bounds compose as min/max of component bounds", start)
}

/// Weighted orthonormal family with `a = 2`, `b = 3`.
pub fn criterion_2(seed: u64) -> CriterionResult {
    let start = Instant::now();
    let mut rng = rng_for(seed, 2);
    let mut r = Recorder::new();
    let d = 4;
    let basis = random_onb(&mut rng, d);
    // a_n = c_a (1/2)^n with Σ|a_n|² = 2, b_n = c_b (0.6 i)^n with Σ|b_n|² = 3
    let geometric = |total: f64, ratio: C, tail: f64| -> Vec<C> {
        let r2 = ratio.norm_sqr();
        let c = (total * (1.0 - r2)).sqrt();
        let mut out = Vec::new();
        let mut z = C::new(c, 0.0);
        while out.is_empty() || total * r2.powi(out.len() as i32) >= tail {
            out.push(z);
            z *= ratio;
        }
        out
    };
    let a_seq = geometric(2.0, C::new(0.5, 0.0), 1e-12);
    let b_seq = geometric(3.0, C::new(0.0, 0.6), 1e-12);
    let w = weighted_onb_family(&basis, &a_seq, &b_seq).expect("nonempty sequences");
    r.at_most("tail_a", 2.0 - w.a, 1e-12);
    r.at_most("tail_b", 3.0 - w.b, 1e-12);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let f = BcVector::random(&mut rng, d);
        let sum = w.family.frame_sum(&f).expect("same dimension");
        let want = 0.5 * (w.a * cnorm2(f.plus()) + w.b * cnorm2(f.minus()));
        worst = worst.max(rel(sum, want));
    }
    r.at_most("identity_rel_err", worst, 1e-10);
    let rep = w.family.report();
    r.at_most("A_minus_2", (rep.lower - 2.0).abs(), 1e-10);
    r.at_most("B_minus_3", (rep.upper - 3.0).abs(), 1e-10);
    r.value("family_size", w.family.len() as f64);
    r.finish("2", "weighted orthonormal family identity with bounds (2, 3)", start)
}

/// Generalized Schwarz inequality with its saturating pair.
pub fn criterion_3(seed: u64) -> CriterionResult {
    let start = Instant::now();
    let mut rng = rng_for(seed, 3);
    let mut r = Recorder::new();
    let mut violations = 0usize;
    let mut worst_ratio: f64 = 0.0;
    for _ in 0..10_000 {
        let d = rng.gen_range(1..=6);
        let f = BcVector::<f64>::random(&mut rng, d);
        let g = BcVector::random(&mut rng, d);
        let s = schwarz_check(&f, &g).expect("same dimension");
        if !s.holds {
            violations += 1;
        }
        if s.rhs > 0.0 {
            worst_ratio = worst_ratio.max(s.lhs / s.rhs);
        }
    }
    let e = BcVector::new(vec![C::new(1.0, 0.0), C::new(0.0, 0.0)], vec![C::new(0.0, 0.0); 2]).expect("d = 2");
    let s = schwarz_check(&e, &e).expect("same dimension");
    r.at_most("violations", violations as f64, 0.0);
    r.value("max_lhs_over_rhs", worst_ratio);
    r.at_most("saturation_gap", (s.rhs - s.lhs).abs(), 1e-12);
    r.finish("3", "generalized Schwarz inequality", start)
}

/// Random family whose components mix copies, zero vectors and fresh vectors, with the first
/// `d` vectors of each component spanning.
fn structured_family<R: Rng + ?Sized>(rng: &mut R, d: usize, n: usize) -> FrameFamily<f64> {
    let component = |rng: &mut R| -> Vec<Vec<C>> {
        let mut vs: Vec<Vec<C>> = random_onb(rng, d);
        while vs.len() < n {
            let v = match rng.gen_range(0..3) {
                0 => vec![C::new(0.0, 0.0); d],
                1 => {
                    let k = rng.gen_range(0..vs.len());
                    let s = C::new(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0));
                    vs[k].iter().map(|z| z * s).collect()
                }
                _ => (0..d).map(|_| C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect(),
            };
            vs.push(v);
        }
        // Fisher–Yates
        for i in (1..vs.len()).rev() {
            let j = rng.gen_range(0..=i);
            vs.swap(i, j);
        }
        vs
    };
    let plus = component(rng);
    let minus = component(rng);
    FrameFamily::from_components(plus, minus).expect("consistent shapes")
}

/// Exactness calculus: deletion oracle, intersection formula, counterexample, Riesz.
pub fn criterion_4(seed: u64) -> CriterionResult {
    let start = Instant::now();
    let mut rng = rng_for(seed, 4);
    let mut r = Recorder::new();
    let mut families: Vec<FrameFamily<f64>> = vec![
        fixtures::embedded_onb(3),
        fixtures::repeated_onb(3),
        fixtures::onb_and_doubled_onb(3),
        fixtures::riesz_fixture(4),
        fixtures::harmonic_tight(3, 5),
    ];
    families.extend((2..=5).map(counterexample_cexp));
    let fixture_count = families.len();
    for _ in 0..50 {
        let d = rng.gen_range(1..=4);
        let n = rng.gen_range(d..=10);
        families.push(structured_family(&mut rng, d, n));
    }
    let mut disagreements = 0usize;
    let mut exact_randoms = 0usize;
    for (k, fam) in families.iter().enumerate() {
        let brute = fam.n_exact().expect("fixtures are frames");
        let formula = fam.n_exact_by_components().expect("fixtures are frames");
        if brute != formula {
            disagreements += 1;
        }
        if k >= fixture_count && brute.is_empty() {
            exact_randoms += 1;
        }
        // deleting inside N_Exact keeps a frame, outside destroys it
        for i in 0..fam.len() {
            let keeps = fam.without(i).is_some_and(|g| g.is_frame());
            if keeps != brute.contains(&i) {
                disagreements += 1;
            }
        }
    }
    r.at_most("oracle_disagreements", disagreements as f64, 0.0);
    r.value("families", families.len() as f64);
    r.value("exact_random_families", exact_randoms as f64);

    for d in 2..=5 {
        let c = counterexample_cexp::<f64>(d).report();
        r.check(&format!("cexp(d={d}) is an exact bc-frame"), c.is_frame && c.is_exact);
        r.check(
            &format!("cexp(d={d}) components non-exact"),
            c.n_exact_plus.as_ref().is_some_and(|s| !s.is_empty()) && c.n_exact_minus.as_ref().is_some_and(|s| !s.is_empty()),
        );
        r.check(&format!("cexp(d={d}) not Riesz"), !c.is_riesz);
    }
    let riesz = fixtures::riesz_fixture::<f64>(4);
    r.check("riesz fixture is Riesz", riesz.is_riesz());
    r.check("riesz fixture is exact", riesz.is_exact().unwrap_or(false));
    let violation = riesz.riesz_violation(&mut rng, 200);
    r.at_most("riesz_inequality_violation", violation, 1e-10);
    r.finish("4", "exactness by deletion equals the component intersection", start)
}

/// Frame operator: reconstruction, positivity, self-adjointness, hyperbolic identity.
pub fn criterion_5(seed: u64) -> CriterionResult {
    let start = Instant::now();
    let mut rng = rng_for(seed, 5);
    let mut r = Recorder::new();
    let fams = vec![
        fixtures::random_family::<f64, _>(&mut rng, 4, 7),
        fixtures::random_family(&mut rng, 6, 9),
        counterexample_cexp(4),
        fixtures::harmonic_tight(3, 5),
        fixtures::onb_and_doubled_onb(3),
        fixtures::riesz_fixture(4),
    ];
    let mut worst_rec: f64 = 0.0;
    let mut not_positive = 0usize;
    let mut worst_sa: f64 = 0.0;
    for fam in &fams {
        let d = fam.dim();
        let dual = canonical_dual(fam).expect("fixtures are frames");
        let s = frame_operator(fam);
        for _ in 0..100 {
            let f = BcVector::random(&mut rng, d);
            worst_rec = worst_rec.max(reconstruction_residual(fam, &dual, &f).expect("same length").worst());
            let g = BcVector::random(&mut rng, d);
            worst_sa = worst_sa.max(s.self_adjoint_residual(&f, &g).expect("same dimension"));
        }
        for _ in 0..1000 {
            let f = BcVector::random(&mut rng, d);
            if !s.quadratic_form(&f).expect("same dimension").is_hyperbolic_positive() {
                not_positive += 1;
            }
        }
    }
    r.at_most("reconstruction_residual", worst_rec, 1e-9);
    r.at_most("non_positive_forms", not_positive as f64, 0.0);
    r.at_most("self_adjoint_residual", worst_sa, 1e-12);

    let tight = fixtures::harmonic_tight::<f64>(3, 5);
    let rep = tight.report();
    let s = frame_operator(&tight);
    let d = s.lower_hyperbolic_bound();
    r.check("tight fixture is tight", rep.is_tight);
    r.check("d lies in D+", d.is_strictly_positive());
    r.at_most("tight_identity_deviation_over_B", s.identity_deviation(d) / rep.upper, 1e-10);

    let witness = fixtures::onb_and_doubled_onb::<f64>(3);
    let s = frame_operator(&witness);
    let d = Hyperbolic::new(1.0, 2.0);
    r.at_most("witness_identity_deviation", s.identity_deviation(d), 1e-12);
    r.check("witness scalar is not real", !d.is_real(1e-9));
    r.check("witness family is not tight", !witness.report().is_tight);
    r.finish("5", "frame operator reconstruction, positivity and self-adjointness", start)
}

/// Painless Heil–Walnut prediction and the gap window.
pub fn criterion_6(_seed: u64) -> CriterionResult {
    let start = Instant::now();
    let mut r = Recorder::new();
    let sys = GaborSystem::<f64>::new(8, 2, 4, window_preset("indicator:4", 8).expect("preset")).expect("valid");
    let hw = sys.heil_walnut_check();
    r.check("painless hypothesis applies", hw.applicable);
    r.at_most("predicted_lower_minus_8", (hw.predicted[0] - 8.0).abs(), 1e-10);
    r.at_most("predicted_upper_minus_8", (hw.predicted[1] - 8.0).abs(), 1e-10);
    r.at_most("lower_vs_eigen", (hw.predicted[0] - hw.computed[0]).abs(), 1e-10);
    r.at_most("upper_vs_eigen", (hw.predicted[1] - hw.computed[1]).abs(), 1e-10);

    let gap = GaborSystem::<f64>::new(8, 2, 4, window_preset("indicator:1", 8).expect("preset")).expect("valid");
    let hw = gap.heil_walnut_check();
    r.at_most("gap_min_G", hw.alpha, 0.0);
    r.at_most("gap_smallest_eigenvalue", hw.computed[0], 1e-10);
    r.finish("6", "discrete painless frame bounds", start)
}

/// The critical-density bc Gabor fixture.
pub fn critical_fixture() -> BcGaborSystem<f64> {
    BcGaborSystem::new(
        GaborSystem::new(8, 4, 4, window_preset("exponential:0.7", 8).expect("preset")).expect("valid"),
        GaborSystem::new(8, 4, 4, window_preset("exponential:0.5", 8).expect("preset")).expect("valid"),
    )
    .expect("same grid")
}

pub fn criterion_7a(_seed: u64) -> CriterionResult {
    let start = Instant::now();
    let mut r = Recorder::new();
    let sys = critical_fixture();
    match critical_density_exactness(&sys) {
        Ok(c) => {
            r.check("plus component critical", c.plus_critical);
            r.check("exact by component intersection", c.exact);
            let brute = sys.family().n_exact().expect("frame");
            r.at_most("bc_deletion_removable", brute.len() as f64, 0.0);
            r.value("smallest_bc_bound", sys.report().lower);
        }
        Err(e) => r.check(&format!("critical fixture is a frame ({e})"), false),
    }
    r.finish("7a", "critical density gives an exact bc Gabor frame", start)
}

/// Searches for an exact bc Gabor frame with no critical component.
pub fn criterion_7b(seed: u64, max_n: usize) -> CriterionResult {
    let start = Instant::now();
    let mut rng = rng_for(seed, 7);
    let mut r = Recorder::new();
    let s = converse_failure_search(max_n, 1, &mut rng);
    r.value("systems_examined", s.systems_examined as f64);
    r.value("bc_frames", s.frames as f64);
    r.value("exact_bc_frames", s.exact_frames as f64);
    match s.witness {
        Some(w) => r.notes.push(format!("witness (N, a, M+, c, M-, window) = {w:?}")),
        None => r.check(
            "exact non-critical witness found (every component is a Weyl orbit, so its removable set is all or nothing)",
            false,
        ),
    }
    r.finish("7b", "exact bc Gabor frame without a critical component", start)
}

pub fn criterion_8(_seed: u64) -> CriterionResult {
    let start = Instant::now();
    let mut r = Recorder::new();
    match psi_system_analysis::<f64>(&PsiSpec::default()) {
        Ok(a) => {
            r.at_most("hermite_residual", a.quadrature_residual, 1e-8);
            let max_inner = a.witnesses.iter().map(|w| w.max_inner).fold(0.0, f64::max);
            let norm_err = a.witnesses.iter().map(|w| (w.norm - 1.0).abs()).fold(0.0, f64::max);
            r.at_most("witness_max_inner", max_inner, 1e-6);
            r.at_most("witness_norm_err", norm_err, 1e-8);
            r.check("lower frame bound fails", a.lower_bound_fails);
            r.check("Bessel bound finite on the panel", a.bessel_holds);
            r.value("bessel_constant", a.bessel.constant);
            r.at_most("bessel_refinement_change", a.bessel.relative_change, 1e-2);
            let id = a.identity.iter().map(|x| x.relative_error).fold(0.0, f64::max);
            r.at_most("v0_identity_rel_err", id, 1e-6);
        }
        Err(e) => r.check(&format!("analysis ran ({e})"), false),
    }
    r.time_limit(60.0);
    r.finish("8", "hyperbolic-plane system is Bessel but not a frame", start)
}

pub fn criterion_9(seed: u64) -> CriterionResult {
    let start = Instant::now();
    let mut rng = rng_for(seed, 9);
    let mut r = Recorder::new();
    let mut worst_mul: f64 = 0.0;
    let mut worst_conj: f64 = 0.0;
    for _ in 0..1000 {
        let z: Bicomplex<f64> = random_bicomplex(&mut rng);
        let w: Bicomplex<f64> = random_bicomplex(&mut rng);
        let a = z * w;
        let b = z.mul_cartesian(&w);
        worst_mul = worst_mul.max(a.distance(&b) / a.modulus().max(1e-300));
        for e in [
            z.conj_dagger().conj_dagger().distance(&z),
            z.conj_tilde().conj_tilde().distance(&z),
            z.conj_star().conj_star().distance(&z),
            z.conj_star().distance(&z.conj_dagger().conj_tilde()),
            z.conj_star().distance(&z.conj_tilde().conj_dagger()),
        ] {
            worst_conj = worst_conj.max(e);
        }
    }
    r.at_most("mul_rel_err", worst_mul, 1e-13);
    r.at_most("conjugation_err", worst_conj, 1e-15);
    let mut wrong = 0usize;
    for _ in 0..200 {
        let lam = C::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let zd = [
            Bicomplex::from_idempotent(lam, C::new(0.0, 0.0)),
            Bicomplex::from_idempotent(C::new(0.0, 0.0), lam),
        ];
        let generic: Bicomplex<f64> = random_bicomplex(&mut rng);
        let expect_generic = generic.alpha().norm().min(generic.beta().norm()) == 0.0;
        wrong += zd.iter().filter(|z| !z.is_zero_divisor() || z.try_invert().is_ok()).count();
        if generic.is_zero_divisor() != expect_generic {
            wrong += 1;
        }
    }
    r.at_most("zero_divisor_misclassified", wrong as f64, 0.0);
    r.finish("9", "bicomplex algebra", start)
}

/// `‖f‖²` three ways on two resolutions.
pub fn criterion_10(_seed: u64) -> CriterionResult {
    let start = Instant::now();
    let mut r = Recorder::new();
    type F = fn(Bicomplex<f64>) -> Bicomplex<f64>;
    let samples: [(&str, F); 3] = [
        ("alpha_gaussian", |z| {
            Bicomplex::from_idempotent(z.alpha(), C::new(0.0, 0.0)).scale(C::new((-z.modulus_sqr()).exp(), 0.0))
        }),
        ("mixed_polynomial", |z| {
            let g = (-0.5 * z.modulus_sqr()).exp();
            Bicomplex::new(C::new(1.0, 0.0) + z.z1() * z.z2(), z.z1().conj()).scale(C::new(g, 0.0))
        }),
        ("idempotent_product", |z| {
            let g = (-0.75 * z.modulus_sqr()).exp();
            Bicomplex::from_idempotent(z.alpha() * z.beta().conj(), C::new(1.0, 0.0) + z.beta()).scale(C::new(g, 0.0))
        }),
    ];
    let half = 4.0;
    let nu = 1.0;
    let mut errs = Vec::new();
    for &n in &[17usize, 33] {
        let cart = WeightedGrid::cartesian(&GridSpec {
            bounds: [-half, half],
            points_per_axis: n,
            nu,
        })
        .expect("valid grid");
        let s2 = half * std::f64::consts::SQRT_2;
        let idem = WeightedGrid::idempotent(&GridSpec {
            bounds: [-s2, s2],
            points_per_axis: n,
            nu,
        })
        .expect("valid grid");
        let mut worst: f64 = 0.0;
        for (name, f) in samples.iter() {
            let fc = cart.sample(f);
            let direct = fc.norm_sqr_direct();
            let split = fc.norm_sqr_split();
            let mapped = fc.idempotent_change_of_variables().expect("cartesian").bc_norm_sqr();
            let fi = idem.sample(f);
            let independent = fi.norm_sqr_split();
            let e = rel(split, direct).max(rel(mapped, direct)).max(rel(independent, direct));
            r.value(&format!("{name}_n{n}_rel_err"), e);
            worst = worst.max(e);
        }
        r.at_most(&format!("worst_rel_err_n{n}"), worst, 1e-3);
        errs.push(worst);
    }
    r.check("discrepancy shrinks under refinement", errs[1] < errs[0]);
    r.finish("10", "norm identities against direct 4-D quadrature", start)
}

/// Every criterion in order; `quick` shrinks the exhaustive search and skips the quadrature-heavy run.
pub fn run_all(seed: u64, quick: bool) -> Vec<CriterionResult> {
    let mut out = vec![
        criterion_1(seed),
        criterion_2(seed),
        criterion_3(seed),
        criterion_4(seed),
        criterion_5(seed),
        criterion_6(seed),
        criterion_7a(seed),
        criterion_7b(seed, if quick { 6 } else { 8 }),
    ];
    if !quick {
        out.push(criterion_8(seed));
    }
    out.push(criterion_9(seed));
    out.push(criterion_10(seed));
    out
}
