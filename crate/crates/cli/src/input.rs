//! Request documents and their parsing.

use std::fs;
use std::io::Read;
use std::path::Path;

use bcframe::fixtures;
use bcframe::frame::weighted_onb_family;
use bcframe::gabor::{BcGaborSystem, GaborSystem, WindowSpec};
use bcframe::{BcVector64, Complex64, FrameFamily64};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Raw request text and where it came from.
pub struct Source {
    pub name: String,
    pub text: String,
}

/// `--input` is a file path, `-` for standard input, or inline JSON starting with `{`.
pub fn read_source(input: &str) -> Result<Source, CliError> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') {
        return Ok(Source {
            name: "<inline>".into(),
            text: input.to_owned(),
        });
    }
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io(format!("<stdin>: {e}")))?;
        return Ok(Source {
            name: "<stdin>".into(),
            text,
        });
    }
    let text = fs::read_to_string(Path::new(input)).map_err(|e| CliError::Io(format!("{input}: {e}")))?;
    Ok(Source {
        name: input.to_owned(),
        text,
    })
}

/// Typed document plus its verbatim JSON for the report echo.
pub fn parse<T: DeserializeOwned>(src: &Source) -> Result<(T, serde_json::Value), CliError> {
    let typed: T = serde_json::from_str(&src.text).map_err(|e| {
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let full = e.to_string();
        CliError::Parse {
            source_name: src.name.clone(),
            line: e.line(),
            column: e.column(),
            message: full.strip_suffix(&suffix).unwrap_or(&full).to_owned(),
        }
    })?;
    let echo = serde_json::from_str(&src.text).expect("already parsed once");
    Ok((typed, echo))
}

/// A stock family by name.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureSpec {
    pub name: String,
    #[serde(default)]
    pub dim: Option<usize>,
    /// Family size, for `harmonic_tight` and `random`.
    #[serde(default)]
    pub len: Option<usize>,
}

/// `{"vectors": [...]}` or `{"fixture": {...}}`, optionally with `signals`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameSpec {
    #[serde(default)]
    pub vectors: Option<Vec<BcVector64>>,
    #[serde(default)]
    pub fixture: Option<FixtureSpec>,
    #[serde(default)]
    pub signals: Option<Vec<BcVector64>>,
}

pub const FIXTURES: &[&str] = &[
    "embedded_onb",
    "onb_and_doubled_onb",
    "repeated_onb",
    "non_spanning_plus",
    "harmonic_tight",
    "riesz",
    "cexp",
    "weighted_onb",
    "random",
];

impl FrameSpec {
    pub fn family(&self, rng: &mut ChaCha8Rng) -> Result<FrameFamily64, CliError> {
        match (&self.vectors, &self.fixture) {
            (Some(v), None) => Ok(FrameFamily64::new(v.clone())?),
            (None, Some(f)) => fixture(f, rng),
            _ => Err(CliError::Invalid("frame spec needs exactly one of \"vectors\" and \"fixture\"".into())),
        }
    }
}

fn fixture(f: &FixtureSpec, rng: &mut ChaCha8Rng) -> Result<FrameFamily64, CliError> {
    let d = f.dim.unwrap_or(3);
    if d == 0 {
        return Err(CliError::Invalid("fixture dimension must be positive".into()));
    }
    let len = |default: usize| -> Result<usize, CliError> {
        let n = f.len.unwrap_or(default);
        if n < d {
            Err(CliError::Invalid(format!("fixture {:?} needs len >= dim, got {n} < {d}", f.name)))
        } else {
            Ok(n)
        }
    };
    Ok(match f.name.as_str() {
        "embedded_onb" => fixtures::embedded_onb(d),
        "onb_and_doubled_onb" => fixtures::onb_and_doubled_onb(d),
        "repeated_onb" => fixtures::repeated_onb(d),
        "non_spanning_plus" => fixtures::non_spanning_plus(d),
        "harmonic_tight" => fixtures::harmonic_tight(d, len(d + 2)?),
        "riesz" => fixtures::riesz_fixture(d),
        "cexp" if d >= 2 => fixtures::counterexample_cexp(d),
        "cexp" => return Err(CliError::Invalid("the cexp fixture needs dim >= 2".into())),
        "weighted_onb" => weighted_onb(d)?,
        "random" => fixtures::random_family(rng, d, len(2 * d)?),
        other => {
            return Err(CliError::Invalid(format!(
                "unknown fixture {other:?}; expected one of {}",
                FIXTURES.join(", ")
            )))
        }
    })
}

/// Standard basis weighted by `a_n = √1.5 (1/2)^n` and `b_n = √1.92 (0.6i)^n`, with bounds 2 and 3.
pub fn weighted_onb(d: usize) -> Result<FrameFamily64, CliError> {
    let basis: Vec<Vec<Complex64>> = (0..d)
        .map(|k| (0..d).map(|i| Complex64::new(f64::from(u8::from(i == k)), 0.0)).collect())
        .collect();
    let geometric = |c: f64, r: Complex64, terms: usize| -> Vec<Complex64> {
        (0..terms).map(|n| Complex64::new(c, 0.0) * r.powu(n as u32)).collect()
    };
    let a = geometric(1.5f64.sqrt(), Complex64::new(0.5, 0.0), 24);
    let b = geometric(1.92f64.sqrt(), Complex64::new(0.0, 0.6), 32);
    Ok(weighted_onb_family(&basis, &a, &b)?.family)
}

/// One component of a Gabor request.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    pub a: usize,
    #[serde(rename = "M")]
    pub m: usize,
    pub window: WindowSpec,
}

/// `{"N": n, "plus": {...}, "minus": {...}}`; a missing `minus` repeats `plus`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaborSpec {
    #[serde(rename = "N")]
    pub n: usize,
    pub plus: ComponentSpec,
    #[serde(default)]
    pub minus: Option<ComponentSpec>,
}

pub const GABOR_PRESETS: &[&str] = &["painless", "critical", "gap", "mixed"];

impl GaborSpec {
    pub fn preset(name: &str) -> Result<Self, CliError> {
        let side = |a, m, w: &str| ComponentSpec {
            a,
            m,
            window: WindowSpec::Preset(w.into()),
        };
        let (plus, minus) = match name {
            "painless" => (side(2, 4, "indicator:4"), None),
            "critical" => (side(4, 4, "exponential:0.7"), Some(side(4, 4, "exponential:0.5"))),
            "gap" => (side(2, 4, "indicator:1"), Some(side(2, 4, "indicator:4"))),
            "mixed" => (side(2, 4, "indicator:4"), Some(side(1, 8, "gaussian:1.5"))),
            other => {
                return Err(CliError::Invalid(format!(
                    "unknown gabor preset {other:?}; expected one of {}",
                    GABOR_PRESETS.join(", ")
                )))
            }
        };
        Ok(Self { n: 8, plus, minus })
    }

    pub fn system(&self) -> Result<BcGaborSystem<f64>, CliError> {
        let build = |c: &ComponentSpec| -> Result<GaborSystem<f64>, CliError> {
            Ok(GaborSystem::new(self.n, c.a, c.m, c.window.resolve(self.n)?)?)
        };
        let plus = build(&self.plus)?;
        let minus = build(self.minus.as_ref().unwrap_or(&self.plus))?;
        Ok(BcGaborSystem::new(plus, minus)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(1)
    }

    #[test]
    fn inline_source_and_positions() {
        let src = read_source(r#"{"fixture": {"name": "cexp"}}"#).unwrap();
        assert_eq!(src.name, "<inline>");
        let (spec, echo): (FrameSpec, _) = parse(&src).unwrap();
        assert_eq!(spec.family(&mut rng()).unwrap().len(), 4);
        assert_eq!(echo["fixture"]["name"], "cexp");

        let bad = Source {
            name: "x".into(),
            text: "{\n \"vectors\": 3\n}".into(),
        };
        match parse::<FrameSpec>(&bad) {
            Err(CliError::Parse { line, message, .. }) => {
                assert_eq!(line, 2);
                assert!(!message.contains("at line"));
            }
            _ => panic!("expected a parse error"),
        }
    }

    #[test]
    fn every_fixture_builds() {
        for name in FIXTURES {
            let f = FixtureSpec {
                name: (*name).into(),
                dim: Some(3),
                len: None,
            };
            assert_eq!(fixture(&f, &mut rng()).unwrap().dim(), 3, "{name}");
        }
        let short = FixtureSpec {
            name: "random".into(),
            dim: Some(3),
            len: Some(2),
        };
        assert!(matches!(fixture(&short, &mut rng()), Err(CliError::Invalid(_))));
    }

    #[test]
    fn weighted_onb_bounds() {
        let r = weighted_onb(3).unwrap().report();
        assert!((r.lower - 2.0).abs() < 1e-12 && (r.upper - 3.0).abs() < 1e-12);
    }

    #[test]
    fn presets_and_spec_checks() {
        for p in GABOR_PRESETS {
            assert!(GaborSpec::preset(p).unwrap().system().is_ok(), "{p}");
        }
        assert!(GaborSpec::preset("nope").is_err());
        let both = FrameSpec {
            vectors: Some(vec![]),
            fixture: Some(FixtureSpec {
                name: "cexp".into(),
                dim: None,
                len: None,
            }),
            signals: None,
        };
        assert!(matches!(both.family(&mut rng()), Err(CliError::Invalid(_))));
    }
}
