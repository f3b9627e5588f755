//! Named parametric families of metric Lie algebras in dimensions 3 and 4,
//! with their parameter restrictions and recorded local-symmetry verdicts.

use std::collections::BTreeMap;

use rand::Rng;

use crate::algebra::{Bracket, MetricLieAlgebra};
use crate::curvature::{milnor_system_residual, MilnorKind};
use crate::error::{Error, Result};

/// Tolerance for equality-type restrictions such as `alpha != 1`.
const RESTRICTION_EPS: f64 = 1e-9;

/// Zero-set tolerance for the Milnor polynomial systems.
pub const MILNOR_ZERO_EPS: f64 = 1e-8;

/// User-supplied parameter values and an optional variant name.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params {
    values: BTreeMap<String, f64>,
    variant: Option<String>,
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: f64) -> Self {
        self.values.insert(key.to_string(), value);
        self
    }

    pub fn with_variant(mut self, variant: &str) -> Self {
        self.variant = Some(variant.to_string());
        self
    }

    pub fn set(&mut self, key: &str, value: f64) {
        self.values.insert(key.to_string(), value);
    }

    pub fn set_variant(&mut self, variant: &str) {
        self.variant = Some(variant.to_string());
    }

    pub fn get(&self, key: &str) -> Option<f64> {
        self.values.get(key).copied()
    }

    pub fn variant(&self) -> Option<&str> {
        self.variant.as_deref()
    }

    pub fn values(&self) -> &BTreeMap<String, f64> {
        &self.values
    }

    /// Applies one `key=value` assignment; `variant=NAME` selects a variant.
    pub fn assign(&mut self, text: &str) -> Result<()> {
        let (k, v) = text
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {text:?}")))?;
        let (k, v) = (k.trim(), v.trim());
        if k == "variant" {
            self.set_variant(v);
            return Ok(());
        }
        let x: f64 = v
            .parse()
            .map_err(|_| Error::Parse(format!("parameter {k}: not a number: {v:?}")))?;
        if !x.is_finite() {
            return Err(Error::Parse(format!("parameter {k}: not finite")));
        }
        self.set(k, x);
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Positive,
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: f64,
    pub domain: Domain,
}

const fn pos(name: &'static str, default: f64) -> ParamSpec {
    ParamSpec {
        name,
        default,
        domain: Domain::Positive,
    }
}

const fn real(name: &'static str, default: f64) -> ParamSpec {
    ParamSpec {
        name,
        default,
        domain: Domain::Real,
    }
}

/// Parameters after defaults, with the selected variant.
#[derive(Debug, Clone, PartialEq)]
pub struct Resolved {
    pub values: BTreeMap<&'static str, f64>,
    pub variant: Option<&'static str>,
}

impl Resolved {
    pub fn get(&self, key: &str) -> f64 {
        self.values[key]
    }

    pub fn to_params(&self) -> Params {
        let mut p = Params::new();
        for (k, v) in &self.values {
            p.set(k, *v);
        }
        if let Some(v) = self.variant {
            p.set_variant(v);
        }
        p
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    True,
    False,
    ParameterDependent,
}

impl VerdictKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictKind::True => "true",
            VerdictKind::False => "false",
            VerdictKind::ParameterDependent => "parameter-dependent",
        }
    }
}

/// Recorded local-symmetry verdict of an entry.
#[derive(Debug, Clone, Copy)]
pub struct ExpectedVerdict {
    pub locally_symmetric: VerdictKind,
    pub condition: Option<&'static str>,
    /// The condition is known to be sufficient, not necessary.
    pub sufficient_only: bool,
    /// Variant the verdict is bound to, if the entry has several.
    pub variant: Option<&'static str>,
    predicate: Option<fn(&Resolved) -> bool>,
}

impl ExpectedVerdict {
    const fn fixed(value: bool) -> Self {
        Self {
            locally_symmetric: if value {
                VerdictKind::True
            } else {
                VerdictKind::False
            },
            condition: None,
            sufficient_only: false,
            variant: None,
            predicate: None,
        }
    }

    const fn when(condition: &'static str, predicate: fn(&Resolved) -> bool, sufficient_only: bool) -> Self {
        Self {
            locally_symmetric: VerdictKind::ParameterDependent,
            condition: Some(condition),
            sufficient_only,
            variant: None,
            predicate: Some(predicate),
        }
    }

    const fn for_variant(mut self, variant: &'static str) -> Self {
        self.variant = Some(variant);
        self
    }

    /// Expected answer at concrete parameters; `None` when the record does
    /// not decide (other variant, or a sufficient condition that fails).
    pub fn expected_at(&self, params: &Resolved) -> Option<bool> {
        if self.variant.is_some() && self.variant != params.variant {
            return None;
        }
        match self.locally_symmetric {
            VerdictKind::True => Some(true),
            VerdictKind::False => Some(false),
            VerdictKind::ParameterDependent => {
                let holds = (self.predicate.expect("predicate recorded"))(params);
                if holds {
                    Some(true)
                } else if self.sufficient_only {
                    None
                } else {
                    Some(false)
                }
            }
        }
    }
}

type Builder = fn(&Resolved) -> Result<MetricLieAlgebra>;
type SpectrumFn = fn(&Resolved) -> Option<Vec<f64>>;

pub struct CatalogEntry {
    pub name: &'static str,
    pub dim: usize,
    pub constants: &'static str,
    pub params: &'static [ParamSpec],
    /// First variant is the default.
    pub variants: &'static [&'static str],
    pub restrictions: &'static [&'static str],
    builder: Builder,
    verdict: Option<ExpectedVerdict>,
    spectrum: Option<SpectrumFn>,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .finish_non_exhaustive()
    }
}

impl CatalogEntry {
    pub fn resolve(&self, params: &Params) -> Result<Resolved> {
        for key in params.values().keys() {
            if !self.params.iter().any(|p| p.name == key) {
                return Err(Error::UnknownParameter {
                    entry: self.name.to_string(),
                    param: key.clone(),
                });
            }
        }
        let variant = match params.variant() {
            None => self.variants.first().copied(),
            Some(v) => {
                Some(
                    *self
                        .variants
                        .iter()
                        .find(|&&x| x == v)
                        .ok_or_else(|| Error::UnknownVariant {
                            entry: self.name.to_string(),
                            variant: v.to_string(),
                        })?,
                )
            }
        };
        let values = self
            .params
            .iter()
            .map(|p| (p.name, params.get(p.name).unwrap_or(p.default)))
            .collect();
        Ok(Resolved { values, variant })
    }

    pub fn build(&self, params: &Params) -> Result<MetricLieAlgebra> {
        let r = self.resolve(params)?;
        Ok((self.builder)(&r)?.with_label(self.name))
    }

    pub fn build_resolved(&self, r: &Resolved) -> Result<MetricLieAlgebra> {
        Ok((self.builder)(r)?.with_label(self.name))
    }

    pub fn expected_verdict(&self) -> Option<&ExpectedVerdict> {
        self.verdict.as_ref()
    }

    /// Closed-form spectrum of the curvature operator where one is recorded.
    pub fn expected_spectrum(&self, r: &Resolved) -> Option<Vec<f64>> {
        self.spectrum.and_then(|f| f(r))
    }

    /// Random parameters satisfying the restrictions of `variant` (default
    /// variant when `None`).
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, variant: Option<&'static str>) -> Resolved {
        let variant = variant.or_else(|| self.variants.first().copied());
        loop {
            let values: BTreeMap<&'static str, f64> = self
                .params
                .iter()
                .map(|p| {
                    let x = match p.domain {
                        Domain::Positive => rng.random_range(0.25..3.0),
                        Domain::Real => rng.random_range(-2.0..2.0),
                    };
                    (p.name, x)
                })
                .collect();
            let mut r = Resolved { values, variant };
            if self.name == "milnor-nonuni" {
                // solve ac + bd = 0 for c
                let (a, b, d) = (r.get("a"), r.get("b"), r.get("d"));
                r.values.insert("c", -b * d / a);
            }
            if (self.builder)(&r).is_ok() {
                return r;
            }
        }
    }
}

fn algebra(dim: usize, entries: &[(usize, usize, usize, f64)]) -> Result<MetricLieAlgebra> {
    let brackets: Vec<Bracket> = entries
        .iter()
        .map(|&(i, j, k, v)| Bracket::new(i, j, k, v))
        .collect();
    MetricLieAlgebra::new(dim, &brackets)
}

fn require(ok: bool, text: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ConstraintViolation(text.to_string()))
    }
}

fn positive(r: &Resolved, key: &str) -> Result<f64> {
    let x = r.get(key);
    require(x > 0.0, &format!("{key} > 0"))?;
    Ok(x)
}

fn milnor_residual_zero(kind: MilnorKind, params: &[f64]) -> bool {
    milnor_system_residual(kind, params)
        .map(|r| r.iter().all(|x| x.abs() < MILNOR_ZERO_EPS))
        .unwrap_or(false)
}

fn b_is_zero(r: &Resolved) -> bool {
    r.get("b").abs() < RESTRICTION_EPS
}

static ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "R^3",
        dim: 3,
        constants: "C_{i,j}^k = 0",
        params: &[],
        variants: &[],
        restrictions: &[],
        builder: |_| MetricLieAlgebra::abelian(3),
        verdict: Some(ExpectedVerdict::fixed(true)),
        spectrum: None,
    },
    CatalogEntry {
        name: "R^2xso(2)",
        dim: 3,
        constants: "C_{1,2}^3 = C_{3,1}^2 = a",
        params: &[pos("a", 1.0)],
        variants: &[],
        restrictions: &["a > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            algebra(3, &[(1, 2, 3, a), (3, 1, 2, a)])
        },
        verdict: Some(ExpectedVerdict::fixed(true)),
        spectrum: None,
    },
    CatalogEntry {
        name: "su(2)",
        dim: 3,
        constants: "C_{1,2}^3 = C_{2,3}^1 = C_{3,1}^2 = a",
        params: &[pos("a", 1.0)],
        variants: &[],
        restrictions: &["a > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            algebra(3, &[(1, 2, 3, a), (2, 3, 1, a), (3, 1, 2, a)])
        },
        verdict: Some(ExpectedVerdict::fixed(true)),
        spectrum: None,
    },
    CatalogEntry {
        name: "milnor-uni",
        dim: 3,
        constants: "C_{1,2}^3 = a, C_{2,3}^1 = c, C_{3,1}^2 = b",
        params: &[real("a", 1.0), real("b", 1.0), real("c", 1.0)],
        variants: &[],
        restrictions: &[],
        builder: |r| {
            algebra(3, &[(1, 2, 3, r.get("a")), (2, 3, 1, r.get("c")), (3, 1, 2, r.get("b"))])
        },
        verdict: Some(ExpectedVerdict::when(
            "(a-b)(a+b-c)^2 = (c-a)(a-b+c)^2 = (c-b)(a-b-c)^2 = 0",
            |r| milnor_residual_zero(MilnorKind::Unimodular, &[r.get("a"), r.get("b"), r.get("c")]),
            false,
        )),
        spectrum: None,
    },
    CatalogEntry {
        name: "milnor-nonuni",
        dim: 3,
        constants: "C_{1,2}^2 = a, C_{1,2}^3 = b, C_{1,3}^2 = c, C_{1,3}^3 = d",
        params: &[real("a", 1.0), real("b", 1.0), real("c", -1.0), real("d", 1.0)],
        variants: &[],
        restrictions: &["a + d != 0", "ac + bd = 0"],
        builder: |r| {
            let p = [r.get("a"), r.get("b"), r.get("c"), r.get("d")];
            milnor_system_residual(MilnorKind::Nonunimodular, &p)?;
            algebra(3, &[(1, 2, 2, p[0]), (1, 2, 3, p[1]), (1, 3, 2, p[2]), (1, 3, 3, p[3])])
        },
        verdict: Some(ExpectedVerdict::when(
            "(b-c)(a^2+b^2-c^2-d^2) = (b+c)(a^2+b^2-ad+bc) = d(a^2+b^2-ad+bc)^2 = a(c^2+d^2-ad+bc) = (b+c)(c^2+d^2-ad+bc) = 0",
            |r| {
                milnor_residual_zero(
                    MilnorKind::Nonunimodular,
                    &[r.get("a"), r.get("b"), r.get("c"), r.get("d")],
                )
            },
            false,
        )),
        spectrum: None,
    },
    CatalogEntry {
        name: "g_I",
        dim: 3,
        constants: "C_{1,2}^2 = C_{1,3}^3 = a",
        params: &[pos("a", 1.0)],
        variants: &[],
        restrictions: &["a > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            algebra(3, &[(1, 2, 2, a), (1, 3, 3, a)])
        },
        verdict: Some(ExpectedVerdict::fixed(true)),
        spectrum: None,
    },
    CatalogEntry {
        name: "g_D",
        dim: 3,
        constants: "C_{1,2}^2 = C_{1,3}^3 = a, C_{1,2}^3 = -C_{1,3}^2 = b (variant alt: C_{1,3}^2 = a)",
        params: &[pos("a", 1.0), pos("b", 1.0)],
        variants: &["rotation", "alt"],
        restrictions: &["a > 0", "b > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            if r.variant == Some("alt") {
                return algebra(3, &[(1, 3, 2, a)]);
            }
            let b = positive(r, "b")?;
            algebra(3, &[(1, 2, 2, a), (1, 3, 3, a), (1, 2, 3, b), (1, 3, 2, -b)])
        },
        verdict: Some(ExpectedVerdict::fixed(true).for_variant("rotation")),
        spectrum: None,
    },
    CatalogEntry {
        name: "A_2+2A_1",
        dim: 4,
        constants: "C_{1,2}^1 = a, C_{1,2}^4 = b",
        params: &[pos("a", 1.0), real("b", 1.0)],
        variants: &[],
        restrictions: &["a > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            algebra(4, &[(1, 2, 1, a), (1, 2, 4, r.get("b"))])
        },
        verdict: Some(ExpectedVerdict::when("b = 0", b_is_zero, false)),
        spectrum: None,
    },
    CatalogEntry {
        name: "A_{3,1}+A_1",
        dim: 4,
        constants: "C_{2,3}^1 = a",
        params: &[pos("a", 1.0)],
        variants: &[],
        restrictions: &["a > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            algebra(4, &[(2, 3, 1, a)])
        },
        verdict: Some(ExpectedVerdict::fixed(false)),
        spectrum: None,
    },
    CatalogEntry {
        name: "A_{3,3}+A_1",
        dim: 4,
        constants: "C_{1,3}^1 = C_{2,3}^2 = a, C_{3,4}^1 = b",
        params: &[pos("a", 1.0), real("b", 1.0)],
        variants: &[],
        restrictions: &["a > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            algebra(4, &[(1, 3, 1, a), (2, 3, 2, a), (3, 4, 1, r.get("b"))])
        },
        verdict: Some(ExpectedVerdict::when("b = 0", b_is_zero, true)),
        spectrum: Some(|r| {
            let k = -r.get("a").powi(2);
            b_is_zero(r).then(|| vec![k, k, 0.0, k, 0.0, 0.0])
        }),
    },
    CatalogEntry {
        name: "4A_1",
        dim: 4,
        constants: "C_{i,j}^k = 0",
        params: &[],
        variants: &[],
        restrictions: &[],
        builder: |_| MetricLieAlgebra::abelian(4),
        verdict: None,
        spectrum: Some(|_| Some(vec![0.0; 6])),
    },
    CatalogEntry {
        name: "2A_2",
        dim: 4,
        constants: "C_{1,2}^2 = a, C_{3,4}^4 = b",
        params: &[pos("a", 1.0), pos("b", 1.0)],
        variants: &[],
        restrictions: &["a > 0", "b > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            let b = positive(r, "b")?;
            algebra(4, &[(1, 2, 2, a), (3, 4, 4, b)])
        },
        verdict: Some(ExpectedVerdict::fixed(true)),
        spectrum: None,
    },
    CatalogEntry {
        name: "A_{3,6}+A_1",
        dim: 4,
        constants: "C_{2,3}^1 = c, C_{1,3}^2 = -c",
        params: &[pos("c", 1.0)],
        variants: &[],
        restrictions: &["c > 0"],
        builder: |r| {
            let c = positive(r, "c")?;
            algebra(4, &[(2, 3, 1, c), (1, 3, 2, -c)])
        },
        verdict: None,
        spectrum: Some(|_| Some(vec![0.0; 6])),
    },
    CatalogEntry {
        name: "A_{3,7}+A_1",
        dim: 4,
        constants: "C_{1,3}^1 = C_{2,3}^2 = alpha a, C_{2,3}^1 = -C_{1,3}^2 = a",
        params: &[pos("a", 1.0), pos("alpha", 2.0)],
        variants: &[],
        restrictions: &["a > 0", "alpha > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            let al = positive(r, "alpha")?;
            algebra(4, &[(1, 3, 1, al * a), (2, 3, 2, al * a), (2, 3, 1, a), (1, 3, 2, -a)])
        },
        verdict: Some(ExpectedVerdict::fixed(true)),
        spectrum: Some(|r| {
            let k = -(r.get("alpha") * r.get("a")).powi(2);
            Some(vec![k, k, 0.0, k, 0.0, 0.0])
        }),
    },
    CatalogEntry {
        name: "A_{3,9}+A_1",
        dim: 4,
        constants: "C_{1,3}^2 = a s, C_{1,2}^3 = C_{2,3}^1 = -a s, C_{2,4}^1 = -C_{1,4}^2 = a m s, s = sqrt(1+m^2)",
        params: &[pos("a", 1.0), real("m", 1.0)],
        variants: &[],
        restrictions: &["a > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            let m = r.get("m");
            let s = (1.0 + m * m).sqrt();
            algebra(
                4,
                &[(1, 3, 2, a * s), (1, 2, 3, -a * s), (2, 3, 1, -a * s), (2, 4, 1, a * m * s), (1, 4, 2, -a * m * s)],
            )
        },
        verdict: Some(ExpectedVerdict::fixed(true)),
        spectrum: Some(|r| {
            let m = r.get("m");
            let k = r.get("a").powi(2) * (1.0 + m * m) / 4.0;
            Some(vec![k, k, 0.0, k, 0.0, 0.0])
        }),
    },
    CatalogEntry {
        name: "A_{4,5}",
        dim: 4,
        constants: "C_{1,4}^1 = C_{2,4}^2 = C_{3,4}^3 = a",
        params: &[pos("a", 1.0)],
        variants: &[],
        restrictions: &["a > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            algebra(4, &[(1, 4, 1, a), (2, 4, 2, a), (3, 4, 3, a)])
        },
        verdict: None,
        spectrum: Some(|r| Some(vec![-r.get("a").powi(2); 6])),
    },
    CatalogEntry {
        name: "A_{4,6}",
        dim: 4,
        constants: "table5-first: C_{1,4}^1 = alpha a, C_{2,4}^3 = -C_{3,4}^2 = -a; \
                    table5-second: C_{1,4}^1 = C_{2,4}^2 = C_{3,4}^3 = beta a, C_{2,4}^3 = -C_{3,4}^2 = -a",
        params: &[pos("a", 1.0), pos("alpha", 2.0), pos("beta", 1.0)],
        variants: &["table5-first", "table5-second"],
        restrictions: &["a > 0", "table5-first: alpha != 1", "table5-second: beta > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            if r.variant == Some("table5-second") {
                let b = positive(r, "beta")?;
                algebra(
                    4,
                    &[(1, 4, 1, b * a), (2, 4, 2, b * a), (3, 4, 3, b * a), (2, 4, 3, -a), (3, 4, 2, a)],
                )
            } else {
                let al = r.get("alpha");
                require((al - 1.0).abs() > RESTRICTION_EPS, "alpha != 1")?;
                algebra(4, &[(1, 4, 1, al * a), (2, 4, 3, -a), (3, 4, 2, a)])
            }
        },
        verdict: Some(ExpectedVerdict::fixed(true).for_variant("table5-first")),
        spectrum: Some(|r| {
            (r.variant == Some("table5-second")).then(|| vec![-(r.get("beta") * r.get("a")).powi(2); 6])
        }),
    },
    CatalogEntry {
        name: "A_{4,9}",
        dim: 4,
        constants: "C_{1,4}^1 = C_{2,3}^1 = 2a, C_{2,4}^2 = C_{3,4}^3 = a",
        params: &[pos("a", 1.0)],
        variants: &[],
        restrictions: &["a > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            algebra(4, &[(1, 4, 1, 2.0 * a), (2, 3, 1, 2.0 * a), (2, 4, 2, a), (3, 4, 3, a)])
        },
        verdict: None,
        spectrum: None,
    },
    CatalogEntry {
        name: "A_{4,11}",
        dim: 4,
        constants: "C_{1,4}^1 = C_{2,3}^1 = 2 a alpha, C_{2,4}^2 = C_{3,4}^3 = a alpha, C_{2,4}^3 = -C_{3,4}^2 = -a",
        params: &[pos("a", 1.0), pos("alpha", 2.0)],
        variants: &[],
        restrictions: &["a > 0", "alpha > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            let al = positive(r, "alpha")?;
            algebra(
                4,
                &[
                    (1, 4, 1, 2.0 * a * al),
                    (2, 3, 1, 2.0 * a * al),
                    (2, 4, 2, a * al),
                    (3, 4, 3, a * al),
                    (2, 4, 3, -a),
                    (3, 4, 2, a),
                ],
            )
        },
        verdict: None,
        spectrum: None,
    },
    CatalogEntry {
        name: "A_{4,12}",
        dim: 4,
        constants: "C_{1,3}^1 = C_{2,3}^2 = r, C_{2,4}^1 = -C_{1,4}^2 = a d / r, C_{2,3}^1 = -C_{1,3}^2 = b d / r, r = sqrt(a^2+b^2)",
        params: &[pos("a", 1.0), real("b", 1.0), pos("d", 1.0)],
        variants: &[],
        restrictions: &["a > 0", "d > 0"],
        builder: |r| {
            let a = positive(r, "a")?;
            let d = positive(r, "d")?;
            let b = r.get("b");
            let s = (a * a + b * b).sqrt();
            algebra(
                4,
                &[
                    (1, 3, 1, s),
                    (2, 3, 2, s),
                    (2, 4, 1, a * d / s),
                    (1, 4, 2, -a * d / s),
                    (2, 3, 1, b * d / s),
                    (1, 3, 2, -b * d / s),
                ],
            )
        },
        verdict: Some(ExpectedVerdict::fixed(true)),
        spectrum: Some(|r| {
            let k = -(r.get("a").powi(2) + r.get("b").powi(2));
            Some(vec![k, k, 0.0, k, 0.0, 0.0])
        }),
    },
];

pub fn list_entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

pub fn build(name: &str, params: &Params) -> Result<MetricLieAlgebra> {
    entry(name)?.build(params)
}

pub fn expected_verdict(name: &str) -> Result<&'static ExpectedVerdict> {
    entry(name)?
        .expected_verdict()
        .ok_or_else(|| Error::NoVerdictRecorded(name.to_string()))
}
