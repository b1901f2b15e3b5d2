use std::fmt;
use std::str::FromStr;

use super::surd::QuadraticSurd;
use crate::error::{Error, Result};

/// Supplies the partial quotients a_1, a_2, … of the base α ∈ (0,1).
///
/// Textual form (used by the CLI):
/// `golden`, `silver`, `const:<a>`, `periodic:<pre>;<per>`, `explicit:<a1,a2,...>`,
/// `surd:<d>,<p>,<q>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartialQuotientSource {
    Constant(u64),
    Periodic {
        preperiod: Vec<u64>,
        period: Vec<u64>,
    },
    /// A finite prefix. Asking past its end is [`Error::QuotientsExhausted`].
    Explicit(Vec<u64>),
    QuadraticSurd(QuadraticSurd),
}

impl PartialQuotientSource {
    pub fn golden() -> Self {
        Self::Constant(1)
    }

    pub fn silver() -> Self {
        Self::Constant(2)
    }

    pub fn constant(a: u64) -> Result<Self> {
        if a == 0 {
            return Err(Error::ZeroQuotient(1));
        }
        Ok(Self::Constant(a))
    }

    pub fn periodic(preperiod: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::BaseSpec {
                spec: format!("periodic:{};", join(&preperiod)),
                reason: "period must be nonempty".into(),
            });
        }
        check_positive(preperiod.iter().chain(&period))?;
        Ok(Self::Periodic { preperiod, period })
    }

    pub fn explicit(quotients: Vec<u64>) -> Result<Self> {
        if quotients.is_empty() {
            return Err(Error::BaseSpec {
                spec: "explicit:".into(),
                reason: "quotient list must be nonempty".into(),
            });
        }
        check_positive(&quotients)?;
        Ok(Self::Explicit(quotients))
    }

    pub fn surd(d: u64, p: i64, q: i64) -> Result<Self> {
        QuadraticSurd::new(d, p, q).map(Self::QuadraticSurd)
    }

    /// Returns a_k for k ≥ 1.
    ///
    /// # Panics
    ///
    /// If `k == 0`; the base lies in (0,1) so a_0 is not part of the stream.
    pub fn partial_quotient(&self, k: usize) -> Result<u64> {
        assert!(k >= 1, "partial quotients are indexed from 1");
        let a = match self {
            Self::Constant(a) => *a,
            Self::Periodic { preperiod, period } => {
                let i = k - 1;
                if i < preperiod.len() {
                    preperiod[i]
                } else {
                    period[(i - preperiod.len()) % period.len()]
                }
            }
            Self::Explicit(list) => *list.get(k - 1).ok_or(Error::QuotientsExhausted {
                index: k,
                available: list.len(),
            })?,
            Self::QuadraticSurd(s) => s.quotient(k),
        };
        if a == 0 {
            return Err(Error::ZeroQuotient(k));
        }
        Ok(a)
    }
}

fn check_positive<'a>(quotients: impl IntoIterator<Item = &'a u64>) -> Result<()> {
    match quotients.into_iter().position(|&a| a == 0) {
        Some(i) => Err(Error::ZeroQuotient(i + 1)),
        None => Ok(()),
    }
}

fn join(list: &[u64]) -> String {
    list.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for PartialQuotientSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Constant(1) => f.write_str("golden"),
            Self::Constant(2) => f.write_str("silver"),
            Self::Constant(a) => write!(f, "const:{a}"),
            Self::Periodic { preperiod, period } => {
                write!(f, "periodic:{};{}", join(preperiod), join(period))
            }
            Self::Explicit(list) => write!(f, "explicit:{}", join(list)),
            Self::QuadraticSurd(s) => s.fmt(f),
        }
    }
}

impl FromStr for PartialQuotientSource {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = |reason: &str| Error::BaseSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let naturals = |list: &str| -> Result<Vec<u64>> {
            if list.trim().is_empty() {
                return Ok(Vec::new());
            }
            list.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|_| bad(&format!("`{t}` is not a natural number")))
                })
                .collect()
        };

        match spec.trim() {
            "golden" => return Ok(Self::golden()),
            "silver" => return Ok(Self::silver()),
            _ => {}
        }
        let (tag, body) = spec.trim().split_once(':').ok_or_else(|| bad("unknown base"))?;
        match tag {
            "const" => {
                let a = body.trim().parse::<u64>().map_err(|_| bad("expected const:<a>"))?;
                Self::constant(a)
            }
            "periodic" => {
                let (pre, per) = body
                    .split_once(';')
                    .ok_or_else(|| bad("expected periodic:<pre>;<per>"))?;
                Self::periodic(naturals(pre)?, naturals(per)?).map_err(|e| match e {
                    Error::BaseSpec { reason, .. } => bad(&reason),
                    other => other,
                })
            }
            "explicit" => Self::explicit(naturals(body)?).map_err(|e| match e {
                Error::BaseSpec { reason, .. } => bad(&reason),
                other => other,
            }),
            "surd" => {
                let parts: Vec<&str> = body.split(',').map(str::trim).collect();
                let [d, p, q] = parts[..] else {
                    return Err(bad("expected surd:<d>,<p>,<q>"));
                };
                let d = d.parse::<u64>().map_err(|_| bad("d must be a natural number"))?;
                let p = p.parse::<i64>().map_err(|_| bad("p must be an integer"))?;
                let q = q.parse::<i64>().map_err(|_| bad("q must be an integer"))?;
                Self::surd(d, p, q)
            }
            _ => Err(bad("unknown base")),
        }
    }
}
