use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::analysis::Family;
use crate::decomposition::{exponential_alphas, quadratic_upper};
use crate::error::{Error, Result};
use crate::witness::mandl_dfa_size;

/// Regular languages in general, or one of the subregular families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LanguageClass {
    General,
    Family(Family),
}

impl LanguageClass {
    pub const ALL: [LanguageClass; 10] = [
        LanguageClass::General,
        LanguageClass::Family(Family::PrefixFree),
        LanguageClass::Family(Family::SuffixFree),
        LanguageClass::Family(Family::InfixFree),
        LanguageClass::Family(Family::PrefixClosed),
        LanguageClass::Family(Family::SuffixClosed),
        LanguageClass::Family(Family::InfixClosed),
        LanguageClass::Family(Family::Finite),
        LanguageClass::Family(Family::Star),
        LanguageClass::Family(Family::StarFree),
    ];

    pub fn name(self) -> &'static str {
        match self {
            LanguageClass::General => "general",
            LanguageClass::Family(f) => f.name(),
        }
    }

    pub fn family(self) -> Option<Family> {
        match self {
            LanguageClass::General => None,
            LanguageClass::Family(f) => Some(f),
        }
    }

    /// Families a witness of this class must belong to.
    pub fn required_families(self) -> Vec<Family> {
        match self {
            LanguageClass::General => Vec::new(),
            LanguageClass::Family(Family::Finite) => vec![Family::Finite, Family::StarFree],
            LanguageClass::Family(f) => vec![f],
        }
    }

    pub fn bounds(self) -> Bounds {
        use Family::*;
        let (lower, upper) = match self {
            LanguageClass::General => ("n", "2^n"),
            LanguageClass::Family(PrefixFree | SuffixFree) => ("n+1", "2^(n-1)+1"),
            LanguageClass::Family(InfixFree) => ("n+1", "2^(n-2)+2"),
            LanguageClass::Family(PrefixClosed) => ("n+1 (n for n=1)", "2^n"),
            LanguageClass::Family(InfixClosed) => ("n+1 (n for n=1)", "2^(n-1)+1"),
            LanguageClass::Family(SuffixClosed) => ("n", "2^(n-1)+1"),
            LanguageClass::Family(Finite) => ("n+1", "2^(n/2+1)-1 / 3*2^((n-1)/2)-1 (binary)"),
            LanguageClass::Family(Star | StarFree) => ("n", "2^n"),
        };
        Bounds {
            class: self,
            lower,
            upper,
        }
    }
}

impl fmt::Display for LanguageClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LanguageClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "general" {
            return Ok(LanguageClass::General);
        }
        s.parse().map(LanguageClass::Family)
    }
}

impl Serialize for LanguageClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for LanguageClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn pow2(e: u32) -> u64 {
    1u64 << e
}

/// The non-trivial range `[g(n), f(n)]` of one class. Outside it every alpha
/// is a trivial magic number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub class: LanguageClass,
    pub lower: &'static str,
    pub upper: &'static str,
}

impl Bounds {
    /// Inclusive interval for `n`.
    pub fn interval(&self, n: u32) -> Result<(u64, u64)> {
        use Family::*;
        if n == 0 || n > 62 {
            return Err(Error::input(format!("unsupported n = {n} (supported: 1..=62)")));
        }
        let n64 = n as u64;
        let closed_lower = if n == 1 { 1 } else { n64 + 1 };
        Ok(match self.class {
            LanguageClass::General => (n64, pow2(n)),
            LanguageClass::Family(PrefixFree | SuffixFree) => (n64 + 1, pow2(n - 1) + 1),
            LanguageClass::Family(InfixFree) => (n64 + 1, if n == 1 { 2 } else { pow2(n - 2) + 2 }),
            LanguageClass::Family(PrefixClosed) => (closed_lower, pow2(n)),
            LanguageClass::Family(InfixClosed) => (closed_lower, pow2(n - 1) + 1),
            LanguageClass::Family(SuffixClosed) => (n64, pow2(n - 1) + 1),
            LanguageClass::Family(Finite) => (n64 + 1, if n == 1 { 2 } else { mandl_dfa_size(n) }),
            LanguageClass::Family(Star | StarFree) => (n64, pow2(n)),
        })
    }

    pub fn interval_text(&self, n: u32) -> String {
        match self.interval(n) {
            Ok((lo, hi)) => format!("[{lo}, {hi}] ({} <= alpha <= {})", self.lower, self.upper),
            Err(e) => e.to_string(),
        }
    }

    /// The alphas for which a generator exists, ascending. Empty for classes
    /// covered by spectrum search only.
    pub fn constructive(&self, n: u32) -> Result<Vec<u64>> {
        let (lo, hi) = self.interval(n)?;
        let n64 = n as u64;
        Ok(match self.class {
            LanguageClass::General => (lo..=hi).collect(),
            LanguageClass::Family(Family::InfixClosed) if n == 1 => vec![1],
            LanguageClass::Family(Family::InfixClosed) => (n64 + 1..=pow2(n - 1)).collect(),
            LanguageClass::Family(Family::SuffixClosed) => {
                let mut v = if n <= 5 { vec![n64] } else { Vec::new() };
                if n >= 2 {
                    v.extend(n64 + 1..=pow2(n - 1));
                }
                v
            }
            LanguageClass::Family(Family::Finite) if n >= 2 => {
                let mut v: Vec<u64> = (n64 + 1..=quadratic_upper(n).max(n64 + 1)).collect();
                if n >= 3 {
                    v.extend(exponential_alphas(n));
                }
                v.sort_unstable();
                v.dedup();
                v
            }
            LanguageClass::Family(_) => Vec::new(),
        })
    }

    /// Range check used by every generator entry point.
    pub fn check(&self, n: u32, alpha: u64) -> Result<()> {
        if self.constructive(n)?.binary_search(&alpha).is_ok() {
            return Ok(());
        }
        let (lo, hi) = self.interval(n)?;
        let why = if alpha < lo || alpha > hi {
            format!("trivial range; non-trivial interval {}", self.interval_text(n))
        } else {
            format!("no construction for this alpha within {}", self.interval_text(n))
        };
        Err(Error::OutOfRange {
            n,
            alpha,
            interval: why,
        })
    }
}

/// All rows, one per class.
pub fn bounds_table() -> Vec<Bounds> {
    LanguageClass::ALL.iter().map(|c| c.bounds()).collect()
}

/// Plain-text rendering, with the concrete interval when `n` is given.
pub fn render_bounds_table(n: Option<u32>) -> String {
    let mut out = String::new();
    for b in bounds_table() {
        let line = match n.map(|n| b.interval(n)) {
            Some(Ok((lo, hi))) => format!("{:<14} {:<16} {:<40} [{lo}, {hi}]\n", b.class.name(), b.lower, b.upper),
            _ => format!("{:<14} {:<16} {}\n", b.class.name(), b.lower, b.upper),
        };
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
