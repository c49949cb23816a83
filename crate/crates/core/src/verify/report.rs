use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{is_in_family_with, verify_fooling_set, Family, FoolingSet};
use crate::automata::{determinize_with, minimize, Limits, Nfa};
use crate::decomposition::{
    decompose_alpha, exponential_params, quadratic_params, AlphaDecomposition, ExponentialParams, QuadraticParams,
};
use crate::error::{Error, Result};
use crate::oracle::certify_nfa_lower_bound;
use crate::verify::bounds::LanguageClass;
use crate::witness::{
    boundary_fooling_set, gen_boundary, gen_finite_exponential, gen_finite_quadratic, gen_infix_closed, gen_jjs,
    gen_suffix_closed, in_quadratic_range, infix_closed_fooling_set, suffix_closed_fooling_set,
};

/// Parameters a generator derived from `(n, alpha)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessParams {
    None,
    Decomposition {
        #[serde(flatten)]
        decomposition: AlphaDecomposition,
        rendered: String,
    },
    Quadratic(QuadraticParams),
    Exponential(ExponentialParams),
}

/// Which generator produces the witness for `(class, n, alpha)`, and with what
/// parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSpec {
    pub family: LanguageClass,
    pub n: u32,
    pub alpha: u64,
    pub generator: String,
    pub parameters: WitnessParams,
}

/// A generated witness and its lower-bound evidence.
#[derive(Clone, Debug)]
pub struct Witness {
    pub nfa: Nfa,
    /// The all-initial all-accepting automaton of the infix-closed construction.
    pub mnfa: Option<Nfa>,
    pub fooling_set: Option<FoolingSet>,
}

fn decomposition(n: u32, alpha: u64) -> Result<WitnessParams> {
    let d = decompose_alpha(n, alpha)?;
    Ok(WitnessParams::Decomposition {
        rendered: d.to_string(),
        decomposition: d,
    })
}

impl WitnessSpec {
    /// Resolves the generator; fails with an out-of-range error outside the
    /// bounds table.
    pub fn new(family: LanguageClass, n: u32, alpha: u64) -> Result<WitnessSpec> {
        family.bounds().check(n, alpha)?;
        let (generator, parameters) = match family {
            LanguageClass::General if alpha == n as u64 || alpha == 1u64 << n => ("boundary", WitnessParams::None),
            LanguageClass::General => ("jjs", decomposition(n, alpha)?),
            LanguageClass::Family(Family::InfixClosed) if n == 1 => ("infix-closed", WitnessParams::None),
            LanguageClass::Family(Family::InfixClosed) => ("infix-closed", decomposition(n, alpha)?),
            LanguageClass::Family(Family::SuffixClosed) if alpha == n as u64 => {
                ("suffix-closed-catalog", WitnessParams::None)
            }
            LanguageClass::Family(Family::SuffixClosed) => ("infix-closed", decomposition(n, alpha)?),
            LanguageClass::Family(Family::Finite) if alpha == n as u64 + 1 => ("finite-chain", WitnessParams::None),
            LanguageClass::Family(Family::Finite) if in_quadratic_range(n, alpha) => (
                "finite-quadratic",
                WitnessParams::Quadratic(quadratic_params(n, alpha)?),
            ),
            LanguageClass::Family(Family::Finite) => (
                "finite-exponential",
                WitnessParams::Exponential(exponential_params(n, alpha)?),
            ),
            LanguageClass::Family(f) => {
                return Err(Error::NotSupported(format!(
                    "no generator for {f}; use spectrum search"
                )))
            }
        };
        Ok(WitnessSpec {
            family,
            n,
            alpha,
            generator: generator.to_string(),
            parameters,
        })
    }

    pub fn build(&self) -> Result<Witness> {
        let (n, alpha) = (self.n, self.alpha);
        let k = match &self.parameters {
            WitnessParams::Decomposition { decomposition, .. } => Some(decomposition.k),
            _ => None,
        };
        let plain = |nfa: Nfa| Witness {
            nfa,
            mnfa: None,
            fooling_set: None,
        };
        Ok(match self.generator.as_str() {
            "boundary" => Witness {
                nfa: gen_boundary(n, alpha)?,
                mnfa: None,
                fooling_set: (alpha == n as u64).then(|| boundary_fooling_set(n)),
            },
            "jjs" => plain(gen_jjs(n, alpha)?),
            "infix-closed" => {
                let w = gen_infix_closed(n, alpha)?;
                Witness {
                    nfa: w.a2,
                    mnfa: (self.family == LanguageClass::Family(Family::InfixClosed)).then_some(w.a1),
                    fooling_set: k.map(|k| infix_closed_fooling_set(n, k)),
                }
            }
            "suffix-closed-catalog" => Witness {
                nfa: gen_suffix_closed(n, alpha)?,
                mnfa: None,
                fooling_set: Some(suffix_closed_fooling_set(n)),
            },
            "finite-chain" | "finite-quadratic" => plain(gen_finite_quadratic(n, alpha)?),
            "finite-exponential" => plain(gen_finite_exponential(n, alpha)?),
            other => return Err(Error::input(format!("unknown generator {other:?}"))),
        })
    }
}

/// How the claim "the witness is a minimal n-state NFA" is supported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NfaMinimality {
    /// No smaller NFA exists, by exhaustive search.
    ExhaustiveCertified,
    /// A fooling set of size n.
    FoolingSetBound,
    /// Taken from the construction's proof.
    PaperAsserted,
    /// Exhaustive search found a smaller NFA.
    Refuted,
}

/// Outcome of generating and checking one `(class, n, alpha)` cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub spec: WitnessSpec,
    pub measured_alpha: u64,
    pub family_checks: BTreeMap<Family, bool>,
    pub fooling_bound: Option<usize>,
    pub nfa_minimality: NfaMinimality,
    pub pass: bool,
    /// Wall-clock milliseconds; left out unless requested so that reports are
    /// reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<u64>,
}

/// Exhaustive minimality certification is attempted up to this many states.
pub const EXHAUSTIVE_MINIMALITY_MAX_N: u32 = 3;

/// Generates the witness, measures its minimal DFA and runs the family checks.
pub fn verify_cell(spec: &WitnessSpec, limits: &Limits, timing: bool) -> Result<VerificationReport> {
    let start = Instant::now();
    let w = spec.build()?;
    let dfa = minimize(&determinize_with(&w.nfa, limits)?);
    let measured_alpha = dfa.state_count() as u64;
    let mut family_checks = BTreeMap::new();
    for f in spec.family.required_families() {
        family_checks.insert(f, is_in_family_with(&dfa, f, limits)?);
    }
    let fooling_bound = match &w.fooling_set {
        Some(s) => Some(verify_fooling_set(&dfa, s)?.bound),
        None => None,
    };
    let exhaustive = if spec.n <= EXHAUSTIVE_MINIMALITY_MAX_N {
        match certify_nfa_lower_bound(&dfa, spec.n as usize) {
            Ok(v) => Some(v),
            Err(Error::Feasibility(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let nfa_minimality = match exhaustive {
        Some(true) => NfaMinimality::ExhaustiveCertified,
        Some(false) => NfaMinimality::Refuted,
        None if fooling_bound == Some(spec.n as usize) => NfaMinimality::FoolingSetBound,
        None => NfaMinimality::PaperAsserted,
    };
    let pass = measured_alpha == spec.alpha && family_checks.values().all(|&v| v);
    Ok(VerificationReport {
        spec: spec.clone(),
        measured_alpha,
        family_checks,
        fooling_bound,
        nfa_minimality,
        pass,
        timing: timing.then(|| start.elapsed().as_millis() as u64),
    })
}

/// All constructive cells of `class` for the given `n` values and alphas
/// (`None` means every constructive alpha), verified in parallel and returned
/// ordered by `(n, alpha)`.
pub fn verify_grid(
    class: LanguageClass,
    ns: &[u32],
    alphas: Option<&[u64]>,
    limits: &Limits,
    timing: bool,
) -> Result<Vec<VerificationReport>> {
    let mut specs = Vec::new();
    for &n in ns {
        let list = match alphas {
            Some(list) => list.to_vec(),
            None => class.bounds().constructive(n)?,
        };
        for alpha in list {
            specs.push(WitnessSpec::new(class, n, alpha)?);
        }
    }
    specs.sort_by_key(|s| (s.n, s.alpha));
    specs.par_iter().map(|s| verify_cell(s, limits, timing)).collect()
}

/// CSV projection: `family,n,alpha,measured,pass,ms`.
pub fn reports_to_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("family,n,alpha,measured,pass,ms\n");
    for r in reports {
        let ms = r.timing.map(|t| t.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.spec.family, r.spec.n, r.spec.alpha, r.measured_alpha, r.pass, ms
        ));
    }
    out
}

/// `PASS c/t` or `FAIL c/t` over the reports.
pub fn summary_line(reports: &[VerificationReport]) -> String {
    let passed = reports.iter().filter(|r| r.pass).count();
    let word = if passed == reports.len() { "PASS" } else { "FAIL" };
    format!("{word} {passed}/{}", reports.len())
}
