use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use magic_core::analysis::{
    check_lemma1, find_permutation_cycles, is_aperiodic_with, is_in_family_with, verify_fooling_set, FoolingSet,
};
use magic_core::automata::{determinize_with, parse_automaton, Automaton};
use magic_core::oracle::{spectrum_search, SearchBudget};
use magic_core::verify::{render_bounds_table, reports_to_csv, summary_line, verify_grid, WitnessSpec};
use magic_core::{minimize, Dfa, Error, Limits};
use serde::Serialize;

use crate::args::{BoundsArgs, BoundsFormat, Caps, CheckArgs, GenArgs, Property, SpectrumArgs, VerifyArgs};
use crate::evidence;
use crate::Outcome;

const MAX_SUBSETS_ENV: &str = "MAGIC_MAX_SUBSETS";

/// Flag, then environment, then the library default.
fn limits(caps: &Caps) -> anyhow::Result<Limits> {
    let mut l = Limits::default();
    if let Ok(v) = std::env::var(MAX_SUBSETS_ENV) {
        l.max_subsets = v
            .trim()
            .parse()
            .with_context(|| format!("{MAX_SUBSETS_ENV}={v:?} is not a number"))?;
    }
    if let Some(v) = caps.max_subsets {
        l.max_subsets = v;
    }
    if let Some(v) = caps.max_monoid {
        l.max_monoid = v;
    }
    Ok(l)
}

fn emit(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn pretty_json(value: &impl Serialize) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn gen(a: GenArgs) -> anyhow::Result<Outcome> {
    let limits = limits(&a.caps)?;
    let spec = WitnessSpec::new(a.family, a.n, a.alpha)?;
    let w = spec.build()?;
    let measured = minimize(&determinize_with(&w.nfa, &limits)?).state_count() as u64;
    if measured != a.alpha {
        eprintln!(
            "generator {} produced an automaton with {measured} DFA states, expected {}",
            spec.generator, a.alpha
        );
        return Ok(Outcome::Fail);
    }
    if let Some(p) = &a.mnfa {
        let m = w
            .mnfa
            .as_ref()
            .with_context(|| format!("generator {} has no multi-entry automaton", spec.generator))?;
        emit(Some(p), &m.to_text())?;
    }
    emit(a.output.as_deref(), &w.nfa.to_text())?;
    Ok(Outcome::Pass)
}

pub fn verify(a: VerifyArgs) -> anyhow::Result<Outcome> {
    let limits = limits(&a.caps)?;
    let reports = verify_grid(a.family, &a.n.0, a.alpha.as_slice(), &limits, a.timing)?;
    emit(a.output.as_deref(), &pretty_json(&reports)?)?;
    if let Some(p) = &a.csv {
        emit(Some(p), &reports_to_csv(&reports))?;
    }
    let summary = summary_line(&reports);
    if a.output.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    for r in reports.iter().filter(|r| !r.pass) {
        eprintln!(
            "failed: {} n={} alpha={} measured={}",
            r.spec.family, r.spec.n, r.spec.alpha, r.measured_alpha
        );
    }
    Ok(if reports.iter().all(|r| r.pass) {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

pub fn spectrum(a: SpectrumArgs) -> anyhow::Result<Outcome> {
    let budget = if a.exhaustive {
        SearchBudget::Exhaustive
    } else {
        SearchBudget::Sampled {
            seed: a.seed,
            samples: a.samples,
        }
    };
    let result = spectrum_search(a.family, a.n, a.sigma, budget)?;
    emit(a.output.as_deref(), &pretty_json(&result)?)?;
    let alphas: Vec<String> = result.alphas().iter().map(|x| x.to_string()).collect();
    eprintln!("achieved: {{{}}}", alphas.join(", "));
    Ok(Outcome::Pass)
}

fn sidecar_path(input: &Path) -> PathBuf {
    let mut p = input.as_os_str().to_owned();
    p.push(".fool");
    PathBuf::from(p)
}

fn verdict(holds: bool, evidence: &[String]) -> Outcome {
    println!("{holds}");
    for line in evidence {
        println!("{line}");
    }
    if holds {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

pub fn check(a: CheckArgs) -> anyhow::Result<Outcome> {
    let limits = limits(&a.caps)?;
    let text = std::fs::read_to_string(&a.input).with_context(|| format!("reading {}", a.input.display()))?;
    let automaton = parse_automaton(&text)?;
    let alphabet = automaton.alphabet().clone();
    let min = || -> anyhow::Result<Dfa> { Ok(minimize(&*automaton.as_dfa(&limits)?)) };

    match a.property {
        Property::Family(f) => {
            let d = min()?;
            let holds = is_in_family_with(&d, f, &limits)?;
            let evidence = if holds {
                vec![]
            } else {
                vec![evidence::family_counterexample(&d, f, limits.max_monoid)]
            };
            Ok(verdict(holds, &evidence))
        }
        Property::Aperiodic => {
            let d = min()?;
            if is_aperiodic_with(&d, &limits)? {
                return Ok(verdict(true, &[]));
            }
            let cycles = find_permutation_cycles(&d, limits.max_monoid)?;
            let evidence: Vec<String> = cycles
                .first()
                .map(|c| evidence::cycle_text(c, &alphabet))
                .into_iter()
                .collect();
            Ok(verdict(false, &evidence))
        }
        Property::Lemma1 => {
            // the subset labels of the determinized input are what the condition is about
            let nfa = automaton.as_nfa();
            let d = determinize_with(&nfa, &limits)?;
            let cycles = find_permutation_cycles(&d, limits.max_monoid)?;
            for c in &cycles {
                if !check_lemma1(c)? {
                    return Ok(verdict(false, &[evidence::cycle_text(c, &alphabet)]));
                }
            }
            Ok(verdict(true, &[format!("{} permutation cycles checked", cycles.len())]))
        }
        Property::FoolingSet => {
            let path = a.fooling_set.clone().unwrap_or_else(|| sidecar_path(&a.input));
            let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            let set = FoolingSet::from_text(&text, &alphabet)?;
            if set.is_empty() {
                return Err(Error::Input(format!("{} holds no pairs", path.display())).into());
            }
            let v = verify_fooling_set(&min()?, &set)?;
            let evidence = match v.counterexample {
                None => vec![format!("nondeterministic state lower bound {}", v.bound)],
                Some((i, j)) if i == j => vec![format!("pair {i} does not spell an accepted word")],
                Some((i, j)) => vec![format!("pairs {i} and {j} violate the fooling condition")],
            };
            Ok(verdict(v.counterexample.is_none(), &evidence))
        }
    }
}

pub fn bounds(a: BoundsArgs) -> anyhow::Result<Outcome> {
    match a.format {
        BoundsFormat::Text => emit(None, &render_bounds_table(a.n))?,
        BoundsFormat::Json => {
            let rows = magic_core::verify::bounds_table()
                .iter()
                .map(|b| {
                    Ok(BoundsRow {
                        family: b.class.name(),
                        lower: b.lower,
                        upper: b.upper,
                        interval: a.n.map(|n| b.interval(n)).transpose()?,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            emit(None, &pretty_json(&rows)?)?
        }
    }
    Ok(Outcome::Pass)
}

#[derive(Serialize)]
struct BoundsRow {
    family: &'static str,
    lower: &'static str,
    upper: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    interval: Option<(u64, u64)>,
}
