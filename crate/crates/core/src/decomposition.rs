use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Certificate that `alpha = n - (k+1) + 2^k + m` with
/// `m = sum_{i<l} (2^{k_i} - 1) + (1 or 2) * (2^{k_l} - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaDecomposition {
    pub n: u32,
    pub alpha: u64,
    pub k: u32,
    pub m: u64,
    pub kis: Vec<u32>,
    pub doubled_last: bool,
}

fn ones(j: u32) -> u64 {
    (1u64 << j) - 1
}

impl AlphaDecomposition {
    /// Recomputes `m` from the `k_i` list.
    pub fn m_from_kis(&self) -> u64 {
        let l = self.kis.len();
        self.kis
            .iter()
            .enumerate()
            .map(|(i, &j)| {
                if i + 1 == l && self.doubled_last {
                    2 * ones(j)
                } else {
                    ones(j)
                }
            })
            .sum()
    }

    /// Recomputes `alpha` from `n`, `k`, `m`.
    pub fn alpha_from_parts(&self) -> u64 {
        self.n as u64 - (self.k as u64 + 1) + (1u64 << self.k) + self.m
    }

    /// True when `l` exceeds the bound `l <= k - 1` and only the relaxed
    /// `l <= k` admits this decomposition.
    pub fn needs_relaxed_bound(&self) -> bool {
        self.kis.len() as u32 > self.k.saturating_sub(1)
    }

    /// Checks every structural invariant.
    pub fn validate(&self) -> Result<()> {
        let ok = self.n >= 2
            && self.n <= 62
            && (self.n as u64) < self.alpha
            && self.alpha < 1u64 << self.n
            && self.k >= 1
            && self.k < self.n
            && self.m >= 1
            && self.m < 1u64 << self.k
            && !self.kis.is_empty()
            && self.kis[0] <= self.k
            && self.kis.windows(2).all(|w| w[0] > w[1])
            && *self.kis.last().unwrap() >= 1
            && self.kis.len() as u32 + self.doubled_last as u32 <= self.k
            && self.m_from_kis() == self.m
            && self.alpha_from_parts() == self.alpha;
        if ok {
            Ok(())
        } else {
            Err(Error::Decomposition {
                n: self.n,
                alpha: self.alpha,
            })
        }
    }
}

impl fmt::Display for AlphaDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha = n-(k+1)+2^k+m = {}-({}+1)+2^{}+{}; m = ",
            self.n, self.k, self.k, self.m
        )?;
        let l = self.kis.len();
        let terms: Vec<String> = self
            .kis
            .iter()
            .enumerate()
            .map(|(i, j)| {
                if i + 1 == l && self.doubled_last {
                    format!("2*(2^{j}-1)")
                } else {
                    format!("(2^{j}-1)")
                }
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

fn check_n(n: u32) -> Result<()> {
    if n > 62 {
        return Err(Error::NotSupported(format!("n = {n} exceeds 62")));
    }
    Ok(())
}

/// Smallest admissible `k`, then largest-first `k_i` with backtracking; the
/// doubled last term is tried only after the single form fails at that step.
pub fn decompose_alpha(n: u32, alpha: u64) -> Result<AlphaDecomposition> {
    check_n(n)?;
    if n < 2 || alpha <= n as u64 || alpha >= 1u64 << n {
        return Err(Error::OutOfRange {
            n,
            alpha,
            interval: format!("(n, 2^n) = ({n}, {})", 1u64 << n.min(62)),
        });
    }
    let (k, m) = (1..n)
        .find_map(|k| {
            let m = (alpha + k as u64 + 1).checked_sub(n as u64 + (1u64 << k))?;
            (m >= 1 && m < 1u64 << k).then_some((k, m))
        })
        .ok_or(Error::Decomposition { n, alpha })?;
    let (kis, doubled_last) = split_m(m, k + 1).ok_or(Error::Decomposition { n, alpha })?;
    let d = AlphaDecomposition {
        n,
        alpha,
        k,
        m,
        kis,
        doubled_last,
    };
    d.validate()?;
    Ok(d)
}

/// Writes `rem` as a strictly decreasing sum of `2^j - 1` with every `j < below`.
fn split_m(rem: u64, below: u32) -> Option<(Vec<u32>, bool)> {
    if rem == 0 {
        return Some((Vec::new(), false));
    }
    for j in (1..below).rev() {
        let v = ones(j);
        if v > rem {
            continue;
        }
        if let Some((mut rest, doubled)) = split_m(rem - v, j) {
            rest.insert(0, j);
            return Some((rest, doubled));
        }
        if 2 * v == rem {
            return Some((vec![j], true));
        }
    }
    None
}

/// Parameters of the quadratic finite-language construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticParams {
    pub n: u32,
    pub alpha: u64,
    pub k: u32,
    pub m: u64,
}

/// Largest alpha covered by the quadratic interval.
pub fn quadratic_upper(n: u32) -> u64 {
    let n = n as u64;
    if n.is_multiple_of(2) {
        (n / 2).pow(2) + n / 2 + 1
    } else {
        ((n - 1) / 2).pow(2) + n + 1
    }
}

fn partial_sum(n: u32, x: u32) -> u64 {
    (0..=x).map(|i| n as u64 - 2 * i as u64).sum()
}

/// `k = max{x >= 0 | alpha > 1 + sum_{i=0}^x (n - 2i)}` (over terms that stay
/// positive) and `m = alpha - 1 - sum_{i=0}^k (n - 2i)`.
pub fn quadratic_params(n: u32, alpha: u64) -> Result<QuadraticParams> {
    check_n(n)?;
    if n < 2 || alpha <= n as u64 + 1 || alpha > quadratic_upper(n) {
        return Err(Error::OutOfRange {
            n,
            alpha,
            interval: format!("(n+1, {}]", quadratic_upper(n)),
        });
    }
    let k = (0..)
        .take_while(|&x| 2 * x < n && alpha > 1 + partial_sum(n, x))
        .last()
        .ok_or_else(|| Error::OutOfRange {
            n,
            alpha,
            interval: format!("(n+1, {}]", quadratic_upper(n)),
        })?;
    Ok(QuadraticParams {
        n,
        alpha,
        k,
        m: alpha - 1 - partial_sum(n, k),
    })
}

/// Parameters of the exponential finite-language construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentialParams {
    pub n: u32,
    pub alpha: u64,
    pub beta: u64,
    pub i: u32,
    pub x: u32,
}

/// DFA size of the base automaton on `n` states (one extra initial state in
/// front of the Mandl automaton on `n - 1` states).
pub fn exponential_base(n: u32) -> u64 {
    if n.is_multiple_of(2) {
        3 * (1u64 << (n / 2 - 1))
    } else {
        1u64 << n.div_ceil(2)
    }
}

/// Admissible alphas `base + 2^i - 1`, `1 <= i <= ceil((n-1)/2)`.
pub fn exponential_alphas(n: u32) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    (1..=(n - 1).div_ceil(2))
        .map(|i| exponential_base(n) + ones(i))
        .collect()
}

pub fn exponential_params(n: u32, alpha: u64) -> Result<ExponentialParams> {
    check_n(n)?;
    let not_representable = |reason: String| Error::NotRepresentable { n, alpha, reason };
    if n < 2 {
        return Err(not_representable("n must be at least 2".into()));
    }
    let base = exponential_base(n);
    let beta = alpha
        .checked_sub(base)
        .ok_or_else(|| not_representable(format!("alpha below base {base}")))?;
    let i = (beta + 1).trailing_zeros();
    let max_i = (n - 1).div_ceil(2);
    if beta == 0 || (beta + 1).count_ones() != 1 || i > max_i {
        return Err(not_representable(format!(
            "alpha - {base} = {beta} is not 2^i - 1 with 1 <= i <= {max_i}"
        )));
    }
    Ok(ExponentialParams {
        n,
        alpha,
        beta,
        i,
        x: n + 1 - i,
    })
}
