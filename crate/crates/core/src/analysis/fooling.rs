use serde::{Deserialize, Serialize};

use crate::automata::{Alphabet, Dfa, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoolingSet {
    pub pairs: Vec<(Word, Word)>,
}

/// Outcome of [`verify_fooling_set`]: `bound` is the certified NFA lower bound
/// (0 when the set is not a fooling set, with the offending pair indices).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoolingVerdict {
    pub bound: usize,
    pub counterexample: Option<(usize, usize)>,
}

impl FoolingSet {
    pub fn new(pairs: Vec<(Word, Word)>) -> Self {
        FoolingSet { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// One `x|y` line per pair.
    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        self.pairs
            .iter()
            .map(|(x, y)| format!("{}|{}\n", alphabet.format_word(x), alphabet.format_word(y)))
            .collect()
    }

    pub fn from_text(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let mut pairs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (x, y) = line.split_once('|').ok_or(Error::Parse {
                line: i + 1,
                msg: "expected `x|y`".into(),
            })?;
            let parse = |w: &str| {
                alphabet.parse_word(w).map_err(|e| Error::Parse {
                    line: i + 1,
                    msg: e.to_string(),
                })
            };
            pairs.push((parse(x)?, parse(y)?));
        }
        Ok(FoolingSet { pairs })
    }
}

/// Checks `x_i y_i ∈ L` for all `i` and, for `i ≠ j`, `x_i y_j ∉ L` or `x_j y_i ∉ L`.
pub fn verify_fooling_set(lang: &Dfa, s: &FoolingSet) -> Result<FoolingVerdict> {
    let accepts = |x: &Word, y: &Word| -> Result<bool> {
        let q = lang.run_from(lang.initial(), x)?;
        Ok(lang.is_accepting(lang.run_from(q, y)?))
    };
    let fail = |i, j| FoolingVerdict {
        bound: 0,
        counterexample: Some((i, j)),
    };
    for (i, (x, y)) in s.pairs.iter().enumerate() {
        if !accepts(x, y)? {
            return Ok(fail(i, i));
        }
    }
    for i in 0..s.pairs.len() {
        for j in i + 1..s.pairs.len() {
            let (xi, yi) = &s.pairs[i];
            let (xj, yj) = &s.pairs[j];
            if accepts(xi, yj)? && accepts(xj, yi)? {
                return Ok(fail(i, j));
            }
        }
    }
    Ok(FoolingVerdict {
        bound: s.pairs.len(),
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mod3() -> Dfa {
        Dfa::from_fn(Alphabet::from_chars("a").unwrap(), 3, 0, |q| q == 0, |q, _| (q + 1) % 3).unwrap()
    }

    fn a(i: usize) -> Word {
        Word::from(vec![0; i])
    }

    #[test]
    fn unary_counter() {
        let s = FoolingSet::new((0..3).map(|i| (a(i), a((3 - i) % 3))).collect());
        assert_eq!(verify_fooling_set(&mod3(), &s).unwrap().bound, 3);
        let single = FoolingSet::new(vec![(Word::empty(), a(3))]);
        assert_eq!(verify_fooling_set(&mod3(), &single).unwrap().bound, 1);
    }

    #[test]
    fn duplicate_pair_fails() {
        let s = FoolingSet::new(vec![(a(1), a(2)), (a(1), a(2))]);
        let v = verify_fooling_set(&mod3(), &s).unwrap();
        assert_eq!(v.bound, 0);
        assert_eq!(v.counterexample, Some((0, 1)));
    }

    #[test]
    fn text_round_trip() {
        let sigma = Alphabet::from_chars("ab$").unwrap();
        let s = FoolingSet::new(vec![(Word::empty(), sigma.parse_word("$ a").unwrap())]);
        let text = s.to_text(&sigma);
        assert_eq!(text, "λ|$ a\n");
        assert_eq!(FoolingSet::from_text(&text, &sigma).unwrap(), s);
    }
}
