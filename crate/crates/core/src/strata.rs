//! Spaltenstein strata of the fixed-flag variety for two-block Jordan types.
//!
//! A stratum is addressed by the sequence of choices made while building the
//! flag one line at a time. With `N` of type `(p, q)` and an adapted basis
//! `e_{i,1}, e_{i,2}`, the line `F_1` is either `⟨e_{1,1}⟩` (choice 1) or
//! `⟨a·e_{1,1} + e_{1,2}⟩` for a free scalar `a` (choice 2). The rest of the
//! flag is a flag in `V/F_1`, whose operator has type `sort(p-1, q)` after
//! choice 1 and `(p, q-1)` after choice 2. Each choice 2 contributes one affine
//! coordinate, so a stratum is an affine space of dimension equal to the number
//! of 2s in its word.
//!
//! Words are stored in construction order, `F_1` first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::grothendieck::MotiveClass;
use crate::tableau::{TableauError, TwoColumnTableau};

/// Remaining Jordan type `(p, q)` with `p >= q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TypeState {
    pub p: usize,
    pub q: usize,
}

impl TypeState {
    pub fn new(p: usize, q: usize) -> Result<Self, TableauError> {
        if q > p || p + q == 0 {
            return Err(TableauError::BadType { p, q });
        }
        Ok(TypeState { p, q })
    }

    /// Type of the quotient after one choice, or `None` if the choice is not
    /// available here.
    pub fn step(self, choice: u8) -> Option<TypeState> {
        match choice {
            1 if self.p >= 1 => {
                let (a, b) = (self.p - 1, self.q);
                Some(TypeState {
                    p: a.max(b),
                    q: a.min(b),
                })
            }
            2 if self.q >= 1 => Some(TypeState {
                p: self.p,
                q: self.q - 1,
            }),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StratumWord {
    choices: Vec<u8>,
}

impl StratumWord {
    /// Validates `choices` by replaying them from type `(p, q)`.
    pub fn new(p: usize, q: usize, choices: Vec<u8>) -> Option<Self> {
        let mut state = TypeState::new(p, q).ok()?;
        if choices.len() != p + q {
            return None;
        }
        for &c in &choices {
            state = state.step(c)?;
        }
        Some(StratumWord { choices })
    }

    pub fn choices(&self) -> &[u8] {
        &self.choices
    }

    pub fn dim(&self) -> usize {
        self.choices.iter().filter(|&&c| c == 2).count()
    }

    /// The word as a subscript, last choice first.
    pub fn subscript(&self) -> String {
        self.choices.iter().rev().map(|c| char::from(b'0' + c)).collect()
    }
}

impl fmt::Display for StratumWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.choices {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WireWord {
    word: String,
    dim: usize,
}

impl Serialize for StratumWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        WireWord {
            word: self.to_string(),
            dim: self.dim(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StratumWord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let w = WireWord::deserialize(deserializer)?;
        let choices = w
            .word
            .bytes()
            .map(|b| match b {
                b'1' => Ok(1),
                b'2' => Ok(2),
                _ => Err(D::Error::custom("word letters must be 1 or 2")),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        let word = StratumWord { choices };
        if word.dim() != w.dim {
            return Err(D::Error::custom("dim does not match the number of 2s"));
        }
        Ok(word)
    }
}

/// Every valid choice word for type `(p, q)`, in lexicographic order.
pub fn enumerate_strata(p: usize, q: usize) -> Result<Vec<StratumWord>, TableauError> {
    let start = TypeState::new(p, q)?;
    fn go(state: TypeState, left: usize, word: &mut Vec<u8>, out: &mut Vec<StratumWord>) {
        if left == 0 {
            out.push(StratumWord {
                choices: word.clone(),
            });
            return;
        }
        for c in [1, 2] {
            if let Some(next) = state.step(c) {
                word.push(c);
                go(next, left - 1, word, out);
                word.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(start, p + q, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `Σ L^dim` over all strata.
pub fn fiber_class(p: usize, q: usize) -> Result<MotiveClass, TableauError> {
    let strata = enumerate_strata(p, q)?;
    let mut counts = vec![0u64; q + 1];
    for w in &strata {
        counts[w.dim()] += 1;
    }
    Ok(MotiveClass::from_coeffs(counts))
}

/// The open stratum attached to a standard tableau: its ψ-word.
pub fn stratum_of(t: &TwoColumnTableau) -> StratumWord {
    StratumWord::new(t.p(), t.q(), t.psi().to_vec()).expect("ψ-words of standard tableaux are valid strata")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::enumerate_standard;

    fn words(p: usize, q: usize) -> Vec<(String, usize)> {
        enumerate_strata(p, q)
            .unwrap()
            .into_iter()
            .map(|w| (w.to_string(), w.dim()))
            .collect()
    }

    #[test]
    fn small_strata() {
        assert_eq!(words(1, 1), vec![("11".into(), 0), ("21".into(), 1)]);
        assert_eq!(
            words(2, 1),
            vec![("111".into(), 0), ("121".into(), 1), ("211".into(), 1)]
        );
        let mut dims: Vec<usize> = words(2, 2).into_iter().map(|(_, d)| d).collect();
        dims.sort();
        assert_eq!(dims, vec![0, 1, 1, 1, 2, 2]);
    }

    #[test]
    fn fiber_classes() {
        let c = |v: &[i64]| MotiveClass::from_coeffs(v.iter().copied());
        assert_eq!(fiber_class(1, 1).unwrap(), c(&[1, 1]));
        assert_eq!(fiber_class(2, 1).unwrap(), c(&[1, 2]));
        assert_eq!(fiber_class(2, 2).unwrap(), c(&[1, 3, 2]));
        assert_eq!(fiber_class(4, 0).unwrap(), MotiveClass::one());
        assert!(fiber_class(1, 2).is_err());
    }

    #[test]
    fn open_strata_of_tableaux() {
        let check = |psi: &[u8], word: &str, dim: usize| {
            let s = stratum_of(&TwoColumnTableau::from_psi(psi).unwrap());
            assert_eq!((s.to_string(), s.dim()), (word.to_string(), dim));
        };
        check(&[1, 2, 1], "121", 1);
        check(&[2, 1, 1], "211", 1);
        check(&[2, 2, 1, 1], "2211", 2);
        let s = stratum_of(&TwoColumnTableau::from_psi(&[1, 2, 1, 2, 1, 1]).unwrap());
        assert_eq!(s.subscript(), "112121");
    }

    #[test]
    fn maximal_strata_are_tableau_words() {
        for n in 1..=7 {
            for q in 0..=n / 2 {
                let p = n - q;
                let top: Vec<StratumWord> = enumerate_strata(p, q)
                    .unwrap()
                    .into_iter()
                    .filter(|w| w.dim() == q)
                    .collect();
                let from_tableaux: Vec<StratumWord> =
                    enumerate_standard(p, q).unwrap().iter().map(stratum_of).collect();
                assert_eq!(top, from_tableaux, "type ({p},{q})");
                assert!(enumerate_strata(p, q).unwrap().iter().all(|w| w.dim() <= q));
            }
        }
    }

    #[test]
    fn prefixes_are_valid_for_quotient_types() {
        for w in enumerate_strata(3, 2).unwrap() {
            let mut state = TypeState::new(3, 2).unwrap();
            for (i, &c) in w.choices().iter().enumerate() {
                state = state.step(c).unwrap();
                let rest = w.choices()[i + 1..].to_vec();
                if !rest.is_empty() {
                    assert!(StratumWord::new(state.p, state.q, rest).is_some());
                }
            }
        }
    }

    #[test]
    fn json_entries() {
        let w = StratumWord::new(2, 1, vec![1, 2, 1]).unwrap();
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"word":"121","dim":1}"#);
        assert_eq!(serde_json::from_str::<StratumWord>(&json).unwrap(), w);
        assert!(serde_json::from_str::<StratumWord>(r#"{"word":"121","dim":2}"#).is_err());
    }
}
