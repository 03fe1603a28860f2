use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::permutation::next_permutation;
use super::{check_size, DEFAULT_ELEMENT_CAP};
use crate::error::{Error, Result};
use crate::order::{build_lattice, FiniteLattice};

/// A word over the ordered alphabet `a < b < c < …`, stored as letter indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultinomialWord {
    word: Vec<usize>,
    profile: Vec<usize>,
}

impl MultinomialWord {
    pub fn new(word: Vec<usize>, profile: Vec<usize>) -> Result<Self> {
        let mut counts = vec![0; profile.len()];
        for &x in &word {
            if x >= profile.len() {
                return Err(Error::Invalid(format!(
                    "letter {x} outside an alphabet of {}",
                    profile.len()
                )));
            }
            counts[x] += 1;
        }
        if counts != profile {
            return Err(Error::Invalid(format!(
                "letter counts {counts:?} differ from profile {profile:?}"
            )));
        }
        Ok(MultinomialWord { word, profile })
    }

    /// Reads letters `a`, `b`, … and checks them against `profile`.
    pub fn parse(s: &str, profile: &[usize]) -> Result<Self> {
        let word: Option<Vec<usize>> = s
            .chars()
            .map(|c| c.is_ascii_lowercase().then(|| (c as u8 - b'a') as usize))
            .collect();
        let word = word.ok_or_else(|| Error::Invalid(format!("cannot read word {s:?}")))?;
        MultinomialWord::new(word, profile.to_vec())
    }

    /// The sorted word, bottom of the lattice.
    pub fn bottom(profile: &[usize]) -> Self {
        let word = profile
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i, c))
            .collect();
        MultinomialWord {
            word,
            profile: profile.to_vec(),
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.word
    }

    pub fn profile(&self) -> &[usize] {
        &self.profile
    }

    /// Positions `p` (0-based) where the letters at `p, p+1` are in increasing order.
    pub fn ascents(&self) -> Vec<usize> {
        (0..self.word.len().saturating_sub(1))
            .filter(|&p| self.word[p] < self.word[p + 1])
            .collect()
    }

    pub fn swap(&self, p: usize) -> MultinomialWord {
        let mut w = self.clone();
        w.word.swap(p, p + 1);
        w
    }

    /// All words with this profile, lexicographically.
    pub fn all(profile: &[usize]) -> Vec<MultinomialWord> {
        let mut cur = MultinomialWord::bottom(profile);
        let mut out = vec![cur.clone()];
        while next_permutation(&mut cur.word) {
            out.push(cur.clone());
        }
        out
    }
}

impl fmt::Display for MultinomialWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.word {
            if x < 26 {
                write!(f, "{}", (b'a' + x as u8) as char)?;
            } else {
                write!(f, "[{x}]")?;
            }
        }
        Ok(())
    }
}

fn coefficient(profile: &[usize]) -> Option<usize> {
    let mut total: u128 = 1;
    let mut placed: u128 = 0;
    for &c in profile {
        for i in 1..=c as u128 {
            placed += 1;
            total = total.checked_mul(placed)? / i;
        }
    }
    usize::try_from(total).ok()
}

/// The multinomial lattice of words with letter multiplicities `profile`.
pub fn multinomial(profile: &[usize]) -> Result<FiniteLattice> {
    multinomial_with_cap(profile, DEFAULT_ELEMENT_CAP)
}

pub fn multinomial_with_cap(profile: &[usize], cap: usize) -> Result<FiniteLattice> {
    if profile.iter().sum::<usize>() == 0 {
        return Err(Error::Invalid("a multinomial profile needs at least one letter".into()));
    }
    check_size(coefficient(profile), cap)?;
    let all = MultinomialWord::all(profile);
    let index: HashMap<&MultinomialWord, usize> = all.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = Vec::new();
    for (id, w) in all.iter().enumerate() {
        for p in w.ascents() {
            edges.push((id, index[&w.swap(p)]));
        }
    }
    edges.sort_unstable();
    let names = all.iter().map(|w| w.to_string()).collect();
    build_lattice(all.len(), &edges, Some(names))
}
