//! Words over a `±` alphabet and finite group presentations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: u32) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn neg(gen: u32) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    /// Column of this letter in a coset table: `2·gen` for `g`, `2·gen + 1` for `g⁻¹`.
    pub fn column(self) -> usize {
        2 * self.gen as usize + self.inverse as usize
    }

    pub fn from_column(col: usize) -> Self {
        Letter { gen: (col / 2) as u32, inverse: col % 2 == 1 }
    }
}

/// A word in the free group, stored letter by letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `g^e`.
    pub fn power(gen: u32, e: i64) -> Self {
        let letter = if e < 0 { Letter::neg(gen) } else { Letter::pos(gen) };
        Word(vec![letter; e.unsigned_abs() as usize])
    }

    /// Concatenates `(generator, exponent)` syllables and freely reduces.
    pub fn from_syllables(syllables: &[(u32, i64)]) -> Self {
        let mut w = Word::empty();
        for &(g, e) in syllables {
            w.0.extend(Word::power(g, e).0);
        }
        w.reduced()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Free reduction.
    pub fn reduced(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &x in &self.0 {
            if out.last() == Some(&x.inv()) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        Word(out)
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|x| x.inv()).collect())
    }

    /// Freely reduced product `self · other`.
    pub fn mul(&self, other: &Word) -> Self {
        let mut w = self.clone();
        w.0.extend_from_slice(&other.0);
        w.reduced()
    }

    /// `[g, v] = g v g⁻¹ v⁻¹`, freely reduced.
    pub fn commutator(g: &Word, v: &Word) -> Self {
        g.mul(v).mul(&g.inverse()).mul(&v.inverse())
    }

    /// Signed number of occurrences of `gen`.
    pub fn exponent_sum(&self, gen: u32) -> i64 {
        self.0
            .iter()
            .filter(|x| x.gen == gen)
            .map(|x| if x.inverse { -1 } else { 1 })
            .sum()
    }

    /// Number of occurrences of `gen` regardless of sign.
    pub fn count(&self, gen: u32) -> usize {
        self.0.iter().filter(|x| x.gen == gen).count()
    }

    /// Run-length syllables `(generator, exponent)`.
    pub fn syllables(&self) -> Vec<(u32, i64)> {
        let mut out: Vec<(u32, i64)> = Vec::new();
        for x in &self.0 {
            let e = if x.inverse { -1 } else { 1 };
            match out.last_mut() {
                Some((g, acc)) if *g == x.gen && acc.signum() == e => *acc += e,
                _ => out.push((x.gen, e)),
            }
        }
        out
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|x| !x.inverse)
    }

    /// Renders the word with the given generator names, e.g. `x a^3 x a^-2 x^2 a^-1`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.word.syllables().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let name = self.names.get(g as usize).map(String::as_str).unwrap_or("?");
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A finite presentation `⟨g_1, …, g_m | r_1, …, r_s⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Validates generator indices and freely reduces relators; empty relators are rejected.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut p = Presentation { generators, relators: Vec::with_capacity(relators.len()) };
        for r in relators {
            p.check_word(&r)?;
            let r = r.reduced();
            if r.is_empty() {
                return Err(Error::BadShape(format!("relator {} is trivial", p.relators.len() + 1)));
            }
            p.relators.push(r);
        }
        Ok(p)
    }

    /// Builds a presentation from syllable lists, naming generators by the given letters.
    pub fn from_syllables(names: &[&str], relators: &[Vec<(u32, i64)>]) -> Result<Self> {
        Presentation::new(
            names.iter().map(|s| s.to_string()).collect(),
            relators.iter().map(|r| Word::from_syllables(r)).collect(),
        )
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<u32> {
        self.generators.iter().position(|g| g == name).map(|i| i as u32)
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|x| x.gen as usize >= self.generators.len()) {
            Some(x) => Err(Error::GeneratorOutOfRange(x.gen as usize, self.generators.len())),
            None => Ok(()),
        }
    }

    /// Copy with one more relator; a relator that reduces to the identity is skipped.
    pub fn with_relator(&self, r: &Word) -> Result<Self> {
        self.check_word(r)?;
        let mut p = self.clone();
        let r = r.reduced();
        if !r.is_empty() {
            p.relators.push(r);
        }
        Ok(p)
    }

    /// Same group with shorter relators: when `g^m` is a relator, every other syllable
    /// `g^e` is rewritten with `e` reduced into `(-m/2, m/2]`. Relators that collapse are dropped.
    pub fn with_reduced_powers(&self) -> Self {
        let mut order: Vec<Option<i64>> = vec![None; self.generators.len()];
        for r in &self.relators {
            if let [(g, e)] = r.syllables()[..] {
                let m = e.abs();
                let slot = &mut order[g as usize];
                *slot = Some(slot.map_or(m, |o: i64| num_integer::gcd(o, m)));
            }
        }
        let mut relators: Vec<Word> = Vec::with_capacity(self.relators.len());
        for r in &self.relators {
            let syl = r.syllables();
            let w = if syl.len() == 1 {
                r.clone()
            } else {
                let short: Vec<(u32, i64)> = syl
                    .into_iter()
                    .map(|(g, e)| match order[g as usize] {
                        Some(m) if m > 0 => (g, crate::arith::symmetric(e, m as u32)),
                        _ => (g, e),
                    })
                    .collect();
                Word::from_syllables(&short)
            };
            if !w.is_empty() && !relators.contains(&w) {
                relators.push(w);
            }
        }
        Presentation { generators: self.generators.clone(), relators }
    }

    pub fn display_word<'a>(&'a self, w: &'a Word) -> WordDisplay<'a> {
        w.display(&self.generators)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} |", self.generators.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            write!(f, "{} {}", if i == 0 { "" } else { "," }, r.display(&self.generators))?;
        }
        write!(f, " >")
    }
}
