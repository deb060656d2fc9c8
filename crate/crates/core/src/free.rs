//! Freely reduced words in a free group on generators `0..rank`.

use std::fmt;

use crate::word::{invert_letters, Letter};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord(Vec<Letter>);

impl FreeWord {
    pub fn identity() -> FreeWord {
        FreeWord(Vec::new())
    }

    pub fn generator(gen: usize) -> FreeWord {
        FreeWord(vec![Letter::pos(gen)])
    }

    pub fn from_letters(letters: &[Letter]) -> FreeWord {
        let mut w = FreeWord::identity();
        for &l in letters {
            w.push(l);
        }
        w
    }

    /// Appends `l`, cancelling against the last letter.
    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inverse()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiply(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord(invert_letters(&self.0))
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        (0..k.unsigned_abs()).fold(FreeWord::identity(), |acc, _| acc.multiply(&base))
    }

    /// `x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, other: &FreeWord) -> FreeWord {
        self.invert().multiply(&other.invert()).multiply(self).multiply(other)
    }

    /// `by⁻¹ self by`.
    pub fn conjugate(&self, by: &FreeWord) -> FreeWord {
        by.invert().multiply(self).multiply(by)
    }

    /// Renders with `names[gen]`, `x^-1` for inverses and `1` for the
    /// identity.
    pub fn render(&self, names: &[&str]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|l| if l.inv { format!("{}^-1", names[l.gen]) } else { names[l.gen].to_string() })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const AB: [&str; 2] = ["a", "b"];
        if self.0.iter().all(|l| l.gen < 2) {
            f.write_str(&self.render(&AB))
        } else {
            let names: Vec<String> = (0..=self.0.iter().map(|l| l.gen).max().unwrap_or(0)).map(|i| format!("g{i}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            f.write_str(&self.render(&refs))
        }
    }
}
