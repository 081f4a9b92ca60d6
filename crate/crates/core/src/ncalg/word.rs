use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A generator of the free algebra. `Y` sorts above `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Letter {
    X = 0,
    Y = 1,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'X',
            Letter::Y => 'Y',
        }
    }
}

/// A monomial of `K<X,Y>`: a finite sequence of letters, the empty word being `1`.
///
/// The derived ordering is the lexicographic order of the algebra: letters are
/// compared left to right with `Y > X`, and a proper prefix is smaller than any
/// of its extensions (`X > 1`).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(SmallVec<[Letter; 16]>);

impl Word {
    pub fn one() -> Self {
        Word(SmallVec::new())
    }

    pub fn x() -> Self {
        Word::from_letters([Letter::X])
    }

    pub fn y() -> Self {
        Word::from_letters([Letter::Y])
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        Word(letters.into_iter().collect())
    }

    /// `X^n`.
    pub fn x_pow(n: usize) -> Self {
        Word(std::iter::repeat_n(Letter::X, n).collect())
    }

    /// `Y^n`.
    pub fn y_pow(n: usize) -> Self {
        Word(std::iter::repeat_n(Letter::Y, n).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Subword `[start, end)`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(SmallVec::from_slice(&self.0[start..end]))
    }

    /// Weight with `w(X) = 1`, `w(Y) = m`.
    pub fn weight(&self, m: usize) -> usize {
        self.0
            .iter()
            .map(|l| match l {
                Letter::X => 1,
                Letter::Y => m,
            })
            .sum()
    }

    /// The grading used for a derivation `Y -> f(X)` with `deg f = m`: the
    /// weight for `m >= 1` and the total degree for `m = 0`.
    pub fn grade(&self, m: usize) -> usize {
        self.weight(m.max(1))
    }

    /// Exchanges `X` and `Y`.
    pub fn swapped(&self) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| match l {
                    Letter::X => Letter::Y,
                    Letter::Y => Letter::X,
                })
                .collect(),
        )
    }

    /// All words of the given grade, lex descending.
    pub fn all_of_grade(grade: usize, m: usize) -> Vec<Word> {
        let step_y = m.max(1);
        let mut out = Vec::new();
        let mut cur = Word::one();
        fn rec(rem: usize, step_y: usize, cur: &mut Word, out: &mut Vec<Word>) {
            if rem == 0 {
                out.push(cur.clone());
                return;
            }
            if rem >= step_y {
                cur.0.push(Letter::Y);
                rec(rem - step_y, step_y, cur, out);
                cur.0.pop();
            }
            cur.0.push(Letter::X);
            rec(rem - 1, step_y, cur, out);
            cur.0.pop();
        }
        rec(grade, step_y, &mut cur, &mut out);
        out
    }

    /// All words of grade at most `grade`, lex descending.
    pub fn all_up_to_grade(grade: usize, m: usize) -> Vec<Word> {
        let mut out: Vec<Word> = (0..=grade).flat_map(|g| Word::all_of_grade(g, m)).collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

/// Compares two words in the monomial order (`Y > X > 1`, left to right).
pub fn lex_compare(a: &Word, b: &Word) -> std::cmp::Ordering {
    a.cmp(b)
}

/// `w(X) = 1`, `w(Y) = m`.
pub fn weight(w: &Word, m: usize) -> usize {
    w.weight(m)
}

impl fmt::Display for Word {
    /// Plain letter string, `1` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl Word {
    /// Writes the word as a product of letter powers, e.g. `Y^2*X*Y`.
    pub fn to_expr_string(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            if j - i == 1 {
                parts.push(l.as_char().to_string());
            } else {
                parts.push(format!("{}^{}", l.as_char(), j - i));
            }
            i = j;
        }
        parts.join("*")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Word::one());
        }
        s.chars()
            .map(|c| match c {
                'X' | 'x' => Ok(Letter::X),
                'Y' | 'y' => Ok(Letter::Y),
                other => Err(Error::Parse(format!("invalid letter {other:?} in word {s:?}"))),
            })
            .collect::<Result<SmallVec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn lex_examples() {
        assert_eq!(lex_compare(&w("YX"), &w("XY")), Ordering::Greater);
        assert_eq!(lex_compare(&w("Y"), &w("YX")), Ordering::Less);
        assert_eq!(lex_compare(&w("YYXX"), &w("YXYX")), Ordering::Greater);
        assert_eq!(lex_compare(&w("1"), &w("X")), Ordering::Less);
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&w("YX"), 1), 2);
        assert_eq!(weight(&w("YYXX"), 2), 6);
        assert_eq!(weight(&Word::one(), 3), 0);
    }

    #[test]
    fn enumerate_by_grade() {
        assert_eq!(Word::all_of_grade(3, 1).len(), 8);
        // compositions of 4 into parts 1 and 2
        assert_eq!(Word::all_of_grade(4, 2).len(), 5);
        let ws = Word::all_of_grade(2, 1);
        assert_eq!(ws, vec![w("YY"), w("YX"), w("XY"), w("XX")]);
        assert_eq!(Word::all_up_to_grade(2, 1).len(), 7);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(w("YYXY").to_string(), "YYXY");
        assert_eq!(w("YYXY").to_expr_string(), "Y^2*X*Y");
        assert_eq!(Word::one().to_string(), "1");
        assert!("XZ".parse::<Word>().is_err());
    }
}
