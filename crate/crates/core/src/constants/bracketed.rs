use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::boxop::box_op;
use crate::error::{Error, Result};
use crate::ncalg::{Letter, NCPoly, Word};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    XPow(usize),
    T1Pow(usize),
    Box(BracketedWord),
}

/// A product of `X`-powers, `T1`-powers and boxed subwords `{...}`.
///
/// Always canonical: adjacent powers of the same kind are merged, zero powers
/// dropped and boxes are nonempty, so structural equality is equality of
/// bracketed words.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BracketedWord {
    items: Vec<Atom>,
}

/// Flattened form: `{` and `}` become explicit tokens.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Token {
    X,
    T1,
    Open,
    Close,
}

impl BracketedWord {
    pub fn empty() -> Self {
        BracketedWord::default()
    }

    pub fn x_pow(j: usize) -> Self {
        BracketedWord::new(vec![Atom::XPow(j)]).expect("no boxes")
    }

    pub fn t1_pow(i: usize) -> Self {
        BracketedWord::new(vec![Atom::T1Pow(i)]).expect("no boxes")
    }

    /// Canonicalizes the atom sequence; fails on an empty box.
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        let mut items: Vec<Atom> = Vec::with_capacity(atoms.len());
        for atom in atoms {
            match atom {
                Atom::XPow(0) | Atom::T1Pow(0) => {}
                Atom::Box(ref inner) if inner.is_empty() => {
                    return Err(Error::InvalidArgument("empty box".into()));
                }
                Atom::XPow(j) => match items.last_mut() {
                    Some(Atom::XPow(k)) => *k += j,
                    _ => items.push(Atom::XPow(j)),
                },
                Atom::T1Pow(i) => match items.last_mut() {
                    Some(Atom::T1Pow(k)) => *k += i,
                    _ => items.push(Atom::T1Pow(i)),
                },
                b @ Atom::Box(_) => items.push(b),
            }
        }
        Ok(BracketedWord { items })
    }

    /// `{self}`.
    pub fn boxed(self) -> Result<Self> {
        BracketedWord::new(vec![Atom::Box(self)])
    }

    pub fn concat(&self, other: &BracketedWord) -> BracketedWord {
        let mut atoms = self.items.clone();
        atoms.extend(other.items.iter().cloned());
        BracketedWord::new(atoms).expect("operands are canonical")
    }

    pub fn items(&self) -> &[Atom] {
        &self.items
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// True for a single boxed atom `{V}`.
    pub fn is_boxed(&self) -> bool {
        matches!(self.items.as_slice(), [Atom::Box(_)])
    }

    pub fn box_count(&self) -> usize {
        self.items
            .iter()
            .map(|a| match a {
                Atom::Box(inner) => 1 + inner.box_count(),
                _ => 0,
            })
            .sum()
    }

    pub fn tokens(&self) -> Vec<Token> {
        let mut out = Vec::new();
        self.push_tokens(&mut out);
        out
    }

    fn push_tokens(&self, out: &mut Vec<Token>) {
        for atom in &self.items {
            match atom {
                Atom::XPow(j) => out.extend(std::iter::repeat_n(Token::X, *j)),
                Atom::T1Pow(i) => out.extend(std::iter::repeat_n(Token::T1, *i)),
                Atom::Box(inner) => {
                    out.push(Token::Open);
                    inner.push_tokens(out);
                    out.push(Token::Close);
                }
            }
        }
    }

    /// Rebuilds a bracketed word from a token stream.
    pub fn from_tokens(tokens: &[Token]) -> Result<Self> {
        let mut stack: Vec<Vec<Atom>> = vec![Vec::new()];
        for tok in tokens {
            match tok {
                Token::X => stack.last_mut().expect("nonempty").push(Atom::XPow(1)),
                Token::T1 => stack.last_mut().expect("nonempty").push(Atom::T1Pow(1)),
                Token::Open => stack.push(Vec::new()),
                Token::Close => {
                    if stack.len() == 1 {
                        return Err(Error::Parse("unbalanced brackets: unmatched }".into()));
                    }
                    let inner = BracketedWord::new(stack.pop().expect("checked"))?;
                    stack.last_mut().expect("nonempty").push(Atom::Box(inner));
                }
            }
        }
        if stack.len() != 1 {
            return Err(Error::Parse("unbalanced brackets: unmatched {".into()));
        }
        BracketedWord::new(stack.pop().expect("checked"))
    }

    /// Weight with `w(X) = 1`, `w(T1) = m + 1`, `w({V}) = w(V) + 2m`; for
    /// `m = 0` this is the total degree (`T1` has degree 2, a box adds 1).
    pub fn weight(&self, m: usize) -> usize {
        self.items
            .iter()
            .map(|a| match a {
                Atom::XPow(j) => *j,
                Atom::T1Pow(i) if m == 0 => 2 * i,
                Atom::T1Pow(i) => i * (m + 1),
                Atom::Box(inner) if m == 0 => inner.weight(m) + 1,
                Atom::Box(inner) => inner.weight(m) + 2 * m,
            })
            .sum()
    }
}

impl fmt::Display for BracketedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.items.is_empty() {
            return f.write_str("1");
        }
        for (i, atom) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match atom {
                Atom::XPow(1) => f.write_str("X")?,
                Atom::XPow(j) => write!(f, "X^{j}")?,
                Atom::T1Pow(1) => f.write_str("T1")?,
                Atom::T1Pow(i) => write!(f, "T1^{i}")?,
                Atom::Box(inner) => write!(f, "{{{inner}}}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for BracketedWord {
    type Err = Error;

    /// Parses the display form, e.g. `{T1 X {T1}} T1^2`.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        let mut tokens = Vec::new();
        let mut i = 0;
        let read_exp = |i: &mut usize| -> Result<usize> {
            if *i < chars.len() && chars[*i] == '^' {
                *i += 1;
                let start = *i;
                while *i < chars.len() && chars[*i].is_ascii_digit() {
                    *i += 1;
                }
                let digits: String = chars[start..*i].iter().collect();
                digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))
            } else {
                Ok(1)
            }
        };
        while i < chars.len() {
            match chars[i] {
                c if c.is_whitespace() => i += 1,
                '1' if chars.len() == 1 => i += 1,
                '{' => {
                    tokens.push(Token::Open);
                    i += 1;
                }
                '}' => {
                    tokens.push(Token::Close);
                    i += 1;
                }
                'X' => {
                    i += 1;
                    let e = read_exp(&mut i)?;
                    tokens.extend(std::iter::repeat_n(Token::X, e));
                }
                'T' if chars.get(i + 1) == Some(&'1') => {
                    i += 2;
                    let e = read_exp(&mut i)?;
                    tokens.extend(std::iter::repeat_n(Token::T1, e));
                }
                c => return Err(Error::Parse(format!("unexpected {c:?} in bracketed word {s:?}"))),
            }
        }
        BracketedWord::from_tokens(&tokens)
    }
}

impl Serialize for BracketedWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BracketedWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Evaluates `X^j -> X^j`, `T1^i -> T1^i`, `{V} -> ⊡(V)` with the given `F`.
pub fn eval_bracketed(bw: &BracketedWord, f: &NCPoly) -> NCPoly {
    let mut out = NCPoly::one();
    for atom in bw.items() {
        let factor = match atom {
            Atom::XPow(j) => NCPoly::x_pow(*j),
            Atom::T1Pow(i) => NCPoly::t1().pow(*i),
            Atom::Box(inner) => box_op(&eval_bracketed(inner, f), f),
        };
        out = &out * &factor;
    }
    out
}

/// Root pattern `T1^{i1} X^{j1} ... X^{j(k-1)} T1^{ik}` at every nesting level:
/// starts with `T1` or `{`, ends with `T1` or `}`, every `X`-run shorter than
/// `m`, no `X}` and no `{X`.
pub fn is_permissible(bw: &BracketedWord, m: usize) -> bool {
    let tokens = bw.tokens();
    let (Some(first), Some(last)) = (tokens.first(), tokens.last()) else {
        return false;
    };
    if !matches!(first, Token::T1 | Token::Open) || !matches!(last, Token::T1 | Token::Close) {
        return false;
    }
    for pair in tokens.windows(2) {
        match (pair[0], pair[1]) {
            (Token::X, Token::Close) | (Token::Open, Token::X) | (Token::Open, Token::Close) => {
                return false
            }
            _ => {}
        }
    }
    let mut run = 0;
    for tok in &tokens {
        if *tok == Token::X {
            run += 1;
            if run >= m {
                return false;
            }
        } else {
            run = 0;
        }
    }
    true
}

/// Writes `T1 -> YX`, `{ -> Y`, `} -> X^m`.
pub fn symbolic_leading_monomial(bw: &BracketedWord, m: usize) -> Result<Word> {
    if m == 0 || !is_permissible(bw, m) {
        return Err(Error::NotPermissible { word: bw.to_string(), m });
    }
    let mut out = Word::one();
    for tok in bw.tokens() {
        match tok {
            Token::X => out.push(Letter::X),
            Token::T1 => {
                out.push(Letter::Y);
                out.push(Letter::X);
            }
            Token::Open => out.push(Letter::Y),
            Token::Close => out.extend_from(&Word::x_pow(m)),
        }
    }
    Ok(out)
}

/// Recovers the boxed permissible word whose leading monomial is `w`.
///
/// Each segment `Y^b X^a` reads as `b - 1` opening brackets, one `T1`,
/// `(a - 1) / m` closing brackets and `X^((a - 1) mod m)`.
pub fn decode(w: &Word, m: usize) -> Result<BracketedWord> {
    let fail = |reason: &str| Error::NotGeneratorLeadingMonomial {
        word: w.clone(),
        reason: reason.to_string(),
    };
    if m == 0 {
        return Err(fail("decoding requires m >= 1"));
    }
    let letters = w.letters();
    if letters.first() != Some(&Letter::Y) || letters.last() != Some(&Letter::X) {
        return Err(fail("must start with Y and end with X"));
    }
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let start = i;
        while i < letters.len() && letters[i] == Letter::Y {
            i += 1;
        }
        let b = i - start;
        let mid = i;
        while i < letters.len() && letters[i] == Letter::X {
            i += 1;
        }
        let a = i - mid;
        if b == 0 || a == 0 {
            return Err(fail("malformed segment"));
        }
        tokens.extend(std::iter::repeat_n(Token::Open, b - 1));
        tokens.push(Token::T1);
        tokens.extend(std::iter::repeat_n(Token::Close, (a - 1) / m));
        tokens.extend(std::iter::repeat_n(Token::X, (a - 1) % m));
    }
    let bw = BracketedWord::from_tokens(&tokens).map_err(|_| fail("unbalanced brackets"))?;
    if !bw.is_boxed() {
        return Err(fail("not a single boxed word"));
    }
    if !is_permissible(&bw, m) {
        return Err(fail("X before a closing bracket"));
    }
    Ok(bw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::t_sequence;
    use crate::ncalg::leading_monomial;

    fn bw(s: &str) -> BracketedWord {
        s.parse().unwrap()
    }

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_merging() {
        assert_eq!(bw("T1 T1 X X"), BracketedWord::new(vec![Atom::T1Pow(2), Atom::XPow(2)]).unwrap());
        assert_eq!(bw("{T1}").to_string(), "{T1}");
        assert_eq!(bw("T1^2 X {T1 X T1}").to_string(), "T1^2 X {T1 X T1}");
        assert!(BracketedWord::empty().boxed().is_err());
        assert!("{T1".parse::<BracketedWord>().is_err());
        assert!("T1}".parse::<BracketedWord>().is_err());
    }

    #[test]
    fn eval_examples() {
        let f = NCPoly::x_pow(3);
        assert_eq!(eval_bracketed(&bw("T1"), &f), NCPoly::t1());
        assert_eq!(eval_bracketed(&bw("{T1}"), &NCPoly::x()), t_sequence(2, &NCPoly::x()));
        let (x, y) = (NCPoly::x(), NCPoly::y());
        let t2 = NCPoly::t1().pow(2);
        let expected = &(&(&y * &t2) * &x) - &(&(&x * &t2) * &y);
        assert_eq!(eval_bracketed(&bw("{T1^2}"), &x), expected);
    }

    #[test]
    fn permissibility_examples() {
        assert!(is_permissible(&bw("{T1}"), 1));
        assert!(!is_permissible(&bw("{T1 X}"), 1));
        assert!(is_permissible(&bw("{T1 X T1}"), 2));
        assert!(!is_permissible(&bw("{T1 X T1}"), 1));
        assert!(!is_permissible(&bw("{X T1}"), 3));
        assert!(!is_permissible(&bw("X {T1}"), 3));
        assert!(is_permissible(&bw("{{T1} X T1}"), 2));
        assert!(!is_permissible(&bw("{T1} X"), 2));
    }

    #[test]
    fn symbolic_lm_examples() {
        assert_eq!(symbolic_leading_monomial(&bw("{T1}"), 1).unwrap(), word("YYXX"));
        assert_eq!(symbolic_leading_monomial(&bw("T1^2"), 1).unwrap(), word("YXYX"));
        assert_eq!(symbolic_leading_monomial(&bw("{T1 X T1}"), 2).unwrap(), word("YYXXYXXX"));
        assert!(symbolic_leading_monomial(&bw("{T1 X}"), 1).is_err());
        let g = bw("{{T1} X T1}");
        assert_eq!(
            symbolic_leading_monomial(&g, 2).unwrap(),
            leading_monomial(&eval_bracketed(&g, &NCPoly::x_pow(2))).unwrap()
        );
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(&word("YYXX"), 1).unwrap(), bw("{T1}"));
        assert_eq!(decode(&word("YYXYXX"), 1).unwrap(), bw("{T1^2}"));
        assert!(decode(&word("YX"), 1).is_err());
        // {T1} T1: balanced but not a single box
        assert!(decode(&word("YYXXYX"), 1).is_err());
        // unbalanced
        assert!(decode(&word("YYYXX"), 1).is_err());
        assert!(decode(&word("XYYXX"), 1).is_err());
        assert!(decode(&word("YYXXY"), 1).is_err());
        assert_eq!(decode(&word("YYXXYXXX"), 2).unwrap(), bw("{T1 X T1}"));
    }

    #[test]
    fn weights_of_bracketed_words() {
        assert_eq!(bw("{T1}").weight(1), 4);
        assert_eq!(bw("{T1^2}").weight(1), 6);
        assert_eq!(bw("{T1 X T1}").weight(2), 11);
        assert_eq!(bw("{{T1}}").weight(0), 4);
        assert_eq!(bw("{T1}").weight(3), symbolic_leading_monomial(&bw("{T1}"), 3).unwrap().weight(3));
    }
}
