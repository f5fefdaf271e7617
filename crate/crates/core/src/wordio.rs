//! Text syntax for braid words.
//!
//! ```text
//! word := "1" | term (WS term)*
//! term := gen ("^" sint)?
//! gen  := "s" uint | "a(" uint "," uint ")"
//! sint := ("-")? uint
//! ```
//!
//! `WS` is one or more spaces or tabs; surrounding whitespace is ignored.
//! `g^p` expands to `|p|` copies of `g` with the sign of `p` at parse time, so
//! words only ever hold unit letters. Batch files hold one `x<TAB>y` pair per
//! LF-terminated line; blank lines and lines starting with `#` are skipped.

use std::fmt::Write as _;

use thiserror::Error;

use crate::braid::{BraidIndex, BraidWord, Generator, Letter, Sign};

/// Largest accepted `|p|` in `g^p`.
pub const MAX_EXPONENT: u32 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// `position` is a byte offset into the input.
    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax { position: usize, expected: &'static str },
    #[error("generator at byte {position} is out of range for the braid index")]
    OutOfRange { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {error}")]
pub struct BatchError {
    /// One-based line number.
    pub line: usize,
    pub error: ParseError,
}

/// One parsed batch line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchPair {
    pub line: usize,
    pub x: BraidWord,
    pub y: BraidWord,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8, expected: &'static str) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn error(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax { position: self.pos, expected }
    }

    /// Decimal digits, saturating at `u64::MAX`.
    fn uint(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d @ b'0'..=b'9') = self.peek() {
            value = value.saturating_mul(10).saturating_add((d - b'0') as u64);
            self.pos += 1;
        }
        if self.pos == start {
            Err(self.error("digit"))
        } else {
            Ok(value)
        }
    }
}

/// Parses `text` as a word over `index`.
///
/// ```
/// use braidlog::{wordio, BraidIndex};
/// let w = wordio::parse("s1 s3^-3 s2^2 s1", BraidIndex::new(4).unwrap()).unwrap();
/// assert_eq!(w.len(), 7);
/// assert_eq!(wordio::format(&w), "s1 s3^-3 s2^2 s1");
/// ```
pub fn parse(text: &str, index: BraidIndex) -> Result<BraidWord, ParseError> {
    let mut cur = Cursor { bytes: text.as_bytes(), pos: 0 };
    cur.skip_ws();
    let body_start = cur.pos;
    if text[body_start..].trim_end_matches([' ', '\t']) == "1" {
        return Ok(BraidWord::identity(index));
    }
    if cur.peek().is_none() {
        return Err(cur.error("word"));
    }

    let mut letters = Vec::new();
    loop {
        let term_start = cur.pos;
        let generator = match cur.peek() {
            Some(b's') => {
                cur.pos += 1;
                let i = cur.uint()?;
                Generator::Artin(u16::try_from(i).unwrap_or(0))
            }
            Some(b'a') => {
                cur.pos += 1;
                cur.expect(b'(', "'('")?;
                let t = cur.uint()?;
                cur.expect(b',', "','")?;
                let s = cur.uint()?;
                cur.expect(b')', "')'")?;
                Generator::Band { t: u16::try_from(t).unwrap_or(0), s: u16::try_from(s).unwrap_or(0) }
            }
            _ => return Err(cur.error("generator 's<i>' or 'a(<t>,<s>)'")),
        };
        if !generator.is_valid(index) {
            return Err(ParseError::OutOfRange { position: term_start });
        }

        let mut power: i64 = 1;
        if cur.eat(b'^') {
            let negative = cur.eat(b'-');
            let exp_start = cur.pos;
            let p = cur.uint()?;
            if p > MAX_EXPONENT as u64 {
                return Err(ParseError::Syntax { position: exp_start, expected: "exponent of magnitude at most 2^20" });
            }
            power = if negative { -(p as i64) } else { p as i64 };
        }
        let sign = if power < 0 { Sign::Neg } else { Sign::Pos };
        letters.extend(std::iter::repeat_n(Letter::new(generator, sign), power.unsigned_abs() as usize));

        let had_ws = cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
        if !had_ws {
            return Err(cur.error("whitespace or end of word"));
        }
    }
    Ok(BraidWord::new(index, letters).expect("letters validated while parsing"))
}

/// Canonical text for `w`: runs of one letter collapse to `g^p` and the
/// identity prints as `1`.
pub fn format(w: &BraidWord) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    let letters = w.letters();
    let mut k = 0;
    while k < letters.len() {
        let run = letters[k..].iter().take_while(|&&l| l == letters[k]).count();
        if !out.is_empty() {
            out.push(' ');
        }
        match letters[k].generator {
            Generator::Artin(i) => write!(out, "s{i}").unwrap(),
            Generator::Band { t, s } => write!(out, "a({t},{s})").unwrap(),
        }
        let p = run as i64 * letters[k].sign.value();
        if p != 1 {
            write!(out, "^{p}").unwrap();
        }
        k += run;
    }
    out
}

/// Parses a batch of `x<TAB>y` lines. The first bad line aborts the batch.
pub fn parse_batch(text: &str, index: BraidIndex) -> Result<Vec<BatchPair>, BatchError> {
    let mut pairs = Vec::new();
    for (k, raw) in text.split('\n').enumerate() {
        let line = k + 1;
        if raw.trim_matches([' ', '\t']).is_empty() || raw.starts_with('#') {
            continue;
        }
        let Some((xs, ys)) = raw.split_once('\t') else {
            return Err(BatchError {
                line,
                error: ParseError::Syntax { position: raw.len(), expected: "TAB between the two words" },
            });
        };
        let x = parse(xs, index).map_err(|error| BatchError { line, error })?;
        let y = parse(ys, index).map_err(|error| BatchError { line, error: shift(error, xs.len() + 1) })?;
        pairs.push(BatchPair { line, x, y });
    }
    Ok(pairs)
}

fn shift(e: ParseError, by: usize) -> ParseError {
    match e {
        ParseError::Syntax { position, expected } => ParseError::Syntax { position: position + by, expected },
        ParseError::OutOfRange { position } => ParseError::OutOfRange { position: position + by },
    }
}
