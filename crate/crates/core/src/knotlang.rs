//! Knot-construction expressions: AST, parser and canonical renderer.
//!
//! ```text
//! expr  := term ( "#" term )*
//! term  := "unknot" | "trefoil" | "fig8"
//!        | "kfam" "(" INT ")"
//!        | "wh0" "(" expr [ "," "clasp" "=" ("+"|"-") ] ")"
//!        | "ksat" "(" expr "," expr "," INT "," INT ")"
//!        | "atom" "(" NAME "," "genus" "=" INT
//!                 [ "," "torus" "=" TRI ] [ "," "cable" "=" TRI ]
//!                 [ "," "slice" "=" TRI ] ")"
//!        | "(" expr ")"
//! ```
//!
//! `#` is left-associative. Atom flags may appear in any order, each at most once.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest accepted `kfam(n)` index.
pub const KFAM_MAX: u32 = 1000;

/// Maximum depth of a parsed expression tree.
pub const MAX_DEPTH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

impl TriState {
    pub fn from_bool(b: bool) -> Self {
        if b {
            TriState::Yes
        } else {
            TriState::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == TriState::Yes
    }

    pub fn is_no(self) -> bool {
        self == TriState::No
    }

    pub fn not(self) -> Self {
        match self {
            TriState::Yes => TriState::No,
            TriState::No => TriState::Yes,
            TriState::Unknown => TriState::Unknown,
        }
    }

    /// Combine two facts about the same property. Unknown is refined by a
    /// known value; two known values must agree.
    pub fn refine(self, other: TriState) -> Option<TriState> {
        match (self, other) {
            (TriState::Unknown, x) | (x, TriState::Unknown) => Some(x),
            (a, b) if a == b => Some(a),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Unknown => "unknown",
        }
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TriState {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "yes" => Ok(TriState::Yes),
            "no" => Ok(TriState::No),
            "unknown" => Ok(TriState::Unknown),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Clasp {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl fmt::Display for Clasp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clasp::Positive => "+",
            Clasp::Negative => "-",
        })
    }
}

/// A user-declared knot known only through its genus and attribute flags.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Atom {
    pub name: String,
    pub genus: u32,
    pub torus: TriState,
    pub cable: TriState,
    pub slice: TriState,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KnotExpr {
    Unknot,
    Trefoil,
    Fig8,
    /// The pretzel knot `K(-3, 3, ..., 3, -3)` with `2n+1` entries.
    Kfam(u32),
    /// Untwisted Whitehead double.
    Wh0 { companion: Box<KnotExpr>, clasp: Clasp },
    /// `K(J, L, m, n)`: strands tied into `j` and `l` with `m` and `n` full twists.
    Ksat { j: Box<KnotExpr>, l: Box<KnotExpr>, m: i64, n: i64 },
    Atom(Atom),
    Sum(Box<KnotExpr>, Box<KnotExpr>),
}

/// Attribute flags of a knot as recorded in the built-in table or on an atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnotFlags {
    pub torus: TriState,
    pub cable: TriState,
    pub slice: TriState,
}

impl KnotExpr {
    pub fn wh0(companion: KnotExpr) -> Self {
        KnotExpr::Wh0 { companion: Box::new(companion), clasp: Clasp::Positive }
    }

    pub fn ksat(j: KnotExpr, l: KnotExpr, m: i64, n: i64) -> Self {
        KnotExpr::Ksat { j: Box::new(j), l: Box::new(l), m, n }
    }

    pub fn sum(left: KnotExpr, right: KnotExpr) -> Self {
        KnotExpr::Sum(Box::new(left), Box::new(right))
    }

    /// Atom with all optional flags unknown.
    pub fn atom(name: &str, genus: u32) -> Self {
        KnotExpr::Atom(Atom {
            name: name.to_string(),
            genus,
            torus: TriState::Unknown,
            cable: TriState::Unknown,
            slice: TriState::Unknown,
        })
    }

    /// Curated torus/cable/slice flags. Composite nodes are unknown.
    ///
    /// The trefoil counts as a cable (of the unknot); `kfam(n)` is ribbon,
    /// hence slice and not a nontrivial torus knot.
    pub fn flags(&self) -> KnotFlags {
        use TriState::*;
        match self {
            KnotExpr::Unknot => KnotFlags { torus: No, cable: No, slice: Yes },
            KnotExpr::Trefoil => KnotFlags { torus: Yes, cable: Yes, slice: No },
            KnotExpr::Fig8 => KnotFlags { torus: No, cable: No, slice: No },
            KnotExpr::Kfam(_) => KnotFlags { torus: No, cable: No, slice: Yes },
            KnotExpr::Atom(a) => KnotFlags { torus: a.torus, cable: a.cable, slice: a.slice },
            _ => KnotFlags { torus: Unknown, cable: Unknown, slice: Unknown },
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            KnotExpr::Wh0 { companion, .. } => 1 + companion.depth(),
            KnotExpr::Ksat { j, l, .. } => 1 + j.depth().max(l.depth()),
            KnotExpr::Sum(a, b) => 1 + a.depth().max(b.depth()),
            _ => 1,
        }
    }

    /// Canonical text; `parse(render(e)) == e`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => f.write_str("unknot"),
            KnotExpr::Trefoil => f.write_str("trefoil"),
            KnotExpr::Fig8 => f.write_str("fig8"),
            KnotExpr::Kfam(n) => write!(f, "kfam({n})"),
            KnotExpr::Wh0 { companion, clasp } => write!(f, "wh0({companion}, clasp={clasp})"),
            KnotExpr::Ksat { j, l, m, n } => write!(f, "ksat({j}, {l}, {m}, {n})"),
            KnotExpr::Atom(a) => write!(
                f,
                "atom({}, genus={}, torus={}, cable={}, slice={})",
                a.name, a.genus, a.torus, a.cable, a.slice
            ),
            KnotExpr::Sum(a, b) => {
                write!(f, "{a} # ")?;
                if matches!(**b, KnotExpr::Sum(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}

impl FromStr for KnotExpr {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {pos}: {kind}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: String, found: String },
    #[error("unexpected character {0:?}")]
    BadChar(char),
    #[error("{0}")]
    Range(String),
    #[error("expression nested deeper than {MAX_DEPTH}")]
    TooDeep,
    #[error("atom flag `{0}` given more than once")]
    DuplicateFlag(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Digits(String),
    LParen,
    RParen,
    Comma,
    Eq,
    Hash,
    Plus,
    Minus,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Digits(s) => write!(f, "`{s}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Hash => f.write_str("`#`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut toks = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '=' => Some(Tok::Eq),
            '#' => Some(Tok::Hash),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            toks.push((pos, tok));
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            toks.push((pos, Tok::Ident(s)));
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            toks.push((pos, Tok::Digits(s)));
        } else {
            return Err(ParseError { pos, kind: ParseErrorKind::BadChar(c) });
        }
    }
    toks.push((text.len(), Tok::End));
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.idx].1
    }

    fn pos(&self) -> usize {
        self.toks[self.idx].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.idx].1.clone();
        if t != Tok::End {
            self.idx += 1;
        }
        t
    }

    fn unexpected<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            kind: ParseErrorKind::Unexpected {
                expected: expected.to_string(),
                found: self.peek().to_string(),
            },
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.unexpected(&tok.to_string())
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            _ => self.unexpected(&format!("`{kw}`")),
        }
    }

    fn range_error<T>(&self, pos: usize, msg: String) -> Result<T, ParseError> {
        Err(ParseError { pos, kind: ParseErrorKind::Range(msg) })
    }

    fn int(&mut self) -> Result<(usize, i64), ParseError> {
        let pos = self.pos();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let Tok::Digits(digits) = self.peek().clone() else {
            return self.unexpected("integer");
        };
        self.bump();
        let text = if negative { format!("-{digits}") } else { digits };
        match text.parse::<i64>() {
            Ok(v) => Ok((pos, v)),
            Err(_) => self.range_error(pos, format!("integer {text} out of range")),
        }
    }

    fn name(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => self.unexpected("name"),
        }
    }

    fn tri(&mut self) -> Result<TriState, ParseError> {
        if let Tok::Ident(s) = self.peek() {
            if let Ok(t) = s.parse() {
                self.bump();
                return Ok(t);
            }
        }
        self.unexpected("`yes`, `no` or `unknown`")
    }

    /// Returns the expression and its tree depth.
    fn expr(&mut self, depth: usize) -> Result<(KnotExpr, usize), ParseError> {
        let (mut acc, mut acc_depth) = self.term(depth)?;
        while *self.peek() == Tok::Hash {
            let pos = self.pos();
            self.bump();
            let (rhs, rhs_depth) = self.term(depth)?;
            acc_depth = 1 + acc_depth.max(rhs_depth);
            if depth + acc_depth > MAX_DEPTH {
                return Err(ParseError { pos, kind: ParseErrorKind::TooDeep });
            }
            acc = KnotExpr::sum(acc, rhs);
        }
        Ok((acc, acc_depth))
    }

    fn term(&mut self, depth: usize) -> Result<(KnotExpr, usize), ParseError> {
        if depth >= MAX_DEPTH {
            return Err(ParseError { pos: self.pos(), kind: ParseErrorKind::TooDeep });
        }
        let pos = self.pos();
        let kw = match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let inner = self.expr(depth + 1)?;
                self.expect(Tok::RParen)?;
                return Ok(inner);
            }
            Tok::Ident(kw) => kw,
            _ => return self.unexpected("knot term"),
        };
        let leaf = match kw.as_str() {
            "unknot" => Some(KnotExpr::Unknot),
            "trefoil" => Some(KnotExpr::Trefoil),
            "fig8" => Some(KnotExpr::Fig8),
            _ => None,
        };
        if let Some(leaf) = leaf {
            self.bump();
            return Ok((leaf, 1));
        }
        match kw.as_str() {
            "kfam" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let (npos, n) = self.int()?;
                if !(1..=KFAM_MAX as i64).contains(&n) {
                    return self.range_error(npos, format!("kfam(n) requires 1 <= n <= {KFAM_MAX}, got {n}"));
                }
                self.expect(Tok::RParen)?;
                Ok((KnotExpr::Kfam(n as u32), 1))
            }
            "wh0" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let (companion, d) = self.expr(depth + 1)?;
                let mut clasp = Clasp::Positive;
                if *self.peek() == Tok::Comma {
                    self.bump();
                    self.expect_keyword("clasp")?;
                    self.expect(Tok::Eq)?;
                    clasp = match self.peek() {
                        Tok::Plus => Clasp::Positive,
                        Tok::Minus => Clasp::Negative,
                        _ => return self.unexpected("`+` or `-`"),
                    };
                    self.bump();
                }
                self.expect(Tok::RParen)?;
                Ok((KnotExpr::Wh0 { companion: Box::new(companion), clasp }, d + 1))
            }
            "ksat" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let (j, dj) = self.expr(depth + 1)?;
                self.expect(Tok::Comma)?;
                let (l, dl) = self.expr(depth + 1)?;
                self.expect(Tok::Comma)?;
                let (_, m) = self.int()?;
                self.expect(Tok::Comma)?;
                let (_, n) = self.int()?;
                self.expect(Tok::RParen)?;
                Ok((KnotExpr::ksat(j, l, m, n), 1 + dj.max(dl)))
            }
            "atom" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let name = self.name()?;
                self.expect(Tok::Comma)?;
                self.expect_keyword("genus")?;
                self.expect(Tok::Eq)?;
                let (gpos, genus) = self.int()?;
                if !(1..=u32::MAX as i64).contains(&genus) {
                    return self.range_error(gpos, format!("atom genus must be >= 1, got {genus}"));
                }
                let mut flags: [Option<TriState>; 3] = [None; 3];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    let fpos = self.pos();
                    let slot = match self.peek() {
                        Tok::Ident(s) if s == "torus" => 0,
                        Tok::Ident(s) if s == "cable" => 1,
                        Tok::Ident(s) if s == "slice" => 2,
                        _ => return self.unexpected("`torus`, `cable` or `slice`"),
                    };
                    let Tok::Ident(flag) = self.bump() else { unreachable!() };
                    self.expect(Tok::Eq)?;
                    let value = self.tri()?;
                    if flags[slot].replace(value).is_some() {
                        return Err(ParseError { pos: fpos, kind: ParseErrorKind::DuplicateFlag(flag) });
                    }
                }
                self.expect(Tok::RParen)?;
                let [torus, cable, slice] = flags.map(|f| f.unwrap_or(TriState::Unknown));
                Ok((KnotExpr::Atom(Atom { name, genus: genus as u32, torus, cable, slice }), 1))
            }
            _ => Err(ParseError {
                pos,
                kind: ParseErrorKind::Unexpected {
                    expected: "knot term".into(),
                    found: format!("`{kw}`"),
                },
            }),
        }
    }
}

/// Parse a knot expression.
pub fn parse(text: &str) -> Result<KnotExpr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, idx: 0 };
    let (e, _) = p.expr(0)?;
    if *p.peek() != Tok::End {
        return p.unexpected("`#` or end of input");
    }
    Ok(e)
}

/// An exactness guard that is not established for some node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Warning {
    /// Rendered subexpression the warning is about.
    pub node: String,
    pub message: String,
}

pub const WH_NONTRIVIAL_WARNING: &str = "Whitehead closed form requires nontrivial companion";
pub const WH_NONCABLE_WARNING: &str = "Whitehead closed form requires noncable companion";

/// Report every Whitehead double whose companion is not known nontrivial and
/// noncable, and every `ksat` whose companions are not known to lie in class R.
pub fn validate(e: &KnotExpr) -> Vec<Warning> {
    let mut out = Vec::new();
    validate_into(e, &mut out);
    out
}

fn validate_into(e: &KnotExpr, out: &mut Vec<Warning>) {
    use crate::classical::{class_r_of, trivial_of};
    let mut warn = |message: String| out.push(Warning { node: e.render(), message });
    match e {
        KnotExpr::Wh0 { companion, .. } => {
            if !trivial_of(companion).is_no() {
                warn(WH_NONTRIVIAL_WARNING.into());
            }
            if !companion.flags().cable.is_no() {
                warn(WH_NONCABLE_WARNING.into());
            }
            validate_into(companion, out);
        }
        KnotExpr::Ksat { j, l, .. } => {
            for (which, c) in [("first", j), ("second", l)] {
                if !class_r_of(c).is_yes() {
                    warn(format!(
                        "satellite lower bound requires {which} companion in class R (nontrivial, neither torus nor cable)"
                    ));
                }
            }
            validate_into(j, out);
            validate_into(l, out);
        }
        KnotExpr::Sum(a, b) => {
            validate_into(a, out);
            validate_into(b, out);
        }
        _ => {}
    }
}
