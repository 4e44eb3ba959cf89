//! Hand-rolled lexer and recursive-descent parser for the ASCII syntax.
//!
//! Grammar, precedence low to high:
//!
//! ```text
//! consecution := or "|-" or
//! or          := and ("|" and)*          (left-associative)
//! and         := unary ("&" unary)*      (left-associative)
//! unary       := ("~" | "[]" | "<>") unary | primary
//! primary     := atom | "_|_" | "T" | "(" or ")"
//! atom        := [a-z][a-z0-9_]*
//! ```

use super::Formula;

/// Syntax error with the byte offset of the offending input and the set of
/// token kinds that would have been accepted there.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(", "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl ParseError {
    fn new(offset: usize, expected: &[&str], found: impl Into<String>) -> Self {
        ParseError {
            offset,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: found.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Atom(String),
    Bot,
    Top,
    Neg,
    BoxOp,
    DiaOp,
    AndOp,
    OrOp,
    Turnstile,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Atom(a) => format!("atom `{a}`"),
            Tok::Bot => "`_|_`".into(),
            Tok::Top => "`T`".into(),
            Tok::Neg => "`~`".into(),
            Tok::BoxOp => "`[]`".into(),
            Tok::DiaOp => "`<>`".into(),
            Tok::AndOp => "`&`".into(),
            Tok::OrOp => "`|`".into(),
            Tok::Turnstile => "`|-`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'a'..=b'z' => {
                let start = i;
                i += 1;
                while i < bytes.len()
                    && (bytes[i].is_ascii_lowercase()
                        || bytes[i].is_ascii_digit()
                        || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Atom(text[start..i].to_string())));
            }
            b'T' => {
                toks.push((i, Tok::Top));
                i += 1;
            }
            b'_' => {
                if bytes[i..].starts_with(b"_|_") {
                    toks.push((i, Tok::Bot));
                    i += 3;
                } else {
                    return Err(ParseError::new(i, &["`_|_`"], "`_`"));
                }
            }
            b'~' => {
                toks.push((i, Tok::Neg));
                i += 1;
            }
            b'[' => {
                if i + 1 < bytes.len() && bytes[i + 1] == b']' {
                    toks.push((i, Tok::BoxOp));
                    i += 2;
                } else {
                    return Err(ParseError::new(i, &["`[]`"], "`[`"));
                }
            }
            b'<' => {
                if i + 1 < bytes.len() && bytes[i + 1] == b'>' {
                    toks.push((i, Tok::DiaOp));
                    i += 2;
                } else {
                    return Err(ParseError::new(i, &["`<>`"], "`<`"));
                }
            }
            b'&' => {
                toks.push((i, Tok::AndOp));
                i += 1;
            }
            b'|' => {
                if i + 1 < bytes.len() && bytes[i + 1] == b'-' {
                    toks.push((i, Tok::Turnstile));
                    i += 2;
                } else {
                    toks.push((i, Tok::OrOp));
                    i += 1;
                }
            }
            b'(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            other => {
                return Err(ParseError::new(
                    i,
                    &["atom", "`~`", "`[]`", "`<>`", "`(`", "`_|_`", "`T`"],
                    format!("`{}`", other as char),
                ));
            }
        }
    }
    toks.push((text.len(), Tok::Eof));
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError::new(self.offset(), expected, self.peek().describe())
    }

    fn or_expr(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.and_expr()?;
        while *self.peek() == Tok::OrOp {
            self.bump();
            let rhs = self.and_expr()?;
            f = Formula::or(f, rhs);
        }
        Ok(f)
    }

    fn and_expr(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while *self.peek() == Tok::AndOp {
            self.bump();
            let rhs = self.unary()?;
            f = Formula::and(f, rhs);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Neg => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Tok::BoxOp => {
                self.bump();
                Ok(Formula::boxed(self.unary()?))
            }
            Tok::DiaOp => {
                self.bump();
                Ok(Formula::dia(self.unary()?))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Atom(name) => {
                self.bump();
                Ok(Formula::Atom(name))
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::Bot)
            }
            Tok::Top => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::LParen => {
                self.bump();
                let f = self.or_expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["`)`", "`&`", "`|`"]));
                }
                self.bump();
                Ok(f)
            }
            _ => Err(self.error(&["atom", "`_|_`", "`T`", "`~`", "`[]`", "`<>`", "`(`"])),
        }
    }
}

/// Parse a single formula; the whole input must be consumed.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let f = p.or_expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["end of input", "`&`", "`|`"]));
    }
    Ok(f)
}

/// Parse `"<formula> |- <formula>"` into its two sides.
pub fn parse_consecution_text(text: &str) -> Result<(Formula, Formula), ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let lhs = p.or_expr()?;
    if *p.peek() != Tok::Turnstile {
        return Err(p.error(&["`|-`", "`&`", "`|`"]));
    }
    p.bump();
    let rhs = p.or_expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["end of input", "`&`", "`|`"]));
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_and_expectations() {
        let err = parse("p & ").unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(err.expected.iter().any(|e| e.contains("atom")));
        let err = parse("p q").unwrap_err();
        assert_eq!(err.offset, 2);
        let err = parse("(p | q").unwrap_err();
        assert_eq!(err.offset, 6);
        assert!(err.expected.iter().any(|e| e.contains(")")));
        let err = parse("p # q").unwrap_err();
        assert_eq!(err.offset, 2);
    }

    #[test]
    fn turnstile_vs_or() {
        let (lhs, rhs) = parse_consecution_text("p | q |- q | p").unwrap();
        assert_eq!(lhs.render(), "p | q");
        assert_eq!(rhs.render(), "q | p");
        assert!(parse("p |- q").is_err());
    }

    #[test]
    fn atom_names() {
        assert_eq!(
            parse("abc_1 & x0").unwrap().render(),
            "abc_1 & x0"
        );
        // 'T' ends an atom: `pT` lexes as atom `p` then `T`, which fails to parse.
        assert!(parse("pT").is_err());
    }

    #[test]
    fn constants() {
        assert_eq!(parse("_|_ | T").unwrap().render(), "_|_ | T");
        assert!(parse("_|").is_err());
    }
}
