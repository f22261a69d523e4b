//! Tokenizer and recursive-descent parser for element expressions.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor (('*' | '/') factor)*
//! factor := primary ('^' '-'? int)?
//! primary:= atom | int | '(' expr ')'
//! ```
//!
//! Positions in diagnostics are 0-based character offsets into the source.

use super::raw::{pow_sum, Atom, RawMono, RawSum};
use super::ExprError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Plus,
    Star,
    Slash,
    Caret,
    Minus,
    LParen,
    RParen,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Spanned {
    tok: Tok,
    pos: usize,
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '₁' || c == '₂'
}

fn tokenize(src: &str) -> Result<Vec<Spanned>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '-' | '−' => Tok::Minus,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let text: String = chars[i..j].iter().collect();
                let value = text.parse::<u64>().map_err(|_| ExprError::Syntax {
                    pos,
                    msg: format!("integer '{text}' is too large"),
                })?;
                i = j;
                out.push(Spanned {
                    tok: Tok::Int(value),
                    pos,
                });
                continue;
            }
            c if is_ident_char(c) => {
                let mut j = i;
                while j < chars.len() && is_ident_char(chars[j]) {
                    j += 1;
                }
                let text: String = chars[i..j].iter().collect();
                i = j;
                out.push(Spanned {
                    tok: Tok::Ident(text),
                    pos,
                });
                continue;
            }
            other => {
                return Err(ExprError::Syntax {
                    pos,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push(Spanned { tok, pos });
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|s| &s.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |s| s.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|s| s.tok.clone());
        self.at += 1;
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<RawSum, ExprError> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Tok::Plus) {
            self.bump();
            acc += &self.term()?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RawSum, ExprError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let pos = self.pos();
                    let divisor = single_monomial(&self.factor()?, pos)?;
                    acc = &acc * &RawSum::from_mono(divisor.inverse());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RawSum, ExprError> {
        let base_pos = self.pos();
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let pos = self.pos();
        let k = match self.bump() {
            Some(Tok::Int(k)) => k,
            _ => {
                return Err(ExprError::Syntax {
                    pos,
                    msg: "expected an integer exponent".into(),
                })
            }
        };
        let k = i32::try_from(k).map_err(|_| ExprError::Syntax {
            pos,
            msg: "exponent is too large".into(),
        })?;
        if negative {
            let m = single_monomial(&base, base_pos)?;
            Ok(RawSum::from_mono(m.inverse().pow(k)))
        } else {
            Ok(pow_sum(&base, k as u32))
        }
    }

    fn primary(&mut self) -> Result<RawSum, ExprError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Ident(name)) => match name.parse::<Atom>() {
                Ok(atom) => Ok(RawSum::from_mono(RawMono::atom(atom))),
                Err(_) => Err(ExprError::UnknownAtom { name, pos }),
            },
            Some(Tok::Int(0)) => Ok(RawSum::zero()),
            Some(Tok::Int(1)) => Ok(RawSum::one()),
            Some(Tok::Int(value)) => Err(ExprError::Coefficient { value, pos }),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ExprError::Syntax {
                        pos: self.toks.get(self.at - 1).map_or(self.end, |s| s.pos),
                        msg: "expected ')'".into(),
                    }),
                }
            }
            Some(_) => Err(ExprError::Syntax {
                pos,
                msg: "expected an atom, an integer or '('".into(),
            }),
            None => Err(ExprError::Syntax {
                pos,
                msg: "unexpected end of input".into(),
            }),
        }
    }
}

fn single_monomial(x: &RawSum, pos: usize) -> Result<RawMono, ExprError> {
    let mut it = x.terms();
    match (it.next(), it.next()) {
        (Some(m), None) => Ok(*m),
        _ => Err(ExprError::NonMonomialInverse { pos }),
    }
}

/// Parses `src` into formal sums of exponent vectors. Ring-specific validation happens later.
pub fn parse_raw(src: &str) -> Result<RawSum, ExprError> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: src.chars().count(),
    };
    let out = p.expr()?;
    if p.at < p.toks.len() {
        return p.error("unexpected trailing input");
    }
    Ok(out)
}
