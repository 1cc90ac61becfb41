//! Tokens of the map grammar.

use std::fmt;

use num_bigint::BigInt;

use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(BigInt),
    /// `3i` is the literal `3·i`.
    Imag(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Imag(n) => write!(f, "`{n}i`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let start = (line, column);
        let push = |out: &mut Vec<Token>, tok| {
            out.push(Token {
                tok,
                line: start.0,
                column: start.1,
            })
        };
        if c == '\n' {
            line += 1;
            column = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            k += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let begin = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[begin..k].iter().collect();
            let n: BigInt = digits.parse().expect("ascii digits");
            let imaginary = k < chars.len()
                && chars[k] == 'i'
                && !chars.get(k + 1).is_some_and(|c| c.is_alphanumeric() || *c == '_');
            column += k - begin;
            if imaginary {
                k += 1;
                column += 1;
                push(&mut out, Tok::Imag(n));
            } else {
                push(&mut out, Tok::Int(n));
            }
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let begin = k;
            while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            column += k - begin;
            push(&mut out, Tok::Ident(chars[begin..k].iter().collect()));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            _ => {
                return Err(ParseError {
                    line,
                    column,
                    found: format!("`{c}`"),
                    expected: Vec::new(),
                    message: Some("unexpected character".into()),
                })
            }
        };
        push(&mut out, tok);
        k += 1;
        column += 1;
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        tokenize(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn imaginary_literals() {
        assert_eq!(
            toks("1+2i"),
            vec![Tok::Int(1.into()), Tok::Plus, Tok::Imag(2.into()), Tok::Eof]
        );
        assert_eq!(toks("2ix"), vec![Tok::Int(2.into()), Tok::Ident("ix".into()), Tok::Eof]);
    }

    #[test]
    fn positions() {
        let t = tokenize("(x,\n  y)").unwrap();
        assert_eq!((t[3].line, t[3].column), (2, 3));
        let err = tokenize("x $ y").unwrap_err();
        assert_eq!((err.line, err.column), (1, 3));
    }
}
