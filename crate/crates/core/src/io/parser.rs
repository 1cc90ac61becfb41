//! Recursive-descent parser for expressions and maps.
//!
//! ```text
//! map    := "(" expr "," expr ")" | "[" expr ":" expr ":" expr "]"
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := ("-" | "+") unary | power
//! power  := atom ("^" exp)?
//! exp    := "-"? INT | "(" "-"? INT ")"
//! atom   := INT | INT "i" | "i" | variable | "(" expr ")"
//! ```
//!
//! `^` binds tighter than unary minus, so `-x^2` is `-(x^2)`.

use num_traits::ToPrimitive;

use crate::algebra::{GaussRational, SparsePoly};
use crate::birmap::BiRatFunc;

use super::lexer::{tokenize, Tok, Token};
use super::ParseError;

/// Syntax tree of an expression; variables are indices into the allowed
/// variable list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapExpr {
    Lit(GaussRational),
    Var(usize),
    Neg(Box<MapExpr>),
    Add(Box<MapExpr>, Box<MapExpr>),
    Sub(Box<MapExpr>, Box<MapExpr>),
    Mul(Box<MapExpr>, Box<MapExpr>),
    /// The divisor's source position is kept for error reporting.
    Div(Box<MapExpr>, Box<MapExpr>, (usize, usize)),
    Pow(Box<MapExpr>, i64, (usize, usize)),
}

/// A parsed map before interpretation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapSyntax {
    Affine([MapExpr; 2]),
    Projective([MapExpr; 3]),
}

pub(crate) const AFFINE_VARS: &[&str] = &["x", "y"];
pub(crate) const PROJECTIVE_VARS: &[&str] = &["x", "y", "z"];

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn new(text: &str, vars: &'a [&'a str]) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(text)?,
            pos: 0,
            vars,
        })
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError {
            line: t.line,
            column: t.column,
            found: t.tok.to_string(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            message: None,
        }
    }

    fn expect(&mut self, tok: Tok, expected: &[&str]) -> Result<Token, ParseError> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.error(expected))
        }
    }

    fn atom_expected(&self) -> Vec<String> {
        let mut v = vec!["number".to_string(), "`i`".to_string(), "`(`".to_string(), "`-`".to_string()];
        v.extend(self.vars.iter().map(|s| format!("`{s}`")));
        v
    }

    fn expr(&mut self) -> Result<MapExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    lhs = MapExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = MapExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<MapExpr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.bump();
                    lhs = MapExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.bump();
                    let at = (self.peek().line, self.peek().column);
                    lhs = MapExpr::Div(Box::new(lhs), Box::new(self.unary()?), at);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<MapExpr, ParseError> {
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                Ok(MapExpr::Neg(Box::new(self.unary()?)))
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MapExpr, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.bump();
        let at = (caret.line, caret.column);
        let paren = self.peek().tok == Tok::LParen;
        if paren {
            self.bump();
        }
        let negative = self.peek().tok == Tok::Minus;
        if negative {
            self.bump();
        }
        let exp = match &self.peek().tok {
            Tok::Int(n) => n.clone(),
            _ => return Err(self.error(&["integer exponent", "`-`", "`(`"])),
        };
        let exp_tok = self.bump();
        if paren {
            self.expect(Tok::RParen, &["`)`"])?;
        }
        let exp = if negative { -exp } else { exp };
        let exp = exp.to_i64().filter(|e| e.unsigned_abs() <= u32::MAX as u64).ok_or(ParseError {
            line: exp_tok.line,
            column: exp_tok.column,
            found: exp_tok.tok.to_string(),
            expected: Vec::new(),
            message: Some("exponent out of range".into()),
        })?;
        Ok(MapExpr::Pow(Box::new(base), exp, at))
    }

    fn atom(&mut self) -> Result<MapExpr, ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(n) => {
                self.bump();
                Ok(MapExpr::Lit(GaussRational::from_integer(n.clone())))
            }
            Tok::Imag(n) => {
                self.bump();
                Ok(MapExpr::Lit(GaussRational::from_integer(n.clone()) * GaussRational::i()))
            }
            Tok::Ident(s) if s == "i" => {
                self.bump();
                Ok(MapExpr::Lit(GaussRational::i()))
            }
            Tok::Ident(s) => match self.vars.iter().position(|v| v == s) {
                Some(k) => {
                    self.bump();
                    Ok(MapExpr::Var(k))
                }
                None => {
                    let mut err = self.error(&[]);
                    err.expected = self.atom_expected();
                    err.message = Some(format!("unknown variable `{s}`"));
                    Err(err)
                }
            },
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, &["`)`", "operator"])?;
                Ok(e)
            }
            _ => {
                let mut err = self.error(&[]);
                err.expected = self.atom_expected();
                Err(err)
            }
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.peek().tok == Tok::Eof {
            Ok(())
        } else {
            Err(self.error(&["operator", "end of input"]))
        }
    }

    fn map(&mut self) -> Result<MapSyntax, ParseError> {
        match self.peek().tok {
            Tok::LParen => {
                self.bump();
                self.vars = AFFINE_VARS;
                let a = self.expr()?;
                self.expect(Tok::Comma, &["`,`", "operator"])?;
                let b = self.expr()?;
                self.expect(Tok::RParen, &["`)`", "operator"])?;
                Ok(MapSyntax::Affine([a, b]))
            }
            Tok::LBracket => {
                self.bump();
                self.vars = PROJECTIVE_VARS;
                let a = self.expr()?;
                self.expect(Tok::Colon, &["`:`", "operator"])?;
                let b = self.expr()?;
                self.expect(Tok::Colon, &["`:`", "operator"])?;
                let c = self.expr()?;
                self.expect(Tok::RBracket, &["`]`", "operator"])?;
                Ok(MapSyntax::Projective([a, b, c]))
            }
            _ => Err(self.error(&["`(`", "`[`"])),
        }
    }
}

/// Parse an expression over the given variable names.
pub fn parse_expr(text: &str, vars: &[&str]) -> Result<MapExpr, ParseError> {
    let mut p = Parser::new(text, vars)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parse `(f₁, f₂)` or `[F₀ : F₁ : F₂]`.
pub fn parse_map_syntax(text: &str) -> Result<MapSyntax, ParseError> {
    let mut p = Parser::new(text, AFFINE_VARS)?;
    let m = p.map()?;
    p.finish()?;
    Ok(m)
}

/// What an expression can evaluate into.
pub(crate) trait EvalTarget: Sized + Clone {
    fn constant(c: GaussRational) -> Self;
    fn var(k: usize) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, o: &Self) -> Result<Self, &'static str>;
    fn pow(&self, e: i64) -> Result<Self, &'static str>;
}

impl EvalTarget for BiRatFunc<GaussRational> {
    fn constant(c: GaussRational) -> Self {
        BiRatFunc::constant(c)
    }
    fn var(k: usize) -> Self {
        BiRatFunc::var(k)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> Result<Self, &'static str> {
        self.checked_div(o).map_err(|_| "division by zero")
    }
    fn pow(&self, e: i64) -> Result<Self, &'static str> {
        BiRatFunc::pow(self, e).map_err(|_| "zero raised to a negative power")
    }
}

impl EvalTarget for SparsePoly<GaussRational, 3> {
    fn constant(c: GaussRational) -> Self {
        SparsePoly::constant(c)
    }
    fn var(k: usize) -> Self {
        SparsePoly::var(k)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> Result<Self, &'static str> {
        if !o.is_constant() {
            return Err("projective components may only be divided by constants");
        }
        let c = o.coeff(&[0; 3]);
        let inv = crate::algebra::Scalar::inv(&c).ok_or("division by zero")?;
        Ok(self.scale(&inv))
    }
    fn pow(&self, e: i64) -> Result<Self, &'static str> {
        if e >= 0 {
            return Ok(SparsePoly::pow(self, e as u32));
        }
        if !self.is_constant() {
            return Err("negative powers are not polynomial");
        }
        let c = self.coeff(&[0; 3]);
        let inv = crate::algebra::Scalar::pow_i64(&c, e).ok_or("zero raised to a negative power")?;
        Ok(SparsePoly::constant(inv))
    }
}

pub(crate) fn eval<T: EvalTarget>(e: &MapExpr) -> Result<T, ParseError> {
    let semantic = |at: (usize, usize), msg: &str| ParseError {
        line: at.0,
        column: at.1,
        found: String::new(),
        expected: Vec::new(),
        message: Some(msg.to_string()),
    };
    Ok(match e {
        MapExpr::Lit(c) => T::constant(c.clone()),
        MapExpr::Var(k) => T::var(*k),
        MapExpr::Neg(a) => eval::<T>(a)?.neg(),
        MapExpr::Add(a, b) => eval::<T>(a)?.add(&eval(b)?),
        MapExpr::Sub(a, b) => eval::<T>(a)?.sub(&eval(b)?),
        MapExpr::Mul(a, b) => eval::<T>(a)?.mul(&eval(b)?),
        MapExpr::Div(a, b, at) => eval::<T>(a)?.div(&eval(b)?).map_err(|m| semantic(*at, m))?,
        MapExpr::Pow(a, k, at) => eval::<T>(a)?.pow(*k).map_err(|m| semantic(*at, m))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse_expr("-x^2", AFFINE_VARS).unwrap();
        assert!(matches!(e, MapExpr::Neg(ref b) if matches!(**b, MapExpr::Pow(_, 2, _))));
        let e = parse_expr("x^-1", AFFINE_VARS).unwrap();
        assert!(matches!(e, MapExpr::Pow(_, -1, _)));
        let e = parse_expr("x^(-2)", AFFINE_VARS).unwrap();
        assert!(matches!(e, MapExpr::Pow(_, -2, _)));
    }

    #[test]
    fn errors_carry_positions_and_expectations() {
        let err = parse_map_syntax("(x, y").unwrap_err();
        assert_eq!((err.line, err.column), (1, 6));
        assert!(err.expected.contains(&"`)`".to_string()));

        let err = parse_map_syntax("(x, z)").unwrap_err();
        assert_eq!(err.column, 5);
        assert!(err.message.unwrap().contains("`z`"));

        // implicit multiplication is rejected
        let err = parse_expr("2x", AFFINE_VARS).unwrap_err();
        assert_eq!(err.column, 2);

        let f: Result<BiRatFunc<GaussRational>, _> = match parse_map_syntax("(x, y/(x-x))").unwrap() {
            MapSyntax::Affine([_, b]) => eval(&b),
            _ => unreachable!(),
        };
        assert_eq!(f.unwrap_err().column, 7);
    }
}
