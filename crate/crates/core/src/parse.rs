//! Text syntax for polynomials and differential forms.
//!
//! Polynomials use variables `x1 ... xn` (with `x`, `y`, `z`, `w` accepted as
//! aliases for `x1 ... x4`), integer or `p/q` literals, and the operators
//! `+ - * ^`. Exponents are nonnegative integers and juxtaposition is an
//! error: `2x1` must be written `2*x1`.
//!
//! Forms are sums of terms `coefficient d-monomial`, e.g.
//! `(x1^2 + x2^2) dx1^dx2 - x1 dx2`. Inside a d-monomial `^` is the wedge
//! product. The coefficient may be separated from the d-monomial by `*` or by
//! whitespace; every term must have the same form degree.

use num_bigint::BigInt;

use crate::error::ParseError;
use crate::forms::PolyForm;
use crate::poly::MultiPoly;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => {
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let end = chars.get(i).map(|c| c.0).unwrap_or(src.len());
                let text = &src[chars[start].0..end];
                out.push((Tok::Num(text.parse().expect("digits")), pos));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let end = chars.get(i).map(|c| c.0).unwrap_or(src.len());
                out.push((Tok::Ident(src[chars[start].0..end].to_string()), pos));
            }
            '+' => {
                out.push((Tok::Plus, pos));
                i += 1;
            }
            // ASCII hyphen and the Unicode minus sign
            '-' | '\u{2212}' => {
                out.push((Tok::Minus, pos));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, pos));
                i += 1;
            }
            '^' | '\u{2227}' => {
                out.push((Tok::Caret, pos));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, pos));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, pos));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, pos));
                i += 1;
            }
            other => {
                return Err(ParseError::new(format!("unexpected character {other:?}"), pos).located(src));
            }
        }
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

/// Resolves a variable name to a zero-based index.
fn var_index(name: &str, nvars: usize) -> Option<usize> {
    let idx = match name {
        "x" => 0,
        "y" => 1,
        "z" => 2,
        "w" => 3,
        _ => {
            let digits = name.strip_prefix('x')?;
            if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) || digits.starts_with('0') {
                return None;
            }
            digits.parse::<usize>().ok()? - 1
        }
    };
    (idx < nvars).then_some(idx)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, nvars: usize) -> Result<Self, ParseError> {
        Ok(Parser {
            src,
            toks: lex(src)?,
            pos: 0,
            nvars,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::new(msg, self.offset()).located(self.src))
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::End => Ok(()),
            Tok::RParen => self.err("unbalanced ')'"),
            Tok::Slash => self.err("'/' is only allowed inside rational literals"),
            _ => self.err("unexpected token"),
        }
    }

    fn is_differential(&self, name: &str) -> bool {
        name.strip_prefix('d')
            .map(|v| var_index(v, self.nvars).is_some())
            .unwrap_or(false)
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Tok::Num(_) | Tok::LParen => true,
            Tok::Ident(name) => !self.is_differential(name),
            _ => false,
        }
    }

    fn poly_expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = MultiPoly::zero(self.nvars);
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Tok::Plus => {
                    self.bump();
                    false
                }
                Tok::Minus => {
                    self.bump();
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.product()?;
            acc = if neg { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let rhs = self.power()?;
                    acc = &acc * &rhs;
                }
                _ if self.starts_atom() => return self.err("juxtaposition is not allowed; use '*'"),
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            match self.bump() {
                Tok::Num(n) => {
                    let e: u32 = n.try_into().map_err(|_| {
                        ParseError::new("exponent too large", self.offset()).located(self.src)
                    })?;
                    return Ok(base.pow(e));
                }
                Tok::Minus => return self.err("exponents must be nonnegative integers"),
                _ => return self.err("expected integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        let at = self.offset();
        match self.bump() {
            Tok::Num(n) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        Tok::Num(d) if d != BigInt::from(0) => {
                            Ok(MultiPoly::constant(self.nvars, Rational::from_bigints(n, d)))
                        }
                        Tok::Num(_) => Err(ParseError::new("zero denominator", at).located(self.src)),
                        _ => self.err("'/' is only allowed inside rational literals"),
                    }
                } else {
                    Ok(MultiPoly::constant(self.nvars, Rational::from_bigints(n, BigInt::from(1))))
                }
            }
            Tok::Ident(name) => match var_index(&name, self.nvars) {
                Some(i) => Ok(MultiPoly::var(self.nvars, i)),
                None if self.is_differential(&name) => {
                    Err(ParseError::new(format!("differential {name} inside a polynomial"), at).located(self.src))
                }
                None => Err(ParseError::new(
                    format!("unknown variable {name:?} (expected x1..x{})", self.nvars),
                    at,
                )
                .located(self.src)),
            },
            Tok::LParen => {
                let inner = self.poly_expr()?;
                if *self.peek() != Tok::RParen {
                    return self.err("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Tok::Slash => Err(ParseError::new("'/' is only allowed inside rational literals", at).located(self.src)),
            Tok::End => Err(ParseError::new("unexpected end of input", at).located(self.src)),
            _ => Err(ParseError::new("expected a number, variable or '('", at).located(self.src)),
        }
    }

    /// `dx_i ^ dx_j ^ ...` as zero-based indices.
    fn d_monomial(&mut self) -> Result<Vec<usize>, ParseError> {
        let mut idx = Vec::new();
        loop {
            let at = self.offset();
            match self.bump() {
                Tok::Ident(name) if self.is_differential(&name) => {
                    idx.push(var_index(&name[1..], self.nvars).expect("checked"));
                }
                _ => return Err(ParseError::new("expected a differential like dx1", at).located(self.src)),
            }
            if *self.peek() == Tok::Caret {
                self.bump();
            } else {
                return Ok(idx);
            }
        }
    }

    fn form_term(&mut self) -> Result<(MultiPoly, Vec<usize>), ParseError> {
        let mut coeff = MultiPoly::one(self.nvars);
        if self.starts_atom() {
            coeff = self.power()?;
            loop {
                match self.peek() {
                    Tok::Star => {
                        self.bump();
                        if let Tok::Ident(name) = self.peek() {
                            if self.is_differential(name) {
                                break;
                            }
                        }
                        let rhs = self.power()?;
                        coeff = &coeff * &rhs;
                    }
                    _ if self.starts_atom() => return self.err("juxtaposition is not allowed; use '*'"),
                    _ => break,
                }
            }
        }
        let idx = match self.peek() {
            Tok::Ident(name) if self.is_differential(name) => self.d_monomial()?,
            _ if self.starts_atom() => return self.err("expected an operator"),
            _ => Vec::new(),
        };
        Ok((coeff, idx))
    }

    fn form_expr(&mut self) -> Result<PolyForm, ParseError> {
        let start = self.offset();
        let mut terms: Vec<(MultiPoly, Vec<usize>, usize)> = Vec::new();
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Tok::Plus => {
                    self.bump();
                    false
                }
                Tok::Minus => {
                    self.bump();
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let at = self.offset();
            let (c, idx) = self.form_term()?;
            terms.push((if neg { -c } else { c }, idx, at));
        }
        let degree = terms.first().map(|t| t.1.len()).unwrap_or(0);
        let mut out = PolyForm::zero(self.nvars, degree);
        for (c, idx, at) in terms {
            if idx.len() != degree {
                return Err(ParseError::new(
                    format!("term of form degree {} in a sum of {degree}-forms", idx.len()),
                    at,
                )
                .located(self.src));
            }
            let t = PolyForm::monomial_form(self.nvars, &idx, c)
                .map_err(|e| ParseError::new(e.to_string(), start).located(self.src))?;
            out = out.checked_add(&t).expect("same degree");
        }
        Ok(out)
    }
}

/// Parses a polynomial in `nvars` variables.
pub fn parse_poly(src: &str, nvars: usize) -> Result<MultiPoly, ParseError> {
    let mut p = Parser::new(src, nvars)?;
    let out = p.poly_expr()?;
    p.expect_end()?;
    Ok(out)
}

/// Parses a differential form on a space with `nvars` coordinates.
pub fn parse_form(src: &str, nvars: usize) -> Result<PolyForm, ParseError> {
    let mut p = Parser::new(src, nvars)?;
    let out = p.form_expr()?;
    p.expect_end()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials() {
        let f = parse_poly("(x1 + x2)^2 - 2*x1*x2", 2).unwrap();
        assert_eq!(f.to_string(), "x1^2 + x2^2");
        let g = parse_poly("3/4*x^2 - y", 2).unwrap();
        assert_eq!(g.to_string(), "3/4*x1^2 - x2");
        assert_eq!(parse_poly("-(x1)", 1).unwrap().to_string(), "-x1");
        assert_eq!(parse_poly("x1 \u{2212} x2", 2).unwrap().to_string(), "x1 - x2");
    }

    #[test]
    fn polynomial_errors_carry_positions() {
        let e = parse_poly("2x1", 1).unwrap_err();
        assert_eq!(e.column, 2);
        let e = parse_poly("x1 + x3", 2).unwrap_err();
        assert_eq!(e.column, 6);
        let e = parse_poly("x1^-2", 1).unwrap_err();
        assert!(e.message.contains("nonnegative"));
        let e = parse_poly("x1 / x2", 2).unwrap_err();
        assert!(e.message.contains("rational literals"));
        let e = parse_poly("(x1 + 1", 1).unwrap_err();
        assert!(e.message.contains("')'"));
        let e = parse_poly("x1\n + $", 1).unwrap_err();
        assert_eq!((e.line, e.column), (2, 4));
    }

    #[test]
    fn forms() {
        let w = parse_form("(x^2+y^2) dx^dy", 2).unwrap();
        assert_eq!(w.degree(), 2);
        assert_eq!(w.to_string(), "(x1^2 + x2^2) dx1^dx2");
        let v = parse_form("x1*dx2 - x2 dx1", 2).unwrap();
        assert_eq!(v.to_string(), "(-x2) dx1 + (x1) dx2");
        let s = parse_form("dx2^dx1", 2).unwrap();
        assert_eq!(s.to_string(), "(-1) dx1^dx2");
        assert_eq!(parse_form("x1^2", 1).unwrap().degree(), 0);
    }

    #[test]
    fn form_errors() {
        assert!(parse_form("dx1 + dx1^dx2", 2).is_err());
        assert!(parse_form("x1 x2 dx1", 2).is_err());
        assert!(parse_form("dx3", 2).is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["(x1 - x2) dx1^dx2", "(1/2*x1*x2 - 3) dx1 + dx2", "x1^3 - 7/3"] {
            let w = parse_form(s, 2).unwrap();
            assert_eq!(parse_form(&w.to_string(), 2).unwrap(), w);
        }
    }
}
