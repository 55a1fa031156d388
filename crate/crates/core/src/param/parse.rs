//! Polynomial expression parser and the printed normal form.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*      division only by nonzero constants
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')' | 'sqrt' '(' integer ')'
//! ```
//!
//! `sqrt(n)` is accepted only when parsing with surds enabled; all surds of one
//! expression must share the same square-free part.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::field::rat_to_string;
use crate::exact::quad::sqrt_rat;
use crate::exact::{MPoly, QuadExt, Rat};

/// Parses a polynomial with rational coefficients over the declared variables.
pub fn parse_poly(text: &str, vars: &[&str]) -> Result<MPoly<Rat>> {
    let p = Parser::new(text, vars, false).run()?;
    Ok(p.map(|c| c.rational_part().clone()))
}

/// Parses a polynomial whose coefficients may involve one quadratic surd.
pub fn parse_poly_surd(text: &str, vars: &[&str]) -> Result<MPoly<QuadExt>> {
    Parser::new(text, vars, true).run()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
    surds: bool,
    field: Option<i64>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, vars: &'a [&'a str], surds: bool) -> Self {
        Parser { src: text.as_bytes(), pos: 0, vars, surds, field: None }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn run(mut self) -> Result<MPoly<QuadExt>> {
        if self.peek().is_none() {
            return self.err("empty expression");
        }
        let p = self.expr()?;
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<MPoly<QuadExt>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly<QuadExt>> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.unary()?;
                    acc = &acc * &f;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let f = self.unary()?;
                    let c = match f.to_constant() {
                        Some(c) => c,
                        None => return Err(Error::Syntax { pos: at, msg: "division by a non-constant".into() }),
                    };
                    if c.is_zero() {
                        return Err(Error::ZeroDenominator { pos: at });
                    }
                    acc = acc.scale(&(QuadExt::one() / c));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MPoly<QuadExt>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly<QuadExt>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let n = self.integer()?;
            let k: u32 = match u32::try_from(n) {
                Ok(k) if k <= 4096 => k,
                _ => return self.err("exponent must be a small non-negative integer"),
            };
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<MPoly<QuadExt>> {
        let n = self.vars.len();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(MPoly::constant(n, QuadExt::from(Rat::from_integer(v))))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(i) = self.vars.iter().position(|v| *v == name) {
                    return Ok(MPoly::var(n, i));
                }
                if name == "sqrt" && self.surds {
                    return self.surd(start);
                }
                Err(Error::UndeclaredVariable { name: name.to_string(), pos: start })
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }

    fn surd(&mut self, start: usize) -> Result<MPoly<QuadExt>> {
        self.expect(b'(')?;
        self.skip_ws();
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        };
        let mut v = self.integer()?;
        if neg {
            v = -v;
        }
        self.expect(b')')?;
        let q = sqrt_rat(&Rat::from_integer(v));
        if let Some(d) = q.field() {
            if self.field.is_some_and(|f| f != d) {
                return Err(Error::Syntax { pos: start, msg: "expression mixes different square roots".into() });
            }
            self.field = Some(d);
        }
        Ok(MPoly::constant(self.vars.len(), q))
    }
}

impl MPoly<QuadExt> {
    fn to_constant(&self) -> Option<QuadExt> {
        match self.terms().count() {
            0 => Some(QuadExt::zero()),
            1 => {
                let (e, c) = self.terms().next().unwrap();
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }
}

/// Coefficients that know how to print themselves inside a term.
pub trait CoeffFmt {
    /// `(negative, magnitude text)` for a coefficient printed as `+m` or `-m`.
    fn signed_text(&self) -> (bool, String);
}

impl CoeffFmt for Rat {
    fn signed_text(&self) -> (bool, String) {
        let neg = *self < Rat::zero();
        let mag = if neg { -self.clone() } else { self.clone() };
        (neg, rat_to_string(&mag))
    }
}

impl CoeffFmt for QuadExt {
    fn signed_text(&self) -> (bool, String) {
        if let Some(r) = self.to_rational() {
            return r.signed_text();
        }
        (false, format!("({self})"))
    }
}

/// Printed normal form: terms by decreasing degree in the first variable
/// (lexicographic), every coefficient explicit, `*` and `^` always written.
pub fn print_poly<F: crate::exact::Field + CoeffFmt>(p: &MPoly<F>, vars: &[&str]) -> String {
    let mut out = String::new();
    for (e, c) in p.terms().rev() {
        let (neg, mag) = c.signed_text();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&mag);
        for (v, &k) in vars.iter().zip(e) {
            if k > 0 {
                out.push_str(&format!("*{v}^{k}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Rational coefficient of a constant polynomial, used by tests and the CLI.
pub fn constant_value(p: &MPoly<Rat>) -> Option<Rat> {
    match p.terms().count() {
        0 => Some(Rat::zero()),
        1 => {
            let (e, c) = p.terms().next().unwrap();
            e.iter().all(|&k| k == 0).then(|| c.clone())
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    const T: [&str; 2] = ["t0", "t1"];

    #[test]
    fn basic_forms() {
        let p = parse_poly("t0^2+t1^2", &T).unwrap();
        assert_eq!(print_poly(&p, &T), "1*t0^2+1*t1^2");
        let g = parse_poly("2*t0*t1*(t1^2-t0^2)", &T).unwrap();
        assert_eq!(print_poly(&g, &T), "-2*t0^3*t1^1+2*t0^1*t1^3");
        let h = parse_poly("1/2*x - y^3", &["x", "y"]).unwrap();
        assert_eq!(h.coeff(&[1, 0]), rat(1, 2));
        assert_eq!(h.coeff(&[0, 3]), rat(-1, 1));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_poly("t0 + z", &T),
            Err(Error::UndeclaredVariable { name: "z".into(), pos: 5 })
        );
        assert_eq!(parse_poly("t0/0", &T), Err(Error::ZeroDenominator { pos: 3 }));
        assert!(matches!(parse_poly("t0 + * t1", &T), Err(Error::Syntax { pos: 5, .. })));
        assert!(matches!(parse_poly("(t0", &T), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("sqrt(2)*t0", &T), Err(Error::UndeclaredVariable { .. })));
    }

    #[test]
    fn surds_round_trip() {
        let p = parse_poly_surd("(1/2+sqrt(2))*x^1 - sqrt(2)", &["x"]).unwrap();
        let s = print_poly(&p, &["x"]);
        assert_eq!(parse_poly_surd(&s, &["x"]).unwrap(), p);
        assert!(parse_poly_surd("sqrt(2)+sqrt(3)", &["x"]).is_err());
    }

    #[test]
    fn printed_form_round_trips() {
        for s in ["0", "-7/3", "3*t0^4-1/5*t0^1*t1^3+1*t1^4", "(t0-t1)^5"] {
            let p = parse_poly(s, &T).unwrap();
            let printed = print_poly(&p, &T);
            assert_eq!(parse_poly(&printed, &T).unwrap(), p);
            assert_eq!(print_poly(&parse_poly(&printed, &T).unwrap(), &T), printed);
        }
    }
}
