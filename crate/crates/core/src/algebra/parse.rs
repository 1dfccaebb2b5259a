use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::poly::MultiPoly;
use super::var::{Monomial, Var, VarSet};
use super::AlgebraError;

// Grammar (whitespace ignored):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := atom ('^' ['-'] int)?
//   atom   := int | var | '(' expr ')'
struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: VarSet,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, AlgebraError> {
        Err(AlgebraError::Parse { pos: self.pos, msg: msg.into() })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<MultiPoly, AlgebraError> {
        let mut acc = MultiPoly::zero(self.vars);
        let mut negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, AlgebraError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {}
                _ => return Ok(acc),
            }
            acc = &acc * &self.factor()?;
        }
    }

    fn factor(&mut self) -> Result<MultiPoly, AlgebraError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let at = self.pos;
        let e: u32 = match self.digits()?.parse() {
            Ok(e) => e,
            Err(_) => return Err(AlgebraError::Parse { pos: at, msg: "exponent too large".into() }),
        };
        if !neg {
            return Ok(base.pow(e));
        }
        match base.terms().collect::<Vec<_>>().as_slice() {
            [(m, c)] if c.magnitude().is_one() => {
                let mut inv = Monomial::ONE;
                for (a, b) in inv.0.iter_mut().zip(m.0) {
                    *a = -b;
                }
                let p = MultiPoly::from_terms(self.vars, [(inv, (*c).clone())])?;
                Ok(p.pow(e))
            }
            _ => self.err("negative exponent on a non-monomial"),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                Ok(MultiPoly::constant(self.vars, BigInt::from_str(d).expect("digits")))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let v: Var = name.parse()?;
                if !self.vars.contains(v) {
                    return Err(AlgebraError::UndeclaredVar {
                        vars: self.vars,
                        monomial: name.to_string(),
                    });
                }
                MultiPoly::var(self.vars, v)
            }
            Some(c) => self.err(format!("unexpected `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

impl MultiPoly {
    /// Parses the text format over an explicit variable list.
    pub fn parse_with_vars(s: &str, vars: VarSet) -> Result<Self, AlgebraError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0, vars };
        let out = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(out)
    }

    /// Parses the text format, declaring exactly the variables that occur.
    pub fn parse(s: &str) -> Result<Self, AlgebraError> {
        let all: VarSet = Var::ALL.into_iter().collect();
        let mut declared = VarSet::EMPTY;
        // Variables named in the text, even if they cancel.
        let mut chars = s.char_indices().peekable();
        while let Some((i, c)) = chars.next() {
            if c.is_ascii_alphabetic() {
                let mut end = i + c.len_utf8();
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_alphabetic() {
                        end = j + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                declared = declared.with(s[i..end].parse()?);
            }
        }
        let p = Self::parse_with_vars(s, all)?;
        p.redeclare(declared)
    }
}

impl FromStr for MultiPoly {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MultiPoly::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_print_format() {
        let p = MultiPoly::parse("3*t^2*q^-1-t+3").unwrap();
        assert_eq!(p.vars(), VarSet::new(&[Var::T, Var::Q]));
        assert_eq!(p.to_string(), "3*t^2*q^-1-t+3");
    }

    #[test]
    fn parses_parentheses_and_implicit_products() {
        let p = MultiPoly::parse("2t(1+t)^2").unwrap();
        assert_eq!(p.to_string(), "2*t^3+4*t^2+2*t");
        let z = MultiPoly::parse("q - q").unwrap();
        assert!(z.is_zero());
        assert_eq!(z.vars(), VarSet::new(&[Var::Q]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(MultiPoly::parse("z+1"), Err(AlgebraError::UnknownVar(_))));
        assert!(matches!(MultiPoly::parse("(1+t)^-1"), Err(AlgebraError::Parse { .. })));
        assert!(matches!(MultiPoly::parse("1+"), Err(AlgebraError::Parse { .. })));
        assert!(matches!(
            MultiPoly::parse_with_vars("t", VarSet::new(&[Var::Q])),
            Err(AlgebraError::UndeclaredVar { .. })
        ));
    }
}
