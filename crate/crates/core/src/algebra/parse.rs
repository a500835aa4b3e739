//! Text form of polynomials.
//!
//! ```text
//! polynomial := ["-"] term (("+" | "-") term)*
//! term       := coeff | [coeff "*"] factor ("*" factor)*
//! factor     := var ["^" uint]
//! ```
//!
//! Whitespace is ignored. Coefficients are reduced mod `p`.

use super::field::PrimeField;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::error::{HkError, Result};

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    vars: &'a [String],
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.at < self.chars.len() && self.chars[self.at].1.is_whitespace() {
            self.at += 1;
        }
    }

    fn position(&self) -> usize {
        self.chars
            .get(self.at)
            .map(|c| c.0)
            .unwrap_or_else(|| self.chars.last().map(|c| c.0 + c.1.len_utf8()).unwrap_or(0))
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.at).map(|c| c.1)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(HkError::Parse {
            position: self.position(),
            message: message.into(),
        })
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.at;
        let mut v: u64 = 0;
        while let Some(&(_, c)) = self.chars.get(self.at) {
            let Some(d) = c.to_digit(10) else { break };
            v = match v.checked_mul(10).and_then(|v| v.checked_add(d as u64)) {
                Some(v) => v,
                None => return self.error("integer too large"),
            };
            self.at += 1;
        }
        if self.at == start {
            return self.error("expected an unsigned integer");
        }
        Ok(v)
    }

    fn ident(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.at;
        while let Some(&(_, c)) = self.chars.get(self.at) {
            if c.is_alphanumeric() || c == '_' {
                if self.at == start && c.is_ascii_digit() {
                    break;
                }
                self.at += 1;
            } else {
                break;
            }
        }
        if self.at == start {
            return self.error("expected a variable");
        }
        let name: String = self.chars[start..self.at].iter().map(|c| c.1).collect();
        match self.vars.iter().position(|v| *v == name) {
            Some(i) => Ok(i),
            None => {
                self.at = start;
                self.error(format!("unknown variable `{name}`"))
            }
        }
    }

    fn factor(&mut self, exps: &mut [u64]) -> Result<()> {
        let i = self.ident()?;
        let e = if self.peek() == Some('^') {
            self.at += 1;
            self.uint()?
        } else {
            1
        };
        exps[i] = match exps[i].checked_add(e) {
            Some(v) => v,
            None => return self.error("exponent overflow"),
        };
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, u64)> {
        let mut exps = vec![0u64; self.vars.len()];
        let mut coeff = 1u64;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff = self.uint()?;
                if self.peek() == Some('*') {
                    self.at += 1;
                    self.factor(&mut exps)?;
                } else {
                    return Ok((Monomial::new(exps), coeff));
                }
            }
            Some(_) => self.factor(&mut exps)?,
            None => return self.error("expected a term"),
        }
        while self.peek() == Some('*') {
            self.at += 1;
            self.factor(&mut exps)?;
        }
        Ok((Monomial::new(exps), coeff))
    }
}

/// Parses `text` as a polynomial in `vars` over `field`.
pub fn parse_polynomial(text: &str, vars: &[String], field: PrimeField) -> Result<Polynomial> {
    let mut cur = Cursor {
        chars: text.char_indices().collect(),
        at: 0,
        vars,
    };
    let mut terms = Vec::new();
    let mut negate = false;
    if cur.peek() == Some('-') {
        cur.at += 1;
        negate = true;
    }
    loop {
        let (m, c) = cur.term()?;
        let c = field.reduce(c);
        terms.push((m, if negate { field.neg(c) } else { c }));
        match cur.peek() {
            None => break,
            Some('+') => negate = false,
            Some('-') => negate = true,
            Some(c) => return cur.error(format!("unexpected `{c}`")),
        }
        cur.at += 1;
    }
    Polynomial::from_terms(field, vars.len(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn cusp_relation() {
        let k = PrimeField::new(2).unwrap();
        let f = parse_polynomial("x^2 - y^3", &vars(), k).unwrap();
        assert_eq!(f.coefficient(&Monomial::new(vec![2, 0])), 1);
        assert_eq!(f.coefficient(&Monomial::new(vec![0, 3])), 1);
        let k5 = PrimeField::new(5).unwrap();
        let g = parse_polynomial(" 3*x*y^2 - 2 + y", &vars(), k5).unwrap();
        assert_eq!(g.coefficient(&Monomial::new(vec![1, 2])), 3);
        assert_eq!(g.coefficient(&Monomial::one(2)), 3);
        assert_eq!(g.len(), 3);
        let h = parse_polynomial("-x*x", &vars(), k5).unwrap();
        assert_eq!(h.coefficient(&Monomial::new(vec![2, 0])), 4);
    }

    #[test]
    fn reports_positions() {
        let k = PrimeField::new(2).unwrap();
        match parse_polynomial("x^2 + z", &vars(), k) {
            Err(HkError::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("{other:?}"),
        }
        match parse_polynomial("x^ + y", &vars(), k) {
            Err(HkError::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial("x y", &vars(), k).is_err());
        assert!(parse_polynomial("", &vars(), k).is_err());
        assert!(parse_polynomial("x +", &vars(), k).is_err());
    }
}
