//! Text form of polynomials and ideal files.
//!
//! Polynomials print as `c*x^a*y^b + ...` in descending grevlex order, with
//! `^1` and a unit coefficient elided and negative rational coefficients
//! written as ` - c*...`. The parser accepts that output verbatim and is a
//! little more permissive: arbitrary whitespace, repeated factors
//! (`x*x` = `x^2`), several numeric factors, and `a/b` coefficients.
//!
//! Ideal files carry a header line `ring <k> vars over <domain>` followed by
//! one polynomial per line. Blank lines and lines starting with `#` are
//! skipped.

use crate::coeff::{Domain, Scalar};
use crate::error::{Error, Result};

use super::monomial::{variable_names, Monomial};
use super::polynomial::{Polynomial, Term};

/// Parses a polynomial in `nvars` variables named as [`variable_names`] names them.
pub fn parse_polynomial(text: &str, domain: Domain, nvars: usize) -> Result<Polynomial> {
    parse_polynomial_at(text, domain, &variable_names(nvars), 1)
}

/// Same as [`parse_polynomial`] with explicit names; `line` is used for error
/// positions.
pub fn parse_polynomial_at(
    text: &str,
    domain: Domain,
    names: &[String],
    line: usize,
) -> Result<Polynomial> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        line,
        domain,
        names,
    };
    let terms = p.polynomial()?;
    Polynomial::from_terms(domain, names.len(), terms)
}

/// Parsed contents of an ideal file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealText {
    pub domain: Domain,
    pub nvars: usize,
    pub generators: Vec<Polynomial>,
}

pub fn parse_ideal_text(text: &str) -> Result<IdealText> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "missing `ring <k> vars over <domain>` header"))?;
    let (nvars, domain) = parse_header(header, hline)?;
    let names = variable_names(nvars);
    let generators = lines
        .map(|(ln, l)| parse_polynomial_at(l, domain, &names, ln))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealText {
        domain,
        nvars,
        generators,
    })
}

/// Inverse of [`parse_ideal_text`].
pub fn format_ideal_text(domain: Domain, nvars: usize, generators: &[Polynomial]) -> String {
    let mut out = format!("ring {nvars} vars over {domain}\n");
    for g in generators {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

fn parse_header(header: &str, line: usize) -> Result<(usize, Domain)> {
    let words: Vec<&str> = header.split_whitespace().collect();
    let bad = || {
        Error::parse(
            line,
            1,
            format!("expected `ring <k> vars over <domain>`, got {header:?}"),
        )
    };
    match words.as_slice() {
        ["ring", k, "vars" | "var", "over", domain] => {
            let nvars: usize = k.parse().map_err(|_| bad())?;
            if nvars == 0 {
                return Err(Error::parse(line, 6, "ring needs at least one variable"));
            }
            let domain = domain.parse::<Domain>().map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(line, 1, message),
                other => other,
            })?;
            Ok((nvars, domain))
        }
        _ => Err(bad()),
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    domain: Domain,
    names: &'a [String],
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.pos + 1, message)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn polynomial(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            None => return Err(self.err("empty polynomial")),
            _ => false,
        };
        loop {
            let mut t = self.term()?;
            if negate {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            match self.peek() {
                None => break,
                Some('+') => negate = false,
                Some('-') => negate = true,
                Some(c) => return Err(self.err(format!("unexpected {c:?}"))),
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Term> {
        let nvars = self.names.len();
        let mut coeff = self.domain.one();
        let mut exps = vec![0u32; nvars];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let s = self.number_literal()?;
                    coeff = &coeff * &s;
                }
                Some(c) if c.is_alphabetic() => {
                    let (var, e) = self.power()?;
                    exps[var] = exps[var]
                        .checked_add(e)
                        .ok_or_else(|| self.err("exponent overflow"))?;
                }
                Some(c) => return Err(self.err(format!("expected a factor, found {c:?}"))),
                None => return Err(self.err("expected a factor, found end of input")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(Term::new(coeff, Monomial::new(exps)))
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn number_literal(&mut self) -> Result<Scalar> {
        let start = self.pos;
        let num = self.digits()?;
        let text = if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.digits()?;
            format!("{num}/{den}")
        } else {
            num
        };
        self.domain.parse_scalar(&text).map_err(|e| match e {
            Error::DivisionByZero => Error::parse(self.line, start + 1, "zero denominator"),
            Error::Parse { message, .. } => Error::parse(self.line, start + 1, message),
            other => other,
        })
    }

    fn power(&mut self) -> Result<(usize, u32)> {
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        let ident: String = self.chars[start..self.pos].iter().collect();
        let var = self.names.iter().position(|n| *n == ident).ok_or_else(|| {
            Error::parse(
                self.line,
                start + 1,
                format!(
                    "unknown variable {ident:?} (ring has {} variables: {})",
                    self.names.len(),
                    self.names.join(", ")
                ),
            )
        })?;
        let mut e = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            let d = self.digits()?;
            e = d.parse().map_err(|_| self.err("exponent too large"))?;
        }
        Ok((var, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_text() {
        let src = "7*x^3 + 11*x^2*y - 13/2*x*y^2 + y^3 - 1";
        let f = parse_polynomial(src, Domain::Rationals, 2).unwrap();
        assert_eq!(f.to_string(), src);
    }

    #[test]
    fn permissive_input() {
        let f = parse_polynomial(" y*y + 2 * x *3 - x ", Domain::Rationals, 2).unwrap();
        assert_eq!(f.to_string(), "y^2 + 5*x");
        let g = parse_polynomial("-x1*x3 + x2^2", Domain::Rationals, 3).unwrap();
        assert_eq!(g.to_string(), "x2^2 - x1*x3");
    }

    #[test]
    fn prime_field_residues() {
        let f = parse_polynomial("-x + 1/2", Domain::prime(7).unwrap(), 2).unwrap();
        assert_eq!(f.to_string(), "6*x + 4");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_polynomial("x + z", Domain::Rationals, 2).unwrap_err();
        assert!(
            matches!(
                e,
                Error::Parse {
                    line: 1,
                    column: 5,
                    ..
                }
            ),
            "{e}"
        );
        let e = parse_polynomial("x + ", Domain::Rationals, 2).unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
        let e = parse_polynomial("x1 + x2", Domain::Rationals, 2).unwrap_err();
        assert!(matches!(e, Error::Parse { column: 1, .. }));
        let e = parse_polynomial("3/0*x", Domain::Rationals, 2).unwrap_err();
        assert!(matches!(e, Error::Parse { column: 1, .. }));
    }

    #[test]
    fn ideal_file() {
        let text = "ring 2 vars over rational\n# comment\nx^2 + 3*x*y + 5*y^2\n\n7*x^3 + 17*y^3\n";
        let parsed = parse_ideal_text(text).unwrap();
        assert_eq!(parsed.nvars, 2);
        assert_eq!(parsed.domain, Domain::Rationals);
        assert_eq!(parsed.generators.len(), 2);
        let again = format_ideal_text(parsed.domain, parsed.nvars, &parsed.generators);
        assert_eq!(parse_ideal_text(&again).unwrap(), parsed);

        let e = parse_ideal_text("ring 2 vars over rational\nx*y*x3\n").unwrap_err();
        assert!(
            matches!(
                e,
                Error::Parse {
                    line: 2,
                    column: 5,
                    ..
                }
            ),
            "{e}"
        );
        assert!(parse_ideal_text("ring two vars over rational").is_err());
        assert!(parse_ideal_text("ring 2 vars over prime:8").is_err());
    }
}
