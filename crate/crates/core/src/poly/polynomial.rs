use std::cmp::Ordering;
use std::fmt;

use crate::coeff::{Domain, Scalar};
use crate::error::{Error, Result};

use super::monomial::{variable_names, Monomial};

/// A nonzero coefficient times a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub monomial: Monomial,
}

impl Term {
    pub fn new(coeff: Scalar, monomial: Monomial) -> Self {
        Term { coeff, monomial }
    }
}

/// Sparse polynomial: terms strictly descending in grevlex, no zero
/// coefficients. The zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    domain: Domain,
    nvars: usize,
    terms: Vec<Term>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Output of [`Polynomial::divide`]: `f = sum(quotients[i] * divisors[i]) + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl Polynomial {
    pub fn zero(domain: Domain, nvars: usize) -> Self {
        Polynomial {
            domain,
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(domain: Domain, nvars: usize, c: Scalar) -> Result<Self> {
        Self::from_terms(domain, nvars, vec![Term::new(c, Monomial::one(nvars))])
    }

    pub fn from_term(domain: Domain, term: Term) -> Result<Self> {
        let nvars = term.monomial.nvars();
        Self::from_terms(domain, nvars, vec![term])
    }

    /// Builds a normalized polynomial from terms in any order. Repeated
    /// monomials are merged and zero coefficients dropped.
    pub fn from_terms(domain: Domain, nvars: usize, mut terms: Vec<Term>) -> Result<Self> {
        for t in &terms {
            if t.coeff.domain() != domain {
                return Err(Error::DomainMismatch {
                    left: domain,
                    right: t.coeff.domain(),
                });
            }
            if t.monomial.nvars() != nvars {
                return Err(Error::arity(nvars, t.monomial.nvars()));
            }
        }
        terms.sort_by(|a, b| b.monomial.cmp(&a.monomial));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = &last.coeff + &t.coeff;
                }
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        Ok(Polynomial {
            domain,
            nvars,
            terms: merged,
        })
    }

    /// Two-variable convenience: `coeffs` paired with `(a, b)` for `x^a y^b`.
    pub fn from_xy(domain: Domain, terms: &[(i64, u32, u32)]) -> Self {
        let terms = terms
            .iter()
            .map(|&(c, a, b)| Term::new(domain.from_i64(c), Monomial::xy(a, b)))
            .collect();
        Self::from_terms(domain, 2, terms).expect("consistent two-variable terms")
    }

    pub(crate) fn from_sorted_unchecked(domain: Domain, nvars: usize, terms: Vec<Term>) -> Self {
        let p = Polynomial {
            domain,
            nvars,
            terms,
        };
        debug_assert!(p.is_normalized(), "unnormalized polynomial {p:?}");
        p
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The grevlex-greatest term.
    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        self.leading_term().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Result<&Scalar> {
        self.leading_term().map(|t| &t.coeff)
    }

    /// Maximum total degree over the terms.
    pub fn total_degree(&self) -> Result<u32> {
        // grevlex is degree-compatible, so the leading term has maximal degree
        self.leading_monomial().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(lt) => self
                .terms
                .iter()
                .all(|t| t.monomial.degree() == lt.monomial.degree()),
        }
    }

    pub fn coeff_of(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms
            .binary_search_by(|t| m.cmp(&t.monomial))
            .ok()
            .map(|i| &self.terms[i].coeff)
    }

    /// Strict descent, no zero coefficients, consistent domain and arity.
    pub fn is_normalized(&self) -> bool {
        self.terms.iter().all(|t| {
            !t.coeff.is_zero()
                && t.coeff.domain() == self.domain
                && t.monomial.nvars() == self.nvars
        }) && self
            .terms
            .windows(2)
            .all(|w| w[0].monomial.cmp(&w[1].monomial) == Ordering::Greater)
    }

    pub fn arith(&self, other: &Polynomial, op: PolyOp) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(match op {
            PolyOp::Add => self.merge(other, false),
            PolyOp::Sub => self.merge(other, true),
            PolyOp::Mul => self.mul_unchecked(other),
        })
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, PolyOp::Add)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, PolyOp::Sub)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, PolyOp::Mul)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            domain: self.domain,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(-&t.coeff, t.monomial.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Result<Polynomial> {
        if s.domain() != self.domain {
            return Err(Error::DomainMismatch {
                left: self.domain,
                right: s.domain(),
            });
        }
        if s.is_zero() {
            return Ok(Polynomial::zero(self.domain, self.nvars));
        }
        Ok(Polynomial {
            domain: self.domain,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * s, t.monomial.clone()))
                .collect(),
        })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        if m.nvars() != self.nvars {
            return Err(Error::arity(self.nvars, m.nvars()));
        }
        // multiplication by a monomial preserves grevlex order
        Ok(Polynomial {
            domain: self.domain,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(t.coeff.clone(), t.monomial.mul_unchecked(m)))
                .collect(),
        })
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Result<Polynomial> {
        let lc = self.leading_coeff()?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        self.scale(&lc.inverse()?)
    }

    /// Multivariate division by an ordered list of divisors. At each step the
    /// first divisor whose leading monomial divides the current leading term
    /// is used; otherwise that term moves to the remainder.
    pub fn divide(&self, divisors: &[Polynomial]) -> Result<Division> {
        for g in divisors {
            self.check_ring(g)?;
            if g.is_zero() {
                return Err(Error::ZeroDivisor);
            }
        }
        let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
        let mut remainder = Vec::new();
        let mut p = self.clone();
        while let Some(lt) = p.terms.first().cloned() {
            let hit = divisors
                .iter()
                .enumerate()
                .find(|(_, g)| g.terms[0].monomial.divides_unchecked(&lt.monomial));
            match hit {
                Some((i, g)) => {
                    let glt = &g.terms[0];
                    let c = &lt.coeff / &glt.coeff;
                    let m = glt.monomial.quotient_unchecked(&lt.monomial);
                    p = p.sub_term_times(&c, &m, g);
                    quotients[i].push(Term::new(c, m));
                }
                None => {
                    p.terms.remove(0);
                    remainder.push(lt);
                }
            }
        }
        let quotients = quotients
            .into_iter()
            .map(|terms| Polynomial::from_terms(self.domain, self.nvars, terms))
            .collect::<Result<Vec<_>>>()?;
        Ok(Division {
            quotients,
            remainder: Polynomial::from_sorted_unchecked(self.domain, self.nvars, remainder),
        })
    }

    pub(crate) fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch {
                left: self.domain,
                right: other.domain,
            });
        }
        if self.nvars != other.nvars {
            return Err(Error::arity(self.nvars, other.nvars));
        }
        Ok(())
    }

    /// `self - c * m * g`, merged in one pass.
    pub(crate) fn sub_term_times(&self, c: &Scalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|t| Term::new(-(&t.coeff * c), t.monomial.mul_unchecked(m)))
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => x.monomial.cmp(&y.monomial),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let x = a.next().unwrap();
                    let y = b.next().unwrap();
                    let s = &x.coeff + &y.coeff;
                    if !s.is_zero() {
                        out.push(Term::new(s, y.monomial));
                    }
                }
            }
        }
        Polynomial::from_sorted_unchecked(self.domain, self.nvars, out)
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Scalar| if negate { -c } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (x, y) = (&self.terms[i], &other.terms[j]);
            match x.monomial.cmp(&y.monomial) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term::new(sign(&y.coeff), y.monomial.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = if negate {
                        &x.coeff - &y.coeff
                    } else {
                        &x.coeff + &y.coeff
                    };
                    if !s.is_zero() {
                        out.push(Term::new(s, x.monomial.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            other.terms[j..]
                .iter()
                .map(|y| Term::new(sign(&y.coeff), y.monomial.clone())),
        );
        Polynomial::from_sorted_unchecked(self.domain, self.nvars, out)
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(self.domain, self.nvars);
        for t in &self.terms {
            let neg = -&t.coeff;
            acc = acc.sub_term_times(&neg, &t.monomial, other);
        }
        acc
    }

    /// Writes the polynomial with the given variable names; see
    /// [`crate::poly::text`] for the grammar.
    pub fn write_with(&self, names: &[String], f: &mut impl fmt::Write) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            let abs = if negative { -&t.coeff } else { t.coeff.clone() };
            match (k, negative) {
                (0, true) => f.write_char('-')?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                t.monomial.write_with(names, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(&variable_names(self.nvars), f)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({self})", self.domain)
    }
}
