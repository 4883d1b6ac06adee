//! S-polynomials, normal forms and Buchberger's algorithm under grevlex.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::coeff::Domain;
use crate::error::{Error, Result};
use crate::monideal::MonomialIdeal;
use crate::poly::text::{format_ideal_text, parse_ideal_text};
use crate::poly::{Monomial, Polynomial};

/// A finitely generated ideal of `K[x1..xk]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    domain: Domain,
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(domain: Domain, nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidSpec(
                "an ideal needs at least one generator".into(),
            ));
        }
        for g in &generators {
            if g.domain() != domain {
                return Err(Error::DomainMismatch {
                    left: domain,
                    right: g.domain(),
                });
            }
            if g.nvars() != nvars {
                return Err(Error::arity(nvars, g.nvars()));
            }
            if g.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        Ok(Ideal {
            domain,
            nvars,
            generators,
        })
    }

    /// Builds an ideal from generators sharing one ring.
    pub fn from_generators(generators: Vec<Polynomial>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::InvalidSpec("an ideal needs at least one generator".into()))?;
        let (domain, nvars) = (first.domain(), first.nvars());
        Self::new(domain, nvars, generators)
    }

    /// Parses the ideal file format (`ring <k> vars over <domain>` header,
    /// one generator per line).
    pub fn parse(text: &str) -> Result<Self> {
        let parsed = parse_ideal_text(text)?;
        Self::new(parsed.domain, parsed.nvars, parsed.generators)
    }

    pub fn to_text(&self) -> String {
        format_ideal_text(self.domain, self.nvars, &self.generators)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

/// Output of [`buchberger`]: a reduced grevlex Gröbner basis, sorted by
/// increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    domain: Domain,
    nvars: usize,
    basis: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| {
                g.leading_monomial()
                    .expect("basis elements are nonzero")
                    .clone()
            })
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, &self.basis)
    }

    /// Ideal membership; exact because the basis is a Gröbner basis.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Re-checks the Buchberger criterion over every pair.
    pub fn satisfies_criterion(&self) -> Result<bool> {
        satisfies_buchberger_criterion(&self.basis)
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        initial_ideal(self)
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.basis {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// `(L / LT(f)) f - (L / LT(g)) g` with `L = lcm(LM(f), LM(g))` taken with
/// unit coefficient.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.check_ring(g)?;
    let (lf, lg) = (f.leading_term()?, g.leading_term()?);
    let lcm = lf.monomial.lcm_unchecked(&lg.monomial);
    let left = f
        .mul_monomial(&lf.monomial.quotient_unchecked(&lcm))?
        .scale(&lf.coeff.inverse()?)?;
    let cg = lg.coeff.inverse()?;
    Ok(left.sub_term_times(&cg, &lg.monomial.quotient_unchecked(&lcm), g))
}

/// Remainder of `f` on division by `divisors` (fully reduced: no term of the
/// result is divisible by any divisor's leading monomial).
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    for g in divisors {
        f.check_ring(g)?;
        if g.is_zero() {
            return Err(Error::ZeroDivisor);
        }
    }
    Ok(reduce(f, divisors))
}

fn reduce(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let (domain, nvars) = (f.domain(), f.nvars());
    let mut remainder = Vec::new();
    let mut p = f.clone();
    while let Some(lt) = p.terms().first() {
        let hit = divisors
            .iter()
            .find(|g| g.terms()[0].monomial.divides_unchecked(&lt.monomial));
        match hit {
            Some(g) => {
                let glt = &g.terms()[0];
                let c = &lt.coeff / &glt.coeff;
                let m = glt.monomial.quotient_unchecked(&lt.monomial);
                p = p.sub_term_times(&c, &m, g);
            }
            None => {
                // every later term of p is smaller, so the remainder stays sorted
                let mut terms = p.into_terms();
                let head = terms.remove(0);
                remainder.push(head);
                p = Polynomial::from_sorted_unchecked(domain, nvars, terms);
            }
        }
    }
    Polynomial::from_sorted_unchecked(domain, nvars, remainder)
}

/// True iff every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn satisfies_buchberger_criterion(basis: &[Polynomial]) -> Result<bool> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !normal_form(&s_polynomial(&basis[i], &basis[j])?, basis)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Skip a pair `(i, j)` when some `k` has `LM(g_k) | lcm(i, j)` and both
    /// `(i, k)` and `(j, k)` have already left the queue.
    pub chain_criterion: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            chain_criterion: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub skipped_coprime: usize,
    pub skipped_chain: usize,
}

pub fn buchberger(ideal: &Ideal) -> Result<GroebnerBasis> {
    buchberger_with(ideal, BuchbergerOptions::default()).map(|(gb, _)| gb)
}

/// Buchberger's algorithm with the normal selection strategy: the pending
/// pair with the grevlex-smallest lcm is processed first, ties broken by
/// index pair. The result is inter-reduced and made monic.
pub fn buchberger_with(
    ideal: &Ideal,
    options: BuchbergerOptions,
) -> Result<(GroebnerBasis, BuchbergerStats)> {
    let mut stats = BuchbergerStats::default();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut queue: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push = |basis: &mut Vec<Polynomial>,
                queue: &mut BTreeSet<(Monomial, usize, usize)>,
                pending: &mut HashSet<(usize, usize)>,
                g: Polynomial| {
        let j = basis.len();
        let lm = g.leading_monomial().expect("nonzero").clone();
        for (i, h) in basis.iter().enumerate() {
            let lcm = h.leading_monomial().expect("nonzero").lcm_unchecked(&lm);
            queue.insert((lcm, i, j));
            pending.insert((i, j));
        }
        basis.push(g);
    };

    for g in ideal.generators() {
        let g = g.monic()?;
        push(&mut basis, &mut queue, &mut pending, g);
    }

    while let Some((lcm, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        let (li, lj) = (basis[i].leading_monomial()?, basis[j].leading_monomial()?);
        if li.is_coprime(lj) {
            stats.skipped_coprime += 1;
            continue;
        }
        if options.chain_criterion && chain_skips(&basis, &pending, &lcm, i, j) {
            stats.skipped_chain += 1;
            continue;
        }
        stats.pairs_reduced += 1;
        let h = reduce(&s_polynomial(&basis[i], &basis[j])?, &basis);
        if h.is_zero() {
            stats.zero_reductions += 1;
        } else {
            let h = h.monic()?;
            push(&mut basis, &mut queue, &mut pending, h);
        }
    }

    let basis = reduce_basis(basis)?;
    Ok((
        GroebnerBasis {
            domain: ideal.domain(),
            nvars: ideal.nvars(),
            basis,
            reduced: true,
        },
        stats,
    ))
}

fn chain_skips(
    basis: &[Polynomial],
    pending: &HashSet<(usize, usize)>,
    lcm: &Monomial,
    i: usize,
    j: usize,
) -> bool {
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    basis.iter().enumerate().any(|(k, g)| {
        k != i
            && k != j
            && g.terms()[0].monomial.divides_unchecked(lcm)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
    })
}

/// Minimalizes, inter-reduces, makes monic, and sorts by increasing leading
/// monomial.
fn reduce_basis(basis: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial()?;
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let hl = &h.terms()[0].monomial;
            // on equal leading monomials keep the first occurrence
            k != idx && hl.divides_unchecked(lm) && (hl != lm || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, g)| g.clone())
            .collect();
        reduced.push(reduce(&minimal[idx], &others).monic()?);
    }
    reduced.sort_by(|a, b| a.terms()[0].monomial.cmp(&b.terms()[0].monomial));
    Ok(reduced)
}

/// The monomial ideal generated by the leading monomials of `basis`.
pub fn initial_ideal(basis: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::minimalize(basis.leading_monomials())
        .expect("a Gröbner basis has at least one element of uniform arity")
}
