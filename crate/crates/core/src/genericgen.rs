//! Random stand-ins for generic forms, and the reduction of the second
//! generator of a two-variable pair modulo the first.
//!
//! Algebraic independence of coefficients cannot be checked numerically, so
//! forms are dense with pairwise-distinct random nonzero coefficients drawn
//! from a large domain. Degenerate draws are caught downstream (vanishing
//! pivots, wrong supports) and the caller resamples.

use std::collections::HashSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coeff::{sample_scalar, Domain, Scalar};
use crate::error::{Error, Result};
use crate::groebner::normal_form;
use crate::poly::{monomials_of_degree, Monomial, Polynomial, Term};

/// Degrees, ring and seed for one generic ideal. Degrees are kept sorted
/// ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericSpec {
    nvars: usize,
    degrees: Vec<u32>,
    domain: Domain,
    seed: u64,
}

impl GenericSpec {
    pub fn new(nvars: usize, mut degrees: Vec<u32>, domain: Domain, seed: u64) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidSpec("need at least one variable".into()));
        }
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(Error::InvalidSpec(
                "degrees must be a nonempty list of positive integers".into(),
            ));
        }
        degrees.sort_unstable();
        Ok(GenericSpec {
            nvars,
            degrees,
            domain,
            seed,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// One generic form per degree, all coefficients pairwise distinct
    /// across the whole list.
    pub fn sample(&self) -> Result<Vec<Polynomial>> {
        let mut rng = self.rng();
        let mut used = HashSet::new();
        self.degrees
            .iter()
            .map(|&d| {
                sample_generic_form(d, self.nvars, self.domain, &mut rng, &mut used).map(|(f, _)| f)
            })
            .collect()
    }
}

/// A dense form of degree `degree`: every monomial of that degree appears,
/// coefficients are nonzero, pairwise distinct and outside `exclude`. The
/// coefficients drawn are added to `exclude` and also returned, in grevlex
/// order of their monomials.
pub fn sample_generic_form<R: Rng + ?Sized>(
    degree: u32,
    nvars: usize,
    domain: Domain,
    rng: &mut R,
    exclude: &mut HashSet<Scalar>,
) -> Result<(Polynomial, Vec<Scalar>)> {
    if degree == 0 || nvars == 0 {
        return Err(Error::InvalidSpec(
            "generic forms need degree >= 1 and nvars >= 1".into(),
        ));
    }
    let support = monomials_of_degree(nvars, degree);
    let mut terms = Vec::with_capacity(support.len());
    let mut coeffs = Vec::with_capacity(support.len());
    for m in support {
        let c = sample_scalar(domain, rng, exclude)?;
        exclude.insert(c.clone());
        coeffs.push(c.clone());
        terms.push(Term::new(c, m));
    }
    Ok((Polynomial::from_terms(domain, nvars, terms)?, coeffs))
}

/// Reduces `f2` (degree `m`) modulo `f1` (degree `n <= m`) in `K[x, y]`.
///
/// The remainder `r` satisfies `<f1, f2> = <f1, r>`; for generic input it has
/// exactly the `n` terms `x^(n-1) y^(mu+1), ..., y^m` with `mu = m - n`.
/// Anything else is reported as [`Error::Degenerate`].
pub fn reduce_second_generator(f1: &Polynomial, f2: &Polynomial) -> Result<Polynomial> {
    for f in [f1, f2] {
        if f.nvars() != 2 {
            return Err(Error::arity(2, f.nvars()));
        }
        if !f.is_homogeneous() {
            return Err(Error::InvalidSpec(format!("{f} is not homogeneous")));
        }
    }
    let n = f1.total_degree()?;
    let m = f2.total_degree()?;
    if n > m {
        return Err(Error::DegreeOrder {
            first: n,
            second: m,
        });
    }
    if f1.leading_monomial()? != &Monomial::xy(n, 0) {
        return Err(Error::Degenerate(format!("f1 = {f1} has no x^{n} term")));
    }
    let r = normal_form(f2, std::slice::from_ref(f1))?;
    let expected: Vec<Monomial> = (0..n)
        .map(|k| Monomial::xy(n - 1 - k, m - n + 1 + k))
        .collect();
    let shape_ok = r.terms().iter().map(|t| &t.monomial).eq(expected.iter());
    if !shape_ok {
        return Err(Error::Degenerate(format!(
            "remainder {r} does not have the {n}-term support x^{}*y^{} .. y^{m}",
            n - 1,
            m - n + 1
        )));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Domain {
        Domain::Rationals
    }

    #[test]
    fn quadratic_form_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut used = HashSet::new();
        let (f, coeffs) = sample_generic_form(2, 2, q(), &mut rng, &mut used).unwrap();
        let support: Vec<_> = f.terms().iter().map(|t| t.monomial.clone()).collect();
        assert_eq!(
            support,
            [Monomial::xy(2, 0), Monomial::xy(1, 1), Monomial::xy(0, 2)]
        );
        let distinct: HashSet<_> = coeffs.iter().collect();
        assert_eq!(distinct.len(), 3);
        assert!(coeffs.iter().all(|c| !c.is_zero()));
    }

    #[test]
    fn linear_form_three_vars() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (f, _) = sample_generic_form(1, 3, q(), &mut rng, &mut HashSet::new()).unwrap();
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn threaded_exclusion_keeps_coefficients_disjoint() {
        let f7 = Domain::prime(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut used = HashSet::new();
        let (_, a) = sample_generic_form(1, 2, f7, &mut rng, &mut used).unwrap();
        let (_, b) = sample_generic_form(2, 2, f7, &mut rng, &mut used).unwrap();
        assert!(a.iter().all(|c| !b.contains(c)));
        // 5 of the 6 nonzero residues are used; a cubic needs 4 more
        assert!(matches!(
            sample_generic_form(3, 2, f7, &mut rng, &mut used),
            Err(Error::ExhaustedDomain(_))
        ));
    }

    #[test]
    fn spec_sampling_is_deterministic() {
        let spec = GenericSpec::new(3, vec![3, 2, 2], Domain::default_prime(), 77).unwrap();
        assert_eq!(spec.degrees(), [2, 2, 3]);
        assert_eq!(spec.sample().unwrap(), spec.sample().unwrap());
        let coeffs: Vec<Scalar> = spec
            .sample()
            .unwrap()
            .iter()
            .flat_map(|f| f.terms().iter().map(|t| t.coeff.clone()))
            .collect();
        let distinct: HashSet<_> = coeffs.iter().collect();
        assert_eq!(distinct.len(), coeffs.len());
    }

    #[test]
    fn worked_reduction() {
        let f1 = Polynomial::from_xy(q(), &[(1, 2, 0), (3, 1, 1), (5, 0, 2)]);
        let f2 = Polynomial::from_xy(q(), &[(7, 3, 0), (11, 2, 1), (13, 1, 2), (17, 0, 3)]);
        let r = reduce_second_generator(&f1, &f2).unwrap();
        assert_eq!(r, Polynomial::from_xy(q(), &[(8, 1, 2), (67, 0, 3)]));
        assert!(matches!(
            reduce_second_generator(&f2, &f1),
            Err(Error::DegreeOrder {
                first: 3,
                second: 2
            })
        ));
    }

    #[test]
    fn equal_degree_support() {
        let spec = GenericSpec::new(2, vec![4, 4], Domain::default_prime(), 5).unwrap();
        let fs = spec.sample().unwrap();
        let r = reduce_second_generator(&fs[0], &fs[1]).unwrap();
        let support: Vec<_> = r.terms().iter().map(|t| t.monomial.clone()).collect();
        assert_eq!(
            support,
            [
                Monomial::xy(3, 1),
                Monomial::xy(2, 2),
                Monomial::xy(1, 3),
                Monomial::xy(0, 4)
            ]
        );
    }

    #[test]
    fn linear_first_generator() {
        let spec = GenericSpec::new(2, vec![1, 6], Domain::default_prime(), 5).unwrap();
        let fs = spec.sample().unwrap();
        let r = reduce_second_generator(&fs[0], &fs[1]).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.leading_monomial().unwrap(), &Monomial::xy(0, 6));
    }

    #[test]
    fn degenerate_remainder_is_rejected() {
        // f2 = x * f1 exactly: remainder zero
        let f1 = Polynomial::from_xy(q(), &[(1, 1, 0), (2, 0, 1)]);
        let f2 = Polynomial::from_xy(q(), &[(1, 2, 0), (2, 1, 1)]);
        assert!(matches!(
            reduce_second_generator(&f1, &f2),
            Err(Error::Degenerate(_))
        ));
        let no_xn = Polynomial::from_xy(q(), &[(1, 1, 1), (2, 0, 2)]);
        assert!(matches!(
            reduce_second_generator(&no_xn, &f2),
            Err(Error::Degenerate(_))
        ));
    }
}
