//! Explicit constructions for two generic forms in `K[x, y]`.
//!
//! Given `f1` of degree `n` (leading term `x^n`) and the reduced second
//! generator `f2` of degree `m` (support `x^(n-1) y^(mu+1) .. y^m`,
//! `mu = m - n`), the chain
//!
//! ```text
//! f_{t+2} = remainder of S(f_t, f_{t+1}) on division by f_{t+1},  1 <= t <= n-1
//! ```
//!
//! produces `f_1, ..., f_{n+1}` with `LM(f_t) = x^(n-t+1) y^(mu+2t-3)` for
//! `t >= 2`. Their coefficients obey a closed recursion on the monic rows
//! `b_{t,i} = a_{t,i} / a_{t,1}`, evaluated here directly; the resulting set
//! is a reduced-shape Gröbner basis whose initial ideal is
//! `<x^n, x^(n-1) y^(mu+1), x^(n-2) y^(mu+3), ..., y^(mu+2n-1)>`.
//!
//! The syzygies on the leading terms between consecutive elements, and the
//! expansion of every `S_{i,i+t}` in terms of them, are materialized as
//! vectors of polynomials so the identities can be checked exactly.

use serde::Serialize;

use crate::coeff::{Domain, Scalar};
use crate::error::{Error, Result};
use crate::genericgen::reduce_second_generator;
use crate::groebner::{buchberger, normal_form, s_polynomial, GroebnerBasis, Ideal};
use crate::monideal::MonomialIdeal;
use crate::poly::{Monomial, Polynomial, Term};

/// Degrees `n <= m` of the two generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ClosedFormSpec {
    pub n: u32,
    pub m: u32,
}

impl ClosedFormSpec {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n == 0 || n > m {
            return Err(Error::InvalidSpec(format!(
                "need 1 <= n <= m, got n = {n}, m = {m}"
            )));
        }
        Ok(ClosedFormSpec { n, m })
    }

    pub fn mu(&self) -> u32 {
        self.m - self.n
    }

    /// Number of basis elements, `n + 1`.
    pub fn len(&self) -> usize {
        self.n as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `LM(f_t)` for `1 <= t <= n + 1`.
    pub fn leading_monomial(&self, t: usize) -> Monomial {
        let (n, mu, t) = (self.n, self.mu(), t as u32);
        if t == 1 {
            Monomial::xy(n, 0)
        } else {
            Monomial::xy(n + 1 - t, mu + 2 * t - 3)
        }
    }

    /// `deg f_t`: `n` for `t = 1`, `m + t - 2` otherwise.
    pub fn degree(&self, t: usize) -> u32 {
        if t == 1 {
            self.n
        } else {
            self.m + t as u32 - 2
        }
    }

    /// Number of terms of `f_t`: `n + 1` for `t = 1`, `n - t + 2` otherwise.
    pub fn row_len(&self, t: usize) -> usize {
        if t == 1 {
            self.n as usize + 1
        } else {
            self.n as usize + 2 - t
        }
    }

    /// The `i`-th monomial (1-based) in the support of `f_t`.
    pub fn support_monomial(&self, t: usize, i: usize) -> Monomial {
        let lm = self.leading_monomial(t);
        let (a, b) = (lm.exponents()[0], lm.exponents()[1]);
        let k = i as u32 - 1;
        Monomial::xy(a - k, b + k)
    }
}

/// The chain `f_1, ..., f_{n+1}` with its coefficient table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormBasis {
    spec: ClosedFormSpec,
    domain: Domain,
    /// Raw coefficients `a_{t,i}`; row `t - 1` holds `f_t`.
    rows: Vec<Vec<Scalar>>,
    /// Monic rows `b_{t,i} = a_{t,i} / a_{t,1}`.
    monic_rows: Vec<Vec<Scalar>>,
    polynomials: Vec<Polynomial>,
}

impl ClosedFormBasis {
    pub fn spec(&self) -> ClosedFormSpec {
        self.spec
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// `a_{t,i}`, both 1-based.
    pub fn a(&self, t: usize, i: usize) -> &Scalar {
        &self.rows[t - 1][i - 1]
    }

    /// `b_{t,i}`, both 1-based.
    pub fn b(&self, t: usize, i: usize) -> &Scalar {
        &self.monic_rows[t - 1][i - 1]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn monic_rows(&self) -> &[Vec<Scalar>] {
        &self.monic_rows
    }

    /// `f_1, ..., f_{n+1}` with raw coefficients.
    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polynomials
    }

    /// `f_t`, 1-based.
    pub fn element(&self, t: usize) -> &Polynomial {
        &self.polynomials[t - 1]
    }

    pub fn monic_polynomials(&self) -> Vec<Polynomial> {
        (1..=self.spec.len())
            .map(|t| self.row_polynomial(t, &self.monic_rows[t - 1]))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.polynomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polynomials.is_empty()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            self.polynomials
                .iter()
                .map(|f| f.leading_monomial().unwrap().clone()),
        )
        .expect("nonempty basis")
    }

    fn row_polynomial(&self, t: usize, row: &[Scalar]) -> Polynomial {
        row_to_polynomial(&self.spec, self.domain, t, row)
    }
}

fn row_to_polynomial(
    spec: &ClosedFormSpec,
    domain: Domain,
    t: usize,
    row: &[Scalar],
) -> Polynomial {
    let terms = row
        .iter()
        .enumerate()
        .map(|(k, c)| Term::new(c.clone(), spec.support_monomial(t, k + 1)))
        .collect();
    Polynomial::from_terms(domain, 2, terms).expect("row shares the ring")
}

/// Reads the coefficient row of `f` against the support expected for `f_t`.
fn read_row(spec: &ClosedFormSpec, t: usize, f: &Polynomial) -> Result<Vec<Scalar>> {
    let want = spec.row_len(t);
    let support: Vec<Monomial> = (1..=want).map(|i| spec.support_monomial(t, i)).collect();
    let actual: Vec<&Monomial> = f.terms().iter().map(|t| &t.monomial).collect();
    if actual.len() != want || actual.iter().zip(&support).any(|(a, b)| *a != b) {
        return Err(Error::Degenerate(format!(
            "f{t} = {f} does not have the {want}-term support {} .. {}",
            support[0],
            support[want - 1]
        )));
    }
    Ok(f.terms().iter().map(|t| t.coeff.clone()).collect())
}

/// Builds `f_1 .. f_{n+1}` from `f1` and the reduced second generator `r`
/// using the coefficient recursion on monic rows:
///
/// ```text
/// c          = b_{t,2} - b_{t+1,2}
/// a_{t+2,i}  = (b_{t,i+2} - b_{t+1,i+2}) - b_{t+1,i+1} * c    1 <= i <= n-t-1
/// a_{t+2,n-t} = b_{t,n-t+2} - b_{t+1,n-t+1} * c
/// ```
///
/// Any vanishing coefficient means the input was not generic.
pub fn closed_form_basis(f1: &Polynomial, r: &Polynomial) -> Result<ClosedFormBasis> {
    f1.check_ring(r)?;
    if f1.nvars() != 2 {
        return Err(Error::arity(2, f1.nvars()));
    }
    let n = f1.total_degree()?;
    let m = r.total_degree()?;
    let spec = ClosedFormSpec::new(n, m)?;
    let domain = f1.domain();
    let mut rows = vec![read_row(&spec, 1, f1)?, read_row(&spec, 2, r)?];
    for (t, row) in rows.iter().enumerate() {
        if let Some(i) = row.iter().position(Scalar::is_zero) {
            return Err(Error::Degenerate(format!(
                "a[{},{}] vanishes",
                t + 1,
                i + 1
            )));
        }
    }
    let monic = |row: &[Scalar]| -> Result<Vec<Scalar>> {
        let lead = row[0].inverse()?;
        Ok(row.iter().map(|c| c * &lead).collect())
    };
    let mut monic_rows = vec![monic(&rows[0])?, monic(&rows[1])?];
    let n = n as usize;
    for t in 1..n {
        let (bt, bt1) = (&monic_rows[t - 1], &monic_rows[t]);
        // 0-based: b_{t,i} = bt[i - 1]
        let c = &bt[1] - &bt1[1];
        let mut next = Vec::with_capacity(n - t);
        for i in 1..n - t {
            next.push(&(&bt[i + 1] - &bt1[i + 1]) - &(&bt1[i] * &c));
        }
        next.push(&bt[n - t + 1] - &(&bt1[n - t] * &c));
        if let Some(i) = next.iter().position(Scalar::is_zero) {
            return Err(Error::Degenerate(format!(
                "a[{},{}] vanishes",
                t + 2,
                i + 1
            )));
        }
        monic_rows.push(monic(&next)?);
        rows.push(next);
    }
    let polynomials = rows
        .iter()
        .enumerate()
        .map(|(k, row)| row_to_polynomial(&spec, domain, k + 1, row))
        .collect();
    Ok(ClosedFormBasis {
        spec,
        domain,
        rows,
        monic_rows,
        polynomials,
    })
}

/// `<x^n, x^(n-1) y^(mu+1), x^(n-2) y^(mu+3), ..., x y^(mu+2n-3), y^(mu+2n-1)>`.
pub fn closed_form_initial_ideal(spec: ClosedFormSpec) -> MonomialIdeal {
    MonomialIdeal::minimalize((1..=spec.len()).map(|t| spec.leading_monomial(t)))
        .expect("n + 1 generators")
}

/// A vector of polynomials, one per basis position, relating the leading
/// terms of the (monic) basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syzygy {
    /// 1-based positions `(i, j)` of the pair this syzygy belongs to.
    pub pair: (usize, usize),
    pub entries: Vec<Polynomial>,
}

impl Syzygy {
    fn zero(pair: (usize, usize), len: usize, domain: Domain) -> Self {
        Syzygy {
            pair,
            entries: vec![Polynomial::zero(domain, 2); len],
        }
    }

    fn set(&mut self, pos: usize, coeff: Scalar, m: Monomial) {
        let domain = coeff.domain();
        self.entries[pos - 1] =
            Polynomial::from_terms(domain, 2, vec![Term::new(coeff, m)]).expect("single term");
    }
}

/// The syzygy between positions `i` and `j > i` on monic leading terms:
/// `y^(mu+2(j-1)-1)` at position 1 when `i = 1`, `y^(2(j-i))` at position `i`
/// otherwise, and `-x^(j-i)` at position `j`.
pub fn direct_syzygy(i: usize, j: usize, spec: ClosedFormSpec, domain: Domain) -> Result<Syzygy> {
    let len = spec.len();
    if i < 1 || j <= i || j > len {
        return Err(Error::IndexOutOfRange(format!(
            "syzygy ({i}, {j}) outside 1 <= i < j <= {len}"
        )));
    }
    let t = (j - i) as u32;
    let ypow = if i == 1 { spec.mu() + 2 * t - 1 } else { 2 * t };
    let mut s = Syzygy::zero((i, j), len, domain);
    s.set(i, domain.one(), Monomial::xy(0, ypow));
    s.set(j, -domain.one(), Monomial::xy(t, 0));
    Ok(s)
}

/// `S_{i,i+1}`: `(y^(mu+1), -x, 0, ..)` for `i = 1`, and `y^2`, `-x` at
/// positions `i`, `i+1` for `1 < i <= n`.
pub fn syzygy_pair(i: usize, spec: ClosedFormSpec, domain: Domain) -> Result<Syzygy> {
    if i < 1 || i > spec.n as usize {
        return Err(Error::IndexOutOfRange(format!(
            "pair index {i} outside 1..={}",
            spec.n
        )));
    }
    direct_syzygy(i, i + 1, spec, domain)
}

/// Both sides of `S_{i,i+t} = sum_{j=0}^{t-1} x^j y^(2(t-1-j)) S_{i+j,i+j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyExpansion {
    pub direct: Syzygy,
    pub combination: Syzygy,
    /// `(x^j y^(2(t-1-j)), k)`: the multiplier applied to `S_{k,k+1}`.
    pub certificate: Vec<(Monomial, usize)>,
}

impl SyzygyExpansion {
    /// Entrywise equality of the two sides.
    pub fn holds(&self) -> bool {
        self.direct.entries == self.combination.entries
    }
}

pub fn expand_syzygy(
    i: usize,
    t: usize,
    spec: ClosedFormSpec,
    domain: Domain,
) -> Result<SyzygyExpansion> {
    if i < 1 || t < 1 || i + t > spec.len() {
        return Err(Error::IndexOutOfRange(format!(
            "expansion (i = {i}, t = {t}) needs 1 <= i, t >= 1, i + t <= {}",
            spec.len()
        )));
    }
    let direct = direct_syzygy(i, i + t, spec, domain)?;
    let mut combination = Syzygy::zero((i, i + t), spec.len(), domain);
    let mut certificate = Vec::with_capacity(t);
    for j in 0..t {
        let mult = Monomial::xy(j as u32, 2 * (t - 1 - j) as u32);
        let base = syzygy_pair(i + j, spec, domain)?;
        for (acc, e) in combination.entries.iter_mut().zip(&base.entries) {
            *acc = acc.add(&e.mul_monomial(&mult)?)?;
        }
        certificate.push((mult, i + j));
    }
    Ok(SyzygyExpansion {
        direct,
        combination,
        certificate,
    })
}

/// True iff `sum_k S[k] * LM(f_k) = 0` exactly and every nonzero entry is
/// homogeneous with `deg S[k] + deg f_k` the same for all `k`.
pub fn verify_syzygy(s: &Syzygy, basis: &ClosedFormBasis) -> Result<bool> {
    if s.entries.len() != basis.len() {
        return Err(Error::LengthMismatch {
            expected: basis.len(),
            found: s.entries.len(),
        });
    }
    let domain = basis.domain();
    let mut total = Polynomial::zero(domain, 2);
    let mut degree = None;
    for (entry, f) in s.entries.iter().zip(basis.polynomials()) {
        if entry.is_zero() {
            continue;
        }
        entry.check_ring(f)?;
        if !entry.is_homogeneous() {
            return Ok(false);
        }
        let d = entry.total_degree()? + f.total_degree()?;
        if *degree.get_or_insert(d) != d {
            return Ok(false);
        }
        total = total.add(&entry.mul_monomial(f.leading_monomial()?)?)?;
    }
    Ok(total.is_zero())
}

/// Outcome of running the closed form and Buchberger side by side.
#[derive(Clone, Debug)]
pub struct CrossValidation {
    pub spec: ClosedFormSpec,
    pub reduced_second: Polynomial,
    pub closed_form: ClosedFormBasis,
    pub groebner: GroebnerBasis,
    pub initial_ideal: MonomialIdeal,
}

fn mismatch(check: &str, detail: String) -> Error {
    Error::Mismatch(format!("{check}: {detail}"))
}

/// Runs the second-generator reduction, the closed-form chain and an
/// independent Buchberger computation on `<f1, f2>`, then checks that
/// (a) both initial ideals equal the closed-form initial ideal, (b) the two
/// bases generate the same ideal, and (c) every S-polynomial of the closed
/// form reduces to zero modulo it.
pub fn cross_validate(
    spec: ClosedFormSpec,
    f1: &Polynomial,
    f2: &Polynomial,
) -> Result<CrossValidation> {
    let r = reduce_second_generator(f1, f2)?;
    let closed = closed_form_basis(f1, &r)?;
    if closed.spec() != spec {
        return Err(Error::InvalidSpec(format!(
            "generators have degrees ({}, {}), expected ({}, {})",
            closed.spec().n,
            closed.spec().m,
            spec.n,
            spec.m
        )));
    }
    let gb = buchberger(&Ideal::from_generators(vec![f1.clone(), f2.clone()])?)?;

    let expected = closed_form_initial_ideal(spec);
    let from_gb = gb.initial_ideal();
    if from_gb != expected {
        let diff = first_difference(expected.generators(), from_gb.generators());
        return Err(mismatch("initial ideal (Buchberger vs closed form)", diff));
    }
    for (t, f) in closed.polynomials().iter().enumerate() {
        if f.leading_monomial()? != &spec.leading_monomial(t + 1) {
            return Err(mismatch(
                "leading monomial schedule",
                format!(
                    "f{} = {f} has leading monomial {}",
                    t + 1,
                    f.leading_monomial()?
                ),
            ));
        }
    }
    if closed.initial_ideal() != expected {
        let diff = first_difference(expected.generators(), closed.initial_ideal().generators());
        return Err(mismatch("initial ideal (closed form)", diff));
    }

    for (t, f) in closed.polynomials().iter().enumerate() {
        let nf = gb.normal_form(f)?;
        if !nf.is_zero() {
            return Err(mismatch(
                "closed form in Buchberger ideal",
                format!("f{} leaves {nf}", t + 1),
            ));
        }
    }
    for g in gb.elements() {
        let nf = normal_form(g, closed.polynomials())?;
        if !nf.is_zero() {
            return Err(mismatch(
                "Buchberger basis in closed-form ideal",
                format!("{g} leaves {nf}"),
            ));
        }
    }

    let fs = closed.polynomials();
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            let nf = normal_form(&s_polynomial(&fs[i], &fs[j])?, fs)?;
            if !nf.is_zero() {
                return Err(mismatch(
                    "S-polynomial reduction",
                    format!("S(f{}, f{}) leaves {nf}", i + 1, j + 1),
                ));
            }
        }
    }

    Ok(CrossValidation {
        spec,
        reduced_second: r,
        closed_form: closed,
        groebner: gb,
        initial_ideal: from_gb,
    })
}

fn first_difference(expected: &[Monomial], actual: &[Monomial]) -> String {
    let k = expected
        .iter()
        .zip(actual)
        .take_while(|(a, b)| a == b)
        .count();
    match (expected.get(k), actual.get(k)) {
        (Some(e), Some(a)) => format!("generator {} expected {e}, found {a}", k + 1),
        (Some(e), None) => format!("generator {} expected {e}, missing", k + 1),
        (None, Some(a)) => format!("unexpected extra generator {a}"),
        (None, None) => "no difference".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Domain {
        Domain::Rationals
    }

    fn worked() -> (Polynomial, Polynomial) {
        (
            Polynomial::from_xy(q(), &[(1, 2, 0), (3, 1, 1), (5, 0, 2)]),
            Polynomial::from_xy(q(), &[(7, 3, 0), (11, 2, 1), (13, 1, 2), (17, 0, 3)]),
        )
    }

    #[test]
    fn spec_shapes() {
        let s = ClosedFormSpec::new(3, 5).unwrap();
        assert_eq!(s.mu(), 2);
        assert_eq!(
            (1..=4).map(|t| s.row_len(t)).collect::<Vec<_>>(),
            [4, 3, 2, 1]
        );
        assert_eq!(
            (1..=4).map(|t| s.degree(t)).collect::<Vec<_>>(),
            [3, 5, 6, 7]
        );
        assert_eq!(s.leading_monomial(4), Monomial::xy(0, 7));
        assert!(ClosedFormSpec::new(0, 3).is_err());
        assert!(ClosedFormSpec::new(4, 3).is_err());
    }

    #[test]
    fn worked_third_element() {
        let (f1, f2) = worked();
        let r = reduce_second_generator(&f1, &f2).unwrap();
        let b = closed_form_basis(&f1, &r).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(*b.a(3, 1), q().fraction(3201, 64).unwrap());
        assert_eq!(*b.b(2, 2), q().fraction(67, 8).unwrap());
        assert_eq!(b.element(3).to_string(), "3201/64*y^4");
    }

    #[test]
    fn linear_first_generator_has_no_recursion() {
        let f1 = Polynomial::from_xy(q(), &[(2, 1, 0), (3, 0, 1)]);
        let r = Polynomial::from_xy(q(), &[(5, 0, 4)]);
        let b = closed_form_basis(&f1, &r).unwrap();
        assert_eq!(b.polynomials(), [f1, r]);
        assert_eq!(
            closed_form_initial_ideal(ClosedFormSpec::new(1, 4).unwrap()).generators(),
            [Monomial::xy(0, 4), Monomial::xy(1, 0)]
        );
    }

    #[test]
    fn initial_ideal_formula() {
        let j = closed_form_initial_ideal(ClosedFormSpec::new(2, 3).unwrap());
        assert_eq!(j.staircase().unwrap().corners, [(2, 0), (1, 2), (0, 4)]);
        let j = closed_form_initial_ideal(ClosedFormSpec::new(3, 3).unwrap());
        assert_eq!(
            j.staircase().unwrap().corners,
            [(3, 0), (2, 1), (1, 3), (0, 5)]
        );
    }

    #[test]
    fn wrong_support_is_degenerate() {
        let (f1, _) = worked();
        let r = Polynomial::from_xy(q(), &[(8, 1, 2)]);
        assert!(matches!(
            closed_form_basis(&f1, &r),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn vanishing_pivot_is_degenerate() {
        // a_{3,1} = c - (67/8)(3 - 67/8) for f1 = x^2 + 3xy + c y^2
        let c = q().fraction(67, 8).unwrap() * (q().from_i64(3) - q().fraction(67, 8).unwrap());
        let f1 = Polynomial::from_terms(
            q(),
            2,
            vec![
                Term::new(q().one(), Monomial::xy(2, 0)),
                Term::new(q().from_i64(3), Monomial::xy(1, 1)),
                Term::new(c, Monomial::xy(0, 2)),
            ],
        )
        .unwrap();
        let r = Polynomial::from_xy(q(), &[(8, 1, 2), (67, 0, 3)]);
        assert!(matches!(
            closed_form_basis(&f1, &r),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn consecutive_syzygies() {
        let spec = ClosedFormSpec::new(2, 3).unwrap();
        let s = syzygy_pair(1, spec, q()).unwrap();
        assert_eq!(s.entries[0], Polynomial::from_xy(q(), &[(1, 0, 2)]));
        assert_eq!(s.entries[1], Polynomial::from_xy(q(), &[(-1, 1, 0)]));
        assert!(s.entries[2].is_zero());
        let s = syzygy_pair(2, spec, q()).unwrap();
        assert!(s.entries[0].is_zero());
        assert_eq!(s.entries[1], Polynomial::from_xy(q(), &[(1, 0, 2)]));
        assert_eq!(s.entries[2], Polynomial::from_xy(q(), &[(-1, 1, 0)]));
        assert!(syzygy_pair(3, spec, q()).is_err());
        assert!(syzygy_pair(0, spec, q()).is_err());
    }

    #[test]
    fn expansion_examples() {
        // y^2 S_{1,2} + x S_{2,3}: the -xy^2 and +xy^2 in position 2 cancel
        let spec = ClosedFormSpec::new(2, 3).unwrap();
        let e = expand_syzygy(1, 2, spec, q()).unwrap();
        assert!(e.holds());
        assert_eq!(
            e.combination.entries[0],
            Polynomial::from_xy(q(), &[(1, 0, 4)])
        );
        assert!(e.combination.entries[1].is_zero());
        assert_eq!(
            e.combination.entries[2],
            Polynomial::from_xy(q(), &[(-1, 2, 0)])
        );
        assert_eq!(
            e.certificate,
            [(Monomial::xy(0, 2), 1), (Monomial::xy(1, 0), 2)]
        );

        let spec = ClosedFormSpec::new(3, 4).unwrap();
        let e = expand_syzygy(2, 2, spec, q()).unwrap();
        assert!(e.holds());
        assert_eq!(
            e.combination.entries[1],
            Polynomial::from_xy(q(), &[(1, 0, 4)])
        );
        assert_eq!(
            e.combination.entries[3],
            Polynomial::from_xy(q(), &[(-1, 2, 0)])
        );

        let e = expand_syzygy(2, 1, spec, q()).unwrap();
        assert_eq!(e.combination, syzygy_pair(2, spec, q()).unwrap());
        assert!(expand_syzygy(3, 2, spec, q()).is_err());
    }

    #[test]
    fn syzygy_verification() {
        let (f1, f2) = worked();
        let r = reduce_second_generator(&f1, &f2).unwrap();
        let b = closed_form_basis(&f1, &r).unwrap();
        let spec = b.spec();
        for i in 1..=2 {
            assert!(verify_syzygy(&syzygy_pair(i, spec, q()).unwrap(), &b).unwrap());
        }
        let mut bad = syzygy_pair(1, spec, q()).unwrap();
        bad.entries[0] = bad.entries[0].scale(&q().from_i64(2)).unwrap();
        assert!(!verify_syzygy(&bad, &b).unwrap());
        bad.entries.pop();
        assert!(matches!(
            verify_syzygy(&bad, &b),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn worked_cross_validation() {
        let (f1, f2) = worked();
        let cv = cross_validate(ClosedFormSpec::new(2, 3).unwrap(), &f1, &f2).unwrap();
        assert_eq!(
            cv.initial_ideal.staircase().unwrap().corners,
            [(2, 0), (1, 2), (0, 4)]
        );
        assert_eq!(
            cv.reduced_second,
            Polynomial::from_xy(q(), &[(8, 1, 2), (67, 0, 3)])
        );
        assert!(matches!(
            cross_validate(ClosedFormSpec::new(2, 4).unwrap(), &f1, &f2),
            Err(Error::InvalidSpec(_))
        ));
    }
}
