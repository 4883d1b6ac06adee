use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A power product `x1^e1 * ... * xk^ek` with its total degree cached.
///
/// `Ord` is the graded reverse lexicographic order with `x1 > x2 > ... > xk`.
/// Comparing monomials of different arity through `Ord` is a logic error;
/// use [`grevlex_cmp`] when the arity is not already known to match.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    /// The variable `x_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps, degree: 1 }
    }

    /// `x^a * y^b` in two variables.
    pub fn xy(a: u32, b: u32) -> Self {
        Monomial::new(vec![a, b])
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_arity(self, other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        check_arity(self, other)?;
        Ok(self.divides_unchecked(other))
    }

    /// `other / self`.
    pub fn quotient_of(&self, other: &Monomial) -> Result<Monomial> {
        if !self.divides(other)? {
            return Err(Error::NotDivisible);
        }
        Ok(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        check_arity(self, other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        check_arity(self, other)?;
        Ok(Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        ))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` without checks.
    pub(crate) fn quotient_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: other.degree - self.degree,
        }
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Writes the monomial using `names`, `^1` elided, `1` for the unit.
    pub fn write_with(&self, names: &[String], f: &mut impl fmt::Write) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (name, &e) in names.iter().zip(&self.exps) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Graded reverse lexicographic comparison: higher total degree wins; on a
/// tie, `a > b` iff the right-most nonzero entry of `a - b` is negative.
pub fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    check_arity(a, b)?;
    Ok(grevlex(a, b))
}

#[inline]
fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree.cmp(&b.degree).then_with(|| {
        for (x, y) in a.exps.iter().zip(&b.exps).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                // smaller power of the later variable is the larger monomial
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    })
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.nvars(), other.nvars());
        grevlex(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(&variable_names(self.nvars()), f)
    }
}

impl TryFrom<Vec<u32>> for Monomial {
    type Error = Error;

    fn try_from(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::InvalidSpec("monomial with zero variables".into()));
        }
        Ok(Monomial::new(exps))
    }
}

impl From<Monomial> for Vec<u32> {
    fn from(m: Monomial) -> Self {
        m.exps
    }
}

fn check_arity(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.nvars() != b.nvars() {
        return Err(Error::arity(a.nvars(), b.nvars()));
    }
    Ok(())
}

/// `x, y` for two variables, `x1, ..., xk` otherwise.
pub fn variable_names(nvars: usize) -> Vec<String> {
    if nvars == 2 {
        vec!["x".into(), "y".into()]
    } else {
        (1..=nvars).map(|i| format!("x{i}")).collect()
    }
}

/// All monomials of total degree `degree` in `nvars` variables, in descending
/// grevlex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn fill(prefix: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<Monomial>) {
        if slots == 1 {
            prefix.push(left);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            fill(prefix, left - e, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    fill(&mut Vec::with_capacity(nvars), degree, nvars, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}
