//! Monomial ideals: membership, minimal generators, (weakly) reverse
//! lexicographic classification, staircases and Hilbert counts.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, Monomial};

/// A monomial ideal stored by its minimal generators in descending grevlex.
///
/// The JSON form is `{"nvars": k, "generators": [[e1, ..., ek], ...]}`;
/// deserializing minimalizes whatever generator list it is given.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr")]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

#[derive(Deserialize)]
struct IdealRepr {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl TryFrom<IdealRepr> for MonomialIdeal {
    type Error = Error;

    fn try_from(repr: IdealRepr) -> Result<Self> {
        let ideal = MonomialIdeal::minimalize(repr.generators)?;
        if ideal.nvars != repr.nvars {
            return Err(Error::arity(repr.nvars, ideal.nvars));
        }
        Ok(ideal)
    }
}

/// A failing pair from a (weakly) reverse lexicographic check: `member` is in
/// the ideal, `predecessor` has the same degree, is grevlex-greater, and is not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub member: Monomial,
    pub predecessor: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WrlCheck {
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RevlexCheck {
    pub holds: bool,
    pub witness: Option<Witness>,
    /// Highest degree examined.
    pub checked_through: u32,
    /// True when the check covers every degree (the ideal is Artinian, so
    /// every monomial above `checked_through` is a member).
    pub exact: bool,
}

/// Minimal generators of a two-variable monomial ideal as `(x-exp, y-exp)`
/// corners, sorted by decreasing x-exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Staircase {
    pub corners: Vec<(u32, u32)>,
}

impl Staircase {
    pub fn max_x(&self) -> u32 {
        self.corners.iter().map(|c| c.0).max().unwrap_or(0)
    }

    pub fn max_y(&self) -> u32 {
        self.corners.iter().map(|c| c.1).max().unwrap_or(0)
    }

    /// True iff `x^a y^b` lies in the ideal.
    pub fn contains(&self, a: u32, b: u32) -> bool {
        self.corners.iter().any(|&(cx, cy)| cx <= a && cy <= b)
    }
}

impl MonomialIdeal {
    /// Smallest generating subset of `gens`, in canonical order.
    pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        let nvars = gens.first().ok_or(Error::EmptyGeneratorSet)?.nvars();
        if let Some(bad) = gens.iter().find(|m| m.nvars() != nvars) {
            return Err(Error::arity(nvars, bad.nvars()));
        }
        // ascending order: a divisor always comes before its multiples
        gens.sort();
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides_unchecked(&g)) {
                kept.push(g);
            }
        }
        kept.reverse();
        Ok(MonomialIdeal {
            nvars,
            generators: kept,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators, descending grevlex.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.nvars() != self.nvars {
            return Err(Error::arity(self.nvars, m.nvars()));
        }
        Ok(self.contains_unchecked(m))
    }

    fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides_unchecked(m))
    }

    /// For each variable, the smallest `e` with `x_i^e` a generator.
    pub fn pure_powers(&self) -> Vec<Option<u32>> {
        (0..self.nvars)
            .map(|i| {
                self.generators
                    .iter()
                    .filter(|g| g.exponents()[i] == g.degree())
                    .map(|g| g.degree())
                    .min()
            })
            .collect()
    }

    pub fn is_artinian(&self) -> bool {
        self.pure_powers().iter().all(Option::is_some)
    }

    /// For an Artinian ideal, the largest degree holding a standard monomial
    /// is at most this value; every monomial of higher degree is a member.
    pub fn socle_degree_bound(&self) -> Result<u32> {
        self.pure_powers()
            .iter()
            .enumerate()
            .try_fold(0u32, |acc, (i, p)| match p {
                Some(e) => Ok(acc + e.saturating_sub(1)),
                None => Err(Error::NotArtinian(i + 1)),
            })
    }

    /// Every monomial of the same degree that precedes a minimal generator in
    /// grevlex must be a member. On failure the witness is taken from the
    /// grevlex-greatest failing generator, paired with its greatest
    /// non-member predecessor.
    pub fn is_weakly_revlex(&self) -> WrlCheck {
        let mut slices = SliceCache::new(self.nvars);
        for g in &self.generators {
            let slice = slices.get(g.degree());
            for m in slice.iter().take_while(|m| *m != g) {
                if !self.contains_unchecked(m) {
                    return WrlCheck {
                        holds: false,
                        witness: Some(Witness {
                            member: g.clone(),
                            predecessor: m.clone(),
                        }),
                    };
                }
            }
        }
        WrlCheck {
            holds: true,
            witness: None,
        }
    }

    /// Every member's same-degree grevlex predecessors must be members, i.e.
    /// each degree slice of the ideal is an initial segment.
    ///
    /// Artinian ideals are decided exactly regardless of `degree_bound`;
    /// otherwise degrees up to `degree_bound` (raised to the largest generator
    /// degree) are examined and the result is marked inexact. The witness comes from the lowest failing degree: the
    /// greatest non-member that precedes some member, paired with the first
    /// member after it.
    pub fn is_revlex(&self, degree_bound: u32) -> RevlexCheck {
        let (bound, exact) = match self.socle_degree_bound() {
            Ok(d) => (d, true),
            Err(_) => {
                let top = self
                    .generators
                    .iter()
                    .map(Monomial::degree)
                    .max()
                    .unwrap_or(0);
                (degree_bound.max(top), false)
            }
        };
        let start = self
            .generators
            .iter()
            .map(Monomial::degree)
            .min()
            .unwrap_or(0);
        for d in start..=bound {
            let slice = monomials_of_degree(self.nvars, d);
            let Some(gap) = slice.iter().position(|m| !self.contains_unchecked(m)) else {
                continue;
            };
            if let Some(member) = slice[gap + 1..].iter().find(|m| self.contains_unchecked(m)) {
                return RevlexCheck {
                    holds: false,
                    witness: Some(Witness {
                        member: member.clone(),
                        predecessor: slice[gap].clone(),
                    }),
                    checked_through: d,
                    exact,
                };
            }
        }
        RevlexCheck {
            holds: true,
            witness: None,
            checked_through: bound,
            exact,
        }
    }

    pub fn staircase(&self) -> Result<Staircase> {
        if self.nvars != 2 {
            return Err(Error::WrongArity {
                expected: 2,
                found: self.nvars,
            });
        }
        let mut corners: Vec<(u32, u32)> = self
            .generators
            .iter()
            .map(|g| (g.exponents()[0], g.exponents()[1]))
            .collect();
        corners.sort_by_key(|c| std::cmp::Reverse(c.0));
        Ok(Staircase { corners })
    }

    /// Number of standard monomials (non-members) of degree `d`.
    pub fn hilbert_function(&self, d: u32) -> u64 {
        monomials_of_degree(self.nvars, d)
            .iter()
            .filter(|m| !self.contains_unchecked(m))
            .count() as u64
    }

    /// Hilbert function values for degrees `0..=socle_degree_bound()`.
    pub fn hilbert_values(&self) -> Result<Vec<u64>> {
        let top = self.socle_degree_bound()?;
        Ok((0..=top).map(|d| self.hilbert_function(d)).collect())
    }

    /// Total number of standard monomials (the dimension of the quotient).
    pub fn standard_monomial_count(&self) -> Result<u64> {
        Ok(self.hilbert_values()?.iter().sum())
    }
}

struct SliceCache {
    nvars: usize,
    slices: HashMap<u32, Vec<Monomial>>,
}

impl SliceCache {
    fn new(nvars: usize) -> Self {
        SliceCache {
            nvars,
            slices: HashMap::new(),
        }
    }

    fn get(&mut self, d: u32) -> &[Monomial] {
        let nvars = self.nvars;
        self.slices
            .entry(d)
            .or_insert_with(|| monomials_of_degree(nvars, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(a: u32, b: u32) -> Monomial {
        Monomial::xy(a, b)
    }

    fn ideal(gens: &[(u32, u32)]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|&(a, b)| xy(a, b))).unwrap()
    }

    fn worked() -> MonomialIdeal {
        ideal(&[(2, 0), (1, 2), (0, 4)])
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(
            ideal(&[(2, 0), (2, 1), (1, 2)]).generators(),
            [xy(1, 2), xy(2, 0)]
        );
        assert_eq!(ideal(&[(1, 0)]).generators(), [xy(1, 0)]);
        assert_eq!(
            ideal(&[(0, 2), (2, 0), (1, 1)]).generators(),
            [xy(2, 0), xy(1, 1), xy(0, 2)]
        );
        assert!(matches!(
            MonomialIdeal::minimalize(Vec::new()),
            Err(Error::EmptyGeneratorSet)
        ));
        assert!(MonomialIdeal::minimalize([xy(1, 0), Monomial::new(vec![1, 0, 0])]).is_err());
    }

    #[test]
    fn membership() {
        let j = worked();
        assert!(j.contains(&xy(3, 5)).unwrap());
        assert!(!j.contains(&xy(1, 1)).unwrap());
        for g in j.generators() {
            assert!(j.contains(g).unwrap());
        }
        assert!(j.contains(&Monomial::new(vec![1, 1, 1])).is_err());
    }

    #[test]
    fn weakly_revlex_examples() {
        assert!(ideal(&[(1, 0)]).is_weakly_revlex().holds);
        let w = ideal(&[(0, 1)]).is_weakly_revlex();
        assert!(!w.holds);
        let witness = w.witness.unwrap();
        assert_eq!(witness.predecessor, xy(1, 0));
        assert_eq!(witness.member, xy(0, 1));
        assert!(worked().is_weakly_revlex().holds);
    }

    #[test]
    fn revlex_examples() {
        let r = worked().is_revlex(4);
        assert!(r.holds && r.exact);
        let r = ideal(&[(2, 0), (0, 2)]).is_revlex(2);
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!((w.member, w.predecessor), (xy(0, 2), xy(1, 1)));
    }

    #[test]
    fn three_variable_weak_but_not_strong() {
        // <x^2, xy> in k[x, y, z]
        let j =
            MonomialIdeal::minimalize([Monomial::new(vec![2, 0, 0]), Monomial::new(vec![1, 1, 0])])
                .unwrap();
        assert!(j.is_weakly_revlex().holds);
        let r = j.is_revlex(3);
        assert!(!r.holds && !r.exact);
        let w = r.witness.unwrap();
        assert_eq!(w.predecessor, Monomial::new(vec![0, 3, 0]));
        assert_eq!(w.member, Monomial::new(vec![2, 0, 1]));
        assert_eq!(r.checked_through, 3);
    }

    #[test]
    fn staircase_corners() {
        assert_eq!(
            worked().staircase().unwrap().corners,
            [(2, 0), (1, 2), (0, 4)]
        );
        assert_eq!(ideal(&[(1, 0)]).staircase().unwrap().corners, [(1, 0)]);
        let three = MonomialIdeal::minimalize([Monomial::new(vec![1, 0, 0])]).unwrap();
        assert!(matches!(three.staircase(), Err(Error::WrongArity { .. })));
    }

    #[test]
    fn hilbert_counts() {
        let j = worked();
        let hf: Vec<u64> = (0..6).map(|d| j.hilbert_function(d)).collect();
        assert_eq!(hf, [1, 2, 2, 1, 0, 0]);
        assert_eq!(j.standard_monomial_count().unwrap(), 6);
        assert_eq!(
            ideal(&[(1, 0), (0, 1)]).standard_monomial_count().unwrap(),
            1
        );
        assert!(matches!(
            ideal(&[(1, 0)]).standard_monomial_count(),
            Err(Error::NotArtinian(2))
        ));
    }

    #[test]
    fn json_form() {
        let j = worked();
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(text, r#"{"nvars":2,"generators":[[0,4],[1,2],[2,0]]}"#);
        let back: MonomialIdeal =
            serde_json::from_str(r#"{"nvars":2,"generators":[[2,0],[0,4],[1,2],[2,1]]}"#).unwrap();
        assert_eq!(back, j);
        assert!(
            serde_json::from_str::<MonomialIdeal>(r#"{"nvars":3,"generators":[[2,0]]}"#).is_err()
        );
    }

    #[test]
    fn unit_ideal() {
        let j = ideal(&[(0, 0), (3, 1)]);
        assert_eq!(j.generators(), [Monomial::one(2)]);
        assert_eq!(j.socle_degree_bound().unwrap(), 0);
        assert!(j.is_revlex(0).holds);
        assert!(j.is_weakly_revlex().holds);
        assert_eq!(j.standard_monomial_count().unwrap(), 0);
    }

    #[test]
    fn bounded_check_covers_generator_degrees() {
        let j = MonomialIdeal::minimalize([Monomial::new(vec![2, 4, 3])]).unwrap();
        let r = j.is_revlex(3);
        assert!(!r.exact);
        assert!(!r.holds);
        assert_eq!(r.checked_through, 9);
        assert!(!j.is_weakly_revlex().holds);
    }
}
