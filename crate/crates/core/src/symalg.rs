//! Polynomials in the root vectors `e_α`: the symmetric algebra `S(n)` with
//! its Poisson bracket.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::NilAlgebra;
use crate::linform::LinearForm;
use crate::rational::{self, Rational};
use crate::rootsys::Root;

/// A monomial: roots in increasing order with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Root, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(r: Root) -> Self {
        Monomial(vec![(r, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Root, u32)>) -> Self {
        let mut m: BTreeMap<Root, u32> = BTreeMap::new();
        for (r, e) in powers {
            *m.entry(r).or_insert(0) += e;
        }
        Monomial(m.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn powers(&self) -> &[(Root, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_powers(self.0.iter().chain(&other.0).copied())
    }

    /// `self / r` for a variable `r` dividing `self`.
    fn without_one(&self, r: &Root) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|(x, e)| match (x == r, *e) {
                    (true, 1) => None,
                    (true, e) => Some((*x, e - 1)),
                    _ => Some((*x, *e)),
                })
                .collect(),
        )
    }

    /// The variables with multiplicity, in increasing order.
    pub fn word(&self) -> Vec<Root> {
        self.0
            .iter()
            .flat_map(|(r, e)| std::iter::repeat(*r).take(*e as usize))
            .collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (r, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "e({r})")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// An element of `S(n)` over `ℚ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn one() -> Self {
        SymPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = SymPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(r: Root) -> Self {
        let mut p = SymPoly::zero();
        p.add_term(Monomial::var(r), Rational::one());
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<Root> {
        let mut v: Vec<Root> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(r, _)| *r))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn scale(&self, c: &Rational) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero();
        }
        SymPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SymPoly {
        (0..e).fold(SymPoly::one(), |acc, _| &acc * self)
    }

    /// Homogeneous component of the given degree.
    pub fn component(&self, degree: u32) -> SymPoly {
        SymPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, v)| (m.clone(), v.clone()))
                .collect(),
        }
    }

    /// Rename every variable (used to move polynomials between windows).
    pub fn map_roots(&self, f: impl Fn(&Root) -> Result<Root>) -> Result<SymPoly> {
        let mut out = SymPoly::zero();
        for (m, c) in &self.terms {
            let powers =
                m.0.iter()
                    .map(|(r, e)| Ok((f(r)?, *e)))
                    .collect::<Result<Vec<_>>>()?;
            out.add_term(Monomial::from_powers(powers), c.clone());
        }
        Ok(out)
    }

    /// `{f, g}` extended from `{x, y} = [x, y]` by the Leibniz rule.
    pub fn poisson_bracket(&self, other: &SymPoly, alg: &NilAlgebra) -> Result<SymPoly> {
        let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (a, ea) in &m1.0 {
                let pa = alg.require(a)?;
                let rest1 = m1.without_one(a);
                for (m2, c2) in &other.terms {
                    for (b, eb) in &m2.0 {
                        let pb = alg.require(b)?;
                        let br = alg.bracket_basis(pa, pb);
                        if br.is_empty() {
                            continue;
                        }
                        let base = rest1.mul(&m2.without_one(b));
                        let scale =
                            c1 * c2 * Rational::from_integer(((*ea as i64) * (*eb as i64)).into());
                        for (g, v) in br {
                            let key = base.mul(&Monomial::var(alg.basis()[*g]));
                            *out.entry(key).or_insert_with(Rational::zero) += &scale * v;
                        }
                    }
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(SymPoly { terms: out })
    }

    /// Evaluate with `e_α ↦ value(α)`.
    pub fn evaluate_with(&self, value: impl Fn(&Root) -> Result<Rational>) -> Result<Rational> {
        let mut cache: BTreeMap<Root, Rational> = BTreeMap::new();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (r, e) in &m.0 {
                if !cache.contains_key(r) {
                    cache.insert(*r, value(r)?);
                }
                let v = &cache[r];
                for _ in 0..*e {
                    t *= v;
                }
            }
            total += t;
        }
        Ok(total)
    }

    pub fn evaluate(&self, lambda: &LinearForm) -> Result<Rational> {
        self.evaluate_with(|r| lambda.value(r))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(m, c)| JsonTerm {
                coeff: rational::format(c),
                monomial: m
                    .0
                    .iter()
                    .map(|(r, e)| JsonPower {
                        root: *r,
                        power: *e,
                    })
                    .collect(),
            })
            .collect();
        serde_json::to_value(terms).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SymPoly> {
        let terms: Vec<JsonTerm> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut p = SymPoly::zero();
        for t in terms {
            if t.monomial.iter().any(|x| x.power == 0) {
                return Err(Error::Parse("monomial powers must be positive".into()));
            }
            let m = Monomial::from_powers(t.monomial.iter().map(|x| (x.root, x.power)));
            p.add_term(m, rational::parse(&t.coeff)?);
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonTerm {
    coeff: String,
    monomial: Vec<JsonPower>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonPower {
    root: Root,
    power: u32,
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = rational::is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&rational::format(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", rational::format(&abs))?;
            }
        }
        Ok(())
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.terms.clone();
        for (m, c) in &rhs.terms {
            *out.entry(m.clone()).or_insert_with(Rational::zero) += c;
        }
        out.retain(|_, v| !v.is_zero());
        SymPoly { terms: out }
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self + &(-rhs)
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        SymPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *out.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        out.retain(|_, v| !v.is_zero());
        SymPoly { terms: out }
    }
}
