//! The enveloping algebra `U(n)` in PBW normal form, the symmetrization map
//! `σ: S(n) → U(n)` and centrality checks.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::liealg::NilAlgebra;
use crate::rational::{self, factorial, Rational};
use crate::rootsys::Root;
use crate::symalg::{Monomial, SymPoly};

/// Hard upper bound on the degree accepted by [`Pbw::symmetrize`].
pub const MAX_DEGREE: usize = 8;

/// Degree cap, optionally lowered through `NILCASCADE_MAX_DEGREE`.
pub fn degree_cap() -> usize {
    std::env::var("NILCASCADE_MAX_DEGREE")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map_or(MAX_DEGREE, |c| c.min(MAX_DEGREE))
}

type Terms = BTreeMap<Vec<usize>, Rational>;

/// An element of `U(n)`: PBW-ordered words (nondecreasing in the algebra's
/// basis order) with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PbwElement {
    terms: BTreeMap<Vec<Root>, Rational>,
}

impl PbwElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Root>, Rational> {
        &self.terms
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// The top-degree part read back as a polynomial.
    pub fn leading_symbol(&self) -> SymPoly {
        let d = self.degree();
        let mut p = SymPoly::zero();
        for (w, c) in &self.terms {
            if w.len() == d {
                p.add_term(Monomial::from_powers(w.iter().map(|r| (*r, 1))), c.clone());
            }
        }
        p
    }

    /// Plain JSON: list of `{"coeff": "p/q", "word": [root, …]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| {
                    serde_json::json!({
                        "coeff": rational::format(c),
                        "word": w.iter().map(Root::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let word: Vec<String> = w.iter().map(|r| format!("e({r})")).collect();
            let word = if word.is_empty() {
                "1".to_string()
            } else {
                word.join("·")
            };
            write!(f, "({})*{word}", rational::format(c))?;
        }
        Ok(())
    }
}

/// Outcome of a centrality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Centrality {
    pub central: bool,
    /// First basis root `γ` with `[u, e_γ] ≠ 0`, and that commutator.
    pub witness: Option<(Root, PbwElement)>,
}

/// PBW calculus over a fixed algebra with a memo of normalized words.
pub struct Pbw<'a> {
    alg: &'a NilAlgebra,
    memo: RefCell<HashMap<Vec<usize>, Rc<Terms>>>,
}

fn add_into(acc: &mut Terms, word: Vec<usize>, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(word).or_insert_with(Rational::zero);
    *e += c;
}

fn prune(mut t: Terms) -> Terms {
    t.retain(|_, v| !v.is_zero());
    t
}

impl<'a> Pbw<'a> {
    pub fn new(alg: &'a NilAlgebra) -> Self {
        Pbw {
            alg,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &NilAlgebra {
        self.alg
    }

    /// Straighten a word of basis positions by repeatedly rewriting the first
    /// descent `e_b e_a → e_a e_b + [e_b, e_a]`.
    fn normalize_positions(&self, word: &[usize]) -> Rc<Terms> {
        if let Some(t) = self.memo.borrow().get(word) {
            return t.clone();
        }
        let result = match word.windows(2).position(|w| w[0] > w[1]) {
            None => Terms::from([(word.to_vec(), Rational::one())]),
            Some(k) => {
                let mut acc = Terms::new();
                let mut swapped = word.to_vec();
                swapped.swap(k, k + 1);
                for (w, c) in self.normalize_positions(&swapped).iter() {
                    add_into(&mut acc, w.clone(), c.clone());
                }
                for (g, v) in self.alg.bracket_basis(word[k], word[k + 1]) {
                    let mut shorter = word[..k].to_vec();
                    shorter.push(*g);
                    shorter.extend_from_slice(&word[k + 2..]);
                    for (w, c) in self.normalize_positions(&shorter).iter() {
                        add_into(&mut acc, w.clone(), c * v);
                    }
                }
                prune(acc)
            }
        };
        let result = Rc::new(result);
        self.memo.borrow_mut().insert(word.to_vec(), result.clone());
        result
    }

    fn positions(&self, word: &[Root]) -> Result<Vec<usize>> {
        word.iter().map(|r| self.alg.require(r)).collect()
    }

    fn export(&self, t: &Terms) -> PbwElement {
        PbwElement {
            terms: t
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, c)| (w.iter().map(|&p| self.alg.basis()[p]).collect(), c.clone()))
                .collect(),
        }
    }

    fn import(&self, u: &PbwElement) -> Result<Terms> {
        u.terms
            .iter()
            .map(|(w, c)| Ok((self.positions(w)?, c.clone())))
            .collect()
    }

    pub fn normalize(&self, word: &[Root]) -> Result<PbwElement> {
        let p = self.positions(word)?;
        Ok(self.export(&self.normalize_positions(&p)))
    }

    /// Normalize an arbitrary linear combination of words.
    pub fn normalize_sum(&self, words: &[(Vec<Root>, Rational)]) -> Result<PbwElement> {
        let mut acc = Terms::new();
        for (w, c) in words {
            for (nw, nc) in self.normalize_positions(&self.positions(w)?).iter() {
                add_into(&mut acc, nw.clone(), nc * c);
            }
        }
        Ok(self.export(&prune(acc)))
    }

    fn mul_terms(&self, a: &Terms, b: &Terms) -> Terms {
        let mut acc = Terms::new();
        for (wa, ca) in a {
            for (wb, cb) in b {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                let c = ca * cb;
                for (nw, nc) in self.normalize_positions(&w).iter() {
                    add_into(&mut acc, nw.clone(), nc * &c);
                }
            }
        }
        prune(acc)
    }

    pub fn mul(&self, a: &PbwElement, b: &PbwElement) -> Result<PbwElement> {
        Ok(self.export(&self.mul_terms(&self.import(a)?, &self.import(b)?)))
    }

    pub fn add(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        let mut terms = a.terms.clone();
        for (w, c) in &b.terms {
            *terms.entry(w.clone()).or_insert_with(Rational::zero) += c;
        }
        terms.retain(|_, v| !v.is_zero());
        PbwElement { terms }
    }

    pub fn scale(&self, a: &PbwElement, s: &Rational) -> PbwElement {
        let mut terms: BTreeMap<_, _> = a.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect();
        terms.retain(|_, v: &mut Rational| !v.is_zero());
        PbwElement { terms }
    }

    /// `uv − vu`.
    pub fn commutator(&self, a: &PbwElement, b: &PbwElement) -> Result<PbwElement> {
        let (ta, tb) = (self.import(a)?, self.import(b)?);
        let mut ab = self.mul_terms(&ta, &tb);
        for (w, c) in self.mul_terms(&tb, &ta) {
            add_into(&mut ab, w, -c);
        }
        Ok(self.export(&prune(ab)))
    }

    /// `σ(x_1⋯x_d) = (1/d!) Σ_{π} x_{π(1)}⋯x_{π(d)}`, extended linearly.
    pub fn symmetrize(&self, f: &SymPoly) -> Result<PbwElement> {
        let cap = degree_cap();
        let mut acc = Terms::new();
        for (m, c) in f.terms() {
            let d = m.degree() as usize;
            if d > cap {
                return Err(Error::DegreeCap { degree: d, cap });
            }
            let mut word = self.positions(&m.word())?;
            word.sort();
            // Each distinct arrangement stands for ∏ e_i! of the d! orderings.
            let weight: Rational = m
                .powers()
                .iter()
                .map(|(_, e)| factorial(*e as usize))
                .product::<Rational>()
                / factorial(d)
                * c;
            loop {
                for (nw, nc) in self.normalize_positions(&word).iter() {
                    add_into(&mut acc, nw.clone(), nc * &weight);
                }
                if !next_permutation(&mut word) {
                    break;
                }
            }
        }
        Ok(self.export(&prune(acc)))
    }

    /// `u` is central iff `u e_γ − e_γ u = 0` for every basis vector `e_γ`.
    pub fn is_central(&self, u: &PbwElement) -> Result<Centrality> {
        let tu = self.import(u)?;
        for g in 0..self.alg.dim() {
            let eg = Terms::from([(vec![g], Rational::one())]);
            let mut c = self.mul_terms(&tu, &eg);
            for (w, v) in self.mul_terms(&eg, &tu) {
                add_into(&mut c, w, -v);
            }
            let c = prune(c);
            if !c.is_empty() {
                return Ok(Centrality {
                    central: false,
                    witness: Some((self.alg.basis()[g], self.export(&c))),
                });
            }
        }
        Ok(Centrality {
            central: true,
            witness: None,
        })
    }
}

/// Lexicographic successor; `false` once the last arrangement is reached.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}
