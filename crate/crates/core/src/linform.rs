//! Linear forms `λ ∈ n*`.
//!
//! Three families are supported: finitely supported forms, the Cauchy family
//! `λ(e_{ε_i − ε_j}) = 1/(a_i + b_j)` with affine `a`, `b` (type A only), and
//! tables on a finite window (converted to a finite support).

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::rootsys::Root;

/// The affine sequence `start + step·(i − 1)`, `i = 1, 2, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub start: Rational,
    pub step: Rational,
}

impl Affine {
    pub fn at(&self, i: u32) -> Rational {
        &self.start + &self.step * Rational::from_integer((i as i64 - 1).into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearForm {
    FinSupport(BTreeMap<Root, Rational>),
    CauchyA {
        a: Affine,
        b: Affine,
    },
    Table {
        window: Vec<u32>,
        values: BTreeMap<Root, Rational>,
    },
}

fn sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

impl LinearForm {
    pub fn zero() -> Self {
        LinearForm::FinSupport(BTreeMap::new())
    }

    pub fn fin_support(entries: impl IntoIterator<Item = (Root, Rational)>) -> Self {
        let mut m = BTreeMap::new();
        for (r, v) in entries {
            if !v.is_zero() {
                m.insert(r, v);
            }
        }
        LinearForm::FinSupport(m)
    }

    /// Validates that `a_i` and `b_j` are pairwise distinct and that every
    /// `a_i + b_j` is nonzero. For affine rules the latter is certified by
    /// requiring `step_a`, `step_b` and `start_a + start_b` to share one strict sign.
    pub fn cauchy(a: Affine, b: Affine) -> Result<Self> {
        let s0 = &a.start + &b.start;
        let signs = [sign(&a.step), sign(&b.step), sign(&s0)];
        if signs.contains(&0) || signs.iter().any(|&s| s != signs[0]) {
            return Err(Error::InvalidLinearForm(
                "cauchy rule needs step_a, step_b and start_a + start_b nonzero with a common sign"
                    .into(),
            ));
        }
        Ok(LinearForm::CauchyA { a, b })
    }

    /// Builds a table form. `matrix[s][t]` is `λ(e_{ε_{w_s} − ε_{w_t}})` for
    /// `s ≠ t`; `plus[s][t]` is `λ(e_{ε_{w_s} + ε_{w_t}})` and its diagonal holds
    /// `λ(e_{2ε_{w_s}})` (type C) or `λ(e_{ε_{w_s}})` (type B).
    pub fn table(
        window: Vec<u32>,
        matrix: &[Vec<Rational>],
        plus: Option<&[Vec<Rational>]>,
    ) -> Result<Self> {
        let n = window.len();
        let square = |m: &[Vec<Rational>]| m.len() == n && m.iter().all(|r| r.len() == n);
        if !square(matrix) || plus.is_some_and(|p| !square(p)) {
            return Err(Error::InvalidLinearForm(format!(
                "table blocks must be {n}x{n}"
            )));
        }
        let mut values = BTreeMap::new();
        for s in 0..n {
            for t in 0..n {
                let (a, b) = (window[s], window[t]);
                if s != t && !matrix[s][t].is_zero() {
                    values.insert(Root::diff(a, b)?, matrix[s][t].clone());
                }
            }
        }
        if let Some(p) = plus {
            for s in 0..n {
                for t in s..n {
                    if p[s][t] != p[t][s] {
                        return Err(Error::InvalidLinearForm(
                            "plus block must be symmetric".into(),
                        ));
                    }
                    if p[s][t].is_zero() {
                        continue;
                    }
                    if s == t {
                        values.insert(Root::double(window[s])?, p[s][s].clone());
                        values.insert(Root::short(window[s])?, p[s][s].clone());
                    } else {
                        values.insert(Root::sum(window[s], window[t])?, p[s][t].clone());
                    }
                }
            }
        }
        Ok(LinearForm::Table { window, values })
    }

    /// `λ(e_α)`.
    pub fn value(&self, root: &Root) -> Result<Rational> {
        match self {
            LinearForm::FinSupport(m) | LinearForm::Table { values: m, .. } => {
                Ok(m.get(root).cloned().unwrap_or_else(Rational::zero))
            }
            LinearForm::CauchyA { a, b } => match *root {
                Root::Diff(i, j) => Ok((a.at(i) + b.at(j)).recip()),
                _ => Err(Error::VariableOutsideAlgebra(*root)),
            },
        }
    }

    /// The finite support, when the form has one.
    pub fn support(&self) -> Option<&BTreeMap<Root, Rational>> {
        match self {
            LinearForm::FinSupport(m) | LinearForm::Table { values: m, .. } => Some(m),
            LinearForm::CauchyA { .. } => None,
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            LinearForm::FinSupport(_) => "finsupport",
            LinearForm::CauchyA { .. } => "cauchy",
            LinearForm::Table { .. } => "table",
        }
    }

    /// Restriction to a finite list of roots, as a finitely supported form.
    pub fn restrict(&self, roots: &[Root]) -> Result<LinearForm> {
        let mut out = BTreeMap::new();
        for r in roots {
            let v = self.value(r)?;
            if !v.is_zero() {
                out.insert(*r, v);
            }
        }
        Ok(LinearForm::FinSupport(out))
    }

    pub fn to_json(&self) -> Value {
        match self {
            LinearForm::FinSupport(m) => serde_json::json!({
                "kind": "finsupport",
                "entries": m.iter().map(|(r, v)| serde_json::json!({
                    "root": r.to_string(),
                    "value": rational::format(v),
                })).collect::<Vec<_>>(),
            }),
            LinearForm::CauchyA { a, b } => {
                let aff = |x: &Affine| serde_json::json!({"start": rational::format(&x.start), "step": rational::format(&x.step)});
                serde_json::json!({"kind": "cauchy", "a": aff(a), "b": aff(b)})
            }
            LinearForm::Table { window, values } => {
                let n = window.len();
                let cell = |r: Result<Root>| {
                    r.ok()
                        .and_then(|r| values.get(&r).map(rational::format))
                        .unwrap_or_else(|| "0".into())
                };
                let matrix: Vec<Vec<String>> = (0..n)
                    .map(|s| {
                        (0..n)
                            .map(|t| {
                                if s == t {
                                    "0".into()
                                } else {
                                    cell(Root::diff(window[s], window[t]))
                                }
                            })
                            .collect()
                    })
                    .collect();
                let plus: Vec<Vec<String>> = (0..n)
                    .map(|s| {
                        (0..n)
                            .map(|t| {
                                if s == t {
                                    let d = cell(Root::double(window[s]));
                                    if d == "0" {
                                        cell(Root::short(window[s]))
                                    } else {
                                        d
                                    }
                                } else {
                                    cell(Root::sum(window[s], window[t]))
                                }
                            })
                            .collect()
                    })
                    .collect();
                serde_json::json!({"kind": "table", "window": window, "matrix": matrix, "plus": plus})
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let raw: RawForm = serde_json::from_value(v.clone())
            .map_err(|e| Error::InvalidLinearForm(e.to_string()))?;
        match raw {
            RawForm::Finsupport { entries } => {
                let mut m = BTreeMap::new();
                for e in entries {
                    let v = json_rational(&e.value)?;
                    if m.insert(e.root, v).is_some() {
                        return Err(Error::InvalidLinearForm(format!(
                            "root {} listed twice",
                            e.root
                        )));
                    }
                }
                m.retain(|_, v: &mut Rational| !v.is_zero());
                Ok(LinearForm::FinSupport(m))
            }
            RawForm::Cauchy { a, b } => {
                let aff = |x: RawAffine| -> Result<Affine> {
                    Ok(Affine {
                        start: json_rational(&x.start)?,
                        step: json_rational(&x.step)?,
                    })
                };
                LinearForm::cauchy(aff(a)?, aff(b)?)
            }
            RawForm::Table {
                window,
                matrix,
                plus,
            } => {
                let conv = |m: Vec<Vec<Value>>| -> Result<Vec<Vec<Rational>>> {
                    m.iter()
                        .map(|r| r.iter().map(json_rational).collect())
                        .collect()
                };
                let matrix = conv(matrix)?;
                let plus = plus.map(conv).transpose()?;
                LinearForm::table(window, &matrix, plus.as_deref())
            }
        }
    }
}

/// Accepts `"p/q"` strings and JSON integers.
pub fn json_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => rational::parse(s),
        Value::Number(n) if n.is_i64() => Ok(rational::int(n.as_i64().unwrap())),
        other => Err(Error::InvalidRational(other.to_string())),
    }
}

#[derive(Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum RawForm {
    Finsupport {
        entries: Vec<RawEntry>,
    },
    Cauchy {
        a: RawAffine,
        b: RawAffine,
    },
    Table {
        window: Vec<u32>,
        matrix: Vec<Vec<Value>>,
        #[serde(default)]
        plus: Option<Vec<Vec<Value>>>,
    },
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    root: Root,
    value: Value,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawAffine {
    start: Value,
    step: Value,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn finsupport_json_roundtrip() {
        let j = serde_json::json!({"kind":"finsupport","entries":[{"root":"e1-e2","value":"3/2"},{"root":"2e3","value":0}]});
        let f = LinearForm::from_json(&j).unwrap();
        assert_eq!(f.value(&Root::Diff(1, 2)).unwrap(), frac(3, 2));
        assert_eq!(f.value(&Root::Diff(2, 3)).unwrap(), int(0));
        assert_eq!(f.support().unwrap().len(), 1);
        assert_eq!(LinearForm::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn cauchy_rules() {
        let one = |s, d| Affine {
            start: int(s),
            step: int(d),
        };
        let f = LinearForm::cauchy(one(1, 1), one(0, 1)).unwrap();
        assert_eq!(f.value(&Root::Diff(2, 5)).unwrap(), frac(1, 6));
        assert!(f.value(&Root::Sum(1, 2)).is_err());
        assert!(LinearForm::cauchy(one(1, 1), one(-1, 1)).is_err());
        assert!(LinearForm::cauchy(one(1, 0), one(0, 1)).is_err());
        assert!(LinearForm::cauchy(one(-1, -1), one(0, -2)).is_ok());
        assert_eq!(LinearForm::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn table_blocks() {
        let m = vec![vec![int(0), int(1)], vec![int(2), int(0)]];
        let p = vec![vec![int(3), int(4)], vec![int(4), int(0)]];
        let f = LinearForm::table(vec![5, 2], &m, Some(&p)).unwrap();
        assert_eq!(f.value(&Root::Diff(5, 2)).unwrap(), int(1));
        assert_eq!(f.value(&Root::Diff(2, 5)).unwrap(), int(2));
        assert_eq!(f.value(&Root::Sum(2, 5)).unwrap(), int(4));
        assert_eq!(f.value(&Root::Double(5)).unwrap(), int(3));
        assert_eq!(f.value(&Root::Diff(1, 2)).unwrap(), int(0));
        assert_eq!(LinearForm::from_json(&f.to_json()).unwrap(), f);
        let bad = vec![vec![int(0), int(1)], vec![int(2), int(0)]];
        assert!(LinearForm::table(vec![5, 2], &m, Some(&bad)).is_err());
    }
}
