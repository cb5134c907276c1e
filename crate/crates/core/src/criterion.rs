//! The nontriviality criterion: matrices `[λ]_p`, exact window ranks, the
//! "rank not maximal" test and the three-valued verdict on `I(λ) ≠ 0`.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cascade::cascade;
use crate::centgen::{ideal_generators, region, UpperRightPair};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::linform::LinearForm;
use crate::rational::{int, Rational};
use crate::rootsys::{OrderSpec, Root, SystemType, Window};

/// Entry `(i′, j′)` of `[λ]_p`.
///
/// For B/D the matrix is made skew: `λ(e_{ε_{i′}+ε_{j′}})` when `ε_{i′} ≻ ε_{j′}`
/// and its negative otherwise, matching the matrix realization of `λ`.
pub fn lambda_entry(
    lambda: &LinearForm,
    p: &UpperRightPair,
    order: &OrderSpec,
    i: u32,
    j: u32,
) -> Result<Rational> {
    match (order.system, p) {
        (SystemType::A, _) => lambda.value(&Root::diff(i, j)?),
        (SystemType::C, _) if i == j => Ok(lambda.value(&Root::double(i)?)? * int(2)),
        (_, _) if i == j => Ok(Rational::zero()),
        (SystemType::C, _) => lambda.value(&Root::sum(i, j)?),
        _ => {
            let v = lambda.value(&Root::sum(i, j)?)?;
            Ok(if order.greater(i, j)? { v } else { -v })
        }
    }
}

/// The submatrix of `[λ]_p` on the given rows and columns (columns by `j′`).
pub fn lambda_matrix(
    lambda: &LinearForm,
    p: &UpperRightPair,
    order: &OrderSpec,
    rows: &[u32],
    cols: &[u32],
) -> Result<Matrix> {
    let mut all: Vec<u32> = rows.to_vec();
    all.extend(cols);
    let (r_ok, c_ok) = region(p, order, &all)?;
    for i in rows {
        if !r_ok.contains(i) {
            return Err(Error::InvalidPair(format!("row {i} lies outside [λ]_{p}")));
        }
    }
    for j in cols {
        if !c_ok.contains(j) {
            return Err(Error::InvalidPair(format!(
                "column {j} lies outside [λ]_{p}"
            )));
        }
    }
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (s, &i) in rows.iter().enumerate() {
        for (t, &j) in cols.iter().enumerate() {
            m[(s, t)] = lambda_entry(lambda, p, order, i, j)?;
        }
    }
    Ok(m)
}

/// Rows, columns and rank of `[λ]_p` restricted to a window.
pub fn window_rank(
    lambda: &LinearForm,
    p: &UpperRightPair,
    order: &OrderSpec,
    window: &[u32],
) -> Result<WindowRank> {
    let (rows, cols) = region(p, order, window)?;
    let rank = lambda_matrix(lambda, p, order, &rows, &cols)?.rank();
    Ok(WindowRank {
        pair: *p,
        rows,
        cols,
        rank,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowRank {
    pub pair: UpperRightPair,
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
    pub rank: usize,
}

/// Row and column counts of the full `[λ]_p` (`None` = infinite).
pub fn matrix_sizes(
    p: &UpperRightPair,
    order: &OrderSpec,
) -> Result<(Option<usize>, Option<usize>)> {
    p.validate(order)?;
    Ok(match *p {
        UpperRightPair::General(i, j) => (order.count_at_or_above(i)?, order.count_at_or_below(j)?),
        UpperRightPair::Diagonal(i) => {
            let c = order.count_at_or_above(i)?;
            (c, c)
        }
        UpperRightPair::MaxRow(j) => (Some(1), order.count_at_or_above(j)?.map(|c| c - 1)),
    })
}

/// "Not maximal": rank finite and either both sizes infinite, or the least
/// size finite and greater than the rank.
pub fn is_not_maximal(rank: usize, sizes: (Option<usize>, Option<usize>)) -> bool {
    match sizes {
        (None, None) => true,
        (Some(a), None) | (None, Some(a)) => a > rank,
        (Some(a), Some(b)) => a.min(b) > rank,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankDecision {
    pub pair: UpperRightPair,
    pub not_maximal: bool,
    /// Exact rank of the full matrix, when known.
    pub rank: Option<usize>,
    pub row_size: Option<usize>,
    pub col_size: Option<usize>,
    pub certificate: String,
}

/// Decides whether `rk [λ]_p` is not maximal, for finitely supported and
/// Cauchy forms.
pub fn rank_not_maximal(
    lambda: &LinearForm,
    p: &UpperRightPair,
    order: &OrderSpec,
) -> Result<RankDecision> {
    let (row_size, col_size) = matrix_sizes(p, order)?;
    match lambda {
        LinearForm::CauchyA { .. } => {
            if order.system != SystemType::A {
                return Err(Error::UnsupportedFamily(
                    "cauchy forms are defined for type A only".into(),
                ));
            }
            Ok(RankDecision {
                pair: *p,
                not_maximal: false,
                rank: None,
                row_size,
                col_size,
                certificate: "every minor of [λ]_p is a Cauchy determinant with distinct a's and b's, hence nonzero".into(),
            })
        }
        _ => {
            let support = lambda.support().expect("finite support");
            let mut idx: BTreeSet<u32> = support.keys().flat_map(|r| r.indices()).collect();
            idx.retain(|&i| order.contains(i));
            let window: Vec<u32> = idx.into_iter().collect();
            let wr = window_rank(lambda, p, order, &window)?;
            let nm = is_not_maximal(wr.rank, (row_size, col_size));
            Ok(RankDecision {
                pair: *p,
                not_maximal: nm,
                rank: Some(wr.rank),
                row_size,
                col_size,
                certificate: format!(
                    "entries outside rows {:?} x columns {:?} vanish; rank there is {}",
                    wr.rows, wr.cols, wr.rank
                ),
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `B ≠ ∅`.
    Cascade(Root),
    /// A pair with non-maximal rank, and the `k` whose ideal `I(p, k)` vanishes at `λ`.
    Pair { decision: RankDecision, k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Nonzero {
        witness: Witness,
        certificate: String,
    },
    Zero {
        certificate: String,
    },
    Undetermined {
        certificate: String,
        window_report: Vec<LadderStep>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderStep {
    pub window: Vec<u32>,
    pub ranks: Vec<WindowRank>,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Nonzero { .. } => "nonzero",
            Verdict::Zero { .. } => "zero",
            Verdict::Undetermined { .. } => "undetermined",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Verdict::Nonzero {
                witness,
                certificate,
            } => {
                let w = match witness {
                    Witness::Cascade(r) => json!({"kind": "cascade", "root": r.to_string()}),
                    Witness::Pair { decision, k } => json!({
                        "kind": "pair",
                        "pair": decision.pair.to_string(),
                        "k": k,
                        "rank": decision.rank,
                        "row_size": decision.row_size.map_or(json!("infinite"), |s| json!(s)),
                        "col_size": decision.col_size.map_or(json!("infinite"), |s| json!(s)),
                        "rank_certificate": decision.certificate,
                    }),
                };
                json!({"verdict": "nonzero", "witness": w, "certificate": certificate})
            }
            Verdict::Zero { certificate } => json!({"verdict": "zero", "certificate": certificate}),
            Verdict::Undetermined {
                certificate,
                window_report,
            } => json!({
                "verdict": "undetermined",
                "certificate": certificate,
                "window_report": window_report.iter().map(|s| json!({
                    "window": s.window,
                    "ranks": s.ranks.iter().map(|r| json!({
                        "pair": r.pair.to_string(),
                        "rows": r.rows,
                        "cols": r.cols,
                        "rank": r.rank,
                    })).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            }),
        }
    }
}

/// Checks that every root of a finitely supported form is a positive root of the order.
pub fn validate_form(lambda: &LinearForm, order: &OrderSpec) -> Result<()> {
    match lambda {
        LinearForm::CauchyA { .. } if order.system != SystemType::A => Err(
            Error::UnsupportedFamily("cauchy forms are defined for type A only".into()),
        ),
        LinearForm::CauchyA { .. } => Ok(()),
        _ => {
            for r in lambda.support().unwrap().keys() {
                if !order.is_positive(r)? {
                    return Err(Error::NotPositive {
                        root: *r,
                        context: format!("support of λ under the {} order", order.system),
                    });
                }
            }
            Ok(())
        }
    }
}

/// Indices of the support, their immediate neighbours, the extrema of the
/// order and the first indices of each stream, sorted largest first.
pub fn candidate_indices(lambda: &LinearForm, order: &OrderSpec) -> Result<Vec<u32>> {
    let mut set: BTreeSet<u32> = BTreeSet::new();
    if let Some(s) = lambda.support() {
        for r in s.keys() {
            for i in r.indices() {
                set.insert(i);
                let (a, b) = order.neighbors(i)?;
                set.extend(a);
                set.extend(b);
            }
        }
    }
    set.extend(order.max_element());
    set.extend(order.min_element());
    set.extend(order.prefix_indices(4));
    // One index beyond the support in each infinite direction.
    let support: Vec<u32> = set.iter().copied().collect();
    for stream in [&order.top, &order.bottom] {
        if stream.len().is_none() {
            let far = support
                .iter()
                .filter_map(|&i| stream.position(i))
                .max()
                .map_or(0, |p| p + 1);
            set.extend(stream.get(far));
        }
    }
    order.sort_desc(&set.into_iter().collect::<Vec<_>>())
}

/// Upper-right pairs over the candidate indices, in a fixed order.
pub fn candidate_pairs(lambda: &LinearForm, order: &OrderSpec) -> Result<Vec<UpperRightPair>> {
    let c = candidate_indices(lambda, order)?;
    let mut out = Vec::new();
    match order.system {
        SystemType::A => {
            for (s, &i) in c.iter().enumerate() {
                for &j in &c[s + 1..] {
                    out.push(UpperRightPair::General(i, j));
                }
            }
        }
        sys => {
            out.extend(c.iter().map(|&i| UpperRightPair::Diagonal(i)));
            if matches!(sys, SystemType::B | SystemType::D) {
                if let Some(m) = order.max_element() {
                    out.extend(
                        c.iter()
                            .filter(|&&j| j != m)
                            .map(|&j| UpperRightPair::MaxRow(j)),
                    );
                }
            }
        }
    }
    Ok(out)
}

/// `k` with `k′ = rank + 1` (rounded up to the next even value for B/D diagonal pairs).
pub fn witness_k(p: &UpperRightPair, system: SystemType, rank: usize) -> usize {
    if p.k_prime(system, 1) == 2 {
        rank / 2 + 1
    } else {
        rank + 1
    }
}

/// The three-valued verdict on `I(λ) ≠ 0`.
pub fn nontriviality_verdict(
    order: &OrderSpec,
    lambda: &LinearForm,
    max_window: usize,
) -> Result<Verdict> {
    validate_form(lambda, order)?;
    if let Some(beta) = cascade(order, 1).roots.first() {
        return Ok(Verdict::Nonzero {
            witness: Witness::Cascade(*beta),
            certificate: "the cascade is nonempty, so I(λ) ≠ 0".into(),
        });
    }
    if let LinearForm::CauchyA { .. } = lambda {
        return Ok(Verdict::Zero {
            certificate: "all minors of every [λ]_p are nonzero Cauchy determinants, so every rank is maximal".into(),
        });
    }
    let pairs = candidate_pairs(lambda, order)?;
    for p in &pairs {
        let d = rank_not_maximal(lambda, p, order)?;
        if d.not_maximal {
            let k = witness_k(p, order.system, d.rank.unwrap());
            return Ok(Verdict::Nonzero {
                witness: Witness::Pair { decision: d, k },
                certificate: format!("rk [λ]_{p} is not maximal, so I({p}, {k}) ⊆ I(λ) is nonzero"),
            });
        }
    }
    let mut report = Vec::new();
    let mut w = 2;
    while w <= max_window.max(2) {
        let window = order.prefix_indices(w);
        let mut ranks = Vec::new();
        for p in &pairs {
            ranks.push(window_rank(lambda, p, order, &window)?);
        }
        report.push(LadderStep { window, ranks });
        w *= 2;
    }
    Ok(Verdict::Undetermined {
        certificate: "no candidate pair has a certified non-maximal rank".into(),
        window_report: report,
    })
}

/// Whether `(all window generators of I(p, k) vanish at λ) ⇔ (window rank < k′)`.
pub fn rank_locus_equivalence(
    lambda: &LinearForm,
    p: &UpperRightPair,
    k: usize,
    order: &OrderSpec,
    window: &Window,
) -> Result<bool> {
    let gens = ideal_generators(p, k, order, window)?;
    let mut vanish = true;
    for g in &gens.generators {
        if !g.evaluate(lambda)?.is_zero() {
            vanish = false;
            break;
        }
    }
    let rank = window_rank(lambda, p, order, window.labels())?.rank;
    Ok(vanish == (rank < p.k_prime(order.system, k)))
}
