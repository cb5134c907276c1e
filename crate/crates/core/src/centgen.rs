//! Determinant minors `ξ_I^J` (types A, C), Pfaffians `ξ_I` (types B, D),
//! canonical central generators `ξ_β`, `Δ_β = σ(ξ_β)`, and the generators
//! of the ideals `I(p, k)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cascade::{cascade_step, finite_cascade, CascadeState};
use crate::envalg::{Pbw, PbwElement};
use crate::error::{Error, Result};
use crate::liealg::NilAlgebra;
use crate::rational::{int, Rational};
use crate::rootsys::{OrderSpec, Root, SystemType, Window};
use crate::symalg::{Monomial, SymPoly};

/// Determinant by first-row Laplace expansion, memoized on the set of used columns.
pub fn poly_det(m: &[Vec<SymPoly>]) -> SymPoly {
    let n = m.len();
    fn go(m: &[Vec<SymPoly>], row: usize, used: u64, memo: &mut HashMap<u64, SymPoly>) -> SymPoly {
        if row == m.len() {
            return SymPoly::one();
        }
        if let Some(p) = memo.get(&used) {
            return p.clone();
        }
        let mut acc = SymPoly::zero();
        let mut sign = 1i64;
        for c in 0..m.len() {
            if used & (1 << c) != 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let minor = go(m, row + 1, used | (1 << c), memo);
                let term = (&m[row][c] * &minor).scale(&int(sign));
                acc = &acc + &term;
            }
            sign = -sign;
        }
        memo.insert(used, acc.clone());
        acc
    }
    assert!(
        n < 64 && m.iter().all(|r| r.len() == n),
        "square matrix expected"
    );
    go(m, 0, 0, &mut HashMap::new())
}

/// Pfaffian of a skew-symmetric matrix (only the strict upper triangle is read).
pub fn poly_pfaffian(a: &[Vec<SymPoly>]) -> SymPoly {
    fn go(a: &[Vec<SymPoly>], rest: u64, memo: &mut HashMap<u64, SymPoly>) -> SymPoly {
        if rest == 0 {
            return SymPoly::one();
        }
        if let Some(p) = memo.get(&rest) {
            return p.clone();
        }
        let first = rest.trailing_zeros() as usize;
        let others = rest & !(1 << first);
        let mut acc = SymPoly::zero();
        for (pos, j) in (0..a.len()).filter(|j| others & (1 << j) != 0).enumerate() {
            if a[first][j].is_zero() {
                continue;
            }
            let sub = go(a, others & !(1 << j), memo);
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            acc = &acc + &(&a[first][j] * &sub).scale(&int(sign));
        }
        memo.insert(rest, acc.clone());
        acc
    }
    let n = a.len();
    if n % 2 == 1 {
        return SymPoly::zero();
    }
    go(a, (1u64 << n) - 1, &mut HashMap::new())
}

fn var(r: Root) -> SymPoly {
    SymPoly::var(r)
}

fn check_descending(order: &OrderSpec, seq: &[u32], what: &str) -> Result<()> {
    for w in seq.windows(2) {
        if !order.greater(w[0], w[1])? {
            return Err(Error::InvalidMinor(format!(
                "{what} {seq:?} is not strictly descending"
            )));
        }
    }
    Ok(())
}

/// `ξ_I^J`. For type A, `ε_{i_1} ≻ … ≻ ε_{i_k} ≻ ε_{j_k} ≻ … ≻ ε_{j_1}`; for
/// type C both sequences descend and coinciding indices give `2e_{2ε_i}`.
pub fn xi_minor(
    system: SystemType,
    order: &OrderSpec,
    rows: &[u32],
    cols: &[u32],
) -> Result<SymPoly> {
    let k = rows.len();
    if k == 0 || cols.len() != k {
        return Err(Error::InvalidMinor(format!(
            "|I| = {k}, |J| = {}",
            cols.len()
        )));
    }
    check_descending(order, rows, "I")?;
    let entry: Box<dyn Fn(u32, u32) -> Result<SymPoly>> = match system {
        SystemType::A => {
            let mut chain = rows.to_vec();
            chain.extend(cols.iter().rev());
            check_descending(order, &chain, "I followed by reversed J")?;
            Box::new(|i, j| Ok(var(Root::diff(i, j)?)))
        }
        SystemType::C => {
            check_descending(order, cols, "J")?;
            Box::new(|i, j| {
                Ok(if i == j {
                    var(Root::double(i)?).scale(&int(2))
                } else {
                    var(Root::sum(i, j)?)
                })
            })
        }
        other => {
            return Err(Error::InvalidMinor(format!(
                "minors are defined for A and C, not {other}"
            )))
        }
    };
    let m: Vec<Vec<SymPoly>> = (0..k)
        .map(|s| {
            (0..k)
                .map(|t| entry(rows[s], cols[k - t - 1]))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    Ok(poly_det(&m))
}

/// Skew matrix with `A[s][t] = e_{ε_{i_s} + ε_{i_t}}` for `s < t`.
fn skew_sum_matrix(idx: &[u32]) -> Result<Vec<Vec<SymPoly>>> {
    let n = idx.len();
    let mut a = vec![vec![SymPoly::zero(); n]; n];
    for s in 0..n {
        for t in s + 1..n {
            let v = var(Root::sum(idx[s], idx[t])?);
            a[t][s] = -&v;
            a[s][t] = v;
        }
    }
    Ok(a)
}

/// `ξ_I` for types B and D: the Pfaffian normalized so that
/// `e_{ε_{i_1}+ε_{i_2}} e_{ε_{i_3}+ε_{i_4}} ⋯` has coefficient `+1`.
pub fn xi_pfaffian(system: SystemType, order: &OrderSpec, idx: &[u32]) -> Result<SymPoly> {
    if !matches!(system, SystemType::B | SystemType::D) {
        return Err(Error::InvalidMinor(format!(
            "Pfaffians are defined for B and D, not {system}"
        )));
    }
    if idx.is_empty() || idx.len() % 2 == 1 {
        return Err(Error::InvalidMinor(format!(
            "|I| = {} must be even and positive",
            idx.len()
        )));
    }
    check_descending(order, idx, "I")?;
    let pf = poly_pfaffian(&skew_sum_matrix(idx)?);
    let lead = Monomial::from_powers(
        idx.chunks(2)
            .map(|c| (Root::Sum(c[0].min(c[1]), c[0].max(c[1])), 1)),
    );
    let c = pf.coeff(&lead);
    if c.is_zero() {
        return Err(Error::InvalidMinor("normalization monomial missing".into()));
    }
    Ok(pf.scale(&c.recip()))
}

/// The matrix displayed for `ξ_I²`: the skew matrix with columns reversed.
pub fn pfaffian_display_matrix(idx: &[u32]) -> Result<Vec<Vec<SymPoly>>> {
    let a = skew_sum_matrix(idx)?;
    Ok(a.into_iter()
        .map(|row| row.into_iter().rev().collect())
        .collect())
}

/// Canonical generator of a standard finite cascade root, in standard labels.
pub fn finite_generator(system: SystemType, n: usize, beta: &Root) -> Result<SymPoly> {
    if !finite_cascade(system, n)?.contains(beta) {
        return Err(Error::NotInCascade(*beta));
    }
    let order = OrderSpec::finite(system, n as u32);
    match (system, *beta) {
        (SystemType::A, Root::Diff(i, _)) => {
            let rows: Vec<u32> = (1..=i).collect();
            let cols: Vec<u32> = (0..i).map(|t| n as u32 - t).collect();
            xi_minor(system, &order, &rows, &cols)
        }
        (SystemType::C, Root::Double(i)) => {
            let idx: Vec<u32> = (1..=i).collect();
            xi_minor(system, &order, &idx, &idx)
        }
        (SystemType::B | SystemType::D, Root::Sum(_, j)) => {
            let idx: Vec<u32> = (1..=j).collect();
            xi_pfaffian(system, &order, &idx)
        }
        _ => Err(Error::NoFormula(*beta)),
    }
}

/// Whether the standard finite cascade root has an explicit formula.
pub fn has_formula(system: SystemType, beta: &Root) -> bool {
    matches!(
        (system, beta),
        (SystemType::A, Root::Diff(..))
            | (SystemType::C, Root::Double(_))
            | (SystemType::B | SystemType::D, Root::Sum(..))
    )
}

/// `ξ_β` computed through the window `M`: `φ_M(ξ_{j_M^{-1}(β)})`.
pub fn canonical_xi_in(beta: &Root, order: &OrderSpec, window: &Window) -> Result<SymPoly> {
    let std_beta = window.to_standard(beta)?;
    let xi = finite_generator(order.system, window.rank(), &std_beta)?;
    xi.map_roots(|r| window.from_standard(r))
}

#[derive(Clone, Debug)]
pub struct CanonicalGenerator {
    pub beta: Root,
    /// Position of `β` in the cascade (1-based).
    pub step: usize,
    /// `N_k`, sorted by the order.
    pub window: Window,
    pub xi: SymPoly,
    pub delta: PbwElement,
}

/// Steps the cascade until `β` appears (within a bound that depends on the
/// stream positions of `β`'s indices) and returns the state after that step.
pub fn locate_in_cascade(beta: &Root, order: &OrderSpec) -> Result<(usize, CascadeState)> {
    let mut pos_bound = 0usize;
    for i in beta.indices() {
        let p = order
            .top
            .position(i)
            .or_else(|| order.bottom.position(i))
            .ok_or(Error::IndexNotCovered(i))?;
        pos_bound = pos_bound.max(p + 1);
    }
    let finite = order.top.len().unwrap_or(0) + order.bottom.len().unwrap_or(0);
    let bound = finite + 2 * pos_bound + 1;
    let mut state = CascadeState::default();
    for step in 1..=bound {
        let Some((root, next)) = cascade_step(&state, order) else {
            break;
        };
        state = next;
        if root == *beta {
            return Ok((step, state));
        }
    }
    Err(Error::NotInCascade(*beta))
}

/// `ξ_β` on the minimal window `M = N_k`, together with `Δ_β = σ(ξ_β)`.
pub fn canonical_generator(beta: &Root, order: &OrderSpec) -> Result<CanonicalGenerator> {
    let (step, state) = locate_in_cascade(beta, order)?;
    let window = Window::new(order, state.consumed.iter().copied())?;
    let xi = canonical_xi_in(beta, order, &window)?;
    let alg = NilAlgebra::window(order.system, &window)?;
    let delta = Pbw::new(&alg).symmetrize(&xi)?;
    Ok(CanonicalGenerator {
        beta: *beta,
        step,
        window,
        xi,
        delta,
    })
}

/// Upper-right pair `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum UpperRightPair {
    /// `(i, j)` for type A, `ε_i ≻ ε_j`.
    General(u32, u32),
    /// `(i, −i)` for types B, C, D.
    Diagonal(u32),
    /// `(m, j)` for types B, D with `ε_m` the maximum and `j` standing for `−j`.
    MaxRow(u32),
}

impl fmt::Display for UpperRightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpperRightPair::General(i, j) => write!(f, "({i},{j})"),
            UpperRightPair::Diagonal(i) => write!(f, "({i},-{i})"),
            UpperRightPair::MaxRow(j) => write!(f, "maxrow({j})"),
        }
    }
}

impl FromStr for UpperRightPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidPair(s.to_string());
        if let Some(inner) = t.strip_prefix("maxrow(").and_then(|r| r.strip_suffix(')')) {
            let j: u32 = inner.parse().map_err(|_| bad())?;
            return if j == 0 {
                Err(bad())
            } else {
                Ok(UpperRightPair::MaxRow(j))
            };
        }
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let i: u32 = a.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        if let Some(nb) = b.strip_prefix('-') {
            let j: u32 = nb.parse().map_err(|_| bad())?;
            if j != i {
                return Err(Error::InvalidPair(format!(
                    "{s}: use maxrow(j) for rows other than -i"
                )));
            }
            return Ok(UpperRightPair::Diagonal(i));
        }
        let j: u32 = b.parse().map_err(|_| bad())?;
        if j == 0 || j == i {
            return Err(bad());
        }
        Ok(UpperRightPair::General(i, j))
    }
}

impl UpperRightPair {
    /// Checks the pair against the order; returns `m` for `MaxRow`.
    pub fn validate(&self, order: &OrderSpec) -> Result<Option<u32>> {
        let sys = order.system;
        match *self {
            UpperRightPair::General(i, j) => {
                if sys != SystemType::A {
                    return Err(Error::InvalidPair(format!(
                        "{self} is an A-type pair, order is {sys}"
                    )));
                }
                if !order.greater(i, j)? {
                    return Err(Error::InvalidPair(format!("{self} needs e{i} above e{j}")));
                }
                Ok(None)
            }
            UpperRightPair::Diagonal(i) => {
                if sys == SystemType::A {
                    return Err(Error::InvalidPair(format!("{self} is not an A-type pair")));
                }
                order.compare(i, i)?;
                Ok(None)
            }
            UpperRightPair::MaxRow(j) => {
                if !matches!(sys, SystemType::B | SystemType::D) {
                    return Err(Error::InvalidPair(format!("{self} needs type B or D")));
                }
                let m = order.max_element().ok_or_else(|| {
                    Error::InvalidPair(format!("{self}: the order has no maximal element"))
                })?;
                order.compare(j, j)?;
                if j == m {
                    return Err(Error::InvalidPair(format!(
                        "{self}: j must differ from the maximum {m}"
                    )));
                }
                Ok(Some(m))
            }
        }
    }

    /// `k′`: `2k` for B/D diagonal pairs, `k` otherwise.
    pub fn k_prime(&self, system: SystemType, k: usize) -> usize {
        match (self, system) {
            (UpperRightPair::Diagonal(_), SystemType::B | SystemType::D) => 2 * k,
            _ => k,
        }
    }
}

/// Row and column indices of `[λ]_p` among `candidates`, each sorted by the
/// order (largest first). Columns are reported by their positive index `j′`.
pub fn region(
    p: &UpperRightPair,
    order: &OrderSpec,
    candidates: &[u32],
) -> Result<(Vec<u32>, Vec<u32>)> {
    let m = p.validate(order)?;
    let sorted = order.sort_desc(candidates)?;
    let at_or_above = |x: u32| -> Vec<u32> {
        sorted
            .iter()
            .copied()
            .filter(|&s| order.compare(s, x).unwrap() != std::cmp::Ordering::Less)
            .collect()
    };
    Ok(match *p {
        UpperRightPair::General(i, j) => {
            let rows = at_or_above(i);
            let cols = sorted
                .iter()
                .copied()
                .filter(|&s| order.compare(s, j).unwrap() != std::cmp::Ordering::Greater)
                .collect();
            (rows, cols)
        }
        UpperRightPair::Diagonal(i) => (at_or_above(i), at_or_above(i)),
        UpperRightPair::MaxRow(j) => {
            let m = m.unwrap();
            let rows = if sorted.contains(&m) { vec![m] } else { vec![] };
            let cols = at_or_above(j).into_iter().filter(|&s| s != m).collect();
            (rows, cols)
        }
    })
}

#[derive(Clone, Debug)]
pub struct IdealGenerators {
    pub generators: Vec<SymPoly>,
    /// `I(p, k) = 0` over the full order.
    pub is_zero_ideal: bool,
}

fn lt(count: Option<usize>, k: usize) -> bool {
    count.is_some_and(|c| c < k)
}

/// Whether `I(p, k)` is the zero ideal.
pub fn is_zero_ideal(p: &UpperRightPair, k: usize, order: &OrderSpec) -> Result<bool> {
    p.validate(order)?;
    Ok(match *p {
        UpperRightPair::General(i, j) => {
            lt(order.count_at_or_above(i)?, k) || lt(order.count_at_or_below(j)?, k)
        }
        UpperRightPair::Diagonal(i) => lt(order.count_at_or_above(i)?, p.k_prime(order.system, k)),
        UpperRightPair::MaxRow(_) => false,
    })
}

/// Generators of `I(p, k)` whose indices lie in `window`.
pub fn ideal_generators(
    p: &UpperRightPair,
    k: usize,
    order: &OrderSpec,
    window: &Window,
) -> Result<IdealGenerators> {
    if k == 0 {
        return Err(Error::InvalidPair("k must be positive".into()));
    }
    if matches!(p, UpperRightPair::MaxRow(_)) && k != 1 {
        return Err(Error::InvalidPair(format!("{p} admits only k = 1")));
    }
    let (rows, cols) = region(p, order, window.labels())?;
    let sys = order.system;
    let mut generators = Vec::new();
    let mut seen: BTreeSet<Vec<(Monomial, Rational)>> = BTreeSet::new();
    let mut push = |g: SymPoly| {
        if g.is_zero() {
            return;
        }
        // Identify generators that agree up to sign.
        let lead = g.terms().iter().next().unwrap().1.clone();
        let norm = g.scale(&lead.recip());
        let key: Vec<_> = norm
            .terms()
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        if seen.insert(key) {
            generators.push(g);
        }
    };
    match (*p, sys) {
        (UpperRightPair::General(..), _) => {
            for i_set in rows.iter().copied().combinations(k) {
                for j_set in cols.iter().copied().combinations(k) {
                    let j_rev: Vec<u32> = j_set.into_iter().rev().collect();
                    push(xi_minor(sys, order, &i_set, &j_rev)?);
                }
            }
        }
        (UpperRightPair::Diagonal(_), SystemType::C) => {
            for i_set in rows.iter().copied().combinations(k) {
                for j_set in cols.iter().copied().combinations(k) {
                    push(xi_minor(sys, order, &i_set, &j_set)?);
                }
            }
        }
        (UpperRightPair::Diagonal(_), _) => {
            for i_set in rows.iter().copied().combinations(2 * k) {
                push(xi_pfaffian(sys, order, &i_set)?);
            }
        }
        (UpperRightPair::MaxRow(_), _) => {
            for &m in &rows {
                for &s in &cols {
                    push(var(Root::sum(m, s)?));
                }
            }
        }
    }
    Ok(IdealGenerators {
        generators,
        is_zero_ideal: is_zero_ideal(p, k, order)?,
    })
}

/// Sign `s` with `ξ_I² = s · det(displayed matrix)`, if either sign works.
pub fn pfaffian_square_sign(system: SystemType, idx: &[u32]) -> Result<Option<i64>> {
    let order = OrderSpec::natural(system);
    let mut sorted = idx.to_vec();
    sorted.sort();
    let xi = xi_pfaffian(system, &order, &sorted)?;
    let sq = &xi * &xi;
    let det = poly_det(&pfaffian_display_matrix(&sorted)?);
    Ok(if sq == det {
        Some(1)
    } else if sq == -&det {
        Some(-1)
    } else {
        None
    })
}

/// Value of `ξ_I^J` when all variables are `1`: a quick structural fingerprint.
pub fn unit_value(p: &SymPoly) -> Rational {
    p.evaluate_with(|_| Ok(Rational::one())).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::IndexStream;

    fn v(r: Root) -> SymPoly {
        SymPoly::var(r)
    }

    #[test]
    fn minor_examples() {
        let o = OrderSpec::natural(SystemType::A);
        assert_eq!(
            xi_minor(SystemType::A, &o, &[1], &[2]).unwrap(),
            v(Root::Diff(1, 2))
        );
        let x = xi_minor(SystemType::A, &o, &[1, 2], &[4, 3]).unwrap();
        let expect = &(&v(Root::Diff(1, 3)) * &v(Root::Diff(2, 4)))
            - &(&v(Root::Diff(1, 4)) * &v(Root::Diff(2, 3)));
        assert_eq!(x, expect);
        let c = OrderSpec::natural(SystemType::C);
        assert_eq!(
            xi_minor(SystemType::C, &c, &[1], &[1]).unwrap(),
            v(Root::Double(1)).scale(&int(2))
        );
        assert!(xi_minor(SystemType::A, &o, &[2, 1], &[4, 3]).is_err());
        assert!(xi_minor(SystemType::A, &o, &[1, 3], &[4, 2]).is_err());
        assert!(xi_minor(SystemType::A, &o, &[1], &[4, 3]).is_err());
    }

    #[test]
    fn pfaffian_examples() {
        let o = OrderSpec::natural(SystemType::D);
        assert_eq!(
            xi_pfaffian(SystemType::D, &o, &[1, 2]).unwrap(),
            v(Root::Sum(1, 2))
        );
        let s = |i, j| v(Root::Sum(i, j));
        let expect = &(&(&s(1, 2) * &s(3, 4)) - &(&s(1, 3) * &s(2, 4))) + &(&s(1, 4) * &s(2, 3));
        assert_eq!(
            xi_pfaffian(SystemType::D, &o, &[1, 2, 3, 4]).unwrap(),
            expect
        );
        assert!(xi_pfaffian(SystemType::D, &o, &[1, 2, 3]).is_err());
        assert!(xi_pfaffian(SystemType::D, &o, &[1, 1]).is_err());
        assert!(xi_pfaffian(SystemType::C, &o, &[1, 2]).is_err());
    }

    #[test]
    fn pfaffian_square_law() {
        for (size, sign) in [(2usize, -1i64), (4, 1), (6, -1)] {
            let idx: Vec<u32> = (1..=size as u32).collect();
            assert_eq!(
                pfaffian_square_sign(SystemType::D, &idx).unwrap(),
                Some(sign)
            );
        }
    }

    #[test]
    fn finite_generator_examples() {
        let c2 = finite_generator(SystemType::C, 2, &Root::Double(2)).unwrap();
        let expect = &(&v(Root::Sum(1, 2)) * &v(Root::Sum(1, 2)))
            - &(&v(Root::Double(1)) * &v(Root::Double(2))).scale(&int(4));
        assert_eq!(c2, expect);
        assert!(matches!(
            finite_generator(SystemType::B, 3, &Root::Short(3)),
            Err(Error::NoFormula(_))
        ));
        assert!(matches!(
            finite_generator(SystemType::D, 4, &Root::Diff(1, 2)),
            Err(Error::NoFormula(_))
        ));
        assert!(matches!(
            finite_generator(SystemType::A, 4, &Root::Diff(1, 2)),
            Err(Error::NotInCascade(_))
        ));
    }

    #[test]
    fn canonical_generator_examples() {
        let o = OrderSpec::interleaved(SystemType::A);
        let g = canonical_generator(&Root::Diff(1, 2), &o).unwrap();
        assert_eq!(g.xi, v(Root::Diff(1, 2)));
        assert_eq!(g.step, 1);
        let g = canonical_generator(&Root::Diff(3, 4), &o).unwrap();
        let expect = &(&v(Root::Diff(1, 4)) * &v(Root::Diff(3, 2)))
            - &(&v(Root::Diff(1, 2)) * &v(Root::Diff(3, 4)));
        assert_eq!(g.xi, expect);
        assert_eq!(g.window.labels(), &[1, 3, 4, 2]);

        let c = OrderSpec::natural(SystemType::C);
        let g = canonical_generator(&Root::Double(2), &c).unwrap();
        assert_eq!(
            g.xi,
            finite_generator(SystemType::C, 2, &Root::Double(2)).unwrap()
        );
        assert!(matches!(
            canonical_generator(&Root::Double(2), &OrderSpec::reverse(SystemType::C)),
            Err(Error::NotInCascade(_))
        ));
        assert!(canonical_generator(&Root::Diff(1, 3), &o).is_err());
    }

    #[test]
    fn m_independence() {
        let o = OrderSpec::interleaved(SystemType::A);
        let beta = Root::Diff(3, 4);
        let g = canonical_generator(&beta, &o).unwrap();
        for extra in [vec![5], vec![6], vec![5, 6, 7]] {
            let mut m: Vec<u32> = g.window.labels().to_vec();
            m.extend(extra);
            let w = Window::new(&o, m).unwrap();
            assert_eq!(canonical_xi_in(&beta, &o, &w).unwrap(), g.xi);
        }
    }

    #[test]
    fn pair_parsing() {
        assert_eq!(
            "(2,3)".parse::<UpperRightPair>().unwrap(),
            UpperRightPair::General(2, 3)
        );
        assert_eq!(
            "( 4, -4 )".parse::<UpperRightPair>().unwrap(),
            UpperRightPair::Diagonal(4)
        );
        assert_eq!(
            "maxrow(5)".parse::<UpperRightPair>().unwrap(),
            UpperRightPair::MaxRow(5)
        );
        for bad in ["(1,1)", "(1,-2)", "(0,2)", "maxrow(0)", "1,2", "(a,b)"] {
            assert!(bad.parse::<UpperRightPair>().is_err(), "{bad}");
        }
        for p in [
            UpperRightPair::General(2, 3),
            UpperRightPair::Diagonal(4),
            UpperRightPair::MaxRow(5),
        ] {
            assert_eq!(p.to_string().parse::<UpperRightPair>().unwrap(), p);
        }
    }

    #[test]
    fn ideal_generator_examples() {
        let o = OrderSpec::natural(SystemType::A);
        let w = Window::standard(4);
        let g = ideal_generators(&UpperRightPair::General(2, 3), 1, &o, &w).unwrap();
        let mut got: Vec<String> = g.generators.iter().map(|p| p.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["e(e1-e3)", "e(e1-e4)", "e(e2-e3)", "e(e2-e4)"]);
        assert!(!g.is_zero_ideal);
        let g = ideal_generators(&UpperRightPair::General(1, 2), 2, &o, &w).unwrap();
        assert!(g.is_zero_ideal);
        assert!(g.generators.is_empty());

        // Under the natural order only e1 lies at or above e1.
        let d = OrderSpec::natural(SystemType::D);
        let g = ideal_generators(&UpperRightPair::Diagonal(1), 1, &d, &w).unwrap();
        assert!(g.is_zero_ideal && g.generators.is_empty());
        let r = OrderSpec::reverse(SystemType::D);
        let g = ideal_generators(&UpperRightPair::Diagonal(1), 1, &r, &w).unwrap();
        assert!(!g.is_zero_ideal);
        let mut got: Vec<String> = g.generators.iter().map(|p| p.to_string()).collect();
        got.sort();
        assert_eq!(got.len(), 6);
        assert!(got.iter().all(|s| s.starts_with("e(e") && s.contains('+')));

        let mx = OrderSpec::new(
            SystemType::D,
            IndexStream::list([1]),
            IndexStream::arith(2, 1),
        )
        .unwrap();
        let g = ideal_generators(&UpperRightPair::MaxRow(3), 1, &mx, &w).unwrap();
        let got: Vec<String> = g.generators.iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["e(e1+e4)", "e(e1+e3)"]);
        assert!(ideal_generators(&UpperRightPair::MaxRow(3), 2, &mx, &w).is_err());
        assert!(ideal_generators(&UpperRightPair::MaxRow(3), 1, &d, &w).is_ok());
        assert!(ideal_generators(&UpperRightPair::MaxRow(3), 1, &r, &w).is_err());
    }

    #[test]
    fn minor_transport() {
        let n = 5;
        let alg = NilAlgebra::standard(SystemType::A, n).unwrap();
        let o = OrderSpec::finite(SystemType::A, n as u32);
        for k in 1..=2usize {
            for rows in (1..=n as u32).combinations(k) {
                for cols_asc in (1..=n as u32).combinations(k) {
                    if cols_asc[0] <= *rows.last().unwrap() {
                        continue;
                    }
                    let cols: Vec<u32> = cols_asc.iter().rev().copied().collect();
                    let xi = xi_minor(SystemType::A, &o, &rows, &cols).unwrap();
                    for a in 1..=n as u32 {
                        for b in a + 1..=n as u32 {
                            if !rows.contains(&b) || cols.contains(&a) || rows.contains(&a) {
                                continue;
                            }
                            let br = v(Root::Diff(a, b)).poisson_bracket(&xi, &alg).unwrap();
                            let mut new_rows: Vec<u32> =
                                rows.iter().map(|&x| if x == b { a } else { x }).collect();
                            new_rows.sort();
                            let target = xi_minor(SystemType::A, &o, &new_rows, &cols).unwrap();
                            assert!(br == target || br == -&target, "{rows:?} {cols:?} {a} {b}");
                        }
                    }
                }
            }
        }
    }
}
