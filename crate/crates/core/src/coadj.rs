//! The skew form `β_λ(x, y) = λ([x, y])`, Vergne polarizations, the coadjoint
//! action (matrix transport and ad-series), and the A-type regular-orbit
//! invariants.
//!
//! Linear forms on a finite algebra are dense vectors `μ[p] = μ(e_p)` in the
//! algebra's basis order.

use num_traits::{One, Zero};

use crate::centgen::finite_generator;
use crate::error::{Error, Result};
use crate::liealg::{AlgebraKind, NilAlgebra};
use crate::linalg::{dot, span_basis, span_contains, Matrix};
use crate::linform::LinearForm;
use crate::rational::Rational;
use crate::rootsys::{Root, SystemType, Window};
use crate::symalg::SymPoly;

/// `μ(e_p)` for every basis element.
pub fn form_values(alg: &NilAlgebra, lambda: &LinearForm) -> Result<Vec<Rational>> {
    alg.basis().iter().map(|r| lambda.value(r)).collect()
}

pub fn form_from_values(alg: &NilAlgebra, mu: &[Rational]) -> LinearForm {
    LinearForm::fin_support(alg.basis().iter().copied().zip(mu.iter().cloned()))
}

/// Gram matrix `B[a][b] = μ([e_a, e_b])`.
pub fn gram(alg: &NilAlgebra, mu: &[Rational]) -> Matrix {
    let d = alg.dim();
    let mut m = Matrix::zeros(d, d);
    for a in 0..d {
        for b in 0..d {
            let mut s = Rational::zero();
            for (g, c) in alg.bracket_basis(a, b) {
                s += c * &mu[*g];
            }
            m[(a, b)] = s;
        }
    }
    m
}

pub fn beta_rank(alg: &NilAlgebra, mu: &[Rational]) -> usize {
    gram(alg, mu).rank()
}

/// Basis of `Ker β_λ`.
pub fn beta_kernel(alg: &NilAlgebra, mu: &[Rational]) -> Vec<Vec<Rational>> {
    gram(alg, mu).kernel()
}

/// A complete flag of ideals, as vectors `v_1, …, v_d` with `n_i = ⟨v_1, …, v_i⟩`.
///
/// Built by refining the lower central series from the deepest nonzero term
/// outward; every subspace between consecutive terms is an ideal.
pub fn ideal_flag(alg: &NilAlgebra) -> Vec<Vec<Rational>> {
    let series = alg.lower_central_series();
    let mut flag: Vec<Vec<Rational>> = Vec::new();
    for term in series.iter().rev() {
        for v in term {
            if !span_contains(&span_basis(&flag, alg.dim()), v) {
                flag.push(v.clone());
            }
        }
    }
    flag
}

#[derive(Clone, Debug)]
pub struct Polarization {
    /// Basis of `p` (row-reduced).
    pub basis: Vec<Vec<Rational>>,
    /// `r_i = Ker(β_λ|_{n_i})` for each flag step.
    pub pieces: Vec<Vec<Vec<Rational>>>,
}

/// Vergne's polarization `p = Σ_i Ker(β_λ|_{n_i})` over [`ideal_flag`].
pub fn vergne_polarization(alg: &NilAlgebra, mu: &[Rational]) -> Polarization {
    let d = alg.dim();
    let b = gram(alg, mu);
    let flag = ideal_flag(alg);
    let mut pieces = Vec::with_capacity(d);
    let mut all = Vec::new();
    for i in 1..=d {
        let f = Matrix::from_rows(flag[..i].to_vec());
        let restricted = f.mul(&b).mul(&f.transpose());
        let ker: Vec<Vec<Rational>> = restricted
            .kernel()
            .into_iter()
            .map(|c| combine(&flag[..i], &c, d))
            .collect();
        all.extend(ker.iter().cloned());
        pieces.push(ker);
    }
    Polarization {
        basis: span_basis(&all, d),
        pieces,
    }
}

fn combine(vectors: &[Vec<Rational>], coeffs: &[Rational], d: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); d];
    for (v, c) in vectors.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

pub fn is_subalgebra(alg: &NilAlgebra, basis: &[Vec<Rational>]) -> bool {
    basis.iter().all(|x| {
        basis
            .iter()
            .all(|y| span_contains(basis, &alg.bracket_dense(x, y)))
    })
}

pub fn is_isotropic(alg: &NilAlgebra, mu: &[Rational], basis: &[Vec<Rational>]) -> bool {
    basis.iter().all(|x| {
        basis
            .iter()
            .all(|y| dot(mu, &alg.bracket_dense(x, y)).is_zero())
    })
}

/// `(exp x).μ = Σ_i μ((−ad x)^i(·))/i!`, truncated once the term vanishes.
pub fn coadjoint_act_series(alg: &NilAlgebra, x: &[Rational], mu: &[Rational]) -> Vec<Rational> {
    let minus_ad = alg.ad(x).scale(&-Rational::one());
    let mut out = mu.to_vec();
    let mut term = Matrix::from_rows(vec![mu.to_vec()]);
    let mut i = 1i64;
    loop {
        term = term
            .mul(&minus_ad)
            .scale(&Rational::new(1.into(), i.into()));
        if term.is_zero() {
            break;
        }
        for (o, t) in out.iter_mut().zip(term.row(0)) {
            *o += t;
        }
        i += 1;
    }
    out
}

/// `exp` of a nilpotent matrix.
pub fn exp_nilpotent(x: &Matrix) -> Matrix {
    let mut out = Matrix::identity(x.nrows());
    let mut term = Matrix::identity(x.nrows());
    let mut i = 1i64;
    loop {
        term = term.mul(x).scale(&Rational::new(1.into(), i.into()));
        if term.is_zero() {
            return out;
        }
        out = out.add(&term);
        i += 1;
    }
}

/// Lower-triangular matrix `M_μ` with `tr(M_μ e_p) = μ(e_p)`.
pub fn dual_matrix(alg: &NilAlgebra, mu: &[Rational]) -> Matrix {
    let mut out: Option<Matrix> = None;
    for (p, c) in mu.iter().enumerate() {
        let e = alg.basis_matrix(p);
        let et = e.transpose();
        let norm = et.mul(&e).trace();
        let term = et.scale(&(c / norm));
        out = Some(match out {
            Some(m) => m.add(&term),
            None => term,
        });
    }
    out.unwrap_or_else(|| {
        let s = crate::liealg::matrix_size(alg.system(), alg.rank());
        Matrix::zeros(s, s)
    })
}

/// `g.μ = (g M_μ g⁻¹)_low` for `g = exp(x)`, read back through the trace pairing.
pub fn coadjoint_act_matrix(alg: &NilAlgebra, x: &[Rational], mu: &[Rational]) -> Vec<Rational> {
    let xm = alg.realize_dense(x);
    let g = exp_nilpotent(&xm);
    let g_inv = exp_nilpotent(&xm.scale(&-Rational::one()));
    let transported = g.mul(&dual_matrix(alg, mu)).mul(&g_inv);
    (0..alg.dim())
        .map(|p| transported.mul(&alg.basis_matrix(p)).trace())
        .collect()
}

/// Action of `exp(x_1) ⋯ exp(x_r)` (rightmost factor applied first).
pub fn coadjoint_act_word(
    alg: &NilAlgebra,
    word: &[Vec<Rational>],
    mu: &[Rational],
) -> Vec<Rational> {
    word.iter()
        .rev()
        .fold(mu.to_vec(), |acc, x| coadjoint_act_series(alg, x, &acc))
}

/// For `hei_n` and `μ(z) = ν(z) ≠ 0`: elements `x_1, …, x_r` with
/// `exp(x_1) ⋯ exp(x_r).μ = ν`.
pub fn heisenberg_reach(
    alg: &NilAlgebra,
    mu: &[Rational],
    target: &[Rational],
) -> Result<Vec<Vec<Rational>>> {
    let AlgebraKind::Heisenberg(n) = *alg.kind() else {
        return Err(Error::UnsupportedFamily(
            "heisenberg_reach needs a Heisenberg algebra".into(),
        ));
    };
    let z = 2 * n;
    if mu[z].is_zero() || mu[z] != target[z] {
        return Err(Error::InvalidLinearForm(
            "reach needs μ(z) = ν(z) ≠ 0".into(),
        ));
    }
    let alpha = &mu[z];
    let mut word = Vec::new();
    for i in 0..n {
        // exp(t x_i) shifts μ(y_i) by −tα; exp(s y_i) shifts μ(x_i) by +sα.
        let t = (&mu[n + i] - &target[n + i]) / alpha;
        let s = (&target[i] - &mu[i]) / alpha;
        let mut x = vec![Rational::zero(); alg.dim()];
        x[i] = t;
        word.push(x);
        let mut y = vec![Rational::zero(); alg.dim()];
        y[n + i] = s;
        word.push(y);
    }
    Ok(word)
}

/// The corner minors `ξ_i`, `1 ≤ i ≤ [n/2]`, of the regular-orbit example,
/// transported to the window.
pub fn invariant_polys(window: &Window) -> Result<Vec<SymPoly>> {
    let n = window.rank();
    SystemType::A.check_rank(n)?;
    (1..=n as u32 / 2)
        .map(|i| {
            let xi = finite_generator(SystemType::A, n, &Root::Diff(i, n as u32 - i + 1))?;
            xi.map_roots(|r| window.from_standard(r))
        })
        .collect()
}

/// `c_i = ξ_i(λ)`.
pub fn orbit_invariants(window: &Window, lambda: &LinearForm) -> Result<Vec<Rational>> {
    invariant_polys(window)?
        .iter()
        .map(|p| p.evaluate(lambda))
        .collect()
}

/// Whether the values `c_i` meet the regularity condition
/// (all nonzero for odd `n`; all but the last for even `n`).
pub fn is_regular(n: usize, c: &[Rational]) -> bool {
    let needed = if n % 2 == 0 {
        c.len().saturating_sub(1)
    } else {
        c.len()
    };
    c[..needed].iter().all(|x| !x.is_zero())
}

/// `ξ_i − c_i` when the orbit of `λ` is regular.
pub fn regular_orbit_ideal(window: &Window, lambda: &LinearForm) -> Result<Option<Vec<SymPoly>>> {
    let polys = invariant_polys(window)?;
    let c: Vec<Rational> = polys
        .iter()
        .map(|p| p.evaluate(lambda))
        .collect::<Result<_>>()?;
    if !is_regular(window.rank(), &c) {
        return Ok(None);
    }
    Ok(Some(
        polys
            .iter()
            .zip(&c)
            .map(|(p, ci)| p - &SymPoly::constant(ci.clone()))
            .collect(),
    ))
}

/// `2((n−2) + (n−4) + …)`.
pub fn regular_orbit_dim(n: usize) -> usize {
    2 * (1..)
        .map(|k| 2 * k)
        .take_while(|&t| t < n)
        .map(|t| n - t)
        .sum::<usize>()
}
