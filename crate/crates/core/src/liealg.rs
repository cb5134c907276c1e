//! Matrix realizations of classical nilradicals, the root-vector basis and
//! the Lie bracket.
//!
//! Structure constants are computed once per `(system, rank)` from sparse
//! matrix commutators and cached. A [`NilAlgebra`] is a view of such a table
//! with the standard labels `1..=n` replaced by the indices of a window, or
//! a bracket-closed subset of it (the Heisenberg algebras).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{int, Rational};
use crate::rootsys::{height, positive_roots, Root, SystemType, Window};

/// Coordinates of an element of `n` in the root-vector basis.
pub type LieVector = BTreeMap<Root, Rational>;

/// Sparse matrix keyed by `(row label, column label)` with labels
/// `1..n, 0, -n..-1`.
pub type SparseMatrix = BTreeMap<(i64, i64), Rational>;

/// Sparse coordinates over basis positions, sorted by position.
pub type Sparse = Vec<(usize, Rational)>;

/// Side length of the defining representation.
pub fn matrix_size(system: SystemType, n: usize) -> usize {
    match system {
        SystemType::A => n,
        SystemType::B => 2 * n + 1,
        SystemType::C | SystemType::D => 2 * n,
    }
}

/// Position of a row/column label in the dense realization.
pub fn label_position(system: SystemType, n: usize, label: i64) -> usize {
    let size = matrix_size(system, n) as i64;
    match label {
        l if l > 0 => (l - 1) as usize,
        0 => n,
        l => (size + l) as usize,
    }
}

fn put(m: &mut SparseMatrix, r: i64, c: i64, v: i64) {
    m.insert((r, c), int(v));
}

/// The root vector `e_α` of the standard rank-`n` realization.
///
/// The short root of `B_n` uses `e_{i,0} − e_{0,−i}` without the factor `√2`
/// so that all arithmetic stays rational.
pub fn realize(root: &Root, system: SystemType, n: usize) -> Result<SparseMatrix> {
    system.check_rank(n)?;
    let ok = root.allowed_in(system)
        && root.indices().iter().all(|&i| i as usize <= n)
        && !matches!(root, Root::Diff(i, j) if i > j);
    if !ok {
        return Err(Error::NotPositive {
            root: *root,
            context: format!("{system}{n}"),
        });
    }
    let mut m = SparseMatrix::new();
    match (*root, system) {
        (Root::Diff(i, j), SystemType::A) => put(&mut m, i as i64, j as i64, 1),
        (Root::Diff(i, j), _) => {
            put(&mut m, i as i64, j as i64, 1);
            put(&mut m, -(j as i64), -(i as i64), -1);
        }
        (Root::Sum(i, j), SystemType::C) => {
            put(&mut m, i as i64, -(j as i64), 1);
            put(&mut m, j as i64, -(i as i64), 1);
        }
        (Root::Sum(i, j), _) => {
            put(&mut m, i as i64, -(j as i64), 1);
            put(&mut m, j as i64, -(i as i64), -1);
        }
        (Root::Double(i), _) => put(&mut m, i as i64, -(i as i64), 1),
        (Root::Short(i), _) => {
            put(&mut m, i as i64, 0, 1);
            put(&mut m, 0, -(i as i64), -1);
        }
    }
    Ok(m)
}

pub fn to_dense(m: &SparseMatrix, system: SystemType, n: usize) -> Matrix {
    let size = matrix_size(system, n);
    let mut d = Matrix::zeros(size, size);
    for ((r, c), v) in m {
        d[(label_position(system, n, *r), label_position(system, n, *c))] = v.clone();
    }
    d
}

fn sparse_mul(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
    let mut out = SparseMatrix::new();
    for ((r, k), x) in a {
        for ((k2, c), y) in b.range((*k, i64::MIN)..=(*k, i64::MAX)) {
            debug_assert_eq!(k, k2);
            *out.entry((*r, *c)).or_insert_with(Rational::zero) += x * y;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn commutator(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
    let mut out = sparse_mul(a, b);
    for (k, v) in sparse_mul(b, a) {
        *out.entry(k).or_insert_with(Rational::zero) -= v;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Cached data of a standard rank-`n` nilradical.
#[derive(Debug)]
struct StdTable {
    roots: Vec<Root>,
    brackets: Arc<Vec<Vec<Sparse>>>,
}

fn build_std_table(system: SystemType, n: usize) -> Result<StdTable> {
    let mut roots = positive_roots(system, n)?;
    roots.sort_by_key(|r| (height(system, n, r), *r));
    let mats: Vec<SparseMatrix> = roots
        .iter()
        .map(|r| realize(r, system, n))
        .collect::<Result<_>>()?;
    let mut owner: HashMap<(i64, i64), usize> = HashMap::new();
    for (p, m) in mats.iter().enumerate() {
        for k in m.keys() {
            owner.insert(*k, p);
        }
    }
    let d = roots.len();
    let mut brackets = vec![vec![Sparse::new(); d]; d];
    for a in 0..d {
        for b in a + 1..d {
            let mut residue = commutator(&mats[a], &mats[b]);
            let mut coords: BTreeMap<usize, Rational> = BTreeMap::new();
            while let Some((&key, val)) = residue.iter().next() {
                let Some(&g) = owner.get(&key) else {
                    return Err(Error::RealizationResidue(format!(
                        "[{}, {}] has entry {key:?} outside the root vectors",
                        roots[a], roots[b]
                    )));
                };
                let coef = val / &mats[g][&key];
                for (k, v) in &mats[g] {
                    *residue.entry(*k).or_insert_with(Rational::zero) -= &coef * v;
                }
                residue.retain(|_, v| !v.is_zero());
                *coords.entry(g).or_insert_with(Rational::zero) += coef;
            }
            coords.retain(|_, v| !v.is_zero());
            let neg: Sparse = coords.iter().map(|(k, v)| (*k, -v.clone())).collect();
            brackets[a][b] = coords.into_iter().collect();
            brackets[b][a] = neg;
        }
    }
    Ok(StdTable {
        roots,
        brackets: Arc::new(brackets),
    })
}

fn std_table(system: SystemType, n: usize) -> Result<Arc<StdTable>> {
    static CACHE: OnceLock<Mutex<HashMap<(SystemType, usize), Arc<StdTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(system, n)) {
        return Ok(t.clone());
    }
    let t = Arc::new(build_std_table(system, n)?);
    Ok(cache
        .lock()
        .unwrap()
        .entry((system, n))
        .or_insert(t)
        .clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Nilradical,
    Heisenberg(usize),
}

/// A finite-dimensional nilpotent Lie algebra with basis indexed by roots.
///
/// The basis is kept in PBW order (height ascending, ties by root order
/// for nilradicals; `x_1..x_n, y_1..y_n, z` for Heisenberg algebras).
#[derive(Clone, Debug)]
pub struct NilAlgebra {
    system: SystemType,
    rank: usize,
    kind: AlgebraKind,
    basis: Vec<Root>,
    std_roots: Vec<Root>,
    pos: HashMap<Root, usize>,
    brackets: Arc<Vec<Vec<Sparse>>>,
}

impl NilAlgebra {
    /// The nilradical `n_M` for a window `M`, labelled by the window's indices.
    pub fn window(system: SystemType, window: &Window) -> Result<Self> {
        let n = window.rank();
        let table = std_table(system, n)?;
        let basis: Vec<Root> = table
            .roots
            .iter()
            .map(|r| window.from_standard(r))
            .collect::<Result<_>>()?;
        let brackets = table.brackets.clone();
        Ok(Self::assemble(
            system,
            n,
            AlgebraKind::Nilradical,
            basis,
            table.roots.clone(),
            brackets,
        ))
    }

    pub fn standard(system: SystemType, n: usize) -> Result<Self> {
        Self::window(system, &Window::standard(n))
    }

    /// `hei_n` realized inside `A` on indices `1..=n+2`:
    /// `x_i = ε_1 − ε_{i+1}`, `y_i = ε_{i+1} − ε_{n+2}`, `z = ε_1 − ε_{n+2}`.
    pub fn heisenberg(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::RankTooSmall {
                system: SystemType::A,
                rank: 0,
                min: 1,
            });
        }
        let top = n as u32 + 2;
        let mut basis: Vec<Root> = (1..=n as u32).map(|i| Root::Diff(1, i + 1)).collect();
        basis.extend((1..=n as u32).map(|i| Root::Diff(i + 1, top)));
        basis.push(Root::Diff(1, top));
        let table = std_table(SystemType::A, n + 2)?;
        let std_pos: HashMap<Root, usize> = table
            .roots
            .iter()
            .enumerate()
            .map(|(p, r)| (*r, p))
            .collect();
        let local: HashMap<usize, usize> = basis
            .iter()
            .enumerate()
            .map(|(p, r)| (std_pos[r], p))
            .collect();
        let mut brackets = vec![vec![Sparse::new(); basis.len()]; basis.len()];
        for (a, ra) in basis.iter().enumerate() {
            for (b, rb) in basis.iter().enumerate() {
                let mut v: Sparse = Vec::new();
                for (g, c) in &table.brackets[std_pos[ra]][std_pos[rb]] {
                    let Some(&lg) = local.get(g) else {
                        return Err(Error::RealizationResidue(format!(
                            "[{ra}, {rb}] leaves hei_{n}"
                        )));
                    };
                    v.push((lg, c.clone()));
                }
                v.sort_by_key(|e| e.0);
                brackets[a][b] = v;
            }
        }
        Ok(Self::assemble(
            SystemType::A,
            n + 2,
            AlgebraKind::Heisenberg(n),
            basis.clone(),
            basis,
            Arc::new(brackets),
        ))
    }

    fn assemble(
        system: SystemType,
        rank: usize,
        kind: AlgebraKind,
        basis: Vec<Root>,
        std_roots: Vec<Root>,
        brackets: Arc<Vec<Vec<Sparse>>>,
    ) -> Self {
        let pos = basis.iter().enumerate().map(|(p, r)| (*r, p)).collect();
        NilAlgebra {
            system,
            rank,
            kind,
            basis,
            std_roots,
            pos,
            brackets,
        }
    }

    pub fn system(&self) -> SystemType {
        self.system
    }

    /// Rank of the ambient standard realization.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Root] {
        &self.basis
    }

    pub fn position(&self, root: &Root) -> Option<usize> {
        self.pos.get(root).copied()
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.pos.contains_key(root)
    }

    pub fn require(&self, root: &Root) -> Result<usize> {
        self.position(root)
            .ok_or(Error::VariableOutsideAlgebra(*root))
    }

    /// Display name of a basis element (`x1`, `y1`, `z` for Heisenberg algebras).
    pub fn name(&self, p: usize) -> String {
        match self.kind {
            AlgebraKind::Heisenberg(n) if p < n => format!("x{}", p + 1),
            AlgebraKind::Heisenberg(n) if p < 2 * n => format!("y{}", p - n + 1),
            AlgebraKind::Heisenberg(_) => "z".into(),
            AlgebraKind::Nilradical => self.basis[p].to_string(),
        }
    }

    /// `[e_a, e_b]` by basis positions.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &Sparse {
        &self.brackets[a][b]
    }

    pub fn bracket_dense(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let c = xa * yb;
                for (g, v) in &self.brackets[a][b] {
                    out[*g] += &c * v;
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &LieVector, y: &LieVector) -> Result<LieVector> {
        Ok(self.from_dense(&self.bracket_dense(&self.to_dense(x)?, &self.to_dense(y)?)))
    }

    pub fn to_dense(&self, x: &LieVector) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (r, c) in x {
            v[self.require(r)?] += c;
        }
        Ok(v)
    }

    pub fn from_dense(&self, v: &[Rational]) -> LieVector {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (self.basis[p], c.clone()))
            .collect()
    }

    pub fn unit(&self, p: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[p] = Rational::one();
        v
    }

    /// Matrix of `ad x` in the basis (column `b` holds `[x, e_b]`).
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for b in 0..d {
                for (g, v) in &self.brackets[a][b] {
                    m[(*g, b)] += xa * v;
                }
            }
        }
        m
    }

    /// Dense matrix of a basis element in the ambient realization.
    pub fn basis_matrix(&self, p: usize) -> Matrix {
        let m = realize(&self.std_roots[p], self.system, self.rank).expect("basis roots are valid");
        to_dense(&m, self.system, self.rank)
    }

    /// Dense matrix of `x` in the ambient realization.
    pub fn realize_dense(&self, x: &[Rational]) -> Matrix {
        let size = matrix_size(self.system, self.rank);
        let mut out = Matrix::zeros(size, size);
        for (p, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.basis_matrix(p).scale(c));
            }
        }
        out
    }

    /// Lower central series `n ⊇ [n,n] ⊇ …` down to `0`, as row-reduced bases.
    pub fn lower_central_series(&self) -> Vec<Vec<Vec<Rational>>> {
        let d = self.dim();
        let mut series = vec![(0..d).map(|p| self.unit(p)).collect::<Vec<_>>()];
        loop {
            let last = series.last().unwrap();
            if last.is_empty() {
                break;
            }
            let mut gens = Vec::new();
            for p in 0..d {
                for v in last {
                    let w = self.bracket_dense(&self.unit(p), v);
                    if w.iter().any(|c| !c.is_zero()) {
                        gens.push(w);
                    }
                }
            }
            let next = crate::linalg::span_basis(&gens, d);
            if next.len() == last.len() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Structure constants as a root-keyed table.
    pub fn structure_constants(&self) -> BTreeMap<(Root, Root), LieVector> {
        let mut out = BTreeMap::new();
        for a in 0..self.dim() {
            for b in 0..self.dim() {
                let v: LieVector = self.brackets[a][b]
                    .iter()
                    .map(|(g, c)| (self.basis[*g], c.clone()))
                    .collect();
                out.insert((self.basis[a], self.basis[b]), v);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{strongly_orthogonal, OrderSpec};

    fn e(r: Root) -> LieVector {
        [(r, Rational::one())].into()
    }

    #[test]
    fn realize_examples() {
        let m = realize(&Root::Diff(1, 2), SystemType::A, 3).unwrap();
        assert_eq!(m, [((1, 2), int(1))].into());
        let m = realize(&Root::Sum(1, 2), SystemType::D, 2).unwrap();
        assert_eq!(m, [((1, -2), int(1)), ((2, -1), int(-1))].into());
        let m = realize(&Root::Double(1), SystemType::C, 2).unwrap();
        assert_eq!(m, [((1, -1), int(1))].into());
        assert!(realize(&Root::Double(1), SystemType::D, 2).is_err());
        assert!(realize(&Root::Diff(2, 1), SystemType::A, 3).is_err());
        assert!(realize(&Root::Diff(1, 4), SystemType::A, 3).is_err());
    }

    fn form(system: SystemType, n: usize) -> Matrix {
        let size = matrix_size(system, n);
        let mut j = Matrix::zeros(size, size);
        for l in 1..=n as i64 {
            let (a, b) = (label_position(system, n, l), label_position(system, n, -l));
            let sign = if system == SystemType::C { -1 } else { 1 };
            j[(a, b)] = int(1);
            j[(b, a)] = int(sign);
        }
        if system == SystemType::B {
            j[(n, n)] = int(1);
        }
        j
    }

    #[test]
    fn realizations_are_upper_triangular_and_preserve_the_form() {
        for system in [SystemType::B, SystemType::C, SystemType::D] {
            for n in 2..=4 {
                let j = form(system, n);
                for r in positive_roots(system, n).unwrap() {
                    let x = to_dense(&realize(&r, system, n).unwrap(), system, n);
                    for a in 0..x.nrows() {
                        for b in 0..=a {
                            assert!(x[(a, b)].is_zero(), "{r} not strictly upper");
                        }
                    }
                    let lhs = x.transpose().mul(&j).add(&j.mul(&x));
                    assert!(lhs.is_zero(), "{system}{n} {r}");
                }
            }
        }
    }

    #[test]
    fn bracket_examples() {
        let a = NilAlgebra::standard(SystemType::A, 3).unwrap();
        let v = a
            .bracket(&e(Root::Diff(1, 2)), &e(Root::Diff(2, 3)))
            .unwrap();
        assert_eq!(v, e(Root::Diff(1, 3)));
        let x = e(Root::Diff(1, 3));
        assert!(a.bracket(&x, &x).unwrap().is_empty());
        let c = NilAlgebra::standard(SystemType::C, 2).unwrap();
        let v = c
            .bracket(&e(Root::Diff(1, 2)), &e(Root::Sum(1, 2)))
            .unwrap();
        assert_eq!(v, [(Root::Double(1), int(2))].into());
        let h = NilAlgebra::heisenberg(1).unwrap();
        assert_eq!(
            h.basis(),
            &[Root::Diff(1, 2), Root::Diff(2, 3), Root::Diff(1, 3)]
        );
        assert_eq!(h.bracket_basis(0, 1), &vec![(2, int(1))]);
    }

    #[test]
    fn brackets_vanish_off_root_sums() {
        for system in SystemType::ALL {
            for n in system.min_rank().max(2)..=4 {
                let alg = NilAlgebra::standard(system, n).unwrap();
                for (a, ra) in alg.basis().iter().enumerate() {
                    for (b, rb) in alg.basis().iter().enumerate() {
                        let br = alg.bracket_basis(a, b);
                        let mut sum = ra.vector();
                        for (k, c) in rb.vector() {
                            *sum.entry(k).or_insert(0) += c;
                        }
                        sum.retain(|_, c| *c != 0);
                        match br.as_slice() {
                            [] => {}
                            [(g, _)] => assert_eq!(alg.basis()[*g].vector(), sum),
                            _ => panic!("bracket of root vectors has several terms"),
                        }
                        if strongly_orthogonal(system, ra, rb) {
                            assert!(br.is_empty());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn jacobi_identity() {
        for system in SystemType::ALL {
            for n in system.min_rank()..=4 {
                let alg = NilAlgebra::standard(system, n).unwrap();
                let d = alg.dim();
                for a in 0..d {
                    for b in 0..d {
                        for c in 0..d {
                            let (ea, eb, ec) = (alg.unit(a), alg.unit(b), alg.unit(c));
                            let t1 = alg.bracket_dense(&alg.bracket_dense(&ea, &eb), &ec);
                            let t2 = alg.bracket_dense(&alg.bracket_dense(&eb, &ec), &ea);
                            let t3 = alg.bracket_dense(&alg.bracket_dense(&ec, &ea), &eb);
                            for g in 0..d {
                                assert!((&t1[g] + &t2[g] + &t3[g]).is_zero(), "{system}{n}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn window_stability() {
        let order = OrderSpec::interleaved(SystemType::C);
        let small = Window::new(&order, [1, 2, 3]).unwrap();
        let big = Window::new(&order, [1, 2, 3, 4, 5, 6]).unwrap();
        for system in SystemType::ALL {
            let s = NilAlgebra::window(system, &small).unwrap();
            let b = NilAlgebra::window(system, &big).unwrap();
            for ((ra, rb), v) in s.structure_constants() {
                let w = b.bracket(&e(ra), &e(rb)).unwrap();
                assert_eq!(v, w, "{system} [{ra}, {rb}]");
            }
        }
    }

    #[test]
    fn lower_central_series_terminates() {
        for system in SystemType::ALL {
            let alg = NilAlgebra::standard(system, 4).unwrap();
            let lcs = alg.lower_central_series();
            assert!(lcs.last().unwrap().is_empty());
        }
        let h = NilAlgebra::heisenberg(2).unwrap();
        let lcs = h.lower_central_series();
        assert_eq!(lcs.iter().map(Vec::len).collect::<Vec<_>>(), vec![5, 1, 0]);
    }

    #[test]
    fn realization_matches_bracket() {
        let alg = NilAlgebra::standard(SystemType::B, 3).unwrap();
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let (x, y) = (alg.basis_matrix(a), alg.basis_matrix(b));
                let comm = x.mul(&y).add(&y.mul(&x).scale(&int(-1)));
                let br = alg.realize_dense(&alg.bracket_dense(&alg.unit(a), &alg.unit(b)));
                assert_eq!(comm, br);
            }
        }
    }
}
