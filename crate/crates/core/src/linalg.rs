//! Exact Gaussian elimination and the primitives built on it.

use crate::error::{ForgeError, Result};
use crate::matrix::{unit, vec_is_zero, Matrix};
use crate::scalar::Scalar;

/// Reduced row echelon form of `m`, with the pivot column of each nonzero row.
pub fn rref<S: Scalar>(m: &Matrix<S>) -> (Matrix<S>, Vec<usize>) {
    let mut rows = m.to_rows();
    let pivots = rref_rows(&mut rows, m.cols());
    rows.truncate(pivots.len());
    let r = Matrix::from_flat(pivots.len(), m.cols(), rows.into_iter().flatten().collect());
    (r, pivots)
}

/// In-place elimination on a list of rows of width `cols`. On return the
/// first `pivots.len()` rows are the reduced nonzero rows.
fn rref_rows<S: Scalar>(rows: &mut [Vec<S>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        for x in rows[r][c..].iter_mut() {
            if !x.is_zero() {
                *x *= inv.clone();
            }
        }
        let pivot_row = rows[r].clone();
        let support: Vec<usize> = (c..cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] -= f.clone() * pivot_row[j].clone();
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    rref(m).1.len()
}

/// Columns form a basis of the null space, one per free variable in
/// increasing order.
pub fn kernel_basis<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    Subspace::kernel(m).basis
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse<S: Scalar>(m: &Matrix<S>) -> Option<Matrix<S>> {
    let n = m.rows();
    if n != m.cols() {
        return None;
    }
    let (r, pivots) = rref(&m.hstack(&Matrix::identity(n)));
    if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
}

/// A subspace of `S^ambient` with a basis adapted to a set of coordinate
/// positions: restricted to `positions`, the basis is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<S: Scalar> {
    pub ambient: usize,
    /// `ambient × dim`, columns are basis vectors.
    pub basis: Matrix<S>,
    pub positions: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(ambient, 0), positions: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), positions: (0..ambient).collect() }
    }

    /// Span of the columns of `vectors`.
    pub fn span(vectors: &Matrix<S>) -> Self {
        let ambient = vectors.rows();
        let (r, pivots) = rref(&vectors.transpose());
        Subspace { ambient, basis: r.transpose(), positions: pivots }
    }

    pub fn span_of(ambient: usize, vectors: &[Vec<S>]) -> Self {
        Self::span(&Matrix::from_columns(ambient, vectors))
    }

    /// Null space of `m`.
    pub fn kernel(m: &Matrix<S>) -> Self {
        let n = m.cols();
        let (r, pivots) = rref(m);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(n, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis[(f, k)] = S::one();
            for (i, &p) in pivots.iter().enumerate() {
                let x = &r[(i, f)];
                if !x.is_zero() {
                    basis[(p, k)] = -x.clone();
                }
            }
        }
        Subspace { ambient: n, basis, positions: free }
    }

    pub fn dim(&self) -> usize {
        self.positions.len()
    }

    pub fn vector(&self, k: usize) -> Vec<S> {
        self.basis.column(k)
    }

    pub fn vectors(&self) -> Vec<Vec<S>> {
        self.basis.columns()
    }

    /// Coordinates of `v` in the adapted basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        assert_eq!(v.len(), self.ambient);
        let c: Vec<S> = self.positions.iter().map(|&p| v[p].clone()).collect();
        (self.basis.apply(&c) == v).then_some(c)
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `dim × ambient` coordinate extraction; exact only on the subspace.
    pub fn coordinate_map(&self) -> Matrix<S> {
        let mut m = Matrix::zeros(self.dim(), self.ambient);
        for (k, &p) in self.positions.iter().enumerate() {
            m[(k, p)] = S::one();
        }
        m
    }

    pub fn contains_subspace(&self, other: &Subspace<S>) -> bool {
        other.vectors().iter().all(|v| self.contains(v))
    }

    pub fn intersect(&self, other: &Subspace<S>) -> Subspace<S> {
        assert_eq!(self.ambient, other.ambient);
        let stacked = self.basis.hstack(&other.basis.scale(&-S::one()));
        let k = kernel_basis(&stacked);
        let top = Matrix::from_fn(self.dim(), k.cols(), |i, j| k[(i, j)].clone());
        Subspace::span(&self.basis.mul(&top))
    }
}

/// A quotient `S^ambient / R` with a projection and a section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient<S: Scalar> {
    pub ambient: usize,
    /// `dim × ambient`.
    pub proj: Matrix<S>,
    /// `ambient × dim`; `proj · sect = id`.
    pub sect: Matrix<S>,
}

impl<S: Scalar> Quotient<S> {
    pub fn dim(&self) -> usize {
        self.proj.rows()
    }

    pub fn identity(n: usize) -> Self {
        Quotient { ambient: n, proj: Matrix::identity(n), sect: Matrix::identity(n) }
    }
}

/// Quotient of `S^ambient` by the column span of `relations`. Quotient
/// coordinates are the non-pivot positions of the reduced relation rows.
pub fn quotient_space<S: Scalar>(ambient: usize, relations: &Matrix<S>) -> Quotient<S> {
    assert_eq!(relations.rows(), ambient, "relations must live in the ambient space");
    quotient_from_rows(ambient, relations.transpose().to_rows())
}

pub(crate) fn quotient_from_rows<S: Scalar>(ambient: usize, mut rows: Vec<Vec<S>>) -> Quotient<S> {
    let pivots = rref_rows(&mut rows, ambient);
    let mut is_pivot = vec![None; ambient];
    for (k, &p) in pivots.iter().enumerate() {
        is_pivot[p] = Some(k);
    }
    let free: Vec<usize> = (0..ambient).filter(|&c| is_pivot[c].is_none()).collect();
    let q = free.len();
    let mut proj = Matrix::zeros(q, ambient);
    let mut sect = Matrix::zeros(ambient, q);
    for (j, &f) in free.iter().enumerate() {
        proj[(j, f)] = S::one();
        sect[(f, j)] = S::one();
    }
    for (k, &p) in pivots.iter().enumerate() {
        for (j, &f) in free.iter().enumerate() {
            let x = &rows[k][f];
            if !x.is_zero() {
                proj[(j, p)] = -x.clone();
            }
        }
    }
    Quotient { ambient, proj, sect }
}

/// Outcome of an affine feasibility problem with its rank certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility<S: Scalar> {
    Feasible(Vec<S>),
    /// `rank < augmented_rank` proves inconsistency.
    Infeasible { rank: usize, augmented_rank: usize },
}

impl<S: Scalar> Feasibility<S> {
    pub fn solution(self) -> Option<Vec<S>> {
        match self {
            Feasibility::Feasible(x) => Some(x),
            Feasibility::Infeasible { .. } => None,
        }
    }
}

/// Stacked system `A x = b`, kept as the reduced row echelon form of the
/// augmented matrix `[A | b]` as equations arrive.
#[derive(Clone, Debug)]
pub struct AffineSystem<S: Scalar> {
    unknowns: usize,
    equations: usize,
    /// Reduced augmented rows, each with its pivot column and support.
    reduced: Vec<ReducedRow<S>>,
    /// Index into `reduced` of the row with a given pivot column.
    pivot_row: Vec<Option<usize>>,
}

#[derive(Clone, Debug)]
struct ReducedRow<S> {
    pivot: usize,
    entries: Vec<S>,
    support: Vec<usize>,
}

impl<S: Scalar> ReducedRow<S> {
    fn new(pivot: usize, entries: Vec<S>) -> Self {
        let support = (pivot..entries.len()).filter(|&j| !entries[j].is_zero()).collect();
        ReducedRow { pivot, entries, support }
    }
}

impl<S: Scalar> AffineSystem<S> {
    pub fn new(unknowns: usize) -> Self {
        AffineSystem { unknowns, equations: 0, reduced: Vec::new(), pivot_row: vec![None; unknowns + 1] }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    /// Number of nonzero equations pushed so far.
    pub fn equations(&self) -> usize {
        self.equations
    }

    /// Adds `a x = b`.
    pub fn push(&mut self, a: &Matrix<S>, b: &[S]) -> Result<()> {
        if a.cols() != self.unknowns || a.rows() != b.len() {
            return Err(ForgeError::Dimension(format!(
                "constraint {}x{} with target of length {} against {} unknowns",
                a.rows(),
                a.cols(),
                b.len(),
                self.unknowns
            )));
        }
        let mut scratch = vec![S::zero(); self.unknowns + 1];
        for i in 0..a.rows() {
            for (x, v) in scratch.iter_mut().zip(a.row(i)) {
                *x = v.clone();
            }
            scratch[self.unknowns] = b[i].clone();
            self.insert(&mut scratch);
        }
        Ok(())
    }

    /// Reduces an augmented row against the stored basis and keeps what is
    /// left. `row` is left zeroed.
    fn insert(&mut self, row: &mut [S]) {
        if vec_is_zero(row) {
            return;
        }
        self.equations += 1;
        for r in &self.reduced {
            let f = row[r.pivot].clone();
            if f.is_zero() {
                continue;
            }
            for &j in &r.support {
                row[j] -= f.clone() * r.entries[j].clone();
            }
        }
        let Some(c) = row.iter().position(|x| !x.is_zero()) else {
            return;
        };
        let inv = row[c].inverse().expect("nonzero pivot");
        let mut entries = vec![S::zero(); row.len()];
        for (e, x) in entries[c..].iter_mut().zip(row[c..].iter_mut()) {
            if !x.is_zero() {
                *e = std::mem::replace(x, S::zero()) * inv.clone();
            }
        }
        let new = ReducedRow::new(c, entries);
        for r in &mut self.reduced {
            let f = r.entries[c].clone();
            if f.is_zero() {
                continue;
            }
            for &j in &new.support {
                r.entries[j] -= f.clone() * new.entries[j].clone();
            }
            *r = ReducedRow::new(r.pivot, std::mem::take(&mut r.entries));
        }
        self.pivot_row[c] = Some(self.reduced.len());
        self.reduced.push(new);
    }

    /// The stored rows in pivot order.
    fn sorted(&self) -> impl Iterator<Item = &ReducedRow<S>> {
        self.pivot_row.iter().flatten().map(|&i| &self.reduced[i])
    }

    /// Adds the constraint `f(x) = 0` for an affine `f`, discovered by
    /// evaluating `f` at `0` and at every unit vector.
    pub fn push_affine(&mut self, f: impl Fn(&[S]) -> Vec<S>) {
        let (a, b) = probe(self.unknowns, f);
        self.push(&a, &b).expect("probe produces consistent shapes");
    }

    /// Like [`push_affine`](Self::push_affine) with the unknown reshaped to a
    /// `rows × cols` matrix (row-major) and a matrix-valued residual.
    pub fn push_matrix_affine(&mut self, rows: usize, cols: usize, f: impl Fn(&Matrix<S>) -> Matrix<S>) {
        assert_eq!(rows * cols, self.unknowns);
        self.push_affine(|x| f(&Matrix::from_flat(rows, cols, x.to_vec())).to_vec());
    }

    /// Adds `Σ terms(X) + constant = 0` for a `rows × cols` unknown `X`
    /// (row-major), assembling the coefficients from the sparsity of each
    /// term instead of probing.
    pub fn push_terms(&mut self, rows: usize, cols: usize, terms: &[Term<'_, S>], constant: Option<&Matrix<S>>) {
        assert_eq!(rows * cols, self.unknowns);
        let Some(first) = terms.first() else { return };
        let (out_r, out_c) = first.output_shape(rows, cols);
        let mut entries: Vec<Vec<(usize, S)>> = vec![Vec::new(); out_r * out_c];
        for t in terms {
            assert_eq!(t.output_shape(rows, cols), (out_r, out_c), "terms disagree on the residual shape");
            t.accumulate(rows, cols, out_c, &mut entries);
        }
        if let Some(c) = constant {
            assert_eq!(c.shape(), (out_r, out_c), "constant has the wrong shape");
        }
        let mut scratch = vec![S::zero(); self.unknowns + 1];
        for (k, list) in entries.into_iter().enumerate() {
            for (j, v) in list {
                scratch[j] += v;
            }
            if let Some(c) = constant {
                scratch[self.unknowns] = -c[(k / out_c, k % out_c)].clone();
            }
            self.insert(&mut scratch);
        }
    }

    /// Coefficient rows of the reduced system (an echelon basis of the
    /// row space of `A`, possibly with a zero row from an inconsistency).
    pub fn matrix(&self) -> Matrix<S> {
        let n = self.unknowns;
        let rows: Vec<S> = self.sorted().flat_map(|r| r.entries[..n].iter().cloned()).collect();
        Matrix::from_flat(self.reduced.len(), n, rows)
    }

    /// Right-hand sides matching [`matrix`](Self::matrix).
    pub fn rhs(&self) -> Vec<S> {
        self.sorted().map(|r| r.entries[self.unknowns].clone()).collect()
    }

    /// Echelon-minimal solution (free variables set to zero) or a rank
    /// certificate of infeasibility.
    pub fn solve(&self) -> Feasibility<S> {
        let n = self.unknowns;
        let rank = self.reduced.len();
        if self.pivot_row[n].is_some() {
            return Feasibility::Infeasible { rank: rank - 1, augmented_rank: rank };
        }
        let mut x = vec![S::zero(); n];
        for r in &self.reduced {
            x[r.pivot] = r.entries[n].clone();
        }
        Feasibility::Feasible(x)
    }

    /// Solution space of the homogeneous part.
    pub fn kernel(&self) -> Subspace<S> {
        Subspace::kernel(&self.matrix())
    }

    /// Residual check of a candidate.
    pub fn satisfied_by(&self, x: &[S]) -> bool {
        let n = self.unknowns;
        self.reduced.iter().all(|r| {
            let mut s = S::zero();
            for &j in r.support.iter().filter(|&&j| j < n) {
                if !x[j].is_zero() {
                    s += r.entries[j].clone() * x[j].clone();
                }
            }
            s == r.entries[n]
        })
    }
}

/// How the unknown enters a [`Term`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Embed {
    /// `X`
    Plain,
    /// `X ⊗ I_k`
    KronIdentity(usize),
    /// `I_k ⊗ X`
    IdentityKron(usize),
}

/// A linear expression `±L · E(X) · R` in a matrix unknown; a missing `L`
/// or `R` stands for an identity.
#[derive(Clone, Copy, Debug)]
pub struct Term<'a, S: Scalar> {
    pub left: Option<&'a Matrix<S>>,
    pub embed: Embed,
    pub right: Option<&'a Matrix<S>>,
    pub negate: bool,
}

impl<'a, S: Scalar> Term<'a, S> {
    pub fn new(left: Option<&'a Matrix<S>>, embed: Embed, right: Option<&'a Matrix<S>>) -> Self {
        Term { left, embed, right, negate: false }
    }

    /// `L · X`
    pub fn left(l: &'a Matrix<S>) -> Self {
        Term::new(Some(l), Embed::Plain, None)
    }

    /// `X · R`
    pub fn right(r: &'a Matrix<S>) -> Self {
        Term::new(None, Embed::Plain, Some(r))
    }

    pub fn neg(mut self) -> Self {
        self.negate = !self.negate;
        self
    }

    fn embedded_shape(&self, rows: usize, cols: usize) -> (usize, usize) {
        match self.embed {
            Embed::Plain => (rows, cols),
            Embed::KronIdentity(k) | Embed::IdentityKron(k) => (rows * k, cols * k),
        }
    }

    fn output_shape(&self, rows: usize, cols: usize) -> (usize, usize) {
        let (er, ec) = self.embedded_shape(rows, cols);
        if let Some(l) = self.left {
            assert_eq!(l.cols(), er, "left factor does not match the unknown");
        }
        if let Some(r) = self.right {
            assert_eq!(r.rows(), ec, "right factor does not match the unknown");
        }
        (self.left.map_or(er, Matrix::rows), self.right.map_or(ec, Matrix::cols))
    }

    /// Appends the coefficient of every unknown to the sparse row of each
    /// output entry (row-major with `out_c` columns).
    fn accumulate(&self, rows: usize, cols: usize, out_c: usize, a: &mut [Vec<(usize, S)>]) {
        let (er, ec) = self.embedded_shape(rows, cols);
        let left_cols: Vec<Vec<(usize, S)>> = match self.left {
            Some(l) => (0..er).map(|p| sparse((0..l.rows()).map(|i| (i, &l[(i, p)])))).collect(),
            None => (0..er).map(|p| vec![(p, S::one())]).collect(),
        };
        let right_rows: Vec<Vec<(usize, S)>> = match self.right {
            Some(r) => (0..ec).map(|q| sparse(r.row(q).iter().enumerate())).collect(),
            None => (0..ec).map(|q| vec![(q, S::one())]).collect(),
        };
        let copies = match self.embed {
            Embed::Plain => 1,
            Embed::KronIdentity(k) | Embed::IdentityKron(k) => k,
        };
        for x in 0..rows {
            for y in 0..cols {
                let unknown = x * cols + y;
                for s in 0..copies {
                    let (p, q) = match self.embed {
                        Embed::Plain => (x, y),
                        Embed::KronIdentity(k) => (x * k + s, y * k + s),
                        Embed::IdentityKron(_) => (s * rows + x, s * cols + y),
                    };
                    for (i, lv) in &left_cols[p] {
                        for (j, rv) in &right_rows[q] {
                            let v = lv.clone() * rv.clone();
                            a[i * out_c + j].push((unknown, if self.negate { -v } else { v }));
                        }
                    }
                }
            }
        }
    }
}

fn sparse<'a, S: Scalar>(entries: impl Iterator<Item = (usize, &'a S)>) -> Vec<(usize, S)> {
    entries.filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect()
}

/// Linear part and target of an affine residual: `f(x) = A x − b`.
pub fn probe<S: Scalar>(unknowns: usize, f: impl Fn(&[S]) -> Vec<S>) -> (Matrix<S>, Vec<S>) {
    let f0 = f(&vec![S::zero(); unknowns]);
    let mut columns = Vec::with_capacity(unknowns);
    for i in 0..unknowns {
        let fi = f(&unit(unknowns, i));
        columns.push(fi.iter().zip(&f0).map(|(a, b)| a.clone() - b.clone()).collect::<Vec<S>>());
    }
    let a = Matrix::from_columns(f0.len(), &columns);
    let b = f0.into_iter().map(|x| -x).collect();
    (a, b)
}

/// Simultaneous solution of `a_i x = b_i`, or `None` when the stacked system
/// is inconsistent.
pub fn solve_affine<S: Scalar>(constraints: &[(Matrix<S>, Vec<S>)]) -> Result<Option<Vec<S>>> {
    let Some((first, _)) = constraints.first() else {
        return Err(ForgeError::Dimension("no constraints".into()));
    };
    let mut sys = AffineSystem::new(first.cols());
    for (a, b) in constraints {
        sys.push(a, b)?;
    }
    Ok(sys.solve().solution())
}

/// Basis of the space of `rows × cols` matrices on which every linear
/// residual vanishes, in echelon order.
pub fn matrix_kernel<S: Scalar>(
    rows: usize,
    cols: usize,
    residuals: &[&dyn Fn(&Matrix<S>) -> Matrix<S>],
) -> Vec<Matrix<S>> {
    let mut sys = AffineSystem::new(rows * cols);
    for f in residuals {
        sys.push_matrix_affine(rows, cols, |x| f(x));
    }
    sys.kernel().vectors().into_iter().map(|v| Matrix::from_flat(rows, cols, v)).collect()
}
