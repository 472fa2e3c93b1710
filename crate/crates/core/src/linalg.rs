//! Exact rational linear algebra: incremental sparse echelon forms for rank
//! computations, and dense reduced row echelon for solving and kernels.
//!
//! Everything works over `BigRational`; there is no floating point anywhere,
//! so kernel and rank results are exact.

use crate::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A sparse vector: coordinate index to nonzero entry.
pub type SparseVec = BTreeMap<usize, Rat>;

pub fn sparse_scale(v: &SparseVec, r: &Rat) -> SparseVec {
    if r.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(i, c)| (*i, c * r)).collect()
}

pub fn sparse_add_scaled(target: &mut SparseVec, source: &SparseVec, r: &Rat) {
    if r.is_zero() {
        return;
    }
    for (i, c) in source {
        let entry = target.entry(*i).or_insert_with(Rat::zero);
        *entry += c * r;
        if entry.is_zero() {
            target.remove(i);
        }
    }
}

/// Incremental Gaussian echelon over the rationals. Rows are stored pivot
/// first with pivot entry normalized to 1; inserting a vector reports
/// whether it enlarged the span.
#[derive(Debug, Default, Clone)]
pub struct Echelon {
    /// pivot column -> reduced row with that pivot
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduce a vector against the current rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        loop {
            let hit = v
                .iter()
                .find_map(|(i, c)| self.rows.get(i).map(|row| (*i, c.clone(), row.clone())));
            match hit {
                Some((_, c, row)) => {
                    sparse_add_scaled(&mut v, &row, &(-c));
                }
                None => return v,
            }
        }
    }

    /// Insert a vector; returns true if the rank increased.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut r = self.reduce(v);
        match r.iter().next() {
            None => false,
            Some((&pivot, c)) => {
                let inv = Rat::one() / c.clone();
                r = sparse_scale(&r, &inv);
                self.rows.insert(pivot, r);
                true
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of the span of a family of sparse vectors.
pub fn rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(&v);
    }
    ech.rank()
}

/// Dense matrix over the rationals, row major.
#[derive(Debug, Clone)]
pub struct DenseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Rat>>,
}

impl DenseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![vec![Rat::zero(); cols]; rows],
        }
    }

    /// Builds the matrix whose j-th column is `columns[j]`, with `rows`
    /// ambient coordinates.
    pub fn from_columns(columns: &[SparseVec], rows: usize) -> Self {
        let mut m = DenseMatrix::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (&i, c) in col {
                m.data[i][j] = c.clone();
            }
        }
        m
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let pivot_row = match (row..self.rows).find(|&r| !self.data[r][col].is_zero()) {
                Some(r) => r,
                None => continue,
            };
            self.data.swap(row, pivot_row);
            let inv = Rat::one() / self.data[row][col].clone();
            for c in col..self.cols {
                let v = std::mem::replace(&mut self.data[row][c], Rat::zero());
                self.data[row][c] = v * &inv;
            }
            for r in 0..self.rows {
                if r != row && !self.data[r][col].is_zero() {
                    let factor = self.data[r][col].clone();
                    for c in col..self.cols {
                        let delta = &self.data[row][c] * &factor;
                        self.data[r][c] -= delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }
}

/// Outcome of an exact linear solve `A x = b` with `A` given by columns.
pub enum SolveOutcome {
    /// A particular solution (free variables set to zero).
    Solution(Vec<Rat>),
    /// The system is inconsistent; carries the part of `b` that cannot be
    /// matched by the column span (reduced against it).
    Inconsistent(SparseVec),
}

/// Solve `sum_j x_j * columns[j] = rhs` exactly.
pub fn solve(columns: &[SparseVec], rhs: &SparseVec, ambient: usize) -> SolveOutcome {
    let n = columns.len();
    let mut m = DenseMatrix::from_columns(columns, ambient);
    // augmented column
    for row in m.data.iter_mut() {
        row.push(Rat::zero());
    }
    m.cols += 1;
    for (&i, c) in rhs {
        m.data[i][n] = c.clone();
    }
    let pivots = m.rref();
    if pivots.contains(&n) {
        // reconstruct the uncancellable residue of rhs
        let mut ech = Echelon::new();
        for col in columns {
            ech.insert(col);
        }
        return SolveOutcome::Inconsistent(ech.reduce(rhs));
    }
    let mut x = vec![Rat::zero(); n];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = m.data[r][n].clone();
    }
    SolveOutcome::Solution(x)
}

/// Kernel basis of the linear map sending basis vector `j` to `columns[j]`.
pub fn kernel_basis(columns: &[SparseVec], ambient: usize) -> Vec<Vec<Rat>> {
    let n = columns.len();
    let mut m = DenseMatrix::from_columns(columns, ambient);
    let pivots = m.rref();
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); n];
        v[free] = Rat::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m.data[r][free].clone();
        }
        basis.push(v);
    }
    basis
}
