//! Exact sparse linear algebra over F_p: row reduction, nullspace,
//! consistency of inhomogeneous systems, echelonized span bases.
//!
//! Rows are stored sparsely at the interface; elimination runs on dense
//! rows internally, which is fine for the degree-block sizes showing up
//! here (hundreds of columns). Pivoting is deterministic: first nonzero
//! column, first available row.

use crate::arith::FpScalar;
use crate::error::Error;

/// Sparse matrix over F_p. Each row keeps (column, value) pairs with
/// strictly increasing columns and no zero values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u64,
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, u64)>>,
}

impl FpMatrix {
    pub fn new(p: u64, ncols: usize) -> Self {
        FpMatrix { p, nrows: 0, ncols, rows: Vec::new() }
    }

    pub fn from_dense(p: u64, dense: &[Vec<u64>]) -> Self {
        let ncols = dense.first().map(|r| r.len()).unwrap_or(0);
        let mut m = FpMatrix::new(p, ncols);
        for row in dense {
            assert_eq!(row.len(), ncols, "ragged rows");
            m.push_row_dense(row);
        }
        m
    }

    /// Appends a row given as a dense slice of residues.
    pub fn push_row_dense(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.ncols, "row length mismatch");
        let sparse: Vec<(usize, u64)> = row
            .iter()
            .enumerate()
            .filter_map(|(c, &v)| {
                let v = v % self.p;
                (v != 0).then_some((c, v))
            })
            .collect();
        self.rows.push(sparse);
        self.nrows += 1;
    }

    /// Appends a row given as (column, value) pairs in any order;
    /// repeated columns accumulate.
    pub fn push_row_sparse(&mut self, entries: &[(usize, u64)]) {
        let mut dense = vec![0u64; self.ncols];
        for &(c, v) in entries {
            assert!(c < self.ncols, "column out of range");
            dense[c] = (dense[c] + v % self.p) % self.p;
        }
        self.push_row_dense(&dense);
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<(usize, u64)>] {
        &self.rows
    }

    pub fn row_dense(&self, i: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.ncols];
        for &(c, v) in &self.rows[i] {
            out[c] = v;
        }
        out
    }

    fn to_dense(&self) -> Vec<Vec<u64>> {
        (0..self.nrows).map(|i| self.row_dense(i)).collect()
    }

    /// Matrix-vector product M v.
    pub fn apply(&self, v: &[u64]) -> Result<Vec<u64>, Error> {
        if v.len() != self.ncols {
            return Err(Error::LengthMismatch { expected: self.ncols, got: v.len() });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| {
                let mut acc = FpScalar::zero(self.p);
                for &(c, val) in row {
                    acc = acc + FpScalar::from_u64(val, self.p) * FpScalar::from_u64(v[c], self.p);
                }
                acc.value()
            })
            .collect())
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let mut dense = self.to_dense();
        let pivots = rref_in_place(self.p, &mut dense);
        let kept: Vec<Vec<u64>> = dense
            .into_iter()
            .filter(|r| r.iter().any(|&v| v != 0))
            .collect();
        let mut m = FpMatrix::new(self.p, self.ncols);
        for r in &kept {
            m.push_row_dense(r);
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace {v : Mv = 0}, one vector per free
    /// column, in increasing free-column order.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let mut dense = self.to_dense();
        let pivots = rref_in_place(self.p, &mut dense);
        let mut is_pivot = vec![false; self.ncols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u64; self.ncols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                let coeff = dense[i][free];
                if coeff != 0 {
                    v[pc] = self.p - coeff;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Consistency of M x = rhs; returns one witness solution when
    /// consistent (free variables set to zero).
    pub fn solve(&self, rhs: &[u64]) -> Result<Option<Vec<u64>>, Error> {
        if rhs.len() != self.nrows {
            return Err(Error::LengthMismatch { expected: self.nrows, got: rhs.len() });
        }
        let mut dense: Vec<Vec<u64>> = (0..self.nrows)
            .map(|i| {
                let mut r = self.row_dense(i);
                r.push(rhs[i] % self.p);
                r
            })
            .collect();
        let pivots = rref_in_place(self.p, &mut dense);
        // a pivot in the augmented column means rank(M) < rank(M|rhs)
        if pivots.contains(&self.ncols) {
            return Ok(None);
        }
        let mut x = vec![0u64; self.ncols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = dense[i][self.ncols];
        }
        Ok(Some(x))
    }
}

/// In-place Gauss-Jordan over F_p; returns pivot columns in order.
fn rref_in_place(p: u64, rows: &mut [Vec<u64>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut next_row = 0usize;
    for col in 0..ncols {
        if next_row == nrows {
            break;
        }
        let Some(pivot_row) = (next_row..nrows).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(next_row, pivot_row);
        let inv = FpScalar::from_u64(rows[next_row][col], p)
            .inv()
            .expect("pivot is nonzero");
        for c in col..ncols {
            rows[next_row][c] =
                (FpScalar::from_u64(rows[next_row][c], p) * inv).value();
        }
        for r in 0..nrows {
            if r != next_row && rows[r][col] != 0 {
                let factor = FpScalar::from_u64(rows[r][col], p);
                for c in col..ncols {
                    let sub = factor * FpScalar::from_u64(rows[next_row][c], p);
                    rows[r][c] = (FpScalar::from_u64(rows[r][c], p) - sub).value();
                }
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    pivots
}

/// Reduced echelon basis of the span of a set of vectors. Column order is
/// chosen by the caller (monomials in decreasing lex order, so that pivot
/// columns are exactly the realizable leading terms in the span).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonBasis {
    p: u64,
    ncols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn empty(p: u64, ncols: usize) -> Self {
        EchelonBasis { p, ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(p: u64, ncols: usize, vectors: &[Vec<u64>]) -> Result<Self, Error> {
        for v in vectors {
            if v.len() != ncols {
                return Err(Error::LengthMismatch { expected: ncols, got: v.len() });
            }
        }
        let mut dense: Vec<Vec<u64>> = vectors.to_vec();
        let pivots = rref_in_place(p, &mut dense);
        dense.retain(|r| r.iter().any(|&v| v != 0));
        Ok(EchelonBasis { p, ncols, rows: dense, pivots })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis rows; returns the residue.
    pub fn reduce(&self, v: &[u64]) -> Result<Vec<u64>, Error> {
        if v.len() != self.ncols {
            return Err(Error::LengthMismatch { expected: self.ncols, got: v.len() });
        }
        let mut v: Vec<u64> = v.iter().map(|&x| x % self.p).collect();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let factor = FpScalar::from_u64(v[pc], self.p);
            if !factor.is_zero() {
                for c in pc..self.ncols {
                    let sub = factor * FpScalar::from_u64(row[c], self.p);
                    v[c] = (FpScalar::from_u64(v[c], self.p) - sub).value();
                }
            }
        }
        Ok(v)
    }

    pub fn contains(&self, v: &[u64]) -> Result<bool, Error> {
        Ok(self.reduce(v)?.iter().all(|&x| x == 0))
    }

    /// Inserts a vector, extending the basis if it is independent.
    /// Returns true when the dimension grew.
    pub fn insert(&mut self, v: &[u64]) -> Result<bool, Error> {
        let residue = self.reduce(v)?;
        let Some(lead) = residue.iter().position(|&x| x != 0) else {
            return Ok(false);
        };
        let inv = FpScalar::from_u64(residue[lead], self.p).inv().expect("nonzero");
        let normalized: Vec<u64> = residue
            .iter()
            .map(|&x| (FpScalar::from_u64(x, self.p) * inv).value())
            .collect();
        // back-substitute into existing rows, then insert keeping pivot order
        for row in &mut self.rows {
            let factor = FpScalar::from_u64(row[lead], self.p);
            if !factor.is_zero() {
                for c in 0..self.ncols {
                    let sub = factor * FpScalar::from_u64(normalized[c], self.p);
                    row[c] = (FpScalar::from_u64(row[c], self.p) - sub).value();
                }
            }
        }
        let at = self.pivots.partition_point(|&pc| pc < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, normalized);
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_and_zero() {
        let id = FpMatrix::from_dense(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let (r, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1, 2]);

        let z = FpMatrix::from_dense(3, &[vec![0, 0], vec![0, 0]]);
        let (r, piv) = z.rref();
        assert_eq!(r.nrows(), 0);
        assert!(piv.is_empty());
    }

    #[test]
    fn rref_dependent_rows() {
        // [[1,2],[2,4]] over F5 reduces to [[1,2]]
        let m = FpMatrix::from_dense(5, &[vec![1, 2], vec![2, 4]]);
        let (r, piv) = m.rref();
        assert_eq!(piv, vec![0]);
        assert_eq!(r.row_dense(0), vec![1, 2]);
        assert_eq!(r.nrows(), 1);
    }

    #[test]
    fn nullspace_examples() {
        let id = FpMatrix::from_dense(3, &[vec![1, 0], vec![0, 1]]);
        assert!(id.nullspace().is_empty());

        let z = FpMatrix::from_dense(3, &[vec![0, 0, 0], vec![0, 0, 0]]);
        assert_eq!(z.nullspace().len(), 3);

        let m = FpMatrix::from_dense(3, &[vec![1, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns, vec![vec![2, 1]]);
    }

    #[test]
    fn solve_examples() {
        let z = FpMatrix::from_dense(3, &[vec![0, 0]]);
        assert_eq!(z.solve(&[0]).unwrap(), Some(vec![0, 0]));
        assert_eq!(z.solve(&[1]).unwrap(), None);

        let m = FpMatrix::from_dense(3, &[vec![2]]);
        assert_eq!(m.solve(&[1]).unwrap(), Some(vec![2]));

        let m = FpMatrix::from_dense(3, &[vec![1]]);
        assert!(m.solve(&[1, 2]).is_err());
    }

    #[test]
    fn nullspace_and_rank_random() {
        // simple deterministic generator; checks M v = 0 and rank-nullity
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for p in [3u64, 5] {
            for trial in 0..40 {
                let nrows = 1 + (next() % 50) as usize;
                let ncols = 1 + (next() % 50) as usize;
                let rows: Vec<Vec<u64>> = (0..nrows)
                    .map(|_| (0..ncols).map(|_| next() % p).collect())
                    .collect();
                let m = FpMatrix::from_dense(p, &rows);
                let ns = m.nullspace();
                assert_eq!(m.rank() + ns.len(), ncols, "trial {trial}");
                for v in &ns {
                    assert!(m.apply(v).unwrap().iter().all(|&x| x == 0));
                }
                // solve against a random in-image rhs
                let x: Vec<u64> = (0..ncols).map(|_| next() % p).collect();
                let rhs = m.apply(&x).unwrap();
                let sol = m.solve(&rhs).unwrap().expect("consistent by construction");
                assert_eq!(m.apply(&sol).unwrap(), rhs);
            }
        }
    }

    #[test]
    fn echelon_basis_examples() {
        let b = EchelonBasis::from_vectors(3, 2, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(b.pivot_columns(), &[0, 1]);

        let b = EchelonBasis::from_vectors(3, 2, &[vec![1, 2], vec![1, 2]]).unwrap();
        assert_eq!(b.dim(), 1);

        let b = EchelonBasis::from_vectors(3, 4, &[]).unwrap();
        assert_eq!(b.dim(), 0);
    }

    #[test]
    fn echelon_basis_idempotent_and_membership() {
        let vecs = vec![vec![1, 2, 0, 1], vec![0, 1, 1, 1], vec![1, 0, 1, 2]];
        let b = EchelonBasis::from_vectors(3, 4, &vecs).unwrap();
        let again = EchelonBasis::from_vectors(3, 4, b.rows()).unwrap();
        assert_eq!(b, again);
        for v in &vecs {
            assert!(b.contains(v).unwrap());
        }
        assert!(!b.contains(&[0, 0, 0, 1]).unwrap() || b.dim() == 4);
    }

    #[test]
    fn echelon_insert_matches_batch() {
        let vecs = vec![vec![1, 2, 0, 1], vec![0, 1, 1, 1], vec![1, 0, 1, 2], vec![2, 1, 0, 2]];
        let batch = EchelonBasis::from_vectors(3, 4, &vecs).unwrap();
        let mut inc = EchelonBasis::empty(3, 4);
        for v in &vecs {
            inc.insert(v).unwrap();
        }
        assert_eq!(batch, inc);
    }
}
