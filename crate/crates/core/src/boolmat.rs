//! Dense 0/1 matrices and the row-by-row domination product.
//!
//! `u ⊗ v` is 1 iff some position has `u[i] = 1` and `v[i] = 0`. For a mod
//! matrix `M` (n×k) and a resc matrix `R` (m×k), `(M ⊗ R)[i][j] = M_i ⊗ R_j`:
//! male strain `i` is incompatible with female strain `j` exactly when it
//! carries a mod gene the female cannot rescue.

use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;
use crate::error::{mismatch, Error, Result};

/// Row-major boolean matrix; each row is a bit set over the columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    cols: usize,
    rows: Vec<BitSet>,
}

impl BoolMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BoolMatrix {
            cols,
            rows: (0..rows).map(|_| BitSet::new(cols)).collect(),
        }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        BoolMatrix {
            cols,
            rows: (0..rows).map(|_| BitSet::full(cols)).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of booleans. All rows must share one length.
    pub fn from_rows<R: AsRef<[bool]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut out = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(mismatch("from_rows", cols, alloc::format!("{} in row {i}", row.len())));
            }
            out.push(BitSet::from_indices(cols, (0..cols).filter(|&j| row[j])));
        }
        Ok(BoolMatrix { cols, rows: out })
    }

    /// Builds a matrix from 0/1 integers; any other value is rejected.
    pub fn from_u8_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let mut bools = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let mut r = Vec::with_capacity(row.as_ref().len());
            for (j, &v) in row.as_ref().iter().enumerate() {
                match v {
                    0 => r.push(false),
                    1 => r.push(true),
                    _ => {
                        return Err(Error::InvalidParameter(alloc::format!(
                            "entry ({i}, {j}) is {v}, expected 0 or 1"
                        )))
                    }
                }
            }
            bools.push(r);
        }
        Self::from_rows(&bools)
    }

    pub fn from_bitset_rows(cols: usize, rows: Vec<BitSet>) -> Self {
        assert!(rows.iter().all(|r| r.capacity() == cols));
        BoolMatrix { cols, rows }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(j < self.cols);
        self.rows[i].contains(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value)
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitSet {
        &self.rows[i]
    }

    pub fn row_bits(&self) -> &[BitSet] {
        &self.rows
    }

    pub fn count_ones(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    pub fn transpose(&self) -> BoolMatrix {
        let mut t = BoolMatrix::zeros(self.cols, self.rows());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Entry-wise negation.
    pub fn complement(&self) -> BoolMatrix {
        BoolMatrix {
            cols: self.cols,
            rows: self.rows.iter().map(BitSet::complement).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|r| (0..self.cols).map(|j| r.contains(j) as u8).collect())
            .collect()
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BoolMatrix {}x{} [", self.rows(), self.cols)?;
        for row in &self.rows {
            f.write_str("  ")?;
            for j in 0..self.cols {
                f.write_str(if row.contains(j) { "1" } else { "0" })?;
            }
            f.write_str("\n")?;
        }
        f.write_str("]")
    }
}

/// A candidate explanation of a compatibility matrix: `k` mod/resc gene pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModRescPair {
    /// n×k; `mod_genes[i][l] = 1` iff male strain `i` carries mod gene `l`.
    pub mod_genes: BoolMatrix,
    /// m×k; `resc_genes[j][l] = 1` iff female strain `j` carries resc gene `l`.
    pub resc_genes: BoolMatrix,
}

impl ModRescPair {
    pub fn new(mod_genes: BoolMatrix, resc_genes: BoolMatrix) -> Result<Self> {
        if mod_genes.cols() != resc_genes.cols() {
            return Err(mismatch(
                "ModRescPair::new",
                alloc::format!("{} resc columns", mod_genes.cols()),
                resc_genes.cols(),
            ));
        }
        Ok(ModRescPair {
            mod_genes,
            resc_genes,
        })
    }

    pub fn gene_count(&self) -> usize {
        self.mod_genes.cols()
    }

    pub fn product(&self) -> BoolMatrix {
        // Column counts agree by construction.
        mat_otimes(&self.mod_genes, &self.resc_genes).expect("pair columns agree")
    }
}

/// `u ⊗ v`: true iff some index has `u[i] = 1` and `v[i] = 0`.
pub fn vec_otimes(u: &[bool], v: &[bool]) -> Result<bool> {
    if u.len() != v.len() {
        return Err(mismatch("vec_otimes", u.len(), v.len()));
    }
    Ok(u.iter().zip(v).any(|(&a, &b)| a && !b))
}

/// Bit-set form of [`vec_otimes`].
#[inline]
pub fn bits_otimes(u: &BitSet, v: &BitSet) -> bool {
    u.has_member_outside(v)
}

/// Row-by-row product: `C[i][j] = M_i ⊗ R_j`.
pub fn mat_otimes(m: &BoolMatrix, r: &BoolMatrix) -> Result<BoolMatrix> {
    if m.cols() != r.cols() {
        return Err(mismatch("mat_otimes", alloc::format!("{} columns", m.cols()), r.cols()));
    }
    let rows = m
        .row_bits()
        .iter()
        .map(|mi| BitSet::from_indices(r.rows(), (0..r.rows()).filter(|&j| bits_otimes(mi, r.row(j)))))
        .collect();
    Ok(BoolMatrix::from_bitset_rows(r.rows(), rows))
}

/// One gene pair per male strain: `M = I_n`, `R = complement(C)^T`.
pub fn trivial_solution(c: &BoolMatrix) -> ModRescPair {
    ModRescPair {
        mod_genes: BoolMatrix::identity(c.rows()),
        resc_genes: c.complement().transpose(),
    }
}

/// Checks `pair.mod_genes ⊗ pair.resc_genes == c`.
pub fn verify_solution(c: &BoolMatrix, pair: &ModRescPair) -> Result<bool> {
    if pair.mod_genes.rows() != c.rows() {
        return Err(mismatch("verify_solution", alloc::format!("{} mod rows", c.rows()), pair.mod_genes.rows()));
    }
    if pair.resc_genes.rows() != c.cols() {
        return Err(mismatch("verify_solution", alloc::format!("{} resc rows", c.cols()), pair.resc_genes.rows()));
    }
    Ok(mat_otimes(&pair.mod_genes, &pair.resc_genes)? == *c)
}
