//! Row and column conditions defining the loci `A(i,j,n)_l`, and the kernel
//! incidence ideal used in the corank-one case.
//!
//! For `1 <= j <= i <= n-1` and `1 <= l <= min(j+1, n-i)`:
//!
//! * row condition: rows `R_l..R_{n-i}` over all columns have rank `<= n-i-l`;
//! * column condition: rows `R_{l+1}..R_n` over columns `C_{j+1}..C_n` have
//!   rank `<= n-j-1`. At `l = j+1` that block has only `n-j-1` rows and the
//!   condition holds identically.

use super::det::minors;
use super::{IdealSpec, MatrixError, PolyMatrix, SymPolyMatrix};
use crate::linalg::RatMatrix;

pub fn validate_ijl(n: usize, i: usize, j: usize, l: usize) -> Result<(), MatrixError> {
    let err = |reason: &str| Err(MatrixError::IndexConstraint { i, j, l, n, reason: reason.to_string() });
    if j < 1 || j > i || i + 1 > n {
        return err("need 1 <= j <= i <= n-1");
    }
    if l < 1 || l > (j + 1).min(n - i) {
        return err("need 1 <= l <= min(j+1, n-i)");
    }
    Ok(())
}

/// Rows `R_l..R_{n-i}`, all `n` columns; size `(n-i-l+1) x n`.
pub fn row_condition_matrix(f: &SymPolyMatrix, i: usize, j: usize, l: usize) -> Result<PolyMatrix, MatrixError> {
    let n = f.n();
    validate_ijl(n, i, j, l)?;
    let rows: Vec<usize> = (l - 1..n - i).collect();
    let cols: Vec<usize> = (0..n).collect();
    Ok(f.matrix().submatrix(&rows, &cols))
}

/// Rows `R_{l+1}..R_n`, columns `C_{j+1}..C_n`; size `(n-l) x (n-j)`.
pub fn column_condition_matrix(f: &SymPolyMatrix, i: usize, j: usize, l: usize) -> Result<PolyMatrix, MatrixError> {
    let n = f.n();
    validate_ijl(n, i, j, l)?;
    let rows: Vec<usize> = (l..n).collect();
    let cols: Vec<usize> = (j..n).collect();
    Ok(f.matrix().submatrix(&rows, &cols))
}

/// Ideal of `A(i,j,n)_l`: maximal minors of the row block plus the
/// `(n-j)`-minors of the column block (omitted at `l = j+1`).
pub fn a_l_ideal(f: &SymPolyMatrix, i: usize, j: usize, l: usize) -> Result<IdealSpec, MatrixError> {
    let n = f.n();
    let row_block = row_condition_matrix(f, i, j, l)?;
    let mut gens = minors(&row_block, n - i - l + 1)?;
    if l < j + 1 {
        let col_block = column_condition_matrix(f, i, j, l)?;
        gens.extend(minors(&col_block, n - j)?);
    }
    IdealSpec::new(gens, f.vars().to_vec(), format!("A({i},{j},{n})_{l}"))
}

/// Maximal minors of `F * W` for a constant `n x (n-q+1)` matrix `W` of full
/// column rank: the locus where `ker F(x)` meets the column span of `W`.
pub fn kernel_locus_ideal(f: &SymPolyMatrix, w: &RatMatrix) -> Result<IdealSpec, MatrixError> {
    let (n, q) = (f.n(), f.q());
    if q > n {
        return Err(MatrixError::TooManyVariables { q, n });
    }
    let width = n - q + 1;
    if w.rows() != n || w.cols() != width {
        return Err(MatrixError::Dimension(format!("W must be {}x{}, got {}x{}", n, width, w.rows(), w.cols())));
    }
    let rank = w.rank();
    if rank != width {
        return Err(MatrixError::RankDeficient { expected: width, found: rank });
    }
    let product = f.matrix().mul_constant(w)?;
    let gens = minors(&product, width)?;
    IdealSpec::new(gens, f.vars().to_vec(), format!("ker F meets W (n={n}, q={q})"))
}
