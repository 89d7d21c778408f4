//! Determinants and minors of polynomial matrices.

use itertools::Itertools;

use super::PolyMatrix;
use crate::poly::{MonomialOrder, Polynomial};

/// Laplace expansion along the first row. Used for small blocks, where it
/// beats elimination.
pub fn determinant_cofactor(m: &PolyMatrix) -> Polynomial {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let idx: Vec<usize> = (0..m.rows()).collect();
    cofactor_rec(m, 0, &idx)
}

fn cofactor_rec(m: &PolyMatrix, row: usize, cols: &[usize]) -> Polynomial {
    let nv = m.num_vars();
    if cols.is_empty() {
        return Polynomial::one(nv, crate::poly::FieldTag::Rationals, MonomialOrder::DegRevLex);
    }
    if cols.len() == 1 {
        return m.get(row, cols[0]).clone();
    }
    let mut acc = Polynomial::zero(nv, crate::poly::FieldTag::Rationals, MonomialOrder::DegRevLex);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = m.get(row, c);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &cofactor_rec(m, row + 1, &rest);
        acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Fraction-free Bareiss elimination with row pivoting. Every division is
/// exact in the polynomial ring.
pub fn determinant_bareiss(m: &PolyMatrix) -> Polynomial {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    let nv = m.num_vars();
    let field = crate::poly::FieldTag::Rationals;
    if n == 0 {
        return Polynomial::one(nv, field, MonomialOrder::DegRevLex);
    }
    let mut a: Vec<Vec<Polynomial>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut negate = false;
    let mut prev = Polynomial::one(nv, field, MonomialOrder::DegRevLex);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Polynomial::zero(nv, field, MonomialOrder::DegRevLex),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

pub fn determinant(m: &PolyMatrix) -> Polynomial {
    if m.rows() <= 3 {
        determinant_cofactor(m)
    } else {
        determinant_bareiss(m)
    }
}

/// All `k x k` minors, ordered by row set then column set, lexicographically.
pub fn minors(m: &PolyMatrix, k: usize) -> Result<Vec<Polynomial>, super::MatrixError> {
    if k == 0 || k > m.rows().min(m.cols()) {
        return Err(super::MatrixError::MinorSize { size: k, rows: m.rows(), cols: m.cols() });
    }
    let mut out = Vec::new();
    for rows in (0..m.rows()).combinations(k) {
        for cols in (0..m.cols()).combinations(k) {
            out.push(determinant(&m.submatrix(&rows, &cols)));
        }
    }
    Ok(out)
}
