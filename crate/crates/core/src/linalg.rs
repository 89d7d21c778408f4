//! Dense exact-rational matrices for coordinate changes.

use rand::Rng;
use serde::{Serialize, Serializer};

use crate::poly::{Coefficient, FieldTag, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::from_integer(0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Rational::from_integer(1));
        }
        m
    }

    /// Builds from rows of integers; panics on ragged input.
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, Rational::from_integer(v));
            }
        }
        m
    }

    /// Uniform integer entries in `[-bound, bound]`.
    pub fn random_integer<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for v in m.data.iter_mut() {
            *v = Rational::from_integer(rng.gen_range(-bound..=bound));
        }
        m
    }

    /// Random invertible square integer matrix, resampled until `det != 0`.
    pub fn random_invertible<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Self {
        loop {
            let m = Self::random_integer(rng, n, n, bound);
            if !m.determinant().is_zero() {
                return m;
            }
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Rational::from_integer(0);
                for k in 0..self.cols {
                    acc = acc.add_ref(&self.get(i, k).mul_ref(other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Row echelon form by Gaussian elimination; returns `(rank, det sign/scale)`.
    fn eliminate(&self) -> (usize, Rational) {
        let mut a = self.clone();
        let mut rank = 0;
        let mut det = Rational::from_integer(1);
        for col in 0..a.cols {
            let Some(pivot) = (rank..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
                det = Rational::from_integer(0);
                continue;
            };
            if pivot != rank {
                for j in 0..a.cols {
                    a.data.swap(pivot * a.cols + j, rank * a.cols + j);
                }
                det = det.neg_ref();
            }
            let pv = a.get(rank, col).clone();
            det = det.mul_ref(&pv);
            let inv = pv.inv().expect("nonzero pivot");
            for r in rank + 1..a.rows {
                let factor = a.get(r, col).mul_ref(&inv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..a.cols {
                    let v = a.get(r, j).sub_ref(&factor.mul_ref(a.get(rank, j)));
                    a.set(r, j, v);
                }
            }
            rank += 1;
            if rank == a.rows {
                break;
            }
        }
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().0
    }

    /// Exact determinant; panics on non-square input.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return Rational::one(FieldTag::Rationals);
        }
        let (rank, det) = self.eliminate();
        if rank < self.rows {
            Rational::from_integer(0)
        } else {
            det
        }
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect()).collect()
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn determinant_and_rank() {
        let m = RatMatrix::from_i64(&[vec![2, 1], vec![7, 4]]);
        assert_eq!(m.determinant(), Rational::from_integer(1));
        let swap = RatMatrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(swap.determinant(), Rational::from_integer(-1));
        let s = RatMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(s.rank(), 2);
        assert!(s.determinant().is_zero());
        assert_eq!(RatMatrix::from_i64(&[vec![1, 0], vec![0, 0], vec![0, 3]]).rank(), 2);
    }

    #[test]
    fn random_invertible_is_invertible() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let m = RatMatrix::random_invertible(&mut rng, 4, 5);
            assert!(!m.determinant().is_zero());
            assert_eq!(m.rank(), 4);
        }
    }

    #[test]
    fn product_of_determinants() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = RatMatrix::random_integer(&mut rng, 3, 3, 5);
        let b = RatMatrix::random_integer(&mut rng, 3, 3, 5);
        assert_eq!(a.mul(&b).determinant(), a.determinant().mul_ref(&b.determinant()));
        assert_eq!(a.transpose().determinant(), a.determinant());
    }
}
