//! Symmetric presentation matrices and the determinantal ideals built from them.
//!
//! Row and column indices in errors and labels are 1-based (`R_l`, `C_{j+1}`).

mod conditions;
mod det;

pub use conditions::{a_l_ideal, column_condition_matrix, kernel_locus_ideal, row_condition_matrix, validate_ijl};
pub use det::{determinant, determinant_bareiss, determinant_cofactor, minors};

use thiserror::Error;

use crate::linalg::RatMatrix;
use crate::poly::{parse_polynomial, Coefficient, PolyError, Polynomial, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not symmetric: entry ({row},{col}) differs from ({col},{row})")]
    Asymmetric { row: usize, col: usize },
    #[error("entry ({row},{col}): {source}")]
    Parse {
        row: usize,
        col: usize,
        #[source]
        source: PolyError,
    },
    #[error("matrix must have at least one row")]
    Empty,
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, found: usize, expected: usize },
    #[error("minor size {size} out of range for a {rows}x{cols} matrix")]
    MinorSize { size: usize, rows: usize, cols: usize },
    #[error("invalid indices (i,j,l)=({i},{j},{l}) for n={n}: {reason}")]
    IndexConstraint { i: usize, j: usize, l: usize, n: usize, reason: String },
    #[error("transform matrix is singular")]
    SingularTransform,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("subspace matrix must have full column rank {expected}, has rank {found}")]
    RankDeficient { expected: usize, found: usize },
    #[error("kernel locus needs q <= n, got q={q}, n={n}")]
    TooManyVariables { q: usize, n: usize },
}

/// Rectangular matrix of polynomials over `Q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    num_vars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<Polynomial>>, num_vars: usize) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(MatrixError::Ragged { row: i + 1, found: row.len(), expected: c });
            }
            for p in row {
                if p.num_vars() != num_vars {
                    return Err(MatrixError::Dimension(format!(
                        "entry in row {} has {} variables, expected {}",
                        i + 1,
                        p.num_vars(),
                        num_vars
                    )));
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix { rows: r, cols: c, num_vars, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// 0-based access.
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows.iter().flat_map(|&i| cols.iter().map(move |&j| (i, j))).map(|(i, j)| self.get(i, j).clone()).collect();
        PolyMatrix { rows: rows.len(), cols: cols.len(), num_vars: self.num_vars, entries }
    }

    pub fn transpose(&self) -> PolyMatrix {
        let rows: Vec<Vec<Polynomial>> = (0..self.cols).map(|j| (0..self.rows).map(|i| self.get(i, j).clone()).collect()).collect();
        PolyMatrix::from_rows(rows, self.num_vars).expect("rectangular")
    }

    /// Product with a constant matrix on the right.
    pub fn mul_constant(&self, w: &RatMatrix) -> Result<PolyMatrix, MatrixError> {
        if w.rows() != self.cols {
            return Err(MatrixError::Dimension(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, w.rows(), w.cols())));
        }
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(w.cols());
            for j in 0..w.cols() {
                let mut acc = Polynomial::zero(self.num_vars, crate::poly::FieldTag::Rationals, Default::default());
                for k in 0..self.cols {
                    let c = w.get(k, j);
                    if !c.is_zero() {
                        acc = &acc + &self.get(i, k).scale(c);
                    }
                }
                row.push(acc);
            }
            rows.push(row);
        }
        PolyMatrix::from_rows(rows, self.num_vars)
    }

    /// Product with a constant matrix on the left.
    pub fn left_mul_constant(&self, m: &RatMatrix) -> Result<PolyMatrix, MatrixError> {
        Ok(self.transpose().mul_constant(&m.transpose())?.transpose())
    }

    /// Evaluates every entry at a rational point.
    pub fn eval(&self, point: &[Rational]) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).eval(point));
            }
        }
        out
    }

    pub fn map_entries<F: FnMut(&Polynomial) -> Result<Polynomial, PolyError>>(&self, mut f: F) -> Result<PolyMatrix, PolyError> {
        let entries = self.entries.iter().map(&mut f).collect::<Result<Vec<_>, _>>()?;
        let num_vars = entries.first().map_or(self.num_vars, Polynomial::num_vars);
        Ok(PolyMatrix { rows: self.rows, cols: self.cols, num_vars, entries })
    }
}

/// Symmetric `n x n` matrix of polynomials in `q` variables: the map
/// `x -> (f_ij(x))` into symmetric matrices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPolyMatrix {
    matrix: PolyMatrix,
    vars: Vec<String>,
}

impl SymPolyMatrix {
    /// Parses and validates a symmetric matrix from entry strings.
    pub fn build(vars: &[String], entry_sources: &[Vec<String>]) -> Result<Self, MatrixError> {
        let n = entry_sources.len();
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        let mut rows = Vec::with_capacity(n);
        for (i, row) in entry_sources.iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::Ragged { row: i + 1, found: row.len(), expected: n });
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(j, s)| parse_polynomial(s, vars).map_err(|source| MatrixError::Parse { row: i + 1, col: j + 1, source }))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(parsed);
        }
        Self::from_matrix(PolyMatrix::from_rows(rows, vars.len())?, vars.to_vec())
    }

    /// Validates symmetry of an already-built matrix.
    pub fn from_matrix(matrix: PolyMatrix, vars: Vec<String>) -> Result<Self, MatrixError> {
        if matrix.rows() == 0 {
            return Err(MatrixError::Empty);
        }
        if matrix.rows() != matrix.cols() {
            return Err(MatrixError::Dimension(format!("matrix is {}x{}, expected square", matrix.rows(), matrix.cols())));
        }
        if matrix.num_vars() != vars.len() {
            return Err(MatrixError::Dimension(format!("{} variables named, entries use {}", vars.len(), matrix.num_vars())));
        }
        let n = matrix.rows();
        for i in 0..n {
            for j in i + 1..n {
                if matrix.get(i, j) != matrix.get(j, i) {
                    return Err(MatrixError::Asymmetric { row: i + 1, col: j + 1 });
                }
            }
        }
        Ok(SymPolyMatrix { matrix, vars })
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn q(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    /// 0-based access.
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        self.matrix.get(i, j)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        let n = self.n();
        (0..n).map(|i| (0..n).map(|j| self.get(i, j).display_with(&self.vars)).collect()).collect()
    }

    /// Congruence transform `M^t F M`.
    pub fn congruence(&self, m: &RatMatrix) -> Result<SymPolyMatrix, MatrixError> {
        let n = self.n();
        if m.rows() != n || m.cols() != n {
            return Err(MatrixError::Dimension(format!("congruence by a {}x{} matrix on n={}", m.rows(), m.cols(), n)));
        }
        if m.determinant().is_zero() {
            return Err(MatrixError::SingularTransform);
        }
        let product = self.matrix.mul_constant(m)?.left_mul_constant(&m.transpose())?;
        let out = SymPolyMatrix::from_matrix(product, self.vars.clone()).expect("congruence preserves symmetry");
        Ok(out)
    }

    /// Linear change of coordinates in the source: `F(A x)`.
    pub fn substitute_linear(&self, a: &RatMatrix) -> Result<SymPolyMatrix, PolyError> {
        let m = self.matrix.map_entries(|p| p.substitute_linear(a))?;
        Ok(SymPolyMatrix { matrix: m, vars: self.vars.clone() })
    }
}

/// `(n - r)(n - r + 1) / 2`, the codimension of the rank-`<= r` locus in
/// symmetric `n x n` matrices.
pub fn expected_codim(n: usize, r: usize) -> Result<usize, MatrixError> {
    if r > n {
        return Err(MatrixError::Dimension(format!("rank bound r={r} exceeds n={n}")));
    }
    let c = n - r;
    Ok(c * (c + 1) / 2)
}

/// Finite generating set together with its ambient variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealSpec<C: Coefficient = Rational> {
    generators: Vec<Polynomial<C>>,
    vars: Vec<String>,
    label: String,
}

impl<C: Coefficient> IdealSpec<C> {
    /// Drops zero generators; all generators must have `vars.len()` variables
    /// and a common field.
    pub fn new(generators: Vec<Polynomial<C>>, vars: Vec<String>, label: impl Into<String>) -> Result<Self, MatrixError> {
        let q = vars.len();
        let field = generators.first().map(|g| g.field());
        for g in &generators {
            if g.num_vars() != q {
                return Err(MatrixError::Dimension(format!("generator has {} variables, expected {}", g.num_vars(), q)));
            }
            if Some(g.field()) != field {
                return Err(MatrixError::Dimension("generators over different fields".into()));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealSpec { generators, vars, label: label.into() })
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.display_with(&self.vars)).collect()
    }
}

impl IdealSpec<Rational> {
    /// Parses generator strings over `Q`.
    pub fn parse(generators: &[String], vars: Vec<String>, label: impl Into<String>) -> Result<Self, PolyError> {
        let gens = generators.iter().map(|s| parse_polynomial(s, &vars)).collect::<Result<Vec<_>, _>>()?;
        Ok(IdealSpec::new(gens, vars, label).expect("parsed generators share arity"))
    }

    /// Image of the ideal in `F_p`.
    pub fn reduce_mod(&self, p: u64) -> Result<IdealSpec<crate::poly::Fp>, PolyError> {
        let gens = self.generators.iter().map(|g| g.reduce_mod(p)).collect::<Result<Vec<_>, _>>()?;
        Ok(IdealSpec::new(gens, self.vars.clone(), self.label.clone()).expect("same arity"))
    }

    /// Applies `x -> A x` to every generator.
    pub fn substitute_linear(&self, a: &RatMatrix) -> Result<Self, PolyError> {
        let gens = self.generators.iter().map(|g| g.substitute_linear(a)).collect::<Result<Vec<_>, _>>()?;
        Ok(IdealSpec::new(gens, self.vars.clone(), self.label.clone()).expect("same arity"))
    }
}

/// The 4x4 Hankel-type matrix over `x1..x5` used throughout the tests and benches.
pub fn hankel_example() -> SymPolyMatrix {
    let vars: Vec<String> = (1..=5).map(|k| format!("x{k}")).collect();
    let rows = [
        ["x1", "x2", "x3", "x4"],
        ["x2", "x3", "x4", "x5"],
        ["x3", "x4", "x5", "x1"],
        ["x4", "x5", "x1", "2*x2"],
    ];
    let src: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
    SymPolyMatrix::build(&vars, &src).expect("valid example")
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn vars(n: usize) -> Vec<String> {
        (1..=n).map(|k| format!("x{k}")).collect()
    }

    pub(crate) fn poly(s: &str, nvars: usize) -> Polynomial {
        parse_polynomial(s, &vars(nvars)).unwrap()
    }

    pub(crate) fn polymat(rows: &[&[&str]], nvars: usize) -> PolyMatrix {
        let rows = rows.iter().map(|r| r.iter().map(|s| poly(s, nvars)).collect()).collect();
        PolyMatrix::from_rows(rows, nvars).unwrap()
    }

    fn strings(rows: &[&[&str]]) -> Vec<Vec<String>> {
        rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
    }

    #[test]
    fn builds_the_example() {
        let f = hankel_example();
        assert_eq!(f.n(), 4);
        assert_eq!(f.q(), 5);
        assert_eq!(f.get(3, 3), &poly("2*x2", 5));
    }

    #[test]
    fn zero_matrix_is_symmetric() {
        let m = SymPolyMatrix::build(&vars(2), &strings(&[&["0", "0"], &["0", "0"]])).unwrap();
        assert!(m.get(0, 1).is_zero());
    }

    #[test]
    fn asymmetry_reports_first_entry() {
        let src = strings(&[&["0", "x1"], &["x2", "0"]]);
        assert_eq!(SymPolyMatrix::build(&vars(2), &src), Err(MatrixError::Asymmetric { row: 1, col: 2 }));
    }

    #[test]
    fn symmetric_up_to_parsing() {
        let src = strings(&[&["0", "x1 + x2"], &["x2 + x1", "0"]]);
        assert!(SymPolyMatrix::build(&vars(2), &src).is_ok());
    }

    #[test]
    fn parse_errors_name_the_entry() {
        let src = strings(&[&["x1", "y"], &["y", "x1"]]);
        match SymPolyMatrix::build(&vars(1), &src) {
            Err(MatrixError::Parse { row: 1, col: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(SymPolyMatrix::build(&vars(1), &[]), Err(MatrixError::Empty));
    }

    #[test]
    fn congruence_examples() {
        let f = hankel_example();
        assert_eq!(f.congruence(&RatMatrix::identity(4)).unwrap(), f);
        // permutation swapping the first two coordinates
        let p = RatMatrix::from_i64(&[vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
        let g = f.congruence(&p).unwrap();
        assert_eq!(g.get(0, 0), f.get(1, 1));
        assert_eq!(g.get(0, 2), f.get(1, 2));
        assert_eq!(g.get(3, 1), f.get(3, 0));
        let id = SymPolyMatrix::build(&vars(1), &strings(&[&["1", "0"], &["0", "1"]])).unwrap();
        let m = RatMatrix::from_i64(&[vec![1, 2], vec![3, 4]]);
        let mtm = m.transpose().mul(&m);
        let got = id.congruence(&m).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(got.get(i, j), &Polynomial::constant(mtm.get(i, j).clone(), 1, Default::default()));
            }
        }
        assert_eq!(f.congruence(&RatMatrix::zeros(4, 4)), Err(MatrixError::SingularTransform));
    }

    #[test]
    fn expected_codimension() {
        assert_eq!(expected_codim(4, 2).unwrap(), 3);
        assert_eq!(expected_codim(4, 4).unwrap(), 0);
        assert_eq!(expected_codim(4, 3).unwrap(), 1);
        assert!(expected_codim(3, 4).is_err());
    }

    #[test]
    fn ideal_spec_drops_zero_generators() {
        let spec = IdealSpec::new(vec![poly("x1", 2), poly("0", 2)], vars(2), "t").unwrap();
        assert_eq!(spec.generators().len(), 1);
        assert!(IdealSpec::new(vec![poly("x1", 3)], vars(2), "t").is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn congruence_is_a_group_action(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = hankel_example();
            let m1 = RatMatrix::random_invertible(&mut rng, 4, 3);
            let m2 = RatMatrix::random_invertible(&mut rng, 4, 3);
            let lhs = f.congruence(&m1.mul(&m2)).unwrap();
            let rhs = f.congruence(&m1).unwrap().congruence(&m2).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
