use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{BigInt, KernelError, Rational};

/// Dense rectangular matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, KernelError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(KernelError::DimensionMismatch("ragged rows".into()));
        }
        Ok(ExactMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Rational::one();
        }
        ExactMatrix { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Rational>),
    /// Consistent with a positive-dimensional solution space; `particular`
    /// sets every free column to zero.
    Underdetermined {
        particular: Vec<Rational>,
        free_columns: Vec<usize>,
    },
    /// `certificate` is the echelon row `(0 .. 0 | c)` with `c != 0`,
    /// obtained by integer row operations on the scaled augmented matrix.
    Inconsistent { certificate: Vec<BigInt> },
}

/// Solves `A x = b` exactly.
///
/// Each augmented row is scaled to integers, reduced by fraction-free
/// (Bareiss) elimination, and back-substituted over the rationals.
pub fn solve_exact_linear(a: &ExactMatrix, b: &[Rational]) -> Result<LinearSolution, KernelError> {
    if a.rows == 0 || a.cols == 0 {
        return Err(KernelError::Empty);
    }
    if a.rows != b.len() {
        return Err(KernelError::DimensionMismatch(format!(
            "matrix has {} rows, right-hand side has {}",
            a.rows,
            b.len()
        )));
    }
    let n = a.cols;
    let mut m: Vec<Vec<BigInt>> = (0..a.rows)
        .map(|r| {
            let row: Vec<&Rational> = a.row(r).iter().chain(std::iter::once(&b[r])).collect();
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.into_iter()
                .map(|q| q.numer() * (&lcm / q.denom()))
                .collect()
        })
        .collect();

    let pivots = bareiss_echelon(&mut m, n);

    for row in m.iter().skip(pivots.len()) {
        if !row[n].is_zero() {
            return Ok(LinearSolution::Inconsistent { certificate: row.clone() });
        }
    }

    let mut x = vec![Rational::zero(); n];
    for (k, &pc) in pivots.iter().enumerate().rev() {
        let mut acc = Rational::from_integer(m[k][n].clone());
        for j in pc + 1..n {
            if !m[k][j].is_zero() {
                acc -= Rational::from_integer(m[k][j].clone()) * &x[j];
            }
        }
        x[pc] = acc / Rational::from_integer(m[k][pc].clone());
    }

    if pivots.len() == n {
        Ok(LinearSolution::Unique(x))
    } else {
        let free_columns = (0..n).filter(|c| !pivots.contains(c)).collect();
        Ok(LinearSolution::Underdetermined { particular: x, free_columns })
    }
}

/// In-place fraction-free elimination to row echelon form over the first
/// `ncols` columns. Returns the pivot column of each leading row.
fn bareiss_echelon(m: &mut [Vec<BigInt>], ncols: usize) -> Vec<usize> {
    let rows = m.len();
    let width = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows {
            break;
        }
        // smallest nonzero entry keeps intermediates short
        let Some(p) = (r..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by(|&i, &j| m[i][c].abs().cmp(&m[j][c].abs()))
        else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..width {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, rat_frac};

    fn mat(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_system() {
        let b = vec![rat(1), rat(2), rat(3)];
        let sol = solve_exact_linear(&ExactMatrix::identity(3), &b).unwrap();
        assert_eq!(sol, LinearSolution::Unique(b));
    }

    #[test]
    fn two_by_two() {
        let sol = solve_exact_linear(&mat(&[&[1, 1], &[1, 2]]), &[rat(3), rat(5)]).unwrap();
        assert_eq!(sol, LinearSolution::Unique(vec![rat(1), rat(2)]));
    }

    #[test]
    fn parallel_rows_inconsistent() {
        let sol = solve_exact_linear(&mat(&[&[1, 1], &[2, 2]]), &[rat(1), rat(3)]).unwrap();
        match sol {
            LinearSolution::Inconsistent { certificate } => {
                assert!(certificate[..2].iter().all(Zero::is_zero));
                assert!(!certificate[2].is_zero());
            }
            other => panic!("expected inconsistent, got {other:?}"),
        }
    }

    #[test]
    fn underdetermined_reports_free_columns() {
        let sol = solve_exact_linear(&mat(&[&[1, 1, 1], &[0, 1, 1]]), &[rat(2), rat(1)]).unwrap();
        match sol {
            LinearSolution::Underdetermined { particular, free_columns } => {
                assert_eq!(free_columns, vec![2]);
                assert_eq!(particular, vec![rat(1), rat(1), rat(0)]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rational_entries() {
        let a = ExactMatrix::from_rows(vec![
            vec![rat_frac(1, 2), rat_frac(1, 3)],
            vec![rat_frac(1, 4), rat(1)],
        ])
        .unwrap();
        let b = vec![rat(1), rat(2)];
        let LinearSolution::Unique(x) = solve_exact_linear(&a, &b).unwrap() else { panic!() };
        assert_eq!(a.mul_vec(&x), b);
    }

    #[test]
    fn mismatch_is_error() {
        assert!(solve_exact_linear(&ExactMatrix::identity(2), &[rat(1)]).is_err());
    }
}
