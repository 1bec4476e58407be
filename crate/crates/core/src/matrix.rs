use crate::error::{Error, Result};
use crate::fuzzy::TriangularFuzzyNumber;

/// Row-major grid with alternative labels on rows and criterion labels on columns.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledMatrix<E> {
    rows: Vec<String>,
    cols: Vec<String>,
    cells: Vec<E>,
}

/// Grid of triangular fuzzy numbers (aggregated or normalized decision matrix).
pub type FuzzyMatrix<T> = LabeledMatrix<TriangularFuzzyNumber<T>>;

/// Grid of reals (credibilistic mean or standard-deviation matrix).
pub type CrispMatrix<T> = LabeledMatrix<T>;

impl<E> LabeledMatrix<E> {
    pub fn new(rows: Vec<String>, cols: Vec<String>, cells: Vec<E>) -> Result<Self> {
        let expected = rows.len() * cols.len();
        if cells.len() != expected {
            return Err(Error::DimensionMismatch {
                what: "matrix cells",
                expected,
                found: cells.len(),
            });
        }
        Ok(Self { rows, cols, cells })
    }

    pub fn from_fn(rows: Vec<String>, cols: Vec<String>, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let q = cols.len();
        let cells = (0..rows.len() * q).map(|k| f(k / q, k % q)).collect();
        Self { rows, cols, cells }
    }

    pub fn try_from_fn<F>(rows: Vec<String>, cols: Vec<String>, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Result<E>,
    {
        let q = cols.len();
        let cells = (0..rows.len() * q)
            .map(|k| f(k / q, k % q))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { rows, cols, cells })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[String] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.cells[i * self.ncols() + j]
    }

    pub fn row(&self, i: usize) -> &[E] {
        let q = self.ncols();
        &self.cells[i * q..(i + 1) * q]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = &E> + '_ {
        self.cells.iter().skip(j).step_by(self.ncols().max(1))
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[E]> + '_ {
        self.cells.chunks(self.ncols().max(1))
    }

    pub fn map<F, R>(&self, f: F) -> LabeledMatrix<R>
    where
        F: FnMut(&E) -> R,
    {
        LabeledMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            cells: self.cells.iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|k| format!("{prefix}{k}")).collect()
    }

    #[test]
    fn layout_is_row_major() {
        let m = LabeledMatrix::from_fn(labels("A", 2), labels("C", 3), |i, j| 10 * i + j);
        assert_eq!(*m.get(1, 2), 12);
        assert_eq!(m.row(1), &[10, 11, 12]);
        assert_eq!(m.column(1).copied().collect::<Vec<_>>(), vec![1, 11]);
    }

    #[test]
    fn rejects_wrong_cell_count() {
        let err = LabeledMatrix::new(labels("A", 2), labels("C", 2), vec![1, 2, 3]).unwrap_err();
        assert!(matches!(
            err,
            Error::DimensionMismatch {
                expected: 4,
                found: 3,
                ..
            }
        ));
    }
}
