//! Filling matrices that count monomial and fundamental coefficients of the
//! combinatorial power sums.
//!
//! A filling for the pair `(alpha, beta)` is an `l(beta) x l(alpha)` matrix
//! whose nonzero entries are the parts of `alpha`, such that
//!
//! 1. row `i` sums to `beta_i`,
//! 2. the only nonzero entry in column `j` is the `j`-th part of the sorted
//!    word of `alpha`,
//! 3. the nonzero entries read `alpha` left to right, top to bottom.
//!
//! `R`-fillings satisfy (1)-(3); the symmetric variant drops (3) and is
//! indexed by partitions; `Q`-fillings additionally require the rightmost
//! nonzero entry of each row to sit strictly right of the leftmost nonzero
//! entry of the next row.

use std::fmt;

use crate::composition::{Composition, CompositionError, Partition};

/// A row-major filling; zero entries are empty cells.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FillingMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FillingMatrix {
    fn from_placements(rows: usize, cols: usize, placements: &[(usize, usize, u32)]) -> Self {
        let mut data = vec![0; rows * cols];
        for &(r, c, v) in placements {
            data[r * cols + c] = v;
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[u32] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    /// Rightmost nonzero column of a row, if the row is nonempty.
    fn rightmost(&self, row: usize) -> Option<usize> {
        (0..self.cols).rev().find(|&c| self.get(row, c) != 0)
    }

    fn leftmost(&self, row: usize) -> Option<usize> {
        (0..self.cols).find(|&c| self.get(row, c) != 0)
    }

    /// The overlap condition: the rightmost nonzero entry of each row sits
    /// strictly right of the leftmost nonzero entry of the row below.
    pub fn rows_overlap(&self) -> bool {
        for i in 0..self.rows.saturating_sub(1) {
            match (self.rightmost(i), self.leftmost(i + 1)) {
                (Some(hi), Some(lo)) if hi > lo => {}
                _ => return false,
            }
        }
        true
    }

    /// Plain text rows with `.` for empty cells.
    pub fn render_plain(&self) -> String {
        if self.rows == 0 || self.cols == 0 {
            return "(empty)".to_string();
        }
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|&v| {
                        if v == 0 {
                            ".".to_string()
                        } else {
                            v.to_string()
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn render_latex(&self) -> String {
        let body = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|&v| if v == 0 { String::new() } else { v.to_string() })
                    .collect::<Vec<_>>()
                    .join("&")
            })
            .collect::<Vec<_>>()
            .join(r"\\");
        format!(r"\begin{{pmatrix}}{body}\end{{pmatrix}}")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<u32>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        serde_json::json!(rows)
    }
}

impl fmt::Debug for FillingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_plain().replace('\n', " / "))
    }
}

fn ensure_sizes(alpha: &Composition, beta: &Composition) -> Result<(), CompositionError> {
    if alpha.size() != beta.size() {
        return Err(CompositionError::SizeMismatch {
            left: alpha.size(),
            right: beta.size(),
        });
    }
    Ok(())
}

/// Backtracks over the parts of `alpha` in reading order, keeping the
/// current row, its partial sum, the last column used in it, and the set of
/// used columns. Rows are filled consecutively since each must be nonempty.
fn enumerate_reading(alpha: &Composition, beta: &Composition) -> Vec<FillingMatrix> {
    let cols = alpha.len();
    let rows = beta.len();
    if alpha.is_empty() {
        return vec![FillingMatrix::from_placements(rows, cols, &[])];
    }
    let col_values = alpha.underlying_partition();
    let col_values = col_values.parts();
    let parts = alpha.parts();
    let row_sums = beta.parts();
    let mut out = Vec::new();
    let mut placements: Vec<(usize, usize, u32)> = Vec::with_capacity(cols);

    struct State<'a> {
        col_values: &'a [u32],
        parts: &'a [u32],
        row_sums: &'a [u32],
        cols: usize,
        rows: usize,
    }

    fn place(
        st: &State,
        row: usize,
        row_sum: u32,
        last_col: usize,
        used: u32,
        placements: &mut Vec<(usize, usize, u32)>,
        out: &mut Vec<FillingMatrix>,
    ) {
        let k = placements.len();
        if k == st.parts.len() {
            if row + 1 == st.rows && row_sum == st.row_sums[row] {
                out.push(FillingMatrix::from_placements(st.rows, st.cols, placements));
            }
            return;
        }
        let value = st.parts[k];
        // stay in the current row, strictly right of the last entry
        for col in (last_col + 1)..st.cols {
            if used & (1 << col) != 0 || st.col_values[col] != value {
                continue;
            }
            if row_sum + value > st.row_sums[row] {
                continue;
            }
            placements.push((row, col, value));
            place(
                st,
                row,
                row_sum + value,
                col,
                used | (1 << col),
                placements,
                out,
            );
            placements.pop();
        }
        // open the next row once the current one is complete
        if row_sum == st.row_sums[row] && row + 1 < st.rows {
            for col in 0..st.cols {
                if used & (1 << col) != 0 || st.col_values[col] != value {
                    continue;
                }
                if value > st.row_sums[row + 1] {
                    continue;
                }
                placements.push((row + 1, col, value));
                place(st, row + 1, value, col, used | (1 << col), placements, out);
                placements.pop();
            }
        }
    }

    let st = State {
        col_values,
        parts,
        row_sums,
        cols,
        rows,
    };
    if rows > 0 {
        // seed the first row with the first part
        let value = parts[0];
        for col in 0..cols {
            if st.col_values[col] != value || value > row_sums[0] {
                continue;
            }
            placements.push((0, col, value));
            place(&st, 0, value, col, 1 << col, &mut placements, &mut out);
            placements.pop();
        }
    }
    out
}

/// All fillings satisfying conditions (1)-(3) for the pair `(alpha, beta)`.
pub fn enumerate_r(
    alpha: &Composition,
    beta: &Composition,
) -> Result<Vec<FillingMatrix>, CompositionError> {
    ensure_sizes(alpha, beta)?;
    Ok(enumerate_reading(alpha, beta))
}

pub fn count_r(alpha: &Composition, beta: &Composition) -> Result<u64, CompositionError> {
    Ok(enumerate_r(alpha, beta)?.len() as u64)
}

/// Fillings for partitions with the reading-word condition dropped.
pub fn enumerate_r_symmetric(
    lambda: &Partition,
    mu: &Partition,
) -> Result<Vec<FillingMatrix>, CompositionError> {
    ensure_sizes(lambda.as_composition(), mu.as_composition())?;
    let cols = lambda.len();
    let rows = mu.len();
    let col_values = lambda.parts();
    let row_sums = mu.parts();
    let mut out = Vec::new();
    let mut assignment: Vec<usize> = Vec::with_capacity(cols);
    fn go(
        col_values: &[u32],
        row_sums: &[u32],
        partial: &mut Vec<u32>,
        col: usize,
        assignment: &mut Vec<usize>,
        out: &mut Vec<FillingMatrix>,
    ) {
        if col == col_values.len() {
            if partial.iter().zip(row_sums).all(|(p, s)| p == s) {
                let placements: Vec<(usize, usize, u32)> = assignment
                    .iter()
                    .enumerate()
                    .map(|(j, &r)| (r, j, col_values[j]))
                    .collect();
                out.push(FillingMatrix::from_placements(
                    row_sums.len(),
                    col_values.len(),
                    &placements,
                ));
            }
            return;
        }
        for row in 0..row_sums.len() {
            if partial[row] + col_values[col] > row_sums[row] {
                continue;
            }
            partial[row] += col_values[col];
            assignment.push(row);
            go(col_values, row_sums, partial, col + 1, assignment, out);
            assignment.pop();
            partial[row] -= col_values[col];
        }
    }
    let mut partial = vec![0; rows];
    if cols == 0 {
        if rows == 0 {
            out.push(FillingMatrix::from_placements(0, 0, &[]));
        }
        return Ok(out);
    }
    go(
        col_values,
        row_sums,
        &mut partial,
        0,
        &mut assignment,
        &mut out,
    );
    Ok(out)
}

pub fn count_r_symmetric(lambda: &Partition, mu: &Partition) -> Result<u64, CompositionError> {
    Ok(enumerate_r_symmetric(lambda, mu)?.len() as u64)
}

/// `R`-fillings additionally satisfying the row overlap condition.
pub fn enumerate_q(
    alpha: &Composition,
    beta: &Composition,
) -> Result<Vec<FillingMatrix>, CompositionError> {
    Ok(enumerate_r(alpha, beta)?
        .into_iter()
        .filter(FillingMatrix::rows_overlap)
        .collect())
}

pub fn count_q(alpha: &Composition, beta: &Composition) -> Result<u64, CompositionError> {
    Ok(enumerate_q(alpha, beta)?.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rows(m: &FillingMatrix) -> Vec<Vec<u32>> {
        (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
    }

    #[test]
    fn r_counts() {
        assert_eq!(count_r(&c(&[1, 2, 1]), &c(&[1, 3])).unwrap(), 2);
        assert_eq!(count_r(&c(&[1, 2, 1]), &c(&[1, 2, 1])).unwrap(), 2);
        assert_eq!(count_r(&c(&[1, 2, 1]), &c(&[4])).unwrap(), 0);
        assert_eq!(
            count_r(&Composition::empty(), &Composition::empty()).unwrap(),
            1
        );
        assert!(count_r(&c(&[2]), &c(&[3])).is_err());
    }

    #[test]
    fn r_matrices_for_one_two_one() {
        let three_row: Vec<Vec<Vec<u32>>> = enumerate_r(&c(&[1, 2, 1]), &c(&[1, 2, 1]))
            .unwrap()
            .iter()
            .map(rows)
            .collect();
        let mut expected_three = vec![
            vec![vec![0, 1, 0], vec![2, 0, 0], vec![0, 0, 1]],
            vec![vec![0, 0, 1], vec![2, 0, 0], vec![0, 1, 0]],
        ];
        let mut got = three_row.clone();
        got.sort();
        expected_three.sort();
        assert_eq!(got, expected_three);

        let two_row: Vec<Vec<Vec<u32>>> = enumerate_r(&c(&[1, 2, 1]), &c(&[1, 3]))
            .unwrap()
            .iter()
            .map(rows)
            .collect();
        let mut expected_two = vec![
            vec![vec![0, 1, 0], vec![2, 0, 1]],
            vec![vec![0, 0, 1], vec![2, 1, 0]],
        ];
        let mut got = two_row.clone();
        got.sort();
        expected_two.sort();
        assert_eq!(got, expected_two);
    }

    #[test]
    fn r_symmetric_counts() {
        assert_eq!(count_r_symmetric(&p(&[2, 1, 1]), &p(&[4])).unwrap(), 1);
        assert_eq!(count_r_symmetric(&p(&[2, 1, 1]), &p(&[3, 1])).unwrap(), 2);
        assert_eq!(count_r_symmetric(&p(&[2, 1, 1]), &p(&[2, 2])).unwrap(), 2);
        assert_eq!(
            count_r_symmetric(&p(&[2, 1, 1]), &p(&[2, 1, 1])).unwrap(),
            2
        );
        let single = enumerate_r_symmetric(&p(&[2, 1, 1]), &p(&[4])).unwrap();
        assert_eq!(rows(&single[0]), vec![vec![2, 1, 1]]);
    }

    #[test]
    fn q_counts() {
        assert_eq!(count_q(&c(&[1, 2, 1]), &c(&[1, 3])).unwrap(), 2);
        assert_eq!(count_q(&c(&[1, 2, 1]), &c(&[1, 2, 1])).unwrap(), 0);
        assert_eq!(count_q(&c(&[6]), &c(&[6])).unwrap(), 1);
        assert_eq!(count_q(&c(&[1, 1]), &c(&[1, 1])).unwrap(), 1);
    }

    #[test]
    fn q_matrices_for_one_two_one() {
        let got: Vec<Vec<Vec<u32>>> = enumerate_q(&c(&[1, 2, 1]), &c(&[1, 3]))
            .unwrap()
            .iter()
            .map(rows)
            .collect();
        let mut got = got;
        got.sort();
        let mut expected = vec![
            vec![vec![0, 1, 0], vec![2, 0, 1]],
            vec![vec![0, 0, 1], vec![2, 1, 0]],
        ];
        expected.sort();
        assert_eq!(got, expected);
    }

    /// Independent oracle: place the sorted parts column by column into any
    /// row, then check all conditions on the finished matrix.
    fn naive_fillings(
        alpha: &Composition,
        beta: &Composition,
        reading: bool,
    ) -> Vec<FillingMatrix> {
        let cols = alpha.len();
        let rows = beta.len();
        let sorted = alpha.underlying_partition();
        let mut out = Vec::new();
        let assignments = rows.checked_pow(cols as u32).unwrap_or(0);
        if cols == 0 {
            return if alpha.size() == beta.size() && rows == 0 {
                vec![FillingMatrix::from_placements(0, 0, &[])]
            } else {
                Vec::new()
            };
        }
        for code in 0..assignments {
            let mut rest = code;
            let mut placement = Vec::with_capacity(cols);
            for col in 0..cols {
                placement.push((rest % rows, col, sorted.parts()[col]));
                rest /= rows;
            }
            let m = FillingMatrix::from_placements(rows, cols, &placement);
            let sums_ok = (0..rows).all(|r| m.row(r).iter().sum::<u32>() == beta.parts()[r]);
            if !sums_ok {
                continue;
            }
            if reading {
                let mut cells: Vec<(usize, usize)> =
                    placement.iter().map(|&(r, c, _)| (r, c)).collect();
                cells.sort();
                let word: Vec<u32> = cells.iter().map(|&(r, c)| m.get(r, c)).collect();
                if word != alpha.parts() {
                    continue;
                }
            }
            out.push(m);
        }
        out
    }

    #[test]
    fn backtracking_matches_naive_oracle() {
        for n in 0..=5u32 {
            let all = Composition::all_of(n);
            for alpha in &all {
                for beta in &all {
                    let fast = enumerate_r(alpha, beta).unwrap();
                    let mut fast_sorted = fast.clone();
                    fast_sorted.sort();
                    let mut naive = naive_fillings(alpha, beta, true);
                    naive.sort();
                    assert_eq!(fast_sorted, naive, "alpha={alpha} beta={beta}");
                    let q_fast = count_q(alpha, beta).unwrap();
                    let q_naive = fillings_overlap_count(&naive);
                    assert_eq!(q_fast, q_naive, "alpha={alpha} beta={beta}");
                }
            }
            for lambda in Partition::all_of(n) {
                for mu in Partition::all_of(n) {
                    let fast = count_r_symmetric(&lambda, &mu).unwrap();
                    let naive =
                        naive_fillings(lambda.as_composition(), mu.as_composition(), false).len();
                    assert_eq!(fast, naive as u64, "lambda={lambda} mu={mu}");
                }
            }
        }
    }

    fn fillings_overlap_count(ms: &[FillingMatrix]) -> u64 {
        ms.iter().filter(|m| m.rows_overlap()).count() as u64
    }

    #[test]
    fn rendering() {
        let ms = enumerate_r(&c(&[1, 2, 1]), &c(&[1, 3])).unwrap();
        assert_eq!(ms[0].render_plain(), ". 1 .\n2 . 1");
        assert_eq!(ms[0].to_json().to_string(), "[[0,1,0],[2,0,1]]");
        assert_eq!(
            ms[0].render_latex(),
            r"\begin{pmatrix}&1&\\2&&1\end{pmatrix}"
        );
    }
}
