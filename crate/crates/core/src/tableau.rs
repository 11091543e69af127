//! Semistandard skew tableaux and their column words.

use crate::partition::SkewShape;

/// A semistandard filling of a skew shape; `rows[i]` holds the entries of
/// row `i` from column `inner_i` to `outer_i - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Builds a tableau from explicit rows, checking shape and semistandardness.
    pub fn from_rows(shape: SkewShape, rows: Vec<Vec<usize>>) -> Option<Self> {
        let t = Self { shape, rows };
        t.is_valid().then_some(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let start = self.shape.inner().part(row);
        if col < start {
            return None;
        }
        self.rows.get(row)?.get(col - start).copied()
    }

    fn is_valid(&self) -> bool {
        let (outer, inner) = (self.shape.outer(), self.shape.inner());
        if self.rows.len() != outer.len() {
            return false;
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != outer.part(i) - inner.part(i) || row.contains(&0) {
                return false;
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
        }
        for (i, j) in self.shape.cells() {
            if i > 0 {
                if let Some(above) = self.entry(i - 1, j) {
                    if above >= self.entry(i, j).unwrap() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Entries read bottom to top within each column, columns left to right.
    pub fn column_word(&self) -> Vec<usize> {
        let width = self.shape.outer().part(0);
        let mut word = Vec::with_capacity(self.shape.size());
        for col in 0..width {
            for row in (0..self.shape.outer().len()).rev() {
                if let Some(e) = self.entry(row, col) {
                    word.push(e);
                }
            }
        }
        word
    }
}

/// All semistandard tableaux of `shape` with entries in `1..=max_entry`.
///
/// Cells are filled column by column (left to right, top to bottom) trying
/// entries in increasing order, so the output order is deterministic.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: usize) -> Vec<Tableau> {
    let (outer, inner) = (shape.outer(), shape.inner());
    let width = outer.part(0);
    let mut cells = Vec::with_capacity(shape.size());
    for col in 0..width {
        for row in 0..outer.len() {
            if inner.part(row) <= col && col < outer.part(row) {
                cells.push((row, col));
            }
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..outer.len()).map(|i| vec![0; outer.part(i)]).collect();
    let mut out = Vec::new();
    fill(shape, &cells, 0, max_entry, &mut grid, &mut out);
    out
}

fn fill(
    shape: &SkewShape,
    cells: &[(usize, usize)],
    k: usize,
    max_entry: usize,
    grid: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    let inner = shape.inner();
    if k == cells.len() {
        let rows = grid.iter().enumerate().map(|(i, r)| r[inner.part(i)..].to_vec()).collect();
        out.push(Tableau { shape: shape.clone(), rows });
        return;
    }
    let (i, j) = cells[k];
    let mut lo = 1;
    if j > inner.part(i) {
        lo = lo.max(grid[i][j - 1]);
    }
    if i > 0 && j >= inner.part(i - 1) {
        lo = lo.max(grid[i - 1][j] + 1);
    }
    for e in lo..=max_entry {
        grid[i][j] = e;
        fill(shape, cells, k + 1, max_entry, grid, out);
    }
    grid[i][j] = 0;
}
