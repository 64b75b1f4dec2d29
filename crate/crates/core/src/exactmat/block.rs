use crate::error::{Error, Result};

use super::matrix::Matrix;

/// One cell of a block grid.
#[derive(Clone, Debug)]
pub enum Cell<'a> {
    /// `sign * m` or `sign * m^T`.
    Block {
        m: &'a Matrix,
        sign: i8,
        transpose: bool,
    },
    /// A constant block, e.g. a border row of ones.
    Fill { rows: usize, cols: usize, value: i8 },
}

impl<'a> Cell<'a> {
    pub fn pos(m: &'a Matrix) -> Self {
        Cell::Block {
            m,
            sign: 1,
            transpose: false,
        }
    }

    pub fn neg(m: &'a Matrix) -> Self {
        Cell::Block {
            m,
            sign: -1,
            transpose: false,
        }
    }

    pub fn signed(m: &'a Matrix, sign: i8) -> Self {
        Cell::Block {
            m,
            sign,
            transpose: false,
        }
    }

    pub fn fill(rows: usize, cols: usize, value: i8) -> Self {
        Cell::Fill { rows, cols, value }
    }

    /// Same cell, transposed.
    pub fn t(self) -> Self {
        match self {
            Cell::Block { m, sign, transpose } => Cell::Block {
                m,
                sign,
                transpose: !transpose,
            },
            Cell::Fill { rows, cols, value } => Cell::Fill {
                rows: cols,
                cols: rows,
                value,
            },
        }
    }

    fn shape(&self) -> (usize, usize) {
        match self {
            Cell::Block { m, transpose, .. } => {
                if *transpose {
                    (m.cols(), m.rows())
                } else {
                    (m.rows(), m.cols())
                }
            }
            Cell::Fill { rows, cols, .. } => (*rows, *cols),
        }
    }

    fn entry(&self, i: usize, j: usize) -> i8 {
        match self {
            Cell::Block { m, sign, transpose } => {
                let v = if *transpose { m.get(j, i) } else { m.get(i, j) };
                v * sign
            }
            Cell::Fill { value, .. } => *value,
        }
    }
}

/// Rectangular grid of cells. All cells in a grid row share a height and all
/// cells in a grid column share a width.
#[derive(Clone, Debug, Default)]
pub struct BlockSpec<'a> {
    grid: Vec<Vec<Cell<'a>>>,
}

impl<'a> BlockSpec<'a> {
    pub fn new(grid: Vec<Vec<Cell<'a>>>) -> Self {
        BlockSpec { grid }
    }

    pub fn assemble(&self) -> Result<Matrix> {
        assemble(self)
    }
}

/// Places every cell of `spec` into one concrete matrix.
pub fn assemble(spec: &BlockSpec<'_>) -> Result<Matrix> {
    let grid = &spec.grid;
    let Some(first) = grid.first() else {
        return Err(Error::Dimension("empty block grid".into()));
    };
    let ncols = first.len();
    if ncols == 0 || grid.iter().any(|r| r.len() != ncols) {
        return Err(Error::Dimension("ragged block grid".into()));
    }
    let heights: Vec<usize> = grid.iter().map(|r| r[0].shape().0).collect();
    let widths: Vec<usize> = first.iter().map(|c| c.shape().1).collect();
    for (bi, row) in grid.iter().enumerate() {
        for (bj, cell) in row.iter().enumerate() {
            let (h, w) = cell.shape();
            if h != heights[bi] || w != widths[bj] {
                return Err(Error::Dimension(format!(
                    "block ({bi}, {bj}) is {h}x{w}, expected {}x{}",
                    heights[bi], widths[bj]
                )));
            }
            let (Cell::Block { sign, .. } | Cell::Fill { value: sign, .. }) = cell;
            if !(-1..=1).contains(sign) {
                return Err(Error::invalid(format!("block ({bi}, {bj}) has scale {sign}")));
            }
        }
    }
    let rows: usize = heights.iter().sum();
    let cols: usize = widths.iter().sum();
    let mut data = vec![0i8; rows * cols];
    let mut r0 = 0;
    for (bi, row) in grid.iter().enumerate() {
        let mut c0 = 0;
        for (bj, cell) in row.iter().enumerate() {
            for i in 0..heights[bi] {
                let base = (r0 + i) * cols + c0;
                for j in 0..widths[bj] {
                    data[base + j] = cell.entry(i, j);
                }
            }
            c0 += widths[bj];
        }
        r0 += heights[bi];
    }
    Matrix::new(rows, cols, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::circulant;

    #[test]
    fn doubling_grid() {
        let h = Matrix::identity(1);
        let spec = BlockSpec::new(vec![
            vec![Cell::pos(&h), Cell::pos(&h)],
            vec![Cell::pos(&h), Cell::neg(&h)],
        ]);
        assert_eq!(assemble(&spec).unwrap().to_rows(), vec![vec![1, 1], vec![1, -1]]);
    }

    #[test]
    fn transpose_flag_matches_manual_transpose() {
        let m = circulant(&[1, -1, 0]).unwrap();
        let spec = BlockSpec::new(vec![vec![Cell::pos(&m).t()]]);
        assert_eq!(assemble(&spec).unwrap(), m.transpose());
    }

    #[test]
    fn borders_and_mismatch() {
        let m = Matrix::identity(2);
        let spec = BlockSpec::new(vec![
            vec![Cell::fill(1, 1, 1), Cell::fill(1, 2, 1)],
            vec![Cell::fill(2, 1, -1), Cell::pos(&m)],
        ]);
        let out = assemble(&spec).unwrap();
        assert_eq!(out.to_rows(), vec![vec![1, 1, 1], vec![-1, 1, 0], vec![-1, 0, 1]]);

        let bad = BlockSpec::new(vec![
            vec![Cell::fill(1, 1, 1), Cell::pos(&m)],
            vec![Cell::fill(2, 1, -1), Cell::pos(&m)],
        ]);
        assert!(matches!(assemble(&bad), Err(Error::Dimension(_))));
        assert!(assemble(&BlockSpec::default()).is_err());
    }
}
