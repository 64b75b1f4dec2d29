use crate::error::Result;
use crate::exactmat::Matrix;

/// An 8x8 array of unsigned blocks together with a reference sign layout.
///
/// [`BorderedArray::solve`] keeps the reference signs wherever possible:
/// for every block row the candidates are the reference row with `k`
/// flipped entries, tried in increasing `k`, and a row is accepted when all
/// of its block cross products with earlier rows cancel.
pub(crate) struct BorderedArray {
    pub blocks: Vec<Vec<Matrix>>,
    pub reference: [[i8; 8]; 8],
}

impl BorderedArray {
    pub fn solve(&self) -> Option<[[i8; 8]; 8]> {
        let products: Vec<Vec<Vec<Vec<i64>>>> = (0..8)
            .map(|r| {
                (0..r)
                    .map(|r2| {
                        (0..8)
                            .map(|c| {
                                self.blocks[r][c]
                                    .matmul_wide(&self.blocks[r2][c].transpose())
                                    .expect("block shapes agree")
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut flips: Vec<u32> = (0..256).collect();
        flips.sort_by_key(|f| f.count_ones());
        let mut chosen = [[0i8; 8]; 8];
        self.extend(0, &mut chosen, &flips, &products).then_some(chosen)
    }

    fn extend(
        &self,
        r: usize,
        chosen: &mut [[i8; 8]; 8],
        flips: &[u32],
        products: &[Vec<Vec<Vec<i64>>>],
    ) -> bool {
        if r == 8 {
            return true;
        }
        for &f in flips {
            // Negating a whole row never changes orthogonality.
            if f & 1 == 1 {
                continue;
            }
            let mut s = self.reference[r];
            for (c, x) in s.iter_mut().enumerate() {
                if f >> c & 1 == 1 {
                    *x = -*x;
                }
            }
            let cancels = (0..r).all(|r2| {
                let len = products[r][r2][0].len();
                (0..len).all(|e| {
                    (0..8).map(|c| (s[c] * chosen[r2][c]) as i64 * products[r][r2][c][e]).sum::<i64>() == 0
                })
            });
            if cancels {
                chosen[r] = s;
                if self.extend(r + 1, chosen, flips, products) {
                    return true;
                }
            }
        }
        false
    }

    pub fn assemble(&self, signs: &[[i8; 8]; 8]) -> Result<Matrix> {
        let heights: Vec<usize> = self.blocks.iter().map(|row| row[0].rows()).collect();
        let widths: Vec<usize> = self.blocks[0].iter().map(Matrix::cols).collect();
        let starts = |sizes: &[usize]| {
            let mut acc = 0;
            sizes
                .iter()
                .map(|s| {
                    let start = acc;
                    acc += s;
                    start
                })
                .collect::<Vec<_>>()
        };
        let (ro, co) = (starts(&heights), starts(&widths));
        let n = heights.iter().sum();
        let mut h = Matrix::zeros(n, n);
        for (r, row) in self.blocks.iter().enumerate() {
            for (c, b) in row.iter().enumerate() {
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        h.set(ro[r] + i, co[c] + j, signs[r][c] * b.get(i, j))?;
                    }
                }
            }
        }
        Ok(h)
    }
}
