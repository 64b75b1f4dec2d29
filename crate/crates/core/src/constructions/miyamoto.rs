use super::bordered::BorderedArray;
use crate::error::{Error, Result};
use crate::exactmat::{is_hadamard, Matrix, SignMatrix};
use crate::galois::field;

const PRINTED: [[i8; 8]; 8] = [
    [1, -1, 1, 1, 1, 1, 1, 1],
    [-1, 1, 1, 1, 1, 1, 1, 1],
    [-1, -1, 1, -1, 1, 1, -1, -1],
    [-1, -1, -1, 1, 1, 1, -1, -1],
    [-1, -1, -1, -1, 1, -1, 1, 1],
    [-1, -1, -1, -1, -1, 1, 1, 1],
    [-1, -1, 1, 1, -1, -1, 1, -1],
    [-1, -1, 1, 1, -1, -1, -1, 1],
];

/// The five independent sign choices in the `U`/`V` blocks.
#[derive(Clone, Copy, Debug)]
struct Variant {
    c1: i8,
    c2: i8,
    c2t: i8,
    c4: i8,
    v42: i8,
}

impl Variant {
    fn all() -> impl Iterator<Item = Variant> {
        (0u8..32).map(|b| {
            let s = |k: u8| if b >> k & 1 == 1 { -1 } else { 1 };
            Variant { c1: s(0), c2: s(1), c2t: s(2), c4: s(3), v42: s(4) }
        })
    }
}

/// Hadamard matrix of order `4q` for a prime power `q = 1 mod 4`, given a
/// Hadamard matrix `k` of order `q - 1`.
///
/// Sixteen blocks `T_ij = [[U + V, U - V], [U - V, U + V]]` come from the
/// quadratic character on squares and nonsquares and from the four
/// quadrants of the normalized `k`. They are interleaved with all-ones
/// borders into an 8x8 block array whose signs start from the classical
/// layout and are repaired by backtracking where block rows fail to
/// cancel. The assembled matrix is then re-checked.
pub fn miyamoto(q: u64, k: &SignMatrix) -> Result<SignMatrix> {
    if q % 4 != 1 {
        return Err(Error::NotApplicable(format!("Miyamoto construction needs q = 1 mod 4, got {q}")));
    }
    let f = field(q)?;
    if k.order() as u64 != q - 1 {
        return Err(Error::invalid(format!("need a Hadamard matrix of order {}", q - 1)));
    }
    let k = normalize(k.as_matrix());
    for variant in Variant::all() {
        let array = BorderedArray { blocks: block_grid(&f, &k, variant)?, reference: PRINTED };
        if let Some(signs) = array.solve() {
            let h = array.assemble(&signs)?;
            if is_hadamard(&h, false) {
                return h.try_into();
            }
        }
    }
    Err(Error::check(format!("Miyamoto q={q}"), "no block sign layout closes"))
}

fn normalize(k: &Matrix) -> Matrix {
    let n = k.order();
    Matrix::from_fn(n, n, |i, j| k.get(i, j) * k.get(0, j) * k.get(i, 0) * k.get(0, 0))
        .expect("signs stay in range")
}

fn block_grid(f: &crate::galois::FieldCtx, k: &Matrix, var: Variant) -> Result<Vec<Vec<Matrix>>> {
    let q = f.order();
    let m = ((q - 1) / 2) as usize;
    let (sq, ns): (Vec<u32>, Vec<u32>) = (1..q).partition(|&x| f.quadratic_character(x) == Ok(1));
    let chi = |a: u32, b: u32| f.quadratic_character(f.sub(b, a)).expect("field element");
    let x = |rows: &[u32], cols: &[u32], s: i8| {
        Matrix::from_fn(m, m, |i, j| s * chi(rows[i], cols[j])).expect("ternary")
    };
    let c1 = x(&sq, &sq, -var.c1);
    let c2 = x(&sq, &ns, -var.c2);
    let c4 = x(&ns, &ns, var.c4);
    let c2t = c2.transpose().scaled(-var.c2t);
    let quad = |r0: usize, c0: usize, s: i8| {
        Matrix::from_fn(m, m, |i, j| s * k.get(r0 + i, c0 + j)).expect("signs")
    };
    let (k1, k2, k3, k4) = (quad(0, 0, 1), quad(0, m, 1), quad(m, 0, -1), quad(m, m, 1));
    let zero = Matrix::zeros(m, m);
    let mut u = vec![vec![zero.clone(); 4]; 4];
    let mut v = vec![vec![zero.clone(); 4]; 4];
    for a in [0, 2] {
        u[a][a] = c1.clone();
        u[a][a + 1] = c2.clone();
        u[a + 1][a] = c2t.clone();
        u[a + 1][a + 1] = c4.clone();
    }
    v[0][2] = k1.clone();
    v[2][0] = k1.transpose().neg();
    v[0][3] = k2.clone();
    v[3][0] = k2.transpose().neg();
    v[1][2] = k3.clone();
    v[2][1] = k3.transpose().neg();
    v[1][3] = k4.clone();
    v[3][1] = k4.transpose().scaled(var.v42);
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = Matrix::identity(m);
    }
    let ones_row = Matrix::filled(1, 2 * m, 1)?;
    let ones_col = ones_row.transpose();
    let one = Matrix::filled(1, 1, 1)?;
    let mut grid: Vec<Vec<_>> = (0..8).map(|_| Vec::with_capacity(8)).collect();
    for (r, grid_row) in grid.iter_mut().enumerate() {
        for c in 0..8 {
            grid_row.push(match (r % 2, c % 2) {
                (0, 0) => one.clone(),
                (0, _) => ones_row.clone(),
                (_, 0) => ones_col.clone(),
                _ => t_block(&u[r / 2][c / 2], &v[r / 2][c / 2])?,
            });
        }
    }
    Ok(grid)
}

fn t_block(u: &Matrix, v: &Matrix) -> Result<Matrix> {
    let m = u.order();
    let plus = u.add(v)?;
    let minus = u.sub(v)?;
    Matrix::from_fn(2 * m, 2 * m, |i, j| {
        let src = if (i < m) == (j < m) { &plus } else { &minus };
        src.get(i % m, j % m)
    })
}
