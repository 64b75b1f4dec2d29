use crate::diffsets::{AbelianGroup, SubsetFamily};
use crate::error::{Error, Result};
use crate::exactmat::{back_identity, gram_sum_is_scalar, BlockSpec, Cell, Matrix, SignMatrix};

/// The Goethals-Seidel array on four square blocks of one order, with no
/// conditions checked. Ternary blocks are allowed.
pub(crate) fn gs_array(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Matrix> {
    gs_array_with(a, b, c, d, &back_identity(a.order())?)
}

/// The same array with an explicit reflection `R`, e.g. `R_xy = [x + y = 0]`
/// for blocks developed over a non-cyclic group.
pub(crate) fn gs_array_with(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix, r: &Matrix) -> Result<Matrix> {
    let n = a.order();
    if [a, b, c, d, r].iter().any(|m| !m.is_square() || m.rows() != n) {
        return Err(Error::Dimension("Goethals-Seidel blocks differ in order".into()));
    }
    let br = b.matmul(r)?;
    let cr = c.matmul(r)?;
    let dr = d.matmul(r)?;
    let dtr = d.transpose().matmul(r)?;
    let ctr = c.transpose().matmul(r)?;
    let btr = b.transpose().matmul(r)?;
    use Cell as C;
    BlockSpec::new(vec![
        vec![C::pos(a), C::pos(&br), C::pos(&cr), C::pos(&dr)],
        vec![C::neg(&br), C::pos(a), C::pos(&dtr), C::neg(&ctr)],
        vec![C::neg(&cr), C::neg(&dtr), C::pos(a), C::pos(&btr)],
        vec![C::neg(&dr), C::pos(&ctr), C::neg(&btr), C::pos(a)],
    ])
    .assemble()
}

/// Hadamard matrix of order `4n` from circulant `+-1` blocks with
/// `A A^T + B B^T + C C^T + D D^T = 4n I`; skew when `A - I` is skew.
pub fn goethals_seidel(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<SignMatrix> {
    let blocks = [a, b, c, d];
    if let Some(k) = blocks.iter().position(|m| !m.is_square() || !m.is_circulant()) {
        return Err(Error::invalid(format!("block {k} is not a square circulant")));
    }
    if blocks.iter().any(|m| !m.is_sign_matrix()) {
        return Err(Error::invalid("Goethals-Seidel blocks must be +-1 matrices"));
    }
    let n = a.order();
    if !gram_sum_is_scalar(&blocks, 4 * n as i64) {
        return Err(Error::invalid("sum of X X^T is not 4nI"));
    }
    gs_array(a, b, c, d)?.try_into()
}

/// `[[A, B, C, D], [-B, A, -D, C], [-C, D, A, -B], [-D, -C, B, A]]`.
pub(crate) fn williamson_array(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Matrix> {
    use Cell as C;
    BlockSpec::new(vec![
        vec![C::pos(a), C::pos(b), C::pos(c), C::pos(d)],
        vec![C::neg(b), C::pos(a), C::neg(d), C::pos(c)],
        vec![C::neg(c), C::pos(d), C::pos(a), C::neg(b)],
        vec![C::neg(d), C::neg(c), C::pos(b), C::pos(a)],
    ])
    .assemble()
}

/// `M_ij = inside` when `i - j` (or `j - i` with `transpose`) lies in `set`,
/// `-inside` otherwise.
pub(crate) fn set_matrix(group: &AbelianGroup, set: &[u32], inside: i8, transpose: bool) -> Matrix {
    let v = group.order() as usize;
    let mut member = vec![false; v];
    for &x in set {
        member[x as usize] = true;
    }
    Matrix::from_fn(v, v, |i, j| {
        let (a, b) = if transpose { (j, i) } else { (i, j) };
        if member[group.sub(a as u32, b as u32) as usize] {
            inside
        } else {
            -inside
        }
    })
    .expect("signs are ternary")
}

/// Hadamard matrix of order `4v` from a `4-{v; k_1..k_4; lambda}`
/// SDS with `k_1 + k_2 + k_3 + k_4 = v + lambda`: `(A_l)_ij = -1` when
/// `i - j` lies in `S_l`, placed in the Goethals-Seidel array. Skew when
/// `S_1` is skew.
pub fn hadamard_from_sds(family: &SubsetFamily) -> Result<SignMatrix> {
    if family.sets.len() != 4 {
        return Err(Error::invalid("need four subsets"));
    }
    let v = family.order() as u64;
    let total: u64 = family.sizes().iter().map(|&k| k as u64).sum();
    if total != v + family.lambda {
        return Err(Error::invalid(format!(
            "{}: set sizes sum to {total}, expected v + lambda = {}",
            family.params(),
            v + family.lambda
        )));
    }
    if let Some(d) = family.defect(false) {
        return Err(Error::check(family.params(), d));
    }
    let m: Vec<Matrix> = family
        .sets
        .iter()
        .map(|s| set_matrix(&family.group, s, -1, false))
        .collect();
    let g = &family.group;
    let r = if g.is_cyclic() {
        back_identity(v as usize)?
    } else {
        Matrix::from_fn(v as usize, v as usize, |x, y| i8::from(g.add(x as u32, y as u32) == 0))?
    };
    gs_array_with(&m[0], &m[1], &m[2], &m[3], &r)?.try_into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::{circulant, is_hadamard, is_skew_hadamard};

    #[test]
    fn gs_on_ones() {
        let one = Matrix::identity(1);
        let h = goethals_seidel(&one, &one, &one, &one).unwrap();
        let want = vec![vec![1, 1, 1, 1], vec![-1, 1, 1, -1], vec![-1, -1, 1, 1], vec![-1, 1, -1, 1]];
        assert_eq!(h.to_rows(), want);
        assert!(is_skew_hadamard(&h, true));
        let not_circ = Matrix::from_rows(&[[1, 1], [1, -1]]).unwrap();
        assert!(goethals_seidel(&not_circ, &not_circ, &not_circ, &not_circ).is_err());
    }

    #[test]
    fn williamson_order_three() {
        let a = circulant(&[1, 1, 1]).unwrap();
        let b = circulant(&[1, -1, -1]).unwrap();
        let h = williamson_array(&a, &b, &b, &b).unwrap();
        assert!(is_hadamard(&h, true));
        assert!(is_hadamard(&goethals_seidel(&a, &b, &b, &b).unwrap(), true));
    }

    #[test]
    fn sds_to_hadamard() {
        let z7 = AbelianGroup::cyclic(7);
        let fam = SubsetFamily::new(z7, vec![vec![1, 2, 4], vec![1, 2, 4], vec![1, 2, 4], vec![0]], 3)
            .unwrap();
        let h = hadamard_from_sds(&fam).unwrap();
        assert_eq!(h.order(), 28);
        assert!(is_skew_hadamard(&h, true));
        let z3 = AbelianGroup::cyclic(3);
        let short = SubsetFamily::new(z3, vec![vec![], vec![], vec![], vec![]], 0).unwrap();
        assert!(hadamard_from_sds(&short).is_err());
    }
}
