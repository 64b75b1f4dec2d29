use hadamard::exactmat::{
    abs_det_is_maximal, determinant, hadamard_defect, is_hadamard, is_skew_hadamard, parse_any, parse_csv,
    parse_pm1, skew_hadamard_defect, tensor, to_csv, to_pm1, Defect, Matrix, MatrixDocument, SkewDefect,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn sylvester(k: u32) -> Matrix {
    let h2 = Matrix::from_rows(&[[1i8, 1], [1, -1]]).unwrap();
    (1..k).fold(h2.clone(), |acc, _| tensor(&acc, &h2))
}

fn sign_matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        let (r, c) = (n, n);
        prop::collection::vec(prop::bool::ANY, r * c)
            .prop_map(move |bits| Matrix::new(r, c, bits.into_iter().map(|b| if b { 1 } else { -1 }).collect()).unwrap())
    })
}

fn ternary_square(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(-1i8..=1, n * n).prop_map(move |d| Matrix::new(n, n, d).unwrap())
    })
}

/// Cofactor expansion, fine for n <= 6.
fn laplace(m: &Matrix) -> i64 {
    let n = m.rows();
    if n == 1 {
        return m.get(0, 0) as i64;
    }
    (0..n)
        .map(|j| {
            let minor = Matrix::from_fn(n - 1, n - 1, |r, c| m.get(r + 1, if c < j { c } else { c + 1 })).unwrap();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m.get(0, j) as i64 * laplace(&minor)
        })
        .sum()
}

#[test]
fn sylvester_family_is_hadamard() {
    for k in 1..=5 {
        let h = sylvester(k);
        assert!(is_hadamard(&h, false));
        assert!(abs_det_is_maximal(&h));
        assert_eq!(hadamard_defect(&h), None);
    }
}

#[test]
fn defects_name_the_first_failure() {
    let rect = Matrix::filled(2, 3, 1).unwrap();
    assert_eq!(hadamard_defect(&rect), Some(Defect::NotSquare { rows: 2, cols: 3 }));

    let mut h = sylvester(2);
    h.set(2, 1, 0).unwrap();
    assert!(matches!(hadamard_defect(&h), Some(Defect::BadEntry { row: 2, col: 1, value: 0 })));

    let ones = Matrix::filled(4, 4, 1).unwrap();
    assert!(matches!(hadamard_defect(&ones), Some(Defect::NotOrthogonal { first: 0, second: 1, dot: 4 })));

    let s = sylvester(2);
    assert!(matches!(skew_hadamard_defect(&s), Some(SkewDefect::NotSkew { .. })));
    let skew = Matrix::from_rows(&[[1i8, 1], [-1, 1]]).unwrap();
    assert!(is_skew_hadamard(&skew, false));
}

#[test]
fn parsers_reject_bad_input() {
    assert!(parse_pm1("").is_err());
    assert!(parse_pm1("++\n+").is_err());
    assert!(parse_pm1("+x\n--").is_err());
    assert!(parse_csv("1,2\n1,1").is_err());
    assert!(parse_csv("1,1\n1").is_err());
    assert!(MatrixDocument::from_json("{\"order\": 2}").is_err());
    assert!(parse_any("not a matrix").is_err());
}

#[test]
fn json_document_round_trip() {
    let h = sylvester(3);
    let doc = MatrixDocument::new(&h, false, Some("Sylvester".into()));
    let back = MatrixDocument::from_json(&doc.to_json()).unwrap();
    assert_eq!(back.matrix().unwrap(), h);
    assert_eq!(parse_any(&doc.to_json()).unwrap(), h);
}

#[test]
fn determinant_of_hadamard_orders() {
    for k in 1..=4 {
        let h = sylvester(k);
        let n = h.rows();
        let det = determinant(&h);
        assert_eq!(det.magnitude(), BigInt::from(n).pow(n as u32 / 2).magnitude());
    }
    assert_eq!(determinant(&Matrix::zeros(3, 3)), BigInt::from(0));
}

proptest! {
    #[test]
    fn pm1_and_csv_round_trip(m in sign_matrix(12)) {
        prop_assert_eq!(parse_pm1(&to_pm1(&m)).unwrap(), m.clone());
        prop_assert_eq!(parse_csv(&to_csv(&m)).unwrap(), m.clone());
        prop_assert_eq!(parse_any(&to_csv(&m)).unwrap(), m);
    }

    #[test]
    fn determinant_matches_cofactor_expansion(m in ternary_square(6)) {
        prop_assert_eq!(determinant(&m), BigInt::from(laplace(&m)));
    }

    #[test]
    fn determinant_of_transpose(m in ternary_square(7)) {
        prop_assert_eq!(determinant(&m), determinant(&m.transpose()));
    }

    #[test]
    fn signed_permutations_keep_hadamard(
        k in 1u32..=4,
        seed in prop::collection::vec((0usize..16, 0usize..16, prop::bool::ANY), 0..20),
    ) {
        let mut h = sylvester(k);
        let n = h.rows();
        for (a, b, neg) in seed {
            let (a, b) = (a % n, b % n);
            let rows = h.to_rows();
            h = Matrix::from_fn(n, n, |i, j| {
                let i2 = if i == a { b } else if i == b { a } else { i };
                let v = rows[i2][j];
                if neg && j == a { -v } else { v }
            }).unwrap();
        }
        prop_assert!(is_hadamard(&h, false));
        prop_assert!(is_hadamard(&h.transpose(), false));
    }

    #[test]
    fn tensor_of_hadamard_is_hadamard(a in 1u32..=3, b in 1u32..=3) {
        let t = tensor(&sylvester(a), &sylvester(b));
        prop_assert_eq!(t.rows(), 1 << (a + b));
        prop_assert!(is_hadamard(&t, false));
    }

    #[test]
    fn gram_check_agrees_with_definition(m in sign_matrix(8)) {
        let square = m.is_square();
        prop_assert!(square);
        let n = m.rows() as i64;
        let gram = m.gram();
        let ok = square && (0..m.rows()).all(|i| (0..m.rows()).all(|j| {
            gram[i * m.rows() + j] == if i == j { n } else { 0 }
        }));
        prop_assert_eq!(is_hadamard(&m, false), ok);
    }
}
