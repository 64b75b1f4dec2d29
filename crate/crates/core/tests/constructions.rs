use hadamard::catalog;
use hadamard::constructions::{
    amicable_hadamard, aod_skew_hadamard, cds_skew_hadamard, conference_paley, cooper_wallis, cooper_wallis_with,
    double, goethals_seidel, good_matrices_hadamard, hadamard_from_sds, miyamoto, od_from_circulants, paley_i,
    paley_ii, search_skew_od, spence_hadamard, spence_skew, turyn_williamson, williamson_hadamard,
};
use hadamard::diffsets::cds;
use hadamard::exactmat::{is_conference, is_hadamard, is_skew_hadamard, Matrix};

#[test]
fn paley_i_is_skew() {
    for q in [3u64, 7, 11, 19, 23, 27, 31, 43, 47, 59, 67, 71, 79, 83] {
        let h = paley_i(q).unwrap();
        assert_eq!(h.order(), q as usize + 1);
        assert!(is_skew_hadamard(&h, false), "q = {q}");
    }
    assert!(paley_i(5).is_err());
    assert!(paley_i(15).is_err());
}

#[test]
fn paley_ii_is_hadamard() {
    for q in [5u64, 9, 13, 17, 25, 29, 37, 41, 49] {
        let h = paley_ii(q).unwrap();
        assert_eq!(h.order(), 2 * (q as usize + 1));
        assert!(is_hadamard(&h, false), "q = {q}");
        assert!(is_conference(&conference_paley(q).unwrap()));
    }
    assert!(paley_ii(7).is_err());
}

#[test]
fn doubling_keeps_type() {
    let h = paley_i(11).unwrap();
    let d = double(&h, true).unwrap();
    assert_eq!(d.order(), 24);
    assert!(is_skew_hadamard(&d, false));
    let p = paley_ii(5).unwrap();
    assert!(is_hadamard(&double(&p, false).unwrap(), false));
    assert!(double(&p, true).is_err());
    assert!(double(&Matrix::filled(2, 2, 1).unwrap(), false).is_err());
}

#[test]
fn quad_families() {
    for n in (1..=13).step_by(2) {
        let w = williamson_hadamard(n).unwrap();
        assert_eq!(w.order(), 4 * n);
        assert!(is_hadamard(&w, false), "Williamson n = {n}");
        let g = good_matrices_hadamard(n).unwrap();
        assert!(is_skew_hadamard(&g, false), "good n = {n}");
    }
    for q in [5u64, 9, 13, 17, 25] {
        let quad = turyn_williamson(q).unwrap();
        let [a, b, c, d] = quad.matrices();
        let h = goethals_seidel(&a, &b, &c, &d).unwrap();
        assert!(is_hadamard(&h, false), "q = {q}");
    }
}

#[test]
fn cooper_wallis_products() {
    for (t, n) in [(3usize, 9usize), (5, 15), (7, 21), (1, 5)] {
        let h = cooper_wallis_with(t, n).unwrap();
        assert_eq!(h.order(), 4 * n);
        assert!(is_hadamard(&h, false), "t = {t}, n = {n}");
    }
    assert!(is_hadamard(&cooper_wallis(65).unwrap(), false));
    assert!(cooper_wallis_with(4, 12).is_err());
}

#[test]
fn difference_set_routes() {
    for v in [3u64, 5, 7, 9, 11, 13, 15, 19] {
        let pair = cds(v, None).unwrap();
        let h = cds_skew_hadamard(&pair).unwrap();
        assert!(is_skew_hadamard(&h, false), "v = {v}");
    }
    let cat = catalog::global().unwrap();
    for n in [37u32, 43] {
        let fam = cat.sds_family(n, true).unwrap();
        let h = hadamard_from_sds(fam).unwrap();
        assert!(is_skew_hadamard(&h, false), "n = {n}");
    }
    for v in [8u64, 12] {
        assert!(is_hadamard(&spence_hadamard(v).unwrap(), false), "v = {v}");
    }
    let h = spence_skew(3).unwrap();
    assert_eq!(h.order(), 52);
    assert!(is_skew_hadamard(&h, false));
}

#[test]
fn miyamoto_from_smaller_order() {
    for q in [5u64, 13] {
        let k = paley_i(q - 2).unwrap();
        let h = miyamoto(q, &k).unwrap();
        assert_eq!(h.order(), 4 * q as usize);
        assert!(is_hadamard(&h, false), "q = {q}");
    }
}

#[test]
fn designs_and_amicable_pairs() {
    for q in [3u64, 7, 11] {
        let pair = amicable_hadamard(q).unwrap();
        assert_eq!(pair.order(), q as usize + 1);
    }
    let od4 = search_skew_od(4, &[1, 1, 2], 100_000).unwrap().unwrap();
    od4.verify().unwrap();
    assert!(od4.is_skew_normal());
    let od28 = od_from_circulants(7).unwrap();
    od28.verify().unwrap();
    assert_eq!(od28.types(), &[1, 1, 26]);
    let h = aod_skew_hadamard(1, 4, &od4).unwrap();
    assert!(is_skew_hadamard(&h, false));
    assert!(aod_skew_hadamard(1, 6, &od4).is_err());
}
