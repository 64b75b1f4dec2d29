use hadamard::catalog;
use hadamard::exactmat::{is_hadamard, is_skew_hadamard};
use hadamard::registry::{
    hadamard_matrix, resolve, resolve_method, skew_hadamard_matrix, DispatchTable, Method, MethodFilter, MethodKind,
    ResolveOptions, Status,
};
use hadamard::Error;
use proptest::prelude::*;

fn opts(skew: bool, existence: bool) -> ResolveOptions {
    ResolveOptions { skew, existence, check: true, method: None }
}

#[test]
fn invalid_orders_are_errors() {
    for order in [0usize, 3, 6, 10, 18] {
        assert!(hadamard_matrix(order, false, true).is_err(), "order {order}");
    }
    assert!(matches!(resolve_method(4, false), Err(Error::InvalidInput(_))));
    assert!(resolve_method(0, true).is_err());
    assert!(resolve_method(251, false).is_err());
}

#[test]
fn trivial_orders() {
    for order in [1, 2, 4] {
        let h = hadamard_matrix(order, false, true).unwrap().matrix.unwrap();
        assert!(is_hadamard(&h, false));
        let s = skew_hadamard_matrix(order, false, true).unwrap().matrix.unwrap();
        assert!(is_skew_hadamard(&s, false));
    }
}

#[test]
fn fallbacks_are_reported() {
    let o = hadamard_matrix(4 * 89, false, true).unwrap();
    assert_eq!(o.status, Status::Constructed);
    assert!(o.fallback);
    assert_eq!(o.preferred, Some(Method::CW(89)));
    assert_eq!(o.method, Some(Method::Miy));
    assert!(is_hadamard(o.matrix.as_ref().unwrap(), false));

    let direct = hadamard_matrix(4 * 5, true, true).unwrap();
    assert_eq!(direct.status, Status::ExistsOnly);
    assert!(!direct.fallback);
    assert!(direct.matrix.is_none());
}

#[test]
fn missing_data_names_the_method() {
    let o = hadamard_matrix(188, false, true).unwrap();
    assert_eq!(o.status, Status::NotImplemented);
    assert_eq!(o.preferred, Some(Method::CW(47)));
    assert!(o.note.unwrap().contains("CW(47)"));
}

#[test]
fn open_orders() {
    for order in [668, 716, 892] {
        let o = hadamard_matrix(order, false, true).unwrap();
        assert_eq!(o.status, Status::UnknownOrder);
        assert!(o.matrix.is_none());
    }
    assert_eq!(skew_hadamard_matrix(4 * 89, true, true).unwrap().status, Status::UnknownOrder);
}

#[test]
fn forcing_a_method() {
    let filter: MethodFilter = "PaleyI".parse().unwrap();
    let o = resolve(24, ResolveOptions { method: Some(filter), ..opts(false, false) }).unwrap();
    assert!(is_hadamard(o.matrix.as_ref().unwrap(), false));
    assert!(o.recipe.unwrap().contains("PaleyI"));

    let cw: MethodFilter = "CW(3)".parse().unwrap();
    let o = resolve(4 * 81, ResolveOptions { method: Some(cw), ..opts(false, false) }).unwrap();
    assert_eq!(o.method, Some(Method::CW(3)));

    let miss: MethodFilter = "Spence".parse().unwrap();
    let o = resolve(20, ResolveOptions { method: Some(miss), ..opts(false, true) }).unwrap();
    assert_ne!(o.status, Status::ExistsOnly);
}

#[test]
fn method_names_round_trip() {
    for s in ["PaleyI", "PaleyII", "Will", "GS", "SDS", "CW(47)", "Good", "Miy", "CDS", "Spence(13)", "AOD(1, 28)", "Double"] {
        let m: Method = s.parse().unwrap();
        assert_eq!(m.to_string(), s);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<Method>(&json).unwrap(), m);
    }
    assert_eq!("AOD(1,28)".parse::<Method>().unwrap(), Method::AOD(1, 28));
    assert!("Paley".parse::<Method>().is_err());
    assert!("CW(x)".parse::<Method>().is_err());
    for k in MethodKind::ALL {
        assert_eq!(k.name().parse::<MethodKind>().unwrap(), k);
    }
}

#[test]
fn dispatch_parser() {
    let t = DispatchTable::parse("# comment\n1 plain PaleyI\n1 skew Good\n3 plain -\n").unwrap();
    assert_eq!(t.lookup(1, false), Some(Some(Method::PaleyI)));
    assert_eq!(t.lookup(3, false), Some(None));
    assert_eq!(t.lookup(5, false), None);
    assert_eq!(DispatchTable::parse(&t.to_text()).unwrap().entries(false).count(), t.entries(false).count());
    for bad in ["2 plain PaleyI", "1 plain", "1 other PaleyI", "1 plain PaleyI\n1 plain Will", "1 plain Double"] {
        assert!(matches!(DispatchTable::parse(bad), Err(Error::Parse { .. })), "{bad:?}");
    }
}

#[test]
fn records_carry_parameters() {
    let r = resolve_method(183, true).unwrap().unwrap();
    assert_eq!(r.method, Method::Spence(13));
    assert_eq!(r.order, 4 * 183);
    assert!(r.skew);
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["method"], "Spence(13)");
    assert!(resolve_method(167, false).unwrap().is_none());
    assert_eq!(catalog::global().unwrap().dispatch.max_n(false), 249);
}

fn order() -> impl Strategy<Value = usize> {
    (1usize..=250).prop_map(|k| 4 * k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn existence_agrees_with_construction(order in order(), skew in any::<bool>()) {
        let plan = resolve(order, opts(skew, true)).unwrap();
        let built = resolve(order, opts(skew, false)).unwrap();
        if plan.status != Status::ExistsOnly {
            prop_assert_eq!(built.status, plan.status);
            return Ok(());
        }
        prop_assert_eq!(built.status, Status::Constructed);
        prop_assert_eq!(&built.recipe, &plan.recipe);
        let h = built.matrix.unwrap();
        prop_assert_eq!(h.order(), order);
        if skew {
            prop_assert!(is_skew_hadamard(&h, false));
        } else {
            prop_assert!(is_hadamard(&h, false));
        }
    }
}
