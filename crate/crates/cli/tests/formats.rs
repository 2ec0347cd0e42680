use hopf_deform::core::braided::DiagonalDatum;
use hopf_deform::core::groups::FiniteAbelianGroup;
use hopf_deform::core::hopfcore::HopfAlgebra;
use hopf_deform::core::liftings::Presentation;
use hopf_deform::core::scalars::Scalar;
use hopf_deform::datum::{parse_datum, parse_scalar};
use hopf_deform::pbw::{parse_element, parse_scalar_text, render_element};
use hopf_deform::report::{Report, Status};
use proptest::prelude::*;
use serde_json::json;

#[test]
fn minimal_rank_one_file() {
    let f = parse_datum(r#"{"group": [6], "generators": [{"g": [1], "chi": [2]}]}"#).unwrap();
    assert_eq!(f.datum.rank(), 1);
    assert_eq!(f.datum.ns(), vec![3]);
    assert_eq!(f.field_order(), 6);
    assert!(f.params.diag[0].is_zero());
}

#[test]
fn schema_errors_carry_pointers() {
    let e = parse_datum(r#"{"group": [6], "generators": [{"g": [1], "chi": [2]}], "params": {"diag": ["1/0"]}}"#).unwrap_err();
    assert_eq!(e.pointer, "/params/diag/0");
    let e = parse_datum(r#"{"group": [6], "generators": [{"g": [1], "chi": [2]}, {"g": [1], "chi": [-2]}],
        "params": {"link": [[2, 1, 1]]}}"#)
        .unwrap_err();
    assert_eq!(e.pointer, "/params/link/0");
    let e = parse_datum("{\"group\": [6],\n \"generators\": [}").unwrap_err();
    assert!(e.message.contains("line 2"), "{e}");
    let e = parse_datum(r#"{"group": [6], "generators": [{"g": [1, 2], "chi": [2]}]}"#).unwrap_err();
    assert_eq!(e.pointer, "/generators/0/g");
}

#[test]
fn scalar_literals() {
    assert_eq!(parse_scalar(&json!("3/4"), "").unwrap(), Scalar::from_ratio(3, 4).unwrap());
    assert_eq!(parse_scalar(&json!({"root": [6, 2]}), "").unwrap(), Scalar::root(3, 1));
    let sum = parse_scalar(&json!([1, {"root": [4, 1]}, "-1/2"]), "").unwrap();
    assert_eq!(sum, &Scalar::from_ratio(1, 2).unwrap() + &Scalar::root(4, 1));
    assert!(parse_scalar(&json!(true), "/x").is_err());
}

#[test]
fn empty_report_is_valid_json() {
    let mut r = Report::new("build", serde_json::Value::Null);
    r.finish();
    assert_eq!(r.status, Status::Pass);
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["certificates"], json!([]));
    assert_eq!(v["results"], json!({}));
    assert_eq!(r.to_json(), r.clone().to_json());
}

fn quantum_plane() -> (DiagonalDatum, HopfAlgebra) {
    let grp = FiniteAbelianGroup::cyclic(6);
    let d = DiagonalDatum::new(
        grp.clone(),
        vec![grp.element(&[1]), grp.element(&[1])],
        vec![grp.character(&[2]), grp.character(&[-2])],
    )
    .unwrap();
    let h = Presentation::bosonization(&d).build().unwrap();
    (d, h)
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3, 0i64..6, -2i64..=2).prop_map(|(p, q, k, c)| {
        &Scalar::from_ratio(p, q).unwrap() + &(&Scalar::from_i64(c) * &Scalar::root(6, k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_text_round_trips(s in scalar_strategy()) {
        prop_assert_eq!(parse_scalar_text(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn pbw_render_round_trips(terms in proptest::collection::vec((0usize..54, scalar_strategy()), 0..6)) {
        let (d, h) = quantum_plane();
        let mut v: Vec<(usize, Scalar)> = Vec::new();
        for (i, c) in terms {
            match v.iter_mut().find(|(j, _)| *j == i) {
                Some((_, e)) => *e += &c,
                None => v.push((i, c)),
            }
        }
        v.retain(|(_, c)| !c.is_zero());
        v.sort_by_key(|(i, _)| *i);
        let text = render_element(&h, &v);
        prop_assert_eq!(parse_element(&h, &d, &text).unwrap(), v);
    }
}
