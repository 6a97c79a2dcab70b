use proptest::prelude::*;
use serde_json::json;

use super::*;
use crate::error::Error;

const CONE: &str = "ring R = poly(QQ, [X, Y, Z, W]) / ideal(X*Z - Y^2, X*W - Y*Z, Y*W - Z^2);\n\
                    ring T = R / ideal(X);\n";

fn run(text: &str) -> Vec<Report> {
    run_script(text, RunOptions::default()).unwrap()
}

fn poly() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (0u32..20).prop_map(|n| n.to_string()),
        prop::sample::select(vec!["X", "Y", "Z", "x", "XY"]).prop_map(String::from),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} + {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} - ({b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})*({b})")),
            (inner.clone(), 1u32..4).prop_map(|(a, e)| format!("({a})^{e}")),
            inner.clone().prop_map(|a| format!("-({a})")),
        ]
    })
}

fn command() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("gb I;".to_string()),
        (1usize..5).prop_map(|n| format!("resolve M {n};")),
        Just("hom M N;".to_string()),
        (0usize..3).prop_map(|i| format!("ext {i} M R;")),
        Just("dual N;".to_string()),
        Just("reflexive M;".to_string()),
        Just("lemma N;".to_string()),
        Just("annihilator M;".to_string()),
        poly().prop_map(|p| format!("colon I ({p}) in R;")),
        Just("kdim S;".to_string()),
    ]
}

fn script() -> impl Strategy<Value = String> {
    (
        prop::sample::select(vec!["QQ", "GF(7)", "ZZ/5"]),
        prop::sample::select(vec!["lex", "degrevlex"]),
        prop::collection::vec(poly(), 6),
        prop::collection::vec(command(), 0..6),
    )
        .prop_map(|(field, order, p, cmds)| {
            format!(
                "ring R = poly({field}, [X, Y, Z], {order}) / ideal({}, {});\n\
                 ideal I = ({}, {});\n\
                 module M = coker(R, 2, [[{}, {}]]);\n\
                 module N = cyclic(R, (X));\n\
                 ring S = R / ideal(X, Y, Z);\n{}",
                p[0],
                p[1],
                p[2],
                p[3],
                p[4],
                p[5],
                cmds.join("\n")
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printing_round_trips(text in script()) {
        let parsed = parse_script(&text).unwrap();
        let printed = parsed.to_string();
        let again = parse_script(&printed).unwrap();
        prop_assert_eq!(&parsed, &again);
        prop_assert_eq!(printed, again.to_string());
    }
}

#[test]
fn empty_input_runs_nothing() {
    assert!(run("").is_empty());
    assert!(run("  \n\t\n").is_empty());
}

#[test]
fn unknown_symbol_is_located() {
    let text = format!("{CONE}module M = cyclic(T, (y));\nreflexive Q;\n");
    match parse_script(&text) {
        Err(Error::Parse {
            line,
            column,
            message,
        }) => {
            assert_eq!((line, column), (4, 11));
            assert!(message.contains("`Q`"), "{message}");
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn arity_errors_name_the_usage() {
    let err = parse_script(&format!("{CONE}hom T;")).unwrap_err();
    assert!(err.to_string().contains("hom MODULE MODULE"), "{err}");
    let err = parse_script(&format!("{CONE}resolve T;")).unwrap_err();
    assert!(err.to_string().contains("resolve MODULE LENGTH"), "{err}");
}

#[test]
fn kdim_of_truncated_polynomial_ring() {
    let r = run("ring A = poly(QQ, [x]) / ideal(x^3);\nkdim A;\n");
    assert_eq!(r.len(), 1);
    assert!(r[0].ok);
    assert_eq!(r[0].result["kdim"], json!(3));
    let r = run("ring B = poly(QQ, [x, y]);\nkdim B;\n");
    assert_eq!(r[0].result["kdim"], json!("infinite"));
}

#[test]
fn cyclic_module_is_torsionless_not_reflexive() {
    let r = run(&format!("{CONE}module M = cyclic(T, (y));\nreflexive M;\n"));
    assert_eq!(r[0].result["reflexive"], json!(false));
    assert_eq!(r[0].result["torsionless"], json!(true));
    assert_eq!(r[0].result["coker_dim"], json!(1));
}

#[test]
fn ext_one_of_residue_quotient() {
    let r = run(&format!(
        "{CONE}ideal J = (Y, Z) in T;\nmodule Q = cyclic(T, J);\next 1 Q T;\nresolve Q 3;\n"
    ));
    assert_eq!(r[0].result["zero"], json!(false));
    assert_eq!(r[0].result["kdim"], json!(1));
    assert_eq!(
        r[1].result["betti"].as_array().unwrap()[..3],
        [json!(1), json!(2), json!(4)]
    );
    assert_eq!(r[1].result["exact"], json!(true));
}

#[test]
fn colon_and_annihilator() {
    let r = run(&format!(
        "{CONE}ideal K = (Y) in T;\ncolon (0) in T (Y, Z);\ngb K;\nannihilator T;\n"
    ));
    assert!(r.iter().all(|x| x.ok));
    assert_eq!(r[0].result["generators"], r[1].result["generators"]);
    assert_eq!(r[2].result["generators"], json!([]));
}

#[test]
fn command_errors_do_not_stop_the_run() {
    let r = run("ring A = poly(QQ, [x]);\nring B = poly(QQ, [y]);\nhom A B;\nkdim A;\n");
    assert_eq!(r.len(), 2);
    assert!(!r[0].ok && r[0].error.is_some());
    assert_eq!(r[1].result["kdim"], json!("infinite"));
}

#[test]
fn reports_render() {
    let r = run("ring A = poly(GF(3), [x]) / ideal(x^2);\ngb A;\nkdim A;\n");
    let text = render_text(&r);
    assert!(text.contains("> kdim A"));
    assert!(text.contains("GF(3)"));
    let v: serde_json::Value = serde_json::from_str(&render_json(&r)).unwrap();
    assert_eq!(v[1]["result"]["kdim"], json!(2));
    assert!(v[0].get("elapsed_ms").is_none());
}
