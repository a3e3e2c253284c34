use hypergroup_web::{build_utumi, explore_s_family, stabilizer_reflets};
use serde_json::Value;

fn parse(text: String) -> Value {
    serde_json::from_str(&text).expect("exports return JSON")
}

#[test]
fn s_family_classes() {
    let v = parse(explore_s_family("3 3"));
    assert_eq!(v["class"], "coset hypergroup");
    assert_eq!(v["hypergroup"], true);
    assert_eq!(v["structure"]["elements"].as_array().unwrap().len(), 6);
    assert_eq!(parse(explore_s_family("2,3"))["hypergroup"], false);
    assert_eq!(parse(explore_s_family("3 1"))["class"], "has an empty product");
}

#[test]
fn s_family_errors() {
    assert!(parse(explore_s_family("3 x"))["error"].is_string());
    assert!(parse(explore_s_family(""))["error"].is_string());
}

#[test]
fn utumi_cogroup() {
    let v = parse(build_utumi(8, "{0}|{1,4,7}|{2,3,5,6}", 0));
    assert_eq!(v["hypergroup"], true);
    assert_eq!(v["cogroup"], true);
    assert_eq!(v["sum_criterion"], true);
    assert_eq!(v["simple"], true);
    assert!(parse(build_utumi(8, "{0}|{1,4,7}", 0))["error"].is_string());
}

#[test]
fn stabilizer_reflet_pair() {
    let v = parse(stabilizer_reflets(4, 0));
    assert_eq!(v["simple"], true);
    let reflets = v["reflets"].as_array().unwrap();
    assert_eq!(reflets.len(), 2);
    assert_eq!(reflets[0]["elements"].as_array().unwrap().len(), 1);
    assert!(parse(stabilizer_reflets(6, 0))["error"].is_string());
}
