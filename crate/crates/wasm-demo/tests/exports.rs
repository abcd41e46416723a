use esym_wasm::{eps_table_json, insert_zero_json, modulus_field};
use serde_json::{json, Value};

#[test]
fn table_rows() {
    let v: Value = serde_json::from_str(&eps_table_json("1 2 3", "exact").unwrap()).unwrap();
    assert_eq!(v["rows"], json!([["1"], ["3", "2"], ["6", "11", "6"]]));
    let v: Value = serde_json::from_str(&eps_table_json("i, i", "wrap64").unwrap()).unwrap();
    assert_eq!(v["rows"][1], json!(["2i", "-1"]));
}

#[test]
fn bad_input_is_reported() {
    assert!(eps_table_json("1 x", "exact").unwrap_err().contains("\"x\""));
    assert!(eps_table_json("", "exact").is_err());
    assert!(eps_table_json("1", "quad").is_err());
}

#[test]
fn insertion() {
    let v: Value = serde_json::from_str(&insert_zero_json("2 3", "4").unwrap()).unwrap();
    assert_eq!(v["coeffs"], json!(["1", "-9", "26", "-24"]));
    assert_eq!(v["pretty"], "z^3 - 9 z^2 + 26 z - 24");
    let v: Value = serde_json::from_str(&insert_zero_json("", "i").unwrap()).unwrap();
    assert_eq!(v["pretty"], "z - i");
}

#[test]
fn field_vanishes_at_roots() {
    // A 3x3 grid over [-1,1]^2 samples exactly the points -1, 0, 1 (+/- i).
    let grid = modulus_field("1 -i", -1.0, 1.0, -1.0, 1.0, 3, 3).unwrap();
    assert_eq!(grid.len(), 9);
    assert_eq!(grid[2 * 3 + 1], 0.0); // row 2 is im = -1, column 1 is re = 0
    assert_eq!(grid[3 + 2], 0.0); // centre row, re = 1
    assert!(grid[0] > 0.0);
}
