//! Bitangent and flex congruences of a smooth surface of degree d:
//! bidegrees, sectional genera and double-point expressions, swept over
//! small degrees. The double-point value of the bitangent congruence
//! vanishes exactly at d = 4: the quartic is the only smooth case.

use focal::exact::Rat;
use focal::report::cmd_table;
use focal::scenarios::{Bindings, CertConfig};

fn main() {
    let cfg = CertConfig::default();
    let bindings: Vec<Bindings> = (4..=8)
        .map(|d| [("d".to_string(), Rat::from_int(d))].into_iter().collect())
        .collect();
    let doc = cmd_table("tangency", bindings, &cfg).unwrap();
    let col = |row: usize, name: &str| doc.rows[row].values.get(name).unwrap().clone();
    println!("d | bitangent bidegree, genus, double-point | flex bidegree, genus");
    for (i, d) in (4..=8).enumerate() {
        println!(
            "{d} | ({}, {})  g = {}  dp = {} | ({}, {})  g = {}",
            col(i, "bitangent_order"),
            col(i, "bitangent_class"),
            col(i, "bitangent_genus"),
            col(i, "bitangent_double_point"),
            col(i, "flex_order"),
            col(i, "flex_class"),
            col(i, "flex_genus"),
        );
    }
}
