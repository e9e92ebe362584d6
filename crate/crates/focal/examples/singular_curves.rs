//! Degrees of the nodal and cuspidal curves of the focal surface, computed
//! by intersecting jet-locus classes on P^3 x D^2X, and the ruled surface
//! swept by lines through the cuspidal points.

use focal::exact::Rat;
use focal::report::cmd_run;
use focal::scenarios::{Bindings, CertConfig};

fn main() {
    let cfg = CertConfig::default();
    let symbolic = cmd_run("jets", &Bindings::new(), &cfg).unwrap();
    println!("symbolic singular-curve degrees:");
    for name in ["cusp_degree", "node_degree", "cusp_ruled_degree"] {
        let row = symbolic.results.iter().find(|r| r.name == name).unwrap();
        println!("  {name:18} = {}", row.computed);
    }

    println!("\nper congruence:");
    let cases: [(&str, [(&str, i64); 5]); 2] = [
        (
            "(2,2) with 16 fundamental points",
            [("a", 2), ("b", 2), ("g", 1), ("k2", 4), ("chi", 1)],
        ),
        (
            "(2,3) del Pezzo congruence",
            [("a", 2), ("b", 3), ("g", 1), ("k2", 5), ("chi", 1)],
        ),
    ];
    for (label, pairs) in cases {
        let bindings: Bindings = pairs
            .iter()
            .map(|(k, v)| (k.to_string(), Rat::from_int(*v)))
            .collect();
        let doc = cmd_run("jets", &bindings, &cfg).unwrap();
        let value = |name: &str| {
            doc.results
                .iter()
                .find(|r| r.name == name)
                .unwrap()
                .computed
                .clone()
        };
        println!(
            "  {label}: deg C = {}, deg D = {}, fundamental ruled degree = {}",
            value("cusp_degree"),
            value("node_degree"),
            value("cusp_ruled_degree"),
        );
    }
}
