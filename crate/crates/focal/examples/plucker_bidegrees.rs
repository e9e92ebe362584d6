//! Bidegrees of bitangent congruences from plane-curve invariants of the
//! surface and its dual: the class formula comes out of exact linear
//! elimination of the two Plücker relations.

use focal::report::{builtin_table_bindings, cmd_table, render_table_csv};
use focal::scenarios::CertConfig;

fn main() {
    let cfg = CertConfig::default();
    let doc = cmd_table("plucker", builtin_table_bindings("plucker"), &cfg).unwrap();
    println!("b = (1/2)(mu1^2 - 3 kappa) + 4d - 5 mu1 on the worked surfaces:");
    println!();
    print!("{}", render_table_csv(&doc));
    println!();
    println!("rows: the tangent developable of a twisted cubic (b = 1), the");
    println!("dual of the elliptic-quartic bisecant congruence (b = 2), and a");
    println!("smooth quartic surface (b = 28, the bitangent congruence (12,28)).");
}
