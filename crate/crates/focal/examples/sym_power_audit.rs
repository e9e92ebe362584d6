//! Audit of the closed-form Chern classes of Sym^d of a rank-2 bundle: the
//! splitting-principle oracle regenerates the coefficient polynomials by
//! exact interpolation and exposes the misprinted c4 (wrong denominator and
//! a dropped (d+2) factor) with concrete witnesses.

use focal::exact::{ParamCtx, Rat};
use focal::oracle::splitting_sym_chern;
use focal::scenarios::manifest::{corrected_sym_c4, printed_sym_c4};
use std::collections::BTreeMap;

fn main() {
    let ctx = ParamCtx::new(["c1", "c2", "d"]).unwrap();
    println!("splitting-oracle c(Sym^n) for a rank-2 bundle:");
    for n in 2..=4u32 {
        let classes = splitting_sym_chern(&ctx, n);
        for (k, c) in classes.iter().enumerate() {
            println!("  c{}(Sym^{n}) = {c}", k + 1);
        }
        println!();
    }

    let printed = printed_sym_c4(&ctx);
    let corrected = corrected_sym_c4(&ctx);
    println!("printed-vs-oracle witnesses for c4(Sym^d):");
    for (d, c1v, c2v) in [(3i64, 0i64, 1i64), (4, 1, 0), (5, 0, -1)] {
        let at: BTreeMap<String, Rat> = [
            ("d".to_string(), Rat::from_int(d)),
            ("c1".to_string(), Rat::from_int(c1v)),
            ("c2".to_string(), Rat::from_int(c2v)),
        ]
        .into_iter()
        .collect();
        let oracle = {
            let classes = splitting_sym_chern(&ctx, d as u32);
            classes[3].eval(&at).unwrap()
        };
        println!(
            "  d={d}, (c1,c2)=({c1v},{c2v}): printed {} | corrected {} | oracle {}",
            printed.eval(&at).unwrap(),
            corrected.eval(&at).unwrap(),
            oracle,
        );
    }
}
