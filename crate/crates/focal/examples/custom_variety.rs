//! Building blocks from scratch: present a graded ring, projectivize a
//! bundle over it, and run Riemann-Roch — the same machinery the catalog
//! uses, on a hand-made example (P^1 x P^1 polarized by O(1,2)).

use focal::chow::{Class, VarietyBuilder};
use focal::exact::{ParamCtx, ParamPoly};
use focal::hrr::chi_line;
use focal::hrr::{hilbert_polynomial, split_by_parameter};
use focal::sheaf::{Rank, Sheaf};

fn main() {
    let ctx = ParamCtx::new(["T"]).unwrap();
    let one = ParamPoly::one(&ctx);
    // P^1 x P^1: atoms e, f with e^2 = f^2 = 0, ef = pt.
    let quadric = VarietyBuilder::new("P1xP1", &ctx, 2)
        .generator("e", 1)
        .generator("f", 1)
        .rewrite(&[("e", 2)], &[])
        .rewrite(&[("f", 2)], &[])
        .integral(&[("e", 1), ("f", 1)], one.clone())
        .tangent(&[
            (&[], one.clone()),
            (&[("e", 1)], ParamPoly::int(&ctx, 2)),
            (&[("f", 1)], ParamPoly::int(&ctx, 2)),
            (&[("e", 1), ("f", 1)], ParamPoly::int(&ctx, 4)),
        ])
        .point(&[("e", 1), ("f", 1)])
        .build()
        .unwrap();

    let e = Class::g(&quadric, "e");
    let f = Class::g(&quadric, "f");
    let polarization = &e + &f.scale(&ParamPoly::int(&ctx, 2));
    println!("degree of O(1,2): {}", polarization.pow(2).integrate());

    // chi(O(T, 2T)) as an exact polynomial in T: (T+1)(2T+1).
    let t = ParamPoly::v(&ctx, "T");
    let chi = chi_line(&quadric, &polarization.scale(&t));
    let hp = split_by_parameter(&chi, "T");
    println!("chi(O(T,2T)) coefficients by power of T: {:?}", hp.coeffs);

    // Projectivize O(1,0) (+) O(0,1): a 3-fold fibered in lines.
    let rank2 = Sheaf::new(
        &quadric,
        Rank::Concrete(2),
        &(&Class::one(&quadric) + &(&e + &f)) + &(&e * &f),
    )
    .unwrap();
    let threefold = rank2.projectivize("z").unwrap();
    println!(
        "P(O(1,0) + O(0,1)) has dimension {} and c1(T) = {}",
        threefold.dim(),
        threefold.tangent_class().component(1)
    );
    let o_z = Sheaf::trivial(&threefold, 1);
    let zeta = Class::g(&threefold, "z");
    let hp = hilbert_polynomial(&o_z, &zeta.scale(&ParamPoly::v(&ctx, "T")), "T").unwrap();
    println!("chi(O(T z)) coefficients by power of T: {:?}", hp.coeffs);
}
