//! Classical line geometry on the Grassmannian of lines in P^3: Schubert
//! counts, the Euler number, and chi of the structure sheaf by
//! Hirzebruch-Riemann-Roch.

use focal::exact::ParamCtx;
use focal::hrr::euler_characteristic;
use focal::sheaf::Sheaf;
use focal::spaces::grassmannian_g13;

fn main() {
    let ctx = ParamCtx::new(["t"]).unwrap();
    let g = grassmannian_g13(&ctx).unwrap();

    let sigma1 = g.generator("q1");
    println!(
        "lines meeting four general lines: {}",
        sigma1.pow(4).integrate()
    );

    let alpha = g.class("alpha");
    let beta = g.class("beta");
    println!(
        "lines through two general points:  {}",
        alpha.pow(2).integrate()
    );
    println!(
        "lines in two general planes:       {}",
        beta.pow(2).integrate()
    );
    println!(
        "through a point and in a plane:    {}",
        (alpha * beta).integrate()
    );

    let euler = g.variety.tangent_class().component(4).integrate();
    println!("topological Euler number:          {euler}");

    let chi = euler_characteristic(&Sheaf::trivial(&g.variety, 1)).unwrap();
    println!("chi(O) by Riemann-Roch:            {chi}");

    // The tangent bundle is S (x) Q; its first Chern class is 4 sigma1.
    let c1 = g.variety.tangent_class().component(1);
    println!("c1(T) = {c1}");
}
