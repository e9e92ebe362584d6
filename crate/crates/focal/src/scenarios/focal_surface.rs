//! Invariants of the total focal surface of a smooth congruence of bidegree
//! (a, b): the ramification class on the point-line-plane flag variety, the
//! linkage class of the focal lift, its degree/class/mu1, and the sectional
//! genus and chi through the Hilbert polynomial of the twisted dualizing
//! sheaf.

use super::manifest as mf;
use super::{Bindings, CertConfig, Rows, ScenarioError, ScenarioReport};
use crate::chow::Class;
use crate::exact::{ParamCtx, ParamPoly, Rat};
use crate::hrr::{
    chi_line, chi_twisted, euler_characteristic, split_by_parameter, surface_invariants,
};
use crate::sheaf::{Rank, Sheaf, VirtualSheaf};
use crate::spaces::{flag_variety, formal_congruence_surface, incidence_variety};

pub fn scenario_focal(
    bindings: &Bindings,
    cfg: &CertConfig,
) -> Result<ScenarioReport, ScenarioError> {
    let ctx = ParamCtx::new(["a", "b", "g", "k2", "chi", "T"])?;
    let mut rows = Rows::new(cfg, bindings);
    let x = formal_congruence_surface(&ctx)?;
    let ix = incidence_variety(&x)?;
    let ax = flag_variety(&ix)?;
    let v = &ax.variety;
    let tangent = v.tangent_class();

    rows.expect_class(
        "flag_tangent_c1",
        mf::REF_FLAG_TANGENT,
        &mf::flag_tangent_c1(v)?,
        &tangent.component(1),
    );
    rows.expect_class(
        "flag_tangent_c2",
        mf::REF_FLAG_TANGENT,
        &mf::flag_tangent_c2(v)?,
        &tangent.component(2),
    );
    let tj = ax.sheaf("TJ");
    rows.expect_class(
        "dual_incidence_c1",
        mf::REF_DUAL_INCIDENCE_TANGENT,
        &mf::dual_incidence_c1(v)?,
        &tj.c(1),
    );
    rows.expect_class(
        "dual_incidence_c2",
        mf::REF_DUAL_INCIDENCE_TANGENT,
        &mf::dual_incidence_c2(v)?,
        &tj.c(2),
    );

    // [R] by the degeneracy-locus formula for T_AX -> q* T_J dropping rank.
    let t_ax = Sheaf::new(v, Rank::Concrete(4), tangent.clone())?;
    let normal_virtual = VirtualSheaf::new(tj.clone(), t_ax.clone())?;
    let ram = normal_virtual.porteous(3)?;
    rows.expect_class(
        "ramification_class",
        mf::REF_RAMIFICATION_CLASS,
        &mf::ramification_class(v)?,
        &ram,
    );

    // [F~] is linked to R inside the complete intersection of the two
    // ramification divisors.
    let ram_point = ax.class("ram_point");
    let ram_plane = ax.class("ram_plane");
    let focal_lift = &(ram_point * ram_plane) - &ram;
    rows.expect_class(
        "focal_lift_class",
        mf::REF_FOCAL_LIFT,
        &mf::focal_lift_class(v)?,
        &focal_lift,
    );

    let h = Class::g(v, "h");
    let hs = Class::g(v, "hs");
    rows.expect_poly(
        "focal_degree",
        mf::REF_FOCAL_NUMBERS,
        &mf::focal_degree(&ctx),
        &(&focal_lift * &h.pow(2)).integrate(),
    );
    rows.expect_poly(
        "focal_class",
        mf::REF_FOCAL_NUMBERS,
        &mf::focal_class(&ctx),
        &(&focal_lift * &hs.pow(2)).integrate(),
    );
    rows.expect_poly(
        "focal_mu1",
        mf::REF_FOCAL_NUMBERS,
        &mf::focal_mu1(&ctx),
        &(&(&focal_lift * &h) * &hs).integrate(),
    );

    // omega_M = O_M(4H + 3K): rechecked by adjunction, K_AX + A + B.
    let k_ax = tangent.component(1).neg();
    let adjunction = &(&k_ax + ram_point) + ram_plane;
    rows.expect_class(
        "canonical_twist",
        mf::REF_CANONICAL_TWIST,
        &mf::canonical_twist(v)?,
        &adjunction,
    );

    // Hilbert polynomial of omega(T h) through the linkage sequence:
    // chi(omega(Th)) = chi(I_R(D)) - chi(I_M(D)) with D = Th + 4H + 3K.
    let t = ParamPoly::v(&ctx, "T");
    let d_class = &h.scale(&t) + &mf::canonical_twist(v)?;
    let a_div = ram_point;
    let b_div = ram_plane;
    let chi_im = {
        let da = &d_class - a_div;
        let db = &d_class - b_div;
        let dab = &da - b_div;
        &(&chi_line(v, &da) + &chi_line(v, &db)) - &chi_line(v, &dab)
    };
    let chi_ir = {
        let twist = &d_class - ax.class("normal_twist");
        &chi_twisted(tj, &twist)? - &chi_twisted(&t_ax, &twist)?
    };
    let hp = split_by_parameter(&(&chi_ir - &chi_im), "T");
    let inv = surface_invariants(&hp)?;
    rows.expect_poly(
        "hilbert_degree",
        mf::REF_FOCAL_NUMBERS,
        &mf::focal_degree(&ctx),
        &inv.degree,
    );
    rows.expect_poly(
        "focal_sectional_genus",
        mf::REF_FOCAL_NUMBERS,
        &mf::focal_sectional_genus(&ctx),
        &inv.sectional_genus,
    );
    rows.expect_poly(
        "focal_chi",
        mf::REF_FOCAL_NUMBERS,
        &mf::focal_chi(&ctx),
        &inv.chi_structure,
    );

    // Noether round-trip: chi(O_X) recomputed by Riemann-Roch equals chi.
    let o_x = Sheaf::trivial(&x.variety, 1);
    rows.expect_poly(
        "chi_structure_roundtrip",
        mf::REF_NOETHER_ROUNDTRIP,
        &ParamPoly::v(&ctx, "chi"),
        &euler_characteristic(&o_x)?,
    );
    rows.note(
        "the genus row computes the arithmetic genus of the polarized hyperplane \
         class; the source text labels this quantity 'sectional (geometric) genus'",
    );

    // Quoted numeric anchors.
    let kummer = kummer_bindings();
    rows.expect_value(
        "kummer_degree",
        "Example 5.5 (via Prop. 1.7)",
        4,
        &mf::focal_degree(&ctx),
        &kummer,
    );
    rows.expect_value(
        "kummer_class",
        "Example 5.5 (via Prop. 1.7)",
        4,
        &mf::focal_class(&ctx),
        &kummer,
    );
    rows.expect_value(
        "kummer_mu1",
        "Example 5.5 (via Prop. 1.7)",
        12,
        &inv_mu1(&ctx),
        &kummer,
    );
    let elliptic = elliptic_quartic_bindings();
    rows.expect_value(
        "elliptic_quartic_focal_degree",
        "Example 2.4 (degree eight)",
        8,
        &mf::focal_degree(&ctx),
        &elliptic,
    );

    Ok(rows.finish("focal"))
}

fn inv_mu1(ctx: &ParamCtx) -> ParamPoly {
    mf::focal_mu1(ctx)
}

/// (a, b, g, k2, chi) = (2, 2, 1, 4, 1).
pub fn kummer_bindings() -> Bindings {
    [("a", 2i64), ("b", 2), ("g", 1), ("k2", 4), ("chi", 1)]
        .into_iter()
        .map(|(k, n)| (k.to_string(), Rat::from_int(n)))
        .collect()
}

/// The bisecants of an elliptic quartic: (a, b, g) = (2, 6, 3) with the
/// symmetric-square invariants k2 = 0, chi = 0 at p = 1.
pub fn elliptic_quartic_bindings() -> Bindings {
    [("a", 2i64), ("b", 6), ("g", 3), ("k2", 0), ("chi", 0)]
        .into_iter()
        .map(|(k, n)| (k.to_string(), Rat::from_int(n)))
        .collect()
}
