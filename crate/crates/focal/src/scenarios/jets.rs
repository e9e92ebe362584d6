//! Degrees of the nodal and cuspidal curves of the focal surface, computed
//! on P^3 x D^2X by intersecting the three jet-locus classes, plus the
//! degree of the ruled surface of lines with a cuspidal focal point.

use super::manifest as mf;
use super::{Bindings, CertConfig, Rows, ScenarioError, ScenarioReport};
use crate::chow::Class;
use crate::exact::{ParamCtx, ParamPoly, Rat};
use crate::spaces::{first_jet, formal_congruence_surface, jet_ambient, second_jet};

pub fn scenario_jets(
    bindings: &Bindings,
    cfg: &CertConfig,
) -> Result<ScenarioReport, ScenarioError> {
    let ctx = ParamCtx::new(["a", "b", "g", "k2", "chi"])?;
    let mut rows = Rows::new(cfg, bindings);
    let x = formal_congruence_surface(&ctx)?;
    let d1 = first_jet(&x)?;
    let d2 = second_jet(&d1)?;
    let amb = jet_ambient(&ctx, &d2)?;
    let v = &amb.variety;

    // The three locus classes versus their printed forms.
    let a = ParamPoly::v(&ctx, "a");
    let one = ParamPoly::one(&ctx);
    let two = ParamPoly::int(&ctx, 2);
    let printed_incidence = v.normal_form(&[
        (&[("h", 2)], one.clone()),
        (&[("h", 1), ("H", 1)], one.clone()),
        (&[("pt", 1)], a.clone()),
    ])?;
    rows.expect_class(
        "incidence_class",
        mf::REF_INCIDENCE_CLASS,
        &printed_incidence,
        amb.class("incidence"),
    );
    let printed_first = v.normal_form(&[
        (&[("l1", 2)], one.clone()),
        (&[("l1", 1), ("h", 1)], two.clone()),
        (&[("l1", 1), ("H", 1)], one.clone()),
        (&[("h", 2)], one.clone()),
        (&[("h", 1), ("H", 1)], one.clone()),
        (&[("pt", 1)], a.clone()),
    ])?;
    rows.expect_class(
        "first_contact_class",
        mf::REF_FIRST_CONTACT_CLASS,
        &printed_first,
        amb.class("first_contact"),
    );
    let printed_second = v.normal_form(&[
        (&[("l2", 2)], one.clone()),
        (&[("l1", 1), ("l2", 1)], two.clone()),
        (&[("l2", 1), ("h", 1)], two.clone()),
        (&[("l2", 1), ("H", 1)], one.clone()),
        (&[("l1", 2)], one.clone()),
        (&[("l1", 1), ("h", 1)], two.clone()),
        (&[("l1", 1), ("H", 1)], one.clone()),
        (&[("h", 2)], one.clone()),
        (&[("h", 1), ("H", 1)], one.clone()),
        (&[("pt", 1)], a.clone()),
    ])?;
    rows.expect_class(
        "second_contact_class",
        mf::REF_SECOND_CONTACT_CLASS,
        &printed_second,
        amb.class("second_contact"),
    );

    // deg C = triple intersection against the P^3 hyperplane.
    let triple =
        &(amb.class("incidence") * amb.class("first_contact")) * amb.class("second_contact");
    let h = Class::g(v, "h");
    let big_h = Class::g(v, "H");
    let cusp_degree = (&triple * &h).integrate();
    rows.expect_poly(
        "cusp_degree",
        mf::REF_CUSP_DEGREE,
        &mf::cusp_degree(&ctx),
        &cusp_degree,
    );
    let ruled = (&triple * &big_h).integrate();
    rows.expect_poly(
        "cusp_ruled_degree",
        mf::REF_RULED_DEGREE,
        &mf::cusp_ruled_degree(&ctx),
        &ruled,
    );

    // deg D through the hyperplane-section genus: a plane section of the
    // focal surface is a degree-n curve with deg D nodes and deg C cusps,
    // so deg D = (n-1)(n-2)/2 - g_section - deg C.
    let n = mf::focal_degree(&ctx);
    let g_section = mf::focal_sectional_genus(&ctx);
    let node_degree = {
        let binom = (&(&n - &one) * &(&n - &two)).scale(&Rat::new(1, 2).unwrap());
        &(&binom - &g_section) - &cusp_degree
    };
    rows.expect_poly(
        "node_degree",
        mf::REF_NODE_DEGREE,
        &mf::node_degree(&ctx),
        &node_degree,
    );

    // Quoted numeric anchors.
    let kummer: Bindings = [("a", 2i64), ("b", 2), ("g", 1), ("k2", 4), ("chi", 1)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), Rat::from_int(v)))
        .collect();
    rows.expect_value(
        "kummer_cusp_degree",
        "Example 1.13 (no cuspidal curve)",
        0,
        &cusp_degree,
        &kummer,
    );
    rows.expect_value(
        "kummer_node_degree",
        "Example 1.13 (sixteen isolated nodes)",
        0,
        &node_degree,
        &kummer,
    );
    rows.expect_value(
        "kummer_fundamental_ruled",
        "Example 1.13 (the formula in 1) yields 16)",
        16,
        &ruled,
        &kummer,
    );
    let del_pezzo: Bindings = [("a", 2i64), ("b", 3), ("g", 1), ("k2", 5), ("chi", 1)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), Rat::from_int(v)))
        .collect();
    rows.expect_value(
        "del_pezzo_fundamental_ruled",
        "Example 1.14 (ruled degree 20)",
        20,
        &ruled,
        &del_pezzo,
    );
    rows.expect_value(
        "del_pezzo_cusp_degree",
        "Example 1.14 (no cuspidal curve)",
        0,
        &cusp_degree,
        &del_pezzo,
    );

    Ok(rows.finish("jets"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenarios::Status;

    #[test]
    fn jets_scenario_is_all_matches() {
        let report = scenario_jets(&Bindings::new(), &CertConfig::default()).unwrap();
        for row in &report.results {
            assert_eq!(row.status, Status::Match, "row {}: {:?}", row.name, row);
        }
        assert!(report.matches() >= 9);
    }
}
