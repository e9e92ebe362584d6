//! Congruences of bitangents and flexes to a smooth surface of degree d:
//! locus classes on the tangent-line space Y, bidegrees, sectional genera
//! and double-point expressions for both congruences (the bitangent side
//! through the length-2-subscheme model, cross-checked against the Y route),
//! the symmetric-power Chern-class adjudication, and the focal-degree
//! bookkeeping of the two congruences.

use super::manifest as mf;
use super::{Bindings, CertConfig, Rows, ScenarioError, ScenarioReport};
use crate::chow::Class;
use crate::exact::{ParamCtx, ParamPoly, Rat};
use crate::oracle::{lagrange_fit, splitting_sym_chern};
use crate::sheaf::{series_div, Rank, Sheaf};
use crate::spaces::{
    bitangent_space_t, derive_bitangent_class, grassmannian_g13, hypersurface_sigma,
    tangent_space_y,
};
use std::collections::BTreeMap;

pub fn scenario_tangency(
    bindings: &Bindings,
    cfg: &CertConfig,
) -> Result<ScenarioReport, ScenarioError> {
    let ctx = ParamCtx::new(["d"])?;
    let mut rows = Rows::new(cfg, bindings);
    let d = ParamPoly::v(&ctx, "d");
    let one = ParamPoly::one(&ctx);
    let two = ParamPoly::int(&ctx, 2);

    // ---- The Y route.
    let sigma = hypersurface_sigma(&ctx)?;
    let y = tangent_space_y(&sigma)?;
    let v = &y.variety;
    let q = y.sheaf("Q");
    let l = Class::g(v, "l");
    let h = Class::g(v, "h");

    rows.expect_class("taut_is_c1_q", mf::REF_Q_TAUT, &l, &q.c(1));
    let y_prime = y.class("parabolic");
    let printed_parabolic = h.scale(&(&ParamPoly::int(&ctx, 4) * &(&d - &two)));
    rows.expect_class(
        "parabolic_class",
        mf::REF_Y_CLASSES,
        &printed_parabolic,
        y_prime,
    );
    let y1 = y.class("bitangent");
    let y1_derived = derive_bitangent_class(&y)?;
    rows.expect_class("bitangent_locus_class", mf::REF_Y_CLASSES, y1, &y1_derived);
    let y2 = y.class("inflection");
    let printed_inflection = &l.scale(&two) + &h.scale(&(&d - &ParamPoly::int(&ctx, 4)));
    rows.expect_class(
        "inflection_locus_class",
        mf::REF_Y_CLASSES,
        &printed_inflection,
        y2,
    );
    // The classical bitangent count against the printed class.
    let c2_on_y1 = (&q.c(2) * y1).integrate();
    rows.expect_poly(
        "bitangent_count",
        mf::REF_BITANGENT_COUNT,
        &mf::bitangent_count(&ctx),
        &c2_on_y1,
    );

    // X2 bidegree and sectional genus.
    let flex_order = (&(&q.c(1).pow(2) - &q.c(2)) * y2).integrate();
    rows.expect_poly(
        "flex_order",
        mf::REF_X2_INVARIANTS,
        &mf::flex_order(&ctx),
        &flex_order,
    );
    let flex_class = (&q.c(2) * y2).integrate();
    rows.expect_poly(
        "flex_class",
        mf::REF_X2_INVARIANTS,
        &mf::flex_class(&ctx),
        &flex_class,
    );
    let k_y = v.tangent_class().component(1).neg();
    let k_y2 = &k_y + y2;
    let printed_k_y2 = h.scale(&(&(&ParamPoly::int(&ctx, 3) * &d) - &ParamPoly::int(&ctx, 8)));
    rows.expect_class(
        "flex_canonical_restriction",
        mf::REF_LINE_MULTIPLICITY,
        &printed_k_y2,
        &k_y2,
    );
    let flex_two_g_minus_2 = (&(&(&k_y2 + &l) * &l) * y2).integrate();
    let flex_genus = &flex_two_g_minus_2.scale(&Rat::new(1, 2).unwrap()) + &one;
    rows.expect_poly(
        "flex_genus",
        mf::REF_X2_INVARIANTS,
        &mf::flex_genus(&ctx),
        &flex_genus,
    );
    // A line inside the surface contracts to a point of multiplicity
    // -L^2 = 2 + K_{Y2}.L with K_{Y2} = (3d-8)h and h.L = 1.
    let k_coeff = {
        // coefficient of the h monomial in K_{Y2}
        let mut c = ParamPoly::zero(&ctx);
        for (m, coeff) in k_y2.terms() {
            let idx = v.gen_index("h").unwrap();
            if m[idx] == 1 && m.iter().map(|&x| x as u32).sum::<u32>() == 1 {
                c = coeff.clone();
            }
        }
        c
    };
    let multiplicity = &two + &k_coeff;
    rows.expect_poly(
        "line_multiplicity",
        mf::REF_LINE_MULTIPLICITY,
        &mf::line_multiplicity(&ctx),
        &multiplicity,
    );

    // X2 double-point expression: a^2 + b^2 - c2(N) with
    // c(N) = c(S_Y (x) Q_Y) (1 + [Y2]) / c(T_Y) restricted to Y2.
    let s_y = Sheaf::new(
        v,
        Rank::Concrete(2),
        series_div(&Class::one(v), q.total_chern(), v.dim())?,
    )?
    .dual()?;
    let tangent_g = s_y.tensor(q)?;
    let normal_total = series_div(
        &(tangent_g.total_chern() * &(&Class::one(v) + y2)),
        &v.tangent_class(),
        v.dim(),
    )?;
    let flex_dp = {
        let c2n = (&normal_total.component(2) * y2).integrate();
        &(&flex_order.pow(2) + &flex_class.pow(2)) - &c2n
    };
    rows.expect_poly(
        "flex_double_point",
        mf::REF_X2_INVARIANTS,
        &mf::flex_double_point(&ctx),
        &flex_dp,
    );

    // X1 bidegree on the Y route (the tangency map is 2:1 on the bitangent
    // locus).
    let half = Rat::new(1, 2).unwrap();
    let y_route_order = (&(&q.c(1).pow(2) - &q.c(2)) * y1).integrate().scale(&half);
    let y_route_class = c2_on_y1.scale(&half);

    // ---- The length-2-subscheme route.
    let t = bitangent_space_t(&ctx)?;
    let tv = &t.variety;
    let r = t.sheaf("R");
    rows.expect_poly(
        "double_contact_rank",
        mf::REF_X1_INVARIANTS,
        &ParamPoly::int(&ctx, 4),
        &match r.rank() {
            Rank::Concrete(n) => ParamPoly::int(&ctx, *n),
            Rank::Symbolic(p) => p.clone(),
        },
    );
    let x1_cls = r.c(4);
    let t_order = (&x1_cls * t.class("alpha")).integrate();
    let t_class = (&x1_cls * t.class("beta")).integrate();
    rows.expect_poly(
        "bitangent_order",
        mf::REF_X2_INVARIANTS,
        &mf::bitangent_order(&ctx),
        &t_order,
    );
    rows.expect_poly(
        "bitangent_class",
        mf::REF_X2_INVARIANTS,
        &mf::bitangent_class(&ctx),
        &t_class,
    );
    rows.expect_poly(
        "bitangent_order_two_routes",
        mf::REF_X1_INVARIANTS,
        &y_route_order,
        &t_order,
    );
    rows.expect_poly(
        "bitangent_class_two_routes",
        mf::REF_X1_INVARIANTS,
        &y_route_class,
        &t_class,
    );

    // X1 sectional genus: 2g - 2 = c4(R) (K_T + c1(R) + q1) q1.
    let q1 = Class::g(tv, "q1");
    let k_t = tv.tangent_class().component(1).neg();
    let x1_two_g_minus_2 = (&(&(&(&k_t + &r.c(1)) + &q1) * &q1) * &x1_cls).integrate();
    let x1_genus = &x1_two_g_minus_2.scale(&half) + &one;
    rows.expect_poly(
        "bitangent_genus",
        mf::REF_X1_INVARIANTS,
        &mf::bitangent_genus(&ctx),
        &x1_genus,
    );

    // X1 double-point expression with c(N) = c(q* T_G) c(R) / c(T_T).
    let g13 = grassmannian_g13(&ctx)?;
    let tangent_g_on_t = g13.variety.tangent_class().transfer_to(tv)?;
    let normal_total = series_div(
        &(&tangent_g_on_t * r.total_chern()).truncate(2),
        &tv.tangent_class(),
        2,
    )?;
    let x1_dp = {
        let c2n = (&normal_total.component(2) * &x1_cls).integrate();
        &(&t_order.pow(2) + &t_class.pow(2)) - &c2n
    };
    rows.expect_poly(
        "bitangent_double_point",
        mf::REF_X1_INVARIANTS,
        &mf::bitangent_double_point(&ctx),
        &x1_dp,
    );

    // ---- Symmetric-power Chern classes: regenerate the closed forms from
    // the splitting oracle (fit at n = 0..8, verify at 9 and 10) and
    // adjudicate the printed lemma.
    sym_power_adjudication(&mut rows, cfg)?;

    // ---- Singular-curve degree bookkeeping.
    let half_parabolic_flex = (&(y2 * y_prime) * &l).integrate().scale(&half);
    rows.expect_poly(
        "parabolic_flex_ruled",
        mf::REF_PARABOLIC_FLEX_RULED,
        &mf::parabolic_flex_ruled(&ctx),
        &half_parabolic_flex,
    );
    rows.typo_poly(
        "parabolic_flex_ruled_proof_line",
        mf::REF_PARABOLIC_FLEX_RULED,
        &mf::parabolic_flex_ruled_proof_line(&ctx),
        &half_parabolic_flex,
    );
    let intersection = (&(y1 * y2) * &l).integrate();
    rows.expect_poly(
        "bitangent_flex_intersection",
        mf::REF_BITANGENT_SINGULAR_DEGREE,
        &mf::bitangent_flex_intersection(&ctx),
        &intersection,
    );
    let a_deg = mf::bitangent_singular_degree(&ctx);
    let b_deg = mf::flex_singular_degree(&ctx);
    rows.expect_poly(
        "cuspidal_accounting_sum",
        mf::REF_BITANGENT_SINGULAR_DEGREE,
        &(&a_deg + &b_deg.scale(&Rat::from_int(2))),
        &intersection,
    );
    rows.typo_poly(
        "cuspidal_accounting_narrative",
        mf::REF_BITANGENT_SINGULAR_DEGREE,
        &(&a_deg.scale(&Rat::from_int(2)) + &b_deg),
        &intersection,
    );

    // ---- Focal-degree consistency for the two congruences.
    let x1_focal =
        &(&t_order.scale(&Rat::from_int(2)) + &x1_two_g_minus_2) - &ParamPoly::zero(&ctx);
    rows.expect_poly(
        "bitangent_focal_degree",
        mf::REF_X1_FOCAL,
        &mf::bitangent_focal_degree(&ctx),
        &x1_focal,
    );
    // The surface itself counts with multiplicity (d+2)(d-3) in the focal
    // surface of the bitangent congruence.
    let surface_multiplicity = &(&d + &two) * &(&d - &ParamPoly::int(&ctx, 3));
    let x1_extra = &x1_focal - &(&surface_multiplicity * &d);
    rows.expect_poly(
        "bitangent_focal_extra",
        mf::REF_X1_FOCAL,
        &mf::bitangent_focal_extra(&ctx),
        &x1_extra,
    );
    let x2_focal = &flex_order.scale(&Rat::from_int(2)) + &flex_two_g_minus_2;
    rows.expect_poly(
        "flex_focal_degree",
        mf::REF_X2_FOCAL,
        &mf::flex_focal_degree(&ctx),
        &x2_focal,
    );
    // The surface counts four times in the focal surface of the flexes.
    let x2_extra = &x2_focal - &d.scale(&Rat::from_int(4));
    rows.expect_poly(
        "flex_focal_extra",
        mf::REF_X2_FOCAL,
        &mf::flex_focal_extra(&ctx),
        &x2_extra,
    );

    // Quoted numeric anchors: the smooth quartic's bitangent congruence.
    let quartic: Bindings = [("d".to_string(), Rat::from_int(4))].into_iter().collect();
    rows.expect_value(
        "smooth_quartic_order",
        mf::REF_EX_DUAL_QUARTIC,
        12,
        &t_order,
        &quartic,
    );
    rows.expect_value(
        "smooth_quartic_class",
        mf::REF_EX_DUAL_QUARTIC,
        28,
        &t_class,
        &quartic,
    );
    rows.expect_value(
        "smooth_quartic_double_point",
        "Prop. 3.5 (smooth only for d = 4)",
        0,
        &x1_dp,
        &quartic,
    );

    // Report-only constants cited from the classical literature.
    rows.note(format!(
        "report-only ({}): ruled surface of stationary bitangents has degree {}",
        mf::REF_STATIONARY_BITANGENTS,
        mf::stationary_bitangent_degree(&ctx)
    ));
    rows.note(format!(
        "report-only ({}): tritangent curve has degree {}",
        mf::REF_TRITANGENTS,
        mf::tritangent_degree(&ctx)
    ));
    rows.note(format!(
        "report-only ({}): five-point-contact line count is {}",
        mf::REF_FIVE_POINT_CONTACT,
        mf::five_point_contact(&ctx)
    ));
    rows.note(
        "genus rows compute the arithmetic genus of the polarized hyperplane \
         class; the source text labels it 'sectional (geometric) genus'",
    );

    Ok(rows.finish("tangency"))
}

/// Fit the coefficient polynomials of c_k(Sym^d) of a rank-2 bundle from the
/// splitting oracle at d = 0..8, verify the fit at d = 9 and 10, and
/// adjudicate the printed closed forms: c1..c3 match, the printed c4 fails
/// (witnesses at d = 3 and 4), the corrected c4 matches.
fn sym_power_adjudication(rows: &mut Rows, _cfg: &CertConfig) -> Result<(), ScenarioError> {
    let octx = ParamCtx::new(["c1", "c2", "d"])?;
    let oracle: Vec<Vec<ParamPoly>> = (0..=10u32).map(|n| splitting_sym_chern(&octx, n)).collect();
    let bases: [&[(u16, u16)]; 4] = [
        &[(1, 0)],
        &[(2, 0), (0, 1)],
        &[(3, 0), (1, 1)],
        &[(4, 0), (2, 1), (0, 2)],
    ];
    let coeff_of = |poly: &ParamPoly, i: u16, j: u16| -> Rat {
        poly.coeff_of_power("c1", i)
            .coeff_of_power("c2", j)
            .constant_value()
            .expect("oracle coefficients are rational constants")
    };
    let mut fitted: Vec<ParamPoly> = Vec::new();
    for (k, basis) in bases.iter().enumerate() {
        let mut acc = ParamPoly::zero(&octx);
        for &(i, j) in basis.iter() {
            let points: Vec<(i64, Rat)> = (0..=8usize)
                .map(|n| {
                    let value = if k < oracle[n].len() {
                        coeff_of(&oracle[n][k], i, j)
                    } else {
                        Rat::zero()
                    };
                    (n as i64, value)
                })
                .collect();
            let coeff_poly = lagrange_fit(&octx, "d", &points)?;
            let mono =
                &ParamPoly::v(&octx, "c1").pow(i as u32) * &ParamPoly::v(&octx, "c2").pow(j as u32);
            acc = &acc + &(&coeff_poly * &mono);
        }
        fitted.push(acc);
    }
    // Out-of-sample validation at d = 9 and 10.
    for n in [9usize, 10] {
        let mut asn = BTreeMap::new();
        asn.insert("d".to_string(), Rat::from_int(n as i64));
        for (k, fit) in fitted.iter().enumerate() {
            let specialized = fit.bind(&asn);
            let oracle_value = if k < oracle[n].len() {
                oracle[n][k].clone()
            } else {
                ParamPoly::zero(&octx)
            };
            rows.expect_poly(
                &format!("sym_power_c{}_oracle_at_{}", k + 1, n),
                mf::REF_SYM_CHERN,
                &oracle_value,
                &specialized,
            );
        }
    }
    rows.expect_poly(
        "sym_power_c1",
        mf::REF_SYM_CHERN,
        &mf::printed_sym_c1(&octx),
        &fitted[0],
    );
    rows.expect_poly(
        "sym_power_c2",
        mf::REF_SYM_CHERN,
        &mf::printed_sym_c2(&octx),
        &fitted[1],
    );
    rows.expect_poly(
        "sym_power_c3",
        mf::REF_SYM_CHERN,
        &mf::printed_sym_c3(&octx),
        &fitted[2],
    );
    rows.typo_poly(
        "sym_power_quartic_printed",
        mf::REF_SYM_CHERN,
        &mf::printed_sym_c4(&octx),
        &fitted[3],
    );
    rows.expect_poly(
        "sym_power_quartic_corrected",
        mf::REF_SYM_CHERN,
        &mf::corrected_sym_c4(&octx),
        &fitted[3],
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenarios::Status;

    #[test]
    fn tangency_scenario_statuses() {
        let report = scenario_tangency(&Bindings::new(), &CertConfig::default()).unwrap();
        for row in &report.results {
            match row.name.as_str() {
                "sym_power_quartic_printed"
                | "parabolic_flex_ruled_proof_line"
                | "cuspidal_accounting_narrative" => {
                    assert_eq!(row.status, Status::PaperTypoSuspected, "row {}", row.name)
                }
                _ => assert_eq!(row.status, Status::Match, "row {}: {:?}", row.name, row),
            }
        }
        assert_eq!(report.typos(), 3);
        assert!(report.matches() >= 25);
    }
}
