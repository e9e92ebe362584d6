//! Catalog of the varieties and bundles the scenario suite computes on,
//! assembled from the chow and sheaf primitives.
//!
//! Conventions used throughout:
//!
//! * projectivization means rank-one quotients, and the tautological
//!   quotient class is the new degree-1 generator;
//! * on the abstract congruence surface the restricted universal bundles
//!   carry c2(Q|X) = b*pt and c2(S|X) = a*pt. This orientation is forced by
//!   the incidence projection to projective space being a:1 (the order
//!   counts the lines through a general point), and it reproduces the focal
//!   degree 2a + 2g - 2 on the point side.

use crate::chow::{product, ChowError, Class, Variety, VarietyBuilder};
use crate::exact::{ParamCtx, ParamPoly, Rat};
use crate::sheaf::{series_div, Rank, Sheaf, SheafError};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpaceError {
    #[error(transparent)]
    Chow(#[from] ChowError),
    #[error(transparent)]
    Sheaf(#[from] SheafError),
    #[error("catalog construction failed: {0}")]
    Construction(String),
}

/// A variety together with the named sheaves and classes the scenarios use.
pub struct SpaceEntry {
    pub variety: Arc<Variety>,
    pub sheaves: BTreeMap<String, Sheaf>,
    pub classes: BTreeMap<String, Class>,
}

impl SpaceEntry {
    fn new(variety: Arc<Variety>) -> Self {
        SpaceEntry {
            variety,
            sheaves: BTreeMap::new(),
            classes: BTreeMap::new(),
        }
    }

    pub fn sheaf(&self, name: &str) -> &Sheaf {
        self.sheaves
            .get(name)
            .unwrap_or_else(|| panic!("catalog sheaf `{name}`"))
    }

    pub fn class(&self, name: &str) -> &Class {
        self.classes
            .get(name)
            .unwrap_or_else(|| panic!("catalog class `{name}`"))
    }

    pub fn generator(&self, name: &str) -> Class {
        Class::g(&self.variety, name)
    }
}

fn one(ctx: &ParamCtx) -> ParamPoly {
    ParamPoly::one(ctx)
}

fn int(ctx: &ParamCtx, n: i64) -> ParamPoly {
    ParamPoly::int(ctx, n)
}

/// Projective n-space with hyperplane generator `gen`; n = 0 gives the point
/// variety with integral 1.
pub fn projective_space_named(ctx: &ParamCtx, n: u32, gen: &str) -> Result<SpaceEntry, SpaceError> {
    if n == 0 {
        let v = VarietyBuilder::new("point", ctx, 0)
            .integral(&[], one(ctx))
            .point(&[])
            .build()?;
        return Ok(SpaceEntry::new(v));
    }
    let v = VarietyBuilder::new(&format!("P{n}"), ctx, n)
        .generator(gen, 1)
        .rewrite(&[(gen, (n + 1) as u16)], &[])
        .integral(&[(gen, n as u16)], one(ctx))
        .point(&[(gen, n as u16)])
        .build()?;
    // c(T) = (1 + h)^{n+1} truncated at n.
    let h = Class::g(&v, gen);
    let tangent = (&Class::one(&v) + &h).pow(n + 1).truncate(n);
    let v = v.with_tangent(&tangent)?;
    let mut entry = SpaceEntry::new(v);
    let h = entry.generator(gen);
    entry.classes.insert("h".to_string(), h);
    Ok(entry)
}

pub fn projective_space(ctx: &ParamCtx, n: u32) -> Result<SpaceEntry, SpaceError> {
    projective_space_named(ctx, n, "h")
}

/// O(k) on a projective space entry.
pub fn twisting_sheaf(entry: &SpaceEntry, k: i64) -> Sheaf {
    let h = entry.class("h");
    Sheaf::line(&entry.variety, &h.scale(&int(entry.variety.ctx(), k)))
        .expect("line sheaf on projective space")
}

/// The Grassmannian of lines in projective 3-space: generators q1, q2 for
/// the Chern classes of the universal quotient bundle Q, rewrites
/// q1^3 -> 2 q1 q2 and q1^2 q2 -> q2^2, dimension 4, integral q2^2 = 1.
/// Sheaves Q (c = 1 + q1 + q2) and S (from c(S*) c(Q) = 1, dualized); the
/// tangent bundle is S (x) Q. Classes `alpha` (lines through a point) =
/// c2(S) and `beta` (lines in a plane) = c2(Q).
pub fn grassmannian_g13(ctx: &ParamCtx) -> Result<SpaceEntry, SpaceError> {
    let ring = VarietyBuilder::new("G(1,3)", ctx, 4)
        .generator("q1", 1)
        .generator("q2", 2)
        .rewrite(&[("q1", 3)], &[(&[("q1", 1), ("q2", 1)], int(ctx, 2))])
        .rewrite(&[("q1", 2), ("q2", 1)], &[(&[("q2", 2)], one(ctx))])
        .integral(&[("q2", 2)], one(ctx))
        .point(&[("q2", 2)])
        .build()?;
    let q_chern = ring.normal_form(&[
        (&[], one(ctx)),
        (&[("q1", 1)], one(ctx)),
        (&[("q2", 1)], one(ctx)),
    ])?;
    let q = Sheaf::new(&ring, Rank::Concrete(2), q_chern)?;
    let s = Sheaf::new(
        &ring,
        Rank::Concrete(2),
        series_div(&Class::one(&ring), q.total_chern(), 2)?,
    )?
    .dual()?;
    let tangent = s.tensor(&q)?;
    let v = ring.with_tangent(tangent.total_chern())?;
    let mut entry = SpaceEntry::new(v.clone());
    let q = Sheaf::new(&v, Rank::Concrete(2), q.total_chern().transfer_to(&v)?)?;
    let s = Sheaf::new(&v, Rank::Concrete(2), s.total_chern().transfer_to(&v)?)?;
    entry.classes.insert("alpha".to_string(), s.c(2));
    entry.classes.insert("beta".to_string(), q.c(2));
    entry.sheaves.insert("Q".to_string(), q);
    entry.sheaves.insert("S".to_string(), s);
    Ok(entry)
}

/// The abstract smooth congruence surface with bidegree (a, b), sectional
/// genus g, canonical self-intersection k2 and structure-sheaf Euler
/// characteristic chi. Atoms H, K (degree 1) and pt (degree 2) with
/// H^2 = (a+b) pt, HK = (2g-2-a-b) pt, K^2 = k2 pt; the Noether relation
/// gives c2(T) = (12 chi - k2) pt.
pub fn formal_congruence_surface(ctx: &ParamCtx) -> Result<SpaceEntry, SpaceError> {
    let a = ParamPoly::v(ctx, "a");
    let b = ParamPoly::v(ctx, "b");
    let g = ParamPoly::v(ctx, "g");
    let k2 = ParamPoly::v(ctx, "k2");
    let chi = ParamPoly::v(ctx, "chi");
    let two = int(ctx, 2);
    let hk = &(&(&two * &g) - &two) - &(&a + &b);
    let c2t = &(&int(ctx, 12) * &chi) - &k2;
    let v = VarietyBuilder::new("X", ctx, 2)
        .generator("H", 1)
        .generator("K", 1)
        .generator("pt", 2)
        .rewrite(&[("H", 2)], &[(&[("pt", 1)], &a + &b)])
        .rewrite(&[("H", 1), ("K", 1)], &[(&[("pt", 1)], hk)])
        .rewrite(&[("K", 2)], &[(&[("pt", 1)], k2)])
        .rewrite(&[("pt", 2)], &[])
        .integral(&[("pt", 1)], one(ctx))
        .tangent(&[
            (&[], one(ctx)),
            (&[("K", 1)], int(ctx, -1)),
            (&[("pt", 1)], c2t.clone()),
        ])
        .point(&[("pt", 1)])
        .build()?;
    let mut entry = SpaceEntry::new(v);
    let v = &entry.variety;
    let h = Class::g(v, "H");
    let pt = Class::g(v, "pt");
    let q = Sheaf::new(v, Rank::Concrete(2), &(&Class::one(v) + &h) + &pt.scale(&b))?;
    let s = Sheaf::new(v, Rank::Concrete(2), &(&Class::one(v) + &h) + &pt.scale(&a))?;
    // Cotangent sheaf: c1 = K, c2 = c2(T) (rank-2 duality).
    let omega = Sheaf::new(
        v,
        Rank::Concrete(2),
        &(&Class::one(v) + &Class::g(v, "K")) + &pt.scale(&c2t),
    )?;
    entry.sheaves.insert("Q".to_string(), q);
    entry.sheaves.insert("S".to_string(), s);
    entry.sheaves.insert("Omega".to_string(), omega);
    Ok(entry)
}

/// The incidence variety I_X = P(Q|X) over the congruence surface, with
/// tautological quotient class h (the hyperplane of P^3). Checks
/// c1(T_IX) = 2h - K - H by construction.
pub fn incidence_variety(x: &SpaceEntry) -> Result<SpaceEntry, SpaceError> {
    let ix = x.sheaf("Q").projectivize("h")?;
    let ctx = ix.ctx().clone();
    let expect = ix.normal_form(&[
        (&[("h", 1)], int(&ctx, 2)),
        (&[("K", 1)], int(&ctx, -1)),
        (&[("H", 1)], int(&ctx, -1)),
    ])?;
    if ix.tangent_class().component(1) != expect {
        return Err(SpaceError::Construction(
            "tangent of the incidence variety should have degree-1 part 2h - K - H".into(),
        ));
    }
    let mut entry = SpaceEntry::new(ix);
    let v = &entry.variety;
    let s_lift = Sheaf::new(
        v,
        Rank::Concrete(2),
        x.sheaf("S").total_chern().transfer_to(v)?,
    )?;
    entry.sheaves.insert("S".to_string(), s_lift);
    let ram = v.normal_form(&[
        (&[("h", 1)], int(&ctx, 2)),
        (&[("H", 1)], one(&ctx)),
        (&[("K", 1)], one(&ctx)),
    ])?;
    entry.classes.insert("ramification".to_string(), ram);
    Ok(entry)
}

/// The flag variety A_X = P(S|X pulled back) over I_X, tautological class
/// hs (the hyperplane of the dual projective space). Carries the pulled-back
/// tangent data of the point-plane incidence variety J (as a total Chern
/// class only) and the two ramification divisor classes.
pub fn flag_variety(ix: &SpaceEntry) -> Result<SpaceEntry, SpaceError> {
    let ax = ix.sheaf("S").projectivize("hs")?;
    let ctx = ax.ctx().clone();
    let mut entry = SpaceEntry::new(ax);
    let v = &entry.variety;
    // c(T_J) pulled back: (1+h)^4 (1+hs)^4 / (1+h+hs), rank 5.
    let h = Class::g(v, "h");
    let hs = Class::g(v, "hs");
    let num = (&(&Class::one(v) + &h).pow(4) * &(&Class::one(v) + &hs).pow(4)).truncate(v.dim());
    let den = &(&Class::one(v) + &h) + &hs;
    let tj = Sheaf::new(v, Rank::Concrete(5), series_div(&num, &den, v.dim())?)?;
    entry.sheaves.insert("TJ".to_string(), tj);
    let big_h = Class::g(v, "H");
    let k = Class::g(v, "K");
    let two = int(&ctx, 2);
    let ram_point = &(&h.scale(&two) + &big_h) + &k;
    let ram_plane = &(&hs.scale(&two) + &big_h) + &k;
    // 0 -> T_AX -> q*T_J -> I_R(h + hs + 2H + K) -> 0 twists by this class.
    let delta0 = &(&(&h + &hs) + &big_h.scale(&two)) + &k;
    entry.classes.insert("ram_point".to_string(), ram_point);
    entry.classes.insert("ram_plane".to_string(), ram_plane);
    entry.classes.insert("normal_twist".to_string(), delta0);
    Ok(entry)
}

/// First jet space D^1 X = P(Omega_X) with tautological class l1, carrying
/// the rank-two quotient G with c(G) = c(L1) c(Omega_{D1X/X}).
pub fn first_jet(x: &SpaceEntry) -> Result<SpaceEntry, SpaceError> {
    let d1 = x.sheaf("Omega").projectivize("l1")?;
    let ctx = d1.ctx().clone();
    let mut entry = SpaceEntry::new(d1);
    let v = &entry.variety;
    let l1 = Class::g(v, "l1");
    let k = Class::g(v, "K");
    // Omega_{D1X/X} is the line with c1 = K - 2 l1.
    let omega_rel = &k - &l1.scale(&int(&ctx, 2));
    let g_chern = &(&Class::one(v) + &l1) * &(&Class::one(v) + &omega_rel);
    let g = Sheaf::new(v, Rank::Concrete(2), g_chern)?;
    entry.sheaves.insert("G".to_string(), g);
    let s_lift = Sheaf::new(
        v,
        Rank::Concrete(2),
        x.sheaf("S").total_chern().transfer_to(v)?,
    )?;
    entry.sheaves.insert("S".to_string(), s_lift);
    Ok(entry)
}

/// Second jet space D^2 X = P(G) over D^1 X with tautological class l2.
pub fn second_jet(d1: &SpaceEntry) -> Result<SpaceEntry, SpaceError> {
    let d2 = d1.sheaf("G").projectivize("l2")?;
    let mut entry = SpaceEntry::new(d2);
    let v = &entry.variety;
    let s_lift = Sheaf::new(
        v,
        Rank::Concrete(2),
        d1.sheaf("S").total_chern().transfer_to(v)?,
    )?;
    entry.sheaves.insert("S".to_string(), s_lift);
    Ok(entry)
}

/// P^3 x D^2 X with the three jet-locus classes (pairs and triples of
/// infinitely close points of congruence lines through a point of P^3):
/// `incidence` = c2(S (x) O(h)), `first_contact` adds the L1 twist,
/// `second_contact` adds the L2 twist.
pub fn jet_ambient(ctx: &ParamCtx, d2: &SpaceEntry) -> Result<SpaceEntry, SpaceError> {
    let p3 = projective_space(ctx, 3)?;
    let prod = product(&p3.variety, &d2.variety)?;
    let mut entry = SpaceEntry::new(prod);
    let v = &entry.variety;
    let s = Sheaf::new(
        v,
        Rank::Concrete(2),
        d2.sheaf("S").total_chern().transfer_to(v)?,
    )?;
    let h = Class::g(v, "h");
    let l1 = Class::g(v, "l1");
    let l2 = Class::g(v, "l2");
    let s_h = s.twist(&h, v.dim())?;
    let s_h_l1 = s_h.twist(&l1, v.dim())?;
    let s_h_l1_l2 = s_h_l1.twist(&l2, v.dim())?;
    entry.classes.insert("incidence".to_string(), s_h.c(2));
    entry
        .classes
        .insert("first_contact".to_string(), s_h_l1.c(2));
    entry
        .classes
        .insert("second_contact".to_string(), s_h_l1_l2.c(2));
    entry.sheaves.insert("S".to_string(), s);
    Ok(entry)
}

/// A smooth surface of degree d in P^3: atoms h (h^2 = d pt) and pt, with
/// c1(T) = (4-d) h and c2(T) = d(d^2-4d+6) pt from the adjunction series
/// (1+h)^4 / (1+dh). Carries the twisted cotangent bundle Omega(2) and the
/// principal parts bundle of O(1).
pub fn hypersurface_sigma(ctx: &ParamCtx) -> Result<SpaceEntry, SpaceError> {
    let d = ParamPoly::v(ctx, "d");
    let c1t = &int(ctx, 4) - &d;
    let c2t = &d * &(&(&d.pow(2) - &(&int(ctx, 4) * &d)) + &int(ctx, 6));
    let v = VarietyBuilder::new("Sigma", ctx, 2)
        .generator("h", 1)
        .generator("pt", 2)
        .rewrite(&[("h", 2)], &[(&[("pt", 1)], d.clone())])
        .rewrite(&[("pt", 2)], &[])
        .integral(&[("pt", 1)], one(ctx))
        .tangent(&[(&[], one(ctx)), (&[("h", 1)], c1t), (&[("pt", 1)], c2t)])
        .point(&[("pt", 1)])
        .build()?;
    let mut entry = SpaceEntry::new(v);
    let v = &entry.variety;
    let h = Class::g(v, "h");
    let pt = Class::g(v, "pt");
    // Omega(2): c1 = d h, c2 = d(d^2-2d+2) pt.
    let omega2_c2 = &d * &(&(&d.pow(2) - &(&int(ctx, 2) * &d)) + &int(ctx, 2));
    let omega2 = Sheaf::new(
        v,
        Rank::Concrete(2),
        &(&Class::one(v) + &h.scale(&d)) + &pt.scale(&omega2_c2),
    )?;
    // P^1(O(1)): extension of O(1) by Omega(1); c = (1+h) c(Omega(1)).
    let omega1_c1 = &d - &int(ctx, 2);
    let omega1_c2 = &d * &(&(&d.pow(2) - &(&int(ctx, 3) * &d)) + &int(ctx, 3));
    let omega1 = &(&Class::one(v) + &h.scale(&omega1_c1)) + &pt.scale(&omega1_c2);
    let p1 = Sheaf::new(
        v,
        Rank::Concrete(3),
        (&(&Class::one(v) + &h) * &omega1).truncate(2),
    )?;
    entry.sheaves.insert("Omega2".to_string(), omega2);
    entry.sheaves.insert("P1".to_string(), p1);
    Ok(entry)
}

/// The tangent-line space Y = P(Omega_Sigma(2)) over a degree-d surface,
/// with tautological class l (the pullback of the hyperplane of G(1,3)).
/// The rank-two quotient Q defining the tangency map is recovered from the
/// principal-parts diagram and must come out with c1(Q) = l. Classes:
/// `parabolic` (pullback of the Hessian curve), `inflection` and
/// `bitangent` (as printed).
pub fn tangent_space_y(sigma: &SpaceEntry) -> Result<SpaceEntry, SpaceError> {
    let y = sigma.sheaf("Omega2").projectivize("l")?;
    let ctx = y.ctx().clone();
    let mut entry = SpaceEntry::new(y);
    let v = &entry.variety;
    let d = ParamPoly::v(&ctx, "d");
    let l = Class::g(v, "l");
    let h = Class::g(v, "h");
    // c(Q) = c(p* P^1(O(1))) / c(Omega_{Y/Sigma}(l - h)); the relative
    // cotangent line has c1 = d h - 2 l, so the twist has c1 = (d-1)h - l.
    let p1 = sigma.sheaf("P1").total_chern().transfer_to(v)?;
    let denom_c1 = &h.scale(&(&d - &one(&ctx))) - &l;
    let denom = &Class::one(v) + &denom_c1;
    let q_chern = series_div(&p1, &denom, v.dim())?.truncate(2);
    let q = Sheaf::new(v, Rank::Concrete(2), q_chern)?;
    if q.c(1) != l {
        return Err(SpaceError::Construction(
            "tautological class of the tangent-line space must be c1(Q)".into(),
        ));
    }
    entry.sheaves.insert("Q".to_string(), q);
    let hessian_degree = &int(&ctx, 4) * &(&d - &int(&ctx, 2));
    entry
        .classes
        .insert("parabolic".to_string(), h.scale(&hessian_degree));
    // Second fundamental form as a section of Sym^2(Omega(2))(d-4), i.e. of
    // O_Y(2l + (d-4)h).
    let inflection = &l.scale(&int(&ctx, 2)) + &h.scale(&(&d - &int(&ctx, 4)));
    entry.classes.insert("inflection".to_string(), inflection);
    let m = &(&d + &int(&ctx, 2)) * &(&d - &int(&ctx, 3));
    let n = &int(&ctx, -4) * &(&d - &int(&ctx, 3));
    let bitangent = &l.scale(&m) + &h.scale(&n);
    entry.classes.insert("bitangent".to_string(), bitangent);
    Ok(entry)
}

/// Derive the bitangent-locus class m*l + n*h on Y independently of the
/// printed form: m is the Hurwitz count of tangents through the node of a
/// general plane section, n is fixed by imposing the classical bitangent
/// count c2(Q_{Y1}) = d(d-2)(d-3)(d+3).
pub fn derive_bitangent_class(y: &SpaceEntry) -> Result<Class, SpaceError> {
    let v = &y.variety;
    let ctx = v.ctx().clone();
    let d = ParamPoly::v(&ctx, "d");
    let two = int(&ctx, 2);
    let l = Class::g(v, "l");
    let h = Class::g(v, "h");
    // Geometric genus of a plane section through its node, then Hurwitz for
    // the (d-2):1 projection from the node: m = 2g~ - 2 + 2(d-2).
    let section_genus =
        &(&(&d - &one(&ctx)) * &(&d - &two)).scale(&Rat::new(1, 2).unwrap()) - &one(&ctx);
    let m = &(&section_genus.scale(&Rat::from_int(2)) - &two) + &(&two * &(&d - &two));
    let c2q = y.sheaf("Q").c(2);
    let int_l = (&c2q * &l).integrate();
    let int_h = (&c2q * &h).integrate();
    // target: twice the bitangent count of a general plane curve of degree d
    let target = {
        let d3 = &d - &int(&ctx, 3);
        &(&(&d * &(&d - &two)) * &d3) * &(&d + &int(&ctx, 3))
    };
    let n = (&target - &(&m * &int_l))
        .div_exact(&int_h)
        .ok_or_else(|| SpaceError::Construction("bitangent class solve failed".into()))?;
    Ok(&l.scale(&m) + &h.scale(&n))
}

/// The length-2 subscheme model for bitangents: T = P(Sym^2 Q*) over
/// G(1,3) with tautological class t, and the rank-4 bundle
/// R = Sym^d Q - Sym^{d-4} Q (x) O_T(-2) whose zero scheme is the
/// double-contact locus of a degree-d surface.
pub fn bitangent_space_t(ctx: &ParamCtx) -> Result<SpaceEntry, SpaceError> {
    let g13 = grassmannian_g13(ctx)?;
    let sym2_qdual = g13.sheaf("Q").dual()?.sym_power(2)?;
    let t_var = sym2_qdual.projectivize("t")?;
    let mut entry = SpaceEntry::new(t_var);
    let v = &entry.variety;
    let d = ParamPoly::v(ctx, "d");
    let q_on_t = Sheaf::new(
        v,
        Rank::Concrete(2),
        g13.sheaf("Q").total_chern().transfer_to(v)?,
    )?;
    let sym_d = q_on_t.sym_power_symbolic(&d, 4)?;
    let sym_dm4 = q_on_t.sym_power_symbolic(&(&d - &int(ctx, 4)), 4)?;
    let t_cls = Class::g(v, "t");
    let twisted = sym_dm4.twist(&t_cls.scale(&int(ctx, -2)), 4)?;
    let r = sym_d.difference_truncated(&twisted, 4)?;
    entry.sheaves.insert("R".to_string(), r);
    let s_on_t = Sheaf::new(
        v,
        Rank::Concrete(2),
        g13.sheaf("S").total_chern().transfer_to(v)?,
    )?;
    entry
        .classes
        .insert("alpha".to_string(), g13.class("alpha").transfer_to(v)?);
    entry
        .classes
        .insert("beta".to_string(), g13.class("beta").transfer_to(v)?);
    entry.sheaves.insert("Q".to_string(), q_on_t);
    entry.sheaves.insert("S".to_string(), s_on_t);
    Ok(entry)
}

/// The second symmetric product of a smooth space curve of degree d and
/// genus p, carrying the secant bundle that maps it onto the congruence of
/// bisecants. Intersection table: P^2 = pt, P.Delta = 2 pt,
/// Delta^2 = (4 - 4p) pt; canonical class (2p-2) P - Delta/2.
pub fn symmetric_square(ctx: &ParamCtx) -> Result<SpaceEntry, SpaceError> {
    symmetric_square_with_table(ctx, 2, false)
}

/// The same surface with the printed intersection table (P.Delta = 1 and
/// the canonical class with flipped sign); used to exhibit that the printed
/// table contradicts the stated bidegree and invariants.
pub fn symmetric_square_printed(ctx: &ParamCtx) -> Result<SpaceEntry, SpaceError> {
    symmetric_square_with_table(ctx, 1, true)
}

fn symmetric_square_with_table(
    ctx: &ParamCtx,
    p_dot_delta: i64,
    flip_canonical: bool,
) -> Result<SpaceEntry, SpaceError> {
    let d = ParamPoly::v(ctx, "d");
    let p = ParamPoly::v(ctx, "p");
    let two = int(ctx, 2);
    let delta_sq = &int(ctx, 4) - &(&int(ctx, 4) * &p);
    // K = alpha P + beta Delta with alpha = +-(2p-2), beta = -+1/2;
    // K^2 = alpha^2 + 2 alpha beta (P.Delta) + beta^2 (4-4p).
    let (alpha, beta) = if flip_canonical {
        (&two - &(&two * &p), Rat::new(1, 2).unwrap())
    } else {
        (&(&two * &p) - &two, Rat::new(-1, 2).unwrap())
    };
    let k_sq = {
        let t1 = &alpha * &alpha;
        let t2 = alpha.scale(&beta).scale(&Rat::from_int(2 * p_dot_delta));
        let t3 = delta_sq.scale(&(&beta * &beta));
        &(&t1 + &t2) + &t3
    };
    let chi = (&(&p - &one(ctx)) * &(&p - &two)).scale(&Rat::new(1, 2).unwrap());
    let c2t = &(&int(ctx, 12) * &chi) - &k_sq;
    let c1t = {
        // -K = -alpha P - beta Delta
        let minus_alpha = alpha.neg();
        let minus_beta = -&beta;
        (minus_alpha, minus_beta)
    };
    let v = VarietyBuilder::new("C(2)", ctx, 2)
        .generator("P", 1)
        .generator("delta", 1)
        .generator("pt", 2)
        .rewrite(&[("P", 2)], &[(&[("pt", 1)], one(ctx))])
        .rewrite(
            &[("P", 1), ("delta", 1)],
            &[(&[("pt", 1)], int(ctx, p_dot_delta))],
        )
        .rewrite(&[("delta", 2)], &[(&[("pt", 1)], delta_sq.clone())])
        .rewrite(&[("pt", 2)], &[])
        .integral(&[("pt", 1)], one(ctx))
        .tangent(&[
            (&[], one(ctx)),
            (&[("P", 1)], c1t.0.clone()),
            (&[("delta", 1)], ParamPoly::constant(ctx, c1t.1.clone())),
            (&[("pt", 1)], c2t),
        ])
        .point(&[("pt", 1)])
        .build()?;
    let mut entry = SpaceEntry::new(v);
    let v = &entry.variety;
    let p_cls = Class::g(v, "P");
    let delta_cls = Class::g(v, "delta");
    let k_cls = &p_cls.scale(&alpha) + &delta_cls.scale(&ParamPoly::constant(ctx, beta));
    entry.classes.insert("K".to_string(), k_cls);
    // Secant bundle: c1 = d P - Delta/2, c2 = d(d-1)/2 pt.
    let c1 = &p_cls.scale(&d) + &delta_cls.scale(&ParamPoly::rat(ctx, -1, 2));
    let c2 = Class::g(v, "pt").scale(&(&d * &(&d - &one(ctx))).scale(&Rat::new(1, 2).unwrap()));
    let q = Sheaf::new(v, Rank::Concrete(2), &(&Class::one(v) + &c1) + &c2)?;
    entry.sheaves.insert("Q".to_string(), q);
    Ok(entry)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surface_ctx() -> ParamCtx {
        ParamCtx::new(["a", "b", "g", "k2", "chi", "T"]).unwrap()
    }

    fn curve_ctx() -> ParamCtx {
        ParamCtx::new(["d", "p"]).unwrap()
    }

    #[test]
    fn projective_spaces() {
        let cx = surface_ctx();
        let p3 = projective_space(&cx, 3).unwrap();
        let h = p3.generator("h");
        assert_eq!(h.pow(3).integrate(), one(&cx));
        let c1 = p3.variety.tangent_class().component(1);
        assert_eq!(c1, h.scale(&int(&cx, 4)));
        // n = 0 is the point variety
        let pt = projective_space(&cx, 0).unwrap();
        assert_eq!(pt.variety.dim(), 0);
        assert_eq!(Class::one(&pt.variety).integrate(), one(&cx));
    }

    #[test]
    fn grassmannian_catalog_values() {
        let cx = surface_ctx();
        let g = grassmannian_g13(&cx).unwrap();
        assert_eq!(g.class("beta").pow(2).integrate(), one(&cx));
        assert_eq!(g.class("alpha").pow(2).integrate(), one(&cx));
        assert!((g.class("alpha") * g.class("beta")).integrate().is_zero());
        // Euler number 6
        let e = g.variety.tangent_class().component(4).integrate();
        assert_eq!(e, int(&cx, 6));
    }

    #[test]
    fn congruence_surface_invariants() {
        let cx = surface_ctx();
        let x = formal_congruence_surface(&cx).unwrap();
        let h = x.generator("H");
        let apb = &ParamPoly::v(&cx, "a") + &ParamPoly::v(&cx, "b");
        assert_eq!(h.pow(2).integrate(), apb);
        let c2 = x.variety.tangent_class().component(2).integrate();
        let expect = &(&int(&cx, 12) * &ParamPoly::v(&cx, "chi")) - &ParamPoly::v(&cx, "k2");
        assert_eq!(c2, expect);
        let hk = (&h * &x.generator("K")).integrate();
        let expect = &(&(&int(&cx, 2) * &ParamPoly::v(&cx, "g")) - &int(&cx, 2))
            - &(&ParamPoly::v(&cx, "a") + &ParamPoly::v(&cx, "b"));
        assert_eq!(hk, expect);
    }

    #[test]
    fn incidence_and_flag_towers() {
        let cx = surface_ctx();
        let x = formal_congruence_surface(&cx).unwrap();
        let ix = incidence_variety(&x).unwrap();
        let h = ix.generator("h");
        assert_eq!(h.pow(3).integrate(), ParamPoly::v(&cx, "a"));
        let ax = flag_variety(&ix).unwrap();
        assert_eq!(ax.variety.dim(), 4);
        // fiber normalization: h hs pt integrates to 1
        let prod = &(&ax.generator("h") * &ax.generator("hs")) * &ax.generator("pt");
        assert_eq!(prod.integrate(), one(&cx));
        // c1(T_AX) = 2h + 2hs - 2H - K
        let c1 = ax.variety.tangent_class().component(1);
        let expect = ax
            .variety
            .normal_form(&[
                (&[("h", 1)], int(&cx, 2)),
                (&[("hs", 1)], int(&cx, 2)),
                (&[("H", 1)], int(&cx, -2)),
                (&[("K", 1)], int(&cx, -1)),
            ])
            .unwrap();
        assert_eq!(c1, expect);
        // T_J degree parts as printed
        let tj = ax.sheaf("TJ");
        let expect1 = ax
            .variety
            .normal_form(&[(&[("h", 1)], int(&cx, 3)), (&[("hs", 1)], int(&cx, 3))])
            .unwrap();
        assert_eq!(tj.c(1), expect1);
        let expect2 = ax
            .variety
            .normal_form(&[
                (&[("h", 2)], int(&cx, 3)),
                (&[("h", 1), ("hs", 1)], int(&cx, 10)),
                (&[("hs", 2)], int(&cx, 3)),
            ])
            .unwrap();
        assert_eq!(tj.c(2), expect2);
    }

    #[test]
    fn jet_tower_shape() {
        let cx = surface_ctx();
        let x = formal_congruence_surface(&cx).unwrap();
        let d1 = first_jet(&x).unwrap();
        assert_eq!(d1.variety.dim(), 3);
        let d2 = second_jet(&d1).unwrap();
        assert_eq!(d2.variety.dim(), 4);
        let amb = jet_ambient(&cx, &d2).unwrap();
        assert_eq!(amb.variety.dim(), 7);
        // [I_X] = h^2 + hH + a pt (c2 of the twisted restricted bundle)
        let expect = amb
            .variety
            .normal_form(&[
                (&[("h", 2)], one(&cx)),
                (&[("h", 1), ("H", 1)], one(&cx)),
                (&[("pt", 1)], ParamPoly::v(&cx, "a")),
            ])
            .unwrap();
        assert_eq!(amb.class("incidence"), &expect);
    }

    #[test]
    fn sigma_and_tangent_space() {
        let cx = curve_ctx();
        let sigma = hypersurface_sigma(&cx).unwrap();
        let d = ParamPoly::v(&cx, "d");
        let h = sigma.generator("h");
        assert_eq!(h.pow(2).integrate(), d);
        // Euler number of a quartic is 24
        let c2 = sigma.variety.tangent_class().component(2).integrate();
        let mut asn = BTreeMap::new();
        asn.insert("d".to_string(), Rat::from_int(4));
        assert_eq!(c2.eval(&asn).unwrap(), Rat::from_int(24));
        let y = tangent_space_y(&sigma).unwrap();
        let l = y.generator("l");
        let hy = y.generator("h");
        // integral table: l^2 h = d^2, l h^2 = d, l^3 = 2d^2 - 2d
        assert_eq!((&l.pow(2) * &hy).integrate(), d.pow(2));
        assert_eq!((&l * &hy.pow(2)).integrate(), d);
        let expect = &(&int(&cx, 2) * &d.pow(2)) - &(&int(&cx, 2) * &d);
        assert_eq!(l.pow(3).integrate(), expect);
        // derived bitangent class equals the printed one
        let derived = derive_bitangent_class(&y).unwrap();
        assert_eq!(&derived, y.class("bitangent"));
    }

    #[test]
    fn bitangent_model_rank() {
        let cx = curve_ctx();
        let t = bitangent_space_t(&cx).unwrap();
        assert_eq!(t.variety.dim(), 6);
        assert_eq!(t.sheaf("R").rank().as_concrete(), Some(4));
    }

    #[test]
    fn relative_tangent_examples() {
        use crate::sheaf::relative_tangent;
        let cx = surface_ctx();
        let x = formal_congruence_surface(&cx).unwrap();
        let ix = incidence_variety(&x).unwrap();
        // c1(T_rel) = 2h - H on the incidence variety.
        let trel = relative_tangent(&ix.variety).unwrap();
        let expect = ix
            .variety
            .normal_form(&[(&[("h", 1)], int(&cx, 2)), (&[("H", 1)], int(&cx, -1))])
            .unwrap();
        assert_eq!(trel.c(1), expect);
        // c1(T_rel) = 2l - dh on the tangent-line space of a surface.
        let ccx = curve_ctx();
        let sigma = hypersurface_sigma(&ccx).unwrap();
        let y = tangent_space_y(&sigma).unwrap();
        let trel = relative_tangent(&y.variety).unwrap();
        let d = ParamPoly::v(&ccx, "d");
        let expect =
            &Class::g(&y.variety, "l").scale(&int(&ccx, 2)) - &Class::g(&y.variety, "h").scale(&d);
        assert_eq!(trel.c(1), expect);
        // Rank-2 relative tangent on the length-2-subscheme model.
        let t = bitangent_space_t(&ccx).unwrap();
        let trel = relative_tangent(&t.variety).unwrap();
        assert_eq!(trel.rank().as_concrete(), Some(2));
    }

    #[test]
    fn tower_tangent_factors_through_relative_tangent() {
        use crate::sheaf::relative_tangent;
        let cx = surface_ctx();
        let x = formal_congruence_surface(&cx).unwrap();
        let ix = incidence_variety(&x).unwrap();
        let ax = flag_variety(&ix).unwrap();
        for (base, tower) in [(&x.variety, &ix.variety), (&ix.variety, &ax.variety)] {
            let lifted = base.tangent_class().transfer_to(tower).unwrap();
            let trel = relative_tangent(tower).unwrap();
            let product = (&lifted * trel.total_chern()).truncate(tower.dim());
            assert_eq!(product, tower.tangent_class(), "tower {}", tower.name());
        }
    }

    #[test]
    fn symmetric_square_invariants() {
        let cx = curve_ctx();
        let s = symmetric_square(&cx).unwrap();
        let d = ParamPoly::v(&cx, "d");
        let p = ParamPoly::v(&cx, "p");
        let q = s.sheaf("Q");
        // a = c1^2 - c2 = (d-1)(d-2)/2 - p
        let a = (&q.c(1).pow(2) - &q.c(2)).integrate();
        let expect =
            &(&(&d - &one(&cx)) * &(&d - &int(&cx, 2))).scale(&Rat::new(1, 2).unwrap()) - &p;
        assert_eq!(a, expect);
        // K^2 = 4p^2 - 13p + 9
        let k2 = (s.class("K") * s.class("K")).integrate();
        let expect = &(&(&int(&cx, 4) * &p.pow(2)) - &(&int(&cx, 13) * &p)) + &int(&cx, 9);
        assert_eq!(k2, expect);
    }
}
