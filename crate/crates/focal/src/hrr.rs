//! Euler characteristics and Hilbert polynomials by Hirzebruch–Riemann–Roch:
//! chi(E) = integral of ch(E) . td(T).

use crate::chow::{Class, Variety};
use crate::exact::{ParamPoly, Rat};
use crate::sheaf::{exp_class, todd_of_chern, Sheaf, SheafError};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HrrError {
    #[error("Hilbert polynomial must have degree 2 in the twist variable")]
    DegenerateHilbert,
    #[error(transparent)]
    Sheaf(#[from] SheafError),
}

/// chi(E) on the sheaf's host variety.
pub fn euler_characteristic(e: &Sheaf) -> Result<ParamPoly, HrrError> {
    let v = e.host();
    let ch = e.chern_character(v.dim())?;
    let td = todd_of_chern(&v.tangent_class(), v.dim());
    Ok((&ch * &td).integrate())
}

/// chi(F - E) for a virtual difference; chi is linear.
pub fn euler_characteristic_diff(f: &Sheaf, e: &Sheaf) -> Result<ParamPoly, HrrError> {
    Ok(&euler_characteristic(f)? - &euler_characteristic(e)?)
}

/// chi(O(D)) for a degree-1 class D: ch = exp(D).
pub fn chi_line(v: &Arc<Variety>, d: &Class) -> ParamPoly {
    let ch = exp_class(&d.component(1), v.dim());
    let td = todd_of_chern(&v.tangent_class(), v.dim());
    (&ch * &td).integrate()
}

/// chi(E(D)) for a sheaf twisted by a degree-1 class.
pub fn chi_twisted(e: &Sheaf, d: &Class) -> Result<ParamPoly, HrrError> {
    let v = e.host();
    let twisted = e.twist(d, v.dim())?;
    euler_characteristic(&twisted)
}

/// An exact polynomial in a formal twist variable with `ParamPoly`
/// coefficients: coeffs[k] is the coefficient of T^k.
#[derive(Clone, Debug, PartialEq)]
pub struct HilbertPolynomial {
    pub t_name: String,
    pub coeffs: Vec<ParamPoly>,
}

impl HilbertPolynomial {
    pub fn coeff(&self, k: usize) -> ParamPoly {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| panic!("Hilbert coefficient {k} out of range"))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

/// Split an exact chi value into coefficients of the twist parameter.
pub fn split_by_parameter(value: &ParamPoly, t_name: &str) -> HilbertPolynomial {
    let deg = value.max_degree_in(t_name);
    let mut coeffs = Vec::with_capacity(deg as usize + 1);
    for k in 0..=deg {
        coeffs.push(value.coeff_of_power(t_name, k as u16));
    }
    while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    HilbertPolynomial {
        t_name: t_name.to_string(),
        coeffs,
    }
}

/// chi(E(twist)) as an exact polynomial in `t_name`, where the degree-1
/// class `twist` may carry the parameter (e.g. T*h + 4H + 3K).
pub fn hilbert_polynomial(
    e: &Sheaf,
    twist: &Class,
    t_name: &str,
) -> Result<HilbertPolynomial, HrrError> {
    let chi = chi_twisted(e, twist)?;
    Ok(split_by_parameter(&chi, t_name))
}

/// Invariants of a polarized surface read off the Hilbert polynomial of its
/// twisted dualizing sheaf chi(omega(T h)) = (h^2/2) T^2 + (K.h/2) T + chi:
/// degree, K.h, sectional genus (2g - 2 = K.h + h^2) and chi of the
/// structure sheaf.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceInvariants {
    pub degree: ParamPoly,
    pub k_dot_h: ParamPoly,
    pub sectional_genus: ParamPoly,
    pub chi_structure: ParamPoly,
}

pub fn surface_invariants(hp: &HilbertPolynomial) -> Result<SurfaceInvariants, HrrError> {
    if hp.degree() != 2 {
        return Err(HrrError::DegenerateHilbert);
    }
    let two = Rat::from_int(2);
    let degree = hp.coeff(2).scale(&two);
    let k_dot_h = hp.coeff(1).scale(&two);
    let chi_structure = hp.coeff(0);
    // 2g - 2 = K.h + h^2
    let two_g_minus_2 = &k_dot_h + &degree;
    let ctx = degree.ctx().clone();
    let sectional_genus = &two_g_minus_2.scale(&Rat::new(1, 2).unwrap()) + &ParamPoly::one(&ctx);
    Ok(SurfaceInvariants {
        degree,
        k_dot_h,
        sectional_genus,
        chi_structure,
    })
}
