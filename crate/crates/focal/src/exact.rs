//! Exact rational scalars and sparse multivariate polynomials in named
//! scalar parameters.
//!
//! This is the coefficient ring for the whole engine. Identities between
//! formulas are adjudicated here by canonical-form subtraction, so nothing in
//! this module (or anywhere downstream) is allowed to touch floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameter context mismatch")]
    ContextMismatch,
    #[error("parameter `{0}` is not bound")]
    UnboundParameter(String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("duplicate parameter `{0}`")]
    DuplicateParameter(String),
    #[error("cannot parse rational `{0}`")]
    ParseRational(String),
}

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator (guaranteed by the backing `BigRational`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`, reduced. Fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self, ExactError> {
        if den == 0 {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rat(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn arith(x: &Rat, y: &Rat, op: RatOp) -> Result<Rat, ExactError> {
        match op {
            RatOp::Add => Ok(Rat(&x.0 + &y.0)),
            RatOp::Sub => Ok(Rat(&x.0 - &y.0)),
            RatOp::Mul => Ok(Rat(&x.0 * &y.0)),
            RatOp::Div => x.div(y),
        }
    }

    pub fn div(&self, other: &Rat) -> Result<Rat, ExactError> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rat(&self.0 / &other.0))
    }

    pub fn recip(&self) -> Result<Rat, ExactError> {
        Rat::one().div(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn pow(&self, k: u32) -> Rat {
        let mut acc = Rat::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        i64::try_from(self.0.to_integer()).ok()
    }
}

impl std::ops::Add for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        Rat(&self.0 + &rhs.0)
    }
}

impl std::ops::Sub for &Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        Rat(&self.0 - &rhs.0)
    }
}

impl std::ops::Mul for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        Rat(&self.0 * &rhs.0)
    }
}

impl std::ops::Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, ExactError> {
        let bad = || ExactError::ParseRational(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(ExactError::DivisionByZero);
                }
                Ok(Rat(BigRational::new(n, d)))
            }
            None => {
                let n: BigInt = s.trim().parse().map_err(|_| bad())?;
                Ok(Rat(BigRational::from_integer(n)))
            }
        }
    }
}

/// A declared, ordered list of scalar parameter names. Every `ParamPoly`
/// carries one, and mixed-context arithmetic is rejected: each scenario
/// declares its own namespace so that, for instance, a curve genus and a
/// sectional genus can never be identified by accident.
#[derive(Clone, Debug)]
pub struct ParamCtx(Arc<Vec<String>>);

impl PartialEq for ParamCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for ParamCtx {}

impl ParamCtx {
    pub fn new<I, S>(names: I) -> Result<Self, ExactError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(ExactError::DuplicateParameter(n.clone()));
            }
        }
        Ok(ParamCtx(Arc::new(names)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

type Expo = Vec<u16>;

/// Sparse multivariate polynomial over `Rat` in the parameters of a fixed
/// `ParamCtx`. Zero coefficients are never stored, so structural equality is
/// ring equality and `is_zero` is the engine's notion of identity.
#[derive(Clone, PartialEq, Eq)]
pub struct ParamPoly {
    ctx: ParamCtx,
    terms: BTreeMap<Expo, Rat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl ParamPoly {
    pub fn zero(ctx: &ParamCtx) -> Self {
        ParamPoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &ParamCtx, c: Rat) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(vec![0; ctx.len()], c);
        }
        p
    }

    pub fn one(ctx: &ParamCtx) -> Self {
        Self::constant(ctx, Rat::one())
    }

    pub fn int(ctx: &ParamCtx, n: i64) -> Self {
        Self::constant(ctx, Rat::from_int(n))
    }

    pub fn rat(ctx: &ParamCtx, num: i64, den: i64) -> Self {
        Self::constant(ctx, Rat::new(num, den).expect("nonzero denominator"))
    }

    pub fn var(ctx: &ParamCtx, name: &str) -> Result<Self, ExactError> {
        let i = ctx
            .index_of(name)
            .ok_or_else(|| ExactError::UnknownParameter(name.to_string()))?;
        let mut e = vec![0u16; ctx.len()];
        e[i] = 1;
        let mut p = Self::zero(ctx);
        p.terms.insert(e, Rat::one());
        Ok(p)
    }

    /// Variable lookup that panics; for catalog code where the context is
    /// constructed a few lines above.
    pub fn v(ctx: &ParamCtx, name: &str) -> Self {
        Self::var(ctx, name).expect("parameter declared in context")
    }

    pub fn ctx(&self) -> &ParamCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().map(|c| c.is_one()).unwrap_or(false)
    }

    /// `Some(c)` iff the polynomial is a constant.
    pub fn constant_value(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&x| x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn max_degree_in(&self, name: &str) -> u32 {
        match self.ctx.index_of(name) {
            Some(i) => self.terms.keys().map(|e| e[i] as u32).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn arith(f: &ParamPoly, g: &ParamPoly, op: PolyOp) -> Result<ParamPoly, ExactError> {
        if f.ctx != g.ctx {
            return Err(ExactError::ContextMismatch);
        }
        Ok(match op {
            PolyOp::Add => f.add_unchecked(g),
            PolyOp::Sub => f.sub_unchecked(g),
            PolyOp::Mul => f.mul_unchecked(g),
        })
    }

    fn add_term(&mut self, e: Expo, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn add_unchecked(&self, g: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (e, c) in &g.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn sub_unchecked(&self, g: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (e, c) in &g.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    fn mul_unchecked(&self, g: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero(&self.ctx);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &g.terms {
                let e: Expo = ea.iter().zip(eb).map(|(&x, &y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn neg(&self) -> ParamPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero(&self.ctx);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn pow(&self, k: u32) -> ParamPoly {
        let mut acc = ParamPoly::one(&self.ctx);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Exact substitution of every parameter appearing in `self`.
    pub fn eval(&self, assignment: &BTreeMap<String, Rat>) -> Result<Rat, ExactError> {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = &self.ctx.names()[i];
                let val = assignment
                    .get(name)
                    .ok_or_else(|| ExactError::UnboundParameter(name.clone()))?;
                t = &t * &val.pow(k as u32);
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Partial evaluation: bound parameters are substituted, the rest stay
    /// symbolic.
    pub fn bind(&self, assignment: &BTreeMap<String, Rat>) -> ParamPoly {
        let mut out = ParamPoly::zero(&self.ctx);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = e.clone();
            for (i, k) in rest.iter_mut().enumerate() {
                if *k == 0 {
                    continue;
                }
                if let Some(val) = assignment.get(&self.ctx.names()[i]) {
                    coeff = &coeff * &val.pow(*k as u32);
                    *k = 0;
                }
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Substitute a polynomial for one parameter.
    pub fn subst(&self, name: &str, value: &ParamPoly) -> Result<ParamPoly, ExactError> {
        if self.ctx != value.ctx {
            return Err(ExactError::ContextMismatch);
        }
        let i = self
            .ctx
            .index_of(name)
            .ok_or_else(|| ExactError::UnknownParameter(name.to_string()))?;
        let mut out = ParamPoly::zero(&self.ctx);
        for (e, c) in &self.terms {
            let k = e[i];
            let mut stripped = e.clone();
            stripped[i] = 0;
            let mut base = ParamPoly::zero(&self.ctx);
            base.terms.insert(stripped, c.clone());
            out = out.add_unchecked(&base.mul_unchecked(&value.pow(k as u32)));
        }
        Ok(out)
    }

    /// The coefficient of `name^k`, as a polynomial in the other parameters.
    pub fn coeff_of_power(&self, name: &str, k: u16) -> ParamPoly {
        let mut out = ParamPoly::zero(&self.ctx);
        let Some(i) = self.ctx.index_of(name) else {
            if k == 0 {
                return self.clone();
            }
            return out;
        };
        for (e, c) in &self.terms {
            if e[i] == k {
                let mut stripped = e.clone();
                stripped[i] = 0;
                out.add_term(stripped, c.clone());
            }
        }
        out
    }

    /// Exact polynomial division; `None` when `divisor` does not divide
    /// `self`. Division is by leading-term cancellation in lex order, which
    /// succeeds exactly for true factors.
    pub fn div_exact(&self, divisor: &ParamPoly) -> Option<ParamPoly> {
        if divisor.is_zero() {
            return None;
        }
        let (lead_e, lead_c) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = ParamPoly::zero(&self.ctx);
        while !rem.is_zero() {
            let (re, rc) = rem.terms.iter().next_back().unwrap();
            let re = re.clone();
            let rc = rc.clone();
            if !lead_e.iter().zip(&re).all(|(&d, &m)| d <= m) {
                return None;
            }
            let qe: Expo = re.iter().zip(lead_e).map(|(&m, &d)| m - d).collect();
            let qc = rc.div(lead_c).ok()?;
            let mut mono = ParamPoly::zero(&self.ctx);
            mono.terms.insert(qe, qc);
            rem = rem.sub_unchecked(&mono.mul_unchecked(divisor));
            quot = quot.add_unchecked(&mono);
        }
        Some(quot)
    }

    /// Re-express in another context by parameter name; every parameter
    /// actually used must exist in the target.
    pub fn reembed(&self, target: &ParamCtx) -> Result<ParamPoly, ExactError> {
        let mut map = Vec::with_capacity(self.ctx.len());
        for name in self.ctx.names() {
            map.push(target.index_of(name));
        }
        let mut out = ParamPoly::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0u16; target.len()];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => ne[j] = k,
                    None => return Err(ExactError::UnknownParameter(self.ctx.names()[i].clone())),
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Parameters that actually occur with nonzero exponent.
    pub fn parameters_used(&self) -> Vec<String> {
        let mut used = vec![false; self.ctx.len()];
        for e in self.terms.keys() {
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    used[i] = true;
                }
            }
        }
        self.ctx
            .names()
            .iter()
            .zip(used)
            .filter(|(_, u)| *u)
            .map(|(n, _)| n.clone())
            .collect()
    }

    pub fn terms_len(&self) -> usize {
        self.terms.len()
    }
}

impl std::ops::Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        ParamPoly::arith(self, rhs, PolyOp::Add).expect("parameter context mismatch")
    }
}

impl std::ops::Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        ParamPoly::arith(self, rhs, PolyOp::Sub).expect("parameter context mismatch")
    }
}

impl std::ops::Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        ParamPoly::arith(self, rhs, PolyOp::Mul).expect("parameter context mismatch")
    }
}

/// Generalized binomial coefficient `C(x, m)` with polynomial argument:
/// x(x-1)...(x-m+1)/m!. Used for Chern classes of twists with symbolic rank.
pub fn binomial_poly(x: &ParamPoly, m: u32) -> ParamPoly {
    let ctx = x.ctx().clone();
    let mut num = ParamPoly::one(&ctx);
    let mut fact = Rat::one();
    for j in 0..m {
        num = &num * &(x - &ParamPoly::int(&ctx, j as i64));
        fact = &fact * &Rat::from_int((j + 1) as i64);
    }
    num.scale(&fact.recip().expect("factorial nonzero"))
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest total degree first, then lexicographic in the parameters.
        let mut entries: Vec<(&Expo, &Rat)> = self.terms.iter().collect();
        entries.sort_by(|a, b| {
            let da: u32 = a.0.iter().map(|&x| x as u32).sum();
            let db: u32 = b.0.iter().map(|&x| x as u32).sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0).reverse())
        });
        let mut first = true;
        for (e, c) in entries {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = render_monomial(&self.ctx, e);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn render_monomial(ctx: &ParamCtx, e: &Expo) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(ctx.names()[i].clone()),
            _ => parts.push(format!("{}^{}", ctx.names()[i], k)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> ParamCtx {
        ParamCtx::new(["a", "b", "g", "d", "p"]).unwrap()
    }

    #[test]
    fn rational_arithmetic_reduces() {
        let half = Rat::new(1, 2).unwrap();
        let third = Rat::new(1, 3).unwrap();
        assert_eq!(&half + &third, Rat::new(5, 6).unwrap());
        let big = Rat::new(143040, 5760).unwrap();
        assert_eq!(&big * &Rat::one(), Rat::new(149, 6).unwrap());
        assert_eq!(big.to_string(), "149/6");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let x = Rat::from_int(7);
        assert_eq!(x.div(&Rat::zero()), Err(ExactError::DivisionByZero));
        assert_eq!(
            Rat::arith(&x, &Rat::zero(), RatOp::Div),
            Err(ExactError::DivisionByZero)
        );
        assert_eq!(Rat::new(1, 0), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!("5/6".parse::<Rat>().unwrap(), Rat::new(5, 6).unwrap());
        assert_eq!("-3".parse::<Rat>().unwrap(), Rat::from_int(-3));
        assert!("x".parse::<Rat>().is_err());
        assert_eq!("1/0".parse::<Rat>(), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn polynomial_expansion() {
        let c = ctx();
        let d = ParamPoly::v(&c, "d");
        let p = ParamPoly::v(&c, "p");
        let one = ParamPoly::one(&c);
        let two = ParamPoly::int(&c, 2);
        // (d-1)(d-2)/2 - p = d^2/2 - 3d/2 + 1 - p
        let lhs = (&(&d - &one) * &(&d - &two))
            .scale(&Rat::new(1, 2).unwrap())
            .sub_unchecked(&p);
        let expect = ParamPoly::rat(&c, 1, 2)
            .mul_unchecked(&d.pow(2))
            .sub_unchecked(&ParamPoly::rat(&c, 3, 2).mul_unchecked(&d))
            .add_unchecked(&one)
            .sub_unchecked(&p);
        assert_eq!(lhs, expect);
    }

    #[test]
    fn hand_expansion_of_focal_degree_binomial() {
        let c = ctx();
        let a = ParamPoly::v(&c, "a");
        let g = ParamPoly::v(&c, "g");
        let two = ParamPoly::int(&c, 2);
        let n = &(&two * &a) + &(&two * &g); // 2a + 2g
        let lhs = (&(&n - &ParamPoly::int(&c, 3)) * &(&n - &ParamPoly::int(&c, 4)))
            .scale(&Rat::new(1, 2).unwrap());
        // 2a^2 + 4ag + 2g^2 - 7a - 7g + 6, re-derived by expansion.
        let mut expect = ParamPoly::int(&c, 6);
        expect = &expect + &(&ParamPoly::int(&c, 2) * &a.pow(2));
        expect = &expect + &(&(&ParamPoly::int(&c, 4) * &a) * &g);
        expect = &expect + &(&ParamPoly::int(&c, 2) * &g.pow(2));
        expect = &expect - &(&ParamPoly::int(&c, 7) * &a);
        expect = &expect - &(&ParamPoly::int(&c, 7) * &g);
        assert_eq!(lhs, expect);
    }

    #[test]
    fn mul_by_zero() {
        let c = ctx();
        let f = &ParamPoly::v(&c, "a") + &ParamPoly::int(&c, 3);
        assert!((&f * &ParamPoly::zero(&c)).is_zero());
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let c1 = ctx();
        let c2 = ParamCtx::new(["x"]).unwrap();
        let f = ParamPoly::v(&c1, "a");
        let g = ParamPoly::v(&c2, "x");
        assert_eq!(
            ParamPoly::arith(&f, &g, PolyOp::Add),
            Err(ExactError::ContextMismatch)
        );
    }

    #[test]
    fn evaluation_errors_on_unbound_parameter() {
        let c = ctx();
        let f = &ParamPoly::v(&c, "d") * &ParamPoly::v(&c, "p");
        let mut asn = BTreeMap::new();
        asn.insert("d".to_string(), Rat::from_int(4));
        assert_eq!(
            f.eval(&asn),
            Err(ExactError::UnboundParameter("p".to_string()))
        );
        asn.insert("p".to_string(), Rat::from_int(1));
        assert_eq!(f.eval(&asn).unwrap(), Rat::from_int(4));
    }

    #[test]
    fn evaluation_examples() {
        let c = ctx();
        let d = ParamPoly::v(&c, "d");
        let p = ParamPoly::v(&c, "p");
        let one = ParamPoly::one(&c);
        let mut asn = BTreeMap::new();
        asn.insert("d".to_string(), Rat::from_int(4));
        asn.insert("p".to_string(), Rat::from_int(1));
        // (1/2)(d-1)(d-2) - p at d=4, p=1 -> 2
        let f = (&(&d - &one) * &(&d - &ParamPoly::int(&c, 2)))
            .scale(&Rat::new(1, 2).unwrap())
            .sub_unchecked(&p);
        assert_eq!(f.eval(&asn).unwrap(), Rat::from_int(2));
        // (1/2)(d-2)(d-3+2p) at d=4, p=1 -> 3
        let g = (&(&d - &ParamPoly::int(&c, 2))
            * &(&(&d - &ParamPoly::int(&c, 3)) + &(&ParamPoly::int(&c, 2) * &p)))
            .scale(&Rat::new(1, 2).unwrap());
        assert_eq!(g.eval(&asn).unwrap(), Rat::from_int(3));
        // constants evaluate under an empty assignment
        assert_eq!(
            ParamPoly::int(&c, 7).eval(&BTreeMap::new()).unwrap(),
            Rat::from_int(7)
        );
    }

    #[test]
    fn is_zero_decides_identities() {
        let c = ctx();
        let d = ParamPoly::v(&c, "d");
        let one = ParamPoly::one(&c);
        let two = ParamPoly::int(&c, 2);
        // (d^2 - 3d + 2) - (d-1)(d-2) == 0
        let lhs = &(&d.pow(2) - &(&ParamPoly::int(&c, 3) * &d)) + &two;
        let rhs = &(&d - &one) * &(&d - &two);
        assert!((&lhs - &rhs).is_zero());
        // 2a + 2g - 2 != 2a + 2g - 3
        let a = ParamPoly::v(&c, "a");
        let g = ParamPoly::v(&c, "g");
        let u = &(&(&two * &a) + &(&two * &g)) - &two;
        let v = &(&(&two * &a) + &(&two * &g)) - &ParamPoly::int(&c, 3);
        assert!(!(&u - &v).is_zero());
    }

    #[test]
    fn focal_degree_consistency_identity() {
        // d(d-3)(2d^3+2d^2-35d+26) == 2d^5-4d^4-41d^3+131d^2-78d
        let c = ctx();
        let d = ParamPoly::v(&c, "d");
        let cubic = {
            let mut t = &ParamPoly::int(&c, 2) * &d.pow(3);
            t = &t + &(&ParamPoly::int(&c, 2) * &d.pow(2));
            t = &t - &(&ParamPoly::int(&c, 35) * &d);
            &t + &ParamPoly::int(&c, 26)
        };
        let lhs = &(&d * &(&d - &ParamPoly::int(&c, 3))) * &cubic;
        let rhs = {
            let mut t = &ParamPoly::int(&c, 2) * &d.pow(5);
            t = &t - &(&ParamPoly::int(&c, 4) * &d.pow(4));
            t = &t - &(&ParamPoly::int(&c, 41) * &d.pow(3));
            t = &t + &(&ParamPoly::int(&c, 131) * &d.pow(2));
            &t - &(&ParamPoly::int(&c, 78) * &d)
        };
        assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn exact_division_and_substitution() {
        let c = ctx();
        let d = ParamPoly::v(&c, "d");
        let f = &(&d.pow(2) - &d) * &ParamPoly::v(&c, "a"); // a*d*(d-1)
        let q = f.div_exact(&d).unwrap();
        assert_eq!(q, &(&d - &ParamPoly::one(&c)) * &ParamPoly::v(&c, "a"));
        assert!(f.div_exact(&ParamPoly::v(&c, "p")).is_none());
        // substitute d -> d - 4
        let shifted = d.pow(2).subst("d", &(&d - &ParamPoly::int(&c, 4))).unwrap();
        let expect = &(&d.pow(2) - &(&ParamPoly::int(&c, 8) * &d)) + &ParamPoly::int(&c, 16);
        assert_eq!(shifted, expect);
    }

    #[test]
    fn binding_keeps_unbound_symbolic() {
        let c = ctx();
        let f = &(&ParamPoly::v(&c, "a") * &ParamPoly::v(&c, "d")) + &ParamPoly::v(&c, "p");
        let mut asn = BTreeMap::new();
        asn.insert("d".to_string(), Rat::from_int(3));
        let g = f.bind(&asn);
        let expect = &(&ParamPoly::int(&c, 3) * &ParamPoly::v(&c, "a")) + &ParamPoly::v(&c, "p");
        assert_eq!(g, expect);
    }

    #[test]
    fn display_is_readable() {
        let c = ctx();
        let f = &(&(&ParamPoly::int(&c, 2) * &ParamPoly::v(&c, "a")) - &ParamPoly::int(&c, 7))
            * &ParamPoly::one(&c);
        assert_eq!(f.to_string(), "2*a - 7");
        assert_eq!(ParamPoly::zero(&c).to_string(), "0");
        assert_eq!(ParamPoly::rat(&c, -1, 2).to_string(), "-1/2");
    }

    #[test]
    fn binomial_poly_matches_integer_binomials() {
        let c = ctx();
        let d = ParamPoly::v(&c, "d");
        let b2 = binomial_poly(&d, 2);
        let mut asn = BTreeMap::new();
        asn.insert("d".to_string(), Rat::from_int(7));
        assert_eq!(b2.eval(&asn).unwrap(), Rat::from_int(21));
        asn.insert("d".to_string(), Rat::from_int(-3));
        assert_eq!(b2.eval(&asn).unwrap(), Rat::from_int(6));
    }
}
