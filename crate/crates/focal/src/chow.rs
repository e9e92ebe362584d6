//! Finitely presented graded commutative rings with a degree-top integration
//! functional: the model of the Chow ring (with rational coefficients) of
//! each variety in the catalog.
//!
//! Supported presentations are rewrite towers: a base ring given by an
//! explicit multiplication table on atoms, extended by projective-bundle
//! generators each carrying one power rewrite. Rewriting terminates because
//! every rule is checked at build time to be degree-homogeneous and strictly
//! decreasing in the generator-lexicographic order; confluence is checked at
//! build time on every live monomial with more than one applicable rule.

use crate::exact::{ParamCtx, ParamPoly, Rat};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChowError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` must have positive degree")]
    ZeroDegreeGenerator(String),
    #[error("rewrite for `{monomial}` is not degree-homogeneous")]
    NonHomogeneousRewrite { monomial: String },
    #[error("rewrite for `{monomial}` does not decrease the term order")]
    NonDecreasingRewrite { monomial: String },
    #[error("rewriting is not confluent at `{monomial}`")]
    NonConfluent { monomial: String },
    #[error("missing integration entry for top-degree monomial `{monomial}`")]
    MissingIntegration { monomial: String },
    #[error("the point class must integrate to 1")]
    PointIntegralNotOne,
    #[error("classes live on different varieties")]
    MixedVariety,
    #[error("projective bundles need concrete rank at least 2")]
    RankTooSmall,
    #[error("variety is not a projective bundle")]
    NotABundle,
    #[error("total Chern class must have degree-0 term 1")]
    ChernUnitMissing,
}

pub type Expo = Vec<u16>;
pub(crate) type TermMap = BTreeMap<Expo, ParamPoly>;

fn expo_add(a: &Expo, b: &Expo) -> Expo {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

fn expo_divides(lhs: &Expo, m: &Expo) -> bool {
    lhs.iter().zip(m).all(|(&x, &y)| x <= y)
}

fn expo_sub(m: &Expo, lhs: &Expo) -> Expo {
    m.iter().zip(lhs).map(|(&x, &y)| x - y).collect()
}

/// Strict lexicographic order with earlier generators more significant.
fn lex_gt(a: &Expo, b: &Expo) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x > y;
        }
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone)]
struct Mask {
    gens: Vec<bool>,
    cap: u32,
}

/// Provenance of a projective bundle: enough to push classes forward.
pub(crate) struct Tower {
    pub(crate) base: Arc<Variety>,
    pub(crate) rank: u32,
    /// Total Chern class of the defining bundle, lifted to this variety.
    pub(crate) bundle_chern: TermMap,
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// An immutable presented graded ring together with its integration table,
/// tangent total Chern class and point class. Construct through
/// [`VarietyBuilder`], [`product`] or [`projective_bundle`].
pub struct Variety {
    id: u64,
    name: String,
    ctx: ParamCtx,
    gens: Vec<GeneratorSpec>,
    dim: u32,
    /// Sorted by decreasing lex order of the left-hand side.
    rules: Vec<(Expo, TermMap)>,
    masks: Vec<Mask>,
    integration: BTreeMap<Expo, ParamPoly>,
    tangent: TermMap,
    point: TermMap,
    tower: Option<Tower>,
}

impl fmt::Debug for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Variety({}, dim {})", self.name, self.dim)
    }
}

impl Variety {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn ctx(&self) -> &ParamCtx {
        &self.ctx
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.gens
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    fn weighted_degree(&self, e: &Expo) -> u32 {
        e.iter()
            .zip(&self.gens)
            .map(|(&k, g)| k as u32 * g.degree)
            .sum()
    }

    fn masked_out(&self, e: &Expo) -> bool {
        if self.weighted_degree(e) > self.dim {
            return true;
        }
        for m in &self.masks {
            let d: u32 = e
                .iter()
                .zip(&self.gens)
                .zip(&m.gens)
                .filter(|(_, &inc)| inc)
                .map(|((&k, g), _)| k as u32 * g.degree)
                .sum();
            if d > m.cap {
                return true;
            }
        }
        false
    }

    fn render_expo(&self, e: &Expo) -> String {
        let mut parts = Vec::new();
        for (i, &k) in e.iter().enumerate() {
            match k {
                0 => {}
                1 => parts.push(self.gens[i].name.clone()),
                _ => parts.push(format!("{}^{}", self.gens[i].name, k)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    fn find_rule(&self, m: &Expo) -> Option<&(Expo, TermMap)> {
        self.rules.iter().find(|(lhs, _)| expo_divides(lhs, m))
    }

    /// Full normal form of a single monomial. Terminates: rules are
    /// lex-decreasing and degree-homogeneous, so every step strictly
    /// decreases a monomial within the finite set of its degree.
    fn reduce_monomial(&self, m: &Expo) -> TermMap {
        let mut out = TermMap::new();
        if self.masked_out(m) {
            return out;
        }
        match self.find_rule(m) {
            None => {
                out.insert(m.clone(), ParamPoly::one(&self.ctx));
                out
            }
            Some((lhs, rhs)) => {
                let cof = expo_sub(m, lhs);
                for (rm, rc) in rhs {
                    let inner = self.reduce_monomial(&expo_add(rm, &cof));
                    for (nm, nc) in inner {
                        add_into(&mut out, nm, &(rc * &nc));
                    }
                }
                out
            }
        }
    }

    /// Like `reduce_monomial`, but the first rewrite step is forced to use
    /// the given rule; used by the build-time confluence check.
    fn reduce_with_first(&self, m: &Expo, rule: &(Expo, TermMap)) -> TermMap {
        let mut out = TermMap::new();
        if self.masked_out(m) {
            return out;
        }
        let (lhs, rhs) = rule;
        let cof = expo_sub(m, lhs);
        for (rm, rc) in rhs {
            let inner = self.reduce_monomial(&expo_add(rm, &cof));
            for (nm, nc) in inner {
                add_into(&mut out, nm, &(rc * &nc));
            }
        }
        out
    }

    pub(crate) fn nf_map(&self, raw: &TermMap) -> TermMap {
        let mut out = TermMap::new();
        for (m, c) in raw {
            if c.is_zero() {
                continue;
            }
            for (nm, nc) in self.reduce_monomial(m) {
                add_into(&mut out, nm, &(c * &nc));
            }
        }
        out
    }

    pub(crate) fn mul_maps(&self, a: &TermMap, b: &TermMap) -> TermMap {
        let mut out = TermMap::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let c = ca * cb;
                if c.is_zero() {
                    continue;
                }
                for (nm, nc) in self.reduce_monomial(&expo_add(ma, mb)) {
                    add_into(&mut out, nm, &(&c * &nc));
                }
            }
        }
        out
    }

    fn integrate_map(&self, a: &TermMap) -> ParamPoly {
        let mut acc = ParamPoly::zero(&self.ctx);
        for (m, c) in a {
            if self.weighted_degree(m) != self.dim {
                continue;
            }
            if let Some(v) = self.integration.get(m) {
                acc = &acc + &(c * v);
            }
        }
        acc
    }

    /// Enumerate monomials of weighted degree <= dim that survive the masks;
    /// when `nf_only`, skip monomials divisible by a rewrite left-hand side.
    fn live_monomials(&self, nf_only: bool) -> Vec<Expo> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; self.gens.len()];
        self.enumerate(0, &mut cur, nf_only, &mut out);
        out
    }

    fn enumerate(&self, i: usize, cur: &mut Expo, nf_only: bool, out: &mut Vec<Expo>) {
        if self.masked_out(cur) {
            return;
        }
        if i == self.gens.len() {
            if !nf_only || self.find_rule(cur).is_none() {
                out.push(cur.clone());
            }
            return;
        }
        let mut k = 0u16;
        loop {
            cur[i] = k;
            if self.masked_out(cur) {
                cur[i] = 0;
                return;
            }
            self.enumerate(i + 1, cur, nf_only, out);
            k += 1;
        }
    }

    fn validate(&self) -> Result<(), ChowError> {
        // Degree homogeneity and strict decrease of every rule.
        for (lhs, rhs) in &self.rules {
            let d = self.weighted_degree(lhs);
            for m in rhs.keys() {
                if self.weighted_degree(m) != d {
                    return Err(ChowError::NonHomogeneousRewrite {
                        monomial: self.render_expo(lhs),
                    });
                }
                if !lex_gt(lhs, m) {
                    return Err(ChowError::NonDecreasingRewrite {
                        monomial: self.render_expo(lhs),
                    });
                }
            }
        }
        // Local confluence on every live monomial with several applicable
        // rules. Reductions are degree-preserving and the live set is closed
        // under them, so this is a full check on the truncated ring.
        for m in self.live_monomials(false) {
            let applicable: Vec<&(Expo, TermMap)> = self
                .rules
                .iter()
                .filter(|(lhs, _)| expo_divides(lhs, &m))
                .collect();
            if applicable.len() < 2 {
                continue;
            }
            let first = self.reduce_with_first(&m, applicable[0]);
            for rule in &applicable[1..] {
                let other = self.reduce_with_first(&m, rule);
                if !maps_equal(&first, &other) {
                    return Err(ChowError::NonConfluent {
                        monomial: self.render_expo(&m),
                    });
                }
            }
        }
        // Integration must be total on top-degree normal forms.
        for m in self.live_monomials(true) {
            if self.weighted_degree(&m) == self.dim && !self.integration.contains_key(&m) {
                return Err(ChowError::MissingIntegration {
                    monomial: self.render_expo(&m),
                });
            }
        }
        Ok(())
    }

    fn check_point(&self) -> Result<(), ChowError> {
        let p = self.nf_map(&self.point);
        if self.integrate_map(&p).is_one() {
            Ok(())
        } else {
            Err(ChowError::PointIntegralNotOne)
        }
    }
}

fn add_into(map: &mut TermMap, m: Expo, c: &ParamPoly) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&m) {
        Some(old) => {
            let s = &*old + c;
            if s.is_zero() {
                map.remove(&m);
            } else {
                *old = s;
            }
        }
        None => {
            map.insert(m, c.clone());
        }
    }
}

fn maps_equal(a: &TermMap, b: &TermMap) -> bool {
    a == b
}

/// A graded class on a fixed variety, always stored in normal form with
/// components above the dimension dropped.
#[derive(Clone)]
pub struct Class {
    host: Arc<Variety>,
    terms: TermMap,
}

impl PartialEq for Class {
    fn eq(&self, other: &Self) -> bool {
        self.host.id == other.host.id && self.terms == other.terms
    }
}

impl Class {
    pub fn zero(host: &Arc<Variety>) -> Self {
        Class {
            host: host.clone(),
            terms: TermMap::new(),
        }
    }

    pub fn one(host: &Arc<Variety>) -> Self {
        let mut terms = TermMap::new();
        terms.insert(vec![0; host.gens.len()], ParamPoly::one(&host.ctx));
        Class {
            host: host.clone(),
            terms,
        }
    }

    pub fn constant(host: &Arc<Variety>, c: &ParamPoly) -> Self {
        let mut terms = TermMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; host.gens.len()], c.clone());
        }
        Class {
            host: host.clone(),
            terms,
        }
    }

    pub fn generator(host: &Arc<Variety>, name: &str) -> Result<Self, ChowError> {
        let i = host
            .gen_index(name)
            .ok_or_else(|| ChowError::UnknownGenerator(name.to_string()))?;
        let mut e = vec![0u16; host.gens.len()];
        e[i] = 1;
        let mut terms = TermMap::new();
        terms.insert(e, ParamPoly::one(&host.ctx));
        Ok(Class {
            host: host.clone(),
            terms: host.nf_map(&terms),
        })
    }

    /// Generator lookup that panics; for catalog code.
    pub fn g(host: &Arc<Variety>, name: &str) -> Self {
        Self::generator(host, name).expect("generator present")
    }

    pub(crate) fn from_terms(host: &Arc<Variety>, raw: TermMap) -> Self {
        let terms = host.nf_map(&raw);
        Class {
            host: host.clone(),
            terms,
        }
    }

    pub(crate) fn terms(&self) -> &TermMap {
        &self.terms
    }

    pub fn host(&self) -> &Arc<Variety> {
        &self.host
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &ParamPoly) -> Class {
        let mut terms = TermMap::new();
        for (m, v) in &self.terms {
            add_into(&mut terms, m.clone(), &(v * c));
        }
        Class {
            host: self.host.clone(),
            terms,
        }
    }

    pub fn scale_rat(&self, c: &Rat) -> Class {
        self.scale(&ParamPoly::constant(&self.host.ctx, c.clone()))
    }

    pub fn neg(&self) -> Class {
        self.scale_rat(&Rat::from_int(-1))
    }

    /// The degree-`k` graded component.
    pub fn component(&self, k: u32) -> Class {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.host.weighted_degree(m) == k)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Class {
            host: self.host.clone(),
            terms,
        }
    }

    pub fn truncate(&self, up_to: u32) -> Class {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.host.weighted_degree(m) <= up_to)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Class {
            host: self.host.clone(),
            terms,
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| self.host.weighted_degree(m))
            .max()
            .unwrap_or(0)
    }

    pub fn pow(&self, k: u32) -> Class {
        let mut acc = Class::one(&self.host);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn integrate(&self) -> ParamPoly {
        self.host.integrate_map(&self.terms)
    }

    /// Checked product; mixed-variety operands are an error.
    pub fn mul_checked(&self, other: &Class) -> Result<Class, ChowError> {
        if self.host.id != other.host.id {
            return Err(ChowError::MixedVariety);
        }
        Ok(Class {
            host: self.host.clone(),
            terms: self.host.mul_maps(&self.terms, &other.terms),
        })
    }

    pub fn add_checked(&self, other: &Class) -> Result<Class, ChowError> {
        if self.host.id != other.host.id {
            return Err(ChowError::MixedVariety);
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_into(&mut terms, m.clone(), c);
        }
        Ok(Class {
            host: self.host.clone(),
            terms,
        })
    }

    /// Bind scenario parameters inside the coefficients (display helper;
    /// the monomial part and the normal form are untouched).
    pub fn bind_coefficients(&self, assignment: &std::collections::BTreeMap<String, Rat>) -> Class {
        let mut terms = TermMap::new();
        for (m, c) in &self.terms {
            add_into(&mut terms, m.clone(), &c.bind(assignment));
        }
        Class {
            host: self.host.clone(),
            terms,
        }
    }

    /// Transport along an inclusion of presentations: every generator of the
    /// source must exist in the target with the same name and degree.
    /// This is the pullback to a bundle or product built over this variety.
    pub fn transfer_to(&self, target: &Arc<Variety>) -> Result<Class, ChowError> {
        if self.host.id == target.id {
            return Ok(self.clone());
        }
        let mut index = Vec::with_capacity(self.host.gens.len());
        for g in &self.host.gens {
            let j = target
                .gen_index(&g.name)
                .filter(|&j| target.gens[j].degree == g.degree)
                .ok_or_else(|| ChowError::UnknownGenerator(g.name.clone()))?;
            index.push(j);
        }
        let mut raw = TermMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0u16; target.gens.len()];
            for (i, &k) in m.iter().enumerate() {
                e[index[i]] = k;
            }
            add_into(&mut raw, e, c);
        }
        Ok(Class::from_terms(target, raw))
    }
}

impl std::ops::Add for &Class {
    type Output = Class;
    fn add(self, rhs: &Class) -> Class {
        self.add_checked(rhs).expect("classes on the same variety")
    }
}

impl std::ops::Sub for &Class {
    type Output = Class;
    fn sub(self, rhs: &Class) -> Class {
        self.add_checked(&rhs.neg())
            .expect("classes on the same variety")
    }
}

impl std::ops::Mul for &Class {
    type Output = Class;
    fn mul(self, rhs: &Class) -> Class {
        self.mul_checked(rhs).expect("classes on the same variety")
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut entries: Vec<(&Expo, &ParamPoly)> = self.terms.iter().collect();
        entries.sort_by_key(|(m, _)| (self.host.weighted_degree(m), (*m).clone()));
        let mut first = true;
        for (m, c) in entries {
            let mono = self.host.render_expo(m);
            let coeff = c.to_string();
            let piece = if mono == "1" {
                coeff
            } else if coeff == "1" {
                mono
            } else if coeff == "-1" {
                format!("-{mono}")
            } else if c.constant_value().is_some() {
                format!("{coeff}*{mono}")
            } else {
                format!("({coeff})*{mono}")
            };
            if first {
                write!(f, "{piece}")?;
                first = false;
            } else if let Some(stripped) = piece.strip_prefix('-') {
                write!(f, " - {stripped}")?;
            } else {
                write!(f, " + {piece}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

type RawMono<'a> = &'a [(&'a str, u16)];
type OwnedMono = Vec<(String, u16)>;
type OwnedTerms = Vec<(OwnedMono, ParamPoly)>;

/// Builder for base presentations (multiplication tables plus explicit power
/// rules). Towers and products are derived with [`projective_bundle`] and
/// [`product`].
pub struct VarietyBuilder {
    name: String,
    ctx: ParamCtx,
    dim: u32,
    gens: Vec<GeneratorSpec>,
    rules: Vec<(OwnedMono, OwnedTerms)>,
    integrals: OwnedTerms,
    tangent: OwnedTerms,
    point: OwnedMono,
}

impl VarietyBuilder {
    pub fn new(name: &str, ctx: &ParamCtx, dim: u32) -> Self {
        VarietyBuilder {
            name: name.to_string(),
            ctx: ctx.clone(),
            dim,
            gens: Vec::new(),
            rules: Vec::new(),
            integrals: Vec::new(),
            tangent: vec![(Vec::new(), ParamPoly::one(ctx))],
            point: Vec::new(),
        }
    }

    pub fn generator(mut self, name: &str, degree: u32) -> Self {
        self.gens.push(GeneratorSpec {
            name: name.to_string(),
            degree,
        });
        self
    }

    pub fn rewrite(mut self, lhs: RawMono, rhs: &[(RawMono, ParamPoly)]) -> Self {
        let lhs = lhs.iter().map(|(n, k)| (n.to_string(), *k)).collect();
        let rhs = rhs
            .iter()
            .map(|(m, c)| {
                (
                    m.iter().map(|(n, k)| (n.to_string(), *k)).collect(),
                    c.clone(),
                )
            })
            .collect();
        self.rules.push((lhs, rhs));
        self
    }

    pub fn integral(mut self, mono: RawMono, value: ParamPoly) -> Self {
        self.integrals.push((
            mono.iter().map(|(n, k)| (n.to_string(), *k)).collect(),
            value,
        ));
        self
    }

    /// Total Chern class of the tangent bundle, as raw terms.
    pub fn tangent(mut self, terms: &[(RawMono, ParamPoly)]) -> Self {
        self.tangent = terms
            .iter()
            .map(|(m, c)| {
                (
                    m.iter().map(|(n, k)| (n.to_string(), *k)).collect(),
                    c.clone(),
                )
            })
            .collect();
        self
    }

    pub fn point(mut self, mono: RawMono) -> Self {
        self.point = mono.iter().map(|(n, k)| (n.to_string(), *k)).collect();
        self
    }

    fn resolve(&self, mono: &[(String, u16)]) -> Result<Expo, ChowError> {
        let mut e = vec![0u16; self.gens.len()];
        for (name, k) in mono {
            let i = self
                .gens
                .iter()
                .position(|g| &g.name == name)
                .ok_or_else(|| ChowError::UnknownGenerator(name.clone()))?;
            e[i] += k;
        }
        Ok(e)
    }

    pub fn build(self) -> Result<Arc<Variety>, ChowError> {
        for (i, g) in self.gens.iter().enumerate() {
            if g.degree == 0 {
                return Err(ChowError::ZeroDegreeGenerator(g.name.clone()));
            }
            if self.gens[..i].iter().any(|h| h.name == g.name) {
                return Err(ChowError::DuplicateGenerator(g.name.clone()));
            }
        }
        let mut rules = Vec::new();
        for (lhs, rhs) in &self.rules {
            let lhs = self.resolve(lhs)?;
            let mut map = TermMap::new();
            for (m, c) in rhs {
                add_into(&mut map, self.resolve(m)?, c);
            }
            rules.push((lhs, map));
        }
        rules.sort_by(|a, b| b.0.cmp(&a.0));
        let mut integration = BTreeMap::new();
        for (m, v) in &self.integrals {
            integration.insert(self.resolve(m)?, v.clone());
        }
        let mut tangent = TermMap::new();
        for (m, c) in &self.tangent {
            add_into(&mut tangent, self.resolve(m)?, c);
        }
        let mut point = TermMap::new();
        add_into(
            &mut point,
            self.resolve(&self.point)?,
            &ParamPoly::one(&self.ctx),
        );
        let v = Variety {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            name: self.name,
            ctx: self.ctx,
            gens: self.gens,
            dim: self.dim,
            rules,
            masks: Vec::new(),
            integration,
            tangent: TermMap::new(),
            point,
            tower: None,
        };
        v.validate()?;
        let mut v = v;
        v.tangent = v.nf_map(&tangent);
        v.check_point()?;
        Ok(Arc::new(v))
    }
}

impl Variety {
    pub fn tangent_class(self: &Arc<Self>) -> Class {
        Class {
            host: self.clone(),
            terms: self.tangent.clone(),
        }
    }

    pub fn point_class(self: &Arc<Self>) -> Class {
        Class {
            host: self.clone(),
            terms: self.point.clone(),
        }
    }

    /// Normal form of a raw expression given as monomials in generator names.
    pub fn normal_form(
        self: &Arc<Self>,
        terms: &[(RawMono, ParamPoly)],
    ) -> Result<Class, ChowError> {
        let mut raw = TermMap::new();
        for (mono, c) in terms {
            let mut e = vec![0u16; self.gens.len()];
            for (name, k) in mono.iter() {
                let i = self
                    .gen_index(name)
                    .ok_or_else(|| ChowError::UnknownGenerator(name.to_string()))?;
                e[i] += k;
            }
            add_into(&mut raw, e, c);
        }
        Ok(Class::from_terms(self, raw))
    }

    pub(crate) fn bundle_info(&self) -> Option<&Tower> {
        self.tower.as_ref()
    }

    /// A copy of this variety with the tangent total Chern class replaced.
    /// Used when the tangent bundle is computed from sheaf data that needs
    /// the ring to exist first (e.g. S (x) Q on the Grassmannian).
    pub fn with_tangent(self: &Arc<Self>, tangent: &Class) -> Result<Arc<Variety>, ChowError> {
        if tangent.host.id != self.id {
            return Err(ChowError::MixedVariety);
        }
        Ok(Arc::new(Variety {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            name: self.name.clone(),
            ctx: self.ctx.clone(),
            gens: self.gens.clone(),
            dim: self.dim,
            rules: self.rules.clone(),
            masks: self.masks.clone(),
            integration: self.integration.clone(),
            tangent: tangent.terms.clone(),
            point: self.point.clone(),
            tower: self.tower.as_ref().map(|t| Tower {
                base: t.base.clone(),
                rank: t.rank,
                bundle_chern: t.bundle_chern.clone(),
            }),
        }))
    }
}

/// The product of two varieties: generators and rewrites are unioned (with
/// automatic renaming of clashes in the right factor), the dimension adds,
/// integration multiplies on split monomials, tangent classes multiply.
pub fn product(v: &Arc<Variety>, w: &Arc<Variety>) -> Result<Arc<Variety>, ChowError> {
    if v.ctx != w.ctx {
        return Err(ChowError::MixedVariety);
    }
    let mut gens = v.gens.clone();
    let mut w_names = Vec::new();
    for g in &w.gens {
        let mut name = g.name.clone();
        while gens.iter().any(|h| h.name == name) {
            name.push('\'');
        }
        w_names.push(name.clone());
        gens.push(GeneratorSpec {
            name,
            degree: g.degree,
        });
    }
    let nv = v.gens.len();
    let nw = w.gens.len();
    let lift_v = |e: &Expo| -> Expo {
        let mut out = vec![0u16; nv + nw];
        out[..nv].copy_from_slice(e);
        out
    };
    let lift_w = |e: &Expo| -> Expo {
        let mut out = vec![0u16; nv + nw];
        out[nv..].copy_from_slice(e);
        out
    };
    let mut rules = Vec::new();
    for (lhs, rhs) in &v.rules {
        let map = rhs.iter().map(|(m, c)| (lift_v(m), c.clone())).collect();
        rules.push((lift_v(lhs), map));
    }
    for (lhs, rhs) in &w.rules {
        let map = rhs.iter().map(|(m, c)| (lift_w(m), c.clone())).collect();
        rules.push((lift_w(lhs), map));
    }
    rules.sort_by(|a, b| b.0.cmp(&a.0));
    let mut masks = Vec::new();
    let mut v_mask = vec![false; nv + nw];
    v_mask[..nv].iter_mut().for_each(|b| *b = true);
    masks.push(Mask {
        gens: v_mask,
        cap: v.dim,
    });
    let mut w_mask = vec![false; nv + nw];
    w_mask[nv..].iter_mut().for_each(|b| *b = true);
    masks.push(Mask {
        gens: w_mask,
        cap: w.dim,
    });
    for m in &v.masks {
        let mut gens_mask = vec![false; nv + nw];
        gens_mask[..nv].copy_from_slice(&m.gens);
        masks.push(Mask {
            gens: gens_mask,
            cap: m.cap,
        });
    }
    for m in &w.masks {
        let mut gens_mask = vec![false; nv + nw];
        gens_mask[nv..].copy_from_slice(&m.gens);
        masks.push(Mask {
            gens: gens_mask,
            cap: m.cap,
        });
    }
    let mut integration = BTreeMap::new();
    for (mv, cv) in &v.integration {
        for (mw, cw) in &w.integration {
            integration.insert(expo_add(&lift_v(mv), &lift_w(mw)), cv * cw);
        }
    }
    let tangent_raw: TermMap = {
        let tv: TermMap = v
            .tangent
            .iter()
            .map(|(m, c)| (lift_v(m), c.clone()))
            .collect();
        let tw: TermMap = w
            .tangent
            .iter()
            .map(|(m, c)| (lift_w(m), c.clone()))
            .collect();
        (tv, tw)
    }
    .into_product();
    let point_raw: TermMap = {
        let pv: TermMap = v
            .point
            .iter()
            .map(|(m, c)| (lift_v(m), c.clone()))
            .collect();
        let pw: TermMap = w
            .point
            .iter()
            .map(|(m, c)| (lift_w(m), c.clone()))
            .collect();
        (pv, pw)
    }
    .into_product();
    let vr = Variety {
        id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
        name: format!("{} x {}", v.name, w.name),
        ctx: v.ctx.clone(),
        gens,
        dim: v.dim + w.dim,
        rules,
        masks,
        integration,
        tangent: TermMap::new(),
        point: TermMap::new(),
        tower: None,
    };
    vr.validate()?;
    let mut vr = vr;
    vr.tangent = vr.nf_map(&tangent_raw);
    vr.point = vr.nf_map(&point_raw);
    vr.check_point()?;
    Ok(Arc::new(vr))
}

trait IntoProduct {
    fn into_product(self) -> TermMap;
}

impl IntoProduct for (TermMap, TermMap) {
    fn into_product(self) -> TermMap {
        let (a, b) = self;
        let mut out = TermMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                add_into(&mut out, expo_add(ma, mb), &(ca * cb));
            }
        }
        out
    }
}

/// The projectivization (rank-one quotients) of a bundle of concrete rank
/// `r >= 2` on `base`: the new degree-1 generator satisfies the alternating
/// Grothendieck rewrite, the dimension grows by `r - 1`, integration extends
/// fiberwise, and the tangent class gains the relative tangent factor.
pub fn projective_bundle(
    base: &Arc<Variety>,
    rank: u32,
    bundle_chern: &Class,
    zeta_name: &str,
) -> Result<Arc<Variety>, ChowError> {
    if rank < 2 {
        return Err(ChowError::RankTooSmall);
    }
    if base.id != bundle_chern.host.id {
        return Err(ChowError::MixedVariety);
    }
    if !bundle_chern.component(0).integrate_is_unit(base) {
        return Err(ChowError::ChernUnitMissing);
    }
    let nb = base.gens.len();
    let lift = |e: &Expo| -> Expo {
        let mut out = vec![0u16; nb + 1];
        out[1..].copy_from_slice(e);
        out
    };
    let mut gens = vec![GeneratorSpec {
        name: zeta_name.to_string(),
        degree: 1,
    }];
    if base.gens.iter().any(|g| g.name == zeta_name) {
        return Err(ChowError::DuplicateGenerator(zeta_name.to_string()));
    }
    gens.extend(base.gens.clone());
    let mut rules = Vec::new();
    for (lhs, rhs) in &base.rules {
        let map = rhs.iter().map(|(m, c)| (lift(m), c.clone())).collect();
        rules.push((lift(lhs), map));
    }
    // zeta^r -> c1 zeta^{r-1} - c2 zeta^{r-2} + ... - (-1)^r c_r
    let mut zeta_lhs = vec![0u16; nb + 1];
    zeta_lhs[0] = rank as u16;
    let mut zeta_rhs = TermMap::new();
    for i in 1..=rank {
        let ci = bundle_chern.component(i);
        let sign = if i % 2 == 1 {
            Rat::one()
        } else {
            Rat::from_int(-1)
        };
        for (m, c) in &ci.terms {
            let mut e = lift(m);
            e[0] = (rank - i) as u16;
            add_into(&mut zeta_rhs, e, &c.scale(&sign));
        }
    }
    rules.push((zeta_lhs, zeta_rhs));
    rules.sort_by(|a, b| b.0.cmp(&a.0));
    let mut masks = Vec::new();
    let mut base_mask = vec![false; nb + 1];
    base_mask[1..].iter_mut().for_each(|b| *b = true);
    masks.push(Mask {
        gens: base_mask,
        cap: base.dim,
    });
    for m in &base.masks {
        let mut gens_mask = vec![false; nb + 1];
        gens_mask[1..].copy_from_slice(&m.gens);
        masks.push(Mask {
            gens: gens_mask,
            cap: m.cap,
        });
    }
    let mut integration = BTreeMap::new();
    for (m, c) in &base.integration {
        let mut e = lift(m);
        e[0] = (rank - 1) as u16;
        integration.insert(e, c.clone());
    }
    let dim = base.dim + rank - 1;
    let bundle_chern_lifted: TermMap = bundle_chern
        .terms
        .iter()
        .map(|(m, c)| (lift(m), c.clone()))
        .collect();
    let mut point = TermMap::new();
    for (m, c) in &base.point {
        let mut e = lift(m);
        e[0] = (rank - 1) as u16;
        add_into(&mut point, e, c);
    }
    let v = Variety {
        id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
        name: format!("P({}) over {}", zeta_name, base.name),
        ctx: base.ctx.clone(),
        gens,
        dim,
        rules,
        masks,
        integration,
        tangent: TermMap::new(),
        point,
        tower: Some(Tower {
            base: base.clone(),
            rank,
            bundle_chern: bundle_chern_lifted.clone(),
        }),
    };
    v.validate()?;
    v.check_point()?;
    let mut v = v;
    // Relative tangent: S^dual twisted by the tautological quotient class,
    // where S is the kernel of the tautological quotient.
    let trel = relative_tangent_chern_raw(&v, rank, &bundle_chern_lifted);
    let base_tangent: TermMap = base
        .tangent
        .iter()
        .map(|(m, c)| (lift(m), c.clone()))
        .collect();
    v.tangent = v.mul_maps(&v.nf_map(&base_tangent), &trel);
    Ok(Arc::new(v))
}

impl Class {
    fn integrate_is_unit(&self, base: &Arc<Variety>) -> bool {
        let unit: Expo = vec![0u16; base.gens.len()];
        self.terms.get(&unit).map(|c| c.is_one()).unwrap_or(false)
    }
}

/// c(T_rel) = sum_i c_i(S^dual) (1 + zeta)^{r-1-i}, with
/// c(S) = c(E) / (1 + zeta) computed by series division in the bundle ring.
fn relative_tangent_chern_raw(v: &Variety, rank: u32, e_chern: &TermMap) -> TermMap {
    let dim = v.dim;
    let e_nf = v.nf_map(e_chern);
    let mut zeta_series = TermMap::new();
    let mut unit = vec![0u16; v.gens.len()];
    add_into(&mut zeta_series, unit.clone(), &ParamPoly::one(&v.ctx));
    unit[0] = 1;
    add_into(&mut zeta_series, unit.clone(), &ParamPoly::one(&v.ctx));
    let s = series_div_maps(v, &e_nf, &zeta_series, dim);
    // Dualize: flip the sign of odd components.
    let mut s_dual = TermMap::new();
    for (m, c) in &s {
        let d = v.weighted_degree(m);
        let c = if d % 2 == 1 { c.neg() } else { c.clone() };
        add_into(&mut s_dual, m.clone(), &c);
    }
    // Twist the rank r-1 kernel by the tautological class.
    let mut acc = TermMap::new();
    for i in 0..rank {
        let ci: TermMap = s_dual
            .iter()
            .filter(|(m, _)| v.weighted_degree(m) == i)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        if ci.is_empty() {
            continue;
        }
        let factor = pow_map(v, &zeta_series, rank - 1 - i);
        let term = v.mul_maps(&ci, &factor);
        for (m, c) in term {
            add_into(&mut acc, m, &c);
        }
    }
    acc
}

fn pow_map(v: &Variety, base: &TermMap, k: u32) -> TermMap {
    let mut acc = TermMap::new();
    acc.insert(vec![0u16; v.gens.len()], ParamPoly::one(&v.ctx));
    for _ in 0..k {
        acc = v.mul_maps(&acc, base);
    }
    acc
}

/// Degreewise series division a / b with b starting at 1.
pub(crate) fn series_div_maps(v: &Variety, a: &TermMap, b: &TermMap, up_to: u32) -> TermMap {
    let comp = |map: &TermMap, k: u32| -> TermMap {
        map.iter()
            .filter(|(m, _)| v.weighted_degree(m) == k)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    };
    let mut q = TermMap::new();
    for (m, c) in comp(a, 0) {
        add_into(&mut q, m, &c);
    }
    for k in 1..=up_to {
        let mut qk = comp(a, k);
        for j in 1..=k {
            let bj = comp(b, j);
            if bj.is_empty() {
                continue;
            }
            let qkj = comp(&q, k - j);
            let prod = v.mul_maps(&bj, &qkj);
            for (m, c) in prod {
                add_into(&mut qk, m, &c.neg());
            }
        }
        for (m, c) in qk {
            add_into(&mut q, m, &c);
        }
    }
    q
}

/// Push a class on a projective bundle down to the base:
/// pi_*(zeta^k . beta) = s_{k-r+1}(E) . beta. On normal forms this extracts
/// the zeta^{r-1} coefficient.
pub fn pushforward(c: &Class) -> Result<Class, ChowError> {
    let tower = c.host.tower.as_ref().ok_or(ChowError::NotABundle)?;
    let base = &tower.base;
    let top = (tower.rank - 1) as u16;
    let mut raw = TermMap::new();
    for (m, coeff) in &c.terms {
        if m[0] != top {
            continue;
        }
        let e: Expo = m[1..].to_vec();
        add_into(&mut raw, e, coeff);
    }
    Ok(Class::from_terms(base, raw))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> ParamCtx {
        ParamCtx::new(["a", "b", "g", "k2", "chi"]).unwrap()
    }

    fn p3(cx: &ParamCtx) -> Arc<Variety> {
        VarietyBuilder::new("P3", cx, 3)
            .generator("h", 1)
            .rewrite(&[("h", 4)], &[])
            .integral(&[("h", 3)], ParamPoly::one(cx))
            .tangent(&[
                (&[], ParamPoly::one(cx)),
                (&[("h", 1)], ParamPoly::int(cx, 4)),
                (&[("h", 2)], ParamPoly::int(cx, 6)),
                (&[("h", 3)], ParamPoly::int(cx, 4)),
            ])
            .point(&[("h", 3)])
            .build()
            .unwrap()
    }

    fn g13(cx: &ParamCtx) -> Arc<Variety> {
        let one = ParamPoly::one(cx);
        VarietyBuilder::new("G(1,3)", cx, 4)
            .generator("q1", 1)
            .generator("q2", 2)
            .rewrite(
                &[("q1", 3)],
                &[(&[("q1", 1), ("q2", 1)], ParamPoly::int(cx, 2))],
            )
            .rewrite(&[("q1", 2), ("q2", 1)], &[(&[("q2", 2)], one.clone())])
            .integral(&[("q2", 2)], one.clone())
            .point(&[("q2", 2)])
            .build()
            .unwrap()
    }

    fn formal_surface(cx: &ParamCtx) -> Arc<Variety> {
        let a = ParamPoly::v(cx, "a");
        let b = ParamPoly::v(cx, "b");
        let g = ParamPoly::v(cx, "g");
        let k2 = ParamPoly::v(cx, "k2");
        let chi = ParamPoly::v(cx, "chi");
        let two = ParamPoly::int(cx, 2);
        let hk = &(&(&two * &g) - &two) - &(&a + &b);
        let c2t = &(&ParamPoly::int(cx, 12) * &chi) - &k2;
        VarietyBuilder::new("X", cx, 2)
            .generator("H", 1)
            .generator("K", 1)
            .generator("pt", 2)
            .rewrite(&[("H", 2)], &[(&[("pt", 1)], &a + &b)])
            .rewrite(&[("H", 1), ("K", 1)], &[(&[("pt", 1)], hk)])
            .rewrite(&[("K", 2)], &[(&[("pt", 1)], k2)])
            .rewrite(&[("pt", 2)], &[])
            .integral(&[("pt", 1)], ParamPoly::one(cx))
            .tangent(&[
                (&[], ParamPoly::one(cx)),
                (&[("K", 1)], ParamPoly::int(cx, -1)),
                (&[("pt", 1)], c2t),
            ])
            .point(&[("pt", 1)])
            .build()
            .unwrap()
    }

    #[test]
    fn projective_space_integrates() {
        let cx = ctx();
        let v = p3(&cx);
        let h = Class::g(&v, "h");
        assert_eq!(h.pow(3).integrate(), ParamPoly::one(&cx));
        assert!(h.pow(4).is_zero());
        assert!(h.pow(2).integrate().is_zero());
    }

    #[test]
    fn schubert_ring_matches_classical_counts() {
        let cx = ctx();
        let g = g13(&cx);
        let q1 = Class::g(&g, "q1");
        let q2 = Class::g(&g, "q2");
        // sigma1^3 = 2 sigma2,1: q1^3 -> 2 q1 q2
        let expect = (&q1 * &q2).scale(&ParamPoly::int(&cx, 2));
        assert_eq!(q1.pow(3), expect);
        // four general lines meet two lines
        assert_eq!(q1.pow(4).integrate(), ParamPoly::int(&cx, 2));
        assert_eq!((&q1.pow(2) * &q2).integrate(), ParamPoly::one(&cx));
        assert_eq!(q2.pow(2).integrate(), ParamPoly::one(&cx));
    }

    #[test]
    fn schubert_structure_constants_against_pieri_oracle() {
        // Independent oracle: the six Schubert classes of G(1,3) with the
        // classical multiplication table, mapped onto the presentation by
        // q2 = beta class, q1^2 = alpha + beta.
        // Basis order: [1, s1, s2, s11, s21, s22].
        let mul_s1 = [
            // s1 * basis element, as coefficient vectors
            [0, 1, 0, 0, 0, 0], // 1 -> s1
            [0, 0, 1, 1, 0, 0], // s1 -> s2 + s11
            [0, 0, 0, 0, 1, 0], // s2 -> s21
            [0, 0, 0, 0, 1, 0], // s11 -> s21
            [0, 0, 0, 0, 0, 1], // s21 -> s22
            [0, 0, 0, 0, 0, 0], // s22 -> 0
        ];
        // Multiply s1^k in the oracle.
        let mut vec = [1i64, 0, 0, 0, 0, 0];
        for _ in 0..4 {
            let mut next = [0i64; 6];
            for (i, &c) in vec.iter().enumerate() {
                for (j, &m) in mul_s1[i].iter().enumerate() {
                    next[j] += c * m;
                }
            }
            vec = next;
        }
        // s1^4 = 2 s22
        assert_eq!(vec, [0, 0, 0, 0, 0, 2]);
        let cx = ctx();
        let g = g13(&cx);
        let q1 = Class::g(&g, "q1");
        assert_eq!(q1.pow(4).integrate(), ParamPoly::int(&cx, 2));
    }

    #[test]
    fn formal_surface_table() {
        let cx = ctx();
        let x = formal_surface(&cx);
        let h = Class::g(&x, "H");
        let k = Class::g(&x, "K");
        let apb = &ParamPoly::v(&cx, "a") + &ParamPoly::v(&cx, "b");
        assert_eq!(h.pow(2).integrate(), apb);
        let hk = (&h * &k).integrate();
        let expect = &(&(&ParamPoly::int(&cx, 2) * &ParamPoly::v(&cx, "g"))
            - &ParamPoly::int(&cx, 2))
            - &apb;
        assert_eq!(hk, expect);
        assert_eq!(k.pow(2).integrate(), ParamPoly::v(&cx, "k2"));
        // c2(T_X) integrates to 12 chi - k2
        let c2 = x.tangent_class().component(2);
        let expect =
            &(&ParamPoly::int(&cx, 12) * &ParamPoly::v(&cx, "chi")) - &ParamPoly::v(&cx, "k2");
        assert_eq!(c2.integrate(), expect);
    }

    #[test]
    fn non_homogeneous_rewrite_is_rejected() {
        let cx = ctx();
        let err = VarietyBuilder::new("bad", &cx, 2)
            .generator("H", 1)
            .generator("pt", 2)
            .rewrite(&[("pt", 1)], &[(&[("H", 1)], ParamPoly::one(&cx))])
            .integral(&[("pt", 1)], ParamPoly::one(&cx))
            .point(&[("pt", 1)])
            .build()
            .unwrap_err();
        assert!(matches!(err, ChowError::NonHomogeneousRewrite { .. }));
    }

    #[test]
    fn missing_integration_is_rejected_by_name() {
        let cx = ctx();
        let err = VarietyBuilder::new("bad", &cx, 2)
            .generator("H", 1)
            .point(&[])
            .build()
            .unwrap_err();
        match err {
            ChowError::MissingIntegration { monomial } => assert_eq!(monomial, "H^2"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn unknown_generator_is_rejected() {
        let cx = ctx();
        let v = p3(&cx);
        assert!(matches!(
            Class::generator(&v, "z"),
            Err(ChowError::UnknownGenerator(_))
        ));
    }

    #[test]
    fn grothendieck_rewrite_on_incidence_variety() {
        let cx = ctx();
        let x = formal_surface(&cx);
        // Q restricted to the congruence: c1 = H, c2 = b pt (the incidence
        // projection to P^3 is a:1, which forces this orientation).
        let h_cls = Class::g(&x, "H");
        let b_pt = Class::g(&x, "pt").scale(&ParamPoly::v(&cx, "b"));
        let chern = &(&Class::one(&x) + &h_cls) + &b_pt;
        let ix = projective_bundle(&x, 2, &chern, "h").unwrap();
        assert_eq!(ix.dim(), 3);
        let h = Class::g(&ix, "h");
        let expect = ix
            .normal_form(&[
                (&[("H", 1), ("h", 1)], ParamPoly::one(&cx)),
                (&[("pt", 1)], ParamPoly::v(&cx, "b").neg()),
            ])
            .unwrap();
        assert_eq!(h.pow(2), expect);
        // a:1 projection onto P^3
        assert_eq!(h.pow(3).integrate(), ParamPoly::v(&cx, "a"));
        // fiber normalization
        let pt = Class::g(&ix, "pt");
        assert_eq!((&h * &pt).integrate(), ParamPoly::one(&cx));
        // c1(T_IX) = 2h - K - H
        let c1 = ix.tangent_class().component(1);
        let expect = ix
            .normal_form(&[
                (&[("h", 1)], ParamPoly::int(&cx, 2)),
                (&[("K", 1)], ParamPoly::int(&cx, -1)),
                (&[("H", 1)], ParamPoly::int(&cx, -1)),
            ])
            .unwrap();
        assert_eq!(c1, expect);
    }

    #[test]
    fn rank_below_two_is_rejected() {
        let cx = ctx();
        let x = formal_surface(&cx);
        let chern = Class::one(&x);
        assert!(matches!(
            projective_bundle(&x, 1, &chern, "h"),
            Err(ChowError::RankTooSmall)
        ));
    }

    #[test]
    fn pushforward_of_tautological_powers() {
        let cx = ctx();
        let x = formal_surface(&cx);
        let h_cls = Class::g(&x, "H");
        let b_pt = Class::g(&x, "pt").scale(&ParamPoly::v(&cx, "b"));
        let chern = &(&Class::one(&x) + &h_cls) + &b_pt;
        let ix = projective_bundle(&x, 2, &chern, "h").unwrap();
        let h = Class::g(&ix, "h");
        // pi_*(1) = 0, pi_*(h) = 1, pi_*(h^2) = c1 = H
        assert!(pushforward(&Class::one(&ix)).unwrap().is_zero());
        assert_eq!(pushforward(&h).unwrap(), Class::one(&x));
        assert_eq!(pushforward(&h.pow(2)).unwrap(), Class::g(&x, "H"));
    }

    #[test]
    fn product_of_projective_spaces() {
        let cx = ctx();
        let v = p3(&cx);
        let w = p3(&cx);
        let p = product(&v, &w).unwrap();
        assert_eq!(p.dim(), 6);
        // the clashing generator of the right factor is renamed
        let h = Class::g(&p, "h");
        let h2 = Class::g(&p, "h'");
        assert_eq!((&h.pow(3) * &h2.pow(3)).integrate(), ParamPoly::one(&cx));
        assert!(h.pow(4).is_zero());
    }

    #[test]
    fn product_with_point_is_identity_like() {
        let cx = ctx();
        let x = formal_surface(&cx);
        let point = VarietyBuilder::new("pt", &cx, 0)
            .integral(&[], ParamPoly::one(&cx))
            .point(&[])
            .build()
            .unwrap();
        let p = product(&x, &point).unwrap();
        assert_eq!(p.dim(), x.dim());
        let h = Class::g(&p, "H");
        assert_eq!(
            h.pow(2).integrate(),
            &ParamPoly::v(&cx, "a") + &ParamPoly::v(&cx, "b")
        );
    }

    #[test]
    fn normal_form_is_idempotent_and_truncates() {
        let cx = ctx();
        let g = g13(&cx);
        let q1 = Class::g(&g, "q1");
        let q2 = Class::g(&g, "q2");
        let c = &q1.pow(3) + &q2;
        let again = g
            .normal_form(&[
                (&[("q1", 3)], ParamPoly::one(&cx)),
                (&[("q2", 1)], ParamPoly::one(&cx)),
            ])
            .unwrap();
        assert_eq!(c, again);
        // any degree-5 monomial on the 4-fold dies
        assert!((&q1.pow(3) * &q2).is_zero());
    }

    #[test]
    fn mixed_variety_operands_error() {
        let cx = ctx();
        let v = p3(&cx);
        let w = p3(&cx);
        let h = Class::g(&v, "h");
        let h2 = Class::g(&w, "h");
        assert!(matches!(h.mul_checked(&h2), Err(ChowError::MixedVariety)));
    }
}
