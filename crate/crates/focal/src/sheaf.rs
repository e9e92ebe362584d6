//! Chern-class calculus on a fixed variety: duals, twists, sums and
//! differences, tensor products through the Chern character, symmetric powers
//! of rank-2 bundles (concrete and symbolic exponent), Todd classes and
//! Porteous degeneracy classes.

use crate::chow::{projective_bundle, ChowError, Class, Variety};
use crate::exact::{binomial_poly, ParamPoly, Rat};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SheafError {
    #[error("operation requires a concrete rank")]
    SymbolicRank,
    #[error("operation requires rank exactly 2")]
    NotRankTwo,
    #[error("sheaves live on different varieties")]
    HostMismatch,
    #[error("total Chern class must start with 1")]
    ChernUnitMissing,
    #[error("Porteous target rank must be below both ranks")]
    InvalidPorteousRank,
    #[error("closed forms for symmetric powers stop at c4")]
    SymBeyondQuartic,
    #[error("character degree-0 term must equal the stated rank")]
    CharacterRankMismatch,
    #[error(transparent)]
    Chow(#[from] ChowError),
}

/// Rank of a sheaf: a concrete integer or a polynomial in the scenario
/// parameters (e.g. `d + 1` for a symbolic symmetric power).
#[derive(Clone, Debug, PartialEq)]
pub enum Rank {
    Concrete(i64),
    Symbolic(ParamPoly),
}

impl Rank {
    pub fn as_concrete(&self) -> Option<i64> {
        match self {
            Rank::Concrete(r) => Some(*r),
            Rank::Symbolic(p) => p.constant_value().and_then(|c| c.to_i64()),
        }
    }

    fn to_poly(&self, host: &Arc<Variety>) -> ParamPoly {
        match self {
            Rank::Concrete(r) => ParamPoly::int(host.ctx(), *r),
            Rank::Symbolic(p) => p.clone(),
        }
    }

    fn normalized(self) -> Rank {
        if let Rank::Symbolic(ref p) = self {
            if let Some(c) = p.constant_value() {
                if let Some(n) = c.to_i64() {
                    return Rank::Concrete(n);
                }
            }
        }
        self
    }
}

/// A sheaf (or a formal class of one): a rank plus a total Chern class
/// truncated at the ambient dimension. Differences of honest sheaves are
/// representable with the same data; [`VirtualSheaf`] keeps the pair when the
/// two ranks matter separately.
#[derive(Clone, Debug)]
pub struct Sheaf {
    host: Arc<Variety>,
    rank: Rank,
    chern: Class,
}

/// A formal difference `F - E` with both sides remembered (the ranks of the
/// two sides matter separately for degeneracy-locus classes).
#[derive(Clone, Debug)]
pub struct VirtualSheaf {
    pub plus: Sheaf,
    pub minus: Sheaf,
}

impl VirtualSheaf {
    pub fn new(plus: Sheaf, minus: Sheaf) -> Result<Self, SheafError> {
        if !std::sync::Arc::ptr_eq(&plus.host, &minus.host) {
            return Err(SheafError::HostMismatch);
        }
        Ok(VirtualSheaf { plus, minus })
    }

    /// Total Chern class of the difference, c(F)/c(E), truncated.
    pub fn total_chern(&self, up_to: u32) -> Result<Class, SheafError> {
        series_div(&self.plus.chern, &self.minus.chern, up_to)
    }

    pub fn c(&self, i: u32) -> Result<Class, SheafError> {
        Ok(self.total_chern(self.plus.host.dim())?.component(i))
    }

    /// Degeneracy-locus class of a map `E -> F` dropping rank to `r`.
    pub fn porteous(&self, target_rank: i64) -> Result<Class, SheafError> {
        porteous(&self.plus, &self.minus, target_rank)
    }
}

impl Sheaf {
    pub fn new(host: &Arc<Variety>, rank: Rank, total_chern: Class) -> Result<Self, SheafError> {
        if !std::sync::Arc::ptr_eq(host, total_chern.host()) {
            return Err(SheafError::HostMismatch);
        }
        if !total_chern.component(0).integrate_unit_ok() {
            return Err(SheafError::ChernUnitMissing);
        }
        Ok(Sheaf {
            host: host.clone(),
            rank: rank.normalized(),
            chern: total_chern,
        })
    }

    pub fn trivial(host: &Arc<Variety>, rank: i64) -> Self {
        Sheaf {
            host: host.clone(),
            rank: Rank::Concrete(rank),
            chern: Class::one(host),
        }
    }

    /// A line sheaf `O(t)` for a degree-1 class `t`.
    pub fn line(host: &Arc<Variety>, t: &Class) -> Result<Self, SheafError> {
        if !std::sync::Arc::ptr_eq(host, t.host()) {
            return Err(SheafError::HostMismatch);
        }
        let c = &Class::one(host) + &t.component(1);
        Ok(Sheaf {
            host: host.clone(),
            rank: Rank::Concrete(1),
            chern: c,
        })
    }

    pub fn host(&self) -> &Arc<Variety> {
        &self.host
    }

    pub fn rank(&self) -> &Rank {
        &self.rank
    }

    pub fn total_chern(&self) -> &Class {
        &self.chern
    }

    pub fn c(&self, i: u32) -> Class {
        self.chern.component(i)
    }

    /// c_i(E^dual) = (-1)^i c_i(E); concrete rank only.
    pub fn dual(&self) -> Result<Sheaf, SheafError> {
        let r = self.rank.as_concrete().ok_or(SheafError::SymbolicRank)?;
        let mut c = Class::zero(&self.host);
        for k in 0..=self.host.dim() {
            let comp = self.chern.component(k);
            let signed = if k % 2 == 1 { comp.neg() } else { comp };
            c = &c + &signed;
        }
        Ok(Sheaf {
            host: self.host.clone(),
            rank: Rank::Concrete(r),
            chern: c,
        })
    }

    /// c_k(E (x) L) = sum_i binom(r - i, k - i) c_i(E) t^{k-i}; the binomials
    /// are polynomials in the (possibly symbolic) rank.
    pub fn twist(&self, t: &Class, up_to: u32) -> Result<Sheaf, SheafError> {
        if !std::sync::Arc::ptr_eq(&self.host, t.host()) {
            return Err(SheafError::HostMismatch);
        }
        let t1 = t.component(1);
        let rank_poly = self.rank.to_poly(&self.host);
        let mut c = Class::zero(&self.host);
        for k in 0..=up_to.min(self.host.dim()) {
            let mut ck = Class::zero(&self.host);
            for i in 0..=k {
                let ci = self.chern.component(i);
                if ci.is_zero() {
                    continue;
                }
                let shift = &rank_poly - &ParamPoly::int(self.host.ctx(), i as i64);
                let binom = binomial_poly(&shift, k - i);
                if binom.is_zero() {
                    continue;
                }
                ck = &ck + &(&ci * &t1.pow(k - i)).scale(&binom);
            }
            c = &c + &ck;
        }
        Ok(Sheaf {
            host: self.host.clone(),
            rank: self.rank.clone(),
            chern: c,
        })
    }

    /// Direct sum: ranks add, total Chern classes multiply (Whitney).
    pub fn sum(&self, other: &Sheaf) -> Result<Sheaf, SheafError> {
        if !std::sync::Arc::ptr_eq(&self.host, &other.host) {
            return Err(SheafError::HostMismatch);
        }
        let rank = match (&self.rank, &other.rank) {
            (Rank::Concrete(a), Rank::Concrete(b)) => Rank::Concrete(a + b),
            (a, b) => Rank::Symbolic(&a.to_poly(&self.host) + &b.to_poly(&self.host)),
        };
        Ok(Sheaf {
            host: self.host.clone(),
            rank: rank.normalized(),
            chern: &self.chern * &other.chern,
        })
    }

    /// Formal difference `self - other`: the total Chern class divides as a
    /// truncated power series.
    pub fn difference(&self, other: &Sheaf) -> Result<Sheaf, SheafError> {
        self.difference_truncated(other, self.host.dim())
    }

    pub fn difference_truncated(&self, other: &Sheaf, up_to: u32) -> Result<Sheaf, SheafError> {
        if !std::sync::Arc::ptr_eq(&self.host, &other.host) {
            return Err(SheafError::HostMismatch);
        }
        let rank = match (&self.rank, &other.rank) {
            (Rank::Concrete(a), Rank::Concrete(b)) => Rank::Concrete(a - b),
            (a, b) => Rank::Symbolic(&a.to_poly(&self.host) - &b.to_poly(&self.host)),
        };
        Ok(Sheaf {
            host: self.host.clone(),
            rank: rank.normalized(),
            chern: series_div(&self.chern, &other.chern, up_to)?,
        })
    }

    /// Tensor product through Chern characters; concrete ranks only.
    pub fn tensor(&self, other: &Sheaf) -> Result<Sheaf, SheafError> {
        let e = self.rank.as_concrete().ok_or(SheafError::SymbolicRank)?;
        let f = other.rank.as_concrete().ok_or(SheafError::SymbolicRank)?;
        if !std::sync::Arc::ptr_eq(&self.host, &other.host) {
            return Err(SheafError::HostMismatch);
        }
        let dim = self.host.dim();
        let ch = &self.chern_character(dim)? * &other.chern_character(dim)?;
        chern_from_character(&self.host, &ch, e * f)
    }

    /// Symmetric power of a rank-2 sheaf at a concrete exponent, computed by
    /// the tensor recursion Sym^n = Sym^{n-1} (x) E - Sym^{n-2} (x) det E.
    /// This route is independent of the splitting-principle oracle.
    pub fn sym_power(&self, n: u32) -> Result<Sheaf, SheafError> {
        if self.rank.as_concrete() != Some(2) {
            return Err(SheafError::NotRankTwo);
        }
        let mut prev = Sheaf::trivial(&self.host, 1); // Sym^0
        if n == 0 {
            return Ok(prev);
        }
        let mut cur = self.clone(); // Sym^1
        let det = self.c(1);
        for _ in 2..=n {
            let raised = cur.tensor(self)?;
            let lowered = prev.twist(&det, self.host.dim())?;
            let next = raised.difference(&lowered)?;
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }

    /// Symmetric power of a rank-2 sheaf with a symbolic exponent `e`:
    /// closed forms for c1..c4 (the c4 form is the splitting-oracle-corrected
    /// one), rank e + 1. `up_to > 4` is an error: no closed forms beyond c4.
    pub fn sym_power_symbolic(
        &self,
        exponent: &ParamPoly,
        up_to: u32,
    ) -> Result<Sheaf, SheafError> {
        if self.rank.as_concrete() != Some(2) {
            return Err(SheafError::NotRankTwo);
        }
        if up_to > 4 {
            return Err(SheafError::SymBeyondQuartic);
        }
        let ctx = self.host.ctx().clone();
        let e = exponent.clone();
        let int = |n: i64| ParamPoly::int(&ctx, n);
        let shift = |n: i64| &e + &int(n);
        let c1 = self.c(1);
        let c2 = self.c(2);
        let half = Rat::new(1, 2).unwrap();
        let mut total = Class::one(&self.host);
        if up_to >= 1 {
            let f = (&e * &shift(1)).scale(&half);
            total = &total + &c1.scale(&f);
        }
        if up_to >= 2 {
            let f_sq = (&(&(&e * &shift(-1)) * &shift(1)) * &(&(&int(3) * &e) + &int(2)))
                .scale(&Rat::new(1, 24).unwrap());
            let f_c2 = (&(&e * &shift(1)) * &shift(2)).scale(&Rat::new(1, 6).unwrap());
            total = &total + &(&c1.pow(2).scale(&f_sq) + &c2.scale(&f_c2));
        }
        if up_to >= 3 {
            let f_cb = (&(&(&e.pow(2) * &shift(-1)) * &shift(-2)) * &shift(1).pow(2))
                .scale(&Rat::new(1, 48).unwrap());
            let f_mx = (&(&(&e.pow(2) * &shift(-1)) * &shift(2)) * &shift(1))
                .scale(&Rat::new(1, 12).unwrap());
            total = &total + &(&c1.pow(3).scale(&f_cb) + &(&c1 * &c2).scale(&f_mx));
        }
        if up_to >= 4 {
            let poly3 = &(&(&int(15) * &e.pow(3)) + &(&int(15) * &e.pow(2)))
                - &(&(&int(10) * &e) + &int(8));
            let f4_1 = (&(&(&(&(&e * &shift(-1)) * &shift(-2)) * &shift(-3)) * &shift(1)) * &poly3)
                .scale(&Rat::new(1, 5760).unwrap());
            let poly2 = &(&(&int(15) * &e.pow(2)) - &(&int(5) * &e)) - &int(12);
            let f4_2 = (&(&(&(&(&e * &shift(-1)) * &shift(-2)) * &shift(2)) * &shift(1)) * &poly2)
                .scale(&Rat::new(1, 720).unwrap());
            let poly1 = &(&int(5) * &e) + &int(12);
            let f4_3 = (&(&(&(&(&e * &shift(-1)) * &shift(-2)) * &shift(1)) * &shift(2)) * &poly1)
                .scale(&Rat::new(1, 360).unwrap());
            let c4 = &(&c1.pow(4).scale(&f4_1) + &(&c1.pow(2) * &c2).scale(&f4_2))
                + &c2.pow(2).scale(&f4_3);
            total = &total + &c4;
        }
        Ok(Sheaf {
            host: self.host.clone(),
            rank: Rank::Symbolic(&e + &ParamPoly::one(&ctx)).normalized(),
            chern: total.truncate(up_to),
        })
    }

    /// ch = rank + c1 + (c1^2 - 2 c2)/2 + ... via Newton power sums, to any
    /// degree up to the ambient dimension. Concrete rank only.
    pub fn chern_character(&self, up_to: u32) -> Result<Class, SheafError> {
        let r = self.rank.as_concrete().ok_or(SheafError::SymbolicRank)?;
        let up_to = up_to.min(self.host.dim());
        let p = power_sums(&self.chern, up_to);
        let mut ch = Class::constant(&self.host, &ParamPoly::int(self.host.ctx(), r));
        let mut fact = Rat::one();
        for (k, pk) in p.iter().enumerate() {
            fact = &fact * &Rat::from_int((k + 1) as i64);
            ch = &ch + &pk.scale_rat(&fact.recip().unwrap());
        }
        Ok(ch.truncate(up_to))
    }

    /// Todd class of this sheaf's Chern data.
    pub fn todd(&self, up_to: u32) -> Result<Class, SheafError> {
        Ok(todd_of_chern(&self.chern, up_to))
    }

    /// Projectivization (rank-one quotients); concrete rank >= 2.
    pub fn projectivize(&self, zeta: &str) -> Result<Arc<Variety>, SheafError> {
        let r = self.rank.as_concrete().ok_or(SheafError::SymbolicRank)?;
        if r < 2 {
            return Err(SheafError::Chow(ChowError::RankTooSmall));
        }
        Ok(projective_bundle(&self.host, r as u32, &self.chern, zeta)?)
    }
}

impl Class {
    fn integrate_unit_ok(&self) -> bool {
        // degree-0 component equals 1
        let c0 = self.component(0);
        let one = Class::one(self.host());
        c0 == one
    }
}

/// Degreewise truncated power-series division `a / b` (b must start at 1).
pub fn series_div(a: &Class, b: &Class, up_to: u32) -> Result<Class, SheafError> {
    if !std::sync::Arc::ptr_eq(a.host(), b.host()) {
        return Err(SheafError::HostMismatch);
    }
    if !b.component(0).integrate_unit_ok() {
        return Err(SheafError::ChernUnitMissing);
    }
    let host = a.host().clone();
    let up_to = up_to.min(host.dim());
    let mut q = a.component(0);
    for k in 1..=up_to {
        let mut qk = a.component(k);
        for j in 1..=k {
            let bj = b.component(j);
            if bj.is_zero() {
                continue;
            }
            qk = &qk - &(&bj * &q.component(k - j));
        }
        q = &q + &qk;
    }
    Ok(q)
}

/// Newton power sums p_1..p_n from a total Chern class.
fn power_sums(c: &Class, up_to: u32) -> Vec<Class> {
    let host = c.host().clone();
    let mut p: Vec<Class> = Vec::new();
    for k in 1..=up_to {
        // p_k = c1 p_{k-1} - c2 p_{k-2} + ... + (-1)^k k c_k  (Newton)
        let mut acc = Class::zero(&host);
        for i in 1..k {
            let term = &c.component(i) * &p[(k - i - 1) as usize];
            acc = if i % 2 == 1 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        let tail = c.component(k).scale_rat(&Rat::from_int(k as i64));
        acc = if k % 2 == 1 {
            &acc + &tail
        } else {
            &acc - &tail
        };
        p.push(acc);
    }
    p
}

/// Invert the Newton relations: rebuild a sheaf from its Chern character.
pub fn chern_from_character(
    host: &Arc<Variety>,
    ch: &Class,
    rank: i64,
) -> Result<Sheaf, SheafError> {
    let expected = Class::constant(host, &ParamPoly::int(host.ctx(), rank));
    if ch.component(0) != expected {
        return Err(SheafError::CharacterRankMismatch);
    }
    let dim = host.dim();
    // p_k = k! ch_k
    let mut p = Vec::new();
    let mut fact = Rat::one();
    for k in 1..=dim {
        fact = &fact * &Rat::from_int(k as i64);
        p.push(ch.component(k).scale_rat(&fact));
    }
    // c_k = (-1)^{k-1} (p_k - c1 p_{k-1} + c2 p_{k-2} - ...) / k
    let mut c: Vec<Class> = Vec::new();
    for k in 1..=dim as usize {
        let mut acc = p[k - 1].clone();
        for i in 1..k {
            let term = &c[i - 1] * &p[k - i - 1];
            acc = if i % 2 == 1 {
                &acc - &term
            } else {
                &acc + &term
            };
        }
        let sign = if k % 2 == 1 {
            Rat::one()
        } else {
            Rat::from_int(-1)
        };
        let ck = acc.scale_rat(&(&sign * &Rat::new(1, k as i64).unwrap()));
        c.push(ck);
    }
    let mut total = Class::one(host);
    for ck in c {
        total = &total + &ck;
    }
    Sheaf::new(host, Rank::Concrete(rank), total)
}

/// Coefficients gamma_m of log(x / (1 - e^{-x})) = sum gamma_m x^m, so the
/// Todd class is exp(sum gamma_m p_m) in the power sums of the bundle.
fn todd_log_coefficients(up_to: u32) -> Vec<Rat> {
    let n = up_to as usize;
    // t(x) = x / (1 - e^{-x}) as a series 1 + x/2 + x^2/12 - ...
    // 1 - e^{-x} = sum_{k>=1} (-1)^{k+1} x^k / k!; divide out one x first.
    let mut denom = vec![Rat::zero(); n + 1]; // (1 - e^{-x})/x
    let mut fact = Rat::one();
    for (k, d) in denom.iter_mut().enumerate() {
        fact = &fact * &Rat::from_int((k + 1) as i64);
        let sign = if k % 2 == 0 {
            Rat::one()
        } else {
            Rat::from_int(-1)
        };
        *d = &sign * &fact.recip().unwrap();
    }
    // t = 1 / denom by series inversion
    let mut t = vec![Rat::zero(); n + 1];
    t[0] = Rat::one();
    for k in 1..=n {
        let mut acc = Rat::zero();
        for j in 1..=k {
            acc = &acc + &(&denom[j] * &t[k - j]);
        }
        t[k] = -&acc;
    }
    // log t by the series log: (log t)' = t'/t
    let mut log_t = vec![Rat::zero(); n + 1];
    for k in 1..=n {
        // log_t[k] = t[k] - (1/k) sum_{j=1}^{k-1} j * log_t[j] * t[k-j]
        let mut acc = Rat::zero();
        for j in 1..k {
            acc = &acc + &(&(&Rat::from_int(j as i64) * &log_t[j]) * &t[k - j]);
        }
        log_t[k] = &t[k] - &acc.div(&Rat::from_int(k as i64)).unwrap();
    }
    log_t[1..].to_vec()
}

/// Todd class from a total Chern class (rank-independent), to any degree.
pub fn todd_of_chern(c: &Class, up_to: u32) -> Class {
    let host = c.host().clone();
    let up_to = up_to.min(host.dim());
    if up_to == 0 {
        return Class::one(&host);
    }
    let gammas = todd_log_coefficients(up_to);
    let p = power_sums(c, up_to);
    let mut log_td = Class::zero(&host);
    for (m, gamma) in gammas.iter().enumerate() {
        if gamma.is_zero() {
            continue;
        }
        log_td = &log_td + &p[m].scale_rat(gamma);
    }
    exp_class(&log_td, up_to)
}

/// exp of a class with no degree-0 part (nilpotent), truncated.
pub fn exp_class(x: &Class, up_to: u32) -> Class {
    let host = x.host().clone();
    let mut acc = Class::one(&host);
    let mut powk = Class::one(&host);
    let mut fact = Rat::one();
    for k in 1..=up_to {
        powk = (&powk * x).truncate(up_to);
        fact = &fact * &Rat::from_int(k as i64);
        acc = &acc + &powk.scale_rat(&fact.recip().unwrap());
    }
    acc.truncate(up_to)
}

/// Porteous class of the locus where a map `E -> F` drops rank to `r`:
/// the (e-r) x (e-r) determinant with entries c_{f-r+j-i}(F - E).
/// Expected codimension (e-r)(f-r).
pub fn porteous(f: &Sheaf, e: &Sheaf, target_rank: i64) -> Result<Class, SheafError> {
    let er = e.rank.as_concrete().ok_or(SheafError::SymbolicRank)?;
    let fr = f.rank.as_concrete().ok_or(SheafError::SymbolicRank)?;
    if target_rank >= er.min(fr) || target_rank < 0 {
        return Err(SheafError::InvalidPorteousRank);
    }
    if !std::sync::Arc::ptr_eq(&f.host, &e.host) {
        return Err(SheafError::HostMismatch);
    }
    let host = f.host.clone();
    let diff = series_div(&f.chern, &e.chern, host.dim())?;
    let size = (er - target_rank) as usize;
    let entry = |i: usize, j: usize| -> Class {
        let idx = fr - target_rank + j as i64 - i as i64;
        if idx < 0 {
            Class::zero(&host)
        } else if idx == 0 {
            Class::one(&host)
        } else {
            diff.component(idx as u32)
        }
    };
    let mut matrix = Vec::with_capacity(size);
    for i in 0..size {
        let mut row = Vec::with_capacity(size);
        for j in 0..size {
            row.push(entry(i + 1, j + 1));
        }
        matrix.push(row);
    }
    Ok(det(&host, &matrix))
}

fn det(host: &Arc<Variety>, m: &[Vec<Class>]) -> Class {
    let n = m.len();
    if n == 0 {
        return Class::one(host);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Class::zero(host);
    for (j, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Class>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, c)| c.clone())
                    .collect()
            })
            .collect();
        let term = top * &det(host, &minor);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// The relative tangent sheaf of a projective bundle, reconstructed from the
/// bundle's stored Chern data: rank r-1 with c(T_rel) = c(S^dual (x) O(zeta)).
pub fn relative_tangent(bundle: &Arc<Variety>) -> Result<Sheaf, SheafError> {
    let info = bundle
        .bundle_info()
        .ok_or(SheafError::Chow(ChowError::NotABundle))?;
    let rank = info.rank;
    let e_chern = Class::from_terms(bundle, info.bundle_chern.clone());
    let zeta_name = bundle.generators()[0].name.clone();
    let zeta = Class::g(bundle, &zeta_name);
    let one_plus_zeta = &Class::one(bundle) + &zeta;
    let s = series_div(&e_chern, &one_plus_zeta, bundle.dim())?;
    let s_sheaf = Sheaf {
        host: bundle.clone(),
        rank: Rank::Concrete(rank as i64 - 1),
        chern: s,
    };
    let s_dual = s_sheaf.dual()?;
    s_dual.twist(&zeta, bundle.dim())
}
