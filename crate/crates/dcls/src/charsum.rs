//! Character sums that certify trade feasibility for large p.
//!
//! For an admissible (j, c, e) put
//! `J(x) = [1+η(x)]·[1+η(F(x))]·[1-η(G(x))]·[1-η(H(x))]` and `S = Σ_x J(x)`.
//! Every x counted by the set `A = {x : η(x)=η(F)=1, η(G)=η(H)=-1}`
//! contributes 16, x values where some argument vanishes contribute at most
//! 8 (there are at most four of those — the four linear factors have
//! distinct roots under admissibility), and everything else contributes 0,
//! so `S ≤ 16·|A| + 32`. In the other direction, expanding the product and
//! bounding each η-sum (linear sums vanish, quadratics are exactly ±1,
//! cubics and the quartic obey the Weil bound) gives `S ≥ p - 11√p - 6`.
//! Once that exceeds 32, A is nonempty and the m = 2 trade always fires.

use crate::modmath::Prime;
use crate::trade::{check_admissible, fgh_at};
use crate::{Error, Result};

/// The summary a single (p, j, c, e) evaluation produces.
#[derive(Debug, Clone, PartialEq)]
pub struct CharSumReport {
    pub p: u64,
    pub j: u64,
    pub c: u64,
    pub e: u64,
    /// S = Σ_x J(x), by direct summation over GF(p).
    pub s: i64,
    /// |A|: the number of x with η(x) = η(F) = +1 and η(G) = η(H) = -1.
    pub size_a: usize,
    /// p - 11·√p - 6, for display; comparisons use exact integer arithmetic.
    pub lower_bound: f64,
}

impl CharSumReport {
    /// S ≥ p - 11√p - 6, decided exactly in integers.
    pub fn meets_lower_bound(&self) -> bool {
        let gap = self.p as i128 - 6 - self.s as i128;
        gap <= 0 || gap * gap <= 121 * self.p as i128
    }

    /// S ≤ 16·|A| + 32.
    pub fn meets_upper_cap(&self) -> bool {
        self.s <= 16 * self.size_a as i64 + 32
    }

    /// S > 32, the threshold that forces |A| > 0.
    pub fn clears_search_threshold(&self) -> bool {
        self.s > 32
    }
}

/// J(x) for one x ∈ GF(p). Total in x: x = 1 lands on G(1) = 1 and gives 0.
pub fn j_of_x(p: Prime, j: u64, c: u64, e: u64, x: u64) -> Result<i64> {
    check_admissible(p, j, c, e)?;
    let n = p.get();
    Ok(j_raw(p, j % n, c % n, e % n, x % n))
}

fn j_raw(p: Prime, j: u64, c: u64, e: u64, x: u64) -> i64 {
    let v = fgh_at(p, j, c, e, x);
    let prod = (1 + p.eta(x)) * (1 + p.eta(v.f)) * (1 - p.eta(v.g)) * (1 - p.eta(v.h));
    prod as i64
}

/// Sum J over all of GF(p) and count A.
pub fn compute_s(p: Prime, j: u64, c: u64, e: u64) -> Result<CharSumReport> {
    check_admissible(p, j, c, e)?;
    let n = p.get();
    let (j, c, e) = (j % n, c % n, e % n);
    let mut s = 0i64;
    let mut size_a = 0usize;
    for x in 0..n {
        let v = fgh_at(p, j, c, e, x);
        let (ex, ef, eg, eh) = (p.eta(x), p.eta(v.f), p.eta(v.g), p.eta(v.h));
        s += ((1 + ex) * (1 + ef) * (1 - eg) * (1 - eh)) as i64;
        if ex == 1 && ef == 1 && eg == -1 && eh == -1 {
            size_a += 1;
        }
    }
    let pf = n as f64;
    Ok(CharSumReport { p: n, j, c, e, s, size_a, lower_bound: pf - 11.0 * pf.sqrt() - 6.0 })
}

/// Σ_t η(a2·t² + a1·t + a0) by direct evaluation. Requires a2 ≠ 0 and a
/// nonzero discriminant; the sum then equals -η(a2).
pub fn quadratic_eta_sum(p: Prime, a2: u64, a1: u64, a0: u64) -> Result<i64> {
    let n = p.get();
    let (a2, a1, a0) = (a2 % n, a1 % n, a0 % n);
    if a2 == 0 {
        return Err(Error::CharSumHypothesis("leading coefficient is zero"));
    }
    if p.sub(p.mul(a1, a1), p.mul(4, p.mul(a0, a2))) == 0 {
        return Err(Error::CharSumHypothesis("discriminant is zero"));
    }
    let mut sum = 0i64;
    for t in 0..n {
        let val = p.add(p.mul(a2, p.mul(t, t)), p.add(p.mul(a1, t), a0));
        sum += p.eta(val) as i64;
    }
    Ok(sum)
}

/// Does the direct quadratic sum match its closed form -η(a2)?
pub fn quadratic_sum_check(p: Prime, a2: u64, a1: u64, a0: u64) -> Result<bool> {
    Ok(quadratic_eta_sum(p, a2, a1, a0)? == -(p.eta(a2) as i64))
}

/// The four linear factors whose products appear in the expansion of S.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeilFactor {
    X,
    F,
    NegG,
    NegH,
}

/// Σ_x η(K(x)) where K is the product of the chosen factors (η(0) = 0).
pub fn weil_sum(p: Prime, j: u64, c: u64, e: u64, factors: &[WeilFactor]) -> Result<i64> {
    check_admissible(p, j, c, e)?;
    if factors.len() < 2 || factors.len() > 4 {
        return Err(Error::CharSumHypothesis("factor set must contain 2 to 4 factors"));
    }
    for (i, a) in factors.iter().enumerate() {
        if factors[..i].contains(a) {
            return Err(Error::CharSumHypothesis("factor set must not repeat a factor"));
        }
    }
    let n = p.get();
    let (j, c, e) = (j % n, c % n, e % n);
    let mut sum = 0i64;
    for x in 0..n {
        let v = fgh_at(p, j, c, e, x);
        let mut k = 1u64;
        for factor in factors {
            let val = match factor {
                WeilFactor::X => x,
                WeilFactor::F => v.f,
                WeilFactor::NegG => p.neg(v.g),
                WeilFactor::NegH => p.neg(v.h),
            };
            k = p.mul(k, val);
        }
        sum += p.eta(k) as i64;
    }
    Ok(sum)
}

/// |Σ η(K)| ≤ (d-1)·√p for the product of d distinct factors, checked as
/// sum² ≤ (d-1)²·p in integers.
pub fn weil_bound_check(p: Prime, j: u64, c: u64, e: u64, factors: &[WeilFactor]) -> Result<bool> {
    let sum = weil_sum(p, j, c, e, factors)? as i128;
    let d = factors.len() as i128;
    Ok(sum * sum <= (d - 1) * (d - 1) * p.get() as i128)
}
