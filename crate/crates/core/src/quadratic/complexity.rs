//! Heights `Ψ`, reduced complexity `Π`, set return times and boundary orbits.

use num_bigint::BigInt;

use crate::coding::DEFAULT_CAP_FACTOR;
use crate::error::{Error, Result};
use crate::iet::{Iet, SemiInterval};
use crate::qfield::{clear_denominators, HeightPsi, QuadNum};
use crate::quadratic::FiniteUnion;

fn max_height<'a>(points: impl IntoIterator<Item = &'a QuadNum>) -> Result<HeightPsi> {
    let mut best = HeightPsi(BigInt::from(0));
    for z in points {
        let h = z.height()?;
        if h > best {
            best = h;
        }
    }
    Ok(best)
}

/// `Ψ(X) = max{Ψ(z) : z ∈ ∂X}`.
pub fn set_complexity(x: &FiniteUnion) -> Result<HeightPsi> {
    max_height(&x.boundary())
}

/// `Π(X) = |X| · Ψ(X)`.
pub fn reduced_complexity(x: &FiniteUnion) -> Result<QuadNum> {
    let psi = set_complexity(x)?;
    let h = QuadNum::rational(crate::qfield::Rational::from_integer(psi.0));
    Ok(x.measure() * h)
}

/// The copy of `T` scaled by the least integer `k` making every length and the origin
/// integral in `Z[√d]`, together with `k`.
pub fn integral_rescaling(t: &Iet) -> Result<(Iet, BigInt)> {
    let mut values = t.lengths().to_vec();
    values.push(t.origin().clone());
    let (scaled, k) = clear_denominators(&values)?;
    let origin = scaled[scaled.len() - 1].clone();
    let kq = QuadNum::rational(crate::qfield::Rational::from_integer(k.clone()));
    Ok((t.rescaled(&kq, origin)?, k))
}

/// Least `u` bounding the heights of every translation value and every boundary
/// `γ, μ, δ, ν` (so also `ℓ` and `r`).
pub fn u_bound(t: &Iet) -> Result<HeightPsi> {
    let mut pts = Vec::new();
    for a in t.alphabet().letters() {
        pts.extend([t.alpha(a), t.gamma(a), t.mu(a), t.delta(a), t.nu(a)]);
    }
    max_height(pts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReturnKind {
    RhoPlus,
    RhoMinus,
    SigmaPlus,
    SigmaMinus,
}

fn set_cap(t: &Iet, x: &FiniteUnion) -> u64 {
    let ratio = (t.measure() / x.measure()).ceil();
    let ratio: u64 = ratio.try_into().unwrap_or(u64::MAX / DEFAULT_CAP_FACTOR);
    DEFAULT_CAP_FACTOR.saturating_mul(ratio.max(1))
}

/// `ρ⁺(X) = min{n ≥ 1 : Tⁿ(X) ⊂ ⋃_{i<n} Tⁱ(X)}`, `σ⁺(X) = min{n ≥ 1 : Tⁿ(X) ∩ X ≠ ∅}`,
/// and their backward versions with `T⁻¹`.
pub fn return_time(t: &Iet, x: &FiniteUnion, which: ReturnKind, cap: Option<u64>) -> Result<u64> {
    if x.is_empty() || !x.is_subset_of(&FiniteUnion::from(t.domain())) {
        return Err(Error::DegenerateTransformation);
    }
    let cap = cap.unwrap_or_else(|| set_cap(t, x));
    let forward = matches!(which, ReturnKind::RhoPlus | ReturnKind::SigmaPlus);
    let step = |y: &FiniteUnion| if forward { y.image(t) } else { y.preimage(t) };
    let mut covered = x.clone();
    let mut cur = x.clone();
    for n in 1..=cap {
        cur = step(&cur);
        let done = match which {
            ReturnKind::RhoPlus | ReturnKind::RhoMinus => cur.is_subset_of(&covered),
            ReturnKind::SigmaPlus | ReturnKind::SigmaMinus => !cur.intersection(x).is_empty(),
        };
        if done {
            return Ok(n);
        }
        covered = covered.union(&cur);
    }
    Err(Error::CapExceeded { cap })
}

/// `⋃_{i<n} Tⁱ(X)`.
pub fn forward_cover(t: &Iet, x: &FiniteUnion, n: u64) -> FiniteUnion {
    let mut covered = FiniteUnion::empty();
    let mut cur = x.clone();
    for _ in 0..n {
        covered = covered.union(&cur);
        cur = cur.image(t);
    }
    covered
}

/// `⋃_{i<n} T⁻ⁱ(X)`.
pub fn backward_cover(t: &Iet, x: &FiniteUnion, n: u64) -> FiniteUnion {
    let mut covered = FiniteUnion::empty();
    let mut cur = x.clone();
    for _ in 0..n {
        covered = covered.union(&cur);
        cur = cur.preimage(t);
    }
    covered
}

/// `S_{m,n}(T) = ⋃_{i=−m+1}^{n} Tⁱ(Sep(T))`, sorted.
pub fn boundary_orbit(t: &Iet, m: u64, n: u64) -> Result<Vec<QuadNum>> {
    let mut out = Vec::new();
    for g in t.separation_points() {
        let lo = 1 - m as i64;
        let mut x = t.iterate(&g, lo)?;
        for _ in lo..=n as i64 {
            out.push(x.clone());
            x = t.apply(&x)?;
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `U_{m,n}(T)`: the cells of `[ℓ, r)` cut at the points of `S_{m,n}(T)`.
pub fn partition_family(t: &Iet, m: u64, n: u64) -> Result<Vec<SemiInterval>> {
    let mut cuts = boundary_orbit(t, m, n)?;
    cuts.push(t.origin().clone());
    cuts.push(t.end().clone());
    cuts.sort();
    cuts.dedup();
    cuts.windows(2).map(|w| SemiInterval::new(w[0].clone(), w[1].clone())).collect()
}

/// Membership in `V_{m,n}(T)`: both endpoints in `S_{m,n}(T) ∪ {ℓ, r}`.
pub fn in_endpoint_family(t: &Iet, m: u64, n: u64, j: &SemiInterval) -> Result<bool> {
    let s = boundary_orbit(t, m, n)?;
    let ok = |z: &QuadNum| z == t.origin() || z == t.end() || s.binary_search(z).is_ok();
    Ok(ok(j.lo()) && ok(j.hi()))
}

/// `Π` of a subinterval of `T`'s domain, measured in the integral rescaling by `scale`.
pub fn scaled_reduced_complexity(j: &SemiInterval, scale: &BigInt) -> Result<QuadNum> {
    reduced_complexity(&FiniteUnion::from(j.clone()).scale(scale))
}

/// `1/(4√d)`, the lower bound for `Π` of a single semi-interval.
pub fn pi_lower_bound(d: i64) -> Result<QuadNum> {
    let root = QuadNum::sqrt(d)?;
    QuadNum::from_integer(1).checked_div(&(QuadNum::from_integer(4) * root))
}
