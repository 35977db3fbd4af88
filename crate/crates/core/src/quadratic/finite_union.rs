use std::fmt;

use crate::iet::{Iet, SemiInterval};
use crate::qfield::QuadNum;

/// A finite union of semi-intervals, kept sorted with touching parts merged.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FiniteUnion {
    parts: Vec<SemiInterval>,
}

impl FiniteUnion {
    pub fn empty() -> Self {
        FiniteUnion { parts: Vec::new() }
    }

    pub fn from_parts(parts: impl IntoIterator<Item = SemiInterval>) -> Self {
        let mut v: Vec<SemiInterval> = parts.into_iter().collect();
        v.sort_by(|a, b| a.lo().cmp(b.lo()));
        let mut parts: Vec<SemiInterval> = Vec::with_capacity(v.len());
        for p in v {
            if let Some(last) = parts.last_mut() {
                if p.lo() <= last.hi() {
                    if p.hi() > last.hi() {
                        *last = SemiInterval::new(last.lo().clone(), p.hi().clone()).expect("nonempty");
                    }
                    continue;
                }
            }
            parts.push(p);
        }
        FiniteUnion { parts }
    }

    pub fn parts(&self) -> &[SemiInterval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|X|`.
    pub fn measure(&self) -> QuadNum {
        self.parts.iter().map(|p| p.len()).sum()
    }

    /// `∂X`: the endpoints of the merged parts.
    pub fn boundary(&self) -> Vec<QuadNum> {
        self.parts.iter().flat_map(|p| [p.lo().clone(), p.hi().clone()]).collect()
    }

    pub fn contains(&self, z: &QuadNum) -> bool {
        self.parts.iter().any(|p| p.contains(z))
    }

    pub fn union(&self, other: &FiniteUnion) -> FiniteUnion {
        Self::from_parts(self.parts.iter().chain(&other.parts).cloned())
    }

    pub fn intersection(&self, other: &FiniteUnion) -> FiniteUnion {
        let mut out = Vec::new();
        for p in &self.parts {
            for q in &other.parts {
                if let Some(x) = p.intersect(q) {
                    out.push(x);
                }
            }
        }
        Self::from_parts(out)
    }

    pub fn difference(&self, other: &FiniteUnion) -> FiniteUnion {
        let mut out = Vec::new();
        for p in &self.parts {
            let mut rest = vec![p.clone()];
            for q in &other.parts {
                rest = rest.into_iter().flat_map(|r| subtract(&r, q)).collect();
            }
            out.extend(rest);
        }
        Self::from_parts(out)
    }

    pub fn is_subset_of(&self, other: &FiniteUnion) -> bool {
        self.difference(other).is_empty()
    }

    /// `T(X)`.
    pub fn image(&self, t: &Iet) -> FiniteUnion {
        let mut out = Vec::new();
        for p in &self.parts {
            for &a in t.top() {
                if let Some(x) = p.intersect(&t.interval_of(a)) {
                    out.push(x.translate(t.alpha(a)));
                }
            }
        }
        Self::from_parts(out)
    }

    /// `T⁻¹(X)`.
    pub fn preimage(&self, t: &Iet) -> FiniteUnion {
        let mut out = Vec::new();
        for p in &self.parts {
            for &a in t.bottom() {
                if let Some(x) = p.intersect(&t.image_of(a)) {
                    out.push(x.translate(&-t.alpha(a)));
                }
            }
        }
        Self::from_parts(out)
    }

    pub fn scale(&self, k: &num_bigint::BigInt) -> FiniteUnion {
        let parts = self
            .parts
            .iter()
            .map(|p| SemiInterval::new(p.lo().scale(k), p.hi().scale(k)).expect("positive scale"))
            .collect();
        FiniteUnion { parts }
    }
}

impl From<SemiInterval> for FiniteUnion {
    fn from(p: SemiInterval) -> Self {
        FiniteUnion { parts: vec![p] }
    }
}

fn subtract(r: &SemiInterval, q: &SemiInterval) -> Vec<SemiInterval> {
    if r.intersect(q).is_none() {
        return vec![r.clone()];
    }
    let mut out = Vec::new();
    if r.lo() < q.lo() {
        out.push(SemiInterval::new(r.lo().clone(), q.lo().clone()).expect("nonempty"));
    }
    if q.hi() < r.hi() {
        out.push(SemiInterval::new(q.hi().clone(), r.hi().clone()).expect("nonempty"));
    }
    out
}

impl fmt::Display for FiniteUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: &str, hi: &str) -> SemiInterval {
        SemiInterval::new(lo.parse().unwrap(), hi.parse().unwrap()).unwrap()
    }

    #[test]
    fn set_algebra() {
        let x = FiniteUnion::from_parts([iv("0", "1"), iv("2", "3"), iv("1", "3/2")]);
        assert_eq!(x.parts(), &[iv("0", "3/2"), iv("2", "3")]);
        assert_eq!(x.measure(), QuadNum::from_ratio(5, 2));
        let y = FiniteUnion::from(iv("1", "5/2"));
        assert_eq!(x.intersection(&y).parts(), &[iv("1", "3/2"), iv("2", "5/2")]);
        assert_eq!(x.difference(&y).parts(), &[iv("0", "1"), iv("5/2", "3")]);
        assert_eq!(x.union(&y).parts(), &[iv("0", "3")]);
        assert!(FiniteUnion::from(iv("1/2", "1")).is_subset_of(&x));
        assert!(!y.is_subset_of(&x));
        assert_eq!(x.boundary().len(), 4);
    }

    #[test]
    fn images_are_measure_preserving_bijections() {
        let a: QuadNum = "3/2 - 1/2*sqrt(5)".parse().unwrap();
        let t = Iet::from_names("abc", "bca", vec![QuadNum::one() - &a - &a, a.clone(), a], QuadNum::zero())
            .unwrap();
        let x = FiniteUnion::from_parts([iv("1/10", "1/2"), iv("3/5", "9/10")]);
        let tx = x.image(&t);
        assert_eq!(tx.measure(), x.measure());
        assert_eq!(tx.preimage(&t), x);
        let full = FiniteUnion::from(t.domain());
        assert_eq!(full.image(&t), full);
    }
}
