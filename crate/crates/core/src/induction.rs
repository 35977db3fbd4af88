//! Right and left Rauzy induction, division points, admissibility and
//! induced transformations.
//!
//! `ψ` (right) induces on `Z(T) = [ℓ, max{γ_s, δ_π(s)})` and `φ` (left) on
//! `Y(T) = [min{μ_1, ν_π(1)}, r)`. Each step records the elementary positive
//! automorphism `θ` with `Σ_T(z) = θ(Σ_S(z))` for `z` in the new domain.

use std::fmt;
use std::str::FromStr;

use crate::alphabet::Letter;
use crate::coding::{default_cap, interval_j};
use crate::error::{Connection, Error, Result, Side};
use crate::iet::{Iet, SemiInterval};
use crate::morphism::Morphism;
use crate::qfield::QuadNum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionStep {
    pub side: Side,
    /// 0 when the last (right) or first (left) image interval is cut, 1 otherwise.
    pub case: u8,
    pub automorphism: Morphism,
    pub result: Iet,
}

fn connection(side: Side, point: &QuadNum) -> Error {
    Error::ConnectionDetected { step: 0, connection: Connection { side, point: point.clone() } }
}

fn last(v: &[Letter]) -> Letter {
    *v.last().expect("nonempty alphabet")
}

/// `Z(T)`.
pub fn right_domain(t: &Iet) -> Result<SemiInterval> {
    let a_s = last(t.top());
    let a_ps = last(t.bottom());
    let (g, d) = (t.gamma(a_s), t.delta(a_ps));
    if g == d {
        return Err(connection(Side::Right, g));
    }
    SemiInterval::new(t.origin().clone(), g.clone().max(d.clone()))
}

/// `Y(T)`.
pub fn left_domain(t: &Iet) -> Result<SemiInterval> {
    let a_1 = t.top()[0];
    let a_p1 = t.bottom()[0];
    let (m, n) = (t.mu(a_1), t.nu(a_p1));
    if m == n {
        return Err(connection(Side::Left, m));
    }
    SemiInterval::new(m.clone().min(n.clone()), t.end().clone())
}

fn moved(order: &[Letter], x: Letter, anchor: Letter, after: bool) -> Vec<Letter> {
    let mut v: Vec<Letter> = order.iter().copied().filter(|&y| y != x).collect();
    let i = v.iter().position(|&y| y == anchor).expect("anchor present");
    v.insert(if after { i + 1 } else { i }, x);
    v
}

/// `ψ(T)`, the transformation induced on `Z(T)`.
pub fn rauzy_right(t: &Iet) -> Result<InductionStep> {
    right_domain(t)?;
    let alphabet = t.alphabet();
    let a_s = last(t.top());
    let a_ps = last(t.bottom());
    let mut lengths = t.lengths().to_vec();
    let (case, top, bottom, automorphism) = if t.gamma(a_s) < t.delta(a_ps) {
        // J_{a_π(s)} is cut off; a_π(s) now returns through I_{a_s}
        lengths[a_s.index()] = &lengths[a_s.index()] - &lengths[a_ps.index()];
        let bottom = moved(t.bottom(), a_ps, a_s, true);
        let theta = Morphism::elementary(alphabet, a_ps, vec![a_ps, a_s]);
        (0, t.top().to_vec(), bottom, theta)
    } else {
        lengths[a_ps.index()] = &lengths[a_ps.index()] - &lengths[a_s.index()];
        let top = moved(t.top(), a_s, a_ps, true);
        let theta = Morphism::elementary(alphabet, a_s, vec![a_ps, a_s]);
        (1, top, t.bottom().to_vec(), theta)
    };
    let result = Iet::from_orders(alphabet.clone(), top, bottom, lengths, t.origin().clone())?;
    Ok(InductionStep { side: Side::Right, case, automorphism, result })
}

/// `φ(T)`, the transformation induced on `Y(T)`.
pub fn rauzy_left(t: &Iet) -> Result<InductionStep> {
    let y = left_domain(t)?;
    let alphabet = t.alphabet();
    let a_1 = t.top()[0];
    let a_p1 = t.bottom()[0];
    let mut lengths = t.lengths().to_vec();
    let (case, top, bottom, automorphism) = if t.nu(a_p1) < t.mu(a_1) {
        // J_{a_π(1)} is cut off; a_π(1) now returns through I_{a_1}
        lengths[a_1.index()] = &lengths[a_1.index()] - &lengths[a_p1.index()];
        let bottom = moved(t.bottom(), a_p1, a_1, false);
        let theta = Morphism::elementary(alphabet, a_p1, vec![a_p1, a_1]);
        (0, t.top().to_vec(), bottom, theta)
    } else {
        lengths[a_p1.index()] = &lengths[a_p1.index()] - &lengths[a_1.index()];
        let top = moved(t.top(), a_1, a_p1, false);
        let theta = Morphism::elementary(alphabet, a_1, vec![a_p1, a_1]);
        (1, top, t.bottom().to_vec(), theta)
    };
    let result = Iet::from_orders(alphabet.clone(), top, bottom, lengths, y.lo().clone())?;
    Ok(InductionStep { side: Side::Left, case, automorphism, result })
}

pub fn rauzy_step(t: &Iet, side: Side) -> Result<InductionStep> {
    match side {
        Side::Right => rauzy_right(t),
        Side::Left => rauzy_left(t),
    }
}

/// A word over `{R, L}`, applied left to right (`R` = `ψ`, `L` = `φ`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ChiSequence(pub Vec<Side>);

impl ChiSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn steps(&self) -> &[Side] {
        &self.0
    }
}

impl fmt::Display for ChiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Side::Right => "R",
                Side::Left => "L",
            })?;
        }
        Ok(())
    }
}

impl FromStr for ChiSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                'R' | 'r' => Ok(Side::Right),
                'L' | 'l' => Ok(Side::Left),
                _ => Err(Error::Parse { column: i + 1, message: format!("expected R or L, found `{c}`") }),
            })
            .collect::<Result<Vec<_>>>()
            .map(ChiSequence)
    }
}

/// `χ(T)` with the composed automorphism `θ = θ_1 ∘ ⋯ ∘ θ_k`.
///
/// A connection reports the 0-based index of the failing step.
pub fn apply_chi(t: &Iet, chi: &ChiSequence) -> Result<(Iet, Morphism)> {
    let mut cur = t.clone();
    let mut theta = Morphism::identity(t.alphabet());
    for (i, &side) in chi.0.iter().enumerate() {
        let step = rauzy_step(&cur, side).map_err(|e| with_step(e, i))?;
        theta = theta.compose(&step.automorphism);
        cur = step.result;
    }
    Ok((cur, theta))
}

fn with_step(e: Error, i: usize) -> Error {
    match e {
        Error::ConnectionDetected { connection, .. } => Error::ConnectionDetected { step: i, connection },
        other => other,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

fn check_inside(t: &Iet, i: &SemiInterval) -> Result<()> {
    if i.is_subset_of(&t.domain()) {
        Ok(())
    } else {
        Err(Error::BadInterval { lo: i.lo().clone(), hi: i.hi().clone() })
    }
}

/// `ρ⁺_{I,T}(z) = min{n > 0 : Tⁿ(z) ∈ ]u,v[}` or `ρ⁻_{I,T}(z) = min{n ≥ 0 : T⁻ⁿ(z) ∈ ]u,v[}`.
pub fn rho_point(t: &Iet, i: &SemiInterval, z: &QuadNum, dir: Direction, cap: Option<u64>) -> Result<u64> {
    check_inside(t, i)?;
    let cap = cap.unwrap_or_else(|| default_cap(t, i));
    let mut x = z.clone();
    if dir == Direction::Backward && i.contains_open(&x) {
        t.locate(&x)?;
        return Ok(0);
    }
    for n in 1..=cap {
        x = match dir {
            Direction::Forward => t.apply(&x)?,
            Direction::Backward => t.apply_inv(&x)?,
        };
        if i.contains_open(&x) {
            return Ok(n);
        }
    }
    Err(Error::CapExceeded { cap })
}

/// Neighbours `T^k(γ)` for `k ∈ [−ρ⁻, ρ⁺)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationNeighbors {
    pub gamma: QuadNum,
    pub rho_minus: u64,
    pub rho_plus: u64,
    /// `(k, T^k(γ))` in increasing `k`.
    pub neighbors: Vec<(i64, QuadNum)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionData {
    pub interval: SemiInterval,
    /// `Div(I, T)`, sorted and without repetitions.
    pub points: Vec<QuadNum>,
    /// One entry per separation point, in increasing order of `γ`.
    pub per_separation: Vec<SeparationNeighbors>,
}

impl DivisionData {
    pub fn contains(&self, z: &QuadNum) -> bool {
        self.points.binary_search(z).is_ok()
    }
}

pub fn division_points(t: &Iet, i: &SemiInterval, cap: Option<u64>) -> Result<DivisionData> {
    let mut per_separation = Vec::new();
    let mut points = Vec::new();
    for g in t.separation_points() {
        let rho_minus = rho_point(t, i, &g, Direction::Backward, cap)?;
        let rho_plus = rho_point(t, i, &g, Direction::Forward, cap)?;
        let mut back = Vec::new();
        let mut x = g.clone();
        for k in 1..=rho_minus {
            x = t.apply_inv(&x)?;
            back.push((-(k as i64), x.clone()));
        }
        back.reverse();
        let mut neighbors = back;
        let mut x = g.clone();
        neighbors.push((0, x.clone()));
        for k in 1..rho_plus {
            x = t.apply(&x)?;
            neighbors.push((k as i64, x.clone()));
        }
        points.extend(neighbors.iter().map(|(_, p)| p.clone()));
        per_separation.push(SeparationNeighbors { gamma: g, rho_minus, rho_plus, neighbors });
    }
    points.sort();
    points.dedup();
    Ok(DivisionData { interval: i.clone(), points, per_separation })
}

/// Why an endpoint fails: it equals `T^k(γ_i)` but the orbit enters `]u,v[` at `h`
/// strictly between `0` and `k` (or at `h = 0` going backwards).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitWitness {
    /// 1-based position of the separation point in increasing order.
    pub separation: usize,
    pub k: i64,
    pub h: i64,
    /// `T^h(γ_i)`, a point of `]u,v[`.
    pub entry: QuadNum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointWitness {
    pub endpoint: QuadNum,
    /// `None` when the endpoint is not on a separation orbit within the search bound.
    pub orbit: Option<OrbitWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    NotAdmissible(Vec<EndpointWitness>),
}

/// `I = [u,v)` is admissible iff `u, v ∈ Div(I,T) ∪ {r}`.
pub fn is_admissible(t: &Iet, i: &SemiInterval) -> Result<bool> {
    Ok(admissibility(t, i, None)? == Admissibility::Admissible)
}

/// Admissibility with a witness for each failing endpoint.
pub fn admissibility(t: &Iet, i: &SemiInterval, cap: Option<u64>) -> Result<Admissibility> {
    let div = division_points(t, i, cap)?;
    let mut failures = Vec::new();
    for e in [i.lo(), i.hi()] {
        if e == t.end() || div.contains(e) {
            continue;
        }
        failures.push(EndpointWitness { endpoint: e.clone(), orbit: orbit_witness(t, &div, e, cap)? });
    }
    if failures.is_empty() {
        Ok(Admissibility::Admissible)
    } else {
        Ok(Admissibility::NotAdmissible(failures))
    }
}

fn orbit_witness(t: &Iet, div: &DivisionData, e: &QuadNum, cap: Option<u64>) -> Result<Option<OrbitWitness>> {
    let bound = cap.unwrap_or_else(|| default_cap(t, &div.interval)) as i64;
    let mut best: Option<OrbitWitness> = None;
    for (idx, sep) in div.per_separation.iter().enumerate() {
        for dir in [1i64, -1] {
            let mut x = sep.gamma.clone();
            for k in 1..=bound {
                x = if dir > 0 { t.apply(&x)? } else { t.apply_inv(&x)? };
                if x != *e {
                    continue;
                }
                let k = dir * k;
                let h = if dir > 0 { sep.rho_plus as i64 } else { -(sep.rho_minus as i64) };
                let entry = t.iterate(&sep.gamma, h)?;
                let w = OrbitWitness { separation: idx + 1, k, h, entry };
                if best.as_ref().is_none_or(|b| w.k.abs() < b.k.abs()) {
                    best = Some(w);
                }
                break;
            }
        }
    }
    Ok(best)
}

/// Right admissibility of `[ℓ, t)` in the one-sided sense: `t = T^k(γ_a)` and the
/// orbit between `γ_a` and `t` stays to the right of `t`.
pub fn right_admissible_point(t: &Iet, x: &QuadNum, bound: u64) -> Result<bool> {
    one_sided_admissible(t, x, bound, |p, x| x < p)
}

/// Left admissibility of `[t, r)`: the orbit between `γ_a` and `t` stays to the left of `t`.
pub fn left_admissible_point(t: &Iet, x: &QuadNum, bound: u64) -> Result<bool> {
    one_sided_admissible(t, x, bound, |p, x| p < x)
}

fn one_sided_admissible(
    t: &Iet,
    x: &QuadNum,
    bound: u64,
    beyond: impl Fn(&QuadNum, &QuadNum) -> bool,
) -> Result<bool> {
    if !(t.origin() < x && x < t.end()) {
        return Ok(false);
    }
    for g in t.separation_points() {
        if g == *x {
            return Ok(true);
        }
        // k > 0: every T^h(γ) with 0 < h < k lies beyond x
        let mut p = g.clone();
        for _ in 1..=bound {
            p = t.apply(&p)?;
            if p == *x {
                return Ok(true);
            }
            if !beyond(&p, x) {
                break;
            }
        }
        // k ≤ 0: every T^h(γ) with k < h ≤ 0 lies beyond x
        let mut p = g.clone();
        if beyond(&p, x) {
            for _ in 1..=bound {
                p = t.apply_inv(&p)?;
                if p == *x {
                    return Ok(true);
                }
                if !beyond(&p, x) {
                    break;
                }
            }
        }
    }
    Ok(false)
}

/// Greedy descent from `T` to a sequence `χ` with `D(χ(T)) = I`, preferring `ψ`.
pub fn chi_search(t: &Iet, i: &SemiInterval, max_steps: Option<u64>) -> Result<ChiSequence> {
    check_inside(t, i)?;
    let cap = max_steps.unwrap_or_else(|| default_cap(t, i));
    let mut cur = t.clone();
    let mut chi = Vec::new();
    while cur.domain() != *i {
        if chi.len() as u64 >= cap {
            return Err(Error::CapExceeded { cap });
        }
        let step = chi.len();
        let z = right_domain(&cur);
        let side = match &z {
            Ok(z) if i.is_subset_of(z) => Side::Right,
            _ => match left_domain(&cur) {
                Ok(y) if i.is_subset_of(&y) => Side::Left,
                Ok(_) => match z {
                    Err(e) => return Err(with_step(e, step)),
                    Ok(_) => return Err(Error::NotAdmissible { lo: i.lo().clone(), hi: i.hi().clone() }),
                },
                Err(e) => return Err(with_step(e, step)),
            },
        };
        cur = rauzy_step(&cur, side)?.result;
        chi.push(side);
    }
    Ok(ChiSequence(chi))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub chi: ChiSequence,
    pub transformation: Iet,
    pub automorphism: Morphism,
}

/// The transformation induced on an admissible `I`, obtained by branching induction.
pub fn induce(t: &Iet, i: &SemiInterval) -> Result<Induced> {
    let chi = chi_search(t, i, None)?;
    let (transformation, automorphism) = apply_chi(t, &chi)?;
    Ok(Induced { chi, transformation, automorphism })
}

/// The automorphism `θ` with `θ(A) = R_F(w)`, from the induction onto `J_w`.
pub fn return_basis(t: &Iet, w: &[Letter]) -> Result<Morphism> {
    if w.is_empty() {
        return Ok(Morphism::identity(t.alphabet()));
    }
    let j = interval_j(t, w).ok_or_else(|| Error::WordNotInLanguage(t.alphabet().render(w)))?;
    Ok(induce(t, &j)?.automorphism)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::{first_return_cells, interval_i};

    fn q(s: &str) -> QuadNum {
        s.parse().unwrap()
    }

    fn alpha() -> QuadNum {
        q("3/2 - 1/2*sqrt(5)")
    }

    fn t() -> Iet {
        let a = alpha();
        Iet::from_names("abc", "bca", vec![QuadNum::one() - &a - &a, a.clone(), a], QuadNum::zero()).unwrap()
    }

    fn iv(lo: &str, hi: &str) -> SemiInterval {
        SemiInterval::new(q(lo), q(hi)).unwrap()
    }

    fn m(t: &Iet, images: &[&str]) -> Morphism {
        Morphism::from_strs(t.alphabet(), images).unwrap()
    }

    #[test]
    fn domains() {
        let t = t();
        assert_eq!(right_domain(&t).unwrap(), iv("0", "3 - sqrt(5)"));
        assert_eq!(left_domain(&t).unwrap(), iv("-2 + sqrt(5)", "1"));
        let half = QuadNum::from_ratio(1, 2);
        let rat = Iet::from_names("ab", "ba", vec![half.clone(), half], QuadNum::zero()).unwrap();
        assert!(matches!(right_domain(&rat), Err(Error::ConnectionDetected { .. })));
    }

    #[test]
    fn first_right_step() {
        let t = t();
        let step = rauzy_right(&t).unwrap();
        assert_eq!(step.case, 0);
        assert_eq!(step.automorphism, m(&t, &["ac", "b", "c"]));
        let s = step.result;
        let a = alpha();
        let name = |c| s.alphabet().letter(c).unwrap();
        assert_eq!(s.interval_of(name('a')), SemiInterval::new(QuadNum::zero(), QuadNum::one() - &a - &a).unwrap());
        assert_eq!(s.interval_of(name('c')), SemiInterval::new(QuadNum::one() - &a, &a + &a).unwrap());
        assert_eq!(s.image_of(name('b')), SemiInterval::new(QuadNum::zero(), a.clone()).unwrap());
        assert_eq!(s.image_of(name('c')), SemiInterval::new(a.clone(), q("4") * &a - QuadNum::one()).unwrap());
        assert_eq!(s.image_of(name('a')), SemiInterval::new(q("4") * &a - QuadNum::one(), &a + &a).unwrap());
    }

    #[test]
    fn composed_automorphisms() {
        let t = t();
        let (s, theta) = apply_chi(&t, &"RLL".parse().unwrap()).unwrap();
        assert_eq!(theta, m(&t, &["bac", "bbac", "c"]));
        let c = t.alphabet().parse_word("c").unwrap();
        assert_eq!(s.domain(), interval_j(&t, &c).unwrap());
        let (u, theta) = apply_chi(&t, &"LLLLLL".parse().unwrap()).unwrap();
        assert_eq!(theta, m(&t, &["ccba", "cbba", "ccbba"]));
        let a = t.alphabet().parse_word("a").unwrap();
        assert_eq!(u.domain(), interval_j(&t, &a).unwrap());
        let (same, id) = apply_chi(&t, &ChiSequence::default()).unwrap();
        assert_eq!((same, id), (t.clone(), Morphism::identity(t.alphabet())));
    }

    #[test]
    fn rho_examples() {
        let t = t();
        let z = right_domain(&t).unwrap();
        let gb = q("-2 + sqrt(5)");
        assert_eq!(rho_point(&t, &z, &gb, Direction::Forward, None).unwrap(), 3);
        assert_eq!(rho_point(&t, &z, &q("1/10"), Direction::Backward, None).unwrap(), 0);
        let full = t.domain();
        for x in ["0", "1/10", "1/2"] {
            assert_eq!(rho_point(&t, &full, &q(x), Direction::Forward, None).unwrap(), 1);
        }
        // T(γ_b) = ℓ is not in the open interval
        assert_eq!(rho_point(&t, &full, &gb, Direction::Forward, None).unwrap(), 2);
        // the brute-force orbit: 1−2α ↦ 0 ↦ 2α ↦ 4α−1
        assert_eq!(t.iterate(&gb, 1).unwrap(), QuadNum::zero());
        assert_eq!(t.iterate(&gb, 3).unwrap(), q("4") * alpha() - QuadNum::one());
    }

    #[test]
    fn admissibility_examples() {
        let t = t();
        assert!(is_admissible(&t, &iv("0", "-2 + sqrt(5)")).unwrap());
        assert!(is_admissible(&t, &iv("0", "-1/2 + 1/2*sqrt(5)")).unwrap());
        let bad = iv("0", "-5/2 + 3/2*sqrt(5)");
        match admissibility(&t, &bad, None).unwrap() {
            Admissibility::NotAdmissible(w) => {
                assert_eq!(w.len(), 1);
                let o = w[0].orbit.clone().unwrap();
                assert_eq!((o.separation, o.k, o.h), (3, -1, 0));
                assert_eq!(o.entry, q("-1/2 + 1/2*sqrt(5)"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(chi_search(&t, &bad, None), Err(Error::NotAdmissible { .. })));
        assert!(right_admissible_point(&t, &q("-2 + sqrt(5)"), 100).unwrap());
        assert!(!right_admissible_point(&t, &q("-5/2 + 3/2*sqrt(5)"), 100).unwrap());
    }

    #[test]
    fn chi_search_examples() {
        let t = t();
        let jc = interval_j(&t, &t.alphabet().parse_word("c").unwrap()).unwrap();
        assert_eq!(chi_search(&t, &jc, None).unwrap().to_string(), "RLL");
        let ja = interval_j(&t, &t.alphabet().parse_word("a").unwrap()).unwrap();
        assert_eq!(chi_search(&t, &ja, None).unwrap().to_string(), "LLLLLL");
        assert!(chi_search(&t, &t.domain(), None).unwrap().is_empty());
    }

    #[test]
    fn induced_map_matches_first_return() {
        let t = t();
        for w in ["b", "ba", "cc", "acb"] {
            let w = t.alphabet().parse_word(w).unwrap();
            for j in [interval_j(&t, &w).unwrap(), interval_i(&t, &w).unwrap()] {
                let s = induce(&t, &j).unwrap().transformation;
                let cells = first_return_cells(&t, &j, None).unwrap();
                let bounds: Vec<QuadNum> = cells.iter().map(|c| c.domain.lo().clone()).collect();
                assert_eq!(s.separation_points(), bounds);
                for (a, c) in s.top().iter().zip(&cells) {
                    assert_eq!(s.alpha(*a), &c.shift);
                }
                let div = division_points(&t, &j, None).unwrap();
                let inside: Vec<QuadNum> = div.points.iter().filter(|p| j.contains(p)).cloned().collect();
                assert_eq!(s.separation_points(), inside);
            }
        }
    }

    #[test]
    fn return_basis_examples() {
        let t = t();
        let c = t.alphabet().parse_word("c").unwrap();
        assert_eq!(t.alphabet().render(&return_basis(&t, &c).unwrap().apply(&c)), "c");
        let set: Vec<String> = return_basis(&t, &c)
            .unwrap()
            .image_set()
            .iter()
            .map(|w| t.alphabet().render(w))
            .collect();
        assert_eq!(set, vec!["bac", "bbac", "c"]);
        assert_eq!(return_basis(&t, &[]).unwrap(), Morphism::identity(t.alphabet()));
    }

    #[test]
    fn chi_strings() {
        let chi: ChiSequence = "RLL".parse().unwrap();
        assert_eq!(chi.steps(), &[Side::Right, Side::Left, Side::Left]);
        assert!(matches!("RXL".parse::<ChiSequence>(), Err(Error::Parse { column: 2, .. })));
    }
}
