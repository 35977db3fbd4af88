//! Interval exchange transformations over `Q[√d]`.
//!
//! An [`Iet`] stores its two orders explicitly: `top` lists the letters of the
//! partition `(I_a)` from left to right and `bottom` lists the image intervals
//! `(J_a)`. Letters keep their identity under induction, so an induced
//! transformation shares the alphabet of the transformation it came from.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::qfield::QuadNum;

/// The left-closed right-open interval `[lo, hi)`, never empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemiInterval {
    lo: QuadNum,
    hi: QuadNum,
}

impl SemiInterval {
    pub fn new(lo: QuadNum, hi: QuadNum) -> Result<Self> {
        if lo.checked_sub(&hi)?.signum() >= 0 {
            return Err(Error::BadInterval { lo, hi });
        }
        Ok(SemiInterval { lo, hi })
    }

    pub fn lo(&self) -> &QuadNum {
        &self.lo
    }

    pub fn hi(&self) -> &QuadNum {
        &self.hi
    }

    pub fn len(&self) -> QuadNum {
        &self.hi - &self.lo
    }

    pub fn contains(&self, z: &QuadNum) -> bool {
        self.lo <= *z && *z < self.hi
    }

    /// Membership in the open interval `]lo, hi[`.
    pub fn contains_open(&self, z: &QuadNum) -> bool {
        self.lo < *z && *z < self.hi
    }

    pub fn is_subset_of(&self, other: &SemiInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersect(&self, other: &SemiInterval) -> Option<SemiInterval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo < hi).then_some(SemiInterval { lo, hi })
    }

    pub fn translate(&self, t: &QuadNum) -> SemiInterval {
        SemiInterval { lo: &self.lo + t, hi: &self.hi + t }
    }
}

impl fmt::Display for SemiInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lo, self.hi)
    }
}

#[derive(Clone, Debug)]
pub struct Iet {
    alphabet: Alphabet,
    top: Vec<Letter>,
    bottom: Vec<Letter>,
    lengths: Vec<QuadNum>,
    origin: QuadNum,
    d: i64,
    // per letter id
    gamma: Vec<QuadNum>,
    mu: Vec<QuadNum>,
    delta: Vec<QuadNum>,
    nu: Vec<QuadNum>,
    alpha: Vec<QuadNum>,
    end: QuadNum,
    // left boundaries in top / bottom order, for binary search
    top_bounds: Vec<QuadNum>,
    bottom_bounds: Vec<QuadNum>,
}

impl PartialEq for Iet {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.top == other.top
            && self.bottom == other.bottom
            && self.lengths == other.lengths
            && self.origin == other.origin
    }
}

impl Eq for Iet {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalMode {
    Equivalence,
    Similarity,
}

/// Result of a bounded search for coincidences among separation-point orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regularity {
    NoCollision,
    /// `T^h(γ_i) = γ_j`, with 1-based positions `i, j ≥ 2` in the top order.
    Connection { i: usize, j: usize, h: usize },
}

impl Iet {
    /// Builds the transformation with `lengths` indexed by letter (alphabet order),
    /// the top order equal to the alphabet order and the bottom order `order2`.
    pub fn new(
        alphabet: Alphabet,
        order2: Vec<Letter>,
        lengths: Vec<QuadNum>,
        origin: QuadNum,
    ) -> Result<Self> {
        let top: Vec<Letter> = alphabet.letters().collect();
        Self::from_orders(alphabet, top, order2, lengths, origin)
    }

    /// Convenience constructor from letter strings, e.g. `("abc", "bca", ..)`.
    pub fn from_names(alphabet: &str, order2: &str, lengths: Vec<QuadNum>, origin: QuadNum) -> Result<Self> {
        let alphabet = Alphabet::from_str_chars(alphabet)?;
        let order2 = alphabet.parse_word(order2)?;
        Self::new(alphabet, order2, lengths, origin)
    }

    pub fn from_orders(
        alphabet: Alphabet,
        top: Vec<Letter>,
        bottom: Vec<Letter>,
        lengths: Vec<QuadNum>,
        origin: QuadNum,
    ) -> Result<Self> {
        let s = alphabet.len();
        check_order(&alphabet, &top, "top order")?;
        check_order(&alphabet, &bottom, "order2")?;
        if lengths.len() != s {
            return Err(Error::AlphabetMismatch(format!(
                "{} lengths for {} letters",
                lengths.len(),
                s
            )));
        }
        let mut d = origin.d();
        for (i, l) in lengths.iter().enumerate() {
            if l.d() != 1 {
                if d != 1 && d != l.d() {
                    return Err(Error::RadicandMismatch { left: d, right: l.d() });
                }
                d = l.d();
            }
            if !l.is_positive() {
                return Err(Error::NonPositiveLength { letter: alphabet.name(Letter(i as u8)) });
            }
        }
        let mut gamma = vec![QuadNum::zero(); s];
        let mut mu = vec![QuadNum::zero(); s];
        let mut top_bounds = Vec::with_capacity(s);
        let mut x = origin.clone();
        for &a in &top {
            gamma[a.index()] = x.clone();
            top_bounds.push(x.clone());
            x = &x + &lengths[a.index()];
            mu[a.index()] = x.clone();
        }
        let end = x;
        let mut delta = vec![QuadNum::zero(); s];
        let mut nu = vec![QuadNum::zero(); s];
        let mut bottom_bounds = Vec::with_capacity(s);
        let mut x = origin.clone();
        for &a in &bottom {
            delta[a.index()] = x.clone();
            bottom_bounds.push(x.clone());
            x = &x + &lengths[a.index()];
            nu[a.index()] = x.clone();
        }
        let alpha = (0..s).map(|i| &delta[i] - &gamma[i]).collect();
        Ok(Iet {
            alphabet,
            top,
            bottom,
            lengths,
            origin,
            d,
            gamma,
            mu,
            delta,
            nu,
            alpha,
            end,
            top_bounds,
            bottom_bounds,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn size(&self) -> usize {
        self.top.len()
    }

    pub fn top(&self) -> &[Letter] {
        &self.top
    }

    pub fn bottom(&self) -> &[Letter] {
        &self.bottom
    }

    pub fn lengths(&self) -> &[QuadNum] {
        &self.lengths
    }

    pub fn length(&self, a: Letter) -> &QuadNum {
        &self.lengths[a.index()]
    }

    pub fn origin(&self) -> &QuadNum {
        &self.origin
    }

    /// Right end `r` of the domain.
    pub fn end(&self) -> &QuadNum {
        &self.end
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn gamma(&self, a: Letter) -> &QuadNum {
        &self.gamma[a.index()]
    }

    pub fn mu(&self, a: Letter) -> &QuadNum {
        &self.mu[a.index()]
    }

    pub fn delta(&self, a: Letter) -> &QuadNum {
        &self.delta[a.index()]
    }

    pub fn nu(&self, a: Letter) -> &QuadNum {
        &self.nu[a.index()]
    }

    /// Translation value `α_a`.
    pub fn alpha(&self, a: Letter) -> &QuadNum {
        &self.alpha[a.index()]
    }

    pub fn domain(&self) -> SemiInterval {
        SemiInterval { lo: self.origin.clone(), hi: self.end.clone() }
    }

    pub fn measure(&self) -> QuadNum {
        &self.end - &self.origin
    }

    pub fn interval_of(&self, a: Letter) -> SemiInterval {
        SemiInterval { lo: self.gamma(a).clone(), hi: self.mu(a).clone() }
    }

    pub fn image_of(&self, a: Letter) -> SemiInterval {
        SemiInterval { lo: self.delta(a).clone(), hi: self.nu(a).clone() }
    }

    pub fn contains(&self, z: &QuadNum) -> bool {
        self.origin <= *z && *z < self.end
    }

    fn check_domain(&self, z: &QuadNum) -> Result<()> {
        if z.d() != 1 && self.d != 1 && z.d() != self.d {
            return Err(Error::RadicandMismatch { left: self.d, right: z.d() });
        }
        if self.contains(z) {
            Ok(())
        } else {
            Err(Error::OutOfDomain { point: z.clone(), lo: self.origin.clone(), hi: self.end.clone() })
        }
    }

    /// The letter `a` with `z ∈ I_a`.
    pub fn locate(&self, z: &QuadNum) -> Result<Letter> {
        self.check_domain(z)?;
        let i = self.top_bounds.partition_point(|b| b <= z) - 1;
        Ok(self.top[i])
    }

    /// The letter `a` with `z ∈ J_a`.
    pub fn locate_image(&self, z: &QuadNum) -> Result<Letter> {
        self.check_domain(z)?;
        let i = self.bottom_bounds.partition_point(|b| b <= z) - 1;
        Ok(self.bottom[i])
    }

    pub fn apply(&self, z: &QuadNum) -> Result<QuadNum> {
        let a = self.locate(z)?;
        Ok(z + self.alpha(a))
    }

    pub fn apply_inv(&self, z: &QuadNum) -> Result<QuadNum> {
        let a = self.locate_image(z)?;
        Ok(z - self.alpha(a))
    }

    /// `T^n(z)`; negative `n` iterates the inverse.
    pub fn iterate(&self, z: &QuadNum, n: i64) -> Result<QuadNum> {
        self.check_domain(z)?;
        let mut x = z.clone();
        for _ in 0..n.unsigned_abs() {
            x = if n > 0 { self.apply(&x)? } else { self.apply_inv(&x)? };
        }
        Ok(x)
    }

    /// `Sep(T)`: the left boundaries `γ` in increasing order.
    pub fn separation_points(&self) -> Vec<QuadNum> {
        self.top_bounds.clone()
    }

    /// Position of each top letter in the bottom order (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos = vec![0; self.size()];
        for (j, &a) in self.bottom.iter().enumerate() {
            pos[a.index()] = j;
        }
        self.top.iter().map(|&a| pos[a.index()]).collect()
    }

    pub fn is_indecomposable(&self) -> bool {
        is_indecomposable(&self.permutation())
    }

    /// The transformation conjugated by the reflection of `[ℓ, r)`: both orders reversed.
    pub fn mirror(&self) -> Iet {
        let top = self.top.iter().rev().copied().collect();
        let bottom = self.bottom.iter().rev().copied().collect();
        Self::from_orders(self.alphabet.clone(), top, bottom, self.lengths.clone(), self.origin.clone())
            .expect("mirror of a valid transformation")
    }

    /// Same orders and lengths on `[origin, origin + |D|)`, the lengths multiplied by `c`.
    pub fn rescaled(&self, c: &QuadNum, origin: QuadNum) -> Result<Iet> {
        if !c.is_positive() {
            return Err(Error::NonPositiveLength { letter: self.alphabet.name(self.top[0]) });
        }
        let lengths = self.lengths.iter().map(|l| l.checked_mul(c)).collect::<Result<Vec<_>>>()?;
        Self::from_orders(self.alphabet.clone(), self.top.clone(), self.bottom.clone(), lengths, origin)
    }

    pub fn canonical_form(&self, mode: CanonicalMode) -> CanonicalIet {
        let plain = CanonicalIet::normalized(self, mode, false);
        match mode {
            CanonicalMode::Equivalence => plain,
            CanonicalMode::Similarity => {
                let mirrored = CanonicalIet::normalized(&self.mirror(), mode, true);
                if mirrored.key_cmp(&plain) == Ordering::Less {
                    mirrored
                } else {
                    plain
                }
            }
        }
    }

    /// Searches `T^h(γ_i) = γ_j` over nonzero separation points with `h ≤ depth`.
    pub fn idoc_probe(&self, depth: usize) -> Regularity {
        let seps = &self.top_bounds;
        let s = seps.len();
        for h in 0..=depth {
            for i in 1..s {
                let x = match self.iterate(&seps[i], h as i64) {
                    Ok(x) => x,
                    Err(_) => continue,
                };
                for (j, g) in seps.iter().enumerate().skip(1) {
                    if (h > 0 || i != j) && x == *g {
                        return Regularity::Connection { i: i + 1, j: j + 1, h };
                    }
                }
            }
        }
        Regularity::NoCollision
    }

    /// Least nonzero `|α_{i_1} + ⋯ + α_{i_k}|` over `1 ≤ k ≤ n`.
    pub fn epsilon_for(&self, n: usize) -> Result<QuadNum> {
        let mut values: Vec<QuadNum> = Vec::new();
        for a in &self.alpha {
            if !values.contains(a) {
                values.push(a.clone());
            }
        }
        let mut layer: HashSet<QuadNum> = HashSet::from([QuadNum::zero()]);
        let mut best: Option<QuadNum> = None;
        for _ in 0..n {
            let mut next = HashSet::new();
            for x in &layer {
                for a in &values {
                    next.insert(x + a);
                }
            }
            for x in &next {
                if !x.is_zero() {
                    let m = x.abs();
                    best = Some(match best {
                        Some(b) if b <= m => b,
                        _ => m,
                    });
                }
            }
            layer = next;
        }
        best.ok_or(Error::DegenerateTransformation)
    }
}

fn check_order(alphabet: &Alphabet, order: &[Letter], what: &str) -> Result<()> {
    let s = alphabet.len();
    let mut seen = vec![false; s];
    if order.len() != s {
        return Err(Error::AlphabetMismatch(format!("{what} has {} letters, expected {s}", order.len())));
    }
    for &a in order {
        if a.index() >= s || seen[a.index()] {
            return Err(Error::AlphabetMismatch(format!("{what} is not a permutation of the alphabet")));
        }
        seen[a.index()] = true;
    }
    Ok(())
}

/// True iff no proper nonempty prefix of positions is mapped onto itself.
pub fn is_indecomposable(perm: &[usize]) -> bool {
    let mut max = 0;
    for (k, &p) in perm.iter().enumerate() {
        max = max.max(p);
        if max == k && k + 1 < perm.len() {
            return false;
        }
    }
    true
}

impl fmt::Display for Iet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "domain {}", self.domain())?;
        writeln!(f, "top    {}", self.alphabet.render(&self.top))?;
        writeln!(f, "bottom {}", self.alphabet.render(&self.bottom))?;
        for &a in &self.top {
            writeln!(
                f,
                "{}: I = {}  J = {}  alpha = {}",
                self.alphabet.name(a),
                self.interval_of(a),
                self.image_of(a),
                self.alpha(a)
            )?;
        }
        Ok(())
    }
}

/// Name-free normal form: positional permutation plus lengths scaled to total 1.
#[derive(Clone, Debug)]
pub struct CanonicalIet {
    perm: Vec<usize>,
    lengths: Vec<QuadNum>,
    mode: CanonicalMode,
    mirrored: bool,
}

impl CanonicalIet {
    fn normalized(t: &Iet, mode: CanonicalMode, mirrored: bool) -> Self {
        let total = t.measure();
        let lengths = t.top.iter().map(|&a| t.length(a) / &total).collect();
        CanonicalIet { perm: t.permutation(), lengths, mode, mirrored }
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// Lengths in top order, summing to 1.
    pub fn lengths(&self) -> &[QuadNum] {
        &self.lengths
    }

    pub fn mode(&self) -> CanonicalMode {
        self.mode
    }

    /// Whether the mirror image supplied the stored form (similarity mode only).
    pub fn mirrored(&self) -> bool {
        self.mirrored
    }

    fn key_cmp(&self, other: &Self) -> Ordering {
        self.perm.cmp(&other.perm).then_with(|| self.lengths.cmp(&other.lengths))
    }

    /// A transformation on `[0, 1)` over letters `a, b, c, …` realizing this form.
    pub fn to_iet(&self) -> Iet {
        let s = self.perm.len();
        let alphabet = Alphabet::new((0..s).map(|i| (b'a' + i as u8) as char)).expect("small alphabet");
        let mut bottom = vec![Letter(0); s];
        for (i, &p) in self.perm.iter().enumerate() {
            bottom[p] = Letter(i as u8);
        }
        Iet::new(alphabet, bottom, self.lengths.clone(), QuadNum::zero()).expect("canonical form is valid")
    }
}

impl PartialEq for CanonicalIet {
    fn eq(&self, other: &Self) -> bool {
        self.mode == other.mode && self.perm == other.perm && self.lengths == other.lengths
    }
}

impl Eq for CanonicalIet {}

impl Hash for CanonicalIet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mode.hash(state);
        self.perm.hash(state);
        self.lengths.hash(state);
    }
}

impl PartialOrd for CanonicalIet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalIet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key_cmp(other)
    }
}

impl fmt::Display for CanonicalIet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perm: Vec<String> = self.perm.iter().map(|p| (p + 1).to_string()).collect();
        let lens: Vec<String> = self.lengths.iter().map(|l| l.to_string()).collect();
        write!(f, "({}) [{}]", perm.join(" "), lens.join(", "))
    }
}
