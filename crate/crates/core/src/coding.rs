//! Natural codings, word intervals, factor sets, return words and derived sets.

use std::collections::HashSet;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result, Side};
use crate::iet::{Iet, SemiInterval};
use crate::morphism::Morphism;
use crate::qfield::QuadNum;

/// Default multiplier for return-time caps: `C · ⌈|D| / |J|⌉` iterations.
pub const DEFAULT_CAP_FACTOR: u64 = 64;

/// First `n` letters of `Σ_T(z)`.
pub fn natural_coding(t: &Iet, z: &QuadNum, n: usize) -> Result<Word> {
    let mut x = z.clone();
    let mut w = Vec::with_capacity(n);
    for _ in 0..n {
        let a = t.locate(&x)?;
        x = &x + t.alpha(a);
        w.push(a);
    }
    Ok(w)
}

/// `α_w`, the sum of the translation values along `w`.
pub fn word_translation(t: &Iet, w: &[Letter]) -> QuadNum {
    w.iter().map(|&a| t.alpha(a)).sum()
}

/// `I_w`: points whose coding begins with `w`, or `None` when empty.
pub fn interval_i(t: &Iet, w: &[Letter]) -> Option<SemiInterval> {
    let mut cur = t.domain();
    let mut shift = QuadNum::zero();
    for &a in w {
        // I_{ua} = I_u ∩ (I_a − α_u)
        let target = t.interval_of(a).translate(&-&shift);
        cur = cur.intersect(&target)?;
        shift = &shift + t.alpha(a);
    }
    Some(cur)
}

/// `J_w = I_w + α_w`: points whose most recent `|w|` letters read `w`.
pub fn interval_j(t: &Iet, w: &[Letter]) -> Option<SemiInterval> {
    interval_i(t, w).map(|i| i.translate(&word_translation(t, w)))
}

pub fn in_language(t: &Iet, w: &[Letter]) -> bool {
    interval_i(t, w).is_some()
}

/// A finite factorial set of words, stored by length in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSet {
    alphabet: Alphabet,
    layers: Vec<Vec<Word>>,
    members: HashSet<Word>,
}

impl FactorSet {
    fn from_layers(alphabet: Alphabet, layers: Vec<Vec<Word>>) -> Self {
        let members = layers.iter().flatten().cloned().collect();
        FactorSet { alphabet, layers, members }
    }

    /// All factors of length `≤ max_len` of the given words.
    pub fn from_words<'a>(alphabet: &Alphabet, words: impl IntoIterator<Item = &'a [Letter]>, max_len: usize) -> Self {
        let mut layers: Vec<HashSet<Word>> = vec![HashSet::new(); max_len + 1];
        layers[0].insert(Vec::new());
        for w in words {
            for i in 0..w.len() {
                for k in 1..=max_len.min(w.len() - i) {
                    layers[k].insert(w[i..i + k].to_vec());
                }
            }
        }
        let layers = layers
            .into_iter()
            .map(|l| {
                let mut v: Vec<Word> = l.into_iter().collect();
                v.sort();
                v
            })
            .collect();
        Self::from_layers(alphabet.clone(), layers)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn max_len(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn contains(&self, w: &[Letter]) -> bool {
        self.members.contains(w)
    }

    /// Words of length exactly `k`, sorted.
    pub fn layer(&self, k: usize) -> &[Word] {
        self.layers.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// All words, shortest first, each length in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.layers.iter().flatten()
    }

    /// The subset of words of length `≤ n`.
    pub fn truncate(&self, n: usize) -> FactorSet {
        Self::from_layers(self.alphabet.clone(), self.layers[..=n.min(self.max_len())].to_vec())
    }

    /// Rendered words, one space-separated line per length.
    pub fn lines(&self) -> Vec<String> {
        self.layers
            .iter()
            .map(|l| l.iter().map(|w| self.alphabet.render(w)).collect::<Vec<_>>().join(" "))
            .collect()
    }
}

/// `F(T)` up to length `n`, by breadth-first refinement of the intervals `J_w`.
pub fn factors(t: &Iet, n: usize) -> Result<FactorSet> {
    if !t.is_indecomposable() {
        return Err(Error::DecomposablePermutation);
    }
    let mut layers = vec![vec![Vec::new()]];
    let mut current: Vec<(Word, SemiInterval)> = vec![(Vec::new(), t.domain())];
    for _ in 0..n {
        let mut next = Vec::new();
        for (w, j) in &current {
            for a in t.alphabet().letters() {
                // J_{wa} = T(J_w ∩ I_a)
                if let Some(piece) = j.intersect(&t.interval_of(a)) {
                    let mut wa = w.clone();
                    wa.push(a);
                    next.push((wa, piece.translate(t.alpha(a))));
                }
            }
        }
        layers.push(next.iter().map(|(w, _)| w.clone()).collect());
        current = next;
    }
    Ok(FactorSet::from_layers(t.alphabet().clone(), layers))
}

/// A maximal piece of `J` on which the first return to `J` follows one path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReturnCell {
    pub domain: SemiInterval,
    /// Letters read from a point of the cell until its first return.
    pub word: Word,
    /// `T^{|word|}(z) − z` on the cell.
    pub shift: QuadNum,
}

impl ReturnCell {
    pub fn image(&self) -> SemiInterval {
        self.domain.translate(&self.shift)
    }

    pub fn return_time(&self) -> usize {
        self.word.len()
    }
}

/// `C · ⌈(r − ℓ) / |J|⌉`.
pub fn default_cap(t: &Iet, j: &SemiInterval) -> u64 {
    let ratio = (t.measure() / j.len()).ceil();
    let ratio: u64 = ratio.try_into().unwrap_or(u64::MAX / DEFAULT_CAP_FACTOR);
    DEFAULT_CAP_FACTOR.saturating_mul(ratio.max(1))
}

/// Cells of the first-return map of `T` to `J`, sorted by left endpoint.
pub fn first_return_cells(t: &Iet, j: &SemiInterval, cap: Option<u64>) -> Result<Vec<ReturnCell>> {
    if !j.is_subset_of(&t.domain()) {
        return Err(Error::BadInterval { lo: j.lo().clone(), hi: j.hi().clone() });
    }
    let cap = cap.unwrap_or_else(|| default_cap(t, j));
    let mut pending = vec![ReturnCell { domain: j.clone(), word: Vec::new(), shift: QuadNum::zero() }];
    let mut done = Vec::new();
    while let Some(p) = pending.pop() {
        if p.word.len() as u64 >= cap {
            return Err(Error::CapExceeded { cap });
        }
        let pos = p.image();
        for &a in t.top() {
            let Some(piece) = pos.intersect(&t.interval_of(a)) else { continue };
            let shift = &p.shift + t.alpha(a);
            let mut word = p.word.clone();
            word.push(a);
            let img = piece.translate(t.alpha(a));
            let back = -&shift;
            if let Some(inside) = img.intersect(j) {
                done.push(ReturnCell { domain: inside.translate(&back), word: word.clone(), shift: shift.clone() });
            }
            if img.lo() < j.lo() {
                let hi = img.hi().clone().min(j.lo().clone());
                let out = SemiInterval::new(img.lo().clone(), hi)?;
                pending.push(ReturnCell { domain: out.translate(&back), word: word.clone(), shift: shift.clone() });
            }
            if img.hi() > j.hi() {
                let lo = img.lo().clone().max(j.hi().clone());
                let out = SemiInterval::new(lo, img.hi().clone())?;
                pending.push(ReturnCell { domain: out.translate(&back), word, shift });
            }
        }
    }
    done.sort_by(|x, y| x.domain.lo().cmp(y.domain.lo()));
    // adjacent cells with the same path are one cell
    let mut merged: Vec<ReturnCell> = Vec::with_capacity(done.len());
    for c in done {
        if let Some(last) = merged.last_mut() {
            if last.word == c.word && last.domain.hi() == c.domain.lo() {
                last.domain = SemiInterval::new(last.domain.lo().clone(), c.domain.hi().clone())?;
                continue;
            }
        }
        merged.push(c);
    }
    Ok(merged)
}

/// The first-return map of `T` on `J` as a transformation whose letters are
/// given per cell.
pub fn cells_to_iet(alphabet: &Alphabet, cells: &[ReturnCell], letters: &[Letter]) -> Result<Iet> {
    if cells.len() != alphabet.len() || letters.len() != cells.len() {
        return Err(Error::AlphabetMismatch(format!(
            "{} return cells for {} letters",
            cells.len(),
            alphabet.len()
        )));
    }
    let mut lengths = vec![QuadNum::zero(); alphabet.len()];
    for (c, &a) in cells.iter().zip(letters) {
        lengths[a.index()] = c.domain.len();
    }
    let mut by_image: Vec<usize> = (0..cells.len()).collect();
    by_image.sort_by(|&x, &y| cells[x].image().lo().cmp(cells[y].image().lo()));
    let bottom = by_image.iter().map(|&i| letters[i]).collect();
    Iet::from_orders(alphabet.clone(), letters.to_vec(), bottom, lengths, cells[0].domain.lo().clone())
}

/// First return words of `w`: right words `R_F(w)` or left words `R_F(w)'`, sorted.
pub fn return_words(t: &Iet, w: &[Letter], side: Side) -> Result<Vec<Word>> {
    let j = match side {
        Side::Right => interval_j(t, w),
        Side::Left => interval_i(t, w),
    }
    .ok_or_else(|| Error::WordNotInLanguage(t.alphabet().render(w)))?;
    let mut words: Vec<Word> = first_return_cells(t, &j, None)?.into_iter().map(|c| c.word).collect();
    words.sort();
    words.dedup();
    Ok(words)
}

/// Return words read off a factor set: the minimal `x` with `wx ∈ F ∩ A⁺w`
/// (right) or `xw ∈ F ∩ wA⁺` (left), up to the set's length bound.
pub fn return_words_in(f: &FactorSet, w: &[Letter], side: Side) -> Vec<Word> {
    let mut out = Vec::new();
    for k in w.len() + 1..=f.max_len() {
        for v in f.layer(k) {
            if !(v.starts_with(w) && v.ends_with(w)) {
                continue;
            }
            // w must not occur strictly inside v
            let inner = (1..k - w.len()).any(|i| &v[i..i + w.len()] == w);
            if inner {
                continue;
            }
            out.push(match side {
                Side::Right => v[w.len()..].to_vec(),
                Side::Left => v[..k - w.len()].to_vec(),
            });
        }
    }
    out.sort();
    out
}

/// `Γ_F(w) = {x ∈ F | wx ∈ F ∩ A⁺w}`, restricted to `|x| ≤ max_len`.
pub fn gamma_set(t: &Iet, w: &[Letter], max_len: usize) -> Result<Vec<Word>> {
    if !in_language(t, w) {
        return Err(Error::WordNotInLanguage(t.alphabet().render(w)));
    }
    let f = factors(t, w.len() + max_len)?;
    let mut out = Vec::new();
    for k in w.len() + 1..=f.max_len() {
        for v in f.layer(k) {
            if v.starts_with(w) && v.ends_with(w) {
                out.push(v[w.len()..].to_vec());
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Coding morphism for a return-word set: sorted words assigned to letters in alphabet order.
pub fn coding_morphism(alphabet: &Alphabet, words: &[Word]) -> Result<Morphism> {
    let mut sorted = words.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != alphabet.len() {
        return Err(Error::NotACodingMorphism(format!(
            "{} return words for {} letters",
            sorted.len(),
            alphabet.len()
        )));
    }
    Morphism::new(alphabet.clone(), sorted)
}

fn check_coding(t: &Iet, w: &[Letter], f: &Morphism) -> Result<Vec<Word>> {
    let returns = return_words(t, w, Side::Right)?;
    if f.image_set() != returns || f.image_set().len() != f.images().len() {
        let render: Vec<String> = returns.iter().map(|x| t.alphabet().render(x)).collect();
        return Err(Error::NotACodingMorphism(format!(
            "images of {f} are not a bijection onto {{{}}}",
            render.join(", ")
        )));
    }
    Ok(returns)
}

/// `D_f(F)` up to length `n`, via `y ∈ D_f(F) ⇔ w·f(y) ∈ F`.
pub fn derived_set(t: &Iet, w: &[Letter], f: &Morphism, n: usize) -> Result<FactorSet> {
    check_coding(t, w, f)?;
    let language = factors(t, w.len() + n * f.max_image_len())?;
    let alphabet = f.alphabet().clone();
    let mut layers = vec![vec![Vec::new()]];
    for _ in 0..n {
        let mut next = Vec::new();
        for y in layers.last().unwrap() {
            for a in alphabet.letters() {
                let mut ya = y.clone();
                ya.push(a);
                let mut v = w.to_vec();
                v.extend(f.apply(&ya));
                if language.contains(&v) {
                    next.push(ya);
                }
            }
        }
        layers.push(next);
    }
    Ok(FactorSet::from_layers(alphabet, layers))
}

/// The induced transformation on `J_w`, each cell named by `f⁻¹` of its return word.
pub fn derived_transformation(t: &Iet, w: &[Letter], f: &Morphism) -> Result<Iet> {
    check_coding(t, w, f)?;
    let j = interval_j(t, w).ok_or_else(|| Error::WordNotInLanguage(t.alphabet().render(w)))?;
    let cells = first_return_cells(t, &j, None)?;
    let letters = cells
        .iter()
        .map(|c| {
            f.alphabet()
                .letters()
                .find(|&a| f.image(a) == &c.word)
                .ok_or_else(|| Error::NotACodingMorphism(t.alphabet().render(&c.word)))
        })
        .collect::<Result<Vec<_>>>()?;
    cells_to_iet(f.alphabet(), &cells, &letters)
}

/// `D_f(F)` up to length `n` as the factor set of the induced transformation on `J_w`.
pub fn derived_set_geometric(t: &Iet, w: &[Letter], f: &Morphism, n: usize) -> Result<FactorSet> {
    factors(&derived_transformation(t, w, f)?, n)
}
