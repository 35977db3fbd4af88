//! A primitive substitution generating the language of a quadratic transformation.

use std::collections::BTreeSet;

use crate::alphabet::{Letter, Word};
use crate::coding::FactorSet;
use crate::error::{Error, Result};
use crate::iet::{CanonicalMode, Iet};
use crate::induction::{apply_chi, ChiSequence};
use crate::morphism::Morphism;
use crate::quadratic::graph::{build_graph, InductionGraph, DEFAULT_VERTEX_BUDGET};

/// `F(T)` as the factors of `θ(η^ω(a))`.
#[derive(Clone, Debug)]
pub struct MorphicPresentation {
    /// `θ`: the automorphism along the path from `T` to the cycle vertex.
    pub path_morphism: Morphism,
    /// `η`: a primitive power of the cycle automorphism, prolongable on `seed`.
    pub cycle_morphism: Morphism,
    pub seed: Letter,
    pub path: ChiSequence,
    pub cycle: ChiSequence,
    pub power: u32,
}

/// Letters are matched by their position in the top order.
fn relabeling(s: &Iet, s2: &Iet) -> Morphism {
    let mut images = vec![Vec::new(); s.size()];
    for (x, y) in s.top().iter().zip(s2.top()) {
        images[x.index()] = vec![*y];
    }
    Morphism::new(s.alphabet().clone(), images).expect("bijective relabeling")
}

/// Least `k` with some `η^k(a) ∈ aA⁺`, together with `a`.
fn prolongable_power(eta: &Morphism, max_power: u32) -> Option<(u32, Letter)> {
    let mut m = eta.clone();
    for k in 1..=max_power {
        if let Some(&a) = m.prolongable_letters().first() {
            return Some((k, a));
        }
        m = eta.compose(&m);
    }
    None
}

const MAX_POWER: u32 = 64;

fn presentation_from_cycle(g: &InductionGraph, v: usize, cycle: &[usize]) -> Result<Option<MorphicPresentation>> {
    let vertex = &g.vertices[v];
    let s = &vertex.representative;
    let chi = ChiSequence(cycle.iter().map(|&i| g.transitions[i].side).collect());
    let (s2, eta0) = apply_chi(s, &chi)?;
    if s2.canonical_form(CanonicalMode::Equivalence) != vertex.class {
        return Err(Error::NotRegular(format!("cycle `{chi}` does not return to its class")));
    }
    let eta = eta0.compose(&relabeling(s, &s2));
    if !eta.is_primitive() {
        return Ok(None);
    }
    let Some((power, seed)) = prolongable_power(&eta, MAX_POWER) else {
        return Ok(None);
    };
    Ok(Some(MorphicPresentation {
        path_morphism: vertex.theta.clone(),
        cycle_morphism: eta.power(power),
        seed,
        path: vertex.chi.clone(),
        cycle: chi,
        power,
    }))
}

/// Cycles are tried shortest first, ties by vertex discovery order.
pub fn extract_primitive_morphism(t: &Iet) -> Result<MorphicPresentation> {
    let g = build_graph(t, CanonicalMode::Equivalence, DEFAULT_VERTEX_BUDGET)?;
    extract_from_graph(&g)
}

pub fn extract_from_graph(g: &InductionGraph) -> Result<MorphicPresentation> {
    let mut cycles: Vec<(usize, usize, Vec<usize>)> = (0..g.vertex_count())
        .filter_map(|v| g.shortest_cycle_through(v).map(|c| (c.len(), v, c)))
        .collect();
    cycles.sort_by_key(|(len, v, _)| (*len, *v));
    for (_, v, c) in &cycles {
        if let Some(p) = presentation_from_cycle(g, *v, c)? {
            return Ok(p);
        }
    }
    Err(Error::NoPrimitivePower(MAX_POWER))
}

fn windows_into(w: &[Letter], n: usize, out: &mut BTreeSet<Word>) {
    for k in 1..=n.min(w.len()) {
        for f in w.windows(k) {
            out.insert(f.to_vec());
        }
    }
}

impl MorphicPresentation {
    /// Prefix of length `n` of `θ(η^ω(a))`.
    pub fn fixed_point_prefix(&self, n: usize) -> Word {
        let mut w = vec![self.seed];
        // θ maps each letter to a nonempty word, so `n` letters of the fixed point suffice.
        while w.len() < n {
            w = self.cycle_morphism.apply(&w);
        }
        let mut out = self.path_morphism.apply(&w[..n.max(1)]);
        out.truncate(n);
        out
    }

    /// Factors of length ≤ `n` of the fixed point of `η`.
    pub fn cycle_language(&self, n: usize) -> FactorSet {
        let eta = &self.cycle_morphism;
        let alphabet = eta.alphabet();
        let mut two: BTreeSet<Word> = BTreeSet::new();
        for img in eta.images() {
            two.extend(img.windows(2).map(<[Letter]>::to_vec));
        }
        loop {
            let mut next = two.clone();
            for xy in &two {
                next.extend(eta.apply(xy).windows(2).map(<[Letter]>::to_vec));
            }
            if next.len() == two.len() {
                break;
            }
            two = next;
        }
        let mut m = eta.clone();
        while m.min_image_len() + 1 < n {
            m = eta.compose(&m);
        }
        let mut out = BTreeSet::new();
        for a in alphabet.letters() {
            out.insert(vec![a]);
        }
        for xy in &two {
            windows_into(&m.apply(xy), n, &mut out);
        }
        FactorSet::from_words(alphabet, out.iter().map(Vec::as_slice), n)
    }

    /// Factors of length ≤ `n` of `θ(η^ω(a))`, which is `F(T) ∩ A^{≤n}`.
    pub fn language(&self, n: usize) -> FactorSet {
        let inner = self.cycle_language(n + 1);
        let mut out = BTreeSet::new();
        for w in inner.layer(n.min(inner.max_len())).iter().chain(inner.layer(1)) {
            windows_into(&self.path_morphism.apply(w), n, &mut out);
        }
        FactorSet::from_words(self.path_morphism.alphabet(), out.iter().map(Vec::as_slice), n)
    }
}
