//! Nonerasing morphisms `A* → A*`.
//!
//! The same type records the positive automorphisms produced by induction and
//! the coding morphisms of return-word sets.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    /// `images[i]` is the image of the `i`-th letter of `alphabet`.
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.len() {
            return Err(Error::AlphabetMismatch(format!(
                "{} images for {} letters",
                images.len(),
                alphabet.len()
            )));
        }
        for (i, w) in images.iter().enumerate() {
            if w.is_empty() {
                return Err(Error::NotACodingMorphism(format!(
                    "image of {} is empty",
                    alphabet.name(Letter(i as u8))
                )));
            }
            if w.iter().any(|a| a.index() >= alphabet.len()) {
                return Err(Error::AlphabetMismatch("image uses a foreign letter".into()));
            }
        }
        Ok(Morphism { alphabet, images })
    }

    /// Builds from image strings listed in alphabet order.
    pub fn from_strs(alphabet: &Alphabet, images: &[&str]) -> Result<Self> {
        let images = images.iter().map(|s| alphabet.parse_word(s)).collect::<Result<Vec<_>>>()?;
        Self::new(alphabet.clone(), images)
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        let images = alphabet.letters().map(|a| vec![a]).collect();
        Morphism { alphabet: alphabet.clone(), images }
    }

    /// The elementary substitution sending `x` to `image` and fixing every other letter.
    pub fn elementary(alphabet: &Alphabet, x: Letter, image: Word) -> Self {
        let mut m = Self::identity(alphabet);
        m.images[x.index()] = image;
        m
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn image(&self, a: Letter) -> &Word {
        &self.images[a.index()]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn apply(&self, w: &[Letter]) -> Word {
        w.iter().flat_map(|&a| self.images[a.index()].iter().copied()).collect()
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Morphism) -> Morphism {
        let images = other.images.iter().map(|w| self.apply(w)).collect();
        Morphism { alphabet: self.alphabet.clone(), images }
    }

    pub fn power(&self, k: u32) -> Morphism {
        let mut m = Morphism::identity(&self.alphabet);
        for _ in 0..k {
            m = self.compose(&m);
        }
        m
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_image_len(&self) -> usize {
        self.images.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `M[i][j]` = number of occurrences of letter `i` in the image of letter `j`.
    pub fn incidence_matrix(&self) -> Vec<Vec<u64>> {
        let s = self.alphabet.len();
        let mut m = vec![vec![0u64; s]; s];
        for (j, w) in self.images.iter().enumerate() {
            for a in w {
                m[a.index()][j] += 1;
            }
        }
        m
    }

    pub fn determinant(&self) -> BigInt {
        let m: Vec<Vec<BigInt>> = self
            .incidence_matrix()
            .into_iter()
            .map(|row| row.into_iter().map(BigInt::from).collect())
            .collect();
        bareiss_determinant(m)
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }

    /// Smallest `k ≤ (s−1)²+1` with `M^k > 0` entrywise, if any.
    pub fn primitivity_exponent(&self) -> Option<u32> {
        let s = self.alphabet.len();
        let m: Vec<Vec<bool>> = self
            .incidence_matrix()
            .into_iter()
            .map(|row| row.into_iter().map(|x| x > 0).collect())
            .collect();
        let bound = ((s - 1) * (s - 1) + 1) as u32;
        let mut p = m.clone();
        for k in 1..=bound {
            if p.iter().all(|row| row.iter().all(|&x| x)) {
                return Some(k);
            }
            p = bool_mul(&p, &m);
        }
        None
    }

    pub fn is_primitive(&self) -> bool {
        self.primitivity_exponent().is_some()
    }

    /// Letters `a` whose image starts with `a` and is longer than one letter.
    pub fn prolongable_letters(&self) -> Vec<Letter> {
        self.alphabet
            .letters()
            .filter(|&a| {
                let w = &self.images[a.index()];
                w.len() > 1 && w[0] == a
            })
            .collect()
    }

    /// Image words sorted lexicographically.
    pub fn image_set(&self) -> Vec<Word> {
        let mut v = self.images.clone();
        v.sort();
        v.dedup();
        v
    }
}

fn bool_mul(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).any(|k| a[i][k] && b[k][j])).collect())
        .collect()
}

fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}->{}", self.alphabet.name(Letter(i as u8)), self.alphabet.render(w))?;
        }
        Ok(())
    }
}
