//! Fixed-universe bitset over the colors `0..D`.

use rand::Rng;

use crate::graph::Color;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorSet {
    words: Vec<u64>,
    universe: usize,
}

impl ColorSet {
    /// All colors `0..universe`.
    pub fn full(universe: usize) -> Self {
        let mut words = vec![u64::MAX; universe.div_ceil(64)];
        if !universe.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (universe % 64)) - 1;
            }
        }
        ColorSet { words, universe }
    }

    pub fn contains(&self, c: Color) -> bool {
        let i = c.index();
        i < self.universe && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    /// Removes `c`, returning whether it was present. Colors outside the
    /// universe are never present.
    pub fn remove(&mut self, c: Color) -> bool {
        let present = self.contains(c);
        if present {
            let i = c.index();
            self.words[i / 64] &= !(1 << (i % 64));
        }
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros();
                bits &= bits - 1;
                Some(Color(wi as u32 * 64 + b))
            })
        })
    }

    /// Uniformly random member, `None` when empty.
    pub fn choose<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<Color> {
        let len = self.len();
        if len == 0 {
            return None;
        }
        self.iter().nth(rng.gen_range(0..len))
    }
}
