//! Dense row-major bitset over a `width x height` grid.
//!
//! Row `j` is stored bottom-up (row 0 is the bottom row), and bit `i` of a row
//! is column `i` counted from the left. Bits past `width` in the last word of
//! each row are always zero.

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitGrid {
    width: usize,
    height: usize,
    stride: usize,
    words: Vec<u64>,
}

impl std::fmt::Debug for BitGrid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitGrid {}x{}", self.width, self.height)?;
        for j in (0..self.height).rev() {
            for i in 0..self.width {
                f.write_str(if self.get(i, j) { "." } else { "#" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl BitGrid {
    pub fn new(width: usize, height: usize) -> Self {
        let stride = width.div_ceil(WORD);
        BitGrid {
            width,
            height,
            stride,
            words: vec![0; stride * height],
        }
    }

    pub fn filled(width: usize, height: usize) -> Self {
        let mut g = BitGrid::new(width, height);
        for w in g.words.iter_mut() {
            *w = !0;
        }
        g.clear_padding();
        g
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.width * self.height
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.width && j < self.height);
        let w = self.words[j * self.stride + i / WORD];
        (w >> (i % WORD)) & 1 == 1
    }

    /// Like [`get`](Self::get) but out-of-range coordinates read as black.
    #[inline]
    pub fn get_signed(&self, i: isize, j: isize) -> bool {
        i >= 0
            && j >= 0
            && (i as usize) < self.width
            && (j as usize) < self.height
            && self.get(i as usize, j as usize)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.width && j < self.height);
        let w = &mut self.words[j * self.stride + i / WORD];
        let mask = 1u64 << (i % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, j: usize) -> &[u64] {
        &self.words[j * self.stride..(j + 1) * self.stride]
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn row_count_ones(&self, j: usize) -> usize {
        self.row(j).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn column_count_ones(&self, i: usize) -> usize {
        (0..self.height).filter(|&j| self.get(i, j)).count()
    }

    /// ORs the first `len` bits of `src` into row `j`, starting at column `offset`.
    pub fn or_row_bits(&mut self, j: usize, offset: usize, src: &[u64], len: usize) {
        debug_assert!(offset + len <= self.width);
        let base = j * self.stride;
        let shift = offset % WORD;
        let first = offset / WORD;
        let nwords = len.div_ceil(WORD);
        for (k, &raw) in src.iter().take(nwords).enumerate() {
            let bits = if (k + 1) * WORD > len {
                raw & low_mask(len - k * WORD)
            } else {
                raw
            };
            if bits == 0 {
                continue;
            }
            let dst = base + first + k;
            self.words[dst] |= bits << shift;
            if shift != 0 {
                let carry = bits >> (WORD - shift);
                if carry != 0 {
                    self.words[dst + 1] |= carry;
                }
            }
        }
    }

    /// Set cells in row-major order from the bottom-left: `(0,0), (1,0), ...`.
    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.height).flat_map(move |j| {
            self.row(j).iter().enumerate().flat_map(move |(k, &w)| {
                BitIter(w).map(move |b| (k * WORD + b, j))
            })
        })
    }

    pub fn complement(&self) -> BitGrid {
        let mut g = self.clone();
        for w in g.words.iter_mut() {
            *w = !*w;
        }
        g.clear_padding();
        g
    }

    pub fn transpose(&self) -> BitGrid {
        let mut t = BitGrid::new(self.height, self.width);
        for (i, j) in self.ones() {
            t.set(j, i, true);
        }
        t
    }

    fn clear_padding(&mut self) {
        let tail = self.width % WORD;
        if tail == 0 || self.stride == 0 {
            return;
        }
        let mask = low_mask(tail);
        for j in 0..self.height {
            self.words[j * self.stride + self.stride - 1] &= mask;
        }
    }
}

#[inline]
fn low_mask(bits: usize) -> u64 {
    if bits >= WORD {
        !0
    } else {
        (1u64 << bits) - 1
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filled_has_no_padding_bits() {
        let g = BitGrid::filled(70, 3);
        assert_eq!(g.count_ones(), 210);
        assert_eq!(g.complement().count_ones(), 0);
    }

    #[test]
    fn or_row_bits_across_word_boundary() {
        let mut g = BitGrid::new(200, 1);
        let src = [!0u64, !0u64];
        g.or_row_bits(0, 60, &src, 100);
        let set: Vec<usize> = g.ones().map(|(i, _)| i).collect();
        assert_eq!(set, (60..160).collect::<Vec<_>>());
    }

    #[test]
    fn ones_are_row_major_from_bottom_left() {
        let mut g = BitGrid::new(3, 2);
        g.set(2, 0, true);
        g.set(0, 1, true);
        g.set(1, 0, true);
        assert_eq!(g.ones().collect::<Vec<_>>(), vec![(1, 0), (2, 0), (0, 1)]);
    }
}
