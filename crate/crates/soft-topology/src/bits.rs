//! Fixed-width bit vectors.
//!
//! A [`Bits`] value is an ordered string of `len` cells packed LSB-first into
//! 64-bit words. Soft sets store their whole approximation table as one such
//! string (parameter-major, point-minor), and crisp families reuse it for
//! subsets of a plain finite set, so every set operation in the crate bottoms
//! out in a handful of word operations here.
//!
//! The `Ord` implementation is lexicographic on the cell string with `0 < 1`,
//! which is the canonical order used for all deterministic listings and
//! witness selection.

use std::cmp::Ordering;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    /// All-zero string of `len` cells.
    pub fn zero(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    /// All-one string of `len` cells.
    pub fn ones(len: usize) -> Self {
        let mut b = Bits {
            len,
            words: vec![!0u64; len.div_ceil(WORD)],
        };
        b.trim();
        b
    }

    /// Builds a string by evaluating `f` on every cell index.
    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut b = Bits::zero(len);
        for i in 0..len {
            if f(i) {
                b.set(i, true);
            }
        }
        b
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        if value {
            self.words[i / WORD] |= 1 << (i % WORD);
        } else {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    /// Zeroes the unused tail of the last word so that equality and hashing
    /// can work word-by-word.
    fn trim(&mut self) {
        let tail = self.len % WORD;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn or(&self, other: &Bits) -> Bits {
        debug_assert_eq!(self.len, other.len);
        Bits {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn and(&self, other: &Bits) -> Bits {
        debug_assert_eq!(self.len, other.len);
        Bits {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Cells set in `self` but not in `other`.
    pub fn and_not(&self, other: &Bits) -> Bits {
        debug_assert_eq!(self.len, other.len);
        Bits {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    /// Complement within the `len` cells.
    pub fn not(&self) -> Bits {
        let mut b = Bits {
            len: self.len,
            words: self.words.iter().map(|a| !a).collect(),
        };
        b.trim();
        b
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn is_ones(&self) -> bool {
        *self == Bits::ones(self.len)
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Indices of set cells, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, w)| {
            let mut w = *w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + bit)
                }
            })
        })
    }

    /// Numeric rank consistent with `Ord`: cell 0 is the most significant
    /// digit. Only meaningful for short strings; callers guard `len`.
    pub fn to_index(&self) -> usize {
        debug_assert!(self.len < usize::BITS as usize);
        let mut v = 0usize;
        for i in 0..self.len {
            v = v << 1 | usize::from(self.get(i));
        }
        v
    }

    /// Inverse of [`Bits::to_index`].
    pub fn from_index(len: usize, index: usize) -> Self {
        debug_assert!(len < usize::BITS as usize && index < 1usize << len);
        Bits::from_fn(len, |i| index >> (len - 1 - i) & 1 == 1)
    }
}

impl Ord for Bits {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().zip(&other.words) {
            if a != b {
                // Lowest differing bit is the earliest differing cell.
                let cell = (a ^ b).trailing_zeros();
                return if a >> cell & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Bits {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Bits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}
