//! Permutations in one-line notation, reduced words and shuffles.

use std::fmt;

use smallvec::SmallVec;

use crate::error::Error;

/// A permutation of `{0, .., n-1}` stored as its one-line notation:
/// `images[i] = w(i)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: SmallVec<[u8; 8]>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    pub fn from_images(images: &[usize]) -> Self {
        let mut seen = vec![false; images.len()];
        for &x in images {
            assert!(x < images.len() && !seen[x], "not a permutation");
            seen[x] = true;
        }
        Permutation { images: images.iter().map(|&x| x as u8).collect() }
    }

    /// Adjacent transposition `s_i` in rank `n` (`i` is 1-based).
    pub fn adjacent(n: usize, i: usize) -> Result<Self, Error> {
        if i == 0 || i + 1 > n {
            return Err(Error::IndexOutOfRange { index: i, limit: n.saturating_sub(1) });
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// General transposition `(i j)` (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        assert!(i != j && i >= 1 && j >= 1 && i <= n && j <= n);
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        p
    }

    /// The `(m, n)`-shuffle: `i -> i+n` for the first `m` letters and
    /// `j -> j-m` for the rest, preserving both orders.
    pub fn shuffle(m: usize, n: usize) -> Self {
        let total = m + n;
        let mut images = SmallVec::with_capacity(total);
        for i in 0..m {
            images.push((i + n) as u8);
        }
        for j in m..total {
            images.push((j - m) as u8);
        }
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` with 0-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "rank mismatch");
        let images = other.images.iter().map(|&i| self.images[i as usize]).collect();
        Permutation { images }
    }

    pub fn try_compose(&self, other: &Self) -> Result<Self, Error> {
        if self.n() != other.n() {
            return Err(Error::ContextMismatch);
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Self {
        let mut images = self.images.clone();
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images }
    }

    /// Number of inversions; equals the length of any reduced word.
    pub fn length(&self) -> usize {
        let mut c = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.images[i] > self.images[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// A reduced word (1-based letters) computed by the descent-driven
    /// bubble-sort algorithm. Any reduced word is as good as any other for
    /// Hecke multiplication; word-independence is verified by tests.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut collected = Vec::with_capacity(self.length());
        loop {
            let mut descent = None;
            for i in 0..w.n().saturating_sub(1) {
                if w.images[i] > w.images[i + 1] {
                    descent = Some(i);
                    break;
                }
            }
            match descent {
                Some(i) => {
                    w.images.swap(i, i + 1);
                    collected.push(i + 1);
                }
                None => break,
            }
        }
        collected.reverse();
        collected
    }

    /// Pad to a larger rank, fixing the new letters, with this permutation
    /// acting on letters `offset+1 .. offset+n`.
    pub fn shift_pad(&self, offset: usize, total: usize) -> Self {
        assert!(offset + self.n() <= total);
        let mut p = Self::identity(total);
        for i in 0..self.n() {
            p.images[offset + i] = (self.images[i] as usize + offset) as u8;
        }
        p
    }

    /// All permutations of rank `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut used = vec![false; n];
        fn rec(
            n: usize,
            cur: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Permutation>,
        ) {
            if cur.len() == n {
                out.push(Permutation::from_images(cur));
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.images.iter().map(|&x| (x + 1).to_string()).collect();
        write!(f, "({})", w.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_examples() {
        let id = Permutation::identity(3);
        let s1 = Permutation::adjacent(3, 1).unwrap();
        let s2 = Permutation::adjacent(3, 2).unwrap();
        assert_eq!(id.compose(&s1), s1);
        assert!(s1.compose(&s1).is_identity());
        // s1 ∘ s2 sends 1->2, 2->3, 3->1 (direct composition oracle)
        let c = s1.compose(&s2);
        assert_eq!(c, Permutation::from_images(&[1, 2, 0]));
        assert!(s1.try_compose(&Permutation::identity(2)).is_err());
    }

    #[test]
    fn reduced_word_examples() {
        assert!(Permutation::identity(4).reduced_word().is_empty());
        assert_eq!(Permutation::adjacent(2, 1).unwrap().reduced_word(), vec![1]);
        // longest element of S_3: exhaustive search over words of length <= 3
        // confirms [1,2,1] is minimal for (3,2,1).
        let w0 = Permutation::from_images(&[2, 1, 0]);
        assert_eq!(w0.reduced_word(), vec![1, 2, 1]);
        let mut found = None;
        'outer: for len in 0..=3usize {
            let mut idx = vec![1usize; len];
            loop {
                let mut p = Permutation::identity(3);
                for &i in &idx {
                    p = p.compose(&Permutation::adjacent(3, i).unwrap());
                }
                if p == w0 {
                    found = Some(idx.clone());
                    break 'outer;
                }
                // advance odometer over letters {1,2}
                let mut k = 0;
                while k < len {
                    if idx[k] == 1 {
                        idx[k] = 2;
                        break;
                    }
                    idx[k] = 1;
                    k += 1;
                }
                if k == len {
                    break;
                }
            }
        }
        assert_eq!(found.unwrap().len(), 3);
    }

    #[test]
    fn words_multiply_back() {
        for p in Permutation::all(4) {
            let mut q = Permutation::identity(4);
            for i in p.reduced_word() {
                q = q.compose(&Permutation::adjacent(4, i).unwrap());
            }
            assert_eq!(q, p);
            assert_eq!(p.reduced_word().len(), p.length());
        }
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(Permutation::shuffle(1, 1), Permutation::adjacent(2, 1).unwrap());
        // 1->2, 2->3, 3->1
        assert_eq!(Permutation::shuffle(2, 1), Permutation::from_images(&[1, 2, 0]));
        assert!(Permutation::shuffle(3, 0).is_identity());
        assert!(Permutation::shuffle(0, 3).is_identity());
    }

    #[test]
    fn inverse_and_length() {
        for p in Permutation::all(4) {
            assert!(p.compose(&p.inverse()).is_identity());
            assert_eq!(p.length(), p.inverse().length());
        }
    }
}
