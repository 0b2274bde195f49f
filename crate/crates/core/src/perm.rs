//! Permutations of `{1..n}` in one-line notation.
//!
//! Composition is fixed globally as `(v * w)(i) = v(w(i))`; every identity
//! in the crate is stated and tested under this convention.

use std::fmt;

use rand::Rng;

/// A permutation of `{1..n}`. Points are 1-based in the public API; the
/// backing array is 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            img: (0..n as u8).collect(),
        }
    }

    /// Build from 1-based images; panics unless they form a bijection.
    pub fn from_images(images: &[usize]) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut img = Vec::with_capacity(n);
        for &im in images {
            assert!(im >= 1 && im <= n && !seen[im - 1], "not a bijection");
            seen[im - 1] = true;
            img.push((im - 1) as u8);
        }
        Perm { img }
    }

    /// The adjacent transposition `(i, i+1)`, 1 <= i <= n-1.
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "transposition index out of range");
        let mut p = Self::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    /// Build from disjoint cycles given with 1-based points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        for cycle in cycles {
            for k in 0..cycle.len() {
                let from = cycle[k];
                let to = cycle[(k + 1) % cycle.len()];
                assert!(from >= 1 && from <= n && to >= 1 && to <= n);
                images[from - 1] = to;
            }
        }
        Self::from_images(&images)
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            images.swap(i, j);
        }
        Self::from_images(&images)
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "size mismatch");
        Perm {
            img: other.img.iter().map(|&i| self.img[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u8; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v as usize] = i as u8;
        }
        Perm { img }
    }

    /// Disjoint cycles including fixed points, each cycle starting at its
    /// minimum, cycles ordered by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.img[cur] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.img.len() {
            for j in i + 1..self.img.len() {
                if self.img[i] > self.img[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// A deterministic reduced word: 1-based adjacent-transposition indices
    /// `[i1, ..., ik]` with `self = s_{i1} * ... * s_{ik}` and
    /// `k = inversions()`. Produced by bubble-sorting the one-line notation,
    /// always swapping at the leftmost descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut img = self.img.clone();
        let mut rev = Vec::new();
        loop {
            let mut descent = None;
            for i in 0..img.len().saturating_sub(1) {
                if img[i] > img[i + 1] {
                    descent = Some(i);
                    break;
                }
            }
            match descent {
                Some(i) => {
                    img.swap(i, i + 1);
                    rev.push(i + 1);
                }
                None => break,
            }
        }
        rev.reverse();
        rev
    }

    /// Restrict to `{1..m}`; all points above `m` must be fixed.
    pub fn restrict(&self, m: usize) -> Perm {
        for i in m..self.n() {
            assert_eq!(self.img[i] as usize, i, "point {} not fixed", i + 1);
        }
        Perm {
            img: self.img[..m].to_vec(),
        }
    }

    /// Extend to `{1..m}` fixing the new points.
    pub fn extend(&self, m: usize) -> Perm {
        assert!(m >= self.n());
        let mut img = self.img.clone();
        img.extend(self.n() as u8..m as u8);
        Perm { img }
    }

    /// Place `other` on points shifted by `self.n()`.
    pub fn disjoint_sum(&self, other: &Perm) -> Perm {
        let p = self.n() as u8;
        let mut img = self.img.clone();
        img.extend(other.img.iter().map(|&i| i + p));
        Perm { img }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, &v) in self.img.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn compose_convention() {
        // (v*w)(i) = v(w(i)): with v = (1,4)(2,3), w = (1,2,3,4) on 4 points,
        // v*w = (1,3) and w*v = (2,4).
        let v = Perm::from_cycles(4, &[vec![1, 4], vec![2, 3]]);
        let w = Perm::from_cycles(4, &[vec![1, 2, 3, 4]]);
        assert_eq!(v.compose(&w), Perm::from_cycles(4, &[vec![1, 3]]));
        assert_eq!(w.compose(&v), Perm::from_cycles(4, &[vec![2, 4]]));
    }

    #[test]
    fn reduced_word_is_reduced() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..200 {
            let n = 1 + (rng.gen_range(0..7usize));
            let w = Perm::random(n, &mut rng);
            let word = w.reduced_word();
            assert_eq!(word.len(), w.inversions());
            let mut acc = Perm::identity(n);
            for &i in &word {
                acc = acc.compose(&Perm::transposition(n, i));
            }
            assert_eq!(acc, w);
        }
    }

    #[test]
    fn cycles_roundtrip() {
        let w = Perm::from_cycles(6, &[vec![1, 2], vec![3, 6]]);
        assert_eq!(w.cycles(), vec![vec![1, 2], vec![3, 6], vec![4], vec![5]]);
        let id = Perm::identity(4);
        assert_eq!(id.cycles().len(), 4);
    }

    #[test]
    fn inverse_and_restrict() {
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..50 {
            let w = Perm::random(6, &mut rng);
            assert!(w.compose(&w.inverse()).is_identity());
        }
        let w = Perm::from_cycles(5, &[vec![1, 3, 2]]);
        assert_eq!(w.restrict(3), Perm::from_cycles(3, &[vec![1, 3, 2]]));
        assert_eq!(w.restrict(3).extend(5), w);
    }
}
