//! Words and normal forms for braids, singular braids, tied braids and tied
//! singular braids, plus the closure combinatorics and Markov-move
//! generators.
//!
//! Every element is kept in the semidirect normal form `(I, w)`: a set
//! partition of the strands together with a word in the `sigma`/`tau`
//! generators. Tie letters are absorbed into the partition on construction;
//! words are never reduced further, since equality is only ever decided
//! through closure invariants and algebra images.

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::partitions::{parse_partition, SetPartition};
use crate::perm::Perm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("generator index {index} out of range for {n} strands")]
    IndexRange { index: usize, n: usize },
    #[error("t-stabilization requires i and j in the same cycle, got ({i}, {j})")]
    MoveRejected { i: usize, j: usize },
    #[error("grouping has {expected} blocks but the closure has {found} components")]
    BlockCount { expected: usize, found: usize },
    #[error("expected a knot braid (single closure component), found {0} components")]
    NotAKnot(usize),
}

/// One generator letter. Indices are 1-based and must be `< n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    /// Positive elementary braid crossing.
    Sigma(usize),
    /// Negative elementary braid crossing.
    SigmaInv(usize),
    /// Singular crossing.
    Tau(usize),
    /// Tie.
    Eta(usize),
}

impl Letter {
    pub fn index(&self) -> usize {
        match *self {
            Letter::Sigma(i) | Letter::SigmaInv(i) | Letter::Tau(i) | Letter::Eta(i) => i,
        }
    }

    fn shifted(&self, by: usize) -> Letter {
        match *self {
            Letter::Sigma(i) => Letter::Sigma(i + by),
            Letter::SigmaInv(i) => Letter::SigmaInv(i + by),
            Letter::Tau(i) => Letter::Tau(i + by),
            Letter::Eta(i) => Letter::Eta(i + by),
        }
    }

    /// The underlying permutation letter (ties act trivially).
    fn perm(&self, n: usize) -> Perm {
        match *self {
            Letter::Eta(_) => Perm::identity(n),
            l => Perm::transposition(n, l.index()),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::Sigma(i) => write!(f, "s{}", i),
            Letter::SigmaInv(i) => write!(f, "s{}'", i),
            Letter::Tau(i) => write!(f, "t{}", i),
            Letter::Eta(i) => write!(f, "e{}", i),
        }
    }
}

/// The permutation of a letter sequence, taking `tau_i` to the
/// transposition as well.
pub fn perm_of_word(word: &[Letter], n: usize) -> Perm {
    let mut acc = Perm::identity(n);
    for letter in word {
        acc = acc.compose(&letter.perm(n));
    }
    acc
}

/// Replace every `tau_i` by `sigma_i`.
pub fn f_map(word: &[Letter]) -> Vec<Letter> {
    word.iter()
        .map(|l| match *l {
            Letter::Tau(i) => Letter::Sigma(i),
            other => other,
        })
        .collect()
}

/// Replace every `tau_i` by `sigma_i^{-1}`.
pub fn f_minus(word: &[Letter]) -> Vec<Letter> {
    word.iter()
        .map(|l| match *l {
            Letter::Tau(i) => Letter::SigmaInv(i),
            other => other,
        })
        .collect()
}

/// A tied singular braid in semidirect normal form: strand partition plus a
/// word free of tie letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TiedSingularBraid {
    n: usize,
    ties: SetPartition,
    word: Vec<Letter>,
}

/// Closure data: component count and the induced partition of components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub components: usize,
    pub sc_partition: SetPartition,
}

impl TiedSingularBraid {
    /// The identity braid on `n` strands.
    pub fn identity(n: usize) -> Self {
        TiedSingularBraid {
            n,
            ties: SetPartition::singletons(n),
            word: Vec::new(),
        }
    }

    /// Scan a raw letter sequence into normal form. A tie letter `eta_i`
    /// encountered after a prefix `alpha` contributes the pair
    /// `{alpha(i), alpha(i+1)}` to the partition; all other letters are kept
    /// in order.
    pub fn normalize(n: usize, raw: &[Letter]) -> Result<Self, BraidError> {
        assert!(n >= 1);
        for letter in raw {
            let i = letter.index();
            if i < 1 || i >= n {
                return Err(BraidError::IndexRange { index: i, n });
            }
        }
        let mut ties = SetPartition::singletons(n);
        let mut word = Vec::with_capacity(raw.len());
        let mut prefix_perm = Perm::identity(n);
        for letter in raw {
            match *letter {
                Letter::Eta(i) => {
                    let mu = SetPartition::mu(i, i + 1, n).expect("checked index");
                    ties = ties.join(&mu.apply_perm(&prefix_perm));
                }
                l => {
                    prefix_perm = prefix_perm.compose(&l.perm(n));
                    word.push(l);
                }
            }
        }
        Ok(TiedSingularBraid { n, ties, word })
    }

    /// Assemble from parts already in normal form.
    pub fn from_parts(ties: SetPartition, word: Vec<Letter>) -> Self {
        let n = ties.n();
        for letter in &word {
            let i = letter.index();
            assert!(i >= 1 && i < n, "letter index out of range");
            assert!(!matches!(letter, Letter::Eta(_)), "word must be tie-free");
        }
        TiedSingularBraid { n, ties, word }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ties(&self) -> &SetPartition {
        &self.ties
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    /// Number of singular letters.
    pub fn singularity_count(&self) -> usize {
        self.word
            .iter()
            .filter(|l| matches!(l, Letter::Tau(_)))
            .count()
    }

    /// Sum of crossing signs; singular letters count zero.
    pub fn exponent(&self) -> i64 {
        self.word
            .iter()
            .map(|l| match l {
                Letter::Sigma(_) => 1,
                Letter::SigmaInv(_) => -1,
                Letter::Tau(_) => 0,
                Letter::Eta(_) => unreachable!(),
            })
            .sum()
    }

    /// The underlying permutation of the word.
    pub fn perm(&self) -> Perm {
        perm_of_word(&self.word, self.n)
    }

    /// Product `(I * pi_alpha(J), alpha beta)`.
    pub fn multiply(&self, rhs: &TiedSingularBraid) -> TiedSingularBraid {
        assert_eq!(self.n, rhs.n, "strand count mismatch");
        let ties = self.ties.join(&rhs.ties.apply_perm(&self.perm()));
        let mut word = self.word.clone();
        word.extend_from_slice(&rhs.word);
        TiedSingularBraid {
            n: self.n,
            ties,
            word,
        }
    }

    /// Component count and sc-partition of the closure.
    pub fn closure(&self) -> Closure {
        let cycles = SetPartition::from_cycles(&self.perm());
        let coarse = self.ties.join(&cycles);
        Closure {
            components: cycles.num_blocks(),
            sc_partition: coarse.quotient(&cycles),
        }
    }

    /// The tied braid whose closure carries the given component partition:
    /// ties are `K x J` where `K` groups strands by cycle.
    pub fn alexander_lift(
        n: usize,
        word: Vec<Letter>,
        grouping: &SetPartition,
    ) -> Result<Self, BraidError> {
        let cycles = SetPartition::from_cycles(&perm_of_word(&word, n));
        if cycles.num_blocks() != grouping.n() {
            return Err(BraidError::BlockCount {
                expected: grouping.n(),
                found: cycles.num_blocks(),
            });
        }
        Ok(TiedSingularBraid {
            n,
            ties: cycles.times(grouping),
            word,
        })
    }

    /// t-stabilization: adjoin the tie `{i, j}`; accepted only when `i` and
    /// `j` lie in the same cycle of the underlying permutation.
    pub fn move_m1(&self, i: usize, j: usize) -> Result<TiedSingularBraid, BraidError> {
        let mu =
            SetPartition::mu(i.min(j), i.max(j), self.n).map_err(|_| BraidError::IndexRange {
                index: i.max(j),
                n: self.n,
            })?;
        let cycles = SetPartition::from_cycles(&self.perm());
        if cycles.block_of(i) != cycles.block_of(j) {
            return Err(BraidError::MoveRejected { i, j });
        }
        Ok(self.multiply(&TiedSingularBraid::from_parts(mu, Vec::new())))
    }

    /// Commuting move on a word split: `(I, w1 w2) -> (1, w2)(I, w1)`.
    pub fn move_m2_split(&self, split: usize) -> TiedSingularBraid {
        let split = split.min(self.word.len());
        let left = TiedSingularBraid {
            n: self.n,
            ties: self.ties.clone(),
            word: self.word[..split].to_vec(),
        };
        let right = TiedSingularBraid {
            n: self.n,
            ties: SetPartition::singletons(self.n),
            word: self.word[split..].to_vec(),
        };
        right.multiply(&left)
    }

    /// Stabilization: append `sigma_n^{±1}` on `n + 1` strands.
    pub fn move_m3(&self, positive: bool) -> TiedSingularBraid {
        let n = self.n + 1;
        let mut word = self.word.clone();
        word.push(if positive {
            Letter::Sigma(self.n)
        } else {
            Letter::SigmaInv(self.n)
        });
        TiedSingularBraid {
            n,
            ties: self.ties.embed(),
            word,
        }
    }

    /// Side-by-side sum; the right operand's strands are shifted up.
    pub fn disjoint_sum(&self, rhs: &TiedSingularBraid) -> TiedSingularBraid {
        let shift = self.n;
        let mut word = self.word.clone();
        word.extend(rhs.word.iter().map(|l| l.shifted(shift)));
        TiedSingularBraid {
            n: self.n + rhs.n,
            ties: self.ties.disjoint_sum(&rhs.ties),
            word,
        }
    }

    /// Render in the braid-word file syntax; parses back to an equal braid.
    pub fn render(&self) -> String {
        let mut out = format!("n={}", self.n);
        if !self.ties.is_singletons() {
            out.push_str(&format!(" ties={}", self.ties));
        }
        for letter in &self.word {
            out.push(' ');
            out.push_str(&letter.to_string());
        }
        out
    }
}

impl fmt::Display for TiedSingularBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// The ordered pair `(p q, q p)` for commuting-invariance harnesses.
pub fn commute_pair(
    p: &TiedSingularBraid,
    q: &TiedSingularBraid,
) -> (TiedSingularBraid, TiedSingularBraid) {
    (p.multiply(q), q.multiply(p))
}

/// Two-knot construction: given knot braids `a` (on `p` strands) and `b`,
/// returns `(S, S')` over the joint strands where `S` appends a singular
/// and a negative crossing joining the two summands (two components, one
/// singularity) and `S'` appends only the singular crossing (one component).
pub fn build_singular_pair(
    a: &TiedSingularBraid,
    b: &TiedSingularBraid,
) -> Result<(TiedSingularBraid, TiedSingularBraid), BraidError> {
    for knot in [a, b] {
        let comps = knot.closure().components;
        if comps != 1 {
            return Err(BraidError::NotAKnot(comps));
        }
    }
    let p = a.n();
    let joined = a.disjoint_sum(b);
    let mut s_prime = joined.clone();
    s_prime.word.push(Letter::Tau(p));
    let mut s = s_prime.clone();
    s.word.push(Letter::SigmaInv(p));
    Ok((s, s_prime))
}

// ---------------------------------------------------------------------------
// Braid word text format
// ---------------------------------------------------------------------------

/// Parse the braid-word syntax: header `n=<strands>`, optional
/// `ties={...}`, then whitespace-separated letters `s<i>`, `s<i>'`,
/// `t<i>`, `e<i>`.
pub fn parse_braid(text: &str) -> Result<TiedSingularBraid, BraidError> {
    let mut tokens = Tokenizer::new(text);
    let (first, line, col) = match tokens.next_token() {
        Some(t) => t,
        None => {
            return Err(BraidError::Parse {
                line: 1,
                col: 1,
                msg: "empty input".to_string(),
            })
        }
    };
    let n: usize = first
        .strip_prefix("n=")
        .and_then(|v| v.parse().ok())
        .filter(|&v| v >= 1)
        .ok_or(BraidError::Parse {
            line,
            col,
            msg: format!("expected header 'n=<strands>', found '{}'", first),
        })?;
    let mut ties = SetPartition::singletons(n);
    let mut letters = Vec::new();
    let mut saw_letter = false;
    while let Some((token, line, col)) = tokens.next_token() {
        let err = |msg: String| BraidError::Parse { line, col, msg };
        if let Some(rest) = token.strip_prefix("ties=") {
            if saw_letter {
                return Err(err("ties clause must precede the word".to_string()));
            }
            let parsed =
                parse_partition(rest, n).map_err(|e| err(format!("bad ties clause: {}", e)))?;
            ties = ties.join(&parsed);
            continue;
        }
        if token.len() < 2 {
            return Err(err(format!("unknown token '{}'", token)));
        }
        let (kind, body) = token.split_at(1);
        let (digits, primed) = match body.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (body, false),
        };
        let index: usize = digits
            .parse()
            .map_err(|_| err(format!("unknown token '{}'", token)))?;
        if index < 1 || index >= n {
            return Err(err(format!("index {} out of range for n = {}", index, n)));
        }
        let letter = match (kind, primed) {
            ("s", false) => Letter::Sigma(index),
            ("s", true) => Letter::SigmaInv(index),
            ("t", false) => Letter::Tau(index),
            ("e", false) => Letter::Eta(index),
            _ => return Err(err(format!("unknown token '{}'", token))),
        };
        letters.push(letter);
        saw_letter = true;
    }
    let normalized = TiedSingularBraid::normalize(n, &letters).expect("indices checked");
    Ok(TiedSingularBraid::from_parts(
        ties.join(normalized.ties()),
        normalized.word().to_vec(),
    ))
}

struct Tokenizer<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Tokenizer<'a> {
    fn new(src: &'a str) -> Self {
        Tokenizer {
            chars: src.chars().collect(),
            pos: 0,
            src,
        }
    }

    fn location(&self, at: usize) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for ch in self.src.chars().take(at) {
            if ch == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    /// Whitespace-separated tokens, except that a `{...}` group (as in
    /// `ties={1 2 | 3}`) is kept together.
    fn next_token(&mut self) -> Option<(String, usize, usize)> {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.chars.len() {
            return None;
        }
        let start = self.pos;
        let mut token = String::new();
        let mut in_braces = false;
        while self.pos < self.chars.len() {
            let c = self.chars[self.pos];
            if c == '{' {
                in_braces = true;
            } else if c == '}' {
                in_braces = false;
            } else if c.is_whitespace() && !in_braces {
                break;
            }
            token.push(c);
            self.pos += 1;
        }
        let (line, col) = self.location(start);
        Some((token, line, col))
    }
}

// ---------------------------------------------------------------------------
// Random generation for harnesses
// ---------------------------------------------------------------------------

/// Options for random braid generation.
#[derive(Debug, Clone, Copy)]
pub struct RandomBraidSpec {
    pub n: usize,
    pub len: usize,
    pub allow_tau: bool,
    pub allow_ties: bool,
}

pub fn random_braid(spec: RandomBraidSpec, rng: &mut impl Rng) -> TiedSingularBraid {
    let RandomBraidSpec {
        n,
        len,
        allow_tau,
        allow_ties,
    } = spec;
    assert!(n >= 1);
    let mut letters = Vec::with_capacity(len);
    if n >= 2 {
        for _ in 0..len {
            let i = rng.gen_range(1..n);
            let choice = rng.gen_range(0..if allow_tau { 3 } else { 2 });
            letters.push(match choice {
                0 => Letter::Sigma(i),
                1 => Letter::SigmaInv(i),
                _ => Letter::Tau(i),
            });
        }
    }
    let ties = if allow_ties {
        SetPartition::random(n, rng)
    } else {
        SetPartition::singletons(n)
    };
    let base = TiedSingularBraid::normalize(n, &letters).expect("valid letters");
    TiedSingularBraid::from_parts(ties.join(base.ties()), base.word().to_vec())
}

/// Random braid with exactly `m` singular letters among `len` total.
pub fn random_singular_braid(
    n: usize,
    len: usize,
    m: usize,
    rng: &mut impl Rng,
) -> TiedSingularBraid {
    assert!(n >= 2 && len >= m);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    for k in 0..len {
        let i = rng.gen_range(1..n);
        if k < m {
            letters.push(Letter::Tau(i));
        } else if rng.gen_bool(0.5) {
            letters.push(Letter::Sigma(i));
        } else {
            letters.push(Letter::SigmaInv(i));
        }
    }
    // Shuffle so the taus land anywhere.
    for i in (1..letters.len()).rev() {
        let j = rng.gen_range(0..=i);
        letters.swap(i, j);
    }
    TiedSingularBraid::normalize(n, &letters).expect("valid letters")
}
