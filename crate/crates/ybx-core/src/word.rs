//! Words over the generators and the orbit machinery of the monoid
//! associated with a quadratic set.
//!
//! Two length-`m` words are equal in the monoid exactly when one can be
//! reached from the other by applying `r` at adjacent positions, i.e. when
//! they lie in the same orbit of the group generated by the maps
//! `r^{i,i+1}` on `X^m`. The deg-lex minimum of the orbit is the normal
//! form, and the set of orbit minima of length `m` is the normal monomial
//! basis of the degree-`m` component of the algebra.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::par;
use crate::solution::{Letter, Solution};

/// A word in the free monoid over the generators; the empty word is the
/// unit. Letters are 1-based generator indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| l > 0), "letters are 1-based");
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Renders with an arbitrary generator name, e.g. `x3*x1` or `y2*y3`.
    pub fn render(&self, symbol: &str) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|l| format!("{symbol}{l}"))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word::new(letters)
    }
}

/// Degree-lexicographic order: shorter words first, ties broken
/// lexicographically by letter index.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

/// Size guards for the orbit sweeps. Orbits of length-`m` words can grow
/// combinatorially, so the breadth-first searches and the degree-`m`
/// enumerations fail loudly instead of exhausting memory.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Maximum number of distinct words an orbit search or a degree
    /// enumeration may touch.
    pub max_orbit_words: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_orbit_words: 1_000_000,
        }
    }
}

impl Limits {
    pub fn new(max_orbit_words: usize) -> Self {
        Limits { max_orbit_words }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("orbit guard exceeded: needed more than {limit} words")]
pub struct GuardExceeded {
    pub limit: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("position {pos} out of range 1..{max} for applying r")]
pub struct PositionOutOfRange {
    pub pos: usize,
    pub max: usize,
}

/// The full orbit of a word under the position-wise maps `r^{i,i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    /// The word the search started from.
    pub representative: Word,
    /// Every word in the orbit, sorted deg-lex ascending.
    pub members: Vec<Word>,
    /// `members[0]`: the deg-lex minimum, i.e. the normal form.
    pub min_element: Word,
}

/// Applies `r` to the letters at positions `pos`, `pos+1` (1-based).
pub fn apply_r_at(s: &Solution, w: &Word, pos: usize) -> Result<Word, PositionOutOfRange> {
    if pos == 0 || pos >= w.len() {
        return Err(PositionOutOfRange {
            pos,
            max: w.len(),
        });
    }
    let mut letters = w.letters().to_vec();
    let (a, b) = s.r(letters[pos - 1], letters[pos]);
    letters[pos - 1] = a;
    letters[pos] = b;
    Ok(Word::new(letters))
}

/// Breadth-first closure of `{w}` under all `r^{i,i+1}`.
pub fn orbit(s: &Solution, w: &Word, limits: Limits) -> Result<OrbitReport, GuardExceeded> {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(current) = queue.pop_front() {
        for pos in 1..current.len() {
            let next = apply_r_at(s, &current, pos).expect("position in range");
            if !seen.contains(&next) {
                if seen.len() >= limits.max_orbit_words {
                    return Err(GuardExceeded {
                        limit: limits.max_orbit_words,
                    });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut members: Vec<Word> = seen.into_iter().collect();
    members.sort();
    Ok(OrbitReport {
        representative: w.clone(),
        min_element: members[0].clone(),
        members,
    })
}

/// Deg-lex minimum of the orbit of `w`: the normal form of `w` in the
/// monoid. Idempotent and length-preserving.
pub fn normal_form(s: &Solution, w: &Word, limits: Limits) -> Result<Word, GuardExceeded> {
    // BFS tracking only the minimum; members are not materialized as a
    // sorted list, but the visited set still obeys the guard.
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    let mut min = w.clone();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(current) = queue.pop_front() {
        for pos in 1..current.len() {
            let next = apply_r_at(s, &current, pos).expect("position in range");
            if !seen.contains(&next) {
                if seen.len() >= limits.max_orbit_words {
                    return Err(GuardExceeded {
                        limit: limits.max_orbit_words,
                    });
                }
                if next < min {
                    min = next.clone();
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(min)
}

/// True when `w` is the minimum of its own orbit.
pub fn is_normal(s: &Solution, w: &Word, limits: Limits) -> Result<bool, GuardExceeded> {
    Ok(normal_form(s, w, limits)? == *w)
}

/// All normal monomials of length `m`, sorted deg-lex ascending.
///
/// Enumerates the `n^m` words once and buckets them into orbits by
/// union-find on the `r^{i,i+1}` edges; the minimum index of each class is
/// its normal form because the enumeration order is lexicographic.
pub fn normal_monomials(
    s: &Solution,
    m: usize,
    limits: Limits,
) -> Result<Vec<Word>, GuardExceeded> {
    if m == 0 {
        return Ok(vec![Word::empty()]);
    }
    Ok(NormalFormTable::build(s, m, limits)?.minima())
}

fn decode(mut idx: usize, n: usize, m: usize) -> Vec<Letter> {
    let mut letters = vec![0 as Letter; m];
    for k in (0..m).rev() {
        letters[k] = (idx % n + 1) as Letter;
        idx /= n;
    }
    letters
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(len: usize) -> Self {
        DisjointSets {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Smaller index wins so roots track class minima cheaply.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Left action of a single letter on a word:
/// `ᶜ(b₁…b_q) = (ᶜb₁)(^(c^{b₁})b₂)…`, carrying `c` through by the right
/// action of the prefix already consumed.
fn left_act_letter(s: &Solution, c: Letter, b: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(b.len());
    let mut carrier = c;
    for &t in b {
        out.push(s.left_act(carrier, t));
        carrier = s.right_act(carrier, t);
    }
    out
}

/// Right action of a single letter on a word, processed from the right:
/// `(a₁…a_p)ᶜ = (a₁…a_{p-1})^(^{a_p}c) · (a_pᶜ)`.
fn right_act_letter(s: &Solution, a: &[Letter], c: Letter) -> Vec<Letter> {
    let mut out = vec![0 as Letter; a.len()];
    let mut carrier = c;
    for (k, &t) in a.iter().enumerate().rev() {
        out[k] = s.right_act(t, carrier);
        carrier = s.left_act(t, carrier);
    }
    out
}

/// `ᵃb`, the left action of the braided monoid extended to words.
/// Length-preserving: `|ᵃb| = |b|`.
pub fn left_action_word(s: &Solution, a: &Word, b: &Word) -> Word {
    let mut current = b.letters().to_vec();
    for &c in a.letters().iter().rev() {
        current = left_act_letter(s, c, &current);
    }
    Word::new(current)
}

/// `aᵇ`, the right action extended to words. `|aᵇ| = |a|`.
pub fn right_action_word(s: &Solution, a: &Word, b: &Word) -> Word {
    let mut current = a.letters().to_vec();
    for &c in b.letters() {
        current = right_act_letter(s, &current, c);
    }
    Word::new(current)
}

/// The matched-pair identity `(ᵃb)(aᵇ) = ab`, checked as equality of
/// normal forms in the monoid.
pub fn check_m3(s: &Solution, a: &Word, b: &Word, limits: Limits) -> Result<bool, GuardExceeded> {
    let lhs = left_action_word(s, a, b).concat(&right_action_word(s, a, b));
    let rhs = a.concat(b);
    Ok(normal_form(s, &lhs, limits)? == normal_form(s, &rhs, limits)?)
}

/// Normal-form lookup for a fixed length, backed by one orbit bucketing
/// of all `n^m` words. Used wherever many same-length words must be
/// normalized against the same solution (the Veronese sweeps).
pub(crate) struct NormalFormTable {
    n: usize,
    m: usize,
    /// `class_min[idx]` = index of the deg-lex minimum of the orbit of the
    /// word encoded by `idx`.
    class_min: Vec<usize>,
}

impl NormalFormTable {
    pub(crate) fn build(s: &Solution, m: usize, limits: Limits) -> Result<Self, GuardExceeded> {
        let n = s.order();
        assert!(m > 0, "length-0 table has a single empty word");
        let total = n
            .checked_pow(m as u32)
            .filter(|&t| t <= limits.max_orbit_words)
            .ok_or(GuardExceeded {
                limit: limits.max_orbit_words,
            })?;
        // weight of the letter at 0-based position k
        let powers: Vec<isize> = (0..m).map(|k| n.pow((m - 1 - k) as u32) as isize).collect();
        // one r^{i,i+1} neighbor per interior position, independent per word
        let edges: Vec<Vec<usize>> = par::map_indices(total, |idx| {
            let letters = decode(idx, n, m);
            (1..m)
                .map(|pos| {
                    let (a, b) = s.r(letters[pos - 1], letters[pos]);
                    let delta = (a as isize - letters[pos - 1] as isize) * powers[pos - 1]
                        + (b as isize - letters[pos] as isize) * powers[pos];
                    (idx as isize + delta) as usize
                })
                .collect()
        });
        let mut dsu = DisjointSets::new(total);
        for (idx, nbrs) in edges.iter().enumerate() {
            for &nbr in nbrs {
                dsu.union(idx, nbr);
            }
        }
        let mut root_min = vec![usize::MAX; total];
        for idx in 0..total {
            let root = dsu.find(idx);
            if root_min[root] == usize::MAX {
                // first visit in ascending index order = lex minimum
                root_min[root] = idx;
            }
        }
        let class_min: Vec<usize> = (0..total).map(|idx| root_min[dsu.find(idx)]).collect();
        Ok(NormalFormTable { n, m, class_min })
    }

    pub(crate) fn normalize(&self, w: &Word) -> Word {
        debug_assert_eq!(w.len(), self.m);
        let idx = w
            .letters()
            .iter()
            .fold(0usize, |acc, &l| acc * self.n + (l as usize - 1));
        Word::new(decode(self.class_min[idx], self.n, self.m))
    }

    /// The normal monomials of length `m`, ascending.
    pub(crate) fn minima(&self) -> Vec<Word> {
        self.class_min
            .iter()
            .enumerate()
            .filter(|&(idx, &min)| idx == min)
            .map(|(idx, _)| Word::new(decode(idx, self.n, self.m)))
            .collect()
    }
}
