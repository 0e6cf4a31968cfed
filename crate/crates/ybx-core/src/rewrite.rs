//! Binomial rewriting in the free algebra.
//!
//! Every ideal handled here is generated by differences of equal-length
//! words with coefficient 1, and orbit-equality keeps completion inside
//! that class, so the engine works on monomial pairs instead of general
//! noncommutative polynomials. Rules are oriented deg-lex (larger word on
//! the left) and completion resolves overlap ambiguities degree by degree
//! up to a caller-chosen bound.

use std::collections::VecDeque;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::solution::{Letter, Solution};
use crate::word::{normal_monomials, GuardExceeded, Limits, Word};

/// An oriented binomial `lhs - rhs` with `|lhs| = |rhs|` and `lhs > rhs`
/// in deg-lex; `lhs` is the leading monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BinomialRelation {
    lhs: Word,
    rhs: Word,
}

impl BinomialRelation {
    /// Orients a pair of orbit-equal words, dropping the degenerate case
    /// `a = b` (fixed points contribute no relation).
    pub fn oriented(a: Word, b: Word) -> Option<Self> {
        debug_assert_eq!(a.len(), b.len(), "binomials are length-homogeneous");
        match a.cmp(&b) {
            std::cmp::Ordering::Greater => Some(BinomialRelation { lhs: a, rhs: b }),
            std::cmp::Ordering::Less => Some(BinomialRelation { lhs: b, rhs: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &Word {
        &self.rhs
    }

    pub fn degree(&self) -> usize {
        self.lhs.len()
    }

    /// Renders as a difference, e.g. `x3*x2 - x1*x3`.
    pub fn render(&self, symbol: &str) -> String {
        format!("{} - {}", self.lhs.render(symbol), self.rhs.render(symbol))
    }
}

impl fmt::Display for BinomialRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs.render("x"), self.rhs.render("x"))
    }
}

/// The defining relations of the quadratic algebra of `(X, r)`: one
/// oriented binomial `xy - (ˣy)(xʸ)` per two-element `r`-orbit, sorted by
/// leading word. A solution of order `n` yields exactly `C(n, 2)` of them.
pub fn relations_from_solution(s: &Solution) -> Vec<BinomialRelation> {
    let n = s.order() as Letter;
    let mut out = Vec::new();
    for x in 1..=n {
        for y in 1..=n {
            let (u, v) = s.r(x, y);
            if (u, v) != (x, y) {
                let lhs = Word::new(vec![x, y]);
                let rhs = Word::new(vec![u, v]);
                // keep each orbit once, from its larger side
                if lhs > rhs {
                    out.push(BinomialRelation { lhs, rhs });
                }
            }
        }
    }
    out.sort();
    out
}

/// Rewrites `w` to normal form: repeatedly replaces the leftmost
/// occurrence of any rule's leading word (lowest rule index on position
/// ties). Terminates because every step strictly decreases the word in
/// deg-lex at fixed length.
pub fn reduce_with(rules: &[BinomialRelation], w: &Word) -> Word {
    let mut current = w.letters().to_vec();
    'scan: loop {
        for pos in 0..current.len() {
            for rule in rules {
                let pat = rule.lhs.letters();
                if pos + pat.len() <= current.len() && &current[pos..pos + pat.len()] == pat {
                    current.splice(pos..pos + pat.len(), rule.rhs.letters().iter().copied());
                    continue 'scan;
                }
            }
        }
        break;
    }
    Word::new(current)
}

fn contains_subword(haystack: &[Letter], needle: &[Letter]) -> bool {
    needle.len() <= haystack.len()
        && haystack
            .windows(needle.len())
            .any(|window| window == needle)
}

/// Inter-reduction with collapse: consumes equations, keeps the rule set
/// an antichain of leading words with fully reduced right-hand sides.
fn inter_reduce(equations: Vec<(Word, Word)>) -> Vec<BinomialRelation> {
    let mut rules: Vec<BinomialRelation> = Vec::new();
    let mut queue: VecDeque<(Word, Word)> = equations.into();
    while let Some((a, b)) = queue.pop_front() {
        let a = reduce_with(&rules, &a);
        let b = reduce_with(&rules, &b);
        let Some(new_rule) = BinomialRelation::oriented(a, b) else {
            continue;
        };
        // collapse rules whose lhs the new rule now reduces
        let mut kept = Vec::with_capacity(rules.len() + 1);
        for rule in rules {
            if contains_subword(rule.lhs.letters(), new_rule.lhs.letters()) {
                queue.push_back((rule.lhs, rule.rhs));
            } else {
                kept.push(rule);
            }
        }
        kept.push(new_rule);
        rules = kept;
    }
    // right-hand sides normalized against the final leading-word set
    let snapshot = rules.clone();
    for rule in &mut rules {
        rule.rhs = reduce_with(&snapshot, &rule.rhs);
    }
    rules.sort();
    rules
}

/// A rewrite system with its completion state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewriteSystem {
    pub rules: Vec<BinomialRelation>,
    /// The degree bound completion ran with.
    pub max_degree: usize,
    /// All overlap ambiguities of degree `<= complete_up_to` resolve.
    pub complete_up_to: usize,
    /// Leading words form an antichain and right-hand sides are normal.
    pub reduced: bool,
    /// True when every overlap of the final rules has degree within the
    /// bound, so the system is a full Groebner basis rather than a
    /// degree-truncated one.
    pub confluent: bool,
}

impl RewriteSystem {
    pub fn reduce(&self, w: &Word) -> Word {
        reduce_with(&self.rules, w)
    }

    /// Largest rule degree present.
    pub fn max_rule_degree(&self) -> usize {
        self.rules.iter().map(|r| r.degree()).max().unwrap_or(0)
    }
}

/// Diamond-lemma completion, degree by degree through `max_degree`.
///
/// Every unresolved overlap contributes the difference of its two
/// reductions as a new oriented binomial; the working set is kept
/// inter-reduced throughout. The result distinguishes full confluence
/// (no overlap of the final rules exceeds the bound) from degree-bound
/// exhaustion.
pub fn complete(input: Vec<BinomialRelation>, max_degree: usize) -> RewriteSystem {
    let mut rules = inter_reduce(
        input
            .into_iter()
            .map(|r| (r.lhs, r.rhs))
            .collect(),
    );
    loop {
        let mut added = false;
        for degree in 3..=max_degree {
            loop {
                let unresolved = unresolved_overlaps(&rules, Some(degree));
                if unresolved.is_empty() {
                    break;
                }
                added = true;
                let mut equations: Vec<(Word, Word)> = rules
                    .iter()
                    .map(|r| (r.lhs.clone(), r.rhs.clone()))
                    .collect();
                equations.extend(unresolved);
                rules = inter_reduce(equations);
            }
        }
        if !added {
            break;
        }
    }
    // Confluent iff no overlap of the final rules reaches past the bound
    // (everything within the bound resolved above).
    let confluent = rules
        .iter()
        .all(|u| rules.iter().all(|v| max_overlap_degree(u, v) <= max_degree));
    RewriteSystem {
        rules,
        max_degree,
        complete_up_to: max_degree,
        reduced: true,
        confluent,
    }
}

/// Differences of the two reductions of each unresolved overlap; when
/// `degree` is set, only ambiguity words of exactly that length count.
fn unresolved_overlaps(
    rules: &[BinomialRelation],
    degree: Option<usize>,
) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for u in rules {
        for v in rules {
            for k in 1..u.degree().min(v.degree()) {
                let ul = u.lhs.letters();
                let vl = v.lhs.letters();
                if ul[ul.len() - k..] != vl[..k] {
                    continue;
                }
                let total = u.degree() + v.degree() - k;
                if degree.is_some_and(|d| total != d) {
                    continue;
                }
                let mut left = u.rhs.letters().to_vec();
                left.extend_from_slice(&vl[k..]);
                let mut right = ul[..ul.len() - k].to_vec();
                right.extend_from_slice(v.rhs.letters());
                let left = reduce_with(rules, &Word::new(left));
                let right = reduce_with(rules, &Word::new(right));
                if left != right {
                    out.push((left, right));
                }
            }
        }
    }
    out
}

fn max_overlap_degree(u: &BinomialRelation, v: &BinomialRelation) -> usize {
    let (ul, vl) = (u.lhs.letters(), v.lhs.letters());
    (1..ul.len().min(vl.len()))
        .filter(|&k| ul[ul.len() - k..] == vl[..k])
        .map(|k| ul.len() + vl.len() - k)
        .max()
        .unwrap_or(0)
}

/// True when the defining relations are already a Groebner basis under the
/// given enumeration: completion through `max_check_degree` (degree 3
/// suffices for quadratic inputs) adds no higher-degree rule.
pub fn is_pbw(s: &Solution, max_check_degree: usize) -> bool {
    let system = complete(relations_from_solution(s), max_check_degree.max(3));
    system.rules.iter().all(|r| r.degree() == 2)
}

/// Shape test for a skew polynomial ring with binomial relations:
/// exactly `C(n,2)` relations `x_j x_i -> x_{i'} x_{j'}` with `j > i`,
/// `j > i'`, `i' < j'`, every ordered pair `x_i x_j` (`i < j`) occurring
/// as a right-hand side, and the relations a quadratic Groebner basis.
pub fn is_binomial_skew_polynomial(s: &Solution) -> bool {
    let n = s.order();
    let relations = relations_from_solution(s);
    if relations.len() != n * (n - 1) / 2 {
        return false;
    }
    let mut lhs_pairs = Vec::new();
    let mut rhs_pairs = Vec::new();
    for rel in &relations {
        let (j, i) = (rel.lhs.letters()[0], rel.lhs.letters()[1]);
        let (ip, jp) = (rel.rhs.letters()[0], rel.rhs.letters()[1]);
        if j <= i || j <= ip || ip >= jp {
            return false;
        }
        lhs_pairs.push((j, i));
        rhs_pairs.push((ip, jp));
    }
    let expected: Vec<(Letter, Letter)> = (1..=n as Letter).tuple_combinations().collect();
    lhs_pairs.sort();
    rhs_pairs.sort();
    let expected_lhs: Vec<(Letter, Letter)> =
        expected.iter().map(|&(i, j)| (j, i)).sorted().collect();
    if lhs_pairs != expected_lhs || rhs_pairs != expected {
        return false;
    }
    is_pbw(s, 3)
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("order {n} exceeds the enumeration-search bound {bound} (n! relabelings)")]
pub struct SearchBoundExceeded {
    pub n: usize,
    pub bound: usize,
}

/// Searches the `n!` relabelings of the generators for one under which
/// the defining relations form a quadratic Groebner basis. Returns the
/// first such permutation in lex order (identity first), if any.
pub fn pbw_enumeration_search(
    s: &Solution,
    max_order: usize,
) -> Result<Option<Vec<Letter>>, SearchBoundExceeded> {
    let n = s.order();
    if n > max_order {
        return Err(SearchBoundExceeded { n, bound: max_order });
    }
    for sigma in (1..=n as Letter).permutations(n) {
        let relabeled = s.relabel(&sigma).expect("permutation by construction");
        if is_pbw(&relabeled, 3) {
            return Ok(Some(sigma));
        }
    }
    Ok(None)
}

/// Flags for the Noetherian/square-free/skew equivalence on algebras whose
/// normal basis is the set of ordered monomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderedBasisGateReport {
    /// The ordered monomials coincide with the normal monomials through
    /// degree 3; the equivalence is only asserted when this holds.
    pub applicable: bool,
    pub is_pbw: bool,
    pub square_free: bool,
    pub is_binomial_skew: bool,
    /// Vacuously true when not applicable; otherwise requires PBW and
    /// `square_free == is_binomial_skew`.
    pub consistent: bool,
}

/// Ordered monomials (weakly increasing words) of length `m`, ascending.
pub fn ordered_monomials(n: usize, m: usize) -> Vec<Word> {
    if m == 0 {
        return vec![Word::empty()];
    }
    let mut out = Vec::new();
    let mut stack: Vec<Vec<Letter>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == m {
            out.push(Word::new(prefix));
            continue;
        }
        let start = prefix.last().copied().unwrap_or(1);
        // push descending so the stack pops ascending
        for l in (start..=n as Letter).rev() {
            let mut next = prefix.clone();
            next.push(l);
            stack.push(next);
        }
    }
    out
}

pub fn ordered_basis_gate(s: &Solution, limits: Limits) -> Result<OrderedBasisGateReport, GuardExceeded> {
    let n = s.order();
    let mut applicable = true;
    for m in 1..=3 {
        if normal_monomials(s, m, limits)? != ordered_monomials(n, m) {
            applicable = false;
            break;
        }
    }
    let pbw = is_pbw(s, 3);
    let square_free = s.validate().square_free;
    let skew = is_binomial_skew_polynomial(s);
    let consistent = !applicable || (pbw && (square_free == skew));
    Ok(OrderedBasisGateReport {
        applicable,
        is_pbw: pbw,
        square_free,
        is_binomial_skew: skew,
        consistent,
    })
}
