//! The normalized d-Veronese solution and the quadratic presentation of
//! the d-Veronese subalgebra.
//!
//! For a solution `(X, r)` of order `n` and `d >= 1`, the normal monomials
//! of length `d` carry an induced solution: `ρ(a, b)` normalizes the
//! extended left and right actions of the braided monoid. The index pairs
//! of `{1..N}²` split into the leading set `H` (nontrivial orbits seen
//! from their larger side) and its complement `P`, and `P` further splits
//! by whether the concatenation `w_i w_j` is already normal (`C`) or not
//! (`MV`). `H` indexes the orbit relations `R_a`, `MV` indexes the
//! normalization relations `R_b`, and `R_b` transported to abstract
//! letters generates the kernel of the Veronese map.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::par;
use crate::solution::{Letter, Solution, SolutionError};
use crate::word::{
    left_action_word, normal_monomials, right_action_word, GuardExceeded, Limits,
    NormalFormTable, Word,
};

#[derive(Debug, Error)]
pub enum VeroneseError {
    #[error(transparent)]
    Guard(#[from] GuardExceeded),
    #[error("input is not a solution (involutive={involutive}, nondegenerate={nondegenerate}, braided={braided})")]
    NotASolution {
        involutive: bool,
        nondegenerate: bool,
        braided: bool,
    },
    #[error("veronese degree must be at least {min}, got {got}")]
    BadDegree { got: usize, min: usize },
    #[error(transparent)]
    Solution(#[from] SolutionError),
}

/// `C(n, k)` with the usual conventions.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The normalized d-Veronese solution of a solution `(X, r)`, with the
/// index-pair partition used by the presentation.
#[derive(Debug, Clone)]
pub struct VeroneseData {
    n: usize,
    d: usize,
    /// Normal monomials of length `d`, ascending; `basis[i-1]` is `w_i`.
    basis: Vec<Word>,
    /// Normal monomials of length `2d`, ascending.
    basis_2d: Vec<Word>,
    /// `rho[(i-1)*N + (j-1)] = ρ(w_i, w_j)` as 1-based basis indices.
    rho: Vec<(usize, usize)>,
    h_set: Vec<(usize, usize)>,
    p_set: Vec<(usize, usize)>,
    c_set: Vec<(usize, usize)>,
    mv_set: Vec<(usize, usize)>,
}

impl VeroneseData {
    pub fn input_order(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// `N`, the number of degree-`d` normal monomials.
    pub fn order(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn basis_2d(&self) -> &[Word] {
        &self.basis_2d
    }

    /// `ρ(w_i, w_j)`, 1-based.
    pub fn rho(&self, i: usize, j: usize) -> (usize, usize) {
        self.rho[(i - 1) * self.order() + (j - 1)]
    }

    pub fn h_set(&self) -> &[(usize, usize)] {
        &self.h_set
    }

    pub fn p_set(&self) -> &[(usize, usize)] {
        &self.p_set
    }

    pub fn c_set(&self) -> &[(usize, usize)] {
        &self.c_set
    }

    pub fn mv_set(&self) -> &[(usize, usize)] {
        &self.mv_set
    }

    /// Pairs `(i, j)` with `ρ(w_i, w_j) = (w_i, w_j)`, in lex order.
    pub fn fixed_points(&self) -> Vec<(usize, usize)> {
        let big_n = self.order();
        let mut out = Vec::new();
        for i in 1..=big_n {
            for j in 1..=big_n {
                if self.rho(i, j) == (i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `ρ` is trivial: `ρ(w_i, w_j) = (w_j, w_i)` everywhere.
    pub fn rho_is_trivial(&self) -> bool {
        let big_n = self.order();
        (1..=big_n).all(|i| (1..=big_n).all(|j| self.rho(i, j) == (j, i)))
    }

    /// The same solution on abstract letters `y_1..y_N`.
    pub fn abstract_solution(&self) -> Result<Solution, SolutionError> {
        let table: Vec<(Letter, Letter)> = self
            .rho
            .iter()
            .map(|&(a, b)| (a as Letter, b as Letter))
            .collect();
        Solution::new(self.order(), table)
    }

    /// Counted identities for the index sets against their closed forms.
    pub fn cardinality_report(&self) -> CardinalityReport {
        let (n, d, big_n) = (self.n, self.d, self.order());
        let expected_h = binomial(big_n, 2);
        let expected_p = binomial(big_n + 1, 2);
        let expected_c = binomial(n + 2 * d - 1, n - 1);
        let expected_mv = expected_p - expected_c;
        let expected_fixed = big_n;
        let fixed = self.fixed_points().len();
        let pass = self.h_set.len() == expected_h
            && self.p_set.len() == expected_p
            && self.c_set.len() == expected_c
            && self.mv_set.len() == expected_mv
            && fixed == expected_fixed
            && self.basis_2d.len() == expected_c;
        CardinalityReport {
            n,
            d,
            order: big_n,
            h: self.h_set.len(),
            expected_h,
            p: self.p_set.len(),
            expected_p,
            c: self.c_set.len(),
            expected_c,
            mv: self.mv_set.len(),
            expected_mv,
            fixed_points: fixed,
            expected_fixed_points: expected_fixed,
            pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CardinalityReport {
    pub n: usize,
    pub d: usize,
    /// `N = C(n+d-1, d)`.
    pub order: usize,
    pub h: usize,
    pub expected_h: usize,
    pub p: usize,
    pub expected_p: usize,
    pub c: usize,
    pub expected_c: usize,
    pub mv: usize,
    pub expected_mv: usize,
    pub fixed_points: usize,
    pub expected_fixed_points: usize,
    pub pass: bool,
}

fn ensure_solution(s: &Solution) -> Result<(), VeroneseError> {
    let report = s.validate();
    if report.is_solution {
        Ok(())
    } else {
        Err(VeroneseError::NotASolution {
            involutive: report.involutive,
            nondegenerate: report.nondegenerate,
            braided: report.braided,
        })
    }
}

/// Builds the normalized d-Veronese solution: basis, `ρ` table, and the
/// `H / P / C / MV` partition. Each `ρ` entry is cross-checked against the
/// orbit formulation: the concatenated image must normalize to the same
/// word as the concatenated input.
pub fn build_veronese(
    s: &Solution,
    d: usize,
    limits: Limits,
) -> Result<VeroneseData, VeroneseError> {
    if d < 1 {
        return Err(VeroneseError::BadDegree { got: d, min: 1 });
    }
    ensure_solution(s)?;
    let basis = normal_monomials(s, d, limits)?;
    let big_n = basis.len();
    let nf_d = NormalFormTable::build(s, d, limits)?;
    let nf_2d = NormalFormTable::build(s, 2 * d, limits)?;
    let index: HashMap<Word, usize> = basis
        .iter()
        .enumerate()
        .map(|(k, w)| (w.clone(), k + 1))
        .collect();

    let rho: Vec<(usize, usize)> = par::map_indices(big_n * big_n, |k| {
        let (a, b) = (&basis[k / big_n], &basis[k % big_n]);
        let lt = nf_d.normalize(&left_action_word(s, a, b));
        let rt = nf_d.normalize(&right_action_word(s, a, b));
        // matched-pair identity as a runtime assertion: the pair image
        // stays in the orbit of the concatenated input
        assert_eq!(
            nf_2d.normalize(&lt.concat(&rt)),
            nf_2d.normalize(&a.concat(b)),
            "rho image left its source orbit"
        );
        (index[&lt], index[&rt])
    });

    let basis_2d = nf_2d.minima();
    let normal_2d: HashMap<&Word, usize> = basis_2d
        .iter()
        .enumerate()
        .map(|(k, w)| (w, k + 1))
        .collect();

    let mut h_set = Vec::new();
    let mut p_set = Vec::new();
    let mut c_set = Vec::new();
    let mut mv_set = Vec::new();
    for i in 1..=big_n {
        for j in 1..=big_n {
            let (u, _) = rho[(i - 1) * big_n + (j - 1)];
            if u < i {
                h_set.push((i, j));
            } else {
                p_set.push((i, j));
                let concat = basis[i - 1].concat(&basis[j - 1]);
                if normal_2d.contains_key(&concat) {
                    c_set.push((i, j));
                } else {
                    mv_set.push((i, j));
                }
            }
        }
    }

    Ok(VeroneseData {
        n: s.order(),
        d,
        basis,
        basis_2d,
        rho,
        h_set,
        p_set,
        c_set,
        mv_set,
    })
}

/// One binomial over basis indices: `lhs - rhs` with each side a product
/// of two degree-`d` generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IndexBinomial {
    pub lhs: (usize, usize),
    pub rhs: (usize, usize),
}

impl IndexBinomial {
    /// Renders as e.g. `w6*w1 - w1*w6` or `y2*y3 - y1*y1`.
    pub fn render(&self, symbol: &str) -> String {
        format!(
            "{s}{}*{s}{} - {s}{}*{s}{}",
            self.lhs.0,
            self.lhs.1,
            self.rhs.0,
            self.rhs.1,
            s = symbol
        )
    }
}

/// The full quadratic presentation of the d-Veronese subalgebra, plus the
/// abstract-letter transports: the Yang-Baxter relations of `(Y, r_Y)` and
/// the kernel generators of the Veronese map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VeronesePresentation {
    pub d: usize,
    /// `generators[i-1]` is the word `w_i` behind the symbol `y_i`.
    pub generators: Vec<Word>,
    /// Orbit relations `w_j w_i - w_{i'} w_{j'}`, one per pair in `H`.
    pub r_a: Vec<IndexBinomial>,
    /// Normalization relations `w_i w_j - w_{i0} w_{j0}`, one per pair in `MV`.
    pub r_b: Vec<IndexBinomial>,
    /// The reduced variant of `R_a`: right-hand sides replaced by the
    /// normal form of the concatenation, so they land in `C`.
    pub r_1a: Vec<IndexBinomial>,
    /// `R_b` transported to the letters `y_i`: a minimal generating set of
    /// the kernel of the Veronese map.
    pub kernel_gens: Vec<IndexBinomial>,
    /// `R_a` transported to the letters `y_i`: the defining relations of
    /// the Yang-Baxter algebra of `(Y, r_Y)`.
    pub y_relations: Vec<IndexBinomial>,
}

impl VeronesePresentation {
    /// `R = R_a ∪ R_b`, the full defining set.
    pub fn all_relations(&self) -> Vec<IndexBinomial> {
        let mut out = self.r_a.clone();
        out.extend(self.r_b.iter().copied());
        out
    }

    /// `R_1 = R_1a ∪ R_b`, the reduced variant.
    pub fn reduced_relations(&self) -> Vec<IndexBinomial> {
        let mut out = self.r_1a.clone();
        out.extend(self.r_b.iter().copied());
        out
    }
}

/// Presentation of the d-Veronese subalgebra for `d >= 2`.
pub fn presentation(
    s: &Solution,
    d: usize,
    limits: Limits,
) -> Result<VeronesePresentation, VeroneseError> {
    if d < 2 {
        return Err(VeroneseError::BadDegree { got: d, min: 2 });
    }
    let data = build_veronese(s, d, limits)?;
    presentation_from_data(s, &data, limits)
}

/// Presentation assembled from an already-built [`VeroneseData`].
pub fn presentation_from_data(
    s: &Solution,
    data: &VeroneseData,
    limits: Limits,
) -> Result<VeronesePresentation, VeroneseError> {
    let nf_2d = NormalFormTable::build(s, 2 * data.d, limits)?;
    let index: HashMap<&Word, usize> = data
        .basis
        .iter()
        .enumerate()
        .map(|(k, w)| (w, k + 1))
        .collect();
    let factor = |w: &Word| -> (usize, usize) {
        let (head, tail) = w.letters().split_at(data.d);
        (
            index[&Word::new(head.to_vec())],
            index[&Word::new(tail.to_vec())],
        )
    };

    let r_a: Vec<IndexBinomial> = data
        .h_set
        .iter()
        .map(|&(j, i)| IndexBinomial {
            lhs: (j, i),
            rhs: data.rho(j, i),
        })
        .collect();
    let r_b: Vec<IndexBinomial> = data
        .mv_set
        .iter()
        .map(|&(i, j)| {
            let nf = nf_2d.normalize(&data.basis[i - 1].concat(&data.basis[j - 1]));
            IndexBinomial {
                lhs: (i, j),
                rhs: factor(&nf),
            }
        })
        .collect();
    let r_1a: Vec<IndexBinomial> = data
        .h_set
        .iter()
        .map(|&(j, i)| {
            let nf = nf_2d.normalize(&data.basis[j - 1].concat(&data.basis[i - 1]));
            IndexBinomial {
                lhs: (j, i),
                rhs: factor(&nf),
            }
        })
        .collect();

    Ok(VeronesePresentation {
        d: data.d,
        generators: data.basis.clone(),
        kernel_gens: r_b.clone(),
        y_relations: r_a.clone(),
        r_a,
        r_b,
        r_1a,
    })
}

/// The d-Veronese solution `(Y, r_Y)` as a plain [`Solution`] of order `N`.
pub fn abstract_veronese_solution(
    s: &Solution,
    d: usize,
    limits: Limits,
) -> Result<Solution, VeroneseError> {
    let data = build_veronese(s, d, limits)?;
    Ok(data.abstract_solution()?)
}

/// A relation or kernel image that failed to vanish, with both normal forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VanishingFailure {
    pub relation: IndexBinomial,
    pub lhs_normal_form: Word,
    pub rhs_normal_form: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VeroneseMapReport {
    pub relation_images_checked: usize,
    pub kernel_images_checked: usize,
    pub failures: Vec<VanishingFailure>,
    pub kernel_size: usize,
    pub expected_kernel_size: usize,
    pub pass: bool,
}

/// Soundness of the Veronese map: every relation of the abstract algebra
/// and every kernel generator must map to zero, i.e. both sides of each
/// binomial must share a normal form; the kernel size must match its
/// closed form.
pub fn verify_veronese_map(
    s: &Solution,
    d: usize,
    limits: Limits,
) -> Result<VeroneseMapReport, VeroneseError> {
    if d < 2 {
        return Err(VeroneseError::BadDegree { got: d, min: 2 });
    }
    let data = build_veronese(s, d, limits)?;
    let pres = presentation_from_data(s, &data, limits)?;
    let nf_2d = NormalFormTable::build(s, 2 * d, limits)?;
    let image_vanishes = |rel: &IndexBinomial| -> Option<VanishingFailure> {
        let lhs = nf_2d.normalize(&data.basis[rel.lhs.0 - 1].concat(&data.basis[rel.lhs.1 - 1]));
        let rhs = nf_2d.normalize(&data.basis[rel.rhs.0 - 1].concat(&data.basis[rel.rhs.1 - 1]));
        (lhs != rhs).then_some(VanishingFailure {
            relation: *rel,
            lhs_normal_form: lhs,
            rhs_normal_form: rhs,
        })
    };
    let mut failures: Vec<VanishingFailure> =
        pres.y_relations.iter().filter_map(image_vanishes).collect();
    failures.extend(pres.kernel_gens.iter().filter_map(image_vanishes));
    let n = s.order();
    let big_n = data.order();
    let expected_kernel_size = binomial(big_n + 1, 2) - binomial(n + 2 * d - 1, n - 1);
    let kernel_size = pres.kernel_gens.len();
    let pass = failures.is_empty() && kernel_size == expected_kernel_size;
    Ok(VeroneseMapReport {
        relation_images_checked: pres.y_relations.len(),
        kernel_images_checked: kernel_size,
        failures,
        kernel_size,
        expected_kernel_size,
        pass,
    })
}

/// Square-freeness of the d-Veronese solution of a square-free input.
/// For square-free solutions the d-Veronese is square-free exactly when
/// the input is trivial; the check reports whether that equivalence held.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SquareFreeVeroneseCheck {
    /// The input is not square-free, so the equivalence says nothing.
    NotApplicable,
    Checked {
        veronese_square_free: bool,
        input_trivial: bool,
        consistent_with_theorem: bool,
    },
}

impl SquareFreeVeroneseCheck {
    pub fn pass(&self) -> bool {
        match self {
            SquareFreeVeroneseCheck::NotApplicable => true,
            SquareFreeVeroneseCheck::Checked {
                consistent_with_theorem,
                ..
            } => *consistent_with_theorem,
        }
    }
}

pub fn dveronese_square_free_check(
    s: &Solution,
    d: usize,
    limits: Limits,
) -> Result<SquareFreeVeroneseCheck, VeroneseError> {
    ensure_solution(s)?;
    if !s.validate().square_free {
        return Ok(SquareFreeVeroneseCheck::NotApplicable);
    }
    let data = build_veronese(s, d, limits)?;
    let big_n = data.order();
    let veronese_square_free = (1..=big_n).all(|i| data.rho(i, i) == (i, i));
    let input_trivial = *s == Solution::trivial(s.order());
    Ok(SquareFreeVeroneseCheck::Checked {
        veronese_square_free,
        input_trivial,
        consistent_with_theorem: veronese_square_free == input_trivial,
    })
}

/// Behaviour of the d-Veronese of a permutation solution: `ρ` must be the
/// permutation solution of the normalized letterwise `f^d`, and trivial
/// whenever `ord(f)` divides `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PermutationVeroneseCheck {
    /// The input is not a permutation solution.
    NotApplicable,
    Checked {
        permutation_order: usize,
        rho_matches_induced_permutation: bool,
        order_divides_d: bool,
        rho_trivial: bool,
        pass: bool,
    },
}

impl PermutationVeroneseCheck {
    pub fn pass(&self) -> bool {
        match self {
            PermutationVeroneseCheck::NotApplicable => true,
            PermutationVeroneseCheck::Checked { pass, .. } => *pass,
        }
    }
}

pub fn permutation_veronese_check(
    s: &Solution,
    d: usize,
    limits: Limits,
) -> Result<PermutationVeroneseCheck, VeroneseError> {
    ensure_solution(s)?;
    let Some(f) = s.as_permutation() else {
        return Ok(PermutationVeroneseCheck::NotApplicable);
    };
    let data = build_veronese(s, d, limits)?;
    let nf_d = NormalFormTable::build(s, d, limits)?;
    let index: HashMap<&Word, usize> = data
        .basis
        .iter()
        .enumerate()
        .map(|(k, w)| (w, k + 1))
        .collect();

    let order = permutation_order(&f);
    // letterwise f^d and f^{-d}, normalized back into the basis
    let mut fd = vec![0 as Letter; f.len()];
    for x in 1..=f.len() {
        let mut image = x as Letter;
        for _ in 0..(d % order) {
            image = f[image as usize - 1];
        }
        fd[x - 1] = image;
    }
    let fd_inv = crate::solution::invert_permutation(&fd, f.len()).expect("power of permutation");
    let apply = |table: &[Letter], w: &Word| -> usize {
        let mapped = Word::new(w.letters().iter().map(|&l| table[l as usize - 1]).collect());
        index[&nf_d.normalize(&mapped)]
    };

    let big_n = data.order();
    let rho_matches = (1..=big_n).all(|i| {
        (1..=big_n).all(|j| {
            data.rho(i, j)
                == (
                    apply(&fd, &data.basis[j - 1]),
                    apply(&fd_inv, &data.basis[i - 1]),
                )
        })
    });
    let order_divides_d = d.is_multiple_of(order);
    let rho_trivial = data.rho_is_trivial();
    let pass = rho_matches && (!order_divides_d || rho_trivial);
    Ok(PermutationVeroneseCheck::Checked {
        permutation_order: order,
        rho_matches_induced_permutation: rho_matches,
        order_divides_d,
        rho_trivial,
        pass,
    })
}

fn permutation_order(f: &[Letter]) -> usize {
    let identity: Vec<Letter> = (1..=f.len() as Letter).collect();
    let mut order = 1usize;
    let mut current: Vec<Letter> = f.to_vec();
    while current != identity {
        current = current.iter().map(|&l| f[l as usize - 1]).collect();
        order += 1;
    }
    order
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertEntry {
    pub degree: usize,
    pub count: usize,
    pub expected: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertReport {
    pub entries: Vec<HilbertEntry>,
    pub pass: bool,
}

/// Dimension counts: `|N_m| = C(n+m-1, m)` for each requested degree.
pub fn hilbert_check(
    s: &Solution,
    degrees: &[usize],
    limits: Limits,
) -> Result<HilbertReport, VeroneseError> {
    ensure_solution(s)?;
    let n = s.order();
    let mut entries = Vec::with_capacity(degrees.len());
    for &m in degrees {
        let count = normal_monomials(s, m, limits)?.len();
        let expected = binomial(n + m - 1, m);
        entries.push(HilbertEntry {
            degree: m,
            count,
            expected,
            ok: count == expected,
        });
    }
    let pass = entries.iter().all(|e| e.ok);
    Ok(HilbertReport { entries, pass })
}

/// Chases a pair through a set of degree-2 rules (each maps one index
/// pair to a strictly smaller one) until no rule applies.
fn chase(rules: &HashMap<(usize, usize), (usize, usize)>, start: (usize, usize)) -> (usize, usize) {
    let mut current = start;
    while let Some(&next) = rules.get(&current) {
        current = next;
    }
    current
}

/// Equivalence of the two presentations at degree 2: rewriting every pair
/// of `{1..N}²` with `R = R_a ∪ R_b` and with `R_1 = R_1a ∪ R_b` must
/// reach the same endpoint.
pub fn presentations_equivalent_degree2(pres: &VeronesePresentation) -> bool {
    let as_map = |rels: Vec<IndexBinomial>| -> HashMap<(usize, usize), (usize, usize)> {
        rels.into_iter().map(|r| (r.lhs, r.rhs)).collect()
    };
    let r = as_map(pres.all_relations());
    let r1 = as_map(pres.reduced_relations());
    let big_n = pres.generators.len();
    (1..=big_n).all(|i| (1..=big_n).all(|j| chase(&r, (i, j)) == chase(&r1, (i, j))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{perm2, swap3};
    use std::collections::HashSet;

    fn limits() -> Limits {
        Limits::default()
    }

    fn pairs(rels: &[IndexBinomial]) -> HashSet<((usize, usize), (usize, usize))> {
        rels.iter().map(|r| (r.lhs, r.rhs)).collect()
    }

    #[test]
    fn perm2_veronese_d2_structure() {
        let data = build_veronese(&perm2(), 2, limits()).unwrap();
        assert_eq!(data.order(), 3);
        assert_eq!(
            data.basis(),
            &[
                Word::new(vec![1, 1]),
                Word::new(vec![1, 2]),
                Word::new(vec![2, 1])
            ]
        );
        assert!(data.rho_is_trivial());
        assert_eq!(data.h_set(), &[(2, 1), (3, 1), (3, 2)]);
        assert_eq!(data.mv_set(), &[(2, 3)]);
        assert_eq!(data.c_set().len(), 5);
        assert!(data.cardinality_report().pass);
    }

    #[test]
    fn perm2_presentation_d2() {
        let pres = presentation(&perm2(), 2, limits()).unwrap();
        assert_eq!(
            pairs(&pres.r_a),
            HashSet::from([((2, 1), (1, 2)), ((3, 1), (1, 3)), ((3, 2), (2, 3))])
        );
        assert_eq!(pairs(&pres.r_b), HashSet::from([((2, 3), (1, 1))]));
        assert_eq!(pres.kernel_gens, pres.r_b);
        assert_eq!(pres.all_relations().len(), 4);
        assert_eq!(pres.kernel_gens[0].render("y"), "y2*y3 - y1*y1");
    }

    #[test]
    fn swap3_veronese_d2_golden() {
        let data = build_veronese(&swap3(), 2, limits()).unwrap();
        assert_eq!(data.order(), 6);
        // rho(w6, w_i) = (w_i, w6) for i <= 5
        for i in 1..=5 {
            assert_eq!(data.rho(6, i), (i, 6));
        }
        assert_eq!(data.rho(5, 5), (3, 3));
        assert_eq!(data.rho(4, 3), (3, 1));
        let report = data.cardinality_report();
        assert!(report.pass);
        assert_eq!(report.h, 15);
        assert_eq!(report.mv, 6);
        assert_eq!(report.c, 15);
    }

    #[test]
    fn swap3_presentation_d2_golden() {
        let pres = presentation(&swap3(), 2, limits()).unwrap();
        let expected_r_a = HashSet::from([
            ((6, 1), (1, 6)),
            ((6, 2), (2, 6)),
            ((6, 3), (3, 6)),
            ((6, 4), (4, 6)),
            ((6, 5), (5, 6)),
            ((5, 5), (3, 3)),
            ((5, 4), (1, 5)),
            ((5, 2), (2, 5)),
            ((5, 1), (4, 5)),
            ((4, 3), (3, 1)),
            ((4, 2), (2, 4)),
            ((4, 1), (1, 4)),
            ((3, 4), (1, 3)),
            ((3, 2), (2, 3)),
            ((2, 1), (1, 2)),
        ]);
        assert_eq!(pairs(&pres.r_a), expected_r_a);
        let expected_r_b = HashSet::from([
            ((2, 2), (1, 4)),
            ((3, 5), (1, 6)),
            ((5, 3), (4, 6)),
            ((3, 3), (2, 6)),
            ((3, 1), (2, 5)),
            ((2, 3), (1, 5)),
        ]);
        assert_eq!(pairs(&pres.r_b), expected_r_b);
        let expected_r_1a = HashSet::from([
            ((6, 1), (1, 6)),
            ((6, 2), (2, 6)),
            ((6, 3), (3, 6)),
            ((6, 4), (4, 6)),
            ((6, 5), (5, 6)),
            ((5, 5), (2, 6)),
            ((5, 4), (1, 5)),
            ((5, 2), (2, 5)),
            ((5, 1), (4, 5)),
            ((4, 3), (2, 5)),
            ((4, 2), (2, 4)),
            ((4, 1), (1, 4)),
            ((3, 4), (1, 3)),
            ((3, 2), (1, 5)),
            ((2, 1), (1, 2)),
        ]);
        assert_eq!(pairs(&pres.r_1a), expected_r_1a);
        assert_eq!(pres.kernel_gens, pres.r_b);
    }

    #[test]
    fn trivial_n2_d2_cardinalities() {
        let data = build_veronese(&Solution::trivial(2), 2, limits()).unwrap();
        let report = data.cardinality_report();
        assert_eq!((report.h, report.p, report.c, report.mv), (3, 6, 5, 1));
        assert!(report.pass);
    }

    #[test]
    fn trivial_n1_presentation_is_empty() {
        let pres = presentation(&Solution::trivial(1), 2, limits()).unwrap();
        assert_eq!(pres.generators.len(), 1);
        assert!(pres.r_a.is_empty());
        assert!(pres.r_b.is_empty());
        assert!(pres.r_1a.is_empty());
        assert!(pres.kernel_gens.is_empty());
    }

    #[test]
    fn abstract_solution_validates() {
        // perm2 at d=2 gives the trivial solution on 3 letters
        let y = abstract_veronese_solution(&perm2(), 2, limits()).unwrap();
        assert_eq!(y, Solution::trivial(3));
        // swap3 at d=2: order 6, a solution, not square-free
        let y = abstract_veronese_solution(&swap3(), 2, limits()).unwrap();
        assert_eq!(y.order(), 6);
        let report = y.validate();
        assert!(report.is_solution);
        assert!(!report.square_free);
    }

    #[test]
    fn veronese_map_reports() {
        let report = verify_veronese_map(&swap3(), 2, limits()).unwrap();
        assert!(report.pass);
        assert_eq!(report.relation_images_checked, 15);
        assert_eq!(report.kernel_size, 6);
        assert_eq!(report.expected_kernel_size, 6);
        assert!(report.failures.is_empty());

        let report = verify_veronese_map(&perm2(), 2, limits()).unwrap();
        assert!(report.pass);
        assert_eq!(report.kernel_size, 1);

        // trivial n=2, d=3: kernel C(5,2) - C(7,1) = 3
        let report = verify_veronese_map(&Solution::trivial(2), 3, limits()).unwrap();
        assert!(report.pass);
        assert_eq!(report.kernel_size, 3);
    }

    #[test]
    fn square_free_veronese_checks() {
        let checked = dveronese_square_free_check(&Solution::trivial(3), 2, limits()).unwrap();
        assert_eq!(
            checked,
            SquareFreeVeroneseCheck::Checked {
                veronese_square_free: true,
                input_trivial: true,
                consistent_with_theorem: true
            }
        );
        let checked = dveronese_square_free_check(&swap3(), 2, limits()).unwrap();
        assert_eq!(
            checked,
            SquareFreeVeroneseCheck::Checked {
                veronese_square_free: false,
                input_trivial: false,
                consistent_with_theorem: true
            }
        );
        // perm2 is not square-free: not applicable
        let checked = dveronese_square_free_check(&perm2(), 2, limits()).unwrap();
        assert_eq!(checked, SquareFreeVeroneseCheck::NotApplicable);
        assert!(checked.pass());
    }

    #[test]
    fn permutation_veronese_checks() {
        // ord(f) = 2 divides d = 2: rho trivial
        let check = permutation_veronese_check(&perm2(), 2, limits()).unwrap();
        match check {
            PermutationVeroneseCheck::Checked {
                permutation_order,
                rho_matches_induced_permutation,
                order_divides_d,
                rho_trivial,
                pass,
            } => {
                assert_eq!(permutation_order, 2);
                assert!(rho_matches_induced_permutation);
                assert!(order_divides_d);
                assert!(rho_trivial);
                assert!(pass);
            }
            other => panic!("expected Checked, got {other:?}"),
        }
        // d = 3: rho is the nontrivial solution induced by f³ = f
        let check = permutation_veronese_check(&perm2(), 3, limits()).unwrap();
        match check {
            PermutationVeroneseCheck::Checked {
                rho_matches_induced_permutation,
                order_divides_d,
                rho_trivial,
                pass,
                ..
            } => {
                assert!(rho_matches_induced_permutation);
                assert!(!order_divides_d);
                assert!(!rho_trivial);
                assert!(pass);
            }
            other => panic!("expected Checked, got {other:?}"),
        }
        // trivial solution: f = id, every d
        let check = permutation_veronese_check(&Solution::trivial(3), 2, limits()).unwrap();
        assert!(check.pass());
        // swap3 is not a permutation solution
        let check = permutation_veronese_check(&swap3(), 2, limits()).unwrap();
        assert_eq!(check, PermutationVeroneseCheck::NotApplicable);
    }

    #[test]
    fn hilbert_reports() {
        let report = hilbert_check(&swap3(), &[1, 2, 3, 4], limits()).unwrap();
        assert!(report.pass);
        assert_eq!(report.entries[1].count, 6);
        let report = hilbert_check(&perm2(), &[4], limits()).unwrap();
        assert!(report.pass);
        assert_eq!(report.entries[0].count, 5);
    }

    #[test]
    fn degree2_closures_agree() {
        for s in [Solution::trivial(2), Solution::trivial(3), perm2(), swap3()] {
            let pres = presentation(&s, 2, limits()).unwrap();
            assert!(presentations_equivalent_degree2(&pres));
        }
    }

    #[test]
    fn phi_is_a_bijection_onto_normal_2d() {
        for s in [Solution::trivial(2), perm2(), swap3()] {
            let data = build_veronese(&s, 2, limits()).unwrap();
            let concats: HashSet<Word> = data
                .c_set()
                .iter()
                .map(|&(i, j)| data.basis()[i - 1].concat(&data.basis()[j - 1]))
                .collect();
            assert_eq!(concats.len(), data.c_set().len());
            assert_eq!(concats.len(), data.basis_2d().len());
        }
    }

    #[test]
    fn nonfixed_pairs_covered_by_r_a_exactly_once() {
        for s in [perm2(), swap3()] {
            let data = build_veronese(&s, 2, limits()).unwrap();
            let pres = presentation_from_data(&s, &data, limits()).unwrap();
            let fixed: HashSet<(usize, usize)> = data.fixed_points().into_iter().collect();
            let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
            for rel in &pres.r_a {
                *seen.entry(rel.lhs).or_default() += 1;
                *seen.entry(rel.rhs).or_default() += 1;
            }
            let big_n = data.order();
            for i in 1..=big_n {
                for j in 1..=big_n {
                    let expected = usize::from(!fixed.contains(&(i, j)));
                    assert_eq!(seen.get(&(i, j)).copied().unwrap_or(0), expected);
                }
            }
        }
    }

    #[test]
    fn non_solution_input_is_rejected() {
        let not_solution = Solution::from_fn(2, |x, y| (x, y)).unwrap();
        assert!(matches!(
            build_veronese(&not_solution, 2, limits()),
            Err(VeroneseError::NotASolution { .. })
        ));
    }

    #[test]
    fn d1_recovers_the_input_solution() {
        let s = swap3();
        let data = build_veronese(&s, 1, limits()).unwrap();
        assert_eq!(data.order(), 3);
        for i in 1..=3u16 {
            for j in 1..=3u16 {
                let (a, b) = s.r(i, j);
                assert_eq!(data.rho(i as usize, j as usize), (a as usize, b as usize));
            }
        }
    }

    #[test]
    fn guard_propagates() {
        assert!(matches!(
            build_veronese(&swap3(), 8, Limits::new(100)),
            Err(VeroneseError::Guard(_))
        ));
    }
}
