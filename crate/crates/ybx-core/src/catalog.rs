//! Exhaustive search for solutions of small order, and the JSON file
//! format used to exchange them.
//!
//! The search iterates over candidate left-action tables (one permutation
//! per generator, `(n!)^n` candidates) and derives the rest of `r` from
//! involutivity: writing `r(x, y) = (u, v)` with `u = L_x(y)`, the inverse
//! identity forces `v = L_u⁻¹(x)`. Every involutive nondegenerate solution
//! is determined by its left action this way, so the derived candidates
//! cover the whole space and the validator does the filtering.

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::par;
use crate::solution::{invert_permutation, Letter, Solution, SolutionError};

/// Format tag carried by every solution file.
pub const SOLUTION_FORMAT: &str = "ybx-solution-v1";

/// Orders beyond this explode combinatorially (`(n!)^n` candidates).
pub const MAX_ENUMERATION_ORDER: usize = 4;

#[derive(Debug, Serialize, Deserialize)]
struct SolutionFile {
    format: String,
    n: usize,
    /// `r[x-1][y-1] = [ˣy, xʸ]`, 1-based.
    r: Vec<Vec<[Letter; 2]>>,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format tag {got:?}, expected {SOLUTION_FORMAT:?}")]
    BadFormat { got: String },
    #[error("r table is not {n}x{n}")]
    BadShape { n: usize },
    #[error(transparent)]
    Solution(#[from] SolutionError),
}

/// Canonical JSON encoding of a solution.
pub fn to_json(s: &Solution) -> String {
    let n = s.order();
    let r: Vec<Vec<[Letter; 2]>> = (1..=n as Letter)
        .map(|x| (1..=n as Letter).map(|y| { let (a, b) = s.r(x, y); [a, b] }).collect())
        .collect();
    serde_json::to_string(&SolutionFile {
        format: SOLUTION_FORMAT.to_string(),
        n,
        r,
    })
    .expect("solution files always serialize")
}

/// Parses and re-validates a solution file; non-bijective tables are
/// rejected with the duplicated image named in the error.
pub fn from_json(text: &str) -> Result<Solution, ParseError> {
    let file: SolutionFile = serde_json::from_str(text)?;
    if file.format != SOLUTION_FORMAT {
        return Err(ParseError::BadFormat { got: file.format });
    }
    let n = file.n;
    if file.r.len() != n || file.r.iter().any(|row| row.len() != n) {
        return Err(ParseError::BadShape { n });
    }
    let table: Vec<(Letter, Letter)> = file
        .r
        .iter()
        .flat_map(|row| row.iter().map(|&[a, b]| (a, b)))
        .collect();
    Ok(Solution::new(n, table)?)
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("enumeration bound exceeded: order {n} not supported (max {max})")]
pub struct EnumerationBoundExceeded {
    pub n: usize,
    pub max: usize,
}

/// All solutions of order `n`, in lexicographic order of their flattened
/// `r` tables. No quotient by relabeling is taken; see
/// [`canonical_representatives`] for that.
pub fn enumerate_solutions(n: usize) -> Result<Vec<Solution>, EnumerationBoundExceeded> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(EnumerationBoundExceeded {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let perms: Vec<Vec<Letter>> = (1..=n as Letter).permutations(n).collect();
    let inverses: Vec<Vec<Letter>> = perms
        .iter()
        .map(|p| invert_permutation(p, n).expect("permutations invert"))
        .collect();
    let total = perms.len().pow(n as u32);
    let mut found = par::filter_map_indices(total, |mut idx| {
        // decode the candidate: one permutation choice per row of the left action
        let mut choice = vec![0usize; n];
        for slot in choice.iter_mut() {
            *slot = idx % perms.len();
            idx /= perms.len();
        }
        let mut table = Vec::with_capacity(n * n);
        for x in 1..=n {
            for y in 1..=n {
                let u = perms[choice[x - 1]][y - 1];
                let v = inverses[choice[u as usize - 1]][x - 1];
                table.push((u, v));
            }
        }
        let candidate = Solution::new(n, table).ok()?;
        candidate.validate().is_solution.then_some(candidate)
    });
    found.sort_by(|a, b| a.r_table().cmp(b.r_table()));
    Ok(found)
}

/// One representative per relabeling class: each solution is replaced by
/// the lexicographically least table among its `n!` relabelings, then the
/// list is deduplicated.
pub fn canonical_representatives(solutions: &[Solution]) -> Vec<Solution> {
    let mut out: Vec<Solution> = solutions
        .iter()
        .map(|s| {
            let n = s.order();
            (1..=n as Letter)
                .permutations(n)
                .map(|sigma| s.relabel(&sigma).expect("permutation by construction"))
                .min_by(|a, b| a.r_table().cmp(b.r_table()))
                .expect("at least the identity relabeling")
        })
        .collect();
    out.sort_by(|a, b| a.r_table().cmp(b.r_table()));
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{perm2, swap3};

    #[test]
    fn serialize_trivial_2_golden() {
        assert_eq!(
            to_json(&Solution::trivial(2)),
            r#"{"format":"ybx-solution-v1","n":2,"r":[[[1,1],[2,1]],[[1,2],[2,2]]]}"#
        );
    }

    #[test]
    fn round_trip() {
        for s in [Solution::trivial(1), Solution::trivial(3), perm2(), swap3()] {
            assert_eq!(from_json(&to_json(&s)).unwrap(), s);
        }
    }

    #[test]
    fn parse_rejects_non_bijective_with_named_image() {
        let text = r#"{"format":"ybx-solution-v1","n":2,"r":[[[1,1],[1,1]],[[1,2],[2,2]]]}"#;
        match from_json(text).unwrap_err() {
            ParseError::Solution(SolutionError::NonBijective { ix, iy, .. }) => {
                assert_eq!((ix, iy), (1, 1));
            }
            other => panic!("expected NonBijective, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_wrong_format_and_shape() {
        assert!(matches!(
            from_json(r#"{"format":"other","n":1,"r":[[[1,1]]]}"#),
            Err(ParseError::BadFormat { .. })
        ));
        assert!(matches!(
            from_json(r#"{"format":"ybx-solution-v1","n":2,"r":[[[1,1],[2,1]]]}"#),
            Err(ParseError::BadShape { .. })
        ));
        assert!(matches!(from_json("not json"), Err(ParseError::Json(_))));
    }

    #[test]
    fn parse_rejects_out_of_range() {
        let text = r#"{"format":"ybx-solution-v1","n":2,"r":[[[1,1],[2,3]],[[1,2],[2,2]]]}"#;
        assert!(matches!(
            from_json(text),
            Err(ParseError::Solution(SolutionError::OutOfRange { .. }))
        ));
    }

    #[test]
    fn order_one_has_exactly_one_solution() {
        let sols = enumerate_solutions(1).unwrap();
        assert_eq!(sols, vec![Solution::trivial(1)]);
    }

    #[test]
    fn order_two_has_exactly_two_solutions() {
        let sols = enumerate_solutions(2).unwrap();
        assert_eq!(sols.len(), 2);
        assert!(sols.contains(&Solution::trivial(2)));
        assert!(sols.contains(&perm2()));
    }

    #[test]
    fn order_two_matches_pair_bijection_brute_force() {
        // independent oracle: filter all 24 bijections of the 4-element
        // pair set for involutivity, nondegeneracy, and the braid relation
        let pairs: Vec<(Letter, Letter)> = vec![(1, 1), (1, 2), (2, 1), (2, 2)];
        let mut count = 0;
        for img in pairs.iter().copied().permutations(4) {
            let Ok(s) = Solution::new(2, img) else {
                continue;
            };
            if s.validate().is_solution {
                count += 1;
            }
        }
        assert_eq!(count, enumerate_solutions(2).unwrap().len());
    }

    #[test]
    fn order_three_contains_the_named_solutions() {
        let sols = enumerate_solutions(3).unwrap();
        assert!(sols.contains(&Solution::trivial(3)));
        assert!(sols.contains(&swap3()));
        // all six permutation solutions appear
        for f in (1..=3 as Letter).permutations(3) {
            assert!(sols.contains(&Solution::from_permutation(3, &f).unwrap()));
        }
        assert!(sols.iter().all(|s| s.validate().is_solution));
    }

    #[test]
    fn enumeration_is_deterministic() {
        assert_eq!(enumerate_solutions(3).unwrap(), enumerate_solutions(3).unwrap());
    }

    #[test]
    fn enumeration_closed_under_swap_conjugation_and_relabeling() {
        let sols = enumerate_solutions(3).unwrap();
        for s in &sols {
            assert!(sols.contains(&s.conjugate_by_swap()));
            for sigma in (1..=3 as Letter).permutations(3) {
                assert!(sols.contains(&s.relabel(&sigma).unwrap()));
            }
        }
    }

    #[test]
    fn canonical_representatives_quotient_by_relabeling() {
        let sols = enumerate_solutions(2).unwrap();
        let canon = canonical_representatives(&sols);
        assert_eq!(canon.len(), 2); // trivial and the transposition class
        let sols3 = enumerate_solutions(3).unwrap();
        let canon3 = canonical_representatives(&sols3);
        assert!(canon3.len() < sols3.len());
        for s in &canon3 {
            assert!(sols3.contains(s));
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(enumerate_solutions(5).is_err());
        assert!(enumerate_solutions(0).is_err());
    }
}
