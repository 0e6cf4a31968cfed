//! Shared test inputs.

use crate::solution::Solution;

/// Order-3 square-free solution: acting by `x3` swaps `x1` and `x2`,
/// all other actions are trivial. Its algebra is a binomial skew
/// polynomial ring with relations
/// `x3x2 - x1x3`, `x3x1 - x2x3`, `x2x1 - x1x2`.
pub(crate) fn swap3() -> Solution {
    Solution::from_fn(3, |x, y| match (x, y) {
        (3, 1) => (2, 3),
        (3, 2) => (1, 3),
        (1, 3) => (3, 2),
        (2, 3) => (3, 1),
        (2, 1) => (1, 2),
        (1, 2) => (2, 1),
        _ => (x, y),
    })
    .unwrap()
}

/// Order-2 permutation solution of the transposition `f = (1 2)`:
/// `r(x2,x2) = (x1,x1)`, `r(x1,x1) = (x2,x2)`, mixed pairs fixed.
/// Not square-free; single defining relation `x2x2 - x1x1`.
pub(crate) fn perm2() -> Solution {
    Solution::from_permutation(2, &[2, 1]).unwrap()
}
