//! Regression constants, produced by the dense oracle in `tests/oracle.rs`.
#![allow(dead_code)]

/// Hopf cohomology at `q = 3`: `(r, dim H^r, cochain dim)`.
pub const LAMBDA1_HOPF: [(i64, usize, usize); 3] = [(1, 1, 1), (2, 0, 0), (3, 2, 2)];
pub const LAMBDA2_HOPF: [(i64, usize, usize); 3] = [(1, 4, 5), (2, 0, 10), (3, 15, 45)];

/// Internal-degree cap for the acyclic example.
pub const ACYCLIC_D: u32 = 6;

/// Restricted Harrison columns of `acyclic` at `D = 6`:
/// `(p, dims of Ch^{p,m} for m = 1..=4, ranks of ∂ from m to m+1 for m = 1..=4)`.
/// The last rank maps into `m = 5`.
pub const ACYCLIC_COLUMNS: [(i64, [usize; 4], [usize; 4]); 6] = [
    (0, [6, 7, 6, 4], [4, 3, 3, 1]),
    (1, [5, 5, 3, 1], [3, 2, 1, 0]),
    (2, [4, 3, 1, 0], [2, 1, 0, 0]),
    (3, [3, 1, 0, 0], [1, 0, 0, 0]),
    (4, [2, 0, 0, 0], [0, 0, 0, 0]),
    (5, [1, 0, 0, 0], [0, 0, 0, 0]),
];

/// `dim H̃arr^n(A;A;3)` of `acyclic` at `D = 6` for `n = 1..=5`; equal to the
/// generator-complex side.
pub const ACYCLIC_HARRISON: [usize; 5] = [1, 0, 0, 0, 0];

/// Degrees `n` whose iso2 row is unaffected by the cap at `D = 6`.
pub const ACYCLIC_ISO2_EXACT: [i64; 4] = [1, 2, 3, 4];
