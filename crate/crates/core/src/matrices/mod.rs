//! Exact tridiagonal matrices and the builders for every family studied here.
//!
//! Indexing is 0-based throughout. For an `n x n` matrix, `sub[k]` is entry
//! `(k+1, k)`, `main[k]` is `(k, k)` and `sup[k]` is `(k, k+1)`.
//!
//! | family            | super `k`              | main `k`           | sub `k`                   |
//! |-------------------|------------------------|--------------------|---------------------------|
//! | `K_N`             | `k+1`                  | `0`                | `N-k`                     |
//! | `J_N(a,b,g,d)`    | `(k+1) a g`            | `k (a d + b g)`    | `-(N-k) b d`              |
//! | `B_N(a,b,c)`      | `(k+1) a`              | `k b`              | `-(N-k) c`                |
//! | `G_N`             | `k+1`                  | `0`                | `2N+2-k`                  |
//! | `S_N`             | `k+1`, last is `2N`    | `0`                | `2N-k`                    |
//! | `C_N(alpha)`      | `a_k`                  | `N/2`              | `c_{k+1}`                 |

mod builders;
mod tridiagonal;

pub use builders::{
    build_abc, build_appendix_matrix, build_general, build_hahn, build_sylvester_kac,
    factorial_weights, AppendixKind,
};
pub use tridiagonal::Tridiagonal;
