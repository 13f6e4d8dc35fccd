//! Exact integer linear algebra and certified real-root arithmetic.

mod matrix;
mod poly;
mod roots;

pub use matrix::{charpoly_i64, IntMatrix};
pub use poly::{exact_number, IntPoly};
pub use roots::{
    compare_real_rooted, compare_root, default_width, isolate_real_roots, real_rooted_counts,
    round_sig, square_free_part, IsolatedRoot, RealRoot, RootIsolation, RootLocation, SturmChain,
};
