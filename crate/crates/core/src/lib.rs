//! Exact constructions on complex symplectic and orthogonal groups, the
//! homotopy groups they induce maps on, and decisions about splitting
//! symplectic bundles and Azumaya algebras with symplectic involution as
//! tensor products.

pub mod linalg;
pub mod groups;
pub mod homotopy;
pub mod induced;
pub mod lifting;
