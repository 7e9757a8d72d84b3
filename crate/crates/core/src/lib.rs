pub mod algebra;
pub mod cli;
pub mod field;
pub mod hwcat;
pub mod klres;
pub mod laurent;
pub mod linalg;
pub mod modrep;
pub mod poly;
pub mod report;
pub mod specfile;
pub mod triangular;
pub mod zoo;

pub use algebra::GradedAlgebra;
pub use field::{Field, Scalar};
pub use laurent::{LaurentMatrix, LaurentPoly, RatMatrix, RationalFunction};
pub use linalg::{CoordBasis, Matrix, Subspace, Vector};
pub use modrep::{GradedModule, ModuleMap};
pub use triangular::TriangularDecomposition;
