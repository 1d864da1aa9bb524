//! Exact-arithmetic workbench for cluster characters over cluster-tilted
//! algebras: finite-field linear algebra, quiver representations,
//! submodule-counting polynomials, and the Auslander-Reiten identities
//! they satisfy.

pub mod algebra;
pub mod character;
pub mod field;
pub mod grassmann;
pub mod laurent;
pub mod typea;

pub use algebra::{Algebra, AlgebraError, Morphism, Quiver, Representation, ShortExactSeq};
pub use character::{
    b_matrix, c_prime, c_prime_with_ceiling, check_f_identities, check_f_identities_with_ceiling,
    check_index_identities, check_undecorated_product, check_undecorated_product_with_ceiling,
    cluster_character, cluster_character_with_ceiling, g_vector, verify_theorem,
    verify_theorem_with_ceiling, BMatrix, CharacterError, CharacterValue, DecoratedObject,
    DecoratedTriangle, FIdentity, Verdict,
};
pub use typea::{
    algebra_from_triangulation, all_arcs, ar_triangle, crosscheck_remark, crossing_counts,
    enumerate_triangulations, ArTriangle, Triangulation, TriangulationModel, TypeAError,
};
pub use grassmann::{
    count_subreps, euler_char, f_polynomial, f_polynomial_with_ceiling, fiber_census, gr_count,
    FPolynomial, FiberBucket, FiberCensus, GrCount, GrassmannError, DEFAULT_F_CEILING,
    PROBE_PRIMES,
};
pub use field::{Fp, FieldError, FpPoly, Matrix, RationalPoly};
pub use laurent::{ExpVec, LaurentError, LaurentPoly};
