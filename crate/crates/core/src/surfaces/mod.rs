//! Concrete surfaces: lines on the Fermat cubic, pencils of plane cubics,
//! Weierstrass models, the quintic del Pezzo inside `Gr(2,5)`, and Picard
//! actions of plane Cremona maps.

mod elliptic;
mod fermat;
mod grassmann;
mod pencil;
mod picard;

pub use elliptic::{parse_model, weierstrass_normalize, EllipticModel, JInvariant};
pub use fermat::{
    fermat_equation, fermat_sigma_action, fermat_vars, line_classes, line_intersections,
    line_permutation, lines_on_fermat, FermatSigma, LineInP3,
};
pub use grassmann::{
    grassmannian_check, invariant_subspace, pluecker_pairs, pluecker_relations, pluecker_vars,
    BinomialCheck, GrassmannReport, PlueckerAction, Stage,
};
pub use pencil::{CubicPencil, MemberType, Parameter, PencilReport, SingularMember};
pub use picard::{
    cremona_picard_action, match_pentagon_power, pentagon_powers_over_labellings, rational_frame,
    PowerMatch,
};
