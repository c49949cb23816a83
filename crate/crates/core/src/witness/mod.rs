mod boundary;
mod closed;
mod finite;
mod jjs;

pub use boundary::{boundary_fooling_set, gen_boundary};
pub use closed::{
    gen_infix_closed, gen_suffix_closed, infix_closed_fooling_set, suffix_closed_catalog, suffix_closed_fooling_set,
    InfixClosedWitness,
};
pub use finite::{gen_finite_exponential, gen_finite_quadratic, gen_mandl, in_quadratic_range, mandl_dfa_size};
pub use jjs::{gen_jjs, jjs_from};
