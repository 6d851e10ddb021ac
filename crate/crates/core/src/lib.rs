//! Two-dimensional Walsh-Fourier analysis on the dyadic group: Walsh-Paley
//! functions, Dirichlet kernels, fast Walsh-Hadamard transforms, rectangular
//! partial sums, `L_p` / `weak-L_p` quasi-norms, dyadic martingale Hardy
//! space tools, and the extremal martingale showing that the weights in the
//! strong summability estimates for `H_p(G x G)` cannot be improved.

pub mod counterexample;
pub mod dyadic;
pub mod fwht;
pub mod hardy;
pub mod kernel;
pub mod norms;
pub mod series;
pub mod step;
pub mod walsh;

pub use counterexample::{ConstructionError, Counterexample, Growth};
pub use dyadic::Dyadic;
pub use step::{Step1, Step2};
