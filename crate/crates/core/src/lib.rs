//! Circulant graphs `C_n(R)`, Adam's (multiplier) isomorphism, and Type-2
//! isomorphism through the vertex map `Θ_{n,r,t}`.
//!
//! The crate builds the order-`np³` Type-2 families with respect to `r = p`
//! and the order-`8n` families with respect to `r = 2`, finds their Type-2
//! groups, and checks every claim against independent brute-force oracles.
//!
//! ```
//! use circulant_t2::{families::FamilyParams, iso};
//!
//! let params = FamilyParams::new(3, 1, 1, 0, 1)?;
//! let orbit = params.orbit()?;
//! assert_eq!(orbit[1].jumps(), &[3, 4, 5, 13]);
//!
//! let t2 = iso::t2_orbit(&params.graph()?, 3)?.expect("Type-2 partners exist");
//! assert_eq!(t2.order(), 3);
//! # Ok::<(), circulant_t2::Error>(())
//! ```

pub mod catalog;
pub mod circulant;
pub mod error;
pub mod families;
pub mod iso;
pub mod modring;
pub mod oracle;
pub mod transform;

pub use circulant::{Adjacency, CirculantGraph, ConnectionSet};
pub use error::{Error, Result};
pub use modring::{Modulus, Residue};
pub use transform::{LabeledGraph, ThetaMap};
