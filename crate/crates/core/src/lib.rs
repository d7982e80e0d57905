//! Exact Hall algebras of simply-laced Dynkin quivers over prime fields.
//!
//! The crate enumerates representations of a quiver over `F_p`, sorts them into isomorphism
//! classes, counts subobjects, and builds the Hall product and coproduct with exact rational
//! coefficients. On top of that it checks, instance by instance, that the algebra is a Hopf
//! algebra in `K`-graded vector spaces with the braiding `v ⊗ w -> q^{-<n,m>} w ⊗ v`:
//! Green's formula, bialgebra compatibility, the antipode axioms, and the quantum Serre
//! relations.
//!
//! ```
//! use quiver_hall::{gfq::Prime, hall::HallAlgebra, quiver::Quiver};
//!
//! let h = HallAlgebra::new(Quiver::builtin("a2")?, Prime::new(2)?, 3)?;
//! let s1 = h.basis_by_label("(1,0)")?;
//! let s2 = h.basis_by_label("(0,1)")?;
//! let product = h.multiply(&s1, &s2)?;
//! assert_eq!(h.render(&product), vec![
//!     ("(1,0)+(0,1)".to_string(), "1".to_string()),
//!     ("(1,1)".to_string(), "1".to_string()),
//! ]);
//! # Ok::<(), quiver_hall::Error>(())
//! ```

pub mod classify;
pub mod cli;
pub mod error;
pub mod gfq;
pub mod hall;
pub mod quiver;
pub mod rep;
pub mod verify;

pub use error::{Error, Result};
