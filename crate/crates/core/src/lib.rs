pub mod error;
pub mod identity;
pub mod input;
pub mod partition;
pub mod poly;
pub mod schur;
mod serde_util;
pub mod specialization;
pub mod suite;
pub mod tableaux;
pub mod transforms;

pub use error::{Error, Result};
pub use partition::{Partition, ShapeMultiplicities};
pub use poly::{Poly, QPolynomial};
pub use schur::{EProduct, SchurExpansion};

// Each book chapter compiles as a doctest module so the snippets stay honest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/schur_ring.md")]
    mod schur_ring {}
    #[doc = include_str!("../../../book/src/identity.md")]
    mod identity {}
    #[doc = include_str!("../../../book/src/specialization.md")]
    mod specialization {}
    #[doc = include_str!("../../../book/src/transforms.md")]
    mod transforms {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
