//! Exact enumeration of pyramid and espalier polycubes in arbitrary
//! dimension through the multi-indexed Dirichlet convolution.
//!
//! - [`conv`]: truncated multi-indexed sequences, `⋆`, `△`, `▲`, transforms
//!   and `⋆`-inverses
//! - [`families`]: espalier and pyramid counts by volume, height,
//!   multivolume and dimension
//! - [`divorder`]: the projection order on partitions and its Möbius function
//! - [`genfunc`]: plateau polycubes, horizontally convex polyominoes and
//!   Delannoy numbers
//! - [`oracle`]: brute-force geometric enumeration used as ground truth
//! - [`reference`]: published sequence values

pub mod conv;
pub mod divorder;
pub mod error;
pub mod families;
pub mod genfunc;
pub mod oracle;
pub mod partition;
pub mod reference;
pub mod series;

pub use error::{Error, Result};
pub use families::{Family, VolumeSeries};
pub use partition::Partition;
