pub mod blocks;
pub mod combinat;
pub mod error;
pub mod exactalg;
pub mod ggg;
pub mod lusztig;
pub mod oracle;
pub mod restriction;
pub mod weyl;

pub use error::{Error, Result};
