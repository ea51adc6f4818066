pub mod center;
pub mod chartab;
pub mod corpus;
pub mod cyclo;
pub mod grp;
pub mod localext;
pub mod error;
pub mod gauss;
pub mod global;

pub use cyclo::Cyclotomic;
pub use error::{Error, Result};
