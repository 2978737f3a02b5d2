pub mod conjectures;
pub mod ehrhart;
pub mod error;
pub mod geometry;
pub mod graphfactor;
pub mod par;
pub mod suite;
pub mod symmat;
pub mod toric;

pub use error::{Error, Result};
