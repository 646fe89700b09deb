pub mod charfunc;
pub mod combinat;
pub mod dpa;
pub mod dyck;
pub mod error;
pub mod macdonald;
pub mod ring;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
