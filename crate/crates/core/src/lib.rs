pub mod classify;
pub mod error;
pub mod input;
pub mod limit;
pub mod oracle;
pub mod param;
pub mod pipeline;
pub mod poly;
pub mod report;
pub mod space;
pub mod tfunction;

pub use error::{Error, ParseError, Result};
