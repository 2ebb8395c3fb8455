//! Cuspidal lines, points, segments, multisegments and elements of R and
//! its tensor powers.

mod line;
mod multisegment;
mod ring;
mod segment;
mod word;

pub use line::{Line, LineSet, Rational};
pub use multisegment::Multisegment;
pub use ring::{RElem, TensorElem};
pub use segment::{Point, Segment};
pub use word::{CuspSum, CuspWord};

pub(crate) use line::is_identifier;
