//! Certified complex root isolation and argument enclosures.

pub mod angle;
pub mod rect;
pub mod roots;
pub mod transcend;

pub use angle::{angle_combine, argument_interval};
pub use rect::{AngleInterval, Interval, Rectangle};
pub use roots::{isolate_roots, isolate_with_prec, refine, refine_to, roots_in};
