//! Shadow Kauffman brackets of 2-tangles.
//!
//! A tangle shadow `A` is summarised by a pair `(a, b)` of integer
//! polynomials in `x` with `<A> = a <[0]> + b <[inf]>`. The pair is closed
//! under horizontal and vertical sums, inversion and connected sums with
//! knot shadows, and determines the brackets of the numerator,
//! denominator and R closures.

pub mod catalog;
pub mod closures;
pub mod fraction;
pub mod oracle;
pub mod poly;
pub mod tangle;

pub use closures::{close, repeat_closure, repeat_pair, ClosureKind};
pub use poly::{PolyError, Polynomial};
pub use tangle::{bracket_pair, eval_str, parse, BracketPair, KnotClass, TangleExpr};
