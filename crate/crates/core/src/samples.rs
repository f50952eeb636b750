//! Reference inputs shared by tests, benchmarks and the command line.

use crate::mpoly::MultiPoly;
use crate::text::parse_poly;

/// A 27-term polynomial in `x1..x4` that is not q-integer linear. Its
/// decomposition is `x1^8*x2^12*x3^12 * P0 * P1(x^(2,-4,3,5)) * P2(x^(-4,8,-6,7))`
/// with `P0 = q*x1*x3+x2^2*x3+x2^2*x4`, `P1 = 3*q^2*y^3+9*y+1` and
/// `P2 = 7*q*y^2-2*y+2*q`. The coefficients 18 and 63 force the middle
/// coefficient 9 in `P1`; `3*q^2*y^3+q*y+1` does not expand back to it.
pub const FOUR_VARIABLE_EXAMPLE: &str = "\
2*q^2*x1^9*x2^12*x3^13 + 2*q*x1^8*x2^14*x3^13 + 2*q*x1^8*x2^14*x3^12*x4 \
+ 18*q^2*x1^11*x2^8*x3^16*x4^5 + 18*q*x1^10*x2^10*x3^16*x4^5 \
+ 18*q*x1^10*x2^10*x3^15*x4^6 - 2*q*x1^5*x2^20*x3^7*x4^7 \
- 2*x1^4*x2^22*x3^7*x4^7 - 2*x1^4*x2^22*x3^6*x4^8 \
- 18*q*x1^7*x2^16*x3^10*x4^12 - 18*x1^6*x2^18*x3^10*x4^12 \
- 18*x1^6*x2^18*x3^9*x4^13 + 7*q^2*x1*x2^28*x3*x4^14 + 7*q*x2^30*x3*x4^14 \
+ 7*q*x2^30*x4^15 + 6*q^4*x1^15*x3^22*x4^15 + 6*q^3*x1^14*x2^2*x3^22*x4^15 \
+ 6*q^3*x1^14*x2^2*x3^21*x4^16 + 63*q^2*x1^3*x2^24*x3^4*x4^19 \
+ 63*q*x1^2*x2^26*x3^4*x4^19 + 63*q*x1^2*x2^26*x3^3*x4^20 \
- 6*q^3*x1^11*x2^8*x3^16*x4^22 - 6*q^2*x1^10*x2^10*x3^16*x4^22 \
- 6*q^2*x1^10*x2^10*x3^15*x4^23 + 21*q^4*x1^7*x2^16*x3^10*x4^29 \
+ 21*q^3*x1^6*x2^18*x3^10*x4^29 + 21*q^3*x1^6*x2^18*x3^9*x4^30";

pub fn four_variable_example() -> MultiPoly {
    parse_poly(FOUR_VARIABLE_EXAMPLE).expect("sample parses").0
}
