//! Reference closed forms and quadrics for the fiber computation.
//!
//! The closed forms are written in the g-context, where `g7 = s` and
//! `g0 = t`; the quadrics are written in the k-context.

/// `g6` as a function of `g1..g5, g7, g0`.
pub(crate) const G6: (&str, &str) = (
    "-g1*(-g5*g0 - g5*g2 + g0^2 + 2*g0*g2 + g0*g4 + g7*g0 + g2*g7 + g2^2 + g2*g4)",
    "g0*g1 + g1*g4 + g1*g7 + g2*g1 - g5*g7 - g5*g4",
);

/// `g8` as a function of `g1..g7, g0`.
pub(crate) const G8: (&str, &str) = ("g3*g6*(g2 + g6 + g0 + g4)", "g0*g2 - g0*g3 + g0*g4 - g3*g6");

/// `g9` as a function of `g1..g7, g0`.
pub(crate) const G9: (&str, &str) = (
    "g5*g6*(g0 + g3)",
    "-g2*g3 + g5*g3 - g3*g6 - g0*g3 - g4*g3 + 2*g2*g4 - g5*g4 + g4*g6 + g0*g4 + g4^2 + g2^2 - g5*g2 + g2*g6 + g0*g2 - g5*g6",
);

/// The quadratic form in `(s, t)`.
pub(crate) const QQ: &str = "g1*g4*t^2 + (-g2*g5 - g5*g4 + g1*g4 + g5*g3)*s^2 + 2*g1*g4*s*t \
    + (-g5*g3*g1 + g2*g1*g5 + g1*g4*g3 - g4^2*g5 + g1*g2*g4 + g5*g3*g4 - g2*g5*g4 + g4^2*g1)*s \
    + (-g4*g5*g1 + g4^2*g1 + g1*g4*g3 + g1*g2*g4)*t + g3*g2*g1*g4 - g5*g3*g1*g4 + g1*g4^2*g3";

/// The common quadratic factor in `s`.
pub(crate) const DD: &str = "(g1^2*g4^2 + 2*g2*g1^2*g4 + g3^2*g5^2 + g2^2*g3^2 + g2^2*g1^2 + g5^2*g4^2 \
    + 2*g3*g2*g1*g4 - 2*g2*g1*g5*g4 - 2*g3*g5^2*g4 - 2*g1*g5*g4^2 + 2*g2^2*g3*g1 - 2*g3^2*g5*g2 \
    + 2*g5*g3*g2*g4 + 2*g5*g3*g1*g4 - 2*g5*g3*g1*g2)*s^2 \
    + (-g2^2*g1^3 - 2*g1^3*g2*g4 + 2*g1^2*g2*g4^2 + 2*g1^2*g5*g4^2 + g1^2*g4^3 - g1^3*g4^2 \
    - 2*g1*g5*g4^3 - 2*g3*g5^2*g4^2 - 2*g3*g2^2*g1^2 + 2*g3*g2*g1*g4^2 + g3^2*g2^2*g4 + g5^2*g4^3 \
    + 2*g1^2*g2*g5*g4 + 2*g2^2*g3*g1*g4 - 4*g3*g5*g1*g2*g4 + g5^2*g3^2*g4 + g2^2*g1^2*g4 \
    - g1*g5^2*g4^2 - g2^2*g3^2*g1 - g3^2*g5^2*g1 + 2*g5*g3*g2*g4^2 + 2*g5*g1^2*g2*g3 \
    + 2*g3^2*g5*g1*g2 - 2*g1*g2*g5*g4^2 + 2*g3*g5^2*g1*g4 + 2*g3*g1*g5*g4^2 - 2*g3*g5*g1^2*g4 \
    - 2*g3^2*g5*g2*g4 - 2*g1^2*g2*g3*g4)*s \
    - g1^2*g3^2*g4^2 + g3*g1^2*g4^3 - g1^3*g3*g4^2 - g1^2*g2*g3^2*g4 - g1^3*g3*g2*g4 \
    - g3^2*g1*g2^2*g4 - g3^2*g1*g2*g4^2 + g3*g1*g2*g4^3 + g2^2*g3*g1*g4^2 - g3*g5^2*g1^2*g4 \
    + g1^3*g3*g5*g4 + g3^2*g5*g1*g4^2 - g3^2*g5^2*g1*g4 + g3*g5^2*g1*g4^2 - g3*g5*g1*g4^3 \
    - g3*g1^2*g2^2*g4 + g3^2*g5*g1^2*g4 - 2*g3*g1*g2*g5*g4^2 + 2*g3*g1^2*g2*g5*g4 \
    + 2*g3^2*g1*g2*g5*g4";

/// Scalar factor relating the eighth cubic to `qq`: `cub8 = −(g1 − g5)·qq / den`
/// with `den` the denominator of [`G6`].
pub(crate) const CUB8_FACTOR: &str = "-(g1 - g5)";

/// Reduced cubics solved by the closed forms, or vanishing after them.
pub(crate) const CONSUMED: [usize; 4] = [3, 7, 10, 19];

/// The cubic whose reduction has the smallest coefficient degrees.
pub(crate) const MINIMAL: usize = 11;
