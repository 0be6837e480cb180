//! Reference data: the forty coordinate polynomials in factored form, the
//! transformation tables of the seven involutions and their cofactors.

/// `D1 = x1*x4 - x2*x3`.
pub const D1: &str = "x1*x4 - x2*x3";
/// `D2`, the second quadratic factor of the discriminant.
pub const D2: &str = "x1*x4 - x4 + x2 - x2*x3 + x3 - x1";
/// The cubic `Q` (the conic condition on the six points).
pub const Q: &str = "-x2*x3*x1 - x2*x3*x4 + x2*x3 + x1*x4*x2 + x1*x4*x3 - x1*x4";

/// `y_alpha = sign * product of factors`; the names `D1`, `D2`, `Q` refer to
/// the constants above, anything else is polynomial text.
pub const Y_FACTORS: [(i8, &[&str]); 40] = [
    (1, &["D1", "Q"]),
    (1, &["D2", "Q"]),
    (1, &["x2 - x1", "Q"]),
    (1, &["x3 - x1", "Q"]),
    (1, &["x4 - x2", "Q"]),
    (1, &["x4 - x3", "Q"]),
    (1, &["x1", "x4 - 1", "Q"]),
    (1, &["x2", "x3 - 1", "Q"]),
    (1, &["x3", "x2 - 1", "Q"]),
    (1, &["x4", "x1 - 1", "Q"]),
    (1, &["D1", "x1 - 1", "x2 - 1", "x4 - x3"]),
    (1, &["D1", "x1 - 1", "x3 - 1", "x4 - x2"]),
    (1, &["D1", "x2 - 1", "x4 - 1", "x3 - x1"]),
    (1, &["D1", "x3 - 1", "x4 - 1", "x2 - x1"]),
    (-1, &["D1", "x1", "x2 - 1", "x3 - 1"]),
    (-1, &["D1", "x2", "x1 - 1", "x4 - 1"]),
    (-1, &["D1", "x3", "x1 - 1", "x4 - 1"]),
    (-1, &["D1", "x4", "x2 - 1", "x3 - 1"]),
    (1, &["D2", "x2", "x3", "x1 - 1"]),
    (1, &["D2", "x1", "x4", "x2 - 1"]),
    (1, &["D2", "x1", "x4", "x3 - 1"]),
    (1, &["D2", "x2", "x3", "x4 - 1"]),
    (1, &["D2", "x1", "x2", "x4 - x3"]),
    (1, &["D2", "x1", "x3", "x4 - x2"]),
    (1, &["D2", "x2", "x4", "x3 - x1"]),
    (1, &["D2", "x3", "x4", "x2 - x1"]),
    (1, &["x1", "x2 - 1", "x3 - 1", "x4 - x2", "x4 - x3"]),
    (1, &["x2", "x1 - 1", "x4 - 1", "x3 - x1", "x4 - x3"]),
    (1, &["x3", "x1 - 1", "x4 - 1", "x2 - x1", "x4 - x2"]),
    (1, &["x4", "x2 - 1", "x3 - 1", "x2 - x1", "x3 - x1"]),
    (-1, &["x1", "x1 - 1", "x4 - x2", "x4 - x3"]),
    (-1, &["x2", "x2 - 1", "x3 - x1", "x4 - x3"]),
    (-1, &["x3", "x3 - 1", "x2 - x1", "x4 - x2"]),
    (-1, &["x4", "x4 - 1", "x2 - x1", "x3 - x1"]),
    (-1, &["x2", "x3", "x1 - 1", "x4 - x2", "x4 - x3"]),
    (-1, &["x1", "x4", "x2 - 1", "x3 - x1", "x4 - x3"]),
    (-1, &["x1", "x4", "x3 - 1", "x2 - x1", "x4 - x2"]),
    (-1, &["x2", "x3", "x4 - 1", "x2 - x1", "x3 - x1"]),
    (1, &["D1", "D2"]),
    (1, &["x2 - x1", "x3 - x1", "x4 - x2", "x4 - x3"]),
];

/// Rows `(beta, epsilon)` of the reference tables: under the involution,
/// `y_alpha` becomes `epsilon * c * y_beta` (row `alpha` is entry `alpha - 1`).
pub(crate) const S1: [(usize, i8); 40] = [
    (6, -1),
    (2, 1),
    (3, 1),
    (8, -1),
    (7, -1),
    (1, -1),
    (5, -1),
    (4, -1),
    (9, 1),
    (10, 1),
    (11, 1),
    (28, -1),
    (27, -1),
    (40, -1),
    (32, -1),
    (31, -1),
    (35, -1),
    (36, -1),
    (19, 1),
    (20, 1),
    (25, -1),
    (24, -1),
    (39, -1),
    (22, -1),
    (21, -1),
    (26, 1),
    (13, -1),
    (12, -1),
    (29, 1),
    (30, 1),
    (16, -1),
    (15, -1),
    (38, -1),
    (37, -1),
    (17, -1),
    (18, -1),
    (34, -1),
    (33, -1),
    (23, -1),
    (14, -1),
];
pub(crate) const S2: [(usize, i8); 40] = [
    (1, 1),
    (2, 1),
    (6, -1),
    (4, 1),
    (5, 1),
    (3, -1),
    (9, -1),
    (10, -1),
    (7, -1),
    (8, -1),
    (14, -1),
    (12, 1),
    (13, 1),
    (11, -1),
    (17, -1),
    (18, -1),
    (15, -1),
    (16, -1),
    (21, -1),
    (22, -1),
    (19, -1),
    (20, -1),
    (26, -1),
    (24, 1),
    (25, 1),
    (23, -1),
    (29, -1),
    (30, -1),
    (27, -1),
    (28, -1),
    (33, -1),
    (34, -1),
    (31, -1),
    (32, -1),
    (37, -1),
    (38, -1),
    (35, -1),
    (36, -1),
    (39, 1),
    (40, 1),
];
pub(crate) const S3: [(usize, i8); 40] = [
    (1, 1),
    (3, -1),
    (2, -1),
    (7, -1),
    (8, -1),
    (6, 1),
    (4, -1),
    (5, -1),
    (9, 1),
    (10, 1),
    (11, 1),
    (16, -1),
    (15, -1),
    (39, -1),
    (13, -1),
    (12, -1),
    (17, 1),
    (18, 1),
    (29, -1),
    (30, -1),
    (34, -1),
    (33, -1),
    (40, -1),
    (38, -1),
    (37, -1),
    (26, 1),
    (32, -1),
    (31, -1),
    (19, -1),
    (20, -1),
    (28, -1),
    (27, -1),
    (22, -1),
    (21, -1),
    (35, 1),
    (36, 1),
    (25, -1),
    (24, -1),
    (14, -1),
    (23, -1),
];
pub(crate) const S4: [(usize, i8); 40] = [
    (5, -1),
    (2, 1),
    (9, -1),
    (4, 1),
    (1, -1),
    (7, -1),
    (6, -1),
    (8, 1),
    (3, -1),
    (10, 1),
    (29, -1),
    (12, 1),
    (40, -1),
    (27, -1),
    (33, -1),
    (35, -1),
    (31, -1),
    (37, -1),
    (19, 1),
    (26, -1),
    (21, 1),
    (23, -1),
    (22, -1),
    (39, -1),
    (25, 1),
    (20, -1),
    (14, -1),
    (28, 1),
    (11, -1),
    (30, 1),
    (17, -1),
    (38, -1),
    (15, -1),
    (36, -1),
    (16, -1),
    (34, -1),
    (18, -1),
    (32, -1),
    (24, -1),
    (13, -1),
];
pub(crate) const S5: [(usize, i8); 40] = [
    (1, 1),
    (2, 1),
    (3, 1),
    (5, -1),
    (4, -1),
    (6, 1),
    (8, -1),
    (7, -1),
    (10, -1),
    (9, -1),
    (11, 1),
    (13, -1),
    (12, -1),
    (14, 1),
    (16, -1),
    (15, -1),
    (18, -1),
    (17, -1),
    (20, -1),
    (19, -1),
    (22, -1),
    (21, -1),
    (23, 1),
    (25, -1),
    (24, -1),
    (26, 1),
    (28, -1),
    (27, -1),
    (30, -1),
    (29, -1),
    (32, -1),
    (31, -1),
    (34, -1),
    (33, -1),
    (36, -1),
    (35, -1),
    (38, -1),
    (37, -1),
    (39, 1),
    (40, 1),
];
pub(crate) const S6: [(usize, i8); 40] = [
    (39, -1),
    (2, 1),
    (26, -1),
    (25, -1),
    (24, -1),
    (23, -1),
    (22, -1),
    (21, -1),
    (20, -1),
    (19, -1),
    (11, 1),
    (12, 1),
    (13, 1),
    (14, 1),
    (18, -1),
    (17, -1),
    (16, -1),
    (15, -1),
    (10, -1),
    (9, -1),
    (8, -1),
    (7, -1),
    (6, -1),
    (5, -1),
    (4, -1),
    (3, -1),
    (27, 1),
    (28, 1),
    (29, 1),
    (30, 1),
    (35, -1),
    (36, -1),
    (37, -1),
    (38, -1),
    (31, -1),
    (32, -1),
    (33, -1),
    (34, -1),
    (1, -1),
    (40, 1),
];
pub(crate) const SR: [(usize, i8); 40] = [
    (1, 1),
    (2, 1),
    (3, 1),
    (4, 1),
    (5, 1),
    (6, 1),
    (7, 1),
    (8, 1),
    (9, 1),
    (10, 1),
    (26, -1),
    (25, -1),
    (24, -1),
    (23, -1),
    (38, -1),
    (37, -1),
    (36, -1),
    (35, -1),
    (30, -1),
    (29, -1),
    (28, -1),
    (27, -1),
    (14, -1),
    (13, -1),
    (12, -1),
    (11, -1),
    (22, -1),
    (21, -1),
    (20, -1),
    (19, -1),
    (34, -1),
    (33, -1),
    (32, -1),
    (31, -1),
    (18, -1),
    (17, -1),
    (16, -1),
    (15, -1),
    (40, -1),
    (39, -1),
];

/// Reference cofactors `(numerator, denominator)`.
pub const C1: (&str, &str) = ("1", "(x1*x2)^3");
pub const C2: (&str, &str) = ("1", "1");
pub const C3: (&str, &str) = ("1", "((1 - x3)*(1 - x4))^3");
pub const C4: (&str, &str) = ("1", "(x1*x3)^3");
pub const C5: (&str, &str) = ("1", "1");
pub const C6: (&str, &str) = ("1", "(x1*x2*x3*x4)^2");
pub const CR: (&str, &str) = (
    "((x1*x4 - x2*x3)*(x1*x4 - x4 + x2 - x2*x3 + x3 - x1))^3",
    "((-x4 + x2)*(x4 - x3)*(x1 - x3)*(x1 - x2))^3",
);
