//! Reference prolongation table in the z-context.

/// `c·y_j` restricted to the conic locus, for `j = 11..=40`.
pub(crate) const PROLONG: [(usize, &str); 30] = [
    (11, "-z1*(z2 - z3)"),
    (12, "-z2 + z1"),
    (13, "z1 - z3"),
    (14, "-(-1 + z1)*(z2 - z3)"),
    (15, "(-1 + z1)*z3"),
    (16, "(-1 + z1)*z2"),
    (17, "z1*(-1 + z3)"),
    (18, "z1*(-1 + z2)"),
    (19, "-(-z2 + z1)*z3"),
    (20, "-(z1 - z3)*z2"),
    (21, "-(-z2 + z1)*(-1 + z3)"),
    (22, "-(z1 - z3)*(-1 + z2)"),
    (23, "-(-1 + z1)*(z2 - z3)"),
    (24, "z1 - z3"),
    (25, "-z2 + z1"),
    (26, "-z1*(z2 - z3)"),
    (27, "-(z1 - z3)*(-1 + z2)"),
    (28, "-(-z2 + z1)*(-1 + z3)"),
    (29, "-(z1 - z3)*z2"),
    (30, "-(-z2 + z1)*z3"),
    (31, "(-1 + z3)*z2"),
    (32, "(-1 + z2)*z3"),
    (33, "(-1 + z2)*z3"),
    (34, "(-1 + z3)*z2"),
    (35, "z1*(-1 + z2)"),
    (36, "z1*(-1 + z3)"),
    (37, "(-1 + z1)*z2"),
    (38, "(-1 + z1)*z3"),
    (39, "z2 - z3"),
    (40, "z2 - z3"),
];

/// The common factor of the table.
pub(crate) const FACTOR: (&str, &str) = (
    "(z1 - 1)*(z1 - z3)*(z2 - z3)*(z1 - z2)*z1",
    "(1 - z2)^2*z3^2*(1 - z3)^2*z2^2",
);

/// Coincidences visible in the table.
pub(crate) const DUPLICATES: [(usize, usize); 5] = [(39, 40), (12, 25), (13, 24), (32, 33), (31, 34)];

/// The conic parametrization `x(z)`.
pub(crate) const Z_TO_X: [(&str, &str); 4] = [("1 - z1", "1 - z2"), ("1 - z1", "1 - z3"), ("z1", "z2"), ("z1", "z3")];
