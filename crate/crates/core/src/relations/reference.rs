//! Reference pivot expressions and reduced cubics.

/// Each non-pivot coordinate as a combination of pivots.
pub(crate) const PIVOT_EXPRESSIONS: [(usize, &str); 30] = [
    (2, "y1 - y5 + y4"),
    (6, "-y4 + y5 + y3"),
    (8, "-y3 - y1 + y7"),
    (9, "-y1 + y7 - y4"),
    (10, "y7 - y5 - y3"),
    (14, "y11 + y13 - y12"),
    (16, "-y1 + y12 - y13 - y11 + y15"),
    (17, "y15 - y1 - y13"),
    (18, "-y13 - y11 + y15"),
    (20, "y19 + y3 + y11"),
    (21, "y4 + y19 + y12"),
    (22, "y19 + y3 + y11 + y13 + y5"),
    (23, "y1 - y12 + y13 + y3 + y11"),
    (24, "y4 + y1 + y13"),
    (25, "y12 + y5 - y1"),
    (26, "-y4 + y5 - y1 + y3 + y11"),
    (27, "y19 + y4 + y1 + y3 - y7 + y11 + y13"),
    (28, "-y7 + y19 + y12 + y5 + y3"),
    (29, "y3 - y7 + y11 + y19 + y5"),
    (30, "y3 + y1 - y7 + y19 + y4"),
    (31, "-y1 - y13 + y19 + y15 + y12"),
    (32, "y19 + y3 + y15"),
    (33, "y19 + y4 + y15"),
    (34, "y19 - y13 + y15 + y12 + y5 - y1 + y3"),
    (35, "-y5 - y1 - y3 + y7 - y11 + y15 - y13"),
    (36, "-y1 + y7 - y4 - y13 + y15"),
    (37, "-y3 + y7 - y11 + y15 - y1 + y12 - y13"),
    (38, "-y1 + y7 + y15"),
    (39, "y1 - y12 + y13"),
    (40, "-y5 + y4 + y1 + y13 - y12"),
];

/// Reference reduced cubics in the g-context, keyed by their index.
pub(crate) const CUBICS: [(usize, &str); 12] = [
    (1, "g2*g8*g0 + g2*g8*g7 - g3*g6*g0 - g2*g3*g6 - g3*g6^2 - g8*g0*g3 - g3*g6*g8 + g3*g7*g0 + g2*g3*g7 + g6*g7*g3"),
    (2, "g0^2*g1 + g3*g1*g0 + g1^2*g0 + g2*g0*g1 - g5*g1*g0 + g0*g1*g6 + g8*g1*g0 + g2*g3*g6 + g2*g6*g1 + g2*g8*g6 + g3*g1*g6 + g1^2*g6 + g8*g1*g6 - g5*g3*g6 - g5*g1*g6 - g5*g8*g6"),
    (3, "- g8*g0*g3 + g8*g0*g4 + g2*g8*g0 - g3*g6*g0 - g2*g3*g6 - g3*g6^2 - g3*g6*g8 - g3*g6*g4"),
    (4, "g2*g0*g7 + g2^2*g7 + g2*g6*g7 + g2*g8*g7 + g2*g7*g4 - g0*g4*g6 - g8*g0*g4 + g0*g4*g7"),
    (5, "- g5*g3*g2 - g2*g5*g1 - g5*g8*g2 + g2*g3*g0 + g2*g0*g1 + g2*g8*g0 + g2*g3*g7 + g2*g1*g7 + g2*g8*g7 + g2*g3*g4 + g2*g1*g4 + g2*g8*g4 + g2^2*g3 + g2^2*g1 + g2^2*g8 + g5*g4*g0 - g5*g3*g0 - g5*g1*g0 - g5*g8*g0 + g5*g7*g0"),
    (6, "g5*g8*g1 - g8*g1*g4 - g2*g8*g1 - g5*g8*g7 + g4*g7*g8 + g2*g8*g7 + g5*g8^2 - g8^2*g4 - g2*g8^2 + g5*g8*g2 - g2*g8*g4 - g2^2*g8 + g5*g8*g6 - g8*g4*g6 - g2*g8*g6 - g5*g7*g6 - g5*g4*g6 + g5*g1*g6"),
    (7, "- g9*g2*g3 + g3*g9*g5 - g3*g9*g6 - g9*g3*g0 - g9*g3*g4 + 2*g9*g2*g4 - g4*g9*g5 + g4*g9*g6 + g9*g0*g4 + g9*g4^2 + g9*g2^2 - g9*g5*g2 + g9*g2*g6 + g9*g0*g2 - g5*g6*g0 - g5*g3*g6 - g5*g6*g9"),
    (8, "- g5*g3*g7 + g5*g4*g7 + g2*g5*g7 + g5*g7*g6 - g2*g3*g1 - g2*g0*g1 - g2*g1*g7 + g5*g3*g1 + g5*g1*g0 - g3*g1*g6 - g0*g1*g6 - g1*g7*g6 - g3*g1*g0 - g0^2*g1 - g1*g7*g0 - g1*g4*g3 - g1*g4*g0 - g1*g4*g7"),
    (9, "- g8*g1*g3 - g3*g1*g6 + g3*g8*g7 + g6*g7*g3 - g9*g3*g7 - g3*g8^2 - 2*g3*g6*g8 + g9*g3*g8 - g3*g2*g8 - g2*g3*g6 + g9*g2*g3 - g3*g6^2 + g3*g9*g6 - g3*g1*g0 - g2*g3*g1 - g0^2*g1 - g2*g0*g1 - g9*g0*g1 - g1*g7*g0 - g2*g1*g7 - g9*g1*g7"),
    (10, "g5*g8*g0 - g8*g0*g4 - g2*g8*g0 + g5*g8*g9 - g9*g8*g4 - g2*g9*g8 + g3*g6*g8 + g8*g0*g3 + g2*g3*g6 - g5*g3*g6 + g3*g6^2 + g3*g6*g0 + g3*g6*g4 - g9*g2*g3 + g3*g9*g5 - g3*g9*g6 - g9*g3*g0 - g9*g3*g4"),
    (11, "g2*g5*g1 + g5*g1^2 - g5^2*g1 + g5*g1*g0 + g5*g3*g1 - g2*g5*g7 - g5*g1*g7 + g5^2*g7 - g5*g7*g0 - g5*g3*g7 + g5*g8*g2 + g5*g8*g1 - g5^2*g8 + g5*g8*g0 + g5*g3*g8 - g3*g2*g8 - g2*g8*g0 - g2*g8*g7"),
    (19, "- g5*g1*g0 - g2*g5*g1 + g0^2*g1 + 2*g2*g0*g1 + g0*g1*g6 + g1*g7*g0 + g2*g1*g7 + g1*g7*g6 + g1*g4*g0 + g2*g1*g4 + g1*g4*g6 + g2^2*g1 + g2*g6*g1 - g5*g7*g6 - g5*g4*g6"),
];
