//! Experimentally determined Voronoi degrees of general hypersurfaces.

/// `(n, d, degree)` for general inhomogeneous hypersurfaces.
pub const INHOMOGENEOUS: &[(u32, i64, i64)] = &[
    (1, 2, 1), (1, 3, 2), (1, 4, 3), (1, 5, 4), (1, 6, 5), (1, 7, 6), (1, 8, 7),
    (2, 2, 2), (2, 3, 8), (2, 4, 16), (2, 5, 26), (2, 6, 38), (2, 7, 52), (2, 8, 68),
    (3, 2, 3), (3, 3, 23), (3, 4, 61), (3, 5, 123), (3, 6, 215), (3, 7, 343),
    (4, 2, 4), (4, 3, 56), (4, 4, 202), (4, 5, 520), (4, 6, 1112),
    (5, 2, 5), (5, 3, 125), (5, 4, 631),
    (6, 2, 6), (6, 3, 266), (6, 4, 1924),
    (7, 2, 7), (7, 3, 551),
];

/// `(n, d, degree)` for general homogeneous hypersurfaces (cones).
pub const HOMOGENEOUS: &[(u32, i64, i64)] = &[
    (2, 2, 2), (2, 3, 4), (2, 4, 6), (2, 5, 8), (2, 6, 10), (2, 7, 12), (2, 8, 14),
    (3, 2, 3), (3, 3, 13), (3, 4, 27), (3, 5, 45), (3, 6, 67), (3, 7, 93), (3, 8, 123),
    (4, 2, 4), (4, 3, 34), (4, 4, 96), (4, 5, 202),
    (5, 2, 5), (5, 3, 79), (5, 4, 309),
    (6, 2, 6), (6, 3, 172),
    (7, 2, 7), (7, 3, 361),
];

/// Sizes the `degree` command runs without `--force`.
pub fn is_desk_scale(n: u32, d: i64, homogeneous: bool) -> bool {
    // each whitelisted cell takes at most about ten seconds in a release build
    if homogeneous {
        matches!((n, d), (2, 2..=8) | (3, 2..=8) | (4, 2..=5) | (5, 2..=3) | (6, 2..=3) | (7, 2))
    } else {
        matches!((n, d), (1, 1..=8) | (2, 1..=8) | (3, 1..=7) | (4, 1..=4) | (5, 1..=3) | (6, 1..=3) | (7, 1..=2))
    }
}

/// Looks up a tabulated value.
pub fn tabulated(n: u32, d: i64, homogeneous: bool) -> Option<i64> {
    let t = if homogeneous { HOMOGENEOUS } else { INHOMOGENEOUS };
    t.iter().find(|&&(tn, td, _)| tn == n && td == d).map(|&(_, _, v)| v)
}
