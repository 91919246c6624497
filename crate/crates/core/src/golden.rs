//! Reference tables used as golden fixtures by the verification suites
//! and the acceptance tests: the generalized derangement and arrangement
//! triangles for n = 0..=9, the h_{n,m} polynomial table for n, m <= 4,
//! and a fully worked 6x6 matrix with its trace and spectrum.

/// D_{n,ell} for 0 <= ell <= n <= 9; row n lists ell = 0..=n.
pub const D_TRIANGLE: [&[u64]; 10] = [
    &[1],
    &[0, 1],
    &[1, 1, 2],
    &[2, 3, 4, 6],
    &[9, 11, 14, 18, 24],
    &[44, 53, 64, 78, 96, 120],
    &[265, 309, 362, 426, 504, 600, 720],
    &[1854, 2119, 2428, 2790, 3216, 3720, 4320, 5040],
    &[14833, 16687, 18806, 21234, 24024, 27240, 30960, 35280, 40320],
    &[
        133496, 148329, 165016, 183822, 205056, 229080, 256320, 287280, 322560, 362880,
    ],
];

/// A_{n,ell} for 0 <= ell <= n <= 9; row n lists ell = 0..=n.
pub const A_TRIANGLE: [&[u64]; 10] = [
    &[1],
    &[2, 1],
    &[5, 3, 2],
    &[16, 11, 8, 6],
    &[65, 49, 38, 30, 24],
    &[326, 261, 212, 174, 144, 120],
    &[1957, 1631, 1370, 1158, 984, 840, 720],
    &[13700, 11743, 10112, 8742, 7584, 6600, 5760, 5040],
    &[109601, 95901, 84158, 74046, 65304, 57720, 51120, 45360, 40320],
    &[
        986410, 876809, 780908, 696750, 622704, 557400, 499680, 448560, 403200, 362880,
    ],
];

/// Canonical strings of h_{n,m}(s,t) for n, m = 0..=4 (rows by n).
pub const H_TABLE: [[&str; 5]; 5] = [
    ["1", "t", "2*t^2", "6*t^3", "24*t^4"],
    [
        "s+t",
        "s*t+2*t^2",
        "2*s*t^2+6*t^3",
        "6*s*t^3+24*t^4",
        "24*s*t^4+120*t^5",
    ],
    [
        "s^2+2*s*t+2*t^2",
        "s^2*t+4*s*t^2+6*t^3",
        "2*s^2*t^2+12*s*t^3+24*t^4",
        "6*s^2*t^3+48*s*t^4+120*t^5",
        "24*s^2*t^4+240*s*t^5+720*t^6",
    ],
    [
        "s^3+3*s^2*t+6*s*t^2+6*t^3",
        "s^3*t+6*s^2*t^2+18*s*t^3+24*t^4",
        "2*s^3*t^2+18*s^2*t^3+72*s*t^4+120*t^5",
        "6*s^3*t^3+72*s^2*t^4+360*s*t^5+720*t^6",
        "24*s^3*t^4+360*s^2*t^5+2160*s*t^6+5040*t^7",
    ],
    [
        "s^4+4*s^3*t+12*s^2*t^2+24*s*t^3+24*t^4",
        "s^4*t+8*s^3*t^2+36*s^2*t^3+96*s*t^4+120*t^5",
        "2*s^4*t^2+24*s^3*t^3+144*s^2*t^4+480*s*t^5+720*t^6",
        "6*s^4*t^3+96*s^3*t^4+720*s^2*t^5+2880*s*t^6+5040*t^7",
        "24*s^4*t^4+480*s^3*t^5+4320*s^2*t^6+20160*s*t^7+40320*t^8",
    ],
];

/// The reference 6x6 matrix of (sI+tJ)^(2) at n = 4, rows and columns in
/// the subset order 12, 13, 14, 23, 24, 34.
pub const SITJ_N4_L2: [[&str; 6]; 6] = [
    [
        "s^2+2*s*t+2*t^2",
        "s*t+2*t^2",
        "s*t+2*t^2",
        "s*t+2*t^2",
        "s*t+2*t^2",
        "2*t^2",
    ],
    [
        "s*t+2*t^2",
        "s^2+2*s*t+2*t^2",
        "s*t+2*t^2",
        "s*t+2*t^2",
        "2*t^2",
        "s*t+2*t^2",
    ],
    [
        "s*t+2*t^2",
        "s*t+2*t^2",
        "s^2+2*s*t+2*t^2",
        "2*t^2",
        "s*t+2*t^2",
        "s*t+2*t^2",
    ],
    [
        "s*t+2*t^2",
        "s*t+2*t^2",
        "2*t^2",
        "s^2+2*s*t+2*t^2",
        "s*t+2*t^2",
        "s*t+2*t^2",
    ],
    [
        "s*t+2*t^2",
        "2*t^2",
        "s*t+2*t^2",
        "s*t+2*t^2",
        "s^2+2*s*t+2*t^2",
        "s*t+2*t^2",
    ],
    [
        "2*t^2",
        "s*t+2*t^2",
        "s*t+2*t^2",
        "s*t+2*t^2",
        "s*t+2*t^2",
        "s^2+2*s*t+2*t^2",
    ],
];

/// Trace of the example matrix above.
pub const SITJ_N4_L2_TRACE: &str = "6*s^2+12*s*t+12*t^2";

/// Spectrum of the example matrix: (eigenvalue, multiplicity) by
/// ascending alpha.
pub const SITJ_N4_L2_SPECTRUM: [(&str, usize); 3] =
    [("s^2+6*s*t+12*t^2", 1), ("s^2+2*s*t", 3), ("s^2", 2)];

/// Integer spectra of the two worked 10x10 examples at n = 5, ell = 3:
/// (eigenvalue, multiplicity) by ascending alpha.
pub const J_MINUS_I_N5_L3_SPECTRUM: [(i64, usize); 3] = [(32, 1), (-3, 4), (0, 5)];
pub const I_PLUS_J_N5_L3_SPECTRUM: [(i64, usize); 3] = [(106, 1), (11, 4), (2, 5)];
