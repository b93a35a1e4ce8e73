//! The fifty neighbors of `C₈₂`, by the support of the vector `x` used in
//! `<C₈₂ ∩ <x>^⊥, x>`.
//!
//! The same rows ship as `data/table1.json`; a test keeps the two in step.

use super::{Family, NeighborSpec};

type Row = (usize, [usize; 14], Family, i64, i64);

const ROWS: [Row; 50] = [
    (1, [2, 7, 10, 14, 47, 51, 54, 56, 58, 59, 62, 64, 72, 79], Family::W2, 18, -750),
    (2, [2, 7, 12, 13, 14, 42, 47, 56, 57, 59, 61, 71, 73, 79], Family::W3, 1, -650),
    (3, [6, 9, 11, 42, 44, 47, 51, 56, 59, 61, 75, 77, 78, 79], Family::W3, 1, -668),
    (4, [5, 9, 45, 49, 55, 59, 61, 63, 66, 70, 71, 72, 75, 81], Family::W3, 1, -680),
    (5, [2, 3, 9, 13, 14, 39, 40, 47, 49, 56, 57, 64, 77, 82], Family::W3, 1, -682),
    (6, [2, 3, 9, 11, 12, 45, 46, 49, 53, 64, 72, 75, 77, 80], Family::W3, 1, -686),
    (7, [5, 43, 46, 49, 50, 51, 63, 65, 66, 71, 72, 73, 77, 81], Family::W3, 1, -688),
    (8, [3, 4, 5, 7, 9, 45, 48, 55, 56, 58, 61, 66, 73, 77], Family::W3, 1, -692),
    (9, [3, 7, 40, 46, 49, 52, 54, 57, 58, 59, 72, 74, 75, 79], Family::W3, 1, -694),
    (10, [3, 11, 14, 44, 45, 46, 49, 51, 59, 71, 72, 76, 77, 81], Family::W3, 1, -696),
    (11, [6, 7, 10, 12, 46, 51, 53, 55, 58, 70, 71, 73, 78, 82], Family::W3, 1, -698),
    (12, [5, 8, 47, 51, 52, 57, 61, 66, 67, 71, 72, 74, 79, 80], Family::W3, 1, -700),
    (13, [2, 3, 7, 8, 9, 11, 40, 44, 49, 52, 55, 63, 77, 82], Family::W3, 1, -702),
    (14, [11, 12, 45, 46, 49, 50, 52, 55, 60, 62, 66, 70, 71, 81], Family::W3, 1, -704),
    (15, [3, 44, 45, 46, 58, 60, 62, 64, 65, 67, 68, 73, 74, 77], Family::W3, 1, -712),
    (16, [2, 4, 10, 43, 45, 46, 49, 54, 64, 66, 76, 78, 80, 81], Family::W3, 1, -722),
    (17, [2, 4, 9, 10, 45, 56, 57, 59, 63, 64, 67, 68, 70, 76], Family::W3, 1, -738),
    (18, [3, 6, 9, 10, 40, 47, 53, 54, 55, 68, 73, 76, 80, 81], Family::W3, 1, -748),
    (19, [2, 11, 13, 37, 47, 51, 52, 55, 70, 77, 78, 79, 80, 82], Family::W3, 2, -672),
    (20, [3, 9, 11, 47, 49, 59, 60, 62, 67, 68, 74, 76, 81, 82], Family::W3, 2, -720),
    (21, [4, 8, 9, 40, 48, 49, 52, 54, 55, 66, 67, 68, 73, 81], Family::W3, 2, -732),
    (22, [5, 6, 8, 11, 44, 45, 53, 56, 57, 61, 62, 64, 65, 66], Family::W3, 2, -734),
    (23, [4, 7, 8, 9, 46, 57, 58, 61, 63, 68, 71, 73, 78, 81], Family::W3, 0, -640),
    (24, [2, 3, 5, 10, 40, 44, 57, 58, 60, 63, 65, 71, 76, 79], Family::W3, 0, -650),
    (25, [2, 5, 6, 8, 50, 51, 58, 63, 64, 66, 67, 71, 73, 81], Family::W3, 0, -660),
    (26, [2, 3, 9, 46, 54, 56, 59, 60, 61, 62, 67, 76, 78, 82], Family::W3, 0, -662),
    (27, [4, 5, 38, 40, 48, 53, 56, 57, 62, 64, 66, 69, 71, 76], Family::W3, 0, -664),
    (28, [3, 7, 8, 10, 39, 50, 51, 62, 66, 67, 70, 73, 77, 82], Family::W3, 0, -668),
    (29, [2, 43, 45, 46, 50, 51, 52, 53, 61, 69, 72, 74, 77, 81], Family::W3, 0, -672),
    (30, [6, 7, 9, 40, 58, 61, 63, 70, 73, 77, 79, 80, 81, 82], Family::W3, 0, -676),
    (31, [3, 4, 5, 7, 43, 45, 48, 50, 54, 59, 64, 70, 71, 81], Family::W3, 0, -678),
    (32, [6, 11, 50, 53, 54, 56, 59, 61, 64, 68, 69, 72, 74, 76], Family::W3, 0, -680),
    (33, [8, 11, 12, 35, 49, 50, 53, 56, 57, 58, 62, 72, 77, 82], Family::W3, 0, -684),
    (34, [5, 11, 46, 56, 57, 58, 60, 62, 63, 64, 65, 70, 71, 79], Family::W3, 0, -686),
    (35, [10, 11, 13, 14, 52, 54, 60, 64, 70, 71, 72, 76, 77, 80], Family::W3, 0, -688),
    (36, [5, 9, 45, 49, 56, 57, 61, 62, 63, 64, 67, 70, 75, 81], Family::W3, 0, -690),
    (37, [2, 6, 8, 9, 44, 45, 48, 56, 66, 68, 75, 77, 80, 81], Family::W3, 0, -692),
    (38, [4, 8, 10, 42, 44, 54, 58, 60, 63, 65, 68, 77, 79, 80], Family::W3, 0, -694),
    (39, [3, 9, 43, 44, 49, 50, 51, 52, 55, 61, 65, 71, 75, 81], Family::W3, 0, -696),
    (40, [6, 7, 13, 42, 44, 49, 50, 52, 54, 55, 57, 63, 72, 74], Family::W3, 0, -698),
    (41, [2, 4, 8, 13, 45, 46, 49, 51, 58, 65, 66, 73, 74, 80], Family::W3, 0, -700),
    (42, [3, 9, 12, 45, 54, 55, 59, 64, 66, 72, 74, 75, 78, 80], Family::W3, 0, -706),
    (43, [2, 4, 9, 10, 45, 55, 56, 57, 60, 64, 67, 69, 72, 74], Family::W3, 0, -708),
    (44, [4, 9, 11, 40, 45, 46, 55, 57, 63, 64, 65, 71, 72, 74], Family::W3, 0, -710),
    (45, [3, 44, 45, 46, 57, 60, 61, 62, 63, 70, 71, 74, 75, 77], Family::W3, 0, -712),
    (46, [7, 40, 44, 45, 52, 53, 55, 56, 67, 68, 71, 76, 79, 81], Family::W3, 0, -716),
    (47, [3, 5, 9, 12, 42, 45, 47, 51, 53, 55, 60, 64, 68, 75], Family::W3, 0, -718),
    (48, [6, 39, 44, 45, 54, 60, 62, 64, 65, 75, 77, 78, 79, 81], Family::W3, 0, -720),
    (49, [2, 5, 9, 43, 60, 61, 62, 64, 68, 71, 74, 76, 80, 81], Family::W3, 0, -724),
    (50, [3, 7, 9, 13, 43, 46, 48, 49, 50, 52, 58, 60, 63, 81], Family::W3, 0, -728),
];

/// All fifty rows, in table order.
#[must_use]
pub fn table1() -> Vec<NeighborSpec> {
    ROWS.iter()
        .map(|&(id, support, family, alpha, beta)| NeighborSpec {
            id,
            support: support.to_vec(),
            family,
            alpha,
            beta,
        })
        .collect()
}

/// Shipped copy of the table.
pub const TABLE1_JSON: &str = include_str!("../../data/table1.json");
