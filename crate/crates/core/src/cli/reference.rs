//! Enumerator prefixes as they are usually displayed, used by
//! `reproduce families`.

use crate::wefsym::ShadowCase;

#[derive(Clone, Copy, Debug)]
pub enum Source {
    /// `W_C` or `W_S` of a named family.
    Family {
        n: usize,
        dmin: usize,
        case: ShadowCase,
        shadow: bool,
    },
    /// `W⁽¹⁾ − W⁽³⁾` for length `24k + 10`.
    C1Basis(usize),
    /// `W⁽¹⁾` for length `24k + 10`.
    W1(usize),
    /// `W_S` of the `d(S) ≥ 9` family at `(α, β) = (0, −656)`.
    Dgh,
}

#[derive(Clone, Copy, Debug)]
pub struct Display {
    pub name: &'static str,
    pub source: Source,
    pub terms: &'static [(usize, &'static str)],
}

const fn fam(n: usize, dmin: usize, case: ShadowCase, shadow: bool) -> Source {
    Source::Family {
        n,
        dmin,
        case,
        shadow,
    }
}

use ShadowCase::{AtLeast5, AtLeast9, Weight1, Weight5};

pub const GLEASON_82: [i64; 7] = [1, -41, 615, -4182, 13161, -18040, 9512];

pub const DISPLAYS: &[Display] = &[
    Display {
        name: "W_C(82,1)",
        source: fam(82, 14, Weight1, false),
        terms: &[(0, "1"), (14, "560"), (16, "60724"), (18, "233545")],
    },
    Display {
        name: "W_S(82,1)",
        source: fam(82, 14, Weight1, true),
        terms: &[(1, "1"), (13, "560"), (17, "294269"), (21, "33367568")],
    },
    Display {
        name: "W_C(82,2)",
        source: fam(82, 14, Weight5, false),
        terms: &[
            (0, "1"),
            (14, "3280 + 2β"),
            (16, "36244 + 128α - 2β"),
            (18, "506153 - 896α - 26β"),
        ],
    },
    Display {
        name: "W_S(82,2)",
        source: fam(82, 14, Weight5, true),
        terms: &[
            (5, "1"),
            (9, "-18 + α"),
            (13, "153 - 16α - β"),
            (17, "303568 + 120α + 14β"),
        ],
    },
    Display {
        name: "W_C(82,3)",
        source: fam(82, 14, AtLeast9, false),
        terms: &[
            (0, "1"),
            (14, "3280 + 2β"),
            (16, "36244 + 128α - 2β"),
            (18, "514345 - 896α - 26β"),
        ],
    },
    Display {
        name: "W_S(82,3)",
        source: fam(82, 14, AtLeast9, true),
        terms: &[
            (9, "α"),
            (13, "-16α - β"),
            (17, "304384 + 120α + 14β"),
            (21, "33293312 - 560α - 91β"),
        ],
    },
    Display {
        name: "W_S(82,3) at (0,-656)",
        source: Source::Dgh,
        terms: &[(13, "656"), (17, "295200"), (21, "33353008")],
    },
    Display {
        name: "W_C(58)",
        source: fam(58, 10, AtLeast5, false),
        terms: &[(0, "1"), (10, "319 - 24β - 2γ"), (12, "3132 + 152β + 2γ")],
    },
    Display {
        name: "W_S(58)",
        source: fam(58, 10, AtLeast5, true),
        terms: &[
            (5, "β"),
            (9, "γ"),
            (13, "24128 - 54β - 10γ"),
            (17, "1469952 + 320β + 45γ"),
        ],
    },
    Display {
        name: "W_C(82)",
        source: fam(82, 14, AtLeast5, false),
        terms: &[
            (0, "1"),
            (14, "3280 + 2c"),
            (16, "36244 + 128b - 2c"),
            (18, "514345 - 8192a - 896b - 26c"),
        ],
    },
    Display {
        name: "W_S(82)",
        source: fam(82, 14, AtLeast5, true),
        terms: &[
            (5, "a"),
            (9, "-18a + b"),
            (13, "153a - 16b - c"),
            (17, "304384 - 816a + 120b + 14c"),
        ],
    },
    Display {
        name: "W_C(106)",
        source: fam(106, 18, AtLeast5, false),
        terms: &[
            (0, "1"),
            (18, "35245 + 2d"),
            (20, "416262 + 128c - 2d"),
            (22, "6586310 + 8192b - 896c - 34d"),
            (24, "86626645 + 524288a - 106496b + 1024c + 34d"),
        ],
    },
    Display {
        name: "W_S(106)",
        source: fam(106, 18, AtLeast5, true),
        terms: &[
            (5, "a"),
            (9, "-24a - b"),
            (13, "276a + 22b + c"),
            (17, "-2024a - 231b - 20c - d"),
        ],
    },
    Display {
        name: "W_C(130)",
        source: fam(130, 22, AtLeast5, false),
        terms: &[
            (0, "1"),
            (22, "388700 + 2e"),
            (24, "4791150 + 128d - 2e"),
            (26, "81082890 + 8192c - 896d - 42e"),
            (28, "1200197180 + 524288b - 106496c + 512d + 42e"),
            (
                30,
                "14196225992 - 33554432a - 9961472b + 532480c + 10752d + 420e",
            ),
        ],
    },
    Display {
        name: "W_S(130)",
        source: fam(130, 22, AtLeast5, true),
        terms: &[
            (5, "a"),
            (9, "-30a + b"),
            (13, "435a - 28b - c"),
            (17, "-4060a + 378b + 26c + d"),
            (21, "27405a - 3276b - 325c - 24d - e"),
        ],
    },
    Display {
        name: "W1-W3 (k=2)",
        source: Source::C1Basis(2),
        terms: &[
            (1, "b0"),
            (5, "36b0 + b1"),
            (9, "-415b0 - 10b1"),
            (13, "-39056b0 - 724b1"),
            (17, "-742131b0 - 3694b1"),
        ],
    },
    Display {
        name: "W1 (k=2)",
        source: Source::W1(2),
        terms: &[
            (5, "b1/2 + β/2"),
            (9, "-5b1 + γ/2"),
            (13, "12064 - 362b1 - 27β - 5γ"),
            (17, "734976 - 1847b1 + 160β + 45γ/2"),
        ],
    },
    Display {
        name: "W1-W3 (k=3)",
        source: Source::C1Basis(3),
        terms: &[
            (1, "b0"),
            (5, "78b0 + b1"),
            (9, "1688b0 + 32b1 + b2"),
            (13, "-32382b0 - 553b1 - 14b2"),
            (17, "-2525349b0 - 37184b1 - 678b2"),
        ],
    },
    Display {
        name: "W1 (k=3)",
        source: Source::W1(3),
        terms: &[
            (5, "a/2 + b1/2"),
            (9, "-9a + 16b1 + b2/2 + b/2"),
            (13, "153a/2 - 553b1/2 - c/2 - 7b2 - 8b"),
            (17, "152192 - 408a - 18592b1 - 339b2 + 60b + 7c"),
        ],
    },
    Display {
        name: "W1-W3 (k=4)",
        source: Source::C1Basis(4),
        terms: &[
            (1, "b0"),
            (5, "120b0 + b1"),
            (9, "5555b0 + 74b1 + b2"),
            (13, "87440b0 + 1382b1 + 28b2 + b3"),
            (17, "-2666610b0 - 38670b1 - 675b2 - 18b3"),
        ],
    },
    Display {
        name: "W1 (k=4)",
        source: Source::W1(4),
        terms: &[
            (5, "a/2 + b1/2"),
            (9, "-12a + 37b1 + b2/2 - b/2"),
            (13, "138a + 691b1 + 14b2 + 11b + b3/2 + c/2"),
            (17, "-1012a - 19335b1 - 9b3 - 10c - 675b2/2 - 231b/2 - d/2"),
        ],
    },
    Display {
        name: "W1-W3 (k=5)",
        source: Source::C1Basis(5),
        terms: &[
            (1, "b0"),
            (5, "162b0 + b1"),
            (9, "11186b0 + 116b1 + b2"),
            (13, "394498b0 + 5081b1 + 70b2 + b3"),
            (17, "4628826b0 + 65936b1 + 1092b2 + 24b3 + b4"),
            (21, "-226397710b0 - 2983519b1 - 43758b2 - 781b3 - 22b4"),
        ],
    },
    Display {
        name: "W1 (k=5)",
        source: Source::W1(5),
        terms: &[
            (5, "a/2 + b1/2"),
            (9, "-15a + 58b1 + b2/2 + b/2"),
            (13, "435a/2 + 5081b1/2 + 35b2 + b3/2 - 14b - c/2"),
            (17, "-2030a + 32968b1 + 546b2 + 12b3 + b4/2 + 189b + 13c + d/2"),
            (
                21,
                "27405a/2 - 2983519b1/2 - 21879b2 - 781b3/2 - 11b4 - 1638b - 325c/2 - 12d - e/2",
            ),
        ],
    },
];

/// Parameter forced even for each `k`, by the name it has in the family.
pub const PARITY: [(usize, &str); 4] = [(2, "γ"), (3, "c"), (4, "d"), (5, "e")];
