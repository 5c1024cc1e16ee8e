//! Case table. Braidings are exponents of `z`, a primitive 12th root of unity:
//! `q[i][j] = z^e` means `q_(i+1)(j+1) = z^e`.

pub(crate) struct CaseData {
    pub id: &'static str,
    pub family: &'static str,
    pub q: [[i64; 2]; 2],
    pub conditions: &'static str,
    pub lset: &'static [&'static str],
    pub heights: &'static [(&'static str, u32)],
    pub nichols: &'static [&'static str],
    pub lifting: Option<&'static [&'static str]>,
    pub dim: u64,
    /// A counterterm left open, with the head it belongs to.
    pub unknown: Option<(&'static str, &'static str)>,
}

const A2_L: &[&str] = &["1", "12", "2"];
const B2_L: &[&str] = &["1", "112", "12", "2"];
const R8_1_L: &[&str] = &["1", "112", "12", "122", "2"];
const R8_2_L: &[&str] = &["1", "112", "11212", "12", "2"];
const R8_3_L: &[&str] = &["1", "1112", "112", "12", "2"];

pub(crate) const S12: &str = "-3 mu2 ((lambda11212 (1 - q11) + 9 mu1 mu2 q11) [x1 x2]^2 x1 g2^2 \
    - q11 (lambda11212 (1 - q11) + 9 mu1 mu2 q11) [x1 x2] [x1 x1 x2] g2^2 \
    + (lambda11212^2 q11^2 + 3 mu1 mu2 lambda11212 (1 - q11^2) - 9 mu1^2 mu2^2) g1^6 g2^6 \
    + 3 mu1 mu2 (lambda11212 (1 - q11^2) - 3 mu1 mu2) g1^3 g2^6 \
    + lambda11212 (3 mu1 mu2 (q11 - 1) + lambda11212) g1^3 g2^4 \
    - 9 mu1^2 mu2^2 g2^6 \
    + 3 mu1 mu2 (lambda11212 (q11 - 1) - 9 mu1 mu2 q11) g2^4 \
    + q11 (lambda11212^2 - 6 mu1 mu2 lambda11212 (1 - q11) - 27 mu1^2 mu2^2 q11) g2^2)";

pub(crate) const S112: &str = "-2 mu1 (2 (-lambda11212 + 4 mu1 mu2) q11 (1 - q11) x2 [x1 x1 x2]^3 g1^3 g2^2 \
    + 2 (lambda11212 - 4 mu1 mu2) q11 (1 - q11) [x1 x2]^2 [x1 x1 x2]^2 g1^3 g2^2 \
    + 2 (lambda11212^2 - 8 mu1 mu2 lambda11212 + 16 mu1^2 mu2^2) q11 (1 - q11) [x1 x2] [x1 x1 x2] g1^6 g2^4 \
    + 8 mu1 mu2 (lambda11212 - 4 mu1 mu2) q11 (1 - q11) [x1 x2] [x1 x1 x2] g1^3 g2^4 \
    + 2 lambda11212 (-lambda11212 + 4 mu1 mu2) q11 (1 - q11) [x1 x2] [x1 x1 x2] g1^3 g2^2 \
    + 2 (-lambda11212^3 + 6 mu1 mu2 lambda11212^2 - 16 mu1^2 mu2^2 lambda11212 + 16 mu1^3 mu2^3) g1^12 g2^6 \
    + (-lambda11212^3 + 12 mu1 mu2 lambda11212^2 - 48 mu1^2 mu2^2 lambda11212 + 64 mu1^3 mu2^3) q11 (1 - q11) g1^9 g2^6 \
    + 10 mu1 mu2 (-lambda11212^2 + 8 mu1 mu2 lambda11212 - 16 mu1^2 mu2^2) g1^6 g2^6 \
    + 2 (lambda11212^3 - 7 mu1 mu2 lambda11212^2 + 8 mu1^2 mu2^2 lambda11212 + 16 mu1^3 mu2^3) g1^6 g2^4 \
    + 16 mu1^2 mu2^2 (lambda11212 - 4 mu1 mu2) q11 (1 - q11) g1^3 g2^6 \
    + 8 mu1 mu2 lambda11212 (-lambda11212 + 4 mu1 mu2) q11 (1 - q11) g1^3 g2^4 \
    + 32 mu1^3 mu2^3 g2^6 \
    + lambda11212^2 (lambda11212 - 4 mu1 mu2) q11 (1 - q11) g1^3 g2^2 \
    + 32 mu1^2 mu2^2 (-lambda11212 + mu1 mu2) g2^4 \
    + 4 mu1 mu2 (3 lambda11212^2 - 8 mu1 mu2 lambda11212 + 8 mu1^2 mu2^2) g2^2)";

const R8_1_SERRE: &str = "[x1 x1 x2 x2] - 1/2 q11 q12 (q12 q21 - q11) (1 - q12 q21) [x1 x2]^2";

pub(crate) const CASES: &[CaseData] = &[
    CaseData {
        id: "A1A1",
        family: "A1xA1",
        q: [[4, 8], [4, 8]],
        conditions: "q12 q21 = 1; ord q11 = 3; ord q22 = 3",
        lset: &["1", "2"],
        heights: &[("1", 3), ("2", 3)],
        nichols: &["[x1 x2]", "x1^3", "x2^3"],
        lifting: Some(&["[x1 x2] - lambda12 (1 - g1 g2)", "x1^3 - mu1 (1 - g1^3)", "x2^3 - mu2 (1 - g2^3)"]),
        dim: 9,
        unknown: None,
    },
    CaseData {
        id: "A2-1a",
        family: "A2",
        q: [[6, 0], [6, 6]],
        conditions: "q12 q21 = q11^-1; q22 = q11; q11 = -1",
        lset: A2_L,
        heights: &[("1", 2), ("12", 2), ("2", 2)],
        nichols: &["x1^2", "[x1 x2]^2", "x2^2"],
        lifting: Some(&[
            "x1^2 - mu1 (1 - g1^2)",
            "[x1 x2]^2 - 4 mu1 q21 x2^2 - mu12 (1 - g1^2 g2^2)",
            "x2^2 - mu2 (1 - g2^2)",
        ]),
        dim: 8,
        unknown: None,
    },
    CaseData {
        id: "A2-1b",
        family: "A2",
        q: [[4, 4], [4, 4]],
        conditions: "q12 q21 = q11^-1; q22 = q11; ord q11 = 3",
        lset: A2_L,
        heights: &[("1", 3), ("12", 3), ("2", 3)],
        nichols: &["[x1 x1 x2]", "[x1 x2 x2]", "x1^3", "[x1 x2]^3", "x2^3"],
        lifting: Some(&[
            "[x1 x1 x2] - lambda112 (1 - g1^2 g2)",
            "[x1 x2 x2] - lambda122 (1 - g1 g2^2)",
            "x1^3 - mu1 (1 - g1^3)",
            "[x1 x2]^3 + (1 - q11) q11 lambda112 [x1 x2 x2] - mu1 (q11 - 1)^3 q21^3 x2^3 - mu12 (1 - g1^3 g2^3)",
            "x2^3 - mu2 (1 - g2^3)",
        ]),
        dim: 27,
        unknown: None,
    },
    CaseData {
        id: "A2-1c",
        family: "A2",
        q: [[3, 0], [9, 3]],
        conditions: "q12 q21 = q11^-1; q22 = q11; ord q11 = 4",
        lset: A2_L,
        heights: &[("1", 4), ("12", 4), ("2", 4)],
        nichols: &["[x1 x1 x2]", "[x1 x2 x2]", "x1^4", "[x1 x2]^4", "x2^4"],
        lifting: Some(&[
            "[x1 x1 x2]",
            "[x1 x2 x2]",
            "x1^4 - mu1 (1 - g1^4)",
            "[x1 x2]^4 - mu1 (q11 - 1)^4 q21^6 x2^4 - mu12 (1 - g1^4 g2^4)",
            "x2^4 - mu2 (1 - g2^4)",
        ]),
        dim: 64,
        unknown: None,
    },
    CaseData {
        id: "A2-2a",
        family: "A2",
        q: [[4, 0], [8, 6]],
        conditions: "q12 q21 = q11^-1; q22 = -1; ord q11 = 3",
        lset: A2_L,
        heights: &[("1", 3), ("12", 2), ("2", 2)],
        nichols: &["[x1 x1 x2]", "x1^3", "x2^2"],
        lifting: Some(&["[x1 x1 x2]", "x1^3 - mu1 (1 - g1^3)", "x2^2 - mu2 (1 - g2^2)"]),
        dim: 12,
        unknown: None,
    },
    CaseData {
        id: "A2-2b",
        family: "A2",
        q: [[3, 6], [3, 6]],
        conditions: "q12 q21 = q11^-1; q22 = -1; ord q11 = 4",
        lset: A2_L,
        heights: &[("1", 4), ("12", 2), ("2", 2)],
        nichols: &["[x1 x1 x2]", "x1^4", "x2^2"],
        lifting: Some(&["[x1 x1 x2] - lambda112 (1 - g1^2 g2)", "x1^4 - mu1 (1 - g1^4)", "x2^2 - mu2 (1 - g2^2)"]),
        dim: 16,
        unknown: None,
    },
    CaseData {
        id: "A2-3a",
        family: "A2",
        q: [[6, 8], [0, 4]],
        conditions: "q11 = -1; q12 q21 = q22^-1; ord q22 = 3",
        lset: A2_L,
        heights: &[("1", 2), ("12", 2), ("2", 3)],
        nichols: &["[x1 x2 x2]", "x1^2", "x2^3"],
        lifting: Some(&["[x1 x2 x2]", "x1^2 - mu1 (1 - g1^2)", "x2^3 - mu2 (1 - g2^3)"]),
        dim: 12,
        unknown: None,
    },
    CaseData {
        id: "A2-3b",
        family: "A2",
        q: [[6, 3], [6, 3]],
        conditions: "q11 = -1; q12 q21 = q22^-1; ord q22 = 4",
        lset: A2_L,
        heights: &[("1", 2), ("12", 2), ("2", 4)],
        nichols: &["[x1 x2 x2]", "x1^2", "x2^4"],
        lifting: Some(&["[x1 x2 x2] - lambda122 (1 - g1 g2^2)", "x1^2 - mu1 (1 - g1^2)", "x2^4 - mu2 (1 - g2^4)"]),
        dim: 16,
        unknown: None,
    },
    CaseData {
        id: "A2-4a",
        family: "A2",
        q: [[6, 2], [0, 6]],
        conditions: "q11 = -1; q22 = -1; ord q12 q21 = 6; q12^2 != 1",
        lset: A2_L,
        heights: &[("1", 2), ("12", 6), ("2", 2)],
        nichols: &["x1^2", "[x1 x2]^6", "x2^2"],
        lifting: Some(&["x1^2 - mu1 (1 - g1^2)", "[x1 x2]^6 - mu12 (1 - g1^6 g2^6)", "x2^2"]),
        dim: 24,
        unknown: None,
    },
    CaseData {
        id: "A2-4b",
        family: "A2",
        q: [[6, 6], [10, 6]],
        conditions: "q11 = -1; q22 = -1; ord q12 q21 = 3; q12^2 = 1",
        lset: A2_L,
        heights: &[("1", 2), ("12", 3), ("2", 2)],
        nichols: &["x1^2", "[x1 x2]^3", "x2^2"],
        lifting: Some(&["x1^2", "[x1 x2]^3 - mu12 (1 - g1^3 g2^3)", "x2^2 - mu2 (1 - g2^2)"]),
        dim: 12,
        unknown: None,
    },
    CaseData {
        id: "B2-1-N3",
        family: "B2",
        q: [[4, 0], [4, 8]],
        conditions: "q12 q21 = q11^-2; q22 = q11^2; ord q11 = 3",
        lset: B2_L,
        heights: &[("1", 3), ("112", 3), ("12", 3), ("2", 3)],
        nichols: &["[x1 x2 x2]", "x1^3", "[x1 x1 x2]^3", "[x1 x2]^3", "x2^3"],
        lifting: None,
        dim: 81,
        unknown: None,
    },
    CaseData {
        id: "B2-1a",
        family: "B2",
        q: [[3, 3], [3, 6]],
        conditions: "q12 q21 = q11^-2; q22 = q11^2; ord q11 = 4; q12^2 != 1",
        lset: B2_L,
        heights: &[("1", 4), ("112", 2), ("12", 4), ("2", 2)],
        nichols: &["[x1 x1 x1 x2]", "x1^4", "[x1 x1 x2]^2", "[x1 x2]^4", "x2^2"],
        lifting: Some(&[
            "[x1 x1 x1 x2]",
            "x1^4 - mu1 (1 - g1^4)",
            "[x1 x1 x2]^2",
            "[x1 x2]^4 - mu12 (1 - g1^4 g2^4)",
            "x2^2",
        ]),
        dim: 64,
        unknown: None,
    },
    CaseData {
        id: "B2-1b",
        family: "B2",
        q: [[3, 0], [6, 6]],
        conditions: "q12 q21 = q11^-2; q22 = q11^2; ord q11 = 4; q12^2 = 1",
        lset: B2_L,
        heights: &[("1", 4), ("112", 2), ("12", 4), ("2", 2)],
        nichols: &["[x1 x1 x1 x2]", "x1^4", "[x1 x1 x2]^2", "[x1 x2]^4", "x2^2"],
        lifting: Some(&[
            "[x1 x1 x1 x2]",
            "x1^4 - mu1 (1 - g1^4)",
            "[x1 x1 x2]^2 - 8 q11 mu1 x2^2 - mu112 (1 - g1^4 g2^2)",
            "[x1 x2]^4 - 16 mu1 x2^4 + 4 mu112 q11 x2^2 - mu12 (1 - g1^4 g2^4)",
            "x2^2 - mu2 (1 - g2^2)",
        ]),
        dim: 64,
        unknown: None,
    },
    CaseData {
        id: "B2-2a",
        family: "B2",
        q: [[4, 4], [0, 6]],
        conditions: "q12 q21 = q11^-2; q22 = -1; ord q11 = 3; q12^2 != 1",
        lset: B2_L,
        heights: &[("1", 3), ("112", 2), ("12", 6), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2]", "x1^3", "[x1 x2]^6", "x2^2"],
        lifting: Some(&["[x1 x1 x2 x1 x2]", "x1^3 - mu1 (1 - g1^3)", "[x1 x2]^6 - mu12 (1 - g1^6 g2^6)", "x2^2"]),
        dim: 72,
        unknown: None,
    },
    CaseData {
        id: "B2-2b",
        family: "B2",
        q: [[4, 6], [10, 6]],
        conditions: "q12 q21 = q11^-2; q22 = -1; ord q11 = 3; q12 = -1",
        lset: B2_L,
        heights: &[("1", 3), ("112", 2), ("12", 6), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2]", "x1^3", "[x1 x2]^6", "x2^2"],
        lifting: Some(&["[x1 x1 x2 x1 x2]", "x1^3", "[x1 x2]^6 - mu12 (1 - g1^6 g2^6)", "x2^2 - mu2 (1 - g2^2)"]),
        dim: 72,
        unknown: None,
    },
    CaseData {
        id: "B2-2c",
        family: "B2",
        q: [[4, 0], [4, 6]],
        conditions: "q12 q21 = q11^-2; q22 = -1; ord q11 = 3; q12 = 1",
        lset: B2_L,
        heights: &[("1", 3), ("112", 2), ("12", 6), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2]", "x1^3", "[x1 x2]^6", "x2^2"],
        lifting: Some(&[
            "[x1 x1 x2 x1 x2] + 3 mu1 (1 - q11) x2^2 - lambda11212 (1 - g1^3 g2^2)",
            "x1^3 - mu1 (1 - g1^3)",
            "[x1 x2]^6 - S12 - mu12 (1 - g1^6 g2^6)",
            "x2^2 - mu2 (1 - g2^2)",
        ]),
        dim: 72,
        unknown: None,
    },
    CaseData {
        id: "B2-2d",
        family: "B2",
        q: [[2, 2], [6, 6]],
        conditions: "q12 q21 = q11^-2; q22 = -1; ord q11 = 6; q12^2 != 1",
        lset: B2_L,
        heights: &[("1", 6), ("112", 2), ("12", 3), ("2", 2)],
        nichols: &["[x1 x1 x1 x2]", "x1^6", "[x1 x2]^3", "x2^2"],
        lifting: Some(&["[x1 x1 x1 x2]", "x1^6 - mu1 (1 - g1^6)", "[x1 x2]^3 - mu12 (1 - g1^3 g2^3)", "x2^2"]),
        dim: 72,
        unknown: None,
    },
    CaseData {
        id: "B2-3a",
        family: "B2",
        q: [[4, 2], [4, 6]],
        conditions: "ord q11 = 3; q12 q21 = q22^-1; q22 = -1; q12^2 != 1",
        lset: B2_L,
        heights: &[("1", 3), ("112", 6), ("12", 3), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2]", "x1^3", "[x1 x1 x2]^6", "x2^2"],
        lifting: Some(&["[x1 x1 x2 x1 x2]", "x1^3 - mu1 (1 - g1^3)", "[x1 x1 x2]^6 - mu112 (1 - g1^12 g2^6)", "x2^2"]),
        dim: 108,
        unknown: None,
    },
    CaseData {
        id: "B2-3b",
        family: "B2",
        q: [[4, 0], [6, 6]],
        conditions: "ord q11 = 3; q12 q21 = q22^-1; q22 = -1; q12 = 1",
        lset: B2_L,
        heights: &[("1", 3), ("112", 6), ("12", 3), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2]", "x1^3", "[x1 x1 x2]^6", "x2^2"],
        lifting: Some(&["[x1 x1 x2 x1 x2]", "x1^3", "[x1 x1 x2]^6 - mu112 (1 - g1^12 g2^6)", "x2^2 - mu2 (1 - g2^2)"]),
        dim: 108,
        unknown: None,
    },
    CaseData {
        id: "B2-3c",
        family: "B2",
        q: [[4, 6], [0, 6]],
        conditions: "ord q11 = 3; q12 q21 = q22^-1; q22 = -1; q12 = -1",
        lset: B2_L,
        heights: &[("1", 3), ("112", 6), ("12", 3), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2]", "x1^3", "[x1 x1 x2]^6", "x2^2"],
        lifting: Some(&[
            "[x1 x1 x2 x1 x2] + 4 mu2 x1^3 g2^2 - lambda11212 (1 - g1^3 g2^2)",
            "x1^3 - mu1 (1 - g1^3)",
            "[x1 x1 x2]^6 - S112 - mu112 (1 - g1^12 g2^6)",
            "x2^2 - mu2 (1 - g2^2)",
        ]),
        dim: 108,
        unknown: None,
    },
    CaseData {
        id: "B2-4a",
        family: "B2",
        q: [[4, 2], [8, 6]],
        conditions: "ord q11 = 3; q12 q21 = -q11; q22 = -1; q12^2 != 1",
        lset: B2_L,
        heights: &[("1", 3), ("112", 2), ("12", 3), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2]", "x1^3", "x2^2"],
        lifting: Some(&["[x1 x1 x2 x1 x2]", "x1^3 - mu1 (1 - g1^3)", "x2^2"]),
        dim: 36,
        unknown: None,
    },
    CaseData {
        id: "B2-4b",
        family: "B2",
        q: [[4, 0], [10, 6]],
        conditions: "ord q11 = 3; q12 q21 = -q11; q22 = -1; q12 = 1",
        lset: B2_L,
        heights: &[("1", 3), ("112", 2), ("12", 3), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2]", "x1^3", "x2^2"],
        lifting: Some(&["[x1 x1 x2 x1 x2]", "x1^3", "x2^2 - mu2 (1 - g2^2)"]),
        dim: 36,
        unknown: None,
    },
    CaseData {
        id: "B2-4c",
        family: "B2",
        q: [[4, 6], [4, 6]],
        conditions: "ord q11 = 3; q12 q21 = -q11; q22 = -1; q12 = -1",
        lset: B2_L,
        heights: &[("1", 3), ("112", 2), ("12", 3), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2]", "x1^3", "x2^2"],
        lifting: Some(&[
            "[x1 x1 x2 x1 x2] - mu2 (1 + q11) x1^3 g2^2 - lambda11212 (1 - g1^3 g2^2)",
            "x1^3 - mu1 (1 - g1^3)",
            "x2^2 - mu2 (1 - g2^2)",
        ]),
        dim: 36,
        unknown: None,
    },
    CaseData {
        id: "R8-1a",
        family: "row 8",
        q: [[4, 1], [8, 8]],
        conditions: "q11 = -z^-2; q12 q21 = -z^3; q22 = -z^2; q12^3 != 1",
        lset: R8_1_L,
        heights: &[("1", 3), ("112", 2), ("12", 4), ("122", 2), ("2", 3)],
        nichols: &[R8_1_SERRE, "x1^3", "x2^3"],
        lifting: Some(&[R8_1_SERRE, "x1^3 - mu1 (1 - g1^3)", "x2^3"]),
        dim: 144,
        unknown: None,
    },
    CaseData {
        id: "R8-1b",
        family: "row 8",
        q: [[4, 0], [9, 8]],
        conditions: "q11 = -z^-2; q12 q21 = -z^3; q22 = -z^2; q12^3 = 1",
        lset: R8_1_L,
        heights: &[("1", 3), ("112", 2), ("12", 4), ("122", 2), ("2", 3)],
        nichols: &[R8_1_SERRE, "x1^3", "x2^3"],
        lifting: Some(&[R8_1_SERRE, "x1^3", "x2^3 - mu2 (1 - g2^3)"]),
        dim: 144,
        unknown: None,
    },
    CaseData {
        id: "R8-2a",
        family: "row 8",
        q: [[8, 3], [4, 6]],
        conditions: "q11 = -z^2; q12 q21 = -z; q22 = -1; q12^2 != 1",
        lset: R8_2_L,
        heights: &[("1", 3), ("112", 3), ("11212", 2), ("12", 4), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2 x1 x2]", "x1^3", "x2^2"],
        lifting: Some(&["[x1 x1 x2 x1 x2 x1 x2]", "x1^3 - mu1 (1 - g1^3)", "x2^2"]),
        dim: 144,
        unknown: None,
    },
    CaseData {
        id: "R8-2b",
        family: "row 8",
        q: [[8, 0], [7, 6]],
        conditions: "q11 = -z^2; q12 q21 = -z; q22 = -1; q12^2 = 1",
        lset: R8_2_L,
        heights: &[("1", 3), ("112", 3), ("11212", 2), ("12", 4), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2 x1 x2]", "x1^3", "x2^2"],
        lifting: Some(&[
            "[x1 x1 x2 x1 x2 x1 x2] + mu2 q12 (q11 q12 q21 + q12 q21 - 1) [x1 x1 x2] x1^2 g2^2",
            "x1^3",
            "x2^2 - mu2 (1 - g2^2)",
        ]),
        dim: 144,
        unknown: None,
    },
    CaseData {
        id: "R8-3a",
        family: "row 8",
        q: [[9, 1], [0, 6]],
        conditions: "q11 = -z^3; q12 q21 = z; q22 = -1; q12^2 != 1",
        lset: R8_3_L,
        heights: &[("1", 4), ("1112", 2), ("112", 3), ("12", 3), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2]", "x1^4", "x2^2"],
        lifting: Some(&["[x1 x1 x2 x1 x2]", "x1^4 - mu1 (1 - g1^4)", "x2^2"]),
        dim: 144,
        unknown: None,
    },
    CaseData {
        id: "R8-3b",
        family: "row 8",
        q: [[9, 0], [1, 6]],
        conditions: "q11 = -z^3; q12 q21 = z; q22 = -1; q12^2 = 1",
        lset: R8_3_L,
        heights: &[("1", 4), ("1112", 2), ("112", 3), ("12", 3), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2]", "x1^4", "x2^2"],
        lifting: Some(&[
            "[x1 x1 x2 x1 x2] - mu2 q12 (q11 + 2 q12^2 q21^2 - q12 q21) x1^3 g2^2",
            "x1^4",
            "x2^2 - mu2 (1 - g2^2)",
        ]),
        dim: 144,
        unknown: None,
    },
    CaseData {
        id: "R89-4a",
        family: "row 9",
        q: [[8, 3], [0, 6]],
        conditions: "q11 = -z^2; q12 q21 = z^3; q22 = -1; q12^2 != 1",
        lset: R8_2_L,
        heights: &[("1", 3), ("112", 3), ("11212", 2), ("12", 12), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2 x1 x2]", "x1^3", "[x1 x2]^12", "x2^2"],
        lifting: Some(&[
            "[x1 x1 x2 x1 x2 x1 x2]",
            "x1^3 - mu1 (1 - g1^3)",
            "[x1 x2]^12 - mu12 (1 - g1^12 g2^12)",
            "x2^2",
        ]),
        dim: 432,
        unknown: None,
    },
    CaseData {
        id: "R89-4b",
        family: "row 9",
        q: [[8, 0], [3, 6]],
        conditions: "q11 = -z^2; q12 q21 = z^3; q22 = -1; q12^2 = 1",
        lset: R8_2_L,
        heights: &[("1", 3), ("112", 3), ("11212", 2), ("12", 12), ("2", 2)],
        nichols: &["[x1 x1 x2 x1 x2 x1 x2]", "x1^3", "[x1 x2]^12", "x2^2"],
        lifting: Some(&[
            "[x1 x1 x2 x1 x2 x1 x2] + 2 q12 mu2 (q12 q21 + 1) [x1 x1 x2] x1^2 g2^2",
            "x1^3",
            "x2^2 - mu2 (1 - g2^2)",
        ]),
        dim: 432,
        unknown: Some(("redh12", "[x1 x2]^12")),
    },
    CaseData {
        id: "R89-5a",
        family: "row 9",
        q: [[5, 3], [6, 6]],
        conditions: "q11 = -z^-1; q12 q21 = -z^3; q22 = -1; q12^2 != 1",
        lset: R8_3_L,
        heights: &[("1", 12), ("1112", 2), ("112", 3), ("12", 3), ("2", 2)],
        nichols: &["[x1 x1 x1 x1 x2]", "[x1 x1 x2 x1 x2]", "x1^12", "x2^2"],
        lifting: Some(&["[x1 x1 x1 x1 x2]", "[x1 x1 x2 x1 x2]", "x1^12 - mu1 (1 - g1^12)", "x2^2"]),
        dim: 432,
        unknown: None,
    },
    CaseData {
        id: "R89-5b",
        family: "row 9",
        q: [[5, 0], [9, 6]],
        conditions: "q11 = -z^-1; q12 q21 = -z^3; q22 = -1; q12^2 = 1",
        lset: R8_3_L,
        heights: &[("1", 12), ("1112", 2), ("112", 3), ("12", 3), ("2", 2)],
        nichols: &["[x1 x1 x1 x1 x2]", "[x1 x1 x2 x1 x2]", "x1^12", "x2^2"],
        lifting: Some(&[
            "[x1 x1 x1 x1 x2]",
            "[x1 x1 x2 x1 x2] + 2 mu2 q12 x1^3 g2^2",
            "x1^12 - mu1 (1 - g1^12)",
            "x2^2 - mu2 (1 - g2^2)",
        ]),
        dim: 432,
        unknown: None,
    },
];
