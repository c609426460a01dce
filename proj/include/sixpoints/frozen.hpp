#ifndef SIXPOINTS_FROZEN_HPP
#define SIXPOINTS_FROZEN_HPP

// Conventions discovered once by search or first-run oracles and pinned
// here. Golden tests re-derive each value and assert the match; the verify
// report embeds them so downstream consumers never re-derive.

namespace sixpoints::frozen {

// StoI(segre(c)) = kLambdaStoI * igusa_p1(c), symbolic identity.
inline constexpr const char* kLambdaStoI = "1/6";

// Scale applied to the raw (P2)^6 ordered-assignment sum so that
// (sum W^2)^2 - 4 sum W^4 + 324 V^2 = 0 holds with coefficient 324.
// The raw ordered sum satisfies the relation with 324 * 8^4 instead.
inline constexpr const char* kP2WScale = "1/8";

inline constexpr long kKappa = 324;

// p2 on conic points [1;t;t^2] equals this constant times igusa_p1 on [t;1].
inline constexpr const char* kP2ConicConstant = "1/8";

// Oriented X = kKempeConstant * (Z_x + Z_y)/2 for every letter pair.
inline constexpr const char* kKempeConstant = "1";

// Letter pair -> oriented matching, lexicographic pair order (ab, ac, ...).
inline constexpr const char* kKempeOrientations[15] = {
    "13.26.45",  // ab
    "51.24.36",  // ac
    "12.35.46",  // ad
    "41.23.56",  // ae
    "61.25.34",  // af
    "21.34.56",  // bc
    "14.25.36",  // bd
    "16.24.35",  // be
    "15.23.46",  // bf
    "61.23.45",  // cd
    "31.25.46",  // ce
    "41.26.35",  // cf
    "15.26.34",  // de
    "13.24.56",  // df
    "21.36.45",  // ef
};

// The four points (1-based, in order) whose symmetric cross-ratio matches
// [Z_a+Z_b; Z_c+Z_d; Z_e+Z_f] on the Segre image.
inline constexpr int kCrossRatioPoints[4] = {1, 6, 2, 3};

// Orbit rule selected by the rational-normal-curve oracle. R1 anchors the
// nine seeds at letter a and extends by outer-equivariant translation; its
// output lands on Segre coordinates, so the Igusa oracle composes with the
// StoI duality.
inline constexpr const char* kP3SelectedRule = "R1";

// Coset numbering alignment (letters route), as a cycle string.
inline constexpr const char* kCosetAlignment = "(1 6 5)(2 3)";

// Letter dictionary: white 5-cycles, index = letter.
inline constexpr const char* kLetterDictionary[6] = {
    "12345", "13425", "12453", "14235", "12534", "13254",
};

}  // namespace sixpoints::frozen

#endif
