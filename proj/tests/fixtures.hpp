#pragma once

// Worked conversion instances used across the suites. Each pair was checked
// by hand against the iteration narratives: anchors, chains and marked pairs
// named there all reproduce on these words.

namespace fixtures {

// d = 1, n = 12
inline constexpr const char* kSmallPath = "U1 U1 L D1 L U1 D1 D1 U1 U1 D1 D1";
inline constexpr const char* kSmallWord = "1 1 2 3 2 1 3 2 1 1 2 2";

// d = 2, n = 15
inline constexpr const char* kTwoColorPath =
    "U1 U1 U2 D2 U2 U2 L D2 D2 U2 U2 D2 D1 D2 D1";
inline constexpr const char* kTwoColorWord = "1 1 2 3 2 1 3 4 2 1 1 2 5 2 4";

// d = 3, n = 25; the first odd iteration locates anchor 6, chain (8, 12, 23)
// and detour pairs (9,11) (15,17) at color 3, (13,19) (20,21) at color 2.
inline constexpr const char* kThreeColorPath =
    "U1 U1 U2 U2 U3 L D2 D3 U3 U2 D3 D2 U2 U3 U3 U1 D3 D1 D2 U2 D2 D3 D1 D2 D1";

// kThreeColorPath after that first iteration: a letter 7 sits at cell 23.
inline constexpr const char* kThreeColorAfterOdd =
    "U1 U1 U2 U2 U3 D3 D2 D2 U2 U2 D2 D1 U1 U3 U2 U1 D2 D1 D1 U1 D1 D3 7 D2 D1";

}  // namespace fixtures
