#pragma once

#include <array>
#include <vector>

// Shared test corpus: published isomorphism signatures of small closed
// 4-manifold triangulations with known invariants.

namespace corpus {

// Minimal 6-pentachoron triangulations of orientable manifolds.  The
// first two are S3 x S1 (betti 1,1,0,1,1); the rest are S4.
inline constexpr std::array<const char*, 11> kOrientable = {
    "gLMPMQccdeeeffffaaaa9aaaaaaaaaaaaa9a",  // S3 x S1
    "gLwMQQcceeeffeffaaaaaaaaaaLaLaLaLaLa",  // S3 x S1
    "gLAAMQbbcddeffffaaaaaaaaaaaaaaaaaaaa",  // S4 (three trisection types)
    "gLAMMQbccddeffffaaaaaaaaaaaaaaaaaaaa",  // S4
    "gLwPQQbbeeedffffaaaaaaaaaavaaaaaaava",  // S4
    "gLAAMQbccddeffffaaaaaaaaaaaaaaaaaaaa",  // S4
    "gvLQQQcdefdefeffya2aqbPbgaoavacafaba",  // S4
    "gLAAMQbccdddffffaaaaaaaaaaaaaaaaaaaa",  // S4
    "gLAPMQbbbeeeffffaaaaaaaaaaaaaaaaaaaa",  // S4
    "gLAAMQbbbdddffffaaaaaaaaaaaaaaaaaaaa",  // S4
    "gLAAMQbbbddeffffaaaaaaaaaaaaaaaaaaaa",  // S4
};

inline constexpr int kNumS3xS1 = 2;  // leading rows of kOrientable

// Minimal 6-pentachoron triangulations of non-orientable manifolds.
// Rows 1, 2, 3, 7 (0-based) are S3 x~ S1; the other nine are RP4.
inline constexpr std::array<const char*, 13> kNonOrientable = {
    "gLALQQbbbdefefffaaaaaaaaaa3b3b3b3b3b",
    "gLwMQQcceeeffeffaaaaaaaaaa9a9a9a9a9a",
    "gLMPMQccdeeeffffaaaa3aaaaaaaaaaaaa3a",
    "gLMPMQccdeeeffffaaaaabaaaaaaaaaaaaab",
    "gLLAQQcddcfdefffaaVbVbVbxbVbbaaaaaaa",
    "gLLAQQbdedfefeefaadbdbdbaaoaaadbdboa",
    "gLLAQQbdedffeeefaadbdbdbaaaavadbdbva",
    "gLAAMQacbdcdefffcaTava4acavaya1aYa2a",
    "gvLQQQcdefdfefefya2aqbPbgaGbjbSbvbba",
    "gLALQQbbbeffefefaaaaaaaaaasbsbsbsbsb",
    "gLAMPQbbcdeffeffaaaaaaaaaadbdbdbdbdb",
    "gLALQQbbcdfeefffaaaaaaaaaawbwbwbwbwb",
    "gLALQQbbcdeeffffaaaaaaaaaahahahahaha",
};

inline constexpr std::array<bool, 13> kIsTwistedBundle = {
    false, true, true, true, false, false, false,
    true,  false, false, false, false, false,
};

// Fewest 2-4 moves after which each kNonOrientable row supports a
// trisection, and the minimal type found within three moves.
inline constexpr std::array<int, 13> kFirstTsDepth = {1, 0, 1, 0, 0, 1, 1,
                                                      3, 0, 2, 1, 1, 1};
inline constexpr long kMinType[13][4] = {
    {4, 1, 1, 1}, {2, 1, 1, 1}, {2, 1, 1, 1}, {2, 1, 1, 1}, {4, 1, 1, 1},
    {6, 2, 1, 1}, {6, 2, 1, 1}, {8, 2, 2, 2}, {4, 1, 1, 1}, {4, 1, 1, 1},
    {6, 2, 1, 1}, {4, 1, 1, 1}, {4, 1, 1, 1},
};

// Every trisection type found within three moves, per row, as flat
// (g, g0, g1, g2) tuples.
inline const std::array<std::vector<std::array<long, 4>>, 13> kDepth3Types = {{
    {{4, 1, 1, 1}, {6, 2, 1, 1}, {8, 2, 2, 1}, {8, 3, 1, 1}},
    {{2, 1, 1, 1}, {4, 2, 1, 1}, {6, 2, 2, 1}, {6, 3, 1, 1}, {8, 2, 2, 2},
     {8, 3, 2, 1}},
    {{2, 1, 1, 1}, {4, 2, 1, 1}, {6, 2, 2, 1}, {6, 3, 1, 1}},
    {{2, 1, 1, 1}, {4, 2, 1, 1}, {6, 2, 2, 1}, {6, 3, 1, 1}, {8, 2, 2, 2},
     {8, 3, 2, 1}},
    {{4, 1, 1, 1}, {6, 2, 1, 1}, {8, 2, 2, 1}, {8, 3, 1, 1}, {10, 2, 2, 2},
     {10, 3, 2, 1}},
    {{6, 2, 1, 1}, {8, 2, 2, 1}, {8, 3, 1, 1}, {10, 2, 2, 2}, {10, 3, 2, 1}},
    {{6, 2, 1, 1}, {8, 2, 2, 1}, {8, 3, 1, 1}, {10, 2, 2, 2}, {10, 3, 2, 1}},
    {{8, 2, 2, 2}},
    {{4, 1, 1, 1}, {6, 2, 1, 1}, {8, 2, 2, 1}, {8, 3, 1, 1}, {10, 2, 2, 2},
     {10, 3, 2, 1}},
    {{4, 1, 1, 1}, {6, 2, 1, 1}},
    {{6, 2, 1, 1}, {8, 2, 2, 1}, {8, 3, 1, 1}, {10, 2, 2, 2}, {10, 3, 2, 1}},
    {{4, 1, 1, 1}, {6, 2, 1, 1}, {8, 2, 2, 1}, {8, 3, 1, 1}},
    {{4, 1, 1, 1}, {6, 2, 1, 1}, {8, 2, 2, 1}, {8, 3, 1, 1}},
}};

// Simple-crystallisation triangulations: 5 vertices, 10 edges, and
// f-vector (5, 10, 10*b2 + 10, 15*b2 + 5, 6*b2 + 2) where b2 is the
// middle mod-2 Betti number.
inline constexpr const char* kCP2 =
    "iLvLQQQkbghhghhfffggfaaaaaaaaaaaaaaaaaaaaaaaaaa";
inline constexpr const char* kS2xS2 =
    "oLvMPLQAPMQPkbfgghjihhiilkkmllmnnnn"
    "aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa";
inline constexpr const char* kK3 =
    "-cgcLvLALLvvwwzvzMvwLAwvwvvwvwAAPvPPwzQQwMvPAQLQzQzPwLvwvPzvPwQLAPAPQMQw"
    "MQQQQAQzQQQQQAQPQQQQQQQQQwzvQQMMMMQQQQQQQQPkcahafafakaiasauaxapaBaDaGaKa"
    "DaFaFaQaWa3a6a1aTa7aYaSaTa-aVa4a9aVaab9abbabPaPaZaibPagbfb5a3a5a1aZa0a2a"
    "Oa-aVa-a8ahbQaubvbubzbAbGbIbHbHbNbObQbQbKbLbRbHbvbLbwbMbTbTbububWbGbXbHb"
    "ObRbDbYbNbYbKbwbObSbGbIbVbMbMbZbZbGbVb1bWbxbTbPbWbXb0b3bPbPb3bCbCb3bYb0b"
    "JbybybJb2bIbvbIbvb3bzbxbzb5bWb1b5bzbAbDbRb4bFbDbSb2bUbUb2bUbUb4bKbCbybyb"
    "Cb8bac-b+b+b+b9b9b8b8bbc6bdc6becacbc9b9bdc6bec-b7bdc-b-bdcecccaccc7b+b8b"
    "bc6b7b7bfcfcfcfcaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa"
    "aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa"
    "aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa"
    "aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa"
    "aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa"
    "aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa";

// The 6-pentachoron S4 triangulation with three distinct supported
// trisection types (same string as kOrientable[2]).
inline constexpr const char* kS4MultiType =
    "gLAAMQbbcddeffffaaaaaaaaaaaaaaaaaaaa";

}  // namespace corpus
