#pragma once

// Generated by tests/oracles/generate_reference_values.py (mpmath, 60 digits).
// Do not edit by hand.

#include <array>

namespace reference {

struct BoundEntry {
    int m;
    double gamma;  // 0 marks gamma = m^(1/3)
    double value;
};

inline constexpr std::array<BoundEntry, 32> kBoundGrid{{
    {5, 0.1, 2.841060361752743054472363e-1},
    {5, 0.5, 1.886322465783766330963392e-1},
    {5, 1, 1.248190870005249852167955e-1},
    {5, 0, 7.569746107854682228918014e-2},
    {6, 0.1, 7.747656649532233277638999e-2},
    {6, 0.5, 5.374731739982110379562664e-2},
    {6, 1, 3.694892186775637737139178e-2},
    {6, 0, 2.185481965054902182116186e-2},
    {7, 0.1, 1.7794780451231292789833e-2},
    {7, 0.5, 1.277901182378729688415797e-2},
    {7, 1, 9.065073612518281885452793e-3},
    {7, 0, 5.285494810402123663581415e-3},
    {8, 0.1, 3.531212929575929601498226e-3},
    {8, 0.5, 2.607914470045266059528977e-3},
    {8, 1, 1.899006373428364663864053e-3},
    {8, 0, 1.098590245226843830405813e-3},
    {9, 0.1, 6.169570093194579420489729e-4},
    {9, 0.5, 4.663336124538823804676277e-4},
    {9, 1, 3.471632213451724476084429e-4},
    {9, 0, 2.00096578290044304053741e-4},
    {10, 0.1, 9.629248679762595011854596e-5},
    {10, 0.5, 7.422075272277832190382213e-5},
    {10, 1, 5.631059230916598568203978e-5},
    {10, 0, 3.242478141608398181429713e-5},
    {11, 0.1, 1.358139773751423241174836e-5},
    {11, 0.5, 1.064493757966379356179555e-5},
    {11, 1, 8.209930719723809944102147e-6},
    {11, 0, 4.731547597961816549606902e-6},
    {12, 0.1, 1.747372431097162555167036e-6},
    {12, 0.5, 1.389567853082732927170182e-6},
    {12, 1, 1.087229916673607046276778e-6},
    {12, 0, 6.279197942420674042509679e-7},
}};

inline constexpr const char* kBound5_1 = "0.12481908700052498521679546445820113231359887913128";
inline constexpr const char* kBound8_2 = "0.0010985902452268438304058131839544908506134870314272";
inline constexpr double kBoundLaxTinyGamma = 0.3276799847607424339674307;

// L^(1) of the points (1, 2i); alpha = (0.5, 1.5)
inline constexpr double kLGammaOneTwoI = 3.426927779499263620769524;
// normalize_l0 scale for the same points
inline constexpr double kNormalizeScaleOneTwoI = 0.624143977470746358785817;
// L^(0.5) of (1, 0.5+1.5i, -2+0.1i, 0.3-0.9i)
inline constexpr double kLGammaMixed = 4.863791375872867465990384;

struct RadiusEntry {
    const char* name;
    double value;
};

inline constexpr std::array<RadiusEntry, 10> kRadii{{
    {"disk_off_center", 0.6285714285714285542087857},
    {"exterior_disk_finite", 3.262499999999999730077027},
    {"half_plane_tilted", 2.234741690198505777789608},
    {"sector_off_bisector", 1.100608849234526789096343},
    {"sector_reflex", 3.073152845045228629930281},
    {"annular_sector_bisector", 0.7515151515151515151515152},
    {"annular_sector_off_bisector", 0.5996680047216476102135813},
    {"annular_sector_wide", 1.620456303818339811381523},
    {"mobius_sector", 0.1173762404817061529439974},
    {"mobius_half_plane", 0.4},
}};

}  // namespace reference
