#pragma once

// Reference J, L and J·L values (rounded to 3 decimals) for N = 3..12 and b = 1.

#include <array>

namespace binv::cli {

struct TableFixture {
  double ratio;
  std::array<double, 10> j;
  std::array<double, 10> l;
  std::array<double, 10> jl;
};

inline constexpr std::array<TableFixture, 5> kTableFixtures = {{
    {1,
     {0.866, 0.707, 0.588, 0.5, 0.434, 0.383, 0.342, 0.309, 0.282, 0.259},
     {5.196, 5.657, 5.878, 6, 6.074, 6.123, 6.156, 6.18, 6.198, 6.212},
     {4.5, 4, 3.455, 3, 2.636, 2.343, 2.106, 1.91, 1.746, 1.608}},
    {1.25,
     {0.752, 0.625, 0.522, 0.444, 0.386, 0.341, 0.305, 0.275, 0.251, 0.231},
     {5.916, 6.403, 6.644, 6.778, 6.86, 6.913, 6.95, 6.977, 6.996, 7.011},
     {4.449, 4, 3.465, 3.012, 2.648, 2.355, 2.117, 1.92, 1.756, 1.617}},
    {1.5,
     {0.648, 0.555, 0.467, 0.4, 0.348, 0.308, 0.275, 0.249, 0.227, 0.209},
     {6.738, 7.211, 7.459, 7.6, 7.687, 7.743, 7.783, 7.811, 7.832, 7.848},
     {4.363, 4, 3.487, 3.04, 2.676, 2.382, 2.143, 1.944, 1.779, 1.638}},
    {2,
     {0.496, 0.447, 0.386, 0.333, 0.292, 0.259, 0.232, 0.21, 0.192, 0.177},
     {8.531, 8.944, 9.189, 9.333, 9.424, 9.485, 9.526, 9.557, 9.579, 9.597},
     {4.228, 4, 3.542, 3.111, 2.75, 2.454, 2.21, 2.008, 1.838, 1.694}},
    {3,
     {0.333, 0.316, 0.283, 0.25, 0.221, 0.198, 0.178, 0.162, 0.148, 0.137},
     {12.343, 12.649, 12.863, 13, 13.09, 13.151, 13.194, 13.225, 13.249, 13.267},
     {4.108, 4, 3.643, 3.25, 2.899, 2.602, 2.352, 2.143, 1.965, 1.814}},
}};

}  // namespace binv::cli
