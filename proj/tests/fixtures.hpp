#pragma once

#include <string>
#include <vector>

namespace fixtures {

// The six published triangular arrays T(1)..T(6), row by row.
inline const std::vector<std::vector<std::vector<long long>>>& triangles() {
    static const std::vector<std::vector<std::vector<long long>>> t = {
        {{1}},
        {{1, 1}, {1}},
        {{2, 3, 1}, {5, 3}, {3}},
        {{6, 11, 6, 1}, {26, 26, 6}, {35, 15}, {15}},
        {{24, 50, 35, 10, 1}, {154, 200, 80, 10}, {340, 255, 45}, {315, 105}, {105}},
        {{120, 274, 225, 85, 15, 1},
         {1044, 1604, 855, 190, 15},
         {3304, 3325, 1050, 105},
         {4900, 2940, 420},
         {3465, 945},
         {945}}};
    return t;
}

inline const std::vector<std::string>& s_prefix() {
    static const std::vector<std::string> s = {"1",      "2",       "10",        "82",         "938",
                                               "13778",  "247210",  "5240338",   "128149802",  "3551246162"};
    return s;
}

// First-column vectors c_n(0) for n = 1..5.
inline const std::vector<std::vector<long long>>& c_rows() {
    static const std::vector<std::vector<long long>> c = {
        {1}, {1, 1}, {2, 5, 3}, {6, 26, 35, 15}, {24, 154, 340, 315, 105}};
    return c;
}

}  // namespace fixtures
