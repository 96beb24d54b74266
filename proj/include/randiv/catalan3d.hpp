#pragma once

#include <string>
#include <vector>

#include "randiv/errors.hpp"
#include "randiv/rational.hpp"

namespace randiv {

/// Letter counts of a three-letter word: l 'a's, m 'b's, n 'c's.
struct WordCounts {
    int l;
    int m;
    int n;
};

/// S = (l+m+n)!/(l!m!n!): all arrangements of the letters, equivalently all
/// monotone lattice paths (0,0,0) -> (l,m,n).
Integer total_words(int l, int m, int n);

struct ReflectionCounts {
    Integer q1;   // paths crossing the plane X - Y = 0
    Integer q2;   // paths crossing the plane X - Z + n - l = 0
    Integer q12;  // paths crossing both
};

/// Reflection-principle counts: Q1 = (l+m+n)!/((l+1)!(m-1)!n!),
/// Q2 = (l+m+n)!/((l+1)!m!(n-1)!), Q12 = (l+m+n)!/((l+2)!(m-1)!(n-1)!);
/// a count is 0 when a factorial argument would be negative.
ReflectionCounts reflection_counts(int l, int m, int n);

/// Closed form S * [(l+1)(l+2) - (m+n)(l+2) + mn] / [(l+1)(l+2)];
/// valid (and an integer) when m + n < l + 2, else throws.
Integer q3d_formula(int l, int m, int n);

/// Three-dimensional generalized Catalan number for any m, n <= l (and the
/// vanishing cases m > l or n > l, which return 0). Uses q3d_formula where
/// m + n < l + 2 and the grid-validated correction terms otherwise.
Integer q3d_general(int l, int m, int n);

/// The correction-region formula exactly as printed in its source, kept for
/// documentation: it is dimensionally inconsistent for n != l and disagrees
/// with the path count (e.g. at (3,3,2)). Requires m,n <= l and m+n >= l+2.
Integer q3d_eq11_printed(int l, int m, int n);

/// Monotone lattice paths (0,0,0) -> (l,m,n) whose every point (X,Y,Z)
/// satisfies Y <= X and n - Z <= l - X.
Integer count_paths_dp(int l, int m, int n, std::size_t cell_budget = 100'000'000);

/// Words with exactly (l,m,n) letters where every prefix has #b <= #a and
/// every suffix has #c <= #a. Optionally collects the words (sorted).
Integer enumerate_words(int l, int m, int n, std::vector<std::string>* words = nullptr,
                        int length_budget = 12);

}  // namespace randiv
