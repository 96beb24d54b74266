#include "randiv/catalan3d.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace randiv {

namespace {

Integer factorial(long v) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
    return r;
}

void check_nonneg(int l, int m, int n) {
    if (l < 0 || m < 0 || n < 0)
        throw std::invalid_argument("catalan3d: letter counts must be nonnegative");
}

}  // namespace

Integer total_words(int l, int m, int n) {
    check_nonneg(l, m, n);
    return factorial(l + m + n) / (factorial(l) * factorial(m) * factorial(n));
}

ReflectionCounts reflection_counts(int l, int m, int n) {
    check_nonneg(l, m, n);
    const Integer t = factorial(l + m + n);
    ReflectionCounts rc{Integer(0), Integer(0), Integer(0)};
    if (m >= 1) rc.q1 = t / (factorial(l + 1) * factorial(m - 1) * factorial(n));
    if (n >= 1) rc.q2 = t / (factorial(l + 1) * factorial(m) * factorial(n - 1));
    if (m >= 1 && n >= 1) rc.q12 = t / (factorial(l + 2) * factorial(m - 1) * factorial(n - 1));
    return rc;
}

Integer q3d_formula(int l, int m, int n) {
    check_nonneg(l, m, n);
    if (m + n >= l + 2) throw std::invalid_argument("q3d_formula: requires m + n < l + 2");
    const long bracket = static_cast<long>(l + 1) * (l + 2) - static_cast<long>(m + n) * (l + 2) +
                         static_cast<long>(m) * n;
    const Integer num = total_words(l, m, n) * bracket;
    const long den = static_cast<long>(l + 1) * (l + 2);
    if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(den)))
        throw std::logic_error("q3d_formula: non-integral value");
    return num / den;
}

namespace {

// Shared shape of the Eq.-style correction-region value: the inclusion-
// exclusion bracket plus two correction terms with denominators
// (m+n-l-2)! d1a! d1b! and (m+n-l-2)! d2a! d2b!.
Integer corrected(int l, int m, int n, long d1a, long d1b, long d2a, long d2b) {
    const Integer t = factorial(l + m + n);
    const ReflectionCounts rc = reflection_counts(l, m, n);
    const Integer base = total_words(l, m, n) - rc.q1 - rc.q2 + rc.q12;
    const Integer den1 = factorial(m + n - l - 2) * factorial(d1a) * factorial(d1b);
    const Integer den2 = factorial(m + n - l - 2) * factorial(d2a) * factorial(d2b);
    if (!mpz_divisible_p(t.get_mpz_t(), den1.get_mpz_t()) ||
        !mpz_divisible_p(t.get_mpz_t(), den2.get_mpz_t()))
        throw std::logic_error("catalan3d: correction term is not an integer here");
    return base + t / den1 - t / den2;
}

}  // namespace

Integer q3d_general(int l, int m, int n) {
    check_nonneg(l, m, n);
    if (m > l || n > l) return Integer(0);  // prefix/suffix conditions unsatisfiable
    if (m + n < l + 2) return q3d_formula(l, m, n);
    // Correction terms validated against count_paths_dp on the full
    // m,n <= l grid: denominators (l+1)!(l+1)! and l!(l+2)!.
    return corrected(l, m, n, l + 1, l + 1, l, l + 2);
}

Integer q3d_eq11_printed(int l, int m, int n) {
    check_nonneg(l, m, n);
    if (m > l || n > l) throw std::invalid_argument("q3d_eq11_printed: requires m, n <= l");
    if (m + n < l + 2) return q3d_formula(l, m, n);
    return corrected(l, m, n, n + 1, n + 1, n, n + 2);
}

Integer count_paths_dp(int l, int m, int n, std::size_t cell_budget) {
    check_nonneg(l, m, n);
    const std::size_t cells = static_cast<std::size_t>(l + 1) * (m + 1) * (n + 1);
    if (cells > cell_budget) {
        std::ostringstream os;
        os << "path DP budget exceeded: " << cells << " lattice cells (budget " << cell_budget
           << ")";
        throw BudgetExceeded(os.str());
    }
    auto allowed = [&](int x, int y, int z) { return y <= x && l - x >= n - z; };
    // One X-layer at a time; cell (y,z) accumulates in place.
    std::vector<Integer> layer(static_cast<std::size_t>(m + 1) * (n + 1));
    auto at = [&](int y, int z) -> Integer& { return layer[static_cast<std::size_t>(y) * (n + 1) + z]; };
    if (!allowed(0, 0, 0)) return Integer(0);
    at(0, 0) = 1;
    for (int x = 0; x <= l; ++x) {
        for (int y = 0; y <= m; ++y) {
            for (int z = 0; z <= n; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                Integer& cell = at(y, z);
                if (!allowed(x, y, z)) {
                    cell = 0;
                    continue;
                }
                // cell already holds the (x-1,y,z) value from the previous layer
                if (y > 0) cell += at(y - 1, z);
                if (z > 0) cell += at(y, z - 1);
            }
        }
    }
    return at(m, n);
}

Integer enumerate_words(int l, int m, int n, std::vector<std::string>* words, int length_budget) {
    check_nonneg(l, m, n);
    if (l + m + n > length_budget) {
        std::ostringstream os;
        os << "word enumeration budget exceeded: length " << (l + m + n) << " (budget "
           << length_budget << ")";
        throw BudgetExceeded(os.str());
    }
    Integer count(0);
    std::string word;
    auto suffix_ok = [&]() {
        int a = 0, c = 0;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            if (*it == 'a') ++a;
            else if (*it == 'c' && ++c > a) return false;
        }
        return true;
    };
    // Generate in a < b < c order (lexicographic), pruning on the prefix
    // condition; the suffix condition is checked on complete words.
    auto rec = [&](auto&& self, int ra, int rb, int rc, int a_seen, int b_seen) -> void {
        if (ra == 0 && rb == 0 && rc == 0) {
            if (suffix_ok()) {
                ++count;
                if (words) words->push_back(word);
            }
            return;
        }
        if (ra > 0) {
            word.push_back('a');
            self(self, ra - 1, rb, rc, a_seen + 1, b_seen);
            word.pop_back();
        }
        if (rb > 0 && b_seen + 1 <= a_seen) {
            word.push_back('b');
            self(self, ra, rb - 1, rc, a_seen, b_seen + 1);
            word.pop_back();
        }
        if (rc > 0) {
            word.push_back('c');
            self(self, ra, rb, rc - 1, a_seen, b_seen);
            word.pop_back();
        }
    };
    rec(rec, l, m, n, 0, 0);
    return count;
}

}  // namespace randiv
