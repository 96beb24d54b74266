#include "randiv/discrete.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace randiv {

void DiscreteConfig::validate() const {
    if (r < 1 || l < 1 || l > r || n < 0 || k < 1)
        throw std::invalid_argument("DiscreteConfig: need 1 <= l <= r, n >= 0, k >= 1");
}

Integer count_total(long r, long n) {
    if (r < 1 || n < 0) throw std::invalid_argument("count_total: need r >= 1, n >= 0");
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + r - 1),
                 static_cast<unsigned long>(r - 1));
    return c;
}

namespace {

// Ball ages within the trailing window, ascending, at most k entries.
// Age a means "placed a boxes ago"; balls older than l-1 boxes no longer
// constrain any future window and are dropped.
using WindowState = std::vector<int>;

struct StateSpace {
    std::vector<WindowState> states;
    std::map<WindowState, int> index;
    // next[s * (k+1) + v] = successor state after adding a box with v balls;
    // -1 when the new window would exceed the capacity.
    std::vector<int> next;
};

StateSpace build_states(long l, long k) {
    StateSpace sp;
    // Enumerate all multisets of ages in [1, l-1] with at most k entries.
    WindowState cur;
    auto emit = [&](auto&& self, int min_age) -> void {
        sp.index.emplace(cur, static_cast<int>(sp.states.size()));
        sp.states.push_back(cur);
        if (static_cast<long>(cur.size()) == k) return;
        for (int a = min_age; a <= l - 1; ++a) {
            cur.push_back(a);
            self(self, a);
            cur.pop_back();
        }
    };
    emit(emit, 1);

    sp.next.assign(sp.states.size() * (k + 1), -1);
    for (std::size_t s = 0; s < sp.states.size(); ++s) {
        const WindowState& st = sp.states[s];
        for (long v = 0; v + static_cast<long>(st.size()) <= k; ++v) {
            WindowState ns;
            if (l >= 2) ns.assign(static_cast<std::size_t>(v), 1);  // new balls at age 1
            for (int a : st)
                if (a + 1 <= l - 1) ns.push_back(a + 1);
            std::sort(ns.begin(), ns.end());
            sp.next[s * (k + 1) + v] = sp.index.at(ns);
        }
    }
    return sp;
}

}  // namespace

Integer count_admissible(const DiscreteConfig& cfg) {
    cfg.validate();
    const long n = cfg.n, k = cfg.k;
    const StateSpace sp = build_states(cfg.l, k);
    const std::size_t ns = sp.states.size();
    const std::size_t width = static_cast<std::size_t>(n) + 1;
    std::vector<Integer> cur(ns * width), nxt(ns * width);
    cur[0] = 1;  // empty window, zero balls
    for (long t = 0; t < cfg.r; ++t) {
        for (auto& c : nxt) c = 0;
        for (std::size_t s = 0; s < ns; ++s) {
            const long occupied = static_cast<long>(sp.states[s].size());
            for (std::size_t b = 0; b < width; ++b) {
                const Integer& w = cur[s * width + b];
                if (sgn(w) == 0) continue;
                const long vmax = std::min(k - occupied, n - static_cast<long>(b));
                for (long v = 0; v <= vmax; ++v) {
                    const int s2 = sp.next[s * (k + 1) + v];
                    nxt[static_cast<std::size_t>(s2) * width + b + v] += w;
                }
            }
        }
        cur.swap(nxt);
    }
    Integer total(0);
    for (std::size_t s = 0; s < ns; ++s) total += cur[s * width + n];
    return total;
}

Integer brute_force_admissible(const DiscreteConfig& cfg, std::size_t budget) {
    cfg.validate();
    const Integer total = count_total(cfg.r, cfg.n);
    if (total > Integer(static_cast<unsigned long>(budget))) {
        std::ostringstream os;
        os << "enumeration budget exceeded: " << total.get_str() << " placements (budget "
           << budget << ")";
        throw BudgetExceeded(os.str());
    }
    std::vector<long> boxes(cfg.r, 0);
    Integer admissible(0);
    auto window_ok = [&]() {
        long sum = 0;
        for (long i = 0; i < cfg.r; ++i) {
            sum += boxes[i];
            if (i >= cfg.l) sum -= boxes[i - cfg.l];
            if (i >= cfg.l - 1 && sum > cfg.k) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, long box, long left) -> void {
        if (box == cfg.r - 1) {
            boxes[box] = left;
            if (window_ok()) ++admissible;
            return;
        }
        for (long v = 0; v <= left; ++v) {
            boxes[box] = v;
            self(self, box + 1, left - v);
        }
        boxes[box] = 0;
    };
    rec(rec, 0, cfg.n);
    return admissible;
}

long window_len_for(const Rational& eps, long r) {
    const Rational half_up = eps * Rational(r) + Rational(1, 2);
    long l = static_cast<long>(half_up.floor().get_si());
    return std::clamp(l, 1L, r);
}

std::vector<std::pair<long, Rational>> limit_ratio(long n, long k, const Rational& eps,
                                                   const std::vector<long>& r_list) {
    std::vector<std::pair<long, Rational>> out;
    for (long r : r_list) {
        if (r < 2) throw std::invalid_argument("limit_ratio: need r >= 2");
        DiscreteConfig cfg{r, n, window_len_for(eps, r), k};
        out.emplace_back(r, Rational(count_admissible(cfg), count_total(r, n)));
    }
    return out;
}

}  // namespace randiv
