#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "randiv/rational.hpp"
#include "randiv/upoly.hpp"

namespace randiv {

/// Piecewise polynomial on [0,1]: strictly increasing rational breakpoints
/// starting at 0 and ending at 1, one polynomial per consecutive pair.
/// Adjacent equal pieces are merged on construction.
class PiecewisePoly {
public:
    PiecewisePoly(std::vector<Rational> breakpoints, std::vector<UPoly> pieces);

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<UPoly>& pieces() const { return pieces_; }

    /// Evaluate at eps in [0,1]. Pieces are half-open [b_i, b_{i+1}) except
    /// the last, which also covers eps = 1.
    Rational eval(const Rational& eps) const;

    /// Index of the piece whose interval contains eps (same convention as eval).
    std::size_t piece_index(const Rational& eps) const;

    bool is_continuous() const;

    bool operator==(const PiecewisePoly& o) const = default;

    nlohmann::json to_json() const;
    static PiecewisePoly from_json(const nlohmann::json& j);

    /// e.g. "1 - 6e + 12e^2 - 8e^3 on [0,1/2]; 0 on [1/2,1]"
    std::string pretty() const;

private:
    std::vector<Rational> breakpoints_;
    std::vector<UPoly> pieces_;
};

}  // namespace randiv
