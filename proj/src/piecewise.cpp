#include "randiv/piecewise.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace randiv {

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<UPoly> pieces) {
    if (breakpoints.size() < 2 || pieces.size() + 1 != breakpoints.size())
        throw std::invalid_argument("PiecewisePoly: need n+1 breakpoints for n pieces");
    if (breakpoints.front() != Rational(0) || breakpoints.back() != Rational(1))
        throw std::invalid_argument("PiecewisePoly: breakpoints must span [0,1]");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
        if (!(breakpoints[i - 1] < breakpoints[i]))
            throw std::invalid_argument("PiecewisePoly: breakpoints must be strictly increasing");
    breakpoints_.push_back(breakpoints.front());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (!pieces_.empty() && pieces_.back() == pieces[i]) {
            breakpoints_.back() = breakpoints[i + 1];  // merge with previous piece
        } else {
            pieces_.push_back(pieces[i]);
            breakpoints_.push_back(breakpoints[i + 1]);
        }
    }
}

std::size_t PiecewisePoly::piece_index(const Rational& eps) const {
    if (eps < Rational(0) || eps > Rational(1))
        throw std::domain_error("PiecewisePoly: eps outside [0,1]");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), eps);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    if (idx >= pieces_.size()) idx = pieces_.size() - 1;  // eps = 1
    return idx;
}

Rational PiecewisePoly::eval(const Rational& eps) const {
    return pieces_[piece_index(eps)].eval(eps);
}

bool PiecewisePoly::is_continuous() const {
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        if (pieces_[i - 1].eval(breakpoints_[i]) != pieces_[i].eval(breakpoints_[i]))
            return false;
    return true;
}

nlohmann::json PiecewisePoly::to_json() const {
    nlohmann::json j;
    auto& bps = j["breakpoints"] = nlohmann::json::array();
    for (const auto& b : breakpoints_) bps.push_back(b.str());
    auto& ps = j["pieces"] = nlohmann::json::array();
    for (const auto& p : pieces_) {
        nlohmann::json coeffs = nlohmann::json::array();
        if (p.is_zero()) {
            coeffs.push_back("0");
        } else {
            for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
        }
        ps.push_back(nlohmann::json{{"coeffs", coeffs}});
    }
    return j;
}

PiecewisePoly PiecewisePoly::from_json(const nlohmann::json& j) {
    std::vector<Rational> bps;
    for (const auto& b : j.at("breakpoints")) bps.push_back(Rational::parse(b.get<std::string>()));
    std::vector<UPoly> pieces;
    for (const auto& p : j.at("pieces")) {
        std::vector<Rational> coeffs;
        for (const auto& c : p.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
        pieces.emplace_back(std::move(coeffs));
    }
    return PiecewisePoly(std::move(bps), std::move(pieces));
}

std::string PiecewisePoly::pretty() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) os << "; ";
        os << pieces_[i].str() << " on [" << breakpoints_[i].str() << ","
           << breakpoints_[i + 1].str() << "]";
    }
    return os.str();
}

}  // namespace randiv
