#include "randiv/term.hpp"

#include <algorithm>

namespace randiv {

bool Term::add_constraint(const AffineForm& f) {
    AffineForm n = f.normalized();
    if (n.is_zero()) return false;
    if (n.is_constant()) return n.constant_part().sign() > 0;
    const AffineForm neg = -n;
    if (std::binary_search(constraints_.begin(), constraints_.end(), neg)) return false;
    auto it = std::lower_bound(constraints_.begin(), constraints_.end(), n);
    if (it != constraints_.end() && *it == n) return true;
    constraints_.insert(it, std::move(n));
    return true;
}

bool Term::constrains(int var) const {
    for (const auto& f : constraints_)
        if (f.involves_x(var)) return true;
    return false;
}

bool constraint_set_less(const Term& a, const Term& b) {
    return std::lexicographical_compare(a.constraints_.begin(), a.constraints_.end(),
                                        b.constraints_.begin(), b.constraints_.end());
}

}  // namespace randiv
