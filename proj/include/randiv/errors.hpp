#pragma once

#include <stdexcept>
#include <string>

namespace randiv {

/// A configured resource budget was exceeded; the message names the budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace randiv
