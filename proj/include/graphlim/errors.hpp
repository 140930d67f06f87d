#pragma once

#include <stdexcept>
#include <string>

namespace graphlim {

// Malformed text input (graph6, edge lists, graphon files, rationals).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A catalog, class or graphon identifier that is not known.
class UnknownName : public std::invalid_argument {
public:
  explicit UnknownName(const std::string &name)
      : std::invalid_argument("unknown name: " + name) {}
};

// A search hit its configured node budget before reaching a verdict.
class BudgetExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace graphlim
