#pragma once
#include <stdexcept>
#include <string>

namespace dgar {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Malformed or inconsistent input data (bad scalars, axiom failures, shape mismatch). */
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/* A resolution or certification ran out of its generator / degree-window budget. */
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

/* Operation requires a Gorenstein algebra and the check came back negative. */
struct NotGorenstein : Error {
  explicit NotGorenstein(const std::string& msg) : Error(msg) {}
};

/* A decision procedure could not certify either answer (tiny field, budget cap). */
struct Undecided : Error {
  explicit Undecided(const std::string& msg) : Error(msg) {}
};

}  // namespace dgar
