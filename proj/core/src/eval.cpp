#include "bootcov/eval.hpp"

#include <fmt/format.h>

namespace bootcov {

std::string EvalResult::method_tag() const {
  switch (method) {
    case Method::Exact:
      return "exact";
    case Method::Quadrature:
      return fmt::format("quadrature({:g})", tolerance);
    case Method::MonteCarlo:
      return fmt::format("monte-carlo({},{})", reps, seed);
  }
  return "unknown";
}

}  // namespace bootcov
