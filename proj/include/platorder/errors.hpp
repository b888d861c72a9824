#ifndef PLATORDER_ERRORS_HPP
#define PLATORDER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace platorder {

// Error taxonomy shared by the library and the CLI exit codes:
//   usage_error      -> exit 1 (malformed input, bad flags, contract misuse)
//   budget_error     -> exit 2 (step/element budget exhausted)
//   not_found_error  -> exit 2 (nothing found within the given budget)
//   integrity_error  -> exit 3 (an internal table or invariant is wrong)

struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct budget_error : std::runtime_error {
  long long used;
  explicit budget_error(const std::string& msg, long long used_ = -1)
      : std::runtime_error(msg), used(used_) {}
};

struct not_found_error : std::runtime_error {
  long long limit;
  explicit not_found_error(const std::string& msg, long long limit_ = -1)
      : std::runtime_error(msg), limit(limit_) {}
};

struct integrity_error : std::runtime_error {
  explicit integrity_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace platorder

#endif
