#ifndef RAMSEY_ERRORS_HPP
#define RAMSEY_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

// Input text could not be decoded; `where` is the offending byte offset or
// line number, as stated in the message.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& msg, std::size_t where)
      : std::runtime_error(msg), where_(where) {}

  std::size_t where() const noexcept { return where_; }

private:
  std::size_t where_;
};

// A stated precondition of the operation does not hold for the given input.
class precondition_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An exhaustive computation exceeded its configured budget or cap.
class budget_error : public std::runtime_error {
public:
  budget_error(const std::string& msg, std::uint64_t limit)
      : std::runtime_error(msg), limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

private:
  std::uint64_t limit_;
};

}  // namespace ramsey

#endif  // RAMSEY_ERRORS_HPP
