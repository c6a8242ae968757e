#ifndef PASSIVELENS_ERROR_HPP
#define PASSIVELENS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace passivelens {

// Exit codes used by the CLI: 2 = bad input/config, 3 = pair-set mismatch.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg, int exit_code = 2)
      : std::runtime_error(msg), exit_code_(exit_code) {}

  int exit_code() const { return exit_code_; }

private:
  int exit_code_;
};

}  // namespace passivelens

#endif
