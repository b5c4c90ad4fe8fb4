#ifndef QUIVERFORGE_ERROR_HPP
#define QUIVERFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qf {

// Domain error carrying a stable machine-readable code.
class Error : public std::runtime_error {
public:
  Error(std::string code, std::string const &msg)
      : std::runtime_error(msg), _code(std::move(code)) {}
  std::string const &code() const { return _code; }

private:
  std::string _code;
};

} // namespace qf

#endif
