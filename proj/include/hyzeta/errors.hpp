#ifndef HYZETA_ERRORS_HPP
#define HYZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyzeta {

// Error taxonomy; exit codes mirror the CLI contract.
class HyzetaError : public std::runtime_error {
  public:
    HyzetaError(std::string module, std::string what, int exitCode)
        : std::runtime_error("[" + module + "] " + what), module_(std::move(module)), exit_(exitCode) {}
    const std::string& module() const { return module_; }
    int exitCode() const { return exit_; }

  private:
    std::string module_;
    int exit_;
};

struct ParseError : HyzetaError {
    ParseError(const std::string& m, const std::string& w) : HyzetaError(m, w, 2) {}
};
struct FamilyError : HyzetaError {
    FamilyError(const std::string& m, const std::string& w) : HyzetaError(m, w, 3) {}
};
struct ParameterError : HyzetaError {
    ParameterError(const std::string& m, const std::string& w) : HyzetaError(m, w, 4) {}
};
struct PrecisionError : HyzetaError {
    PrecisionError(const std::string& m, const std::string& w) : HyzetaError(m, w, 5) {}
};
struct OracleMismatchError : HyzetaError {
    OracleMismatchError(const std::string& m, const std::string& w) : HyzetaError(m, w, 6) {}
};

}  // namespace hyzeta

#endif
