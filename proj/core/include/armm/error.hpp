#ifndef ARMM_ERROR_HPP
#define ARMM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace armm {

/// Failure categories raised by the library. Every throw site uses exactly
/// one of these so callers (the CLI in particular) can map them to exit codes.
enum class Errc {
  TooShort,
  NonFinite,
  WindowTooWide,
  ZeroWidth,
  InvalidWeights,
  NotTapered,
  AllZeroTheta,
  DegenerateCenterWeight,
  ZeroDataMass,
  LengthMismatch,
  NoSmoothingTerm,
  ImaginaryResidue,
  TooLargeForOracle,
  SingularSystem,
  Parse,
  Io,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace armm

#endif
