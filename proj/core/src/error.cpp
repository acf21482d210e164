#include "armm/error.hpp"

namespace armm {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::TooShort: return "TooShort";
    case Errc::NonFinite: return "NonFinite";
    case Errc::WindowTooWide: return "WindowTooWide";
    case Errc::ZeroWidth: return "ZeroWidth";
    case Errc::InvalidWeights: return "InvalidWeights";
    case Errc::NotTapered: return "NotTapered";
    case Errc::AllZeroTheta: return "AllZeroTheta";
    case Errc::DegenerateCenterWeight: return "DegenerateCenterWeight";
    case Errc::ZeroDataMass: return "ZeroDataMass";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NoSmoothingTerm: return "NoSmoothingTerm";
    case Errc::ImaginaryResidue: return "ImaginaryResidue";
    case Errc::TooLargeForOracle: return "TooLargeForOracle";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace armm
