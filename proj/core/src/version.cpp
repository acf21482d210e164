#include "armm/version.hpp"

namespace armm {

std::string_view version() noexcept { return ARMM_VERSION; }

}  // namespace armm
