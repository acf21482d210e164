#ifndef ARMM_VERSION_HPP
#define ARMM_VERSION_HPP

#include <string_view>

namespace armm {

std::string_view version() noexcept;

}  // namespace armm

#endif
