#pragma once

#include <string_view>

namespace kspoly::detail {

extern const std::string_view kCell600Json;
extern const std::string_view kCell120Json;
extern const std::string_view kGossetJson;
extern const std::string_view kCell120VerticesJson;

}  // namespace kspoly::detail
