#pragma once

// Scenarios compiled into the binary, identical to the files under scenarios/.

#include <string_view>
#include <vector>

namespace conserv {

/// JSON text of a built-in scenario ("example1", "example3"); throws
/// ValidationError for unknown names.
std::string_view builtin_scenario(std::string_view name);

std::vector<std::string_view> builtin_names();

}  // namespace conserv
