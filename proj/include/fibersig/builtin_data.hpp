#pragma once

#include <string_view>

namespace fibersig {

std::string_view builtin_connected_fibers();
std::string_view builtin_incidence_table();
std::string_view builtin_fold_map_example();

}  // namespace fibersig
