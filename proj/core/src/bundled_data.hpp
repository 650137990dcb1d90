#pragma once

#include <string_view>

namespace nodal::bundled {

std::string_view p2_model();
std::string_view f1_model();
std::string_view elliptic_model();
std::string_view point_model();
std::string_view line_model();
std::string_view oracle_table();

}
