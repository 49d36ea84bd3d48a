#pragma once

#include <string>

#include "gsw/dynamics.hpp"

namespace gsw {

// NDJSON checkpoint record:
//   {"format":"gsw-checkpoint-v1","t":...,"grid":{"n":...,"L":...},
//    "u":[[re,im],...],"rho":[[re,im],...]}
// Coefficients in wavenumber order k = 0, 1, ..., n/2, -n/2+1, ..., -1.
// Decimal serialization round-trips to 17 significant digits.

void save_checkpoint(const std::string& path, const TwoComponentState& z);
TwoComponentState load_checkpoint(const std::string& path);

std::string checkpoint_line(const TwoComponentState& z);
TwoComponentState parse_checkpoint_line(const std::string& line);

} // namespace gsw
