#pragma once

#include <string>
#include <string_view>

namespace maniquery {

/// Porter stemmer, following Martin Porter's reference C implementation
/// (including its `bli` -> `ble` and `logi` -> `log` step 2 rules).
/// Input is expected to be lowercase ASCII; words of length <= 2 are
/// returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace maniquery
