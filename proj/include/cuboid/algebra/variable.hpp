#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cuboid::algebra {

/// Interned variable handle. Ids double as the global variable order:
/// a smaller id is a more significant variable in the lexicographic tie-break.
using VarId = std::uint16_t;

/// Returns the id for name, registering it on first use. Thread-safe.
VarId variable(std::string_view name);
std::string variable_name(VarId id);

// Commonly used universe members, registered first so their order is stable.
namespace vars {
VarId s1();
VarId s2();
VarId s3();
VarId s4();
VarId s();
VarId mu();
}  // namespace vars

}  // namespace cuboid::algebra
