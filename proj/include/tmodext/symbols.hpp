#ifndef TMODEXT_SYMBOLS_HPP
#define TMODEXT_SYMBOLS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tmodext {

// Process-wide intern table for coefficient symbol names.  Ids are only used
// as handles; every ordering decision goes through the name strings, so
// canonical forms do not depend on interning order.  Thread-safe.
class Symbols {
 public:
  static uint32_t intern(std::string_view name);
  static std::optional<uint32_t> find(std::string_view name);
  static const std::string& name(uint32_t id);
  static int cmp(uint32_t a, uint32_t b);  // by name string

  static uint32_t theta();  // the A-field generator
  static uint32_t gen();    // reserved reduction generator "c"
};

}  // namespace tmodext

#endif
