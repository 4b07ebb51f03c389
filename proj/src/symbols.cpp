#include "tmodext/symbols.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

#include "tmodext/errors.hpp"

namespace tmodext {
namespace {

struct Table {
  std::mutex m;
  std::deque<std::string> names;  // stable storage
  std::unordered_map<std::string_view, uint32_t> index;
};

Table& table() {
  static Table t;
  return t;
}

}  // namespace

uint32_t Symbols::intern(std::string_view name) {
  Table& t = table();
  std::lock_guard<std::mutex> lock(t.m);
  auto it = t.index.find(name);
  if (it != t.index.end()) return it->second;
  t.names.emplace_back(name);
  uint32_t id = static_cast<uint32_t>(t.names.size() - 1);
  t.index.emplace(t.names.back(), id);
  return id;
}

std::optional<uint32_t> Symbols::find(std::string_view name) {
  Table& t = table();
  std::lock_guard<std::mutex> lock(t.m);
  auto it = t.index.find(name);
  if (it == t.index.end()) return std::nullopt;
  return it->second;
}

const std::string& Symbols::name(uint32_t id) {
  Table& t = table();
  std::lock_guard<std::mutex> lock(t.m);
  TMODEXT_CHECK(id < t.names.size(), "unknown symbol id");
  return t.names[id];
}

int Symbols::cmp(uint32_t a, uint32_t b) {
  if (a == b) return 0;
  const std::string& na = name(a);
  const std::string& nb = name(b);
  return na < nb ? -1 : (na == nb ? 0 : 1);
}

uint32_t Symbols::theta() {
  static const uint32_t id = intern("theta");
  return id;
}

uint32_t Symbols::gen() {
  static const uint32_t id = intern("c");
  return id;
}

}  // namespace tmodext
