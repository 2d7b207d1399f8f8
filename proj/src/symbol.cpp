#include "gg/symbol.hpp"

#include <mutex>
#include <unordered_set>

namespace gg {

namespace {

struct Interner {
  std::mutex mutex;
  std::unordered_set<std::string> names;  // node-based: element addresses are stable
};

Interner& interner() {
  static Interner instance;
  return instance;
}

}  // namespace

Symbol::Symbol(std::string_view name) {
  auto& table = interner();
  std::lock_guard lock(table.mutex);
  name_ = &*table.names.emplace(name).first;
}

}  // namespace gg
