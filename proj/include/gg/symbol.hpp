#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace gg {

/// Interned coordinate name. Equality is identity; ordering is by name.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view name);

  const std::string& name() const { return *name_; }
  bool valid() const { return name_ != nullptr; }

  friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return a.name() <=> b.name();
  }

 private:
  const std::string* name_ = nullptr;
};

}  // namespace gg
