#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logdiv/errors.hpp"

namespace logdiv {

/// Ordered list of variable names; fixed for the lifetime of a problem.
/// Cheap to copy (names are shared), compared by content.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names) {
    if (names.empty()) raise(errc::schema_error, "variable context must not be empty");
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j])
          raise(errc::schema_error, "duplicate variable name '" + names[i] + "'");
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }

  std::size_t size() const { return names_->size(); }
  const std::vector<std::string>& names() const { return *names_; }

  const std::string& name(std::size_t i) const {
    if (i >= size()) raise(errc::index_out_of_range, "variable index " + std::to_string(i));
    return (*names_)[i];
  }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < size(); ++i)
      if ((*names_)[i] == name) return i;
    return std::nullopt;
  }

  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  friend bool operator==(const VarContext& a, const VarContext& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend bool operator!=(const VarContext& a, const VarContext& b) { return !(a == b); }

  /// A name based on `base` that does not collide with existing variables.
  std::string fresh_name(const std::string& base) const {
    if (!contains(base)) return base;
    for (int k = 0;; ++k) {
      std::string cand = base + std::to_string(k);
      if (!contains(cand)) return cand;
    }
  }

  VarContext appended(const std::string& fresh) const {
    std::vector<std::string> v = *names_;
    v.push_back(fresh);
    return VarContext(std::move(v));
  }

  VarContext prepended(const std::string& fresh) const {
    std::vector<std::string> v;
    v.reserve(size() + 1);
    v.push_back(fresh);
    v.insert(v.end(), names_->begin(), names_->end());
    return VarContext(std::move(v));
  }

  VarContext dropped_front() const {
    if (size() < 2) raise(errc::internal_error, "cannot drop the only variable");
    return VarContext(std::vector<std::string>(names_->begin() + 1, names_->end()));
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace logdiv
