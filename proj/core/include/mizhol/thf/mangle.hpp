#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace mizhol::thf {

/// Lower-case initial, every character outside [A-Za-z0-9_] replaced by '_'.
std::string lower_word(std::string_view source);
/// Upper-case initial, same character rules.
std::string upper_word(std::string_view source);

/// Injective renaming of source constant names to THF lower words. A name
/// that mangles onto one already handed out gets an `_N` suffix.
class MangleTable {
 public:
  const std::string& operator()(const std::string& source);
  /// Reserves an output name so that no constant is mapped onto it.
  void reserve(const std::string& emitted) { used_.insert(emitted); }
  const std::map<std::string, std::string>& entries() const { return map_; }

 private:
  std::map<std::string, std::string> map_;
  std::set<std::string> used_;
};

}  // namespace mizhol::thf
