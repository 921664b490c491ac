#include "mizhol/thf/mangle.hpp"

#include <cctype>

namespace mizhol::thf {

namespace {

std::string sanitize(std::string_view source) {
  std::string out;
  out.reserve(source.size() + 1);
  for (char c : source) {
    auto u = static_cast<unsigned char>(c);
    out.push_back(std::isalnum(u) && u < 0x80 ? c : (c == '_' ? c : '_'));
  }
  return out;
}

}  // namespace

std::string lower_word(std::string_view source) {
  std::string s = sanitize(source);
  if (s.empty()) return "c";
  auto first = static_cast<unsigned char>(s[0]);
  if (std::islower(first)) return s;
  if (std::isupper(first)) {
    s[0] = static_cast<char>(std::tolower(first));
    return s;
  }
  return "c" + s;
}

std::string upper_word(std::string_view source) {
  std::string s = sanitize(source);
  if (s.empty()) return "V";
  auto first = static_cast<unsigned char>(s[0]);
  if (std::isupper(first)) return s;
  if (std::islower(first)) {
    s[0] = static_cast<char>(std::toupper(first));
    return s;
  }
  return "V" + s;
}

const std::string& MangleTable::operator()(const std::string& source) {
  if (auto it = map_.find(source); it != map_.end()) return it->second;
  std::string base = lower_word(source);
  std::string name = base;
  for (int n = 1; used_.count(name); ++n) name = base + "_" + std::to_string(n);
  used_.insert(name);
  return map_.emplace(source, name).first->second;
}

}  // namespace mizhol::thf
