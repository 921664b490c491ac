#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>

namespace mizhol::hol {

/// Simple type: o, ι, or a function type.
class Type {
 public:
  enum class Kind : unsigned char { Omicron, Iota, Arrow };

  static Type o();
  static Type iota();
  static Type arrow(Type domain, Type codomain);

  /// args[0] → args[1] → … → result.
  static Type curried(std::span<const Type> args, Type result);
  /// ι → … → ι → result with `n` copies of ι.
  static Type iota_n(std::size_t n, Type result);

  Kind kind() const { return kind_; }
  bool is_arrow() const { return kind_ == Kind::Arrow; }
  bool is_o() const { return kind_ == Kind::Omicron; }
  bool is_iota() const { return kind_ == Kind::Iota; }

  /// Only valid on arrows.
  const Type& domain() const;
  const Type& codomain() const;

  /// Number of leading arrows.
  std::size_t arity() const;
  /// Codomain after stripping every arrow.
  const Type& result() const;

  friend bool operator==(const Type& a, const Type& b);
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

  std::string to_string() const;

 private:
  struct Arrow;
  Type(Kind k, std::shared_ptr<const Arrow> arrow)
      : kind_(k), arrow_(std::move(arrow)) {}

  Kind kind_;
  std::shared_ptr<const Arrow> arrow_;
};

}  // namespace mizhol::hol
