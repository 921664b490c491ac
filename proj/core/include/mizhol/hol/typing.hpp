#pragma once

#include <map>
#include <optional>
#include <string>

#include "mizhol/diagnostic.hpp"
#include "mizhol/hol/term.hpp"

namespace mizhol::hol {

class TypeError : public Error {
 public:
  enum class Kind { IllTyped, UnboundName };

  /// IllTyped at `location` (a rendering of the offending subterm).
  TypeError(std::string location, std::optional<Type> expected, std::optional<Type> found,
            std::string detail);
  /// UnboundName.
  explicit TypeError(std::string name);

  Kind kind() const { return kind_; }
  const std::string& location() const { return location_; }
  const std::optional<Type>& expected() const { return expected_; }
  const std::optional<Type>& found() const { return found_; }

 private:
  Kind kind_;
  std::string location_;
  std::optional<Type> expected_;
  std::optional<Type> found_;
};

/// Types of free variables and constants, one type per name.
class TypingContext {
 public:
  /// Throws TypeError(IllTyped) when `name` is already bound at another type.
  void declare(const std::string& name, const Type& type);
  const Type* find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  std::size_t size() const { return types_.size(); }

  /// Context holding every free variable and constant of `t` at its annotated
  /// type. Throws when a name is used at two types.
  static TypingContext of(const Term& t);
  void merge(const Term& t);

 private:
  std::map<std::string, Type> types_;
};

/// Checks `t` against the formation rules and returns its type. Names must be
/// bound in `ctx` at their annotated type; metavariables are self-typed.
Type type_of(const Term& t, const TypingContext& ctx);

/// Type computed from the annotations alone, for locally-closed terms.
/// Performs the same rule checks as type_of, without consulting a context.
Type infer_type(const Term& t);

}  // namespace mizhol::hol
