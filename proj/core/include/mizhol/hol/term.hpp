#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mizhol/hol/type.hpp"

namespace mizhol::hol {

enum class TermKind : unsigned char {
  Var,    // free variable, identified by name and type
  BVar,   // bound variable, de Bruijn index
  Const,
  Meta,   // pattern-matching metavariable
  App,
  Lam,
  Top,
  Eq,
  Neg,
  And,
  Or,
  Imp,
  Iff,
  All,
  Ex,
};

/// Immutable simply-typed term in locally-nameless form.
///
/// Bound variables are de Bruijn indices; binders keep their source name only
/// for printing. Free variables, constants and metavariables are named and
/// carry their type. Terms share structure and are cheap to copy.
class Term {
 public:
  static Term var(std::string name, Type type);
  static Term bvar(std::uint32_t index);
  static Term constant(std::string name, Type type);
  static Term meta(std::string name, Type type);
  static Term app(Term fn, Term arg);
  static Term top();
  static Term eq(Term lhs, Term rhs, Type at);
  static Term neg(Term arg);
  /// kind ∈ {And, Or, Imp, Iff}.
  static Term binary(TermKind kind, Term lhs, Term rhs);
  /// kind ∈ {Lam, All, Ex}; `body` refers to the bound variable as BVar 0.
  static Term binder(TermKind kind, std::string name, Type type, Term body);

  TermKind kind() const;
  bool is(TermKind k) const { return kind() == k; }
  bool is_binder() const;
  bool is_binary() const;

  /// Var, Const, Meta, and binder display name.
  const std::string& name() const;
  /// Var/Const/Meta annotation, binder domain, or the type index of Eq.
  const Type& type() const;
  std::uint32_t index() const;

  const Term& fn() const;
  const Term& arg() const;
  /// Eq and binary connectives.
  const Term& lhs() const;
  const Term& rhs() const;
  /// Neg.
  const Term& operand() const;
  /// Lam/All/Ex.
  const Term& body() const;

  /// One past the largest loose de Bruijn index; 0 when locally closed.
  std::uint32_t loose_bound() const;
  bool has_metas() const;
  bool has_free_vars() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

// Builders. Binder builders take a free variable (Var) and abstract it.

Term top();
Term neg(Term t);
Term conj(Term a, Term b);
Term disj(Term a, Term b);
Term implies(Term a, Term b);
Term iff(Term a, Term b);
/// Equality at the type of `lhs` (inferred from annotations).
Term eq(Term lhs, Term rhs);
Term apply(Term fn, std::span<const Term> args);
Term apply(Term fn, std::initializer_list<Term> args);

Term lam(const Term& var, const Term& body);
Term forall(const Term& var, const Term& body);
Term exists(const Term& var, const Term& body);
Term lam(std::span<const Term> vars, const Term& body);
Term forall(std::span<const Term> vars, const Term& body);
Term exists(std::span<const Term> vars, const Term& body);

/// Splits `f a1 … an` into f and [a1 … an].
struct Spine {
  Term head;
  std::vector<Term> args;
};
Spine strip_app(const Term& t);

}  // namespace mizhol::hol
