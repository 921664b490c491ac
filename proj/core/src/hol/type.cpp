#include "mizhol/hol/type.hpp"

#include <cassert>

namespace mizhol::hol {

struct Type::Arrow {
  Type domain;
  Type codomain;
};

Type Type::o() { return Type(Kind::Omicron, nullptr); }
Type Type::iota() { return Type(Kind::Iota, nullptr); }

Type Type::arrow(Type domain, Type codomain) {
  return Type(Kind::Arrow, std::make_shared<const Arrow>(
                               Arrow{std::move(domain), std::move(codomain)}));
}

Type Type::curried(std::span<const Type> args, Type result) {
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    result = arrow(*it, std::move(result));
  }
  return result;
}

Type Type::iota_n(std::size_t n, Type result) {
  for (std::size_t i = 0; i < n; ++i) result = arrow(iota(), std::move(result));
  return result;
}

const Type& Type::domain() const {
  assert(is_arrow());
  return arrow_->domain;
}

const Type& Type::codomain() const {
  assert(is_arrow());
  return arrow_->codomain;
}

std::size_t Type::arity() const {
  std::size_t n = 0;
  for (const Type* t = this; t->is_arrow(); t = &t->codomain()) ++n;
  return n;
}

const Type& Type::result() const {
  const Type* t = this;
  while (t->is_arrow()) t = &t->codomain();
  return *t;
}

bool operator==(const Type& a, const Type& b) {
  if (a.kind_ != b.kind_) return false;
  if (!a.is_arrow() || a.arrow_ == b.arrow_) return true;
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (!a.is_arrow() || a.arrow_ == b.arrow_) return std::strong_ordering::equal;
  if (auto c = a.domain() <=> b.domain(); c != 0) return c;
  return a.codomain() <=> b.codomain();
}

std::string Type::to_string() const {
  switch (kind_) {
    case Kind::Omicron: return "o";
    case Kind::Iota: return "ι";
    case Kind::Arrow: break;
  }
  std::string dom = domain().to_string();
  if (domain().is_arrow()) dom = "(" + dom + ")";
  return dom + "→" + codomain().to_string();
}

}  // namespace mizhol::hol
