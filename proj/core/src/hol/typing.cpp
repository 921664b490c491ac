#include "mizhol/hol/typing.hpp"

#include <vector>

#include "mizhol/hol/print.hpp"

namespace mizhol::hol {

namespace {

std::string describe(const std::optional<Type>& expected, const std::optional<Type>& found,
                     const std::string& location, const std::string& detail) {
  std::string msg = "ill-typed term " + location;
  if (!detail.empty()) msg += ": " + detail;
  if (expected) msg += "; expected " + expected->to_string();
  if (found) msg += ", found " + found->to_string();
  return msg;
}

}  // namespace

TypeError::TypeError(std::string location, std::optional<Type> expected,
                     std::optional<Type> found, std::string detail)
    : Error(describe(expected, found, location, detail)),
      kind_(Kind::IllTyped),
      location_(std::move(location)),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

TypeError::TypeError(std::string name)
    : Error("unbound name " + name), kind_(Kind::UnboundName), location_(std::move(name)) {}

void TypingContext::declare(const std::string& name, const Type& type) {
  auto [it, inserted] = types_.emplace(name, type);
  if (!inserted && it->second != type) {
    throw TypeError(name, it->second, type, "name declared at two types");
  }
}

const Type* TypingContext::find(const std::string& name) const {
  auto it = types_.find(name);
  return it == types_.end() ? nullptr : &it->second;
}

void TypingContext::merge(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const:
      declare(t.name(), t.type());
      return;
    case TermKind::BVar:
    case TermKind::Meta:
    case TermKind::Top:
      return;
    case TermKind::App:
      merge(t.fn());
      merge(t.arg());
      return;
    case TermKind::Neg:
      merge(t.operand());
      return;
    case TermKind::Lam:
    case TermKind::All:
    case TermKind::Ex:
      merge(t.body());
      return;
    default:
      merge(t.lhs());
      merge(t.rhs());
      return;
  }
}

TypingContext TypingContext::of(const Term& t) {
  TypingContext ctx;
  ctx.merge(t);
  return ctx;
}

namespace {

class Checker {
 public:
  explicit Checker(const TypingContext* ctx) : ctx_(ctx) {}

  Type check(const Term& t) {
    switch (t.kind()) {
      case TermKind::Var:
      case TermKind::Const:
        if (ctx_) {
          const Type* bound = ctx_->find(t.name());
          if (!bound) throw TypeError(t.name());
          if (*bound != t.type()) {
            throw TypeError(print(t), *bound, t.type(), "annotation disagrees with context");
          }
        }
        return t.type();
      case TermKind::Meta:
        return t.type();
      case TermKind::BVar: {
        if (t.index() >= binders_.size()) {
          throw TypeError("#" + std::to_string(t.index()), std::nullopt, std::nullopt,
                          "loose bound variable");
        }
        return binders_[binders_.size() - 1 - t.index()];
      }
      case TermKind::App: {
        Type f = check(t.fn());
        Type a = check(t.arg());
        if (!f.is_arrow()) {
          throw TypeError(render(t), std::nullopt, f, "applying a non-function");
        }
        if (f.domain() != a) throw TypeError(render(t), f.domain(), a, "argument type");
        return f.codomain();
      }
      case TermKind::Top:
        return Type::o();
      case TermKind::Eq: {
        Type l = check(t.lhs());
        Type r = check(t.rhs());
        if (l != t.type()) throw TypeError(render(t), t.type(), l, "left side of equation");
        if (r != t.type()) throw TypeError(render(t), t.type(), r, "right side of equation");
        return Type::o();
      }
      case TermKind::Neg:
        expect_o(t, t.operand());
        return Type::o();
      case TermKind::And:
      case TermKind::Or:
      case TermKind::Imp:
      case TermKind::Iff:
        expect_o(t, t.lhs());
        expect_o(t, t.rhs());
        return Type::o();
      case TermKind::Lam: {
        binders_.push_back(t.type());
        Type body = check(t.body());
        binders_.pop_back();
        return Type::arrow(t.type(), body);
      }
      case TermKind::All:
      case TermKind::Ex: {
        binders_.push_back(t.type());
        Type body = check(t.body());
        binders_.pop_back();
        if (!body.is_o()) throw TypeError(render(t), Type::o(), body, "quantifier body");
        return Type::o();
      }
    }
    return Type::o();
  }

 private:
  void expect_o(const Term& parent, const Term& child) {
    Type c = check(child);
    if (!c.is_o()) throw TypeError(render(parent), Type::o(), c, "connective argument");
  }

  std::string render(const Term& t) const {
    if (t.loose_bound() > 0) return "<open subterm>";
    return print(t);
  }

  const TypingContext* ctx_;
  std::vector<Type> binders_;
};

}  // namespace

Type type_of(const Term& t, const TypingContext& ctx) { return Checker(&ctx).check(t); }

Type infer_type(const Term& t) { return Checker(nullptr).check(t); }

}  // namespace mizhol::hol
