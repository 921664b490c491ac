#include "mizhol/mizar/well_formed.hpp"

#include <set>
#include <string>
#include <vector>

namespace mizhol::mizar {

namespace {

class Checker {
 public:
  explicit Checker(const Signature& sig) : sig_(sig) {}

  Diagnostics run(const MStatement& s) {
    std::set<std::string> declared;
    for (const auto& d : s.prefix) {
      if (!declared.insert(d.name).second) {
        report(DiagCode::DuplicateName, d.loc, "variable " + d.name + " declared twice");
      }
      for (const auto& a : d.arg_types) type(a);
      if (d.result) type(*d.result);
      switch (d.kind) {
        case VarDecl::Kind::Object:
          scope_.push_back({d.name, VarDecl::Kind::Object, 0});
          break;
        case VarDecl::Kind::Function:
          if (d.arity() == 0) {
            report(DiagCode::InvalidArity, d.loc,
                   "function variable " + d.name + " needs at least one argument");
          }
          scope_.push_back({d.name, VarDecl::Kind::Function, d.arity()});
          break;
        case VarDecl::Kind::Predicate:
          scope_.push_back({d.name, VarDecl::Kind::Predicate, d.arity()});
          break;
      }
    }
    prop(s.body);
    return std::move(diags_);
  }

 private:
  struct Binding {
    std::string name;
    VarDecl::Kind kind;
    std::size_t arity;
  };

  void report(DiagCode code, SourceLoc loc, std::string msg) {
    diags_.push_back({code, loc, std::move(msg)});
  }

  const Binding* lookup(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->name == name) return &*it;
    }
    return nullptr;
  }

  void arity(const std::string& name, std::size_t expected, std::size_t found, SourceLoc loc) {
    if (expected != found) {
      report(DiagCode::ArityMismatch, loc,
             name + " expects " + std::to_string(expected) + " argument(s), found " +
                 std::to_string(found));
    }
  }

  const Symbol* constant(const std::string& name, SourceLoc loc,
                         std::initializer_list<SymbolKind> allowed, const char* what) {
    const Symbol* sym = sig_.find(name);
    if (!sym) {
      report(DiagCode::UnknownName, loc, "unknown " + std::string(what) + " " + name);
      return nullptr;
    }
    for (auto k : allowed) {
      if (sym->kind == k) return sym;
    }
    report(DiagCode::KindMismatch, loc,
           name + " is a " + std::string(to_string(sym->kind)) + ", not a " + what);
    return nullptr;
  }

  void type(const MType& t) {
    switch (t.kind()) {
      case MType::Kind::Set:
        return;
      case MType::Kind::Mode:
        if (const Symbol* s = constant(t.name(), t.loc(), {SymbolKind::Mode}, "mode")) {
          arity(t.name(), s->explicit_arity(), t.args().size(), t.loc());
        }
        for (const auto& a : t.args()) term(a);
        return;
      case MType::Kind::Attr:
        constant(t.name(), t.loc(), {SymbolKind::Attribute}, "attribute");
        type(t.base());
        return;
    }
  }

  void term(const MTerm& t) {
    switch (t.kind()) {
      case MTerm::Kind::ObjVar: {
        const Binding* b = lookup(t.name());
        if (!b) {
          report(DiagCode::UnknownName, t.loc(), "unknown object variable " + t.name());
        } else if (b->kind != VarDecl::Kind::Object) {
          report(DiagCode::KindMismatch, t.loc(), t.name() + " is not an object variable");
        }
        return;
      }
      case MTerm::Kind::ObjConst:
        constant(t.name(), t.loc(), {SymbolKind::ObjectConst}, "object constant");
        return;
      case MTerm::Kind::FunVarApp: {
        const Binding* b = lookup(t.name());
        if (!b) {
          report(DiagCode::UnknownName, t.loc(), "unknown function variable " + t.name());
        } else if (b->kind != VarDecl::Kind::Function) {
          report(DiagCode::KindMismatch, t.loc(), t.name() + " is not a function variable");
        } else {
          arity(t.name(), b->arity, t.args().size(), t.loc());
        }
        if (t.args().empty()) {
          report(DiagCode::InvalidArity, t.loc(), "function application without arguments");
        }
        for (const auto& a : t.args()) term(a);
        return;
      }
      case MTerm::Kind::FunConstApp:
        if (const Symbol* s = constant(t.name(), t.loc(), {SymbolKind::FunctionConst},
                                       "function constant")) {
          arity(t.name(), s->arity, t.args().size(), t.loc());
        }
        for (const auto& a : t.args()) term(a);
        return;
      case MTerm::Kind::The:
        type(t.type());
        return;
      case MTerm::Kind::Fraenkel: {
        const auto& bs = t.binders();
        if (bs.empty()) report(DiagCode::SyntaxError, t.loc(), "Fraenkel term without binders");
        std::set<std::string> seen;
        for (const auto& b : bs) {
          if (!seen.insert(b.name).second) {
            report(DiagCode::DuplicateName, b.loc, "Fraenkel variable " + b.name + " bound twice");
          }
          type(b.type);
          scope_.push_back({b.name, VarDecl::Kind::Object, 0});
        }
        term(t.body());
        prop(t.guard());
        scope_.resize(scope_.size() - bs.size());
        return;
      }
    }
  }

  void prop(const MProp& p) {
    switch (p.kind()) {
      case MProp::Kind::PredVarApp: {
        const Binding* b = lookup(p.name());
        if (!b) {
          report(DiagCode::UnknownName, p.loc(), "unknown predicate variable " + p.name());
        } else if (b->kind != VarDecl::Kind::Predicate) {
          report(DiagCode::KindMismatch, p.loc(), p.name() + " is not a predicate variable");
        } else {
          arity(p.name(), b->arity, p.args().size(), p.loc());
        }
        for (const auto& a : p.args()) term(a);
        return;
      }
      case MProp::Kind::PredConstApp:
        if (const Symbol* s = constant(
                p.name(), p.loc(),
                {SymbolKind::PredicateConst, SymbolKind::Mode, SymbolKind::Attribute},
                "predicate")) {
          arity(p.name(), s->arity, p.args().size(), p.loc());
        }
        for (const auto& a : p.args()) term(a);
        return;
      case MProp::Kind::Eq:
      case MProp::Kind::In:
        term(p.left());
        term(p.right());
        return;
      case MProp::Kind::Not:
        prop(p.operand());
        return;
      case MProp::Kind::ForBeing:
      case MProp::Kind::ExBeing:
        type(p.var_type());
        scope_.push_back({p.var(), VarDecl::Kind::Object, 0});
        prop(p.body());
        scope_.pop_back();
        return;
      default:
        prop(p.lhs());
        prop(p.rhs());
        return;
    }
  }

  const Signature& sig_;
  std::vector<Binding> scope_;
  Diagnostics diags_;
};

}  // namespace

Diagnostics well_formed(const MStatement& s, const Signature& sig) {
  return Checker(sig).run(s);
}

}  // namespace mizhol::mizar
