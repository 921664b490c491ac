#include "mizhol/mizar/ast.hpp"

#include <cassert>

namespace mizhol::mizar {

struct MType::Node {
  Kind kind;
  std::string name;
  std::vector<MTerm> args;
  std::optional<MType> base;
  bool negated = false;
  SourceLoc loc;
};

struct MTerm::Node {
  Kind kind;
  std::string name;
  std::vector<MTerm> args;
  std::optional<MType> type;
  std::vector<FraenkelBinder> binders;
  std::optional<MTerm> body;
  std::optional<MProp> guard;
  SourceLoc loc;
};

struct MProp::Node {
  Kind kind;
  std::string name;
  std::vector<MTerm> args;
  std::optional<MType> type;
  std::optional<MProp> lhs;
  std::optional<MProp> rhs;
  SourceLoc loc;
};

// MType

MType MType::set(SourceLoc loc) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Set;
  n->loc = loc;
  return MType(std::move(n));
}

MType MType::mode(std::string name, std::vector<MTerm> args, SourceLoc loc) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mode;
  n->name = std::move(name);
  n->args = std::move(args);
  n->loc = loc;
  return MType(std::move(n));
}

MType MType::attr(std::string name, MType base, bool negated, SourceLoc loc) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Attr;
  n->name = std::move(name);
  n->base = std::move(base);
  n->negated = negated;
  n->loc = loc;
  return MType(std::move(n));
}

MType::Kind MType::kind() const { return node_->kind; }
const std::string& MType::name() const { return node_->name; }
const std::vector<MTerm>& MType::args() const { return node_->args; }
const MType& MType::base() const {
  assert(node_->base);
  return *node_->base;
}
bool MType::negated() const { return node_->negated; }
SourceLoc MType::loc() const { return node_->loc; }

bool operator==(const MType& a, const MType& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case MType::Kind::Set:
      return true;
    case MType::Kind::Mode:
      return a.name() == b.name() && a.args() == b.args();
    case MType::Kind::Attr:
      return a.name() == b.name() && a.negated() == b.negated() && a.base() == b.base();
  }
  return false;
}

// MTerm

MTerm MTerm::obj_var(std::string name, SourceLoc loc) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::ObjVar;
  n->name = std::move(name);
  n->loc = loc;
  return MTerm(std::move(n));
}

MTerm MTerm::obj_const(std::string name, SourceLoc loc) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::ObjConst;
  n->name = std::move(name);
  n->loc = loc;
  return MTerm(std::move(n));
}

MTerm MTerm::fun_var_app(std::string name, std::vector<MTerm> args, SourceLoc loc) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::FunVarApp;
  n->name = std::move(name);
  n->args = std::move(args);
  n->loc = loc;
  return MTerm(std::move(n));
}

MTerm MTerm::fun_const_app(std::string name, std::vector<MTerm> args, SourceLoc loc) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::FunConstApp;
  n->name = std::move(name);
  n->args = std::move(args);
  n->loc = loc;
  return MTerm(std::move(n));
}

MTerm MTerm::the(MType type, SourceLoc loc) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::The;
  n->type = std::move(type);
  n->loc = loc;
  return MTerm(std::move(n));
}

MTerm MTerm::fraenkel(std::vector<FraenkelBinder> binders, MTerm body, MProp guard,
                      SourceLoc loc) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Fraenkel;
  n->binders = std::move(binders);
  n->body = std::move(body);
  n->guard = std::move(guard);
  n->loc = loc;
  return MTerm(std::move(n));
}

MTerm::Kind MTerm::kind() const { return node_->kind; }
const std::string& MTerm::name() const { return node_->name; }
const std::vector<MTerm>& MTerm::args() const { return node_->args; }
const MType& MTerm::type() const {
  assert(node_->type);
  return *node_->type;
}
const std::vector<FraenkelBinder>& MTerm::binders() const { return node_->binders; }
const MTerm& MTerm::body() const {
  assert(node_->body);
  return *node_->body;
}
const MProp& MTerm::guard() const {
  assert(node_->guard);
  return *node_->guard;
}
SourceLoc MTerm::loc() const { return node_->loc; }

bool operator==(const MTerm& a, const MTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case MTerm::Kind::ObjVar:
    case MTerm::Kind::ObjConst:
      return a.name() == b.name();
    case MTerm::Kind::FunVarApp:
    case MTerm::Kind::FunConstApp:
      return a.name() == b.name() && a.args() == b.args();
    case MTerm::Kind::The:
      return a.type() == b.type();
    case MTerm::Kind::Fraenkel: {
      const auto& ba = a.binders();
      const auto& bb = b.binders();
      if (ba.size() != bb.size()) return false;
      for (std::size_t i = 0; i < ba.size(); ++i) {
        if (ba[i].name != bb[i].name || !(ba[i].type == bb[i].type)) return false;
      }
      return a.body() == b.body() && a.guard() == b.guard();
    }
  }
  return false;
}

// MProp

namespace {
bool is_binary_kind(MProp::Kind k) {
  return k == MProp::Kind::And || k == MProp::Kind::Or || k == MProp::Kind::Imp ||
         k == MProp::Kind::Iff;
}
}  // namespace

MProp MProp::pred_var_app(std::string name, std::vector<MTerm> args, SourceLoc loc) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::PredVarApp;
  n->name = std::move(name);
  n->args = std::move(args);
  n->loc = loc;
  return MProp(std::move(n));
}

MProp MProp::pred_const_app(std::string name, std::vector<MTerm> args, SourceLoc loc) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::PredConstApp;
  n->name = std::move(name);
  n->args = std::move(args);
  n->loc = loc;
  return MProp(std::move(n));
}

MProp MProp::eq(MTerm lhs, MTerm rhs, SourceLoc loc) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Eq;
  n->args = {std::move(lhs), std::move(rhs)};
  n->loc = loc;
  return MProp(std::move(n));
}

MProp MProp::in(MTerm lhs, MTerm rhs, SourceLoc loc) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::In;
  n->args = {std::move(lhs), std::move(rhs)};
  n->loc = loc;
  return MProp(std::move(n));
}

MProp MProp::negation(MProp arg, SourceLoc loc) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->lhs = std::move(arg);
  n->loc = loc;
  return MProp(std::move(n));
}

MProp MProp::binary(Kind kind, MProp lhs, MProp rhs, SourceLoc loc) {
  assert(is_binary_kind(kind));
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->loc = loc;
  return MProp(std::move(n));
}

MProp MProp::quantifier(Kind kind, std::string var, MType type, MProp body, SourceLoc loc) {
  assert(kind == Kind::ForBeing || kind == Kind::ExBeing);
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->name = std::move(var);
  n->type = std::move(type);
  n->lhs = std::move(body);
  n->loc = loc;
  return MProp(std::move(n));
}

MProp::Kind MProp::kind() const { return node_->kind; }
bool MProp::is_binary() const { return is_binary_kind(kind()); }
bool MProp::is_quantifier() const {
  return kind() == Kind::ForBeing || kind() == Kind::ExBeing;
}
const std::string& MProp::name() const { return node_->name; }
const std::vector<MTerm>& MProp::args() const { return node_->args; }
const MTerm& MProp::left() const {
  assert(kind() == Kind::Eq || kind() == Kind::In);
  return node_->args[0];
}
const MTerm& MProp::right() const {
  assert(kind() == Kind::Eq || kind() == Kind::In);
  return node_->args[1];
}
const MProp& MProp::operand() const {
  assert(kind() == Kind::Not);
  return *node_->lhs;
}
const MProp& MProp::lhs() const {
  assert(is_binary());
  return *node_->lhs;
}
const MProp& MProp::rhs() const {
  assert(is_binary());
  return *node_->rhs;
}
const std::string& MProp::var() const { return node_->name; }
const MType& MProp::var_type() const {
  assert(is_quantifier());
  return *node_->type;
}
const MProp& MProp::body() const {
  assert(is_quantifier());
  return *node_->lhs;
}
SourceLoc MProp::loc() const { return node_->loc; }

bool operator==(const MProp& a, const MProp& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case MProp::Kind::PredVarApp:
    case MProp::Kind::PredConstApp:
      return a.name() == b.name() && a.args() == b.args();
    case MProp::Kind::Eq:
    case MProp::Kind::In:
      return a.args() == b.args();
    case MProp::Kind::Not:
      return a.operand() == b.operand();
    case MProp::Kind::ForBeing:
    case MProp::Kind::ExBeing:
      return a.var() == b.var() && a.var_type() == b.var_type() && a.body() == b.body();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// Declarations

VarDecl VarDecl::object(std::string name, MType type, SourceLoc loc) {
  return VarDecl{Kind::Object, std::move(name), {}, std::move(type), loc};
}

VarDecl VarDecl::function(std::string name, std::vector<MType> args, MType result,
                          SourceLoc loc) {
  return VarDecl{Kind::Function, std::move(name), std::move(args), std::move(result), loc};
}

VarDecl VarDecl::predicate(std::string name, std::vector<MType> args, SourceLoc loc) {
  return VarDecl{Kind::Predicate, std::move(name), std::move(args), std::nullopt, loc};
}

bool operator==(const VarDecl& a, const VarDecl& b) {
  return a.kind == b.kind && a.name == b.name && a.arg_types == b.arg_types &&
         a.result == b.result;
}

bool operator==(const MStatement& a, const MStatement& b) {
  return a.name == b.name && a.prefix == b.prefix && a.body == b.body;
}

}  // namespace mizhol::mizar
