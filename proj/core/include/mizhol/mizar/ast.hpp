#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mizhol/diagnostic.hpp"

namespace mizhol::mizar {

class MTerm;
class MProp;

/// set | mode p(·,T1,…,Tn) | attribute q A | non q A
class MType {
 public:
  enum class Kind { Set, Mode, Attr };

  static MType set(SourceLoc loc = {});
  static MType mode(std::string name, std::vector<MTerm> args, SourceLoc loc = {});
  static MType attr(std::string name, MType base, bool negated = false, SourceLoc loc = {});

  Kind kind() const;
  /// Mode or attribute constant.
  const std::string& name() const;
  /// Explicit mode arguments (the subject argument is implicit).
  const std::vector<MTerm>& args() const;
  const MType& base() const;
  bool negated() const;
  SourceLoc loc() const;

  friend bool operator==(const MType& a, const MType& b);

 private:
  struct Node;
  explicit MType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FraenkelBinder {
  std::string name;
  MType type;
  SourceLoc loc;
};

class MTerm {
 public:
  enum class Kind { ObjVar, ObjConst, FunVarApp, FunConstApp, The, Fraenkel };

  static MTerm obj_var(std::string name, SourceLoc loc = {});
  static MTerm obj_const(std::string name, SourceLoc loc = {});
  static MTerm fun_var_app(std::string name, std::vector<MTerm> args, SourceLoc loc = {});
  static MTerm fun_const_app(std::string name, std::vector<MTerm> args, SourceLoc loc = {});
  static MTerm the(MType type, SourceLoc loc = {});
  /// {body where x1 is A1, …, xn is An : guard}
  static MTerm fraenkel(std::vector<FraenkelBinder> binders, MTerm body, MProp guard,
                        SourceLoc loc = {});

  Kind kind() const;
  const std::string& name() const;
  const std::vector<MTerm>& args() const;
  /// `the` argument.
  const MType& type() const;
  const std::vector<FraenkelBinder>& binders() const;
  const MTerm& body() const;
  const MProp& guard() const;
  SourceLoc loc() const;

  friend bool operator==(const MTerm& a, const MTerm& b);

 private:
  struct Node;
  explicit MTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class MProp {
 public:
  enum class Kind {
    PredVarApp,
    PredConstApp,
    Eq,
    In,
    Not,
    And,
    Or,
    Imp,
    Iff,
    ForBeing,
    ExBeing,
  };

  static MProp pred_var_app(std::string name, std::vector<MTerm> args, SourceLoc loc = {});
  static MProp pred_const_app(std::string name, std::vector<MTerm> args, SourceLoc loc = {});
  static MProp eq(MTerm lhs, MTerm rhs, SourceLoc loc = {});
  static MProp in(MTerm lhs, MTerm rhs, SourceLoc loc = {});
  static MProp negation(MProp arg, SourceLoc loc = {});
  /// kind ∈ {And, Or, Imp, Iff}.
  static MProp binary(Kind kind, MProp lhs, MProp rhs, SourceLoc loc = {});
  /// kind ∈ {ForBeing, ExBeing}.
  static MProp quantifier(Kind kind, std::string var, MType type, MProp body,
                          SourceLoc loc = {});

  Kind kind() const;
  bool is_binary() const;
  bool is_quantifier() const;

  const std::string& name() const;
  const std::vector<MTerm>& args() const;
  /// Eq / In operands.
  const MTerm& left() const;
  const MTerm& right() const;
  /// Not.
  const MProp& operand() const;
  /// Binary connectives.
  const MProp& lhs() const;
  const MProp& rhs() const;
  /// Quantifiers: bound variable, its type and the body.
  const std::string& var() const;
  const MType& var_type() const;
  const MProp& body() const;
  SourceLoc loc() const;

  friend bool operator==(const MProp& a, const MProp& b);

 private:
  struct Node;
  explicit MProp(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// x : A | F(A1,…,An) : B | P[A1,…,An]
struct VarDecl {
  enum class Kind { Object, Function, Predicate };

  Kind kind;
  std::string name;
  std::vector<MType> arg_types;
  /// Object type or function result type.
  std::optional<MType> result;
  SourceLoc loc;

  static VarDecl object(std::string name, MType type, SourceLoc loc = {});
  static VarDecl function(std::string name, std::vector<MType> args, MType result,
                          SourceLoc loc = {});
  static VarDecl predicate(std::string name, std::vector<MType> args, SourceLoc loc = {});

  std::size_t arity() const { return arg_types.size(); }

  friend bool operator==(const VarDecl& a, const VarDecl& b);
};

using Prefix = std::vector<VarDecl>;

struct MStatement {
  /// Scheme name; empty for plain statements.
  std::string name;
  Prefix prefix;
  MProp body;

  friend bool operator==(const MStatement& a, const MStatement& b);
};

}  // namespace mizhol::mizar
