#include <string>

#include "mizhol/mizar/parser.hpp"

namespace mizhol::mizar {

namespace {

// Precedence: iff < implies < or < & < not < atom. Quantifiers extend to the
// right as far as possible, so they need parentheses unless nothing follows.
enum Prec : int { kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kNot = 5, kAtom = 6 };

class Printer {
 public:
  std::string out;

  void type(const MType& t) {
    switch (t.kind()) {
      case MType::Kind::Set:
        out += "set";
        return;
      case MType::Kind::Mode:
        out += t.name();
        if (!t.args().empty()) args(t.args(), '(', ')');
        return;
      case MType::Kind::Attr:
        if (t.negated()) out += "non ";
        out += t.name();
        out += ' ';
        type(t.base());
        return;
    }
  }

  void term(const MTerm& t) {
    switch (t.kind()) {
      case MTerm::Kind::ObjVar:
      case MTerm::Kind::ObjConst:
        out += t.name();
        return;
      case MTerm::Kind::FunVarApp:
      case MTerm::Kind::FunConstApp:
        out += t.name();
        args(t.args(), '(', ')');
        return;
      case MTerm::Kind::The:
        out += "the ";
        type(t.type());
        return;
      case MTerm::Kind::Fraenkel: {
        out += "{ ";
        term(t.body());
        out += " where ";
        bool first = true;
        for (const auto& b : t.binders()) {
          if (!first) out += ", ";
          first = false;
          out += b.name;
          out += " is ";
          type(b.type);
        }
        out += " : ";
        prop(t.guard(), 0, true);
        out += " }";
        return;
      }
    }
  }

  void prop(const MProp& p, int min_prec, bool tail) {
    int prec = prec_of(p);
    bool paren = prec < min_prec || (p.is_quantifier() && !tail);
    if (paren) {
      out += '(';
      tail = true;
    }
    switch (p.kind()) {
      case MProp::Kind::PredVarApp:
        out += p.name();
        args(p.args(), '[', ']');
        break;
      case MProp::Kind::PredConstApp:
        out += p.name();
        if (!p.args().empty()) args(p.args(), '(', ')');
        break;
      case MProp::Kind::Eq:
        term(p.left());
        out += " = ";
        term(p.right());
        break;
      case MProp::Kind::In:
        term(p.left());
        out += " in ";
        term(p.right());
        break;
      case MProp::Kind::Not:
        out += "not ";
        prop(p.operand(), kNot, tail);
        break;
      case MProp::Kind::And:
        binary(p, " & ", kAnd, tail);
        break;
      case MProp::Kind::Or:
        binary(p, " or ", kOr, tail);
        break;
      case MProp::Kind::Imp:
        binary(p, " implies ", kImp, tail);
        break;
      case MProp::Kind::Iff:
        binary(p, " iff ", kIff, tail);
        break;
      case MProp::Kind::ForBeing:
      case MProp::Kind::ExBeing: {
        bool universal = p.kind() == MProp::Kind::ForBeing;
        out += universal ? "for " : "ex ";
        out += p.var();
        out += " being ";
        type(p.var_type());
        out += universal ? " holds " : " st ";
        prop(p.body(), 0, true);
        break;
      }
    }
    if (paren) out += ')';
  }

  void statement(const MStatement& s) {
    if (!s.name.empty() || !s.prefix.empty()) {
      out += "scheme ";
      out += s.name.empty() ? "Anonymous" : s.name;
      out += " {";
      bool first = true;
      for (const auto& d : s.prefix) {
        out += first ? " " : ", ";
        first = false;
        decl(d);
      }
      out += s.prefix.empty() ? "} : " : " } : ";
    } else {
      out += "statement : ";
    }
    prop(s.body, 0, true);
    out += '\n';
  }

 private:
  static int prec_of(const MProp& p) {
    switch (p.kind()) {
      case MProp::Kind::Iff: return kIff;
      case MProp::Kind::Imp: return kImp;
      case MProp::Kind::Or: return kOr;
      case MProp::Kind::And: return kAnd;
      case MProp::Kind::Not: return kNot;
      case MProp::Kind::ForBeing:
      case MProp::Kind::ExBeing: return kNot;
      default: return kAtom;
    }
  }

  // All binary connectives parse right associative.
  void binary(const MProp& p, const char* op, int prec, bool tail) {
    prop(p.lhs(), prec + 1, false);
    out += op;
    prop(p.rhs(), prec, tail);
  }

  void args(const std::vector<MTerm>& as, char open, char close) {
    out += open;
    bool first = true;
    for (const auto& a : as) {
      if (!first) out += ", ";
      first = false;
      term(a);
    }
    out += close;
  }

  void decl(const VarDecl& d) {
    out += d.name;
    switch (d.kind) {
      case VarDecl::Kind::Object:
        out += "() -> ";
        type(*d.result);
        return;
      case VarDecl::Kind::Function: {
        out += '(';
        bool first = true;
        for (const auto& a : d.arg_types) {
          if (!first) out += ", ";
          first = false;
          type(a);
        }
        out += ") -> ";
        type(*d.result);
        return;
      }
      case VarDecl::Kind::Predicate: {
        out += '[';
        bool first = true;
        for (const auto& a : d.arg_types) {
          if (!first) out += ", ";
          first = false;
          type(a);
        }
        out += ']';
        return;
      }
    }
  }
};

}  // namespace

std::string print_statement(const MStatement& s) {
  Printer p;
  p.statement(s);
  return std::move(p.out);
}

std::string print_prop(const MProp& prop) {
  Printer p;
  p.prop(prop, 0, true);
  return std::move(p.out);
}

std::string print_term(const MTerm& t) {
  Printer p;
  p.term(t);
  return std::move(p.out);
}

std::string print_type(const MType& t) {
  Printer p;
  p.type(t);
  return std::move(p.out);
}

}  // namespace mizhol::mizar
