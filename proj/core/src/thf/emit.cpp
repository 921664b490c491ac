#include "mizhol/thf/emit.hpp"

#include <set>
#include <sstream>
#include <vector>

namespace mizhol::thf {

using hol::Term;
using hol::TermKind;
using hol::Type;

std::string emit_type(const Type& t) {
  if (t.is_o()) return "$o";
  if (t.is_iota()) return "$i";
  std::string dom = emit_type(t.domain());
  if (t.domain().is_arrow()) dom = "(" + dom + ")";
  return dom + " > " + emit_type(t.codomain());
}

namespace {

const char* connective(TermKind k) {
  switch (k) {
    case TermKind::And: return "&";
    case TermKind::Or: return "|";
    case TermKind::Imp: return "=>";
    case TermKind::Iff: return "<=>";
    default: return "?";
  }
}

const char* quantifier(TermKind k) {
  switch (k) {
    case TermKind::Lam: return "^";
    case TermKind::All: return "!";
    case TermKind::Ex: return "?";
    default: return "?";
  }
}

class Emitter {
 public:
  explicit Emitter(MangleTable& names) : names_(names) {}

  void term(const Term& t, bool top) {
    switch (t.kind()) {
      case TermKind::Var:
        out_ << hol_var(t.name());
        return;
      case TermKind::BVar:
        out_ << bound_.at(bound_.size() - 1 - t.index());
        return;
      case TermKind::Const:
        out_ << names_(t.name());
        return;
      case TermKind::Meta:
        throw Error("cannot emit metavariable ?" + t.name());
      case TermKind::Top:
        out_ << "$true";
        return;
      case TermKind::App: {
        hol::Spine s = hol::strip_app(t);
        open(top);
        term(s.head, false);
        for (const Term& a : s.args) {
          out_ << " @ ";
          term(a, false);
        }
        close(top);
        return;
      }
      case TermKind::Eq:
        open(top);
        term(t.lhs(), false);
        out_ << " = ";
        term(t.rhs(), false);
        close(top);
        return;
      case TermKind::Neg:
        open(top);
        out_ << "~ (";
        term(t.operand(), true);
        out_ << ")";
        close(top);
        return;
      case TermKind::And:
      case TermKind::Or:
      case TermKind::Imp:
      case TermKind::Iff:
        open(top);
        term(t.lhs(), false);
        out_ << ' ' << connective(t.kind()) << ' ';
        term(t.rhs(), false);
        close(top);
        return;
      case TermKind::Lam:
      case TermKind::All:
      case TermKind::Ex:
        binder(t, top);
        return;
    }
  }

  std::string take() { return out_.str(); }

 private:
  void open(bool top) {
    if (!top) out_ << '(';
  }
  void close(bool top) {
    if (!top) out_ << ')';
  }

  // Free variables only occur in malformed problems; they are still printed
  // as variables so that the checker can report them.
  std::string hol_var(const std::string& name) { return upper_word(name); }

  void binder(const Term& t, bool top) {
    const TermKind kind = t.kind();
    open(top);
    out_ << quantifier(kind) << " [";
    Term cur = t;
    std::size_t pushed = 0;
    bool first = true;
    do {
      std::string base = upper_word(cur.name());
      std::string name = base;
      for (int n = 1; in_scope(name); ++n) name = base + "_" + std::to_string(n);
      bound_.push_back(name);
      ++pushed;
      if (!first) out_ << ", ";
      first = false;
      out_ << name << ": " << emit_type(cur.type());
      cur = cur.body();
    } while (cur.kind() == kind);
    out_ << "] : ";
    term(cur, false);
    bound_.resize(bound_.size() - pushed);
    close(top);
  }

  bool in_scope(const std::string& name) const {
    for (const auto& b : bound_) {
      if (b == name) return true;
    }
    return false;
  }

  MangleTable& names_;
  std::vector<std::string> bound_;
  std::ostringstream out_;
};

class FormulaNames {
 public:
  std::string operator()(const std::string& source) {
    std::string base = lower_word(source);
    std::string name = base;
    for (int n = 1; used_.count(name); ++n) name = base + "_" + std::to_string(n);
    used_.insert(name);
    return name;
  }

 private:
  std::set<std::string> used_;
};

}  // namespace

std::string emit_formula(const Term& t, MangleTable& names) {
  Emitter e(names);
  e.term(t, true);
  return e.take();
}

std::string emit_thf(const Problem& p) {
  MangleTable names;
  FormulaNames formula_names;
  std::ostringstream out;
  out << "% " << (p.name.empty() ? "problem" : p.name) << "\n";
  for (const auto& d : p.declarations) {
    const std::string& n = names(d.name);
    out << "thf(" << formula_names(n + "_tp") << ", type, " << n << ": " << emit_type(d.type)
        << ").\n";
  }
  for (const auto& d : p.declarations) {
    if (!d.definition) continue;
    const std::string& n = names(d.name);
    out << "thf(" << formula_names(n + "_def") << ", definition, " << n << " = ("
        << emit_formula(*d.definition, names) << ")).\n";
  }
  for (const auto& d : p.declarations) {
    for (const auto& a : d.axioms) {
      out << "thf(" << formula_names(a.name) << ", axiom, " << emit_formula(a.formula, names)
          << ").\n";
    }
  }
  for (const auto& a : p.axioms) {
    out << "thf(" << formula_names(a.name) << ", axiom, " << emit_formula(a.formula, names)
        << ").\n";
  }
  out << "thf(" << formula_names(p.conjecture.name) << ", conjecture, "
      << emit_formula(p.conjecture.formula, names) << ").\n";
  return out.str();
}

}  // namespace mizhol::thf
