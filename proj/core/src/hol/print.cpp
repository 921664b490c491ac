#include "mizhol/hol/print.hpp"

#include <set>
#include <vector>

#include "mizhol/hol/ops.hpp"

namespace mizhol::hol {

namespace {

enum Prec : int {
  kBinder = 1,
  kIff = 2,
  kImp = 3,
  kOr = 4,
  kAnd = 5,
  kNeg = 6,
  kEq = 7,
  kApp = 8,
  kAtom = 9,
};

bool is_membership(const Term& t) {
  if (!t.is(TermKind::App) || !t.fn().is(TermKind::App)) return false;
  const Term& head = t.fn().fn();
  return head.is(TermKind::Const) && head.name() == "r2_hidden";
}

class Printer {
 public:
  Printer(const Term& root, const PrintOptions& opts) : opts_(opts) {
    for (const auto& n : free_vars(root)) taken_.insert(n.name);
    for (const auto& n : constants(root)) taken_.insert(n.name);
    for (const auto& n : metas(root)) taken_.insert(n.name);
  }

  std::string run(const Term& t) {
    emit(t, 0, true);
    return std::move(out_);
  }

 private:
  int prec_of(const Term& t) const {
    switch (t.kind()) {
      case TermKind::Var:
      case TermKind::BVar:
      case TermKind::Const:
      case TermKind::Meta:
      case TermKind::Top:
        return kAtom;
      case TermKind::App:
        return opts_.membership_sugar && is_membership(t) ? kEq : kApp;
      case TermKind::Eq:
        return kEq;
      case TermKind::Neg:
        return kNeg;
      case TermKind::And:
        return kAnd;
      case TermKind::Or:
        return kOr;
      case TermKind::Imp:
        return kImp;
      case TermKind::Iff:
        return kIff;
      case TermKind::Lam:
      case TermKind::All:
      case TermKind::Ex:
        return kBinder;
    }
    return kAtom;
  }

  void emit(const Term& t, int min_prec, bool tail) {
    int p = prec_of(t);
    bool paren = p < min_prec || (p == kBinder && !tail);
    if (paren) {
      out_ += '(';
      tail = true;
    }
    emit_bare(t, tail);
    if (paren) out_ += ')';
  }

  void emit_bare(const Term& t, bool tail) {
    switch (t.kind()) {
      case TermKind::Var:
      case TermKind::Const:
        out_ += t.name();
        return;
      case TermKind::Meta:
        out_ += '?';
        out_ += t.name();
        return;
      case TermKind::BVar:
        if (t.index() < scope_.size()) {
          out_ += scope_[scope_.size() - 1 - t.index()];
        } else {
          out_ += "#" + std::to_string(t.index() - scope_.size());
        }
        return;
      case TermKind::Top:
        out_ += "⊤";
        return;
      case TermKind::App: {
        if (opts_.membership_sugar && is_membership(t)) {
          emit(t.fn().arg(), kApp, false);
          out_ += " ∈ ";
          emit(t.arg(), kApp, tail);
          return;
        }
        Spine s = strip_app(t);
        emit(s.head, kAtom, false);
        for (const auto& a : s.args) {
          out_ += ' ';
          emit(a, kAtom, false);
        }
        return;
      }
      case TermKind::Eq:
        emit(t.lhs(), kApp, false);
        out_ += " = ";
        emit(t.rhs(), kApp, tail);
        return;
      case TermKind::Neg:
        out_ += "¬";
        emit(t.operand(), t.operand().is(TermKind::Eq) ? kApp : kNeg, tail);
        return;
      case TermKind::And:
        binary(t, " ∧ ", kAnd, true, tail);
        return;
      case TermKind::Or:
        binary(t, " ∨ ", kOr, true, tail);
        return;
      case TermKind::Imp:
        binary(t, " → ", kImp, true, tail);
        return;
      case TermKind::Iff:
        binary(t, " ↔ ", kIff, false, tail);
        return;
      case TermKind::Lam:
      case TermKind::All:
      case TermKind::Ex:
        binder(t);
        return;
    }
  }

  void binary(const Term& t, const char* op, int p, bool right_assoc, bool tail) {
    emit(t.lhs(), p + 1, false);
    out_ += op;
    emit(t.rhs(), right_assoc ? p : p + 1, tail);
  }

  std::string pick_name(const std::string& base) {
    auto in_use = [&](const std::string& n) {
      if (taken_.count(n)) return true;
      for (const auto& s : scope_) {
        if (s == n) return true;
      }
      return false;
    };
    return fresh_name(base.empty() ? "x" : base, in_use);
  }

  void binder(const Term& t) {
    switch (t.kind()) {
      case TermKind::Lam: out_ += "λ"; break;
      case TermKind::All: out_ += "∀"; break;
      default: out_ += "∃"; break;
    }
    std::size_t pushed = 0;
    Term cur = t;
    while (true) {
      std::string name = pick_name(cur.name());
      if (pushed > 0) out_ += ' ';
      out_ += name;
      scope_.push_back(std::move(name));
      ++pushed;
      Term next = cur.body();
      if (next.kind() != t.kind() || next.type() != t.type()) {
        cur = next;
        break;
      }
      cur = next;
    }
    if (opts_.annotate_binders && !t.type().is_iota()) out_ += ":" + t.type().to_string();
    out_ += ". ";
    emit(cur, 0, true);
    scope_.resize(scope_.size() - pushed);
  }

  const PrintOptions& opts_;
  std::set<std::string> taken_;
  std::vector<std::string> scope_;
  std::string out_;
};

}  // namespace

std::string print(const Term& t, const PrintOptions& opts) { return Printer(t, opts).run(t); }

}  // namespace mizhol::hol
