#include "mizhol/thf/problem.hpp"

#include <map>
#include <set>

#include "mizhol/hol/ops.hpp"
#include "mizhol/hol/typing.hpp"
#include "mizhol/translate/translate.hpp"

namespace mizhol::thf {

using hol::Term;
using hol::TypedName;

namespace tr = translate;

const Declaration* Problem::find_declaration(const std::string& n) const {
  for (const auto& d : declarations) {
    if (d.name == n) return &d;
  }
  return nullptr;
}

namespace {

void require_closed(const NamedFormula& f) {
  if (!hol::free_vars(f.formula).empty() || f.formula.has_metas() ||
      f.formula.loose_bound() != 0) {
    throw AssembleError(DiagCode::UnboundVariable, f.name,
                        "formula '" + f.name + "' is not closed");
  }
}

}  // namespace

Problem assemble_problem(NamedFormula conjecture, std::vector<NamedFormula> axioms,
                         const mizar::Signature& sig, const AssembleOptions& opts) {
  require_closed(conjecture);
  for (const auto& a : axioms) require_closed(a);

  std::set<TypedName> used = hol::constants(conjecture.formula);
  for (const auto& a : axioms) {
    for (auto& c : hol::constants(a.formula)) used.insert(c);
  }

  bool need_eps = false;
  std::set<std::size_t> repl_arities;
  std::set<std::string> user;
  auto check_type = [](const TypedName& c, const hol::Type& declared) {
    if (c.type != declared) {
      throw AssembleError(DiagCode::IllTyped, c.name,
                          "constant '" + c.name + "' is used at type " + c.type.to_string() +
                              " but declared at " + declared.to_string());
    }
  };
  for (const TypedName& c : used) {
    if (c.name == tr::names::kEps) {
      check_type(c, tr::eps_constant().type());
      need_eps = true;
    } else if (c.name == tr::names::kMembership) {
      check_type(c, tr::membership_constant().type());
    } else if (c.name == tr::names::kSethood) {
      check_type(c, tr::sethood_constant().type());
      repl_arities.insert(0);  // sethood alone still needs its definition
    } else if (auto n = tr::names::repl_sep_arity(c.name)) {
      if (*n > opts.max_repl_sep_arity) {
        throw AssembleError(DiagCode::InvalidArity, c.name,
                            "replSep arity " + std::to_string(*n) + " exceeds the limit of " +
                                std::to_string(opts.max_repl_sep_arity));
      }
      check_type(c, tr::repl_sep_type(*n));
      repl_arities.insert(*n);
    } else {
      const mizar::Symbol* sym = sig.find(c.name);
      if (!sym) {
        throw AssembleError(DiagCode::UndeclaredConstant, c.name,
                            "constant '" + c.name + "' is not declared");
      }
      check_type(c, tr::constant_type(*sym));
      user.insert(c.name);
    }
  }
  const bool need_sethood = !repl_arities.empty();

  std::vector<Declaration> decls;
  if (need_eps) decls.push_back(tr::eps_declaration());
  decls.push_back(tr::membership_declaration());
  if (need_sethood) decls.push_back(tr::sethood_declaration());
  for (std::size_t n : repl_arities) {
    if (n == 0) continue;
    Declaration d = tr::gen_repl_sep_decl(n);
    auto [intro, elim] = tr::gen_repl_sep_axioms(n);
    d.axioms = {intro, elim};
    decls.push_back(std::move(d));
  }
  const mizar::Symbol* elem_mode = sig.element_of_mode();
  for (const mizar::Symbol& sym : sig.symbols()) {
    if (!user.count(sym.name)) continue;
    Declaration d{sym.name, tr::constant_type(sym), std::nullopt, {}};
    if (elem_mode && elem_mode->name == sym.name) {
      d.axioms = tr::element_of_axioms(sym.name, need_sethood);
    }
    decls.push_back(std::move(d));
  }
  std::string name = conjecture.name;
  Problem p{std::move(name), std::move(decls), std::move(axioms), std::move(conjecture)};

  // Everything must type-check against the declarations just collected.
  hol::TypingContext ctx;
  for (const auto& d : p.declarations) ctx.declare(d.name, d.type);
  auto check = [&](const NamedFormula& f) {
    hol::Type t = hol::type_of(f.formula, ctx);
    if (!t.is_o()) {
      throw AssembleError(DiagCode::NotAFormula, f.name,
                          "'" + f.name + "' has type " + t.to_string() + ", expected o");
    }
  };
  for (const auto& d : p.declarations) {
    for (const auto& a : d.axioms) check(a);
  }
  for (const auto& a : p.axioms) check(a);
  check(p.conjecture);
  return p;
}

}  // namespace mizhol::thf
