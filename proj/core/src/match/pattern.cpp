#include "mizhol/match/pattern.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "mizhol/hol/print.hpp"
#include "mizhol/hol/typing.hpp"

namespace mizhol::match {

using hol::Term;
using hol::TermKind;
using hol::TypedName;

std::string_view to_string(MatchError::Kind kind) {
  switch (kind) {
    case MatchError::Kind::NotAPattern: return "NotAPattern";
    case MatchError::Kind::NoMatch: return "NoMatch";
    case MatchError::Kind::OccursEscape: return "OccursEscape";
    case MatchError::Kind::ShapeMismatch: return "ShapeMismatch";
    case MatchError::Kind::NotEnoughQuantifiers: return "NotEnoughQuantifiers";
  }
  return "?";
}

void Substitution::bind(MetaVar m, Term value) {
  for (auto& [k, v] : entries_) {
    if (k.name == m.name) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(m), std::move(value));
}

const Term* Substitution::find(const std::string& name) const {
  for (const auto& [k, v] : entries_) {
    if (k.name == name) return &v;
  }
  return nullptr;
}

Term Substitution::apply(const Term& t) const {
  if (!t.has_metas() || entries_.empty()) return t;
  Term replaced = hol::replace_metas(t, [&](const Term& m) -> std::optional<Term> {
    for (const auto& [k, v] : entries_) {
      if (k.name == m.name() && k.type == m.type()) return v;
    }
    return std::nullopt;
  });
  return hol::beta_normalize(replaced);
}

namespace {

class PatternCheck {
 public:
  PatternCheck(const std::set<TypedName>* metas, std::span<const TypedName> ctx)
      : metas_(metas), ctx_(ctx) {}

  bool ok(const Term& t, std::uint32_t depth) {
    if (!t.has_metas()) return true;
    switch (t.kind()) {
      case TermKind::Meta:
        return true;
      case TermKind::App: {
        hol::Spine s = hol::strip_app(t);
        if (s.head.is(TermKind::Meta) && tracked(s.head)) return distinct_bound(s.args, depth);
        if (!ok(s.head, depth)) return false;
        for (const Term& a : s.args) {
          if (!ok(a, depth)) return false;
        }
        return true;
      }
      case TermKind::Lam:
      case TermKind::All:
      case TermKind::Ex:
        return ok(t.body(), depth + 1);
      case TermKind::Neg:
        return ok(t.operand(), depth);
      case TermKind::Eq:
      case TermKind::And:
      case TermKind::Or:
      case TermKind::Imp:
      case TermKind::Iff:
        return ok(t.lhs(), depth) && ok(t.rhs(), depth);
      default:
        return true;
    }
  }

 private:
  bool tracked(const Term& m) const {
    return !metas_ || metas_->count(TypedName{m.name(), m.type()}) > 0;
  }

  bool in_context(const Term& v) const {
    for (const auto& c : ctx_) {
      if (c.name == v.name() && c.type == v.type()) return true;
    }
    return false;
  }

  bool distinct_bound(const std::vector<Term>& args, std::uint32_t depth) const {
    for (std::size_t i = 0; i < args.size(); ++i) {
      const Term& a = args[i];
      if (a.is(TermKind::BVar)) {
        if (a.index() >= depth) return false;
      } else if (!a.is(TermKind::Var) || !in_context(a)) {
        return false;
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (args[j].kind() == a.kind() &&
            (a.is(TermKind::BVar) ? args[j].index() == a.index()
                                  : args[j].name() == a.name())) {
          return false;
        }
      }
    }
    return true;
  }

  const std::set<TypedName>* metas_;
  std::span<const TypedName> ctx_;
};

std::string show(const Term& t) { return hol::print(t); }

// λxs. body with trailing η-redexes removed. Binders get back the source
// names recorded in `display` when that is unambiguous.
Term solution(std::vector<Term> xs, Term body,
              const std::map<std::string, std::string>& display) {
  while (!xs.empty() && body.is(TermKind::App) && body.arg().is(TermKind::Var) &&
         body.arg().name() == xs.back().name() && body.arg().type() == xs.back().type() &&
         !hol::occurs_free(body.fn(), xs.back().name())) {
    body = body.fn();
    xs.pop_back();
  }
  std::set<std::string> taken = hol::all_names(body);
  std::vector<std::string> names;
  for (const Term& x : xs) {
    auto it = display.find(x.name());
    std::string n = it == display.end() ? x.name() : it->second;
    if (n != x.name() && (taken.count(n) || std::count(names.begin(), names.end(), n))) {
      n = x.name();
    }
    names.push_back(n);
  }
  for (std::size_t i = xs.size(); i-- > 0;) {
    body = Term::binder(TermKind::Lam, names[i], xs[i].type(),
                        hol::abstract(body, xs[i].name(), xs[i].type()));
  }
  return body;
}

struct Work {
  std::vector<TypedName> ctx;
  Term lhs;
  Term rhs;
};

}  // namespace

bool is_pattern(const Term& t, const std::set<TypedName>& metas,
                std::span<const TypedName> context) {
  return PatternCheck(&metas, context).ok(t, 0);
}

bool is_pattern(const Term& t, std::span<const TypedName> context) {
  return PatternCheck(nullptr, context).ok(t, 0);
}

Substitution pattern_match(std::span<const DisagreementPair> pairs) {
  std::deque<Work> work;
  std::set<std::string> used;
  for (const auto& p : pairs) {
    if (p.rhs.has_metas()) {
      throw MatchError(MatchError::Kind::NoMatch,
                       "right-hand side " + show(p.rhs) + " contains metavariables");
    }
    if (!is_pattern(p.lhs, p.context)) {
      throw MatchError(MatchError::Kind::NotAPattern, "not a pattern: " + show(p.lhs));
    }
    for (auto& n : hol::all_names(p.lhs)) used.insert(n);
    for (auto& n : hol::all_names(p.rhs)) used.insert(n);
    for (const auto& c : p.context) used.insert(c.name);
    work.push_back({p.context, hol::beta_normalize(p.lhs), hol::beta_normalize(p.rhs)});
  }

  std::map<std::string, std::string> display;
  Substitution sigma;
  while (!work.empty()) {
    Work w = std::move(work.front());
    work.pop_front();
    Term l = sigma.apply(w.lhs);
    const Term& r = w.rhs;
    if (!l.has_metas()) {
      if (hol::alpha_eq(l, r)) continue;
      throw MatchError(MatchError::Kind::NoMatch,
                       "cannot match " + show(l) + " against " + show(r));
    }
    hol::Spine s = hol::strip_app(l);
    if (s.head.is(TermKind::Meta)) {
      // Flexible: the arguments are distinct context variables.
      std::set<std::string> args;
      for (const Term& a : s.args) {
        if (!a.is(TermKind::Var)) {
          throw MatchError(MatchError::Kind::NotAPattern, "not a pattern: " + show(l));
        }
        args.insert(a.name());
      }
      for (const TypedName& fv : hol::free_vars(r)) {
        bool bound_here = false;
        for (const auto& c : w.ctx) bound_here = bound_here || c == fv;
        if (bound_here && !args.count(fv.name)) {
          throw MatchError(MatchError::Kind::OccursEscape,
                           "bound variable " + fv.name + " escapes its scope in " +
                               show(l) + " =? " + show(r));
        }
      }
      Term value = solution(s.args, r, display);
      if (hol::infer_type(value) != s.head.type()) {
        throw MatchError(MatchError::Kind::NoMatch,
                         "type mismatch solving ?" + s.head.name() + " with " + show(value));
      }
      sigma.bind(MetaVar{s.head.name(), s.head.type()}, value);
      continue;
    }

    auto clash = [&] {
      return MatchError(MatchError::Kind::NoMatch,
                        "cannot match " + show(l) + " against " + show(r));
    };
    if (l.kind() != r.kind()) throw clash();
    std::vector<Work> sub;
    switch (l.kind()) {
      case TermKind::App: {
        hol::Spine rs = hol::strip_app(r);
        if (rs.args.size() != s.args.size() || !hol::alpha_eq(s.head, rs.head)) throw clash();
        for (std::size_t i = 0; i < s.args.size(); ++i) {
          sub.push_back({w.ctx, s.args[i], rs.args[i]});
        }
        break;
      }
      case TermKind::Eq:
        if (l.type() != r.type()) throw clash();
        [[fallthrough]];
      case TermKind::And:
      case TermKind::Or:
      case TermKind::Imp:
      case TermKind::Iff:
        sub.push_back({w.ctx, l.lhs(), r.lhs()});
        sub.push_back({w.ctx, l.rhs(), r.rhs()});
        break;
      case TermKind::Neg:
        sub.push_back({w.ctx, l.operand(), r.operand()});
        break;
      case TermKind::Lam:
      case TermKind::All:
      case TermKind::Ex: {
        if (l.type() != r.type()) throw clash();
        std::string name = hol::fresh_name(l.name(), [&](const std::string& n) {
          return used.count(n) > 0;
        });
        used.insert(name);
        display.emplace(name, l.name());
        auto [v, lb] = hol::open_binder(l, name);
        auto [v2, rb] = hol::open_binder(r, name);
        std::vector<TypedName> ctx = w.ctx;
        ctx.push_back({name, l.type()});
        sub.push_back({std::move(ctx), lb, rb});
        break;
      }
      default:
        throw clash();
    }
    for (auto it = sub.rbegin(); it != sub.rend(); ++it) work.push_front(std::move(*it));
  }
  return sigma;
}

}  // namespace mizhol::match
