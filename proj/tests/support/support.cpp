#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mizhol/hol/ops.hpp"
#include "mizhol/hol/typing.hpp"
#include "mizhol/mizar/parser.hpp"
#include "mizhol/translate/translate.hpp"

namespace mizhol::testing {

using hol::Term;
using hol::Type;
using mizar::MProp;
using mizar::MTerm;
using mizar::MType;

std::filesystem::path corpus_dir() { return MIZHOL_CORPUS_DIR; }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const mizar::Signature& generator_signature() {
  static const mizar::Signature sig = mizar::parse_signature(R"(
obj c
obj d
func f/1
func g/2
pred p/1
pred r/2
mode m1_subset_1/2 elementof
mode m2/1
mode m3/3
attr v1
attr v2
)");
  return sig;
}

namespace {

int below(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }
bool chance(Rng& rng, int permille) { return below(rng, 1000) < permille; }

class StatementGen {
 public:
  StatementGen(Rng& rng, const StatementOptions& o) : rng_(rng), o_(o) {}

  mizar::MStatement statement() {
    mizar::MStatement s{chance(rng_, 700) ? "S" + std::to_string(below(rng_, 100)) : "",
                        {},
                        MProp::eq(MTerm::obj_const("c"), MTerm::obj_const("c"))};
    if (!s.name.empty()) {
      int n = below(rng_, o_.max_prefix + 1);
      for (int i = 0; i < n; ++i) s.prefix.push_back(declaration(i));
    }
    s.body = prop(o_.max_depth);
    return s;
  }

 private:
  mizar::VarDecl declaration(int i) {
    const int d = 2;
    switch (below(rng_, 3)) {
      case 0: {
        std::string name = "A" + std::to_string(i);
        auto decl = mizar::VarDecl::object(name, type(d));
        objects_.push_back(name);
        return decl;
      }
      case 1: {
        std::string name = "F" + std::to_string(i);
        std::size_t arity = 1 + below(rng_, 2);
        std::vector<MType> args;
        for (std::size_t k = 0; k < arity; ++k) args.push_back(type(d));
        auto decl = mizar::VarDecl::function(name, std::move(args), type(d));
        funcs_.emplace_back(name, arity);
        return decl;
      }
      default: {
        std::string name = "P" + std::to_string(i);
        std::size_t arity = below(rng_, 3);
        std::vector<MType> args;
        for (std::size_t k = 0; k < arity; ++k) args.push_back(type(d));
        preds_.emplace_back(name, arity);
        return mizar::VarDecl::predicate(name, std::move(args));
      }
    }
  }

  std::string bound_name() {
    static const char* const pool[] = {"x", "y", "z", "X", "Y"};
    if (chance(rng_, 300)) return pool[below(rng_, 5)];
    return "x" + std::to_string(counter_++);
  }

  MType type(int d) {
    int r = below(rng_, 10);
    if (d <= 0 || r < 3) return MType::set();
    if (r < 5) return MType::mode("m1_subset_1", {term(d - 1)});
    if (r < 6) return MType::mode("m2", {});
    if (r < 7) return MType::mode("m3", {term(d - 1), term(d - 1)});
    return MType::attr(chance(rng_, 500) ? "v1" : "v2", type(d - 1), chance(rng_, 400));
  }

  std::vector<MTerm> terms(std::size_t n, int d) {
    std::vector<MTerm> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(term(d));
    return out;
  }

  MTerm term(int d) {
    if (d > 0 && chance(rng_, o_.the_rate)) return MTerm::the(type(d - 1));
    if (d > 0 && chance(rng_, o_.fraenkel_rate)) return fraenkel(d - 1);
    int r = below(rng_, d > 0 ? 7 : 3);
    if (r == 0 && !objects_.empty()) {
      return MTerm::obj_var(objects_[below(rng_, static_cast<int>(objects_.size()))]);
    }
    if (r <= 2) {
      if (!objects_.empty() && chance(rng_, 600)) {
        return MTerm::obj_var(objects_[below(rng_, static_cast<int>(objects_.size()))]);
      }
      return MTerm::obj_const(chance(rng_, 500) ? "c" : "d");
    }
    if (r == 3) return MTerm::fun_const_app("f", terms(1, d - 1));
    if (r == 4) return MTerm::fun_const_app("g", terms(2, d - 1));
    if (!funcs_.empty()) {
      const auto& [name, arity] = funcs_[below(rng_, static_cast<int>(funcs_.size()))];
      return MTerm::fun_var_app(name, terms(arity, d - 1));
    }
    return MTerm::fun_const_app("f", terms(1, d - 1));
  }

  MTerm fraenkel(int d) {
    int n = 1 + below(rng_, o_.max_fraenkel_binders);
    std::vector<mizar::FraenkelBinder> binders;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
      std::string name;
      do {
        name = bound_name();
      } while (std::find(names.begin(), names.end(), name) != names.end());
      names.push_back(name);
      binders.push_back({name, type(d), {}});
      objects_.push_back(name);
    }
    MTerm body = term(d);
    MProp guard = prop(d);
    objects_.resize(objects_.size() - static_cast<std::size_t>(n));
    return MTerm::fraenkel(std::move(binders), std::move(body), std::move(guard));
  }

  MProp atomic(int d) {
    switch (below(rng_, 9)) {
      case 0: return MProp::eq(term(d), term(d));
      case 1: return MProp::in(term(d), term(d));
      case 2: return MProp::pred_const_app("p", terms(1, d));
      case 3: return MProp::pred_const_app("r", terms(2, d));
      case 4: return MProp::pred_const_app("m2", terms(1, d));
      case 5: return MProp::pred_const_app("v1", terms(1, d));
      case 6: return MProp::pred_const_app("m1_subset_1", terms(2, d));
      default:
        if (!preds_.empty()) {
          const auto& [name, arity] = preds_[below(rng_, static_cast<int>(preds_.size()))];
          return MProp::pred_var_app(name, terms(arity, d));
        }
        return MProp::in(term(d), term(d));
    }
  }

  MProp prop(int d) {
    if (d <= 0) return atomic(0);
    switch (below(rng_, 12)) {
      case 0: return MProp::negation(prop(d - 1));
      case 1: return MProp::binary(MProp::Kind::And, prop(d - 1), prop(d - 1));
      case 2: return MProp::binary(MProp::Kind::Or, prop(d - 1), prop(d - 1));
      case 3: return MProp::binary(MProp::Kind::Imp, prop(d - 1), prop(d - 1));
      case 4: return MProp::binary(MProp::Kind::Iff, prop(d - 1), prop(d - 1));
      case 5:
      case 6:
      case 7: {
        std::string name = bound_name();
        MType ty = type(d - 1);
        objects_.push_back(name);
        MProp body = prop(d - 1);
        objects_.pop_back();
        auto kind = below(rng_, 2) == 0 ? MProp::Kind::ForBeing : MProp::Kind::ExBeing;
        return MProp::quantifier(kind, name, ty, body);
      }
      default:
        return atomic(d - 1);
    }
  }

  Rng& rng_;
  const StatementOptions& o_;
  std::vector<std::string> objects_;
  std::vector<std::pair<std::string, std::size_t>> funcs_;
  std::vector<std::pair<std::string, std::size_t>> preds_;
  int counter_ = 0;
};

struct Finder {
  bool want_the;

  bool type(const MType& t) const {
    switch (t.kind()) {
      case MType::Kind::Set: return false;
      case MType::Kind::Mode: return any(t.args());
      case MType::Kind::Attr: return type(t.base());
    }
    return false;
  }
  bool any(const std::vector<MTerm>& ts) const {
    return std::any_of(ts.begin(), ts.end(), [&](const MTerm& t) { return term(t); });
  }
  bool term(const MTerm& t) const {
    switch (t.kind()) {
      case MTerm::Kind::ObjVar:
      case MTerm::Kind::ObjConst: return false;
      case MTerm::Kind::FunVarApp:
      case MTerm::Kind::FunConstApp: return any(t.args());
      case MTerm::Kind::The: return want_the || type(t.type());
      case MTerm::Kind::Fraenkel: {
        if (!want_the) return true;
        for (const auto& b : t.binders()) {
          if (type(b.type)) return true;
        }
        return term(t.body()) || prop(t.guard());
      }
    }
    return false;
  }
  bool prop(const MProp& p) const {
    switch (p.kind()) {
      case MProp::Kind::PredVarApp:
      case MProp::Kind::PredConstApp: return any(p.args());
      case MProp::Kind::Eq:
      case MProp::Kind::In: return term(p.left()) || term(p.right());
      case MProp::Kind::Not: return prop(p.operand());
      case MProp::Kind::ForBeing:
      case MProp::Kind::ExBeing: return type(p.var_type()) || prop(p.body());
      default: return prop(p.lhs()) || prop(p.rhs());
    }
  }
  bool statement(const mizar::MStatement& s) const {
    for (const auto& d : s.prefix) {
      // Predicate argument types do not survive translation: ∀P is bare.
      if (d.kind == mizar::VarDecl::Kind::Predicate) continue;
      for (const auto& a : d.arg_types) {
        if (type(a)) return true;
      }
      if (d.result && type(*d.result)) return true;
    }
    return prop(s.body);
  }
};

}  // namespace

mizar::MStatement random_statement(Rng& rng, const StatementOptions& opts) {
  return StatementGen(rng, opts).statement();
}

bool contains_the(const mizar::MStatement& s) { return Finder{true}.statement(s); }
bool contains_fraenkel(const mizar::MStatement& s) { return Finder{false}.statement(s); }

std::string mutate(Rng& rng, std::string text) {
  static const char* const vocab[] = {
      "{",   "}",   "(",    ")",       "[",    "]",      ",",      ":",      "=",  "&",
      "->",  "in",  "not",  "for",     "ex",   "the",    "where",  "is",     "st", "holds",
      "being", "set", "non", "scheme", "statement", "provided", "and", "Element", "of",
      "implies", "iff", "or", "x", "c", "f", "m2", "v1", "::", "\n", " ", "\0", "\xff"};
  int edits = 1 + below(rng, 4);
  for (int e = 0; e < edits; ++e) {
    std::size_t n = text.size();
    std::size_t at = n == 0 ? 0 : static_cast<std::size_t>(below(rng, static_cast<int>(n) + 1));
    std::size_t len = 1 + static_cast<std::size_t>(below(rng, 8));
    switch (below(rng, 6)) {
      case 0:
        text.erase(at, len);
        break;
      case 1:
        text.insert(at, text.substr(at, len));
        break;
      case 2:
      case 3: {
        std::string tok = vocab[below(rng, static_cast<int>(std::size(vocab)))];
        if (tok.empty()) tok.push_back('\0');
        text.insert(at, " " + tok + " ");
        break;
      }
      case 4:
        if (at < n) text[at] = static_cast<char>(below(rng, 256));
        break;
      default:
        text.resize(at);
    }
  }
  return text;
}

std::string random_bytes(Rng& rng, std::size_t max_len) {
  static const std::string_view syntax = "{}()[],:=&-> \n";
  std::size_t len = static_cast<std::size_t>(below(rng, static_cast<int>(max_len) + 1));
  std::string out;
  for (std::size_t i = 0; i < len; ++i) {
    if (chance(rng, 400)) {
      out.push_back(syntax[below(rng, static_cast<int>(syntax.size()))]);
    } else if (chance(rng, 500)) {
      out.push_back(static_cast<char>('a' + below(rng, 26)));
    } else {
      out.push_back(static_cast<char>(below(rng, 256)));
    }
  }
  return out;
}

namespace {

const Type kI = Type::iota();
const Type kO = Type::o();

Term pc(const char* name, Type t) { return Term::constant(name, std::move(t)); }

class PatternGen {
 public:
  explicit PatternGen(Rng& rng) : rng_(rng) {}

  Term gen(const Type& want, int d, bool metas) {
    return want.is_o() ? formula(d, metas) : individual(d, metas);
  }

  std::vector<std::pair<match::MetaVar, Term>> solve() {
    std::vector<std::pair<match::MetaVar, Term>> out;
    for (const auto& m : metas_) {
      std::vector<Term> args;
      for (std::size_t k = 0; k < m.arity; ++k) {
        args.push_back(Term::var("a" + std::to_string(k), kI));
      }
      std::vector<Term> saved = std::move(bound_);
      bound_ = args;
      Term body = gen(m.var.type.result(), 2 + below(rng_, 2), false);
      bound_ = std::move(saved);
      out.emplace_back(m.var, hol::lam(args, body));
    }
    return out;
  }

 private:
  struct Meta {
    match::MetaVar var;
    std::size_t arity;
  };

  Term bound_var() { return bound_[below(rng_, static_cast<int>(bound_.size()))]; }

  Term fresh_bound() { return Term::var("v" + std::to_string(counter_++), kI); }

  Term meta_app(const Type& result) {
    std::size_t k = static_cast<std::size_t>(
        below(rng_, static_cast<int>(std::min<std::size_t>(3, bound_.size())) + 1));
    std::vector<Term> args = bound_;
    std::shuffle(args.begin(), args.end(), rng_);
    args.erase(args.begin() + static_cast<std::ptrdiff_t>(k), args.end());
    std::vector<std::size_t> same;
    for (std::size_t i = 0; i < metas_.size(); ++i) {
      if (metas_[i].arity == k && metas_[i].var.type.result() == result) same.push_back(i);
    }
    if (!same.empty() && chance(rng_, 300)) {
      const Meta& m = metas_[same[below(rng_, static_cast<int>(same.size()))]];
      return hol::apply(m.var.term(), args);
    }
    match::MetaVar mv{"M" + std::to_string(metas_.size()), Type::iota_n(k, result)};
    metas_.push_back({mv, k});
    return hol::apply(mv.term(), args);
  }

  Term individual(int d, bool metas) {
    int r = below(rng_, d > 0 ? 8 : 3);
    if (metas && chance(rng_, 250)) return meta_app(kI);
    if (r == 0 && !bound_.empty()) return bound_var();
    if (r <= 2) return chance(rng_, 500) ? pc("c", kI) : pc("d", kI);
    if (r == 3) return hol::apply(pc("f", Type::arrow(kI, kI)), {individual(d - 1, metas)});
    if (r <= 5) {
      return hol::apply(pc("g", Type::iota_n(2, kI)),
                        {individual(d - 1, metas), individual(d - 1, metas)});
    }
    if (r == 6) {
      Term v = fresh_bound();
      bound_.push_back(v);
      Term body = individual(d - 1, metas);
      bound_.pop_back();
      return hol::apply(pc("h", Type::arrow(Type::arrow(kI, kI), kI)), {hol::lam(v, body)});
    }
    return bound_.empty() ? pc("c", kI) : bound_var();
  }

  Term formula(int d, bool metas) {
    if (metas && chance(rng_, 200)) return meta_app(kO);
    int r = below(rng_, d > 0 ? 12 : 4);
    switch (r) {
      case 0: return hol::apply(pc("p", Type::arrow(kI, kO)), {individual(d - 1, metas)});
      case 1:
        return hol::apply(pc("r", Type::iota_n(2, kO)),
                          {individual(d - 1, metas), individual(d - 1, metas)});
      case 2: return hol::eq(individual(d - 1, metas), individual(d - 1, metas));
      case 3: return hol::top();
      case 4: return hol::neg(formula(d - 1, metas));
      case 5: return hol::conj(formula(d - 1, metas), formula(d - 1, metas));
      case 6: return hol::disj(formula(d - 1, metas), formula(d - 1, metas));
      case 7: return hol::implies(formula(d - 1, metas), formula(d - 1, metas));
      case 8: return hol::iff(formula(d - 1, metas), formula(d - 1, metas));
      default: {
        Term v = fresh_bound();
        bound_.push_back(v);
        Term body = formula(d - 1, metas);
        bound_.pop_back();
        if (r == 9) return hol::forall(v, body);
        if (r == 10) return hol::exists(v, body);
        return hol::apply(pc("q", Type::arrow(Type::arrow(kI, kO), kO)), {hol::lam(v, body)});
      }
    }
  }

  Rng& rng_;
  std::vector<Term> bound_;
  std::vector<Meta> metas_;
  int counter_ = 0;
};

}  // namespace

PatternProblem random_pattern_problem(Rng& rng, int depth) {
  PatternGen gen(rng);
  Term lhs = gen.gen(Type::o(), depth, true);
  auto planted = gen.solve();
  Term rhs = hol::beta_normalize(hol::replace_metas(lhs, [&](const Term& m) -> std::optional<Term> {
    for (const auto& [mv, v] : planted) {
      if (mv.name == m.name()) return v;
    }
    return std::nullopt;
  }));
  return {lhs, rhs, std::move(planted)};
}

namespace {

// Rebuilds `t`, replacing the `target`-th individual leaf (counting from 0).
Term replace_leaf(const Term& t, int& target) {
  using hol::TermKind;
  switch (t.kind()) {
    case TermKind::Const:
      if (t.type().is_iota() && target-- == 0) return pc("e", kI);
      return t;
    case TermKind::BVar:
      if (target-- == 0) return pc("e", kI);
      return t;
    case TermKind::App: return Term::app(replace_leaf(t.fn(), target), replace_leaf(t.arg(), target));
    case TermKind::Eq: {
      Term l = replace_leaf(t.lhs(), target);
      return Term::eq(l, replace_leaf(t.rhs(), target), t.type());
    }
    case TermKind::Neg: return Term::neg(replace_leaf(t.operand(), target));
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Imp:
    case TermKind::Iff: {
      Term l = replace_leaf(t.lhs(), target);
      return Term::binary(t.kind(), l, replace_leaf(t.rhs(), target));
    }
    case TermKind::Lam:
    case TermKind::All:
    case TermKind::Ex:
      return Term::binder(t.kind(), t.name(), t.type(), replace_leaf(t.body(), target));
    default:
      return t;
  }
}

}  // namespace

Term perturb(Rng& rng, const Term& t) {
  int count = 0;
  {
    int probe = 1 << 30;
    replace_leaf(t, probe);
    count = (1 << 30) - probe;
  }
  if (count == 0) return hol::neg(t);
  int target = below(rng, count);
  return replace_leaf(t, target);
}

bool same_function(const Term& f, const Term& g) {
  Type ty = hol::infer_type(f);
  if (ty != hol::infer_type(g)) return false;
  std::vector<Term> args;
  for (Type cur = ty; cur.is_arrow(); cur = cur.codomain()) {
    args.push_back(Term::var("arg" + std::to_string(args.size()), cur.domain()));
  }
  return hol::alpha_eq(hol::beta_normalize(hol::apply(f, args)),
                       hol::beta_normalize(hol::apply(g, args)));
}

namespace {

class TypedGen {
 public:
  explicit TypedGen(Rng& rng) : rng_(rng) {}

  Term gen(const Type& t, int d) {
    if (d <= 0) return leaf(t);
    int r = below(rng_, 10);
    if (r < 2) {
      // Redex (λv:s. body) arg, or an applied constant.
      static const Type kinds[] = {kI, Type::arrow(kI, kI), Type::arrow(kI, kO)};
      const Type& s = kinds[below(rng_, 3)];
      return Term::app(gen(Type::arrow(s, t), d - 1), gen(s, d - 1));
    }
    if (t.is_arrow() && r < 6) {
      Term v = Term::var("w" + std::to_string(counter_++), t.domain());
      vars_.push_back(v);
      Term body = gen(t.codomain(), d - 1);
      vars_.pop_back();
      return hol::lam(v, body);
    }
    if (t.is_o() && r < 8) {
      switch (below(rng_, 6)) {
        case 0: return hol::neg(gen(kO, d - 1));
        case 1: return hol::conj(gen(kO, d - 1), gen(kO, d - 1));
        case 2: return hol::implies(gen(kO, d - 1), gen(kO, d - 1));
        case 3: return hol::eq(gen(kI, d - 1), gen(kI, d - 1));
        default: {
          Term v = Term::var("w" + std::to_string(counter_++), chance(rng_, 700) ? kI : Type::arrow(kI, kO));
          vars_.push_back(v);
          Term body = gen(kO, d - 1);
          vars_.pop_back();
          return below(rng_, 2) ? hol::forall(v, body) : hol::exists(v, body);
        }
      }
    }
    return leaf(t);
  }

 private:
  Term leaf(const Type& t) {
    std::vector<Term> fits;
    for (const Term& v : vars_) {
      if (v.type() == t) fits.push_back(v);
    }
    if (!fits.empty() && chance(rng_, 700)) return fits[below(rng_, static_cast<int>(fits.size()))];
    return Term::constant("k" + t.to_string(), t);
  }

  Rng& rng_;
  std::vector<Term> vars_;
  int counter_ = 0;
};

}  // namespace

Term random_typed_term(Rng& rng, const Type& t, int depth) { return TypedGen(rng).gen(t, depth); }

std::vector<CorpusProblem> corpus_problems() {
  std::istringstream in(read_file(corpus_dir() / "problems.txt"));
  std::vector<CorpusProblem> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    CorpusProblem cp;
    if (!(fields >> cp.name >> cp.conjecture)) continue;
    for (std::string a; fields >> a;) cp.axioms.push_back(a);
    out.push_back(std::move(cp));
  }
  return out;
}

const mizar::Signature& corpus_signature() {
  static const mizar::Signature sig = mizar::parse_signature(read_file(corpus_dir() / "mml.sig"));
  return sig;
}

thf::Problem build_problem(const CorpusProblem& cp) {
  const mizar::Signature& sig = corpus_signature();
  auto load = [&](const std::string& file) {
    return mizar::parse_statement(read_file(corpus_dir() / file), sig);
  };
  mizar::MStatement goal = load(cp.conjecture);
  std::vector<translate::NamedFormula> axioms;
  for (const auto& a : cp.axioms) {
    mizar::MStatement s = load(a);
    std::string name = s.name.empty() ? std::filesystem::path(a).stem().string() : s.name;
    axioms.push_back({name, translate::translate_statement(s, sig)});
  }
  std::string name = goal.name.empty() ? "goal" : goal.name;
  return thf::assemble_problem({name, translate::translate_statement(goal, sig)},
                               std::move(axioms), sig);
}

std::vector<translate::Declaration> context_declarations(const mizar::Signature& sig) {
  std::vector<translate::Declaration> out = translate::base_declarations(nullptr);
  for (std::size_t n = 1; n <= 6; ++n) out.push_back(translate::gen_repl_sep_decl(n));
  for (const auto& sym : sig.symbols()) {
    if (sym.name == mizar::kMembership) continue;
    out.push_back({sym.name, translate::constant_type(sym), std::nullopt, {}});
  }
  return out;
}

}  // namespace mizhol::testing
