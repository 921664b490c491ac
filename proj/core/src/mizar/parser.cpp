#include "mizhol/mizar/parser.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "lexer.hpp"
#include "mizhol/mizar/well_formed.hpp"

namespace mizhol::mizar {

namespace {

using detail::Token;

struct Binding {
  enum class Kind { Object, Function, Predicate };
  std::string name;
  Kind kind;
  std::size_t arity = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Signature& sig)
      : toks_(std::move(tokens)), sig_(sig) {}

  MStatement statement() {
    MStatement st{{}, {}, MProp::eq(MTerm::obj_var(""), MTerm::obj_var(""))};
    if (accept("scheme")) {
      st.name = identifier("scheme name");
      expect("{");
      if (!peek("}")) {
        do {
          st.prefix.push_back(declaration(st.prefix));
        } while (accept(","));
      }
      expect("}");
    } else if (!accept("statement")) {
      syntax("'scheme' or 'statement'");
    }
    expect(":");
    MProp body = prop();
    if (accept("provided")) {
      std::vector<MProp> hyps{prop()};
      while (accept("and")) hyps.push_back(prop());
      for (auto it = hyps.rbegin(); it != hyps.rend(); ++it) {
        body = MProp::binary(MProp::Kind::Imp, *it, body, it->loc());
      }
    }
    if (cur().kind != Token::Kind::End) syntax("end of input");
    st.body = std::move(body);
    return st;
  }

  Diagnostics& diagnostics() { return diags_; }

 private:
  // Token plumbing

  const Token& cur() const { return toks_[pos_]; }
  const Token& at(std::size_t k) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool peek(std::string_view s) const { return cur().is(s); }
  bool accept(std::string_view s) {
    if (!peek(s)) return false;
    ++pos_;
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) syntax("'" + std::string(s) + "'");
  }

  [[noreturn]] void syntax(const std::string& expected) {
    const Token& t = cur();
    std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    diags_.push_back({DiagCode::SyntaxError, t.loc, "expected " + expected + ", found " + found});
    throw ParseError(diags_);
  }

  void soft(DiagCode code, SourceLoc loc, std::string msg) {
    diags_.push_back({code, loc, std::move(msg)});
  }

  std::string identifier(const char* what) {
    const Token& t = cur();
    if (t.kind != Token::Kind::Ident || is_keyword(t.text)) syntax(what);
    ++pos_;
    return t.text;
  }

  bool at_name() const { return cur().kind == Token::Kind::Ident && !is_keyword(cur().text); }

  // Nesting limit keeps hostile input from exhausting the stack.
  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxDepth) p_.syntax("less deeply nested input");
    }
    ~DepthGuard() { --p_.depth_; }
    Parser& p_;
  };
  static constexpr int kMaxDepth = 400;

  // Scopes

  // By value: parsing nested binders grows scope_.
  std::optional<Binding> lookup(std::string_view name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->name == name) return *it;
    }
    return std::nullopt;
  }

  void push_object(const std::string& name) { scope_.push_back({name, Binding::Kind::Object, 0}); }
  void pop(std::size_t n) { scope_.resize(scope_.size() - n); }

  void check_arity(const std::string& name, std::size_t expected, std::size_t found,
                   SourceLoc loc) {
    if (expected != found) {
      soft(DiagCode::ArityMismatch, loc,
           name + " expects " + std::to_string(expected) + " argument(s), found " +
               std::to_string(found));
    }
  }

  // Scheme header

  VarDecl declaration(const Prefix& earlier) {
    SourceLoc loc = cur().loc;
    std::string name = identifier("variable declaration");
    bool dup = std::any_of(earlier.begin(), earlier.end(),
                           [&](const VarDecl& d) { return d.name == name; });
    if (dup) soft(DiagCode::DuplicateName, loc, "variable " + name + " declared twice");
    VarDecl decl = [&] {
      if (accept("(")) {
        if (accept(")")) {
          expect("->");
          return VarDecl::object(name, type(), loc);
        }
        std::vector<MType> args{type()};
        while (accept(",")) args.push_back(type());
        expect(")");
        expect("->");
        return VarDecl::function(name, std::move(args), type(), loc);
      }
      if (accept("[")) {
        std::vector<MType> args;
        if (!peek("]")) {
          args.push_back(type());
          while (accept(",")) args.push_back(type());
        }
        expect("]");
        return VarDecl::predicate(name, std::move(args), loc);
      }
      syntax("'(' or '['");
    }();
    switch (decl.kind) {
      case VarDecl::Kind::Object:
        scope_.push_back({name, Binding::Kind::Object, 0});
        break;
      case VarDecl::Kind::Function:
        scope_.push_back({name, Binding::Kind::Function, decl.arity()});
        break;
      case VarDecl::Kind::Predicate:
        scope_.push_back({name, Binding::Kind::Predicate, decl.arity()});
        break;
    }
    return decl;
  }

  // Types

  MType type() {
    DepthGuard guard(*this);
    SourceLoc loc = cur().loc;
    if (accept("set")) return MType::set(loc);
    if (accept("(")) {
      MType t = type();
      expect(")");
      return t;
    }
    if (accept("non")) {
      SourceLoc qloc = cur().loc;
      std::string q = identifier("attribute");
      check_attribute(q, qloc);
      return MType::attr(q, type(), true, loc);
    }
    if (accept("Element")) {
      expect("of");
      const Symbol* mode = sig_.element_of_mode();
      std::string name = mode ? mode->name : "Element";
      if (!mode) soft(DiagCode::UnknownName, loc, "no mode is tagged elementof");
      return MType::mode(name, {term()}, loc);
    }
    std::string name = identifier("a type");
    const Symbol* sym = sig_.find(name);
    if (!sym) {
      soft(DiagCode::UnknownName, loc, "unknown type constructor " + name);
      return MType::mode(name, optional_args(), loc);
    }
    if (sym->kind == SymbolKind::Attribute) return MType::attr(name, type(), false, loc);
    if (sym->kind != SymbolKind::Mode) {
      soft(DiagCode::KindMismatch, loc,
           name + " is a " + std::string(to_string(sym->kind)) + ", not a mode or attribute");
    }
    std::vector<MTerm> args = optional_args();
    if (sym->kind == SymbolKind::Mode) check_arity(name, sym->explicit_arity(), args.size(), loc);
    return MType::mode(name, std::move(args), loc);
  }

  void check_attribute(const std::string& q, SourceLoc loc) {
    const Symbol* sym = sig_.find(q);
    if (!sym) {
      soft(DiagCode::UnknownName, loc, "unknown attribute " + q);
    } else if (sym->kind != SymbolKind::Attribute) {
      soft(DiagCode::KindMismatch, loc,
           q + " is a " + std::string(to_string(sym->kind)) + ", not an attribute");
    }
  }

  std::vector<MTerm> optional_args() {
    std::vector<MTerm> args;
    if (accept("(")) {
      if (accept(")")) return args;
      args.push_back(term());
      while (accept(",")) args.push_back(term());
      expect(")");
    }
    return args;
  }

  // Terms

  MTerm term() {
    DepthGuard guard(*this);
    SourceLoc loc = cur().loc;
    if (accept("the")) return MTerm::the(type(), loc);
    if (peek("{")) return fraenkel();
    std::string name = identifier("a term");
    if (accept("(")) {
      std::vector<MTerm> args;
      if (!accept(")")) {
        args.push_back(term());
        while (accept(",")) args.push_back(term());
        expect(")");
      }
      if (args.empty()) return object(name, loc);
      return application(name, std::move(args), loc);
    }
    return object(name, loc);
  }

  MTerm object(const std::string& name, SourceLoc loc) {
    if (auto b = lookup(name)) {
      if (b->kind != Binding::Kind::Object) {
        soft(DiagCode::KindMismatch, loc, name + " is not an object variable");
      }
      return MTerm::obj_var(name, loc);
    }
    const Symbol* sym = sig_.find(name);
    if (!sym) {
      soft(DiagCode::UnknownName, loc, "unknown name " + name);
      return MTerm::obj_var(name, loc);
    }
    if (sym->kind != SymbolKind::ObjectConst) {
      soft(DiagCode::KindMismatch, loc,
           name + " is a " + std::string(to_string(sym->kind)) + ", not an object");
    }
    return MTerm::obj_const(name, loc);
  }

  MTerm application(const std::string& name, std::vector<MTerm> args, SourceLoc loc) {
    if (auto b = lookup(name)) {
      if (b->kind != Binding::Kind::Function) {
        soft(DiagCode::KindMismatch, loc, name + " is not a function variable");
      } else {
        check_arity(name, b->arity, args.size(), loc);
      }
      return MTerm::fun_var_app(name, std::move(args), loc);
    }
    const Symbol* sym = sig_.find(name);
    if (!sym) {
      soft(DiagCode::UnknownName, loc, "unknown function " + name);
    } else if (sym->kind != SymbolKind::FunctionConst) {
      soft(DiagCode::KindMismatch, loc,
           name + " is a " + std::string(to_string(sym->kind)) + ", not a function");
    } else {
      check_arity(name, sym->arity, args.size(), loc);
    }
    return MTerm::fun_const_app(name, std::move(args), loc);
  }

  // Binder names of the Fraenkel term starting at the current '{': every
  // identifier directly followed by `is` at nesting depth zero after `where`.
  std::vector<std::string> prescan_binders() const {
    std::vector<std::string> names;
    int depth = 0;
    bool after_where = false;
    for (std::size_t k = pos_ + 1; k < toks_.size(); ++k) {
      const Token& t = toks_[k];
      if (t.kind == Token::Kind::End) break;
      if (t.is("{") || t.is("(") || t.is("[")) {
        ++depth;
      } else if (t.is(")") || t.is("]")) {
        --depth;
      } else if (t.is("}")) {
        if (depth == 0) break;
        --depth;
      } else if (depth == 0) {
        if (t.is("where")) {
          after_where = true;
        } else if (after_where && t.is(":")) {
          break;
        } else if (after_where && t.kind == Token::Kind::Ident && k + 1 < toks_.size() &&
                   toks_[k + 1].is("is")) {
          names.push_back(t.text);
        }
      }
    }
    return names;
  }

  MTerm fraenkel() {
    SourceLoc loc = cur().loc;
    std::vector<std::string> names = prescan_binders();
    expect("{");
    for (const auto& n : names) push_object(n);
    MTerm body = term();
    pop(names.size());
    expect("where");
    std::vector<FraenkelBinder> binders;
    std::set<std::string> seen;
    do {
      SourceLoc bloc = cur().loc;
      std::string name = identifier("a bound variable");
      expect("is");
      if (!seen.insert(name).second) {
        soft(DiagCode::DuplicateName, bloc, "Fraenkel variable " + name + " bound twice");
      }
      MType ty = type();
      binders.push_back({name, ty, bloc});
      push_object(name);
    } while (accept(","));
    expect(":");
    MProp guard = prop();
    expect("}");
    pop(binders.size());
    return MTerm::fraenkel(std::move(binders), std::move(body), std::move(guard), loc);
  }

  // Propositions: not > & > or > implies > iff, binary connectives right
  // associative, quantifier bodies extend as far as possible.

  MProp prop() { return iff(); }

  MProp iff() {
    SourceLoc loc = cur().loc;
    MProp l = imp();
    if (accept("iff")) return MProp::binary(MProp::Kind::Iff, l, iff(), loc);
    return l;
  }

  MProp imp() {
    SourceLoc loc = cur().loc;
    MProp l = disj();
    if (accept("implies")) return MProp::binary(MProp::Kind::Imp, l, imp(), loc);
    return l;
  }

  MProp disj() {
    SourceLoc loc = cur().loc;
    MProp l = conj();
    if (accept("or")) return MProp::binary(MProp::Kind::Or, l, disj(), loc);
    return l;
  }

  MProp conj() {
    SourceLoc loc = cur().loc;
    MProp l = unary();
    if (accept("&")) return MProp::binary(MProp::Kind::And, l, conj(), loc);
    return l;
  }

  MProp unary() {
    DepthGuard guard(*this);
    SourceLoc loc = cur().loc;
    if (accept("not")) return MProp::negation(unary(), loc);
    if (peek("for") || peek("ex")) return quantified();
    return atom();
  }

  MProp quantified() {
    SourceLoc loc = cur().loc;
    bool universal = accept("for");
    if (!universal) expect("ex");
    std::vector<std::pair<std::string, SourceLoc>> vars;
    do {
      SourceLoc vloc = cur().loc;
      vars.emplace_back(identifier("a bound variable"), vloc);
    } while (accept(","));
    std::size_t type_begin = pos_;
    MType ty = accept("being") ? type() : MType::set(loc);
    // The type is repeated under each earlier variable of the list.
    for (std::size_t k = type_begin; k < pos_; ++k) {
      for (std::size_t v = 0; v + 1 < vars.size(); ++v) {
        if (toks_[k].kind == Token::Kind::Ident && toks_[k].text == vars[v].first) {
          soft(DiagCode::ScopeError, toks_[k].loc,
               "type of " + vars[v + 1].first + " would be captured by " + vars[v].first);
        }
      }
    }
    for (const auto& v : vars) push_object(v.first);
    MProp body = [&] {
      if (universal) {
        std::optional<MProp> cond;
        if (accept("st")) cond = prop();
        expect("holds");
        MProp b = prop();
        if (cond) return MProp::binary(MProp::Kind::Imp, *cond, b, cond->loc());
        return b;
      }
      expect("st");
      return prop();
    }();
    pop(vars.size());
    auto kind = universal ? MProp::Kind::ForBeing : MProp::Kind::ExBeing;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
      SourceLoc qloc = it + 1 == vars.rend() ? loc : it->second;
      body = MProp::quantifier(kind, it->first, ty, body, qloc);
    }
    return body;
  }

  MProp atom() {
    SourceLoc loc = cur().loc;
    if (accept("(")) {
      MProp p = prop();
      expect(")");
      return p;
    }
    if (at_name()) {
      const std::string name = cur().text;
      auto b = lookup(name);
      if (b && b->kind == Binding::Kind::Predicate) {
        ++pos_;
        auto args = bracket_args();
        check_arity(name, b->arity, args.size(), loc);
        return MProp::pred_var_app(name, std::move(args), loc);
      }
      const Symbol* sym = b ? nullptr : sig_.find(name);
      if (sym && (sym->kind == SymbolKind::PredicateConst || sym->kind == SymbolKind::Mode ||
                  sym->kind == SymbolKind::Attribute)) {
        ++pos_;
        auto args = optional_args();
        check_arity(name, sym->arity, args.size(), loc);
        return MProp::pred_const_app(name, std::move(args), loc);
      }
      if (!b && !sym && at(1).is("[")) {
        ++pos_;
        soft(DiagCode::UnknownName, loc, "unknown predicate variable " + name);
        return MProp::pred_var_app(name, bracket_args(), loc);
      }
      if (b && b->kind == Binding::Kind::Function && at(1).is("[")) {
        ++pos_;
        soft(DiagCode::KindMismatch, loc, name + " is not a predicate variable");
        return MProp::pred_var_app(name, bracket_args(), loc);
      }
    }
    MTerm l = term();
    if (accept("=")) return MProp::eq(std::move(l), term(), loc);
    if (accept("in")) return MProp::in(std::move(l), term(), loc);
    syntax("'=' or 'in'");
  }

  std::vector<MTerm> bracket_args() {
    expect("[");
    std::vector<MTerm> args;
    if (!accept("]")) {
      args.push_back(term());
      while (accept(",")) args.push_back(term());
      expect("]");
    }
    return args;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  const Signature& sig_;
  std::vector<Binding> scope_;
  Diagnostics diags_;
};

}  // namespace

MStatement parse_statement(std::string_view text, const Signature& sig) {
  Parser p(detail::tokenize(text), sig);
  MStatement st = p.statement();
  if (!p.diagnostics().empty()) throw ParseError(std::move(p.diagnostics()));
  if (auto diags = well_formed(st, sig); !diags.empty()) throw ParseError(std::move(diags));
  return st;
}

}  // namespace mizhol::mizar
