#include "mizhol/thf/check.hpp"

#include <cctype>
#include <map>
#include <set>

#include "mizhol/hol/ops.hpp"
#include "mizhol/hol/typing.hpp"

namespace mizhol::thf {

using hol::Term;
using hol::Type;

const ThfEntry* ThfDocument::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

namespace {

struct Token {
  enum class Kind { Lower, Upper, Dollar, Number, Quoted, Punct, End };
  Kind kind;
  std::string text;
  SourceLoc loc;
};

struct SyntaxFail {
  Diagnostic diag;
};

[[noreturn]] void fail(SourceLoc loc, std::string msg) {
  throw SyntaxFail{{DiagCode::SyntaxError, loc, std::move(msg)}};
}

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < s.size(); ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  static const char* const kPuncts[] = {"<=>", "<~>", "=>", "<=", "!=", "~|", "~&", "(", ")",
                                        "[",   "]",   ",",  ":",  ".",  "@",  "&",  "|", "~",
                                        "=",   "!",   "?",  "^",  ">"};
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    SourceLoc loc{line, col};
    if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
      std::size_t end = s.find("*/", i + 2);
      if (end == std::string_view::npos) fail(loc, "unterminated comment");
      advance(end + 2 - i);
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '$') {
      advance(1);
      while (i < s.size() && word_char(s[i])) advance(1);
      std::string text(s.substr(start, i - start));
      Token::Kind kind = c == '$' ? Token::Kind::Dollar
                         : std::isupper(static_cast<unsigned char>(c)) ? Token::Kind::Upper
                                                                       : Token::Kind::Lower;
      if (kind == Token::Kind::Dollar && text.size() == 1) fail(loc, "expected a word after '$'");
      out.push_back({kind, std::move(text), loc});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) advance(1);
      out.push_back({Token::Kind::Number, std::string(s.substr(start, i - start)), loc});
      continue;
    }
    if (c == '\'') {
      advance(1);
      while (i < s.size() && s[i] != '\'' && s[i] != '\n') advance(1);
      if (i >= s.size() || s[i] != '\'') fail(loc, "unterminated quoted name");
      advance(1);
      out.push_back({Token::Kind::Quoted, std::string(s.substr(start, i - start)), loc});
      continue;
    }
    bool matched = false;
    for (const char* p : kPuncts) {
      std::string_view pv(p);
      if (s.substr(i, pv.size()) == pv) {
        out.push_back({Token::Kind::Punct, std::string(pv), loc});
        advance(pv.size());
        matched = true;
        break;
      }
    }
    if (!matched) fail(loc, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Kind::End, "", {line, col}});
  return out;
}

// Formula syntax before name resolution.
struct Raw {
  enum class Kind { Const, Var, True, False, App, Binary, Not, Quant };
  Kind kind;
  std::string op;  // binary connective, quantifier symbol, or name
  SourceLoc loc;
  std::vector<Raw> kids;
  std::vector<std::pair<std::string, Type>> vars;
};

constexpr int kMaxDepth = 500;

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  bool at_end() const { return peek().kind == Token::Kind::End; }
  const Token& peek() const { return toks_[pos_]; }
  bool is(std::string_view p) const {
    return peek().kind == Token::Kind::Punct && peek().text == p;
  }
  Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  void expect(std::string_view p) {
    if (!is(p)) fail(peek().loc, "expected '" + std::string(p) + "'" + found());
    next();
  }
  std::string found() const {
    return peek().kind == Token::Kind::End ? ", found end of input"
                                           : ", found '" + peek().text + "'";
  }

  // Skips past the next ")." so that parsing can resume after an error.
  void recover() {
    while (!at_end()) {
      Token t = next();
      if (t.kind == Token::Kind::Punct && t.text == ")" && is(".")) {
        next();
        return;
      }
    }
  }

  std::string formula_name() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Lower || t.kind == Token::Kind::Number ||
        t.kind == Token::Kind::Quoted || t.kind == Token::Kind::Upper) {
      return next().text;
    }
    fail(t.loc, "expected a formula name" + found());
  }

  std::string lower_word(const char* what) {
    if (peek().kind != Token::Kind::Lower) fail(peek().loc, std::string("expected ") + what + found());
    return next().text;
  }

  Type type() {
    Type dom = unit_type();
    if (is(">")) {
      next();
      return Type::arrow(dom, type());
    }
    return dom;
  }

  Raw logic() {
    Depth d(*this);
    Raw lhs = unitary();
    if (peek().kind != Token::Kind::Punct) return lhs;
    const std::string op = peek().text;
    if (op == "@" || op == "&" || op == "|") {
      std::vector<Raw> items{std::move(lhs)};
      while (is(op)) {
        next();
        items.push_back(unitary());
      }
      if (op == "@") return Raw{Raw::Kind::App, op, items.front().loc, std::move(items), {}};
      Raw acc = std::move(items.back());
      for (std::size_t i = items.size() - 1; i-- > 0;) {
        SourceLoc loc = items[i].loc;
        acc = Raw{Raw::Kind::Binary, op, loc, {std::move(items[i]), std::move(acc)}, {}};
      }
      return acc;
    }
    if (op == "=" || op == "!=" || op == "=>" || op == "<=" || op == "<=>" || op == "<~>" ||
        op == "~|" || op == "~&") {
      next();
      Raw rhs = unitary();
      SourceLoc loc = lhs.loc;
      Raw out{Raw::Kind::Binary, op, loc, {std::move(lhs), std::move(rhs)}, {}};
      if (peek().kind == Token::Kind::Punct &&
          (is("=") || is("!=") || is("=>") || is("<=") || is("<=>") || is("<~>") || is("&") ||
           is("|") || is("@"))) {
        fail(peek().loc, "ambiguous connective '" + peek().text + "', add parentheses");
      }
      return out;
    }
    return lhs;
  }

 private:
  struct Depth {
    explicit Depth(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxDepth) fail(p_.peek().loc, "formula nested too deeply");
    }
    ~Depth() { --p_.depth_; }
    Parser& p_;
  };

  Type unit_type() {
    Depth d(*this);
    if (is("(")) {
      next();
      Type t = type();
      expect(")");
      return t;
    }
    const Token& t = peek();
    if (t.kind == Token::Kind::Dollar && t.text == "$i") {
      next();
      return Type::iota();
    }
    if (t.kind == Token::Kind::Dollar && t.text == "$o") {
      next();
      return Type::o();
    }
    fail(t.loc, "unsupported type" + found());
  }

  Raw unitary() {
    Depth d(*this);
    const Token& t = peek();
    if (is("(")) {
      next();
      Raw r = logic();
      expect(")");
      return r;
    }
    if (is("~")) {
      SourceLoc loc = next().loc;
      return Raw{Raw::Kind::Not, "~", loc, {unitary()}, {}};
    }
    if (is("!") || is("?") || is("^")) {
      Token q = next();
      expect("[");
      std::vector<std::pair<std::string, Type>> vars;
      for (;;) {
        if (peek().kind != Token::Kind::Upper) fail(peek().loc, "expected a variable" + found());
        std::string name = next().text;
        if (!is(":")) fail(peek().loc, "binder variable '" + name + "' needs a type");
        next();
        vars.emplace_back(std::move(name), type());
        if (!is(",")) break;
        next();
      }
      expect("]");
      expect(":");
      Raw body = unitary();
      return Raw{Raw::Kind::Quant, q.text, q.loc, {std::move(body)}, std::move(vars)};
    }
    switch (t.kind) {
      case Token::Kind::Lower:
        return Raw{Raw::Kind::Const, next().text, t.loc, {}, {}};
      case Token::Kind::Upper:
        return Raw{Raw::Kind::Var, next().text, t.loc, {}, {}};
      case Token::Kind::Dollar:
        if (t.text == "$true") return Raw{Raw::Kind::True, next().text, t.loc, {}, {}};
        if (t.text == "$false") return Raw{Raw::Kind::False, next().text, t.loc, {}, {}};
        fail(t.loc, "unsupported defined word '" + t.text + "'");
      default:
        fail(t.loc, "expected a formula" + found());
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

struct ResolveFail {};

class Resolver {
 public:
  Resolver(const std::map<std::string, Type>& consts, Diagnostics& diags)
      : consts_(consts), diags_(diags) {}

  std::optional<Term> run(const Raw& r) {
    bool before = failed_;
    failed_ = false;
    unknown_.clear();
    std::optional<Term> t;
    try {
      t = resolve(r);
    } catch (const ResolveFail&) {
    } catch (const hol::TypeError& e) {
      diags_.push_back({DiagCode::IllTyped, r.loc, e.what()});
      failed_ = true;
    }
    if (failed_) t.reset();
    failed_ = before || failed_;
    return t;
  }

 private:
  Term resolve(const Raw& r) {
    switch (r.kind) {
      case Raw::Kind::Const: {
        auto it = consts_.find(r.op);
        if (it == consts_.end()) {
          // Once per name and formula.
          if (unknown_.insert(r.op).second) {
            diags_.push_back({DiagCode::UndeclaredConstant, r.loc,
                              "constant '" + r.op + "' is not declared"});
          }
          failed_ = true;
          return Term::top();
        }
        return Term::constant(r.op, it->second);
      }
      case Raw::Kind::Var:
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
          if (it->name() == r.op) return *it;
        }
        diags_.push_back(
            {DiagCode::UnboundVariable, r.loc, "variable '" + r.op + "' is not bound"});
        failed_ = true;
        return Term::top();
      case Raw::Kind::True:
        return hol::top();
      case Raw::Kind::False:
        return hol::neg(hol::top());
      case Raw::Kind::App: {
        Term acc = resolve(r.kids[0]);
        for (std::size_t i = 1; i < r.kids.size(); ++i) acc = Term::app(acc, resolve(r.kids[i]));
        if (!failed_) hol::infer_type(acc);
        return acc;
      }
      case Raw::Kind::Not:
        return hol::neg(resolve(r.kids[0]));
      case Raw::Kind::Binary: {
        Term a = resolve(r.kids[0]);
        Term b = resolve(r.kids[1]);
        if (failed_) return Term::top();
        const std::string& op = r.op;
        if (op == "=" || op == "!=") {
          Type ta = hol::infer_type(a);
          Type tb = hol::infer_type(b);
          if (ta != tb) {
            diags_.push_back({DiagCode::IllTyped, r.loc,
                              "equation between " + ta.to_string() + " and " + tb.to_string()});
            failed_ = true;
            return Term::top();
          }
          Term e = Term::eq(a, b, ta);
          return op == "=" ? e : hol::neg(e);
        }
        if (op == "&") return hol::conj(a, b);
        if (op == "|") return hol::disj(a, b);
        if (op == "=>") return hol::implies(a, b);
        if (op == "<=") return hol::implies(b, a);
        if (op == "<=>") return hol::iff(a, b);
        if (op == "<~>") return hol::neg(hol::iff(a, b));
        if (op == "~|") return hol::neg(hol::disj(a, b));
        return hol::neg(hol::conj(a, b));
      }
      case Raw::Kind::Quant: {
        std::vector<Term> vars;
        for (const auto& [name, type] : r.vars) vars.push_back(Term::var(name, type));
        for (const Term& v : vars) scope_.push_back(v);
        Term body = resolve(r.kids[0]);
        scope_.erase(scope_.end() - static_cast<std::ptrdiff_t>(vars.size()), scope_.end());
        if (r.op == "^") return hol::lam(vars, body);
        if (r.op == "!") return hol::forall(vars, body);
        return hol::exists(vars, body);
      }
    }
    throw ResolveFail{};
  }

  const std::map<std::string, Type>& consts_;
  Diagnostics& diags_;
  std::vector<Term> scope_;
  bool failed_ = false;
  std::set<std::string> unknown_;
};

bool known_role(const std::string& role) {
  static const char* const roles[] = {"axiom",   "hypothesis", "definition", "lemma",
                                      "theorem", "conjecture", "negated_conjecture"};
  for (const char* r : roles) {
    if (role == r) return true;
  }
  return false;
}

ThfDocument read(std::string_view text, Diagnostics& diags) {
  ThfDocument doc;
  std::vector<Token> toks;
  try {
    toks = tokenize(text);
  } catch (const SyntaxFail& f) {
    diags.push_back(f.diag);
    return doc;
  }
  Parser p(std::move(toks));
  std::map<std::string, Type> consts;
  while (!p.at_end()) {
    ThfEntry entry;
    try {
      entry.loc = p.peek().loc;
      if (p.peek().kind != Token::Kind::Lower || p.peek().text != "thf") {
        fail(p.peek().loc, "expected 'thf'" + p.found());
      }
      p.next();
      p.expect("(");
      entry.name = p.formula_name();
      p.expect(",");
      SourceLoc role_loc = p.peek().loc;
      entry.role = p.lower_word("a role");
      p.expect(",");
      if (entry.role == "type") {
        int parens = 0;
        while (p.is("(")) {
          p.next();
          ++parens;
        }
        SourceLoc sym_loc = p.peek().loc;
        entry.symbol = p.lower_word("a constant name");
        p.expect(":");
        if (p.peek().kind == Token::Kind::Dollar && p.peek().text == "$tType") {
          fail(p.peek().loc, "type declarations ($tType) are not supported");
        }
        entry.type = p.type();
        for (; parens > 0; --parens) p.expect(")");
        if (consts.count(entry.symbol)) {
          diags.push_back({DiagCode::DuplicateName, sym_loc,
                           "constant '" + entry.symbol + "' is declared twice"});
        } else {
          consts.emplace(entry.symbol, *entry.type);
        }
      } else {
        if (!known_role(entry.role)) fail(role_loc, "unsupported role '" + entry.role + "'");
        SourceLoc formula_loc = p.peek().loc;
        Raw raw = p.logic();
        Resolver res(consts, diags);
        entry.formula = res.run(raw);
        if (entry.formula) {
          try {
            Type t = hol::infer_type(*entry.formula);
            if (!t.is_o()) {
              diags.push_back({DiagCode::NotAFormula, formula_loc,
                               "formula '" + entry.name + "' has type " + t.to_string()});
              entry.formula.reset();
            }
          } catch (const hol::TypeError& e) {
            diags.push_back({DiagCode::IllTyped, formula_loc, e.what()});
            entry.formula.reset();
          }
        }
      }
      // Optional annotations are skipped.
      if (p.is(",")) {
        int depth = 0;
        while (!p.at_end() && !(depth == 0 && p.is(")"))) {
          if (p.is("(") || p.is("[")) ++depth;
          if (p.is(")") || p.is("]")) --depth;
          p.next();
        }
      }
      p.expect(")");
      p.expect(".");
      doc.entries.push_back(std::move(entry));
    } catch (const SyntaxFail& f) {
      diags.push_back(f.diag);
      p.recover();
    }
  }
  return doc;
}

}  // namespace

ThfDocument parse_thf(std::string_view text) {
  Diagnostics diags;
  ThfDocument doc = read(text, diags);
  if (!diags.empty()) throw ParseError(std::move(diags));
  return doc;
}

Diagnostics check_thf(std::string_view text) {
  Diagnostics diags;
  read(text, diags);
  return diags;
}

}  // namespace mizhol::thf
