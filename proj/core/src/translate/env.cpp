#include "mizhol/translate/env.hpp"

#include "mizhol/translate/declarations.hpp"

namespace mizhol::translate {

TransEnv::TransEnv(const mizar::Signature& sig, TranslateOptions opts)
    : sig_(&sig), opts_(opts) {}

void TransEnv::push(hol::Term var) { scope_.push_back(std::move(var)); }

void TransEnv::pop(std::size_t n) { scope_.erase(scope_.end() - static_cast<std::ptrdiff_t>(n), scope_.end()); }

const hol::Term* TransEnv::lookup(std::string_view name) const {
  for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
    if (it->name() == name) return &*it;
  }
  return nullptr;
}

bool TransEnv::taken(const std::string& name) const {
  return in_scope(name) || sig_->contains(name) || name == names::kEps ||
         name == names::kMembership || name == names::kSethood ||
         names::repl_sep_arity(name).has_value();
}

std::string TransEnv::fresh(const std::string& base) {
  if (!taken(base)) return base;
  for (;;) {
    std::string candidate = base + std::to_string(++counter_);
    if (!taken(candidate)) return candidate;
  }
}

hol::Term TransEnv::fresh_var(const std::string& base, hol::Type type) {
  return hol::Term::var(fresh(base), std::move(type));
}

}  // namespace mizhol::translate
