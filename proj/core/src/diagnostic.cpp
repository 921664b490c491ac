#include "mizhol/diagnostic.hpp"

namespace mizhol {

std::string_view to_string(DiagCode code) {
  switch (code) {
    case DiagCode::SyntaxError: return "SyntaxError";
    case DiagCode::UnknownName: return "UnknownName";
    case DiagCode::ArityMismatch: return "ArityMismatch";
    case DiagCode::KindMismatch: return "KindMismatch";
    case DiagCode::DuplicateName: return "DuplicateName";
    case DiagCode::ScopeError: return "ScopeError";
    case DiagCode::InvalidArity: return "InvalidArity";
    case DiagCode::UndeclaredConstant: return "UndeclaredConstant";
    case DiagCode::UnboundVariable: return "UnboundVariable";
    case DiagCode::IllTyped: return "IllTyped";
    case DiagCode::NotAFormula: return "NotAFormula";
  }
  return "Unknown";
}

std::string Diagnostic::format(std::string_view file) const {
  std::string out;
  if (!file.empty()) {
    out += file;
    out += ':';
  }
  if (loc.known()) {
    out += std::to_string(loc.line) + ':' + std::to_string(loc.col) + ':';
  }
  if (!out.empty()) out += ' ';
  out += "error: ";
  out += message;
  out += " [";
  out += to_string(code);
  out += ']';
  return out;
}

namespace {
std::string summarize(const Diagnostics& diags) {
  if (diags.empty()) return "parse error";
  return diags.front().format();
}
}  // namespace

ParseError::ParseError(Diagnostics diags)
    : Error(summarize(diags)), diags_(std::move(diags)) {}

}  // namespace mizhol
