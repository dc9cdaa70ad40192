#include "specalc/rational.hpp"

#include <cctype>

#include "specalc/errors.hpp"

namespace specalc {

Rational rat_parse(const std::string& text) {
  size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  std::string core = text.substr(a, b - a);
  if (core.empty()) fail(ErrKind::ParseError, "empty rational literal");
  if (core[0] == '+') core.erase(0, 1);

  // Validate by hand: mpq_set_str accepts whitespace oddities we don't want.
  bool seen_digit = false, seen_slash = false;
  for (size_t i = 0; i < core.size(); ++i) {
    char c = core[i];
    if (c == '-' && i == 0) continue;
    if (c == '/') {
      if (seen_slash || !seen_digit || i + 1 == core.size())
        fail(ErrKind::ParseError, "bad rational literal '" + text + "'");
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(ErrKind::ParseError, "bad rational literal '" + text + "'");
    seen_digit = true;
  }
  if (!seen_digit) fail(ErrKind::ParseError, "bad rational literal '" + text + "'");

  Rational r;
  if (mpq_set_str(r.get_mpq_t(), core.c_str(), 10) != 0)
    fail(ErrKind::ParseError, "bad rational literal '" + text + "'");
  if (r.get_den() == 0) fail(ErrKind::ParseError, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

const char* err_kind_name(ErrKind k) {
  switch (k) {
    case ErrKind::AmbientMismatch: return "AmbientMismatch";
    case ErrKind::NotASubspace: return "NotASubspace";
    case ErrKind::CyclicQuiver: return "CyclicQuiver";
    case ErrKind::NonIntegralDim: return "NonIntegralDim";
    case ErrKind::BasisMismatch: return "BasisMismatch";
    case ErrKind::NonAdmissible: return "NonAdmissible";
    case ErrKind::MissingExtData: return "MissingExtData";
    case ErrKind::InconsistentInput: return "InconsistentInput";
    case ErrKind::LimitExceeded: return "LimitExceeded";
    case ErrKind::ParseError: return "ParseError";
    case ErrKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace specalc
