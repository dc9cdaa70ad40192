#include "specalc/relparse.hpp"

#include <cctype>
#include <map>

#include "specalc/errors.hpp"

namespace specalc {

namespace {

struct Token {
  enum Kind { Ident, Number, Star, Slash, Plus, Minus, End } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '*') { out.push_back({Token::Star, "*"}); ++i; continue; }
    if (c == '/') { out.push_back({Token::Slash, "/"}); ++i; continue; }
    if (c == '+') { out.push_back({Token::Plus, "+"}); ++i; continue; }
    if (c == '-') { out.push_back({Token::Minus, "-"}); ++i; continue; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i)});
      i = j;
      continue;
    }
    fail(ErrKind::ParseError, std::string("unexpected character '") + c + "' in relation");
  }
  out.push_back({Token::End, ""});
  return out;
}

int resolve_edge(const PathBasis& pb, const std::map<std::string, int>& by_label,
                 const std::string& name) {
  auto it = by_label.find(name);
  if (it != by_label.end()) return it->second;
  // Fallback for unlabeled edges: "e<id>".
  if (name.size() > 1 && name[0] == 'e') {
    bool digits = true;
    for (size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) { digits = false; break; }
    if (digits) {
      int id = std::stoi(name.substr(1));
      if (id >= 0 && id < static_cast<int>(pb.quiver().edges.size()) &&
          pb.quiver().edges[id].label.empty())
        return id;
    }
  }
  fail(ErrKind::ParseError, "unknown edge label '" + name + "'");
}

}  // namespace

AlgElement parse_relation(const PathBasis& pb, const std::string& text) {
  std::map<std::string, int> by_label;
  for (const Edge& e : pb.quiver().edges)
    if (!e.label.empty()) by_label[e.label] = e.id;

  std::vector<Token> toks = tokenize(text);
  size_t i = 0;
  AlgElement acc;
  acc.basis = &pb;
  bool first = true;
  while (toks[i].kind != Token::End) {
    Rational sign = 1;
    if (toks[i].kind == Token::Plus || toks[i].kind == Token::Minus) {
      if (toks[i].kind == Token::Minus) sign = -1;
      ++i;
    } else if (!first) {
      fail(ErrKind::ParseError, "expected '+' or '-' between terms");
    }
    first = false;

    Rational coef = 1;
    if (toks[i].kind == Token::Number) {
      std::string num = toks[i].text;
      ++i;
      if (toks[i].kind == Token::Slash) {
        ++i;
        if (toks[i].kind != Token::Number) fail(ErrKind::ParseError, "expected denominator");
        num += "/" + toks[i].text;
        ++i;
      }
      coef = rat_parse(num);
      if (toks[i].kind != Token::Star)
        fail(ErrKind::ParseError, "a relation term needs an edge word after its coefficient");
      ++i;
    }

    std::vector<int> seq;
    if (toks[i].kind != Token::Ident)
      fail(ErrKind::ParseError, "expected an edge label in relation term");
    while (toks[i].kind == Token::Ident) {
      seq.push_back(resolve_edge(pb, by_label, toks[i].text));
      ++i;
      if (toks[i].kind == Token::Star && toks[i + 1].kind == Token::Ident) {
        ++i;
        continue;
      }
      break;
    }

    const auto& edges = pb.quiver().edges;
    for (size_t k = 0; k + 1 < seq.size(); ++k) {
      if (edges[seq[k]].from != edges[seq[k + 1]].to)
        fail(ErrKind::ParseError, "edges in term are not composable (words act right to left)");
    }
    int source = edges[seq.back()].from;
    int idx = pb.index_of(source, seq);
    internal_check(idx >= 0, "composable word missing from path enumeration");
    acc = elem_add(acc, elem_unit(pb, idx, sign * coef));
  }
  return acc;
}

std::string elem_str(const AlgElement& v) {
  if (v.is_zero()) return "0";
  const PathBasis& pb = *v.basis;
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : v.coeffs) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string word = path_str(pb.quiver(), pb.path(idx));
    if (a == 1) out += word;
    else out += rat_str(a) + "*" + word;
  }
  return out;
}

}  // namespace specalc
