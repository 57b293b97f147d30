#include "semicat/pregroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

#include "semicat/error.hpp"

namespace semicat::pregroup {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& reason) {
  throw ParseError("type: malformed '" + std::string(text) + "' at position " + std::to_string(pos) + ": " + reason,
                   pos);
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > std::numeric_limits<std::uint64_t>::max() / b ? std::numeric_limits<std::uint64_t>::max() : a * b;
}

// Span tables over a sequence of k simple types.
//   empty[i][j]  : positions [i, j) contract completely
//   suffix[i][t] : positions [i, k) reduce to target[t..]
struct Tables {
  std::size_t k = 0;
  std::size_t m = 0;
  std::vector<char> empty;
  std::vector<char> suffix;

  bool e(std::size_t i, std::size_t j) const { return empty[i * (k + 1) + j]; }
  bool s(std::size_t i, std::size_t t) const { return suffix[i * (m + 1) + t]; }
};

Tables build_tables(const std::vector<SimpleType>& seq, const std::vector<SimpleType>& target) {
  Tables tb;
  tb.k = seq.size();
  tb.m = target.size();
  const std::size_t k = tb.k;
  tb.empty.assign((k + 1) * (k + 1), 0);
  for (std::size_t i = 0; i <= k; ++i) tb.empty[i * (k + 1) + i] = 1;
  for (std::size_t len = 2; len <= k; len += 2) {
    for (std::size_t i = 0; i + len <= k; ++i) {
      const std::size_t j = i + len;
      bool ok = false;
      for (std::size_t p = i + 1; p < j && !ok; p += 2) {
        ok = contracts(seq[i], seq[p]) && tb.e(i + 1, p) && tb.e(p + 1, j);
      }
      tb.empty[i * (k + 1) + j] = ok;
    }
  }
  tb.suffix.assign((k + 1) * (tb.m + 1), 0);
  tb.suffix[k * (tb.m + 1) + tb.m] = 1;
  for (std::size_t i = k; i-- > 0;) {
    for (std::size_t t = 0; t <= tb.m; ++t) {
      bool ok = t < tb.m && seq[i] == target[t] && tb.s(i + 1, t + 1);
      for (std::size_t p = i + 1; p < k && !ok; p += 2) {
        ok = contracts(seq[i], seq[p]) && tb.e(i + 1, p) && tb.s(p + 1, t);
      }
      tb.suffix[i * (tb.m + 1) + t] = ok;
    }
  }
  return tb;
}

// Least links of [i, j), which must contract completely.
void build_empty(const Tables& tb, const std::vector<SimpleType>& seq, std::size_t i, std::size_t j,
                 ReductionDiagram& out) {
  while (i < j) {
    std::size_t p = i + 1;
    while (!(contracts(seq[i], seq[p]) && tb.e(i + 1, p) && tb.e(p + 1, j))) p += 2;
    out.links.emplace_back(i, p);
    build_empty(tb, seq, i + 1, p, out);
    i = p + 1;
  }
}

}  // namespace

PregroupType parse_type(std::string_view text) {
  PregroupType out;
  std::size_t pos = 0;
  if (text.empty()) fail(text, 0, "empty type");
  while (true) {
    if (pos >= text.size()) fail(text, pos, "expected a simple type");
    if (text[pos] == '1' && (pos + 1 == text.size() || text[pos + 1] == '.')) {
      ++pos;
    } else {
      if (!ident_start(text[pos])) fail(text, pos, "expected an identifier");
      const std::size_t start = pos;
      while (pos < text.size() && ident_char(text[pos])) ++pos;
      SimpleType st{std::string(text.substr(start, pos - start)), 0};
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (pos >= text.size() || (text[pos] != 'l' && text[pos] != 'r')) fail(text, pos, "expected l or r after ^");
        while (pos < text.size() && (text[pos] == 'l' || text[pos] == 'r')) {
          st.z += text[pos] == 'l' ? -1 : 1;
          ++pos;
        }
      }
      out.simples.push_back(std::move(st));
    }
    if (pos == text.size()) break;
    if (text[pos] != '.') fail(text, pos, "expected '.'");
    ++pos;
  }
  return out;
}

std::string format_simple(const SimpleType& t) {
  if (t.z == 0) return t.base;
  return t.base + "^" + std::string(static_cast<std::size_t>(std::abs(t.z)), t.z < 0 ? 'l' : 'r');
}

std::string format_type(const PregroupType& t) {
  if (t.is_unit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < t.simples.size(); ++i) {
    if (i) out += '.';
    out += format_simple(t.simples[i]);
  }
  return out;
}

PregroupType left_adjoint(const PregroupType& t) {
  PregroupType out;
  for (auto it = t.simples.rbegin(); it != t.simples.rend(); ++it) out.simples.push_back({it->base, it->z - 1});
  return out;
}

PregroupType right_adjoint(const PregroupType& t) {
  PregroupType out;
  for (auto it = t.simples.rbegin(); it != t.simples.rend(); ++it) out.simples.push_back({it->base, it->z + 1});
  return out;
}

std::vector<SimpleType> flatten(const std::vector<PregroupType>& types) {
  std::vector<SimpleType> out;
  for (const auto& t : types) out.insert(out.end(), t.simples.begin(), t.simples.end());
  return out;
}

bool contracts(const SimpleType& a, const SimpleType& b) { return a.base == b.base && b.z == a.z + 1; }

std::optional<ReductionDiagram> reduce(const std::vector<SimpleType>& seq, const std::vector<SimpleType>& target) {
  const Tables tb = build_tables(seq, target);
  if (!tb.s(0, 0)) return std::nullopt;
  ReductionDiagram out;
  out.positions = seq.size();
  std::size_t i = 0, t = 0;
  while (i < seq.size()) {
    // Linking i to its nearest feasible partner beats leaving i unmatched.
    std::optional<std::size_t> partner;
    for (std::size_t p = i + 1; p < seq.size(); p += 2) {
      if (contracts(seq[i], seq[p]) && tb.e(i + 1, p) && tb.s(p + 1, t)) {
        partner = p;
        break;
      }
    }
    if (partner) {
      out.links.emplace_back(i, *partner);
      build_empty(tb, seq, i + 1, *partner, out);
      i = *partner + 1;
    } else {
      out.residue.push_back(i);
      ++i;
      ++t;
    }
  }
  std::sort(out.links.begin(), out.links.end());
  return out;
}

std::optional<ReductionDiagram> reduce(const std::vector<PregroupType>& types, const PregroupType& target) {
  return reduce(flatten(types), target.simples);
}

std::uint64_t count_reductions(const std::vector<SimpleType>& seq, const std::vector<SimpleType>& target) {
  const std::size_t k = seq.size(), m = target.size();
  std::vector<std::uint64_t> empty((k + 1) * (k + 1), 0), suffix((k + 1) * (m + 1), 0);
  auto e = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return empty[i * (k + 1) + j]; };
  auto s = [&](std::size_t i, std::size_t t) -> std::uint64_t& { return suffix[i * (m + 1) + t]; };
  for (std::size_t i = 0; i <= k; ++i) e(i, i) = 1;
  for (std::size_t len = 2; len <= k; len += 2) {
    for (std::size_t i = 0; i + len <= k; ++i) {
      std::uint64_t total = 0;
      for (std::size_t p = i + 1; p < i + len; p += 2) {
        if (contracts(seq[i], seq[p])) total = sat_add(total, sat_mul(e(i + 1, p), e(p + 1, i + len)));
      }
      e(i, i + len) = total;
    }
  }
  s(k, m) = 1;
  for (std::size_t i = k; i-- > 0;) {
    for (std::size_t t = 0; t <= m; ++t) {
      std::uint64_t total = t < m && seq[i] == target[t] ? s(i + 1, t + 1) : 0;
      for (std::size_t p = i + 1; p < k; p += 2) {
        if (contracts(seq[i], seq[p])) total = sat_add(total, sat_mul(e(i + 1, p), s(p + 1, t)));
      }
      s(i, t) = total;
    }
  }
  return s(0, 0);
}

std::uint64_t count_reductions(const std::vector<PregroupType>& types, const PregroupType& target) {
  return count_reductions(flatten(types), target.simples);
}

bool is_grammatical(const std::vector<PregroupType>& types, const PregroupType& target) {
  return reduce(types, target).has_value();
}

std::optional<std::string> diagram_defect(const ReductionDiagram& d, const std::vector<SimpleType>& seq,
                                          const std::vector<SimpleType>& target) {
  if (d.positions != seq.size()) return "position count " + std::to_string(d.positions) + " != " + std::to_string(seq.size());
  std::vector<int> owner(seq.size(), -1);
  for (std::size_t l = 0; l < d.links.size(); ++l) {
    const auto [i, j] = d.links[l];
    if (!(i < j && j < seq.size())) return "link out of range";
    if (owner[i] >= 0 || owner[j] >= 0) return "position used twice";
    owner[i] = owner[j] = static_cast<int>(l);
    if (!contracts(seq[i], seq[j])) {
      return "link (" + std::to_string(i) + "," + std::to_string(j) + ") joins " + format_simple(seq[i]) + " and " +
             format_simple(seq[j]);
    }
  }
  for (const auto& [i, j] : d.links) {
    for (const auto& [a, b] : d.links) {
      if (i < a && a < j && j < b) return "links cross";
    }
  }
  std::vector<std::size_t> unmatched;
  for (std::size_t p = 0; p < seq.size(); ++p) {
    if (owner[p] < 0) unmatched.push_back(p);
  }
  if (unmatched != d.residue) return "residue does not list exactly the unmatched positions";
  for (std::size_t p : d.residue) {
    for (const auto& [i, j] : d.links) {
      if (i < p && p < j) return "residue enclosed by a link";
    }
  }
  if (d.residue.size() != target.size()) return "residue length differs from target";
  for (std::size_t t = 0; t < target.size(); ++t) {
    if (!(seq[d.residue[t]] == target[t])) return "residue does not spell the target";
  }
  return std::nullopt;
}

std::string render_diagram(const ReductionDiagram& d, const std::vector<PregroupType>& types) {
  std::string top;
  std::vector<std::size_t> column;
  for (std::size_t w = 0; w < types.size(); ++w) {
    if (w) top += "   ";
    if (types[w].is_unit()) {
      top += "1";
      continue;
    }
    for (std::size_t i = 0; i < types[w].simples.size(); ++i) {
      if (i) top += '.';
      column.push_back(top.size());
      top += format_simple(types[w].simples[i]);
    }
  }
  if (d.links.empty()) return top + "\n";
  std::string arcs(top.size(), ' ');
  // Outer links first so nested brackets overwrite their dashes.
  auto order = d.links;
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    return x.second - x.first > y.second - y.first;
  });
  for (const auto& [i, j] : order) {
    for (std::size_t c = column[i]; c <= column[j]; ++c) arcs[c] = '-';
    arcs[column[i]] = '[';
    arcs[column[j]] = ']';
  }
  for (std::size_t p : d.residue) arcs[column[p]] = '|';
  while (!arcs.empty() && arcs.back() == ' ') arcs.pop_back();
  return top + "\n" + arcs + "\n";
}

}  // namespace semicat::pregroup
