#include "semicat/discocat.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace semicat::discocat {

using pregroup::PregroupType;
using pregroup::SimpleType;

const LexiconEntry& Lexicon::lookup(const std::string& word) const {
  auto it = entries.find(word);
  if (it == entries.end()) throw LexiconError("unknown word '" + word + "'");
  return it->second;
}

std::size_t object_of(const SemanticAssignment& assignment, const PregroupType& t) {
  std::size_t n = 1;
  for (const auto& st : t.simples) {
    auto it = assignment.dims.find(st.base);
    if (it == assignment.dims.end()) throw ConfigError("no dimension assigned to basic type '" + st.base + "'");
    n *= it->second;
  }
  return n;
}

std::vector<std::string> split_sentence(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

namespace {

// Dense tensor whose legs are sentence positions, row-major in leg order.
struct Block {
  std::vector<std::size_t> legs;
  std::vector<std::size_t> dims;
  std::vector<Scalar> data;
};

std::size_t product(const std::vector<std::size_t>& v, std::size_t from, std::size_t to) {
  std::size_t out = 1;
  for (std::size_t i = from; i < to; ++i) out *= v[i];
  return out;
}

std::size_t leg_index(const Block& b, std::size_t position) {
  return static_cast<std::size_t>(std::find(b.legs.begin(), b.legs.end(), position) - b.legs.begin());
}

Block without_legs(const Block& b, std::size_t k1, std::optional<std::size_t> k2 = std::nullopt) {
  Block out;
  for (std::size_t i = 0; i < b.legs.size(); ++i) {
    if (i == k1 || (k2 && i == *k2)) continue;
    out.legs.push_back(b.legs[i]);
    out.dims.push_back(b.dims[i]);
  }
  return out;
}

// Sums leg ka of a against leg kb of b; the result carries a's other legs
// followed by b's.
Block contract(const Semiring& s, const Block& a, std::size_t ka, const Block& b, std::size_t kb) {
  const std::size_t d = a.dims[ka];
  const std::size_t a_pre = product(a.dims, 0, ka), a_post = product(a.dims, ka + 1, a.dims.size());
  const std::size_t b_pre = product(b.dims, 0, kb), b_post = product(b.dims, kb + 1, b.dims.size());
  Block out = without_legs(a, ka);
  const Block rest = without_legs(b, kb);
  out.legs.insert(out.legs.end(), rest.legs.begin(), rest.legs.end());
  out.dims.insert(out.dims.end(), rest.dims.begin(), rest.dims.end());
  const std::size_t b_size = b_pre * b_post;
  out.data.assign(a_pre * a_post * b_size, s.zero());
  for (std::size_t ap = 0; ap < a_pre; ++ap) {
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t aq = 0; aq < a_post; ++aq) {
        const Scalar& av = a.data[(ap * d + x) * a_post + aq];
        if (s.is_zero(av)) continue;
        const std::size_t base = (ap * a_post + aq) * b_size;
        for (std::size_t bp = 0; bp < b_pre; ++bp) {
          for (std::size_t bq = 0; bq < b_post; ++bq) {
            const Scalar& bv = b.data[(bp * d + x) * b_post + bq];
            if (s.is_zero(bv)) continue;
            Scalar& acc = out.data[base + bp * b_post + bq];
            acc = s.add(acc, s.mul(av, bv));
          }
        }
      }
    }
  }
  return out;
}

// Sums two legs k1 < k2 of one block against each other.
Block trace(const Semiring& s, const Block& a, std::size_t k1, std::size_t k2) {
  const std::size_t d = a.dims[k1];
  const std::size_t pre = product(a.dims, 0, k1), mid = product(a.dims, k1 + 1, k2),
                    post = product(a.dims, k2 + 1, a.dims.size());
  Block out = without_legs(a, k1, k2);
  out.data.assign(pre * mid * post, s.zero());
  for (std::size_t p = 0; p < pre; ++p) {
    for (std::size_t m = 0; m < mid; ++m) {
      for (std::size_t q = 0; q < post; ++q) {
        Scalar& acc = out.data[(p * mid + m) * post + q];
        for (std::size_t x = 0; x < d; ++x) acc = s.add(acc, a.data[(((p * d + x) * mid + m) * d + x) * post + q]);
      }
    }
  }
  return out;
}

Block outer(const Semiring& s, const Block& a, const Block& b) {
  Block out{a.legs, a.dims, {}};
  out.legs.insert(out.legs.end(), b.legs.begin(), b.legs.end());
  out.dims.insert(out.dims.end(), b.dims.begin(), b.dims.end());
  out.data.reserve(a.data.size() * b.data.size());
  for (const auto& x : a.data) {
    for (const auto& y : b.data) out.data.push_back(s.mul(x, y));
  }
  return out;
}

// Reorders legs into increasing position order.
Block sort_legs(const Block& a) {
  const std::size_t k = a.legs.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a.legs[x] < a.legs[y]; });
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * a.dims[i];
  Block out;
  for (std::size_t i : order) {
    out.legs.push_back(a.legs[i]);
    out.dims.push_back(a.dims[i]);
  }
  out.data.reserve(a.data.size());
  std::vector<std::size_t> digit(k, 0);
  for (std::size_t n = 0; n < a.data.size(); ++n) {
    std::size_t src = 0;
    for (std::size_t i = 0; i < k; ++i) src += digit[i] * stride[order[i]];
    out.data.push_back(a.data[src]);
    for (std::size_t i = k; i-- > 0;) {
      if (++digit[i] < out.dims[i]) break;
      digit[i] = 0;
    }
  }
  return out;
}

struct Prepared {
  std::vector<PregroupType> types;
  std::vector<const Matrix*> states;
  std::vector<std::size_t> position_dims;
  pregroup::ReductionDiagram diagram;
  std::uint64_t ambiguity = 0;
};

Prepared prepare(const std::vector<std::string>& sentence, const Lexicon& lexicon,
                 const SemanticAssignment& assignment) {
  Prepared p;
  for (const auto& word : sentence) {
    const LexiconEntry& entry = lexicon.lookup(word);
    if (!entry.state) throw LexiconError("word '" + word + "' has no state");
    const Matrix& state = *entry.state;
    const std::size_t dim = object_of(assignment, entry.type);
    if (!(state.semiring() == assignment.spec) || state.dom() != 1 || state.cod() != dim) {
      throw ConfigError("state of word '" + word + "' must be a " + assignment.spec.name() + " vector of length " +
                        std::to_string(dim));
    }
    p.types.push_back(entry.type);
    p.states.push_back(&state);
    for (const auto& st : entry.type.simples) p.position_dims.push_back(object_of(assignment, PregroupType{{st}}));
  }
  object_of(assignment, assignment.target);
  auto diagram = pregroup::reduce(p.types, assignment.target);
  if (!diagram) {
    std::string typing;
    for (const auto& t : p.types) typing += (typing.empty() ? "" : " ") + pregroup::format_type(t);
    throw GrammarError("ungrammatical: '" + typing + "' does not reduce to " +
                           pregroup::format_type(assignment.target),
                       p.types, assignment.target);
  }
  p.diagram = std::move(*diagram);
  p.ambiguity = pregroup::count_reductions(p.types, assignment.target);
  return p;
}

}  // namespace

SentenceMeaning meaning(const std::vector<std::string>& sentence, const Lexicon& lexicon,
                        const SemanticAssignment& assignment) {
  const Semiring& s = assignment.spec;
  Prepared p = prepare(sentence, lexicon, assignment);

  std::vector<Block> blocks;
  std::size_t position = 0;
  for (std::size_t w = 0; w < p.types.size(); ++w) {
    Block b;
    for (std::size_t i = 0; i < p.types[w].simples.size(); ++i, ++position) {
      b.legs.push_back(position);
      b.dims.push_back(p.position_dims[position]);
    }
    b.data = p.states[w]->entries();
    blocks.push_back(std::move(b));
  }

  auto links = p.diagram.links;
  std::sort(links.begin(), links.end(), [](const auto& x, const auto& y) {
    return std::pair{x.second - x.first, x.first} < std::pair{y.second - y.first, y.first};
  });
  auto owner = [&](std::size_t pos) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (leg_index(blocks[b], pos) < blocks[b].legs.size()) return b;
    }
    throw UsageError("meaning: dangling position " + std::to_string(pos));
  };
  for (const auto& [i, j] : links) {
    const std::size_t bi = owner(i), bj = owner(j);
    if (bi == bj) {
      const std::size_t k1 = leg_index(blocks[bi], i), k2 = leg_index(blocks[bi], j);
      blocks[bi] = trace(s, blocks[bi], std::min(k1, k2), std::max(k1, k2));
    } else {
      blocks[bi] = contract(s, blocks[bi], leg_index(blocks[bi], i), blocks[bj], leg_index(blocks[bj], j));
      blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(bj));
    }
  }

  Block result{{}, {}, {s.one()}};
  for (const auto& b : blocks) result = outer(s, result, b);
  result = sort_legs(result);
  const std::size_t dim = result.data.size();
  return SentenceMeaning{Matrix(s, 1, dim, std::move(result.data)), std::move(p.diagram), p.ambiguity};
}

SentenceMeaning brute_force_meaning(const std::vector<std::string>& sentence, const Lexicon& lexicon,
                                    const SemanticAssignment& assignment, std::size_t budget) {
  const Semiring& s = assignment.spec;
  Prepared p = prepare(sentence, lexicon, assignment);

  std::size_t total = 1;
  for (auto d : p.position_dims) {
    total *= d;
    if (total > budget) break;
  }
  if (total > budget || total * total > budget) {
    throw BudgetExceeded("brute_force_meaning: Kronecker dimension " + std::to_string(total) +
                             " needs more than the budget of " + std::to_string(budget) + " matrix entries",
                         total);
  }

  std::vector<Matrix> factors;
  for (const Matrix* state : p.states) factors.push_back(*state);
  Matrix vec = factors.empty() ? Matrix::identity(s, 1) : tensor_all(factors);

  std::vector<std::size_t> legs(p.position_dims.size());
  std::iota(legs.begin(), legs.end(), 0);
  std::vector<std::size_t> dims = p.position_dims;
  auto layer = [&](std::size_t from, std::size_t to, const Matrix& middle) {
    const Matrix pre = Matrix::identity(s, product(dims, 0, from));
    const Matrix post = Matrix::identity(s, product(dims, to, dims.size()));
    return tensor(tensor(pre, middle), post);
  };

  auto links = p.diagram.links;
  std::sort(links.begin(), links.end());
  for (const auto& [i, j] : links) {
    const std::size_t a = static_cast<std::size_t>(std::find(legs.begin(), legs.end(), i) - legs.begin());
    std::size_t b = static_cast<std::size_t>(std::find(legs.begin(), legs.end(), j) - legs.begin());
    while (b > a + 1) {
      vec = compose(vec, layer(b - 1, b + 1, swap(s, dims[b - 1], dims[b])));
      std::swap(legs[b - 1], legs[b]);
      std::swap(dims[b - 1], dims[b]);
      --b;
    }
    vec = compose(vec, layer(a, a + 2, cap(s, dims[a])));
    legs.erase(legs.begin() + static_cast<std::ptrdiff_t>(a), legs.begin() + static_cast<std::ptrdiff_t>(a + 2));
    dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(a), dims.begin() + static_cast<std::ptrdiff_t>(a + 2));
  }
  return SentenceMeaning{std::move(vec), std::move(p.diagram), p.ambiguity};
}

// ---------------------------------------------------------------------------
// Files

namespace {

class Source {
 public:
  Source(std::string text, std::string name) : text_(std::move(text)), name_(std::move(name)) {}

  const std::string& text() const { return text_; }

  // Line of the last key of `path`, found by scanning for each quoted key in
  // turn; falls back to the deepest key found.
  std::size_t line_of(const std::vector<std::string>& path) const {
    std::size_t offset = 0;
    for (const auto& key : path) {
      const auto hit = text_.find("\"" + key + "\"", offset);
      if (hit == std::string::npos) break;
      offset = hit;
    }
    return line_at(offset);
  }

  std::size_t line_at(std::size_t offset) const {
    offset = std::min(offset, text_.size());
    return 1 + static_cast<std::size_t>(std::count(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
  }

  [[noreturn]] void fail(const std::vector<std::string>& path, const std::string& reason) const {
    std::string field;
    for (const auto& k : path) field += (field.empty() ? "" : ".") + k;
    throw ConfigError(name_ + ":" + std::to_string(line_of(path)) + ": field '" + field + "': " + reason);
  }

 private:
  std::string text_;
  std::string name_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json parse_json(const Source& src, const std::string& name) {
  try {
    auto j = nlohmann::json::parse(src.text());
    if (!j.is_object()) throw ConfigError(name + ":1: top level must be an object");
    return j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(name + ":" + std::to_string(src.line_at(e.byte > 0 ? e.byte - 1 : 0)) + ": invalid JSON: " +
                      e.what());
  }
}

Semiring read_spec(const Source& src, const nlohmann::json& j) {
  if (!j.contains("spec") || !j["spec"].is_string()) src.fail({"spec"}, "expected a semiring name string");
  try {
    return Semiring::by_name(j["spec"].get<std::string>());
  } catch (const UsageError& e) {
    src.fail({"spec"}, e.what());
  }
}

std::map<std::string, std::size_t> read_dims(const Source& src, const nlohmann::json& j) {
  if (!j.contains("dims") || !j["dims"].is_object()) src.fail({"dims"}, "expected an object of dimensions");
  std::map<std::string, std::size_t> out;
  for (const auto& [base, v] : j["dims"].items()) {
    if (!v.is_number_integer() || v.get<long long>() < 1) src.fail({"dims", base}, "expected a positive integer");
    out[base] = static_cast<std::size_t>(v.get<long long>());
  }
  return out;
}

PregroupType read_type(const Source& src, const nlohmann::json& v, const std::vector<std::string>& path) {
  if (!v.is_string()) src.fail(path, "expected a type string");
  try {
    return pregroup::parse_type(v.get<std::string>());
  } catch (const ParseError& e) {
    src.fail(path, e.what());
  }
}

void require_bases(const Source& src, const std::map<std::string, std::size_t>& dims, const PregroupType& t,
                   const std::vector<std::string>& path) {
  for (const auto& st : t.simples) {
    if (!dims.count(st.base)) src.fail(path, "no entry in 'dims' for basic type '" + st.base + "'");
  }
}

}  // namespace

SemanticAssignment parse_assignment(const std::string& text, const std::string& source) {
  const Source src(text, source);
  const auto j = parse_json(src, source);
  SemanticAssignment out{read_spec(src, j), read_dims(src, j), {}};
  if (!j.contains("target")) src.fail({"target"}, "missing");
  out.target = read_type(src, j["target"], {"target"});
  require_bases(src, out.dims, out.target, {"target"});
  return out;
}

Lexicon parse_lexicon(const std::string& text, bool require_states, const std::string& source) {
  const Source src(text, source);
  const auto j = parse_json(src, source);
  const SemanticAssignment assignment = parse_assignment(text, source);
  Lexicon out{assignment.spec, {}};
  if (!j.contains("words") || !j["words"].is_object()) src.fail({"words"}, "expected an object of words");
  for (const auto& [word, entry] : j["words"].items()) {
    const std::vector<std::string> at{"words", word};
    if (!entry.is_object()) src.fail(at, "expected an object with 'type' and 'state'");
    if (!entry.contains("type")) src.fail({"words", word, "type"}, "missing");
    LexiconEntry le{read_type(src, entry["type"], {"words", word, "type"}), std::nullopt};
    require_bases(src, assignment.dims, le.type, {"words", word, "type"});
    if (!entry.contains("state")) {
      if (require_states) src.fail({"words", word, "state"}, "missing");
      out.entries.emplace(word, std::move(le));
      continue;
    }
    const std::vector<std::string> state_path{"words", word, "state"};
    const auto& st = entry["state"];
    if (!st.is_array()) src.fail(state_path, "expected an array of literals");
    const std::size_t dim = object_of(assignment, le.type);
    if (st.size() != dim) {
      src.fail(state_path, "expected " + std::to_string(dim) + " components for type " +
                               pregroup::format_type(le.type) + ", got " + std::to_string(st.size()));
    }
    std::vector<Scalar> comps;
    for (const auto& lit : st) {
      const std::string literal = lit.is_string() ? lit.get<std::string>() : lit.dump();
      try {
        comps.push_back(assignment.spec.parse(literal));
      } catch (const ParseError& e) {
        src.fail(state_path, e.what());
      }
    }
    le.state = Matrix::state(assignment.spec, std::move(comps));
    out.entries.emplace(word, std::move(le));
  }
  return out;
}

SemanticAssignment load_assignment(const std::string& path) { return parse_assignment(read_file(path), path); }

Lexicon load_lexicon(const std::string& path) { return parse_lexicon(read_file(path), true, path); }

Lexicon load_grammar(const std::string& path) { return parse_lexicon(read_file(path), false, path); }

}  // namespace semicat::discocat
