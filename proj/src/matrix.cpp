#include "semicat/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "semicat/error.hpp"

namespace semicat {

namespace {

void require_same(const Semiring& a, const Semiring& b, const char* op) {
  if (!(a == b)) {
    throw UsageError(std::string(op) + ": semiring mismatch (" + a.name() + " vs " + b.name() + ")");
  }
}

void require_positive(std::size_t dom, std::size_t cod) {
  if (dom == 0 || cod == 0) throw UsageError("matrix dimensions must be positive");
}

std::string shape(const Matrix& f) {
  return std::to_string(f.dom()) + "->" + std::to_string(f.cod());
}

}  // namespace

Matrix::Matrix(Semiring semiring, std::size_t dom, std::size_t cod)
    : semiring_(semiring), dom_(dom), cod_(cod) {
  require_positive(dom, cod);
  entries_.assign(dom * cod, semiring_.zero());
}

Matrix::Matrix(Semiring semiring, std::size_t dom, std::size_t cod, std::vector<Scalar> entries)
    : semiring_(semiring), dom_(dom), cod_(cod), entries_(std::move(entries)) {
  require_positive(dom, cod);
  if (entries_.size() != dom * cod) {
    throw UsageError("matrix " + std::to_string(dom) + "->" + std::to_string(cod) + " needs " +
                     std::to_string(dom * cod) + " entries, got " + std::to_string(entries_.size()));
  }
  for (const auto& e : entries_) {
    if (!semiring_.contains(e)) throw UsageError("matrix entry outside semiring " + semiring_.name());
  }
}

Matrix Matrix::identity(const Semiring& s, std::size_t n) {
  Matrix out(s, n, n);
  const Scalar one = s.one();
  for (std::size_t i = 0; i < n; ++i) out.entries_[i * n + i] = one;
  return out;
}

Matrix Matrix::from_ints(const Semiring& s, const std::vector<std::vector<long long>>& rows) {
  if (rows.empty() || rows.front().empty()) throw UsageError("from_ints: empty matrix");
  const std::size_t dom = rows.front().size();
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * dom);
  for (const auto& row : rows) {
    if (row.size() != dom) throw UsageError("from_ints: ragged rows");
    for (long long v : row) entries.push_back(s.from_int(v));
  }
  return Matrix(s, dom, rows.size(), std::move(entries));
}

Matrix Matrix::from_literals(const Semiring& s, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty() || rows.front().empty()) throw UsageError("from_literals: empty matrix");
  const std::size_t dom = rows.front().size();
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * dom);
  for (const auto& row : rows) {
    if (row.size() != dom) throw UsageError("from_literals: ragged rows");
    for (const auto& lit : row) entries.push_back(s.parse(lit));
  }
  return Matrix(s, dom, rows.size(), std::move(entries));
}

Matrix Matrix::state(const Semiring& s, std::vector<Scalar> components) {
  const std::size_t n = components.size();
  return Matrix(s, 1, n, std::move(components));
}

Matrix Matrix::basis_state(const Semiring& s, std::size_t n, std::size_t k) {
  if (k >= n) throw UsageError("basis_state: index out of range");
  Matrix out(s, 1, n);
  out.entries_[k] = s.one();
  return out;
}

Matrix Matrix::random(const Semiring& s, std::size_t dom, std::size_t cod, std::mt19937_64& rng) {
  std::vector<Scalar> entries;
  entries.reserve(dom * cod);
  for (std::size_t i = 0; i < dom * cod; ++i) entries.push_back(s.random_small(rng));
  return Matrix(s, dom, cod, std::move(entries));
}

void Matrix::set(std::size_t row, std::size_t col, Scalar value) {
  if (row >= cod_ || col >= dom_) throw UsageError("matrix index out of range");
  if (!semiring_.contains(value)) throw UsageError("matrix entry outside semiring " + semiring_.name());
  entries_[row * dom_ + col] = std::move(value);
}

bool Matrix::equals(const Matrix& other) const {
  if (!(semiring_ == other.semiring_) || dom_ != other.dom_ || cod_ != other.cod_) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!semiring_.eq(entries_[i], other.entries_[i])) return false;
  }
  return true;
}

bool Matrix::is_zero() const {
  const Scalar zero = semiring_.zero();
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const Scalar& e) { return semiring_.eq(e, zero); });
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < cod_; ++r) {
    if (r) out << ", ";
    out << '[';
    for (std::size_t c = 0; c < dom_; ++c) {
      if (c) out << ", ";
      out << semiring_.format(at(r, c));
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

Matrix compose(const Matrix& f, const Matrix& g) {
  require_same(f.semiring(), g.semiring(), "compose");
  if (f.cod() != g.dom()) {
    throw UsageError("compose: codomain/domain mismatch " + shape(f) + " then " + shape(g));
  }
  const Semiring& s = f.semiring();
  const Scalar zero = s.zero();
  const std::size_t n = f.dom();
  const std::size_t mid = f.cod();
  const std::size_t k = g.cod();
  std::vector<char> f_nonzero(f.entries().size());
  for (std::size_t i = 0; i < f_nonzero.size(); ++i) f_nonzero[i] = !s.eq(f.entries()[i], zero);

  std::vector<Scalar> out(n * k, zero);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t t = 0; t < mid; ++t) {
      const Scalar& gv = g.at(r, t);
      if (s.eq(gv, zero)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!f_nonzero[t * n + c]) continue;
        Scalar& acc = out[r * n + c];
        acc = s.add(acc, s.mul(gv, f.at(t, c)));
      }
    }
  }
  return Matrix(s, n, k, std::move(out));
}

Matrix operator*(const Matrix& g, const Matrix& f) { return compose(f, g); }

Matrix tensor(const Matrix& f, const Matrix& g) {
  require_same(f.semiring(), g.semiring(), "tensor");
  const Semiring& s = f.semiring();
  const std::size_t dom = f.dom() * g.dom();
  const std::size_t cod = f.cod() * g.cod();
  std::vector<Scalar> out;
  out.reserve(dom * cod);
  for (std::size_t r = 0; r < f.cod(); ++r) {
    for (std::size_t rp = 0; rp < g.cod(); ++rp) {
      for (std::size_t c = 0; c < f.dom(); ++c) {
        for (std::size_t cp = 0; cp < g.dom(); ++cp) {
          out.push_back(s.mul(f.at(r, c), g.at(rp, cp)));
        }
      }
    }
  }
  return Matrix(s, dom, cod, std::move(out));
}

Matrix tensor_all(const std::vector<Matrix>& factors) {
  if (factors.empty()) throw UsageError("tensor_all: no factors");
  Matrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

Matrix transpose(const Matrix& f) {
  std::vector<Scalar> out;
  out.reserve(f.entries().size());
  for (std::size_t c = 0; c < f.dom(); ++c) {
    for (std::size_t r = 0; r < f.cod(); ++r) out.push_back(f.at(r, c));
  }
  return Matrix(f.semiring(), f.cod(), f.dom(), std::move(out));
}

Matrix conjugate(const Matrix& f) {
  std::vector<Scalar> out;
  out.reserve(f.entries().size());
  for (const auto& e : f.entries()) out.push_back(f.semiring().star(e));
  return Matrix(f.semiring(), f.dom(), f.cod(), std::move(out));
}

Matrix dagger(const Matrix& f) { return conjugate(transpose(f)); }

Matrix cap(const Semiring& s, std::size_t n) {
  Matrix out(s, n * n, 1);
  for (std::size_t x = 0; x < n; ++x) out.set(0, x * n + x, s.one());
  return out;
}

Matrix cup(const Semiring& s, std::size_t n) { return transpose(cap(s, n)); }

Scalar inner_product(const Matrix& phi, const Matrix& psi) {
  require_same(phi.semiring(), psi.semiring(), "inner_product");
  if (phi.dom() != 1 || psi.dom() != 1 || phi.cod() != psi.cod()) {
    throw UsageError("inner_product: expected two states of equal dimension, got " + shape(phi) +
                     " and " + shape(psi));
  }
  const Semiring& s = phi.semiring();
  Scalar acc = s.zero();
  for (std::size_t x = 0; x < phi.cod(); ++x) {
    acc = s.add(acc, s.mul(s.star(phi.at(x, 0)), psi.at(x, 0)));
  }
  return acc;
}

Matrix direct_sum(const Matrix& f, const Matrix& g) {
  require_same(f.semiring(), g.semiring(), "direct_sum");
  Matrix out(f.semiring(), f.dom() + g.dom(), f.cod() + g.cod());
  for (std::size_t r = 0; r < f.cod(); ++r)
    for (std::size_t c = 0; c < f.dom(); ++c) out.set(r, c, f.at(r, c));
  for (std::size_t r = 0; r < g.cod(); ++r)
    for (std::size_t c = 0; c < g.dom(); ++c) out.set(f.cod() + r, f.dom() + c, g.at(r, c));
  return out;
}

Matrix injection(const Semiring& s, std::size_t n, std::size_t m, int which) {
  const std::size_t size = which == 0 ? n : m;
  const std::size_t offset = which == 0 ? 0 : n;
  Matrix out(s, size, n + m);
  for (std::size_t i = 0; i < size; ++i) out.set(offset + i, i, s.one());
  return out;
}

Matrix projection(const Semiring& s, std::size_t n, std::size_t m, int which) {
  return transpose(injection(s, n, m, which));
}

Matrix madd(const Matrix& f, const Matrix& g) {
  require_same(f.semiring(), g.semiring(), "madd");
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw UsageError("madd: shape mismatch " + shape(f) + " vs " + shape(g));
  }
  std::vector<Scalar> out;
  out.reserve(f.entries().size());
  for (std::size_t i = 0; i < f.entries().size(); ++i) {
    out.push_back(f.semiring().add(f.entries()[i], g.entries()[i]));
  }
  return Matrix(f.semiring(), f.dom(), f.cod(), std::move(out));
}

Matrix operator+(const Matrix& f, const Matrix& g) { return madd(f, g); }

Matrix smul(const Scalar& s, const Matrix& f) {
  if (!f.semiring().contains(s)) throw UsageError("smul: scalar outside semiring " + f.semiring().name());
  std::vector<Scalar> out;
  out.reserve(f.entries().size());
  for (const auto& e : f.entries()) out.push_back(f.semiring().mul(s, e));
  return Matrix(f.semiring(), f.dom(), f.cod(), std::move(out));
}

Matrix swap(const Semiring& s, std::size_t n, std::size_t m) {
  Matrix out(s, n * m, m * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < m; ++b) out.set(b * n + a, a * m + b, s.one());
  }
  return out;
}

Matrix permutation_matrix(const Semiring& s, const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  std::vector<char> seen(n, 0);
  Matrix out(s, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (perm[k] >= n || seen[perm[k]]) throw UsageError("permutation_matrix: not a permutation");
    seen[perm[k]] = 1;
    out.set(perm[k], k, s.one());
  }
  return out;
}

namespace {

std::optional<Matrix> invert_monomial(const Matrix& f) {
  const Semiring& s = f.semiring();
  const std::size_t n = f.dom();
  Matrix out(s, n, n);
  std::vector<char> row_used(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    std::optional<std::size_t> hit;
    for (std::size_t r = 0; r < n; ++r) {
      if (s.is_zero(f.at(r, c))) continue;
      if (hit) return std::nullopt;
      hit = r;
    }
    if (!hit || row_used[*hit]) return std::nullopt;
    row_used[*hit] = 1;
    auto inv = s.inverse(f.at(*hit, c));
    if (!inv) return std::nullopt;
    out.set(c, *hit, *inv);
  }
  return out;
}

// Gauss-Jordan over a ring whose pivots are chosen among units.
std::optional<Matrix> invert_gauss_jordan(const Matrix& f) {
  const Semiring& s = f.semiring();
  const std::size_t n = f.dom();
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n, s.zero()));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = f.at(r, c);
    a[r][n + r] = s.one();
  }
  const bool integral = s.kind() == SemiringKind::integer;
  for (std::size_t col = 0; col < n; ++col) {
    if (integral) {
      // Euclidean reduction until a single non-zero remains below the diagonal.
      while (true) {
        std::optional<std::size_t> best;
        for (std::size_t r = col; r < n; ++r) {
          const auto& v = std::get<Integer>(a[r][col]).value;
          if (v == 0) continue;
          if (!best || abs(v) < abs(std::get<Integer>(a[*best][col]).value)) best = r;
        }
        if (!best) return std::nullopt;
        std::swap(a[col], a[*best]);
        bool reduced = true;
        const BigInt pivot = std::get<Integer>(a[col][col]).value;
        for (std::size_t r = col + 1; r < n; ++r) {
          const BigInt v = std::get<Integer>(a[r][col]).value;
          if (v == 0) continue;
          const BigInt q = v / pivot;
          for (std::size_t c = 0; c < 2 * n; ++c) {
            auto& target = std::get<Integer>(a[r][c]).value;
            target -= q * std::get<Integer>(a[col][c]).value;
          }
          if (std::get<Integer>(a[r][col]).value != 0) reduced = false;
        }
        if (reduced) break;
      }
    } else {
      std::optional<std::size_t> best;
      double best_mag = 0.0;
      for (std::size_t r = col; r < n; ++r) {
        if (!s.inverse(a[r][col])) continue;
        const double mag = s.magnitude(a[r][col]);
        if (!best || (!s.is_exact() && mag > best_mag)) {
          best = r;
          best_mag = mag;
          if (s.is_exact()) break;
        }
      }
      if (!best) return std::nullopt;
      std::swap(a[col], a[*best]);
    }
    auto pivot_inv = s.inverse(a[col][col]);
    if (!pivot_inv) return std::nullopt;
    for (std::size_t c = 0; c < 2 * n; ++c) a[col][c] = s.mul(*pivot_inv, a[col][c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || s.is_zero(a[r][col])) continue;
      const Scalar factor = *s.negate(a[r][col]);
      for (std::size_t c = 0; c < 2 * n; ++c) {
        a[r][c] = s.add(a[r][c], s.mul(factor, a[col][c]));
      }
    }
  }
  std::vector<Scalar> out;
  out.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.push_back(a[r][n + c]);
  return Matrix(s, n, n, std::move(out));
}

// a + bj <-> (a + b, a - b) is a ring isomorphism onto R x R, so split-complex
// matrices invert componentwise even when no entry of a column is a unit.
std::optional<Matrix> invert_split_complex(const Matrix& f) {
  const Semiring real = Semiring::real(f.semiring().tolerance());
  const std::size_t n = f.dom();
  std::vector<Scalar> plus, minus;
  for (const auto& e : f.entries()) {
    const auto v = std::get<SplitComplex>(e);
    plus.push_back(Real{v.a + v.b});
    minus.push_back(Real{v.a - v.b});
  }
  auto p = invert_gauss_jordan(Matrix(real, n, n, std::move(plus)));
  auto m = invert_gauss_jordan(Matrix(real, n, n, std::move(minus)));
  if (!p || !m) return std::nullopt;
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < n * n; ++i) {
    const double x = std::get<Real>(p->entries()[i]).value;
    const double y = std::get<Real>(m->entries()[i]).value;
    out.push_back(SplitComplex{(x + y) / 2.0, (x - y) / 2.0});
  }
  return Matrix(f.semiring(), n, n, std::move(out));
}

}  // namespace

std::optional<Matrix> try_invert(const Matrix& f) {
  if (f.dom() != f.cod()) return std::nullopt;
  const Semiring& s = f.semiring();
  std::optional<Matrix> candidate;
  if (!s.is_ring()) {
    candidate = invert_monomial(f);
  } else if (s.kind() == SemiringKind::split_complex) {
    candidate = invert_split_complex(f);
  } else {
    candidate = invert_gauss_jordan(f);
  }
  if (!candidate) return std::nullopt;
  const Matrix id = Matrix::identity(s, f.dom());
  if (!(f * *candidate).equals(id) || !(*candidate * f).equals(id)) return std::nullopt;
  return candidate;
}

nlohmann::ordered_json to_json(const Matrix& f) {
  nlohmann::ordered_json j;
  j["spec"] = f.semiring().name();
  j["dom"] = f.dom();
  j["cod"] = f.cod();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < f.cod(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < f.dom(); ++c) row.push_back(f.semiring().format(f.at(r, c)));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  auto field = [&](const char* key) -> const nlohmann::json& {
    if (!j.is_object() || !j.contains(key)) {
      throw ConfigError(std::string("matrix: missing field '") + key + "'");
    }
    return j.at(key);
  };
  const auto& spec = field("spec");
  if (!spec.is_string()) throw ConfigError("matrix: field 'spec' must be a string");
  const Semiring s = Semiring::by_name(spec.get<std::string>());
  const auto& dom = field("dom");
  const auto& cod = field("cod");
  if (!dom.is_number_unsigned() || !cod.is_number_unsigned()) {
    throw ConfigError("matrix: fields 'dom' and 'cod' must be positive integers");
  }
  const auto& rows = field("rows");
  const std::size_t n = dom.get<std::size_t>();
  const std::size_t m = cod.get<std::size_t>();
  if (n == 0 || m == 0) throw ConfigError("matrix: fields 'dom' and 'cod' must be positive integers");
  if (!rows.is_array() || rows.size() != m) {
    throw ConfigError("matrix: field 'rows' must hold " + std::to_string(m) + " rows");
  }
  std::vector<Scalar> entries;
  entries.reserve(n * m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != n) {
      throw ConfigError("matrix: rows[" + std::to_string(r) + "] must hold " + std::to_string(n) +
                        " literals");
    }
    for (const auto& lit : row) {
      if (!lit.is_string()) {
        throw ConfigError("matrix: rows[" + std::to_string(r) + "] entries must be literal strings");
      }
      entries.push_back(s.parse(lit.get<std::string>()));
    }
  }
  return Matrix(s, n, m, std::move(entries));
}

}  // namespace semicat
