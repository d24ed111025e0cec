// Split groups of Euclidean isometries in lattice coordinates.
//
// The translation lattice is identified with Z^n in its own basis; Euclidean
// geometry enters only through the Gram form. A group is specified by the
// Gram form plus integer point-group generators, and an isometry is a pair
// (translation vector, point-group element index): h = t^lambda h0.

#pragma once

#include "lattice.hpp"
#include "matrix.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace isoconj {

struct GroupSpec {
  std::string name;
  int dim = 0;
  RatMatrix gram;                      // symmetric positive definite
  std::vector<IntMatrix> generators;   // n x n, orthogonal w.r.t. gram
  std::vector<std::string> generator_names; // optional; defaults to s1..sk
  long max_closure = 20000;
};

// element parse failures; the CLI maps these to usage errors
struct ElementParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class PointGroup {
public:
  int dim() const { return dim_; }
  int size() const { return int(elements_.size()); }
  const IntMatrix& matrix(int i) const { return elements_.at(i); }
  int multiply(int a, int b) const { return mult_[a][b]; }
  int inverse(int a) const { return inv_[a]; }
  int conjugate_point(int u, int p) const { return mult_[mult_[u][p]][inv_[u]]; }

  std::optional<int> find(const IntMatrix& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // generator name -> element index
  const std::map<std::string, int>& names() const { return names_; }

  std::optional<int> name_to_index(const std::string& name) const {
    auto it = names_.find(name);
    if (it == names_.end()) return std::nullopt;
    return it->second;
  }

  // smallest k >= 1 with element^k = identity
  int element_order(int i) const {
    int k = 1, cur = i;
    while (cur != 0) {
      cur = multiply(cur, i);
      ++k;
    }
    return k;
  }

  friend PointGroup validate_and_close(const GroupSpec& spec);

private:
  int dim_ = 0;
  std::vector<IntMatrix> elements_; // element 0 = identity
  std::map<IntMatrix, int> index_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_;
  std::map<std::string, int> names_;
};

inline PointGroup validate_and_close(const GroupSpec& spec) {
  if (spec.dim < 1) throw std::invalid_argument("group dimension must be at least 1");
  if (spec.gram.rows() != spec.dim || spec.gram.cols() != spec.dim)
    throw std::invalid_argument("gram form must be dim x dim");
  if (!spec.gram.is_symmetric()) throw std::invalid_argument("gram form must be symmetric");
  if (!spec.gram.is_positive_definite())
    throw std::invalid_argument("gram form must be positive definite");
  if (!spec.generator_names.empty() && spec.generator_names.size() != spec.generators.size())
    throw std::invalid_argument("generator_names length must match generators");

  for (size_t k = 0; k < spec.generators.size(); ++k) {
    const IntMatrix& g = spec.generators[k];
    if (g.rows() != spec.dim || g.cols() != spec.dim)
      throw std::invalid_argument("generator " + std::to_string(k + 1) + " must be dim x dim");
    RatMatrix gr = RatMatrix::from_int(g);
    if (gr.transposed() * spec.gram * gr != spec.gram)
      throw std::invalid_argument("generator " + std::to_string(k + 1) +
                                  " does not preserve the gram form");
    if (!is_unimodular(g))
      throw std::invalid_argument("generator " + std::to_string(k + 1) + " is not unimodular");
  }

  PointGroup pg;
  pg.dim_ = spec.dim;

  // breadth-first closure from the identity, generators in the given order
  IntMatrix id = IntMatrix::identity(spec.dim);
  pg.elements_.push_back(id);
  pg.index_[id] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const IntMatrix& g : spec.generators) {
      IntMatrix prod = pg.elements_[cur] * g;
      if (pg.index_.count(prod)) continue;
      if (long(pg.elements_.size()) >= spec.max_closure)
        throw std::runtime_error("point part not finite within budget (max_closure = " +
                                 std::to_string(spec.max_closure) + ")");
      int idx = int(pg.elements_.size());
      pg.index_[prod] = idx;
      pg.elements_.push_back(prod);
      queue.push_back(idx);
    }
  }

  int n = pg.size();
  pg.mult_.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = pg.index_.find(pg.elements_[i] * pg.elements_[j]);
      if (it == pg.index_.end()) throw std::logic_error("closure not closed");
      pg.mult_[i][j] = it->second;
    }
  pg.inv_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pg.mult_[i][j] == 0) {
        pg.inv_[i] = j;
        break;
      }

  for (size_t k = 0; k < spec.generators.size(); ++k) {
    std::string nm = spec.generator_names.empty() ? "s" + std::to_string(k + 1)
                                                  : spec.generator_names[k];
    pg.names_[nm] = pg.index_.at(spec.generators[k]);
  }
  return pg;
}

struct Isometry {
  IntVec trans; // lambda, lattice coordinates
  int point = 0;

  bool operator==(const Isometry& o) const { return point == o.point && trans == o.trans; }
  bool operator!=(const Isometry& o) const { return !(*this == o); }
  bool operator<(const Isometry& o) const {
    if (point != o.point) return point < o.point;
    return trans < o.trans;
  }
};

inline Isometry identity_isometry(int dim) { return Isometry{IntVec(dim), 0}; }

inline Isometry translation(IntVec lambda) { return Isometry{std::move(lambda), 0}; }

// (lambda, p)(mu, q) = (lambda + P mu, pq)
inline Isometry multiply(const PointGroup& g, const Isometry& a, const Isometry& b) {
  return Isometry{vec_add(a.trans, g.matrix(a.point) * b.trans), g.multiply(a.point, b.point)};
}

inline Isometry inverse(const PointGroup& g, const Isometry& a) {
  int pinv = g.inverse(a.point);
  return Isometry{vec_neg(g.matrix(pinv) * a.trans), pinv};
}

inline Isometry conjugate(const PointGroup& g, const Isometry& k, const Isometry& h) {
  return multiply(g, multiply(g, k, h), inverse(g, k));
}

inline Isometry linearize(const Isometry& h) { return Isometry{IntVec(h.trans.size()), h.point}; }

inline bool is_spherical(const Isometry& h) { return is_zero(h.trans); }

// canonical form "t[c1,...,cn]*gN" ("t[...]" alone for pure translations)
inline std::string format_element(const Isometry& h) {
  std::string s = "t[";
  for (size_t i = 0; i < h.trans.size(); ++i) {
    if (i) s += ",";
    s += h.trans[i].get_str();
  }
  s += "]";
  if (h.point != 0) s += "*g" + std::to_string(h.point);
  return s;
}

// Grammar: optional leading "t[c1,...,cn]", then '*'-separated point tokens,
// each "gN" (closed-group element index) or a generator name. Whitespace is
// ignored everywhere.
inline Isometry parse_element(const std::string& text, const PointGroup& g) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ElementParseError("empty element string");

  Isometry h = identity_isometry(g.dim());
  size_t pos = 0;
  if (s.size() >= 2 && s[0] == 't' && s[1] == '[') {
    size_t close = s.find(']', 2);
    if (close == std::string::npos) throw ElementParseError("unterminated translation bracket");
    std::string inner = s.substr(2, close - 2);
    std::vector<std::string> parts;
    size_t start = 0;
    for (;;) {
      size_t comma = inner.find(',', start);
      parts.push_back(inner.substr(start, comma == std::string::npos ? comma : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (int(parts.size()) != g.dim())
      throw ElementParseError("translation has " + std::to_string(parts.size()) +
                              " coordinates, expected " + std::to_string(g.dim()));
    for (int i = 0; i < g.dim(); ++i) {
      if (parts[i].empty() || mpz_set_str(h.trans[i].get_mpz_t(), parts[i].c_str(), 10) != 0)
        throw ElementParseError("bad integer '" + parts[i] + "' in translation");
    }
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != '*') throw ElementParseError("expected '*' after translation");
      ++pos;
      if (pos == s.size()) throw ElementParseError("trailing '*'");
    }
  }

  while (pos < s.size()) {
    size_t star = s.find('*', pos);
    std::string tok = s.substr(pos, star == std::string::npos ? star : star - pos);
    if (tok.empty()) throw ElementParseError("empty factor");
    int idx;
    if (tok[0] == 'g' && tok.size() > 1 &&
        tok.find_first_not_of("0123456789", 1) == std::string::npos) {
      long v = std::stol(tok.substr(1));
      if (v < 0 || v >= g.size())
        throw ElementParseError("element index " + tok + " out of range (group order " +
                                std::to_string(g.size()) + ")");
      idx = int(v);
    } else if (auto found = g.name_to_index(tok)) {
      idx = *found;
    } else {
      throw ElementParseError("unknown generator name '" + tok + "'");
    }
    h.point = g.multiply(h.point, idx);
    if (star == std::string::npos) break;
    pos = star + 1;
    if (pos == s.size()) throw ElementParseError("trailing '*'");
  }
  return h;
}

} // namespace isoconj
