#include "audioactive/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

#include "audioactive/errors.hpp"

namespace audioactive {

std::uint64_t DecayMatrix::row_sum(std::size_t i) const {
  std::uint64_t s = 0;
  for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j);
  return s;
}

std::uint64_t DecayMatrix::trace() const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
  return s;
}

DecayMatrix decay_matrix(const PeriodicTable& t) {
  DecayMatrix m(t.size());
  for (const Element& e : t.elements()) {
    for (const ElementId p : e.products) {
      ++m(static_cast<std::size_t>(e.id - 1), static_cast<std::size_t>(p - 1));
    }
  }
  return m;
}

namespace {

// Boolean matrix over rows of dynamic bitsets packed in 64-bit words.
class BoolMatrix {
 public:
  explicit BoolMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }

  BoolMatrix operator*(const BoolMatrix& rhs) const {
    BoolMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (!get(i, k)) continue;
        for (std::size_t w = 0; w < words_; ++w) {
          out.bits_[i * words_ + w] |= rhs.bits_[k * words_ + w];
        }
      }
    }
    return out;
  }

  bool all_set() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!get(i, j)) return false;
      }
    }
    return true;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

bool primitive_on(const DecayMatrix& m, const std::vector<std::size_t>& idx) {
  const std::size_t n = idx.size();
  if (n == 0) return false;
  BoolMatrix b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(idx[i], idx[j]) != 0) b.set(i, j);
    }
  }
  // Primitive iff B^k > 0 for k = (n - 1)^2 + 1; squaring overshoots that,
  // which is harmless because positivity persists for irreducible B.
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  std::size_t power = 1;
  while (power < bound) {
    b = b * b;
    power *= 2;
  }
  return b.all_set();
}

}  // namespace

bool is_primitive(const DecayMatrix& m) {
  std::vector<std::size_t> all(m.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return primitive_on(m, all);
}

std::vector<std::vector<std::size_t>> strongly_connected_components(
    const DecayMatrix& m) {
  const std::size_t n = m.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (m(v, w) == 0) continue;
      if (index[w] == kUnvisited) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      components.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == kUnvisited) visit(v);
  }
  return components;
}

SpectralResult dominant_eigenvalue(const DecayMatrix& m,
                                   const EigenOptions& options) {
  const std::size_t n = m.size();
  if (n == 0) throw NotPrimitive("empty matrix");

  auto components = strongly_connected_components(m);
  const auto main = std::max_element(
      components.begin(), components.end(),
      [](const auto& a, const auto& b) { return a.size() < b.size(); });
  if (!primitive_on(m, *main)) {
    throw NotPrimitive("largest strongly connected block (" +
                       std::to_string(main->size()) + " of " +
                       std::to_string(n) + ") is not primitive");
  }
  for (auto c = components.begin(); c != components.end(); ++c) {
    if (c == main) continue;
    if (c->size() != 1 || m(c->front(), c->front()) > 1) {
      throw NotPrimitive("a secondary block could compete with the main one");
    }
  }
  std::vector<bool> reached(n, false);
  std::deque<std::size_t> queue(main->begin(), main->end());
  for (const std::size_t i : *main) reached[i] = true;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != 0 && !reached[j]) {
        reached[j] = true;
        queue.push_back(j);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    throw NotPrimitive("some index is not fed by the main block");
  }

  // Sparse copy of the transpose: inflow[j] lists (i, m(i, j)).
  std::vector<std::vector<std::pair<std::size_t, double>>> inflow(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != 0) inflow[j].emplace_back(i, static_cast<double>(m(i, j)));
    }
  }
  const auto left_multiply = [&](const std::vector<double>& v,
                                 std::vector<double>& out) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (const auto& [i, w] : inflow[j]) s += v[i] * w;
      out[j] = s;
    }
  };

  SpectralResult result;
  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  std::vector<double> w(n);
  bool converged = false;
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    left_multiply(v, w);
    double total = 0.0;
    for (const double x : w) total += x;
    double change = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      w[j] /= total;
      change = std::max(change, std::abs(w[j] - v[j]));
    }
    v.swap(w);
    result.lambda = total;
    result.iterations = it;
    if (change < options.tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NoConvergence("power iteration did not converge in " +
                        std::to_string(options.max_iterations) + " iterations");
  }

  left_multiply(v, w);
  double total = 0.0;
  for (const double x : w) total += x;
  result.lambda = total;
  for (std::size_t j = 0; j < n; ++j) {
    result.residual = std::max(result.residual, std::abs(w[j] - result.lambda * v[j]));
  }
  result.abundance.resize(n);
  double sum = 0.0;
  for (const double x : v) sum += x;
  for (std::size_t j = 0; j < n; ++j) result.abundance[j] = v[j] / sum * 1e6;
  return result;
}

BigPolynomial::BigPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

std::size_t BigPolynomial::degree() const noexcept {
  return coeffs_.size() - 1;
}

BigInt BigPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto c = coeffs_.rbegin(); c != coeffs_.rend(); ++c) acc = acc * x + *c;
  return acc;
}

BigInt BigPolynomial::evaluate_scaled(const BigInt& a, const BigInt& b) const {
  // sum_k c_k a^k b^(n-k), Horner in a with a running power of b.
  BigInt acc = 0;
  BigInt b_power = 1;
  for (auto c = coeffs_.rbegin(); c != coeffs_.rend(); ++c) {
    acc = acc * a + *c * b_power;
    b_power *= b;
  }
  return acc;
}

double BigPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto c = coeffs_.rbegin(); c != coeffs_.rend(); ++c) {
    acc = acc * x + c->convert_to<double>();
  }
  return acc;
}

BigPolynomial char_poly(const DecayMatrix& m) {
  const std::size_t n = m.size();
  // p holds coefficients from the highest degree down: p[0] = 1.
  std::vector<BigInt> p{1};
  std::vector<BigInt> vec, next;
  for (std::size_t r = 0; r < n; ++r) {
    // Leading (r+1)x(r+1) block: [[A, C], [R, a]] with A = rows/cols < r.
    // Toeplitz column: 1, -a, -R C, -R A C, ..., -R A^(r-1) C.
    std::vector<BigInt> column;
    column.reserve(r + 2);
    column.emplace_back(1);
    column.emplace_back(-BigInt(m(r, r)));
    vec.assign(r, 0);  // running C, A C, A^2 C, ...
    for (std::size_t i = 0; i < r; ++i) vec[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (std::size_t j = 0; j < r; ++j) {
        if (m(r, j) != 0 && vec[j] != 0) dot += vec[j] * m(r, j);
      }
      column.push_back(-dot);
      if (k + 1 == r) break;
      next.assign(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          if (m(i, j) != 0 && vec[j] != 0) next[i] += vec[j] * m(i, j);
        }
      }
      vec.swap(next);
    }
    // p_new = T p, T lower-triangular Toeplitz of size (r+2) x (r+1).
    std::vector<BigInt> q(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        if (column[i - j] != 0 && p[j] != 0) q[i] += column[i - j] * p[j];
      }
    }
    p.swap(q);
  }
  std::reverse(p.begin(), p.end());
  return BigPolynomial(std::move(p));
}

}  // namespace audioactive
