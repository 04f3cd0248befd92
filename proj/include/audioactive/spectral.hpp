#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "audioactive/table.hpp"

namespace audioactive {

using BigInt = boost::multiprecision::cpp_int;

// entry(i, j) = multiplicity of element j + 1 among the one-day products of
// element i + 1 (0-based indices, element ids are 1-based).
class DecayMatrix {
 public:
  DecayMatrix() = default;
  explicit DecayMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  std::uint32_t& operator()(std::size_t i, std::size_t j) {
    return entries_[i * n_ + j];
  }

  std::uint64_t row_sum(std::size_t i) const;
  std::uint64_t trace() const;

  friend bool operator==(const DecayMatrix&, const DecayMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> entries_;
};

DecayMatrix decay_matrix(const PeriodicTable& t);

// Some power of the matrix is entrywise positive (Wielandt bound).
bool is_primitive(const DecayMatrix& m);

// Strongly connected components in reverse topological order of the
// condensation (Tarjan). Each component lists 0-based indices.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const DecayMatrix& m);

struct EigenOptions {
  double tolerance = 1e-12;
  std::size_t max_iterations = 100000;
};

struct SpectralResult {
  double lambda = 0.0;
  // Dominant left eigenvector (v M = lambda v) scaled to sum to 10^6: the
  // long-run number of each element per million atoms.
  std::vector<double> abundance;
  // max_j |(v M)_j - lambda v_j| for the left eigenvector with |v|_1 = 1.
  double residual = 0.0;
  std::size_t iterations = 0;
};

// Power iteration on the left. The matrix need not be irreducible, but it
// must have a single primitive strongly connected block that every index is
// reachable from, with every other block a lone index whose self-weight is at
// most 1 (the fixed point "22" is such a block). Throws NotPrimitive or
// NoConvergence.
SpectralResult dominant_eigenvalue(const DecayMatrix& m,
                                   const EigenOptions& options = {});

// Exact integer polynomial, coefficient k multiplies x^k.
class BigPolynomial {
 public:
  BigPolynomial() = default;
  explicit BigPolynomial(std::vector<BigInt> coefficients);

  std::size_t degree() const noexcept;
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  const BigInt& coefficient(std::size_t k) const { return coeffs_.at(k); }

  BigInt evaluate(const BigInt& x) const;
  // b^degree * p(a / b), exact; its sign is the sign of p(a / b) for b > 0.
  BigInt evaluate_scaled(const BigInt& a, const BigInt& b) const;
  double evaluate(double x) const;

  friend bool operator==(const BigPolynomial&, const BigPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// det(x I - M), computed division-free (Berkowitz).
BigPolynomial char_poly(const DecayMatrix& m);

}  // namespace audioactive
