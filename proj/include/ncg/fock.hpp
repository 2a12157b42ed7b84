#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

namespace ncg {

using Complex = std::complex<double>;

/// Largest composite dimension the dense engine accepts.
inline constexpr std::size_t kMaxDimension = 10000;

/// Default absolute tolerance for matrix comparisons.
inline constexpr double kDefaultTolerance = 1e-12;

/// Truncation of the two-mode Fock space: Landau levels n = 0..landau and
/// degeneracy quanta j = 0..degeneracy are retained.
struct Cutoffs {
  int landau = 0;
  int degeneracy = 0;

  /// Throws std::invalid_argument on negative cutoffs or when the composite
  /// dimension exceeds kMaxDimension.
  void validate() const;
  std::size_t dimension() const {
    return static_cast<std::size_t>(landau + 1) *
           static_cast<std::size_t>(degeneracy + 1);
  }

  friend bool operator==(const Cutoffs&, const Cutoffs&) = default;
};

/// A state |n, j>: n counts b-quanta (Landau level), j counts a-quanta
/// (position within the degenerate level).
struct BasisIndex {
  int n = 0;
  int j = 0;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// n-major flattening: n * (J + 1) + j. Throws std::out_of_range naming the
/// offending component.
std::size_t flatten(BasisIndex idx, const Cutoffs& c);
BasisIndex unflatten(std::size_t flat, const Cutoffs& c);

/// Product structure of the space an operator acts on. A single mode of
/// dimension D is {D, 1}; a composite space is {outer, inner} with the outer
/// factor varying slowest in the flattened index.
struct Basis {
  std::size_t outer = 1;
  std::size_t inner = 1;

  static Basis single_mode(std::size_t dim) { return {dim, 1}; }
  static Basis of(const Cutoffs& c) {
    return {static_cast<std::size_t>(c.landau + 1),
            static_cast<std::size_t>(c.degeneracy + 1)};
  }
  std::size_t dimension() const { return outer * inner; }

  friend bool operator==(const Basis&, const Basis&) = default;
};

/// Dense square complex matrix tagged with the basis it acts on. Values are
/// immutable once built; every operation returns a new matrix.
class OperatorMatrix {
 public:
  using Dense = Eigen::MatrixXcd;

  /// Throws std::invalid_argument if the entries are not square, do not
  /// match the basis dimension, or contain NaN/Inf.
  OperatorMatrix(Basis basis, Dense entries);

  static OperatorMatrix zero(Basis basis);
  static OperatorMatrix identity(Basis basis);
  static OperatorMatrix diagonal(Basis basis, std::span<const Complex> values);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Basis& basis() const { return basis_; }
  const Dense& entries() const { return entries_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row),
                    static_cast<Eigen::Index>(col));
  }

  OperatorMatrix operator+(const OperatorMatrix& rhs) const;
  OperatorMatrix operator-(const OperatorMatrix& rhs) const;
  OperatorMatrix operator-() const;
  friend OperatorMatrix operator*(Complex s, const OperatorMatrix& m);

 private:
  Basis basis_;
  Dense entries_;
};

/// Single-mode annihilation operator truncated to D levels: sqrt(m+1) at
/// (m, m+1). Throws std::invalid_argument for D = 0.
OperatorMatrix annihilation_matrix(std::size_t dim);

OperatorMatrix dagger(const OperatorMatrix& a);

/// Throws std::invalid_argument on basis mismatch.
OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b);

/// AB - BA. Throws std::invalid_argument on basis mismatch.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Tensor product with `outer` acting on the slow (first) factor and
/// `inner` on the fast one, consistent with flatten().
OperatorMatrix kron(const OperatorMatrix& outer, const OperatorMatrix& inner);

/// Largest |A(i,k) - B(i,k)|. Throws on basis mismatch.
double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);

bool approx_equal(const OperatorMatrix& a, const OperatorMatrix& b,
                  double tol = kDefaultTolerance);

/// Largest |A - A^dagger| entry.
double hermiticity_deviation(const OperatorMatrix& a);

Complex trace(const OperatorMatrix& a);

}  // namespace ncg
