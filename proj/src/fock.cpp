#include "ncg/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ncg {

namespace {

using Index = Eigen::Index;

void require_same_basis(const OperatorMatrix& a, const OperatorMatrix& b,
                        const char* op) {
  if (a.basis() != b.basis()) {
    throw std::invalid_argument(
        std::string(op) + ": operand dimension mismatch (" +
        std::to_string(a.basis().outer) + "x" +
        std::to_string(a.basis().inner) + " vs " +
        std::to_string(b.basis().outer) + "x" +
        std::to_string(b.basis().inner) + ")");
  }
}

}  // namespace

void Cutoffs::validate() const {
  if (landau < 0) {
    throw std::invalid_argument("Landau cutoff N must be nonnegative, got " +
                                std::to_string(landau));
  }
  if (degeneracy < 0) {
    throw std::invalid_argument(
        "degeneracy cutoff J must be nonnegative, got " +
        std::to_string(degeneracy));
  }
  if (static_cast<std::size_t>(landau) + 1 > kMaxDimension ||
      static_cast<std::size_t>(degeneracy) + 1 > kMaxDimension ||
      dimension() > kMaxDimension) {
    throw std::invalid_argument("composite dimension (N+1)(J+1) exceeds " +
                                std::to_string(kMaxDimension));
  }
}

std::size_t flatten(BasisIndex idx, const Cutoffs& c) {
  if (idx.n < 0 || idx.n > c.landau) {
    throw std::out_of_range("Landau index n=" + std::to_string(idx.n) +
                            " outside 0.." + std::to_string(c.landau));
  }
  if (idx.j < 0 || idx.j > c.degeneracy) {
    throw std::out_of_range("degeneracy index j=" + std::to_string(idx.j) +
                            " outside 0.." + std::to_string(c.degeneracy));
  }
  return static_cast<std::size_t>(idx.n) *
             static_cast<std::size_t>(c.degeneracy + 1) +
         static_cast<std::size_t>(idx.j);
}

BasisIndex unflatten(std::size_t flat, const Cutoffs& c) {
  if (flat >= c.dimension()) {
    throw std::out_of_range("flat index " + std::to_string(flat) +
                            " outside 0.." +
                            std::to_string(c.dimension() - 1));
  }
  const auto width = static_cast<std::size_t>(c.degeneracy + 1);
  return {static_cast<int>(flat / width), static_cast<int>(flat % width)};
}

OperatorMatrix::OperatorMatrix(Basis basis, Dense entries)
    : basis_(basis), entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("operator matrix must be square");
  }
  if (basis_.dimension() == 0 ||
      static_cast<std::size_t>(entries_.rows()) != basis_.dimension()) {
    throw std::invalid_argument(
        "operator matrix size " + std::to_string(entries_.rows()) +
        " does not match basis dimension " +
        std::to_string(basis_.dimension()));
  }
  if (basis_.dimension() > kMaxDimension) {
    throw std::invalid_argument("operator dimension exceeds " +
                                std::to_string(kMaxDimension));
  }
  if (!entries_.allFinite()) {
    throw std::invalid_argument("operator matrix has non-finite entries");
  }
}

OperatorMatrix OperatorMatrix::zero(Basis basis) {
  const auto d = static_cast<Index>(basis.dimension());
  return {basis, Dense::Zero(d, d)};
}

OperatorMatrix OperatorMatrix::identity(Basis basis) {
  const auto d = static_cast<Index>(basis.dimension());
  return {basis, Dense::Identity(d, d)};
}

OperatorMatrix OperatorMatrix::diagonal(Basis basis,
                                        std::span<const Complex> values) {
  if (values.size() != basis.dimension()) {
    throw std::invalid_argument("diagonal length does not match basis");
  }
  const auto d = static_cast<Index>(basis.dimension());
  Dense m = Dense::Zero(d, d);
  for (Index i = 0; i < d; ++i) m(i, i) = values[static_cast<std::size_t>(i)];
  return {basis, std::move(m)};
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& rhs) const {
  require_same_basis(*this, rhs, "add");
  return {basis_, entries_ + rhs.entries_};
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& rhs) const {
  require_same_basis(*this, rhs, "subtract");
  return {basis_, entries_ - rhs.entries_};
}

OperatorMatrix OperatorMatrix::operator-() const { return {basis_, -entries_}; }

OperatorMatrix operator*(Complex s, const OperatorMatrix& m) {
  return {m.basis_, s * m.entries_};
}

OperatorMatrix annihilation_matrix(std::size_t dim) {
  if (dim == 0) {
    throw std::invalid_argument("annihilation_matrix: dimension must be >= 1");
  }
  const auto d = static_cast<Index>(dim);
  OperatorMatrix::Dense m = OperatorMatrix::Dense::Zero(d, d);
  for (Index k = 0; k + 1 < d; ++k) {
    m(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
  }
  return {Basis::single_mode(dim), std::move(m)};
}

OperatorMatrix dagger(const OperatorMatrix& a) {
  return {a.basis(), a.entries().adjoint()};
}

OperatorMatrix matmul(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a, b, "matmul");
  OperatorMatrix::Dense product = a.entries() * b.entries();
  return {a.basis(), std::move(product)};
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a, b, "commutator");
  OperatorMatrix::Dense ab = a.entries() * b.entries();
  ab.noalias() -= b.entries() * a.entries();
  return {a.basis(), std::move(ab)};
}

OperatorMatrix kron(const OperatorMatrix& outer, const OperatorMatrix& inner) {
  const std::size_t dim = outer.dim() * inner.dim();
  if (dim > kMaxDimension) {
    throw std::invalid_argument("kron: composite dimension exceeds " +
                                std::to_string(kMaxDimension));
  }
  const auto no = static_cast<Index>(outer.dim());
  const auto ni = static_cast<Index>(inner.dim());
  OperatorMatrix::Dense m(no * ni, no * ni);
  for (Index r = 0; r < no; ++r) {
    for (Index c = 0; c < no; ++c) {
      m.block(r * ni, c * ni, ni, ni) = outer.entries()(r, c) * inner.entries();
    }
  }
  return {Basis{outer.dim(), inner.dim()}, std::move(m)};
}

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a, b, "max_abs_diff");
  return (a.entries() - b.entries()).cwiseAbs().maxCoeff();
}

bool approx_equal(const OperatorMatrix& a, const OperatorMatrix& b,
                  double tol) {
  return a.basis() == b.basis() && max_abs_diff(a, b) <= tol;
}

double hermiticity_deviation(const OperatorMatrix& a) {
  return (a.entries() - a.entries().adjoint()).cwiseAbs().maxCoeff();
}

Complex trace(const OperatorMatrix& a) { return a.entries().trace(); }

}  // namespace ncg
