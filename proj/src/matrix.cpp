#include "arbor/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "arbor/error.hpp"

namespace arbor {

namespace {

void require_square(const Matrix& m, const char* op) {
  if (!m.is_square()) {
    throw Error(ErrorKind::NotSquare, std::string(op) + ": matrix is " +
                                          std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
}

void require_index(std::size_t i, std::size_t bound, const char* what) {
  if (i >= bound) {
    throw Error(ErrorKind::IndexOutOfRange, std::string(what) + " index " + std::to_string(i) +
                                                " out of range (size " +
                                                std::to_string(bound) + ")");
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch, std::string(op) + ": shapes differ");
  }
}

void check_selector(const IndexSet& sel, std::size_t bound, const char* what) {
  for (std::size_t k = 0; k < sel.size(); ++k) {
    require_index(sel[k], bound, what);
    if (k > 0 && sel[k] <= sel[k - 1]) {
      throw Error(ErrorKind::UnsortedSelector,
                  std::string(what) + " selector must be strictly ascending");
    }
  }
}

IndexSet all_indices(std::size_t n) {
  IndexSet out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
  require_index(i, rows_, "row");
  require_index(j, cols_, "column");
  return (*this)(i, j);
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  require_index(i, rows_, "row");
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Rational> Matrix::column_sums() const {
  std::vector<Rational> sums(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) sums[j] += (*this)(i, j);
  }
  return sums;
}

namespace {

__extension__ typedef __int128 Wide;

// Bareiss over machine integers. Every intermediate value is a minor of the
// input, so it is bounded by the Hadamard bound checked by the caller; the
// cross products then fit in 128 bits.
Rational small_integer_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<Wide> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num().get_si();
  }
  int sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot * n + k] == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
      sign = -sign;
    }
    const Wide p = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * p - a[i * n + k] * a[k * n + j]) / prev;
      }
      a[i * n + k] = 0;
    }
    prev = p;
  }
  return Rational(static_cast<long>(a[n * n - 1]) * sign);
}

// True when every entry is an integer and the Hadamard bound (product of
// row norms, each floored at 1 so zero rows cannot hide large minors) stays
// below 2^60.
bool fits_small_integer_path(const Matrix& m) {
  constexpr double kLimit = 1152921504606846976.0;  // 2^60
  double bound = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double norm2 = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      if (x.get_den() != 1 || !x.get_num().fits_slong_p()) return false;
      const double v = x.get_num().get_d();
      norm2 += v * v;
    }
    bound *= std::max(1.0, std::sqrt(norm2));
    if (bound >= kLimit) return false;
  }
  return true;
}

}  // namespace

Rational det(const Matrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  for (std::size_t j = 0; j < n; ++j) {
    bool zero_column = true;
    for (std::size_t i = 0; i < n && zero_column; ++i) zero_column = m(i, j) == 0;
    if (zero_column) return 0;
  }
  if (fits_small_integer_path(m)) return small_integer_det(m);

  // Scale each row to integers; det(m) = det(a) / prod(row scales).
  std::vector<Integer> a(n * n);
  Integer scale_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
    }
    scale_product *= row_lcm;
  }

  // Bareiss: every division below is exact.
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot * n + k] == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
      sign = -sign;
    }
    const Integer& p = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = a[i * n + j];
        x = x * p - a[i * n + k] * a[k * n + j];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = p;
  }
  Rational result(a[n * n - 1] * sign, scale_product);
  result.canonicalize();
  return result;
}

Matrix delete_row(const Matrix& m, std::size_t r) {
  require_index(r, m.rows(), "row");
  IndexSet rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i != r) rows.push_back(i);
  }
  return select(m, rows, std::nullopt);
}

Matrix delete_col(const Matrix& m, std::size_t c) {
  require_index(c, m.cols(), "column");
  IndexSet cols;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (j != c) cols.push_back(j);
  }
  return select(m, std::nullopt, cols);
}

Matrix delete_row_col(const Matrix& m, std::size_t r) {
  require_square(m, "delete_row_col");
  return delete_col(delete_row(m, r), r);
}

Rational cofactor(const Matrix& m, std::size_t i, std::size_t j) {
  require_square(m, "cofactor");
  require_index(i, m.rows(), "row");
  require_index(j, m.cols(), "column");
  Rational minor = det(delete_col(delete_row(m, i), j));
  return (i + j) % 2 == 0 ? minor : Rational(-minor);
}

Matrix select(const Matrix& m, const std::optional<IndexSet>& rows,
              const std::optional<IndexSet>& cols) {
  if (rows) check_selector(*rows, m.rows(), "row");
  if (cols) check_selector(*cols, m.cols(), "column");
  const IndexSet r = rows ? *rows : all_indices(m.rows());
  const IndexSet c = cols ? *cols : all_indices(m.cols());
  Matrix out(r.size(), c.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) out(i, j) = m(r[i], c[j]);
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::ShapeMismatch, "multiply: inner dimensions differ");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::vector<Rational> multiply(const Matrix& m, std::span<const Rational> v) {
  if (m.cols() != v.size()) {
    throw Error(ErrorKind::ShapeMismatch, "multiply: vector length differs");
  }
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

Matrix paired_product(const Matrix& a, std::span<const Rational> weights, const Matrix& b) {
  if (a.cols() != weights.size() || b.rows() != weights.size()) {
    throw Error(ErrorKind::ShapeMismatch, "paired_product: edge dimension differs");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t k = 0; k < weights.size(); ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, k) == 0) continue;
      const Rational left = a(i, k) * weights[k];
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) out(i, j) += left * b(k, j);
      }
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "subtract");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

Matrix scale(const Matrix& m, const Rational& factor) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= factor;
  }
  return out;
}

bool power_is_zero(const Matrix& m, std::size_t k) {
  require_square(m, "power_is_zero");
  if (k == 0) throw Error(ErrorKind::IndexOutOfRange, "power_is_zero: exponent must be >= 1");
  Matrix power = m;
  for (std::size_t step = 1; step < k && !power.is_zero(); ++step) power = power * m;
  return power.is_zero();
}

std::string to_string(const Matrix& m) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i * m.cols() + j] = to_string(m(i, j));
      width[j] = std::max(width[j], cells[i * m.cols() + j].size());
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      os << (j ? " " : "") << std::string(width[j] - c.size(), ' ') << c;
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace arbor
