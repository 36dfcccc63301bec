#ifndef TMW_MATRIX_HPP
#define TMW_MATRIX_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace tmw {

// Small dense matrix over a field element type F. F must provide the
// arithmetic operators, is_zero(), zero_like(), one_like() and
// frobenius_q(j); the instantiations used are Frac, Laurent and ExtElem.
template <class F>
class Mat {
public:
  Mat(int rows, int cols, const F& fill) : r_(rows), c_(cols), a_(size_t(rows) * cols, fill) {}

  static Mat zeros(int rows, int cols, const F& like) { return Mat(rows, cols, like.zero_like()); }
  static Mat identity(int n, const F& like) {
    Mat m = zeros(n, n, like);
    for (int i = 0; i < n; ++i) m(i, i) = like.one_like();
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  F& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const F& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
  }
  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
  }
  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("Mat: dimension mismatch in product");
    Mat m = zeros(r_, o.c_, a_.empty() ? o.a_[0] : a_[0]);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const F& x = (*this)(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.c_; ++j) m(i, j) = m(i, j) + x * o(k, j);
      }
    return m;
  }
  Mat scaled(const F& s) const {
    Mat m = *this;
    for (auto& x : m.a_) x = x * s;
    return m;
  }
  std::vector<F> apply(const std::vector<F>& v) const {
    if (int(v.size()) != c_) throw std::invalid_argument("Mat: vector size mismatch");
    std::vector<F> out(r_, a_[0].zero_like());
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (!(*this)(i, j).is_zero()) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  // entrywise x -> x^{q^j}
  Mat frobenius_q(unsigned j) const {
    Mat m = *this;
    for (auto& x : m.a_) x = x.frobenius_q(j);
    return m;
  }

  Mat pow(unsigned n) const {
    if (r_ != c_) throw std::invalid_argument("Mat: pow of non-square matrix");
    Mat res = identity(r_, a_[0]);
    Mat b = *this;
    while (n) {
      if (n & 1) res = res * b;
      b = b * b;
      n >>= 1;
    }
    return res;
  }

  // Gaussian elimination. Pivoting treats "zero" as F::is_zero(); over Laurent
  // that means indistinguishable-from-zero entries are not used as pivots and
  // *ambiguous (when given) is set if such an entry is met where a pivot was
  // needed but the entry is not exactly known to vanish.
  int rank(bool* ambiguous = nullptr) const {
    Mat m = *this;
    if (ambiguous) *ambiguous = false;
    int rk = 0;
    for (int col = 0; col < c_ && rk < r_; ++col) {
      int piv = -1;
      for (int i = rk; i < r_; ++i)
        if (!m(i, col).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) {
        if (ambiguous)
          for (int i = rk; i < r_; ++i)
            if (!exactly_zero(m(i, col))) *ambiguous = true;
        continue;
      }
      m.swap_rows(piv, rk);
      F inv = m(rk, col).one_like() / m(rk, col);
      for (int i = rk + 1; i < r_; ++i) {
        if (m(i, col).is_zero()) continue;
        F f = m(i, col) * inv;
        for (int j = col; j < c_; ++j) m(i, j) = m(i, j) - f * m(rk, j);
      }
      ++rk;
    }
    return rk;
  }

  F det() const {
    if (r_ != c_) throw std::invalid_argument("Mat: det of non-square matrix");
    Mat m = *this;
    F d = a_[0].one_like();
    for (int col = 0; col < c_; ++col) {
      int piv = -1;
      for (int i = col; i < r_; ++i)
        if (!m(i, col).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return a_[0].zero_like();
      if (piv != col) {
        m.swap_rows(piv, col);
        d = d.zero_like() - d;
      }
      d = d * m(col, col);
      F inv = m(col, col).one_like() / m(col, col);
      for (int i = col + 1; i < r_; ++i) {
        if (m(i, col).is_zero()) continue;
        F f = m(i, col) * inv;
        for (int j = col; j < c_; ++j) m(i, j) = m(i, j) - f * m(col, j);
      }
    }
    return d;
  }

  // inverse via Gauss-Jordan; throws when a pivot is missing
  Mat inverse() const {
    if (r_ != c_) throw std::invalid_argument("Mat: inverse of non-square matrix");
    Mat m = *this, id = identity(r_, a_[0]);
    for (int col = 0; col < c_; ++col) {
      int piv = -1;
      for (int i = col; i < r_; ++i)
        if (!m(i, col).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) throw std::domain_error("Mat: singular matrix");
      m.swap_rows(piv, col);
      id.swap_rows(piv, col);
      F inv = m(col, col).one_like() / m(col, col);
      for (int j = 0; j < c_; ++j) {
        m(col, j) = m(col, j) * inv;
        id(col, j) = id(col, j) * inv;
      }
      for (int i = 0; i < r_; ++i) {
        if (i == col || m(i, col).is_zero()) continue;
        F f = m(i, col);
        for (int j = 0; j < c_; ++j) {
          m(i, j) = m(i, j) - f * m(col, j);
          id(i, j) = id(i, j) - f * id(col, j);
        }
      }
    }
    return id;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }

private:
  static bool exactly_zero(const F& x) {
    if constexpr (requires(const F& y) { y.is_exact_zero(); })
      return x.is_exact_zero();
    else
      return x.is_zero();
  }
  void check_same_shape(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat: shape mismatch");
  }

  int r_, c_;
  std::vector<F> a_;
};

}  // namespace tmw

#endif  // TMW_MATRIX_HPP
