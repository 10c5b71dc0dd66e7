#include "ausglue/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

#include "ausglue/errors.hpp"

namespace ausglue {

namespace detail {

struct FpOps {
  std::int64_t p;
  using T = std::int64_t;
  T zero() const { return 0; }
  T one() const { return 1; }
  T add(T a, T b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(T a, T b) const {
    T s = a - b;
    return s < 0 ? s + p : s;
  }
  T mul(T a, T b) const { return a * b % p; }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T inv(T a) const { return mod_inverse(a, p); }
  bool is_zero(T a) const { return a == 0; }
  T from(const Scalar& s) const { return s.residue(); }
  Scalar to(T a) const { return Scalar::from_residue(a, Field::prime(p)); }
};

struct QOps {
  using T = Rational;
  T zero() const { return T(0); }
  T one() const { return T(1); }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return 1 / a; }
  bool is_zero(const T& a) const { return a == 0; }
  T from(const Scalar& s) const { return s.rational(); }
  Scalar to(const T& a) const { return Scalar::from_rational(a); }
};

struct MatAccess {
  template <class Ops>
  static auto& data(Mat& m) {
    if constexpr (std::is_same_v<Ops, FpOps>)
      return m.fp_;
    else
      return m.q_;
  }
  template <class Ops>
  static const auto& data(const Mat& m) {
    if constexpr (std::is_same_v<Ops, FpOps>)
      return m.fp_;
    else
      return m.q_;
  }
  static Mat blank(const Field& f, std::size_t r, std::size_t c) {
    Mat m;
    m.f_ = f;
    m.r_ = r;
    m.c_ = c;
    if (f.kind == FieldKind::Rational)
      m.q_.assign(r * c, Rational(0));
    else
      m.fp_.assign(r * c, 0);
    return m;
  }
};

template <class Fn>
decltype(auto) dispatch(const Field& f, Fn&& fn) {
  if (f.kind == FieldKind::Rational) return fn(QOps{});
  return fn(FpOps{f.p});
}

// In-place reduced row echelon form; returns pivot columns.
template <class Ops, class V>
std::vector<std::size_t> rref_in_place(const Ops& ops, V& a, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ops.is_zero(a[i * cols + j])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t t = 0; t < cols; ++t) std::swap(a[piv * cols + t], a[r * cols + t]);
    auto inv = ops.inv(a[r * cols + j]);
    for (std::size_t t = j; t < cols; ++t) a[r * cols + t] = ops.mul(a[r * cols + t], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.is_zero(a[i * cols + j])) continue;
      auto factor = a[i * cols + j];
      for (std::size_t t = j; t < cols; ++t) {
        if (ops.is_zero(a[r * cols + t])) continue;
        a[i * cols + t] = ops.sub(a[i * cols + t], ops.mul(factor, a[r * cols + t]));
      }
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

}  // namespace detail

using detail::dispatch;
using detail::MatAccess;

Mat::Mat() : f_(current_field()) {}

Mat::Mat(std::size_t rows, std::size_t cols) : f_(current_field()), r_(rows), c_(cols) {
  if (f_.kind == FieldKind::Rational)
    q_.assign(rows * cols, Rational(0));
  else
    fp_.assign(rows * cols, 0);
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

Mat Mat::unit(std::size_t n, std::size_t i) {
  Mat m(n, 1);
  m.set(i, 0, Scalar(1));
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Mat m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InvalidParams("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(rows[i][j]));
  }
  return m;
}

Mat Mat::from_scalar_rows(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Mat m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InvalidParams("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::column(const std::vector<Scalar>& entries) {
  Mat m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Mat Mat::hstack(const std::vector<Mat>& parts, std::size_t rows) {
  std::size_t c = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw InvalidParams("hstack row mismatch");
    c += p.cols();
  }
  Mat m(rows, c);
  std::size_t off = 0;
  for (const auto& p : parts) {
    m.set_block(0, off, p);
    off += p.cols();
  }
  return m;
}

Mat Mat::vstack(const std::vector<Mat>& parts, std::size_t cols) {
  std::size_t r = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw InvalidParams("vstack column mismatch");
    r += p.rows();
  }
  Mat m(r, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    m.set_block(off, 0, p);
    off += p.rows();
  }
  return m;
}

Mat Mat::direct_sum(const std::vector<Mat>& parts) {
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    r += p.rows();
    c += p.cols();
  }
  Mat m(r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& p : parts) {
    m.set_block(ro, co, p);
    ro += p.rows();
    co += p.cols();
  }
  return m;
}

void Mat::check(const Mat& o) const {
  if (f_ != o.f_) throw FieldMismatch(f_.name() + " vs " + o.f_.name());
}

Scalar Mat::operator()(std::size_t i, std::size_t j) const {
  if (f_.kind == FieldKind::Rational) return Scalar::from_rational(q_[i * c_ + j]);
  return Scalar::from_residue(fp_[i * c_ + j], f_);
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (v.field() != f_) throw FieldMismatch("scalar field differs from matrix field");
  if (f_.kind == FieldKind::Rational)
    q_[i * c_ + j] = v.rational();
  else
    fp_[i * c_ + j] = v.residue();
}

void Mat::add_to(std::size_t i, std::size_t j, const Scalar& v) { set(i, j, (*this)(i, j) + v); }

Mat Mat::operator*(const Mat& o) const {
  check(o);
  if (c_ != o.r_) throw InvalidParams("matrix product shape mismatch");
  return dispatch(f_, [&](auto ops) {
    using Ops = decltype(ops);
    Mat out = MatAccess::blank(f_, r_, o.c_);
    auto& d = MatAccess::data<Ops>(out);
    const auto& a = MatAccess::data<Ops>(*this);
    const auto& b = MatAccess::data<Ops>(o);
    if constexpr (std::is_same_v<Ops, detail::FpOps>) {
      std::vector<unsigned __int128> acc(o.c_);
      for (std::size_t i = 0; i < r_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t t = 0; t < c_; ++t) {
          auto x = a[i * c_ + t];
          if (x == 0) continue;
          const auto* brow = &b[t * o.c_];
          for (std::size_t j = 0; j < o.c_; ++j) acc[j] += static_cast<unsigned __int128>(x * brow[j]);
        }
        for (std::size_t j = 0; j < o.c_; ++j)
          d[i * o.c_ + j] = static_cast<std::int64_t>(acc[j] % static_cast<unsigned __int128>(ops.p));
      }
    } else {
      for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t t = 0; t < c_; ++t) {
          const auto& x = a[i * c_ + t];
          if (x == 0) continue;
          for (std::size_t j = 0; j < o.c_; ++j)
            if (b[t * o.c_ + j] != 0) d[i * o.c_ + j] += x * b[t * o.c_ + j];
        }
    }
    return out;
  });
}

Mat Mat::operator+(const Mat& o) const {
  Mat out = *this;
  out += o;
  return out;
}

Mat& Mat::operator+=(const Mat& o) {
  check(o);
  if (r_ != o.r_ || c_ != o.c_) throw InvalidParams("matrix sum shape mismatch");
  dispatch(f_, [&](auto ops) {
    using Ops = decltype(ops);
    auto& a = MatAccess::data<Ops>(*this);
    const auto& b = MatAccess::data<Ops>(o);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = ops.add(a[i], b[i]);
    return 0;
  });
  return *this;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
  Mat out = *this;
  dispatch(f_, [&](auto ops) {
    using Ops = decltype(ops);
    auto& a = MatAccess::data<Ops>(out);
    for (auto& x : a) x = ops.neg(x);
    return 0;
  });
  return out;
}

Mat Mat::scaled(const Scalar& s) const {
  if (s.field() != f_) throw FieldMismatch("scalar field differs from matrix field");
  Mat out = *this;
  dispatch(f_, [&](auto ops) {
    using Ops = decltype(ops);
    auto& a = MatAccess::data<Ops>(out);
    auto c = ops.from(s);
    for (auto& x : a) x = ops.mul(x, c);
    return 0;
  });
  return out;
}

Mat Mat::transpose() const {
  return dispatch(f_, [&](auto ops) {
    using Ops = decltype(ops);
    Mat out = MatAccess::blank(f_, c_, r_);
    auto& d = MatAccess::data<Ops>(out);
    const auto& a = MatAccess::data<Ops>(*this);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) d[j * r_ + i] = a[i * c_ + j];
    return out;
  });
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > r_ || c0 + nc > c_) throw InvalidParams("block out of range");
  return dispatch(f_, [&](auto ops) {
    using Ops = decltype(ops);
    Mat out = MatAccess::blank(f_, nr, nc);
    auto& d = MatAccess::data<Ops>(out);
    const auto& a = MatAccess::data<Ops>(*this);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) d[i * nc + j] = a[(r0 + i) * c_ + c0 + j];
    return out;
  });
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  check(b);
  if (r0 + b.r_ > r_ || c0 + b.c_ > c_) throw InvalidParams("set_block out of range");
  dispatch(f_, [&](auto ops) {
    using Ops = decltype(ops);
    auto& d = MatAccess::data<Ops>(*this);
    const auto& a = MatAccess::data<Ops>(b);
    for (std::size_t i = 0; i < b.r_; ++i)
      for (std::size_t j = 0; j < b.c_; ++j) d[(r0 + i) * c_ + c0 + j] = a[i * b.c_ + j];
    return 0;
  });
}

Mat Mat::select_cols(const std::vector<std::size_t>& idx) const {
  Mat out = MatAccess::blank(f_, r_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) out.set_block(0, j, col(idx[j]));
  return out;
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
  Mat out = MatAccess::blank(f_, idx.size(), c_);
  for (std::size_t i = 0; i < idx.size(); ++i) out.set_block(i, 0, block(idx[i], 0, 1, c_));
  return out;
}

bool Mat::is_zero() const {
  if (f_.kind == FieldKind::Rational)
    return std::all_of(q_.begin(), q_.end(), [](const Rational& x) { return x == 0; });
  return std::all_of(fp_.begin(), fp_.end(), [](std::int64_t x) { return x == 0; });
}

bool Mat::is_identity() const {
  if (r_ != c_) return false;
  return *this == Mat::identity(r_);
}

bool Mat::operator==(const Mat& o) const {
  check(o);
  if (r_ != o.r_ || c_ != o.c_) return false;
  return f_.kind == FieldKind::Rational ? q_ == o.q_ : fp_ == o.fp_;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

Rref rref(const Mat& m) {
  Rref out{m, {}};
  out.pivots = dispatch(m.field(), [&](auto ops) {
    using Ops = decltype(ops);
    return detail::rref_in_place(ops, MatAccess::data<Ops>(out.reduced), m.rows(), m.cols());
  });
  return out;
}

std::size_t rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref(m).pivots.size();
}

Mat kernel_basis(const Mat& m) {
  Rref r = rref(m);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free.push_back(j);
  Mat k(n, free.size());
  for (std::size_t t = 0; t < free.size(); ++t) {
    k.set(free[t], t, Scalar(1));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      Scalar v = r.reduced(i, free[t]);
      if (!v.is_zero()) k.set(r.pivots[i], t, -v);
    }
  }
  return k;
}

Mat image_basis(const Mat& m) {
  if (m.cols() == 0) return Mat(m.rows(), 0);
  return m.select_cols(rref(m).pivots);
}

std::optional<Mat> try_solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw InvalidParams("solve: row counts differ");
  std::size_t n = a.cols();
  Mat aug = Mat::hstack({a, b}, a.rows());
  Rref r = rref(aug);
  Mat x(n, b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= n) return std::nullopt;
    x.set_block(r.pivots[i], 0, r.reduced.block(i, n, 1, b.cols()));
  }
  return x;
}

Mat solve(const Mat& a, const Mat& b) {
  auto x = try_solve(a, b);
  if (!x) throw NoSolution("right-hand side outside the column space");
  return *x;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw InvalidParams("inverse of non-square matrix");
  auto x = try_solve(m, Mat::identity(m.rows()));
  if (!x || rank(m) != m.rows()) throw NoSolution("singular matrix");
  return *x;
}

bool is_invertible(const Mat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Mat left_inverse(const Mat& m) {
  // Complete the columns to a basis, invert, keep the leading rows.
  std::size_t n = m.rows(), c = m.cols();
  auto extra = complement_units(m, n);
  if (extra.size() + c != n) throw InvalidParams("left_inverse: columns are dependent");
  std::vector<Mat> cols{m};
  for (auto e : extra) cols.push_back(Mat::unit(n, e));
  Mat full = Mat::hstack(cols, n);
  return inverse(full).block(0, 0, c, n);
}

std::vector<std::size_t> complement_units(const Mat& sub, std::size_t n) {
  Mat aug = Mat::hstack({sub, Mat::identity(n)}, n);
  Rref r = rref(aug);
  std::vector<std::size_t> out;
  for (auto p : r.pivots)
    if (p >= sub.cols()) out.push_back(p - sub.cols());
  return out;
}

Mat intersect_spans(const Mat& a, const Mat& b) {
  // x in ker [a | -b] gives a x_a = b x_b.
  Mat k = kernel_basis(Mat::hstack({a, -b}, a.rows()));
  Mat inter = a * k.block(0, 0, a.cols(), k.cols());
  return image_basis(inter);
}

bool in_span(const Mat& basis, const Mat& v) { return try_solve(basis, v).has_value(); }

std::vector<std::size_t> extending_columns(const Mat& sub, const Mat& candidates) {
  Rref r = rref(Mat::hstack({sub, candidates}, candidates.rows()));
  std::vector<std::size_t> out;
  for (auto p : r.pivots)
    if (p >= sub.cols()) out.push_back(p - sub.cols());
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw FieldMismatch("kron of matrices over different fields");
  return dispatch(a.field(), [&](auto ops) {
    using Ops = decltype(ops);
    Mat out = MatAccess::blank(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    auto& d = MatAccess::data<Ops>(out);
    const auto& x = MatAccess::data<Ops>(a);
    const auto& y = MatAccess::data<Ops>(b);
    std::size_t oc = out.cols();
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto& s = x[i * a.cols() + j];
        if (ops.is_zero(s)) continue;
        for (std::size_t k = 0; k < b.rows(); ++k)
          for (std::size_t l = 0; l < b.cols(); ++l)
            d[(i * b.rows() + k) * oc + j * b.cols() + l] = ops.mul(s, y[k * b.cols() + l]);
      }
    return out;
  });
}

Scalar trace(const Mat& m) {
  Scalar t(0);
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

Mat lincomb(const std::vector<Mat>& mats, const Mat& coeffs, std::size_t rows, std::size_t cols) {
  if (coeffs.rows() != mats.size()) throw InvalidParams("lincomb: coefficient count mismatch");
  return dispatch(coeffs.field(), [&](auto ops) {
    using Ops = decltype(ops);
    Mat out = MatAccess::blank(coeffs.field(), rows, cols);
    auto& d = MatAccess::data<Ops>(out);
    const auto& c = MatAccess::data<Ops>(coeffs);
    for (std::size_t i = 0; i < mats.size(); ++i) {
      if (ops.is_zero(c[i * coeffs.cols()])) continue;
      if (mats[i].rows() != rows || mats[i].cols() != cols) throw InvalidParams("lincomb: shape mismatch");
      if (mats[i].field() != coeffs.field()) throw FieldMismatch("lincomb over different fields");
      const auto& m = MatAccess::data<Ops>(mats[i]);
      for (std::size_t k = 0; k < d.size(); ++k)
        if (!ops.is_zero(m[k])) d[k] = ops.add(d[k], ops.mul(c[i * coeffs.cols()], m[k]));
    }
    return out;
  });
}

Mat flatten(const Mat& m) {
  return dispatch(m.field(), [&](auto ops) {
    using Ops = decltype(ops);
    Mat out = MatAccess::blank(m.field(), m.rows() * m.cols(), 1);
    MatAccess::data<Ops>(out) = MatAccess::data<Ops>(m);
    return out;
  });
}

Mat unflatten(const Mat& v, std::size_t rows, std::size_t cols) {
  if (v.rows() != rows * cols || v.cols() != 1) throw InvalidParams("unflatten: size mismatch");
  return dispatch(v.field(), [&](auto ops) {
    using Ops = decltype(ops);
    Mat out = MatAccess::blank(v.field(), rows, cols);
    MatAccess::data<Ops>(out) = MatAccess::data<Ops>(v);
    return out;
  });
}

Poly charpoly(const Mat& m) {
  // Hessenberg reduction followed by the standard determinant recurrence.
  std::size_t n = m.rows();
  if (n != m.cols()) throw InvalidParams("charpoly of non-square matrix");
  std::vector<std::vector<Scalar>> h(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = m(i, j);
  for (std::size_t c = 1; c + 1 < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!h[i][c - 1].is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    if (piv != c) {
      std::swap(h[piv], h[c]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][c]);
    }
    Scalar t = h[c][c - 1];
    for (std::size_t j = c + 1; j < n; ++j) {
      Scalar u = h[j][c - 1] / t;
      if (u.is_zero()) continue;
      for (std::size_t q = 0; q < n; ++q) h[j][q] -= u * h[c][q];
      for (std::size_t q = 0; q < n; ++q) h[q][c] += u * h[q][j];
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = {Scalar(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly cur(k + 1, Scalar(0));
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      cur[d + 1] += p[k - 1][d];
      cur[d] -= h[k - 1][k - 1] * p[k - 1][d];
    }
    Scalar t(1);
    for (std::size_t i = 1; i < k; ++i) {
      t *= h[k - i][k - i - 1];
      Scalar coef = t * h[k - i - 1][k - 1];
      for (std::size_t d = 0; d < p[k - i - 1].size(); ++d) cur[d] -= coef * p[k - i - 1][d];
    }
    p[k] = cur;
  }
  return p[n];
}

Scalar eval(const Poly& f, const Scalar& x) {
  Scalar acc(0);
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

namespace {

using IPoly = std::vector<std::int64_t>;

void trim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IPoly pmod(IPoly a, const IPoly& b, std::int64_t p) {
  trim(a);
  std::int64_t inv = mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    std::int64_t c = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

IPoly pmulmod(const IPoly& a, const IPoly& b, const IPoly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  IPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return pmod(r, m, p);
}

IPoly ppowmod(IPoly base, std::int64_t e, const IPoly& m, std::int64_t p) {
  IPoly result{1};
  base = pmod(base, m, p);
  while (e > 0) {
    if (e & 1) result = pmulmod(result, base, m, p);
    base = pmulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

IPoly pgcd(IPoly a, IPoly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    IPoly r = pmod(a, b, p);
    a = b;
    b = r;
  }
  if (!a.empty()) {
    std::int64_t inv = mod_inverse(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

IPoly pdiv(IPoly a, const IPoly& b, std::int64_t p) {
  trim(a);
  IPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  std::int64_t inv = mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    std::int64_t c = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return q;
}

// g is a product of distinct linear factors; split it by Cantor-Zassenhaus.
void split_linear(const IPoly& g, std::int64_t p, std::vector<std::int64_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back((p - g[0] * mod_inverse(g[1], p) % p) % p);
    return;
  }
  if (p == 2) {
    for (std::int64_t x = 0; x < 2; ++x) {
      std::int64_t v = 0;
      for (std::size_t i = g.size(); i-- > 0;) v = (v * x + g[i]) % 2;
      if (v == 0) out.push_back(x);
    }
    return;
  }
  for (std::int64_t a = 0; a < p; ++a) {
    IPoly h = ppowmod(IPoly{a, 1}, (p - 1) / 2, g, p);
    if (h.empty()) h = {0};
    h[0] = (h[0] - 1 + p) % p;
    IPoly d = pgcd(g, h, p);
    if (d.size() > 1 && d.size() < g.size()) {
      split_linear(d, p, out);
      split_linear(pdiv(g, d, p), p, out);
      return;
    }
  }
}

std::vector<Rational> rational_roots(const Poly& f) {
  using boost::multiprecision::cpp_int;
  std::vector<Rational> coeffs;
  for (const auto& c : f) coeffs.push_back(c.rational());
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::vector<Rational> out;
  if (coeffs.size() <= 1) return out;
  std::size_t low = 0;
  while (coeffs[low] == 0) ++low;
  if (low > 0) out.push_back(Rational(0));
  cpp_int l = 1;
  for (std::size_t i = low; i < coeffs.size(); ++i) {
    cpp_int d = boost::multiprecision::denominator(coeffs[i]);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  std::vector<cpp_int> ints;
  for (std::size_t i = low; i < coeffs.size(); ++i)
    ints.push_back(boost::multiprecision::numerator(Rational(coeffs[i] * l)));
  auto divisors = [](cpp_int v) {
    std::vector<cpp_int> ds;
    if (v < 0) v = -v;
    if (v > cpp_int(1000000000000LL)) return ds;  // too large to enumerate; caller tolerates missing roots
    for (cpp_int d = 1; d * d <= v; ++d)
      if (v % d == 0) {
        ds.push_back(d);
        if (d * d != v) ds.push_back(v / d);
      }
    return ds;
  };
  auto num = divisors(ints.front());
  auto den = divisors(ints.back());
  for (const auto& a : num)
    for (const auto& b : den)
      for (int s : {1, -1}) {
        Rational cand = Rational(a * s, b);
        if (std::find(out.begin(), out.end(), cand) != out.end()) continue;
        Rational acc = 0;
        for (std::size_t i = ints.size(); i-- > 0;) acc = acc * cand + Rational(ints[i]);
        if (acc == 0) out.push_back(cand);
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Scalar> roots_in_field(const Poly& f) {
  const Field& fld = current_field();
  std::vector<Scalar> out;
  if (fld.kind == FieldKind::Rational) {
    for (const auto& r : rational_roots(f)) out.push_back(Scalar::from_rational(r));
    return out;
  }
  std::int64_t p = fld.p;
  IPoly g;
  for (const auto& c : f) g.push_back(c.residue());
  trim(g);
  if (g.size() <= 1) return out;
  // gcd with x^p - x isolates the product of linear factors over F_p.
  IPoly xp = ppowmod(IPoly{0, 1}, p, g, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = (xp[1] - 1 + p) % p;
  trim(xp);
  IPoly lin = pgcd(g, xp, p);
  std::vector<std::int64_t> rs;
  split_linear(lin, p, rs);
  std::sort(rs.begin(), rs.end());
  for (auto r : rs) out.push_back(Scalar::from_residue(r, fld));
  return out;
}

}  // namespace ausglue
