#include "ausglue/fincat.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "ausglue/errors.hpp"

namespace ausglue {

namespace detail {

struct CatData {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> dims;
  std::vector<std::vector<std::string>> names;  // index x * n + y
  std::vector<std::vector<Mat>> lmul, rmul;     // index (x * n + y) * n + z
  Field field;

  std::once_flag rad_once;
  std::vector<Mat> rad, rad2;               // index x * n + y
  std::vector<std::vector<Scalar>> chi;     // per object, per basis of hom(x,x)
  std::vector<Generator> gens, gens_op;

  std::size_t n() const { return labels.size(); }
  std::size_t pair(int x, int y) const { return static_cast<std::size_t>(x) * n() + y; }
  std::size_t triple(int x, int y, int z) const { return (pair(x, y)) * n() + z; }
};

}  // namespace detail

namespace {

Mat empty_cols(std::size_t rows) { return Mat(rows, 0); }

void compute_radicals(detail::CatData& d) {
  std::size_t n = d.n();
  d.rad.assign(n * n, Mat());
  d.rad2.assign(n * n, Mat());
  d.chi.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    int e = d.dims[x][x];
    if (e == 0) throw InvalidParams("object " + d.labels[x] + " has no identity");
    if (Scalar(e).is_zero()) throw InvalidParams("endomorphism dimension divisible by the characteristic");
    Scalar inv_e = Scalar(e).inv();
    std::vector<Mat> cols;
    for (int b = 0; b < e; ++b) {
      Scalar c = trace(d.lmul[d.triple(x, x, x)][b]) * inv_e;
      d.chi[x].push_back(c);
      if (b == 0) continue;
      Mat v = Mat::unit(e, b);
      v.set(0, 0, v(0, 0) - c);
      cols.push_back(v);
    }
    d.rad[d.pair(x, x)] = cols.empty() ? empty_cols(e) : Mat::hstack(cols, e);
    for (std::size_t y = 0; y < n; ++y)
      if (y != x) d.rad[d.pair(x, y)] = Mat::identity(d.dims[x][y]);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      int dxy = d.dims[x][y];
      std::vector<Mat> prods;
      for (std::size_t z = 0; z < n; ++z) {
        const Mat& rf = d.rad[d.pair(x, z)];
        const Mat& rg = d.rad[d.pair(z, y)];
        if (rf.cols() == 0 || rg.cols() == 0) continue;
        const auto& lm = d.lmul[d.triple(x, z, y)];
        for (std::size_t j = 0; j < rg.cols(); ++j) {
          Mat g = rg.col(j);
          Mat l = lincomb(lm, g, dxy, d.dims[x][z]);
          prods.push_back(l * rf);
        }
      }
      Mat span = prods.empty() ? empty_cols(dxy) : image_basis(Mat::hstack(prods, dxy));
      d.rad2[d.pair(x, y)] = span;
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Mat& r = d.rad[d.pair(x, y)];
      if (r.cols() == 0) continue;
      for (auto j : extending_columns(d.rad2[d.pair(x, y)], r)) {
        d.gens.push_back({static_cast<int>(x), static_cast<int>(y), r.col(j)});
        d.gens_op.push_back({static_cast<int>(y), static_cast<int>(x), r.col(j)});
      }
    }
}

}  // namespace

FinCategory FinCategory::build(std::vector<std::string> labels, std::vector<std::vector<int>> dims,
                               const ComposeFn& compose, std::vector<std::vector<std::string>> basis_names) {
  auto d = std::make_shared<detail::CatData>();
  d->labels = std::move(labels);
  d->dims = std::move(dims);
  d->field = current_field();
  std::size_t n = d->n();
  if (d->dims.size() != n) throw InvalidParams("dimension table does not match the object count");
  d->names.assign(n * n, {});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      int dxy = d->dims[x][y];
      auto& nm = d->names[d->pair(x, y)];
      if (!basis_names.empty() && basis_names[d->pair(x, y)].size() == static_cast<std::size_t>(dxy)) {
        nm = basis_names[d->pair(x, y)];
      } else {
        for (int b = 0; b < dxy; ++b) nm.push_back("m" + std::to_string(b));
      }
    }
  d->lmul.assign(n * n * n, {});
  d->rmul.assign(n * n * n, {});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      int dxy = d->dims[x][y];
      for (std::size_t z = 0; z < n; ++z) {
        int dyz = d->dims[y][z], dxz = d->dims[x][z];
        auto& lm = d->lmul[d->triple(x, y, z)];
        auto& rm = d->rmul[d->triple(x, y, z)];
        lm.assign(dyz, Mat(dxz, dxy));
        rm.assign(dxy, Mat(dxz, dyz));
        if (dxz == 0) continue;
        for (int g = 0; g < dyz; ++g)
          for (int f = 0; f < dxy; ++f) {
            Mat v = compose(static_cast<int>(x), static_cast<int>(y), static_cast<int>(z), g, f);
            if (v.rows() != static_cast<std::size_t>(dxz) || v.cols() != 1)
              throw InvalidParams("composition returned a vector of the wrong size");
            lm[g].set_block(0, f, v);
            rm[f].set_block(0, g, v);
          }
      }
    }
  FinCategory c;
  c.d_ = d;
  return c;
}

std::size_t FinCategory::size() const { return d_ ? d_->n() : 0; }
const std::string& FinCategory::label(int x) const { return d_->labels[x]; }

int FinCategory::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (d_->labels[i] == label) return static_cast<int>(i);
  return -1;
}

int FinCategory::dim(int x, int y) const { return op_ ? d_->dims[y][x] : d_->dims[x][y]; }

std::size_t FinCategory::total_dim() const {
  std::size_t t = 0;
  for (const auto& row : d_->dims)
    for (int v : row) t += v;
  return t;
}

const std::string& FinCategory::basis_name(int x, int y, int b) const {
  return op_ ? d_->names[d_->pair(y, x)][b] : d_->names[d_->pair(x, y)][b];
}

const Field& FinCategory::field() const { return d_->field; }

FinCategory FinCategory::opposite() const {
  FinCategory c = *this;
  c.op_ = !op_;
  return c;
}

const Mat& FinCategory::left(int x, int y, int z, int g) const {
  return op_ ? d_->rmul[d_->triple(z, y, x)][g] : d_->lmul[d_->triple(x, y, z)][g];
}

const Mat& FinCategory::right(int x, int y, int z, int f) const {
  return op_ ? d_->lmul[d_->triple(z, y, x)][f] : d_->rmul[d_->triple(x, y, z)][f];
}

Mat FinCategory::left_by(int x, int y, int z, const Mat& g) const {
  const auto& mats = op_ ? d_->rmul[d_->triple(z, y, x)] : d_->lmul[d_->triple(x, y, z)];
  return lincomb(mats, g, dim(x, z), dim(x, y));
}

Mat FinCategory::right_by(int x, int y, int z, const Mat& f) const {
  const auto& mats = op_ ? d_->lmul[d_->triple(z, y, x)] : d_->rmul[d_->triple(x, y, z)];
  return lincomb(mats, f, dim(x, z), dim(y, z));
}

Mat FinCategory::compose(int x, int y, int z, const Mat& g, const Mat& f) const {
  return left_by(x, y, z, g) * f;
}

Mat FinCategory::identity(int x) const { return Mat::unit(dim(x, x), 0); }

Scalar FinCategory::character(int x, int b) const {
  std::call_once(d_->rad_once, [&] { compute_radicals(*d_); });
  return d_->chi[x][b];
}

Mat FinCategory::radical(int x, int y) const {
  std::call_once(d_->rad_once, [&] { compute_radicals(*d_); });
  return op_ ? d_->rad[d_->pair(y, x)] : d_->rad[d_->pair(x, y)];
}

Mat FinCategory::radical_squared(int x, int y) const {
  std::call_once(d_->rad_once, [&] { compute_radicals(*d_); });
  return op_ ? d_->rad2[d_->pair(y, x)] : d_->rad2[d_->pair(x, y)];
}

const std::vector<Generator>& FinCategory::generators() const {
  std::call_once(d_->rad_once, [&] { compute_radicals(*d_); });
  return op_ ? d_->gens_op : d_->gens;
}

std::vector<GabrielArrow> FinCategory::gabriel_quiver() const {
  std::map<std::pair<int, int>, int> mult;
  for (const auto& g : generators()) ++mult[{g.src, g.dst}];
  std::vector<GabrielArrow> out;
  for (const auto& [k, m] : mult) out.push_back({k.first, k.second, m});
  return out;
}

bool FinCategory::is_associative() const {
  int n = static_cast<int>(size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (dim(x, y) == 0) continue;
      if (!left(x, y, y, 0).is_identity()) return false;
      if (!right(x, x, y, 0).is_identity()) return false;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (dim(x, y) == 0) continue;
      for (int z = 0; z < n; ++z) {
        if (dim(y, z) == 0) continue;
        for (int w = 0; w < n; ++w) {
          if (dim(z, w) == 0 || dim(x, w) == 0) continue;
          for (int h = 0; h < dim(z, w); ++h) {
            const Mat& lh = left(x, z, w, h);
            const Mat& lh_y = left(y, z, w, h);
            for (int g = 0; g < dim(y, z); ++g) {
              Mat hg = lh_y.col(g);
              if (left_by(x, y, w, hg) != lh * left(x, y, z, g)) return false;
            }
          }
        }
      }
    }
  return true;
}

CatModule::CatModule(FinCategory cat, std::vector<int> dims, std::vector<std::vector<Mat>> act)
    : cat_(std::move(cat)), dims_(std::move(dims)), act_(std::move(act)) {
  std::size_t n = cat_.size();
  if (dims_.size() != n || act_.size() != n * n) throw InvalidParams("module data does not match its category");
}

int CatModule::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

const Mat& CatModule::action(int x, int y, int b) const { return act_[x * cat_.size() + y][b]; }

Mat CatModule::act_by(int x, int y, const Mat& coeffs) const {
  return lincomb(act_[x * cat_.size() + y], coeffs, dims_[y], dims_[x]);
}

bool CatModule::is_functorial() const {
  int n = static_cast<int>(cat_.size());
  for (int x = 0; x < n; ++x)
    if (dims_[x] > 0 && !action(x, x, 0).is_identity()) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int g = 0; g < cat_.dim(y, z); ++g)
          for (int f = 0; f < cat_.dim(x, y); ++f) {
            Mat gf = cat_.left(x, y, z, g).col(f);
            if (act_by(x, z, gf) != action(y, z, g) * action(x, y, f)) return false;
          }
  return true;
}

std::string CatModule::dim_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
  os << ")";
  return os.str();
}

bool ModuleMap::is_zero() const {
  return std::all_of(comp.begin(), comp.end(), [](const Mat& m) { return m.is_zero(); });
}

Mat ModuleMap::total() const { return Mat::direct_sum(comp); }

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
  ModuleMap r = *this;
  for (std::size_t i = 0; i < comp.size(); ++i) r.comp[i] += o.comp[i];
  return r;
}

ModuleMap ModuleMap::scaled(const Scalar& s) const {
  ModuleMap r = *this;
  for (auto& c : r.comp) c = c.scaled(s);
  return r;
}

Mat ModuleMap::flat() const {
  std::vector<Mat> parts;
  for (const auto& c : comp) parts.push_back(flatten(c));
  return parts.empty() ? Mat(0, 1) : Mat::vstack(parts, 1);
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap r;
  for (std::size_t i = 0; i < f.comp.size(); ++i) r.comp.push_back(g.comp[i] * f.comp[i]);
  return r;
}

ModuleMap identity_map(const CatModule& m) {
  ModuleMap r;
  for (int d : m.dims()) r.comp.push_back(Mat::identity(d));
  return r;
}

ModuleMap zero_map(const CatModule& m, const CatModule& n) {
  ModuleMap r;
  for (std::size_t x = 0; x < m.dims().size(); ++x) r.comp.push_back(Mat(n.dim(x), m.dim(x)));
  return r;
}

bool is_module_map(const CatModule& m, const CatModule& n, const ModuleMap& f) {
  const auto& c = m.category();
  int k = static_cast<int>(c.size());
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int b = 0; b < c.dim(x, y); ++b)
        if (n.action(x, y, b) * f.comp[x] != f.comp[y] * m.action(x, y, b)) return false;
  return true;
}

CatModule projective_module(const FinCategory& c, int x) {
  int n = static_cast<int>(c.size());
  std::vector<int> dims(n);
  for (int y = 0; y < n; ++y) dims[y] = c.dim(x, y);
  std::vector<std::vector<Mat>> act(n * n);
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z)
      for (int b = 0; b < c.dim(y, z); ++b) act[y * n + z].push_back(c.left(x, y, z, b));
  return CatModule(c, dims, act);
}

CatModule dual(const CatModule& m) {
  FinCategory op = m.category().opposite();
  int n = static_cast<int>(op.size());
  std::vector<std::vector<Mat>> act(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int b = 0; b < op.dim(x, y); ++b) act[x * n + y].push_back(m.action(y, x, b).transpose());
  return CatModule(op, m.dims(), act);
}

ModuleMap dual(const ModuleMap& f) {
  ModuleMap r;
  for (const auto& c : f.comp) r.comp.push_back(c.transpose());
  return r;
}

CatModule injective_module(const FinCategory& c, int x) { return dual(projective_module(c.opposite(), x)); }

CatModule simple_module(const FinCategory& c, int x) {
  int n = static_cast<int>(c.size());
  std::vector<int> dims(n, 0);
  dims[x] = 1;
  std::vector<std::vector<Mat>> act(n * n);
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z)
      for (int b = 0; b < c.dim(y, z); ++b) {
        Mat a(dims[z], dims[y]);
        if (y == x && z == x) a.set(0, 0, c.character(x, b));
        act[y * n + z].push_back(a);
      }
  return CatModule(c, dims, act);
}

CatModule zero_module(const FinCategory& c) {
  int n = static_cast<int>(c.size());
  std::vector<std::vector<Mat>> act(n * n);
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) act[y * n + z].assign(c.dim(y, z), Mat(0, 0));
  return CatModule(c, std::vector<int>(n, 0), act);
}

std::vector<ModuleMap> hom_basis(const CatModule& m, const CatModule& n) {
  const auto& c = m.category();
  int k = static_cast<int>(c.size());
  std::vector<std::size_t> off(k + 1, 0);
  for (int x = 0; x < k; ++x) off[x + 1] = off[x] + static_cast<std::size_t>(n.dim(x)) * m.dim(x);
  std::size_t unknowns = off[k];
  if (unknowns == 0) return {};
  std::vector<Mat> rows;
  std::size_t total_rows = 0;
  for (const auto& g : c.generators()) {
    int x = g.src, y = g.dst;
    std::size_t r = static_cast<std::size_t>(n.dim(y)) * m.dim(x);
    if (r == 0) continue;
    Mat eq(r, unknowns);
    Mat ng = n.act_by(x, y, g.vec);
    Mat mg = m.act_by(x, y, g.vec);
    Mat a = kron(ng, Mat::identity(m.dim(x)));
    Mat b = kron(Mat::identity(n.dim(y)), mg.transpose());
    if (x == y) {
      eq.set_block(0, off[x], a - b);
    } else {
      if (a.cols() > 0) eq.set_block(0, off[x], a);
      if (b.cols() > 0) eq.set_block(0, off[y], -b);
    }
    rows.push_back(eq);
    total_rows += r;
  }
  Mat sys = rows.empty() ? Mat(0, unknowns) : Mat::vstack(rows, unknowns);
  Mat ker = rows.empty() ? Mat::identity(unknowns) : kernel_basis(sys);
  std::vector<ModuleMap> out;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    ModuleMap f;
    Mat v = ker.col(j);
    for (int x = 0; x < k; ++x)
      f.comp.push_back(unflatten(v.block(off[x], 0, off[x + 1] - off[x], 1), n.dim(x), m.dim(x)));
    out.push_back(f);
  }
  return out;
}

int hom_dim(const CatModule& m, const CatModule& n) { return static_cast<int>(hom_basis(m, n).size()); }

namespace {

Mat safe_left_inverse(const Mat& b) {
  if (b.cols() == 0) return Mat(0, b.rows());
  return left_inverse(b);
}

}  // namespace

SubModule submodule(const CatModule& m, const std::vector<Mat>& bases) {
  const auto& c = m.category();
  int n = static_cast<int>(c.size());
  std::vector<Mat> linv(n);
  std::vector<int> dims(n);
  for (int x = 0; x < n; ++x) {
    linv[x] = safe_left_inverse(bases[x]);
    dims[x] = static_cast<int>(bases[x].cols());
  }
  std::vector<std::vector<Mat>> act(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int b = 0; b < c.dim(x, y); ++b) {
        if (dims[x] == 0 || dims[y] == 0) {
          act[x * n + y].push_back(Mat(dims[y], dims[x]));
          continue;
        }
        act[x * n + y].push_back(linv[y] * (m.action(x, y, b) * bases[x]));
      }
  SubModule s{CatModule(c, dims, act), ModuleMap{bases}};
  return s;
}

QuotientModule quotient(const CatModule& m, const std::vector<Mat>& bases) {
  const auto& c = m.category();
  int n = static_cast<int>(c.size());
  std::vector<Mat> proj(n), sect(n);
  std::vector<int> dims(n);
  for (int x = 0; x < n; ++x) {
    int d = m.dim(x);
    auto units = complement_units(bases[x], d);
    dims[x] = static_cast<int>(units.size());
    Mat s = Mat::identity(d).select_cols(units);
    sect[x] = s;
    if (d == 0) {
      proj[x] = Mat(0, 0);
      continue;
    }
    Mat full = Mat::hstack({bases[x], s}, d);
    proj[x] = inverse(full).block(bases[x].cols(), 0, units.size(), d);
  }
  std::vector<std::vector<Mat>> act(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int b = 0; b < c.dim(x, y); ++b) {
        if (dims[x] == 0 || dims[y] == 0) {
          act[x * n + y].push_back(Mat(dims[y], dims[x]));
          continue;
        }
        act[x * n + y].push_back(proj[y] * (m.action(x, y, b) * sect[x]));
      }
  return QuotientModule{CatModule(c, dims, act), ModuleMap{proj}};
}

SubModule kernel(const CatModule& m, const ModuleMap& f) {
  std::vector<Mat> bases;
  for (std::size_t x = 0; x < f.comp.size(); ++x) {
    const Mat& fx = f.comp[x];
    if (m.dim(x) == 0)
      bases.push_back(Mat(0, 0));
    else if (fx.rows() == 0)
      bases.push_back(Mat::identity(m.dim(x)));
    else
      bases.push_back(kernel_basis(fx));
  }
  return submodule(m, bases);
}

SubModule image(const CatModule& n, const ModuleMap& f) {
  std::vector<Mat> bases;
  for (std::size_t x = 0; x < f.comp.size(); ++x) {
    const Mat& fx = f.comp[x];
    bases.push_back(fx.cols() == 0 ? Mat(n.dim(x), 0) : image_basis(fx));
  }
  return submodule(n, bases);
}

QuotientModule cokernel(const CatModule& n, const ModuleMap& f) {
  std::vector<Mat> bases;
  for (std::size_t x = 0; x < f.comp.size(); ++x) {
    const Mat& fx = f.comp[x];
    bases.push_back(fx.cols() == 0 ? Mat(n.dim(x), 0) : image_basis(fx));
  }
  return quotient(n, bases);
}

DirectSum direct_sum(const std::vector<CatModule>& parts) {
  if (parts.empty()) throw InvalidParams("direct sum of an empty list");
  const auto& c = parts[0].category();
  int n = static_cast<int>(c.size());
  std::vector<int> dims(n, 0);
  for (const auto& p : parts)
    for (int x = 0; x < n; ++x) dims[x] += p.dim(x);
  std::vector<std::vector<Mat>> act(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int b = 0; b < c.dim(x, y); ++b) {
        std::vector<Mat> blocks;
        for (const auto& p : parts) blocks.push_back(p.action(x, y, b));
        act[x * n + y].push_back(Mat::direct_sum(blocks));
      }
  DirectSum out{CatModule(c, dims, act), {}, {}};
  std::vector<int> offs(n, 0);
  for (const auto& p : parts) {
    ModuleMap inj, pr;
    for (int x = 0; x < n; ++x) {
      Mat i(dims[x], p.dim(x));
      Mat q(p.dim(x), dims[x]);
      for (int t = 0; t < p.dim(x); ++t) {
        i.set(offs[x] + t, t, Scalar(1));
        q.set(t, offs[x] + t, Scalar(1));
      }
      inj.comp.push_back(i);
      pr.comp.push_back(q);
      offs[x] += p.dim(x);
    }
    out.injections.push_back(inj);
    out.projections.push_back(pr);
  }
  return out;
}

std::vector<Mat> radical_spaces(const CatModule& m) {
  const auto& c = m.category();
  int n = static_cast<int>(c.size());
  std::vector<std::vector<Mat>> imgs(n);
  for (const auto& g : c.generators()) {
    if (m.dim(g.src) == 0 || m.dim(g.dst) == 0) continue;
    imgs[g.dst].push_back(m.act_by(g.src, g.dst, g.vec));
  }
  std::vector<Mat> out(n);
  for (int y = 0; y < n; ++y) {
    if (imgs[y].empty())
      out[y] = Mat(m.dim(y), 0);
    else
      out[y] = image_basis(Mat::hstack(imgs[y], m.dim(y)));
  }
  return out;
}

std::vector<Mat> top_generators(const CatModule& m) {
  auto rad = radical_spaces(m);
  std::vector<Mat> out;
  for (std::size_t x = 0; x < rad.size(); ++x) {
    int d = m.dim(static_cast<int>(x));
    Mat id = Mat::identity(d);
    out.push_back(id.select_cols(extending_columns(rad[x], id)));
  }
  return out;
}

std::vector<int> top_multiplicities(const CatModule& m) {
  auto rad = radical_spaces(m);
  std::vector<int> out;
  for (std::size_t x = 0; x < rad.size(); ++x) out.push_back(m.dim(static_cast<int>(x)) - static_cast<int>(rad[x].cols()));
  return out;
}

std::vector<int> socle_multiplicities(const CatModule& m) {
  const auto& c = m.category();
  int n = static_cast<int>(c.size());
  std::vector<std::vector<Mat>> maps(n);
  for (const auto& g : c.generators()) {
    if (m.dim(g.src) == 0 || m.dim(g.dst) == 0) continue;
    maps[g.src].push_back(m.act_by(g.src, g.dst, g.vec));
  }
  std::vector<int> out(n);
  for (int x = 0; x < n; ++x) {
    if (maps[x].empty()) {
      out[x] = m.dim(x);
      continue;
    }
    Mat all = Mat::vstack(maps[x], m.dim(x));
    out[x] = m.dim(x) - static_cast<int>(rank(all));
  }
  return out;
}

namespace {

int gram_rank(const std::vector<ModuleMap>& e) {
  std::size_t k = e.size();
  Mat gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Scalar t(0);
      for (std::size_t x = 0; x < e[i].comp.size(); ++x)
        if (e[i].comp[x].rows() > 0) t += trace(e[i].comp[x] * e[j].comp[x]);
      gram.set(i, j, t);
      gram.set(j, i, t);
    }
  return static_cast<int>(rank(gram));
}

Mat matrix_power(Mat a, std::size_t e) {
  Mat r = Mat::identity(a.rows());
  while (e > 0) {
    if (e & 1) r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

// Fitting decomposition along phi - lambda; returns false when it is trivial.
bool fitting_split(const CatModule& m, const ModuleMap& phi, std::vector<Mat>& ker, std::vector<Mat>& img) {
  Mat total = phi.total();
  auto roots = roots_in_field(charpoly(total));
  int maxd = *std::max_element(m.dims().begin(), m.dims().end());
  for (const auto& lam : roots) {
    ker.clear();
    img.clear();
    int kd = 0, id = 0;
    for (std::size_t x = 0; x < phi.comp.size(); ++x) {
      int d = m.dim(static_cast<int>(x));
      if (d == 0) {
        ker.push_back(Mat(0, 0));
        img.push_back(Mat(0, 0));
        continue;
      }
      Mat psi = phi.comp[x] - Mat::identity(d).scaled(lam);
      Mat p = matrix_power(psi, static_cast<std::size_t>(maxd));
      Mat k = kernel_basis(p);
      Mat im = image_basis(p);
      kd += static_cast<int>(k.cols());
      id += static_cast<int>(im.cols());
      ker.push_back(k.cols() == 0 ? Mat(d, 0) : k);
      img.push_back(im.cols() == 0 ? Mat(d, 0) : im);
    }
    if (kd > 0 && id > 0) return true;
  }
  return false;
}

void decompose_into(const CatModule& m, std::vector<CatModule>& out) {
  if (m.total_dim() == 0) return;
  auto e = hom_basis(m, m);
  if (e.size() <= 1 || gram_rank(e) == 1) {
    out.push_back(m);
    return;
  }
  std::vector<Mat> ker, img;
  auto try_split = [&](const ModuleMap& phi) {
    if (!fitting_split(m, phi, ker, img)) return false;
    auto a = submodule(m, ker).module;
    auto b = submodule(m, img).module;
    decompose_into(a, out);
    decompose_into(b, out);
    return true;
  };
  for (const auto& phi : e)
    if (try_split(phi)) return;
  std::mt19937 rng(static_cast<unsigned>(m.total_dim() * 7919 + e.size()));
  std::uniform_int_distribution<int> coef(-7, 7);
  for (int attempt = 0; attempt < 200; ++attempt) {
    ModuleMap phi = e[0].scaled(Scalar(coef(rng)));
    for (std::size_t i = 1; i < e.size(); ++i) phi = phi + e[i].scaled(Scalar(coef(rng)));
    if (try_split(phi)) return;
  }
  throw DecompositionFailed("no splitting endomorphism found for a module of dimension " + m.dim_string());
}

}  // namespace

int end_semisimple_rank(const CatModule& m) {
  auto e = hom_basis(m, m);
  if (e.empty()) return 0;
  return gram_rank(e);
}

bool is_indecomposable(const CatModule& m) { return m.total_dim() > 0 && end_semisimple_rank(m) == 1; }

std::vector<CatModule> decompose(const CatModule& m) {
  std::vector<CatModule> out;
  decompose_into(m, out);
  return out;
}

bool is_isomorphic(const CatModule& m, const CatModule& n) {
  if (m.dims() != n.dims()) return false;
  if (m.total_dim() == 0) return true;
  auto h = hom_basis(m, n);
  if (h.empty()) return false;
  std::mt19937 rng(static_cast<unsigned>(m.total_dim() * 104729 + h.size()));
  std::uniform_int_distribution<int> coef(1, 30000);
  for (int attempt = 0; attempt < 4; ++attempt) {
    ModuleMap f = h[0].scaled(Scalar(coef(rng)));
    for (std::size_t i = 1; i < h.size(); ++i) f = f + h[i].scaled(Scalar(coef(rng)));
    if (is_invertible(f.total())) return true;
  }
  return false;
}

int find_isomorphic(const std::vector<CatModule>& list, const CatModule& m) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (is_isomorphic(list[i], m)) return static_cast<int>(i);
  return -1;
}

bool is_projective(const CatModule& m) {
  auto top = top_multiplicities(m);
  const auto& c = m.category();
  int n = static_cast<int>(c.size());
  for (int y = 0; y < n; ++y) {
    int d = 0;
    for (int x = 0; x < n; ++x) d += top[x] * c.dim(x, y);
    if (d != m.dim(y)) return false;
  }
  return true;
}

bool is_injective(const CatModule& m) { return is_projective(dual(m)); }

FinCategory category_from_presentation(const BoundPresentation& p, int max_len) {
  const Quiver& q = p.quiver();
  int n = static_cast<int>(q.size());
  using Path = std::vector<int>;
  // paths[x][y]: all paths x -> y up to the current length, by length then arrow order.
  std::vector<std::vector<std::vector<Path>>> paths(n, std::vector<std::vector<Path>>(n));
  std::vector<std::vector<std::map<Path, int>>> index(n, std::vector<std::map<Path, int>>(n));
  auto add_path = [&](int x, int y, const Path& path) {
    index[x][y][path] = static_cast<int>(paths[x][y].size());
    paths[x][y].push_back(path);
  };
  std::vector<std::pair<int, Path>> frontier;
  for (int x = 0; x < n; ++x) {
    add_path(x, x, {});
    frontier.push_back({x, {}});
  }
  auto end_of = [&](int x, const Path& path) { return path.empty() ? x : q.arrows()[path.back()].dst; };
  std::size_t max_rel = 0;
  for (const auto& r : p.relations())
    for (const auto& t : r.terms) max_rel = std::max(max_rel, t.path.size());

  // Ideal generators p * r * q restricted to paths of length <= L.
  auto ideal_spans = [&](int L) {
    std::vector<std::vector<std::vector<Mat>>> gens(n, std::vector<std::vector<Mat>>(n));
    for (const auto& r : p.relations()) {
      int s = p.path_source(r.terms[0].path), t = p.path_target(r.terms[0].path);
      std::size_t longest = 0;
      for (const auto& term : r.terms) longest = std::max(longest, term.path.size());
      for (int x = 0; x < n; ++x)
        for (const auto& pre : paths[x][s])
          for (int y = 0; y < n; ++y)
            for (const auto& post : paths[t][y]) {
              if (pre.size() + longest + post.size() > static_cast<std::size_t>(L)) continue;
              Mat v(paths[x][y].size(), 1);
              for (const auto& term : r.terms) {
                Path full = pre;
                full.insert(full.end(), term.path.begin(), term.path.end());
                full.insert(full.end(), post.begin(), post.end());
                int idx = index[x][y].at(full);
                v.add_to(idx, 0, Scalar::from_rational(term.coeff));
              }
              gens[x][y].push_back(v);
            }
    }
    return gens;
  };

  int L = 0;
  std::vector<std::vector<std::vector<Mat>>> ideal;
  while (true) {
    ++L;
    if (L > max_len) throw InfiniteDimensional("path classes do not stabilise below length " + std::to_string(max_len));
    std::vector<std::pair<int, Path>> next;
    for (const auto& [x, path] : frontier) {
      int e = end_of(x, path);
      for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        if (q.arrows()[a].src != e) continue;
        Path np = path;
        np.push_back(static_cast<int>(a));
        add_path(x, q.arrows()[a].dst, np);
        next.push_back({x, np});
      }
    }
    frontier = next;
    if (frontier.empty()) {
      ideal = ideal_spans(L);
      break;
    }
    if (static_cast<std::size_t>(L) < max_rel) continue;
    ideal = ideal_spans(L);
    bool all_zero = true;
    for (const auto& [x, path] : frontier) {
      int y = end_of(x, path);
      std::size_t np = paths[x][y].size();
      Mat span = ideal[x][y].empty() ? Mat(np, 0) : Mat::hstack(ideal[x][y], np);
      if (!in_span(span, Mat::unit(np, index[x][y].at(path)))) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) break;
  }

  // Basis paths and reduction matrices per pair.
  std::vector<std::vector<std::vector<int>>> basis(n, std::vector<std::vector<int>>(n));
  std::vector<std::vector<Mat>> reduce(n, std::vector<Mat>(n));
  std::vector<std::vector<int>> dims(n, std::vector<int>(n, 0));
  std::vector<std::vector<std::string>> names(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::size_t np = paths[x][y].size();
      if (np == 0) {
        reduce[x][y] = Mat(0, 0);
        continue;
      }
      Mat ib = ideal[x][y].empty() ? Mat(np, 0) : image_basis(Mat::hstack(ideal[x][y], np));
      Mat id = Mat::identity(np);
      auto chosen = extending_columns(ib, id);
      for (auto c : chosen) basis[x][y].push_back(static_cast<int>(c));
      dims[x][y] = static_cast<int>(chosen.size());
      if (chosen.empty()) {
        reduce[x][y] = Mat(0, np);
        continue;
      }
      Mat full = Mat::hstack({id.select_cols(chosen), ib}, np);
      reduce[x][y] = inverse(full).block(0, 0, chosen.size(), np);
      for (auto c : chosen) {
        const Path& path = paths[x][y][c];
        names[x * n + y].push_back(path.empty() ? "e_" + q.vertices()[x] : p.path_string(path));
      }
    }
  for (int x = 0; x < n; ++x)
    if (dims[x][x] == 0 || basis[x][x][0] != 0)
      throw InvalidParams("trivial path at " + q.vertices()[x] + " lies in the ideal");

  auto compose = [&](int x, int y, int z, int g, int f) {
    const Path& pf = paths[x][y][basis[x][y][f]];
    const Path& pg = paths[y][z][basis[y][z][g]];
    Path full = pf;
    full.insert(full.end(), pg.begin(), pg.end());
    auto it = index[x][z].find(full);
    if (it == index[x][z].end()) return Mat(dims[x][z], 1);
    return reduce[x][z].col(it->second);
  };
  return FinCategory::build(q.vertices(), dims, compose, names);
}

FinCategory full_subcategory(const FinCategory& c, const std::vector<int>& objs) {
  if (objs.empty()) throw InvalidParams("full subcategory on no objects");
  int m = static_cast<int>(objs.size());
  std::vector<std::string> labels;
  std::vector<std::vector<int>> dims(m, std::vector<int>(m));
  std::vector<std::vector<std::string>> names(m * m);
  for (int i = 0; i < m; ++i) {
    labels.push_back(c.label(objs[i]));
    for (int j = 0; j < m; ++j) {
      dims[i][j] = c.dim(objs[i], objs[j]);
      for (int b = 0; b < dims[i][j]; ++b) names[i * m + j].push_back(c.basis_name(objs[i], objs[j], b));
    }
  }
  auto compose = [&](int x, int y, int z, int g, int f) {
    return c.left(objs[x], objs[y], objs[z], g).col(f);
  };
  return FinCategory::build(labels, dims, compose, names);
}

Mat ModuleCategory::coordinates(int x, int y, const ModuleMap& f) const {
  if (coord[x][y].rows() == 0) return Mat(0, 1);
  return coord[x][y] * f.flat();
}

ModuleMap ModuleCategory::map_of(int x, int y, const Mat& coords) const {
  ModuleMap f = zero_map(objects[x], objects[y]);
  for (std::size_t b = 0; b < basis[x][y].size(); ++b) {
    Scalar c = coords(b, 0);
    if (!c.is_zero()) f = f + basis[x][y][b].scaled(c);
  }
  return f;
}

ModuleCategory module_category(const std::vector<CatModule>& mods, const std::vector<std::string>& labels) {
  int n = static_cast<int>(mods.size());
  ModuleCategory mc;
  mc.objects = mods;
  mc.basis.assign(n, std::vector<std::vector<ModuleMap>>(n));
  mc.coord.assign(n, std::vector<Mat>(n));
  std::vector<std::vector<int>> dims(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto b = hom_basis(mods[x], mods[y]);
      if (x == y) {
        ModuleMap id = identity_map(mods[x]);
        std::vector<Mat> cols;
        for (const auto& f : b) cols.push_back(f.flat());
        Mat flat_id = id.flat();
        std::vector<ModuleMap> nb{id};
        if (!cols.empty()) {
          Mat cand = Mat::hstack(cols, flat_id.rows());
          for (auto j : extending_columns(flat_id, cand)) nb.push_back(b[j]);
        }
        b = nb;
      }
      std::size_t len = 0;
      for (int t = 0; t < static_cast<int>(mods[x].dims().size()); ++t)
        len += static_cast<std::size_t>(mods[x].dim(t)) * mods[y].dim(t);
      dims[x][y] = static_cast<int>(b.size());
      if (b.empty()) {
        mc.coord[x][y] = Mat(0, len);
      } else {
        std::vector<Mat> cols;
        for (const auto& f : b) cols.push_back(f.flat());
        mc.coord[x][y] = left_inverse(Mat::hstack(cols, len));
      }
      mc.basis[x][y] = b;
    }
  auto comp = [&](int x, int y, int z, int g, int f) {
    return mc.coordinates(x, z, compose(mc.basis[y][z][g], mc.basis[x][y][f]));
  };
  mc.cat = FinCategory::build(labels, dims, comp);
  return mc;
}

}  // namespace ausglue
