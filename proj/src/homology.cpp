#include "ausglue/homology.hpp"

#include <algorithm>

#include "ausglue/errors.hpp"

namespace ausglue {

std::string dim_string(int d) { return d == kInfinite ? "inf" : std::to_string(d); }

CatModule projective_sum(const FinCategory& c, const std::vector<int>& summands) {
  if (summands.empty()) return zero_module(c);
  std::vector<CatModule> parts;
  for (int x : summands) parts.push_back(projective_module(c, x));
  if (parts.size() == 1) return parts[0];
  return direct_sum(parts).module;
}

ModuleMap map_from_projective(const FinCategory& c, const std::vector<int>& summands, const CatModule& y,
                              const std::vector<Mat>& elems) {
  int n = static_cast<int>(c.size());
  ModuleMap f;
  for (int z = 0; z < n; ++z) {
    std::size_t cols = 0;
    for (int x : summands) cols += c.dim(x, z);
    Mat m(y.dim(z), cols);
    std::size_t off = 0;
    for (std::size_t i = 0; i < summands.size(); ++i) {
      int x = summands[i];
      if (y.dim(z) > 0 && y.dim(x) > 0)
        for (int b = 0; b < c.dim(x, z); ++b) m.set_block(0, off + b, y.action(x, z, b) * elems[i]);
      off += c.dim(x, z);
    }
    f.comp.push_back(m);
  }
  return f;
}

std::size_t summand_offset(const FinCategory& c, const std::vector<int>& summands, std::size_t i, int z) {
  std::size_t off = 0;
  for (std::size_t t = 0; t < i; ++t) off += c.dim(summands[t], z);
  return off;
}

int default_max_len(const FinCategory& c) { return static_cast<int>(c.total_dim()) + 2; }

namespace {

// Solves a u = b, allowing empty spaces on either side.
Mat solve_any(const Mat& a, const Mat& b) {
  if (a.cols() == 0) {
    if (!b.is_zero()) throw NoSolution("target is not in the image");
    return Mat(0, 1);
  }
  if (a.rows() == 0) return Mat(a.cols(), 1);
  return solve(a, b);
}

std::vector<Mat> socle_spaces(const CatModule& m) {
  const auto& c = m.category();
  int n = static_cast<int>(c.size());
  std::vector<std::vector<Mat>> maps(n);
  for (const auto& g : c.generators()) {
    if (m.dim(g.src) == 0 || m.dim(g.dst) == 0) continue;
    maps[g.src].push_back(m.act_by(g.src, g.dst, g.vec));
  }
  std::vector<Mat> out(n);
  for (int x = 0; x < n; ++x) {
    if (maps[x].empty())
      out[x] = Mat::identity(m.dim(x));
    else
      out[x] = kernel_basis(Mat::vstack(maps[x], m.dim(x)));
  }
  return out;
}

bool columns_in_span(const Mat& basis, const Mat& cols) {
  for (std::size_t j = 0; j < cols.cols(); ++j)
    if (!in_span(basis, cols.col(j))) return false;
  return true;
}

}  // namespace

Resolution min_proj_resolution(const CatModule& m, int max_len) {
  if (max_len < 0) throw InvalidParams("max_len must be non-negative");
  const auto& c = m.category();
  int n = static_cast<int>(c.size());
  Resolution r;
  r.direction = Direction::Projective;
  r.module = m;
  CatModule ambient = m;
  CatModule k = m;
  std::vector<Mat> embed;
  for (int x = 0; x < n; ++x) embed.push_back(Mat::identity(m.dim(x)));
  for (int deg = 0; deg <= max_len + 1; ++deg) {
    if (k.total_dim() == 0) return r;
    if (deg == max_len + 1) {
      r.truncated = true;
      return r;
    }
    auto tops = top_generators(k);
    std::vector<int> summands;
    std::vector<Mat> elems;
    for (int x = 0; x < n; ++x)
      for (std::size_t j = 0; j < tops[x].cols(); ++j) {
        summands.push_back(x);
        elems.push_back(embed[x] * tops[x].col(j));
      }
    CatModule p = projective_sum(c, summands);
    ModuleMap d = map_from_projective(c, summands, ambient, elems);
    r.terms.push_back(p);
    r.summands.push_back(summands);
    r.differentials.push_back(d);
    r.elements.push_back(elems);
    SubModule ker = kernel(p, d);
    k = ker.module;
    embed = ker.inclusion.comp;
    ambient = p;
  }
  return r;
}

Resolution min_proj_resolution(const CatModule& m) {
  return min_proj_resolution(m, default_max_len(m.category()));
}

Resolution min_inj_resolution(const CatModule& m, int max_len) {
  Resolution p = min_proj_resolution(dual(m), max_len);
  Resolution r;
  r.direction = Direction::Injective;
  r.module = m;
  r.truncated = p.truncated;
  r.summands = p.summands;
  for (const auto& t : p.terms) r.terms.push_back(dual(t));
  for (const auto& d : p.differentials) r.differentials.push_back(dual(d));
  return r;
}

Resolution min_inj_resolution(const CatModule& m) {
  return min_inj_resolution(m, default_max_len(m.category()));
}

bool is_exact_resolution(const Resolution& r) {
  const auto& c = r.module.category();
  int n = static_cast<int>(c.size());
  std::size_t len = r.terms.size();
  if (len == 0) return r.module.total_dim() == 0;
  // Chain of spaces in order: for projective M <- P_0 <- P_1 ..., maps go
  // from higher to lower index; for injective M -> I^0 -> I^1 ...
  for (int z = 0; z < n; ++z) {
    std::vector<Mat> maps;  // maps[i] : V_i -> V_{i+1} in the injective direction
    std::vector<int> dims;
    if (r.direction == Direction::Injective) {
      dims.push_back(r.module.dim(z));
      for (const auto& t : r.terms) dims.push_back(t.dim(z));
      for (const auto& d : r.differentials) maps.push_back(d.comp[z]);
    } else {
      for (auto it = r.terms.rbegin(); it != r.terms.rend(); ++it) dims.push_back(it->dim(z));
      dims.push_back(r.module.dim(z));
      for (auto it = r.differentials.rbegin(); it != r.differentials.rend(); ++it) maps.push_back(it->comp[z]);
    }
    // 0 -> V_0 -> V_1 -> ... -> V_last -> 0 must be exact, except that for a
    // truncated resolution the leftmost end is not checked.
    std::vector<int> ranks;
    for (const auto& m : maps) ranks.push_back(m.rows() == 0 || m.cols() == 0 ? 0 : static_cast<int>(rank(m)));
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
      if (maps[i].rows() > 0 && maps[i].cols() > 0 && maps[i + 1].rows() > 0 && !(maps[i + 1] * maps[i]).is_zero())
        return false;
    }
    for (std::size_t v = 0; v < dims.size(); ++v) {
      int in = v == 0 ? 0 : ranks[v - 1];
      int out = v + 1 < dims.size() ? ranks[v] : 0;
      bool open_end = r.truncated && ((r.direction == Direction::Projective && v == 0) ||
                                      (r.direction == Direction::Injective && v + 1 == dims.size()));
      if (open_end) continue;
      if (dims[v] - out != in) return false;
    }
  }
  return true;
}

bool is_minimal_resolution(const Resolution& r) {
  if (r.direction == Direction::Projective) {
    for (std::size_t k = 1; k < r.terms.size(); ++k) {
      auto rad = radical_spaces(r.terms[k - 1]);
      for (std::size_t z = 0; z < rad.size(); ++z)
        if (!columns_in_span(rad[z], r.differentials[k].comp[z])) return false;
    }
    return true;
  }
  for (std::size_t k = 1; k < r.terms.size(); ++k) {
    auto soc = socle_spaces(r.terms[k - 1]);
    for (std::size_t z = 0; z < soc.size(); ++z) {
      const Mat& d = r.differentials[k].comp[z];
      if (d.rows() == 0 || soc[z].cols() == 0) continue;
      if (!(d * soc[z]).is_zero()) return false;
    }
  }
  return true;
}

int pdim(const CatModule& m, int max_len) {
  Resolution r = min_proj_resolution(m, max_len);
  if (r.truncated) throw Truncated("projective resolution longer than " + std::to_string(max_len));
  return r.length();
}

int pdim(const CatModule& m) { return pdim(m, default_max_len(m.category())); }

int idim(const CatModule& m, int max_len) { return pdim(dual(m), max_len); }

int idim(const CatModule& m) { return idim(m, default_max_len(m.category())); }

int gldim(const FinCategory& c) {
  int g = 0;
  for (int x = 0; x < static_cast<int>(c.size()); ++x) g = std::max(g, pdim(simple_module(c, x)));
  return g;
}

int domdim_module(const CatModule& m, int max_len) {
  const auto& c = m.category();
  std::vector<int> proj_inj(c.size(), -1);
  auto is_pi = [&](int x) {
    if (proj_inj[x] < 0) proj_inj[x] = is_projective(injective_module(c, x)) ? 1 : 0;
    return proj_inj[x] == 1;
  };
  Resolution r = min_inj_resolution(m, max_len);
  for (std::size_t k = 0; k < r.summands.size(); ++k)
    for (int x : r.summands[k])
      if (!is_pi(x)) return static_cast<int>(k);
  if (r.truncated) throw Truncated("injective coresolution longer than " + std::to_string(max_len));
  return kInfinite;
}

int domdim(const FinCategory& c) {
  int best = kInfinite;
  int len = default_max_len(c);
  for (int x = 0; x < static_cast<int>(c.size()); ++x) best = std::min(best, domdim_module(projective_module(c, x), len));
  return best;
}

namespace {

// The cochain map Hom(P_{k-1}, Y) -> Hom(P_k, Y) in cochain coordinates.
Mat coboundary_matrix(const Resolution& r, const CatModule& y, int k) {
  const auto& c = y.category();
  auto cochain_len = [&](int deg) {
    std::size_t len = 0;
    if (deg >= 0 && deg <= r.length())
      for (int x : r.summands[deg]) len += y.dim(x);
    return len;
  };
  std::size_t rows = cochain_len(k), cols = cochain_len(k - 1);
  Mat m(rows, cols);
  if (rows == 0 || cols == 0) return m;
  const auto& prev = r.summands[k - 1];
  const auto& cur = r.summands[k];
  std::size_t ro = 0;
  for (std::size_t j = 0; j < cur.size(); ++j) {
    int xj = cur[j];
    std::size_t co = 0;
    for (std::size_t i = 0; i < prev.size(); ++i) {
      int xi = prev[i];
      if (y.dim(xj) > 0 && y.dim(xi) > 0) {
        std::size_t off = summand_offset(c, prev, i, xj);
        Mat u = r.elements[k][j].block(off, 0, c.dim(xi, xj), 1);
        m.set_block(ro, co, y.act_by(xi, xj, u));
      }
      co += y.dim(xi);
    }
    ro += y.dim(xj);
  }
  return m;
}

}  // namespace

std::size_t ExtSpace::cochain_len() const { return cocycles.rows(); }

bool ExtSpace::is_cocycle(const Mat& cochain) const {
  if (cochain_len() == 0) return true;
  return in_span(cocycles, cochain);
}

Mat ExtSpace::coordinates(const Mat& cochain) const {
  if (dim() == 0) return Mat(0, 1);
  return coord * cochain;
}

Mat ExtSpace::cochain_of(const Mat& coords) const {
  if (dim() == 0) return Mat(cochain_len(), 1);
  return reps * coords;
}

ModuleMap ExtSpace::cocycle_map(const Mat& cochain) const {
  const auto& c = target.category();
  std::vector<int> summands;
  if (degree <= res.length()) summands = res.summands[degree];
  std::vector<Mat> elems;
  std::size_t off = 0;
  for (int x : summands) {
    elems.push_back(cochain.block(off, 0, target.dim(x), 1));
    off += target.dim(x);
  }
  return map_from_projective(c, summands, target, elems);
}

ExtSpace ext(const CatModule& x, const CatModule& y, int n) {
  if (n < 0) throw InvalidParams("negative Ext degree");
  return ext(min_proj_resolution(x, n + 1), y, n);
}

ExtSpace ext(const Resolution& res_x, const CatModule& y, int n) {
  if (n < 0) throw InvalidParams("negative Ext degree");
  if (res_x.truncated && res_x.length() < n + 1) throw InvalidParams("resolution too short for this Ext degree");
  ExtSpace e;
  e.source = res_x.module;
  e.target = y;
  e.degree = n;
  e.res = res_x;
  std::size_t len = 0;
  if (n <= e.res.length())
    for (int s : e.res.summands[n]) len += y.dim(s);
  Mat next = coboundary_matrix(e.res, y, n + 1);
  if (len == 0) {
    e.cocycles = e.coboundaries = e.reps = Mat(0, 0);
    e.coord = Mat(0, 0);
    return e;
  }
  e.cocycles = next.rows() == 0 ? Mat::identity(len) : kernel_basis(next);
  if (e.cocycles.cols() == 0) e.cocycles = Mat(len, 0);
  Mat prev = n == 0 ? Mat(len, 0) : coboundary_matrix(e.res, y, n);
  e.coboundaries = prev.cols() == 0 ? Mat(len, 0) : image_basis(prev);
  if (e.coboundaries.cols() == 0) e.coboundaries = Mat(len, 0);
  auto idx = extending_columns(e.coboundaries, e.cocycles);
  e.reps = e.cocycles.select_cols(idx);
  if (idx.empty()) {
    e.reps = Mat(len, 0);
    e.coord = Mat(0, len);
    return e;
  }
  Mat both = Mat::hstack({e.coboundaries, e.reps}, len);
  Mat li = left_inverse(both);
  e.coord = li.block(e.coboundaries.cols(), 0, idx.size(), len);
  return e;
}

int ext_dim(const CatModule& x, const CatModule& y, int n) { return ext(x, y, n).dim(); }

ModuleMap chain_component(const Resolution& src, const Resolution& dst, const std::vector<Mat>& images, int degree) {
  const auto& c = src.module.category();
  CatModule target = degree <= dst.length() ? dst.terms[degree] : zero_module(c);
  std::vector<int> summands;
  if (degree <= src.length()) summands = src.summands[degree];
  return map_from_projective(c, summands, target, images);
}

std::vector<std::vector<Mat>> lift_chain_map(const Resolution& src, const Resolution& dst, const ModuleMap& f,
                                             int up_to) {
  std::vector<std::vector<Mat>> out;
  for (int k = 0; k <= up_to; ++k) {
    std::vector<Mat> images;
    if (k > src.length()) {
      out.push_back(images);
      continue;
    }
    ModuleMap prev = k == 0 ? f : chain_component(src, dst, out[k - 1], k - 1);
    for (std::size_t j = 0; j < src.summands[k].size(); ++j) {
      int xj = src.summands[k][j];
      Mat rhs = prev.comp[xj] * src.elements[k][j];
      if (k > dst.length()) {
        if (!rhs.is_zero()) throw NoSolution("chain map does not lift");
        images.push_back(Mat(0, 1));
        continue;
      }
      images.push_back(solve_any(dst.differentials[k].comp[xj], rhs));
    }
    out.push_back(images);
  }
  return out;
}

Mat postcompose_cochain(const ExtSpace& e, const Mat& cochain, const ModuleMap& g) {
  std::vector<Mat> parts;
  std::size_t off = 0;
  if (e.degree <= e.res.length())
    for (int x : e.res.summands[e.degree]) {
      int d = e.target.dim(x);
      if (g.comp[x].rows() > 0) {
        parts.push_back(d == 0 ? Mat(g.comp[x].rows(), 1) : g.comp[x] * cochain.block(off, 0, d, 1));
      }
      off += d;
    }
  return parts.empty() ? Mat(0, 1) : Mat::vstack(parts, 1);
}

Mat precompose_cochain(const ExtSpace& e, const Mat& cochain, const Resolution& src, const std::vector<Mat>& lift) {
  std::vector<Mat> parts;
  if (e.degree > src.length()) return Mat(0, 1);
  ModuleMap c = e.cocycle_map(cochain);
  const auto& summands = src.summands[e.degree];
  for (std::size_t j = 0; j < summands.size(); ++j) {
    int x = summands[j];
    if (e.target.dim(x) == 0) continue;
    parts.push_back(c.comp[x].cols() == 0 ? Mat(e.target.dim(x), 1) : c.comp[x] * lift[j]);
  }
  return parts.empty() ? Mat(0, 1) : Mat::vstack(parts, 1);
}

Mat extension_class(const Resolution& res_z, const CatModule& e, const ModuleMap& f, const ModuleMap& g) {
  std::size_t len = 0;
  if (res_z.length() < 1) return Mat(0, 1);
  const auto& c = res_z.module.category();
  const auto& p0 = res_z.summands[0];
  std::vector<Mat> lifts;
  for (std::size_t j = 0; j < p0.size(); ++j) lifts.push_back(solve_any(g.comp[p0[j]], res_z.elements[0][j]));
  ModuleMap h0 = map_from_projective(c, p0, e, lifts);
  std::vector<Mat> parts;
  for (std::size_t j = 0; j < res_z.summands[1].size(); ++j) {
    int x = res_z.summands[1][j];
    if (f.comp[x].cols() == 0) continue;
    Mat image = h0.comp[x].cols() == 0 ? Mat(e.dim(x), 1) : h0.comp[x] * res_z.elements[1][j];
    parts.push_back(solve_any(f.comp[x], image));
    len += f.comp[x].cols();
  }
  return parts.empty() ? Mat(len, 1) : Mat::vstack(parts, 1);
}

namespace {

struct Cover {
  std::vector<int> summands;
  std::vector<Mat> elems;
  CatModule module;
  ModuleMap map;
};

Cover projective_cover(const CatModule& m) {
  const auto& c = m.category();
  Cover cv;
  auto tops = top_generators(m);
  for (int x = 0; x < static_cast<int>(c.size()); ++x)
    for (std::size_t j = 0; j < tops[x].cols(); ++j) {
      cv.summands.push_back(x);
      cv.elems.push_back(tops[x].col(j));
    }
  cv.module = projective_sum(c, cv.summands);
  cv.map = map_from_projective(c, cv.summands, m, cv.elems);
  return cv;
}

// The transpose of the presentation map, as a map between projectives over
// the opposite category; also returns both summand lists.
ModuleMap transposed_presentation(const CatModule& m, std::vector<int>& p0, std::vector<int>& p1) {
  const auto& c = m.category();
  FinCategory op = c.opposite();
  Resolution r = min_proj_resolution(m, 1);
  p0 = r.length() >= 0 ? r.summands[0] : std::vector<int>{};
  p1 = r.length() >= 1 ? r.summands[1] : std::vector<int>{};
  CatModule target = projective_sum(op, p1);
  std::vector<Mat> elems;
  for (std::size_t i = 0; i < p0.size(); ++i) {
    int xi = p0[i];
    std::vector<Mat> blocks;
    for (std::size_t j = 0; j < p1.size(); ++j) {
      int yj = p1[j];
      std::size_t off = summand_offset(c, p0, i, yj);
      if (c.dim(xi, yj) > 0) blocks.push_back(r.elements[1][j].block(off, 0, c.dim(xi, yj), 1));
    }
    elems.push_back(blocks.empty() ? Mat(0, 1) : Mat::vstack(blocks, 1));
  }
  return map_from_projective(op, p0, target, elems);
}

}  // namespace

CatModule syzygy(const CatModule& m) {
  if (m.total_dim() == 0) return m;
  Cover cv = projective_cover(m);
  return kernel(cv.module, cv.map).module;
}

CatModule cosyzygy(const CatModule& m) { return dual(syzygy(dual(m))); }

CatModule transpose(const CatModule& m) {
  std::vector<int> p0, p1;
  ModuleMap t = transposed_presentation(m, p0, p1);
  FinCategory op = m.category().opposite();
  return cokernel(projective_sum(op, p1), t).module;
}

CatModule tau(const CatModule& m) { return dual(transpose(m)); }

CatModule tau_inv(const CatModule& m) { return transpose(dual(m)); }

CatModule tau_n(const CatModule& m, int n) {
  if (n < 1) throw InvalidParams("tau_n needs n >= 1");
  CatModule x = m;
  for (int i = 1; i < n; ++i) x = syzygy(x);
  return tau(x);
}

CatModule tau_n_inv(const CatModule& m, int n) {
  if (n < 1) throw InvalidParams("tau_n needs n >= 1");
  CatModule x = m;
  for (int i = 1; i < n; ++i) x = cosyzygy(x);
  return tau_inv(x);
}

CatModule nakayama(const CatModule& m) {
  std::vector<int> p0, p1;
  ModuleMap t = transposed_presentation(m, p0, p1);
  FinCategory op = m.category().opposite();
  return cokernel(dual(projective_sum(op, p0)), dual(t)).module;
}

CatModule nakayama_inv(const CatModule& m) { return dual(nakayama(dual(m))); }

}  // namespace ausglue
