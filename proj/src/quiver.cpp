#include "ausglue/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "ausglue/errors.hpp"

namespace ausglue {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen_v(vertices_.begin(), vertices_.end());
  if (seen_v.size() != vertices_.size()) throw InvalidParams("duplicate vertex names");
  std::set<std::string> seen;
  for (const auto& a : arrows_) {
    if (a.src < 0 || a.dst < 0 || a.src >= static_cast<int>(vertices_.size()) ||
        a.dst >= static_cast<int>(vertices_.size()))
      throw InvalidParams("arrow " + a.id + " has an invalid endpoint");
    if (!seen.insert(a.id).second) throw InvalidParams("duplicate arrow id " + a.id);
  }
}

int Quiver::vertex_index(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  return it == vertices_.end() ? -1 : static_cast<int>(it - vertices_.begin());
}

int Quiver::arrow_index(const std::string& id) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id == id) return static_cast<int>(i);
  return -1;
}

std::vector<int> Quiver::topological_order() const {
  std::vector<int> indeg(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indeg[a.dst];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (indeg[v] == 0) ready.push(static_cast<int>(v));
  std::vector<int> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const auto& a : arrows_)
      if (a.src == v && --indeg[a.dst] == 0) ready.push(a.dst);
  }
  if (order.size() != vertices_.size()) throw InvalidParams("quiver has an oriented cycle");
  return order;
}

bool Quiver::is_acyclic() const {
  try {
    topological_order();
    return true;
  } catch (const InvalidParams&) {
    return false;
  }
}

std::string Quiver::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    os << (i ? ", " : "") << arrows_[i].id << ":" << vertices_[arrows_[i].src] << "->"
       << vertices_[arrows_[i].dst];
  return os.str();
}

std::vector<std::pair<int, int>> dynkin_edges(char letter, int rank) {
  std::vector<std::pair<int, int>> e;
  switch (letter) {
    case 'A':
      for (int i = 1; i < rank; ++i) e.emplace_back(i, i + 1);
      break;
    case 'D':
      // Branch vertex 1 carries the two short legs 2, 3 and the long arm 4..n.
      e = {{1, 2}, {1, 3}, {1, 4}};
      for (int i = 4; i < rank; ++i) e.emplace_back(i, i + 1);
      break;
    case 'E':
      for (int i = 1; i < rank - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(3, rank);
      break;
    default:
      throw InvalidDynkinSpec(std::string("unknown Dynkin letter ") + letter);
  }
  return e;
}

void DynkinSpec::validate() const {
  bool ok = (letter == 'A' && rank >= 1) || (letter == 'D' && rank >= 4) ||
            (letter == 'E' && rank >= 6 && rank <= 8);
  if (!ok) throw InvalidDynkinSpec(std::string(1, letter) + std::to_string(rank) + " is not a Dynkin type");
  if (forward.size() != static_cast<std::size_t>(rank - 1))
    throw InvalidDynkinSpec("orientation needs " + std::to_string(rank - 1) + " edge flags");
}

DynkinSpec DynkinSpec::linear(char letter, int rank) {
  DynkinSpec s;
  s.letter = letter;
  s.rank = rank;
  s.forward.assign(rank > 0 ? rank - 1 : 0, true);
  s.validate();
  return s;
}

DynkinSpec DynkinSpec::alternating(char letter, int rank) {
  DynkinSpec s = linear(letter, rank);
  for (std::size_t i = 0; i < s.forward.size(); ++i) s.forward[i] = (i % 2 == 0);
  return s;
}

DynkinSpec DynkinSpec::parse(const std::string& name, const std::string& orientation) {
  if (name.size() < 2) throw InvalidDynkinSpec("expected e.g. A3, got '" + name + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (...) {
    throw InvalidDynkinSpec("bad rank in '" + name + "'");
  }
  DynkinSpec s;
  s.letter = letter;
  s.rank = rank;
  s.forward.assign(rank > 0 ? rank - 1 : 0, true);
  if (orientation == "alt" || orientation == "alternating") {
    for (std::size_t i = 0; i < s.forward.size(); ++i) s.forward[i] = (i % 2 == 0);
  } else if (orientation != "linear" && !orientation.empty()) {
    if (orientation.size() != s.forward.size())
      throw InvalidDynkinSpec("orientation string length must be " + std::to_string(s.forward.size()));
    for (std::size_t i = 0; i < orientation.size(); ++i) {
      if (orientation[i] != 'f' && orientation[i] != 'b')
        throw InvalidDynkinSpec("orientation flags are 'f' or 'b'");
      s.forward[i] = orientation[i] == 'f';
    }
  }
  s.validate();
  return s;
}

std::string DynkinSpec::name() const { return std::string(1, letter) + std::to_string(rank); }

std::string DynkinSpec::orientation_string() const {
  std::string o;
  for (bool f : forward) o.push_back(f ? 'f' : 'b');
  return o;
}

Quiver dynkin_quiver(const DynkinSpec& spec) {
  spec.validate();
  std::vector<std::string> vs;
  for (int i = 1; i <= spec.rank; ++i) vs.push_back(std::to_string(i));
  auto edges = dynkin_edges(spec.letter, spec.rank);
  std::vector<Arrow> as;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (!spec.forward[i]) std::swap(u, v);
    as.push_back({"a" + std::to_string(i + 1), u - 1, v - 1});
  }
  return Quiver(vs, as);
}

int positive_root_count(const DynkinSpec& spec) {
  spec.validate();
  int n = spec.rank;
  switch (spec.letter) {
    case 'A':
      return n * (n + 1) / 2;
    case 'D':
      return n * (n - 1);
    default:
      return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
}

std::optional<DynkinSpec> classify_dynkin(const Quiver& q) {
  int n = static_cast<int>(q.size());
  if (n == 0 || static_cast<int>(q.arrows().size()) != n - 1) return std::nullopt;
  std::vector<std::vector<int>> adj(n);
  for (const auto& a : q.arrows()) {
    if (a.src == a.dst) return std::nullopt;
    adj[a.src].push_back(a.dst);
    adj[a.dst].push_back(a.src);
  }
  // Connected tree with n-1 edges and no multi-edges.
  for (auto& l : adj) {
    std::set<int> s(l.begin(), l.end());
    if (s.size() != l.size()) return std::nullopt;
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  if (count != n) return std::nullopt;
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() > 3) return std::nullopt;
    if (adj[v].size() == 3) branch.push_back(v);
  }
  DynkinSpec s;
  s.rank = n;
  if (branch.empty()) {
    s.letter = 'A';
  } else if (branch.size() == 1) {
    std::vector<int> legs;
    for (int start : adj[branch[0]]) {
      int len = 1, prev = branch[0], cur = start;
      while (adj[cur].size() == 2) {
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1)
      s.letter = 'D';
    else if (legs[0] == 1 && legs[1] == 2 && legs[2] <= 4)
      s.letter = 'E';
    else
      return std::nullopt;
  } else {
    return std::nullopt;
  }
  // Orientation relative to the canonical labelling is not recovered.
  s.forward.assign(n - 1, true);
  return s;
}

BoundPresentation::BoundPresentation(Quiver q, std::vector<Relation> relations)
    : quiver_(std::move(q)), relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    if (r.terms.empty()) throw InvalidParams("empty relation");
    int s = path_source(r.terms[0].path), t = path_target(r.terms[0].path);
    for (const auto& term : r.terms)
      if (path_source(term.path) != s || path_target(term.path) != t)
        throw InvalidParams("relation mixes non-parallel paths: " + path_string(term.path));
  }
}

int BoundPresentation::path_source(const std::vector<int>& path) const {
  if (path.empty()) throw InvalidParams("relation terms must be paths of positive length");
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] < 0 || path[i] >= static_cast<int>(quiver_.arrows().size()))
      throw InvalidParams("unknown arrow in path");
    if (i > 0 && quiver_.arrows()[path[i - 1]].dst != quiver_.arrows()[path[i]].src)
      throw InvalidParams("non-composable path " + path_string(path));
  }
  return quiver_.arrows()[path.front()].src;
}

int BoundPresentation::path_target(const std::vector<int>& path) const {
  path_source(path);
  return quiver_.arrows()[path.back()].dst;
}

std::string BoundPresentation::path_string(const std::vector<int>& path) const {
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += ".";
    s += (path[i] >= 0 && path[i] < static_cast<int>(quiver_.arrows().size()))
             ? quiver_.arrows()[path[i]].id
             : "?";
  }
  return s;
}

std::string BoundPresentation::str() const {
  std::ostringstream os;
  os << quiver_.str();
  for (const auto& r : relations_) {
    os << " | ";
    for (std::size_t i = 0; i < r.terms.size(); ++i)
      os << (i ? " + " : "") << r.terms[i].coeff.str() << "*" << path_string(r.terms[i].path);
  }
  return os.str();
}

BoundPresentation nakayama_linear(int m, int ell) {
  if (m < 2 || ell < 2) throw InvalidParams("nakayama_linear needs m >= 2 and ell >= 2");
  Quiver q = dynkin_quiver(DynkinSpec::linear('A', m));
  std::vector<Relation> rels;
  for (int i = 0; i + ell <= m - 1; ++i) {
    Relation r;
    RelationTerm t;
    t.coeff = 1;
    for (int j = 0; j < ell; ++j) t.path.push_back(i + j);
    r.terms.push_back(t);
    rels.push_back(r);
  }
  return BoundPresentation(q, rels);
}

Quiver opposite(const Quiver& q) {
  std::vector<Arrow> as;
  for (const auto& a : q.arrows()) as.push_back({a.id, a.dst, a.src});
  return Quiver(q.vertices(), as);
}

BoundPresentation opposite(const BoundPresentation& p) {
  std::vector<Relation> rels;
  for (const auto& r : p.relations()) {
    Relation o;
    for (const auto& t : r.terms) {
      RelationTerm u{t.coeff, t.path};
      std::reverse(u.path.begin(), u.path.end());
      o.terms.push_back(u);
    }
    rels.push_back(o);
  }
  return BoundPresentation(opposite(p.quiver()), rels);
}

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Rational parse_coeff(const std::string& text, int line) {
  std::string t = strip(text);
  if (t.empty() || t == "+") return Rational(1);
  if (t == "-") return Rational(-1);
  try {
    auto slash = t.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(t));
    return Rational(std::stoll(t.substr(0, slash)), std::stoll(t.substr(slash + 1)));
  } catch (...) {
    throw ParseError("line " + std::to_string(line) + ": bad coefficient '" + t + "'");
  }
}

}  // namespace

QuiverSpecFile parse_quiver_spec(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool header = false;
  std::optional<DynkinSpec> dyn;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::string>> pending_arrows;
  std::vector<std::pair<int, std::string>> pending_relations;
  auto add_vertex = [&](const std::string& v) {
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) vertices.push_back(v);
  };
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string s = strip(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string kw;
    ls >> kw;
    if (!header) {
      if (kw == "dynkin") {
        std::string letter;
        int rank = 0;
        if (!(ls >> letter >> rank)) throw ParseError("line " + std::to_string(line) + ": dynkin <letter> <rank>");
        DynkinSpec d = DynkinSpec::parse(letter + std::to_string(rank));
        dyn = d;
        for (int i = 1; i <= rank; ++i) add_vertex(std::to_string(i));
      } else if (kw != "quiver") {
        throw ParseError("line " + std::to_string(line) + ": expected 'dynkin' or 'quiver' header");
      }
      header = true;
      continue;
    }
    if (kw == "vertex") {
      std::string v;
      while (ls >> v) add_vertex(v);
    } else if (kw == "arrow") {
      std::string id, a, b;
      if (!(ls >> id >> a >> b)) throw ParseError("line " + std::to_string(line) + ": arrow <id> <src> <dst>");
      add_vertex(a);
      add_vertex(b);
      pending_arrows.push_back({id, a, b});
    } else if (kw == "relation") {
      std::string rest;
      std::getline(ls, rest);
      pending_relations.emplace_back(line, rest);
    } else {
      throw ParseError("line " + std::to_string(line) + ": unknown keyword '" + kw + "'");
    }
  }
  if (!header) throw ParseError("empty quiver spec");
  for (const auto& pa : pending_arrows) {
    int s = static_cast<int>(std::find(vertices.begin(), vertices.end(), pa[1]) - vertices.begin());
    int t = static_cast<int>(std::find(vertices.begin(), vertices.end(), pa[2]) - vertices.begin());
    arrows.push_back({pa[0], s, t});
  }
  Quiver q;
  if (dyn && arrows.empty()) {
    q = dynkin_quiver(*dyn);
  } else {
    if (dyn && static_cast<int>(vertices.size()) != dyn->rank)
      throw InvalidDynkinSpec("arrow lines use vertices outside 1.." + std::to_string(dyn->rank));
    q = Quiver(vertices, arrows);
    if (dyn) {
      // Recover the orientation flags against the canonical edge list.
      auto edges = dynkin_edges(dyn->letter, dyn->rank);
      if (edges.size() != q.arrows().size()) throw InvalidDynkinSpec("arrow count does not match the diagram");
      std::vector<bool> used(q.arrows().size(), false);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        bool found = false;
        for (std::size_t j = 0; j < q.arrows().size() && !found; ++j) {
          const auto& a = q.arrows()[j];
          int s = std::stoi(vertices[a.src]), t = std::stoi(vertices[a.dst]);
          if (used[j]) continue;
          if (s == u && t == v) {
            dyn->forward[i] = true;
            used[j] = found = true;
          } else if (s == v && t == u) {
            dyn->forward[i] = false;
            used[j] = found = true;
          }
        }
        if (!found) throw InvalidDynkinSpec("arrows do not follow the Dynkin diagram");
      }
    }
  }
  std::vector<Relation> rels;
  for (const auto& [ln, body] : pending_relations) {
    Relation r;
    std::stringstream ts(body);
    std::string term;
    while (std::getline(ts, term, ';')) {
      term = strip(term);
      if (term.empty()) continue;
      auto star = term.find('*');
      RelationTerm rt;
      std::string path_text = term;
      rt.coeff = 1;
      if (star != std::string::npos) {
        rt.coeff = parse_coeff(term.substr(0, star), ln);
        path_text = term.substr(star + 1);
      }
      std::stringstream ps(strip(path_text));
      std::string aid;
      while (std::getline(ps, aid, '.')) {
        int idx = q.arrow_index(strip(aid));
        if (idx < 0) throw ParseError("line " + std::to_string(ln) + ": unknown arrow '" + aid + "'");
        rt.path.push_back(idx);
      }
      r.terms.push_back(rt);
    }
    rels.push_back(r);
  }
  QuiverSpecFile out;
  out.presentation = BoundPresentation(q, rels);
  out.dynkin = dyn;
  return out;
}

QuiverSpecFile load_quiver_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_quiver_spec(ss.str());
}

}  // namespace ausglue
