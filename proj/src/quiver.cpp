#include "hallq/quiver.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hallq/errors.hpp"

namespace hallq {

int DimVector::total() const {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

bool DimVector::nonnegative() const {
  for (int x : v)
    if (x < 0) return false;
  return true;
}

DimVector DimVector::operator+(const DimVector& o) const {
  DimVector r = *this;
  for (size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
  return r;
}

DimVector DimVector::operator-(const DimVector& o) const {
  DimVector r = *this;
  for (size_t i = 0; i < v.size(); ++i) r.v[i] -= o.v[i];
  return r;
}

DimVector DimVector::operator*(int k) const {
  DimVector r = *this;
  for (int& x : r.v) x *= k;
  return r;
}

bool DimVector::leq(const DimVector& o) const {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] > o.v[i]) return false;
  return true;
}

std::string DimVector::str() const {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw InputError("duplicate vertex id");
  if (vertices_.empty()) throw InputError("quiver has no vertices");
  std::set<std::string> aid;
  int n = num_vertices();
  for (const auto& a : arrows_) {
    if (!aid.insert(a.id).second) throw InputError("duplicate arrow id " + a.id);
    if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n) throw InputError("arrow endpoint out of range");
    if (a.src == a.tgt) throw InputError("loop at vertex " + vertices_[a.src]);
  }
  // Kahn's algorithm; anything left over lies on an oriented cycle.
  std::vector<int> indeg(n, 0);
  for (const auto& a : arrows_) ++indeg[a.tgt];
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (!indeg[i]) stack.push_back(i);
  int done = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++done;
    for (const auto& a : arrows_)
      if (a.src == u && --indeg[a.tgt] == 0) stack.push_back(a.tgt);
  }
  if (done != n) throw InputError("quiver has an oriented cycle");
}

std::shared_ptr<const Quiver> Quiver::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("bad quiver json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw InputError("quiver json needs a \"vertices\" array");
  std::vector<std::string> verts;
  for (const auto& v : j["vertices"]) {
    if (v.is_string())
      verts.push_back(v.get<std::string>());
    else if (v.is_number_integer())
      verts.push_back(std::to_string(v.get<long long>()));
    else
      throw InputError("vertex ids must be strings");
  }
  std::map<std::string, int> idx;
  for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw InputError("\"arrows\" must be an array");
    for (const auto& a : j["arrows"]) {
      if (!a.is_array() || a.size() != 3) throw InputError("arrow must be [id, source, target]");
      auto str = [](const nlohmann::json& x) {
        return x.is_string() ? x.get<std::string>() : x.dump();
      };
      std::string s = str(a[1]), t = str(a[2]);
      if (!idx.count(s) || !idx.count(t)) throw InputError("arrow endpoint is not a declared vertex");
      arrows.push_back({str(a[0]), idx[s], idx[t]});
    }
  }
  return std::make_shared<const Quiver>(std::move(verts), std::move(arrows));
}

std::shared_ptr<const Quiver> Quiver::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read quiver file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string Quiver::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertices_;
  j["arrows"] = nlohmann::json::array();
  for (const auto& a : arrows_) j["arrows"].push_back({a.id, vertices_[a.src], vertices_[a.tgt]});
  return j.dump();
}

int Quiver::vertex_index(const std::string& id) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices_[i] == id) return i;
  throw InputError("unknown vertex " + id);
}

DimVector Quiver::parse_dim(const std::string& s) const {
  DimVector d = DimVector::zero(num_vertices());
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) parts.push_back(tok);
  auto to_int = [&](const std::string& t) {
    try {
      size_t pos = 0;
      int x = std::stoi(t, &pos);
      if (pos != t.size() || x < 0) throw InputError("");
      return x;
    } catch (...) {
      throw InputError("bad dimension vector entry '" + t + "' in '" + s + "'");
    }
  };
  bool keyed = s.find(':') != std::string::npos;
  if (keyed) {
    for (const auto& p : parts) {
      auto c = p.find(':');
      if (c == std::string::npos) throw InputError("mixed keyed/positional dimension vector");
      d[vertex_index(p.substr(0, c))] = to_int(p.substr(c + 1));
    }
  } else {
    if (static_cast<int>(parts.size()) != num_vertices())
      throw InputError("dimension vector '" + s + "' has wrong length");
    for (int i = 0; i < num_vertices(); ++i) d[i] = to_int(parts[i]);
  }
  return d;
}

void Quiver::check(const DimVector& d) const {
  if (d.size() != num_vertices()) throw InputError("dimension vector does not match the quiver's vertex set");
}

int Quiver::euler_form(const DimVector& a, const DimVector& b) const {
  check(a);
  check(b);
  int s = 0;
  for (int i = 0; i < num_vertices(); ++i) s += a[i] * b[i];
  for (const auto& r : arrows_) s -= a[r.src] * b[r.tgt];
  return s;
}

int Quiver::symmetric_form(const DimVector& a, const DimVector& b) const {
  return euler_form(a, b) + euler_form(b, a);
}

int Quiver::m_form(const DimVector& a, const DimVector& b) const {
  check(a);
  check(b);
  int s = 0;
  for (int i = 0; i < num_vertices(); ++i) s += a[i] * b[i];
  for (const auto& r : arrows_) s += a[r.src] * b[r.tgt];
  return s;
}

std::vector<std::vector<int>> Quiver::cartan_matrix() const {
  int n = num_vertices();
  std::vector<std::vector<int>> c(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = symmetric_form(DimVector::unit(n, i), DimVector::unit(n, j));
  return c;
}

std::vector<std::vector<int>> Quiver::euler_matrix() const {
  int n = num_vertices();
  std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) e[i][i] = 1;
  for (const auto& r : arrows_) e[r.src][r.tgt] -= 1;
  return e;
}

int Quiver::rep_space_dim(const DimVector& d) const {
  int s = 0;
  for (const auto& r : arrows_) s += d[r.src] * d[r.tgt];
  return s;
}

int Quiver::group_dim(const DimVector& d) const {
  int s = 0;
  for (int x : d.v) s += x * x;
  return s;
}

std::vector<std::vector<int>> Quiver::adjacency() const {
  std::vector<std::vector<int>> adj(num_vertices());
  for (const auto& a : arrows_) {
    adj[a.src].push_back(a.tgt);
    adj[a.tgt].push_back(a.src);
  }
  return adj;
}

bool Quiver::connected() const {
  auto adj = adjacency();
  std::vector<char> seen(num_vertices(), 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int cnt = 1;
  while (!st.empty()) {
    int u = st.back();
    st.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        st.push_back(w);
      }
  }
  return cnt == num_vertices();
}

std::vector<int> Quiver::sinks() const {
  std::vector<int> out;
  for (int i = 0; i < num_vertices(); ++i) {
    bool sink = true;
    for (const auto& a : arrows_)
      if (a.src == i) sink = false;
    if (sink) out.push_back(i);
  }
  return out;
}

bool Quiver::operator==(const Quiver& o) const {
  if (vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size()) return false;
  for (size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id != o.arrows_[i].id || arrows_[i].src != o.arrows_[i].src || arrows_[i].tgt != o.arrows_[i].tgt)
      return false;
  return true;
}

}  // namespace hallq
