#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace hallq {

// Dimension vector in the vertex order of its quiver.
struct DimVector {
  std::vector<int> v;

  DimVector() = default;
  explicit DimVector(std::vector<int> e) : v(std::move(e)) {}
  static DimVector zero(int n) { return DimVector(std::vector<int>(n, 0)); }
  static DimVector unit(int n, int i) {
    DimVector d = zero(n);
    d.v[i] = 1;
    return d;
  }

  int size() const { return static_cast<int>(v.size()); }
  int operator[](int i) const { return v[i]; }
  int& operator[](int i) { return v[i]; }
  int total() const;
  bool is_zero() const { return total() == 0; }
  bool nonnegative() const;

  DimVector operator+(const DimVector& o) const;
  DimVector operator-(const DimVector& o) const;
  DimVector operator*(int k) const;
  // Componentwise order.
  bool leq(const DimVector& o) const;

  bool operator==(const DimVector&) const = default;
  auto operator<=>(const DimVector&) const = default;

  std::string str() const;  // "1,0,2"
};

struct Arrow {
  std::string id;
  int src = 0, tgt = 0;
};

class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  // {"vertices":[...],"arrows":[[id,src,tgt],...]}
  static std::shared_ptr<const Quiver> from_json(const std::string& text);
  static std::shared_ptr<const Quiver> from_file(const std::string& path);
  std::string to_json() const;

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int vertex_index(const std::string& id) const;  // throws InputError

  // Parses "1,0,2" in vertex order or "a:1,b:2" keyed by vertex id.
  DimVector parse_dim(const std::string& s) const;
  void check(const DimVector& d) const;  // throws InputError on a size mismatch

  int euler_form(const DimVector& a, const DimVector& b) const;
  int symmetric_form(const DimVector& a, const DimVector& b) const;
  int quadratic_form(const DimVector& a) const { return euler_form(a, a); }
  // m(a,b) = sum a_i b_i + sum over arrows a_src b_tgt.
  int m_form(const DimVector& a, const DimVector& b) const;
  std::vector<std::vector<int>> cartan_matrix() const;
  // Matrix E with <x,y> = x^T E y.
  std::vector<std::vector<int>> euler_matrix() const;

  // dim E_d = sum over arrows d_src d_tgt.
  int rep_space_dim(const DimVector& d) const;
  // sum d_i^2 = dim G_d.
  int group_dim(const DimVector& d) const;

  bool connected() const;
  std::vector<int> sinks() const;
  // Neighbours in the underlying graph, with multiplicity.
  std::vector<std::vector<int>> adjacency() const;

  bool operator==(const Quiver& o) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

}  // namespace hallq
