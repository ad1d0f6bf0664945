#include "hallq/representation.hpp"

#include <cmath>

#include "hallq/errors.hpp"

namespace hallq {

Representation::Representation(QuiverPtr Q, FieldPtr F, DimVector dim, std::vector<Matrix> mats)
    : Q_(std::move(Q)), F_(std::move(F)), dim_(std::move(dim)), mats_(std::move(mats)) {
  Q_->check(dim_);
  if (!dim_.nonnegative()) throw InputError("negative dimension");
  if (static_cast<int>(mats_.size()) != Q_->num_arrows()) throw InputError("wrong number of arrow matrices");
  for (int r = 0; r < Q_->num_arrows(); ++r) {
    const auto& a = Q_->arrows()[r];
    if (mats_[r].rows != dim_[a.tgt] || mats_[r].cols != dim_[a.src])
      throw InputError("matrix for arrow " + a.id + " has the wrong shape");
    for (Elem e : mats_[r].a)
      if (e >= F_->q()) throw InputError("matrix entry outside the field");
  }
}

Representation Representation::zero(QuiverPtr Q, FieldPtr F, const DimVector& d) {
  std::vector<Matrix> m;
  for (const auto& a : Q->arrows()) m.emplace_back(d[a.tgt], d[a.src]);
  return Representation(Q, F, d, std::move(m));
}

Representation Representation::simple(QuiverPtr Q, FieldPtr F, int vertex) {
  return zero(Q, F, DimVector::unit(Q->num_vertices(), vertex));
}

std::vector<std::vector<int>> paths_between(const Quiver& Q, int u, int w) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int at) -> void {
    if (at == w) out.push_back(cur);
    for (int r = 0; r < Q.num_arrows(); ++r) {
      if (Q.arrows()[r].src != at) continue;
      cur.push_back(r);
      self(self, Q.arrows()[r].tgt);
      cur.pop_back();
    }
  };
  rec(rec, u);
  return out;
}

Representation Representation::projective(QuiverPtr Q, FieldPtr F, int vertex) {
  int n = Q->num_vertices();
  std::vector<std::vector<std::vector<int>>> basis(n);
  DimVector d = DimVector::zero(n);
  for (int j = 0; j < n; ++j) {
    basis[j] = paths_between(*Q, vertex, j);
    d[j] = static_cast<int>(basis[j].size());
  }
  Representation P = zero(Q, F, d);
  for (int r = 0; r < Q->num_arrows(); ++r) {
    const auto& a = Q->arrows()[r];
    for (int c = 0; c < d[a.src]; ++c) {
      auto p = basis[a.src][c];
      p.push_back(r);
      for (int row = 0; row < d[a.tgt]; ++row)
        if (basis[a.tgt][row] == p) P.mats_[r](row, c) = 1;
    }
  }
  return P;
}

Representation Representation::injective(QuiverPtr Q, FieldPtr F, int vertex) {
  int n = Q->num_vertices();
  std::vector<std::vector<std::vector<int>>> basis(n);
  DimVector d = DimVector::zero(n);
  for (int j = 0; j < n; ++j) {
    basis[j] = paths_between(*Q, j, vertex);
    d[j] = static_cast<int>(basis[j].size());
  }
  // Dual basis: the arrow r: j -> k sends p* (p from j) to the sum of p'* with r p' = p.
  Representation I = zero(Q, F, d);
  for (int r = 0; r < Q->num_arrows(); ++r) {
    const auto& a = Q->arrows()[r];
    for (int c = 0; c < d[a.src]; ++c) {
      const auto& p = basis[a.src][c];
      if (p.empty() || p.front() != r) continue;
      std::vector<int> rest(p.begin() + 1, p.end());
      for (int row = 0; row < d[a.tgt]; ++row)
        if (basis[a.tgt][row] == rest) I.mats_[r](row, c) = 1;
    }
  }
  return I;
}

Representation Representation::from_point(QuiverPtr Q, FieldPtr F, const DimVector& d, std::uint64_t index) {
  Representation R = zero(Q, F, d);
  int q = F->q();
  for (int r = Q->num_arrows() - 1; r >= 0; --r) {
    auto& A = R.mats_[r].a;
    for (int k = static_cast<int>(A.size()) - 1; k >= 0; --k) {
      A[k] = static_cast<Elem>(index % q);
      index /= q;
    }
  }
  return R;
}

Representation Representation::direct_sum(const Representation& o) const {
  if (!compatible(o)) throw InputError("direct sum of representations over different quivers or fields");
  std::vector<Matrix> m;
  for (size_t r = 0; r < mats_.size(); ++r) m.push_back(block_diag(mats_[r], o.mats_[r]));
  return Representation(Q_, F_, dim_ + o.dim_, std::move(m));
}

Representation Representation::transform(const std::vector<Matrix>& g) const {
  std::vector<Matrix> m;
  for (int r = 0; r < Q_->num_arrows(); ++r) {
    const auto& a = Q_->arrows()[r];
    m.push_back(mul(*F_, mul(*F_, g[a.tgt], mats_[r]), inverse(*F_, g[a.src])));
  }
  return Representation(Q_, F_, dim_, std::move(m));
}

std::vector<Elem> Representation::flatten() const {
  std::vector<Elem> out;
  for (const auto& m : mats_) out.insert(out.end(), m.a.begin(), m.a.end());
  return out;
}

std::uint64_t Representation::point_index() const {
  int q = F_->q();
  int n = Q_->rep_space_dim(dim_);
  if (n * std::log2(static_cast<double>(q)) > 63) throw GuardExceeded("point index does not fit in 64 bits");
  std::uint64_t idx = 0;
  for (const auto& m : mats_)
    for (Elem e : m.a) idx = idx * q + e;
  return idx;
}

nlohmann::json Representation::to_json() const {
  nlohmann::json j;
  j["q"] = F_->q();
  j["dim"] = dim_.v;
  nlohmann::json mats = nlohmann::json::object();
  for (int r = 0; r < Q_->num_arrows(); ++r) {
    nlohmann::json rows = nlohmann::json::array();
    const auto& m = mats_[r];
    for (int i = 0; i < m.rows; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k < m.cols; ++k) row.push_back(static_cast<int>(m(i, k)));
      rows.push_back(row);
    }
    mats[Q_->arrows()[r].id] = rows;
  }
  j["mats"] = mats;
  return j;
}

Representation Representation::from_json(QuiverPtr Q, FieldPtr F, const nlohmann::json& j) {
  try {
    if (j.contains("q") && j["q"].get<int>() != F->q()) throw InputError("representation field does not match q");
    DimVector d(j.at("dim").get<std::vector<int>>());
    Q->check(d);
    std::vector<Matrix> m;
    for (const auto& a : Q->arrows()) {
      Matrix M(d[a.tgt], d[a.src]);
      const auto& rows = j.at("mats").at(a.id);
      if (static_cast<int>(rows.size()) != M.rows) throw InputError("arrow " + a.id + ": wrong row count");
      for (int i = 0; i < M.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != M.cols) throw InputError("arrow " + a.id + ": wrong column count");
        for (int k = 0; k < M.cols; ++k) {
          int x = rows[i][k].get<int>();
          if (x < 0 || x >= F->q()) throw InputError("entry outside the field");
          M(i, k) = static_cast<Elem>(x);
        }
      }
      m.push_back(std::move(M));
    }
    return Representation(Q, F, d, std::move(m));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad representation json: ") + e.what());
  }
}

std::string Representation::key() const {
  std::string s = "d=" + dim_.str();
  for (int r = 0; r < Q_->num_arrows(); ++r) {
    s += ';';
    for (Elem e : mats_[r].a) {
      if (F_->q() <= 10)
        s += static_cast<char>('0' + e);
      else
        s += std::to_string(e) + '.';
    }
  }
  return s;
}

bool Representation::compatible(const Representation& o) const {
  return (Q_ == o.Q_ || *Q_ == *o.Q_) && F_->q() == o.F_->q();
}

}  // namespace hallq
