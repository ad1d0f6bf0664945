#include "hallq/hopf.hpp"

#include <functional>
#include <sstream>

#include "hallq/errors.hpp"
#include "hallq/homology.hpp"
#include "hallq/pbw.hpp"

namespace hallq {

const char* vmode_name(VMode m) { return m == VMode::QPowDim ? "q^dim" : "orbit"; }

void Tensor::add(std::vector<ExtKey> k, const Coeff& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Tensor Tensor::operator+(const Tensor& o) const {
  Tensor r = *this;
  for (auto& [k, c] : o.terms_) r.add(k, c);
  return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
  Tensor r = *this;
  for (auto& [k, c] : o.terms_) r.add(k, -c);
  return r;
}

std::string Tensor::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (size_t i = 0; i < k.size(); ++i) {
      os << (i ? " (x) " : " ");
      bool nz = false;
      for (int m : k[i].mu) nz |= m != 0;
      if (nz) {
        os << "K[";
        for (size_t j = 0; j < k[i].mu.size(); ++j) os << (j ? "," : "") << k[i].mu[j];
        os << "]";
      }
      os << "u[" << k[i].cls.label() << "]";
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {
std::vector<int> add_vec(std::vector<int> a, const std::vector<int>& b, int sign = 1) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}
Coeff from_mpq(int q, const mpq_class& x) { return Coeff(q, x); }
}  // namespace

HopfLayer::HopfLayer(HallAlgebra& A, VMode mode)
    : A_(A), mode_(mode), n_(A.context().quiver().num_vertices()) {}

std::vector<int> HopfLayer::zero_mu() const { return std::vector<int>(n_, 0); }

int HopfLayer::sym(const std::vector<int>& a, const std::vector<int>& b) const {
  return A_.context().quiver().symmetric_form(DimVector(a), DimVector(b));
}

ExtendedElement HopfLayer::one() { return K(zero_mu()); }

ExtendedElement HopfLayer::u(const IsoClass& L, std::vector<int> mu) {
  if (mu.empty()) mu = zero_mu();
  ExtendedElement e(q());
  e.add({ExtKey{std::move(mu), L}}, Coeff::one(q()));
  return e;
}

ExtendedElement HopfLayer::K(std::vector<int> mu) { return u(A_.context().zero_class(), std::move(mu)); }

// (K_mu u_a)(K_nu u_b) = v^{-(nu,a)} K_{mu+nu} u_a u_b
ExtendedElement HopfLayer::multiply(const ExtendedElement& x, const ExtendedElement& y) {
  ExtendedElement r(q());
  for (auto& [kx, cx] : x.terms())
    for (auto& [ky, cy] : y.terms()) {
      const ExtKey& a = kx.at(0);
      const ExtKey& b = ky.at(0);
      Coeff c = cx * cy * A_.v(-sym(b.mu, a.cls.dim().v));
      auto mu = add_vec(a.mu, b.mu);
      HallElement p = A_.basis_product(a.cls, b.cls);
      for (auto& [L, g] : p.terms()) r.add({ExtKey{mu, L}}, c * g);
    }
  return r;
}

Tensor HopfLayer::tensor_multiply(const Tensor& x, const Tensor& y) {
  Tensor r(q());
  for (auto& [kx, cx] : x.terms())
    for (auto& [ky, cy] : y.terms()) {
      if (kx.size() != ky.size()) throw InputError("tensor orders differ");
      std::vector<Tensor> parts;
      for (size_t i = 0; i < kx.size(); ++i) {
        ExtendedElement a(q()), b(q());
        a.add({kx[i]}, Coeff::one(q()));
        b.add({ky[i]}, Coeff::one(q()));
        parts.push_back(multiply(a, b));
      }
      // expand the product of sums
      std::function<void(size_t, std::vector<ExtKey>&, Coeff)> rec = [&](size_t i, std::vector<ExtKey>& acc, Coeff c) {
        if (i == parts.size()) {
          r.add(acc, c);
          return;
        }
        for (auto& [k, ck] : parts[i].terms()) {
          acc.push_back(k[0]);
          rec(i + 1, acc, c * ck);
          acc.pop_back();
        }
      };
      std::vector<ExtKey> acc;
      rec(0, acc, cx * cy);
    }
  return r;
}

// Delta(K_mu u_l) = sum v^{<a,b>} (a_a a_b / a_l) g^l_{ab} v^{-(b,a)} K_{mu+b} u_a (x) K_mu u_b
Tensor HopfLayer::comultiply(const Tensor& x, int slot) {
  HallContext& ctx = A_.context();
  HallNumbers& H = A_.numbers();
  const Quiver& Q = ctx.quiver();
  Tensor r(q());
  for (auto& [k, c] : x.terms()) {
    const ExtKey& e = k.at(slot);
    const IsoClass& L = e.cls;
    auto it = delta_memo_.find(L.uid());
    if (it == delta_memo_.end()) {
      Tensor d(q());
      for (const auto& B : classes_upto(ctx, L.dim())) {
        DimVector ad = L.dim() - B.dim();
        for (const auto& Acl : ctx.classes(ad)) {
          std::uint64_t g = H.hall_number(L, Acl, B);
          if (g == 0) continue;
          mpq_class w = mpq_class(mpz_class(Acl.aut() * B.aut()) * g, L.aut());
          w.canonicalize();
          Coeff cf = from_mpq(q(), w) * A_.v(Q.euler_form(ad, B.dim()) - Q.symmetric_form(B.dim(), ad));
          d.add({ExtKey{B.dim().v, Acl}, ExtKey{zero_mu(), B}}, cf);
        }
      }
      it = delta_memo_.emplace(L.uid(), d).first;
    }
    for (auto& [dk, dc] : it->second.terms()) {
      std::vector<ExtKey> nk;
      for (int i = 0; i < slot; ++i) nk.push_back(k[i]);
      nk.push_back(ExtKey{add_vec(dk[0].mu, e.mu), dk[0].cls});
      nk.push_back(ExtKey{e.mu, dk[1].cls});
      for (size_t i = slot + 1; i < k.size(); ++i) nk.push_back(k[i]);
      r.add(nk, c * dc);
    }
  }
  return r;
}

Coeff HopfLayer::counit(const ExtendedElement& x) {
  Coeff s = Coeff::zero(q());
  for (auto& [k, c] : x.terms())
    if (k.at(0).cls.is_zero()) s += c;
  return s;
}

ExtendedElement HopfLayer::antipode_u(const IsoClass& L) {
  auto it = s_memo_.find(L.uid());
  if (it != s_memo_.end()) return it->second;
  HallContext& ctx = A_.context();
  HallNumbers& H = A_.numbers();
  const Quiver& Q = ctx.quiver();
  ExtendedElement r(q());
  if (L.is_zero()) {
    r = one();
  } else {
    auto mu = add_vec(zero_mu(), L.dim().v, -1);
    const auto targets = ctx.classes(L.dim());
    std::vector<IsoClass> seq;
    std::function<void(const DimVector&)> rec = [&](const DimVector& rest) {
      if (rest.is_zero()) {
        mpz_class gl = H.iterated(L, seq);
        if (gl == 0) return;
        long long e = 0;
        mpz_class prod = 1;
        for (size_t i = 0; i < seq.size(); ++i) {
          prod *= seq[i].aut();
          for (size_t j = i + 1; j < seq.size(); ++j) e += 2LL * Q.euler_form(seq[i].dim(), seq[j].dim());
        }
        mpq_class w(prod * gl, L.aut());
        w.canonicalize();
        if (seq.size() % 2) w = -w;
        Coeff base = from_mpq(q(), w) * A_.v(e);
        for (const auto& P : targets) {
          mpz_class gp = H.iterated(P, seq);
          if (gp == 0) continue;
          r.add({ExtKey{mu, P}}, base * from_mpq(q(), mpq_class(gp)));
        }
        return;
      }
      for (const auto& X : classes_upto(ctx, rest)) {
        if (X.is_zero()) continue;
        seq.push_back(X);
        rec(rest - X.dim());
        seq.pop_back();
      }
    };
    rec(L.dim());
  }
  s_memo_.emplace(L.uid(), r);
  return r;
}

// S(K_mu u_l) = S(u_l) K_{-mu}
ExtendedElement HopfLayer::antipode(const ExtendedElement& x) {
  ExtendedElement r(q());
  for (auto& [k, c] : x.terms()) {
    ExtendedElement t = multiply(antipode_u(k.at(0).cls), K(add_vec(zero_mu(), k[0].mu, -1)));
    for (auto& [tk, tc] : t.terms()) r.add(tk, c * tc);
  }
  return r;
}

Coeff HopfLayer::vabs(const IsoClass& L) {
  if (mode_ == VMode::QPowDim) return from_mpq(q(), mpq_class(qpow(q(), L.dim().total())));
  mpq_class o(group_order(q(), L.dim()), L.aut());
  o.canonicalize();
  return from_mpq(q(), o);
}

// phi(K_mu u_a, K_nu u_b^-) = v^{-(mu,nu)-(a,nu)+(mu,b)} |V_a| / a_a delta_ab
Coeff HopfLayer::pairing(const ExtendedElement& x, const ExtendedElement& y) {
  Coeff s = Coeff::zero(q());
  for (auto& [kx, cx] : x.terms())
    for (auto& [ky, cy] : y.terms()) {
      const ExtKey& a = kx.at(0);
      const ExtKey& b = ky.at(0);
      if (a.cls.uid() != b.cls.uid()) continue;
      int e = -sym(a.mu, b.mu) - sym(a.cls.dim().v, b.mu) + sym(a.mu, b.cls.dim().v);
      s += cx * cy * A_.v(e) * vabs(a.cls) / from_mpq(q(), mpq_class(a.cls.aut()));
    }
  return s;
}

bool HopfLayer::counit_check(const IsoClass& L) {
  ExtendedElement x = u(L);
  Tensor d = comultiply(x);
  ExtendedElement left(q()), right(q());
  for (auto& [k, c] : d.terms()) {
    if (k[0].cls.is_zero()) left.add({k[1]}, c);  // eps(K_mu) = 1
    if (k[1].cls.is_zero()) right.add({k[0]}, c);
  }
  return left == x && right == x;
}

bool HopfLayer::coassociativity_check(const IsoClass& L) {
  Tensor d = comultiply(u(L));
  return comultiply(d, 0) == comultiply(d, 1);
}

bool HopfLayer::hopf_axiom_check(const IsoClass& L) {
  Tensor d = comultiply(u(L));
  ExtendedElement lhs(q());
  for (auto& [k, c] : d.terms()) {
    ExtendedElement a(q()), b(q());
    a.add({k[0]}, Coeff::one(q()));
    b.add({k[1]}, c);
    lhs = lhs + multiply(antipode(a), b);
  }
  ExtendedElement rhs(q());
  if (L.is_zero()) rhs = one();
  return lhs == rhs;
}

bool HopfLayer::green_compatibility_check(const IsoClass& M, const IsoClass& N) {
  ExtendedElement mn = multiply(u(M), u(N));
  bool extended = comultiply(mn) == tensor_multiply(comultiply(u(M)), comultiply(u(N)));

  // K-free form: Delta'(u_l) = sum v^{<a,b>} (a_a a_b/a_l) g u_a (x) u_b with
  // (a (x) b)(c (x) d) = v^{(|b|,|c|)} ac (x) bd.
  auto strip = [&](const Tensor& t) {
    Tensor r(q());
    for (auto& [k, c] : t.terms())
      r.add({ExtKey{zero_mu(), k[0].cls}, ExtKey{zero_mu(), k[1].cls}}, c * A_.v(sym(k[1].cls.dim().v, k[0].cls.dim().v)));
    return r;
  };
  auto twisted = [&](const Tensor& x, const Tensor& y) {
    Tensor r(q());
    for (auto& [kx, cx] : x.terms())
      for (auto& [ky, cy] : y.terms()) {
        Coeff c = cx * cy * A_.v(sym(kx[1].cls.dim().v, ky[0].cls.dim().v));
        HallElement p0 = A_.basis_product(kx[0].cls, ky[0].cls);
        HallElement p1 = A_.basis_product(kx[1].cls, ky[1].cls);
        for (auto& [a, ca] : p0.terms())
          for (auto& [b, cb] : p1.terms()) r.add({ExtKey{zero_mu(), a}, ExtKey{zero_mu(), b}}, c * ca * cb);
      }
    return r;
  };
  bool kfree = strip(comultiply(mn)) == twisted(strip(comultiply(u(M))), strip(comultiply(u(N))));
  return extended && kfree;
}

bool HopfLayer::pairing_check(int max_total) {
  HallContext& ctx = A_.context();
  HallNumbers& H = A_.numbers();
  auto cls = classes_of_total(ctx, max_total);
  for (const auto& a : cls)
    for (const auto& b : cls) {
      if (a.dim().total() + b.dim().total() > max_total) continue;
      ExtendedElement ab = multiply(u(a), u(b));
      for (const auto& L : ctx.classes(a.dim() + b.dim())) {
        Coeff lhs = pairing(ab, u(L));
        std::uint64_t g = H.hall_number(L, a, b);
        mpq_class w(mpz_class(a.aut() * b.aut()) * g, L.aut());
        w.canonicalize();
        Coeff rhs = from_mpq(q(), w) * A_.v(ctx.quiver().euler_form(a.dim(), b.dim())) * pairing(u(a), u(a)) *
                    pairing(u(b), u(b));
        if (lhs != rhs) return false;
      }
    }
  return true;
}

VMode select_vmode(int q, int max_total) {
  auto Q = Quiver::from_json(R"({"vertices":["1","2"],"arrows":[["a","1","2"]]})");
  for (VMode m : {VMode::QPowDim, VMode::OrbitSize}) {
    HallContext ctx(Q, Field::make(q));
    HallNumbers H(ctx);
    HallAlgebra A(H);
    HopfLayer L(A, m);
    if (L.pairing_check(max_total)) return m;
  }
  throw TheoryViolation("no |V| reading satisfies the pairing check");
}

std::vector<IsoClass> classes_of_total(HallContext& ctx, int n) {
  int k = ctx.quiver().num_vertices();
  std::vector<IsoClass> out;
  std::vector<int> cur(k, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == k) {
      for (const auto& c : ctx.classes(DimVector(cur))) out.push_back(c);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[i] = x;
      rec(i + 1, left - x);
    }
    cur[i] = 0;
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HallElement> orthogonal_complement(HopfLayer& Hl, TameStructure& T, const DimVector& degree) {
  HallAlgebra& A = Hl.algebra();
  GeneratedSubalgebra R(A, rational_generators(A, T, degree));
  GeneratedSubalgebra C(A, composition_generators(A));
  const auto& rb = R.basis(degree);
  const auto& cb = C.basis(degree);
  if (rb.empty()) return {};
  auto lift = [&](const HallElement& x) {
    ExtendedElement e(A.q());
    for (auto& [L, c] : x.terms()) e.add({ExtKey{std::vector<int>(degree.size(), 0), L}}, c);
    return e;
  };
  std::vector<std::vector<Coeff>> gram;
  for (const auto& c : cb) {
    std::vector<Coeff> row;
    for (const auto& r : rb) row.push_back(Hl.pairing(lift(r), lift(c)));
    gram.push_back(row);
  }
  std::vector<HallElement> out;
  for (const auto& x : nullspace(gram, static_cast<int>(rb.size()), A.q())) {
    HallElement e(A.q());
    for (size_t i = 0; i < rb.size(); ++i) e = e + rb[i] * x[i];
    out.push_back(e);
  }
  return out;
}

}  // namespace hallq
