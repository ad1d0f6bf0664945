#include "hallq/hall_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hallq/errors.hpp"
#include "hallq/hall_numbers.hpp"
#include "hallq/tame.hpp"

namespace hallq {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<int> int_args(const std::string& inner, size_t want, const std::string& whole) {
  std::vector<int> out;
  std::stringstream ss(inner);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(trim(tok)));
    } catch (...) {
      throw InputError("bad integer in " + whole);
    }
  }
  if (out.size() != want) throw InputError("wrong argument count in " + whole);
  return out;
}

SpecTerm parse_term(std::string t) {
  SpecTerm st;
  t = trim(t);
  if (t.empty()) throw InputError("empty module term");
  auto star = t.find('*');
  if (star != std::string::npos) {
    try {
      st.mult = std::stoi(trim(t.substr(0, star)));
    } catch (...) {
      throw InputError("bad multiplicity in " + t);
    }
    if (st.mult < 0) throw InputError("negative multiplicity in " + t);
    t = trim(t.substr(star + 1));
  }
  auto paren = [&](const std::string& head) -> std::string {
    if (t.rfind(head + "(", 0) != 0 || t.back() != ')') return {};
    return t.substr(head.size() + 1, t.size() - head.size() - 2);
  };
  if (t == "0") {
    st.kind = SpecTerm::Zero;
  } else if (t.rfind("root(", 0) == 0) {
    st.kind = SpecTerm::Root;
    st.dim = paren("root");
  } else if (t.rfind("tube(", 0) == 0) {
    st.kind = SpecTerm::Tube;
    auto a = int_args(paren("tube"), 3, t);
    st.a = a[0], st.b = a[1], st.c = a[2];
  } else if (t.rfind("hom(", 0) == 0) {
    st.kind = SpecTerm::Homogeneous;
    auto a = int_args(paren("hom"), 2, t);
    st.a = a[0], st.c = a[1];
  } else if (t.size() > 1 && (t[0] == 'S' || t[0] == 'P' || t[0] == 'I')) {
    st.kind = t[0] == 'S' ? SpecTerm::Simple : t[0] == 'P' ? SpecTerm::Projective : SpecTerm::Injective;
    st.vertex = t.substr(1);
  } else {
    throw InputError("unknown module term " + t);
  }
  return st;
}

}  // namespace

ModuleSpec ModuleSpec::parse(const std::string& s) {
  ModuleSpec m;
  m.text = trim(s);
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      m.terms.push_back(parse_term(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw InputError("unbalanced parentheses in " + s);
  m.terms.push_back(parse_term(cur));
  return m;
}

bool ModuleSpec::needs_tame() const {
  for (auto& t : terms)
    if (t.kind == SpecTerm::Tube || t.kind == SpecTerm::Homogeneous) return true;
  return false;
}

IsoClass instantiate(const ModuleSpec& spec, HallContext& ctx, TameStructure* T) {
  if (spec.needs_tame() && !T) throw InputError("tube terms need a tame quiver: " + spec.text);
  const Quiver& Q = ctx.quiver();
  std::vector<IsoClass> parts;
  for (const auto& t : spec.terms) {
    IsoClass X;
    switch (t.kind) {
      case SpecTerm::Zero:
        continue;
      case SpecTerm::Simple:
        X = ctx.simple(Q.vertex_index(t.vertex));
        break;
      case SpecTerm::Projective:
        X = ctx.classify(Representation::projective(ctx.quiver_ptr(), ctx.field_ptr(), Q.vertex_index(t.vertex)));
        break;
      case SpecTerm::Injective:
        X = ctx.classify(Representation::injective(ctx.quiver_ptr(), ctx.field_ptr(), Q.vertex_index(t.vertex)));
        break;
      case SpecTerm::Root: {
        DimVector d = Q.parse_dim(t.dim);
        auto ind = ctx.indecomposables(d);
        if (ind.size() != 1)
          throw InputError("root(" + t.dim + ") has " + std::to_string(ind.size()) + " indecomposables, not one");
        X = ind[0];
        break;
      }
      case SpecTerm::Tube: {
        int nt = static_cast<int>(T->regular_simples().size());
        if (t.a < 1 || t.a > nt) throw InputError("no tube " + std::to_string(t.a));
        X = T->tube_module(t.a - 1, t.b - 1, t.c);
        break;
      }
      case SpecTerm::Homogeneous:
        X = T->homogeneous_module(t.a, t.c);
        break;
    }
    for (int k = 0; k < t.mult; ++k) parts.push_back(X);
  }
  IsoClass M = ctx.zero_class();
  for (const auto& X : parts) M = ctx.direct_sum(M, X);
  // the summands must be what was asked for
  std::vector<IsoClass> want;
  for (const auto& X : parts)
    for (const auto& s : X.summands()) want.push_back(s);
  auto got = ctx.decompose(M.rep());
  auto uid_sort = [](std::vector<IsoClass>& v) {
    std::sort(v.begin(), v.end(), [](const IsoClass& a, const IsoClass& b) { return a.uid() < b.uid(); });
  };
  uid_sort(want);
  uid_sort(got);
  bool same = want.size() == got.size();
  for (size_t i = 0; same && i < want.size(); ++i) same = want[i].uid() == got[i].uid();
  if (!same) throw ValidationFailure("instantiated module " + spec.text + " has unexpected summands");
  return M;
}

std::vector<mpq_class> interpolate(const std::vector<std::pair<int, mpz_class>>& pts) {
  size_t n = pts.size();
  // Newton divided differences
  std::vector<mpq_class> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = pts[i].second;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / mpq_class(pts[i].first - pts[i - j].first);
      if (i == j) break;
    }
  std::vector<mpq_class> c(n, 0);
  for (size_t k = n; k-- > 0;) {
    // c = c * (x - x_k) + dd[k]
    std::vector<mpq_class> nc(n, 0);
    for (size_t i = 0; i + 1 < n; ++i) nc[i + 1] += c[i];
    for (size_t i = 0; i < n; ++i) nc[i] -= c[i] * pts[k].first;
    nc[0] += dd[k];
    c = nc;
  }
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

mpq_class HallPolynomial::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (size_t i = coefficients.size(); i-- > 0;) r = r * x + coefficients[i];
  return r;
}

std::string HallPolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = coefficients.size(); i-- > 0;) {
    const mpq_class& c = coefficients[i];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (!first) os << (c < 0 ? "-" : "+");
    else if (c < 0) os << "-";
    first = false;
    bool unit = a == 1 && i > 0;
    if (!unit) os << a.get_str();
    if (i > 0) os << (unit ? "" : "*") << "x";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

nlohmann::json HallPolynomial::to_json() const {
  nlohmann::json j;
  j["specs"] = specs;
  j["primes"] = primes;
  nlohmann::json pts = nlohmann::json::array();
  for (auto& [q, g] : points) pts.push_back({q, g.get_str()});
  j["points"] = pts;
  nlohmann::json cs = nlohmann::json::array();
  for (auto& c : coefficients) cs.push_back(c.get_str());
  j["coefficients"] = cs;
  j["polynomial"] = str();
  j["validation_prime"] = validation;
  j["status"] = status;
  return j;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

HallPolynomial fit_polynomial(const Evaluator& f, std::vector<int> primes, int validation, int max_prime) {
  if (primes.empty()) throw InputError("no primes given");
  if (std::find(primes.begin(), primes.end(), validation) != primes.end())
    throw InputError("validation prime is also a fitting prime");
  HallPolynomial hp;
  hp.validation = validation;
  std::vector<std::pair<int, mpz_class>> pts;
  auto value_at = [&](size_t i) -> const std::pair<int, mpz_class>& {
    while (pts.size() <= i) {
      if (pts.size() == primes.size()) {
        int p = primes.back() + 1;
        while (!is_prime(p) || p == validation) ++p;
        if (p > max_prime) {
          hp.points = pts;
          hp.primes = primes;
          hp.status = "validation failure";
          throw ValidationFailure("no polynomial fit up to prime " + std::to_string(max_prime) + ": " +
                                  hp.to_json().dump());
        }
        primes.push_back(p);
      }
      int q = primes[pts.size()];
      pts.emplace_back(q, f(q));
    }
    return pts[i];
  };
  std::pair<int, mpz_class> held{validation, 0};
  bool have_held = false;
  for (size_t k = 1;; ++k) {
    value_at(k + 1);
    std::vector<std::pair<int, mpz_class>> fit(pts.begin(), pts.begin() + k);
    hp.coefficients = interpolate(fit);
    bool ok = hp.eval(pts[k].first) == pts[k].second && hp.eval(pts[k + 1].first) == pts[k + 1].second;
    if (!ok) continue;
    if (!have_held) {
      held.second = f(validation);
      have_held = true;
    }
    if (hp.eval(validation) != held.second) continue;
    // refit through every measured point so the record covers them all
    hp.coefficients = interpolate(pts);
    break;
  }
  primes.resize(pts.size());
  hp.primes = primes;
  hp.points = pts;
  hp.points.push_back(held);
  for (auto& c : hp.coefficients)
    if (c.get_den() != 1) {
      hp.status = "integrality violation";
      throw ValidationFailure("non-integer Hall polynomial coefficient: " + hp.to_json().dump());
    }
  hp.status = "ok";
  return hp;
}

Evaluator hall_evaluator(QuiverPtr Q, const std::string& x3, const std::vector<std::string>& factors,
                         const Guards& guards, HallCache* cache) {
  ModuleSpec L = ModuleSpec::parse(x3);
  std::vector<ModuleSpec> fs;
  for (auto& s : factors) fs.push_back(ModuleSpec::parse(s));
  bool tame = L.needs_tame();
  for (auto& s : fs) tame |= s.needs_tame();
  return [=](int q) -> mpz_class {
    HallContext ctx(Q, Field::make(q), guards);
    std::unique_ptr<TameStructure> T;
    if (tame) T = std::make_unique<TameStructure>(ctx);
    IsoClass X = instantiate(L, ctx, T.get());
    std::vector<IsoClass> parts;
    for (auto& s : fs) parts.push_back(instantiate(s, ctx, T.get()));
    HallNumbers H(ctx, cache);
    if (parts.size() == 2) return mpz_class(std::to_string(H.hall_number(X, parts[0], parts[1])));
    return H.iterated(X, parts);
  };
}

}  // namespace hallq
