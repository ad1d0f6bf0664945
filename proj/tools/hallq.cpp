// hallq: command line front end.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "hallq/cache.hpp"
#include "hallq/errors.hpp"
#include "hallq/hall_poly.hpp"
#include "hallq/hopf.hpp"
#include "hallq/orders.hpp"
#include "hallq/pbw.hpp"
#include "hallq/tame.hpp"

using namespace hallq;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string quiver;
  int q = 2;
  Guards guards;
  std::string cache_dir;
  bool no_cache = false;
  std::string format = "text";
  int threads = 0;
  bool serial = false;
};

// Rows of strings; `quoted` marks label columns, always quoted in CSV.
struct Table {
  std::vector<std::string> head;
  std::vector<bool> quoted;
  std::vector<std::vector<std::string>> rows;
  json meta = json::object();

  void emit(const std::string& fmt, std::ostream& os) const {
    if (fmt == "json") {
      json j = meta;
      json rs = json::array();
      for (auto& r : rows) {
        json o = json::object();
        for (size_t i = 0; i < head.size(); ++i) o[head[i]] = r[i];
        rs.push_back(o);
      }
      j["rows"] = rs;
      os << j.dump(2) << "\n";
    } else if (fmt == "csv") {
      auto cell = [&](const std::string& s, bool q) {
        bool need = q || s.find_first_of(",\"\r\n") != std::string::npos;
        if (!need) return s;
        std::string o = "\"";
        for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
        return o + "\"";
      };
      for (size_t i = 0; i < head.size(); ++i) os << (i ? "," : "") << cell(head[i], false);
      os << "\r\n";
      for (auto& r : rows) {
        for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell(r[i], i < quoted.size() && quoted[i]);
        os << "\r\n";
      }
    } else {
      std::vector<size_t> w(head.size());
      for (size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
      for (auto& r : rows)
        for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
      auto line = [&](const std::vector<std::string>& r) {
        for (size_t i = 0; i < r.size(); ++i) {
          os << r[i];
          if (i + 1 < r.size()) os << std::string(w[i] - r[i].size() + 2, ' ');
        }
        os << "\n";
      };
      line(head);
      for (auto& r : rows) line(r);
    }
  }
};

// One-line results: text prints `text`, json prints the object, csv a
// key,value table.
void emit_record(const std::string& fmt, const std::string& text, const json& j) {
  if (fmt == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    Table t;
    t.head = {"key", "value"};
    for (auto& [k, v] : j.items()) t.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
    t.emit("csv", std::cout);
  } else {
    std::cout << text << "\n";
  }
}

struct Session {
  RunConfig cfg;
  QuiverPtr Q;
  std::unique_ptr<HallContext> ctx;
  std::unique_ptr<HallCache> cache;
  std::unique_ptr<HallNumbers> H;
  std::unique_ptr<HallAlgebra> A;
  std::unique_ptr<TameStructure> T;

  void open() {
    if (cfg.q < 2) throw InputError("q must be at least 2");
    if (cfg.guards.enum_log2 <= 0 || cfg.guards.hom_log2 <= 0) throw InputError("guards must be positive");
    if (cfg.quiver.empty()) throw InputError("--quiver is required");
    Q = Quiver::from_file(cfg.quiver);
    ctx = std::make_unique<HallContext>(Q, Field::make(cfg.q), cfg.guards);
    if (!cfg.no_cache) cache = std::make_unique<HallCache>(cfg.cache_dir.empty() ? HallCache::default_dir() : std::filesystem::path(cfg.cache_dir));
    H = std::make_unique<HallNumbers>(*ctx, cache.get());
    A = std::make_unique<HallAlgebra>(*H);
  }
  TameStructure& tame() {
    if (!T) T = std::make_unique<TameStructure>(*ctx);
    return *T;
  }
  IsoClass module(const std::string& s) {
    ModuleSpec m = ModuleSpec::parse(s);
    return instantiate(m, *ctx, m.needs_tame() ? &tame() : nullptr);
  }
  json meta() const { return json{{"quiver", cfg.quiver}, {"q", cfg.q}}; }
};

std::string summands_str(const IsoClass& X) {
  std::string s;
  for (auto& c : X.summands()) s += (s.empty() ? "" : "+") + c.dim().str();
  return s.empty() ? "0" : s;
}

Table element_table(const HallElement& x) {
  Table t;
  t.head = {"class", "dim", "coeff"};
  t.quoted = {true, false, false};
  for (auto& [L, c] : x.sorted()) t.rows.push_back({L.label(), L.dim().str(), c.str()});
  return t;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (...) {
      throw InputError("bad integer list: " + s);
    }
  }
  return out;
}

std::vector<std::string> split_semicolons(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) out.push_back(tok);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall algebras of quivers over finite fields"};
  app.require_subcommand(1);
  Session S;
  RunConfig& c = S.cfg;
  app.add_option("--quiver", c.quiver, "quiver JSON file");
  app.add_option("--q", c.q, "field size (prime power)");
  app.add_option("--enum-guard", c.guards.enum_log2, "log2 bound on brute enumeration");
  app.add_option("--hom-guard", c.guards.hom_log2, "log2 bound on Hom scans");
  app.add_option("--cache-dir", c.cache_dir, "Hall number cache directory");
  app.add_flag("--no-cache", c.no_cache, "do not read or write the cache");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", c.threads, "OpenMP threads (0: default)");
  app.add_flag("--serial", c.serial, "use the serial reference kernels");

  std::string dim_s, rep_s, deg_s;
  std::vector<std::string> mods;
  int n = 1;
  bool untwisted = false;
  std::string primes_s = "2,3,5,7", spec3;
  int validate = 11, max_prime = 31;

  auto* enumerate = app.add_subcommand("enumerate", "iso-classes of a dimension vector");
  enumerate->add_option("dim", dim_s)->required();
  auto* hallnum = app.add_subcommand("hallnum", "g^L_{M N ...} for module specs");
  hallnum->add_option("modules", mods)->required()->expected(3, -1);
  auto* product = app.add_subcommand("product", "u_X * u_Y");
  product->add_option("modules", mods)->required()->expected(2, -1);
  auto* serre = app.add_subcommand("serre", "quantum Serre relations for every vertex pair");
  serre->add_flag("--untwisted", untwisted, "drop the Euler-form twist (negative control)");
  auto* ecomp = app.add_subcommand("e-components", "E_{n delta,1/2/3}");
  ecomp->add_option("n", n)->required();
  auto* pbw = app.add_subcommand("pbw-rank", "rank of the PBW set at a degree");
  pbw->add_option("degree", deg_s)->required();
  auto* hallpoly = app.add_subcommand("hallpoly", "fit a Hall polynomial; specs as \"X3;X1;X2\"");
  hallpoly->add_option("spec3", spec3)->required();
  hallpoly->add_option("--primes", primes_s, "fitting primes");
  hallpoly->add_option("--validate", validate, "held-out prime");
  hallpoly->add_option("--max-prime", max_prime, "largest prime added when refitting");
  auto* hopf = app.add_subcommand("hopf-check", "Hopf axioms on classes of total dimension <= bound");
  hopf->add_option("bound", n)->required();
  auto* orders = app.add_subcommand("orders", "ext order against hom order at a dimension vector");
  orders->add_option("dim", dim_s)->required();
  auto* classify = app.add_subcommand("classify", "classify a representation (JSON text or file)");
  classify->add_option("rep", rep_s)->required();
  auto* gap = app.add_subcommand("graded-gap", "rational minus composition dimension at n delta");
  gap->add_option("n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  const std::string& fmt = c.format;
  try {
    if (c.serial) set_parallel(false);
    if (c.threads > 0) set_threads(c.threads);
    S.open();
    HallContext& ctx = *S.ctx;
    const Quiver& Q = *S.Q;

    if (*enumerate) {
      DimVector d = Q.parse_dim(dim_s);
      Table t;
      t.meta = S.meta();
      t.head = {"class", "dim", "summands", "end", "orbit_dim", "aut"};
      t.quoted = {true};
      mpq_class mass = 0;
      for (auto& X : ctx.classes(d)) {
        t.rows.push_back({X.label(), X.dim().str(), summands_str(X), std::to_string(X.end_dim()),
                          std::to_string(X.orbit_dim()), X.aut().get_str()});
        mpq_class t(group_order(c.q, d), X.aut());
        t.canonicalize();
        mass += t;
      }
      t.meta["classes"] = t.rows.size();
      t.meta["mass"] = mass.get_str();
      t.meta["q_pow_dim_E"] = qpow(c.q, Q.rep_space_dim(d)).get_str();
      t.emit(fmt, std::cout);
    } else if (*hallnum) {
      IsoClass L = S.module(mods[0]);
      std::vector<IsoClass> parts;
      for (size_t i = 1; i < mods.size(); ++i) parts.push_back(S.module(mods[i]));
      mpz_class g = parts.size() == 2 ? mpz_class(std::to_string(S.H->hall_number(L, parts[0], parts[1])))
                                      : S.H->iterated(L, parts);
      json j = S.meta();
      j["L"] = L.label();
      json f = json::array();
      for (auto& p : parts) f.push_back(p.label());
      j["factors"] = f;
      j["g"] = g.get_str();
      emit_record(fmt, g.get_str(), j);
    } else if (*product) {
      HallElement x = S.A->u(S.module(mods[0]));
      for (size_t i = 1; i < mods.size(); ++i) x = S.A->product(x, S.A->u(S.module(mods[i])));
      Table t = element_table(x);
      t.meta = S.meta();
      t.emit(fmt, std::cout);
    } else if (*serre) {
      HallAlgebra U(*S.H, !untwisted);
      HallAlgebra& A = untwisted ? U : *S.A;
      int pairs = 0;
      std::vector<std::string> bad;
      for (int i = 0; i < Q.num_vertices(); ++i)
        for (int j = 0; j < Q.num_vertices(); ++j) {
          if (i == j) continue;
          ++pairs;
          if (!serre_check(A, i, j)) bad.push_back(Q.vertices()[i] + "," + Q.vertices()[j]);
        }
      std::string text = bad.empty() ? "PASS (" + std::to_string(pairs) + " vertex pairs)"
                                     : "FAIL (" + std::to_string(bad.size()) + " of " + std::to_string(pairs) +
                                           " vertex pairs)";
      json j = S.meta();
      j["pairs"] = pairs;
      j["failing"] = bad;
      j["status"] = bad.empty() ? "PASS" : "FAIL";
      emit_record(fmt, text, j);
      if (!bad.empty()) return kExitValidation;
    } else if (*ecomp) {
      auto E = e_delta_components(*S.A, S.tame(), n);
      Table t;
      t.meta = S.meta();
      t.meta["n"] = n;
      t.head = {"component", "class", "summands", "coeff"};
      t.quoted = {false, true};
      int k = 1;
      for (auto* e : {&E.e1, &E.e2, &E.e3}) {
        for (auto& [L, cf] : e->sorted()) t.rows.push_back({"E" + std::to_string(k), L.label(), summands_str(L), cf.str()});
        ++k;
      }
      t.emit(fmt, std::cout);
    } else if (*pbw) {
      DimVector d = Q.parse_dim(deg_s);
      auto ms = pbw_members(*S.A, S.tame(), d);
      std::vector<HallElement> vals;
      for (auto& m : ms) vals.push_back(m.value);
      int r = graded_rank(ctx, vals, d);
      int dim = subalgebra_graded_dim(*S.A, rational_generators(*S.A, S.tame(), d), d);
      bool ok = r == static_cast<int>(ms.size()) && r == dim;
      json j = S.meta();
      j["degree"] = d.v;
      j["members"] = ms.size();
      j["rank"] = r;
      j["rational_dim"] = dim;
      j["status"] = ok ? "PASS" : "FAIL";
      emit_record(fmt,
                  std::string(ok ? "PASS" : "FAIL") + " (" + std::to_string(ms.size()) + " members, rank " +
                      std::to_string(r) + ", rational piece " + std::to_string(dim) + ")",
                  j);
      if (!ok) return kExitValidation;
    } else if (*hallpoly) {
      auto parts = split_semicolons(spec3);
      if (parts.size() < 3) throw InputError("hallpoly needs \"X3;X1;X2\"");
      std::vector<std::string> factors(parts.begin() + 1, parts.end());
      auto f = hall_evaluator(S.Q, parts[0], factors, c.guards, S.cache.get());
      HallPolynomial hp;
      try {
        hp = fit_polynomial(f, parse_ints(primes_s), validate, max_prime);
      } catch (const ValidationFailure& e) {
        json j{{"status", "validation failure"}, {"reason", e.what()}};
        std::cerr << j.dump() << "\n";
        return kExitValidation;
      }
      hp.specs = parts;
      json j = hp.to_json();
      j["quiver"] = c.quiver;
      j["slot_interpretation"] = "homogeneous summands are pinned to parameter slots";
      emit_record(fmt, hp.str(), j);
    } else if (*hopf) {
      VMode vm = select_vmode(c.q);
      HopfLayer L(*S.A, vm);
      auto cls = classes_of_total(ctx, n);
      int counit = 0, coassoc = 0, antipode = 0, green = 0, total = 0, pairs = 0;
      for (auto& X : cls) {
        ++total;
        counit += L.counit_check(X);
        coassoc += L.coassociativity_check(X);
        antipode += L.hopf_axiom_check(X);
      }
      for (auto& M : cls)
        for (auto& N : cls)
          if (M.dim().total() + N.dim().total() <= n) {
            ++pairs;
            green += L.green_compatibility_check(M, N);
          }
      bool ok = counit == total && coassoc == total && antipode == total && green == pairs;
      json j = S.meta();
      j["bound"] = n;
      j["classes"] = total;
      j["counit"] = counit;
      j["coassociativity"] = coassoc;
      j["antipode"] = antipode;
      j["green_pairs"] = pairs;
      j["green"] = green;
      j["V_reading"] = vmode_name(vm);
      j["status"] = ok ? "PASS" : "FAIL";
      std::ostringstream os;
      os << (ok ? "PASS" : "FAIL") << " (" << total << " classes, " << pairs << " Green pairs, |V| = " << vmode_name(vm)
         << ")";
      emit_record(fmt, os.str(), j);
      if (!ok) return kExitValidation;
    } else if (*orders) {
      DimVector d = Q.parse_dim(dim_s);
      DegenerationOrders D(ctx);
      auto r = orders_agree(D, d);
      if (fmt == "json") {
        json j = r.to_json(D);
        j["quiver"] = c.quiver;
        j["q"] = c.q;
        std::cout << j.dump(2) << "\n";
      } else {
        Table t;
        t.head = {"N", "M", "ext", "hom"};
        t.quoted = {true, true};
        for (size_t a = 0; a < r.classes.size(); ++a)
          for (size_t b = 0; b < r.classes.size(); ++b)
            t.rows.push_back({r.classes[a].label(), r.classes[b].label(), r.ext[a][b] ? "1" : "0", r.hom[a][b] ? "1" : "0"});
        t.emit(fmt, std::cout);
        if (fmt == "text")
          std::cout << (r.agree() ? "agree" : "disagree") << " on " << r.classes.size() * r.classes.size()
                    << " ordered pairs\n";
      }
    } else if (*classify) {
      std::string text = rep_s;
      if (!text.empty() && text[0] != '{') {
        std::ifstream in(text);
        if (!in) throw InputError("cannot read " + text);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      json rj;
      try {
        rj = json::parse(text);
      } catch (const json::exception& e) {
        throw InputError(std::string("bad representation json: ") + e.what());
      }
      Representation R = Representation::from_json(S.Q, ctx.field_ptr(), rj);
      IsoClass X = ctx.classify(R);
      Table t;
      t.meta = S.meta();
      t.meta["class"] = X.label();
      t.head = {"summand", "dim", "part", "defect", "tube", "position"};
      t.quoted = {true};
      std::optional<TameType> tt;
      try {
        tt = recognize_tame(Q);
      } catch (const InputError&) {
        // disconnected quivers get no tame data
      }
      for (auto& Y : X.summands()) {
        std::vector<std::string> row{Y.label(), Y.dim().str(), "", "", "", ""};
        if (tt) {
          auto info = S.tame().classify_indecomposable(Y);
          row[2] = part_name(info.part);
          row[3] = std::to_string(info.defect);
          if (info.part == Part::Regular) {
            if (info.tube >= 0) {
              row[4] = std::to_string(info.tube + 1);
              row[5] = "socle " + std::to_string(info.socle + 1) + " length " + std::to_string(info.length);
            } else {
              row[4] = "homogeneous";
              row[5] = "slot " + std::to_string(info.slot) + " length " + std::to_string(info.length);
            }
          }
        }
        t.rows.push_back(row);
      }
      t.emit(fmt, std::cout);
    } else if (*gap) {
      TameStructure& T = S.tame();
      DimVector d = T.type().delta * n;
      int g = graded_gap(*S.A, T, d);
      json j = S.meta();
      j["n"] = n;
      j["degree"] = d.v;
      j["gap"] = g;
      j["l"] = T.type().l;
      emit_record(fmt, "l = " + std::to_string(g), j);
    }
  } catch (const GuardExceeded& e) {
    std::cerr << json{{"error", "guard exceeded"}, {"reason", e.what()}}.dump() << "\n";
    return kExitGuard;
  } catch (const ValidationFailure& e) {
    std::cerr << json{{"error", "validation failure"}, {"reason", e.what()}}.dump() << "\n";
    return kExitValidation;
  } catch (const TheoryViolation& e) {
    std::cerr << json{{"error", "theory violation"}, {"reason", e.what()}}.dump() << "\n";
    return kExitValidation;
  } catch (const InputError& e) {
    std::cerr << json{{"error", "input"}, {"reason", e.what()}}.dump() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
