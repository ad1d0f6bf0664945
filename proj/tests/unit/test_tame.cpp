#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "hallq/errors.hpp"
#include "hallq/tame.hpp"

using namespace hallq;
using fx::dv;

namespace {
std::set<std::set<std::vector<int>>> tube_sets(const std::vector<std::vector<DimVector>>& t) {
  std::set<std::set<std::vector<int>>> out;
  for (auto& tube : t) {
    std::set<std::vector<int>> s;
    for (auto& d : tube) s.insert(d.v);
    out.insert(s);
  }
  return out;
}

QuiverPtr d5() {
  return Quiver::from_json(
      R"({"vertices":["1","2","3","4","5","6"],"arrows":[["a","1","3"],["b","2","3"],["c","3","4"],["d","5","4"],["e","6","4"]]})");
}
QuiverPtr e7() {
  return Quiver::from_json(
      R"({"vertices":["1","2","3","4","5","6","7","8"],"arrows":[["a","1","2"],["b","2","3"],["c","3","4"],["d","5","4"],["e","6","5"],["f","7","6"],["g","8","4"]]})");
}
QuiverPtr e8() {
  return Quiver::from_json(
      R"({"vertices":["1","2","3","4","5","6","7","8","9"],"arrows":[["a","1","2"],["b","2","3"],["c","3","4"],["d","4","5"],["e","5","6"],["f","7","6"],["g","8","7"],["h","9","6"]]})");
}
QuiverPtr a22() {
  return Quiver::from_json(R"({"vertices":["1","2","3","4"],"arrows":[["a","1","2"],["b","2","3"],["c","1","4"],["d","4","3"]]})");
}
}  // namespace

TEST_CASE("recognize_tame") {
  auto t = recognize_tame(*fx::a21());
  REQUIRE(t);
  CHECK(t->family == TameFamily::A);
  CHECK(t->l == 1);
  CHECK(t->periods == std::vector<int>{2});
  CHECK(t->delta == dv({1, 1, 1}));
  auto k = recognize_tame(*fx::kronecker());
  REQUIRE(k);
  CHECK(k->l == 0);
  CHECK(k->delta == dv({1, 1}));
  auto d = recognize_tame(*fx::d4());
  REQUIRE(d);
  CHECK(d->family == TameFamily::D);
  CHECK(d->l == 3);
  CHECK(d->periods == std::vector<int>{2, 2, 2});
  CHECK(d->delta == dv({1, 1, 2, 1, 1}));
  auto e = recognize_tame(*fx::e6());
  REQUIRE(e);
  CHECK(e->family == TameFamily::E6);
  CHECK(e->periods == std::vector<int>{2, 3, 3});
  CHECK(e->delta == dv({1, 2, 3, 2, 1, 2, 1}));
  CHECK_FALSE(recognize_tame(*fx::a2()));
  CHECK_FALSE(recognize_tame(*fx::a3()));
  auto d5t = recognize_tame(*d5());
  REQUIRE(d5t);
  CHECK(d5t->periods == std::vector<int>{2, 2, 3});
  CHECK(d5t->delta == dv({1, 1, 2, 2, 1, 1}));
  auto e7t = recognize_tame(*e7());
  REQUIRE(e7t);
  CHECK(e7t->family == TameFamily::E7);
  CHECK(e7t->delta == dv({1, 2, 3, 4, 3, 2, 1, 2}));
  auto e8t = recognize_tame(*e8());
  REQUIRE(e8t);
  CHECK(e8t->family == TameFamily::E8);
  CHECK(e8t->delta == dv({1, 2, 3, 4, 5, 6, 4, 2, 3}));
  auto a = recognize_tame(*a22());
  REQUIRE(a);
  CHECK(a->params == std::vector<int>{2, 2});
  CHECK(a->l == 2);
  for (auto Q : {fx::a21(), fx::kronecker(), fx::d4(), fx::e6(), d5(), e7(), e8(), a22()}) {
    auto tt = recognize_tame(*Q);
    REQUIRE(tt);
    int s = 0;
    for (int r : tt->periods) s += r - 1;
    CHECK(s == Q->num_vertices() - 2);
    for (int i = 0; i < Q->num_vertices(); ++i) CHECK(Q->symmetric_form(tt->delta, DimVector::unit(Q->num_vertices(), i)) == 0);
    CHECK(tt->delta[tt->extending_vertex] == 1);
  }
  auto disc = Quiver::from_json(R"({"vertices":["1","2"],"arrows":[]})");
  CHECK_THROWS_AS(recognize_tame(*disc), InputError);
}

TEST_CASE("regular simple tables") {
  auto F = Field::make(2);
  {
    HallContext ctx(fx::d4(), F);
    TameStructure T(ctx);
    std::set<std::set<std::vector<int>>> want = {
        {{1, 0, 1, 1, 0}, {0, 1, 1, 0, 1}}, {{1, 0, 1, 0, 1}, {0, 1, 1, 1, 0}}, {{1, 1, 1, 0, 0}, {0, 0, 1, 1, 1}}};
    CHECK(tube_sets(T.regular_simples()) == want);
  }
  {
    HallContext ctx(fx::e6(), F);
    TameStructure T(ctx);
    std::set<std::set<std::vector<int>>> want = {
        {{1, 1, 2, 1, 1, 1, 1}, {0, 1, 1, 1, 0, 1, 0}},
        {{1, 1, 1, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 1, 1}, {0, 0, 1, 1, 1, 1, 0}},
        {{1, 1, 1, 0, 0, 1, 0}, {0, 1, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 0, 1, 1}}};
    CHECK(tube_sets(T.regular_simples()) == want);
  }
  for (auto Q : {fx::a21(), fx::d4(), fx::e6(), d5(), e7(), e8(), a22()}) {
    HallContext ctx(Q, F);
    TameStructure T(ctx);
    for (auto& tube : T.regular_simples()) {
      DimVector s = DimVector::zero(Q->num_vertices());
      for (auto& d : tube) {
        s = s + d;
        CHECK(T.defect(d) == 0);
        CHECK(T.coxeter(T.coxeter_inverse(d)) == d);
      }
      CHECK(s == T.type().delta);
    }
  }
  HallContext k(fx::kronecker(), F);
  CHECK(TameStructure(k).regular_simples().empty());
}

TEST_CASE("defect and classification") {
  auto F = Field::make(2);
  HallContext k(fx::kronecker(), F);
  TameStructure K(k);
  CHECK(K.defect(dv({0, 1})) == -1);
  CHECK(K.defect(dv({1, 0})) == 1);
  CHECK(K.defect(dv({1, 1})) == 0);
  for (const auto& R : k.indecomposables(dv({1, 1}))) {
    auto s = K.classify_indecomposable(R);
    CHECK(s.part == Part::Regular);
    CHECK(s.tube == -1);
    CHECK(s.slot >= 1);
  }
  CHECK(K.homogeneous_mouths().size() == 3);
  CHECK(K.classify(k.simple(1)).part == Part::Preprojective);
  CHECK(K.classify(k.simple(0)).part == Part::Preinjective);

  HallContext a(fx::a21(), F);
  TameStructure A(a);
  REQUIRE(A.regular_simples().size() == 1);
  for (int i = 0; i < 2; ++i) {
    auto s = A.classify_indecomposable(A.regular_simple(0, i));
    CHECK(s.part == Part::Regular);
    CHECK(s.tube == 0);
    CHECK(s.socle == i);
    CHECK(s.length == 1);
  }
  for (int v = 0; v < 3; ++v) {
    auto P = a.classify(Representation::projective(a.quiver_ptr(), a.field_ptr(), v));
    CHECK(A.classify(P).part == Part::Preprojective);
    auto I = a.classify(Representation::injective(a.quiver_ptr(), a.field_ptr(), v));
    CHECK(A.classify(I).part == Part::Preinjective);
  }
  CHECK(A.homogeneous_mouths().size() == 2);
  // Tube positions and homogeneous slots round-trip.
  for (int s = 0; s < 2; ++s)
    for (int len = 1; len <= 3; ++len) {
      auto X = A.tube_module(0, s, len);
      auto info = A.classify_indecomposable(X);
      CHECK(info.socle == s);
      CHECK(info.length == len);
    }
  for (int slot = 1; slot <= 2; ++slot)
    for (int len = 1; len <= 2; ++len) {
      auto X = A.homogeneous_module(slot, len);
      auto info = A.classify_indecomposable(X);
      CHECK(info.slot == slot);
      CHECK(info.length == len);
    }
  CHECK_THROWS_AS(A.homogeneous_module(3, 1), InputError);
}

TEST_CASE("hom and ext vanishing between parts") {
  for (auto Q : {fx::kronecker(), fx::a21()}) {
    HallContext ctx(Q, Field::make(2));
    TameStructure T(ctx);
    std::vector<IsoClass> P, R, I;
    int n = Q->num_vertices();
    std::function<void(int, DimVector)> rec = [&](int i, DimVector cur) {
      if (i == n) {
        if (cur.is_zero()) return;
        for (const auto& X : ctx.indecomposables(cur)) {
          auto s = T.classify_indecomposable(X);
          (s.part == Part::Preprojective ? P : s.part == Part::Regular ? R : I).push_back(X);
        }
        return;
      }
      for (int k = 0; k <= 2; ++k) {
        cur[i] = k;
        rec(i + 1, cur);
      }
    };
    rec(0, DimVector::zero(n));
    CHECK(!P.empty());
    CHECK(!R.empty());
    CHECK(!I.empty());
    auto he = [&](const IsoClass& a, const IsoClass& b) { return hom_ext_dims(a.rep(), b.rep()); };
    for (auto& p : P)
      for (auto& r : R) {
        CHECK(he(r, p).hom == 0);
        CHECK(he(p, r).ext == 0);
      }
    for (auto& r : R)
      for (auto& i : I) {
        CHECK(he(i, r).hom == 0);
        CHECK(he(r, i).ext == 0);
      }
    for (auto& p : P)
      for (auto& i : I) {
        CHECK(he(i, p).hom == 0);
        CHECK(he(p, i).ext == 0);
      }
    // Different tubes: Hom = Ext = 0.
    for (auto& x : R)
      for (auto& y : R) {
        auto sx = T.classify_indecomposable(x), sy = T.classify_indecomposable(y);
        bool same = sx.tube >= 0 ? sx.tube == sy.tube : (sy.tube < 0 && sx.mouth == sy.mouth);
        if (same) continue;
        CHECK(he(x, y).hom == 0);
        CHECK(he(x, y).ext == 0);
      }
    // Defect sign agrees with the Hom criterion against the regular simples
    // and homogeneous mouths: preprojectives receive no maps from regulars.
    for (auto& p : P) CHECK(T.defect(p.dim()) < 0);
    for (auto& i : I) CHECK(T.defect(i.dim()) > 0);
  }
}
