#include <doctest.h>

#include "hallq/errors.hpp"
#include "hallq/field.hpp"
#include "hallq/matrix.hpp"

using namespace hallq;

TEST_CASE("field axioms for prime and prime power orders") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128}) {
    CAPTURE(q);
    auto F = Field::make(q);
    REQUIRE(F->q() == q);
    for (int a = 0; a < q; ++a) {
      CHECK(F->add(a, 0) == a);
      CHECK(F->mul(a, 1) == a);
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a) CHECK(F->mul(a, F->inv(a)) == 1);
    }
    // Distributivity on a sample.
    for (int a = 0; a < q; a += 1 + q / 7)
      for (int b = 0; b < q; b += 1 + q / 5)
        for (int c = 0; c < q; c += 1 + q / 3)
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
    // The primitive element generates the multiplicative group.
    int x = 1, ord = 0;
    do {
      x = F->mul(x, F->primitive());
      ++ord;
    } while (x != 1);
    CHECK(ord == q - 1);
  }
}

TEST_CASE("field rejects non prime powers") {
  CHECK_THROWS_AS(Field::make(6), InputError);
  CHECK_THROWS_AS(Field::make(1), InputError);
  CHECK_THROWS_AS(Field::make(12), InputError);
  CHECK(prime_power(81) == std::pair<int, int>{3, 4});
}

TEST_CASE("characteristic of small extension fields") {
  auto F4 = Field::make(4);
  for (int a = 0; a < 4; ++a) CHECK(F4->add(a, a) == 0);
  auto F9 = Field::make(9);
  for (int a = 0; a < 9; ++a) CHECK(F9->add(F9->add(a, a), a) == 0);
}

TEST_CASE("rank, inverse and nullspace over F_3") {
  auto F = Field::make(3);
  Matrix A(3, 3);
  int v[] = {1, 2, 0, 0, 1, 1, 1, 0, 2};
  for (int i = 0; i < 9; ++i) A.a[i] = static_cast<Elem>(v[i]);
  // det = 1*(2-0) - 2*(0-1) + 0 = 4 = 1 mod 3
  CHECK(rank(*F, A) == 3);
  Matrix Ai = inverse(*F, A);
  CHECK(mul(*F, A, Ai) == Matrix::identity(3));

  Matrix B(2, 3);
  int w[] = {1, 1, 1, 2, 2, 2};
  for (int i = 0; i < 6; ++i) B.a[i] = static_cast<Elem>(w[i]);
  CHECK(rank(*F, B) == 1);
  Matrix N = nullspace(*F, B);
  CHECK(N.rows == 2);
  CHECK(mul(*F, B, transpose(N)).is_zero());
}

TEST_CASE("rank agrees with brute-force kernel size over F_2") {
  auto F = Field::make(2);
  for (int seed = 0; seed < 200; ++seed) {
    Matrix A(3, 4);
    for (int i = 0; i < 12; ++i) A.a[i] = static_cast<Elem>((seed * 2654435761u >> i) & 1);
    int kernel = 0;
    for (int x = 0; x < 16; ++x) {
      bool zero = true;
      for (int r = 0; r < 3; ++r) {
        int s = 0;
        for (int c = 0; c < 4; ++c) s ^= A(r, c) & ((x >> c) & 1);
        if (s) zero = false;
      }
      kernel += zero;
    }
    CHECK(kernel == (1 << (4 - rank(*F, A))));
  }
}
