#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "theta/enumeration.hpp"
#include "theta/errors.hpp"
#include "theta/int_series.hpp"
#include "theta/partition.hpp"

using namespace theta;

TEST_CASE("single color counts match direct enumeration") {
  const PartitionTable t = partition_table(1, 10);
  CHECK(t.values[0] == 1);
  for (unsigned n = 1; n <= 10; ++n)
    CHECK(mpz_class(static_cast<unsigned long>(partition_count_by_enumeration(n))) ==
          t.values[n]);
  CHECK(t.values[10] == 42);
}

TEST_CASE("two colors at n = 2 match the convolution square") {
  const PartitionTable p1 = partition_table(1, 2);
  IntSeries s(2);
  for (unsigned n = 0; n <= 2; ++n) s[n] = p1.values[n];
  const IntSeries sq = s * s;
  CHECK(sq[2] == 5);
  CHECK(partition_table(2, 2).values[2] == 5);
}

TEST_CASE("classic value p(100)") {
  CHECK(partition_table(1, 100).values[100] == mpz_class("190569292"));
}

TEST_CASE("recurrence tables equal the generating series route") {
  for (unsigned k = 1; k <= 4; ++k) {
    const PartitionTable t = partition_table(k, 300);
    const IntSeries s = eta_power_series(-static_cast<long>(k), 300);
    for (unsigned n = 0; n <= 300; ++n) CHECK(t.values[n] == s[n]);
  }
}

TEST_CASE("sigma-weighted recurrence holds on the pentagonal-built table") {
  const PartitionTable t = partition_table(1, 200);
  for (unsigned long n : {1UL, 17UL, 50UL, 137UL, 200UL}) {
    mpz_class rhs = 0;
    for (unsigned long j = 1; j <= n; ++j) {
      unsigned long sigma = 0;
      for (unsigned long d = 1; d <= j; ++d)
        if (j % d == 0) sigma += d;
      rhs += mpz_class(sigma) * t.values[n - j];
    }
    CHECK(mpz_class(n) * t.values[n] == rhs);
  }
}

TEST_CASE("monotone growth") {
  for (unsigned k = 1; k <= 4; ++k) {
    const PartitionTable t = partition_table(k, 300);
    for (unsigned n = 1; n < 300; ++n) CHECK(t.values[n + 1] >= t.values[n]);
  }
}

TEST_CASE("in-place extension matches a fresh build") {
  for (unsigned k : {1u, 3u}) {
    PartitionTable grown = partition_table(k, 50);
    extend_partition_table(grown, 120);
    const PartitionTable fresh = partition_table(k, 120);
    REQUIRE(grown.max_n() == 120);
    for (unsigned n = 0; n <= 120; ++n) CHECK(grown.values[n] == fresh.values[n]);
  }
}

TEST_CASE("lookup past the end reports the shortfall") {
  const PartitionTable t = partition_table(1, 10);
  CHECK_THROWS_AS(t.at(11), TableTooShort);
}

TEST_CASE("cache round trip is bit exact") {
  const std::string path = "cache_rt.txt";
  const PartitionTable t = partition_table(1, 100);
  save_table(t, path);
  const PartitionTable back = load_table(path, 1);
  REQUIRE(back.k == t.k);
  REQUIRE(back.max_n() == t.max_n());
  for (unsigned n = 0; n <= 100; ++n) CHECK(back.values[n] == t.values[n]);

  // byte-level: saving the loaded table reproduces the file
  save_table(back, path + ".2");
  std::ifstream f1(path), f2(path + ".2");
  const std::string c1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
  const std::string c2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  CHECK(c1 == c2);
  std::remove(path.c_str());
  std::remove((path + ".2").c_str());
}

TEST_CASE("truncated cache file is rejected") {
  const std::string path = "cache_trunc.txt";
  save_table(partition_table(1, 50), path);
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  std::ofstream out(path, std::ios::trunc);
  out << content.substr(0, content.size() / 2);
  out.close();
  CHECK_THROWS_AS(load_table(path), CorruptCache);
  std::remove(path.c_str());
}

TEST_CASE("color count mismatch is rejected") {
  const std::string path = "cache_k.txt";
  save_table(partition_table(2, 30), path);
  CHECK_THROWS_AS(load_table(path, 1), CorruptCache);
  CHECK(load_table(path, 2).values[2] == 5);
  CHECK(load_table(path).k == 2);
  std::remove(path.c_str());
}

TEST_CASE("flipped payload bit is rejected") {
  const std::string path = "cache_flip.txt";
  save_table(partition_table(1, 40), path);
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  const auto pos = content.find("42");  // p(10)
  REQUIRE(pos != std::string::npos);
  content[pos] = '5';
  std::ofstream out(path, std::ios::trunc);
  out << content;
  out.close();
  CHECK_THROWS_AS(load_table(path), CorruptCache);
  std::remove(path.c_str());
}
