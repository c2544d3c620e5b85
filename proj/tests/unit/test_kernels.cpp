#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "stabilis/kernels.hpp"

using namespace stabilis;

TEST_CASE("first failure is the lowest failing index in both versions") {
  std::mt19937_64 eng(41);
  for (int k = 0; k < 200; ++k) {
    std::size_t count = eng() % 300;
    std::vector<bool> fails(count);
    for (std::size_t j = 0; j < count; ++j) fails[j] = eng() % 37 == 0;
    auto pred = [&](std::size_t j) { return static_cast<bool>(fails[j]); };
    auto serial = first_failure_serial(count, pred);
    CHECK(first_failure_omp(count, pred, 4) == serial);
    CHECK(first_failure(count, pred, 1) == serial);
    CHECK(first_failure(count, pred, 0) == serial);
  }
}

TEST_CASE("maximum over a grid") {
  std::mt19937_64 eng(42);
  for (int k = 0; k < 100; ++k) {
    std::vector<double> v(1 + eng() % 500);
    for (auto& x : v) x = std::uniform_real_distribution<double>(-5, 5)(eng);
    auto f = [&](std::size_t j) { return v[j]; };
    CHECK(max_over_grid_serial(v.size(), f) == max_over_grid_omp(v.size(), f, 3));
    CHECK(max_over_grid(v.size(), f, 1) == *std::max_element(v.begin(), v.end()));
  }
}

TEST_CASE("exceptions cross the parallel region") {
  auto boom = [](std::size_t j) -> bool {
    if (j == 7) throw std::runtime_error("boom");
    return false;
  };
  CHECK_THROWS_AS(first_failure_omp(20, boom, 2), std::runtime_error);
  CHECK_THROWS_AS(for_each_index(20, [&](std::size_t j) { boom(j); }, 2), std::runtime_error);
  std::vector<int> hit(50, 0);
  for_each_index(50, [&](std::size_t j) { hit[j] = 1; }, 0);
  CHECK(std::count(hit.begin(), hit.end(), 1) == 50);
}
