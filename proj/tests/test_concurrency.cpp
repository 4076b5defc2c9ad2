#include <doctest.h>

#include <atomic>
#include <thread>

#include "adc/constructions.hpp"
#include "adc/decompose.hpp"
#include "adc/enumerate.hpp"

using namespace adc;

// complexes and their cached tables are shared read-only across threads
TEST_CASE("concurrent reads of one complex") {
  AugmentedComplex K = simplex(3);
  std::atomic<int> failures{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&K, &failures] {
      try {
        if (!K.validate().ok()) ++failures;
        if (!K.is_unital()) ++failures;
        if (!K.is_strongly_loop_free()) ++failures;
        if (!K.is_loop_free()) ++failures;
        Cell a = atom_cell(K, "0123");
        if (decomposition_index(a) != -1) ++failures;
        Cell x = d(Sign::minus, 2, a);
        if (!(evaluate(K, decompose_full(x)) == x)) ++failures;
        if (enumerate_cells(K, 1).size() != 15) ++failures;
      } catch (...) {
        ++failures;
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(failures == 0);
}

// copies share the cache box; the data is immutable either way
TEST_CASE("copies of a complex stay consistent") {
  AugmentedComplex K = cube(2);
  AugmentedComplex copy = K;
  CHECK(copy.is_strongly_loop_free() == K.is_strongly_loop_free());
  CHECK(copy.strong_loop_free_result().order == K.strong_loop_free_result().order);
  CHECK(copy.basis_size() == K.basis_size());
}
