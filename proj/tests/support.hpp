#ifndef SGT_TESTS_SUPPORT_HPP_
#define SGT_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sgt/catalog.hpp"
#include "sgt/census.hpp"
#include "sgt/error.hpp"
#include "sgt/semigroup.hpp"

namespace testing {

  using sgt::Element;
  using sgt::ElementSet;
  using sgt::FiniteSemigroup;

  inline FiniteSemigroup table(std::vector<std::vector<Element>> const& t) {
    return sgt::validate_table(t);
  }

  inline FiniteSemigroup trivial() {
    return table({{0}});
  }
  // 0 < 1 under meet
  inline FiniteSemigroup chain2() {
    return table({{0, 0}, {0, 1}});
  }
  inline FiniteSemigroup lz2() {
    return table({{0, 0}, {1, 1}});
  }
  inline FiniteSemigroup rz2() {
    return table({{0, 1}, {0, 1}});
  }
  inline FiniteSemigroup cyclic2() {
    return table({{0, 1}, {1, 0}});
  }
  // 0 and n, every product 0
  inline FiniteSemigroup null2() {
    return table({{0, 0}, {0, 0}});
  }
  // (i, j) at index 2i + j
  inline FiniteSemigroup rect22() {
    return sgt::catalog("rect_band(2,2)");
  }
  // 0, a, a', aa', a'a
  inline FiniteSemigroup brandt2() {
    return sgt::catalog("brandt2");
  }
  // 1, a, 0 with {a, 0} left zero
  inline FiniteSemigroup lrb3() {
    return sgt::catalog("lrb3");
  }

  inline std::filesystem::path data_dir() {
    return SGT_TEST_DATA;
  }

  struct Instance {
    std::string     name;
    FiniteSemigroup s;
  };

  inline std::vector<std::string> catalog_keys() {
    return {"chain(1)",      "chain(2)",        "chain(3)",
            "left_zero(2)",  "left_zero(3)",    "right_zero(2)",
            "right_zero(3)", "rect_band(2,2)",  "rect_band(2,3)",
            "rect_band(3,2)", "cyclic_group(2)", "cyclic_group(3)",
            "null(2)",       "null(3)",         "brandt2",
            "sym_inv(1)",    "sym_inv(2)",      "lrb3"};
  }

  inline std::vector<Instance> catalog_instances() {
    std::vector<Instance> out;
    for (auto const& k : catalog_keys()) {
      out.push_back({k, sgt::catalog(k)});
    }
    return out;
  }

  inline std::vector<Instance> census_instances(std::size_t lo, std::size_t hi) {
    std::vector<Instance> out;
    for (std::size_t n = lo; n <= hi; ++n) {
      auto const all = sgt::enumerate_semigroups(n, true, std::max(n, sgt::census_default_cap));
      for (std::size_t i = 0; i < all.size(); ++i) {
        out.push_back({"census(" + std::to_string(n) + ")#" + std::to_string(i),
                       all[i]});
      }
    }
    return out;
  }

  inline std::vector<Instance> corpus(std::size_t max_census_order) {
    auto out = census_instances(1, max_census_order);
    for (auto& c : catalog_instances()) {
      out.push_back(std::move(c));
    }
    return out;
  }

  template <typename F>
  sgt::ErrorCode error_code_of(F&& f) {
    try {
      f();
    } catch (sgt::Error const& e) {
      return e.code();
    }
    throw std::logic_error("expected an sgt::Error");
  }

  template <typename F>
  sgt::Error error_of(F&& f) {
    try {
      f();
    } catch (sgt::Error const& e) {
      return e;
    }
    throw std::logic_error("expected an sgt::Error");
  }

}  // namespace testing

#endif  // SGT_TESTS_SUPPORT_HPP_
