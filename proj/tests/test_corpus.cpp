#include <doctest.h>

#include <cmath>
#include <set>
#include <string>

#include "greymap/error.hpp"
#include "greymap/convergence.hpp"
#include "greymap/corpus.hpp"

using namespace greymap;
using namespace greymap::corpus;
using doctest::Approx;

TEST_CASE("inject_greyness") {
  const Matrix<double> w{{-0.9, 1.0, 0.0}, {0.005, -1.0, 0.5}, {0, 0, 0}};
  const Matrix<Ign> g = inject_greyness(w, 0.01);
  CHECK(g(0, 0).lo == Approx(-0.91));
  CHECK(g(0, 0).hi == Approx(-0.89));
  CHECK(g(0, 1) == Ign{0.99, 1.00});
  CHECK(g(0, 2) == Ign{0, 0});
  CHECK(g(1, 0) == Ign{0.005, 0.005});
  CHECK(g(1, 1) == Ign{-1.00, -0.99});
  CHECK_THROWS_AS(inject_greyness(w, 0.0), InvalidParameter);
  CHECK_THROWS_AS(inject_greyness(w, -0.1), InvalidParameter);
}

TEST_CASE("printed matrices follow from the crisp web map") {
  const Matrix<Ign> injected = inject_greyness(web_weights(), 0.01);
  const Matrix<Ign>& printed = printed_interval_weights();
  const Matrix<double> star = w_star(injected);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      CHECK(std::fabs(injected(i, j).lo - printed(i, j).lo) <= 1e-12);
      CHECK(std::fabs(injected(i, j).hi - printed(i, j).hi) <= 1e-12);
      CHECK(std::fabs(star(i, j) - printed_w_star()(i, j)) <= 1e-12);
      const Ggn g = ggn_from_union(GreyUnion({{printed(i, j).lo, printed(i, j).hi}}));
      CHECK(std::fabs(g.kernel - printed_grey_weights()(i, j).kernel) <= 1e-12);
      CHECK(std::fabs(g.greyness - printed_grey_weights()(i, j).greyness) <= 1e-12);
    }
}

TEST_CASE("built variants") {
  for (Variant v : kAllVariants) {
    const Model m = build(v, 1.0);
    CHECK(m.size() == 7);
    CHECK(m.id() == to_string(v));
    CHECK(variant_from_string(to_string(v)) == v);
    CHECK_FALSE(provenance(v).empty());
  }
  CHECK_FALSE(variant_from_string("web").has_value());

  CHECK(build(Variant::web_fcm, 1.0).as<double>().weights(0, 3) == 1.0);
  CHECK(build(Variant::web_fcm, 1.0).as<double>().initial ==
        std::vector<double>{1, 1, 1, 1, 1, 1, 0});

  const Ggn case1 = build(Variant::web_case1_fggcm, 1.0).as<Ggn>().weights(0, 0);
  CHECK(case1.kernel == Approx(0.0).epsilon(1e-15));
  CHECK(case1.greyness == Approx(0.1).epsilon(1e-15));
  CHECK(build(Variant::web_case1_fgcm, 1.0).as<Ign>().weights(0, 0) == Ign{-0.1, 0.1});

  const Model case2 = build(Variant::web_case2_fggcm, 1.0);
  const Ggn w15 = case2.as<Ggn>().weights(0, 4);
  CHECK(w15.kernel == Approx(0.658333).epsilon(1e-6));
  CHECK(w15.greyness == Approx((0.01 + 0.03 + 1.83) / 2.0).epsilon(1e-14));
  CHECK(case2.union_cells().size() == 4);
  const std::set<std::pair<std::size_t, std::size_t>> expected{{0, 0}, {0, 1}, {2, 2}, {0, 4}};
  for (const auto& [idx, u] : case2.union_cells()) {
    CHECK(expected.count({idx.row, idx.col}) == 1);
    CHECK(ggn_from_union(u) == case2.as<Ggn>().weights(idx.row, idx.col));
  }

  const Ggn start = build(Variant::web_fggcm, 1.0).as<Ggn>().initial[0];
  CHECK(start.kernel == 0.995);
  CHECK(start.greyness == 0.010);
}

TEST_CASE("case 1 keeps the kernel matrix of the base grey map") {
  const auto base = kernels(build(Variant::web_fggcm, 1.0).as<Ggn>().weights);
  const auto case1 = kernels(build(Variant::web_case1_fggcm, 1.0).as<Ggn>().weights);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) CHECK(case1(i, j) == Approx(base(i, j)).epsilon(1e-15));
}

TEST_CASE("kernel norms of the web variants") {
  const double kernel_mc = frobenius_norm(kernels(build(Variant::web_case2_fggcm, 1.0).as<Ggn>().weights));
  CHECK(kernel_mc == Approx(6.03723636415427).epsilon(1e-14));
  CHECK(frobenius_norm(printed_w_star()) == Approx(6.165744075129943).epsilon(1e-14));
  CHECK(frobenius_norm(kernels(printed_grey_weights())) == Approx(6.117203200809992).epsilon(1e-14));
}
