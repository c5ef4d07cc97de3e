#include <doctest.h>

#include <filesystem>

#include "oddset/construct.hpp"
#include "oddset/json_io.hpp"
#include "test_support.hpp"

using namespace oddset;
using oddset::testing::q;
using oddset::testing::Rng;

TEST_CASE("point set layout") {
  const Json doc = to_json(build_odd_set(2));
  CHECK(doc.dump() == R"({"dim":2,"points":[["3/2","1/2"],["1","1"],["3","2"],["5/2","5/2"]]})");
}

TEST_CASE("point sets round-trip") {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = oddset::testing::uniform(rng, 1, 4);
    std::vector<Point> pts;
    const auto size = oddset::testing::uniform(rng, 0, 10);
    while (static_cast<std::int64_t>(pts.size()) < size) {
      Point p = oddset::testing::random_point(rng, n, trial % 5 == 0 ? std::int64_t{1} << 62 : 50, 12);
      if (trial % 7 == 0) p(0) = p(0) * p(0) * p(0);  // well past int64
      if (std::none_of(pts.begin(), pts.end(), [&](const Point& x) { return lex_compare(x, p) == 0; })) {
        pts.push_back(std::move(p));
      }
    }
    const PointSet ps(n, std::move(pts));
    CHECK(point_set_from_json(Json::parse(to_json(ps).dump())) == ps);
  }
}

TEST_CASE("point set parsing rejects bad input") {
  CHECK(point_set_from_json(Json::parse(R"({"dim":1,"points":[[0],["1/2"]]})")) ==
        PointSet(1, {make_point({q(0)}), make_point({q(1, 2)})}));
  CHECK_THROWS_WITH_AS(point_set_from_json(Json::parse(R"({"dim":2,"points":[["0","0"],["1"]]})")),
                       "point 2 has dimension 1, expected 2", std::invalid_argument);
  CHECK_THROWS_WITH_AS(point_set_from_json(Json::parse(R"({"dim":1,"points":[["1/2"],["2/4"]]})")),
                       "points 1 and 2 coincide", std::invalid_argument);
  CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"dim":1,"points":[[0.5]]})")), std::invalid_argument);
  CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"dim":1,"points":[["1.5"]]})")), std::invalid_argument);
  CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"points":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"dim":0,"points":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(point_set_from_json(Json::parse(R"([1, 2])")), std::invalid_argument);
}

TEST_CASE("decimal point sets") {
  const DecimalPointSet d = decimal_point_set_from_json(
      Json::parse(R"({"dim":2,"points":[["1.41421356","0"],["2.5","1"]],"distances":[[1,0,3],[0,1,"3"]]})"));
  CHECK(d.points == std::vector<std::vector<std::string>>{{"1.41421356", "0"}, {"2.5", "1"}});
  REQUIRE(d.declared_distances.size() == 1);
  CHECK(d.declared_distances.at({0, 1}) == 3);
  CHECK(d.proxies()[0](0) == Rational(141421356, 100000000));
  CHECK_THROWS_AS(decimal_point_set_from_json(Json::parse(R"({"dim":1,"points":[["0"],["1"]],"distances":[[0,0,1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(decimal_point_set_from_json(Json::parse(R"({"dim":1,"points":[["0"],["1"]],"distances":[[0,5,1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      decimal_point_set_from_json(Json::parse(R"({"dim":1,"points":[["0"],["1"]],"distances":[[0,1,"1/2"]]})")),
      std::invalid_argument);
}

TEST_CASE("certificate layout") {
  const Json doc = to_json(verify_odd_set(PointSet(1, {make_point({q(0)}), make_point({q(1)}), make_point({q(2)})})));
  CHECK(doc.dump() == R"({"set_size":3,"verdict":false,"pairs":[[0,1,"1",true],[0,2,"2",false],[1,2,"1",true]]})");
}

TEST_CASE("audit layout") {
  const Json doc = to_json(parity_audit(build_odd_set(2)));
  CHECK(doc["fingerprints"] == Json::array({"11", "00", "00", "11"}));
  CHECK(doc["fiber_sizes"] == Json({{"00", 2}, {"11", 2}}));
  CHECK(doc["weight_parities"] == Json::array({"even", "even", "even", "even"}));
  CHECK(doc["passes"] == true);
}

TEST_CASE("search, rationalize and dyadic layouts") {
  const LatticeBox box = LatticeBox::cube(2, Lattice::half_integers, q(0), q(3));
  const CliqueResult r = max_odd_clique(build_odd_graph(enumerate_box(box)));
  const Json s = to_json(r, bound_report(2, Lattice::half_integers, r), box);
  CHECK(s["max_size"] == 4);
  CHECK(s["cap"] == 4);
  CHECK(s["within_box"] == true);
  CHECK(s["violation"] == false);
  CHECK(s["lattice"] == "half-integers");
  CHECK(point_set_from_json(s["witness"]).size() == 4);

  DecimalPointSet d;
  d.dimension = 1;
  d.points = {{"0"}, {"1"}};
  const Json rj = to_json(rationalize_set(d));
  CHECK(rj["distances"] == Json::parse(R"([[0,1,"3"]])"));
  CHECK(rj["provenance"]["scale"] == 1);
  CHECK(rj["provenance"]["separation_applied"] == Json::array({true}));
  // A rationalized document is itself valid rationalize input.
  const DecimalPointSet again = decimal_point_set_from_json(rj);
  CHECK(again.declared_distances.at({0, 1}) == 3);
  CHECK(verify_odd_set(rationalize_set(again).points).verdict);

  const Json dj = to_json(dyadic_scale(PointSet(1, {make_point({q(1, 3)}), make_point({q(4, 3)})})));
  CHECK(dj.dump() == R"({"dim":1,"points":[["1"],["4"]],"provenance":{"scale":3}})");
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "oddset_json_io_test.json";
  write_json_file(path, to_json(build_odd_set(3)));
  CHECK(point_set_from_json(read_json_file(path)) == build_odd_set(3));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_json_file(path), std::runtime_error);
}
