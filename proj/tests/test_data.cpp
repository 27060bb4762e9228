#include "doctest.h"
#include "fcip/data.hpp"
#include "fcip/error.hpp"

using namespace fcip;

namespace {
const char* kTwoRows =
    "id,area_ha,length_m,valves,year,cost_le\n"
    "A,20.5,400,5,2012,300000\n"
    "B,31,610.5,8,2014,410000.25\n";
}

TEST_CASE("bundled datasets load with the expected sizes") {
  const auto train = load_dataset(data_directory() / "training.csv", DatasetRole::training);
  const auto valid = load_dataset(data_directory() / "validation.csv", DatasetRole::validation);
  CHECK(train.size() == 111);
  CHECK(valid.size() == 33);
  const auto b = DriverBounds::of(train);
  CHECK(b.lower(Driver::year) == 2010);
  CHECK(b.upper(Driver::year) == 2015);
}

TEST_CASE("csv round trip keeps every field") {
  const auto ds = parse_dataset(kTwoRows, DatasetRole::combined);
  REQUIRE(ds.size() == 2);
  CHECK(ds[1].length_m == 610.5);
  CHECK(ds[1].cost_le == 410000.25);
  const auto again = parse_dataset(serialize_dataset(ds), DatasetRole::combined);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    CHECK(again[i].id == ds[i].id);
    CHECK(again[i].area_ha == ds[i].area_ha);
    CHECK(again[i].valves == ds[i].valves);
    CHECK(again[i].cost_le == ds[i].cost_le);
  }
}

TEST_CASE("malformed rows name the row and field") {
  CHECK_THROWS_AS(parse_dataset("id,area,length\n", DatasetRole::training), ParseError);
  try {
    parse_dataset("id,area_ha,length_m,valves,year,cost_le\nA,20,400,0,2012,1\n", DatasetRole::training);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.row() == 1);
    CHECK(e.field() == "valves");
  }
  CHECK_THROWS_AS(parse_dataset("id,area_ha,length_m,valves,year,cost_le\nA,x,400,3,2012,1\n", DatasetRole::training),
                  ParseError);
  CHECK_THROWS_AS(parse_dataset("id,area_ha,length_m,valves,year,cost_le\nA,1,400,3,2012,1\nA,2,3,4,2013,5\n",
                                DatasetRole::training),
                  ParseError);
  CHECK_THROWS_AS(load_dataset("/nonexistent/file.csv", DatasetRole::training), InputError);
}

TEST_CASE("driver names") {
  CHECK(parse_driver("Area_ha") == Driver::area);
  CHECK(parse_driver("P14") == Driver::year);
  CHECK(parse_driver("length") == Driver::length);
  CHECK_FALSE(parse_driver("cost"));
  Drivers d{1, 2, 3, 4};
  d[Driver::valves] = 7;
  CHECK(d.valves == 7);
  CHECK(d[Driver::year] == 4);
}

TEST_CASE("equivalent diameter is the length-weighted mean") {
  const PipeSegment segs[] = {{200, 100}, {300, 300}};
  CHECK(equivalent_diameter(segs) == doctest::Approx(275));
  CHECK_THROWS_AS(equivalent_diameter(std::span<const PipeSegment>{}), InputError);
}

TEST_CASE("split and describe") {
  const auto ds = parse_dataset(kTwoRows, DatasetRole::combined);
  const auto [a, b] = split(ds, 1);
  CHECK(a.size() == 1);
  CHECK(b[0].id == "B");
  CHECK_THROWS_AS(split(ds, 2), InputError);
  const auto s = describe(ds);
  CHECK(s[Driver::area].mean == doctest::Approx(25.75));
  CHECK(s[Driver::valves].sd == doctest::Approx(2.1213203435596424));
}

TEST_CASE("extended schema keeps missing values") {
  const auto ext = parse_extended_dataset("id,p1,p3,cost_le\nM1,20,,100\nM2,30,500,200\n");
  REQUIRE(ext.rows() == 2);
  CHECK_FALSE(ext.values[0][1].has_value());
  CHECK(*ext.values[1][1] == 500);
}
