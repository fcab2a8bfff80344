#include "eag/tables.hpp"

#include <doctest.h>

using namespace eag;

namespace {

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

// Building all four takes a few seconds; do it once.
const ClassificationTable& table(int which) {
  static const std::vector<ClassificationTable> all{classification_table(1), classification_table(2),
                                                    classification_table(3), classification_table(4)};
  return all.at(which - 1);
}

}  // namespace

TEST_CASE("table shapes") {
  CHECK(table(1).rows.size() == 7);
  CHECK(table(2).rows.size() == 14);
  CHECK(table(3).rows.size() == 11);
  CHECK(table(4).rows.size() == 6);
  CHECK_THROWS_AS(classification_table(0), UsageError);
  CHECK_THROWS_AS(classification_table(5), UsageError);
}

TEST_CASE("instances are consistent with their rows") {
  for (int which = 1; which <= 4; ++which) {
    const auto& t = table(which);
    // Header: the case label, the descriptive cells, then the checked instances.
    for (const auto& row : t.rows) {
      CHECK(row.cells.size() + 2 == t.header.size());
      CHECK(row.instances.size() <= static_cast<std::size_t>(kInstancesPerRow));
      for (const auto& inst : row.instances) {
        CAPTURE(inst.spec);
        CHECK(inst.genus == ea_genus(inst.spec));
        CHECK(inst.genus >= 2);
        CHECK_FALSE(inst.result.empty());
      }
    }
  }
}

TEST_CASE("rendered tables") {
  const auto t3 = render_markdown(table(3));
  CHECK(contains(t3, "## Table 3."));
  CHECK(contains(t3, "(0;2⁵) n=3"));
  const auto t4 = render_markdown(table(4));
  CHECK(contains(t4, "(ρ;3³) n=1"));
  const auto csv = render_csv(table(1));
  CHECK(csv.rfind("Case,r,n,p,Checked\n", 0) == 0);
  CHECK(superscript(10) == "¹⁰");
}

TEST_CASE("tables survive JSON") {
  for (int which = 1; which <= 4; ++which) {
    const auto& t = table(which);
    CHECK(io::table_from_json(io::Json::parse(io::to_json(t).dump())) == t);
  }
}
