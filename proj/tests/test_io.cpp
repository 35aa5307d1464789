#include <doctest.h>

#include <sstream>

#include "uncertainty/errors.hpp"
#include "uncertainty/io.hpp"

using namespace uncertainty;

TEST_CASE("complex scalar parsing") {
  CHECK(parse_complex("1.5") == cd(1.5, 0));
  CHECK(parse_complex("1-2j") == cd(1, -2));
  CHECK(parse_complex("-2.5e-1+3i") == cd(-0.25, 3));
  CHECK(parse_complex("4j") == cd(0, 4));
  CHECK(parse_complex("-j") == cd(0, -1));
  CHECK(parse_complex(" 2 ") == cd(2, 0));
  CHECK_THROWS_AS(parse_complex("abc"), ParseError);
  CHECK_THROWS_AS(parse_complex("nan"), ParseError);
  CHECK_THROWS_AS(parse_complex("inf"), ParseError);
  CHECK_THROWS_AS(parse_complex(""), ParseError);
  for (cd z : {cd(0.1, -0.3), cd(1e-300, 5), cd(-7, 0), cd(0, 2)}) CHECK(parse_complex(format_complex(z)) == z);
}

TEST_CASE("csv round trip") {
  const ComplexMatrix a(2, 3, {1.0, cd(0, 1), cd(0.5, -0.25), -3.0, 0.0, cd(1e-17, 2)});
  std::stringstream ss;
  write_matrix_csv(ss, a);
  const ComplexMatrix b = read_matrix_csv(ss);
  CHECK(max_abs_difference(a, b) == 0.0);

  std::stringstream bad("1,2\n3\n");
  CHECK_THROWS_AS(read_matrix_csv(bad), ParseError);
  std::stringstream empty("");
  CHECK_THROWS_AS(read_matrix_csv(empty), ParseError);

  std::stringstream row("1,2j,3\n");
  CHECK(read_vector_csv(row) == ComplexVector{1.0, cd(0, 2), 3.0});
}

TEST_CASE("json round trip") {
  const ComplexMatrix a(2, 2, {1.0, cd(0, 1), cd(0.5, -0.25), -3.0});
  CHECK(max_abs_difference(matrix_from_json(matrix_to_json(a)), a) == 0.0);
  const ComplexVector v{cd(1, 2), 0.5};
  CHECK(vector_from_json(vector_to_json(v)) == v);
  CHECK(vector_from_json(json::parse(R"([1, "2j", [0, -1]])")) == ComplexVector{1.0, cd(0, 2), cd(0, -1)});
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows": 2, "cols": 2, "entries": [1, 2, 3]})")), ParseError);
}

TEST_CASE("set specs") {
  CHECK(parse_index_set("4,8,12,16", 16).members() == std::vector<std::size_t>{4, 8, 12, 16});
  CHECK(parse_index_set("picket:16/4", 16).members() == std::vector<std::size_t>{4, 8, 12, 16});
  CHECK(parse_index_set("interval:0+4", 16).members() == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(parse_index_set("interval:14+4", 16).members() == std::vector<std::size_t>{1, 2, 15, 16});
  CHECK(parse_index_set("", 16).is_empty());
  CHECK_THROWS_AS(parse_index_set("picket:16/3", 16), DomainError);
  CHECK_THROWS_AS(parse_index_set("picket:8/4", 16), ValidationError);
  CHECK_THROWS_AS(parse_index_set("1,x", 16), ParseError);
  CHECK_THROWS_AS(parse_index_set("17", 16), DomainError);
  CHECK(format_index_set(IndexSet(5, {1, 4})) == "1,4");
}
