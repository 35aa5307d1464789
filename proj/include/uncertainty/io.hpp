#pragma once

// Text formats. Complex scalars are written "re" or "re+imj" / "re-imj";
// matrices as CSV (one row per line) or JSON
//   {"rows": m, "cols": n, "entries": [[re, im], ...]}  (row-major)
// and vectors as {"dim": n, "entries": [[re, im], ...]} or one-column CSV.
// Every reader rejects NaN/Inf.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "uncertainty/index_set.hpp"
#include "uncertainty/linalg.hpp"

namespace uncertainty {

using json = nlohmann::json;

cd parse_complex(std::string_view text);
// Shortest representation that round-trips exactly.
std::string format_complex(cd z);
std::string format_real(double x);

ComplexMatrix read_matrix_csv(std::istream& in);
void write_matrix_csv(std::ostream& out, const ComplexMatrix& a);
ComplexVector read_vector_csv(std::istream& in);
void write_vector_csv(std::ostream& out, std::span<const cd> x);

json matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const json& j);
json vector_to_json(std::span<const cd> x);
ComplexVector vector_from_json(const json& j);

// Dispatch on extension: ".json" is JSON, anything else CSV.
ComplexMatrix read_matrix_file(const std::filesystem::path& path);
ComplexVector read_vector_file(const std::filesystem::path& path);
json read_json_file(const std::filesystem::path& path);

// Set specs over {1, ..., m}:
//   ""              empty set
//   "4,8,12,16"     explicit 1-based members
//   "picket:m/n"    {m/n, 2m/n, ..., m}; the m in the spec must equal `universe`
//   "interval:l+n"  circular run {l+1, ..., l+n} mod m
IndexSet parse_index_set(std::string_view spec, std::size_t universe);
std::string format_index_set(const IndexSet& s);

}  // namespace uncertainty
