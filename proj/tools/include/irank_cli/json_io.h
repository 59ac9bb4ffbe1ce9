#ifndef IRANK_CLI_JSON_IO_H_
#define IRANK_CLI_JSON_IO_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "irank/full_rank.h"
#include "irank/interval_matrix.h"
#include "irank/rank_one.h"
#include "irank/subset_matrix.h"

namespace irank::cli {

using Json = nlohmann::ordered_json;

// A parsed input document.
using MatrixInput = std::variant<IntervalMatrix, SubsetMatrix>;

// Parses an input document. JSON syntax and shape problems raise ParseError;
// bad values (lo > hi, "1/0", non-field elements, ragged rows) raise
// InvalidValueError or DimensionMismatchError. Messages name the entry.
MatrixInput ParseMatrixDocument(std::string_view text);
Json ParseJsonText(std::string_view text, std::string_view what);

Json EncodeMatrixDocument(const MatrixInput& input);
// {"type", "rows", "cols"} plus "field" for subset matrices.
Json DescribeInput(const MatrixInput& input);

Json Encode(const Rational& r);
Json Encode(const RationalVector& v);
Json Encode(const RationalMatrix& m);
Json Encode(const SignVector& s);
Json Encode(const Cell& c);
Json Encode(const PgDiagonal& d);
Json Encode(const CriterionViolation& v);
Json Encode(const RankOneWitness& w);
Json EncodeIndices(const std::vector<std::size_t>& indices);

// Decoders throw ParseError naming the offending field.
Rational DecodeRational(const Json& j, std::string_view field);
RationalVector DecodeVector(const Json& j, std::string_view field);
RationalMatrix DecodeMatrix(const Json& j, std::string_view field);
SignVector DecodeSigns(const Json& j, std::string_view field);
std::size_t DecodeIndex(const Json& j, std::string_view field);
std::vector<std::size_t> DecodeIndices(const Json& j, std::string_view field);
Cell DecodeCell(const Json& j, std::string_view field);
PgDiagonal DecodeDiagonal(const Json& j, std::string_view field);
CriterionViolation DecodeViolation(const Json& j, std::string_view field);
RankOneWitness DecodeWitness(const Json& j, std::string_view field);
bool DecodeBool(const Json& j, std::string_view field);
// Member lookup that throws ParseError when the key is missing.
const Json& Member(const Json& object, std::string_view key);

}  // namespace irank::cli

#endif  // IRANK_CLI_JSON_IO_H_
