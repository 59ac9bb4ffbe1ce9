#include "irank_cli/json_io.h"

#include <string>
#include <utility>

#include "irank/errors.h"

namespace irank::cli {

namespace {

[[noreturn]] void RethrowWithContext(const Error& e, const std::string& where) {
  const std::string message = where + ": " + e.what();
  switch (e.kind()) {
    case ErrorKind::kParse:
      throw ParseError(message);
    case ErrorKind::kInvalidValue:
      throw InvalidValueError(message);
    case ErrorKind::kDimensionMismatch:
      throw DimensionMismatchError(message);
    case ErrorKind::kDivisorContainsZero:
      throw DivisorContainsZeroError(message);
    case ErrorKind::kZeroScale:
      throw ZeroScaleError(message);
    case ErrorKind::kPreconditionViolated:
      throw PreconditionError(message);
    case ErrorKind::kInvalidDiagonal:
      throw InvalidDiagonalError(message);
    case ErrorKind::kSizeLimitExceeded:
      throw SizeLimitExceededError(message);
    case ErrorKind::kEliminationBlowup:
      throw EliminationBlowupError(message);
  }
  throw ParseError(message);
}

Rational ParseRationalAt(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a rational string");
  try {
    return Rational::Parse(j.get<std::string>());
  } catch (const Error& e) {
    RethrowWithContext(e, where);
  }
}

const Json& RowsOf(const Json& entries) {
  if (!entries.is_array() || entries.empty()) {
    throw ParseError("\"entries\" must be a nonempty array of rows");
  }
  std::size_t cols = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.empty()) {
      throw ParseError("row " + std::to_string(i) + " must be a nonempty array");
    }
    if (i == 0) {
      cols = row.size();
    } else if (row.size() != cols) {
      throw DimensionMismatchError("row " + std::to_string(i) + " has " +
                                   std::to_string(row.size()) + " entries, expected " +
                                   std::to_string(cols));
    }
  }
  return entries;
}

IntervalMatrix ParseIntervalEntries(const Json& entries) {
  RowsOf(entries);
  IntervalMatrix out(entries.size(), entries[0].size());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      const std::string where = CellName(i, j);
      const Json& e = entries[i][j];
      if (!e.is_array() || e.size() != 2) {
        throw ParseError(where + ": expected [\"lo\", \"hi\"]");
      }
      Rational lo = ParseRationalAt(e[0], where);
      Rational hi = ParseRationalAt(e[1], where);
      try {
        out(i, j) = Interval(std::move(lo), std::move(hi));
      } catch (const Error& err) {
        RethrowWithContext(err, where);
      }
    }
  }
  return out;
}

SubsetEntry ParseSubsetEntry(const Json& e, const std::string& where) {
  if (e.is_string()) {
    if (e.get<std::string>() == "any") return SubsetEntry::Any();
    throw ParseError(where + ": unknown entry \"" + e.get<std::string>() + "\"");
  }
  if (!e.is_object() || e.size() != 1) {
    throw ParseError(where + ": expected {\"val\": ...}, {\"set\": [...]} or \"any\"");
  }
  if (e.contains("val")) return SubsetEntry::Singleton(ParseRationalAt(e["val"], where));
  if (e.contains("set")) {
    const Json& set = e["set"];
    if (!set.is_array()) throw ParseError(where + ": \"set\" must be an array");
    std::vector<Rational> values;
    for (const Json& v : set) values.push_back(ParseRationalAt(v, where));
    try {
      return SubsetEntry::FiniteSet(std::move(values));
    } catch (const Error& err) {
      RethrowWithContext(err, where);
    }
  }
  throw ParseError(where + ": expected key \"val\" or \"set\"");
}

SubsetMatrix ParseSubsetDocument(const Json& doc) {
  const Json& field_json = Member(doc, "field");
  if (!field_json.is_string()) throw ParseError("\"field\" must be a string");
  FieldDescriptor field = FieldDescriptor::Parse(field_json.get<std::string>());
  const Json& entries = RowsOf(Member(doc, "entries"));
  Matrix<SubsetEntry> cells(entries.size(), entries[0].size());
  for (std::size_t i = 0; i < cells.rows(); ++i) {
    for (std::size_t j = 0; j < cells.cols(); ++j) {
      cells(i, j) = ParseSubsetEntry(entries[i][j], CellName(i, j));
    }
  }
  return SubsetMatrix(std::move(field), std::move(cells));
}

std::string FieldPath(std::string_view field, std::size_t k) {
  return std::string(field) + "[" + std::to_string(k) + "]";
}

}  // namespace

Json ParseJsonText(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

const Json& Member(const Json& object, std::string_view key) {
  if (!object.is_object()) throw ParseError("expected a JSON object");
  auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError("missing field \"" + std::string(key) + "\"");
  }
  return *it;
}

MatrixInput ParseMatrixDocument(std::string_view text) {
  const Json doc = ParseJsonText(text, "input");
  const Json& type = Member(doc, "type");
  if (type == "interval_matrix") return ParseIntervalEntries(Member(doc, "entries"));
  if (type == "subset_matrix") return ParseSubsetDocument(doc);
  throw ParseError("unknown matrix type " + type.dump());
}

Json EncodeMatrixDocument(const MatrixInput& input) {
  Json doc;
  Json rows = Json::array();
  if (const auto* alpha = std::get_if<IntervalMatrix>(&input)) {
    doc["type"] = "interval_matrix";
    for (std::size_t i = 0; i < alpha->rows(); ++i) {
      Json row = Json::array();
      for (const Interval& x : alpha->row(i)) {
        row.push_back(Json::array({x.lo().ToString(), x.hi().ToString()}));
      }
      rows.push_back(std::move(row));
    }
  } else {
    const auto& subset = std::get<SubsetMatrix>(input);
    doc["type"] = "subset_matrix";
    doc["field"] = subset.field().ToString();
    for (std::size_t i = 0; i < subset.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < subset.cols(); ++j) {
        const SubsetEntry& e = subset(i, j);
        switch (e.kind()) {
          case SubsetEntry::Kind::kSingleton:
            row.push_back({{"val", e.value().ToString()}});
            break;
          case SubsetEntry::Kind::kFiniteSet: {
            Json set = Json::array();
            for (const Rational& v : e.values()) set.push_back(v.ToString());
            row.push_back({{"set", std::move(set)}});
            break;
          }
          case SubsetEntry::Kind::kAny:
            row.push_back("any");
            break;
        }
      }
      rows.push_back(std::move(row));
    }
  }
  doc["entries"] = std::move(rows);
  return doc;
}

Json DescribeInput(const MatrixInput& input) {
  Json out;
  if (const auto* alpha = std::get_if<IntervalMatrix>(&input)) {
    out["type"] = "interval_matrix";
    out["rows"] = alpha->rows();
    out["cols"] = alpha->cols();
  } else {
    const auto& subset = std::get<SubsetMatrix>(input);
    out["type"] = "subset_matrix";
    out["field"] = subset.field().ToString();
    out["rows"] = subset.rows();
    out["cols"] = subset.cols();
  }
  return out;
}

Json Encode(const Rational& r) { return r.ToString(); }

Json Encode(const RationalVector& v) {
  Json out = Json::array();
  for (const Rational& r : v) out.push_back(r.ToString());
  return out;
}

Json Encode(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const Rational& r : m.row(i)) row.push_back(r.ToString());
    out.push_back(std::move(row));
  }
  return out;
}

Json Encode(const SignVector& s) { return Json(s.components()); }

Json Encode(const Cell& c) { return Json::array({c.row, c.col}); }

Json Encode(const PgDiagonal& d) {
  Json out = Json::array();
  for (const Cell& c : d.cells) out.push_back(Encode(c));
  return out;
}

Json EncodeIndices(const std::vector<std::size_t>& indices) { return Json(indices); }

Json Encode(const CriterionViolation& v) {
  Json out;
  out["h"] = v.h();
  out["rows"] = EncodeIndices(v.rows);
  out["cols"] = EncodeIndices(v.cols);
  out["sigma"] = EncodeIndices(v.sigma);
  out["lower_product"] = Encode(v.lower_product);
  out["upper_product"] = Encode(v.upper_product);
  return out;
}

Json Encode(const RankOneWitness& w) {
  Json out;
  out["u"] = Encode(w.u);
  out["v"] = Encode(w.v);
  out["B"] = Encode(w.Outer());
  return out;
}

Rational DecodeRational(const Json& j, std::string_view field) {
  try {
    return ParseRationalAt(j, std::string(field));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

RationalVector DecodeVector(const Json& j, std::string_view field) {
  if (!j.is_array()) throw ParseError(std::string(field) + ": expected an array");
  RationalVector out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(DecodeRational(j[k], FieldPath(field, k)));
  }
  return out;
}

RationalMatrix DecodeMatrix(const Json& j, std::string_view field) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(std::string(field) + ": expected a nonempty array of rows");
  }
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(DecodeVector(j[i], FieldPath(field, i)));
  }
  try {
    return RationalMatrix::FromRows(rows);
  } catch (const Error& e) {
    throw ParseError(std::string(field) + ": " + e.what());
  }
}

SignVector DecodeSigns(const Json& j, std::string_view field) {
  if (!j.is_array()) throw ParseError(std::string(field) + ": expected an array");
  std::vector<int> components;
  for (const Json& c : j) {
    if (!c.is_number_integer()) {
      throw ParseError(std::string(field) + ": expected integers");
    }
    components.push_back(c.get<int>());
  }
  try {
    return SignVector(std::move(components));
  } catch (const Error& e) {
    throw ParseError(std::string(field) + ": " + e.what());
  }
}

std::size_t DecodeIndex(const Json& j, std::string_view field) {
  if (!j.is_number_unsigned()) {
    throw ParseError(std::string(field) + ": expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::vector<std::size_t> DecodeIndices(const Json& j, std::string_view field) {
  if (!j.is_array()) throw ParseError(std::string(field) + ": expected an array");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(DecodeIndex(j[k], FieldPath(field, k)));
  }
  return out;
}

Cell DecodeCell(const Json& j, std::string_view field) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError(std::string(field) + ": expected [row, col]");
  }
  return {DecodeIndex(j[0], field), DecodeIndex(j[1], field)};
}

PgDiagonal DecodeDiagonal(const Json& j, std::string_view field) {
  if (!j.is_array()) throw ParseError(std::string(field) + ": expected an array");
  PgDiagonal d;
  for (std::size_t k = 0; k < j.size(); ++k) {
    d.cells.push_back(DecodeCell(j[k], FieldPath(field, k)));
  }
  return d;
}

CriterionViolation DecodeViolation(const Json& j, std::string_view field) {
  const std::string f(field);
  CriterionViolation v;
  v.rows = DecodeIndices(Member(j, "rows"), f + ".rows");
  v.cols = DecodeIndices(Member(j, "cols"), f + ".cols");
  v.sigma = DecodeIndices(Member(j, "sigma"), f + ".sigma");
  v.lower_product = DecodeRational(Member(j, "lower_product"), f + ".lower_product");
  v.upper_product = DecodeRational(Member(j, "upper_product"), f + ".upper_product");
  if (DecodeIndex(Member(j, "h"), f + ".h") != v.rows.size()) {
    throw ParseError(f + ".h does not match the number of rows");
  }
  return v;
}

RankOneWitness DecodeWitness(const Json& j, std::string_view field) {
  const std::string f(field);
  RankOneWitness w{DecodeVector(Member(j, "u"), f + ".u"),
                   DecodeVector(Member(j, "v"), f + ".v")};
  if (DecodeMatrix(Member(j, "B"), f + ".B") != w.Outer()) {
    throw ParseError(f + ".B is not the outer product of u and v");
  }
  return w;
}

bool DecodeBool(const Json& j, std::string_view field) {
  if (!j.is_boolean()) throw ParseError(std::string(field) + ": expected a boolean");
  return j.get<bool>();
}

}  // namespace irank::cli
