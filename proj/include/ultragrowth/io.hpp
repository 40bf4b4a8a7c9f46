#pragma once

#include "ultragrowth/assocfn.hpp"
#include "ultragrowth/conjugate.hpp"
#include "ultragrowth/lambdanorms.hpp"
#include "ultragrowth/log_sequence.hpp"
#include "ultragrowth/oscillator.hpp"
#include "ultragrowth/relations.hpp"
#include "ultragrowth/verdict.hpp"
#include "ultragrowth/weight_fn.hpp"
#include "ultragrowth/weight_matrix.hpp"

#include "json.hpp"

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ultragrowth {

/// Malformed input file or spec; the message names the origin and position.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// Finite values as numbers, +-inf and nan as the strings "inf", "-inf", "nan".
Json number_json(double x);
double number_from_json(const Json& j, const std::string& where);

/// Parses text as JSON; syntax errors become FormatError with the byte offset.
Json parse_json(const std::string& text, const std::string& origin);
Json load_json(const std::string& path);

// Sequence file: {"name", "kind": explicit|gevrey|oscillator|generated,
// "log_values": [...], "s": gevrey order, "truncation": for gevrey without values}
Json to_json(const LogSequence& m);
LogSequence sequence_from_json(const Json& j, const std::string& origin, int default_truncation);
LogSequence load_sequence(const std::string& path, int default_truncation = 4096);

// Matrix file: {"name", "entries": {"<lambda>": <sequence>}}
Json to_json(const WeightMatrix& m);
WeightMatrix matrix_from_json(const Json& j, const std::string& origin);
WeightMatrix load_matrix(const std::string& path);

// Coefficients: {"kind", "values": [...], "i": k, "weight": spec, "support": K}
Json to_json(const CoefficientFamily& c);
CoefficientFamily coefficients_from_json(const Json& j, const std::string& origin);
CoefficientFamily load_coefficients(const std::string& path);

/// Weight mini-language: "t^a" (normalized power), "raw:t^a", "log1p",
/// "logtrunc", "gevrey:<s>" (omega of p!^s), "assoc:<file>" (omega of a
/// sequence file). Renders back through WeightFn::spec().
WeightFn parse_weight_spec(std::string_view spec, int truncation = 4096);

/// "gevrey:<s>" as a closed-form source, anything else a sequence file.
std::shared_ptr<const SequenceSource> parse_sequence_spec(std::string_view spec,
                                                          int truncation = 4096);
/// As above, materialized to `truncation`.
LogSequence materialize_sequence_spec(std::string_view spec, int truncation = 4096);

/// TSV rows "t\tw(t)" with round-trip number formatting.
void write_curve_tsv(std::ostream& out, const WeightFn& w, const std::vector<double>& ts);
/// Sampled weight from "t\tw(t)" rows; lines starting with '#' are skipped.
WeightFn read_curve_tsv(std::istream& in, const std::string& origin, bool normalized = false);
void write_conjugate_tsv(std::ostream& out, const ConjugateTable& table);

Json to_json(const Verdict& v);
Json to_json(const RelationReport& r);
Json to_json(const ConjugateTable& t);
Json to_json(const NormResult& r);
Json to_json(const DominationReport& r);
Json to_json(const TrivialityReport& r);
Json to_json(const OscillatorPlan& p);
/// Plan, stage trace and anchor table.
Json to_json(const OscillatorResult& r);

}  // namespace ultragrowth
