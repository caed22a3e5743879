// Report assembly: every CLI subcommand produces one JSON document under the
// "hopfcalc/1" schema (big integers as decimal strings) plus a plain-text
// rendering. Warnings collect the places where the source material is
// internally inconsistent or where a default had to be assumed.
#ifndef HOPFCALC_REPORT_HPP
#define HOPFCALC_REPORT_HPP

#include "hopfcalc/autos.hpp"
#include "hopfcalc/groupcoh.hpp"
#include "hopfcalc/hopfcoh.hpp"
#include "hopfcalc/link.hpp"
#include "hopfcalc/milnor.hpp"
#include "hopfcalc/poly.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hopfcalc {
namespace report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hopfcalc/1";

enum class TableMode { theorem, derivation, both };

struct AnalyzeOptions {
    ExponentVector exponents;
    std::string input_echo;                     // the polynomial or exponent text as given
    std::optional<BigInt> tau_override;          // complete-intersection pathway
    std::optional<RationalMatrix> action;        // middle deck action; identity when absent
    std::vector<RationalMatrix> finite_part;
    std::optional<std::int64_t> bundle_p;        // restrict tables to one p
    TableMode mode = TableMode::both;
    bool run_oracle = false;
    std::uint64_t oracle_cap = 100000;
    std::int64_t autos_k = 1;
};

Json milnor_report(const ExponentVector& a, const std::optional<BigInt>& weight_count_cap);
Json link_report(const ExponentVector& a, bool run_oracle, std::uint64_t cap);
Json quotient_report(std::int64_t n, std::int64_t middle_betti,
                     const std::optional<RationalMatrix>& action,
                     const std::vector<RationalMatrix>& finite_part);
Json cohomology_report(std::int64_t n, const std::optional<BigInt>& tau,
                       const std::optional<std::int64_t>& only_p, TableMode mode, bool bvdv);
Json local_system_report(std::int64_t n, const groupcoh::LocalSystemRep& rep,
                         std::int64_t middle_betti);
Json autocheck_report(const ExponentVector& a, std::int64_t k);
Json quadric_report(const autos::QuadricAutoParams& params, bool both_variants, bool probe,
                    std::int64_t iterations, double epsilon);
Json hodge_report(const hopfcoh::E1Table& e1);
Json analyze_report(const AnalyzeOptions& options);

// True when the --oracle cross-check inside a link report disagrees with the
// divisor pipeline; the CLI must exit nonzero in that case.
bool oracle_disagrees(const Json& report);

std::string render_text(const Json& report);

// Serialization used for byte-for-byte determinism: two-space indent plus a
// trailing newline.
std::string to_json_string(const Json& report);

} // namespace report
} // namespace hopfcalc

#endif
