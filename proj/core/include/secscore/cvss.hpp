#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace secscore {

enum class Av { Network, Adjacent, Local, Physical };
enum class Ac { Low, High };
enum class Pr { None, Low, High };
enum class Ui { None, Required };
enum class Scope { Unchanged, Changed };
enum class Impact { None, Low, High };
enum class ExploitCodeMaturity { NotDefined, Unproven, ProofOfConcept, Functional, High };
enum class RemediationLevel { NotDefined, OfficialFix, TemporaryFix, Workaround, Unavailable };
enum class ReportConfidence { NotDefined, Unknown, Reasonable, Confirmed };
enum class Requirement { NotDefined, Low, Medium, High };

struct CvssV31Vector {
    Av av{};
    Ac ac{};
    Pr pr{};
    Ui ui{};
    Scope scope{};
    Impact c{}, i{}, a{};

    ExploitCodeMaturity e = ExploitCodeMaturity::NotDefined;
    RemediationLevel rl = RemediationLevel::NotDefined;
    ReportConfidence rc = ReportConfidence::NotDefined;

    Requirement cr = Requirement::NotDefined;
    Requirement ir = Requirement::NotDefined;
    Requirement ar = Requirement::NotDefined;
    std::optional<Av> av_m;
    std::optional<Ac> ac_m;
    std::optional<Pr> pr_m;
    std::optional<Ui> ui_m;
    std::optional<Scope> scope_m;
    std::optional<Impact> c_m, i_m, a_m;

    bool operator==(const CvssV31Vector&) const = default;
};

// Metric weights from the official CVSS v3.1 specification.
struct CvssConstants {
    static double av(Av v);
    static double ac(Ac v);
    static double pr(Pr v, Scope context);
    static double ui(Ui v);
    static double cia(Impact v);
    static double e(ExploitCodeMaturity v);
    static double rl(RemediationLevel v);
    static double rc(ReportConfidence v);
    static double req(Requirement v);
};

// Throws MalformedVector on grammar violations, unknown or duplicate metrics,
// or missing mandatory base metrics. Metric order in the input is free.
CvssV31Vector parse_vector(std::string_view text);

// Canonical serialization: specification metric order, NotDefined omitted.
std::string to_vector_string(const CvssV31Vector& v);

// Smallest one-decimal value >= n, computed over integers scaled by 1e5 so
// binary representation artifacts do not bump the result to the next tenth.
double roundup(double n);

struct BaseBreakdown {
    double iss;
    double impact;
    double exploitability;
    double base;
};

struct EnvBreakdown {
    double iss_m;
    double impact_m;
    double exploitability_m;
    double environmental;
};

BaseBreakdown base_score(const CvssV31Vector& v);

double temporal_score(const CvssV31Vector& v, double base);

EnvBreakdown environmental_score(const CvssV31Vector& v);

enum class Severity { None, Low, Medium, High, Critical };

Severity severity(double score);
std::string_view severity_name(Severity s);

}  // namespace secscore
