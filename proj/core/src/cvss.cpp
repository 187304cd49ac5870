#include "secscore/cvss.hpp"

#include <cmath>
#include <vector>

#include "secscore/errors.hpp"

namespace secscore {

double CvssConstants::av(Av v) {
    switch (v) {
        case Av::Network: return 0.85;
        case Av::Adjacent: return 0.62;
        case Av::Local: return 0.55;
        case Av::Physical: return 0.2;
    }
    return 0.0;
}

double CvssConstants::ac(Ac v) {
    return v == Ac::Low ? 0.77 : 0.44;
}

double CvssConstants::pr(Pr v, Scope context) {
    switch (v) {
        case Pr::None: return 0.85;
        case Pr::Low: return context == Scope::Changed ? 0.68 : 0.62;
        case Pr::High: return context == Scope::Changed ? 0.5 : 0.27;
    }
    return 0.0;
}

double CvssConstants::ui(Ui v) {
    return v == Ui::None ? 0.85 : 0.62;
}

double CvssConstants::cia(Impact v) {
    switch (v) {
        case Impact::None: return 0.0;
        case Impact::Low: return 0.22;
        case Impact::High: return 0.56;
    }
    return 0.0;
}

double CvssConstants::e(ExploitCodeMaturity v) {
    switch (v) {
        case ExploitCodeMaturity::NotDefined: return 1.0;
        case ExploitCodeMaturity::Unproven: return 0.91;
        case ExploitCodeMaturity::ProofOfConcept: return 0.94;
        case ExploitCodeMaturity::Functional: return 0.97;
        case ExploitCodeMaturity::High: return 1.0;
    }
    return 1.0;
}

double CvssConstants::rl(RemediationLevel v) {
    switch (v) {
        case RemediationLevel::NotDefined: return 1.0;
        case RemediationLevel::OfficialFix: return 0.95;
        case RemediationLevel::TemporaryFix: return 0.96;
        case RemediationLevel::Workaround: return 0.97;
        case RemediationLevel::Unavailable: return 1.0;
    }
    return 1.0;
}

double CvssConstants::rc(ReportConfidence v) {
    switch (v) {
        case ReportConfidence::NotDefined: return 1.0;
        case ReportConfidence::Unknown: return 0.92;
        case ReportConfidence::Reasonable: return 0.96;
        case ReportConfidence::Confirmed: return 1.0;
    }
    return 1.0;
}

double CvssConstants::req(Requirement v) {
    switch (v) {
        case Requirement::NotDefined: return 1.0;
        case Requirement::Low: return 0.5;
        case Requirement::Medium: return 1.0;
        case Requirement::High: return 1.5;
    }
    return 1.0;
}

namespace {

[[noreturn]] void bad(const std::string& msg) {
    throw MalformedVector("malformed vector: " + msg);
}

template <typename T>
T pick(std::string_view metric, std::string_view value, std::string_view letters,
       std::initializer_list<T> mapped) {
    if (value.size() == 1) {
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (letters[i] == value[0]) return mapped.begin()[i];
        }
    }
    bad("unknown value '" + std::string(value) + "' for metric " + std::string(metric));
}

struct Piece {
    std::string_view metric;
    std::string_view value;
};

}  // namespace

CvssV31Vector parse_vector(std::string_view text) {
    constexpr std::string_view prefix = "CVSS:3.1/";
    if (text.substr(0, prefix.size()) != prefix) bad("expected 'CVSS:3.1/' prefix");

    std::vector<Piece> pieces;
    std::string_view rest = text.substr(prefix.size());
    while (!rest.empty()) {
        const std::size_t slash = rest.find('/');
        const std::string_view pair = rest.substr(0, slash);
        rest = slash == std::string_view::npos ? std::string_view{} : rest.substr(slash + 1);
        if (slash != std::string_view::npos && rest.empty()) bad("trailing '/'");
        const std::size_t colon = pair.find(':');
        if (colon == std::string_view::npos || colon == 0 || colon + 1 >= pair.size()) {
            bad("expected METRIC:VALUE, got '" + std::string(pair) + "'");
        }
        pieces.push_back({pair.substr(0, colon), pair.substr(colon + 1)});
    }

    CvssV31Vector v;
    bool seen[22] = {};
    auto mark = [&](int slot, std::string_view metric) {
        if (seen[slot]) bad("duplicate metric " + std::string(metric));
        seen[slot] = true;
    };

    for (const Piece& p : pieces) {
        const std::string_view m = p.metric;
        const std::string_view val = p.value;
        if (m == "AV") { mark(0, m); v.av = pick<Av>(m, val, "NALP", {Av::Network, Av::Adjacent, Av::Local, Av::Physical}); }
        else if (m == "AC") { mark(1, m); v.ac = pick<Ac>(m, val, "LH", {Ac::Low, Ac::High}); }
        else if (m == "PR") { mark(2, m); v.pr = pick<Pr>(m, val, "NLH", {Pr::None, Pr::Low, Pr::High}); }
        else if (m == "UI") { mark(3, m); v.ui = pick<Ui>(m, val, "NR", {Ui::None, Ui::Required}); }
        else if (m == "S") { mark(4, m); v.scope = pick<Scope>(m, val, "UC", {Scope::Unchanged, Scope::Changed}); }
        else if (m == "C") { mark(5, m); v.c = pick<Impact>(m, val, "NLH", {Impact::None, Impact::Low, Impact::High}); }
        else if (m == "I") { mark(6, m); v.i = pick<Impact>(m, val, "NLH", {Impact::None, Impact::Low, Impact::High}); }
        else if (m == "A") { mark(7, m); v.a = pick<Impact>(m, val, "NLH", {Impact::None, Impact::Low, Impact::High}); }
        else if (m == "E") { mark(8, m); v.e = pick<ExploitCodeMaturity>(m, val, "XUPFH", {ExploitCodeMaturity::NotDefined, ExploitCodeMaturity::Unproven, ExploitCodeMaturity::ProofOfConcept, ExploitCodeMaturity::Functional, ExploitCodeMaturity::High}); }
        else if (m == "RL") { mark(9, m); v.rl = pick<RemediationLevel>(m, val, "XOTWU", {RemediationLevel::NotDefined, RemediationLevel::OfficialFix, RemediationLevel::TemporaryFix, RemediationLevel::Workaround, RemediationLevel::Unavailable}); }
        else if (m == "RC") { mark(10, m); v.rc = pick<ReportConfidence>(m, val, "XURC", {ReportConfidence::NotDefined, ReportConfidence::Unknown, ReportConfidence::Reasonable, ReportConfidence::Confirmed}); }
        else if (m == "CR") { mark(11, m); v.cr = pick<Requirement>(m, val, "XLMH", {Requirement::NotDefined, Requirement::Low, Requirement::Medium, Requirement::High}); }
        else if (m == "IR") { mark(12, m); v.ir = pick<Requirement>(m, val, "XLMH", {Requirement::NotDefined, Requirement::Low, Requirement::Medium, Requirement::High}); }
        else if (m == "AR") { mark(13, m); v.ar = pick<Requirement>(m, val, "XLMH", {Requirement::NotDefined, Requirement::Low, Requirement::Medium, Requirement::High}); }
        else if (m == "MAV") { mark(14, m); if (val != "X") v.av_m = pick<Av>(m, val, "NALP", {Av::Network, Av::Adjacent, Av::Local, Av::Physical}); }
        else if (m == "MAC") { mark(15, m); if (val != "X") v.ac_m = pick<Ac>(m, val, "LH", {Ac::Low, Ac::High}); }
        else if (m == "MPR") { mark(16, m); if (val != "X") v.pr_m = pick<Pr>(m, val, "NLH", {Pr::None, Pr::Low, Pr::High}); }
        else if (m == "MUI") { mark(17, m); if (val != "X") v.ui_m = pick<Ui>(m, val, "NR", {Ui::None, Ui::Required}); }
        else if (m == "MS") { mark(18, m); if (val != "X") v.scope_m = pick<Scope>(m, val, "UC", {Scope::Unchanged, Scope::Changed}); }
        else if (m == "MC") { mark(19, m); if (val != "X") v.c_m = pick<Impact>(m, val, "NLH", {Impact::None, Impact::Low, Impact::High}); }
        else if (m == "MI") { mark(20, m); if (val != "X") v.i_m = pick<Impact>(m, val, "NLH", {Impact::None, Impact::Low, Impact::High}); }
        else if (m == "MA") { mark(21, m); if (val != "X") v.a_m = pick<Impact>(m, val, "NLH", {Impact::None, Impact::Low, Impact::High}); }
        else bad("unknown metric '" + std::string(m) + "'");
    }

    for (int slot = 0; slot < 8; ++slot) {
        if (!seen[slot]) {
            static constexpr const char* names[8] = {"AV", "AC", "PR", "UI", "S", "C", "I", "A"};
            bad(std::string("missing mandatory metric ") + names[slot]);
        }
    }
    return v;
}

namespace {

char letter_av(Av v) { return "NALP"[int(v)]; }
char letter_ac(Ac v) { return "LH"[int(v)]; }
char letter_pr(Pr v) { return "NLH"[int(v)]; }
char letter_ui(Ui v) { return "NR"[int(v)]; }
char letter_scope(Scope v) { return "UC"[int(v)]; }
char letter_cia(Impact v) { return "NLH"[int(v)]; }

}  // namespace

std::string to_vector_string(const CvssV31Vector& v) {
    std::string out = "CVSS:3.1";
    auto put = [&out](std::string_view metric, char value) {
        out += '/';
        out += metric;
        out += ':';
        out += value;
    };
    put("AV", letter_av(v.av));
    put("AC", letter_ac(v.ac));
    put("PR", letter_pr(v.pr));
    put("UI", letter_ui(v.ui));
    put("S", letter_scope(v.scope));
    put("C", letter_cia(v.c));
    put("I", letter_cia(v.i));
    put("A", letter_cia(v.a));
    if (v.e != ExploitCodeMaturity::NotDefined) put("E", "XUPFH"[int(v.e)]);
    if (v.rl != RemediationLevel::NotDefined) put("RL", "XOTWU"[int(v.rl)]);
    if (v.rc != ReportConfidence::NotDefined) put("RC", "XURC"[int(v.rc)]);
    if (v.cr != Requirement::NotDefined) put("CR", "XLMH"[int(v.cr)]);
    if (v.ir != Requirement::NotDefined) put("IR", "XLMH"[int(v.ir)]);
    if (v.ar != Requirement::NotDefined) put("AR", "XLMH"[int(v.ar)]);
    if (v.av_m) put("MAV", letter_av(*v.av_m));
    if (v.ac_m) put("MAC", letter_ac(*v.ac_m));
    if (v.pr_m) put("MPR", letter_pr(*v.pr_m));
    if (v.ui_m) put("MUI", letter_ui(*v.ui_m));
    if (v.scope_m) put("MS", letter_scope(*v.scope_m));
    if (v.c_m) put("MC", letter_cia(*v.c_m));
    if (v.i_m) put("MI", letter_cia(*v.i_m));
    if (v.a_m) put("MA", letter_cia(*v.a_m));
    return out;
}

double roundup(double n) {
    const long long scaled = (long long)std::floor(n * 100000.0 + 0.5);
    if (scaled % 10000 == 0) return double(scaled) / 100000.0;
    return double(scaled / 10000 + 1) / 10.0;
}

BaseBreakdown base_score(const CvssV31Vector& v) {
    BaseBreakdown b{};
    b.iss = 1.0 - (1.0 - CvssConstants::cia(v.c)) * (1.0 - CvssConstants::cia(v.i)) *
                      (1.0 - CvssConstants::cia(v.a));
    if (v.scope == Scope::Unchanged) {
        b.impact = 6.42 * b.iss;
    } else {
        b.impact = 7.52 * (b.iss - 0.029) - 3.25 * std::pow(b.iss - 0.02, 15.0);
    }
    b.exploitability = 8.22 * CvssConstants::av(v.av) * CvssConstants::ac(v.ac) *
                       CvssConstants::pr(v.pr, v.scope) * CvssConstants::ui(v.ui);
    if (b.impact <= 0.0) {
        b.base = 0.0;
    } else if (v.scope == Scope::Unchanged) {
        b.base = roundup(std::min(b.impact + b.exploitability, 10.0));
    } else {
        b.base = roundup(std::min(1.08 * (b.impact + b.exploitability), 10.0));
    }
    return b;
}

double temporal_score(const CvssV31Vector& v, double base) {
    return roundup(base * CvssConstants::e(v.e) * CvssConstants::rl(v.rl) *
                   CvssConstants::rc(v.rc));
}

EnvBreakdown environmental_score(const CvssV31Vector& v) {
    const Scope ms = v.scope_m.value_or(v.scope);
    const double mc = CvssConstants::cia(v.c_m.value_or(v.c));
    const double mi = CvssConstants::cia(v.i_m.value_or(v.i));
    const double ma = CvssConstants::cia(v.a_m.value_or(v.a));
    const double cr = CvssConstants::req(v.cr);
    const double ir = CvssConstants::req(v.ir);
    const double ar = CvssConstants::req(v.ar);

    EnvBreakdown e{};
    e.iss_m = std::min(1.0 - (1.0 - cr * mc) * (1.0 - ir * mi) * (1.0 - ar * ma), 0.915);
    if (ms == Scope::Unchanged) {
        e.impact_m = 6.42 * e.iss_m;
    } else {
        e.impact_m = 7.52 * (e.iss_m - 0.029) - 3.25 * std::pow(e.iss_m * 0.9731 - 0.02, 13.0);
    }
    e.exploitability_m = 8.22 * CvssConstants::av(v.av_m.value_or(v.av)) *
                         CvssConstants::ac(v.ac_m.value_or(v.ac)) *
                         CvssConstants::pr(v.pr_m.value_or(v.pr), ms) *
                         CvssConstants::ui(v.ui_m.value_or(v.ui));

    const double trc = CvssConstants::e(v.e) * CvssConstants::rl(v.rl) * CvssConstants::rc(v.rc);
    if (e.impact_m <= 0.0) {
        e.environmental = 0.0;
    } else if (ms == Scope::Unchanged) {
        e.environmental = roundup(roundup(std::min(e.impact_m + e.exploitability_m, 10.0)) * trc);
    } else {
        e.environmental =
            roundup(roundup(std::min(1.08 * (e.impact_m + e.exploitability_m), 10.0)) * trc);
    }
    return e;
}

Severity severity(double score) {
    if (score <= 0.0) return Severity::None;
    if (score <= 3.9) return Severity::Low;
    if (score <= 6.9) return Severity::Medium;
    if (score <= 8.9) return Severity::High;
    return Severity::Critical;
}

std::string_view severity_name(Severity s) {
    switch (s) {
        case Severity::None: return "NONE";
        case Severity::Low: return "LOW";
        case Severity::Medium: return "MEDIUM";
        case Severity::High: return "HIGH";
        case Severity::Critical: return "CRITICAL";
    }
    return "NONE";
}

}  // namespace secscore
