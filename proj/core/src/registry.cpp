#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "secscore/errors.hpp"
#include "secscore/fitting.hpp"

namespace secscore {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json category_to_json(const CategoryKey& key) {
    const char* kind = key.kind == CategoryKind::General ? "general"
                       : key.kind == CategoryKind::Type ? "type"
                                                        : "platform";
    return json{{"kind", kind}, {"label", key.label}};
}

CategoryKey category_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    CategoryKey key;
    key.label = j.at("label").get<std::string>();
    if (kind == "general") key.kind = CategoryKind::General;
    else if (kind == "type") key.kind = CategoryKind::Type;
    else if (kind == "platform") key.kind = CategoryKind::Platform;
    else throw SchemaError("registry: unknown category kind '" + kind + "'");
    return key;
}

json params_to_json(const FamilyParams& params) {
    if (const auto* al = std::get_if<AlParams>(&params)) {
        return json{{"mu", al->mu}, {"lambda", al->lambda}, {"kappa", al->kappa}};
    }
    if (const auto* lp = std::get_if<LaplaceParams>(&params)) {
        return json{{"mu", lp->mu}, {"b", lp->b}};
    }
    const auto& sn = std::get<SkewNormalParams>(params);
    return json{{"xi", sn.xi}, {"omega", sn.omega}, {"alpha", sn.alpha}};
}

FamilyParams params_from_json(Family family, const json& j) {
    switch (family) {
        case Family::Al:
            return AlParams{j.at("mu").get<double>(), j.at("lambda").get<double>(),
                            j.at("kappa").get<double>()};
        case Family::Laplace:
            return LaplaceParams{j.at("mu").get<double>(), j.at("b").get<double>()};
        case Family::SkewNormal:
            return SkewNormalParams{j.at("xi").get<double>(), j.at("omega").get<double>(),
                                    j.at("alpha").get<double>()};
    }
    throw SchemaError("registry: bad family");
}

json optional_number(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

double number_or_nan(const json& j, const char* field) {
    if (!j.contains(field) || j.at(field).is_null()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return j.at(field).get<double>();
}

}  // namespace

std::string registry_timestamp() {
    std::time_t now = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        now = std::time_t(std::strtoll(epoch, nullptr, 10));
    }
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void save_registry(const ModelRegistry& reg, const std::filesystem::path& path) {
    json entries = json::array();
    for (const auto& [key, fits] : reg.entries) {
        json fit_list = json::array();
        for (const FitResult& fit : fits.fits) {
            fit_list.push_back(json{{"family", std::string(family_name(fit.family))},
                                    {"params", params_to_json(fit.params)},
                                    {"log_likelihood", optional_number(fit.log_likelihood)},
                                    {"mse", optional_number(fit.mse)},
                                    {"converged", fit.converged}});
        }
        entries.push_back(json{{"category", category_to_json(key)},
                               {"n", fits.n},
                               {"best_family", std::string(family_name(fits.best_family))},
                               {"fits", std::move(fit_list)}});
    }
    json failures = json::array();
    for (const auto& [key, message] : reg.failures) {
        failures.push_back(json{{"category", category_to_json(key)}, {"error", message}});
    }
    const json doc{{"schema_version", reg.schema_version},
                   {"snapshot_id", reg.snapshot_id},
                   {"created", reg.created},
                   {"entries", std::move(entries)},
                   {"failures", std::move(failures)}};

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write: " + path.string());
    out << doc.dump(2) << '\n';
}

ModelRegistry load_registry(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw SchemaError("registry: " + std::string(e.what()));
    }

    try {
        const int version = doc.at("schema_version").get<int>();
        if (version > kSchemaVersion) {
            throw SchemaVersionError("registry schema version " + std::to_string(version) +
                                     " is newer than supported " +
                                     std::to_string(kSchemaVersion));
        }
        ModelRegistry reg;
        reg.schema_version = version;
        reg.snapshot_id = doc.value("snapshot_id", "");
        reg.created = doc.value("created", "");
        for (const json& entry : doc.at("entries")) {
            const CategoryKey key = category_from_json(entry.at("category"));
            CategoryFits fits;
            fits.n = entry.at("n").get<std::size_t>();
            const auto best = family_from(entry.at("best_family").get<std::string>());
            if (!best) throw SchemaError("registry: unknown best_family");
            fits.best_family = *best;
            for (const json& fj : entry.at("fits")) {
                const auto family = family_from(fj.at("family").get<std::string>());
                if (!family) throw SchemaError("registry: unknown family");
                FitResult fit;
                fit.family = *family;
                fit.params = params_from_json(*family, fj.at("params"));
                fit.log_likelihood = number_or_nan(fj, "log_likelihood");
                fit.mse = number_or_nan(fj, "mse");
                fit.converged = fj.value("converged", true);
                fit.n = fits.n;
                fits.fits.push_back(std::move(fit));
            }
            reg.entries.emplace(key, std::move(fits));
        }
        if (doc.contains("failures")) {
            for (const json& fj : doc.at("failures")) {
                reg.failures.emplace_back(category_from_json(fj.at("category")),
                                          fj.at("error").get<std::string>());
            }
        }
        return reg;
    } catch (const json::exception& e) {
        throw SchemaError("registry: " + std::string(e.what()));
    }
}

}  // namespace secscore
