#include "appell/golden.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "appell/certify.hpp"

namespace appell {

namespace {

constexpr std::size_t kMomentCount = 30;
constexpr std::size_t kPolyCount = 10;
constexpr std::size_t kTriangleRows = 12;

nlohmann::json strings(const std::vector<Integer>& v) {
    auto out = nlohmann::json::array();
    for (const auto& a : v) out.push_back(a.get_str());
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::vector<FamilyDescriptor> golden_families() {
    std::vector<FamilyDescriptor> out;
    for (auto kind : all_kinds()) {
        auto probe = FamilyDescriptor::make(kind);
        if (!probe.has_r()) {
            out.push_back(probe);
            continue;
        }
        for (unsigned r = 0; r <= 2; ++r) out.push_back(FamilyDescriptor::make(kind, r));
    }
    return out;
}

std::string golden_filename(const FamilyDescriptor& family) {
    std::string name = family.name();
    if (family.has_r()) name += "_r" + std::to_string(family.r);
    return name + ".json";
}

nlohmann::json golden_document(const FamilyDescriptor& family) {
    const auto u = make_umbra(family);
    nlohmann::json doc;
    doc["family"] = family.name();
    doc["r"] = family.r;
    doc["expected_t"] = family.expected_t;
    doc["moments"] = strings(u->moments(kMomentCount));
    auto polys = nlohmann::json::array();
    for (std::size_t n = 0; n <= kPolyCount; ++n) polys.push_back(to_decimal_strings(appell_poly(*u, n)));
    doc["polynomials"] = std::move(polys);
    if (family.kind == FamilyKind::modified_lah || family.kind == FamilyKind::modified_r_lah) {
        auto rows = nlohmann::json::array();
        for (const auto& row : r_lah_triangle(kTriangleRows, family.r)) rows.push_back(strings(row));
        doc["triangle"] = std::move(rows);
    }
    return doc;
}

std::string golden_text(const FamilyDescriptor& family) { return golden_document(family).dump(2) + "\n"; }

std::vector<GoldenChange> regenerate_golden(const std::filesystem::path& dir, bool write) {
    const auto families = golden_families();
    for (const auto& f : families) {
        for (const auto& c : certify_family(f, 15)) {
            if (!c.agree) {
                throw std::runtime_error("certification failed for " + golden_filename(f) + " (" + c.name +
                                         "): " + c.detail);
            }
        }
    }

    std::vector<GoldenChange> changes;
    if (write) std::filesystem::create_directories(dir);
    for (const auto& f : families) {
        GoldenChange change{golden_filename(f)};
        const auto path = dir / change.file;
        const std::string fresh = golden_text(f);
        if (!std::filesystem::exists(path)) {
            change.state = GoldenChange::State::created;
        } else if (read_file(path) != fresh) {
            change.state = GoldenChange::State::changed;
        }
        if (write && change.state != GoldenChange::State::unchanged) {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            out << fresh;
            if (!out) throw std::runtime_error("cannot write " + path.string());
        }
        changes.push_back(std::move(change));
    }
    return changes;
}

}  // namespace appell
