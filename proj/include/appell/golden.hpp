#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "appell/families.hpp"

namespace appell {

/// Families with a golden file: each kind, with r in {0, 1, 2} where it applies.
std::vector<FamilyDescriptor> golden_families();

/// e.g. "derangement.json", "modified-r-lah_r2.json"
std::string golden_filename(const FamilyDescriptor& family);

/// Certified values as decimal strings: moments A_0..A_30, polynomials
/// A_0(x)..A_10(x) (x^0 first) and, for Lah kinds, the triangle to n = 12.
nlohmann::json golden_document(const FamilyDescriptor& family);

/// Serialized form written to disk (two-space indent, trailing newline).
std::string golden_text(const FamilyDescriptor& family);

struct GoldenChange {
    enum class State { unchanged, changed, created };
    std::string file;
    State state = State::unchanged;
};

/// Compares freshly generated documents with the files in dir and, when
/// write is set, rewrites every file that differs. Throws std::runtime_error
/// without touching dir if any family fails oracle certification.
std::vector<GoldenChange> regenerate_golden(const std::filesystem::path& dir, bool write);

}  // namespace appell
