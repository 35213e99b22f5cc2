#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "appell/families.hpp"

namespace appell {

/// Outcome of comparing one generator route against one oracle.
struct Certification {
    std::string name;
    std::size_t compared = 0;
    bool agree = true;
    std::string detail;  // first disagreement, empty when agree
};

/// Cross-checks a family up to index n_max:
///  - umbra moments vs the EGF oracle at x = 0 and x = 1,
///  - appell_poly vs the closed-form polynomial,
///  - derangement kinds: brute-force permutation counts (n + r <= 9),
///  - Lah kinds: closed-form triangle vs recurrence, EGF triangle and
///    brute-force list partitions (n + r <= 7).
std::vector<Certification> certify_family(const FamilyDescriptor& family, std::size_t n_max);

bool all_agree(const std::vector<Certification>& certs);

}  // namespace appell
