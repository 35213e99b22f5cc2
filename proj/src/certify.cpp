#include "appell/certify.hpp"

#include <algorithm>
#include <sstream>

namespace appell {

namespace {

template <class T>
std::string mismatch(const char* what, std::size_t n, const T& got, const T& want) {
    std::ostringstream os;
    os << what << " differs at n=" << n << ": " << got << " vs " << want;
    return os.str();
}

void note(Certification& c, std::string detail) {
    if (c.agree) c.detail = std::move(detail);
    c.agree = false;
}

Certification compare_egf(const FamilyDescriptor& family, const MomentSequence& u, long x, std::size_t n_max) {
    Certification c{"egf_x" + std::to_string(x), n_max + 1, true, {}};
    const auto oracle = egf_moments(EgfSpec::of(family, x), n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Integer via_umbra = evaluate(appell_poly(u, n), Integer(x));
        if (via_umbra != oracle[n]) note(c, mismatch("A_n(x)", n, via_umbra.get_str(), oracle[n].get_str()));
        const Integer via_closed = evaluate(closed_form_poly(family, n), Integer(x));
        if (via_closed != oracle[n]) note(c, mismatch("closed form at x", n, via_closed.get_str(), oracle[n].get_str()));
    }
    return c;
}

Certification compare_closed_form(const FamilyDescriptor& family, const MomentSequence& u, std::size_t n_max) {
    Certification c{"closed_form", n_max + 1, true, {}};
    for (std::size_t n = 0; n <= n_max; ++n) {
        const IntPoly a = appell_poly(u, n);
        const IntPoly b = closed_form_poly(family, n);
        if (a != b) note(c, mismatch("A_n(x)", n, to_string(a), to_string(b)));
    }
    return c;
}

// Raw count over [N + r] with 1..r in distinct cycles equals
// N!/(N-r)! * D_{N-r,r}(0) for N >= r, and zero below.
Certification compare_brute_force_derangements(const FamilyDescriptor& family, const MomentSequence& u,
                                               std::size_t n_max) {
    const std::size_t r = family.r;
    Certification c{"brute_force_permutations", 0, true, {}};
    for (std::size_t total = 0; total + r <= 9; ++total) {
        if (total >= r && total - r > n_max) break;
        const Integer counted = brute_force_derangements(total, r);
        Integer expected = 0;
        if (total >= r) {
            expected = u.moment(total - r);
            for (std::size_t i = total - r + 1; i <= total; ++i) expected *= static_cast<unsigned long>(i);
        }
        ++c.compared;
        if (counted != expected) note(c, mismatch("permutation count", total, counted.get_str(), expected.get_str()));
    }
    return c;
}

std::vector<Certification> compare_lah(const FamilyDescriptor& family, const MomentSequence& u, std::size_t n_max) {
    const unsigned r = family.r;
    std::vector<Certification> out;

    const Triangle closed = r_lah_triangle(n_max, r);
    if (r == 0) {
        Certification c{"lah_recurrence", 0, true, {}};
        const Triangle rec = lah_triangle(n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            for (std::size_t k = 0; k <= n; ++k, ++c.compared) {
                if (rec[n][k] != closed[n][k]) {
                    note(c, mismatch("L(n,k) recurrence", n, rec[n][k].get_str(), closed[n][k].get_str()));
                }
            }
        }
        out.push_back(std::move(c));
    }

    Certification egf{"egf_triangle", 0, true, {}};
    const Triangle oracle = egf_r_lah_triangle(n_max, r);
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t k = 0; k <= n; ++k, ++egf.compared) {
            if (oracle[n][k] != closed[n][k]) {
                note(egf, mismatch("triangle entry", n, closed[n][k].get_str(), oracle[n][k].get_str()));
            }
        }
    }
    out.push_back(std::move(egf));

    Certification totals{"row_sums", n_max + 1, true, {}};
    const auto sums = r_lah_totals(n_max, r);
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (sums[n] != u.moment(n)) note(totals, mismatch("row sum", n, sums[n].get_str(), u.moment(n).get_str()));
    }
    out.push_back(std::move(totals));

    Certification brute{"brute_force_lists", 0, true, {}};
    for (std::size_t n = 0; n + r <= 7 && n <= n_max; ++n) {
        for (std::size_t k = 0; k <= n; ++k, ++brute.compared) {
            const Integer counted = brute_force_lah(n, k, r);
            if (counted != closed[n][k]) {
                note(brute, mismatch("list partitions", n, counted.get_str(), closed[n][k].get_str()));
            }
        }
    }
    out.push_back(std::move(brute));
    return out;
}

}  // namespace

std::vector<Certification> certify_family(const FamilyDescriptor& family, std::size_t n_max) {
    const auto u = make_umbra(family);
    std::vector<Certification> out;
    out.push_back(compare_egf(family, *u, 0, n_max));
    out.push_back(compare_egf(family, *u, 1, n_max));
    out.push_back(compare_closed_form(family, *u, n_max));
    if (family.kind == FamilyKind::derangement || family.kind == FamilyKind::r_derangement) {
        out.push_back(compare_brute_force_derangements(family, *u, n_max));
    } else {
        auto lah = compare_lah(family, *u, n_max);
        std::move(lah.begin(), lah.end(), std::back_inserter(out));
    }
    return out;
}

bool all_agree(const std::vector<Certification>& certs) {
    return std::all_of(certs.begin(), certs.end(), [](const Certification& c) { return c.agree; });
}

}  // namespace appell
