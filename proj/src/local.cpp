#include "quivarity/local.hpp"

#include <stdexcept>
#include <string>

#include "quivarity/reduction.hpp"

namespace quivarity {

namespace {

std::vector<std::string> factor_vertex_ids(std::size_t count) {
    std::size_t width = std::to_string(count == 0 ? 1 : count).size();
    std::vector<std::string> ids;
    ids.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
        std::string num = std::to_string(i);
        ids.push_back("s" + std::string(width - num.size(), '0') + num);
    }
    return ids;
}

}  // namespace

LocalQuiverSetting local_quiver(const QuiverSetting& s, const Decomposition& d) {
    if (!is_valid_decomposition(s, d))
        throw std::invalid_argument("local_quiver: invalid decomposition");
    const std::size_t k = d.factors.size();
    const EulerForm e = euler_matrix(s.quiver);

    std::vector<Arrow> arrows;
    std::vector<Int> dims(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        dims[i] = d.factors[i].multiplicity;
        for (std::size_t j = 0; j < k; ++j) {
            Int delta = (i == j) ? 1 : 0;
            Int count = delta - chi(e, d.factors[i].beta, d.factors[j].beta);
            if (count < 0)
                throw std::invalid_argument("local_quiver: negative arrow count");
            for (Int c = 0; c < count; ++c)
                arrows.push_back({static_cast<int>(j), static_cast<int>(i)});
        }
    }
    Quiver q = Quiver::from_indexed(factor_vertex_ids(k), std::move(arrows));
    return LocalQuiverSetting{QuiverSetting(std::move(q), DimensionVector(std::move(dims))), d};
}

QuiverSetting minimize_non_coregular(const QuiverSetting& s) {
    QuiverSetting cur = s;
    bool changed = true;
    while (changed) {
        changed = false;
        const auto& arrows = cur.quiver.arrows();
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            std::vector<Arrow> fewer;
            fewer.reserve(arrows.size() - 1);
            for (std::size_t j = 0; j < arrows.size(); ++j)
                if (j != i) fewer.push_back(arrows[j]);
            QuiverSetting candidate(Quiver::from_indexed(cur.quiver.vertex_ids(), std::move(fewer)),
                                    cur.alpha);
            if (!classify(candidate).coregular) {
                cur = std::move(candidate);
                changed = true;
                break;
            }
        }
    }
    // drop vertices that no longer carry arrows
    std::vector<int> keep;
    for (int v = 0; v < cur.quiver.vertex_count(); ++v) {
        bool incident = false;
        for (const Arrow& a : cur.quiver.arrows())
            if (a.src == v || a.dst == v) incident = true;
        if (incident) keep.push_back(v);
    }
    if (static_cast<int>(keep.size()) < cur.quiver.vertex_count()) {
        QuiverSetting trimmed = induced_subsetting(cur, keep);
        if (!classify(trimmed).coregular) cur = std::move(trimmed);
    }
    return cur;
}

LocalConsistencyReport local_consistency_check(const QuiverSetting& s, std::size_t limit) {
    if (!s.genuine())
        throw std::invalid_argument("local_consistency_check: setting must be genuine");
    LocalConsistencyReport report;
    report.setting_coregular = classify(s).coregular;

    DecompositionList decompositions = enumerate_decompositions(s, limit);
    report.truncated = decompositions.truncated;
    for (const Decomposition& d : decompositions.items) {
        ++report.decompositions_checked;
        LocalQuiverSetting lq = local_quiver(s, d);
        if (classify(lq.setting).coregular) continue;
        LocalWitness witness{d, lq.setting, minimize_non_coregular(lq.setting)};
        if (report.setting_coregular) {
            report.bug_witnesses.push_back(std::move(witness));
        } else if (!report.counterexample) {
            report.counterexample = std::move(witness);
        }
    }
    return report;
}

}  // namespace quivarity
