#include "invgen/cli/report_json.hpp"

#include <cstdio>

namespace invgen::cli {

std::string decimal6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

Json to_json(const TorusClass& t) {
    Json j;
    j["class"] = t.str();
    j["probability"] = t.probability.str();
    if (t.family.is_type_d()) j["split"] = t.split;
    return j;
}

Json to_json(const std::vector<TorusClass>& ts) {
    Json a = Json::array();
    for (const auto& t : ts) a.push_back(t.str());
    return a;
}

Json to_json(const IncidenceMatrix& m) {
    Json j;
    j["family"] = m.family.str();
    j["columns"] = m.columns;
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.classes.size(); ++r) {
        Json cells = Json::array();
        for (bool b : m.cells[r]) cells.push_back(b ? 1 : 0);
        rows.push_back({{"class", m.classes[r].str()}, {"cells", cells}});
    }
    j["rows"] = rows;
    return j;
}

Json catalog_assumptions(const GroupFamily& family) {
    Json a = Json::array();
    if (!family.is_classical()) {
        a.push_back("families derived from closed (3-closed when 3|q) subsystems of the G2 root system");
        return a;
    }
    a.push_back("M_con(x) is the set of catalog families containing the torus of x");
    a.push_back("one conjugacy class of subgroups per family parameter tuple");
    if (family.series() == Series::OrthogonalDPlus)
        a.push_back("split classes (all parts even and positive) are merged and treated identically");
    return a;
}

Json to_json(const AbVerification& r) {
    Json j;
    j["family"] = r.family.str();
    j["empty"] = r.empty;
    j["residual"] = to_json(r.residual);
    Json elems = Json::array();
    for (const auto& x : r.ab.elements) {
        Json e;
        e["label"] = x.label;
        e["class"] = x.torus.str();
        e["probability"] = x.torus.probability.str();
        e["order_rule"] = x.order_rule;
        if (x.refinement) e["refinement"] = *x.refinement;
        e["families"] = r.per_element_families.at(x.label);
        elems.push_back(e);
    }
    j["elements"] = elems;
    Json subs = Json::array();
    for (const auto& s : r.subset_residuals) {
        subs.push_back({{"subset", s.labels},
                        {"count", s.count},
                        {"mass", s.mass.str()},
                        {"sample", to_json(s.sample)}});
    }
    j["proper_subset_residuals"] = subs;
    j["proper_subsets_nonempty"] = r.proper_subsets_nonempty;
    j["assumptions"] = catalog_assumptions(r.family);
    return j;
}

Json to_json(const SharpnessReport& r) {
    Json j;
    j["family"] = GroupFamily::symplectic(r.m, QParity::Even).str();
    j["m"] = r.m;
    j["all_triples_blocked"] = r.all_triples_blocked;
    j["proof_witnesses_valid"] = r.proof_witnesses_valid;
    j["triples"] = r.triples;
    j["min_residual_mass"] = r.min_residual_mass.str();
    j["bound"] = r.bound.str();
    Json w = Json::array();
    for (const auto& x : r.witnesses) {
        w.push_back({{"triple", to_json(x.triple)},
                     {"witness", x.witness.str()},
                     {"proof_pattern", x.proof_witness},
                     {"proof_witness_valid", x.proof_witness_valid},
                     {"residual_mass", x.residual_mass.str()}});
    }
    j["witnesses"] = w;
    return j;
}

namespace {

Json alpha_entry(const AlphaEntry& e) {
    return {{"family", e.family.str()}, {"class", e.argmin.str()}, {"value", e.value.str()}, {"bound", e.bound.str()}};
}

}  // namespace

Json to_json(const AlphaReport& r) {
    Json j;
    j["m_max"] = r.m_max;
    j["ok"] = r.ok();
    j["bound_holds"] = r.bound_holds;
    j["d4_equality"] = r.d4_equality;
    Json eq = Json::array();
    for (const auto& e : r.equality_cases) eq.push_back(alpha_entry(e));
    j["equality_cases"] = eq;
    Json all = Json::array();
    for (const auto& e : r.entries) all.push_back(alpha_entry(e));
    j["entries"] = all;
    return j;
}

Json to_json(const g2::G2Incidence& inc) {
    Json j;
    j["p3"] = inc.p3;
    j["columns"] = inc.columns;
    Json rows = Json::array();
    for (int c = 1; c <= 6; ++c) {
        Json cells = Json::array();
        for (bool b : inc.rows[c - 1]) cells.push_back(b ? 1 : 0);
        rows.push_back({{"class", "w" + std::to_string(c)}, {"cells", cells}});
    }
    j["rows"] = rows;
    j["centralizer_check"] = {{"derived", inc.centralizer_derived},
                              {"even_order_rule", inc.centralizer_even_order},
                              {"agrees", inc.centralizer_agrees}};
    return j;
}

Json to_json(const ffmc::SampleReport& r) {
    Json j;
    j["group"] = ffmc::to_string(r.group);
    j["n"] = r.n;
    j["q"] = r.q;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["streams"] = r.streams;
    j["exhaustive"] = r.exhaustive;
    j["regular_semisimple"] = r.regular_semisimple;
    j["rejections"] = r.rejections;
    Json counts = Json::object(), freqs = Json::object();
    for (const auto& [p, c] : r.counts) {
        counts[p.str()] = c;
        freqs[p.str()] = decimal6(r.samples ? static_cast<double>(c) / static_cast<double>(r.samples) : 0.0);
    }
    j["counts"] = counts;
    j["frequencies"] = freqs;
    return j;
}

Json to_json(const ffmc::DeviationTable& t) {
    Json j;
    j["group"] = ffmc::to_string(t.group);
    j["n"] = t.n;
    j["q"] = t.q;
    j["samples"] = t.samples;
    j["exhaustive"] = t.exhaustive;
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        rows.push_back({{"partition", r.partition.str()},
                        {"count", r.count},
                        {"empirical", r.empirical.str()},
                        {"frequency", decimal6(r.empirical.to_double())},
                        {"exact", r.exact.str()},
                        {"deviation", r.deviation.str()},
                        {"sigma", decimal6(r.sigma)},
                        {"threshold", decimal6(r.threshold)},
                        {"flagged", r.flagged}});
    }
    j["rows"] = rows;
    j["non_regular_semisimple"] = t.non_regular_semisimple.str();
    j["any_flagged"] = t.any_flagged;
    return j;
}

ffmc::SampleReport sample_report_from_json(const Json& j) {
    ffmc::SampleReport r;
    r.group = ffmc::parse_group(j.at("group").get<std::string>());
    r.n = j.at("n").get<int>();
    r.q = j.at("q").get<std::uint64_t>();
    r.samples = j.at("samples").get<std::uint64_t>();
    r.seed = j.value("seed", std::uint64_t{0});
    r.streams = j.value("streams", 1);
    r.exhaustive = j.value("exhaustive", false);
    r.regular_semisimple = j.at("regular_semisimple").get<std::uint64_t>();
    r.rejections = j.value("rejections", std::uint64_t{0});
    for (const auto& [k, v] : j.at("counts").items()) r.counts[Partition::parse(k)] = v.get<std::uint64_t>();
    return r;
}

}  // namespace invgen::cli
