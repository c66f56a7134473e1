#include "invgen/cli/app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "invgen/cli/report_json.hpp"
#include "invgen/errors.hpp"

namespace invgen::cli {

namespace {

struct FamilyArgs {
    std::string family;
    int n = 0;
    int m = 0;
    std::string q;
    bool p3 = false;
};

struct OutputArgs {
    std::string format = "text";
    std::string out;
};

struct McArgs {
    std::string group = "GL";
    int n = 0;
    std::uint64_t q = 0;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    int streams = 1;
    bool exhaustive = false;
    std::string report;
};

struct Document {
    Json json;
    std::string text;
    std::optional<std::string> csv;
    int exit = kSuccess;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_family_options(CLI::App* cmd, FamilyArgs& f, bool rank_needed = true) {
    cmd->add_option("--family", f.family, "A, 2A, C, B, D+, D-, G2")
        ->required()
        ->check(CLI::IsMember({"A", "2A", "C", "Sp", "B", "D+", "D-", "G2"}));
    cmd->add_option("--n", f.n, "rank (n for type A)")->check(CLI::Range(1, 1000));
    cmd->add_option("--m", f.m, "rank (m for types B, C, D)")->check(CLI::Range(1, 1000));
    cmd->add_option("--q", f.q, "parity of q")->check(CLI::IsMember({"odd", "even"}));
    cmd->add_flag("--p3", f.p3, "3 divides q (G2)");
    (void)rank_needed;
}

void add_output_options(CLI::App* cmd, OutputArgs& o) {
    cmd->add_option("--format", o.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", o.out, "write the document to this file");
}

void add_mc_options(CLI::App* cmd, McArgs& a) {
    cmd->add_option("--group", a.group, "GL or SL")->check(CLI::IsMember({"GL", "SL"}));
    cmd->add_option("--n", a.n, "matrix size")->check(CLI::Range(1, 8));
    cmd->add_option("--q", a.q, "prime field order");
    cmd->add_option("--samples", a.samples, "number of samples");
    cmd->add_option("--seed", a.seed, "generator seed");
    cmd->add_option("--streams", a.streams, "independent sampling streams")->check(CLI::Range(1, 64));
    cmd->add_flag("--exhaustive", a.exhaustive, "enumerate the whole group (order <= 10^6)");
}

GroupFamily resolve_family(const FamilyArgs& f) {
    Series s = parse_series(f.family);
    if (s == Series::G2) {
        if (f.n || f.m) throw UsageError("--n/--m do not apply to G2");
        if (!f.q.empty()) throw UsageError("--q does not apply to G2; use --p3");
        return GroupFamily::g2(f.p3);
    }
    if (f.p3) throw UsageError("--p3 applies to G2 only");
    if (f.n && f.m && f.n != f.m) throw UsageError("--n and --m disagree");
    int rank = f.n ? f.n : f.m;
    if (rank == 0) throw UsageError("--n or --m is required for family " + f.family);
    QParity parity = QParity::Odd;
    if (s == Series::SymplecticC) {
        if (f.q.empty()) throw UsageError("--q odd|even is required for family C");
        parity = f.q == "even" ? QParity::Even : QParity::Odd;
    } else if (s == Series::OrthogonalB && f.q == "even") {
        throw UsageError("family B requires q odd");
    }
    return make_family(s, rank, parity, false);
}

std::string csv_from_rows(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            bool quote = r[i].find(',') != std::string::npos;
            os << (i ? "," : "") << (quote ? "\"" + r[i] + "\"" : r[i]);
        }
        os << "\n";
    }
    return os.str();
}

// Top-level scalars as key,value lines for commands without a natural table.
std::string csv_scalars(const Json& j) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : j.items()) {
        if (v.is_structured()) continue;
        rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
    }
    return csv_from_rows({"key", "value"}, rows);
}

std::string g2_torus_order(const TorusClass& t) {
    for (const auto& c : g2::conjugacy_classes_g2())
        if (c.id == t.g2_id()) return c.torus_order;
    return "";
}

Document cmd_weyl_classes(const GroupFamily& g) {
    Document d;
    auto classes = torus_classes(g);
    Json arr = Json::array();
    std::vector<std::vector<std::string>> rows;
    std::ostringstream text;
    Rational total(0);
    text << g.str() << ": " << classes.size() << " torus classes\n";
    for (const auto& t : classes) {
        Json e = to_json(t);
        std::vector<std::string> row{t.str(), t.probability.str()};
        if (g.is_type_d()) row.push_back(t.split ? "1" : "0");
        if (!g.is_classical()) {
            e["torus_order"] = g2_torus_order(t);
            row.push_back(g2_torus_order(t));
        }
        arr.push_back(e);
        rows.push_back(row);
        total += t.probability;
        text << "  " << t.str() << "  " << t.probability << (t.split ? "  (split, merged)" : "")
             << (g.is_classical() ? "" : "  |T| = " + g2_torus_order(t)) << "\n";
    }
    text << "total " << total << "\n";
    d.json = {{"family", g.str()}, {"count", classes.size()}, {"classes", arr}, {"total", total.str()}};
    std::vector<std::string> header{"class", "probability"};
    if (g.is_type_d()) header.push_back("split");
    if (!g.is_classical()) header.push_back("torus_order");
    d.csv = csv_from_rows(header, rows);
    d.text = text.str();
    return d;
}

Document cmd_incidence(const GroupFamily& g) {
    Document d;
    auto m = incidence(g);
    d.json = to_json(m);
    std::vector<std::string> header{"class"};
    header.insert(header.end(), m.columns.begin(), m.columns.end());
    std::vector<std::vector<std::string>> rows;
    std::ostringstream text;
    text << g.str() << " incidence (" << m.classes.size() << " classes x " << m.columns.size() << " families)\n";
    for (std::size_t r = 0; r < m.classes.size(); ++r) {
        std::vector<std::string> row{m.classes[r].str()};
        text << "  " << m.classes[r].str() << ":";
        for (std::size_t c = 0; c < m.columns.size(); ++c) {
            row.push_back(m.cells[r][c] ? "1" : "0");
            if (m.cells[r][c]) text << " " << m.columns[c];
        }
        text << "\n";
        rows.push_back(row);
    }
    d.csv = csv_from_rows(header, rows);
    d.text = text.str();
    return d;
}

Document cmd_sim(const GroupFamily& g) {
    Document d;
    auto pairs = relation_sim(g);
    Json arr = Json::array();
    std::vector<std::vector<std::string>> rows;
    std::ostringstream text;
    text << g.str() << ": " << pairs.size() << " related pairs\n";
    for (const auto& [a, b] : pairs) {
        arr.push_back({a.str(), b.str()});
        rows.push_back({a.str(), b.str()});
        text << "  " << a.str() << " ~ " << b.str() << "\n";
    }
    d.json = {{"family", g.str()}, {"count", pairs.size()}, {"pairs", arr}, {"assumptions", catalog_assumptions(g)}};
    d.csv = csv_from_rows({"class_i", "class_j"}, rows);
    d.text = text.str();
    return d;
}

Document cmd_leading_term(const GroupFamily& g) {
    Document d;
    auto pairs = relation_sim(g);
    Rational total(0);
    std::map<std::string, Rational> partner;
    for (const auto& t : torus_classes(g)) partner[t.str()] = Rational(0);
    for (const auto& [a, b] : pairs) {
        total += Rational(2) * a.probability * b.probability;
        partner[a.str()] += b.probability;
        partner[b.str()] += a.probability;
    }
    Json pm = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& t : torus_classes(g)) {
        pm.push_back({{"class", t.str()}, {"probability", t.probability.str()}, {"partner_mass", partner[t.str()].str()}});
        rows.push_back({t.str(), t.probability.str(), partner[t.str()].str()});
    }
    d.json = {{"family", g.str()},
              {"leading_term", total.str()},
              {"ordered_pairs", 2 * pairs.size()},
              {"partner_mass", pm},
              {"assumptions", catalog_assumptions(g)}};
    d.csv = csv_from_rows({"class", "probability", "partner_mass"}, rows);
    d.text = total.str() + "\n";
    return d;
}

Document cmd_pinv(const GroupFamily& g, const std::string& cls) {
    Document d;
    std::vector<TorusClass> targets;
    if (cls.empty())
        targets = torus_classes(g);
    else
        targets.push_back(parse_torus_class(g, cls));
    Json arr = Json::array();
    std::vector<std::vector<std::string>> rows;
    std::ostringstream text;
    for (const auto& t : targets) {
        Rational v = pinv_leading(t);
        arr.push_back({{"class", t.str()}, {"pinv_leading", v.str()}});
        rows.push_back({t.str(), v.str()});
        text << t.str() << "  " << v << "\n";
    }
    d.json = {{"family", g.str()}, {"values", arr}};
    d.csv = csv_from_rows({"class", "pinv_leading"}, rows);
    d.text = text.str();
    return d;
}

Document cmd_verify_ab(const GroupFamily& g) {
    Document d;
    auto rep = verify_ab(g);
    d.json = to_json(rep);
    std::ostringstream text;
    text << g.str() << ": intersection " << (rep.empty ? "empty" : "NONEMPTY") << "\n";
    for (const auto& x : rep.ab.elements) {
        text << "  " << x.label << " = (" << x.torus.str() << "), families:";
        for (const auto& f : rep.per_element_families.at(x.label)) text << " " << f;
        text << "\n";
    }
    for (const auto& s : rep.subset_residuals) {
        text << "  {";
        for (std::size_t i = 0; i < s.labels.size(); ++i) text << (i ? "," : "") << s.labels[i];
        text << "}: " << s.count << " classes, mass " << s.mass << "\n";
    }
    if (!rep.empty) {
        text << "  residual:";
        for (const auto& t : rep.residual) text << " (" << t.str() << ")";
        text << "\n";
    }
    d.text = text.str();
    d.exit = rep.empty ? kSuccess : kVerificationFailed;
    return d;
}

Document cmd_sharpness(int m) {
    Document d;
    auto rep = sharpness_triples(m);
    d.json = to_json(rep);
    std::vector<std::vector<std::string>> rows;
    for (const auto& w : rep.witnesses) {
        std::string tri = w.triple[0].str() + " | " + w.triple[1].str() + " | " + w.triple[2].str();
        rows.push_back({tri, w.witness.str(), w.proof_witness, w.proof_witness_valid ? "1" : "0", w.residual_mass.str()});
    }
    d.csv = csv_from_rows({"triple", "witness", "proof_pattern", "proof_witness_valid", "residual_mass"}, rows);
    std::ostringstream text;
    text << "Sp(" << 2 * m << "), q even: " << rep.triples << " triples, all blocked: "
         << (rep.all_triples_blocked ? "yes" : "no") << ", proof witnesses valid: "
         << (rep.proof_witnesses_valid ? "yes" : "no") << ", min residual mass " << rep.min_residual_mass
         << " (bound " << rep.bound << ")\n";
    d.text = text.str();
    d.exit = rep.all_triples_blocked && rep.proof_witnesses_valid ? kSuccess : kVerificationFailed;
    return d;
}

Document cmd_alpha(int m_max) {
    Document d;
    auto rep = alpha_check(m_max);
    d.json = to_json(rep);
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : rep.entries)
        rows.push_back({e.family.str(), e.argmin.str(), e.value.str(), e.bound.str(), e.value >= e.bound ? "1" : "0"});
    d.csv = csv_from_rows({"family", "class", "value", "bound", "holds"}, rows);
    std::ostringstream text;
    text << "min class probability >= 1/(4m) for m <= " << m_max << ": " << (rep.bound_holds ? "yes" : "no")
         << "; (2-,2-) in D+(4) attains 1/16: " << (rep.d4_equality ? "yes" : "no") << "\n";
    for (const auto& e : rep.equality_cases)
        text << "  equality: " << e.family.str() << " at (" << e.argmin.str() << ") = " << e.value << "\n";
    d.text = text.str();
    d.exit = rep.ok() ? kSuccess : kVerificationFailed;
    return d;
}

Document cmd_g2_report(bool p3) {
    Document d;
    const GroupFamily g = GroupFamily::g2(p3);
    Json classes = Json::array();
    std::ostringstream text;
    text << g.str() << "\nclasses:\n";
    for (const auto& c : g2::conjugacy_classes_g2()) {
        classes.push_back({{"class", "w" + std::to_string(c.id)},
                           {"name", c.name},
                           {"size", c.size},
                           {"probability", Rational(c.size, 12).str()},
                           {"torus_order", c.torus_order}});
        text << "  w" << c.id << "  " << c.name << "  size " << c.size << "  |T| = " << c.torus_order << "\n";
    }
    Json subs = Json::array();
    for (const auto& sc : g2::subsystem_classes(p3)) {
        subs.push_back({{"type", g2::to_string(sc.type)},
                        {"orbit_size", sc.members.size()},
                        {"normalizer_quotient_order", sc.quotient_order},
                        {"quotient_classes", sc.quotient_class_count},
                        {"needs_p3", sc.needs_p3},
                        {"maximal", sc.maximal}});
    }
    auto inc = g2::g2_incidence(p3);
    text << "families:\n";
    for (std::size_t c = 0; c < inc.columns.size(); ++c) {
        text << "  " << inc.columns[c] << ":";
        for (int j = 1; j <= 6; ++j)
            if (inc.contains(static_cast<int>(c), j)) text << " w" << j;
        text << "\n";
    }
    auto pairs = relation_sim(g);
    Json rel = Json::array();
    text << "relation:";
    for (const auto& [a, b] : pairs) {
        rel.push_back({a.str(), b.str()});
        text << " " << a.str() << "~" << b.str();
    }
    text << "\n";
    Json pinv = Json::array();
    for (const auto& t : torus_classes(g)) pinv.push_back({{"class", t.str()}, {"pinv_leading", pinv_leading(t).str()}});
    // every class shares a family with w1 and with w2
    bool star = true;
    auto all = torus_classes(g);
    for (const auto& t : all) star = star && shares_overgroup(t, all[0]) && shares_overgroup(t, all[1]);
    Rational lead = leading_term_two_random(g);
    text << "leading term " << lead << "\ncentralizer cross-check: "
         << (inc.centralizer_agrees ? "agrees" : "DISAGREES") << " with the even-order rule\n"
         << "every class shares a family with w1 and w2: " << (star ? "yes" : "no") << "\n";
    d.json = {{"family", g.str()},
              {"classes", classes},
              {"subsystem_classes", subs},
              {"incidence", to_json(inc)},
              {"relation", rel},
              {"leading_term", lead.str()},
              {"pinv_leading", pinv},
              {"shares_with_w1_and_w2", star}};
    d.text = text.str();
    return d;
}

ffmc::SampleReport mc_report(const McArgs& a) {
    if (a.n == 0) throw UsageError("--n is required");
    if (a.q == 0) throw UsageError("--q is required");
    auto g = ffmc::parse_group(a.group);
    if (a.exhaustive) return ffmc::exhaustive_statistics(g, a.n, a.q);
    return ffmc::torus_statistics(g, a.n, a.q, a.samples, a.seed, a.streams);
}

Document cmd_mc_run(const McArgs& a) {
    Document d;
    auto r = mc_report(a);
    d.json = to_json(r);
    std::vector<std::vector<std::string>> rows;
    std::ostringstream text;
    text << ffmc::to_string(r.group) << "(" << r.n << "," << r.q << "): " << r.samples << " elements"
         << (r.exhaustive ? " (exhaustive)" : "") << ", regular semisimple " << r.regular_semisimple << "\n";
    for (const auto& [p, c] : r.counts) {
        std::string f = decimal6(static_cast<double>(c) / static_cast<double>(r.samples));
        rows.push_back({p.str(), std::to_string(c), f});
        text << "  (" << p.str() << ")  " << c << "  " << f << "\n";
    }
    d.csv = csv_from_rows({"partition", "count", "frequency"}, rows);
    d.text = text.str();
    return d;
}

Document cmd_mc_compare(const McArgs& a) {
    Document d;
    ffmc::SampleReport r;
    if (!a.report.empty()) {
        std::ifstream in(a.report);
        if (!in) throw UsageError("cannot read report file " + a.report);
        r = sample_report_from_json(Json::parse(in));
    } else {
        r = mc_report(a);
    }
    auto t = ffmc::compare_to_weyl(r);
    d.json = to_json(t);
    std::vector<std::vector<std::string>> rows;
    std::ostringstream text;
    text << ffmc::to_string(t.group) << "(" << t.n << "," << t.q << "), " << t.samples << " elements\n";
    for (const auto& row : t.rows) {
        rows.push_back({row.partition.str(), row.empirical.str(), row.exact.str(), row.deviation.str(),
                        decimal6(row.sigma), decimal6(row.threshold), row.flagged ? "1" : "0"});
        text << "  (" << row.partition.str() << ")  empirical " << decimal6(row.empirical.to_double()) << "  exact "
             << row.exact << "  deviation " << decimal6(row.deviation.to_double()) << (row.flagged ? "  FLAG" : "")
             << "\n";
    }
    d.csv = csv_from_rows({"partition", "empirical", "exact", "deviation", "sigma", "threshold", "flagged"}, rows);
    d.text = text.str();
    d.exit = t.any_flagged ? kVerificationFailed : kSuccess;
    return d;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Leading terms of invariable generation for groups of Lie type"};
    app.require_subcommand(1);

    FamilyArgs fam;
    OutputArgs outopt;
    McArgs mc;
    std::string cls;
    int sharp_m = 0;
    int m_max = 30;
    bool p3 = false;
    std::function<Document()> action;

    auto family_cmd = [&](const std::string& name, const std::string& help, std::function<Document(const GroupFamily&)> fn) {
        CLI::App* c = app.add_subcommand(name, help);
        add_family_options(c, fam);
        add_output_options(c, outopt);
        c->callback([&, fn] { action = [&, fn] { return fn(resolve_family(fam)); }; });
        return c;
    };
    family_cmd("weyl-classes", "torus classes and probabilities", cmd_weyl_classes);
    family_cmd("incidence", "torus class x subgroup family table", cmd_incidence);
    family_cmd("sim", "pairs of classes with no common overgroup", cmd_sim);
    family_cmd("leading-term", "two-element leading probability", cmd_leading_term);
    family_cmd("verify-ab", "check the distinguished element set", cmd_verify_ab);
    CLI::App* pinv = family_cmd("pinv-leading", "partner mass of a class",
                                [&](const GroupFamily& g) { return cmd_pinv(g, cls); });
    pinv->add_option("--class", cls, "torus class, e.g. 3-,1+ or 2,1 or w5");

    CLI::App* sharp = app.add_subcommand("sharpness", "three-element sets in Sp(2m), q even");
    sharp->add_option("--m", sharp_m, "rank")->required();
    add_output_options(sharp, outopt);
    sharp->callback([&] { action = [&] { return cmd_sharpness(sharp_m); }; });

    CLI::App* alpha = app.add_subcommand("alpha-check", "1/(4m) bound on class probabilities");
    alpha->add_option("--m-max", m_max, "largest rank");
    add_output_options(alpha, outopt);
    alpha->callback([&] { action = [&] { return cmd_alpha(m_max); }; });

    CLI::App* g2r = app.add_subcommand("g2-report", "full G2 derivation");
    g2r->add_flag("--p3", p3, "3 divides q");
    add_output_options(g2r, outopt);
    g2r->callback([&] { action = [&] { return cmd_g2_report(p3); }; });

    CLI::App* mcrun = app.add_subcommand("mc-run", "sample GL/SL matrices and classify tori");
    add_mc_options(mcrun, mc);
    add_output_options(mcrun, outopt);
    mcrun->callback([&] { action = [&] { return cmd_mc_run(mc); }; });

    CLI::App* mccmp = app.add_subcommand("mc-compare", "compare sampled frequencies with Weyl probabilities");
    add_mc_options(mccmp, mc);
    mccmp->add_option("--report", mc.report, "JSON report written by mc-run");
    add_output_options(mccmp, outopt);
    mccmp->callback([&] { action = [&] { return cmd_mc_compare(mc); }; });

    std::vector<std::string> argv_store{"invgen"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    Document doc;
    try {
        doc = action();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "range error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    std::string body;
    if (outopt.format == "json")
        body = doc.json.dump(2) + "\n";
    else if (outopt.format == "csv")
        body = doc.csv ? *doc.csv : csv_scalars(doc.json);
    else
        body = doc.text;

    if (outopt.out.empty()) {
        out << body;
    } else {
        std::ofstream f(outopt.out);
        if (!f) {
            err << "cannot write " << outopt.out << "\n";
            return kUsageError;
        }
        f << body;
    }
    return doc.exit;
}

}  // namespace invgen::cli
