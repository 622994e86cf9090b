#include "gbd/report.hpp"

#include <sstream>

#include "json.hpp"

namespace gbd {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string poly_str(const Polynomial& p, const SystemFile& sys) {
    return p.to_string(sys.ring, sys.order);
}

ordered_json trace_json(const ReductionTrace& trace, const SystemFile& sys) {
    ordered_json t;
    t["reduced_over"] = ordered_json::array();
    for (int idx : trace.available)
        t["reduced_over"].push_back(idx + 1);
    t["reducers_used"] = ordered_json::array();
    for (int idx : trace.reducers_used)
        t["reducers_used"].push_back(idx + 1);
    t["steps"] = ordered_json::array();
    for (const auto& step : trace.steps) {
        ordered_json s;
        s["coeff"] = step.coeff.to_string();
        s["term"] = step.term.to_string(sys.ring);
        s["reducer"] = step.reducer + 1;
        t["steps"].push_back(std::move(s));
    }
    t["remainder"] = poly_str(trace.remainder, sys);
    return t;
}

const char* edge_kind_name(EdgeCertificate::Kind k) {
    switch (k) {
    case EdgeCertificate::Kind::coprime:
        return "coprime";
    case EdgeCertificate::Kind::reused:
        return "reused";
    case EdgeCertificate::Kind::rereduced:
        return "rereduced";
    }
    return "?";
}

} // namespace

std::string report_to_json(const DecisionReport& report, const SystemFile& sys) {
    ordered_json j;
    j["schema"] = "groebner-decide/1";
    j["mode"] = mode_name(report.mode);
    j["is_groebner"] = report.is_groebner;
    j["m"] = sys.size();

    j["pairs"] = ordered_json::array();
    for (const auto& d : report.dispositions) {
        ordered_json p;
        p["i"] = d.i;
        p["j"] = d.j;
        p["rule"] = rule_name(d.rule);
        if (!d.chain.empty())
            p["chain"] = d.chain;
        if (!d.edges.empty()) {
            p["edges"] = ordered_json::array();
            for (const auto& e : d.edges) {
                ordered_json ej;
                ej["pair"] = {e.a, e.b};
                ej["kind"] = edge_kind_name(e.kind);
                if (!e.over.empty())
                    ej["over"] = e.over;
                p["edges"].push_back(std::move(ej));
            }
        }
        if (d.trace)
            p["trace"] = trace_json(*d.trace, sys);
        j["pairs"].push_back(std::move(p));
    }

    j["failures"] = ordered_json::array();
    for (const auto& f : report.failures) {
        ordered_json fj;
        fj["i"] = f.i;
        fj["j"] = f.j;
        fj["remainder"] = poly_str(f.trace.remainder, sys);
        fj["trace"] = trace_json(f.trace, sys);
        j["failures"].push_back(std::move(fj));
    }

    j["rejected_b3"] = ordered_json::array();
    for (const auto& r : report.rejected_b3) {
        ordered_json rj;
        rj["i"] = r.i;
        rj["j"] = r.j;
        rj["chain"] = r.chain;
        rj["failed_edge"] = {r.edge_a, r.edge_b};
        rj["over"] = r.over;
        rj["remainder"] = poly_str(r.remainder, sys);
        j["rejected_b3"].push_back(std::move(rj));
    }

    ordered_json counts;
    counts["reductions"] = report.reductions;
    counts["division_runs"] = report.division_runs;
    ordered_json by_rule;
    for (Rule r : {Rule::B0, Rule::B1, Rule::B2, Rule::B3, Rule::PHAM})
        by_rule[rule_name(r)] = report.rule_count(r);
    counts["by_rule"] = std::move(by_rule);
    j["counts"] = std::move(counts);

    if (report.pham_d) {
        ordered_json pj;
        pj["d"] = report.pham_d->to_string(sys.ring);
        pj["cofactors"] = ordered_json::array();
        for (const auto& c : report.pham_cofactors)
            pj["cofactors"].push_back(c.to_string(sys.ring));
        j["pham"] = std::move(pj);
    }

    ordered_json timing;
    timing["total"] = report.total_ms;
    timing["reduce"] = report.reduce_ms;
    j["timing_ms"] = std::move(timing);
    return j.dump(2) + "\n";
}

std::string report_to_text(const DecisionReport& report, const SystemFile& sys) {
    std::ostringstream out;
    out << "verdict: " << (report.is_groebner ? "Groebner basis" : "not a Groebner basis")
        << "  (mode " << mode_name(report.mode) << ", m=" << sys.size() << ")\n";
    if (report.pham_d)
        out << "pham-like: d = " << report.pham_d->to_string(sys.ring) << "\n";
    out << "pairs:\n";
    for (const auto& d : report.dispositions) {
        out << "  (" << d.i << "," << d.j << ")  " << rule_name(d.rule);
        if (!d.chain.empty()) {
            out << "  chain";
            for (int k : d.chain)
                out << " " << k;
        }
        if (!d.edges.empty()) {
            out << "  edges:";
            for (const auto& e : d.edges)
                out << " (" << e.a << "," << e.b << ":" << edge_kind_name(e.kind) << ")";
        }
        if (d.trace && !d.trace->steps.empty()) {
            out << "  used";
            for (int idx : d.trace->reducers_used)
                out << " " << idx + 1;
        }
        out << "\n";
    }
    for (const auto& f : report.failures)
        out << "  (" << f.i << "," << f.j << ")  FAILS  remainder "
            << f.trace.remainder.to_string(sys.ring, sys.order) << "\n";
    for (const auto& r : report.rejected_b3) {
        out << "  note: B3 chain";
        for (int k : r.chain)
            out << " " << k;
        out << " for (" << r.i << "," << r.j << ") rejected: edge (" << r.edge_a << ","
            << r.edge_b << ") leaves " << r.remainder.to_string(sys.ring, sys.order)
            << " over G'\n";
    }
    out << "reductions: " << report.reductions << "  (division runs: " << report.division_runs
        << ")\n";
    out << "rules: B0=" << report.rule_count(Rule::B0) << " B1=" << report.rule_count(Rule::B1)
        << " B2=" << report.rule_count(Rule::B2) << " B3=" << report.rule_count(Rule::B3)
        << " PHAM=" << report.rule_count(Rule::PHAM) << "\n";
    return out.str();
}

std::string theory_report_to_json(const TheoryReport& report, const SystemFile& sys) {
    ordered_json j;
    j["schema"] = "groebner-theory/1";
    j["pass"] = report.pass;
    j["factors"] = ordered_json::array();
    for (const auto& c : report.factors) {
        ordered_json cj;
        cj["i"] = c.entry.i;
        cj["j"] = c.entry.j;
        cj["p"] = poly_str(c.entry.p, sys);
        cj["lt_p"] = c.lt_p.to_string(sys.ring);
        cj["lt_gcd"] = c.lt_gcd.to_string(sys.ring);
        cj["gcd_commutes"] = c.gcd_commutes;
        cj["cofactor_coprime"] = c.cofactor_coprime;
        cj["lt_gcd_divides"] = c.lt_gcd_divides;
        j["factors"].push_back(std::move(cj));
    }
    j["chain_matrix"] = ordered_json::array();
    for (const auto& c : report.chain) {
        ordered_json cj;
        cj["k"] = c.k;
        cj["pass"] = c.pass;
        cj["expected_lt"] = c.expected.to_string(sys.ring);
        cj["actual_lt"] = c.actual.to_string(sys.ring);
        j["chain_matrix"].push_back(std::move(cj));
    }
    return j.dump(2) + "\n";
}

std::string theory_report_to_text(const TheoryReport& report, const SystemFile& sys) {
    std::ostringstream out;
    for (const auto& c : report.factors) {
        out << "factor (" << c.entry.i << "," << c.entry.j << ") p = " << poly_str(c.entry.p, sys)
            << ": gcd_commutes=" << (c.gcd_commutes ? "yes" : "NO")
            << " cofactor_coprime=" << (c.cofactor_coprime ? "yes" : "NO")
            << " lt_gcd_divides=" << (c.lt_gcd_divides ? "yes" : "NO") << "\n";
    }
    for (const auto& c : report.chain) {
        out << "chain matrix k=" << c.k << ": " << (c.pass ? "pass" : "FAIL")
            << " (lt det = " << c.actual.to_string(sys.ring) << ", expected "
            << c.expected.to_string(sys.ring) << ")\n";
    }
    out << (report.pass ? "theory checks: all pass\n" : "theory checks: FAILURES\n");
    return out.str();
}

} // namespace gbd
