#include "seqcert/json_io.hpp"

#include "seqcert/catalog.hpp"
#include "seqcert/errors.hpp"

namespace seqcert {

using nlohmann::json;

json to_json(const BigRat& r) { return r.str(); }

json to_json(const RatFunc& r) {
    json num = json::array(), den = json::array();
    for (const auto& c : r.num().coeffs()) num.push_back(c.get_str());
    for (const auto& c : r.den().coeffs()) den.push_back(c.get_str());
    return json{{"num", num}, {"den", den}};
}

json to_json(const CheckOutcome& oc) {
    json j;
    j["holds"] = oc.holds;
    j["strict"] = oc.strict;
    j["checked_range"] = {oc.checked_range.first, oc.checked_range.second};
    if (oc.first_violation) {
        j["first_violation"] = {{"index", oc.first_violation->index},
                                {"lhs", oc.first_violation->lhs.str()},
                                {"rhs", oc.first_violation->rhs.str()}};
    } else {
        j["first_violation"] = nullptr;
    }
    return j;
}

json to_json(const PositivityVerdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["witness"] = v.witness ? json(v.witness->get_str()) : json(nullptr);
    j["transcript"] = v.transcript;
    return j;
}

json to_json(const CertificateReport& rep) {
    json hyp = json::array();
    for (const auto& h : rep.hypotheses)
        hyp.push_back({{"name", h.name}, {"ok", h.ok}, {"detail", h.detail}});
    json j;
    j["verdict"] = to_string(rep.verdict);
    j["hypotheses"] = hyp;
    j["covered_from"] = rep.covered_from;
    j["base_checked"] = {rep.base_checked.first, rep.base_checked.second};
    j["lambda_index_shift"] = rep.lambda_index_shift;
    j["notes"] = rep.notes;
    return j;
}

json to_json(const EligibilityResult& res) {
    json j;
    j["eligible"] = res.eligible;
    j["u"] = res.u.str();
    j["p"] = res.p.str();
    j["q"] = res.q.str();
    j["failed_condition"] = res.failed_condition ? json(*res.failed_condition) : json(nullptr);
    return j;
}

json to_json(const EBoundResult& res) {
    json rows = json::array();
    for (const auto& r : res.rows)
        rows.push_back({{"n", r.n},
                        {"holds", r.holds},
                        {"enclosure", {r.enclosure_lo.str(), r.enclosure_hi.str()}},
                        {"diff_bound", r.diff_bound.str()}});
    json j;
    j["outcome"] = to_json(res.outcome);
    j["rows"] = rows;
    j["n2_informational"] = res.n2_informational;
    return j;
}

json to_json(const HKernelGridReport& rep) {
    json j;
    j["outcome"] = to_json(rep.outcome);
    j["rows"] = rep.rows;
    j["label"] = rep.label;
    return j;
}

json to_json(const SequenceDef& def) { return json::parse(def.canonical_json()); }

RatFunc ratfunc_from_json(const json& j) {
    auto poly = [](const json& arr) {
        std::vector<BigInt> c;
        for (const auto& v : arr) {
            BigInt x;
            std::string s = v.is_string() ? v.get<std::string>() : v.dump();
            if (x.set_str(s, 10) != 0) throw Error("bad integer coefficient '" + s + "'");
            c.push_back(x);
        }
        return IntPoly(std::move(c));
    };
    if (j.is_number_integer()) return RatFunc(BigRat(BigInt(j.get<long>())));
    if (j.is_string()) return RatFunc(BigRat::parse(j.get<std::string>()));
    if (!j.contains("num") || !j.contains("den")) throw Error("ratfunc needs num and den arrays");
    return RatFunc(poly(j["num"]), poly(j["den"]));
}

SequenceDef sequence_def_from_json(const json& j) {
    if (j.is_string()) return catalog_lookup(j.get<std::string>());
    SequenceDef def;
    def.name = j.at("name").get<std::string>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "recurrence") {
        RecurrenceDef rec;
        rec.a = ratfunc_from_json(j.at("a"));
        rec.b = ratfunc_from_json(j.at("b"));
        for (const auto& t : j.at("initial"))
            rec.initial_terms.push_back(BigRat::parse(t.get<std::string>()));
        if (rec.initial_terms.size() < 2) throw Error("recurrence needs >= 2 initial terms");
        rec.offset = j.value("offset", 0LL);
        def.kind = rec;
    } else if (kind == "gamma-quotient") {
        const auto& p = j.at("params");
        if (p.size() != 6) throw Error("gamma-quotient params must be [n0,k0,k0bar,a,b,bbar]");
        GammaQuotientDef g;
        g.n0 = p[0].get<unsigned long>();
        g.k0 = p[1].get<unsigned long>();
        g.k0bar = p[2].get<unsigned long>();
        g.a = p[3].get<unsigned long>();
        g.b = p[4].get<unsigned long>();
        g.bbar = p[5].get<unsigned long>();
        if (g.a == 0 || g.b == 0 || g.bbar == 0) throw Error("gamma-quotient a,b,bbar must be > 0");
        def.kind = g;
    } else if (kind == "explicit") {
        std::vector<BigRat> terms;
        for (const auto& t : j.at("terms")) terms.push_back(BigRat::parse(t.get<std::string>()));
        if (terms.size() < 5) throw Error("explicit sequences need >= 5 terms");
        def.kind = terms;
    } else {
        throw Error("unknown sequence kind '" + kind + "'");
    }
    if (j.contains("oeis_id")) def.oeis_id = j["oeis_id"].get<std::string>();
    def.oeis_offset = j.value("oeis_offset", 0LL);
    return def;
}

Certificate certificate_from_json(const json& j) {
    SequenceDef seq = sequence_def_from_json(j.at("sequence"));
    std::string theorem = j.at("theorem").get<std::string>();
    if (theorem == "plus") {
        PlusCertificate c;
        c.seq = std::move(seq);
        c.lambda = ratfunc_from_json(j.at("lambda"));
        c.N = j.at("N").get<long long>();
        c.base_window = j.value("base_window", 64LL);
        return c;
    }
    if (theorem == "minus") {
        MinusCertificate c;
        c.seq = std::move(seq);
        c.r = ratfunc_from_json(j.at("r"));
        c.s = ratfunc_from_json(j.at("s"));
        c.N = j.at("N").get<long long>();
        c.base_window = j.value("base_window", 64LL);
        return c;
    }
    throw Error("certificate theorem must be 'plus' or 'minus'");
}

} // namespace seqcert
