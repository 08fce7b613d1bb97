#include "seqcert/sequence.hpp"

#include "seqcert/errors.hpp"

#include <nlohmann/json.hpp>

namespace seqcert {

using nlohmann::json;

long long SequenceDef::first_index() const {
    if (is_recurrence()) return recurrence().offset;
    return 0;
}

namespace {

json ratfunc_to_json(const RatFunc& r) {
    json num = json::array(), den = json::array();
    for (const auto& c : r.num().coeffs()) num.push_back(c.get_str());
    for (const auto& c : r.den().coeffs()) den.push_back(c.get_str());
    return json{{"num", num}, {"den", den}};
}

} // namespace

std::string SequenceDef::canonical_json() const {
    json j;
    j["name"] = name;
    if (is_recurrence()) {
        const auto& r = recurrence();
        j["kind"] = "recurrence";
        j["a"] = ratfunc_to_json(r.a);
        j["b"] = ratfunc_to_json(r.b);
        json init = json::array();
        for (const auto& t : r.initial_terms) init.push_back(t.str());
        j["initial"] = init;
        j["offset"] = r.offset;
    } else if (is_gamma()) {
        const auto& g = gamma();
        j["kind"] = "gamma-quotient";
        j["params"] = {g.n0, g.k0, g.k0bar, g.a, g.b, g.bbar};
    } else {
        j["kind"] = "explicit";
        json terms = json::array();
        for (const auto& t : std::get<std::vector<BigRat>>(kind)) terms.push_back(t.str());
        j["terms"] = terms;
    }
    if (oeis_id) j["oeis_id"] = *oeis_id;
    if (oeis_offset != 0) j["oeis_offset"] = oeis_offset;
    return j.dump();
}

namespace {

std::vector<BigRat> generate_recurrence(const RecurrenceDef& def, long long count) {
    if (def.initial_terms.size() < 2) throw Error("recurrence needs at least two initial terms");
    std::vector<BigRat> z;
    z.reserve(static_cast<std::size_t>(count));
    for (const auto& t : def.initial_terms) {
        z.push_back(t);
        if (static_cast<long long>(z.size()) == count) return z;
    }
    while (static_cast<long long>(z.size()) < count) {
        long long n = def.offset + static_cast<long long>(z.size()) - 1;  // recurrence index
        BigRat an, bn;
        try {
            an = def.a.eval(BigRat(BigInt(static_cast<long>(n))));
            bn = def.b.eval(BigRat(BigInt(static_cast<long>(n))));
        } catch (const PoleAtPoint&) {
            throw CoefficientPole(n);
        }
        const BigRat& zn = z[z.size() - 1];
        const BigRat& zm = z[z.size() - 2];
        z.push_back(an * zn + bn * zm);
    }
    return z;
}

std::vector<BigRat> generate_gamma(const GammaQuotientDef& g, long long count) {
    // Factorials advance by a (resp. b, bbar) between consecutive terms; keep
    // running products instead of recomputing each factorial.
    std::vector<BigRat> out;
    out.reserve(static_cast<std::size_t>(count));
    BigInt fn = factorial(g.n0), fk = factorial(g.k0), fkb = factorial(g.k0bar);
    unsigned long argn = g.n0, argk = g.k0, argkb = g.k0bar;
    for (long long i = 0; i < count; ++i) {
        out.emplace_back(fn, fk * fkb);
        for (unsigned long s = 0; s < g.a; ++s) fn *= BigInt(static_cast<long>(++argn));
        for (unsigned long s = 0; s < g.b; ++s) fk *= BigInt(static_cast<long>(++argk));
        for (unsigned long s = 0; s < g.bbar; ++s) fkb *= BigInt(static_cast<long>(++argkb));
    }
    return out;
}

} // namespace

std::vector<BigRat> generate_terms(const SequenceDef& def, long long count) {
    if (count < 1) throw Error("term count must be positive");
    if (def.is_recurrence()) return generate_recurrence(def.recurrence(), count);
    if (def.is_gamma()) return generate_gamma(def.gamma(), count);
    const auto& terms = std::get<std::vector<BigRat>>(def.kind);
    if (count > static_cast<long long>(terms.size()))
        throw TooFewTerms("explicit sequence has only " + std::to_string(terms.size()) +
                          " terms, " + std::to_string(count) + " requested");
    return {terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::vector<BigRat> ratio_terms(const SequenceDef& def, long long from, long long count) {
    if (count < 1) throw Error("ratio count must be positive");
    long long first = def.first_index();
    if (from < first) throw Error("ratio window starts before the sequence offset");
    long long need = from - first + count + 1;
    auto z = generate_terms(def, need);
    std::vector<BigRat> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long long n = from; n < from + count; ++n) {
        const BigRat& den = z[static_cast<std::size_t>(n - first)];
        if (den.is_zero()) throw ZeroTerm(n);
        out.push_back(z[static_cast<std::size_t>(n - first + 1)] / den);
    }
    return out;
}

bool terms_are_integral(const std::vector<BigRat>& terms) {
    for (const auto& t : terms)
        if (!t.is_integer()) return false;
    return true;
}

} // namespace seqcert
