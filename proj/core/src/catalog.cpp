#include "seqcert/catalog.hpp"

#include "seqcert/errors.hpp"

#include <charconv>

namespace seqcert {

namespace {

RatFunc rf(std::initializer_list<long> num, std::initializer_list<long> den) {
    return RatFunc(IntPoly(num), IntPoly(den));
}

SequenceDef make_recurrence(std::string name, RatFunc a, RatFunc b,
                            std::vector<BigRat> init, long long offset,
                            std::string oeis, long long oeis_offset = 0) {
    SequenceDef def;
    def.name = std::move(name);
    def.kind = RecurrenceDef{std::move(a), std::move(b), std::move(init), offset};
    def.oeis_id = std::move(oeis);
    def.oeis_offset = oeis_offset;
    return def;
}

SequenceDef make_gamma(std::string name, GammaQuotientDef g, std::string oeis) {
    SequenceDef def;
    def.name = std::move(name);
    def.kind = g;
    if (!oeis.empty()) def.oeis_id = std::move(oeis);
    return def;
}

} // namespace

SequenceDef catalog_lookup(const std::string& name) {
    if (name == "derangement" || name == "derangements")
        return make_recurrence("derangement", rf({0, 1}, {1}), rf({0, 1}, {1}),
                               {BigRat(1), BigRat(0)}, 0, "A000166");
    if (name == "motzkin")
        return make_recurrence("motzkin", rf({3, 2}, {3, 1}), rf({0, 3}, {3, 1}),
                               {BigRat(1), BigRat(1)}, 0, "A001006");
    if (name == "fine")
        // conventional indexing f_0 = 1, f_1 = 0; OEIS A000957 is shifted by one
        return make_recurrence("fine", rf({2, 7}, {4, 2}), rf({1, 2}, {2, 1}),
                               {BigRat(1), BigRat(0)}, 0, "A000957", 1);
    if (name == "franel")
        return make_recurrence("franel", rf({2, 7, 7}, {1, 2, 1}), rf({0, 0, 8}, {1, 2, 1}),
                               {BigRat(1), BigRat(2)}, 0, "A000172");
    if (name == "domb")
        return make_recurrence("domb", rf({4, 18, 30, 20}, {1, 3, 3, 1}),
                               rf({0, 0, 0, -64}, {1, 3, 3, 1}),
                               {BigRat(1), BigRat(4)}, 0, "A002895");
    if (name == "catalan")
        return make_gamma("catalan", GammaQuotientDef{0, 0, 1, 2, 1, 1}, "A000108");
    if (name == "central-binomial" || name == "central_binomial")
        return make_gamma("central-binomial", GammaQuotientDef{0, 0, 0, 2, 1, 1}, "A000984");
    if (name.rfind("fuss-catalan:", 0) == 0) {
        const char* b = name.data() + 13;
        const char* e = name.data() + name.size();
        unsigned long p = 0;
        auto [ptr, ec] = std::from_chars(b, e, p);
        if (ec != std::errc{} || ptr != e || p < 2)
            throw UnknownSequence(name + " (fuss-catalan takes an integer parameter p >= 2)");
        return make_gamma(name, GammaQuotientDef{0, 0, 1, p, 1, p - 1}, "");
    }
    throw UnknownSequence(name);
}

std::vector<std::string> catalog_names() {
    return {"derangement", "motzkin",          "fine",           "franel",
            "domb",        "catalan",          "central-binomial", "fuss-catalan:<p>"};
}

} // namespace seqcert
