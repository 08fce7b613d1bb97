#include "seqcert/term_cache.hpp"

#include "seqcert/errors.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>

namespace seqcert {

namespace {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string sanitized(const std::string& name) {
    std::string s;
    for (char c : name)
        s += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
    return s.empty() ? "seq" : s;
}

std::filesystem::path cache_path(const SequenceDef& def, const std::filesystem::path& dir) {
    return dir / (sanitized(def.name) + ".terms");
}

constexpr const char* kMagic = "seqcert-cache v1";

} // namespace

std::string sequence_def_hash(const SequenceDef& def) { return fnv1a_hex(def.canonical_json()); }

void cache_terms(const SequenceDef& def, const std::vector<BigRat>& terms,
                 const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::filesystem::path target = cache_path(def, dir);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error("cannot write cache file " + tmp.string());
        out << kMagic << " " << sequence_def_hash(def) << "\n";
        for (const auto& t : terms) out << t.str() << "\n";
    }
    std::filesystem::rename(tmp, target);  // atomic publish
}

std::vector<BigRat> load_cached(const SequenceDef& def, const std::filesystem::path& dir,
                                long long count) {
    std::filesystem::path path = cache_path(def, dir);
    std::vector<BigRat> terms;
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        if (!in) throw CorruptCache("cannot open " + path.string());
        std::string header;
        if (!std::getline(in, header)) throw CorruptCache("missing header");
        std::string expect = std::string(kMagic) + " " + sequence_def_hash(def);
        if (header.rfind(kMagic, 0) != 0) throw CorruptCache("bad magic in " + path.string());
        if (header != expect) throw HashMismatch();
        std::string line;
        long long line_no = 1;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            try {
                terms.push_back(BigRat::parse(line));
            } catch (const Error&) {
                throw CorruptCache("bad term at line " + std::to_string(line_no));
            }
        }
    }
    if (static_cast<long long>(terms.size()) >= count) {
        terms.resize(static_cast<std::size_t>(count));
        return terms;
    }
    if (def.is_recurrence() && terms.size() >= 2 &&
        terms.size() >= def.recurrence().initial_terms.size()) {
        // resume from the cached tail: the recurrence is two-term determined
        const RecurrenceDef& rec = def.recurrence();
        long long have = static_cast<long long>(terms.size());
        SequenceDef tail_def = def;
        RecurrenceDef tail = rec;
        tail.offset = rec.offset + have - 2;
        tail.initial_terms = {terms[terms.size() - 2], terms[terms.size() - 1]};
        tail_def.kind = tail;
        auto ext = generate_terms(tail_def, count - have + 2);
        terms.insert(terms.end(), ext.begin() + 2, ext.end());
    } else {
        terms = generate_terms(def, count);
    }
    cache_terms(def, terms, dir);
    return terms;
}

} // namespace seqcert
