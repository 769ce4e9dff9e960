#include "circlelang/alphabet.hpp"

#include <algorithm>
#include <numeric>

namespace circlelang {

std::optional<std::size_t> PartitionedAlphabet::class_of(Symbol cp) const {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        const SymbolString& syms = classes_[i].symbols;
        if (std::binary_search(syms.begin(), syms.end(), cp)) return i;
    }
    return std::nullopt;
}

PartitionedAlphabet build_alphabet(
    std::vector<std::pair<std::string, SymbolString>> classes, bool complete) {
    if (classes.empty()) throw EmptyClass("alphabet needs at least one class");
    PartitionedAlphabet out;
    out.complete_ = complete;
    for (auto& [name, symbols] : classes) {
        std::sort(symbols.begin(), symbols.end());
        symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
        if (symbols.empty()) throw EmptyClass("class '" + name + "' is empty");
        for (Symbol cp : symbols) {
            if (auto other = out.class_of(cp)) {
                throw OverlappingClasses("symbol '" + utf8_encode(cp) + "' is in both '" +
                                         out.classes_[*other].name + "' and '" + name + "'");
            }
        }
        out.classes_.push_back({std::move(name), std::move(symbols)});
    }
    return out;
}

PartitionedAlphabet english_partition() {
    PartitionedAlphabet out = build_alphabet(
        {{"straight", U"AEFHIKLMNTVWXYZ"}, {"curved", U"BCDGJOPQRSU"}}, true);
    out.fold_case_ = true;
    return out;
}

std::size_t GrlEncoding::total_length() const {
    std::size_t n = 0;
    for (const GrlRun& run : runs_) n += run.length();
    return n;
}

GrlEncoding grl_encode(const PartitionedAlphabet& alphabet, const SymbolString& text) {
    std::vector<GrlRun> runs;
    for (Symbol cp : text) {
        auto cls = alphabet.class_of(cp);
        if (!cls)
            throw UnknownSymbol("symbol '" + utf8_encode(cp) + "' is in no alphabet class");
        if (runs.empty() || runs.back().class_index != *cls)
            runs.push_back({SymbolString{}, *cls});
        runs.back().letters.push_back(cp);
    }
    for (GrlRun& run : runs) std::sort(run.letters.begin(), run.letters.end());
    return GrlEncoding(std::move(runs));
}

std::vector<std::size_t> run_pattern(const GrlEncoding& enc) {
    std::vector<std::size_t> out;
    out.reserve(enc.num_runs());
    for (const GrlRun& run : enc.runs()) out.push_back(run.length());
    return out;
}

AbstractGrlVector phi_compress(const Arrangement& a) {
    AbstractGrlVector out;
    for (unsigned label : a) {
        if (out.empty() || out.back().label != label)
            out.push_back({label, 0});
        ++out.back().length;
    }
    return out;
}

Arrangement psi_expand(const AbstractGrlVector& v) {
    Arrangement out;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].length == 0)
            throw InvalidVector("run " + std::to_string(j) + " has zero length");
        if (j > 0 && v[j].label == v[j - 1].label)
            throw InvalidVector("adjacent runs " + std::to_string(j - 1) + "," +
                                std::to_string(j) + " share one class");
        out.insert(out.end(), v[j].length, v[j].label);
    }
    return out;
}

BigInt factorial(std::size_t n) {
    BigInt out = 1;
    for (std::size_t i = 2; i <= n; ++i) out *= i;
    return out;
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

BigInt count_all(std::size_t n, std::size_t r) {
    return boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(n));
}

BigInt stirling2(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    if (n == 0) return 1;  // S(0,0)
    if (r == 0) return 0;
    // Row-by-row: S(i,j) = j*S(i-1,j) + S(i-1,j-1).
    std::vector<BigInt> row(r + 1, 0);
    row[0] = 1;  // S(0,0)
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = std::min(i, r); j >= 1; --j)
            row[j] = BigInt(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[r];
}

BigInt count_surjective(std::size_t n, std::size_t r) {
    BigInt out = 0;
    for (std::size_t i = 0; i < r; ++i) {
        BigInt term = binomial(r, i) * boost::multiprecision::pow(
                                           BigInt(r - i), static_cast<unsigned>(n));
        if (i % 2 == 0)
            out += term;
        else
            out -= term;
    }
    return out;
}

BigInt count_balanced(std::size_t n, std::size_t r) {
    if (r == 0 || n < r)
        throw DomainError("count_balanced requires n >= r >= 1");
    const std::size_t q = n / r;
    const std::size_t s = n % r;
    BigInt denom = boost::multiprecision::pow(factorial(q + 1), static_cast<unsigned>(s)) *
                   boost::multiprecision::pow(factorial(q), static_cast<unsigned>(r - s));
    return binomial(r, s) * factorial(n) / denom;
}

}  // namespace circlelang
