#include "bicover/code.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

#include "bicover/errors.hpp"
#include "json_util.hpp"

namespace bicover {

namespace {

int ceil_log2(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

// Mark every word within distance `radius` of `centre` among k-bit words.
void mark_ball(std::vector<bool>& covered, std::uint64_t centre, int k, int radius, int from = 0) {
    covered[centre] = true;
    if (radius == 0) return;
    for (int b = from; b < k; ++b) mark_ball(covered, centre ^ (std::uint64_t{1} << b), k, radius - 1, b + 1);
}

} // namespace

BinaryCode::BinaryCode(std::size_t length, std::vector<BitVector> words, std::string method)
    : length_(length), words_(std::move(words)), method_(std::move(method)) {
    std::unordered_set<BitVector, BitVectorHash> seen;
    seen.reserve(words_.size());
    for (const auto& w : words_) {
        if (w.size() != length_)
            throw RangeError("codeword of length " + std::to_string(w.size()) + " in a length-" +
                             std::to_string(length_) + " code");
        if (!seen.insert(w).second) throw RangeError("duplicate codeword " + w.to_string());
    }
}

BinaryCode even_weight_code(int k, const CodeLimits& limits) {
    if (k < 2) throw RangeError("even-weight code needs k >= 2");
    if (k - 1 >= 63 || (std::size_t{1} << (k - 1)) > limits.max_words)
        throw SizeLimitExceeded("even-weight code with 2^" + std::to_string(k - 1) + " words exceeds the cap");
    std::vector<BitVector> words;
    words.reserve(std::size_t{1} << (k - 1));
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << k); ++w)
        if (std::popcount(w) % 2 == 0) words.push_back(BitVector::from_integer(w, static_cast<std::size_t>(k)));
    BinaryCode code(static_cast<std::size_t>(k), std::move(words), "even-weight");
    code.cache_min_distance(2);
    code.set_designed_distance(2);
    return code;
}

BinaryCode greedy_gv_code(int k, int d, std::size_t target, const CodeLimits& limits) {
    if (k < 1 || d < 1 || d > k || target < 1) throw RangeError("greedy GV needs k >= 1, 1 <= d <= k, target >= 1");
    if (k >= 63 || (std::size_t{1} << k) > limits.max_words)
        throw SizeLimitExceeded("greedy scan over 2^" + std::to_string(k) + " words exceeds the cap");

    const std::uint64_t total = std::uint64_t{1} << k;
    std::vector<bool> covered(total, false);
    std::vector<std::uint64_t> kept;
    for (std::uint64_t w = 0; w < total && kept.size() < target; ++w) {
        if (covered[w]) continue;
        kept.push_back(w);
        mark_ball(covered, w, k, d - 1);
    }
    if (kept.size() < target) throw TargetUnreached(kept.size(), target);

    std::vector<BitVector> words;
    words.reserve(kept.size());
    for (auto w : kept) words.push_back(BitVector::from_integer(w, static_cast<std::size_t>(k)));
    BinaryCode code(static_cast<std::size_t>(k), std::move(words), "gv");
    code.set_designed_distance(d);
    return code;
}

// Bitmasks include the x^m term.
std::optional<std::uint32_t> FieldContext::tabled_modulus(int m) {
    static constexpr std::uint32_t table[] = {
        0,       0,       0x7,    0xB,    0x13,   0x25,   0x43,   0x83,   0x11D,
        0x211,   0x409,   0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
    };
    if (m < 2 || m > 16) return std::nullopt;
    return table[m];
}

FieldContext::FieldContext(int m) : FieldContext(m, [m] {
        auto p = tabled_modulus(m);
        if (!p) throw FieldError("no primitive polynomial tabled for m = " + std::to_string(m));
        return *p;
    }()) {}

FieldContext::FieldContext(int m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
    if (m < 2 || m > 16) throw FieldError("field degree must lie in 2..16");
    if ((modulus >> m) != 1u) throw FieldError("modulus does not have degree m");
    const std::uint32_t n = order();
    exp_.assign(n, 0);
    log_.assign(std::size_t{n} + 1, 0);
    std::uint32_t a = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (i > 0 && a == 1) throw FieldError("modulus is not primitive: x has order " + std::to_string(i));
        exp_[i] = a;
        log_[a] = i;
        a <<= 1;
        if (a >> m) a ^= modulus;
    }
    if (a != 1) throw FieldError("modulus is not irreducible");
}

namespace {

using Gf2Poly = std::vector<std::uint8_t>;

Gf2Poly multiply(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
    return out;
}

// Minimal polynomial of alpha^c: the product of (x + alpha^e) over the
// cyclotomic coset of c. Its coefficients land in GF(2).
Gf2Poly minimal_polynomial(const FieldContext& field, const std::vector<std::uint32_t>& coset) {
    std::vector<std::uint32_t> poly{1};
    for (auto e : coset) {
        auto root = field.exp(e);
        std::vector<std::uint32_t> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] ^= poly[i];
            next[i] ^= field.mul(poly[i], root);
        }
        poly = std::move(next);
    }
    Gf2Poly out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] > 1) throw FieldError("minimal polynomial has a coefficient outside GF(2)");
        out[i] = static_cast<std::uint8_t>(poly[i]);
    }
    return out;
}

} // namespace

std::vector<std::uint8_t> bch_generator_polynomial(const FieldContext& field, int d) {
    const std::uint32_t n = field.order();
    if (d < 1 || 2 * static_cast<std::int64_t>(d) - 1 > n)
        throw RangeError("designed distance 2d - 1 must lie in 1..2^m - 1");
    Gf2Poly g{1};
    std::vector<bool> taken(n, false);
    for (std::uint32_t c = 1; c <= static_cast<std::uint32_t>(2 * d - 2); ++c) {
        if (taken[c % n]) continue;
        std::vector<std::uint32_t> coset;
        for (std::uint32_t e = c % n; !taken[e]; e = static_cast<std::uint32_t>((std::uint64_t{e} * 2) % n)) {
            taken[e] = true;
            coset.push_back(e);
        }
        g = multiply(g, minimal_polynomial(field, coset));
    }
    return g;
}

int bch_dimension(int m, int d) {
    FieldContext field(m);
    auto g = bch_generator_polynomial(field, d);
    return static_cast<int>(field.order()) - static_cast<int>(g.size() - 1);
}

BinaryCode bch_extended_code(int m, int d, std::optional<std::size_t> target, const CodeLimits& limits) {
    if (m < 2 || m > 16) throw RangeError("BCH extension degree must lie in 2..16");
    if (d < 2) throw RangeError("BCH construction needs d >= 2");
    FieldContext field(m);
    const auto g = bch_generator_polynomial(field, d);
    const std::size_t n_cyclic = field.order();
    const std::size_t length = n_cyclic + 1;
    const std::size_t dimension = n_cyclic - (g.size() - 1);
    const bool g_odd = std::count(g.begin(), g.end(), std::uint8_t{1}) % 2 == 1;

    std::vector<BitVector> rows;
    rows.reserve(dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
        BitVector row(length);
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g[j]) row.set(i + j);
        if (g_odd) row.set(n_cyclic);
        rows.push_back(std::move(row));
    }

    const bool huge = dimension >= 63;
    const std::size_t span = huge ? std::numeric_limits<std::size_t>::max() : (std::size_t{1} << dimension);
    std::size_t count;
    if (target) {
        if (*target > limits.max_words)
            throw CapExceeded("requested " + std::to_string(*target) + " codewords, cap is " +
                              std::to_string(limits.max_words));
        if (*target > span)
            throw NotEnoughCodewords("extended BCH(m=" + std::to_string(m) + ", d=" + std::to_string(d) +
                                     ") has 2^" + std::to_string(dimension) + " codewords, " +
                                     std::to_string(*target) + " requested");
        count = *target;
    } else {
        if (huge || span > limits.max_words)
            throw CapExceeded("extended BCH(m=" + std::to_string(m) + ", d=" + std::to_string(d) + ") has 2^" +
                              std::to_string(dimension) + " codewords, above the enumeration cap");
        count = span;
    }

    std::vector<BitVector> words;
    words.reserve(count);
    words.emplace_back(length);
    for (std::size_t t = 1; t < count; ++t) {
        auto low = static_cast<std::size_t>(std::countr_zero(t));
        words.push_back(words[t ^ (std::size_t{1} << low)] ^ rows[low]);
    }

    BinaryCode code(length, std::move(words), "bch");
    code.set_generator(std::move(rows));
    code.set_designed_distance(2 * d);
    if (code.is_complete_linear() && code.size() >= 2) {
        int dist = min_distance(code, limits);
        if (dist < 2 * d)
            throw FieldError("extended BCH code has distance " + std::to_string(dist) + " < " +
                             std::to_string(2 * d));
    }
    return code;
}

SignMatrix sylvester_matrix(int m, const CodeLimits& limits) {
    if (m < 1) throw RangeError("Sylvester matrix needs m >= 1");
    if (m > limits.max_hadamard_log_order)
        throw SizeLimitExceeded("Sylvester matrix of order 2^" + std::to_string(m) + " exceeds the cap");
    const std::size_t order = std::size_t{1} << m;
    SignMatrix h(order, std::vector<int>(order));
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) h[i][j] = std::popcount(i & j) % 2 ? -1 : 1;
    return h;
}

BinaryCode hadamard_code(int m, const CodeLimits& limits) {
    if (m < 1) throw RangeError("Hadamard code needs m >= 1");
    if (m > limits.max_hadamard_log_order)
        throw SizeLimitExceeded("Hadamard code of order 2^" + std::to_string(m) + " exceeds the cap");
    const std::size_t order = std::size_t{1} << m;
    std::vector<BitVector> words;
    words.reserve(order);
    for (std::size_t j = 0; j < order; ++j) {
        BitVector w(order - 1);
        for (std::size_t i = 1; i < order; ++i)
            if (std::popcount(i & j) % 2) w.set(i - 1);
        words.push_back(std::move(w));
    }
    BinaryCode code(order - 1, std::move(words), "hadamard");
    code.set_designed_distance(static_cast<int>(order / 2));
    if (order >= 2) code.cache_min_distance(static_cast<int>(order / 2));
    return code;
}

int min_distance(BinaryCode& code, const CodeLimits& limits) {
    if (auto cached = code.cached_min_distance()) return *cached;
    const auto& words = code.words();
    if (words.size() < 2) throw DomainError("minimum distance needs at least two codewords");

    std::size_t best = std::numeric_limits<std::size_t>::max();
    if (code.is_complete_linear()) {
        for (const auto& w : words)
            if (w.any()) best = std::min(best, w.count());
    } else {
        const auto pairs = static_cast<std::uint64_t>(words.size()) * (words.size() - 1) / 2;
        if (pairs > limits.max_pair_checks)
            throw CapExceeded(std::to_string(pairs) + " pair checks exceed the cap of " +
                              std::to_string(limits.max_pair_checks));
        for (std::size_t a = 0; a < words.size(); ++a)
            for (std::size_t b = a + 1; b < words.size(); ++b) best = std::min(best, words[a].distance(words[b]));
    }
    code.cache_min_distance(static_cast<int>(best));
    return static_cast<int>(best);
}

KBest k_best(std::size_t n, int lam, const CodeLimits& limits) {
    if (n < 2 || lam < 1) throw RangeError("k_best needs n >= 2 and lambda >= 1");
    std::optional<KBest> best;
    auto offer = [&](int k, const char* method) {
        if (!best || k < best->k) best = KBest{k, method};
    };
    const int log_n = ceil_log2(n);

    if (lam <= 2) {
        int k = std::max(2, log_n + 1);
        if (k - 1 < 63 && (std::size_t{1} << (k - 1)) <= limits.max_words) offer(k, "even-weight");
    }

    if (n <= limits.max_words) {
        const int d = std::max(2, (lam + 1) / 2);
        for (int m = 2; m <= 16; ++m) {
            if (2 * d - 1 > (1 << m) - 1) continue;
            int dim = bch_dimension(m, d);
            if (dim >= 63 || (std::size_t{1} << dim) >= n) {
                offer(1 << m, "bch");
                break;
            }
        }
    }

    {
        int m = std::max({1, log_n, ceil_log2(static_cast<std::size_t>(lam)) + 1});
        if (m <= limits.max_hadamard_log_order) offer((1 << m) - 1, "hadamard");
    }

    for (int k = std::max(1, log_n); k < 63 && (!best || k < best->k); ++k) {
        if ((std::size_t{1} << k) > limits.max_words) break;
        if (lam > k) continue;
        try {
            greedy_gv_code(k, lam, n, limits);
            offer(k, "gv");
            break;
        } catch (const TargetUnreached&) {
        }
    }

    if (!best)
        throw NoConstruction("no implemented construction reaches n = " + std::to_string(n) +
                             " words at distance " + std::to_string(lam) + " within the caps");
    return *best;
}

BinaryCode build_code(const KBest& choice, std::size_t n, int lam, const CodeLimits& limits) {
    if (choice.method == "even-weight") return even_weight_code(choice.k, limits);
    if (choice.method == "gv") return greedy_gv_code(choice.k, lam, n, limits);
    if (choice.method == "hadamard") return hadamard_code(std::countr_zero(static_cast<unsigned>(choice.k + 1)), limits);
    if (choice.method == "bch")
        return bch_extended_code(std::countr_zero(static_cast<unsigned>(choice.k)), std::max(2, (lam + 1) / 2), n,
                                 limits);
    throw NoConstruction("unknown construction '" + choice.method + "'");
}

std::string serialize_code(const BinaryCode& code) {
    detail::json doc;
    doc["schema_version"] = detail::schema_version;
    doc["k"] = code.length();
    auto words = detail::json::array();
    for (const auto& w : code.words()) words.push_back(w.to_string());
    doc["words"] = std::move(words);
    if (auto d = code.cached_min_distance())
        doc["min_distance"] = *d;
    else
        doc["min_distance"] = nullptr;
    doc["method"] = code.method();
    return doc.dump();
}

BinaryCode parse_code(std::string_view text) {
    using detail::require;
    auto doc = detail::parse_json_text(text);
    detail::check_schema_version(doc);
    auto k = detail::require_integer(require(doc, "k"), "k");
    if (k < 1) throw RangeError("k must be positive");
    const auto& list = require(doc, "words");
    if (!list.is_array()) throw ParseError("'words' must be an array");
    std::vector<BitVector> words;
    for (const auto& w : list) {
        if (!w.is_string()) throw ParseError("codewords must be 0/1 strings");
        try {
            words.push_back(BitVector::from_string(w.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    std::string method = doc.contains("method") && doc["method"].is_string() ? doc["method"].get<std::string>()
                                                                               : "explicit";
    BinaryCode code(static_cast<std::size_t>(k), std::move(words), method);
    if (doc.contains("min_distance") && !doc["min_distance"].is_null()) {
        auto claimed = detail::require_integer(doc["min_distance"], "min_distance");
        int actual = min_distance(code);
        if (actual != claimed)
            throw ParseError("min_distance " + std::to_string(claimed) + " does not match the exact value " +
                             std::to_string(actual));
    }
    return code;
}

} // namespace bicover
