#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bicover/bitvec.hpp"

namespace bicover {

struct CodeLimits {
    std::size_t max_words = std::size_t{1} << 20;         // enumeration cap
    std::uint64_t max_pair_checks = std::uint64_t{1} << 24;
    int max_hadamard_log_order = 12;
};

// A binary code: `length` bits per word, words distinct and stored in a fixed
// order (construction order). Position 1 of a codeword is bit 0 of its
// BitVector and the leftmost character of its text form.
class BinaryCode {
public:
    BinaryCode(std::size_t length, std::vector<BitVector> words, std::string method = "explicit");

    std::size_t length() const noexcept { return length_; }
    const std::vector<BitVector>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::string& method() const noexcept { return method_; }

    std::optional<int> cached_min_distance() const noexcept { return min_distance_; }
    void cache_min_distance(int d) { min_distance_ = d; }

    // Rows spanning the code when it is linear; `words` then holds either the
    // whole span or a prefix of it in message order.
    const std::vector<BitVector>& generator() const noexcept { return generator_; }
    bool is_complete_linear() const noexcept {
        return !generator_.empty() && generator_.size() < 63 &&
               words_.size() == (std::size_t{1} << generator_.size());
    }
    void set_generator(std::vector<BitVector> rows) { generator_ = std::move(rows); }

    // Distance the construction guarantees, when it guarantees one.
    std::optional<int> designed_distance() const noexcept { return designed_distance_; }
    void set_designed_distance(int d) { designed_distance_ = d; }

private:
    std::size_t length_;
    std::vector<BitVector> words_;
    std::string method_;
    std::optional<int> min_distance_;
    std::optional<int> designed_distance_;
    std::vector<BitVector> generator_;
};

// All 2^(k-1) even-weight words of length k in lexicographic order.
BinaryCode even_weight_code(int k, const CodeLimits& limits = {});

// Lexicographic greedy (lexicode) scan: keep a word iff it is at distance
// >= d from every word kept so far; stop once `target` words are kept.
// Throws TargetUnreached when the full scan ends short of target.
BinaryCode greedy_gv_code(int k, int d, std::size_t target, const CodeLimits& limits = {});

// GF(2^m) with a tabled primitive polynomial. Construction verifies that x
// has multiplicative order 2^m - 1.
class FieldContext {
public:
    explicit FieldContext(int m);
    FieldContext(int m, std::uint32_t modulus);

    int degree() const noexcept { return m_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t order() const noexcept { return (1u << m_) - 1; }

    std::uint32_t exp(std::uint64_t i) const { return exp_[i % order()]; }
    std::uint32_t log(std::uint32_t a) const { return log_[a]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % order()];
    }

    static std::optional<std::uint32_t> tabled_modulus(int m);

private:
    int m_;
    std::uint32_t modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

// Generator polynomial (bit i = coefficient of x^i) of the narrow-sense
// primitive BCH code of length 2^m - 1 with designed distance 2d - 1.
// d = 1 yields the trivial generator 1.
std::vector<std::uint8_t> bch_generator_polynomial(const FieldContext& field, int d);

// Dimension of the extended code (= that of the cyclic code).
int bch_dimension(int m, int d);

// Narrow-sense primitive BCH code of designed distance 2d - 1, extended by an
// overall parity bit: length 2^m, minimum distance >= 2d. Codewords are listed
// in message order (message t encodes as the XOR of generator rows x^i g(x)
// for the set bits i of t). Without a target, all codewords are enumerated
// (CapExceeded above limits.max_words); with one, the first `target`
// (NotEnoughCodewords past the code size).
// Text layout: positions 1..2^m-1 carry coefficients of x^0..x^(2^m-2), the
// last position the parity bit.
BinaryCode bch_extended_code(int m, int d, std::optional<std::size_t> target = std::nullopt,
                             const CodeLimits& limits = {});

// Sylvester-Hadamard matrix of order 2^m, entry (i, j) = (-1)^popcount(i & j).
using SignMatrix = std::vector<std::vector<int>>;
SignMatrix sylvester_matrix(int m, const CodeLimits& limits = {});

// Exact minimum distance; caches it on the code. Complete linear codes use
// the minimum nonzero weight, everything else pairwise comparison capped at
// limits.max_pair_checks (CapExceeded).
int min_distance(BinaryCode& code, const CodeLimits& limits = {});

struct KBest {
    int k;
    std::string method;
};

// Smallest length over the implemented constructions that carries >= n words
// at distance >= lam. Ties go to the first of: even-weight, bch, hadamard, gv.
KBest k_best(std::size_t n, int lam, const CodeLimits& limits = {});

// Builds the code k_best picked, holding at least n words.
BinaryCode build_code(const KBest& choice, std::size_t n, int lam, const CodeLimits& limits = {});

// Columns of the Sylvester matrix with the all-ones row removed: 2^m words of
// length 2^m - 1 at pairwise distance exactly 2^(m-1).
BinaryCode hadamard_code(int m, const CodeLimits& limits = {});

// {"schema_version":1,"k":..,"words":[..],"min_distance":int|null,"method":..}
std::string serialize_code(const BinaryCode& code);
BinaryCode parse_code(std::string_view text);

} // namespace bicover
