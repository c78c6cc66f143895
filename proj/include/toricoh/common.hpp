#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricoh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad matrix shape, non-square-free ideal, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Two independent computations that must agree did not.
class CrossCheckFailure : public Error {
public:
    using Error::Error;
};

/// A subset of {0, ..., 31}, stored as a bitmask. Documents and reports use
/// 1-based indices; everything in memory is 0-based.
class IndexSet {
public:
    static constexpr std::size_t kMaxSize = 32;

    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
    IndexSet(std::initializer_list<std::size_t> elems) {
        for (auto e : elems) insert(e);
    }

    static IndexSet full(std::size_t n) {
        return IndexSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
    }
    static IndexSet from_vector(const std::vector<std::size_t>& elems) {
        IndexSet s;
        for (auto e : elems) s.insert(e);
        return s;
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    constexpr bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }

    void insert(std::size_t i) {
        if (i >= kMaxSize) throw InvalidInput("index " + std::to_string(i) + " exceeds 32-element limit");
        bits_ |= std::uint32_t{1} << i;
    }
    void erase(std::size_t i) { bits_ &= ~(std::uint32_t{1} << i); }

    IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
    IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
    IndexSet complement(std::size_t n) const { return IndexSet(~bits_ & full(n).bits_); }

    std::vector<std::size_t> elements() const {
        std::vector<std::size_t> out;
        for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }
    /// Elements shifted to 1-based numbering, as used in documents.
    std::vector<std::size_t> one_based() const {
        auto e = elements();
        for (auto& x : e) ++x;
        return e;
    }

    friend constexpr bool operator==(IndexSet, IndexSet) = default;

    /// Lexicographic order on sorted element lists; the order used in every report.
    friend bool lex_less(IndexSet a, IndexSet b);

private:
    std::uint32_t bits_ = 0;
};

inline bool lex_less(IndexSet a, IndexSet b) {
    const std::uint32_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const int d = std::countr_zero(diff);
    const auto above = [d](IndexSet s) { return d < 31 && (s.bits() >> (d + 1)) != 0; };
    // The set holding d wins unless the other one stops before d.
    return a.contains(static_cast<std::size_t>(d)) ? above(b) : !above(a);
}

struct IndexSetHash {
    std::size_t operator()(IndexSet s) const noexcept { return s.bits(); }
};

/// Field characteristic: 0 (the rationals) or a prime below 2^31.
class Characteristic {
public:
    constexpr Characteristic() = default;
    explicit Characteristic(long long value);

    constexpr std::uint32_t value() const { return value_; }
    constexpr bool is_zero() const { return value_ == 0; }
    friend constexpr bool operator==(Characteristic, Characteristic) = default;

private:
    std::uint32_t value_ = 0;
};

/// A fine degree p in Z^n.
using FineDegree = std::vector<long>;

/// neg(p): the coordinates where p is negative.
IndexSet negative_support(const FineDegree& p);

/// p_I: -1 on I, 0 elsewhere.
FineDegree orthant_apex(IndexSet I, std::size_t n);

/// Thread count for internal parallel loops; honours TORICOH_THREADS.
unsigned worker_count();

}  // namespace toricoh
