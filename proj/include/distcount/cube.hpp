#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace distcount {

/// A point of the Boolean cube C_n, bit-packed into 64-bit words.
///
/// Coordinate i lives in bit (i % 64) of word (i / 64); bits above the
/// dimension are kept zero so word-wise operations need no masking.
/// The default-constructed value is the single point of C_0.
class CubePoint {
public:
    CubePoint() = default;
    explicit CubePoint(std::size_t n) : n_(n), words_(word_count(n), 0) {}

    /// Builds a point from a string of '0'/'1' characters; position i of
    /// the string is coordinate i.
    static CubePoint parse(std::string_view bits);

    std::size_t dim() const { return n_; }
    bool bit(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set_bit(std::size_t i, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::uint64_t popcount() const;
    std::string to_string() const;

    friend bool operator==(const CubePoint&, const CubePoint&) = default;
    friend auto operator<=>(const CubePoint&, const CubePoint&) = default;

private:
    static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Per-coordinate penalty tables d_i(alpha, beta) with zero diagonal.
/// Only the two off-diagonal entries per coordinate are stored.
class PenaltySystem {
public:
    PenaltySystem(std::vector<std::uint32_t> cost01, std::vector<std::uint32_t> cost10);

    /// All off-diagonal penalties equal to one; the induced distance is the
    /// Hamming distance.
    static PenaltySystem unit(std::size_t n);

    std::size_t dim() const { return cost01_.size(); }
    std::uint32_t cost01(std::size_t i) const { return cost01_[i]; }
    std::uint32_t cost10(std::size_t i) const { return cost10_[i]; }
    std::uint32_t penalty(std::size_t i, bool a, bool b) const {
        if (a == b) return 0;
        return a ? cost10_[i] : cost01_[i];
    }

private:
    std::vector<std::uint32_t> cost01_;  // d_i(0, 1)
    std::vector<std::uint32_t> cost10_;  // d_i(1, 0)
};

/// A 0/1 coordinate mask together with the retention probability it was
/// drawn from. Coordinates with lambda_i = 0 are ignored by the masked
/// distance.
class RandomMask {
public:
    RandomMask(CubePoint lambda, double p);

    std::size_t dim() const { return lambda_.dim(); }
    double p() const { return p_; }
    bool bit(std::size_t i) const { return lambda_.bit(i); }
    const CubePoint& lambda() const { return lambda_; }

    /// Penalties d_i(0,1) = d_i(1,0) = lambda_i, so that the induced
    /// penalty distance equals the masked distance.
    PenaltySystem penalties() const;

private:
    CubePoint lambda_;
    double p_;
};

std::uint64_t hamming_distance(const CubePoint& a, const CubePoint& b);
std::uint64_t penalty_distance(const CubePoint& a, const CubePoint& b, const PenaltySystem& pen);
std::uint64_t masked_distance(const CubePoint& a, const CubePoint& b, const RandomMask& mask);

/// One value of the 64-bit mixing function behind the counter-based
/// generator. Useful for deriving fresh seeds deterministically.
std::uint64_t mix64(std::uint64_t x);

/// A cheap counter-based random stream. Word j of the stream is a pure
/// function of the key, so streams can be recreated anywhere.
class RngStream {
public:
    std::uint64_t next_u64();
    /// True with probability p (p in [0,1]); always consumes one word.
    bool next_bernoulli(double p);

private:
    friend class SeededRng;
    explicit RngStream(std::uint64_t key) : state_(key) {}
    std::uint64_t state_;
};

/// Splittable seeded generator. The stream for (run, index) depends only on
/// (seed, run, index), so sample i of a run is reproducible regardless of
/// evaluation order or worker count.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed) {}
    std::uint64_t seed() const { return seed_; }
    RngStream stream(std::uint64_t run, std::uint64_t index) const;

private:
    std::uint64_t seed_;
};

/// Uniform point of C_n: each coordinate is an independent fair bit.
CubePoint sample_uniform_point(std::size_t n, RngStream& rng);

/// Mask with independent Bernoulli(p) coordinates, 0 < p <= 1.
RandomMask sample_mask(std::size_t n, double p, RngStream& rng);

}  // namespace distcount
