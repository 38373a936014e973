#pragma once

#include <cstdint>

namespace ivmlab {

// splitmix64 finalizer; the basis of all seeded randomness here
inline std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Counter-based stream: word k is a pure function of (seed, stream, k), so
// parallel and serial evaluation orders agree bit for bit.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix64(mix64(seed) ^ (stream * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL)))
    {
    }

    std::uint64_t word(std::uint64_t k) const { return mix64(key_ ^ (k * 0x9E3779B97F4A7C15ULL)); }

    // convenience sequential interface
    std::uint64_t next() { return word(counter_++); }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// 64-bit FNV-1a, used for content hashing and prefix-keyed betting rules
inline std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h = 0xCBF29CE484222325ULL)
{
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ULL;
    }
    return h;
}

} // namespace ivmlab
