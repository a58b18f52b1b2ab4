#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace holant {

/// Bit-packed vector over GF(2); variable v lives at word v/64, bit v%64.
using Gf2Vec = std::vector<std::uint64_t>;

inline Gf2Vec gf2_zero(int nvars) { return Gf2Vec((nvars + 63) / 64, 0); }
inline bool gf2_get(const Gf2Vec& v, int i) { return (v[i / 64] >> (i % 64)) & 1; }
inline void gf2_flip(Gf2Vec& v, int i) { v[i / 64] ^= std::uint64_t{1} << (i % 64); }
inline void gf2_xor(Gf2Vec& a, const Gf2Vec& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}
inline bool gf2_any(const Gf2Vec& v) {
    for (std::uint64_t w : v)
        if (w) return true;
    return false;
}

struct Gf2Solution {
    Gf2Vec particular;           ///< free variables set to 0
    std::vector<Gf2Vec> basis;   ///< null-space basis, one vector per free variable
};

/// A linear system over GF(2): rows are equations coeffs . x = rhs.
class Gf2System {
public:
    explicit Gf2System(int nvars = 0) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    std::size_t rows() const { return rows_.size(); }

    void add_row(Gf2Vec coeffs, bool rhs) { rows_.push_back({std::move(coeffs), rhs}); }
    /// Adds the equation x_a + x_b + ... = rhs given variable indices
    /// (repeated indices cancel).
    void add_equation(const std::vector<int>& vars, bool rhs);

    /// Gaussian elimination; absent when inconsistent.
    std::optional<Gf2Solution> solve() const;

private:
    struct Row {
        Gf2Vec coeffs;
        bool rhs;
    };
    int nvars_;
    std::vector<Row> rows_;
};

}  // namespace holant
