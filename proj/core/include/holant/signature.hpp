#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holant/cyc8.hpp"

namespace holant {

/// A 2x2 matrix over Q(z8); m[r][c] is the entry in row r, column c.
using Mat2 = std::array<std::array<Cyc8, 2>, 2>;

Mat2 mat2_identity();
Mat2 mat2_diag(const Cyc8& d0, const Cyc8& d1);
/// Exact inverse; throws DivisionByZero when the determinant vanishes.
Mat2 mat2_inverse(const Mat2& m);

/// Assignments to n Boolean variables are packed into a uint64_t with
/// variable 0 at the most significant of the n used bits, so that integer
/// order equals lexicographic order of the bit string.  Arity is capped
/// at 64 variables.
constexpr int kMaxArity = 64;

inline int asn_get(std::uint64_t bits, int n, int var) {
    return static_cast<int>((bits >> (n - 1 - var)) & 1u);
}
inline std::uint64_t asn_with(std::uint64_t bits, int n, int var, int val) {
    std::uint64_t m = std::uint64_t{1} << (n - 1 - var);
    return val ? (bits | m) : (bits & ~m);
}
std::string asn_to_string(std::uint64_t bits, int n);

/// A constraint function f : {0,1}^n -> Q(z8), stored sparsely as its
/// support with values.  Entries never hold zero; missing assignments
/// have value 0.  Signatures are immutable after construction by
/// convention: all operations return fresh values.
class Signature {
public:
    Signature() = default;
    explicit Signature(int arity, std::string name = "")
        : arity_(arity), name_(std::move(name)) {}

    /// Builds from a dense value table indexed by packed assignment
    /// (zeros dropped).
    static Signature from_dense(int arity, const std::vector<Cyc8>& values,
                                std::string name = "");
    /// Symmetric shorthand [f_0,...,f_n]: the value depends on the
    /// Hamming weight only.
    static Signature from_symmetric(const std::vector<Cyc8>& by_weight,
                                    std::string name = "");

    int arity() const { return arity_; }
    const std::string& name() const { return name_; }
    Signature with_name(std::string name) const;

    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }
    const std::map<std::uint64_t, Cyc8>& entries() const { return entries_; }
    std::vector<std::uint64_t> support() const;

    /// Value at a packed assignment (0 when off support).
    Cyc8 value(std::uint64_t bits) const;
    /// Inserts or erases an entry; zero values are dropped.
    void set(std::uint64_t bits, const Cyc8& v);

    bool operator==(const Signature& o) const {
        return arity_ == o.arity_ && entries_ == o.entries_;
    }

    /// Fixes variable `var` to `bit` and removes it; the result may be
    /// identically zero.
    Signature pin(int var, int bit) const;

    /// Applies one 2x2 matrix per variable (the Kronecker product acting
    /// on the value vector); zero results are dropped.
    Signature transformed(const std::vector<Mat2>& mats) const;
    /// Same matrix on every variable.
    Signature transformed_all(const Mat2& m) const;
    /// Entrywise multiplication by alpha^(value of `var`), i.e. the
    /// diagonal transform diag(1, alpha^k) at one variable.
    Signature scaled_at_var(int var, long alpha_exp) const;

    Signature scaled(const Cyc8& c) const;
    Signature permuted(const std::vector<int>& perm) const;

    /// c with *this == c * g, if any.
    std::optional<Cyc8> proportional_to(const Signature& g) const;

    /// Tensor product over concatenated variable lists.
    Signature tensor(const Signature& g) const;

private:
    int arity_ = 0;
    std::map<std::uint64_t, Cyc8> entries_;
    std::string name_;
};

}  // namespace holant
