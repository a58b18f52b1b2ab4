#include "holant/gf2.hpp"

namespace holant {

void Gf2System::add_equation(const std::vector<int>& vars, bool rhs) {
    Gf2Vec row = gf2_zero(nvars_);
    for (int v : vars) gf2_flip(row, v);
    add_row(std::move(row), rhs);
}

std::optional<Gf2Solution> Gf2System::solve() const {
    std::vector<Row> m = rows_;
    std::vector<int> pivot_of_row;
    std::vector<int> row_of_var(nvars_, -1);

    std::size_t rank = 0;
    for (int col = 0; col < nvars_ && rank < m.size(); ++col) {
        std::size_t pr = rank;
        while (pr < m.size() && !gf2_get(m[pr].coeffs, col)) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[rank], m[pr]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != rank && gf2_get(m[r].coeffs, col)) {
                gf2_xor(m[r].coeffs, m[rank].coeffs);
                m[r].rhs ^= m[rank].rhs;
            }
        }
        pivot_of_row.push_back(col);
        row_of_var[col] = static_cast<int>(rank);
        ++rank;
    }
    // Rows past the rank are identically zero after full elimination, so a
    // set right-hand side means the system is inconsistent.
    for (std::size_t r = rank; r < m.size(); ++r)
        if (m[r].rhs) return std::nullopt;

    Gf2Solution sol;
    sol.particular = gf2_zero(nvars_);
    for (std::size_t r = 0; r < rank; ++r)
        if (m[r].rhs) gf2_flip(sol.particular, pivot_of_row[r]);

    for (int col = 0; col < nvars_; ++col) {
        if (row_of_var[col] >= 0) continue;
        Gf2Vec vec = gf2_zero(nvars_);
        gf2_flip(vec, col);
        for (std::size_t r = 0; r < rank; ++r)
            if (gf2_get(m[r].coeffs, col)) gf2_flip(vec, pivot_of_row[r]);
        sol.basis.push_back(std::move(vec));
    }
    return sol;
}

}  // namespace holant
