#include "tautext/linalg.hpp"

#include <stdexcept>

namespace tautext {

bool RationalMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix shapes do not compose");
    RationalMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r(i, j) += x * b(k, j);
        }
    return r;
}

std::size_t rank(std::vector<SparseRow> rows)
{
    // pivot column -> reduced row with leading entry 1 at that column
    std::map<std::size_t, SparseRow> pivots;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto p = pivots.find(lead->first);
            if (p == pivots.end()) {
                Rational inv = 1 / lead->second;
                for (auto& [c, x] : row)
                    x *= inv;
                pivots.emplace(lead->first, std::move(row));
                break;
            }
            Rational f = lead->second;
            for (const auto& [c, x] : p->second) {
                Rational& slot = row[c];
                slot -= f * x;
                if (slot == 0)
                    row.erase(c);
            }
        }
    }
    return pivots.size();
}

std::size_t rank(const RationalMatrix& m)
{
    std::vector<SparseRow> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                rows[i].emplace(j, m(i, j));
    return rank(std::move(rows));
}

}  // namespace tautext
