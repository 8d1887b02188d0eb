#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sfw {

using Rational = boost::multiprecision::cpp_rational;

/// Incremental exact row reduction over ℚ with sparse rows. Each stored row
/// has a distinct leading column with coefficient 1.
class SparseRationalEliminator {
public:
    using Row = std::map<std::size_t, Rational>;

    /// Reduces `row` against the stored pivots; keeps it when independent.
    /// Returns true when the rank grew.
    bool add(Row row) {
        drop_zeros(row);
        while (!row.empty()) {
            auto lead = row.begin();
            auto p = pivots_.find(lead->first);
            if (p == pivots_.end()) {
                Rational inv = 1 / lead->second;
                for (auto& [c, v] : row) v *= inv;
                pivots_.emplace(lead->first, std::move(row));
                return true;
            }
            Rational f = lead->second;
            for (const auto& [c, v] : p->second) row[c] -= f * v;
            drop_zeros(row);
        }
        return false;
    }

    std::size_t rank() const noexcept { return pivots_.size(); }

private:
    static void drop_zeros(Row& row) {
        for (auto it = row.begin(); it != row.end();)
            it = it->second == 0 ? row.erase(it) : std::next(it);
    }

    std::map<std::size_t, Row> pivots_;
};

}  // namespace sfw
