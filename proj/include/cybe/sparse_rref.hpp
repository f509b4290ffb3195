// Incremental fully-reduced row echelon form over sparse rational rows,
// keyed by an integer coordinate type.  Used for carriers and tensor spans.
#pragma once

#include "cybe/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace cybe {

template <class Key>
class SparseRref {
public:
    using Row = std::map<Key, Rational>;

    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<Key>& pivots() const { return pivots_; }

    static void axpy(Row& a, const Rational& f, const Row& b) {
        if (cybe::is_zero(f)) return;
        for (const auto& [k, v] : b) {
            auto [it, inserted] = a.emplace(k, f * v);
            if (!inserted) {
                it->second += f * v;
                if (cybe::is_zero(it->second)) a.erase(it);
            }
        }
    }

    /// Reduces the row against the basis in place.
    void reduce(Row& row) const {
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            auto it = row.find(pivots_[j]);
            if (it == row.end()) continue;
            axpy(row, -it->second, rows_[j]);
        }
    }

    /// Inserts (the reduction of) a row; returns true when the dimension grew.
    bool insert(Row row) {
        reduce(row);
        if (row.empty()) return false;
        const Key piv = row.begin()->first;
        const Rational lead = row.begin()->second;
        for (auto& [k, v] : row) v /= lead;
        for (auto& r : rows_) {
            auto it = r.find(piv);
            if (it != r.end()) axpy(r, -it->second, row);
        }
        const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
        rows_.insert(rows_.begin() + pos, std::move(row));
        pivots_.insert(pivots_.begin() + pos, piv);
        return true;
    }

    /// Coordinates of a row over the basis, or nullopt when it is outside the span.
    std::optional<std::vector<Rational>> coordinates(Row row) const {
        std::vector<Rational> coords(rows_.size(), Rational(0));
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            auto it = row.find(pivots_[j]);
            if (it == row.end()) continue;
            coords[j] = it->second;
            axpy(row, -coords[j], rows_[j]);
        }
        if (!row.empty()) return std::nullopt;
        return coords;
    }

    bool contains(Row row) const {
        reduce(row);
        return row.empty();
    }

private:
    std::vector<Row> rows_;     // fully reduced, ordered by pivot
    std::vector<Key> pivots_;
};

}  // namespace cybe
