#pragma once

#include "cdx/element.hpp"

#include <cstdint>
#include <vector>

namespace cdx {

/// Sign and target index of a basis product: e_i * e_j = sign * e_index.
struct TableEntry {
    std::uint16_t index;
    std::int8_t sign;

    bool operator==(const TableEntry&) const = default;
};

/// Dense 2^n x 2^n multiplication table. Derived data: every entry is forced
/// by the doubled product, which stays the source of truth. Construction
/// checks each entry against the recursive product (directly at low levels,
/// through the level n-1 table plus the doubling cases above that) and
/// rejects any structural violation.
class BasisTable {
  public:
    explicit BasisTable(int level);

    int level() const { return level_; }
    int dim() const { return dim_; }

    TableEntry entry(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                        static_cast<std::size_t>(j)];
    }

  private:
    int level_;
    int dim_;
    std::vector<TableEntry> entries_;
};

/// Shared cache; tables are immutable once built and safe to read
/// concurrently.
const BasisTable& table_for(int level);

/// Table-accelerated product. Must agree with mul() everywhere; the test
/// suite holds the two routes together.
Element mul_via_table(const Element& a, const Element& b);

} // namespace cdx
