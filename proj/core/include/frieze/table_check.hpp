#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "frieze/isometry.hpp"

namespace frieze {

using ComposeFn = std::function<StripIsometry(const StripIsometry&, const StripIsometry&)>;

inline constexpr std::uint64_t default_table_seed = 20240611;

// (sigma1*sigma2, mu1*mu2, sigma1*c2 + c1): composition of the affine actions.
CanonicalForm canonical_product(const CanonicalForm& p, const CanonicalForm& q);

struct CellCheck {
    Kind row = Kind::Translation;  // left factor (applied second)
    Kind col = Kind::Translation;
    std::size_t cases = 0;
    std::size_t value_failures = 0;  // disagreement with the affine oracle
    std::size_t kind_failures = 0;   // disagreement with the compact table
    std::optional<std::string> first_failure;

    bool ok() const { return value_failures == 0 && kind_failures == 0; }
    std::string name() const;  // "R∘V"
};

struct TableCheck {
    std::array<CellCheck, 16> cells;
    std::uint64_t seed = default_table_seed;

    std::size_t passed() const;
    bool ok() const { return passed() == cells.size(); }
    // One line per cell, then "16/16 cells verified".
    std::string str() const;
};

// Checks every cell of the strip multiplication table against the affine
// oracle on the grid {k/4 : |k| <= 8} squared plus `random_cases` seeded
// random rational pairs per cell.
TableCheck verify_table(std::uint64_t seed = default_table_seed, std::size_t random_cases = 1000,
                        const ComposeFn& fn = compose);

// Both multiplication tables as text, the full one read back symbolically
// from `fn`.
std::string print_table(const ComposeFn& fn = compose);

}  // namespace frieze
