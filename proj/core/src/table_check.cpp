#include "frieze/table_check.hpp"

#include <iomanip>
#include <random>
#include <sstream>
#include <vector>

namespace frieze {

CanonicalForm canonical_product(const CanonicalForm& p, const CanonicalForm& q) {
    return {p.sigma * q.sigma, p.mu * q.mu, q.c * Scalar(p.sigma) + p.c};
}

std::string CellCheck::name() const {
    return std::string(1, kind_letter(row)) + "∘" + std::string(1, kind_letter(col));
}

std::size_t TableCheck::passed() const {
    std::size_t n = 0;
    for (const auto& c : cells) n += c.ok() ? 1 : 0;
    return n;
}

std::string TableCheck::str() const {
    std::ostringstream os;
    for (const auto& c : cells) {
        os << "cell " << c.name() << " " << (c.ok() ? "pass" : "FAIL") << " cases=" << c.cases;
        if (!c.ok()) {
            os << " value_failures=" << c.value_failures << " kind_failures=" << c.kind_failures;
            if (c.first_failure) os << " first: " << *c.first_failure;
        }
        os << "\n";
    }
    os << passed() << "/" << cells.size() << " cells verified (seed " << seed << ")\n";
    return os.str();
}

namespace {

StripIsometry make(Kind k, const Scalar& p) {
    switch (k) {
        case Kind::Translation: return StripIsometry::translation(p);
        case Kind::Rotation: return StripIsometry::rotation(p);
        case Kind::VerticalMirror: return StripIsometry::vertical_mirror(p);
        case Kind::Glide: return StripIsometry::glide(p);
    }
    return {};
}

}  // namespace

TableCheck verify_table(std::uint64_t seed, std::size_t random_cases, const ComposeFn& fn) {
    std::vector<std::pair<Scalar, Scalar>> params;
    for (int a = -8; a <= 8; ++a)
        for (int b = -8; b <= 8; ++b) params.emplace_back(Scalar(a, 4), Scalar(b, 4));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> den(1, 60);
    for (std::size_t i = 0; i < random_cases; ++i) {
        Scalar a(num(rng), den(rng));
        Scalar b(num(rng), den(rng));
        params.emplace_back(a, b);
    }

    TableCheck out;
    out.seed = seed;
    std::size_t idx = 0;
    for (Kind row : all_kinds) {
        for (Kind col : all_kinds) {
            CellCheck& cell = out.cells[idx++];
            cell.row = row;
            cell.col = col;
            for (const auto& [a, b] : params) {
                StripIsometry p = make(row, a), q = make(col, b);
                StripIsometry got = fn(p, q);
                StripIsometry want = from_canonical(canonical_product(canonical(p), canonical(q)));
                ++cell.cases;
                bool bad = false;
                if (got != want) {
                    ++cell.value_failures;
                    bad = true;
                }
                if (got.kind() != compact_product(row, col)) {
                    ++cell.kind_failures;
                    bad = true;
                }
                if (bad && !cell.first_failure) {
                    cell.first_failure = p.str() + " ∘ " + q.str() + " = " + got.str() +
                                         ", expected " + want.str();
                }
            }
        }
    }
    return out;
}

namespace {

// Renders alpha*x + beta*y with the given names, e.g. "B+t/2", "2A-2B".
std::string affine(const Scalar& alpha, const std::string& x, const Scalar& beta,
                   const std::string& y) {
    std::string out;
    auto term = [&](const Scalar& c, const std::string& name) {
        if (c.is_zero()) return;
        Scalar m = c.abs();
        std::string body;
        if (m == Scalar(1)) body = name;
        else if (m.num() == 1) body = name + "/" + std::to_string(m.den());
        else if (m.is_integer()) body = std::to_string(m.num()) + name;
        else body = std::to_string(m.num()) + name + "/" + std::to_string(m.den());
        if (c.sign() < 0) out += "-";
        else if (!out.empty()) out += "+";
        out += body;
    };
    // Leading term is the one with a positive coefficient when possible.
    if (alpha.sign() < 0 && beta.sign() > 0) {
        term(beta, y);
        term(alpha, x);
    } else {
        term(alpha, x);
        term(beta, y);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string print_table(const ComposeFn& fn) {
    auto row_name = [](Kind k) { return (k == Kind::Translation || k == Kind::Glide) ? "t" : "A"; };
    auto col_name = [](Kind k) { return (k == Kind::Translation || k == Kind::Glide) ? "s" : "B"; };
    auto header = [&](Kind k, bool row) {
        return std::string(1, kind_letter(k)) + "_" + (row ? row_name(k) : col_name(k));
    };
    constexpr int w = 12;
    std::ostringstream os;
    os << "Strip multiplication table (row ∘ column: column acts first)\n";
    os << std::setw(w) << "";
    for (Kind c : all_kinds) os << std::setw(w) << header(c, false);
    os << "\n";
    for (Kind r : all_kinds) {
        os << std::setw(w) << header(r, true);
        for (Kind c : all_kinds) {
            // The result parameter is linear in the two inputs.
            StripIsometry e1 = fn(make(r, 1), make(c, 0));
            StripIsometry e2 = fn(make(r, 0), make(c, 1));
            std::string cell = std::string(1, kind_letter(e1.kind())) + "(" +
                               affine(e1.param(), row_name(r), e2.param(), col_name(c)) + ")";
            os << std::setw(w) << cell;
        }
        os << "\n";
    }
    os << "\nCompact table\n" << std::setw(4) << "";
    for (Kind c : all_kinds) os << std::setw(4) << kind_letter(c);
    os << "\n";
    for (Kind r : all_kinds) {
        os << std::setw(4) << kind_letter(r);
        for (Kind c : all_kinds) os << std::setw(4) << kind_letter(fn(make(r, 0), make(c, 0)).kind());
        os << "\n";
    }
    return os.str();
}

}  // namespace frieze
