#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "helly/errors.hpp"
#include "helly/geometry.hpp"

namespace helly {
namespace fm {

namespace {

// a . x <= b
struct Row {
    std::vector<Rat> a;
    Rat b;
};

// Canonical positive scaling (integral, content 1) so duplicates collapse.
void normalize(Row& row) {
    Int lcm(1);
    for (const Rat& v : row.a) lcm = lcm * v.get_den() / gcd(lcm, Int(v.get_den()));
    lcm = lcm * row.b.get_den() / gcd(lcm, Int(row.b.get_den()));
    Int content(0);
    auto fold = [&](const Rat& v) {
        Int scaled = Int(v.get_num()) * (lcm / v.get_den());
        content = gcd(content, scaled);
    };
    for (const Rat& v : row.a) fold(v);
    fold(row.b);
    if (content == 0) content = 1;
    const Rat scale = make_rat(lcm, content);
    for (Rat& v : row.a) v *= scale;
    row.b *= scale;
}

std::vector<Row> to_rows(int dim, std::span<const LinearConstraint> cons) {
    std::vector<Row> rows;
    for (const auto& c : cons) {
        if (static_cast<int>(c.normal.size()) != dim)
            throw std::invalid_argument("fm: constraint dimension mismatch");
        rows.push_back({c.normal, c.offset});
        if (c.rel == Rel::eq) {
            Row flip;
            flip.a.resize(c.normal.size());
            for (std::size_t i = 0; i < c.normal.size(); ++i) flip.a[i] = -c.normal[i];
            flip.b = -c.offset;
            rows.push_back(std::move(flip));
        }
    }
    return rows;
}

// Eliminates variable v; returns false on an immediate contradiction.
bool eliminate(std::vector<Row>& rows, std::size_t v) {
    std::vector<Row> pos, neg, rest;
    for (auto& row : rows) {
        if (row.a[v] > 0)
            pos.push_back(std::move(row));
        else if (row.a[v] < 0)
            neg.push_back(std::move(row));
        else
            rest.push_back(std::move(row));
    }
    std::map<std::vector<Rat>, Rat> best;  // tightest offset per coefficient vector
    auto add = [&](Row row) {
        normalize(row);
        auto [it, fresh] = best.emplace(row.a, row.b);
        if (!fresh && row.b < it->second) it->second = row.b;
    };
    for (auto& row : rest) add(std::move(row));
    for (const Row& p : pos)
        for (const Row& q : neg) {
            Row combo;
            combo.a.resize(p.a.size());
            const Rat cp = -q.a[v], cq = p.a[v];  // both positive
            for (std::size_t j = 0; j < p.a.size(); ++j) combo.a[j] = cp * p.a[j] + cq * q.a[j];
            combo.b = cp * p.b + cq * q.b;
            add(std::move(combo));
        }
    rows.clear();
    for (auto& [a, b] : best) {
        bool all_zero = std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
        if (all_zero) {
            if (b < 0) return false;
            continue;
        }
        rows.push_back({a, b});
        if (rows.size() > 200000)
            throw resource_error("fm: row blow-up beyond 200000; system too large for the oracle");
    }
    return true;
}

}  // namespace

bool feasible(int dim, std::span<const LinearConstraint> cons) {
    std::vector<Row> rows = to_rows(dim, cons);
    for (int v = 0; v < dim; ++v) {
        for (const Row& row : rows)
            if (std::all_of(row.a.begin(), row.a.end(), [](const Rat& x) { return x == 0; }) &&
                row.b < 0)
                return false;
        if (!eliminate(rows, static_cast<std::size_t>(v))) return false;
    }
    for (const Row& row : rows)
        if (row.b < 0) return false;
    return true;
}

Extremum max_coordinate(int dim, std::span<const LinearConstraint> cons, int coord) {
    if (coord < 0 || coord >= dim) throw std::invalid_argument("fm: coordinate out of range");
    std::vector<Row> rows = to_rows(dim, cons);
    for (int v = 0; v < dim; ++v) {
        if (v == coord) continue;
        if (!eliminate(rows, static_cast<std::size_t>(v))) return {};
    }
    // One-variable system: lower bounds, upper bounds, constants.
    bool has_upper = false, has_lower = false;
    Rat upper, lower;
    for (const Row& row : rows) {
        const Rat& a = row.a[static_cast<std::size_t>(coord)];
        if (a == 0) {
            if (row.b < 0) return {};
            continue;
        }
        const Rat bound = row.b / a;
        if (a > 0) {
            if (!has_upper || bound < upper) upper = bound;
            has_upper = true;
        } else {
            if (!has_lower || bound > lower) lower = bound;
            has_lower = true;
        }
    }
    if (has_upper && has_lower && lower > upper) return {};
    Extremum out;
    out.is_feasible = true;
    out.bounded = has_upper;
    if (has_upper) out.value = upper;
    return out;
}

}  // namespace fm
}  // namespace helly
