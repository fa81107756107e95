#include "qad/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

namespace qad {

namespace {

// Free-group word reduction: append letters one by one, cancelling x X pairs.
std::vector<long long> reduce_concat(const std::vector<long long>& a,
                                     const std::vector<long long>& b) {
    std::vector<long long> out = a;
    for (long long letter : b) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

}  // namespace

GroupOracle GroupOracle::trivial(Alphabet alphabet) {
    GroupOracle o;
    o.backend_ = Backend::trivial;
    o.alphabet_ = std::move(alphabet);
    for (const auto& s : o.alphabet_)
        o.generators_.emplace(s.id, GroupElement{});
    return o;
}

GroupOracle GroupOracle::finite_table(Alphabet alphabet, int size, int identity,
                                      std::vector<int> table, std::map<int, int> generator_map) {
    if (size < 1)
        throw std::invalid_argument("finite_table: need at least one element");
    if (static_cast<long long>(table.size()) != static_cast<long long>(size) * size)
        throw std::invalid_argument("finite_table: table size mismatch");
    if (identity < 0 || identity >= size)
        throw std::invalid_argument("finite_table: identity index out of range");
    for (int v : table)
        if (v < 0 || v >= size)
            throw std::invalid_argument("finite_table: entry out of range");
    auto cell = [&](int i, int j) { return table[static_cast<size_t>(i) * size + j]; };
    // Light group checks: identity behaves, rows and columns permute, every
    // element has an inverse.
    std::vector<int> inverse(static_cast<size_t>(size), -1);
    for (int i = 0; i < size; ++i) {
        if (cell(identity, i) != i || cell(i, identity) != i)
            throw std::invalid_argument("finite_table: identity row/column malformed");
        std::set<int> row, col;
        for (int j = 0; j < size; ++j) {
            row.insert(cell(i, j));
            col.insert(cell(j, i));
            if (cell(i, j) == identity)
                inverse[static_cast<size_t>(i)] = j;
        }
        if (static_cast<int>(row.size()) != size || static_cast<int>(col.size()) != size)
            throw std::invalid_argument("finite_table: row or column is not a permutation");
        if (inverse[static_cast<size_t>(i)] < 0)
            throw std::invalid_argument("finite_table: element without inverse");
    }

    GroupOracle o;
    o.backend_ = Backend::finite_table;
    o.alphabet_ = std::move(alphabet);
    o.table_size_ = size;
    o.table_identity_ = identity;
    o.table_ = std::move(table);
    o.table_inverse_ = std::move(inverse);
    for (const auto& s : o.alphabet_) {
        auto it = generator_map.find(s.id);
        if (it == generator_map.end())
            throw std::invalid_argument("finite_table: generator map misses symbol '" + s.display +
                                        "'");
        if (it->second < 0 || it->second >= size)
            throw std::invalid_argument("finite_table: generator image out of range");
        GroupElement g;
        g.canon_ = {it->second};
        o.generators_.emplace(s.id, std::move(g));
    }
    // Norms by BFS from the identity over right multiplication by generators.
    o.table_norms_.assign(static_cast<size_t>(size), -1);
    o.table_norms_[static_cast<size_t>(identity)] = 0;
    std::deque<int> queue{identity};
    while (!queue.empty()) {
        int g = queue.front();
        queue.pop_front();
        for (const auto& [sym, elem] : o.generators_) {
            int h = o.table_[static_cast<size_t>(g) * size + static_cast<size_t>(elem.canon_[0])];
            if (o.table_norms_[static_cast<size_t>(h)] < 0) {
                o.table_norms_[static_cast<size_t>(h)] = o.table_norms_[static_cast<size_t>(g)] + 1;
                queue.push_back(h);
            }
        }
    }
    return o;
}

GroupOracle GroupOracle::free_abelian(Alphabet alphabet, int dim,
                                      std::map<int, std::vector<long long>> generator_map) {
    if (dim < 1)
        throw std::invalid_argument("free_abelian: dimension must be positive");
    GroupOracle o;
    o.backend_ = Backend::free_abelian;
    o.alphabet_ = std::move(alphabet);
    o.dim_ = dim;
    for (const auto& s : o.alphabet_) {
        auto it = generator_map.find(s.id);
        if (it == generator_map.end())
            throw std::invalid_argument("free_abelian: generator map misses symbol '" + s.display +
                                        "'");
        if (static_cast<int>(it->second.size()) != dim)
            throw std::invalid_argument("free_abelian: generator image has wrong dimension");
        GroupElement g;
        g.canon_ = it->second;
        o.generators_.emplace(s.id, std::move(g));
    }
    // Standard map: every image is a signed unit vector and both signs of
    // every coordinate occur. Then the word metric is the L1 norm.
    std::set<std::pair<int, long long>> seen;
    bool all_units = true;
    for (const auto& [sym, g] : o.generators_) {
        int nonzero = -1;
        for (int i = 0; i < dim; ++i)
            if (g.canon_[static_cast<size_t>(i)] != 0) {
                if (nonzero >= 0 || std::llabs(g.canon_[static_cast<size_t>(i)]) != 1) {
                    nonzero = -2;
                    break;
                }
                nonzero = i;
            }
        if (nonzero < 0) {
            all_units = false;
            break;
        }
        seen.emplace(nonzero, g.canon_[static_cast<size_t>(nonzero)]);
    }
    o.standard_map_ = all_units && static_cast<int>(seen.size()) == 2 * dim;
    return o;
}

GroupOracle GroupOracle::free_group(Alphabet alphabet, int rank,
                                    std::map<int, std::vector<int>> generator_map) {
    if (rank < 1)
        throw std::invalid_argument("free_group: rank must be positive");
    GroupOracle o;
    o.backend_ = Backend::free_group;
    o.alphabet_ = std::move(alphabet);
    o.dim_ = rank;
    for (const auto& s : o.alphabet_) {
        auto it = generator_map.find(s.id);
        if (it == generator_map.end())
            throw std::invalid_argument("free_group: generator map misses symbol '" + s.display +
                                        "'");
        std::vector<long long> word;
        for (int letter : it->second) {
            if (letter == 0 || std::abs(letter) > rank)
                throw std::invalid_argument("free_group: letter out of range in generator image");
            if (!word.empty() && word.back() == -letter)
                word.pop_back();
            else
                word.push_back(letter);
        }
        GroupElement g;
        g.canon_ = std::move(word);
        o.generators_.emplace(s.id, std::move(g));
    }
    // Standard map: single-letter images covering every letter and inverse.
    std::set<long long> covered;
    bool singles = true;
    for (const auto& [sym, g] : o.generators_) {
        if (g.canon_.size() != 1) {
            singles = false;
            break;
        }
        covered.insert(g.canon_[0]);
    }
    o.standard_map_ = singles && static_cast<int>(covered.size()) == 2 * rank;
    return o;
}

GroupElement GroupOracle::identity() const {
    GroupElement g;
    if (backend_ == Backend::finite_table)
        g.canon_ = {table_identity_};
    else if (backend_ == Backend::free_abelian)
        g.canon_.assign(static_cast<size_t>(dim_), 0);
    return g;  // trivial and free_group use the empty vector
}

GroupElement GroupOracle::generator(int sym) const {
    auto it = generators_.find(sym);
    if (it == generators_.end())
        throw std::invalid_argument("oracle: symbol id " + std::to_string(sym) +
                                    " has no generator image");
    return it->second;
}

std::vector<long long> GroupOracle::generator_image(int sym) const {
    return generator(sym).canon_;
}

GroupElement GroupOracle::multiply(const GroupElement& g, const GroupElement& h) const {
    GroupElement out;
    switch (backend_) {
        case Backend::trivial:
            break;
        case Backend::finite_table:
            out.canon_ = {table_[static_cast<size_t>(g.canon_.at(0)) * table_size_ +
                                 static_cast<size_t>(h.canon_.at(0))]};
            break;
        case Backend::free_abelian: {
            out.canon_.resize(static_cast<size_t>(dim_));
            for (int i = 0; i < dim_; ++i)
                out.canon_[static_cast<size_t>(i)] =
                    g.canon_.at(static_cast<size_t>(i)) + h.canon_.at(static_cast<size_t>(i));
            break;
        }
        case Backend::free_group:
            out.canon_ = reduce_concat(g.canon_, h.canon_);
            break;
    }
    return out;
}

GroupElement GroupOracle::inverse(const GroupElement& g) const {
    GroupElement out;
    switch (backend_) {
        case Backend::trivial:
            break;
        case Backend::finite_table:
            out.canon_ = {table_inverse_.at(static_cast<size_t>(g.canon_.at(0)))};
            break;
        case Backend::free_abelian: {
            out.canon_.reserve(g.canon_.size());
            for (long long v : g.canon_)
                out.canon_.push_back(-v);
            break;
        }
        case Backend::free_group: {
            out.canon_.reserve(g.canon_.size());
            for (auto it = g.canon_.rbegin(); it != g.canon_.rend(); ++it)
                out.canon_.push_back(-*it);
            break;
        }
    }
    return out;
}

GroupElement GroupOracle::evaluate(const Word& w) const {
    GroupElement acc = identity();
    for (int sym : w)
        acc = multiply(acc, generator(sym));
    return acc;
}

bool GroupOracle::equivalent(const Word& u, const Word& v) const {
    return evaluate(u) == evaluate(v);
}

bool GroupOracle::is_identity(const GroupElement& g) const {
    return g == identity();
}

int GroupOracle::norm(const GroupElement& g) const {
    switch (backend_) {
        case Backend::trivial:
            return 0;
        case Backend::finite_table: {
            int n = table_norms_.at(static_cast<size_t>(g.canon_.at(0)));
            if (n < 0)
                throw std::runtime_error("oracle: element not reachable from generators");
            return n;
        }
        case Backend::free_abelian:
            if (standard_map_) {
                long long sum = 0;
                for (long long v : g.canon_)
                    sum += std::llabs(v);
                return static_cast<int>(sum);
            }
            return bfs_norm(g);
        case Backend::free_group:
            if (standard_map_)
                return static_cast<int>(g.canon_.size());
            return bfs_norm(g);
    }
    return 0;
}

int GroupOracle::bfs_norm(const GroupElement& g) const {
    if (g == identity())
        return 0;
    std::set<GroupElement> seen{identity()};
    std::deque<std::pair<GroupElement, int>> queue{{identity(), 0}};
    long long budget = caps_.norm_search_cap;
    while (!queue.empty()) {
        auto [cur, depth] = queue.front();
        queue.pop_front();
        for (const auto& [sym, gen] : generators_) {
            GroupElement next = multiply(cur, gen);
            if (!seen.insert(next).second)
                continue;
            if (next == g)
                return depth + 1;
            if (--budget <= 0)
                throw std::runtime_error(
                    "oracle: norm search cap exceeded (non-standard generator map)");
            queue.emplace_back(std::move(next), depth + 1);
        }
    }
    throw std::runtime_error("oracle: element not reachable from generators");
}

std::vector<GroupElement> GroupOracle::ball(int n) const {
    if (n < 0)
        throw std::invalid_argument("ball: negative radius");
    if (n > caps_.max_ball_radius)
        throw std::runtime_error("ball: radius exceeds cap " +
                                 std::to_string(caps_.max_ball_radius));
    std::set<GroupElement> seen{identity()};
    std::deque<std::pair<GroupElement, int>> queue{{identity(), 0}};
    while (!queue.empty()) {
        auto [cur, depth] = queue.front();
        queue.pop_front();
        if (depth == n)
            continue;
        for (const auto& [sym, gen] : generators_) {
            GroupElement next = multiply(cur, gen);
            if (seen.insert(next).second) {
                if (static_cast<long long>(seen.size()) > caps_.max_ball_size)
                    throw std::runtime_error("ball: size exceeds cap");
                queue.emplace_back(std::move(next), depth + 1);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

int GroupOracle::distance(const Word& u, const Word& v) const {
    return norm(multiply(inverse(evaluate(u)), evaluate(v)));
}

std::string GroupOracle::element_str(const GroupElement& g) const {
    if (is_identity(g))
        return "e";
    switch (backend_) {
        case Backend::trivial:
            return "e";
        case Backend::finite_table:
            return "[" + std::to_string(g.canon_.at(0)) + "]";
        case Backend::free_abelian: {
            std::string out = "(";
            for (size_t i = 0; i < g.canon_.size(); ++i) {
                if (i)
                    out += ",";
                out += std::to_string(g.canon_[i]);
            }
            return out + ")";
        }
        case Backend::free_group: {
            if (g.canon_.empty())
                return "e";
            std::string out;
            for (size_t i = 0; i < g.canon_.size(); ++i) {
                if (i)
                    out += ".";
                long long v = g.canon_[i];
                out += (v > 0 ? "x" : "X") + std::to_string(std::llabs(v));
            }
            return out;
        }
    }
    return "?";
}

}  // namespace qad
