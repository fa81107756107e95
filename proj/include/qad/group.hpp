// Group oracles: finitely generated groups queried through a generator map
// from the dictionary alphabet. Backends share one element representation
// (a canonical integer vector whose meaning is backend-private).
#ifndef QAD_GROUP_HPP
#define QAD_GROUP_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qad/alphabet.hpp"

namespace qad {

class GroupOracle;

// Canonical form of a group element. Ordered so elements can key std::map.
class GroupElement {
  public:
    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;

  private:
    friend class GroupOracle;
    std::vector<long long> canon_;
};

struct OracleCaps {
    int max_ball_radius = 32;
    long long max_ball_size = 1 << 20;
    // Node budget for the BFS fallback used when no closed-form norm applies.
    long long norm_search_cap = 1 << 17;
};

class GroupOracle {
  public:
    enum class Backend { trivial, finite_table, free_abelian, free_group };

    // Every generator maps to the neutral element.
    static GroupOracle trivial(Alphabet alphabet);
    // Multiplication table (row-major, size n*n of element indices).
    static GroupOracle finite_table(Alphabet alphabet, int size, int identity,
                                    std::vector<int> table, std::map<int, int> generator_map);
    // Z^dim; generator images are coordinate vectors.
    static GroupOracle free_abelian(Alphabet alphabet, int dim,
                                    std::map<int, std::vector<long long>> generator_map);
    // Free group of the given rank; images are reduced words over signed
    // letters +1..rank (generators) and -1..-rank (inverses).
    static GroupOracle free_group(Alphabet alphabet, int rank,
                                  std::map<int, std::vector<int>> generator_map);

    Backend backend() const { return backend_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const OracleCaps& caps() const { return caps_; }
    void set_caps(const OracleCaps& caps) { caps_ = caps; }

    GroupElement identity() const;
    GroupElement generator(int sym) const;
    GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
    GroupElement inverse(const GroupElement& g) const;
    // Image of a word under the generator map; empty word gives the identity.
    GroupElement evaluate(const Word& w) const;
    bool equivalent(const Word& u, const Word& v) const;
    bool is_identity(const GroupElement& g) const;

    // Length of a shortest alphabet word representing g. Closed forms apply
    // when the generator map is standard; otherwise a capped breadth-first
    // search is used and may throw when the cap is exhausted.
    int norm(const GroupElement& g) const;
    // All elements of norm <= n, sorted canonically. Throws when n or the
    // resulting ball exceeds the configured caps.
    std::vector<GroupElement> ball(int n) const;
    // Word metric between the elements u and v represent.
    int distance(const Word& u, const Word& v) const;

    std::string element_str(const GroupElement& g) const;

    // Raw constructor data, exposed so structures can be written back out.
    int table_size() const { return table_size_; }
    int table_identity() const { return table_identity_; }
    const std::vector<int>& table() const { return table_; }
    // Dimension for free_abelian, rank for free_group, 0 otherwise.
    int dimension() const { return dim_; }
    // Backend-raw image of a generator: {index} for finite_table, the
    // coordinate vector for free_abelian, the signed word for free_group,
    // empty for trivial.
    std::vector<long long> generator_image(int sym) const;

  private:
    GroupOracle() = default;

    Backend backend_ = Backend::trivial;
    Alphabet alphabet_;
    OracleCaps caps_;
    std::map<int, GroupElement> generators_;

    // finite_table data
    int table_size_ = 0;
    int table_identity_ = 0;
    std::vector<int> table_;
    std::vector<int> table_inverse_;
    std::vector<int> table_norms_;

    // free_abelian / free_group data
    int dim_ = 0;
    bool standard_map_ = false;

    int bfs_norm(const GroupElement& g) const;
};

}  // namespace qad

#endif
