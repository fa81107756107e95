#include "qad/format.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

namespace qad {

FormatError::FormatError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

template <typename T>
T parse_num(const std::string& tok, int line, const std::string& what) {
    T value{};
    const char* end = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || p != end)
        throw FormatError(line, what + ": expected integer, got '" + tok + "'");
    return value;
}

// Line reader: skips blanks and '#' comments, supports one line of pushback.
class Cursor {
  public:
    explicit Cursor(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& tokens) {
        if (pending_) {
            tokens = std::move(*pending_);
            pending_.reset();
            return true;
        }
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_no_;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            std::istringstream split(raw);
            tokens.assign(std::istream_iterator<std::string>(split),
                          std::istream_iterator<std::string>());
            if (!tokens.empty())
                return true;
        }
        return false;
    }

    void push_back(std::vector<std::string> tokens) { pending_ = std::move(tokens); }

    int line() const { return line_no_; }

  private:
    std::istream& in_;
    int line_no_ = 0;
    std::optional<std::vector<std::string>> pending_;
};

struct AutomatonLines {
    int num_states = -1;
    int initial = -1;
    std::vector<int> finals;
    bool saw_finals = false;
};

// Handles the states/initial/finals lines shared by every automaton block.
// Returns true when the line was one of them.
bool consume_common(AutomatonLines& acc, const std::vector<std::string>& t, int line) {
    const std::string& key = t[0];
    if (key == "states") {
        if (acc.num_states >= 0)
            throw FormatError(line, "duplicate states line");
        if (t.size() != 2)
            throw FormatError(line, "states: expected one count");
        acc.num_states = parse_num<int>(t[1], line, "states");
        return true;
    }
    if (key == "initial") {
        if (acc.initial >= 0)
            throw FormatError(line, "duplicate initial line");
        if (t.size() != 2)
            throw FormatError(line, "initial: expected one state id");
        acc.initial = parse_num<int>(t[1], line, "initial");
        return true;
    }
    if (key == "finals") {
        if (acc.saw_finals)
            throw FormatError(line, "duplicate finals line");
        acc.saw_finals = true;
        for (size_t i = 1; i < t.size(); ++i)
            acc.finals.push_back(parse_num<int>(t[i], line, "finals"));
        return true;
    }
    return false;
}

void require_header(const AutomatonLines& acc, int line, const std::string& block) {
    if (acc.num_states < 0)
        throw FormatError(line, block + ": missing states line");
    if (acc.initial < 0)
        throw FormatError(line, block + ": missing initial line");
}

Nfa parse_automaton_block(Cursor& cur, const Alphabet& alphabet, const std::string& block) {
    AutomatonLines acc;
    std::vector<Transition> edges;
    std::vector<std::string> t;
    while (cur.next(t)) {
        if (t[0] == "end") {
            require_header(acc, cur.line(), block);
            try {
                return Nfa(alphabet, acc.num_states, acc.initial, acc.finals, edges);
            } catch (const std::invalid_argument& e) {
                throw FormatError(cur.line(), block + ": " + e.what());
            }
        }
        if (consume_common(acc, t, cur.line()))
            continue;
        if (t[0] == "edge") {
            if (t.size() != 4)
                throw FormatError(cur.line(), "edge: expected 'edge FROM SYMBOL TO'");
            auto sym = alphabet.find(t[2]);
            if (!sym)
                throw FormatError(cur.line(), "edge: unknown symbol '" + t[2] + "'");
            edges.push_back({parse_num<int>(t[1], cur.line(), "edge"), *sym,
                             parse_num<int>(t[3], cur.line(), "edge")});
            continue;
        }
        throw FormatError(cur.line(), block + ": unexpected line '" + t[0] + "'");
    }
    throw FormatError(cur.line(), block + ": missing end");
}

NivatBimorphism parse_nivat_relation(Cursor& cur, const Alphabet& outer) {
    AutomatonLines acc;
    std::vector<std::string> inner_displays;
    std::vector<TapeLetter> letters;
    // Edges may reference letters declared later in the block; resolve at end.
    struct RawEdge {
        int from;
        std::string sym;
        int to;
        int line;
    };
    std::vector<RawEdge> raw_edges;
    std::vector<std::string> t;
    while (cur.next(t)) {
        if (t[0] == "end") {
            require_header(acc, cur.line(), "relation");
            Alphabet inner;
            try {
                inner = Alphabet(inner_displays);
            } catch (const std::invalid_argument& e) {
                throw FormatError(cur.line(), std::string("relation letters: ") + e.what());
            }
            std::vector<Transition> edges;
            for (const auto& e : raw_edges) {
                auto sym = inner.find(e.sym);
                if (!sym)
                    throw FormatError(e.line, "edge: unknown letter '" + e.sym + "'");
                edges.push_back({e.from, *sym, e.to});
            }
            try {
                return NivatBimorphism(inner, outer, letters,
                                       Nfa(inner, acc.num_states, acc.initial, acc.finals, edges));
            } catch (const std::invalid_argument& e) {
                throw FormatError(cur.line(), std::string("relation: ") + e.what());
            }
        }
        if (consume_common(acc, t, cur.line()))
            continue;
        if (t[0] == "letter") {
            if (t.size() != 4)
                throw FormatError(cur.line(), "letter: expected 'letter NAME first|second PAYLOAD'");
            Tape tape;
            if (t[2] == "first")
                tape = Tape::first;
            else if (t[2] == "second")
                tape = Tape::second;
            else
                throw FormatError(cur.line(), "letter: tape must be 'first' or 'second'");
            auto payload = outer.find(t[3]);
            if (!payload)
                throw FormatError(cur.line(), "letter: unknown payload symbol '" + t[3] + "'");
            int id = static_cast<int>(inner_displays.size());
            inner_displays.push_back(t[1]);
            letters.push_back({id, tape, *payload});
            continue;
        }
        if (t[0] == "edge") {
            if (t.size() != 4)
                throw FormatError(cur.line(), "edge: expected 'edge FROM LETTER TO'");
            raw_edges.push_back({parse_num<int>(t[1], cur.line(), "edge"), t[2],
                                 parse_num<int>(t[3], cur.line(), "edge"), cur.line()});
            continue;
        }
        throw FormatError(cur.line(), "relation: unexpected line '" + t[0] + "'");
    }
    throw FormatError(cur.line(), "relation: missing end");
}

NivatBimorphism parse_pairs_relation(Cursor& cur, const Alphabet& outer) {
    AutomatonLines acc;
    std::vector<PairTransition> pairs;
    std::vector<std::string> t;
    auto tape_symbol = [&](const std::string& tok, int line) -> std::optional<int> {
        if (tok == "-")
            return std::nullopt;
        auto sym = outer.find(tok);
        if (!sym)
            throw FormatError(line, "pair: unknown symbol '" + tok + "'");
        return sym;
    };
    while (cur.next(t)) {
        if (t[0] == "end") {
            require_header(acc, cur.line(), "relation");
            try {
                return NivatBimorphism::from_pair_transitions(outer, acc.num_states, acc.initial,
                                                              acc.finals, pairs);
            } catch (const std::invalid_argument& e) {
                throw FormatError(cur.line(), std::string("relation: ") + e.what());
            }
        }
        if (consume_common(acc, t, cur.line()))
            continue;
        if (t[0] == "pair") {
            if (t.size() != 5)
                throw FormatError(cur.line(), "pair: expected 'pair FROM U|- V|- TO'");
            pairs.push_back({parse_num<int>(t[1], cur.line(), "pair"),
                             tape_symbol(t[2], cur.line()), tape_symbol(t[3], cur.line()),
                             parse_num<int>(t[4], cur.line(), "pair")});
            continue;
        }
        throw FormatError(cur.line(), "relation: unexpected line '" + t[0] + "'");
    }
    throw FormatError(cur.line(), "relation: missing end");
}

GroupOracle parse_oracle(Cursor& cur, const Alphabet& alphabet,
                         const std::vector<std::string>& header, int header_line) {
    if (header.size() < 2)
        throw FormatError(header_line, "oracle: missing backend name");
    const std::string& backend = header[1];
    auto arg = [&](size_t i, const std::string& what) {
        if (header.size() <= i)
            throw FormatError(header_line, "oracle " + backend + ": missing " + what);
        return parse_num<int>(header[i], header_line, what);
    };

    // Collect the table/gen lines belonging to this oracle; anything else is
    // handed back to the caller.
    std::vector<std::vector<long long>> table_rows;
    std::map<std::string, std::pair<std::vector<long long>, int>> gens;
    std::vector<std::string> t;
    while (cur.next(t)) {
        if (t[0] == "table") {
            std::vector<long long> row;
            for (size_t i = 1; i < t.size(); ++i)
                row.push_back(parse_num<long long>(t[i], cur.line(), "table"));
            table_rows.push_back(std::move(row));
            continue;
        }
        if (t[0] == "gen") {
            if (t.size() < 2)
                throw FormatError(cur.line(), "gen: missing symbol name");
            if (!alphabet.find(t[1]))
                throw FormatError(cur.line(), "gen: unknown symbol '" + t[1] + "'");
            if (gens.count(t[1]))
                throw FormatError(cur.line(), "gen: duplicate for symbol '" + t[1] + "'");
            std::vector<long long> image;
            for (size_t i = 2; i < t.size(); ++i)
                image.push_back(parse_num<long long>(t[i], cur.line(), "gen"));
            gens.emplace(t[1], std::make_pair(std::move(image), cur.line()));
            continue;
        }
        cur.push_back(std::move(t));
        break;
    }

    auto image_of = [&](const Symbol& s, size_t want, const std::string& shape) {
        auto it = gens.find(s.display);
        if (it == gens.end())
            throw FormatError(header_line, "oracle: no gen line for symbol '" + s.display + "'");
        if (want != SIZE_MAX && it->second.first.size() != want)
            throw FormatError(it->second.second,
                              "gen " + s.display + ": expected " + shape);
        return it->second.first;
    };

    try {
        if (backend == "trivial") {
            if (!gens.empty())
                for (const auto& s : alphabet)
                    image_of(s, 0, "no payload for the trivial backend");
            return GroupOracle::trivial(alphabet);
        }
        if (backend == "finite_table") {
            int size = arg(2, "size");
            int identity = arg(3, "identity index");
            if (static_cast<int>(table_rows.size()) != size)
                throw FormatError(header_line, "oracle finite_table: expected " +
                                                   std::to_string(size) + " table rows, got " +
                                                   std::to_string(table_rows.size()));
            std::vector<int> table;
            for (const auto& row : table_rows) {
                if (static_cast<int>(row.size()) != size)
                    throw FormatError(header_line, "oracle finite_table: ragged table row");
                for (long long v : row)
                    table.push_back(static_cast<int>(v));
            }
            std::map<int, int> gen_map;
            for (const auto& s : alphabet)
                gen_map[s.id] = static_cast<int>(image_of(s, 1, "one element index")[0]);
            return GroupOracle::finite_table(alphabet, size, identity, table, gen_map);
        }
        if (backend == "free_abelian") {
            int dim = arg(2, "dimension");
            std::map<int, std::vector<long long>> gen_map;
            for (const auto& s : alphabet)
                gen_map[s.id] = image_of(s, static_cast<size_t>(dim),
                                         std::to_string(dim) + " coordinates");
            return GroupOracle::free_abelian(alphabet, dim, gen_map);
        }
        if (backend == "free_group") {
            int rank = arg(2, "rank");
            std::map<int, std::vector<int>> gen_map;
            for (const auto& s : alphabet) {
                std::vector<int> word;
                for (long long v : image_of(s, SIZE_MAX, ""))
                    word.push_back(static_cast<int>(v));
                gen_map[s.id] = std::move(word);
            }
            return GroupOracle::free_group(alphabet, rank, gen_map);
        }
    } catch (const std::invalid_argument& e) {
        throw FormatError(header_line, std::string("oracle: ") + e.what());
    }
    throw FormatError(header_line, "oracle: unknown backend '" + backend + "'");
}

void write_automaton(std::ostringstream& out, const Nfa& nfa) {
    out << "states " << nfa.num_states() << '\n';
    out << "initial " << nfa.initial() << '\n';
    out << "finals";
    for (int q : nfa.finals())
        out << ' ' << q;
    out << '\n';
    for (const auto& tr : nfa.transitions())
        out << "edge " << tr.from << ' ' << nfa.alphabet().at(tr.sym).display << ' ' << tr.to
            << '\n';
}

}  // namespace

QuasiAutomaticStructure parse_structure(std::istream& in) {
    Cursor cur(in);
    std::vector<std::string> t;

    if (!cur.next(t) || t[0] != "alphabet")
        throw FormatError(cur.line(), "expected alphabet line first");
    Alphabet alphabet;
    try {
        alphabet = Alphabet(std::vector<std::string>(t.begin() + 1, t.end()));
    } catch (const std::invalid_argument& e) {
        throw FormatError(cur.line(), std::string("alphabet: ") + e.what());
    }

    if (!cur.next(t) || t[0] != "oracle")
        throw FormatError(cur.line(), "expected oracle line after alphabet");
    GroupOracle oracle = parse_oracle(cur, alphabet, t, cur.line());

    if (!cur.next(t) || t[0] != "dictionary")
        throw FormatError(cur.line(), "expected dictionary block");
    Nfa dictionary = parse_automaton_block(cur, alphabet, "dictionary");

    std::map<int, NivatBimorphism> relations;
    while (cur.next(t)) {
        if (t[0] != "relation")
            throw FormatError(cur.line(), "unexpected line '" + t[0] + "' (expected relation)");
        if (t.size() != 3)
            throw FormatError(cur.line(), "relation: expected 'relation NAME nivat|pairs'");
        int key;
        if (t[1] == "eps") {
            key = kEpsilonRelation;
        } else {
            auto sym = alphabet.find(t[1]);
            if (!sym)
                throw FormatError(cur.line(), "relation: unknown name '" + t[1] + "'");
            key = *sym;
        }
        if (relations.count(key))
            throw FormatError(cur.line(), "relation: duplicate block for '" + t[1] + "'");
        int header_line = cur.line();
        if (t[2] == "nivat")
            relations.emplace(key, parse_nivat_relation(cur, alphabet));
        else if (t[2] == "pairs")
            relations.emplace(key, parse_pairs_relation(cur, alphabet));
        else
            throw FormatError(header_line, "relation: form must be 'nivat' or 'pairs'");
    }

    QuasiAutomaticStructure s{std::move(oracle), std::move(dictionary), std::move(relations)};
    try {
        s.check_well_formed();
    } catch (const std::invalid_argument& e) {
        throw FormatError(cur.line(), e.what());
    }
    return s;
}

QuasiAutomaticStructure parse_structure(const std::string& text) {
    std::istringstream in(text);
    return parse_structure(in);
}

QuasiAutomaticStructure load_structure(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return parse_structure(in);
}

std::string write_structure(const QuasiAutomaticStructure& s) {
    std::ostringstream out;
    const Alphabet& alphabet = s.dictionary.alphabet();
    out << "alphabet";
    for (const auto& sym : alphabet)
        out << ' ' << sym.display;
    out << '\n';

    switch (s.oracle.backend()) {
        case GroupOracle::Backend::trivial:
            out << "oracle trivial\n";
            break;
        case GroupOracle::Backend::finite_table: {
            int n = s.oracle.table_size();
            out << "oracle finite_table " << n << ' ' << s.oracle.table_identity() << '\n';
            for (int r = 0; r < n; ++r) {
                out << "table";
                for (int c = 0; c < n; ++c)
                    out << ' ' << s.oracle.table()[static_cast<size_t>(r) * n + c];
                out << '\n';
            }
            break;
        }
        case GroupOracle::Backend::free_abelian:
            out << "oracle free_abelian " << s.oracle.dimension() << '\n';
            break;
        case GroupOracle::Backend::free_group:
            out << "oracle free_group " << s.oracle.dimension() << '\n';
            break;
    }
    if (s.oracle.backend() != GroupOracle::Backend::trivial)
        for (const auto& sym : alphabet) {
            out << "gen " << sym.display;
            for (long long v : s.oracle.generator_image(sym.id))
                out << ' ' << v;
            out << '\n';
        }

    out << "dictionary\n";
    write_automaton(out, s.dictionary);
    out << "end\n";

    for (const auto& [key, rel] : s.relations) {
        out << "relation " << s.relation_name(key) << " nivat\n";
        for (const auto& letter : rel.letters())
            out << "letter " << rel.inner().at(letter.symbol).display << ' '
                << (letter.tape == Tape::first ? "first" : "second") << ' '
                << rel.outer().at(letter.payload).display << '\n';
        write_automaton(out, rel.h());
        out << "end\n";
    }
    return out.str();
}

void save_structure(const QuasiAutomaticStructure& s, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << write_structure(s);
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace qad
