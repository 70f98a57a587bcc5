#include "rightcay/multable.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rightcay::algebra {

namespace {

void check_associativity(const MulTable& s) {
    const int n = s.order;
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (s.at(s.at(a, b), c) != s.at(a, s.at(b, c)))
                        throw std::invalid_argument("multiplication table is not associative");
        return;
    }
    std::mt19937 rng(0x5eed);
    for (int i = 0; i < 1000; ++i) {
        int a = static_cast<int>(rng() % n);
        int b = static_cast<int>(rng() % n);
        int c = static_cast<int>(rng() % n);
        if (s.at(s.at(a, b), c) != s.at(a, s.at(b, c)))
            throw std::invalid_argument("multiplication table is not associative");
    }
}

std::optional<int> find_identity(const MulTable& s) {
    for (int e = 0; e < s.order; ++e) {
        bool ok = true;
        for (int x = 0; x < s.order && ok; ++x)
            ok = s.at(e, x) == x && s.at(x, e) == x;
        if (ok) return e;
    }
    return std::nullopt;
}

// Permutations of {0..n-1} in lexicographic order; composition is
// "apply p, then q", which matches the right action used throughout.
std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool perm_even(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0;
}

std::string perm_name(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    std::ostringstream os;
    bool trivial = true;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        trivial = false;
        os << '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << ' ';
            os << j;
            first = false;
            j = static_cast<size_t>(p[j]);
        }
        os << ')';
    }
    return trivial ? "e" : os.str();
}

}  // namespace

bool MulTable::is_group() const {
    if (!identity) return false;
    const int e = *identity;
    for (int a = 0; a < order; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < order && !has_inverse; ++b)
            has_inverse = at(a, b) == e && at(b, a) == e;
        if (!has_inverse) return false;
    }
    return true;
}

GeneratingSet make_generating_set(const MulTable& s, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) throw std::invalid_argument("generating set must be non-empty");
    for (int x : elements)
        if (x < 0 || x >= s.order) throw std::invalid_argument("generator index out of range");
    return GeneratingSet{std::move(elements)};
}

MulTable make_table(int order, std::vector<int> table, std::vector<std::string> names) {
    if (order <= 0) throw std::invalid_argument("order must be positive");
    if (table.size() != static_cast<size_t>(order) * order)
        throw std::invalid_argument("table size does not match order");
    for (int x : table)
        if (x < 0 || x >= order) throw std::invalid_argument("table entry out of range");
    if (names.empty()) {
        names.resize(static_cast<size_t>(order));
        for (int i = 0; i < order; ++i) names[static_cast<size_t>(i)] = std::to_string(i);
    }
    MulTable s{order, std::move(table), std::move(names), std::nullopt};
    check_associativity(s);
    s.identity = find_identity(s);
    return s;
}

MulTable make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("make_cyclic: n must be >= 1");
    std::vector<int> tab(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tab[static_cast<size_t>(i) * n + j] = (i + j) % n;
    return make_table(n, std::move(tab));
}

MulTable make_dihedral(int n) {
    if (n < 2) throw std::invalid_argument("make_dihedral: n must be >= 2");
    // Element k is the rotation r^k, element n+k the reflection r^k s.
    const int order = 2 * n;
    auto idx = [n](int rot, int flip) { return ((rot % n) + n) % n + n * flip; };
    std::vector<int> tab(static_cast<size_t>(order) * order);
    std::vector<std::string> names(static_cast<size_t>(order));
    for (int a = 0; a < order; ++a) {
        int ra = a % n, fa = a / n;
        names[static_cast<size_t>(a)] = (fa ? "r" + std::to_string(ra) + "s" : "r" + std::to_string(ra));
        for (int b = 0; b < order; ++b) {
            int rb = b % n, fb = b / n;
            int rot = fa == 0 ? ra + rb : ra - rb;
            tab[static_cast<size_t>(a) * order + b] = idx(rot, fa ^ fb);
        }
    }
    names[0] = "e";
    return make_table(order, std::move(tab), std::move(names));
}

namespace {

MulTable group_from_permutations(const std::vector<std::vector<int>>& perms) {
    const int n = static_cast<int>(perms.size());
    std::vector<int> tab(static_cast<size_t>(n) * n);
    std::vector<std::string> names(static_cast<size_t>(n));
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[perms[static_cast<size_t>(i)]] = i;
    const size_t deg = perms[0].size();
    for (int i = 0; i < n; ++i) {
        names[static_cast<size_t>(i)] = perm_name(perms[static_cast<size_t>(i)]);
        for (int j = 0; j < n; ++j) {
            std::vector<int> comp(deg);
            for (size_t x = 0; x < deg; ++x)
                comp[x] = perms[static_cast<size_t>(j)][static_cast<size_t>(perms[static_cast<size_t>(i)][x])];
            tab[static_cast<size_t>(i) * n + j] = index.at(comp);
        }
    }
    return make_table(n, std::move(tab), std::move(names));
}

}  // namespace

MulTable make_symmetric(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("make_symmetric: need 1 <= n <= 5");
    return group_from_permutations(all_permutations(n));
}

MulTable make_alternating(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("make_alternating: need 1 <= n <= 5");
    std::vector<std::vector<int>> evens;
    for (auto& p : all_permutations(n))
        if (perm_even(p)) evens.push_back(p);
    return group_from_permutations(evens);
}

MulTable make_right_zero(int r) {
    if (r < 1) throw std::invalid_argument("make_right_zero: r must be >= 1");
    std::vector<int> tab(static_cast<size_t>(r) * r);
    std::vector<std::string> names(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        names[static_cast<size_t>(i)] = "r" + std::to_string(i + 1);
        for (int j = 0; j < r; ++j) tab[static_cast<size_t>(i) * r + j] = j;
    }
    return make_table(r, std::move(tab), std::move(names));
}

MulTable make_left_zero(int r) {
    if (r < 1) throw std::invalid_argument("make_left_zero: r must be >= 1");
    std::vector<int> tab(static_cast<size_t>(r) * r);
    std::vector<std::string> names(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        names[static_cast<size_t>(i)] = "l" + std::to_string(i + 1);
        for (int j = 0; j < r; ++j) tab[static_cast<size_t>(i) * r + j] = i;
    }
    return make_table(r, std::move(tab), std::move(names));
}

MulTable direct_product(const MulTable& a, const MulTable& b) {
    const int n = a.order * b.order;
    std::vector<int> tab(static_cast<size_t>(n) * n);
    std::vector<std::string> names(static_cast<size_t>(n));
    auto idx = [&](int i, int j) { return i * b.order + j; };
    for (int i1 = 0; i1 < a.order; ++i1)
        for (int j1 = 0; j1 < b.order; ++j1) {
            names[static_cast<size_t>(idx(i1, j1))] =
                "(" + a.names[static_cast<size_t>(i1)] + "," + b.names[static_cast<size_t>(j1)] + ")";
            for (int i2 = 0; i2 < a.order; ++i2)
                for (int j2 = 0; j2 < b.order; ++j2)
                    tab[static_cast<size_t>(idx(i1, j1)) * n + idx(i2, j2)] =
                        idx(a.at(i1, i2), b.at(j1, j2));
        }
    MulTable s{n, std::move(tab), std::move(names), std::nullopt};
    check_associativity(s);
    if (a.identity && b.identity) s.identity = idx(*a.identity, *b.identity);
    return s;
}

int element_order(const MulTable& s, int x) {
    if (!s.is_group()) throw std::invalid_argument("element_order requires a group");
    const int e = *s.identity;
    int p = x, k = 1;
    while (p != e) {
        p = s.at(p, x);
        if (++k > s.order) throw std::logic_error("element order exceeds group order");
    }
    return k;
}

std::vector<int> closure(const MulTable& s, const std::vector<int>& elements) {
    std::vector<char> in(static_cast<size_t>(s.order), 0);
    std::vector<int> out;
    auto add = [&](int y) {
        if (!in[static_cast<size_t>(y)]) {
            in[static_cast<size_t>(y)] = 1;
            out.push_back(y);
        }
    };
    for (int x : elements) add(x);
    // products of nonempty generator words: every unordered index pair is
    // processed in both orders once the later element is reached
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            add(s.at(out[i], out[j]));
            add(s.at(out[j], out[i]));
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool generates(const MulTable& s, const GeneratingSet& c) {
    return static_cast<int>(closure(s, c.elements).size()) == s.order;
}

namespace {

void minimal_sets_rec(const MulTable& s, std::vector<int>& current, int start,
                      const std::vector<int>& current_closure,
                      std::vector<GeneratingSet>& out) {
    if (static_cast<int>(current_closure.size()) == s.order) {
        // candidate: verify inclusion minimality
        for (size_t drop = 0; drop < current.size(); ++drop) {
            std::vector<int> sub;
            for (size_t i = 0; i < current.size(); ++i)
                if (i != drop) sub.push_back(current[i]);
            if (sub.empty()) continue;  // the empty set never generates
            if (static_cast<int>(closure(s, sub).size()) == s.order) return;
        }
        out.push_back(GeneratingSet{current});
        return;
    }
    std::vector<char> in_closure(static_cast<size_t>(s.order), 0);
    for (int x : current_closure) in_closure[static_cast<size_t>(x)] = 1;
    for (int x = start; x < s.order; ++x) {
        if (in_closure[static_cast<size_t>(x)]) continue;  // redundant extension can never be minimal
        current.push_back(x);
        std::vector<int> ext = current_closure;
        ext.push_back(x);
        minimal_sets_rec(s, current, x + 1, closure(s, ext), out);
        current.pop_back();
    }
}

}  // namespace

std::vector<GeneratingSet> minimal_generating_sets(const MulTable& s, int order_cap) {
    if (!s.is_group()) throw std::invalid_argument("minimal_generating_sets requires a group");
    if (s.order > order_cap) throw std::invalid_argument("group order exceeds enumeration cap");
    std::vector<GeneratingSet> out;
    std::vector<int> current;
    minimal_sets_rec(s, current, 0, {}, out);
    std::sort(out.begin(), out.end(),
              [](const GeneratingSet& a, const GeneratingSet& b) { return a.elements < b.elements; });
    return out;
}

bool is_involution(const MulTable& s, int x) {
    return s.identity && x != *s.identity && s.at(x, x) == *s.identity;
}

bool two_involutions_generate(const MulTable& s) {
    if (!s.is_group()) throw std::invalid_argument("two_involutions_generate requires a group");
    std::vector<int> inv;
    for (int x = 0; x < s.order; ++x)
        if (is_involution(s, x)) inv.push_back(x);
    for (size_t i = 0; i < inv.size(); ++i)
        for (size_t j = i + 1; j < inv.size(); ++j)
            if (static_cast<int>(closure(s, {inv[i], inv[j]}).size()) == s.order) return true;
    return false;
}

namespace {

MulTable table_for_atom(const std::string& atom) {
    if (atom.size() < 2) throw std::invalid_argument("bad group spec atom: " + atom);
    char kind = atom[0];
    int n = 0;
    for (size_t i = 1; i < atom.size(); ++i) {
        if (!isdigit(static_cast<unsigned char>(atom[i])))
            throw std::invalid_argument("bad group spec atom: " + atom);
        n = n * 10 + (atom[i] - '0');
    }
    switch (kind) {
        case 'Z': return make_cyclic(n);
        case 'D': return make_dihedral(n);
        case 'S': return make_symmetric(n);
        case 'A': return make_alternating(n);
        case 'R': return make_right_zero(n);
        default: throw std::invalid_argument("unknown group spec kind: " + atom);
    }
}

}  // namespace

GroupSpec parse_group_spec(const std::string& spec) {
    std::vector<std::string> atoms;
    std::string cur;
    for (char ch : spec) {
        if (ch == 'x') {
            if (cur.empty()) throw std::invalid_argument("bad group spec: " + spec);
            atoms.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (cur.empty()) throw std::invalid_argument("bad group spec: " + spec);
    atoms.push_back(cur);

    GroupSpec out;
    out.table = table_for_atom(atoms[0]);
    out.factor_sizes.push_back(out.table.order);
    std::string text = atoms[0];
    for (size_t i = 1; i < atoms.size(); ++i) {
        MulTable f = table_for_atom(atoms[i]);
        out.factor_sizes.push_back(f.order);
        out.table = direct_product(out.table, f);
        text += "x" + atoms[i];
    }
    out.text = text;
    return out;
}

std::vector<int> parse_generators(const GroupSpec& spec, const std::string& gens) {
    // split on commas that are not inside parentheses
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    for (char ch : gens) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            items.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) items.push_back(cur);
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses in generator list");

    std::set<int> result;
    for (const std::string& item : items) {
        if (item.empty()) throw std::invalid_argument("empty generator item");
        if (item[0] == '(') {
            if (item.back() != ')') throw std::invalid_argument("bad generator tuple: " + item);
            std::vector<std::string> parts;
            std::string p;
            for (size_t i = 1; i + 1 < item.size(); ++i) {
                if (item[i] == ',') {
                    parts.push_back(p);
                    p.clear();
                } else {
                    p.push_back(item[i]);
                }
            }
            parts.push_back(p);
            if (parts.size() != spec.factor_sizes.size())
                throw std::invalid_argument("generator tuple arity does not match group spec");
            // expand '*' wildcards over the corresponding factor
            std::vector<std::vector<int>> choices;
            for (size_t f = 0; f < parts.size(); ++f) {
                if (parts[f] == "*") {
                    std::vector<int> all(static_cast<size_t>(spec.factor_sizes[f]));
                    std::iota(all.begin(), all.end(), 0);
                    choices.push_back(std::move(all));
                } else {
                    int v = std::stoi(parts[f]);
                    if (v < 0 || v >= spec.factor_sizes[f])
                        throw std::invalid_argument("tuple index out of range in: " + item);
                    choices.push_back({v});
                }
            }
            std::vector<size_t> pos(choices.size(), 0);
            while (true) {
                int index = 0;
                for (size_t f = 0; f < choices.size(); ++f)
                    index = index * spec.factor_sizes[f] + choices[f][pos[f]];
                result.insert(index);
                size_t f = choices.size();
                while (f > 0 && ++pos[f - 1] == choices[f - 1].size()) pos[--f] = 0;
                if (f == 0) break;
            }
        } else {
            int v = std::stoi(item);
            if (v < 0 || v >= spec.table.order)
                throw std::invalid_argument("generator index out of range: " + item);
            result.insert(v);
        }
    }
    if (result.empty()) throw std::invalid_argument("empty generator list");
    return std::vector<int>(result.begin(), result.end());
}

}  // namespace rightcay::algebra
