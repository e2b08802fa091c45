#include "loc/builders.hpp"
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <regex>

namespace loc {

std::vector<int> parse_permutation(const std::string& cycles, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < cycles.size() && std::isspace((unsigned char)cycles[i])) i++;
    };
    skip_ws();
    if (i >= cycles.size() || cycles.compare(i, std::string::npos, "e") == 0 ||
        cycles.compare(i, std::string::npos, "id") == 0)
        return img;
    std::vector<char> used(degree, 0);
    while (i < cycles.size()) {
        skip_ws();
        if (i >= cycles.size()) break;
        if (cycles[i] != '(') throw SpecError("bad cycle notation: " + cycles);
        i++;
        std::vector<int> cyc;
        while (true) {
            while (i < cycles.size() &&
                   (std::isspace((unsigned char)cycles[i]) || cycles[i] == ','))
                i++;
            if (i >= cycles.size()) throw SpecError("unterminated cycle: " + cycles);
            if (cycles[i] == ')') {
                i++;
                break;
            }
            if (!std::isdigit((unsigned char)cycles[i]))
                throw SpecError("bad cycle notation: " + cycles);
            int num = 0;
            while (i < cycles.size() && std::isdigit((unsigned char)cycles[i]))
                num = num * 10 + (cycles[i++] - '0');
            if (num < 1 || num > degree)
                throw SpecError("point " + std::to_string(num) + " out of range in " + cycles);
            if (used[num - 1]) throw SpecError("repeated point in " + cycles);
            used[num - 1] = 1;
            cyc.push_back(num - 1);
        }
        for (size_t k = 0; k < cyc.size(); k++) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
        skip_ws();
    }
    return img;
}

std::string cycle_label(const std::vector<int>& img) {
    std::string out;
    std::vector<char> vis(img.size(), 0);
    for (int st = 0; st < (int)img.size(); st++) {
        if (vis[st]) continue;
        if (img[st] == st) {
            vis[st] = 1;
            continue;
        }
        out += "(";
        int x = st;
        bool first = true;
        while (!vis[x]) {
            vis[x] = 1;
            if (!first) out += " ";
            out += std::to_string(x + 1);
            first = false;
            x = img[x];
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

static std::vector<int> compose_perms(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> r(f.size());
    for (size_t x = 0; x < f.size(); x++) r[x] = g[f[x]];
    return r;
}

GroupPtr perm_group(const std::string& name, int degree,
                    const std::vector<std::vector<int>>& gens) {
    for (const auto& g : gens) {
        if ((int)g.size() != degree) throw SpecError("generator degree mismatch");
        std::vector<char> seen(degree, 0);
        for (int x : g) {
            if (x < 0 || x >= degree || seen[x]++)
                throw SpecError("generator is not a permutation");
        }
    }
    std::vector<int> ident(degree);
    std::iota(ident.begin(), ident.end(), 0);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems;
    index[ident] = 0;
    elems.push_back(ident);
    for (size_t qi = 0; qi < elems.size(); qi++) {
        for (const auto& g : gens) {
            auto w = compose_perms(elems[qi], g);
            if (!index.count(w)) {
                if ((int)elems.size() >= kMaxGroupOrder)
                    throw SpecError("group too large: order exceeds " +
                                    std::to_string(kMaxGroupOrder));
                index[w] = (int)elems.size();
                elems.push_back(w);
            }
        }
    }
    int n = (int)elems.size();
    FiniteGroup grp;
    grp.n = n;
    grp.name = name;
    grp.perm_degree = degree;
    grp.perms = elems;
    grp.table.resize(n * n);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            grp.table[a * n + b] = index.at(compose_perms(elems[a], elems[b]));
    grp.labels.resize(n);
    for (int a = 0; a < n; a++) grp.labels[a] = cycle_label(elems[a]);
    return make_group(std::move(grp));
}

GroupPtr perm_group(const std::string& name, int degree,
                    const std::vector<std::string>& gen_cycles) {
    std::vector<std::vector<int>> gens;
    gens.reserve(gen_cycles.size());
    for (const auto& s : gen_cycles) gens.push_back(parse_permutation(s, degree));
    return perm_group(name, degree, gens);
}

GroupPtr symmetric_group(int n) {
    if (n < 1) throw SpecError("symmetric group needs n >= 1");
    std::vector<std::vector<int>> gens;
    if (n >= 2) {
        std::vector<int> t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        gens.push_back(t);
    }
    if (n >= 3) {
        std::vector<int> c(n);
        for (int i = 0; i < n; i++) c[i] = (i + 1) % n;
        gens.push_back(c);
    }
    return perm_group("S" + std::to_string(n), n, gens);
}

GroupPtr cyclic_group(int n) {
    if (n < 1) throw SpecError("cyclic group needs n >= 1");
    if (n > kMaxGroupOrder)
        throw SpecError("group too large: order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxGroupOrder));
    std::vector<std::vector<int>> gens;
    if (n >= 2) {
        std::vector<int> c(n);
        for (int i = 0; i < n; i++) c[i] = (i + 1) % n;
        gens.push_back(c);
    }
    return perm_group("C" + std::to_string(n), n, gens);
}

GroupPtr dihedral_group(int n) {
    if (n < 3) throw SpecError("dihedral group needs n >= 3");
    std::vector<int> r(n), s(n);
    for (int i = 0; i < n; i++) {
        r[i] = (i + 1) % n;
        s[i] = (n - i) % n;
    }
    return perm_group("D" + std::to_string(2 * n), n, {r, s});
}

GroupPtr alternating4() {
    return perm_group("A4", 4, std::vector<std::string>{"(1 2 3)", "(1 2)(3 4)"});
}

GroupPtr sl2_3() {
    // Vectors of F3^2 minus zero, acted on the right by matrices.
    std::vector<std::array<int, 2>> vecs;
    for (int a = 0; a < 3; a++)
        for (int b = 0; b < 3; b++)
            if (a || b) vecs.push_back({a, b});
    auto vec_index = [&](int a, int b) {
        for (size_t i = 0; i < vecs.size(); i++)
            if (vecs[i][0] == a && vecs[i][1] == b) return (int)i;
        throw InternalError("vector lookup failed");
    };
    auto mat_perm = [&](int m00, int m01, int m10, int m11) {
        std::vector<int> img(vecs.size());
        for (size_t i = 0; i < vecs.size(); i++) {
            int a = vecs[i][0], b = vecs[i][1];
            int ra = ((a * m00 + b * m10) % 3 + 3) % 3;
            int rb = ((a * m01 + b * m11) % 3 + 3) % 3;
            img[i] = vec_index(ra, rb);
        }
        return img;
    };
    return perm_group("SL23", 8, {mat_perm(1, 1, 0, 1), mat_perm(0, -1, 1, 0)});
}

GroupPtr builtin_group(const std::string& name) {
    if (name == "S3") return symmetric_group(3);
    if (name == "S4") return symmetric_group(4);
    if (name == "D8") return dihedral_group(4);
    if (name == "D12") return dihedral_group(6);
    if (name == "A4") return alternating4();
    if (name == "SL23") return sl2_3();
    std::smatch m;
    if (std::regex_match(name, m, std::regex("^C_?([0-9]+)$"))) {
        int n = std::stoi(m[1].str());
        return cyclic_group(n);
    }
    throw SpecError("unknown group name: " + name);
}

int element_by_label(const FiniteGroup& g, const std::string& label) {
    for (int i = 0; i < g.n; i++)
        if (g.label_of(i) == label) return i;
    if (g.perm_degree > 0 && !g.perms.empty()) {
        std::vector<int> img;
        try {
            img = parse_permutation(label, g.perm_degree);
        } catch (const Error&) {
            throw DomainError("no element with label: " + label);
        }
        for (int i = 0; i < g.n; i++)
            if (g.perms[i] == img) return i;
    }
    throw DomainError("no element with label: " + label);
}

} // namespace loc
